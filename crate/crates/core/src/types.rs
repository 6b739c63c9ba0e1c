//! Classical Dynkin types: Bourbaki data and recognition of Cartan matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{frac, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple (connected) Dynkin type such as `B3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    /// Checks the classical rank ranges. `D3` is rewritten to `A3`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::input(format!(
                "no Dynkin type {}{rank}",
                family.letter()
            )));
        }
        if family == Family::D && rank == 3 {
            return Ok(DynkinType {
                family: Family::A,
                rank: 3,
            });
        }
        Ok(DynkinType { family, rank })
    }

    /// Tag used when a component is recognised up to isomorphism: `C2` is
    /// reported as `B2`.
    pub fn canonical(self) -> Self {
        match (self.family, self.rank) {
            (Family::C, 2) => DynkinType {
                family: Family::B,
                rank: 2,
            },
            _ => self,
        }
    }

    /// Half squared lengths `d_i` of the simple roots, long roots having `d = 1`.
    pub fn half_lengths(self) -> Vec<Q> {
        let n = self.rank;
        let mut d = vec![q(1); n];
        match self.family {
            Family::B => d[n - 1] = frac(1, 2),
            Family::C => {
                for x in d.iter_mut().take(n - 1) {
                    *x = frac(1, 2);
                }
            }
            Family::F => {
                d[2] = frac(1, 2);
                d[3] = frac(1, 2);
            }
            Family::G => d[0] = frac(1, 3),
            _ => {}
        }
        d
    }

    /// Bourbaki edges, 0-based.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Cartan matrix `a_ij = 2(α_i, α_j)/(α_i, α_i)` in Bourbaki numbering.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let d = self.half_lengths();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            // Bonded simple roots satisfy (α_i, α_j) = -max(d_i, d_j).
            let ip = -std::cmp::max(d[i], d[j]);
            let aij = ip / d[i];
            let aji = ip / d[j];
            debug_assert!(aij.is_integer() && aji.is_integer());
            a[i][j] = *aij.numer();
            a[j][i] = *aji.numer();
        }
        a
    }

    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> Option<u128> {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).try_fold(1u128, |acc, x| acc.checked_mul(x));
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => fact(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            Family::D => fact(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            Family::E => Some(match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => Some(1152),
            Family::G => Some(12),
        }
    }

    /// Recognises a connected Cartan matrix. On success returns the type and
    /// the map `perm` with `cartan[perm[i]][perm[j]] == standard[i][j]`.
    pub fn identify(cartan: &[Vec<i64>]) -> Option<(DynkinType, Vec<usize>)> {
        let n = cartan.len();
        if n == 0 {
            return None;
        }
        for family in Family::ALL {
            let Ok(t) = DynkinType::new(family, n) else {
                continue;
            };
            if t.family != family {
                continue;
            }
            if let Some(perm) = find_isomorphism(&t.cartan(), cartan) {
                return Some((t, perm));
            }
        }
        None
    }
}

/// Backtracking search for `perm` with `target[perm[i]][perm[j]] == pattern[i][j]`.
/// Pattern nodes are visited in BFS order so each new node is pinned next
/// to an image already chosen; for tree-shaped diagrams this is near linear.
fn find_isomorphism(pattern: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<usize>> {
    let n = pattern.len();
    if target.len() != n {
        return None;
    }
    let mut order = vec![0usize];
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        let u = order[k];
        for v in 0..n {
            if !seen[v] && pattern[u][v] != 0 {
                seen[v] = true;
                parent[v] = Some(u);
                order.push(v);
            }
        }
        k += 1;
    }
    if order.len() != n {
        return None;
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        parent: &[Option<usize>],
        pattern: &[Vec<i64>],
        target: &[Vec<i64>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        let n = pattern.len();
        for x in 0..n {
            if used[x] {
                continue;
            }
            if let Some(p) = parent[u] {
                if target[perm[p]][x] == 0 {
                    continue;
                }
            }
            let consistent = order[..k]
                .iter()
                .all(|&w| target[perm[w]][x] == pattern[w][u] && target[x][perm[w]] == pattern[u][w])
                && target[x][x] == pattern[u][u];
            if !consistent {
                continue;
            }
            perm[u] = x;
            used[x] = true;
            if go(k + 1, order, parent, pattern, target, perm, used) {
                return true;
            }
            used[x] = false;
        }
        perm[u] = usize::MAX;
        false
    }
    go(0, &order, &parent, pattern, target, &mut perm, &mut used).then_some(perm)
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::input("empty Dynkin type"))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::input(format!("unknown Dynkin family in {s:?}"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::input(format!("bad rank in Dynkin type {s:?}")))?;
        DynkinType::new(family, rank)
    }
}

/// Parses `"B3xG2"`, `"A1xA1"`, `"A2"`. Components may be separated by
/// `x`, `×` or `+`.
pub fn parse_type_string(s: &str) -> Result<Vec<DynkinType>> {
    let parts: Vec<&str> = s
        .split(['x', 'X', '×', '+'])
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Error::input("empty algebra type string"));
    }
    parts.into_iter().map(str::parse).collect()
}
