//! Weyl group actions on weights, orbits, parabolic orders and indices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::dynkin::classify;
use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsystem::{RootSystem, Weight};

/// Default cap on enumerated orbit sizes.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;
/// Default cap on the rank for `2^|I|` subset sweeps.
pub const DEFAULT_SWEEP_CAP: usize = 20;
pub const ORBIT_CAP_ENV: &str = "HWFACE_ORBIT_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub orbit_cap: usize,
    pub sweep_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_cap: DEFAULT_ORBIT_CAP,
            sweep_cap: DEFAULT_SWEEP_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the orbit cap taken from `HWFACE_ORBIT_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut l = Limits::default();
        if let Ok(v) = std::env::var(ORBIT_CAP_ENV) {
            l.orbit_cap = v
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("{ORBIT_CAP_ENV}={v:?} is not a positive integer")))?;
        }
        Ok(l)
    }
}

/// A product of simple reflections, acting right to left:
/// `[a, b, c]` is `s_a s_b s_c` and applies `s_c` first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> NodeSet {
        self.0.iter().copied().collect()
    }

    pub fn act(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in self.0.iter().rev() {
            reflect_in_place(rs, i, &mut out);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// `self · other`.
    pub fn then(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    /// 1-based labels for display and JSON.
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

fn reflect_in_place(rs: &RootSystem, i: usize, mu: &mut Weight) {
    let c = mu.0[i];
    if c.is_zero() {
        return;
    }
    for k in 0..rs.rank() {
        let a = rs.a(k, i);
        if a != 0 {
            mu.0[k] -= c * a;
        }
    }
}

/// `s_i(μ) = μ − μ(h_i) α_i`.
pub fn reflect(rs: &RootSystem, i: usize, mu: &Weight) -> Weight {
    let mut out = mu.clone();
    reflect_in_place(rs, i, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub generators: NodeSet,
    pub elements: BTreeSet<Weight>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.contains(w)
    }
}

/// `W_J(μ)` by breadth-first closure.
pub fn orbit(rs: &RootSystem, j: NodeSet, mu: &Weight, limits: &Limits) -> Result<OrbitSet> {
    let words = orbit_with_words(rs, j, mu, limits)?;
    Ok(OrbitSet {
        generators: j,
        elements: words.into_keys().collect(),
    })
}

/// Orbit with a shortest word reaching each element from `μ`.
pub fn orbit_with_words(
    rs: &RootSystem,
    j: NodeSet,
    mu: &Weight,
    limits: &Limits,
) -> Result<BTreeMap<Weight, WeylWord>> {
    let mut seen = BTreeMap::new();
    seen.insert(mu.clone(), WeylWord::identity());
    let mut queue = VecDeque::from([(mu.clone(), WeylWord::identity())]);
    while let Some((nu, word)) = queue.pop_front() {
        for i in j {
            if nu.0[i].is_zero() {
                continue;
            }
            let next = reflect(rs, i, &nu);
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= limits.orbit_cap {
                return Err(Error::Resource(format!(
                    "orbit under W_{j} exceeds the cap of {} elements",
                    limits.orbit_cap
                )));
            }
            let w = WeylWord(std::iter::once(i).chain(word.0.iter().copied()).collect());
            seen.insert(next.clone(), w.clone());
            queue.push_back((next, w));
        }
    }
    Ok(seen)
}

/// `|W_J|` from the classical order formulas.
pub fn parabolic_order(rs: &RootSystem, j: NodeSet) -> Result<u128> {
    classify(rs, j)?.into_iter().try_fold(1u128, |acc, t| {
        t.weyl_order()
            .and_then(|o| acc.checked_mul(o))
            .ok_or_else(|| Error::Resource(format!("|W_{j}| overflows 128 bits")))
    })
}

/// `[W_J : W_K]` for `K ⊆ J`.
pub fn parabolic_index(rs: &RootSystem, j: NodeSet, k: NodeSet) -> Result<u128> {
    if !k.is_subset(j) {
        return Err(Error::input(format!("{k} is not a subset of {j}")));
    }
    let oj = parabolic_order(rs, j)?;
    let ok = parabolic_order(rs, k)?;
    if oj % ok != 0 {
        return Err(Error::invariant(format!("|W_{k}| = {ok} does not divide |W_{j}| = {oj}")));
    }
    Ok(oj / ok)
}

/// `w∘^J(λ)` for `J`-dominant `λ`, with the descent word used.
///
/// Descends along the lowest-index `j ∈ J` with `μ(h_j) > 0`; the endpoint
/// is the unique `J`-antidominant element of the orbit, so the choice of
/// index does not affect the weight returned.
pub fn longest_image_with_word(rs: &RootSystem, j: NodeSet, lambda: &Weight) -> Result<(Weight, WeylWord)> {
    if let Some(bad) = j.iter().find(|&i| lambda.0[i].is_negative()) {
        return Err(Error::input(format!(
            "weight {lambda} is not dominant for node {}",
            bad + 1
        )));
    }
    let mut mu = lambda.clone();
    let mut letters = Vec::new();
    while let Some(i) = j.iter().find(|&i| mu.0[i].is_positive()) {
        reflect_in_place(rs, i, &mut mu);
        letters.push(i);
    }
    letters.reverse();
    Ok((mu, WeylWord(letters)))
}

pub fn longest_image(rs: &RootSystem, j: NodeSet, lambda: &Weight) -> Result<Weight> {
    longest_image_with_word(rs, j, lambda).map(|(w, _)| w)
}

/// Minimal-length representatives of `W_J / W_K`, one per coset.
pub fn coset_representatives(
    rs: &RootSystem,
    j: NodeSet,
    k: NodeSet,
    limits: &Limits,
) -> Result<Vec<WeylWord>> {
    if !k.is_subset(j) {
        return Err(Error::input(format!("{k} is not a subset of {j}")));
    }
    // The stabilizer of Σ_{J∖K} ω_j in W_J is exactly W_K.
    let seed = rs.rho(j.difference(k));
    let words = orbit_with_words(rs, j, &seed, limits)?;
    let mut reps: Vec<WeylWord> = words.into_values().collect();
    reps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let expected = parabolic_index(rs, j, k)?;
    if reps.len() as u128 != expected {
        return Err(Error::invariant(format!(
            "found {} coset representatives, expected {expected}",
            reps.len()
        )));
    }
    Ok(reps)
}
