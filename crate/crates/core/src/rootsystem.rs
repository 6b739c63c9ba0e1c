//! Exact model of a semisimple root system.
//!
//! Weights are stored in the fundamental-weight basis (`coords[i] = μ(h_i)`),
//! root vectors in the simple-root basis. Column `j` of the Cartan matrix is
//! `α_j` written in fundamental weights.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Diagnostic, Error, Result};
use crate::linalg::{self, Matrix};
use crate::nodeset::{NodeSet, MAX_NODES};
use crate::rational::{format_q, Q};
use crate::types::{parse_type_string, DynkinType};

macro_rules! vector_type {
    ($name:ident) => {
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Vec<Q>);

        impl $name {
            pub fn zero(n: usize) -> Self {
                $name(vec![Q::zero(); n])
            }

            pub fn from_ints(xs: &[i64]) -> Self {
                $name(xs.iter().map(|&x| Q::from_integer(x)).collect())
            }

            pub fn coords(&self) -> &[Q] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, c: Q) -> Self {
                $name(self.0.iter().map(|x| x * c).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for Q {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                rhs.scale(self)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(&format_q(x))?;
                }
                f.write_str(")")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", stringify!($name), self)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(format_q))
            }
        }
    };
}

vector_type!(Weight);
vector_type!(RootVector);

/// One connected component of the diagram, with its Bourbaki labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: DynkinType,
    /// `nodes[k]` is the global node carrying standard label `k`.
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn node_set(&self) -> NodeSet {
        self.nodes.iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan: Vec<Vec<i64>>,
    half_lengths: Vec<Q>,
    components: Vec<Component>,
    positive_roots: Vec<Vec<i64>>,
    cartan_inv: Matrix,
}

impl RootSystem {
    /// Block-diagonal system from a list of simple types, in the given order.
    pub fn build(types: &[DynkinType]) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::input("a root system needs at least one component"));
        }
        let n: usize = types.iter().map(|t| t.rank).sum();
        if n > MAX_NODES {
            return Err(Error::input(format!("rank {n} exceeds the supported {MAX_NODES}")));
        }
        let mut cartan = vec![vec![0i64; n]; n];
        let mut half_lengths = Vec::with_capacity(n);
        let mut components = Vec::new();
        let mut offset = 0;
        for &ty in types {
            let block = ty.cartan();
            for (i, row) in block.iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = a;
                }
            }
            half_lengths.extend(ty.half_lengths());
            components.push(Component {
                ty,
                nodes: (offset..offset + ty.rank).collect(),
            });
            offset += ty.rank;
        }
        Self::assemble(cartan, half_lengths, components)
    }

    /// Parses a type string such as `"B3xG2"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::build(&parse_type_string(s)?)
    }

    /// Validates a raw Cartan matrix and recognises each component.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 {
            return Err(Error::input("empty Cartan matrix"));
        }
        if n > MAX_NODES {
            return Err(Error::input(format!("rank {n} exceeds the supported {MAX_NODES}")));
        }
        let mut diags = Vec::new();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                diags.push(Diagnostic::at(i, format!("row has {} entries, expected {n}", row.len())));
            }
        }
        if !diags.is_empty() {
            return Err(Error::Validation(diags));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                diags.push(Diagnostic::at(i, "diagonal entry must be 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if cartan[i][j] > 0 {
                    diags.push(Diagnostic::at(i, format!("off-diagonal entry a[{}][{}] is positive", i + 1, j + 1)));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    diags.push(Diagnostic::at(i, format!("a[{0}][{1}] and a[{1}][{0}] must vanish together", i + 1, j + 1)));
                }
            }
        }
        if !diags.is_empty() {
            return Err(Error::Validation(diags));
        }
        let mut half_lengths = vec![Q::zero(); n];
        let mut components = Vec::new();
        for comp in graph_components(&cartan, NodeSet::full(n)) {
            let nodes: Vec<usize> = comp.iter().collect();
            let sub: Vec<Vec<i64>> = nodes
                .iter()
                .map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect())
                .collect();
            let Some((ty, perm)) = DynkinType::identify(&sub) else {
                return Err(Error::Validation(vec![Diagnostic::at(
                    nodes[0],
                    format!("component {comp} is not a finite-type Cartan matrix"),
                )]));
            };
            let d = ty.half_lengths();
            let global: Vec<usize> = perm.iter().map(|&p| nodes[p]).collect();
            for (k, &g) in global.iter().enumerate() {
                half_lengths[g] = d[k];
            }
            components.push(Component { ty, nodes: global });
        }
        Self::assemble(cartan, half_lengths, components)
    }

    fn assemble(
        cartan: Vec<Vec<i64>>,
        half_lengths: Vec<Q>,
        components: Vec<Component>,
    ) -> Result<Self> {
        let cartan_inv = linalg::inverse(&linalg::from_int(&cartan))
            .ok_or_else(|| Error::invariant("Cartan matrix is singular"))?;
        let positive_roots = root_closure(&cartan);
        let expected: usize = components.iter().map(|c| c.ty.positive_root_count()).sum();
        if positive_roots.len() != expected {
            return Err(Error::invariant(format!(
                "root closure produced {} positive roots, expected {expected}",
                positive_roots.len()
            )));
        }
        Ok(RootSystem {
            cartan,
            half_lengths,
            components,
            positive_roots,
            cartan_inv,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// `d_i = (α_i, α_i)/2`.
    pub fn half_length(&self, i: usize) -> Q {
        self.half_lengths[i]
    }

    pub fn half_lengths(&self) -> &[Q] {
        &self.half_lengths
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots supported on `k`.
    pub fn positive_roots_in(&self, k: NodeSet) -> impl Iterator<Item = &Vec<i64>> {
        self.positive_roots
            .iter()
            .filter(move |r| r.iter().enumerate().all(|(i, &c)| c == 0 || k.contains(i)))
    }

    /// Type string such as `B3xG2`.
    pub fn type_string(&self) -> String {
        self.components
            .iter()
            .map(|c| c.ty.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| Q::from_integer(self.cartan[k][i])).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank());
        w.0[i] = Q::from_integer(1);
        w
    }

    /// Sum of fundamental weights over `k`.
    pub fn rho(&self, k: NodeSet) -> Weight {
        let mut w = Weight::zero(self.rank());
        for i in k {
            w.0[i] = Q::from_integer(1);
        }
        w
    }

    pub fn to_weight(&self, x: &RootVector) -> Weight {
        Weight(linalg::mat_vec(&linalg::from_int(&self.cartan), &x.0))
    }

    pub fn to_root(&self, w: &Weight) -> RootVector {
        RootVector(linalg::mat_vec(&self.cartan_inv, &w.0))
    }

    /// Weight of a root given in integer simple-root coordinates.
    pub fn root_weight(&self, coeffs: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| Q::from_integer((0..n).map(|j| self.cartan[i][j] * coeffs[j]).sum()))
                .collect(),
        )
    }

    /// `(x, y)` for weights; long roots have squared length 2.
    pub fn inner(&self, x: &Weight, y: &Weight) -> Result<Q> {
        if x.len() != self.rank() || y.len() != self.rank() {
            return Err(Error::input(format!(
                "weights of length {} and {} do not live over a rank {} system",
                x.len(),
                y.len(),
                self.rank()
            )));
        }
        Ok(self.ip(x, y))
    }

    pub(crate) fn ip(&self, x: &Weight, y: &Weight) -> Q {
        let c = linalg::mat_vec(&self.cartan_inv, &y.0);
        x.0.iter()
            .zip(&c)
            .zip(&self.half_lengths)
            .map(|((a, b), d)| a * b * d)
            .sum()
    }

    pub fn inner_roots(&self, x: &RootVector, y: &RootVector) -> Result<Q> {
        self.inner(&self.to_weight(x), &self.to_weight(y))
    }

    /// `(α_i, μ) = d_i μ(h_i)`.
    pub fn pair_simple(&self, i: usize, mu: &Weight) -> Q {
        self.half_lengths[i] * mu.0[i]
    }

    /// `π_J`: keeps coordinates on `j` and zeroes the rest.
    pub fn project(&self, j: NodeSet, w: &Weight) -> Weight {
        project(j, w)
    }

    pub fn support(&self, w: &Weight) -> NodeSet {
        support(w)
    }

    /// `{ i ∈ within : (α_i, x) = 0 for all x ∈ xs }`.
    pub fn perp_set(&self, xs: &[Weight], within: NodeSet) -> NodeSet {
        within
            .iter()
            .filter(|&i| xs.iter().all(|x| x.0[i].is_zero()))
            .collect()
    }

    /// `K^⊥ ∩ within`, i.e. nodes orthogonal to every `α_k` with `k ∈ K`.
    pub fn perp_nodes(&self, k: NodeSet, within: NodeSet) -> NodeSet {
        within
            .iter()
            .filter(|&i| k.iter().all(|j| self.cartan[i][j] == 0))
            .collect()
    }

    /// Nodes adjacent to `i` in the diagram.
    pub fn neighbours(&self, i: usize) -> NodeSet {
        (0..self.rank())
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// Highest root of a connected component, in fundamental-weight coordinates.
    pub fn highest_root(&self, component: NodeSet) -> Result<Weight> {
        if component.is_empty() {
            return Err(Error::input("highest root of an empty node set"));
        }
        if !self.components.iter().any(|c| c.node_set() == component) {
            return Err(Error::input(format!(
                "{component} is not a connected component of the diagram"
            )));
        }
        let theta = self
            .positive_roots_in(component)
            .max_by_key(|r| r.iter().sum::<i64>())
            .ok_or_else(|| Error::invariant("component without positive roots"))?;
        Ok(self.root_weight(theta))
    }

    /// Height of a root vector (sum of simple-root coordinates).
    pub fn height(x: &RootVector) -> Q {
        x.0.iter().sum()
    }

    /// Whether `w` has nonnegative integer root coordinates.
    pub fn in_positive_cone(&self, w: &Weight) -> bool {
        self.to_root(w)
            .0
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

pub fn project(j: NodeSet, w: &Weight) -> Weight {
    Weight(
        w.0.iter()
            .enumerate()
            .map(|(i, x)| if j.contains(i) { *x } else { Q::zero() })
            .collect(),
    )
}

pub fn support(w: &Weight) -> NodeSet {
    w.0.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Connected components of the subdiagram induced on `within`.
pub(crate) fn graph_components(cartan: &[Vec<i64>], within: NodeSet) -> Vec<NodeSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = NodeSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(u) = frontier.pop() {
            for v in left.difference(comp) {
                if cartan[u][v] != 0 {
                    comp.insert(v);
                    frontier.push(v);
                }
            }
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// Positive roots by `α`-string closure from the simple roots, sorted by
/// height then lexicographically.
fn root_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                // p = length of the α_i-string below β.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        out.extend(level);
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn positive_root_counts() {
        for (s, count) in [
            ("A1", 1),
            ("A2", 3),
            ("G2", 6),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
        ] {
            let rs = RootSystem::parse(s).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{s}");
        }
    }

    #[test]
    fn a2_inner_products() {
        let rs = RootSystem::parse("A2").unwrap();
        let a1 = rs.simple_root(0);
        let a2 = rs.simple_root(1);
        assert_eq!(rs.inner(&a1, &a1).unwrap(), q(2));
        assert_eq!(rs.inner(&a1, &a2).unwrap(), q(-1));
        assert_eq!(rs.inner(&rs.fundamental_weight(0), &a2).unwrap(), q(0));
        assert!(rs.inner(&a1, &Weight::zero(3)).is_err());
    }

    #[test]
    fn g2_length_ratio() {
        let rs = RootSystem::parse("G2").unwrap();
        let s = rs.simple_root(0);
        let l = rs.simple_root(1);
        let ratio = rs.inner(&s, &s).unwrap() / rs.inner(&l, &l).unwrap();
        assert_eq!(ratio, frac(1, 3));
        let theta = rs.highest_root(rs.nodes()).unwrap();
        assert_eq!(rs.inner(&theta, &theta).unwrap(), q(2));
        assert_eq!(rs.to_root(&theta), RootVector::from_ints(&[3, 2]));
    }

    #[test]
    fn highest_roots() {
        let a2 = RootSystem::parse("A2").unwrap();
        assert_eq!(a2.highest_root(a2.nodes()).unwrap(), Weight::from_ints(&[1, 1]));
        let a3 = RootSystem::parse("A3").unwrap();
        let theta = a3.highest_root(a3.nodes()).unwrap();
        assert_eq!(a3.perp_set(&[theta], a3.nodes()), NodeSet::singleton(1));
        let two = RootSystem::parse("A1xA1").unwrap();
        assert!(two.highest_root(two.nodes()).is_err());
        assert_eq!(two.cartan(), &[vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn projection_and_support() {
        let w = Weight(vec![q(3), frac(-1, 2)]);
        assert_eq!(project(NodeSet::singleton(0), &w), Weight(vec![q(3), q(0)]));
        assert!(project(NodeSet::EMPTY, &w).is_zero());
        assert_eq!(support(&Weight(vec![q(0), q(5)])), NodeSet::singleton(1));
    }

    #[test]
    fn raw_cartan_relabelled_c3() {
        // C3 with nodes listed in reverse order.
        let rs = RootSystem::from_cartan(vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(rs.type_string(), "C3");
        assert_eq!(rs.half_length(0), q(1));
        assert_eq!(rs.half_length(2), frac(1, 2));
        let bad = RootSystem::from_cartan(vec![vec![2, -3], vec![-3, 2]]);
        assert!(matches!(bad, Err(Error::Validation(_))));
        let asym = RootSystem::from_cartan(vec![vec![2, -1], vec![0, 2]]);
        assert!(matches!(asym, Err(Error::Validation(_))));
    }
}
