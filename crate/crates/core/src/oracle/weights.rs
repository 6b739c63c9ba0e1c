//! Explicit weight sets `λ − ν`, `ν ∈ ℤ₊Δ`, stored by their offsets.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::rational::Q;
use crate::rootsystem::{RootSystem, Weight};
use crate::weyl::{longest_image, Limits};

/// Offset vector in simple-root coordinates.
pub type Offset = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    pub base: Weight,
    pub offsets: BTreeSet<Offset>,
    /// Height bound `D` when only the slice of height `≤ D` is stored.
    pub truncated: Option<u32>,
    /// Offsets supported on this set are stored completely even when the
    /// set as a whole is truncated.
    pub complete_within: NodeSet,
}

pub fn height(nu: &[i64]) -> i64 {
    nu.iter().sum()
}

pub fn offset_support(nu: &[i64]) -> NodeSet {
    nu.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect()
}

impl WeightSet {
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.truncated.is_none()
    }

    /// `λ − ν` in fundamental-weight coordinates.
    pub fn weight(&self, rs: &RootSystem, nu: &[i64]) -> Weight {
        let mut w = self.base.clone();
        w -= &rs.root_weight(nu);
        w
    }

    pub fn weights(&self, rs: &RootSystem) -> Vec<Weight> {
        self.offsets.iter().map(|nu| self.weight(rs, nu)).collect()
    }

    pub fn contains_offset(&self, nu: &[i64]) -> bool {
        self.offsets.contains(nu)
    }

    pub fn max_height(&self) -> i64 {
        self.offsets.iter().map(|nu| height(nu)).max().unwrap_or(0)
    }

    /// `wt_J`: the offsets supported on `J`.
    pub fn standard_parabolic_subset(&self, j: NodeSet) -> WeightSet {
        let offsets = self
            .offsets
            .iter()
            .filter(|nu| offset_support(nu).is_subset(j))
            .cloned()
            .collect();
        let exact = j.is_subset(self.complete_within);
        WeightSet {
            base: self.base.clone(),
            offsets,
            truncated: if exact { None } else { self.truncated },
            complete_within: if exact { j } else { self.complete_within.intersection(j) },
        }
    }

    /// Elements maximizing `(φ, ·)`. On a truncated set this is the argmax
    /// over the stored slice only.
    pub fn maximizer_subset(&self, rs: &RootSystem, phi: &Weight) -> WeightSet {
        // (φ, λ − ν) is maximal where (φ, ν) is minimal.
        let scored: Vec<(Q, &Offset)> = self
            .offsets
            .iter()
            .map(|nu| (rs.ip(phi, &rs.root_weight(nu)), nu))
            .collect();
        let best = scored.iter().map(|(s, _)| *s).min();
        let offsets = scored
            .into_iter()
            .filter(|(s, _)| Some(*s) == best)
            .map(|(_, nu)| nu.clone())
            .collect();
        WeightSet {
            base: self.base.clone(),
            offsets,
            truncated: self.truncated,
            complete_within: self.complete_within,
        }
    }

    /// `Σ_{μ ∈ X} μ`; undefined on truncated sets.
    pub fn rho_sum(&self, rs: &RootSystem) -> Result<Weight> {
        if !self.is_exact() {
            return Err(Error::input("the weight sum of a truncated set is undefined"));
        }
        let mut sum = Weight::zero(rs.rank());
        for nu in &self.offsets {
            sum += &self.weight(rs, nu);
        }
        Ok(sum)
    }
}

/// Weights of the simple `g_K`-module with highest weight `λ`, closed
/// under `α_k`-strings for `k ∈ K`.
pub fn simple_module_weights(rs: &RootSystem, k: NodeSet, lambda: &Weight, limits: &Limits) -> Result<WeightSet> {
    for i in k {
        let x = lambda.0[i];
        if !x.is_integer() || x < Q::zero() {
            return Err(Error::input(format!(
                "λ(h_{}) = {x} is not a nonnegative integer",
                i + 1
            )));
        }
    }
    let n = rs.rank();
    let lam: Vec<i64> = lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, x)| if k.contains(i) { *x.numer() } else { 0 })
        .collect();
    let mut seen: BTreeSet<Offset> = BTreeSet::new();
    let zero = vec![0i64; n];
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(nu) = queue.pop_front() {
        for i in k {
            let m = lam[i] - (0..n).map(|j| rs.a(i, j) * nu[j]).sum::<i64>();
            for t in 1..=m.max(0) {
                let mut next = nu.clone();
                next[i] += t;
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() >= limits.orbit_cap {
                    return Err(Error::Resource(format!(
                        "weight set exceeds the cap of {} elements",
                        limits.orbit_cap
                    )));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(WeightSet {
        base: lambda.clone(),
        offsets: seen,
        truncated: None,
        complete_within: k,
    })
}

/// `2·ht(λ − w∘^{J(V)} λ) + 4`.
pub fn default_depth(spec: &ModuleSpec, lambda: &Weight) -> Result<u32> {
    let rs = &spec.system;
    let low = longest_image(rs, spec.integrable, lambda)?;
    let h = RootSystem::height(&rs.to_root(&(lambda - &low)));
    if !h.is_integer() {
        return Err(Error::invariant("λ − w∘λ is not in the root lattice"));
    }
    Ok((2 * *h.numer() + 4) as u32)
}

/// Weights of `M(λ, J(V))` of height at most `D`: the finite top
/// `wt L_{J(V)}(λ)` shifted by `ℤ₊(Φ⁺ ∖ Φ⁺_{J(V)})`.
pub fn module_weights_truncated(spec: &ModuleSpec, lambda: &Weight, depth: u32, limits: &Limits) -> Result<WeightSet> {
    let rs = &spec.system;
    let jv = spec.integrable;
    let top = simple_module_weights(rs, jv, lambda, limits)?;
    if jv == spec.nodes() {
        return Ok(top);
    }
    let d = depth as i64;
    let top_height = top.max_height();
    let shifts: Vec<&Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter(|r| !offset_support(r).is_subset(jv))
        .collect();
    let mut seen: BTreeSet<Offset> = top.offsets.into_iter().filter(|nu| height(nu) <= d).collect();
    let mut queue: VecDeque<Offset> = seen.iter().cloned().collect();
    while let Some(nu) = queue.pop_front() {
        let h = height(&nu);
        for beta in &shifts {
            if h + height(beta) > d {
                continue;
            }
            let next: Offset = nu.iter().zip(beta.iter()).map(|(a, b)| a + b).collect();
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= limits.orbit_cap {
                return Err(Error::Resource(format!(
                    "truncated weight set exceeds the cap of {} elements",
                    limits.orbit_cap
                )));
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(WeightSet {
        base: lambda.clone(),
        offsets: seen,
        truncated: Some(depth),
        complete_within: if top_height <= d { jv } else { NodeSet::EMPTY },
    })
}

/// Vertices of `conv wt_J M(λ, J(V))`, found without truncation artefacts.
///
/// The face is `top_J − ℤ₊R_J` with `top_J` the finite top supported on
/// `J` and `R_J` the positive roots outside `Φ_{J(V)}` supported on `J`.
/// Every vertex lies in `top_J`. A point of height `≤ h` (the top height)
/// that is not a vertex is a convex combination of points `v − sβ` with
/// `s ≤ h`, so it is not a vertex of the hull of `top_J` together with
/// `v − (h+1)β`; hull vertices of height `≤ h` are therefore exactly the
/// true vertices.
pub fn polyhedron_vertices(
    spec: &ModuleSpec,
    lambda: &Weight,
    j: NodeSet,
    limits: &Limits,
) -> Result<BTreeSet<Weight>> {
    let rs = &spec.system;
    let jv = spec.integrable;
    let top = simple_module_weights(rs, jv, lambda, limits)?.standard_parabolic_subset(j);
    let h = top.max_height();
    let rays: Vec<&Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter(|r| {
            let s = offset_support(r);
            s.is_subset(j) && !s.is_subset(jv)
        })
        .collect();
    let mut gens: BTreeSet<Offset> = top.offsets.clone();
    for nu in &top.offsets {
        for beta in &rays {
            gens.insert(nu.iter().zip(beta.iter()).map(|(a, b)| a + (h + 1) * b).collect());
        }
    }
    let gens: Vec<Offset> = gens.into_iter().collect();
    let pts: Vec<Vec<Q>> = gens
        .iter()
        .map(|nu| nu.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let hull = super::hull::hull_face_lattice(&pts)?;
    Ok(hull
        .vertices
        .into_iter()
        .filter(|&i| height(&gens[i]) <= h)
        .map(|i| top.weight(rs, &gens[i]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::CoordClass;
    use crate::rational::q;

    #[test]
    fn small_simple_modules() {
        let l = Limits::default();
        let a2 = RootSystem::parse("A2").unwrap();
        let theta = Weight::from_ints(&[1, 1]);
        assert_eq!(simple_module_weights(&a2, NodeSet::EMPTY, &theta, &l).unwrap().len(), 1);
        let adj = simple_module_weights(&a2, a2.nodes(), &theta, &l).unwrap();
        assert_eq!(adj.len(), 7);
        assert!(adj.rho_sum(&a2).unwrap().is_zero());
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(simple_module_weights(&a1, a1.nodes(), &Weight::from_ints(&[3]), &l).unwrap().len(), 4);
    }

    #[test]
    fn parabolic_subsets_and_maximizers() {
        let l = Limits::default();
        let a2 = RootSystem::parse("A2").unwrap();
        let theta = Weight::from_ints(&[1, 1]);
        let adj = simple_module_weights(&a2, a2.nodes(), &theta, &l).unwrap();
        let f1 = adj.standard_parabolic_subset(NodeSet::singleton(0));
        assert_eq!(f1.weights(&a2), vec![theta.clone(), a2.simple_root(1)]);
        let m = adj.maximizer_subset(&a2, &a2.fundamental_weight(1));
        assert_eq!(m.offsets, f1.offsets);
        let top = adj.maximizer_subset(&a2, &a2.rho(a2.nodes()));
        assert_eq!(top.len(), 1);
        assert_eq!(f1.rho_sum(&a2).unwrap(), &theta + &a2.simple_root(1));
    }

    #[test]
    fn truncated_c_omega2() {
        let l = Limits::default();
        let spec = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(Some(q(5)))],
            NodeSet::singleton(0),
            true,
        );
        // 5 is a nonnegative integer, so it cannot be declared nonintegral.
        assert!(spec.is_err());
        let spec = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::DominantIntegral(Some(5))],
            NodeSet::singleton(0),
            true,
        )
        .unwrap();
        let lam = spec.numeric_lambda().unwrap();
        let ws = module_weights_truncated(&spec, &lam, 3, &l).unwrap();
        assert!(ws.contains_offset(&[0, 1]));
        assert!(ws.contains_offset(&[1, 1]));
        assert!(!ws.contains_offset(&[1, 0]));
        assert!(!ws.contains_offset(&[2, 0]));
        let deeper = module_weights_truncated(&spec, &lam, 4, &l).unwrap();
        assert!(ws.offsets.is_subset(&deeper.offsets));
    }

    #[test]
    fn verma_slice() {
        let l = Limits::default();
        let spec = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::DominantIntegral(Some(1)), CoordClass::DominantIntegral(Some(1))],
            NodeSet::EMPTY,
            true,
        )
        .unwrap();
        let lam = spec.numeric_lambda().unwrap();
        let ws = module_weights_truncated(&spec, &lam, 2, &l).unwrap();
        // Offsets of height ≤ 2 in ℤ₊²: 1 + 2 + 3.
        assert_eq!(ws.len(), 6);
    }
}
