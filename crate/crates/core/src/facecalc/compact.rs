use num_traits::Zero;

use crate::error::{Error, Result};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::oracle::weights::{height, offset_support, simple_module_weights};
use crate::rootsystem::{RootVector, Weight};
use crate::weyl::{longest_image, orbit, Limits, OrbitSet};

fn numeric(spec: &ModuleSpec, what: &str) -> Result<Weight> {
    spec.numeric_lambda()
        .ok_or_else(|| Error::input(format!("{what} needs a numeric highest weight")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestWeights {
    pub longest: OrbitSet,
    pub minimum: Weight,
}

/// The longest weights `W_J(λ)` of a finite face and its minimum
/// `w∘^J(λ)`; `None` exactly when `J ⊄ J(V)`, i.e. the face is unbounded.
pub fn longest_weights(spec: &ModuleSpec, j: NodeSet, limits: &Limits) -> Result<Option<LongestWeights>> {
    let lambda = numeric(spec, "longest weights")?;
    if !j.is_subset(spec.integrable) {
        return Ok(None);
    }
    Ok(Some(LongestWeights {
        longest: orbit(&spec.system, j, &lambda, limits)?,
        minimum: longest_image(&spec.system, j, &lambda)?,
    }))
}

/// `I_λ(μ) = { i : (λ − μ, ω_i) = 0 }`, the nodes missing from `λ − μ`.
pub fn i_lambda_set(spec: &ModuleSpec, mu: &Weight) -> Result<NodeSet> {
    let lambda = numeric(spec, "I_λ(μ)")?;
    if mu.len() != spec.rank() {
        return Err(Error::input(format!("weight {mu} has the wrong length")));
    }
    let RootVector(c) = spec.system.to_root(&(&lambda - mu));
    Ok((0..spec.rank()).filter(|&i| c[i].is_zero()).collect())
}

/// A weight `μ` of the finite top with `J = J(V) ∖ I_λ(μ)`, taking the
/// deepest such `μ`. `None` when `J` is not of this form.
pub fn j3_by_witness(spec: &ModuleSpec, j: NodeSet, limits: &Limits) -> Result<Option<Weight>> {
    let lambda = numeric(spec, "witness search")?;
    if !j.is_subset(spec.integrable) {
        return Err(Error::input(format!(
            "{j} is not contained in the integrable set {}",
            spec.integrable
        )));
    }
    let top = simple_module_weights(&spec.system, spec.integrable, &lambda, limits)?;
    // Offsets are supported on J(V), so J(V) ∖ I_λ(μ) is the offset support.
    let best = top
        .offsets
        .iter()
        .filter(|nu| offset_support(nu) == j)
        .max_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    Ok(best.map(|nu| top.weight(&spec.system, nu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::{CoordClass, Preset};
    use crate::rational::frac;
    use crate::rootsystem::RootSystem;

    fn ns(labels: &[usize]) -> NodeSet {
        labels.iter().map(|l| l - 1).collect()
    }

    fn fd(ty: &str, lambda: &[i64]) -> ModuleSpec {
        ModuleSpec::preset_weight(
            Preset::FiniteDimensional,
            RootSystem::parse(ty).unwrap(),
            &Weight::from_ints(lambda),
        )
        .unwrap()
    }

    #[test]
    fn longest() {
        let l = Limits::default();
        let adj = fd("A2", &[1, 1]);
        let lw = longest_weights(&adj, ns(&[1]), &l).unwrap().unwrap();
        assert_eq!(lw.longest.len(), 2);
        assert_eq!(lw.minimum, adj.system.simple_root(1));
        let empty = longest_weights(&adj, NodeSet::EMPTY, &l).unwrap().unwrap();
        assert_eq!(empty.minimum, Weight::from_ints(&[1, 1]));
        let c = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(Some(frac(-1, 2)))],
            ns(&[1]),
            true,
        )
        .unwrap();
        assert!(longest_weights(&c, ns(&[2]), &l).unwrap().is_none());
    }

    #[test]
    fn i_lambda() {
        let adj = fd("A2", &[1, 1]);
        let theta = Weight::from_ints(&[1, 1]);
        assert_eq!(i_lambda_set(&adj, &theta).unwrap(), adj.nodes());
        assert_eq!(i_lambda_set(&adj, &-&theta).unwrap(), NodeSet::EMPTY);
        assert_eq!(i_lambda_set(&adj, &adj.system.simple_root(1)).unwrap(), ns(&[2]));
    }

    #[test]
    fn witnesses() {
        let l = Limits::default();
        let adj = fd("A2", &[1, 1]);
        let theta = Weight::from_ints(&[1, 1]);
        assert_eq!(j3_by_witness(&adj, adj.nodes(), &l).unwrap(), Some(-&theta));
        assert_eq!(j3_by_witness(&adj, NodeSet::EMPTY, &l).unwrap(), Some(theta));
        let w1 = fd("A2", &[1, 0]);
        assert_eq!(j3_by_witness(&w1, ns(&[2]), &l).unwrap(), None);
    }
}
