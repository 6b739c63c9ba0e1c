//! Brute-force Weyl group enumeration for stabilizer checks.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::rootsystem::{RootSystem, Weight};
use crate::weyl::{orbit_with_words, Limits, WeylWord};

use super::weights::simple_module_weights;

/// Elements of `W_K`, each keyed by its image of the regular seed
/// `Σ_{k∈K} ω_k`, which determines the element.
pub fn enumerate_group(rs: &RootSystem, k: NodeSet, limits: &Limits) -> Result<BTreeMap<Weight, WeylWord>> {
    orbit_with_words(rs, k, &rs.rho(k), limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerData {
    /// Elements of `W_{J(V)}` mapping `wt_J` onto itself, keyed by their
    /// image of the regular seed of `J(V)`.
    pub setwise: BTreeMap<Weight, WeylWord>,
    /// Elements fixing `wt_J` pointwise.
    pub pointwise: BTreeMap<Weight, WeylWord>,
}

/// Stabilizer of the finite face `wt_J`, `J ⊆ J(V)`, by enumeration.
pub fn brute_stabilizer(spec: &ModuleSpec, j: NodeSet, limits: &Limits) -> Result<StabilizerData> {
    let rs = &spec.system;
    let lambda = spec
        .numeric_lambda()
        .ok_or_else(|| Error::input("brute-force stabilizers need a numeric highest weight"))?;
    if !j.is_subset(spec.integrable) {
        return Err(Error::input(format!("{j} is not contained in J(V) = {}", spec.integrable)));
    }
    let top = simple_module_weights(rs, spec.integrable, &lambda, limits)?;
    let face: BTreeSet<Weight> = top.standard_parabolic_subset(j).weights(rs).into_iter().collect();
    let mut setwise = BTreeMap::new();
    let mut pointwise = BTreeMap::new();
    for (key, w) in enumerate_group(rs, spec.integrable, limits)? {
        let images: Vec<Weight> = face.iter().map(|mu| w.act(rs, mu)).collect();
        if images.iter().zip(&face).all(|(a, b)| a == b) {
            pointwise.insert(key.clone(), w.clone());
        }
        if images.iter().all(|x| face.contains(x)) {
            setwise.insert(key, w);
        }
    }
    Ok(StabilizerData { setwise, pointwise })
}

/// Keys (images of the `J(V)` seed) of the elements of `W_K`, `K ⊆ J(V)`.
pub fn subgroup_keys(spec: &ModuleSpec, k: NodeSet, limits: &Limits) -> Result<BTreeSet<Weight>> {
    let rs = &spec.system;
    let seed = rs.rho(spec.integrable);
    Ok(enumerate_group(rs, k, limits)?
        .into_values()
        .map(|w| w.act(rs, &seed))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::Preset;

    fn adj() -> ModuleSpec {
        ModuleSpec::preset_weight(
            Preset::FiniteDimensional,
            RootSystem::parse("A2").unwrap(),
            &Weight::from_ints(&[1, 1]),
        )
        .unwrap()
    }

    #[test]
    fn adjoint_stabilizers() {
        let l = Limits::default();
        let s = adj();
        assert_eq!(brute_stabilizer(&s, NodeSet::singleton(0), &l).unwrap().setwise.len(), 2);
        assert_eq!(brute_stabilizer(&s, s.nodes(), &l).unwrap().setwise.len(), 6);
        let e = brute_stabilizer(&s, NodeSet::EMPTY, &l).unwrap();
        assert_eq!(e.setwise.len(), 1);
        assert_eq!(enumerate_group(&s.system, s.nodes(), &l).unwrap().len(), 6);
    }
}
