use serde::Serialize;

use crate::error::{Error, Result};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::rational::Q;
use crate::rootsystem::{RootSystem, Weight};
use crate::weyl::{coset_representatives, orbit, Limits, WeylWord};

use super::{extremes, j_max, j_min};

/// `(I ∖ {i})_max`, with the closed form checked against the general one.
pub fn coordinate_face_max(spec: &ModuleSpec, i: usize) -> Result<NodeSet> {
    check_node(spec, i)?;
    let all = spec.nodes();
    let jv = spec.integrable;
    let admitted = j_min(spec, all)? | all.difference(jv);
    let closed = if admitted.contains(i) { jv.without(i) } else { jv };
    let general = j_max(spec, all.without(i))?;
    if closed != general {
        return Err(Error::invariant(format!(
            "(I∖{{{}}})_max: closed form {closed} differs from {general}",
            i + 1
        )));
    }
    Ok(closed)
}

/// Whether `wt_{I∖{i}}` spans a facet.
pub fn is_facet(spec: &ModuleSpec, i: usize) -> Result<bool> {
    check_node(spec, i)?;
    let all = spec.nodes();
    let imin = j_min(spec, all)?;
    if !(imin | all.difference(spec.integrable)).contains(i) {
        return Ok(false);
    }
    Ok(j_min(spec, all.without(i))? == imin.without(i))
}

fn check_node(spec: &ModuleSpec, i: usize) -> Result<()> {
    if i >= spec.rank() {
        return Err(Error::input(format!("node {} is out of range 1..{}", i + 1, spec.rank())));
    }
    Ok(())
}

/// `w·{ μ : (λ − μ, ω_i) ≥ 0 } = { μ : (λ, ω_i) − (μ, w ω_i) ≥ 0 }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HalfSpace {
    #[serde(serialize_with = "crate::nodeset::serialize_label")]
    pub node: usize,
    pub word: WeylWord,
    pub normal: Weight,
}

impl HalfSpace {
    /// `(λ, ω_i) − (μ, normal)`, nonnegative exactly on the half-space.
    pub fn slack(&self, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Q {
        rs.ip(lambda, &rs.fundamental_weight(self.node)) - rs.ip(mu, &self.normal)
    }

    pub fn contains(&self, rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
        self.slack(rs, lambda, mu) >= Q::from_integer(0)
    }
}

/// Half-spaces cutting out the hull of `wt V`. The normals `wω_i` do not
/// depend on `λ`, so symbolic specs are handled too.
pub fn halfspace_representation(spec: &ModuleSpec, minimal: bool, limits: &Limits) -> Result<Vec<HalfSpace>> {
    spec.require_hull("the half-space representation")?;
    let rs = &spec.system;
    let mut out = Vec::new();
    for i in spec.nodes() {
        if minimal && !is_facet(spec, i)? {
            continue;
        }
        let k = coordinate_face_max(spec, i)?;
        let omega = rs.fundamental_weight(i);
        for word in coset_representatives(rs, spec.integrable, k, limits)? {
            let normal = word.act(rs, &omega);
            out.push(HalfSpace { node: i, word, normal });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BarycenterData {
    pub barycenter: Option<Weight>,
    /// `J_λ ∖ (J ∩ J(V))_max`: the barycenter lies in the positive cone of
    /// these fundamental weights plus arbitrary multiples of `Ω_{I∖J_λ}`.
    pub cone_support: NodeSet,
}

/// Barycenter of the finite part of the face of `J`.
pub fn barycenter_data(spec: &ModuleSpec, j: NodeSet, limits: &Limits) -> Result<BarycenterData> {
    let k = j.intersection(spec.integrable);
    let cone_support = spec.j_lambda().difference(extremes(spec, k)?.jmax);
    let barycenter = match spec.numeric_lambda() {
        Some(lambda) => {
            let orb = orbit(&spec.system, k, &lambda, limits)?;
            let mut sum = Weight::zero(spec.rank());
            for w in &orb.elements {
                sum += w;
            }
            Some(sum.scale(Q::new(1, orb.len() as i64)))
        }
        None => None,
    };
    Ok(BarycenterData {
        barycenter,
        cone_support,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::{CoordClass, Preset};
    use crate::rational::frac;

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
    fn coordinate_maxima() {
        let adj = fd("A2", &[1, 1]);
        assert_eq!(coordinate_face_max(&adj, 0).unwrap(), ns(&[2]));
        let c = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(None)],
            ns(&[1]),
            true,
        )
        .unwrap();
        assert_eq!(coordinate_face_max(&c, 0).unwrap(), NodeSet::EMPTY);
        assert_eq!(coordinate_face_max(&c, 1).unwrap(), ns(&[1]));
    }

    #[test]
    fn facets() {
        let adj = fd("A2", &[1, 1]);
        assert!(is_facet(&adj, 0).unwrap());
        let d4 = fd("D4", &[0, 1, 0, 0]);
        assert!(!is_facet(&d4, 1).unwrap());
        assert!(is_facet(&fd("A1", &[1]), 0).unwrap());
    }

    #[test]
    fn halfspace_counts() {
        let l = Limits::default();
        assert_eq!(halfspace_representation(&fd("A2", &[1, 1]), true, &l).unwrap().len(), 6);
        assert_eq!(halfspace_representation(&fd("A2", &[1, 0]), true, &l).unwrap().len(), 3);
        assert_eq!(halfspace_representation(&fd("A1", &[1]), true, &l).unwrap().len(), 2);
    }

    #[test]
    fn barycenters() {
        let l = Limits::default();
        let adj = fd("A2", &[1, 1]);
        assert!(barycenter_data(&adj, adj.nodes(), &l).unwrap().barycenter.unwrap().is_zero());
        let w1 = fd("A2", &[1, 0]);
        let b = barycenter_data(&w1, ns(&[1]), &l).unwrap().barycenter.unwrap();
        // ω₁ − α₁/2 = (0, 1/2)
        assert_eq!(b, Weight(vec![frac(0, 1), frac(1, 2)]));
        let e = barycenter_data(&w1, NodeSet::EMPTY, &l).unwrap();
        assert_eq!(e.barycenter.unwrap(), Weight::from_ints(&[1, 0]));
    }

    #[test]
    fn translated_halfspaces_contain_the_orbit() {
        let spec = fd("A1", &[1]);
        let rs = &spec.system;
        let lambda = Weight::from_ints(&[1]);
        let hs = halfspace_representation(&spec, false, &Limits::default()).unwrap();
        assert_eq!(hs.len(), 2);
        for h in &hs {
            assert!(h.contains(rs, &lambda, &lambda));
            assert!(h.contains(rs, &lambda, &Weight::from_ints(&[-1])));
        }
        for far in [3, -3] {
            assert!(hs.iter().any(|h| !h.contains(rs, &lambda, &Weight::from_ints(&[far]))));
        }
    }
}
