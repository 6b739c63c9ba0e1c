//! Pairwise comparison of the face formulas with enumerated weight sets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::facecalc::{face_includes, faces_equal};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::rootsystem::Weight;
use crate::weyl::Limits;

use super::weights::{default_depth, height, module_weights_truncated, Offset, WeightSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agree,
    Disagree,
    /// The formula separates the faces but no witness exists up to the depth.
    Unresolved,
}

/// What the enumeration can say about a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evidence {
    Holds,
    Fails,
    /// No counterexample among weights of height at most the depth.
    ConsistentUpToDepth,
}

fn judge(formula: bool, ev: Evidence) -> Verdict {
    match (formula, ev) {
        (true, Evidence::Holds) | (false, Evidence::Fails) | (true, Evidence::ConsistentUpToDepth) => Verdict::Agree,
        (true, Evidence::Fails) | (false, Evidence::Holds) => Verdict::Disagree,
        (false, Evidence::ConsistentUpToDepth) => Verdict::Unresolved,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairVerdict {
    pub j: NodeSet,
    pub j_prime: NodeSet,
    pub formula_equal: bool,
    pub oracle_equal: Evidence,
    pub equal: Verdict,
    pub formula_includes: bool,
    pub oracle_includes: Evidence,
    pub includes: Verdict,
    /// An offset `ν` with `λ − ν` in exactly one of the two sets.
    pub witness: Option<Offset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CrossReport {
    pub lambda: Weight,
    /// True when unknown coordinate values were replaced by representatives.
    pub representative: bool,
    pub depth: Option<u32>,
    pub weights_enumerated: usize,
    pub agree: usize,
    pub disagree: usize,
    pub unresolved: usize,
    pub pairs: Vec<PairVerdict>,
}

impl CrossReport {
    pub fn all_agree(&self) -> bool {
        self.disagree == 0 && self.unresolved == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossOptions {
    /// Height bound for infinite weight sets; `None` picks the default.
    pub depth: Option<u32>,
    pub max_rank: usize,
}

impl Default for CrossOptions {
    fn default() -> Self {
        CrossOptions {
            depth: None,
            max_rank: 4,
        }
    }
}

fn first_missing(a: &WeightSet, b: &WeightSet) -> Option<Offset> {
    a.offsets
        .iter()
        .filter(|nu| !b.offsets.contains(*nu))
        .min_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
        .cloned()
}

/// Every ordered pair `(J, J')` of node subsets: `faces_equal` against set
/// equality and `face_includes` against set inclusion of `wt_J`, `wt_{J'}`.
pub fn cross_validate(spec: &ModuleSpec, options: CrossOptions, limits: &Limits) -> Result<CrossReport> {
    spec.require_hull("cross-validation")?;
    if spec.rank() > options.max_rank {
        return Err(Error::Resource(format!(
            "rank {} exceeds the cross-validation bound {}",
            spec.rank(),
            options.max_rank
        )));
    }
    let representative = !spec.is_numeric();
    let lambda = spec.representative_lambda();
    let depth = match options.depth {
        Some(d) => d,
        None => default_depth(spec, &lambda)?,
    };
    let ws = module_weights_truncated(spec, &lambda, depth, limits)?;
    let subsets: Vec<NodeSet> = spec.nodes().subsets().collect();
    let faces: Vec<WeightSet> = subsets.iter().map(|&j| ws.standard_parabolic_subset(j)).collect();

    let mut pairs = Vec::with_capacity(subsets.len() * subsets.len());
    let (mut agree, mut disagree, mut unresolved) = (0, 0, 0);
    for (a, &j) in subsets.iter().enumerate() {
        for (b, &jp) in subsets.iter().enumerate() {
            let (x, y) = (&faces[a], &faces[b]);
            let x_not_y = first_missing(x, y);
            let y_not_x = first_missing(y, x);
            let oracle_includes = if x_not_y.is_some() {
                Evidence::Fails
            } else if x.is_exact() {
                Evidence::Holds
            } else {
                Evidence::ConsistentUpToDepth
            };
            let oracle_equal = if x_not_y.is_some() || y_not_x.is_some() {
                Evidence::Fails
            } else if x.is_exact() && y.is_exact() {
                Evidence::Holds
            } else {
                Evidence::ConsistentUpToDepth
            };
            let formula_equal = faces_equal(spec, j, jp)?;
            let formula_includes = face_includes(spec, j, jp)?;
            let pv = PairVerdict {
                j,
                j_prime: jp,
                formula_equal,
                oracle_equal,
                equal: judge(formula_equal, oracle_equal),
                formula_includes,
                oracle_includes,
                includes: judge(formula_includes, oracle_includes),
                witness: x_not_y.or(y_not_x),
            };
            for v in [pv.equal, pv.includes] {
                match v {
                    Verdict::Agree => agree += 1,
                    Verdict::Disagree => disagree += 1,
                    Verdict::Unresolved => unresolved += 1,
                }
            }
            pairs.push(pv);
        }
    }
    Ok(CrossReport {
        lambda,
        representative,
        depth: if ws.is_exact() { None } else { Some(depth) },
        weights_enumerated: ws.len(),
        agree,
        disagree,
        unresolved,
        pairs,
    })
}

/// Distinct faces seen by the enumeration, as sets of offsets.
pub fn distinct_faces(spec: &ModuleSpec, ws: &WeightSet) -> BTreeSet<BTreeSet<Offset>> {
    spec.nodes()
        .subsets()
        .map(|j| ws.standard_parabolic_subset(j).offsets)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::{CoordClass, Preset};
    use crate::rootsystem::RootSystem;

    #[test]
    fn worked_example_agrees() {
        let spec = ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(None)],
            NodeSet::singleton(0),
            true,
        )
        .unwrap();
        let r = cross_validate(&spec, CrossOptions { depth: Some(8), max_rank: 4 }, &Limits::default()).unwrap();
        assert_eq!(r.pairs.len(), 16);
        assert!(r.all_agree(), "{r:?}");
        assert!(r.representative);
    }

    #[test]
    fn adjoint_exact() {
        let spec = ModuleSpec::preset_weight(
            Preset::FiniteDimensional,
            RootSystem::parse("A2").unwrap(),
            &Weight::from_ints(&[1, 1]),
        )
        .unwrap();
        let r = cross_validate(&spec, CrossOptions::default(), &Limits::default()).unwrap();
        assert_eq!(r.depth, None);
        assert!(r.all_agree());
    }

    #[test]
    fn refuses_without_hull_flag() {
        let spec = ModuleSpec::new(
            RootSystem::parse("A1").unwrap(),
            vec![CoordClass::DominantIntegral(Some(1))],
            NodeSet::EMPTY,
            false,
        )
        .unwrap();
        assert!(matches!(
            cross_validate(&spec, CrossOptions::default(), &Limits::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
