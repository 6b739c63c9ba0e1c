//! Highest weight module descriptions: the diagram, the highest weight by
//! coordinate class (or exactly), and the integrability set `J(V)`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Diagnostic, Error, Result};
use crate::nodeset::NodeSet;
use crate::rational::{format_q, frac, is_nonneg_integer, Q};
use crate::rootsystem::{RootSystem, Weight};

/// What the calculus needs to know about one coordinate `λ(h_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordClass {
    Zero,
    /// A positive integer; the value is optional. A known value of `0`
    /// must be written as [`CoordClass::Zero`].
    DominantIntegral(Option<u64>),
    /// Nonzero and outside `ℤ₊`.
    NonIntegralNonzero(Option<Q>),
}

impl CoordClass {
    /// Class of an exact coordinate.
    pub fn of(x: Q) -> Self {
        if x.is_zero() {
            CoordClass::Zero
        } else if is_nonneg_integer(&x) {
            CoordClass::DominantIntegral(Some(*x.numer() as u64))
        } else {
            CoordClass::NonIntegralNonzero(Some(x))
        }
    }

    pub fn value(&self) -> Option<Q> {
        match *self {
            CoordClass::Zero => Some(Q::zero()),
            CoordClass::DominantIntegral(v) => v.map(|v| Q::from_integer(v as i64)),
            CoordClass::NonIntegralNonzero(v) => v,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CoordClass::Zero)
    }

    /// `λ(h_i) ∈ ℤ₊`.
    pub fn is_integral(&self) -> bool {
        !matches!(self, CoordClass::NonIntegralNonzero(_))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CoordClass::Zero => "zero",
            CoordClass::DominantIntegral(_) => "posint",
            CoordClass::NonIntegralNonzero(_) => "nonintegral",
        }
    }

    fn check(&self) -> Option<String> {
        match *self {
            CoordClass::DominantIntegral(Some(0)) => {
                Some("class posint needs a positive value; use class zero".into())
            }
            CoordClass::DominantIntegral(Some(v)) if v > i64::MAX as u64 => {
                Some(format!("value {v} is too large"))
            }
            CoordClass::NonIntegralNonzero(Some(v)) if v.is_zero() => {
                Some("class nonintegral cannot have value 0".into())
            }
            CoordClass::NonIntegralNonzero(Some(v)) if is_nonneg_integer(&v) => Some(format!(
                "value {} is a nonnegative integer, so the class must be posint",
                format_q(&v)
            )),
            _ => None,
        }
    }
}

impl fmt::Display for CoordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => f.write_str(&format_q(&v)),
            None => f.write_str(self.tag()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `M(λ)`: nothing integrable.
    Verma,
    /// `L(λ)`: integrable exactly on `J_λ`.
    Simple,
    /// `M(λ, J')` for `J' ⊆ J_λ`.
    ParabolicVerma(NodeSet),
    /// `L(λ)` for dominant integral `λ`.
    FiniteDimensional,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    pub system: RootSystem,
    pub lambda: Vec<CoordClass>,
    /// `J(V)`.
    pub integrable: NodeSet,
    /// The user's assertion that the hull of `wt V` equals that of the
    /// parabolic Verma module with the same integrability.
    pub polyhedral_hull: bool,
}

impl ModuleSpec {
    /// Builds and validates.
    pub fn new(
        system: RootSystem,
        lambda: Vec<CoordClass>,
        integrable: NodeSet,
        polyhedral_hull: bool,
    ) -> Result<Self> {
        let spec = ModuleSpec {
            system,
            lambda,
            integrable,
            polyhedral_hull,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Exact highest weight.
    pub fn from_weight(
        system: RootSystem,
        lambda: &Weight,
        integrable: NodeSet,
        polyhedral_hull: bool,
    ) -> Result<Self> {
        let classes = lambda.0.iter().map(|&x| CoordClass::of(x)).collect();
        Self::new(system, classes, integrable, polyhedral_hull)
    }

    pub fn preset(kind: Preset, system: RootSystem, lambda: Vec<CoordClass>) -> Result<Self> {
        let n = system.rank();
        if lambda.len() != n {
            return Err(Error::input(format!(
                "highest weight has {} coordinates, the diagram has {n} nodes",
                lambda.len()
            )));
        }
        let j_lambda = j_lambda_of(&lambda);
        let integrable = match kind {
            Preset::Verma => NodeSet::EMPTY,
            Preset::Simple => j_lambda,
            Preset::ParabolicVerma(j) => {
                if !j.is_subset(j_lambda) {
                    return Err(Error::input(format!(
                        "parabolic Verma set {j} is not contained in J_λ = {j_lambda}"
                    )));
                }
                j
            }
            Preset::FiniteDimensional => {
                if j_lambda != NodeSet::full(n) {
                    return Err(Error::input(format!(
                        "finite-dimensional preset needs dominant integral λ; nodes {} are not",
                        NodeSet::full(n).difference(j_lambda)
                    )));
                }
                j_lambda
            }
        };
        Self::new(system, lambda, integrable, true)
    }

    pub fn preset_weight(kind: Preset, system: RootSystem, lambda: &Weight) -> Result<Self> {
        let classes = lambda.0.iter().map(|&x| CoordClass::of(x)).collect();
        Self::preset(kind, system, classes)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.system.rank();
        let mut diags = Vec::new();
        if self.lambda.len() != n {
            diags.push(Diagnostic::global(format!(
                "highest weight has {} coordinates, the diagram has {n} nodes",
                self.lambda.len()
            )));
            return Err(Error::Validation(diags));
        }
        for (i, c) in self.lambda.iter().enumerate() {
            if let Some(msg) = c.check() {
                diags.push(Diagnostic::at(i, msg));
            }
        }
        if !self.integrable.is_subset(NodeSet::full(n)) {
            diags.push(Diagnostic::global(format!(
                "integrable set {} has nodes outside 1..{n}",
                self.integrable
            )));
        }
        let jl = self.j_lambda();
        for i in self.integrable.difference(jl).iter().filter(|&i| i < n) {
            diags.push(Diagnostic::at(
                i,
                format!("node is integrable but λ(h_i) = {} is not in ℤ₊", self.lambda[i]),
            ));
        }
        if diags.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(diags))
        }
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn nodes(&self) -> NodeSet {
        self.system.nodes()
    }

    /// `J_λ = { i : λ(h_i) ∈ ℤ₊ }`.
    pub fn j_lambda(&self) -> NodeSet {
        j_lambda_of(&self.lambda)
    }

    /// `supp(λ)`.
    pub fn support(&self) -> NodeSet {
        (0..self.rank()).filter(|&i| !self.lambda[i].is_zero()).collect()
    }

    /// `{λ}^⊥ = I ∖ supp(λ)`.
    pub fn lambda_perp(&self) -> NodeSet {
        self.nodes().difference(self.support())
    }

    /// Nodes with `(λ, α_i) > 0`; nonintegral coordinates count as attached.
    pub fn positive_nodes(&self) -> NodeSet {
        (0..self.rank())
            .filter(|&i| match self.lambda[i] {
                CoordClass::Zero => false,
                CoordClass::DominantIntegral(_) => true,
                CoordClass::NonIntegralNonzero(v) => v.map_or(true, |v| v.is_positive()),
            })
            .collect()
    }

    /// Exact `λ` when every coordinate has a value.
    pub fn numeric_lambda(&self) -> Option<Weight> {
        self.lambda.iter().map(CoordClass::value).collect::<Option<Vec<_>>>().map(Weight)
    }

    /// Exact `λ`, substituting `1` for unknown positive integers and `-1/2`
    /// for unknown nonintegral values. Every downstream formula depends only
    /// on the classes, so this is a faithful stand-in for oracle runs.
    pub fn representative_lambda(&self) -> Weight {
        Weight(
            self.lambda
                .iter()
                .map(|c| match *c {
                    CoordClass::DominantIntegral(None) => Q::from_integer(1),
                    CoordClass::NonIntegralNonzero(None) => frac(-1, 2),
                    _ => c.value().unwrap_or_else(Q::zero),
                })
                .collect(),
        )
    }

    pub fn is_numeric(&self) -> bool {
        self.numeric_lambda().is_some()
    }

    /// `J(V) = I` and `λ ∈ P⁺`.
    pub fn is_finite_dimensional(&self) -> bool {
        self.integrable == self.nodes() && self.j_lambda() == self.nodes()
    }

    /// Finite-dimensional over a simple diagram with `λ = θ`.
    pub fn is_adjoint(&self) -> bool {
        if !self.system.is_simple() || !self.is_finite_dimensional() {
            return false;
        }
        let Ok(theta) = self.system.highest_root(self.nodes()) else {
            return false;
        };
        self.numeric_lambda().as_ref() == Some(&theta)
    }

    pub fn require_hull(&self, what: &str) -> Result<()> {
        if self.polyhedral_hull {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} needs the polyhedral-hull assumption, which this spec does not assert"
            )))
        }
    }
}

fn j_lambda_of(lambda: &[CoordClass]) -> NodeSet {
    lambda
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_integral())
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn a2() -> RootSystem {
        RootSystem::parse("A2").unwrap()
    }

    #[test]
    fn symbolic_c_omega2() {
        let spec = ModuleSpec::new(
            a2(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(None)],
            NodeSet::singleton(0),
            true,
        )
        .unwrap();
        assert_eq!(spec.j_lambda(), NodeSet::singleton(0));
        assert_eq!(spec.support(), NodeSet::singleton(1));
        assert!(!spec.is_numeric());
        assert_eq!(spec.representative_lambda(), Weight(vec![q(0), frac(-1, 2)]));
    }

    #[test]
    fn integrable_must_lie_in_j_lambda() {
        let err = ModuleSpec::from_weight(a2(), &Weight(vec![frac(-1, 2), q(0)]), NodeSet::singleton(0), true)
            .unwrap_err();
        match err {
            Error::Validation(d) => assert_eq!(d[0].node, Some(0)),
            e => panic!("unexpected {e:?}"),
        }
        let ok = ModuleSpec::from_weight(a2(), &Weight::from_ints(&[1, 1]), NodeSet::full(2), true);
        assert!(ok.is_ok());
    }

    #[test]
    fn class_coherence() {
        let bad = ModuleSpec::new(a2(), vec![CoordClass::DominantIntegral(Some(0)), CoordClass::Zero], NodeSet::EMPTY, true);
        assert!(bad.is_err());
        let bad = ModuleSpec::new(
            a2(),
            vec![CoordClass::NonIntegralNonzero(Some(q(3))), CoordClass::Zero],
            NodeSet::EMPTY,
            true,
        );
        assert!(bad.is_err());
        let neg = ModuleSpec::new(
            a2(),
            vec![CoordClass::NonIntegralNonzero(Some(q(-3))), CoordClass::Zero],
            NodeSet::EMPTY,
            true,
        );
        assert!(neg.is_ok());
    }

    #[test]
    fn presets() {
        let c_plus_one = vec![CoordClass::Zero, CoordClass::DominantIntegral(None)];
        let simple = ModuleSpec::preset(Preset::Simple, a2(), c_plus_one.clone()).unwrap();
        assert_eq!(simple.integrable, NodeSet::full(2));
        let verma = ModuleSpec::preset(Preset::Verma, a2(), c_plus_one).unwrap();
        assert_eq!(verma.integrable, NodeSet::EMPTY);
        let adj = ModuleSpec::preset_weight(Preset::FiniteDimensional, a2(), &Weight::from_ints(&[1, 1])).unwrap();
        assert!(adj.is_adjoint());
        assert!(ModuleSpec::preset_weight(Preset::FiniteDimensional, a2(), &Weight(vec![q(1), frac(1, 2)])).is_err());
        let jl = Weight(vec![q(2), frac(-1, 2)]);
        let s = ModuleSpec::preset_weight(Preset::Verma, a2(), &jl).unwrap();
        assert_eq!(s.j_lambda(), NodeSet::singleton(0));
        assert!(ModuleSpec::preset_weight(Preset::ParabolicVerma(NodeSet::singleton(1)), a2(), &jl).is_err());
    }
}
