//! Closed-form face calculus on Dynkin data.
//!
//! Every function here reads only the diagram, the coordinate classes of
//! `λ` and `J(V)`, except where a numeric weight is explicitly requested.

mod compact;
mod dictionary;
mod polyhedral;

pub use compact::{i_lambda_set, j3_by_witness, longest_weights, LongestWeights};
pub use dictionary::{
    cm_dictionary, cm_dictionary_affine, lcl_f_polynomial, lcl_overline, same_formulas_across_support,
    CmDictionary,
};
pub use polyhedral::{
    barycenter_data, coordinate_face_max, halfspace_representation, is_facet, BarycenterData, HalfSpace,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dynkin::{components, is_orthogonal};
use crate::error::{Error, Result};
use crate::modulespec::{CoordClass, ModuleSpec};
use crate::nodeset::NodeSet;
use crate::weyl::{parabolic_index, Limits, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SixPartition {
    pub j1: NodeSet,
    pub j2: NodeSet,
    pub j3: NodeSet,
    pub j4: NodeSet,
    pub j5: NodeSet,
    pub j6: NodeSet,
}

impl SixPartition {
    pub fn blocks(&self) -> [NodeSet; 6] {
        [self.j1, self.j2, self.j3, self.j4, self.j5, self.j6]
    }
}

/// The six blocks of `I` attached to `J`.
pub fn partition(spec: &ModuleSpec, j: NodeSet) -> Result<SixPartition> {
    let all = spec.nodes();
    if !j.is_subset(all) {
        return Err(Error::input(format!("{j} is not a subset of the nodes {all}")));
    }
    let jv = spec.integrable;
    let supp = spec.support();
    let j2 = j.difference(jv);
    let mut j3 = NodeSet::EMPTY;
    let mut j4 = NodeSet::EMPTY;
    for c in components(&spec.system, j.intersection(jv)) {
        if !c.is_disjoint(supp) {
            j3 = j3 | c;
        } else if !is_orthogonal(&spec.system, c, j2) {
            j4 = j4 | c;
        }
    }
    let p = SixPartition {
        j1: all.difference(j | jv),
        j2,
        j3,
        j4,
        j5: j.intersection(jv).difference(j3 | j4),
        j6: jv.difference(j),
    };
    let mut union = NodeSet::EMPTY;
    let mut total = 0;
    for b in p.blocks() {
        union = union | b;
        total += b.len();
    }
    if union != all || total != all.len() {
        return Err(Error::invariant(format!("partition of {j} is not a partition of I")));
    }
    Ok(p)
}

/// `λ_c − a_{cj} ≠ 0`, decided on the class of `λ_c`.
fn shifted_nonzero(class: CoordClass, a: i64) -> bool {
    match class {
        CoordClass::Zero => a != 0,
        CoordClass::DominantIntegral(Some(v)) => v as i64 != a,
        // A positive integer never equals a nonpositive Cartan entry.
        CoordClass::DominantIntegral(None) => a > 0,
        CoordClass::NonIntegralNonzero(_) => true,
    }
}

/// `J_min` together with the partition it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extremes {
    pub partition: SixPartition,
    pub jmin: NodeSet,
    pub jmax: NodeSet,
}

/// `J_min` and `J_max` for `J`, each computed two ways and cross-checked.
pub fn extremes(spec: &ModuleSpec, j: NodeSet) -> Result<Extremes> {
    let rs = &spec.system;
    let p = partition(spec, j)?;
    let jmin = p.j3 | p.j4;

    // Components meeting the support of λ − μ for μ ∈ {0} ⊔ Δ_{J₂}.
    let mut alt = NodeSet::EMPTY;
    for c in components(rs, j.intersection(spec.integrable)) {
        let hit_zero = c.iter().any(|x| !spec.lambda[x].is_zero());
        let hit_shift = p
            .j2
            .iter()
            .any(|k| c.iter().any(|x| shifted_nonzero(spec.lambda[x], rs.a(x, k))));
        if hit_zero || hit_shift {
            alt = alt | c;
        }
    }
    if alt != jmin {
        return Err(Error::invariant(format!(
            "J_min of {j}: block form {jmin} differs from support form {alt}"
        )));
    }

    let perp = spec.lambda_perp();
    let free = |within: NodeSet| {
        let x = within.intersection(perp);
        let x = rs.perp_nodes(jmin, x);
        rs.perp_nodes(p.j2, x)
    };
    let jmax = j.intersection(spec.integrable) | free(p.j6);
    let alt_max = jmin | free(spec.integrable);
    if alt_max != jmax {
        return Err(Error::invariant(format!(
            "J_max of {j}: {jmax} differs from alternate form {alt_max}"
        )));
    }
    Ok(Extremes {
        partition: p,
        jmin,
        jmax,
    })
}

pub fn j_min(spec: &ModuleSpec, j: NodeSet) -> Result<NodeSet> {
    extremes(spec, j).map(|e| e.jmin)
}

pub fn j_max(spec: &ModuleSpec, j: NodeSet) -> Result<NodeSet> {
    extremes(spec, j).map(|e| e.jmax)
}

/// Whether `J` and `J'` give the same standard parabolic face.
pub fn faces_equal(spec: &ModuleSpec, j: NodeSet, j2: NodeSet) -> Result<bool> {
    let jv = spec.integrable;
    if j.difference(jv) != j2.difference(jv) {
        return Ok(false);
    }
    let e = extremes(spec, j)?;
    let mid = j2.intersection(jv);
    Ok(e.jmin.is_subset(mid) && mid.is_subset(e.jmax))
}

/// Whether the face of `J` is contained in the face of `J'`.
pub fn face_includes(spec: &ModuleSpec, j: NodeSet, j2: NodeSet) -> Result<bool> {
    let jv = spec.integrable;
    if !j.difference(jv).is_subset(j2.difference(jv)) {
        return Ok(false);
    }
    Ok(j_min(spec, j)?.is_subset(j_min(spec, j2)?))
}

/// `[lo, hi]`: the subsets giving the same face as `J` are those between
/// `lo` and `hi` with the same part outside `J(V)`.
pub fn fiber_interval(spec: &ModuleSpec, j: NodeSet) -> Result<(NodeSet, NodeSet)> {
    let e = extremes(spec, j)?;
    Ok((e.jmin | e.partition.j2, e.jmax | e.partition.j2))
}

/// Whether `w(F_J) = w'(F_{J'})` for words in `W_{J(V)}`.
pub fn conjugate_faces_equal(
    spec: &ModuleSpec,
    w: &WeylWord,
    j: NodeSet,
    w2: &WeylWord,
    j2: NodeSet,
) -> Result<bool> {
    for word in [w, w2] {
        if let Some(&bad) = word.0.iter().find(|&&i| !spec.integrable.contains(i)) {
            return Err(Error::input(format!(
                "word {word} uses s{} outside the integrable set {}",
                bad + 1,
                spec.integrable
            )));
        }
    }
    if !faces_equal(spec, j, j2)? {
        return Ok(false);
    }
    let jmax = j_max(spec, j)?;
    let u = w.inverse().then(w2);
    // u ∈ W_{J(V)} lies in W_{J_max} iff it fixes ω_i for i ∈ J(V) ∖ J_max.
    let rs = &spec.system;
    Ok(spec
        .integrable
        .difference(jmax)
        .iter()
        .all(|i| {
            let om = rs.fundamental_weight(i);
            u.act(rs, &om) == om
        }))
}

/// Dimension of the face and the node set spanning its affine hull.
pub fn dimension_and_hull(spec: &ModuleSpec, j: NodeSet) -> Result<(usize, NodeSet)> {
    let e = extremes(spec, j)?;
    let hull = e.jmin | e.partition.j2;
    Ok((hull.len(), hull))
}

/// `W_{J_max} = W_{J_min} × W_{J_max ∖ J_min}` as the pair of node sets.
pub fn stabilizer(spec: &ModuleSpec, j: NodeSet) -> Result<(NodeSet, NodeSet)> {
    let e = extremes(spec, j)?;
    Ok((e.jmin, e.jmax.difference(e.jmin)))
}

pub fn vertex_count(spec: &ModuleSpec, j: NodeSet) -> Result<u128> {
    spec.require_hull("vertex counting")?;
    let k = j.intersection(spec.integrable);
    parabolic_index(&spec.system, k, k.intersection(spec.lambda_perp()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FaceReport {
    pub subset: NodeSet,
    pub partition: SixPartition,
    pub jmin: NodeSet,
    pub jmax: NodeSet,
    pub fiber: (NodeSet, NodeSet),
    pub dimension: usize,
    pub affine_hull: NodeSet,
    pub stabilizer: (NodeSet, NodeSet),
    pub vertex_count: Option<u128>,
    pub is_finite_face: bool,
    pub cone_support: NodeSet,
}

pub fn face_report(spec: &ModuleSpec, j: NodeSet) -> Result<FaceReport> {
    let e = extremes(spec, j)?;
    let hull = e.jmin | e.partition.j2;
    let vertex_count = if spec.polyhedral_hull {
        Some(vertex_count(spec, j)?)
    } else {
        None
    };
    let cone = spec
        .j_lambda()
        .difference(j_max(spec, j.intersection(spec.integrable))?);
    Ok(FaceReport {
        subset: j,
        partition: e.partition,
        jmin: e.jmin,
        jmax: e.jmax,
        fiber: (hull, e.jmax | e.partition.j2),
        dimension: hull.len(),
        affine_hull: hull,
        stabilizer: (e.jmin, e.jmax.difference(e.jmin)),
        vertex_count,
        is_finite_face: e.partition.j2.is_empty(),
        cone_support: cone,
    })
}

/// Integer polynomial in `t`, lowest degree first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FPolynomial(pub Vec<u128>);

impl FPolynomial {
    pub fn coefficient(&self, d: usize) -> u128 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, d: usize, c: u128) {
        if self.0.len() <= d {
            self.0.resize(d + 1, 0);
        }
        self.0[d] += c;
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }
}

impl fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (d, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && d > 0 { String::new() } else { c.to_string() };
            terms.push(match d {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{d}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Serialize for FPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FPolynomialReport {
    pub polynomial: FPolynomial,
    /// Contributions of faces with `J ∖ J(V) = ∅`.
    pub bounded: FPolynomial,
    /// Contributions of faces with `J ∖ J(V) ≠ ∅`.
    pub unbounded: FPolynomial,
    pub text: String,
}

/// Face counts by dimension over all standard parabolic faces and their
/// `W_{J(V)}`-translates.
pub fn f_polynomial(spec: &ModuleSpec, limits: &Limits) -> Result<FPolynomialReport> {
    spec.require_hull("the f-polynomial")?;
    let n = spec.rank();
    if n > limits.sweep_cap {
        return Err(Error::Resource(format!(
            "rank {n} exceeds the subset sweep cap {}",
            limits.sweep_cap
        )));
    }
    let jv = spec.integrable;
    let mut by_max: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut by_min: BTreeMap<(u64, u64), NodeSet> = BTreeMap::new();
    for j in spec.nodes().subsets() {
        let e = extremes(spec, j)?;
        let dim = e.jmin.len() + e.partition.j2.len();
        if let Some(&d) = by_max.get(&(e.jmax.bits(), e.partition.j2.bits())) {
            if d != dim {
                return Err(Error::invariant(format!("face of {j} has two dimensions")));
            }
        }
        by_max.insert((e.jmax.bits(), e.partition.j2.bits()), dim);
        if let Some(&m) = by_min.get(&(e.jmin.bits(), e.partition.j2.bits())) {
            if m != e.jmax {
                return Err(Error::invariant(format!("face of {j} has two maximal sets")));
            }
        }
        by_min.insert((e.jmin.bits(), e.partition.j2.bits()), e.jmax);
    }
    if by_max.len() != by_min.len() {
        return Err(Error::invariant("grouping by J_max and by J_min disagree"));
    }
    let mut index_cache: BTreeMap<u64, u128> = BTreeMap::new();
    let mut bounded = FPolynomial::default();
    let mut unbounded = FPolynomial::default();
    for (&(jmax, j2), &dim) in &by_max {
        let idx = match index_cache.get(&jmax) {
            Some(&x) => x,
            None => {
                let x = parabolic_index(&spec.system, jv, NodeSet::from_bits(jmax))?;
                index_cache.insert(jmax, x);
                x
            }
        };
        if j2 == 0 {
            bounded.add_term(dim, idx);
        } else {
            unbounded.add_term(dim, idx);
        }
    }
    let mut total = bounded.clone();
    for (d, &c) in unbounded.0.iter().enumerate() {
        total.add_term(d, c);
    }
    let total = total.trimmed();
    Ok(FPolynomialReport {
        text: total.to_string(),
        polynomial: total,
        bounded: bounded.trimmed(),
        unbounded: unbounded.trimmed(),
    })
}

/// One fiber of `J ↦ wt_J V`, represented by its least element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Fiber {
    pub lo: NodeSet,
    pub hi: NodeSet,
    pub multiplicity: u64,
}

/// All fibers of the face map, ordered by `lo`.
pub fn all_fibers(spec: &ModuleSpec, limits: &Limits) -> Result<Vec<Fiber>> {
    let n = spec.rank();
    if n > limits.sweep_cap {
        return Err(Error::Resource(format!(
            "rank {n} exceeds the subset sweep cap {}",
            limits.sweep_cap
        )));
    }
    let mut fibers: BTreeMap<u64, Fiber> = BTreeMap::new();
    for j in spec.nodes().subsets() {
        let (lo, hi) = fiber_interval(spec, j)?;
        fibers.entry(lo.bits()).or_insert(Fiber {
            lo,
            hi,
            multiplicity: 1u64 << hi.difference(lo).len(),
        });
    }
    Ok(fibers.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulespec::Preset;
    use crate::rootsystem::{RootSystem, Weight};

    fn ns(labels: &[usize]) -> NodeSet {
        labels.iter().map(|l| l - 1).collect()
    }

    fn c_omega2() -> ModuleSpec {
        ModuleSpec::new(
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::NonIntegralNonzero(None)],
            ns(&[1]),
            true,
        )
        .unwrap()
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
    fn worked_example_partition() {
        let s = c_omega2();
        let p = partition(&s, ns(&[1, 2])).unwrap();
        assert_eq!(p.j2, ns(&[2]));
        assert_eq!(p.j4, ns(&[1]));
        assert!(p.j1.is_empty() && p.j3.is_empty() && p.j5.is_empty() && p.j6.is_empty());
        let p0 = partition(&s, NodeSet::EMPTY).unwrap();
        assert_eq!(p0.j1, ns(&[2]));
        assert_eq!(p0.j6, ns(&[1]));
        let adj = fd("A2", &[1, 1]);
        let p1 = partition(&adj, ns(&[1])).unwrap();
        assert_eq!((p1.j3, p1.j6), (ns(&[1]), ns(&[2])));
    }

    #[test]
    fn worked_example_extremes() {
        let s = c_omega2();
        assert_eq!(j_min(&s, ns(&[1, 2])).unwrap(), ns(&[1]));
        assert_eq!(j_min(&s, ns(&[1])).unwrap(), NodeSet::EMPTY);
        assert_eq!(j_max(&s, ns(&[1])).unwrap(), ns(&[1]));
        assert!(faces_equal(&s, ns(&[1]), NodeSet::EMPTY).unwrap());
        assert!(!faces_equal(&s, ns(&[1, 2]), ns(&[2])).unwrap());
        assert_eq!(fiber_interval(&s, NodeSet::EMPTY).unwrap(), (NodeSet::EMPTY, ns(&[1])));
        assert_eq!(dimension_and_hull(&s, ns(&[1, 2])).unwrap(), (2, ns(&[1, 2])));
    }

    #[test]
    fn adjoint_a2() {
        let adj = fd("A2", &[1, 1]);
        assert_eq!(j_max(&adj, NodeSet::EMPTY).unwrap(), NodeSet::EMPTY);
        assert_eq!(fiber_interval(&adj, ns(&[1])).unwrap(), (ns(&[1]), ns(&[1])));
        assert_eq!(dimension_and_hull(&adj, ns(&[1])).unwrap(), (1, ns(&[1])));
        assert_eq!(stabilizer(&adj, ns(&[1])).unwrap(), (ns(&[1]), NodeSet::EMPTY));
        assert_eq!(vertex_count(&adj, adj.nodes()).unwrap(), 6);
        assert_eq!(vertex_count(&adj, NodeSet::EMPTY).unwrap(), 1);
        let w1 = WeylWord(vec![0]);
        let w2 = WeylWord(vec![1]);
        let e = WeylWord::identity();
        assert!(conjugate_faces_equal(&adj, &e, ns(&[1]), &e, ns(&[1])).unwrap());
        assert!(conjugate_faces_equal(&adj, &w1, ns(&[1]), &e, ns(&[1])).unwrap());
        assert!(!conjugate_faces_equal(&adj, &w2, ns(&[1]), &e, ns(&[1])).unwrap());
    }

    #[test]
    fn omega1_a2() {
        let s = fd("A2", &[1, 0]);
        assert_eq!(j_max(&s, NodeSet::EMPTY).unwrap(), ns(&[2]));
        assert_eq!(stabilizer(&s, NodeSet::EMPTY).unwrap(), (NodeSet::EMPTY, ns(&[2])));
        assert_eq!(vertex_count(&s, s.nodes()).unwrap(), 3);
    }

    #[test]
    fn includes_chain() {
        let s = ModuleSpec::preset(
            Preset::Simple,
            RootSystem::parse("A2").unwrap(),
            vec![CoordClass::Zero, CoordClass::DominantIntegral(None)],
        )
        .unwrap();
        assert!(face_includes(&s, ns(&[1]), ns(&[2])).unwrap());
        assert!(!face_includes(&s, ns(&[2]), ns(&[1])).unwrap());
        assert!(face_includes(&s, ns(&[2]), ns(&[1, 2])).unwrap());
    }

    #[test]
    fn f_polynomials() {
        let l = Limits::default();
        assert_eq!(f_polynomial(&fd("A2", &[1, 1]), &l).unwrap().text, "t^2 + 6t + 6");
        assert_eq!(f_polynomial(&fd("A2", &[1, 0]), &l).unwrap().text, "t^2 + 3t + 3");
        assert_eq!(f_polynomial(&fd("A1", &[1]), &l).unwrap().text, "t + 2");
        assert_eq!(f_polynomial(&fd("B2", &[0, 2]), &l).unwrap().text, "t^2 + 4t + 4");
        assert_eq!(f_polynomial(&fd("G2", &[0, 1]), &l).unwrap().text, "t^2 + 6t + 6");
        let verma = ModuleSpec::preset_weight(
            Preset::Verma,
            RootSystem::parse("A2").unwrap(),
            &Weight::from_ints(&[1, 1]),
        )
        .unwrap();
        let r = f_polynomial(&verma, &l).unwrap();
        assert_eq!(r.text, "t^2 + 2t + 1");
        assert_eq!(r.bounded.to_string(), "1");
    }

    #[test]
    fn fibers_cover_all_subsets() {
        let s = c_omega2();
        let f = all_fibers(&s, &Limits::default()).unwrap();
        assert_eq!(f.iter().map(|x| x.multiplicity).sum::<u64>(), 4);
    }
}
