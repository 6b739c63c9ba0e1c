//! Translations between the `J_min`/`J_max` calculus and the affine and
//! extended Coxeter diagram descriptions.

use serde::Serialize;

use crate::dynkin::ExtendedDiagram;
use crate::error::{Error, Result};
use crate::modulespec::ModuleSpec;
use crate::nodeset::NodeSet;
use crate::weyl::{parabolic_index, Limits};

use super::{extremes, f_polynomial, FPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CmDictionary {
    /// `∂J = I ∖ (I∖J)_max`.
    pub partial: NodeSet,
    /// `J̄ = I ∖ (I∖J)_min`.
    pub overline: NodeSet,
    /// Whether the affine-diagram route was also evaluated and matched.
    pub affine_checked: bool,
}

/// `∂J` and `J̄`. On an adjoint spec the affine-diagram forms are computed
/// as well and must agree.
pub fn cm_dictionary(spec: &ModuleSpec, j: NodeSet) -> Result<CmDictionary> {
    let all = spec.nodes();
    let e = extremes(spec, all.difference(j))?;
    let partial = all.difference(e.jmax);
    let overline = all.difference(e.jmin);
    if !spec.is_adjoint() {
        return Ok(CmDictionary {
            partial,
            overline,
            affine_checked: false,
        });
    }
    let (p2, o2) = affine_route(spec, j)?;
    if (p2, o2) != (partial, overline) {
        return Err(Error::invariant(format!(
            "dictionary for {j}: ({partial}, {overline}) from J_min/J_max but ({p2}, {o2}) from the affine diagram"
        )));
    }
    Ok(CmDictionary {
        partial,
        overline,
        affine_checked: true,
    })
}

/// The affine-diagram route alone; only defined for adjoint specs.
pub fn cm_dictionary_affine(spec: &ModuleSpec, j: NodeSet) -> Result<CmDictionary> {
    if !spec.is_adjoint() {
        return Err(Error::input(
            "the affine-diagram dictionary needs the adjoint module of a simple diagram",
        ));
    }
    let (partial, overline) = affine_route(spec, j)?;
    Ok(CmDictionary {
        partial,
        overline,
        affine_checked: true,
    })
}

fn affine_route(spec: &ModuleSpec, j: NodeSet) -> Result<(NodeSet, NodeSet)> {
    let rs = &spec.system;
    let all = spec.nodes();
    let aff = ExtendedDiagram::affine(rs)?;
    let c = aff.component_containing(j).nodes;
    // The component contains α₀ = −θ, so its orthogonal complement is
    // {θ}^⊥ ∩ C^⊥.
    let theta_perp = spec.lambda_perp();
    let perp = rs.perp_nodes(c, theta_perp);
    Ok((j.difference(perp), all.difference(c)))
}

fn require_fd_simple(spec: &ModuleSpec, what: &str) -> Result<()> {
    if !spec.is_finite_dimensional() || !spec.system.is_simple() {
        return Err(Error::input(format!(
            "{what} needs a finite-dimensional simple module over a simple diagram"
        )));
    }
    Ok(())
}

/// `J̄ = I ∖ (Î_λ ∖ J)₀`, checked against `I ∖ (I∖J)_min`.
pub fn lcl_overline(spec: &ModuleSpec, j: NodeSet) -> Result<NodeSet> {
    require_fd_simple(spec, "the extended Coxeter diagram")?;
    let all = spec.nodes();
    let ext = ExtendedDiagram::minus_lambda(&spec.system, spec.positive_nodes());
    let graph = all.difference(ext.component_containing(j).nodes);
    let calc = all.difference(extremes(spec, all.difference(j))?.jmin);
    if graph != calc {
        return Err(Error::invariant(format!(
            "J̄ for {j}: {graph} from the extended diagram, {calc} from J_min"
        )));
    }
    Ok(graph)
}

/// f-polynomial summed over `J` with `Î_λ ∖ J` connected, checked against
/// the `J_max` sweep.
pub fn lcl_f_polynomial(spec: &ModuleSpec, limits: &Limits) -> Result<FPolynomial> {
    require_fd_simple(spec, "the extended Coxeter diagram f-polynomial")?;
    let rs = &spec.system;
    let all = spec.nodes();
    if spec.rank() > limits.sweep_cap {
        return Err(Error::Resource(format!(
            "rank {} exceeds the subset sweep cap {}",
            spec.rank(),
            limits.sweep_cap
        )));
    }
    let ext = ExtendedDiagram::minus_lambda(rs, spec.positive_nodes());
    let mut f = FPolynomial::default();
    for j in all.subsets() {
        let rest = all.difference(j);
        if ext.component_containing(j).nodes != rest {
            continue;
        }
        // (I∖J) ∪ (J ∩ ({λ} ∪ Δ_{I∖J})^⊥)
        let fixed = rest | rs.perp_nodes(rest, j.intersection(spec.lambda_perp()));
        f.add_term(rest.len(), parabolic_index(rs, all, fixed)?);
    }
    let sweep = f_polynomial(spec, limits)?.polynomial;
    if sweep != f {
        return Err(Error::invariant(format!(
            "extended diagram f-polynomial {f} differs from {sweep}"
        )));
    }
    Ok(f)
}

/// Whether two finite-dimensional modules over the same simple diagram
/// with the same support have identical `J_min`/`J_max` tables.
pub fn same_formulas_across_support(a: &ModuleSpec, b: &ModuleSpec) -> Result<bool> {
    require_fd_simple(a, "the support comparison")?;
    require_fd_simple(b, "the support comparison")?;
    if a.system != b.system {
        return Err(Error::input("the two modules live over different diagrams"));
    }
    if a.support() != b.support() {
        return Err(Error::input(format!(
            "supports {} and {} differ",
            a.support(),
            b.support()
        )));
    }
    for j in a.nodes().subsets() {
        let (x, y) = (extremes(a, j)?, extremes(b, j)?);
        if (x.jmin, x.jmax) != (y.jmin, y.jmax) {
            return Ok(false);
        }
    }
    Ok(true)
}
