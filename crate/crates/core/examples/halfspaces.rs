//! Half-space description of the G2 adjoint polytope, with every weight
//! checked against it.

use hwface::facecalc::{halfspace_representation, is_facet};
use hwface::oracle::simple_module_weights;
use hwface::weyl::Limits;
use hwface::{ModuleSpec, Preset, RootSystem};

fn main() -> hwface::Result<()> {
    let rs = RootSystem::parse("G2")?;
    let theta = rs.highest_root(rs.nodes())?;
    let spec = ModuleSpec::preset_weight(Preset::FiniteDimensional, rs.clone(), &theta)?;
    let limits = Limits::default();
    for i in rs.nodes() {
        println!("node {} gives facets: {}", i + 1, is_facet(&spec, i)?);
    }
    let hs = halfspace_representation(&spec, true, &limits)?;
    for h in &hs {
        println!("(μ, {}) ≤ (θ, ω{})", h.normal, h.node + 1);
    }
    let weights = simple_module_weights(&rs, spec.integrable, &theta, &limits)?.weights(&rs);
    let inside = weights.iter().all(|mu| hs.iter().all(|h| h.contains(&rs, &theta, mu)));
    println!("{} weights, all inside: {inside}", weights.len());
    Ok(())
}
