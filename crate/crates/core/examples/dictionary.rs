//! Adjoint faces through the affine diagram, and f-polynomials through the
//! diagram with a node for −λ.

use hwface::dynkin::ExtendedDiagram;
use hwface::facecalc::{cm_dictionary, f_polynomial, lcl_f_polynomial};
use hwface::weyl::Limits;
use hwface::{ModuleSpec, Preset, RootSystem, Weight};

fn main() -> hwface::Result<()> {
    let rs = RootSystem::parse("D4")?;
    let theta = rs.highest_root(rs.nodes())?;
    let adjoint = ModuleSpec::preset_weight(Preset::FiniteDimensional, rs.clone(), &theta)?;
    let affine = ExtendedDiagram::affine(&rs)?;
    for i in rs.nodes() {
        println!("affine D4 without node {}: connected = {}", i + 1, affine.connected_without(i));
    }
    for j in rs.nodes().subsets().take(6) {
        let d = cm_dictionary(&adjoint, j)?;
        println!("J = {j}: ∂J = {}, J̄ = {}", d.partial, d.overline);
    }
    let limits = Limits::default();
    let spec = ModuleSpec::preset_weight(Preset::FiniteDimensional, RootSystem::parse("B3")?, &Weight::from_ints(&[1, 0, 1]))?;
    println!(
        "B3 (1,0,1): {} via the −λ diagram, {} directly",
        lcl_f_polynomial(&spec, &limits)?,
        f_polynomial(&spec, &limits)?.text
    );
    Ok(())
}
