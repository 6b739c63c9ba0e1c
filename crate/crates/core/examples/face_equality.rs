//! Face equality and inclusion for sl3 with λ = cω₂ and J(V) = {1}, checked
//! against the enumerated weight set.

use hwface::facecalc::{extremes, face_includes, faces_equal};
use hwface::oracle::{cross_validate, verify::CrossOptions};
use hwface::weyl::Limits;
use hwface::{CoordClass, ModuleSpec, NodeSet, RootSystem};

fn main() -> hwface::Result<()> {
    let rs = RootSystem::parse("A2")?;
    let spec = ModuleSpec::new(
        rs,
        vec![CoordClass::Zero, CoordClass::DominantIntegral(None)],
        NodeSet::singleton(0),
        true,
    )?;
    for j in spec.nodes().subsets() {
        let e = extremes(&spec, j)?;
        println!("J = {j}: J_min = {}, J_max = {}", e.jmin, e.jmax);
    }
    let one = NodeSet::singleton(0);
    let two = NodeSet::singleton(1);
    println!("wt_{one} = wt_∅ ? {}", faces_equal(&spec, one, NodeSet::EMPTY)?);
    println!("wt_{{1,2}} = wt_{two} ? {}", faces_equal(&spec, spec.nodes(), two)?);
    println!("wt_{two} ⊆ wt_{{1,2}} ? {}", face_includes(&spec, two, spec.nodes())?);

    let options = CrossOptions { depth: Some(8), ..CrossOptions::default() };
    let report = cross_validate(&spec, options, &Limits::default())?;
    println!(
        "oracle at depth 8: {} agree, {} disagree, {} unresolved",
        report.agree, report.disagree, report.unresolved
    );
    Ok(())
}
