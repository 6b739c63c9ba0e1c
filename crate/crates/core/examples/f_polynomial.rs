//! f-polynomials of weight polytopes and polyhedra.

use hwface::facecalc::f_polynomial;
use hwface::weyl::Limits;
use hwface::{ModuleSpec, Preset, RootSystem, Weight};

fn main() -> hwface::Result<()> {
    let limits = Limits::default();
    for (ty, lambda) in [("A2", vec![1, 1]), ("B3", vec![0, 1, 0]), ("D4", vec![0, 1, 0, 0]), ("F4", vec![1, 0, 0, 0])] {
        let spec = ModuleSpec::preset_weight(Preset::FiniteDimensional, RootSystem::parse(ty)?, &Weight::from_ints(&lambda))?;
        println!("{ty} {lambda:?}: {}", f_polynomial(&spec, &limits)?.text);
    }
    // A Verma module: every face is unbounded except the vertex.
    let verma = ModuleSpec::preset_weight(Preset::Verma, RootSystem::parse("A2")?, &Weight::from_ints(&[1, 1]))?;
    let report = f_polynomial(&verma, &limits)?;
    println!("A2 Verma: {} (bounded {}, unbounded {})", report.text, report.bounded, report.unbounded);
    Ok(())
}
