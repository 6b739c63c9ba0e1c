//! Longest weights, minima and witnesses for the faces of a B3 module.

use hwface::facecalc::{i_lambda_set, j3_by_witness, longest_weights};
use hwface::weyl::Limits;
use hwface::{ModuleSpec, Preset, RootSystem, Weight};

fn main() -> hwface::Result<()> {
    let rs = RootSystem::parse("B3")?;
    let spec = ModuleSpec::preset_weight(Preset::FiniteDimensional, rs, &Weight::from_ints(&[1, 0, 1]))?;
    let limits = Limits::default();
    for j in spec.nodes().subsets() {
        if let Some(lw) = longest_weights(&spec, j, &limits)? {
            print!("J = {j}: {} longest weights, minimum {}", lw.longest.len(), lw.minimum);
        }
        match j3_by_witness(&spec, j, &limits)? {
            Some(mu) => println!(", witness {mu} with I_λ = {}", i_lambda_set(&spec, &mu)?),
            None => println!(", no witness"),
        }
    }
    Ok(())
}
