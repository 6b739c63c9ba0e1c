//! Every pair of node subsets, formulas against enumerated weights.
//!
//!     cargo run --example cross_validate -- C3

use hwface::oracle::{cross_validate, verify::CrossOptions, Verdict};
use hwface::rational::frac;
use hwface::weyl::Limits;
use hwface::{CoordClass, ModuleSpec, RootSystem};

fn main() -> hwface::Result<()> {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::parse(&ty)?;
    let n = rs.rank();
    // zero on the first node, a non-integral value on the last, 1 elsewhere
    let lambda: Vec<CoordClass> = (0..n)
        .map(|i| match i {
            0 => CoordClass::Zero,
            i if i == n - 1 && n > 1 => CoordClass::NonIntegralNonzero(Some(frac(-1, 2))),
            _ => CoordClass::DominantIntegral(Some(1)),
        })
        .collect();
    let jv = (0..n).filter(|&i| lambda[i].is_integral()).collect();
    let spec = ModuleSpec::new(rs, lambda, jv, true)?;
    let report = cross_validate(&spec, CrossOptions::default(), &Limits::from_env()?)?;
    println!(
        "{ty} λ = {}: {} weights to depth {:?}; {} agree, {} disagree, {} unresolved",
        report.lambda,
        report.weights_enumerated,
        report.depth,
        report.agree,
        report.disagree,
        report.unresolved
    );
    if let Some(p) = report.pairs.iter().find(|p| p.equal != Verdict::Agree || p.includes != Verdict::Agree) {
        println!("first mismatch: {p:?}");
    }
    Ok(())
}
