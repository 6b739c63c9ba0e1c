//! Cartan data, positive roots and inner products for a few diagrams.
//!
//!     cargo run --example root_system -- B3xG2

use hwface::RootSystem;

fn main() -> hwface::Result<()> {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::parse(&ty)?;
    println!("{} (rank {})", rs.type_string(), rs.rank());
    for row in rs.cartan() {
        println!("  {row:?}");
    }
    println!("{} positive roots, by height:", rs.positive_roots().len());
    for r in rs.positive_roots() {
        println!("  {r:?}");
    }
    for i in rs.nodes() {
        let a = rs.simple_root(i);
        println!("(α{0}, α{0}) = {1}", i + 1, rs.inner(&a, &a)?);
    }
    for comp in rs.components() {
        println!("highest root of {}: {}", comp.ty, rs.highest_root(comp.node_set())?);
    }
    Ok(())
}
