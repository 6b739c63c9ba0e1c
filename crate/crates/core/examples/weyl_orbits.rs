//! Orbits, parabolic indices, coset representatives and w∘λ.

use hwface::weyl::{coset_representatives, longest_image_with_word, orbit_with_words, parabolic_index, Limits};
use hwface::{NodeSet, RootSystem, Weight};

fn main() -> hwface::Result<()> {
    let rs = RootSystem::parse("A3")?;
    let limits = Limits::from_env()?;
    let lambda = Weight::from_ints(&[1, 0, 1]);
    let all = rs.nodes();
    let words = orbit_with_words(&rs, all, &lambda, &limits)?;
    println!("W-orbit of {lambda}: {} weights", words.len());
    for (mu, w) in &words {
        println!("  {mu}  = {w} · λ");
    }
    let k: NodeSet = [0, 2].into_iter().collect();
    println!("[W : W_{k}] = {}", parabolic_index(&rs, all, k)?);
    for w in coset_representatives(&rs, all, k, &limits)? {
        print!("{w}; ");
    }
    println!();
    let (low, word) = longest_image_with_word(&rs, all, &lambda)?;
    println!("w∘λ = {low} via {word}");
    Ok(())
}
