//! Walks the θ-chain from ⟨(s-1)ⁿ,0⟩ to ⟨0ⁿ,0⟩, marking the pairs that are
//! skipped because they are not maximal, and steps back with the inverse.

use perfect_necklace::{chain_iter, is_maximal, theta, theta_preimage, Pair, Params};

fn main() -> Result<(), perfect_necklace::Error> {
    let p = Params::new(2, 6, 2)?;
    let mut kept = 0;
    let mut skipped = 0;
    for a in chain_iter(&p) {
        if is_maximal(&a, &p)? {
            kept += 1;
            println!("  {a}");
        } else {
            skipped += 1;
            println!("  {a}   (not maximal)");
        }
    }
    println!("{kept} maximal, {skipped} skipped");

    let a = Pair::zero("011000".parse()?, &p)?;
    let b = theta(&a, &p)?;
    println!("θ{a} = {b}");
    // ⟨011000,0⟩ is off the chain, so going back lands on the chain predecessor
    println!("chain predecessor of {b} = {}", theta_preimage(&b, &p)?);
    Ok(())
}
