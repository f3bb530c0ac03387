//! Lists the maximal pairs of Σⁿ×ℤ_k next to their Lyndon pairs, and shows
//! which rotation class each one heads.

use perfect_necklace::{lyndon_list, maximal_list, rotation_class, Params};

fn main() -> Result<(), perfect_necklace::Error> {
    let p = Params::new(2, 4, 2)?;
    println!("maximal pairs for {p}");
    for (a, l) in maximal_list(&p).zip(lyndon_list(&p)) {
        let class = rotation_class(&a, &p)?;
        println!(
            "{a:<10} -> {l:<10} class of {}: {}",
            class.len(),
            class
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }

    // When n | k every residue-0 pair is maximal.
    let q = Params::new(3, 2, 4)?;
    println!("\n{q}: {} maximal pairs", maximal_list(&q).count());
    Ok(())
}
