//! Prints the greatest (n,k)-perfect necklace with its Lyndon blocks.
//!
//! ```text
//! cargo run --example greatest_necklace -- 2 6 2
//! ```

use perfect_necklace::{build_necklace, lyndon_list, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (s, n, k) = match args[..] {
        [s, n, k] => (s as u32, n, k),
        [] => (2, 6, 2),
        _ => return Err("usage: greatest_necklace [s n k]".into()),
    };
    let p = Params::new(s, n, k)?;

    let blocks: Vec<String> = lyndon_list(&p).map(|l| l.word().to_string()).collect();
    println!("{p}: {} Lyndon pairs", blocks.len());
    println!("{}", blocks.join(" | "));

    let stream = build_necklace(&p)?;
    let total = stream.total_length();
    let x: Vec<u32> = stream.collect();
    println!("length {} (s^n*k = {total})", x.len());
    Ok(())
}
