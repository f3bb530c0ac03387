//! Streams a large necklace without holding it in memory and tallies its
//! symbols.
//!
//! ```text
//! cargo run --release --example streaming_large -- 2 20 4
//! ```

use std::time::Instant;

use perfect_necklace::{build_necklace, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (s, n, k) = match args[..] {
        [s, n, k] => (s as u32, n, k),
        [] => (2, 16, 4),
        _ => return Err("usage: streaming_large [s n k]".into()),
    };
    let p = Params::new(s, n, k)?;
    let start = Instant::now();
    let stream = build_necklace(&p)?;
    let total = stream.total_length();
    let mut counts = vec![0u64; s as usize];
    for c in stream {
        counts[c as usize] += 1;
    }
    println!("{p}: {total} symbols in {:.2?}", start.elapsed());
    // every symbol occurs s^(n-1)*k times
    for (c, m) in counts.iter().enumerate() {
        println!("  symbol {c}: {m}");
    }
    Ok(())
}
