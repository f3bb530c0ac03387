//! With k = 1 the construction is the greatest de Bruijn necklace, the same
//! word as concatenating Lyndon words of length dividing n.

use perfect_necklace::{fkm_reference, necklace_word, Params};

fn main() -> Result<(), perfect_necklace::Error> {
    for s in [2, 3] {
        for n in 1..=5 {
            let built = necklace_word(&Params::new(s, n, 1)?)?;
            let reference = fkm_reference(s, n, 1 << 20)?;
            assert_eq!(built, reference);
            if built.len() <= 32 {
                println!("s={s} n={n}: {built}");
            } else {
                println!("s={s} n={n}: {} symbols, agrees", built.len());
            }
        }
    }
    Ok(())
}
