//! Compares the construction with an exhaustive search on every instance
//! small enough to search.

use perfect_necklace::{brute_force_greatest, necklace_word, Params, SearchBudget};

fn main() -> Result<(), perfect_necklace::Error> {
    let budget = SearchBudget::default();
    for (s, n, k) in [
        (2, 1, 2),
        (2, 2, 1),
        (2, 2, 2),
        (2, 1, 4),
        (3, 2, 1),
        (2, 3, 1),
        (2, 2, 4),
        (2, 3, 3),
    ] {
        let p = Params::new(s, n, k)?;
        let searched = brute_force_greatest(&p, &budget)?;
        let built = necklace_word(&p)?;
        let verdict = if searched == built {
            "MATCH"
        } else {
            "MISMATCH"
        };
        println!("{p:<14} {searched:<26} {verdict}");
    }
    Ok(())
}
