//! Checks perfectness of a few circular words and prints the violations.

use perfect_necklace::{check_perfect, necklace_word, Params, Word};

fn show(x: &Word, p: &Params) -> Result<(), perfect_necklace::Error> {
    let report = check_perfect(x, p)?;
    println!("{x} under {p}: perfect = {}", report.is_perfect);
    for v in &report.violations {
        println!("    {v}");
    }
    Ok(())
}

fn main() -> Result<(), perfect_necklace::Error> {
    let p = Params::new(2, 2, 2)?;
    show(&"11100100".parse()?, &p)?;
    show(&"11001100".parse()?, &p)?;
    show(&"11111111".parse()?, &p)?;

    let p = Params::new(3, 3, 3)?;
    let x = necklace_word(&p)?;
    let report = check_perfect(&x, &p)?;
    println!(
        "\n{p}: {} symbols, perfect = {}",
        x.len(),
        report.is_perfect
    );
    let w: Word = "012".parse()?;
    println!("012 starts at {:?}", report.positions(&w));
    Ok(())
}
