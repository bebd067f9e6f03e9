// Words in five involutions for every twist of the Humphries-Lickorish set.

use mcg_involutions::rep::Flavor;
use mcg_involutions::surface::SurfaceParams;
use mcg_involutions::words::coverage_words;

pub fn run_example() -> mcg_involutions::Result<()> {
    let p = SurfaceParams::new(6, 0)?;
    let cov = coverage_words(&p, Flavor::FiveInv)?;
    for e in &cov {
        println!(
            "{:8} {:3} letters  {}",
            e.curve.to_string(),
            e.word.len(),
            if e.ok { "ok" } else { "FAIL" }
        );
    }
    let total: usize = cov.iter().map(|e| e.word.len()).sum();
    println!(
        "{} words, {total} letters, all verified: {}",
        cov.len(),
        cov.iter().all(|e| e.ok)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
