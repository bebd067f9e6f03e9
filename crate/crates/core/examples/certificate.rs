// A full certificate, its JSON, and an independent replay of its words.

use mcg_involutions::certify::{certify, replay};

pub fn run_example() -> mcg_involutions::Result<()> {
    let cert = certify(5, 2)?;
    println!(
        "branch {} with {} involutions: {}",
        cert.branch.case, cert.branch.count, cert.verdict
    );
    for d in &cert.delta {
        println!(
            "delta{}: {}",
            d.j,
            d.word
                .as_ref()
                .map_or(d.note.clone(), |w| format!("{} letters", w.len()))
        );
    }
    let json = cert.to_json();
    println!("{} bytes of JSON", json.len());

    let back = serde_json::from_str(&json).expect("certificate JSON round-trips");
    let report = replay(&back)?;
    println!("replay matches: {}", report.matches);

    let sketch = certify(3, 5)?;
    println!(
        "genus 3 with 5 punctures: {} (verified {})",
        sketch.verdict, sketch.verified
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
