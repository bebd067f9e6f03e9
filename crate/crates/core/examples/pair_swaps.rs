// The involutions that swap pieces of the lantern, and where their fixed
// point budgets run out.

use mcg_involutions::rep::{build_i12, build_i12_modified, build_i13, build_i_indexed, build_j};
use mcg_involutions::surface::SurfaceParams;

pub fn run_example() -> mcg_involutions::Result<()> {
    let p = SurfaceParams::new(8, 3)?;
    for (name, e) in [
        ("I12", build_i12(&p)?),
        ("I13", build_i13(&p)?),
        ("J", build_j(&p)?),
    ] {
        println!(
            "{name}: punctures {} ({} fixed), involution {}, mixed block zero {}",
            e.perm(),
            e.perm().fixed_points(),
            e.is_involution(),
            e.mixed_block_is_zero()
        );
    }
    let (_, j) = build_i_indexed(&SurfaceParams::new(4, 2)?)?;
    println!("genus 4: I swaps alpha2 with beta{j}");

    // Too many punctures for the complement of the extended swap.
    match build_i12_modified(&SurfaceParams::new(5, 3)?) {
        Ok(_) => println!("genus 5, 3 punctures: extended I12 exists"),
        Err(e) => println!("genus 5, 3 punctures: {e}"),
    }
    match build_j(&SurfaceParams::new(7, 1)?) {
        Ok(e) => println!("genus 7, 1 puncture: J acts as {}", e.perm()),
        Err(e) => println!("genus 7, 1 puncture: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
