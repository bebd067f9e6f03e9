// Puncture permutations: the dihedral group of the two reflections, the full
// symmetric group with a third, and the search for a third with a given
// number of fixed points.

use mcg_involutions::permgrp::{canonical_r, complement_search, schreier_sims, Reflection};

pub fn run_example() -> mcg_involutions::Result<()> {
    for b in 3..=8 {
        let [r1, r2, r3] =
            [Reflection::R1, Reflection::R2, Reflection::R3].map(|r| canonical_r(b, r));
        let d = schreier_sims(&[r1.clone(), r2.clone()], b)?;
        let s = schreier_sims(&[r1, r2, r3], b)?;
        println!(
            "b = {b}: |<r1,r2>| = {}, |<r1,r2,r3>| = {}, base {:?}",
            d.order(),
            s.order(),
            s.base()
        );
    }
    for b in [5, 7, 9] {
        match complement_search(b, 1)? {
            Some(s) => println!("b = {b}: {s} completes the reflections with one fixed point"),
            None => {
                println!("b = {b}: no involution with one fixed point completes the reflections")
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
