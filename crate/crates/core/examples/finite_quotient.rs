// The generated subgroup of Sp(2g, F_p), compared with the order formula.

use mcg_involutions::quotient::{
    enumerate_generated, lickorish_generators, sp_order, ModPMatrix, DEFAULT_CAP,
};
use mcg_involutions::rep::{involution_set, Flavor};
use mcg_involutions::surface::SurfaceParams;

pub fn run_example() -> mcg_involutions::Result<()> {
    for (g, p) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let order = enumerate_generated(&lickorish_generators(g, p)?, DEFAULT_CAP)?;
        println!(
            "twists, genus {g} mod {p}: {:?} of {}",
            order,
            sp_order(g, p)
        );
    }
    let p = SurfaceParams::new(3, 2)?;
    let gens = involution_set(&p, Flavor::SixInv)?
        .iter()
        .map(|(_, e)| ModPMatrix::from_rep(e, 2))
        .collect::<mcg_involutions::Result<Vec<_>>>()?;
    let order = enumerate_generated(&gens, DEFAULT_CAP)?;
    println!(
        "six involutions, genus 3 mod 2: {:?} of {}",
        order,
        sp_order(3, 2)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
