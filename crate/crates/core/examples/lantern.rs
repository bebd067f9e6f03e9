// The lantern inside the surface, its relation, and the word in the
// involutions that produces the boundary twist.

use mcg_involutions::rep::Flavor;
use mcg_involutions::surface::{lantern_config, lantern_identity_holds, SurfaceParams};
use mcg_involutions::words::lantern_word;

pub fn run_example() -> mcg_involutions::Result<()> {
    for (g, b, flavor) in [
        (4, 1, Flavor::SixInv),
        (6, 0, Flavor::FiveInv),
        (8, 3, Flavor::FourInv),
    ] {
        let p = SurfaceParams::new(g, b)?;
        let cfg = lantern_config(&p)?;
        let holds = lantern_identity_holds(&p.lattice(), &cfg)?;
        println!(
            "genus {g}: center {}, boundary {:?}, relation holds: {holds}",
            cfg.center,
            cfg.boundary.map(|c| c.to_string())
        );
        let lw = lantern_word(&p, flavor)?;
        println!(
            "  factor {} ({:?}), conjugators {} and {}",
            lw.factor, lw.factor_order, lw.conjugators[0], lw.conjugators[1]
        );
        println!(
            "  T_{} = {} ({} letters)",
            cfg.boundary[3],
            lw.word,
            lw.word.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
