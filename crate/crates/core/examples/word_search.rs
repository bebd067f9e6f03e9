// Shortest words by breadth-first search, and evaluation of a word.

use mcg_involutions::rep::{rotation, Flavor, RepElement};
use mcg_involutions::surface::SurfaceParams;
use mcg_involutions::words::{bfs_search, evaluate, Alphabet, Generator, Word};

pub fn run_example() -> mcg_involutions::Result<()> {
    let p = SurfaceParams::new(5, 2)?;
    let alphabet = Alphabet::for_flavor(&p, Flavor::FiveInv)?;
    let r = rotation(&p);
    let r3 = r.compose(&r)?.compose(&r)?;
    let t = RepElement::twist(p.lattice(), &p.lattice().a(3))?;
    let res = bfs_search(&[r3, t], &alphabet, 6)?;
    for (name, w) in ["R^3", "T_alpha3"].iter().zip(&res.words) {
        match w {
            Some(w) => println!("{name} = {w}"),
            None => println!("{name}: nothing within depth {}", res.depth_reached),
        }
    }
    println!("{} states visited", res.states);

    let w = Word::of(&[Generator::Rho3, Generator::Rho2, Generator::Rho3]);
    let e = evaluate(&w, &alphabet)?;
    println!("{w} is an involution: {}", e.is_involution());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
