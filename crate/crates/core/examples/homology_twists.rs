// Twist transvections on the punctured homology lattice, and completing a
// partial involution to a full symplectic one.

use mcg_involutions::permgrp::Perm;
use mcg_involutions::rep::RepElement;
use mcg_involutions::symhom::{complete_partial_involution, is_involution, make_lattice};

pub fn run_example() -> mcg_involutions::Result<()> {
    let l = make_lattice(2, 3)?;
    println!("genus 2 with 3 punctures: rank {}", l.rank());

    // A twist about a curve that separates a puncture from the rest of a handle.
    let c = &l.a(1) + &l.c(1);
    let t = RepElement::twist(l, &c)?;
    println!("T(a1 + c1) b1 = {:?}", t.apply(&l.b(1)).coords);
    assert!(t.is_symplectic() && t.is_compatible());

    // Swap the two handles, swap punctures 1 and 2, fix puncture 3.
    let perm = Perm::from_one_based(&[2, 1, 3])?;
    let pairs = [(l.a(1), l.a(2)), (l.b(1), l.b(2))];
    let m = complete_partial_involution(&l, &pairs, &[], &perm)?;
    assert!(is_involution(&m) && l.is_symplectic(&m));
    println!("completed involution:\n{m:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
