// How many involutions each genus and puncture count needs.

use mcg_involutions::certify::select_branch;

pub fn run_example() -> mcg_involutions::Result<()> {
    print!("g\\b");
    for b in 0..=5 {
        print!("{b:>3}");
    }
    println!();
    for g in 3..=9 {
        print!("{g:>3}");
        for b in 0..=5 {
            print!("{:>3}", select_branch(g, b)?.count);
        }
        println!();
    }
    println!("genus 2: {}", select_branch(2, 0).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
