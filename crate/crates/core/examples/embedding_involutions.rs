// The two reflections of the standard embedding and the handle rotation they
// generate.

use mcg_involutions::rep::{rho1, rho2, rotation};
use mcg_involutions::surface::{build_registry, CurveId, SurfaceParams};

pub fn run_example() -> mcg_involutions::Result<()> {
    let p = SurfaceParams::new(5, 4)?;
    let (r1, r2, r) = (rho1(&p), rho2(&p), rotation(&p));
    println!("rho1 on punctures: {}", r1.perm());
    println!("rho2 on punctures: {}", r2.perm());
    println!("R    on punctures: {}", r.perm());

    let reg = build_registry(&p);
    for i in 1..=p.g {
        let image = r.apply(reg.class(&CurveId::Alpha(i)));
        let name = reg
            .iter()
            .find(|(_, c)| c.coords == image.coords)
            .map(|(id, _)| id.to_string());
        println!(
            "R alpha{i} = {}",
            name.unwrap_or_else(|| format!("{:?}", image.coords))
        );
    }
    let mut power = r.clone();
    for _ in 1..p.g {
        power = power.compose(&r)?;
    }
    println!(
        "R^{} fixes every handle class: {}",
        p.g,
        reg.lickorish_targets()
            .iter()
            .all(|id| { power.apply(reg.class(id)).coords == reg.class(id).coords })
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> mcg_involutions::Result<()> {
    run_example()
}
