//! The acceptance suite: one pass/fail line per criterion.

mod oracle;

use std::process::Command;
use std::time::{Duration, Instant};

use mcg_involutions::certify::{
    certify, select_branch, Certificate, QUOTIENT_SKIPPED, SKETCH_VERDICT,
};
use mcg_involutions::permgrp::{
    canonical_r, complement_search, factorial, schreier_sims, Reflection,
};
use mcg_involutions::quotient::{
    enumerate_generated, lickorish_generators, ModPMatrix, DEFAULT_CAP,
};
use mcg_involutions::rep::{
    build_i, build_i12, build_i12_modified, build_i13, build_j, check_relations, involution_set,
    rho1, rho2, rho3, rotation, Flavor, RepElement,
};
use mcg_involutions::surface::{lantern_config, SurfaceParams};
use mcg_involutions::Error;

use oracle::Mat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn rows(e: &RepElement) -> Mat {
    e.matrix().to_rows()
}

fn perm1(e: &RepElement) -> Vec<usize> {
    e.perm().images().iter().map(|i| i + 1).collect()
}

fn params(g: usize, b: usize) -> SurfaceParams {
    SurfaceParams::new(g, b).unwrap()
}

type Builder = fn(&SurfaceParams) -> mcg_involutions::Result<RepElement>;

fn all_generators(p: &SurfaceParams) -> Result<Vec<(&'static str, RepElement)>, String> {
    let mut out = vec![("rho1", rho1(p)), ("rho2", rho2(p))];
    let builders: [(&str, Builder); 6] = [
        ("rho3", rho3),
        ("I12", build_i12),
        ("I12-extended", build_i12_modified),
        ("I13", build_i13),
        ("I", build_i),
        ("J", build_j),
    ];
    for (name, f) in builders {
        match f(p) {
            Ok(e) => out.push((name, e)),
            Err(Error::BranchNotAvailable(_)) | Err(Error::NoLantern(_)) => {}
            Err(e) => return Err(format!("({}, {}) {name}: {e}", p.g, p.b)),
        }
    }
    Ok(out)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for g in 3..=10 {
        for b in 0..=6 {
            let p = params(g, b);
            if let Some(flavor) = select_branch(g, b).unwrap().flavor {
                involution_set(&p, flavor).map_err(|e| format!("({g}, {b}) branch set: {e}"))?;
            }
            for (name, e) in all_generators(&p)? {
                let m = rows(&e);
                let n = oracle::rank(g, b);
                ensure(oracle::mul(&m, &m) == oracle::identity(n), || {
                    format!("({g}, {b}) {name}: M^2 != I")
                })?;
                ensure(oracle::is_symplectic(g, b, &m), || {
                    format!("({g}, {b}) {name}: not symplectic")
                })?;
                ensure(oracle::is_compatible(g, b, &m, &perm1(&e)), || {
                    format!("({g}, {b}) {name}: puncture action incompatible")
                })?;
                count += 1;
            }
        }
    }
    within(start, Duration::from_secs(30), "grid")?;
    Ok(format!("{count} generators on 56 surfaces"))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for g in 3..=10 {
        for b in 0..=6 {
            let p = params(g, b);
            let r = rows(&rotation(&p));
            let checks = (1..=g)
                .map(|i| (oracle::a(g, b, i), oracle::a(g, b, i + 1)))
                .chain((1..=g).map(|i| (oracle::bb(g, b, i), oracle::bb(g, b, i + 1))))
                .chain((1..g).map(|i| (oracle::gamma(g, b, i), oracle::gamma(g, b, i + 1))));
            for (x, y) in checks {
                // R T_x R^-1 = T_y, checked as R T_x = T_y R.
                let lhs = oracle::mul(&r, &oracle::twist(g, b, &x));
                let rhs = oracle::mul(&oracle::twist(g, b, &y), &r);
                ensure(lhs == rhs, || {
                    format!("({g}, {b}): R T_{x:?} R^-1 != T_{y:?}")
                })?;
                count += 1;
            }
            let report = check_relations(&p);
            ensure(report.all_hold(), || {
                format!(
                    "({g}, {b}): {:?}",
                    report.failures().map(|f| &f.instance).collect::<Vec<_>>()
                )
            })?;
        }
    }
    Ok(format!("{count} conjugation identities"))
}

fn criterion_3() -> Outcome {
    let mut slowest = Duration::ZERO;
    for g in 3..=10 {
        for b in [0, 3] {
            let start = Instant::now();
            let p = params(g, b);
            let cfg = lantern_config(&p).map_err(|e| e.to_string())?;
            let xs = &cfg.x_classes;
            let bs = &cfg.b_classes;
            for (k, (i, j)) in [(1, 2), (0, 2), (0, 1)].into_iter().enumerate() {
                let sum: Vec<i64> = bs[i]
                    .coords
                    .iter()
                    .zip(&bs[j].coords)
                    .map(|(u, v)| u + v)
                    .collect();
                ensure(xs[k].coords == sum, || {
                    format!("genus {g}: x{} is not a{} + a{}", k + 1, i + 1, j + 1)
                })?;
            }
            let n = oracle::rank(g, b);
            let lhs = xs.iter().fold(oracle::identity(n), |acc, x| {
                oracle::mul(&acc, &oracle::twist(g, b, &x.coords))
            });
            let rhs = bs.iter().fold(oracle::identity(n), |acc, x| {
                oracle::mul(&acc, &oracle::twist(g, b, &x.coords))
            });
            ensure(lhs == rhs, || {
                format!("genus {g}, {b} punctures: lantern products differ")
            })?;
            ensure(lhs != oracle::identity(n), || {
                format!("genus {g}: lantern product is trivial")
            })?;
            slowest = slowest.max(start.elapsed());
        }
    }
    ensure(slowest <= Duration::from_secs(1), || {
        format!("slowest instance {slowest:?}")
    })?;
    Ok(format!("genus 3..=10, slowest {slowest:?}"))
}

fn curve_class(g: usize, b: usize, name: &str) -> Vec<i64> {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap();
    let i: usize = name[split..].parse().unwrap();
    match &name[..split] {
        "alpha" => oracle::a(g, b, i),
        "beta" => oracle::bb(g, b, i),
        "gamma" => oracle::gamma(g, b, i),
        other => panic!("unexpected curve family {other}"),
    }
}

/// Evaluates every coverage word of `cert` with oracle arithmetic on the
/// stored generator matrices.
fn replay_locally(cert: &Certificate) -> Result<(), String> {
    let (g, b) = (cert.params.g, cert.params.b);
    let n = oracle::rank(g, b);
    for gen in &cert.generators {
        ensure(
            oracle::mul(&gen.matrix, &gen.matrix) == oracle::identity(n),
            || format!("({g}, {b}): stored {} is not an involution", gen.name),
        )?;
    }
    for entry in &cert.coverage {
        let mut acc = oracle::identity(n);
        for l in entry.word.letters() {
            let m = &cert
                .generators
                .iter()
                .find(|x| x.name == l.generator)
                .ok_or("unbound letter")?
                .matrix;
            acc = oracle::mul(&acc, m);
        }
        let expected = oracle::twist(g, b, &curve_class(g, b, &entry.curve));
        ensure(acc == expected, || {
            format!("({g}, {b}): word for {} evaluates wrongly", entry.curve)
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let grid = [
        (4, [(8, 0), (8, 3), (7, 2)]),
        (5, [(6, 0), (6, 3), (5, 2)]),
        (6, [(4, 1), (3, 0), (3, 2)]),
    ];
    let mut slowest = Duration::ZERO;
    for (count, instances) in grid {
        for (g, b) in instances {
            let start = Instant::now();
            let cert = certify(g, b).map_err(|e| e.to_string())?;
            ensure(cert.branch.count == count, || {
                format!("({g}, {b}) is branch {}", cert.branch.count)
            })?;
            ensure(cert.verified, || format!("({g}, {b}): {:?}", cert.failures))?;
            ensure(cert.coverage.len() == 3 * g - 1, || {
                format!("({g}, {b}): {} words", cert.coverage.len())
            })?;
            ensure(cert.coverage.iter().all(|c| c.ok), || {
                format!("({g}, {b}): unverified word")
            })?;
            replay_locally(&cert)?;
            slowest = slowest.max(start.elapsed());
        }
    }
    ensure(slowest <= Duration::from_secs(60), || {
        format!("slowest instance {slowest:?}")
    })?;
    Ok(format!("9 certificates, slowest {slowest:?}"))
}

fn criterion_5() -> Outcome {
    // Read off the case split: 4 if g > 7 or (g = 7, b even); 5 if g > 5 or
    // (g = 5, b even); 6 if g > 3 or (g = 3, b even); 9 if g = 3, b odd.
    let expected = [
        ((3, 0), 6),
        ((3, 1), 9),
        ((3, 2), 6),
        ((3, 5), 9),
        ((4, 0), 6),
        ((4, 1), 6),
        ((5, 0), 5),
        ((5, 1), 6),
        ((5, 2), 5),
        ((5, 3), 6),
        ((6, 1), 5),
        ((6, 2), 5),
        ((7, 0), 4),
        ((7, 1), 5),
        ((7, 2), 4),
        ((7, 3), 5),
        ((8, 1), 4),
        ((8, 3), 4),
        ((9, 0), 4),
        ((12, 5), 4),
    ];
    for ((g, b), count) in expected {
        let got = select_branch(g, b).map_err(|e| e.to_string())?.count;
        ensure(got == count, || {
            format!("({g}, {b}): expected {count}, got {got}")
        })?;
    }
    ensure(
        select_branch(2, 3) == Err(Error::NotGeneratedByInvolutions(2)),
        || "genus 2 accepted".into(),
    )?;
    Ok(format!("{} grid points", expected.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for b in 3..=10 {
        let [r1, r2, r3] =
            [Reflection::R1, Reflection::R2, Reflection::R3].map(|r| canonical_r(b, r));
        let d = schreier_sims(&[r1.clone(), r2.clone()], b)
            .map_err(|e| e.to_string())?
            .order();
        let s = schreier_sims(&[r1.clone(), r2.clone(), r3.clone()], b)
            .map_err(|e| e.to_string())?
            .order();
        ensure(d == (2 * b as u64).into(), || {
            format!("b = {b}: dihedral order {d}")
        })?;
        ensure(s == factorial(b), || format!("b = {b}: order {s}"))?;
        if b <= 8 {
            let one = |p: &mcg_involutions::permgrp::Perm| {
                p.images().iter().map(|i| i + 1).collect::<Vec<_>>()
            };
            let local_d = oracle::perm_group_order(&[one(&r1), one(&r2)]);
            let local_s = oracle::perm_group_order(&[one(&r1), one(&r2), one(&r3)]);
            let fact: usize = (1..=b).product();
            ensure(local_d == 2 * b && local_s == fact, || {
                format!("b = {b}: closure gives {local_d}, {local_s}")
            })?;
        }
    }
    within(start, Duration::from_secs(5), "symmetric group orders")?;
    Ok("b = 3..=10".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let s = complement_search(7, 1)
        .map_err(|e| e.to_string())?
        .ok_or("b = 7: nothing found")?;
    ensure(s.is_involution() && s.fixed_points() == 1, || {
        format!("b = 7: {s} is not a 1-fixed-point involution")
    })?;
    let one =
        |p: &mcg_involutions::permgrp::Perm| p.images().iter().map(|i| i + 1).collect::<Vec<_>>();
    let order = oracle::perm_group_order(&[
        one(&canonical_r(7, Reflection::R1)),
        one(&canonical_r(7, Reflection::R2)),
        one(&s),
    ]);
    ensure(order == 5040, || {
        format!("b = 7: {s} generates order {order}")
    })?;
    for b in [5, 9] {
        let r = complement_search(b, 1).map_err(|e| e.to_string())?;
        ensure(r.is_none(), || format!("b = {b}: unexpected {:?}", r))?;
    }
    within(start, Duration::from_secs(120), "complement search")?;
    Ok(format!("b = 7 via {s}; none for b = 5, 9"))
}

/// Closure of small matrices mod p, with no shared code.
fn local_closure(gens: &[Mat], p: i64) -> usize {
    let n = gens[0].len();
    let red = |m: Mat| -> Mat {
        m.into_iter()
            .map(|r| r.into_iter().map(|x| x.rem_euclid(p)).collect())
            .collect()
    };
    let id = oracle::identity(n);
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = red(oracle::mul(&x, s));
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let sp6 = oracle::sp_order(3, 2);
    ensure(sp6 == 1_451_520, || format!("formula gives {sp6}"))?;
    for b in [0, 2] {
        let p = params(3, b);
        let gens = involution_set(&p, Flavor::SixInv)
            .and_then(|s| {
                s.iter()
                    .map(|(_, e)| ModPMatrix::from_rep(e, 2))
                    .collect::<mcg_involutions::Result<Vec<_>>>()
            })
            .map_err(|e| e.to_string())?;
        let order = enumerate_generated(&gens, DEFAULT_CAP)
            .map_err(|e| e.to_string())?
            .order();
        ensure(order == Some(sp6 as u64), || {
            format!("genus 3, {b} punctures: order {order:?}")
        })?;
    }
    for (g, want) in [(1usize, 6u64), (2, 720)] {
        let order = enumerate_generated(
            &lickorish_generators(g, 2).map_err(|e| e.to_string())?,
            DEFAULT_CAP,
        )
        .map_err(|e| e.to_string())?
        .order();
        ensure(
            order == Some(want) && oracle::sp_order(g as u32, 2) == want as u128,
            || format!("genus {g}: order {order:?}"),
        )?;
        let mut twists: Vec<Vec<i64>> = (1..=g)
            .flat_map(|i| [oracle::a(g, 0, i), oracle::bb(g, 0, i)])
            .collect();
        twists.extend((1..g).map(|i| oracle::gamma(g, 0, i)));
        let local = local_closure(
            &twists
                .iter()
                .map(|c| oracle::twist(g, 0, c))
                .collect::<Vec<_>>(),
            2,
        );
        ensure(local as u64 == want, || {
            format!("genus {g}: local closure {local}")
        })?;
    }
    within(start, Duration::from_secs(300), "quotient enumeration")?;
    Ok("1451520 for genus 3 with 0 and 2 punctures; 6 and 720 below".into())
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_mcg-verify");
    for (g, b) in [(4, 1), (7, 2), (3, 5)] {
        let run = || {
            Command::new(bin)
                .args([
                    "--json",
                    "certify",
                    "--genus",
                    &g.to_string(),
                    "--punctures",
                    &b.to_string(),
                ])
                .output()
                .map_err(|e| e.to_string())
        };
        let (first, second) = (run()?, run()?);
        ensure(!first.stdout.is_empty(), || {
            format!("({g}, {b}): no output")
        })?;
        ensure(first.stdout == second.stdout, || {
            format!("({g}, {b}): outputs differ")
        })?;
    }
    let (x, y) = (
        certify(5, 2).unwrap().to_json(),
        certify(5, 2).unwrap().to_json(),
    );
    ensure(x == y, || "library JSON differs between runs".into())?;
    Ok("byte-identical JSON".into())
}

fn criterion_10() -> Outcome {
    let sketch = certify(3, 5).map_err(|e| e.to_string())?;
    ensure(!sketch.verified, || "branch 9 marked verified".into())?;
    ensure(sketch.verdict == SKETCH_VERDICT, || {
        format!("branch 9 verdict {:?}", sketch.verdict)
    })?;
    let json = sketch.to_json();
    ensure(
        json.contains("sketch-only branch") && json.contains("\"verified\": false"),
        || "branch 9 JSON lacks its markers".into(),
    )?;

    let skipped = certify(4, 1).map_err(|e| e.to_string())?;
    ensure(
        skipped.quotient.skipped.as_deref() == Some(QUOTIENT_SKIPPED),
        || format!("genus 4 quotient {:?}", skipped.quotient),
    )?;
    ensure(
        skipped.quotient.ok.is_none() && skipped.to_json().contains(QUOTIENT_SKIPPED),
        || "skipped quotient carries a verdict".into(),
    )?;
    let uncertified = certify(5, 2).map_err(|e| e.to_string())?;
    ensure(
        uncertified
            .delta
            .iter()
            .filter(|d| d.word.is_none())
            .all(|d| d.note.contains("not certified")),
        || "delta entry without a word lacks its marker".into(),
    )?;
    Ok("sketch and skipped markers present".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("involution and symplecticity suite", criterion_1),
        ("rotation conjugation relations", criterion_2),
        ("lantern identity", criterion_3),
        ("word certificates", criterion_4),
        ("branch table", criterion_5),
        ("symmetric group orders", criterion_6),
        ("parity of one-fixed-point complements", criterion_7),
        ("finite symplectic quotient", criterion_8),
        ("determinism", criterion_9),
        ("honesty markers", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({t:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({t:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
