//! The `mcg-verify` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::certify::{certify_with, CertifyOptions, DELTA_DEPTH};
use crate::error::Error;
use crate::permgrp::{canonical_r, factorial, schreier_sims, Reflection};
use crate::quotient::{
    enumerate_generated, lickorish_generators, sp_order, ModPMatrix, DEFAULT_CAP,
};
use crate::rep::{check_relations, involution_set};
use crate::surface::{build_registry, lantern_config, lantern_identity_holds, SurfaceParams};

pub const MAX_GENUS: usize = 12;
pub const MAX_PUNCTURES: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mcg-verify",
    version,
    about = "Check involution generating sets on punctured homology"
)]
pub struct Cli {
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Surface {
    #[arg(long, short = 'g')]
    pub genus: usize,
    #[arg(long, short = 'b', default_value_t = 0)]
    pub punctures: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Involution, symplectic, compatibility, rotation and lantern checks.
    Relations(Surface),
    /// The lantern configuration and its identity.
    Lantern(Surface),
    /// Build and verify the certificate for the applicable branch.
    Certify {
        #[command(flatten)]
        surface: Surface,
        /// Search depth for the puncture-curve words.
        #[arg(long, default_value_t = DELTA_DEPTH)]
        depth: usize,
        /// Write the certificate JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 0 on the sketch-only branch.
        #[arg(long)]
        allow_sketch: bool,
    },
    /// Orders of the reflection subgroups of the symmetric group.
    Symgroup {
        #[arg(long, short = 'b')]
        punctures: usize,
    },
    /// Order of the generated subgroup of Sp(2g, F_p).
    Quotient {
        #[command(flatten)]
        surface: Surface,
        #[arg(long, short = 'p', default_value_t = 2)]
        prime: u64,
    },
    /// Homology classes of every named curve.
    DumpCurves(Surface),
}

struct Outcome {
    ok: bool,
    json: Value,
    text: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("json values serialize") + "\n"
            } else {
                o.text
            };
            let _ = out.write_all(body.as_bytes());
            if o.ok {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidArgument(_)
                | Error::InvalidGenus(_)
                | Error::NotGeneratedByInvolutions(_)
                | Error::NoLantern(_)
                | Error::SearchBudgetExceeded(_) => EXIT_INVALID,
                _ => EXIT_CHECK_FAILED,
            }
        }
    }
}

fn params(s: &Surface) -> Result<SurfaceParams, Error> {
    if s.genus > MAX_GENUS || s.punctures > MAX_PUNCTURES {
        return Err(Error::InvalidArgument(format!(
            "genus and punctures are limited to {MAX_GENUS} and {MAX_PUNCTURES}"
        )));
    }
    SurfaceParams::new(s.genus, s.punctures)
}

fn execute(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Relations(s) => relations(&params(s)?),
        Command::Lantern(s) => lantern(&params(s)?),
        Command::Certify {
            surface,
            depth,
            out,
            allow_sketch,
        } => certify_cmd(&params(surface)?, *depth, out.as_ref(), *allow_sketch),
        Command::Symgroup { punctures } => symgroup(*punctures),
        Command::Quotient { surface, prime } => quotient(&params(surface)?, *prime),
        Command::DumpCurves(s) => dump_curves(&params(s)?),
    }
}

fn relations(p: &SurfaceParams) -> Result<Outcome, Error> {
    let report = check_relations(p);
    let mut text = String::new();
    for e in &report.entries {
        text += &format!(
            "{:4} {:22} {}\n",
            if e.holds { "ok" } else { "FAIL" },
            e.relation,
            e.instance
        );
    }
    let failed = report.failures().count();
    text += &format!("{} checks, {} failed\n", report.entries.len(), failed);
    Ok(Outcome {
        ok: report.all_hold(),
        json: json!({ "params": { "g": p.g, "b": p.b }, "relations": report, "ok": report.all_hold() }),
        text,
    })
}

fn lantern(p: &SurfaceParams) -> Result<Outcome, Error> {
    let cfg = lantern_config(p)?;
    let holds = lantern_identity_holds(&p.lattice(), &cfg)?;
    let mut text = format!("center {} pivot {:?}\n", cfg.center, cfg.pivot);
    for (id, c) in cfg.boundary.iter().zip(&cfg.b_classes) {
        text += &format!("  boundary {id}: {:?}\n", c.coords);
    }
    for (k, c) in cfg.x_classes.iter().enumerate() {
        text += &format!("  x{}: {:?}\n", k + 1, c.coords);
    }
    text += &format!(
        "lantern identity {}\n",
        if holds { "holds" } else { "FAILS" }
    );
    Ok(Outcome {
        ok: holds,
        json: json!({
            "g": p.g,
            "center": cfg.center,
            "pivot": cfg.pivot,
            "boundary": cfg.boundary.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "boundary_classes": cfg.b_classes.iter().map(|c| c.coords.clone()).collect::<Vec<_>>(),
            "x_classes": cfg.x_classes.iter().map(|c| c.coords.clone()).collect::<Vec<_>>(),
            "holds": holds,
        }),
        text,
    })
}

fn certify_cmd(
    p: &SurfaceParams,
    depth: usize,
    out: Option<&PathBuf>,
    allow_sketch: bool,
) -> Result<Outcome, Error> {
    let opts = CertifyOptions {
        delta_depth: depth,
        ..CertifyOptions::default()
    };
    let cert = certify_with(p.g, p.b, opts)?;
    let json = serde_json::to_value(&cert).expect("certificates serialize");
    if let Some(path) = out {
        std::fs::write(path, cert.to_json() + "\n")
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
    }
    let sketch = cert.branch.flavor.is_none();
    let mut text = format!(
        "genus {} with {} punctures: branch {} ({} involutions)\n",
        p.g, p.b, cert.branch.case, cert.branch.count
    );
    if sketch && p.g == 3 {
        text += "the pair-swap involutions would need fixed points to carry an odd number of punctures\n";
    }
    let covered = cert.coverage.iter().filter(|c| c.ok).count();
    text += &format!(
        "coverage {covered}/{} twist words verified\n",
        cert.coverage.len()
    );
    text += &format!(
        "punctures: <r1,r2> order {}, images order {} of {}\n",
        cert.sym.order_r1r2, cert.sym.order_images, cert.sym.expected
    );
    match (&cert.quotient.order, &cert.quotient.skipped) {
        (Some(n), _) => {
            text += &format!(
                "quotient mod {}: order {n}, expected {}\n",
                cert.quotient.p, cert.quotient.expected
            )
        }
        (None, Some(why)) => text += &format!("{why}\n"),
        _ => {}
    }
    for d in &cert.delta {
        match &d.word {
            Some(w) => text += &format!("delta{}: {w}\n", d.j),
            None => text += &format!("delta{}: {}\n", d.j, d.note),
        }
    }
    for f in &cert.failures {
        text += &format!("failure: {f}\n");
    }
    text += &format!("verdict: {}\n", cert.verdict);
    Ok(Outcome {
        ok: cert.verified || (sketch && allow_sketch),
        json,
        text,
    })
}

fn symgroup(b: usize) -> Result<Outcome, Error> {
    if b > MAX_PUNCTURES {
        return Err(Error::InvalidArgument(format!(
            "punctures are limited to {MAX_PUNCTURES}"
        )));
    }
    let [r1, r2, r3] = [Reflection::R1, Reflection::R2, Reflection::R3].map(|r| canonical_r(b, r));
    let dihedral = schreier_sims(&[r1.clone(), r2.clone()], b)?.order();
    let full = schreier_sims(&[r1.clone(), r2.clone(), r3.clone()], b)?.order();
    let expected_dihedral: u64 = match b {
        0 | 1 => 1,
        2 => 2,
        _ => 2 * b as u64,
    };
    let ok = dihedral == expected_dihedral.into() && full == factorial(b);
    let text = format!(
        "r1 = {r1}\nr2 = {r2}\nr3 = {r3}\norder <r1,r2> = {dihedral}\norder <r1,r2,r3> = {full} (b! = {})\n",
        factorial(b)
    );
    Ok(Outcome {
        ok,
        json: json!({
            "b": b,
            "r1": r1, "r2": r2, "r3": r3,
            "order_r1r2": dihedral.to_string(),
            "order_r1r2r3": full.to_string(),
            "factorial": factorial(b).to_string(),
            "ok": ok,
        }),
        text,
    })
}

/// Lickorish twists for genus at most 2, the branch involutions from genus 3.
fn quotient(p: &SurfaceParams, prime: u64) -> Result<Outcome, Error> {
    let (source, gens) = if p.g < 3 {
        ("lickorish twists", lickorish_generators(p.g, prime)?)
    } else {
        let branch = crate::certify::select_branch(p.g, p.b)?;
        let flavor = branch.flavor.ok_or_else(|| {
            Error::InvalidArgument("the sketch-only branch has no involution set".into())
        })?;
        let set = involution_set(p, flavor)?;
        let gens = set
            .iter()
            .map(|(_, e)| ModPMatrix::from_rep(e, prime))
            .collect::<Result<Vec<_>, _>>()?;
        ("branch involutions", gens)
    };
    let expected = sp_order(p.g, prime);
    let order = enumerate_generated(&gens, DEFAULT_CAP)?.order();
    let ok = order.is_some_and(|n| expected == n.into());
    let text = match order {
        Some(n) => format!(
            "{source} mod {prime}: order {n}, |Sp({}, F_{prime})| = {expected}\n",
            2 * p.g
        ),
        None => format!("{source} mod {prime}: more than {DEFAULT_CAP} elements\n"),
    };
    Ok(Outcome {
        ok,
        json: json!({
            "g": p.g,
            "p": prime,
            "source": source,
            "order": order,
            "expected": expected.to_string(),
            "ok": ok,
        }),
        text,
    })
}

fn dump_curves(p: &SurfaceParams) -> Result<Outcome, Error> {
    let reg = build_registry(p);
    let table = reg.table();
    let text: String = table
        .iter()
        .map(|(n, c)| format!("{n:10} {c:?}\n"))
        .collect();
    let curves: Vec<Value> = table
        .iter()
        .map(|(n, c)| json!({ "curve": n, "coords": c }))
        .collect();
    Ok(Outcome {
        ok: true,
        json: json!({ "g": p.g, "b": p.b, "curves": curves }),
        text,
    })
}
