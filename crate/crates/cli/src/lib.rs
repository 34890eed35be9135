//! Command-line front end for `innerbody`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
//! error, 3 inconsistent body file, 4 erosion collapsed, 5 unsupported
//! dimension, 6 internal numeric failure.

pub mod bodyfile;
pub mod error;
pub mod format;
pub mod render;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use innerbody::metrics::{inradius, quermassintegrals, surface_area, volume, width};
use innerbody::parallel::{erode_ball, extremal_body, form_body, Erosion};
use innerbody::verify::{self, SuiteBody};

use crate::bodyfile::BodyFile;
use crate::error::{CliError, CliResult};
use crate::format::{sig, sig_tuple};

#[derive(Debug, Parser)]
#[command(name = "innerbody", version, about = "Convex polytopes, inner parallel bodies and the perimeter bound")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print dimension, counts, volume, surface area, inradius, width,
    /// quermassintegrals and whether the body is tangential.
    Info { path: PathBuf },
    /// Inner parallel body at distance t.
    Erode {
        path: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Form body: the facet normals re-offset to touch the unit ball.
    Formbody {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The extremal body Ω + tΩ*.
    Extremal {
        path: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minkowski sum of two bodies.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and write one JSON line per (body, check).
    Verify {
        /// main-bound, equality, inradius-lemma, form-inclusion, maximality,
        /// corollary-width, steinhagen, matheron-probe, vdb-dominance,
        /// chain-endpoint or all.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
        dims: Vec<usize>,
        /// Check this body file instead of generated bodies.
        #[arg(long)]
        body: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a planar body and its inner parallel bodies as SVG.
    Render {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

fn emit_body(out: Option<&Path>, body: &innerbody::ConvexBody, name: String) -> CliResult<()> {
    emit(out, &BodyFile::from_body(body, Some(name)).to_json())
}

pub fn info_text(body: &innerbody::ConvexBody, name: &str) -> CliResult<String> {
    let n = body.dim();
    let ball = inradius(body)?;
    let center: Vec<f64> = ball.center.iter().copied().collect();
    let tangential = body.is_homothetic(&form_body(body)?)?.is_some();
    let mut lines = vec![
        format!("name={name}"),
        format!("dim={n}"),
        format!("facets={} vertices={}", body.halfspaces().len(), body.vertices().len()),
        format!("volume={}", sig(volume(body))),
        format!("surface_area={}", sig(surface_area(body))),
        format!("r={} center={}", sig(ball.radius), sig_tuple(&center)),
    ];
    let w = width(body);
    if w.approximate {
        lines.push(format!("width={} approximate=true", sig(w.value)));
    } else {
        lines.push(format!("width={}", sig(w.value)));
        lines.push(format!("quermassintegrals={}", sig_tuple(&quermassintegrals(body)?.w)));
    }
    lines.push(format!("tangential={tangential}"));
    Ok(lines.join("\n") + "\n")
}

fn verify(
    suite: &str,
    seed: u64,
    count: usize,
    dims: &[usize],
    body: Option<&Path>,
    out: Option<&Path>,
) -> CliResult<()> {
    if !verify::SUITES.contains(&suite) {
        return Err(CliError::Usage(format!(
            "unknown suite {suite:?}; expected one of {}",
            verify::SUITES.join(", ")
        )));
    }
    let reports = match body {
        None => verify::run_suite(suite, seed, count, dims)?,
        Some(path) => {
            let (body, id) = bodyfile::load(path)?;
            let sb = SuiteBody { id, seed, body };
            let checks: Vec<&str> = match suite {
                "all" => verify::SUITES
                    .iter()
                    .copied()
                    .filter(|c| !matches!(*c, "all" | "vdb-dominance"))
                    .collect(),
                "vdb-dominance" => vec![],
                other => vec![other],
            };
            let mut reports = checks
                .iter()
                .map(|c| verify::run_check(c, &sb))
                .collect::<Result<Vec<_>, _>>()?;
            if matches!(suite, "all" | "vdb-dominance") {
                reports.extend(verify::run_suite("vdb-dominance", seed, 0, &[])?);
            }
            reports
        }
    };
    emit(out, &report::to_lines(&reports))?;
    let failed = report::failures(&reports);
    let inconclusive = reports.iter().filter(|r| r.inconclusive).count();
    eprintln!("{} reports, {failed} failed, {inconclusive} inconclusive", reports.len());
    if failed > 0 {
        return Err(CliError::ChecksFailed { failed });
    }
    Ok(())
}

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Info { path } => {
            let (body, name) = bodyfile::load(&path)?;
            emit(None, &info_text(&body, &name)?)
        }
        Command::Erode { path, t, out } => {
            let (body, name) = bodyfile::load(&path)?;
            match erode_ball(&body, t)? {
                Erosion::Body(e) => emit_body(out.as_deref(), &e, format!("{name} eroded by {}", sig(t))),
                Erosion::Collapsed { inradius } => Err(CliError::Collapsed { inradius }),
            }
        }
        Command::Formbody { path, out } => {
            let (body, name) = bodyfile::load(&path)?;
            emit_body(out.as_deref(), &form_body(&body)?, format!("form body of {name}"))
        }
        Command::Extremal { path, t, out } => {
            let (body, name) = bodyfile::load(&path)?;
            emit_body(out.as_deref(), &extremal_body(&body, t)?, format!("{name} + {} form body", sig(t)))
        }
        Command::Sum { a, b, out } => {
            let (ka, na) = bodyfile::load(&a)?;
            let (kb, nb) = bodyfile::load(&b)?;
            emit_body(out.as_deref(), &ka.minkowski_sum(&kb)?, format!("{na} + {nb}"))
        }
        Command::Verify { suite, seed, count, dims, body, out } => {
            verify(&suite, seed, count, &dims, body.as_deref(), out.as_deref())
        }
        Command::Render { spec, out } => {
            let rs = render::read_spec(&spec)?;
            let base = spec.parent().unwrap_or(Path::new("."));
            let body = render::spec_body(&rs, base)?;
            emit(out.as_deref(), &render::render(&body, &rs)?)
        }
    }
}
