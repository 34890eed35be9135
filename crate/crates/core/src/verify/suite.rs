//! Named suites: a checker (or all of them) run over seeded random bodies.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::*;
use super::generate::{derive_seed, generate, GeneratorConfig, GeneratorKind};
use super::VerificationReport;
use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::metrics::inradius;

pub const SUITES: [&str; 11] = [
    "main-bound",
    "equality",
    "inradius-lemma",
    "form-inclusion",
    "maximality",
    "corollary-width",
    "steinhagen",
    "matheron-probe",
    "vdb-dominance",
    "chain-endpoint",
    "all",
];

pub const MAXIMALITY_TRIALS: usize = 50;
pub const MAXIMALITY_FRACTION: f64 = 0.3;

#[derive(Debug, Clone)]
pub struct SuiteBody {
    pub id: String,
    pub seed: u64,
    pub body: ConvexBody,
}

fn config_for(seed: u64, dim: usize, index: usize) -> GeneratorConfig {
    let body_seed = derive_seed(seed, dim as u64, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(body_seed ^ 0x5151);
    let kind = match index % 10 {
        0..=4 => GeneratorKind::HullOfRandomPoints,
        5 | 6 => GeneratorKind::Tangential,
        7 => GeneratorKind::Rectangle,
        8 => GeneratorKind::Simplex,
        _ if dim <= 3 => GeneratorKind::RegularMgon,
        _ => GeneratorKind::HullOfRandomPoints,
    };
    let size = match (kind, dim) {
        (GeneratorKind::HullOfRandomPoints, 2) => rng.gen_range(5..=40),
        (GeneratorKind::HullOfRandomPoints, 3) => rng.gen_range(8..=40),
        (GeneratorKind::HullOfRandomPoints, _) => rng.gen_range(dim + 2..=dim + 8),
        (GeneratorKind::Tangential, _) => rng.gen_range(dim + 1..=dim + 12),
        (GeneratorKind::RegularMgon, _) => rng.gen_range(3..=12),
        _ => 0,
    };
    GeneratorConfig {
        seed: body_seed,
        dim,
        kind,
        size,
    }
}

/// The `count` random bodies of dimension `dim` used by every suite.
pub fn suite_bodies(seed: u64, dim: usize, count: usize) -> Result<Vec<SuiteBody>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let cfg = config_for(seed, dim, i);
            Ok(SuiteBody {
                id: format!("{}-d{dim}-{i:03}", cfg.kind.name()),
                seed: cfg.seed,
                body: generate(&cfg)?,
            })
        })
        .collect()
}

/// Runs one checker on one body; `check` is a suite name other than `all`
/// and `vdb-dominance`.
pub fn run_check(check: &str, sb: &SuiteBody) -> Result<VerificationReport> {
    let body = &sb.body;
    let r = inradius(body)?.radius;
    let grid = radius_grid(r, &T_FRACTIONS);
    let report = match check {
        "main-bound" => check_main_bound(body, &grid),
        "equality" => check_equality_iff(body, &grid),
        "inradius-lemma" => check_inradius_lemma(body, &grid),
        "form-inclusion" => check_form_inclusion(body),
        "maximality" => check_maximality(
            body,
            MAXIMALITY_FRACTION * r,
            MAXIMALITY_TRIALS,
            derive_seed(sb.seed, 6, 0),
        ),
        "corollary-width" => check_corollary_width(body, &grid),
        "steinhagen" => check_steinhagen(body),
        "matheron-probe" => matheron_probe(body, &grid),
        "chain-endpoint" => check_chain_endpoint(body, &grid),
        other => return Err(GeomError::InvalidInput(format!("unknown check {other:?}"))),
    }?;
    Ok(VerificationReport {
        body: sb.id.clone(),
        ..report
    })
}

fn vdb_report() -> Result<VerificationReport> {
    let grid: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    check_vdb_dominance(&(2..=10).collect::<Vec<_>>(), &grid)
}

/// Runs a named suite over `count` bodies per dimension. Reports come back
/// in a fixed order: by dimension, then body, then check.
pub fn run_suite(name: &str, seed: u64, count: usize, dims: &[usize]) -> Result<Vec<VerificationReport>> {
    if !SUITES.contains(&name) {
        return Err(GeomError::InvalidInput(format!("unknown suite {name:?}")));
    }
    if name == "vdb-dominance" {
        return Ok(vec![vdb_report()?]);
    }
    let checks: Vec<&str> = if name == "all" {
        SUITES
            .iter()
            .copied()
            .filter(|c| !matches!(*c, "all" | "vdb-dominance"))
            .collect()
    } else {
        vec![name]
    };
    let needs_exact = checks
        .iter()
        .any(|c| matches!(*c, "corollary-width" | "steinhagen" | "matheron-probe"));
    if needs_exact {
        if let Some(&d) = dims.iter().find(|&&d| !(2..=3).contains(&d)) {
            return Err(GeomError::UnsupportedDimension(d));
        }
    }
    let mut reports = Vec::new();
    for &dim in dims {
        let bodies = suite_bodies(seed, dim, count)?;
        let per_body: Vec<Vec<VerificationReport>> = bodies
            .par_iter()
            .map(|sb| checks.iter().map(|c| run_check(c, sb)).collect())
            .collect::<Result<_>>()?;
        reports.extend(per_body.into_iter().flatten());
    }
    if name == "all" {
        reports.push(vdb_report()?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let a = run_suite("all", 7, 4, &[2, 3]).unwrap();
        let b = run_suite("all", 7, 4, &[2, 3]).unwrap();
        assert_eq!(a, b);
        for r in &a {
            assert!(r.passed, "{r:?}");
        }
        assert_eq!(a.len(), 2 * 4 * 9 + 1);
    }

    #[test]
    fn unknown_and_unsupported() {
        assert!(matches!(run_suite("nope", 1, 1, &[2]), Err(GeomError::InvalidInput(_))));
        assert!(matches!(
            run_suite("steinhagen", 1, 1, &[4]),
            Err(GeomError::UnsupportedDimension(4))
        ));
        assert_eq!(run_suite("vdb-dominance", 1, 0, &[]).unwrap().len(), 1);
    }
}
