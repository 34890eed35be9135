use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generate::derive_seed;
use super::VerificationReport;
use crate::body::{ConvexBody, HalfSpace};
use crate::error::{GeomError, Result};
use crate::metrics::{
    inradius, monte_carlo_parallel_volume, quermassintegrals, random_unit, steiner_eval,
    surface_area, volume, width,
};
use crate::numeric::{solve_lp, LpStatus, Vector};
use crate::parallel::{erode_ball, extremal_body, form_body, Erosion};

/// Relative slack on perimeter inequalities.
pub const BOUND_TOL: f64 = 1e-7;
/// Relative band separating equality from strict inequality.
pub const EQUALITY_TOL: f64 = 1e-6;
/// Tolerance on inradius identities, relative to `max(1, r)`.
pub const RADIUS_TOL: f64 = 1e-8;
/// Relative slack in the width bounds.
pub const WIDTH_TOL: f64 = 1e-8;

/// Erosion fractions `t / r` used by the suites.
pub const T_FRACTIONS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

pub fn radius_grid(r: f64, fractions: &[f64]) -> Vec<f64> {
    fractions.iter().map(|f| f * r).collect()
}

/// `max(x, 0)^k`.
pub fn clamped_power(x: f64, k: usize) -> f64 {
    x.max(0.0).powi(k as i32)
}

/// Perimeter of `Ω_t`, zero once the body collapses.
pub fn eroded_perimeter(body: &ConvexBody, t: f64) -> Result<f64> {
    Ok(match erode_ball(body, t)? {
        Erosion::Body(b) => surface_area(&b),
        Erosion::Collapsed { .. } => 0.0,
    })
}

fn perimeter_margins(body: &ConvexBody, t_grid: &[f64]) -> Result<(f64, Vec<f64>)> {
    let n = body.dim();
    let p = surface_area(body);
    let r = inradius(body)?.radius;
    let margins = t_grid
        .iter()
        .map(|&t| Ok(eroded_perimeter(body, t)? - clamped_power(1.0 - t / r, n - 1) * p))
        .collect::<Result<_>>()?;
    Ok((p, margins))
}

/// `|∂Ω_t| − (1 − t/r)₊^{n−1} |∂Ω|` for each `t`.
pub fn check_main_bound(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let (p, margins) = perimeter_margins(body, t_grid)?;
    let equality = margins.iter().all(|m| m.abs() <= EQUALITY_TOL * p);
    let report = VerificationReport::new("main-bound", "", t_grid.to_vec(), margins, BOUND_TOL * p);
    Ok(if equality { report.with_note("equality") } else { report })
}

/// Equality in the main bound exactly for bodies homothetic to their form body.
///
/// Margins are the raw main-bound margins. A tangential body passes when
/// every `|margin| <= 1e-6 |∂Ω|`; any other body passes when no margin is
/// below `−1e-7 |∂Ω|`, and is flagged inconclusive if some margin does not
/// clear `1e-6 |∂Ω|`.
pub fn check_equality_iff(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let tangential = body.is_homothetic(&form_body(body)?)?.is_some();
    let (p, margins) = perimeter_margins(body, t_grid)?;
    let band = EQUALITY_TOL * p;
    let mut report = VerificationReport::new("equality", "", t_grid.to_vec(), margins, band);
    if tangential {
        report.passed = report.margins.iter().all(|m| m.abs() <= band);
        report.note = Some("tangential".into());
    } else {
        report.passed = report.worst_margin >= -BOUND_TOL * p;
        report.inconclusive = report.passed && report.worst_margin <= band;
        report.note = Some("not tangential".into());
    }
    Ok(report)
}

/// `−|r_t − (r − t)|`, with `r_t = 0` once the body collapses.
pub fn check_inradius_lemma(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let r = inradius(body)?.radius;
    let margins = t_grid
        .iter()
        .map(|&t| {
            let rt = match erode_ball(body, t)? {
                Erosion::Body(b) => inradius(&b)?.radius,
                Erosion::Collapsed { .. } => 0.0,
            };
            Ok(-(rt - (r - t).max(0.0)).abs())
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(
        "inradius-lemma",
        "",
        t_grid.to_vec(),
        margins,
        RADIUS_TOL * r.max(1.0),
    ))
}

/// Largest `λ` with `x + λΩ* ⊆ Ω`, by LP over the facets of `Ω`:
/// `⟨a_i, x⟩ + λ h(Ω*, a_i) <= b_i`. Returns `(λ*, x*)`.
pub fn form_inclusion(body: &ConvexBody) -> Result<(f64, Vector)> {
    let n = body.dim();
    let fb = form_body(body)?;
    let constraints: Vec<(Vector, f64)> = body
        .halfspaces()
        .iter()
        .map(|h| {
            let mut a = h.normal().clone().insert_row(n, 0.0);
            a[n] = fb.support(h.normal())?;
            Ok((a, h.offset()))
        })
        .collect::<Result<_>>()?;
    let mut objective = Vector::zeros(n + 1);
    objective[n] = 1.0;
    let res = solve_lp(&objective, &constraints)?;
    match (res.status, res.point) {
        (LpStatus::Optimal, Some(p)) => Ok((p[n], p.rows(0, n).into_owned())),
        _ => Err(GeomError::Numeric("form inclusion LP has no optimum".into())),
    }
}

/// Margin `−|λ* − r|`; additionally fails if `x* + λ*Ω*` is not inside `Ω`.
pub fn check_form_inclusion(body: &ConvexBody) -> Result<VerificationReport> {
    let r = inradius(body)?.radius;
    let (lambda, x) = form_inclusion(body)?;
    let placed = form_body(body)?.scale(lambda)?.translate(&x)?;
    let inside = body.contains_body_within(&placed, body.eps().max(1e-9 * lambda))?;
    let mut report = VerificationReport::new(
        "form-inclusion",
        "",
        vec![],
        vec![-(lambda - r).abs()],
        RADIUS_TOL * r.max(1.0),
    )
    .with_note(format!("lambda={lambda}"));
    if !inside {
        report.passed = false;
        report.note = Some(format!("lambda={lambda}; scaled form body not contained"));
    }
    Ok(report)
}

fn is_admissible(candidate: &ConvexBody, body: &ConvexBody, t: f64) -> Result<bool> {
    let slack = BOUND_TOL * body.extent().max(1.0);
    match erode_ball(candidate, t)? {
        Erosion::Body(e) => e.same_set(body, slack),
        Erosion::Collapsed { .. } => Ok(false),
    }
}

/// Random polytope `Q ⊇ B`: random unit normals at offset 1.
fn circumscribed_polytope(rng: &mut ChaCha8Rng, n: usize) -> Result<ConvexBody> {
    for _ in 0..100 {
        let m = rng.gen_range(n + 1..=4 * n + 4);
        let hs: Vec<HalfSpace> = (0..m)
            .map(|_| HalfSpace::new(random_unit(rng, n), 1.0))
            .collect::<Result<_>>()?;
        match ConvexBody::from_halfspaces(hs) {
            Err(GeomError::UnboundedBody) => continue,
            other => return other,
        }
    }
    Err(GeomError::Generator("no bounded circumscribed polytope".into()))
}

/// One body squeezed between `Ω + tB` and `Ω̃`: `(Ω + tQ) ∩ Ω̃` for a random
/// `Q ⊇ B`, sometimes enlarged by a random subset of the vertices of `Ω̃`.
fn sample_between(body: &ConvexBody, extremal: &ConvexBody, t: f64, rng: &mut ChaCha8Rng) -> Result<ConvexBody> {
    let q = circumscribed_polytope(rng, body.dim())?;
    let outer = body.minkowski_sum(&q.scale(t)?)?;
    let mut hs = outer.halfspaces().to_vec();
    hs.extend_from_slice(extremal.halfspaces());
    let cut = ConvexBody::from_halfspaces(hs)?;
    if !rng.gen_bool(0.5) {
        return Ok(cut);
    }
    let mut points = cut.vertices().to_vec();
    points.extend(extremal.vertices().iter().filter(|_| rng.gen_bool(0.3)).cloned());
    ConvexBody::from_vertices(&points)
}

/// Among bodies `Ω̂` with `Ω̂_t = Ω`, `Ω̃ = Ω + tΩ*` has the largest perimeter.
///
/// Margins are `|∂Ω̃| − |∂Ω̂|` over the admissible trials; the first entry
/// is `Ω̃` itself, whose admissibility is required for a pass.
pub fn check_maximality(body: &ConvexBody, t: f64, trials: usize, seed: u64) -> Result<VerificationReport> {
    if !(t > 0.0) || trials == 0 {
        return Err(GeomError::InvalidInput("maximality needs t > 0 and at least one trial".into()));
    }
    let extremal = extremal_body(body, t)?;
    let top = surface_area(&extremal);
    let self_admissible = is_admissible(&extremal, body, t)?;
    let samples: Vec<Option<f64>> = (0..trials as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, k, 0));
            let cand = sample_between(body, &extremal, t, &mut rng)?;
            Ok(is_admissible(&cand, body, t)?.then(|| surface_area(&cand)))
        })
        .collect::<Result<_>>()?;
    let admissible = samples.iter().flatten().count();
    let mut margins = vec![0.0];
    margins.extend(samples.iter().flatten().map(|p| top - p));
    let mut report = VerificationReport::new("maximality", "", vec![t], margins, BOUND_TOL * top)
        .with_note(format!("admissible {admissible}/{trials}"));
    if !self_admissible {
        report.passed = false;
        report.note = Some("extremal body is not admissible".into());
    }
    report.inconclusive = admissible * 10 < trials;
    Ok(report)
}

fn exact_width(body: &ConvexBody) -> Result<f64> {
    let w = width(body);
    if w.approximate {
        return Err(GeomError::UnsupportedDimension(body.dim()));
    }
    Ok(w.value)
}

/// Upper Steinhagen constant: `ω <= k_n r`.
pub fn steinhagen_constant(n: usize) -> f64 {
    let nf = n as f64;
    if n % 2 == 1 {
        2.0 * nf.sqrt()
    } else {
        2.0 * (nf + 1.0) / (nf + 2.0).sqrt()
    }
}

/// `|∂Ω_t| − (1 − k_n t/ω)₊^{n−1} |∂Ω|` with `k_n` the Steinhagen constant.
pub fn check_corollary_width(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let n = body.dim();
    let w = exact_width(body)?;
    let c = steinhagen_constant(n) / w;
    let p = surface_area(body);
    let margins = t_grid
        .iter()
        .map(|&t| Ok(eroded_perimeter(body, t)? - clamped_power(1.0 - c * t, n - 1) * p))
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new("corollary-width", "", t_grid.to_vec(), margins, BOUND_TOL * p))
}

/// `2r <= ω <= k_n r`; margins `[ω − 2r, k_n r − ω]`.
pub fn check_steinhagen(body: &ConvexBody) -> Result<VerificationReport> {
    let w = exact_width(body)?;
    let r = inradius(body)?.radius;
    let margins = vec![w - 2.0 * r, steinhagen_constant(body.dim()) * r - w];
    Ok(VerificationReport::new("steinhagen", "", vec![], margins, WIDTH_TOL * w)
        .with_note(format!("width/2r={}", w / (2.0 * r))))
}

/// `|Ω ∼ tB|` minus the alternating Steiner polynomial. Report only: always
/// passes, the note records the sign of each margin.
pub fn matheron_probe(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let q = quermassintegrals(body)?;
    let margins: Vec<f64> = t_grid
        .iter()
        .map(|&t| {
            let inner = match erode_ball(body, t)? {
                Erosion::Body(b) => volume(&b),
                Erosion::Collapsed { .. } => 0.0,
            };
            Ok(inner - steiner_eval(&q, t, true))
        })
        .collect::<Result<_>>()?;
    let signs: String = margins
        .iter()
        .map(|m| if *m > 0.0 { '+' } else if *m < 0.0 { '-' } else { '0' })
        .collect();
    let mut report = VerificationReport::new("matheron-probe", "", t_grid.to_vec(), margins, 0.0)
        .with_note(format!("signs {signs}"));
    report.passed = true;
    Ok(report)
}

/// `(1 − s)₊^{n−1} − (1 − (n−1)s)₊` over the grid, exact.
pub fn check_vdb_dominance(n_values: &[usize], grid: &[f64]) -> Result<VerificationReport> {
    let mut t_values = Vec::new();
    let mut margins = Vec::new();
    for &n in n_values {
        if n < 2 {
            return Err(GeomError::InvalidInput(format!("dimension {n} < 2")));
        }
        for &s in grid {
            t_values.push(s);
            margins.push(clamped_power(1.0 - s, n - 1) - (1.0 - (n - 1) as f64 * s).max(0.0));
        }
    }
    Ok(VerificationReport::new("vdb-dominance", "scalar", t_values, margins, 0.0))
}

/// `(1 + t/r)^{n−1} |∂Ω| − |∂(Ω + tΩ*)|`.
pub fn check_chain_endpoint(body: &ConvexBody, t_grid: &[f64]) -> Result<VerificationReport> {
    let n = body.dim();
    let p = surface_area(body);
    let r = inradius(body)?.radius;
    let margins = t_grid
        .iter()
        .map(|&t| Ok((1.0 + t / r).powi(n as i32 - 1) * p - surface_area(&extremal_body(body, t)?)))
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new("chain-endpoint", "", t_grid.to_vec(), margins, BOUND_TOL * p))
}

/// `3σ − |MC − steiner_eval|` for the outer parallel volume.
pub fn check_steiner_consistency(
    body: &ConvexBody,
    t_grid: &[f64],
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let q = quermassintegrals(body)?;
    let margins: Vec<f64> = t_grid
        .par_iter()
        .enumerate()
        .map(|(k, &t)| {
            let (est, se) = monte_carlo_parallel_volume(body, t, samples, derive_seed(seed, k as u64, 1));
            3.0 * se - (est - steiner_eval(&q, t, false)).abs()
        })
        .collect();
    Ok(VerificationReport::new("steiner", "", t_grid.to_vec(), margins, 0.0))
}
