//! Inner parallel bodies, erosion by polytopes, form bodies and the extremal
//! body `Ω + tΩ*`.
//!
//! Erosion works entirely in the halfspace representation. With unit facet
//! normals `a_i`, `K ∼ E = {x : ⟨a_i, x⟩ <= b_i − h(E, a_i)}`, so the ball
//! case only needs every offset lowered by `t` and the ball itself is never
//! built.

use crate::body::{ConvexBody, HalfSpace};
use crate::error::{check_dim, GeomError, Result};
use crate::metrics::inradius;
use crate::numeric::Tolerance;

/// Outcome of an erosion: a genuine body, or the signal that it collapsed
/// (empty or lower-dimensional).
#[derive(Debug, Clone)]
pub enum Erosion {
    Body(ConvexBody),
    /// `inradius` is the inradius of the body being eroded by a ball, or the
    /// (nonpositive) Chebyshev radius of the result for polytope erosion.
    Collapsed { inradius: f64 },
}

impl Erosion {
    pub fn body(&self) -> Option<&ConvexBody> {
        match self {
            Erosion::Body(b) => Some(b),
            Erosion::Collapsed { .. } => None,
        }
    }

    pub fn into_body(self) -> Option<ConvexBody> {
        match self {
            Erosion::Body(b) => Some(b),
            Erosion::Collapsed { .. } => None,
        }
    }

    pub fn is_collapsed(&self) -> bool {
        matches!(self, Erosion::Collapsed { .. })
    }
}

/// `Ω_t = Ω ∼ tB`, the points of `Ω` at distance at least `t` from its complement.
pub fn erode_ball(body: &ConvexBody, t: f64) -> Result<Erosion> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(GeomError::InvalidInput(format!("erosion distance must be >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(Erosion::Body(body.clone()));
    }
    let r = inradius(body)?.radius;
    if t >= r - Tolerance::DEFAULT.band(t, r) {
        return Ok(Erosion::Collapsed { inradius: r });
    }
    let hs: Vec<HalfSpace> = body
        .halfspaces()
        .iter()
        .map(|h| h.with_offset(h.offset() - t))
        .collect();
    match ConvexBody::from_halfspaces(hs) {
        Ok(b) => Ok(Erosion::Body(b)),
        Err(GeomError::EmptyBody | GeomError::LowerDimensional) => Ok(Erosion::Collapsed { inradius: r }),
        Err(e) => Err(e),
    }
}

/// Minkowski difference `K ∼ E = {x : x + E ⊆ K}`.
pub fn erode_body(k: &ConvexBody, e: &ConvexBody) -> Result<Erosion> {
    check_dim(k.dim(), e.dim())?;
    let hs: Vec<HalfSpace> = k
        .halfspaces()
        .iter()
        .map(|h| h.with_offset(h.offset() - e.support_unchecked(h.normal())))
        .collect();
    match ConvexBody::from_halfspaces(hs.clone()) {
        Ok(b) => Ok(Erosion::Body(b)),
        Err(GeomError::EmptyBody | GeomError::LowerDimensional) => {
            let radius = crate::body::chebyshev_ball(&hs)?
                .map(|(r, _)| r)
                .unwrap_or(0.0);
            Ok(Erosion::Collapsed { inradius: radius.min(0.0) })
        }
        Err(err) => Err(err),
    }
}

/// Form body `Ω*`: the facet normals of `Ω` with every offset set to 1, so
/// each facet touches the unit ball.
pub fn form_body(body: &ConvexBody) -> Result<ConvexBody> {
    let hs: Vec<HalfSpace> = body.halfspaces().iter().map(|h| h.with_offset(1.0)).collect();
    ConvexBody::from_halfspaces(hs)
}

/// `Ω̃ = Ω + tΩ*`, the largest-perimeter body whose inner parallel body at
/// distance `t` is `Ω`.
pub fn extremal_body(body: &ConvexBody, t: f64) -> Result<ConvexBody> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(GeomError::InvalidInput(format!("distance must be >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(body.clone());
    }
    body.minkowski_sum(&form_body(body)?.scale(t)?)
}
