//! Convex polytopes with materialized halfspace and vertex representations.

use crate::error::{check_dim, GeomError, Result};
use crate::numeric::{
    affine_rank, convex_hull, extent, least_squares, magnitude, solve_lp, LpStatus, Tolerance,
    Vector, REL_TOL,
};

/// Angular band used to decide that two facet normals coincide.
pub const NORMAL_MATCH_TOL: f64 = 1e-7;

/// `{x : ⟨normal, x⟩ <= offset}` with a unit normal.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    normal: Vector,
    offset: f64,
}

impl HalfSpace {
    /// Builds a halfspace from any nonzero normal; the normal is rescaled to
    /// unit length and the offset with it.
    pub fn new(normal: Vector, offset: f64) -> Result<Self> {
        let len = normal.norm();
        if !(len > 0.0) || !len.is_finite() || !offset.is_finite() {
            return Err(GeomError::InvalidInput(
                "halfspace normal must be finite and nonzero".into(),
            ));
        }
        Ok(Self {
            normal: normal / len,
            offset: offset / len,
        })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Signed distance of `p` past the boundary (positive outside).
    pub fn excess(&self, p: &Vector) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub(crate) fn with_offset(&self, offset: f64) -> Self {
        Self {
            normal: self.normal.clone(),
            offset,
        }
    }
}

/// Result of a successful homothety test: `A = factor · B + translation`.
#[derive(Debug, Clone, PartialEq)]
pub struct Homothety {
    pub factor: f64,
    pub translation: Vector,
}

/// A full-dimensional convex polytope.
///
/// Both representations are kept and are mutually consistent: every vertex
/// satisfies every halfspace, each halfspace is tight on at least `dim`
/// affinely independent vertices, and no halfspace is redundant.
#[derive(Debug, Clone)]
pub struct ConvexBody {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Vector>,
}

/// Chebyshev ball of a halfspace system: `max ρ` s.t. `⟨a_i, x⟩ + ρ <= b_i`.
/// `Ok(None)` means arbitrarily large balls fit.
pub(crate) fn chebyshev_ball(hs: &[HalfSpace]) -> Result<Option<(f64, Vector)>> {
    let n = hs[0].dim();
    let mut objective = Vector::zeros(n + 1);
    objective[n] = 1.0;
    let constraints: Vec<(Vector, f64)> = hs
        .iter()
        .map(|h| {
            let mut a = h.normal.clone().insert_row(n, 1.0);
            a[n] = 1.0;
            (a, h.offset)
        })
        .collect();
    let res = solve_lp(&objective, &constraints)?;
    match res.status {
        LpStatus::Optimal => {
            let p = res.point.expect("optimal LP carries a point");
            let radius = p[n];
            Ok(Some((radius, p.rows(0, n).into_owned())))
        }
        LpStatus::Unbounded => Ok(None),
        LpStatus::Infeasible => Err(GeomError::Numeric(
            "Chebyshev LP reported infeasible".into(),
        )),
    }
}

impl ConvexBody {
    /// Intersection of halfspaces.
    ///
    /// Vertices are enumerated through the polar dual: with `c` the Chebyshev
    /// centre, each halfspace maps to the point `a / (b - ⟨a, c⟩)`; extreme
    /// dual points are exactly the irredundant halfspaces and each dual facet
    /// is one primal vertex.
    pub fn from_halfspaces(hs: Vec<HalfSpace>) -> Result<Self> {
        let Some(first) = hs.first() else {
            return Err(GeomError::InvalidInput("no halfspaces".into()));
        };
        let n = first.dim();
        if n < 2 {
            return Err(GeomError::InvalidInput(format!("dimension {n} < 2")));
        }
        for h in &hs {
            check_dim(n, h.dim())?;
        }
        let Some((radius, center)) = chebyshev_ball(&hs)? else {
            return Err(GeomError::UnboundedBody);
        };
        let slack: Vec<f64> = hs.iter().map(|h| -h.excess(&center)).collect();
        let reach = slack.iter().copied().fold(0.0, f64::max);
        let band = Tolerance::DEFAULT.at_scale(reach);
        if radius < -band {
            return Err(GeomError::EmptyBody);
        }
        if radius <= band {
            return Err(GeomError::LowerDimensional);
        }

        let dual: Vec<Vector> = hs
            .iter()
            .zip(&slack)
            .map(|(h, s)| &h.normal / *s)
            .collect();
        let hull = match convex_hull(&dual) {
            Ok(h) => h,
            Err(GeomError::Degenerate { .. }) => return Err(GeomError::UnboundedBody),
            Err(e) => return Err(e),
        };
        let dual_eps = REL_TOL * extent(&dual);
        if hull.facets.iter().any(|f| f.offset <= dual_eps) {
            return Err(GeomError::UnboundedBody);
        }

        let mut vertices = Vec::with_capacity(hull.facets.len());
        for (facet, on) in hull.facets.iter().zip(&hull.facet_vertices) {
            let rows: Vec<&Vector> = on.iter().map(|&k| &hs[hull.source[k]].normal).collect();
            let rhs: Vec<f64> = on.iter().map(|&k| hs[hull.source[k]].offset).collect();
            let v = least_squares(&rows, &rhs)
                .unwrap_or_else(|| &center + &facet.normal / facet.offset);
            vertices.push(v);
        }
        let mut keep: Vec<usize> = hull.source.clone();
        keep.sort_unstable();
        let halfspaces = keep.into_iter().map(|i| hs[i].clone()).collect();
        Ok(Self {
            dim: n,
            halfspaces,
            vertices,
        })
    }

    /// Convex hull of a point set.
    pub fn from_vertices(points: &[Vector]) -> Result<Self> {
        let hull = convex_hull(points)?;
        let n = points[0].len();
        let halfspaces = hull
            .facets
            .into_iter()
            .map(|f| HalfSpace {
                normal: f.normal,
                offset: f.offset,
            })
            .collect();
        Ok(Self {
            dim: n,
            halfspaces,
            vertices: hull.vertices,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    /// Absolute comparison band for this body, scaled by its size and
    /// distance from the origin.
    pub fn eps(&self) -> f64 {
        Tolerance::DEFAULT.at_scale(extent(&self.vertices).max(magnitude(&self.vertices)))
    }

    /// Largest coordinate range of the vertex set.
    pub fn extent(&self) -> f64 {
        extent(&self.vertices)
    }

    pub fn vertex_centroid(&self) -> Vector {
        let mut c = Vector::zeros(self.dim);
        for v in &self.vertices {
            c += v;
        }
        c / self.vertices.len() as f64
    }

    /// Indices of the vertices lying on each halfspace boundary.
    pub fn facet_vertices(&self) -> Vec<Vec<usize>> {
        let eps = self.eps();
        self.halfspaces
            .iter()
            .map(|h| {
                (0..self.vertices.len())
                    .filter(|&k| h.excess(&self.vertices[k]).abs() <= eps)
                    .collect()
            })
            .collect()
    }

    /// Support function `h(K, u) = max ⟨v, u⟩` over vertices. `u` need not be unit.
    pub fn support(&self, u: &Vector) -> Result<f64> {
        check_dim(self.dim, u.len())?;
        if u.iter().all(|&c| c == 0.0) {
            return Err(GeomError::InvalidInput("zero direction".into()));
        }
        Ok(self.support_unchecked(u))
    }

    pub(crate) fn support_unchecked(&self, u: &Vector) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains_point(&self, p: &Vector) -> bool {
        let eps = self.eps();
        self.halfspaces.iter().all(|h| h.excess(p) <= eps)
    }

    /// `inner ⊆ self`, tested facet by facet through the support function
    /// of `inner`, with the default scalar tolerance.
    pub fn contains_body(&self, inner: &ConvexBody) -> Result<bool> {
        let eps = self.eps().max(inner.eps());
        self.contains_body_within(inner, eps)
    }

    /// `inner ⊆ self` with an explicit absolute slack.
    pub fn contains_body_within(&self, inner: &ConvexBody, slack: f64) -> Result<bool> {
        check_dim(self.dim, inner.dim)?;
        Ok(self
            .halfspaces
            .iter()
            .all(|h| inner.support_unchecked(&h.normal) <= h.offset + slack))
    }

    /// Set equality as mutual containment within `slack`.
    pub fn same_set(&self, other: &ConvexBody, slack: f64) -> Result<bool> {
        Ok(self.contains_body_within(other, slack)? && other.contains_body_within(self, slack)?)
    }

    pub fn translate(&self, x: &Vector) -> Result<Self> {
        check_dim(self.dim, x.len())?;
        Ok(Self {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| h.with_offset(h.offset + h.normal.dot(x)))
                .collect(),
            vertices: self.vertices.iter().map(|v| v + x).collect(),
        })
    }

    pub fn scale(&self, factor: f64) -> Result<Self> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(GeomError::InvalidInput(format!(
                "scale factor must be positive, got {factor}"
            )));
        }
        Ok(Self {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| h.with_offset(h.offset * factor))
                .collect(),
            vertices: self.vertices.iter().map(|v| v * factor).collect(),
        })
    }

    /// Hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &ConvexBody) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a + b);
            }
        }
        Self::from_vertices(&sums)
    }

    /// Finds `(λ > 0, x)` with `self = λ·other + x`, if any.
    ///
    /// Facet normals must match as sets within [`NORMAL_MATCH_TOL`]; the pair
    /// `(λ, x)` is fit by least squares on the offsets and then cross-checked
    /// against the vertex sets.
    pub fn is_homothetic(&self, other: &ConvexBody) -> Result<Option<Homothety>> {
        check_dim(self.dim, other.dim)?;
        if self.halfspaces.len() != other.halfspaces.len()
            || self.vertices.len() != other.vertices.len()
        {
            return Ok(None);
        }
        let n = self.dim;
        let mut partner = Vec::with_capacity(self.halfspaces.len());
        let mut used = vec![false; other.halfspaces.len()];
        for h in &self.halfspaces {
            let found = other.halfspaces.iter().enumerate().find(|(j, g)| {
                !used[*j] && (&h.normal - &g.normal).norm() <= NORMAL_MATCH_TOL
            });
            match found {
                Some((j, _)) => {
                    used[j] = true;
                    partner.push(j);
                }
                None => return Ok(None),
            }
        }

        // b_A,i = λ b_B,j + ⟨a_i, x⟩
        let rows: Vec<Vector> = self
            .halfspaces
            .iter()
            .zip(&partner)
            .map(|(h, &j)| {
                let mut r = Vector::zeros(n + 1);
                r[0] = other.halfspaces[j].offset;
                r.rows_mut(1, n).copy_from(&h.normal);
                r
            })
            .collect();
        let refs: Vec<&Vector> = rows.iter().collect();
        let rhs: Vec<f64> = self.halfspaces.iter().map(|h| h.offset).collect();
        let Some(sol) = least_squares(&refs, &rhs) else {
            return Ok(None);
        };
        let factor = sol[0];
        let translation: Vector = sol.rows(1, n).into_owned();
        if !(factor > 0.0) {
            return Ok(None);
        }
        let eps = self.eps();
        let fits = rows
            .iter()
            .zip(&rhs)
            .all(|(r, b)| (r.dot(&sol) - b).abs() <= eps);
        if !fits {
            return Ok(None);
        }
        let mapped: Vec<Vector> = other
            .vertices
            .iter()
            .map(|v| v * factor + &translation)
            .collect();
        let vertex_eps = eps.max(other.eps() * factor);
        let vertices_match = self
            .vertices
            .iter()
            .all(|v| mapped.iter().any(|w| (v - w).amax() <= vertex_eps));
        Ok(vertices_match.then_some(Homothety {
            factor,
            translation,
        }))
    }

    /// Checks the representation invariants.
    pub fn validate(&self) -> Result<()> {
        let eps = self.eps();
        for (i, h) in self.halfspaces.iter().enumerate() {
            if (h.normal.norm() - 1.0).abs() > 1e-9 {
                return Err(GeomError::Numeric(format!("halfspace {i} normal not unit")));
            }
            let on: Vec<Vector> = self
                .vertices
                .iter()
                .filter(|v| h.excess(v).abs() <= eps)
                .cloned()
                .collect();
            if on.len() < self.dim || affine_rank(&on, 1e-9 * self.extent().max(1e-300)) < self.dim - 1
            {
                return Err(GeomError::Numeric(format!(
                    "halfspace {i} is not a facet ({} tight vertices)",
                    on.len()
                )));
            }
        }
        for (k, v) in self.vertices.iter().enumerate() {
            if let Some(h) = self.halfspaces.iter().find(|h| h.excess(v) > eps) {
                return Err(GeomError::Numeric(format!(
                    "vertex {k} violates a halfspace by {:.3e}",
                    h.excess(v)
                )));
            }
        }
        Ok(())
    }
}
