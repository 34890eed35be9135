//! Numeric substrate: tolerance policy, small dense linear algebra, linear
//! programming and convex hulls.

pub mod hull;
pub mod lp;

use nalgebra::{DMatrix, DVector};

pub use hull::{convex_hull, Facet, Hull};
pub use lp::{solve_lp, LinearProgramResult, LpStatus};

/// Points and directions in ℝⁿ.
pub type Vector = DVector<f64>;

/// Relative tolerance applied against the larger magnitude of two operands.
pub const REL_TOL: f64 = 1e-9;
/// Absolute floor for all comparisons.
pub const ABS_TOL: f64 = 1e-12;

/// Comparison policy shared by every geometric predicate.
///
/// Two scalars `a` and `b` are considered equal when
/// `|a - b| <= max(rel * max(|a|, |b|), abs)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        rel: REL_TOL,
        abs: ABS_TOL,
    };

    pub fn band(&self, a: f64, b: f64) -> f64 {
        (self.rel * a.abs().max(b.abs())).max(self.abs)
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.band(a, b)
    }

    pub fn le(&self, a: f64, b: f64) -> bool {
        a <= b + self.band(a, b)
    }

    pub fn lt(&self, a: f64, b: f64) -> bool {
        a < b - self.band(a, b)
    }

    /// Absolute threshold for quantities whose natural size is `scale`
    /// (a body diameter, a coordinate extent).
    pub fn at_scale(&self, scale: f64) -> f64 {
        (self.rel * scale.abs()).max(self.abs)
    }
}

pub fn vector(coords: &[f64]) -> Vector {
    DVector::from_column_slice(coords)
}

/// Largest coordinate range over a point set; zero for a single point.
pub fn extent(points: &[Vector]) -> f64 {
    let Some(first) = points.first() else {
        return 0.0;
    };
    let n = first.len();
    let mut widest: f64 = 0.0;
    for k in 0..n {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo = lo.min(p[k]);
            hi = hi.max(p[k]);
        }
        widest = widest.max(hi - lo);
    }
    widest
}

/// Largest absolute coordinate over a point set.
pub fn magnitude(points: &[Vector]) -> f64 {
    points.iter().map(|p| p.amax()).fold(0.0, f64::max)
}

/// Numerical rank from a column-pivoted QR: diagonal entries of `R` above
/// `eps` in magnitude.
fn numeric_rank(m: DMatrix<f64>, eps: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let r = m.col_piv_qr().r();
    (0..r.nrows().min(r.ncols()))
        .filter(|&i| r[(i, i)].abs() > eps)
        .count()
}

/// Affine rank of a point set, with pivots below `eps` treated as zero.
pub fn affine_rank(points: &[Vector], eps: f64) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let n = points[0].len();
    let m = DMatrix::from_fn(n, points.len() - 1, |i, j| points[j + 1][i] - points[0][i]);
    numeric_rank(m, eps)
}

/// Rank of a set of direction vectors.
pub fn direction_rank(dirs: &[&Vector], eps: f64) -> usize {
    if dirs.is_empty() {
        return 0;
    }
    let n = dirs[0].len();
    numeric_rank(DMatrix::from_fn(n, dirs.len(), |i, j| dirs[j][i]), eps)
}

/// Least-squares solution of `rows · x = rhs` by Householder QR. Returns
/// `None` when the system is rank deficient.
pub fn least_squares(rows: &[&Vector], rhs: &[f64]) -> Option<Vector> {
    let n = rows.first()?.len();
    let m = rows.len();
    if m < n {
        return None;
    }
    let a = DMatrix::from_fn(m, n, |i, j| rows[i][j]);
    let b = DVector::from_column_slice(rhs);
    let qr = a.qr();
    let r = qr.r();
    let diag: Vec<f64> = (0..n).map(|i| r[(i, i)].abs()).collect();
    let dmax = diag.iter().copied().fold(0.0, f64::max);
    if !diag.iter().all(|d| *d > 1e-12 * dmax.max(1e-300)) {
        return None;
    }
    let qtb = qr.q().transpose() * b;
    r.solve_upper_triangular(&qtb)
}

/// Orthonormal basis of the hyperplane orthogonal to a unit `normal`.
pub fn hyperplane_basis(normal: &Vector) -> Vec<Vector> {
    let n = normal.len();
    let mut basis: Vec<Vector> = vec![normal.clone()];
    let mut candidates: Vec<Vector> = (0..n)
        .map(|k| {
            let mut e = DVector::zeros(n);
            e[k] = 1.0;
            e
        })
        .collect();
    while basis.len() < n {
        // Gram-Schmidt on whichever unit axis keeps the largest residual.
        let mut best: Option<(usize, Vector, f64)> = None;
        for (k, e) in candidates.iter().enumerate() {
            let mut r = e.clone();
            for b in &basis {
                r -= b * b.dot(&r);
            }
            let len = r.norm();
            if best.as_ref().map_or(true, |(_, _, l)| len > *l) {
                best = Some((k, r, len));
            }
        }
        let (k, r, len) = best.expect("axis candidates exhausted");
        candidates.remove(k);
        basis.push(r / len);
    }
    basis.remove(0);
    basis
}

/// Unit normal of the hyperplane through `n` points in ℝⁿ, computed from
/// cofactors of the difference matrix. `None` if the points are dependent.
pub fn hyperplane_normal(points: &[&Vector]) -> Option<Vector> {
    let n = points[0].len();
    debug_assert_eq!(points.len(), n);
    let diffs = DMatrix::from_fn(n - 1, n, |i, j| points[i + 1][j] - points[0][j]);
    let mut normal = DVector::zeros(n);
    for k in 0..n {
        let minor = diffs.clone().remove_column(k);
        let det = if n == 1 { 1.0 } else { minor.determinant() };
        normal[k] = if k % 2 == 0 { det } else { -det };
    }
    let len = normal.norm();
    let scale: f64 = (0..n - 1)
        .map(|i| diffs.row(i).norm())
        .product::<f64>()
        .max(f64::MIN_POSITIVE);
    if len <= 1e-12 * scale {
        return None;
    }
    Some(normal / len)
}

/// Removes near-duplicate points (within `eps`, max-norm), keeping the first
/// occurrence. Returns the kept indices in input order.
pub fn dedupe(points: &[Vector], eps: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a][0].total_cmp(&points[b][0]).then(a.cmp(&b)));
    let mut dropped = vec![false; points.len()];
    for (pos, &i) in order.iter().enumerate() {
        if dropped[i] {
            continue;
        }
        for &j in &order[pos + 1..] {
            if points[j][0] - points[i][0] > eps {
                break;
            }
            if !dropped[j] && (&points[j] - &points[i]).amax() <= eps {
                // Keep whichever came first in the input.
                if j < i {
                    dropped[i] = true;
                    break;
                }
                dropped[j] = true;
            }
        }
    }
    (0..points.len()).filter(|&i| !dropped[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_squares_orthogonal_columns() {
        // Two adjacent decagon normals; the columns of this system are orthogonal.
        let a = vector(&[-0.3090169943749477, -0.9510565162951535]);
        let b = vector(&[0.30901699437494595, -0.9510565162951541]);
        let x = least_squares(&[&a, &b], &[1.0, 1.0]).unwrap();
        assert!(x[0].abs() < 1e-12);
        assert!((x[1] + 1.0 / a[1].abs()).abs() < 1e-12);
        assert!(least_squares(&[&a, &a], &[1.0, 1.0]).is_none());
    }

    #[test]
    fn tolerance_bands() {
        let tol = Tolerance::DEFAULT;
        assert!(tol.eq(1.0, 1.0 + 5e-10));
        assert!(!tol.eq(1.0, 1.0 + 5e-9));
        assert!(tol.eq(0.0, 5e-13));
        assert!(!tol.eq(0.0, 5e-12));
        assert!(tol.le(1.0 + 5e-10, 1.0));
        assert!(tol.lt(1.0, 1.1));
        assert!(!tol.lt(1.0, 1.0 + 1e-10));
    }

    #[test]
    fn ranks() {
        let pts = [vector(&[0.0, 0.0]), vector(&[1.0, 0.0]), vector(&[2.0, 0.0])];
        assert_eq!(affine_rank(&pts, 1e-12), 1);
        let pts = [vector(&[0.0, 0.0]), vector(&[1.0, 0.0]), vector(&[0.0, 1.0])];
        assert_eq!(affine_rank(&pts, 1e-12), 2);
    }

    #[test]
    fn plane_basis_is_orthonormal() {
        let n = vector(&[1.0, 2.0, -2.0]) / 3.0;
        let b = hyperplane_basis(&n);
        assert_eq!(b.len(), 2);
        for u in &b {
            assert!(u.dot(&n).abs() < 1e-14);
            assert!((u.norm() - 1.0).abs() < 1e-14);
        }
        assert!(b[0].dot(&b[1]).abs() < 1e-14);
    }

    #[test]
    fn normal_through_points() {
        let p = [vector(&[1.0, 0.0, 0.0]), vector(&[0.0, 1.0, 0.0]), vector(&[0.0, 0.0, 1.0])];
        let refs: Vec<&Vector> = p.iter().collect();
        let nrm = hyperplane_normal(&refs).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((nrm.dot(&vector(&[s, s, s])).abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn dedupe_keeps_first() {
        let p = [
            vector(&[1.0, 1.0]),
            vector(&[0.0, 0.0]),
            vector(&[1.0, 1.0 + 1e-13]),
            vector(&[0.0, 1e-14]),
        ];
        assert_eq!(dedupe(&p, 1e-10), vec![0, 1]);
    }
}
