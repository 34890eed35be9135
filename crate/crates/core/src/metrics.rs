//! Geometric functionals of convex polytopes.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::body::{chebyshev_ball, ConvexBody};
use crate::error::{GeomError, Result};
use crate::numeric::{convex_hull, hyperplane_basis, Vector};

/// Largest inscribed ball.
#[derive(Debug, Clone, PartialEq)]
pub struct InballResult {
    pub radius: f64,
    pub center: Vector,
}

/// Minimal slab width. `approximate` is set when the value is only an
/// upper bound (dimension four and above).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Width {
    pub value: f64,
    pub approximate: bool,
}

/// Quermassintegrals `W_0, …, W_n`, the coefficients of the Steiner
/// polynomial `|Ω + tB| = Σ C(n, i) W_i tⁱ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteinerCoefficients {
    pub dim: usize,
    pub w: Vec<f64>,
}

/// Volume of the unit ball in dimension 2 or 3.
pub fn unit_ball_volume(n: usize) -> f64 {
    match n {
        2 => PI,
        3 => 4.0 * PI / 3.0,
        _ => {
            // General formula, only used for reporting.
            let half = n as f64 / 2.0;
            PI.powf(half) / gamma_half_integer(half + 1.0)
        }
    }
}

fn gamma_half_integer(x: f64) -> f64 {
    // Γ at integers and half-integers.
    if x == 1.0 {
        1.0
    } else if x == 0.5 {
        PI.sqrt()
    } else {
        (x - 1.0) * gamma_half_integer(x - 1.0)
    }
}

/// Planar polygon vertices sorted counter-clockwise around their centroid.
pub(crate) fn ccw_polygon(body: &ConvexBody) -> Vec<Vector> {
    let c = body.vertex_centroid();
    let mut v = body.vertices().to_vec();
    v.sort_by(|p, q| {
        let a = (p[1] - c[1]).atan2(p[0] - c[0]);
        let b = (q[1] - c[1]).atan2(q[0] - c[0]);
        a.total_cmp(&b)
    });
    v
}

/// Vertices of a 3D facet ordered by angle in the facet plane.
pub(crate) fn ordered_facet(body: &ConvexBody, normal: &Vector, on: &[usize]) -> Vec<Vector> {
    let basis = hyperplane_basis(normal);
    let pts: Vec<&Vector> = on.iter().map(|&k| &body.vertices()[k]).collect();
    let mut c = Vector::zeros(3);
    for p in &pts {
        c += *p;
    }
    c /= pts.len() as f64;
    let mut keyed: Vec<(f64, Vector)> = pts
        .into_iter()
        .map(|p| {
            let d = p - &c;
            (d.dot(&basis[1]).atan2(d.dot(&basis[0])), p.clone())
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    keyed.into_iter().map(|(_, p)| p).collect()
}

fn polygon_area_3d(poly: &[Vector]) -> f64 {
    let a = nalgebra::Vector3::new(poly[0][0], poly[0][1], poly[0][2]);
    let mut acc = nalgebra::Vector3::zeros();
    for i in 1..poly.len() - 1 {
        let b = nalgebra::Vector3::new(poly[i][0], poly[i][1], poly[i][2]);
        let c = nalgebra::Vector3::new(poly[i + 1][0], poly[i + 1][1], poly[i + 1][2]);
        acc += (b - a).cross(&(c - a));
    }
    0.5 * acc.norm()
}

/// Areas of all facets of a 3D body.
fn facet_areas_3d(body: &ConvexBody) -> Vec<f64> {
    body.halfspaces()
        .iter()
        .zip(body.facet_vertices())
        .map(|(h, on)| polygon_area_3d(&ordered_facet(body, h.normal(), &on)))
        .collect()
}

/// (n−1)-volumes of facets in dimension ≥ 4, by projecting each facet into
/// its hyperplane and recursing.
fn facet_volumes_general(body: &ConvexBody) -> Result<Vec<f64>> {
    body.halfspaces()
        .iter()
        .zip(body.facet_vertices())
        .map(|(h, on)| {
            let basis = hyperplane_basis(h.normal());
            let projected: Vec<Vector> = on
                .iter()
                .map(|&k| {
                    let v = &body.vertices()[k];
                    Vector::from_iterator(basis.len(), basis.iter().map(|b| b.dot(v)))
                })
                .collect();
            point_set_volume(&projected)
        })
        .collect()
}

/// Volume of the convex hull of `points` in their own ambient dimension.
fn point_set_volume(points: &[Vector]) -> Result<f64> {
    let n = points[0].len();
    if n == 1 {
        let lo = points.iter().map(|p| p[0]).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(|p| p[0]).fold(f64::NEG_INFINITY, f64::max);
        return Ok(hi - lo);
    }
    let hull = convex_hull(points)?;
    let body = ConvexBody::from_vertices(&hull.vertices)?;
    Ok(volume(&body))
}

/// Volume by coning every facet to the vertex centroid:
/// `|Ω| = Σ (1/n) · dist(c, F) · |F|`, which equals the sum of the simplex
/// determinants of any triangulation of the boundary.
pub fn volume(body: &ConvexBody) -> f64 {
    let n = body.dim();
    let c = body.vertex_centroid();
    match n {
        2 => {
            let poly = ccw_polygon(body);
            let k = poly.len();
            (0..k)
                .map(|i| {
                    let (p, q) = (&poly[i] - &c, &poly[(i + 1) % k] - &c);
                    0.5 * (p[0] * q[1] - p[1] * q[0])
                })
                .sum()
        }
        3 => body
            .halfspaces()
            .iter()
            .zip(facet_areas_3d(body))
            .map(|(h, area)| -h.excess(&c) * area / 3.0)
            .sum(),
        _ => {
            let areas = facet_volumes_general(body).expect("facets of a valid body are full-dimensional");
            body.halfspaces()
                .iter()
                .zip(areas)
                .map(|(h, area)| -h.excess(&c) * area / n as f64)
                .sum()
        }
    }
}

/// Surface area `|∂Ω|` (perimeter in the plane).
pub fn surface_area(body: &ConvexBody) -> f64 {
    match body.dim() {
        2 => {
            let poly = ccw_polygon(body);
            let k = poly.len();
            (0..k).map(|i| (&poly[(i + 1) % k] - &poly[i]).norm()).sum()
        }
        3 => facet_areas_3d(body).into_iter().sum(),
        _ => facet_volumes_general(body)
            .expect("facets of a valid body are full-dimensional")
            .into_iter()
            .sum(),
    }
}

/// Chebyshev centre and inradius by linear programming.
pub fn inradius(body: &ConvexBody) -> Result<InballResult> {
    match chebyshev_ball(body.halfspaces())? {
        Some((radius, center)) => Ok(InballResult { radius, center }),
        None => Err(GeomError::Numeric("inball LP unbounded for a bounded body".into())),
    }
}

/// `h(Ω, u) + h(Ω, −u)` for a unit `u`.
pub fn breadth(body: &ConvexBody, u: &Vector) -> f64 {
    body.support_unchecked(u) + body.support_unchecked(&-u)
}

/// Edges of a 3D body as vertex index pairs, with the two facets meeting there.
pub(crate) fn edges_3d(body: &ConvexBody) -> Vec<((usize, usize), (usize, usize))> {
    let fv = body.facet_vertices();
    let mut out = Vec::new();
    for i in 0..fv.len() {
        for j in i + 1..fv.len() {
            let shared: Vec<usize> = fv[i].iter().copied().filter(|k| fv[j].contains(k)).collect();
            if shared.len() < 2 {
                continue;
            }
            // Keep the farthest pair if more than two vertices are shared.
            let mut best = (shared[0], shared[1]);
            let mut len = -1.0;
            for a in 0..shared.len() {
                for b in a + 1..shared.len() {
                    let d = (&body.vertices()[shared[a]] - &body.vertices()[shared[b]]).norm();
                    if d > len {
                        len = d;
                        best = (shared[a], shared[b]);
                    }
                }
            }
            out.push((best, (i, j)));
        }
    }
    out
}

pub const WIDTH_RANDOM_DIRECTIONS: usize = 10_000;
const WIDTH_SEED: u64 = 0x5eed_0f_5a1b;

/// Minimal width `min_u h(Ω,u) + h(Ω,−u)`.
///
/// Exact in the plane (edge normals) and in ℝ³ (facet normals plus cross
/// products of edge-direction pairs). In higher dimensions it is the best of
/// the facet normals and a seeded random search with local refinement, and
/// is flagged approximate.
pub fn width(body: &ConvexBody) -> Width {
    let facet_min = body
        .halfspaces()
        .iter()
        .map(|h| breadth(body, h.normal()))
        .fold(f64::INFINITY, f64::min);
    match body.dim() {
        2 => Width {
            value: facet_min,
            approximate: false,
        },
        3 => {
            let dirs: Vec<nalgebra::Vector3<f64>> = edges_3d(body)
                .iter()
                .map(|((a, b), _)| {
                    let d = &body.vertices()[*b] - &body.vertices()[*a];
                    nalgebra::Vector3::new(d[0], d[1], d[2]).normalize()
                })
                .collect();
            let mut best = facet_min;
            for i in 0..dirs.len() {
                for j in i + 1..dirs.len() {
                    let c = dirs[i].cross(&dirs[j]);
                    let len = c.norm();
                    if len < 1e-9 {
                        continue;
                    }
                    let u = Vector::from_column_slice((c / len).as_slice());
                    best = best.min(breadth(body, &u));
                }
            }
            Width {
                value: best,
                approximate: false,
            }
        }
        n => {
            let mut rng = ChaCha8Rng::seed_from_u64(WIDTH_SEED);
            let mut best_u = body.halfspaces()[0].normal().clone();
            let mut best = breadth(body, &best_u);
            for h in body.halfspaces() {
                let b = breadth(body, h.normal());
                if b < best {
                    best = b;
                    best_u = h.normal().clone();
                }
            }
            for _ in 0..WIDTH_RANDOM_DIRECTIONS {
                let u = random_unit(&mut rng, n);
                let b = breadth(body, &u);
                if b < best {
                    best = b;
                    best_u = u;
                }
            }
            // Local refinement by shrinking random perturbations.
            let mut step = 0.1;
            while step > 1e-9 {
                let mut improved = false;
                for _ in 0..8 * n {
                    let mut u = &best_u + random_unit(&mut rng, n) * step;
                    u /= u.norm();
                    let b = breadth(body, &u);
                    if b < best {
                        best = b;
                        best_u = u;
                        improved = true;
                    }
                }
                if !improved {
                    step *= 0.5;
                }
            }
            Width {
                value: best,
                approximate: true,
            }
        }
    }
}

pub(crate) fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vector {
    loop {
        let v = Vector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let len = v.norm();
        if len > 1e-12 {
            return v / len;
        }
    }
}

/// Quermassintegrals for n ∈ {2, 3}.
///
/// In ℝ³ the second coefficient comes from the mean-width functional
/// `M = ½ Σ_edges length · θ`, θ the angle between the two adjacent facet
/// normals (the exterior dihedral angle).
pub fn quermassintegrals(body: &ConvexBody) -> Result<SteinerCoefficients> {
    match body.dim() {
        2 => Ok(SteinerCoefficients {
            dim: 2,
            w: vec![volume(body), surface_area(body) / 2.0, PI],
        }),
        3 => {
            let hs = body.halfspaces();
            let m: f64 = edges_3d(body)
                .iter()
                .map(|((a, b), (f, g))| {
                    let len = (&body.vertices()[*a] - &body.vertices()[*b]).norm();
                    let cos = hs[*f].normal().dot(hs[*g].normal()).clamp(-1.0, 1.0);
                    len * cos.acos()
                })
                .sum::<f64>()
                * 0.5;
            Ok(SteinerCoefficients {
                dim: 3,
                w: vec![volume(body), surface_area(body) / 3.0, m / 3.0, 4.0 * PI / 3.0],
            })
        }
        n => Err(GeomError::UnsupportedDimension(n)),
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `Σ C(n,i) (±t)ⁱ W_i`; with `alternating = false` this is `|Ω + tB|`.
pub fn steiner_eval(c: &SteinerCoefficients, t: f64, alternating: bool) -> f64 {
    let s = if alternating { -t } else { t };
    c.w.iter()
        .enumerate()
        .map(|(i, w)| binomial(c.dim, i) * s.powi(i as i32) * w)
        .sum()
}

/// Euclidean distance from `p` to a 2D or 3D body (zero inside).
pub fn distance_to_body(body: &ConvexBody, p: &Vector, facets: &[Vec<Vector>]) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    for h in body.halfspaces() {
        worst = worst.max(h.excess(p));
    }
    if worst <= 0.0 {
        return 0.0;
    }
    match body.dim() {
        2 => {
            let k = facets[0].len();
            let poly = &facets[0];
            (0..k)
                .map(|i| segment_distance(p, &poly[i], &poly[(i + 1) % k]))
                .fold(f64::INFINITY, f64::min)
        }
        _ => {
            let mut best = f64::INFINITY;
            for (h, poly) in body.halfspaces().iter().zip(facets) {
                let e = h.excess(p);
                if e <= 0.0 {
                    continue;
                }
                // Nearest point lies on a facet facing p.
                let q = p - h.normal() * e;
                let inside = (0..poly.len()).all(|i| {
                    let a = &poly[i];
                    let b = &poly[(i + 1) % poly.len()];
                    let edge = b - a;
                    let side = nalgebra::Vector3::new(edge[0], edge[1], edge[2]).cross(
                        &nalgebra::Vector3::new(q[0] - a[0], q[1] - a[1], q[2] - a[2]),
                    );
                    side.dot(&nalgebra::Vector3::new(h.normal()[0], h.normal()[1], h.normal()[2])) >= 0.0
                });
                let d = if inside {
                    e
                } else {
                    (0..poly.len())
                        .map(|i| segment_distance(p, &poly[i], &poly[(i + 1) % poly.len()]))
                        .fold(f64::INFINITY, f64::min)
                };
                best = best.min(d);
            }
            best
        }
    }
}

fn segment_distance(p: &Vector, a: &Vector, b: &Vector) -> f64 {
    let ab = b - a;
    let s = ((p - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
    (p - (a + ab * s)).norm()
}

/// Boundary polygons used by [`distance_to_body`]: the whole CCW polygon in
/// the plane, or each facet ordered CCW around its outward normal in ℝ³.
pub fn boundary_polygons(body: &ConvexBody) -> Vec<Vec<Vector>> {
    match body.dim() {
        2 => vec![ccw_polygon(body)],
        _ => body
            .halfspaces()
            .iter()
            .zip(body.facet_vertices())
            .map(|(h, on)| {
                let poly = ordered_facet(body, h.normal(), &on);
                orient_ccw(poly, h.normal())
            })
            .collect(),
    }
}

fn orient_ccw(mut poly: Vec<Vector>, normal: &Vector) -> Vec<Vector> {
    if poly.len() >= 3 {
        let a = &poly[1] - &poly[0];
        let b = &poly[2] - &poly[0];
        let c = nalgebra::Vector3::new(a[0], a[1], a[2]).cross(&nalgebra::Vector3::new(b[0], b[1], b[2]));
        if c.dot(&nalgebra::Vector3::new(normal[0], normal[1], normal[2])) < 0.0 {
            poly.reverse();
        }
    }
    poly
}

/// Monte-Carlo estimate of `|Ω + tB|` with its standard error, sampling the
/// bounding box of `Ω` inflated by `t`.
pub fn monte_carlo_parallel_volume(body: &ConvexBody, t: f64, samples: usize, seed: u64) -> (f64, f64) {
    let n = body.dim();
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for v in body.vertices() {
        for k in 0..n {
            lo[k] = lo[k].min(v[k] - t);
            hi[k] = hi[k].max(v[k] + t);
        }
    }
    let box_volume: f64 = (0..n).map(|k| hi[k] - lo[k]).product();
    let polys = boundary_polygons(body);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    let mut p = Vector::zeros(n);
    for _ in 0..samples {
        for k in 0..n {
            p[k] = rng.gen_range(lo[k]..hi[k]);
        }
        if distance_to_body(body, &p, &polys) <= t {
            hits += 1;
        }
    }
    let frac = hits as f64 / samples as f64;
    let se = box_volume * (frac * (1.0 - frac) / samples as f64).sqrt();
    (box_volume * frac, se)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::HalfSpace;
    use crate::numeric::vector;

    fn square() -> ConvexBody {
        ConvexBody::from_vertices(&[
            vector(&[0.0, 0.0]),
            vector(&[1.0, 0.0]),
            vector(&[1.0, 1.0]),
            vector(&[0.0, 1.0]),
        ])
        .unwrap()
    }

    fn cube() -> ConvexBody {
        let pts: Vec<Vector> = (0..8)
            .map(|i| vector(&[(i & 1) as f64, (i >> 1 & 1) as f64, (i >> 2 & 1) as f64]))
            .collect();
        ConvexBody::from_vertices(&pts).unwrap()
    }

    fn triangle_345() -> ConvexBody {
        ConvexBody::from_vertices(&[vector(&[0.0, 0.0]), vector(&[4.0, 0.0]), vector(&[0.0, 3.0])]).unwrap()
    }

    fn regular_tetrahedron(edge: f64) -> ConvexBody {
        let s = edge / (2.0 * 2f64.sqrt());
        ConvexBody::from_vertices(&[
            vector(&[s, s, s]),
            vector(&[s, -s, -s]),
            vector(&[-s, s, -s]),
            vector(&[-s, -s, s]),
        ])
        .unwrap()
    }

    #[test]
    fn volumes_and_areas() {
        assert!((volume(&square()) - 1.0).abs() < 1e-14);
        assert!((volume(&cube()) - 1.0).abs() < 1e-14);
        assert!((surface_area(&square()) - 4.0).abs() < 1e-14);
        assert!((surface_area(&triangle_345()) - 12.0).abs() < 1e-14);
        assert!((surface_area(&cube()) - 6.0).abs() < 1e-14);
        assert!((volume(&triangle_345()) - 6.0).abs() < 1e-14);
    }

    #[test]
    fn tesseract_volume_and_boundary() {
        let pts: Vec<Vector> = (0..16)
            .map(|i| {
                vector(&[
                    2.0 * (i & 1) as f64,
                    (i >> 1 & 1) as f64,
                    (i >> 2 & 1) as f64,
                    (i >> 3 & 1) as f64,
                ])
            })
            .collect();
        let body = ConvexBody::from_vertices(&pts).unwrap();
        assert!((volume(&body) - 2.0).abs() < 1e-12);
        // 2 facets of volume 1 and 6 facets of volume 2.
        assert!((surface_area(&body) - 14.0).abs() < 1e-12);
    }

    #[test]
    fn inradius_examples() {
        let r = inradius(&square()).unwrap();
        assert!((r.radius - 0.5).abs() < 1e-12);
        assert!((&r.center - vector(&[0.5, 0.5])).amax() < 1e-12);
        let r = inradius(&triangle_345()).unwrap();
        // Legs-hypotenuse formula r = (3 + 4 − 5)/2.
        assert!((r.radius - (3.0 + 4.0 - 5.0) / 2.0).abs() < 1e-12);
        assert!((&r.center - vector(&[1.0, 1.0])).amax() < 1e-12);
        let rect = ConvexBody::from_vertices(&[
            vector(&[0.0, 0.0]),
            vector(&[2.0, 0.0]),
            vector(&[2.0, 1.0]),
            vector(&[0.0, 1.0]),
        ])
        .unwrap();
        let r = inradius(&rect).unwrap();
        assert!((r.radius - 0.5).abs() < 1e-12);
        assert!((r.center[1] - 0.5).abs() < 1e-12);
        assert!(r.center[0] >= 0.5 - 1e-12 && r.center[0] <= 1.5 + 1e-12);
    }

    #[test]
    fn widths() {
        assert!((width(&square()).value - 1.0).abs() < 1e-14);
        let h = 3f64.sqrt();
        let eq = ConvexBody::from_vertices(&[vector(&[0.0, 0.0]), vector(&[2.0, 0.0]), vector(&[1.0, h])]).unwrap();
        assert!((width(&eq).value - h).abs() < 1e-12);
        let tet = regular_tetrahedron(2.0);
        let w = width(&tet);
        assert!(!w.approximate);
        assert!((w.value - 2.0 / 2f64.sqrt()).abs() < 1e-12);
        // Facet-vertex slabs alone would give the height 2·sqrt(2/3).
        let facet_only = tet
            .halfspaces()
            .iter()
            .map(|hs| breadth(&tet, hs.normal()))
            .fold(f64::INFINITY, f64::min);
        assert!(facet_only > w.value + 0.1);
    }

    #[test]
    fn approximate_width_in_four_dimensions() {
        let pts: Vec<Vector> = (0..16)
            .map(|i| {
                vector(&[
                    3.0 * (i & 1) as f64,
                    (i >> 1 & 1) as f64,
                    2.0 * (i >> 2 & 1) as f64,
                    2.0 * (i >> 3 & 1) as f64,
                ])
            })
            .collect();
        let w = width(&ConvexBody::from_vertices(&pts).unwrap());
        assert!(w.approximate);
        assert!((w.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn quermassintegrals_closed_forms() {
        let q = quermassintegrals(&square()).unwrap();
        assert_eq!(q.w.len(), 3);
        assert!((q.w[0] - 1.0).abs() < 1e-14 && (q.w[1] - 2.0).abs() < 1e-14 && q.w[2] == PI);
        let q = quermassintegrals(&cube()).unwrap();
        assert!((q.w[0] - 1.0).abs() < 1e-14);
        assert!((q.w[1] - 2.0).abs() < 1e-14);
        assert!((q.w[2] - PI).abs() < 1e-13);
        assert!((q.w[3] - 4.0 * PI / 3.0).abs() < 1e-14);
        let q = quermassintegrals(&triangle_345()).unwrap();
        assert!((q.w[0] - 6.0).abs() < 1e-13 && (q.w[1] - 6.0).abs() < 1e-13);
    }

    #[test]
    fn quermassintegrals_reject_other_dimensions() {
        let pts: Vec<Vector> = (0..16)
            .map(|i| vector(&[(i & 1) as f64, (i >> 1 & 1) as f64, (i >> 2 & 1) as f64, (i >> 3 & 1) as f64]))
            .collect();
        let body = ConvexBody::from_vertices(&pts).unwrap();
        assert_eq!(quermassintegrals(&body).unwrap_err(), GeomError::UnsupportedDimension(4));
    }

    #[test]
    fn steiner_values_on_square() {
        let q = quermassintegrals(&square()).unwrap();
        assert_eq!(steiner_eval(&q, 0.0, false), 1.0);
        assert_eq!(steiner_eval(&q, 0.0, true), 1.0);
        let outer = steiner_eval(&q, 0.25, false);
        assert!((outer - (1.0 + 4.0 * 0.25 + PI * 0.0625)).abs() < 1e-14);
        let alt = steiner_eval(&q, 0.25, true);
        assert!((alt - PI / 16.0).abs() < 1e-14);
    }

    #[test]
    fn monte_carlo_matches_steiner_on_square() {
        let sq = square();
        let q = quermassintegrals(&sq).unwrap();
        let (est, se) = monte_carlo_parallel_volume(&sq, 0.25, 200_000, 1);
        let exact = steiner_eval(&q, 0.25, false);
        assert!((est - exact).abs() <= 3.0 * se, "{est} vs {exact} (se {se})");
    }

    #[test]
    fn distance_to_cube() {
        let c = cube();
        let polys = boundary_polygons(&c);
        assert_eq!(distance_to_body(&c, &vector(&[0.5, 0.5, 0.5]), &polys), 0.0);
        assert!((distance_to_body(&c, &vector(&[0.5, 0.5, 1.5]), &polys) - 0.5).abs() < 1e-14);
        let corner = distance_to_body(&c, &vector(&[2.0, 2.0, 2.0]), &polys);
        assert!((corner - 3f64.sqrt()).abs() < 1e-14);
        let edge = distance_to_body(&c, &vector(&[2.0, 2.0, 0.5]), &polys);
        assert!((edge - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn scale_homogeneity() {
        let body = ConvexBody::from_halfspaces(vec![
            HalfSpace::new(vector(&[1.0, 0.2, 0.0]), 1.0).unwrap(),
            HalfSpace::new(vector(&[-1.0, 0.3, 0.1]), 1.0).unwrap(),
            HalfSpace::new(vector(&[0.0, 1.0, 0.5]), 2.0).unwrap(),
            HalfSpace::new(vector(&[0.1, -1.0, 0.0]), 1.0).unwrap(),
            HalfSpace::new(vector(&[0.0, 0.0, 1.0]), 1.5).unwrap(),
            HalfSpace::new(vector(&[0.2, 0.1, -1.0]), 1.0).unwrap(),
        ])
        .unwrap();
        let s = body.scale(2.5).unwrap().translate(&vector(&[1.0, -2.0, 0.5])).unwrap();
        assert!((volume(&s) - 2.5f64.powi(3) * volume(&body)).abs() < 1e-10);
        assert!((surface_area(&s) - 2.5f64.powi(2) * surface_area(&body)).abs() < 1e-10);
        assert!((inradius(&s).unwrap().radius - 2.5 * inradius(&body).unwrap().radius).abs() < 1e-10);
        assert!((width(&s).value - 2.5 * width(&body).value).abs() < 1e-10);
    }
}
