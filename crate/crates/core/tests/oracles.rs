//! Checks against oracles computed independently of the library code paths:
//! shoelace areas, brute-force direction sweeps, per-halfspace LP
//! redundancy tests and Monte-Carlo volumes.

use innerbody::metrics::{inradius, surface_area, volume, width};
use innerbody::numeric::{convex_hull, solve_lp, LpStatus};
use innerbody::parallel::{erode_body, form_body};
use innerbody::verify::{derive_seed, generate, GeneratorConfig, GeneratorKind};
use innerbody::{vector, ConvexBody, HalfSpace, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_body(seed: u64, dim: usize) -> ConvexBody {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = if dim == 2 { rng.gen_range(5..=40) } else { rng.gen_range(8..=40) };
    generate(&GeneratorConfig {
        seed,
        dim,
        kind: GeneratorKind::HullOfRandomPoints,
        size,
    })
    .unwrap()
}

fn unit(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    loop {
        let v = Vector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
        let len = v.norm();
        if len > 1e-3 && len <= 1.0 {
            return v / len;
        }
    }
}

/// Vertices sorted by angle around their mean.
fn angular_order(points: &[Vector]) -> Vec<Vector> {
    let c = points.iter().fold(Vector::zeros(2), |acc, p| acc + p) / points.len() as f64;
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| {
        let ta = (a[1] - c[1]).atan2(a[0] - c[0]);
        let tb = (b[1] - c[1]).atan2(b[0] - c[0]);
        ta.total_cmp(&tb)
    });
    pts
}

fn shoelace(points: &[Vector]) -> (f64, f64) {
    let pts = angular_order(points);
    let k = pts.len();
    let mut area = 0.0;
    let mut perimeter = 0.0;
    for i in 0..k {
        let (a, b) = (&pts[i], &pts[(i + 1) % k]);
        area += a[0] * b[1] - a[1] * b[0];
        perimeter += (b - a).norm();
    }
    (0.5 * area, perimeter)
}

#[test]
fn planar_area_and_perimeter_match_shoelace() {
    for i in 0..100 {
        let b = random_body(derive_seed(1, 2, i), 2);
        let (area, perimeter) = shoelace(b.vertices());
        assert!((volume(&b) - area).abs() <= 1e-10 * area);
        assert!((surface_area(&b) - perimeter).abs() <= 1e-10 * perimeter);
    }
}

#[test]
fn volume_matches_monte_carlo() {
    for i in 0..5 {
        let b = random_body(derive_seed(2, 3, i), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(i);
        let samples = 1_000_000;
        let hits = (0..samples)
            .filter(|_| {
                let p = Vector::from_fn(3, |_, _| rng.gen_range(0.0..1.0));
                b.halfspaces().iter().all(|h| h.excess(&p) <= 0.0)
            })
            .count();
        let frac = hits as f64 / samples as f64;
        let se = (frac * (1.0 - frac) / samples as f64).sqrt();
        assert!((volume(&b) - frac).abs() <= 3.0 * se, "body {i}: {} vs {frac}", volume(&b));
    }
}

#[test]
fn hull_of_random_points_contains_all_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    for _ in 0..20 {
        let pts: Vec<Vector> = (0..30).map(|_| Vector::from_fn(3, |_, _| rng.gen_range(0.0..1.0))).collect();
        let h = convex_hull(&pts).unwrap();
        for f in &h.facets {
            for p in &pts {
                assert!(f.normal.dot(p) <= f.offset + 1e-12);
            }
        }
        for v in &h.vertices {
            assert!(pts.contains(v));
        }
        // A hull vertex is extreme: some direction puts it strictly ahead of the rest.
        for (k, v) in h.vertices.iter().enumerate() {
            let others: Vec<&Vector> = pts.iter().filter(|p| *p != v).collect();
            let constraints: Vec<(Vector, f64)> = others
                .iter()
                .map(|p| (vector(&[p[0] - v[0], p[1] - v[1], p[2] - v[2], 1.0]), 0.0))
                .chain((0..3).flat_map(|j| {
                    let mut e = Vector::zeros(4);
                    e[j] = 1.0;
                    [(e.clone(), 1.0), (-e, 1.0)]
                }))
                .chain([(vector(&[0.0, 0.0, 0.0, 1.0]), 1.0)])
                .collect();
            let res = solve_lp(&vector(&[0.0, 0.0, 0.0, 1.0]), &constraints).unwrap();
            assert_eq!(res.status, LpStatus::Optimal);
            assert!(res.objective.unwrap() > 1e-9, "vertex {k} is not extreme");
        }
    }
}

#[test]
fn irredundant_halfspaces_match_lp_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    for _ in 0..50 {
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(n + 4..=25);
        let hs: Vec<HalfSpace> = (0..m)
            .map(|_| HalfSpace::new(unit(&mut rng, n), rng.gen_range(0.5..2.0)).unwrap())
            .collect();
        let Ok(body) = ConvexBody::from_halfspaces(hs.clone()) else {
            continue;
        };
        for (i, h) in hs.iter().enumerate() {
            let others: Vec<(Vector, f64)> = hs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| (g.normal().clone(), g.offset()))
                .chain([(h.normal().clone(), h.offset() + 1.0)])
                .collect();
            let res = solve_lp(h.normal(), &others).unwrap();
            let needed = res.objective.unwrap() > h.offset() + 1e-9;
            let kept = body.halfspaces().iter().any(|g| g == h);
            assert_eq!(needed, kept, "halfspace {i}");
        }
    }
}

#[test]
fn square_plus_triangle_is_pentagon() {
    let sq = ConvexBody::from_vertices(&[
        vector(&[0.0, 0.0]),
        vector(&[1.0, 0.0]),
        vector(&[1.0, 1.0]),
        vector(&[0.0, 1.0]),
    ])
    .unwrap();
    let tri = ConvexBody::from_vertices(&[vector(&[0.0, 0.0]), vector(&[1.0, 0.0]), vector(&[0.0, 1.0])]).unwrap();
    let sum = sq.minkowski_sum(&tri).unwrap();
    assert_eq!(sum.vertices().len(), 5);
    for k in 0..64 {
        let a = k as f64 * std::f64::consts::TAU / 64.0;
        let u = vector(&[a.cos(), a.sin()]);
        let oracle = |b: &ConvexBody| b.vertices().iter().map(|v| v.dot(&u)).fold(f64::MIN, f64::max);
        assert!((sum.support(&u).unwrap() - oracle(&sq) - oracle(&tri)).abs() < 1e-12);
    }
}

#[test]
fn tangent_halfspaces_to_the_unit_ball() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut built = 0;
    while built < 20 {
        let n = 2 + built % 2;
        let hs: Vec<HalfSpace> = (0..12).map(|_| HalfSpace::new(unit(&mut rng, n), 1.0).unwrap()).collect();
        let Ok(b) = ConvexBody::from_halfspaces(hs) else {
            continue;
        };
        built += 1;
        assert!(b.contains_point(&Vector::zeros(n)));
        assert!((inradius(&b).unwrap().radius - 1.0).abs() < 1e-9);
    }
}

#[test]
fn inball_is_inside_and_not_beaten_by_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for i in 0..100 {
        let n = 2 + (i % 2) as usize;
        let b = random_body(derive_seed(4, n as u64, i), n);
        let ball = inradius(&b).unwrap();
        for h in b.halfspaces() {
            assert!(h.normal().dot(&ball.center) + ball.radius <= h.offset() + 1e-12);
        }
        let lo: Vec<f64> = (0..n).map(|k| b.vertices().iter().map(|v| v[k]).fold(f64::MAX, f64::min)).collect();
        let hi: Vec<f64> = (0..n).map(|k| b.vertices().iter().map(|v| v[k]).fold(f64::MIN, f64::max)).collect();
        for _ in 0..2000 {
            let p = Vector::from_fn(n, |k, _| rng.gen_range(lo[k]..hi[k]));
            let depth = b.halfspaces().iter().map(|h| -h.excess(&p)).fold(f64::MAX, f64::min);
            assert!(depth <= ball.radius + 1e-12);
        }
    }
}

#[test]
fn planar_width_matches_direction_sweep() {
    for i in 0..50 {
        let b = random_body(derive_seed(5, 2, i), 2);
        let w = width(&b);
        assert!(!w.approximate);
        let sweep = (0..20_000)
            .map(|k| {
                let a = k as f64 * std::f64::consts::PI / 20_000.0;
                let u = vector(&[a.cos(), a.sin()]);
                let (lo, hi) = b
                    .vertices()
                    .iter()
                    .fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v.dot(&u)), hi.max(v.dot(&u))));
                hi - lo
            })
            .fold(f64::MAX, f64::min);
        assert!(w.value <= sweep + 1e-12);
        // The slab width has a kink at edge normals, so the sweep is only
        // first-order accurate in the angular step.
        let step = std::f64::consts::PI / 20_000.0;
        assert!(sweep - w.value <= 2.0 * b.extent() * step);
    }
}

#[test]
fn erosion_then_sum_stays_inside() {
    for i in 0..100 {
        let n = 2 + (i % 2) as usize;
        let k = random_body(derive_seed(6, n as u64, i), n);
        let e = random_body(derive_seed(7, n as u64, i), n);
        let c = e.vertex_centroid();
        let small = e.translate(&-c).unwrap().scale(0.2).unwrap();
        if let Some(diff) = erode_body(&k, &small).unwrap().into_body() {
            let back = diff.minkowski_sum(&small).unwrap();
            assert!(k.contains_body_within(&back, 1e-9).unwrap());
        }
    }
}

#[test]
fn representation_roundtrip() {
    for i in 0..100 {
        let n = 2 + (i % 2) as usize;
        let b = random_body(derive_seed(8, n as u64, i), n);
        let again = ConvexBody::from_halfspaces(b.halfspaces().to_vec()).unwrap();
        assert!(again.same_set(&b, 1e-9).unwrap());
        let back = ConvexBody::from_vertices(again.vertices()).unwrap();
        assert_eq!(back.halfspaces().len(), b.halfspaces().len());
        assert!(back.same_set(&b, 1e-9).unwrap());
    }
}

#[test]
fn form_body_normals_touch_unit_ball() {
    for i in 0..50 {
        let n = 2 + (i % 2) as usize;
        let b = random_body(derive_seed(9, n as u64, i), n);
        let fb = form_body(&b).unwrap();
        for h in b.halfspaces() {
            assert!((fb.support(h.normal()).unwrap() - 1.0).abs() < 1e-9);
        }
        assert!((inradius(&fb).unwrap().radius - 1.0).abs() < 1e-9);
    }
}
