//! Seeded body generators and named fixtures.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::body::{ConvexBody, HalfSpace};
use crate::error::{GeomError, Result};
use crate::metrics::{inradius, random_unit, volume};
use crate::numeric::{vector, Vector};

const MAX_RESAMPLES: usize = 1000;
/// Tangential bodies whose circumradius exceeds this multiple of the
/// inradius are resampled; very long needles only test conditioning.
const MAX_ASPECT: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    HullOfRandomPoints,
    Tangential,
    Rectangle,
    Simplex,
    RegularMgon,
    NamedFixture,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::HullOfRandomPoints => "hull",
            GeneratorKind::Tangential => "tangential",
            GeneratorKind::Rectangle => "rectangle",
            GeneratorKind::Simplex => "simplex",
            GeneratorKind::RegularMgon => "mgon",
            GeneratorKind::NamedFixture => "fixture",
        }
    }
}

/// A reproducible recipe for one body. `size` is the point count, normal
/// count, polygon order or fixture index depending on `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub dim: usize,
    pub kind: GeneratorKind,
    pub size: usize,
}

/// Mixes a master seed with two stream indices (splitmix64 finalizer).
pub fn derive_seed(master: u64, a: u64, b: u64) -> u64 {
    let mut z = master
        .wrapping_add(a.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(b.wrapping_mul(0xc2b2_ae3d_27d4_eb4f));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn generate(config: &GeneratorConfig) -> Result<ConvexBody> {
    if config.dim < 2 {
        return Err(GeomError::InvalidInput(format!("dimension {} < 2", config.dim)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.kind {
        GeneratorKind::HullOfRandomPoints => gen_hull(&mut rng, config.dim, config.size),
        GeneratorKind::Tangential => gen_tangential(config),
        GeneratorKind::Rectangle => gen_rectangle(&mut rng, config.dim),
        GeneratorKind::Simplex => gen_simplex(&mut rng, config.dim),
        GeneratorKind::RegularMgon => gen_mgon(config.dim, config.size),
        GeneratorKind::NamedFixture => {
            let names = fixture_names(config.dim);
            if names.is_empty() {
                return Err(GeomError::UnsupportedDimension(config.dim));
            }
            named_fixture(names[config.size % names.len()])
        }
    }
}

/// Random polytope. In the plane: `size` points at jittered, roughly evenly
/// spaced angles on a radially perturbed circle under a random linear map, resampled until the hull has at least
/// five edges. Otherwise: hull of `size` uniform points in the unit cube.
fn gen_hull(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Result<ConvexBody> {
    if size < n + 1 {
        return Err(GeomError::Generator(format!("need at least {} points, got {size}", n + 1)));
    }
    for _ in 0..MAX_RESAMPLES {
        let points: Vec<Vector> = if n == 2 {
            let m = random_plane_map(rng);
            let phase = rng.gen_range(0.0..2.0 * PI);
            let step = 2.0 * PI / size as f64;
            // Radial noise below the sagitta keeps almost every point extreme.
            let noise = 0.2 * (1.0 - (0.3 * step).cos());
            (0..size)
                .map(|k| {
                    let a = phase + step * (k as f64 + rng.gen_range(-0.35..0.35));
                    let r = 1.0 + rng.gen_range(-noise..noise);
                    &m * vector(&[r * a.cos(), r * a.sin()])
                })
                .collect()
        } else {
            (0..size)
                .map(|_| Vector::from_fn(n, |_, _| rng.gen_range(0.0..1.0)))
                .collect()
        };
        match ConvexBody::from_vertices(&points) {
            Ok(b) if n != 2 || b.halfspaces().len() >= 5.min(size) => return Ok(b),
            Ok(_) | Err(GeomError::Degenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GeomError::Generator("hull sampling did not produce a valid body".into()))
}

/// Planar linear map with singular values in [0.5, 2].
fn random_plane_map(rng: &mut ChaCha8Rng) -> nalgebra::DMatrix<f64> {
    let angle = rng.gen_range(0.0..PI);
    let (s, c) = angle.sin_cos();
    let rot = nalgebra::DMatrix::from_row_slice(2, 2, &[c, -s, s, c]);
    let diag = nalgebra::DMatrix::from_diagonal(&Vector::from_fn(2, |_, _| rng.gen_range(0.5..2.0)));
    rot * diag
}

/// Intersection of halfspaces tangent to `B_ρ(0)` with random unit normals,
/// resampled until the normals positively span (the body is bounded).
pub fn gen_tangential(config: &GeneratorConfig) -> Result<ConvexBody> {
    let n = config.dim;
    if config.kind != GeneratorKind::Tangential {
        return Err(GeomError::InvalidInput("generator kind is not tangential".into()));
    }
    if config.size < n + 1 {
        return Err(GeomError::Generator(format!(
            "need at least {} normals, got {}",
            n + 1,
            config.size
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let rho = rng.gen_range(0.5..2.0);
    for _ in 0..MAX_RESAMPLES {
        let hs: Vec<HalfSpace> = (0..config.size)
            .map(|_| HalfSpace::new(random_unit(&mut rng, n), rho))
            .collect::<Result<_>>()?;
        match ConvexBody::from_halfspaces(hs) {
            Ok(b) => {
                let circum = b.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max);
                if circum <= MAX_ASPECT * rho {
                    return Ok(b);
                }
            }
            Err(GeomError::UnboundedBody) => {}
            Err(e) => return Err(e),
        }
    }
    Err(GeomError::Generator(format!(
        "normals failed to span after {MAX_RESAMPLES} resamples"
    )))
}

/// Axis-aligned box with side lengths in [0.5, 3] and a random corner.
fn gen_rectangle(rng: &mut ChaCha8Rng, n: usize) -> Result<ConvexBody> {
    let lo: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let len: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..3.0)).collect();
    axis_box(&lo, &len)
}

fn axis_box(lo: &[f64], len: &[f64]) -> Result<ConvexBody> {
    let n = lo.len();
    let mut hs = Vec::with_capacity(2 * n);
    for k in 0..n {
        let mut e = Vector::zeros(n);
        e[k] = 1.0;
        hs.push(HalfSpace::new(e.clone(), lo[k] + len[k])?);
        hs.push(HalfSpace::new(-e, -lo[k])?);
    }
    ConvexBody::from_halfspaces(hs)
}

/// Simplex on `n + 1` Gaussian points, rejected while its inradius is tiny
/// compared with its diameter.
fn gen_simplex(rng: &mut ChaCha8Rng, n: usize) -> Result<ConvexBody> {
    for _ in 0..MAX_RESAMPLES {
        let points: Vec<Vector> = (0..=n)
            .map(|_| Vector::from_fn(n, |_, _| rng.sample::<f64, _>(rand_distr::StandardNormal)))
            .collect();
        let Ok(b) = ConvexBody::from_vertices(&points) else {
            continue;
        };
        if volume(&b) <= 0.0 {
            continue;
        }
        let r = inradius(&b)?.radius;
        if b.extent() <= MAX_ASPECT * r {
            return Ok(b);
        }
    }
    Err(GeomError::Generator("simplex sampling kept degenerating".into()))
}

/// Regular `m`-gon with unit apothem; in ℝ³ the right prism of height 2 over it.
fn gen_mgon(n: usize, m: usize) -> Result<ConvexBody> {
    if m < 3 {
        return Err(GeomError::Generator(format!("polygon order {m} < 3")));
    }
    let mut hs: Vec<HalfSpace> = (0..m)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / m as f64;
            let mut u = Vector::zeros(n);
            u[0] = a.cos();
            u[1] = a.sin();
            HalfSpace::new(u, 1.0)
        })
        .collect::<Result<_>>()?;
    match n {
        2 => {}
        3 => {
            hs.push(HalfSpace::new(vector(&[0.0, 0.0, 1.0]), 1.0)?);
            hs.push(HalfSpace::new(vector(&[0.0, 0.0, -1.0]), 1.0)?);
        }
        _ => return Err(GeomError::UnsupportedDimension(n)),
    }
    ConvexBody::from_halfspaces(hs)
}

pub fn fixture_names(dim: usize) -> &'static [&'static str] {
    match dim {
        2 => &[
            "square",
            "rectangle",
            "triangle-345",
            "equilateral-triangle",
            "hexagon",
            "disc64",
        ],
        3 => &["cube", "box", "tetrahedron"],
        _ => &[],
    }
}

/// Closed-form test bodies: `square` = [0,1]², `rectangle` = [0,2]×[0,1],
/// `triangle-345`, `equilateral-triangle` (side 2), `hexagon` and `disc64`
/// (regular, circumradius 1), `cube` = [0,1]³, `box` = [0,2]×[0,1]², and the
/// regular `tetrahedron` on alternate corners of [−1,1]³.
pub fn named_fixture(name: &str) -> Result<ConvexBody> {
    let poly = |pts: &[&[f64]]| {
        let v: Vec<Vector> = pts.iter().map(|p| vector(p)).collect();
        ConvexBody::from_vertices(&v)
    };
    let regular = |m: usize| {
        let v: Vec<Vector> = (0..m)
            .map(|k| {
                let a = 2.0 * PI * k as f64 / m as f64;
                vector(&[a.cos(), a.sin()])
            })
            .collect();
        ConvexBody::from_vertices(&v)
    };
    match name {
        "square" => axis_box(&[0.0, 0.0], &[1.0, 1.0]),
        "rectangle" => axis_box(&[0.0, 0.0], &[2.0, 1.0]),
        "triangle-345" => poly(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 3.0]]),
        "equilateral-triangle" => poly(&[&[0.0, 0.0], &[2.0, 0.0], &[1.0, 3f64.sqrt()]]),
        "hexagon" => regular(6),
        "disc64" => regular(64),
        "cube" => axis_box(&[0.0; 3], &[1.0; 3]),
        "box" => axis_box(&[0.0; 3], &[2.0, 1.0, 1.0]),
        "tetrahedron" => poly(&[
            &[1.0, 1.0, 1.0],
            &[1.0, -1.0, -1.0],
            &[-1.0, 1.0, -1.0],
            &[-1.0, -1.0, 1.0],
        ]),
        _ => Err(GeomError::InvalidInput(format!("unknown fixture {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::form_body;

    fn cfg(kind: GeneratorKind, dim: usize, seed: u64, size: usize) -> GeneratorConfig {
        GeneratorConfig { seed, dim, kind, size }
    }

    #[test]
    fn tangential_axis_normals_give_square() {
        let hs: Vec<HalfSpace> = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]
            .iter()
            .map(|a| HalfSpace::new(vector(a), 1.0).unwrap())
            .collect();
        let b = ConvexBody::from_halfspaces(hs).unwrap();
        let sq = axis_box(&[-1.0, -1.0], &[2.0, 2.0]).unwrap();
        assert!(b.same_set(&sq, 1e-12).unwrap());
    }

    #[test]
    fn tangential_bodies_are_homothetic_to_form_body() {
        for dim in [2, 3] {
            for i in 0..20 {
                let c = cfg(GeneratorKind::Tangential, dim, derive_seed(3, dim as u64, i), 4 + i as usize % 9);
                let b = gen_tangential(&c).unwrap();
                let ball = inradius(&b).unwrap();
                let rho = b.halfspaces()[0].offset();
                assert!((ball.radius - rho).abs() < 1e-8);
                assert!(b.halfspaces().iter().all(|h| (h.offset() - rho).abs() < 1e-12));
                let fb = form_body(&b).unwrap();
                let h = b.is_homothetic(&fb).unwrap().expect("homothetic");
                assert!((h.factor - rho).abs() < 1e-8);
                assert!(h.translation.norm() < 1e-8);
                assert!(fb.same_set(&b.scale(1.0 / rho).unwrap(), 1e-9).unwrap());
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        for kind in [
            GeneratorKind::HullOfRandomPoints,
            GeneratorKind::Tangential,
            GeneratorKind::Rectangle,
            GeneratorKind::Simplex,
            GeneratorKind::RegularMgon,
            GeneratorKind::NamedFixture,
        ] {
            for dim in [2, 3] {
                let c = cfg(kind, dim, 99, 12);
                let a = generate(&c).unwrap();
                let b = generate(&c).unwrap();
                assert_eq!(a.vertices(), b.vertices());
                assert_eq!(a.halfspaces(), b.halfspaces());
                a.validate().unwrap();
            }
        }
    }

    #[test]
    fn planar_hulls_have_enough_edges() {
        for i in 0..50 {
            let c = cfg(GeneratorKind::HullOfRandomPoints, 2, derive_seed(1, 2, i), 5 + i as usize % 36);
            let b = generate(&c).unwrap();
            assert!(b.halfspaces().len() >= 5 && b.halfspaces().len() <= 40);
        }
    }

    #[test]
    fn fixtures_load() {
        for dim in [2, 3] {
            for name in fixture_names(dim) {
                let b = named_fixture(name).unwrap();
                assert_eq!(b.dim(), dim);
                b.validate().unwrap();
            }
        }
        assert!(named_fixture("dodecahedron").is_err());
        let tet = named_fixture("tetrahedron").unwrap();
        assert_eq!(tet.halfspaces().len(), 4);
        assert_eq!(named_fixture("disc64").unwrap().vertices().len(), 64);
    }

    #[test]
    fn spanning_failure_is_reported() {
        let c = cfg(GeneratorKind::Tangential, 3, 5, 3);
        assert!(matches!(gen_tangential(&c), Err(GeomError::Generator(_))));
    }
}
