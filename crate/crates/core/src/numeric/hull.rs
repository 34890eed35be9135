//! Convex hulls of finite point sets.
//!
//! The planar case uses Andrew's monotone chain, ℝ³ uses incremental
//! insertion with horizon tracking, and higher dimensions enumerate
//! supporting hyperplanes through n-point subsets. All three report merged
//! facets (coplanar triangles are fused) and only genuine extreme points.

use std::collections::HashSet;

use itertools::Itertools;
use nalgebra::Vector3;

use super::{affine_rank, dedupe, direction_rank, extent, hyperplane_normal, Vector, REL_TOL};
use crate::error::{GeomError, Result};

/// Supporting hyperplane `⟨normal, x⟩ = offset` with outward unit normal.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet {
    pub normal: Vector,
    pub offset: f64,
}

#[derive(Debug, Clone)]
pub struct Hull {
    /// Extreme points, each taken verbatim from the input.
    pub vertices: Vec<Vector>,
    /// Input index of each vertex.
    pub source: Vec<usize>,
    pub facets: Vec<Facet>,
    /// For each facet, indices into `vertices` of the points lying on it.
    pub facet_vertices: Vec<Vec<usize>>,
}

pub fn convex_hull(points: &[Vector]) -> Result<Hull> {
    let Some(first) = points.first() else {
        return Err(GeomError::InvalidInput("empty point set".into()));
    };
    let n = first.len();
    if n < 2 {
        return Err(GeomError::InvalidInput(format!(
            "hulls need dimension >= 2, got {n}"
        )));
    }
    for p in points {
        if p.len() != n {
            return Err(GeomError::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
        if p.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::InvalidInput("non-finite coordinate".into()));
        }
    }
    let scale = extent(points);
    if scale == 0.0 {
        return Err(GeomError::Degenerate { rank: 0, dim: n });
    }
    let eps = REL_TOL * scale;
    let kept = dedupe(points, eps);
    let unique: Vec<Vector> = kept.iter().map(|&i| points[i].clone()).collect();
    let rank = affine_rank(&unique, 1e-9 * scale);
    if rank < n {
        return Err(GeomError::Degenerate { rank, dim: n });
    }
    let mut hull = match n {
        2 => monotone_chain(&unique, eps),
        3 => incremental_3d(&unique, eps)?,
        _ => enumerate_hyperplanes(&unique, eps),
    };
    for s in hull.source.iter_mut() {
        *s = kept[*s];
    }
    Ok(hull)
}

fn cross2(o: &Vector, a: &Vector, b: &Vector) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn monotone_chain(points: &[Vector], eps: f64) -> Hull {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a][0]
            .total_cmp(&points[b][0])
            .then(points[a][1].total_cmp(&points[b][1]))
    });
    // Exact-sign chains first; near-collinear vertices are pruned afterwards
    // because a tolerance inside the chain interacts badly with the
    // lexicographic order of slightly perturbed coordinates.
    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && cross2(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[i]) <= 0.0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && cross2(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[i]) <= 0.0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    loop {
        let k = lower.len();
        if k <= 3 {
            break;
        }
        let flat = (0..k).find(|&i| {
            let o = &points[lower[(i + k - 1) % k]];
            let a = &points[lower[i]];
            let q = &points[lower[(i + 1) % k]];
            cross2(o, a, q) <= eps * (q - o).norm()
        });
        match flat {
            Some(i) => {
                lower.remove(i);
            }
            None => break,
        }
    }

    let vertices: Vec<Vector> = lower.iter().map(|&i| points[i].clone()).collect();
    let k = vertices.len();
    let mut facets = Vec::with_capacity(k);
    let mut facet_vertices = Vec::with_capacity(k);
    for i in 0..k {
        let j = (i + 1) % k;
        let e = &vertices[j] - &vertices[i];
        let normal = Vector::from_column_slice(&[e[1], -e[0]]) / e.norm();
        let offset = 0.5 * (normal.dot(&vertices[i]) + normal.dot(&vertices[j]));
        facets.push(Facet { normal, offset });
        facet_vertices.push(vec![i, j]);
    }
    Hull {
        vertices,
        source: lower,
        facets,
        facet_vertices,
    }
}

struct Tri {
    v: [usize; 3],
    normal: Vector3<f64>,
    offset: f64,
    area2: f64,
    alive: bool,
}

fn incremental_3d(points: &[Vector], eps: f64) -> Result<Hull> {
    let p: Vec<Vector3<f64>> = points.iter().map(|v| Vector3::new(v[0], v[1], v[2])).collect();
    let m = p.len();

    // Initial tetrahedron from extreme choices.
    let i0 = (0..m)
        .min_by(|&a, &b| p[a].x.total_cmp(&p[b].x).then(a.cmp(&b)))
        .unwrap();
    let i1 = (0..m)
        .max_by(|&a, &b| (p[a] - p[i0]).norm().total_cmp(&(p[b] - p[i0]).norm()).then(b.cmp(&a)))
        .unwrap();
    let dir = (p[i1] - p[i0]).normalize();
    let line_dist = |q: &Vector3<f64>| {
        let d = q - p[i0];
        (d - dir * d.dot(&dir)).norm()
    };
    let i2 = (0..m)
        .max_by(|&a, &b| line_dist(&p[a]).total_cmp(&line_dist(&p[b])).then(b.cmp(&a)))
        .unwrap();
    let pn = (p[i1] - p[i0]).cross(&(p[i2] - p[i0])).normalize();
    let plane_dist = |q: &Vector3<f64>| (q - p[i0]).dot(&pn).abs();
    let i3 = (0..m)
        .max_by(|&a, &b| plane_dist(&p[a]).total_cmp(&plane_dist(&p[b])).then(b.cmp(&a)))
        .unwrap();
    if plane_dist(&p[i3]) <= eps || line_dist(&p[i2]) <= eps {
        return Err(GeomError::Degenerate { rank: 2, dim: 3 });
    }
    let interior = (p[i0] + p[i1] + p[i2] + p[i3]) / 4.0;

    let make = |a: usize, b: usize, c: usize| -> Option<Tri> {
        let mut v = [a, b, c];
        let mut nrm = (p[b] - p[a]).cross(&(p[c] - p[a]));
        let area2 = nrm.norm();
        if area2 <= f64::MIN_POSITIVE {
            return None;
        }
        nrm /= area2;
        if nrm.dot(&(interior - p[a])) > 0.0 {
            v.swap(1, 2);
            nrm = -nrm;
        }
        let offset = nrm.dot(&p[a]);
        Some(Tri {
            v,
            normal: nrm,
            offset,
            area2,
            alive: true,
        })
    };

    let mut faces: Vec<Tri> = [
        (i0, i1, i2),
        (i0, i1, i3),
        (i0, i2, i3),
        (i1, i2, i3),
    ]
    .iter()
    .filter_map(|&(a, b, c)| make(a, b, c))
    .collect();

    let seeds = [i0, i1, i2, i3];
    for q in 0..m {
        if seeds.contains(&q) {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&f| faces[f].alive && faces[f].normal.dot(&p[q]) - faces[f].offset > eps)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut edges: HashSet<(usize, usize)> = HashSet::new();
        for &f in &visible {
            let v = faces[f].v;
            for k in 0..3 {
                edges.insert((v[k], v[(k + 1) % 3]));
            }
        }
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        for &f in &visible {
            let v = faces[f].v;
            for k in 0..3 {
                let e = (v[k], v[(k + 1) % 3]);
                if !edges.contains(&(e.1, e.0)) {
                    horizon.push(e);
                }
            }
            faces[f].alive = false;
        }
        faces.retain(|f| f.alive);
        for (a, b) in horizon {
            if let Some(t) = make(a, b, q) {
                faces.push(t);
            }
        }
    }

    // Fuse coplanar triangles into facets.
    struct Group {
        weighted: Vector3<f64>,
        normal: Vector3<f64>,
        verts: Vec<usize>,
    }
    let mut groups: Vec<Group> = Vec::new();
    for f in faces.iter().filter(|f| f.alive) {
        let hit = groups.iter_mut().find(|g| {
            g.normal.dot(&f.normal) > 1.0 - 1e-9
                && f.v.iter().all(|&i| (g.normal.dot(&p[i]) - g.normal.dot(&p[g.verts[0]])).abs() <= eps)
        });
        match hit {
            Some(g) => {
                g.weighted += f.normal * f.area2;
                g.normal = g.weighted.normalize();
                for &i in &f.v {
                    if !g.verts.contains(&i) {
                        g.verts.push(i);
                    }
                }
            }
            None => groups.push(Group {
                weighted: f.normal * f.area2,
                normal: f.normal,
                verts: f.v.to_vec(),
            }),
        }
    }

    let planes: Vec<(Vector3<f64>, f64)> = groups
        .iter()
        .map(|g| {
            let off = g.verts.iter().map(|&i| g.normal.dot(&p[i])).sum::<f64>() / g.verts.len() as f64;
            (g.normal, off)
        })
        .collect();

    let mut candidates: Vec<usize> = groups.iter().flat_map(|g| g.verts.iter().copied()).collect();
    candidates.sort_unstable();
    candidates.dedup();

    let normals: Vec<Vector> = planes
        .iter()
        .map(|(nrm, _)| Vector::from_column_slice(nrm.as_slice()))
        .collect();
    let mut keep: Vec<usize> = Vec::new();
    for &i in &candidates {
        let tight: Vec<&Vector> = planes
            .iter()
            .enumerate()
            .filter(|(_, (nrm, off))| (nrm.dot(&p[i]) - off).abs() <= eps)
            .map(|(k, _)| &normals[k])
            .collect();
        if direction_rank(&tight, 1e-10) >= 3 {
            keep.push(i);
        }
    }
    Ok(assemble(points, &keep, normals.into_iter().zip(planes.iter().map(|(_, o)| *o)), eps, 3))
}

fn enumerate_hyperplanes(points: &[Vector], eps: f64) -> Hull {
    let n = points[0].len();
    let mut planes: Vec<(Vector, f64)> = Vec::new();
    for subset in (0..points.len()).combinations(n) {
        let refs: Vec<&Vector> = subset.iter().map(|&i| &points[i]).collect();
        let Some(mut normal) = hyperplane_normal(&refs) else {
            continue;
        };
        let mut offset = normal.dot(refs[0]);
        let (mut above, mut below) = (false, false);
        for q in points {
            let s = normal.dot(q) - offset;
            above |= s > eps;
            below |= s < -eps;
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        if above {
            normal = -normal;
            offset = -offset;
        }
        let dup = planes
            .iter()
            .any(|(a, b)| a.dot(&normal) > 1.0 - 1e-9 && (b - offset).abs() <= eps);
        if !dup {
            planes.push((normal, offset));
        }
    }
    let mut keep = Vec::new();
    for (i, q) in points.iter().enumerate() {
        let tight: Vec<&Vector> = planes
            .iter()
            .filter(|(a, b)| (a.dot(q) - b).abs() <= eps)
            .map(|(a, _)| a)
            .collect();
        if direction_rank(&tight, 1e-10) >= n {
            keep.push(i);
        }
    }
    // Refit offsets on the surviving vertices.
    let refit: Vec<(Vector, f64)> = planes
        .into_iter()
        .map(|(a, _)| {
            let tight: Vec<f64> = keep
                .iter()
                .map(|&i| a.dot(&points[i]))
                .collect();
            let top = tight.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let on: Vec<f64> = tight.into_iter().filter(|s| top - s <= eps).collect();
            let off = on.iter().sum::<f64>() / on.len() as f64;
            (a, off)
        })
        .collect();
    assemble(points, &keep, refit.into_iter(), eps, n)
}

fn assemble(
    points: &[Vector],
    keep: &[usize],
    planes: impl Iterator<Item = (Vector, f64)>,
    eps: f64,
    n: usize,
) -> Hull {
    let vertices: Vec<Vector> = keep.iter().map(|&i| points[i].clone()).collect();
    let mut facets = Vec::new();
    let mut facet_vertices = Vec::new();
    for (normal, offset) in planes {
        let on: Vec<usize> = (0..vertices.len())
            .filter(|&k| (normal.dot(&vertices[k]) - offset).abs() <= eps)
            .collect();
        if on.len() >= n {
            facets.push(Facet { normal, offset });
            facet_vertices.push(on);
        }
    }
    Hull {
        vertices,
        source: keep.to_vec(),
        facets,
        facet_vertices,
    }
}
