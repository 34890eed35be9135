use innerbody::metrics::{inradius, surface_area, volume, width};
use innerbody::numeric::solve_lp;
use innerbody::parallel::{erode_ball, Erosion};
use innerbody::verify::{check_main_bound, generate, radius_grid, GeneratorConfig, GeneratorKind, T_FRACTIONS};
use innerbody::{ConvexBody, Vector};
use proptest::prelude::*;

fn body(seed: u64, dim: usize, size: usize) -> ConvexBody {
    generate(&GeneratorConfig {
        seed,
        dim,
        kind: GeneratorKind::HullOfRandomPoints,
        size: size.max(dim + 3),
    })
    .unwrap()
}

fn direction(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-1.0f64..1.0, dim)
        .prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-4)
        .prop_map(|v| {
            let v = Vector::from_vec(v);
            let len = v.norm();
            v / len
        })
}

fn eroded(b: &ConvexBody, t: f64) -> ConvexBody {
    match erode_ball(b, t).unwrap() {
        Erosion::Body(e) => e,
        Erosion::Collapsed { inradius } => panic!("collapsed at t={t}, r={inradius}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_is_additive(sa in any::<u64>(), sb in any::<u64>(), dim in 2usize..=3, u in direction(3)) {
        let a = body(sa, dim, 12);
        let b = body(sb, dim, 9);
        let u = Vector::from_iterator(dim, u.iter().take(dim).copied()).normalize();
        let sum = a.minkowski_sum(&b).unwrap();
        let lhs = sum.support(&u).unwrap();
        let rhs = a.support(&u).unwrap() + b.support(&u).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn support_translates(s in any::<u64>(), x in prop::collection::vec(-5.0f64..5.0, 2), u in direction(2)) {
        let a = body(s, 2, 15);
        let x = Vector::from_vec(x);
        let moved = a.translate(&x).unwrap();
        let expect = a.support(&u).unwrap() + x.dot(&u);
        prop_assert!((moved.support(&u).unwrap() - expect).abs() <= 1e-9 * (1.0 + expect.abs()));
    }

    #[test]
    fn erosion_is_a_semigroup(s in any::<u64>(), dim in 2usize..=3, f in 0.05f64..0.45, g in 0.05f64..0.45) {
        let b = body(s, dim, 20);
        let r = inradius(&b).unwrap().radius;
        let (a, c) = (f * r, g * r);
        let twice = eroded(&eroded(&b, a), c);
        let once = eroded(&b, a + c);
        prop_assert!(twice.same_set(&once, 1e-9 * b.extent().max(1.0)).unwrap());
    }

    #[test]
    fn functionals_are_homogeneous(s in any::<u64>(), dim in 2usize..=3, lambda in 0.1f64..10.0) {
        let b = body(s, dim, 16);
        let big = b.scale(lambda).unwrap();
        let n = dim as i32;
        prop_assert!((volume(&big) - lambda.powi(n) * volume(&b)).abs() <= 1e-9 * volume(&big));
        prop_assert!((surface_area(&big) - lambda.powi(n - 1) * surface_area(&b)).abs() <= 1e-9 * surface_area(&big));
        let (rb, rs) = (inradius(&big).unwrap().radius, inradius(&b).unwrap().radius);
        prop_assert!((rb - lambda * rs).abs() <= 1e-9 * rb);
        prop_assert!((width(&big).value - lambda * width(&b).value).abs() <= 1e-9 * width(&big).value);
    }

    #[test]
    fn planar_perimeter_is_minkowski_linear(sa in any::<u64>(), sb in any::<u64>()) {
        let a = body(sa, 2, 11);
        let b = body(sb, 2, 7);
        let sum = a.minkowski_sum(&b).unwrap();
        let expect = surface_area(&a) + surface_area(&b);
        prop_assert!((surface_area(&sum) - expect).abs() <= 1e-9 * expect);
    }

    #[test]
    fn containment_orders_eroded_family(s in any::<u64>(), dim in 2usize..=3, f in 0.05f64..0.4) {
        let b = body(s, dim, 18);
        let r = inradius(&b).unwrap().radius;
        let one = eroded(&b, f * r);
        let two = eroded(&b, 2.0 * f * r);
        prop_assert!(b.contains_body(&b).unwrap());
        prop_assert!(b.contains_body(&one).unwrap());
        prop_assert!(one.contains_body(&two).unwrap());
        prop_assert!(b.contains_body(&two).unwrap());
        prop_assert!(!one.contains_body(&b).unwrap());
    }

    #[test]
    fn lp_is_deterministic(s in any::<u64>(), dim in 2usize..=3, u in direction(3)) {
        let b = body(s, dim, 14);
        let u = Vector::from_iterator(dim, u.iter().take(dim).copied());
        let cons: Vec<(Vector, f64)> = b.halfspaces().iter().map(|h| (h.normal().clone(), h.offset())).collect();
        let first = solve_lp(&u, &cons).unwrap();
        let second = solve_lp(&u, &cons).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn main_bound_holds(s in any::<u64>(), dim in 2usize..=3, size in 5usize..40) {
        let b = body(s, dim, size);
        let r = inradius(&b).unwrap().radius;
        let rep = check_main_bound(&b, &radius_grid(r, &T_FRACTIONS)).unwrap();
        prop_assert!(rep.passed, "{:?}", rep);
    }
}
