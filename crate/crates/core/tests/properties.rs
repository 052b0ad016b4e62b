use proptest::prelude::*;

use minkasym::complete;
use minkasym::gauges;
use minkasym::geom::{self, ConvexPolygon, GaugeBody, Mat2, Vec2};
use minkasym::symm;

fn points(min: usize, max: usize) -> impl Strategy<Value = Vec<Vec2>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), min..=max)
        .prop_map(|v| v.into_iter().map(Vec2::from).collect())
}

fn body() -> impl Strategy<Value = ConvexPolygon> {
    points(3, 16).prop_filter_map("degenerate hull", |p| {
        ConvexPolygon::new(&p).ok().filter(|k| k.area() > 1e-3)
    })
}

fn centered_body() -> impl Strategy<Value = (ConvexPolygon, f64)> {
    body().prop_filter_map("asymmetry", |k| {
        gauges::minkowski_centered(&k).ok().map(|(k, r)| (k, r.s))
    })
}

fn symmetric_gauge() -> impl Strategy<Value = GaugeBody> {
    points(2, 6).prop_filter_map("degenerate gauge", |p| {
        let mut all = p.clone();
        all.extend(p.iter().map(|v| -*v));
        let k = ConvexPolygon::new(&all).ok().filter(|k| k.area() > 1e-3)?;
        GaugeBody::symmetric(geom::symmetric_closure(&k)).ok()
    })
}

fn map() -> impl Strategy<Value = Mat2> {
    (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0)
        .prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
        .prop_filter("ill-conditioned", |m| {
            let fro = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
            fro <= 40.0 * m.det().abs()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hull_matches_brute_force(pts in points(3, 24)) {
        if let Ok(k) = ConvexPolygon::new(&pts) {
            let oracle = geom::hull_brute_force(&pts).unwrap();
            prop_assert!(geom::hausdorff(&k, &oracle) <= 1e-9);
            for p in &pts {
                prop_assert!(k.contains_point(*p, 1e-9));
            }
        }
    }

    #[test]
    fn intersect_matches_clipping(p in body(), q in body(), dx in -1.0f64..1.0, dy in -1.0f64..1.0) {
        let q = q.translate(Vec2::new(dx, dy));
        match (geom::intersect(&p, &q), geom::intersect_by_clipping(&p, &q)) {
            (Ok(a), Ok(b)) => {
                prop_assert!(geom::hausdorff(&a, &b) <= 1e-9);
                prop_assert!(geom::contains(&p, &a, 1e-9) && geom::contains(&q, &a, 1e-9));
            }
            (Err(_), Err(_)) => {}
            (Ok(a), Err(_)) | (Err(_), Ok(a)) => prop_assert!(a.area() <= 1e-9),
        }
    }

    #[test]
    fn sum_support_is_additive(p in body(), q in body(), theta in 0.0f64..std::f64::consts::TAU) {
        let s = geom::minkowski_sum(&p, &q);
        let u = Vec2::from_angle(theta);
        let want = p.support_value(u) + q.support_value(u);
        prop_assert!((s.support_value(u) - want).abs() <= 1e-9);
        let brute: Vec<Vec2> = p.vertices().iter()
            .flat_map(|a| q.vertices().iter().map(move |b| *a + *b))
            .collect();
        prop_assert!(geom::hausdorff(&s, &ConvexPolygon::new(&brute).unwrap()) <= 1e-9);
    }

    #[test]
    fn support_and_gauge_lookups_match_scans((k, _) in centered_body(), theta in 0.0f64..std::f64::consts::TAU, r in 0.01f64..3.0) {
        let u = Vec2::from_angle(theta);
        prop_assert!((k.support_value(u) - k.support_value_linear(u)).abs() <= 1e-12);
        let g = GaugeBody::new(k.clone(), false).unwrap();
        let x = u * r;
        prop_assert!((g.gauge_value(x) - g.gauge_value_linear(x)).abs() <= 1e-9 * g.gauge_value_linear(x).max(1.0));
        for v in k.vertices() {
            prop_assert!((g.gauge_value(*v) - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn asymmetry_is_optimal((k, s) in centered_body()) {
        prop_assert!((1.0..=2.0 + 1e-9).contains(&s));
        prop_assert!(geom::contains(&k.scale(s), &k.negate(), 1e-7));
        if s > 1.0 + 1e-6 {
            prop_assert!(!gauges::asymmetry_feasible(&k, s - 1e-6).unwrap());
        }
    }

    #[test]
    fn symmetrals_are_nested((k, s) in centered_body()) {
        let t = symm::symmetrize(&k).unwrap();
        prop_assert!(geom::contains(&t.central, &t.inner, 1e-9));
        prop_assert!(geom::contains(&t.outer, &t.central, 1e-9));
        let (a, tau) = symm::alpha_tau(&k).unwrap();
        prop_assert!(a >= 2.0 / (s + 1.0) - 1e-7);
        prop_assert!(a <= 1.0 + 1e-7 && (s <= 1.0 || a <= s / (s * s - 1.0) + 1e-7));
        prop_assert!(a <= tau + 1e-9);
        prop_assert!(tau <= 2.0 * s / (s + 1.0) * a + 1e-7);
    }

    #[test]
    fn ratios_are_linearly_invariant((k, s) in centered_body(), m in map()) {
        let lk = k.linear_map(&m).unwrap();
        let (a, t) = symm::alpha_tau(&k).unwrap();
        let (la, lt) = symm::alpha_tau(&lk).unwrap();
        prop_assert!((a - la).abs() <= 1e-7 && (t - lt).abs() <= 1e-7);
        prop_assert!((gauges::minkowski_asymmetry(&lk).unwrap().s - s).abs() <= 1e-7);
    }

    #[test]
    fn radii_chain_holds((k, s) in centered_body(), c in symmetric_gauge()) {
        let r = gauges::inradius(&k, &c).unwrap().scale;
        let big_r = gauges::circumradius(&k, &c).unwrap().scale;
        let (d, _) = gauges::diameter(&k, &c).unwrap();
        let (w, _) = gauges::width(&k, &c).unwrap();
        let chain = [w / 2.0, (s + 1.0) * r / 2.0, (r + big_r) / 2.0, (s + 1.0) * big_r / (2.0 * s), d / 2.0];
        for pair in chain.windows(2) {
            prop_assert!(pair[0] <= pair[1] + 1e-7 * d.max(1.0), "{chain:?}");
        }
        let (dv, _) = gauges::diameter_vertex_pairs(&k, &c).unwrap();
        prop_assert!((d - dv).abs() <= 1e-9 * d.max(1.0));
    }

    #[test]
    fn radii_realize_containment(k in body(), c in symmetric_gauge()) {
        let out = gauges::circumradius(&k, &c).unwrap();
        let big = c.body().scale(out.scale).translate(out.translation);
        prop_assert!(geom::contains(&big, &k, 1e-7));
        prop_assert!(out.certificate_gap() <= 1e-7);
        let inn = gauges::inradius(&k, &c).unwrap();
        let small = c.body().scale(inn.scale).translate(inn.translation);
        prop_assert!(geom::contains(&k, &small, 1e-7));
    }

    #[test]
    fn pseudo_completeness_against_own_central_symmetral((k, _) in centered_body()) {
        let c = GaugeBody::symmetric(geom::symmetric_closure(&symm::symmetrize(&k).unwrap().central)).unwrap();
        let (pc, rep) = complete::is_pseudo_complete(&k, &c, 1e-6).unwrap();
        prop_assert!(pc, "{rep:?}");
        prop_assert!((rep.dw_ratio - 1.0).abs() <= 1e-6);
        prop_assert!(rep.dw_ratio <= (rep.asymmetry + 1.0) / 2.0 + 1e-6);
    }

    #[test]
    fn crossings_are_symmetric_under_negation((k, _) in centered_body()) {
        let a = symm::crossing_count(&k);
        let b = symm::crossing_count(&k.negate());
        prop_assert_eq!(a.encoded_count(), b.encoded_count());
        prop_assert_eq!(a.components(), b.components());
    }

    #[test]
    fn json_round_trip(k in body()) {
        let back = geom::polygon_from_json(&geom::polygon_to_json(&k)).unwrap();
        prop_assert_eq!(back, k);
    }
}
