use proptest::prelude::*;

use cswigner::quad::QuadConfig;
use cswigner::wigner::{
    cm_wigner, rel_wigner_g0, rel_wigner_operator, rel_wigner_quad, rel_wigner_series, total_wigner,
    RelativeOperatorWigner,
};
use cswigner::{Method, PhasePoint, WignerSpec32, WignerSpec64};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_symmetry(n in 0usize..4, alpha in 0usize..5, w in 1.0f64..4.0, q in -3.0f64..3.0, p in -3.0f64..3.0) {
        let op = RelativeOperatorWigner::new(n, alpha, w).unwrap();
        let v = op.eval(PhasePoint::new(q, p)).unwrap().value;
        for (qq, pp) in [(-q, p), (q, -p), (-q, -p)] {
            let u = op.eval(PhasePoint::new(qq, pp)).unwrap().value;
            prop_assert!(close(v, u, 1e-12), "{v} vs {u}");
        }
    }

    #[test]
    fn operator_and_series_agree(n in 0usize..5, alpha in 0usize..5, w in 1.0f64..4.0, q in -3.0f64..3.0, p in -3.0f64..3.0) {
        let pt = PhasePoint::new(q, p);
        let a = rel_wigner_operator(n, alpha, w, pt).unwrap();
        let b = rel_wigner_series(n, alpha, w, pt).unwrap();
        prop_assert!(close(a.value, b.value, 1e-8));
        prop_assert!(a.imag_residue <= 1e-9 && b.imag_residue <= 1e-9);
    }

    #[test]
    fn quadrature_agrees_with_operator(n in 0usize..3, alpha in 0usize..4, w in 1.0f64..3.0, q in -2.5f64..2.5, p in -2.5f64..2.5) {
        let pt = PhasePoint::new(q, p);
        let a = rel_wigner_operator(n, alpha, w, pt).unwrap().value;
        let c = rel_wigner_quad(n, alpha as f64, w, pt, &QuadConfig::default()).unwrap().value;
        prop_assert!(close(a, c, 1e-8), "{a} vs {c}");
    }

    #[test]
    fn bounded_by_one(n in 0usize..4, alpha in 0usize..4, w in 1.0f64..4.0, q in -4.0f64..4.0, p in -4.0f64..4.0) {
        let v = rel_wigner_operator(n, alpha, w, PhasePoint::new(q, p)).unwrap().value;
        prop_assert!(v.abs() <= 1.0 + 1e-12);
        let c = cm_wigner(n, q, p).value;
        prop_assert!(c.abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn total_is_product(l in 0usize..4, n in 0usize..3, alpha in 0usize..3, qs in proptest::array::uniform4(-2.0f64..2.0)) {
        let cm = PhasePoint::new(qs[0], qs[1]);
        let rel = PhasePoint::new(qs[2], qs[3]);
        let t = total_wigner(l, n, alpha as f64, 2.0, cm, rel, Method::Operator).unwrap().value;
        let expect = cm_wigner(l, cm.q, cm.p).value * rel_wigner_operator(n, alpha, 2.0, rel).unwrap().value;
        prop_assert!(close(t, expect, 1e-14));
    }

    #[test]
    fn g0_depends_on_radius_only(j in 0usize..8, w in 1.0f64..4.0, theta in 0.0f64..std::f64::consts::TAU, r in 0.0f64..10.0) {
        // points on the same ellipse w q^2 + p^2 / w = r
        let a = rel_wigner_g0(j, w, PhasePoint::new((r / w).sqrt(), 0.0)).unwrap().value;
        let pt = PhasePoint::new((r / w).sqrt() * theta.cos(), (r * w).sqrt() * theta.sin());
        let b = rel_wigner_g0(j, w, pt).unwrap().value;
        prop_assert!(close(a, b, 1e-10));
    }
}

#[test]
fn single_precision_tracks_double() {
    let s64 = WignerSpec64::relative(1, 2.0, 3.0, Method::Operator).prepare().unwrap();
    let s32 = WignerSpec32::relative(1, 2.0, 3.0, Method::Operator).prepare().unwrap();
    for &(q, p) in &[(0.0, 0.0), (0.4, -0.7), (1.1, 1.3)] {
        let a = s64.eval(PhasePoint::new(q, p)).unwrap().value;
        let b = s32.eval(PhasePoint::new(q as f32, p as f32)).unwrap().value;
        assert!((a - b as f64).abs() < 1e-4, "{a} vs {b}");
    }
}

#[test]
fn non_integer_alpha_only_by_quadrature() {
    let spec = WignerSpec64::relative(0, 1.5, 1.0, Method::Operator);
    assert!(spec.prepare().is_err());
    let spec = WignerSpec64::relative(0, 1.5, 1.0, Method::Quadrature);
    let r = spec.prepare().unwrap().eval(PhasePoint::new(0.3, 0.2)).unwrap();
    assert!(r.convention_dependent);
}

#[test]
fn negativity_for_every_excited_index() {
    for j in 1..=8 {
        let mut min = f64::INFINITY;
        for i in 0..=200 {
            let q = 4.0 * i as f64 / 200.0;
            min = min.min(rel_wigner_g0(j, 1.0, PhasePoint::new(q, 0.0)).unwrap().value);
        }
        assert!(min < 0.0, "j={j}");
    }
}
