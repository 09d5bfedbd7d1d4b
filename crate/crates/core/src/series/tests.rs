use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::algebra::Frame;

fn e(k: usize) -> Octonion {
    Octonion::basis(k)
}

fn close(a: &Octonion, b: &Octonion, tol: f64) -> bool {
    a.max_abs_diff(b) <= tol
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(-1.0f64..1.0).prop_map(Octonion::new)
}

fn series(max_degree: usize) -> impl Strategy<Value = SliceSeries> {
    proptest::collection::vec(octonion(), 1..=max_degree + 1).prop_map(SliceSeries::new)
}

fn ball_point() -> impl Strategy<Value = Octonion> {
    octonion().prop_map(|w| w * (0.9 / (1.0 + w.norm())))
}

fn example_3_3() -> RegularRational {
    construct(&Family::Example33 {
        i: UnitImaginary::basis(1),
        j: UnitImaginary::basis(2),
    })
    .unwrap()
}

/// `w (w^2 + 4)^-1 (2 (w^2 + 1) IJ - 3 w J)` expanded by hand.
fn example_3_3_closed_form() -> RegularRational {
    let ij = e(1) * e(2);
    let num = SliceSeries::new(vec![Octonion::ZERO, ij * 2.0, e(2) * -3.0, ij * 2.0]);
    RegularRational::new(num, vec![4.0, 0.0, 1.0]).unwrap()
}

fn central_difference<F: Regular>(f: &F, xi: &Octonion, v: &Octonion) -> Octonion {
    let h = 1e-5;
    (f.eval(&(*xi + *v * h)).unwrap() - f.eval(&(*xi - *v * h)).unwrap()) / (2.0 * h)
}

#[test]
fn evaluation_examples() {
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    assert_eq!(sq.eval(&e(1)), -Octonion::ONE);
    assert_eq!(SliceSeries::monomial(1, e(2)).eval(&e(1)), e(3));
    assert!(close(&example_3_3().eval(&e(2)).unwrap(), &e(2), 1e-12));
}

#[test]
fn evaluation_at_real_points_is_the_coefficient_sum() {
    let f = SliceSeries::new(vec![e(3), e(5) * 2.0, Octonion::real(-1.0) + e(7)]);
    let x = 0.3;
    let direct = e(3) + e(5) * (2.0 * x) + (Octonion::real(-1.0) + e(7)) * (x * x);
    assert!(close(&f.eval(&Octonion::real(x)), &direct, 1e-15));
}

#[test]
fn star_examples() {
    let f = SliceSeries::monomial(1, e(1));
    let g = SliceSeries::monomial(1, e(2));
    assert_eq!(f.star(&g), SliceSeries::monomial(2, e(3)));
    assert_eq!(f.star(&SliceSeries::constant(Octonion::ONE)), f);
    let built = example_3_3();
    let closed = example_3_3_closed_form();
    for w in [e(1) * 0.5, e(2) * 0.3 + Octonion::real(0.1), Octonion::new([0.1, 0.2, -0.3, 0.1, 0.4, 0.0, -0.2, 0.3])] {
        assert!(close(&built.eval(&w).unwrap(), &closed.eval(&w).unwrap(), 1e-14));
    }
}

#[test]
fn conjugate_examples() {
    let f = SliceSeries::monomial(1, e(1));
    assert_eq!(f.regular_conjugate(), SliceSeries::monomial(1, -e(1)));
    let r = SliceSeries::from_real(&[1.0, 2.0, 3.0]);
    assert_eq!(r.regular_conjugate(), r);
}

#[test]
fn symmetrization_examples() {
    let alpha = Octonion::new([0.3, 0.1, -0.2, 0.0, 0.5, 0.1, 0.0, -0.4]);
    let f = SliceSeries::new(vec![-alpha, Octonion::ONE]);
    let (s, residue) = f.symmetrization();
    assert!(residue < 1e-15);
    let expected = [alpha.norm_sqr(), -2.0 * alpha.re(), 1.0];
    for (a, b) in s.iter().zip(expected) {
        assert!((a - b).abs() < 1e-15);
    }
    let g = SliceSeries::new(vec![Octonion::ONE, e(1) * 0.5]);
    assert_eq!(g.symmetrize(), SliceSeries::from_real(&[1.0, 0.0, 0.25]));
    let c = Octonion::new([1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0]);
    assert_eq!(SliceSeries::constant(c).symmetrize(), SliceSeries::from_real(&[9.0]));
}

#[test]
fn reciprocal_examples() {
    let a = 0.4;
    let f = SliceSeries::from_real(&[1.0, -a]);
    let r = f.reciprocal_series(12).unwrap();
    for n in 0..=12 {
        assert!(close(&r.coeff(n), &Octonion::real(a.powi(n as i32)), 1e-15));
    }

    let g = SliceSeries::new(vec![Octonion::ONE, e(1)]);
    let rg = g.reciprocal();
    assert_eq!(rg.den(), &[1.0, 0.0, 1.0]);
    assert_eq!(rg.num(), &SliceSeries::new(vec![Octonion::ONE, -e(1)]));
    let prod = rg.star(&g.clone().into());
    let n = 40;
    let t = prod.taylor(n).unwrap();
    assert!(t.max_abs_diff(&SliceSeries::constant(Octonion::ONE)) < SERIES_TOL_TEST);

    let c = Octonion::new([0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let rc = SliceSeries::constant(c).reciprocal();
    assert!(close(&rc.eval(&e(4)).unwrap(), &(c.conj() / 4.0), 1e-15));

    assert_eq!(
        SliceSeries::monomial(1, Octonion::ONE).reciprocal_series(4),
        Err(Error::ZeroConstantTerm)
    );
}

const SERIES_TOL_TEST: f64 = crate::tolerance::SERIES_TOL;

#[test]
fn derivative_examples() {
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    assert_eq!(sq.derivative(1), SliceSeries::monomial(1, Octonion::real(2.0)));
    assert_eq!(SliceSeries::constant(e(3)).derivative(1), SliceSeries::zero());
    assert_eq!(
        SliceSeries::monomial(3, e(2)).derivative(2),
        SliceSeries::monomial(1, e(2) * 6.0)
    );
}

#[test]
fn sphere_derivative_examples() {
    let xi = Octonion::new([0.3, 0.0, 0.4, 0.0, 0.0, 0.5, 0.0, 0.0]);
    let id = SliceSeries::identity();
    assert!(close(&id.sphere_derivative(&xi).unwrap(), &Octonion::ONE, 1e-15));
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    assert!(close(&sq.sphere_derivative(&xi).unwrap(), &Octonion::real(0.6), 1e-15));
    let c = SliceSeries::constant(e(6));
    assert_eq!(c.sphere_derivative(&xi).unwrap(), Octonion::ZERO);
    assert_eq!(id.sphere_derivative(&Octonion::real(0.5)), Err(Error::RealPoint));
}

#[test]
fn remainder_examples() {
    let xi = Octonion::new([0.2, -0.1, 0.4, 0.0, 0.3, 0.0, 0.0, 0.7]);
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    let (r, residual) = sq.remainder_with_residual(&xi);
    assert_eq!(r, SliceSeries::new(vec![xi, Octonion::ONE]));
    assert!(residual < 1e-15);
    assert!(close(&sq.second_remainder(&xi).unwrap(), &Octonion::ONE, 1e-15));

    let cube = SliceSeries::monomial(3, Octonion::ONE);
    let r2 = cube.second_remainder(&e(1)).unwrap();
    assert!(close(&r2, &e(1), 1e-15));
    let ds = cube.sphere_derivative(&e(1)).unwrap();
    assert!(close(&ds, &-Octonion::ONE, 1e-15));
    let rebuilt = ds + e(1) * 2.0 * r2;
    assert!(close(&rebuilt, &Octonion::real(-3.0), 1e-15));
    assert!(close(&cube.derivative_at(&e(1)).unwrap(), &Octonion::real(-3.0), 1e-15));
}

#[test]
fn example_3_3_values() {
    let f = example_3_3();
    let (i, j) = (e(1), e(2));
    let ij = i * j;
    let fp = f.derivative_at(&j).unwrap();
    assert!(close(&fp, &((Octonion::real(2.0) - ij) * (4.0 / 3.0)), 1e-12), "{fp}");
    let r2 = f.second_remainder(&j).unwrap();
    assert!(close(&r2, &((i - j * 2.0) * (2.0 / 3.0)), 1e-12), "{r2}");
    let v = fp - crate::algebra::bracket(&j, &r2);
    assert!(close(&v, &Octonion::real(8.0 / 3.0), 1e-12), "{v}");
}

#[test]
fn directional_derivative_examples() {
    let xi = Octonion::new([0.1, 0.3, 0.0, -0.2, 0.0, 0.4, 0.1, 0.0]);
    let f = SliceSeries::new(vec![e(2), e(3) * 0.5, e(5), Octonion::real(0.3) + e(6)]);
    let d = f.directional_derivative(&xi, &Octonion::ONE).unwrap();
    assert!(close(&d, &f.derivative_at(&xi).unwrap(), 1e-13));
    let v = e(4);
    let id = SliceSeries::identity();
    assert!(close(&id.directional_derivative(&xi, &v).unwrap(), &v, 1e-15));
    // (e1 + t e2)^2 = -1 + t (e1 e2 + e2 e1) - t^2, whose t-derivative vanishes.
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    let d = sq.directional_derivative(&e(1), &e(2)).unwrap();
    assert!(close(&d, &central_difference(&sq, &e(1), &e(2)), 1e-9));
    assert!(close(&d, &Octonion::ZERO, 1e-15));
}

#[test]
fn split_examples() {
    let frame = Frame::standard();
    let f = SliceSeries::monomial(1, e(4));
    let s = split(&f, &frame).unwrap();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    assert_eq!(s.components[2], vec![zero, one]);
    for k in [0, 1, 3] {
        assert!(s.components[k].iter().all(|c| *c == zero));
    }
    let g = SliceSeries::new(vec![e(1), Octonion::real(2.0) - e(1)]);
    let s = split(&g, &frame).unwrap();
    for k in 1..4 {
        assert!(s.components[k].iter().all(|c| *c == zero));
    }
    let bad = Frame {
        i: UnitImaginary::basis(1),
        j: UnitImaginary::basis(2),
        k: UnitImaginary::basis(3),
    };
    assert!(matches!(split(&g, &bad), Err(Error::BadFrame(_))));
}

#[test]
fn compose_with_unit_examples() {
    let f = SliceSeries::new(vec![e(1), e(2), e(3)]);
    assert_eq!(f.compose_with_unit(&Octonion::ONE).unwrap(), f);
    let u = Octonion::new([0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0]);
    let a = e(3);
    let g = SliceSeries::monomial(2, a).compose_with_unit(&u).unwrap();
    assert!(close(&g.coeff(2), &((u * u) * a), 1e-15));
    let u = Octonion::real(0.3) + e(1) * 0.5;
    let w = Octonion::real(-0.2) + e(1) * 0.6;
    let fu = f.compose_with_unit(&u).unwrap();
    assert!(close(&fu.eval(&w), &f.eval(&(u * w)), 1e-15));
    assert!(f.compose_with_unit(&(u * 3.0)).is_err());
}

#[test]
fn representation_examples() {
    let f = SliceSeries::new(vec![e(2), e(7), Octonion::real(0.5) + e(3)]);
    let i = UnitImaginary::basis(1);
    let (x, y) = (0.2, 0.5);
    let fz = f.eval(&i.point(x, y));
    let fzb = f.eval(&i.point(x, -y));
    assert!(close(&representation_eval(&fz, &fzb, &i, &i), &fz, 1e-15));
    let mi = UnitImaginary::new(-e(1)).unwrap();
    assert!(close(&representation_eval(&fz, &fzb, &i, &mi), &fzb, 1e-15));
    let sq = SliceSeries::monomial(2, Octonion::ONE);
    let j = UnitImaginary::normalize(Octonion::new([0.0, 0.3, -0.5, 0.1, 0.7, 0.0, 0.2, 0.1])).unwrap();
    let v = representation_eval(&sq.eval(&i.point(x, y)), &sq.eval(&i.point(x, -y)), &i, &j);
    let direct = j.point(x, y) * j.point(x, y);
    assert!(close(&v, &direct, 1e-12));
}

#[test]
fn construct_examples() {
    let xi = Octonion::new([0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.8, 0.0]);
    let f = construct(&Family::Extremal { a: 0.0, xi }).unwrap();
    let expected = SliceSeries::monomial(2, xi.conj());
    for w in [e(1) * 0.3, Octonion::new([0.1, 0.0, 0.2, 0.3, 0.0, -0.1, 0.4, 0.0])] {
        assert!(close(&f.eval(&w).unwrap(), &expected.eval(&w), 1e-15));
    }

    let g = construct(&Family::Extremal { a: -1.0, xi }).unwrap();
    for w in [e(2) * 0.7, Octonion::new([0.1, 0.2, -0.2, 0.1, 0.3, -0.1, 0.1, 0.5])] {
        assert!(close(&g.eval(&w).unwrap(), &w, 1e-14));
    }

    for a in [-0.5, 0.0, 0.3, 0.9] {
        let h = construct(&Family::Extremal { a, xi }).unwrap();
        assert!(close(&h.eval(&Octonion::ZERO).unwrap(), &Octonion::ZERO, 1e-15));
        assert!(close(&h.eval(&xi).unwrap(), &xi, 1e-13));
    }

    let k = construct(&Family::Koebe { i: UnitImaginary::basis(1), theta: 0.0 }).unwrap();
    for r in [0.1, 0.5, 0.9] {
        let v = k.eval(&Octonion::real(r)).unwrap();
        let exact = r / (1.0 - r).powi(2);
        assert!(close(&v, &Octonion::real(exact), 1e-13 * exact), "{v} vs {exact}");
    }

    assert!(construct(&Family::Extremal { a: 1.0, xi }).is_err());
    assert!(construct(&Family::Extremal { a: 0.0, xi: xi * 0.5 }).is_err());
    assert!(construct(&Family::Mobius { u: xi, v: Octonion::ONE }).is_err());
    assert!(construct(&Family::MonomialRotation { n: 2, u: Octonion::real(2.0) }).is_err());
}

#[test]
fn mobius_matches_scalar_formula_on_reals() {
    let a = 0.5;
    let f = construct(&Family::Mobius { u: Octonion::real(a), v: Octonion::ONE }).unwrap();
    for x in [-0.7, 0.0, 0.4] {
        let v = f.eval(&Octonion::real(x)).unwrap();
        assert!(close(&v, &Octonion::real((x - a) / (1.0 - a * x)), 1e-15));
    }
}

#[test]
fn rational_pole_is_reported() {
    let f = SliceSeries::new(vec![Octonion::ONE, e(1)]).reciprocal();
    assert!(matches!(f.eval(&e(5)), Err(Error::PoleAtPoint(_))));
}

#[test]
fn json_formats() {
    let f = SliceSeries::new(vec![e(1), Octonion::real(2.0)]);
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(
        s,
        r#"{"degree":1,"coeffs":[[0.0,1.0,0.0,0.0,0.0,0.0,0.0,0.0],[2.0,0.0,0.0,0.0,0.0,0.0,0.0,0.0]]}"#
    );
    assert_eq!(serde_json::from_str::<SliceSeries>(&s).unwrap(), f);
    assert!(serde_json::from_str::<SliceSeries>(r#"{"degree":3,"coeffs":[[1,0,0,0,0,0,0,0]]}"#).is_err());
    let r = RegularRational::new(f, vec![1.0, 0.5]).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert!(s.contains(r#""den":[1.0,0.5]"#));
    assert_eq!(serde_json::from_str::<RegularRational>(&s).unwrap(), r);
    assert!(serde_json::from_str::<RegularRational>(
        r#"{"num":{"degree":0,"coeffs":[[1,0,0,0,0,0,0,0]]},"den":[0,0]}"#
    )
    .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_of_product(f in series(5), g in series(5)) {
        let lhs = f.star(&g).regular_conjugate();
        let rhs = g.regular_conjugate().star(&f.regular_conjugate());
        prop_assert!(lhs.max_abs_diff(&rhs) <= SERIES_TOL_TEST);
        prop_assert_eq!(f.regular_conjugate().regular_conjugate(), f);
    }

    #[test]
    fn symmetrization_of_product(f in series(5), g in series(5)) {
        let (lhs, residue) = f.star(&g).symmetrization();
        prop_assert!(residue < 1e-13);
        let rhs = poly::mul(&f.symmetrization().0, &g.symmetrization().0);
        for (a, b) in lhs.iter().zip(&rhs) {
            prop_assert!((a - b).abs() <= SERIES_TOL_TEST);
        }
    }

    #[test]
    fn real_points_multiply_pointwise(f in series(5), g in series(5), x in -0.9f64..0.9) {
        let w = Octonion::real(x);
        let lhs = f.star(&g).eval(&w);
        prop_assert!(close(&lhs, &(f.eval(&w) * g.eval(&w)), 1e-12));
    }

    #[test]
    fn reciprocal_inverts(f in series(4), a0 in octonion()) {
        prop_assume!(a0.norm() >= 0.2);
        let mut c = f.coeffs().to_vec();
        c[0] = a0;
        let f = SliceSeries::new(c);
        let n = 24;
        let r = f.reciprocal_series(n).unwrap();
        let (p, _) = r.star(&f).truncate(n);
        // Relative to the size of the contributing terms (the Taylor
        // coefficients of the reciprocal may grow geometrically).
        let scale: f64 = r.coeffs().iter().map(|a| a.norm()).sum::<f64>()
            * f.coeffs().iter().map(|a| a.norm()).sum::<f64>();
        let err = p.max_abs_diff(&SliceSeries::constant(Octonion::ONE));
        prop_assert!(err / (1.0 + scale) <= SERIES_TOL_TEST, "{}", err);
        let q = f.star(&r).truncate(n).0;
        let err = q.max_abs_diff(&SliceSeries::constant(Octonion::ONE));
        prop_assert!(err / (1.0 + scale) <= SERIES_TOL_TEST, "{}", err);
    }

    #[test]
    fn reciprocal_of_product(f in series(3), g in series(3), w in ball_point()) {
        let lhs = f.star(&g).reciprocal();
        let rhs = g.reciprocal().star(&f.reciprocal());
        if let (Ok(a), Ok(b)) = (lhs.eval(&w), rhs.eval(&w)) {
            let tol = SERIES_TOL_TEST * (1.0 + a.norm());
            prop_assert!(close(&a, &b, tol), "{} vs {}", a, b);
        }
    }

    #[test]
    fn splitting_product_matches_convolution(
        f in series(4),
        g in series(4),
        x in -0.9f64..0.9,
        y in -0.9f64..0.9,
    ) {
        let frame = Frame::standard();
        let (sf, sg) = (split(&f, &frame).unwrap(), split(&g, &frame).unwrap());
        let z = Complex64::new(x, y);
        let direct = f.star(&g).eval_in_slice(&frame.i, z);
        prop_assert!(close(&splitting_star(&sf, &sg, z), &direct, SERIES_TOL_TEST));
    }

    #[test]
    fn split_recombines(f in series(6), x in -0.9f64..0.9, y in -0.9f64..0.9, hint in octonion()) {
        let i = UnitImaginary::normalize(hint + e(1)).unwrap();
        let frame = Frame::complete(i, hint, e(4) + hint).unwrap();
        let s = split(&f, &frame).unwrap();
        let z = Complex64::new(x, y);
        let v = f.eval_in_slice(&i, z);
        prop_assert!(close(&s.recombine(z), &v, SERIES_TOL_TEST));
        let norms: f64 = s.eval_components(z).iter().map(|c| c.norm_sqr()).sum();
        prop_assert!((norms - v.norm_sqr()).abs() <= SERIES_TOL_TEST);
    }

    #[test]
    fn symmetrization_is_real(f in series(6)) {
        let (_, residue) = f.symmetrization();
        prop_assert!(residue < 1e-13);
    }

    #[test]
    fn series_remainder_reconstructs(f in series(6), xi in octonion(), w in ball_point()) {
        let (r, residual) = f.remainder_with_residual(&xi);
        prop_assert!(residual <= SERIES_TOL_TEST);
        let lin = SliceSeries::new(vec![-xi, Octonion::ONE]);
        let rebuilt = lin.star(&r).add(&SliceSeries::constant(f.eval(&xi)));
        prop_assert!(rebuilt.max_abs_diff(&f) <= SERIES_TOL_TEST);
        prop_assert!(close(&r.eval(&xi.conj()), &f.remainder_at_conjugate(&xi).unwrap(), 1e-15));
        let _ = w;
    }

    #[test]
    fn rational_remainder_reconstructs(num in series(3), xi in ball_point(), w in ball_point()) {
        let f = RegularRational::new(num, vec![1.0, 0.0, 0.3]).unwrap();
        let (r, residual) = f.remainder_with_residual(&xi).unwrap();
        prop_assert!(residual <= SERIES_TOL_TEST);
        let lin: RegularRational = SliceSeries::new(vec![-xi, Octonion::ONE]).into();
        let rebuilt = lin.star(&r).add(&SliceSeries::constant(f.eval(&xi).unwrap()).into());
        let (a, b) = (rebuilt.eval(&w).unwrap(), f.eval(&w).unwrap());
        prop_assert!(close(&a, &b, SERIES_TOL_TEST));
    }

    #[test]
    fn remainder_at_conjugate_is_sphere_derivative(f in series(6), xi in ball_point()) {
        prop_assume!(xi.im().norm() > 1e-3);
        let a = f.remainder_at_conjugate(&xi).unwrap();
        let b = f.sphere_derivative(&xi).unwrap();
        prop_assert!(close(&a, &b, SERIES_TOL_TEST));
    }

    #[test]
    fn derivative_from_remainders(f in series(6), xi in ball_point()) {
        let ds = f.remainder_at_conjugate(&xi).unwrap();
        let r2 = f.second_remainder(&xi).unwrap();
        let v = ds + (xi.im() * 2.0) * r2;
        prop_assert!(close(&v, &f.derivative_at(&xi).unwrap(), SERIES_TOL_TEST));
    }

    #[test]
    fn directional_derivative_matches_difference(f in series(5), xi in ball_point(), v in octonion()) {
        prop_assume!(v.norm() > 0.1);
        let v = v / v.norm();
        let d = f.directional_derivative(&xi, &v).unwrap();
        prop_assert!(close(&d, &central_difference(&f, &xi, &v), 1e-6));
    }

    #[test]
    fn representation_formula(f in series(5), x in -0.6f64..0.6, y in -0.6f64..0.6, a in octonion(), b in octonion()) {
        let (Ok(i), Ok(j)) = (UnitImaginary::normalize(a), UnitImaginary::normalize(b)) else {
            return Ok(());
        };
        let v = representation_eval(&f.eval(&i.point(x, y)), &f.eval(&i.point(x, -y)), &i, &j);
        prop_assert!(close(&v, &f.eval(&j.point(x, y)), 1e-12));
    }

    #[test]
    fn json_round_trip(f in series(4)) {
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SliceSeries>(&s).unwrap(), f);
    }
}
