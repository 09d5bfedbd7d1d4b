use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{Octonion, UnitImaginary};
use crate::error::Error;
use crate::series::{construct, Family, RegularRational, SliceSeries};

fn e(k: usize) -> Octonion {
    Octonion::basis(k)
}

fn rat(f: SliceSeries) -> RegularRational {
    f.into()
}

fn identity() -> RegularRational {
    rat(SliceSeries::identity())
}

fn mobius(u: Octonion, v: Octonion) -> RegularRational {
    construct(&Family::Mobius { u, v }).unwrap()
}

#[test]
fn example_3_3_boundary_derivative() {
    let f = construct(&Family::Example33 {
        i: UnitImaginary::basis(1),
        j: UnitImaginary::basis(2),
    })
    .unwrap();
    let r = boundary_modulus_derivative(&f, &e(2)).unwrap();
    assert!((r.delta - 8.0 / 3.0).abs() < 1e-9, "{r:?}");
    assert!(r.imag_residual < 1e-9);
    assert!((r.fd_crosscheck - 8.0 / 3.0).abs() < 1e-3, "{}", r.fd_crosscheck);
    assert!((r.fixed_point_bound.unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn identity_and_square_boundary_derivative() {
    let xi = Octonion::new([0.0, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0, 0.8]);
    let r = boundary_modulus_derivative(&identity(), &xi).unwrap();
    assert!((r.delta - 1.0).abs() < 1e-12);
    assert!((r.fixed_point_bound.unwrap() - 1.0).abs() < 1e-12);
    let f = rat(SliceSeries::monomial(2, xi.conj()));
    let r = boundary_modulus_derivative(&f, &xi).unwrap();
    assert!((r.delta - 2.0).abs() < 1e-12, "{r:?}");
    assert!((r.fixed_point_bound.unwrap() - 2.0).abs() < 1e-12);
    assert!((r.fd_crosscheck - 2.0).abs() < 1e-3);
    let half = rat(SliceSeries::monomial(1, Octonion::real(0.5)));
    assert!(matches!(boundary_modulus_derivative(&half, &xi), Err(Error::NotContactPoint(_))));
}

#[test]
fn extremal_family_meets_the_fixed_point_bound() {
    let xi = Octonion::new([0.0, 0.0, 0.6, 0.0, 0.0, 0.8, 0.0, 0.0]);
    for a in [-1.0, -0.5, 0.0, 0.5] {
        let f = construct(&Family::Extremal { a, xi }).unwrap();
        let r = boundary_modulus_derivative(&f, &xi).unwrap();
        let bound = r.fixed_point_bound.unwrap();
        assert!((r.delta - bound).abs() < 1e-8, "a = {a}: {} vs {bound}", r.delta);
        assert!(r.imag_residual < 1e-8);
    }
}

#[test]
fn real_mobius_sharp_and_osserman() {
    let f = mobius(Octonion::real(0.5), Octonion::ONE);
    let r = quaternionic_bounds(&f, &Octonion::ONE).unwrap();
    assert!((r.delta - 3.0).abs() < 1e-12);
    assert!((r.sharp_bound.unwrap() - 3.0).abs() < 1e-12);
    assert!((r.osserman_bound.unwrap() - 1.0 / 3.0).abs() < 1e-12);
    let id = quaternionic_bounds(&identity(), &Octonion::ONE).unwrap();
    assert!((id.delta - 1.0).abs() < 1e-12);
    assert!((id.sharp_bound.unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn square_is_extremal_for_order_two() {
    let f = rat(SliceSeries::monomial(2, Octonion::ONE));
    let r = quaternionic_bounds(&f, &Octonion::ONE).unwrap();
    assert!((r.delta - 2.0).abs() < 1e-12);
    let v = r.vanishing.unwrap();
    assert_eq!(v.order, 2);
    assert!(v.extremal);
    assert_eq!(v.bound, 2.0);
    let g = rat(SliceSeries::monomial(1, e(5)));
    assert_eq!(quaternionic_bounds(&g, &Octonion::ONE), Err(Error::NonQuaternionic));
}

#[test]
fn vanishing_bound_for_a_blaschke_factor() {
    // q * Mobius(u, 1) vanishes to order 1 and is not extremal.
    let u = Octonion::quaternion(0.3, 0.1, -0.2, 0.1);
    let f = mobius(u, Octonion::ONE).shift(1);
    let xi = Octonion::quaternion(0.0, 0.6, 0.0, 0.8);
    let r = quaternionic_bounds(&f, &xi).unwrap();
    let v = r.vanishing.unwrap();
    assert_eq!(v.order, 1);
    assert!(!v.extremal);
    assert!(r.delta >= v.bound - 1e-9, "{} < {}", r.delta, v.bound);
    assert!(r.delta >= r.sharp_bound.unwrap() - 1e-9);
}

#[test]
fn julia_examples() {
    let id = identity();
    for q in [Octonion::real(0.3), Octonion::quaternion(0.1, 0.2, -0.3, 0.1)] {
        let j = julia_check(&id, &Octonion::ONE, &Octonion::ONE, 1.0, &q).unwrap();
        assert!((j.lhs - j.rhs).abs() < 1e-12);
    }
    let sq = rat(SliceSeries::monomial(2, Octonion::ONE));
    let j = julia_check(&sq, &Octonion::ONE, &Octonion::ONE, 2.0, &Octonion::real(0.5)).unwrap();
    assert!((j.lhs - 5.0 / 3.0).abs() < 1e-12);
    assert!((j.rhs - 1.5).abs() < 1e-12);
    assert!(j.holds);

    let u = Octonion::quaternion(0.2, -0.3, 0.1, 0.4);
    let v = Octonion::quaternion(0.0, 0.6, 0.0, 0.8);
    let f = mobius(u, v);
    let xi = Octonion::quaternion(0.6, 0.0, 0.8, 0.0);
    let alpha = quaternionic_bounds(&f, &xi).unwrap().delta;
    let eta = f.eval(&xi).unwrap();
    for q in [Octonion::quaternion(0.1, 0.2, 0.3, -0.4), Octonion::quaternion(-0.5, 0.0, 0.1, 0.2)] {
        let j = julia_check(&f, &xi, &eta, alpha, &q).unwrap();
        assert!(j.margin.abs() < 1e-9, "{j:?}");
    }
}

#[test]
fn modulus_inequality_examples() {
    let w = Octonion::new([0.1, 0.2, 0.0, 0.3, 0.0, 0.1, 0.0, 0.2]);
    assert!(modulus_inequality_check(&identity(), &w).unwrap().abs() < 1e-15);
    let xi = e(3);
    let f = rat(SliceSeries::monomial(2, xi.conj()));
    assert!(modulus_inequality_check(&f, &(e(1) * 0.5)).unwrap() >= 0.0);
}

#[test]
fn convex_combination_examples() {
    let i = UnitImaginary::basis(1);
    let j = UnitImaginary::normalize(Octonion::new([0.0, 0.3, 0.5, 0.0, 0.1, 0.0, 0.7, 0.2])).unwrap();
    let c = convex_combination_check(&identity(), 0.3, 0.4, &i, &j).unwrap();
    assert!((c.lhs - 0.25).abs() < 1e-15 && c.error < 1e-15);
    let perp = UnitImaginary::basis(6);
    let f = rat(SliceSeries::new(vec![e(1), Octonion::real(0.5), e(1) * 0.2]));
    let c = convex_combination_check(&f, 0.2, -0.5, &i, &perp).unwrap();
    let a = f.eval(&i.point(0.2, -0.5)).unwrap().norm_sqr();
    let b = f.eval(&i.point(0.2, 0.5)).unwrap().norm_sqr();
    assert!((c.lhs - 0.5 * (a + b)).abs() < 1e-14);
    let g = rat(SliceSeries::monomial(2, Octonion::ONE + e(1)));
    assert!(convex_combination_check(&g, 0.4, 0.3, &i, &j).unwrap().error < 1e-10);
    let bad = rat(SliceSeries::monomial(1, e(2)));
    assert!(matches!(
        convex_combination_check(&bad, 0.1, 0.1, &i, &j),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn quaternionic_pointwise_star() {
    let f = rat(SliceSeries::new(vec![-e(1), Octonion::ONE]));
    let g = rat(SliceSeries::new(vec![e(2), Octonion::ONE]));
    let r = pointwise_star_check(&f, &g, &(e(2) * 0.5)).unwrap();
    assert!(r.quaternionic);
    assert!(r.pointwise_deviation < 1e-12 && r.inner_error < 1e-12 && r.modulus_error < 1e-12);
    assert!(f.star(&g).eval(&e(1)).unwrap().norm() < 1e-15);
    assert_eq!(pointwise_star_check(&f, &g, &e(1)), Err(Error::ZeroAtPoint));
}

#[test]
fn camshaft_witness_exists() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let w = camshaft_search(&mut rng, 100, 1e-3).expect("witness");
    assert!(w.report.pointwise_deviation > 1e-3);
    assert!(w.report.inner_error < 1e-10, "{:?}", w.report);
    assert!(w.report.modulus_error < 1e-10, "{:?}", w.report);
}

#[test]
fn t_transform_examples() {
    let q = Octonion::quaternion(0.1, 0.3, -0.2, 0.4);
    let p = rat(SliceSeries::from_real(&[0.5, 1.0, -0.3]));
    assert!(t_transform(&p, &q).unwrap().max_abs_diff(&q) < 1e-15);
    let f = rat(SliceSeries::new(vec![
        Octonion::quaternion(0.2, 0.1, 0.0, 0.5),
        Octonion::quaternion(0.0, -0.4, 0.3, 0.1),
        Octonion::quaternion(1.0, 0.0, 0.2, 0.0),
    ]));
    let t = t_transform(&f, &q).unwrap();
    let back = t_transform(&f.regular_conjugate(), &t).unwrap();
    assert!(back.max_abs_diff(&q) < 1e-10);
    assert!((t.re() - q.re()).abs() < 1e-15 && (t.norm() - q.norm()).abs() < 1e-15);
    assert_eq!(t_transform(&rat(SliceSeries::monomial(1, e(4))), &q), Err(Error::NonQuaternionic));
}

#[test]
fn star_eval_agrees_with_expanded_product() {
    let f = rat(SliceSeries::new(vec![e(3), e(5) * 0.5, Octonion::real(0.2) + e(6)]));
    let g = SliceSeries::new(vec![Octonion::ONE, e(2) * 0.3]).reciprocal();
    let w = Octonion::new([0.1, -0.2, 0.3, 0.1, 0.0, 0.2, -0.1, 0.3]);
    let direct = f.star(&g).eval(&w).unwrap();
    assert!(star_eval(&f, &g, &w).unwrap().max_abs_diff(&direct) < 1e-13);
}

#[test]
fn diameter_examples() {
    let dirs = DirectionSet::standard();
    let id = SliceSeries::identity();
    let d = diameters(&id, 0.5, DiameterKind::Regular, &dirs).unwrap();
    assert!((d.value - 1.0).abs() <= 0.01);
    let a1 = Octonion::new([0.0, 0.0, 0.6, 0.0, 0.0, 0.0, 0.8, 0.0]);
    let affine = SliceSeries::new(vec![e(3) * 0.2, a1]);
    for r in [0.25, 0.5, 0.75] {
        let d = diameters(&affine, r, DiameterKind::Regular, &dirs).unwrap();
        assert!((d.value - 2.0 * r).abs() <= 0.01 * 2.0 * r, "{d:?}");
    }
    let f = SliceSeries::new(vec![Octonion::ZERO, Octonion::ONE, Octonion::real(0.25)]);
    let reg = diameters(&f, 0.9, DiameterKind::Regular, &dirs).unwrap().value;
    let euc = diameters(&f, 0.9, DiameterKind::Euclidean, &dirs).unwrap().value;
    assert!(euc <= reg * (1.0 + 1e-2) && reg <= 2.0 * euc, "{euc} {reg}");
    let mut prev = 0.0;
    for r in [0.2, 0.4, 0.6, 0.8] {
        let v = diameters(&f, r, DiameterKind::Slice, &dirs).unwrap().value;
        assert!(v >= prev);
        prev = v;
    }
}

#[test]
fn landau_toeplitz_examples() {
    let dirs = DirectionSet::standard();
    let affine = SliceSeries::new(vec![e(1), Octonion::new([0.0, 0.0, 0.0, 0.0, 0.6, 0.8, 0.0, 0.0]) * 3.0]);
    let grid = [0.25, 0.5, 0.75];
    let r = landau_toeplitz_check(&affine, &grid, DiameterKind::Regular, &dirs).unwrap();
    assert!(r.pass, "{r:?}");
    for e in &r.estimates {
        assert!((e.value - 2.0 * e.r).abs() <= 0.01 * 2.0 * e.r);
    }
    assert!((r.derivative_at_zero - 1.0).abs() < 1e-12);
    let cubic = SliceSeries::new(vec![Octonion::ZERO, Octonion::ONE, Octonion::ZERO, Octonion::real(0.1)]);
    let r = landau_toeplitz_check(&cubic, &grid, DiameterKind::Regular, &dirs).unwrap();
    assert!(r.pass && r.derivative_at_zero < 1.0 - 1e-3, "{r:?}");
    assert!(r.estimates.iter().all(|e| e.value < 2.0 * e.r - 1e-3));
    let r = landau_toeplitz_check(&cubic, &grid, DiameterKind::Slice, &dirs).unwrap();
    assert!(r.pass, "{r:?}");
}

#[test]
fn cauchy_examples() {
    let dirs = DirectionSet::standard();
    let c = cauchy_estimate_check(&SliceSeries::identity(), 1, &dirs).unwrap();
    assert!((c.rhs - 1.0).abs() < 1e-12 && c.margin.abs() < 1e-12);
    let c = cauchy_estimate_check(&SliceSeries::monomial(2, e(1)), 2, &dirs).unwrap();
    assert!(c.margin.abs() <= 0.02, "{c:?}");
    assert!(c.n_samples >= 10_000);
    let cubic = SliceSeries::new(vec![Octonion::ZERO, Octonion::ONE, Octonion::ZERO, Octonion::real(0.1)]);
    let c = cauchy_estimate_check(&cubic, 3, &dirs).unwrap();
    assert!(c.margin > 0.5);
}

#[test]
fn koebe_growth_equalities() {
    let k = construct(&Family::Koebe { i: UnitImaginary::basis(1), theta: 0.0 }).unwrap();
    for r in [0.3, 0.6, 0.9] {
        let up = growth_distortion_check(&k, &Octonion::real(r)).unwrap();
        let down = growth_distortion_check(&k, &Octonion::real(-r)).unwrap();
        for (m, scale) in [(up.margins[1], up.modulus), (up.margins[3], up.derivative), (up.margins[5], up.log_quotient)] {
            assert!(m.abs() <= 1e-9 * scale.max(1.0), "r = {r}: {up:?}");
        }
        for m in [down.margins[0], down.margins[2], down.margins[4]] {
            assert!(m.abs() <= 1e-9, "r = -{r}: {down:?}");
        }
    }
    let z = growth_distortion_check(&k, &Octonion::ZERO).unwrap();
    assert!(z.margins.iter().all(|m| m.abs() < 1e-12), "{z:?}");
}

#[test]
fn log_quotient_matches_rational_route() {
    let k = construct(&Family::Koebe {
        i: UnitImaginary::basis(3),
        theta: 0.7,
    })
    .unwrap();
    let w = Octonion::new([0.1, 0.2, -0.1, 0.0, 0.3, 0.0, 0.1, -0.2]);
    let q = k.derivative().shift(1).star(&k.reciprocal());
    let direct = q.eval(&w).unwrap();
    assert!(log_quotient_eval(&k, &w).unwrap().max_abs_diff(&direct) < 1e-9);
}

#[test]
fn quarter_covering_of_koebe() {
    let i = UnitImaginary::basis(1);
    let k = construct(&Family::Koebe { i, theta: 0.0 }).unwrap();
    let c = quarter_covering(&k, &i, 0.999, 4096);
    assert!(c.min_modulus >= 0.249, "{c:?}");
}

#[test]
fn inner_estimates() {
    let id = identity();
    for t in [-0.5, 0.0, 0.7] {
        let r = inner_boundary_estimate(&id, &Octonion::ONE, t).unwrap();
        assert!(r.margin.abs() < 1e-12 && (r.value - t).abs() < 1e-12);
    }
    let sq = rat(SliceSeries::monomial(2, Octonion::ONE));
    let r = inner_boundary_estimate(&sq, &Octonion::ONE, 0.3).unwrap();
    assert!((r.second_value - 2.0).abs() < 1e-12 && r.second_margin.abs() < 1e-12);
    assert!(r.margin >= 0.0);

    let xi = Octonion::quaternion(0.0, 0.6, 0.8, 0.0);
    let c = Octonion::quaternion(0.6, 0.0, 0.0, -0.8);
    let f = construct(&Family::InnerExtremal { delta: 2.5, xi, c }).unwrap();
    for t in [-0.8, -0.2, 0.4, 0.9] {
        let r = inner_boundary_estimate(&f, &xi, t).unwrap();
        assert!((r.delta - 2.5).abs() < 1e-10, "{r:?}");
        assert!(r.margin.abs() < 1e-9, "{r:?}");
    }
}

#[test]
fn extremum_examples() {
    let f = rat(SliceSeries::new(vec![Octonion::real(-0.5), Octonion::ONE]));
    let r = extremum_scan(&f, &GridSpec::standard(0.9)).unwrap();
    assert!(r.pass && !r.constant && r.shell_max_monotone, "{r:?}");
    assert!(r.real_axis_minima.iter().any(|m| (m.point.re() - 0.5).abs() < 0.03 && m.value < 1e-2));
    let c = extremum_scan(&rat(SliceSeries::constant(e(2))), &GridSpec::standard(0.9)).unwrap();
    assert!(c.constant && c.pass);
    let g = rat(SliceSeries::new(vec![Octonion::ZERO, e(3), Octonion::ONE]));
    let r = extremum_scan(&g, &GridSpec::standard(0.9)).unwrap();
    assert!(r.shell_max_monotone && r.pass, "{r:?}");
}

#[test]
fn reciprocal_modulus_identity_fails_for_generic_octonionic_f() {
    // Raw stem values, bypassing the series code.
    let a = Octonion::new([0.3, -1.2, 0.4, 0.9, -0.7, 0.2, 1.1, -0.5]);
    let b = Octonion::new([-0.8, 0.1, 0.6, -0.3, 0.5, 1.4, -0.2, 0.7]);
    let i = UnitImaginary::normalize(Octonion::new([0.0, 0.2, -0.5, 0.1, 0.6, -0.3, 0.4, 0.3])).unwrap().value();
    let c = a.conj() + i * b.conj();
    let ft = a + ((c.inverse().unwrap() * i) * c) * b;
    let num = (a.norm_sqr() - b.norm_sqr()).powi(2) + 4.0 * a.inner(&b).powi(2);
    let den = a.norm_sqr() + b.norm_sqr() + 2.0 * (a.conj() * b).inner(&i);
    assert!((ft.norm_sqr() - num / den).abs() > 1e-3);

    let f = rat(SliceSeries::new(vec![a, b]));
    let g = rat(SliceSeries::constant(Octonion::ONE));
    let w = i * 0.5 + Octonion::real(0.1);
    let r = pointwise_star_check(&f, &g, &w).unwrap();
    assert!(r.modulus_error > 1e-3, "{r:?}");
    assert!(r.inner_error < 1e-12);
}
