use qforms::arith::seq::{character, ArithSeq};
use qforms::arith::{c_nu, lambda_nu};
use qforms::poly::{Domain, IntPoly};
use qforms::rational::{rat, ratio, Rational};
use qforms::series::{
    compare, exp_series, inflate, lambert, log_series, poly_theta, pow_rational, product_expand, q_integrate, sqrt_t,
    theta_series, LaurentSeries, SeriesError,
};

fn poly(offset: i64, cs: &[i64]) -> LaurentSeries {
    LaurentSeries::from_coeffs(offset, cs.iter().map(|&c| rat(c)).collect()).unwrap()
}

fn ratpoly(cs: &[Rational]) -> LaurentSeries {
    LaurentSeries::from_coeffs(0, cs.to_vec()).unwrap()
}

fn theta3(prec: i64) -> LaurentSeries {
    theta_series(&rat(1), &rat(0), false, prec).unwrap()
}

fn assert_same(a: &LaurentSeries, b: &LaurentSeries) {
    let c = compare(a, b).unwrap();
    assert!(c.first_diff.is_none(), "differ at {:?}\n{a}\n{b}", c.first_diff);
}

/// Brute force: #{n ∈ ℤ : n² = e}.
fn square_count(e: i64) -> i64 {
    (-e.abs() - 1..=e.abs() + 1).filter(|n| n * n == e).count() as i64
}

#[test]
fn coeff_reads_back() {
    assert_eq!(poly(0, &[1, 2]).coeff(1).unwrap(), rat(2));
    let t = theta3(10);
    assert_eq!(t.coeff(3).unwrap(), rat(0));
    assert_eq!(t.coeff(4).unwrap(), rat(square_count(4)));
}

#[test]
fn coeff_outside_window_is_an_error() {
    let t = theta3(10);
    assert!(matches!(t.coeff(10), Err(SeriesError::OutOfWindow { .. })));
    assert_eq!(t.coeff(-3).unwrap(), rat(0));
    let unknown_below = t.forget_below(0).unwrap();
    assert!(unknown_below.coeff(-1).is_err());
}

#[test]
fn ring_examples() {
    let p = poly(0, &[1, 1, 0]);
    let m = poly(0, &[1, -1, 0]);
    assert_same(&p.mul(&m).unwrap(), &poly(0, &[1, 0, -1]));

    let inv = LaurentSeries::monomial(rat(1), -1, 3).unwrap();
    let q = LaurentSeries::monomial(rat(1), 1, 3).unwrap();
    let one = inv.mul(&q).unwrap();
    assert_eq!(one.coeff(0).unwrap(), rat(1));
    assert_eq!(one.valuation(), Some(0));

    let t = theta3(20);
    let z = t.add(&t.negate()).unwrap();
    assert_eq!(z.valuation(), None);
    assert_eq!(z.to_string(), "0");
}

#[test]
fn mul_window_follows_both_precisions() {
    let a = LaurentSeries::from_fn(-1, 5, |_| rat(1)).unwrap();
    let b = LaurentSeries::from_fn(2, 6, |_| rat(1)).unwrap();
    let c = a.mul(&b).unwrap();
    assert_eq!(c.offset(), 1);
    assert_eq!(c.prec(), (5 + 2).min(6 - 1));
}

#[test]
fn exp_examples() {
    let q = poly(0, &[0, 1, 0, 0]);
    let e = exp_series(&q).unwrap();
    assert_same(&e, &ratpoly(&[rat(1), rat(1), ratio(1, 2), ratio(1, 6)]));
    assert_same(&exp_series(&LaurentSeries::zero(5)).unwrap(), &LaurentSeries::one(5).unwrap());
    let e2 = exp_series(&poly(0, &[0, 1, 1])).unwrap();
    assert_eq!(e2.coeff(2).unwrap(), ratio(3, 2));
    assert_eq!(exp_series(&poly(0, &[1, 1])), Err(SeriesError::NonzeroConstantTerm));
}

#[test]
fn log_examples() {
    let l = log_series(&poly(0, &[1, -1, 0, 0])).unwrap();
    assert_same(&l, &ratpoly(&[rat(0), rat(-1), ratio(-1, 2), ratio(-1, 3)]));
    assert_same(&log_series(&LaurentSeries::one(6).unwrap()).unwrap(), &LaurentSeries::zero(6));
    let base = poly(0, &[1, 1, 0, 0, 0, 0]);
    let sq = base.mul(&base).unwrap();
    assert_same(&log_series(&sq).unwrap(), &log_series(&base).unwrap().scale(&rat(2)));
    assert_eq!(log_series(&poly(0, &[2, 1])), Err(SeriesError::ConstantTermNotOne));
}

#[test]
fn pow_rational_examples() {
    let s = poly(0, &[1, 1, 0]);
    assert_same(&pow_rational(&s, &rat(2)).unwrap(), &poly(0, &[1, 2, 1]));
    let h = pow_rational(&poly(0, &[1, 1, 0, 0]), &ratio(1, 2)).unwrap();
    assert_same(&h, &ratpoly(&[rat(1), ratio(1, 2), ratio(-1, 8), ratio(1, 16)]));
    let g = pow_rational(&poly(0, &[1, -1, 0, 0]), &rat(-1)).unwrap();
    assert_same(&g, &poly(0, &[1, 1, 1, 1]));
}

#[test]
fn sqrt_transform_examples() {
    assert_same(&sqrt_t(&poly(0, &[1, 2, 1])).unwrap(), &poly(0, &[1, 1, 0]));
    let t = theta3(64);
    let sq = t.mul(&t).unwrap();
    assert_same(&sqrt_t(&sq).unwrap(), &t);
    assert_eq!(sqrt_t(&poly(0, &[1, 1, 0])).unwrap().coeff(2).unwrap(), ratio(-1, 8));
    assert_eq!(sqrt_t(&poly(0, &[4, 1])), Err(SeriesError::BadConstantTerm));
}

#[test]
fn q_integrate_examples() {
    let cubes = poly_theta(&IntPoly::monomial(1, 3), &character("one").unwrap(), Domain::NaturalsFrom1, 30).unwrap();
    let integrated = q_integrate(&cubes).unwrap();
    let expected = LaurentSeries::from_terms(0, 30, [(1, rat(1)), (8, ratio(1, 8)), (27, ratio(1, 27))]).unwrap();
    assert_same(&integrated, &expected);
    let q = LaurentSeries::monomial(rat(1), 1, 4).unwrap();
    assert_same(&q_integrate(&q).unwrap(), &q);
    assert_eq!(q_integrate(&theta3(5)), Err(SeriesError::NonpositiveExponentPresent));
}

#[test]
fn integrated_cubes_match_lambda_product() {
    let cubes = poly_theta(&IntPoly::monomial(1, 3), &character("one").unwrap(), Domain::NaturalsFrom1, 30).unwrap();
    let lhs = exp_series(&q_integrate(&cubes).unwrap()).unwrap();
    let e = ArithSeq::new("-lambda3/n", |n| if n < 1 { rat(0) } else { ratio(-lambda_nu(n as u64, 3), n) });
    assert_same(&lhs, &product_expand(&e, 30));
}

#[test]
fn lambert_examples() {
    assert_eq!(lambert(&ArithSeq::constant(rat(1)), 8).coeff(6).unwrap(), rat(4));
    let squares = poly_theta(&IntPoly::monomial(1, 2), &character("one").unwrap(), Domain::NaturalsFrom1, 20).unwrap();
    assert_same(&lambert(&character("lambda:2").unwrap(), 20), &squares);
    let mu = lambert(&character("mu").unwrap(), 10);
    for m in 1..10 {
        assert_eq!(mu.coeff(m).unwrap(), rat(i64::from(m == 1)));
    }
}

#[test]
fn product_expand_examples() {
    let partitions = product_expand(&ArithSeq::constant(rat(-1)), 8);
    assert_same(&partitions, &poly(0, &[1, 1, 2, 3, 5, 7, 11, 15]));
    assert_same(&product_expand(&ArithSeq::constant(rat(0)), 12), &LaurentSeries::one(12).unwrap());

    let e = ArithSeq::new("-c3", |n| if n < 1 { rat(0) } else { -c_nu(n as u64, 3) });
    let eq = exp_series(&LaurentSeries::monomial(rat(1), 1, 30).unwrap()).unwrap();
    let lhs = product_expand(&e, 30).mul(&eq).unwrap();
    let cubes = poly_theta(&IntPoly::monomial(1, 3), &character("one").unwrap(), Domain::NaturalsFrom1, 30).unwrap();
    assert_same(&lhs, &exp_series(&cubes).unwrap());
}

#[test]
fn theta_examples() {
    assert_eq!(theta3(10).to_string(), "1 + 2*q + 2*q^4 + 2*q^9");
    let t = theta_series(&ratio(5, 2), &ratio(3, 2), true, 20).unwrap();
    assert_same(&t, &LaurentSeries::from_terms(0, 20, [(0, rat(1)), (1, rat(-1)), (4, rat(-1)), (7, rat(1)), (13, rat(1)), (18, rat(-1))]).unwrap());
    let shifted = theta_series(&rat(1), &rat(-3), false, 5).unwrap();
    assert_eq!(shifted.offset(), -2);
    assert_eq!(shifted.coeff(-2).unwrap(), rat(2));
    assert_eq!(shifted.coeff(0).unwrap(), rat(2));
    assert_eq!(shifted.coeff(4).unwrap(), rat(2));
}

#[test]
fn theta_rejects_bad_parameters() {
    assert_eq!(theta_series(&ratio(1, 2), &rat(0), false, 10), Err(SeriesError::NonIntegralExponent));
    assert_eq!(theta_series(&rat(0), &rat(1), false, 10), Err(SeriesError::NonpositiveA));
}

#[test]
fn poly_theta_examples() {
    let one = character("one").unwrap();
    let p = IntPoly::new(vec![0, 1, 2]);
    let t = poly_theta(&p, &one, Domain::AllIntegers, 12).unwrap();
    assert_same(&t, &LaurentSeries::from_terms(0, 12, [(0, rat(1)), (1, rat(1)), (3, rat(1)), (6, rat(1)), (10, rat(1))]).unwrap());
    let c = poly_theta(&IntPoly::monomial(1, 3), &one, Domain::NaturalsFrom1, 30).unwrap();
    assert_eq!(c.to_string(), "q + q^8 + q^27");
    let s = poly_theta(&IntPoly::monomial(1, 2), &character("alt").unwrap(), Domain::NaturalsFrom1, 10).unwrap();
    assert_eq!(s.to_string(), "-q + q^4 - q^9");
    assert_eq!(
        poly_theta(&IntPoly::monomial(1, 3), &one, Domain::AllIntegers, 10),
        Err(SeriesError::UnboundedBelow)
    );
}

#[test]
fn inflate_examples() {
    assert_same(&inflate(&poly(0, &[1, 1]), 2), &poly(0, &[1, 0, 1]));
    let t = inflate(&theta3(5), 3);
    assert_eq!(t.prec(), 13);
    assert_eq!(t.to_string(), "1 + 2*q^3 + 2*q^12");
    assert_eq!(inflate(&theta3(9), 1), theta3(9));
}

#[test]
fn display_uses_rationals_and_signs() {
    let s = ratpoly(&[rat(0), ratio(-1, 2), rat(3), ratio(2, 3)]);
    assert_eq!(s.to_string(), "-1/2*q + 3*q^2 + 2/3*q^3");
    let laurent = LaurentSeries::from_terms(-2, 2, [(-2, rat(1)), (0, rat(-1))]).unwrap();
    assert_eq!(laurent.to_string(), "q^-2 - 1");
}
