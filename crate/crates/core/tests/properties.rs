use bohr_core::exact::QuadExt;
use bohr_core::functionals::{
    area_ratio, bohr_rogosinski_rn, bohr_tail, lemma_a_sides, norm_f0_sq, pointwise, schwarz_pick_derivative,
    schwarz_pick_modulus,
};
use bohr_core::radius::{solve_radius, RadiusEquation};
use bohr_core::series::{blaschke_series, schur_to_series, ArithMode, SchurSample, TruncatedSeries};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

fn sample(seed: u64) -> TruncatedSeries {
    schur_to_series(&SchurSample::random(seed, 8, 0.95), 256).unwrap()
}

fn poly(coeffs: &[(f64, f64)]) -> TruncatedSeries {
    let c = coeffs.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
    TruncatedSeries::new(c, bohr_core::TailKind::ExactZero).unwrap()
}

fn quad() -> impl Strategy<Value = QuadExt> {
    (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| {
        QuadExt::new(BigRational::new(BigInt::from(a), BigInt::from(b)), BigRational::new(BigInt::from(c), BigInt::from(d)))
    })
}

fn close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) -> bool {
    a.coeffs().len() == b.coeffs().len() && a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).norm() <= tol)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn schur_samples_obey_coefficient_bounds(seed in any::<u64>()) {
        let f = sample(seed);
        let a0 = f.a0_abs();
        prop_assert!(a0 <= 1.0);
        // sum_{n>=1} |a_n|^2 <= 1 - |a_0|^2 and |a_n| <= 1 - |a_0|^2
        let energy: f64 = f.coeffs().iter().skip(1).map(|c| c.norm_sqr()).sum();
        prop_assert!(energy <= 1.0 - a0 * a0 + 1e-12, "energy {energy} a0 {a0}");
        for c in f.coeffs().iter().skip(1) {
            prop_assert!(c.norm() <= 1.0 - a0 * a0 + 1e-12);
        }
    }

    #[test]
    fn schur_samples_stay_in_the_disk(seed in any::<u64>(), theta in 0.0..std::f64::consts::TAU, r in 0.0..0.9f64) {
        let f = sample(seed);
        let z = Complex64::from_polar(r, theta);
        let (m, d) = pointwise(&f, z).unwrap();
        let bound = schwarz_pick_modulus(f.a0_abs(), r);
        prop_assert!(m.hi <= bound + 1e-12, "{} > {bound}", m.hi);
        prop_assert!(d.lo <= schwarz_pick_derivative(m.lo, r) + 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multiply_commutes_and_associates(
        a in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..12),
        b in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..12),
        c in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..12),
    ) {
        let n = 11;
        let pad = |v: &Vec<(f64, f64)>| { let mut v = v.clone(); v.resize(n + 1, (0.0, 0.0)); poly(&v) };
        let (a, b, c) = (pad(&a), pad(&b), pad(&c));
        let mode = ArithMode::Float64;
        prop_assert!(close(&a.multiply(&b, mode), &b.multiply(&a, mode), 1e-12));
        let left = a.multiply(&b, mode).multiply(&c, mode);
        let right = a.multiply(&b.multiply(&c, mode), mode);
        prop_assert!(close(&left, &right, 1e-11));
        // Extended mode agrees with plain floats to rounding
        prop_assert!(close(&a.multiply(&b, ArithMode::Extended), &a.multiply(&b, mode), 1e-13));
    }

    #[test]
    fn quadratic_field_axioms(x in quad(), y in quad(), z in quad()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), QuadExt::one());
        }
        // sign is compatible with multiplication
        prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
    }

    #[test]
    fn sign_matches_floating_point_away_from_zero(x in quad()) {
        let v = x.to_f64();
        if v.abs() > 1e-9 {
            prop_assert_eq!(x.sign(), if v > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn bohr_inequality_for_blaschke_products(
        zeros in prop::collection::vec((0.0..0.99f64, 0.0..std::f64::consts::TAU), 1..5),
        phase in 0.0..std::f64::consts::TAU,
        r in 0.0..(1.0 / 3.0),
    ) {
        let zs: Vec<Complex64> = zeros.iter().map(|&(m, t)| Complex64::from_polar(m, t)).collect();
        let f = blaschke_series(&zs, Complex64::from_polar(1.0, phase), 256).unwrap();
        prop_assert!(bohr_tail(&f, 0, r).unwrap().hi <= 1.0 + 1e-10);
    }

    #[test]
    fn functionals_increase_with_radius(seed in any::<u64>(), r in 0.0..0.8f64, dr in 0.0..0.1f64) {
        let f = sample(seed);
        let s = r + dr;
        for n in 0..4 {
            prop_assert!(bohr_tail(&f, n, r).unwrap().hi <= bohr_tail(&f, n, s).unwrap().hi + 1e-15);
        }
        prop_assert!(norm_f0_sq(&f, r).unwrap().hi <= norm_f0_sq(&f, s).unwrap().hi + 1e-15);
        prop_assert!(area_ratio(&f, r).unwrap().hi <= area_ratio(&f, s).unwrap().hi + 1e-15);
    }

    #[test]
    fn lemma_holds_on_schur_samples(seed in any::<u64>(), n in 1usize..7, r in 0.0..0.95f64) {
        let f = sample(seed);
        let (lhs, rhs) = lemma_a_sides(&f, n, r).unwrap();
        prop_assert!(lhs.hi <= rhs.hi * (1.0 + 1e-9) + 1e-15, "{} > {}", lhs.hi, rhs.hi);
    }

    #[test]
    fn bohr_rogosinski_sum_holds_below_its_radius(seed in any::<u64>(), n in 1u32..7, t in 0.0..1.0f64, theta in 0.0..std::f64::consts::TAU) {
        let f = sample(seed);
        let rn = solve_radius(RadiusEquation::RogosinskiRN(n), 1e-12).unwrap().bracket[0];
        let v = bohr_rogosinski_rn(&f, Complex64::from_polar(t * rn, theta), n as usize).unwrap();
        prop_assert!(v.hi <= 1.0 + 1e-9);
    }
}
