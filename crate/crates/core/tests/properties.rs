use proptest::prelude::*;

use lehmerk::arith;
use lehmerk::{
    is_irreducible_nat, is_unit, phi_oracle, ratio_scan, run_suite, splitting_type, unit_table,
    zeta_bounds, BasisShape, QuadraticField, RationalValue, ResidueRing, SplittingType, Suite,
    SuiteOptions, TotientEngine,
};

fn fields() -> Vec<QuadraticField> {
    QuadraticField::whitelist().collect()
}

fn quadratic() -> impl Strategy<Value = QuadraticField> {
    proptest::sample::select(QuadraticField::quadratic_whitelist().collect::<Vec<_>>())
}

fn coord() -> impl Strategy<Value = i128> {
    -100i128..=100
}

/// Units of `Z[i]/(d)` counted straight from `(a+bi)(x+yi) = 1`, sharing no
/// code with the library.
fn gaussian_units_by_hand(d: i64) -> u64 {
    let mut n = 0;
    for a in 0..d {
        for b in 0..d {
            let invertible = (0..d).any(|x| {
                (0..d).any(|y| {
                    (a * x - b * y).rem_euclid(d) == 1 % d && (a * y + b * x).rem_euclid(d) == 0
                })
            });
            n += invertible as u64;
        }
    }
    n
}

#[test]
fn gaussian_totient_matches_hand_count() {
    let engine = TotientEngine::new(QuadraticField::new(-1).unwrap());
    for d in 1..=24 {
        assert_eq!(
            engine.phi_fast(d as u64).unwrap(),
            gaussian_units_by_hand(d),
            "d = {d}"
        );
    }
}

#[test]
fn determinant_criterion_agrees_with_inverse_search() {
    for k in QuadraticField::quadratic_whitelist() {
        for d in 2..=40 {
            let table = unit_table(k, d, 1000).unwrap();
            let ring = ResidueRing::new(k, d).unwrap();
            for (x, &unit) in ring.iter().zip(&table) {
                assert_eq!(is_unit(&x), unit, "{k} d={d} x=({}, {})", x.a(), x.b());
            }
        }
    }
}

#[test]
fn maximality_and_lemma_equivalence() {
    for k in fields() {
        let engine = TotientEngine::new(k);
        for d in 2..=40 {
            let phi_k = phi_oracle(k, d, 1000).unwrap();
            let top = k.max_totient(d);
            assert!(phi_k <= top);
            assert_eq!(phi_k == top, is_irreducible_nat(k, d), "{k} d={d}");
            assert_eq!(engine.phi_fast(d).unwrap(), phi_k);
        }
    }
}

#[test]
fn splitting_matches_unit_counts() {
    // the unit count of O_K/(p) reveals the splitting type on its own
    for k in QuadraticField::quadratic_whitelist() {
        for p in (2..=53).filter(|&p| arith::is_prime(p)) {
            let units = phi_oracle(k, p, 1000).unwrap();
            let expected = match splitting_type(k, p).unwrap() {
                SplittingType::Inert => p * p - 1,
                SplittingType::Split => (p - 1) * (p - 1),
                SplittingType::Ramified => p * (p - 1),
            };
            assert_eq!(units, expected, "{k} p={p}");
        }
    }
}

#[test]
fn suites_are_deterministic_across_threads() {
    let k = QuadraticField::new(-7).unwrap();
    for suite in [Suite::Multiplicativity, Suite::Theorem1, Suite::Theorem3] {
        let one = run_suite(
            suite,
            k,
            3000,
            &SuiteOptions {
                threads: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let four = run_suite(
            suite,
            k,
            3000,
            &SuiteOptions {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one.fingerprint(), four.fingerprint(), "{}", suite.name());
        assert!(one.passed());
    }
}

#[test]
fn zeta_brackets_nest_as_tolerance_shrinks() {
    let mut prev = None;
    for den in [10, 100, 1000] {
        let z = zeta_bounds(2, &RationalValue::new(1, den).unwrap()).unwrap();
        assert!(z.lower < z.upper);
        assert!(z.width() <= RationalValue::new(1, den).unwrap());
        if let Some((lo, hi)) = prev {
            assert!(z.lower >= lo && z.upper <= hi);
        }
        prev = Some((z.lower, z.upper));
    }
}

proptest! {
    #[test]
    fn norm_is_multiplicative(k in quadratic(), a in coord(), b in coord(), c in coord(), d in coord()) {
        let x = k.element(a, b).unwrap();
        let y = k.element(c, d).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap().norm().unwrap(), x.norm().unwrap() * y.norm().unwrap());
    }

    #[test]
    fn determinant_is_norm(k in quadratic(), a in coord(), b in coord()) {
        let x = k.element(a, b).unwrap();
        let [[p, q], [r, s]] = x.mult_matrix().unwrap();
        prop_assert_eq!(p * s - q * r, x.norm().unwrap());
    }

    #[test]
    fn half_trace_norm_formula(k in quadratic(), a in coord(), b in coord()) {
        prop_assume!(k.basis_shape() == BasisShape::HalfTrace);
        let n = k.element(a, b).unwrap().norm().unwrap();
        let m = k.m() as i128;
        prop_assert_eq!(4 * n, (2 * a + b).pow(2) - m * b * b);
    }

    #[test]
    fn ring_laws(k in quadratic(), v in proptest::array::uniform6(coord())) {
        let x = k.element(v[0], v[1]).unwrap();
        let y = k.element(v[2], v[3]).unwrap();
        let z = k.element(v[4], v[5]).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn totient_is_multiplicative(k in quadratic(), m in 2u64..5000, n in 2u64..5000) {
        prop_assume!(arith::gcd(m, n) == 1);
        let e = TotientEngine::new(k);
        prop_assert_eq!(e.phi_fast(m * n).unwrap(), e.phi_fast(m).unwrap() * e.phi_fast(n).unwrap());
        prop_assert_eq!(e.phi_fast(m).unwrap() % arith::euler_phi(m), 0);
    }

    #[test]
    fn ratio_scan_hits_satisfy_the_ratio(w in 1u64..40, num in 1i64..4, den in 1i64..4) {
        prop_assume!(arith::is_squarefree(w));
        let l = RationalValue::new(num, den).unwrap();
        let scan = ratio_scan(w, &l, 20_000, 1).unwrap();
        for d in scan.matches {
            prop_assert!(d >= w && d % w == 0 && arith::is_squarefree(d));
            // (d - 1) / phi(d) = l, cross-multiplied
            let lhs = (d as i128 - 1) * den as i128;
            let rhs = num as i128 * arith::euler_phi(d) as i128;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
