use num_bigint::BigInt;
use proptest::prelude::*;
use qci_core::linalg::hermite_normal_form;
use qci_core::linalg::IntMatrix;
use qci_core::lift::*;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[test]
fn normalized_is_rescaled_chebyshev() {
    for n in 0..=100 {
        let f = normalized_f(n);
        assert_eq!(chebyshev_t(n).rescale_half(), Some(f.clone()), "n = {n}");
        assert!(f.has_parity_of_degree());
        assert_eq!(f.degree(), Some(n));
        if n > 0 {
            assert!(f.is_monic());
        }
    }
}

#[test]
fn reduces_to_power_mod_p() {
    for p in (3..=97).filter(|&p| is_prime(p)) {
        assert!(reduces_to_monomial(&normalized_f(p as usize), p), "p = {p}");
    }
    assert!(monomial_reduction_failures(97).is_empty());
    // composite degrees do not reduce to a monomial
    assert!(!reduces_to_monomial(&normalized_f(9), 9));
}

#[test]
fn trig_identity() {
    for n in 0..=13 {
        assert!(trig_identity_error(n, 100) < 1e-9, "n = {n}");
    }
}

#[test]
fn known_coefficients() {
    assert_eq!(normalized_f(7).to_string(), "u^7 - 7u^5 + 14u^3 - 7u");
}

#[test]
fn lifted_suite_passes() {
    for p in [3u64, 5, 7] {
        let r = verify_lift(p).unwrap();
        assert!(r.all_pass(), "p = {p}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn lattice_shape() {
    for p in [3usize, 5, 7] {
        let l = make_lifted_algebra(p as u64).unwrap();
        let lat = lifted_commutator_space(&l).unwrap();
        let m = (p - 1) / 2;
        assert_eq!(lat.hnf.pivots().len(), (p - 1) * (p - 1) - m * m);
        assert!(lat.pure && lat.span_matches);
        assert!(pivots_are_units(&lat.hnf, p as u64));
        let q = commutative_quotient(&l).unwrap();
        assert_eq!(q.dim(), 2 * p - 1);
    }
}

#[test]
fn invalid_primes() {
    for p in [0u64, 1, 2, 4, 9, 15] {
        assert!(verify_lift(p).is_err());
    }
    assert!(verify_lift(17).is_err());
}

proptest! {
    #[test]
    fn hnf_row_order_invariant(rows in prop::collection::vec(prop::collection::vec(-6i64..6, 4), 1..6), seed in any::<u64>()) {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let mut shuffled = big.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        let h1 = hermite_normal_form(&IntMatrix::new(4, big).unwrap());
        let h2 = hermite_normal_form(&IntMatrix::new(4, shuffled).unwrap());
        prop_assert_eq!(h1.rows(), h2.rows());
    }
}
