//! Property tests over randomly drawn multivectors and spinors.

use proptest::prelude::*;

use twistor_ga::algebra::{Multivector, Signature};
use twistor_ga::conformal;
use twistor_ga::sta::{ComplexPair, FourSpinor};
use twistor_ga::twistor::Twistor;
use twistor_ga::sta;

fn coeff() -> impl Strategy<Value = f64> {
    // moderate magnitudes: every construction in the library is O(1)
    (-8i8..=8, -100i8..=100).prop_map(|(a, b)| a as f64 * 0.25 + b as f64 / 400.0)
}

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    proptest::collection::vec(coeff(), sig.blade_count())
        .prop_map(move |c| Multivector::from_coeffs(sig, c).unwrap())
}

fn spinor() -> impl Strategy<Value = FourSpinor> {
    proptest::collection::vec(coeff(), 8).prop_map(|c| {
        FourSpinor::from_components([
            ComplexPair::new(c[0], c[1]),
            ComplexPair::new(c[2], c[3]),
            ComplexPair::new(c[4], c[5]),
            ComplexPair::new(c[6], c[7]),
        ])
    })
}

fn minkowski() -> impl Strategy<Value = Multivector> {
    proptest::collection::vec(coeff(), 4).prop_map(|c| sta::minkowski([c[0], c[1], c[2], c[3]]))
}

proptest! {
    #[test]
    fn products_associate_and_distribute(
        a in multivector(conformal::signature()),
        b in multivector(conformal::signature()),
        c in multivector(conformal::signature()),
    ) {
        let assoc = &a.geometric(&b).geometric(&c) - &a.geometric(&b.geometric(&c));
        prop_assert!(assoc.max_abs() < 1e-9);
        let dist = &a.geometric(&(&b + &c)) - &(&a.geometric(&b) + &a.geometric(&c));
        prop_assert!(dist.max_abs() < 1e-10);
    }

    #[test]
    fn reverse_is_an_anti_automorphism(
        a in multivector(Signature::new(1, 3).unwrap()),
        b in multivector(Signature::new(1, 3).unwrap()),
    ) {
        let lhs = a.geometric(&b).reverse();
        let rhs = b.reverse().geometric(&a.reverse());
        prop_assert!(lhs.approx_eq(&rhs, 1e-10));
        prop_assert!(a.reverse().reverse().approx_eq(&a, 0.0));
    }

    #[test]
    fn grade_one_product_splits_into_inner_and_outer(
        a in minkowski(),
        b in minkowski(),
    ) {
        let whole = &a.inner(&b) + &a.outer(&b);
        prop_assert!(whole.approx_eq(&a.geometric(&b), 1e-12));
        prop_assert!(a.outer(&a).is_zero(0.0));
    }

    #[test]
    fn spinor_components_are_a_bijection(psi in spinor()) {
        let back = FourSpinor::from_components(psi.components());
        prop_assert!(back.approx_eq(&psi, 1e-12));
    }

    #[test]
    fn twistor_observables_are_phase_invariant(
        psi in spinor(),
        r in minkowski(),
        theta in -3.2f64..3.2,
    ) {
        let t = Twistor::new(psi, r).unwrap();
        let u = t.phased(theta);
        let scale = 1.0 + t.momentum().max_abs() + t.angular_momentum().max_abs();
        prop_assert!((t.helicity() - u.helicity()).abs() < 1e-11 * scale);
        prop_assert!(t.momentum().approx_eq(&u.momentum(), 1e-11 * scale));
        prop_assert!(t.angular_momentum().approx_eq(&u.angular_momentum(), 1e-11 * scale));
    }

    #[test]
    fn angular_momentum_decomposes(psi in spinor(), r in minkowski()) {
        let t = Twistor::new(psi, r).unwrap();
        let scale = 1.0 + t.angular_momentum().max_abs();
        prop_assert!(t
            .angular_momentum()
            .approx_eq(&t.angular_momentum_decomposed(), 1e-11 * scale));
    }
}
