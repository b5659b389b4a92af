//! The 6-d twistor Υ = ZW₁W₂ and the induced spinor representation of
//! the restricted conformal group.
//!
//! Left multiplication by a conformal rotor keeps Υ inside the right
//! ideal cut out by the commuting idempotents W₁ = ½(1 − Iγ₃e) and
//! W₂ = ½(1 − Iγ₀ē), so each rotor induces a closed-form action on the
//! 4-d spinor Z. Inversions are not rotors; the representative
//! Υ ↦ −eΥIγ₁ realises Z ↦ ZIσ₂, and composing
//! inversion∘translation∘inversion produces −K_a instead of K_a — the
//! sign obstruction that makes the spinors a 4-valued representation of
//! the restricted conformal group.

use crate::algebra::{Multivector, Rotor, DEFAULT_TOL};
use crate::conformal::{self, embed_sta};
use crate::error::{Error, Result};
use crate::sta::{self, FourSpinor};

/// W₁ = ½(1 − Iγ₃e).
pub fn w1() -> Multivector {
    let i_g3_e = embed_sta(&sta::i_gamma3()).geometric(&conformal::e());
    (&Multivector::scalar(conformal::signature(), 1.0) - &i_g3_e).scaled(0.5)
}

/// W₂ = ½(1 − Iγ₀ē).
pub fn w2() -> Multivector {
    let i_g0 = sta::pseudoscalar().geometric(&sta::gamma(0));
    let i_g0_ebar = embed_sta(&i_g0).geometric(&conformal::e_bar());
    (&Multivector::scalar(conformal::signature(), 1.0) - &i_g0_ebar).scaled(0.5)
}

/// The combined projector W₁W₂ (idempotent; W₁ and W₂ commute).
pub fn w12() -> Multivector {
    w1().geometric(&w2())
}

/// A 6-d twistor: an element of the right ideal Cl(2,4)·W₁W₂.
#[derive(Debug, Clone)]
pub struct SixSpinor {
    value: Multivector,
}

impl SixSpinor {
    /// Validate right-ideal membership: value·W₁W₂ = value.
    pub fn new(value: Multivector) -> Result<Self> {
        let reprojected = value.geometric(&w12());
        if !reprojected.approx_eq(&value, DEFAULT_TOL * (1.0 + value.max_abs())) {
            return Err(Error::NotGrade(0));
        }
        Ok(SixSpinor { value })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    /// Left multiplication, the conformal group action.
    pub fn acted_on_by(&self, rotor: &Rotor) -> SixSpinor {
        SixSpinor {
            value: rotor.value().geometric(&self.value),
        }
    }

    /// The inversion representative Υ ↦ −eΥIγ₁.
    pub fn inverted(&self) -> SixSpinor {
        let i_g1 = embed_sta(&sta::pseudoscalar().geometric(&sta::gamma(1)));
        SixSpinor {
            value: -&conformal::e().geometric(&self.value).geometric(&i_g1),
        }
    }

    pub fn approx_eq(&self, other: &SixSpinor, tol: f64) -> bool {
        self.value.approx_eq(&other.value, tol)
    }

    pub fn scaled(&self, factor: f64) -> SixSpinor {
        SixSpinor {
            value: self.value.scaled(factor),
        }
    }
}

/// Υ = ZW₁W₂: the injective map of a 4-d spinor into the 6-d ideal.
pub fn lift(z: &FourSpinor) -> SixSpinor {
    SixSpinor {
        value: embed_sta(z.value()).geometric(&w12()),
    }
}

/// Spinor representation of translations, T_a(Z) = Z − aZIγ₃½(1+σ₃).
pub fn spin_translate(z: &FourSpinor, a: &Multivector) -> FourSpinor {
    let shift = a
        .geometric(z.value())
        .geometric(&sta::i_gamma3())
        .geometric(&sta::proj_plus());
    FourSpinor::from_even_unchecked(z.value() - &shift)
}

/// Spinor representation of rotations, R₀(Z) = RZ with R a Cl(1,3) rotor.
pub fn spin_rotate(z: &FourSpinor, rotor: &Rotor) -> FourSpinor {
    FourSpinor::from_even_unchecked(rotor.value().geometric(z.value()))
}

/// Spinor representation of dilations, D_α(Z) = Ze^{−ασ₃/2}.
pub fn spin_dilate(z: &FourSpinor, alpha: f64) -> FourSpinor {
    let half = alpha / 2.0;
    let factor = &Multivector::scalar(sta::signature(), half.cosh())
        - &(&sta::sigma(3) * half.sinh());
    FourSpinor::from_even_unchecked(z.value().geometric(&factor))
}

/// The anti-unitary inversion representative Z ↦ ZIσ₂.
pub fn spin_invert(z: &FourSpinor) -> FourSpinor {
    FourSpinor::from_even_unchecked(z.value().geometric(&sta::i_sigma(2)))
}

/// Spinor representation of special conformal transformations,
/// K_a(Z) = Z + aZIγ₃½(1−σ₃).
pub fn spin_special_conformal(z: &FourSpinor, a: &Multivector) -> FourSpinor {
    let shift = a
        .geometric(z.value())
        .geometric(&sta::i_gamma3())
        .geometric(&sta::proj_minus());
    FourSpinor::from_even_unchecked(z.value() + &shift)
}

/// Which family of conformal bivector generators acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BivectorKind {
    /// eγμ, represented on spinors by ψ ↦ −γμψIγ₃.
    E,
    /// ēγμ, represented on spinors by ψ ↦ −IγμψΓ₀.
    EBar,
}

/// The spinor action of the conformal bivector generators eγμ and ēγμ.
/// Satisfies lift(action(ψ)) = (eγμ or ēγμ)·lift(ψ) for every μ.
pub fn bivector_action(kind: BivectorKind, mu: usize, psi: &FourSpinor) -> Result<FourSpinor> {
    if mu > 3 {
        return Err(Error::IndexOutOfRange(mu, 4));
    }
    let value = match kind {
        BivectorKind::E => -&sta::gamma(mu)
            .geometric(psi.value())
            .geometric(&sta::i_gamma3()),
        BivectorKind::EBar => -&sta::pseudoscalar()
            .geometric(&sta::gamma(mu))
            .geometric(psi.value())
            .geometric(&sta::gamma(0)),
    };
    Ok(FourSpinor::from_even_unchecked(value))
}

/// The 6-d bivector generator itself, eγμ or ēγμ.
pub fn bivector_generator(kind: BivectorKind, mu: usize) -> Result<Multivector> {
    if mu > 3 {
        return Err(Error::IndexOutOfRange(mu, 4));
    }
    let axis = match kind {
        BivectorKind::E => conformal::e(),
        BivectorKind::EBar => conformal::e_bar(),
    };
    Ok(axis.geometric(&conformal::gamma(mu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::{
        dilation_rotor, special_conformal_rotor, translation_rotor,
    };
    use crate::sta::{minkowski, ComplexPair};
    use crate::twistor::Twistor;

    fn sample_z(seed: u32) -> FourSpinor {
        let f = |k: u32| ((seed * 23 + k) as f64 * 0.531).sin();
        FourSpinor::from_components([
            ComplexPair::new(f(1), f(2)),
            ComplexPair::new(f(3), f(4)),
            ComplexPair::new(f(5), f(6)),
            ComplexPair::new(f(7), f(8)),
        ])
    }

    fn sample_a(seed: u32) -> Multivector {
        let f = |k: u32| ((seed * 7 + k) as f64 * 0.713).cos();
        minkowski([f(1), f(2), f(3), f(4)])
    }

    #[test]
    fn projectors_are_commuting_idempotents() {
        let (w1, w2) = (w1(), w2());
        assert!(w1.geometric(&w1).approx_eq(&w1, 1e-15));
        assert!(w2.geometric(&w2).approx_eq(&w2, 1e-15));
        assert!(w1.geometric(&w2).approx_eq(&w2.geometric(&w1), 1e-15));
        let w12 = w12();
        assert!(w12.geometric(&w12).approx_eq(&w12, 1e-15));
    }

    #[test]
    fn lift_basics() {
        let zero = lift(&FourSpinor::zero());
        assert!(zero.value().is_zero(0.0));
        let one = lift(&FourSpinor::one());
        assert!(one.value().approx_eq(&w12(), 0.0));
        // ideal membership is preserved and validated
        let z = sample_z(3);
        let lifted = lift(&z);
        assert!(SixSpinor::new(lifted.value().clone()).is_ok());
        assert!(SixSpinor::new(conformal::e()).is_err());
    }

    /// Row-echelon rank of a small matrix, for the injectivity check.
    fn rank(rows: &mut Vec<Vec<f64>>, tol: f64) -> usize {
        let cols = rows[0].len();
        let mut rank = 0;
        let mut col = 0;
        while rank < rows.len() && col < cols {
            let (pivot, pivot_val) = rows[rank..]
                .iter()
                .enumerate()
                .map(|(i, r)| (i + rank, r[col].abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pivot_val <= tol {
                col += 1;
                continue;
            }
            rows.swap(rank, pivot);
            let lead = rows[rank][col];
            for i in (rank + 1)..rows.len() {
                let factor = rows[i][col] / lead;
                for j in col..cols {
                    rows[i][j] -= factor * rows[rank][j];
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    #[test]
    fn lift_is_injective_on_the_eight_spinor_dofs() {
        let sig = sta::signature();
        let even_masks: Vec<usize> =
            (0..16).filter(|m: &usize| m.count_ones().is_multiple_of(2)).collect();
        let mut rows: Vec<Vec<f64>> = even_masks
            .iter()
            .map(|&m| {
                let basis = FourSpinor::new(Multivector::basis_blade(sig, m)).unwrap();
                lift(&basis).value().coeffs().to_vec()
            })
            .collect();
        assert_eq!(rank(&mut rows, 1e-9), 8);
    }

    #[test]
    fn ideal_stability_under_every_rotor_family() {
        let even_masks: Vec<usize> =
            (0..16).filter(|m: &usize| m.count_ones().is_multiple_of(2)).collect();
        let basis_rows: Vec<Vec<f64>> = even_masks
            .iter()
            .map(|&m| {
                lift(&FourSpinor::new(Multivector::basis_blade(sta::signature(), m)).unwrap())
                    .value()
                    .coeffs()
                    .to_vec()
            })
            .collect();
        let z = sample_z(11);
        let a = sample_a(5);
        let r = Rotor::exp_blade(&sta::gamma(1).geometric(&sta::gamma(3)), 0.7).unwrap();
        let rotors = [
            translation_rotor(&a, 1.0),
            dilation_rotor(0.9),
            special_conformal_rotor(&a, 1.0),
            Rotor::from_unchecked(embed_sta(r.value())),
        ];
        for rotor in &rotors {
            let moved = lift(&z).acted_on_by(rotor);
            // still in the ideal…
            assert!(SixSpinor::new(moved.value().clone()).is_ok());
            // …and inside the span of lifted basis spinors
            let mut rows = basis_rows.clone();
            rows.push(moved.value().coeffs().to_vec());
            assert_eq!(rank(&mut rows, 1e-9), 8);
        }
    }

    #[test]
    fn translation_action_matches_the_rotor() {
        for seed in 0..30 {
            let z = sample_z(seed);
            let a = sample_a(seed);
            let spun = spin_translate(&z, &a);
            let six = lift(&z).acted_on_by(&translation_rotor(&a, 1.0));
            assert!(lift(&spun).approx_eq(&six, 1e-10));
        }
        // a = 0 is the identity
        let z = sample_z(40);
        assert!(spin_translate(&z, &minkowski([0.0; 4])).approx_eq(&z, 0.0));
    }

    #[test]
    fn translation_reproduces_the_twistor_construction() {
        // T_a with a = −r applied to ψ gives exactly Z = T₋ᵣ(ψ)
        let z = sample_z(17);
        let r = sample_a(9);
        let twistor = Twistor::new(z.clone(), r.clone()).unwrap();
        let translated = spin_translate(&z, &-&r);
        assert!(translated.approx_eq(twistor.z(), 1e-14));
        // translating the twistor by a re-bases it at r − a
        let a = sample_a(21);
        let moved = spin_translate(twistor.z(), &a);
        let rebased = Twistor::new(z, &r - &a).unwrap();
        assert!(moved.approx_eq(rebased.z(), 1e-13));
    }

    #[test]
    fn translation_preserves_inner_product() {
        let psi = sample_z(1);
        let phi = sample_z(2);
        let base = psi.inner_s(&phi);
        for seed in 0..10 {
            let a = sample_a(seed);
            let lhs = spin_translate(&psi, &a).inner_s(&spin_translate(&phi, &a));
            assert!(lhs.approx_eq(base, 1e-12));
        }
    }

    #[test]
    fn rotation_action_matches_the_rotor() {
        let plane = sta::gamma(1).geometric(&sta::gamma(2));
        for seed in 0..20 {
            let z = sample_z(seed);
            let angle = (seed as f64) * 0.37 - 2.0;
            let r = Rotor::exp_blade(&plane, angle).unwrap();
            let spun = spin_rotate(&z, &r);
            let six = lift(&z).acted_on_by(&Rotor::from_unchecked(embed_sta(r.value())));
            assert!(lift(&spun).approx_eq(&six, 1e-10));
        }
        // the identity rotor does nothing
        let z = sample_z(60);
        let identity = Rotor::identity(sta::signature());
        assert!(spin_rotate(&z, &identity).approx_eq(&z, 0.0));
    }

    #[test]
    fn full_turn_flips_the_spinor_sign() {
        let plane = sta::gamma(1).geometric(&sta::gamma(2));
        let z = sample_z(5);
        let full = Rotor::exp_blade(&plane, 2.0 * std::f64::consts::PI).unwrap();
        let spun = spin_rotate(&z, &full);
        assert!(spun.approx_eq(&z.scaled(-1.0), 1e-12));
        let double = Rotor::exp_blade(&plane, 4.0 * std::f64::consts::PI).unwrap();
        assert!(spin_rotate(&z, &double).approx_eq(&z, 1e-11));
    }

    #[test]
    fn dilation_action_matches_the_rotor() {
        for seed in 0..30 {
            let z = sample_z(seed);
            let alpha = (seed as f64) * 0.23 - 3.0;
            let spun = spin_dilate(&z, alpha);
            let six = lift(&z).acted_on_by(&dilation_rotor(alpha));
            assert!(lift(&spun).approx_eq(&six, 1e-10));
        }
        let z = sample_z(31);
        assert!(spin_dilate(&z, 0.0).approx_eq(&z, 0.0));
    }

    #[test]
    fn dilation_preserves_helicity() {
        // σ₃ slips through ⟨ψ̃ψ⟩: e^{−ασ₃/2} cancels against its reverse
        for seed in 0..10 {
            let z = sample_z(seed);
            let t = Twistor::new(z.clone(), minkowski([0.0; 4])).unwrap();
            let s = t.helicity();
            let dilated = Twistor::new(spin_dilate(&z, 1.3), minkowski([0.0; 4])).unwrap();
            assert!((dilated.helicity() - s).abs() < 1e-12 * (1.0 + s.abs()));
        }
    }

    #[test]
    fn dilation_conjugates_inner_product_through_sigma3() {
        // Literal recomputation: (Ze^{−ασ₃/2})~ = e^{+ασ₃/2}Z̃, so the
        // product picks up a σ₃ conjugation, not a one-sided factor:
        // (D_αψ)~ D_αφ = e^{ασ₃/2} ψ̃φ e^{−ασ₃/2}. Both σ₃ and Iσ₃
        // commute with the exponentials, so the s-projection is left
        // exactly invariant.
        let psi = sample_z(3);
        let phi = sample_z(4);
        let base = psi.inner_s(&phi);
        for &alpha in &[0.3, -1.1, 2.0] {
            let lhs = spin_dilate(&psi, alpha).inner_s(&spin_dilate(&phi, alpha));
            let half = alpha / 2.0;
            let left = &Multivector::scalar(sta::signature(), half.cosh())
                + &(&sta::sigma(3) * half.sinh());
            let right = &Multivector::scalar(sta::signature(), half.cosh())
                - &(&sta::sigma(3) * half.sinh());
            let conjugated = left
                .geometric(&psi.value().reverse())
                .geometric(phi.value())
                .geometric(&right);
            assert!(lhs.approx_eq(sta::proj_s(&conjugated), 1e-12));
            assert!(lhs.approx_eq(base, 1e-12));
        }
    }

    #[test]
    fn inversion_representative_works_in_both_pictures() {
        for seed in 0..20 {
            let z = sample_z(seed);
            // 6-d: −e·lift(Z)·Iγ₁ = lift(ZIσ₂)
            let six = lift(&z).inverted();
            assert!(six.approx_eq(&lift(&spin_invert(&z)), 1e-12));
        }
        // double inversion is −1 (anti-unitarity): Z(Iσ₂)² = −Z
        let z = sample_z(33);
        assert!(spin_invert(&spin_invert(&z)).approx_eq(&z.scaled(-1.0), 1e-14));
    }

    #[test]
    fn inversion_intertwines_dilations() {
        // D_α(ZIσ₂) = D_{−α}(Z)·Iσ₂
        for seed in 0..10 {
            let z = sample_z(seed);
            let alpha = 0.4 + 0.2 * seed as f64;
            let lhs = spin_dilate(&spin_invert(&z), alpha);
            let rhs = spin_invert(&spin_dilate(&z, -alpha));
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn special_conformal_action_matches_the_rotor() {
        for seed in 0..30 {
            let z = sample_z(seed);
            let a = sample_a(seed);
            let spun = spin_special_conformal(&z, &a);
            let six = lift(&z).acted_on_by(&special_conformal_rotor(&a, 1.0));
            assert!(lift(&spun).approx_eq(&six, 1e-10));
        }
        let z = sample_z(50);
        assert!(spin_special_conformal(&z, &minkowski([0.0; 4])).approx_eq(&z, 0.0));
    }

    #[test]
    fn inversion_chain_exposes_the_sign_flaw() {
        // inversion ∘ translation(a) ∘ inversion = −K_a, at the spinor level…
        for seed in 0..20 {
            let z = sample_z(seed);
            let a = sample_a(seed + 100);
            let chained = spin_invert(&spin_translate(&spin_invert(&z), &a));
            let expected = spin_special_conformal(&z, &a).scaled(-1.0);
            assert!(chained.approx_eq(&expected, 1e-12));

            // …and at the 6-d level
            let six_chained = lift(&z)
                .inverted()
                .acted_on_by(&translation_rotor(&a, 1.0))
                .inverted();
            let six_expected = lift(&z)
                .acted_on_by(&special_conformal_rotor(&a, 1.0))
                .scaled(-1.0);
            assert!(six_chained.approx_eq(&six_expected, 1e-11));
        }
    }

    #[test]
    fn bivector_generator_maps_hold_exhaustively() {
        for seed in 0..25 {
            let psi = sample_z(seed);
            let lifted = lift(&psi);
            for kind in [BivectorKind::E, BivectorKind::EBar] {
                for mu in 0..4 {
                    let via_spinor = lift(&bivector_action(kind, mu, &psi).unwrap());
                    let via_six = SixSpinor::new(
                        bivector_generator(kind, mu)
                            .unwrap()
                            .geometric(lifted.value()),
                    )
                    .unwrap();
                    assert!(
                        via_spinor.approx_eq(&via_six, 1e-10),
                        "generator {kind:?} μ={mu}"
                    );
                }
            }
        }
        assert!(bivector_action(BivectorKind::E, 4, &sample_z(0)).is_err());
    }

    #[test]
    fn bivector_action_is_linear_and_explicit_case_checks_out() {
        // ψ = 1, e-type, μ = 3: −γ₃·1·Iγ₃ = −γ₃Iγ₃ = I·γ₃γ₃ = … evaluate both ways
        let one = FourSpinor::one();
        let acted = bivector_action(BivectorKind::E, 3, &one).unwrap();
        let direct = -&sta::gamma(3).geometric(&sta::i_gamma3());
        assert!(acted.value().approx_eq(&direct, 0.0));

        let a = sample_z(7);
        let b = sample_z(8);
        let sum = a.add(&b);
        for kind in [BivectorKind::E, BivectorKind::EBar] {
            for mu in 0..4 {
                let lhs = bivector_action(kind, mu, &sum).unwrap();
                let rhs = bivector_action(kind, mu, &a)
                    .unwrap()
                    .add(&bivector_action(kind, mu, &b).unwrap());
                assert!(lhs.approx_eq(&rhs, 1e-13));
            }
        }
    }
}
