//! Rotors: even unit-reverse elements acting by the sandwich product.

use crate::algebra::multivector::{Multivector, DEFAULT_TOL};
use crate::error::{Error, Result};

/// An even multivector R with RR̃ = 1, the double cover of a restricted
/// orthogonal transformation. Acts on anything by A ↦ R A R̃.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor {
    value: Multivector,
}

impl Rotor {
    /// Validate RR̃ = 1 (within `tol`) and evenness, then wrap.
    pub fn new(value: Multivector, tol: f64) -> Result<Self> {
        if !value.is_even(tol) {
            return Err(Error::NotEven);
        }
        let unit = value.geometric(&value.reverse());
        let mut dev = (unit.scalar_part() - 1.0).abs();
        for (mask, &c) in unit.coeffs().iter().enumerate() {
            if mask != 0 {
                dev = dev.max(c.abs());
            }
        }
        if dev > tol {
            return Err(Error::NotARotor(dev));
        }
        Ok(Rotor { value })
    }

    /// Exponential e^{−λB/2} of a 2-blade, in closed form.
    ///
    /// B² is a scalar for any blade: negative squares give circular
    /// functions, positive give hyperbolic ones, null blades truncate to
    /// 1 − λB/2. Non-blade bivectors (B∧B ≠ 0) are rejected; every rotor
    /// used in this crate is a blade exponential.
    pub fn exp_blade(plane: &Multivector, lambda: f64) -> Result<Self> {
        if !plane.is_grade(2, DEFAULT_TOL * (1.0 + plane.max_abs())) {
            return Err(Error::NotGrade(2));
        }
        let wedge = plane.outer(plane);
        if wedge.max_abs() > DEFAULT_TOL * (1.0 + plane.max_abs().powi(2)) {
            return Err(Error::NotABlade);
        }
        let sq = plane.geometric(plane).scalar_part();
        let half = -lambda / 2.0;
        let sig = plane.sig();
        let one = Multivector::scalar(sig, 1.0);
        let value = if sq < -DEFAULT_TOL {
            // B² = −m²: cos(m·|half|) + sin(...)/m · half·B
            let m = (-sq).sqrt();
            let (s, c) = (half * m).sin_cos();
            &(&one * c) + &(plane * (s / m))
        } else if sq > DEFAULT_TOL {
            let m = sq.sqrt();
            let arg = half * m;
            &(&one * arg.cosh()) + &(plane * (arg.sinh() / m))
        } else {
            &one + &(plane * half)
        };
        Rotor::new(value, DEFAULT_TOL)
    }

    /// The identity rotor.
    pub fn identity(sig: crate::algebra::Signature) -> Self {
        Rotor {
            value: Multivector::scalar(sig, 1.0),
        }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    /// R A R̃.
    pub fn apply(&self, a: &Multivector) -> Multivector {
        self.value.sandwich(a)
    }

    /// The inverse rotor R̃.
    pub fn reversed(&self) -> Self {
        Rotor {
            value: self.value.reverse(),
        }
    }

    /// Composition: (self ∘ other) acts as self.apply(other.apply(·)).
    pub fn compose(&self, other: &Rotor) -> Self {
        Rotor {
            value: self.value.geometric(&other.value),
        }
    }

    /// Internal constructor for products already known to be rotors.
    pub(crate) fn from_unchecked(value: Multivector) -> Self {
        debug_assert!(
            Rotor::new(value.clone(), 1e-8).is_ok(),
            "value is not a rotor: {value}"
        );
        Rotor { value }
    }
}
