//! Dense multivectors with blade-bitmask indexing.
//!
//! A multivector of Cl(p,q) is stored as 2^dim doubles, one per basis
//! blade. Bit k of the index set ⇔ basis vector eₖ is a factor, and the
//! blade is oriented by ascending axis order. Products run over all
//! coefficient pairs; with dim ≤ 6 that is at most 4096 terms, which is
//! fast enough to make sparsity tricks pointless.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::signature::Signature;
use crate::error::{Error, Result};

/// Componentwise comparison tolerance used by default throughout the crate.
/// All constructions in the twistor pipeline are O(1), so an absolute
/// tolerance is appropriate.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Sign incurred by reordering the product of two ascending blades into
/// ascending order, ignoring the metric.
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Product of basis blades `a` and `b`: the resulting blade is `a ^ b`,
/// with a sign from the reordering swaps and from the metric of every
/// axis the two blades share.
pub(crate) fn blade_product(sig: Signature, a: usize, b: usize) -> (f64, usize) {
    let mut sign = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let axis = common.trailing_zeros() as usize;
        sign *= sig.axis_sign(axis);
        common &= common - 1;
    }
    (sign, a ^ b)
}

/// A general element of Cl(p,q): a real coefficient per basis blade.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    /// The zero element.
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    /// A grade-0 element.
    pub fn scalar(sig: Signature, value: f64) -> Self {
        let mut mv = Multivector::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    /// The basis vector e(axis).
    pub fn basis_vector(sig: Signature, axis: usize) -> Result<Self> {
        if axis >= sig.dim() {
            return Err(Error::IndexOutOfRange(axis, sig.dim()));
        }
        Ok(Multivector::basis_blade(sig, 1 << axis))
    }

    /// The basis blade with the given bitmask, coefficient 1.
    pub fn basis_blade(sig: Signature, mask: usize) -> Self {
        debug_assert!(mask < sig.blade_count());
        let mut mv = Multivector::zero(sig);
        mv.coeffs[mask] = 1.0;
        mv
    }

    /// Build from a full coefficient vector, validating length and finiteness.
    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength {
                got: coeffs.len(),
                expected: sig.blade_count(),
            });
        }
        if let Some(bad) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of the blade with the given bitmask.
    pub fn coeff(&self, mask: usize) -> f64 {
        self.coeffs[mask]
    }

    pub(crate) fn set_coeff(&mut self, mask: usize, value: f64) {
        self.coeffs[mask] = value;
    }

    /// The grade-0 part as a plain number.
    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(
                self.sig.p() as u8,
                self.sig.q() as u8,
                other.sig.p() as u8,
                other.sig.q() as u8,
            ));
        }
        Ok(())
    }

    /// Geometric product. Errors on a signature mismatch.
    pub fn try_geometric(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (i, &ai) in self.coeffs.iter().enumerate() {
            if ai == 0.0 {
                continue;
            }
            for (j, &bj) in other.coeffs.iter().enumerate() {
                if bj == 0.0 {
                    continue;
                }
                let (sign, mask) = blade_product(self.sig, i, j);
                out.coeffs[mask] += sign * ai * bj;
            }
        }
        Ok(out)
    }

    /// Geometric product; panics on a signature mismatch.
    pub fn geometric(&self, other: &Self) -> Self {
        self.try_geometric(other).expect("geometric product")
    }

    /// Grade-filtered geometric product: keeps output blades whose grade
    /// satisfies `keep(grade_a, grade_b, grade_out)`.
    fn graded_product(&self, other: &Self, keep: impl Fn(u32, u32, u32) -> bool) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (i, &ai) in self.coeffs.iter().enumerate() {
            if ai == 0.0 {
                continue;
            }
            for (j, &bj) in other.coeffs.iter().enumerate() {
                if bj == 0.0 {
                    continue;
                }
                let (sign, mask) = blade_product(self.sig, i, j);
                if keep(
                    i.count_ones(),
                    j.count_ones(),
                    mask.count_ones(),
                ) {
                    out.coeffs[mask] += sign * ai * bj;
                }
            }
        }
        Ok(out)
    }

    /// Outer (wedge) product: for grades r, s keeps the grade r+s part,
    /// extended bilinearly.
    pub fn try_outer(&self, other: &Self) -> Result<Self> {
        self.graded_product(other, |r, s, t| t == r + s)
    }

    pub fn outer(&self, other: &Self) -> Self {
        self.try_outer(other).expect("outer product")
    }

    /// Inner product with the |r−s| grade convention, extended bilinearly.
    pub fn try_inner(&self, other: &Self) -> Result<Self> {
        self.graded_product(other, |r, s, t| t == r.abs_diff(s))
    }

    pub fn inner(&self, other: &Self) -> Self {
        self.try_inner(other).expect("inner product")
    }

    /// ⟨A⟩ₖ: zero every coefficient whose blade popcount differs from `k`.
    pub fn grade_projection(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        let mut out = Multivector::zero(self.sig);
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if mask.count_ones() as usize == k {
                out.coeffs[mask] = c;
            }
        }
        Ok(out)
    }

    /// Reverse: the grade-k part picks up (−1)^{k(k−1)/2}.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            let k = mask.count_ones() as usize;
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    /// Grade involution: odd grades change sign.
    pub fn grade_involution(&self) -> Self {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            if mask.count_ones() % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    /// V A Ṽ.
    pub fn sandwich(&self, a: &Self) -> Self {
        self.geometric(a).geometric(&self.reverse())
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Componentwise comparison with absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.sig == other.sig
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    /// True when every coefficient is within `tol` of zero.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    /// True when all coefficients outside grade `k` are within `tol` of zero.
    pub fn is_grade(&self, k: usize, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() as usize == k || c.abs() <= tol)
    }

    /// True when every odd-grade coefficient is within `tol` of zero.
    pub fn is_even(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| mask.count_ones() % 2 == 0 || c.abs() <= tol)
    }

    /// Grades carrying a coefficient larger than `tol`.
    pub fn grades(&self, tol: f64) -> Vec<usize> {
        let mut found = vec![false; self.sig.dim() + 1];
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.abs() > tol {
                found[mask.count_ones() as usize] = true;
            }
        }
        found
            .iter()
            .enumerate()
            .filter_map(|(k, &f)| f.then_some(k))
            .collect()
    }

    /// Scale by a real number.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= factor;
        }
        out
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in +");
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in -");
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= r;
        }
        out
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scaled(rhs)
    }
}

impl std::fmt::Display for Multivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (mask, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*e{mask:b}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
