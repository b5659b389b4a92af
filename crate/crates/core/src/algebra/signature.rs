//! Metric signatures for real Clifford algebras Cl(p,q), p + q ≤ 6.

use crate::error::{Error, Result};

/// Largest supported dimension. Dense storage needs 2^dim coefficients,
/// so 6 caps a multivector at 64 doubles.
pub const MAX_DIM: usize = 6;

/// Signature of a real Clifford algebra: the number of basis vectors
/// squaring to +1 and to −1, together with their order along the axes.
///
/// `Signature::new(p, q)` places the positive axes first. Some algebras
/// interleave signs instead — the spacetime-plus-conformal basis
/// (γ₀,γ₁,γ₂,γ₃,e,ē) carries (+,−,−,−,+,−) — so the axis layout is kept
/// explicitly as a mask of negative axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    dim: u8,
    neg_mask: u8,
}

impl Signature {
    /// Canonical signature with `p` positive axes followed by `q` negative ones.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let dim = p + q;
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(dim));
        }
        let neg_mask = (((1u16 << dim) - 1) ^ ((1u16 << p) - 1)) as u8;
        Ok(Signature {
            dim: dim as u8,
            neg_mask,
        })
    }

    /// Signature with an explicit sign per axis, in axis order.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.is_empty() || signs.len() > MAX_DIM {
            return Err(Error::DimensionOutOfRange(signs.len()));
        }
        let mut neg_mask = 0u8;
        for (k, s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg_mask |= 1 << k,
                _ => return Err(Error::DimensionOutOfRange(signs.len())),
            }
        }
        Ok(Signature {
            dim: signs.len() as u8,
            neg_mask,
        })
    }

    /// Number of basis vectors.
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Count of axes squaring to +1.
    pub fn p(self) -> usize {
        self.dim() - self.q()
    }

    /// Count of axes squaring to −1.
    pub fn q(self) -> usize {
        self.neg_mask.count_ones() as usize
    }

    /// Number of basis blades, 2^dim.
    pub fn blade_count(self) -> usize {
        1 << self.dim
    }

    /// Square of the basis vector along `axis`: +1.0 or −1.0.
    pub fn axis_sign(self, axis: usize) -> f64 {
        debug_assert!(axis < self.dim());
        if self.neg_mask & (1 << axis) != 0 {
            -1.0
        } else {
            1.0
        }
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cl({},{})", self.p(), self.q())
    }
}
