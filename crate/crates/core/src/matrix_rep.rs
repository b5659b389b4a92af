//! Faithful complex matrix representation of Cl(p,q), used as an
//! independent check on the dense product kernel.
//!
//! Generators are built from Kronecker products of the 2×2 Pauli
//! matrices: the k-th pair of axes maps to σ₃⊗…⊗σ₃⊗{σ₁,σ₂}⊗1⊗…⊗1, which
//! anticommute and square to +1; an axis of negative metric is then
//! multiplied by i. Basis blades map to ascending products of the
//! generators, and multivectors map linearly. The representation never
//! touches `blade_product`, so agreement of mapped products with matrix
//! products is a genuine cross-check of the sign kernel.

use crate::algebra::{Multivector, Signature};

/// A complex number, kept bare to avoid dragging a dependency into the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    fn mul(self, other: Complex) -> Complex {
        Complex {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }

    fn add(self, other: Complex) -> Complex {
        Complex {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }

    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex>,
}

impl CMatrix {
    fn zero(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Complex::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> Complex {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Complex) {
        self.data[i * self.n + j] = v;
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == Complex::ZERO {
                    continue;
                }
                for j in 0..n {
                    let prev = out.at(i, j);
                    out.set(i, j, prev.add(a.mul(other.at(k, j))));
                }
            }
        }
        out
    }

    fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (c, o) in out.data.iter_mut().zip(&other.data) {
            *c = c.add(*o);
        }
        out
    }

    fn scale(&self, s: Complex) -> CMatrix {
        let mut out = self.clone();
        for c in &mut out.data {
            *c = c.mul(s);
        }
        out
    }

    fn kron(&self, other: &CMatrix) -> CMatrix {
        let n = self.n * other.n;
        let mut out = CMatrix::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.at(i, j);
                for k in 0..other.n {
                    for l in 0..other.n {
                        out.set(
                            i * other.n + k,
                            j * other.n + l,
                            a.mul(other.at(k, l)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Largest entrywise modulus of (self − other).
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| {
                m.max(Complex {
                    re: a.re - b.re,
                    im: a.im - b.im,
                }
                .abs())
            })
    }
}

fn pauli(which: usize) -> CMatrix {
    let mut m = CMatrix::zero(2);
    match which {
        1 => {
            m.set(0, 1, Complex::ONE);
            m.set(1, 0, Complex::ONE);
        }
        2 => {
            m.set(0, 1, Complex { re: 0.0, im: -1.0 });
            m.set(1, 0, Complex::I);
        }
        3 => {
            m.set(0, 0, Complex::ONE);
            m.set(1, 1, Complex { re: -1.0, im: 0.0 });
        }
        _ => unreachable!(),
    }
    m
}

/// The matrix representation of one fixed signature.
pub struct MatrixRep {
    sig: Signature,
    generators: Vec<CMatrix>,
    size: usize,
}

impl MatrixRep {
    pub fn new(sig: Signature) -> Self {
        let dim = sig.dim();
        let factors = dim.div_ceil(2);
        let size = 1 << factors;
        let mut generators = Vec::with_capacity(dim);
        for axis in 0..dim {
            let pair = axis / 2;
            let inner = if axis % 2 == 0 { pauli(1) } else { pauli(2) };
            let mut m = CMatrix::identity(1);
            for t in 0..factors {
                let factor = if t < pair {
                    pauli(3)
                } else if t == pair {
                    inner.clone()
                } else {
                    CMatrix::identity(2)
                };
                m = m.kron(&factor);
            }
            if sig.axis_sign(axis) < 0.0 {
                m = m.scale(Complex::I);
            }
            generators.push(m);
        }
        MatrixRep {
            sig,
            generators,
            size,
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Matrix of the basis blade with the given bitmask (ascending order).
    pub fn blade_matrix(&self, mask: usize) -> CMatrix {
        let mut m = CMatrix::identity(self.size);
        for axis in 0..self.sig.dim() {
            if mask & (1 << axis) != 0 {
                m = m.matmul(&self.generators[axis]);
            }
        }
        m
    }

    /// Image of a multivector under the representation.
    pub fn map(&self, mv: &Multivector) -> CMatrix {
        assert_eq!(mv.sig(), self.sig, "signature mismatch in matrix map");
        let mut out = CMatrix::zero(self.size);
        for (mask, &c) in mv.coeffs().iter().enumerate() {
            if c != 0.0 {
                out = out.add(&self.blade_matrix(mask).scale(Complex { re: c, im: 0.0 }));
            }
        }
        out
    }

    /// Residual of the homomorphism property on one pair:
    /// ‖map(a·b) − map(a)map(b)‖_∞.
    pub fn product_residual(&self, a: &Multivector, b: &Multivector) -> f64 {
        let direct = self.map(&a.geometric(b));
        let via_matrices = self.map(a).matmul(&self.map(b));
        direct.max_abs_diff(&via_matrices)
    }
}
