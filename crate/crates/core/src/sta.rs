//! Spacetime algebra: Cl(1,3) with its named basis, Pauli and 4-d
//! spinors, component extraction and the quantum-mechanical observables.
//!
//! The basis follows the metric diag(+,−,−,−) with γ₀..γ₃ on axes 0..3.
//! Relative vectors σₖ = γₖγ₀ span the 3-d space seen by the γ₀
//! observer, and the pseudoscalar I = γ₀γ₁γ₂γ₃ squares to −1. Nowhere is
//! a complex number used as a primitive: wherever the conventional
//! formalism multiplies by i, the bivector Iσ₃ acts by right
//! multiplication, and [`ComplexPair`] only repackages (scalar, Iσ₃)
//! coefficient pairs at the component-extraction boundary.

use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{Multivector, Signature, DEFAULT_TOL};
use crate::error::{Error, Result};

/// The Cl(1,3) signature with γ₀ on axis 0.
pub fn signature() -> Signature {
    Signature::new(1, 3).expect("Cl(1,3)")
}

/// Basis vector γμ, μ = 0..3.
pub fn gamma(mu: usize) -> Multivector {
    Multivector::basis_vector(signature(), mu).expect("gamma index")
}

/// Reciprocal vector γ^μ: γ⁰ = γ₀, γᵏ = −γₖ.
pub fn gamma_upper(mu: usize) -> Multivector {
    let g = gamma(mu);
    if mu == 0 {
        g
    } else {
        -&g
    }
}

/// Relative vector σₖ = γₖγ₀, k = 1..3.
pub fn sigma(k: usize) -> Multivector {
    assert!((1..=3).contains(&k), "sigma index 1..=3");
    gamma(k).geometric(&gamma(0))
}

/// Pseudoscalar I = γ₀γ₁γ₂γ₃.
pub fn pseudoscalar() -> Multivector {
    Multivector::basis_blade(signature(), 0b1111)
}

/// Iσₖ, the bivector standing in for the unit imaginary (k = 3) and its
/// companions.
pub fn i_sigma(k: usize) -> Multivector {
    pseudoscalar().geometric(&sigma(k))
}

/// Iγ₃, the factor appearing in the twistor position term.
pub fn i_gamma3() -> Multivector {
    pseudoscalar().geometric(&gamma(3))
}

/// Chiral idempotent ½(1 + σ₃).
pub fn proj_plus() -> Multivector {
    (&Multivector::scalar(signature(), 1.0) + &sigma(3)).scaled(0.5)
}

/// Chiral idempotent ½(1 − σ₃).
pub fn proj_minus() -> Multivector {
    (&Multivector::scalar(signature(), 1.0) - &sigma(3)).scaled(0.5)
}

/// Minkowski vector t·γ₀ + x·γ₁ + y·γ₂ + z·γ₃.
pub fn minkowski(components: [f64; 4]) -> Multivector {
    let mut v = Multivector::zero(signature());
    for (mu, &c) in components.iter().enumerate() {
        v.set_coeff(1 << mu, c);
    }
    v
}

/// Contravariant components (v·γ^μ) of a grade-1 element.
pub fn vector_components(v: &Multivector) -> [f64; 4] {
    [
        v.inner(&gamma_upper(0)).scalar_part(),
        v.inner(&gamma_upper(1)).scalar_part(),
        v.inner(&gamma_upper(2)).scalar_part(),
        v.inner(&gamma_upper(3)).scalar_part(),
    ]
}

/// A complex component in the (scalar, Iσ₃) sense: re + im·Iσ₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub re: f64,
    pub im: f64,
}

impl ComplexPair {
    pub const ZERO: ComplexPair = ComplexPair { re: 0.0, im: 0.0 };
    pub const ONE: ComplexPair = ComplexPair { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        ComplexPair { re, im }
    }

    /// The starred projection ⟨·⟩ₛ* flips the Iσ₃ part.
    pub fn conj(self) -> Self {
        ComplexPair {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
}

impl Add for ComplexPair {
    type Output = ComplexPair;
    fn add(self, o: ComplexPair) -> ComplexPair {
        ComplexPair::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexPair {
    type Output = ComplexPair;
    fn sub(self, o: ComplexPair) -> ComplexPair {
        ComplexPair::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ComplexPair {
    type Output = ComplexPair;
    fn mul(self, o: ComplexPair) -> ComplexPair {
        ComplexPair::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for ComplexPair {
    type Output = ComplexPair;
    fn neg(self) -> ComplexPair {
        ComplexPair::new(-self.re, -self.im)
    }
}

/// ⟨·⟩ₛ: project the scalar and Iσ₃ parts, the pieces that survive the
/// spinor inner product.
pub fn proj_s(mv: &Multivector) -> ComplexPair {
    let re = mv.scalar_part();
    let im = -mv.geometric(&i_sigma(3)).scalar_part();
    ComplexPair::new(re, im)
}

/// A non-relativistic spinor: an element of span{1, Iσ₁, Iσ₂, Iσ₃}.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSpinor {
    value: Multivector,
}

impl PauliSpinor {
    /// Validate that `value` lies in the Pauli span.
    pub fn new(value: Multivector) -> Result<Self> {
        let span = PauliSpinor::project(&value);
        if !(&value - &span.value).is_zero(DEFAULT_TOL * (1.0 + value.max_abs())) {
            return Err(Error::NotPauli);
        }
        Ok(span)
    }

    /// Orthogonal projection of an arbitrary multivector onto the Pauli span.
    fn project(mv: &Multivector) -> Self {
        let mut value = Multivector::scalar(signature(), mv.scalar_part());
        for k in 1..=3 {
            let basis = i_sigma(k);
            // (Iσₖ)² = −1, so the coefficient is −⟨mv·Iσₖ⟩.
            let coeff = -mv.geometric(&basis).scalar_part();
            value = &value + &(&basis * coeff);
        }
        PauliSpinor { value }
    }

    /// Twice the Pauli projection: recovers ω from ω·½(1±σ₃) ideals.
    pub(crate) fn from_ideal(mv: &Multivector) -> Self {
        let mut p = PauliSpinor::project(mv);
        p.value = p.value.scaled(2.0);
        p
    }

    /// Build from scalar coefficients a⁰ + aᵏIσₖ.
    pub fn from_coefficients(a: [f64; 4]) -> Self {
        let mut value = Multivector::scalar(signature(), a[0]);
        for (k, &coeff) in a.iter().enumerate().skip(1) {
            value = &value + &(&i_sigma(k) * coeff);
        }
        PauliSpinor { value }
    }

    /// Coefficients (a⁰, a¹, a², a³) in the {1, Iσₖ} basis.
    pub fn coefficients(&self) -> [f64; 4] {
        let mut a = [self.value.scalar_part(), 0.0, 0.0, 0.0];
        for (k, slot) in a.iter_mut().enumerate().skip(1) {
            *slot = -self.value.geometric(&i_sigma(k)).scalar_part();
        }
        a
    }

    /// Construct from the conventional column components (ζ⁰, ζ¹):
    /// a⁰ = Re ζ⁰, a³ = Im ζ⁰, a² = −Re ζ¹, a¹ = Im ζ¹.
    pub fn from_components(c0: ComplexPair, c1: ComplexPair) -> Self {
        PauliSpinor::from_coefficients([c0.re, c1.im, -c1.re, c0.im])
    }

    /// Column components: ζ⁰ = ⟨ζ⟩ₛ, ζ¹ = ⟨Iσ₂ζ⟩ₛ.
    pub fn components(&self) -> (ComplexPair, ComplexPair) {
        let c0 = proj_s(&self.value);
        let c1 = proj_s(&i_sigma(2).geometric(&self.value));
        (c0, c1)
    }

    /// The spin-up basis state.
    pub fn up() -> Self {
        PauliSpinor {
            value: Multivector::scalar(signature(), 1.0),
        }
    }

    /// The spin-down basis state −Iσ₂.
    pub fn down() -> Self {
        PauliSpinor {
            value: -&i_sigma(2),
        }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn scaled(&self, factor: f64) -> Self {
        PauliSpinor {
            value: self.value.scaled(factor),
        }
    }

    /// Right multiplication by e^{Iσ₃φ}, the complex phase on components.
    pub fn phased(&self, phi: f64) -> Self {
        let rot = &(&Multivector::scalar(signature(), 1.0) * phi.cos())
            + &(&i_sigma(3) * phi.sin());
        PauliSpinor {
            value: self.value.geometric(&rot),
        }
    }

    /// Antisymmetric 2-spinor inner product {ω,π} = ⟨Iσ₂ ω̃ π⟩ₛ.
    pub fn inner(&self, other: &PauliSpinor) -> ComplexPair {
        proj_s(
            &i_sigma(2)
                .geometric(&self.value.reverse())
                .geometric(&other.value),
        )
    }

    /// Flagpole K = ½ ω(γ₀+γ₃)ω̃, the future-null vector carrying the
    /// 2-spinor's direction.
    pub fn flagpole(&self) -> Multivector {
        let axis = &gamma(0) + &gamma(3);
        self.value
            .geometric(&axis)
            .geometric(&self.value.reverse())
            .scaled(0.5)
    }
}

/// A 4-d spinor: an even element of Cl(1,3), algebraically a Dirac
/// spinor (8 real degrees of freedom) but conformally transforming.
#[derive(Debug, Clone, PartialEq)]
pub struct FourSpinor {
    value: Multivector,
}

impl FourSpinor {
    /// Validate evenness and wrap.
    pub fn new(value: Multivector) -> Result<Self> {
        if !value.is_even(DEFAULT_TOL * (1.0 + value.max_abs())) {
            return Err(Error::NotEven);
        }
        Ok(FourSpinor { value })
    }

    pub(crate) fn from_even_unchecked(value: Multivector) -> Self {
        debug_assert!(value.is_even(1e-9 * (1.0 + value.max_abs())));
        FourSpinor { value }
    }

    pub fn zero() -> Self {
        FourSpinor {
            value: Multivector::zero(signature()),
        }
    }

    pub fn one() -> Self {
        FourSpinor {
            value: Multivector::scalar(signature(), 1.0),
        }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn scaled(&self, factor: f64) -> Self {
        FourSpinor {
            value: self.value.scaled(factor),
        }
    }

    pub fn add(&self, other: &FourSpinor) -> Self {
        FourSpinor {
            value: &self.value + &other.value,
        }
    }

    pub fn approx_eq(&self, other: &FourSpinor, tol: f64) -> bool {
        self.value.approx_eq(&other.value, tol)
    }

    /// Left-handed Weyl embedding ω½(1+σ₃).
    pub fn weyl_left(omega: &PauliSpinor) -> Self {
        FourSpinor {
            value: omega.value().geometric(&proj_plus()),
        }
    }

    /// Right-handed Weyl embedding πIσ₂½(1−σ₃), complex conjugation
    /// being the change of ideal.
    pub fn weyl_right(pi: &PauliSpinor) -> Self {
        FourSpinor {
            value: pi
                .value()
                .geometric(&i_sigma(2))
                .geometric(&proj_minus()),
        }
    }

    /// Full Weyl representation ω½(1+σ₃) + πIσ₂½(1−σ₃).
    pub fn from_weyl(omega: &PauliSpinor, pi: &PauliSpinor) -> Self {
        FourSpinor::weyl_left(omega).add(&FourSpinor::weyl_right(pi))
    }

    /// Recover the Pauli spinors (ω, π) of the Weyl decomposition.
    pub fn weyl_parts(&self) -> (PauliSpinor, PauliSpinor) {
        let omega = PauliSpinor::from_ideal(&self.value.geometric(&proj_plus()));
        // ψ½(1−σ₃)(−Iσ₂) = π½(1+σ₃), so the same projection trick applies.
        let pi_ideal = self
            .value
            .geometric(&proj_minus())
            .geometric(&-&i_sigma(2));
        let pi = PauliSpinor::from_ideal(&pi_ideal);
        (omega, pi)
    }

    /// Column components (ψ⁰, ψ¹, ψ², ψ³) of the Weyl representation:
    /// ψ⁰ = 2⟨ψ½(1+σ₃)⟩ₛ, ψ¹ = 2⟨Iσ₂ψ½(1+σ₃)⟩ₛ,
    /// ψ² = −2⟨ψ½(1−σ₃)⟩ₛ, ψ³ = −2⟨Iσ₂ψ½(1−σ₃)⟩ₛ.
    pub fn components(&self) -> [ComplexPair; 4] {
        let plus = self.value.geometric(&proj_plus());
        let minus = self.value.geometric(&proj_minus());
        let two = |c: ComplexPair| ComplexPair::new(2.0 * c.re, 2.0 * c.im);
        [
            two(proj_s(&plus)),
            two(proj_s(&i_sigma(2).geometric(&plus))),
            -two(proj_s(&minus)),
            -two(proj_s(&i_sigma(2).geometric(&minus))),
        ]
    }

    /// Inverse of [`FourSpinor::components`].
    pub fn from_components(c: [ComplexPair; 4]) -> Self {
        let omega = PauliSpinor::from_components(c[0], c[1]);
        // ψ² = −π̄^{1'}, ψ³ = π̄^{0'} relate the projection part to π.
        let pi = PauliSpinor::from_components(c[3].conj(), -c[2].conj());
        FourSpinor::from_weyl(&omega, &pi)
    }

    /// Spinor inner product (ψ,φ)ₛ = ⟨ψ̃φ⟩ₛ, sesquilinear in the Iσ₃
    /// sense. The induced real quadratic form on the 8 spinor components
    /// has signature (4,4).
    pub fn inner_s(&self, other: &FourSpinor) -> ComplexPair {
        proj_s(&self.value.reverse().geometric(&other.value))
    }

    /// Dirac-matrix action γ̂μ|ψ⟩ ↦ γμψγ₀.
    pub fn gamma_action(&self, mu: usize) -> Result<FourSpinor> {
        if mu > 3 {
            return Err(Error::IndexOutOfRange(mu, 4));
        }
        Ok(FourSpinor {
            value: gamma(mu).geometric(&self.value).geometric(&gamma(0)),
        })
    }

    /// i|ψ⟩ ↦ ψIσ₃.
    pub fn i_action(&self) -> FourSpinor {
        FourSpinor {
            value: self.value.geometric(&i_sigma(3)),
        }
    }

    /// γ̂₅|ψ⟩ ↦ ψσ₃.
    pub fn gamma5_action(&self) -> FourSpinor {
        FourSpinor {
            value: self.value.geometric(&sigma(3)),
        }
    }

    /// Right multiplication by the phase e^{Iσ₃θ}.
    pub fn phased(&self, theta: f64) -> FourSpinor {
        let rot = &(&Multivector::scalar(signature(), 1.0) * theta.cos())
            + &(&i_sigma(3) * theta.sin());
        FourSpinor {
            value: self.value.geometric(&rot),
        }
    }

    /// Dirac current J = ψγ₀ψ̃: grade 1 and future-pointing.
    pub fn dirac_current(&self) -> Multivector {
        self.value
            .geometric(&gamma(0))
            .geometric(&self.value.reverse())
    }

    /// Spin bivector S = ½ψIσ₃ψ̃: exactly grade 2.
    pub fn spin_bivector(&self) -> Multivector {
        self.value
            .geometric(&i_sigma(3))
            .geometric(&self.value.reverse())
            .scaled(0.5)
    }
}

/// Antisymmetric tensor components S^{μν} = −S·(γ^μ∧γ^ν) of a bivector.
pub fn bivector_components(s: &Multivector) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for (mu, row) in out.iter_mut().enumerate() {
        for (nu, entry) in row.iter_mut().enumerate() {
            let plane = gamma_upper(mu).outer(&gamma_upper(nu));
            *entry = -s.inner(&plane).scalar_part();
        }
    }
    out
}

/// The 2×2 Hermitian-matrix components of a grade-1 vector,
/// [[K⁰+K³, K¹−iK²], [K¹+iK², K⁰−K³]]. The determinant equals v·v.
pub fn hermitian_components(v: &Multivector) -> Result<[[ComplexPair; 2]; 2]> {
    if !v.is_grade(1, DEFAULT_TOL * (1.0 + v.max_abs())) {
        return Err(Error::NotGrade(1));
    }
    let k = vector_components(v);
    Ok([
        [
            ComplexPair::new(k[0] + k[3], 0.0),
            ComplexPair::new(k[1], -k[2]),
        ],
        [
            ComplexPair::new(k[1], k[2]),
            ComplexPair::new(k[0] - k[3], 0.0),
        ],
    ])
}
