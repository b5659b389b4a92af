//! Conformal geometric algebra: Cl(2,4) built over the spacetime basis.
//!
//! Two extra directions e (e² = 1) and ē (ē² = −1) extend Cl(1,3); the
//! null combinations n = e + ē and n̄ = e − ē represent the point at
//! infinity and (up to scale) the origin. Axes are ordered
//! (γ₀,γ₁,γ₂,γ₃,e,ē), so a spacetime multivector embeds by plain
//! zero-padding of the coefficient vector. Points map to null vectors
//! homogeneously: X and αX name the same point.

use crate::algebra::{Multivector, Rotor, Signature, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::sta;

/// The Cl(2,4) signature with axis order (γ₀,γ₁,γ₂,γ₃,e,ē).
pub fn signature() -> Signature {
    Signature::from_signs(&[1, -1, -1, -1, 1, -1]).expect("Cl(2,4)")
}

/// Spacetime basis vector γμ embedded in the conformal algebra.
pub fn gamma(mu: usize) -> Multivector {
    Multivector::basis_vector(signature(), mu).expect("gamma index")
}

/// The added direction with e² = +1.
pub fn e() -> Multivector {
    Multivector::basis_vector(signature(), 4).expect("axis 4")
}

/// The added direction with ē² = −1.
pub fn e_bar() -> Multivector {
    Multivector::basis_vector(signature(), 5).expect("axis 5")
}

/// Null vector n = e + ē, the Euclidean point at infinity.
pub fn n() -> Multivector {
    &e() + &e_bar()
}

/// Null vector n̄ = e − ē; −n̄/2 represents the origin.
pub fn n_bar() -> Multivector {
    &e() - &e_bar()
}

/// The dilation plane N = eē.
pub fn dilation_plane() -> Multivector {
    e().geometric(&e_bar())
}

/// Pseudoscalar I₆ = γ₀γ₁γ₂γ₃eē; I₆² = −1.
pub fn pseudoscalar() -> Multivector {
    Multivector::basis_blade(signature(), 0b111111)
}

/// Zero-pad a Cl(1,3) multivector into Cl(2,4). The shared axis order
/// makes this a coefficient copy.
pub fn embed_sta(mv: &Multivector) -> Multivector {
    assert_eq!(mv.sig(), sta::signature(), "expected a Cl(1,3) element");
    let mut out = Multivector::zero(signature());
    for (mask, &c) in mv.coeffs().iter().enumerate() {
        out.set_coeff(mask, c);
    }
    out
}

/// Embed a spacetime rotor into the conformal rotor group.
pub fn embed_rotor(rotor: &Rotor) -> Rotor {
    Rotor::new(embed_sta(rotor.value()), DEFAULT_TOL).expect("embedded rotor")
}

/// Restrict a Cl(2,4) multivector to its Cl(1,3) block (blades without
/// e or ē factors).
pub fn restrict_sta(mv: &Multivector) -> Multivector {
    assert_eq!(mv.sig(), signature(), "expected a Cl(2,4) element");
    let mut out = Multivector::zero(sta::signature());
    for mask in 0..16 {
        out.set_coeff(mask, mv.coeff(mask));
    }
    out
}

/// A spacetime point represented as a null grade-1 conformal vector,
/// together with the length scale λ that made the embedding
/// dimensionless. Homogeneous: X and αX (α ≠ 0) are the same point.
#[derive(Debug, Clone)]
pub struct ConformalPoint {
    x: Multivector,
    scale: f64,
}

impl ConformalPoint {
    /// Wrap a grade-1 null vector.
    pub fn new(x: Multivector, scale: f64) -> Result<Self> {
        if scale <= 0.0 {
            return Err(Error::NonPositiveScale(scale));
        }
        let norm = x.max_abs();
        if !x.is_grade(1, DEFAULT_TOL * (1.0 + norm)) {
            return Err(Error::NotGrade(1));
        }
        let xsq = x.inner(&x).scalar_part();
        if xsq.abs() > DEFAULT_TOL * (1.0 + norm * norm) {
            return Err(Error::NotGrade(1));
        }
        Ok(ConformalPoint { x, scale })
    }

    pub fn value(&self) -> &Multivector {
        &self.x
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Apply a conformal rotor, staying on the null cone.
    pub fn transformed(&self, rotor: &Rotor) -> ConformalPoint {
        ConformalPoint {
            x: rotor.apply(&self.x),
            scale: self.scale,
        }
    }
}

/// Euclidean embedding X = F_E(x/λ) = (x²n + 2λx − λ²n̄)/(2λ²).
/// Normalised so that X·n = −1.
pub fn embed_euclidean(x: &Multivector, lambda: f64) -> Result<ConformalPoint> {
    if lambda <= 0.0 {
        return Err(Error::NonPositiveScale(lambda));
    }
    let x6 = embed_sta(x);
    let xsq = x6.inner(&x6).scalar_part();
    let num = &(&(&n() * xsq) + &(&x6 * (2.0 * lambda))) - &(&n_bar() * (lambda * lambda));
    ConformalPoint::new(num.scaled(1.0 / (2.0 * lambda * lambda)), lambda)
}

/// Hyperbolic embedding X = F_H(x/λ) = (x²n + 2λx − λ²n̄)/(λ² − x²).
/// The denominator vanishing means the point sits on the representation
/// boundary and is translated to infinity.
pub fn embed_hyperbolic(x: &Multivector, lambda: f64) -> Result<ConformalPoint> {
    if lambda <= 0.0 {
        return Err(Error::NonPositiveScale(lambda));
    }
    let x6 = embed_sta(x);
    let xsq = x6.inner(&x6).scalar_part();
    let denom = lambda * lambda - xsq;
    if denom.abs() <= DEFAULT_TOL * (1.0 + lambda * lambda + xsq.abs()) {
        return Err(Error::BoundaryOfDisc);
    }
    let num = &(&(&n() * xsq) + &(&x6 * (2.0 * lambda))) - &(&n_bar() * (lambda * lambda));
    ConformalPoint::new(num.scaled(1.0 / denom), lambda)
}

/// Invert the Euclidean embedding: rescale X to X·n = −1, then the
/// Minkowski part times λ is the position. Fails for the point at
/// infinity (X·n = 0).
pub fn extract_euclidean(point: &ConformalPoint) -> Result<Multivector> {
    let x = point.value();
    let xn = x.inner(&n()).scalar_part();
    if xn.abs() <= DEFAULT_TOL * (1.0 + x.max_abs()) {
        return Err(Error::PointAtInfinity);
    }
    let rescaled = x.scaled(-1.0 / xn);
    let mut out = Multivector::zero(sta::signature());
    for mu in 0..4 {
        out.set_coeff(1 << mu, rescaled.coeff(1 << mu) * point.scale());
    }
    Ok(out)
}

/// Translation rotor T_a = e^{na/2λ} = 1 + na/2λ. Leaves n invariant
/// and carries F_E(x/λ) to F_E((x+a)/λ).
pub fn translation_rotor(a: &Multivector, lambda: f64) -> Rotor {
    let a6 = embed_sta(a);
    let na = n().geometric(&a6).scaled(1.0 / (2.0 * lambda));
    Rotor::from_unchecked(&Multivector::scalar(signature(), 1.0) + &na)
}

/// Hyperbolic translation rotor T_x = (λ + ēx)/√(λ² − x²); requires the
/// point inside the representation boundary.
pub fn hyperbolic_translation_rotor(x: &Multivector, lambda: f64) -> Result<Rotor> {
    let x6 = embed_sta(x);
    let xsq = x6.inner(&x6).scalar_part();
    let denom = lambda * lambda - xsq;
    if denom <= DEFAULT_TOL * (1.0 + lambda * lambda + xsq.abs()) {
        return Err(Error::BoundaryOfDisc);
    }
    let value = (&Multivector::scalar(signature(), lambda) + &e_bar().geometric(&x6))
        .scaled(1.0 / denom.sqrt());
    Ok(Rotor::from_unchecked(value))
}

/// Rotation about the point a: R_a = T_a R T̃_a, with R a spacetime rotor.
pub fn rotation_about(a: &Multivector, rotor: &Rotor, lambda: f64) -> Rotor {
    let r6 = Rotor::from_unchecked(embed_sta(rotor.value()));
    let t = translation_rotor(a, lambda);
    t.compose(&r6).compose(&t.reversed())
}

/// Dilation rotor D_α = e^{αN/2} = cosh(α/2) + sinh(α/2)·eē.
pub fn dilation_rotor(alpha: f64) -> Rotor {
    let value = &Multivector::scalar(signature(), (alpha / 2.0).cosh())
        + &(&dilation_plane() * (alpha / 2.0).sinh());
    Rotor::from_unchecked(value)
}

/// Dilation about the point a: D'_α = T_a D_α T̃_a = e^{−αA∧n/2} with
/// A = F_E(a/λ).
pub fn dilation_about(a: &Multivector, alpha: f64, lambda: f64) -> Result<Rotor> {
    let t = translation_rotor(a, lambda);
    let conjugated = t.compose(&dilation_rotor(alpha)).compose(&t.reversed());
    // cross-check against the closed form before handing it out
    let big_a = embed_euclidean(a, lambda)?;
    let plane = big_a.value().outer(&n());
    let closed = Rotor::exp_blade(&plane, alpha)?;
    debug_assert!(conjugated.value().approx_eq(closed.value(), 1e-9));
    Ok(conjugated)
}

/// Inversion −eXe: swaps origin and infinity; homogeneously maps the
/// point x to λ²x/x².
pub fn invert_point(point: &ConformalPoint) -> ConformalPoint {
    let flipped = -&e().geometric(point.value()).geometric(&e());
    ConformalPoint {
        x: flipped,
        scale: point.scale(),
    }
}

/// Special conformal rotor K_a = eT_a e = 1 − n̄a/2λ.
pub fn special_conformal_rotor(a: &Multivector, lambda: f64) -> Rotor {
    let a6 = embed_sta(a);
    let nba = n_bar().geometric(&a6).scaled(-1.0 / (2.0 * lambda));
    Rotor::from_unchecked(&Multivector::scalar(signature(), 1.0) + &nba)
}

/// The point map of the special conformal transformation,
/// x ↦ λ²(λ²x + x²a)/(λ⁴ + 2λ²a·x + a²x²), singular where the
/// denominator vanishes.
pub fn special_conformal_apply(
    x: &Multivector,
    a: &Multivector,
    lambda: f64,
) -> Result<Multivector> {
    let l2 = lambda * lambda;
    let xsq = x.inner(x).scalar_part();
    let asq = a.inner(a).scalar_part();
    let ax = a.inner(x).scalar_part();
    let denom = l2 * l2 + 2.0 * l2 * ax + asq * xsq;
    if denom.abs() <= DEFAULT_TOL * (1.0 + l2 * l2 + asq * xsq.abs()) {
        return Err(Error::SingularPoint);
    }
    Ok((&(x * l2) + &(a * xsq)).scaled(l2 / denom))
}

/// The conformal prefactor in front of the transformed point,
/// 1 + 2a·x/λ² + a²x²/λ⁴.
pub fn special_conformal_prefactor(x: &Multivector, a: &Multivector, lambda: f64) -> f64 {
    let l2 = lambda * lambda;
    1.0 + 2.0 * a.inner(x).scalar_part() / l2
        + a.inner(a).scalar_part() * x.inner(x).scalar_part() / (l2 * l2)
}

/// A line in the conformal space, L = Keē + r∧K∧n: direction K through
/// the point r.
#[derive(Debug, Clone)]
pub struct ConformalLine {
    l: Multivector,
}

impl ConformalLine {
    pub fn new(l: Multivector) -> Result<Self> {
        if !l.is_grade(3, DEFAULT_TOL * (1.0 + l.max_abs())) {
            return Err(Error::NotGrade(3));
        }
        Ok(ConformalLine { l })
    }

    pub fn value(&self) -> &Multivector {
        &self.l
    }

    /// The direction: the Minkowski grade-1 part of L·(eē).
    pub fn direction(&self) -> Multivector {
        let product = self.l.geometric(&dilation_plane());
        let mut out = Multivector::zero(sta::signature());
        for mu in 0..4 {
            out.set_coeff(1 << mu, product.coeff(1 << mu));
        }
        out
    }

    pub fn transformed(&self, rotor: &Rotor) -> ConformalLine {
        ConformalLine {
            l: rotor.apply(&self.l),
        }
    }

    pub fn scaled(&self, factor: f64) -> ConformalLine {
        ConformalLine {
            l: self.l.scaled(factor),
        }
    }
}

/// L = Keē + r∧K∧n through the spacetime point r with direction K.
pub fn line_through(r: &Multivector, k: &Multivector, _lambda: f64) -> Result<ConformalLine> {
    if k.is_zero(DEFAULT_TOL) {
        return Err(Error::ZeroDirection);
    }
    let k6 = embed_sta(k);
    let r6 = embed_sta(r);
    let l = &k6.geometric(&dilation_plane()) + &r6.outer(&k6).outer(&n());
    ConformalLine::new(l)
}

/// Project a line into the hyperplane t = τ: L_P = L + PLP with
/// P = (γ₀ + τn)I₆. Degenerates to zero for lines orthogonal to the
/// hyperplane.
pub fn project_line(line: &ConformalLine, tau: f64) -> Result<ConformalLine> {
    let p = (&gamma(0) + &(&n() * tau)).geometric(&pseudoscalar());
    let plp = p.geometric(line.value()).geometric(&p);
    let lp = line.value() + &plp;
    if lp.is_zero(DEFAULT_TOL * (1.0 + line.value().max_abs())) {
        return Err(Error::DegenerateProjection);
    }
    ConformalLine::new(lp)
}

/// Equality of homogeneous representatives: both sides normalised by
/// their largest-magnitude coefficient, compared up to overall sign.
pub fn homogeneous_eq(a: &Multivector, b: &Multivector, tol: f64) -> bool {
    let (na, nb) = (a.max_abs(), b.max_abs());
    if na == 0.0 || nb == 0.0 {
        return na == 0.0 && nb == 0.0;
    }
    let a = a.scaled(1.0 / na);
    let b = b.scaled(1.0 / nb);
    a.approx_eq(&b, tol) || a.approx_eq(&-&b, tol)
}
