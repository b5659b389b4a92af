//! Geometry of twistors: null rays, the Robinson congruence and its
//! circle families, d-line verification, and the ray as a 6-d observable.
//!
//! A null twistor is drawn in real spacetime as a null ray: the locus
//! where its primary part vanishes. A non-null twistor has no real
//! locus; its picture is the dual one, the field of flagpole directions
//! of the primary part. Projected into a spatial hyperplane that field
//! is tangent to a family of circles that twist around nested tori —
//! right-handed for positive helicity — and hyperbolic translation of
//! any circle to the origin straightens it into a line through the
//! origin, exhibiting the circles as geodesics (d-lines) of a hyperbolic
//! geometry whose length scale is the helicity itself.

use crate::algebra::{Multivector, Signature, DEFAULT_TOL};
use crate::conformal::{
    self, embed_hyperbolic, embed_sta, hyperbolic_translation_rotor, line_through, project_line,
    translation_rotor, ConformalLine,
};
use crate::error::{Error, Result};
use crate::sta::{self, ComplexPair, FourSpinor, PauliSpinor};
use crate::spinor_rep::w12;
use crate::twistor::Twistor;

/// Helicity magnitude below which a twistor counts as null.
pub const NULL_HELICITY_TOL: f64 = 1e-8;

/// Relative tolerance for the circularity pre-verification.
pub const CIRCLE_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------
// small 3-d helpers (relative space of the γ₀ observer)

pub(crate) fn v3_add(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn v3_sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn v3_scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn v3_dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn v3_cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn v3_norm(a: [f64; 3]) -> f64 {
    v3_dot(a, a).sqrt()
}

/// The Euclidean Cl(3,0) that hosts the relative-vector circle geometry.
pub fn relative_signature() -> Signature {
    Signature::new(3, 0).expect("Cl(3,0)")
}

fn rel_vector(v: [f64; 3]) -> Multivector {
    let mut mv = Multivector::zero(relative_signature());
    for (k, &c) in v.iter().enumerate() {
        mv.set_coeff(1 << k, c);
    }
    mv
}

fn rel_components(mv: &Multivector) -> [f64; 3] {
    [mv.coeff(0b001), mv.coeff(0b010), mv.coeff(0b100)]
}

/// Spatial Minkowski vector xγ₁ + yγ₂ + zγ₃ at time t.
fn spacetime_point(t: f64, x: [f64; 3]) -> Multivector {
    sta::minkowski([t, x[0], x[1], x[2]])
}

// ---------------------------------------------------------------------
// null rays

/// The real locus of a null twistor: the ray r(h) = q + h·p, with q the
/// intersection of the line with the null cone at the origin.
#[derive(Debug, Clone)]
pub struct NullRay {
    q: Multivector,
    p: Multivector,
    beta: f64,
}

impl NullRay {
    pub fn base_point(&self) -> &Multivector {
        &self.q
    }

    pub fn direction(&self) -> &Multivector {
        &self.p
    }

    /// The coefficient β with q = K/β; also scales the inverted
    /// observable's base point P = p/β.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn point_at(&self, h: f64) -> Multivector {
        &self.q + &(&self.p * h)
    }
}

/// β = −Iσ₃{ω,π}*, evaluated in the ComplexPair sense (Iσ₃ ↔ i).
/// For a null twistor the result is real.
pub fn beta_pair(omega: &PauliSpinor, pi: &PauliSpinor) -> ComplexPair {
    let starred = omega.inner(pi).conj();
    ComplexPair::new(0.0, -1.0) * starred
}

/// Diagnostic: β recomputed from the twistor field value at position r
/// instead of the base-point data. β is a base-point quantity, not a
/// ray invariant — the primary part vanishes on the ray, so this
/// collapses to zero there.
pub fn beta_at(twistor: &Twistor, r: &Multivector) -> ComplexPair {
    let field_value = Twistor::new(twistor.psi().clone(), r.clone())
        .expect("re-basing a twistor")
        .z()
        .clone();
    let (omega, pi) = field_value.weyl_parts();
    beta_pair(&omega, &pi)
}

/// Construct the null ray of a null twistor. Rejects twistors whose
/// helicity exceeds [`NULL_HELICITY_TOL`]; a vanishing β means the
/// projection part is degenerate and the locus is the light cone at
/// infinity.
pub fn null_ray(twistor: &Twistor) -> Result<NullRay> {
    let s = twistor.helicity();
    let scale = 1.0 + twistor.psi().value().max_abs().powi(2);
    if s.abs() > NULL_HELICITY_TOL * scale {
        return Err(Error::NonNullTwistor(s));
    }
    let (omega, pi) = twistor.psi().weyl_parts();
    let beta = beta_pair(&omega, &pi);
    if beta.abs() <= DEFAULT_TOL * scale {
        return Err(Error::LocusAtInfinity);
    }
    let q = omega.flagpole().scaled(1.0 / beta.re);
    let p = twistor.momentum();
    Ok(NullRay { q, p, beta: beta.re })
}

/// Residual of the primary part of the twistor field at position r;
/// zero exactly on the ray of a null twistor.
pub fn primary_residual(twistor: &Twistor, r: &Multivector) -> f64 {
    Twistor::new(twistor.psi().clone(), r.clone())
        .expect("re-basing a twistor")
        .primary_part()
        .value()
        .max_abs()
}

/// The product p·(πσ₂½(1−σ₃)ω̃), which vanishes identically: it is the
/// algebraic reason the whole ray, not just q, solves the locus equation.
pub fn ray_annihilation_residual(twistor: &Twistor) -> f64 {
    let (omega, pi) = twistor.psi().weyl_parts();
    let p = twistor.momentum();
    let factor = pi
        .value()
        .geometric(&sta::sigma(2))
        .geometric(&sta::proj_minus())
        .geometric(&omega.value().reverse());
    p.geometric(&factor).max_abs()
}

// ---------------------------------------------------------------------
// the worked example twistor

/// The reference twistor with helicity exactly s:
/// ψ = −Iσ₂·s·½(1+σ₃) + Iσ₂·½(1−σ₃), translated to r.
pub fn example_twistor(s: f64, r: &Multivector) -> Twistor {
    let omega = PauliSpinor::from_coefficients([0.0, 0.0, -s, 0.0]);
    let pi = PauliSpinor::up();
    let psi = FourSpinor::from_weyl(&omega, &pi);
    Twistor::new(psi, r.clone()).expect("example twistor")
}

// ---------------------------------------------------------------------
// the projected tangent field

/// The unit tangent of the Robinson congruence at the spatial point x of
/// the hyperplane t = τ, for the reference twistor of helicity s.
///
/// The flagpole K of the primary part is turned into the conformal line
/// L = Keē + r∧K∧n, reflected into the hyperplane (L_P = L + PLP with
/// P = (γ₀+τn)I₆), translated to the origin with R = 1 − ½nr, and read
/// off as the Minkowski vector part of (R L_P R̃)eē.
pub fn tangent_field(s: f64, tau: f64, x: [f64; 3]) -> Result<[f64; 3]> {
    let r = spacetime_point(tau, x);
    let twistor = example_twistor(s, &r);
    let flag = twistor.primary_part().dirac_current();
    if flag.is_zero(DEFAULT_TOL) {
        return Err(Error::ZeroDirection);
    }
    let line = line_through(&r, &flag, 1.0)?;
    let projected = project_line(&line, tau)?;
    let to_origin = translation_rotor(&-&r, 1.0);
    let at_origin = projected.transformed(&to_origin);
    let dir = at_origin.direction();
    let time_part = dir.coeff(0b0001);
    let spatial = [dir.coeff(0b0010), dir.coeff(0b0100), dir.coeff(0b1000)];
    let norm = v3_norm(spatial);
    if norm <= DEFAULT_TOL {
        return Err(Error::DegenerateProjection);
    }
    debug_assert!(
        time_part.abs() <= 1e-9 * (1.0 + norm),
        "projected direction kept a γ₀ component: {time_part}"
    );
    Ok(v3_scale(spatial, 1.0 / norm))
}

/// Acceleration of the congruence flow at x: the directional derivative
/// of the unit tangent along itself, by central differences.
pub fn flow_acceleration(s: f64, tau: f64, x: [f64; 3]) -> Result<[f64; 3]> {
    let v = tangent_field(s, tau, x)?;
    let h = 1e-5;
    let fwd = tangent_field(s, tau, v3_add(x, v3_scale(v, h)))?;
    let bwd = tangent_field(s, tau, v3_sub(x, v3_scale(v, h)))?;
    Ok(v3_scale(v3_sub(fwd, bwd), 1.0 / (2.0 * h)))
}

// ---------------------------------------------------------------------
// circles of the congruence

/// One circle of the congruence: centre, radius, oriented plane bivector
/// (B² = −1, in the relative Cl(3,0)), and the seed point it was grown from.
#[derive(Debug, Clone)]
pub struct CongruenceCircle {
    center: [f64; 3],
    radius: f64,
    plane: Multivector,
    seed: [f64; 3],
}

impl CongruenceCircle {
    pub fn center(&self) -> [f64; 3] {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn plane(&self) -> &Multivector {
        &self.plane
    }

    pub fn seed(&self) -> [f64; 3] {
        self.seed
    }

    /// Position at angle θ: c + R(θ)ρR̃(θ) with R = cos(θ/2) + B sin(θ/2).
    pub fn point_at(&self, theta: f64) -> [f64; 3] {
        let rho = rel_vector(v3_sub(self.seed, self.center));
        let rotor = &Multivector::scalar(relative_signature(), (theta / 2.0).cos())
            + &(&self.plane * (theta / 2.0).sin());
        let turned = rotor.sandwich(&rho);
        v3_add(self.center, rel_components(&turned))
    }

    /// `count` points at equally spaced angles in [0, 2π).
    pub fn sample(&self, count: usize) -> Vec<[f64; 3]> {
        (0..count)
            .map(|i| self.point_at(2.0 * std::f64::consts::PI * i as f64 / count as f64))
            .collect()
    }
}

/// One RK4 step of the flow r′ = v(r).
fn rk4_step(s: f64, tau: f64, y: [f64; 3], h: f64) -> Result<[f64; 3]> {
    let k1 = tangent_field(s, tau, y)?;
    let k2 = tangent_field(s, tau, v3_add(y, v3_scale(k1, h / 2.0)))?;
    let k3 = tangent_field(s, tau, v3_add(y, v3_scale(k2, h / 2.0)))?;
    let k4 = tangent_field(s, tau, v3_add(y, v3_scale(k3, h)))?;
    let sum = v3_add(v3_add(k1, v3_scale(k2, 2.0)), v3_add(v3_scale(k3, 2.0), k4));
    Ok(v3_add(y, v3_scale(sum, h / 6.0)))
}

/// Integrate a quarter turn of the flow from x0 with adaptive 4th-order
/// stepping (step doubling, local error kept below 1e-9), checking along
/// the way that the motion is planar, circular and of constant
/// acceleration magnitude.
fn verify_circular_motion(s: f64, tau: f64, x0: [f64; 3], accel0: [f64; 3]) -> Result<()> {
    let accel_mag = v3_norm(accel0);
    let v0 = tangent_field(s, tau, x0)?;
    let normal = {
        let n = v3_cross(v0, accel0);
        v3_scale(n, 1.0 / v3_norm(n))
    };
    let quarter = std::f64::consts::FRAC_PI_2 / accel_mag;
    let local_tol = 1e-9;
    let mut y = x0;
    let mut travelled = 0.0;
    let mut h = (0.05 / accel_mag).min(quarter / 4.0);
    let mut steps = 0usize;
    while travelled < quarter {
        if steps > 20_000 {
            return Err(Error::NotCircular("integration stalled".into()));
        }
        steps += 1;
        let h_eff = h.min(quarter - travelled);
        let full = rk4_step(s, tau, y, h_eff)?;
        let half = rk4_step(s, tau, y, h_eff / 2.0)?;
        let two_half = rk4_step(s, tau, half, h_eff / 2.0)?;
        let err = v3_norm(v3_sub(full, two_half)) / 15.0;
        if err <= local_tol {
            // accept, with local extrapolation
            y = v3_add(two_half, v3_scale(v3_sub(two_half, full), 1.0 / 15.0));
            travelled += h_eff;

            let v = tangent_field(s, tau, y)?;
            let a = flow_acceleration(s, tau, y)?;
            let mag = v3_norm(a);
            let rel_var = (mag - accel_mag).abs() / accel_mag;
            if rel_var > CIRCLE_TOL {
                return Err(Error::NotCircular(format!(
                    "|a| varies by {rel_var:.3e} along the flow"
                )));
            }
            let orth = v3_dot(v, a).abs() / mag;
            if orth > CIRCLE_TOL {
                return Err(Error::NotCircular(format!(
                    "v·a residual {orth:.3e} along the flow"
                )));
            }
            let off_plane = v3_dot(v3_sub(y, x0), normal).abs();
            if off_plane > CIRCLE_TOL * (1.0 + v3_norm(v3_sub(y, x0))) {
                return Err(Error::NotCircular(format!(
                    "motion leaves its plane by {off_plane:.3e}"
                )));
            }
        }
        let grow = if err > 0.0 {
            0.9 * (local_tol / err).powf(0.2)
        } else {
            2.0
        };
        h *= grow.clamp(0.2, 2.0);
    }
    Ok(())
}

/// Construct the congruence circle through x0 in the hyperplane t = τ.
///
/// The motion is first verified to be planar, circular and of constant
/// acceleration along an integrated quarter turn; only then is the
/// closed-form centre c = x0 + â/|a| and radius 1/|a| trusted.
pub fn congruence_circle(x0: [f64; 3], s: f64, tau: f64) -> Result<CongruenceCircle> {
    let v = tangent_field(s, tau, x0)?;
    let a = flow_acceleration(s, tau, x0)?;
    let accel_mag = v3_norm(a);
    if accel_mag < 1e-8 {
        return Err(Error::DegenerateAxis);
    }
    verify_circular_motion(s, tau, x0, a)?;

    let a_hat = v3_scale(a, 1.0 / accel_mag);
    let radius = 1.0 / accel_mag;
    let center = v3_add(x0, v3_scale(a_hat, radius));
    let plane = rel_vector(v).outer(&rel_vector(a_hat));
    let psq = plane.geometric(&plane).scalar_part();
    debug_assert!((psq + 1.0).abs() < 1e-6, "plane bivector not unit: B² = {psq}");
    Ok(CongruenceCircle {
        center,
        radius,
        plane,
        seed: x0,
    })
}

/// Orientation scalar ⟨v a B⟩ at the circle seed, with the plane
/// reoriented by the congruence's advance around the torus axis. Its
/// sign is the handedness of the twist and flips with the helicity.
pub fn orientation_scalar(circle: &CongruenceCircle, s: f64, tau: f64) -> Result<f64> {
    let v = tangent_field(s, tau, circle.seed())?;
    let a = flow_acceleration(s, tau, circle.seed())?;
    // The triple ⟨v a B⟩ with B = v∧â is −|a| identically; handedness
    // lives in how the osculating normal v×a winds about the z axis.
    let normal = v3_cross(v, a);
    Ok(normal[2])
}

// ---------------------------------------------------------------------
// scenes: families of circles around the torus

/// Parameters of a congruence scene: helicity, hyperplane time, the
/// torus seed coordinates (x, y, z) = (N_x cos φ, N_y sin φ, N_z), the
/// φ range, and sampling resolution.
#[derive(Debug, Clone)]
pub struct SceneConfig {
    pub helicity: f64,
    pub tau: f64,
    pub n_x: f64,
    pub n_y: f64,
    pub n_z: f64,
    pub phi_start: f64,
    pub family_count: usize,
    pub samples_per_circle: usize,
}

impl Default for SceneConfig {
    fn default() -> Self {
        SceneConfig {
            helicity: 0.5,
            tau: 0.0,
            n_x: 5.0,
            n_y: 5.0,
            n_z: 5.0,
            phi_start: 0.0,
            family_count: 8,
            samples_per_circle: 64,
        }
    }
}

impl SceneConfig {
    pub fn validate(&self) -> Result<()> {
        if self.helicity == 0.0 {
            return Err(Error::InvalidScene(
                "helicity must be nonzero for a congruence scene (null twistors draw a ray)"
                    .into(),
            ));
        }
        if self.samples_per_circle < 3 {
            return Err(Error::InvalidScene("need at least 3 samples per circle".into()));
        }
        if self.family_count == 0 {
            return Err(Error::InvalidScene("family needs at least one circle".into()));
        }
        Ok(())
    }

    /// Seed point for member i of the family.
    pub fn seed(&self, i: usize) -> [f64; 3] {
        let phi = self.phi_start
            + 2.0 * std::f64::consts::PI * i as f64 / self.family_count as f64;
        [self.n_x * phi.cos(), self.n_y * phi.sin(), self.n_z]
    }
}

/// The family of circles seeded around the torus. Every member must pass
/// the circularity verification or the whole scene is rejected.
pub fn torus_family(cfg: &SceneConfig) -> Result<Vec<CongruenceCircle>> {
    cfg.validate()?;
    (0..cfg.family_count)
        .map(|i| congruence_circle(cfg.seed(i), cfg.helicity, cfg.tau))
        .collect()
}

/// Smallest distance between sampled points of two circles.
pub fn min_sampled_distance(a: &CongruenceCircle, b: &CongruenceCircle, samples: usize) -> f64 {
    let pa = a.sample(samples);
    let pb = b.sample(samples);
    let mut best = f64::INFINITY;
    for p in &pa {
        for q in &pb {
            best = best.min(v3_norm(v3_sub(*p, *q)));
        }
    }
    best
}

// ---------------------------------------------------------------------
// d-lines

/// Translate the sampled circle to the origin in the hyperbolic
/// representation whose length scale is |s|: each point u maps through
/// X = F_H(u/λ), X′ = T₋ᵤ₀ X T̃₋ᵤ₀, u′ₖ = λ(X′·γₖ)/(X′·n).
///
/// A circle of the congruence comes back collinear through the origin —
/// the d-line (geodesic) property. The straight image runs through the
/// conformal point at infinity (X′·n = 0), so samples carried within 3%
/// of it are dropped: they would blow up the extraction denominator and
/// magnify the circle's own construction error quadratically. The
/// returned finite segment is what the collinearity check measures.
pub fn to_dlines(circle: &CongruenceCircle, s: f64, samples: usize) -> Result<Vec<[f64; 3]>> {
    if s == 0.0 {
        return Err(Error::InvalidScene("d-lines need a nonzero helicity".into()));
    }
    let lambda = s.abs();
    let points = circle.sample(samples);
    let u0 = spacetime_point(0.0, points[0]);
    let carry = hyperbolic_translation_rotor(&-&u0, lambda)?;
    let n = conformal::n();
    let moved: Vec<Multivector> = points
        .iter()
        .map(|&p| {
            let u = spacetime_point(0.0, p);
            Ok(embed_hyperbolic(&u, lambda)?.transformed(&carry).value().clone())
        })
        .collect::<Result<_>>()?;
    let denominators: Vec<f64> = moved
        .iter()
        .map(|x| x.inner(&n).scalar_part())
        .collect();
    let largest = denominators.iter().fold(0.0f64, |m, d| m.max(d.abs()));
    if largest == 0.0 {
        return Err(Error::PointAtInfinity);
    }
    let kept: Vec<[f64; 3]> = moved
        .iter()
        .zip(&denominators)
        .filter(|(_, xn)| xn.abs() > 0.03 * largest)
        .map(|(x, xn)| {
            let mut out = [0.0; 3];
            for k in 1..=3 {
                let xk = x.inner(&conformal::gamma(k)).scalar_part();
                out[k - 1] = lambda * xk / xn;
            }
            out
        })
        .collect();
    if kept.len() < 3 {
        return Err(Error::PointAtInfinity);
    }
    Ok(kept)
}

/// Fit a direction through the origin and report
/// (direction, max point-to-line deviation / segment length).
pub fn collinearity_through_origin(points: &[[f64; 3]]) -> ([f64; 3], f64) {
    // dominant eigenvector of Σ uuᵀ by power iteration
    let mut m = [[0.0f64; 3]; 3];
    for p in points {
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += p[i] * p[j];
            }
        }
    }
    let mut dir = points
        .iter()
        .cloned()
        .max_by(|a, b| v3_norm(*a).total_cmp(&v3_norm(*b)))
        .unwrap_or([1.0, 0.0, 0.0]);
    if v3_norm(dir) == 0.0 {
        dir = [1.0, 0.0, 0.0];
    }
    dir = v3_scale(dir, 1.0 / v3_norm(dir));
    for _ in 0..50 {
        let next = [
            m[0][0] * dir[0] + m[0][1] * dir[1] + m[0][2] * dir[2],
            m[1][0] * dir[0] + m[1][1] * dir[1] + m[1][2] * dir[2],
            m[2][0] * dir[0] + m[2][1] * dir[1] + m[2][2] * dir[2],
        ];
        let norm = v3_norm(next);
        if norm == 0.0 {
            break;
        }
        dir = v3_scale(next, 1.0 / norm);
    }
    let mut max_dev = 0.0f64;
    let mut t_min = f64::INFINITY;
    let mut t_max = f64::NEG_INFINITY;
    for p in points {
        let t = v3_dot(*p, dir);
        t_min = t_min.min(t);
        t_max = t_max.max(t);
        let dev = v3_norm(v3_sub(*p, v3_scale(dir, t)));
        max_dev = max_dev.max(dev);
    }
    let length = (t_max - t_min).max(f64::MIN_POSITIVE);
    (dir, max_dev / length)
}

// ---------------------------------------------------------------------
// the ray as a 6-d observable

/// The spin observable of the 6-d state Ψ = ψW₁W₂ for the observer at
/// the origin. Its wedge with n is (twice) the conformal line of the
/// ray; its wedge with n̄, reflected in e, is the inverted ray.
#[derive(Debug, Clone)]
pub struct RayObservable {
    spin6: Multivector,
}

/// Build the observable S₆ = ΨIσ₃Ψ̃ from the spinor at the origin.
pub fn ray_observable(psi: &FourSpinor) -> RayObservable {
    let big_psi = embed_sta(psi.value()).geometric(&w12());
    let i_sigma3 = embed_sta(&sta::i_sigma(3));
    RayObservable {
        spin6: big_psi.geometric(&i_sigma3).geometric(&big_psi.reverse()),
    }
}

impl RayObservable {
    pub fn spin6(&self) -> &Multivector {
        &self.spin6
    }

    /// L_ψ = (ΨIσ₃Ψ̃)∧n, the line observable (grade 3).
    pub fn line(&self) -> Multivector {
        self.spin6.outer(&conformal::n())
    }

    /// T_a L_ψ T̃_a: the ray carried to pass through q + a.
    pub fn translated_line(&self, a: &Multivector) -> Multivector {
        translation_rotor(a, 1.0).apply(&self.line())
    }

    /// −e[(ΨIσ₃Ψ̃)∧n̄]e: the inverted ray, in direction K through p/β.
    pub fn inverted_line(&self) -> Multivector {
        let wedge = self.spin6.outer(&conformal::n_bar());
        -&conformal::e().geometric(&wedge).geometric(&conformal::e())
    }
}

/// The closed-form expansion ½(M₀∧n + p·eē) of the line observable.
pub fn observable_decomposition(psi: &FourSpinor) -> Multivector {
    let m0 = embed_sta(&psi.spin_bivector());
    let p = embed_sta(&crate::twistor::momentum_from_spinor(psi));
    (&m0.outer(&conformal::n()) + &p.geometric(&conformal::dilation_plane())).scaled(0.5)
}

/// Whether the grade-3 observable equals c·(Keē + r∧K∧n) for the line
/// through `point` with direction `dir`, for some scale c.
pub fn line_matches(
    observable: &Multivector,
    point: &Multivector,
    dir: &Multivector,
    tol: f64,
) -> Result<bool> {
    let expected = line_through(point, dir, 1.0)?;
    Ok(conformal::homogeneous_eq(observable, expected.value(), tol))
}

/// Direction and a base-point representative of a conformal line
/// observable c·(Keē + r∧K∧n): the direction is the Minkowski vector
/// part of L·(eē); subtracting its eē term leaves c·r∧K∧n, whose
/// contraction with e recovers c·r∧K. The base point is only defined up
/// to multiples of the direction.
pub fn line_data(observable: &Multivector) -> Result<(Multivector, Multivector)> {
    let line = ConformalLine::new(observable.clone())?;
    let dir_scaled = line.direction(); // c·K
    if dir_scaled.is_zero(DEFAULT_TOL * (1.0 + observable.max_abs())) {
        return Err(Error::ZeroDirection);
    }
    let dir6 = embed_sta(&dir_scaled);
    let moment = observable - &dir6.geometric(&conformal::dilation_plane());
    let rk6 = moment.geometric(&conformal::e());
    // keep the Minkowski grade-2 block: c·r∧K
    let mut rk = Multivector::zero(sta::signature());
    for mask in 0..16usize {
        if mask.count_ones() == 2 {
            rk.set_coeff(mask, rk6.coeff(mask));
        }
    }
    // a representative point: r₀ = (r∧K)·K / K² needs K non-null; for the
    // null directions of rays use the γ₀-gauge instead: pick the point on
    // the line with t chosen by the K⁰ component.
    let k = dir_scaled.clone();
    let ksq = k.inner(&k).scalar_part();
    let point = if ksq.abs() > 1e-9 * k.max_abs().powi(2) {
        rk.inner(&k).scaled(1.0 / ksq)
    } else {
        // (r∧K)·γ₀ = r(K·γ₀) − K(r·γ₀); choosing the representative with
        // r·γ₀ = 0 gives r = (r∧K)·γ₀ / (K·γ₀).
        let k0 = k.inner(&sta::gamma(0)).scalar_part();
        if k0.abs() <= 1e-12 * (1.0 + k.max_abs()) {
            return Err(Error::ZeroDirection);
        }
        rk.inner(&sta::gamma(0)).scaled(1.0 / k0)
    };
    Ok((dir_scaled, point))
}
