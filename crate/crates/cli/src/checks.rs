//! The verification suites behind `twistor-ga verify`.
//!
//! Suites map onto the library layers: `algebra` (the product kernel and
//! matrix oracle), `twistor` (spacetime spinors and observables),
//! `conformal` (embeddings and conformal rotors), `spinor-rep` (the 6-d
//! representation), `geometry` (rays, congruence, d-lines, observables).
//! Every check draws from a seeded generator, so a run is a pure
//! function of (suite, seed, tolerance).

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use twistor_ga::algebra::{Multivector, Rotor, Signature};
use twistor_ga::conformal::{
    self, dilation_rotor, embed_euclidean, extract_euclidean, hyperbolic_translation_rotor,
    invert_point, line_through, project_line, special_conformal_apply,
    special_conformal_prefactor, special_conformal_rotor, translation_rotor,
};
use twistor_ga::congruence::{
    collinearity_through_origin, congruence_circle, flow_acceleration, line_matches,
    min_sampled_distance, null_ray, observable_decomposition, orientation_scalar,
    primary_residual, ray_annihilation_residual, ray_observable, tangent_field, to_dlines,
    torus_family, SceneConfig,
};
use twistor_ga::matrix_rep::MatrixRep;
use twistor_ga::spinor_rep::{
    bivector_action, bivector_generator, lift, spin_dilate, spin_invert, spin_rotate,
    spin_special_conformal, spin_translate, BivectorKind,
};
use twistor_ga::sta::{self, ComplexPair, FourSpinor, PauliSpinor};
use twistor_ga::twistor::Twistor;

use crate::manifest::CheckRecord;

/// Tolerances for one verification run.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Componentwise comparison tolerance (default 1e-10, overridable
    /// through TWISTOR_GA_TOL).
    pub default: f64,
    /// Matrix-oracle agreement.
    pub oracle: f64,
    /// Null-ray locus residual.
    pub locus: f64,
    /// Circle kinematics (|a| variation, v·a).
    pub circle: f64,
    /// D-line collinearity (deviation over length).
    pub dline: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            default: twistor_ga::DEFAULT_TOL,
            oracle: 1e-9,
            locus: 1e-9,
            circle: 1e-5,
            dline: 1e-6,
        }
    }
}

pub const SUITES: &[&str] = &["algebra", "twistor", "conformal", "spinor-rep", "geometry"];

struct Recorder {
    suite: &'static str,
    checks: Vec<CheckRecord>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Recorder {
            suite,
            checks: Vec::new(),
        }
    }

    fn residual(&mut self, name: &str, residual: f64, tol: f64) {
        self.checks.push(CheckRecord {
            suite: self.suite.to_string(),
            name: name.to_string(),
            passed: residual <= tol,
            detail: format!("max residual {residual:.3e} (tol {tol:.1e})"),
        });
    }

    fn flag(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckRecord {
            suite: self.suite.to_string(),
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn random_mv(rng: &mut StdRng, sig: Signature) -> Multivector {
    Multivector::from_coeffs(
        sig,
        (0..sig.blade_count()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
    )
    .unwrap()
}

fn random_vector(rng: &mut StdRng) -> Multivector {
    sta::minkowski([
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    ])
}

fn random_spinor(rng: &mut StdRng) -> FourSpinor {
    FourSpinor::from_components([
        ComplexPair::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ComplexPair::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ComplexPair::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ComplexPair::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
    ])
}

fn random_pauli(rng: &mut StdRng) -> PauliSpinor {
    PauliSpinor::from_coefficients([
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    ])
}

pub fn random_null_twistor(rng: &mut StdRng) -> Twistor {
    loop {
        let omega = random_pauli(rng);
        let pi0 = random_pauli(rng);
        let inner = omega.inner(&pi0);
        if inner.abs() < 0.1 {
            continue;
        }
        let phi = std::f64::consts::FRAC_PI_2 - inner.im.atan2(inner.re);
        let psi = FourSpinor::from_weyl(&omega, &pi0.phased(phi));
        let r = random_vector(rng);
        return Twistor::new(psi, r).unwrap();
    }
}

pub fn algebra_suite(seed: u64, tol: &Tolerances) -> Vec<CheckRecord> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rec = Recorder::new("algebra");
    let sigs = [Signature::new(1, 3).unwrap(), conformal::signature()];

    let mut assoc = 0.0f64;
    let mut dist = 0.0f64;
    let mut cyclic = 0.0f64;
    for sig in sigs {
        for _ in 0..200 {
            let a = random_mv(&mut rng, sig);
            let b = random_mv(&mut rng, sig);
            let c = random_mv(&mut rng, sig);
            assoc = assoc.max(
                (&a.geometric(&b).geometric(&c) - &a.geometric(&b.geometric(&c))).max_abs(),
            );
            dist = dist.max(
                (&a.geometric(&(&b + &c)) - &(&a.geometric(&b) + &a.geometric(&c))).max_abs(),
            );
            cyclic = cyclic.max(
                (a.geometric(&b).scalar_part() - b.geometric(&a).scalar_part()).abs(),
            );
        }
    }
    rec.residual("associativity", assoc, tol.default);
    rec.residual("distributivity", dist, tol.default);
    rec.residual("scalar_part_cyclic", cyclic, tol.default);

    let mut metric_ok = true;
    for sig in sigs {
        for i in 0..sig.dim() {
            for j in 0..sig.dim() {
                let ei = Multivector::basis_vector(sig, i).unwrap();
                let ej = Multivector::basis_vector(sig, j).unwrap();
                let d = ei.inner(&ej).scalar_part();
                let expected = if i == j { sig.axis_sign(i) } else { 0.0 };
                metric_ok &= d == expected;
            }
        }
    }
    rec.flag("metric_relations", metric_ok, "eᵢ·eⱼ exact for every pair".into());

    let i4 = sta::pseudoscalar();
    let i6 = conformal::pseudoscalar();
    let ps_ok = i4.geometric(&i4).scalar_part() == -1.0
        && i6.geometric(&i6).scalar_part() == -1.0
        && i4.geometric(&i4).is_grade(0, 0.0)
        && i6.geometric(&i6).is_grade(0, 0.0);
    rec.flag("pseudoscalar_squares", ps_ok, "I² = −1 and I₆² = −1 exact".into());

    let mut rev = 0.0f64;
    for _ in 0..200 {
        let a = random_mv(&mut rng, sigs[0]);
        let b = random_mv(&mut rng, sigs[0]);
        rev = rev.max(
            (&a.geometric(&b).reverse() - &b.reverse().geometric(&a.reverse())).max_abs(),
        );
        rev = rev.max((&a.reverse().reverse() - &a).max_abs());
    }
    rec.residual("reverse_anti_automorphism", rev, tol.default);

    let mut oracle = 0.0f64;
    for sig in sigs {
        let rep = MatrixRep::new(sig);
        for _ in 0..200 {
            let a = random_mv(&mut rng, sig);
            let b = random_mv(&mut rng, sig);
            oracle = oracle.max(rep.product_residual(&a, &b));
        }
    }
    rec.residual("matrix_oracle_products", oracle, tol.oracle);

    let mut grade = 0.0f64;
    for k in 0..100 {
        let plane = sta::gamma(1 + k % 3).geometric(&sta::gamma(0));
        let r = Rotor::exp_blade(&plane, rng.gen_range(-3.0..3.0)).unwrap();
        let x = random_vector(&mut rng);
        let y = r.apply(&x);
        let off: f64 = y
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(m, _)| m.count_ones() != 1)
            .map(|(_, c)| c.abs())
            .fold(0.0, f64::max);
        grade = grade.max(off);
    }
    rec.residual("rotor_sandwich_grade_preservation", grade, tol.default);
    rec.checks
}

pub fn twistor_suite(seed: u64, tol: &Tolerances) -> Vec<CheckRecord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x7715_7072);
    let mut rec = Recorder::new("twistor");

    let mut round = 0.0f64;
    for _ in 0..100 {
        let psi = random_spinor(&mut rng);
        let back = FourSpinor::from_components(psi.components());
        round = round.max((back.value() - psi.value()).max_abs());
        let (omega, pi) = psi.weyl_parts();
        let rebuilt = FourSpinor::from_weyl(&omega, &pi);
        round = round.max((rebuilt.value() - psi.value()).max_abs());
    }
    rec.residual("component_round_trip", round, tol.default);

    let frame = PauliSpinor::up().inner(&PauliSpinor::down());
    rec.flag(
        "spin_frame_normalised",
        frame.approx_eq(ComplexPair::ONE, 0.0),
        format!("{{o,ι}} = ({}, {})", frame.re + 0.0, frame.im + 0.0),
    );

    let mut anti = 0.0f64;
    for _ in 0..100 {
        let a = random_pauli(&mut rng);
        let b = random_pauli(&mut rng);
        let lhs = a.inner(&b);
        let rhs = b.inner(&a);
        anti = anti.max((lhs + rhs).abs());
        let (a0, a1) = a.components();
        let (b0, b1) = b.components();
        let formula = a0 * b1 - a1 * b0;
        anti = anti.max((lhs - formula).abs());
    }
    rec.residual("spinor_inner_antisymmetry", anti, tol.default);

    let mut flag_res = 0.0f64;
    for _ in 0..100 {
        let omega = random_pauli(&mut rng);
        let k = omega.flagpole();
        flag_res = flag_res.max(k.inner(&k).scalar_part().abs());
        flag_res = flag_res.max((-k.inner(&sta::gamma(0)).scalar_part()).max(0.0));
        let j = FourSpinor::weyl_left(&omega).dirac_current();
        flag_res = flag_res.max((&k - &j).max_abs());
    }
    rec.residual("flagpole_null_future_current", flag_res, tol.default);

    let mut herm = 0.0f64;
    for _ in 0..100 {
        let v = random_vector(&mut rng);
        let m = sta::hermitian_components(&v).unwrap();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        herm = herm.max((det.re - v.inner(&v).scalar_part()).abs());
        herm = herm.max(det.im.abs());
        herm = herm.max((m[0][1] - m[1][0].conj()).abs());
    }
    rec.residual("hermitian_determinant", herm, tol.default);

    let mut helicity_err = 0.0f64;
    for &s in &[-10.0, -0.5, 0.5, 10.0] {
        let t = twistor_ga::congruence::example_twistor(s, &random_vector(&mut rng));
        helicity_err = helicity_err.max((t.helicity() - s).abs() / (1.0 + s.abs()));
    }
    rec.residual("example_twistor_helicity", helicity_err, 1e-12);

    let mut obs = 0.0f64;
    for _ in 0..100 {
        let t = Twistor::new(random_spinor(&mut rng), random_vector(&mut rng)).unwrap();
        let p = t.momentum();
        obs = obs.max(p.inner(&p).scalar_part().abs());
        obs = obs.max((&p - &twistor_ga::twistor::momentum_from_spinor(t.psi())).max_abs());
        obs = obs.max((&p - &t.momentum_from_pi()).max_abs());
        obs = obs.max((&t.angular_momentum() - &t.angular_momentum_decomposed()).max_abs());
        obs = obs.max((&t.pauli_lubanski() - &p.scaled(t.helicity())).max_abs());
        obs = obs.max((&t.pauli_lubanski() - &t.pauli_lubanski_dual()).max_abs());
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        let u = t.phased(theta);
        obs = obs.max((u.helicity() - t.helicity()).abs());
        obs = obs.max((&u.momentum() - &p).max_abs());
        obs = obs.max((&u.angular_momentum() - &t.angular_momentum()).max_abs());
    }
    rec.residual("observables", obs, tol.default);

    let mut inv = 0.0f64;
    for _ in 0..50 {
        let psi = random_spinor(&mut rng);
        let phi = random_spinor(&mut rng);
        let base = psi.inner_s(&phi);
        let plane = sta::gamma(1).geometric(&sta::gamma(2));
        let r = Rotor::exp_blade(&plane, rng.gen_range(-3.0..3.0)).unwrap();
        let rp = FourSpinor::new(r.value().geometric(psi.value())).unwrap();
        let rq = FourSpinor::new(r.value().geometric(phi.value())).unwrap();
        inv = inv.max((rp.inner_s(&rq) - base).abs());
        let a = random_vector(&mut rng);
        let tp = spin_translate(&psi, &a);
        let tq = spin_translate(&phi, &a);
        inv = inv.max((tp.inner_s(&tq) - base).abs());
    }
    rec.residual("inner_product_invariance", inv, tol.default);
    rec.checks
}

pub fn conformal_suite(seed: u64, tol: &Tolerances) -> Vec<CheckRecord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0xc0f0_a275);
    let mut rec = Recorder::new("conformal");
    let lambda = 1.0;

    let mut embed_res = 0.0f64;
    for _ in 0..100 {
        let x = random_vector(&mut rng);
        let p = embed_euclidean(&x, lambda).unwrap();
        embed_res = embed_res.max(p.value().inner(p.value()).scalar_part().abs());
        embed_res = embed_res.max((p.value().inner(&conformal::n()).scalar_part() + 1.0).abs());
        embed_res = embed_res.max((&extract_euclidean(&p).unwrap() - &x).max_abs());
    }
    rec.residual("embedding_null_and_invertible", embed_res, tol.default);

    let mut cov_t = 0.0f64;
    let mut cov_d = 0.0f64;
    let mut cov_k = 0.0f64;
    for _ in 0..100 {
        let x = random_vector(&mut rng);
        let a = random_vector(&mut rng);
        let alpha = rng.gen_range(-1.5..1.5);
        let moved = translation_rotor(&a, lambda).apply(embed_euclidean(&x, lambda).unwrap().value());
        cov_t = cov_t.max((&moved - embed_euclidean(&(&x + &a), lambda).unwrap().value()).max_abs());
        let scaled = dilation_rotor(alpha)
            .apply(embed_euclidean(&x, lambda).unwrap().value())
            .scaled((-alpha).exp());
        cov_d = cov_d.max(
            (&scaled - embed_euclidean(&x.scaled((-alpha).exp()), lambda).unwrap().value())
                .max_abs(),
        );
        if let Ok(mapped) = special_conformal_apply(&x, &a, lambda) {
            if mapped.max_abs() < 1e3 {
                let lhs = special_conformal_rotor(&a, lambda)
                    .apply(embed_euclidean(&x, lambda).unwrap().value());
                let prefactor = special_conformal_prefactor(&x, &a, lambda);
                let rhs = embed_euclidean(&mapped, lambda).unwrap().value().scaled(prefactor);
                cov_k = cov_k.max((&lhs - &rhs).max_abs() / (1.0 + rhs.max_abs()));
            }
        }
    }
    rec.residual("translation_covariance", cov_t, tol.default);
    rec.residual("dilation_covariance", cov_d, tol.default);
    rec.residual("special_conformal_covariance", cov_k, tol.default);

    let mut n_exact = true;
    for _ in 0..20 {
        let a = random_vector(&mut rng);
        n_exact &= translation_rotor(&a, lambda)
            .apply(&conformal::n())
            .approx_eq(&conformal::n(), 0.0);
    }
    rec.flag("infinity_fixed_exactly", n_exact, "T_a n T̃_a = n in coefficients".into());

    let a = random_vector(&mut rng);
    let ka = special_conformal_rotor(&a, lambda);
    let via = conformal::e()
        .geometric(translation_rotor(&a, lambda).value())
        .geometric(&conformal::e());
    rec.residual("k_equals_e_t_e", (ka.value() - &via).max_abs(), tol.default);

    let origin = embed_euclidean(&sta::minkowski([0.0; 4]), lambda).unwrap();
    let swapped = invert_point(&origin);
    rec.flag(
        "inversion_swaps_origin_infinity",
        conformal::homogeneous_eq(swapped.value(), &conformal::n(), tol.default),
        "−e F_E(0) e ∝ n".into(),
    );

    let mut hyp = 0.0f64;
    for _ in 0..50 {
        let x = sta::minkowski([
            0.0,
            rng.gen_range(-0.6..0.6),
            rng.gen_range(-0.6..0.6),
            rng.gen_range(-0.6..0.6),
        ]);
        let t = hyperbolic_translation_rotor(&x, lambda).unwrap();
        let unit = t.value().geometric(&t.value().reverse());
        hyp = hyp.max((&unit - &Multivector::scalar(conformal::signature(), 1.0)).max_abs());
    }
    rec.residual("hyperbolic_rotor_unit", hyp, tol.default);

    let mut proj = 0.0f64;
    for _ in 0..50 {
        let k = random_vector(&mut rng);
        let r = random_vector(&mut rng);
        if k.is_zero(1e-3) {
            continue;
        }
        if let Ok(lp) = project_line(&line_through(&r, &k, lambda).unwrap(), 0.3) {
            let dir = lp.direction();
            proj = proj.max(dir.coeff(0b0001).abs() / (1.0 + dir.max_abs()));
        }
    }
    rec.residual("projected_lines_spatial", proj, tol.default);
    rec.checks
}

pub fn spinor_rep_suite(seed: u64, tol: &Tolerances) -> Vec<CheckRecord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x6d5f_5e97);
    let mut rec = Recorder::new("spinor-rep");
    let plane = sta::gamma(1).geometric(&sta::gamma(2));

    let mut action = [0.0f64; 4];
    let mut flaw = 0.0f64;
    for _ in 0..100 {
        let z = random_spinor(&mut rng);
        let a = random_vector(&mut rng);
        let alpha = rng.gen_range(-1.5..1.5);
        let angle = rng.gen_range(-3.0..3.0);
        let lifted = lift(&z);
        let r = Rotor::exp_blade(&plane, angle).unwrap();
        let pairs = [
            (lift(&spin_translate(&z, &a)), lifted.acted_on_by(&translation_rotor(&a, 1.0))),
            (lift(&spin_rotate(&z, &r)), lifted.acted_on_by(&conformal::embed_rotor(&r))),
            (lift(&spin_dilate(&z, alpha)), lifted.acted_on_by(&dilation_rotor(alpha))),
            (
                lift(&spin_special_conformal(&z, &a)),
                lifted.acted_on_by(&special_conformal_rotor(&a, 1.0)),
            ),
        ];
        for (k, (spun, six)) in pairs.iter().enumerate() {
            action[k] = action[k].max((spun.value() - six.value()).max_abs());
        }
        let chained = spin_invert(&spin_translate(&spin_invert(&z), &a));
        flaw = flaw.max(
            (chained.value() - spin_special_conformal(&z, &a).scaled(-1.0).value()).max_abs(),
        );
        let six_inv = lifted.inverted();
        flaw = flaw.max(
            (lift(&spin_invert(&z)).value() - six_inv.value()).max_abs(),
        );
    }
    rec.residual("translation_action", action[0], tol.default);
    rec.residual("rotation_action", action[1], tol.default);
    rec.residual("dilation_action", action[2], tol.default);
    rec.residual("special_conformal_action", action[3], tol.default);
    rec.residual("inversion_sign_flaw", flaw, tol.default);

    let mut bivector = 0.0f64;
    for _ in 0..50 {
        let psi = random_spinor(&mut rng);
        let lifted = lift(&psi);
        for kind in [BivectorKind::E, BivectorKind::EBar] {
            for mu in 0..4 {
                let via_spinor = lift(&bivector_action(kind, mu, &psi).unwrap());
                let via_six = bivector_generator(kind, mu).unwrap().geometric(lifted.value());
                bivector = bivector.max((via_spinor.value() - &via_six).max_abs());
            }
        }
    }
    rec.residual("bivector_generator_maps", bivector, tol.default);

    let mut dil_inv = 0.0f64;
    for _ in 0..50 {
        let psi = random_spinor(&mut rng);
        let phi = random_spinor(&mut rng);
        let alpha = rng.gen_range(-1.5..1.5);
        let base = psi.inner_s(&phi);
        let after = spin_dilate(&psi, alpha).inner_s(&spin_dilate(&phi, alpha));
        dil_inv = dil_inv.max((after - base).abs());
        let lhs = spin_dilate(&spin_invert(&psi), alpha);
        let rhs = spin_invert(&spin_dilate(&psi, -alpha));
        dil_inv = dil_inv.max((lhs.value() - rhs.value()).max_abs());
    }
    rec.residual("dilation_invariance_and_intertwining", dil_inv, tol.default);
    rec.checks
}

pub fn geometry_suite(seed: u64, tol: &Tolerances) -> Vec<CheckRecord> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e03_e7a1);
    let mut rec = Recorder::new("geometry");

    let mut locus = 0.0f64;
    let mut annihilation = 0.0f64;
    let mut q_null = 0.0f64;
    for _ in 0..20 {
        let t = random_null_twistor(&mut rng);
        let ray = null_ray(&t).unwrap();
        for k in 0..=8 {
            let h = -2.0 + 0.5 * k as f64;
            locus = locus.max(primary_residual(&t, &ray.point_at(h)));
        }
        annihilation = annihilation.max(ray_annihilation_residual(&t));
        q_null = q_null.max(ray.base_point().inner(ray.base_point()).scalar_part().abs());
    }
    rec.residual("null_ray_locus", locus, tol.locus);
    rec.residual("ray_annihilation", annihilation, tol.default);
    rec.residual("base_point_on_cone", q_null, tol.locus);

    let v = tangent_field(0.5, 0.0, [1.0, 0.0, 0.5]).unwrap();
    let frozen = [-2.0 / 3.0, 2.0 / 3.0, 1.0 / 3.0];
    let drift = (0..3).map(|k| (v[k] - frozen[k]).abs()).fold(0.0, f64::max);
    rec.residual("tangent_reference_value", drift, 1e-12);

    let mut sym = 0.0f64;
    for _ in 0..10 {
        let x = [
            rng.gen_range(0.4..1.6),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(0.2..0.8),
        ];
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let (sin, cos) = phi.sin_cos();
        let xr = [cos * x[0] - sin * x[1], sin * x[0] + cos * x[1], x[2]];
        let v = tangent_field(0.5, 0.0, x).unwrap();
        let vr = tangent_field(0.5, 0.0, xr).unwrap();
        let expected = [cos * v[0] - sin * v[1], sin * v[0] + cos * v[1], v[2]];
        sym = (0..3).map(|k| (vr[k] - expected[k]).abs()).fold(sym, f64::max);
    }
    rec.residual("axial_symmetry", sym, 1e-9);

    let cfg = SceneConfig {
        family_count: 4,
        samples_per_circle: 32,
        ..SceneConfig::default()
    };
    match torus_family(&cfg) {
        Ok(family) => {
            let mut kinematics = 0.0f64;
            let mut closure = 0.0f64;
            for circle in &family {
                let nominal = 1.0 / circle.radius();
                for point in circle.sample(8) {
                    let v = tangent_field(cfg.helicity, cfg.tau, point).unwrap();
                    let a = flow_acceleration(cfg.helicity, cfg.tau, point).unwrap();
                    let amag = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
                    kinematics = kinematics
                        .max(((v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt() - 1.0).abs())
                        .max((v[0] * a[0] + v[1] * a[1] + v[2] * a[2]).abs() / amag)
                        .max((amag - nominal).abs() / nominal);
                }
                let s0 = circle.point_at(0.0);
                let s1 = circle.point_at(std::f64::consts::TAU);
                closure = closure.max(
                    ((s0[0] - s1[0]).powi(2) + (s0[1] - s1[1]).powi(2) + (s0[2] - s1[2]).powi(2))
                        .sqrt(),
                );
            }
            rec.residual("circle_kinematics", kinematics, tol.circle);
            rec.residual("circle_closure", closure, 1e-8);

            let mut min_dist = f64::INFINITY;
            for i in 0..family.len() {
                for j in (i + 1)..family.len() {
                    min_dist = min_dist.min(min_sampled_distance(&family[i], &family[j], 32));
                }
            }
            rec.flag(
                "family_non_intersecting",
                min_dist > 1e-6,
                format!("min sampled distance {min_dist:.3e}"),
            );

            let mut dline = 0.0f64;
            for circle in &family {
                let pts = to_dlines(circle, cfg.helicity, cfg.samples_per_circle).unwrap();
                let (_, residual) = collinearity_through_origin(&pts);
                dline = dline.max(residual);
            }
            rec.residual("dline_collinearity", dline, tol.dline);
        }
        Err(e) => rec.flag("torus_family", false, format!("scene rejected: {e}")),
    }

    let plus = congruence_circle([1.0, 0.0, 0.5], 10.0, 0.0)
        .and_then(|c| orientation_scalar(&c, 10.0, 0.0));
    let minus = congruence_circle([1.0, 0.0, 0.5], -10.0, 0.0)
        .and_then(|c| orientation_scalar(&c, -10.0, 0.0));
    match (plus, minus) {
        (Ok(op), Ok(om)) => rec.flag(
            "chirality_flips_with_helicity",
            op * om < 0.0,
            format!("orientation {op:.3e} vs {om:.3e}"),
        ),
        _ => rec.flag("chirality_flips_with_helicity", false, "circle construction failed".into()),
    }

    let mut expansion = 0.0f64;
    for _ in 0..50 {
        let psi = random_spinor(&mut rng);
        expansion = expansion
            .max((&ray_observable(&psi).line() - &observable_decomposition(&psi)).max_abs());
    }
    rec.residual("observable_expansion", expansion, tol.default);

    let mut doubled = 0.0f64;
    let mut moved_ok = true;
    let mut inverted_ok = true;
    for _ in 0..10 {
        let t = random_null_twistor(&mut rng);
        let ray = null_ray(&t).unwrap();
        let line = line_through(ray.base_point(), ray.direction(), 1.0).unwrap();
        let obs = ray_observable(t.psi());
        doubled = doubled.max((line.value() - &obs.line().scaled(2.0)).max_abs());
        let a = random_vector(&mut rng);
        let target = &ray.point_at(0.0) + &a;
        moved_ok &= line_matches(&obs.translated_line(&a), &target, ray.direction(), 1e-9)
            .unwrap_or(false);
        let (omega, _) = t.psi().weyl_parts();
        let expected = line_through(
            &ray.direction().scaled(1.0 / ray.beta()),
            &omega.flagpole(),
            1.0,
        )
        .unwrap();
        inverted_ok &=
            (&obs.inverted_line() - &expected.value().scaled(0.5)).max_abs() < 1e-9;
    }
    rec.residual("null_observable_doubling", doubled, tol.default);
    rec.flag("observable_translation", moved_ok, "base point shifts to q+a".into());
    rec.flag("observable_inversion", inverted_ok, "ray becomes (p/β, K)".into());
    rec.checks
}

/// Run the named suite (or all of them) with the given seed.
pub fn run_suite(suite: &str, seed: u64, tol: &Tolerances) -> Option<Vec<CheckRecord>> {
    let mut out = Vec::new();
    match suite {
        "algebra" => out.extend(algebra_suite(seed, tol)),
        "twistor" => out.extend(twistor_suite(seed, tol)),
        "conformal" => out.extend(conformal_suite(seed, tol)),
        "spinor-rep" => out.extend(spinor_rep_suite(seed, tol)),
        "geometry" => out.extend(geometry_suite(seed, tol)),
        "all" => {
            for s in SUITES {
                out.extend(run_suite(s, seed, tol).unwrap());
            }
        }
        _ => return None,
    }
    Some(out)
}
