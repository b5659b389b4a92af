//! Scene generation: tangent-field grids, circle families, d-lines and
//! null-ray exports, all as [`GeometryRecord`]s.

use std::collections::BTreeMap;

use anyhow::{bail, Context};

use twistor_ga::congruence::{
    collinearity_through_origin, line_matches, null_ray, ray_observable, tangent_field, to_dlines,
    torus_family, SceneConfig,
};
use twistor_ga::conformal::line_through;
use twistor_ga::sta::{self, ComplexPair, FourSpinor, PauliSpinor};
use twistor_ga::twistor::Twistor;

use crate::geometry::GeometryRecord;
use crate::manifest::{CheckRecord, RunManifest};

/// Extent of the sampling cube for tangent-field grids: every axis runs
/// over [−GRID_EXTENT, GRID_EXTENT]. Recorded in each manifest because
/// the figure it reproduces does not pin the window.
pub const GRID_EXTENT: f64 = 2.5;

fn meta(entries: &[(&str, f64)]) -> BTreeMap<String, f64> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect()
}

/// Sample the projected tangent field over an n_x × n_y × n_z grid.
/// Scene points where the construction degenerates (zero flagpole or a
/// degenerate projection) are skipped deterministically.
pub fn tangent_records(cfg: &SceneConfig) -> Vec<GeometryRecord> {
    let counts = [
        cfg.n_x.ceil().max(1.0) as usize,
        cfg.n_y.ceil().max(1.0) as usize,
        cfg.n_z.ceil().max(1.0) as usize,
    ];
    let coord = |i: usize, n: usize| -> f64 {
        if n == 1 {
            0.0
        } else {
            -GRID_EXTENT + 2.0 * GRID_EXTENT * i as f64 / (n - 1) as f64
        }
    };
    let mut records = Vec::new();
    let mut id = 0u32;
    for ix in 0..counts[0] {
        for iy in 0..counts[1] {
            for iz in 0..counts[2] {
                let p = [
                    coord(ix, counts[0]),
                    coord(iy, counts[1]),
                    coord(iz, counts[2]),
                ];
                let Ok(v) = tangent_field(cfg.helicity, cfg.tau, p) else {
                    continue;
                };
                let tip = [p[0] + 0.4 * v[0], p[1] + 0.4 * v[1], p[2] + 0.4 * v[2]];
                records.push(GeometryRecord {
                    kind: "tangent".into(),
                    id,
                    params: vec![0.0, 1.0],
                    points: vec![p, tip],
                    meta: meta(&[("s", cfg.helicity), ("tau", cfg.tau)]),
                });
                id += 1;
            }
        }
    }
    records
}

/// The circle family and, when requested, the d-line images.
pub fn family_records(
    cfg: &SceneConfig,
    dlines: bool,
) -> anyhow::Result<(Vec<GeometryRecord>, Vec<CheckRecord>)> {
    let family = torus_family(cfg).context("building the circle family")?;
    let mut records = Vec::new();
    let mut checks = Vec::new();
    for (i, circle) in family.iter().enumerate() {
        let phi = cfg.phi_start
            + 2.0 * std::f64::consts::PI * i as f64 / cfg.family_count as f64;
        let thetas: Vec<f64> = (0..cfg.samples_per_circle)
            .map(|k| 2.0 * std::f64::consts::PI * k as f64 / cfg.samples_per_circle as f64)
            .collect();
        let points: Vec<[f64; 3]> = thetas.iter().map(|&t| circle.point_at(t)).collect();
        records.push(GeometryRecord {
            kind: "circle".into(),
            id: i as u32,
            params: thetas,
            points,
            meta: meta(&[
                ("s", cfg.helicity),
                ("tau", cfg.tau),
                ("phi", phi),
                ("radius", circle.radius()),
                ("center_x", circle.center()[0]),
                ("center_y", circle.center()[1]),
                ("center_z", circle.center()[2]),
            ]),
        });
        if dlines {
            let pts = to_dlines(circle, cfg.helicity, cfg.samples_per_circle)
                .with_context(|| format!("translating circle {i} to the origin"))?;
            let (_, residual) = collinearity_through_origin(&pts);
            checks.push(CheckRecord {
                suite: "geometry".into(),
                name: format!("dline_collinearity_{i}"),
                passed: residual < 1e-6,
                detail: format!("max deviation / length = {residual:.3e}"),
            });
            records.push(GeometryRecord {
                kind: "dline".into(),
                id: i as u32,
                params: (0..pts.len()).map(|k| k as f64).collect(),
                points: pts,
                meta: meta(&[("s", cfg.helicity), ("tau", cfg.tau), ("phi", phi)]),
            });
        }
    }
    Ok((records, checks))
}

/// A named preset or eight explicit component values
/// (ω⁰re, ω⁰im, ω¹re, ω¹im, π⁰re, π⁰im, π¹re, π¹im).
pub fn spinor_from_components(values: &[f64]) -> anyhow::Result<FourSpinor> {
    if values.len() != 8 {
        bail!("--spinor needs 8 comma-separated values, got {}", values.len());
    }
    let omega = PauliSpinor::from_components(
        ComplexPair::new(values[0], values[1]),
        ComplexPair::new(values[2], values[3]),
    );
    let pi = PauliSpinor::from_components(
        ComplexPair::new(values[4], values[5]),
        ComplexPair::new(values[6], values[7]),
    );
    Ok(FourSpinor::from_weyl(&omega, &pi))
}

/// The default null spinor: ω = 1, π = Iσ₁, whose ray runs through
/// q = −½(γ₀+γ₃) with direction p = ½(γ₀−γ₃).
pub fn preset_null_spinor() -> FourSpinor {
    FourSpinor::from_weyl(
        &PauliSpinor::up(),
        &PauliSpinor::from_coefficients([0.0, 1.0, 0.0, 0.0]),
    )
}

pub struct RayOptions {
    pub spinor: FourSpinor,
    pub position: [f64; 4],
    pub samples: usize,
    pub translate: Option<[f64; 4]>,
    pub invert: bool,
}

/// Build ray records plus the observable-consistency checks.
pub fn ray_records(
    opts: &RayOptions,
    manifest: &mut RunManifest,
) -> anyhow::Result<Vec<GeometryRecord>> {
    let twistor = Twistor::new(opts.spinor.clone(), sta::minkowski(opts.position))
        .context("constructing the twistor")?;
    let ray = null_ray(&twistor)?;
    manifest.config_entry("beta", ray.beta());

    let hs: Vec<f64> = (0..opts.samples)
        .map(|k| -2.0 + 4.0 * k as f64 / (opts.samples - 1).max(1) as f64)
        .collect();
    let sample_ray = |q: &twistor_ga::algebra::Multivector,
                      p: &twistor_ga::algebra::Multivector|
     -> (Vec<f64>, Vec<[f64; 3]>, BTreeMap<String, f64>) {
        let points = hs
            .iter()
            .map(|&h| {
                let r = q + &(p * h);
                [r.coeff(0b0010), r.coeff(0b0100), r.coeff(0b1000)]
            })
            .collect();
        let m = meta(&[
            ("s", 0.0),
            ("qt", q.coeff(0b0001)),
            ("pt", p.coeff(0b0001)),
        ]);
        (hs.clone(), points, m)
    };

    let mut records = Vec::new();
    let (params, points, m) = sample_ray(ray.base_point(), ray.direction());
    records.push(GeometryRecord {
        kind: "ray".into(),
        id: 0,
        params,
        points,
        meta: m,
    });

    // observable consistency: L = 2L_ψ
    let line = line_through(ray.base_point(), ray.direction(), 1.0)?;
    let obs = ray_observable(twistor.psi());
    let residual = (line.value() - &obs.line().scaled(2.0)).max_abs();
    manifest.record(CheckRecord {
        suite: "geometry".into(),
        name: "observable_doubling".into(),
        passed: residual < 1e-10,
        detail: format!("‖L − 2L_ψ‖ = {residual:.3e}"),
    });

    let mut next_id = 1u32;
    if let Some(a) = opts.translate {
        let shift = sta::minkowski(a);
        let target = &ray.point_at(0.0) + &shift;
        let moved = obs.translated_line(&shift);
        let ok = line_matches(&moved, &target, ray.direction(), 1e-9)?;
        manifest.record(CheckRecord {
            suite: "geometry".into(),
            name: "observable_translation".into(),
            passed: ok,
            detail: "translated ray passes through q+a with direction p".into(),
        });
        let (params, points, m) = sample_ray(&target, ray.direction());
        records.push(GeometryRecord {
            kind: "ray".into(),
            id: next_id,
            params,
            points,
            meta: m,
        });
        next_id += 1;
    }

    if opts.invert {
        let (omega, _) = twistor.psi().weyl_parts();
        let k = omega.flagpole();
        let p_over_beta = ray.direction().scaled(1.0 / ray.beta());
        let expected = line_through(&p_over_beta, &k, 1.0)?;
        let residual = (&obs.inverted_line() - &expected.value().scaled(0.5)).max_abs();
        manifest.record(CheckRecord {
            suite: "geometry".into(),
            name: "observable_inversion".into(),
            passed: residual < 1e-9,
            detail: format!("‖L′ − ½(Keē + P∧K∧n)‖ = {residual:.3e}"),
        });
        let (params, points, m) = sample_ray(&p_over_beta, &k);
        records.push(GeometryRecord {
            kind: "ray".into(),
            id: next_id,
            params,
            points,
            meta: m,
        });
    }
    Ok(records)
}
