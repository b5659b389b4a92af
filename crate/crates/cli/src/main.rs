//! Command-line surface: verification suites, congruence scenes and
//! null-ray exports.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! usage errors (bad flags, unknown suites, invalid inputs). Output is
//! deterministic for a given command line and seed; timing goes to
//! stderr only.

mod checks;
mod config;
mod geometry;
mod manifest;
mod scene;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use twistor_ga::congruence::SceneConfig;

use crate::checks::{run_suite, Tolerances, SUITES};
use crate::config::{parse_floats, FileConfig};
use crate::geometry::GeometryRecord;
use crate::manifest::RunManifest;
use crate::scene::{
    family_records, preset_null_spinor, ray_records, spinor_from_components, tangent_records,
    RayOptions, GRID_EXTENT,
};

/// Environment variable overriding the default 1e-10 comparison tolerance.
const TOL_ENV: &str = "TWISTOR_GA_TOL";

#[derive(Parser)]
#[command(
    name = "twistor-ga",
    about = "Geometric-algebra twistors: verification suites and geometry export",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct CommonIo {
    /// Output format for data files.
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Output path (data file; a .manifest.json sidecar is written next to it).
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value configuration file mirroring the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Seed for randomised checks.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a machine-readable report.
    Verify {
        /// One of: algebra, twistor, conformal, spinor-rep, geometry, all.
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Generate Robinson-congruence data: tangent field, circle
    /// families, and optionally their d-line images.
    Congruence {
        /// Helicity (must be nonzero; null twistors draw a ray instead).
        #[arg(long)]
        s: Option<f64>,
        /// Time of the projection hyperplane.
        #[arg(long)]
        tau: Option<f64>,
        /// Grid / torus parameters NX,NY,NZ.
        #[arg(long)]
        grid: Option<String>,
        /// Number of circles in the torus family (0 = tangent field only).
        #[arg(long)]
        family: Option<usize>,
        /// Samples per circle.
        #[arg(long)]
        samples: Option<usize>,
        /// Also translate every circle to the origin (d-line records).
        #[arg(long)]
        dlines: bool,
        #[command(flatten)]
        io: CommonIo,
    },
    /// Export the null ray of a null twistor and its 6-d observable checks.
    Ray {
        /// Spinor components ω⁰re,ω⁰im,ω¹re,ω¹im,π⁰re,π⁰im,π¹re,π¹im
        /// (defaults to a preset null spinor).
        #[arg(long)]
        spinor: Option<String>,
        /// Base position t,x,y,z of the twistor.
        #[arg(long)]
        r: Option<String>,
        /// Ray samples over h ∈ [−2, 2].
        #[arg(long)]
        samples: Option<usize>,
        /// Translate the observable by t,x,y,z and export the moved ray.
        #[arg(long)]
        translate: Option<String>,
        /// Invert the observable and export the dual ray.
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        io: CommonIo,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn tolerance_from_env() -> anyhow::Result<f64> {
    match std::env::var(TOL_ENV) {
        Ok(text) => {
            let value: f64 = text
                .parse()
                .with_context(|| format!("{TOL_ENV} must be a number, got {text:?}"))?;
            if !(value.is_finite() && value > 0.0) {
                bail!("{TOL_ENV} must be a positive finite number, got {text:?}");
            }
            Ok(value)
        }
        Err(std::env::VarError::NotPresent) => Ok(twistor_ga::DEFAULT_TOL),
        Err(e) => Err(e).context(format!("reading {TOL_ENV}")),
    }
}

fn load_config(io: &CommonIo) -> anyhow::Result<FileConfig> {
    io.config
        .as_deref()
        .map(FileConfig::load)
        .transpose()
        .map(Option::unwrap_or_default)
}

fn resolve_format(io: &CommonIo, file_cfg: &FileConfig) -> anyhow::Result<String> {
    let format = io
        .format
        .clone()
        .or_else(|| file_cfg.get_str("format").map(str::to_string))
        .unwrap_or_else(|| "csv".to_string());
    if format != "csv" && format != "json" {
        bail!("format must be csv or json, got {format:?}");
    }
    Ok(format)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify { suite, io } => run_verify(&suite, &io),
        Command::Congruence {
            s,
            tau,
            grid,
            family,
            samples,
            dlines,
            io,
        } => run_congruence(s, tau, grid.as_deref(), family, samples, dlines, &io),
        Command::Ray {
            spinor,
            r,
            samples,
            translate,
            invert,
            io,
        } => run_ray(
            spinor.as_deref(),
            r.as_deref(),
            samples,
            translate.as_deref(),
            invert,
            &io,
        ),
    }
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run_verify(suite: &str, io: &CommonIo) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let file_cfg = load_config(io)?;
    let seed = match io.seed {
        Some(s) => s,
        None => file_cfg.get_u64("seed")?.unwrap_or(42),
    };
    let default_tol = tolerance_from_env()?;
    let tol = Tolerances {
        default: default_tol,
        ..Tolerances::default()
    };

    let Some(results) = run_suite(suite, seed, &tol) else {
        bail!(
            "unknown suite {suite:?}; expected one of {} or all",
            SUITES.join(", ")
        );
    };

    let mut manifest = RunManifest::new("verify", seed);
    manifest.config_entry("suite", suite);
    manifest.tolerance("default", tol.default);
    manifest.tolerance("matrix_oracle", tol.oracle);
    manifest.tolerance("null_locus", tol.locus);
    manifest.tolerance("circle_kinematics", tol.circle);
    manifest.tolerance("dline_collinearity", tol.dline);
    manifest.record_all(results);

    let out = io
        .out
        .clone()
        .or_else(|| file_cfg.get_str("out").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("verify-report.json"));
    manifest.outputs.push(out.display().to_string());
    manifest.wall_time_ms = started.elapsed().as_millis();

    write_file(&out, &manifest.to_json()?)?;
    print!("{}", manifest.human_summary());
    eprintln!("verify finished in {} ms", manifest.wall_time_ms);
    Ok(if manifest.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit_records(
    records: &[GeometryRecord],
    format: &str,
    out: &Path,
    manifest: &mut RunManifest,
) -> anyhow::Result<()> {
    for rec in records {
        rec.validate()?;
    }
    let manifest_path = PathBuf::from(format!("{}.manifest.json", out.display()));
    let manifest_name = manifest_path
        .file_name()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_default();
    manifest.outputs.push(out.display().to_string());
    manifest.outputs.push(manifest_path.display().to_string());
    let data = match format {
        "csv" => geometry::to_csv(records),
        _ => {
            let text = geometry::to_json(&manifest_name, records)?;
            // round-trip invariant: the file parses back into the same records
            let back = geometry::from_json(&text)?;
            if back.records != records {
                bail!("emitted JSON does not round-trip");
            }
            text
        }
    };
    write_file(out, &data)?;
    write_file(&manifest_path, &manifest.to_json()?)?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_congruence(
    s: Option<f64>,
    tau: Option<f64>,
    grid: Option<&str>,
    family: Option<usize>,
    samples: Option<usize>,
    dlines: bool,
    io: &CommonIo,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let file_cfg = load_config(io)?;
    let s = match s {
        Some(v) => v,
        None => file_cfg.get_f64("s")?.unwrap_or(0.5),
    };
    if s == 0.0 {
        bail!("helicity 0 has no congruence: a null twistor draws a ray — use `twistor-ga ray`");
    }
    let tau = match tau {
        Some(v) => v,
        None => file_cfg.get_f64("tau")?.unwrap_or(0.0),
    };
    let grid_text = grid
        .map(str::to_string)
        .or_else(|| file_cfg.get_str("grid").map(str::to_string))
        .unwrap_or_else(|| "5,5,5".to_string());
    let grid = parse_floats::<3>(&grid_text, "--grid")?;
    let dlines = dlines || file_cfg.get_bool("dlines")?.unwrap_or(false);
    let mut family_count = match family {
        Some(v) => v,
        None => file_cfg.get_usize("family")?.unwrap_or(0),
    };
    if dlines && family_count == 0 {
        family_count = 8;
    }
    let samples = match samples {
        Some(v) => v,
        None => file_cfg.get_usize("samples")?.unwrap_or(64),
    };
    let seed = match io.seed {
        Some(v) => v,
        None => file_cfg.get_u64("seed")?.unwrap_or(42),
    };
    let format = resolve_format(io, &file_cfg)?;
    let out = io
        .out
        .clone()
        .or_else(|| file_cfg.get_str("out").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(format!("congruence.{format}")));

    let cfg = SceneConfig {
        helicity: s,
        tau,
        n_x: grid[0],
        n_y: grid[1],
        n_z: grid[2],
        phi_start: 0.0,
        family_count: family_count.max(1),
        samples_per_circle: samples,
    };
    cfg.validate()?;

    let mut manifest = RunManifest::new("congruence", seed);
    manifest.config_entry("s", s);
    manifest.config_entry("tau", tau);
    manifest.config_entry("grid", &grid_text);
    manifest.config_entry("grid_extent", GRID_EXTENT);
    manifest.config_entry("family", family_count);
    manifest.config_entry("samples", samples);
    manifest.config_entry("dlines", dlines);
    manifest.config_entry("format", &format);
    manifest.tolerance("default", tolerance_from_env()?);
    manifest.tolerance("circle_kinematics", 1e-5);
    manifest.tolerance("dline_collinearity", 1e-6);

    let mut records = tangent_records(&cfg);
    if family_count > 0 {
        let (family_recs, checks) = family_records(&cfg, dlines)?;
        records.extend(family_recs);
        manifest.record_all(checks);
    }

    emit_records(&records, &format, &out, &mut manifest)?;
    manifest.wall_time_ms = started.elapsed().as_millis();
    println!(
        "wrote {} records ({} tangent) to {}",
        records.len(),
        records.iter().filter(|r| r.kind == "tangent").count(),
        out.display()
    );
    if manifest.failed > 0 {
        print!("{}", manifest.human_summary());
    }
    eprintln!("congruence finished in {} ms", started.elapsed().as_millis());
    Ok(if manifest.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_ray(
    spinor: Option<&str>,
    r: Option<&str>,
    samples: Option<usize>,
    translate: Option<&str>,
    invert: bool,
    io: &CommonIo,
) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let file_cfg = load_config(io)?;
    let spinor = match spinor {
        Some(text) => {
            let values: Vec<f64> = text
                .split(',')
                .map(|p| p.trim().parse::<f64>().context("bad --spinor value"))
                .collect::<anyhow::Result<_>>()?;
            spinor_from_components(&values)?
        }
        None => preset_null_spinor(),
    };
    let position = match r {
        Some(text) => parse_floats::<4>(text, "--r")?,
        None => [0.0; 4],
    };
    let samples = match samples {
        Some(v) => v,
        None => file_cfg.get_usize("samples")?.unwrap_or(9),
    };
    if samples < 2 {
        bail!("--samples must be at least 2");
    }
    let translate = translate
        .map(|text| parse_floats::<4>(text, "--translate"))
        .transpose()?;
    let seed = match io.seed {
        Some(v) => v,
        None => file_cfg.get_u64("seed")?.unwrap_or(42),
    };
    let format = resolve_format(io, &file_cfg)?;
    let out = io
        .out
        .clone()
        .or_else(|| file_cfg.get_str("out").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(format!("ray.{format}")));

    // reject non-null input up front, with the measured helicity
    let probe = twistor_ga::twistor::Twistor::new(
        spinor.clone(),
        twistor_ga::sta::minkowski(position),
    )?;
    let helicity = probe.helicity();
    if helicity.abs() > twistor_ga::congruence::NULL_HELICITY_TOL {
        bail!(
            "input spinor is not null: measured helicity {helicity:.6e} (needs |s| ≤ 1e-8); \
             the ray locus only exists for null twistors"
        );
    }

    let mut manifest = RunManifest::new("ray", seed);
    manifest.config_entry("r", format!("{:?}", position));
    manifest.config_entry("samples", samples);
    manifest.config_entry("invert", invert);
    manifest.config_entry("helicity", helicity);
    manifest.tolerance("default", tolerance_from_env()?);
    manifest.tolerance("observable", 1e-9);

    let opts = RayOptions {
        spinor,
        position,
        samples,
        translate,
        invert,
    };
    let records = ray_records(&opts, &mut manifest)?;
    emit_records(&records, &format, &out, &mut manifest)?;
    manifest.wall_time_ms = started.elapsed().as_millis();
    print!("{}", manifest.human_summary());
    println!("wrote {} ray records to {}", records.len(), out.display());
    eprintln!("ray finished in {} ms", started.elapsed().as_millis());
    Ok(if manifest.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
