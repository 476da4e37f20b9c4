//! File-based command driver behind the thin binary: basis generation,
//! the verification battery, analysis/synthesis, heat evolution, wavelet
//! transform/reconstruction and Spin eigenfunction tables.
//!
//! Exit codes: 0 success, 1 verification or tolerance failure, 2 usage
//! error, 3 I/O error.

use crate::error::{Error, Result};
use crate::multivector::{Multivector, MultivectorRepr};
use crate::sphere::{
    sphere_area, Part, SpecKey, SpectralCoefficients, SphereContext, SphereSignal,
};
use crate::verify::{self, VerifyConfig};
use crate::wavelet::{
    self, heat_kernel, ProfileKind, ReconstructionPath, ScaleGrid, SpectralProfile, WaveletFamily,
};
use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<OutputFormat> {
        match s {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            _ => None,
        }
    }
}

/// Validated run configuration shared by the subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub m: usize,
    pub max_degree: usize,
    pub profile: ProfileKind,
    pub rho_min: f64,
    pub rho_max: f64,
    pub rho_ratio: f64,
    pub t: f64,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub tol: f64,
    pub seed: u64,
    pub casimir_constant: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: 2,
            max_degree: 8,
            profile: ProfileKind::Modified,
            rho_min: 1e-3,
            rho_max: 20.0,
            rho_ratio: 1.05,
            t: 1.0,
            input: None,
            output: None,
            format: OutputFormat::Json,
            tol: 1e-3,
            seed: 7,
            casimir_constant: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m < 2 || self.m > 6 {
            return Err(Error::Unsupported(format!(
                "sphere dimension m={} outside the supported range 2..=6",
                self.m
            )));
        }
        if self.max_degree > 16 {
            return Err(Error::ResourceCap("max degree beyond the desk scale".into()));
        }
        if !(self.rho_min > 0.0 && self.rho_max > self.rho_min && self.rho_ratio > 1.0) {
            return Err(Error::Malformed("invalid scale grid parameters".into()));
        }
        Ok(())
    }

    pub fn grid(&self) -> Result<ScaleGrid> {
        ScaleGrid::new(self.rho_min, self.rho_max, self.rho_ratio)
    }

    pub fn spectral_profile(&self) -> SpectralProfile {
        match self.casimir_constant {
            Some(c) => SpectralProfile::with_constant(self.profile, self.m, c),
            None => SpectralProfile::new(self.profile, self.m),
        }
    }
}

fn write_output(cfg: &RunConfig, default_name: &str, content: &str) -> Result<PathBuf> {
    let path = cfg
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from(default_name));
    let mut f = std::fs::File::create(&path)?;
    f.write_all(content.as_bytes())?;
    Ok(path)
}

/// Deterministic JSON for the spectral coefficients: map keyed "k/alpha/part".
pub fn coefficients_to_json(c: &SpectralCoefficients) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (key, v) in &c.entries {
        map.insert(
            key.to_string_key(),
            serde_json::to_value(v.to_repr()).expect("serializable"),
        );
    }
    json!({ "m": c.m, "coeffs": serde_json::Value::Object(map) })
}

pub fn coefficients_from_json(v: &serde_json::Value) -> Result<SpectralCoefficients> {
    let m = v
        .get("m")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Malformed("missing m".into()))? as usize;
    let mut out = SpectralCoefficients::zero(m);
    let map = v
        .get("coeffs")
        .and_then(|x| x.as_object())
        .ok_or_else(|| Error::Malformed("missing coeffs".into()))?;
    for (k, val) in map {
        let key = SpecKey::parse(k).ok_or_else(|| Error::Malformed(format!("bad key {k}")))?;
        let repr: MultivectorRepr = serde_json::from_value(val.clone())?;
        out.set(key, Multivector::from_repr(&repr)?);
    }
    Ok(out)
}

/// CSV with one blade per column, real and imaginary parts split. The key
/// column joins the multi-index with dashes so the row stays comma-clean.
pub fn coefficients_to_csv(c: &SpectralCoefficients) -> String {
    let dim = (c.m + 1) as u32;
    let mut s = String::from("key");
    for b in crate::blade::BladeIndex::all(dim) {
        s.push_str(&format!(",re_{0},im_{0}", b.label()));
    }
    s.push('\n');
    for (key, v) in &c.entries {
        s.push_str(&key.to_string_key().replace(',', "-"));
        for b in crate::blade::BladeIndex::all(dim) {
            let z = v.get(b).to_approx();
            s.push_str(&format!(",{:e},{:e}", z.re, z.im));
        }
        s.push('\n');
    }
    s
}

/// Sphere signal JSON: nodes and per-node multivector values.
pub fn signal_to_json(ctx: &SphereContext, f: &SphereSignal) -> serde_json::Value {
    json!({
        "m": f.m,
        "nodes": ctx.rule.nodes,
        "values": f.values.iter().map(|v| serde_json::to_value(v.to_repr()).unwrap()).collect::<Vec<_>>(),
    })
}

pub fn signal_from_json(ctx: &SphereContext, v: &serde_json::Value) -> Result<SphereSignal> {
    let m = v
        .get("m")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Malformed("missing m".into()))? as usize;
    if m != ctx.m() {
        return Err(Error::DimensionMismatch(m as u32, ctx.m() as u32));
    }
    let nodes = v
        .get("nodes")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Malformed("missing nodes".into()))?;
    if nodes.len() != ctx.rule.len() {
        return Err(Error::Malformed(format!(
            "signal carries {} nodes, context quadrature has {}",
            nodes.len(),
            ctx.rule.len()
        )));
    }
    for (a, b) in nodes.iter().zip(&ctx.rule.nodes) {
        let a: Vec<f64> = serde_json::from_value(a.clone())?;
        if a.len() != b.len() || a.iter().zip(b).any(|(x, y)| (x - y).abs() > 1e-12) {
            return Err(Error::Malformed(
                "signal node set differs from the context quadrature".into(),
            ));
        }
    }
    let values = v
        .get("values")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Malformed("missing values".into()))?;
    let values: Result<Vec<Multivector>> = values
        .iter()
        .map(|x| {
            let repr: MultivectorRepr = serde_json::from_value(x.clone())?;
            Multivector::from_repr(&repr)
        })
        .collect();
    Ok(SphereSignal { m, values: values? })
}

/// Deterministic random band-limited signal from the seed.
pub fn random_signal(ctx: &SphereContext, seed: u64) -> SphereSignal {
    let mut rng = crate::rng::SeededRng::new(seed);
    let mut c = SpectralCoefficients::zero(ctx.m());
    for e in &ctx.basis.elements {
        let dim = (ctx.m() + 1) as u32;
        let mut v = Multivector::zero(dim);
        for b in crate::blade::BladeIndex::all(dim) {
            v.set(
                b,
                crate::scalar::Scalar::from_f64(rng.symmetric(), rng.symmetric()),
            );
        }
        c.set(
            SpecKey {
                degree: e.degree,
                part: e.part,
                label: e.label.clone(),
            },
            v,
        );
    }
    ctx.synthesize(&c).expect("band-limited by construction")
}

// ---------------------------------------------------------------- commands

/// Writes the basis metadata: per-degree dimensions, pivots, labels and the
/// orthogonalized polynomials. Deterministic for a fixed config.
pub fn cmd_basis(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let basis = crate::sphere::MonogenicBasis::build(cfg.m, cfg.max_degree)?;
    let mut dims = BTreeMap::new();
    for k in 0..=cfg.max_degree {
        dims.insert(
            k.to_string(),
            json!({
                "V": basis.dim_of(Part::Inner, k),
                "W": basis.dim_of(Part::Outer, k),
            }),
        );
    }
    let elements: Vec<serde_json::Value> = basis
        .elements
        .iter()
        .map(|e| {
            json!({
                "part": e.part.tag(),
                "degree": e.degree,
                "label": e.label,
                "pivot": serde_json::to_value(e.pivot.to_repr()).unwrap(),
                "poly": serde_json::to_value(e.poly.to_repr()).unwrap(),
            })
        })
        .collect();
    let dropped: Vec<serde_json::Value> = basis
        .dropped
        .iter()
        .map(|(p, k, l)| json!({ "part": p.tag(), "degree": k, "label": l }))
        .collect();
    let doc = json!({
        "m": cfg.m,
        "max_degree": cfg.max_degree,
        "area": sphere_area(cfg.m),
        "dimensions": dims,
        "elements": elements,
        "dropped_dependent": dropped,
    });
    let path = write_output(cfg, "basis.json", &serde_json::to_string_pretty(&doc)?)?;
    println!("basis written to {}", path.display());
    Ok(EXIT_OK)
}

/// Runs the symbolic identity battery; exit 1 when any identity fails.
pub fn cmd_verify(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let vcfg = VerifyConfig {
        max_n: cfg.m.max(3).min(4),
        weight_bound: 4,
        seed: cfg.seed,
        casimir_constant: cfg
            .casimir_constant
            .map(|c| BigRational::from_f64(c).expect("finite constant")),
    };
    let report = verify::run(&vcfg);
    for r in &report.results {
        let status = if r.pass { "pass" } else { "FAIL" };
        println!("[{status}] ({}) {}", r.section, r.identity);
    }
    println!("{} passed, {} failed", report.passed, report.failed);
    let doc = serde_json::to_string_pretty(&report)?;
    if cfg.output.is_some() {
        write_output(cfg, "verify.json", &doc)?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAIL })
}

/// Reads a signal file (or generates a seeded random one), writes its
/// spectral coefficients.
pub fn cmd_analyze(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let ctx = SphereContext::new(cfg.m, cfg.max_degree)?;
    let f = match &cfg.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            signal_from_json(&ctx, &serde_json::from_str(&text)?)?
        }
        None => random_signal(&ctx, cfg.seed),
    };
    let c = ctx.analyze(&f)?;
    let content = match cfg.format {
        OutputFormat::Json => serde_json::to_string_pretty(&coefficients_to_json(&c))?,
        OutputFormat::Csv => coefficients_to_csv(&c),
    };
    let name = match cfg.format {
        OutputFormat::Json => "coefficients.json",
        OutputFormat::Csv => "coefficients.csv",
    };
    let path = write_output(cfg, name, &content)?;
    println!("coefficients written to {}", path.display());
    Ok(EXIT_OK)
}

/// Reads spectral coefficients, writes the synthesized signal.
pub fn cmd_synthesize(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let ctx = SphereContext::new(cfg.m, cfg.max_degree)?;
    let input = cfg
        .input
        .as_ref()
        .ok_or_else(|| Error::Malformed("synthesize needs --in coefficients".into()))?;
    let text = std::fs::read_to_string(input)?;
    let c = coefficients_from_json(&serde_json::from_str(&text)?)?;
    let f = ctx.synthesize(&c)?;
    let path = write_output(
        cfg,
        "signal.json",
        &serde_json::to_string_pretty(&signal_to_json(&ctx, &f))?,
    )?;
    println!("signal written to {}", path.display());
    Ok(EXIT_OK)
}

/// Applies the heat kernel of the chosen profile at time t to the input
/// signal (or to a seeded random one).
pub fn cmd_heat(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let ctx = SphereContext::new(cfg.m, cfg.max_degree)?;
    let profile = cfg.spectral_profile();
    for w in profile.warnings(cfg.max_degree) {
        eprintln!("warning: {w}");
    }
    let f = match &cfg.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            signal_from_json(&ctx, &serde_json::from_str(&text)?)?
        }
        None => random_signal(&ctx, cfg.seed),
    };
    let hk = heat_kernel(&profile, cfg.t, cfg.max_degree)?;
    let evolved = hk.diagonal.apply(&ctx.analyze(&f)?);
    let g = ctx.synthesize(&evolved)?;
    let doc = json!({
        "profile": profile.kind.tag(),
        "t": cfg.t,
        "truncation_bound": hk.truncation_bound,
        "signal": signal_to_json(&ctx, &g),
    });
    let path = write_output(cfg, "heat.json", &serde_json::to_string_pretty(&doc)?)?;
    println!("heat evolution written to {}", path.display());
    Ok(EXIT_OK)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WaveletMode {
    Transform,
    Reconstruct,
    Roundtrip,
}

impl WaveletMode {
    pub fn parse(s: &str) -> Option<WaveletMode> {
        match s {
            "transform" => Some(WaveletMode::Transform),
            "reconstruct" => Some(WaveletMode::Reconstruct),
            "roundtrip" => Some(WaveletMode::Roundtrip),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WaveletFile {
    profile: String,
    family_hash: u64,
    grid: Vec<f64>,
    zero_mode: serde_json::Value,
    coeffs: BTreeMap<String, serde_json::Value>,
}

fn wavelet_to_file(
    family: &WaveletFamily,
    wc: &wavelet::WaveletCoefficients,
) -> Result<WaveletFile> {
    let mut coeffs = BTreeMap::new();
    for (j, sc) in wc.scales.iter().enumerate() {
        coeffs.insert(j.to_string(), coefficients_to_json(sc));
    }
    Ok(WaveletFile {
        profile: family.profile.kind.tag().to_string(),
        family_hash: wc.family_hash,
        grid: family.grid.nodes.clone(),
        zero_mode: coefficients_to_json(&wc.zero_mode),
        coeffs,
    })
}

fn wavelet_from_file(file: &WaveletFile) -> Result<wavelet::WaveletCoefficients> {
    let zero_mode = coefficients_from_json(&file.zero_mode)?;
    let mut scales = Vec::with_capacity(file.coeffs.len());
    for j in 0..file.coeffs.len() {
        let v = file
            .coeffs
            .get(&j.to_string())
            .ok_or_else(|| Error::Malformed(format!("missing scale {j}")))?;
        scales.push(coefficients_from_json(v)?);
    }
    Ok(wavelet::WaveletCoefficients {
        family_hash: file.family_hash,
        scales,
        zero_mode,
    })
}

/// Wavelet pipeline: transform, reconstruct, or a full round trip that
/// reports the relative L2 error and fails above the tolerance.
pub fn cmd_wavelet(cfg: &RunConfig, mode: WaveletMode) -> Result<i32> {
    cfg.validate()?;
    let ctx = SphereContext::new(cfg.m, cfg.max_degree)?;
    let profile = cfg.spectral_profile();
    for w in profile.warnings(cfg.max_degree) {
        eprintln!("warning: {w}");
    }
    let family = WaveletFamily::new(profile, cfg.grid()?, cfg.max_degree);
    match mode {
        WaveletMode::Transform => {
            let f = match &cfg.input {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    signal_from_json(&ctx, &serde_json::from_str(&text)?)?
                }
                None => random_signal(&ctx, cfg.seed),
            };
            let wc = wavelet::transform_signal(&ctx, &f, &family, 1e-8)?;
            let file = wavelet_to_file(&family, &wc)?;
            let path = write_output(cfg, "wavelet.json", &serde_json::to_string_pretty(&file)?)?;
            println!("wavelet coefficients written to {}", path.display());
            Ok(EXIT_OK)
        }
        WaveletMode::Reconstruct => {
            let input = cfg
                .input
                .as_ref()
                .ok_or_else(|| Error::Malformed("reconstruct needs --in wavelet file".into()))?;
            let text = std::fs::read_to_string(input)?;
            let file: WaveletFile = serde_json::from_str(&text)?;
            let wc = wavelet_from_file(&file)?;
            let rec = wavelet::wavelet_reconstruct(&wc, &family, ReconstructionPath::Grid)?;
            let f = ctx.synthesize(&rec)?;
            let path = write_output(
                cfg,
                "reconstructed.json",
                &serde_json::to_string_pretty(&signal_to_json(&ctx, &f))?,
            )?;
            println!("reconstruction written to {}", path.display());
            Ok(EXIT_OK)
        }
        WaveletMode::Roundtrip => {
            let f = match &cfg.input {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    signal_from_json(&ctx, &serde_json::from_str(&text)?)?
                }
                None => random_signal(&ctx, cfg.seed),
            };
            let wc = wavelet::transform_signal(&ctx, &f, &family, 1e-8)?;
            let rec_grid = wavelet::wavelet_reconstruct(&wc, &family, ReconstructionPath::Grid)?;
            let rec_exact =
                wavelet::wavelet_reconstruct(&wc, &family, ReconstructionPath::ClosedForm)?;
            let g = ctx.synthesize(&rec_grid)?;
            let h = ctx.synthesize(&rec_exact)?;
            let err_grid = ctx.relative_l2_error(&g, &f);
            let err_exact = ctx.relative_l2_error(&h, &f);
            // per-degree residual report
            let orig = ctx.analyze(&f)?;
            let mut residuals = BTreeMap::new();
            for k in 0..=cfg.max_degree {
                let mut num = 0.0f64;
                let mut den = 0.0f64;
                for (key, v) in &orig.entries {
                    if key.degree == k {
                        num += rec_grid.get(key).sub(v).norm_sqr();
                        den += v.norm_sqr();
                    }
                }
                residuals.insert(
                    k.to_string(),
                    if den > 0.0 { (num / den).sqrt() } else { 0.0 },
                );
            }
            let doc = json!({
                "profile": family.profile.kind.tag(),
                "relative_l2_error_grid": err_grid,
                "relative_l2_error_closed_form": err_exact,
                "per_degree_residuals": residuals,
                "tolerance": cfg.tol,
            });
            let path = write_output(cfg, "roundtrip.json", &serde_json::to_string_pretty(&doc)?)?;
            println!(
                "roundtrip: grid error {err_grid:.3e}, closed form {err_exact:.3e} -> {}",
                path.display()
            );
            Ok(if err_grid <= cfg.tol { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

/// Tabulates the Spin(m) eigen-system: weights, branches, decay rates, and
/// sampled evaluations.
pub fn cmd_spin_eig(cfg: &RunConfig) -> Result<i32> {
    cfg.validate()?;
    let basis = wavelet::spin::enumerate_spin_basis(cfg.m, 4)?;
    let s = crate::spin::exp_bivector(&crate::spin::Bivector::basis(cfg.m as u32, 0, 1), 0.4)?;
    let rows: Vec<serde_json::Value> = basis
        .iter()
        .map(|e| {
            let val = e.evaluate(&s).expect("evaluable");
            json!({
                "branch": format!("{:?}", e.branch),
                "weight": e.weight.entries(),
                "lambda": e.lambda,
                "sample_value": serde_json::to_value(val.to_repr()).unwrap(),
            })
        })
        .collect();
    let doc = json!({
        "m": cfg.m,
        "sample_element": serde_json::to_value(s.to_repr())?,
        "sample_rotation_csv": crate::spin::rotation_matrix_csv(&s),
        "eigenfunctions": rows,
    });
    let path = write_output(cfg, "spin-eig.json", &serde_json::to_string_pretty(&doc)?)?;
    println!(
        "{} eigenfunctions written to {}",
        basis.len(),
        path.display()
    );
    Ok(EXIT_OK)
}

/// Maps an error to the documented exit code.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Json(_) => EXIT_IO,
        Error::Malformed(_) | Error::Unsupported(_) | Error::IndexOutOfRange(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}
