//! Diffusive wavelets: spectral heat profiles, scale grids, wavelet
//! families, the forward transform and the reconstruction, plus the
//! admissibility bookkeeping.
//!
//! The wavelet weights are w_k(rho) = sqrt(lambda_k) exp(-lambda_k rho / 2),
//! so that the continuous admissibility integral int_t^inf w_k(rho)^2 drho
//! equals exp(-lambda_k t) exactly — the square-root factor is what makes
//! the scale integral reproduce the heat semigroup with unit weight alpha.
//! Modes with lambda = 0 cannot be carried by the wavelet family; they are
//! stored in a separate invariant channel and added back verbatim at
//! reconstruction.

pub mod scale;
pub mod spin;

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::sphere::{Part, SpectralCoefficients, SpectralDiagonal, SphereContext, SphereSignal};
pub use scale::ScaleGrid;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ProfileKind {
    /// Heat flow of the spherical Laplace-Beltrami operator.
    HeatH,
    /// Heat flow of the l-type Casimir (constant shift configurable).
    HeatL,
    /// The modified operator Delta + Gamma: eigenvalue k(k+m) on both parts.
    Modified,
}

impl ProfileKind {
    pub fn tag(&self) -> &'static str {
        match self {
            ProfileKind::HeatH => "heat-h",
            ProfileKind::HeatL => "heat-l",
            ProfileKind::Modified => "modified",
        }
    }

    pub fn from_tag(tag: &str) -> Option<ProfileKind> {
        match tag {
            "heat-h" => Some(ProfileKind::HeatH),
            "heat-l" => Some(ProfileKind::HeatL),
            "modified" => Some(ProfileKind::Modified),
            _ => None,
        }
    }
}

/// Spectral profile of a diffusive generator on S^m: the decay rate
/// lambda >= 0 per part and degree.
#[derive(Clone, Debug)]
pub struct SpectralProfile {
    pub kind: ProfileKind,
    pub m: usize,
    /// Constant shift of the heat-l profile; defaults to the l-Casimir
    /// constant (m+1)m/8 in ambient m+1.
    pub constant: f64,
}

impl SpectralProfile {
    pub fn new(kind: ProfileKind, m: usize) -> Self {
        let constant = (m as f64 + 1.0) * m as f64 / 8.0;
        SpectralProfile { kind, m, constant }
    }

    pub fn with_constant(kind: ProfileKind, m: usize, constant: f64) -> Self {
        SpectralProfile { kind, m, constant }
    }

    /// Raw decay rate before flooring.
    fn lambda_raw(&self, part: Part, k: usize) -> f64 {
        let (k, m) = (k as f64, self.m as f64);
        match self.kind {
            ProfileKind::HeatH => match part {
                Part::Inner => k * (k + m - 1.0),
                Part::Outer => (k + 1.0) * (k + m),
            },
            ProfileKind::HeatL => k * (k + m) + self.constant,
            ProfileKind::Modified => k * (k + m),
        }
    }

    /// Decay rate, floored at zero (a negative configured constant cannot
    /// produce growing modes; the flooring is reported via `warnings`).
    pub fn lambda(&self, part: Part, k: usize) -> f64 {
        self.lambda_raw(part, k).max(0.0)
    }

    pub fn is_zero_mode(&self, part: Part, k: usize) -> bool {
        self.lambda(part, k) == 0.0
    }

    /// Degrees whose raw rate is negative under the configured constant.
    pub fn warnings(&self, max_degree: usize) -> Vec<String> {
        let mut out = Vec::new();
        for k in 0..=max_degree {
            for part in [Part::Inner, Part::Outer] {
                let raw = self.lambda_raw(part, k);
                if raw < 0.0 {
                    out.push(format!(
                        "profile {} floors negative rate {raw:.6} at ({}, k={k})",
                        self.kind.tag(),
                        part.tag()
                    ));
                }
            }
        }
        out
    }
}

/// Heat kernel at time t as a diagonal spectral object, with the reported
/// truncation bound exp(-lambda_{K+1} t) * (dimension growth factor).
pub struct HeatKernel {
    pub diagonal: SpectralDiagonal,
    pub t: f64,
    pub truncation_bound: f64,
}

pub fn heat_kernel(profile: &SpectralProfile, t: f64, max_degree: usize) -> Result<HeatKernel> {
    if t <= 0.0 {
        return Err(Error::Malformed("heat kernel needs t > 0".into()));
    }
    let mut diag = SpectralDiagonal::new(profile.m);
    for k in 0..=max_degree {
        for part in [Part::Inner, Part::Outer] {
            diag.factors
                .insert((part, k), (-profile.lambda(part, k) * t).exp());
        }
    }
    let next = profile
        .lambda(Part::Inner, max_degree + 1)
        .min(profile.lambda(Part::Outer, max_degree + 1));
    let growth = 2.0 * binom(max_degree + profile.m, profile.m - 1) as f64;
    Ok(HeatKernel {
        diagonal: diag,
        t,
        truncation_bound: (-next * t).exp() * growth,
    })
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut v = 1usize;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

/// Report of the semigroup check p_t * p_s == p_{t+s} (spectral domain,
/// via the convolution theorem for zonal kernels).
pub struct SemigroupReport {
    pub max_deviation: f64,
}

pub fn semigroup_check(
    profile: &SpectralProfile,
    t: f64,
    s: f64,
    max_degree: usize,
) -> Result<SemigroupReport> {
    let pt = heat_kernel(profile, t, max_degree)?;
    let ps = heat_kernel(profile, s, max_degree)?;
    let pts = heat_kernel(profile, t + s, max_degree)?;
    let composed = pt.diagonal.compose(&ps.diagonal);
    let mut max_dev = 0.0f64;
    for (key, want) in &pts.diagonal.factors {
        let got = composed.factor(key.0, key.1);
        max_dev = max_dev.max((got - want).abs());
    }
    Ok(SemigroupReport { max_deviation: max_dev })
}

/// A diffusive wavelet family over a scale grid.
#[derive(Clone)]
pub struct WaveletFamily {
    pub profile: SpectralProfile,
    pub grid: ScaleGrid,
    pub max_degree: usize,
}

impl WaveletFamily {
    pub fn new(profile: SpectralProfile, grid: ScaleGrid, max_degree: usize) -> Self {
        WaveletFamily {
            profile,
            grid,
            max_degree,
        }
    }

    /// Spectral weight w_k(rho) = sqrt(lambda) exp(-lambda rho / 2); zero on
    /// the invariant (lambda = 0) modes, which travel separately.
    pub fn weight(&self, part: Part, k: usize, rho: f64) -> f64 {
        let lam = self.profile.lambda(part, k);
        if lam == 0.0 {
            0.0
        } else {
            lam.sqrt() * (-lam * rho / 2.0).exp()
        }
    }

    /// Discrete admissibility sum approximating exp(-lambda t); grid rule
    /// applied to w^2 from scale t upward.
    pub fn admissibility_sum(&self, part: Part, k: usize, t: f64) -> f64 {
        let lam = self.profile.lambda(part, k);
        if lam == 0.0 {
            return 0.0;
        }
        self.grid.integral_from(t, |rho| {
            let w = self.weight(part, k, rho);
            w * w
        })
    }

    /// Exact continuous admissibility: int_t^inf w^2 drho = exp(-lambda t).
    pub fn admissibility_closed_form(&self, part: Part, k: usize, t: f64) -> f64 {
        let lam = self.profile.lambda(part, k);
        if lam == 0.0 {
            0.0
        } else {
            (-lam * t).exp()
        }
    }

    /// Grid-rule reconstruction factor: the head-completed scale quadrature
    /// of w^2 over the whole grid; approaches 1 as the grid refines.
    pub fn reconstruction_factor(&self, part: Part, k: usize) -> f64 {
        let lam = self.profile.lambda(part, k);
        if lam == 0.0 {
            return 0.0;
        }
        // trapezoid head on [0, rho_0] with the limit value w^2(0) = lambda
        let rho0 = self.grid.nodes[0];
        let w0 = self.weight(part, k, rho0);
        let head = 0.5 * (lam + w0 * w0) * rho0;
        head + self.grid.integral_from(0.0, |rho| {
            let w = self.weight(part, k, rho);
            w * w
        })
    }

    /// Worst admissibility defect over all degrees <= K at a given t.
    pub fn admissibility_defect(&self, t: f64) -> f64 {
        let mut worst = 0.0f64;
        for k in 0..=self.max_degree {
            for part in [Part::Inner, Part::Outer] {
                if self.profile.is_zero_mode(part, k) {
                    continue;
                }
                let got = self.admissibility_sum(part, k, t);
                let want = self.admissibility_closed_form(part, k, t);
                worst = worst.max((got - want).abs());
            }
        }
        worst
    }

    /// Stable identifier tying transforms to the family that produced them.
    pub fn hash(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        let mut mix = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.profile.kind.tag().len() as u64);
        for b in self.profile.kind.tag().bytes() {
            mix(b as u64);
        }
        mix(self.profile.m as u64);
        mix(self.profile.constant.to_bits());
        mix(self.max_degree as u64);
        mix(self.grid.nodes.len() as u64);
        mix(self.grid.rho_min.to_bits());
        mix(self.grid.rho_max.to_bits());
        mix(self.grid.ratio.to_bits());
        h
    }
}

/// Forward transform output: per-scale spectral coefficients plus the
/// invariant channel.
pub struct WaveletCoefficients {
    pub family_hash: u64,
    pub scales: Vec<SpectralCoefficients>,
    pub zero_mode: SpectralCoefficients,
}

/// Applies the family to spectral coefficients: scale rho_j carries
/// w_k(rho_j) times the coefficient (the weights are real, so conjugation
/// is trivial).
pub fn wavelet_transform(
    coeffs: &SpectralCoefficients,
    family: &WaveletFamily,
) -> Result<WaveletCoefficients> {
    if coeffs.max_degree() > family.max_degree {
        return Err(Error::BandLimitExceeded(format!(
            "signal reaches degree {}, family built to {}",
            coeffs.max_degree(),
            family.max_degree
        )));
    }
    let mut zero_mode = SpectralCoefficients::zero(coeffs.m);
    for (key, v) in &coeffs.entries {
        if family.profile.is_zero_mode(key.part, key.degree) {
            zero_mode.set(key.clone(), v.clone());
        }
    }
    let scales = family
        .grid
        .nodes
        .iter()
        .map(|&rho| {
            let mut sc = SpectralCoefficients::zero(coeffs.m);
            for (key, v) in &coeffs.entries {
                let w = family.weight(key.part, key.degree, rho);
                if w != 0.0 {
                    sc.set(key.clone(), v.scale(&Scalar::from_f64(w, 0.0)));
                }
            }
            sc
        })
        .collect();
    Ok(WaveletCoefficients {
        family_hash: family.hash(),
        scales,
        zero_mode,
    })
}

/// Which scale integral the reconstruction uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReconstructionPath {
    /// The discrete rule on the grid (defect bounded by the admissibility
    /// defect of the grid).
    Grid,
    /// The exact scale integral (identity on the wavelet range).
    ClosedForm,
}

/// Inverse transform: reassembles spectral coefficients from the per-scale
/// data and adds the invariant channel back.
pub fn wavelet_reconstruct(
    wc: &WaveletCoefficients,
    family: &WaveletFamily,
    path: ReconstructionPath,
) -> Result<SpectralCoefficients> {
    if wc.family_hash != family.hash() {
        return Err(Error::FamilyMismatch(
            "coefficients were produced by a different family".into(),
        ));
    }
    if wc.scales.len() != family.grid.nodes.len() {
        return Err(Error::FamilyMismatch("scale count mismatch".into()));
    }
    let m = family.profile.m;
    let mut out = wc.zero_mode.clone();
    // collect the key set present at any scale
    let mut keys = std::collections::BTreeSet::new();
    for sc in &wc.scales {
        for key in sc.entries.keys() {
            keys.insert(key.clone());
        }
    }
    for key in keys {
        let lam = family.profile.lambda(key.part, key.degree);
        if lam == 0.0 {
            continue;
        }
        let w0 = family.weight(key.part, key.degree, family.grid.nodes[0]);
        let acc = match path {
            ReconstructionPath::ClosedForm => {
                // f_hat = W f(rho_0) / w(rho_0), exact integral equal to one
                wc.scales[0].get(&key).scale(&Scalar::from_f64(1.0 / w0, 0.0))
            }
            ReconstructionPath::Grid => {
                // sum_j c_j alpha_j w(rho_j) Wf(rho_j) + trapezoid head
                let mut acc = Multivector::zero((m + 1) as u32);
                let weights = family.grid.rule_weights(0);
                for (j, (&rho, cw)) in family.grid.nodes.iter().zip(&weights).enumerate() {
                    let w = family.weight(key.part, key.degree, rho);
                    let coeff = cw * family.grid.alpha[j] * w;
                    if coeff != 0.0 {
                        acc = acc.add(&wc.scales[j].get(&key).scale(&Scalar::from_f64(coeff, 0.0)));
                    }
                }
                // head on [0, rho_0]: (lambda f_hat + w(rho_0) Wf(rho_0))/2 * rho_0
                let rho0 = family.grid.nodes[0];
                let fhat0 = wc.scales[0].get(&key).scale(&Scalar::from_f64(1.0 / w0, 0.0));
                let head = fhat0
                    .scale(&Scalar::from_f64(lam, 0.0))
                    .add(&wc.scales[0].get(&key).scale(&Scalar::from_f64(w0, 0.0)))
                    .scale(&Scalar::from_f64(0.5 * rho0, 0.0));
                acc.add(&head)
            }
        };
        out.set(key, acc);
    }
    Ok(out)
}

/// End-to-end transform of a sampled signal: analyze, band-check, forward
/// transform.
pub fn transform_signal(
    ctx: &SphereContext,
    f: &SphereSignal,
    family: &WaveletFamily,
    band_tol: f64,
) -> Result<WaveletCoefficients> {
    ctx.assert_band_limited(f, band_tol)?;
    let coeffs = ctx.analyze(f)?;
    wavelet_transform(&coeffs, family)
}
