//! Analysis and synthesis between sampled and spectral forms, sphere
//! convolution, and the spectral rotation of signals.
//!
//! Coefficients are right-module Clifford coefficients: f = sum_i B_i c_i
//! with c_i = (B_i,B_i)^{-1} (B_i, f). Because the stored basis is exactly
//! module-orthogonal, analysis followed by synthesis is the identity on
//! band-limited signals up to quadrature rounding.

use super::basis::{BasisEvaluation, MonogenicBasis, Part};
use super::moments::sphere_area;
use super::quadrature::{build_quadrature, QuadratureRule};
use super::zonal::unit_zonal;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::spin::{rotation_matrix, SpinElement};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SpecKey {
    pub degree: usize,
    pub part: Part,
    pub label: Vec<u16>,
}

impl SpecKey {
    pub fn to_string_key(&self) -> String {
        let alpha: Vec<String> = self.label.iter().map(|a| a.to_string()).collect();
        format!("{}/{}/{}", self.degree, alpha.join(","), self.part.tag())
    }

    pub fn parse(s: &str) -> Option<SpecKey> {
        let mut it = s.split('/');
        let degree: usize = it.next()?.parse().ok()?;
        let alpha = it.next()?;
        let part = Part::from_tag(it.next()?)?;
        let label: Option<Vec<u16>> = if alpha.is_empty() {
            Some(Vec::new())
        } else {
            alpha.split(',').map(|a| a.parse().ok()).collect()
        };
        Some(SpecKey {
            degree,
            part,
            label: label?,
        })
    }
}

/// Frequency-domain form of a sphere signal.
#[derive(Clone)]
pub struct SpectralCoefficients {
    pub m: usize,
    pub entries: BTreeMap<SpecKey, Multivector>,
}

impl SpectralCoefficients {
    pub fn zero(m: usize) -> Self {
        SpectralCoefficients {
            m,
            entries: BTreeMap::new(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.entries.keys().map(|k| k.degree).max().unwrap_or(0)
    }

    pub fn set(&mut self, key: SpecKey, value: Multivector) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn get(&self, key: &SpecKey) -> Multivector {
        self.entries
            .get(key)
            .cloned()
            .unwrap_or_else(|| Multivector::zero((self.m + 1) as u32))
    }

    pub fn add(&self, rhs: &SpectralCoefficients) -> SpectralCoefficients {
        let mut out = self.clone();
        for (k, v) in &rhs.entries {
            let cur = out.get(k);
            out.set(k.clone(), cur.add(v));
        }
        out
    }

    pub fn scale(&self, s: f64) -> SpectralCoefficients {
        let mut out = SpectralCoefficients::zero(self.m);
        for (k, v) in &self.entries {
            out.set(k.clone(), v.scale(&Scalar::from_f64(s, 0.0)));
        }
        out
    }
}

/// Diagonal spectral object: one real factor per (part, degree). The
/// spectral form of a zonal convolution kernel; heat kernels and wavelet
/// weights live here.
#[derive(Clone, Debug)]
pub struct SpectralDiagonal {
    pub m: usize,
    pub factors: BTreeMap<(Part, usize), f64>,
}

impl SpectralDiagonal {
    pub fn new(m: usize) -> Self {
        SpectralDiagonal {
            m,
            factors: BTreeMap::new(),
        }
    }

    pub fn factor(&self, part: Part, degree: usize) -> f64 {
        *self.factors.get(&(part, degree)).unwrap_or(&0.0)
    }

    /// Convolution of two zonal kernels: factors multiply (the convolution
    /// theorem in the spectral domain).
    pub fn compose(&self, rhs: &SpectralDiagonal) -> SpectralDiagonal {
        let mut out = SpectralDiagonal::new(self.m);
        for (k, a) in &self.factors {
            if let Some(b) = rhs.factors.get(k) {
                out.factors.insert(*k, a * b);
            }
        }
        out
    }

    /// f * kernel in the spectral domain: scales every coefficient of the
    /// matching (part, degree).
    pub fn apply(&self, c: &SpectralCoefficients) -> SpectralCoefficients {
        let mut out = SpectralCoefficients::zero(c.m);
        for (key, v) in &c.entries {
            let f = self.factor(key.part, key.degree);
            if f != 0.0 {
                out.set(key.clone(), v.scale(&Scalar::from_f64(f, 0.0)));
            }
        }
        out
    }

    /// Expansion into per-element coefficients (the serialized heat-kernel
    /// form: the factor on every basis element of that degree and part).
    pub fn to_coefficients(&self, basis: &MonogenicBasis) -> SpectralCoefficients {
        let mut out = SpectralCoefficients::zero(self.m);
        for e in &basis.elements {
            let f = self.factor(e.part, e.degree);
            if f != 0.0 {
                out.set(
                    SpecKey {
                        degree: e.degree,
                        part: e.part,
                        label: e.label.clone(),
                    },
                    Multivector::scalar((self.m + 1) as u32, Scalar::from_f64(f, 0.0)),
                );
            }
        }
        out
    }
}

/// Clifford-valued samples at the quadrature nodes.
#[derive(Clone)]
pub struct SphereSignal {
    pub m: usize,
    pub values: Vec<Multivector>,
}

impl SphereSignal {
    pub fn zero(m: usize, nodes: usize) -> Self {
        SphereSignal {
            m,
            values: vec![Multivector::zero((m + 1) as u32); nodes],
        }
    }

    pub fn sub(&self, rhs: &SphereSignal) -> SphereSignal {
        SphereSignal {
            m: self.m,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

/// A built sphere context: basis, quadrature, and the evaluation cache.
/// Everything here is read-only after construction.
pub struct SphereContext {
    pub basis: MonogenicBasis,
    pub rule: QuadratureRule,
    pub eval: BasisEvaluation,
}

impl SphereContext {
    /// Basis to degree K with a rule exact to 2K+2 (products of two
    /// outer restrictions reach degree 2K+2).
    pub fn new(m: usize, max_degree: usize) -> Result<SphereContext> {
        Self::with_exactness(m, max_degree, 2 * max_degree + 2)
    }

    pub fn with_exactness(m: usize, max_degree: usize, exactness: usize) -> Result<SphereContext> {
        if exactness < 2 * max_degree + 2 {
            return Err(Error::QuadratureInsufficient {
                have: exactness,
                need: 2 * max_degree + 2,
            });
        }
        let basis = MonogenicBasis::build(m, max_degree)?;
        let rule = build_quadrature(m, exactness)?;
        let eval = basis.evaluate(&rule);
        Ok(SphereContext { basis, rule, eval })
    }

    pub fn m(&self) -> usize {
        self.basis.m
    }

    pub fn max_degree(&self) -> usize {
        self.basis.max_degree
    }

    /// L2 inner products against every basis element; coefficients are the
    /// right-module coefficients of the expansion.
    pub fn analyze(&self, f: &SphereSignal) -> Result<SpectralCoefficients> {
        if f.values.len() != self.rule.len() {
            return Err(Error::Malformed(
                "signal sampled on a different node set".into(),
            ));
        }
        if self.rule.exactness < 2 * self.basis.max_degree + 2 {
            return Err(Error::QuadratureInsufficient {
                have: self.rule.exactness,
                need: 2 * self.basis.max_degree + 2,
            });
        }
        let mut out = SpectralCoefficients::zero(self.m());
        for (i, e) in self.basis.elements.iter().enumerate() {
            let mut acc = Multivector::zero((self.m() + 1) as u32);
            for ((bval, fval), w) in self.eval.values[i]
                .iter()
                .zip(&f.values)
                .zip(&self.rule.weights)
            {
                acc = acc.add(&bval.bar().mul(fval).scale(&Scalar::from_f64(*w, 0.0)));
            }
            let c = self.eval.normalizer_inv[i].mul(&acc);
            out.set(
                SpecKey {
                    degree: e.degree,
                    part: e.part,
                    label: e.label.clone(),
                },
                c,
            );
        }
        Ok(out)
    }

    /// Evaluates the expansion at the quadrature nodes.
    pub fn synthesize(&self, c: &SpectralCoefficients) -> Result<SphereSignal> {
        if c.max_degree() > self.basis.max_degree {
            return Err(Error::BandLimitExceeded(format!(
                "coefficients reach degree {}, basis holds {}",
                c.max_degree(),
                self.basis.max_degree
            )));
        }
        let mut values = vec![Multivector::zero((self.m() + 1) as u32); self.rule.len()];
        for (i, e) in self.basis.elements.iter().enumerate() {
            let key = SpecKey {
                degree: e.degree,
                part: e.part,
                label: e.label.clone(),
            };
            if let Some(coef) = c.entries.get(&key) {
                for (v, bval) in values.iter_mut().zip(&self.eval.values[i]) {
                    *v = v.add(&bval.mul(coef));
                }
            }
        }
        Ok(SphereSignal {
            m: self.m(),
            values,
        })
    }

    /// Evaluates the expansion at an arbitrary point of the sphere.
    pub fn synthesize_at(&self, c: &SpectralCoefficients, point: &[f64]) -> Multivector {
        let area = sphere_area(self.m());
        let mut out = Multivector::zero((self.m() + 1) as u32);
        for e in &self.basis.elements {
            let key = SpecKey {
                degree: e.degree,
                part: e.part,
                label: e.label.clone(),
            };
            if let Some(coef) = c.entries.get(&key) {
                let scale = match e.part {
                    Part::Inner => 1.0,
                    Part::Outer => 1.0 / area,
                };
                let bval = e
                    .poly
                    .eval_f64(std::slice::from_ref(&point.to_vec()))
                    .scale(&Scalar::from_f64(scale, 0.0));
                out = out.add(&bval.mul(coef));
            }
        }
        out
    }

    pub fn l2_inner(&self, f: &SphereSignal, g: &SphereSignal) -> f64 {
        f.values
            .iter()
            .zip(&g.values)
            .zip(&self.rule.weights)
            .map(|((a, b), w)| a.bar().mul(b).scalar_part().to_approx().re * w)
            .sum()
    }

    pub fn l2_norm(&self, f: &SphereSignal) -> f64 {
        self.l2_inner(f, f).max(0.0).sqrt()
    }

    pub fn relative_l2_error(&self, got: &SphereSignal, want: &SphereSignal) -> f64 {
        let denom = self.l2_norm(want);
        if denom == 0.0 {
            self.l2_norm(got)
        } else {
            self.l2_norm(&got.sub(want)) / denom
        }
    }

    /// Parseval right-hand side: sum_i [bar(c_i) (B_i,B_i) c_i]_0 with the
    /// true numeric Gram pivots.
    pub fn coefficient_energy(&self, c: &SpectralCoefficients) -> f64 {
        let area = sphere_area(self.m());
        let mut total = 0.0;
        for e in &self.basis.elements {
            let key = SpecKey {
                degree: e.degree,
                part: e.part,
                label: e.label.clone(),
            };
            if let Some(coef) = c.entries.get(&key) {
                let scale = match e.part {
                    Part::Inner => area,
                    Part::Outer => 1.0 / area,
                };
                let g = coef
                    .bar()
                    .mul(&e.pivot.to_approx())
                    .mul(coef)
                    .scalar_part()
                    .to_approx()
                    .re;
                total += g * scale;
            }
        }
        total
    }

    /// Rejects signals with energy beyond the constructed basis.
    pub fn assert_band_limited(&self, f: &SphereSignal, tol: f64) -> Result<()> {
        let c = self.analyze(f)?;
        let back = self.synthesize(&c)?;
        let rel = self.relative_l2_error(&back, f);
        if rel > tol {
            Err(Error::BandLimitExceeded(format!(
                "out-of-band residual {rel:.3e} exceeds {tol:.1e}"
            )))
        } else {
            Ok(())
        }
    }

    /// The H or L action on a signal by spectral resampling: analyze, then
    /// evaluate at rotated nodes and act on the values.
    pub fn rotate_signal(
        &self,
        s: &SpinElement,
        f: &SphereSignal,
        mode: RotateMode,
    ) -> Result<SphereSignal> {
        if s.dim() as usize != self.m() + 1 {
            return Err(Error::DimensionMismatch(s.dim(), (self.m() + 1) as u32));
        }
        let c = self.analyze(f)?;
        let r = rotation_matrix(s);
        let n = self.m() + 1;
        let sinv = s.inverse();
        let values = self
            .rule
            .nodes
            .iter()
            .map(|x| {
                // s^{-1} x s has coordinates R^T x
                let y: Vec<f64> = (0..n)
                    .map(|i| (0..n).map(|j| r[j][i] * x[j]).sum())
                    .collect();
                let v = self.synthesize_at(&c, &y);
                match mode {
                    RotateMode::H => s.as_multivector().mul(&v).mul(sinv.as_multivector()),
                    RotateMode::L => s.as_multivector().mul(&v),
                }
            })
            .collect();
        Ok(SphereSignal {
            m: self.m(),
            values,
        })
    }

    /// The sphere convolution (f * h)(xi; omega) in closed spectral form:
    /// sum_i bar(f_i) d_i h_i Z_deg(<xi, omega>), where d_i is the true
    /// Gram pivot and Z_deg the unit zonal of the element's polynomial
    /// degree. This is the Fourier side of the group integral
    /// int bar(f(g xi)) h(g omega) dg.
    pub fn convolution_two_point(
        &self,
        fc: &SpectralCoefficients,
        hc: &SpectralCoefficients,
        xi: &[f64],
        omega: &[f64],
    ) -> Multivector {
        let area = sphere_area(self.m());
        let t: f64 = xi.iter().zip(omega).map(|(a, b)| a * b).sum();
        let mut out = Multivector::zero((self.m() + 1) as u32);
        for e in &self.basis.elements {
            let key = SpecKey {
                degree: e.degree,
                part: e.part,
                label: e.label.clone(),
            };
            let (cf, ch) = (fc.entries.get(&key), hc.entries.get(&key));
            if let (Some(cf), Some(ch)) = (cf, ch) {
                // true Gram is pivot*A (inner) or pivot/A (outer); the unit
                // zonal carries 1/A, so the net scales are 1 and 1/A^2
                let (scale, poly_deg) = match e.part {
                    Part::Inner => (1.0, e.degree),
                    Part::Outer => (1.0 / (area * area), e.degree + 1),
                };
                let z = unit_zonal(self.m(), poly_deg, t) * scale;
                let term = cf
                    .bar()
                    .mul(&e.pivot.to_approx())
                    .mul(ch)
                    .scale(&Scalar::from_f64(z, 0.0));
                out = out.add(&term);
            }
        }
        out
    }

    /// Direct rotation-quadrature oracle for the sphere convolution on S^2:
    /// integrates bar(f(g xi)) h(g omega) over SO(3) with a product rule in
    /// Euler angles. Exact for band-limits within the sampling.
    pub fn convolution_direct_so3(
        &self,
        fc: &SpectralCoefficients,
        hc: &SpectralCoefficients,
        xi: &[f64],
        omega: &[f64],
        band: usize,
    ) -> Result<Multivector> {
        if self.m() != 2 {
            return Err(Error::Unsupported("direct oracle implemented on S^2".into()));
        }
        let n_uni = 4 * band + 2;
        let (tbeta, wbeta) = super::quadrature::gauss_gegenbauer(2 * band + 2, 0.0);
        let mut acc = Multivector::zero(3);
        let rot_z = |c: f64, s: f64, v: &[f64]| -> Vec<f64> {
            vec![c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]]
        };
        let rot_y = |c: f64, s: f64, v: &[f64]| -> Vec<f64> {
            vec![c * v[0] + s * v[2], v[1], -s * v[0] + c * v[2]]
        };
        let mut total_w = 0.0;
        for ia in 0..n_uni {
            let alpha = 2.0 * std::f64::consts::PI * ia as f64 / n_uni as f64;
            let (ca, sa) = (alpha.cos(), alpha.sin());
            for (tb, wb) in tbeta.iter().zip(&wbeta) {
                let sb = (1.0 - tb * tb).sqrt();
                for ig in 0..n_uni {
                    let gamma = 2.0 * std::f64::consts::PI * ig as f64 / n_uni as f64;
                    let (cg, sg) = (gamma.cos(), gamma.sin());
                    // g = Rz(alpha) Ry(beta) Rz(gamma)
                    let apply = |v: &[f64]| -> Vec<f64> {
                        let v = rot_z(cg, sg, v);
                        let v = rot_y(*tb, sb, &v);
                        rot_z(ca, sa, &v)
                    };
                    let w = wb / (n_uni as f64 * n_uni as f64) / 2.0;
                    total_w += w;
                    let fxi = self.synthesize_at(fc, &apply(xi));
                    let hom = self.synthesize_at(hc, &apply(omega));
                    acc = acc.add(&fxi.bar().mul(&hom).scale(&Scalar::from_f64(w, 0.0)));
                }
            }
        }
        debug_assert!((total_w - 1.0).abs() < 1e-12);
        Ok(acc)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RotateMode {
    H,
    L,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    pub fn random_coefficients(
        rng: &mut SeededRng,
        ctx: &SphereContext,
    ) -> SpectralCoefficients {
        let mut c = SpectralCoefficients::zero(ctx.m());
        for e in &ctx.basis.elements {
            let dim = (ctx.m() + 1) as u32;
            let mut v = Multivector::zero(dim);
            for b in crate::blade::BladeIndex::all(dim) {
                v.set(b, Scalar::from_f64(rng.symmetric(), rng.symmetric()));
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
        c
    }

    #[test]
    fn analyze_of_basis_element_is_a_unit_coefficient() {
        let ctx = SphereContext::new(2, 2).unwrap();
        // pick an element, synthesize its unit coefficient, analyze back
        let e = &ctx.basis.elements[3];
        let key = SpecKey {
            degree: e.degree,
            part: e.part,
            label: e.label.clone(),
        };
        let mut c = SpectralCoefficients::zero(2);
        c.set(key.clone(), Multivector::one(3));
        let f = ctx.synthesize(&c).unwrap();
        let back = ctx.analyze(&f).unwrap();
        for (k, v) in &back.entries {
            if *k == key {
                assert!(v.sub(&Multivector::one(3)).norm() < 1e-12);
            } else {
                assert!(v.norm() < 1e-12, "leak into {k:?}: {}", v.norm());
            }
        }
    }

    #[test]
    fn analyze_of_zero_is_zero() {
        let ctx = SphereContext::new(2, 1).unwrap();
        let f = SphereSignal::zero(2, ctx.rule.len());
        let c = ctx.analyze(&f).unwrap();
        assert!(c.entries.values().all(|v| v.norm() < 1e-14));
    }

    #[test]
    fn round_trip_on_random_band_limited_signal() {
        let mut rng = SeededRng::new(4);
        let ctx = SphereContext::new(2, 4).unwrap();
        let c = random_coefficients(&mut rng, &ctx);
        let f = ctx.synthesize(&c).unwrap();
        let c2 = ctx.analyze(&f).unwrap();
        let f2 = ctx.synthesize(&c2).unwrap();
        assert!(ctx.relative_l2_error(&f2, &f) < 1e-12);
    }

    #[test]
    fn parseval_identity() {
        let mut rng = SeededRng::new(9);
        let ctx = SphereContext::new(2, 3).unwrap();
        let c = random_coefficients(&mut rng, &ctx);
        let f = ctx.synthesize(&c).unwrap();
        let lhs = ctx.l2_inner(&f, &f);
        let rhs = ctx.coefficient_energy(&ctx.analyze(&f).unwrap());
        assert!(
            ((lhs - rhs) / lhs).abs() < 1e-10,
            "Parseval: {lhs} vs {rhs}"
        );
    }

    #[test]
    fn rotation_is_unitary_and_invertible() {
        let mut rng = SeededRng::new(10);
        let ctx = SphereContext::new(2, 3).unwrap();
        let c = random_coefficients(&mut rng, &ctx);
        let f = ctx.synthesize(&c).unwrap();
        let s = crate::spin::exp_bivector(
            &crate::spin::Bivector::basis(3, 0, 2),
            0.37,
        )
        .unwrap();
        // identity rotation fixes the signal
        let id = SpinElement::identity(3);
        let same = ctx.rotate_signal(&id, &f, RotateMode::H).unwrap();
        assert!(ctx.relative_l2_error(&same, &f) < 1e-10);
        // unitarity
        let g = ctx.rotate_signal(&s, &f, RotateMode::H).unwrap();
        assert!((ctx.l2_norm(&g) - ctx.l2_norm(&f)).abs() / ctx.l2_norm(&f) < 1e-10);
        // inverse undoes
        let back = ctx.rotate_signal(&s.inverse(), &g, RotateMode::H).unwrap();
        assert!(ctx.relative_l2_error(&back, &f) < 1e-10);
    }

    #[test]
    fn band_limit_rejection() {
        // a degree-3 signal analyzed in a degree-2 context leaves residual
        let ctx3 = SphereContext::new(2, 3).unwrap();
        let ctx2 = SphereContext::with_exactness(2, 2, ctx3.rule.exactness).unwrap();
        let e = ctx3
            .basis
            .elements
            .iter()
            .find(|e| e.degree == 3 && e.part == Part::Inner)
            .unwrap();
        let mut c = SpectralCoefficients::zero(2);
        c.set(
            SpecKey {
                degree: 3,
                part: Part::Inner,
                label: e.label.clone(),
            },
            Multivector::one(3),
        );
        let f = ctx3.synthesize(&c).unwrap();
        // same node count by construction (same exactness)
        assert_eq!(ctx2.rule.len(), ctx3.rule.len());
        assert!(ctx2.assert_band_limited(&f, 1e-6).is_err());
        assert!(ctx3.assert_band_limited(&f, 1e-10).is_ok());
    }
}
