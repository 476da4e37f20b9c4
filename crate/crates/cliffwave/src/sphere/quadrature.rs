//! Product quadrature on S^m: Gauss-Gegenbauer in each polar angle,
//! uniform trapezoid in the azimuth. Exact for polynomials up to the
//! requested degree; weights sum to the sphere area A_m.

use super::moments::sphere_area;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuadratureRule {
    /// Sphere dimension m; nodes live in R^{m+1}.
    pub m: usize,
    pub nodes: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    /// Polynomial exactness degree.
    pub exactness: usize,
}

impl QuadratureRule {
    pub fn ambient(&self) -> usize {
        self.m + 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates a scalar sample vector.
    pub fn integrate(&self, samples: &[f64]) -> f64 {
        samples
            .iter()
            .zip(&self.weights)
            .map(|(s, w)| s * w)
            .sum()
    }
}

/// Builds the product rule on S^m exact to polynomial degree `degree`.
pub fn build_quadrature(m: usize, degree: usize) -> Result<QuadratureRule> {
    if m < 1 {
        return Err(Error::Unsupported("need m >= 1".into()));
    }
    let q = degree / 2 + 1;
    let n_phi = degree + 1;
    let est = n_phi * q.pow((m - 1) as u32);
    if est > 4_000_000 {
        return Err(Error::ResourceCap(format!(
            "quadrature would need about {est} nodes"
        )));
    }
    // S^1 seed: uniform points, weights 2 pi / N.
    let mut nodes: Vec<Vec<f64>> = (0..n_phi)
        .map(|j| {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            vec![phi.cos(), phi.sin()]
        })
        .collect();
    let mut weights = vec![2.0 * std::f64::consts::PI / n_phi as f64; n_phi];
    // lift S^{s-1} to S^s: x = (t, sqrt(1-t^2) y) with Gauss-Gegenbauer in t
    for s in 2..=m {
        let alpha = (s as f64 - 2.0) / 2.0;
        let (ts, ws) = gauss_gegenbauer(q, alpha);
        let mut new_nodes = Vec::with_capacity(nodes.len() * q);
        let mut new_weights = Vec::with_capacity(nodes.len() * q);
        for (t, wt) in ts.iter().zip(&ws) {
            let r = (1.0 - t * t).sqrt();
            for (y, wy) in nodes.iter().zip(&weights) {
                let mut x = Vec::with_capacity(s + 1);
                x.push(*t);
                x.extend(y.iter().map(|c| c * r));
                new_nodes.push(x);
                new_weights.push(wt * wy);
            }
        }
        nodes = new_nodes;
        weights = new_weights;
    }
    let rule = QuadratureRule {
        m,
        nodes,
        weights,
        exactness: degree,
    };
    let total: f64 = rule.weights.iter().sum();
    let area = sphere_area(m);
    if ((total - area) / area).abs() > 1e-13 {
        return Err(Error::Malformed(format!(
            "quadrature weights sum {total}, expected area {area}"
        )));
    }
    Ok(rule)
}

/// Gauss rule with `q` nodes for the weight (1-t^2)^alpha on [-1, 1],
/// via Golub-Welsch on the Jacobi matrix of the monic recurrence.
pub fn gauss_gegenbauer(q: usize, alpha: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(q >= 1);
    // monic three-term recurrence: a_k = 0,
    // b_k = k(k+2a) / ((2k+2a+1)(2k+2a-1))
    let mut off = Vec::with_capacity(q.saturating_sub(1));
    for k in 1..q {
        let kf = k as f64;
        let b = kf * (kf + 2.0 * alpha)
            / ((2.0 * kf + 2.0 * alpha + 1.0) * (2.0 * kf + 2.0 * alpha - 1.0));
        off.push(b.sqrt());
    }
    let mu0 = std::f64::consts::PI.sqrt() * gamma_ratio_alpha(alpha);
    let (vals, firsts) = symmetric_tridiagonal_eigen(vec![0.0; q], off);
    let mut pairs: Vec<(f64, f64)> = vals
        .into_iter()
        .zip(firsts)
        .map(|(t, z)| (t, mu0 * z * z))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    pairs.into_iter().unzip()
}

/// Gamma(alpha+1) / Gamma(alpha+3/2) for alpha a non-negative multiple of 1/2.
fn gamma_ratio_alpha(alpha: f64) -> f64 {
    gamma_half_steps(alpha + 1.0) / gamma_half_steps(alpha + 1.5)
}

/// Gamma(z) for positive z that is a multiple of 1/2, by upward recurrence
/// from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
fn gamma_half_steps(z: f64) -> f64 {
    let is_half = ((z * 2.0).round() as i64) % 2 != 0;
    let mut v = if is_half {
        std::f64::consts::PI.sqrt()
    } else {
        1.0
    };
    let mut w = if is_half { 0.5 } else { 1.0 };
    while w < z - 1e-9 {
        v *= w;
        w += 1.0;
    }
    v
}

/// Eigenvalues and first eigenvector components of a symmetric tridiagonal
/// matrix, by implicit QL with Wilkinson-style shifts.
pub fn symmetric_tridiagonal_eigen(diag: Vec<f64>, off: Vec<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    let mut d = diag;
    let mut e = off;
    e.push(0.0);
    let mut z = vec![0.0; n];
    if n == 0 {
        return (d, z);
    }
    z[0] = 1.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 60, "tridiagonal QL did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    (d, z)
}
