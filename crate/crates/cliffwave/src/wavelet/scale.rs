//! Geometric scale grids and the discrete scale integral.
//!
//! Nodes are rho_min * ratio^j up to rho_max — equally spaced in log scale,
//! which resolves both the fine and the coarse end of exp(-lambda rho). The
//! integral rule is composite Simpson in the log variable (one trapezoid
//! segment when the interval count is odd), with the partial segment at an
//! interior lower limit handled by the quadratic through the three nearest
//! nodes.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ScaleGrid {
    pub rho_min: f64,
    pub rho_max: f64,
    pub ratio: f64,
    pub nodes: Vec<f64>,
    /// Per-node weight alpha(rho) of the admissibility measure; all ones by
    /// default.
    pub alpha: Vec<f64>,
}

impl ScaleGrid {
    pub fn new(rho_min: f64, rho_max: f64, ratio: f64) -> Result<ScaleGrid> {
        if !(rho_min > 0.0 && rho_max > rho_min && ratio > 1.0) {
            return Err(Error::Malformed(
                "scale grid needs 0 < rho_min < rho_max and ratio > 1".into(),
            ));
        }
        let mut nodes = Vec::new();
        let mut r = rho_min;
        while r <= rho_max * (1.0 + 1e-12) {
            nodes.push(r);
            r *= ratio;
        }
        if nodes.len() < 4 {
            return Err(Error::Malformed("scale grid too coarse".into()));
        }
        let alpha = vec![1.0; nodes.len()];
        Ok(ScaleGrid {
            rho_min,
            rho_max,
            ratio,
            nodes,
            alpha,
        })
    }

    /// The stock grid: [1e-3, 20] at ratio 1.05, resolving both ends of
    /// exp(-lambda rho) for rates up to a few hundred.
    pub fn default_grid() -> ScaleGrid {
        ScaleGrid::new(1e-3, 20.0, 1.05).expect("default grid is valid")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Quadrature weights (in the rho measure) of the composite rule
    /// starting at node `j0`: integral over [rho_{j0}, rho_max] of F drho
    /// is approximately sum_j weights[j] F(rho_j) over j >= j0. Entries
    /// below j0 are zero.
    pub fn rule_weights(&self, j0: usize) -> Vec<f64> {
        let n = self.nodes.len();
        let h = self.ratio.ln();
        let mut w = vec![0.0; n];
        if j0 + 1 >= n {
            return w;
        }
        // Simpson pairs in the log variable; integrand picks up the factor
        // rho from the substitution u = ln rho.
        let mut j = j0;
        while j + 2 < n {
            w[j] += h / 3.0;
            w[j + 1] += 4.0 * h / 3.0;
            w[j + 2] += h / 3.0;
            j += 2;
        }
        if j + 1 < n {
            w[j] += h / 2.0;
            w[j + 1] += h / 2.0;
        }
        for (wi, rho) in w.iter_mut().zip(&self.nodes) {
            *wi *= rho;
        }
        w
    }

    /// Discrete integral of F over [t, rho_max] using the grid rule; t at
    /// or below the first node integrates the whole grid.
    pub fn integral_from(&self, t: f64, f: impl Fn(f64) -> f64) -> f64 {
        let n = self.nodes.len();
        if t <= self.nodes[0] {
            let w = self.rule_weights(0);
            return (0..n).map(|j| w[j] * self.alpha[j] * f(self.nodes[j])).sum();
        }
        let j0 = match self.nodes.iter().position(|&r| r >= t) {
            Some(j) => j,
            None => return 0.0,
        };
        let w = self.rule_weights(j0);
        let mut acc: f64 = (j0..n).map(|j| w[j] * self.alpha[j] * f(self.nodes[j])).sum();
        // partial segment [t, rho_j0]: quadratic through nodes j0-1, j0, j0+1
        // in the log variable (j0 >= 1 here)
        if j0 >= 1 && j0 + 1 < n {
            let h = self.ratio.ln();
            let g = |j: usize| self.nodes[j] * self.alpha[j] * f(self.nodes[j]);
            let (gm, g0, gp) = (g(j0 - 1), g(j0), g(j0 + 1));
            let c1 = (gp - gm) / 2.0;
            let c2 = (gp - 2.0 * g0 + gm) / 2.0;
            let s0 = (t.ln() - self.nodes[j0].ln()) / h; // in [-1, 0]
            acc += h * (-g0 * s0 - c1 * s0 * s0 / 2.0 - c2 * s0 * s0 * s0 / 3.0);
        } else if j0 >= 1 {
            // trapezoid fallback at the very top of the grid
            let ft = {
                let a = self.nodes[j0 - 1];
                let b = self.nodes[j0];
                let fa = f(a) * self.alpha[j0 - 1];
                let fb = f(b) * self.alpha[j0];
                fa + (fb - fa) * (t - a) / (b - a)
            };
            acc += 0.5 * (ft + f(self.nodes[j0]) * self.alpha[j0]) * (self.nodes[j0] - t);
        }
        acc
    }
}
