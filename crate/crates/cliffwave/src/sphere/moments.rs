//! Exact monomial moments over S^m.
//!
//! Every moment is a rational multiple of the sphere area A_m; the rational
//! part is what the exact Gram computations consume, the area only enters
//! numerically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rational part r(beta) of the moment: integral over S^m of x^beta dsigma
/// = r(beta) * A_m, where beta runs over the m+1 ambient coordinates.
/// Zero when any exponent is odd; otherwise
/// prod_i (beta_i - 1)!! / prod_{j=1..|beta|/2} (d + 2j - 2) with d = m+1.
pub fn moment_ratio(beta: &[u16]) -> BigRational {
    if beta.iter().any(|&b| b % 2 == 1) {
        return BigRational::zero();
    }
    let d = beta.len() as i64;
    let mut num = BigInt::one();
    for &b in beta {
        let mut k = b as i64 - 1;
        while k >= 2 {
            num *= k;
            k -= 2;
        }
    }
    let total: i64 = beta.iter().map(|&b| b as i64).sum();
    let mut den = BigInt::one();
    for j in 1..=(total / 2) {
        den *= d + 2 * j - 2;
    }
    BigRational::new(num, den)
}

/// Surface area of the unit sphere S^m in R^{m+1}: 2 pi^{d/2} / Gamma(d/2)
/// with d = m + 1.
pub fn sphere_area(m: usize) -> f64 {
    let d = m + 1;
    let half = d as f64 / 2.0;
    2.0 * std::f64::consts::PI.powf(half) / gamma_half_integer(d)
}

/// Gamma(d/2) for integer d >= 1.
fn gamma_half_integer(d: usize) -> f64 {
    if d.is_multiple_of(2) {
        // (d/2 - 1)!
        let mut v = 1.0;
        for k in 2..(d / 2) {
            v *= k as f64;
        }
        if d / 2 >= 2 {
            v
        } else {
            1.0
        }
    } else {
        // Gamma(1/2) = sqrt(pi); Gamma(z+1) = z Gamma(z)
        let mut v = std::f64::consts::PI.sqrt();
        let mut z = 0.5;
        while z + 1.0 <= d as f64 / 2.0 {
            v *= z;
            z += 1.0;
        }
        v
    }
}
