//! Gegenbauer polynomials and the zonal monogenic kernels.

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Gegenbauer (ultraspherical) polynomial C_k^lambda(t) by the three-term
/// recurrence (k+1) C_{k+1} = 2(k+lambda) t C_k - (k+2lambda-1) C_{k-1}.
pub fn gegenbauer(k: usize, lambda: f64, t: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * t;
    for j in 1..k {
        let jf = j as f64;
        let next = (2.0 * (jf + lambda) * t * cur - (jf + 2.0 * lambda - 1.0) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Unit-normalized scalar zonal of degree k on S^m:
/// C_k^{(m-1)/2}(t) / C_k^{(m-1)/2}(1).
pub fn unit_zonal(m: usize, k: usize, t: f64) -> f64 {
    let lambda = (m as f64 - 1.0) / 2.0;
    gegenbauer(k, lambda, t) / gegenbauer(k, lambda, 1.0)
}

/// The outer zonal kernel C^-_{m+1,k}(omega, xi) of the displayed Gegenbauer
/// formula:
/// ((k+1) C^{(m-1)/2}_{k+1}(t)
///   + (1-m) C^{(m+1)/2}_k(t) ((xi_0 w - w_0 x) e_0 + w ^ x)) / (m-1),
/// where w, x are the components of omega, xi orthogonal to e_0 and
/// t = <omega, xi>.
pub fn zonal_minus(m: usize, omega: &[f64], xi: &[f64]) -> Result<Multivector> {
    if m < 2 {
        return Err(Error::Unsupported("zonal kernels need m >= 2".into()));
    }
    zonal_minus_degree(m, 0, omega, xi)
}

/// Degree-k variant of the C^- kernel.
pub fn zonal_minus_degree(m: usize, k: usize, omega: &[f64], xi: &[f64]) -> Result<Multivector> {
    if m < 2 {
        return Err(Error::Unsupported("zonal kernels need m >= 2".into()));
    }
    let dim = (m + 1) as u32;
    let t: f64 = omega.iter().zip(xi).map(|(a, b)| a * b).sum();
    let c1 = (k as f64 + 1.0) * gegenbauer(k + 1, (m as f64 - 1.0) / 2.0, t);
    let c2 = (1.0 - m as f64) * gegenbauer(k, (m as f64 + 1.0) / 2.0, t);
    // (xi_0 underline(omega) - omega_0 underline(xi)) e_0 + w ^ x as a bivector
    let mut biv = Multivector::zero(dim);
    let e0 = Multivector::generator(dim, 0);
    let mut tangent = Multivector::zero(dim);
    for a in 1..=m {
        let coef = xi[0] * omega[a] - omega[0] * xi[a];
        tangent = tangent.add(&Multivector::generator(dim, a as u32).scale(&Scalar::from_f64(coef, 0.0)));
    }
    biv = biv.add(&tangent.mul(&e0));
    let w_under = Multivector::vector_f64(dim, &{
        let mut v = omega.to_vec();
        v[0] = 0.0;
        v
    });
    let x_under = Multivector::vector_f64(dim, &{
        let mut v = xi.to_vec();
        v[0] = 0.0;
        v
    });
    biv = biv.add(&w_under.wedge(&x_under));
    let out = Multivector::scalar(dim, Scalar::from_f64(c1, 0.0))
        .add(&biv.scale(&Scalar::from_f64(c2, 0.0)))
        .scale(&Scalar::from_f64(1.0 / (m as f64 - 1.0), 0.0));
    Ok(out)
}

/// The inner kernel recovered from the displayed relation
/// C^- bar(xi) = C^+ bar(omega), using bar(omega) bar(omega) = -1 on unit
/// vectors: C^+ = - C^- bar(xi) bar(omega).
pub fn zonal_plus_degree(m: usize, k: usize, omega: &[f64], xi: &[f64]) -> Result<Multivector> {
    let cm = zonal_minus_degree(m, k, omega, xi)?;
    let dim = (m + 1) as u32;
    let bxi = Multivector::vector_f64(dim, xi).bar();
    let bom = Multivector::vector_f64(dim, omega).bar();
    Ok(cm.mul(&bxi).mul(&bom).neg())
}
