//! Spherical monogenic generators: Cauchy-Kovalevskaya extensions (the
//! inner family) and derivatives of the Cauchy kernel (the outer family).
//!
//! Ambient coordinates are x_0,...,x_m with generators e_0,...,e_m of
//! Cl_{m+1}; the CK extension runs in the x_0 direction and its multi-index
//! ranges over x_1..x_m. The outer family differentiates the kernel
//! bar(x)/|x|^{m+1}; its multi-index ranges over all m+1 coordinates. On
//! the sphere the outer functions reduce to polynomials of degree |alpha|+1
//! carrying an implicit 1/A_m which the numeric layer applies.

use crate::multivector::Multivector;
use crate::poly::diffops::dirac;
use crate::poly::{CliffordPolynomial, VarSystem};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// x^alpha / alpha! as a one-vector-variable polynomial over m+1 ambient
/// coordinates; alpha indexes x_1..x_m.
fn seed_polynomial(m: usize, alpha: &[u16]) -> CliffordPolynomial {
    assert_eq!(alpha.len(), m);
    let sys = VarSystem::new(1, m + 1);
    let mut p = CliffordPolynomial::one(sys);
    let mut fact = BigInt::one();
    for (i, &a) in alpha.iter().enumerate() {
        for _ in 0..a {
            p = p.mul(&CliffordPolynomial::coordinate(sys, 0, i + 1));
        }
        let mut f = BigInt::one();
        for j in 2..=(a as u64) {
            f *= j;
        }
        fact *= f;
    }
    p.scale(&Scalar::from_rational(
        BigRational::new(BigInt::one(), fact),
        BigRational::from_integer(0.into()),
    ))
}

/// One application of bar(e_0) d_xi = -e_0 sum_{l>=1} e_l d_l.
fn ck_step(p: &CliffordPolynomial, m: usize) -> CliffordPolynomial {
    let sys = p.system();
    let dim = (m + 1) as u32;
    let e0 = Multivector::generator(dim, 0);
    let mut out = CliffordPolynomial::zero(sys);
    for l in 1..=m {
        let el = Multivector::generator(dim, l as u32);
        out = out.add(&p.partial(0, l).mul_const_left(&e0.neg().mul(&el)));
    }
    out
}

/// CK extension V_alpha = sum_j ((-1)^j x_0^j / j!) (bar(e_0) d_xi)^j of
/// x^alpha/alpha!; homogeneous of degree |alpha| and monogenic for the full
/// (m+1)-dimensional Dirac operator.
pub fn ck_extension(m: usize, alpha: &[u16]) -> CliffordPolynomial {
    let sys = VarSystem::new(1, m + 1);
    let total: u32 = alpha.iter().map(|&a| a as u32).sum();
    let mut term = seed_polynomial(m, alpha);
    let mut out = term.clone();
    let mut fact = BigInt::one();
    for j in 1..=total {
        term = ck_step(&term, m);
        if term.is_zero() {
            break;
        }
        fact *= j;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let coeff = Scalar::from_rational(
            BigRational::new(BigInt::from(sign), fact.clone()),
            BigRational::from_integer(0.into()),
        );
        let mut x0j = CliffordPolynomial::one(sys);
        for _ in 0..j {
            x0j = x0j.mul_coordinate(0, 0);
        }
        out = out.add(&term.mul(&x0j).scale(&coeff));
    }
    out
}

/// A Clifford-valued rational kernel num(x)/|x|^pow.
#[derive(Clone, Debug)]
pub struct RationalKernel {
    pub num: CliffordPolynomial,
    pub pow: u32,
}

impl RationalKernel {
    /// The Cauchy kernel bar(x)/|x|^{m+1} (the 1/A_m factor is external).
    pub fn cauchy(m: usize) -> Self {
        let sys = VarSystem::new(1, m + 1);
        RationalKernel {
            num: CliffordPolynomial::vector_variable(sys, 0).neg(),
            pow: (m + 1) as u32,
        }
    }

    /// d/dx_a of num/|x|^pow = (d_a num |x|^2 - pow x_a num) / |x|^{pow+2}.
    pub fn partial(&self, a: usize) -> Self {
        let sys = self.num.system();
        let mut r2 = CliffordPolynomial::zero(sys);
        for c in 0..sys.n {
            r2 = r2.add(&CliffordPolynomial::coordinate(sys, 0, c).pow(2));
        }
        let num = self
            .num
            .partial(0, a)
            .mul(&r2)
            .sub(&self.num.mul_coordinate(0, a).scale_int(self.pow as i64));
        RationalKernel {
            num,
            pow: self.pow + 2,
        }
    }

    /// Restriction to the unit sphere: just the numerator polynomial.
    pub fn restrict(&self) -> CliffordPolynomial {
        self.num.clone()
    }
}

/// Sphere restriction of the outer generator W_alpha, up to the 1/A_m
/// factor: (-1)^{|alpha|} d^alpha applied to the Cauchy kernel, numerator
/// taken at |x| = 1. The result is homogeneous of degree |alpha| + 1.
pub fn outer_generator(m: usize, alpha: &[u16]) -> CliffordPolynomial {
    assert_eq!(alpha.len(), m + 1);
    let mut k = RationalKernel::cauchy(m);
    let mut total = 0u32;
    for (a, &cnt) in alpha.iter().enumerate() {
        for _ in 0..cnt {
            k = k.partial(a);
            total += 1;
        }
    }
    let p = k.restrict();
    if total.is_multiple_of(2) {
        p
    } else {
        p.neg()
    }
}

/// Full Dirac operator on the one-variable ambient system.
pub fn ambient_dirac(p: &CliffordPolynomial) -> CliffordPolynomial {
    dirac(p, 0).expect("one-variable system")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::diffops::{casimir_h, gamma, laplacian};

    #[test]
    fn ck_of_zero_index_is_one() {
        let p = ck_extension(2, &[0, 0]);
        assert_eq!(p, CliffordPolynomial::one(VarSystem::new(1, 3)));
    }

    #[test]
    fn ck_of_first_coordinate() {
        // alpha = (1, 0): x_1 + x_0 e_0 e_1
        let m = 2;
        let sys = VarSystem::new(1, 3);
        let p = ck_extension(m, &[1, 0]);
        let e01 = Multivector::generator(3, 0).mul(&Multivector::generator(3, 1));
        let want = CliffordPolynomial::coordinate(sys, 0, 1)
            .add(&CliffordPolynomial::coordinate(sys, 0, 0).mul_const_left(&e01));
        assert_eq!(p, want);
    }

    #[test]
    fn ck_extensions_are_monogenic_and_homogeneous() {
        for m in [2usize, 3] {
            let idx: Vec<Vec<u16>> = match m {
                2 => vec![vec![2, 0], vec![1, 1], vec![3, 1], vec![0, 4]],
                _ => vec![vec![2, 0, 0], vec![1, 1, 1], vec![0, 2, 1]],
            };
            for alpha in idx {
                let p = ck_extension(m, &alpha);
                let k: u32 = alpha.iter().map(|&a| a as u32).sum();
                assert!(p.is_multihomogeneous(&[k]));
                assert!(
                    ambient_dirac(&p).is_zero(),
                    "CK extension not monogenic for alpha {alpha:?}"
                );
            }
        }
    }

    #[test]
    fn gamma_eigenvalue_on_ck() {
        // inner monogenics: Gamma V = -k V
        let p = ck_extension(2, &[2, 1]);
        assert_eq!(gamma(&p, 0).unwrap(), p.scale_int(-3));
    }

    #[test]
    fn cauchy_kernel_is_monogenic_and_harmonic() {
        for m in [2usize, 3] {
            let k = RationalKernel::cauchy(m);
            // Dirac of num/|x|^pow has numerator
            // (dirac num) |x|^2 - pow * x * num over |x|^{pow+2}
            let sys = k.num.system();
            let mut r2 = CliffordPolynomial::zero(sys);
            for c in 0..sys.n {
                r2 = r2.add(&CliffordPolynomial::coordinate(sys, 0, c).pow(2));
            }
            let x = CliffordPolynomial::vector_variable(sys, 0);
            let dnum = ambient_dirac(&k.num)
                .mul(&r2)
                .sub(&x.mul(&k.num).scale_int(k.pow as i64));
            assert!(dnum.is_zero(), "Cauchy kernel not monogenic for m={m}");
        }
    }

    #[test]
    fn outer_generator_base_case() {
        // alpha = 0: bar(xi) = -xi on the sphere (1/A_m applied numerically)
        let m = 2;
        let w0 = outer_generator(m, &[0, 0, 0]);
        let want = CliffordPolynomial::vector_variable(VarSystem::new(1, 3), 0).neg();
        assert_eq!(w0, want);
    }

    #[test]
    fn outer_generators_gamma_and_laplace_eigenvalues() {
        // on the numerator level: Gamma W~ = (k+m) W~ and the spherical
        // Laplacian gives -(k+1)(k+m) W~
        for m in [2usize, 3] {
            let idx: Vec<Vec<u16>> = match m {
                2 => vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 1], vec![2, 0, 0]],
                _ => vec![vec![0, 0, 0, 0], vec![1, 0, 1, 0]],
            };
            for alpha in idx {
                let k: i64 = alpha.iter().map(|&a| a as i64).sum();
                let w = outer_generator(m, &alpha);
                assert!(w.is_multihomogeneous(&[(k + 1) as u32]));
                assert_eq!(
                    gamma(&w, 0).unwrap(),
                    w.scale_int(k + m as i64),
                    "Gamma eigenvalue on outer alpha {alpha:?}"
                );
                assert_eq!(
                    casimir_h(&w),
                    w.scale_int(-(k + 1) * (k + m as i64)),
                    "spherical Laplacian eigenvalue on outer alpha {alpha:?}"
                );
                // numerators are harmonic polynomials
                assert!(laplacian(&w, 0).unwrap().is_zero());
            }
        }
    }
}
