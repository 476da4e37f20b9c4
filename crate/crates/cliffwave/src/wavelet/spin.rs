//! Eigenfunctions of the Laplacian on Spin(m) and the diffusive wavelets
//! built from them.
//!
//! A function on the group is a pair f(s) = H(s) alpha + L(s) beta of a
//! simplicial harmonic and a simplicial monogenic evaluated at a fixed
//! orthonormal frame. The Laplacian acts through the multi-variable Casimir
//! images, so the decay rates come from the closed-form Casimir eigenvalues:
//! lambda_H(w) = sum_j m_j (m_j + m - 2j) on the H branch and
//! lambda_L(w) = sum_j m_j (m_j + m - 2j + 1) + m(m-1)/8 on the L branch.
//! Both are non-negative, which is what the heat construction needs; only
//! the H branch of the empty weight is a zero mode.

use super::scale::ScaleGrid;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::poly::systems::{
    harmonic_casimir_eigenvalue, highest_weight_vector, monogenic_casimir_eigenvalue, HwvKind,
    Weight,
};
use crate::poly::{CliffordPolynomial, VarSystem};
use crate::scalar::Scalar;
use crate::spin::{rotation_matrix, SpinElement};
use num_traits::ToPrimitive;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Branch {
    H,
    L,
}

/// One enumerated eigenfunction of the Spin Laplacian.
#[derive(Clone)]
pub struct SpinEigenfunction {
    pub m: usize,
    pub branch: Branch,
    pub weight: Weight,
    /// The simplicial polynomial (harmonic for H, monogenic for L) in
    /// one vector variable per nonzero weight entry over R^m.
    pub poly: CliffordPolynomial,
    /// Non-negative decay rate of the heat flow on this eigenspace.
    pub lambda: f64,
}

impl SpinEigenfunction {
    /// Builds the eigenfunction pair member for a dominant admissible
    /// weight. The harmonic branch takes any such weight; the monogenic
    /// branch right-multiplies the idempotents in.
    pub fn new(m: usize, weight: Weight, branch: Branch) -> Result<SpinEigenfunction> {
        let k = weight.entries().len().max(1);
        let sys = VarSystem::new(k, m);
        let kind = match branch {
            Branch::H => HwvKind::Harmonic,
            Branch::L => HwvKind::Monogenic,
        };
        let poly = highest_weight_vector(sys, &weight, kind)?;
        let lambda = match branch {
            Branch::H => -(harmonic_casimir_eigenvalue(&weight, m) as f64),
            Branch::L => -monogenic_casimir_eigenvalue(&weight, m)
                .to_f64()
                .expect("finite rational"),
        };
        Ok(SpinEigenfunction {
            m,
            branch,
            weight,
            poly,
            lambda,
        })
    }

    /// Wraps a caller-supplied polynomial after validating the simplicial
    /// system plus the branch condition (harmonic for H, monogenic for L).
    /// The weight is read off the per-variable degrees; the polynomial must
    /// be multi-homogeneous.
    pub fn from_polynomial(
        m: usize,
        poly: CliffordPolynomial,
        branch: Branch,
    ) -> Result<SpinEigenfunction> {
        use crate::poly::systems::{is_harmonic, is_monogenic, is_simplicial};
        if poly.system().n != m {
            return Err(Error::DimensionMismatch(poly.system().n as u32, m as u32));
        }
        if !is_simplicial(&poly) {
            return Err(Error::NotSimplicial(
                "the mixed Euler operators do not annihilate the input".into(),
            ));
        }
        let ok = match branch {
            Branch::H => is_harmonic(&poly),
            Branch::L => is_monogenic(&poly),
        };
        if !ok {
            return Err(Error::NotSimplicial(format!(
                "input fails the {} system of its branch",
                match branch {
                    Branch::H => "harmonic",
                    Branch::L => "monogenic",
                }
            )));
        }
        let degrees: Vec<i64> = (0..poly.system().k)
            .map(|i| poly.degree_in(i).unwrap_or(0) as i64)
            .collect();
        let homogeneous: Vec<u32> = degrees.iter().map(|&d| d as u32).collect();
        if !poly.is_multihomogeneous(&homogeneous) {
            return Err(Error::NotSimplicial(
                "input is not multi-homogeneous".into(),
            ));
        }
        let weight = Weight::new(degrees);
        let lambda = match branch {
            Branch::H => -(harmonic_casimir_eigenvalue(&weight, m) as f64),
            Branch::L => -monogenic_casimir_eigenvalue(&weight, m)
                .to_f64()
                .expect("finite rational"),
        };
        Ok(SpinEigenfunction {
            m,
            branch,
            weight,
            poly,
            lambda,
        })
    }

    /// Evaluates the eigenfunction at a group element: the simplicial
    /// argument is the standard frame rotated by s, and the value picks up
    /// the H or L action.
    pub fn evaluate(&self, s: &SpinElement) -> Result<Multivector> {
        if s.dim() as usize != self.m {
            return Err(Error::DimensionMismatch(s.dim(), self.m as u32));
        }
        let r = rotation_matrix(s);
        let k = self.poly.system().k;
        // s^{-1} e_j s has coordinates R^T e_j = row j of R
        let points: Vec<Vec<Scalar>> = (0..k)
            .map(|j| (0..self.m).map(|i| Scalar::from_f64(r[j][i], 0.0)).collect())
            .collect();
        let v = self.poly.eval_scalars(&points);
        let out = match self.branch {
            Branch::H => s
                .as_multivector()
                .mul(&v)
                .mul(s.inverse().as_multivector()),
            Branch::L => s.as_multivector().mul(&v),
        };
        Ok(out)
    }
}

/// Enumerates the eigen-system up to a total weight bound: dominant
/// admissible weights with no trailing zeros, 1 <= length <= floor(m/2),
/// on both branches, plus the constant zero mode of the H branch.
pub fn enumerate_spin_basis(m: usize, weight_bound: i64) -> Result<Vec<SpinEigenfunction>> {
    if m < 2 {
        return Err(Error::Unsupported("Spin(m) analysis needs m >= 2".into()));
    }
    if weight_bound > 12 {
        return Err(Error::ResourceCap(
            "weight bound beyond the symbolic budget".into(),
        ));
    }
    let kmax = m / 2;
    let mut out = Vec::new();
    // the invariant constant on the H branch
    out.push(SpinEigenfunction {
        m,
        branch: Branch::H,
        weight: Weight::new(vec![0]),
        poly: CliffordPolynomial::one(VarSystem::new(1, m)),
        lambda: 0.0,
    });
    for k in 1..=kmax {
        for entries in dominant_weights(k, weight_bound) {
            let w = Weight::new(entries);
            if !w.is_admissible() || w.entries().last() == Some(&0) {
                continue;
            }
            for branch in [Branch::H, Branch::L] {
                out.push(SpinEigenfunction::new(m, w.clone(), branch)?);
            }
        }
    }
    Ok(out)
}

fn dominant_weights(k: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(k: usize, left: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            if cur.iter().any(|&m| m > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0;
        while m <= max && m <= left {
            cur.push(m);
            rec(k, left - m, m, cur, out);
            cur.pop();
            m += 1;
        }
    }
    let mut out = Vec::new();
    rec(k, bound, bound, &mut Vec::new(), &mut out);
    out
}

/// Diffusive wavelets on Spin(m): the sphere scale machinery applied to the
/// enumerated eigen-system. Spectral weights are sqrt(lambda) e^{-lambda
/// rho/2} per eigenfunction; the zero mode travels separately.
pub struct SpinWaveletFamily {
    pub basis: Vec<SpinEigenfunction>,
    pub grid: ScaleGrid,
}

impl SpinWaveletFamily {
    pub fn new(m: usize, weight_bound: i64, grid: ScaleGrid) -> Result<SpinWaveletFamily> {
        Ok(SpinWaveletFamily {
            basis: enumerate_spin_basis(m, weight_bound)?,
            grid,
        })
    }

    pub fn weight(&self, idx: usize, rho: f64) -> f64 {
        let lam = self.basis[idx].lambda;
        if lam == 0.0 {
            0.0
        } else {
            lam.sqrt() * (-lam * rho / 2.0).exp()
        }
    }

    /// Forward transform of coefficients over the eigen-system.
    pub fn transform(&self, coeffs: &[Multivector]) -> Result<SpinWaveletCoefficients> {
        if coeffs.len() != self.basis.len() {
            return Err(Error::Malformed(
                "coefficient vector does not match the eigen-system".into(),
            ));
        }
        let zero_mode = self
            .basis
            .iter()
            .zip(coeffs)
            .map(|(e, c)| {
                if e.lambda == 0.0 {
                    c.clone()
                } else {
                    Multivector::zero(e.m as u32)
                }
            })
            .collect();
        let scales = self
            .grid
            .nodes
            .iter()
            .map(|&rho| {
                self.basis
                    .iter()
                    .zip(coeffs)
                    .enumerate()
                    .map(|(i, (_, c))| c.scale(&Scalar::from_f64(self.weight(i, rho), 0.0)))
                    .collect()
            })
            .collect();
        Ok(SpinWaveletCoefficients { scales, zero_mode })
    }

    /// Grid-path reconstruction; per-mode defect follows the scale-rule
    /// admissibility defect.
    pub fn reconstruct(&self, wc: &SpinWaveletCoefficients) -> Result<Vec<Multivector>> {
        if wc.scales.len() != self.grid.nodes.len() {
            return Err(Error::FamilyMismatch("scale count mismatch".into()));
        }
        let weights = self.grid.rule_weights(0);
        let mut out = wc.zero_mode.clone();
        for (i, e) in self.basis.iter().enumerate() {
            if e.lambda == 0.0 {
                continue;
            }
            let w0 = self.weight(i, self.grid.nodes[0]);
            let mut acc = Multivector::zero(e.m as u32);
            for (j, (&rho, cw)) in self.grid.nodes.iter().zip(&weights).enumerate() {
                let w = self.weight(i, rho);
                let coeff = cw * self.grid.alpha[j] * w;
                acc = acc.add(&wc.scales[j][i].scale(&Scalar::from_f64(coeff, 0.0)));
            }
            let rho0 = self.grid.nodes[0];
            let fhat0 = wc.scales[0][i].scale(&Scalar::from_f64(1.0 / w0, 0.0));
            let head = fhat0
                .scale(&Scalar::from_f64(e.lambda, 0.0))
                .add(&wc.scales[0][i].scale(&Scalar::from_f64(w0, 0.0)))
                .scale(&Scalar::from_f64(0.5 * rho0, 0.0));
            out[i] = acc.add(&head);
        }
        Ok(out)
    }

    /// The wavelet kernel evaluated at a group element and scale: the
    /// eigenfunction series with weights exp(-lambda t / 2).
    pub fn kernel_at(&self, s: &SpinElement, rho: f64) -> Result<Multivector> {
        let mut acc = Multivector::zero(self.basis[0].m as u32);
        for (i, e) in self.basis.iter().enumerate() {
            let w = self.weight(i, rho);
            if w != 0.0 {
                acc = acc.add(&e.evaluate(s)?.scale(&Scalar::from_f64(w, 0.0)));
            }
        }
        Ok(acc)
    }
}

pub struct SpinWaveletCoefficients {
    pub scales: Vec<Vec<Multivector>>,
    pub zero_mode: Vec<Multivector>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::diffops::{casimir_h, casimir_l, gamma_total};
    use crate::rng::SeededRng;
    use crate::scalar::Scalar;

    #[test]
    fn h_branch_eigenvalue_symbolic() {
        // m = 3, weight (2): Delta_spin eigenvalue -2(2+3-2) = -6, so the
        // decay rate is 6.
        let e = SpinEigenfunction::new(3, Weight::new(vec![2]), Branch::H).unwrap();
        assert_eq!(e.lambda, 6.0);
        let applied = casimir_h(&e.poly);
        assert_eq!(applied, e.poly.scale_int(-6));
    }

    #[test]
    fn full_sweep_matches_casimir_oracle() {
        // every enumerated eigenfunction is an exact eigenvector of the
        // multi-variable Casimir image of its branch
        for m in [3usize, 4] {
            for e in enumerate_spin_basis(m, 4).unwrap() {
                if e.weight.entries().iter().all(|&x| x == 0) {
                    continue;
                }
                match e.branch {
                    Branch::H => {
                        let ev = harmonic_casimir_eigenvalue(&e.weight, m);
                        assert_eq!(
                            casimir_h(&e.poly),
                            e.poly.scale_int(ev),
                            "H branch m={m} weight {:?}",
                            e.weight.entries()
                        );
                        assert_eq!(e.lambda, -(ev as f64));
                        assert!(e.lambda >= 0.0);
                    }
                    Branch::L => {
                        let ev = monogenic_casimir_eigenvalue(&e.weight, m);
                        let want = e.poly.scale(&Scalar::from_rational(
                            ev.clone(),
                            num_rational::BigRational::from_integer(0.into()),
                        ));
                        assert_eq!(
                            casimir_l(&e.poly, None),
                            want,
                            "L branch m={m} weight {:?}",
                            e.weight.entries()
                        );
                        assert!(e.lambda > 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn dirac_identity_on_branches() {
        // sum e_ab rot_ab == Gamma_total on the H polynomials and the
        // l-field version picks up -binom(m,2) on the L polynomials
        use crate::poly::diffops::{l_field, rot_field};
        for m in [3usize, 4] {
            for e in enumerate_spin_basis(m, 3).unwrap() {
                let sys = e.poly.system();
                let dim = sys.n as u32;
                let mut acc = CliffordPolynomial::zero(sys);
                for a in 0..sys.n {
                    for b in (a + 1)..sys.n {
                        let biv = Multivector::generator(dim, a as u32)
                            .mul(&Multivector::generator(dim, b as u32));
                        let field = match e.branch {
                            Branch::H => rot_field(&e.poly, a, b),
                            Branch::L => {
                                // l-field for the unnormalized bivector e_ab
                                rot_field(&e.poly, a, b)
                                    .add(&e.poly.mul_const_left(&biv))
                            }
                        };
                        acc = acc.add(&field.mul_const_left(&biv));
                    }
                }
                let want = match e.branch {
                    Branch::H => gamma_total(&e.poly),
                    Branch::L => {
                        let nb = (sys.n * (sys.n - 1) / 2) as i64;
                        gamma_total(&e.poly).sub(&e.poly.scale_int(nb))
                    }
                };
                assert_eq!(acc, want, "Dirac identity {:?} {:?}", e.branch, e.weight);
            }
        }
    }

    #[test]
    fn from_polynomial_validates_the_systems() {
        // a legitimate simplicial harmonic is accepted and its rate agrees
        // with the weight-built one
        let good = highest_weight_vector(
            VarSystem::new(1, 3),
            &Weight::new(vec![2]),
            HwvKind::Harmonic,
        )
        .unwrap();
        let e = SpinEigenfunction::from_polynomial(3, good, Branch::H).unwrap();
        assert_eq!(e.lambda, 6.0);
        assert_eq!(e.weight.entries(), [2]);
        // a non-simplicial polynomial is refused
        let sys = VarSystem::new(2, 4);
        let bad = CliffordPolynomial::coordinate(sys, 0, 0)
            .mul(&CliffordPolynomial::coordinate(sys, 1, 1));
        assert!(SpinEigenfunction::from_polynomial(4, bad, Branch::H).is_err());
        // a simplicial but non-harmonic polynomial is refused on H
        let nh = CliffordPolynomial::coordinate(VarSystem::new(1, 3), 0, 0).pow(2);
        assert!(SpinEigenfunction::from_polynomial(3, nh, Branch::H).is_err());
    }

    #[test]
    fn constant_pair_is_the_zero_mode() {
        let basis = enumerate_spin_basis(3, 2).unwrap();
        assert_eq!(basis[0].lambda, 0.0);
        assert!(basis.iter().skip(1).all(|e| e.lambda > 0.0));
    }

    #[test]
    fn evaluate_at_group_elements() {
        // the weight-(2) H eigenfunction at the identity is alpha at the
        // standard frame
        let e = SpinEigenfunction::new(3, Weight::new(vec![2]), Branch::H).unwrap();
        let id = SpinElement::identity(3);
        let v = e.evaluate(&id).unwrap();
        // alpha = <x_1 T_1>^2 at x_1 = e_1-ish frame vector (1,0,0):
        // <e_1 T_1> = -1/2, squared 1/4
        assert!((v.scalar_part().to_approx().re - 0.25).abs() < 1e-14);
        // H invariance under sign flip of s (double cover)
        let mut rng = SeededRng::new(3);
        let s = crate::spin::exp_bivector(
            &crate::spin::Bivector::basis(3, 0, 1),
            rng.uniform(),
        )
        .unwrap();
        let a = e.evaluate(&s).unwrap();
        let b = e.evaluate(&s.neg()).unwrap();
        assert!(a.sub(&b).norm() < 1e-12);
    }

    #[test]
    fn spin_wavelet_round_trip() {
        let mut rng = SeededRng::new(8);
        let fam = SpinWaveletFamily::new(3, 3, ScaleGrid::default_grid()).unwrap();
        let coeffs: Vec<Multivector> = fam
            .basis
            .iter()
            .map(|e| {
                let mut v = Multivector::zero(e.m as u32);
                for b in crate::blade::BladeIndex::all(e.m as u32) {
                    v.set(b, Scalar::from_f64(rng.symmetric(), rng.symmetric()));
                }
                v
            })
            .collect();
        let wc = fam.transform(&coeffs).unwrap();
        let back = fam.reconstruct(&wc).unwrap();
        let mut worst = 0.0f64;
        for (a, b) in back.iter().zip(&coeffs) {
            worst = worst.max(a.sub(b).norm() / b.norm());
        }
        assert!(worst <= 1e-3, "spin wavelet round trip defect {worst:.3e}");
    }

    #[test]
    fn weights_tend_to_one_as_t_to_zero() {
        let fam = SpinWaveletFamily::new(3, 2, ScaleGrid::default_grid()).unwrap();
        for e in &fam.basis {
            let w = (-e.lambda * 1e-12f64).exp();
            assert!((w - 1.0).abs() < 1e-9);
        }
        // m=3, weight (2): heat weight exp(-6 t / 2) at the wavelet level
        let idx = fam
            .basis
            .iter()
            .position(|e| e.branch == Branch::H && e.weight.entries() == [2])
            .unwrap();
        assert_eq!(fam.basis[idx].lambda, 6.0);
        let rho = 0.3;
        assert!(
            (fam.weight(idx, rho) - 6.0f64.sqrt() * (-6.0 * rho / 2.0).exp()).abs() < 1e-15
        );
    }
}
