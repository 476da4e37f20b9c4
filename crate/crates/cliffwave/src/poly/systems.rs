//! Harmonic, monogenic and simplicial systems, primitive idempotents, and
//! the explicit highest-weight vectors that generate the irreducible
//! pieces.
//!
//! Weights are the per-variable homogeneity degrees (m_1,...,m_k), dominant
//! when non-increasing and non-negative; the factor exponents of the
//! highest-weight product are the consecutive differences m_j - m_{j+1}.
//! Admissible weights have all entries of one parity. The monogenic kind
//! right-multiplies by the paired idempotents I_1...I_k, realizing the +1/2
//! shift in every component.

use super::diffops::{dirac, laplacian, mixed_euler, poly_bar, scalar_part_poly};
use super::{CliffordPolynomial, VarSystem};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// The Witt-type vector T_j = (e_{2j} - i e_{2j+1}) / 2, zero-based j.
pub fn witt_vector(dim: u32, j: usize) -> Multivector {
    let a = 2 * j as u32;
    let b = a + 1;
    assert!(b < dim, "T_{j} needs generators e{a}, e{b} inside Cl_{dim}");
    let i = Scalar::i_exact();
    let half = Scalar::from_ratio(1, 2);
    Multivector::generator(dim, a)
        .sub(&Multivector::generator(dim, b).scale(&i))
        .scale(&half)
}

/// Paired primitive idempotent I_j = T_j bar(T_j) = (1 - i e_{2j} e_{2j+1})/2.
/// Satisfies I_j^2 = I_j and T_j I_j = 0; the sign is the one that makes the
/// monogenic highest-weight vectors monogenic.
pub fn idempotent_paired(dim: u32, j: usize) -> Multivector {
    let t = witt_vector(dim, j);
    t.mul(&t.bar())
}

/// Split-index primitive idempotent I_j = (1 + i e_j e_{j+m})/2 inside
/// Cl_{2m}, zero-based j < m.
pub fn idempotent_split(m: usize, j: usize) -> Multivector {
    assert!(j < m, "split idempotent index out of range");
    let dim = 2 * m as u32;
    let i = Scalar::i_exact();
    let half = Scalar::from_ratio(1, 2);
    let prod = Multivector::generator(dim, j as u32)
        .mul(&Multivector::generator(dim, (j + m) as u32));
    Multivector::one(dim).add(&prod.scale(&i)).scale(&half)
}

/// The scalar cross Laplacian <d_i, d_j> = sum_a d_{i,a} d_{j,a}.
pub fn cross_laplacian(p: &CliffordPolynomial, i: usize, j: usize) -> CliffordPolynomial {
    let sys = p.system();
    let mut out = CliffordPolynomial::zero(sys);
    for a in 0..sys.n {
        out = out.add(&p.partial(i, a).partial(j, a));
    }
    out
}

/// Harmonic system: every variable harmonic plus the cross conditions for
/// i != j. The cross condition is the scalar pair Laplacian <d_i, d_j>P = 0
/// (the scalar part of the Dirac pair d_i d_j): the full Clifford product
/// d_i d_j does not annihilate the simplicial highest-weight vectors, so
/// the matrix-harmonicity reading is the one the eigenvalue formulas need.
pub fn is_harmonic(p: &CliffordPolynomial) -> bool {
    let k = p.system().k;
    for i in 0..k {
        if !laplacian(p, i).unwrap().is_zero() {
            return false;
        }
        for j in (i + 1)..k {
            if !cross_laplacian(p, i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monogenic system: d_i P = 0 for every variable.
pub fn is_monogenic(p: &CliffordPolynomial) -> bool {
    (0..p.system().k).all(|i| dirac(p, i).unwrap().is_zero())
}

/// Simplicial system: the consecutive mixed Euler operators annihilate P.
pub fn is_simplicial(p: &CliffordPolynomial) -> bool {
    let k = p.system().k;
    (0..k.saturating_sub(1)).all(|i| mixed_euler(p, i, i + 1).unwrap().is_zero())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
            && self.entries.last().is_none_or(|&m| m >= 0)
    }

    /// All entries share one parity (zero counts as even), per the weight
    /// lattice of Spin(m).
    pub fn is_admissible(&self) -> bool {
        if self.entries.is_empty() {
            return true;
        }
        let parity = self.entries[0].rem_euclid(2);
        self.entries.iter().all(|m| m.rem_euclid(2) == parity)
    }

    /// Factor exponents of the highest-weight product: consecutive
    /// differences of the degrees.
    pub fn factor_exponents(&self) -> Vec<u32> {
        let k = self.entries.len();
        (0..k)
            .map(|j| {
                let next = if j + 1 < k { self.entries[j + 1] } else { 0 };
                (self.entries[j] - next) as u32
            })
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HwvKind {
    Harmonic,
    Monogenic,
}

/// The wedge x_1 ^ ... ^ x_r of the first r vector variables, computed as
/// the grade-r part of the ordered product.
fn leading_wedge(sys: VarSystem, r: usize) -> CliffordPolynomial {
    let mut prod = CliffordPolynomial::vector_variable(sys, 0);
    for i in 1..r {
        prod = prod.mul(&CliffordPolynomial::vector_variable(sys, i));
    }
    super::diffops::grade_project_poly(&prod, r as u32)
}

/// T_1 ^ ... ^ T_r as a constant multivector.
fn witt_wedge(dim: u32, r: usize) -> Multivector {
    let mut prod = witt_vector(dim, 0);
    for j in 1..r {
        prod = prod.mul(&witt_vector(dim, j));
    }
    prod.grade_project(r as u32)
}

/// The scalar factor <x_1 ^ ... ^ x_r, T_1 ^ ... ^ T_r>.
fn simplicial_factor(sys: VarSystem, r: usize) -> CliffordPolynomial {
    let xw = leading_wedge(sys, r);
    let tw = witt_wedge(sys.n as u32, r);
    scalar_part_poly(&poly_bar(&xw).mul_const_right(&tw))
}

/// Builds the highest-weight vector of the given dominant, admissible
/// weight: the product of simplicial factors raised to the difference
/// exponents, right-multiplied by I_1...I_k for the monogenic kind.
///
/// The construction needs 2k <= n so that the Witt vectors fit, and does
/// not cover the even-n twisted class with a negative last entry.
pub fn highest_weight_vector(
    sys: VarSystem,
    weight: &Weight,
    kind: HwvKind,
) -> Result<CliffordPolynomial> {
    let k = weight.entries().len();
    if k == 0 || k != sys.k {
        return Err(Error::InvalidWeight(format!(
            "weight length {k} does not match the {}-variable system",
            sys.k
        )));
    }
    if 2 * k > sys.n {
        return Err(Error::InvalidWeight(format!(
            "need 2k <= n for the Witt vectors, got k={k}, n={}",
            sys.n
        )));
    }
    if !weight.is_dominant() {
        return Err(Error::InvalidWeight(format!(
            "weight {:?} is not dominant (non-increasing, last entry >= 0)",
            weight.entries()
        )));
    }
    if !weight.is_admissible() {
        return Err(Error::InvalidWeight(format!(
            "weight {:?} mixes parities",
            weight.entries()
        )));
    }
    let mut hwv = CliffordPolynomial::one(sys);
    for (r, &a) in weight.factor_exponents().iter().enumerate() {
        if a > 0 {
            hwv = hwv.mul(&simplicial_factor(sys, r + 1).pow(a));
        }
    }
    if kind == HwvKind::Monogenic {
        let mut idem = Multivector::one(sys.n as u32);
        for j in 0..k {
            idem = idem.mul(&idempotent_paired(sys.n as u32, j));
        }
        hwv = hwv.mul_const_right(&idem);
    }
    Ok(hwv)
}

/// H-type Casimir eigenvalue on the simplicial harmonic of this weight:
/// -sum_j m_j (m_j + n - 2j), 1-based j.
pub fn harmonic_casimir_eigenvalue(weight: &Weight, n: usize) -> i64 {
    -weight
        .entries()
        .iter()
        .enumerate()
        .map(|(j0, &m)| m * (m + n as i64 - 2 * (j0 as i64 + 1)))
        .sum::<i64>()
}

/// L-type Casimir eigenvalue on the simplicial monogenic of this weight:
/// -sum_j m_j (m_j + n - 2j + 1) - n(n-1)/8, as an exact rational.
pub fn monogenic_casimir_eigenvalue(weight: &Weight, n: usize) -> num_rational::BigRational {
    let sum: i64 = weight
        .entries()
        .iter()
        .enumerate()
        .map(|(j0, &m)| m * (m + n as i64 - 2 * (j0 as i64 + 1) + 1))
        .sum();
    let base = num_rational::BigRational::from_integer((-sum).into());
    base - num_rational::BigRational::new((n as i64 * (n as i64 - 1)).into(), 8.into())
}
