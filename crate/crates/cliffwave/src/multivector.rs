//! Elements of the complex Clifford algebra `Cl_m` with e_j^2 = -1.
//!
//! Coefficients are stored sparsely per blade; absent blades are zero. All
//! operations are pure and leave their inputs untouched, so multivectors can
//! be shared freely across threads.

use crate::blade::BladeIndex;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Multivector {
    dim: u32,
    coeffs: BTreeMap<BladeIndex, Scalar>,
}

impl Multivector {
    pub fn zero(dim: u32) -> Self {
        assert!(dim <= 16, "algebra dimension too large");
        Multivector {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: u32, value: Scalar) -> Self {
        let mut mv = Self::zero(dim);
        mv.set(BladeIndex::SCALAR, value);
        mv
    }

    pub fn one(dim: u32) -> Self {
        Self::scalar(dim, Scalar::one_exact())
    }

    pub fn from_int(dim: u32, n: i64) -> Self {
        Self::scalar(dim, Scalar::from_int(n))
    }

    /// The generator `e_j` (zero-based).
    pub fn generator(dim: u32, j: u32) -> Self {
        assert!(j < dim, "generator e{j} out of range for Cl_{dim}");
        let mut mv = Self::zero(dim);
        mv.set(BladeIndex::generator(j), Scalar::one_exact());
        mv
    }

    pub fn blade(dim: u32, blade: BladeIndex, value: Scalar) -> Self {
        assert!(blade.0 < (1 << dim), "blade out of range");
        let mut mv = Self::zero(dim);
        mv.set(blade, value);
        mv
    }

    /// A 1-vector with the given coordinates.
    pub fn vector(dim: u32, coords: &[Scalar]) -> Self {
        assert!(coords.len() as u32 <= dim);
        let mut mv = Self::zero(dim);
        for (j, c) in coords.iter().enumerate() {
            mv.set(BladeIndex::generator(j as u32), c.clone());
        }
        mv
    }

    pub fn vector_f64(dim: u32, coords: &[f64]) -> Self {
        let cs: Vec<Scalar> = coords.iter().map(|&x| Scalar::from_f64(x, 0.0)).collect();
        Self::vector(dim, &cs)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, blade: BladeIndex) -> Scalar {
        self.coeffs
            .get(&blade)
            .cloned()
            .unwrap_or_else(Scalar::zero_exact)
    }

    pub fn set(&mut self, blade: BladeIndex, value: Scalar) {
        if value.is_zero() {
            self.coeffs.remove(&blade);
        } else {
            self.coeffs.insert(blade, value);
        }
    }

    pub fn add_to(&mut self, blade: BladeIndex, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let cur = self.get(blade);
        self.set(blade, cur.add(value));
    }

    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, &Scalar)> {
        self.coeffs.iter().map(|(b, s)| (*b, s))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (b, s) in rhs.terms() {
            out.add_to(b, s);
        }
        out
    }

    pub fn sub(&self, rhs: &Multivector) -> Multivector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            out.set(b, s.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            out.set(b, s.mul(c));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Multivector {
        self.scale(&Scalar::from_int(n))
    }

    /// Geometric product. Errors on dimension mismatch.
    pub fn try_mul(&self, rhs: &Multivector) -> Result<Multivector> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(self.dim, rhs.dim));
        }
        let mut out = Self::zero(self.dim);
        for (ba, sa) in self.terms() {
            for (bb, sb) in rhs.terms() {
                let (blade, sign) = ba.product(bb);
                let mut c = sa.mul(sb);
                if sign < 0 {
                    c = c.neg();
                }
                out.add_to(blade, &c);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Multivector) -> Multivector {
        self.try_mul(rhs).expect("dimension mismatch")
    }

    /// Grade projection `[a]_k`.
    pub fn try_grade_project(&self, k: u32) -> Result<Multivector> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            if b.grade() == k {
                out.set(b, s.clone());
            }
        }
        Ok(out)
    }

    pub fn grade_project(&self, k: u32) -> Multivector {
        self.try_grade_project(k).expect("grade out of range")
    }

    /// Scalar part `[a]_0` as a scalar.
    pub fn scalar_part(&self) -> Scalar {
        self.get(BladeIndex::SCALAR)
    }

    /// Main anti-involution: reverses blades, negates generators, and
    /// conjugates coefficients.
    pub fn bar(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            let mut c = s.conj();
            if b.bar_sign() < 0 {
                c = c.neg();
            }
            out.set(b, c);
        }
        out
    }

    /// Clifford inner product `<a,b> = [bar(a) b]_0`. Positive definite in
    /// this signature; the basis blades are orthonormal.
    pub fn try_inner(&self, rhs: &Multivector) -> Result<Scalar> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(self.dim, rhs.dim));
        }
        Ok(self.bar().mul(rhs).scalar_part())
    }

    pub fn inner(&self, rhs: &Multivector) -> Scalar {
        self.try_inner(rhs).expect("dimension mismatch")
    }

    /// `a ∧ b = (ab - ba)/2`; the exterior product when both sides are
    /// 1-vectors.
    pub fn wedge(&self, rhs: &Multivector) -> Multivector {
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        ab.sub(&ba).scale(&Scalar::from_ratio(1, 2))
    }

    /// Squared norm `<a,a>` as f64 (exact inputs are converted at the end).
    pub fn norm_sqr(&self) -> f64 {
        self.terms().map(|(_, s)| s.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_grade(&self) -> u32 {
        self.terms().map(|(b, _)| b.grade()).max().unwrap_or(0)
    }

    pub fn is_grade(&self, k: u32) -> bool {
        self.terms().all(|(b, _)| b.grade() == k)
    }

    pub fn is_even(&self) -> bool {
        self.terms().all(|(b, _)| b.grade() % 2 == 0)
    }

    pub fn even_part(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            if b.grade() % 2 == 0 {
                out.set(b, s.clone());
            }
        }
        out
    }

    /// Conjugates every coefficient (no blade sign).
    pub fn conj_coeffs(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            out.set(b, s.conj());
        }
        out
    }

    pub fn to_approx(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            out.set(b, Scalar::Approx(s.to_approx()));
        }
        out
    }

    pub fn to_exact(&self) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (b, s) in self.terms() {
            out.set(b, s.to_exact());
        }
        out
    }

    /// Inverse via the left-regular representation: solves x in a*x = 1 as a
    /// dense linear system over the blade basis. Exact for exact inputs.
    pub fn inverse(&self) -> Option<Multivector> {
        let n = 1usize << self.dim;
        // columns of the left-multiplication matrix
        let mut mat: Vec<Vec<Scalar>> = vec![vec![Scalar::zero_exact(); n]; n];
        for (ba, sa) in self.terms() {
            for col in 0..n {
                let (blade, sign) = ba.product(BladeIndex(col as u32));
                let mut c = sa.clone();
                if sign < 0 {
                    c = c.neg();
                }
                mat[blade.0 as usize][col] = mat[blade.0 as usize][col].add(&c);
            }
        }
        // rhs = unit scalar
        let mut rhs = vec![Scalar::zero_exact(); n];
        rhs[0] = Scalar::one_exact();
        // Gaussian elimination with first-nonzero pivoting.
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !mat[r][col].is_zero())?;
            mat.swap(col, pivot_row);
            rhs.swap(col, pivot_row);
            let inv = mat[col][col].recip();
            for c2 in col..n {
                mat[col][c2] = mat[col][c2].mul(&inv);
            }
            rhs[col] = rhs[col].mul(&inv);
            for r in 0..n {
                if r != col && !mat[r][col].is_zero() {
                    let f = mat[r][col].clone();
                    for c2 in col..n {
                        let t = mat[col][c2].mul(&f);
                        mat[r][c2] = mat[r][c2].sub(&t);
                    }
                    let t = rhs[col].mul(&f);
                    rhs[r] = rhs[r].sub(&t);
                }
            }
        }
        let mut out = Self::zero(self.dim);
        for (i, v) in rhs.into_iter().enumerate() {
            out.set(BladeIndex(i as u32), v);
        }
        // verify: guards against the singular case slipping through
        let check = self.mul(&out);
        let diff = check.sub(&Multivector::one(self.dim));
        if diff.terms().all(|(_, s)| s.norm_sqr() < 1e-20) {
            Some(out)
        } else {
            None
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, s) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == BladeIndex::SCALAR {
                write!(f, "{s}")?;
            } else {
                write!(f, "({s}){}", b.label())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Wire format for a multivector, exact coefficients as `p/q` strings.
#[derive(Serialize, Deserialize)]
pub struct MultivectorRepr {
    pub m: u32,
    pub coeffs: Vec<CoeffRepr>,
}

#[derive(Serialize, Deserialize)]
pub struct CoeffRepr {
    pub blade: u32,
    pub re: serde_json::Value,
    pub im: serde_json::Value,
}

impl Multivector {
    pub fn to_repr(&self) -> MultivectorRepr {
        let coeffs = self
            .terms()
            .map(|(b, s)| {
                let (re, im) = match s {
                    Scalar::Exact(z) => (
                        serde_json::Value::String(Scalar::rational_string(&z.re)),
                        serde_json::Value::String(Scalar::rational_string(&z.im)),
                    ),
                    Scalar::Approx(z) => (
                        serde_json::json!(z.re),
                        serde_json::json!(z.im),
                    ),
                };
                CoeffRepr { blade: b.0, re, im }
            })
            .collect();
        MultivectorRepr {
            m: self.dim,
            coeffs,
        }
    }

    pub fn from_repr(repr: &MultivectorRepr) -> Result<Multivector> {
        let mut mv = Multivector::zero(repr.m);
        for c in &repr.coeffs {
            if c.blade >= (1 << repr.m) {
                return Err(Error::Malformed(format!(
                    "blade {} out of range for m={}",
                    c.blade, repr.m
                )));
            }
            let s = match (&c.re, &c.im) {
                (serde_json::Value::String(re), serde_json::Value::String(im)) => {
                    let re = Scalar::parse_rational(re)
                        .ok_or_else(|| Error::Malformed(format!("bad rational {re}")))?;
                    let im = Scalar::parse_rational(im)
                        .ok_or_else(|| Error::Malformed(format!("bad rational {im}")))?;
                    Scalar::from_rational(re, im)
                }
                (re, im) => {
                    let re = re
                        .as_f64()
                        .ok_or_else(|| Error::Malformed("bad numeric coeff".into()))?;
                    let im = im
                        .as_f64()
                        .ok_or_else(|| Error::Malformed("bad numeric coeff".into()))?;
                    Scalar::from_f64(re, im)
                }
            };
            mv.add_to(BladeIndex(c.blade), &s);
        }
        Ok(mv)
    }
}
