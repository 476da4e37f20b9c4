//! Polynomials in several vector variables with Clifford coefficients.
//!
//! A system of `k` vector variables over `R^n` is flattened to `k*n` real
//! indeterminates x_{i,a} (variable i, coordinate a); the vector variable
//! itself is x_i = sum_a x_{i,a} e_a, with e_a the generators of `Cl_n`.
//! Terms map an exponent vector to a multivector coefficient; coefficients
//! multiply the monomial from the left, so left multiplication by algebra
//! elements and the differential operators below interact the way the
//! function calculus expects.

pub mod diffops;
pub mod systems;

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Shape of a polynomial system: `k` vector variables with `n` real
/// coordinates each. The coefficient algebra is `Cl_n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarSystem {
    pub k: usize,
    pub n: usize,
}

impl VarSystem {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(k >= 1 && n >= 1, "need at least one variable and coordinate");
        VarSystem { k, n }
    }

    pub fn indeterminates(&self) -> usize {
        self.k * self.n
    }

    /// Flat index of coordinate `a` of variable `i`.
    pub fn slot(&self, var: usize, coord: usize) -> usize {
        debug_assert!(var < self.k && coord < self.n);
        var * self.n + coord
    }
}

type Exps = Vec<u16>;

#[derive(Clone, PartialEq)]
pub struct CliffordPolynomial {
    sys: VarSystem,
    terms: BTreeMap<Exps, Multivector>,
}

impl CliffordPolynomial {
    pub fn zero(sys: VarSystem) -> Self {
        CliffordPolynomial {
            sys,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sys: VarSystem, c: Multivector) -> Self {
        assert_eq!(c.dim() as usize, sys.n, "coefficient algebra must be Cl_n");
        let mut p = Self::zero(sys);
        p.add_term(&vec![0u16; sys.indeterminates()], &c);
        p
    }

    pub fn one(sys: VarSystem) -> Self {
        Self::constant(sys, Multivector::one(sys.n as u32))
    }

    /// The scalar coordinate function x_{var,coord}.
    pub fn coordinate(sys: VarSystem, var: usize, coord: usize) -> Self {
        let mut exps = vec![0u16; sys.indeterminates()];
        exps[sys.slot(var, coord)] = 1;
        let mut p = Self::zero(sys);
        p.add_term(&exps, &Multivector::one(sys.n as u32));
        p
    }

    /// The vector variable x_var = sum_a x_{var,a} e_a.
    pub fn vector_variable(sys: VarSystem, var: usize) -> Self {
        let mut p = Self::zero(sys);
        for a in 0..sys.n {
            let mut exps = vec![0u16; sys.indeterminates()];
            exps[sys.slot(var, a)] = 1;
            p.add_term(&exps, &Multivector::generator(sys.n as u32, a as u32));
        }
        p
    }

    pub fn system(&self) -> VarSystem {
        self.sys
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Multivector)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: &Exps, coeff: &Multivector) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(c) => {
                let s = c.add(coeff);
                if s.is_zero() {
                    self.terms.remove(exps);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(exps.clone(), coeff.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.sys, rhs.sys);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.sys);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.sys, rhs.sys);
        let mut out = Self::zero(self.sys);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let exps: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(&exps, &ca.mul(cb));
            }
        }
        out
    }

    /// Left multiplication of every coefficient by a constant.
    pub fn mul_const_left(&self, c: &Multivector) -> Self {
        let mut out = Self::zero(self.sys);
        for (e, coeff) in self.terms() {
            out.add_term(e, &c.mul(coeff));
        }
        out
    }

    /// Right multiplication of every coefficient by a constant.
    pub fn mul_const_right(&self, c: &Multivector) -> Self {
        let mut out = Self::zero(self.sys);
        for (e, coeff) in self.terms() {
            out.add_term(e, &coeff.mul(c));
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.sys);
        for (e, coeff) in self.terms() {
            out.add_term(e, &coeff.scale(s));
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Scalar::from_int(n))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(self.sys);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to x_{var,coord}.
    pub fn partial(&self, var: usize, coord: usize) -> Self {
        let slot = self.sys.slot(var, coord);
        let mut out = Self::zero(self.sys);
        for (e, c) in self.terms() {
            let p = e[slot];
            if p == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[slot] = p - 1;
            out.add_term(&exps, &c.scale_int(p as i64));
        }
        out
    }

    /// Multiplication by the scalar coordinate x_{var,coord}.
    pub fn mul_coordinate(&self, var: usize, coord: usize) -> Self {
        let slot = self.sys.slot(var, coord);
        let mut out = Self::zero(self.sys);
        for (e, c) in self.terms() {
            let mut exps = e.clone();
            exps[slot] += 1;
            out.add_term(&exps, c);
        }
        out
    }

    /// Degree in variable `var` (max total exponent over that block), or
    /// None for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms()
            .map(|(e, _)| {
                (0..self.sys.n)
                    .map(|a| e[self.sys.slot(var, a)] as u32)
                    .sum()
            })
            .max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// True when every term has the given per-variable degrees.
    pub fn is_multihomogeneous(&self, degrees: &[u32]) -> bool {
        assert_eq!(degrees.len(), self.sys.k);
        self.terms().all(|(e, _)| {
            (0..self.sys.k).all(|i| {
                let d: u32 = (0..self.sys.n).map(|a| e[self.sys.slot(i, a)] as u32).sum();
                d == degrees[i]
            })
        })
    }

    /// Evaluates at concrete vector values (one slice of length n per
    /// variable), in the approx backend.
    pub fn eval_f64(&self, points: &[Vec<f64>]) -> Multivector {
        assert_eq!(points.len(), self.sys.k);
        let mut out = Multivector::zero(self.sys.n as u32);
        for (e, c) in self.terms() {
            let mut v = 1.0f64;
            for i in 0..self.sys.k {
                for a in 0..self.sys.n {
                    let p = e[self.sys.slot(i, a)];
                    if p > 0 {
                        v *= points[i][a].powi(p as i32);
                    }
                }
            }
            out = out.add(&c.to_approx().scale(&Scalar::from_f64(v, 0.0)));
        }
        out
    }

    /// Evaluates with exact scalar coordinates per variable.
    pub fn eval_scalars(&self, points: &[Vec<Scalar>]) -> Multivector {
        assert_eq!(points.len(), self.sys.k);
        let mut out = Multivector::zero(self.sys.n as u32);
        for (e, c) in self.terms() {
            let mut v = Scalar::one_exact();
            for i in 0..self.sys.k {
                for a in 0..self.sys.n {
                    let p = e[self.sys.slot(i, a)];
                    for _ in 0..p {
                        v = v.mul(&points[i][a]);
                    }
                }
            }
            out = out.add(&c.scale(&v));
        }
        out
    }

    /// Largest coefficient magnitude; a crude but effective residual gauge.
    pub fn max_coeff_norm(&self) -> f64 {
        self.terms().map(|(_, c)| c.norm()).fold(0.0f64, f64::max)
    }

    pub fn to_approx(&self) -> Self {
        let mut out = Self::zero(self.sys);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), c.to_approx());
        }
        out
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]")?;
            for i in 0..self.sys.k {
                for a in 0..self.sys.n {
                    let p = e[self.sys.slot(i, a)];
                    if p == 1 {
                        write!(f, " x{i}_{a}")?;
                    } else if p > 1 {
                        write!(f, " x{i}_{a}^{p}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Wire format per the polynomial JSON interchange.
#[derive(Serialize, Deserialize)]
pub struct PolynomialRepr {
    pub k: usize,
    pub n: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
pub struct TermRepr {
    pub exps: Vec<u16>,
    pub coeff: crate::multivector::MultivectorRepr,
}

impl CliffordPolynomial {
    pub fn to_repr(&self) -> PolynomialRepr {
        PolynomialRepr {
            k: self.sys.k,
            n: self.sys.n,
            terms: self
                .terms()
                .map(|(e, c)| TermRepr {
                    exps: e.clone(),
                    coeff: c.to_repr(),
                })
                .collect(),
        }
    }

    pub fn from_repr(repr: &PolynomialRepr) -> Result<Self> {
        let sys = VarSystem::new(repr.k, repr.n);
        let mut p = Self::zero(sys);
        for t in &repr.terms {
            if t.exps.len() != sys.indeterminates() {
                return Err(Error::Malformed("exponent vector length mismatch".into()));
            }
            let c = Multivector::from_repr(&t.coeff)?;
            if c.dim() as usize != repr.n {
                return Err(Error::Malformed("coefficient dimension mismatch".into()));
            }
            p.add_term(&t.exps, &c);
        }
        Ok(p)
    }
}
