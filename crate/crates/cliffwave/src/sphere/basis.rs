//! Orthogonal bases of spherical monogenics with exact Gram data.
//!
//! Within each degree and part the raw generators are orthogonalized as a
//! right Clifford module: coefficients multiply from the right and the Gram
//! pairing (f,g) = integral of bar(f) g over the sphere takes values in the
//! algebra. Gram-Schmidt over the algebra keeps the arithmetic exact — the
//! pivots (B_i, B_i) are bar-self-adjoint invertible elements whose exact
//! inverses replace the usual 1/sqrt normalization, so no square roots are
//! introduced. Across degrees and parts the families are exactly orthogonal
//! already (distinct Gamma eigenvalues).
//!
//! All stored Gram data is the rational ratio to the sphere area A_m; the
//! area enters only in the numeric evaluation layer.

use super::ck::{ck_extension, outer_generator};
use super::moments::{moment_ratio, sphere_area};
use super::quadrature::QuadratureRule;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::poly::diffops::poly_bar;
use crate::poly::CliffordPolynomial;
use crate::scalar::Scalar;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Part {
    /// Inner spherical monogenics (CK extensions), degree k.
    Inner,
    /// Outer spherical monogenics; stored as the sphere restriction of the
    /// kernel derivative times A_m, a polynomial of degree k+1.
    Outer,
}

impl Part {
    pub fn tag(&self) -> &'static str {
        match self {
            Part::Inner => "V",
            Part::Outer => "W",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Part> {
        match tag {
            "V" => Some(Part::Inner),
            "W" => Some(Part::Outer),
            _ => None,
        }
    }
}

#[derive(Clone)]
pub struct BasisElement {
    pub part: Part,
    pub degree: usize,
    /// Multi-index of the raw generator this element descends from
    /// (lexicographic pivot); the key used in coefficient maps.
    pub label: Vec<u16>,
    /// Exact orthogonalized polynomial (for Outer, carries the implicit
    /// 1/A_m of the kernel normalization).
    pub poly: CliffordPolynomial,
    /// Exact Gram pivot ratio: (B, B) = pivot * A_m.
    pub pivot: Multivector,
    /// Exact inverse of the pivot ratio.
    pub pivot_inv: Multivector,
}

/// The exact Clifford-valued Gram ratio: integral of bar(p) q over S^m
/// equals the returned multivector times A_m.
pub fn gram_ratio(p: &CliffordPolynomial, q: &CliffordPolynomial) -> Multivector {
    let prod = poly_bar(p).mul(q);
    let n = prod.system().n as u32;
    let mut acc = Multivector::zero(n);
    for (e, c) in prod.terms() {
        let r = moment_ratio(e);
        if !num_traits::Zero::is_zero(&r) {
            acc = acc.add(&c.scale(&Scalar::from_rational(
                r,
                num_rational::BigRational::from_integer(0.into()),
            )));
        }
    }
    acc
}

pub struct MonogenicBasis {
    pub m: usize,
    pub max_degree: usize,
    pub elements: Vec<BasisElement>,
    /// Raw generators dropped as module-dependent, with their indices.
    pub dropped: Vec<(Part, usize, Vec<u16>)>,
}

/// Multi-indices of total degree k over `coords` coordinates, lexicographic.
pub fn multi_indices(coords: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; coords];
    fn rec(pos: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for v in (0..=left).rev() {
            cur[pos] = v;
            rec(pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    if coords == 0 {
        return out;
    }
    rec(0, k as u16, &mut cur, &mut out);
    out
}

impl MonogenicBasis {
    /// Builds the orthogonalized basis on S^m up to degree K.
    pub fn build(m: usize, max_degree: usize) -> Result<MonogenicBasis> {
        if m < 2 {
            return Err(Error::Unsupported(
                "spherical bases need m >= 2 (the circle is out of scope)".into(),
            ));
        }
        let mut elements = Vec::new();
        let mut dropped = Vec::new();
        for k in 0..=max_degree {
            for part in [Part::Inner, Part::Outer] {
                let raw: Vec<(Vec<u16>, CliffordPolynomial)> = match part {
                    Part::Inner => multi_indices(m, k)
                        .into_iter()
                        .map(|a| (a.clone(), ck_extension(m, &a)))
                        .collect(),
                    Part::Outer => multi_indices(m + 1, k)
                        .into_iter()
                        .map(|a| (a.clone(), outer_generator(m, &a)))
                        .collect(),
                };
                let mut kept: Vec<BasisElement> = Vec::new();
                for (label, gen) in raw {
                    let mut cur = gen;
                    for e in &kept {
                        let g = gram_ratio(&e.poly, &cur);
                        if !g.is_zero() {
                            let coeff = e.pivot_inv.mul(&g);
                            cur = cur.sub(&e.poly.mul_const_right(&coeff));
                        }
                    }
                    let pivot = gram_ratio(&cur, &cur);
                    if pivot.is_zero() {
                        dropped.push((part, k, label));
                        continue;
                    }
                    let pivot_inv = match pivot.inverse() {
                        Some(inv) => inv,
                        None => {
                            dropped.push((part, k, label));
                            continue;
                        }
                    };
                    kept.push(BasisElement {
                        part,
                        degree: k,
                        label,
                        poly: cur,
                        pivot,
                        pivot_inv,
                    });
                }
                elements.extend(kept);
            }
        }
        Ok(MonogenicBasis {
            m,
            max_degree,
            elements,
            dropped,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dim_of(&self, part: Part, degree: usize) -> usize {
        self.elements
            .iter()
            .filter(|e| e.part == part && e.degree == degree)
            .count()
    }

    /// Numeric evaluation cache at the nodes of a rule. Outer elements pick
    /// up the 1/A_m kernel factor here.
    pub fn evaluate(&self, rule: &QuadratureRule) -> BasisEvaluation {
        let area = sphere_area(self.m);
        let values = self
            .elements
            .iter()
            .map(|e| {
                let scale = match e.part {
                    Part::Inner => 1.0,
                    Part::Outer => 1.0 / area,
                };
                rule.nodes
                    .iter()
                    .map(|x| {
                        e.poly
                            .eval_f64(std::slice::from_ref(x))
                            .scale(&Scalar::from_f64(scale, 0.0))
                    })
                    .collect()
            })
            .collect();
        // coefficient normalizers: (B,B) with the numeric scales applied
        let normalizer_inv = self
            .elements
            .iter()
            .map(|e| {
                let scale = match e.part {
                    Part::Inner => 1.0 / area,
                    // outer carries (1/A)^2 from the two kernel factors,
                    // gram itself is ratio * A: net 1/A of the inner case
                    // times an extra 1/A^... : (1/A^2) * A = 1/A, inverse A
                    Part::Outer => area,
                };
                e.pivot_inv.to_approx().scale(&Scalar::from_f64(scale, 0.0))
            })
            .collect();
        BasisEvaluation {
            m: self.m,
            values,
            normalizer_inv,
        }
    }

    pub fn index_of(&self, part: Part, degree: usize, label: &[u16]) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e.part == part && e.degree == degree && e.label == label)
    }
}

/// Numeric side of a basis: element values at quadrature nodes and the
/// inverse normalizers (d_i^{-1} with all area factors folded in), such
/// that coefficients are c_i = normalizer_inv * sum_nodes w bar(B_i) f.
pub struct BasisEvaluation {
    pub m: usize,
    pub values: Vec<Vec<Multivector>>,
    pub normalizer_inv: Vec<Multivector>,
}
