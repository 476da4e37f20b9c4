//! Spin(m): even unit multivectors, the bivector Lie algebra, the
//! exponential map, the fundamental actions h and l, and the double cover
//! onto SO(m).

use crate::blade::BladeIndex;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// A pure grade-2 element of `Cl_m`, i.e. an element of spin(m).
#[derive(Clone, PartialEq, Debug)]
pub struct Bivector {
    mv: Multivector,
}

impl Bivector {
    pub fn new(mv: Multivector) -> Result<Self> {
        if !mv.is_zero() && !mv.is_grade(2) {
            return Err(Error::NotABivector);
        }
        Ok(Bivector { mv })
    }

    /// The basis bivector `e_i e_j` (i < j, zero-based).
    pub fn basis(dim: u32, i: u32, j: u32) -> Self {
        assert!(i < j && j < dim, "bad bivector indices");
        let mv = Multivector::generator(dim, i).mul(&Multivector::generator(dim, j));
        Bivector { mv }
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn dim(&self) -> u32 {
        self.mv.dim()
    }

    pub fn add(&self, rhs: &Bivector) -> Bivector {
        Bivector {
            mv: self.mv.add(&rhs.mv),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Bivector {
        Bivector {
            mv: self.mv.scale(c),
        }
    }

    /// True when the bivector is a single basis blade `c * e_ij`.
    fn simple_blade(&self) -> Option<(BladeIndex, f64)> {
        if self.mv.num_terms() != 1 {
            return None;
        }
        let (b, s) = self.mv.terms().next().unwrap();
        let z = s.to_approx();
        if z.im != 0.0 {
            return None;
        }
        Some((b, z.re))
    }
}

/// An element of Spin(m): even, with s bar(s) = 1.
#[derive(Clone, PartialEq, Debug)]
pub struct SpinElement {
    s: Multivector,
}

impl SpinElement {
    /// Validates the structural invariants. Exact inputs must satisfy
    /// s bar(s) == 1 identically; approx inputs within 1e-12.
    pub fn new(s: Multivector) -> Result<Self> {
        if !s.is_even() {
            return Err(Error::NotASpinElement("odd-grade part present".into()));
        }
        let prod = s.mul(&s.bar());
        let dev = prod.sub(&Multivector::one(s.dim()));
        let exact = s.terms().all(|(_, c)| c.is_exact());
        if exact {
            if !dev.is_zero() {
                return Err(Error::NotASpinElement("s bar(s) != 1".into()));
            }
        } else if dev.norm() > 1e-12 {
            return Err(Error::NotASpinElement(format!(
                "s bar(s) deviates from 1 by {:.3e}",
                dev.norm()
            )));
        }
        Ok(SpinElement { s })
    }

    pub fn identity(dim: u32) -> Self {
        SpinElement {
            s: Multivector::one(dim),
        }
    }

    /// Product of two unit vectors; the generating case of Spin(m).
    pub fn from_unit_vector_pair(u: &Multivector, v: &Multivector) -> Result<Self> {
        SpinElement::new(u.mul(v))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.s
    }

    pub fn dim(&self) -> u32 {
        self.s.dim()
    }

    pub fn neg(&self) -> SpinElement {
        SpinElement { s: self.s.neg() }
    }

    pub fn mul(&self, rhs: &SpinElement) -> SpinElement {
        SpinElement {
            s: self.s.mul(&rhs.s),
        }
    }

    /// Group inverse; bar(s) inverts unit even products.
    pub fn inverse(&self) -> SpinElement {
        SpinElement { s: self.s.bar() }
    }

    /// Serialized as the underlying multivector.
    pub fn to_repr(&self) -> crate::multivector::MultivectorRepr {
        self.s.to_repr()
    }

    /// Deserializes and re-validates the invariants.
    pub fn from_repr(repr: &crate::multivector::MultivectorRepr) -> Result<SpinElement> {
        SpinElement::new(Multivector::from_repr(repr)?)
    }
}

/// Row-major CSV of the SO(m) matrix of a spin element.
pub fn rotation_matrix_csv(s: &SpinElement) -> String {
    rotation_matrix(s)
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| format!("{x:e}"))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// exp(t X) for a bivector X. Simple basis bivectors use the closed form
/// cos(ct) + sin(ct) e_ij; general bivectors fall back to the power series,
/// which terminates when the term norm drops below 1e-17.
pub fn exp_bivector(x: &Bivector, t: f64) -> Result<SpinElement> {
    let dim = x.dim();
    if let Some((blade, c)) = x.simple_blade() {
        let angle = c * t;
        let mut s = Multivector::scalar(dim, Scalar::from_f64(angle.cos(), 0.0));
        s.add_to(blade, &Scalar::from_f64(angle.sin(), 0.0));
        return SpinElement::new(s);
    }
    let xt = x.as_multivector().to_approx().scale(&Scalar::from_f64(t, 0.0));
    let mut sum = Multivector::one(dim).to_approx();
    let mut term = Multivector::one(dim).to_approx();
    let mut k = 1u32;
    loop {
        term = term.mul(&xt).scale(&Scalar::from_f64(1.0 / k as f64, 0.0));
        sum = sum.add(&term);
        if term.norm() < 1e-17 {
            break;
        }
        k += 1;
        if k > 300 {
            return Err(Error::ResourceCap("bivector exponential did not converge".into()));
        }
    }
    SpinElement::new(sum)
}

/// h(s) a = s a s^{-1}; grade-preserving algebra automorphism, a rotation on
/// 1-vectors.
pub fn action_h(s: &SpinElement, a: &Multivector) -> Multivector {
    s.as_multivector().mul(a).mul(&s.inverse().as_multivector().clone())
}

/// l(s) a = s a; left multiplication.
pub fn action_l(s: &SpinElement, a: &Multivector) -> Multivector {
    s.as_multivector().mul(a)
}

/// The SO(m) matrix of h(s) on 1-vectors: column j holds the coordinates of
/// s e_j s^{-1}. Row-major.
pub fn rotation_matrix(s: &SpinElement) -> Vec<Vec<f64>> {
    let dim = s.dim() as usize;
    let mut rows = vec![vec![0.0; dim]; dim];
    for j in 0..dim {
        let img = action_h(s, &Multivector::generator(s.dim(), j as u32));
        for i in 0..dim {
            let c = img.get(BladeIndex::generator(i as u32)).to_approx();
            debug_assert!(c.im.abs() < 1e-12, "rotation image not real");
            rows[i][j] = c.re;
        }
    }
    rows
}

/// Killing form on spin(m), normalized so that ||(1/2) e_ij||_B = 1.
///
/// For m >= 3 this is the adjoint-action trace over the bivector basis,
/// rescaled by one dimension constant. so(2) is abelian and its ad-trace
/// vanishes identically, so m = 2 uses the blade scalar product under the
/// same normalization.
pub fn killing_form(x: &Bivector, y: &Bivector) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    let dim = x.dim();
    if dim == 2 {
        let ip = x.as_multivector().inner(y.as_multivector()).to_approx();
        return Ok(4.0 * ip.re);
    }
    let raw = ad_trace(x, y);
    let half = Bivector::basis(dim, 0, 1).scale(&Scalar::from_ratio(1, 2));
    let kappa = ad_trace(&half, &half);
    Ok(raw / kappa)
}

/// tr(ad_X ad_Y) over the bivector basis.
fn ad_trace(x: &Bivector, y: &Bivector) -> f64 {
    let dim = x.dim();
    let ad = |w: &Multivector, b: &Multivector| w.mul(b).sub(&b.mul(w));
    let mut trace = 0.0;
    for i in 0..dim {
        for j in (i + 1)..dim {
            let basis = Bivector::basis(dim, i, j);
            let img = ad(x.as_multivector(), &ad(y.as_multivector(), basis.as_multivector()));
            // coefficient of e_ij in the image
            let (blade, _) = basis.as_multivector().terms().next().unwrap();
            trace += img.get(blade).to_approx().re;
        }
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn random_unit_vector(rng: &mut SeededRng, dim: u32) -> Multivector {
        loop {
            let coords: Vec<f64> = (0..dim).map(|_| rng.symmetric()).collect();
            let n: f64 = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-3 {
                let unit: Vec<f64> = coords.iter().map(|x| x / n).collect();
                return Multivector::vector_f64(dim, &unit);
            }
        }
    }

    pub fn random_spin(rng: &mut SeededRng, dim: u32, pairs: usize) -> SpinElement {
        let mut s = SpinElement::identity(dim);
        for _ in 0..pairs {
            let u = random_unit_vector(rng, dim);
            let v = random_unit_vector(rng, dim);
            s = s.mul(&SpinElement::from_unit_vector_pair(&u, &v).unwrap());
        }
        s
    }

    #[test]
    fn exp_at_zero_is_identity() {
        let x = Bivector::basis(3, 0, 1);
        let s = exp_bivector(&x, 0.0).unwrap();
        assert_eq!(s.as_multivector().clone(), Multivector::one(3).to_approx());
    }

    #[test]
    fn exp_quarter_turn_is_the_bivector() {
        // exp((pi/2) e_01) = cos(pi/2) + sin(pi/2) e_01 = e_01
        let x = Bivector::basis(3, 0, 1);
        let s = exp_bivector(&x, std::f64::consts::FRAC_PI_2).unwrap();
        let got = s.as_multivector();
        let e01 = BladeIndex(0b11);
        assert!((got.get(e01).to_approx().re - 1.0).abs() < 1e-16);
        assert!(got.get(BladeIndex::SCALAR).to_approx().re.abs() < 1e-16);
    }

    #[test]
    fn closed_form_matches_series() {
        // force the series path with a non-simple bivector equal to e_01 + e_23
        let x = Bivector::basis(4, 0, 1).add(&Bivector::basis(4, 2, 3));
        let s = exp_bivector(&x, 0.7).unwrap();
        // e_01 and e_23 commute, so exp splits
        let a = exp_bivector(&Bivector::basis(4, 0, 1), 0.7).unwrap();
        let b = exp_bivector(&Bivector::basis(4, 2, 3), 0.7).unwrap();
        let dev = s.as_multivector().sub(a.mul(&b).as_multivector());
        assert!(dev.norm() < 1e-14);
    }

    #[test]
    fn h_action_rotates_vectors() {
        // s = exp(e_01 theta/2) rotates e_0 -> cos(theta) e_0 + sin(theta) e_1
        let theta: f64 = 0.8;
        let s = exp_bivector(&Bivector::basis(3, 0, 1), theta / 2.0).unwrap();
        let img = action_h(&s, &Multivector::generator(3, 0));
        let want = Multivector::vector_f64(3, &[theta.cos(), theta.sin(), 0.0]);
        assert!(img.sub(&want).norm() < 1e-15);
        // quarter turn: e_0 -> e_1
        let s = exp_bivector(&Bivector::basis(3, 0, 1), std::f64::consts::FRAC_PI_4).unwrap();
        let img = action_h(&s, &Multivector::generator(3, 0));
        assert!(img.sub(&Multivector::generator(3, 1).to_approx()).norm() < 1e-15);
    }

    #[test]
    fn h_fixes_scalars_and_identity_fixes_everything() {
        let mut rng = SeededRng::new(11);
        let s = random_spin(&mut rng, 4, 3);
        let c = Multivector::from_int(4, 5);
        assert!(action_h(&s, &c).sub(&c.to_approx()).norm() < 1e-12);
        let a = Multivector::generator(4, 1).mul(&Multivector::generator(4, 2));
        let id = SpinElement::identity(4);
        assert_eq!(action_h(&id, &a), a);
        assert_eq!(action_l(&id, &a), a);
    }

    #[test]
    fn l_action_is_left_multiplication_homomorphism() {
        // l(e_0 e_1) e_0 = e_0 e_1 e_0 = e_1
        let s = SpinElement::new(
            Multivector::generator(2, 0).mul(&Multivector::generator(2, 1)),
        )
        .unwrap();
        let img = action_l(&s, &Multivector::generator(2, 0));
        assert_eq!(img, Multivector::generator(2, 1));
        // composition
        let mut rng = SeededRng::new(5);
        let s1 = random_spin(&mut rng, 3, 2);
        let s2 = random_spin(&mut rng, 3, 2);
        let a = Multivector::generator(3, 0).add(&Multivector::generator(3, 2));
        let lhs = action_l(&s1, &action_l(&s2, &a));
        let rhs = action_l(&s1.mul(&s2), &a);
        assert!(lhs.sub(&rhs).norm() < 1e-13);
    }

    #[test]
    fn rotation_matrix_basics() {
        let id = rotation_matrix(&SpinElement::identity(3));
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((id[i][j] - want).abs() < 1e-15);
            }
        }
        let theta: f64 = 1.1;
        let s = exp_bivector(&Bivector::basis(2, 0, 1), theta / 2.0).unwrap();
        let r = rotation_matrix(&s);
        assert!((r[0][0] - theta.cos()).abs() < 1e-14);
        assert!((r[1][0] - theta.sin()).abs() < 1e-14);
        assert!((r[0][1] + theta.sin()).abs() < 1e-14);
    }

    #[test]
    fn double_cover_and_orthogonality() {
        let mut rng = SeededRng::new(99);
        for dim in [3u32, 4, 5] {
            for _ in 0..20 {
                let pairs = 1 + rng.below(3);
                let s = random_spin(&mut rng, dim, pairs);
                let r = rotation_matrix(&s);
                let rneg = rotation_matrix(&s.neg());
                let n = dim as usize;
                let mut max_dev: f64 = 0.0;
                let mut max_orth: f64 = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        max_dev = max_dev.max((r[i][j] - rneg[i][j]).abs());
                        let mut dot = 0.0;
                        for k in 0..n {
                            dot += r[k][i] * r[k][j];
                        }
                        let want = if i == j { 1.0 } else { 0.0 };
                        max_orth = max_orth.max((dot - want).abs());
                    }
                }
                assert!(max_dev < 1e-12, "double cover violated: {max_dev}");
                assert!(max_orth < 1e-12, "R^T R != I: {max_orth}");
            }
        }
    }

    #[test]
    fn rotation_is_homomorphism() {
        let mut rng = SeededRng::new(7);
        let s1 = random_spin(&mut rng, 4, 2);
        let s2 = random_spin(&mut rng, 4, 2);
        let r1 = rotation_matrix(&s1);
        let r2 = rotation_matrix(&s2);
        let r12 = rotation_matrix(&s1.mul(&s2));
        for i in 0..4 {
            for j in 0..4 {
                let mut prod = 0.0;
                for k in 0..4 {
                    prod += r1[i][k] * r2[k][j];
                }
                assert!((prod - r12[i][j]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exp_one_parameter_group() {
        let x = Bivector::basis(4, 1, 3);
        let (t, u) = (0.3, 1.9);
        let a = exp_bivector(&x, t).unwrap().mul(&exp_bivector(&x, u).unwrap());
        let b = exp_bivector(&x, t + u).unwrap();
        assert!(a.as_multivector().sub(b.as_multivector()).norm() < 1e-13);
    }

    #[test]
    fn killing_form_normalization() {
        for dim in [2u32, 3, 4, 5] {
            for i in 0..dim {
                for j in (i + 1)..dim {
                    for k in 0..dim {
                        for l in (k + 1)..dim {
                            let x = Bivector::basis(dim, i, j).scale(&Scalar::from_ratio(1, 2));
                            let y = Bivector::basis(dim, k, l).scale(&Scalar::from_ratio(1, 2));
                            let b = killing_form(&x, &y).unwrap();
                            let want = if (i, j) == (k, l) { 1.0 } else { 0.0 };
                            assert!(
                                (b - want).abs() < 1e-10,
                                "B(e{i}{j}/2, e{k}{l}/2) = {b} in dim {dim}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn killing_form_linearity_and_zero() {
        let x = Bivector::basis(4, 0, 1);
        let zero = Bivector::new(Multivector::zero(4)).unwrap();
        assert_eq!(killing_form(&zero, &x).unwrap(), 0.0);
    }

    #[test]
    fn h_preserves_clifford_inner_product() {
        let mut rng = SeededRng::new(21);
        let s = random_spin(&mut rng, 4, 3);
        let a = Multivector::generator(4, 0)
            .mul(&Multivector::generator(4, 1))
            .add(&Multivector::generator(4, 2).scale(&Scalar::from_f64(0.3, -0.1)));
        let b = Multivector::generator(4, 3).add(&Multivector::one(4));
        let before = a.inner(&b).to_approx();
        let after = action_h(&s, &a).inner(&action_h(&s, &b)).to_approx();
        assert!((before - after).norm() < 1e-12);
    }

    #[test]
    fn spin_element_validation() {
        // a bare vector is odd
        assert!(SpinElement::new(Multivector::generator(3, 0)).is_err());
        // a non-unit even element fails
        assert!(SpinElement::new(Multivector::from_int(3, 2)).is_err());
    }
}
