//! Complex scalar coefficients with two interchangeable backends.
//!
//! The exact backend keeps arbitrary-precision rational real and imaginary
//! parts so that eigenvalue identities can be decided with zero tolerance.
//! The approx backend is a plain `Complex<f64>` used by quadrature and the
//! numeric transforms. Mixing the two in arithmetic promotes to approx.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

type ExactComplex = num_complex::Complex<BigRational>;

#[derive(Clone, PartialEq)]
pub enum Scalar {
    Exact(ExactComplex),
    Approx(Complex64),
}

impl Scalar {
    pub fn zero_exact() -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::zero(), BigRational::zero()))
    }

    pub fn one_exact() -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::one(), BigRational::zero()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact(ExactComplex::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        ))
    }

    /// Exact rational `p/q`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Exact(ExactComplex::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        ))
    }

    /// Exact Gaussian rational `pr/qr + (pi/qi) i`.
    pub fn from_ratio_complex(pr: i64, qr: i64, pi: i64, qi: i64) -> Self {
        assert!(qr != 0 && qi != 0, "zero denominator");
        Scalar::Exact(ExactComplex::new(
            BigRational::new(BigInt::from(pr), BigInt::from(qr)),
            BigRational::new(BigInt::from(pi), BigInt::from(qi)),
        ))
    }

    pub fn from_rational(re: BigRational, im: BigRational) -> Self {
        Scalar::Exact(ExactComplex::new(re, im))
    }

    /// The exact imaginary unit.
    pub fn i_exact() -> Self {
        Scalar::Exact(ExactComplex::new(BigRational::zero(), BigRational::one()))
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(z) => z.re.is_zero() && z.im.is_zero(),
            Scalar::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn to_approx(&self) -> Complex64 {
        match self {
            Scalar::Exact(z) => Complex64::new(
                z.re.to_f64().unwrap_or(f64::NAN),
                z.im.to_f64().unwrap_or(f64::NAN),
            ),
            Scalar::Approx(z) => *z,
        }
    }

    /// Lifts an approx value into the exact backend. Every finite f64 is a
    /// dyadic rational, so this is lossless.
    pub fn to_exact(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => self.clone(),
            Scalar::Approx(z) => Scalar::Exact(ExactComplex::new(
                BigRational::from_float(z.re).expect("non-finite value"),
                BigRational::from_float(z.im).expect("non-finite value"),
            )),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(ExactComplex::new(z.re.clone(), -z.im.clone())),
            Scalar::Approx(z) => Scalar::Approx(z.conj()),
        }
    }

    pub fn exact_parts(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            Scalar::Exact(z) => Some((&z.re, &z.im)),
            Scalar::Approx(_) => None,
        }
    }

    /// Exact real part when the value is exact and purely real.
    pub fn as_exact_real(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(z) if z.im.is_zero() => Some(&z.re),
            _ => None,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        match self {
            Scalar::Exact(z) => {
                let n = &z.re * &z.re + &z.im * &z.im;
                n.to_f64().unwrap_or(f64::NAN)
            }
            Scalar::Approx(z) => z.norm_sqr(),
        }
    }

    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero scalar");
        match self {
            Scalar::Exact(z) => {
                let n = &z.re * &z.re + &z.im * &z.im;
                Scalar::Exact(ExactComplex::new(&z.re / &n, -(&z.im / &n)))
            }
            Scalar::Approx(z) => Scalar::Approx(z.inv()),
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        exact: impl Fn(&ExactComplex, &ExactComplex) -> ExactComplex,
        approx: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(exact(a, b)),
            _ => Scalar::Approx(approx(self.to_approx(), rhs.to_approx())),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.clone() + b.clone(), |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.clone() - b.clone(), |a, b| a - b)
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.clone() * b.clone(), |a, b| a * b)
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.recip())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(-z.clone()),
            Scalar::Approx(z) => Scalar::Approx(-z),
        }
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::from_int(n))
    }

    /// Renders a rational as the `p/q` form used by the JSON interchange
    /// format (plain integer when the denominator is one).
    pub fn rational_string(r: &BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    pub fn parse_rational(s: &str) -> Option<BigRational> {
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        } else {
            let p: BigInt = s.trim().parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(z) => {
                if z.im.is_zero() {
                    write!(f, "{}", Self::rational_string(&z.re))
                } else if z.re.is_zero() {
                    write!(f, "{}i", Self::rational_string(&z.im))
                } else if z.im.is_negative() {
                    write!(
                        f,
                        "{}-{}i",
                        Self::rational_string(&z.re),
                        Self::rational_string(&-z.im.clone())
                    )
                } else {
                    write!(
                        f,
                        "{}+{}i",
                        Self::rational_string(&z.re),
                        Self::rational_string(&z.im)
                    )
                }
            }
            Scalar::Approx(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else {
                    write!(f, "{}{:+}i", z.re, z.im)
                }
            }
        }
    }
}
