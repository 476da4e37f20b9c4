//! Clifford-valued diffusive wavelets on the sphere S^m and the group Spin(m).
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`], [`blade`], [`multivector`] — exact and floating-point
//!   arithmetic in the complex Clifford algebra `Cl_m` (e_j^2 = -1).
//! * [`spin`] — Spin(m) elements, the bivector Lie algebra, the exponential
//!   map, the h/l group actions and the double cover onto SO(m).
//! * [`poly`] — Clifford-coefficient polynomials in several vector variables
//!   and the differential-operator calculus (Dirac, Laplace, Gamma, Casimir
//!   images), simplicial systems and highest-weight vectors.
//! * [`sphere`] — spherical monogenic bases (CK extensions and outer
//!   kernels), exact sphere moments, product quadrature, analysis/synthesis,
//!   sphere convolution and zonal Gegenbauer kernels.
//! * [`wavelet`] — heat kernels, diffusive wavelet families, forward and
//!   inverse transforms on S^m, and eigenfunctions/wavelets on Spin(m).
//! * [`cli`] — the file-based command line driver.
//!
//! Start with the examples directory: each example is a runnable tour of one
//! capability (`cargo run --example sphere_transform`, etc.).

pub mod blade;
pub mod cli;
pub mod error;
pub mod multivector;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod sphere;
pub mod spin;
pub mod verify;
pub mod wavelet;

pub use blade::BladeIndex;
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use scalar::Scalar;
