//! Spherical monogenic analysis on S^m: exact moments, product quadrature,
//! the inner (CK) and outer (kernel-derivative) basis families, the
//! sampled/spectral transforms, and zonal Gegenbauer kernels.

pub mod basis;
pub mod ck;
pub mod moments;
pub mod quadrature;
pub mod transform;
pub mod zonal;

pub use basis::{BasisElement, BasisEvaluation, MonogenicBasis, Part};
pub use ck::{ck_extension, outer_generator, RationalKernel};
pub use moments::{moment_ratio, sphere_area};
pub use quadrature::{build_quadrature, QuadratureRule};
pub use transform::{
    RotateMode, SpecKey, SpectralCoefficients, SpectralDiagonal, SphereContext, SphereSignal,
};
pub use zonal::{gegenbauer, unit_zonal, zonal_minus, zonal_minus_degree, zonal_plus_degree};
