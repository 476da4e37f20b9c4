//! The spherical monogenic transform: exact basis construction, quadrature,
//! analysis/synthesis round trip, Parseval, rotation of signals, and the
//! convolution theorem against the rotation-group oracle.
//!
//! Run with `cargo run --release --example sphere_transform`.

use cliffwave::cli::random_signal;
use cliffwave::sphere::{Part, RotateMode, SphereContext};
use cliffwave::spin::{exp_bivector, Bivector};

fn main() {
    let m = 2;
    let max_degree = 6;
    let ctx = SphereContext::new(m, max_degree).unwrap();
    println!(
        "S^{m}: basis to degree {max_degree}, {} elements, quadrature {} nodes (exactness {})",
        ctx.basis.len(),
        ctx.rule.len(),
        ctx.rule.exactness
    );
    for k in 0..=max_degree {
        println!(
            "  degree {k}: dim V = {}, dim W = {} (dropped dependent outer generators: {})",
            ctx.basis.dim_of(Part::Inner, k),
            ctx.basis.dim_of(Part::Outer, k),
            ctx.basis
                .dropped
                .iter()
                .filter(|(p, d, _)| *p == Part::Outer && *d == k)
                .count()
        );
    }

    let f = random_signal(&ctx, 42);
    let coeffs = ctx.analyze(&f).unwrap();
    let back = ctx.synthesize(&coeffs).unwrap();
    println!(
        "\nanalyze -> synthesize relative L2 error: {:.3e}",
        ctx.relative_l2_error(&back, &f)
    );

    let parseval_lhs = ctx.l2_inner(&f, &f);
    let parseval_rhs = ctx.coefficient_energy(&coeffs);
    println!(
        "Parseval: ||f||^2 = {parseval_lhs:.6}, coefficient energy = {parseval_rhs:.6}, \
         relative gap {:.2e}",
        ((parseval_lhs - parseval_rhs) / parseval_lhs).abs()
    );

    // rotate by a spin element: unitary, invertible
    let s = exp_bivector(&Bivector::basis((m + 1) as u32, 0, 2), 0.7).unwrap();
    let g = ctx.rotate_signal(&s, &f, RotateMode::H).unwrap();
    println!(
        "\nH-rotation: norm before {:.6}, after {:.6}",
        ctx.l2_norm(&f),
        ctx.l2_norm(&g)
    );
    let back = ctx.rotate_signal(&s.inverse(), &g, RotateMode::H).unwrap();
    println!(
        "rotate then unrotate, relative error {:.3e}",
        ctx.relative_l2_error(&back, &f)
    );

    // the convolution theorem against the direct group integral (S^2 only)
    let ctx3 = SphereContext::new(2, 3).unwrap();
    let fc = ctx3.analyze(&random_signal(&ctx3, 1)).unwrap();
    let hc = ctx3.analyze(&random_signal(&ctx3, 2)).unwrap();
    let xi = [0.0, 0.6, 0.8];
    let omega = [1.0, 0.0, 0.0];
    let spectral = ctx3.convolution_two_point(&fc, &hc, &xi, &omega);
    let direct = ctx3
        .convolution_direct_so3(&fc, &hc, &xi, &omega, 4)
        .unwrap();
    println!(
        "\nconvolution: spectral closed form vs SO(3) quadrature, deviation {:.3e}",
        spectral.sub(&direct).norm() / direct.norm()
    );
}
