//! The symbolic differential-operator calculus: Dirac, Laplace, Gamma,
//! Euler and mixed operators, and the operator identities that tie them
//! together — all decided with exact arithmetic.
//!
//! Run with `cargo run --example operator_calculus`.

use cliffwave::multivector::Multivector;
use cliffwave::poly::diffops::{
    casimir_h, casimir_l, casimir_l_via_squares, dirac, euclidean_pair_term, euler, gamma,
    laplacian, mixed_euler, mixed_laplacian, overdot_mixed,
};
use cliffwave::poly::{CliffordPolynomial, VarSystem};
use cliffwave::scalar::Scalar;

fn main() {
    let sys = VarSystem::new(1, 3);
    let x = CliffordPolynomial::vector_variable(sys, 0);

    println!("Dirac of the vector variable: D x = {}", dirac(&x, 0).unwrap());

    // the degree-1 monogenic x_1 + x_0 e0 e1 over coordinates (0, 1)
    let sys2 = VarSystem::new(1, 2);
    let e01 = Multivector::generator(2, 0).mul(&Multivector::generator(2, 1));
    let p1 = CliffordPolynomial::coordinate(sys2, 0, 1)
        .add(&CliffordPolynomial::coordinate(sys2, 0, 0).mul_const_left(&e01));
    println!("D (x_1 + x_0 e01) = {}", dirac(&p1, 0).unwrap());
    println!("Gamma (x_1 + x_0 e01) = {}  (inner monogenic, eigenvalue -1)",
        gamma(&p1, 0).unwrap());

    // the holomorphic square is harmonic
    let z = CliffordPolynomial::coordinate(sys, 0, 0)
        .sub(&CliffordPolynomial::coordinate(sys, 0, 1).scale(&Scalar::i_exact()));
    let z2 = z.pow(2);
    println!("\nLaplacian of (x - i y)^2: {}", laplacian(&z2, 0).unwrap());
    println!("spherical Casimir of (x - i y)^2: eigenvalue -6:");
    println!("  casimir_h p == -6 p: {}", casimir_h(&z2) == z2.scale_int(-6));

    // Euler operator scales by the homogeneity degree
    let cubic = CliffordPolynomial::coordinate(sys, 0, 0).pow(3);
    println!("\nEuler on x^3: {}", euler(&cubic, 0).unwrap());

    // operator identities on a random-ish polynomial, decided exactly
    let p = z2
        .mul(&CliffordPolynomial::coordinate(sys, 0, 2))
        .add(&x.mul(&x))
        .mul_const_left(&Multivector::generator(3, 1));
    let gp = gamma(&p, 0).unwrap();
    let lhs = casimir_h(&p);
    let rhs = gp.scale_int(1).sub(&gamma(&gp, 0).unwrap()); // n-2 = 1
    println!("\nsum L^2 == Gamma(n-2-Gamma): {}", lhs == rhs);
    println!(
        "L(Omega) == H(Omega) + Gamma - n(n-1)/8: {}",
        casimir_l_via_squares(&p) == casimir_l(&p, None)
    );

    // the mixed Laplacian and the corrected overdot identity
    let sys4 = VarSystem::new(2, 3);
    let q = CliffordPolynomial::coordinate(sys4, 0, 0)
        .mul(&CliffordPolynomial::coordinate(sys4, 1, 0));
    let ml = mixed_laplacian(&q, 0, 1).unwrap();
    let od = overdot_mixed(&q, 0, 1).unwrap();
    println!("\nmixed Laplacian of x_{{0,0}} x_{{1,0}}: {ml}");
    println!("overdot composite of the same:     {od}");
    println!(
        "equal only after the <u,v><d_u,d_v> compensator: {}",
        ml == od.add(&euclidean_pair_term(&q, 0, 1).unwrap())
    );

    // mixed Euler and the simplicial condition
    let me = mixed_euler(&q, 0, 1).unwrap();
    println!("\nmixed Euler <x_0, d_1> of x_{{0,0}} x_{{1,0}}: {me}");
}
