//! Tour of the Clifford algebra core: exact and floating-point scalars,
//! the geometric product, grade projection, the main anti-involution and
//! the positive-definite inner product.
//!
//! Run with `cargo run --example clifford_arithmetic`.

use cliffwave::blade::BladeIndex;
use cliffwave::multivector::Multivector;
use cliffwave::scalar::Scalar;

fn main() {
    let dim = 3;
    let e0 = Multivector::generator(dim, 0);
    let e1 = Multivector::generator(dim, 1);

    println!("generators of Cl_3 square to -1:");
    println!("  e0 * e0 = {}", e0.mul(&e0));
    println!("  e0 e1 + e1 e0 = {}", e0.mul(&e1).add(&e1.mul(&e0)));

    let a = Multivector::one(dim)
        .add(&e0.scale(&Scalar::from_ratio(2, 3)))
        .add(&e0.mul(&e1).scale(&Scalar::from_ratio_complex(0, 1, 1, 2)));
    println!("\na = {a}");
    println!("grade 0 part: {}", a.grade_project(0));
    println!("grade 2 part: {}", a.grade_project(2));
    println!("bar(a)       = {}", a.bar());
    println!("<a, a>       = {}", a.inner(&a));

    // (1 + e0)(1 - e0) expands to 1 - e0^2 = 2, exactly
    let p = Multivector::one(dim).add(&e0);
    let q = Multivector::one(dim).sub(&e0);
    println!("\n(1 + e0)(1 - e0) = {}", p.mul(&q));

    // exact arithmetic: a third summed three times is exactly one
    let third = Multivector::scalar(dim, Scalar::from_ratio(1, 3));
    let sum = third.add(&third).add(&third);
    println!("1/3 + 1/3 + 1/3 = {} (exact)", sum);

    // the wedge of two vectors is their oriented plane
    let u = Multivector::vector_f64(dim, &[1.0, 2.0, 0.0]);
    let v = Multivector::vector_f64(dim, &[0.0, 1.0, 1.0]);
    println!("\nu ^ v = {}", u.wedge(&v));

    // blades are orthonormal for the Clifford inner product
    println!("\nblade Gram diagonal entries:");
    for b in BladeIndex::all(dim).take(4) {
        let mb = Multivector::blade(dim, b, Scalar::one_exact());
        println!("  <{}, {}> = {}", b.label(), b.label(), mb.inner(&mb));
    }

    // serialization round trip with exact rational coefficients
    let json = serde_json::to_string(&a.to_repr()).unwrap();
    println!("\nJSON form: {json}");
    let back = Multivector::from_repr(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, a);
    println!("round trip exact: ok");
}
