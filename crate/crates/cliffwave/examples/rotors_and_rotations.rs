//! Spin(m) in action: the bivector exponential, the h and l actions, the
//! rotation matrices of the double cover, and the Killing form
//! normalization.
//!
//! Run with `cargo run --example rotors_and_rotations`.

use cliffwave::multivector::Multivector;
use cliffwave::scalar::Scalar;
use cliffwave::spin::{
    action_h, action_l, exp_bivector, killing_form, rotation_matrix, Bivector, SpinElement,
};

fn print_matrix(r: &[Vec<f64>]) {
    for row in r {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:+.4}")).collect();
        println!("    [{}]", cells.join(", "));
    }
}

fn main() {
    let dim = 3;
    let theta = std::f64::consts::FRAC_PI_3;

    // exp(t e_01) = cos t + sin t e_01; the conjugation rotates by 2t
    let s = exp_bivector(&Bivector::basis(dim, 0, 1), theta / 2.0).unwrap();
    println!("s = exp(({theta:.4}/2) e01) = {}", s.as_multivector());

    let rotated = action_h(&s, &Multivector::generator(dim, 0));
    println!("h(s) e0 = {rotated}  (rotation by {theta:.4})");

    println!("\nrotation matrix of s:");
    print_matrix(&rotation_matrix(&s));
    println!("rotation matrix of -s (double cover -> same):");
    print_matrix(&rotation_matrix(&s.neg()));

    // left action on the algebra
    let a = Multivector::generator(dim, 0).add(&Multivector::generator(dim, 2));
    println!("\nl(s) (e0 + e2) = {}", action_l(&s, &a));

    // a general element from unit-vector pairs stays on the group
    let u = Multivector::vector_f64(dim, &[0.6, 0.8, 0.0]);
    let v = Multivector::vector_f64(dim, &[0.0, 0.6, 0.8]);
    let g = SpinElement::from_unit_vector_pair(&u, &v).unwrap();
    let gs = g.mul(&s);
    println!("\nproduct of group elements, s bar(s) deviation: {:.2e}",
        gs.as_multivector()
            .mul(&gs.as_multivector().bar())
            .sub(&Multivector::one(dim))
            .norm());

    // the Killing form is normalized so that ||e_ij / 2|| = 1
    let half = Scalar::from_ratio(1, 2);
    let x = Bivector::basis(dim, 0, 1).scale(&half);
    let y = Bivector::basis(dim, 0, 2).scale(&half);
    println!("\nB(e01/2, e01/2) = {:.6}", killing_form(&x, &x).unwrap());
    println!("B(e01/2, e02/2) = {:.6}", killing_form(&x, &y).unwrap());

    // one-parameter group property of the exponential
    let t1 = 0.4;
    let t2 = 1.1;
    let lhs = exp_bivector(&Bivector::basis(dim, 1, 2), t1)
        .unwrap()
        .mul(&exp_bivector(&Bivector::basis(dim, 1, 2), t2).unwrap());
    let rhs = exp_bivector(&Bivector::basis(dim, 1, 2), t1 + t2).unwrap();
    println!(
        "\nexp(t X) exp(u X) vs exp((t+u) X): deviation {:.2e}",
        lhs.as_multivector().sub(rhs.as_multivector()).norm()
    );
}
