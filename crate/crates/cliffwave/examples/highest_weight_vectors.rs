//! Simplicial systems and highest-weight vectors: the generators of the
//! irreducible pieces, their Casimir eigenvalues, and the idempotents that
//! shift integer weights by one half.
//!
//! Run with `cargo run --example highest_weight_vectors`.

use cliffwave::poly::diffops::{casimir_h, casimir_l};
use cliffwave::poly::systems::{
    harmonic_casimir_eigenvalue, highest_weight_vector, idempotent_paired, idempotent_split,
    is_harmonic, is_monogenic, is_simplicial, monogenic_casimir_eigenvalue, witt_vector, HwvKind,
    Weight,
};
use cliffwave::poly::VarSystem;
use cliffwave::scalar::Scalar;

fn main() {
    // the Witt vector and the paired idempotent
    let t1 = witt_vector(4, 0);
    let i1 = idempotent_paired(4, 0);
    println!("T_1 = {t1}");
    println!("I_1 = T_1 bar(T_1) = {i1}");
    println!("I_1^2 == I_1: {}", i1.mul(&i1) == i1);
    println!("T_1 I_1 == 0: {}", t1.mul(&i1).is_zero());
    let is1 = idempotent_split(2, 0);
    println!("split idempotent in Cl_4: {is1}");

    // weight (2) on S^2-ambient: <x T_1>^2, eigenvalue -6
    let sys = VarSystem::new(1, 3);
    let w2 = Weight::new(vec![2]);
    let p = highest_weight_vector(sys, &w2, HwvKind::Harmonic).unwrap();
    println!("\nweight (2), n=3 harmonic HWV: {p}");
    println!(
        "  eigenvalue {} (closed form {})",
        if casimir_h(&p) == p.scale_int(-6) { "-6" } else { "?" },
        harmonic_casimir_eigenvalue(&w2, 3)
    );

    // a table over admissible weights in n = 4
    println!("\nCasimir eigenvalue table, n = 4:");
    println!("  weight      harmonic    monogenic (L-Casimir)");
    for entries in [vec![2i64], vec![4], vec![1], vec![3], vec![2, 2], vec![1, 1], vec![3, 1]] {
        let k = entries.len();
        let sysk = VarSystem::new(k, 4);
        let w = Weight::new(entries.clone());
        let hev = harmonic_casimir_eigenvalue(&w, 4);
        let mev = monogenic_casimir_eigenvalue(&w, 4);
        let p = highest_weight_vector(sysk, &w, HwvKind::Harmonic).unwrap();
        let q = highest_weight_vector(sysk, &w, HwvKind::Monogenic).unwrap();
        let hok = casimir_h(&p) == p.scale_int(hev);
        let mok = casimir_l(&q, None)
            == q.scale(&Scalar::from_rational(
                mev.clone(),
                num_rational::BigRational::from_integer(0.into()),
            ));
        println!(
            "  {:10} {:>6} {}   {:>8} {}",
            format!("{entries:?}"),
            hev,
            if hok { "ok" } else { "MISMATCH" },
            mev.to_string(),
            if mok { "ok" } else { "MISMATCH" }
        );
        assert!(is_simplicial(&p) && is_harmonic(&p));
        assert!(is_simplicial(&q) && is_monogenic(&q));
    }

    // weights must be dominant and of one parity
    let sys2 = VarSystem::new(2, 4);
    for bad in [vec![1i64, 2], vec![2, 1]] {
        let err = highest_weight_vector(sys2, &Weight::new(bad.clone()), HwvKind::Harmonic)
            .err()
            .unwrap();
        println!("\nweight {bad:?} rejected: {err}");
    }
}
