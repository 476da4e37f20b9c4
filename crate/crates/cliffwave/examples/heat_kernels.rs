//! Heat kernels of the three diffusive generators: spectral decay factors,
//! the semigroup property, truncation bounds, and heat evolution of a
//! signal.
//!
//! Run with `cargo run --release --example heat_kernels`.

use cliffwave::cli::random_signal;
use cliffwave::sphere::{Part, SphereContext};
use cliffwave::wavelet::{heat_kernel, semigroup_check, ProfileKind, SpectralProfile};

fn main() {
    let m = 2;
    let max_degree = 6;

    println!("decay rates lambda(part, k) on S^{m}:");
    println!("  k   heat-h V   heat-h W   heat-l     modified");
    for k in 0..=max_degree {
        let ph = SpectralProfile::new(ProfileKind::HeatH, m);
        let pl = SpectralProfile::new(ProfileKind::HeatL, m);
        let pm = SpectralProfile::new(ProfileKind::Modified, m);
        println!(
            "  {k}   {:8.2}   {:8.2}   {:8.2}   {:8.2}",
            ph.lambda(Part::Inner, k),
            ph.lambda(Part::Outer, k),
            pl.lambda(Part::Inner, k),
            pm.lambda(Part::Inner, k),
        );
    }

    // the k = 2 heat-h factor at t = 1 is exp(-6)
    let profile = SpectralProfile::new(ProfileKind::HeatH, m);
    let hk = heat_kernel(&profile, 1.0, max_degree).unwrap();
    println!(
        "\nheat-h factor at (V, k=2), t=1: {:.6e} (exp(-6) = {:.6e})",
        hk.diagonal.factor(Part::Inner, 2),
        (-6.0f64).exp()
    );
    println!("reported truncation bound: {:.3e}", hk.truncation_bound);

    // semigroup property for all three profiles
    println!("\nsemigroup p_t * p_s == p_(t+s):");
    for kind in [ProfileKind::HeatH, ProfileKind::HeatL, ProfileKind::Modified] {
        let p = SpectralProfile::new(kind, m);
        let rep = semigroup_check(&p, 0.4, 0.8, max_degree).unwrap();
        println!("  {:9} max deviation {:.2e}", kind.tag(), rep.max_deviation);
    }

    // heat evolution contracts everything but the invariant modes
    let ctx = SphereContext::new(m, max_degree).unwrap();
    let f = random_signal(&ctx, 9);
    let coeffs = ctx.analyze(&f).unwrap();
    println!("\nheat evolution of a random band-limited signal (modified profile):");
    let pm = SpectralProfile::new(ProfileKind::Modified, m);
    for t in [0.01, 0.1, 1.0] {
        let hk = heat_kernel(&pm, t, max_degree).unwrap();
        let evolved = ctx.synthesize(&hk.diagonal.apply(&coeffs)).unwrap();
        println!("  t = {t:5}: L2 norm {:.6}", ctx.l2_norm(&evolved));
    }
    println!("  (the constant mode survives: lambda_0 = 0)");
}
