//! The two biquadratic polynomials whose extreme roots predict the
//! complement spectra of the B and BB families, checked against the
//! dense eigensolver and against the 4 by 4 quotient matrices.
//!
//! Run with: cargo run --example quartic_closed_forms

use extremal_spectra::constructions::{build_b, build_bb, BParams, BbParams, BbVariant};
use extremal_spectra::quotient::{
    alpha, char_poly_at, f_difference, f_poly, g_poly, quotient_matrix_b, quotient_matrix_bb,
    theta,
};
use extremal_spectra::spectra::graph_spectrum;

fn main() -> extremal_spectra::Result<()> {
    // f predicts the complement spectrum of B(s, t, kappa): its four
    // roots, padded with zeros, are exactly the complement eigenvalues.
    let (s, t, k) = (2, 4, 2);
    let f = f_poly(s, t, k);
    println!("{}: lambda^4 + ({})lambda^2 + ({})", f.label, f.c2, f.c0);
    println!("  roots            {:?}", f.all_roots()?);
    let g = build_b(&BParams::new(s, t, k)?).complement();
    let sp = graph_spectrum(&g, false);
    println!("  measured extreme ({:.9}, {:.9})", sp.lambda_1(), sp.lambda_n());
    let (hi, lo) = f.extreme_roots()?;
    println!("  predicted        ({:.9}, {:.9})", hi, lo);

    // The quotient matrix of the complement's equitable partition has the
    // same characteristic polynomial; spot-check it at integer points.
    let m = quotient_matrix_b(&BParams::new(s, t, k)?);
    println!("  quotient matrix  {:?}", m);
    for x in -3i128..=3 {
        assert_eq!(char_poly_at(&m, x), f.eval_exact(x));
    }
    println!("  char poly agrees with f at x = -3..=3");

    // g plays the same role for the join variant of BB(n1, n2; kappa).
    let (n1, n2, kk) = (4, 3, 2);
    let gq = g_poly(n1, n2, kk);
    println!();
    println!("{}: lambda^4 + ({})lambda^2 + ({})", gq.label, gq.c2, gq.c0);
    let bb = build_bb(&BbParams::new(n1, n2, kk, BbVariant::Join)?).complement();
    let spb = graph_spectrum(&bb, false);
    let (ghi, glo) = gq.extreme_roots()?;
    println!("  measured least   {:.9}", spb.lambda_n());
    println!("  predicted least  {:.9}", glo);
    println!("  measured largest {:.9}", spb.lambda_1());
    println!("  predicted largest {:.9}", ghi);
    let mb = quotient_matrix_bb(&BbParams::new(n1, n2, kk, BbVariant::Join)?);
    for x in -3i128..=3 {
        assert_eq!(char_poly_at(&mb, x), gq.eval_exact(x));
    }
    println!("  char poly agrees with g at x = -3..=3");

    // Thresholds. theta marks where consecutive f quartics cross, so the
    // largest root stays monotone exactly while it clears theta. alpha
    // does the same job for g, and it is always the plain value -kappa.
    let (a2, a0) = f_difference(s, t, k)?;
    let th = theta(s, t, k)?;
    println!();
    println!(
        "f(s,t) - f(s-1,t+1) = ({})lambda^2 + ({}), vanishing at theta = {:.9}",
        a2, a0, th
    );
    println!(
        "largest root {:.9} clears theta: {}",
        hi,
        hi > th
    );
    println!("alpha for g is -kappa = {}", alpha(kk));
    Ok(())
}
