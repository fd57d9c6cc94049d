//! Computes adjacency spectra of graph complements and checks the basic
//! sanity identities on the way.
//!
//! Run with: cargo run --example complement_spectrum

use extremal_spectra::constructions::{build_b, build_bb, BParams, BbParams, BbVariant};
use extremal_spectra::graph::{complete_bipartite, Graph};
use extremal_spectra::spectra::{assert_spectrum_sane, graph_spectrum};

fn show(label: &str, g: &Graph) -> extremal_spectra::Result<()> {
    let gc = g.complement();
    let sp = graph_spectrum(&gc, false);
    assert_spectrum_sane(&gc, &sp);
    let rounded: Vec<f64> = sp.values.iter().map(|v| (v * 1e6).round() / 1e6).collect();
    println!("{label}");
    println!("  complement spectrum {:?}", rounded);
    println!(
        "  lambda_1 = {:.9}, lambda_n = {:.9}, residual = {:.2e}",
        sp.lambda_1(),
        sp.lambda_n(),
        sp.residual
    );
    Ok(())
}

fn main() -> extremal_spectra::Result<()> {
    // The complement of a complete bipartite graph is a disjoint union of
    // two cliques, so its spectrum is integral.
    show("K_{3,4}", &complete_bipartite(3, 4)?)?;

    // Family members: the complement spectrum is four quartic roots plus
    // a zero of multiplicity n - 4 (see the quartic_closed_forms example
    // for the closed form those roots satisfy).
    show("B(2,3,2)", &build_b(&BParams::new(2, 3, 2)?))?;
    show(
        "BB(4,3;2) join",
        &build_bb(&BbParams::new(4, 3, 2, BbVariant::Join)?),
    )?;
    show(
        "BB(4,3;2) matching",
        &build_bb(&BbParams::new(4, 3, 2, BbVariant::Matching)?),
    )?;

    // Trace identities: eigenvalues of any adjacency matrix sum to zero,
    // and their squares sum to twice the edge count.
    let g = build_bb(&BbParams::new(4, 3, 2, BbVariant::Join)?).complement();
    let sp = graph_spectrum(&g, false);
    let sum: f64 = sp.values.iter().sum();
    let sq: f64 = sp.values.iter().map(|v| v * v).sum();
    println!();
    println!(
        "trace check: sum = {:.2e} (want 0), sum of squares = {:.6} (want {})",
        sum,
        sq,
        2 * g.edge_count()
    );
    Ok(())
}
