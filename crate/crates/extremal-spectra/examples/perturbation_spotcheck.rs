//! Random spot checks of the edge-perturbation monotonicity: adding an
//! edge between vertices on the same sign side of the least complement
//! eigenvector never raises the least complement eigenvalue, and
//! deleting a cross-sign edge (keeping the graph connected) never
//! raises it either.
//!
//! Run with: cargo run --example perturbation_spotcheck

use extremal_spectra::graph::Graph;
use extremal_spectra::verifier::{perturbation_check, PerturbationKind};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Random connected graph: sample edges until the result is connected.
fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

fn main() -> extremal_spectra::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(20260816);
    let mut checked = 0;
    let mut cases = 0;
    let mut vacuous = 0;

    for round in 0..60 {
        let n = 6 + round % 3;
        let g = random_connected(n, 0.45, &mut rng);
        for kind in [PerturbationKind::AddWithinSign, PerturbationKind::DeleteCrossSign] {
            let outcome = perturbation_check(&g, kind)?;
            assert!(
                outcome.holds,
                "monotonicity failed on {:?} with {:?}",
                g.edges(),
                kind
            );
            checked += 1;
            cases += outcome.cases.len();
            if outcome.vacuous {
                vacuous += 1;
            }
        }
    }

    println!(
        "{} graph/kind checks, {} individual edge moves, {} vacuous (no admissible move)",
        checked, cases, vacuous
    );

    // One concrete instance, shown in full.
    let g = random_connected(7, 0.4, &mut rng);
    let outcome = perturbation_check(&g, PerturbationKind::AddWithinSign)?;
    println!();
    println!("sample graph edges: {:?}", g.edges());
    println!(
        "least complement eigenvalue {:.9}, sign partition plus = {:#b}, minus = {:#b}",
        outcome.base_value, outcome.partition.plus, outcome.partition.minus
    );
    for case in outcome.cases.iter().take(5) {
        println!(
            "  add ({}, {}): entry product {:+.6}, new value {:.9}, holds {}",
            case.u, case.v, case.product, case.new_value, case.holds
        );
    }
    Ok(())
}
