//! Runs the audit suite of side inequalities and prints every finding,
//! including the ones that fail. Two failures are expected and genuine:
//! the transmission lower bound fails on the 3-vertex path, and the
//! largest g root does not clear kappa when the order is at most three
//! times kappa.
//!
//! Run with: cargo run --release --example audit_findings

use extremal_spectra::verifier::audit_suite;

fn main() -> extremal_spectra::Result<()> {
    let records = audit_suite(12)?;
    let mut failing = Vec::new();

    println!("{:<70} {:>14} {:>14} {:>6}", "claim", "lhs", "rhs", "holds");
    for r in &records {
        println!(
            "{:<70} {:>14.6} {:>14.6} {:>6}",
            r.claim, r.lhs, r.rhs, r.holds
        );
        if !r.holds {
            failing.push(r);
        }
    }

    println!();
    println!(
        "{} records, {} failures:",
        records.len(),
        failing.len()
    );
    for r in &failing {
        println!("  {} at {} (gap {:.6})", r.claim, r.instance, r.gap);
    }
    Ok(())
}
