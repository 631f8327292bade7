//! Brute-force ground truth: exhaustive search on the canonical lattice.
//!
//! Cross-checks the L-shape decision procedure against exhaustive search for
//! every permutation up to n = 3, then exhausts the unit-square search on a
//! pair with no drawing.
//!
//! Run with: cargo run --example oracle_search
//! (expect roughly a minute for the final exhaustive run)

use svr::oracle::{brute_force_svr, exhaustive_lsvr_check, SearchBudget, SearchOutcome};
use svr::sat::{build_ussvr_instance, NaeInstance};
use svr::Family;

fn main() {
    let report = exhaustive_lsvr_check(3, SearchBudget::default());
    println!(
        "L-shape cross-check up to n = {}: {} instances, {} accepted, agreement: {}",
        report.n_max,
        report.total,
        report.accepted,
        report.agreed()
    );
    for cell in &report.cells {
        println!(
            "  pi = {:?}: decision = {}, oracle = {} ({} nodes), {}",
            cell.pi, cell.decision, cell.oracle, cell.nodes, cell.status
        );
    }

    // The pair of the single NAE clause (v, v, v): no unit-square drawing
    // exists, and the search proves it by exhausting the lattice.
    let f = NaeInstance::new(1, vec![[1, 1, 1]]).unwrap();
    let (pair, _) = build_ussvr_instance(&f);
    let res = brute_force_svr(&pair, Family::UnitSquare, SearchBudget::default()).unwrap();
    match res.outcome {
        SearchOutcome::Exhausted => println!(
            "clause (v, v, v): no unit-square drawing; lattice exhausted after {} nodes in {:.1}s",
            res.nodes, res.seconds
        ),
        other => println!("unexpected outcome: {}", other.label()),
    }
}
