//! Structural diagnostics on a validated drawing.
//!
//! Checks the necessary conditions every simultaneous visibility
//! representation must satisfy: at most two components escape a cut vertex's
//! projection (nestedness), component projection hulls never interleave
//! (no twist), and the cycle-premise scan finds no witness on drawings of
//! acyclic graphs.
//!
//! Run with: cargo run --example diagnostics

use svr::paths::decide_lsvr;
use svr::visibility::{check_nestedness, check_no_twist, cycle_premise_witness, Axis};
use svr::{validate_svr, PathPair};

fn main() {
    let p = PathPair::from_permutation(vec![4, 3, 5, 2, 1]);
    let out = decide_lsvr(&p);
    let d = out.drawing.as_ref().expect("this pair admits an LSVR");
    let g = p.to_graph_pair();
    assert!(validate_svr(d, &g).unwrap().valid);

    for (graph, axis) in [
        (g.vertical_graph(), Axis::Vertical),
        (g.horizontal_graph(), Axis::Horizontal),
    ] {
        for u in 1..=g.n {
            if !graph.is_cut_vertex(u) {
                continue;
            }
            let count = check_nestedness(d, &graph, u, axis).unwrap();
            println!("{axis:?}: {count} component(s) escape the projection of cut vertex {u}");
            assert!(count <= 2);
        }
        println!(
            "{axis:?}: component hulls untwisted: {}",
            check_no_twist(d, &graph, axis)
        );
    }

    match cycle_premise_witness(d) {
        None => println!("cycle-premise scan: no witness (consistent with acyclic G_v)"),
        Some(w) => println!("cycle-premise witness found: {w:?}"),
    }
}
