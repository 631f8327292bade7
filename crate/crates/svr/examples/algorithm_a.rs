//! Algorithm A: unit-square and rectangle SVRs of a pair of paths.
//!
//! A pair of spanning paths has a unit-square (equivalently rectangle) SVR
//! if and only if the paths share no edge; Algorithm A then produces one
//! directly from the permutation.
//!
//! Run with: cargo run --example algorithm_a

use svr::paths::decide_square_rect_svr;
use svr::svg::{render_svg, RenderConfig};
use svr::{validate_svr, Family, PathPair};

fn main() {
    // Edge-disjoint pair: accepted.
    let p = PathPair::from_permutation(vec![2, 4, 1, 5, 3]);
    for family in [Family::UnitSquare, Family::Rect] {
        let d = decide_square_rect_svr(&p, family).expect("paths are edge-disjoint");
        let report = validate_svr(&d, &p.to_graph_pair()).unwrap();
        println!(
            "{family}: drawing with {} shapes, validation {}",
            d.n(),
            if report.valid { "passed" } else { "FAILED" }
        );
        let svg = render_svg(&d, &RenderConfig::default(), true).unwrap();
        let file = format!("algorithm-a-{family}.svg");
        std::fs::write(&file, svg).unwrap();
        println!("  written to {file}");
    }

    // Pair sharing an edge: rejected, with the witness edge.
    let q = PathPair::from_permutation(vec![1, 2, 4, 3]);
    assert!(decide_square_rect_svr(&q, Family::UnitSquare).is_none());
    println!(
        "pi = {:?} rejected; shared edges: {:?}",
        q.pi,
        q.shared_edges()
    );
}
