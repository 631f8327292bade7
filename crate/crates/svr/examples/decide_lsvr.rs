//! Decide whether path pairs admit an L-shape SVR.
//!
//! Tries the stretchability condition on all four drawing orientations and,
//! on acceptance, builds the drawing and renders it to SVG.
//!
//! Run with: cargo run --example decide_lsvr

use svr::paths::decide_lsvr;
use svr::svg::{render_svg, RenderConfig};
use svr::{validate_svr, PathPair};

fn main() {
    let instances: Vec<Vec<usize>> = vec![
        vec![1, 3, 2, 7, 5, 6, 4], // rejected: every orientation violates the condition
        vec![2, 1, 6, 4, 5, 3],    // accepted without stretching
        vec![4, 3, 5, 2, 1],       // accepted after stretching in Steps 2 and 3
    ];

    for pi in instances {
        let p = PathPair::from_permutation(pi.clone());
        let out = decide_lsvr(&p);
        println!("pi = {pi:?}");
        if out.exists {
            let d = out.drawing.as_ref().unwrap();
            let report = validate_svr(d, &p.to_graph_pair()).unwrap();
            println!(
                "  LSVR exists ({} drawing), validation: {}",
                out.orientation,
                if report.valid { "passed" } else { "FAILED" }
            );
            if !out.stretched_left.is_empty() || !out.stretched_down.is_empty() {
                println!(
                    "  stretched west: {:?}, stretched south: {:?}",
                    out.stretched_left, out.stretched_down
                );
            }
            let svg = render_svg(d, &RenderConfig::default(), true).unwrap();
            let file = format!("lsvr-{}.svg", pi.iter().map(usize::to_string).collect::<String>());
            std::fs::write(&file, svg).unwrap();
            println!("  drawing written to {file}");
        } else {
            println!("  no LSVR; condition violations per orientation:");
            for (tag, viol) in &out.violations {
                println!("    {tag}: {viol:?}");
            }
        }
    }
}
