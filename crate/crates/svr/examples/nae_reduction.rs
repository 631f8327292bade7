//! Monotone NAE-3SAT → unit-square SVR reduction, both directions.
//!
//! Builds the graph pair for a monotone formula, materializes the drawing
//! encoding an NAE-satisfying assignment, validates it, and decodes the
//! assignment back off the geometry.
//!
//! Run with: cargo run --example nae_reduction

use svr::oracle::brute_force_nae;
use svr::sat::{build_ussvr_drawing, build_ussvr_instance, decode_ussvr_assignment, NaeInstance};
use svr::svg::{render_svg, RenderConfig};
use svr::validate_svr;

fn main() {
    // (v1 v2 v3)(v4 v1 v2)(v3 v4 v3) — each clause needs one or two true
    // literals, not all equal.
    let f = NaeInstance::new(4, vec![[1, 2, 3], [4, 1, 2], [3, 4, 3]]).unwrap();

    let (pair, idx) = build_ussvr_instance(&f);
    println!(
        "instance: {} vertices, |E_v| = {}, |E_H| = {}",
        pair.n,
        pair.ev.len(),
        pair.eh.len()
    );

    let alpha = brute_force_nae(&f).unwrap().expect("formula is NAE-satisfiable");
    println!("NAE-satisfying assignment: {alpha}");

    let d = build_ussvr_drawing(&f, &alpha).unwrap();
    let report = validate_svr(&d, &pair).unwrap();
    println!(
        "drawing validation: {}",
        if report.valid { "passed" } else { "FAILED" }
    );

    let decoded = decode_ussvr_assignment(&d, &idx).unwrap();
    println!("decoded from geometry: {decoded}");
    assert!(f.violated_clause(&decoded).is_none());

    let svg = render_svg(&d, &RenderConfig::default(), true).unwrap();
    std::fs::write("nae-ussvr.svg", svg).unwrap();
    println!("drawing written to nae-ussvr.svg");

    // The unsatisfiable witness: a single clause with one repeated variable
    // has no NAE assignment, hence no drawing of its pair exists.
    let unsat = NaeInstance::new(1, vec![[1, 1, 1]]).unwrap();
    assert!(brute_force_nae(&unsat).unwrap().is_none());
    println!("(v, v, v) is NAE-unsatisfiable, as expected");
}
