//! 3SAT → rectangle SVR reduction, starting from DIMACS input.
//!
//! Parses a CNF, builds the spider-gadget graph pair, constructs the
//! rectangle drawing encoding a satisfying assignment, validates it, and
//! decodes the assignment back via the positively-arranged criterion.
//!
//! Run with: cargo run --example rsvr_reduction

use svr::oracle::brute_force_sat;
use svr::sat::{build_rsvr_drawing, build_rsvr_instance, decode_rsvr_assignment, parse_dimacs};
use svr::svg::{render_svg, RenderConfig};
use svr::validate_svr;

fn main() {
    let dimacs = "\
c (v3 | v1 | v2) & (~v1 | ~v2 | v1) & (v2 | v1 | ~v3)
p cnf 3 3
3 1 2 0
-1 -2 1 0
2 1 -3 0
";
    let f = parse_dimacs(dimacs).unwrap();
    let (pair, idx) = build_rsvr_instance(&f);
    println!(
        "instance: {} vertices ({} per clause), |E_v| = {}, |E_H| = {}",
        pair.n,
        7,
        pair.ev.len(),
        pair.eh.len()
    );

    let alpha = brute_force_sat(&f).unwrap().expect("formula is satisfiable");
    println!("satisfying assignment: {alpha}");

    let d = build_rsvr_drawing(&f, &alpha).unwrap();
    let report = validate_svr(&d, &pair).unwrap();
    println!(
        "drawing validation: {}",
        if report.valid { "passed" } else { "FAILED" }
    );

    let decoded = decode_rsvr_assignment(&d, &idx).unwrap();
    println!("decoded from geometry: {decoded}");
    assert!(f.violated_clause(&decoded).is_none());

    let svg = render_svg(&d, &RenderConfig::default(), true).unwrap();
    std::fs::write("3sat-rsvr.svg", svg).unwrap();
    println!("drawing written to 3sat-rsvr.svg");
}
