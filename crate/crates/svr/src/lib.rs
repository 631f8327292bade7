//! Simultaneous visibility representations (SVRs) of graph pairs.
//!
//! A pair of graphs `⟨G_v, G_H⟩` on a shared vertex set is drawn by one
//! shape per vertex so that vertical lines-of-sight realize exactly the
//! edges of `G_v` and horizontal lines-of-sight exactly those of `G_H`.
//! Shapes are closed, pairwise disjoint, and lines-of-sight have zero width.
//!
//! The crate provides
//! - exact coordinate geometry over `base + eps·ε` pairs ([`coord`], [`shape`]),
//! - an exact visibility engine and structural diagnostics ([`visibility`]),
//! - decision procedures and constructions for pairs of paths with unit
//!   squares, rectangles, and ⌞-oriented L-shapes ([`paths`]),
//! - executable NP-hardness reductions from NAE-3SAT and 3SAT ([`sat`]),
//! - brute-force satisfiability and geometric-search oracles ([`oracle`]),
//! - SVG rendering ([`svg`]) and the command-line front end ([`cli`]).

pub mod cli;
pub mod coord;
pub mod graph;
pub mod oracle;
pub mod paths;
pub mod sat;
pub mod shape;
pub mod svg;
pub mod visibility;

pub use coord::{Coord, Interval};
pub use graph::{Graph, GraphPair, PathPair};
pub use shape::{Drawing, Family, Shape};
pub use visibility::{validate_svr, VisibilityReport};
