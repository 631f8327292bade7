//! Exact visibility engine under the strong-visibility model.
//!
//! An edge `{u, v}` is realized vertically iff some vertical closed segment
//! joins Γ(u) and Γ(v) without meeting a third shape. Because the stab
//! structure of a drawing is piecewise constant between the endpoint
//! coordinates of the shapes' projections, it suffices to sample every
//! distinct endpoint coordinate plus one midpoint between each consecutive
//! pair. Midpoints are realized exactly by doubling the coordinate lattice.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::{Coord, Interval};
use crate::graph::{edge, Edge, Graph, GraphPair};
use crate::shape::{shapes_disjoint, Drawing, Shape};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    /// Vertical lines-of-sight (the `G_v` side); samples abscissae.
    Vertical,
    /// Horizontal lines-of-sight (the `G_H` side); samples ordinates.
    Horizontal,
}

impl Axis {
    fn projection(self, s: &Shape) -> Interval {
        match self {
            Axis::Vertical => s.x_projection(),
            Axis::Horizontal => s.y_projection(),
        }
    }

    fn slice(self, s: &Shape, at: Coord) -> Option<Interval> {
        match self {
            Axis::Vertical => s.x_slice(at),
            Axis::Horizontal => s.y_slice(at),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VisibilityError {
    #[error("drawing contains overlapping shapes: {0:?}")]
    Overlaps(Vec<Edge>),
    #[error("drawing has {drawing} shapes but graph pair has {graph} vertices")]
    SizeMismatch { drawing: usize, graph: usize },
    #[error("abscissa {0} is outside the projection of one of the vertex sets")]
    OutsideProjection(Coord),
    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),
}

/// All pairs of non-disjoint shapes.
pub fn overlapping_pairs(d: &Drawing) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 1..=d.n() {
        for v in (u + 1)..=d.n() {
            if !shapes_disjoint(d.shape(u), d.shape(v)) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Sample coordinates on the doubled lattice: every distinct endpoint
/// (doubled) plus the exact midpoint of each consecutive pair.
fn sample_coords(d: &Drawing, axis: Axis) -> Vec<Coord> {
    let mut ends: Vec<Coord> = Vec::with_capacity(2 * d.n());
    for s in &d.shapes {
        let p = axis.projection(s);
        ends.push(p.lo);
        ends.push(p.hi);
    }
    ends.sort_unstable();
    ends.dedup();
    let mut samples = Vec::with_capacity(2 * ends.len());
    for (i, &e) in ends.iter().enumerate() {
        samples.push(e.doubled());
        if i + 1 < ends.len() {
            samples.push(e + ends[i + 1]); // midpoint on the doubled lattice
        }
    }
    samples
}

/// Stabs of the line at `at` (doubled lattice), sorted along the line.
fn stabs(doubled: &[Shape], axis: Axis, at: Coord) -> Vec<(usize, Interval)> {
    let mut hits: Vec<(usize, Interval)> = doubled
        .iter()
        .enumerate()
        .filter_map(|(i, s)| axis.slice(s, at).map(|iv| (i + 1, iv)))
        .collect();
    hits.sort_by_key(|&(_, iv)| iv.lo);
    hits
}

/// A realized line-of-sight: the sample coordinate and the gap it crosses,
/// all on the doubled lattice.
#[derive(Clone, Copy, Debug)]
pub struct Witness {
    pub at: Coord,
    pub from: Coord,
    pub to: Coord,
}

pub fn visibility_edges_with_witness(
    d: &Drawing,
    axis: Axis,
) -> Result<BTreeMap<Edge, Witness>, VisibilityError> {
    let overlaps = overlapping_pairs(d);
    if !overlaps.is_empty() {
        return Err(VisibilityError::Overlaps(overlaps));
    }
    let doubled: Vec<Shape> = d.shapes.iter().map(|s| s.scaled(2)).collect();
    let mut edges = BTreeMap::new();
    for at in sample_coords(d, axis) {
        let hits = stabs(&doubled, axis, at);
        for pair in hits.windows(2) {
            let (u, iu) = pair[0];
            let (v, iv) = pair[1];
            edges.entry(edge(u, v)).or_insert(Witness {
                at,
                from: iu.hi,
                to: iv.lo,
            });
        }
    }
    Ok(edges)
}

/// The vertical visibility graph of a drawing with pairwise disjoint shapes.
pub fn vertical_visibility_graph(d: &Drawing) -> Result<BTreeSet<Edge>, VisibilityError> {
    Ok(visibility_edges_with_witness(d, Axis::Vertical)?
        .into_keys()
        .collect())
}

pub fn horizontal_visibility_graph(d: &Drawing) -> Result<BTreeSet<Edge>, VisibilityError> {
    Ok(visibility_edges_with_witness(d, Axis::Horizontal)?
        .into_keys()
        .collect())
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct AxisDiff {
    pub missing: Vec<Edge>,
    pub extra: Vec<Edge>,
}

impl AxisDiff {
    fn between(computed: &BTreeSet<Edge>, target: &BTreeSet<Edge>) -> Self {
        AxisDiff {
            missing: target.difference(computed).copied().collect(),
            extra: computed.difference(target).copied().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Validation outcome of a drawing against a target graph pair. The drawing
/// is a valid SVR iff `overlaps`, and both axis diffs, are all empty.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VisibilityReport {
    pub valid: bool,
    pub overlaps: Vec<Edge>,
    pub vertical: AxisDiff,
    pub horizontal: AxisDiff,
}

pub fn validate_svr(d: &Drawing, g: &GraphPair) -> Result<VisibilityReport, VisibilityError> {
    if d.n() != g.n {
        return Err(VisibilityError::SizeMismatch {
            drawing: d.n(),
            graph: g.n,
        });
    }
    let overlaps = overlapping_pairs(d);
    if !overlaps.is_empty() {
        return Ok(VisibilityReport {
            valid: false,
            overlaps,
            vertical: AxisDiff::default(),
            horizontal: AxisDiff::default(),
        });
    }
    let vert = vertical_visibility_graph(d)?;
    let horiz = horizontal_visibility_graph(d)?;
    let vertical = AxisDiff::between(&vert, &g.ev);
    let horizontal = AxisDiff::between(&horiz, &g.eh);
    Ok(VisibilityReport {
        valid: vertical.is_empty() && horizontal.is_empty(),
        overlaps,
        vertical,
        horizontal,
    })
}

/// Witness for the thin-overlap property: the sequence of vertices stabbed by
/// the line at `x` from a member of `s1` to a member of `s2`, in stab order.
/// Consecutive members are vertically visible pairs.
pub fn check_thin_overlap(
    d: &Drawing,
    s1: &BTreeSet<usize>,
    s2: &BTreeSet<usize>,
    x: Coord,
) -> Result<Vec<usize>, VisibilityError> {
    let doubled: Vec<Shape> = d.shapes.iter().map(|s| s.scaled(2)).collect();
    let hits = stabs(&doubled, Axis::Vertical, x.doubled());
    let order: Vec<usize> = hits.iter().map(|&(v, _)| v).collect();
    let mut best: Option<(usize, usize)> = None;
    for (i, u) in order.iter().enumerate() {
        if !s1.contains(u) {
            continue;
        }
        for (j, v) in order.iter().enumerate() {
            if !s2.contains(v) {
                continue;
            }
            let span = i.abs_diff(j);
            if best.map_or(true, |(bi, bj)| span < bi.abs_diff(bj)) {
                best = Some((i, j));
            }
        }
    }
    match best {
        Some((i, j)) => {
            let (lo, hi) = (i.min(j), i.max(j));
            let mut path = order[lo..=hi].to_vec();
            if i > j {
                path.reverse();
            }
            Ok(path)
        }
        None => Err(VisibilityError::OutsideProjection(x)),
    }
}

/// Number of components of `g − u` whose projection hull is not contained in
/// the projection of `u`. For a valid representation this is at most 2.
pub fn check_nestedness(
    d: &Drawing,
    g: &Graph,
    u: usize,
    axis: Axis,
) -> Result<usize, VisibilityError> {
    if !g.is_cut_vertex(u) {
        return Err(VisibilityError::NotCutVertex(u));
    }
    let proj_u = axis.projection(d.shape(u));
    let before = g.components();
    let count = g
        .components_without(Some(u))
        .into_iter()
        // Only components split off the component containing u matter.
        .filter(|c| {
            let comp_of_u = before.iter().find(|comp| comp.contains(&u)).unwrap();
            c.iter().all(|v| comp_of_u.contains(v))
        })
        .filter(|c| {
            let hull = component_hull(d, c, axis);
            !proj_u.contains_interval(&hull)
        })
        .count();
    Ok(count)
}

fn component_hull(d: &Drawing, comp: &[usize], axis: Axis) -> Interval {
    let mut it = comp.iter();
    let first = axis.projection(d.shape(*it.next().expect("empty component")));
    it.fold(first, |acc, &v| acc.hull(&axis.projection(d.shape(v))))
}

/// True iff the projection hulls of the components of `g` are pairwise
/// disjoint (and therefore totally ordered).
pub fn check_no_twist(d: &Drawing, g: &Graph, axis: Axis) -> bool {
    let hulls: Vec<Interval> = g
        .components()
        .iter()
        .map(|c| component_hull(d, c, axis))
        .collect();
    for i in 0..hulls.len() {
        for j in (i + 1)..hulls.len() {
            if hulls[i].overlaps(&hulls[j]) {
                return false;
            }
        }
    }
    true
}

/// Scans for the premise of the cycle property on the full-shape projections:
/// a triple `(u, v, w)` with an endpoint of `X(w)` strictly inside
/// `X(u) ∩ X(v)` and `b(u) < b(w) < b(v)`. In a drawing of an acyclic graph
/// no such triple may exist.
pub fn cycle_premise_witness(d: &Drawing) -> Option<(usize, usize, usize)> {
    let n = d.n();
    let xs: Vec<Interval> = d.shapes.iter().map(|s| s.x_projection()).collect();
    let bs: Vec<Coord> = d.shapes.iter().map(|s| s.y_projection().lo).collect();
    for w in 1..=n {
        for u in 1..=n {
            for v in 1..=n {
                if u == v || u == w || v == w {
                    continue;
                }
                if !(bs[u - 1] < bs[w - 1] && bs[w - 1] < bs[v - 1]) {
                    continue;
                }
                let lo = xs[u - 1].lo.max(xs[v - 1].lo);
                let hi = xs[u - 1].hi.min(xs[v - 1].hi);
                let strictly_inside = |c: Coord| lo < c && c < hi;
                if strictly_inside(xs[w - 1].lo) || strictly_inside(xs[w - 1].hi) {
                    return Some((u, v, w));
                }
            }
        }
    }
    None
}
