//! Vertex shapes: rectangles, unit squares, and fixed-orientation L-shapes,
//! together with drawings (one shape per vertex).
//!
//! L-shapes are the ⌞ orientation only: a horizontal bar `[l, l+w] × {b}` and
//! a vertical bar `{l} × [b, b+h]` sharing the bottom-left corner. The bars
//! are 1-dimensional segments (the left and bottom sides of a rectangle).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::{Coord, Interval};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("degenerate rectangle: l={l} r={r} b={b} t={t}")]
    DegenerateRect { l: Coord, r: Coord, b: Coord, t: Coord },
    #[error("unit square sides differ: width {w}, height {h}")]
    NotSquare { w: Coord, h: Coord },
    #[error("L-shape bar lengths must be positive: w={w} h={h}")]
    DegenerateL { w: Coord, h: Coord },
    #[error("missing coordinate field `{0}`")]
    MissingField(&'static str),
    #[error("unknown shape kind `{0}`")]
    UnknownKind(String),
    #[error("vertex {vertex}: shapes of kind {found} not allowed in a {family} drawing")]
    FamilyMismatch {
        vertex: usize,
        found: &'static str,
        family: Family,
    },
    #[error("unit squares in a drawing must share a side length")]
    MixedSides,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    Rect { l: Coord, r: Coord, b: Coord, t: Coord },
    UnitSquare { l: Coord, r: Coord, b: Coord, t: Coord },
    LShape { l: Coord, b: Coord, w: Coord, h: Coord },
}

/// An axis-aligned segment, used for L-shape intersection tests.
#[derive(Clone, Copy, Debug)]
enum Seg {
    H { y: Coord, x: Interval },
    V { x: Coord, y: Interval },
}

impl Seg {
    fn intersects(&self, other: &Seg) -> bool {
        match (self, other) {
            (Seg::H { y: y1, x: x1 }, Seg::H { y: y2, x: x2 }) => y1 == y2 && x1.overlaps(x2),
            (Seg::V { x: x1, y: y1 }, Seg::V { x: x2, y: y2 }) => x1 == x2 && y1.overlaps(y2),
            (Seg::H { y, x }, Seg::V { x: vx, y: vy }) | (Seg::V { x: vx, y: vy }, Seg::H { y, x }) => {
                x.contains(*vx) && vy.contains(*y)
            }
        }
    }

    fn intersects_rect(&self, xr: &Interval, yr: &Interval) -> bool {
        match self {
            Seg::H { y, x } => yr.contains(*y) && x.overlaps(xr),
            Seg::V { x, y } => xr.contains(*x) && y.overlaps(yr),
        }
    }
}

impl Shape {
    pub fn rect(l: i64, r: i64, b: i64, t: i64) -> Shape {
        Shape::Rect {
            l: Coord::int(l),
            r: Coord::int(r),
            b: Coord::int(b),
            t: Coord::int(t),
        }
    }

    /// A square of side `side` with bottom-left corner at `(l, b)`.
    pub fn unit_square(l: Coord, b: Coord, side: Coord) -> Shape {
        Shape::UnitSquare {
            l,
            r: l + side,
            b,
            t: b + side,
        }
    }

    pub fn lshape(l: Coord, b: Coord, w: Coord, h: Coord) -> Shape {
        Shape::LShape { l, b, w, h }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Shape::Rect { .. } => "rect",
            Shape::UnitSquare { .. } => "usq",
            Shape::LShape { .. } => "lshape",
        }
    }

    pub fn validate(&self) -> Result<(), ShapeError> {
        match *self {
            Shape::Rect { l, r, b, t } => {
                if l < r && b < t {
                    Ok(())
                } else {
                    Err(ShapeError::DegenerateRect { l, r, b, t })
                }
            }
            Shape::UnitSquare { l, r, b, t } => {
                if !(l < r && b < t) {
                    return Err(ShapeError::DegenerateRect { l, r, b, t });
                }
                if r - l != t - b {
                    return Err(ShapeError::NotSquare { w: r - l, h: t - b });
                }
                Ok(())
            }
            Shape::LShape { w, h, .. } => {
                if w > Coord::ZERO && h > Coord::ZERO {
                    Ok(())
                } else {
                    Err(ShapeError::DegenerateL { w, h })
                }
            }
        }
    }

    /// Orthogonal projection onto the x-axis.
    pub fn x_projection(&self) -> Interval {
        match *self {
            Shape::Rect { l, r, .. } | Shape::UnitSquare { l, r, .. } => Interval::new(l, r),
            Shape::LShape { l, w, .. } => Interval::new(l, l + w),
        }
    }

    /// Orthogonal projection onto the y-axis.
    pub fn y_projection(&self) -> Interval {
        match *self {
            Shape::Rect { b, t, .. } | Shape::UnitSquare { b, t, .. } => Interval::new(b, t),
            Shape::LShape { b, h, .. } => Interval::new(b, b + h),
        }
    }

    pub fn translate(&self, dx: Coord, dy: Coord) -> Shape {
        match *self {
            Shape::Rect { l, r, b, t } => Shape::Rect {
                l: l + dx,
                r: r + dx,
                b: b + dy,
                t: t + dy,
            },
            Shape::UnitSquare { l, r, b, t } => Shape::UnitSquare {
                l: l + dx,
                r: r + dx,
                b: b + dy,
                t: t + dy,
            },
            Shape::LShape { l, b, w, h } => Shape::LShape {
                l: l + dx,
                b: b + dy,
                w,
                h,
            },
        }
    }

    pub fn scaled(&self, k: i64) -> Shape {
        match *self {
            Shape::Rect { l, r, b, t } => Shape::Rect {
                l: l.scale(k),
                r: r.scale(k),
                b: b.scale(k),
                t: t.scale(k),
            },
            Shape::UnitSquare { l, r, b, t } => Shape::UnitSquare {
                l: l.scale(k),
                r: r.scale(k),
                b: b.scale(k),
                t: t.scale(k),
            },
            Shape::LShape { l, b, w, h } => Shape::LShape {
                l: l.scale(k),
                b: b.scale(k),
                w: w.scale(k),
                h: h.scale(k),
            },
        }
    }

    fn segments(&self) -> Option<[Seg; 2]> {
        match *self {
            Shape::LShape { l, b, w, h } => Some([
                Seg::H {
                    y: b,
                    x: Interval::new(l, l + w),
                },
                Seg::V {
                    x: l,
                    y: Interval::new(b, b + h),
                },
            ]),
            _ => None,
        }
    }

    /// Intersection of the shape with the vertical line at abscissa `x`,
    /// as a y-interval.
    pub fn x_slice(&self, x: Coord) -> Option<Interval> {
        match *self {
            Shape::Rect { l, r, b, t } | Shape::UnitSquare { l, r, b, t } => {
                (l <= x && x <= r).then(|| Interval::new(b, t))
            }
            Shape::LShape { l, b, w, h } => {
                if x == l {
                    Some(Interval::new(b, b + h))
                } else if l <= x && x <= l + w {
                    Some(Interval::point(b))
                } else {
                    None
                }
            }
        }
    }

    /// Intersection with the horizontal line at ordinate `y`, as an x-interval.
    pub fn y_slice(&self, y: Coord) -> Option<Interval> {
        match *self {
            Shape::Rect { l, r, b, t } | Shape::UnitSquare { l, r, b, t } => {
                (b <= y && y <= t).then(|| Interval::new(l, r))
            }
            Shape::LShape { l, b, w, h } => {
                if y == b {
                    Some(Interval::new(l, l + w))
                } else if b <= y && y <= b + h {
                    Some(Interval::point(l))
                } else {
                    None
                }
            }
        }
    }
}

/// True iff the point sets of the two shapes are disjoint. Shapes are closed,
/// so touching shapes are not disjoint.
pub fn shapes_disjoint(a: &Shape, b: &Shape) -> bool {
    match (a.segments(), b.segments()) {
        (None, None) => {
            !(a.x_projection().overlaps(&b.x_projection())
                && a.y_projection().overlaps(&b.y_projection()))
        }
        (Some(segs), None) => {
            let xr = b.x_projection();
            let yr = b.y_projection();
            !segs.iter().any(|s| s.intersects_rect(&xr, &yr))
        }
        (None, Some(segs)) => {
            let xr = a.x_projection();
            let yr = a.y_projection();
            !segs.iter().any(|s| s.intersects_rect(&xr, &yr))
        }
        (Some(sa), Some(sb)) => !sa
            .iter()
            .any(|s| sb.iter().any(|t| s.intersects(t))),
    }
}

/// The shape family of a drawing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "usq")]
    UnitSquare,
    #[serde(rename = "rect")]
    Rect,
    #[serde(rename = "lshape")]
    LShape,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::UnitSquare => "usq",
            Family::Rect => "rect",
            Family::LShape => "lshape",
        })
    }
}

/// A drawing Γ: a total map from vertices `1..=n` to shapes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Drawing {
    pub family: Family,
    /// `shapes[v - 1]` is the shape of vertex `v`.
    pub shapes: Vec<Shape>,
}

impl Drawing {
    pub fn new(family: Family, shapes: Vec<Shape>) -> Self {
        Drawing { family, shapes }
    }

    pub fn n(&self) -> usize {
        self.shapes.len()
    }

    pub fn shape(&self, v: usize) -> &Shape {
        &self.shapes[v - 1]
    }

    /// Checks per-shape invariants plus family consistency. "Unit" squares
    /// must share one side length across the drawing (the reductions use
    /// side 1 while Algorithm A uses 1+ε; translates of any one fixed
    /// square are allowed).
    pub fn validate_shapes(&self) -> Result<(), ShapeError> {
        let mut side: Option<Coord> = None;
        for (i, s) in self.shapes.iter().enumerate() {
            s.validate()?;
            let ok = matches!(
                (self.family, s),
                (Family::Rect, Shape::Rect { .. })
                    | (Family::Rect, Shape::UnitSquare { .. })
                    | (Family::UnitSquare, Shape::UnitSquare { .. })
                    | (Family::LShape, Shape::LShape { .. })
            );
            if !ok {
                return Err(ShapeError::FamilyMismatch {
                    vertex: i + 1,
                    found: s.kind_name(),
                    family: self.family,
                });
            }
            if self.family == Family::UnitSquare {
                if let Shape::UnitSquare { l, r, .. } = s {
                    let this = *r - *l;
                    match side {
                        None => side = Some(this),
                        Some(prev) if prev != this => return Err(ShapeError::MixedSides),
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    pub fn scaled(&self, k: i64) -> Drawing {
        Drawing {
            family: self.family,
            shapes: self.shapes.iter().map(|s| s.scaled(k)).collect(),
        }
    }
}

// --- JSON encoding -------------------------------------------------------
//
// Shapes serialize as {"kind":"rect|usq|lshape","coords":{"l":[base,eps],...}}
// with coordinates always as two-integer arrays.

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    kind: String,
    coords: BTreeMap<String, Coord>,
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut coords = BTreeMap::new();
        match *self {
            Shape::Rect { l, r, b, t } | Shape::UnitSquare { l, r, b, t } => {
                coords.insert("l".to_string(), l);
                coords.insert("r".to_string(), r);
                coords.insert("b".to_string(), b);
                coords.insert("t".to_string(), t);
            }
            Shape::LShape { l, b, w, h } => {
                coords.insert("l".to_string(), l);
                coords.insert("b".to_string(), b);
                coords.insert("w".to_string(), w);
                coords.insert("h".to_string(), h);
            }
        }
        ShapeJson {
            kind: self.kind_name().to_string(),
            coords,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = ShapeJson::deserialize(de)?;
        let get = |f: &'static str| {
            raw.coords
                .get(f)
                .copied()
                .ok_or_else(|| D::Error::custom(ShapeError::MissingField(f)))
        };
        match raw.kind.as_str() {
            "rect" => Ok(Shape::Rect {
                l: get("l")?,
                r: get("r")?,
                b: get("b")?,
                t: get("t")?,
            }),
            "usq" => Ok(Shape::UnitSquare {
                l: get("l")?,
                r: get("r")?,
                b: get("b")?,
                t: get("t")?,
            }),
            "lshape" => Ok(Shape::LShape {
                l: get("l")?,
                b: get("b")?,
                w: get("w")?,
                h: get("h")?,
            }),
            other => Err(D::Error::custom(ShapeError::UnknownKind(other.to_string()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(b: i64, e: i64) -> Coord {
        Coord::new(b, e)
    }

    #[test]
    fn projections() {
        // Rect l=0,r=3,b=1,t=2.
        let r = Shape::rect(0, 3, 1, 2);
        assert_eq!(r.x_projection(), Interval::new(c(0, 0), c(3, 0)));
        assert_eq!(r.y_projection(), Interval::new(c(1, 0), c(2, 0)));

        // Unit square of side 1+ε with corner (3,0): X = [3, 4+ε].
        let u = Shape::unit_square(c(3, 0), c(0, 0), Coord::ONE_PLUS_EPS);
        assert_eq!(u.x_projection(), Interval::new(c(3, 0), c(4, 1)));
        assert_eq!(u.y_projection(), Interval::new(c(0, 0), c(1, 1)));

        // L-shape corner (2,5), w=h=1+ε: X = [2, 3+ε], Y = [5, 6+ε].
        let l = Shape::lshape(c(2, 0), c(5, 0), Coord::ONE_PLUS_EPS, Coord::ONE_PLUS_EPS);
        assert_eq!(l.x_projection(), Interval::new(c(2, 0), c(3, 1)));
        assert_eq!(l.y_projection(), Interval::new(c(5, 0), c(6, 1)));
    }

    #[test]
    fn disjoint_closed_squares_touch() {
        // Corners (0,0) and (1,1), side 1+ε: the closed sets overlap in
        // [1,1+ε]², so they are not disjoint.
        let a = Shape::unit_square(c(0, 0), c(0, 0), Coord::ONE_PLUS_EPS);
        let b = Shape::unit_square(c(1, 0), c(1, 0), Coord::ONE_PLUS_EPS);
        assert!(!shapes_disjoint(&a, &b));
    }

    #[test]
    fn disjoint_staircase_lshapes() {
        // Identity-permutation SW drawing: L-shapes at (i,i) are disjoint.
        for i in 0..4 {
            let a = Shape::lshape(c(i, 0), c(i, 0), Coord::ONE_PLUS_EPS, Coord::ONE_PLUS_EPS);
            let b = Shape::lshape(
                c(i + 1, 0),
                c(i + 1, 0),
                Coord::ONE_PLUS_EPS,
                Coord::ONE_PLUS_EPS,
            );
            assert!(shapes_disjoint(&a, &b));
        }
    }

    #[test]
    fn identical_shapes_not_disjoint() {
        let a = Shape::rect(0, 2, 0, 2);
        assert!(!shapes_disjoint(&a, &a));
        let l = Shape::lshape(c(0, 0), c(0, 0), Coord::ONE, Coord::ONE);
        assert!(!shapes_disjoint(&l, &l));
    }

    #[test]
    fn lshape_crossing_detected() {
        // H-bar of one crossing V-bar of the other.
        let a = Shape::lshape(c(0, 0), c(1, 0), c(3, 0), c(1, 0));
        let b = Shape::lshape(c(1, 0), c(0, 0), c(1, 0), c(3, 0));
        assert!(!shapes_disjoint(&a, &b));
    }

    #[test]
    fn slices() {
        let l = Shape::lshape(c(2, 0), c(5, 0), Coord::ONE_PLUS_EPS, Coord::ONE_PLUS_EPS);
        // At the corner abscissa the whole vertical bar is hit.
        assert_eq!(l.x_slice(c(2, 0)), Some(Interval::new(c(5, 0), c(6, 1))));
        // Inside the horizontal bar only the bar point is hit.
        assert_eq!(l.x_slice(c(3, 0)), Some(Interval::point(c(5, 0))));
        assert_eq!(l.x_slice(c(3, 2)), None);
        assert_eq!(l.y_slice(c(5, 0)), Some(Interval::new(c(2, 0), c(3, 1))));
        assert_eq!(l.y_slice(c(6, 0)), Some(Interval::point(c(2, 0))));
    }

    #[test]
    fn shape_json_schema() {
        let u = Shape::unit_square(c(3, 0), c(0, 0), Coord::ONE_PLUS_EPS);
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"usq","coords":{"b":[0,0],"l":[3,0],"r":[4,1],"t":[1,1]}}"#
        );
        let back: Shape = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
    }

    fn arb_shape() -> impl Strategy<Value = Shape> {
        let coord = (-20i64..20, -2i64..3).prop_map(|(b, e)| Coord::new(b, e));
        let pos = (1i64..5, 0i64..2).prop_map(|(b, e)| Coord::new(b, e));
        prop_oneof![
            (coord.clone(), coord.clone(), pos.clone(), pos.clone()).prop_map(|(l, b, w, h)| {
                Shape::Rect {
                    l,
                    r: l + w,
                    b,
                    t: b + h,
                }
            }),
            (coord.clone(), coord.clone(), pos.clone(), pos).prop_map(|(l, b, w, h)| Shape::LShape {
                l,
                b,
                w,
                h
            }),
        ]
    }

    proptest! {
        #[test]
        fn disjoint_is_symmetric(a in arb_shape(), b in arb_shape()) {
            prop_assert_eq!(shapes_disjoint(&a, &b), shapes_disjoint(&b, &a));
        }

        #[test]
        fn translated_projection(s in arb_shape(), dx in -10i64..10, dy in -10i64..10) {
            let t = s.translate(Coord::int(dx), Coord::int(dy));
            prop_assert_eq!(t.x_projection(), s.x_projection().translate(Coord::int(dx)));
            prop_assert_eq!(t.y_projection(), s.y_projection().translate(Coord::int(dy)));
        }

        #[test]
        fn shape_json_roundtrip(s in arb_shape()) {
            let json = serde_json::to_string(&s).unwrap();
            let back: Shape = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
