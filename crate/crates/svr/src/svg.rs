//! SVG 1.1 rendering of drawings, with optional dashed line-of-sight
//! overlays (red for vertical sight lines, blue for horizontal, matching
//! the usual figure convention).
//!
//! The infinitesimal ε is materialized as a small rational. Any substitute
//! in `(0, 1/(2·(max |eps coefficient| + 1)))` preserves the exact
//! coordinate order, so rendered geometry never contradicts the Coord order.

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::shape::{Drawing, Shape};
use crate::visibility::{visibility_edges_with_witness, Axis, VisibilityError};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RenderConfig {
    /// ε substitute as (numerator, denominator); derived from the drawing
    /// when absent.
    pub eps_substitute: Option<(i64, i64)>,
    /// Pixels per grid unit.
    pub scale: f64,
    /// Stroke for vertical lines-of-sight (the G_v side).
    pub vertical_color: String,
    /// Stroke for horizontal lines-of-sight (the G_H side).
    pub horizontal_color: String,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            eps_substitute: None,
            scale: 48.0,
            vertical_color: "#c62828".to_string(),
            horizontal_color: "#1565c0".to_string(),
        }
    }
}

fn max_eps_magnitude(d: &Drawing) -> i64 {
    d.shapes
        .iter()
        .flat_map(|s| {
            let x = s.x_projection();
            let y = s.y_projection();
            [x.lo, x.hi, y.lo, y.hi]
        })
        .map(|c| c.eps.abs())
        .max()
        .unwrap_or(0)
}

/// The substitute actually used for a drawing, honoring the order-preserving
/// bound `0 < num/den < 1/(2·(max|eps| + 1))`.
pub fn effective_eps_substitute(d: &Drawing, cfg: &RenderConfig) -> (i64, i64) {
    let m = max_eps_magnitude(d);
    let default = (1, 2 * m + 3);
    match cfg.eps_substitute {
        Some((num, den)) if num > 0 && den > 0 && 2 * num * (m + 1) < den => (num, den),
        _ => default,
    }
}

struct Mapper {
    num: f64,
    den: f64,
    scale: f64,
    max_y: f64,
    margin: f64,
}

impl Mapper {
    fn value(&self, c: Coord) -> f64 {
        c.base as f64 + c.eps as f64 * self.num / self.den
    }

    /// Coordinates on the doubled lattice (visibility witnesses) map through
    /// an extra halving.
    fn half_value(&self, c: Coord) -> f64 {
        self.value(c) / 2.0
    }

    fn x(&self, v: f64) -> f64 {
        v * self.scale + self.margin
    }

    fn y(&self, v: f64) -> f64 {
        (self.max_y - v) * self.scale + self.margin
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

/// Renders a drawing, optionally overlaying one witness line-of-sight per
/// realized visibility edge. Overlays require pairwise disjoint shapes.
pub fn render_svg(
    d: &Drawing,
    cfg: &RenderConfig,
    overlays: bool,
) -> Result<String, VisibilityError> {
    let (num, den) = effective_eps_substitute(d, cfg);
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let raw = Mapper {
        num: num as f64,
        den: den as f64,
        scale: cfg.scale,
        max_y: 0.0,
        margin: 0.0,
    };
    for s in &d.shapes {
        let xp = s.x_projection();
        let yp = s.y_projection();
        min_x = min_x.min(raw.value(xp.lo));
        max_x = max_x.max(raw.value(xp.hi));
        min_y = min_y.min(raw.value(yp.lo));
        max_y = max_y.max(raw.value(yp.hi));
    }
    if d.shapes.is_empty() {
        min_x = 0.0;
        max_x = 1.0;
        min_y = 0.0;
        max_y = 1.0;
    }
    let m = Mapper {
        num: num as f64,
        den: den as f64,
        scale: cfg.scale,
        max_y,
        margin: cfg.scale,
    };
    let width = (max_x - min_x) * cfg.scale + 2.0 * cfg.scale - min_x * cfg.scale;
    let height = (max_y - min_y) * cfg.scale + 2.0 * cfg.scale + min_y * cfg.scale;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\">\n",
        fmt(width.max(cfg.scale)),
        fmt(height.max(cfg.scale)),
    ));
    out.push_str("<g stroke-linecap=\"square\">\n");
    for (i, s) in d.shapes.iter().enumerate() {
        let label = i + 1;
        match *s {
            Shape::Rect { l, r, b, t } | Shape::UnitSquare { l, r, b, t } => {
                let x0 = m.x(m.value(l));
                let y0 = m.y(m.value(t));
                let w = (m.value(r) - m.value(l)) * cfg.scale;
                let h = (m.value(t) - m.value(b)) * cfg.scale;
                out.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#e0e0e0\" stroke=\"#424242\" stroke-width=\"1.5\"/>\n",
                    fmt(x0), fmt(y0), fmt(w), fmt(h),
                ));
                out.push_str(&format!(
                    "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\">{}</text>\n",
                    fmt(x0 + w / 2.0),
                    fmt(y0 + h / 2.0 + cfg.scale * 0.12),
                    fmt(cfg.scale * 0.35),
                    label,
                ));
            }
            Shape::LShape { l, b, w, h } => {
                let corner_x = m.x(m.value(l));
                let corner_y = m.y(m.value(b));
                let top_y = m.y(m.value(b + h));
                let right_x = m.x(m.value(l + w));
                out.push_str(&format!(
                    "<path d=\"M {} {} L {} {} L {} {}\" fill=\"none\" stroke=\"#424242\" stroke-width=\"2.5\"/>\n",
                    fmt(corner_x), fmt(top_y), fmt(corner_x), fmt(corner_y), fmt(right_x), fmt(corner_y),
                ));
                out.push_str(&format!(
                    "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\">{}</text>\n",
                    fmt(corner_x + cfg.scale * 0.2),
                    fmt(corner_y - cfg.scale * 0.2),
                    fmt(cfg.scale * 0.35),
                    label,
                ));
            }
        }
    }
    if overlays {
        for (axis, color) in [
            (Axis::Vertical, &cfg.vertical_color),
            (Axis::Horizontal, &cfg.horizontal_color),
        ] {
            let witnesses = visibility_edges_with_witness(d, axis)?;
            for w in witnesses.values() {
                let (x1, y1, x2, y2) = match axis {
                    Axis::Vertical => {
                        let x = m.x(m.half_value(w.at));
                        (x, m.y(m.half_value(w.from)), x, m.y(m.half_value(w.to)))
                    }
                    Axis::Horizontal => {
                        let y = m.y(m.half_value(w.at));
                        (m.x(m.half_value(w.from)), y, m.x(m.half_value(w.to)), y)
                    }
                };
                out.push_str(&format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\"/>\n",
                    fmt(x1), fmt(y1), fmt(x2), fmt(y2), color,
                ));
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PathPair;
    use crate::paths::{algorithm_a, lsvr_paths};
    use crate::shape::Family;

    #[test]
    fn eps_substitute_bound() {
        let p = PathPair::from_permutation(vec![2, 4, 1, 3]);
        let d = algorithm_a(&p, Family::UnitSquare);
        let (num, den) = effective_eps_substitute(&d, &RenderConfig::default());
        assert_eq!((num, den), (1, 5));
        // An out-of-bound request falls back to the derived value.
        let cfg = RenderConfig {
            eps_substitute: Some((1, 2)),
            ..RenderConfig::default()
        };
        assert_eq!(effective_eps_substitute(&d, &cfg), (1, 5));
        let cfg = RenderConfig {
            eps_substitute: Some((1, 100)),
            ..RenderConfig::default()
        };
        assert_eq!(effective_eps_substitute(&d, &cfg), (1, 100));
    }

    #[test]
    fn renders_rects_and_lshapes() {
        let p = PathPair::from_permutation(vec![2, 4, 1, 3]);
        let d = algorithm_a(&p, Family::UnitSquare);
        let svg = render_svg(&d, &RenderConfig::default(), true).unwrap();
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<rect").count(), 4);
        assert!(svg.contains("stroke-dasharray"));

        let out = lsvr_paths(&[4, 3, 5, 2, 1]).unwrap();
        let svg = render_svg(&out.drawing, &RenderConfig::default(), true).unwrap();
        assert_eq!(svg.matches("<path").count(), 5);
    }

    #[test]
    fn deterministic_output() {
        let p = PathPair::from_permutation(vec![3, 1, 4, 2]);
        let d = algorithm_a(&p, Family::Rect);
        let a = render_svg(&d, &RenderConfig::default(), true).unwrap();
        let b = render_svg(&d, &RenderConfig::default(), true).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn empty_drawing_renders() {
        let d = Drawing::new(Family::Rect, Vec::new());
        let svg = render_svg(&d, &RenderConfig::default(), false).unwrap();
        assert!(svg.starts_with("<svg"));
    }
}
