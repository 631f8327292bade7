//! Exact coordinates of the form `base + eps·ε` for a single shared positive
//! infinitesimal ε.
//!
//! Every perturbed value used by the constructions (side length `1+ε`,
//! interval shifts `+ε`, `+2ε`, ...) is an integer multiple of ε, so an
//! integer pair with lexicographic order is exact and closed under the
//! arithmetic we need. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact coordinate `base + eps·ε`.
///
/// Comparison is lexicographic on `(base, eps)`, which is the correct total
/// order for any sufficiently small positive ε.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Coord {
    pub base: i64,
    pub eps: i64,
}

impl Coord {
    pub const fn new(base: i64, eps: i64) -> Self {
        Coord { base, eps }
    }

    /// A plain grid coordinate with no infinitesimal part.
    pub const fn int(base: i64) -> Self {
        Coord { base, eps: 0 }
    }

    /// The value `1 + ε`, the side length used by Algorithm A.
    pub const ONE_PLUS_EPS: Coord = Coord { base: 1, eps: 1 };

    pub const ZERO: Coord = Coord { base: 0, eps: 0 };
    pub const ONE: Coord = Coord { base: 1, eps: 0 };

    pub fn scale(self, k: i64) -> Self {
        Coord {
            base: self.base * k,
            eps: self.eps * k,
        }
    }

    /// Doubles the coordinate, moving to the lattice on which midpoints of
    /// original lattice points are exactly representable.
    pub fn doubled(self) -> Self {
        self.scale(2)
    }
}

impl Add for Coord {
    type Output = Coord;
    fn add(self, rhs: Coord) -> Coord {
        Coord {
            base: self.base + rhs.base,
            eps: self.eps + rhs.eps,
        }
    }
}

impl Sub for Coord {
    type Output = Coord;
    fn sub(self, rhs: Coord) -> Coord {
        Coord {
            base: self.base - rhs.base,
            eps: self.eps - rhs.eps,
        }
    }
}

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord {
            base: -self.base,
            eps: -self.eps,
        }
    }
}

impl Mul<i64> for Coord {
    type Output = Coord;
    fn mul(self, k: i64) -> Coord {
        self.scale(k)
    }
}

impl From<(i64, i64)> for Coord {
    fn from((base, eps): (i64, i64)) -> Self {
        Coord { base, eps }
    }
}

impl From<Coord> for (i64, i64) {
    fn from(c: Coord) -> Self {
        (c.base, c.eps)
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            0 => write!(f, "{}", self.base),
            1 => write!(f, "{}+ε", self.base),
            -1 => write!(f, "{}-ε", self.base),
            e if e > 0 => write!(f, "{}+{}ε", self.base, e),
            e => write!(f, "{}-{}ε", self.base, -e),
        }
    }
}

/// A closed interval `[lo, hi]` of exact coordinates.
///
/// Closed on both ends: the strong-visibility model treats shapes as closed
/// sets, so touching projections count as overlapping.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Coord,
    pub hi: Coord,
}

impl Interval {
    /// Panics if `lo > hi`; intervals are never empty.
    pub fn new(lo: Coord, hi: Coord) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(c: Coord) -> Self {
        Interval { lo: c, hi: c }
    }

    pub fn contains(&self, c: Coord) -> bool {
        self.lo <= c && c <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Smallest interval covering both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn translate(&self, d: Coord) -> Interval {
        Interval {
            lo: self.lo + d,
            hi: self.hi + d,
        }
    }

    pub fn doubled(&self) -> Interval {
        Interval {
            lo: self.lo.doubled(),
            hi: self.hi.doubled(),
        }
    }

    /// `self` lies entirely at-or-below `other` (≤ in the projection order:
    /// `hi(self) ≤ lo(other)`).
    pub fn leq(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order() {
        assert!(Coord::new(1, 5) < Coord::new(2, -5));
        assert!(Coord::new(3, 0) < Coord::new(3, 1));
        assert!(Coord::new(3, -1) < Coord::new(3, 0));
        assert_eq!(Coord::new(4, 2), Coord::new(4, 2));
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let a = Coord::new(3, 1);
        let b = Coord::new(1, -2);
        assert_eq!(a + b, Coord::new(4, -1));
        assert_eq!(a - b, Coord::new(2, 3));
        assert_eq!(a.scale(3), Coord::new(9, 3));
    }

    #[test]
    fn interval_overlap_is_closed() {
        // Touching at a single point counts.
        let a = Interval::new(Coord::int(0), Coord::int(1));
        let b = Interval::new(Coord::int(1), Coord::int(2));
        assert!(a.overlaps(&b));
        // An ε gap does not.
        let c = Interval::new(Coord::new(1, 1), Coord::int(2));
        assert!(!a.overlaps(&c));
    }

    proptest! {
        #[test]
        fn order_is_total_and_lexicographic(a in -100i64..100, b in -100i64..100,
                                            c in -100i64..100, d in -100i64..100) {
            let x = Coord::new(a, b);
            let y = Coord::new(c, d);
            let expected = a < c || (a == c && b < d);
            prop_assert_eq!(x < y, expected);
            // Totality: exactly one of <, ==, > holds.
            prop_assert_eq!((x < y) as u8 + (x == y) as u8 + (x > y) as u8, 1);
        }

        #[test]
        fn translation_commutes_with_hull(a in -50i64..50, b in 0i64..50, d in -50i64..50) {
            let i = Interval::new(Coord::int(a), Coord::int(a + b));
            let t = Coord::int(d);
            prop_assert_eq!(i.translate(t).hull(&i.translate(t)), i.hull(&i).translate(t));
        }
    }
}
