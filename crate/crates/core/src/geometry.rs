//! Exact integer planar primitives.
//!
//! Coordinates are `i64` but restricted to `|c| <= 2^20` so that areas, and
//! the doubled coordinates used for splitter lines, never overflow.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted coordinate magnitude.
pub const MAX_COORD: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
    pub id: usize,
}

/// A closed axis-parallel rectangle with positive area.
///
/// Rectangles are totally ordered by `(area, x_lo, y_lo, x_hi, y_hi)`, which
/// is the comparator used for every "largest" decision in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x_lo: i64,
    pub y_lo: i64,
    pub x_hi: i64,
    pub y_hi: i64,
}

impl Rect {
    pub fn new(x_lo: i64, y_lo: i64, x_hi: i64, y_hi: i64) -> Result<Self> {
        if x_lo >= x_hi || y_lo >= y_hi {
            return Err(Error::DegenerateRect {
                x_lo,
                y_lo,
                x_hi,
                y_hi,
            });
        }
        Ok(Rect {
            x_lo,
            y_lo,
            x_hi,
            y_hi,
        })
    }

    /// Bounding box of a set of points. The caller guarantees it is not
    /// degenerate.
    pub(crate) fn bbox<'a>(points: impl IntoIterator<Item = &'a Point>) -> Self {
        let mut r = Rect {
            x_lo: i64::MAX,
            y_lo: i64::MAX,
            x_hi: i64::MIN,
            y_hi: i64::MIN,
        };
        for p in points {
            r.x_lo = r.x_lo.min(p.x);
            r.x_hi = r.x_hi.max(p.x);
            r.y_lo = r.y_lo.min(p.y);
            r.y_hi = r.y_hi.max(p.y);
        }
        debug_assert!(r.x_lo < r.x_hi && r.y_lo < r.y_hi);
        r
    }

    pub fn area(&self) -> i64 {
        (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)
    }

    /// Closed containment.
    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.x_lo <= x && x <= self.x_hi && self.y_lo <= y && y <= self.y_hi
    }

    /// Strict (open interior) containment.
    pub fn contains_strictly(&self, x: i64, y: i64) -> bool {
        self.x_lo < x && x < self.x_hi && self.y_lo < y && y < self.y_hi
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.x_lo <= other.x_lo
            && other.x_hi <= self.x_hi
            && self.y_lo <= other.y_lo
            && other.y_hi <= self.y_hi
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Rect {
        Rect {
            x_lo: self.x_lo + dx,
            y_lo: self.y_lo + dy,
            x_hi: self.x_hi + dx,
            y_hi: self.y_hi + dy,
        }
    }

    /// Number of sides lying on the corresponding side of `bounds`.
    pub fn sides_on(&self, bounds: &Rect) -> usize {
        [
            self.x_lo == bounds.x_lo,
            self.x_hi == bounds.x_hi,
            self.y_lo == bounds.y_lo,
            self.y_hi == bounds.y_hi,
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }

    fn key(&self) -> (i64, i64, i64, i64, i64) {
        (self.area(), self.x_lo, self.y_lo, self.x_hi, self.y_hi)
    }
}

impl Ord for Rect {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Rect {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            self.x_lo, self.x_hi, self.y_lo, self.y_hi
        )
    }
}

/// Which construction produced a rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Three sides on the bounding box.
    AnchoredThree,
    /// Two adjacent sides on the bounding box.
    AnchoredCorner,
    /// Two opposite sides on the bounding box.
    AnchoredOpposite,
    /// Exactly one side on the bounding box.
    AnchoredOne,
    /// Bounded rectangle with three defining points in one halfplane of a
    /// range-tree cell.
    HalfPlane,
    /// Bounded rectangle with one defining point per quadrant of a cell.
    OnePerQuadrant,
    /// Bounded rectangle with two defining points in each of two opposite
    /// quadrants, answered through the Monge structures.
    Diagonal,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::AnchoredThree => "anchored-i",
            Provenance::AnchoredCorner => "anchored-ii",
            Provenance::AnchoredOpposite => "anchored-iii",
            Provenance::AnchoredOne => "anchored-iv",
            Provenance::HalfPlane => "halfplane",
            Provenance::OnePerQuadrant => "one-per-quadrant",
            Provenance::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TaggedRect {
    pub rect: Rect,
    pub provenance: Provenance,
}

/// A validated point set in general position, strictly inside `bounds`.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    by_x: Vec<usize>,
    by_y: Vec<usize>,
    bounds: Rect,
}

impl PointSet {
    /// Validates raw coordinates. Duplicate x or y coordinates are rejected,
    /// never perturbed.
    pub fn new(raw: &[(i64, i64)], bounds: Rect) -> Result<Self> {
        for c in [bounds.x_lo, bounds.y_lo, bounds.x_hi, bounds.y_hi] {
            if c.abs() > MAX_COORD {
                return Err(Error::CoordinateRange(c));
            }
        }
        let points: Vec<Point> = raw
            .iter()
            .enumerate()
            .map(|(id, &(x, y))| Point { x, y, id })
            .collect();
        for p in &points {
            if !bounds.contains_strictly(p.x, p.y) {
                return Err(Error::OutsideBounds {
                    id: p.id,
                    x: p.x,
                    y: p.y,
                });
            }
        }
        let mut by_x: Vec<usize> = (0..points.len()).collect();
        by_x.sort_by_key(|&i| (points[i].x, i));
        for w in by_x.windows(2) {
            if points[w[0]].x == points[w[1]].x {
                return Err(Error::DuplicateX {
                    first: w[0],
                    second: w[1],
                    value: points[w[0]].x,
                });
            }
        }
        let mut by_y: Vec<usize> = (0..points.len()).collect();
        by_y.sort_by_key(|&i| (points[i].y, i));
        for w in by_y.windows(2) {
            if points[w[0]].y == points[w[1]].y {
                return Err(Error::DuplicateY {
                    first: w[0],
                    second: w[1],
                    value: points[w[0]].y,
                });
            }
        }
        Ok(PointSet {
            points,
            by_x,
            by_y,
            bounds,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, id: usize) -> &Point {
        &self.points[id]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point ids sorted by increasing x.
    pub fn by_x(&self) -> &[usize] {
        &self.by_x
    }

    /// Point ids sorted by increasing y.
    pub fn by_y(&self) -> &[usize] {
        &self.by_y
    }

    pub fn bounds(&self) -> Rect {
        self.bounds
    }

    pub fn coords(&self) -> Vec<(i64, i64)> {
        self.points.iter().map(|p| (p.x, p.y)).collect()
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Result<Self> {
        let raw: Vec<_> = self.points.iter().map(|p| (p.x + dx, p.y + dy)).collect();
        PointSet::new(&raw, self.bounds.translate(dx, dy))
    }
}

/// True iff no point of `ps` lies strictly inside `r`.
pub fn interior_empty(r: &Rect, ps: &PointSet) -> bool {
    !ps.points().iter().any(|p| r.contains_strictly(p.x, p.y))
}

/// True iff `r` is empty and cannot be grown on any side: every side lies on
/// the bounding box or has a point of `ps` in its relative interior.
pub fn is_maximal_empty(r: &Rect, ps: &PointSet) -> bool {
    let b = ps.bounds();
    if !b.contains_rect(r) || !interior_empty(r, ps) {
        return false;
    }
    let pts = ps.points();
    let left = r.x_lo == b.x_lo
        || pts
            .iter()
            .any(|p| p.x == r.x_lo && r.y_lo < p.y && p.y < r.y_hi);
    let right = r.x_hi == b.x_hi
        || pts
            .iter()
            .any(|p| p.x == r.x_hi && r.y_lo < p.y && p.y < r.y_hi);
    let bottom = r.y_lo == b.y_lo
        || pts
            .iter()
            .any(|p| p.y == r.y_lo && r.x_lo < p.x && p.x < r.x_hi);
    let top = r.y_hi == b.y_hi
        || pts
            .iter()
            .any(|p| p.y == r.y_hi && r.x_lo < p.x && p.x < r.x_hi);
    left && right && bottom && top
}

/// An element of the dihedral group of the square acting on integer
/// coordinates: optional axis swap followed by optional negations.
///
/// Used to reduce symmetric cases (four corners, four halfplanes, two
/// diagonal orientations) to one canonical routine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Flip {
    pub swap: bool,
    pub neg_x: bool,
    pub neg_y: bool,
}

impl Flip {
    pub const IDENTITY: Flip = Flip {
        swap: false,
        neg_x: false,
        neg_y: false,
    };

    pub const fn new(swap: bool, neg_x: bool, neg_y: bool) -> Self {
        Flip { swap, neg_x, neg_y }
    }

    pub fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        let (mut x, mut y) = if self.swap { (y, x) } else { (x, y) };
        if self.neg_x {
            x = -x;
        }
        if self.neg_y {
            y = -y;
        }
        (x, y)
    }

    pub fn invert(&self, x: i64, y: i64) -> (i64, i64) {
        let x = if self.neg_x { -x } else { x };
        let y = if self.neg_y { -y } else { y };
        if self.swap {
            (y, x)
        } else {
            (x, y)
        }
    }

    pub fn apply_rect(&self, r: &Rect) -> Rect {
        let (ax, ay) = self.apply(r.x_lo, r.y_lo);
        let (bx, by) = self.apply(r.x_hi, r.y_hi);
        Rect {
            x_lo: ax.min(bx),
            y_lo: ay.min(by),
            x_hi: ax.max(bx),
            y_hi: ay.max(by),
        }
    }

    pub fn invert_rect(&self, r: &Rect) -> Rect {
        let (ax, ay) = self.invert(r.x_lo, r.y_lo);
        let (bx, by) = self.invert(r.x_hi, r.y_hi);
        Rect {
            x_lo: ax.min(bx),
            y_lo: ay.min(by),
            x_hi: ax.max(bx),
            y_hi: ay.max(by),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Rect {
        Rect::new(x_lo, y_lo, x_hi, y_hi).unwrap()
    }

    fn two_points() -> PointSet {
        PointSet::new(&[(3, 4), (7, 5)], r(0, 12, 0, 10)).unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(r(0, 10, 0, 10).area(), 100);
        assert_eq!(r(3, 12, 0, 5).area(), 45);
        assert_eq!(r(-4, 3, -3, 5).area(), 56);
    }

    #[test]
    fn degenerate_rect_rejected() {
        assert!(Rect::new(1, 0, 1, 5).is_err());
        assert!(Rect::new(0, 3, 4, 3).is_err());
    }

    #[test]
    fn closed_containment() {
        assert!(r(0, 4, 0, 10).contains(4, 5));
        assert!(!r(0, 4, 0, 10).contains(5, 5));
        assert!(r(3, 7, 0, 10).contains(5, 4));
    }

    #[test]
    fn interior_emptiness() {
        let ps = two_points();
        assert!(interior_empty(&r(3, 7, 0, 10), &ps));
        assert!(!interior_empty(&r(0, 7, 0, 7), &ps));
        assert!(interior_empty(&r(0, 12, 4, 5), &ps));
    }

    #[test]
    fn maximality() {
        let ps = two_points();
        assert!(is_maximal_empty(&r(3, 12, 0, 5), &ps));
        assert!(!is_maximal_empty(&r(3, 7, 0, 9), &ps));
        assert!(!is_maximal_empty(&ps.bounds(), &ps));
    }

    #[test]
    fn normalization_errors() {
        let b = r(0, 10, 0, 10);
        assert!(PointSet::new(&[(1, 2), (3, 4)], b).is_ok());
        assert_eq!(
            PointSet::new(&[(1, 2), (1, 4)], b).unwrap_err(),
            Error::DuplicateX {
                first: 0,
                second: 1,
                value: 1
            }
        );
        assert_eq!(
            PointSet::new(&[(1, 2), (3, 2)], b).unwrap_err(),
            Error::DuplicateY {
                first: 0,
                second: 1,
                value: 2
            }
        );
        assert!(matches!(
            PointSet::new(&[(0, 2)], b),
            Err(Error::OutsideBounds { id: 0, .. })
        ));
        assert!(matches!(
            PointSet::new(&[(11, 2)], b),
            Err(Error::OutsideBounds { .. })
        ));
        assert!(matches!(
            PointSet::new(&[], r(0, MAX_COORD + 1, 0, 5)),
            Err(Error::CoordinateRange(_))
        ));
    }

    #[test]
    fn comparator_is_area_first() {
        let big = r(0, 10, 0, 10);
        let small = r(-100, -95, -100, -95);
        assert!(big > small);
        // equal areas fall back to coordinates
        assert!(r(1, 3, 0, 1) > r(0, 2, 0, 1));
    }

    #[test]
    fn flips_round_trip() {
        for bits in 0..8u8 {
            let f = Flip::new(bits & 1 != 0, bits & 2 != 0, bits & 4 != 0);
            let (x, y) = f.apply(3, -7);
            assert_eq!(f.invert(x, y), (3, -7));
            let rect = r(-4, 3, -3, 5);
            assert_eq!(f.invert_rect(&f.apply_rect(&rect)), rect);
            assert_eq!(f.apply_rect(&rect).area(), rect.area());
        }
    }
}
