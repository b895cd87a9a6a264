//! Brute-force ground truth: explicit enumeration of every maximal empty
//! rectangle. Polynomial but slow, so inputs are capped.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, Rect};

pub const DEFAULT_ORACLE_CAP: usize = 256;

/// Every maximal empty rectangle of `ps`, sorted by the rectangle
/// comparator. Refuses inputs larger than [`DEFAULT_ORACLE_CAP`].
pub fn enumerate_maximal_empty(ps: &PointSet) -> Result<Vec<Rect>> {
    enumerate_maximal_empty_capped(ps, DEFAULT_ORACLE_CAP)
}

pub fn enumerate_maximal_empty_capped(ps: &PointSet, cap: usize) -> Result<Vec<Rect>> {
    if ps.len() > cap {
        return Err(Error::OracleCap { n: ps.len(), cap });
    }
    let b = ps.bounds();
    let pts = ps.points();
    let y_at_x: HashMap<i64, i64> = pts.iter().map(|p| (p.x, p.y)).collect();

    // Candidate vertical sides: bounding box sides and every point abscissa.
    let mut xs: Vec<i64> = pts.iter().map(|p| p.x).collect();
    xs.push(b.x_lo);
    xs.push(b.x_hi);
    xs.sort_unstable();

    let blocked = |x: i64, y0: i64, y1: i64, side: i64| {
        x == side || y_at_x.get(&x).is_some_and(|&y| y0 < y && y < y1)
    };

    let mut out = Vec::new();
    for (i, &xl) in xs.iter().enumerate() {
        // y coordinates of points strictly between xl and the current xr
        let mut between: Vec<i64> = Vec::new();
        for &xr in &xs[i + 1..] {
            let mut prev = b.y_lo;
            for &y in between.iter().chain(std::iter::once(&b.y_hi)) {
                if blocked(xl, prev, y, b.x_lo) && blocked(xr, prev, y, b.x_hi) {
                    out.push(Rect {
                        x_lo: xl,
                        y_lo: prev,
                        x_hi: xr,
                        y_hi: y,
                    });
                }
                prev = y;
            }
            if let Some(&y) = y_at_x.get(&xr) {
                let at = between.partition_point(|&v| v < y);
                between.insert(at, y);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Caches the full enumeration so that many queries can be answered by a
/// linear filter.
pub struct Oracle {
    bounds: Rect,
    rects: Vec<Rect>,
}

impl Oracle {
    pub fn new(ps: &PointSet) -> Result<Self> {
        Self::with_cap(ps, DEFAULT_ORACLE_CAP)
    }

    pub fn with_cap(ps: &PointSet, cap: usize) -> Result<Self> {
        Ok(Oracle {
            bounds: ps.bounds(),
            rects: enumerate_maximal_empty_capped(ps, cap)?,
        })
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn largest_containing(&self, x: i64, y: i64) -> Result<Rect> {
        if !self.bounds.contains(x, y) {
            return Err(Error::QueryOutside { x, y });
        }
        Ok(self
            .rects
            .iter()
            .filter(|r| r.contains(x, y))
            .max()
            .copied()
            .expect("maximal empty rectangles cover the bounding box"))
    }
}

/// The largest maximal empty rectangle containing `(x, y)` (closed
/// containment).
pub fn oracle_largest_containing(ps: &PointSet, x: i64, y: i64) -> Result<Rect> {
    Oracle::new(ps)?.largest_containing(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_maximal_empty;

    fn r(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Rect {
        Rect::new(x_lo, y_lo, x_hi, y_hi).unwrap()
    }

    #[test]
    fn single_point_has_four() {
        let ps = PointSet::new(&[(4, 3)], r(0, 10, 0, 10)).unwrap();
        let mut got = enumerate_maximal_empty(&ps).unwrap();
        got.sort_by_key(|r| (r.x_lo, r.x_hi, r.y_lo, r.y_hi));
        let mut want = vec![
            r(0, 4, 0, 10),
            r(4, 10, 0, 10),
            r(0, 10, 0, 3),
            r(0, 10, 3, 10),
        ];
        want.sort_by_key(|r| (r.x_lo, r.x_hi, r.y_lo, r.y_hi));
        assert_eq!(got, want);
    }

    #[test]
    fn two_points_have_eight() {
        let ps = PointSet::new(&[(3, 4), (7, 5)], r(0, 12, 0, 10)).unwrap();
        let got = enumerate_maximal_empty(&ps).unwrap();
        let mut areas: Vec<i64> = got.iter().map(Rect::area).collect();
        areas.sort_unstable();
        let mut want = vec![30, 50, 48, 60, 40, 12, 45, 42];
        want.sort_unstable();
        assert_eq!(areas, want);
        assert!(got.iter().all(|r| is_maximal_empty(r, &ps)));
    }

    #[test]
    fn empty_set_is_the_box() {
        let ps = PointSet::new(&[], r(0, 5, 0, 7)).unwrap();
        assert_eq!(enumerate_maximal_empty(&ps).unwrap(), vec![r(0, 5, 0, 7)]);
    }

    #[test]
    fn largest_containing_examples() {
        let one = PointSet::new(&[(4, 3)], r(0, 10, 0, 10)).unwrap();
        let ans = oracle_largest_containing(&one, 2, 5).unwrap();
        assert_eq!((ans, ans.area()), (r(0, 10, 3, 10), 70));

        let two = PointSet::new(&[(3, 4), (7, 5)], r(0, 12, 0, 10)).unwrap();
        // (5,4) sits on the top edge of [0,12]x[0,4]; containment is closed
        let ans = oracle_largest_containing(&two, 5, 4).unwrap();
        assert_eq!((ans, ans.area()), (r(0, 12, 0, 4), 48));
        let ans = oracle_largest_containing(&two, 5, 5).unwrap();
        assert_eq!((ans, ans.area()), (r(0, 12, 5, 10), 60));
        let ans = oracle_largest_containing(&two, 1, 1).unwrap();
        assert_eq!((ans, ans.area()), (r(0, 12, 0, 4), 48));
    }

    #[test]
    fn query_outside_is_domain_error() {
        let one = PointSet::new(&[(4, 3)], r(0, 10, 0, 10)).unwrap();
        assert_eq!(
            oracle_largest_containing(&one, 11, 5).unwrap_err(),
            Error::QueryOutside { x: 11, y: 5 }
        );
    }

    #[test]
    fn cap_is_enforced() {
        let raw: Vec<_> = (1..=5).map(|i| (i, i)).collect();
        let ps = PointSet::new(&raw, r(0, 10, 0, 10)).unwrap();
        assert_eq!(
            enumerate_maximal_empty_capped(&ps, 4).unwrap_err(),
            Error::OracleCap { n: 5, cap: 4 }
        );
    }
}
