//! Bounded rectangles of a cell that are not matrix-backed: three defining
//! points in one halfplane around the origin, or one defining point per
//! quadrant.
//!
//! Everything here works on local coordinates (origin at `(0, 0)`, no point
//! on an axis) and reports rectangles as the indices of their four defining
//! points. The rectangle is their bounding box.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use crate::geometry::Flip;
use crate::rmq::RangeMaxTree;

pub(crate) type Defining = [usize; 4];

const HALFPLANES: [Flip; 4] = [
    Flip::new(false, false, false),
    Flip::new(false, true, false),
    Flip::new(true, false, false),
    Flip::new(true, true, false),
];

fn flipped(pts: &[(i64, i64)], flip: Flip) -> Vec<(i64, i64)> {
    pts.iter().map(|&(x, y)| flip.apply(x, y)).collect()
}

/// Rectangles with three defining points in one halfplane, over all four
/// halfplanes.
pub(crate) fn case_halfplane(pts: &[(i64, i64)]) -> Vec<Defining> {
    let mut out = Vec::new();
    if pts.len() < 4 {
        return out;
    }
    for flip in HALFPLANES {
        out.extend(left_halfplane(&flipped(pts, flip)));
    }
    out
}

/// Left, top and bottom points left of the y-axis, the right point across
/// it. Sweeps leftward from the axis; each swept point is the left side of
/// at most one candidate.
fn left_halfplane(pts: &[(i64, i64)]) -> Vec<Defining> {
    let mut left: Vec<usize> = (0..pts.len()).filter(|&i| pts[i].0 < 0).collect();
    left.sort_unstable_by_key(|&i| Reverse(pts[i].0));
    let mut right: Vec<usize> = (0..pts.len()).filter(|&i| pts[i].0 > 0).collect();
    right.sort_unstable_by_key(|&i| pts[i].1);
    let right_ys: Vec<i64> = right.iter().map(|&i| pts[i].1).collect();
    let leftmost = RangeMaxTree::new(
        &right
            .iter()
            .map(|&i| (Reverse(pts[i].0), i))
            .collect::<Vec<_>>(),
    );

    let mut out = Vec::new();
    let mut swept: BTreeMap<i64, usize> = BTreeMap::new();
    for &p in &left {
        let y = pts[p].1;
        let top = swept.range(y + 1..).next().map(|(_, &i)| i);
        let bottom = swept.range(..y).next_back().map(|(_, &i)| i);
        swept.insert(y, p);
        let (Some(top), Some(bottom)) = (top, bottom) else {
            continue;
        };
        let (lo, hi) = (pts[bottom].1, pts[top].1);
        if lo > 0 || hi < 0 {
            continue;
        }
        let a = right_ys.partition_point(|&v| v <= lo);
        let b = right_ys.partition_point(|&v| v < hi);
        if a < b {
            let (_, r) = leftmost.max_in(a, b - 1).expect("nonempty range");
            out.push([p, bottom, r, top]);
        }
    }
    out
}

/// Rectangles with one defining point in each quadrant, in both cyclic
/// arrangements.
pub(crate) fn case_one_per_quadrant(pts: &[(i64, i64)]) -> Vec<Defining> {
    let mut out = quadrant_chase(pts);
    out.extend(quadrant_chase(&flipped(pts, Flip::new(false, true, false))));
    out
}

/// Points of one quadrant sorted by one coordinate, with a range-maximum
/// tree over a score of the other.
struct Sorted {
    keys: Vec<i64>,
    best: RangeMaxTree<(i64, usize)>,
}

impl Sorted {
    fn new(pts: &[(i64, i64)], ids: Vec<usize>, key: impl Fn((i64, i64)) -> (i64, i64)) -> Self {
        let mut scored: Vec<(i64, i64, usize)> = ids
            .into_iter()
            .map(|i| {
                let (k, s) = key(pts[i]);
                (k, s, i)
            })
            .collect();
        scored.sort_unstable();
        Sorted {
            keys: scored.iter().map(|t| t.0).collect(),
            best: RangeMaxTree::new(&scored.iter().map(|t| (t.1, t.2)).collect::<Vec<_>>()),
        }
    }

    /// Best-scoring point with key strictly inside `(lo, hi)`.
    fn best_between(&self, lo: i64, hi: i64) -> Option<usize> {
        let a = self.keys.partition_point(|&k| k <= lo);
        let b = self.keys.partition_point(|&k| k < hi);
        (a < b).then(|| self.best.max_in(a, b - 1).expect("nonempty range").1)
    }
}

/// Right point in the first quadrant, then bottom (fourth), left (third),
/// top (second); the chase must close back on the starting point.
fn quadrant_chase(pts: &[(i64, i64)]) -> Vec<Defining> {
    let quadrant = |sx: bool, sy: bool| -> Vec<usize> {
        (0..pts.len())
            .filter(|&i| (pts[i].0 > 0) == sx && (pts[i].1 > 0) == sy)
            .collect()
    };
    let (q1, q2, q3, q4) = (
        quadrant(true, true),
        quadrant(false, true),
        quadrant(false, false),
        quadrant(true, false),
    );
    if q1.is_empty() || q2.is_empty() || q3.is_empty() || q4.is_empty() {
        return Vec::new();
    }
    // highest by x, rightmost by y, lowest by x, leftmost by y
    let s4 = Sorted::new(pts, q4, |(x, y)| (x, y));
    let s3 = Sorted::new(pts, q3, |(x, y)| (y, x));
    let s2 = Sorted::new(pts, q2, |(x, y)| (x, -y));
    let s1 = Sorted::new(pts, q1.clone(), |(x, y)| (y, -x));

    let mut out = Vec::new();
    for r in q1 {
        let Some(b) = s4.best_between(0, pts[r].0) else {
            continue;
        };
        let Some(l) = s3.best_between(pts[b].1, 0) else {
            continue;
        };
        let Some(t) = s2.best_between(pts[l].0, 0) else {
            continue;
        };
        if s1.best_between(0, pts[t].1) == Some(r) {
            out.push([l, b, r, t]);
        }
    }
    out
}
