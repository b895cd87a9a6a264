//! Maximal empty rectangles with at least one side on the bounding box.
//!
//! There are `O(n)` of them, in four classes by how many box sides they
//! touch. Each class is computed in one canonical orientation and mapped to
//! the others through a [`Flip`].

use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::geometry::{Flip, PointSet, Provenance, Rect, TaggedRect};

const CORNERS: [Flip; 4] = [
    Flip::new(false, false, false),
    Flip::new(false, true, false),
    Flip::new(false, false, true),
    Flip::new(false, true, true),
];

/// Flips taking each side of the box to the right side.
const SIDES: [Flip; 4] = [
    Flip::new(false, false, false),
    Flip::new(false, true, false),
    Flip::new(true, false, false),
    Flip::new(true, true, false),
];

/// All maximal empty rectangles touching the bounding box, each once, tagged
/// with the lowest class it qualifies for.
pub fn compute_anchored(ps: &PointSet) -> Vec<TaggedRect> {
    let b = ps.bounds();
    let mut out = Vec::new();
    let mut emit = |rect: Rect, provenance| out.push(TaggedRect { rect, provenance });

    // (i) three sides on the box
    match (
        ps.by_x().first().map(|&i| ps.point(i).x),
        ps.by_x().last().map(|&i| ps.point(i).x),
        ps.by_y().first().map(|&i| ps.point(i).y),
        ps.by_y().last().map(|&i| ps.point(i).y),
    ) {
        (Some(min_x), Some(max_x), Some(min_y), Some(max_y)) => {
            let three = Provenance::AnchoredThree;
            emit(Rect { x_hi: min_x, ..b }, three);
            emit(Rect { x_lo: max_x, ..b }, three);
            emit(Rect { y_hi: min_y, ..b }, three);
            emit(Rect { y_lo: max_y, ..b }, three);
        }
        _ => emit(b, Provenance::AnchoredThree),
    }

    // (iii) two opposite sides: consecutive coordinates
    for w in ps.by_y().windows(2) {
        let (y0, y1) = (ps.point(w[0]).y, ps.point(w[1]).y);
        emit(
            Rect {
                y_lo: y0,
                y_hi: y1,
                ..b
            },
            Provenance::AnchoredOpposite,
        );
    }
    for w in ps.by_x().windows(2) {
        let (x0, x1) = (ps.point(w[0]).x, ps.point(w[1]).x);
        emit(
            Rect {
                x_lo: x0,
                x_hi: x1,
                ..b
            },
            Provenance::AnchoredOpposite,
        );
    }

    // (ii) two adjacent sides, one corner at a time
    for flip in CORNERS {
        let (tb, pts) = transformed(ps, flip);
        for r in corner_rects(tb, &pts) {
            emit(flip.invert_rect(&r), Provenance::AnchoredCorner);
        }
    }

    // (iv) exactly one side
    for flip in SIDES {
        let (tb, pts) = transformed(ps, flip);
        for r in one_side_rects(tb, &pts) {
            emit(flip.invert_rect(&r), Provenance::AnchoredOne);
        }
    }

    out.sort_by_key(|t| (t.rect, t.provenance));
    out.dedup_by_key(|t| t.rect);
    out
}

fn transformed(ps: &PointSet, flip: Flip) -> (Rect, Vec<(i64, i64)>) {
    let pts = ps.points().iter().map(|p| flip.apply(p.x, p.y)).collect();
    (flip.apply_rect(&ps.bounds()), pts)
}

/// Top-right corner: rectangles whose left and bottom sides pass through
/// consecutive points of the maximal (staircase) chain.
fn corner_rects(b: Rect, pts: &[(i64, i64)]) -> Vec<Rect> {
    let mut sorted = pts.to_vec();
    sorted.sort_unstable_by_key(|p| Reverse(p.0));
    // right to left, a point is maximal iff it is higher than all seen so far
    let mut chain = Vec::new();
    let mut highest = i64::MIN;
    for &(x, y) in &sorted {
        if y > highest {
            chain.push((x, y));
            highest = y;
        }
    }
    chain.reverse();
    chain
        .windows(2)
        .map(|w| Rect {
            x_lo: w[0].0,
            y_lo: w[1].1,
            ..b
        })
        .collect()
}

/// Right side on the box, the other three sides through points: sweep
/// right to left, keeping the points already passed ordered by y.
fn one_side_rects(b: Rect, pts: &[(i64, i64)]) -> Vec<Rect> {
    let mut sorted = pts.to_vec();
    sorted.sort_unstable_by_key(|p| Reverse(p.0));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &(x, y) in &sorted {
        let above = seen.range(y + 1..).next();
        let below = seen.range(..y).next_back();
        if let (Some(&top), Some(&bottom)) = (above, below) {
            out.push(Rect {
                x_lo: x,
                y_lo: bottom,
                x_hi: b.x_hi,
                y_hi: top,
            });
        }
        seen.insert(y);
    }
    out
}
