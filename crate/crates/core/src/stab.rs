//! Two-level segment tree over a static set of rectangles: the largest
//! stored rectangle containing a query point in `O(log² N)`.
//!
//! Both levels work over elementary slots of the sorted distinct endpoints:
//! slot `2i` is the endpoint `c[i]` itself and slot `2i + 1` the open gap
//! `(c[i], c[i + 1])`. A closed interval `[c[a], c[b]]` is then exactly the
//! slot range `[2a, 2b]`, which gives closed containment for free.

use crate::geometry::TaggedRect;

#[derive(Clone, Debug)]
struct Slots {
    coords: Vec<i64>,
}

impl Slots {
    fn new(mut coords: Vec<i64>) -> Self {
        coords.sort_unstable();
        coords.dedup();
        Slots { coords }
    }

    fn len(&self) -> usize {
        (2 * self.coords.len()).saturating_sub(1)
    }

    /// Slot range of the closed interval `[lo, hi]`; both ends must be
    /// endpoints.
    fn range(&self, lo: i64, hi: i64) -> (usize, usize) {
        let at = |c| 2 * self.coords.binary_search(&c).expect("endpoint is indexed");
        (at(lo), at(hi))
    }

    fn slot(&self, c: i64, steps: &mut u64) -> Option<usize> {
        *steps += (usize::BITS - self.coords.len().leading_zeros()) as u64;
        match self.coords.binary_search(&c) {
            Ok(i) => Some(2 * i),
            Err(0) => None,
            Err(i) if i == self.coords.len() => None,
            Err(i) => Some(2 * i - 1),
        }
    }
}

/// Calls `f` on the nodes of a bottom-up segment tree over `len` leaves
/// that canonically cover `[lo, hi]`.
fn canonical(len: usize, lo: usize, hi: usize, mut f: impl FnMut(usize)) {
    let (mut l, mut r) = (lo + len, hi + len + 1);
    while l < r {
        if l & 1 == 1 {
            f(l);
            l += 1;
        }
        if r & 1 == 1 {
            r -= 1;
            f(r);
        }
        l >>= 1;
        r >>= 1;
    }
}

#[derive(Clone, Debug)]
struct Secondary {
    slots: Slots,
    best: Vec<Option<u32>>,
}

#[derive(Clone, Debug)]
pub struct StabIndex {
    rects: Vec<TaggedRect>,
    xs: Slots,
    primary: Vec<Option<Secondary>>,
}

impl StabIndex {
    pub fn build(rects: Vec<TaggedRect>) -> Self {
        let xs = Slots::new(
            rects
                .iter()
                .flat_map(|t| [t.rect.x_lo, t.rect.x_hi])
                .collect(),
        );
        let m = xs.len();
        let mut assigned: Vec<Vec<u32>> = vec![Vec::new(); 2 * m];
        for (i, t) in rects.iter().enumerate() {
            let (lo, hi) = xs.range(t.rect.x_lo, t.rect.x_hi);
            canonical(m, lo, hi, |node| assigned[node].push(i as u32));
        }

        let better = |a: Option<u32>, b: u32| match a {
            Some(a) if key(&rects[a as usize]) >= key(&rects[b as usize]) => Some(a),
            _ => Some(b),
        };
        let primary = assigned
            .into_iter()
            .map(|ids| {
                if ids.is_empty() {
                    return None;
                }
                let slots = Slots::new(
                    ids.iter()
                        .flat_map(|&i| {
                            let r = &rects[i as usize].rect;
                            [r.y_lo, r.y_hi]
                        })
                        .collect(),
                );
                let k = slots.len();
                let mut best = vec![None; 2 * k];
                for &i in &ids {
                    let r = &rects[i as usize].rect;
                    let (lo, hi) = slots.range(r.y_lo, r.y_hi);
                    canonical(k, lo, hi, |node| best[node] = better(best[node], i));
                }
                Some(Secondary { slots, best })
            })
            .collect();
        StabIndex { rects, xs, primary }
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn rects(&self) -> &[TaggedRect] {
        &self.rects
    }

    /// Number of secondary-tree slots, the size measure of the index.
    pub fn cells(&self) -> usize {
        self.primary.iter().flatten().map(|s| s.best.len()).sum()
    }

    /// Largest stored rectangle (by the rectangle order) containing `(x, y)`,
    /// boundary included.
    pub fn stab_max_area(&self, x: i64, y: i64) -> Option<TaggedRect> {
        self.stab_max_area_counted(x, y, &mut 0)
    }

    pub fn stab_max_area_counted(&self, x: i64, y: i64, steps: &mut u64) -> Option<TaggedRect> {
        let m = self.xs.len();
        let mut node = self.xs.slot(x, steps)? + m;
        let mut best: Option<&TaggedRect> = None;
        while node >= 1 {
            *steps += 1;
            if let Some(sec) = &self.primary[node] {
                if let Some(slot) = sec.slots.slot(y, steps) {
                    let k = sec.slots.len();
                    let mut v = slot + k;
                    while v >= 1 {
                        *steps += 1;
                        if let Some(i) = sec.best[v] {
                            let cand = &self.rects[i as usize];
                            if best.is_none_or(|b| key(cand) > key(b)) {
                                best = Some(cand);
                            }
                        }
                        v >>= 1;
                    }
                }
            }
            node >>= 1;
        }
        best.copied()
    }
}

fn key(t: &TaggedRect) -> (crate::Rect, std::cmp::Reverse<crate::Provenance>) {
    (t.rect, std::cmp::Reverse(t.provenance))
}
