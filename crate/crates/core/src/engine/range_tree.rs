//! Two-level range tree over the points. Splitters sit at the midpoint of
//! the median coordinate gap and are stored doubled, so they are integers
//! and never coincide with a (doubled) point coordinate.

use crate::geometry::PointSet;

#[derive(Clone, Debug)]
pub(crate) struct PrimaryNode {
    /// Doubled x of the vertical splitter.
    pub split: i64,
    pub lo: Option<usize>,
    pub hi: Option<usize>,
    pub secondary: usize,
}

/// An internal secondary node: a cell with an origin.
#[derive(Clone, Debug)]
pub(crate) struct Cell {
    /// Doubled origin: the primary splitter and this node's splitter.
    pub origin: (i64, i64),
    /// Doubled cell box `[x_lo, y_lo, x_hi, y_hi]`.
    pub bbox: [i64; 4],
    pub lo: Option<usize>,
    pub hi: Option<usize>,
    /// Point ids in the cell.
    pub points: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct RangeTree {
    pub primary: Vec<PrimaryNode>,
    pub cells: Vec<Cell>,
    pub root: Option<usize>,
}

fn splitter(sorted: &[i64]) -> (usize, i64) {
    let mid = sorted.len() / 2;
    (mid, sorted[mid - 1] + sorted[mid])
}

impl RangeTree {
    pub fn build(ps: &PointSet) -> Self {
        let b = ps.bounds();
        let mut t = RangeTree::default();
        t.root = t.build_primary(ps, ps.by_x().to_vec(), (2 * b.x_lo, 2 * b.x_hi));
        t
    }

    fn build_primary(
        &mut self,
        ps: &PointSet,
        by_x: Vec<usize>,
        strip: (i64, i64),
    ) -> Option<usize> {
        if by_x.len() < 2 {
            return None;
        }
        let xs: Vec<i64> = by_x.iter().map(|&i| ps.point(i).x).collect();
        let (mid, split) = splitter(&xs);
        let mut by_y = by_x.clone();
        by_y.sort_unstable_by_key(|&i| ps.point(i).y);
        let b = ps.bounds();
        let secondary = self
            .build_secondary(ps, by_y, strip, split, (2 * b.y_lo, 2 * b.y_hi))
            .expect("at least two points");
        let (left, right) = by_x.split_at(mid);
        let lo = self.build_primary(ps, left.to_vec(), (strip.0, split));
        let hi = self.build_primary(ps, right.to_vec(), (split, strip.1));
        self.primary.push(PrimaryNode {
            split,
            lo,
            hi,
            secondary,
        });
        Some(self.primary.len() - 1)
    }

    fn build_secondary(
        &mut self,
        ps: &PointSet,
        by_y: Vec<usize>,
        strip: (i64, i64),
        split_x: i64,
        band: (i64, i64),
    ) -> Option<usize> {
        if by_y.len() < 2 {
            return None;
        }
        let ys: Vec<i64> = by_y.iter().map(|&i| ps.point(i).y).collect();
        let (mid, split) = splitter(&ys);
        let (below, above) = by_y.split_at(mid);
        let lo = self.build_secondary(ps, below.to_vec(), strip, split_x, (band.0, split));
        let hi = self.build_secondary(ps, above.to_vec(), strip, split_x, (split, band.1));
        self.cells.push(Cell {
            origin: (split_x, split),
            bbox: [strip.0, band.0, strip.1, band.1],
            lo,
            hi,
            points: by_y,
        });
        Some(self.cells.len() - 1)
    }

    /// Cells on the search paths of the doubled point `q`: the primary path
    /// and, at each of its nodes, the secondary path. A path stops early when
    /// `q` lies on a splitter.
    pub fn search(&self, q: (i64, i64), mut visit: impl FnMut(usize)) {
        let mut u = self.root;
        while let Some(p) = u.map(|i| &self.primary[i]) {
            let mut v = Some(p.secondary);
            while let Some(c) = v {
                visit(c);
                let cell = &self.cells[c];
                v = match q.1.cmp(&cell.origin.1) {
                    std::cmp::Ordering::Less => cell.lo,
                    std::cmp::Ordering::Greater => cell.hi,
                    std::cmp::Ordering::Equal => None,
                };
            }
            u = match q.0.cmp(&p.split) {
                std::cmp::Ordering::Less => p.lo,
                std::cmp::Ordering::Greater => p.hi,
                std::cmp::Ordering::Equal => None,
            };
        }
    }

    /// The cell whose origin lies inside the doubled rectangle `[x_lo, x_hi]
    /// x [y_lo, y_hi]` and is highest in the tree, if any.
    pub fn home(&self, r: [i64; 4]) -> Option<usize> {
        let [x_lo, y_lo, x_hi, y_hi] = r;
        let mut u = self.root;
        while let Some(p) = u.map(|i| &self.primary[i]) {
            if x_lo < p.split && p.split < x_hi {
                let mut v = Some(p.secondary);
                while let Some(c) = v {
                    let cell = &self.cells[c];
                    let s = cell.origin.1;
                    if y_lo < s && s < y_hi {
                        return Some(c);
                    }
                    v = if y_hi < s { cell.lo } else { cell.hi };
                }
                return None;
            }
            u = if x_hi < p.split { p.lo } else { p.hi };
        }
        None
    }
}
