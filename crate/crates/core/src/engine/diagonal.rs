//! Matrix-backed bounded rectangles of a cell: left and bottom defining
//! points in the third quadrant, top and right in the first.
//!
//! Rows are consecutive pairs of `E` (maximal points of the third
//! quadrant), columns consecutive pairs of `F` (minimal points of the first
//! quadrant). Entry `(j, i)` is the rectangle spanned by `E[j], E[j + 1],
//! F[i], F[i + 1]`, defined when no point of the second or fourth quadrant
//! cuts into it. The defined region is a double staircase and the areas are
//! strictly inverse Monge, so the envelope machinery applies. The
//! second/fourth quadrant arrangement is the same structure on the mirrored
//! cell.

use std::cmp::Reverse;

use crate::geometry::{Flip, Rect};
use crate::monge::{Counted, MatrixOracle, Span, SubmatrixMax, Work};
use crate::rmq::RangeMaxTree;

/// Lazily evaluated rectangle matrix. Values are global rectangles, so the
/// matrix order is the global rectangle order.
#[derive(Clone, Debug)]
pub(crate) struct AreaMatrix {
    e_global: Vec<(i64, i64)>,
    f_global: Vec<(i64, i64)>,
    /// First and last defined column per row; `last < first` when empty.
    bounds: Vec<(i64, i64)>,
}

impl AreaMatrix {
    fn span(&self, row: usize) -> Option<Span> {
        let (lo, hi) = self.bounds[row];
        (lo <= hi).then(|| Span::new(lo as usize, hi as usize))
    }
}

impl MatrixOracle for AreaMatrix {
    type Value = Rect;

    fn nrows(&self) -> usize {
        self.bounds.len()
    }

    fn ncols(&self) -> usize {
        self.f_global.len() - 1
    }

    fn row_span(&self, row: usize) -> Option<Span> {
        self.span(row)
    }

    fn col_span(&self, col: usize) -> Option<Span> {
        // both ends are non-increasing in the row
        let c = col as i64;
        let lo = self.bounds.partition_point(|&(l, _)| l > c);
        let hi = self.bounds.partition_point(|&(_, h)| h >= c);
        (lo < hi).then(|| Span::new(lo, hi - 1))
    }

    fn entry(&self, row: usize, col: usize) -> Option<Rect> {
        if !self.span(row)?.contains(col) {
            return None;
        }
        let pts = [
            self.e_global[row],
            self.e_global[row + 1],
            self.f_global[col],
            self.f_global[col + 1],
        ];
        Some(Rect {
            x_lo: pts.iter().map(|p| p.0).min().unwrap(),
            y_lo: pts.iter().map(|p| p.1).min().unwrap(),
            x_hi: pts.iter().map(|p| p.0).max().unwrap(),
            y_hi: pts.iter().map(|p| p.1).max().unwrap(),
        })
    }
}

/// One orientation of the matrix-backed structure at a cell.
pub(crate) struct DiagonalStructure {
    flip: Flip,
    /// Local coordinates after `flip`.
    e: Vec<(i64, i64)>,
    f: Vec<(i64, i64)>,
    max: SubmatrixMax<Counted<AreaMatrix>>,
    build_evals: u64,
    col_maxima: RangeMaxTree<Option<Rect>>,
    row_maxima: RangeMaxTree<Option<Rect>>,
}

/// Third-quadrant maxima, left to right (y decreasing).
fn maximal_chain(mut q3: Vec<(i64, i64, usize)>) -> Vec<(i64, i64, usize)> {
    q3.sort_unstable_by_key(|p| Reverse(p.0));
    let mut chain = Vec::new();
    for p in q3 {
        if chain.last().is_none_or(|c: &(i64, i64, usize)| p.1 > c.1) {
            chain.push(p);
        }
    }
    chain.reverse();
    chain
}

/// First-quadrant minima, left to right (y decreasing).
fn minimal_chain(mut q1: Vec<(i64, i64, usize)>) -> Vec<(i64, i64, usize)> {
    q1.sort_unstable();
    let mut chain = Vec::new();
    for p in q1 {
        if chain.last().is_none_or(|c: &(i64, i64, usize)| p.1 < c.1) {
            chain.push(p);
        }
    }
    chain
}

impl DiagonalStructure {
    /// `local` are the cell's points relative to its origin (doubled, never
    /// on an axis), `global` the same points in input coordinates. Returns
    /// `None` when either chain has fewer than two points.
    pub(crate) fn build(local: &[(i64, i64)], global: &[(i64, i64)], flip: Flip) -> Option<Self> {
        let mut quads: [Vec<(i64, i64, usize)>; 4] = Default::default();
        for (i, &(x, y)) in local.iter().enumerate() {
            let (x, y) = flip.apply(x, y);
            let q = match (x > 0, y > 0) {
                (true, true) => 0,
                (false, true) => 1,
                (false, false) => 2,
                (true, false) => 3,
            };
            quads[q].push((x, y, i));
        }
        let [q1, mut q2, q3, mut q4] = quads;
        let e = maximal_chain(q3);
        let f = minimal_chain(q1);
        if e.len() < 2 || f.len() < 2 {
            return None;
        }

        // lowest second-quadrant point right of x: prefix-free staircase
        // with x and y increasing
        q2.sort_unstable_by_key(|p| Reverse(p.0));
        let mut c_chain: Vec<(i64, i64)> = Vec::new();
        for &(x, y, _) in &q2 {
            if c_chain.last().is_none_or(|c| y < c.1) {
                c_chain.push((x, y));
            }
        }
        c_chain.reverse();
        // leftmost fourth-quadrant point above y: staircase with x and y
        // increasing
        q4.sort_unstable_by_key(|p| Reverse(p.1));
        let mut d_chain: Vec<(i64, i64)> = Vec::new();
        for &(x, y, _) in &q4 {
            if d_chain.last().is_none_or(|d| x < d.0) {
                d_chain.push((x, y));
            }
        }
        d_chain.reverse();

        let bounds = e
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                let first = match c_chain.get(c_chain.partition_point(|c| c.0 < a.0)) {
                    Some(c) => f.partition_point(|p| p.1 > c.1),
                    None => 0,
                };
                let count = match d_chain.get(d_chain.partition_point(|d| d.1 < b.1)) {
                    Some(d) => f.partition_point(|p| p.0 < d.0),
                    None => f.len(),
                };
                (first as i64, count as i64 - 2)
            })
            .collect();

        let matrix = AreaMatrix {
            e_global: e.iter().map(|p| global[p.2]).collect(),
            f_global: f.iter().map(|p| global[p.2]).collect(),
            bounds,
        };
        let max = SubmatrixMax::build(Counted::new(matrix));
        let maxima = |tree: &crate::monge::EnvelopeTree, transpose: bool, len: usize| {
            let env = tree.root_envelope();
            let values: Vec<Option<Rect>> = (0..len)
                .map(|k| {
                    let b = env?.locate(k)?;
                    let (row, col) = if transpose { (k, b.row) } else { (b.row, k) };
                    max.oracle().entry(row, col)
                })
                .collect();
            RangeMaxTree::new(&values)
        };
        let col_maxima = maxima(max.row_tree(), false, max.oracle().ncols());
        let row_maxima = maxima(max.col_tree(), true, max.oracle().nrows());
        Some(DiagonalStructure {
            flip,
            build_evals: max.oracle().evals(),
            e: e.iter().map(|p| (p.0, p.1)).collect(),
            f: f.iter().map(|p| (p.0, p.1)).collect(),
            max,
            col_maxima,
            row_maxima,
        })
    }

    pub(crate) fn entry_evals(&self) -> u64 {
        self.build_evals
    }

    pub(crate) fn cells(&self) -> usize {
        self.max.cells() + self.col_maxima.cells() + self.row_maxima.cells()
    }

    pub(crate) fn matrix(&self) -> &AreaMatrix {
        self.max.oracle().inner()
    }

    /// Largest entry containing the local point `q` (doubled, relative to
    /// the origin, before `flip`).
    pub(crate) fn query(&self, q: (i64, i64), work: &mut Work) -> Option<Rect> {
        let (qx, qy) = self.flip.apply(q.0, q.1);
        let (e, f) = (&self.e, &self.f);
        let nrows = e.len() - 1;
        let ncols = f.len() - 1;
        let mut search = |len: usize| {
            work.steps += (usize::BITS - len.leading_zeros()) as u64;
        };
        // an entry (j, i) contains q iff E[j].x <= qx, E[j+1].y <= qy,
        // F[i].y >= qy and F[i+1].x >= qx; in each quadrant two of these hold
        // automatically
        let rows_left = || e.partition_point(|p| p.0 <= qx); // j < this
        let rows_below = || e.partition_point(|p| p.1 > qy).max(1) - 1; // j >= this
        let cols_above = || f.partition_point(|p| p.1 >= qy); // i < this
        let cols_right = || f.partition_point(|p| p.0 < qx).max(1) - 1; // i >= this
        search(e.len());
        search(f.len());
        if qx >= 0 && qy >= 0 {
            let (lo, end) = (cols_right(), cols_above().min(ncols));
            if lo >= end {
                return None;
            }
            self.col_maxima
                .max_in_counted(lo, end - 1, &mut work.steps)?
        } else if qx <= 0 && qy <= 0 {
            let (lo, end) = (rows_below(), rows_left().min(nrows));
            if lo >= end {
                return None;
            }
            self.row_maxima
                .max_in_counted(lo, end - 1, &mut work.steps)?
        } else if qx < 0 {
            let (rows, cols) = (rows_left().min(nrows), cols_above().min(ncols));
            if rows == 0 || cols == 0 {
                return None;
            }
            self.max
                .prefix_max_with(rows - 1, cols - 1, work)
                .map(|(r, _)| r)
        } else {
            let (rows, cols) = (rows_below()..=nrows - 1, cols_right()..=ncols - 1);
            self.max
                .submatrix_max_with(rows, cols, work)
                .map(|(r, _)| r)
        }
    }

    /// Every defined entry, for exhaustive checks.
    pub(crate) fn entries(&self) -> Vec<Rect> {
        let m = self.matrix();
        (0..m.nrows())
            .flat_map(|j| {
                m.span(j)
                    .into_iter()
                    .flat_map(move |s| (s.lo..=s.hi).map(move |i| (j, i)))
            })
            .map(|(j, i)| m.entry(j, i).expect("inside the row span"))
            .collect()
    }
}
