//! Partial inverse-Monge matrices accessed through a lazy entry oracle.
//!
//! Nothing here materializes a matrix. Algorithms ask a [`MatrixOracle`] for
//! individual entries and for the contiguous span of defined entries in a
//! row or column, so structures over an `m x n` matrix can be built with far
//! fewer than `m * n` evaluations.

use std::sync::atomic::{AtomicU64, Ordering};

mod envelope;
pub mod random;
mod smawk;
mod submatrix;

pub use envelope::{
    column_maxima, cross_column, merge_envelopes, Block, Crossing, Envelope, EnvelopeTree,
};
pub use smawk::smawk_row_maxima;
pub use submatrix::SubmatrixMax;

/// Inclusive index interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        Span { lo, hi }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn intersect(&self, other: &Span) -> Option<Span> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Span { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A matrix cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Lazily evaluated partial matrix.
///
/// Defined entries of each row form one contiguous span. Structures that
/// also index columns (the transposed envelope tree) additionally require
/// contiguous column spans.
pub trait MatrixOracle {
    type Value: Ord + Copy;

    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn row_span(&self, row: usize) -> Option<Span>;
    fn col_span(&self, col: usize) -> Option<Span>;
    /// `None` means undefined. Never a sentinel.
    fn entry(&self, row: usize, col: usize) -> Option<Self::Value>;
}

impl<M: MatrixOracle + ?Sized> MatrixOracle for &M {
    type Value = M::Value;

    fn nrows(&self) -> usize {
        (**self).nrows()
    }
    fn ncols(&self) -> usize {
        (**self).ncols()
    }
    fn row_span(&self, row: usize) -> Option<Span> {
        (**self).row_span(row)
    }
    fn col_span(&self, col: usize) -> Option<Span> {
        (**self).col_span(col)
    }
    fn entry(&self, row: usize, col: usize) -> Option<Self::Value> {
        (**self).entry(row, col)
    }
}

/// View of a matrix with rows and columns exchanged. Transposition
/// preserves the inverse Monge property.
#[derive(Clone, Copy, Debug)]
pub struct Transposed<M>(pub M);

impl<M: MatrixOracle> MatrixOracle for Transposed<M> {
    type Value = M::Value;

    fn nrows(&self) -> usize {
        self.0.ncols()
    }
    fn ncols(&self) -> usize {
        self.0.nrows()
    }
    fn row_span(&self, row: usize) -> Option<Span> {
        self.0.col_span(row)
    }
    fn col_span(&self, col: usize) -> Option<Span> {
        self.0.row_span(col)
    }
    fn entry(&self, row: usize, col: usize) -> Option<Self::Value> {
        self.0.entry(col, row)
    }
}

/// Counts entry evaluations. The counter is atomic so a built structure can
/// be queried from several threads.
#[derive(Debug)]
pub struct Counted<M> {
    inner: M,
    evals: AtomicU64,
}

impl<M> Counted<M> {
    pub fn new(inner: M) -> Self {
        Counted {
            inner,
            evals: AtomicU64::new(0),
        }
    }

    pub fn evals(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.evals.store(0, Ordering::Relaxed);
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: MatrixOracle> MatrixOracle for Counted<M> {
    type Value = M::Value;

    fn nrows(&self) -> usize {
        self.inner.nrows()
    }
    fn ncols(&self) -> usize {
        self.inner.ncols()
    }
    fn row_span(&self, row: usize) -> Option<Span> {
        self.inner.row_span(row)
    }
    fn col_span(&self, col: usize) -> Option<Span> {
        self.inner.col_span(col)
    }
    fn entry(&self, row: usize, col: usize) -> Option<Self::Value> {
        self.evals.fetch_add(1, Ordering::Relaxed);
        self.inner.entry(row, col)
    }
}

/// Explicit partial matrix, mostly for tests and small inputs.
#[derive(Clone, Debug)]
pub struct DenseMatrix<V> {
    nrows: usize,
    ncols: usize,
    cells: Vec<Option<V>>,
    row_spans: Vec<Option<Span>>,
    col_spans: Vec<Option<Span>>,
}

impl<V: Ord + Copy> DenseMatrix<V> {
    /// Fully defined matrix from rows of equal length.
    pub fn from_rows(rows: &[Vec<V>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let cells = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.iter().map(|&v| Some(v))
            })
            .collect();
        Self::from_cells(rows.len(), ncols, cells)
    }

    /// Builds from row-major cells. Panics if a row or column has a gap in
    /// its defined entries.
    pub fn from_cells(nrows: usize, ncols: usize, cells: Vec<Option<V>>) -> Self {
        assert_eq!(cells.len(), nrows * ncols);
        let span_of = |it: &mut dyn Iterator<Item = bool>| -> Option<Span> {
            let mut lo = None;
            let mut hi = 0;
            let mut closed = false;
            for (i, defined) in it.enumerate() {
                match (defined, lo.is_some()) {
                    (true, false) => {
                        lo = Some(i);
                        hi = i;
                    }
                    (true, true) => {
                        assert!(!closed, "defined entries must be contiguous");
                        hi = i;
                    }
                    (false, true) => closed = true,
                    (false, false) => {}
                }
            }
            lo.map(|lo| Span { lo, hi })
        };
        let row_spans = (0..nrows)
            .map(|r| span_of(&mut (0..ncols).map(|c| cells[r * ncols + c].is_some())))
            .collect();
        let col_spans = (0..ncols)
            .map(|c| span_of(&mut (0..nrows).map(|r| cells[r * ncols + c].is_some())))
            .collect();
        DenseMatrix {
            nrows,
            ncols,
            cells,
            row_spans,
            col_spans,
        }
    }
}

impl<V: Ord + Copy> MatrixOracle for DenseMatrix<V> {
    type Value = V;

    fn nrows(&self) -> usize {
        self.nrows
    }
    fn ncols(&self) -> usize {
        self.ncols
    }
    fn row_span(&self, row: usize) -> Option<Span> {
        self.row_spans[row]
    }
    fn col_span(&self, col: usize) -> Option<Span> {
        self.col_spans[col]
    }
    fn entry(&self, row: usize, col: usize) -> Option<V> {
        self.cells[row * self.ncols + col]
    }
}

/// Query-local work counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Work {
    /// Matrix entry evaluations.
    pub evals: u64,
    /// Search steps: tree nodes visited and binary-search probes.
    pub steps: u64,
}

impl Work {
    pub fn units(&self) -> u64 {
        self.evals + self.steps
    }
}

impl std::ops::AddAssign for Work {
    fn add_assign(&mut self, rhs: Work) {
        self.evals += rhs.evals;
        self.steps += rhs.steps;
    }
}

/// `(value, smaller row first)` ordering key used to break value ties.
pub(crate) fn rank<V: Ord>(value: V, row: usize) -> (V, std::cmp::Reverse<usize>) {
    (value, std::cmp::Reverse(row))
}

/// Ordering key for a located maximum: value, then smaller row, then
/// smaller column.
pub(crate) fn cell_rank<V: Ord + Copy>(
    found: &(V, Cell),
) -> (V, std::cmp::Reverse<usize>, std::cmp::Reverse<usize>) {
    (
        found.0,
        std::cmp::Reverse(found.1.row),
        std::cmp::Reverse(found.1.col),
    )
}

pub(crate) fn better<V: Ord + Copy>(
    a: Option<(V, Cell)>,
    b: Option<(V, Cell)>,
) -> Option<(V, Cell)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(if cell_rank(&b) > cell_rank(&a) { b } else { a }),
    }
}
