use std::cmp::Reverse;
use std::ops::RangeInclusive;

use super::{better, cell_rank, Cell, EnvelopeTree, MatrixOracle, Span, Transposed, Work};
use crate::rmq::RangeMaxTree;

type Ranked<V> = (V, Reverse<usize>, Reverse<usize>);

fn unrank<V>(r: Ranked<V>) -> (V, Cell) {
    (
        r.0,
        Cell {
            row: (r.1).0,
            col: (r.2).0,
        },
    )
}

/// Per row-tree node: the maximum of the envelope over each of its blocks,
/// the cumulative prefix maxima of that sequence, and a range-maximum tree
/// over it for two-sided column ranges.
#[derive(Clone, Debug)]
struct BlockMaxima<V> {
    prefix: Vec<(V, Cell)>,
    ranges: RangeMaxTree<Ranked<V>>,
}

/// Maxima queries over contiguous submatrices of a double-staircase
/// inverse-Monge matrix.
///
/// Two envelope trees are kept: one over the rows (each node: envelope of
/// its rows as a function of the column) and one over the columns of the
/// transposed matrix. The column tree answers "max of row `r` over columns
/// `[c1, c2]`" with one envelope lookup per canonical node; the row tree,
/// with per-block maxima computed through that routine, answers prefix and
/// general submatrix queries.
pub struct SubmatrixMax<M: MatrixOracle> {
    oracle: M,
    row_tree: EnvelopeTree,
    col_tree: EnvelopeTree,
    maxima: Vec<BlockMaxima<M::Value>>,
}

impl<M: MatrixOracle> SubmatrixMax<M> {
    pub fn build(oracle: M) -> Self {
        let row_tree = EnvelopeTree::build(&oracle);
        let col_tree = EnvelopeTree::build(&Transposed(&oracle));
        let mut s = SubmatrixMax {
            oracle,
            row_tree,
            col_tree,
            maxima: Vec::new(),
        };
        let mut work = Work::default();
        let maxima = (0..s.row_tree.node_count())
            .map(|node| {
                let found: Vec<(M::Value, Cell)> = s
                    .row_tree
                    .envelope(node)
                    .blocks()
                    .iter()
                    .map(|b| {
                        s.row_max_in(b.row, b.span(), &mut work)
                            .expect("envelope blocks lie inside the row's span")
                    })
                    .collect();
                let mut prefix = Vec::with_capacity(found.len());
                let mut best = None;
                for f in &found {
                    best = better(best, Some(*f));
                    prefix.push(best.unwrap());
                }
                let ranked: Vec<_> = found.iter().map(cell_rank).collect();
                BlockMaxima {
                    prefix,
                    ranges: RangeMaxTree::new(&ranked),
                }
            })
            .collect();
        s.maxima = maxima;
        s
    }

    pub fn oracle(&self) -> &M {
        &self.oracle
    }

    pub fn row_tree(&self) -> &EnvelopeTree {
        &self.row_tree
    }

    pub fn col_tree(&self) -> &EnvelopeTree {
        &self.col_tree
    }

    /// Stored maximum of each envelope block of a row-tree node.
    pub fn block_maxima(&self, node: usize) -> Vec<(M::Value, Cell)> {
        let m = &self.maxima[node];
        (0..m.ranges.len())
            .map(|i| unrank(m.ranges.max_in(i, i).expect("one value per block")))
            .collect()
    }

    /// Number of stored items: envelope blocks of both trees plus the block
    /// maxima tables.
    pub fn cells(&self) -> usize {
        self.row_tree.total_blocks()
            + self.col_tree.total_blocks()
            + self
                .maxima
                .iter()
                .map(|m| m.prefix.len() + m.ranges.cells())
                .sum::<usize>()
    }

    /// Maximum of row `row` over the columns `cols`; `None` if the row has
    /// no defined entry there.
    pub fn row_range_max(
        &self,
        row: usize,
        cols: RangeInclusive<usize>,
    ) -> Option<(M::Value, Cell)> {
        self.row_range_max_with(row, cols, &mut Work::default())
    }

    pub fn row_range_max_with(
        &self,
        row: usize,
        cols: RangeInclusive<usize>,
        work: &mut Work,
    ) -> Option<(M::Value, Cell)> {
        let span = clip(cols, self.oracle.ncols())?;
        if row >= self.oracle.nrows() {
            return None;
        }
        self.row_max_in(row, span, work)
    }

    fn row_max_in(&self, row: usize, cols: Span, work: &mut Work) -> Option<(M::Value, Cell)> {
        let mut best = None;
        for node in self.col_tree.canonical(cols, &mut work.steps) {
            let Some(block) = self
                .col_tree
                .envelope(node)
                .locate_counted(row, &mut work.steps)
            else {
                continue;
            };
            let col = block.row;
            work.evals += 1;
            let v = self
                .oracle
                .entry(row, col)
                .expect("transposed envelope row is defined");
            best = better(best, Some((v, Cell { row, col })));
        }
        best
    }

    /// Maximum over all defined entries with `row <= row_max` and
    /// `col <= col_max`.
    pub fn prefix_max(&self, row_max: usize, col_max: usize) -> Option<(M::Value, Cell)> {
        self.prefix_max_with(row_max, col_max, &mut Work::default())
    }

    pub fn prefix_max_with(
        &self,
        row_max: usize,
        col_max: usize,
        work: &mut Work,
    ) -> Option<(M::Value, Cell)> {
        if self.oracle.nrows() == 0 || self.oracle.ncols() == 0 {
            return None;
        }
        let rows = Span::new(0, row_max.min(self.oracle.nrows() - 1));
        let col_max = col_max.min(self.oracle.ncols() - 1);
        let mut best = None;
        for node in self.row_tree.canonical(rows, &mut work.steps) {
            let blocks = self.row_tree.envelope(node).blocks();
            // blocks [0, k) end at or before col_max
            let k = self
                .row_tree
                .envelope(node)
                .first_ending_at_or_after(col_max + 1, &mut work.steps);
            if k > 0 {
                best = better(best, Some(self.maxima[node].prefix[k - 1]));
            }
            if let Some(b) = blocks.get(k).filter(|b| b.start <= col_max) {
                best = better(
                    best,
                    self.row_max_in(b.row, Span::new(b.start, col_max), work),
                );
            }
        }
        best
    }

    /// Maximum over the contiguous submatrix `rows x cols`.
    pub fn submatrix_max(
        &self,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
    ) -> Option<(M::Value, Cell)> {
        self.submatrix_max_with(rows, cols, &mut Work::default())
    }

    pub fn submatrix_max_with(
        &self,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
        work: &mut Work,
    ) -> Option<(M::Value, Cell)> {
        let rows = clip(rows, self.oracle.nrows())?;
        let cols = clip(cols, self.oracle.ncols())?;
        let mut best = None;
        for node in self.row_tree.canonical(rows, &mut work.steps) {
            let env = self.row_tree.envelope(node);
            let blocks = env.blocks();
            let first = env.first_ending_at_or_after(cols.lo, &mut work.steps);
            let end = env.first_ending_at_or_after(cols.hi, &mut work.steps);
            // blocks [first, last] intersect cols
            let last = if blocks.get(end).is_some_and(|b| b.start <= cols.hi) {
                end
            } else if end == 0 {
                continue;
            } else {
                end - 1
            };
            if first > last {
                continue;
            }
            let mut full_lo = first;
            let mut full_hi = last;
            let clipped = |b: &super::Block| Span::new(b.start.max(cols.lo), b.end.min(cols.hi));
            if blocks[first].start < cols.lo || blocks[first].end > cols.hi {
                let b = &blocks[first];
                best = better(best, self.row_max_in(b.row, clipped(b), work));
                full_lo = first + 1;
            }
            if last > first && blocks[last].end > cols.hi {
                let b = &blocks[last];
                best = better(best, self.row_max_in(b.row, clipped(b), work));
                full_hi = last - 1;
            }
            if full_lo <= full_hi {
                let found = self.maxima[node]
                    .ranges
                    .max_in_counted(full_lo, full_hi, &mut work.steps)
                    .map(unrank);
                best = better(best, found);
            }
        }
        best
    }
}

fn clip(r: RangeInclusive<usize>, len: usize) -> Option<Span> {
    let (lo, hi) = (*r.start(), *r.end());
    if len == 0 || lo > hi || lo >= len {
        return None;
    }
    Some(Span::new(lo, hi.min(len - 1)))
}
