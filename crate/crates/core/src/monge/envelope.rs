//! Upper envelopes of the row functions of a partial inverse-Monge matrix.
//!
//! Each row, viewed as a function of the column, behaves like a
//! pseudo-segment: two rows cross at most once on their common domain. An
//! envelope is therefore stored by its breakpoints only, as an ordered list
//! of column blocks each attained by one row. Values are never tabulated.

use std::ops::RangeInclusive;

use super::{rank, MatrixOracle, Span};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub row: usize,
}

impl Block {
    pub fn span(&self) -> Span {
        Span::new(self.start, self.end)
    }
}

/// Compact upper envelope: ordered, non-overlapping column blocks. Gaps
/// between blocks are columns where no participating row is defined.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Envelope {
    blocks: Vec<Block>,
}

impl Envelope {
    /// Envelope of a single row: one block over its defined span.
    pub fn single<M: MatrixOracle>(oracle: &M, row: usize) -> Self {
        let blocks = oracle
            .row_span(row)
            .map(|s| Block {
                start: s.lo,
                end: s.hi,
                row,
            })
            .into_iter()
            .collect();
        Envelope { blocks }
    }

    pub fn from_blocks(blocks: Vec<Block>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0].end < w[1].start));
        Envelope { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the first block ending at or after `col`.
    pub(crate) fn first_ending_at_or_after(&self, col: usize, steps: &mut u64) -> usize {
        *steps += search_cost(self.blocks.len());
        self.blocks.partition_point(|b| b.end < col)
    }

    /// The block covering `col`, if any.
    pub fn locate(&self, col: usize) -> Option<Block> {
        self.locate_counted(col, &mut 0)
    }

    pub(crate) fn locate_counted(&self, col: usize, steps: &mut u64) -> Option<Block> {
        let i = self.first_ending_at_or_after(col, steps);
        self.blocks.get(i).filter(|b| b.start <= col).copied()
    }

    /// Row attaining the envelope at `col` and its value.
    pub fn value_at<M: MatrixOracle>(&self, oracle: &M, col: usize) -> Option<(usize, M::Value)> {
        let b = self.locate(col)?;
        Some((
            b.row,
            oracle.entry(b.row, col).expect("envelope row is defined"),
        ))
    }

    fn push(&mut self, start: usize, end: usize, row: usize) {
        if let Some(last) = self.blocks.last_mut() {
            if last.row == row && last.end + 1 == start {
                last.end = end;
                return;
            }
        }
        self.blocks.push(Block { start, end, row });
    }
}

fn search_cost(len: usize) -> u64 {
    (usize::BITS - len.leading_zeros()) as u64 + 1
}

/// Outcome of [`cross_column`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    /// First column at which the later row wins.
    At(usize),
    /// The earlier row wins on the whole interval.
    Never,
    /// The interval is empty: the two domains do not overlap.
    Disjoint,
}

/// Smallest column in `cols` where `row_b` beats `row_a` under the
/// value-then-smaller-row order.
///
/// Requires `row_a < row_b` and both rows defined on `cols`. The set of
/// columns where the later row wins is a suffix of the common domain, so a
/// binary search suffices.
pub fn cross_column<M: MatrixOracle>(
    oracle: &M,
    row_a: usize,
    row_b: usize,
    cols: RangeInclusive<usize>,
) -> Crossing {
    debug_assert!(row_a < row_b);
    let (lo, hi) = (*cols.start(), *cols.end());
    if lo > hi {
        return Crossing::Disjoint;
    }
    let b_wins = |c: usize| {
        let va = oracle
            .entry(row_a, c)
            .expect("row_a defined on the overlap");
        let vb = oracle
            .entry(row_b, c)
            .expect("row_b defined on the overlap");
        rank(vb, row_b) > rank(va, row_a)
    };
    if !b_wins(hi) {
        return Crossing::Never;
    }
    if b_wins(lo) {
        return Crossing::At(lo);
    }
    // invariant: !b_wins(l) && b_wins(h)
    let (mut l, mut h) = (lo, hi);
    while h - l > 1 {
        let mid = l + (h - l) / 2;
        if b_wins(mid) {
            h = mid;
        } else {
            l = mid;
        }
    }
    Crossing::At(h)
}

/// Upper envelope of the union of two envelopes over disjoint row sets.
///
/// Walks the common refinement of both block lists; wherever both are
/// defined, one crossing search decides the split. Adjacent blocks of the
/// same row are coalesced.
pub fn merge_envelopes<M: MatrixOracle>(oracle: &M, e1: &Envelope, e2: &Envelope) -> Envelope {
    let mut cuts: Vec<usize> = e1
        .blocks
        .iter()
        .chain(&e2.blocks)
        .flat_map(|b| [b.start, b.end + 1])
        .collect();
    cuts.sort_unstable();
    cuts.dedup();

    let mut out = Envelope::default();
    let (mut i, mut j) = (0, 0);
    for w in cuts.windows(2) {
        let (s, t) = (w[0], w[1] - 1);
        while i < e1.blocks.len() && e1.blocks[i].end < s {
            i += 1;
        }
        while j < e2.blocks.len() && e2.blocks[j].end < s {
            j += 1;
        }
        let a = e1.blocks.get(i).filter(|b| b.start <= s);
        let b = e2.blocks.get(j).filter(|b| b.start <= s);
        match (a, b) {
            (None, None) => {}
            (Some(x), None) | (None, Some(x)) => out.push(s, t, x.row),
            (Some(x), Some(y)) => {
                let (early, late) = if x.row < y.row {
                    (x.row, y.row)
                } else {
                    (y.row, x.row)
                };
                match cross_column(oracle, early, late, s..=t) {
                    Crossing::Never => out.push(s, t, early),
                    Crossing::At(c) => {
                        if c > s {
                            out.push(s, c - 1, early);
                        }
                        out.push(c, t, late);
                    }
                    Crossing::Disjoint => unreachable!("refinement pieces are non-empty"),
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Node {
    rows: Span,
    envelope: Envelope,
    children: Option<(usize, usize)>,
}

/// Balanced binary tree over the rows; every node stores the upper envelope
/// of the rows in its subtree. Built bottom-up by pairwise merging, so the
/// root envelope gives all column maxima.
#[derive(Clone, Debug, Default)]
pub struct EnvelopeTree {
    nodes: Vec<Node>,
    root: Option<usize>,
}

impl EnvelopeTree {
    pub fn build<M: MatrixOracle>(oracle: &M) -> Self {
        let mut tree = EnvelopeTree::default();
        if oracle.nrows() > 0 {
            let root = tree.build_range(oracle, 0, oracle.nrows() - 1);
            tree.root = Some(root);
        }
        tree
    }

    fn build_range<M: MatrixOracle>(&mut self, oracle: &M, lo: usize, hi: usize) -> usize {
        let (envelope, children) = if lo == hi {
            (Envelope::single(oracle, lo), None)
        } else {
            let mid = lo + (hi - lo) / 2;
            let left = self.build_range(oracle, lo, mid);
            let right = self.build_range(oracle, mid + 1, hi);
            let merged = merge_envelopes(
                oracle,
                &self.nodes[left].envelope,
                &self.nodes[right].envelope,
            );
            (merged, Some((left, right)))
        };
        self.nodes.push(Node {
            rows: Span::new(lo, hi),
            envelope,
            children,
        });
        self.nodes.len() - 1
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn envelope(&self, node: usize) -> &Envelope {
        &self.nodes[node].envelope
    }

    pub fn rows(&self, node: usize) -> Span {
        self.nodes[node].rows
    }

    pub fn children(&self, node: usize) -> Option<(usize, usize)> {
        self.nodes[node].children
    }

    pub fn root_envelope(&self) -> Option<&Envelope> {
        self.root.map(|r| &self.nodes[r].envelope)
    }

    /// Sum of block counts over all node envelopes.
    pub fn total_blocks(&self) -> usize {
        self.nodes.iter().map(|n| n.envelope.len()).sum()
    }

    /// Nodes whose row ranges partition `rows` (clipped to the tree), in
    /// increasing row order. Adds visited nodes to `steps`.
    pub fn canonical(&self, rows: Span, steps: &mut u64) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(root) = self.root {
            self.collect(root, rows, &mut out, steps);
        }
        out
    }

    fn collect(&self, node: usize, q: Span, out: &mut Vec<usize>, steps: &mut u64) {
        *steps += 1;
        let n = &self.nodes[node];
        if n.rows.intersect(&q).is_none() {
            return;
        }
        if q.lo <= n.rows.lo && n.rows.hi <= q.hi {
            out.push(node);
            return;
        }
        if let Some((l, r)) = n.children {
            self.collect(l, q, out, steps);
            self.collect(r, q, out, steps);
        }
    }
}

/// Column maxima in compact block form: the root envelope. Each block's
/// values are obtained on demand with [`Envelope::value_at`].
pub fn column_maxima(tree: &EnvelopeTree) -> Envelope {
    tree.root_envelope().cloned().unwrap_or_default()
}
