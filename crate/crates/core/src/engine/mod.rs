//! Preprocessing and queries: the largest maximal empty rectangle containing
//! a query point.
//!
//! Rectangles touching the bounding box and the bounded rectangles found by
//! the per-cell sweeps go into one [`StabIndex`]. The remaining bounded
//! rectangles, quadratically many in the worst case, are kept implicitly as
//! Monge matrices at the range-tree cells and searched at query time along
//! the query's search paths.

mod diagonal;
mod range_tree;
mod subproblem;

use crate::anchored::compute_anchored;
use crate::error::{Error, Result};
use crate::geometry::{Flip, PointSet, Provenance, Rect, TaggedRect};
use crate::monge::Work;
use crate::stab::StabIndex;

use diagonal::DiagonalStructure;
use range_tree::RangeTree;
use subproblem::{case_halfplane, case_one_per_quadrant, Defining};

const MIRROR: Flip = Flip::new(false, true, false);

/// Build counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    /// Secondary range-tree cells with an origin.
    pub nodes: usize,
    /// Total points over all cells.
    pub cell_points: usize,
    /// Stored items: stab-index slots, envelope blocks, block maxima and
    /// range-maximum cells.
    pub stored_cells: usize,
    /// Matrix entries evaluated while building the Monge structures.
    pub entry_evals: u64,
    /// Rectangles held explicitly by the stab index.
    pub explicit_rects: usize,
}

/// A query answer with its origin and the work it took.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Answer {
    pub rect: Rect,
    pub provenance: Provenance,
    pub work: Work,
}

struct CellData {
    halfplane: Vec<Rect>,
    one_per_quadrant: Vec<Rect>,
    diagonal: [Option<DiagonalStructure>; 2],
}

/// Read-only view of one range-tree cell, for inspection and tests.
pub struct CellView<'a> {
    index: &'a Index,
    id: usize,
}

impl CellView<'_> {
    pub fn id(&self) -> usize {
        self.id
    }

    /// The origin, in doubled coordinates.
    pub fn origin_doubled(&self) -> (i64, i64) {
        self.index.tree.cells[self.id].origin
    }

    /// The cell box `[x_lo, y_lo, x_hi, y_hi]`, in doubled coordinates.
    pub fn bbox_doubled(&self) -> [i64; 4] {
        self.index.tree.cells[self.id].bbox
    }

    pub fn point_ids(&self) -> &[usize] {
        &self.index.tree.cells[self.id].points
    }

    pub fn halfplane_rects(&self) -> &[Rect] {
        &self.index.data[self.id].halfplane
    }

    pub fn one_per_quadrant_rects(&self) -> &[Rect] {
        &self.index.data[self.id].one_per_quadrant
    }

    /// Matrix dimensions of the two orientations (`(0, 0)` when absent).
    pub fn matrix_shapes(&self) -> [(usize, usize); 2] {
        self.index.data[self.id].diagonal.each_ref().map(|d| {
            d.as_ref().map_or((0, 0), |d| {
                use crate::monge::MatrixOracle;
                (d.matrix().nrows(), d.matrix().ncols())
            })
        })
    }

    /// Every defined matrix entry of both orientations.
    pub fn diagonal_rects(&self) -> Vec<Rect> {
        self.index.data[self.id]
            .diagonal
            .iter()
            .flatten()
            .flat_map(DiagonalStructure::entries)
            .collect()
    }

    /// The two matrices as row-major grids of defined entries.
    pub fn diagonal_matrices(&self) -> Vec<Vec<Vec<Option<Rect>>>> {
        use crate::monge::MatrixOracle;
        self.index.data[self.id]
            .diagonal
            .iter()
            .flatten()
            .map(|d| {
                let m = d.matrix();
                (0..m.nrows())
                    .map(|j| (0..m.ncols()).map(|i| m.entry(j, i)).collect())
                    .collect()
            })
            .collect()
    }

    /// Largest matrix-backed rectangle of this cell containing `(x, y)`.
    pub fn query(&self, x: i64, y: i64) -> Result<Option<Rect>> {
        let [x_lo, y_lo, x_hi, y_hi] = self.bbox_doubled();
        if !(x_lo <= 2 * x && 2 * x <= x_hi && y_lo <= 2 * y && 2 * y <= y_hi) {
            return Err(Error::QueryOutside { x, y });
        }
        Ok(self
            .index
            .query_cell(self.id, (2 * x, 2 * y), &mut Work::default()))
    }
}

/// The preprocessed point set.
pub struct Index {
    bounds: Rect,
    n: usize,
    stab: StabIndex,
    tree: RangeTree,
    data: Vec<CellData>,
    stats: BuildStats,
}

impl Index {
    pub fn preprocess(ps: &PointSet) -> Self {
        let tree = RangeTree::build(ps);
        let global = ps.coords();
        let mut explicit = compute_anchored(ps);
        let mut stats = BuildStats {
            nodes: tree.cells.len(),
            ..BuildStats::default()
        };

        let data: Vec<CellData> = tree
            .cells
            .iter()
            .map(|cell| {
                stats.cell_points += cell.points.len();
                let (ox, oy) = cell.origin;
                let local: Vec<(i64, i64)> = cell
                    .points
                    .iter()
                    .map(|&i| (2 * global[i].0 - ox, 2 * global[i].1 - oy))
                    .collect();
                let cell_global: Vec<(i64, i64)> = cell.points.iter().map(|&i| global[i]).collect();
                let to_rect = |d: Defining| Rect::bbox(d.iter().map(|&k| ps.point(cell.points[k])));
                let mut halfplane: Vec<Rect> =
                    case_halfplane(&local).into_iter().map(to_rect).collect();
                halfplane.sort_unstable();
                halfplane.dedup();
                let mut one_per_quadrant: Vec<Rect> = case_one_per_quadrant(&local)
                    .into_iter()
                    .map(to_rect)
                    .collect();
                one_per_quadrant.sort_unstable();
                explicit.extend(halfplane.iter().map(|&rect| TaggedRect {
                    rect,
                    provenance: Provenance::HalfPlane,
                }));
                explicit.extend(one_per_quadrant.iter().map(|&rect| TaggedRect {
                    rect,
                    provenance: Provenance::OnePerQuadrant,
                }));
                let diagonal = [Flip::IDENTITY, MIRROR]
                    .map(|flip| DiagonalStructure::build(&local, &cell_global, flip));
                for d in diagonal.iter().flatten() {
                    stats.entry_evals += d.entry_evals();
                    stats.stored_cells += d.cells();
                }
                CellData {
                    halfplane,
                    one_per_quadrant,
                    diagonal,
                }
            })
            .collect();

        explicit.sort_unstable_by_key(|t| (t.rect, t.provenance));
        explicit.dedup_by_key(|t| t.rect);
        stats.explicit_rects = explicit.len();
        let stab = StabIndex::build(explicit);
        stats.stored_cells += stab.cells();
        Index {
            bounds: ps.bounds(),
            n: ps.len(),
            stab,
            tree,
            data,
            stats,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bounds(&self) -> Rect {
        self.bounds
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Rectangles held explicitly: anchored ones and the per-cell sweeps.
    pub fn explicit_rects(&self) -> &[TaggedRect] {
        self.stab.rects()
    }

    pub fn cells(&self) -> impl Iterator<Item = CellView<'_>> {
        (0..self.data.len()).map(move |id| CellView { index: self, id })
    }

    pub fn cell(&self, id: usize) -> CellView<'_> {
        CellView { index: self, id }
    }

    /// The cell a bounded rectangle belongs to: the highest one whose origin
    /// lies inside it.
    pub fn home_cell(&self, r: &Rect) -> Option<usize> {
        self.tree
            .home([2 * r.x_lo, 2 * r.y_lo, 2 * r.x_hi, 2 * r.y_hi])
    }

    /// Largest maximal empty rectangle containing `(x, y)` (boundary
    /// included), largest by area with ties broken by coordinates.
    pub fn query(&self, x: i64, y: i64) -> Result<Answer> {
        if !self.bounds.contains(x, y) {
            return Err(Error::QueryOutside { x, y });
        }
        let mut work = Work::default();
        let stabbed = self
            .stab
            .stab_max_area_counted(x, y, &mut work.steps)
            .expect("maximal empty rectangles cover the bounding box");
        let (mut rect, mut provenance) = (stabbed.rect, stabbed.provenance);
        let mut visited = Vec::new();
        self.tree.search((2 * x, 2 * y), |c| visited.push(c));
        for c in visited {
            work.steps += 1;
            if let Some(r) = self.query_cell(c, (2 * x, 2 * y), &mut work) {
                if r > rect {
                    rect = r;
                    provenance = Provenance::Diagonal;
                }
            }
        }
        Ok(Answer {
            rect,
            provenance,
            work,
        })
    }

    fn query_cell(&self, c: usize, q2: (i64, i64), work: &mut Work) -> Option<Rect> {
        let (ox, oy) = self.tree.cells[c].origin;
        let local = (q2.0 - ox, q2.1 - oy);
        self.data[c]
            .diagonal
            .iter()
            .flatten()
            .filter_map(|d| d.query(local, work))
            .max()
    }
}
