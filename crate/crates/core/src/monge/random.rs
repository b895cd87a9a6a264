//! Random inverse-Monge instances for tests, examples and fuzzing.

use rand::Rng;

use super::DenseMatrix;

/// Fully defined inverse-Monge matrix: a sum of `terms` rank-one products
/// `u[r] * v[c]` with non-negative, non-decreasing `u` and `v`, plus
/// arbitrary row and column offsets (which leave the Monge sums unchanged).
pub fn supermodular<R: Rng>(
    rng: &mut R,
    nrows: usize,
    ncols: usize,
    terms: usize,
    max_factor: i64,
) -> DenseMatrix<i64> {
    let values = supermodular_values(rng, nrows, ncols, terms, max_factor);
    let rows: Vec<Vec<i64>> = values.chunks(ncols.max(1)).map(<[i64]>::to_vec).collect();
    if nrows == 0 {
        return DenseMatrix::from_rows(&[]);
    }
    DenseMatrix::from_rows(&rows)
}

/// Inverse-Monge values restricted to a random double-staircase mask. Row
/// spans move monotonically: both endpoints non-decreasing in the row index,
/// or both non-increasing when `descending` is set.
pub fn double_staircase<R: Rng>(
    rng: &mut R,
    nrows: usize,
    ncols: usize,
    terms: usize,
    max_factor: i64,
    descending: bool,
) -> DenseMatrix<i64> {
    assert!(ncols > 0);
    let values = supermodular_values(rng, nrows, ncols, terms, max_factor);
    let mut lo: Vec<usize> = (0..nrows).map(|_| rng.gen_range(0..ncols)).collect();
    let mut hi: Vec<usize> = (0..nrows).map(|_| rng.gen_range(0..ncols)).collect();
    lo.sort_unstable();
    hi.sort_unstable();
    let mut spans: Vec<(usize, usize)> =
        lo.into_iter().zip(hi).map(|(l, h)| (l, h.max(l))).collect();
    if descending {
        spans.reverse();
    }
    let cells = (0..nrows)
        .flat_map(|r| {
            let (l, h) = spans[r];
            let values = &values;
            (0..ncols).map(move |c| (l <= c && c <= h).then(|| values[r * ncols + c]))
        })
        .collect();
    DenseMatrix::from_cells(nrows, ncols, cells)
}

fn supermodular_values<R: Rng>(
    rng: &mut R,
    nrows: usize,
    ncols: usize,
    terms: usize,
    max_factor: i64,
) -> Vec<i64> {
    let mut values = vec![0i64; nrows * ncols];
    let sorted = |rng: &mut R, len: usize| {
        let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=max_factor)).collect();
        v.sort_unstable();
        v
    };
    for _ in 0..terms {
        let u = sorted(rng, nrows);
        let v = sorted(rng, ncols);
        for r in 0..nrows {
            for c in 0..ncols {
                values[r * ncols + c] += u[r] * v[c];
            }
        }
    }
    let spread = max_factor * max_factor * terms.max(1) as i64;
    let row_off: Vec<i64> = (0..nrows)
        .map(|_| rng.gen_range(-spread..=spread))
        .collect();
    let col_off: Vec<i64> = (0..ncols)
        .map(|_| rng.gen_range(-spread..=spread))
        .collect();
    for r in 0..nrows {
        for c in 0..ncols {
            values[r * ncols + c] += row_off[r] + col_off[c];
        }
    }
    values
}
