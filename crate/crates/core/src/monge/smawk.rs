use super::MatrixOracle;
use crate::error::{Error, Result};

/// Row maxima of a fully defined totally monotone matrix in `O(m + n)`
/// entry evaluations. Returns, per row, the leftmost column attaining the
/// maximum together with its value.
///
/// Total monotonicity is the caller's responsibility; a violating matrix
/// gives unspecified (but in-range) columns. An undefined entry is an error.
pub fn smawk_row_maxima<M: MatrixOracle>(m: &M) -> Result<Vec<(usize, M::Value)>> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let rows: Vec<usize> = (0..m.nrows()).collect();
    let cols: Vec<usize> = (0..m.ncols()).collect();
    let mut argmax = vec![0; m.nrows()];
    solve(m, &rows, &cols, &mut argmax)?;
    argmax
        .into_iter()
        .enumerate()
        .map(|(r, c)| Ok((c, get(m, r, c)?)))
        .collect()
}

fn get<M: MatrixOracle>(m: &M, row: usize, col: usize) -> Result<M::Value> {
    m.entry(row, col).ok_or(Error::UndefinedEntry { row, col })
}

fn solve<M: MatrixOracle>(
    m: &M,
    rows: &[usize],
    cols: &[usize],
    argmax: &mut [usize],
) -> Result<()> {
    if rows.is_empty() {
        return Ok(());
    }

    // REDUCE: keep at most |rows| columns that can still hold a leftmost
    // maximum.
    let mut kept: Vec<usize> = Vec::with_capacity(rows.len());
    for &c in cols {
        while let Some(&top) = kept.last() {
            let r = rows[kept.len() - 1];
            if get(m, r, top)? < get(m, r, c)? {
                kept.pop();
            } else {
                break;
            }
        }
        if kept.len() < rows.len() {
            kept.push(c);
        }
    }

    let odd: Vec<usize> = rows.iter().skip(1).step_by(2).copied().collect();
    solve(m, &odd, &kept, argmax)?;

    // INTERPOLATE: even rows search between their odd neighbours' answers.
    let mut start = 0;
    for i in (0..rows.len()).step_by(2) {
        let r = rows[i];
        let stop = match rows.get(i + 1) {
            Some(&next) => kept
                .binary_search(&argmax[next])
                .expect("odd-row answer comes from the reduced columns"),
            None => kept.len() - 1,
        };
        let mut best = kept[start];
        let mut best_val = get(m, r, best)?;
        for &c in &kept[start + 1..=stop] {
            let v = get(m, r, c)?;
            if v > best_val {
                best = c;
                best_val = v;
            }
        }
        argmax[r] = best;
        start = stop;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monge::random::supermodular;
    use crate::monge::{Counted, DenseMatrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute<M: MatrixOracle>(m: &M) -> Vec<(usize, M::Value)> {
        (0..m.nrows())
            .map(|r| {
                let mut best = (0, m.entry(r, 0).unwrap());
                for c in 1..m.ncols() {
                    let v = m.entry(r, c).unwrap();
                    if v > best.1 {
                        best = (c, v);
                    }
                }
                best
            })
            .collect()
    }

    #[test]
    fn product_matrix() {
        let rows: Vec<Vec<i64>> = (1..=3).map(|r| (1..=3).map(|c| r * c).collect()).collect();
        let m = DenseMatrix::from_rows(&rows);
        assert_eq!(smawk_row_maxima(&m).unwrap(), vec![(2, 3), (2, 6), (2, 9)]);
    }

    #[test]
    fn two_by_two() {
        let m = DenseMatrix::from_rows(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(smawk_row_maxima(&m).unwrap(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn empty_is_error() {
        let m: DenseMatrix<i64> = DenseMatrix::from_rows(&[]);
        assert_eq!(smawk_row_maxima(&m).unwrap_err(), Error::EmptyMatrix);
    }

    #[test]
    fn undefined_entry_is_error() {
        let m = DenseMatrix::from_cells(2, 2, vec![Some(1), Some(2), Some(3), None]);
        assert!(matches!(
            smawk_row_maxima(&m),
            Err(Error::UndefinedEntry { .. })
        ));
    }

    #[test]
    fn random_supermodular_matches_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let m = supermodular(&mut rng, 50, 80, 3, 20);
            assert_eq!(smawk_row_maxima(&m).unwrap(), brute(&m));
        }
    }

    #[test]
    fn linear_evaluations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = Counted::new(supermodular(&mut rng, 200, 200, 3, 50));
        smawk_row_maxima(&m).unwrap();
        // A few passes over rows plus columns, nowhere near 200 * 200.
        assert!(m.evals() < 20 * 400, "evals = {}", m.evals());
    }
}
