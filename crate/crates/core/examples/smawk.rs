//! Row maxima of a totally monotone matrix with SMAWK, checked against a
//! full scan.

use emptyrect::monge::random::supermodular;
use emptyrect::monge::{smawk_row_maxima, Counted, MatrixOracle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> emptyrect::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (rows, cols) in [(8, 8), (100, 300), (1000, 1000)] {
        let m = Counted::new(supermodular(&mut rng, rows, cols, 3, 50));
        let maxima = smawk_row_maxima(&m)?;
        let evals = m.evals();
        for (r, &(c, v)) in maxima.iter().enumerate() {
            let best = (0..cols)
                .filter_map(|k| m.inner().entry(r, k))
                .max()
                .unwrap();
            assert_eq!(v, best, "row {r} col {c}");
        }
        println!(
            "{rows}x{cols}: {evals} evaluations for {} entries",
            rows * cols
        );
        if rows <= 8 {
            let cols: Vec<usize> = maxima.iter().map(|p| p.0).collect();
            println!("  argmax columns {cols:?}");
        }
    }
    Ok(())
}
