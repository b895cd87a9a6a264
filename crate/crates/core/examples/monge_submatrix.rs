//! Submatrix maxima on a partial inverse-Monge matrix, built lazily.

use emptyrect::monge::random::double_staircase;
use emptyrect::monge::{Counted, MatrixOracle, SubmatrixMax};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for side in [64usize, 256, 1024] {
        let m = Counted::new(double_staircase(&mut rng, side, side, 3, 40, false));
        let s = SubmatrixMax::build(&m);
        let built = m.evals();
        let defined: usize = (0..side)
            .filter_map(|r| m.row_span(r))
            .map(|sp| sp.len())
            .sum();
        m.reset();

        let (r0, r1, c0, c1) = (side / 8, side / 2, side / 4, 3 * side / 4);
        let best = s.submatrix_max(r0..=r1, c0..=c1);
        let prefix = s.prefix_max(side - 1, side / 3);
        let row = s.row_range_max(side / 2, 0..=side - 1);
        println!(
            "{side}x{side}: {defined} of {} entries defined, {built} evaluations to build, {} cells stored",
            side * side,
            s.cells()
        );
        println!("  rows {r0}..={r1} cols {c0}..={c1}: {best:?}");
        println!("  prefix up to col {}: {prefix:?}", side / 3);
        println!("  row {}: {row:?}", side / 2);
        println!("  three queries evaluated {} entries", m.evals());
    }
}
