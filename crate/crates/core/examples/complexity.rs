use std::time::Instant;

use emptyrect::generate::Kind;
use emptyrect::harness::{bench_point, bench_report, BENCH_SIZES};

fn main() -> emptyrect::Result<()> {
    let kind = std::env::args()
        .nth(1)
        .map_or(Ok(Kind::Staircase), |s| s.parse())?;
    let mut points = Vec::new();
    for n in BENCH_SIZES {
        let t = Instant::now();
        let p = bench_point(kind, n, 1, 200)?;
        eprintln!(
            "n={n:5}  evals={:10}  cells={:10}  max work={:6}  ({:.2?})",
            p.entry_evals,
            p.stored_cells,
            p.max_work,
            t.elapsed()
        );
        points.push(p);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&bench_report(kind, &points)).unwrap()
    );
    Ok(())
}
