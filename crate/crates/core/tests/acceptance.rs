//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the PASS/FAIL lines always reach the output; exits non-zero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use emptyrect::anchored::compute_anchored;
use emptyrect::generate::{generate, Kind};
use emptyrect::harness::{bench_point, loglog_slope, random_queries, BenchPoint, BENCH_SIZES};
use emptyrect::monge::random::{double_staircase, supermodular};
use emptyrect::monge::{
    cross_column, smawk_row_maxima, Counted, Crossing, DenseMatrix, EnvelopeTree, MatrixOracle,
    SubmatrixMax,
};
use emptyrect::oracle::{enumerate_maximal_empty, Oracle};
use emptyrect::{Index, PointSet, Rect};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Tolerances and sizes.
const C1_INSTANCES: u64 = 200;
const C1_QUERIES: usize = 100;
const C2_RATIO: (f64, f64) = (3.0, 5.5);
const C3_MAX_SLOPE: f64 = 1.35;
const C3_HEADROOM: f64 = 1.5;
const C4_HEADROOM: f64 = 1.0;
const C5_QUADRUPLES: usize = 10_000;
const C5_ROW_PAIRS: usize = 1_000;
const C5_PROBES: usize = 500;
const C5_MAX_EVAL_FRACTION: f64 = 0.15;
const C6_MAX_PER_POINT: usize = 12;
const C7_MATRICES: usize = 1_000;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn square(side: i64) -> Rect {
    Rect::new(0, 0, side, side).unwrap()
}

fn oracle_equality(ps: &PointSet, queries: &[(i64, i64)]) -> Result<(), String> {
    let idx = Index::preprocess(ps);
    let oracle = Oracle::new(ps).map_err(|e| e.to_string())?;
    for &(x, y) in queries {
        let got = idx.query(x, y).map_err(|e| e.to_string())?.rect;
        let want = oracle.largest_containing(x, y).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!(
                "n={} q=({x},{y}): got {got}, oracle {want}",
                ps.len()
            ));
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for seed in 0..C1_INSTANCES {
        let n = rng.gen_range(1..=64);
        let ps = generate(Kind::Uniform, n, seed, square(4096)).map_err(|e| e.to_string())?;
        oracle_equality(&ps, &random_queries(ps.bounds(), C1_QUERIES, seed))?;
    }
    Ok(format!(
        "{C1_INSTANCES} instances x {C1_QUERIES} queries, 0 mismatches"
    ))
}

fn criterion_2() -> Outcome {
    let count = |k: usize| -> Result<usize, String> {
        let ps = generate(Kind::Staircase, 2 * k, 0, square(4096)).map_err(|e| e.to_string())?;
        Ok(enumerate_maximal_empty(&ps)
            .map_err(|e| e.to_string())?
            .len())
    };
    let mut ratios = Vec::new();
    for (k, k2) in [(8, 16), (12, 24)] {
        let (a, b) = (count(k)?, count(k2)?);
        let ratio = b as f64 / a as f64;
        if !(C2_RATIO.0..=C2_RATIO.1).contains(&ratio) {
            return Err(format!("count ratio k={k}->{k2}: {b}/{a} = {ratio:.3}"));
        }
        ratios.push(format!("k={k}->{k2}: {b}/{a} = {ratio:.3}"));
    }
    for k in [8, 16, 24] {
        let ps = generate(Kind::Staircase, 2 * k, 0, square(4096)).map_err(|e| e.to_string())?;
        oracle_equality(&ps, &random_queries(ps.bounds(), 100, k as u64))?;
    }
    Ok(format!(
        "{}; queries match for k in {{8,16,24}}",
        ratios.join(", ")
    ))
}

fn log2(n: usize) -> f64 {
    (n as f64).log2()
}

fn staircase_bench() -> Result<Vec<BenchPoint>, String> {
    BENCH_SIZES
        .iter()
        .map(|&n| bench_point(Kind::Staircase, n, 0, 200).map_err(|e| e.to_string()))
        .collect()
}

fn criterion_3(points: &[BenchPoint]) -> Outcome {
    let slope = loglog_slope(
        &points
            .iter()
            .map(|p| (p.n as f64, p.entry_evals as f64))
            .collect::<Vec<_>>(),
    );
    let first = &points[0];
    let c = first.stored_cells as f64 / (first.n as f64 * log2(first.n).powi(3)) * C3_HEADROOM;
    for p in points {
        let bound = c * p.n as f64 * log2(p.n).powi(3);
        if p.stored_cells as f64 > bound {
            return Err(format!(
                "n={}: stored cells {} > {bound:.0}",
                p.n, p.stored_cells
            ));
        }
    }
    if slope > C3_MAX_SLOPE {
        return Err(format!(
            "entry-evaluation slope {slope:.3} > {C3_MAX_SLOPE}"
        ));
    }
    Ok(format!(
        "entry-evaluation slope {slope:.3} <= {C3_MAX_SLOPE}; stored cells within {c:.4} n log^3 n"
    ))
}

fn criterion_4(points: &[BenchPoint]) -> Outcome {
    let first = &points[0];
    let last = points.last().unwrap();
    let c = first.max_work as f64 / log2(first.n).powi(5) * C4_HEADROOM;
    let bound = c * log2(last.n).powi(5);
    if last.max_work as f64 > bound {
        return Err(format!(
            "n={}: max work {} > {bound:.0}",
            last.n, last.max_work
        ));
    }
    Ok(format!(
        "max work {} at n={} vs {bound:.0} = {c:.5} log^5 n (calibrated at n={})",
        last.max_work, last.n, first.n
    ))
}

fn random_staircase(rng: &mut ChaCha8Rng) -> DenseMatrix<i64> {
    let (rows, cols) = (rng.gen_range(2..=256), rng.gen_range(2..=256));
    let descending = rng.gen();
    double_staircase(rng, rows, cols, 3, 40, descending)
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    // (a) inverse Monge on defined quadruples
    let mut checked = 0;
    while checked < C5_QUADRUPLES {
        let m = random_staircase(&mut rng);
        for _ in 0..100 {
            let i = rng.gen_range(0..m.nrows() - 1);
            let j = rng.gen_range(i + 1..m.nrows());
            let Some(common) = m
                .row_span(i)
                .and_then(|a| m.row_span(j).and_then(|b| a.intersect(&b)))
            else {
                continue;
            };
            if common.len() < 2 {
                continue;
            }
            let k = rng.gen_range(common.lo..common.hi);
            let l = rng.gen_range(k + 1..=common.hi);
            let e = |r, c| m.entry(r, c).unwrap();
            if e(i, k) + e(j, l) < e(i, l) + e(j, k) {
                return Err(format!(
                    "(a) quadruple rows {i},{j} cols {k},{l} violates the inequality"
                ));
            }
            checked += 1;
        }
    }

    // (b) single crossing of row pairs
    let mut pairs = 0;
    while pairs < C5_ROW_PAIRS {
        let m = random_staircase(&mut rng);
        let i = rng.gen_range(0..m.nrows() - 1);
        let j = rng.gen_range(i + 1..m.nrows());
        let Some(common) = m
            .row_span(i)
            .and_then(|a| m.row_span(j).and_then(|b| a.intersect(&b)))
        else {
            continue;
        };
        let wins: Vec<bool> = (common.lo..=common.hi)
            .map(|c| m.entry(j, c).unwrap() > m.entry(i, c).unwrap())
            .collect();
        let first = wins.iter().position(|&w| w);
        if let Some(f) = first {
            if !wins[f..].iter().all(|&w| w) {
                return Err(format!("(b) rows {i},{j} cross more than once"));
            }
        }
        let want = first.map_or(Crossing::Never, |f| Crossing::At(common.lo + f));
        if cross_column(&m, i, j, common.lo..=common.hi) != want {
            return Err(format!(
                "(b) rows {i},{j}: crossing search disagrees with the scan"
            ));
        }
        pairs += 1;
    }

    // (c) submatrix queries against scans
    let mut probes = [0usize; 3];
    while probes.iter().any(|&p| p < C5_PROBES) {
        let m = random_staircase(&mut rng);
        let s = SubmatrixMax::build(&m);
        let m = &m;
        let scan = |r0: usize, r1: usize, c0: usize, c1: usize| {
            (r0..=r1)
                .flat_map(|r| (c0..=c1).filter_map(move |c| m.entry(r, c)))
                .max()
        };
        for _ in 0..25 {
            let pair = |rng: &mut ChaCha8Rng, len: usize| {
                let (a, b) = (rng.gen_range(0..len), rng.gen_range(0..len));
                (a.min(b), a.max(b))
            };
            let (r0, r1) = pair(&mut rng, m.nrows());
            let (c0, c1) = pair(&mut rng, m.ncols());
            let results = [
                (
                    s.row_range_max(r0, c0..=c1).map(|f| f.0),
                    scan(r0, r0, c0, c1),
                ),
                (s.prefix_max(r1, c1).map(|f| f.0), scan(0, r1, 0, c1)),
                (
                    s.submatrix_max(r0..=r1, c0..=c1).map(|f| f.0),
                    scan(r0, r1, c0, c1),
                ),
            ];
            for (k, (got, want)) in results.into_iter().enumerate() {
                if got != want {
                    return Err(format!(
                        "(c) query {k} rows {r0}..={r1} cols {c0}..={c1}: {got:?} != {want:?}"
                    ));
                }
                probes[k] += 1;
            }
        }
    }

    // (d) lazy envelope-tree construction
    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let descending = rng.gen();
        let m = Counted::new(double_staircase(&mut rng, 256, 256, 3, 40, descending));
        EnvelopeTree::build(&m);
        worst = worst.max(m.evals() as f64 / (256.0 * 256.0));
    }
    if worst >= C5_MAX_EVAL_FRACTION {
        return Err(format!(
            "(d) envelope tree evaluated {:.1}% of entries",
            100.0 * worst
        ));
    }
    Ok(format!(
        "(a) {checked} quadruples (b) {pairs} row pairs (c) {probes:?} probes (d) worst {:.1}% of entries evaluated",
        100.0 * worst
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut compared = 0;
    for n in [64usize, 256, 1024] {
        for seed in 0..20 {
            let ps =
                generate(Kind::Uniform, n, seed, square(1 << 16)).map_err(|e| e.to_string())?;
            let got = compute_anchored(&ps);
            if got.len() > C6_MAX_PER_POINT * n + 4 {
                return Err(format!("n={n}: {} anchored rectangles", got.len()));
            }
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(0..=64);
        let ps = generate(Kind::Uniform, n, rng.gen(), square(4096)).map_err(|e| e.to_string())?;
        let b = ps.bounds();
        let mut got: Vec<Rect> = compute_anchored(&ps).into_iter().map(|t| t.rect).collect();
        got.sort();
        let want: Vec<Rect> = enumerate_maximal_empty(&ps)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|r| r.sides_on(&b) > 0)
            .collect();
        if got != want {
            return Err(format!(
                "n={n}: anchored set differs from the oracle subset"
            ));
        }
        compared += 1;
    }
    Ok(format!(
        "size <= 12n+4 at n in {{64,256,1024}}; {compared} exact matches for n <= 64"
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..C7_MATRICES {
        let (rows, cols) = (rng.gen_range(1..=64), rng.gen_range(1..=96));
        let m = supermodular(&mut rng, rows, cols, 3, 30);
        let want: Vec<(usize, i64)> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| (c, m.entry(r, c).unwrap()))
                    .fold((0, i64::MIN), |a, b| if b.1 > a.1 { b } else { a })
            })
            .collect();
        let got = smawk_row_maxima(&m).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("matrix {t} ({rows}x{cols}): row maxima differ"));
        }
    }
    Ok(format!(
        "{C7_MATRICES} matrices up to 64x96 match brute force"
    ))
}

fn main() -> ExitCode {
    // `cargo test` passes libtest flags; a name filter that excludes this
    // target's name skips the suite.
    let args: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return ExitCode::SUCCESS;
    }

    let bench = staircase_bench();
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(criterion_1)),
        ("adversarial staircase", Box::new(criterion_2)),
        (
            "sub-quadratic preprocessing",
            Box::new(|| criterion_3(bench.as_ref().map_err(Clone::clone)?)),
        ),
        (
            "query work",
            Box::new(|| criterion_4(bench.as_ref().map_err(Clone::clone)?)),
        ),
        ("monge toolkit", Box::new(criterion_5)),
        ("anchored linearity", Box::new(criterion_6)),
        ("smawk", Box::new(criterion_7)),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
