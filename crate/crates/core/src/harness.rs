//! Verification, benchmarking and fuzzing drivers with JSON reports.
//!
//! Reports are `serde_json::Value`s; their maps are ordered by key, so the
//! serialized form is stable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::engine::{Answer, Index};
use crate::error::Result;
use crate::generate::{generate, Kind};
use crate::geometry::{PointSet, Rect};
use crate::monge::random::double_staircase;
use crate::monge::{smawk_row_maxima, MatrixOracle, SubmatrixMax};
use crate::oracle::Oracle;

/// Uniform query points in the closed bounds.
pub fn random_queries(bounds: Rect, count: usize, seed: u64) -> Vec<(i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                rng.gen_range(bounds.x_lo..=bounds.x_hi),
                rng.gen_range(bounds.y_lo..=bounds.y_hi),
            )
        })
        .collect()
}

fn rect_json(r: &Rect) -> Value {
    json!([r.x_lo, r.y_lo, r.x_hi, r.y_hi])
}

fn build_json(idx: &Index) -> Value {
    let s = idx.stats();
    json!({
        "entry_evals": s.entry_evals,
        "nodes": s.nodes,
        "stored_cells": s.stored_cells,
    })
}

fn answer_json(x: i64, y: i64, a: &Answer) -> Value {
    json!({
        "x": x,
        "y": y,
        "rect": rect_json(&a.rect),
        "area": a.rect.area(),
        "provenance": a.provenance.as_str(),
        "work_units": a.work.units(),
    })
}

/// `{"n", "build"}` for a preprocessed index.
pub fn build_report(idx: &Index) -> Value {
    json!({ "n": idx.len(), "build": build_json(idx) })
}

/// `{"n", "build", "queries"}`, answering every query.
pub fn query_report(idx: &Index, queries: &[(i64, i64)]) -> Result<Value> {
    let answers = queries
        .iter()
        .map(|&(x, y)| idx.query(x, y).map(|a| answer_json(x, y, &a)))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "n": idx.len(), "build": build_json(idx), "queries": answers }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree {
        queries: usize,
    },
    Mismatch {
        x: i64,
        y: i64,
        got: Rect,
        want: Rect,
    },
}

/// Compares every query answer with the brute-force oracle. Refuses inputs
/// over `cap` points.
pub fn verify(ps: &PointSet, queries: &[(i64, i64)], cap: usize) -> Result<Verdict> {
    let oracle = Oracle::with_cap(ps, cap)?;
    let idx = Index::preprocess(ps);
    for &(x, y) in queries {
        let got = idx.query(x, y)?.rect;
        let want = oracle.largest_containing(x, y)?;
        if got != want {
            return Ok(Verdict::Mismatch { x, y, got, want });
        }
    }
    Ok(Verdict::Agree {
        queries: queries.len(),
    })
}

pub fn verdict_report(v: &Verdict) -> Value {
    match v {
        Verdict::Agree { queries } => json!({ "ok": true, "queries": queries }),
        Verdict::Mismatch { x, y, got, want } => json!({
            "ok": false,
            "counterexample": {
                "x": x,
                "y": y,
                "got": rect_json(got),
                "want": rect_json(want),
            },
        }),
    }
}

pub const BENCH_SIZES: [usize; 5] = [256, 512, 1024, 2048, 4096];

/// Counters of one benchmark size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub entry_evals: u64,
    pub stored_cells: usize,
    pub nodes: usize,
    pub max_work: u64,
    pub mean_work: f64,
}

pub fn bench_point(kind: Kind, n: usize, seed: u64, queries: usize) -> Result<BenchPoint> {
    let bounds = Rect::new(0, 0, 1 << 20, 1 << 20)?;
    let ps = generate(kind, n, seed, bounds)?;
    let idx = Index::preprocess(&ps);
    let works = random_queries(bounds, queries, seed)
        .into_iter()
        .map(|(x, y)| idx.query(x, y).map(|a| a.work.units()))
        .collect::<Result<Vec<u64>>>()?;
    let s = idx.stats();
    Ok(BenchPoint {
        n,
        entry_evals: s.entry_evals,
        stored_cells: s.stored_cells,
        nodes: s.nodes,
        max_work: works.iter().copied().max().unwrap_or(0),
        mean_work: works.iter().sum::<u64>() as f64 / works.len().max(1) as f64,
    })
}

pub fn bench(kind: Kind, sizes: &[usize], seed: u64, queries: usize) -> Result<Vec<BenchPoint>> {
    sizes
        .iter()
        .map(|&n| bench_point(kind, n, seed, queries))
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

pub fn bench_report(kind: Kind, points: &[BenchPoint]) -> Value {
    let slope = |f: fn(&BenchPoint) -> f64| {
        loglog_slope(
            &points
                .iter()
                .map(|p| (p.n as f64, f(p)))
                .collect::<Vec<_>>(),
        )
    };
    json!({
        "kind": kind.to_string(),
        "sizes": points.iter().map(|p| json!({
            "n": p.n,
            "entry_evals": p.entry_evals,
            "stored_cells": p.stored_cells,
            "nodes": p.nodes,
            "max_work_units": p.max_work,
            "mean_work_units": p.mean_work,
        })).collect::<Vec<_>>(),
        "slopes": {
            "entry_evals": slope(|p| p.entry_evals as f64),
            "stored_cells": slope(|p| p.stored_cells as f64),
            "max_work_units": slope(|p| p.max_work as f64),
        },
    })
}

/// Outcome of randomized Monge-toolkit checks against exhaustive scans.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: usize,
    pub probes: usize,
    pub failures: Vec<String>,
}

/// SMAWK on fully defined matrices and the submatrix queries on
/// double-staircase matrices, each compared with a scan.
pub fn monge_fuzz(seed: u64, trials: usize, max_dim: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FuzzReport {
        trials,
        ..FuzzReport::default()
    };
    for t in 0..trials {
        let (rows, cols) = (rng.gen_range(1..=max_dim), rng.gen_range(1..=max_dim));
        let full = crate::monge::random::supermodular(&mut rng, rows, cols, 3, 30);
        let want: Vec<(usize, i64)> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| (c, full.entry(r, c).unwrap()))
                    .fold((0, i64::MIN), |a, b| if b.1 > a.1 { b } else { a })
            })
            .collect();
        if smawk_row_maxima(&full).ok() != Some(want) {
            report
                .failures
                .push(format!("trial {t}: smawk row maxima differ"));
        }

        let descending = rng.gen();
        let m = double_staircase(&mut rng, rows, cols, 3, 30, descending);
        let s = SubmatrixMax::build(&m);
        let m = &m;
        let scan = |r0: usize, r1: usize, c0: usize, c1: usize| {
            (r0..=r1)
                .flat_map(|r| (c0..=c1).filter_map(move |c| m.entry(r, c)))
                .max()
        };
        for _ in 0..4 {
            let (r0, r1) = sorted_pair(&mut rng, rows);
            let (c0, c1) = sorted_pair(&mut rng, cols);
            report.probes += 3;
            let checks = [
                (
                    "row_range_max",
                    s.row_range_max(r0, c0..=c1).map(|f| f.0),
                    scan(r0, r0, c0, c1),
                ),
                (
                    "prefix_max",
                    s.prefix_max(r1, c1).map(|f| f.0),
                    scan(0, r1, 0, c1),
                ),
                (
                    "submatrix_max",
                    s.submatrix_max(r0..=r1, c0..=c1).map(|f| f.0),
                    scan(r0, r1, c0, c1),
                ),
            ];
            for (name, got, want) in checks {
                if got != want {
                    report.failures.push(format!(
                        "trial {t}: {name} rows {r0}..={r1} cols {c0}..={c1}: {got:?} != {want:?}"
                    ));
                }
            }
        }
    }
    report
}

fn sorted_pair(rng: &mut impl Rng, len: usize) -> (usize, usize) {
    let (a, b) = (rng.gen_range(0..len), rng.gen_range(0..len));
    (a.min(b), a.max(b))
}

pub fn fuzz_report(r: &FuzzReport) -> Value {
    json!({
        "ok": r.failures.is_empty(),
        "trials": r.trials,
        "probes": r.probes,
        "failures": r.failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [2.0f64, 4.0, 8.0, 16.0]
            .iter()
            .map(|&x| (x, 3.0 * x * x))
            .collect();
        assert!((loglog_slope(&pts) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn query_report_schema() {
        let ps = PointSet::new(&[(4, 3)], Rect::new(0, 0, 10, 10).unwrap()).unwrap();
        let idx = Index::preprocess(&ps);
        let v = query_report(&idx, &[(2, 5)]).unwrap();
        assert_eq!(v["n"], 1);
        assert_eq!(v["queries"][0]["rect"], json!([0, 3, 10, 10]));
        assert_eq!(v["queries"][0]["area"], 70);
        assert_eq!(v["queries"][0]["provenance"], "anchored-i");
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with(r#"{"build":{"entry_evals":0,"nodes":0,"stored_cells":"#));
    }

    #[test]
    fn verify_agrees_and_refuses() {
        let b = Rect::new(0, 0, 4096, 4096).unwrap();
        let ps = generate(Kind::Uniform, 48, 7, b).unwrap();
        let v = verify(&ps, &random_queries(b, 100, 7), 256).unwrap();
        assert_eq!(v, Verdict::Agree { queries: 100 });
        assert!(verify(&ps, &[], 10).is_err());
    }

    #[test]
    fn fuzz_is_clean() {
        let r = monge_fuzz(1, 30, 24);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
    }
}
