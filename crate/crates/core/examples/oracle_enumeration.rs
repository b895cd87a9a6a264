//! Brute-force reference: list every maximal empty rectangle of a small
//! set and compare the indexed answer with the oracle on a grid of queries.

use emptyrect::generate::{generate, Kind};
use emptyrect::oracle::{enumerate_maximal_empty, Oracle};
use emptyrect::{Index, Rect};

fn main() -> emptyrect::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let bounds = Rect::new(0, 0, 64, 64)?;
    let ps = generate(Kind::Uniform, n, 3, bounds)?;

    let all = enumerate_maximal_empty(&ps)?;
    println!(
        "{} points, {} maximal empty rectangles",
        ps.len(),
        all.len()
    );
    for r in all.iter().rev().take(5) {
        println!(
            "  {r}  area {}  sides on bounds {}",
            r.area(),
            r.sides_on(&bounds)
        );
    }

    let idx = Index::preprocess(&ps);
    let oracle = Oracle::new(&ps)?;
    let mut checked = 0;
    for x in (0..=64).step_by(4) {
        for y in (0..=64).step_by(4) {
            let got = idx.query(x, y)?.rect;
            let want = oracle.largest_containing(x, y)?;
            assert_eq!(got, want, "q=({x},{y})");
            checked += 1;
        }
    }
    println!("index agrees with the oracle on {checked} grid queries");
    Ok(())
}
