//! Maximal empty rectangles touching the bounding box, grouped by how many
//! sides they share with it.

use std::collections::BTreeMap;

use emptyrect::anchored::compute_anchored;
use emptyrect::generate::{generate, Kind};
use emptyrect::Rect;

fn main() -> emptyrect::Result<()> {
    let bounds = Rect::new(0, 0, 1 << 16, 1 << 16)?;
    for n in [16, 256, 4096] {
        let ps = generate(Kind::Uniform, n, 11, bounds)?;
        let rects = compute_anchored(&ps);
        let mut by_class = BTreeMap::new();
        for t in &rects {
            *by_class.entry(t.provenance).or_insert(0usize) += 1;
        }
        let classes: Vec<String> = by_class.iter().map(|(p, c)| format!("{p}={c}")).collect();
        println!(
            "n={n:5}  {:6} anchored ({:.2} per point)  {}",
            rects.len(),
            rects.len() as f64 / n as f64,
            classes.join(" ")
        );
    }
    Ok(())
}
