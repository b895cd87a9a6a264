//! Preprocess a small point set and ask for the largest empty rectangle
//! around a few query points.

use emptyrect::{Index, PointSet, Rect};

fn main() -> emptyrect::Result<()> {
    let bounds = Rect::new(0, 0, 100, 60)?;
    let ps = PointSet::new(
        &[
            (12, 40),
            (25, 9),
            (38, 51),
            (47, 27),
            (63, 14),
            (71, 44),
            (88, 31),
        ],
        bounds,
    )?;
    let idx = Index::preprocess(&ps);

    let s = idx.stats();
    println!(
        "{} points: {} explicit rectangles, {} cells, {} entry evaluations",
        idx.len(),
        s.explicit_rects,
        s.stored_cells,
        s.entry_evals
    );

    for (x, y) in [(50, 30), (5, 5), (47, 27), (100, 60), (60, 45)] {
        let a = idx.query(x, y)?;
        println!(
            "q=({x:3},{y:3})  {}  area {:5}  via {:<16} work {}",
            a.rect,
            a.rect.area(),
            a.provenance.as_str(),
            a.work.units()
        );
    }
    Ok(())
}
