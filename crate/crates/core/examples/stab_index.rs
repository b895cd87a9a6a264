//! Maximum-area stabbing over an explicit rectangle family.

use emptyrect::anchored::compute_anchored;
use emptyrect::generate::{generate, Kind};
use emptyrect::stab::StabIndex;
use emptyrect::Rect;

fn main() -> emptyrect::Result<()> {
    let bounds = Rect::new(0, 0, 1000, 1000)?;
    let ps = generate(Kind::Uniform, 200, 5, bounds)?;
    let rects = compute_anchored(&ps);
    let stab = StabIndex::build(rects.clone());
    println!(
        "{} rectangles stored in {} tree cells",
        stab.len(),
        stab.cells()
    );

    for (x, y) in [(500, 500), (0, 0), (999, 1), (250, 750)] {
        let mut steps = 0;
        let best = stab.stab_max_area_counted(x, y, &mut steps);
        let scan = rects
            .iter()
            .filter(|t| t.rect.contains(x, y))
            .map(|t| t.rect)
            .max();
        assert_eq!(best.map(|t| t.rect), scan);
        match best {
            Some(t) => println!(
                "q=({x},{y})  {} area {}  {}  ({steps} steps)",
                t.rect,
                t.rect.area(),
                t.provenance
            ),
            None => println!("q=({x},{y})  nothing stabbed  ({steps} steps)"),
        }
    }
    Ok(())
}
