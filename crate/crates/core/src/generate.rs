//! Deterministic point-set generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, Rect};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Distinct random coordinates.
    Uniform,
    /// Two descending chains, one below-left of the other: quadratically
    /// many maximal empty rectangles, all sharing the root cell.
    Staircase,
    /// A rotated lattice, so every row and column holds one point.
    GridAdversarial,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Kind::Uniform),
            "staircase" => Ok(Kind::Staircase),
            "grid-adversarial" => Ok(Kind::GridAdversarial),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown kind `{other}`"),
            }),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Uniform => "uniform",
            Kind::Staircase => "staircase",
            Kind::GridAdversarial => "grid-adversarial",
        })
    }
}

pub fn generate(kind: Kind, n: usize, seed: u64, bounds: Rect) -> Result<PointSet> {
    let raw = match kind {
        Kind::Uniform => uniform(n, seed, bounds)?,
        Kind::Staircase => staircase(n, bounds)?,
        Kind::GridAdversarial => grid(n, seed, bounds)?,
    };
    PointSet::new(&raw, bounds)
}

fn uniform(n: usize, seed: u64, b: Rect) -> Result<Vec<(i64, i64)>> {
    let slots = |lo: i64, hi: i64| (hi - lo - 1).max(0) as usize;
    let (wx, wy) = (slots(b.x_lo, b.x_hi), slots(b.y_lo, b.y_hi));
    if n > wx || n > wy {
        return Err(Error::CoordinateBudget { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = sample(&mut rng, wx, n);
    let mut ys = sample(&mut rng, wy, n).into_vec();
    ys.shuffle(&mut rng);
    Ok(xs
        .into_iter()
        .zip(ys)
        .map(|(x, y)| (b.x_lo + 1 + x as i64, b.y_lo + 1 + y as i64))
        .collect())
}

/// Scales ranks `1..=n` into the box, keeping at least one unit between
/// consecutive ranks.
fn scale(n: usize, lo: i64, hi: i64) -> Result<i64> {
    let step = (hi - lo) / (n as i64 + 1);
    if step < 1 {
        return Err(Error::CoordinateBudget { n });
    }
    Ok(step)
}

fn staircase(n: usize, b: Rect) -> Result<Vec<(i64, i64)>> {
    let (sx, sy) = (scale(n, b.x_lo, b.x_hi)?, scale(n, b.y_lo, b.y_hi)?);
    let k1 = n.div_ceil(2);
    let ranks = (1..=k1)
        .map(|i| (i, k1 + 1 - i))
        .chain((k1 + 1..=n).map(|i| (i, n + k1 + 1 - i)));
    Ok(ranks
        .map(|(x, y)| (b.x_lo + sx * x as i64, b.y_lo + sy * y as i64))
        .collect())
}

fn grid(n: usize, seed: u64, b: Rect) -> Result<Vec<(i64, i64)>> {
    let mut k = 0;
    while k * k < n {
        k += 1;
    }
    let (sx, sy) = (scale(k * k, b.x_lo, b.x_hi)?, scale(k * k, b.y_lo, b.y_hi)?);
    let mut cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    cells.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    cells.truncate(n);
    Ok(cells
        .into_iter()
        .map(|(i, j)| {
            let (x, y) = (i * k + j + 1, j * k + i + 1);
            (b.x_lo + sx * x as i64, b.y_lo + sy * y as i64)
        })
        .collect())
}
