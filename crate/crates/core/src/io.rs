//! Plain-text point and query files.
//!
//! A point file is an optional bounds header `B:x_lo,y_lo,x_hi,y_hi`
//! followed by one `x,y` pair per line. A query file is just the pairs.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, Rect};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(s: &str, line: usize) -> Result<[i64; N]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(parse_error(
            line,
            format!("expected {N} comma-separated integers, got `{s}`"),
        ));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .parse()
            .map_err(|_| parse_error(line, format!("`{p}` is not an integer")))?;
    }
    Ok(out)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `x_lo,y_lo,x_hi,y_hi`.
pub fn parse_bounds(s: &str) -> Result<Rect> {
    let [x_lo, y_lo, x_hi, y_hi] = numbers::<4>(s, 0)?;
    Rect::new(x_lo, y_lo, x_hi, y_hi)
}

/// Reads a point file. `bounds` is used when the file has no header and
/// must agree with it otherwise.
pub fn read_points(text: &str, bounds: Option<Rect>) -> Result<PointSet> {
    let mut header = None;
    let mut raw = Vec::new();
    for (line, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("B:") {
            if header.is_some() || !raw.is_empty() {
                return Err(parse_error(line, "bounds header must come first"));
            }
            let [x_lo, y_lo, x_hi, y_hi] = numbers::<4>(rest, line)?;
            header = Some(
                Rect::new(x_lo, y_lo, x_hi, y_hi).map_err(|e| parse_error(line, e.to_string()))?,
            );
        } else {
            let [x, y] = numbers::<2>(l, line)?;
            raw.push((x, y));
        }
    }
    let bounds = match (header, bounds) {
        (Some(h), Some(b)) if h != b => {
            return Err(parse_error(1, format!("file bounds {h} disagree with {b}")))
        }
        (Some(b), _) | (None, Some(b)) => b,
        (None, None) => return Err(parse_error(1, "no bounds header and no bounds given")),
    };
    PointSet::new(&raw, bounds)
}

pub fn write_points(ps: &PointSet) -> String {
    let b = ps.bounds();
    let mut out = format!("B:{},{},{},{}\n", b.x_lo, b.y_lo, b.x_hi, b.y_hi);
    for p in ps.points() {
        writeln!(out, "{},{}", p.x, p.y).unwrap();
    }
    out
}

pub fn read_queries(text: &str) -> Result<Vec<(i64, i64)>> {
    content_lines(text)
        .map(|(line, l)| numbers::<2>(l, line).map(|[x, y]| (x, y)))
        .collect()
}

pub fn write_queries(queries: &[(i64, i64)]) -> String {
    queries.iter().map(|(x, y)| format!("{x},{y}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ps = PointSet::new(&[(3, 4), (7, 5)], Rect::new(0, 0, 12, 10).unwrap()).unwrap();
        let text = write_points(&ps);
        assert_eq!(text, "B:0,0,12,10\n3,4\n7,5\n");
        assert_eq!(read_points(&text, None).unwrap().coords(), ps.coords());
    }

    #[test]
    fn header_only() {
        let ps = read_points("B:0,0,4,4\n", None).unwrap();
        assert!(ps.is_empty());
    }

    #[test]
    fn bounds_from_flag() {
        let b = parse_bounds("0,0,10,10").unwrap();
        assert_eq!(read_points("# comment\n4,3\n", Some(b)).unwrap().len(), 1);
        assert!(read_points("4,3\n", None).is_err());
        assert!(read_points("B:0,0,9,9\n4,3\n", Some(b)).is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = read_points("B:0,0,10,10\n1,2\n\n3,x\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = read_queries("1,2\n3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = read_points("1,2\nB:0,0,10,10\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn validation_errors_pass_through() {
        let err = read_points("B:0,0,10,10\n1,2\n1,3\n", None).unwrap_err();
        assert!(matches!(err, Error::DuplicateX { .. }), "{err:?}");
    }
}
