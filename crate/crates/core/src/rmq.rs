/// Static range-maximum tree over a slice of `Ord` values.
///
/// Bottom-up layout: leaves at `[size, 2 * size)`, node `i` holds the
/// maximum of its two children. Wrap values in `std::cmp::Reverse` for
/// range minima.
#[derive(Clone, Debug)]
pub struct RangeMaxTree<T> {
    size: usize,
    len: usize,
    nodes: Vec<Option<T>>,
}

impl<T: Ord + Copy> RangeMaxTree<T> {
    pub fn new(values: &[T]) -> Self {
        let len = values.len();
        let size = len.next_power_of_two().max(1);
        let mut nodes = vec![None; 2 * size];
        for (i, v) in values.iter().enumerate() {
            nodes[size + i] = Some(*v);
        }
        for i in (1..size).rev() {
            nodes[i] = nodes[2 * i].max(nodes[2 * i + 1]);
        }
        RangeMaxTree { size, len, nodes }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of stored slots.
    pub fn cells(&self) -> usize {
        self.nodes.len()
    }

    /// Maximum over the inclusive index range `[lo, hi]`; `None` when the
    /// range is empty.
    pub fn max_in(&self, lo: usize, hi: usize) -> Option<T> {
        self.max_in_counted(lo, hi, &mut 0)
    }

    /// As [`max_in`](Self::max_in), adding the number of visited nodes to
    /// `steps`.
    pub fn max_in_counted(&self, lo: usize, hi: usize, steps: &mut u64) -> Option<T> {
        if lo > hi || lo >= self.len {
            return None;
        }
        let hi = hi.min(self.len - 1);
        let (mut l, mut r) = (lo + self.size, hi + self.size + 1);
        let mut best = None;
        while l < r {
            if l & 1 == 1 {
                best = best.max(self.nodes[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = best.max(self.nodes[r]);
            }
            l >>= 1;
            r >>= 1;
            *steps += 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Reverse;

    #[test]
    fn small() {
        let t = RangeMaxTree::new(&[3, 1, 4, 1, 5, 9, 2, 6]);
        assert_eq!(t.max_in(0, 7), Some(9));
        assert_eq!(t.max_in(0, 3), Some(4));
        assert_eq!(t.max_in(6, 7), Some(6));
        assert_eq!(t.max_in(3, 3), Some(1));
        assert_eq!(t.max_in(4, 3), None);
        assert_eq!(t.max_in(8, 9), None);
        let m = RangeMaxTree::new(&[Reverse(3), Reverse(1), Reverse(4)]);
        assert_eq!(m.max_in(0, 2), Some(Reverse(1)));
    }

    #[test]
    fn empty_tree() {
        let t: RangeMaxTree<i32> = RangeMaxTree::new(&[]);
        assert!(t.is_empty());
        assert_eq!(t.max_in(0, 0), None);
    }

    proptest! {
        #[test]
        fn matches_scan(v in prop::collection::vec(-50i32..50, 1..70), a in 0usize..80, b in 0usize..80) {
            let t = RangeMaxTree::new(&v);
            let (lo, hi) = (a.min(b), a.max(b));
            let want = if lo < v.len() { v[lo..=hi.min(v.len() - 1)].iter().max().copied() } else { None };
            prop_assert_eq!(t.max_in(lo, hi), want);
        }
    }
}
