//! Edge colorings of `K_N` induced by a partition of the differences.

use alloc::vec;
use alloc::vec::Vec;

use crate::oracle::LabeledPartition;
use crate::partition::CyclotomicPartition;

/// The circulant coloring of `K_N`: edge `{u, v}` gets the index of the class
/// containing `u - v mod N`. Well defined because every class is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: usize,
    /// Color of each nonzero difference; slot 0 unused.
    by_difference: Vec<u32>,
}

/// An edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Edge {
    pub u: u64,
    pub v: u64,
    pub color: usize,
}

impl EdgeColoring {
    /// Colors by class membership. Returns `None` if some class is not
    /// symmetric, since then `{u, v}` and `{v, u}` would disagree.
    pub fn from_labeled(p: &LabeledPartition) -> Option<Self> {
        let n = p.modulus();
        let mut by_difference = vec![u32::MAX; n as usize];
        for (i, class) in p.classes().iter().enumerate() {
            for d in class.iter() {
                if !class.contains((n - d) % n) {
                    return None;
                }
                by_difference[d as usize] = i as u32;
            }
        }
        Some(EdgeColoring { colors: p.colors(), by_difference })
    }

    pub fn from_partition(p: &CyclotomicPartition) -> Option<Self> {
        Self::from_labeled(&LabeledPartition::from(p))
    }

    pub fn vertices(&self) -> u64 {
        self.by_difference.len() as u64
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn edge_count(&self) -> u64 {
        let n = self.vertices();
        n * (n - 1) / 2
    }

    /// Color of `{u, v}`, `u != v`.
    pub fn color(&self, u: u64, v: u64) -> usize {
        let n = self.vertices();
        assert!(u != v && u < n && v < n, "not an edge of K_{n}: {{{u}, {v}}}");
        self.by_difference[((u + n - v) % n) as usize] as usize
    }

    /// All edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge { u, v, color: self.color(u, v) }))
    }

    /// First monochromatic triangle `u < v < w` in lexicographic order.
    pub fn monochromatic_triangle(&self) -> Option<(u64, u64, u64)> {
        let n = self.vertices();
        for u in 0..n {
            for v in u + 1..n {
                let c = self.color(u, v);
                for w in v + 1..n {
                    if self.color(u, w) == c && self.color(v, w) == c {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    /// Checks that every edge `{u, v}` of color `c` closes a triangle through
    /// some `w` with `color(u, w) = a`, `color(w, v) = b` for every ordered
    /// pair `(a, b) != (c, c)`. Returns the first edge and pair that does not.
    pub fn missing_triangle_type(&self) -> Option<(Edge, usize, usize)> {
        let n = self.vertices();
        let m = self.colors;
        let mut seen = vec![false; m * m];
        for edge in self.edges() {
            seen.iter_mut().for_each(|s| *s = false);
            for w in (0..n).filter(|&w| w != edge.u && w != edge.v) {
                seen[self.color(edge.u, w) * m + self.color(w, edge.v)] = true;
            }
            for a in 0..m {
                for b in 0..m {
                    if (a, b) != (edge.color, edge.color) && !seen[a * m + b] {
                        return Some((edge, a, b));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5() {
        let p = CyclotomicPartition::build(5, 2, 2).unwrap();
        let c = EdgeColoring::from_partition(&p).unwrap();
        assert_eq!(c.edge_count(), 10);
        assert_eq!(c.edges().count(), 10);
        for e in c.edges() {
            let d = (e.v - e.u) % 5;
            assert_eq!(e.color, if d == 1 || d == 4 { 0 } else { 1 });
            assert_eq!(c.color(e.v, e.u), e.color);
        }
        assert_eq!(c.monochromatic_triangle(), None);
        assert_eq!(c.missing_triangle_type(), None);
    }

    #[test]
    fn k13() {
        let c = EdgeColoring::from_partition(&CyclotomicPartition::build(13, 3, 2).unwrap()).unwrap();
        assert_eq!(c.edge_count(), 78);
        assert_eq!(c.monochromatic_triangle(), None);
        assert_eq!(c.missing_triangle_type(), None);
    }

    #[test]
    fn failing_partition_has_defects() {
        // quadratic residues mod 13 contain 1 + 3 = 4
        let c = EdgeColoring::from_partition(&CyclotomicPartition::build(13, 2, 2).unwrap()).unwrap();
        assert_eq!(c.monochromatic_triangle(), Some((0, 1, 4)));
        // {1,6} + {3,4} = {2,3,4,5}: a color-0 edge has no (0, 1) triangle
        let c = EdgeColoring::from_partition(&CyclotomicPartition::build(7, 3, 3).unwrap()).unwrap();
        let (edge, a, b) = c.missing_triangle_type().unwrap();
        assert_eq!((edge.u, edge.v, edge.color, a, b), (0, 1, 0, 0, 1));
    }

    #[test]
    fn asymmetric_classes_rejected() {
        let p = LabeledPartition::from_lists(5, &[&[1, 2], &[3, 4]]).unwrap();
        assert!(EdgeColoring::from_labeled(&p).is_none());
    }
}
