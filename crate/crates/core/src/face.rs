//! Vertex sets packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{input, Result};

/// Largest supported ground set. Vertex ids live in `0..MAX_VERTICES`.
pub const MAX_VERTICES: usize = 63;

/// Index of a vertex in a ground set.
pub type Vertex = usize;

/// A finite set of vertices stored as a bit mask.
///
/// Ordering is lexicographic on the sorted vertex lists, so `{0,1} < {0,2} < {1}`.
/// Use [`Face::cmp_graded`] for the cardinality-first order used for facet lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(input(format!(
                    "vertex {v} exceeds the supported maximum id {}",
                    MAX_VERTICES - 1
                )));
            }
            mask |= 1 << v;
        }
        Ok(Face(mask))
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(input(format!(
                "ground set of size {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Face(low_bits(n)))
    }

    pub const fn singleton(v: Vertex) -> Self {
        Face(1 << v)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    #[inline]
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub const fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    #[inline]
    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, v: Vertex) -> Face {
        Face(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: Vertex) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Every subset of this face, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }

    /// Cardinality first, then lexicographic.
    pub fn cmp_graded(&self, other: &Face) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // at the first differing vertex, whichever side has it is smaller unless
        // the other side has already run out of vertices
        let at_or_above = !(low - 1);
        if self.0 & low != 0 {
            if other.0 & at_or_above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & at_or_above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

#[derive(Clone, Debug)]
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some(cur.wrapping_sub(self.full) & self.full)
        };
        Some(Face(cur))
    }
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied()).unwrap()
    }

    #[test]
    fn lexicographic_order() {
        let mut faces = vec![f(&[1]), f(&[0, 2]), f(&[0, 1]), f(&[0]), f(&[]), f(&[0, 1, 2])];
        faces.sort();
        assert_eq!(
            faces,
            vec![f(&[]), f(&[0]), f(&[0, 1]), f(&[0, 1, 2]), f(&[0, 2]), f(&[1])]
        );
        faces.sort_by(Face::cmp_graded);
        assert_eq!(
            faces,
            vec![f(&[]), f(&[0]), f(&[1]), f(&[0, 1]), f(&[0, 2]), f(&[0, 1, 2])]
        );
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s: Vec<_> = f(&[1, 3, 4]).subsets().collect();
        assert_eq!(s.len(), 8);
        assert!(s.iter().all(|x| x.is_subset(f(&[1, 3, 4]))));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn rejects_large_ids() {
        assert!(Face::from_vertices([63]).is_err());
        assert!(Face::range(64).is_err());
        assert_eq!(Face::range(63).unwrap().len(), 63);
    }

    #[test]
    fn display() {
        assert_eq!(f(&[0, 2, 5]).to_string(), "{0,2,5}");
        assert_eq!(Face::EMPTY.to_string(), "{}");
        assert_eq!(Face::EMPTY.dim(), -1);
    }
}
