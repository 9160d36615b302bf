//! Fixed-width bitsets used as faces of simplicial complexes.

use std::fmt;

/// Largest ground set a [`Face`] can index.
pub const FACE_WIDTH: usize = 128;

/// A finite subset of `0..FACE_WIDTH`, stored as a bitmask.
///
/// Dimension of a face is `len() - 1`; the empty face has dimension -1.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(pub u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < FACE_WIDTH);
        Face(1u128 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < FACE_WIDTH && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1u128 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Visits every subset of `self`, including `self` and the empty face.
    pub fn for_each_subset(self, mut f: impl FnMut(Face)) {
        let full = self.0;
        let mut s = full;
        loop {
            f(Face(s));
            if s == 0 {
                break;
            }
            s = (s - 1) & full;
        }
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u128;
        for v in iter {
            assert!(v < FACE_WIDTH, "face element {v} exceeds width {FACE_WIDTH}");
            bits |= 1u128 << v;
        }
        Face(bits)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct FaceIter(u128);

impl Iterator for FaceIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
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

impl ExactSizeIterator for FaceIter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_three_element_face() {
        let f: Face = [1, 5, 127].into_iter().collect();
        let mut seen = Vec::new();
        f.for_each_subset(|s| seen.push(s));
        assert_eq!(seen.len(), 8);
        assert!(seen.iter().all(|s| s.is_subset(f)));
        assert_eq!(f.to_vec(), vec![1, 5, 127]);
        assert_eq!(f.max_element(), Some(127));
        assert_eq!(Face::EMPTY.dim(), -1);
    }
}
