//! Permutations of `{0..d-1}` in image-array form.

use std::fmt;

/// A bijection on `{0..d-1}`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u16).collect() }
    }

    /// Validates that `images` is a bijection on its index range.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let d = images.len();
        if d > u16::MAX as usize {
            return None;
        }
        let mut seen = vec![false; d];
        for &x in images {
            if x >= d || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images: images.iter().map(|&x| x as u16).collect() })
    }

    /// Builds a permutation from disjoint cycles (zero-based points).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree || moved[pt] {
                    return None;
                }
                moved[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Function composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_argument_first() {
        // a = (0 1), b = (1 2); (a ∘ b)(1) = a(2) = 2, (a ∘ b)(0) = a(0) = 1.
        let a = Permutation::from_images(&[1, 0, 2]).unwrap();
        let b = Permutation::from_images(&[0, 2, 1]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let p = Permutation::from_images(&[2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_none());
        assert!(Permutation::from_images(&[0, 3]).is_none());
    }

    #[test]
    fn cycles() {
        // (12)(34) on 5 points, one-based in the usual notation, is
        // (0 1)(2 3) zero-based.
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.apply(4), 4);
        // overlapping cycles are rejected
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_none());
    }
}
