//! Permutations of the four vertices of a tetrahedron.

use core::fmt;

/// A bijection on `{0, 1, 2, 3}`, stored as its image table.
///
/// Composition follows function notation: `(a * b)[i] == a[b[i]]`, so `b`
/// is applied first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its image table, rejecting anything that is
    /// not a bijection on `{0, 1, 2, 3}`.
    pub fn new(image: [u8; 4]) -> Option<Self> {
        let mut seen = 0u8;
        for &x in &image {
            if x > 3 || seen & (1 << x) != 0 {
                return None;
            }
            seen |= 1 << x;
        }
        Some(Perm4(image))
    }

    /// Same as [`Perm4::new`] for `usize` images; convenient for parsers.
    pub fn from_images(image: [usize; 4]) -> Option<Self> {
        if image.iter().any(|&x| x > 3) {
            return None;
        }
        Self::new(image.map(|x| x as u8))
    }

    /// The transposition exchanging `a` and `b` (identity when `a == b`).
    pub fn transposition(a: usize, b: usize) -> Self {
        let mut image = [0, 1, 2, 3];
        image.swap(a, b);
        Perm4(image)
    }

    #[inline]
    pub fn apply(self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0u8; 4];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm4(inv)
    }

    /// `true` for odd permutations.
    pub fn is_odd(self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    /// Enumerates all 24 permutations in lexicographic order of images.
    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..256u32).filter_map(|code| {
            let image = [
                (code & 3) as u8,
                ((code >> 2) & 3) as u8,
                ((code >> 4) & 3) as u8,
                ((code >> 6) & 3) as u8,
            ];
            Perm4::new([image[3], image[2], image[1], image[0]])
        })
    }
}

impl Default for Perm4 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl core::ops::Mul for Perm4 {
    type Output = Perm4;

    fn mul(self, rhs: Perm4) -> Perm4 {
        Perm4(rhs.0.map(|x| self.0[x as usize]))
    }
}

impl core::ops::Index<usize> for Perm4 {
    type Output = u8;

    fn index(&self, i: usize) -> &u8 {
        &self.0[i]
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm4({}{}{}{})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}
