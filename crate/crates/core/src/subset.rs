use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set. Subsets live in a single `u32`.
pub const MAX_GROUND_SET: usize = 30;

/// A subset of the ground set `[n]`, i.e. a vertex of `Q_n`.
///
/// Bit `i` stands for ground element `i + 1`, so `{1, 2}` is `0x3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSubset {
    bits: u32,
    n: u8,
}

/// Serialised as its hex mask, the same text the file formats use.
impl Serialize for VertexSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl VertexSubset {
    pub fn new(bits: u32, n: usize) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::ResourceLimit {
                what: "ground set size",
                value: n,
                cap: MAX_GROUND_SET,
            });
        }
        if bits >> n != 0 {
            return Err(Error::Domain(format!(
                "subset {bits:#x} has elements outside a ground set of size {n}"
            )));
        }
        Ok(VertexSubset { bits, n: n as u8 })
    }

    /// Builds a subset from 1-based ground elements.
    pub fn from_elements(elements: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::Domain(format!(
                    "element {e} outside ground set [1, {n}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        VertexSubset::new(bits, n)
    }

    pub(crate) fn from_bits_unchecked(bits: u32, n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET && bits >> n == 0);
        VertexSubset { bits, n: n as u8 }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn ground_size(self) -> usize {
        self.n as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.n as usize && self.bits >> (element - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: VertexSubset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Hamming distance of the indicator vectors.
    pub fn distance(self, other: VertexSubset) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// True iff the two subsets are adjacent in `Q_n`.
    pub fn is_cube_neighbor(self, other: VertexSubset) -> bool {
        self.distance(other) == 1
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..32).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.bits)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterates all `k`-subsets of `{0, .., n-1}` as bit masks in increasing
/// numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bits_outside_ground_set() {
        assert!(VertexSubset::new(0b100, 2).is_err());
        assert!(VertexSubset::new(0, 31).is_err());
        assert!(VertexSubset::new(0b11, 2).is_ok());
    }

    #[test]
    fn elements_are_one_based() {
        let s = VertexSubset::from_elements(&[1, 3], 4).unwrap();
        assert_eq!(s.bits(), 0b101);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert!(s.contains(3) && !s.contains(2));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        let v: Vec<u32> = k_subsets(4, 2).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|b| b.count_ones() == 2 && *b < 16));
    }
}
