//! Faces: subsets of the vertex labels `1..=64`, stored as one bit-mask.
//!
//! Label `i` occupies bit `i - 1`. Every combinatorial object in the crate
//! (codewords, simplices, link members, collapse pairs) is a [`Face`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex label.
pub const MAX_LABEL: u32 = 64;

/// A finite set of vertex labels drawn from `1..=64`.
///
/// The derived `Ord` compares raw bit-masks. Use [`Face::graded_cmp`] for the
/// size-then-mask order used to index faces deterministically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_LABEL);
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(label: u32) -> Result<Self> {
        check_label(label as u64)?;
        Ok(Face(1u64 << (label - 1)))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            check_label(l as u64)?;
            bits |= 1u64 << (l - 1);
        }
        Ok(Face(bits))
    }

    /// Parses the compact digit notation used throughout the literature,
    /// e.g. `"2345"`. `""` and `"0"` both denote the empty face.
    ///
    /// Panics on malformed input; intended for fixtures and tests.
    pub fn digits(s: &str) -> Self {
        if s == "0" {
            return Face::EMPTY;
        }
        Face::from_labels(s.chars().map(|c| {
            c.to_digit(10)
                .filter(|d| *d > 0)
                .unwrap_or_else(|| panic!("bad digit {c:?} in {s:?}"))
        }))
        .expect("digit labels are in range")
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|self| - 1`, with `-1` for the empty face.
    pub const fn dimension(self) -> i32 {
        self.0.count_ones() as i32 - 1
    }

    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Face) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, label: u32) -> Face {
        debug_assert!((1..=MAX_LABEL).contains(&label));
        Face(self.0 | (1u64 << (label - 1)))
    }

    pub fn without(self, label: u32) -> Face {
        debug_assert!((1..=MAX_LABEL).contains(&label));
        Face(self.0 & !(1u64 << (label - 1)))
    }

    /// Largest label in the face, or 0 when empty.
    pub const fn max_label(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// Smallest label in the face, if any.
    pub fn min_label(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Labels in ascending order.
    pub fn labels(self) -> Labels {
        Labels(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`, in descending
    /// bit-mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Faces obtained by removing one vertex (the codimension-one faces).
    pub fn boundary_faces(self) -> impl Iterator<Item = Face> {
        self.labels().map(move |l| self.without(l))
    }

    /// Order by size, then by bit-mask value.
    pub fn graded_cmp(&self, other: &Face) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

fn check_label(label: u64) -> Result<()> {
    if label == 0 || label > MAX_LABEL as u64 {
        Err(Error::LabelOutOfRange {
            label,
            max: MAX_LABEL,
        })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Face(cur))
    }
}

impl fmt::Display for Face {
    /// Compact digits when every label is a single digit (`123`), braces
    /// otherwise (`{3,10}`), and `∅` for the empty face.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if self.max_label() <= 9 {
            for l in self.labels() {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            f.write_str("{")?;
            for (i, l) in self.labels().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str("}")
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(d)?;
        Face::from_labels(labels).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Face::digits("123");
        let b = Face::digits("34");
        assert_eq!(a.union(b), Face::digits("1234"));
        assert_eq!(a.intersection(b), Face::digits("3"));
        assert_eq!(a.difference(b), Face::digits("12"));
        assert!(Face::digits("13").is_subset(a));
        assert!(!a.is_proper_subset(a));
        assert!(Face::EMPTY.is_subset(b));
        assert_eq!(a.labels().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let f = Face::digits("135");
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&Face::EMPTY));
        assert!(subs.iter().all(|s| s.is_subset(f)));
    }

    #[test]
    fn label_bounds() {
        assert!(Face::singleton(0).is_err());
        assert!(Face::singleton(65).is_err());
        let top = Face::singleton(64).unwrap();
        assert_eq!(top.max_label(), 64);
        assert_eq!(Face::full(64).len(), 64);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Face::digits("2345").to_string(), "2345");
        assert_eq!(Face::EMPTY.to_string(), "∅");
        assert_eq!(Face::from_labels([3, 10]).unwrap().to_string(), "{3,10}");
    }

    #[test]
    fn graded_order() {
        let mut v = vec![Face::digits("12"), Face::digits("3"), Face::digits("1")];
        v.sort_by(Face::graded_cmp);
        assert_eq!(v, vec![Face::digits("1"), Face::digits("3"), Face::digits("12")]);
    }
}
