//! Subsets of Dynkin nodes.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Maximum number of nodes a [`NodeSet`] can address.
pub const MAX_NODES: usize = 64;

/// A set of 0-based node indices, stored as a bitmask.
///
/// Iteration is in ascending index order. `Display`, `Debug` and the serde
/// representation use 1-based Bourbaki labels, e.g. `{1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_NODES, "at most {MAX_NODES} nodes");
        if n == MAX_NODES {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_NODES);
        NodeSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_NODES && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        *self = *self | NodeSet::singleton(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        self | NodeSet::singleton(i)
    }

    pub fn without(self, i: usize) -> Self {
        self - NodeSet::singleton(i)
    }

    pub fn union(self, other: NodeSet) -> Self {
        self | other
    }

    pub fn intersection(self, other: NodeSet) -> Self {
        self & other
    }

    pub fn difference(self, other: NodeSet) -> Self {
        self - other
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: NodeSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, starting with the empty set and ending with `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Parses a 1-based comma separated list such as `"1,2"`; the empty
    /// string is the empty set.
    pub fn parse_labels(s: &str, rank: usize) -> Result<Self> {
        let mut set = NodeSet::EMPTY;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let label: usize = part
                .parse()
                .map_err(|_| Error::input(format!("not a node label: {part:?}")))?;
            set.insert(label_to_index(label, rank)?);
        }
        Ok(set)
    }

    pub fn from_labels(labels: &[usize], rank: usize) -> Result<Self> {
        let mut set = NodeSet::EMPTY;
        for &l in labels {
            set.insert(label_to_index(l, rank)?);
        }
        Ok(set)
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

fn label_to_index(label: usize, rank: usize) -> Result<usize> {
    if label == 0 || label > rank {
        return Err(Error::input(format!(
            "node label {label} out of range 1..={rank}"
        )));
    }
    Ok(label - 1)
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = NodeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl BitOr for NodeSet {
    type Output = NodeSet;
    fn bitor(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 | rhs.0)
    }
}

impl BitAnd for NodeSet {
    type Output = NodeSet;
    fn bitand(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 & rhs.0)
    }
}

impl Sub for NodeSet {
    type Output = NodeSet;
    fn sub(self, rhs: NodeSet) -> NodeSet {
        NodeSet(self.0 & !rhs.0)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl IntoIterator for NodeSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Submasks in increasing numeric order: `next = (cur - mask) & mask`.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = NodeSet;
    fn next(&mut self) -> Option<NodeSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(NodeSet(cur))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        let mut set = NodeSet::EMPTY;
        for l in labels {
            if l == 0 || l > MAX_NODES {
                return Err(serde::de::Error::custom(format!("bad node label {l}")));
            }
            set.insert(l - 1);
        }
        Ok(set)
    }
}

/// Serializes a 0-based node index as its 1-based label.
pub(crate) fn serialize_label<S: Serializer>(i: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(*i as u64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: NodeSet = [0, 2].into_iter().collect();
        let b: NodeSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).labels(), vec![1, 3, 4]);
        assert_eq!((a & b).labels(), vec![3]);
        assert_eq!((a - b).labels(), vec![1]);
        assert!(NodeSet::EMPTY.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(a.to_string(), "{1,3}");
    }

    #[test]
    fn subsets_enumerates_all() {
        let s: NodeSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], NodeSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(NodeSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn label_parsing() {
        assert_eq!(NodeSet::parse_labels("1, 2", 3).unwrap().labels(), vec![1, 2]);
        assert_eq!(NodeSet::parse_labels("", 3).unwrap(), NodeSet::EMPTY);
        assert!(NodeSet::parse_labels("4", 3).is_err());
        assert!(NodeSet::parse_labels("0", 3).is_err());
    }
}
