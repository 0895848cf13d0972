//! Bit-mask vertex subsets and ordered set families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::Edge;

/// A subset of `{0, .., n-1}` stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    n: u8,
    bits: u64,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet {
            n: n as u8,
            bits: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n: n as u8,
            bits: full_mask(n),
        }
    }

    /// Builds a set from raw bits; bits at or above `n` are an error.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        if bits & !full_mask(n) != 0 {
            let index = 63 - bits.leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { index, n });
        }
        Ok(VertexSet { n: n as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        VertexSet { n: n as u8, bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut s = VertexSet::empty(n);
        for i in indices {
            if i >= n {
                return Err(Error::VertexOutOfRange { index: i, n });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe");
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.bits &= !(1 << v);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n.max(other.n),
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n.max(other.n),
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: !self.bits & full_mask(self.universe()),
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Members as 1-based labels, the form used in every report.
    pub fn to_labels(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// `{v_1, v_4}` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "v_{}", v + 1)?;
        }
        f.write_str("}")
    }
}

/// Iterator over the members of a [`VertexSet`], lowest index first.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

/// Element of `V(G) ∪ E(G)` for mixed resolvability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedItem {
    Vertex(usize),
    Edge(Edge),
}

impl fmt::Display for MixedItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedItem::Vertex(v) => write!(f, "v_{}", v + 1),
            MixedItem::Edge(e) => write!(f, "{e}"),
        }
    }
}

/// Which construction produced a member of a [`SetFamily`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `W_uv` for the ordered edge `(u, v)`.
    Strict { u: usize, v: usize },
    /// The complement `W̄_uv` for the ordered edge `(u, v)`.
    Weak { u: usize, v: usize },
    /// Resolver set of an unordered pair of items.
    Pair(MixedItem, MixedItem),
    /// Set supplied directly (debug instances, tests).
    Given(usize),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Strict { u, v } => write!(f, "W(v_{},v_{})", u + 1, v + 1),
            Provenance::Weak { u, v } => write!(f, "Wbar(v_{},v_{})", u + 1, v + 1),
            Provenance::Pair(a, b) => write!(f, "{a}|{b}"),
            Provenance::Given(i) => write!(f, "S_{}", i + 1),
        }
    }
}

/// Ordered collection of vertex sets over a common universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<VertexSet>,
    labels: Vec<Provenance>,
}

impl SetFamily {
    pub fn new(universe: usize) -> Self {
        SetFamily {
            universe,
            sets: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn with_capacity(universe: usize, cap: usize) -> Self {
        SetFamily {
            universe,
            sets: Vec::with_capacity(cap),
            labels: Vec::with_capacity(cap),
        }
    }

    /// Builds an unlabelled family from index lists, rejecting out-of-range members.
    pub fn from_lists(universe: usize, lists: &[Vec<usize>]) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::TooLarge(universe));
        }
        let mut fam = SetFamily::with_capacity(universe, lists.len());
        for (i, l) in lists.iter().enumerate() {
            let s = VertexSet::from_indices(universe, l.iter().copied())
                .map_err(|_| Error::OutsideUniverse { index: i, universe })?;
            fam.push(s, Provenance::Given(i));
        }
        Ok(fam)
    }

    pub fn push(&mut self, set: VertexSet, label: Provenance) {
        debug_assert!(set.bits() & !full_mask(self.universe) == 0);
        self.sets.push(set);
        self.labels.push(label);
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn labels(&self) -> &[Provenance] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &Provenance)> {
        self.sets.iter().zip(self.labels.iter())
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        self.sets.iter().map(|s| s.bits()).collect()
    }

    /// Debug form: `{"universe": n, "sets": [[1-based members], ..], "labels": [..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "universe": self.universe,
            "sets": self.sets.iter().map(|s| s.to_labels()).collect::<Vec<_>>(),
            "labels": self.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The hitting-set instance debug format: `{"universe": n, "sets": [[0-based indices]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
}

impl InstanceRecord {
    pub fn from_family(f: &SetFamily) -> Self {
        InstanceRecord {
            universe: f.universe(),
            sets: f.sets().iter().map(|s| s.to_vec()).collect(),
        }
    }

    pub fn to_family(&self) -> Result<SetFamily> {
        SetFamily::from_lists(self.universe, &self.sets)
    }
}
