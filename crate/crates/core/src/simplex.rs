//! Simplices as strictly ascending vertex lists.
//!
//! The ordering on simplices is the canonical one used for every matrix in the
//! crate: first by cardinality, then lexicographically by vertices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type VertexId = u32;

type Verts = SmallVec<[VertexId; 4]>;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexId>", into = "Vec<VertexId>")]
pub struct Simplex {
    verts: Verts,
}

impl Simplex {
    /// Builds a simplex from arbitrary vertices; duplicates are merged.
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut verts: Verts = vertices.into_iter().collect();
        if verts.is_empty() {
            return Err(Error::EmptySimplex);
        }
        verts.sort_unstable();
        verts.dedup();
        Ok(Simplex { verts })
    }

    pub fn vertex(v: VertexId) -> Self {
        let mut verts = Verts::new();
        verts.push(v);
        Simplex { verts }
    }

    /// Caller guarantees `verts` is nonempty and strictly ascending.
    pub(crate) fn from_sorted(verts: &[VertexId]) -> Self {
        debug_assert!(!verts.is_empty());
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Simplex { verts: Verts::from_slice(verts) }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.verts.len() - 1
    }

    /// Parity (-1)^dim.
    pub fn omega(&self) -> i64 {
        if self.verts.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.verts.binary_search(&v).ok()
    }

    pub fn is_subset(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.verts.iter();
        'outer: for v in &self.verts {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.verts, &other.verts);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn intersection(&self, other: &Simplex) -> Option<Simplex> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.verts, &other.verts);
        let mut out = Verts::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        (!out.is_empty()).then_some(Simplex { verts: out })
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.verts, &other.verts);
        let mut out = Verts::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
        Simplex { verts: out }
    }

    /// The face obtained by deleting the vertex at `pos`; `None` for a vertex.
    pub fn without_position(&self, pos: usize) -> Option<Simplex> {
        if self.verts.len() == 1 {
            return None;
        }
        let mut verts = self.verts.clone();
        verts.remove(pos);
        Some(Simplex { verts })
    }

    /// Codimension-one faces in order of the deleted position.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.len()).filter_map(|i| self.without_position(i))
    }

    /// All nonempty subsets, the simplex itself included.
    pub fn subsets(&self) -> Vec<Simplex> {
        let n = self.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (1u32..(1 << n))
            .map(|mask| Simplex { verts: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.verts[i]).collect() })
            .collect()
    }

    /// Image under a vertex map; collapsing vertices is allowed.
    pub fn map<F: FnMut(VertexId) -> VertexId>(&self, f: F) -> Simplex {
        let mut verts: Verts = self.verts.iter().copied().map(f).collect();
        verts.sort_unstable();
        verts.dedup();
        Simplex { verts }
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.verts.as_slice().cmp(other.verts.as_slice()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl TryFrom<Vec<VertexId>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<VertexId>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<VertexId> {
    fn from(s: Simplex) -> Self {
        s.verts.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[VertexId]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn construction_sorts_and_dedups() {
        assert_eq!(s(&[3, 1, 2, 1]).vertices(), &[1, 2, 3]);
        assert_eq!(Simplex::new(Vec::new()), Err(Error::EmptySimplex));
    }

    #[test]
    fn parity_follows_dimension() {
        assert_eq!(s(&[1]).omega(), 1);
        assert_eq!(s(&[1, 2]).omega(), -1);
        assert_eq!(s(&[1, 2, 3]).omega(), 1);
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let mut v = vec![s(&[1, 4]), s(&[2]), s(&[1, 2, 3]), s(&[1, 2])];
        v.sort();
        assert_eq!(v, vec![s(&[2]), s(&[1, 2]), s(&[1, 4]), s(&[1, 2, 3])]);
    }

    #[test]
    fn set_operations() {
        let a = s(&[1, 2, 5]);
        let b = s(&[2, 3, 5]);
        assert_eq!(a.intersection(&b), Some(s(&[2, 5])));
        assert_eq!(a.union(&b), s(&[1, 2, 3, 5]));
        assert!(s(&[2, 5]).is_subset(&a));
        assert!(!s(&[3]).is_subset(&a));
        assert!(a.intersects(&b));
        assert!(!s(&[1]).intersects(&s(&[2])));
        assert_eq!(s(&[1]).intersection(&s(&[2])), None);
    }

    #[test]
    fn faces_and_subsets() {
        let t = s(&[1, 2, 3]);
        let f: Vec<_> = t.facets().collect();
        assert_eq!(f, vec![s(&[2, 3]), s(&[1, 3]), s(&[1, 2])]);
        assert_eq!(t.subsets().len(), 7);
        assert_eq!(s(&[7]).facets().count(), 0);
    }

    #[test]
    fn serde_round_trip() {
        let t = s(&[4, 2]);
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, "[2,4]");
        let back: Simplex = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Simplex>("[]").is_err());
    }
}
