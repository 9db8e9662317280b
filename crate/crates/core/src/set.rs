//! Arbitrary subsets of a host complex, stored as bitsets over the canonical
//! simplex order.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

#[derive(Clone)]
pub struct SimplexSet<'a> {
    host: &'a SimplicialComplex,
    members: FixedBitSet,
}

impl<'a> SimplexSet<'a> {
    pub fn empty(host: &'a SimplicialComplex) -> Self {
        SimplexSet { host, members: FixedBitSet::with_capacity(host.len()) }
    }

    pub fn full(host: &'a SimplicialComplex) -> Self {
        let mut members = FixedBitSet::with_capacity(host.len());
        members.insert_range(..);
        SimplexSet { host, members }
    }

    pub fn from_bits(host: &'a SimplicialComplex, members: FixedBitSet) -> Self {
        assert_eq!(members.len(), host.len(), "bitset length must match host");
        SimplexSet { host, members }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(host: &'a SimplicialComplex, idx: I) -> Self {
        let mut s = Self::empty(host);
        for i in idx {
            s.members.insert(i);
        }
        s
    }

    pub fn from_simplices<'b, I>(host: &'a SimplicialComplex, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'b Simplex>,
    {
        let mut s = Self::empty(host);
        for x in simplices {
            s.members.insert(host.require(x)?);
        }
        Ok(s)
    }

    /// The star U(x): simplices containing simplex `i`.
    pub fn star(host: &'a SimplicialComplex, i: usize) -> Self {
        Self::from_indices(host, host.star_indices(i))
    }

    /// The core: all faces of simplex `i`, itself included.
    pub fn core(host: &'a SimplicialComplex, i: usize) -> Self {
        let mut s = Self::from_indices(host, [i]);
        s.close_downward();
        s
    }

    /// The unit ball B(x), the closure of the star.
    pub fn ball(host: &'a SimplicialComplex, i: usize) -> Self {
        let mut s = Self::star(host, i);
        s.close_downward();
        s
    }

    /// The unit sphere S(x) = B(x) \ U(x).
    pub fn sphere(host: &'a SimplicialComplex, i: usize) -> Self {
        Self::ball(host, i).difference(&Self::star(host, i))
    }

    pub fn host(&self) -> &'a SimplicialComplex {
        self.host
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn into_bits(self) -> FixedBitSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.host.index_of(s).is_some_and(|i| self.members.contains(i))
    }

    pub fn insert(&mut self, i: usize) {
        self.members.insert(i);
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn simplices(&self) -> impl Iterator<Item = &'a Simplex> + '_ {
        let host = self.host;
        self.members.ones().map(move |i| host.simplex(i))
    }

    fn same_host(&self, other: &SimplexSet<'_>) {
        assert!(std::ptr::eq(self.host, other.host), "simplex sets live in different complexes");
    }

    pub fn union(&self, other: &SimplexSet<'_>) -> Self {
        self.same_host(other);
        let mut m = self.members.clone();
        m.union_with(&other.members);
        SimplexSet { host: self.host, members: m }
    }

    pub fn intersection(&self, other: &SimplexSet<'_>) -> Self {
        self.same_host(other);
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        SimplexSet { host: self.host, members: m }
    }

    pub fn difference(&self, other: &SimplexSet<'_>) -> Self {
        self.same_host(other);
        let mut m = self.members.clone();
        m.difference_with(&other.members);
        SimplexSet { host: self.host, members: m }
    }

    pub fn complement(&self) -> Self {
        let mut m = self.members.clone();
        m.toggle_range(..);
        SimplexSet { host: self.host, members: m }
    }

    fn close_downward(&mut self) {
        let mut stack: Vec<usize> = self.members.ones().collect();
        while let Some(i) = stack.pop() {
            for &j in self.host.faces(i) {
                if !self.members.put(j) {
                    stack.push(j);
                }
            }
        }
    }

    fn close_upward(&mut self) {
        let mut stack: Vec<usize> = self.members.ones().collect();
        while let Some(i) = stack.pop() {
            for &j in self.host.cofaces(i) {
                if !self.members.put(j) {
                    stack.push(j);
                }
            }
        }
    }

    /// Smallest closed set containing this one.
    pub fn closure(&self) -> Self {
        let mut s = self.clone();
        s.close_downward();
        s
    }

    /// Smallest open set containing this one.
    pub fn open_hull(&self) -> Self {
        let mut s = self.clone();
        s.close_upward();
        s
    }

    pub fn is_open(&self) -> bool {
        self.members.ones().all(|i| self.host.cofaces(i).iter().all(|&j| self.members.contains(j)))
    }

    pub fn is_closed(&self) -> bool {
        self.members.ones().all(|i| self.host.faces(i).iter().all(|&j| self.members.contains(j)))
    }

    /// Open in its closure, i.e. the closure minus the set is closed.
    pub fn is_locally_closed(&self) -> bool {
        self.closure().difference(self).is_closed()
    }

    /// closure(A) ∩ closure(complement of A).
    pub fn boundary(&self) -> Self {
        self.closure().intersection(&self.complement().closure())
    }

    pub fn euler(&self) -> i64 {
        self.members.ones().map(|i| self.host.omega(i)).sum()
    }

    /// The subcomplex formed by a closed set.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_closed() {
            return Err(Error::NotSubcomplex);
        }
        Ok(SimplicialComplex::from_closed(self.simplices().cloned().collect()))
    }
}

impl PartialEq for SimplexSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.host, other.host) && self.members == other.members
    }
}

impl Eq for SimplexSet<'_> {}

impl fmt::Debug for SimplexSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.simplices()).finish()
    }
}
