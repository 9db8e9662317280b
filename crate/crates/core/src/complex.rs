//! Finite abstract simplicial complexes and the algebraic builders on them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::SimplexSet;
use crate::simplex::{Simplex, VertexId};

/// A downward closed set of simplices stored in canonical order.
///
/// Indices into [`SimplicialComplex::simplices`] are used throughout the crate
/// as row and column positions of matrices.
#[derive(Clone, Default)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    vertices: Vec<VertexId>,
    incidence: OnceLock<Incidence>,
}

#[derive(Clone)]
struct Incidence {
    faces: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
    vertex_stars: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of a collection of vertex sets.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let mut all = HashSet::new();
        for f in facets {
            let s = Simplex::new(f)?;
            if all.contains(&s) {
                continue;
            }
            for sub in s.subsets() {
                all.insert(sub);
            }
        }
        Ok(Self::from_closed(all.into_iter().collect()))
    }

    /// Downward closure of a list of simplices.
    pub fn closure_of<'a, I: IntoIterator<Item = &'a Simplex>>(sets: I) -> Self {
        let mut all = HashSet::new();
        for s in sets {
            if all.contains(s) {
                continue;
            }
            all.extend(s.subsets());
        }
        Self::from_closed(all.into_iter().collect())
    }

    /// Caller guarantees the list is downward closed; duplicates are removed.
    pub(crate) fn from_closed(mut simplices: Vec<Simplex>) -> Self {
        simplices.sort_unstable();
        simplices.dedup();
        let index = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let vertices = simplices.iter().take_while(|s| s.len() == 1).map(|s| s.vertices()[0]).collect();
        let c = SimplicialComplex { simplices, index, vertices, incidence: OnceLock::new() };
        debug_assert!(c.is_downward_closed());
        c
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn require(&self, s: &Simplex) -> Result<usize> {
        self.index_of(s).ok_or_else(|| Error::NotInComplex(s.to_string()))
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.index_of(&Simplex::vertex(v))
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.vertices.last().copied()
    }

    /// Maximal dimension; -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.last().map_or(-1, |s| s.dim() as isize)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 1) as usize];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    /// Index range of the simplices of dimension `k`.
    pub fn dim_range(&self, k: usize) -> std::ops::Range<usize> {
        let lo = self.simplices.partition_point(|s| s.dim() < k);
        let hi = self.simplices.partition_point(|s| s.dim() <= k);
        lo..hi
    }

    pub fn omega(&self, i: usize) -> i64 {
        self.simplices[i].omega()
    }

    pub fn euler(&self) -> i64 {
        self.simplices.iter().map(Simplex::omega).sum()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.simplices.iter().all(|s| s.facets().all(|f| self.index.contains_key(&f)))
    }

    fn incidence(&self) -> &Incidence {
        self.incidence.get_or_init(|| {
            let n = self.len();
            let mut faces = vec![Vec::new(); n];
            let mut cofaces = vec![Vec::new(); n];
            let mut vertex_stars = vec![Vec::new(); self.vertices.len()];
            for (i, s) in self.simplices.iter().enumerate() {
                for f in s.facets() {
                    let j = self.index[&f];
                    faces[i].push(j);
                    cofaces[j].push(i);
                }
                for &v in s.vertices() {
                    let p = self.vertices.binary_search(&v).expect("vertex present");
                    vertex_stars[p].push(i);
                }
            }
            for c in &mut cofaces {
                c.sort_unstable();
            }
            Incidence { faces, cofaces, vertex_stars }
        })
    }

    /// Codimension-one faces of simplex `i`, ordered by deleted position.
    pub fn faces(&self, i: usize) -> &[usize] {
        &self.incidence().faces[i]
    }

    /// Codimension-one cofaces of simplex `i`, ascending.
    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.incidence().cofaces[i]
    }

    /// Indices of simplices containing vertex `v`, ascending.
    pub fn vertex_star(&self, v: VertexId) -> &[usize] {
        match self.vertices.binary_search(&v) {
            Ok(p) => &self.incidence().vertex_stars[p],
            Err(_) => &[],
        }
    }

    /// Indices of all simplices containing simplex `i`, ascending.
    pub fn star_indices(&self, i: usize) -> Vec<usize> {
        let verts = self.simplices[i].vertices();
        let mut lists: Vec<&[usize]> = verts.iter().map(|&v| self.vertex_star(v)).collect();
        lists.sort_by_key(|l| l.len());
        let mut acc: Vec<usize> = lists[0].to_vec();
        for l in &lists[1..] {
            acc.retain(|x| l.binary_search(x).is_ok());
        }
        acc
    }

    pub fn is_facet(&self, i: usize) -> bool {
        self.cofaces(i).is_empty()
    }

    pub fn facets(&self) -> Vec<Simplex> {
        (0..self.len()).filter(|&i| self.is_facet(i)).map(|i| self.simplices[i].clone()).collect()
    }

    pub fn full_set(&self) -> SimplexSet<'_> {
        SimplexSet::full(self)
    }

    /// Simplices whose vertices all lie in `verts`.
    pub fn induced(&self, verts: &[VertexId]) -> SimplicialComplex {
        let keep: HashSet<VertexId> = verts.iter().copied().collect();
        Self::from_closed(
            self.simplices.iter().filter(|s| s.vertices().iter().all(|v| keep.contains(v))).cloned().collect(),
        )
    }

    /// The closed complement G \ U(x) of the star of simplex `i`.
    pub fn minus_star(&self, i: usize) -> SimplicialComplex {
        let x = &self.simplices[i];
        Self::from_closed(self.simplices.iter().filter(|s| !x.is_subset(s)).cloned().collect())
    }

    /// The unit sphere S(x) of simplex `i` as a complex (the link when `x` is a vertex).
    pub fn unit_sphere_complex(&self, i: usize) -> SimplicialComplex {
        let x = &self.simplices[i];
        Self::from_closed(
            self.simplices.iter().filter(|z| !x.is_subset(z) && self.contains(&z.union(x))).cloned().collect(),
        )
    }

    /// Link of a vertex; the empty complex for an isolated vertex.
    pub fn link(&self, v: VertexId) -> Result<SimplicialComplex> {
        let i = self.vertex_index(v).ok_or(Error::MissingVertex(v))?;
        Ok(self.unit_sphere_complex(i))
    }

    pub fn skeleton(&self, k: isize) -> SimplicialComplex {
        Self::from_closed(self.simplices.iter().filter(|s| (s.dim() as isize) <= k).cloned().collect())
    }

    /// Image of the complex under a vertex map.
    pub fn map_vertices<F: FnMut(VertexId) -> VertexId>(&self, mut f: F) -> SimplicialComplex {
        Self::from_closed(self.simplices.iter().map(|s| s.map(&mut f)).collect())
    }

    /// Relabels vertices to 0..n in ascending order.
    pub fn normalized(&self) -> SimplicialComplex {
        let pos: HashMap<VertexId, VertexId> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i as VertexId)).collect();
        self.map_vertices(|v| pos[&v])
    }

    /// Disjoint union with `other` shifted above this complex's largest vertex.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let (shifted, _) = other.shifted_above(self);
        let mut all = self.simplices.clone();
        all.extend_from_slice(&shifted.simplices);
        Self::from_closed(all)
    }

    fn shifted_above(&self, base: &SimplicialComplex) -> (SimplicialComplex, BTreeMap<VertexId, VertexId>) {
        let start = base.max_vertex().map_or(0, |m| m + 1);
        let lo = self.vertices.first().copied().unwrap_or(0);
        let map: BTreeMap<VertexId, VertexId> = self.vertices.iter().map(|&v| (v, v - lo + start)).collect();
        (self.map_vertices(|v| map[&v]), map)
    }

    /// Zykov join; `other` is relabeled above this complex's vertices and the
    /// relabeling is returned.
    pub fn join_with_map(&self, other: &SimplicialComplex) -> (SimplicialComplex, BTreeMap<VertexId, VertexId>) {
        if self.is_empty() {
            let id = other.vertices.iter().map(|&v| (v, v)).collect();
            return (other.clone(), id);
        }
        let (h, map) = other.shifted_above(self);
        if h.is_empty() {
            return (self.clone(), map);
        }
        let mut all = Vec::with_capacity(self.len() + h.len() + self.len() * h.len());
        all.extend_from_slice(&self.simplices);
        all.extend_from_slice(&h.simplices);
        for x in &self.simplices {
            for y in &h.simplices {
                all.push(x.union(y));
            }
        }
        (Self::from_closed(all), map)
    }

    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        self.join_with_map(other).0
    }

    /// Join with the two-point complex; the new vertices are `max+1` and `max+2`.
    pub fn suspension(&self) -> SimplicialComplex {
        self.join(&zero_sphere())
    }

    pub fn double_suspension(&self) -> SimplicialComplex {
        self.suspension().suspension()
    }

    /// Wedge sum identifying vertex `x0` of `self` with vertex `y0` of `other`.
    pub fn wedge_sum(&self, x0: VertexId, other: &SimplicialComplex, y0: VertexId) -> Result<SimplicialComplex> {
        self.vertex_index(x0).ok_or(Error::MissingVertex(x0))?;
        other.vertex_index(y0).ok_or(Error::MissingVertex(y0))?;
        let (h, map) = other.shifted_above(self);
        let y0s = map[&y0];
        let h = h.map_vertices(|v| if v == y0s { x0 } else { v });
        let mut all = self.simplices.clone();
        all.extend_from_slice(&h.simplices);
        Ok(Self::from_closed(all))
    }
}

/// The 0-sphere {{1},{2}}.
pub fn zero_sphere() -> SimplicialComplex {
    SimplicialComplex::from_closed(vec![Simplex::vertex(1), Simplex::vertex(2)])
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.simplices.iter()).finish()
    }
}
