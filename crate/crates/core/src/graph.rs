//! Finite simple graphs and the functors between graphs and complexes.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    /// Adds an edge, creating missing endpoints.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj.entry(a).or_default().insert(b);
        self.adj.entry(b).or_default().insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if !self.has_edge(a, b) {
            return Err(Error::EdgeAbsent(a, b));
        }
        self.adj.get_mut(&a).unwrap().remove(&b);
        self.adj.get_mut(&b).unwrap().remove(&a);
        Ok(())
    }

    /// Cycle on vertices 1..=n.
    pub fn cycle(n: u32) -> Self {
        let mut g = Self::path(n);
        if n > 2 {
            g.add_edge(n, 1).unwrap();
        }
        g
    }

    /// Path on vertices 1..=n.
    pub fn path(n: u32) -> Self {
        Graph::from_edges(1..=n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    /// Complete graph on vertices 1..=n.
    pub fn complete(n: u32) -> Self {
        Graph::from_edges(1..=n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))).unwrap()
    }

    /// Star with hub 0 and leaves 1..=n.
    pub fn star(n: u32) -> Self {
        Graph::from_edges(0..=n, (1..=n).map(|i| (0, i))).unwrap()
    }

    /// Wheel: hub 0 joined to the cycle 1..=n.
    pub fn wheel(n: u32) -> Self {
        let mut g = Self::cycle(n);
        for i in 1..=n {
            g.add_edge(0, i).unwrap();
        }
        g
    }

    pub fn edgeless(n: u32) -> Self {
        Graph::from_edges(1..=n, []).unwrap()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adj.iter().flat_map(|(&a, n)| n.range(a + 1..).map(move |&b| (a, b))).collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    pub fn induced<I: IntoIterator<Item = VertexId>>(&self, verts: I) -> Graph {
        let keep: BTreeSet<VertexId> = verts.into_iter().filter(|v| self.contains_vertex(*v)).collect();
        let adj = keep.iter().map(|&v| (v, self.adj[&v].intersection(&keep).copied().collect())).collect();
        Graph { adj }
    }

    /// The unit sphere of a vertex: the subgraph induced by its neighbors.
    pub fn unit_sphere(&self, v: VertexId) -> Graph {
        self.induced(self.neighbors(v).collect::<Vec<_>>())
    }

    pub fn complement(&self) -> Graph {
        let verts: Vec<VertexId> = self.vertices().collect();
        let mut g = Graph::from_edges(verts.iter().copied(), []).unwrap();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    /// The 1-skeleton of a complex.
    pub fn skeleton_of(g: &SimplicialComplex) -> Graph {
        let mut out = Graph::new();
        for s in g.simplices() {
            match s.vertices() {
                [v] => out.add_vertex(*v),
                [a, b] => out.add_edge(*a, *b).unwrap(),
                _ => break,
            }
        }
        out
    }
}

/// The complex of all cliques.
pub fn whitney_complex(g: &Graph) -> SimplicialComplex {
    fn extend(g: &Graph, clique: &mut Vec<VertexId>, candidates: &[VertexId], out: &mut Vec<Simplex>) {
        for (i, &v) in candidates.iter().enumerate() {
            clique.push(v);
            out.push(Simplex::from_sorted(clique));
            let next: Vec<VertexId> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            extend(g, clique, &next, out);
            clique.pop();
        }
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), &verts, &mut out);
    SimplicialComplex::from_closed(out)
}

/// The comparability graph G₁: one vertex per simplex (labeled by its
/// canonical index), edges for strict containment.
pub fn complex_to_graph(g: &SimplicialComplex) -> Graph {
    let mut out = Graph::from_edges(0..g.len() as VertexId, []).unwrap();
    for (i, s) in g.simplices().iter().enumerate() {
        for sub in s.subsets() {
            if sub.len() < s.len() {
                let j = g.index_of(&sub).expect("complex is closed");
                out.add_edge(i as VertexId, j as VertexId).unwrap();
            }
        }
    }
    out
}

/// Whitney complex of the comparability graph; vertex `i` is simplex `i` of `g`.
pub fn barycentric_refine(g: &SimplicialComplex) -> SimplicialComplex {
    // Cliques of a comparability graph are chains, generated directly.
    // Indices grow with dimension, so a chain listed bottom-up is already sorted.
    let above: Vec<Vec<usize>> =
        (0..g.len()).map(|i| g.star_indices(i).into_iter().filter(|&j| j != i).collect()).collect();
    fn grow(above: &[Vec<usize>], chain: &mut Vec<VertexId>, out: &mut Vec<Simplex>) {
        let top = *chain.last().unwrap() as usize;
        for &c in &above[top] {
            chain.push(c as VertexId);
            out.push(Simplex::from_sorted(chain));
            grow(above, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    let mut chain = Vec::new();
    for i in 0..g.len() {
        chain.push(i as VertexId);
        out.push(Simplex::vertex(i as VertexId));
        grow(&above, &mut chain, &mut out);
        chain.pop();
    }
    SimplicialComplex::from_closed(out)
}

/// Subdivides edge `(a, b)` by a new vertex joined to `a`, `b` and their
/// common neighbors. Returns the graph and the new vertex.
pub fn edge_refine(g: &Graph, a: VertexId, b: VertexId) -> Result<(Graph, VertexId)> {
    if !g.has_edge(a, b) {
        return Err(Error::EdgeAbsent(a, b));
    }
    let v = g.max_vertex().unwrap() + 1;
    let common: Vec<VertexId> = g.neighbors(a).filter(|&w| g.has_edge(b, w)).collect();
    let mut out = g.clone();
    out.remove_edge(a, b)?;
    out.add_edge(v, a)?;
    out.add_edge(v, b)?;
    for w in common {
        out.add_edge(v, w)?;
    }
    Ok((out, v))
}

/// Shannon (strong) product. Vertex `k` of the result is the pair `pairs[k]`.
pub fn shannon_product(g: &Graph, h: &Graph) -> (Graph, Vec<(VertexId, VertexId)>) {
    let pairs: Vec<(VertexId, VertexId)> = g.vertices().flat_map(|a| h.vertices().map(move |b| (a, b))).collect();
    let mut out = Graph::from_edges(0..pairs.len() as VertexId, []).unwrap();
    let close = |gr: &Graph, x: VertexId, y: VertexId| x == y || gr.has_edge(x, y);
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if close(g, a, c) && close(h, b, d) {
                out.add_edge(i as VertexId, j as VertexId).unwrap();
            }
        }
    }
    (out, pairs)
}

/// Whitney complex of the graph on simplex pairs joined by componentwise
/// containment. Vertex `i * |H| + j` stands for the pair (x_i, y_j).
pub fn stanley_reisner_product(g: &SimplicialComplex, h: &SimplicialComplex) -> SimplicialComplex {
    let (n, m) = (g.len(), h.len());
    let id = |i: usize, j: usize| (i * m + j) as VertexId;
    let mut out = Graph::from_edges((0..n * m).map(|k| k as VertexId), []).unwrap();
    // For each pair, connect to all pairs of faces (one-way containment).
    let faces_g: Vec<Vec<usize>> =
        g.simplices().iter().map(|s| s.subsets().iter().map(|f| g.index_of(f).unwrap()).collect()).collect();
    let faces_h: Vec<Vec<usize>> =
        h.simplices().iter().map(|s| s.subsets().iter().map(|f| h.index_of(f).unwrap()).collect()).collect();
    for i in 0..n {
        for j in 0..m {
            for &fi in &faces_g[i] {
                for &fj in &faces_h[j] {
                    if (fi, fj) != (i, j) {
                        out.add_edge(id(i, j), id(fi, fj)).unwrap();
                    }
                }
            }
        }
    }
    whitney_complex(&out)
}

#[derive(Clone, Debug)]
pub struct Quotient {
    /// Vertices are labeled by the smallest member of their class.
    pub graph: Graph,
    /// Set when some edge joined two vertices of one class and was dropped.
    pub collapsed_edges: bool,
    pub class_of: BTreeMap<VertexId, VertexId>,
}

impl Quotient {
    /// χ(G/A)·|A| = χ(G) when all classes have the common size |A|;
    /// `None` when class sizes differ.
    pub fn riemann_hurwitz(&self, original: &Graph) -> Option<bool> {
        let mut sizes: BTreeMap<VertexId, i64> = BTreeMap::new();
        for &c in self.class_of.values() {
            *sizes.entry(c).or_default() += 1;
        }
        let k = *sizes.values().next()?;
        if sizes.values().any(|&s| s != k) {
            return None;
        }
        Some(whitney_complex(&self.graph).euler() * k == whitney_complex(original).euler())
    }
}

pub fn quotient(g: &Graph, classes: &[Vec<VertexId>]) -> Result<Quotient> {
    let mut class_of = BTreeMap::new();
    for class in classes {
        let rep = *class.iter().min().ok_or_else(|| Error::MalformedPartition("empty class".into()))?;
        for &v in class {
            if !g.contains_vertex(v) {
                return Err(Error::MalformedPartition(format!("{v} is not a vertex")));
            }
            if class_of.insert(v, rep).is_some() {
                return Err(Error::MalformedPartition(format!("{v} appears twice")));
            }
        }
    }
    if let Some(v) = g.vertices().find(|v| !class_of.contains_key(v)) {
        return Err(Error::MalformedPartition(format!("{v} is not covered")));
    }
    let mut out = Graph::new();
    for &r in class_of.values() {
        out.add_vertex(r);
    }
    let mut collapsed = false;
    for (a, b) in g.edges() {
        let (ra, rb) = (class_of[&a], class_of[&b]);
        if ra == rb {
            collapsed = true;
        } else {
            out.add_edge(ra, rb)?;
        }
    }
    Ok(Quotient { graph: out, collapsed_edges: collapsed, class_of })
}

/// Every edge goes to an edge or is collapsed to a vertex.
pub fn is_continuous_graph_map(f: &BTreeMap<VertexId, VertexId>, g: &Graph, h: &Graph) -> Result<bool> {
    for v in g.vertices() {
        let w = f.get(&v).ok_or_else(|| Error::NotTotal(v.to_string()))?;
        if !h.contains_vertex(*w) {
            return Ok(false);
        }
    }
    Ok(g.edges().into_iter().all(|(a, b)| {
        let (x, y) = (f[&a], f[&b]);
        x == y || h.has_edge(x, y)
    }))
}
