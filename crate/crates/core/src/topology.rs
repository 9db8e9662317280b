//! The star topology on a complex.
//!
//! The stars U(x) form a basis closed under intersection: U(x) ∩ U(y) is
//! U(x ∪ y) when that union is a simplex and empty otherwise. Open sets are
//! exactly the up-sets of the face order and closed sets are subcomplexes.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::SimplexSet;
use crate::simplex::{Simplex, VertexId};

pub const DEFAULT_OPEN_LIMIT: usize = 1_000_000;

pub fn star<'a>(g: &'a SimplicialComplex, x: &Simplex) -> Result<SimplexSet<'a>> {
    Ok(SimplexSet::star(g, g.require(x)?))
}

pub fn core<'a>(g: &'a SimplicialComplex, x: &Simplex) -> Result<SimplexSet<'a>> {
    Ok(SimplexSet::core(g, g.require(x)?))
}

pub fn unit_ball<'a>(g: &'a SimplicialComplex, x: &Simplex) -> Result<SimplexSet<'a>> {
    Ok(SimplexSet::ball(g, g.require(x)?))
}

pub fn unit_sphere<'a>(g: &'a SimplicialComplex, x: &Simplex) -> Result<SimplexSet<'a>> {
    Ok(SimplexSet::sphere(g, g.require(x)?))
}

/// All stars, indexed like the simplices of the host.
pub fn star_basis(g: &SimplicialComplex) -> Vec<SimplexSet<'_>> {
    (0..g.len()).map(|i| SimplexSet::star(g, i)).collect()
}

/// The stars of a complex with intersections answered by a union lookup.
pub struct StarBasis<'a> {
    host: &'a SimplicialComplex,
    stars: Vec<SimplexSet<'a>>,
}

impl<'a> StarBasis<'a> {
    pub fn new(host: &'a SimplicialComplex) -> Self {
        StarBasis { host, stars: star_basis(host) }
    }

    pub fn host(&self) -> &'a SimplicialComplex {
        self.host
    }

    pub fn stars(&self) -> &[SimplexSet<'a>] {
        &self.stars
    }

    pub fn star(&self, x: &Simplex) -> Result<&SimplexSet<'a>> {
        Ok(&self.stars[self.host.require(x)?])
    }

    /// Index of the simplex whose star is U(x_i) ∩ U(x_j), if nonempty.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.host.index_of(&self.host.simplex(i).union(self.host.simplex(j)))
    }
}

pub struct Topology<'a> {
    host: &'a SimplicialComplex,
    opens: HashSet<FixedBitSet>,
}

impl<'a> Topology<'a> {
    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn host(&self) -> &'a SimplicialComplex {
        self.host
    }

    pub fn contains(&self, a: &SimplexSet<'_>) -> bool {
        self.opens.contains(a.bits())
    }

    /// Open sets in canonical order (by size, then bit pattern).
    pub fn opens(&self) -> Vec<SimplexSet<'a>> {
        let mut v: Vec<&FixedBitSet> = self.opens.iter().collect();
        v.sort_by(|a, b| a.count_ones(..).cmp(&b.count_ones(..)).then_with(|| a.ones().cmp(b.ones())));
        v.into_iter().map(|b| SimplexSet::from_bits(self.host, b.clone())).collect()
    }

    pub fn closed_sets(&self) -> Vec<SimplexSet<'a>> {
        self.opens().iter().map(SimplexSet::complement).collect()
    }
}

/// Closes the star basis under unions and adjoins the empty set.
pub fn enumerate_topology(g: &SimplicialComplex, limit: usize) -> Result<Topology<'_>> {
    let basis: Vec<FixedBitSet> = star_basis(g).into_iter().map(SimplexSet::into_bits).collect();
    let mut opens: HashSet<FixedBitSet> = HashSet::new();
    let mut frontier = Vec::new();
    for b in &basis {
        if opens.insert(b.clone()) {
            frontier.push(b.clone());
        }
    }
    let check = |n: usize| {
        if n > limit {
            Err(Error::LimitExceeded { limit, partial: n })
        } else {
            Ok(())
        }
    };
    check(opens.len() + 1)?;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &basis {
                if b.is_subset(a) {
                    continue;
                }
                let mut c = a.clone();
                c.union_with(b);
                if !opens.contains(&c) {
                    opens.insert(c.clone());
                    next.push(c);
                    check(opens.len() + 1)?;
                }
            }
        }
        frontier = next;
    }
    opens.insert(FixedBitSet::with_capacity(g.len()));
    Ok(Topology { host: g, opens })
}

/// Number of locally closed subsets and the total number of subsets, by
/// testing every subset. Needs at most 30 simplices.
pub fn locally_closed_count(g: &SimplicialComplex) -> (u64, u64) {
    let n = g.len();
    assert!(n <= 30, "too many subsets to enumerate");
    let down: Vec<u64> = (0..n).map(|i| SimplexSet::core(g, i).indices().fold(0u64, |m, j| m | 1 << j)).collect();
    let closure = |m: u64| {
        let mut c = 0u64;
        let mut rest = m;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            c |= down[i];
            rest &= rest - 1;
        }
        c
    };
    let total = 1u64 << n;
    let count = (0..total)
        .filter(|&m| {
            let rim = closure(m) & !m;
            closure(rim) == rim
        })
        .count() as u64;
    (count, total)
}

/// Connected components of the face-containment graph, as subcomplexes.
pub fn connected_components(g: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let n = g.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(i) = stack.pop() {
            members.push(g.simplex(i).clone());
            for &j in g.faces(i).iter().chain(g.cofaces(i)) {
                if comp[j] == usize::MAX {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        out.push(SimplicialComplex::from_closed(members));
    }
    out
}

pub fn is_connected(g: &SimplicialComplex) -> bool {
    connected_components(g).len() <= 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
}

/// Separation axioms decided with minimal neighborhoods: every open set
/// containing x contains U(x), so the stars are the only witnesses needed.
pub fn separation_report(g: &SimplicialComplex) -> SeparationReport {
    let stars = star_basis(g);
    let n = g.len();
    let mut r = SeparationReport { t0: true, t1: true, t2: true };
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let y_near_x = stars[x].contains_index(y);
            let x_near_y = stars[y].contains_index(x);
            if y_near_x && x_near_y {
                r.t0 = false;
            }
            if y_near_x {
                r.t1 = false;
            }
            if !stars[x].intersection(&stars[y]).is_empty() {
                r.t2 = false;
            }
        }
    }
    debug_assert!(r.t0);
    debug_assert_eq!(r.t1, g.dim() <= 0);
    debug_assert_eq!(r.t2, g.dim() <= 0);
    r
}

/// Dimension of the nerve of the vertex-star cover.
pub fn topological_dimension(g: &SimplicialComplex) -> Result<isize> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let cover: Vec<SimplexSet<'_>> =
        g.vertices().iter().map(|&v| SimplexSet::star(g, g.vertex_index(v).unwrap())).collect();
    // Maximal nerve simplices are the sets of cover members sharing a point.
    let d = (0..g.len()).map(|z| cover.iter().filter(|u| u.contains_index(z)).count()).max().unwrap() as isize - 1;
    debug_assert_eq!(d, g.dim());
    Ok(d)
}

/// Intersection graph of a cover; vertex `j` is `cover[j]`.
pub fn cech_nerve_graph(g: &SimplicialComplex, cover: &[SimplexSet<'_>]) -> Result<Graph> {
    let mut union = SimplexSet::empty(g);
    for u in cover {
        union = union.union(u);
    }
    if union != SimplexSet::full(g) {
        return Err(Error::NotACover);
    }
    let mut out = Graph::from_edges(0..cover.len() as VertexId, [])?;
    for i in 0..cover.len() {
        for j in i + 1..cover.len() {
            if !cover[i].intersection(&cover[j]).is_empty() {
                out.add_edge(i as VertexId, j as VertexId)?;
            }
        }
    }
    Ok(out)
}
