//! Recursive recognition of contractible complexes, spheres, balls and
//! manifolds through vertex links.
//!
//! A complex is contractible if it is a point, or if some vertex has a
//! contractible link whose removal (deleting the open star) leaves a
//! contractible complex. A d-sphere is a d-manifold that becomes contractible
//! after removing one vertex star; a d-manifold has (d−1)-spheres as vertex
//! links. The empty complex is the (−1)-sphere.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::complex::SimplicialComplex;
use crate::iso::memo_key;
use crate::simplex::{Simplex, VertexId};

#[derive(Clone, Copy, Default, Debug)]
struct Verdicts {
    contractible: Option<bool>,
    sphere: Option<Option<isize>>,
    manifold: Option<Option<isize>>,
    ball: Option<Option<isize>>,
}

type Key = Vec<Vec<u32>>;

/// Verdicts memoized on an isomorphism key. Safe to share between threads;
/// the lock is never held across a recursive call.
#[derive(Default)]
pub struct RecognitionCache {
    memo: Mutex<HashMap<Key, Verdicts>>,
}

// Complexes this small are decided faster than their key is computed.
const MEMO_MIN_VERTICES: usize = 5;

fn sign(d: isize) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn star_index(g: &SimplicialComplex, v: VertexId) -> usize {
    g.index_of(&Simplex::vertex(v)).expect("vertex of the complex")
}

fn link(g: &SimplicialComplex, v: VertexId) -> SimplicialComplex {
    g.unit_sphere_complex(star_index(g, v))
}

fn delete_vertex(g: &SimplicialComplex, v: VertexId) -> SimplicialComplex {
    g.minus_star(star_index(g, v))
}

/// Some vertex lies in every facet.
fn is_cone(g: &SimplicialComplex) -> bool {
    let facets = g.facets();
    g.vertices().iter().any(|&v| facets.iter().all(|f| f.contains_vertex(v)))
}

fn is_connected(g: &SimplicialComplex) -> bool {
    let verts = g.vertices();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut parts = verts.len();
    for s in g.simplices().iter().filter(|s| s.len() == 2) {
        let a = find(&mut parent, g.vertex_index(s.vertices()[0]).unwrap());
        let b = find(&mut parent, g.vertex_index(s.vertices()[1]).unwrap());
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts <= 1
}

/// Vertices by ascending star size, then label.
fn by_degree(g: &SimplicialComplex) -> Vec<VertexId> {
    let mut verts = g.vertices().to_vec();
    verts.sort_by_key(|&v| (g.vertex_star(v).len(), v));
    verts
}

/// Closure of the (d−1)-simplices lying in exactly one d-simplex.
pub fn boundary(g: &SimplicialComplex) -> SimplicialComplex {
    let d = g.dim();
    if d < 1 {
        return SimplicialComplex::empty();
    }
    let faces: Vec<&Simplex> =
        g.dim_range(d as usize - 1).filter(|&i| g.cofaces(i).len() == 1).map(|i| g.simplex(i)).collect();
    SimplicialComplex::closure_of(faces)
}

impl RecognitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache used by the free functions of this module.
    pub fn global() -> &'static RecognitionCache {
        static CACHE: OnceLock<RecognitionCache> = OnceLock::new();
        CACHE.get_or_init(RecognitionCache::new)
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.memo.lock().unwrap().clear();
    }

    fn key(g: &SimplicialComplex) -> Option<Key> {
        (g.vertices().len() >= MEMO_MIN_VERTICES).then(|| memo_key(g))
    }

    fn cached<T>(
        &self,
        g: &SimplicialComplex,
        get: impl Fn(&Verdicts) -> Option<T>,
        put: impl Fn(&mut Verdicts, T),
        compute: impl FnOnce() -> T,
    ) -> T
    where
        T: Copy,
    {
        let Some(key) = Self::key(g) else {
            return compute();
        };
        if let Some(v) = self.memo.lock().unwrap().get(&key).and_then(&get) {
            return v;
        }
        let v = compute();
        put(self.memo.lock().unwrap().entry(key).or_default(), v);
        v
    }

    pub fn is_contractible(&self, g: &SimplicialComplex) -> bool {
        match g.vertices().len() {
            0 => return false,
            1 => return true,
            _ => {}
        }
        if g.euler() != 1 {
            return false;
        }
        if is_cone(g) {
            return true;
        }
        if !is_connected(g) {
            return false;
        }
        self.cached(
            g,
            |v| v.contractible,
            |v, x| v.contractible = Some(x),
            || {
                by_degree(g)
                    .into_iter()
                    .any(|v| self.is_contractible(&link(g, v)) && self.is_contractible(&delete_vertex(g, v)))
            },
        )
    }

    pub fn is_sphere(&self, g: &SimplicialComplex) -> Option<isize> {
        if g.is_empty() {
            return Some(-1);
        }
        let d = g.dim();
        if g.euler() != 1 + sign(d) {
            return None;
        }
        self.cached(
            g,
            |v| v.sphere,
            |v, x| v.sphere = Some(x),
            || {
                let found = self.is_manifold(g) == Some(d)
                    && by_degree(g).into_iter().any(|v| self.is_contractible(&delete_vertex(g, v)));
                found.then_some(d)
            },
        )
    }

    pub fn is_manifold(&self, g: &SimplicialComplex) -> Option<isize> {
        if g.is_empty() {
            return Some(-1);
        }
        let d = g.dim();
        self.cached(
            g,
            |v| v.manifold,
            |v, x| v.manifold = Some(x),
            || g.vertices().iter().all(|&v| self.is_sphere(&link(g, v)) == Some(d - 1)).then_some(d),
        )
    }

    /// Every vertex link is a (d−1)-sphere or a (d−1)-ball. Returns d and the
    /// boundary, which is empty for a manifold.
    pub fn is_manifold_with_boundary(&self, g: &SimplicialComplex) -> Option<(isize, SimplicialComplex)> {
        if g.is_empty() {
            return Some((-1, SimplicialComplex::empty()));
        }
        let d = g.dim();
        let ok = g.vertices().iter().all(|&v| {
            let l = link(g, v);
            self.is_sphere(&l) == Some(d - 1) || self.is_ball(&l) == Some(d - 1)
        });
        ok.then(|| (d, boundary(g)))
    }

    /// A d-manifold with boundary that is contractible and whose boundary is
    /// a (d−1)-sphere.
    pub fn is_ball(&self, g: &SimplicialComplex) -> Option<isize> {
        if g.is_empty() || g.euler() != 1 {
            return None;
        }
        self.cached(
            g,
            |v| v.ball,
            |v, x| v.ball = Some(x),
            || {
                let (d, bd) = self.is_manifold_with_boundary(g)?;
                (self.is_sphere(&bd) == Some(d - 1) && self.is_contractible(g)).then_some(d)
            },
        )
    }
}

pub fn is_contractible(g: &SimplicialComplex) -> bool {
    RecognitionCache::global().is_contractible(g)
}

pub fn is_sphere(g: &SimplicialComplex) -> Option<isize> {
    RecognitionCache::global().is_sphere(g)
}

pub fn is_manifold(g: &SimplicialComplex) -> Option<isize> {
    RecognitionCache::global().is_manifold(g)
}

pub fn is_manifold_with_boundary(g: &SimplicialComplex) -> Option<(isize, SimplicialComplex)> {
    RecognitionCache::global().is_manifold_with_boundary(g)
}

pub fn is_ball(g: &SimplicialComplex) -> Option<isize> {
    RecognitionCache::global().is_ball(g)
}

/// Membership in the Dehn–Sommerville class of dimension d: the empty complex
/// for d = −1, otherwise nonempty with χ = 1 + (−1)^d and every vertex link in
/// the class of dimension d − 1.
pub fn is_dehn_sommerville(g: &SimplicialComplex, d: isize) -> bool {
    if d < 0 {
        return d == -1 && g.is_empty();
    }
    !g.is_empty() && g.euler() == 1 + sign(d) && g.vertices().iter().all(|&v| is_dehn_sommerville(&link(g, v), d - 1))
}
