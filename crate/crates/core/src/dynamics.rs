//! Simplex maps, continuity, Koopman matrices and Lefschetz numbers.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hodge::{exterior_derivative, hodge_blocks};
use crate::linalg::{kernel_basis, trace_on_subspace, IntMatrix};
use crate::set::SimplexSet;
use crate::simplex::{Simplex, VertexId};

/// A total map from the simplices of a source to those of a target,
/// stored as target indices in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexMap {
    images: Vec<usize>,
}

impl SimplexMap {
    pub fn new<'a, I>(g: &SimplicialComplex, h: &SimplicialComplex, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Simplex, &'a Simplex)>,
    {
        let mut images = vec![usize::MAX; g.len()];
        for (x, y) in pairs {
            images[g.require(x)?] = h.require(y)?;
        }
        if let Some(i) = images.iter().position(|&v| v == usize::MAX) {
            return Err(Error::NotTotal(g.simplex(i).to_string()));
        }
        Ok(SimplexMap { images })
    }

    pub fn from_indices(images: Vec<usize>) -> Self {
        SimplexMap { images }
    }

    pub fn identity(g: &SimplicialComplex) -> Self {
        SimplexMap { images: (0..g.len()).collect() }
    }

    pub fn constant(g: &SimplicialComplex, h: &SimplicialComplex, y: &Simplex) -> Result<Self> {
        let j = h.require(y)?;
        Ok(SimplexMap { images: vec![j; g.len()] })
    }

    /// The map x ↦ f(x) induced by a vertex map. Fails when some image
    /// vertex set is not a simplex of `h`.
    pub fn from_vertex_map(
        g: &SimplicialComplex,
        h: &SimplicialComplex,
        f: &BTreeMap<VertexId, VertexId>,
    ) -> Result<Self> {
        let images = g
            .simplices()
            .iter()
            .map(|x| {
                let verts = x
                    .vertices()
                    .iter()
                    .map(|v| f.get(v).copied().ok_or_else(|| Error::NotTotal(format!("({v})"))))
                    .collect::<Result<Vec<_>>>()?;
                h.require(&Simplex::new(verts)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplexMap { images })
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn compose(&self, after: &SimplexMap) -> SimplexMap {
        SimplexMap { images: self.images.iter().map(|&j| after.images[j]).collect() }
    }

    fn check_total(&self, g: &SimplicialComplex, h: &SimplicialComplex) -> Result<()> {
        if self.images.len() != g.len() {
            return Err(Error::NotTotal(format!("{} of {} simplices", self.images.len(), g.len())));
        }
        if self.images.iter().any(|&j| j >= h.len()) {
            return Err(Error::NotTotal("image outside the target".into()));
        }
        Ok(())
    }
}

/// Preimage of a target set, as a set in the source.
pub fn preimage<'a>(f: &SimplexMap, g: &'a SimplicialComplex, a: &SimplexSet<'_>) -> SimplexSet<'a> {
    SimplexSet::from_indices(g, (0..g.len()).filter(|&i| a.contains_index(f.image(i))))
}

/// Every star of the target pulls back to an open set.
pub fn is_continuous(f: &SimplexMap, g: &SimplicialComplex, h: &SimplicialComplex) -> Result<bool> {
    f.check_total(g, h)?;
    Ok((0..h.len()).all(|j| preimage(f, g, &SimplexSet::star(h, j)).is_open()))
}

/// Vertices go to vertices and every simplex goes to the union of the images
/// of its vertices.
pub fn is_simplicial(f: &SimplexMap, g: &SimplicialComplex, h: &SimplicialComplex) -> Result<bool> {
    f.check_total(g, h)?;
    let vertex_image = |v: VertexId| h.simplex(f.image(g.vertex_index(v).unwrap()));
    if g.vertices().iter().any(|&v| vertex_image(v).len() != 1) {
        return Ok(false);
    }
    Ok(g.simplices().iter().enumerate().all(|(i, x)| {
        let u = Simplex::new(x.vertices().iter().map(|&v| vertex_image(v).vertices()[0])).unwrap();
        u == *h.simplex(f.image(i))
    }))
}

/// Sign of the vertex correspondence x → f(x), if the vertices of x map to
/// distinct vertices filling out f(x).
pub fn orientation_sign(f: &SimplexMap, g: &SimplicialComplex, h: &SimplicialComplex, i: usize) -> Option<i64> {
    let x = g.simplex(i);
    let y = h.simplex(f.image(i));
    if x.len() != y.len() {
        return None;
    }
    let mut targets = Vec::with_capacity(x.len());
    for &v in x.vertices() {
        let img = h.simplex(f.image(g.vertex_index(v)?));
        if img.len() != 1 {
            return None;
        }
        targets.push(y.position(img.vertices()[0])?);
    }
    let mut seen = vec![false; y.len()];
    for &t in &targets {
        if std::mem::replace(&mut seen[t], true) {
            return None;
        }
    }
    let inversions = (0..targets.len())
        .flat_map(|a| (a + 1..targets.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| targets[a] > targets[b])
        .count();
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

/// K[x][f(x)] = sign(f|x) where the orientation sign is defined, else 0.
pub fn koopman(f: &SimplexMap, g: &SimplicialComplex) -> IntMatrix {
    let n = g.len();
    let mut k = IntMatrix::zeros(n, n);
    for i in 0..n {
        if let Some(s) = orientation_sign(f, g, g, i) {
            k.set(i, f.image(i), s);
        }
    }
    k
}

pub fn fixed_simplices(f: &SimplexMap) -> Vec<usize> {
    (0..f.len()).filter(|&i| f.image(i) == i).collect()
}

/// Σ over fixed simplices of ω(x)·sign(f|x).
pub fn fixed_point_index_sum(f: &SimplexMap, g: &SimplicialComplex) -> i64 {
    fixed_simplices(f).into_iter().map(|i| g.omega(i) * orientation_sign(f, g, g, i).unwrap_or(0)).sum()
}

/// The Koopman matrix commutes with the exterior derivative, so it acts on
/// cohomology. Simplicial maps always qualify.
pub fn is_chain_map(f: &SimplexMap, g: &SimplicialComplex) -> bool {
    let k = koopman(f, g);
    let d = exterior_derivative(g);
    d.mul(&k) == k.mul(&d)
}

/// Σ_k (−1)^k tr(K on the harmonic k-forms), for continuous maps whose
/// Koopman matrix is a chain map.
pub fn lefschetz_number(f: &SimplexMap, g: &SimplicialComplex) -> Result<i64> {
    if !is_continuous(f, g, g)? {
        return Err(Error::NotContinuous);
    }
    if !is_chain_map(f, g) {
        return Err(Error::NotChainMap);
    }
    let k = koopman(f, g);
    let mut total = num_rational::BigRational::default();
    for (dim, block) in hodge_blocks(g).iter().enumerate() {
        let r = g.dim_range(dim);
        let harmonic = kernel_basis(block);
        let t = trace_on_subspace(&harmonic, &k.block(r.clone(), r));
        if dim % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    // a chain map preserves the integer lattice of cocycles
    debug_assert!(total.is_integer());
    Ok(total.to_integer().to_i64().unwrap())
}

pub fn lefschetz_check(f: &SimplexMap, g: &SimplicialComplex) -> Result<bool> {
    Ok(lefschetz_number(f, g)? == fixed_point_index_sum(f, g))
}

/// A random order-preserving self-map. Vertex images are drawn so that
/// adjacent vertices land in a common simplex; higher simplices then map to
/// a random simplex containing the images of their faces, often the union
/// itself. Restarts on dead ends.
pub fn random_monotone_map<R: Rng>(rng: &mut R, g: &SimplicialComplex) -> SimplexMap {
    assert!(!g.is_empty());
    let n = g.len();
    'attempt: loop {
        let mut images = vec![usize::MAX; n];
        let nv = g.vertices().len();
        // vertices occupy the first indices in canonical order
        let mut order: Vec<usize> = (0..nv).collect();
        order.shuffle(rng);
        let mut candidates: Vec<usize> = (0..n).collect();
        for &v in &order {
            candidates.shuffle(rng);
            let nbrs: Vec<usize> = g
                .star_indices(v)
                .iter()
                .filter(|&&e| g.simplex(e).len() == 2)
                .map(|&e| {
                    let w = g.simplex(e).vertices().iter().copied().find(|&w| w != g.simplex(v).vertices()[0]).unwrap();
                    g.vertex_index(w).unwrap()
                })
                .filter(|&w| images[w] != usize::MAX)
                .collect();
            let pick = candidates
                .iter()
                .copied()
                .find(|&c| nbrs.iter().all(|&w| g.contains(&g.simplex(c).union(g.simplex(images[w])))));
            match pick {
                Some(c) => images[v] = c,
                None => continue 'attempt,
            }
        }
        for i in nv..n {
            let mut u = g.simplex(images[g.faces(i)[0]]).clone();
            for &f in &g.faces(i)[1..] {
                u = u.union(g.simplex(images[f]));
            }
            let Some(base) = g.index_of(&u) else {
                continue 'attempt;
            };
            images[i] = if rng.random_bool(0.5) {
                base
            } else {
                let star = g.star_indices(base);
                star[rng.random_range(0..star.len())]
            };
        }
        return SimplexMap { images };
    }
}

/// All continuous graph self-maps lifted to simplex maps.
pub fn graph_endomorphisms(g: &SimplicialComplex) -> Vec<SimplexMap> {
    let verts = g.vertices().to_vec();
    let n = verts.len();
    let total = n.checked_pow(n as u32).expect("too many vertex maps");
    (0..total)
        .filter_map(|mut code| {
            let f: BTreeMap<VertexId, VertexId> = verts
                .iter()
                .map(|&v| {
                    let w = verts[code % n];
                    code /= n;
                    (v, w)
                })
                .collect();
            SimplexMap::from_vertex_map(g, g, &f).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{barycentric_refine, is_continuous_graph_map, whitney_complex, Graph};
    use crate::random::rng;
    use crate::registry;

    fn sx(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    /// Oracle: x ⊆ y implies f(x) ⊆ f(y).
    fn is_monotone(f: &SimplexMap, g: &SimplicialComplex, h: &SimplicialComplex) -> bool {
        (0..g.len()).all(|i| {
            (0..g.len()).all(|j| {
                !g.simplex(i).is_subset(g.simplex(j)) || h.simplex(f.image(i)).is_subset(h.simplex(f.image(j)))
            })
        })
    }

    #[test]
    fn continuity_examples() {
        let k3 = registry::lookup("complete:3").unwrap();
        let c = SimplexMap::constant(&k3, &k3, &sx(&[1, 2, 3])).unwrap();
        assert!(is_continuous(&c, &k3, &k3).unwrap());
        assert!(!is_simplicial(&c, &k3, &k3).unwrap());

        let c8 = whitney_complex(&Graph::cycle(8));
        let c4 = whitney_complex(&Graph::cycle(4));
        let wrap: BTreeMap<u32, u32> = (1..=8).map(|v| (v, (v - 1) % 4 + 1)).collect();
        let f = SimplexMap::from_vertex_map(&c8, &c4, &wrap).unwrap();
        assert!(is_continuous(&f, &c8, &c4).unwrap());
        assert!(is_simplicial(&f, &c8, &c4).unwrap());

        let k2 = registry::lookup("complete:2").unwrap();
        let (a, e) = (k2.index_of(&sx(&[1])).unwrap(), k2.index_of(&sx(&[1, 2])).unwrap());
        let mut images: Vec<usize> = (0..k2.len()).collect();
        images.swap(a, e);
        let swap = SimplexMap::from_indices(images);
        assert!(!is_continuous(&swap, &k2, &k2).unwrap());
        assert!(SimplexMap::new(&k2, &k2, [(&sx(&[1]), &sx(&[1]))]).is_err());
    }

    #[test]
    fn continuity_is_monotonicity() {
        let g = registry::lookup("complete:3").unwrap();
        let mut r = rng(6);
        for _ in 0..300 {
            let f = SimplexMap::from_indices((0..g.len()).map(|_| r.random_range(0..g.len())).collect());
            assert_eq!(is_continuous(&f, &g, &g).unwrap(), is_monotone(&f, &g, &g));
        }
        let b = barycentric_refine(&g);
        for _ in 0..30 {
            let f = random_monotone_map(&mut r, &b);
            assert!(is_monotone(&f, &b, &b));
        }
    }

    #[test]
    fn koopman_examples() {
        let c4 = registry::lookup("cycle:4").unwrap();
        let id = SimplexMap::identity(&c4);
        assert_eq!(koopman(&id, &c4), IntMatrix::identity(c4.len()));
        let rot: BTreeMap<u32, u32> = (1..=4).map(|v| (v, v % 4 + 1)).collect();
        let f = SimplexMap::from_vertex_map(&c4, &c4, &rot).unwrap();
        let k = koopman(&f, &c4);
        assert_eq!(k.trace(), 0);
        assert!(fixed_simplices(&f).is_empty());
        assert_eq!(lefschetz_number(&f, &c4).unwrap(), 0);
        // reflection through vertices 1 and 3 fixes them and no edge
        let refl: BTreeMap<u32, u32> = [(1, 1), (2, 4), (3, 3), (4, 2)].into_iter().collect();
        let f = SimplexMap::from_vertex_map(&c4, &c4, &refl).unwrap();
        assert_eq!(fixed_point_index_sum(&f, &c4), 2);
        assert_eq!(lefschetz_number(&f, &c4).unwrap(), 2);
        // reflection through two edge midpoints swaps the ends of edges 12 and 34
        let refl: BTreeMap<u32, u32> = [(1, 2), (2, 1), (3, 4), (4, 3)].into_iter().collect();
        let f = SimplexMap::from_vertex_map(&c4, &c4, &refl).unwrap();
        assert_eq!(fixed_point_index_sum(&f, &c4), 2);
        assert_eq!(lefschetz_number(&f, &c4).unwrap(), 2);
    }

    #[test]
    fn lefschetz_on_identities() {
        for (key, g) in registry::standard() {
            if g.len() > 150 {
                continue;
            }
            let id = SimplexMap::identity(&g);
            assert_eq!(lefschetz_number(&id, &g).unwrap(), g.euler(), "{key}");
            assert!(lefschetz_check(&id, &g).unwrap());
        }
    }

    #[test]
    fn lefschetz_on_endomorphisms() {
        for key in ["cycle:4", "complete:3"] {
            let g = registry::lookup(key).unwrap();
            let maps = graph_endomorphisms(&g);
            let graph = Graph::skeleton_of(&g);
            let expected = (0..g.vertices().len().pow(g.vertices().len() as u32))
                .filter(|&code| {
                    let mut c = code;
                    let n = g.vertices().len();
                    let f: BTreeMap<u32, u32> = g
                        .vertices()
                        .iter()
                        .map(|&v| {
                            let w = g.vertices()[c % n];
                            c /= n;
                            (v, w)
                        })
                        .collect();
                    is_continuous_graph_map(&f, &graph, &graph).unwrap()
                })
                .count();
            assert_eq!(maps.len(), expected, "{key}");
            for f in maps {
                assert!(is_simplicial(&f, &g, &g).unwrap());
                assert!(lefschetz_check(&f, &g).unwrap(), "{key} {f:?}");
            }
        }
    }

    #[test]
    fn ball_maps_have_fixed_simplices() {
        let b = barycentric_refine(&registry::lookup("complete:3").unwrap());
        let mut r = rng(1);
        for _ in 0..50 {
            let f = random_monotone_map(&mut r, &b);
            assert!(!fixed_simplices(&f).is_empty());
            if is_chain_map(&f, &b) {
                assert!(lefschetz_check(&f, &b).unwrap());
            }
        }
    }

    #[test]
    fn maps_off_the_chain_level_are_rejected() {
        // a vertex sent onto the edge it spans with the other vertex
        let k2 = registry::lookup("complete:2").unwrap();
        let f = SimplexMap::from_indices(vec![2, 1, 2]);
        assert!(is_continuous(&f, &k2, &k2).unwrap());
        assert!(!is_chain_map(&f, &k2));
        assert_eq!(lefschetz_number(&f, &k2), Err(Error::NotChainMap));
    }

    #[test]
    fn non_continuous_maps_are_rejected() {
        let k2 = registry::lookup("complete:2").unwrap();
        let f = SimplexMap::from_indices(vec![2, 2, 0]);
        assert_eq!(lefschetz_number(&f, &k2), Err(Error::NotContinuous));
    }
}
