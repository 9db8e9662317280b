//! Locally injective functions on graphs: Poincaré–Hopf indices, Morse
//! labels and level sets.
//!
//! For a vertex v, S⁻(v) is the part of the unit sphere where f is smaller
//! than f(v), taken as a Whitney complex. Functions on a complex are moved to
//! its comparability graph by averaging over vertices, with ties between
//! nested simplices broken by dimension.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{complex_to_graph, whitney_complex, Graph};
use crate::recognition::{is_contractible, is_sphere};
use crate::simplex::VertexId;

pub type VertexFunction = BTreeMap<VertexId, f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseLabel {
    /// S⁻ is a (k−1)-sphere.
    Critical(usize),
    /// S⁻ is contractible.
    Regular,
    /// S⁻ is neither.
    Irregular,
}

#[derive(Clone, Debug)]
pub struct MorseData {
    pub values: VertexFunction,
    pub labels: BTreeMap<VertexId, MorseLabel>,
    pub indices: BTreeMap<VertexId, i64>,
}

impl MorseData {
    pub fn critical_points(&self) -> Vec<(VertexId, usize)> {
        self.labels
            .iter()
            .filter_map(|(&v, l)| match l {
                MorseLabel::Critical(k) => Some((v, *k)),
                _ => None,
            })
            .collect()
    }

    pub fn index_sum(&self) -> i64 {
        self.indices.values().sum()
    }
}

fn check_total(g: &Graph, f: &VertexFunction) -> Result<()> {
    match g.vertices().find(|v| !f.contains_key(v)) {
        Some(v) => Err(Error::NotTotal(format!("no value at vertex {v}"))),
        None => Ok(()),
    }
}

pub fn check_locally_injective(g: &Graph, f: &VertexFunction) -> Result<()> {
    check_total(g, f)?;
    match g.edges().into_iter().find(|&(a, b)| f[&a] == f[&b]) {
        Some((a, b)) => Err(Error::NotLocallyInjective(a, b)),
        None => Ok(()),
    }
}

/// Whitney complex of S⁻(v).
pub fn lower_sphere(g: &Graph, f: &VertexFunction, v: VertexId) -> SimplicialComplex {
    let below: Vec<VertexId> = g.neighbors(v).filter(|w| f[w] < f[&v]).collect();
    whitney_complex(&g.induced(below))
}

/// 1 − χ(S⁻(v)).
pub fn poincare_hopf_index(g: &Graph, f: &VertexFunction, v: VertexId) -> Result<i64> {
    check_locally_injective(g, f)?;
    if !g.contains_vertex(v) {
        return Err(Error::MissingVertex(v));
    }
    Ok(1 - lower_sphere(g, f, v).euler())
}

pub fn morse_classify(g: &Graph, f: &VertexFunction) -> Result<MorseData> {
    check_locally_injective(g, f)?;
    let mut labels = BTreeMap::new();
    let mut indices = BTreeMap::new();
    for v in g.vertices() {
        let s = lower_sphere(g, f, v);
        indices.insert(v, 1 - s.euler());
        let label = match is_sphere(&s) {
            Some(d) => MorseLabel::Critical((d + 1) as usize),
            None if is_contractible(&s) => MorseLabel::Regular,
            None => MorseLabel::Irregular,
        };
        labels.insert(v, label);
    }
    let values = g.vertices().map(|v| (v, f[&v])).collect();
    Ok(MorseData { values, labels, indices })
}

/// Moves a vertex function of `g` to its comparability graph, whose vertex
/// `i` is simplex `i`. The value at a simplex is the mean over its vertices
/// plus ε·dim, with ε below every gap between distinct means, so nested
/// simplices with equal means are ordered by dimension.
pub fn lift_to_refinement(g: &SimplicialComplex, f: &VertexFunction) -> Result<(Graph, VertexFunction)> {
    if let Some(v) = g.vertices().iter().find(|v| !f.contains_key(v)) {
        return Err(Error::NotTotal(format!("no value at vertex {v}")));
    }
    let means: Vec<f64> =
        g.simplices().iter().map(|s| s.vertices().iter().map(|v| f[v]).sum::<f64>() / s.len() as f64).collect();
    let mut sorted = means.clone();
    sorted.sort_by(f64::total_cmp);
    let gap = sorted.windows(2).map(|w| w[1] - w[0]).filter(|&d| d > 0.0).fold(f64::INFINITY, f64::min);
    let gap = if gap.is_finite() { gap } else { 1.0 };
    let eps = gap / (2.0 * (g.dim().max(0) as f64 + 1.0));
    let lifted =
        g.simplices().iter().enumerate().map(|(i, s)| (i as VertexId, means[i] + eps * s.dim() as f64)).collect();
    Ok((complex_to_graph(g), lifted))
}

/// Morse data of the lifted function on the comparability graph of `g`.
pub fn morse_classify_complex(g: &SimplicialComplex, f: &VertexFunction) -> Result<MorseData> {
    let (g1, lifted) = lift_to_refinement(g, f)?;
    morse_classify(&g1, &lifted)
}

/// The graph on simplices of the Whitney complex where f takes values on both
/// sides of `c`, with edges for strict containment. Vertex `i` stands for the
/// i-th such simplex in canonical order.
pub fn level_set(g: &Graph, f: &VertexFunction, c: f64) -> Result<Graph> {
    check_total(g, f)?;
    if let Some(v) = g.vertices().find(|v| f[v] == c) {
        return Err(Error::LevelCollision(v));
    }
    let w = whitney_complex(g);
    let cut: Vec<usize> = (0..w.len())
        .filter(|&i| {
            let vs = w.simplex(i).vertices();
            vs.iter().any(|v| f[v] < c) && vs.iter().any(|v| f[v] > c)
        })
        .collect();
    let mut out = Graph::from_edges(0..cut.len() as VertexId, []).unwrap();
    for (a, &i) in cut.iter().enumerate() {
        for (b, &j) in cut.iter().enumerate().skip(a + 1) {
            let (x, y) = (w.simplex(i), w.simplex(j));
            if x.is_subset(y) || y.is_subset(x) {
                out.add_edge(a as VertexId, b as VertexId)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{injective_function, rng};
    use crate::recognition::is_manifold;
    use crate::registry;
    use rand::Rng;

    fn random_values<R: Rng>(r: &mut R, g: &Graph) -> VertexFunction {
        let verts: Vec<VertexId> = g.vertices().collect();
        injective_function(r, &verts).into_iter().map(|(v, x)| (v, x as f64)).collect()
    }

    fn values(pairs: &[(VertexId, f64)]) -> VertexFunction {
        pairs.iter().copied().collect()
    }

    /// Oracle: χ(S⁻) counted clique by clique from the neighbor list.
    fn brute_index(g: &Graph, f: &VertexFunction, v: VertexId) -> i64 {
        let below: Vec<VertexId> = g.neighbors(v).filter(|w| f[w] < f[&v]).collect();
        let mut chi = 0;
        for mask in 1u32..(1 << below.len()) {
            let s: Vec<VertexId> = (0..below.len()).filter(|&i| mask >> i & 1 == 1).map(|i| below[i]).collect();
            if s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
                chi += if s.len() % 2 == 1 { 1 } else { -1 };
            }
        }
        1 - chi
    }

    #[test]
    fn rejects_ties_on_edges() {
        let g = Graph::path(3);
        let f = values(&[(1, 1.0), (2, 1.0), (3, 0.0)]);
        assert!(matches!(morse_classify(&g, &f), Err(Error::NotLocallyInjective(1, 2))));
        assert!(matches!(poincare_hopf_index(&g, &values(&[(1, 1.0)]), 1), Err(Error::NotTotal(_))));
    }

    #[test]
    fn indices_sum_to_euler_characteristic() {
        let mut r = rng(31);
        for (key, c) in registry::standard() {
            let g = registry::lookup_graph(key).unwrap().unwrap_or_else(|| Graph::skeleton_of(&c));
            let chi = whitney_complex(&g).euler();
            for _ in 0..10 {
                let f = random_values(&mut r, &g);
                let mut sum = 0;
                for v in g.vertices() {
                    let i = poincare_hopf_index(&g, &f, v).unwrap();
                    assert_eq!(i, brute_index(&g, &f, v));
                    sum += i;
                }
                assert_eq!(sum, chi, "{key}");
            }
        }
    }

    #[test]
    fn minimum_has_index_one() {
        let g = Graph::skeleton_of(&registry::lookup("octahedron").unwrap());
        let f = random_values(&mut rng(2), &g);
        let min = *f.iter().min_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        assert_eq!(poincare_hopf_index(&g, &f, min).unwrap(), 1);
    }

    #[test]
    fn height_on_a_cycle() {
        let g = Graph::cycle(4);
        let f = values(&[(1, 0.0), (2, 1.0), (3, 2.0), (4, 1.0)]);
        let m = morse_classify(&g, &f).unwrap();
        assert_eq!(m.critical_points(), vec![(1, 0), (3, 1)]);
        assert_eq!(m.labels[&2], MorseLabel::Regular);
        assert_eq!(m.labels[&4], MorseLabel::Regular);
        assert_eq!(m.index_sum(), 0);
    }

    #[test]
    fn monotone_path_has_one_critical_point() {
        let g = Graph::path(5);
        let f: VertexFunction = g.vertices().map(|v| (v, v as f64)).collect();
        let m = morse_classify(&g, &f).unwrap();
        assert_eq!(m.critical_points().len(), 1);
        assert_eq!(m.critical_points()[0].1, 0);
    }

    #[test]
    fn irregular_label() {
        // the hub of a star graph, on top, sees three isolated points below
        let g = Graph::star(3);
        let f = values(&[(0, 5.0), (1, 1.0), (2, 2.0), (3, 3.0)]);
        let m = morse_classify(&g, &f).unwrap();
        assert_eq!(m.labels[&0], MorseLabel::Irregular);
        assert_eq!(m.indices[&0], -2);
    }

    #[test]
    fn dimension_is_morse_on_the_refinement() {
        for key in ["octahedron", "cycle:5", "complete:3"] {
            let g = registry::lookup(key).unwrap();
            let g1 = complex_to_graph(&g);
            let f: VertexFunction = (0..g.len()).map(|i| (i as VertexId, g.simplex(i).dim() as f64)).collect();
            let m = morse_classify(&g1, &f).unwrap();
            for i in 0..g.len() {
                let k = g.simplex(i).dim() as usize;
                assert_eq!(m.labels[&(i as VertexId)], MorseLabel::Critical(k));
                assert_eq!(m.indices[&(i as VertexId)], g.omega(i));
            }
        }
    }

    #[test]
    fn lifted_functions_are_locally_injective() {
        let mut r = rng(8);
        for key in ["octahedron", "figure8", "moebius"] {
            let g = registry::lookup(key).unwrap();
            // coarse values force ties between means
            let f: VertexFunction = g.vertices().iter().map(|&v| (v, r.random_range(0..3) as f64)).collect();
            let m = morse_classify_complex(&g, &f).unwrap();
            assert_eq!(m.index_sum(), g.euler(), "{key}");
        }
    }

    #[test]
    fn level_set_examples() {
        let oct = Graph::skeleton_of(&registry::lookup("octahedron").unwrap());
        let p = oct.vertices().next().unwrap();
        let f: VertexFunction = oct.vertices().map(|v| (v, if v == p { 1.0 } else { -1.0 })).collect();
        let l = level_set(&oct, &f, 0.0).unwrap();
        assert_eq!(l.vertex_count(), 8);
        assert!(l.vertices().all(|v| l.degree(v) == 2));
        assert_eq!(is_manifold(&whitney_complex(&l)), Some(1));
        assert_eq!(crate::topology::connected_components(&whitney_complex(&l)).len(), 1);

        let pos: VertexFunction = oct.vertices().map(|v| (v, 1.0 + v as f64)).collect();
        assert_eq!(level_set(&oct, &pos, 0.0).unwrap().vertex_count(), 0);

        let c4 = Graph::cycle(4);
        let alt = values(&[(1, 1.0), (2, -1.0), (3, 1.0), (4, -1.0)]);
        let l = level_set(&c4, &alt, 0.0).unwrap();
        assert_eq!((l.vertex_count(), l.edge_count()), (4, 0));
        assert_eq!(is_manifold(&whitney_complex(&l)), Some(0));

        assert!(matches!(level_set(&c4, &alt, 1.0), Err(Error::LevelCollision(1))));
    }

    #[test]
    fn level_sets_of_surfaces_are_curves() {
        let mut r = rng(77);
        let oct = Graph::skeleton_of(&registry::lookup("octahedron").unwrap());
        for _ in 0..20 {
            let f = random_values(&mut r, &oct);
            let c = r.random_range(0..7) as f64 + 0.5;
            let Ok(l) = level_set(&oct, &f, c) else { continue };
            let w = whitney_complex(&l);
            assert!(w.is_empty() || is_manifold(&w) == Some(1));
        }
    }
}
