//! Seeded random graphs, complexes and vertex functions.
//!
//! All randomness flows from a SplitMix64 stream so that a seed fully
//! determines every generated object.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::complex::SimplicialComplex;
use crate::graph::{whitney_complex, Graph};
use crate::simplex::VertexId;

pub type SplitMix = SplitMix64;

pub fn rng(seed: u64) -> SplitMix {
    SplitMix64::seed_from_u64(seed)
}

/// Erdős–Rényi graph on vertices 1..=n, each edge kept with probability `p`.
pub fn erdos_renyi<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    let mut g = Graph::edgeless(n);
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Graph on vertices 1..=n with exactly `m` edges chosen uniformly.
pub fn random_graph_with_edges<R: Rng>(rng: &mut R, n: u32, m: usize) -> Graph {
    let mut all: Vec<(VertexId, VertexId)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::from_edges(1..=n, all).unwrap()
}

/// Whitney complex of a random graph, resampled until it has at most
/// `max_simplices` simplices.
pub fn random_complex<R: Rng>(rng: &mut R, max_simplices: usize) -> SimplicialComplex {
    loop {
        let n = rng.random_range(4..=10);
        let p = rng.random_range(0.2..0.7);
        let c = whitney_complex(&erdos_renyi(rng, n, p));
        if c.len() <= max_simplices {
            return c;
        }
    }
}

/// Distinct values 1..=n assigned to the vertices in random order; such a
/// function is injective and hence locally injective on every graph.
pub fn injective_function<R: Rng>(rng: &mut R, vertices: &[VertexId]) -> Vec<(VertexId, i64)> {
    let mut vals: Vec<i64> = (1..=vertices.len() as i64).collect();
    vals.shuffle(rng);
    vertices.iter().copied().zip(vals).collect()
}
