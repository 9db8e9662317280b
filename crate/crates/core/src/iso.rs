//! Vertex color refinement, complex isomorphism search and memo keys.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::complex::SimplicialComplex;
use crate::simplex::{Simplex, VertexId};

type Signature = (u32, Vec<Vec<u32>>);

/// Refines vertex colors of several complexes together, so color ids are
/// comparable between them. Colors never depend on vertex labels.
pub fn refine_colors(complexes: &[&SimplicialComplex]) -> Vec<HashMap<VertexId, u32>> {
    let mut colors: Vec<HashMap<VertexId, u32>> = {
        let mut table: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
        let sigs: Vec<Vec<(VertexId, Vec<usize>)>> = complexes
            .iter()
            .map(|c| {
                c.vertices()
                    .iter()
                    .map(|&v| {
                        let mut f = vec![0usize; (c.dim() + 1) as usize];
                        for &i in c.vertex_star(v) {
                            f[c.simplex(i).dim()] += 1;
                        }
                        (v, f)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            table.entry(s.1.clone()).or_insert(0);
        }
        for (k, id) in table.values_mut().enumerate() {
            *id = k as u32;
        }
        sigs.into_iter().map(|c| c.into_iter().map(|(v, f)| (v, table[&f])).collect()).collect()
    };
    let mut classes = count_classes(&colors);
    loop {
        let mut table: BTreeMap<Signature, u32> = BTreeMap::new();
        let sigs: Vec<Vec<(VertexId, Signature)>> = complexes
            .iter()
            .zip(&colors)
            .map(|(c, col)| {
                c.vertices()
                    .iter()
                    .map(|&v| {
                        let mut around: Vec<Vec<u32>> = c
                            .vertex_star(v)
                            .iter()
                            .map(|&i| {
                                let mut cs: Vec<u32> =
                                    c.simplex(i).vertices().iter().filter(|&&w| w != v).map(|w| col[w]).collect();
                                cs.sort_unstable();
                                cs
                            })
                            .collect();
                        around.sort_unstable();
                        (v, (col[&v], around))
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            table.entry(s.1.clone()).or_insert(0);
        }
        for (k, id) in table.values_mut().enumerate() {
            *id = k as u32;
        }
        colors = sigs.into_iter().map(|c| c.into_iter().map(|(v, s)| (v, table[&s])).collect()).collect();
        let now = count_classes(&colors);
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn count_classes(colors: &[HashMap<VertexId, u32>]) -> usize {
    colors.iter().flat_map(|c| c.values()).collect::<HashSet<_>>().len()
}

/// A vertex bijection carrying the simplices of `g` onto those of `h`.
pub fn find_isomorphism(g: &SimplicialComplex, h: &SimplicialComplex) -> Option<BTreeMap<VertexId, VertexId>> {
    if g.f_vector() != h.f_vector() {
        return None;
    }
    if g.is_empty() {
        return Some(BTreeMap::new());
    }
    let cols = refine_colors(&[g, h]);
    let (cg, ch) = (&cols[0], &cols[1]);
    let histogram = |c: &HashMap<VertexId, u32>| {
        let mut v: Vec<u32> = c.values().copied().collect();
        v.sort_unstable();
        v
    };
    if histogram(cg) != histogram(ch) {
        return None;
    }

    // Order: repeatedly take the vertex with most already-placed neighbors,
    // breaking ties by the rarer color.
    let mut class_size: HashMap<u32, usize> = HashMap::new();
    for c in cg.values() {
        *class_size.entry(*c).or_default() += 1;
    }
    let n = g.vertices().len();
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut placed: HashSet<VertexId> = HashSet::new();
    let mut links: HashMap<VertexId, usize> = HashMap::new();
    let nbrs = |c: &SimplicialComplex, v: VertexId| -> Vec<VertexId> {
        c.vertex_star(v)
            .iter()
            .filter_map(|&i| match c.simplex(i).vertices() {
                [a, b] => Some(if *a == v { *b } else { *a }),
                _ => None,
            })
            .collect()
    };
    while order.len() < n {
        let next = *g
            .vertices()
            .iter()
            .filter(|v| !placed.contains(v))
            .max_by_key(|v| {
                (links.get(v).copied().unwrap_or(0), std::cmp::Reverse(class_size[&cg[v]]), std::cmp::Reverse(**v))
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
        for w in nbrs(g, next) {
            *links.entry(w).or_default() += 1;
        }
    }
    let pos: HashMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Simplices to verify once their last vertex (in order) is placed.
    let mut checks: Vec<Vec<&Simplex>> = vec![Vec::new(); n];
    for s in g.simplices() {
        let last = s.vertices().iter().map(|v| pos[v]).max().unwrap();
        checks[last].push(s);
    }
    let earlier_nbr: Vec<Option<VertexId>> =
        order.iter().map(|&v| nbrs(g, v).into_iter().filter(|w| pos[w] < pos[&v]).min_by_key(|w| pos[w])).collect();

    struct Search<'a> {
        g_order: &'a [VertexId],
        checks: &'a [Vec<&'a Simplex>],
        earlier_nbr: &'a [Option<VertexId>],
        cg: &'a HashMap<VertexId, u32>,
        ch: &'a HashMap<VertexId, u32>,
        h: &'a SimplicialComplex,
        h_nbrs: HashMap<VertexId, Vec<VertexId>>,
        map: HashMap<VertexId, VertexId>,
        used: HashSet<VertexId>,
    }
    impl Search<'_> {
        fn run(&mut self, k: usize) -> bool {
            if k == self.g_order.len() {
                return true;
            }
            let v = self.g_order[k];
            let candidates: Vec<VertexId> = match self.earlier_nbr[k] {
                Some(u) => self.h_nbrs[&self.map[&u]].clone(),
                None => self.h.vertices().to_vec(),
            };
            for w in candidates {
                if self.used.contains(&w) || self.ch[&w] != self.cg[&v] {
                    continue;
                }
                self.map.insert(v, w);
                let ok = self.checks[k].iter().all(|s| self.h.contains(&s.map(|x| self.map[&x])));
                if ok {
                    self.used.insert(w);
                    if self.run(k + 1) {
                        return true;
                    }
                    self.used.remove(&w);
                }
                self.map.remove(&v);
            }
            false
        }
    }
    let mut search = Search {
        g_order: &order,
        checks: &checks,
        earlier_nbr: &earlier_nbr,
        cg,
        ch,
        h,
        h_nbrs: h.vertices().iter().map(|&v| (v, nbrs(h, v))).collect(),
        map: HashMap::new(),
        used: HashSet::new(),
    };
    search.run(0).then(|| search.map.into_iter().collect())
}

pub fn complexes_isomorphic(g: &SimplicialComplex, h: &SimplicialComplex) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Relabeled facet list after ordering vertices by refined color, then label.
///
/// Equal keys imply isomorphic complexes. Isomorphic complexes usually but
/// not always share a key, which only costs a cache miss.
pub fn memo_key(g: &SimplicialComplex) -> Vec<Vec<u32>> {
    let cols = refine_colors(&[g]).pop().unwrap();
    let mut verts: Vec<VertexId> = g.vertices().to_vec();
    verts.sort_by_key(|v| (cols[v], *v));
    let rank: HashMap<VertexId, u32> = verts.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
    let mut facets: Vec<Vec<u32>> = g
        .facets()
        .iter()
        .map(|f| {
            let mut r: Vec<u32> = f.vertices().iter().map(|v| rank[v]).collect();
            r.sort_unstable();
            r
        })
        .collect();
    facets.sort_unstable();
    facets
}
