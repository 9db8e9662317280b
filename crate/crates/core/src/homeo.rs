//! Homeomorphism testing.
//!
//! Two complexes are homeomorphic when each is a continuous image of a
//! Barycentric refinement of the other, through a map whose preimages of
//! facet stars close up to balls and whose preimages of unit spheres are
//! homeomorphic to those spheres. The test runs an invariant screen first.
//! Up to dimension one the question is decided completely by smoothing away
//! degree-2 vertices; above that a bounded search looks for witness maps.

use std::collections::BTreeMap;
use std::fmt;

use crate::characteristics::wu;
use crate::complex::SimplicialComplex;
use crate::dynamics::{is_continuous, preimage, SimplexMap};
use crate::error::{Error, Result};
use crate::graph::barycentric_refine;
use crate::hodge::betti;
use crate::iso::find_isomorphism;
use crate::recognition::{is_ball, is_manifold, is_manifold_with_boundary};
use crate::set::SimplexSet;
use crate::simplex::{Simplex, VertexId};
use crate::topology::connected_components;
use crate::wubetti::wu_betti;

/// Interaction cohomology is skipped above this many simplices.
const WU_BETTI_MAX_SIMPLICES: usize = 200;
/// Refinements stop growing past this size.
const REFINE_MAX_SIMPLICES: usize = 20_000;
/// Exhaustive map search only runs on sources and targets this small.
const MAP_SEARCH_MAX_SIMPLICES: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Homeomorphic,
    NotHomeomorphic,
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Homeomorphic => "homeomorphic",
            Outcome::NotHomeomorphic => "not_homeomorphic",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Dimension,
    Cardinality,
    Euler,
    Wu2,
    Betti,
    WuBetti,
    Components,
    ManifoldType,
    SphereSpectrum,
    NormalForm,
}

impl Invariant {
    pub fn name(&self) -> &'static str {
        match self {
            Invariant::Dimension => "dimension",
            Invariant::Cardinality => "cardinality",
            Invariant::Euler => "euler",
            Invariant::Wu2 => "wu2",
            Invariant::Betti => "betti",
            Invariant::WuBetti => "wu_betti",
            Invariant::Components => "components",
            Invariant::ManifoldType => "manifold_type",
            Invariant::SphereSpectrum => "sphere_spectrum",
            Invariant::NormalForm => "normal_form",
        }
    }

    /// The invariant's value rendered as text, or None where it is not
    /// computed (interaction cohomology of large complexes, normal forms
    /// above dimension one).
    pub fn evaluate(&self, g: &SimplicialComplex) -> Option<String> {
        Some(match self {
            Invariant::Dimension => g.dim().to_string(),
            Invariant::Cardinality => g.len().to_string(),
            Invariant::Euler => g.euler().to_string(),
            Invariant::Wu2 => wu(&SimplexSet::full(g), 2).ok()?.to_string(),
            Invariant::Betti => format!("{:?}", betti(g)),
            Invariant::WuBetti => {
                if g.len() > WU_BETTI_MAX_SIMPLICES {
                    return None;
                }
                format!("{:?}", wu_betti(g))
            }
            Invariant::Components => connected_components(g).len().to_string(),
            Invariant::ManifoldType => {
                format!("manifold {:?}, with boundary {:?}", is_manifold(g), is_manifold_with_boundary(g).map(|p| p.0))
            }
            Invariant::SphereSpectrum => format!("{:?}", sphere_spectrum(g)),
            Invariant::NormalForm => NormalForm::of(g).ok()?.to_string(),
        })
    }
}

/// The distinct Euler characteristics of the unit spheres S(x).
pub fn sphere_spectrum(g: &SimplicialComplex) -> Vec<i64> {
    let mut out: Vec<i64> = (0..g.len()).map(|i| SimplexSet::sphere(g, i).euler()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug)]
pub enum WitnessKind {
    /// The refined source is isomorphic to the target.
    Isomorphism,
    /// The refined source is isomorphic to a refinement of the target,
    /// followed by that many projections chain ↦ top element.
    Projection(usize),
    /// Found by exhaustive search over monotone maps.
    Search,
}

/// A continuous surjection from the source refined `refinements` times onto
/// the target.
#[derive(Clone, Debug)]
pub struct Witness {
    pub refinements: usize,
    pub kind: WitnessKind,
    pub map: SimplexMap,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Mismatch {
        invariant: Invariant,
        left: String,
        right: String,
    },
    SameNormalForm {
        form: String,
        correspondence: BTreeMap<VertexId, VertexId>,
    },
    Witnesses {
        forward: Witness,
        backward: Witness,
    },
    /// Search bounds, and which directions did find a witness.
    Exhausted {
        max_refinements: usize,
        budget: usize,
        used: usize,
        forward_found: bool,
        backward_found: bool,
    },
}

impl Certificate {
    /// Recomputes a negative certificate from scratch. Other kinds are
    /// reported as not rechecked.
    pub fn recheck(&self, g: &SimplicialComplex, h: &SimplicialComplex) -> bool {
        match self {
            Certificate::Mismatch { invariant: Invariant::NormalForm, .. } => {
                match (NormalForm::of(g), NormalForm::of(h)) {
                    (Ok(a), Ok(b)) => a.matching(&b).is_none(),
                    _ => false,
                }
            }
            Certificate::Mismatch { invariant, left, right } => {
                invariant.evaluate(g).as_ref() == Some(left)
                    && invariant.evaluate(h).as_ref() == Some(right)
                    && left != right
            }
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomeoVerdict {
    pub outcome: Outcome,
    pub certificate: Certificate,
}

impl HomeoVerdict {
    fn mismatch(invariant: Invariant, left: String, right: String) -> Self {
        HomeoVerdict {
            outcome: Outcome::NotHomeomorphic,
            certificate: Certificate::Mismatch { invariant, left, right },
        }
    }
}

/// The first invariant on which the two complexes differ.
pub fn invariant_screen(g: &SimplicialComplex, h: &SimplicialComplex) -> Option<HomeoVerdict> {
    let mut order = vec![Invariant::Dimension];
    if g.dim() == 0 && h.dim() == 0 {
        order.push(Invariant::Cardinality);
    }
    order.extend([
        Invariant::Euler,
        Invariant::Wu2,
        Invariant::Betti,
        Invariant::WuBetti,
        Invariant::Components,
        Invariant::ManifoldType,
        Invariant::SphereSpectrum,
    ]);
    order.into_iter().find_map(|inv| match (inv.evaluate(g), inv.evaluate(h)) {
        (Some(a), Some(b)) if a != b => Some(HomeoVerdict::mismatch(inv, a, b)),
        _ => None,
    })
}

/// A complex of dimension at most one with its degree-2 vertices smoothed
/// away: closed circles are counted, everything else becomes a multigraph on
/// the vertices of degree other than 2. Each arc of the multigraph is stored
/// subdivided into three edges so that loops and parallel arcs stay simple.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub circles: usize,
    pub branch_vertices: usize,
    pub arcs: usize,
    skeleton: SimplicialComplex,
}

impl NormalForm {
    pub fn of(g: &SimplicialComplex) -> Result<Self> {
        if g.dim() > 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: g.dim() });
        }
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = g.vertices().iter().map(|&v| (v, vec![])).collect();
        let edges: Vec<(VertexId, VertexId)> =
            g.simplices().iter().filter(|s| s.len() == 2).map(|s| (s.vertices()[0], s.vertices()[1])).collect();
        for &(a, b) in &edges {
            adj.get_mut(&a).unwrap().push(b);
            adj.get_mut(&b).unwrap().push(a);
        }
        let key = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
        let mut used = std::collections::HashSet::new();
        let branch: Vec<VertexId> = adj.iter().filter(|(_, n)| n.len() != 2).map(|(&v, _)| v).collect();
        let mut arcs = Vec::new();
        for &b in &branch {
            for &first in &adj[&b] {
                if used.contains(&key(b, first)) {
                    continue;
                }
                used.insert(key(b, first));
                let (mut prev, mut cur) = (b, first);
                while adj[&cur].len() == 2 {
                    let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                    used.insert(key(cur, next));
                    (prev, cur) = (cur, next);
                }
                arcs.push((b, cur));
            }
        }
        // the remaining edges form circles of degree-2 vertices
        let mut circles = 0;
        for &(a, b) in &edges {
            if used.contains(&key(a, b)) {
                continue;
            }
            circles += 1;
            let (mut prev, mut cur) = (a, b);
            used.insert(key(a, b));
            while cur != a {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                used.insert(key(cur, next));
                (prev, cur) = (cur, next);
            }
        }
        let mut next_id = branch.iter().copied().max().unwrap_or(0) + 1;
        let mut facets: Vec<Simplex> = branch.iter().map(|&v| Simplex::vertex(v)).collect();
        for &(a, b) in &arcs {
            let (m1, m2) = (next_id, next_id + 1);
            next_id += 2;
            for (x, y) in [(a, m1), (m1, m2), (m2, b)] {
                facets.push(Simplex::new([x, y])?);
            }
        }
        Ok(NormalForm {
            circles,
            branch_vertices: branch.len(),
            arcs: arcs.len(),
            skeleton: SimplicialComplex::closure_of(&facets),
        })
    }

    /// A correspondence of branch vertices (and arc midpoints) when the two
    /// forms agree.
    pub fn matching(&self, other: &NormalForm) -> Option<BTreeMap<VertexId, VertexId>> {
        if self.circles != other.circles {
            return None;
        }
        find_isomorphism(&self.skeleton, &other.skeleton)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} circles, {} branch vertices, {} arcs", self.circles, self.branch_vertices, self.arcs)
    }
}

/// Complete decision for complexes of dimension at most one.
pub fn one_dim_homeomorphic(g: &SimplicialComplex, h: &SimplicialComplex) -> Result<HomeoVerdict> {
    let (a, b) = (NormalForm::of(g)?, NormalForm::of(h)?);
    Ok(match a.matching(&b) {
        Some(correspondence) => HomeoVerdict {
            outcome: Outcome::Homeomorphic,
            certificate: Certificate::SameNormalForm { form: a.to_string(), correspondence },
        },
        None => HomeoVerdict::mismatch(Invariant::NormalForm, a.to_string(), b.to_string()),
    })
}

struct Search {
    max_refinements: usize,
    budget: usize,
    used: usize,
}

impl Search {
    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.budget
    }

    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    fn verdict(&mut self, g: &SimplicialComplex, h: &SimplicialComplex, use_one_dim: bool) -> HomeoVerdict {
        if let Some(v) = invariant_screen(g, h) {
            return v;
        }
        if use_one_dim && g.dim() <= 1 && h.dim() <= 1 {
            return one_dim_homeomorphic(g, h).expect("dimension checked");
        }
        let forward = self.witness(g, h);
        let backward = self.witness(h, g);
        let (forward_found, backward_found) = (forward.is_some(), backward.is_some());
        match (forward, backward) {
            (Some(forward), Some(backward)) => HomeoVerdict {
                outcome: Outcome::Homeomorphic,
                certificate: Certificate::Witnesses { forward, backward },
            },
            _ => HomeoVerdict {
                outcome: Outcome::Inconclusive,
                certificate: Certificate::Exhausted {
                    max_refinements: self.max_refinements,
                    budget: self.budget,
                    used: self.used,
                    forward_found,
                    backward_found,
                },
            },
        }
    }

    /// A witness map from some refinement of `a` onto `b`.
    fn witness(&mut self, a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Witness> {
        let targets = refinements(b, self.max_refinements);
        let mut source = a.clone();
        for n in 0..=self.max_refinements {
            for (m, bm) in targets.iter().enumerate() {
                if self.exhausted() {
                    return None;
                }
                self.tick();
                let Some(phi) = find_isomorphism(&source, bm) else { continue };
                let mut map = SimplexMap::from_indices(
                    (0..source.len()).map(|i| bm.index_of(&source.simplex(i).map(|v| phi[&v])).unwrap()).collect(),
                );
                for k in (0..m).rev() {
                    map = map.compose(&projection(&targets[k + 1], &targets[k]));
                }
                let kind = if m == 0 { WitnessKind::Isomorphism } else { WitnessKind::Projection(m) };
                if m == 0 || self.check(&source, b, &map) == Some(true) {
                    return Some(Witness { refinements: n, kind, map });
                }
            }
            if source.len() <= MAP_SEARCH_MAX_SIMPLICES && b.len() <= MAP_SEARCH_MAX_SIMPLICES {
                if let Some(map) = self.search_maps(&source, b) {
                    return Some(Witness { refinements: n, kind: WitnessKind::Search, map });
                }
            }
            if n == self.max_refinements || source.len() > REFINE_MAX_SIMPLICES {
                break;
            }
            source = barycentric_refine(&source);
        }
        None
    }

    /// Conditions on a candidate map: continuous, onto, facet stars pull
    /// back to balls of the same dimension, unit spheres pull back to
    /// homeomorphic complexes. None when a recursive check ran out of budget.
    fn check(&mut self, a: &SimplicialComplex, b: &SimplicialComplex, f: &SimplexMap) -> Option<bool> {
        if !is_continuous(f, a, b).unwrap_or(false) {
            return Some(false);
        }
        let mut hit = vec![false; b.len()];
        for &j in f.images() {
            hit[j] = true;
        }
        if hit.contains(&false) {
            return Some(false);
        }
        for j in (0..b.len()).filter(|&j| b.is_facet(j)) {
            let pre = preimage(f, a, &SimplexSet::star(b, j)).closure().to_complex().unwrap();
            if is_ball(&pre) != Some(b.simplex(j).dim() as isize) {
                return Some(false);
            }
        }
        let mut unsure = false;
        for j in 0..b.len() {
            let sphere = SimplexSet::sphere(b, j);
            let pre = preimage(f, a, &sphere).to_complex().ok()?;
            match self.verdict(&pre, &sphere.to_complex().unwrap(), true).outcome {
                Outcome::Homeomorphic => {}
                Outcome::NotHomeomorphic => return Some(false),
                Outcome::Inconclusive => unsure = true,
            }
        }
        (!unsure).then_some(true)
    }

    /// Backtracking over monotone maps, assigning images in canonical order
    /// so every face is placed before its cofaces.
    fn search_maps(&mut self, a: &SimplicialComplex, b: &SimplicialComplex) -> Option<SimplexMap> {
        let mut images = vec![usize::MAX; a.len()];
        let mut cover = vec![0usize; b.len()];
        self.extend(a, b, 0, &mut images, &mut cover)
    }

    fn extend(
        &mut self,
        a: &SimplicialComplex,
        b: &SimplicialComplex,
        i: usize,
        images: &mut Vec<usize>,
        cover: &mut Vec<usize>,
    ) -> Option<SimplexMap> {
        if !self.tick() {
            return None;
        }
        let uncovered = cover.iter().filter(|&&c| c == 0).count();
        if uncovered > a.len() - i {
            return None;
        }
        if i == a.len() {
            let f = SimplexMap::from_indices(images.clone());
            return (self.check(a, b, &f) == Some(true)).then_some(f);
        }
        let lower: Vec<&Simplex> = a.faces(i).iter().map(|&k| b.simplex(images[k])).collect();
        for j in 0..b.len() {
            if !lower.iter().all(|y| y.is_subset(b.simplex(j))) {
                continue;
            }
            images[i] = j;
            cover[j] += 1;
            let found = self.extend(a, b, i + 1, images, cover);
            cover[j] -= 1;
            if found.is_some() {
                return found;
            }
            if self.exhausted() {
                return None;
            }
        }
        images[i] = usize::MAX;
        None
    }
}

/// `g` and its successive refinements, stopping early once they get large.
fn refinements(g: &SimplicialComplex, n: usize) -> Vec<SimplicialComplex> {
    let mut out = vec![g.clone()];
    while out.len() <= n && out.last().unwrap().len() <= REFINE_MAX_SIMPLICES {
        out.push(barycentric_refine(out.last().unwrap()));
    }
    out
}

/// The map from a refinement to its base sending a chain to its top
/// element. Refinement vertex `i` is base simplex `i`, and chains list
/// vertices bottom-up.
fn projection(refined: &SimplicialComplex, base: &SimplicialComplex) -> SimplexMap {
    debug_assert_eq!(refined.vertices().len(), base.len());
    SimplexMap::from_indices(refined.simplices().iter().map(|c| *c.vertices().last().unwrap() as usize).collect())
}

/// Screen, then witness search in both directions over refinements up to
/// `max_refinements`, spending at most `budget` search nodes.
pub fn bounded_search(
    g: &SimplicialComplex,
    h: &SimplicialComplex,
    max_refinements: usize,
    budget: usize,
) -> HomeoVerdict {
    Search { max_refinements, budget, used: 0 }.verdict(g, h, false)
}

/// Decides up to dimension one, searches above.
pub fn homeomorphic(
    g: &SimplicialComplex,
    h: &SimplicialComplex,
    max_refinements: usize,
    budget: usize,
) -> HomeoVerdict {
    Search { max_refinements, budget, used: 0 }.verdict(g, h, true)
}
