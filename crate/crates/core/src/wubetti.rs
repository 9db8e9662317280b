//! Interaction cohomology on pairs of intersecting simplices.
//!
//! The cochain space has one coordinate per ordered pair (x, y) with
//! x ∩ y nonempty, graded by |x| + |y|. The derivative removes a vertex from
//! either coordinate, keeping only pairs that still intersect. Intersecting
//! pairs are closed under enlargement, so this is the derivative of the
//! product complex restricted to cochains vanishing on the disjoint pairs,
//! and it squares to zero.

use std::collections::HashMap;
use std::ops::Range;

use crate::complex::SimplicialComplex;
use crate::linalg::{sparse_rank, IntMatrix};

pub struct InteractionComplex {
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    blocks: Vec<Range<usize>>,
}

impl InteractionComplex {
    /// Pairs in row-major order over the canonical simplex order, then
    /// stably sorted by total cardinality.
    pub fn new(g: &SimplicialComplex) -> Self {
        let n = g.len();
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|k| (0..n).map(move |l| (k, l)))
            .filter(|&(k, l)| g.simplex(k).intersects(g.simplex(l)))
            .collect();
        let size = |p: &(usize, usize)| g.simplex(p.0).len() + g.simplex(p.1).len();
        pairs.sort_by_key(size);
        let index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut blocks: Vec<Range<usize>> = Vec::new();
        for (i, p) in pairs.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if size(&pairs[b.start]) == size(p) => b.end = i + 1,
                _ => blocks.push(i..i + 1),
            }
        }
        InteractionComplex { pairs, index, blocks }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    /// Nonzero entries of row `m` of the derivative, as (column, sign).
    /// Signs: (−1)^k for deleting the k-th vertex of x and (−1)^(|x|+k) for
    /// the k-th vertex of y, counting k from 1.
    fn row(&self, g: &SimplicialComplex, m: usize) -> Vec<(usize, i64)> {
        let (a, b) = self.pairs[m];
        let (x, y) = (g.simplex(a), g.simplex(b));
        let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        let mut row = Vec::new();
        for (k0, face) in x.facets().enumerate() {
            if let Some(&r) = self.index.get(&(g.index_of(&face).unwrap(), b)) {
                row.push((r, sign(k0 + 1)));
            }
        }
        for (k0, face) in y.facets().enumerate() {
            if let Some(&r) = self.index.get(&(a, g.index_of(&face).unwrap())) {
                row.push((r, sign(x.len() + k0 + 1)));
            }
        }
        row
    }

    pub fn derivative(&self, g: &SimplicialComplex) -> IntMatrix {
        let n = self.len();
        let mut d = IntMatrix::zeros(n, n);
        for m in 0..n {
            for (r, s) in self.row(g, m) {
                d.add_to(m, r, s);
            }
        }
        d
    }

    /// Derivative from block `b` to block `b + 1`, columns relative to block `b`.
    fn block_rows(&self, g: &SimplicialComplex, b: usize) -> Vec<Vec<(usize, i64)>> {
        let lower = self.blocks[b].start;
        self.blocks[b + 1]
            .clone()
            .map(|m| {
                let mut row: Vec<(usize, i64)> = self.row(g, m).into_iter().map(|(c, s)| (c - lower, s)).collect();
                row.sort_unstable();
                row
            })
            .collect()
    }
}

/// Nullities of the diagonal blocks of (D + Dᵀ)², computed as
/// n_b − rank(D_b) − rank(D_{b−1}).
pub fn wu_betti(g: &SimplicialComplex) -> Vec<usize> {
    let ic = InteractionComplex::new(g);
    let nb = ic.blocks().len();
    let ranks: Vec<usize> = (0..nb).map(|b| if b + 1 < nb { sparse_rank(&ic.block_rows(g, b)) } else { 0 }).collect();
    (0..nb).map(|b| ic.blocks()[b].len() - ranks[b] - if b > 0 { ranks[b - 1] } else { 0 }).collect()
}

/// Same numbers from the dense Laplacian blocks.
pub fn wu_betti_from_laplacian(g: &SimplicialComplex) -> Vec<usize> {
    let ic = InteractionComplex::new(g);
    let d = ic.derivative(g);
    let dirac = d.add(&d.transpose());
    let l = dirac.mul(&dirac);
    ic.blocks().iter().map(|r| l.block(r.clone(), r.clone()).nullity()).collect()
}
