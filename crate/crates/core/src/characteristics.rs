//! Euler characteristic and the higher Wu characteristics.
//!
//! The Wu characteristic of order m sums, over ordered m-tuples of simplices
//! in a set A whose common intersection is again a member of A, the product
//! of their parities. For closed sets membership reduces to nonemptiness.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::masks::MaskIndex;
use crate::set::SimplexSet;
use crate::simplex::Simplex;

pub const MAX_ORDER: usize = 4;

/// Full complexes with more simplices than this use the star formula.
pub const FAST_THRESHOLD: usize = 300;

pub fn euler(a: &SimplexSet<'_>) -> i64 {
    a.euler()
}

fn check_order(m: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&m) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder(m))
    }
}

pub(crate) fn tuple_sum<K, M, A>(items: &[(K, i64)], m: usize, meet: &M, accept: &A) -> i64
where
    M: Fn(&K, &K) -> Option<K>,
    A: Fn(&K) -> bool,
{
    fn go<K, M, A>(items: &[(K, i64)], left: usize, acc: &K, w: i64, meet: &M, accept: &A) -> i64
    where
        M: Fn(&K, &K) -> Option<K>,
        A: Fn(&K) -> bool,
    {
        if left == 0 {
            return if accept(acc) { w } else { 0 };
        }
        items.iter().filter_map(|(k, om)| meet(acc, k).map(|z| go(items, left - 1, &z, w * om, meet, accept))).sum()
    }
    items.iter().map(|(k, om)| go(items, m - 1, k, *om, meet, accept)).sum()
}

/// Direct m-fold sum over tuples of members of `a`.
pub fn wu(a: &SimplexSet<'_>, m: usize) -> Result<i64> {
    check_order(m)?;
    let host = a.host();
    Ok(match MaskIndex::new(host) {
        Some(mi) => {
            let items: Vec<(u128, i64)> = a.indices().map(|i| (mi.mask(i), host.omega(i))).collect();
            tuple_sum(
                &items,
                m,
                &|x: &u128, y: &u128| {
                    let z = x & y;
                    (z != 0).then_some(z)
                },
                &|z: &u128| a.contains_index(mi.lookup(*z).unwrap()),
            )
        }
        None => {
            let items: Vec<(Simplex, i64)> = a.indices().map(|i| (host.simplex(i).clone(), host.omega(i))).collect();
            tuple_sum(&items, m, &|x: &Simplex, y: &Simplex| x.intersection(y), &|z: &Simplex| a.contains(z))
        }
    })
}

/// Wu characteristic of a star. Every tuple of simplices containing x meets
/// in a simplex containing x, so the sum factors as χ(U(x))^m.
pub fn wu_star(g: &SimplicialComplex, i: usize, m: usize) -> Result<i64> {
    check_order(m)?;
    let chi: i64 = g.star_indices(i).iter().map(|&j| g.omega(j)).sum();
    Ok(chi.pow(m as u32))
}

/// Star formula: Σ_x ω(x)·ω_m(U(x)).
pub fn wu_fast(g: &SimplicialComplex, m: usize) -> Result<i64> {
    check_order(m)?;
    (0..g.len()).map(|i| Ok(g.omega(i) * wu_star(g, i, m)?)).sum()
}

/// ω_m of a whole complex, using the star formula on large inputs.
pub fn wu_characteristic(g: &SimplicialComplex, m: usize) -> Result<i64> {
    if g.len() > FAST_THRESHOLD {
        wu_fast(g, m)
    } else {
        wu(&SimplexSet::full(g), m)
    }
}

/// Σ_x ω(x)·ω_m(B(x)).
pub fn ball_sum(g: &SimplicialComplex, m: usize) -> Result<i64> {
    (0..g.len()).map(|i| Ok(g.omega(i) * wu(&SimplexSet::ball(g, i), m)?)).sum()
}

/// Σ_x ω(x)·ω_m(S(x)).
pub fn sphere_sum(g: &SimplicialComplex, m: usize) -> Result<i64> {
    (0..g.len()).map(|i| Ok(g.omega(i) * wu(&SimplexSet::sphere(g, i), m)?)).sum()
}

/// Checks ω₂(G) = Σ ω(x)ω₂(B(x)) and Σ ω(x)ω₂(S(x)) = 0.
pub fn ball_formula_check(g: &SimplicialComplex) -> bool {
    let total = wu_characteristic(g, 2).unwrap();
    ball_sum(g, 2).unwrap() == total && sphere_sum(g, 2).unwrap() == 0
}

/// ω(A ∪ B) − ω(A) − ω(B) + ω(A ∩ B); zero when ω_m is additive on the pair.
pub fn valuation_defect(a: &SimplexSet<'_>, b: &SimplexSet<'_>, m: usize) -> Result<i64> {
    Ok(wu(&a.union(b), m)? - wu(a, m)? - wu(b, m)? + wu(&a.intersection(b), m)?)
}

/// Σ ω(x)ω(y) over x ∈ G, y ∈ H with x ∩ y nonempty.
pub fn relative_wu(g: &SimplicialComplex, h: &SimplicialComplex) -> Result<i64> {
    if !h.simplices().iter().all(|s| g.contains(s)) {
        return Err(Error::NotSubcomplex);
    }
    let mut total = 0;
    for x in g.simplices() {
        for y in h.simplices() {
            if x.intersects(y) {
                total += x.omega() * y.omega();
            }
        }
    }
    Ok(total)
}

/// Product of all parities.
pub fn fermi_characteristic(g: &SimplicialComplex) -> i64 {
    g.simplices().iter().map(Simplex::omega).product()
}
