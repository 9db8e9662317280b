//! Connection matrix, Green matrices and energy sums.
//!
//! The connection matrix records which simplices intersect. Its inverse is
//! the Green matrix g(x,y) = ω(x)ω(y)χ(U(x) ∩ U(y)), and summing all entries
//! of g (or of its order-m analogue) recovers the characteristic.

use crate::characteristics::{wu, wu_star};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::masks::MaskIndex;
use crate::set::SimplexSet;
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Star,
    Sphere,
    Ball,
}

impl Region {
    fn of<'a>(self, g: &'a SimplicialComplex, i: usize) -> SimplexSet<'a> {
        match self {
            Region::Star => SimplexSet::star(g, i),
            Region::Sphere => SimplexSet::sphere(g, i),
            Region::Ball => SimplexSet::ball(g, i),
        }
    }
}

/// L(x,y) = 1 when x and y intersect.
pub fn connection_matrix(g: &SimplicialComplex) -> Result<IntMatrix> {
    if g.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let n = g.len();
    let mut l = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if g.simplex(i).intersects(g.simplex(j)) {
                l.set(i, j, 1);
                l.set(j, i, 1);
            }
        }
    }
    Ok(l)
}

/// g(x,y) = ω(x)ω(y)·ω_m(R(x) ∩ R(y)) for m ∈ {1, 2}.
pub fn green_matrix(g: &SimplicialComplex, m: usize, region: Region) -> Result<IntMatrix> {
    if !(1..=2).contains(&m) {
        return Err(Error::UnsupportedOrder(m));
    }
    let n = g.len();
    let mut out = IntMatrix::zeros(n, n);
    let regions: Vec<SimplexSet<'_>> = match region {
        Region::Star => Vec::new(),
        _ => (0..n).map(|i| region.of(g, i)).collect(),
    };
    for i in 0..n {
        for j in i..n {
            let w = match region {
                // U(x) ∩ U(y) is the star of x ∪ y, or empty
                Region::Star => match g.index_of(&g.simplex(i).union(g.simplex(j))) {
                    Some(z) => wu_star(g, z, m)?,
                    None => 0,
                },
                _ => wu(&regions[i].intersection(&regions[j]), m)?,
            };
            let v = g.omega(i) * g.omega(j) * w;
            out.set(i, j, v);
            out.set(j, i, v);
        }
    }
    Ok(out)
}

/// Sum of the order-m star Green tensor,
/// Σ over m-tuples of Π ω(x_i) · ω_m(U(x_1) ∩ … ∩ U(x_m)).
pub fn energy_sum(g: &SimplicialComplex, m: usize) -> Result<i64> {
    if !(1..=4).contains(&m) {
        return Err(Error::UnsupportedOrder(m));
    }
    let star_chi: Vec<i64> = (0..g.len()).map(|i| g.star_indices(i).iter().map(|&j| g.omega(j)).sum()).collect();
    let tail = |z: usize| star_chi[z].pow(m as u32);
    // The common intersection of stars is the star of the union.
    Ok(match MaskIndex::new(g) {
        Some(mi) => {
            fn go(
                g: &SimplicialComplex,
                mi: &MaskIndex,
                left: usize,
                acc: u128,
                w: i64,
                tail: &dyn Fn(usize) -> i64,
            ) -> i64 {
                let z = mi.lookup(acc);
                let Some(z) = z else { return 0 };
                if left == 0 {
                    return w * tail(z);
                }
                (0..g.len()).map(|i| go(g, mi, left - 1, acc | mi.mask(i), w * g.omega(i), tail)).sum()
            }
            (0..g.len()).map(|i| go(g, &mi, m - 1, mi.mask(i), g.omega(i), &tail)).sum()
        }
        None => {
            fn go(g: &SimplicialComplex, left: usize, acc: &Simplex, w: i64, tail: &dyn Fn(usize) -> i64) -> i64 {
                let Some(z) = g.index_of(acc) else { return 0 };
                if left == 0 {
                    return w * tail(z);
                }
                (0..g.len()).map(|i| go(g, left - 1, &acc.union(g.simplex(i)), w * g.omega(i), tail)).sum()
            }
            (0..g.len()).map(|i| go(g, m - 1, g.simplex(i), g.omega(i), &tail)).sum()
        }
    })
}

/// ω_h(A) = Σ h(x,y) over x, y ∈ A with x ∩ y ∈ A.
pub fn interaction_characteristic(a: &SimplexSet<'_>, h: &IntMatrix) -> i64 {
    let host = a.host();
    let idx: Vec<usize> = a.indices().collect();
    let mut total = 0;
    for &i in &idx {
        for &j in &idx {
            if let Some(z) = host.simplex(i).intersection(host.simplex(j)) {
                if a.contains(&z) {
                    total += h.get(i, j);
                }
            }
        }
    }
    total
}

/// g_h(x,y) = ω(x)ω(y)·ω_h(U(x) ∩ U(y)).
pub fn interaction_green_matrix(g: &SimplicialComplex, h: &IntMatrix) -> IntMatrix {
    let n = g.len();
    let mut out = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let meet = SimplexSet::star(g, i).intersection(&SimplexSet::star(g, j));
            out.set(i, j, g.omega(i) * g.omega(j) * interaction_characteristic(&meet, h));
        }
    }
    out
}

/// Both sides of the energy theorem for an interaction matrix h:
/// (Σ g_h(x,y), ω_h(G)).
pub fn general_energy(g: &SimplicialComplex, h: &IntMatrix) -> (i64, i64) {
    (interaction_green_matrix(g, h).sum(), interaction_characteristic(&SimplexSet::full(g), h))
}

pub fn general_energy_check(g: &SimplicialComplex, h: &IntMatrix) -> bool {
    let (lhs, rhs) = general_energy(g, h);
    lhs == rhs
}

/// ω(x)·χ(U(x)), the row sum of g₁ at x.
pub fn curvature(g: &SimplicialComplex, x: &Simplex) -> Result<i64> {
    let i = g.require(x)?;
    Ok(g.omega(i) * SimplexSet::star(g, i).euler())
}

/// Σ_x ω(x)·g₁(x,x).
pub fn supertrace(g: &SimplicialComplex) -> Result<i64> {
    let g1 = green_matrix(g, 1, Region::Star)?;
    Ok((0..g.len()).map(|i| g.omega(i) * g1.get(i, i)).sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullityReport {
    pub star1: usize,
    pub ball1: usize,
    pub sphere1: usize,
    pub star2: usize,
    pub ball2: usize,
    pub sphere2: usize,
}

pub fn nullity_report(g: &SimplicialComplex) -> Result<NullityReport> {
    let k = |m, r| Ok::<_, Error>(green_matrix(g, m, r)?.nullity());
    Ok(NullityReport {
        star1: k(1, Region::Star)?,
        ball1: k(1, Region::Ball)?,
        sphere1: k(1, Region::Sphere)?,
        star2: k(2, Region::Star)?,
        ball2: k(2, Region::Ball)?,
        sphere2: k(2, Region::Sphere)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristics::fermi_characteristic;
    use crate::random::{random_complex, rng};
    use crate::registry;
    use num_bigint::BigInt;
    use rand::Rng;

    fn small_registry() -> Vec<(&'static str, SimplicialComplex)> {
        registry::standard().into_iter().filter(|(_, g)| g.len() <= 150).collect()
    }

    /// Oracle: explicit star intersections and the direct Wu sum.
    fn brute_energy(g: &SimplicialComplex, m: usize) -> i64 {
        let n = g.len();
        let mut total = 0;
        for code in 0..n.pow(m as u32) {
            let mut c = code;
            let mut meet = SimplexSet::full(g);
            let mut w = 1;
            for _ in 0..m {
                meet = meet.intersection(&SimplexSet::star(g, c % n));
                w *= g.omega(c % n);
                c /= n;
            }
            total += w * wu(&meet, m).unwrap();
        }
        total
    }

    #[test]
    fn connection_matrix_of_k2() {
        let k2 = registry::lookup("complete:2").unwrap();
        let l = connection_matrix(&k2).unwrap();
        assert_eq!(l.to_rows(), vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
        assert_eq!(l.determinant(), BigInt::from(-1));
        let p = registry::lookup("point").unwrap();
        assert_eq!(connection_matrix(&p).unwrap().to_rows(), vec![vec![1]]);
        assert_eq!(connection_matrix(&SimplicialComplex::empty()), Err(Error::EmptyComplex));
    }

    #[test]
    fn connection_entries_are_core_intersections() {
        let g = registry::lookup("fig1").unwrap();
        let l = connection_matrix(&g).unwrap();
        for i in 0..g.len() {
            for j in 0..g.len() {
                let chi = SimplexSet::core(&g, i).intersection(&SimplexSet::core(&g, j)).euler();
                assert_eq!(l.get(i, j), chi);
            }
        }
    }

    #[test]
    fn green_star_identity() {
        let mut cases = small_registry();
        let mut r = rng(31);
        for _ in 0..20 {
            cases.push(("random", random_complex(&mut r, 60)));
        }
        for (key, g) in cases {
            let l = connection_matrix(&g).unwrap();
            let g1 = green_matrix(&g, 1, Region::Star).unwrap();
            assert_eq!(l.mul(&g1), IntMatrix::identity(g.len()), "{key}");
            assert_eq!(g1.sum(), g.euler(), "{key}");
            assert_eq!(l.determinant(), BigInt::from(fermi_characteristic(&g)), "{key}");
            assert_eq!(supertrace(&g).unwrap(), g.euler());
            let g2 = green_matrix(&g, 2, Region::Star).unwrap();
            assert_eq!(g2.sum(), wu(&SimplexSet::full(&g), 2).unwrap(), "{key}");
            assert!(g2.is_symmetric());
            let kappa: i64 = g.simplices().iter().map(|x| curvature(&g, x).unwrap()).sum();
            assert_eq!(kappa, g.euler());
            for i in 0..g.len() {
                let row: i64 = g1.row(i).iter().sum();
                assert_eq!(row, curvature(&g, g.simplex(i)).unwrap());
            }
        }
    }

    #[test]
    fn green_entries_match_explicit_intersections() {
        let g = registry::lookup("fig1").unwrap();
        for region in [Region::Star, Region::Ball, Region::Sphere] {
            for m in 1..=2 {
                let gm = green_matrix(&g, m, region).unwrap();
                for i in 0..g.len() {
                    for j in 0..g.len() {
                        let meet = region.of(&g, i).intersection(&region.of(&g, j));
                        assert_eq!(gm.get(i, j), g.omega(i) * g.omega(j) * wu(&meet, m).unwrap());
                    }
                }
            }
        }
        assert!(matches!(green_matrix(&g, 3, Region::Star), Err(Error::UnsupportedOrder(3))));
    }

    #[test]
    fn unimodularity_lost_at_order_two() {
        let mut r = rng(4);
        let mut seen_non_unit = false;
        for _ in 0..10 {
            let g = random_complex(&mut r, 40);
            let d = green_matrix(&g, 2, Region::Star).unwrap().determinant();
            if d != BigInt::from(1) && d != BigInt::from(-1) {
                seen_non_unit = true;
            }
        }
        assert!(seen_non_unit);
    }

    #[test]
    fn tensor_energy_matches_brute_force() {
        let mut r = rng(12);
        let mut cases = vec![registry::lookup("complete:2").unwrap(), registry::lookup("cycle:4").unwrap()];
        for _ in 0..6 {
            cases.push(random_complex(&mut r, 14));
        }
        for g in cases {
            for m in 1..=3 {
                let e = energy_sum(&g, m).unwrap();
                assert_eq!(e, brute_energy(&g, m));
                assert_eq!(e, wu(&SimplexSet::full(&g), m).unwrap());
            }
            if g.len() <= 10 {
                assert_eq!(energy_sum(&g, 4).unwrap(), brute_energy(&g, 4));
            }
        }
        let oct = registry::lookup("octahedron").unwrap();
        assert_eq!(energy_sum(&oct, 2).unwrap(), 2);
        assert!(energy_sum(&oct, 5).is_err());
    }

    #[test]
    fn interaction_energies() {
        let g = registry::lookup("complete:3").unwrap();
        let n = g.len();
        let mut r = rng(3);
        for x in 0..n {
            for y in 0..n {
                let mut h = IntMatrix::zeros(n, n);
                h.set(x, y, 1);
                let (lhs, rhs) = general_energy(&g, &h);
                let expect = g.simplex(x).intersects(g.simplex(y)) as i64;
                assert_eq!((lhs, rhs), (expect, expect));
            }
        }
        let mut diag = IntMatrix::zeros(n, n);
        for i in 0..n {
            diag.set(i, i, g.omega(i));
        }
        assert_eq!(general_energy(&g, &diag), (g.euler(), g.euler()));
        let mut anti = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..i {
                let v = r.random_range(-3..=3);
                anti.set(i, j, v);
                anti.set(j, i, -v);
            }
        }
        assert!(interaction_green_matrix(&g, &anti).is_zero());
        let h = IntMatrix::from_rows((0..n).map(|_| (0..n).map(|_| r.random_range(-4..=4)).collect()).collect());
        assert!(general_energy_check(&g, &h));
    }

    #[test]
    fn nullities() {
        let p = registry::lookup("point").unwrap();
        let rep = nullity_report(&p).unwrap();
        assert_eq!(rep.star1, 0);
        assert_eq!(rep.sphere1, 1);
        let g = registry::lookup("octahedron").unwrap();
        assert_eq!(nullity_report(&g).unwrap().star1, 0);
    }
}
