//! Exterior derivative, Hodge Laplacian, Betti numbers and heat traces.
//!
//! Every simplex is oriented by its ascending vertex order. The derivative
//! sends a function on k-simplices to one on (k+1)-simplices with
//! df(x) = Σ (−1)^i f(x minus its i-th vertex).

use nalgebra::{DMatrix, SymmetricEigen};

use crate::complex::SimplicialComplex;
use crate::linalg::{sparse_rank, IntMatrix};

/// The full n×n derivative in canonical simplex order.
pub fn exterior_derivative(g: &SimplicialComplex) -> IntMatrix {
    let n = g.len();
    let mut d = IntMatrix::zeros(n, n);
    for (i, x) in g.simplices().iter().enumerate() {
        for (pos, y) in x.facets().enumerate() {
            let j = g.index_of(&y).expect("complex is closed");
            d.set(i, j, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    d
}

/// The part of d from k-simplices to (k+1)-simplices, as sparse rows indexed
/// relative to the two dimension ranges.
pub fn derivative_block(g: &SimplicialComplex, k: usize) -> Vec<Vec<(usize, i64)>> {
    let lower = g.dim_range(k).start;
    g.dim_range(k + 1)
        .map(|i| {
            let mut row: Vec<(usize, i64)> = g
                .simplex(i)
                .facets()
                .enumerate()
                .map(|(pos, y)| (g.index_of(&y).unwrap() - lower, if pos % 2 == 0 { 1 } else { -1 }))
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

/// The Hodge Laplacian (d + dᵀ)², which is block diagonal.
pub fn hodge_laplacian(g: &SimplicialComplex) -> IntMatrix {
    let d = exterior_derivative(g);
    let dirac = d.add(&d.transpose());
    dirac.mul(&dirac)
}

/// Diagonal blocks L_k of the Hodge Laplacian, one per dimension.
pub fn hodge_blocks(g: &SimplicialComplex) -> Vec<IntMatrix> {
    let l = hodge_laplacian(g);
    (0..g.f_vector().len())
        .map(|k| {
            let r = g.dim_range(k);
            l.block(r.clone(), r)
        })
        .collect()
}

/// b_k = f_k − rank(d on k-forms) − rank(d on (k−1)-forms), which equals the
/// nullity of L_k.
pub fn betti(g: &SimplicialComplex) -> Vec<usize> {
    let f = g.f_vector();
    let ranks: Vec<usize> =
        (0..f.len()).map(|k| if k + 1 < f.len() { sparse_rank(&derivative_block(g, k)) } else { 0 }).collect();
    (0..f.len()).map(|k| f[k] - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }).collect()
}

pub fn betti_from_laplacian(g: &SimplicialComplex) -> Vec<usize> {
    hodge_blocks(g).iter().map(IntMatrix::nullity).collect()
}

pub fn euler_poincare_check(g: &SimplicialComplex) -> bool {
    let alt: i64 = betti(g).iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    alt == g.euler()
}

/// Σ_k (−1)^k tr(exp(−t L_k)) from the eigenvalues of each block.
pub fn heat_supertrace(g: &SimplicialComplex, t: f64) -> f64 {
    hodge_blocks(g)
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let n = b.rows();
            let m = DMatrix::from_fn(n, n, |i, j| b.get(i, j) as f64);
            let tr: f64 = SymmetricEigen::new(m).eigenvalues.iter().map(|&l| (-t * l).exp()).sum();
            if k % 2 == 0 {
                tr
            } else {
                -tr
            }
        })
        .sum()
}

pub fn mckean_singer_check(g: &SimplicialComplex, t: f64) -> bool {
    (heat_supertrace(g, t) - g.euler() as f64).abs() < 1e-8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::barycentric_refine;
    use crate::random::{random_complex, rng};
    use crate::registry;
    use rand::Rng;

    #[test]
    fn derivative_of_an_edge() {
        let k2 = registry::lookup("complete:2").unwrap();
        let d = exterior_derivative(&k2);
        assert_eq!(d.to_rows(), vec![vec![0, 0, 0], vec![0, 0, 0], vec![-1, 1, 0]]);
    }

    #[test]
    fn derivative_squares_to_zero() {
        for (key, g) in registry::standard() {
            if g.len() > 200 {
                continue;
            }
            let d = exterior_derivative(&g);
            assert!(d.mul(&d).is_zero(), "{key}");
        }
        let c4 = registry::lookup("cycle:4").unwrap();
        assert_eq!(exterior_derivative(&c4).rank(), 3);
    }

    #[test]
    fn laplacian_blocks() {
        let oct = registry::lookup("octahedron").unwrap();
        let sizes: Vec<usize> = hodge_blocks(&oct).iter().map(IntMatrix::rows).collect();
        assert_eq!(sizes, vec![6, 12, 8]);
        let l = hodge_laplacian(&oct);
        assert!(l.is_symmetric());
        // off-diagonal blocks vanish
        for i in 0..oct.len() {
            for j in 0..oct.len() {
                if oct.simplex(i).dim() != oct.simplex(j).dim() {
                    assert_eq!(l.get(i, j), 0);
                }
            }
        }
        let mut r = rng(9);
        for _ in 0..20 {
            let v: Vec<i64> = (0..oct.len()).map(|_| r.random_range(-5..=5)).collect();
            let q: i64 = (0..oct.len()).map(|i| v[i] * (0..oct.len()).map(|j| l.get(i, j) * v[j]).sum::<i64>()).sum();
            assert!(q >= 0);
        }
        let p = registry::lookup("point").unwrap();
        assert_eq!(hodge_blocks(&p)[0].to_rows(), vec![vec![0]]);
    }

    #[test]
    fn betti_numbers() {
        for (key, b) in [
            ("cycle:4", vec![1, 1]),
            ("octahedron", vec![1, 0, 1]),
            ("figure8", vec![1, 2]),
            ("threesphere", vec![1, 0, 0, 1]),
            ("moebius", vec![1, 1, 0]),
            ("cylinder", vec![1, 1, 0]),
        ] {
            let g = registry::lookup(key).unwrap();
            assert_eq!(betti(&g), b, "{key}");
        }
        assert!(betti(&SimplicialComplex::empty()).is_empty());
    }

    #[test]
    fn rank_route_matches_laplacian_nullity() {
        let mut r = rng(10);
        for _ in 0..15 {
            let g = random_complex(&mut r, 60);
            assert_eq!(betti(&g), betti_from_laplacian(&g));
        }
        let oct = registry::lookup("octahedron").unwrap();
        assert_eq!(betti(&oct), betti_from_laplacian(&oct));
    }

    #[test]
    fn refinement_keeps_betti() {
        for key in ["cycle:5", "figure8", "octahedron", "fig1"] {
            let g = registry::lookup(key).unwrap();
            assert_eq!(betti(&g), betti(&barycentric_refine(&g)), "{key}");
        }
    }

    #[test]
    fn euler_poincare_and_heat() {
        for (key, g) in registry::standard() {
            assert!(euler_poincare_check(&g), "{key}");
        }
        let oct = registry::lookup("octahedron").unwrap();
        for t in [0.1, 1.0, 10.0] {
            assert!(mckean_singer_check(&oct, t), "t={t}");
        }
        assert!(euler_poincare_check(&SimplicialComplex::empty()));
        assert!(mckean_singer_check(&SimplicialComplex::empty(), 1.0));
    }
}
