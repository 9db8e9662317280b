//! Exact integer and rational linear algebra.
//!
//! Ranks use fraction-free sparse row reduction, first in checked `i128` and
//! again in `BigInt` if anything overflows. Determinants use Bareiss
//! elimination, falling back to a multimodular computation sized by the
//! Hadamard bound. Kernels and traces on kernels are done over `BigRational`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_to(i, j, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Square sub-block on the index range `r` for rows and columns.
    pub fn block(&self, r: std::ops::Range<usize>, c: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(r.len(), c.len());
        for (i, a) in r.clone().enumerate() {
            for (j, b) in c.clone().enumerate() {
                out.set(i, j, self.get(a, b));
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn sum(&self) -> i64 {
        self.data.iter().sum()
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, v)).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        sparse_rank(&self.sparse_rows())
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> BigInt {
        determinant(self)
    }

    /// Rows joined by newlines, entries by commas.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

trait Coeff: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

type Row<T> = Vec<(usize, T)>;

/// `a·r − b·p` for rows with the same leading column, divided by the content.
fn eliminate<T: Coeff>(r: &Row<T>, p: &Row<T>) -> Option<Row<T>> {
    let a = &p[0].1;
    let b = &r[0].1;
    let zero = T::from_i64(0);
    let mut out: Row<T> = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, T::mul_sub(a, &r[i - 1].1, b, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, T::mul_sub(a, &zero, b, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::mul_sub(a, &r[i - 1].1, b, &p[j - 1].1)?)
        };
        if !v.vanishes() {
            out.push((col, v));
        }
    }
    if let Some(first) = out.first() {
        let mut g = first.1.clone();
        for (_, v) in &out[1..] {
            if g.is_unit() {
                break;
            }
            g = g.gcd_with(v);
        }
        let g = g.gcd_with(&g);
        if !g.is_unit() {
            for e in &mut out {
                e.1 = e.1.div_exact(&g);
            }
        }
    }
    Some(out)
}

fn echelon_rank<T: Coeff>(rows: &[Vec<(usize, i64)>]) -> Option<usize> {
    let mut order: Vec<&Vec<(usize, i64)>> = rows.iter().filter(|r| !r.is_empty()).collect();
    order.sort_by_key(|r| r.len());
    let mut pivots: HashMap<usize, Row<T>> = HashMap::new();
    for r in order {
        let mut row: Row<T> = r.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        while let Some(&(lead, _)) = row.first() {
            match pivots.get_mut(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(p) => {
                    // keep the sparser row as the pivot
                    if row.len() < p.len() {
                        std::mem::swap(&mut row, p);
                    }
                    row = eliminate(&row, p)?;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals of a sparse integer matrix given by rows of
/// `(column, value)` pairs sorted by column.
pub fn sparse_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    echelon_rank::<i128>(rows).unwrap_or_else(|| echelon_rank::<BigInt>(rows).unwrap())
}

fn bareiss_i128(m: &IntMatrix) -> Option<i128> {
    let n = m.rows();
    let mut a: Vec<Vec<i128>> = (0..n).map(|i| m.row(i).iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&i| a[i][k] != 0);
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Some(sign * if n == 0 { 1 } else { a[n - 1][n - 1] })
}

fn det_mod(m: &IntMatrix, p: u64) -> u64 {
    let n = m.rows();
    let mut a: Vec<Vec<u64>> =
        (0..n).map(|i| m.row(i).iter().map(|&v| v.rem_euclid(p as i64) as u64).collect()).collect();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(k, piv);
            det = (p - det) % p;
        }
        det = det * a[k][k] % p;
        let inv = pow_mod(a[k][k], p - 2, p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = a[i][k] * inv % p;
            for j in k..n {
                a[i][j] = (a[i][j] + (p - f) * a[k][j]) % p;
            }
        }
    }
    det
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn determinant_multimodular(m: &IntMatrix) -> BigInt {
    // log2 of the Hadamard bound, plus room for the sign
    let bits: f64 = (0..m.rows())
        .map(|i| {
            let s: f64 = m.row(i).iter().map(|&v| (v as f64) * (v as f64)).sum();
            0.5 * s.max(1.0).log2()
        })
        .sum::<f64>()
        + 2.0;
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    let mut p = (1u64 << 31) - 1;
    while (modulus.bits() as f64) < bits + 1.0 {
        while !is_prime(p) {
            p -= 2;
        }
        let r = det_mod(m, p);
        // Garner step: value ≡ r (mod p), value unchanged mod modulus
        let cur = (&value % BigInt::from(p)).to_u64().unwrap();
        let mm = (&modulus % BigInt::from(p)).to_u64().unwrap();
        let t = (r + p - cur) % p * pow_mod(mm, p - 2, p) % p;
        value += &modulus * BigInt::from(t);
        modulus *= BigInt::from(p);
        p -= 2;
    }
    if &value * 2 > modulus {
        value - modulus
    } else {
        value
    }
}

/// Exact determinant of a square integer matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    match bareiss_i128(m) {
        Some(d) => BigInt::from(d),
        None => determinant_multimodular(m),
    }
}

/// Basis of the rational kernel {v : M v = 0}, each vector scaled to
/// coprime integers.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|i| m.row(i).iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut is_pivot = vec![None; cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    (0..cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (i, &c) in pivot_cols.iter().enumerate() {
                v[c] = -a[i][free].clone();
            }
            integer_scaled(&v)
        })
        .collect()
}

fn integer_scaled(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Solves A X = B over the rationals for square invertible A.
pub fn solve(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> =
        a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb).cloned().collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..n + k {
                    let d = &f * &aug[c][j];
                    aug[i][j] -= d;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Trace of the map induced by `k` on the span of `basis`, after orthogonal
/// projection back onto that span: tr((HᵀH)⁻¹ HᵀKH).
pub fn trace_on_subspace(basis: &[Vec<BigInt>], k: &IntMatrix) -> BigRational {
    let dim = basis.len();
    if dim == 0 {
        return BigRational::zero();
    }
    let dot = |u: &[BigInt], v: &[BigInt]| -> BigInt { u.iter().zip(v).map(|(a, b)| a * b).sum() };
    let kh: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|h| {
            (0..k.rows())
                .map(|i| k.row(i).iter().zip(h).filter(|(a, _)| **a != 0).map(|(a, b)| BigInt::from(*a) * b).sum())
                .collect()
        })
        .collect();
    let gram: Vec<Vec<BigRational>> =
        (0..dim).map(|i| (0..dim).map(|j| BigRational::from_integer(dot(&basis[i], &basis[j]))).collect()).collect();
    let proj: Vec<Vec<BigRational>> =
        (0..dim).map(|i| (0..dim).map(|j| BigRational::from_integer(dot(&basis[i], &kh[j]))).collect()).collect();
    let x = solve(&gram, &proj).expect("kernel basis is linearly independent");
    (0..dim).map(|i| x[i][i].clone()).sum()
}
