//! Sparse rational matrices and exact rank.
//!
//! Rank is computed by fraction-free integer elimination after clearing row denominators.
//! Below [`DENSE_COLUMN_THRESHOLD`] columns a dense row-echelon sweep is used; above it a
//! sparse elimination with Markowitz pivot selection. Both first run in `i128` with overflow
//! checks and restart in `BigInt` on overflow.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub const DENSE_COLUMN_THRESHOLD: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.iter().enumerate() {
                m.add_to(i, j, v.clone());
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::new(n, n);
        for i in 0..n {
            m.add_to(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `v` to entry `(i, j)`, keeping the no-explicit-zero invariant.
    pub fn add_to(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range {}x{}", self.rows, self.cols);
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); rhs.rows];
        for (&(i, j), v) in &rhs.entries {
            by_row[i].push((j, v));
        }
        let mut out = SparseMatrix::new(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                out.add_to(i, j, a * b);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank_with_threshold(DENSE_COLUMN_THRESHOLD)
    }

    pub fn rank_with_threshold(&self, dense_threshold: usize) -> usize {
        let rows = self.integer_rows();
        if self.cols <= dense_threshold {
            dense_rank::<i128>(&rows, self.cols).unwrap_or_else(|| dense_rank::<BigInt>(&rows, self.cols).unwrap())
        } else {
            sparse_rank::<i128>(&rows, self.cols).unwrap_or_else(|| sparse_rank::<BigInt>(&rows, self.cols).unwrap())
        }
    }

    /// `(rank, cols - rank)`.
    pub fn rank_kernel(&self) -> (usize, usize) {
        let r = self.rank();
        (r, self.cols - r)
    }

    /// Rows scaled by the lcm of their denominators.
    fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        let mut rows: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].push((j, v));
        }
        rows.into_iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                r.into_iter().map(|(j, v)| (j, v.numer() * (&l / v.denom()))).collect()
            })
            .collect()
    }
}

/// Integer arithmetic used by elimination; `None` signals overflow.
trait ExactInt: Clone + Sized {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn abs_cmp_key(&self) -> u64;
}

impl ExactInt for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128().filter(|x| x.unsigned_abs() < (1u128 << 100))
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn abs_cmp_key(&self) -> u64 {
        self.unsigned_abs().min(u64::MAX as u128) as u64
    }
}

impl ExactInt for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_cmp_key(&self) -> u64 {
        self.abs().to_u64().unwrap_or(u64::MAX)
    }
}

fn convert_rows<T: ExactInt>(rows: &[Vec<(usize, BigInt)>]) -> Option<Vec<Vec<(usize, T)>>> {
    rows.iter()
        .map(|r| r.iter().map(|(j, v)| T::from_big(v).map(|x| (*j, x))).collect())
        .collect()
}

fn normalize_dense<T: ExactInt>(row: &mut [T], from: usize) {
    let mut g: Option<T> = None;
    for v in &row[from..] {
        if !v.is_zero() {
            g = Some(match g {
                None => v.clone(),
                Some(g) => g.gcd(v),
            });
            if g.as_ref().unwrap().is_unit() {
                return;
            }
        }
    }
    if let Some(g) = g {
        for v in &mut row[from..] {
            if !v.is_zero() {
                *v = v.div_exact(&g);
            }
        }
    }
}

fn dense_rank<T: ExactInt>(rows: &[Vec<(usize, BigInt)>], cols: usize) -> Option<usize> {
    let sparse = convert_rows::<T>(rows)?;
    let zero = T::from_big(&BigInt::zero())?;
    let mut a: Vec<Vec<T>> = sparse
        .into_iter()
        .map(|r| {
            let mut d = vec![zero.clone(); cols];
            for (j, v) in r {
                d[j] = v;
            }
            d
        })
        .collect();
    let nrows = a.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        // Smallest pivot in magnitude keeps intermediate values small.
        let pivot = (rank..nrows).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].abs_cmp_key());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        normalize_dense(&mut a[rank], col);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let q = row[col].clone();
            for j in col..cols {
                if prow[j].is_zero() && row[j].is_zero() {
                    continue;
                }
                row[j] = T::mul_sub(&pv, &row[j], &q, &prow[j])?;
            }
            normalize_dense(row, col + 1);
        }
        rank += 1;
    }
    Some(rank)
}

fn sparse_combine<T: ExactInt>(
    target: &[(usize, T)],
    tq: &T,
    pivot: &[(usize, T)],
    pv: &T,
) -> Option<Vec<(usize, T)>> {
    // pv * target - tq * pivot
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::from_big(&BigInt::zero())?;
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, T::mul_sub(pv, &target[i - 1].1, tq, &zero)?)
        } else if cj < ci {
            j += 1;
            (cj, T::mul_sub(pv, &zero, tq, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, T::mul_sub(pv, &target[i - 1].1, tq, &pivot[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let mut g: Option<T> = None;
    for (_, v) in &out {
        g = Some(match g {
            None => v.clone(),
            Some(g) => g.gcd(v),
        });
    }
    if let Some(g) = g {
        if !g.is_unit() {
            for (_, v) in &mut out {
                *v = v.div_exact(&g);
            }
        }
    }
    Some(out)
}

fn sparse_rank<T: ExactInt>(rows: &[Vec<(usize, BigInt)>], cols: usize) -> Option<usize> {
    let mut rows: Vec<Option<Vec<(usize, T)>>> = convert_rows::<T>(rows)?.into_iter().map(Some).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (i, r) in rows.iter().enumerate() {
        for (j, _) in r.as_ref().unwrap() {
            col_rows[*j].insert(i);
        }
    }
    let mut rank = 0;
    loop {
        // Markowitz: minimise (r - 1)(c - 1) over the sparsest columns.
        let mut best: Option<(usize, usize, usize)> = None;
        let mut cols_by_count: Vec<(usize, usize)> =
            col_rows.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(j, s)| (s.len(), j)).collect();
        if cols_by_count.is_empty() {
            break;
        }
        cols_by_count.sort_unstable();
        for &(cc, j) in cols_by_count.iter().take(4) {
            for &i in &col_rows[j] {
                let rc = rows[i].as_ref().unwrap().len();
                let cost = (rc - 1) * (cc - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, i, j));
                }
            }
        }
        let (_, pi, pj) = best.unwrap();
        let prow = rows[pi].take().unwrap();
        for (j, _) in &prow {
            col_rows[*j].remove(&pi);
        }
        let pv = prow.iter().find(|e| e.0 == pj).unwrap().1.clone();
        let targets: Vec<usize> = col_rows[pj].iter().copied().collect();
        for t in targets {
            let old = rows[t].take().unwrap();
            let q = old.iter().find(|e| e.0 == pj).unwrap().1.clone();
            let new = sparse_combine(&old, &q, &prow, &pv)?;
            for (j, _) in &old {
                col_rows[*j].remove(&t);
            }
            for (j, _) in &new {
                col_rows[*j].insert(t);
            }
            rows[t] = if new.is_empty() { Some(Vec::new()) } else { Some(new) };
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(SparseMatrix::new(3, 3).rank_kernel(), (0, 3));
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank_kernel(), (1, 1));
    }

    #[test]
    fn identity() {
        assert_eq!(SparseMatrix::identity(4).rank_kernel(), (4, 0));
    }

    #[test]
    fn both_paths_agree_on_fractions() {
        let mut a = SparseMatrix::new(3, 4);
        a.add_to(0, 0, Rational::new(1.into(), 3.into()));
        a.add_to(0, 2, Rational::new(2.into(), 5.into()));
        a.add_to(1, 0, Rational::new(5.into(), 3.into()));
        a.add_to(1, 2, q(2));
        a.add_to(2, 3, q(7));
        assert_eq!(a.rank_with_threshold(usize::MAX), 2);
        assert_eq!(a.rank_with_threshold(0), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Entries near 2^90 overflow i128 products immediately.
        let big: BigInt = BigInt::one() << 90usize;
        let mut a = SparseMatrix::new(2, 2);
        a.add_to(0, 0, Rational::from_integer(big.clone() + 1));
        a.add_to(0, 1, Rational::from_integer(big.clone()));
        a.add_to(1, 0, Rational::from_integer(big.clone()));
        a.add_to(1, 1, Rational::from_integer(big.clone() - 1));
        assert_eq!(a.rank_with_threshold(usize::MAX), 2);
        assert_eq!(a.rank_with_threshold(0), 2);
    }

    #[test]
    fn explicit_zeros_are_never_stored() {
        let mut a = SparseMatrix::new(1, 1);
        a.add_to(0, 0, q(1));
        a.add_to(0, 0, q(-1));
        assert_eq!(a.nnz(), 0);
    }
}
