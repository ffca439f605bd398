//! Small exact linear algebra for finite tensor quotients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::Rational;

/// Sparse vector keyed by coordinate.
pub type SVec = BTreeMap<usize, Rational>;

pub fn svec_add(into: &mut SVec, idx: usize, c: &Rational) {
    if c.is_zero() {
        return;
    }
    let e = into.entry(idx).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        into.remove(&idx);
    }
}

pub fn svec_axpy(into: &mut SVec, c: &Rational, x: &SVec) {
    for (&i, v) in x {
        svec_add(into, i, &(c * v));
    }
}

pub fn svec_sub(a: &SVec, b: &SVec) -> SVec {
    let mut out = a.clone();
    svec_axpy(&mut out, &-Rational::one(), b);
    out
}

pub fn dense_to_svec(v: &[Rational]) -> SVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// A subspace kept in echelon form: each basis vector is normalized to leading coefficient 1
/// at its pivot, and no two basis vectors share a pivot.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    basis: BTreeMap<usize, SVec>,
}

impl Subspace {
    pub fn new() -> Self {
        Subspace::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.basis.contains_key(&i)
    }

    /// Canonical representative of `v` modulo the subspace: zero at every pivot.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut r = v.clone();
        let mut cursor = 0usize;
        loop {
            let next = r.range(cursor..).map(|(&i, _)| i).find(|i| self.basis.contains_key(i));
            let Some(p) = next else { return r };
            let c = r[&p].clone();
            svec_axpy(&mut r, &-c, &self.basis[&p]);
            cursor = p + 1;
        }
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, c)) = r.iter().next() else { return false };
        let inv = Rational::one() / c;
        let r: SVec = r.iter().map(|(&i, x)| (i, x * &inv)).collect();
        self.basis.insert(p, r);
        true
    }
}

/// `k^n / R` with coordinates on the non-pivot positions of `R`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ambient: usize,
    relations: Subspace,
    free: Vec<usize>,
    free_index: BTreeMap<usize, usize>,
}

impl Quotient {
    pub fn new<I: IntoIterator<Item = SVec>>(ambient: usize, relations: I) -> Self {
        let mut rel = Subspace::new();
        for r in relations {
            rel.insert(&r);
        }
        let free: Vec<usize> = (0..ambient).filter(|&i| !rel.is_pivot(i)).collect();
        let free_index = free.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        Quotient { ambient, relations: rel, free, free_index }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn normal_form(&self, v: &SVec) -> SVec {
        self.relations.reduce(v)
    }

    pub fn equal(&self, a: &SVec, b: &SVec) -> bool {
        self.relations.contains(&svec_sub(a, b))
    }

    pub fn is_zero(&self, v: &SVec) -> bool {
        self.relations.contains(v)
    }

    pub fn coordinates(&self, v: &SVec) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, c) in self.normal_form(v) {
            out[self.free_index[&i]] = c;
        }
        out
    }

    /// The ambient unit vector representing the k-th quotient basis vector.
    pub fn basis_vector(&self, k: usize) -> SVec {
        let mut v = SVec::new();
        v.insert(self.free[k], Rational::one());
        v
    }
}

/// Row-reduces a dense matrix in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut c = m.to_vec();
    rref(&mut c).len()
}

/// Basis of `{x : M x = 0}` for an `r × n` matrix.
pub fn nullspace(m: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); n];
            x[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -a[row][f].clone();
            }
            x
        })
        .collect()
}

/// Some `x` with `M x = b`, if one exists.
pub fn solve(m: &[Vec<Rational>], b: &[Rational], n: usize) -> Option<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = m.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    let pivots = rref(&mut a);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = a[row][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn sv(entries: &[(usize, i64)]) -> SVec {
        entries.iter().map(|&(i, c)| (i, rat(c))).collect()
    }

    #[test]
    fn quotient_normal_forms_are_canonical() {
        let q = Quotient::new(3, [sv(&[(0, 1), (1, -1)]), sv(&[(1, 2), (2, -2)])]);
        assert_eq!(q.dim(), 1);
        assert!(q.equal(&sv(&[(0, 1)]), &sv(&[(2, 1)])));
        assert_eq!(q.normal_form(&sv(&[(0, 3)])), q.normal_form(&sv(&[(1, 3)])));
        assert_eq!(q.coordinates(&sv(&[(0, 1), (2, 1)])), vec![rat(2)]);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = vec![vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Rational = m[0].iter().zip(v).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert!(solve(&m, &[rat(1), rat(3)], 3).is_none());
        let x = solve(&m, &[rat(1), rat(2)], 3).unwrap();
        assert_eq!(m[0].iter().zip(&x).map(|(a, b)| a * b).sum::<Rational>(), rat(1));
    }
}
