//! Weight-graded finite complexes, Betti tables and shifted duality comparison.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{CoreError, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Differential raises the degree.
    Cochain,
    /// Differential lowers the degree.
    Chain,
}

/// A complex split into finite weight slices `C_{k,w}`, `0 ≤ k ≤ top_degree`.
///
/// The differential leaving `(k, w)` lands in `(k ± 1, w + weight_shift)`.
pub trait GradedComplex: Sync {
    fn direction(&self) -> Direction;
    fn top_degree(&self) -> usize;
    fn weight_shift(&self) -> i64;
    fn slice_dimension(&self, k: usize, w: i64) -> usize;
    /// Matrix of the differential out of `(k, w)`: rows index the target slice.
    fn differential(&self, k: usize, w: i64) -> Result<SparseMatrix, CoreError>;

    fn target(&self, k: usize, w: i64) -> Option<(usize, i64)> {
        let w2 = w + self.weight_shift();
        match self.direction() {
            Direction::Cochain if k < self.top_degree() => Some((k + 1, w2)),
            Direction::Chain if k > 0 => Some((k - 1, w2)),
            _ => None,
        }
    }

    fn source(&self, k: usize, w: i64) -> Option<(usize, i64)> {
        let w0 = w - self.weight_shift();
        match self.direction() {
            Direction::Cochain if k > 0 => Some((k - 1, w0)),
            Direction::Chain if k < self.top_degree() => Some((k + 1, w0)),
            _ => None,
        }
    }
}

/// Exact Betti numbers per `(degree, weight)` over a weight window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub kind: String,
    pub fixture: String,
    pub window: (i64, i64),
    pub entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, w: i64) -> Option<usize> {
        self.entries.get(&(i, w)).copied()
    }

    pub fn entry_list(&self) -> Vec<(usize, i64, usize)> {
        self.entries.iter().map(|(&(i, w), &d)| (i, w, d)).collect()
    }

    /// Same numbers at weight `w + by`.
    pub fn translated(&self, by: i64) -> BettiTable {
        BettiTable {
            kind: self.kind.clone(),
            fixture: self.fixture.clone(),
            window: (self.window.0 + by, self.window.1 + by),
            entries: self.entries.iter().map(|(&(i, w), &d)| ((i, w + by), d)).collect(),
        }
    }
}

fn check_window(window: (i64, i64)) -> Result<(), CoreError> {
    if window.0 > window.1 {
        return Err(CoreError::InvalidWindow { lo: window.0, hi: window.1 });
    }
    Ok(())
}

/// Ranks of the differentials out of the given slices, computed in parallel.
pub fn slice_ranks<C: GradedComplex + ?Sized>(
    complex: &C,
    sources: BTreeSet<(usize, i64)>,
) -> Result<BTreeMap<(usize, i64), usize>, CoreError> {
    let list: Vec<(usize, i64)> = sources.into_iter().collect();
    let ranks: Vec<Result<usize, CoreError>> = list
        .par_iter()
        .map(|&(k, w)| {
            if complex.target(k, w).is_none() || complex.slice_dimension(k, w) == 0 {
                return Ok(0);
            }
            Ok(complex.differential(k, w)?.rank())
        })
        .collect();
    list.into_iter().zip(ranks).map(|(key, r)| r.map(|r| (key, r))).collect()
}

fn betti_from_ranks<C: GradedComplex + ?Sized>(
    complex: &C,
    ranks: &BTreeMap<(usize, i64), usize>,
    k: usize,
    w: i64,
) -> usize {
    let out = ranks.get(&(k, w)).copied().unwrap_or(0);
    let inc = complex.source(k, w).map(|s| ranks[&s]).unwrap_or(0);
    complex.slice_dimension(k, w) - out - inc
}

fn needed_sources<C: GradedComplex + ?Sized>(complex: &C, points: &[(usize, i64)]) -> BTreeSet<(usize, i64)> {
    let mut s = BTreeSet::new();
    for &(k, w) in points {
        s.insert((k, w));
        if let Some(src) = complex.source(k, w) {
            s.insert(src);
        }
    }
    s
}

/// Betti numbers for all degrees and every weight of the window. Incoming differentials from
/// outside the window are included automatically.
pub fn betti_table<C: GradedComplex + ?Sized>(
    complex: &C,
    window: (i64, i64),
    kind: &str,
    fixture: &str,
) -> Result<BettiTable, CoreError> {
    check_window(window)?;
    let points: Vec<(usize, i64)> =
        (0..=complex.top_degree()).flat_map(|k| (window.0..=window.1).map(move |w| (k, w))).collect();
    let ranks = slice_ranks(complex, needed_sources(complex, &points))?;
    let entries = points.iter().map(|&(k, w)| ((k, w), betti_from_ranks(complex, &ranks, k, w))).collect();
    Ok(BettiTable { kind: kind.to_string(), fixture: fixture.to_string(), window, entries })
}

/// First composable pair `(k, w)` with `d∘d ≠ 0`, if any.
pub fn check_square_zero<C: GradedComplex + ?Sized>(complex: &C, window: (i64, i64)) -> Result<Option<(usize, i64)>, CoreError> {
    check_window(window)?;
    let points: Vec<(usize, i64)> =
        (0..=complex.top_degree()).flat_map(|k| (window.0..=window.1).map(move |w| (k, w))).collect();
    let bad: Vec<Result<Option<(usize, i64)>, CoreError>> = points
        .par_iter()
        .map(|&(k, w)| {
            let Some((k1, w1)) = complex.target(k, w) else { return Ok(None) };
            if complex.target(k1, w1).is_none() || complex.slice_dimension(k, w) == 0 {
                return Ok(None);
            }
            let d0 = complex.differential(k, w)?;
            let d1 = complex.differential(k1, w1)?;
            Ok(if d1.mul(&d0).is_zero() { None } else { Some((k, w)) })
        })
        .collect();
    for b in bad {
        if let Some(p) = b? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// One Euler-characteristic strand: the slices `(k, w0 + k·δ)` form a subcomplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerStrand {
    pub start_weight: i64,
    pub chain_euler: i64,
    pub homology_euler: i64,
}

/// Compares `Σ(-1)^k dim C` and `Σ(-1)^k h` along every strand starting in the window.
pub fn euler_strands<C: GradedComplex + ?Sized>(complex: &C, window: (i64, i64)) -> Result<Vec<EulerStrand>, CoreError> {
    check_window(window)?;
    let step = match complex.direction() {
        Direction::Cochain => complex.weight_shift(),
        Direction::Chain => -complex.weight_shift(),
    };
    let top = complex.top_degree();
    let strand = |w0: i64| (0..=top).map(move |k| (k, w0 + k as i64 * step));
    let points: Vec<(usize, i64)> = (window.0..=window.1).flat_map(strand).collect();
    let ranks = slice_ranks(complex, needed_sources(complex, &points))?;
    Ok((window.0..=window.1)
        .map(|w0| {
            let mut chain = 0i64;
            let mut hom = 0i64;
            for (k, w) in strand(w0) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                chain += sign * complex.slice_dimension(k, w) as i64;
                hom += sign * betti_from_ranks(complex, &ranks, k, w) as i64;
            }
            EulerStrand { start_weight: w0, chain_euler: chain, homology_euler: hom }
        })
        .collect())
}

/// Outcome of comparing `left(i, w)` with `right(n - i, w + s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryVerdict {
    pub degree: usize,
    pub weight: i64,
    pub left: usize,
    pub right: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub left: BettiTable,
    pub right: BettiTable,
    pub top_degree: usize,
    /// The matching shift of smallest absolute value (ties go to the negative one).
    pub shift: Option<i64>,
    pub matching_shifts: Vec<i64>,
    /// Entry comparison at `shift`, or at `0` when no shift matches.
    pub verdicts: Vec<EntryVerdict>,
    pub passed: bool,
}

impl DualityReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &EntryVerdict> {
        self.verdicts.iter().filter(|v| !v.matches)
    }
}

fn compare_at(left: &BettiTable, right: &BettiTable, n: usize, s: i64) -> Vec<EntryVerdict> {
    left.entries
        .iter()
        .filter(|(&(i, _), _)| i <= n)
        .filter_map(|(&(i, w), &l)| {
            right.get(n - i, w + s).map(|r| EntryVerdict { degree: i, weight: w, left: l, right: r, matches: l == r })
        })
        .collect()
}

/// `h^i_w = h_{n-i, w+s}` for one uniform `s ∈ [-2n, 2n]`, wherever the partner entry exists.
pub fn compare_tables(left: BettiTable, right: BettiTable, n: usize) -> DualityReport {
    let bound = 2 * n as i64;
    let mut matching: Vec<i64> = (-bound..=bound)
        .filter(|&s| {
            let v = compare_at(&left, &right, n, s);
            !v.is_empty() && v.iter().all(|e| e.matches)
        })
        .collect();
    matching.sort_by_key(|&s| (s.abs(), s));
    let shift = matching.first().copied();
    let verdicts = compare_at(&left, &right, n, shift.unwrap_or(0));
    matching.sort();
    DualityReport { passed: shift.is_some(), left, right, top_degree: n, shift, matching_shifts: matching, verdicts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, i64, usize)]) -> BettiTable {
        BettiTable {
            kind: "t".into(),
            fixture: "f".into(),
            window: (0, 3),
            entries: entries.iter().map(|&(i, w, d)| ((i, w), d)).collect(),
        }
    }

    #[test]
    fn picks_smallest_shift() {
        let l = table(&[(0, 0, 1), (1, 0, 2)]);
        let r = table(&[(1, 1, 1), (0, 1, 2), (1, 0, 1), (0, 0, 2)]);
        let rep = compare_tables(l, r, 1);
        assert_eq!(rep.shift, Some(0));
        assert!(rep.matching_shifts.contains(&1));
        assert!(rep.passed);
    }

    #[test]
    fn reports_failure_witnesses() {
        let l = table(&[(0, 0, 1)]);
        let r = table(&[(1, 0, 2)]);
        let rep = compare_tables(l, r, 1);
        assert!(!rep.passed);
        assert_eq!(rep.mismatches().count(), 1);
    }
}
