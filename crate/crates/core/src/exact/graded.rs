//! Weight slices of `Λ^k L ⊗ M` and `Hom_A(Λ^k L, M)` for free `L`, `M` over a polynomial ring.

use std::collections::HashMap;

use super::poly::{binomial, monomials_of_degree, Monomial};

/// Shape of a graded space `Λ^• E ⊗ A ⊗ M` with `E`, `M` free of finite rank.
///
/// `exterior_weights[j]` is the weight of the j-th exterior generator in this space. For a
/// cochain space the caller passes the negated weights of the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDescriptor {
    pub num_vars: usize,
    pub exterior_weights: Vec<i64>,
    pub module_weights: Vec<i64>,
}

impl SpaceDescriptor {
    /// All exterior generators share one weight.
    pub fn uniform(num_vars: usize, rank: usize, exterior_weight: i64, module_weights: Vec<i64>) -> Self {
        SpaceDescriptor { num_vars, exterior_weights: vec![exterior_weight; rank], module_weights }
    }

    pub fn exterior_rank(&self) -> usize {
        self.exterior_weights.len()
    }

    /// Closed-form dimension of the weight-`w` slice in exterior degree `k`.
    pub fn slice_dimension(&self, k: usize, w: i64) -> usize {
        combinations(self.exterior_rank(), k)
            .iter()
            .map(|idx| {
                let ext: i64 = idx.iter().map(|&j| self.exterior_weights[j]).sum();
                self.module_weights
                    .iter()
                    .map(|&g| super::poly::monomial_count(self.num_vars, w - ext - g))
                    .sum::<usize>()
            })
            .sum()
    }
}

/// One basis vector `x^exponents · g_generator ⊗ e_{multi_index}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub multi_index: Vec<usize>,
    pub exponents: Monomial,
    pub generator: usize,
}

/// Deterministically ordered basis of one weight slice.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub exterior_degree: usize,
    pub weight: i64,
    pub elements: Vec<BasisElement>,
    index: HashMap<BasisElement, usize>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &BasisElement) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Strictly increasing `k`-subsets of `0..n`, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn graded_slice(desc: &SpaceDescriptor, k: usize, w: i64) -> GradedBasis {
    let mut elements = Vec::new();
    for idx in combinations(desc.exterior_rank(), k) {
        let ext: i64 = idx.iter().map(|&j| desc.exterior_weights[j]).sum();
        for (g, &gw) in desc.module_weights.iter().enumerate() {
            for m in monomials_of_degree(desc.num_vars, w - ext - gw) {
                elements.push(BasisElement { multi_index: idx.clone(), exponents: m, generator: g });
            }
        }
    }
    elements.sort();
    let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    GradedBasis { exterior_degree: k, weight: w, elements, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polyvector_slice_in_two_variables() {
        let d = SpaceDescriptor::uniform(2, 2, -1, vec![0]);
        let b = graded_slice(&d, 1, 0);
        assert_eq!(b.len(), 4);
        assert_eq!(graded_slice(&d, 0, 0).len(), 1);
        assert_eq!(graded_slice(&d, 3, 0).len(), 0);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let d = SpaceDescriptor::uniform(2, 3, 1, vec![0, 1]);
        let b = graded_slice(&d, 2, 4);
        assert!(b.elements.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in b.elements.iter().enumerate() {
            assert_eq!(b.index_of(e), Some(i));
            let wt: i64 = e.exponents.iter().map(|&x| x as i64).sum::<i64>()
                + e.multi_index.len() as i64
                + d.module_weights[e.generator];
            assert_eq!(wt, 4);
        }
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 0..4 {
            for k in 0..=n + 1 {
                for w in -4..7 {
                    for ew in [-1i64, 1] {
                        let d = SpaceDescriptor::uniform(3, n, ew, vec![0, -2, 1]);
                        assert_eq!(graded_slice(&d, k, w).len(), d.slice_dimension(k, w));
                    }
                }
            }
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
