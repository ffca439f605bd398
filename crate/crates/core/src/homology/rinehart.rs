//! Rinehart complexes `Hom_A(Λ^•L, M)` and `N ⊗_A Λ^•L` for free `L`, sliced by weight.

use std::collections::BTreeMap;

use crate::exact::{graded_slice, CoreError, GradedBasis, Poly, SpaceDescriptor, SparseMatrix};
use crate::modules::{FlatLeftModule, ModuleElement, RightModuleData};
use crate::poisson::lie_rinehart::LieRinehartPresentation;
use crate::poisson::polyvector::wedge_indices;

use super::complex::{Direction, GradedComplex};

type Chain = BTreeMap<Vec<usize>, ModuleElement>;

fn accumulate(out: &mut Chain, idx: Vec<usize>, sign: i64, value: &ModuleElement) {
    let entry = out.entry(idx).or_insert_with(|| value.iter().map(|p| Poly::zero(p.vars())).collect());
    for (e, v) in entry.iter_mut().zip(value) {
        if sign > 0 {
            *e += v;
        } else {
            *e -= v;
        }
    }
}

fn scaled(value: &ModuleElement, c: &Poly) -> ModuleElement {
    value.iter().map(|v| v * c).collect()
}

/// Writes a map `multi-index → module element` as a column in the target slice.
fn to_column(
    m: &mut SparseMatrix,
    col: usize,
    target: &GradedBasis,
    chain: Chain,
) -> Result<(), CoreError> {
    for (idx, value) in chain {
        for (generator, p) in value.into_iter().enumerate() {
            for (exponents, c) in p.into_terms() {
                let e = crate::exact::BasisElement { multi_index: idx.clone(), exponents, generator };
                let row = target.index_of(&e).ok_or_else(|| {
                    CoreError::DimensionMismatch(format!(
                        "differential leaves weight {} in degree {}: {:?}",
                        target.weight, target.exterior_degree, e
                    ))
                })?;
                m.add_to(row, col, c);
            }
        }
    }
    Ok(())
}

fn basis_value(lr: &LieRinehartPresentation, rank: usize, exponents: &[u32], generator: usize) -> ModuleElement {
    let mut v = vec![Poly::zero(lr.vars()); rank];
    v[generator] = Poly::monomial(lr.vars(), exponents.to_vec(), crate::exact::rat(1));
    v
}

/// `Hom_A(Λ^k L, M)` with basis `ω(e_J) = x^a g_s`; weight `|a| + w(g_s) - Σ_{j∈J} w(e_j)`.
pub struct CochainComplex<'a> {
    lr: &'a LieRinehartPresentation,
    module: &'a FlatLeftModule,
    desc: SpaceDescriptor,
}

impl<'a> CochainComplex<'a> {
    pub fn new(lr: &'a LieRinehartPresentation, module: &'a FlatLeftModule) -> Result<Self, CoreError> {
        module.validate(lr)?;
        let desc = SpaceDescriptor {
            num_vars: lr.vars().len(),
            exterior_weights: lr.generator_weights().iter().map(|w| -w).collect(),
            module_weights: module.generator_weights.clone(),
        };
        Ok(CochainComplex { lr, module, desc })
    }

    pub fn basis(&self, k: usize, w: i64) -> GradedBasis {
        graded_slice(&self.desc, k, w)
    }
}

impl GradedComplex for CochainComplex<'_> {
    fn direction(&self) -> Direction {
        Direction::Cochain
    }

    fn top_degree(&self) -> usize {
        self.lr.rank()
    }

    fn weight_shift(&self) -> i64 {
        self.lr.weight_shift()
    }

    fn slice_dimension(&self, k: usize, w: i64) -> usize {
        self.desc.slice_dimension(k, w)
    }

    /// `(dω)(e_J) = Σ_k (-1)^k e_{J_k}·ω(e_{J∖k}) + Σ_{k<l} (-1)^{k+l} ω([e_{J_k}, e_{J_l}] ∧ e_{J∖{k,l}})`.
    fn differential(&self, k: usize, w: i64) -> Result<SparseMatrix, CoreError> {
        let n = self.lr.rank();
        let src = self.basis(k, w);
        let (k1, w1) = self.target(k, w).expect("differential out of the top degree");
        let tgt = self.basis(k1, w1);
        let mut m = SparseMatrix::new(tgt.len(), src.len());
        let r = self.module.rank();
        for (col, e) in src.elements.iter().enumerate() {
            let value = basis_value(self.lr, r, &e.exponents, e.generator);
            let j = &e.multi_index;
            let mut out = Chain::new();
            // anchor/connection terms: J' = J ∪ {p}, p sits at position pos in J'.
            for p in (0..n).filter(|p| !j.contains(p)) {
                let (sign, jp) = wedge_indices(&[p], j).expect("disjoint");
                // wedge sign (-1)^pos equals the Koszul sign of the term
                accumulate(&mut out, jp, sign, &self.module.act(self.lr, p, &value));
            }
            // bracket terms: ω(e_q ∧ e_R) with {q} ∪ R = J.
            for (qpos, &q) in j.iter().enumerate() {
                let mut rest = j.clone();
                rest.remove(qpos);
                let sign_q = if qpos % 2 == 0 { 1 } else { -1 };
                for a in (0..n).filter(|a| !rest.contains(a)) {
                    for b in (a + 1..n).filter(|b| !rest.contains(b)) {
                        let c = self.lr.structure_function(a, b, q);
                        if c.is_zero() {
                            continue;
                        }
                        let mut jp = rest.clone();
                        jp.push(a);
                        jp.push(b);
                        jp.sort();
                        let ka = jp.iter().position(|&x| x == a).unwrap();
                        let kb = jp.iter().position(|&x| x == b).unwrap();
                        let sign = sign_q * if (ka + kb) % 2 == 0 { 1 } else { -1 };
                        accumulate(&mut out, jp, sign, &scaled(&value, c));
                    }
                }
            }
            to_column(&mut m, col, &tgt, out)?;
        }
        Ok(m)
    }
}

/// `N ⊗_A Λ^k L` with basis `x^a g_s ⊗ e_I`; weight `|a| + w(g_s) + Σ_{i∈I} w(e_i)`.
pub struct ChainComplex<'a> {
    lr: &'a LieRinehartPresentation,
    module: &'a RightModuleData,
    desc: SpaceDescriptor,
}

impl<'a> ChainComplex<'a> {
    pub fn new(lr: &'a LieRinehartPresentation, module: &'a RightModuleData) -> Result<Self, CoreError> {
        module.validate(lr)?;
        let desc = SpaceDescriptor {
            num_vars: lr.vars().len(),
            exterior_weights: lr.generator_weights().to_vec(),
            module_weights: module.generator_weights.clone(),
        };
        Ok(ChainComplex { lr, module, desc })
    }

    pub fn basis(&self, k: usize, w: i64) -> GradedBasis {
        graded_slice(&self.desc, k, w)
    }
}

impl GradedComplex for ChainComplex<'_> {
    fn direction(&self) -> Direction {
        Direction::Chain
    }

    fn top_degree(&self) -> usize {
        self.lr.rank()
    }

    fn weight_shift(&self) -> i64 {
        self.lr.weight_shift()
    }

    fn slice_dimension(&self, k: usize, w: i64) -> usize {
        self.desc.slice_dimension(k, w)
    }

    /// `∂(n ⊗ e_I) = Σ_k (-1)^k n·e_{I_k} ⊗ e_{I∖k} + Σ_{k<l} (-1)^{k+l} n ⊗ [e_{I_k}, e_{I_l}] ∧ e_{I∖{k,l}}`.
    fn differential(&self, k: usize, w: i64) -> Result<SparseMatrix, CoreError> {
        let src = self.basis(k, w);
        let (k1, w1) = self.target(k, w).expect("boundary out of degree 0");
        let tgt = self.basis(k1, w1);
        let mut m = SparseMatrix::new(tgt.len(), src.len());
        let r = self.module.rank();
        for (col, e) in src.elements.iter().enumerate() {
            let value = basis_value(self.lr, r, &e.exponents, e.generator);
            let idx = &e.multi_index;
            let mut out = Chain::new();
            for (pos, &p) in idx.iter().enumerate() {
                let mut rest = idx.clone();
                rest.remove(pos);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                accumulate(&mut out, rest, sign, &self.module.act(self.lr, &value, p));
            }
            for ka in 0..idx.len() {
                for kb in ka + 1..idx.len() {
                    let (a, b) = (idx[ka], idx[kb]);
                    let mut rest = idx.clone();
                    rest.remove(kb);
                    rest.remove(ka);
                    let sign_kl = if (ka + kb) % 2 == 0 { 1 } else { -1 };
                    for q in 0..self.lr.rank() {
                        let c = self.lr.structure_function(a, b, q);
                        if c.is_zero() {
                            continue;
                        }
                        if let Some((s, ip)) = wedge_indices(&[q], &rest) {
                            accumulate(&mut out, ip, sign_kl * s, &scaled(&value, c));
                        }
                    }
                }
            }
            to_column(&mut m, col, &tgt, out)?;
        }
        Ok(m)
    }
}
