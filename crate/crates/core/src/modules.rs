//! Coefficient modules over `V(L)` for a free Lie–Rinehart algebra `L`.
//!
//! Every module here is free over `A` on named generators `g_s` of fixed weight. A left
//! module is a flat connection `e_j · g_s = Σ_t Θ_j[t][s] g_t`; a right module is given by
//! `g_s · e_j = Σ_t R_j[t][s] g_t` and extended by `(a n)·e = a (n·e) - ρ(e)(a) n`, which is
//! the relation `e a = a e + ρ(e)(a)` of `V(L)` read on the right.

use crate::exact::{Poly, Variables};
use crate::poisson::lie_rinehart::{AxiomCheck, LieRinehartPresentation, Section};
use crate::CoreError;

/// Square matrix of polynomials, indexed `[row][column]`.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// A module element `Σ_s f_s g_s`.
pub type ModuleElement = Vec<Poly>;

pub fn zero_matrix(vars: &Variables, r: usize) -> PolyMatrix {
    vec![vec![Poly::zero(vars); r]; r]
}

pub fn identity_matrix(vars: &Variables, r: usize) -> PolyMatrix {
    let mut m = zero_matrix(vars, r);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Poly::one(vars);
    }
    m
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let r = a.len();
    let vars = a[0][0].vars().clone();
    let mut out = zero_matrix(&vars, r);
    for i in 0..r {
        for k in 0..r {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..r {
                if !b[k][j].is_zero() {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn mat_is_zero(a: &PolyMatrix) -> bool {
    a.iter().flatten().all(Poly::is_zero)
}

fn check_shapes(lr: &LieRinehartPresentation, weights: &[i64], mats: &[PolyMatrix], what: &str) -> Result<(), CoreError> {
    let r = weights.len();
    if r == 0 {
        return Err(CoreError::DimensionMismatch(format!("{what}: rank must be positive")));
    }
    if mats.len() != lr.rank() {
        return Err(CoreError::DimensionMismatch(format!(
            "{what}: {} action matrices for a Lie-Rinehart algebra of rank {}",
            mats.len(),
            lr.rank()
        )));
    }
    for m in mats {
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return Err(CoreError::DimensionMismatch(format!("{what}: action matrices must be {r}x{r}")));
        }
        if m.iter().flatten().any(|p| p.vars() != lr.vars()) {
            return Err(CoreError::VariableMismatch {
                left: lr.vars().names().to_vec(),
                right: m.iter().flatten().find(|p| p.vars() != lr.vars()).unwrap().vars().names().to_vec(),
            });
        }
    }
    Ok(())
}

/// Every entry `M_j[t][s]` must be homogeneous of degree `w(g_s) - w(g_t) + w(e_j) + shift`.
fn homogeneity_witness(lr: &LieRinehartPresentation, weights: &[i64], mats: &[PolyMatrix]) -> Option<String> {
    for (j, m) in mats.iter().enumerate() {
        for (t, row) in m.iter().enumerate() {
            for (s, p) in row.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let d = weights[s] - weights[t] + lr.generator_weights()[j] + lr.weight_shift();
                if d < 0 || !p.is_homogeneous_of(d as u32) {
                    return Some(format!("entry ({t}, {s}) for e_{j} is {p}, expected degree {d}"));
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLeftModule {
    pub generator_names: Vec<String>,
    pub generator_weights: Vec<i64>,
    pub connections: Vec<PolyMatrix>,
}

impl FlatLeftModule {
    /// The base algebra `A` with `e·a = ρ(e)(a)`.
    pub fn base(lr: &LieRinehartPresentation) -> Self {
        FlatLeftModule {
            generator_names: vec!["1".into()],
            generator_weights: vec![0],
            connections: vec![zero_matrix(lr.vars(), 1); lr.rank()],
        }
    }

    pub fn rank(&self) -> usize {
        self.generator_weights.len()
    }

    pub fn act(&self, lr: &LieRinehartPresentation, j: usize, n: &ModuleElement) -> ModuleElement {
        let rho = lr.anchor(j);
        let mut out: ModuleElement = n.iter().map(|f| rho.apply(f)).collect();
        for (s, f) in n.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let c = &self.connections[j][t][s];
                if !c.is_zero() {
                    *o += &(f * c);
                }
            }
        }
        out
    }

    /// Validates shape, homogeneity and flatness.
    pub fn validate(&self, lr: &LieRinehartPresentation) -> Result<(), CoreError> {
        check_shapes(lr, &self.generator_weights, &self.connections, "left module")?;
        if let Some(w) = homogeneity_witness(lr, &self.generator_weights, &self.connections) {
            return Err(CoreError::Compatibility(w));
        }
        if let Err(f) = check_flatness(lr, self) {
            return Err(CoreError::NotFlat { i: f.i, j: f.j });
        }
        Ok(())
    }

    /// `X ⊗_A M` with `e·(x⊗m) = e·x ⊗ m + x ⊗ e·m`.
    pub fn tensor(&self, other: &FlatLeftModule, vars: &Variables) -> FlatLeftModule {
        let (ra, rb) = (self.rank(), other.rank());
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for a in 0..ra {
            for b in 0..rb {
                names.push(format!("{}*{}", self.generator_names[a], other.generator_names[b]));
                weights.push(self.generator_weights[a] + other.generator_weights[b]);
            }
        }
        let connections = self
            .connections
            .iter()
            .zip(&other.connections)
            .map(|(x, m)| {
                let mut out = zero_matrix(vars, ra * rb);
                for a in 0..ra {
                    for b in 0..rb {
                        for t in 0..ra {
                            out[t * rb + b][a * rb + b] += &x[t][a];
                        }
                        for u in 0..rb {
                            out[a * rb + u][a * rb + b] += &m[u][b];
                        }
                    }
                }
                out
            })
            .collect();
        FlatLeftModule { generator_names: names, generator_weights: weights, connections }
    }

    /// The right module `_S M` with `m·e = S(e) m`, where `S(e) = -e + ∂(e)` and `∂(e_j)` is the
    /// scalar by which `e_j` acts on the generator of the rank-one right module `base`.
    pub fn antipode_twist(&self, base: &RightModuleData) -> RightModuleData {
        let r = self.rank();
        let actions = self
            .connections
            .iter()
            .zip(&base.actions)
            .map(|(theta, q)| {
                let mut out: PolyMatrix = theta.iter().map(|row| row.iter().map(|p| -p).collect()).collect();
                for (i, row) in out.iter_mut().enumerate().take(r) {
                    row[i] += &q[0][0];
                }
                out
            })
            .collect();
        RightModuleData {
            generator_names: self.generator_names.clone(),
            generator_weights: self.generator_weights.clone(),
            actions,
        }
    }
}

/// Curvature witness: `i < j` and the nonzero matrix `F_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    pub i: usize,
    pub j: usize,
    pub matrix: PolyMatrix,
}

/// `F_ij = ρ_i(Θ_j) - ρ_j(Θ_i) + Θ_iΘ_j - Θ_jΘ_i - Σ_p c_ij^p Θ_p` must vanish for all `i < j`.
pub fn check_flatness(lr: &LieRinehartPresentation, m: &FlatLeftModule) -> Result<(), Curvature> {
    let n = lr.rank();
    let th = &m.connections;
    for i in 0..n {
        for j in i + 1..n {
            let mut f = mat_mul(&th[i], &th[j]);
            let ji = mat_mul(&th[j], &th[i]);
            for (t, row) in f.iter_mut().enumerate() {
                for (s, e) in row.iter_mut().enumerate() {
                    *e += &lr.anchor(i).apply(&th[j][t][s]);
                    *e -= &lr.anchor(j).apply(&th[i][t][s]);
                    *e -= &ji[t][s];
                    for (p, thp) in th.iter().enumerate() {
                        let c = lr.structure_function(i, j, p);
                        if !c.is_zero() {
                            *e -= &(c * &thp[t][s]);
                        }
                    }
                }
            }
            if !mat_is_zero(&f) {
                return Err(Curvature { i, j, matrix: f });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModuleData {
    pub generator_names: Vec<String>,
    pub generator_weights: Vec<i64>,
    pub actions: Vec<PolyMatrix>,
}

impl RightModuleData {
    pub fn rank(&self) -> usize {
        self.generator_weights.len()
    }

    /// `n · e_j`.
    pub fn act(&self, lr: &LieRinehartPresentation, n: &ModuleElement, j: usize) -> ModuleElement {
        let rho = lr.anchor(j);
        let mut out: ModuleElement = n.iter().map(|f| -rho.apply(f)).collect();
        for (s, f) in n.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let c = &self.actions[j][t][s];
                if !c.is_zero() {
                    *o += &(f * c);
                }
            }
        }
        out
    }

    /// `n · (Σ c_j e_j) = Σ_j (c_j n)·e_j`.
    pub fn act_section(&self, lr: &LieRinehartPresentation, n: &ModuleElement, section: &Section) -> ModuleElement {
        let mut out = vec![Poly::zero(lr.vars()); self.rank()];
        for (j, c) in section.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cn: ModuleElement = n.iter().map(|f| c * f).collect();
            for (o, v) in out.iter_mut().zip(self.act(lr, &cn, j)) {
                *o += &v;
            }
        }
        out
    }

    /// Checks, on generators and `a ∈ {x_1..x_m}`: the relation `(g·e)·a = (a g)·e + ρ(e)(a) g`,
    /// flatness `(g·e_i)·e_j - (g·e_j)·e_i = g·[e_i, e_j]`, and weight homogeneity.
    pub fn check_compatibility(&self, lr: &LieRinehartPresentation) -> Vec<AxiomCheck> {
        let vars = lr.vars();
        let r = self.rank();
        let unit = |s: usize| -> ModuleElement {
            let mut e = vec![Poly::zero(vars); r];
            e[s] = Poly::one(vars);
            e
        };
        let mut relation = None;
        let mut flat = None;
        for s in 0..r {
            let g = unit(s);
            for j in 0..lr.rank() {
                for k in 0..vars.len() {
                    let a = Poly::var(vars, k);
                    let lhs: ModuleElement = self.act(lr, &g, j).iter().map(|f| f * &a).collect();
                    let ag: ModuleElement = g.iter().map(|f| f * &a).collect();
                    let rho_a = lr.anchor(j).apply(&a);
                    let rhs: ModuleElement =
                        self.act(lr, &ag, j).iter().zip(&g).map(|(u, v)| u + &(&rho_a * v)).collect();
                    if relation.is_none() && lhs != rhs {
                        relation = Some(format!("generator {s}, e_{j}, a = {}", vars.names()[k]));
                    }
                }
                for i in 0..j {
                    let lhs: ModuleElement = self
                        .act(lr, &self.act(lr, &g, i), j)
                        .iter()
                        .zip(self.act(lr, &self.act(lr, &g, j), i))
                        .map(|(u, v)| u - &v)
                        .collect();
                    let rhs = self.act_section(lr, &g, lr.bracket_of_generators(i, j));
                    if flat.is_none() && lhs != rhs {
                        flat = Some(format!("generator {s}, pair (e_{i}, e_{j})"));
                    }
                }
            }
        }
        let homog = homogeneity_witness(lr, &self.generator_weights, &self.actions);
        let mk = |name, w: Option<String>| AxiomCheck { name, passed: w.is_none(), witness: w };
        vec![mk("right-relation", relation), mk("right-flatness", flat), mk("homogeneity", homog)]
    }

    pub fn validate(&self, lr: &LieRinehartPresentation) -> Result<(), CoreError> {
        check_shapes(lr, &self.generator_weights, &self.actions, "right module")?;
        match self.check_compatibility(lr).into_iter().find(|c| !c.passed) {
            Some(c) => Err(CoreError::Compatibility(format!("{}: {}", c.name, c.witness.unwrap_or_default()))),
            None => Ok(()),
        }
    }

    /// The left module `M` with `e·m = m·S(e) = -m·e + ∂(e) m`, inverse to
    /// [`FlatLeftModule::antipode_twist`].
    pub fn antipode_untwist(&self, base: &RightModuleData) -> FlatLeftModule {
        let r = self.rank();
        let connections = self
            .actions
            .iter()
            .zip(&base.actions)
            .map(|(rm, q)| {
                let mut out: PolyMatrix = rm.iter().map(|row| row.iter().map(|p| -p).collect()).collect();
                for (i, row) in out.iter_mut().enumerate().take(r) {
                    row[i] += &q[0][0];
                }
                out
            })
            .collect();
        FlatLeftModule {
            generator_names: self.generator_names.clone(),
            generator_weights: self.generator_weights.clone(),
            connections,
        }
    }
}

/// The right module `N ⊗_A X` with `(n⊗x)·e = n·e ⊗ x - n ⊗ e·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedRightModule {
    pub module: RightModuleData,
    pub right_factor: String,
    pub left_factor: String,
}

pub fn combined(
    lr: &LieRinehartPresentation,
    n: &RightModuleData,
    n_name: &str,
    x: &FlatLeftModule,
    x_name: &str,
) -> CombinedRightModule {
    let (ra, rb) = (n.rank(), x.rank());
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for a in 0..ra {
        for b in 0..rb {
            names.push(format!("{}*{}", n.generator_names[a], x.generator_names[b]));
            weights.push(n.generator_weights[a] + x.generator_weights[b]);
        }
    }
    let actions = (0..lr.rank())
        .map(|j| {
            let mut out = zero_matrix(lr.vars(), ra * rb);
            for a in 0..ra {
                for b in 0..rb {
                    for t in 0..ra {
                        out[t * rb + b][a * rb + b] += &n.actions[j][t][a];
                    }
                    for u in 0..rb {
                        out[a * rb + u][a * rb + b] -= &x.connections[j][u][b];
                    }
                }
            }
            out
        })
        .collect();
    CombinedRightModule {
        module: RightModuleData { generator_names: names, generator_weights: weights, actions },
        right_factor: n_name.to_string(),
        left_factor: x_name.to_string(),
    }
}
