//! The enveloping Hopf algebroid `H = A ⊗ A^op` of a finite-dimensional algebra, checked
//! exhaustively on basis elements.
//!
//! Elements of `H` are coordinate vectors over `e_i ⊗ e_j` (index `i·d + j`); the product is
//! `(a⊗b)(a'⊗b') = aa' ⊗ b'b`. Two- and three-fold tensors are sparse vectors over index tuples,
//! compared in the quotient by the balancing relations of the tensor product in question.

use num_traits::{One, Zero};

use super::finite_algebra::{Elem, FiniteAlgebra};
use super::linear::{nullspace, rank, solve, svec_add, svec_axpy, svec_sub, Quotient, SVec};
use super::report::{AxiomReport, Check, CheckResult};
use crate::exact::Rational;

pub type HElem = Vec<Rational>;

/// Balancing relation of a two-fold tensor product of copies of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Balance {
    /// `U_◁ ⊗_A _▷U`: `t(a)u ⊗ v = u ⊗ s(a)v`.
    LeftA,
    /// `_▶U ⊗_{A^op} U_◁`: `u t(a) ⊗ v = u ⊗ t(a)v`.
    AOp,
    /// `U_◀ ⊗^A _▷U`: `u s(a) ⊗ v = u ⊗ s(a)v`.
    RightA,
    /// Codomain of `Δ_r`: `h s^r(c) ⊗ h' = h ⊗ h' t^r(c)`.
    RightBase,
}

pub struct Enveloping {
    alg: FiniteAlgebra,
    d: usize,
    n: usize,
    prod: Vec<Vec<HElem>>,
}

fn add_scaled(out: &mut [Rational], c: &Rational, x: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (o, v) in out.iter_mut().zip(x) {
        if !v.is_zero() {
            *o += c * v;
        }
    }
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl Enveloping {
    pub fn new(alg: FiniteAlgebra) -> Self {
        let d = alg.dim();
        let n = d * d;
        let mut prod = vec![Vec::with_capacity(n); n];
        for (p, row) in prod.iter_mut().enumerate() {
            for q in 0..n {
                let (i, j) = (p / d, p % d);
                let (k, l) = (q / d, q % d);
                let left = alg.basis_product(i, k).clone();
                let right = alg.basis_product(l, j).clone();
                row.push(pure_in(d, &left, &right));
            }
        }
        Enveloping { alg, d, n, prod }
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self, p: usize) -> HElem {
        let mut v = vec![Rational::zero(); self.n];
        v[p] = Rational::one();
        v
    }

    pub fn basis_name(&self, p: usize) -> String {
        format!("{}⊗{}", self.alg.basis[p / self.d], self.alg.basis[p % self.d])
    }

    pub fn zero(&self) -> HElem {
        vec![Rational::zero(); self.n]
    }

    pub fn one(&self) -> HElem {
        self.pure(self.alg.unit(), self.alg.unit())
    }

    pub fn pure(&self, a: &Elem, b: &Elem) -> HElem {
        pure_in(self.d, a, b)
    }

    pub fn mul(&self, x: &HElem, y: &HElem) -> HElem {
        let mut out = self.zero();
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, yq) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_scaled(&mut out, &(xp * yq), &self.prod[p][q]);
            }
        }
        out
    }

    pub fn s_l(&self, a: &Elem) -> HElem {
        self.pure(a, self.alg.unit())
    }

    pub fn t_l(&self, b: &Elem) -> HElem {
        self.pure(self.alg.unit(), b)
    }

    pub fn s_r(&self, a: &Elem) -> HElem {
        self.pure(self.alg.unit(), a)
    }

    pub fn t_r(&self, b: &Elem) -> HElem {
        self.pure(b, self.alg.unit())
    }

    /// `ε(a⊗b) = ab`.
    pub fn counit(&self, x: &HElem) -> Elem {
        self.on_pure(x, |a, b| self.alg.mul(a, b))
    }

    /// `∂(a⊗b) = ba`.
    pub fn right_counit(&self, x: &HElem) -> Elem {
        self.on_pure(x, |a, b| self.alg.mul(b, a))
    }

    fn on_pure(&self, x: &HElem, f: impl Fn(&Elem, &Elem) -> Elem) -> Elem {
        let mut out = self.alg.zero();
        for (p, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let v = f(&self.alg.basis_elem(p / self.d), &self.alg.basis_elem(p % self.d));
            add_scaled(&mut out, c, &v);
        }
        out
    }

    pub fn t2(&self, x: &HElem, y: &HElem) -> SVec {
        let mut out = SVec::new();
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (q, yq) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                svec_add(&mut out, p * self.n + q, &(xp * yq));
            }
        }
        out
    }

    fn split(&self, idx: usize) -> (usize, usize) {
        (idx / self.n, idx % self.n)
    }

    /// Extends `f` on pairs of basis elements bilinearly.
    pub fn bil2(&self, t: &SVec, f: impl Fn(usize, usize) -> SVec) -> SVec {
        let mut out = SVec::new();
        for (&idx, c) in t {
            let (p, q) = self.split(idx);
            svec_axpy(&mut out, c, &f(p, q));
        }
        out
    }

    pub fn bil2h(&self, t: &SVec, f: impl Fn(usize, usize) -> HElem) -> HElem {
        let mut out = self.zero();
        for (&idx, c) in t {
            let (p, q) = self.split(idx);
            add_scaled(&mut out, c, &f(p, q));
        }
        out
    }

    /// `x ⊗ y ↦ f(x) ⊗ g(y)`.
    pub fn each2(&self, t: &SVec, f: impl Fn(&HElem) -> HElem, g: impl Fn(&HElem) -> HElem) -> SVec {
        self.bil2(t, |p, q| self.t2(&f(&self.basis(p)), &g(&self.basis(q))))
    }

    /// Extends `f` on basis elements linearly to a tensor-valued map.
    pub fn lin_to_tensor(&self, x: &HElem, f: impl Fn(usize) -> SVec) -> SVec {
        let mut out = SVec::new();
        for (p, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            svec_axpy(&mut out, c, &f(p));
        }
        out
    }

    /// `Δ_ℓ(a⊗b) = (a⊗1) ⊗_A (1⊗b)`.
    pub fn left_coproduct(&self, x: &HElem) -> SVec {
        self.lin_to_tensor(x, |p| {
            let (i, j) = (p / self.d, p % self.d);
            self.t2(&self.s_l(&self.alg.basis_elem(i)), &self.t_l(&self.alg.basis_elem(j)))
        })
    }

    /// `Δ_r(a⊗b) = (a⊗1) ⊗_B (1⊗b)`, the leg order that is counital for `∂`.
    pub fn right_coproduct(&self, x: &HElem) -> SVec {
        self.lin_to_tensor(x, |p| {
            let (i, j) = (p / self.d, p % self.d);
            self.t2(&self.t_r(&self.alg.basis_elem(i)), &self.s_r(&self.alg.basis_elem(j)))
        })
    }

    /// `(1⊗a) ⊗ (b⊗1)`: the right coproduct with its legs exchanged.
    pub fn swapped_right_coproduct(&self, x: &HElem) -> SVec {
        self.lin_to_tensor(x, |p| {
            let (i, j) = (p / self.d, p % self.d);
            self.t2(&self.s_r(&self.alg.basis_elem(i)), &self.t_r(&self.alg.basis_elem(j)))
        })
    }

    pub fn relation(&self, kind: Balance, x: &HElem, y: &HElem, a: &Elem) -> SVec {
        let (l, r) = match kind {
            Balance::LeftA => (
                self.t2(&self.mul(&self.t_l(a), x), y),
                self.t2(x, &self.mul(&self.s_l(a), y)),
            ),
            Balance::AOp => (
                self.t2(&self.mul(x, &self.t_l(a)), y),
                self.t2(x, &self.mul(&self.t_l(a), y)),
            ),
            Balance::RightA => (
                self.t2(&self.mul(x, &self.s_l(a)), y),
                self.t2(x, &self.mul(&self.s_l(a), y)),
            ),
            Balance::RightBase => (
                self.t2(&self.mul(x, &self.s_r(a)), y),
                self.t2(x, &self.mul(y, &self.t_r(a))),
            ),
        };
        svec_sub(&l, &r)
    }

    fn pair_relations(&self, kind: Balance) -> Vec<SVec> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in 0..self.n {
                for a in 0..self.d {
                    out.push(self.relation(kind, &self.basis(p), &self.basis(q), &self.alg.basis_elem(a)));
                }
            }
        }
        out
    }

    pub fn pair_quotient(&self, kind: Balance) -> Quotient {
        Quotient::new(self.n * self.n, self.pair_relations(kind))
    }

    /// Three-fold tensors balanced by `k12` between the first two legs and `k23` between the last two.
    pub fn triple_quotient(&self, k12: Balance, k23: Balance) -> Quotient {
        let nn = self.n * self.n;
        let mut rels = Vec::new();
        for rel in self.pair_relations(k12) {
            for r in 0..self.n {
                rels.push(rel.iter().map(|(&i, c)| (i * self.n + r, c.clone())).collect());
            }
        }
        for rel in self.pair_relations(k23) {
            for p in 0..self.n {
                rels.push(rel.iter().map(|(&i, c)| (p * nn + i, c.clone())).collect());
            }
        }
        Quotient::new(nn * self.n, rels)
    }

    /// `t ⊗ e_r` for a pair tensor `t`.
    pub fn append(&self, t: &SVec, r: usize) -> SVec {
        t.iter().map(|(&i, c)| (i * self.n + r, c.clone())).collect()
    }

    /// `e_p ⊗ t` for a pair tensor `t`.
    pub fn prepend(&self, p: usize, t: &SVec) -> SVec {
        t.iter().map(|(&i, c)| (p * self.n * self.n + i, c.clone())).collect()
    }

    pub fn triple_basis(&self, p: usize, q: usize, r: usize) -> SVec {
        let mut v = SVec::new();
        v.insert((p * self.n + q) * self.n + r, Rational::one());
        v
    }

    /// `α_ℓ(u ⊗ v) = u_(1) ⊗ u_(2)v`.
    pub fn alpha_l(&self, t: &SVec) -> SVec {
        self.bil2(t, |p, q| {
            let dp = self.left_coproduct(&self.basis(p));
            self.each2(&dp, |x| x.clone(), |y| self.mul(y, &self.basis(q)))
        })
    }

    /// `α_r(u ⊗ v) = u_(1)v ⊗ u_(2)`.
    pub fn alpha_r(&self, t: &SVec) -> SVec {
        self.bil2(t, |p, q| {
            let dp = self.left_coproduct(&self.basis(p));
            self.each2(&dp, |x| self.mul(x, &self.basis(q)), |y| y.clone())
        })
    }

    pub fn multiply(&self, t: &SVec) -> HElem {
        self.bil2h(t, |p, q| self.prod[p][q].clone())
    }

    pub fn apply(&self, images: &[HElem], x: &HElem) -> HElem {
        let mut out = self.zero();
        for (p, c) in x.iter().enumerate() {
            add_scaled(&mut out, c, &images[p]);
        }
        out
    }
}

fn pure_in(d: usize, a: &Elem, b: &Elem) -> HElem {
    let mut v = vec![Rational::zero(); d * d];
    for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            v[i * d + j] = ai * bj;
        }
    }
    v
}

/// Matrix (rows = target coordinates) of a linear map between two quotients.
fn quotient_map(src: &Quotient, dst: &Quotient, f: impl Fn(&SVec) -> SVec) -> Vec<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = (0..src.dim()).map(|k| dst.coordinates(&f(&src.basis_vector(k)))).collect();
    transpose(&cols, dst.dim())
}

fn transpose(cols: &[Vec<Rational>], rows: usize) -> Vec<Vec<Rational>> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

fn from_coordinates(q: &Quotient, x: &[Rational]) -> SVec {
    let mut out = SVec::new();
    for (k, c) in x.iter().enumerate() {
        svec_axpy(&mut out, c, &q.basis_vector(k));
    }
    out
}

/// A finite-dimensional `H`-module, by the action of each basis element of `H` on each basis vector.
#[derive(Clone, Debug)]
pub struct HModule {
    pub name: String,
    pub dim: usize,
    /// `table[p][k]`: `e_p · v_k` for left modules, `v_k · e_p` for right modules.
    table: Vec<Vec<Elem>>,
}

impl HModule {
    pub fn act(&self, h: &HElem, v: &Elem) -> Elem {
        let mut out = vec![Rational::zero(); self.dim];
        for (p, hp) in h.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (k, vk) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_scaled(&mut out, &(hp * vk), &self.table[p][k]);
            }
        }
        out
    }

    pub fn basis(&self, k: usize) -> Elem {
        let mut v = vec![Rational::zero(); self.dim];
        v[k] = Rational::one();
        v
    }
}

/// Linear maps `λ` (as images of basis vectors) with `λ ∘ f_o = g_o ∘ λ` for every pair `(f_o, g_o)`.
fn intertwiners(src_dim: usize, dst_dim: usize, ops: &[(Vec<Elem>, Vec<Elem>)]) -> Vec<Vec<Elem>> {
    let unknowns = src_dim * dst_dim;
    let mut rows = Vec::new();
    for (f, g) in ops {
        for k in 0..src_dim {
            for r in 0..dst_dim {
                let mut row = vec![Rational::zero(); unknowns];
                for (j, c) in f[k].iter().enumerate() {
                    row[j * dst_dim + r] += c;
                }
                for s in 0..dst_dim {
                    row[k * dst_dim + s] -= &g[s][r];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); unknowns]);
    }
    nullspace(&rows, unknowns)
        .into_iter()
        .map(|v| v.chunks(dst_dim).map(|c| c.to_vec()).collect())
        .collect()
}

fn apply_map(lambda: &[Elem], v: &Elem, dst_dim: usize) -> Elem {
    let mut out = vec![Rational::zero(); dst_dim];
    for (k, c) in v.iter().enumerate() {
        add_scaled(&mut out, c, &lambda[k]);
    }
    out
}

fn flatten(lambda: &[Elem]) -> Vec<Rational> {
    lambda.iter().flatten().cloned().collect()
}

/// Coordinates of `lambda` in a basis of maps, if it lies in their span.
fn map_coordinates(basis: &[Vec<Elem>], lambda: &[Elem]) -> Option<Vec<Rational>> {
    let target = flatten(lambda);
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(b)).collect();
    let m = transpose(&cols, target.len());
    solve(&m, &target, basis.len())
}

/// A Galois map: label, source quotient, the map and the balancing of its source.
type GaloisMap<'a> = (&'a str, &'a Quotient, &'a dyn Fn(&SVec) -> SVec, Balance);

/// Everything the checks share: quotients, the derived antipode and both translation maps.
struct Context {
    h: Enveloping,
    q_l: Quotient,
    q_aop: Quotient,
    q_r: Quotient,
    q_rb: Quotient,
    antipode: Vec<HElem>,
    /// `u₊ ⊗ u₋` per basis element.
    tau: Vec<SVec>,
    /// `u₍₊₎ ⊗ u₍₋₎` per basis element.
    tau_r: Vec<SVec>,
}

const BIALG: &str = "bialgebroid";
const GALOIS: &str = "hopf-galois";
const TRANS: &str = "translation";
const ANTI: &str = "antipode";
const MODS: &str = "modules";
const DUAL: &str = "dualizing";

/// Solves `α_ℓ(1 ⊗ S(t^ℓ(b))) = t^ℓ(b) ⊗ 1` for `S` on the image of `t^ℓ`, then extends by
/// `S∘s^ℓ = s^r∘ν` and anti-multiplicativity over `a⊗b = s^ℓ(a)t^ℓ(b)`.
pub fn derive_antipode(h: &Enveloping, q_l: &Quotient) -> Result<Vec<HElem>, String> {
    let one = h.one();
    let cols: Vec<Vec<Rational>> = (0..h.n).map(|q| q_l.coordinates(&h.t2(&one, &h.basis(q)))).collect();
    let m = transpose(&cols, q_l.dim());
    if rank(&m) != h.n {
        return Err("v ↦ 1 ⊗ v is not injective; the antipode is not determined".into());
    }
    let mut on_target = Vec::with_capacity(h.d);
    for j in 0..h.d {
        let b = h.alg.basis_elem(j);
        let rhs = q_l.coordinates(&h.t2(&h.t_l(&b), &one));
        let x = solve(&m, &rhs, h.n).ok_or_else(|| format!("no solution for S(t(e_{j}))"))?;
        on_target.push(x);
    }
    let mut s = Vec::with_capacity(h.n);
    for p in 0..h.n {
        let (i, j) = (p / h.d, p % h.d);
        let a = h.alg.basis_elem(i);
        let nu_a = h.right_counit(&h.s_l(&a));
        s.push(h.mul(&on_target[j], &h.s_r(&nu_a)));
    }
    Ok(s)
}

fn invert_linear(h: &Enveloping, images: &[HElem]) -> Option<Vec<HElem>> {
    let m = transpose(images, h.n);
    (0..h.n).map(|p| solve(&m, &h.basis(p), h.n)).collect()
}

/// Runs every check on `A ⊗ A^op`.
pub fn enveloping_report(alg: &FiniteAlgebra) -> AxiomReport {
    let h = Enveloping::new(alg.clone());
    let mut report = AxiomReport { structure: format!("Ae-{}", alg.name), checks: Vec::new(), diagnostics: Vec::new() };
    let q_l = h.pair_quotient(Balance::LeftA);
    let q_aop = h.pair_quotient(Balance::AOp);
    let q_r = h.pair_quotient(Balance::RightA);
    let q_rb = h.pair_quotient(Balance::RightBase);

    report.checks.extend(bialgebroid_checks(&h, &q_l, &q_rb, &mut report.diagnostics));

    let mut derived = Check::new(ANTI, "antipode-derived");
    let antipode = match derive_antipode(&h, &q_l) {
        Ok(s) => {
            derived.case(true, String::new);
            s
        }
        Err(msg) => {
            derived.case(false, || msg);
            report.checks.push(derived.finish());
            return report;
        }
    };
    report.checks.push(derived.finish());
    let flip = (0..h.n).all(|p| antipode[p] == h.basis((p % h.d) * h.d + p / h.d));
    report.diagnostics.push(format!("derived antipode is the flip a⊗b ↦ b⊗a: {flip}"));
    let mut bij = Check::new(ANTI, "antipode-bijective");
    let antipode_inv = invert_linear(&h, &antipode);
    bij.case(antipode_inv.is_some(), || "S is singular".into());
    report.checks.push(bij.finish());
    let Some(antipode_inv) = antipode_inv else { return report };

    let tau = (0..h.n)
        .map(|p| h.each2(&h.right_coproduct(&h.basis(p)), |x| x.clone(), |y| h.apply(&antipode, y)))
        .collect();
    let tau_r = (0..h.n)
        .map(|p| {
            let d = h.right_coproduct(&h.basis(p));
            h.bil2(&d, |x, y| h.t2(&h.basis(y), &antipode_inv[x]))
        })
        .collect();
    let ctx = Context { h, q_l, q_aop, q_r, q_rb, antipode, tau, tau_r };
    report.checks.extend(ctx.galois_checks());
    report.checks.extend(ctx.translation_checks());
    report.checks.extend(ctx.antipode_checks());
    report.checks.extend(ctx.module_checks());
    report.checks.extend(ctx.dualizing_checks());
    report
}

fn bialgebroid_checks(h: &Enveloping, q_l: &Quotient, q_rb: &Quotient, diagnostics: &mut Vec<String>) -> Vec<CheckResult> {
    let n = h.n;
    let d = h.d;
    let q_ll = h.triple_quotient(Balance::LeftA, Balance::LeftA);
    let q_rr = h.triple_quotient(Balance::RightBase, Balance::RightBase);
    let mut out = Vec::new();
    let name = |p: usize| h.basis_name(p);
    let ab = |i: usize| h.alg.basis_elem(i);

    let coassoc = |delta: &dyn Fn(&HElem) -> SVec, q: &Quotient, label: &str| {
        let mut c = Check::new(BIALG, label);
        for p in 0..n {
            let dp = delta(&h.basis(p));
            let lhs = h.bil2(&dp, |x, y| h.append(&delta(&h.basis(x)), y));
            let rhs = h.bil2(&dp, |x, y| h.prepend(x, &delta(&h.basis(y))));
            c.case(q.equal(&lhs, &rhs), || name(p));
        }
        c.finish()
    };
    out.push(coassoc(&|x| h.left_coproduct(x), &q_ll, "coassociativity"));

    let mut lc = Check::new(BIALG, "left-counit");
    let mut rc = Check::new(BIALG, "right-counit");
    for p in 0..n {
        let u = h.basis(p);
        let dp = h.left_coproduct(&u);
        let l = h.bil2h(&dp, |x, y| h.mul(&h.s_l(&h.counit(&h.basis(x))), &h.basis(y)));
        let r = h.bil2h(&dp, |x, y| h.mul(&h.t_l(&h.counit(&h.basis(y))), &h.basis(x)));
        lc.case(l == u, || name(p));
        rc.case(r == u, || name(p));
    }
    out.push(lc.finish());
    out.push(rc.finish());

    let mut bim = Check::new(BIALG, "coproduct-bimodule");
    let mut tak = Check::new(BIALG, "takeuchi");
    let mut cast_bim = Check::new(BIALG, "castelnuovo-bimodule");
    for p in 0..n {
        let u = h.basis(p);
        let dp = h.left_coproduct(&u);
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (ab(i), ab(j));
                let moved = h.mul(&h.mul(&h.s_l(&a), &h.t_l(&b)), &u);
                let lhs = h.left_coproduct(&moved);
                let rhs = h.each2(&dp, |x| h.mul(&h.s_l(&a), x), |y| h.mul(&h.t_l(&b), y));
                bim.case(q_l.equal(&lhs, &rhs), || format!("u = {}, a = {}, b = {}", name(p), h.alg.basis[i], h.alg.basis[j]));
                let want = h.alg.mul(&h.alg.mul(&a, &h.counit(&u)), &b);
                cast_bim.case(h.counit(&moved) == want, || format!("u = {}, a = {}, b = {}", name(p), h.alg.basis[i], h.alg.basis[j]));
            }
            let a = ab(i);
            let lhs = h.each2(&dp, |x| h.mul(x, &h.t_l(&a)), |y| y.clone());
            let rhs = h.each2(&dp, |x| x.clone(), |y| h.mul(y, &h.s_l(&a)));
            tak.case(q_l.equal(&lhs, &rhs), || format!("u = {}, a = {}", name(p), h.alg.basis[i]));
        }
    }
    out.push(bim.finish());
    out.push(tak.finish());

    let mut mult = Check::new(BIALG, "multiplicativity");
    mult.case(q_l.equal(&h.left_coproduct(&h.one()), &h.t2(&h.one(), &h.one())), || "Δ(1)".into());
    let mut cast_prod = Check::new(BIALG, "castelnuovo-product");
    let mut naive = 0usize;
    for p in 0..n {
        for q in 0..n {
            let (u, v) = (h.basis(p), h.basis(q));
            let uv = h.mul(&u, &v);
            let (du, dv) = (h.left_coproduct(&u), h.left_coproduct(&v));
            let mut prod = SVec::new();
            for (&i1, c1) in &du {
                for (&i2, c2) in &dv {
                    let (x1, y1) = h.split(i1);
                    let (x2, y2) = h.split(i2);
                    let t = h.t2(&h.prod[x1][x2], &h.prod[y1][y2]);
                    svec_axpy(&mut prod, &(c1 * c2), &t);
                }
            }
            mult.case(q_l.equal(&h.left_coproduct(&uv), &prod), || format!("({}, {})", name(p), name(q)));
            let e = h.counit(&uv);
            let ev = h.counit(&v);
            let via_s = h.counit(&h.mul(&u, &h.s_l(&ev)));
            let via_t = h.counit(&h.mul(&u, &h.t_l(&ev)));
            cast_prod.case(e == via_s && e == via_t, || {
                format!("({}, {}): {} vs {} vs {}", name(p), name(q), fmt_vec(&e), fmt_vec(&via_s), fmt_vec(&via_t))
            });
            if e != h.alg.mul(&h.counit(&u), &ev) {
                naive += 1;
            }
        }
    }
    out.push(mult.finish());
    let mut cast_unit = Check::new(BIALG, "castelnuovo-unit");
    cast_unit.case(h.counit(&h.one()) == *h.alg.unit(), || "ε(1)".into());
    out.push(cast_unit.finish());
    out.push(cast_bim.finish());
    out.push(cast_prod.finish());
    diagnostics.push(format!("ε(uu') differs from ε(u)ε(u') on {naive} of {} basis pairs", n * n));

    out.push(coassoc(&|x| h.right_coproduct(x), &q_rr, "right-coassociativity"));
    let mut rcount = Check::new(BIALG, "right-counit-laws");
    let mut swapped_failures = 0usize;
    for p in 0..n {
        let u = h.basis(p);
        let counital = |t: &SVec| {
            let a = h.bil2h(t, |x, y| h.mul(&h.basis(y), &h.t_r(&h.right_counit(&h.basis(x)))));
            let b = h.bil2h(t, |x, y| h.mul(&h.basis(x), &h.s_r(&h.right_counit(&h.basis(y)))));
            a == u && b == u
        };
        rcount.case(counital(&h.right_coproduct(&u)), || name(p));
        if !counital(&h.swapped_right_coproduct(&u)) {
            swapped_failures += 1;
        }
    }
    out.push(rcount.finish());
    // Δ_r is a map of B-bimodules: right action by s^r, left action by t^r.
    let mut rwell = Check::new(BIALG, "right-coproduct-bimodule");
    for p in 0..n {
        let u = h.basis(p);
        let du = h.right_coproduct(&u);
        for a in 0..d {
            let c = ab(a);
            let lhs = h.right_coproduct(&h.mul(&u, &h.s_r(&c)));
            let rhs = h.each2(&du, |x| x.clone(), |y| h.mul(y, &h.s_r(&c)));
            rwell.case(q_rb.equal(&lhs, &rhs), || format!("{} s^r({})", name(p), h.alg.basis[a]));
            let lhs = h.right_coproduct(&h.mul(&u, &h.t_r(&c)));
            let rhs = h.each2(&du, |x| h.mul(x, &h.t_r(&c)), |y| y.clone());
            rwell.case(q_rb.equal(&lhs, &rhs), || format!("{} t^r({})", name(p), h.alg.basis[a]));
        }
    }
    out.push(rwell.finish());
    diagnostics.push(format!(
        "right coproduct with legs (1⊗a)⊗(b⊗1): counit laws fail on {swapped_failures} of {n} basis elements"
    ));
    diagnostics.push("right bialgebroid base is A^op: s^r(a)s^r(b) = s^r(ba)".into());
    out
}

impl Context {
    fn name(&self, p: usize) -> String {
        self.h.basis_name(p)
    }

    fn tau_of(&self, x: &HElem) -> SVec {
        self.h.lin_to_tensor(x, |p| self.tau[p].clone())
    }

    fn s(&self, x: &HElem) -> HElem {
        self.h.apply(&self.antipode, x)
    }

    fn galois_checks(&self) -> Vec<CheckResult> {
        let h = &self.h;
        let mut out = Vec::new();
        let maps: [GaloisMap<'_>; 2] = [
            ("alpha-l", &self.q_aop, &|t| h.alpha_l(t), Balance::AOp),
            ("alpha-r", &self.q_r, &|t| h.alpha_r(t), Balance::RightA),
        ];
        let mut matrices = Vec::new();
        for (label, src, f, kind) in maps {
            let mut wd = Check::new(GALOIS, &format!("{label}-well-defined"));
            for rel in h.pair_relations(kind) {
                wd.case(self.q_l.is_zero(&f(&rel)), || format!("relation {rel:?}"));
            }
            out.push(wd.finish());
            let m = quotient_map(src, &self.q_l, f);
            let mut bij = Check::new(GALOIS, &format!("{label}-bijective"));
            let r = rank(&m);
            bij.case(src.dim() == self.q_l.dim() && r == src.dim(), || {
                format!("dim source {}, dim target {}, rank {r}", src.dim(), self.q_l.dim())
            });
            out.push(bij.finish());
            matrices.push(m);
        }
        let mut lp = Check::new(GALOIS, "laterza-plus");
        let mut lb = Check::new(GALOIS, "laterza-bracket");
        for p in 0..h.n {
            let u = h.basis(p);
            let target = self.q_l.coordinates(&h.t2(&u, &h.one()));
            match solve(&matrices[0], &target, self.q_aop.dim()) {
                Some(x) => {
                    let inv = from_coordinates(&self.q_aop, &x);
                    lp.case(self.q_aop.equal(&inv, &self.tau[p]), || self.name(p));
                }
                None => lp.case(false, || format!("{} ⊗ 1 is not in the image of α_ℓ", self.name(p))),
            }
            let target = self.q_l.coordinates(&h.t2(&h.one(), &u));
            match solve(&matrices[1], &target, self.q_r.dim()) {
                Some(x) => {
                    let inv = from_coordinates(&self.q_r, &x);
                    lb.case(self.q_r.equal(&inv, &self.tau_r[p]), || self.name(p));
                }
                None => lb.case(false, || format!("1 ⊗ {} is not in the image of α_r", self.name(p))),
            }
        }
        out.push(lp.finish());
        out.push(lb.finish());
        out
    }

    fn translation_checks(&self) -> Vec<CheckResult> {
        let h = &self.h;
        let (n, d) = (h.n, h.d);
        let one = h.one();
        let id = |x: &HElem| x.clone();
        let q_sch4 = h.triple_quotient(Balance::LeftA, Balance::AOp);
        let q_sch5 = h.triple_quotient(Balance::AOp, Balance::LeftA);
        let mut sch = (1..=9).map(|k| Check::new(TRANS, &format!("sch{k}"))).collect::<Vec<_>>();
        for p in 0..n {
            let u = h.basis(p);
            let tau = &self.tau[p];
            for a in 0..d {
                let ta = h.t_l(&h.alg.basis_elem(a));
                let lhs = h.each2(tau, |x| h.mul(&ta, x), id);
                let rhs = h.each2(tau, id, |y| h.mul(y, &ta));
                sch[0].case(self.q_aop.equal(&lhs, &rhs), || format!("u = {}, a = {}", self.name(p), h.alg.basis[a]));
            }
            sch[1].case(self.q_l.equal(&h.alpha_l(tau), &h.t2(&u, &one)), || self.name(p));
            let du = h.left_coproduct(&u);
            let s3 = h.bil2(&du, |x, y| h.each2(&self.tau[x], id, |z| h.mul(z, &h.basis(y))));
            sch[2].case(self.q_aop.equal(&s3, &h.t2(&u, &one)), || self.name(p));
            let l4 = h.bil2(tau, |x, y| h.append(&h.left_coproduct(&h.basis(x)), y));
            let r4 = h.bil2(&du, |x, y| h.prepend(x, &self.tau[y]));
            sch[3].case(q_sch4.equal(&l4, &r4), || self.name(p));
            let l5 = h.bil2(tau, |x, y| h.prepend(x, &h.left_coproduct(&h.basis(y))));
            let r5 = h.bil2(tau, |x, y| {
                let inner = &self.tau[x];
                let mut acc = SVec::new();
                for (&idx, c) in inner {
                    let (xp, xm) = h.split(idx);
                    svec_axpy(&mut acc, c, &h.triple_basis(xp, y, xm));
                }
                acc
            });
            sch[4].case(q_sch5.equal(&l5, &r5), || self.name(p));
            for q in 0..n {
                let v = h.basis(q);
                let lhs = self.tau_of(&h.mul(&u, &v));
                let mut rhs = SVec::new();
                for (&i1, c1) in tau {
                    for (&i2, c2) in &self.tau[q] {
                        let (x1, y1) = h.split(i1);
                        let (x2, y2) = h.split(i2);
                        svec_axpy(&mut rhs, &(c1 * c2), &h.t2(&h.prod[x1][x2], &h.prod[y2][y1]));
                    }
                }
                sch[5].case(self.q_aop.equal(&lhs, &rhs), || format!("({}, {})", self.name(p), self.name(q)));
            }
            sch[6].case(h.multiply(tau) == h.s_l(&h.counit(&u)), || self.name(p));
            let s8 = h.bil2h(tau, |x, y| h.mul(&h.basis(x), &h.t_l(&h.counit(&h.basis(y)))));
            sch[7].case(s8 == u, || self.name(p));
        }
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (h.alg.basis_elem(i), h.alg.basis_elem(j));
                let lhs = self.tau_of(&h.mul(&h.s_l(&a), &h.t_l(&b)));
                let rhs = h.t2(&h.s_l(&a), &h.s_l(&b));
                sch[8].case(self.q_aop.equal(&lhs, &rhs), || format!("a = {}, b = {}", h.alg.basis[i], h.alg.basis[j]));
            }
        }
        sch.into_iter().map(Check::finish).collect()
    }

    fn antipode_checks(&self) -> Vec<CheckResult> {
        let h = &self.h;
        let (n, d) = (h.n, h.d);
        let alg = &h.alg;
        let mut out = Vec::new();
        let nu = |a: &Elem| h.right_counit(&h.s_l(a));
        let mu = |a: &Elem| h.counit(&h.s_r(a));
        let nu_inv = |a: &Elem| h.counit(&h.t_r(a));
        let mu_inv = |a: &Elem| h.right_counit(&h.t_l(a));

        let mut sq = Check::new(ANTI, "S-squared");
        let mut anti = Check::new(ANTI, "S-anti-multiplicative");
        let mut counit = Check::new(ANTI, "S-counit");
        let mut inv_counit = Check::new(ANTI, "S-inverse-counit");
        let mut cop = Check::new(ANTI, "S-coproduct");
        let mut inv_cop = Check::new(ANTI, "S-inverse-coproduct");
        for p in 0..n {
            let u = h.basis(p);
            sq.case(self.s(&self.s(&u)) == u, || self.name(p));
            for q in 0..n {
                let v = h.basis(q);
                anti.case(self.s(&h.mul(&u, &v)) == h.mul(&self.s(&v), &self.s(&u)), || {
                    format!("({}, {})", self.name(p), self.name(q))
                });
            }
            counit.case(h.right_counit(&self.s(&u)) == nu(&h.counit(&u)), || self.name(p));
            inv_counit.case(h.counit(&self.s(&u)) == mu(&h.right_counit(&u)), || self.name(p));
            let flipped = |t: &SVec| h.bil2(t, |x, y| h.t2(&self.antipode[y], &self.antipode[x]));
            cop.case(self.q_rb.equal(&h.right_coproduct(&self.s(&u)), &flipped(&h.left_coproduct(&u))), || self.name(p));
            inv_cop.case(self.q_l.equal(&h.left_coproduct(&self.s(&u)), &flipped(&h.right_coproduct(&u))), || self.name(p));
        }
        out.extend([sq.finish(), anti.finish(), counit.finish(), inv_counit.finish(), cop.finish(), inv_cop.finish()]);

        let mut src = Check::new(ANTI, "S-source");
        let mut tgt = Check::new(ANTI, "S-target");
        let mut nu_alg = Check::new(ANTI, "nu-algebra-map");
        let mut mu_alg = Check::new(ANTI, "mu-algebra-map");
        let mut nu_iv = Check::new(ANTI, "nu-inverse");
        let mut mu_iv = Check::new(ANTI, "mu-inverse");
        let mut remark = Check::new(ANTI, "remark-relation");
        for i in 0..d {
            let a = alg.basis_elem(i);
            let an = &alg.basis[i];
            src.case(self.s(&h.s_l(&a)) == h.s_r(&nu(&a)), || an.clone());
            tgt.case(self.s(&h.t_l(&a)) == h.t_r(&nu(&a)), || an.clone());
            nu_iv.case(nu_inv(&nu(&a)) == a && nu(&nu_inv(&a)) == a, || an.clone());
            mu_iv.case(mu_inv(&mu(&a)) == a && mu(&mu_inv(&a)) == a, || an.clone());
            for j in 0..d {
                let b = alg.basis_elem(j);
                // ν: A → B^op = A, μ: B = A^op → A^op.
                nu_alg.case(nu(&alg.mul(&a, &b)) == alg.mul(&nu(&a), &nu(&b)), || format!("({an}, {})", alg.basis[j]));
                mu_alg.case(mu(&alg.mul(&b, &a)) == alg.mul(&mu(&b), &mu(&a)), || format!("({an}, {})", alg.basis[j]));
            }
            for p in 0..n {
                let u = h.basis(p);
                let lhs = h.counit(&h.mul(&self.s(&u), &h.s_l(&mu(&a))));
                let rhs = mu(&h.right_counit(&h.mul(&h.s_r(&a), &u)));
                remark.case(lhs == rhs, || format!("h = {}, α = {an}", self.name(p)));
            }
        }
        nu_alg.case(nu(alg.unit()) == *alg.unit(), || "ν(1)".into());
        mu_alg.case(mu(alg.unit()) == *alg.unit(), || "μ(1)".into());
        let mut bij = Check::new(ANTI, "nu-mu-bijective");
        let nu_m: Vec<Elem> = (0..d).map(|i| nu(&alg.basis_elem(i))).collect();
        let mu_m: Vec<Elem> = (0..d).map(|i| mu(&alg.basis_elem(i))).collect();
        bij.case(rank(&nu_m) == d, || "ν singular".into());
        bij.case(rank(&mu_m) == d, || "μ singular".into());
        out.extend([src.finish(), tgt.finish(), nu_alg.finish(), mu_alg.finish(), nu_iv.finish(), mu_iv.finish(), bij.finish(), remark.finish()]);
        out
    }

    /// `A` with `h·a = ε(h s^ℓ(a))`.
    fn base_module(&self) -> HModule {
        let h = &self.h;
        let d = h.d;
        let table = (0..h.n)
            .map(|p| (0..d).map(|k| h.counit(&h.mul(&h.basis(p), &h.s_l(&h.alg.basis_elem(k))))).collect())
            .collect();
        HModule { name: "A".into(), dim: d, table }
    }

    /// `A_S`: `α·h = S(h)·α`.
    fn a_s(&self) -> HModule {
        let h = &self.h;
        let table = (0..h.n)
            .map(|p| (0..h.d).map(|k| h.counit(&h.mul(&self.antipode[p], &h.s_l(&h.alg.basis_elem(k))))).collect())
            .collect();
        HModule { name: "A_S".into(), dim: h.d, table }
    }

    /// `H` acting on itself by right multiplication.
    fn regular(&self) -> HModule {
        let h = &self.h;
        let table = (0..h.n).map(|p| (0..h.n).map(|k| h.prod[k][p].clone()).collect()).collect();
        HModule { name: "H".into(), dim: h.n, table }
    }

    fn family(&self) -> Vec<HModule> {
        vec![self.a_s(), self.regular()]
    }

    fn module_axioms(&self, m: &HModule, right: bool) -> CheckResult {
        let h = &self.h;
        let mut c = Check::new(MODS, &format!("{}-module-{}", if right { "right" } else { "left" }, m.name));
        for k in 0..m.dim {
            let v = m.basis(k);
            c.case(m.act(&h.one(), &v) == v, || format!("unit on v{k}"));
            for p in 0..h.n {
                for q in 0..h.n {
                    let (u, w) = (h.basis(p), h.basis(q));
                    let (lhs, rhs) = if right {
                        (m.act(&h.mul(&u, &w), &v), m.act(&w, &m.act(&u, &v)))
                    } else {
                        (m.act(&h.mul(&u, &w), &v), m.act(&u, &m.act(&w, &v)))
                    };
                    c.case(lhs == rhs, || format!("v{k}, ({}, {})", self.name(p), self.name(q)));
                }
            }
        }
        c.finish()
    }

    /// `(u·f)(m) = u₊(f(u₋m))` evaluated through a tensor representative of `u₊ ⊗ u₋`.
    fn gianduiotto(&self, t: &SVec, m: &HModule, f: &[Elem], v: &Elem) -> Elem {
        let mut out = vec![Rational::zero(); m.dim];
        for (&idx, c) in t {
            let (x, y) = self.h.split(idx);
            let inner = apply_map(f, &m.act(&self.h.basis(y), v), m.dim);
            add_scaled(&mut out, c, &m.act(&self.h.basis(x), &inner));
        }
        out
    }

    /// `(u·λ)(p) = λ(p u₊) u₋` for `λ: P → N` of right modules.
    fn lingotto(&self, t: &SVec, p_mod: &HModule, n_mod: &HModule, lambda: &[Elem], v: &Elem) -> Elem {
        let mut out = vec![Rational::zero(); n_mod.dim];
        for (&idx, c) in t {
            let (x, y) = self.h.split(idx);
            let image = apply_map(lambda, &p_mod.act(&self.h.basis(x), v), n_mod.dim);
            add_scaled(&mut out, c, &n_mod.act(&self.h.basis(y), &image));
        }
        out
    }

    fn lingotto_map(&self, t: &SVec, p_mod: &HModule, n_mod: &HModule, lambda: &[Elem]) -> Vec<Elem> {
        (0..p_mod.dim).map(|k| self.lingotto(t, p_mod, n_mod, lambda, &p_mod.basis(k))).collect()
    }

    /// `Hom_A(_▶P, _▶N)`: maps with `λ(p t(a)) = λ(p) t(a)`.
    fn hom_right(&self, p_mod: &HModule, n_mod: &HModule) -> Vec<Vec<Elem>> {
        let h = &self.h;
        let ops: Vec<(Vec<Elem>, Vec<Elem>)> = (0..h.d)
            .map(|a| {
                let ta = h.t_l(&h.alg.basis_elem(a));
                (
                    (0..p_mod.dim).map(|k| p_mod.act(&ta, &p_mod.basis(k))).collect(),
                    (0..n_mod.dim).map(|k| n_mod.act(&ta, &n_mod.basis(k))).collect(),
                )
            })
            .collect();
        intertwiners(p_mod.dim, n_mod.dim, &ops)
    }

    fn in_span(&self, basis: &[Vec<Elem>], lambda: &[Elem]) -> bool {
        map_coordinates(basis, lambda).is_some()
    }

    fn module_checks(&self) -> Vec<CheckResult> {
        let h = &self.h;
        let n = h.n;
        let a = self.base_module();
        let mut out = vec![self.module_axioms(&a, false)];
        for m in self.family() {
            out.push(self.module_axioms(&m, true));
        }

        // gianduiotto1 on Hom_{A^op}(A, A).
        let ops: Vec<(Vec<Elem>, Vec<Elem>)> = (0..h.d)
            .map(|i| {
                let ta = h.t_l(&h.alg.basis_elem(i));
                let m: Vec<Elem> = (0..a.dim).map(|k| a.act(&ta, &a.basis(k))).collect();
                (m.clone(), m)
            })
            .collect();
        let homs = intertwiners(a.dim, a.dim, &ops);
        let as_map = |t: &SVec, f: &[Elem]| -> Vec<Elem> { (0..a.dim).map(|k| self.gianduiotto(t, &a, f, &a.basis(k))).collect() };
        let mut wd = Check::new(MODS, "gianduiotto1-well-defined");
        for rel in h.pair_relations(Balance::AOp) {
            for f in &homs {
                wd.case(as_map(&rel, f).iter().all(|v| v.iter().all(Zero::is_zero)), || format!("relation {rel:?}"));
            }
        }
        let mut closure = Check::new(MODS, "gianduiotto1-closure");
        let mut action = Check::new(MODS, "gianduiotto1-action");
        for f in &homs {
            action.case(as_map(&self.tau_of(&h.one()), f) == *f, || "1·f".into());
            for p in 0..n {
                let uf = as_map(&self.tau[p], f);
                closure.case(self.in_span(&homs, &uf), || self.name(p));
                for q in 0..n {
                    let lhs = as_map(&self.tau_of(&h.mul(&h.basis(p), &h.basis(q))), f);
                    let rhs = as_map(&self.tau[p], &as_map(&self.tau[q], f));
                    action.case(lhs == rhs, || format!("({}, {})", self.name(p), self.name(q)));
                }
            }
        }
        out.extend([wd.finish(), closure.finish(), action.finish()]);

        // superga1 on _▶N ⊗_{A^op} A_◁ for each family member.
        for nm in self.family() {
            let dim = nm.dim * a.dim;
            let idx = |i: usize, k: usize| i * a.dim + k;
            let elem_tensor = |x: &Elem, y: &Elem| -> SVec {
                let mut v = SVec::new();
                for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (k, yk) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        svec_add(&mut v, idx(i, k), &(xi * yk));
                    }
                }
                v
            };
            let mut rels = Vec::new();
            for i in 0..nm.dim {
                for k in 0..a.dim {
                    for c in 0..h.d {
                        let ta = h.t_l(&h.alg.basis_elem(c));
                        let l = elem_tensor(&nm.act(&ta, &nm.basis(i)), &a.basis(k));
                        let r = elem_tensor(&nm.basis(i), &a.act(&ta, &a.basis(k)));
                        rels.push(svec_sub(&l, &r));
                    }
                }
            }
            let q = Quotient::new(dim, rels.clone());
            let act = |v: &SVec, t: &SVec| -> SVec {
                let mut out = SVec::new();
                for (&vi, vc) in v {
                    let (i, k) = (vi / a.dim, vi % a.dim);
                    for (&ti, tc) in t {
                        let (x, y) = h.split(ti);
                        let l = nm.act(&h.basis(x), &nm.basis(i));
                        let r = a.act(&h.basis(y), &a.basis(k));
                        svec_axpy(&mut out, &(vc * tc), &elem_tensor(&l, &r));
                    }
                }
                out
            };
            let mut wd = Check::new(MODS, &format!("superga1-{}-well-defined", nm.name));
            for rel in &rels {
                for p in 0..n {
                    wd.case(q.is_zero(&act(rel, &self.tau[p])), || format!("quotient relation under {}", self.name(p)));
                }
            }
            for rel in h.pair_relations(Balance::AOp) {
                for i in 0..dim {
                    let mut v = SVec::new();
                    v.insert(i, Rational::one());
                    wd.case(q.is_zero(&act(&v, &rel)), || format!("translation relation {rel:?}"));
                }
            }
            let mut action = Check::new(MODS, &format!("superga1-{}-action", nm.name));
            for i in 0..dim {
                let mut v = SVec::new();
                v.insert(i, Rational::one());
                action.case(q.equal(&act(&v, &self.tau_of(&h.one())), &v), || format!("unit on v{i}"));
                for p in 0..n {
                    let vp = act(&v, &self.tau[p]);
                    for qq in 0..n {
                        let lhs = act(&v, &self.tau_of(&h.mul(&h.basis(p), &h.basis(qq))));
                        let rhs = act(&vp, &self.tau[qq]);
                        action.case(q.equal(&lhs, &rhs), || format!("v{i}, ({}, {})", self.name(p), self.name(qq)));
                    }
                }
            }
            out.extend([wd.finish(), action.finish()]);
        }
        out
    }

    fn dualizing_checks(&self) -> Vec<CheckResult> {
        let h = &self.h;
        let (n, d) = (h.n, h.d);
        let alg = &h.alg;
        let a_s = self.a_s();
        let one = alg.unit().clone();
        let mut out = Vec::new();
        let nu = |a: &Elem| h.right_counit(&h.s_l(a));
        let mu = |a: &Elem| h.counit(&h.s_r(a));

        let mut item1 = Check::new(DUAL, "AS-free-basis");
        let mut item2 = Check::new(DUAL, "AS-source-action");
        let mut by_t = Vec::new();
        let mut by_s = Vec::new();
        for i in 0..d {
            let a = alg.basis_elem(i);
            let v = a_s.act(&h.t_l(&a), &one);
            item1.case(v == a, || format!("1·t({}) = {}", alg.basis[i], fmt_vec(&v)));
            by_t.push(v);
            by_s.push(a_s.act(&h.s_l(&a), &one));
            for k in 0..d {
                let alpha = alg.basis_elem(k);
                let lhs = a_s.act(&h.s_l(&a), &alpha);
                // μν(a) lives in A^op, so the product μν(a)α is αμν(a) in A.
                let rhs = alg.mul(&alpha, &mu(&nu(&a)));
                item2.case(lhs == rhs, || format!("α = {}, a = {}", alg.basis[k], alg.basis[i]));
            }
        }
        item1.case(rank(&by_t) == d, || "a ↦ 1·t(a) is not bijective".into());
        item2.case(rank(&by_s) == d, || "a ↦ 1·s(a) is not bijective".into());
        out.extend([item1.finish(), item2.finish()]);

        // Endomorphisms of _▶A_S are right multiplications p ↦ p·s(a).
        let ends = self.hom_right(&a_s, &a_s);
        let mut item_end = Check::new(DUAL, "dualizing-endomorphisms");
        let images: Vec<Vec<Elem>> = (0..d)
            .map(|i| (0..d).map(|k| a_s.act(&h.s_l(&alg.basis_elem(i)), &a_s.basis(k))).collect())
            .collect();
        for (i, m) in images.iter().enumerate() {
            item_end.case(self.in_span(&ends, m), || format!("p ↦ p·s({}) is not A-linear", alg.basis[i]));
        }
        let flat: Vec<Vec<Rational>> = images.iter().map(|m| flatten(m)).collect();
        item_end.case(ends.len() == d && rank(&flat) == d, || format!("dim End = {}, rank of image = {}", ends.len(), rank(&flat)));
        out.push(item_end.finish());

        for nm in self.family() {
            let homs = self.hom_right(&a_s, &nm);
            let mut iso = Check::new(DUAL, &format!("AS-hom-{}", nm.name));
            let at_one: Vec<Elem> = homs.iter().map(|l| apply_map(l, &one, nm.dim)).collect();
            iso.case(homs.len() == nm.dim && rank(&at_one) == nm.dim, || {
                format!("dim Hom = {}, dim N = {}, rank = {}", homs.len(), nm.dim, rank(&at_one))
            });
            for (li, l) in homs.iter().enumerate() {
                for p in 0..n {
                    let ul = self.lingotto_map(&self.tau[p], &a_s, &nm, l);
                    iso.case(self.in_span(&homs, &ul), || format!("u·λ leaves Hom for u = {}", self.name(p)));
                    let lhs = apply_map(&ul, &one, nm.dim);
                    let rhs = nm.act(&self.antipode[p], &apply_map(l, &one, nm.dim));
                    iso.case(lhs == rhs, || format!("λ{li}, u = {}", self.name(p)));
                }
            }
            out.push(iso.finish());

            // P◀ ⊗_A _▷Hom(P, N) → N with P = A_S.
            let hd = homs.len();
            let tidx = |k: usize, l: usize| k * hd + l;
            let mut rels = Vec::new();
            let mut wd_ok = true;
            for k in 0..d {
                for (l, lam) in homs.iter().enumerate() {
                    for c in 0..d {
                        let sa = h.s_l(&alg.basis_elem(c));
                        let mut rel = SVec::new();
                        for (j, v) in a_s.act(&sa, &a_s.basis(k)).iter().enumerate() {
                            svec_add(&mut rel, tidx(j, l), v);
                        }
                        let moved = self.lingotto_map(&self.tau_of(&sa), &a_s, &nm, lam);
                        match map_coordinates(&homs, &moved) {
                            Some(coords) => {
                                for (l2, v) in coords.iter().enumerate() {
                                    svec_add(&mut rel, tidx(k, l2), &-v);
                                }
                                rels.push(rel);
                            }
                            None => wd_ok = false,
                        }
                    }
                }
            }
            let q = Quotient::new(d * hd, rels.clone());
            let ev = |v: &SVec| -> Elem {
                let mut out = vec![Rational::zero(); nm.dim];
                for (&i, c) in v {
                    add_scaled(&mut out, c, &apply_map(&homs[i % hd], &a_s.basis(i / hd), nm.dim));
                }
                out
            };
            let mut item3 = Check::new(DUAL, &format!("dualizing-evaluation-{}", nm.name));
            item3.case(wd_ok, || "s(a)·λ leaves Hom".into());
            for rel in &rels {
                item3.case(ev(rel).iter().all(Zero::is_zero), || "evaluation does not factor through ⊗_A".into());
            }
            let cols: Vec<Vec<Rational>> = (0..q.dim()).map(|k| ev(&q.basis_vector(k))).collect();
            let r = rank(&cols);
            item3.case(q.dim() == nm.dim && r == nm.dim, || format!("dim tensor = {}, dim N = {}, rank = {r}", q.dim(), nm.dim));
            out.push(item3.finish());

            let mut lin = Check::new(DUAL, &format!("evaluation-right-linear-{}", nm.name));
            for k in 0..d {
                let pv = a_s.basis(k);
                for (li, lam) in homs.iter().enumerate() {
                    for p in 0..n {
                        let mut lhs = vec![Rational::zero(); nm.dim];
                        for (&idx, c) in &self.tau_r[p] {
                            let (x, y) = h.split(idx);
                            let moved = self.lingotto_map(&self.tau[y], &a_s, &nm, lam);
                            add_scaled(&mut lhs, c, &apply_map(&moved, &a_s.act(&h.basis(x), &pv), nm.dim));
                        }
                        let rhs = nm.act(&h.basis(p), &apply_map(lam, &pv, nm.dim));
                        lin.case(lhs == rhs, || format!("p = {}, λ{li}, u = {}", alg.basis[k], self.name(p)));
                    }
                }
            }
            out.push(lin.finish());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_structure_maps() {
        let h = Enveloping::new(FiniteAlgebra::dual_numbers());
        let x = h.algebra().basis_elem(1);
        let one = h.algebra().unit().clone();
        // ε(x⊗1) = x, ∂(1⊗x) = x, 1⊗x ∈ image of t^ℓ.
        assert_eq!(h.counit(&h.s_l(&x)), x);
        assert_eq!(h.right_counit(&h.t_l(&x)), x);
        assert_eq!(h.t_l(&x), h.pure(&one, &x));
        assert_eq!(h.mul(&h.s_l(&x), &h.s_l(&x)), h.zero());
    }

    #[test]
    fn upper_triangular_enveloping_product_is_twisted() {
        let h = Enveloping::new(FiniteAlgebra::upper_triangular());
        let e = |i| h.algebra().basis_elem(i);
        // (1⊗e11)(1⊗e12) = 1⊗(e12 e11) = 0, while e11 e12 = e12.
        assert_eq!(h.mul(&h.t_l(&e(0)), &h.t_l(&e(1))), h.zero());
        assert_eq!(h.mul(&h.t_l(&e(1)), &h.t_l(&e(0))), h.t_l(&e(1)));
        assert_eq!(h.right_counit(&h.pure(&e(0), &e(1))), h.algebra().mul(&e(1), &e(0)));
    }

    #[test]
    fn antipode_is_derived_as_the_flip() {
        for alg in [FiniteAlgebra::dual_numbers(), FiniteAlgebra::upper_triangular()] {
            let h = Enveloping::new(alg);
            let q_l = h.pair_quotient(Balance::LeftA);
            let s = derive_antipode(&h, &q_l).unwrap();
            let d = h.algebra().dim();
            for p in 0..h.dim() {
                assert_eq!(s[p], h.basis((p % d) * d + p / d));
            }
        }
    }

    #[test]
    fn swapped_right_coproduct_is_not_counital() {
        let h = Enveloping::new(FiniteAlgebra::dual_numbers());
        let x = h.algebra().basis_elem(1);
        let u = h.pure(&x, h.algebra().unit());
        // h^(1) s^r(∂(h^(2))) = h
        let law = |t: &SVec| h.bil2h(t, |a, b| h.mul(&h.basis(a), &h.s_r(&h.right_counit(&h.basis(b)))));
        assert_ne!(law(&h.swapped_right_coproduct(&u)), u);
        assert_eq!(law(&h.right_coproduct(&u)), u);
    }

    #[test]
    fn dual_numbers_suite_passes() {
        let r = enveloping_report(&FiniteAlgebra::dual_numbers());
        let failures: Vec<_> = r.failures().iter().map(|c| format!("{}: {:?}", c.name, c.witness)).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(r.check("sch6").unwrap().cases, 16);
    }

    #[test]
    fn upper_triangular_suite_passes() {
        let r = enveloping_report(&FiniteAlgebra::upper_triangular());
        let failures: Vec<_> = r.failures().iter().map(|c| format!("{}: {:?}", c.name, c.witness)).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(r.check("sch6").unwrap().cases, 81);
        assert!(r.diagnostics.iter().any(|d| d.starts_with("ε(uu') differs") && !d.contains(" on 0 ")));
    }
}
