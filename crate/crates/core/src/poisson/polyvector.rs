//! Polyvector fields and the Schouten–Nijenhuis bracket.
//!
//! A k-vector is stored as a map from strictly increasing index sets `I` to coefficients,
//! meaning `Σ_I f_I ∂_{I_0} ∧ … ∧ ∂_{I_{k-1}}`. The bracket is computed in the odd-variable
//! picture `ξ_i = ∂_i`:
//!
//! ```text
//! [P, Q] = Σ_i (P ∂⃖/∂ξ_i)(∂Q/∂x_i) - (∂P/∂x_i)(∂⃗/∂ξ_i Q)
//! ```
//!
//! which gives `[X, f] = X(f)` and the Lie bracket on vector fields.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{CoreError, Poly, Rational, Variables};

#[derive(Clone, PartialEq, Eq)]
pub struct Polyvector {
    vars: Variables,
    degree: usize,
    components: BTreeMap<Vec<usize>, Poly>,
}

/// A degree-1 polyvector.
pub type VectorField = Polyvector;

/// Wedge of two sorted index sets: `ξ_a ξ_b = sign · ξ_{a ∪ b}`, or `None` if they overlap.
pub(crate) fn wedge_indices(a: &[usize], b: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining a's.
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((if inversions.is_multiple_of(2) { 1 } else { -1 }, out))
}

impl Polyvector {
    pub fn zero(vars: &Variables, degree: usize) -> Self {
        Polyvector { vars: vars.clone(), degree, components: BTreeMap::new() }
    }

    /// A function viewed as a 0-vector.
    pub fn function(f: Poly) -> Self {
        let mut p = Polyvector::zero(f.vars(), 0);
        p.add_component(Vec::new(), f);
        p
    }

    /// `Σ_l coeffs[l] ∂_l`.
    pub fn vector_field(vars: &Variables, coeffs: Vec<Poly>) -> Self {
        assert_eq!(coeffs.len(), vars.len());
        let mut p = Polyvector::zero(vars, 1);
        for (l, c) in coeffs.into_iter().enumerate() {
            p.add_component(vec![l], c);
        }
        p
    }

    /// Adds `coeff · ∂_{indices}` with `indices` in any order; the sign of the sort is applied.
    pub fn add_component(&mut self, indices: Vec<usize>, coeff: Poly) {
        assert_eq!(indices.len(), self.degree, "component degree mismatch");
        let mut sorted = indices.clone();
        let mut sign = 1i64;
        // bubble sort to track the permutation sign
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = -sign;
                } else if sorted[j] == sorted[j + 1] {
                    return;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) || coeff.is_zero() {
            return;
        }
        let c = if sign < 0 { -coeff } else { coeff };
        let e = self.components.entry(sorted.clone()).or_insert_with(|| Poly::zero(&self.vars));
        *e += &c;
        if e.is_zero() {
            self.components.remove(&sorted);
        }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &BTreeMap<Vec<usize>, Poly> {
        &self.components
    }

    pub fn component(&self, indices: &[usize]) -> Poly {
        self.components.get(indices).cloned().unwrap_or_else(|| Poly::zero(&self.vars))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Coefficients `X(x_l)` of a vector field.
    pub fn field_coefficients(&self) -> Vec<Poly> {
        assert_eq!(self.degree, 1);
        (0..self.vars.len()).map(|l| self.component(&[l])).collect()
    }

    /// Applies a vector field to a function.
    pub fn apply(&self, f: &Poly) -> Poly {
        assert_eq!(self.degree, 1);
        let mut out = Poly::zero(&self.vars);
        for (idx, c) in &self.components {
            out += &(c * &f.partial_derivative(idx[0]));
        }
        out
    }

    /// Coordinate divergence `Σ_l ∂_l X^l` of a vector field.
    pub fn divergence(&self) -> Poly {
        assert_eq!(self.degree, 1);
        let mut out = Poly::zero(&self.vars);
        for (idx, c) in &self.components {
            out += &c.partial_derivative(idx[0]);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Polyvector::zero(&self.vars, self.degree);
        for (idx, p) in &self.components {
            out.add_component(idx.clone(), p.scale(c));
        }
        out
    }

    pub fn add(&self, other: &Polyvector) -> Polyvector {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, p) in &other.components {
            out.add_component(idx.clone(), p.clone());
        }
        out
    }

    /// Polynomial-coefficient wedge product.
    pub fn wedge(&self, other: &Polyvector) -> Polyvector {
        let mut out = Polyvector::zero(&self.vars, self.degree + other.degree);
        for (a, p) in &self.components {
            for (b, q) in &other.components {
                if let Some((s, idx)) = wedge_indices(a, b) {
                    let c = p * q;
                    out.add_component(idx, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Right derivative `P ∂⃖/∂ξ_i`.
    fn right_xi_derivative(&self, i: usize) -> Polyvector {
        let mut out = Polyvector::zero(&self.vars, self.degree.saturating_sub(1));
        for (idx, c) in &self.components {
            if let Some(pos) = idx.iter().position(|&j| j == i) {
                let mut rest = idx.clone();
                rest.remove(pos);
                let moves = idx.len() - 1 - pos;
                out.add_component(rest, if moves % 2 == 0 { c.clone() } else { -c });
            }
        }
        out
    }

    /// Left derivative `∂⃗/∂ξ_i Q`.
    fn left_xi_derivative(&self, i: usize) -> Polyvector {
        let mut out = Polyvector::zero(&self.vars, self.degree.saturating_sub(1));
        for (idx, c) in &self.components {
            if let Some(pos) = idx.iter().position(|&j| j == i) {
                let mut rest = idx.clone();
                rest.remove(pos);
                out.add_component(rest, if pos % 2 == 0 { c.clone() } else { -c });
            }
        }
        out
    }

    fn x_derivative(&self, i: usize) -> Polyvector {
        let mut out = Polyvector::zero(&self.vars, self.degree);
        for (idx, c) in &self.components {
            out.add_component(idx.clone(), c.partial_derivative(i));
        }
        out
    }
}

impl fmt::Debug for Polyvector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(idx, c)| {
                let d: Vec<String> = idx.iter().map(|&i| format!("∂{}", self.vars.names()[i])).collect();
                if d.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})·{}", c, d.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn schouten_bracket(p: &Polyvector, q: &Polyvector) -> Result<Polyvector, CoreError> {
    if p.vars != q.vars {
        return Err(CoreError::VariableMismatch { left: p.vars.names().to_vec(), right: q.vars.names().to_vec() });
    }
    let deg = (p.degree + q.degree).checked_sub(1);
    let Some(deg) = deg else {
        // two functions
        return Ok(Polyvector::zero(&p.vars, 0));
    };
    let mut out = Polyvector::zero(&p.vars, deg);
    for i in 0..p.vars.len() {
        if p.degree > 0 {
            let t = p.right_xi_derivative(i).wedge(&q.x_derivative(i));
            out = out.add(&t);
        }
        if q.degree > 0 {
            let t = p.x_derivative(i).wedge(&q.left_xi_derivative(i));
            out = out.add(&t.scale(&crate::exact::rat(-1)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    fn xy() -> Variables {
        Variables::new(&["x", "y"])
    }

    fn field(v: &Variables, cs: &[&str]) -> Polyvector {
        Polyvector::vector_field(v, cs.iter().map(|c| parse_poly(c, v).unwrap()).collect())
    }

    fn bivector(v: &Variables, c: &str) -> Polyvector {
        let mut p = Polyvector::zero(v, 2);
        p.add_component(vec![0, 1], parse_poly(c, v).unwrap());
        p
    }

    #[test]
    fn lie_bracket_of_fields() {
        let v = xy();
        let dx = field(&v, &["1", "0"]);
        let x_dy = field(&v, &["0", "x"]);
        assert_eq!(schouten_bracket(&dx, &x_dy).unwrap(), field(&v, &["0", "1"]));
    }

    #[test]
    fn field_on_function() {
        let v = xy();
        let x = field(&v, &["y", "0"]);
        let f = Polyvector::function(parse_poly("x^2", &v).unwrap());
        assert_eq!(schouten_bracket(&x, &f).unwrap(), Polyvector::function(parse_poly("2*x*y", &v).unwrap()));
        assert_eq!(schouten_bracket(&f, &x).unwrap(), Polyvector::function(parse_poly("-2*x*y", &v).unwrap()));
    }

    #[test]
    fn constant_bivector_self_bracket_vanishes() {
        let v = xy();
        let p = bivector(&v, "1");
        assert!(schouten_bracket(&p, &p).unwrap().is_zero());
        let q = bivector(&v, "y");
        assert!(schouten_bracket(&q, &q).unwrap().is_zero());
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_indices(&[1], &[0]), Some((-1, vec![0, 1])));
        assert_eq!(wedge_indices(&[0, 2], &[1]), Some((-1, vec![0, 1, 2])));
        assert_eq!(wedge_indices(&[0], &[0]), None);
    }

    #[test]
    fn mismatched_variables() {
        let a = field(&xy(), &["1", "0"]);
        let b = field(&Variables::new(&["u", "v"]), &["1", "0"]);
        assert!(schouten_bracket(&a, &b).is_err());
    }
}
