//! Free Lie–Rinehart algebras over a polynomial ring, given on generators.

use crate::exact::{CoreError, Poly, Variables};

use super::polyvector::{schouten_bracket, Polyvector, VectorField};
use super::structure::{hamiltonian_field, PoissonStructure};

/// `L = A e_1 ⊕ … ⊕ A e_n` with anchor `ρ(e_j)` and `[e_i, e_j] = Σ_l c_ij^l e_l`.
///
/// `weight_shift` is the amount every structure map adds to the weight (`t - 2` for Poisson
/// data), so `ρ(e_j)` raises polynomial degree by `weight(e_j) + weight_shift`.
#[derive(Clone, Debug)]
pub struct LieRinehartPresentation {
    vars: Variables,
    anchor: Vec<VectorField>,
    structure: Vec<Vec<Vec<Poly>>>,
    generator_names: Vec<String>,
    generator_weights: Vec<i64>,
    weight_shift: i64,
}

/// Result of one Lie–Rinehart axiom on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

/// A section `Σ_l c_l e_l` of `L`.
pub type Section = Vec<Poly>;

impl LieRinehartPresentation {
    /// `structure[i][j][l] = c_ij^l`, given for all ordered pairs.
    pub fn new(
        vars: Variables,
        anchor: Vec<VectorField>,
        structure: Vec<Vec<Vec<Poly>>>,
        generator_names: Vec<String>,
        generator_weights: Vec<i64>,
        weight_shift: i64,
    ) -> Result<Self, CoreError> {
        let n = anchor.len();
        let shape_ok = structure.len() == n
            && structure.iter().all(|r| r.len() == n && r.iter().all(|c| c.len() == n))
            && generator_names.len() == n
            && generator_weights.len() == n;
        if !shape_ok {
            return Err(CoreError::DimensionMismatch(format!("Lie-Rinehart data of rank {n} has inconsistent shape")));
        }
        let lr = LieRinehartPresentation { vars, anchor, structure, generator_names, generator_weights, weight_shift };
        if let Some(bad) = lr.check_axioms().into_iter().find(|a| !a.passed) {
            return Err(CoreError::Compatibility(format!(
                "{}: {}",
                bad.name,
                bad.witness.unwrap_or_default()
            )));
        }
        Ok(lr)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn rank(&self) -> usize {
        self.anchor.len()
    }

    pub fn anchor(&self, j: usize) -> &VectorField {
        &self.anchor[j]
    }

    pub fn structure_function(&self, i: usize, j: usize, l: usize) -> &Poly {
        &self.structure[i][j][l]
    }

    pub fn bracket_of_generators(&self, i: usize, j: usize) -> &Section {
        &self.structure[i][j]
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_weights(&self) -> &[i64] {
        &self.generator_weights
    }

    pub fn weight_shift(&self) -> i64 {
        self.weight_shift
    }

    pub fn zero_section(&self) -> Section {
        vec![Poly::zero(&self.vars); self.rank()]
    }

    pub fn generator(&self, j: usize) -> Section {
        let mut s = self.zero_section();
        s[j] = Poly::one(&self.vars);
        s
    }

    /// `ρ(Σ c_l e_l) = Σ c_l ρ(e_l)`.
    pub fn anchor_of(&self, s: &Section) -> VectorField {
        let m = self.vars.len();
        let mut coeffs = vec![Poly::zero(&self.vars); m];
        for (c, rho) in s.iter().zip(&self.anchor) {
            if c.is_zero() {
                continue;
            }
            for (k, r) in rho.field_coefficients().iter().enumerate() {
                coeffs[k] += &(c * r);
            }
        }
        Polyvector::vector_field(&self.vars, coeffs)
    }

    /// Bracket of sections, extended from generators by the Leibniz rule.
    pub fn bracket(&self, a: &Section, b: &Section) -> Section {
        let n = self.rank();
        let mut out = self.zero_section();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for l in 0..n {
                    out[l] += &(&ab * &self.structure[i][j][l]);
                }
                out[j] += &(&a[i] * &self.anchor[i].apply(&b[j]));
                out[i] -= &(&b[j] * &self.anchor[j].apply(&a[i]));
            }
        }
        out
    }

    /// Antisymmetry, anchor compatibility and Jacobi, all on generators.
    pub fn check_axioms(&self) -> Vec<AxiomCheck> {
        let n = self.rank();
        let mut antisym = None;
        let mut anchor = None;
        let mut jacobi = None;
        for i in 0..n {
            for j in 0..n {
                let sum: Vec<Poly> = (0..n).map(|l| &self.structure[i][j][l] + &self.structure[j][i][l]).collect();
                if antisym.is_none() && sum.iter().any(|p| !p.is_zero()) {
                    antisym = Some(format!("[e_{i}, e_{j}] + [e_{j}, e_{i}] != 0"));
                }
                let lhs = self.anchor_of(&self.structure[i][j]);
                let rhs = schouten_bracket(&self.anchor[i], &self.anchor[j]).expect("same variables");
                if anchor.is_none() && lhs != rhs {
                    anchor = Some(format!("rho([e_{i}, e_{j}]) = {lhs:?} but [rho e_{i}, rho e_{j}] = {rhs:?}"));
                }
                for k in 0..n {
                    if jacobi.is_some() {
                        break;
                    }
                    let (ei, ej, ek) = (self.generator(i), self.generator(j), self.generator(k));
                    let t1 = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let t2 = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let t3 = self.bracket(&ek, &self.bracket(&ei, &ej));
                    if (0..n).any(|l| !(&(&t1[l] + &t2[l]) + &t3[l]).is_zero()) {
                        jacobi = Some(format!("Jacobi fails on (e_{i}, e_{j}, e_{k})"));
                    }
                }
            }
        }
        let mk = |name, w: Option<String>| AxiomCheck { name, passed: w.is_none(), witness: w };
        vec![mk("antisymmetry", antisym), mk("anchor-morphism", anchor), mk("jacobi", jacobi)]
    }
}

/// The cotangent Lie–Rinehart algebra: `L` free on `dx_j` of weight 1, `ρ(dx_j) = X_{x_j}`,
/// `[dx_i, dx_j] = d p_ij`.
pub fn to_lie_rinehart(pi: &PoissonStructure) -> Result<LieRinehartPresentation, CoreError> {
    PoissonStructure::new(pi.vars().clone(), pi.matrix().to_vec(), Some(pi.degree()))?;
    let vars = pi.vars().clone();
    let m = vars.len();
    let anchor = (0..m).map(|j| hamiltonian_field(pi, &Poly::var(&vars, j))).collect();
    let structure = (0..m)
        .map(|i| (0..m).map(|j| (0..m).map(|l| pi.entry(i, j).partial_derivative(l)).collect()).collect())
        .collect();
    let names = vars.names().iter().map(|n| format!("d{n}")).collect();
    LieRinehartPresentation::new(vars, anchor, structure, names, vec![1; m], pi.degree() as i64 - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    #[test]
    fn aff1_presentation() {
        let pi = PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "y")], None).unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        let v = pi.vars().clone();
        let p = |s| parse_poly(s, &v).unwrap();
        assert_eq!(lr.bracket_of_generators(0, 1), &vec![p("0"), p("1")]);
        assert_eq!(lr.anchor(0).field_coefficients(), vec![p("0"), p("y")]);
        assert_eq!(lr.anchor(1).field_coefficients(), vec![p("-y"), p("0")]);
        assert_eq!(lr.weight_shift(), -1);
    }

    #[test]
    fn symplectic_presentation_has_no_structure_functions() {
        let pi = PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "1")], None).unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        assert!(lr.bracket_of_generators(0, 1).iter().all(Poly::is_zero));
        assert_eq!(lr.anchor(0).field_coefficients()[1], Poly::one(pi.vars()));
    }

    #[test]
    fn axioms_hold_for_so3() {
        let pi = PoissonStructure::from_upper(&["x", "y", "z"], &[(0, 1, "z"), (1, 2, "x"), (0, 2, "-y")], None).unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        assert!(lr.check_axioms().iter().all(|a| a.passed));
    }

    #[test]
    fn corrupted_anchor_is_rejected() {
        let pi = PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "y")], None).unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        let v = pi.vars().clone();
        let bad_anchor = vec![lr.anchor(0).clone(), Polyvector::vector_field(&v, vec![Poly::one(&v), Poly::zero(&v)])];
        let structure = (0..2)
            .map(|i| (0..2).map(|j| lr.bracket_of_generators(i, j).clone()).collect())
            .collect();
        let r = LieRinehartPresentation::new(v, bad_anchor, structure, vec!["a".into(), "b".into()], vec![1, 1], -1);
        assert!(matches!(r, Err(CoreError::Compatibility(_))));
    }
}
