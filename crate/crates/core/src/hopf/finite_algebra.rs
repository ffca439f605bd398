//! Finite-dimensional associative unital algebras given by structure constants.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{parse_rational, CoreError, Rational};

/// Element in coordinates over the algebra basis.
pub type Elem = Vec<Rational>;

/// Serialized form: `e_i e_j = Σ c e_k` listed as `[i, j, k, "c"]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiniteAlgebraSpec {
    pub name: String,
    pub basis: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    /// `table[i][j]` is the product `e_i e_j`.
    table: Vec<Vec<Elem>>,
    unit: Elem,
}

impl FiniteAlgebra {
    /// Builds the algebra and checks associativity and the unit on all basis triples.
    pub fn new(name: &str, basis: Vec<String>, constants: &[(usize, usize, usize, Rational)], unit: Elem) -> Result<Self, CoreError> {
        let d = basis.len();
        if d == 0 || unit.len() != d {
            return Err(CoreError::InvalidAlgebra(format!("algebra {name}: unit has {} coordinates for {d} basis elements", unit.len())));
        }
        let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
        for (i, j, k, c) in constants {
            if *i >= d || *j >= d || *k >= d {
                return Err(CoreError::InvalidAlgebra(format!("algebra {name}: structure constant index ({i},{j},{k}) out of range")));
            }
            table[*i][*j][*k] += c;
        }
        let alg = FiniteAlgebra { name: name.to_string(), basis, table, unit };
        alg.check_axioms()?;
        Ok(alg)
    }

    pub fn from_spec(spec: &FiniteAlgebraSpec) -> Result<Self, CoreError> {
        let constants = spec
            .structure_constants
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rational(c)?)))
            .collect::<Result<Vec<_>, CoreError>>()?;
        let unit = spec.unit.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>, _>>()?;
        FiniteAlgebra::new(&spec.name, spec.basis.clone(), &constants, unit)
    }

    fn check_axioms(&self) -> Result<(), CoreError> {
        let d = self.dim();
        for i in 0..d {
            let e = self.basis_elem(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(CoreError::InvalidAlgebra(format!("algebra {}: unit fails on {}", self.name, self.basis[i])));
            }
            for j in 0..d {
                for k in 0..d {
                    let ab = &self.table[i][j];
                    let lhs = self.mul(ab, &self.basis_elem(k));
                    let rhs = self.mul(&e, &self.table[j][k]);
                    if lhs != rhs {
                        return Err(CoreError::InvalidAlgebra(format!(
                            "algebra {}: associativity fails on ({}, {}, {})",
                            self.name, self.basis[i], self.basis[j], self.basis[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn zero(&self) -> Elem {
        vec![Rational::zero(); self.dim()]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = Rational::one();
        e
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Elem {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ai * bj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// `k[x]/(x^2)` on the basis `1, x`.
    pub fn dual_numbers() -> Self {
        let one = Rational::one();
        FiniteAlgebra::new(
            "dual-numbers",
            vec!["1".into(), "x".into()],
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone())],
            vec![one, Rational::zero()],
        )
        .expect("dual numbers are an algebra")
    }

    /// Upper-triangular 2×2 matrices on the matrix units `e11, e12, e22`.
    pub fn upper_triangular() -> Self {
        let one = Rational::one();
        FiniteAlgebra::new(
            "uppertriangular2",
            vec!["e11".into(), "e12".into(), "e22".into()],
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 2, 1, one.clone()), (2, 2, 2, one.clone())],
            vec![one.clone(), Rational::zero(), one],
        )
        .expect("upper-triangular matrices are an algebra")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn builtins_are_algebras() {
        let d = FiniteAlgebra::dual_numbers();
        assert!(d.is_commutative());
        assert_eq!(d.mul(&d.basis_elem(1), &d.basis_elem(1)), d.zero());
        let u = FiniteAlgebra::upper_triangular();
        assert!(!u.is_commutative());
        assert_eq!(u.mul(&u.basis_elem(0), &u.basis_elem(1)), u.basis_elem(1));
        assert_eq!(u.mul(&u.basis_elem(1), &u.basis_elem(0)), u.zero());
    }

    #[test]
    fn broken_units_are_rejected() {
        // a·b = a contradicts a being the unit.
        let r = FiniteAlgebra::new(
            "bad",
            vec!["a".into(), "b".into()],
            &[(0, 0, 0, rat(1)), (1, 1, 0, rat(1)), (0, 1, 0, rat(1))],
            vec![rat(1), rat(0)],
        );
        assert!(r.is_err());
    }
}
