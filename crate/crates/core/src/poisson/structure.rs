//! Homogeneous polynomial Poisson brackets.

use crate::exact::{parse_poly, CoreError, Poly, Rational, Variables};

use super::polyvector::{schouten_bracket, Polyvector, VectorField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    vars: Variables,
    matrix: Vec<Vec<Poly>>,
    degree: u32,
}

/// Outcome of a Jacobi test. On failure the witness is the first triple `i < j < k`
/// (lexicographic) with nonzero `{x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiVerdict {
    Pass,
    Fail { i: usize, j: usize, k: usize, jacobiator: Poly },
}

impl JacobiVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, JacobiVerdict::Pass)
    }
}

impl PoissonStructure {
    /// Validated constructor: antisymmetry, homogeneity and the Jacobi identity.
    ///
    /// `declared_degree` fixes `t` when given; otherwise it is read off the entries, and a
    /// zero bracket defaults to `t = 2`.
    pub fn new(vars: Variables, matrix: Vec<Vec<Poly>>, declared_degree: Option<u32>) -> Result<Self, CoreError> {
        let p = Self::candidate(vars, matrix, declared_degree)?;
        if let JacobiVerdict::Fail { i, j, k, jacobiator } = jacobi_check(&p) {
            return Err(CoreError::JacobiFailure { i, j, k, jacobiator: jacobiator.to_string() });
        }
        Ok(p)
    }

    /// Checks antisymmetry and homogeneity only, so Jacobi counterexamples can be built.
    pub fn candidate(vars: Variables, matrix: Vec<Vec<Poly>>, declared_degree: Option<u32>) -> Result<Self, CoreError> {
        let m = vars.len();
        if matrix.len() != m || matrix.iter().any(|r| r.len() != m) {
            return Err(CoreError::DimensionMismatch(format!("bracket matrix must be {m}x{m}")));
        }
        for row in &matrix {
            for e in row {
                if e.vars() != &vars {
                    return Err(CoreError::VariableMismatch {
                        left: vars.names().to_vec(),
                        right: e.vars().names().to_vec(),
                    });
                }
            }
        }
        for i in 0..m {
            for j in i..m {
                if matrix[i][j] != -&matrix[j][i] {
                    return Err(CoreError::NotAntisymmetric { i, j });
                }
            }
        }
        let mut degree = declared_degree;
        for i in 0..m {
            for j in i + 1..m {
                let e = &matrix[i][j];
                if e.is_zero() {
                    continue;
                }
                match (e.homogeneous_degree(), degree) {
                    (Some(d), None) => degree = Some(d),
                    (Some(d), Some(t)) if d == t => {}
                    _ => {
                        return Err(CoreError::NotHomogeneous {
                            i,
                            j,
                            entry: e.to_string(),
                            degree: degree.unwrap_or(0),
                        })
                    }
                }
            }
        }
        Ok(PoissonStructure { vars, matrix, degree: degree.unwrap_or(2) })
    }

    /// Builds a candidate from strings `(i, j, p_ij)` for `i < j`; omitted entries are zero.
    pub fn from_upper(names: &[&str], entries: &[(usize, usize, &str)], degree: Option<u32>) -> Result<Self, CoreError> {
        let vars = Variables::new(names);
        let m = vars.len();
        let mut matrix = vec![vec![Poly::zero(&vars); m]; m];
        for &(i, j, s) in entries {
            let p = parse_poly(s, &vars)?;
            matrix[j][i] = -&p;
            matrix[i][j] = p;
        }
        Self::candidate(vars, matrix, degree)
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn dimension(&self) -> usize {
        self.vars.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `p_ij = {x_i, x_j}`.
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Poly::is_zero)
    }

    /// `{f, g} = Σ p_ij ∂_i f ∂_j g`.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let m = self.dimension();
        let mut out = Poly::zero(&self.vars);
        for i in 0..m {
            let fi = f.partial_derivative(i);
            if fi.is_zero() {
                continue;
            }
            for j in 0..m {
                if self.matrix[i][j].is_zero() {
                    continue;
                }
                out += &(&(&self.matrix[i][j] * &fi) * &g.partial_derivative(j));
            }
        }
        out
    }

    /// `π = Σ_{i<j} p_ij ∂_i ∧ ∂_j`.
    pub fn bivector(&self) -> Polyvector {
        let m = self.dimension();
        let mut p = Polyvector::zero(&self.vars, 2);
        for i in 0..m {
            for j in i + 1..m {
                p.add_component(vec![i, j], self.matrix[i][j].clone());
            }
        }
        p
    }
}

/// Jacobi test through the Schouten bracket: the identity holds iff `[π, π] = 0`.
///
/// The coefficient of `∂_i∧∂_j∧∂_k` in `[π, π]` is `2` times the Jacobiator of the triple.
pub fn jacobi_check(pi: &PoissonStructure) -> JacobiVerdict {
    let b = pi.bivector();
    let s = schouten_bracket(&b, &b).expect("same variables");
    match s.components().iter().next() {
        None => JacobiVerdict::Pass,
        Some((idx, c)) => JacobiVerdict::Fail {
            i: idx[0],
            j: idx[1],
            k: idx[2],
            jacobiator: c.scale(&Rational::new(1.into(), 2.into())),
        },
    }
}

/// Brute-force Jacobiator `{x_i,{x_j,x_k}} + cyclic` of one coordinate triple.
pub fn jacobiator(pi: &PoissonStructure, i: usize, j: usize, k: usize) -> Poly {
    let x = |a: usize| Poly::var(&pi.vars, a);
    let term = |a: usize, b: usize, c: usize| pi.bracket(&x(a), &pi.bracket(&x(b), &x(c)));
    &(&term(i, j, k) + &term(j, k, i)) + &term(k, i, j)
}

/// Jacobi test by expanding the Jacobiator over every coordinate triple.
pub fn jacobi_by_expansion(pi: &PoissonStructure) -> JacobiVerdict {
    let m = pi.dimension();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let jac = jacobiator(pi, i, j, k);
                if !jac.is_zero() {
                    return JacobiVerdict::Fail { i, j, k, jacobiator: jac };
                }
            }
        }
    }
    JacobiVerdict::Pass
}

/// `X_f = {f, ·}`, so `X_f(x_l) = Σ_i p_il ∂_i f`.
pub fn hamiltonian_field(pi: &PoissonStructure, f: &Poly) -> VectorField {
    let m = pi.dimension();
    let coeffs = (0..m)
        .map(|l| {
            let mut c = Poly::zero(&pi.vars);
            for i in 0..m {
                c += &(&pi.matrix[i][l] * &f.partial_derivative(i));
            }
            c
        })
        .collect();
    Polyvector::vector_field(&pi.vars, coeffs)
}

/// The field `f ↦ div(X_f)` for the coordinate volume: `φ(x_j) = Σ_i ∂_i p_ji`.
pub fn modular_field(pi: &PoissonStructure) -> VectorField {
    let m = pi.dimension();
    let coeffs = (0..m)
        .map(|j| {
            let mut c = Poly::zero(&pi.vars);
            for i in 0..m {
                c += &pi.matrix[j][i].partial_derivative(i);
            }
            c
        })
        .collect();
    Polyvector::vector_field(&pi.vars, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff1() -> PoissonStructure {
        PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "y")], None).unwrap()
    }

    fn jfail() -> PoissonStructure {
        PoissonStructure::from_upper(&["x", "y", "z"], &[(0, 1, "y"), (1, 2, "z"), (0, 2, "-x")], None).unwrap()
    }

    fn p(s: &str, v: &Variables) -> Poly {
        parse_poly(s, v).unwrap()
    }

    #[test]
    fn jfail_witness() {
        let pi = jfail();
        let v = pi.vars().clone();
        let expected = p("-x-y-z", &v);
        assert_eq!(jacobi_by_expansion(&pi), JacobiVerdict::Fail { i: 0, j: 1, k: 2, jacobiator: expected.clone() });
        assert_eq!(jacobi_check(&pi), JacobiVerdict::Fail { i: 0, j: 1, k: 2, jacobiator: expected });
        assert!(matches!(
            PoissonStructure::new(v, pi.matrix().to_vec(), None),
            Err(CoreError::JacobiFailure { .. })
        ));
    }

    #[test]
    fn hamiltonian_fields() {
        let symp = PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "1")], None).unwrap();
        let v = symp.vars().clone();
        let xf = hamiltonian_field(&symp, &p("x*y", &v));
        assert_eq!(xf.field_coefficients(), vec![p("-x", &v), p("y", &v)]);
        let xa = hamiltonian_field(&aff1(), &p("x", &v));
        assert_eq!(xa.field_coefficients(), vec![p("0", &v), p("y", &v)]);
        assert!(hamiltonian_field(&aff1(), &Poly::one(&v)).is_zero());
    }

    #[test]
    fn modular_field_of_aff1_is_dx() {
        let pi = aff1();
        let v = pi.vars().clone();
        assert_eq!(modular_field(&pi).field_coefficients(), vec![p("1", &v), p("0", &v)]);
    }

    #[test]
    fn modular_field_is_divergence_of_hamiltonian() {
        let pi = aff1();
        let v = pi.vars().clone();
        let phi = modular_field(&pi);
        for f in ["x^3*y", "x*y^2 + 5*y", "7"] {
            let f = p(f, &v);
            assert_eq!(phi.apply(&f), hamiltonian_field(&pi, &f).divergence());
        }
    }

    #[test]
    fn rejects_bad_candidates() {
        let v = Variables::new(&["x", "y"]);
        let sym = vec![vec![Poly::zero(&v), p("x", &v)], vec![p("x", &v), Poly::zero(&v)]];
        assert!(matches!(PoissonStructure::new(v.clone(), sym, None), Err(CoreError::NotAntisymmetric { .. })));
        assert!(matches!(
            PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "x + y^2")], None),
            Err(CoreError::NotHomogeneous { .. })
        ));
        assert!(matches!(
            PoissonStructure::from_upper(&["x", "y"], &[(0, 1, "x")], Some(2)),
            Err(CoreError::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn zero_bracket_keeps_declared_degree() {
        let z = PoissonStructure::from_upper(&["x", "y"], &[], Some(2)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 2);
    }
}
