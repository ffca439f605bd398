//! The rank-one right modules `A_P` and `Λ = ΛⁿL*` attached to a Poisson bracket.

use crate::exact::{CoreError, Poly};
use crate::modules::{FlatLeftModule, RightModuleData};

use super::lie_rinehart::LieRinehartPresentation;
use super::polyvector::{schouten_bracket, Polyvector};
use super::structure::{hamiltonian_field, PoissonStructure};

/// `A_P`: `A` as a right module with `a · u dv = {au, v}`.
///
/// The generator values come from the rule at `a = u = 1`, `v = x_j`; the rule is then checked
/// for `a, u ∈ {1, x_1, …, x_m}` against the right action extended from those values.
pub fn huebschmann_right_action(pi: &PoissonStructure, lr: &LieRinehartPresentation) -> Result<RightModuleData, CoreError> {
    let vars = pi.vars();
    let m = vars.len();
    let one = Poly::one(vars);
    let actions = (0..m).map(|j| vec![vec![pi.bracket(&one, &Poly::var(vars, j))]]).collect();
    let ap = RightModuleData { generator_names: vec!["1".into()], generator_weights: vec![0], actions };
    let mut probes = vec![one.clone()];
    probes.extend((0..m).map(|k| Poly::var(vars, k)));
    for a in &probes {
        for u in &probes {
            for j in 0..m {
                let mut section = lr.zero_section();
                section[j] = u.clone();
                let lhs = ap.act_section(lr, &vec![a.clone()], &section);
                let rhs = pi.bracket(&(a * u), &Poly::var(vars, j));
                if lhs[0] != rhs {
                    return Err(CoreError::Compatibility(format!(
                        "a·u dv = {{au, v}} fails for a = {a}, u = {u}, v = {}",
                        vars.names()[j]
                    )));
                }
            }
        }
    }
    ap.validate(lr)?;
    Ok(ap)
}

/// `Λ = ΛⁿL*` on `ω₀ = (e_1∧…∧e_n)*` with `ω₀ · e_j = -L_{e_j} ω₀`, where
/// `(L_D ω)(e_1,…,e_n) = ρ(D)(ω(e_1,…,e_n)) - Σ_i ω(e_1,…,[D,e_i],…,e_n)`.
pub fn twist_module(lr: &LieRinehartPresentation) -> Result<RightModuleData, CoreError> {
    let vars = lr.vars();
    let n = lr.rank();
    let actions = (0..n)
        .map(|j| {
            // ω₀(e_1,…,e_n) = 1 and ω₀ of the slot-i substitution picks the e_i coefficient.
            let mut lie = lr.anchor(j).apply(&Poly::one(vars));
            for i in 0..n {
                lie -= lr.structure_function(j, i, i);
            }
            vec![vec![-lie]]
        })
        .collect();
    let w = -lr.generator_weights().iter().sum::<i64>();
    let t = RightModuleData { generator_names: vec!["omega".into()], generator_weights: vec![w], actions };
    t.validate(lr)?;
    Ok(t)
}

/// `_S ΛᵐDer(A)`: the left module `ΛᵐDer(A)` with `dx_j · P = [X_{x_j}, P]`, turned into a
/// right module through the antipode `S(D) = -D + ∂(D)`, with `∂` read off `A_P`.
pub fn twist_via_antipode(
    pi: &PoissonStructure,
    lr: &LieRinehartPresentation,
    ap: &RightModuleData,
) -> Result<RightModuleData, CoreError> {
    let left = top_polyvector_module(pi, lr)?;
    let t = left.antipode_twist(ap);
    t.validate(lr)?;
    Ok(t)
}

/// `ΛᵐDer(A)` on `∂_1∧…∧∂_m` as a flat left module through Schouten brackets.
pub fn top_polyvector_module(pi: &PoissonStructure, lr: &LieRinehartPresentation) -> Result<FlatLeftModule, CoreError> {
    let vars = pi.vars();
    let m = vars.len();
    let mut top = Polyvector::zero(vars, m);
    top.add_component((0..m).collect(), Poly::one(vars));
    let mut connections = Vec::with_capacity(m);
    for j in 0..m {
        let x = hamiltonian_field(pi, &Poly::var(vars, j));
        let b = schouten_bracket(&x, &top)?;
        connections.push(vec![vec![b.component(&(0..m).collect::<Vec<_>>())]]);
    }
    let module = FlatLeftModule {
        generator_names: vec!["vol".into()],
        generator_weights: vec![-(m as i64)],
        connections,
    };
    module.validate(lr)?;
    Ok(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;
    use crate::poisson::{modular_field, to_lie_rinehart};

    fn setup(entries: &[(usize, usize, &str)], names: &[&str]) -> (PoissonStructure, LieRinehartPresentation) {
        let pi = PoissonStructure::from_upper(names, entries, None).unwrap();
        let lr = to_lie_rinehart(&pi).unwrap();
        (pi, lr)
    }

    #[test]
    fn huebschmann_generators_vanish() {
        for (e, n) in [(vec![(0, 1, "1")], vec!["x", "y"]), (vec![(0, 1, "y")], vec!["x", "y"])] {
            let (pi, lr) = setup(&e, &n);
            let ap = huebschmann_right_action(&pi, &lr).unwrap();
            assert!(ap.actions.iter().all(|m| m[0][0].is_zero()));
        }
    }

    #[test]
    fn aff1_twist_is_modular_pairing() {
        let (pi, lr) = setup(&[(0, 1, "y")], &["x", "y"]);
        let t = twist_module(&lr).unwrap();
        let phi = modular_field(&pi).field_coefficients();
        for j in 0..2 {
            assert_eq!(t.actions[j][0][0], phi[j]);
        }
        assert_eq!(t.actions[0][0][0], parse_poly("1", pi.vars()).unwrap());
        assert_eq!(t.generator_weights, vec![-2]);
    }

    #[test]
    fn two_twist_routes_agree() {
        for (e, n) in [
            (vec![(0, 1, "y")], vec!["x", "y"]),
            (vec![(0, 1, "x*y")], vec!["x", "y"]),
            (vec![(0, 1, "z"), (1, 2, "x"), (0, 2, "-y")], vec!["x", "y", "z"]),
        ] {
            let (pi, lr) = setup(&e, &n);
            let ap = huebschmann_right_action(&pi, &lr).unwrap();
            let a = twist_module(&lr).unwrap();
            let b = twist_via_antipode(&pi, &lr, &ap).unwrap();
            assert_eq!(a.actions, b.actions);
        }
    }

    #[test]
    fn unimodular_twist_is_zero() {
        let (_, lr) = setup(&[(0, 1, "1")], &["x", "y"]);
        assert!(twist_module(&lr).unwrap().actions.iter().all(|m| m[0][0].is_zero()));
    }
}
