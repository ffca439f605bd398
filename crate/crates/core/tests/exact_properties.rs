use hopfdual_core::exact::{
    combinations, graded_slice, monomial_count, parse_poly, rat, Poly, Rational, SpaceDescriptor, SparseMatrix, Variables,
};
use hopfdual_core::fixtures::POISSON_FIXTURES;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn vars() -> Variables {
    Variables::new(&["x", "y", "z"])
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..6, 1i64..4), 0..6).prop_map(|terms| {
        let v = vars();
        let mut p = Poly::zero(&v);
        for ((a, b, c), n, d) in terms {
            p.add_term(vec![a, b, c], Rational::new(n.into(), d.into()));
        }
        p
    })
}

/// Textbook Gauss–Jordan over the rationals, kept separate from the library's elimination.
fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for j in 0..cols {
                    let delta = &f * &m[rank][j];
                    m[r][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-3i64..4, 1i64..3, 0u8..3), c), r).prop_map(|rows| {
            rows.into_iter()
                .map(|row| {
                    // a third of the entries are zero to keep ranks varied
                    row.into_iter()
                        .map(|(n, d, z)| if z == 0 { Rational::zero() } else { Rational::new(n.into(), d.into()) })
                        .collect()
                })
                .collect()
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(&vars()), a.clone());
    }

    #[test]
    fn parse_print_roundtrip(a in poly_strategy()) {
        let text = a.to_string();
        prop_assert_eq!(parse_poly(&text, &vars()).unwrap(), a);
    }

    #[test]
    fn rank_matches_naive_elimination(m in matrix_strategy()) {
        let expected = naive_rank(&m);
        let sm = SparseMatrix::from_dense(&m);
        prop_assert_eq!(sm.rank(), expected);
        prop_assert_eq!(sm.rank_with_threshold(0), expected);
        prop_assert_eq!(sm.rank_kernel(), (expected, m[0].len() - expected));
    }

    #[test]
    fn slice_dimension_closed_form(
        num_vars in 0usize..4,
        ext in prop::collection::vec(-1i64..=1, 0..4),
        module in prop::collection::vec(-2i64..=2, 1..3),
        k in 0usize..4,
        w in -4i64..6,
    ) {
        let desc = SpaceDescriptor { num_vars, exterior_weights: ext.clone(), module_weights: module.clone() };
        let mut expected = 0;
        for idx in combinations(ext.len(), k) {
            let e: i64 = idx.iter().map(|&j| ext[j]).sum();
            for g in &module {
                expected += monomial_count(num_vars, w - e - g);
            }
        }
        prop_assert_eq!(graded_slice(&desc, k, w).len(), expected);
        prop_assert_eq!(desc.slice_dimension(k, w), expected);
    }
}

#[test]
fn fixture_polynomials_roundtrip() {
    for f in POISSON_FIXTURES {
        let pi = f.candidate();
        for row in pi.matrix() {
            for p in row {
                assert_eq!(&parse_poly(&p.to_string(), pi.vars()).unwrap(), p, "{}", f.name);
            }
        }
    }
}

#[test]
fn rank_examples() {
    assert_eq!(SparseMatrix::new(3, 3).rank_kernel(), (0, 3));
    let m = SparseMatrix::from_dense(&[vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
    assert_eq!(m.rank_kernel(), (1, 1));
    assert_eq!(SparseMatrix::identity(4).rank_kernel(), (4, 0));
    let half = Rational::one() / rat(2);
    let m = SparseMatrix::from_dense(&[vec![half.clone(), rat(1)], vec![rat(1), rat(2)]]);
    assert_eq!(m.rank(), 1);
}
