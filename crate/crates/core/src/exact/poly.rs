//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoreError, Rational};

/// Exponent vector; its length always equals the number of variables.
pub type Monomial = Vec<u32>;

/// An ordered list of variable names shared by every polynomial of one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variables(Arc<[String]>);

impl Variables {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Variables(names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn same(&self, other: &Variables) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// A polynomial in canonical form: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Variables,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(vars: &Variables) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Variables) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Variables, c: Rational) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn from_int(vars: &Variables, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    /// The coordinate function `x_i`.
    pub fn var(vars: &Variables, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Rational::one())
    }

    pub fn monomial(vars: &Variables, exponents: Monomial, c: Rational) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Poly { vars: vars.clone(), terms }
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &Variables, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u32]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// True when every term has total degree `d`. The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.iter().sum::<u32>() == d)
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.degree()?;
        self.is_homogeneous_of(d).then_some(d)
    }

    fn check_vars(&self, other: &Poly) -> Result<(), CoreError> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(CoreError::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, CoreError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, CoreError> {
        self.check_vars(other)?;
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplication by a monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &[u32], c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut e = m.clone();
                let k = e[i];
                e[i] -= 1;
                out.add_term(e, c * Rational::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    /// Substitutes rational values for all variables.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Terms are printed by decreasing total degree, then decreasing exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.vars.names()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{}^{}", name, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

// Operator impls panic on variable mismatch; fallible variants are `try_add` / `try_mul`.

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_add(&-rhs).expect("polynomial variable mismatch")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl std::ops::Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert!(self.vars.same(&rhs.vars), "polynomial variable mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert!(self.vars.same(&rhs.vars), "polynomial variable mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

/// Arithmetic dispatcher used by the text front end and tests.
#[derive(Clone, Debug)]
pub enum PolyOp {
    Add,
    Mul,
    Scale(Rational),
    PartialDerivative(usize),
}

pub fn poly_arith(op: &PolyOp, args: &[&Poly]) -> Result<Poly, CoreError> {
    match op {
        PolyOp::Add => {
            let (first, rest) = args.split_first().ok_or(CoreError::Arity { expected: 1, got: 0 })?;
            rest.iter().try_fold((*first).clone(), |acc, p| acc.try_add(p))
        }
        PolyOp::Mul => {
            let (first, rest) = args.split_first().ok_or(CoreError::Arity { expected: 1, got: 0 })?;
            rest.iter().try_fold((*first).clone(), |acc, p| acc.try_mul(p))
        }
        PolyOp::Scale(c) => match args {
            [p] => Ok(p.scale(c)),
            _ => Err(CoreError::Arity { expected: 1, got: args.len() }),
        },
        PolyOp::PartialDerivative(i) => match args {
            [p] if *i < p.num_vars() => Ok(p.partial_derivative(*i)),
            [p] => Err(CoreError::UnknownVariable(format!("index {} of {}", i, p.num_vars()))),
            _ => Err(CoreError::Arity { expected: 1, got: args.len() }),
        },
    }
}

/// Number of monomials of total degree `d` in `m` variables.
pub fn monomial_count(m: usize, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    if m == 0 {
        return usize::from(d == 0);
    }
    binomial(d as usize + m - 1, m - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All exponent vectors of total degree `d` in `m` variables, in ascending lexicographic order.
pub fn monomials_of_degree(m: usize, d: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    let d = d as u32;
    if m == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; m];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let m = cur.len();
        if pos == m - 1 {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Variables {
        Variables::new(&["x", "y"])
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn derivative_of_x2y() {
        let v = xy();
        let p = Poly::monomial(&v, vec![2, 1], q(1));
        assert_eq!(p.partial_derivative(0), Poly::monomial(&v, vec![1, 1], q(2)));
    }

    #[test]
    fn add_and_mul() {
        let v = xy();
        let x = Poly::var(&v, 0);
        let y = Poly::var(&v, 1);
        let one = Poly::one(&v);
        assert_eq!(&(&x * &x) - &(&y * &y) + &y * &y, &x * &x);
        assert_eq!((&x + &one) * (&x - &one), &(&x * &x) - &one);
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = Poly::var(&xy(), 0);
        let b = Poly::var(&Variables::new(&["x", "z"]), 0);
        assert!(matches!(a.try_add(&b), Err(CoreError::VariableMismatch { .. })));
        assert!(poly_arith(&PolyOp::Mul, &[&a, &b]).is_err());
    }

    #[test]
    fn monomial_enumeration_is_lex_and_complete() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), monomial_count(3, 2));
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(monomials_of_degree(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials_of_degree(2, -1).is_empty());
    }

    #[test]
    fn display_orders_by_degree() {
        let v = xy();
        let p = Poly::from_terms(&v, [(vec![0, 0], q(3)), (vec![2, 0], q(1)), (vec![1, 1], q(-1))]);
        assert_eq!(p.to_string(), "x^2 - x*y + 3");
        assert_eq!(Poly::zero(&v).to_string(), "0");
        let half = Poly::constant(&v, Rational::new(q(-1).to_integer(), 2.into()));
        assert_eq!(half.to_string(), "-1/2");
    }
}
