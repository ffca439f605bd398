//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CoreError, Poly, Rational, Variables};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Variables,
}

pub fn parse_poly(text: &str, vars: &Variables) -> Result<Poly, CoreError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected '{}'", c as char)));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> CoreError {
        CoreError::Syntax { position: self.pos, message: message.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Poly, CoreError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc += &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc -= &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, CoreError> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.unary()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, CoreError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, CoreError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(CoreError::NegativeExponent { position: self.pos });
        }
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected non-negative integer exponent"));
        }
        let e: u32 = digits
            .parse()
            .map_err(|_| CoreError::Syntax { position: start, message: "exponent too large".into() })?;
        let mut out = Poly::one(self.vars);
        for _ in 0..e {
            out = &out * &base;
        }
        Ok(out)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Poly, CoreError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digit run");
                let mut den = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected integer denominator"));
                    }
                    den = d.parse().expect("digit run");
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(Poly::constant(self.vars, Rational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                match self.vars.position(name) {
                    Some(i) => Ok(Poly::var(self.vars, i)),
                    None => Err(CoreError::UnknownVariable(name.to_string())),
                }
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
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
    fn reads_terms_directly() {
        let v = xy();
        let p = parse_poly("x^2 - y*x + 3", &v).unwrap();
        let expected = Poly::from_terms(&v, [(vec![2, 0], q(1)), (vec![1, 1], q(-1)), (vec![0, 0], q(3))]);
        assert_eq!(p, expected);
    }

    #[test]
    fn zero_is_empty() {
        let v = Variables::new(&["x"]);
        assert!(parse_poly("0", &v).unwrap().terms().is_empty());
    }

    #[test]
    fn expands_difference_of_squares() {
        let v = xy();
        assert_eq!(parse_poly("(x+y)*(x-y)", &v).unwrap(), parse_poly("x^2 - y^2", &v).unwrap());
    }

    #[test]
    fn rational_literals() {
        let v = xy();
        let p = parse_poly("3/6*x", &v).unwrap();
        assert_eq!(p.coefficient(&[1, 0]), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn errors_carry_positions() {
        let v = xy();
        match parse_poly("x+*y", &v) {
            Err(CoreError::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {:?}", other),
        }
        assert!(matches!(parse_poly("x + z", &v), Err(CoreError::UnknownVariable(n)) if n == "z"));
        assert!(matches!(parse_poly("x^-1", &v), Err(CoreError::NegativeExponent { position: 2 })));
        assert!(matches!(parse_poly("(x", &v), Err(CoreError::Syntax { .. })));
        assert!(matches!(parse_poly("", &v), Err(CoreError::Syntax { .. })));
    }
}
