//! Recursive-descent parser for q-expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term { ('+' | '-') term }
//! term    := factor { ('*' | '/') factor }
//! factor  := '-' factor | primary [ '^' uint ]
//! primary := uint                                  integer constant
//!          | 'q' [ '^' int ]                       monomial
//!          | 'F' '(' uint ')'                      (q^m; q^m)_oo
//!          | 'P' '(' int ',' uint ')'              (sgn(a) q^|a|; q^b)_oo, a != 0
//!          | 'T' '(' sign ',' int ',' sign ',' int ')'
//!                                                  f(sign q^r, sign q^s)
//!          | '(' expr ')'
//! sign    := '1' | '-1'
//! int     := [ '-' ] uint
//! ```
//!
//! The first argument of `P` carries the product's sign: `P(1,1)` is
//! (q; q)_oo and `P(-3,7)` is (-q^3; q^7)_oo.
//!
//! Examples: `F(2)/F(1)^2`, `T(-1,1,-1,4)`, `q^2*P(-3,7)`.

use crate::error::{Result, SeriesError};
use crate::expr::QExpr;
use crate::products::Sign;

/// Magnitude cap on every exponent and index; enormous values would only
/// produce absurd coefficient windows.
const EXPONENT_LIMIT: i64 = 1_000_000;

/// Parse an expression from its textual form.
pub fn parse(input: &str) -> Result<QExpr> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error(format!("unexpected `{}` after expression", p.token_text())));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: String) -> SeriesError {
        SeriesError::Parse { offset: self.pos, message }
    }

    /// The next character, for error messages.
    fn token_text(&self) -> String {
        match self.src.get(self.pos) {
            Some(&b) => (b as char).to_string(),
            None => "end of input".into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.src.get(self.pos), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Consume `c` if it is next; report whether it was.
    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`, found `{}`", c as char, self.token_text())))
        }
    }

    fn expr(&mut self) -> Result<QExpr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QExpr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(self.factor()?);
            } else if self.eat(b'/') {
                acc = acc.div(self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<QExpr> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            if e > EXPONENT_LIMIT {
                return Err(self.error(format!("power {e} exceeds limit {EXPONENT_LIMIT}")));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<QExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'q') => {
                self.pos += 1;
                if self.eat(b'^') {
                    Ok(QExpr::q_pow(self.int()?))
                } else {
                    Ok(QExpr::q_pow(1))
                }
            }
            Some(b'F') => {
                self.pos += 1;
                self.expect(b'(')?;
                let m = self.positive_index()?;
                self.expect(b')')?;
                Ok(QExpr::euler(m))
            }
            Some(b'P') => {
                self.pos += 1;
                self.expect(b'(')?;
                let a = self.int()?;
                if a == 0 {
                    return Err(self.error("product offset must be nonzero".into()));
                }
                let sign = if a > 0 { Sign::Plus } else { Sign::Minus };
                self.expect(b',')?;
                let step = self.positive_index()?;
                self.expect(b')')?;
                Ok(QExpr::Pochhammer { sign, offset: a.abs(), step })
            }
            Some(b'T') => {
                self.pos += 1;
                self.expect(b'(')?;
                let sign_a = self.sign()?;
                self.expect(b',')?;
                let r = self.int()?;
                self.expect(b',')?;
                let sign_b = self.sign()?;
                self.expect(b',')?;
                let s = self.int()?;
                self.expect(b')')?;
                Ok(QExpr::theta(sign_a, r, sign_b, s))
            }
            Some(c) if c.is_ascii_digit() => Ok(QExpr::int(self.int()?)),
            _ => Err(self.error(format!(
                "expected a number, `q`, `F`, `P`, `T`, or `(`, found `{}`",
                self.token_text()
            ))),
        }
    }

    /// `1` or `-1`.
    fn sign(&mut self) -> Result<Sign> {
        match self.int()? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(self.error(format!("expected sign 1 or -1, found {other}"))),
        }
    }

    /// An index that must be at least 1 (and within the exponent cap).
    fn positive_index(&mut self) -> Result<u32> {
        let v = self.uint()?;
        if v < 1 {
            return Err(self.error("index must be at least 1".into()));
        }
        Ok(v as u32)
    }

    /// Unsigned integer, capped at EXPONENT_LIMIT.
    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.src.get(self.pos), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected a number, found `{}`", self.token_text())));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ascii");
        let value: i64 = text
            .parse()
            .map_err(|_| self.error(format!("number `{text}` is out of range")))?;
        if value > EXPONENT_LIMIT {
            return Err(self.error(format!("number {value} exceeds limit {EXPONENT_LIMIT}")));
        }
        Ok(value)
    }

    /// Signed integer.
    fn int(&mut self) -> Result<i64> {
        if self.eat(b'-') {
            Ok(-self.uint()?)
        } else {
            self.uint()
        }
    }
}
