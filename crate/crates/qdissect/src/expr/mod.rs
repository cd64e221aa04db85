//! Symbolic q-expressions: a small tree language over series atoms.
//!
//! An expression is built from integers, monomials c*q^t, Euler products
//! F(m), Pochhammer symbols P(a, b) = (sgn(a) q^|a|; q^b)_oo, and theta
//! series T(sa, r, sb, s) = f(sa q^r, sb q^s), combined with + - * / ^.  Trees
//! come from the parser (see the grammar in [`parse`]) or are assembled
//! programmatically, and can be evaluated exactly to a Laurent or truncated
//! series, or coefficientwise modulo m.

mod parse;

pub use parse::parse;

use std::fmt;

use crate::error::{Result, SeriesError};
use crate::products::{self, Sign};
use crate::series::laurent::LaurentSeries;
use crate::series::residue::{ModLaurent, ResidueSeries};
use crate::series::truncated::TruncatedSeries;

/// A symbolic q-series expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QExpr {
    /// An integer constant.
    Int(i64),
    /// c * q^t with t of either sign.
    Monomial { coeff: i64, exp: i64 },
    /// F(m) = (q^m; q^m)_oo, m >= 1.
    EulerF { index: u32 },
    /// (sign q^offset; q^step)_oo; the offset may be nonpositive, in which
    /// case finitely many factors have nonpositive exponents.  The textual
    /// form `P(a,b)` carries the sign on `a` and so only writes offsets >= 1;
    /// nonpositive offsets exist for programmatic construction only.
    Pochhammer { sign: Sign, offset: i64, step: u32 },
    /// f(sign_a q^r, sign_b q^s); requires r + s > 0 to truncate.
    Theta { sign_a: Sign, r: i64, sign_b: Sign, s: i64 },
    Neg(Box<QExpr>),
    Add(Box<QExpr>, Box<QExpr>),
    Sub(Box<QExpr>, Box<QExpr>),
    Mul(Box<QExpr>, Box<QExpr>),
    Div(Box<QExpr>, Box<QExpr>),
    Pow(Box<QExpr>, u32),
}

impl QExpr {
    /// Evaluate exactly as a Laurent series, targeting coefficients through
    /// q^n.  Truncated atoms (products, thetas) are built at precision n;
    /// polynomial atoms are exact, so products against prefactors keep the
    /// best sound precision (at least n for every expression whose atoms'
    /// negative exponents are cancelled by prefactors, which includes all
    /// the dissection identities).
    pub fn eval_laurent(&self, n: i64) -> Result<LaurentSeries> {
        if n < 0 {
            return Err(SeriesError::PrecisionTooSmall {
                precision: n,
                reason: "evaluation precision must be nonnegative".into(),
            });
        }
        match self {
            QExpr::Int(c) => Ok(LaurentSeries::monomial(*c, 0)),
            QExpr::Monomial { coeff, exp } => Ok(LaurentSeries::monomial(*coeff, *exp)),
            QExpr::EulerF { index } => {
                check_index(*index)?;
                Ok(LaurentSeries::from_truncated(&products::euler_f(*index, n as usize)))
            }
            QExpr::Pochhammer { sign, offset, step } => {
                check_index(*step)?;
                Ok(products::laurent_pochhammer(*sign, *offset, *step, n))
            }
            QExpr::Theta { sign_a, r, sign_b, s } => products::theta_f(*sign_a, *r, *sign_b, *s, n),
            QExpr::Neg(x) => Ok(x.eval_laurent(n)?.neg()),
            QExpr::Add(x, y) => Ok(x.eval_laurent(n)?.add(&y.eval_laurent(n)?)),
            QExpr::Sub(x, y) => Ok(x.eval_laurent(n)?.sub(&y.eval_laurent(n)?)),
            QExpr::Mul(x, y) => Ok(x.eval_laurent(n)?.mul(&y.eval_laurent(n)?)),
            QExpr::Div(x, y) => {
                let den = y.eval_laurent(n)?.to_truncated(n as usize)?.invert()?;
                Ok(x.eval_laurent(n)?.mul(&LaurentSeries::from_truncated(&den)))
            }
            QExpr::Pow(x, e) => Ok(x.eval_laurent(n)?.pow(*e)),
        }
    }

    /// Evaluate exactly as an ordinary power series through q^n.  Errors if
    /// a nonzero coefficient survives at a negative exponent.
    pub fn eval(&self, n: usize) -> Result<TruncatedSeries> {
        self.eval_laurent(n as i64)?.to_truncated(n)
    }

    /// Evaluate coefficientwise modulo m through q^n.  Atoms are computed
    /// exactly and reduced; ring operations run in Z/mZ, so division only
    /// needs the denominator's constant term to be coprime to m.
    pub fn eval_mod(&self, n: usize, modulus: u64) -> Result<ResidueSeries> {
        self.eval_mod_laurent(n, modulus)?.to_residue(n)
    }

    fn eval_mod_laurent(&self, n: usize, m: u64) -> Result<ModLaurent> {
        match self {
            QExpr::Int(c) => Ok(ModLaurent::monomial(m, *c, 0)),
            QExpr::Monomial { coeff, exp } => Ok(ModLaurent::monomial(m, *coeff, *exp)),
            QExpr::EulerF { .. } | QExpr::Pochhammer { .. } | QExpr::Theta { .. } => {
                Ok(ModLaurent::from_laurent(&self.eval_laurent(n as i64)?, m))
            }
            QExpr::Neg(x) => Ok(x.eval_mod_laurent(n, m)?.neg()),
            QExpr::Add(x, y) => Ok(x.eval_mod_laurent(n, m)?.combine(&y.eval_mod_laurent(n, m)?, false)),
            QExpr::Sub(x, y) => Ok(x.eval_mod_laurent(n, m)?.combine(&y.eval_mod_laurent(n, m)?, true)),
            QExpr::Mul(x, y) => Ok(x.eval_mod_laurent(n, m)?.mul(&y.eval_mod_laurent(n, m)?)),
            QExpr::Div(x, y) => {
                let den = y.eval_mod_laurent(n, m)?.invert(n as i64)?;
                Ok(x.eval_mod_laurent(n, m)?.mul(&den))
            }
            QExpr::Pow(x, e) => Ok(x.eval_mod_laurent(n, m)?.pow(*e)),
        }
    }

    // Convenience constructors: the identity builders read much better with
    // these than with Box::new at every node.

    pub fn int(c: i64) -> Self {
        QExpr::Int(c)
    }

    pub fn q_pow(exp: i64) -> Self {
        QExpr::Monomial { coeff: 1, exp }
    }

    pub fn euler(index: u32) -> Self {
        QExpr::EulerF { index }
    }

    pub fn theta(sign_a: Sign, r: i64, sign_b: Sign, s: i64) -> Self {
        QExpr::Theta { sign_a, r, sign_b, s }
    }

    pub fn add(self, other: QExpr) -> Self {
        QExpr::Add(Box::new(self), Box::new(other))
    }

    pub fn sub(self, other: QExpr) -> Self {
        QExpr::Sub(Box::new(self), Box::new(other))
    }

    pub fn mul(self, other: QExpr) -> Self {
        QExpr::Mul(Box::new(self), Box::new(other))
    }

    pub fn div(self, other: QExpr) -> Self {
        QExpr::Div(Box::new(self), Box::new(other))
    }

    pub fn pow(self, e: u32) -> Self {
        QExpr::Pow(Box::new(self), e)
    }

    pub fn neg(self) -> Self {
        QExpr::Neg(Box::new(self))
    }

    fn precedence(&self) -> u8 {
        match self {
            QExpr::Add(..) | QExpr::Sub(..) => 1,
            QExpr::Mul(..) | QExpr::Div(..) => 2,
            // Negative constants display with a leading minus, so they bind
            // exactly like an explicit negation when re-parsed.
            QExpr::Neg(..) => 3,
            QExpr::Int(c) if *c < 0 => 3,
            QExpr::Monomial { coeff, .. } if *coeff < 0 => 3,
            QExpr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn check_index(m: u32) -> Result<()> {
    if m == 0 {
        return Err(SeriesError::InvalidParameter(
            "product index must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Wraps `x` in parentheses when its precedence is below `min`.
struct Paren<'a>(&'a QExpr, u8);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QExpr::Int(c) => write!(f, "{c}"),
            QExpr::Monomial { coeff, exp } => {
                if *coeff != 1 {
                    write!(f, "{coeff}*")?;
                }
                match exp {
                    1 => write!(f, "q"),
                    _ => write!(f, "q^{exp}"),
                }
            }
            QExpr::EulerF { index } => write!(f, "F({index})"),
            QExpr::Pochhammer { sign, offset, step } => {
                if *offset >= 1 {
                    match sign {
                        Sign::Plus => write!(f, "P({offset},{step})"),
                        Sign::Minus => write!(f, "P(-{offset},{step})"),
                    }
                } else {
                    // No textual form exists for nonpositive offsets; spell
                    // the sign out so the display stays unambiguous.
                    write!(f, "P({},{offset},{step})", sign.unit())
                }
            }
            QExpr::Theta { sign_a, r, sign_b, s } => {
                write!(f, "T({},{r},{},{s})", sign_a.unit(), sign_b.unit())
            }
            QExpr::Neg(x) => write!(f, "-{}", Paren(x, 4)),
            QExpr::Add(x, y) => write!(f, "{} + {}", Paren(x, 1), Paren(y, 2)),
            QExpr::Sub(x, y) => write!(f, "{} - {}", Paren(x, 1), Paren(y, 2)),
            QExpr::Mul(x, y) => write!(f, "{}*{}", Paren(x, 2), Paren(y, 3)),
            QExpr::Div(x, y) => write!(f, "{}/{}", Paren(x, 2), Paren(y, 5)),
            QExpr::Pow(x, e) => write!(f, "{}^{e}", Paren(x, 5)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn eval_simple_quotient() {
        // 1 / (1 - q) = geometric series; written via atoms: 1/P(1,1) is
        // the partition series instead, so use Int and Monomial directly.
        let e = QExpr::int(1).div(QExpr::int(1).sub(QExpr::q_pow(1)));
        let s = e.eval(8).unwrap();
        for k in 0..=8 {
            assert_eq!(s.coeff(k).unwrap(), &BigInt::from(1));
        }
    }

    #[test]
    fn eval_overpartition_expression() {
        // F(2) / F(1)^2 generates overpartition counts.
        let e = QExpr::euler(2).div(QExpr::euler(1).pow(2));
        let s = e.eval(6).unwrap();
        let expected = [1i64, 2, 4, 8, 14, 24, 40];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n).unwrap(), &BigInt::from(c));
        }
    }

    #[test]
    fn eval_keeps_precision_through_prefactors() {
        // q^5 * T(-1,-3,-1,21) has all terms at exponent >= 2.
        let e = QExpr::q_pow(5).mul(QExpr::theta(Sign::Minus, -3, Sign::Minus, 21, ));
        let s = e.eval_laurent(40).unwrap();
        assert!(s.precision() >= 40);
        assert_eq!(s.coeff(2).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn eval_rejects_surviving_negative_exponents() {
        let e = QExpr::theta(Sign::Minus, -3, Sign::Minus, 21);
        assert!(matches!(
            e.eval(20),
            Err(SeriesError::NegativeExponent { exponent: -3, .. })
        ));
    }

    #[test]
    fn eval_mod_matches_exact_reduction() {
        let e = QExpr::euler(2)
            .pow(4)
            .div(QExpr::euler(1).pow(8))
            .add(QExpr::q_pow(3).mul(QExpr::int(7)));
        let exact = e.eval(30).unwrap();
        for m in [2u64, 3, 4, 9] {
            let reduced = ResidueSeries::from_series(&exact, m);
            let modular = e.eval_mod(30, m).unwrap();
            assert_eq!(reduced, modular, "mod {m}");
        }
    }

    #[test]
    fn eval_mod_can_divide_by_nonunit_integers() {
        // 3 is invertible mod 4 though not in Z[[q]].
        let e = QExpr::int(1).div(QExpr::int(3).sub(QExpr::q_pow(1)));
        assert!(e.eval(10).is_err());
        let r = e.eval_mod(10, 4).unwrap();
        // 1/(3 - q) = 3^{-1} (1 + q/3 + ...) = 3 (1 + 3q + 9q^2 + ...) mod 4.
        assert_eq!(r.coeff(0).unwrap(), 3);
        assert_eq!(r.coeff(1).unwrap(), 1);
    }

    #[test]
    fn display_round_trips_through_parser() {
        let exprs = [
            QExpr::euler(2).div(QExpr::euler(1).pow(2)),
            QExpr::q_pow(-2).mul(QExpr::theta(Sign::Minus, -3, Sign::Minus, 21)),
            QExpr::int(4)
                .mul(QExpr::q_pow(2))
                .sub(QExpr::int(1).sub(QExpr::q_pow(1)).pow(3)),
            QExpr::Pochhammer { sign: Sign::Minus, offset: 1, step: 2 }
                .mul(QExpr::Pochhammer { sign: Sign::Plus, offset: 2, step: 2 }),
        ];
        for e in exprs {
            let text = e.to_string();
            let back = parse(&text).unwrap_or_else(|err| panic!("reparse {text}: {err}"));
            let a = e.eval_laurent(25).unwrap();
            let b = back.eval_laurent(25).unwrap();
            assert!(
                a.equal_up_to(&b, 25.min(a.precision()).min(b.precision())),
                "{text}"
            );
        }
    }
}
