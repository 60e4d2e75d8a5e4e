//! Text grammar shared by Steenrod words and polynomials.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+                      juxtaposition is product
//! factor := 'Sq' INT | VAR ('^' SINT)? | '(' expr ')' | INT
//! VAR    := 'x' INT | 's' INT
//! ```
//!
//! Integer literals are read mod 2, so the printed forms `0` and `1` parse
//! back. `x<i>` are the polynomial generators, `s<i>` the elementary
//! symmetric polynomials.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::f2poly::{LaurentPoly, Monomial, SigmaPoly};
use crate::steenrod::{adem_normalize, SteenrodElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarKind {
    X,
    Sigma,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Factor {
    Sq(u32),
    Var { kind: VarKind, index: usize, exponent: i32 },
    Group(Expr),
    Const(u64),
}

/// Sum of products of factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expr {
    pub terms: Vec<Vec<Factor>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Sq(u32),
    Var(VarKind, usize),
    Int(u64),
    Minus,
    Caret,
    Plus,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Sq(i) => format!("'Sq{i}'"),
            Tok::Var(VarKind::X, i) => format!("'x{i}'"),
            Tok::Var(VarKind::Sigma, i) => format!("'s{i}'"),
            Tok::Int(i) => format!("'{i}'"),
            Tok::Minus => "'-'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Plus => "'+'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn err(offset: usize, expected: &[&str], found: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found: found.into(),
    }
}

fn lex(input: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| -> (usize, Option<u64>) {
        let mut j = start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        (j, input[start..j].parse().ok())
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'^' => out.push((start, Tok::Caret)),
            b'-' => out.push((start, Tok::Minus)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                let (j, v) = digits(i);
                let v = v.ok_or_else(|| err(start, &["integer"], &input[start..j]))?;
                out.push((start, Tok::Int(v)));
                i = j;
                continue;
            }
            b'S' if bytes.get(i + 1) == Some(&b'q') => {
                let (j, v) = digits(i + 2);
                match v {
                    Some(v) if v <= u32::MAX as u64 => out.push((start, Tok::Sq(v as u32))),
                    _ => return Err(err(i + 2, &["integer after 'Sq'"], rest(input, i + 2))),
                }
                i = j;
                continue;
            }
            b'x' | b's' => {
                let kind = if c == b'x' { VarKind::X } else { VarKind::Sigma };
                let (j, v) = digits(i + 1);
                match v {
                    Some(v) if (1..=64).contains(&v) => out.push((start, Tok::Var(kind, v as usize))),
                    _ => {
                        return Err(err(i + 1, &["variable index 1..64"], rest(input, i + 1)));
                    }
                }
                i = j;
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(err(
                    start,
                    &["'Sq'", "'x'", "'s'", "integer", "'('", "')'", "'+'", "'^'"],
                    format!("'{ch}'"),
                ));
            }
        }
        i += 1;
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

fn rest(input: &str, at: usize) -> String {
    match input[at..].chars().next() {
        Some(c) => format!("'{c}'"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn starts_factor(t: &Tok) -> bool {
        matches!(t, Tok::Sq(_) | Tok::Var(..) | Tok::LParen | Tok::Int(_))
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> std::result::Result<Vec<Factor>, ParseError> {
        let mut factors = Vec::new();
        while Self::starts_factor(self.peek()) {
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            return Err(err(
                self.offset(),
                &["'Sq'", "'x'", "'s'", "integer", "'('"],
                self.peek().describe(),
            ));
        }
        Ok(factors)
    }

    fn factor(&mut self) -> std::result::Result<Factor, ParseError> {
        match self.bump() {
            Tok::Sq(i) => Ok(Factor::Sq(i)),
            Tok::Int(v) => Ok(Factor::Const(v)),
            Tok::Var(kind, index) => {
                let mut exponent = 1;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    exponent = self.signed_int()?;
                }
                Ok(Factor::Var { kind, index, exponent })
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(err(self.offset(), &["')'", "'+'"], self.peek().describe()));
                }
                self.bump();
                Ok(Factor::Group(inner))
            }
            _ => unreachable!("checked by starts_factor"),
        }
    }

    fn signed_int(&mut self) -> std::result::Result<i32, ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let at = self.offset();
        match self.bump() {
            Tok::Int(v) if v <= i32::MAX as u64 => Ok(if negative { -(v as i32) } else { v as i32 }),
            t => Err(err(at, &["integer exponent"], t.describe())),
        }
    }
}

/// Parse text into an expression tree.
pub fn parse(input: &str) -> std::result::Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(p.offset(), &["'+'", "factor", "end of input"], p.peek().describe()));
    }
    Ok(e)
}

/// A polynomial value in x- or σ-variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyValue {
    X(LaurentPoly),
    Sigma(SigmaPoly),
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::X(p) => write!(f, "{p}"),
            PolyValue::Sigma(p) => write!(f, "{p}"),
        }
    }
}

impl Expr {
    fn visit(&self, f: &mut impl FnMut(&Factor)) {
        for t in &self.terms {
            for x in t {
                f(x);
                if let Factor::Group(g) = x {
                    g.visit(f);
                }
            }
        }
    }

    pub fn has_steenrod_factors(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Factor::Sq(_)));
        found
    }

    /// Largest variable index and the variable kinds used.
    fn variables(&self) -> (usize, Vec<VarKind>) {
        let mut max = 0;
        let mut kinds = Vec::new();
        self.visit(&mut |f| {
            if let Factor::Var { kind, index, .. } = f {
                max = max.max(*index);
                if !kinds.contains(kind) {
                    kinds.push(*kind);
                }
            }
        });
        (max, kinds)
    }

    /// The word of a single product of `Sq` factors, e.g. `Sq4 Sq2 Sq1`.
    pub fn as_word(&self) -> Option<Vec<u32>> {
        match self.terms.as_slice() {
            [t] => t
                .iter()
                .map(|f| match f {
                    Factor::Sq(i) => Some(*i),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }

    /// Evaluate as an element of the Steenrod algebra.
    pub fn eval_steenrod(&self) -> Result<SteenrodElement> {
        let mut sum = SteenrodElement::zero();
        for t in &self.terms {
            let mut prod = SteenrodElement::one();
            for f in t {
                let x = match f {
                    Factor::Sq(i) => adem_normalize(&[*i]),
                    Factor::Const(v) if v % 2 == 1 => SteenrodElement::one(),
                    Factor::Const(_) => SteenrodElement::zero(),
                    Factor::Group(g) => g.eval_steenrod()?,
                    Factor::Var { .. } => {
                        return Err(Error::Eval("variables are not Steenrod operations".into()));
                    }
                };
                prod = prod.mul(&x);
            }
            sum = sum.add(&prod);
        }
        Ok(sum)
    }

    /// Evaluate as a polynomial in `nvars` variables (default: the largest
    /// index used, at least 1).
    pub fn eval_poly(&self, nvars: Option<usize>) -> Result<PolyValue> {
        if self.has_steenrod_factors() {
            return Err(Error::Eval("Steenrod squares inside a polynomial".into()));
        }
        let (max, kinds) = self.variables();
        let kind = match kinds.as_slice() {
            [] | [VarKind::X] => VarKind::X,
            [VarKind::Sigma] => VarKind::Sigma,
            _ => return Err(Error::Eval("cannot mix x- and s-variables".into())),
        };
        let n = nvars.unwrap_or(max.max(1));
        if max > n {
            return Err(Error::Eval(format!("variable index {max} exceeds n = {n}")));
        }
        let p = self.eval_laurent(n)?;
        Ok(match kind {
            VarKind::X => PolyValue::X(p),
            VarKind::Sigma => PolyValue::Sigma(SigmaPoly::new(p)),
        })
    }

    fn eval_laurent(&self, n: usize) -> Result<LaurentPoly> {
        let mut sum = LaurentPoly::zero(n);
        for t in &self.terms {
            let mut prod = LaurentPoly::one(n);
            for f in t {
                match f {
                    Factor::Var { index, exponent, .. } => {
                        let mut exps = vec![0; n];
                        exps[index - 1] = *exponent;
                        prod = prod.mul_monomial(&Monomial::new(exps));
                    }
                    Factor::Const(v) if v % 2 == 1 => {}
                    Factor::Const(_) => prod = LaurentPoly::zero(n),
                    Factor::Group(g) => prod = &prod * &g.eval_laurent(n)?,
                    Factor::Sq(_) => unreachable!("rejected by eval_poly"),
                }
            }
            sum += &prod;
        }
        Ok(sum)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            for (j, x) in t.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                match x {
                    Factor::Sq(i) => write!(f, "Sq{i}")?,
                    Factor::Const(v) => write!(f, "{v}")?,
                    Factor::Group(g) => write!(f, "({g})")?,
                    Factor::Var { kind, index, exponent } => {
                        let p = if *kind == VarKind::X { "x" } else { "s" };
                        if *exponent == 1 {
                            write!(f, "{p}{index}")?;
                        } else {
                            write!(f, "{p}{index}^{exponent}")?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(parse("Sq2 Sq1").unwrap().as_word(), Some(vec![2, 1]));
        let e = parse("x1^-1 x2^-1").unwrap();
        assert_eq!(
            e.eval_poly(None).unwrap(),
            PolyValue::X(LaurentPoly::from_exponents(2, &[&[-1, -1]]))
        );
        let e = parse("(s1^2 + s2) s1").unwrap();
        assert_eq!(
            e.eval_poly(None).unwrap(),
            PolyValue::Sigma(SigmaPoly::new(LaurentPoly::from_exponents(2, &[&[3, 0], &[1, 1]])))
        );
        assert_eq!(e.to_string(), "(s1^2 + s2) s1");
    }

    #[test]
    fn steenrod_products_normalize() {
        let e = parse("Sq2 Sq2").unwrap().eval_steenrod().unwrap();
        assert_eq!(e.to_string(), "Sq3 Sq1");
        assert!(parse("Sq1 Sq1 + 0").unwrap().eval_steenrod().unwrap().is_zero());
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse("x1 + + x2").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = parse("(x1 + x2").unwrap_err();
        assert_eq!(e.offset, 8);
        assert!(e.expected.contains(&"')'".to_string()));
        let e = parse("x1 ^ y").unwrap_err();
        assert_eq!(e.offset, 5);
        assert!(parse("x0").is_err());
        assert!(parse("").is_err());
        assert!(parse("x1^").is_err());
    }

    #[test]
    fn evaluation_errors() {
        assert!(parse("x1 s1").unwrap().eval_poly(None).is_err());
        assert!(parse("Sq1 x1").unwrap().eval_poly(None).is_err());
        assert!(parse("x1").unwrap().eval_steenrod().is_err());
        assert!(parse("x3").unwrap().eval_poly(Some(2)).is_err());
    }
}
