//! Nested square-root expressions with rational leaves, evaluated in
//! double-double precision, and the E8 closed-form checks built on them.
//!
//! The textual form accepted by [`RadicalExpr::parse`] is small: decimal or
//! integer literals, `sqrt(...)`, `+`, `-`, `*`, parentheses, and `/` by a
//! rational constant. For example `1/2*sqrt(7 + sqrt(5) + sqrt(30 + 6*sqrt(5)))`.

mod dd;

use std::f64::consts::PI;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use dd::DoubleDouble;

use crate::e8;
use crate::report::{relative_error, Check};

/// Deepest `sqrt` nesting accepted.
pub const MAX_SQRT_DEPTH: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RadicalError {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("negative radicand {value:e} in sqrt({subtree})")]
    NegativeRadicand { subtree: String, value: f64 },
    #[error("sqrt nesting depth {0} exceeds {MAX_SQRT_DEPTH}")]
    TooDeep(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum RadicalExpr {
    Rational(BigRational),
    Sum(Vec<RadicalExpr>),
    /// Product of factors; a rational coefficient is simply a
    /// [`RadicalExpr::Rational`] factor.
    Product(Vec<RadicalExpr>),
    Sqrt(Box<RadicalExpr>),
}

impl RadicalExpr {
    pub fn int(n: i64) -> Self {
        Self::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn sqrt(inner: RadicalExpr) -> Self {
        Self::Sqrt(Box::new(inner))
    }

    pub fn parse(text: &str) -> Result<Self, RadicalError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Nesting depth of `sqrt`.
    pub fn sqrt_depth(&self) -> usize {
        match self {
            Self::Rational(_) => 0,
            Self::Sum(v) | Self::Product(v) => v.iter().map(Self::sqrt_depth).max().unwrap_or(0),
            Self::Sqrt(inner) => 1 + inner.sqrt_depth(),
        }
    }

    /// Bottom-up evaluation in double-double precision.
    pub fn eval_extended(&self) -> Result<DoubleDouble, RadicalError> {
        let depth = self.sqrt_depth();
        if depth > MAX_SQRT_DEPTH {
            return Err(RadicalError::TooDeep(depth));
        }
        self.eval_dd()
    }

    fn eval_dd(&self) -> Result<DoubleDouble, RadicalError> {
        Ok(match self {
            Self::Rational(r) => DoubleDouble::from_rational(r),
            Self::Sum(terms) => terms
                .iter()
                .try_fold(DoubleDouble::ZERO, |acc, t| Ok(acc + t.eval_dd()?))?,
            Self::Product(factors) => factors
                .iter()
                .try_fold(DoubleDouble::ONE, |acc, f| Ok(acc * f.eval_dd()?))?,
            Self::Sqrt(inner) => {
                let v = inner.eval_dd()?;
                if v.is_negative() {
                    return Err(RadicalError::NegativeRadicand {
                        subtree: inner.to_string(),
                        value: v.to_f64(),
                    });
                }
                v.sqrt()
            }
        })
    }

    fn is_negated(&self) -> Option<RadicalExpr> {
        match self {
            Self::Rational(r) if r.is_negative() => Some(Self::Rational(-r)),
            Self::Product(f) if matches!(f.first(), Some(Self::Rational(r)) if r.is_negative()) => {
                let Some(Self::Rational(r)) = f.first() else {
                    unreachable!()
                };
                let mut rest = f[1..].to_vec();
                if !(-r).is_one() {
                    rest.insert(0, Self::Rational(-r));
                }
                Some(if rest.len() == 1 {
                    rest.remove(0)
                } else {
                    Self::Product(rest)
                })
            }
            _ => None,
        }
    }
}

impl Neg for RadicalExpr {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            Self::Rational(r) => Self::Rational(-r),
            other => Self::Product(vec![Self::int(-1), other]),
        }
    }
}

/// Evaluates `e` and rounds the double-double result to `f64`.
pub fn eval_radical(e: &RadicalExpr) -> Result<f64, RadicalError> {
    Ok(e.eval_extended()?.to_f64())
}

impl FromStr for RadicalExpr {
    type Err = RadicalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => f.write_str(&fmt_rational(r)),
            Self::Sqrt(inner) => write!(f, "sqrt({inner})"),
            Self::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    match (i, t.is_negated()) {
                        (0, _) => write!(f, "{t}")?,
                        (_, Some(pos)) => write!(f, " - {}", Wrapped(&pos))?,
                        (_, None) => write!(f, " + {t}")?,
                    }
                }
                Ok(())
            }
            Self::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    match x {
                        Self::Sum(_) => write!(f, "({x})")?,
                        Self::Rational(r) if !r.is_integer() || (i > 0 && r.is_negative()) => {
                            write!(f, "({})", fmt_rational(r))?
                        }
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

struct Wrapped<'a>(&'a RadicalExpr);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            RadicalExpr::Sum(_) => write!(f, "({})", self.0),
            e => write!(f, "{e}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> RadicalError {
        RadicalError::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), RadicalError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<RadicalExpr, RadicalError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.remove(0)
        } else {
            RadicalExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<RadicalExpr, RadicalError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let RadicalExpr::Rational(d) = self.factor()? else {
                        self.pos = at;
                        return Err(self.error("division is only allowed by a rational constant"));
                    };
                    if d.is_zero() {
                        self.pos = at;
                        return Err(self.error("division by zero"));
                    }
                    factors.push(RadicalExpr::Rational(d.recip()));
                }
                _ => break,
            }
        }
        // fold adjacent rational factors (so `1/2` becomes a single literal)
        let mut folded: Vec<RadicalExpr> = Vec::with_capacity(factors.len());
        for f in factors {
            match (folded.last_mut(), f) {
                (Some(RadicalExpr::Rational(acc)), RadicalExpr::Rational(r)) => *acc *= r,
                (_, f) => folded.push(f),
            }
        }
        Ok(if folded.len() == 1 {
            folded.remove(0)
        } else {
            RadicalExpr::Product(folded)
        })
    }

    fn factor(&mut self) -> Result<RadicalExpr, RadicalError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                if &self.src[start..self.pos] != b"sqrt" {
                    self.pos = start;
                    return Err(self.error("unknown identifier (only sqrt is supported)"));
                }
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(RadicalExpr::sqrt(inner))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<RadicalExpr, RadicalError> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        let int_end = self.pos;
        let mut frac = "";
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            let fs = self.pos;
            digits(self);
            frac = std::str::from_utf8(&self.src[fs..self.pos]).expect("ascii");
        }
        let int = std::str::from_utf8(&self.src[start..int_end]).expect("ascii");
        let numer: BigInt = format!("{int}{frac}")
            .parse()
            .map_err(|_| self.error("bad number"))?;
        let denom = BigInt::from(10u32).pow(frac.len() as u32);
        Ok(RadicalExpr::Rational(BigRational::new(numer, denom)))
    }
}

/// Closed-form checks for E8: the eigenvalue radicals of `2I - C`, the
/// trigonometric radicals, and the mass radicals.
pub fn e8_radical_suite() -> Vec<Check> {
    let mut checks = eigenvalue_radical_checks();
    checks.extend(trig_radical_checks());
    checks.extend(mass_radical_checks());
    checks
}

fn parse_eval(text: &str) -> Result<f64, RadicalError> {
    eval_radical(&RadicalExpr::parse(text)?)
}

/// Each printed `x_k` radical against the nearest `2cos(a pi/30)` with `a` in
/// the positive half of the exponents.
pub fn eigenvalue_radical_checks() -> Vec<Check> {
    let candidates = &e8::EXPONENTS[..4];
    let h = e8::COXETER_NUMBER as f64;
    let target = |a: u32| 2.0 * (a as f64 * PI / h).cos();
    let mut checks = Vec::new();
    let mut assigned = Vec::new();
    for (k, text) in e8::EIGENVALUE_RADICALS.iter().enumerate() {
        let name = format!("x{} radical", k + 1);
        match parse_eval(text) {
            Err(e) => checks.push(Check::exact(name, false, e.to_string())),
            Ok(v) => {
                let a = *candidates
                    .iter()
                    .min_by(|&&a, &&b| (v - target(a)).abs().total_cmp(&(v - target(b)).abs()))
                    .expect("nonempty");
                assigned.push(a);
                let mut detail = format!("{text} = {v:.15} = 2cos({a}pi/30)");
                if a != candidates[k] {
                    detail.push_str(&format!(
                        "; printed as x{} but equals the eigenvalue for exponent {a}, not {}",
                        k + 1,
                        candidates[k]
                    ));
                }
                checks.push(Check::numeric(
                    name,
                    relative_error(v, target(a)),
                    1e-12,
                    detail,
                ));
            }
        }
    }
    let mut sorted = assigned.clone();
    sorted.sort_unstable();
    checks.push(Check::exact(
        "x radicals cover exponents 1, 7, 11, 13",
        sorted == candidates,
        format!("matched exponents in printed order: {assigned:?}"),
    ));
    checks
}

pub fn trig_radical_checks() -> Vec<Check> {
    e8::TRIG_RADICALS
        .iter()
        .map(|t| {
            let name = format!("{} radical", t.name());
            match parse_eval(t.radical) {
                Err(e) => Check::exact(name, false, e.to_string()),
                Ok(v) => {
                    let mut detail = format!("{} = {} = {v:.15}", t.name(), t.radical);
                    if let Some(note) = t.note {
                        detail.push_str(&format!(" ({note})"));
                    }
                    Check::numeric(name, relative_error(v, t.exact_value()), 1e-12, detail)
                }
            }
        })
        .collect()
}

fn nearest_relative(x: f64, roots: &[f64]) -> f64 {
    roots
        .iter()
        .map(|r| relative_error(x, *r))
        .fold(f64::INFINITY, f64::min)
}

/// For each mass radical `e_j`: `2 e_j^2` is a root of its factor polynomial,
/// and `e_j / u_j` does not depend on `j`.
pub fn mass_radical_checks() -> Vec<Check> {
    let p1 = e8::mass_factor_p1();
    let p2 = e8::mass_factor_p2();
    let roots1 = p1.real_roots(0.0, 100.0).expect("nonzero");
    let roots2 = p2.real_roots(0.0, 100.0).expect("nonzero");
    let u = e8::perron_closed_form();
    let mut checks = Vec::new();
    let mut ratios = Vec::new();
    for &(node, text) in &e8::MASS_RADICALS {
        let (label, roots) = if e8::P1_NODES.contains(&node) {
            ("P1", &roots1)
        } else {
            ("P2", &roots2)
        };
        let name = format!("2*e{node}^2 is a root of {label}");
        let e = match RadicalExpr::parse(text).and_then(|r| r.eval_extended()) {
            Ok(e) => e,
            Err(err) => {
                checks.push(Check::exact(name, false, err.to_string()));
                continue;
            }
        };
        let x = (DoubleDouble::from_f64(2.0) * e * e).to_f64();
        let nearest = roots
            .iter()
            .cloned()
            .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
            .unwrap_or(f64::NAN);
        let mut detail = format!(
            "e{node} = {:.12}, 2*e{node}^2 = {x:.12}, nearest {label} root {nearest:.12}",
            e.to_f64()
        );
        let quoted = if e8::QUOTED_P1_NODES.contains(&node) {
            "P1"
        } else {
            "P2"
        };
        if quoted != label {
            detail.push_str(&format!(
                "; commonly quoted as a root of {quoted}, but {quoted} has no root within {:.3e}",
                nearest_relative(x, if quoted == "P1" { &roots1 } else { &roots2 })
            ));
        }
        checks.push(Check::numeric(
            name,
            relative_error(x, nearest),
            1e-9,
            detail,
        ));
        ratios.push(e.to_f64() / u[node - 1]);
    }
    if ratios.len() == e8::MASS_RADICALS.len() {
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        let c = ratios.iter().sum::<f64>() / ratios.len() as f64;
        checks.push(Check::numeric(
            "e_j/u_j independent of j",
            (max - min) / max,
            1e-12,
            format!(
                "e_j/u_j = {c:.15}; the expressions labelled m_j^2 are proportional to the masses m_j \
                 (e_j = m_j/sqrt(2)), not to m_j^2"
            ),
        ));
        let m = e8::mass_scale_closed_form();
        checks.push(Check::numeric(
            "2*(e_j/u_j)^2 = M",
            relative_error(2.0 * c * c, m),
            1e-12,
            format!("2*c^2 = {:.15}, M = {m:.15}", 2.0 * c * c),
        ));
    }
    checks
}
