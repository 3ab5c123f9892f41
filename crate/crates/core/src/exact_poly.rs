//! Exact rational matrices and univariate polynomials.
//!
//! Everything here is arbitrary precision: characteristic polynomials come
//! out of a rational Faddeev–LeVerrier recurrence, division is exact, and
//! real-root isolation uses Sturm sequences evaluated in rationals. Only the
//! final refined root values are rounded to `f64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is not square: expected {expected} entries in row {row}, found {found}")]
    NotSquare {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid root interval [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
}

/// Converts an integer into an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Converts `num / den` into an exact rational.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from integer coefficients in ascending degree.
    pub fn from_ascending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Builds a polynomial from integer coefficients listed from the
    /// leading term down to the constant, the way they are usually printed.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x - r`
    pub fn linear_root(r: BigRational) -> Self {
        Self::new(vec![-r, BigRational::one()])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Exact evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + rational_to_f64(c))
    }

    /// `sum_k |c_k| |x|^k`, the natural magnitude against which a floating
    /// point residual `|p(x)|` should be judged.
    pub fn eval_scale(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x.abs() + rational_to_f64(c).abs())
    }

    /// `|p(x)| / sum_k |c_k||x|^k`; zero for the zero polynomial.
    pub fn relative_residual(&self, x: f64) -> f64 {
        let scale = self.eval_scale(x);
        if scale == 0.0 {
            0.0
        } else {
            self.eval_f64(x).abs() / scale
        }
    }

    /// Quotient and remainder with `self = divisor * q + r`,
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free factorization `p = lead * prod_i f_i^i` (Yun). Returns the
    /// monic square-free factors of positive degree paired with their
    /// multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = exact_quotient(&f, &a0);
        let c = exact_quotient(&df, &a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let b_next = exact_quotient(&b, &a);
            let c_next = exact_quotient(&d, &a);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &c_next - &b_next.derivative();
            b = b_next;
            i += 1;
        }
        out
    }

    /// Sturm sequence of a square-free polynomial.
    fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }

    /// All real roots in `[lo, hi]`, ascending, repeated according to
    /// multiplicity. Roots are isolated exactly with Sturm sequences and
    /// refined by exact dyadic bisection until the bracket is below `f64`
    /// resolution.
    pub fn real_roots(&self, lo: f64, hi: f64) -> Result<Vec<f64>, PolyError> {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(PolyError::BadInterval { lo, hi });
        }
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let lo_q = BigRational::from_float(lo).expect("finite");
        let hi_q = BigRational::from_float(hi).expect("finite");
        let mut roots = Vec::new();
        for (factor, mult) in self.squarefree_decomposition() {
            let sturm = factor.sturm_sequence();
            let mut found = Vec::new();
            if factor.eval(&lo_q).is_zero() {
                found.push(lo);
            }
            let mut stack = vec![(lo_q.clone(), hi_q.clone())];
            while let Some((a, b)) = stack.pop() {
                let count = sturm_count(&sturm, &a, &b);
                if count == 0 {
                    continue;
                }
                if count == 1 {
                    found.push(refine(&sturm, a, b));
                    continue;
                }
                let mid = (&a + &b) / rat(2);
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
            for r in found {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        roots.sort_by(f64::total_cmp);
        Ok(roots)
    }
}

fn exact_quotient(p: &RationalPolynomial, d: &RationalPolynomial) -> RationalPolynomial {
    p.div_rem(d).expect("nonzero divisor").0
}

fn sign_changes(seq: &[RationalPolynomial], x: &BigRational) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct roots in `(a, b]`.
fn sturm_count(seq: &[RationalPolynomial], a: &BigRational, b: &BigRational) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

fn refine(seq: &[RationalPolynomial], mut a: BigRational, mut b: BigRational) -> f64 {
    let p = &seq[0];
    for _ in 0..200 {
        if p.eval(&b).is_zero() {
            return rational_to_f64(&b);
        }
        let af = rational_to_f64(&a);
        let bf = rational_to_f64(&b);
        if bf - af <= f64::EPSILON * af.abs().max(bf.abs()).max(f64::MIN_POSITIVE) {
            break;
        }
        let mid = (&a + &b) / rat(2);
        if sturm_count(seq, &a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    rational_to_f64(&((a + b) / rat(2)))
}

/// Exact long division; see [`RationalPolynomial::div_rem`].
pub fn poly_divide_exact(
    p: &RationalPolynomial,
    d: &RationalPolynomial,
) -> Result<(RationalPolynomial, RationalPolynomial), PolyError> {
    p.div_rem(d)
}

/// Floating-point Horner evaluation.
pub fn poly_eval(p: &RationalPolynomial, x: f64) -> f64 {
    p.eval_f64(x)
}

impl<'a> Add<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|k| self.coefficient(k) - rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<'a> Mul<&'a RationalPolynomial> for &'a RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn fmt_magnitude(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Descending powers with explicit signs: `x^8 - 7x^6 + 14x^4 - 8x^2 + 1`.
/// Non-integer coefficients print as parenthesised fractions, `(3/2)x^2`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let text = fmt_magnitude(&mag);
            match k {
                0 => f.write_str(&text)?,
                _ => {
                    if !mag.is_one() {
                        if mag.is_integer() {
                            f.write_str(&text)?;
                        } else {
                            write!(f, "({text})")?;
                        }
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self, PolyError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(PolyError::NotSquare {
                    row,
                    expected: n,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self { n, data })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self, PolyError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| BigRational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.data.chunks(self.n.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| rational_to_f64(self.get(i, j)))
                    .collect()
            })
            .collect()
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum::<BigRational>()
        })
    }

    fn add_diagonal(&mut self, c: &BigRational) {
        for i in 0..self.n {
            self.data[i * self.n + i] += c;
        }
    }

    /// `det(xI - self)`, monic, by the Faddeev–LeVerrier recurrence
    /// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
    pub fn char_poly(&self) -> RationalPolynomial {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Self::zeros(n);
        for k in 1..=n {
            let mut next = self.matmul(&m);
            next.add_diagonal(&coeffs[n - k + 1]);
            let am = self.matmul(&next);
            coeffs[n - k] = -am.trace() / rat(k as i64);
            m = next;
        }
        RationalPolynomial::new(coeffs)
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> BigRational {
        let n = self.n;
        let mut m = self.rows();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return BigRational::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &p;
                for c in col..n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        det
    }
}

/// Exact characteristic polynomial `det(xI - m)`.
pub fn char_poly_exact(m: &RationalMatrix) -> RationalPolynomial {
    m.char_poly()
}
