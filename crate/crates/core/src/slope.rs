//! Exact slopes: rationals `p/q` and quadratic irrationals `(a + b√d)/c`.
//!
//! Every comparison and every floor is decided with integer arithmetic. For a
//! quadratic value the `√d` term is isolated and both sides are squared with
//! the signs tracked separately.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `(a + b√d) / c` with `c > 0`, `b ≠ 0` and `d` a positive non-square.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Sign of `x + y·√d` for a positive non-square `d`.
fn sign_with_root(x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    let sx = x.cmp(&zero);
    let sy = y.cmp(&zero);
    match (sx, sy) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        // Opposite signs: the term with the larger square wins.
        (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(y * y * d)),
        (Ordering::Less, Ordering::Greater) => (y * y * d).cmp(&(x * x)),
    }
}

impl QuadraticIrrational {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if !c.is_positive() {
            return Err(Error::InvalidInput(
                "quadratic denominator must be positive".into(),
            ));
        }
        if b.is_zero() {
            return Err(Error::InvalidInput(
                "quadratic coefficient b must be non-zero".into(),
            ));
        }
        if !d.is_positive() {
            return Err(Error::InvalidInput("radicand must be positive".into()));
        }
        let root = d.sqrt();
        if &root * &root == d {
            return Err(Error::InvalidInput(format!(
                "radicand {d} is a perfect square"
            )));
        }
        Ok(QuadraticIrrational { a, b, c, d })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Ordering of `self` against the rational `r`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        // self − p/q = ((a·q − c·p) + b·q·√d) / (c·q), with c·q > 0.
        let (p, q) = (r.numer(), r.denom());
        let x = &self.a * q - &self.c * p;
        let y = &self.b * q;
        sign_with_root(&x, &y, &self.d)
    }

    /// `true` iff `m <= self · n`, i.e. `m·c <= a·n + b·n·√d`.
    fn le_scaled(&self, m: &BigInt, n: &BigInt) -> bool {
        let x = &self.a * n - m * &self.c;
        let y = &self.b * n;
        sign_with_root(&x, &y, &self.d) != Ordering::Less
    }

    /// `⌊self · n⌋` by binary search on the exact predicate `m <= self · n`.
    pub fn floor_mul(&self, n: u64) -> BigInt {
        let n = BigInt::from(n);
        // Bracket: lo satisfies the predicate, hi does not.
        let mut lo = BigInt::zero();
        let mut hi;
        if self.le_scaled(&lo, &n) {
            let mut step = BigInt::one();
            hi = &lo + &step;
            while self.le_scaled(&hi, &n) {
                lo = hi.clone();
                step *= 2;
                hi = &lo + &step;
            }
        } else {
            hi = lo.clone();
            let mut step = BigInt::one();
            lo = &hi - &step;
            while !self.le_scaled(&lo, &n) {
                hi = lo.clone();
                step *= 2;
                lo = &hi - &step;
            }
        }
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if self.le_scaled(&mid, &n) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `⌈self · n⌉ = −⌊(−self) · n⌋`.
    pub fn ceil_mul(&self, n: u64) -> BigInt {
        -self.negated().floor_mul(n)
    }

    fn negated(&self) -> Self {
        QuadraticIrrational {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.a) + f(&self.b) * f(&self.d).sqrt()) / f(&self.c)
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "({}{}{}*sqrt({}))/{}",
            self.a,
            sign,
            self.b.abs(),
            self.d,
            self.c
        )
    }
}

impl fmt::Debug for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A slope `α`, either rational or a quadratic irrational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SlopeSpec {
    Rational(Rational),
    Quadratic(QuadraticIrrational),
}

impl SlopeSpec {
    pub fn rational(p: i64, q: i64) -> Result<Self> {
        Ok(SlopeSpec::Rational(Rational::new(p, q)?))
    }

    pub fn quadratic(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Ok(SlopeSpec::Quadratic(QuadraticIrrational::new(a, b, c, d)?))
    }

    /// `(−1 + √5)/2`, the slope of the Fibonacci word.
    pub fn golden_conjugate() -> Self {
        Self::quadratic(-1, 1, 2, 5).expect("valid constant")
    }

    /// `(3 − √5)/2 = 1 − (√5 − 1)/2`, the slope whose characteristic word is
    /// the Fibonacci word `0100101001…`.
    pub fn fibonacci_slope() -> Self {
        Self::quadratic(3, -1, 2, 5).expect("valid constant")
    }

    /// `√2 − 1`.
    pub fn sqrt2_minus_one() -> Self {
        Self::quadratic(-1, 1, 1, 2).expect("valid constant")
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, SlopeSpec::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            SlopeSpec::Rational(r) => Some(r),
            SlopeSpec::Quadratic(_) => None,
        }
    }

    /// Ordering of `α` against `r`.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            SlopeSpec::Rational(s) => s.cmp(r),
            SlopeSpec::Quadratic(q) => q.cmp_rational(r),
        }
    }

    /// Ordering of `α` against `numer / denom`, `denom > 0`.
    pub fn cmp_ratio(&self, numer: u64, denom: u64) -> Ordering {
        self.cmp_rational(&Rational::new(numer, denom).expect("positive denominator"))
    }

    /// `0 <= α <= 1`.
    pub fn in_closed_unit(&self) -> bool {
        self.cmp_rational(&Rational::zero()) != Ordering::Less
            && self.cmp_rational(&Rational::one()) != Ordering::Greater
    }

    /// `0 < α <= 1`.
    pub fn in_half_open_unit(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
            && self.cmp_rational(&Rational::one()) != Ordering::Greater
    }

    /// `0 < α < 1`.
    pub fn in_open_unit(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
            && self.cmp_rational(&Rational::one()) == Ordering::Less
    }

    /// `⌊α·n + τ⌋`. Irrational slopes only admit `τ = 0`.
    pub fn floor_affine(&self, n: u64, tau: &Rational) -> Result<BigInt> {
        match self {
            SlopeSpec::Rational(r) => Ok((&(r * &Rational::from_integer(n)) + tau).floor()),
            SlopeSpec::Quadratic(q) => {
                require_zero_intercept(tau)?;
                Ok(q.floor_mul(n))
            }
        }
    }

    /// `⌈α·n + τ⌉`. Irrational slopes only admit `τ = 0`.
    pub fn ceil_affine(&self, n: u64, tau: &Rational) -> Result<BigInt> {
        match self {
            SlopeSpec::Rational(r) => Ok((&(r * &Rational::from_integer(n)) + tau).ceil()),
            SlopeSpec::Quadratic(q) => {
                require_zero_intercept(tau)?;
                Ok(q.ceil_mul(n))
            }
        }
    }

    /// Approximate value, for messages and plots only.
    pub fn to_f64(&self) -> f64 {
        match self {
            SlopeSpec::Rational(r) => r.to_f64(),
            SlopeSpec::Quadratic(q) => q.to_f64(),
        }
    }
}

fn require_zero_intercept(tau: &Rational) -> Result<()> {
    if tau.is_zero() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "intercept {tau} with an irrational slope; only 0 is supported"
        )))
    }
}

impl From<Rational> for SlopeSpec {
    fn from(r: Rational) -> Self {
        SlopeSpec::Rational(r)
    }
}

impl fmt::Display for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeSpec::Rational(r) => fmt::Display::fmt(r, f),
            SlopeSpec::Quadratic(q) => fmt::Display::fmt(q, f),
        }
    }
}

impl fmt::Debug for SlopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parses a signed coefficient that may be written as just `+`, `-` or nothing.
fn parse_coefficient(s: &str) -> Result<BigInt> {
    match s {
        "" | "+" => Ok(BigInt::one()),
        "-" => Ok(-BigInt::one()),
        _ => parse_int(s.strip_prefix('+').unwrap_or(s)),
    }
}

impl FromStr for SlopeSpec {
    type Err = Error;

    /// Accepts `p/q`, `p`, or `(a+b*sqrt(d))/c` (the `b*` and `/c` parts are optional,
    /// and `-` may replace `+`).
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(root_at) = s.find("sqrt(") else {
            return Ok(SlopeSpec::Rational(s.parse()?));
        };
        let malformed = || Error::Parse(format!("malformed quadratic slope {s:?}"));

        let (body, denom) = match s.rfind(")/") {
            Some(i) if s.starts_with('(') && i > root_at => (&s[1..i], parse_int(&s[i + 2..])?),
            _ if s.starts_with('(') && s.ends_with("))") => (&s[1..s.len() - 1], BigInt::one()),
            _ => (s.as_str(), BigInt::one()),
        };
        let root_at = body.find("sqrt(").ok_or_else(malformed)?;
        let radicand = body[root_at + 5..]
            .strip_suffix(')')
            .ok_or_else(malformed)?;
        let head = &body[..root_at];
        let head = head.strip_suffix('*').unwrap_or(head);
        // Split "a+b" / "a-b" at the last sign that is not the leading one.
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (a, b) = match split {
            Some(i) => (parse_int(&head[..i])?, parse_coefficient(&head[i..])?),
            None => (BigInt::zero(), parse_coefficient(head)?),
        };
        Ok(SlopeSpec::Quadratic(QuadraticIrrational::new(
            a,
            b,
            denom,
            parse_int(radicand)?,
        )?))
    }
}
