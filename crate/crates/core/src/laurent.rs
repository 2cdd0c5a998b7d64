//! Dense Laurent polynomials in `v` with arbitrary-precision integer
//! coefficients.
//!
//! Text format: terms `c*v^k` in decreasing exponent order joined by
//! ` + ` / ` - `, e.g. `1*v^2 - 3*v^0 + 1*v^-2`. The zero polynomial is `0`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Invariant: `coeffs` is empty (zero) or has non-zero first and last entries.
/// `coeffs[i]` is the coefficient of `v^(low + i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: k, coeffs: vec![c] }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p += &LaurentPoly::monomial(c, k);
        }
        p
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        let i = k - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i32, c))
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// The ring involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => LaurentPoly::zero(),
            Some(hi) => LaurentPoly { low: -hi, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Whether every term has strictly negative degree (the zero polynomial qualifies).
    pub fn in_negative_part(&self) -> bool {
        self.max_degree().is_none_or(|d| d < 0)
    }

    /// The unique bar-invariant polynomial agreeing with `self` in degrees `≥ 0`.
    pub fn bar_symmetrize_nonnegative(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.terms() {
            if k == 0 {
                out += &LaurentPoly::monomial(c.clone(), 0);
            } else if k > 0 {
                out += &LaurentPoly::monomial(c.clone(), k);
                out += &LaurentPoly::monomial(c.clone(), -k);
            }
        }
        out
    }

    /// Evaluation at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        self.coeffs.resize(len, BigInt::zero());
        let off = (rhs.low - low) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        *self = std::mem::take(self).normalize();
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly { low: self.low + rhs.low, coeffs }.normalize()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{}*v^{k}", c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let bad = || Error::Parse(format!("bad Laurent polynomial {s:?}"));
        let mut out = LaurentPoly::zero();
        let mut tokens = s.split_whitespace().peekable();
        let mut sign = BigInt::one();
        let mut first = true;
        while let Some(tok) = tokens.next() {
            let term = if first {
                first = false;
                match tok.strip_prefix('-') {
                    Some(rest) => {
                        sign = -BigInt::one();
                        rest
                    }
                    None => tok,
                }
            } else {
                sign = match tok {
                    "+" => BigInt::one(),
                    "-" => -BigInt::one(),
                    _ => return Err(bad()),
                };
                tokens.next().ok_or_else(bad)?
            };
            let (c, k) = term.split_once("*v^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let k: i32 = k.parse().map_err(|_| bad())?;
            if c.is_negative() {
                return Err(bad());
            }
            out += &LaurentPoly::monomial(&sign * c, k);
        }
        Ok(out)
    }
}
