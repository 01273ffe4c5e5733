//! Laurent polynomials in one variable `q` with big-integer coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::HParams;

/// A Laurent polynomial `sum c_e q^e`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::q_pow(0)
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        LaurentPoly::monomial(1, e)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut out = LaurentPoly::zero();
        out.add_term(e, c.into());
        out
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `q^m`.
    pub fn shift(&self, m: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + m, c.clone())).collect() }
    }

    /// Substitutes `q -> q^k`.
    pub fn inflate(&self, k: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    /// Substitutes `q -> q^-1`.
    pub fn bar(&self) -> Self {
        self.inflate(-1)
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True if every exponent is at least 1.
    pub fn divisible_by_q(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The bar-invariant `g` with `self - g` in `q Z[q]`.
    pub fn symmetric_correction(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, c) in self.coeffs.range(..=0) {
            out.add_term(e, c.clone());
            if e < 0 {
                out.add_term(-e, c.clone());
            }
        }
        out
    }

    /// Exact quotient `self / g` in the Laurent ring.
    pub fn exact_div(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(glo), Some(ghi)) = (g.min_exponent(), g.max_exponent()) else {
            return Err(Error::InexactDivision);
        };
        let lead = g.coeff(ghi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let floor = self.min_exponent().unwrap_or(0) - glo;
        while let Some(rhi) = rem.max_exponent() {
            if rhi - ghi < floor {
                return Err(Error::InexactDivision);
            }
            let (c, r) = rem.coeff(rhi).div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let t = LaurentPoly::monomial(c, rhi - ghi);
            rem = &rem - &(&t * g);
            quot += &t;
        }
        Ok(quot)
    }

    /// The quantum integer `[k]_i = sum_{j<k} q_i^(k-1-2j)`.
    pub fn quantum_integer(k: u32, i: u32, p: HParams) -> Self {
        let step = q_i_exponent(i, p);
        let k = k as i32;
        LaurentPoly::from_terms((0..k).map(|j| (step * (k - 1 - 2 * j), 1)))
    }

    /// `[k]_i! = [1]_i [2]_i ... [k]_i`.
    pub fn quantum_factorial(k: u32, i: u32, p: HParams) -> Self {
        (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &LaurentPoly::quantum_integer(j, i, p))
    }
}

/// The exponent `e` with `q_i = q^e`.
pub fn q_i_exponent(i: u32, p: HParams) -> i32 {
    if i == 0 {
        1
    } else if i == p.n() {
        4
    } else {
        2
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
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

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `q^-2 + 1 + 2*q^3`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses sums of terms `c`, `q`, `q^e`, `c*q^e` with optional signs.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad Laurent polynomial {s:?}: {why}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = LaurentPoly::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && !(matches!(bytes[end], b'+' | b'-') && bytes[end - 1] != b'^') {
                end += 1;
            }
            let term = &compact[start..end];
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, power) = match body.find('q') {
                None => (body, None),
                Some(pos) => {
                    let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    (c, Some(&body[pos + 1..]))
                }
            };
            let mut c: BigInt = if coef.is_empty() {
                if power.is_none() {
                    return Err(bad("empty term"));
                }
                BigInt::one()
            } else {
                coef.parse().map_err(|_| bad(coef))?
            };
            let e: i32 = match power {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let digits = rest.strip_prefix('^').ok_or_else(|| bad(rest))?;
                    digits.parse().map_err(|_| bad(digits))?
                }
            };
            if neg {
                c = -c;
            }
            out.add_term(e, c);
            start = end;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&lp("q + q^-1") * &lp("q - q^-1"), lp("q^2 - q^-2"));
        assert_eq!(lp("q^2 - q^-2").exact_div(&lp("q - q^-1")).unwrap(), lp("q + q^-1"));
        assert_eq!(&lp("3 + q") * &LaurentPoly::one(), lp("3 + q"));
        assert_eq!(lp("q^2 + 1").exact_div(&lp("q + 1")), Err(Error::InexactDivision));
        assert_eq!(lp("2*q").exact_div(&lp("3")), Err(Error::InexactDivision));
        assert!(LaurentPoly::zero().exact_div(&lp("q")).unwrap().is_zero());
        assert!(lp("q").exact_div(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn bar_and_correction() {
        assert_eq!(lp("q^3 + q").bar(), lp("q^-3 + q^-1"));
        assert!(!lp("q^4 + q^2").is_bar_invariant());
        assert_eq!(lp("q^-2 + 3 + q^5").symmetric_correction(), lp("q^-2 + 3 + q^2"));
        assert!(lp("q + 7*q^2").symmetric_correction().is_zero());
        assert_eq!(lp("q + q^-1").symmetric_correction(), lp("q + q^-1"));
    }

    #[test]
    fn quantum_numbers() {
        let p = HParams::new(5).unwrap();
        assert_eq!(LaurentPoly::quantum_integer(2, 0, p), lp("q + q^-1"));
        assert_eq!(LaurentPoly::quantum_integer(2, 2, p), lp("q^4 + q^-4"));
        assert_eq!(LaurentPoly::quantum_integer(2, 1, p), lp("q^2 + q^-2"));
        for i in 0..=2 {
            assert!(LaurentPoly::quantum_integer(1, i, p).is_one());
        }
        assert_eq!(LaurentPoly::quantum_factorial(3, 0, p), lp("q^-3 + 2*q^-1 + 2*q + q^3"));
        assert!(LaurentPoly::quantum_factorial(0, 1, p).is_one());
    }

    #[test]
    fn predicates() {
        assert!(lp("q^4 + q^2").divisible_by_q());
        assert_eq!(lp("q^4 + q^2").eval_at_one(), BigInt::from(2));
        assert!(!LaurentPoly::one().divisible_by_q());
        assert!(LaurentPoly::zero().divisible_by_q());
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
    }

    #[test]
    fn text_round_trip() {
        for s in ["q^-2 + 1 + 2*q^3", "0", "-q", "q^-1 - 5*q^2", "-3", "q"] {
            assert_eq!(format!("{}", lp(s)), s);
        }
        assert_eq!(lp("2*q^-3+q-q"), lp("2*q^-3"));
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
    }
}
