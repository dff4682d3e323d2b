//! Univariate Laurent polynomials in `q` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum_i c_i q^(low + i)`.
///
/// Always normalized: the coefficient vector has no leading or trailing
/// zeros, and the zero polynomial is the empty vector with `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        QPoly::from_coeffs(0, vec![c.into()])
    }

    /// `q^k`.
    pub fn monomial(k: i64) -> Self {
        QPoly::from_coeffs(k, vec![BigInt::one()])
    }

    /// `c * q^k`.
    pub fn term<T: Into<BigInt>>(c: T, k: i64) -> Self {
        QPoly::from_coeffs(k, vec![c.into()])
    }

    /// Coefficients listed from degree `low` upwards.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + q + ... + q^(d-1)`.
    pub fn q_integer(d: usize) -> Self {
        QPoly::from_coeffs(0, vec![BigInt::one(); d])
    }

    /// `q^d - 1`.
    pub fn q_pow_minus_one(d: usize) -> Self {
        QPoly::monomial(d as i64) - QPoly::one()
    }

    /// `1 - c q^d`, the factor of `det(1 - q w)` attached to a `d`-cycle.
    pub fn one_minus(c: i64, d: usize) -> Self {
        QPoly::one() - QPoly::term(c, d as i64)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.low {
            return BigInt::zero();
        }
        self.coeffs.get((k - self.low) as usize).cloned().unwrap_or_default()
    }

    /// Exponent/coefficient pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// True if no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Coefficients from degree 0 to the degree, for genuine polynomials.
    pub fn to_dense(&self) -> Option<Vec<BigInt>> {
        if !self.is_polynomial() {
            return None;
        }
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.low as usize];
        out.extend(self.coeffs.iter().cloned());
        Some(out)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        QPoly::from_coeffs(self.low, self.coeffs.iter().map(|x| x * &c).collect())
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        QPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide every coefficient by `d`, failing if any division is inexact.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quo, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!("{self} by {d}")));
            }
            out.push(quo);
        }
        Ok(QPoly::from_coeffs(self.low, out))
    }

    /// Exact quotient `self / divisor` in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (quo, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({divisor})")));
        }
        Ok(quo)
    }

    /// Long division of the underlying dense polynomials, after factoring
    /// out the powers of `q`. The quotient is exact over `Z` only when every
    /// step divides the leading coefficient; otherwise an error is returned.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok((QPoly::zero(), QPoly::zero()));
        }
        let shift = self.low - divisor.low;
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let dv = &divisor.coeffs;
        let lead = dv.last().unwrap();
        if rem.len() < dv.len() {
            return Ok((QPoly::zero(), self.clone()));
        }
        let qlen = rem.len() - dv.len() + 1;
        let mut quo = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dv.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / ({divisor}) leaves a non-integral quotient")));
            }
            for (j, d) in dv.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quo[i] = c;
        }
        Ok((QPoly::from_coeffs(shift, quo), QPoly::from_coeffs(self.low, rem)))
    }

    pub fn eval(&self, q: &BigInt) -> BigRational {
        let mut acc = BigRational::zero();
        let qr = BigRational::from_integer(q.clone());
        for (k, c) in self.terms() {
            let pw = if k >= 0 {
                num_traits::pow(qr.clone(), k as usize)
            } else {
                num_traits::pow(qr.recip(), (-k) as usize)
            };
            acc += BigRational::from_integer(c.clone()) * pw;
        }
        acc
    }

    /// Evaluation at an integer, for genuine polynomials.
    pub fn eval_int(&self, q: i64) -> BigInt {
        let v = self.eval(&BigInt::from(q));
        assert!(v.is_integer(), "Laurent polynomial evaluated to a fraction");
        v.to_integer()
    }

    /// Derivative-free check `p(1)`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The `d`-th cyclotomic polynomial `Phi_d`.
    pub fn cyclotomic(d: usize) -> QPoly {
        assert!(d >= 1);
        let mut p = QPoly::q_pow_minus_one(d);
        for e in 1..d {
            if d % e == 0 {
                p = p.div_exact(&QPoly::cyclotomic(e)).expect("cyclotomic division");
            }
        }
        p
    }

    /// Factor a product of cyclotomic polynomials as `{d: multiplicity}`.
    ///
    /// Returns `None` when something other than cyclotomic factors remains.
    pub fn cyclotomic_factorization(&self) -> Option<BTreeMap<usize, u32>> {
        if self.is_zero() || !self.is_polynomial() || self.low != 0 {
            return None;
        }
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        let deg = rest.degree().unwrap_or(0) as usize;
        // Phi_d has degree totient(d) >= sqrt(d/2), so d <= 2 deg^2 suffices.
        let bound = (2 * deg * deg).max(2);
        for d in 1..=bound {
            if rest.degree() == Some(0) {
                break;
            }
            let phi = QPoly::cyclotomic(d);
            if phi.degree().unwrap() > rest.degree().unwrap() {
                continue;
            }
            while let Ok(next) = rest.div_exact(&phi) {
                *out.entry(d).or_insert(0) += 1;
                rest = next;
            }
        }
        (rest == QPoly::one()).then_some(out)
    }
}

impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

fn add_polys(a: &QPoly, b: &QPoly, sign: i32) -> QPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if sign > 0 { b.clone() } else { -b };
    }
    let low = a.low.min(b.low);
    let high = a.degree().unwrap().max(b.degree().unwrap());
    let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
    for (k, c) in a.terms() {
        out[(k - low) as usize] += c;
    }
    for (k, c) in b.terms() {
        if sign > 0 {
            out[(k - low) as usize] += c;
        } else {
            out[(k - low) as usize] -= c;
        }
    }
    QPoly::from_coeffs(low, out)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        add_polys(self, rhs, 1)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        add_polys(self, rhs, -1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(self.low + rhs.low, out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.low, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<QPoly> for &QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |a, b| a * b)
    }
}

/// Euler's totient, which is the degree of `Phi_d`.
pub fn totient(d: usize) -> usize {
    (1..=d).filter(|k| k.gcd(&d) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> QPoly {
        QPoly::from_i64s(low, c)
    }

    #[test]
    fn normalization_strips_zeros() {
        let a = p(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(a.low_degree(), Some(0));
        assert_eq!(a.degree(), Some(1));
        assert!(p(3, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[-1, 1]);
        assert_eq!(&a * &b, p(0, &[-1, 0, 1]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(p(-1, &[1]) * p(1, &[1]), QPoly::one());
    }

    #[test]
    fn exact_division() {
        let num = QPoly::q_pow_minus_one(6);
        let den = QPoly::q_pow_minus_one(3);
        assert_eq!(num.div_exact(&den).unwrap(), p(0, &[1, 0, 0, 1]));
        assert!(QPoly::q_pow_minus_one(5).div_exact(&den).is_err());
        assert!(p(0, &[1]).div_exact(&p(0, &[2])).is_err());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(QPoly::cyclotomic(1), p(0, &[-1, 1]));
        assert_eq!(QPoly::cyclotomic(2), p(0, &[1, 1]));
        assert_eq!(QPoly::cyclotomic(4), p(0, &[1, 0, 1]));
        assert_eq!(QPoly::cyclotomic(6), p(0, &[1, -1, 1]));
        assert_eq!(QPoly::cyclotomic(12).degree(), Some(4));
        for d in 1..40 {
            assert_eq!(QPoly::cyclotomic(d).degree(), Some(totient(d) as i64));
        }
    }

    #[test]
    fn factorization() {
        // q^4 - 1 = Phi1 Phi2 Phi4
        let f = QPoly::q_pow_minus_one(4).cyclotomic_factorization().unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(1, 1), (2, 1), (4, 1)]);
        // q^3 + 1 = Phi2 Phi6
        let g = (QPoly::monomial(3) + QPoly::one()).cyclotomic_factorization().unwrap();
        assert_eq!(g.into_iter().collect::<Vec<_>>(), vec![(2, 1), (6, 1)]);
        assert!(p(0, &[1, 1, 1, 1, 1, 1, 1, 1, 2]).cyclotomic_factorization().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[0, -1, 0, 1]).to_string(), "q^3 - q");
        assert_eq!(p(-1, &[2]).to_string(), "2q^-1");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(0, &[0, -1, 0, 1]).eval_int(5), BigInt::from(120));
        assert_eq!(p(-1, &[1, 0, 1]).eval(&BigInt::from(2)), BigRational::new(5.into(), 2.into()));
    }
}
