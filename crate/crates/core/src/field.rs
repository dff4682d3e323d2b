//! Exact fields used by the linear algebra layer: `Q` and prime fields `F_p`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field given by a context value. Elements are plain data, operations go
/// through the context so `F_p` needs no global modulus.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Exact textual form: `n/d` for rationals, the residue for `F_p`.
    fn render(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Some(acc)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }
    fn name(&self) -> String {
        "Q".into()
    }
}

/// The prime field `F_p`; `p` is assumed prime (checked by [`PrimeField::new`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Option<Self> {
        is_prime(p).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_big(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits u64")
    }

    /// Image of a rational number, `None` if `p` divides the denominator.
    pub fn reduce_rational(&self, v: &BigRational) -> Option<u64> {
        let n = self.reduce_big(v.numer());
        let d = self.reduce_big(v.denom());
        self.div(&n, &d)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let mut result = 1u128;
        let mut base = (*a % self.p) as u128;
        let m = self.p as u128;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(result as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Small finite field `GF(p^k)` with `k <= 2`, elements encoded as
/// integers `a + b*p` for `a + b*x` where `x^2 = r` for a fixed nonsquare `r`.
/// Only used by the brute-force counters, so tables are fine.
#[derive(Clone, Debug)]
pub struct SmallGf {
    p: u64,
    k: u32,
    nonsquare: u64,
}

impl SmallGf {
    /// `q` must be a prime or the square of an odd prime.
    pub fn new(q: u64) -> Option<Self> {
        if is_prime(q) {
            return Some(SmallGf { p: q, k: 1, nonsquare: 0 });
        }
        let r = (q as f64).sqrt().round() as u64;
        if r * r == q && is_prime(r) && r != 2 {
            let ns = (2..r).find(|&c| (1..r).all(|x| x * x % r != c))?;
            return Some(SmallGf { p: r, k: 2, nonsquare: ns });
        }
        None
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn split(&self, a: u64) -> (u64, u64) {
        (a % self.p, a / self.p)
    }

    fn join(&self, a: u64, b: u64) -> u64 {
        a % self.p + (b % self.p) * self.p
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }
}

impl Field for SmallGf {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let (a0, a1) = self.split(*a);
        let (b0, b1) = self.split(*b);
        self.join(a0 + b0, a1 + b1)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        let p = self.p;
        let (a0, a1) = self.split(*a);
        let (b0, b1) = self.split(*b);
        let c0 = (a0 * b0 + a1 * b1 % p * self.nonsquare) % p;
        let c1 = (a0 * b1 + a1 * b0) % p;
        self.join(c0, c1)
    }
    fn neg(&self, a: &u64) -> u64 {
        let (a0, a1) = self.split(*a);
        self.join((self.p - a0) % self.p, (self.p - a1) % self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        self.elements().find(|b| self.mul(a, b) == 1)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn render(&self, a: &u64) -> String {
        let (a0, a1) = self.split(*a);
        if self.k == 1 || a1 == 0 {
            a0.to_string()
        } else {
            format!("{a0}+{a1}x")
        }
    }
    fn name(&self) -> String {
        format!("GF({})", self.order())
    }
}

/// Parse an exact rational `n/d` or integer string.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Height of a rational number, `max(|num|, |den|)`.
pub fn height(a: &BigRational) -> BigInt {
    a.numer().abs().max(a.denom().abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(11).unwrap();
        for a in 1..11 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(PrimeField::new(12).is_none());
    }

    #[test]
    fn gf9_is_a_field() {
        let f = SmallGf::new(9).unwrap();
        assert_eq!(f.order(), 9);
        for a in 1..9 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        // multiplicative group is cyclic of order 8
        let has_generator = (1..9).any(|g| {
            let mut x = 1;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..8 {
                x = f.mul(&x, &g);
                seen.insert(x);
            }
            seen.len() == 8
        });
        assert!(has_generator);
        assert!(SmallGf::new(8).is_none());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-4").unwrap(), BigRational::from_integer((-4).into()));
        assert!(parse_rational("1/0").is_none());
    }

    proptest! {
        #[test]
        fn prime_field_distributes(a in 0u64..101, b in 0u64..101, c in 0u64..101) {
            let f = PrimeField::new(101).unwrap();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        }

        #[test]
        fn gf9_distributes(a in 0u64..9, b in 0u64..9, c in 0u64..9) {
            let f = SmallGf::new(9).unwrap();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.sub(&f.add(&a, &b), &b), a);
        }
    }
}
