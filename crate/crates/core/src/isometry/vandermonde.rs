//! Determinants of the matrices with rows `t_i^j - t_i^{-j}` and
//! `1, (-1)^j, t_i^j + t_i^{-j}`, compared against their product forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg;

/// Laurent polynomial in `t_1, ..., t_m` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    vars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Laurent {
    pub fn zero(vars: usize) -> Self {
        Laurent { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        Self::term(vars, c, vec![0; vars])
    }

    pub fn term(vars: usize, c: i64, exps: Vec<i64>) -> Self {
        let mut l = Self::zero(vars);
        if c != 0 {
            l.terms.insert(exps, BigInt::from(c));
        }
        l
    }

    /// `t_i^a + c t_j^b`.
    fn binomial(vars: usize, i: usize, a: i64, c: i64, j: usize, b: i64) -> Self {
        let mut e1 = vec![0; vars];
        e1[i] += a;
        let mut e2 = vec![0; vars];
        e2[j] += b;
        Self::term(vars, 1, e1).add(&Self::term(vars, c, e2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            let v = out.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *v += c;
            if v.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Laurent { vars: self.vars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Laurent { vars: self.vars, terms: out }
    }

    /// Multiply by `c * t^e`.
    pub fn shift(&self, c: &BigInt, e: &[i64]) -> Self {
        Laurent {
            vars: self.vars,
            terms: self.terms.iter().map(|(x, v)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), v * c)).collect(),
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn eval(&self, t: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut x = BigRational::from_integer(c.clone());
            for (ti, &k) in t.iter().zip(e) {
                x *= rational_pow(ti, k);
            }
            acc += x;
        }
        acc
    }
}

fn rational_pow(x: &BigRational, k: i64) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

/// Which of the two matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DetForm {
    /// `m x m`, rows `t_i^j - t_i^{-j}` for `j in [1, m]`.
    Minus,
    /// `(m+2) x (m+2)`, rows `1, (-1)^j, t_i^j + t_i^{-j}` for `j in [0, m+1]`.
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CheckMode {
    Symbolic,
    Random,
}

fn matrix_entries(m: usize, form: DetForm) -> Vec<Vec<Laurent>> {
    match form {
        DetForm::Minus => {
            (1..=m as i64).map(|j| (0..m).map(|i| Laurent::binomial(m, i, j, -1, i, -j)).collect()).collect()
        }
        DetForm::Plus => (0..=(m as i64 + 1))
            .map(|j| {
                let mut row = vec![Laurent::constant(m, 1), Laurent::constant(m, if j % 2 == 0 { 1 } else { -1 })];
                row.extend((0..m).map(|i| Laurent::binomial(m, i, j, 1, i, -j)));
                row
            })
            .collect(),
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, n, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Exact expansion of the determinant (Leibniz formula).
pub fn symbolic_det(m: usize, form: DetForm) -> Laurent {
    let a = matrix_entries(m, form);
    let size = a.len();
    let mut acc = Laurent::zero(m);
    for (perm, sign) in permutations(size) {
        let mut term = Laurent::constant(m, sign);
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(&a[row][col]);
            if term.is_zero() {
                break;
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// `prod_{i<j} (t_i - t_j) prod_{i<=j} (t_i - t_j^{-1})`, times
/// `2 prod_i (t_i - t_i^{-1})` for the plus form.
pub fn product_form(m: usize, form: DetForm) -> Laurent {
    let mut p = Laurent::constant(m, 1);
    for i in 0..m {
        for j in i..m {
            if i < j {
                p = p.mul(&Laurent::binomial(m, i, 1, -1, j, 1));
            }
            p = p.mul(&Laurent::binomial(m, i, 1, -1, j, -1));
        }
    }
    if form == DetForm::Plus {
        p = p.scale(&BigInt::from(2));
        for i in 0..m {
            p = p.mul(&Laurent::binomial(m, i, 1, -1, i, -1));
        }
    }
    p
}

fn eval_product_form(t: &[BigRational], form: DetForm) -> BigRational {
    let m = t.len();
    let mut acc = BigRational::one();
    for i in 0..m {
        for j in i..m {
            if i < j {
                acc *= &t[i] - &t[j];
            }
            acc *= &t[i] - t[j].recip();
        }
    }
    if form == DetForm::Plus {
        acc *= BigRational::from_integer(2.into());
        for ti in t {
            acc *= ti - ti.recip();
        }
    }
    acc
}

fn numeric_det(t: &[BigRational], form: DetForm) -> BigRational {
    let m = t.len();
    let f = Rationals;
    let rows: Vec<Vec<BigRational>> = match form {
        DetForm::Minus => {
            (1..=m as i64).map(|j| t.iter().map(|x| rational_pow(x, j) - rational_pow(x, -j)).collect()).collect()
        }
        DetForm::Plus => (0..=(m as i64 + 1))
            .map(|j| {
                let mut row =
                    vec![BigRational::one(), BigRational::from_integer(if j % 2 == 0 { 1 } else { -1 }.into())];
                row.extend(t.iter().map(|x| rational_pow(x, j) + rational_pow(x, -j)));
                row
            })
            .collect(),
    };
    linalg::det(&f, &rows)
}

/// The sign and monomial relating the determinant to its product form:
/// `det = sign * t^monomial * product`.
///
/// Closed form read off the exact expansions for small `m`: `t_i` (0-based)
/// carries exponent `-(m - 1 - i)`, and the sign is `(-1)^{m(m-1)/2}` for the
/// minus form and its negative for the plus form.
pub fn normalizer(m: usize, form: DetForm) -> (i64, Vec<i64>) {
    let mono: Vec<i64> = (0..m).map(|i| -((m - 1 - i) as i64)).collect();
    let base = if (m * m.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
    let sign = match form {
        DetForm::Minus => base,
        DetForm::Plus => -base,
    };
    (sign, mono)
}

#[derive(Clone, Debug, Serialize)]
pub struct VandermondeReport {
    pub m: usize,
    pub form: DetForm,
    pub mode: CheckMode,
    pub sign: i64,
    pub monomial: Vec<i64>,
    pub checks: usize,
    pub matches: usize,
    pub pass: bool,
}

/// Symbolic mode expands both sides exactly and reads off the sign and
/// monomial; random mode evaluates both sides (with the closed-form sign and
/// monomial) at `points` random nonzero rationals.
pub fn vandermonde_check(
    m: usize,
    form: DetForm,
    mode: CheckMode,
    points: usize,
    seed: u64,
) -> Result<VandermondeReport> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    match mode {
        CheckMode::Symbolic => {
            if m > 3 {
                return Err(Error::Precondition(format!("symbolic expansion is limited to m <= 3, got {m}")));
            }
            let d = symbolic_det(m, form);
            let p = product_form(m, form);
            let (le, lc) = d.leading().ok_or_else(|| Error::Verification("determinant vanishes".into()))?;
            let (pe, pc) = p.leading().expect("product form is nonzero");
            let ratio = lc / pc;
            let mono: Vec<i64> = le.iter().zip(pe).map(|(a, b)| a - b).collect();
            let exact = (&ratio * pc == *lc) && ratio.abs().is_one() && p.shift(&ratio, &mono) == d;
            let sign: i64 = if ratio.is_negative() { -1 } else { 1 };
            let pass = exact && (sign, mono.clone()) == normalizer(m, form);
            Ok(VandermondeReport { m, form, mode, sign, monomial: mono, checks: 1, matches: usize::from(exact), pass })
        }
        CheckMode::Random => {
            let (sign, mono) = normalizer(m, form);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut matches = 0;
            for _ in 0..points {
                let t = random_point(&mut rng, m, form)?;
                let mut rhs = eval_product_form(&t, form) * BigRational::from_integer(sign.into());
                for (x, &k) in t.iter().zip(&mono) {
                    rhs *= rational_pow(x, k);
                }
                if numeric_det(&t, form) == rhs {
                    matches += 1;
                }
            }
            Ok(VandermondeReport {
                m,
                form,
                mode,
                sign,
                monomial: mono,
                checks: points,
                matches,
                pass: matches == points,
            })
        }
    }
}

/// Random nonzero rationals avoiding the zero set of the product form.
fn random_point(rng: &mut ChaCha8Rng, m: usize, form: DetForm) -> Result<Vec<BigRational>> {
    for _ in 0..1000 {
        let t: Vec<BigRational> = (0..m)
            .map(|_| {
                let mut num = 0;
                while num == 0 {
                    num = rng.gen_range(-40i64..=40);
                }
                BigRational::new(num.into(), rng.gen_range(1i64..=40).into())
            })
            .collect();
        if !eval_product_form(&t, form).is_zero() {
            return Ok(t);
        }
    }
    Err(Error::Precondition("could not find a point off the zero set".into()))
}
