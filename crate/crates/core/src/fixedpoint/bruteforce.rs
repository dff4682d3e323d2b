//! Exhaustive count of pairs `(g, B)` with `g` in a rational class of
//! `SL_2(F_q) = Sp_2(F_q)` or `Sp_4(F_q)` and `(B, gBg^-1)` in a given
//! relative position.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, SmallGf};
use crate::isometry::flags::{complete_flag, relative_position};
use crate::linalg::{self, Matrix};
use crate::partition::{GroupKind, PartitionSeq};
use crate::weyl::{w_min_rep, SignedPerm};

/// Above this many (element, flag) pairs the count uses `G`-equivariance:
/// `|γ| · #{B : (B, g_0 B g_0^-1) ∈ O_w}`.
pub const EXHAUSTIVE_BUDGET: usize = 250_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallGroup {
    Sl2,
    Sp4,
}

impl SmallGroup {
    pub fn rank(self) -> usize {
        match self {
            SmallGroup::Sl2 => 1,
            SmallGroup::Sp4 => 2,
        }
    }
}

impl FromStr for SmallGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sl2" | "sp2" => Ok(SmallGroup::Sl2),
            "sp4" => Ok(SmallGroup::Sp4),
            _ => Err(Error::UnsupportedGroup(s.into())),
        }
    }
}

impl fmt::Display for SmallGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SmallGroup::Sl2 => "SL2",
            SmallGroup::Sp4 => "Sp4",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BruteForceReport {
    pub group: SmallGroup,
    pub q: u64,
    pub class_size: usize,
    pub flags: usize,
    pub exhaustive: bool,
    /// Count per relative position, keyed by the signed permutation.
    pub counts: BTreeMap<String, u64>,
}

impl BruteForceReport {
    pub fn count(&self, w: &SignedPerm) -> u64 {
        self.counts.get(&w.to_string()).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Antidiagonal symplectic form `(e_i, e_{2n+1-i}) = 1` for `i <= n`.
fn gram(f: &SmallGf, n: usize) -> Matrix<u64> {
    let m = 2 * n;
    let mut g = linalg::zeros(f, m, m);
    for i in 0..m {
        g[i][m - 1 - i] = if i < n { f.one() } else { f.neg(&f.one()) };
    }
    g
}

fn preserves(f: &SmallGf, gram: &Matrix<u64>, g: &Matrix<u64>) -> bool {
    let gt = linalg::transpose(g);
    linalg::mat_mul(f, &linalg::mat_mul(f, &gt, gram), g) == *gram
}

fn vectors(f: &SmallGf, dim: usize) -> Vec<Vec<u64>> {
    let q = f.order() as usize;
    (1..q.pow(dim as u32))
        .map(|mut x| {
            (0..dim)
                .map(|_| {
                    let d = (x % q) as u64;
                    x /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// Representative of a line: first nonzero coordinate equal to 1.
fn is_normalized(v: &[u64]) -> bool {
    v.iter().find(|x| **x != 0) == Some(&1)
}

/// Symplectic transvections `x ↦ x + (x, v) v` for all nonzero `v`.
fn transvections(f: &SmallGf, gram: &Matrix<u64>) -> Vec<(Matrix<u64>, Matrix<u64>)> {
    let dim = gram.len();
    vectors(f, dim)
        .into_iter()
        .map(|v| {
            let gv = linalg::mat_vec(f, gram, &v);
            let build = |sign: &u64| {
                let mut t = linalg::identity(f, dim);
                for (i, vi) in v.iter().enumerate() {
                    for (j, gj) in gv.iter().enumerate() {
                        // (x, v) = x^T G v
                        let c = f.mul(sign, &f.mul(vi, gj));
                        t[i][j] = f.add(&t[i][j], &c);
                    }
                }
                t
            };
            (build(&f.one()), build(&f.neg(&f.one())))
        })
        .collect()
}

/// The rational class of `rep`, by closing under conjugation by generators.
fn rational_class(f: &SmallGf, gram: &Matrix<u64>, rep: &Matrix<u64>) -> Vec<Matrix<u64>> {
    let gens = transvections(f, gram);
    let mut seen: HashSet<Matrix<u64>> = HashSet::new();
    seen.insert(rep.clone());
    let mut out = vec![rep.clone()];
    let mut i = 0;
    while i < out.len() {
        for (t, tinv) in &gens {
            let c = linalg::mat_mul(f, &linalg::mat_mul(f, t, &out[i]), tinv);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        i += 1;
    }
    out
}

/// Complete isotropic flags, each given by its isotropic half `v_1, .., v_n`.
fn isotropic_flags(f: &SmallGf, gram: &Matrix<u64>, n: usize) -> Vec<Vec<Vec<u64>>> {
    let dim = 2 * n;
    let lines: Vec<Vec<u64>> = vectors(f, dim).into_iter().filter(|v| is_normalized(v)).collect();
    if n == 1 {
        return lines.into_iter().map(|v| vec![v]).collect();
    }
    let mut out = Vec::new();
    for v1 in &lines {
        let perp = linalg::perp(f, gram, std::slice::from_ref(v1));
        // planes through v1 inside v1^⊥: lines of v1^⊥ / v1
        let mut planes: Vec<Vec<Vec<u64>>> = Vec::new();
        for u in vectors(f, perp.len()) {
            let x: Vec<u64> = (0..dim)
                .map(|i| perp.iter().zip(&u).fold(f.zero(), |acc, (b, c)| f.add(&acc, &f.mul(c, &b[i]))))
                .collect();
            let pair = vec![v1.clone(), x.clone()];
            if linalg::span_dim(f, &pair) != 2 {
                continue;
            }
            if planes.iter().all(|p| linalg::intersection_dim(f, p, &pair) != 2) {
                planes.push(pair);
            }
        }
        out.extend(planes);
    }
    out
}

fn position(f: &SmallGf, gram: &Matrix<u64>, flag: &[Vec<u64>], g: &Matrix<u64>) -> Result<SignedPerm> {
    let moved: Vec<Vec<u64>> = flag.iter().map(|v| linalg::mat_vec(f, g, v)).collect();
    let a = complete_flag(f, gram, flag);
    let b = complete_flag(f, gram, &moved);
    let dim = gram.len();
    let table: Vec<Vec<usize>> = (0..=dim)
        .map(|i| (0..=dim).map(|j| linalg::intersection_dim(f, &a.members[i], &b.members[j])).collect())
        .collect();
    relative_position(&table, GroupKind::Sp)
}

/// Counts of `(g, B)` for every relative position, `g` ranging over the
/// `G^F`-class of `rep`.
pub fn brute_force_counts(group: SmallGroup, q: u64, rep: &Matrix<u64>) -> Result<BruteForceReport> {
    let f = SmallGf::new(q).ok_or_else(|| Error::Precondition(format!("GF({q}) is not supported")))?;
    let n = group.rank();
    let gram = gram(&f, n);
    if rep.len() != 2 * n || rep.iter().any(|r| r.len() != 2 * n || r.iter().any(|&x| x >= q)) {
        return Err(Error::Precondition(format!("representative is not a {0}x{0} matrix over GF({q})", 2 * n)));
    }
    if !preserves(&f, &gram, rep) {
        return Err(Error::Precondition(format!("representative is not in {group}(F_{q})")));
    }
    let class = rational_class(&f, &gram, rep);
    let flags = isotropic_flags(&f, &gram, n);
    let exhaustive = class.len() * flags.len() <= EXHAUSTIVE_BUDGET;
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    if exhaustive {
        for g in &class {
            for fl in &flags {
                *counts.entry(position(&f, &gram, fl, g)?.to_string()).or_insert(0) += 1;
            }
        }
    } else {
        for fl in &flags {
            *counts.entry(position(&f, &gram, fl, rep)?.to_string()).or_insert(0) += class.len() as u64;
        }
    }
    Ok(BruteForceReport { group, q, class_size: class.len(), flags: flags.len(), exhaustive, counts })
}

pub fn brute_force_count(group: SmallGroup, q: u64, rep: &Matrix<u64>, w: &SignedPerm) -> Result<u64> {
    if w.rank() != group.rank() {
        return Err(Error::Precondition(format!("{w} is not in the Weyl group of {group}")));
    }
    Ok(brute_force_counts(group, q, rep)?.count(w))
}

/// Parse a representative: `diag:a` (SL2, `diag(a, a^-1)`), `diag:a,b`
/// (Sp4, `diag(a, b, b^-1, a^-1)`), or `rows:a,b;c,d` with field elements
/// written as integers `x + y p` in `GF(p^2)`.
pub fn parse_rep(group: SmallGroup, q: u64, s: &str) -> Result<Matrix<u64>> {
    let f = SmallGf::new(q).ok_or_else(|| Error::Precondition(format!("GF({q}) is not supported")))?;
    let n = group.rank();
    let num = |x: &str| -> Result<u64> {
        let v: u64 = x.trim().parse().map_err(|_| Error::Parse(format!("bad field element '{x}'")))?;
        if v >= q {
            return Err(Error::Parse(format!("{v} is not an element of GF({q})")));
        }
        Ok(v)
    };
    if let Some(body) = s.strip_prefix("diag:") {
        let xs = body.split(',').map(num).collect::<Result<Vec<_>>>()?;
        if xs.len() != n {
            return Err(Error::Parse(format!("{group} needs {n} diagonal entries")));
        }
        let mut m = linalg::zeros(&f, 2 * n, 2 * n);
        for (i, x) in xs.iter().enumerate() {
            let inv = f.inv(x).ok_or_else(|| Error::Precondition("zero on the diagonal".into()))?;
            m[i][i] = *x;
            m[2 * n - 1 - i][2 * n - 1 - i] = inv;
        }
        return Ok(m);
    }
    if let Some(body) = s.strip_prefix("rows:") {
        return body.split(';').map(|r| r.split(',').map(num).collect::<Result<Vec<_>>>()).collect();
    }
    Err(Error::Parse(format!("representative '{s}': expected diag:... or rows:...")))
}

/// Parse a Weyl group element: `e`, `s` (rank 1), `cox`, `w0`, or images
/// of `1..2n` separated by commas.
pub fn parse_weyl(group: SmallGroup, s: &str) -> Result<SignedPerm> {
    let n = group.rank();
    match s {
        "e" | "1" => Ok(SignedPerm::identity(n)),
        "s" if n == 1 => Ok(SignedPerm::minus_one(1)),
        "cox" | "coxeter" => w_min_rep(&PartitionSeq::new(vec![n])?, GroupKind::Sp),
        "w0" | "longest" => Ok(SignedPerm::minus_one(n)),
        _ => {
            let images = s
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image '{x}'"))))
                .collect::<Result<Vec<_>>>()?;
            SignedPerm::new(images)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_f5() {
        let rep = parse_rep(SmallGroup::Sl2, 5, "diag:2").unwrap();
        let r = brute_force_counts(SmallGroup::Sl2, 5, &rep).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.class_size, 30);
        assert_eq!(r.flags, 6);
        let s = parse_weyl(SmallGroup::Sl2, "s").unwrap();
        assert_eq!(r.count(&s), 120);
        assert_eq!(r.count(&SignedPerm::identity(1)), 60);
    }

    #[test]
    fn sl2_f7_and_f9() {
        let s = parse_weyl(SmallGroup::Sl2, "s").unwrap();
        let rep = parse_rep(SmallGroup::Sl2, 7, "diag:2").unwrap();
        assert_eq!(brute_force_count(SmallGroup::Sl2, 7, &rep, &s).unwrap(), 336);
        // 3 encodes x with x^2 = -1 in GF(9)
        let rep = parse_rep(SmallGroup::Sl2, 9, "diag:3").unwrap();
        assert_eq!(brute_force_count(SmallGroup::Sl2, 9, &rep, &s).unwrap(), 720);
    }

    #[test]
    fn rejects_non_members() {
        let bad = vec![vec![2, 0], vec![0, 2]];
        assert!(brute_force_counts(SmallGroup::Sl2, 5, &bad).is_err());
    }

    #[test]
    fn sp4_f3_central_and_shortcut() {
        let one = parse_rep(SmallGroup::Sp4, 3, "diag:1,1").unwrap();
        let r = brute_force_counts(SmallGroup::Sp4, 3, &one).unwrap();
        assert_eq!(r.flags, 160);
        assert_eq!(r.class_size, 1);
        assert_eq!(r.count(&SignedPerm::identity(2)), 160);
        let rep = parse_rep(SmallGroup::Sp4, 3, "diag:1,2").unwrap();
        let r = brute_force_counts(SmallGroup::Sp4, 3, &rep).unwrap();
        assert_eq!(r.total(), r.class_size as u64 * 160);
    }
}
