//! Partition combinatorics for elliptic classes of classical Weyl groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which isometry group is meant: symplectic, odd orthogonal, even orthogonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    /// `Q = 0`, `dim V = 2n`.
    Sp,
    /// `Q != 0`, `dim V = 2n + 1`.
    SoOdd,
    /// `Q != 0`, `dim V = 2n`.
    SoEven,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Sp, GroupKind::SoOdd, GroupKind::SoEven];

    /// `dim V mod 2`.
    pub fn kappa(self) -> usize {
        match self {
            GroupKind::SoOdd => 1,
            _ => 0,
        }
    }

    pub fn has_quadratic_form(self) -> bool {
        self != GroupKind::Sp
    }

    pub fn dim(self, n: usize) -> usize {
        2 * n + self.kappa()
    }

    /// Whether the Weyl group is of type D (`W'_n`) rather than `W_n`.
    pub fn is_type_d(self) -> bool {
        self == GroupKind::SoEven
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Sp => "sp",
            GroupKind::SoOdd => "so-odd",
            GroupKind::SoEven => "so-even",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "sp" | "c" => Ok(GroupKind::Sp),
            "so-odd" | "b" => Ok(GroupKind::SoOdd),
            "so-even" | "d" => Ok(GroupKind::SoEven),
            other => Err(Error::Parse(format!("unknown group kind '{other}'"))),
        }
    }
}

/// A weakly decreasing sequence `p_1 >= ... >= p_sigma >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionSeq {
    parts: Vec<usize>,
}

impl PartitionSeq {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty sequence".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(PartitionSeq { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `p_t` with 1-based `t`.
    pub fn p(&self, t: usize) -> usize {
        self.parts[t - 1]
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn sigma(&self) -> usize {
        self.parts.len()
    }

    pub fn kappa_sigma(&self) -> usize {
        self.sigma() % 2
    }

    /// `k = p_1`.
    pub fn k(&self) -> usize {
        self.parts[0]
    }

    /// `\bar p_i = #{t : p_t >= i}` for `i = 1..=k`.
    pub fn conjugate_counts(&self) -> Vec<usize> {
        conjugate(&self.parts)
    }

    /// `sum_t (t-1) p_t`.
    pub fn weighted_sum(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn check_kind(&self, kind: GroupKind) -> Result<()> {
        if kind == GroupKind::SoEven && self.kappa_sigma() == 1 {
            return Err(Error::KindParity { kind: "so-even", sigma: self.sigma() });
        }
        Ok(())
    }
}

impl fmt::Display for PartitionSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for PartitionSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part '{x}' in '{s}'"))))
            .collect::<Result<Vec<_>>>()?;
        PartitionSeq::new(parts)
    }
}

/// Block sizes of a unipotent element, stored weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    blocks: Vec<usize>,
}

impl JordanType {
    pub fn new(mut blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidPartition("Jordan block of size 0".into()));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JordanType { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for JordanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let blocks = trimmed
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad block '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        JordanType::new(blocks)
    }
}

/// Conjugate of a weakly decreasing sequence (zeros allowed and ignored).
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let k = parts.iter().copied().max().unwrap_or(0);
    (1..=k).map(|i| parts.iter().filter(|&&p| p >= i).count()).collect()
}

/// `n(λ) = sum_i (i-1) λ_i`.
pub fn n_statistic(parts: &[usize]) -> usize {
    parts.iter().enumerate().map(|(i, p)| i * p).sum()
}

/// All hook lengths of the Young diagram of `parts`.
pub fn hook_lengths(parts: &[usize]) -> Vec<usize> {
    let conj = conjugate(parts);
    let mut out = Vec::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            out.push(row - j + conj[j] - i - 1);
        }
    }
    out
}

/// All partitions of `n`, lexicographically descending. `partitions(0)` is `[[]]`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `d_C` for the elliptic class attached to `p`.
pub fn d_min(p: &PartitionSeq, kind: GroupKind) -> Result<usize> {
    p.check_kind(kind)?;
    let base = 2 * p.weighted_sum() + p.n();
    Ok(match kind {
        GroupKind::SoEven => base - p.sigma(),
        _ => base,
    })
}

/// `sum_i \bar p_i^2 == 2 sum_t (t-1) p_t + n`.
pub fn check_x2y(p: &PartitionSeq) -> bool {
    let lhs: usize = p.conjugate_counts().iter().map(|b| b * b).sum();
    lhs == 2 * p.weighted_sum() + p.n()
}

/// Partitions indexing elliptic classes of the Weyl group of the given kind.
pub fn enumerate_elliptic(n: usize, kind: GroupKind) -> Vec<PartitionSeq> {
    partitions(n)
        .into_iter()
        .filter(|ps| kind != GroupKind::SoEven || ps.len() % 2 == 0)
        .map(|ps| PartitionSeq { parts: ps })
        .collect()
}

/// The sign function `ψ : [1, σ] -> {-1, 0, 1}` attached to `p`.
pub fn psi(p: &PartitionSeq, t: usize) -> Result<i64> {
    let sigma = p.sigma();
    if t == 0 || t > sigma {
        return Err(Error::IndexOutOfRange { index: t, len: sigma });
    }
    if t % 2 == 1 {
        if t == 1 || p.p(t - 1) > p.p(t) {
            return Ok(1);
        }
    } else if t == sigma || p.p(t) > p.p(t + 1) {
        return Ok(-1);
    }
    Ok(0)
}

/// Jordan type of the unipotent class attached to `p` in the given group.
pub fn jordan_type(p: &PartitionSeq, kind: GroupKind) -> Result<JordanType> {
    p.check_kind(kind)?;
    let mut blocks = Vec::with_capacity(p.sigma() + 1);
    for t in 1..=p.sigma() {
        let b = match kind {
            GroupKind::Sp => 2 * p.p(t) as i64,
            _ => 2 * p.p(t) as i64 + psi(p, t)?,
        };
        blocks.push(b as usize);
    }
    if kind == GroupKind::SoOdd && p.kappa_sigma() == 0 {
        blocks.push(1);
    }
    JordanType::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ps(v: &[usize]) -> PartitionSeq {
        PartitionSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(ps(&[3, 1]).conjugate_counts(), vec![2, 1, 1]);
        assert_eq!(ps(&[1, 1]).conjugate_counts(), vec![2]);
        assert_eq!(ps(&[2, 2, 1]).conjugate_counts(), vec![3, 2]);
    }

    #[test]
    fn minimal_lengths() {
        assert_eq!(d_min(&ps(&[2]), GroupKind::Sp).unwrap(), 2);
        assert_eq!(d_min(&ps(&[1, 1]), GroupKind::SoEven).unwrap(), 2);
        assert_eq!(d_min(&ps(&[1, 1]), GroupKind::Sp).unwrap(), 4);
        assert!(d_min(&ps(&[2]), GroupKind::SoEven).is_err());
    }

    #[test]
    fn elliptic_enumeration() {
        assert_eq!(enumerate_elliptic(2, GroupKind::Sp), vec![ps(&[2]), ps(&[1, 1])]);
        assert_eq!(enumerate_elliptic(2, GroupKind::SoEven), vec![ps(&[1, 1])]);
        assert_eq!(enumerate_elliptic(4, GroupKind::SoEven), vec![ps(&[3, 1]), ps(&[2, 2]), ps(&[1, 1, 1, 1])]);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(&ps(&[1, 1]), 1).unwrap(), 1);
        assert_eq!(psi(&ps(&[1, 1]), 2).unwrap(), -1);
        let p = ps(&[2, 2, 1]);
        assert_eq!(psi(&p, 1).unwrap(), 1);
        assert_eq!(psi(&p, 2).unwrap(), -1);
        assert_eq!(psi(&p, 3).unwrap(), 1);
        assert!(psi(&p, 4).is_err());
    }

    #[test]
    fn jordan_types() {
        assert_eq!(jordan_type(&ps(&[1, 1]), GroupKind::Sp).unwrap().blocks(), &[2, 2]);
        assert_eq!(jordan_type(&ps(&[1, 1]), GroupKind::SoOdd).unwrap().blocks(), &[3, 1, 1]);
        assert_eq!(jordan_type(&ps(&[2]), GroupKind::SoOdd).unwrap().blocks(), &[5]);
        assert_eq!(jordan_type(&ps(&[1, 1]), GroupKind::SoEven).unwrap().blocks(), &[3, 1]);
    }

    #[test]
    fn x2y_exhaustive() {
        for n in 1..=10 {
            for p in enumerate_elliptic(n, GroupKind::Sp) {
                assert!(check_x2y(&p), "{p}");
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("3,1".parse::<PartitionSeq>().unwrap(), ps(&[3, 1]));
        assert!("1,3".parse::<PartitionSeq>().is_err());
        assert_eq!("so-even".parse::<GroupKind>().unwrap(), GroupKind::SoEven);
    }

    #[test]
    fn hooks() {
        let mut h = hook_lengths(&[2, 1]);
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
    }

    fn arb_partition() -> impl Strategy<Value = PartitionSeq> {
        (1usize..=9).prop_flat_map(|n| {
            let all = partitions(n);
            (0..all.len()).prop_map(move |i| PartitionSeq::new(all[i].clone()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn conjugate_counts_sum(p in arb_partition()) {
            let c = p.conjugate_counts();
            prop_assert_eq!(c.iter().sum::<usize>(), p.n());
            prop_assert!(c.windows(2).all(|w| w[0] >= w[1]));
            prop_assert_eq!(c[0], p.sigma());
            prop_assert_eq!(c.len(), p.k());
        }

        #[test]
        fn jordan_totals(p in arb_partition()) {
            prop_assert_eq!(jordan_type(&p, GroupKind::Sp).unwrap().total(), 2 * p.n());
            prop_assert_eq!(jordan_type(&p, GroupKind::SoOdd).unwrap().total(), 2 * p.n() + 1);
            if p.kappa_sigma() == 0 {
                prop_assert_eq!(jordan_type(&p, GroupKind::SoEven).unwrap().total(), 2 * p.n());
            }
            prop_assert_eq!(d_min(&p, GroupKind::Sp).unwrap(), d_min(&p, GroupKind::SoOdd).unwrap());
        }
    }
}
