//! Labels of irreducible representations of `S_n`, `W_n` and `W'_n`.
//!
//! Internally a label is a partition (type S) or a pair of partitions
//! `(alpha, beta)`. The bracket notation
//! `[(λ_1 < ... < λ_{m+1}), (μ_1 < ... < μ_m)]` is produced and parsed by
//! [`IrrLabel::symbol`] and [`IrrLabel::from_symbol`]: `λ_i = a_i + (i-1)` where
//! `a_1 <= a_2 <= ...` is `alpha` padded with zeros, likewise for `μ`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Symmetric group `S_n` acting on `C^n` by permutations.
    S,
    /// `W_n`, type B/C.
    B,
    /// `W'_n`, type D.
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::S => 'S',
            Family::B => 'B',
            Family::D => 'D',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrLabel {
    S(Vec<usize>),
    B {
        alpha: Vec<usize>,
        beta: Vec<usize>,
    },
    /// Unordered pair, stored with `(|alpha|, alpha) >= (|beta|, beta)`.
    D {
        alpha: Vec<usize>,
        beta: Vec<usize>,
    },
}

fn normalize_part(mut p: Vec<usize>) -> Vec<usize> {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

fn d_order(a: &[usize], b: &[usize]) -> Ordering {
    (size(a), a).cmp(&(size(b), b))
}

impl IrrLabel {
    pub fn s(parts: Vec<usize>) -> Self {
        IrrLabel::S(normalize_part(parts))
    }

    pub fn b(alpha: Vec<usize>, beta: Vec<usize>) -> Self {
        IrrLabel::B { alpha: normalize_part(alpha), beta: normalize_part(beta) }
    }

    pub fn d(alpha: Vec<usize>, beta: Vec<usize>) -> Self {
        let (a, b) = (normalize_part(alpha), normalize_part(beta));
        if d_order(&a, &b) == Ordering::Less {
            IrrLabel::D { alpha: b, beta: a }
        } else {
            IrrLabel::D { alpha: a, beta: b }
        }
    }

    pub fn family(&self) -> Family {
        match self {
            IrrLabel::S(_) => Family::S,
            IrrLabel::B { .. } => Family::B,
            IrrLabel::D { .. } => Family::D,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            IrrLabel::S(p) => size(p),
            IrrLabel::B { alpha, beta } | IrrLabel::D { alpha, beta } => size(alpha) + size(beta),
        }
    }

    /// A type-D label with `alpha == beta` names two representations.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, IrrLabel::D { alpha, beta } if alpha == beta && !alpha.is_empty())
    }

    pub fn trivial(family: Family, n: usize) -> Self {
        let top = if n == 0 { vec![] } else { vec![n] };
        match family {
            Family::S => IrrLabel::s(top),
            Family::B => IrrLabel::b(top, vec![]),
            Family::D => IrrLabel::d(top, vec![]),
        }
    }

    pub fn sign(family: Family, n: usize) -> Self {
        match family {
            Family::S => IrrLabel::s(vec![1; n]),
            Family::B => IrrLabel::b(vec![], vec![1; n]),
            Family::D => IrrLabel::d(vec![1; n], vec![]),
        }
    }

    /// Pairs of partitions (or a single partition in the first slot for S).
    pub fn parts(&self) -> (&[usize], &[usize]) {
        match self {
            IrrLabel::S(p) => (p, &[]),
            IrrLabel::B { alpha, beta } | IrrLabel::D { alpha, beta } => (alpha, beta),
        }
    }

    /// Bracket form with the smallest admissible `m`.
    pub fn symbol(&self) -> (Vec<usize>, Vec<usize>) {
        match self {
            IrrLabel::S(p) => (p.iter().rev().copied().collect(), vec![]),
            IrrLabel::B { alpha, beta } => {
                let m = (alpha.len().max(1) - 1).max(beta.len());
                (staircase(alpha, m + 1), staircase(beta, m))
            }
            IrrLabel::D { alpha, beta } => {
                let m = alpha.len().max(beta.len());
                (staircase(alpha, m), staircase(beta, m))
            }
        }
    }

    /// Parse the bracket form. Each list must be strictly increasing; for B
    /// the first list has one more entry than the second, for D both have
    /// equal length. Any admissible `m` is accepted.
    pub fn from_symbol(family: Family, lambda: &[usize], mu: &[usize]) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !strict(lambda) || !strict(mu) {
            return Err(Error::InvalidLabel(format!("{lambda:?}, {mu:?} not strictly increasing")));
        }
        let unstair = |v: &[usize]| -> Vec<usize> { v.iter().enumerate().map(|(i, x)| x - i).collect() };
        match family {
            Family::S => {
                if !mu.is_empty() {
                    return Err(Error::InvalidLabel("type S labels have one list".into()));
                }
                Ok(IrrLabel::s(lambda.to_vec()))
            }
            Family::B => {
                if lambda.len() != mu.len() + 1 {
                    return Err(Error::InvalidLabel(format!(
                        "type B symbol needs m+1 and m entries, got {} and {}",
                        lambda.len(),
                        mu.len()
                    )));
                }
                Ok(IrrLabel::b(unstair(lambda), unstair(mu)))
            }
            Family::D => {
                if lambda.len() != mu.len() {
                    return Err(Error::InvalidLabel(format!(
                        "type D symbol needs equal lengths, got {} and {}",
                        lambda.len(),
                        mu.len()
                    )));
                }
                Ok(IrrLabel::d(unstair(lambda), unstair(mu)))
            }
        }
    }

    /// Parse `[(0,2),(1)]`, `[(2),()]` or, for type S, `(2,1)`.
    pub fn parse(family: Family, s: &str) -> Result<Self> {
        let lists = parse_lists(s)?;
        match (family, lists.len()) {
            (Family::S, 1) => Ok(IrrLabel::s(lists[0].clone())),
            (Family::B | Family::D, 2) => IrrLabel::from_symbol(family, &lists[0], &lists[1]),
            _ => Err(Error::Parse(format!("cannot read '{s}' as a {family:?} label"))),
        }
    }

    /// The bracket form as JSON-friendly nested lists.
    pub fn symbol_lists(&self) -> Vec<Vec<usize>> {
        match self {
            IrrLabel::S(p) => vec![p.clone()],
            _ => {
                let (l, m) = self.symbol();
                vec![l, m]
            }
        }
    }
}

/// `a_i + (i-1)` for `a` = the partition sorted ascending, padded to `len`.
fn staircase(p: &[usize], len: usize) -> Vec<usize> {
    let mut a = vec![0; len - p.len()];
    a.extend(p.iter().rev());
    a.iter().enumerate().map(|(i, x)| x + i).collect()
}

fn parse_lists(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut cur: Option<String> = None;
    for ch in s.chars() {
        match ch {
            '(' => cur = Some(String::new()),
            ')' => {
                let body = cur.take().ok_or_else(|| Error::Parse(format!("unbalanced '{s}'")))?;
                let nums = body
                    .split([',', '<', ' '])
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry '{x}'"))))
                    .collect::<Result<Vec<_>>>()?;
                out.push(nums);
            }
            c => {
                if let Some(b) = cur.as_mut() {
                    b.push(c);
                }
            }
        }
    }
    Ok(out)
}

fn fmt_list(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::S(p) => write!(f, "{}", fmt_list(p)),
            _ => {
                let (l, m) = self.symbol();
                write!(f, "[{},{}]", fmt_list(&l), fmt_list(&m))
            }
        }
    }
}

/// Label of a representation of a product group: one label per factor.
pub type ProductLabel = Vec<IrrLabel>;

pub fn product_label_string(l: &[IrrLabel]) -> String {
    l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ⊠ ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_symbols() {
        for n in 1..6 {
            let (l, m) = IrrLabel::sign(Family::B, n).symbol();
            assert_eq!(l, (0..=n).collect::<Vec<_>>());
            assert_eq!(m, (1..=n).collect::<Vec<_>>());
            let (l, m) = IrrLabel::sign(Family::D, n).symbol();
            assert_eq!(l, (1..=n).collect::<Vec<_>>());
            assert_eq!(m, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn shift_equivalence() {
        let a = IrrLabel::from_symbol(Family::B, &[0, 2], &[1]).unwrap();
        let b = IrrLabel::from_symbol(Family::B, &[0, 1, 3], &[0, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, IrrLabel::b(vec![1], vec![1]));
        assert_eq!(a.to_string(), "[(0,2),(1)]");
    }

    #[test]
    fn d_labels_are_unordered() {
        let a = IrrLabel::from_symbol(Family::D, &[2], &[0]).unwrap();
        let b = IrrLabel::from_symbol(Family::D, &[0], &[2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[(2),(0)]");
        assert!(IrrLabel::d(vec![1], vec![1]).is_degenerate());
        assert!(!IrrLabel::d(vec![], vec![]).is_degenerate());
    }

    #[test]
    fn parsing() {
        let a = IrrLabel::parse(Family::B, "[(0,2),(1)]").unwrap();
        assert_eq!(a, IrrLabel::b(vec![1], vec![1]));
        let b = IrrLabel::parse(Family::B, "[(2),()]").unwrap();
        assert_eq!(b, IrrLabel::trivial(Family::B, 2));
        assert!(IrrLabel::parse(Family::B, "[(2,1),(1)]").is_err());
        assert!(IrrLabel::from_symbol(Family::B, &[2, 1], &[0]).is_err());
    }
}
