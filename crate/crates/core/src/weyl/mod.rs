//! Concrete models of `S_n`, `W_n`, `W'_n` and their products.

pub mod character;
pub mod minimal;
pub mod signed_perm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use crate::label::Family;
use crate::poly::QPoly;

pub use character::{character_table, induce_mult, CharacterTable, Embedding};
pub use minimal::w_min_rep;
pub use signed_perm::{SignedCycleType, SignedPerm};

/// One factor `S_n`, `W_n` or `W'_n` of a reflection group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub rank: usize,
}

impl Factor {
    pub fn s(rank: usize) -> Self {
        Factor { family: Family::S, rank }
    }
    pub fn b(rank: usize) -> Self {
        Factor { family: Family::B, rank }
    }
    pub fn d(rank: usize) -> Self {
        Factor { family: Family::D, rank }
    }

    pub fn order(&self) -> u64 {
        let fact: u64 = (1..=self.rank as u64).product();
        match self.family {
            Family::S => fact,
            Family::B => fact << self.rank,
            Family::D => {
                if self.rank == 0 {
                    1
                } else {
                    fact << (self.rank - 1)
                }
            }
        }
    }

    /// Degrees of the basic invariants on the `rank`-dimensional space.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::S => (1..=n).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                if n >= 1 {
                    d.push(n);
                }
                d
            }
        }
    }

    /// Number of reflections.
    pub fn nu(&self) -> usize {
        self.degrees().iter().map(|d| d - 1).sum()
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A finite product of factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylGroupSpec {
    pub factors: Vec<Factor>,
}

impl WeylGroupSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        WeylGroupSpec { factors }
    }

    pub fn single(f: Factor) -> Self {
        WeylGroupSpec { factors: vec![f] }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order()).product()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().flat_map(|f| f.degrees()).collect()
    }

    /// `prod_j (1 - q^{d_j})`.
    pub fn degree_product(&self) -> QPoly {
        self.degrees().into_iter().map(|d| QPoly::one_minus(1, d)).product()
    }

    /// Poincaré polynomial `sum_w q^{l(w)} = prod_j [d_j]_q`.
    pub fn poincare(&self) -> QPoly {
        self.degrees().into_iter().map(QPoly::q_integer).product()
    }
}

impl fmt::Display for WeylGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join("x"))
    }
}

impl FromStr for WeylGroupSpec {
    type Err = Error;
    /// `B3`, `S2xB1`, `D2xD2`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['x', '*'])
            .map(|tok| {
                let tok = tok.trim();
                let mut chars = tok.chars();
                let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
                    Some('S') => Family::S,
                    Some('B') | Some('C') => Family::B,
                    Some('D') => Family::D,
                    _ => return Err(Error::Parse(format!("bad group factor '{tok}'"))),
                };
                let rank = chars.as_str().parse::<usize>().map_err(|_| Error::Parse(format!("bad rank in '{tok}'")))?;
                Ok(Factor { family, rank })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylGroupSpec { factors })
    }
}
