//! Root systems in simple-root coordinates, with the affine node.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::QPoly;

/// An irreducible Cartan type, Bourbaki numbering except that in `G2` the
/// first simple root is the long one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::G2 => 2,
            SimpleType::F4 => 4,
            SimpleType::E6 => 6,
            SimpleType::E7 => 7,
            SimpleType::E8 => 8,
        }
    }

    pub fn degrees(self) -> Vec<usize> {
        match self {
            SimpleType::A(n) => (2..=n + 1).collect(),
            SimpleType::B(n) | SimpleType::C(n) => (1..=n).map(|i| 2 * i).collect(),
            SimpleType::D(n) => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            SimpleType::G2 => vec![2, 6],
            SimpleType::F4 => vec![2, 6, 8, 12],
            SimpleType::E6 => vec![2, 5, 6, 8, 9, 12],
            SimpleType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            SimpleType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, SimpleType::G2 | SimpleType::F4 | SimpleType::E6 | SimpleType::E7 | SimpleType::E8)
    }

    /// Inner products of the simple roots, scaled to be integral.
    fn gram(self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut g = vec![vec![0i64; l]; l];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self {
            SimpleType::A(n) | SimpleType::D(n) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                let chain = if matches!(self, SimpleType::D(_)) { n.saturating_sub(1) } else { n };
                for i in 1..chain {
                    link(&mut g, i - 1, i, -1);
                }
                if matches!(self, SimpleType::D(_)) && n >= 3 {
                    link(&mut g, n - 3, n - 1, -1);
                }
            }
            SimpleType::B(n) | SimpleType::C(n) => {
                let (chain, last) = if matches!(self, SimpleType::B(_)) { (4, 2) } else { (2, 4) };
                for i in 0..n {
                    g[i][i] = if i + 1 == n { last } else { chain };
                }
                let off = if matches!(self, SimpleType::B(_)) { -2 } else { -1 };
                for i in 1..n {
                    link(&mut g, i - 1, i, if i + 1 == n { -2 } else { off });
                }
            }
            SimpleType::G2 => {
                g[0][0] = 6;
                g[1][1] = 2;
                link(&mut g, 0, 1, -3);
            }
            SimpleType::F4 => {
                for (i, v) in [4, 4, 2, 2].into_iter().enumerate() {
                    g[i][i] = v;
                }
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            SimpleType::E6 | SimpleType::E7 | SimpleType::E8 => {
                for i in 0..l {
                    g[i][i] = 2;
                }
                // 1-3-4-5-..., with 2 attached to 4
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 3..l {
                    link(&mut g, i - 1, i, -1);
                }
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::G2 => f.write_str("G2"),
            SimpleType::F4 => f.write_str("F4"),
            SimpleType::E6 => f.write_str("E6"),
            SimpleType::E7 => f.write_str("E7"),
            SimpleType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        let bad = || Error::UnsupportedGroup(s.clone());
        let (letter, rest) = s.split_at(s.chars().next().map(|c| c.len_utf8()).ok_or_else(bad)?);
        let n: usize = rest.parse().map_err(|_| bad())?;
        let t = match (letter, n) {
            ("A", n) if n >= 1 => SimpleType::A(n),
            ("B", n) if n >= 2 => SimpleType::B(n),
            ("C", n) if n >= 2 => SimpleType::C(n),
            ("D", n) if n >= 3 => SimpleType::D(n),
            ("G", 2) => SimpleType::G2,
            ("F", 4) => SimpleType::F4,
            ("E", 6) => SimpleType::E6,
            ("E", 7) => SimpleType::E7,
            ("E", 8) => SimpleType::E8,
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

/// Integer vector in simple-root coordinates.
pub type RootVec = Vec<i64>;

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemData {
    pub name: String,
    pub components: Vec<SimpleType>,
    pub rank: usize,
    /// Scaled inner products of the simple roots.
    pub gram: Vec<Vec<i64>>,
    /// All roots, positive ones first.
    pub roots: Vec<RootVec>,
    pub simple: Vec<RootVec>,
    /// Highest root, for irreducible systems.
    pub highest: Option<RootVec>,
    pub degrees: Vec<usize>,
    pub nu: usize,
    pub poincare: QPoly,
}

impl RootSystemData {
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi != 0 {
                for (j, yj) in y.iter().enumerate() {
                    s += xi * self.gram[i][j] * yj;
                }
            }
        }
        s
    }

    /// `s_a(x) = x - <x, a^v> a`.
    pub fn reflect(&self, a: &[i64], x: &[i64]) -> RootVec {
        let c = 2 * self.pairing(x, a) / self.pairing(a, a);
        x.iter().zip(a).map(|(xi, ai)| xi - c * ai).collect()
    }

    /// Matrix of `s_a` acting on simple-root coordinates (columns are images).
    pub fn reflection_matrix(&self, a: &[i64]) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut m = vec![vec![0; l]; l];
        for j in 0..l {
            let mut e = vec![0; l];
            e[j] = 1;
            for (i, v) in self.reflect(a, &e).into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        m
    }

    /// The affine node set: `α_0 = -(highest root)` at index 0, then the
    /// simple roots.
    pub fn affine_nodes(&self) -> Result<Vec<RootVec>> {
        let h = self
            .highest
            .as_ref()
            .ok_or_else(|| Error::UnsupportedGroup(format!("{} is not irreducible", self.name)))?;
        let mut out = vec![h.iter().map(|x| -x).collect()];
        out.extend(self.simple.iter().cloned());
        Ok(out)
    }

    pub fn weyl_order(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    pub fn single_type(&self) -> Option<SimpleType> {
        (self.components.len() == 1).then(|| self.components[0])
    }
}

/// Closure of `seeds` under the reflections in `seeds`.
pub(crate) fn generated_roots(rd: &RootSystemData, seeds: &[RootVec]) -> Vec<RootVec> {
    let mut seen: BTreeSet<RootVec> = seeds.iter().cloned().collect();
    let mut frontier: Vec<RootVec> = seeds.to_vec();
    while let Some(x) = frontier.pop() {
        for a in seeds {
            let y = rd.reflect(a, &x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0)
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Root data for `A_n, B_n, C_n, D_n, G2, F4, E6, E7, E8`, or a product
/// written `A1xA1`.
pub fn root_data(name: &str) -> Result<RootSystemData> {
    let components = name.split(['x', 'X', '×']).map(SimpleType::from_str).collect::<Result<Vec<_>>>()?;
    let rank: usize = components.iter().map(|t| t.rank()).sum();
    let mut gram = vec![vec![0i64; rank]; rank];
    let mut off = 0;
    let mut degrees = Vec::new();
    for t in &components {
        let g = t.gram();
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                gram[off + i][off + j] = *v;
            }
        }
        off += t.rank();
        degrees.extend(t.degrees());
    }
    degrees.sort_unstable();
    let simple: Vec<RootVec> = (0..rank)
        .map(|i| {
            let mut e = vec![0; rank];
            e[i] = 1;
            e
        })
        .collect();
    let mut rd = RootSystemData {
        name: components.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x"),
        components: components.clone(),
        rank,
        gram,
        roots: Vec::new(),
        simple: simple.clone(),
        highest: None,
        degrees,
        nu: 0,
        poincare: QPoly::one(),
    };
    let all = generated_roots(&rd, &simple);
    let (mut pos, neg): (Vec<RootVec>, Vec<RootVec>) = all.into_iter().partition(|r| is_positive(r));
    if neg.iter().any(|r| !is_positive(&r.iter().map(|x| -x).collect::<Vec<_>>())) {
        return Err(Error::Construction(format!("{name}: a root is neither positive nor negative")));
    }
    pos.sort_by_key(|r| (height(r), r.clone()));
    rd.nu = pos.len();
    if components.len() == 1 {
        rd.highest = pos.last().cloned();
    }
    let mut neg = neg;
    neg.sort_by_key(|r| (-height(r), r.clone()));
    rd.roots = pos.into_iter().chain(neg).collect();
    rd.poincare = rd.degrees.iter().map(|&d| QPoly::q_integer(d)).product();
    let exps: usize = rd.degrees.iter().map(|d| d - 1).sum();
    if exps != rd.nu || rd.roots.len() != 2 * rd.nu || rd.poincare.at_one() != rd.weyl_order().into() {
        return Err(Error::Construction(format!("{name}: degrees inconsistent with the root count")));
    }
    Ok(rd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        let cases = [
            ("A1", 1),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
        ];
        for (name, nu) in cases {
            let rd = root_data(name).unwrap();
            assert_eq!(rd.nu, nu, "{name}");
        }
        let a1 = root_data("A1").unwrap();
        assert_eq!(a1.poincare, QPoly::from_i64s(0, &[1, 1]));
        assert_eq!(root_data("G2").unwrap().weyl_order(), 12);
        assert!(root_data("H3").is_err());
        assert!(root_data("A1xA1").unwrap().affine_nodes().is_err());
    }

    #[test]
    fn highest_roots() {
        assert_eq!(root_data("G2").unwrap().highest.unwrap(), vec![2, 3]);
        assert_eq!(root_data("F4").unwrap().highest.unwrap(), vec![2, 3, 4, 2]);
        assert_eq!(root_data("E8").unwrap().highest.unwrap(), vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(root_data("B3").unwrap().highest.unwrap(), vec![1, 2, 2]);
        assert_eq!(root_data("C3").unwrap().highest.unwrap(), vec![2, 2, 1]);
    }
}
