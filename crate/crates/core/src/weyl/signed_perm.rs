//! Elements of `W_n`: permutations of `[1, 2n]` commuting with `i -> 2n+1-i`.
//!
//! Point `n+1-j` carries the coordinate vector `e_j` and point `n+j` carries
//! `-e_j`, so the sign-change generator swaps the two middle points.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::QPoly;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    /// `images[i - 1] = w(i)`.
    images: Vec<usize>,
}

/// Signed cycle type: lengths of positive and of negative cycles, each
/// sorted weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

impl SignedCycleType {
    pub fn rank(&self) -> usize {
        self.positive.iter().sum::<usize>() + self.negative.iter().sum::<usize>()
    }

    /// Very even classes of `W'_n` split in two: no negative cycles and all
    /// positive cycles of even length.
    pub fn is_very_even(&self) -> bool {
        self.negative.is_empty() && !self.positive.is_empty() && self.positive.iter().all(|l| l % 2 == 0)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.positive.iter().map(|x| x.to_string()).collect();
        let n: Vec<String> = self.negative.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})", p.join(","), n.join(","))
    }
}

impl SignedPerm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m % 2 != 0 {
            return Err(Error::InvalidLabel(format!("signed permutation of odd size {m}")));
        }
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return Err(Error::InvalidLabel(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        for i in 1..=m {
            if images[m - i] != m + 1 - images[i - 1] {
                return Err(Error::InvalidLabel(format!("{images:?} does not commute with i -> {}-i", m + 1)));
            }
        }
        Ok(SignedPerm { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { images: (1..=2 * n).collect() }
    }

    /// The element `-1`: `i -> 2n+1-i`.
    pub fn minus_one(n: usize) -> Self {
        SignedPerm { images: (1..=2 * n).rev().collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len() / 2
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm { images: other.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        SignedPerm { images: inv }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `#{i <= n : w(i) > n}`.
    pub fn neg_count(&self) -> usize {
        let n = self.rank();
        self.images[..n].iter().filter(|&&x| x > n).count()
    }

    /// Membership in `W'_n` (even permutations of `[1, 2n]`).
    pub fn is_even(&self) -> bool {
        self.neg_count() % 2 == 0
    }

    /// Type-B length `(inv + neg) / 2`.
    pub fn length_b(&self) -> usize {
        (self.inversions() + self.neg_count()) / 2
    }

    /// Type-D length `(inv - neg) / 2`, defined on `W'_n` only.
    pub fn length_d(&self) -> Result<usize> {
        if !self.is_even() {
            return Err(Error::Precondition(format!("{self} is not in W'_n")));
        }
        Ok((self.inversions() - self.neg_count()) / 2)
    }

    pub fn length(&self, type_d: bool) -> Result<usize> {
        if type_d {
            self.length_d()
        } else {
            Ok(self.length_b())
        }
    }

    pub fn signed_cycle_type(&self) -> SignedCycleType {
        let m = self.images.len();
        let mut seen = vec![false; m + 1];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 1..=m {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x - 1];
            }
            if cycle.contains(&(m + 1 - start)) {
                negative.push(cycle.len() / 2);
            } else {
                // Mark the mirror cycle so the pair is counted once.
                positive.push(cycle.len());
                for &c in &cycle {
                    seen[m + 1 - c] = true;
                }
            }
        }
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType { positive, negative }
    }

    /// Signed permutation matrix on the coordinates `e_1..e_n`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for j in 1..=n {
            let (c, s) = point_to_coord(n, self.apply(n + 1 - j));
            m[c - 1][j - 1] = s;
        }
        m
    }

    /// Build from a signed permutation matrix (each column has one `±1`).
    pub fn from_matrix(m: &[Vec<i64>]) -> Result<Self> {
        let n = m.len();
        let mut images = vec![0; 2 * n];
        for j in 1..=n {
            let nz: Vec<usize> = (0..n).filter(|&r| m[r][j - 1] != 0).collect();
            if nz.len() != 1 || m[nz[0]][j - 1].abs() != 1 {
                return Err(Error::InvalidLabel("not a signed permutation matrix".into()));
            }
            let c = nz[0] + 1;
            let img = coord_to_point(n, c, m[nz[0]][j - 1]);
            images[n + 1 - j - 1] = img;
            images[2 * n - (n + 1 - j)] = 2 * n + 1 - img;
        }
        SignedPerm::new(images)
    }

    /// Characteristic polynomial on the reflection representation.
    pub fn char_poly(&self) -> QPoly {
        let ct = self.signed_cycle_type();
        let mut p = QPoly::one();
        for &l in &ct.positive {
            p = p * (QPoly::monomial(l as i64) - QPoly::one());
        }
        for &l in &ct.negative {
            p = p * (QPoly::monomial(l as i64) + QPoly::one());
        }
        p
    }

    /// `det(1 - q w)` on the reflection representation.
    pub fn det_one_minus_qw(&self) -> QPoly {
        det_one_minus_qw(&self.signed_cycle_type())
    }

    /// Determinant on the reflection representation, `(-1)^length`.
    pub fn det(&self) -> i64 {
        let ct = self.signed_cycle_type();
        let mut s = 1;
        for &l in &ct.positive {
            if l % 2 == 0 {
                s = -s;
            }
        }
        for &l in &ct.negative {
            if l % 2 == 1 {
                s = -s;
            }
        }
        s
    }
}

/// `det(1 - q w)` for an element of the given signed cycle type.
pub fn det_one_minus_qw(ct: &SignedCycleType) -> QPoly {
    let mut p = QPoly::one();
    for &l in &ct.positive {
        p = p * QPoly::one_minus(1, l);
    }
    for &l in &ct.negative {
        p = p * QPoly::one_minus(-1, l);
    }
    p
}

fn point_to_coord(n: usize, point: usize) -> (usize, i64) {
    if point <= n {
        (n + 1 - point, 1)
    } else {
        (point - n, -1)
    }
}

fn coord_to_point(n: usize, coord: usize, sign: i64) -> usize {
    if sign > 0 {
        n + 1 - coord
    } else {
        n + coord
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm({self})")
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// Simple reflections: `s_i = (i, i+1)(2n-i, 2n+1-i)` for `i in 1..n`, then
/// the sign change `(n, n+1)` for type B or `(n-1, n+1)(n, n+2)` for type D.
pub fn simple_reflections(n: usize, type_d: bool) -> Vec<SignedPerm> {
    let m = 2 * n;
    let swap = |pairs: &[(usize, usize)]| {
        let mut img: Vec<usize> = (1..=m).collect();
        for &(a, b) in pairs {
            img.swap(a - 1, b - 1);
        }
        SignedPerm { images: img }
    };
    let mut gens: Vec<SignedPerm> = (1..n).map(|i| swap(&[(i, i + 1), (m - i, m + 1 - i)])).collect();
    if type_d {
        if n >= 2 {
            gens.push(swap(&[(n - 1, n + 1), (n, n + 2)]));
        }
    } else if n >= 1 {
        gens.push(swap(&[(n, n + 1)]));
    }
    gens
}

/// All elements of `W_n` (or `W'_n`) with their Coxeter length, by
/// breadth-first search on the Cayley graph of the simple reflections.
pub fn enumerate_group(n: usize, type_d: bool) -> Vec<(SignedPerm, usize)> {
    let gens = simple_reflections(n, type_d);
    let id = SignedPerm::identity(n);
    let mut dist: HashMap<SignedPerm, usize> = HashMap::new();
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    let mut order = Vec::new();
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        order.push((w.clone(), d));
        for s in &gens {
            let ws = w.compose(s);
            if !dist.contains_key(&ws) {
                dist.insert(ws.clone(), d + 1);
                queue.push_back(ws);
            }
        }
    }
    order
}

/// The conjugacy class of `w` inside `W_n` (or `W'_n`).
pub fn conjugacy_class(w: &SignedPerm, type_d: bool) -> HashSet<SignedPerm> {
    let n = w.rank();
    let gens = simple_reflections(n, type_d);
    let mut seen = HashSet::from([w.clone()]);
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        for s in &gens {
            let y = s.compose(&x).compose(s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Minimum length over the conjugacy class of `w`, by exhaustive search.
pub fn class_min_length(w: &SignedPerm, type_d: bool) -> Result<usize> {
    conjugacy_class(w, type_d).iter().map(|x| x.length(type_d)).try_fold(usize::MAX, |acc, l| l.map(|l| acc.min(l)))
}

/// Eigenvalue-free check: the class is elliptic iff `Phi_1` does not divide
/// the characteristic polynomial.
pub fn is_elliptic(w: &SignedPerm) -> bool {
    !w.char_poly().eval(&BigInt::from(1)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;

    #[test]
    fn lengths_match_bfs() {
        for n in 1..=4 {
            for type_d in [false, true] {
                if type_d && n < 2 {
                    continue;
                }
                let all = enumerate_group(n, type_d);
                let expected =
                    if type_d { (1..=n).product::<usize>() << (n - 1) } else { (1..=n).product::<usize>() << n };
                assert_eq!(all.len(), expected);
                for (w, d) in all {
                    assert_eq!(w.length(type_d).unwrap(), d, "{w} type_d={type_d}");
                }
            }
        }
    }

    #[test]
    fn longest_elements() {
        assert_eq!(SignedPerm::minus_one(2).length_b(), 4);
        assert_eq!(SignedPerm::minus_one(2).length_d().unwrap(), 2);
        assert_eq!(SignedPerm::identity(3).length_b(), 0);
        let t = &simple_reflections(2, false)[1];
        assert!(t.length_d().is_err());
    }

    #[test]
    fn cycle_types_and_char_polys() {
        let m1 = SignedPerm::minus_one(2);
        let ct = m1.signed_cycle_type();
        assert_eq!(ct.negative, vec![1, 1]);
        assert!(ct.positive.is_empty());
        let f = m1.char_poly().cyclotomic_factorization().unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(2, 2)]);
        let id = SignedPerm::identity(2);
        assert_eq!(id.signed_cycle_type().positive, vec![1, 1]);
        assert_eq!(id.char_poly(), QPoly::q_pow_minus_one(1).pow(2));
        assert!(!is_elliptic(&id));
        assert!(is_elliptic(&m1));
    }

    #[test]
    fn matrix_round_trip() {
        for (w, _) in enumerate_group(3, false) {
            let m = w.matrix();
            assert_eq!(SignedPerm::from_matrix(&m).unwrap(), w);
            let det: i64 = {
                // 3x3 integer determinant
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            };
            assert_eq!(det, w.det());
            assert_eq!(det, if w.length_b() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn matrices_compose() {
        let all = enumerate_group(2, false);
        for (a, _) in &all {
            for (b, _) in &all {
                let ab = a.compose(b).matrix();
                let (ma, mb) = (a.matrix(), b.matrix());
                let prod: Vec<Vec<i64>> =
                    (0..2).map(|i| (0..2).map(|j| (0..2).map(|k| ma[i][k] * mb[k][j]).sum()).collect()).collect();
                assert_eq!(ab, prod);
            }
        }
    }

    #[test]
    fn rejects_non_commuting() {
        assert!(SignedPerm::new(vec![2, 1, 3, 4]).is_err());
        assert!(SignedPerm::new(vec![2, 1, 4, 3]).is_ok());
    }
}
