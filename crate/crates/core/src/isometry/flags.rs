//! The isotropic flags `V_*` and `V'_* = g V_*` spanned by `g^j v_t`, and
//! their relative position.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::partition::GroupKind;
use crate::weyl::SignedPerm;

use super::witness::ClassWitness;

/// Complete flag `V_0 ⊂ ... ⊂ V_dim`, each member given by a basis.
#[derive(Clone, Debug)]
pub struct Flag<E> {
    pub members: Vec<Vec<Vec<E>>>,
}

impl<E> Flag<E> {
    pub fn dim(&self) -> usize {
        self.members.len() - 1
    }
}

/// One of the displayed intersection dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct IntersectionCheck {
    /// Which of the four patterns.
    pub pattern: u8,
    pub r: usize,
    pub i: usize,
    /// Indices into `V'_*` and `V_*`.
    pub primed: usize,
    pub unprimed: usize,
    pub expected: usize,
    pub actual: usize,
}

#[derive(Clone, Debug)]
pub struct FlagPair<E> {
    pub v: Flag<E>,
    pub v_prime: Flag<E>,
    /// `table[i][j] = dim(V_i ∩ V'_j)`.
    pub table: Vec<Vec<usize>>,
    pub checks: Vec<IntersectionCheck>,
}

impl<E> FlagPair<E> {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.expected == c.actual)
    }
}

pub(crate) fn complete_flag<F: Field>(f: &F, gram: &Matrix<F::Elem>, vectors: &[Vec<F::Elem>]) -> Flag<F::Elem> {
    let n = vectors.len();
    let dim = gram.len();
    let mut members: Vec<Vec<Vec<F::Elem>>> = (0..=n).map(|h| vectors[..h].to_vec()).collect();
    for h in n + 1..=dim {
        members.push(linalg::perp(f, gram, &members[dim - h]));
    }
    Flag { members }
}

fn is_isotropic<F: Field>(f: &F, gram: &Matrix<F::Elem>, span: &[Vec<F::Elem>]) -> bool {
    span.iter().all(|x| span.iter().all(|y| f.is_zero(&linalg::bilinear(f, gram, x, y))))
}

/// Build `V_*`, `V'_*`, check isotropy, nesting and `gV_* = V'_*`, and
/// compare the four displayed intersection dimensions.
pub fn build_flags<F: Field>(w: &ClassWitness<F>) -> Result<FlagPair<F::Elem>> {
    let f = w.field();
    let gram = &w.space.gram;
    let dim = w.space.dim;
    let p = &w.p;
    let mut base = Vec::new();
    let mut shifted = Vec::new();
    for (t, &pt) in p.parts().iter().enumerate() {
        for j in 0..pt {
            base.push(linalg::mat_vec(f, &w.g_pow(j as i64), &w.v[t]));
            shifted.push(linalg::mat_vec(f, &w.g_pow(j as i64 + 1), &w.v[t]));
        }
    }
    let v = complete_flag(f, gram, &base);
    let v_prime = complete_flag(f, gram, &shifted);
    let n = p.n();
    for (name, flag) in [("V", &v), ("V'", &v_prime)] {
        for h in 0..=dim {
            if linalg::span_dim(f, &flag.members[h]) != h {
                return Err(Error::Construction(format!("dim {name}_{h} is not {h}")));
            }
            if h > 0 && !linalg::contained_in(f, &flag.members[h - 1], &flag.members[h]) {
                return Err(Error::Construction(format!("{name}_{} not inside {name}_{h}", h - 1)));
            }
            if h <= n && !is_isotropic(f, gram, &flag.members[h]) {
                return Err(Error::Construction(format!("{name}_{h} is not isotropic")));
            }
        }
    }
    for h in 0..=dim {
        let image: Vec<Vec<F::Elem>> = v.members[h].iter().map(|x| linalg::mat_vec(f, &w.g, x)).collect();
        if linalg::intersection_dim(f, &image, &v_prime.members[h]) != h {
            return Err(Error::Construction(format!("g V_{h} differs from V'_{h}")));
        }
    }
    let table: Vec<Vec<usize>> = (0..=dim)
        .map(|i| (0..=dim).map(|j| linalg::intersection_dim(f, &v.members[i], &v_prime.members[j])).collect())
        .collect();

    let mut checks = Vec::new();
    let mut prefix = 0;
    for (r0, &pr) in p.parts().iter().enumerate() {
        let r = r0 + 1;
        for i in 1..pr {
            let h = prefix + i;
            checks.push(IntersectionCheck {
                pattern: 1,
                r,
                i,
                primed: h,
                unprimed: h,
                expected: h - r,
                actual: table[h][h],
            });
            checks.push(IntersectionCheck {
                pattern: 2,
                r,
                i,
                primed: h,
                unprimed: h + 1,
                expected: h - r + 1,
                actual: table[h + 1][h],
            });
        }
        let pr_sum = prefix + pr;
        let a = dim - prefix - 1;
        checks.push(IntersectionCheck {
            pattern: 3,
            r,
            i: pr,
            primed: pr_sum,
            unprimed: a,
            expected: pr_sum - r,
            actual: table[a][pr_sum],
        });
        checks.push(IntersectionCheck {
            pattern: 4,
            r,
            i: pr,
            primed: pr_sum,
            unprimed: a + 1,
            expected: pr_sum - r + 1,
            actual: table[a + 1][pr_sum],
        });
        prefix = pr_sum;
    }
    Ok(FlagPair { v, v_prime, table, checks })
}

/// The permutation `π` of `[1, dim]` with `dim(V_i ∩ V'_j) = #{a <= i : π(a) <= j}`,
/// as an element of `W_n` (the middle point dropped for odd `dim`).
pub fn relative_position(table: &[Vec<usize>], kind: GroupKind) -> Result<SignedPerm> {
    let dim = table.len() - 1;
    let mut pi = vec![0usize; dim + 1];
    for i in 1..=dim {
        let j = (1..=dim)
            .find(|&j| table[i][j] == table[i - 1][j] + 1)
            .ok_or_else(|| Error::Construction(format!("no jump in row {i} of the intersection table")))?;
        pi[i] = j;
    }
    for i in 0..=dim {
        for j in 0..=dim {
            let count = (1..=i).filter(|&a| pi[a] <= j).count();
            if count != table[i][j] {
                return Err(Error::Construction("intersection table is not a permutation pattern".into()));
            }
        }
    }
    for i in 1..=dim {
        if pi[dim + 1 - i] != dim + 1 - pi[i] {
            return Err(Error::Construction("relative position does not commute with the mirror".into()));
        }
    }
    let odd = kind.kappa() == 1;
    let mid = dim / 2 + 1;
    let squash = |x: usize| if odd && x > mid { x - 1 } else { x };
    let images: Vec<usize> = (1..=dim).filter(|&i| !(odd && i == mid)).map(|i| squash(pi[i])).collect();
    SignedPerm::new(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::isometry::witness::random_witness;
    use crate::partition::{d_min, PartitionSeq};

    #[test]
    fn identity_position() {
        let dim = 5;
        let table: Vec<Vec<usize>> = (0..=dim).map(|i| (0..=dim).map(|j| i.min(j)).collect()).collect();
        assert_eq!(relative_position(&table, GroupKind::SoOdd).unwrap(), SignedPerm::identity(2));
    }

    #[test]
    fn witness_positions() {
        for n in 1..=3 {
            for kind in GroupKind::ALL {
                for p in crate::partition::enumerate_elliptic(n, kind) {
                    let w = random_witness(&p, kind, Rationals, 5).unwrap();
                    let fl = build_flags(&w).unwrap();
                    assert!(fl.pass(), "{p} {kind} {:?}", fl.checks);
                    let rp = relative_position(&fl.table, kind).unwrap();
                    assert_eq!(rp.length(kind.is_type_d()).unwrap(), d_min(&p, kind).unwrap(), "{p} {kind} {rp:?}");
                    assert_eq!(rp, crate::weyl::w_min_rep(&p, kind).unwrap());
                }
            }
        }
        let w = random_witness(&PartitionSeq::new(vec![1, 1]).unwrap(), GroupKind::Sp, Rationals, 1).unwrap();
        let rp = relative_position(&build_flags(&w).unwrap().table, GroupKind::Sp).unwrap();
        assert_eq!(rp, SignedPerm::minus_one(2));
    }
}
