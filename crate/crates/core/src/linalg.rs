//! Dense exact linear algebra over any [`Field`].
//!
//! Matrices are `Vec<Vec<E>>` in row-major order. Subspaces are represented
//! by a list of spanning row vectors.

use crate::field::Field;

pub type Matrix<E> = Vec<Vec<E>>;

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn transpose<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = f.zero();
                    for k in 0..inner {
                        if !f.is_zero(&row[k]) && !f.is_zero(&b[k][j]) {
                            acc = f.add(&acc, &f.mul(&row[k], &b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|row| dot(f, row, v)).collect()
}

pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}

/// The bilinear form `x^T G y`.
pub fn bilinear<F: Field>(f: &F, gram: &Matrix<F::Elem>, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
    dot(f, x, &mat_vec(f, gram, y))
}

pub fn mat_pow<F: Field>(f: &F, a: &Matrix<F::Elem>, e: u32) -> Matrix<F::Elem> {
    let mut acc = identity(f, a.len());
    for _ in 0..e {
        acc = mat_mul(f, &acc, a);
    }
    acc
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let t = f.mul(&factor, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(f, &mut work).len()
}

/// A basis of `{x : M x = 0}`.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(f, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&work[r][fc]);
            }
            v
        })
        .collect()
}

/// Solve the square system `A x = b`, `None` if `A` is singular.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = a.len();
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

pub fn det<F: Field>(f: &F, a: &Matrix<F::Elem>) -> F::Elem {
    let n = a.len();
    let mut m = a.clone();
    let mut result = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
            return f.zero();
        };
        if pr != c {
            m.swap(pr, c);
            result = f.neg(&result);
        }
        result = f.mul(&result, &m[c][c]);
        let inv = f.inv(&m[c][c]).unwrap();
        for i in c + 1..n {
            if f.is_zero(&m[i][c]) {
                continue;
            }
            let factor = f.mul(&m[i][c], &inv);
            for j in c..n {
                let t = f.mul(&factor, &m[c][j]);
                m[i][j] = f.sub(&m[i][j], &t);
            }
        }
    }
    result
}

pub fn inverse<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = a.len();
    let mut aug: Matrix<F::Elem> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Dimension of the span of the given vectors.
pub fn span_dim<F: Field>(f: &F, vecs: &[Vec<F::Elem>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    rank(f, &vecs.to_vec())
}

/// `dim(U ∩ W) = dim U + dim W - dim(U + W)`.
pub fn intersection_dim<F: Field>(f: &F, u: &[Vec<F::Elem>], w: &[Vec<F::Elem>]) -> usize {
    let mut both = u.to_vec();
    both.extend_from_slice(w);
    span_dim(f, u) + span_dim(f, w) - span_dim(f, &both)
}

/// Whether every vector of `u` lies in the span of `w`.
pub fn contained_in<F: Field>(f: &F, u: &[Vec<F::Elem>], w: &[Vec<F::Elem>]) -> bool {
    intersection_dim(f, u, w) == span_dim(f, u)
}

/// A basis of the orthogonal complement `{x : (x, s) = 0 for s in span}`.
pub fn perp<F: Field>(f: &F, gram: &Matrix<F::Elem>, span: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let dim = gram.len();
    let rows: Matrix<F::Elem> = span.iter().map(|s| mat_vec(f, gram, s)).collect();
    if rows.is_empty() {
        return identity(f, dim);
    }
    nullspace(f, &rows, dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = qm(&[&[2, 1], &[1, 1]]);
        assert_eq!(det(&Rationals, &a), q(1));
        let inv = inverse(&Rationals, &a).unwrap();
        assert_eq!(mat_mul(&Rationals, &a, &inv), identity(&Rationals, 2));
        assert!(inverse(&Rationals, &qm(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn nullspace_basis() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&Rationals, &a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&Rationals, &a, v).iter().all(|x| x == &q(0)));
        }
    }

    #[test]
    fn intersections() {
        let e = |i: usize| -> Vec<BigRational> { (0..3).map(|j| q((i == j) as i64)).collect() };
        assert_eq!(intersection_dim(&Rationals, &[e(0), e(1)], &[e(1), e(2)]), 1);
        assert!(contained_in(&Rationals, &[e(0)], &[e(0), e(1)]));
    }

    #[test]
    fn solve_over_fp() {
        let f = PrimeField::new(7).unwrap();
        let a = vec![vec![1, 2], vec![3, 4]];
        let x = solve(&f, &a, &[5, 6]).unwrap();
        assert_eq!(mat_vec(&f, &a, &x), vec![5, 6]);
    }

    proptest! {
        #[test]
        fn det_is_multiplicative(a in proptest::collection::vec(-5i64..5, 9), b in proptest::collection::vec(-5i64..5, 9)) {
            let ma: Matrix<BigRational> = a.chunks(3).map(|r| r.iter().map(|&v| q(v)).collect()).collect();
            let mb: Matrix<BigRational> = b.chunks(3).map(|r| r.iter().map(|&v| q(v)).collect()).collect();
            let ab = mat_mul(&Rationals, &ma, &mb);
            prop_assert_eq!(det(&Rationals, &ab), det(&Rationals, &ma) * det(&Rationals, &mb));
        }

        #[test]
        fn rank_nullity(a in proptest::collection::vec(-3i64..3, 12)) {
            let m: Matrix<BigRational> = a.chunks(4).map(|r| r.iter().map(|&v| q(v)).collect()).collect();
            prop_assert_eq!(rank(&Rationals, &m) + nullspace(&Rationals, &m, 4).len(), 4);
        }
    }
}
