//! The semisimple isometry `g` and vectors `v_t` attached to a partition.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::partition::{GroupKind, PartitionSeq};

/// A labelled range of basis indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

/// `V` with its Gram matrix and the decomposition into the blocks on which
/// `g` acts by scalars.
#[derive(Clone, Debug)]
pub struct FormedSpace<F: Field> {
    pub field: F,
    pub kind: GroupKind,
    pub dim: usize,
    pub gram: Matrix<F::Elem>,
    pub blocks: Vec<Block>,
}

#[derive(Clone, Debug)]
pub struct ClassWitness<F: Field> {
    pub p: PartitionSeq,
    pub space: FormedSpace<F>,
    /// `λ_1..λ_k` for the symplectic kind, `λ_2..λ_k` otherwise.
    pub lambdas: Vec<F::Elem>,
    /// Per `t`: `c_{t,1..p_t}`, or `[c_{t,1}, c_{t,-1}, c_{t,λ_2}, ..., c_{t,λ_{p_t}}]`.
    pub c: Vec<Vec<F::Elem>>,
    pub g: Matrix<F::Elem>,
    pub v: Vec<Vec<F::Elem>>,
}

impl<F: Field> ClassWitness<F> {
    pub fn field(&self) -> &F {
        &self.space.field
    }

    pub fn kind(&self) -> GroupKind {
        self.space.kind
    }

    /// `g^j` for any integer `j`.
    pub fn g_pow(&self, j: i64) -> Matrix<F::Elem> {
        let f = self.field();
        if j >= 0 {
            linalg::mat_pow(f, &self.g, j as u32)
        } else {
            let inv = linalg::inverse(f, &self.g).expect("g is invertible");
            linalg::mat_pow(f, &inv, (-j) as u32)
        }
    }
}

fn eq<F: Field>(f: &F, a: &F::Elem, b: &F::Elem) -> bool {
    f.is_zero(&f.sub(a, b))
}

/// Pairwise distinct, and no product `λ_i λ_j` (including `i = j`) equal to 1.
pub fn check_lambdas<F: Field>(f: &F, lambdas: &[F::Elem]) -> Result<()> {
    let one = f.one();
    for (i, a) in lambdas.iter().enumerate() {
        if f.is_zero(a) {
            return Err(Error::Precondition("λ must be nonzero".into()));
        }
        for (j, b) in lambdas.iter().enumerate() {
            if i < j && eq(f, a, b) {
                return Err(Error::Precondition(format!("λ_{} = λ_{}", i + 1, j + 1)));
            }
            if i <= j && eq(f, &f.mul(a, b), &one) {
                return Err(Error::Precondition(format!("λ_{} λ_{} = 1", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Number of eigenvalue parameters the construction needs.
pub fn lambda_count(p: &PartitionSeq, kind: GroupKind) -> usize {
    match kind {
        GroupKind::Sp => p.k(),
        _ => p.k() - 1,
    }
}

fn solve_coefficients<F: Field>(f: &F, pt: usize, kind: GroupKind, lambdas: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let lp = |i: usize, j: i64| f.pow(&lambdas[i], j).expect("λ is nonzero");
    let (a, b): (Matrix<F::Elem>, Vec<F::Elem>) = match kind {
        GroupKind::Sp => {
            let a = (1..=pt as i64).map(|j| (0..pt).map(|i| f.sub(&lp(i, j), &lp(i, -j))).collect()).collect();
            let b = (1..=pt).map(|j| if j == pt { f.from_i64(-1) } else { f.zero() }).collect();
            (a, b)
        }
        _ => {
            // lambdas[0] is λ_2
            let a = (0..=pt as i64)
                .map(|j| {
                    let mut row = vec![f.one(), f.from_i64(if j % 2 == 0 { 1 } else { -1 })];
                    row.extend((0..pt - 1).map(|i| f.add(&lp(i, j), &lp(i, -j))));
                    row
                })
                .collect();
            let b = (0..=pt).map(|j| if j == pt { f.one() } else { f.zero() }).collect();
            (a, b)
        }
    };
    linalg::solve(f, &a, &b).ok_or_else(|| Error::Singular(format!("coefficient system for p_t = {pt}")))
}

/// Build `V`, `g` and the vectors `v_t` for the given eigenvalue parameters.
pub fn build_class_rep<F: Field>(
    p: &PartitionSeq,
    kind: GroupKind,
    lambdas: &[F::Elem],
    field: F,
) -> Result<ClassWitness<F>> {
    p.check_kind(kind)?;
    let f = field.clone();
    if lambdas.len() != lambda_count(p, kind) {
        return Err(Error::Precondition(format!(
            "{} needs {} eigenvalue parameters, got {}",
            kind,
            lambda_count(p, kind),
            lambdas.len()
        )));
    }
    check_lambdas(&f, lambdas)?;
    let sigma = p.sigma();
    let pbar = p.conjugate_counts();
    let c: Vec<Vec<F::Elem>> =
        p.parts().iter().map(|&pt| solve_coefficients(&f, pt, kind, lambdas)).collect::<Result<_>>()?;
    if let Some((t, _)) = c.iter().enumerate().find(|(_, row)| row.iter().any(|x| f.is_zero(x))) {
        return Err(Error::Precondition(format!("a coefficient for t = {} vanishes", t + 1)));
    }

    let dim = kind.dim(p.n());
    let mut gram = linalg::zeros(&f, dim, dim);
    let mut g = linalg::zeros(&f, dim, dim);
    let mut blocks = Vec::new();
    let mut v = vec![vec![f.zero(); dim]; sigma];
    let mut next = 0;

    let first_paired = if kind == GroupKind::Sp { 1 } else { 2 };
    if kind != GroupKind::Sp {
        let ks = p.kappa_sigma();
        let dims = [sigma + kind.kappa() - ks, sigma + ks];
        for (which, (&d, name)) in dims.iter().zip(["Z'", "Z''"]).enumerate() {
            let scalar = if which == 0 { f.one() } else { f.from_i64(-1) };
            for a in 0..d {
                let idx = next + a;
                g[idx][idx] = scalar.clone();
                if a < sigma {
                    gram[idx][idx] = c[a][which].clone();
                    v[a][idx] = f.one();
                } else {
                    gram[idx][idx] = f.one();
                }
            }
            blocks.push(Block { name: name.into(), start: next, len: d });
            next += d;
        }
    }
    for i in first_paired..=p.k() {
        let len = pbar[i - 1];
        let lambda = &lambdas[i - first_paired];
        let lambda_inv = f.inv(lambda).expect("λ is nonzero");
        let (vs, ws) = (next, next + len);
        for t in 0..len {
            let (a, b) = (vs + t, ws + t);
            gram[a][b] = f.one();
            gram[b][a] = if kind == GroupKind::Sp { f.from_i64(-1) } else { f.one() };
            g[a][a] = lambda.clone();
            g[b][b] = lambda_inv.clone();
            let coeff = match kind {
                GroupKind::Sp => c[t][i - 1].clone(),
                _ => c[t][i].clone(),
            };
            v[t][a] = f.one();
            v[t][b] = coeff;
        }
        blocks.push(Block { name: format!("V_{i}"), start: vs, len });
        blocks.push(Block { name: format!("V'_{i}"), start: ws, len });
        next += 2 * len;
    }
    debug_assert_eq!(next, dim);

    let w = ClassWitness {
        p: p.clone(),
        space: FormedSpace { field, kind, dim, gram, blocks },
        lambdas: lambdas.to_vec(),
        c,
        g,
        v,
    };
    if !preserves_form(&w) {
        return Err(Error::Construction("g does not preserve the form".into()));
    }
    if let Some((t, t2, j)) = verify_orthogonality(&w).failure {
        return Err(Error::Construction(format!("(g^{j} v_{t}, v_{t2}) has the wrong value")));
    }
    Ok(w)
}

pub fn preserves_form<F: Field>(w: &ClassWitness<F>) -> bool {
    let f = w.field();
    let gt = linalg::transpose(&w.g);
    let lhs = linalg::mat_mul(f, &linalg::mat_mul(f, &gt, &w.space.gram), &w.g);
    lhs.iter().zip(&w.space.gram).all(|(a, b)| a.iter().zip(b).all(|(x, y)| eq(f, x, y)))
}

/// Random eigenvalue parameters `num/den` with `|num|, den <= height`.
pub fn sample_lambdas<F: Field>(f: &F, count: usize, rng: &mut ChaCha8Rng, height: i64) -> Vec<F::Elem> {
    (0..count)
        .map(|_| loop {
            let num = rng.gen_range(-height..=height);
            let den = rng.gen_range(1..=height);
            if let Some(x) = f.div(&f.from_i64(num), &f.from_i64(den)) {
                if !f.is_zero(&x) {
                    break x;
                }
            }
        })
        .collect()
}

/// Rejection sampling of valid eigenvalue parameters, seeded.
pub fn random_witness<F: Field>(p: &PartitionSeq, kind: GroupKind, field: F, seed: u64) -> Result<ClassWitness<F>> {
    p.check_kind(kind)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = lambda_count(p, kind);
    let height = 3 + 2 * p.k() as i64;
    for _ in 0..200 {
        let lambdas = sample_lambdas(&field, count, &mut rng, height);
        match build_class_rep(p, kind, &lambdas, field.clone()) {
            Ok(w) => return Ok(w),
            Err(Error::Precondition(_)) | Err(Error::Singular(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::FieldTooSmall(format!("no valid eigenvalue parameters found in {}", field.name())))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub checked: usize,
    /// `(t, t', j)` of the first failing pairing, 1-based `t`.
    pub failure: Option<(usize, usize, i64)>,
}

impl OrthogonalityReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// `(g^j v_t, v_{t'}) = δ_{t,t'} δ_{j,-p_t}` for `j in [-p_t, p_t - 1]`.
pub fn verify_orthogonality<F: Field>(w: &ClassWitness<F>) -> OrthogonalityReport {
    let f = w.field();
    let mut checked = 0;
    for (t, &pt) in w.p.parts().iter().enumerate() {
        for j in -(pt as i64)..pt as i64 {
            let gj = w.g_pow(j);
            let x = linalg::mat_vec(f, &gj, &w.v[t]);
            for (t2, y) in w.v.iter().enumerate() {
                let val = linalg::bilinear(f, &w.space.gram, &x, y);
                let expected = if t == t2 && j == -(pt as i64) { f.one() } else { f.zero() };
                checked += 1;
                if !eq(f, &val, &expected) {
                    return OrthogonalityReport { checked, failure: Some((t + 1, t2 + 1, j)) };
                }
            }
        }
    }
    OrthogonalityReport { checked, failure: None }
}

/// `dim Z(g)` from the block structure, and as the dimension of the
/// commutant of `g` inside the Lie algebra of the isometry group.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub formula: usize,
    pub kernel: usize,
    pub d_min: usize,
    pub pass: bool,
}

pub fn centralizer_formula(p: &PartitionSeq, kind: GroupKind) -> usize {
    let sq: usize = p.conjugate_counts().iter().map(|b| b * b).sum();
    match kind {
        GroupKind::Sp => sq,
        _ => {
            let (s, k, ks) = (p.sigma(), kind.kappa(), p.kappa_sigma());
            let a = s + k - ks;
            let b = s + ks;
            let gl: usize = p.conjugate_counts()[1..].iter().map(|x| x * x).sum();
            a * (a - 1) / 2 + b * (b - 1) / 2 + gl
        }
    }
}

/// Dimension of `{X : X^T G + G X = 0, gX = Xg}`.
pub fn centralizer_kernel<F: Field>(w: &ClassWitness<F>) -> usize {
    let f = w.field();
    let d = w.space.dim;
    let gram = &w.space.gram;
    let idx = |r: usize, c: usize| r * d + c;
    let mut rows: Matrix<F::Elem> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            // (X^T G + G X)[a][b] = sum_r X[r][a] G[r][b] + sum_r G[a][r] X[r][b]
            let mut row = vec![f.zero(); d * d];
            for r in 0..d {
                row[idx(r, a)] = f.add(&row[idx(r, a)], &gram[r][b]);
                row[idx(r, b)] = f.add(&row[idx(r, b)], &gram[a][r]);
            }
            rows.push(row);
            // (gX - Xg)[a][b]
            let mut row = vec![f.zero(); d * d];
            for r in 0..d {
                row[idx(r, b)] = f.add(&row[idx(r, b)], &w.g[a][r]);
                row[idx(a, r)] = f.sub(&row[idx(a, r)], &w.g[r][b]);
            }
            rows.push(row);
        }
    }
    d * d - linalg::rank(f, &rows)
}

pub fn centralizer_dim<F: Field>(w: &ClassWitness<F>) -> Result<CentralizerReport> {
    let formula = centralizer_formula(&w.p, w.kind());
    let kernel = centralizer_kernel(w);
    let d_min = crate::partition::d_min(&w.p, w.kind())?;
    Ok(CentralizerReport { formula, kernel, d_min, pass: formula == kernel && kernel == d_min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn ps(v: &[usize]) -> PartitionSeq {
        PartitionSeq::new(v.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_one_symplectic() {
        let w = build_class_rep(&ps(&[1]), GroupKind::Sp, &[q(2, 1)], Rationals).unwrap();
        assert_eq!(w.g, vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(1, 2)]]);
        // (λ - λ^{-1}) c = -1
        assert_eq!(w.c[0][0], q(-2, 3));
        assert!(verify_orthogonality(&w).pass());
    }

    #[test]
    fn centralizers() {
        let w = build_class_rep(&ps(&[1, 1]), GroupKind::Sp, &[q(2, 1)], Rationals).unwrap();
        let r = centralizer_dim(&w).unwrap();
        assert_eq!((r.formula, r.kernel, r.d_min), (4, 4, 4));
        let w = build_class_rep(&ps(&[2]), GroupKind::Sp, &[q(2, 1), q(3, 1)], Rationals).unwrap();
        let r = centralizer_dim(&w).unwrap();
        assert_eq!((r.formula, r.kernel, r.d_min), (2, 2, 2));
        let w = build_class_rep(&ps(&[1, 1]), GroupKind::SoEven, &[], Rationals).unwrap();
        assert_eq!(w.space.blocks.iter().map(|b| b.len).collect::<Vec<_>>(), vec![2, 2]);
        let r = centralizer_dim(&w).unwrap();
        assert_eq!((r.formula, r.kernel, r.d_min), (2, 2, 2));
    }

    #[test]
    fn bad_lambdas() {
        let f = Rationals;
        assert!(check_lambdas(&f, &[q(1, 1)]).is_err());
        assert!(check_lambdas(&f, &[q(-1, 1)]).is_err());
        assert!(check_lambdas(&f, &[q(2, 1), q(1, 2)]).is_err());
        assert!(check_lambdas(&f, &[q(2, 1), q(2, 1)]).is_err());
        assert!(check_lambdas(&f, &[q(2, 1), q(3, 1)]).is_ok());
        assert!(build_class_rep(&ps(&[2]), GroupKind::Sp, &[q(2, 1)], f).is_err());
    }

    #[test]
    fn random_witnesses_all_kinds() {
        for n in 1..=3 {
            for kind in GroupKind::ALL {
                for p in crate::partition::enumerate_elliptic(n, kind) {
                    let w = random_witness(&p, kind, Rationals, 11).unwrap();
                    assert!(verify_orthogonality(&w).pass());
                    assert!(centralizer_dim(&w).unwrap().pass, "{p} {kind}");
                }
            }
        }
    }

    #[test]
    fn prime_field_witness() {
        let f = PrimeField::new(101).unwrap();
        let w = random_witness(&ps(&[2, 1]), GroupKind::SoOdd, f, 3).unwrap();
        assert!(verify_orthogonality(&w).pass());
        assert!(centralizer_dim(&w).unwrap().pass);
    }
}
