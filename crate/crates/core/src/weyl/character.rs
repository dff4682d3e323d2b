//! Character tables of `S_n`, `W_n`, `W'_n` (Murnaghan–Nakayama) and
//! induction multiplicities along blockwise embeddings.
//!
//! Type-D tables use the `W_n`-classes contained in `W'_n`; a very even
//! class is kept as the union of its two `W'_n`-classes. Degenerate labels
//! `{α, α}` carry the restricted `W_n`-character, i.e. the sum of the two
//! irreducible characters they name.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Factor, Family, SignedCycleType, WeylGroupSpec};
use crate::error::{Error, Result};
use crate::label::{IrrLabel, ProductLabel};
use crate::partition::partitions;

pub const DEFAULT_RANK_LIMIT: usize = 8;

/// Character table of a single factor.
#[derive(Clone, Debug)]
pub struct FactorTable {
    pub factor: Factor,
    pub classes: Vec<SignedCycleType>,
    pub sizes: Vec<u64>,
    pub irreps: Vec<IrrLabel>,
    /// `values[irrep][class]`.
    pub values: Vec<Vec<i64>>,
    class_index: HashMap<SignedCycleType, usize>,
    irrep_index: HashMap<IrrLabel, usize>,
}

impl FactorTable {
    pub fn class_of(&self, ct: &SignedCycleType) -> Option<usize> {
        self.class_index.get(ct).copied()
    }

    pub fn irrep_of(&self, e: &IrrLabel) -> Option<usize> {
        self.irrep_index.get(e).copied()
    }

    pub fn value(&self, e: &IrrLabel, ct: &SignedCycleType) -> Result<i64> {
        let i =
            self.irrep_of(e).ok_or_else(|| Error::InvalidLabel(format!("{e} is not a label of {}", self.factor)))?;
        let c =
            self.class_of(ct).ok_or_else(|| Error::InvalidLabel(format!("{ct} is not a class of {}", self.factor)))?;
        Ok(self.values[i][c])
    }
}

/// Character table of a product group (outer tensor products).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub spec: WeylGroupSpec,
    pub classes: Vec<Vec<SignedCycleType>>,
    pub sizes: Vec<u64>,
    pub irreps: Vec<ProductLabel>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.spec.order()
    }

    /// Self inner product of a row: 1, or `2^k` with `k` degenerate factors.
    fn row_norm(label: &ProductLabel) -> i64 {
        label.iter().map(|e| if e.is_degenerate() { 2 } else { 1 }).product()
    }

    fn column_splits(class: &[SignedCycleType], spec: &WeylGroupSpec) -> bool {
        class.iter().zip(&spec.factors).any(|(c, f)| f.family == Family::D && c.is_very_even())
    }

    /// Exact row orthogonality over all classes and column orthogonality over
    /// classes that do not split in type D.
    pub fn check_orthogonality(&self) -> Result<()> {
        let order = BigInt::from(self.order());
        for (i, ri) in self.values.iter().enumerate() {
            for (j, rj) in self.values.iter().enumerate().skip(i) {
                let s: BigInt = ri
                    .iter()
                    .zip(rj)
                    .zip(&self.sizes)
                    .map(|((a, b), sz)| BigInt::from(*a) * BigInt::from(*b) * BigInt::from(*sz))
                    .sum();
                let expect =
                    if i == j { &order * BigInt::from(Self::row_norm(&self.irreps[i])) } else { BigInt::zero() };
                if s != expect {
                    return Err(Error::Verification(format!(
                        "row orthogonality fails for {:?} and {:?}",
                        self.irreps[i], self.irreps[j]
                    )));
                }
            }
        }
        let cols: Vec<usize> =
            (0..self.classes.len()).filter(|&c| !Self::column_splits(&self.classes[c], &self.spec)).collect();
        for &a in &cols {
            for &b in &cols {
                let mut s = BigRational::zero();
                for (k, row) in self.values.iter().enumerate() {
                    let w = BigRational::new(BigInt::one(), BigInt::from(Self::row_norm(&self.irreps[k])));
                    s += w * BigRational::from_integer(BigInt::from(row[a] * row[b]));
                }
                let expect = if a == b {
                    BigRational::new(order.clone(), BigInt::from(self.sizes[a]))
                } else {
                    BigRational::zero()
                };
                if s != expect {
                    return Err(Error::Verification(format!(
                        "column orthogonality fails for {:?} and {:?}",
                        self.classes[a], self.classes[b]
                    )));
                }
            }
        }
        if let Some(first) = self.values.first() {
            if first.iter().any(|&v| v != 1) {
                return Err(Error::Verification("first row is not the trivial character".into()));
            }
        }
        Ok(())
    }
}

/// Beta-set rim hook removal: all ways to remove an `r`-rim hook from `part`,
/// with the leg length of each hook.
pub fn rim_hooks(part: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = part.len();
    let beta: Vec<usize> = part.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &x) in beta.iter().enumerate() {
        if x < r || beta.contains(&(x - r)) {
            continue;
        }
        let y = x - r;
        let height = beta.iter().filter(|&&b| b > y && b < x).count();
        let mut nb = beta.clone();
        nb[idx] = y;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut np: Vec<usize> = nb.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect();
        np.retain(|&v| v > 0);
        out.push((np, height));
    }
    out
}

fn sign_of(h: usize) -> i64 {
    if h % 2 == 0 {
        1
    } else {
        -1
    }
}

type MnKey = (Vec<usize>, Vec<usize>, usize);

/// Murnaghan–Nakayama for `W_n` on the signed cycles `cycles` (length, sign).
fn mn_b(alpha: &[usize], beta: &[usize], cycles: &[(usize, i64)], memo: &mut HashMap<MnKey, i64>) -> i64 {
    if cycles.is_empty() {
        return i64::from(alpha.is_empty() && beta.is_empty());
    }
    let key = (alpha.to_vec(), beta.to_vec(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (r, eps) = cycles[0];
    let rest = &cycles[1..];
    let mut total = 0;
    for (na, h) in rim_hooks(alpha, r) {
        total += sign_of(h) * mn_b(&na, beta, rest, memo);
    }
    for (nb, h) in rim_hooks(beta, r) {
        total += eps * sign_of(h) * mn_b(alpha, &nb, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character of the `W_n`-irreducible `(alpha, beta)` at a signed cycle type.
pub fn b_character(alpha: &[usize], beta: &[usize], ct: &SignedCycleType) -> i64 {
    let mut cycles: Vec<(usize, i64)> = ct.positive.iter().map(|&l| (l, 1)).collect();
    cycles.extend(ct.negative.iter().map(|&l| (l, -1)));
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    mn_b(alpha, beta, &cycles, &mut HashMap::new())
}

/// Character of the `S_n`-irreducible `lambda` at cycle type `mu`.
pub fn s_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let cycles: Vec<(usize, i64)> = mu.iter().map(|&l| (l, 1)).collect();
    mn_b(lambda, &[], &cycles, &mut HashMap::new())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multiplicities(parts: &[usize]) -> HashMap<usize, usize> {
    let mut m = HashMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// Centralizer order of a signed cycle type in `W_n`.
fn centralizer_b(ct: &SignedCycleType) -> u64 {
    let mut z = 1u64;
    for parts in [&ct.positive, &ct.negative] {
        for (r, a) in multiplicities(parts) {
            z *= (2 * r as u64).pow(a as u32) * factorial(a);
        }
    }
    z
}

fn centralizer_s(mu: &[usize]) -> u64 {
    multiplicities(mu).into_iter().map(|(r, a)| (r as u64).pow(a as u32) * factorial(a)).product()
}

fn d_key(p: &[usize]) -> (usize, &[usize]) {
    (p.iter().sum(), p)
}

fn build_factor_table(factor: Factor) -> FactorTable {
    let n = factor.rank;
    let mut classes = Vec::new();
    let mut sizes = Vec::new();
    let mut irreps = Vec::new();
    match factor.family {
        Family::S => {
            for mu in partitions(n).into_iter().rev() {
                sizes.push(factor.order() / centralizer_s(&mu));
                classes.push(SignedCycleType { positive: mu, negative: vec![] });
            }
            irreps = partitions(n).into_iter().map(IrrLabel::s).collect();
        }
        Family::B | Family::D => {
            let bn = Factor::b(n).order();
            for a in (0..=n).rev() {
                for pos in partitions(a).into_iter().rev() {
                    for neg in partitions(n - a).into_iter().rev() {
                        if factor.family == Family::D && neg.len() % 2 == 1 {
                            continue;
                        }
                        let ct = SignedCycleType { positive: pos.clone(), negative: neg };
                        sizes.push(bn / centralizer_b(&ct));
                        classes.push(ct);
                    }
                }
            }
            for a in (0..=n).rev() {
                for alpha in partitions(a) {
                    for beta in partitions(n - a) {
                        if factor.family == Family::B {
                            irreps.push(IrrLabel::b(alpha.clone(), beta));
                        } else if d_key(&alpha) >= d_key(&beta) {
                            irreps.push(IrrLabel::d(alpha.clone(), beta));
                        }
                    }
                }
            }
        }
    }
    let values: Vec<Vec<i64>> = irreps
        .iter()
        .map(|e| {
            classes
                .iter()
                .map(|ct| match e {
                    IrrLabel::S(l) => s_character(l, &ct.positive),
                    IrrLabel::B { alpha, beta } | IrrLabel::D { alpha, beta } => b_character(alpha, beta, ct),
                })
                .collect()
        })
        .collect();
    let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let irrep_index = irreps.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    FactorTable { factor, classes, sizes, irreps, values, class_index, irrep_index }
}

fn cache() -> &'static Mutex<HashMap<Factor, Arc<FactorTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<Factor, Arc<FactorTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized table of one factor.
pub fn factor_table(factor: Factor, limit: usize) -> Result<Arc<FactorTable>> {
    if factor.rank > limit {
        return Err(Error::RankLimit { rank: factor.rank, limit });
    }
    if let Some(t) = cache().lock().expect("table cache").get(&factor) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_factor_table(factor));
    cache().lock().expect("table cache").insert(factor, t.clone());
    Ok(t)
}

/// Full character table of a product group, with the default rank limit.
pub fn character_table(spec: &WeylGroupSpec) -> Result<CharacterTable> {
    character_table_with_limit(spec, DEFAULT_RANK_LIMIT)
}

pub fn character_table_with_limit(spec: &WeylGroupSpec, limit: usize) -> Result<CharacterTable> {
    let tables = spec.factors.iter().map(|&f| factor_table(f, limit)).collect::<Result<Vec<_>>>()?;
    let mut classes = vec![vec![]];
    let mut sizes = vec![1u64];
    let mut irreps: Vec<ProductLabel> = vec![vec![]];
    let mut values = vec![vec![1i64]];
    for t in &tables {
        let mut nc = Vec::new();
        let mut ns = Vec::new();
        for (c, s) in classes.iter().zip(&sizes) {
            for (fc, fs) in t.classes.iter().zip(&t.sizes) {
                let mut cc = c.clone();
                cc.push(fc.clone());
                nc.push(cc);
                ns.push(s * fs);
            }
        }
        let mut ni = Vec::new();
        let mut nv = Vec::new();
        for (e, row) in irreps.iter().zip(&values) {
            for (fe, frow) in t.irreps.iter().zip(&t.values) {
                let mut ee = e.clone();
                ee.push(fe.clone());
                ni.push(ee);
                nv.push(row.iter().flat_map(|a| frow.iter().map(move |b| a * b)).collect());
            }
        }
        classes = nc;
        sizes = ns;
        irreps = ni;
        values = nv;
    }
    Ok(CharacterTable { spec: spec.clone(), classes, sizes, irreps, values })
}

/// A blockwise embedding of a product of factors into a product of factors:
/// subgroup factor `i` sits inside ambient factor `assignment[i]`, on the
/// next free block of coordinates. Uncovered coordinates are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub sub: WeylGroupSpec,
    pub ambient: WeylGroupSpec,
    pub assignment: Vec<usize>,
}

impl Embedding {
    pub fn new(sub: WeylGroupSpec, ambient: WeylGroupSpec, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != sub.factors.len() {
            return Err(Error::InvalidEmbedding("assignment length differs from factor count".into()));
        }
        let mut used = vec![0usize; ambient.factors.len()];
        for (f, &a) in sub.factors.iter().zip(&assignment) {
            let Some(amb) = ambient.factors.get(a) else {
                return Err(Error::InvalidEmbedding(format!("no ambient factor {a}")));
            };
            let ok = match (amb.family, f.family) {
                (_, Family::S) => true,
                (Family::B, _) => true,
                (Family::D, Family::D) => true,
                _ => false,
            };
            if !ok {
                return Err(Error::InvalidEmbedding(format!("{f} is not a reflection subgroup of {amb}")));
            }
            used[a] += f.rank;
            if used[a] > amb.rank {
                return Err(Error::InvalidEmbedding(format!("factors exceed the rank of {amb}")));
            }
        }
        Ok(Embedding { sub, ambient, assignment })
    }

    /// Fill ambient factors in order, moving on when the next subgroup
    /// factor no longer fits.
    pub fn blockwise(sub: WeylGroupSpec, ambient: WeylGroupSpec) -> Result<Self> {
        let mut assignment = Vec::new();
        let mut cur = 0;
        let mut used = 0;
        for f in &sub.factors {
            while cur < ambient.factors.len() && used + f.rank > ambient.factors[cur].rank {
                cur += 1;
                used = 0;
            }
            if cur == ambient.factors.len() {
                return Err(Error::InvalidEmbedding(format!("{sub} does not fit in {ambient}")));
            }
            assignment.push(cur);
            used += f.rank;
        }
        Embedding::new(sub, ambient, assignment)
    }

    /// Image of a subgroup class in the ambient group.
    pub fn map_class(&self, class: &[SignedCycleType]) -> Vec<SignedCycleType> {
        let mut out: Vec<SignedCycleType> =
            self.ambient.factors.iter().map(|_| SignedCycleType { positive: vec![], negative: vec![] }).collect();
        for (ct, &a) in class.iter().zip(&self.assignment) {
            out[a].positive.extend(&ct.positive);
            out[a].negative.extend(&ct.negative);
        }
        for (o, f) in out.iter_mut().zip(&self.ambient.factors) {
            let covered = o.rank();
            o.positive.extend(std::iter::repeat(1).take(f.rank - covered));
            o.positive.sort_unstable_by(|a, b| b.cmp(a));
            o.negative.sort_unstable_by(|a, b| b.cmp(a));
        }
        out
    }
}

fn check_labels(spec: &WeylGroupSpec, labels: &[IrrLabel]) -> Result<()> {
    if labels.len() != spec.factors.len() {
        return Err(Error::InvalidLabel(format!("{} labels for {} factors", labels.len(), spec.factors.len())));
    }
    for (e, f) in labels.iter().zip(&spec.factors) {
        if e.family() != f.family || e.rank() != f.rank {
            return Err(Error::InvalidLabel(format!("{e} is not a label of {f}")));
        }
        if e.is_degenerate() {
            return Err(Error::DegenerateLabel(e.to_string()));
        }
    }
    Ok(())
}

/// `<Ind E_sub, E>` for every irreducible `E` of the ambient group, by
/// Frobenius reciprocity. Degenerate ambient labels get the combined
/// multiplicity of the two representations they name.
pub fn induce_mult(emb: &Embedding, e_sub: &[IrrLabel]) -> Result<Vec<(ProductLabel, i64)>> {
    check_labels(&emb.sub, e_sub)?;
    let sub_tables =
        emb.sub.factors.iter().map(|&f| factor_table(f, DEFAULT_RANK_LIMIT)).collect::<Result<Vec<_>>>()?;
    let amb_tables =
        emb.ambient.factors.iter().map(|&f| factor_table(f, DEFAULT_RANK_LIMIT)).collect::<Result<Vec<_>>>()?;

    // Weighted subgroup classes, pushed forward to ambient class indices.
    let mut weights: HashMap<Vec<usize>, BigInt> = HashMap::new();
    let mut idx = vec![0usize; sub_tables.len()];
    loop {
        let class: Vec<SignedCycleType> = idx.iter().zip(&sub_tables).map(|(&i, t)| t.classes[i].clone()).collect();
        let mut w = BigInt::one();
        for ((&i, t), e) in idx.iter().zip(&sub_tables).zip(e_sub) {
            let r = t.irrep_of(e).expect("checked label");
            w *= BigInt::from(t.sizes[i]) * BigInt::from(t.values[r][i]);
        }
        if !w.is_zero() {
            let image = emb.map_class(&class);
            let key: Vec<usize> =
                image.iter().zip(&amb_tables).map(|(c, t)| t.class_of(c).expect("image class exists")).collect();
            *weights.entry(key).or_insert_with(BigInt::zero) += w;
        }
        if !advance(&mut idx, sub_tables.iter().map(|t| t.classes.len())) {
            break;
        }
    }

    let order = BigInt::from(emb.sub.order());
    let mut out = Vec::new();
    let mut ridx = vec![0usize; amb_tables.len()];
    loop {
        let mut total = BigInt::zero();
        for (key, w) in &weights {
            let mut v = w.clone();
            for ((&r, &c), t) in ridx.iter().zip(key).zip(&amb_tables) {
                v *= t.values[r][c];
            }
            total += v;
        }
        if &total % &order != BigInt::zero() {
            return Err(Error::Verification("induced multiplicity is not an integer".into()));
        }
        let m: i64 = (total / &order).try_into().expect("multiplicity fits i64");
        let label: ProductLabel = ridx.iter().zip(&amb_tables).map(|(&r, t)| t.irreps[r].clone()).collect();
        out.push((label, m));
        if !advance(&mut ridx, amb_tables.iter().map(|t| t.irreps.len())) {
            break;
        }
    }
    Ok(out)
}

/// Odometer increment; returns false after the last tuple.
fn advance(idx: &mut [usize], bounds: impl Iterator<Item = usize>) -> bool {
    let bounds: Vec<usize> = bounds.collect();
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < bounds[k] {
            return true;
        }
        idx[k] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::signed_perm::enumerate_group;

    fn spec(s: &str) -> WeylGroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let s2 = character_table(&spec("S2")).unwrap();
        assert_eq!(s2.values, vec![vec![1, 1], vec![1, -1]]);
        let b1 = character_table(&spec("B1")).unwrap();
        assert_eq!(b1.values, vec![vec![1, 1], vec![1, -1]]);
        let b2 = character_table(&spec("B2")).unwrap();
        assert_eq!(b2.classes.len(), 5);
        assert_eq!(b2.irreps.len(), 5);
    }

    #[test]
    fn orthogonality_all_small() {
        for n in 0..=6 {
            for fam in ["S", "B", "D"] {
                let t = character_table(&spec(&format!("{fam}{n}"))).unwrap();
                t.check_orthogonality().unwrap_or_else(|e| panic!("{fam}{n}: {e}"));
                let sizes: u64 = t.sizes.iter().sum();
                assert_eq!(sizes, t.order(), "{fam}{n}");
            }
        }
        character_table(&spec("S2xB2xD3")).unwrap().check_orthogonality().unwrap();
    }

    #[test]
    fn rank_limit() {
        assert!(matches!(character_table_with_limit(&spec("B3"), 2), Err(Error::RankLimit { rank: 3, limit: 2 })));
    }

    /// Explicit matrices of the five irreducibles of `W_2` as an oracle.
    #[test]
    fn b2_against_explicit_matrices() {
        let t = factor_table(Factor::b(2), 8).unwrap();
        for (w, _) in enumerate_group(2, false) {
            let m = w.matrix();
            let ct = w.signed_cycle_type();
            let trace = m[0][0] + m[1][1];
            let det = w.det();
            // number of sign changes, as the character of ((1),(1)) ⊗ ...
            let signs = m.iter().flatten().filter(|&&x| x == -1).count() as i64;
            let eps = if signs % 2 == 0 { 1 } else { -1 };
            let is_perm_part_even = (m[0][0] != 0) as i64 * 2 - 1;
            assert_eq!(t.value(&IrrLabel::trivial(Family::B, 2), &ct).unwrap(), 1);
            assert_eq!(t.value(&IrrLabel::b(vec![1], vec![1]), &ct).unwrap(), trace);
            assert_eq!(t.value(&IrrLabel::sign(Family::B, 2), &ct).unwrap(), det);
            assert_eq!(t.value(&IrrLabel::b(vec![], vec![2]), &ct).unwrap(), eps);
            assert_eq!(t.value(&IrrLabel::b(vec![1, 1], vec![]), &ct).unwrap(), is_perm_part_even);
        }
    }

    #[test]
    fn regular_representation() {
        let emb = Embedding::blockwise(spec("S0"), spec("S2")).unwrap();
        let m = induce_mult(&emb, &[IrrLabel::s(vec![])]).unwrap();
        assert_eq!(m.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn induced_dimension() {
        let emb = Embedding::blockwise(spec("S2"), spec("B2")).unwrap();
        let m = induce_mult(&emb, &[IrrLabel::sign(Family::S, 2)]).unwrap();
        let t = factor_table(Factor::b(2), 8).unwrap();
        let id = t.class_of(&SignedCycleType { positive: vec![1, 1], negative: vec![] }).unwrap();
        let dim: i64 = m.iter().map(|(l, k)| k * t.values[t.irrep_of(&l[0]).unwrap()][id]).sum();
        assert_eq!(dim, 4);
    }

    #[test]
    fn reflection_restricts_to_trivial_plus_sign() {
        // <Ind_{S_2} E'', refl> = <E'', Res refl>
        let emb = Embedding::blockwise(spec("S2"), spec("B2")).unwrap();
        let refl = vec![IrrLabel::b(vec![1], vec![1])];
        for e in [IrrLabel::trivial(Family::S, 2), IrrLabel::sign(Family::S, 2)] {
            let m = induce_mult(&emb, &[e]).unwrap();
            assert_eq!(m.iter().find(|x| x.0 == refl).unwrap().1, 1);
        }
    }

    #[test]
    fn invalid_embeddings() {
        assert!(Embedding::blockwise(spec("B2"), spec("D2")).is_err());
        assert!(Embedding::blockwise(spec("S3"), spec("B2")).is_err());
        assert!(Embedding::new(spec("S1"), spec("B1"), vec![1]).is_err());
    }

    #[test]
    fn rim_hook_signs() {
        assert!(rim_hooks(&[3, 1], 3).is_empty());
        assert_eq!(rim_hooks(&[3, 1], 2), vec![(vec![1, 1], 0)]);
        assert_eq!(rim_hooks(&[2, 1], 3), vec![(vec![], 1)]);
        assert_eq!(s_character(&[2, 1], &[3]), -1);
        assert_eq!(s_character(&[2, 1], &[1, 1, 1]), 2);
    }
}
