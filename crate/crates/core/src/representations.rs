//! Fake degrees, b-invariants, j-induction and the closed-form labels it
//! produces for towers of reflection subgroups of `W_n` and `W'_n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::{product_label_string, Family, IrrLabel, ProductLabel};
use crate::partition::PartitionSeq;
use crate::poly::QPoly;
use crate::weyl::character::{factor_table, DEFAULT_RANK_LIMIT};
use crate::weyl::signed_perm::det_one_minus_qw;
use crate::weyl::{induce_mult, Embedding, Factor, WeylGroupSpec};

/// Graded multiplicity of a representation in the coinvariant algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FakeDegree {
    pub poly: QPoly,
    pub b: usize,
    pub leading_low_coeff: i64,
}

impl FakeDegree {
    fn from_poly(poly: QPoly) -> Result<Self> {
        let b = poly.low_degree().ok_or_else(|| Error::Verification("fake degree vanishes".into()))?;
        if b < 0 || !poly.has_nonnegative_coeffs() {
            return Err(Error::Verification(format!("fake degree {poly} is not a polynomial in N[q]")));
        }
        let c: i64 = poly.coeff(b).try_into().expect("coefficient fits i64");
        Ok(FakeDegree { poly, b: b as usize, leading_low_coeff: c })
    }

    pub fn is_dagger(&self) -> bool {
        self.leading_low_coeff == 1
    }
}

/// Fake degrees of every irreducible of one factor, in table order. For a
/// degenerate type-D label the entry is the fake degree of either of the two
/// representations it names (they agree, being swapped by an automorphism
/// preserving the reflection representation).
fn factor_fake_degrees(factor: Factor) -> Result<Arc<Vec<QPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<Factor, Arc<Vec<QPoly>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("fake degree cache").get(&factor) {
        return Ok(v.clone());
    }
    let table = factor_table(factor, DEFAULT_RANK_LIMIT)?;
    let numerator = WeylGroupSpec::single(factor).degree_product();
    let terms =
        table.classes.iter().map(|ct| numerator.div_exact(&det_one_minus_qw(ct))).collect::<Result<Vec<_>>>()?;
    let order = BigInt::from(factor.order());
    let mut out = Vec::with_capacity(table.irreps.len());
    for (e, row) in table.irreps.iter().zip(&table.values) {
        let mut acc = QPoly::zero();
        for ((term, &size), &chi) in terms.iter().zip(&table.sizes).zip(row) {
            if chi != 0 {
                acc = acc + term.scale(BigInt::from(size) * BigInt::from(chi));
            }
        }
        let divisor = if e.is_degenerate() { &order * 2 } else { order.clone() };
        out.push(acc.div_scalar_exact(&divisor)?);
    }
    let out = Arc::new(out);
    cache.lock().expect("fake degree cache").insert(factor, out.clone());
    Ok(out)
}

fn single_fake_poly(e: &IrrLabel, factor: Factor) -> Result<QPoly> {
    if e.family() != factor.family || e.rank() != factor.rank {
        return Err(Error::InvalidLabel(format!("{e} is not a label of {factor}")));
    }
    let table = factor_table(factor, DEFAULT_RANK_LIMIT)?;
    let i = table.irrep_of(e).ok_or_else(|| Error::InvalidLabel(format!("{e} is not a label of {factor}")))?;
    Ok(factor_fake_degrees(factor)?[i].clone())
}

/// Fake degree of an irreducible of a product group (product of factors).
pub fn fake_degree(e: &[IrrLabel], w: &WeylGroupSpec) -> Result<FakeDegree> {
    if e.len() != w.factors.len() {
        return Err(Error::InvalidLabel(format!("{} labels for {w}", e.len())));
    }
    if let Some(d) = e.iter().find(|x| x.is_degenerate()) {
        return Err(Error::DegenerateLabel(d.to_string()));
    }
    let mut p = QPoly::one();
    for (x, &f) in e.iter().zip(&w.factors) {
        p = p * single_fake_poly(x, f)?;
    }
    FakeDegree::from_poly(p)
}

/// Lowest degree of a constituent, also for degenerate type-D labels.
fn b_of_constituent(e: &[IrrLabel], w: &WeylGroupSpec) -> Result<(usize, bool)> {
    let mut p = QPoly::one();
    for (x, &f) in e.iter().zip(&w.factors) {
        p = p * single_fake_poly(x, f)?;
    }
    let fd = FakeDegree::from_poly(p)?;
    Ok((fd.b, fd.is_dagger()))
}

pub fn b_invariant(e: &[IrrLabel], w: &WeylGroupSpec) -> Result<usize> {
    Ok(fake_degree(e, w)?.b)
}

pub fn is_dagger(e: &[IrrLabel], w: &WeylGroupSpec) -> Result<bool> {
    Ok(fake_degree(e, w)?.is_dagger())
}

/// The unique constituent `E` of `Ind(E_sub)` with `b_E = b_{E_sub}`.
pub fn j_induce(emb: &Embedding, e_sub: &[IrrLabel]) -> Result<ProductLabel> {
    let fd = fake_degree(e_sub, &emb.sub)?;
    if !fd.is_dagger() {
        return Err(Error::NotDagger(product_label_string(e_sub)));
    }
    let mut matches = Vec::new();
    for (label, m) in induce_mult(emb, e_sub)? {
        if m == 0 {
            continue;
        }
        let (b, dagger) = b_of_constituent(&label, &emb.ambient)?;
        if b == fd.b {
            matches.push((label, dagger));
        }
    }
    if matches.len() != 1 {
        return Err(Error::JInductionNotUnique { count: matches.len(), b: fd.b });
    }
    let (label, dagger) = matches.pop().unwrap();
    if let Some(d) = label.iter().find(|x| x.is_degenerate()) {
        return Err(Error::DegenerateLabel(d.to_string()));
    }
    if !dagger {
        return Err(Error::NotDagger(product_label_string(&label)));
    }
    Ok(label)
}

/// j-induction into a single-factor ambient group.
pub fn j_induce_to(sub: &WeylGroupSpec, e_sub: &[IrrLabel], ambient: Factor) -> Result<IrrLabel> {
    let emb = Embedding::blockwise(sub.clone(), WeylGroupSpec::single(ambient))?;
    Ok(j_induce(&emb, e_sub)?.remove(0))
}

pub fn sign_label(w: &WeylGroupSpec) -> ProductLabel {
    w.factors.iter().map(|f| IrrLabel::sign(f.family, f.rank)).collect()
}

/// j-induction of the sign representation.
pub fn j_of_sign(sub: &WeylGroupSpec, ambient: Factor) -> Result<IrrLabel> {
    j_induce_to(sub, &sign_label(sub), ambient)
}

/// Which closed form of the tower of subgroups to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedVariant {
    /// `S_{\bar p_k} x ... x S_{\bar p_1}` inside `W_n`.
    G,
    /// `S_{\bar p_k} x ... x S_{\bar p_2} x W_a x W'_b` inside `W_n`.
    H,
    /// `S_{\bar p_k} x ... x S_{\bar p_2} x W'_{σ/2} x W'_{σ/2}` inside `W'_n`.
    I,
}

impl std::str::FromStr for ClosedVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "g" => Ok(ClosedVariant::G),
            "h" => Ok(ClosedVariant::H),
            "i" => Ok(ClosedVariant::I),
            _ => Err(Error::Parse(format!("unknown closed-form variant '{s}'"))),
        }
    }
}

/// `[(p_σ < p_{σ-2}+1 < ... ), (p_{σ-1} < p_{σ-3}+1 < ...)]` for odd σ, and
/// `[(0 < p_{σ-1}+1 < p_{σ-3}+2 < ...), (p_σ < p_{σ-2}+1 < ...)]` for even σ.
fn tower_label_b(p: &PartitionSeq) -> Result<IrrLabel> {
    let s = p.sigma();
    let tau = s / 2;
    let (lambda, mu): (Vec<usize>, Vec<usize>) = if s % 2 == 1 {
        ((0..=tau).map(|i| p.p(s - 2 * i) + i).collect(), (0..tau).map(|i| p.p(s - 1 - 2 * i) + i).collect())
    } else {
        let mut l = vec![0];
        l.extend((0..tau).map(|i| p.p(s - 1 - 2 * i) + i + 1));
        (l, (0..tau).map(|i| p.p(s - 2 * i) + i).collect())
    };
    IrrLabel::from_symbol(Family::B, &lambda, &mu)
}

/// `[(p_{σ-1}+1 < p_{σ-3}+2 < ... < p_1+τ), (p_σ-1 < p_{σ-2} < ... < p_2+τ-2)]`.
fn tower_label_d(p: &PartitionSeq) -> Result<IrrLabel> {
    let s = p.sigma();
    if s % 2 == 1 {
        return Err(Error::KindParity { kind: "so-even", sigma: s });
    }
    let tau = s / 2;
    let lambda: Vec<usize> = (0..tau).map(|i| p.p(s - 1 - 2 * i) + i + 1).collect();
    let mu: Vec<usize> = (0..tau).map(|i| p.p(s - 2 * i) + i - 1).collect();
    IrrLabel::from_symbol(Family::D, &lambda, &mu)
}

/// The closed-form value of j-induction of the sign along a tower.
pub fn j_closed_form(p: &PartitionSeq, variant: ClosedVariant) -> Result<IrrLabel> {
    match variant {
        ClosedVariant::G | ClosedVariant::H => tower_label_b(p),
        ClosedVariant::I => tower_label_d(p),
    }
}

/// The reflection subgroup whose sign representation the variant induces,
/// together with the ambient factor.
pub fn tower_subgroup(p: &PartitionSeq, variant: ClosedVariant) -> Result<(WeylGroupSpec, Factor)> {
    let pbar = p.conjugate_counts();
    let n = p.n();
    let mut factors: Vec<Factor> = pbar[1..].iter().rev().map(|&r| Factor::s(r)).collect();
    let sigma = pbar[0];
    let ambient = match variant {
        ClosedVariant::G => {
            factors.push(Factor::s(sigma));
            Factor::b(n)
        }
        ClosedVariant::H => {
            let a = sigma / 2;
            factors.push(Factor::b(a));
            factors.push(Factor::d(sigma - a));
            Factor::b(n)
        }
        ClosedVariant::I => {
            if sigma % 2 == 1 {
                return Err(Error::KindParity { kind: "so-even", sigma });
            }
            factors.push(Factor::d(sigma / 2));
            factors.push(Factor::d(sigma / 2));
            Factor::d(n)
        }
    };
    Ok((WeylGroupSpec::new(factors), ambient))
}

/// Definition-based j-induction of the sign along the variant's tower.
pub fn j_tower(p: &PartitionSeq, variant: ClosedVariant) -> Result<IrrLabel> {
    let (sub, ambient) = tower_subgroup(p, variant)?;
    j_of_sign(&sub, ambient)
}

/// Printed values of j-induction of the sign from `W_c x W'_c` / `S_n`
/// (`n = 2c`), `W_c x W'_{c+1}` / `S_n` (`n = 2c+1`), and `W'_c x W'_c`.
#[derive(Clone, Debug, Serialize)]
pub struct SmallTowerCheck {
    pub n: usize,
    pub subgroup: String,
    pub ambient: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

pub fn small_tower_checks(n: usize) -> Result<Vec<SmallTowerCheck>> {
    let c = n / 2;
    let mut out = Vec::new();
    let expected_b = if n % 2 == 0 {
        let mut l = vec![0];
        l.extend(2..=c + 1);
        IrrLabel::from_symbol(Family::B, &l, &(1..=c).collect::<Vec<_>>())?
    } else {
        IrrLabel::from_symbol(Family::B, &(1..=c + 1).collect::<Vec<_>>(), &(1..=c).collect::<Vec<_>>())?
    };
    let corner = WeylGroupSpec::new(vec![Factor::b(c), Factor::d(n - c)]);
    for sub in [corner, WeylGroupSpec::single(Factor::s(n))] {
        let got = j_of_sign(&sub, Factor::b(n))?;
        out.push(SmallTowerCheck {
            n,
            subgroup: sub.to_string(),
            ambient: Factor::b(n).to_string(),
            expected: expected_b.to_string(),
            computed: got.to_string(),
            pass: got == expected_b,
        });
    }
    if n % 2 == 0 && c >= 1 {
        let expected_d =
            IrrLabel::from_symbol(Family::D, &(2..=c + 1).collect::<Vec<_>>(), &(0..c).collect::<Vec<_>>())?;
        let sub = WeylGroupSpec::new(vec![Factor::d(c), Factor::d(c)]);
        let got = j_of_sign(&sub, Factor::d(n))?;
        out.push(SmallTowerCheck {
            n,
            subgroup: sub.to_string(),
            ambient: Factor::d(n).to_string(),
            expected: expected_d.to_string(),
            computed: got.to_string(),
            pass: got == expected_d,
        });
    }
    Ok(out)
}

/// `\tilde p`: subtract 1 from the `\bar p_k` largest parts.
pub fn reduce_corner(p: &PartitionSeq) -> Result<PartitionSeq> {
    let pbar = p.conjugate_counts();
    let top = *pbar.last().unwrap();
    let parts: Vec<usize> = p.parts().iter().enumerate().map(|(i, &x)| if i < top { x - 1 } else { x }).collect();
    PartitionSeq::new(parts)
}

/// One corner step: `j_{S_{\bar p_k} x W_{n - \bar p_k}}(sgn ⊠ closed(\tilde p))`
/// (type D for variant I), compared against `closed(p)`.
#[derive(Clone, Debug, Serialize)]
pub struct CornerStepCheck {
    pub p: String,
    pub variant: ClosedVariant,
    pub closed: String,
    pub stepped: String,
    pub pass: bool,
}

pub fn corner_step(p: &PartitionSeq, variant: ClosedVariant) -> Result<Option<CornerStepCheck>> {
    if p.k() <= 1 {
        return Ok(None);
    }
    let pbar = p.conjugate_counts();
    let top = *pbar.last().unwrap();
    let n = p.n();
    let pt = reduce_corner(p)?;
    let (rest, ambient) = match variant {
        ClosedVariant::I => (Factor::d(n - top), Factor::d(n)),
        _ => (Factor::b(n - top), Factor::b(n)),
    };
    let inner = j_closed_form(&pt, variant)?;
    let sub = WeylGroupSpec::new(vec![Factor::s(top), rest]);
    let stepped = j_induce_to(&sub, &[IrrLabel::sign(Family::S, top), inner], ambient)?;
    let closed = j_closed_form(p, variant)?;
    Ok(Some(CornerStepCheck {
        p: p.to_string(),
        variant,
        closed: closed.to_string(),
        stepped: stepped.to_string(),
        pass: closed == stepped,
    }))
}

/// Dimension of a representation: its fake degree at `q = 1`.
pub fn dimension(e: &[IrrLabel], w: &WeylGroupSpec) -> Result<BigInt> {
    let mut d = BigInt::one();
    for (x, &f) in e.iter().zip(&w.factors) {
        let p = single_fake_poly(x, f)?;
        d *= p.at_one() * if x.is_degenerate() { 2 } else { 1 };
    }
    if d.is_zero() {
        return Err(Error::Verification("zero-dimensional representation".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{hook_lengths, n_statistic, partitions, GroupKind};
    use crate::weyl::character::factor_table;

    fn spec(s: &str) -> WeylGroupSpec {
        s.parse().unwrap()
    }

    fn ps(v: &[usize]) -> PartitionSeq {
        PartitionSeq::new(v.to_vec()).unwrap()
    }

    /// Closed product formula for fake degrees of `W_n`.
    fn lusztig_b(alpha: &[usize], beta: &[usize]) -> QPoly {
        let n = alpha.iter().sum::<usize>() + beta.iter().sum::<usize>();
        let mut num: QPoly = (1..=n).map(|i| QPoly::q_pow_minus_one(2 * i)).product();
        num = num.shift((2 * n_statistic(alpha) + 2 * n_statistic(beta) + beta.iter().sum::<usize>()) as i64);
        let den: QPoly =
            hook_lengths(alpha).into_iter().chain(hook_lengths(beta)).map(|h| QPoly::q_pow_minus_one(2 * h)).product();
        num.div_exact(&den).unwrap()
    }

    fn symmetric_s(lambda: &[usize]) -> QPoly {
        let n: usize = lambda.iter().sum();
        let num: QPoly = (1..=n).map(QPoly::q_pow_minus_one).product();
        let den: QPoly = hook_lengths(lambda).into_iter().map(QPoly::q_pow_minus_one).product();
        num.shift(n_statistic(lambda) as i64).div_exact(&den).unwrap()
    }

    #[test]
    fn fake_degrees_match_product_formula() {
        for n in 0..=5 {
            let t = factor_table(Factor::b(n), 8).unwrap();
            for e in &t.irreps {
                let (a, b) = e.parts();
                let fd = fake_degree(&[e.clone()], &WeylGroupSpec::single(Factor::b(n))).unwrap();
                assert_eq!(fd.poly, lusztig_b(a, b), "{e}");
            }
            for lambda in partitions(n) {
                let fd = fake_degree(&[IrrLabel::s(lambda.clone())], &WeylGroupSpec::single(Factor::s(n))).unwrap();
                assert_eq!(fd.poly, symmetric_s(&lambda));
            }
        }
    }

    #[test]
    fn b_invariants() {
        assert_eq!(fake_degree(&[IrrLabel::trivial(Family::B, 3)], &spec("B3")).unwrap().poly, QPoly::one());
        for n in 1..=5 {
            let w = spec(&format!("B{n}"));
            assert_eq!(b_invariant(&sign_label(&w), &w).unwrap(), n * n);
            let s = spec(&format!("S{n}"));
            let fd = fake_degree(&sign_label(&s), &s).unwrap();
            assert_eq!(fd.b, n * (n - 1) / 2);
            assert!(fd.is_dagger());
        }
        let refl = [IrrLabel::b(vec![1], vec![1])];
        assert_eq!(b_invariant(&refl, &spec("B2")).unwrap(), 1);
        assert!(is_dagger(&[IrrLabel::b(vec![2], vec![1])], &spec("B3")).unwrap());
        assert!(is_dagger(&[IrrLabel::trivial(Family::B, 2)], &spec("B2")).unwrap());
    }

    #[test]
    fn d_fake_degrees_sum_to_coinvariant_dimension() {
        for n in 2..=5 {
            let f = Factor::d(n);
            let w = WeylGroupSpec::single(f);
            let t = factor_table(f, 8).unwrap();
            let mut total = BigInt::zero();
            for e in &t.irreps {
                let d = dimension(&[e.clone()], &w).unwrap();
                let copies: BigInt = if e.is_degenerate() { d.clone() / 2 } else { d.clone() };
                // each irreducible appears dim-many times in the regular representation
                let per = if e.is_degenerate() { 2 } else { 1 };
                total += &copies * &copies * per;
            }
            assert_eq!(total, BigInt::from(f.order()));
        }
        let degenerate = IrrLabel::d(vec![1], vec![1]);
        assert!(matches!(fake_degree(&[degenerate], &spec("D2")), Err(Error::DegenerateLabel(_))));
    }

    #[test]
    fn j_induction_examples() {
        let b2 = Factor::b(2);
        let e = j_of_sign(&spec("S2"), b2).unwrap();
        assert_eq!(e.to_string(), "[(0,2),(1)]");
        let e = j_of_sign(&spec("D1xD1"), Factor::d(2)).unwrap();
        assert_eq!(e.to_string(), "[(2),(0)]");
        // identity case
        let t = factor_table(b2, 8).unwrap();
        for x in &t.irreps {
            if is_dagger(&[x.clone()], &spec("B2")).unwrap() {
                assert_eq!(&j_induce_to(&spec("B2"), &[x.clone()], b2).unwrap(), x);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(j_closed_form(&ps(&[1, 1]), ClosedVariant::G).unwrap().to_string(), "[(0,2),(1)]");
        assert_eq!(j_closed_form(&ps(&[2, 1]), ClosedVariant::G).unwrap().to_string(), "[(0,3),(1)]");
        assert_eq!(j_closed_form(&ps(&[2, 1, 1]), ClosedVariant::G).unwrap().to_string(), "[(1,3),(1)]");
        assert_eq!(j_closed_form(&ps(&[1, 1]), ClosedVariant::I).unwrap().to_string(), "[(2),(0)]");
        assert!(j_closed_form(&ps(&[2]), ClosedVariant::I).is_err());
    }

    #[test]
    fn towers_agree_small() {
        for n in 1..=4 {
            for p in crate::partition::enumerate_elliptic(n, GroupKind::Sp) {
                assert_eq!(j_tower(&p, ClosedVariant::G).unwrap(), j_closed_form(&p, ClosedVariant::G).unwrap(), "{p}");
                assert_eq!(j_tower(&p, ClosedVariant::H).unwrap(), j_closed_form(&p, ClosedVariant::H).unwrap(), "{p}");
                if p.sigma() % 2 == 0 {
                    assert_eq!(
                        j_tower(&p, ClosedVariant::I).unwrap(),
                        j_closed_form(&p, ClosedVariant::I).unwrap(),
                        "{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn not_dagger_rejected() {
        let w = spec("B3");
        let t = factor_table(Factor::b(3), 8).unwrap();
        let bad = t.irreps.iter().find(|e| !is_dagger(&[(*e).clone()], &w).unwrap());
        if let Some(e) = bad {
            assert!(matches!(j_induce_to(&w, &[e.clone()], Factor::b(3)), Err(Error::NotDagger(_))));
        }
    }
}
