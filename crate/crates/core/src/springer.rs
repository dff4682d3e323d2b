//! Springer representations attached to unipotent classes of classical
//! groups via their Jordan types, and the cross-checks tying them to
//! j-induction of sign representations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::{Family, IrrLabel};
use crate::partition::{jordan_type, psi, GroupKind, JordanType, PartitionSeq};
use crate::representations::{is_dagger, j_closed_form, j_induce, j_tower, ClosedVariant};
use crate::weyl::{Embedding, Factor, WeylGroupSpec};

/// Intermediate sequences of the symbol procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolScratch {
    pub m: usize,
    /// Blocks in increasing order `z_1 <= ... <= z_M` (padded).
    pub z: Vec<usize>,
    /// `z'_i = z_i + (i - 1)`, strictly increasing.
    pub z_prime: Vec<usize>,
    pub evens: Vec<usize>,
    pub odds: Vec<usize>,
    /// Increasing `y_1 < y_2 < ...` with `evens = 2y`.
    pub y: Vec<usize>,
    /// Increasing `y'_1 < y'_2 < ...` with `odds = 2y' + 1`.
    pub y_prime: Vec<usize>,
}

impl SymbolScratch {
    /// `y_i - (i - 1)` and `y'_i - (i - 1)`.
    pub fn reduced(&self) -> (Vec<usize>, Vec<usize>) {
        let unstair = |v: &[usize]| v.iter().enumerate().map(|(i, x)| x - i).collect::<Vec<_>>();
        (unstair(&self.y_prime), unstair(&self.y))
    }
}

/// Rank of the Weyl group of the classical group in which `j` lives.
fn rank_of(j: &JordanType, kind: GroupKind) -> Result<usize> {
    let total = j.total();
    if total % 2 != kind.kappa() {
        return Err(Error::InvalidJordanType {
            kind: kind.name(),
            reason: format!("{:?} has total {total}", j.blocks()),
        });
    }
    // odd parts of symplectic types and even parts of orthogonal types come in pairs
    let restricted = if kind == GroupKind::Sp { 1 } else { 0 };
    let blocks = j.blocks();
    let mut i = 0;
    while i < blocks.len() {
        let mut e = i;
        while e < blocks.len() && blocks[e] == blocks[i] {
            e += 1;
        }
        if blocks[i] % 2 == restricted && (e - i) % 2 == 1 {
            return Err(Error::InvalidJordanType {
                kind: kind.name(),
                reason: format!("block {} has odd multiplicity {}", blocks[i], e - i),
            });
        }
        i = e;
    }
    Ok(total / 2)
}

pub fn symbol_scratch(j: &JordanType, kind: GroupKind) -> Result<SymbolScratch> {
    rank_of(j, kind)?;
    let mut z: Vec<usize> = j.blocks().iter().rev().copied().collect();
    if kind == GroupKind::Sp && z.len() % 2 == 1 {
        z.insert(0, 0);
    }
    let m = z.len();
    let z_prime: Vec<usize> = z.iter().enumerate().map(|(i, x)| x + i).collect();
    let (evens, odds): (Vec<usize>, Vec<usize>) = z_prime.iter().partition(|x| *x % 2 == 0);
    let (n_even, n_odd) = match kind {
        GroupKind::Sp => (m / 2, m / 2),
        _ => (m / 2, m.div_ceil(2)),
    };
    if evens.len() != n_even || odds.len() != n_odd {
        return Err(Error::InvalidJordanType {
            kind: kind.name(),
            reason: format!(
                "{} even and {} odd shifted entries, expected {n_even} and {n_odd}",
                evens.len(),
                odds.len()
            ),
        });
    }
    let y = evens.iter().map(|x| x / 2).collect();
    let y_prime = odds.iter().map(|x| (x - 1) / 2).collect();
    Ok(SymbolScratch { m, z, z_prime, evens, odds, y, y_prime })
}

/// Springer representation (trivial local system) of the unipotent class
/// with Jordan type `j` in the classical group of the given kind.
pub fn springer_label(j: &JordanType, kind: GroupKind) -> Result<IrrLabel> {
    let n = rank_of(j, kind)?;
    let s = symbol_scratch(j, kind)?;
    let (alpha, beta) = s.reduced();
    let label = match kind {
        GroupKind::SoEven => IrrLabel::d(alpha, beta),
        _ => IrrLabel::b(alpha, beta),
    };
    if label.rank() != n {
        return Err(Error::Verification(format!("label {label} has rank {} not {n}", label.rank())));
    }
    Ok(label)
}

/// The runtime form of the two facts about `ψ` used to regroup the
/// orthogonal multisets: `κ_t = 0, t < σ, ψ(t) = 0` forces `ψ(t+1) = 0` and
/// `p_{t+1} = p_t`; `κ_t = 1, ψ(t) = 0` forces `ψ(t-1) = 0` and `p_{t-1} = p_t`.
pub fn check_psi_facts(p: &PartitionSeq) -> Result<()> {
    let s = p.sigma();
    for t in 1..=s {
        if psi(p, t)? != 0 {
            continue;
        }
        let other = if t % 2 == 0 {
            if t == s {
                continue;
            }
            t + 1
        } else {
            t - 1
        };
        if psi(p, other)? != 0 || p.p(other) != p.p(t) {
            return Err(Error::Verification(format!("ψ regrouping fails for {p} at t = {t}")));
        }
    }
    Ok(())
}

/// The (y', y) sets written directly in terms of `p` and `ψ`, before any
/// regrouping, doubled to stay integral.
fn doubled_sets_from_psi(p: &PartitionSeq, kind: GroupKind) -> Result<(Vec<i64>, Vec<i64>)> {
    let s = p.sigma() as i64;
    let tau = s / 2;
    let mut yp = Vec::new();
    let mut y = Vec::new();
    for t in 1..=p.sigma() {
        let pt = p.p(t) as i64;
        let ti = t as i64;
        let kt = ti % 2;
        let ks = s % 2;
        match kind {
            GroupKind::Sp => {
                if kt == 1 {
                    yp.push(2 * pt + 2 * tau - ti - 1 + 2 * ks);
                } else {
                    y.push(2 * pt + 2 * tau - ti + 2 * ks);
                }
            }
            GroupKind::SoEven => {
                let ps = psi(p, t)?;
                if kt == ps.rem_euclid(2) {
                    y.push(2 * pt + 2 * tau + ps - ti);
                } else {
                    yp.push(2 * pt + 2 * tau + ps - ti - 1);
                }
            }
            GroupKind::SoOdd => {
                let ps = psi(p, t)?;
                if kt == ps.rem_euclid(2) {
                    yp.push(2 * pt + 2 * tau + ps - ti);
                } else {
                    y.push(2 * pt + 2 * tau + ps + 1 - ti);
                }
            }
        }
    }
    let pad = match kind {
        GroupKind::Sp => s % 2 == 1,
        GroupKind::SoOdd => s % 2 == 0,
        GroupKind::SoEven => false,
    };
    if pad {
        if kind == GroupKind::Sp {
            y.push(0);
        } else {
            yp.push(0);
        }
    }
    yp.sort_unstable();
    y.sort_unstable();
    Ok((yp, y))
}

/// Compares the procedure's `(y', y)` with the sets written in terms of `p`
/// and `ψ`, and the reduced multisets with the alternating-parts form.
#[derive(Clone, Debug, Serialize)]
pub struct ParityBookkeeping {
    pub p: String,
    pub kind: GroupKind,
    pub sets_match: bool,
    pub multisets_match: bool,
}

pub fn parity_bookkeeping(p: &PartitionSeq, kind: GroupKind) -> Result<ParityBookkeeping> {
    p.check_kind(kind)?;
    if kind != GroupKind::Sp {
        check_psi_facts(p)?;
    }
    let s = symbol_scratch(&jordan_type(p, kind)?, kind)?;
    let (yp2, y2) = doubled_sets_from_psi(p, kind)?;
    let dbl = |v: &[usize]| v.iter().map(|&x| 2 * x as i64).collect::<Vec<_>>();
    let sets_match = dbl(&s.y_prime) == yp2 && dbl(&s.y) == y2;

    let sigma = p.sigma();
    let odd_t: Vec<usize> = (1..=sigma).step_by(2).map(|t| p.p(t)).collect();
    let even_t: Vec<usize> = (2..=sigma).step_by(2).map(|t| p.p(t)).collect();
    let (mut ea, mut eb) = match kind {
        GroupKind::SoEven => {
            (even_t.iter().map(|x| x - 1).collect::<Vec<_>>(), odd_t.iter().map(|x| x + 1).collect::<Vec<_>>())
        }
        _ => (odd_t, even_t),
    };
    let (mut ra, mut rb) = s.reduced();
    for v in [&mut ea, &mut eb, &mut ra, &mut rb] {
        v.retain(|&x| x > 0);
        v.sort_unstable();
    }
    Ok(ParityBookkeeping { p: p.to_string(), kind, sets_match, multisets_match: ea == ra && eb == rb })
}

/// The printed closed form of the Springer representation.
pub fn rho_closed_form(p: &PartitionSeq, kind: GroupKind) -> Result<IrrLabel> {
    p.check_kind(kind)?;
    let s = p.sigma();
    let tau = s / 2;
    let pp = |t: usize| p.p(t);
    match (kind, p.kappa_sigma()) {
        (GroupKind::SoEven, _) => {
            let first: Vec<usize> = (0..tau).map(|i| pp(s - 2 * i) + i - 1).collect();
            let second: Vec<usize> = (0..tau).map(|i| pp(s - 1 - 2 * i) + i + 1).collect();
            IrrLabel::from_symbol(Family::D, &first, &second)
        }
        (_, 0) => {
            let mut first = vec![0];
            first.extend((1..=tau).map(|i| pp(s + 1 - 2 * i) + i));
            let second: Vec<usize> = (0..tau).map(|i| pp(s - 2 * i) + i).collect();
            IrrLabel::from_symbol(Family::B, &first, &second)
        }
        _ => {
            let first: Vec<usize> = (0..=tau).map(|i| pp(s - 2 * i) + i).collect();
            let second: Vec<usize> = (0..tau).map(|i| pp(s - 1 - 2 * i) + i).collect();
            IrrLabel::from_symbol(Family::B, &first, &second)
        }
    }
}

/// The tower whose sign representation j-induces to the label for `kind`.
pub fn variant_for(kind: GroupKind) -> ClosedVariant {
    match kind {
        GroupKind::Sp => ClosedVariant::G,
        GroupKind::SoOdd => ClosedVariant::H,
        GroupKind::SoEven => ClosedVariant::I,
    }
}

/// Three independent computations of the Springer representation of the
/// class attached to `p`.
#[derive(Clone, Debug, Serialize)]
pub struct SpringerComparison {
    pub p: String,
    pub kind: GroupKind,
    pub jordan_type: Vec<usize>,
    pub springer: String,
    pub closed_form: String,
    pub j_induced: String,
    pub tower_closed_form: String,
    pub pass: bool,
}

pub fn compare_springer_labels(p: &PartitionSeq, kind: GroupKind) -> Result<SpringerComparison> {
    p.check_kind(kind)?;
    let jt = jordan_type(p, kind)?;
    let a = springer_label(&jt, kind)?;
    let b = rho_closed_form(p, kind)?;
    let c = j_tower(p, variant_for(kind))?;
    let d = j_closed_form(p, variant_for(kind))?;
    Ok(SpringerComparison {
        p: p.to_string(),
        kind,
        jordan_type: jt.blocks().to_vec(),
        pass: a == b && b == c && c == d,
        springer: a.to_string(),
        closed_form: b.to_string(),
        j_induced: c.to_string(),
        tower_closed_form: d.to_string(),
    })
}

/// Symplectic and odd orthogonal classes attached to `p` have the same
/// Springer representation of `W_n`.
pub fn sp_so_odd_agree(p: &PartitionSeq) -> Result<bool> {
    let a = springer_label(&jordan_type(p, GroupKind::Sp)?, GroupKind::Sp)?;
    let b = springer_label(&jordan_type(p, GroupKind::SoOdd)?, GroupKind::SoOdd)?;
    Ok(a == b)
}

/// A factor of a Levi-type subgroup together with a unipotent class in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum UnipotentFactor {
    /// `GL_n`; Springer representation of `S_n` labelled by the Jordan type.
    Gl(JordanType),
    Classical(GroupKind, JordanType),
}

impl UnipotentFactor {
    pub fn weyl_factor(&self) -> Result<Factor> {
        Ok(match self {
            UnipotentFactor::Gl(j) => Factor::s(j.total()),
            UnipotentFactor::Classical(kind, j) => {
                let n = rank_of(j, *kind)?;
                if kind.is_type_d() {
                    Factor::d(n)
                } else {
                    Factor::b(n)
                }
            }
        })
    }

    pub fn springer(&self) -> Result<IrrLabel> {
        match self {
            UnipotentFactor::Gl(j) => Ok(IrrLabel::s(j.blocks().to_vec())),
            UnipotentFactor::Classical(kind, j) => springer_label(j, *kind),
        }
    }
}

/// `j_{W_K}^{W}(ρ_u)` for a product of unipotent classes in the factors of
/// `W_K`, embedded blockwise.
pub fn j_of_springer(factors: &[UnipotentFactor], ambient: &WeylGroupSpec) -> Result<Vec<IrrLabel>> {
    let sub = WeylGroupSpec::new(factors.iter().map(|f| f.weyl_factor()).collect::<Result<_>>()?);
    let label: Vec<IrrLabel> = factors.iter().map(|f| f.springer()).collect::<Result<_>>()?;
    if !is_dagger(&label, &sub)? {
        return Err(Error::NotDagger(crate::label::product_label_string(&label)));
    }
    let emb = Embedding::blockwise(sub, ambient.clone())?;
    j_induce(&emb, &label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_elliptic;

    fn ps(v: &[usize]) -> PartitionSeq {
        PartitionSeq::new(v.to_vec()).unwrap()
    }

    fn jt(v: &[usize]) -> JordanType {
        JordanType::new(v.to_vec()).unwrap()
    }

    #[test]
    fn springer_examples() {
        assert_eq!(springer_label(&jt(&[2, 2]), GroupKind::Sp).unwrap().to_string(), "[(0,2),(1)]");
        assert_eq!(springer_label(&jt(&[4]), GroupKind::Sp).unwrap().to_string(), "[(2),()]");
        assert_eq!(springer_label(&jt(&[3, 1, 1]), GroupKind::SoOdd).unwrap().to_string(), "[(0,2),(1)]");
        // regular and trivial classes
        assert_eq!(springer_label(&jt(&[7]), GroupKind::SoOdd).unwrap(), IrrLabel::trivial(Family::B, 3));
        assert_eq!(springer_label(&jt(&[1; 6]), GroupKind::Sp).unwrap(), IrrLabel::sign(Family::B, 3));
        assert_eq!(springer_label(&jt(&[1; 7]), GroupKind::SoOdd).unwrap(), IrrLabel::sign(Family::B, 3));
        assert_eq!(springer_label(&jt(&[1; 6]), GroupKind::SoEven).unwrap(), IrrLabel::sign(Family::D, 3));
        assert_eq!(springer_label(&jt(&[5, 1]), GroupKind::SoEven).unwrap(), IrrLabel::trivial(Family::D, 3));
        assert!(springer_label(&jt(&[3, 1]), GroupKind::Sp).is_err());
        assert!(springer_label(&jt(&[2, 1]), GroupKind::SoOdd).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(rho_closed_form(&ps(&[1, 1]), GroupKind::Sp).unwrap().to_string(), "[(0,2),(1)]");
        assert_eq!(rho_closed_form(&ps(&[2]), GroupKind::Sp).unwrap().to_string(), "[(2),()]");
        assert_eq!(rho_closed_form(&ps(&[1, 1]), GroupKind::SoEven).unwrap().to_string(), "[(2),(0)]");
        assert!(rho_closed_form(&ps(&[2]), GroupKind::SoEven).is_err());
    }

    #[test]
    fn bookkeeping_small() {
        for n in 1..=6 {
            for kind in GroupKind::ALL {
                for p in enumerate_elliptic(n, kind) {
                    let r = parity_bookkeeping(&p, kind).unwrap();
                    assert!(r.sets_match && r.multisets_match, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn theorem_examples() {
        let r = compare_springer_labels(&ps(&[1, 1]), GroupKind::Sp).unwrap();
        assert!(r.pass);
        assert_eq!(r.springer, "[(0,2),(1)]");
        assert!(compare_springer_labels(&ps(&[2, 1]), GroupKind::Sp).unwrap().pass);
        let r = compare_springer_labels(&ps(&[1, 1]), GroupKind::SoEven).unwrap();
        assert!(r.pass);
        assert_eq!(r.springer, "[(2),(0)]");
        assert!(sp_so_odd_agree(&ps(&[1, 1])).unwrap());
        assert!(sp_so_odd_agree(&ps(&[2])).unwrap());
    }

    #[test]
    fn j_of_springer_examples() {
        let w3 = WeylGroupSpec::single(Factor::b(3));
        let reg = [UnipotentFactor::Classical(GroupKind::Sp, jt(&[6]))];
        assert_eq!(j_of_springer(&reg, &w3).unwrap(), vec![IrrLabel::trivial(Family::B, 3)]);
        let sub = [UnipotentFactor::Classical(GroupKind::Sp, jt(&[2, 2]))];
        let got = j_of_springer(&sub, &w3).unwrap();
        let direct = j_induce(
            &Embedding::blockwise(WeylGroupSpec::single(Factor::b(2)), w3.clone()).unwrap(),
            &[IrrLabel::parse(Family::B, "[(0,2),(1)]").unwrap()],
        )
        .unwrap();
        assert_eq!(got, direct);
        // sign reps of symmetric groups are Springer reps of trivial classes
        let p = ps(&[2, 1, 1]);
        let gl: Vec<UnipotentFactor> =
            p.conjugate_counts().iter().rev().map(|&r| UnipotentFactor::Gl(jt(&vec![1; r]))).collect();
        let got = j_of_springer(&gl, &WeylGroupSpec::single(Factor::b(4))).unwrap();
        assert_eq!(got, vec![rho_closed_form(&p, GroupKind::Sp).unwrap()]);
    }
}
