//! Subsystems spanned by subsets of the affine node set, their Weyl groups
//! as matrix groups, and the class function `Π`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::label::{Family, IrrLabel};
use crate::linalg;
use crate::poly::QPoly;
use crate::weyl::character::{b_character, s_character};
use crate::weyl::{SignedCycleType, SignedPerm};

use super::roots::{generated_roots, RootSystemData, RootVec, SimpleType};

pub type IntMatrix = Vec<Vec<i64>>;

/// Largest `|W_K|` enumerated element by element.
pub const WEYL_ENUMERATION_LIMIT: u64 = 200_000;

#[derive(Clone, Debug, Serialize)]
pub struct SubsystemData {
    /// Indices into the affine node list (0 is `α_0`).
    pub k: Vec<usize>,
    pub generators: Vec<RootVec>,
    pub roots: Vec<RootVec>,
    /// Types of the connected components of the diagram of `K`.
    pub components: Vec<SimpleType>,
    pub degrees: Vec<usize>,
    pub nu_k: usize,
    /// Ambient rank.
    pub rank: usize,
    pub dim_gk: usize,
}

impl SubsystemData {
    pub fn weyl_order(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    pub fn poincare(&self) -> QPoly {
        self.degrees.iter().map(|&d| QPoly::q_integer(d)).product()
    }

    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "T".into();
        }
        self.components.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
    }
}

/// Identify an irreducible component from its size, root count and bonds.
fn classify(rd: &RootSystemData, nodes: &[RootVec]) -> Result<SimpleType> {
    let r = nodes.len();
    let n_roots = generated_roots(rd, nodes).len();
    let mut simply_laced = true;
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            let ab = rd.pairing(a, b);
            if ab == 0 {
                continue;
            }
            let prod = 4 * ab * ab / (rd.pairing(a, a) * rd.pairing(b, b));
            if prod == 3 {
                return Ok(SimpleType::G2);
            }
            if prod != 1 {
                simply_laced = false;
            }
        }
    }
    let t = match (simply_laced, r, n_roots) {
        (true, r, n) if n == r * (r + 1) => SimpleType::A(r),
        (true, r, n) if r >= 4 && n == 2 * r * (r - 1) => SimpleType::D(r),
        (true, 6, 72) => SimpleType::E6,
        (true, 7, 126) => SimpleType::E7,
        (true, 8, 240) => SimpleType::E8,
        (false, 4, 48) => SimpleType::F4,
        (false, r, n) if n == 2 * r * r => SimpleType::B(r),
        _ => return Err(Error::Construction(format!("unrecognized component: rank {r}, {n_roots} roots"))),
    };
    Ok(t)
}

/// Subsystem generated by the given roots, which must form a simple system
/// of what they generate (pairwise non-acute, linearly independent).
pub fn subsystem_from_roots(rd: &RootSystemData, k: Vec<usize>, generators: Vec<RootVec>) -> Result<SubsystemData> {
    for (i, a) in generators.iter().enumerate() {
        for b in &generators[i + 1..] {
            if rd.pairing(a, b) > 0 {
                return Err(Error::Precondition("generators with an acute angle".into()));
            }
        }
    }
    let rows: IntMatrix = generators.clone();
    let q: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    if !generators.is_empty() && linalg::rank(&Rationals, &q) != generators.len() {
        return Err(Error::Precondition("generators are linearly dependent".into()));
    }
    // connected components of the diagram
    let n = generators.len();
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![s];
        comp[s] = id;
        let mut members = Vec::new();
        while let Some(i) = stack.pop() {
            members.push(generators[i].clone());
            for j in 0..n {
                if comp[j] == usize::MAX && rd.pairing(&generators[i], &generators[j]) != 0 {
                    comp[j] = id;
                    stack.push(j);
                }
            }
        }
        components.push(classify(rd, &members)?);
    }
    components.sort_by_key(|t| (std::cmp::Reverse(t.rank()), t.to_string()));
    let roots = if generators.is_empty() { Vec::new() } else { generated_roots(rd, &generators) };
    let mut degrees: Vec<usize> = components.iter().flat_map(|t| t.degrees()).collect();
    degrees.sort_unstable();
    let nu_k = roots.len() / 2;
    Ok(SubsystemData { k, generators, nu_k, dim_gk: roots.len() + rd.rank, roots, components, degrees, rank: rd.rank })
}

pub fn subsystem(rd: &RootSystemData, k: &[usize]) -> Result<SubsystemData> {
    let nodes = rd.affine_nodes()?;
    let mut k = k.to_vec();
    k.sort_unstable();
    k.dedup();
    if k.len() >= nodes.len() {
        return Err(Error::Precondition("K must be a proper subset of the affine nodes".into()));
    }
    if let Some(&bad) = k.iter().find(|&&i| i >= nodes.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: nodes.len() });
    }
    let gens = k.iter().map(|&i| nodes[i].clone()).collect();
    subsystem_from_roots(rd, k, gens)
}

/// The whole system as a subsystem (generated by the simple roots).
pub fn full_subsystem(rd: &RootSystemData) -> Result<SubsystemData> {
    subsystem_from_roots(rd, (1..=rd.rank).collect(), rd.simple.clone())
}

/// Every proper subset `K` of the affine nodes, in order of the bitmask.
/// With `dedupe`, subsets giving the same root subsystem are kept once.
pub fn subsystems(rd: &RootSystemData, dedupe: bool) -> Result<Vec<SubsystemData>> {
    let nodes = rd.affine_nodes()?.len();
    let mut out: Vec<SubsystemData> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1u32 << nodes) - 1 {
        let k: Vec<usize> = (0..nodes).filter(|i| mask >> i & 1 == 1).collect();
        let s = subsystem(rd, &k)?;
        if dedupe && !seen.insert(s.roots.clone()) {
            continue;
        }
        out.push(s);
    }
    Ok(out)
}

/// `|G_K^F| = q^{ν_K} (q-1)^l Poin_{W_K}(q)`, split form.
pub fn group_order(sub: &SubsystemData) -> QPoly {
    (QPoly::monomial(sub.nu_k as i64) * QPoly::from_i64s(0, &[-1, 1]).pow(sub.rank as u32)) * sub.poincare()
}

/// `|G^F|` for the whole root system.
pub fn full_group_order(rd: &RootSystemData) -> QPoly {
    (QPoly::monomial(rd.nu as i64) * QPoly::from_i64s(0, &[-1, 1]).pow(rd.rank as u32)) * rd.poincare.clone()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Elements of `W_K` as matrices on simple-root coordinates of the ambient
/// system, identity first.
pub fn weyl_elements(rd: &RootSystemData, sub: &SubsystemData) -> Result<Vec<IntMatrix>> {
    let order = sub.weyl_order();
    if order > WEYL_ENUMERATION_LIMIT {
        return Err(Error::RankLimit { rank: sub.degrees.len(), limit: WEYL_ENUMERATION_LIMIT as usize });
    }
    let gens: Vec<IntMatrix> = sub.generators.iter().map(|a| rd.reflection_matrix(a)).collect();
    let mut index: HashMap<IntMatrix, usize> = HashMap::new();
    let mut out = vec![identity(rd.rank)];
    index.insert(out[0].clone(), 0);
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let h = mat_mul(g, &out[i]);
            if !index.contains_key(&h) {
                index.insert(h.clone(), out.len());
                out.push(h);
            }
        }
        i += 1;
    }
    if out.len() as u64 != order {
        return Err(Error::Verification(format!("|W_K| = {} but the degrees give {order}", out.len())));
    }
    Ok(out)
}

/// Characteristic polynomial `det(q - w)` by Faddeev-LeVerrier.
pub fn char_poly(m: &IntMatrix) -> QPoly {
    let n = m.len();
    let a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for t in 0..n {
                    s += &a[i][t] * &mk[t][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &a[i][t] * &next[t][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
        mk = next;
    }
    QPoly::from_coeffs(0, coeffs)
}

/// `det(1 - q w)`: the reversed characteristic polynomial.
pub fn det_one_minus_q(m: &IntMatrix) -> QPoly {
    let cp = char_poly(m);
    let n = m.len() as i64;
    let dense = cp.to_dense().expect("characteristic polynomial");
    let mut rev: Vec<BigInt> = dense.into_iter().rev().collect();
    rev.resize(n as usize + 1, BigInt::zero());
    QPoly::from_coeffs(0, rev)
}

fn det_sign(m: &IntMatrix) -> i64 {
    // det(w) = (-1)^n char_poly(0)
    let c0 = char_poly(m).coeff(0);
    let d = if m.len() % 2 == 0 { c0 } else { -c0 };
    d.to_i64().expect("det of a Weyl group element is ±1")
}

/// Values of `Π_{G_K}` at one element, by the two formulas.
#[derive(Clone, Debug, Serialize)]
pub struct PiValue {
    pub graded_trace: QPoly,
    pub order_formula: QPoly,
}

pub fn pi_two_ways(sub: &SubsystemData, w: &IntMatrix) -> Result<PiValue> {
    let l = sub.rank;
    let mut num = QPoly::one();
    for &d in &sub.degrees {
        num = num * QPoly::one_minus(1, d);
    }
    num = num * QPoly::one_minus(1, 1).pow((l - sub.degrees.len()) as u32);
    let graded_trace = num.div_exact(&det_one_minus_q(w))?;
    let top = (QPoly::from_i64s(0, &[-1, 1]).pow(l as u32) * sub.poincare()).scale(det_sign(w));
    let order_formula = top.div_exact(&char_poly(w))?;
    Ok(PiValue { graded_trace, order_formula })
}

#[derive(Clone, Debug, Serialize)]
pub struct WClass {
    pub representative: IntMatrix,
    pub size: usize,
    pub value: QPoly,
}

/// A class function on `W_K` with polynomial values.
#[derive(Clone, Debug, Serialize)]
pub struct ClassFunctionQ {
    pub group: String,
    pub classes: Vec<WClass>,
}

impl ClassFunctionQ {
    pub fn order(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }
}

fn inverse_of(elements: &[IntMatrix], w: &IntMatrix) -> usize {
    let id = identity(w.len());
    elements.iter().position(|x| mat_mul(w, x) == id).expect("closed under inverses")
}

/// Conjugacy classes of the enumerated group, as lists of indices.
pub fn conjugacy_classes(elements: &[IntMatrix]) -> Vec<Vec<usize>> {
    let index: HashMap<&IntMatrix, usize> = elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let inverses: Vec<usize> = elements.iter().map(|w| inverse_of(elements, w)).collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    for i in 0..elements.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for (h, hinv) in elements.iter().zip(&inverses) {
            let c = mat_mul(&mat_mul(h, &elements[i]), &elements[*hinv]);
            let j = index[&c];
            if class_of[j] == usize::MAX {
                class_of[j] = id;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// `Π_{G_K}` on every class of `W_K`, cross-checked element by element.
pub fn pi_class_function(rd: &RootSystemData, sub: &SubsystemData) -> Result<ClassFunctionQ> {
    let elements = weyl_elements(rd, sub)?;
    let mut values = Vec::with_capacity(elements.len());
    for w in &elements {
        let v = pi_two_ways(sub, w)?;
        if v.graded_trace != v.order_formula {
            return Err(Error::Verification(format!("Π mismatch at {w:?}: {} vs {}", v.graded_trace, v.order_formula)));
        }
        values.push(v.graded_trace);
    }
    let mut classes = Vec::new();
    for members in conjugacy_classes(&elements) {
        let value = values[members[0]].clone();
        if members.iter().any(|&j| values[j] != value) {
            return Err(Error::Verification("Π is not constant on a class".into()));
        }
        classes.push(WClass { representative: elements[members[0]].clone(), size: members.len(), value });
    }
    Ok(ClassFunctionQ { group: sub.label(), classes })
}

/// Columns `α_j` written in the standard coordinates of a classical system.
fn classical_basis(t: SimpleType) -> Option<(Vec<Vec<BigRational>>, usize)> {
    let n = t.rank();
    let int = |x: i64| BigRational::from_integer(x.into());
    let mut p = match t {
        SimpleType::A(_) => vec![vec![int(0); n]; n + 1],
        SimpleType::B(_) | SimpleType::C(_) | SimpleType::D(_) => vec![vec![int(0); n]; n],
        _ => return None,
    };
    for j in 0..n.saturating_sub(1) {
        p[j][j] = int(1);
        p[j + 1][j] = int(-1);
    }
    match t {
        SimpleType::A(_) => {
            p[n - 1][n - 1] = int(1);
            p[n][n - 1] = int(-1);
        }
        SimpleType::B(_) => p[n - 1][n - 1] = int(1),
        SimpleType::C(_) => p[n - 1][n - 1] = int(2),
        SimpleType::D(_) => {
            p[n - 1][n - 1] = int(1);
            p[n - 2][n - 1] = int(1);
        }
        _ => unreachable!(),
    }
    Some((p, n))
}

/// Conjugacy class of `w` in `W` for a classical `W`, as a signed cycle type
/// (positive parts only for type A).
pub fn classical_class(rd: &RootSystemData, w: &IntMatrix) -> Result<SignedCycleType> {
    let t = rd.single_type().ok_or_else(|| Error::UnsupportedGroup(rd.name.clone()))?;
    let (p, n) = classical_basis(t).ok_or_else(|| Error::MissingData(format!("character values of W({t})")))?;
    let to_std = |x: &[i64]| -> Vec<BigRational> {
        (0..p.len()).map(|i| (0..n).map(|j| &p[i][j] * BigRational::from_integer(x[j].into())).sum()).collect()
    };
    let apply = |x: &[i64]| -> Vec<i64> { (0..n).map(|i| (0..n).map(|j| w[i][j] * x[j]).sum()).collect() };
    if let SimpleType::A(_) = t {
        // w(ε_i - ε_{n+1}) = ε_{π(i)} - ε_{π(n+1)}
        let mut images = vec![0usize; n + 1];
        let mut last = None;
        for i in 0..n {
            let x: Vec<i64> = (0..n).map(|j| i64::from(j >= i)).collect();
            let y = to_std(&apply(&x));
            let plus = y.iter().position(|v| v.is_one());
            let minus = y.iter().position(|v| *v == -BigRational::one());
            match (plus, minus) {
                (Some(a), Some(b)) => {
                    images[i] = a;
                    if last.is_some_and(|l| l != b) {
                        return Err(Error::Verification("matrix is not a permutation".into()));
                    }
                    last = Some(b);
                }
                _ => return Err(Error::Verification("matrix is not a permutation".into())),
            }
        }
        images[n] = last.unwrap_or(0);
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for s in 0..=n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = images[x];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        return Ok(SignedCycleType { positive: parts, negative: vec![] });
    }
    let pinv = linalg::inverse(&Rationals, &p).expect("simple roots form a basis");
    let wq: Vec<Vec<BigRational>> =
        w.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let std = linalg::mat_mul(&Rationals, &linalg::mat_mul(&Rationals, &p, &wq), &pinv);
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = &std[i][j];
            if !v.is_integer() || v.abs() > BigRational::one() {
                return Err(Error::Verification("matrix is not a signed permutation".into()));
            }
            m[i][j] = v.to_integer().to_i64().unwrap();
        }
    }
    Ok(SignedPerm::from_matrix(&m)?.signed_cycle_type())
}

/// The Weyl group family and rank that labels of `W` use.
pub fn label_family(rd: &RootSystemData) -> Result<(Family, usize)> {
    match rd.single_type() {
        Some(SimpleType::A(n)) => Ok((Family::S, n + 1)),
        Some(SimpleType::B(n) | SimpleType::C(n)) => Ok((Family::B, n)),
        Some(SimpleType::D(n)) => Ok((Family::D, n)),
        _ => Err(Error::MissingData(format!("irreducible characters of W({})", rd.name))),
    }
}

/// `χ_E(w)` for `E` an irreducible of a classical `W`.
pub fn classical_character(rd: &RootSystemData, e: &IrrLabel, w: &IntMatrix) -> Result<i64> {
    let (family, rank) = label_family(rd)?;
    if e.family() != family || e.rank() != rank {
        return Err(Error::InvalidLabel(format!("{e} is not a label of W({})", rd.name)));
    }
    let ct = classical_class(rd, w)?;
    match e {
        IrrLabel::S(lambda) => Ok(s_character(lambda, &ct.positive)),
        _ if e.is_degenerate() => Err(Error::DegenerateLabel(e.to_string())),
        IrrLabel::B { alpha, beta } | IrrLabel::D { alpha, beta } => Ok(b_character(alpha, beta, &ct)),
    }
}

/// `(E' : Π_{G_K})_{W_K}`.
pub fn inner_with_pi(rd: &RootSystemData, e: &IrrLabel, sub: &SubsystemData, pi: &ClassFunctionQ) -> Result<QPoly> {
    let mut acc = QPoly::zero();
    for c in &pi.classes {
        let chi = classical_character(rd, e, &c.representative)?;
        if chi != 0 {
            acc = acc + c.value.scale(BigInt::from(chi) * BigInt::from(c.size));
        }
    }
    let out = acc.div_scalar_exact(&BigInt::from(pi.order()))?;
    let degree_ok = out.degree().is_none_or(|d| d <= sub.nu_k as i64);
    if !out.is_polynomial() || !out.has_nonnegative_coeffs() || !degree_ok {
        return Err(Error::Verification(format!("({e} : Π) = {out} is not in N[q] of degree <= ν_K")));
    }
    Ok(out)
}

/// Summary of one class of `W_K` for reports.
#[derive(Clone, Debug, Serialize)]
pub struct PiCheckRow {
    pub group: String,
    pub elements: usize,
    pub classes: usize,
    pub pass: bool,
}

/// Check both formulas for `Π` at every element of `W` for the named system.
pub fn pi_cross_check(name: &str) -> Result<PiCheckRow> {
    let rd = super::roots::root_data(name)?;
    let sub = full_subsystem(&rd)?;
    let elements = weyl_elements(&rd, &sub)?;
    let mut pass = true;
    for w in &elements {
        let v = pi_two_ways(&sub, w)?;
        pass &= v.graded_trace == v.order_formula;
    }
    let classes = conjugacy_classes(&elements).len();
    Ok(PiCheckRow { group: rd.name, elements: elements.len(), classes, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixedpoint::roots::root_data;
    use crate::representations::fake_degree;
    use crate::weyl::{Factor, WeylGroupSpec};

    #[test]
    fn a1_subsystems() {
        let rd = root_data("A1").unwrap();
        let subs = subsystems(&rd, false).unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0].dim_gk, 1);
        assert_eq!(subs[1].dim_gk, 3);
        assert_eq!(subs[2].dim_gk, 3);
        assert_eq!(subsystems(&rd, true).unwrap().len(), 2);
        assert_eq!(subsystems(&root_data("B2").unwrap(), false).unwrap().len(), 7);
    }

    #[test]
    fn g2_subsystem_types() {
        let rd = root_data("G2").unwrap();
        let s = subsystem(&rd, &[0, 2]).unwrap();
        assert_eq!(s.dim_gk, 6);
        assert_eq!(s.components.len(), 2);
        let s = subsystem(&rd, &[0, 1]).unwrap();
        assert_eq!(s.label(), "A2");
        assert!(subsystem(&rd, &[0, 1, 2]).is_err());
    }

    #[test]
    fn orders() {
        let rd = root_data("A1").unwrap();
        assert_eq!(full_group_order(&rd), QPoly::from_i64s(1, &[-1, 0, 1]));
        let b2 = root_data("B2").unwrap();
        let sp4 = QPoly::monomial(4) * QPoly::q_pow_minus_one(2) * QPoly::q_pow_minus_one(4);
        assert_eq!(full_group_order(&b2), sp4);
        let torus = subsystem(&b2, &[]).unwrap();
        assert_eq!(group_order(&torus), QPoly::from_i64s(0, &[1, -2, 1]));
    }

    #[test]
    fn char_poly_of_reflection() {
        let rd = root_data("A2").unwrap();
        let s = rd.reflection_matrix(&rd.simple[0]);
        assert_eq!(char_poly(&s), QPoly::from_i64s(0, &[-1, 0, 1]));
        assert_eq!(det_one_minus_q(&s), QPoly::from_i64s(0, &[1, 0, -1]));
    }

    #[test]
    fn pi_values_a1() {
        let rd = root_data("A1").unwrap();
        let sub = full_subsystem(&rd).unwrap();
        let pi = pi_class_function(&rd, &sub).unwrap();
        let vals: Vec<String> = pi.classes.iter().map(|c| c.value.to_string()).collect();
        assert_eq!(vals.len(), 2);
        assert_eq!(pi.classes[0].value, QPoly::from_i64s(0, &[1, 1]));
        assert_eq!(pi.classes[1].value, QPoly::from_i64s(0, &[1, -1]));
        let torus = subsystem(&rd, &[]).unwrap();
        let pt = pi_class_function(&rd, &torus).unwrap();
        assert_eq!(pt.classes.len(), 1);
        assert_eq!(pt.classes[0].value, QPoly::one());
    }

    #[test]
    fn inner_products_a1() {
        let rd = root_data("A1").unwrap();
        let sub = subsystem(&rd, &[1]).unwrap();
        let pi = pi_class_function(&rd, &sub).unwrap();
        let triv = IrrLabel::s(vec![2]);
        let sgn = IrrLabel::s(vec![1, 1]);
        assert_eq!(inner_with_pi(&rd, &triv, &sub, &pi).unwrap(), QPoly::one());
        assert_eq!(inner_with_pi(&rd, &sgn, &sub, &pi).unwrap(), QPoly::monomial(1));
        let torus = subsystem(&rd, &[]).unwrap();
        let pt = pi_class_function(&rd, &torus).unwrap();
        assert_eq!(inner_with_pi(&rd, &triv, &torus, &pt).unwrap(), QPoly::one());
    }

    /// With `W_K = W` the inner product is the fake degree.
    #[test]
    fn inner_with_full_group_is_fake_degree() {
        for (name, factor) in [
            ("A2", Factor::s(3)),
            ("A3", Factor::s(4)),
            ("B2", Factor::b(2)),
            ("C3", Factor::b(3)),
            ("B3", Factor::b(3)),
            ("D4", Factor::d(4)),
        ] {
            let rd = root_data(name).unwrap();
            let sub = full_subsystem(&rd).unwrap();
            let pi = pi_class_function(&rd, &sub).unwrap();
            let spec = WeylGroupSpec::single(factor);
            let table = crate::weyl::character::factor_table(factor, 8).unwrap();
            for e in &table.irreps {
                if e.is_degenerate() {
                    continue;
                }
                let fd = fake_degree(&[e.clone()], &spec).unwrap();
                assert_eq!(inner_with_pi(&rd, e, &sub, &pi).unwrap(), fd.poly, "{name} {e}");
            }
        }
    }

    #[test]
    fn classes_match_signed_cycle_types() {
        for (name, count) in [("A3", 5), ("B3", 10), ("C2", 5), ("D4", 13)] {
            let rd = root_data(name).unwrap();
            let sub = full_subsystem(&rd).unwrap();
            let el = weyl_elements(&rd, &sub).unwrap();
            let classes = conjugacy_classes(&el);
            assert_eq!(classes.len(), count, "{name}");
            for c in &classes {
                let ct = classical_class(&rd, &el[c[0]]).unwrap();
                assert!(c.iter().all(|&j| classical_class(&rd, &el[j]).unwrap() == ct));
            }
        }
    }

    #[test]
    fn cross_check_small_groups() {
        for name in ["A1", "A2", "B2", "A1xA1", "B3", "G2"] {
            assert!(pi_cross_check(name).unwrap().pass, "{name}");
        }
    }
}
