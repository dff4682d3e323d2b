//! The count polynomial `P^K_C = |G^F|/|G_K^F| · Σ_E A_{E,C} Σ_{E'} φ_{E,E'} (E' : Π_{G_K})`
//! and the data documents feeding it.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::IrrLabel;
use crate::partition::partitions;
use crate::poly::QPoly;

use super::roots::{RootSystemData, SimpleType};
use super::subsystem::{full_group_order, group_order, inner_with_pi, label_family, pi_class_function, SubsystemData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Builtin,
    ExternalFile(String),
}

/// Precomputed `(E' : Π_{G_K})` for types whose characters are not internal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerTable {
    /// `K` written as comma-separated node indices.
    pub columns: Vec<String>,
    pub values: Vec<Vec<QPoly>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineData {
    pub cartan_type: String,
    pub irreps: Vec<String>,
    /// Elliptic classes by characteristic polynomial, e.g. `Φ2Φ6`.
    pub classes: Vec<String>,
    /// Minimal length `d_C` in each class.
    pub class_lengths: Vec<usize>,
    pub a: Vec<Vec<QPoly>>,
    pub phi: Vec<Vec<i64>>,
    pub inner: Option<InnerTable>,
    pub provenance: Provenance,
}

/// One matrix on disk: explicit row and column labels, polynomial entries as
/// integer coefficient arrays (decimal strings), lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub cartan_type: String,
    pub matrix: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_lengths: Option<Vec<usize>>,
    pub entries: Vec<Vec<Vec<String>>>,
}

pub fn k_key(k: &[usize]) -> String {
    k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn encode(p: &QPoly) -> Result<Vec<String>> {
    let dense = p.to_dense().ok_or_else(|| Error::Parse(format!("{p} has negative exponents")))?;
    Ok(dense.into_iter().map(|c| c.to_string()).collect())
}

fn decode(c: &[String]) -> Result<QPoly> {
    let coeffs = c
        .iter()
        .map(|x| x.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient '{x}'"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::from_coeffs(0, coeffs))
}

impl MatrixDocument {
    fn from_polys(
        cartan_type: &str,
        matrix: &str,
        rows: &[String],
        columns: &[String],
        class_lengths: Option<Vec<usize>>,
        values: &[Vec<QPoly>],
    ) -> Result<Self> {
        let entries =
            values.iter().map(|r| r.iter().map(encode).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Ok(MatrixDocument {
            cartan_type: cartan_type.into(),
            matrix: matrix.into(),
            rows: rows.to_vec(),
            columns: columns.to_vec(),
            class_lengths,
            entries,
        })
    }

    fn polys(&self) -> Result<Vec<Vec<QPoly>>> {
        if self.entries.len() != self.rows.len() || self.entries.iter().any(|r| r.len() != self.columns.len()) {
            return Err(Error::Parse(format!("{} matrix: shape does not match its labels", self.matrix)));
        }
        self.entries.iter().map(|r| r.iter().map(|c| decode(c)).collect::<Result<Vec<_>>>()).collect()
    }
}

impl PipelineData {
    pub fn documents(&self) -> Result<Vec<MatrixDocument>> {
        let t = &self.cartan_type;
        let mut out = vec![MatrixDocument::from_polys(
            t,
            "A",
            &self.irreps,
            &self.classes,
            Some(self.class_lengths.clone()),
            &self.a,
        )?];
        let phi: Vec<Vec<QPoly>> = self.phi.iter().map(|r| r.iter().map(|&x| QPoly::constant(x)).collect()).collect();
        out.push(MatrixDocument::from_polys(t, "phi", &self.irreps, &self.irreps, None, &phi)?);
        if let Some(inner) = &self.inner {
            out.push(MatrixDocument::from_polys(t, "inner", &self.irreps, &inner.columns, None, &inner.values)?);
        }
        Ok(out)
    }

    pub fn from_documents(docs: &[MatrixDocument], provenance: Provenance) -> Result<Self> {
        let find = |name: &str| docs.iter().find(|d| d.matrix == name);
        let a_doc = find("A").ok_or_else(|| Error::MissingData("A matrix".into()))?;
        let phi_doc = find("phi").ok_or_else(|| Error::MissingData("phi matrix".into()))?;
        if phi_doc.rows != a_doc.rows || phi_doc.columns != a_doc.rows {
            return Err(Error::Parse("phi must be square on the rows of A".into()));
        }
        let phi = phi_doc
            .polys()?
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|p| match p.degree() {
                        None => Ok(0),
                        Some(0) => p.coeff(0).to_i64().ok_or_else(|| Error::Parse("phi entry too large".into())),
                        _ => Err(Error::Parse(format!("phi entry {p} is not an integer"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let class_lengths =
            a_doc.class_lengths.clone().ok_or_else(|| Error::MissingData("class_lengths in the A document".into()))?;
        if class_lengths.len() != a_doc.columns.len() {
            return Err(Error::Parse("one class length per column is required".into()));
        }
        let inner = match find("inner") {
            Some(d) if d.rows == a_doc.rows => Some(InnerTable { columns: d.columns.clone(), values: d.polys()? }),
            Some(_) => return Err(Error::Parse("inner rows differ from the rows of A".into())),
            None => None,
        };
        Ok(PipelineData {
            cartan_type: a_doc.cartan_type.clone(),
            irreps: a_doc.rows.clone(),
            classes: a_doc.columns.clone(),
            class_lengths,
            a: a_doc.polys()?,
            phi,
            inner,
            provenance,
        })
    }

    /// Write `<type>_A.json`, `<type>_phi.json` (and `<type>_inner.json`).
    pub fn save(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir).map_err(|e| Error::Parse(e.to_string()))?;
        for d in self.documents()? {
            let path = dir.join(format!("{}_{}.json", self.cartan_type, d.matrix));
            let text = serde_json::to_string_pretty(&d).map_err(|e| Error::Parse(e.to_string()))?;
            std::fs::write(&path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }

    pub fn load(dir: &Path, cartan_type: &str) -> Result<Self> {
        let mut docs = Vec::new();
        for m in ["A", "phi", "inner"] {
            let path = dir.join(format!("{cartan_type}_{m}.json"));
            if !path.exists() {
                continue;
            }
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let doc: MatrixDocument =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            docs.push(doc);
        }
        Self::from_documents(&docs, Provenance::ExternalFile(dir.display().to_string()))
    }

    pub fn class_index(&self, class: &str) -> Result<usize> {
        self.classes.iter().position(|c| c == class).ok_or_else(|| {
            Error::InvalidLabel(format!("no elliptic class '{class}' in the data for {}", self.cartan_type))
        })
    }
}

fn cyclotomic_label(factors: &[(usize, u32)]) -> String {
    factors.iter().map(|&(d, e)| if e == 1 { format!("Φ{d}") } else { format!("Φ{d}^{e}") }).collect()
}

/// Type `A_n`: the only elliptic class is the Coxeter class, where the
/// Hecke algebra character of the hook `(n+1-k, 1^k)` is `(-1)^k q^(n-k)`
/// and every other character vanishes; `φ` is the identity.
pub fn builtin_type_a(n: usize) -> PipelineData {
    let irreps: Vec<Vec<usize>> = partitions(n + 1);
    let a = irreps
        .iter()
        .map(|lambda| {
            let k = lambda.len() - 1;
            let hook = lambda[1..].iter().all(|&x| x == 1);
            let v = if hook { QPoly::term(if k % 2 == 0 { 1 } else { -1 }, (n - k) as i64) } else { QPoly::zero() };
            vec![v]
        })
        .collect();
    let m = irreps.len();
    let phi = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
    let divisors: Vec<(usize, u32)> = (2..=n + 1).filter(|d| (n + 1) % d == 0).map(|d| (d, 1)).collect();
    PipelineData {
        cartan_type: format!("A{n}"),
        irreps: irreps.into_iter().map(|l| IrrLabel::s(l).to_string()).collect(),
        classes: vec![cyclotomic_label(&divisors)],
        class_lengths: vec![n],
        a,
        phi,
        inner: None,
        provenance: Provenance::Builtin,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointReport {
    pub cartan_type: String,
    pub class: String,
    pub k: Vec<usize>,
    pub subsystem: String,
    /// The count polynomial `P^K_C`.
    pub p: QPoly,
    pub dim_gk: usize,
    pub d_c: usize,
    pub csmall: bool,
    pub m_kc: Option<u64>,
    pub provenance: Provenance,
}

impl FixedPointReport {
    pub fn eval(&self, q: i64) -> BigInt {
        self.p.eval_int(q)
    }
}

impl fmt::Display for FixedPointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} C={} K={{{}}} ({}): P = {}, dim G_K = {}, d_C = {}, csmall = {}",
            self.cartan_type,
            self.class,
            k_key(&self.k),
            self.subsystem,
            self.p,
            self.dim_gk,
            self.d_c,
            self.csmall
        )?;
        if let Some(m) = self.m_kc {
            write!(f, ", m = {m}")?;
        }
        Ok(())
    }
}

/// `(E' : Π_{G_K})` for every row label, from internal characters when the
/// type is classical and from the data's inner table otherwise.
fn inner_vector(rd: &RootSystemData, sub: &SubsystemData, data: &PipelineData) -> Result<Vec<QPoly>> {
    if let Ok((family, _)) = label_family(rd) {
        let pi = pi_class_function(rd, sub)?;
        return data.irreps.iter().map(|s| inner_with_pi(rd, &IrrLabel::parse(family, s)?, sub, &pi)).collect();
    }
    let table = data
        .inner
        .as_ref()
        .ok_or_else(|| Error::MissingData(format!("(E' : Π_G_K) for {}; supply <type>_inner.json", rd.name)))?;
    let key = k_key(&sub.k);
    let col = table
        .columns
        .iter()
        .position(|c| *c == key)
        .ok_or_else(|| Error::MissingData(format!("inner products for K = {{{key}}}")))?;
    Ok(table.values.iter().map(|r| r[col].clone()).collect())
}

pub fn pipeline_count(
    rd: &RootSystemData,
    class: &str,
    sub: &SubsystemData,
    data: &PipelineData,
) -> Result<FixedPointReport> {
    if data.cartan_type != rd.name {
        return Err(Error::Precondition(format!("data is for {}, not {}", data.cartan_type, rd.name)));
    }
    let c = data.class_index(class)?;
    let inner = inner_vector(rd, sub, data)?;
    let mut bracket = QPoly::zero();
    for (e, row) in data.a.iter().enumerate() {
        let a = &row[c];
        if a.is_zero() {
            continue;
        }
        let mut s = QPoly::zero();
        for (e2, t) in inner.iter().enumerate() {
            let phi = data.phi[e][e2];
            if phi != 0 {
                s = s + t.scale(phi);
            }
        }
        bracket = bracket + a.clone() * s;
    }
    let ratio = full_group_order(rd).div_exact(&group_order(sub))?;
    let p = ratio * bracket;
    let d_c = data.class_lengths[c];
    let csmall = !p.is_zero() && sub.dim_gk == d_c;
    let mut m_kc = None;
    if csmall {
        let g = full_group_order(rd);
        let (quo, rem) = p.div_rem(&g)?;
        let m = match (rem.is_zero(), quo.degree()) {
            (true, Some(0)) => quo.coeff(0).to_u64().filter(|&m| m >= 1),
            _ => None,
        };
        m_kc = Some(m.ok_or_else(|| Error::Verification(format!("P = {p} is not a positive multiple of |G^F|")))?);
    }
    Ok(FixedPointReport {
        cartan_type: rd.name.clone(),
        class: class.into(),
        k: sub.k.clone(),
        subsystem: sub.label(),
        p,
        dim_gk: sub.dim_gk,
        d_c,
        csmall,
        m_kc,
        provenance: data.provenance.clone(),
    })
}

/// Whether a type is one for which the pipeline runs without external data.
pub fn has_builtin_data(t: SimpleType) -> bool {
    matches!(t, SimpleType::A(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixedpoint::roots::root_data;
    use crate::fixedpoint::subsystem::subsystem;

    #[test]
    fn sl2_coxeter_torus() {
        let rd = root_data("A1").unwrap();
        let data = builtin_type_a(1);
        assert_eq!(data.classes, vec!["Φ2".to_string()]);
        let r = pipeline_count(&rd, "Φ2", &subsystem(&rd, &[]).unwrap(), &data).unwrap();
        assert_eq!(r.p, full_group_order(&rd));
        assert!(r.csmall);
        assert_eq!(r.m_kc, Some(1));
        assert_eq!(r.eval(5), BigInt::from(120));
        let r = pipeline_count(&rd, "Φ2", &subsystem(&rd, &[1]).unwrap(), &data).unwrap();
        assert!(!r.csmall);
        assert_eq!(r.m_kc, None);
    }

    #[test]
    fn type_a_torus_gives_group_order() {
        for n in 1..=3 {
            let rd = root_data(&format!("A{n}")).unwrap();
            let data = builtin_type_a(n);
            for sub in crate::fixedpoint::subsystem::subsystems(&rd, false).unwrap() {
                let r = pipeline_count(&rd, &data.classes[0], &sub, &data).unwrap();
                assert!(r.p.is_polynomial(), "{} {:?}", r.p, sub.k);
                if sub.k.is_empty() {
                    assert_eq!(r.m_kc, Some(1));
                }
            }
        }
    }

    #[test]
    fn documents_round_trip() {
        let data = builtin_type_a(3);
        let docs = data.documents().unwrap();
        let text: Vec<String> = docs.iter().map(|d| serde_json::to_string(d).unwrap()).collect();
        let back: Vec<MatrixDocument> = text.iter().map(|t| serde_json::from_str(t).unwrap()).collect();
        assert_eq!(back, docs);
        let rebuilt = PipelineData::from_documents(&back, Provenance::Builtin).unwrap();
        assert_eq!(rebuilt, data);
        for (d, t) in docs.iter().zip(&text) {
            assert_eq!(&serde_json::to_string(d).unwrap(), t);
        }
    }

    #[test]
    fn exceptional_without_data_is_missing() {
        let rd = root_data("G2").unwrap();
        let sub = subsystem(&rd, &[1]).unwrap();
        let data = PipelineData {
            cartan_type: "G2".into(),
            irreps: vec!["phi{1,0}".into()],
            classes: vec!["Φ3".into()],
            class_lengths: vec![4],
            a: vec![vec![QPoly::one()]],
            phi: vec![vec![1]],
            inner: None,
            provenance: Provenance::Builtin,
        };
        assert!(matches!(pipeline_count(&rd, "Φ3", &sub, &data), Err(Error::MissingData(_))));
    }
}
