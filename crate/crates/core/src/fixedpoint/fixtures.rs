//! Table fixtures for the exceptional types: each row gives `d_C`, the
//! characteristic polynomial of `C` as a product of cyclotomic factors, the
//! Springer label, and the subsets `K` with multiplicities. The dimension
//! `dim G_K` recomputed from the affine diagram must equal `d_C`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::totient;

use super::roots::root_data;
use super::subsystem::subsystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureSubset {
    /// Nodes in display order: a digit keeps the node in `K`, `•` drops it.
    pub mask: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub d: usize,
    pub class: String,
    pub chi: String,
    pub subsets: Vec<FixtureSubset>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFixture {
    pub cartan_type: String,
    /// Node indices (0 is the affine node) in the order masks list them.
    pub display_order: Vec<usize>,
    pub rows: Vec<FixtureRow>,
}

pub const FIXTURE_TYPES: [&str; 5] = ["G2", "F4", "E6", "E7", "E8"];

fn builtin_text(t: &str) -> Option<&'static str> {
    match t.to_ascii_uppercase().as_str() {
        "G2" => Some(include_str!("../../data/exceptional/g2.json")),
        "F4" => Some(include_str!("../../data/exceptional/f4.json")),
        "E6" => Some(include_str!("../../data/exceptional/e6.json")),
        "E7" => Some(include_str!("../../data/exceptional/e7.json")),
        "E8" => Some(include_str!("../../data/exceptional/e8.json")),
        _ => None,
    }
}

pub fn parse_fixture(text: &str) -> Result<TableFixture> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture: {e}")))
}

/// The fixture shipped with the crate.
pub fn builtin_fixture(t: &str) -> Result<TableFixture> {
    parse_fixture(builtin_text(t).ok_or_else(|| Error::UnsupportedGroup(t.into()))?)
}

pub fn load_fixture(path: &Path) -> Result<TableFixture> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_fixture(&text)
}

/// Node set `K` named by a mask.
pub fn mask_nodes(mask: &str, display_order: &[usize]) -> Result<Vec<usize>> {
    let chars: Vec<char> = mask.chars().collect();
    if chars.len() != display_order.len() {
        return Err(Error::Parse(format!(
            "mask '{mask}' has {} positions, expected {}",
            chars.len(),
            display_order.len()
        )));
    }
    let mut k = Vec::new();
    for (c, &node) in chars.iter().zip(display_order) {
        match c {
            '•' => {}
            d if d.to_digit(10) == Some(node as u32) => k.push(node),
            _ => return Err(Error::Parse(format!("mask '{mask}': '{c}' where node {node} belongs"))),
        }
    }
    k.sort_unstable();
    Ok(k)
}

/// Exponents of `Φ_d` in labels like `Φ2^2Φ6` or `(Φ2^2Φ6)''`.
pub fn parse_cyclotomic(label: &str) -> Result<BTreeMap<usize, u32>> {
    let body: String = label.chars().filter(|c| !matches!(c, '(' | ')' | '\'')).collect();
    let mut out = BTreeMap::new();
    for tok in body.split('Φ').filter(|t| !t.is_empty()) {
        let (d, e) = match tok.split_once('^') {
            Some((d, e)) => (d, e),
            None => (tok, "1"),
        };
        let d: usize = d.parse().map_err(|_| Error::Parse(format!("bad factor '{tok}' in '{label}'")))?;
        let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent '{tok}' in '{label}'")))?;
        *out.entry(d).or_insert(0) += e;
    }
    if out.is_empty() {
        return Err(Error::Parse(format!("empty cyclotomic label '{label}'")));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetCheck {
    pub mask: String,
    pub k: Vec<usize>,
    pub multiplicity: u32,
    pub subsystem: String,
    pub dim_gk: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub d: usize,
    pub class: String,
    pub chi: String,
    pub class_degree: usize,
    /// Degree equals the rank and `Φ1` is absent.
    pub elliptic: bool,
    pub subsets: Vec<SubsetCheck>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub cartan_type: String,
    pub rank: usize,
    pub rows: Vec<RowCheck>,
}

impl FixtureReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn passed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }
}

pub fn check_fixture(fx: &TableFixture) -> Result<FixtureReport> {
    let rd = root_data(&fx.cartan_type)?;
    let mut rows = Vec::new();
    for row in &fx.rows {
        let cyc = parse_cyclotomic(&row.class)?;
        let class_degree: usize = cyc.iter().map(|(&d, &e)| totient(d) * e as usize).sum();
        let elliptic = class_degree == rd.rank && !cyc.contains_key(&1);
        let mut subsets = Vec::new();
        for s in &row.subsets {
            let k = mask_nodes(&s.mask, &fx.display_order)?;
            let sub = subsystem(&rd, &k)?;
            subsets.push(SubsetCheck {
                mask: s.mask.clone(),
                k,
                multiplicity: s.multiplicity,
                subsystem: sub.label(),
                dim_gk: sub.dim_gk,
                pass: sub.dim_gk == row.d,
            });
        }
        let pass = elliptic && subsets.iter().all(|s| s.pass);
        rows.push(RowCheck {
            d: row.d,
            class: row.class.clone(),
            chi: row.chi.clone(),
            class_degree,
            elliptic,
            subsets,
            pass,
        });
    }
    Ok(FixtureReport { cartan_type: rd.name, rank: rd.rank, rows })
}

pub fn check_table_fixture(t: &str) -> Result<FixtureReport> {
    check_fixture(&builtin_fixture(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_rows() {
        let r = check_table_fixture("g2").unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.pass());
        assert_eq!(r.rows[2].subsets[0].subsystem, "A1xA1");
    }

    #[test]
    fn masks() {
        let order = [1, 3, 4, 5, 6, 7, 8, 0, 2];
        assert_eq!(mask_nodes("•34567802", &order).unwrap(), vec![0, 2, 3, 4, 5, 6, 7, 8]);
        assert!(mask_nodes("•3456780", &order).is_err());
        assert!(mask_nodes("•44567802", &order).is_err());
    }

    #[test]
    fn cyclotomic_labels() {
        let m = parse_cyclotomic("(Φ2^2Φ6)''").unwrap();
        assert_eq!(m.get(&2), Some(&2));
        assert_eq!(m.get(&6), Some(&1));
        assert!(parse_cyclotomic("x").is_err());
    }

    #[test]
    fn all_rows_consistent() {
        for t in FIXTURE_TYPES {
            let r = check_table_fixture(t).unwrap();
            for row in &r.rows {
                assert!(row.pass, "{t} {row:?}");
            }
        }
    }

    #[test]
    fn largest_e8_row() {
        let r = check_table_fixture("E8").unwrap();
        let last = r.rows.last().unwrap();
        assert_eq!(last.subsets[0].subsystem, "D8");
        assert_eq!(last.subsets[0].dim_gk, 120);
    }

    #[test]
    fn fixtures_round_trip() {
        for t in FIXTURE_TYPES {
            let fx = builtin_fixture(t).unwrap();
            let text = serde_json::to_string(&fx).unwrap();
            assert_eq!(parse_fixture(&text).unwrap(), fx);
        }
    }
}
