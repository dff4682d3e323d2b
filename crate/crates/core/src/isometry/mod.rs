//! Explicit semisimple isometries attached to partitions, their isotropic
//! flags and centralizers, over exact fields.

pub mod flags;
pub mod vandermonde;
pub mod witness;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{parse_rational, Field, Rationals};
use crate::linalg::Matrix;
use crate::partition::{GroupKind, PartitionSeq};
use crate::weyl::w_min_rep;

pub use flags::{build_flags, relative_position, FlagPair};
pub use vandermonde::{vandermonde_check, CheckMode, DetForm, VandermondeReport};
pub use witness::{build_class_rep, centralizer_dim, random_witness, verify_orthogonality, ClassWitness, FormedSpace};

/// Everything checked for one witness.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub p: String,
    pub kind: GroupKind,
    pub seed: u64,
    pub lambdas: Vec<String>,
    pub orthogonality: bool,
    pub intersections_checked: usize,
    pub intersections_ok: bool,
    pub relative_position: Vec<usize>,
    pub w_min_rep: Vec<usize>,
    pub position_ok: bool,
    pub centralizer_formula: usize,
    pub centralizer_kernel: usize,
    pub d_min: usize,
    pub centralizer_ok: bool,
}

impl WitnessReport {
    pub fn pass(&self) -> bool {
        self.orthogonality && self.intersections_ok && self.position_ok && self.centralizer_ok
    }
}

pub fn check_witness<F: Field>(w: &ClassWitness<F>, seed: u64) -> Result<WitnessReport> {
    let f = w.field();
    let kind = w.kind();
    let fl = build_flags(w)?;
    let rp = relative_position(&fl.table, kind)?;
    let wm = w_min_rep(&w.p, kind)?;
    let c = centralizer_dim(w)?;
    Ok(WitnessReport {
        p: w.p.to_string(),
        kind,
        seed,
        lambdas: w.lambdas.iter().map(|x| f.render(x)).collect(),
        orthogonality: verify_orthogonality(w).pass(),
        intersections_checked: fl.checks.len(),
        intersections_ok: fl.pass(),
        position_ok: rp == wm,
        relative_position: rp.images().to_vec(),
        w_min_rep: wm.images().to_vec(),
        centralizer_formula: c.formula,
        centralizer_kernel: c.kernel,
        d_min: c.d_min,
        centralizer_ok: c.pass,
    })
}

/// Build a witness from a seeded draw of eigenvalue parameters and check it.
pub fn witness_suite<F: Field>(p: &PartitionSeq, kind: GroupKind, field: F, seed: u64) -> Result<WitnessReport> {
    let w = random_witness(p, kind, field, seed)?;
    check_witness(&w, seed)
}

/// Archival form of a witness: matrices row-major, entries rendered by the
/// field (`n/d` over the rationals).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDump {
    pub p: Vec<usize>,
    pub kind: GroupKind,
    pub field: String,
    pub lambdas: Vec<String>,
    pub coefficients: Vec<Vec<String>>,
    pub gram: Vec<Vec<String>>,
    pub g: Vec<Vec<String>>,
    pub v: Vec<Vec<String>>,
}

fn render_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<String>> {
    m.iter().map(|row| row.iter().map(|x| f.render(x)).collect()).collect()
}

pub fn dump_witness<F: Field>(w: &ClassWitness<F>) -> WitnessDump {
    let f = w.field();
    WitnessDump {
        p: w.p.parts().to_vec(),
        kind: w.kind(),
        field: f.name(),
        lambdas: w.lambdas.iter().map(|x| f.render(x)).collect(),
        coefficients: render_matrix(f, &w.c),
        gram: render_matrix(f, &w.space.gram),
        g: render_matrix(f, &w.g),
        v: render_matrix(f, &w.v),
    }
}

/// Read back a rational witness and rebuild it from its eigenvalue
/// parameters; the stored matrices must agree with the rebuilt ones.
pub fn load_witness(dump: &WitnessDump) -> Result<ClassWitness<Rationals>> {
    let f = Rationals;
    if dump.field != f.name() {
        return Err(Error::Parse(format!("only rational witnesses can be reloaded, got {}", dump.field)));
    }
    let parse = |s: &String| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational '{s}'")));
    let lambdas = dump.lambdas.iter().map(parse).collect::<Result<Vec<_>>>()?;
    let p = PartitionSeq::new(dump.p.clone())?;
    let w = build_class_rep(&p, dump.kind, &lambdas, f)?;
    let rebuilt = dump_witness(&w);
    for (name, a, b) in [
        ("gram", &rebuilt.gram, &dump.gram),
        ("g", &rebuilt.g, &dump.g),
        ("v", &rebuilt.v, &dump.v),
        ("coefficients", &rebuilt.coefficients, &dump.coefficients),
    ] {
        let parsed =
            |m: &Vec<Vec<String>>| -> Result<Vec<Vec<_>>> { m.iter().map(|r| r.iter().map(parse).collect()).collect() };
        if parsed(a)? != parsed(b)? {
            return Err(Error::Verification(format!("stored {name} differs from the rebuilt witness")));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_round_trip() {
        let p = PartitionSeq::new(vec![2, 1]).unwrap();
        let w = random_witness(&p, GroupKind::SoOdd, Rationals, 9).unwrap();
        let dump = dump_witness(&w);
        let text = serde_json::to_string(&dump).unwrap();
        let back: WitnessDump = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dump);
        let w2 = load_witness(&back).unwrap();
        assert!(verify_orthogonality(&w2).pass());
        let mut bad = back.clone();
        bad.g[0][0] = "7/1".into();
        assert!(load_witness(&bad).is_err());
    }

    #[test]
    fn suite_small() {
        for kind in GroupKind::ALL {
            for p in crate::partition::enumerate_elliptic(2, kind) {
                assert!(witness_suite(&p, kind, Rationals, 0).unwrap().pass());
            }
        }
    }
}
