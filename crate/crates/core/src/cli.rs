//! Command-line front end. Every subcommand produces an [`OutputRecord`];
//! exit status is 0 when all requested checks pass, 1 on a failed check and
//! 2 on a usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{PrimeField, Rationals};
use crate::fixedpoint::bruteforce::{parse_rep, parse_weyl};
use crate::fixedpoint::fixtures::check_table_fixture;
use crate::fixedpoint::pipeline::k_key;
use crate::fixedpoint::{
    brute_force_counts, builtin_type_a, pipeline_count, root_data, subsystem, PipelineData, SmallGroup,
};
use crate::isometry::vandermonde::vandermonde_check;
use crate::isometry::{witness_suite, CheckMode, DetForm, WitnessReport};
use crate::partition::{d_min, enumerate_elliptic, jordan_type, partitions, GroupKind, PartitionSeq};
use crate::representations::j_tower;
use crate::springer::{compare_springer_labels, sp_so_odd_agree, springer_label, variant_for};
use crate::weyl::signed_perm::class_min_length;
use crate::weyl::w_min_rep;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "csmall", version, about = "Elliptic classes, Springer labels, j-induction and fixed-point counts")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the classes attached to partitions of n with their minimal length.
    Elliptic { n: usize, kind: GroupKind },
    /// Springer label of the unipotent class attached to p.
    Springer { p: PartitionSeq, kind: GroupKind },
    /// j-induction of the sign representation along the tower for p.
    Jinduce { p: PartitionSeq, kind: GroupKind },
    /// Compare the symbol procedure, closed forms and j-induction for all p of n.
    #[command(name = "verify-06ii")]
    VerifySpringer {
        n: usize,
        #[arg(long)]
        kind: Option<GroupKind>,
    },
    /// Symplectic and odd orthogonal labels agree for all partitions of n.
    #[command(name = "verify-36")]
    VerifySpOdd { n: usize },
    /// Build a semisimple isometry for p and check its flags and centralizer.
    Isometry {
        p: PartitionSeq,
        kind: GroupKind,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// `q` for the rationals or a prime.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Count polynomial for an elliptic class C and a subset K of affine nodes.
    Pipeline {
        cartan_type: String,
        /// Cyclotomic label of the class, or `coxeter` in type A.
        class: String,
        /// Comma-separated affine node indices (0 is the affine node); `-` for none.
        k: String,
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Count pairs (g, B) over a finite field by enumeration.
    Bruteforce {
        group: SmallGroup,
        q: u64,
        /// `diag:a[,b]` or `rows:..;..`.
        rep: String,
        /// `e`, `s`, `cox`, `w0`, images like `3,1,4,2`, or `all`.
        w: String,
    },
    /// Check a shipped table fixture against the affine diagram.
    Fixtures { cartan_type: String },
    /// Determinant identities for the two Vandermonde-type matrices.
    Vandermonde {
        m: usize,
        #[arg(long)]
        symbolic: bool,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Rows of one command's output.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub pass: bool,
    #[serde(skip)]
    pub columns: Vec<String>,
    pub rows: Vec<serde_json::Map<String, Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl OutputRecord {
    fn new(command: String, columns: &[&str]) -> Self {
        OutputRecord {
            command,
            pass: true,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            error: None,
        }
    }

    fn push(&mut self, values: Vec<Value>) {
        let row = self.columns.iter().cloned().zip(values).collect();
        self.rows.push(row);
    }

    fn failure(command: String, err: &Error) -> Self {
        OutputRecord { command, pass: false, columns: vec![], rows: vec![], error: Some(err.to_string()) }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                if let Some(e) = &self.error {
                    w.write_record(["command", "pass", "error"]).expect("in-memory write");
                    w.write_record([self.command.as_str(), "false", e]).expect("in-memory write");
                } else {
                    w.write_record(&self.columns).expect("in-memory write");
                    for r in &self.rows {
                        w.write_record(self.columns.iter().map(|c| cell(&r[c]))).expect("in-memory write");
                    }
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
            }
            Format::Text => {
                let mut out = format!("# {}\n", self.command);
                if let Some(e) = &self.error {
                    out += &format!("error: {e}\n");
                    return out;
                }
                let cells: Vec<Vec<String>> =
                    self.rows.iter().map(|r| self.columns.iter().map(|c| cell(&r[c])).collect()).collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| {
                        cells.iter().map(|r| r[i].chars().count()).chain([self.columns[i].len()]).max().unwrap_or(0)
                    })
                    .collect();
                let line = |v: &[String]| {
                    let padded: Vec<String> = v
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                out += &line(&self.columns);
                for r in &cells {
                    out += &line(r);
                }
                out += if self.pass { "pass\n" } else { "FAIL\n" };
                out
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Verification(_) | Error::Construction(_) | Error::InexactDivision(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn label_value(l: &crate::label::IrrLabel) -> Value {
    json!(l.symbol_lists())
}

fn kinds(kind: Option<GroupKind>) -> Vec<GroupKind> {
    kind.map(|k| vec![k]).unwrap_or_else(|| GroupKind::ALL.to_vec())
}

fn parse_k(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(vec![]);
    }
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad node '{x}'")))).collect()
}

fn witness_row(rec: &mut OutputRecord, r: &WitnessReport) {
    rec.pass &= r.pass();
    rec.push(vec![
        json!(r.p),
        json!(r.kind.name()),
        json!(r.lambdas.join(" ")),
        json!(r.orthogonality),
        json!(r.intersections_checked),
        json!(r.relative_position),
        json!(r.position_ok),
        json!(r.centralizer_formula),
        json!(r.centralizer_kernel),
        json!(r.d_min),
        json!(if r.pass() { "pass" } else { "FAIL" }),
    ]);
}

pub fn execute(cmd: &Command, echo: String) -> Result<OutputRecord> {
    Ok(match cmd {
        Command::Elliptic { n, kind } => {
            let mut rec =
                OutputRecord::new(echo, &["p", "jordan_type", "d_min", "w_min_rep", "length", "class_min", "status"]);
            for p in enumerate_elliptic(*n, *kind) {
                let w = w_min_rep(&p, *kind)?;
                let len = w.length(kind.is_type_d())?;
                let d = d_min(&p, *kind)?;
                let class_min = if *n <= 5 { Some(class_min_length(&w, kind.is_type_d())?) } else { None };
                let ok = len == d && class_min.is_none_or(|c| c == d);
                rec.pass &= ok;
                rec.push(vec![
                    json!(p.to_string()),
                    json!(format!("{:?}", jordan_type(&p, *kind)?.blocks())),
                    json!(d),
                    json!(w.to_string()),
                    json!(len),
                    class_min.map_or(Value::Null, |c| json!(c)),
                    json!(if ok { "pass" } else { "FAIL" }),
                ]);
            }
            rec
        }
        Command::Springer { p, kind } => {
            let jt = jordan_type(p, *kind)?;
            let l = springer_label(&jt, *kind)?;
            let mut rec = OutputRecord::new(echo, &["p", "kind", "jordan_type", "label", "symbol"]);
            rec.push(vec![
                json!(p.to_string()),
                json!(kind.name()),
                json!(jt.blocks()),
                label_value(&l),
                json!(l.to_string()),
            ]);
            rec
        }
        Command::Jinduce { p, kind } => {
            let v = variant_for(*kind);
            let (sub, ambient) = crate::representations::tower_subgroup(p, v)?;
            let l = j_tower(p, v)?;
            let mut rec = OutputRecord::new(echo, &["p", "kind", "subgroup", "ambient", "label", "symbol"]);
            rec.push(vec![
                json!(p.to_string()),
                json!(kind.name()),
                json!(sub.to_string()),
                json!(ambient.to_string()),
                label_value(&l),
                json!(l.to_string()),
            ]);
            rec
        }
        Command::VerifySpringer { n, kind } => {
            let mut rec =
                OutputRecord::new(echo, &["kind", "p", "springer", "closed_form", "j_induced", "tower", "status"]);
            for k in kinds(*kind) {
                for p in enumerate_elliptic(*n, k) {
                    let r = compare_springer_labels(&p, k)?;
                    rec.pass &= r.pass;
                    rec.push(vec![
                        json!(k.name()),
                        json!(r.p),
                        json!(r.springer),
                        json!(r.closed_form),
                        json!(r.j_induced),
                        json!(r.tower_closed_form),
                        json!(if r.pass { "pass" } else { "FAIL" }),
                    ]);
                }
            }
            rec
        }
        Command::VerifySpOdd { n } => {
            let mut rec = OutputRecord::new(echo, &["p", "sp", "so-odd", "status"]);
            for parts in partitions(*n) {
                let p = PartitionSeq::new(parts)?;
                let a = springer_label(&jordan_type(&p, GroupKind::Sp)?, GroupKind::Sp)?;
                let b = springer_label(&jordan_type(&p, GroupKind::SoOdd)?, GroupKind::SoOdd)?;
                let ok = sp_so_odd_agree(&p)?;
                rec.pass &= ok;
                rec.push(vec![
                    json!(p.to_string()),
                    json!(a.to_string()),
                    json!(b.to_string()),
                    json!(if ok { "pass" } else { "FAIL" }),
                ]);
            }
            rec
        }
        Command::Isometry { p, kind, seed, field } => {
            let mut rec = OutputRecord::new(
                echo,
                &[
                    "p",
                    "kind",
                    "lambdas",
                    "orthogonal",
                    "intersections",
                    "relative_position",
                    "position_ok",
                    "centralizer_formula",
                    "centralizer_kernel",
                    "d_min",
                    "status",
                ],
            );
            let r = if field == "q" || field == "Q" {
                witness_suite(p, *kind, Rationals, *seed)?
            } else {
                let prime: u64 = field.parse().map_err(|_| Error::Parse(format!("bad field '{field}'")))?;
                let f = PrimeField::new(prime).ok_or_else(|| Error::Parse(format!("{prime} is not a prime")))?;
                witness_suite(p, *kind, f, *seed)?
            };
            witness_row(&mut rec, &r);
            rec
        }
        Command::Pipeline { cartan_type, class, k, data } => {
            let rd = root_data(cartan_type)?;
            let data = match (data, rd.single_type()) {
                (Some(dir), _) => PipelineData::load(dir, &rd.name)?,
                (None, Some(crate::fixedpoint::SimpleType::A(n))) => builtin_type_a(n),
                _ => return Err(Error::MissingData(format!("{}: pass --data DIR with A and phi documents", rd.name))),
            };
            let class =
                if class == "coxeter" && data.classes.len() == 1 { data.classes[0].clone() } else { class.clone() };
            let sub = subsystem(&rd, &parse_k(k)?)?;
            let r = pipeline_count(&rd, &class, &sub, &data)?;
            let mut rec = OutputRecord::new(
                echo,
                &["type", "class", "K", "subsystem", "P", "dim_GK", "d_C", "csmall", "m", "provenance"],
            );
            rec.push(vec![
                json!(r.cartan_type),
                json!(r.class),
                json!(k_key(&r.k)),
                json!(r.subsystem),
                json!(r.p.to_string()),
                json!(r.dim_gk),
                json!(r.d_c),
                json!(r.csmall),
                r.m_kc.map_or(Value::Null, |m| json!(m)),
                json!(format!("{:?}", r.provenance)),
            ]);
            rec
        }
        Command::Bruteforce { group, q, rep, w } => {
            let m = parse_rep(*group, *q, rep)?;
            let r = brute_force_counts(*group, *q, &m)?;
            let mut rec = OutputRecord::new(echo, &["group", "q", "w", "count", "class_size", "flags", "exhaustive"]);
            let selected: Vec<(String, u64)> = if w == "all" {
                r.counts.iter().map(|(k, v)| (k.clone(), *v)).collect()
            } else {
                let x = parse_weyl(*group, w)?;
                vec![(x.to_string(), r.count(&x))]
            };
            for (wk, c) in selected {
                rec.push(vec![
                    json!(group.to_string()),
                    json!(q),
                    json!(wk),
                    json!(c.to_string()),
                    json!(r.class_size),
                    json!(r.flags),
                    json!(r.exhaustive),
                ]);
            }
            rec
        }
        Command::Fixtures { cartan_type } => {
            let r = check_table_fixture(cartan_type)?;
            let mut rec = OutputRecord::new(echo, &["d", "class", "chi", "subsets", "elliptic", "status"]);
            for row in &r.rows {
                let subsets: Vec<String> = row
                    .subsets
                    .iter()
                    .map(|s| format!("{}×{} {} dim {}", s.mask, s.multiplicity, s.subsystem, s.dim_gk))
                    .collect();
                rec.pass &= row.pass;
                rec.push(vec![
                    json!(row.d),
                    json!(row.class),
                    json!(row.chi),
                    json!(subsets.join("; ")),
                    json!(row.elliptic),
                    json!(if row.pass { "pass" } else { "FAIL" }),
                ]);
            }
            rec
        }
        Command::Vandermonde { m, symbolic, points, seed } => {
            let mode = if *symbolic { CheckMode::Symbolic } else { CheckMode::Random };
            let mut rec = OutputRecord::new(echo, &["m", "form", "mode", "sign", "monomial", "matches", "status"]);
            for form in [DetForm::Minus, DetForm::Plus] {
                let r = vandermonde_check(*m, form, mode, *points, *seed)?;
                rec.pass &= r.pass;
                rec.push(vec![
                    json!(m),
                    json!(format!("{form:?}").to_lowercase()),
                    json!(format!("{mode:?}").to_lowercase()),
                    json!(r.sign),
                    json!(format!("{:?}", r.monomial)),
                    json!(format!("{}/{}", r.matches, r.checks)),
                    json!(if r.pass { "pass" } else { "FAIL" }),
                ]);
            }
            rec
        }
    })
}

/// Parse `args`, run, print to `out`, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    let (rec, code) = match execute(&cli.command, echo.clone()) {
        Ok(r) => {
            let code = if r.pass { EXIT_PASS } else { EXIT_FAIL };
            (r, code)
        }
        Err(e) => (OutputRecord::failure(echo, &e), exit_code_for(&e)),
    };
    let _ = out.write_all(rec.render(cli.format).as_bytes());
    code
}

pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut full = vec!["csmall"];
        full.extend_from_slice(args);
        let code = run(full, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn springer_json() {
        let (code, out) = call(&["springer", "1,1", "sp", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"][0]["label"], json!([[0, 2], [1]]));
    }

    #[test]
    fn sp_so_odd_agree_rows() {
        let (code, out) = call(&["verify-36", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
    }

    #[test]
    fn fixtures_g2() {
        let (code, out) = call(&["fixtures", "g2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert_eq!(v["pass"], json!(true));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["springer", "1,2", "sp"]).0, EXIT_USAGE);
        assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["vandermonde", "4", "--symbolic"]).0, EXIT_USAGE);
    }

    #[test]
    fn pipeline_and_bruteforce() {
        let (code, out) = call(&["pipeline", "A1", "coxeter", "-", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"][0]["m"], json!(1));
        let (code, out) = call(&["bruteforce", "sl2", "5", "diag:2", "s", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.contains(",120,"));
    }
}
