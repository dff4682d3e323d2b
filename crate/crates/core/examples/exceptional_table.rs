//! Shipped tables for G2, F4, E6, E7, E8: every listed subset K of the affine
//! diagram must give dim G_K equal to the minimal length of the class.

use csmall::fixedpoint::check_table_fixture;
use csmall::fixedpoint::fixtures::FIXTURE_TYPES;

fn main() -> csmall::Result<()> {
    let only = std::env::args().nth(1);
    for t in FIXTURE_TYPES {
        if only.as_deref().is_some_and(|o| !o.eq_ignore_ascii_case(t)) {
            continue;
        }
        let r = check_table_fixture(t)?;
        println!("{} (rank {}): {}/{} rows consistent", r.cartan_type, r.rank, r.passed_rows(), r.rows.len());
        for row in &r.rows {
            let ks: Vec<String> = row
                .subsets
                .iter()
                .map(|s| {
                    format!(
                        "{}{}",
                        s.subsystem,
                        if s.multiplicity > 1 { format!("_{}", s.multiplicity) } else { String::new() }
                    )
                })
                .collect();
            println!("  {:>3}  {:<16} {:<8} {}", row.d, row.class, row.chi, ks.join(", "));
        }
    }
    Ok(())
}
