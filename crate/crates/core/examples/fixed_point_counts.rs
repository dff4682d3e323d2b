//! Count polynomials from the character-theoretic formula in type A, checked
//! against enumeration of pairs (g, B) in SL2 and Sp4 over small fields.

use csmall::fixedpoint::bruteforce::parse_rep;
use csmall::fixedpoint::{brute_force_counts, builtin_type_a, pipeline_count, root_data, subsystems, SmallGroup};

fn main() -> csmall::Result<()> {
    for n in 1..=3 {
        let rd = root_data(&format!("A{n}"))?;
        let data = builtin_type_a(n);
        for sub in subsystems(&rd, true)? {
            let r = pipeline_count(&rd, &data.classes[0], &sub, &data)?;
            println!("{r}");
        }
    }

    let rd = root_data("A1")?;
    let data = builtin_type_a(1);
    let torus = &subsystems(&rd, false)?[0];
    let r = pipeline_count(&rd, &data.classes[0], torus, &data)?;
    for (q, rep) in [(5, "diag:2"), (7, "diag:2"), (9, "diag:3"), (11, "diag:2")] {
        let m = parse_rep(SmallGroup::Sl2, q, rep)?;
        let b = brute_force_counts(SmallGroup::Sl2, q, &m)?;
        println!("SL2 q={q}: P(q) = {}  enumeration {:?}", r.eval(q as i64), b.counts);
    }

    let m = parse_rep(SmallGroup::Sp4, 5, "diag:2,3")?;
    let b = brute_force_counts(SmallGroup::Sp4, 5, &m)?;
    println!(
        "Sp4 q=5, class of size {} over {} flags ({}):",
        b.class_size,
        b.flags,
        if b.exhaustive { "exhaustive" } else { "equivariant" }
    );
    for (w, c) in &b.counts {
        println!("  {w}: {c}");
    }
    Ok(())
}
