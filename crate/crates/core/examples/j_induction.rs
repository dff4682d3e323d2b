//! j-induction of sign representations along the subgroup towers attached
//! to a partition, next to the closed-form symbols and the corner recursion.

use csmall::partition::PartitionSeq;
use csmall::representations::{corner_step, j_closed_form, j_tower, small_tower_checks, tower_subgroup, ClosedVariant};

fn main() -> csmall::Result<()> {
    let p: PartitionSeq = std::env::args().nth(1).as_deref().unwrap_or("3,2,2,1").parse()?;
    for v in [ClosedVariant::G, ClosedVariant::H, ClosedVariant::I] {
        let (sub, ambient) = match tower_subgroup(&p, v) {
            Ok(t) => t,
            Err(e) => {
                println!("{v:?}: {e}");
                continue;
            }
        };
        let tower = j_tower(&p, v)?;
        let closed = j_closed_form(&p, v)?;
        println!("{v:?}: j from {sub} to {ambient} of sgn = {tower}  (closed form {closed})");
        if let Some(step) = corner_step(&p, v)? {
            println!("    corner step gives {} [{}]", step.stepped, if step.pass { "ok" } else { "MISMATCH" });
        }
    }
    for c in small_tower_checks(p.n())? {
        println!("{} in {}: {} [{}]", c.subgroup, c.ambient, c.computed, if c.pass { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
