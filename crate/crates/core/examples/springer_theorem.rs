//! Springer representations of the unipotent classes attached to elliptic
//! classes, compared against closed forms and j-induction of sign
//! representations, for every partition of n <= 6.

use csmall::partition::{enumerate_elliptic, GroupKind};
use csmall::springer::{compare_springer_labels, sp_so_odd_agree};

fn main() -> csmall::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let mut failures = 0;
    for n in 1..=max_n {
        for kind in GroupKind::ALL {
            for p in enumerate_elliptic(n, kind) {
                let r = compare_springer_labels(&p, kind)?;
                println!(
                    "{:<8} {:<13} {:<22} {}",
                    kind.name(),
                    r.p,
                    r.springer,
                    if r.pass { "ok" } else { "MISMATCH" }
                );
                if !r.pass {
                    println!("  closed {} j {} tower {}", r.closed_form, r.j_induced, r.tower_closed_form);
                    failures += 1;
                }
                if kind == GroupKind::Sp && !sp_so_odd_agree(&p)? {
                    println!("  symplectic and odd orthogonal labels differ for {}", r.p);
                    failures += 1;
                }
            }
        }
    }
    println!("{failures} failures");
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
