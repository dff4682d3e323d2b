//! Build an explicit semisimple isometry for a partition and check the
//! flags it stabilizes, their relative position, and its centralizer.

use csmall::field::{PrimeField, Rationals};
use csmall::isometry::{witness_suite, WitnessReport};
use csmall::partition::{enumerate_elliptic, GroupKind};

fn show(r: &WitnessReport) {
    println!(
        "{:<8} {:<8} seed {}  lambdas [{}]  position {:?}  centralizer {} = {} (d_min {})  {}",
        r.kind.name(),
        r.p,
        r.seed,
        r.lambdas.join(", "),
        r.relative_position,
        r.centralizer_formula,
        r.centralizer_kernel,
        r.d_min,
        if r.pass() { "ok" } else { "FAIL" }
    );
}

fn main() -> csmall::Result<()> {
    for kind in GroupKind::ALL {
        for p in enumerate_elliptic(3, kind) {
            show(&witness_suite(&p, kind, Rationals, 1)?);
        }
    }
    let f = PrimeField::new(101).expect("101 is prime");
    for p in enumerate_elliptic(4, GroupKind::Sp) {
        show(&witness_suite(&p, GroupKind::Sp, f.clone(), 2)?);
    }
    Ok(())
}
