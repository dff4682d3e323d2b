//! The class function Pi on small Weyl groups, computed as a graded trace
//! and from the order formula, plus inner products with irreducibles.

use csmall::fixedpoint::{inner_with_pi, pi_class_function, pi_cross_check, root_data, subsystems};
use csmall::label::IrrLabel;

fn main() -> csmall::Result<()> {
    for name in ["A1", "A2", "B2", "A1xA1", "G2", "B3", "C3", "A3", "D4"] {
        let r = pi_cross_check(name)?;
        println!(
            "{:<6} {:>4} elements {:>3} classes  {}",
            r.group,
            r.elements,
            r.classes,
            if r.pass { "agree" } else { "DIFFER" }
        );
    }

    let rd = root_data("B2")?;
    let labels = [
        IrrLabel::b(vec![2], vec![]),
        IrrLabel::b(vec![1, 1], vec![]),
        IrrLabel::b(vec![1], vec![1]),
        IrrLabel::b(vec![], vec![2]),
        IrrLabel::b(vec![], vec![1, 1]),
    ];
    println!("\nlabels: {}", labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("  "));
    println!("(E : Pi) for B2, one K per distinct root subsystem");
    for sub in subsystems(&rd, true)? {
        let pi = pi_class_function(&rd, &sub)?;
        let vals = labels
            .iter()
            .map(|e| Ok(inner_with_pi(&rd, e, &sub, &pi)?.to_string()))
            .collect::<csmall::Result<Vec<_>>>()?;
        println!("  K={:?} {:<8} {}", sub.k, sub.label(), vals.join("  "));
    }
    Ok(())
}
