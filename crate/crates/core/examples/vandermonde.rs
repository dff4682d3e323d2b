//! The two Vandermonde-type determinant identities: exact expansion for
//! small m, random rational points beyond that.

use csmall::isometry::{vandermonde_check, CheckMode, DetForm};

fn main() -> csmall::Result<()> {
    for form in [DetForm::Minus, DetForm::Plus] {
        for m in 1..=6 {
            let mode = if m <= 3 { CheckMode::Symbolic } else { CheckMode::Random };
            let r = vandermonde_check(m, form, mode, 20, 42)?;
            println!(
                "{form:?} m={m} {mode:?}: sign {:+} monomial {:?}  {}/{}",
                r.sign, r.monomial, r.matches, r.checks
            );
        }
    }
    Ok(())
}
