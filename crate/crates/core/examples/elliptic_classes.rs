//! Elliptic classes of W_n and W'_n: a minimal-length representative for
//! each, its length, and the class minimum found by exhaustive search.

use csmall::partition::{d_min, enumerate_elliptic, jordan_type, GroupKind};
use csmall::weyl::signed_perm::class_min_length;
use csmall::weyl::w_min_rep;

fn main() -> csmall::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for kind in GroupKind::ALL {
        println!("{kind} (n = {n})");
        for p in enumerate_elliptic(n, kind) {
            let w = w_min_rep(&p, kind)?;
            let d = d_min(&p, kind)?;
            // Exhaustive class search is cheap only for small rank.
            let min = if n <= 5 { class_min_length(&w, kind.is_type_d())?.to_string() } else { "-".into() };
            println!(
                "  {:<12} jordan {:<16} d_min {:>3}  length {:>3}  class min {:>3}  w = {}",
                p.to_string(),
                jordan_type(&p, kind)?.to_string(),
                d,
                w.length(kind.is_type_d())?,
                min,
                w
            );
        }
    }
    Ok(())
}
