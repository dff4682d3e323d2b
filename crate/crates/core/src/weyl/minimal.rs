//! A minimal-length representative of the elliptic class attached to a
//! partition.

use crate::error::Result;
use crate::partition::{GroupKind, PartitionSeq};

use super::signed_perm::SignedPerm;

/// One negative cycle per part: on the block of points `s+1..s+p_t`
/// (`s = p_1 + ... + p_{t-1}`) the element sends `s+1` to the mirror of
/// `s+p_t` and `s+j` to `s+j-1` for `j >= 2`. This is the relative position of
/// the flags built from the class witness, and has length `d_min`.
pub fn w_min_rep(p: &PartitionSeq, kind: GroupKind) -> Result<SignedPerm> {
    p.check_kind(kind)?;
    let n = p.n();
    let mirror = |i: usize| 2 * n + 1 - i;
    let mut images = vec![0; 2 * n];
    let mut s = 0;
    for &pt in p.parts() {
        for j in 1..=pt {
            let a = s + j;
            let img = if j == 1 { mirror(s + pt) } else { a - 1 };
            images[a - 1] = img;
            images[mirror(a) - 1] = mirror(img);
        }
        s += pt;
    }
    SignedPerm::new(images)
}
