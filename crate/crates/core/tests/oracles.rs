//! Property checks tying the count polynomial and its ingredients to
//! independent computations.

use num_bigint::BigInt;
use proptest::prelude::*;

use csmall::fixedpoint::bruteforce::parse_rep;
use csmall::fixedpoint::subsystem::label_family;
use csmall::fixedpoint::{
    brute_force_count, builtin_type_a, inner_with_pi, pi_class_function, pipeline_count, root_data, subsystems,
    SmallGroup,
};
use csmall::label::{Family, IrrLabel};
use csmall::partition::partitions;
use csmall::poly::QPoly;
use csmall::representations::dimension;
use csmall::weyl::{Factor, SignedPerm, WeylGroupSpec};

fn irreps(family: Family, rank: usize) -> Vec<IrrLabel> {
    match family {
        Family::S => partitions(rank).into_iter().map(IrrLabel::s).collect(),
        _ => (0..=rank)
            .flat_map(|k| {
                let betas = partitions(rank - k);
                partitions(k)
                    .into_iter()
                    .flat_map(move |a| betas.clone().into_iter().map(move |b| IrrLabel::b(a.clone(), b)))
            })
            .collect(),
    }
}

fn spec(family: Family, rank: usize) -> WeylGroupSpec {
    WeylGroupSpec::single(match family {
        Family::S => Factor::s(rank),
        _ => Factor::b(rank),
    })
}

/// `(E : Π_K)` restricts `E` to `W_K`, so summing `dim E · (E : Π_K)` over
/// `Irr(W)` gives `[W : W_K] Π_K(1) = [W : W_K] Poin_{W_K}(q)`.
#[test]
fn inner_products_recover_poincare() {
    for name in ["A1", "A2", "A3", "B2", "C2", "B3", "C3"] {
        let rd = root_data(name).unwrap();
        let (family, rank) = label_family(&rd).unwrap();
        let w = spec(family, rank);
        let es = irreps(family, rank);
        for sub in subsystems(&rd, false).unwrap() {
            let pi = pi_class_function(&rd, &sub).unwrap();
            let mut total = QPoly::zero();
            for e in &es {
                let d = dimension(std::slice::from_ref(e), &w).unwrap();
                total = total + inner_with_pi(&rd, e, &sub, &pi).unwrap() * QPoly::constant(d);
            }
            let index = rd.weyl_order() / sub.weyl_order();
            assert_eq!(total, sub.poincare() * QPoly::constant(index), "{name} K={:?}", sub.k);
        }
    }
}

#[test]
fn type_a_counts_are_integral_polynomials() {
    for n in 1..=3 {
        let rd = root_data(&format!("A{n}")).unwrap();
        let data = builtin_type_a(n);
        for sub in subsystems(&rd, false).unwrap() {
            let r = pipeline_count(&rd, &data.classes[0], &sub, &data).unwrap();
            assert!(r.p.is_polynomial() && r.p.to_dense().is_some());
            assert_eq!(r.csmall, sub.k.is_empty(), "{:?}", sub.k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Any regular split semisimple element of SL2(F_q) gives the pipeline's
    /// value at the Coxeter element.
    #[test]
    fn sl2_pipeline_matches_enumeration(qi in 0usize..5, a in 2u64..13) {
        let q = [3u64, 5, 7, 11, 13][qi];
        let a = a % q;
        // diag(a, a^-1) is regular iff a^2 != 1.
        prop_assume!(a > 1 && a != q - 1);
        let rd = root_data("A1").unwrap();
        let data = builtin_type_a(1);
        let torus = subsystems(&rd, false).unwrap().remove(0);
        let r = pipeline_count(&rd, &data.classes[0], &torus, &data).unwrap();
        let rep = parse_rep(SmallGroup::Sl2, q, &format!("diag:{a}")).unwrap();
        let s = SignedPerm::new(vec![2, 1]).unwrap();
        let count = brute_force_count(SmallGroup::Sl2, q, &rep, &s).unwrap();
        prop_assert_eq!(r.eval(q as i64), BigInt::from(count));
    }
}
