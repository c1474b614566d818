use std::collections::BTreeSet;

use polyfock_core::blocks::{block_decomposition, derived_equivalent, verify_klesh_equivalence, BlockId};
use polyfock_core::partitions::{is_p_core, partitions_of};
use polyfock_core::weights::wt;
use polyfock_core::{Modulus, Partition};

fn modulus(p: u32) -> Modulus {
    Modulus::new(p).unwrap()
}

#[test]
fn klesh_equivalence_up_to_ten() {
    for p in [2, 3, 5] {
        for d in 0..=10 {
            assert!(verify_klesh_equivalence(d, modulus(p)).unwrap(), "d = {} p = {}", d, p);
        }
    }
}

#[test]
fn blocks_partition_the_degree() {
    for p in [2, 3, 5] {
        let m = modulus(p);
        for d in 0..=10 {
            let blocks = block_decomposition(d, m).unwrap();
            let mut all = BTreeSet::new();
            let mut weights = BTreeSet::new();
            for b in &blocks {
                assert!(is_p_core(b.id.core(), m));
                assert_eq!(p as usize * b.id.p_weight() + b.id.core().size(), d);
                for lambda in &b.members {
                    assert_eq!(&wt(lambda, m), b.id.weight());
                    assert!(all.insert(lambda.clone()));
                }
                assert!(weights.insert(format!("{}", b.id.weight())));
                // empirical: weight 0 exactly for singleton core blocks
                let singleton = b.members.len() == 1;
                assert_eq!(b.id.p_weight() == 0, singleton);
                assert_eq!(singleton, is_p_core(&b.members[0], m));
            }
            assert_eq!(all.len(), partitions_of(d).len());
        }
    }
}

#[test]
fn derived_equivalence_predicate() {
    let p2 = modulus(2);
    let two = block_decomposition(2, p2).unwrap();
    let five = block_decomposition(5, p2).unwrap();
    let weight_one = five.iter().find(|b| b.id.core() == &"2,1".parse::<Partition>().unwrap()).unwrap();
    assert_eq!(weight_one.id.p_weight(), 1);
    assert!(derived_equivalent(&two[0].id, &weight_one.id).unwrap());
    let core = BlockId::new(p2, "1".parse().unwrap(), 1).unwrap();
    assert!(!derived_equivalent(&core, &two[0].id).unwrap());
}
