use std::collections::BTreeSet;

use polyfock_core::crystal::{Crystal, SignatureOrder};
use polyfock_core::fock::{apply_f, FockVector};
use polyfock_core::partitions::partitions_up_to;
use polyfock_core::weights::{pair_coroot, wt};
use polyfock_core::{Modulus, Partition};

const ORDERS: [SignatureOrder; 2] = [SignatureOrder::RowAscending, SignatureOrder::RowDescending];

fn crystals() -> Vec<Crystal> {
    [0u32, 2, 3, 5].into_iter().flat_map(|p| ORDERS.map(|o| Crystal::with_order(Modulus::new(p).unwrap(), o))).collect()
}

#[test]
fn partial_inverse() {
    for c in crystals() {
        for lambda in partitions_up_to(10) {
            for i in c.modulus().residues_up_to(lambda.size()) {
                if let Some(mu) = c.ftilde(i, &lambda) {
                    assert_eq!(c.etilde(i, &mu), Some(lambda.clone()));
                }
                if let Some(mu) = c.etilde(i, &lambda) {
                    assert_eq!(c.ftilde(i, &mu), Some(lambda.clone()));
                }
            }
        }
    }
}

#[test]
fn string_lengths_and_weights() {
    for c in crystals() {
        let p = c.modulus();
        for lambda in partitions_up_to(10) {
            let w = wt(&lambda, p);
            for i in p.residues_up_to(lambda.size()) {
                let mut phi = 0;
                let mut cur = lambda.clone();
                while let Some(next) = c.ftilde(i, &cur) {
                    assert_eq!(wt(&next, p), wt(&cur, p).minus_root(i));
                    cur = next;
                    phi += 1;
                }
                let mut eps = 0;
                let mut cur = lambda.clone();
                while let Some(next) = c.etilde(i, &cur) {
                    cur = next;
                    eps += 1;
                }
                assert_eq!(c.phi(i, &lambda), phi);
                assert_eq!(c.eps(i, &lambda), eps);
                assert_eq!(phi as i64 - eps as i64, pair_coroot(i, &w), "{} i = {} p = {}", lambda, i, p.get());
            }
        }
    }
}

#[test]
fn crystal_edges_are_fock_edges() {
    for c in crystals() {
        let p = c.modulus();
        for lambda in partitions_up_to(9) {
            for i in p.residues_up_to(lambda.size()) {
                if let Some(mu) = c.ftilde(i, &lambda) {
                    let v = apply_f(i, &FockVector::basis(p, lambda.clone()));
                    assert!(v.support().any(|s| *s == mu));
                }
            }
        }
    }
}

fn distinct_parts(lambda: &Partition) -> bool {
    lambda.parts().windows(2).all(|w| w[0] > w[1])
}

fn restricted(lambda: &Partition, p: usize) -> bool {
    let parts = lambda.parts();
    (0..parts.len()).all(|k| parts[k] - parts.get(k + 1).copied().unwrap_or(0) < p)
}

#[test]
fn empty_component_at_two() {
    let p2 = Modulus::new(2).unwrap();
    for order in ORDERS {
        let g = Crystal::with_order(p2, order).graph(8, &Partition::empty());
        assert_eq!(g.counts_by_size(8), [1, 1, 1, 2, 2, 3, 4, 5, 6]);
        let nodes: BTreeSet<Partition> = g.nodes.iter().cloned().collect();
        let expected: BTreeSet<Partition> = partitions_up_to(8)
            .into_iter()
            .filter(|l| match order {
                SignatureOrder::RowAscending => distinct_parts(l),
                SignatureOrder::RowDescending => restricted(l, 2),
            })
            .collect();
        assert_eq!(nodes, expected);
    }
}

#[test]
fn empty_component_general_p() {
    for p in [3usize, 5] {
        let m = Modulus::new(p as u32).unwrap();
        let g = Crystal::with_order(m, SignatureOrder::RowDescending).graph(8, &Partition::empty());
        let expected: BTreeSet<Partition> = partitions_up_to(8).into_iter().filter(|l| restricted(l, p)).collect();
        assert_eq!(g.nodes.iter().cloned().collect::<BTreeSet<_>>(), expected);
    }
    // no relations at p = 0: every partition is reachable
    let g = Crystal::new(Modulus::ZERO).graph(6, &Partition::empty());
    assert_eq!(g.nodes.len(), partitions_up_to(6).len());
}

#[test]
fn graph_is_deterministic() {
    let c = Crystal::new(Modulus::new(3).unwrap());
    let a = c.graph(6, &Partition::empty());
    let b = c.graph(6, &Partition::empty());
    assert_eq!(a, b);
    for w in a.nodes.windows(2) {
        assert!(w[0].size() < w[1].size() || (w[0].size() == w[1].size() && w[0] > w[1]));
    }
}
