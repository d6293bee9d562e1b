mod common;

use aqshape::partitions::{
    beta, compositions_of, fibers_beta, gamma, partitions_of, refinements, refines, Bipartition, OrderedPartition,
    UnorderedPartition,
};
use proptest::prelude::*;

use common::*;

#[test]
fn beta_gamma_laws_exhaustive() {
    for n in 1..=8 {
        for b in all_bipartitions(n) {
            let g = gamma(&b);
            assert!(g.is_in_p1());
            assert_eq!(g.totals(), b.totals());
            assert_eq!(gamma(&g), g);
            assert_eq!(beta(&g).parts(), expand_degenerate(&b).as_slice());
            for (orig, new) in b
                .pairs()
                .iter()
                .filter(|x| x.0 * x.1 > 0)
                .zip(g.pairs().iter().filter(|x| x.0 * x.1 > 0))
            {
                assert_eq!(orig, new);
            }
        }
    }
}

#[test]
fn fiber_counts_match_product_formula() {
    for n in 1..=8u32 {
        for comp in compositions_of(n) {
            for p in 0..=n {
                let q = n - p;
                let fib = fibers_beta(&comp, p, q);
                for b in &fib {
                    assert_eq!(beta(b), comp);
                    assert_eq!(b.totals(), (p, q));
                }
                // Coefficient of x^p in ∏ᵢ Σ_{a+b=nᵢ} x^a.
                let mut poly = vec![1u64];
                for &ni in comp.parts() {
                    let mut next = vec![0u64; poly.len() + ni as usize];
                    for (i, c) in poly.iter().enumerate() {
                        for a in 0..=ni as usize {
                            next[i + a] += c;
                        }
                    }
                    poly = next;
                }
                assert_eq!(fib.len() as u64, poly[p as usize]);
                let mut sorted = fib.clone();
                sorted.sort();
                assert_eq!(fib, sorted);
            }
        }
    }
}

#[test]
fn refinement_is_a_preorder() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for x in &ps {
            assert!(refines(x, x));
            assert!(refines(&UnorderedPartition::ones(n), x));
            let finer = refinements(x);
            for y in &ps {
                assert_eq!(refines(y, x), finer.contains(y), "{y} vs {x}");
            }
        }
        for x in &ps {
            for y in &ps {
                if !refines(x, y) {
                    continue;
                }
                for z in &ps {
                    if refines(y, z) {
                        assert!(refines(x, z));
                    }
                }
            }
        }
    }
}

fn arb_ordered() -> impl Strategy<Value = OrderedPartition> {
    prop::collection::vec(1u32..5, 1..6).prop_map(|v| OrderedPartition::new(v).unwrap())
}

fn arb_bipartition() -> impl Strategy<Value = Bipartition> {
    prop::collection::vec((0u32..4, 0u32..4), 1..6).prop_map(|v| {
        let v: Vec<_> = v.into_iter().filter(|&(p, q)| p + q > 0).collect();
        Bipartition::new(if v.is_empty() { vec![(1, 0)] } else { v }).unwrap()
    })
}

proptest! {
    #[test]
    fn gamma_is_idempotent(b in arb_bipartition()) {
        let g = gamma(&b);
        prop_assert_eq!(gamma(&g), g.clone());
        prop_assert!(g.is_in_p1());
        prop_assert_eq!(beta(&g).rank(), beta(&b).rank());
    }

    #[test]
    fn fibers_are_valid(p in arb_ordered(), split in 0u32..20) {
        let n = p.rank();
        let a = split % (n + 1);
        for b in fibers_beta(&p, a, n - a) {
            prop_assert_eq!(beta(&b), p.clone());
            prop_assert_eq!(b.totals(), (a, n - a));
        }
    }

    #[test]
    fn partition_roundtrip(v in prop::collection::vec(1u32..9, 0..8)) {
        let q = UnorderedPartition::new(v.clone()).unwrap();
        prop_assert!(q.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(q.rank(), v.iter().sum::<u32>());
        let back: UnorderedPartition = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }
}
