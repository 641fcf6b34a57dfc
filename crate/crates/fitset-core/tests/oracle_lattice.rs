//! Cross-checks the lattice enumeration against an independent oracle.
//!
//! The oracle closes every subset of at most `max_seed` elements under
//! multiplication alone (in a finite group that already forces a subgroup)
//! and collects the distinct closures. It shares nothing with the lattice
//! builder beyond the multiplication table itself: no bitsets, no BFS
//! frontier, no normal-closure shortcuts. Subgroup and conjugacy-class
//! counts are frozen from hand derivations and a second, out-of-process
//! enumeration; the two enumerations must agree set-for-set.

use std::collections::BTreeSet;
use std::sync::Arc;

use fitset_core::group::{Group, DEFAULT_ORDER_CAP};

fn make(name: &str, degree: usize, gens: &str) -> Arc<Group> {
    Group::parse(
        &format!(r#"{{"name":"{name}","degree":{degree},"generators":{gens}}}"#),
        DEFAULT_ORDER_CAP,
    )
    .unwrap()
}

/// Close `seed` (plus the identity) under pairwise products by fixpoint
/// iteration. Deliberately naive: any error in the fast closure would have
/// to be mirrored here to go unnoticed.
fn oracle_close(g: &Group, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut member = vec![false; n];
    member[0] = true;
    for &s in seed {
        member[s] = true;
    }
    loop {
        let current: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                let c = g.mul(a, b);
                if !member[c] {
                    member[c] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return current;
        }
    }
}

/// Every subgroup obtainable as the closure of at most `max_seed` elements.
fn oracle_subgroups(g: &Group, max_seed: usize) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    out.insert(oracle_close(g, &[]));
    let mut stack: Vec<Vec<usize>> = (1..n).map(|i| vec![i]).collect();
    for seed in &stack {
        out.insert(oracle_close(g, seed));
    }
    for _ in 1..max_seed {
        let mut next = Vec::new();
        for seed in &stack {
            let last = *seed.last().unwrap();
            for i in last + 1..n {
                let mut bigger = seed.clone();
                bigger.push(i);
                out.insert(oracle_close(g, &bigger));
                next.push(bigger);
            }
        }
        stack = next;
    }
    out
}

struct Expected {
    name: &'static str,
    degree: usize,
    gens: &'static str,
    order: usize,
    subgroups: usize,
    classes: usize,
    /// Seed size that provably reaches every subgroup (with one to spare
    /// everywhere a tight bound is known).
    max_seed: usize,
}

/// The bundled corpus. Counts are frozen; the test recomputes them two ways.
const CORPUS: &[Expected] = &[
    Expected { name: "S3", degree: 3, gens: "[[[1,2]],[[1,2,3]]]", order: 6, subgroups: 6, classes: 4, max_seed: 3 },
    Expected { name: "C6", degree: 5, gens: "[[[1,2,3],[4,5]]]", order: 6, subgroups: 4, classes: 4, max_seed: 3 },
    Expected { name: "D8", degree: 4, gens: "[[[1,2,3,4]],[[1,3]]]", order: 8, subgroups: 10, classes: 8, max_seed: 3 },
    Expected { name: "Q8", degree: 8, gens: "[[[1,3,2,4],[5,7,6,8]],[[1,5,2,6],[3,8,4,7]]]", order: 8, subgroups: 6, classes: 6, max_seed: 3 },
    Expected { name: "A4", degree: 4, gens: "[[[1,2,3]],[[1,2],[3,4]]]", order: 12, subgroups: 10, classes: 5, max_seed: 3 },
    Expected { name: "S4", degree: 4, gens: "[[[1,2]],[[1,2,3,4]]]", order: 24, subgroups: 30, classes: 11, max_seed: 3 },
    Expected { name: "SL(2,3)", degree: 8, gens: "[[[1,4,7],[2,8,5]],[[1,6,2,3],[4,7,8,5]]]", order: 24, subgroups: 15, classes: 7, max_seed: 3 },
    Expected { name: "S3xS3", degree: 6, gens: "[[[1,2]],[[1,2,3]],[[4,5]],[[4,5,6]]]", order: 36, subgroups: 60, classes: 22, max_seed: 4 },
    Expected { name: "A5", degree: 5, gens: "[[[1,2,3,4,5]],[[1,2,3]]]", order: 60, subgroups: 59, classes: 9, max_seed: 3 },
];

#[test]
fn lattice_agrees_with_subset_closure_oracle() {
    for exp in CORPUS {
        let g = make(exp.name, exp.degree, exp.gens);
        assert_eq!(g.order(), exp.order, "{}: group order", exp.name);

        let lat = g.lattice().unwrap();
        assert_eq!(lat.len(), exp.subgroups, "{}: lattice count", exp.name);
        assert_eq!(lat.classes().len(), exp.classes, "{}: class count", exp.name);

        let oracle = oracle_subgroups(&g, exp.max_seed);
        assert_eq!(oracle.len(), exp.subgroups, "{}: oracle count", exp.name);

        let from_lattice: BTreeSet<Vec<usize>> =
            (0..lat.len()).map(|i| lat.mask(i).iter().collect()).collect();
        assert_eq!(from_lattice, oracle, "{}: member sets differ", exp.name);
    }
}

#[test]
fn lattice_masks_are_closed_and_ordered() {
    for exp in CORPUS {
        let g = make(exp.name, exp.degree, exp.gens);
        let lat = g.lattice().unwrap();
        for i in 0..lat.len() {
            let mask = lat.mask(i);
            assert!(g.is_subgroup_mask(mask), "{}: index {i} not closed", exp.name);
            assert_eq!(mask.count(), lat.order(i), "{}: cached order at {i}", exp.name);
            assert_eq!(g.order() % lat.order(i), 0, "{}: Lagrange at {i}", exp.name);
            if i > 0 {
                let key = (lat.order(i), lat.mask(i));
                let prev = (lat.order(i - 1), lat.mask(i - 1));
                assert!(prev < key, "{}: ordering broken at {i}", exp.name);
            }
        }
    }
}

#[test]
fn conjugacy_classes_partition_by_orbit() {
    // Orbit-stabilizer: the class of H has size |G| / |N_G(H)|, and classes
    // partition the index range.
    for exp in CORPUS {
        let g = make(exp.name, exp.degree, exp.gens);
        let lat = g.lattice().unwrap();
        let mut seen = vec![false; lat.len()];
        for class in lat.classes() {
            for &i in class {
                let i = i as usize;
                assert!(!seen[i], "{}: index {i} in two classes", exp.name);
                seen[i] = true;
                let nn = lat.order(lat.normalizer_index(i));
                assert_eq!(
                    class.len(),
                    g.order() / nn,
                    "{}: orbit-stabilizer at {i}",
                    exp.name
                );
            }
        }
        assert!(seen.iter().all(|&s| s), "{}: classes miss an index", exp.name);
    }
}
