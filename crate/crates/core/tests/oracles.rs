//! Enumeration, lattice and counting results checked against brute-force
//! oracles that only read the multiplication table.

use std::collections::BTreeSet;

use subgraph_core::arith::{divisor_count, gcd, prime_divisors};
use subgraph_core::harness::{default_corpus, elementary_abelian_group};
use subgraph_core::lattice::{build_lattice, regularity};
use subgraph_core::subgroup::{all_subgroups, centralizer, minimal_subgroups, normalizer};
use subgraph_core::{Group, GroupSpec, Lattice, Limits};

fn lim() -> Limits {
    Limits::default()
}

fn lattice(g: &Group) -> Lattice {
    build_lattice(g, &all_subgroups(g, &lim()).unwrap()).unwrap()
}

/// Every subset containing the identity that is closed under the product.
fn brute_force_subgroups(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20);
    let e = g.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << others.len()) {
        let mut inside = vec![false; n];
        inside[e] = true;
        for (bit, &x) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                inside[x] = true;
            }
        }
        let members: Vec<usize> = (0..n).filter(|&x| inside[x]).collect();
        if members.iter().all(|&a| members.iter().all(|&b| inside[g.mul(a, b)])) {
            out.insert(members);
        }
    }
    out
}

/// Cover pairs by checking every third vertex for betweenness.
fn brute_force_covers(subs: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let sets: Vec<BTreeSet<usize>> = subs.iter().map(|s| s.iter().copied().collect()).collect();
    let lt = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| a.len() < b.len() && a.is_subset(b);
    let mut covers = Vec::new();
    for i in 0..sets.len() {
        for j in 0..sets.len() {
            if lt(&sets[i], &sets[j]) && !(0..sets.len()).any(|k| lt(&sets[i], &sets[k]) && lt(&sets[k], &sets[j])) {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    covers
}

fn built(spec: &str) -> Group {
    GroupSpec::parse(spec).unwrap().build(&lim()).unwrap()
}

#[test]
fn enumeration_matches_subset_brute_force() {
    for spec in [
        "C1", "C2", "C6", "C8", "C12", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "S3", "D4", "D5", "D6", "Q8", "A4",
        "C2xS3",
    ] {
        let g = built(spec);
        let ours: BTreeSet<Vec<usize>> = all_subgroups(&g, &lim()).unwrap().iter().map(|h| h.elements()).collect();
        assert_eq!(ours, brute_force_subgroups(&g), "{spec}");
    }
}

#[test]
fn covers_match_betweenness_brute_force() {
    for spec in ["C12", "S3", "D4", "Q8", "A4", "C2xC2xC2", "S4", "C2xD6", "C24", "D12", "C2xC2xC6"] {
        let g = built(spec);
        let lat = lattice(&g);
        let subs: Vec<Vec<usize>> = lat.vertices().iter().map(|h| h.elements()).collect();
        assert_eq!(lat.covers(), brute_force_covers(&subs).as_slice(), "{spec}");
    }
}

#[test]
fn spec_counts() {
    assert_eq!(lattice(&built("C12")).edge_count(), 7);
    assert_eq!(lattice(&built("S3")).edge_count(), 8);
    assert_eq!(lattice(&built("D4")).len(), 10);
    assert_eq!(lattice(&built("C2xC2xC2")).len(), 16);
    assert_eq!(lattice(&built("S4")).len(), 30);
    assert_eq!(lattice(&built("A5")).len(), 59);
    assert_eq!(lattice(&built("A4")).len(), 10);
}

#[test]
fn cyclic_groups_have_tau_n_subgroups() {
    for n in 1..=200 {
        let g = Group::cyclic(n, &lim()).unwrap();
        let subs = all_subgroups(&g, &lim()).unwrap();
        assert_eq!(subs.len() as u64, divisor_count(n as u64), "C{n}");
        let orders: BTreeSet<usize> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders.len(), subs.len(), "C{n}: subgroup orders are unique");
    }
}

#[test]
fn alpha_p_matches_element_counts_on_census() {
    for spec in default_corpus(60) {
        let g = spec.build(&lim()).unwrap();
        let lat = lattice(&g);
        let table = minimal_subgroups(lat.vertices());
        let orders = g.element_orders();
        for p in prime_divisors(g.order() as u64) {
            let count = orders.iter().filter(|&&o| o as u64 == p).count();
            assert_eq!(table.alpha_p(p) * (p as usize - 1), count, "{spec} p={p}");
        }
        assert_eq!(lat.degree(lat.bottom()).unwrap().delta, table.alpha(), "{spec}");
    }
}

#[test]
fn elementary_abelian_maximal_counts() {
    for (p, d, expected) in [(2, 2, 3), (2, 3, 7), (3, 2, 4), (5, 2, 6), (2, 4, 15), (3, 3, 13)] {
        let g = elementary_abelian_group(p, d, &lim()).unwrap();
        let lat = lattice(&g);
        // oracle: count vertices covered by the top, by betweenness over all vertices
        let top = lat.top();
        let covered = (0..top)
            .filter(|&i| {
                let h = lat.vertex(i);
                !(0..top).any(|k| k != i && h.is_proper_subgroup_of(lat.vertex(k)))
            })
            .count();
        assert_eq!(covered, expected, "({p},{d})");
    }
}

#[test]
fn direct_product_of_cyclics_is_cyclic_iff_coprime() {
    for m in 1..=12 {
        for n in 1..=12 {
            let g = Group::direct_product(&Group::cyclic(m, &lim()).unwrap(), &Group::cyclic(n, &lim()).unwrap(), &lim())
                .unwrap();
            assert_eq!(g.is_cyclic(), gcd(m as u64, n as u64) == 1, "C{m}xC{n}");
        }
    }
}

#[test]
fn cayley_round_trip_preserves_element_orders() {
    for n in 1..=24 {
        let g = Group::cyclic(n, &lim()).unwrap();
        let table: Vec<Vec<usize>> = (0..n).map(|a| g.row(a).to_vec()).collect();
        let back = Group::from_cayley_table(&table, &lim()).unwrap();
        assert_eq!(back.order_multiset(), g.order_multiset(), "C{n}");
    }
}

#[test]
fn census_groups_satisfy_table_and_lagrange_invariants() {
    for spec in default_corpus(60) {
        let g = spec.build(&lim()).unwrap();
        g.check_table().unwrap();
        for a in 0..g.order() {
            assert_eq!(g.order() % g.element_order(a).unwrap(), 0, "{spec}");
        }
        if g.is_cyclic() {
            assert!(g.is_abelian(), "{spec}");
        }
        let lat = lattice(&g);
        let delta_sum: usize = lat.deltas().iter().sum();
        assert_eq!(delta_sum, 2 * lat.edge_count(), "{spec}");
        for h in lat.vertices() {
            assert_eq!(g.order() % h.order(), 0, "{spec}");
            let c = centralizer(&g, h).unwrap();
            let n = normalizer(&g, h).unwrap();
            assert!(c.is_subgroup_of(&n), "{spec}");
            assert!(h.is_subgroup_of(&n), "{spec}");
        }
        for &(i, j) in lat.covers() {
            assert!(i < j);
            assert_eq!(lat.vertex(j).order() % lat.vertex(i).order(), 0);
            assert!(lat.vertex(i).order() < lat.vertex(j).order());
        }
    }
}

#[test]
fn squarefree_cyclic_lattices_are_boolean() {
    for (n, t) in [(1, 0), (2, 1), (6, 2), (30, 3), (210, 4)] {
        let limits = Limits::with_max_order(210);
        let g = Group::cyclic(n, &limits).unwrap();
        let lat = build_lattice(&g, &all_subgroups(&g, &limits).unwrap()).unwrap();
        assert_eq!(lat.len(), 1 << t, "C{n}");
        assert!(lat.deltas().iter().all(|&d| d == t), "C{n}");
        assert_eq!(lat.edge_count(), t * (1 << t) / 2);
        assert!(regularity(&lat).is_regular);
    }
}

#[test]
fn prime_power_cyclic_lattices_are_chains() {
    for (p, k) in [(2usize, 1u32), (2, 2), (2, 5), (3, 3), (5, 2), (7, 2)] {
        let g = Group::cyclic(p.pow(k), &lim()).unwrap();
        let lat = lattice(&g);
        let deltas = lat.deltas();
        let mut expected = vec![2; k as usize + 1];
        expected[0] = 1;
        expected[k as usize] = 1;
        assert_eq!(deltas, expected, "C{}", p.pow(k));
        assert_eq!(regularity(&lat).is_regular, k == 1);
    }
}
