mod common;

use autotower::constructions::dihedral;
use autotower::towers::{automorphism_tower, TowerCaps};
use common::*;

#[test]
fn stabilizer_chain_matches_closure() {
    let problems = chain_vs_closure(100, 7);
    assert!(problems.is_empty(), "{:#?}", problems);
}

#[test]
fn automorphism_search_matches_bijection_filter() {
    let problems = aut_vs_bijections();
    assert!(problems.is_empty(), "{:#?}", problems);
}

#[test]
fn groups_of_order_at_most_8_are_distinct() {
    let groups = groups_of_order_at_most_8();
    let keys: std::collections::HashSet<_> = groups
        .iter()
        .map(|(_, t)| {
            let t = Table::from_library(t);
            (t.n, t.element_orders(), t.centre_size())
        })
        .collect();
    assert_eq!(keys.len(), 14);
}

#[test]
fn graph_search_matches_brute_force() {
    let problems = graphs_vs_brute(200, 11);
    assert!(problems.is_empty(), "{:#?}", problems);
}

#[test]
fn dihedral_10_tower_matches_generator_image_oracle() {
    let (tau, orders) = oracle_tower(&Table::from_elements(5, &d10_generators()), 5).unwrap();
    assert_eq!((tau, orders.clone()), (1, vec![10, 20]));
    let rec = automorphism_tower(&dihedral(5).unwrap(), TowerCaps::default()).unwrap();
    assert_eq!(rec.tau, tau);
    assert_eq!(rec.orders(), orders.iter().map(|&o| o as u64).collect::<Vec<_>>());
}

#[test]
fn oracle_agrees_on_sym3_and_alt4_closure() {
    let s3 = Table::from_elements(3, &[vec![1, 0, 2], vec![1, 2, 0]]);
    assert_eq!(oracle_tower(&s3, 3), Some((0, vec![6])));
    // Alt(4) has Aut = Sym(4), which is complete.
    let a4 = Table::from_elements(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
    assert_eq!(oracle_tower(&a4, 3), Some((1, vec![12, 24])));
    let rec = automorphism_tower(&autotower::constructions::alt(4).unwrap(), TowerCaps::default()).unwrap();
    assert_eq!((rec.tau, rec.orders()), (1, vec![12, 24]));
}
