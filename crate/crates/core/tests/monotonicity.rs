//! `G ⪯ H` implies `lind_q(G) <= lind_q(H)`.

use std::collections::BTreeMap;

use lindex_core::digraph::canonical_form;
use lindex_core::hom::preorder_leq;
use lindex_core::lind::{minrank, SideInfoProblem};
use lindex_core::{Digraph, FiniteField};

/// One representative per isomorphism class on `1..=max_n` vertices, with
/// its minrank.
fn classes(max_n: usize, f: &FiniteField) -> Vec<(Digraph, usize)> {
    let mut seen = BTreeMap::new();
    for n in 1..=max_n {
        for g in Digraph::all_labelled(n) {
            seen.entry(canonical_form(&g).unwrap()).or_insert(g);
        }
    }
    seen.into_values()
        .map(|g| {
            let k = minrank(&SideInfoProblem::new(g.clone()), f).unwrap().0;
            (g, k)
        })
        .collect()
}

fn check(max_n: usize, q: u32) -> usize {
    let f = FiniteField::new(q).unwrap();
    let reps = classes(max_n, &f);
    let mut comparable = 0;
    for (g, kg) in &reps {
        for (h, kh) in &reps {
            if preorder_leq(g, h).unwrap() {
                comparable += 1;
                assert!(kg <= kh, "{g:?} ⪯ {h:?} but {kg} > {kh}");
            }
        }
    }
    comparable
}

#[test]
fn monotone_over_f2_up_to_four_vertices() {
    // 1 + 3 + 16 + 218 classes
    assert_eq!(classes(4, &FiniteField::new(2).unwrap()).len(), 238);
    assert!(check(4, 2) > 0);
}

#[test]
fn monotone_over_f3_up_to_three_vertices() {
    assert!(check(3, 3) > 0);
}
