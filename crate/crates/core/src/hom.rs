//! Exact digraph homomorphism search.
//!
//! Backtracking over the source vertices in a fixed order (largest total
//! degree first, ties by index), trying target vertices in increasing
//! index. Each assignment filters the candidate sets of the unassigned
//! neighbours of the assigned vertex through the target's adjacency rows,
//! and a branch dies as soon as some candidate set is empty. The first
//! witness found is therefore the lexicographically first one in that
//! variable order.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::digraph::Digraph;
use crate::{Error, Result};

/// A homomorphism `source vertex -> target vertex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomWitness {
    map: Vec<usize>,
}

impl HomWitness {
    pub fn new(map: Vec<usize>) -> Self {
        HomWitness { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    /// Arc-by-arc check that this is a homomorphism `g -> h`.
    pub fn verify(&self, g: &Digraph, h: &Digraph) -> bool {
        self.map.len() == g.vertex_count()
            && self.map.iter().all(|&t| t < h.vertex_count())
            && g.arcs()
                .into_iter()
                .all(|(u, v)| h.has_arc(self.map[u], self.map[v]))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HomWitness) -> HomWitness {
        HomWitness::new(self.map.iter().map(|&t| other.map[t]).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomOptions {
    pub max_source: usize,
    pub max_target: usize,
    /// The caller guarantees the target is vertex-transitive, so existence
    /// queries may pin the first source vertex to target vertex 0. Ignored
    /// when counting.
    pub vertex_transitive_target: bool,
}

impl Default for HomOptions {
    fn default() -> Self {
        HomOptions {
            max_source: 64,
            max_target: 10_000,
            vertex_transitive_target: false,
        }
    }
}

impl HomOptions {
    pub fn vertex_transitive(mut self) -> Self {
        self.vertex_transitive_target = true;
        self
    }
}

/// A witness for `g -> h`, or `None` when no homomorphism exists.
pub fn hom_exists(g: &Digraph, h: &Digraph) -> Result<Option<HomWitness>> {
    hom_exists_with(g, h, &HomOptions::default())
}

pub fn hom_exists_with(g: &Digraph, h: &Digraph, opts: &HomOptions) -> Result<Option<HomWitness>> {
    let mut search = Search::new(g, h, opts)?;
    let mut found = None;
    let pin = opts.vertex_transitive_target;
    search.run(pin, &mut |map| {
        found = Some(HomWitness::new(map.to_vec()));
        true
    });
    debug_assert!(found.as_ref().is_none_or(|w| w.verify(g, h)));
    Ok(found)
}

/// Decides `g ⪯ h`, i.e. whether the complement of `g` maps to the
/// complement of `h`.
pub fn preorder_leq(g: &Digraph, h: &Digraph) -> Result<bool> {
    Ok(hom_exists(&g.complement(), &h.complement())?.is_some())
}

/// Number of homomorphisms `g -> h`, stopping once `limit` is reached.
pub fn hom_count(g: &Digraph, h: &Digraph, limit: u64) -> Result<u64> {
    let mut search = Search::new(g, h, &HomOptions::default())?;
    let mut count = 0u64;
    if limit == 0 {
        return Ok(0);
    }
    search.run(false, &mut |_| {
        count += 1;
        count >= limit
    });
    Ok(count)
}

struct Search<'a> {
    g: &'a Digraph,
    h: &'a Digraph,
    order: Vec<usize>,
    assign: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Digraph, h: &'a Digraph, opts: &HomOptions) -> Result<Self> {
        Error::check_size("homomorphism source", opts.max_source, g.vertex_count())?;
        Error::check_size("homomorphism target", opts.max_target, h.vertex_count())?;
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(g.out_degree(v) + g.in_degree(v)));
        Ok(Search {
            g,
            h,
            order,
            assign: vec![usize::MAX; g.vertex_count()],
        })
    }

    /// Calls `visit` on every homomorphism in search order until it returns
    /// `true`. Returns whether the search was stopped.
    fn run(&mut self, pin_first: bool, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.vertex_count();
        if n == 0 {
            return visit(&[]);
        }
        let m = self.h.vertex_count();
        let mut full = FixedBitSet::with_capacity(m);
        full.insert_range(..);
        let mut domains = vec![full; n];
        if pin_first && m > 0 {
            let mut only_zero = FixedBitSet::with_capacity(m);
            only_zero.insert(0);
            domains[self.order[0]] = only_zero;
        }
        self.descend(0, &domains, visit)
    }

    fn descend(
        &mut self,
        depth: usize,
        domains: &[FixedBitSet],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            return visit(&self.assign);
        }
        let u = self.order[depth];
        for t in domains[u].ones() {
            let mut next = domains.to_vec();
            let mut dead = false;
            for x in self.g.out_neighbors(u) {
                if self.assign[x] == usize::MAX && x != u {
                    next[x].intersect_with(self.h.out_row(t));
                    dead |= next[x].is_clear();
                }
            }
            for x in self.g.in_neighbors(u) {
                if self.assign[x] == usize::MAX && x != u {
                    next[x].intersect_with(self.h.in_row(t));
                    dead |= next[x].is_clear();
                }
            }
            if dead {
                continue;
            }
            self.assign[u] = t;
            let stop = self.descend(depth + 1, &next, visit);
            self.assign[u] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
        (0..=max_n, any::<u64>()).prop_map(|(n, mask)| {
            let pairs = n * n.saturating_sub(1);
            Digraph::from_arc_mask(n, mask & ((1u64 << pairs) - 1))
        })
    }

    /// Every map `V(g) -> V(h)`, checked arc by arc.
    fn all_maps(g: &Digraph, h: &Digraph) -> Vec<Vec<usize>> {
        let (n, m) = (g.vertex_count(), h.vertex_count());
        if n == 0 {
            return vec![Vec::new()];
        }
        if m == 0 {
            return Vec::new();
        }
        (0..m.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let t = code % m;
                        code /= m;
                        t
                    })
                    .collect::<Vec<_>>()
            })
            .filter(|map| g.arcs().into_iter().all(|(u, v)| h.has_arc(map[u], map[v])))
            .collect()
    }

    #[test]
    fn identity_and_cycles() {
        let c3 = Digraph::directed_cycle(3);
        let w = hom_exists(&c3, &c3).unwrap().unwrap();
        assert!(w.verify(&c3, &c3));
        assert_eq!(hom_exists(&c3, &Digraph::directed_cycle(6)).unwrap(), None);
        assert!(hom_exists(&Digraph::directed_cycle(6), &c3).unwrap().is_some());
    }

    #[test]
    fn counting() {
        let c3 = Digraph::directed_cycle(3);
        assert_eq!(hom_count(&c3, &c3, 100).unwrap(), 3);
        let h = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(hom_count(&Digraph::new(1), &h, 100).unwrap(), 4);
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(hom_count(&arc, &h, 100).unwrap(), 4);
        assert_eq!(hom_count(&Digraph::new(3), &h, 10).unwrap(), 10);
    }

    #[test]
    fn preorder_examples() {
        let c3 = Digraph::directed_cycle(3);
        assert!(preorder_leq(&c3, &c3).unwrap());
        // complement of the edgeless graph is K3, which has no image in the
        // reverse 3-cycle
        assert!(!preorder_leq(&Digraph::edgeless(3), &c3).unwrap());
        assert!(preorder_leq(&c3, &Digraph::edgeless(3)).unwrap());
    }

    #[test]
    fn size_caps() {
        let big = Digraph::new(65);
        assert!(matches!(
            hom_exists(&big, &Digraph::new(1)),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn pinning_on_transitive_targets_keeps_the_first_witness() {
        let c6 = Digraph::directed_cycle(6);
        let g = Digraph::directed_cycle(3).disjoint_union(&Digraph::directed_cycle(2));
        let k6 = Digraph::complete(6);
        for target in [&c6, &k6] {
            let plain = hom_exists(target, target).unwrap();
            let pinned = hom_exists_with(target, target, &HomOptions::default().vertex_transitive()).unwrap();
            assert_eq!(plain, pinned);
        }
        let plain = hom_exists(&g, &k6).unwrap();
        let pinned = hom_exists_with(&g, &k6, &HomOptions::default().vertex_transitive()).unwrap();
        assert_eq!(plain, pinned);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn agrees_with_naive_enumeration(g in graph_strategy(5), h in graph_strategy(5)) {
            let maps = all_maps(&g, &h);
            let found = hom_exists(&g, &h).unwrap();
            prop_assert_eq!(found.is_some(), !maps.is_empty());
            if let Some(w) = &found {
                prop_assert!(w.verify(&g, &h));
            }
            prop_assert_eq!(hom_count(&g, &h, u64::MAX).unwrap(), maps.len() as u64);
        }

        #[test]
        fn homomorphisms_compose(a in graph_strategy(4), b in graph_strategy(4), c in graph_strategy(4)) {
            if let (Some(ab), Some(bc)) = (hom_exists(&a, &b).unwrap(), hom_exists(&b, &c).unwrap()) {
                prop_assert!(ab.then(&bc).verify(&a, &c));
                prop_assert!(hom_exists(&a, &c).unwrap().is_some());
            }
        }

        #[test]
        fn preorder_is_reflexive_and_transitive(a in graph_strategy(4), b in graph_strategy(4), c in graph_strategy(4)) {
            prop_assert!(preorder_leq(&a, &a).unwrap());
            if preorder_leq(&a, &b).unwrap() && preorder_leq(&b, &c).unwrap() {
                prop_assert!(preorder_leq(&a, &c).unwrap());
            }
        }
    }
}
