//! Exact clique, colouring and induced-homomorphism searches.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{Coloring, Digraph};
use crate::{Error, Result};

/// Vertex cap for clique and colouring searches.
pub const DEFAULT_EXACT_CAP: usize = 64;
/// Vertex cap for [`largest_induced_hom_subgraph`].
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// Branch and bound for a maximum clique of an undirected graph given by
/// adjacency rows, pruning with greedy colour classes.
struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `p` in its given order; returns the vertices
    /// sorted by colour and each one's colour number (1-based).
    fn color_sort(&self, p: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in p {
            match classes
                .iter_mut()
                .find(|cls| cls.iter().all(|&u| !self.adj[v].contains(u)))
            {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(p.len());
        let mut bound = Vec::with_capacity(p.len());
        for (c, cls) in classes.into_iter().enumerate() {
            for v in cls {
                order.push(v);
                bound.push(c + 1);
            }
        }
        (order, bound)
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: &[usize]) {
        let (order, bound) = self.color_sort(p);
        for i in (0..order.len()).rev() {
            if r.len() + bound[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            r.push(v);
            let next: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&u| self.adj[v].contains(u))
                .collect();
            if next.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &next);
            }
            r.pop();
        }
    }
}

fn max_clique_of(adj: &[FixedBitSet]) -> Vec<usize> {
    let mut search = CliqueSearch {
        adj,
        best: Vec::new(),
    };
    // Higher degree first tends to find large cliques early.
    let mut p: Vec<usize> = (0..adj.len()).collect();
    p.sort_by_key(|&v| core::cmp::Reverse(adj[v].count_ones(..)));
    search.expand(&mut Vec::new(), &p);
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// A largest set of vertices pairwise joined by arcs in both directions.
pub fn max_clique(g: &Digraph) -> Result<Vec<usize>> {
    max_clique_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn max_clique_with_cap(g: &Digraph, cap: usize) -> Result<Vec<usize>> {
    Error::check_size("clique search", cap, g.vertex_count())?;
    let adj: Vec<FixedBitSet> = (0..g.vertex_count()).map(|v| g.bidirectional_row(v)).collect();
    Ok(max_clique_of(&adj))
}

/// `omega(G)`.
pub fn clique_number(g: &Digraph) -> Result<usize> {
    max_clique(g).map(|c| c.len())
}

/// A largest set of vertices with no arc between any two of them.
pub fn max_independent_set(g: &Digraph) -> Result<Vec<usize>> {
    max_clique(&g.complement())
}

/// `alpha(G) = omega(complement(G))`.
pub fn independence_number(g: &Digraph) -> Result<usize> {
    max_independent_set(g).map(|s| s.len())
}

/// Exact chromatic number (arcs conflict in either direction) with a
/// witness colouring.
pub fn chromatic_number(g: &Digraph) -> Result<(usize, Coloring)> {
    chromatic_number_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn chromatic_number_with_cap(g: &Digraph, cap: usize) -> Result<(usize, Coloring)> {
    let n = g.vertex_count();
    Error::check_size("chromatic number", cap, n)?;
    if n == 0 {
        return Ok((
            0,
            Coloring {
                assignment: Vec::new(),
                num_colors: 0,
            },
        ));
    }
    let adj: Vec<FixedBitSet> = (0..n).map(|v| g.undirected_row(v)).collect();
    let clique = max_clique_of(&adj);

    let mut search = ColoringSearch::new(&adj);
    let greedy = search.dsatur_greedy();
    let greedy_colors = greedy.iter().max().map_or(0, |c| c + 1);
    search.best = greedy;
    search.best_colors = greedy_colors;

    if clique.len() < greedy_colors {
        // Seed the clique with distinct colours; any optimal colouring can
        // be permuted to agree on it.
        let mut colors = vec![usize::MAX; n];
        for (c, &v) in clique.iter().enumerate() {
            colors[v] = c;
        }
        search.colors = colors;
        search.lower = clique.len();
        search.branch(clique.len());
    }

    let coloring = Coloring {
        assignment: search.best,
        num_colors: search.best_colors,
    };
    debug_assert!(coloring.is_proper(g));
    Ok((coloring.num_colors, coloring))
}

struct ColoringSearch<'a> {
    adj: &'a [FixedBitSet],
    colors: Vec<usize>,
    best: Vec<usize>,
    best_colors: usize,
    lower: usize,
}

impl<'a> ColoringSearch<'a> {
    fn new(adj: &'a [FixedBitSet]) -> Self {
        ColoringSearch {
            adj,
            colors: vec![usize::MAX; adj.len()],
            best: Vec::new(),
            best_colors: usize::MAX,
            lower: 0,
        }
    }

    fn saturation(&self, v: usize) -> (usize, usize) {
        let mut seen = FixedBitSet::with_capacity(self.adj.len());
        let mut uncolored = 0;
        for u in self.adj[v].ones() {
            match self.colors[u] {
                usize::MAX => uncolored += 1,
                c => seen.insert(c),
            }
        }
        (seen.count_ones(..), uncolored)
    }

    /// Uncoloured vertex with the most distinct neighbour colours, then the
    /// most uncoloured neighbours, then the smallest index.
    fn pick(&self) -> Option<usize> {
        (0..self.adj.len())
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by(|&a, &b| self.saturation(a).cmp(&self.saturation(b)).then(b.cmp(&a)))
    }

    fn dsatur_greedy(&mut self) -> Vec<usize> {
        while let Some(v) = self.pick() {
            let c = (0..)
                .find(|&c| self.adj[v].ones().all(|u| self.colors[u] != c))
                .unwrap();
            self.colors[v] = c;
        }
        core::mem::replace(&mut self.colors, vec![usize::MAX; self.adj.len()])
    }

    fn branch(&mut self, used: usize) {
        if self.best_colors == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_colors {
                self.best_colors = used;
                self.best = self.colors.clone();
            }
            return;
        };
        let limit = (used + 1).min(self.best_colors - 1);
        for c in 0..limit {
            if self.adj[v].ones().any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.branch(used.max(c + 1));
            self.colors[v] = usize::MAX;
            if self.best_colors == self.lower {
                return;
            }
        }
    }
}

/// Result of [`largest_induced_hom_subgraph`]: the size `N(G, K)`, a vertex
/// set achieving it, and the homomorphism from the induced subgraph to `K`
/// (indexed like `vertices`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedHomSubgraph {
    pub size: usize,
    pub vertices: Vec<usize>,
    pub map: Vec<usize>,
}

/// `N(G, K)`: the order of the largest induced subgraph of `G` that maps
/// homomorphically to `K`. For `K` the complete digraph on `l` vertices this
/// is the largest `l`-colourable induced subgraph.
pub fn largest_induced_hom_subgraph(g: &Digraph, k: &Digraph) -> Result<InducedHomSubgraph> {
    largest_induced_hom_subgraph_with_cap(g, k, DEFAULT_SUBSET_CAP)
}

pub fn largest_induced_hom_subgraph_with_cap(
    g: &Digraph,
    k: &Digraph,
    cap: usize,
) -> Result<InducedHomSubgraph> {
    let n = g.vertex_count();
    Error::check_size("induced subgraph search", cap, n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.out_degree(v) + g.in_degree(v)));
    let symmetric_target = k.arc_count() == k.vertex_count() * k.vertex_count().saturating_sub(1);
    let mut search = PartialHomSearch {
        g,
        k,
        order,
        assign: vec![None; n],
        best: vec![None; n],
        best_size: 0,
        symmetric_target,
    };
    search.run(0, 0, 0);
    let mut pairs: Vec<(usize, usize)> = search
        .best
        .iter()
        .enumerate()
        .filter_map(|(v, t)| t.map(|t| (v, t)))
        .collect();
    pairs.sort_unstable();
    Ok(InducedHomSubgraph {
        size: search.best_size,
        vertices: pairs.iter().map(|p| p.0).collect(),
        map: pairs.iter().map(|p| p.1).collect(),
    })
}

/// Include/exclude branching over the vertices of `G`, assigning each
/// included vertex an image in `K` consistent with its included neighbours.
struct PartialHomSearch<'a> {
    g: &'a Digraph,
    k: &'a Digraph,
    order: Vec<usize>,
    assign: Vec<Option<usize>>,
    best: Vec<Option<usize>>,
    best_size: usize,
    /// `K` is complete, so images are interchangeable and only one unused
    /// image needs to be tried.
    symmetric_target: bool,
}

impl PartialHomSearch<'_> {
    fn consistent(&self, v: usize, t: usize) -> bool {
        self.g.out_neighbors(v).all(|u| match self.assign[u] {
            Some(s) => self.k.has_arc(t, s),
            None => true,
        }) && self.g.in_neighbors(v).all(|u| match self.assign[u] {
            Some(s) => self.k.has_arc(s, t),
            None => true,
        })
    }

    fn run(&mut self, idx: usize, count: usize, images_used: usize) {
        let n = self.order.len();
        if count + (n - idx) <= self.best_size {
            return;
        }
        if idx == n {
            self.best_size = count;
            self.best = self.assign.clone();
            return;
        }
        let v = self.order[idx];
        let targets = if self.symmetric_target {
            (images_used + 1).min(self.k.vertex_count())
        } else {
            self.k.vertex_count()
        };
        for t in 0..targets {
            if self.consistent(v, t) {
                self.assign[v] = Some(t);
                self.run(idx + 1, count + 1, images_used.max(t + 1));
                self.assign[v] = None;
            }
        }
        self.run(idx + 1, count, images_used);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom_exists;
    use proptest::prelude::*;

    fn tournament(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
        (0..=max_n, any::<u64>()).prop_map(|(n, mask)| {
            let pairs = n * n.saturating_sub(1);
            let mask = if pairs >= 64 { mask } else { mask & ((1u64 << pairs) - 1) };
            Digraph::from_arc_mask(n, mask)
        })
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Digraph::complete(4)).unwrap(), 4);
        assert_eq!(clique_number(&tournament(6)).unwrap(), 1);
        assert_eq!(clique_number(&Digraph::directed_cycle(3)).unwrap(), 1);
        assert_eq!(clique_number(&Digraph::new(0)).unwrap(), 0);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Digraph::edgeless(5)).unwrap(), 5);
        assert_eq!(independence_number(&Digraph::complete(5)).unwrap(), 1);
        assert_eq!(independence_number(&tournament(5)).unwrap(), 1);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Digraph::complete(4)).unwrap().0, 4);
        assert_eq!(chromatic_number(&Digraph::edgeless(4)).unwrap().0, 1);
        let reverse_c3 = Digraph::directed_cycle(3).complement();
        assert_eq!(chromatic_number(&reverse_c3).unwrap().0, 3);
        assert_eq!(chromatic_number(&Digraph::directed_cycle(4)).unwrap().0, 2);
        assert_eq!(chromatic_number(&Digraph::directed_cycle(5)).unwrap().0, 3);
    }

    #[test]
    fn caps_are_enforced() {
        let g = Digraph::new(65);
        assert!(matches!(clique_number(&g), Err(Error::SizeLimitExceeded { .. })));
        assert!(matches!(
            largest_induced_hom_subgraph(&Digraph::new(21), &Digraph::complete(1)),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn induced_hom_examples() {
        let k1 = Digraph::complete(1);
        let k2 = Digraph::complete(2);
        assert_eq!(largest_induced_hom_subgraph(&Digraph::edgeless(6), &k1).unwrap().size, 6);
        assert_eq!(largest_induced_hom_subgraph(&Digraph::complete(4), &k2).unwrap().size, 2);
        assert_eq!(largest_induced_hom_subgraph(&Digraph::new(0), &k1).unwrap().size, 0);
        // C5 loses one vertex to become bipartite
        assert_eq!(largest_induced_hom_subgraph(&Digraph::directed_cycle(5), &k2).unwrap().size, 4);
    }

    /// Every proper colouring with `c` colours, by enumeration.
    fn colorable_brute(g: &Digraph, c: usize) -> bool {
        let n = g.vertex_count();
        if n == 0 {
            return true;
        }
        if c == 0 {
            return false;
        }
        let total = c.pow(n as u32);
        (0..total).any(|mut code| {
            let mut colors = vec![0; n];
            for slot in colors.iter_mut() {
                *slot = code % c;
                code /= c;
            }
            g.arcs().into_iter().all(|(u, v)| colors[u] != colors[v])
        })
    }

    /// Largest induced subgraph mapping to `K`, by subset enumeration with
    /// the homomorphism solver as decision procedure.
    fn induced_hom_brute(g: &Digraph, k: &Digraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|&s| {
                let vs: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
                hom_exists(&g.induced_subgraph(&vs), k).unwrap().is_some()
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn chromatic_number_is_optimal(g in graph_strategy(8)) {
            let (chi, coloring) = chromatic_number(&g).unwrap();
            prop_assert!(coloring.is_proper(&g));
            prop_assert_eq!(coloring.num_colors, chi);
            if chi > 0 {
                prop_assert!(!colorable_brute(&g, chi - 1));
            }
            prop_assert!(clique_number(&g).unwrap() <= chi);
        }

        #[test]
        fn alpha_is_omega_of_complement(g in graph_strategy(9)) {
            let a = max_independent_set(&g).unwrap();
            prop_assert_eq!(a.len(), clique_number(&g.complement()).unwrap());
            for (i, &u) in a.iter().enumerate() {
                for &v in &a[i + 1..] {
                    prop_assert!(!g.adjacent(u, v));
                }
            }
            // brute force over subsets
            let n = g.vertex_count();
            let brute = (0u32..1 << n)
                .filter(|&s| (0..n).all(|u| (0..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || !g.has_arc(u, v))))
                .map(u32::count_ones)
                .max()
                .unwrap() as usize;
            prop_assert_eq!(a.len(), brute);
        }

        #[test]
        fn induced_hom_matches_subset_oracle(g in graph_strategy(6), l in 1usize..4, use_cycle in any::<bool>()) {
            let k = if use_cycle { Digraph::directed_cycle(l + 1) } else { Digraph::complete(l) };
            let found = largest_induced_hom_subgraph(&g, &k).unwrap();
            prop_assert_eq!(found.size, induced_hom_brute(&g, &k));
            let sub = g.induced_subgraph(&found.vertices);
            for (a, b) in sub.arcs() {
                prop_assert!(k.has_arc(found.map[a], found.map[b]));
            }
        }

        #[test]
        fn induced_hom_is_monotone_under_adding_arcs(g in graph_strategy(7), extra in any::<u64>(), l in 1usize..3) {
            let k = Digraph::complete(l);
            let n = g.vertex_count();
            let pairs = n * n.saturating_sub(1);
            let extra = if pairs >= 64 { extra } else { extra & ((1u64 << pairs) - 1) };
            let mut denser = g.clone();
            for (u, v) in Digraph::from_arc_mask(n, extra).arcs() {
                denser.add_arc(u, v).unwrap();
            }
            prop_assert!(
                largest_induced_hom_subgraph(&denser, &k).unwrap().size
                    <= largest_induced_hom_subgraph(&g, &k).unwrap().size
            );
        }

        #[test]
        fn n_with_k1_is_alpha(g in graph_strategy(9)) {
            prop_assert_eq!(
                largest_induced_hom_subgraph(&g, &Digraph::complete(1)).unwrap().size,
                independence_number(&g).unwrap()
            );
        }
    }
}
