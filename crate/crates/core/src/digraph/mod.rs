//! Loopless digraphs and exact graph parameters.
//!
//! Colourings treat an arc in either direction as a conflict, so the
//! chromatic number of a digraph is that of its underlying undirected
//! graph. Cliques need arcs in both directions between every pair.

mod core_retract;
mod search;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

pub use core_retract::{are_isomorphic, canonical_form, core, is_directed_cycle, DEFAULT_CORE_CAP, ISOMORPHISM_CAP};
pub use search::{
    chromatic_number, chromatic_number_with_cap, clique_number, independence_number,
    largest_induced_hom_subgraph, largest_induced_hom_subgraph_with_cap, max_clique,
    max_clique_with_cap, max_independent_set, InducedHomSubgraph, DEFAULT_EXACT_CAP,
    DEFAULT_SUBSET_CAP,
};

/// A loopless directed graph on vertices `0..n`.
///
/// Equality compares structure only; vertex labels are ignored.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    out: Vec<FixedBitSet>,
    inn: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl Digraph {
    /// The edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            out: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            inn: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            labels: None,
        }
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n)
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Self {
        Self::new(n).complement()
    }

    /// `0 -> 1 -> ... -> n-1 -> 0`. For `n = 2` this is a bidirectional edge.
    pub fn directed_cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 2 {
            for i in 0..n {
                g.insert_arc(i, (i + 1) % n);
            }
        }
        g
    }

    /// Assembles a digraph from matching out- and in-adjacency rows.
    pub(crate) fn from_rows(out: Vec<FixedBitSet>, inn: Vec<FixedBitSet>) -> Self {
        debug_assert_eq!(out.len(), inn.len());
        debug_assert!(out.iter().enumerate().all(|(u, r)| !r.contains(u)));
        Digraph {
            n: out.len(),
            out,
            inn,
            labels: None,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// The digraph whose arcs are the set bits of `mask`, with bit `b`
    /// standing for the `b`-th ordered pair `(i, j)`, `i != j`, in
    /// row-major order. Enumerating `0..2^(n(n-1))` lists every labelled
    /// loopless digraph on `n` vertices once. Pairs past the 64th are never
    /// arcs.
    pub fn from_arc_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::new(n);
        let mut bit = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    if bit < 64 && mask >> bit & 1 == 1 {
                        g.insert_arc(i, j);
                    }
                    bit += 1;
                }
            }
        }
        g
    }

    /// Every labelled loopless digraph on `n <= 8` vertices.
    pub fn all_labelled(n: usize) -> impl Iterator<Item = Digraph> {
        assert!(n <= 8, "2^(n(n-1)) overflows beyond n = 8");
        let pairs = n * n.saturating_sub(1);
        (0..1u64 << pairs).map(move |m| Digraph::from_arc_mask(n, m))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::InvalidVertex(x));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.insert_arc(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn insert_arc(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.out[u].insert(v);
        self.inn[v].insert(u);
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.out[u].set(v, false);
            self.inn[v].set(u, false);
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    /// Arcs in either direction between `u` and `v`.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Arcs in both directions between `u` and `v`.
    #[inline]
    pub fn bidirectional(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out[u].ones().map(move |v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].ones()
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[u].ones()
    }

    #[inline]
    pub fn out_row(&self, u: usize) -> &FixedBitSet {
        &self.out[u]
    }

    #[inline]
    pub fn in_row(&self, u: usize) -> &FixedBitSet {
        &self.inn[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones(..)
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].count_ones(..)
    }

    /// Neighbours through an arc in either direction.
    pub fn undirected_row(&self, u: usize) -> FixedBitSet {
        let mut row = self.out[u].clone();
        row.union_with(&self.inn[u]);
        row
    }

    /// Neighbours joined to `u` by arcs in both directions.
    pub fn bidirectional_row(&self, u: usize) -> FixedBitSet {
        let mut row = self.out[u].clone();
        row.intersect_with(&self.inn[u]);
        row
    }

    /// `(u, v)` is an arc of the result iff `u != v` and it is not an arc
    /// here. Labels are kept.
    pub fn complement(&self) -> Digraph {
        let n = self.n;
        let flip = |rows: &[FixedBitSet]| -> Vec<FixedBitSet> {
            rows.iter()
                .enumerate()
                .map(|(u, r)| {
                    let mut c = r.clone();
                    c.toggle_range(..);
                    c.set(u, false);
                    c
                })
                .collect()
        };
        Digraph {
            n,
            out: flip(&self.out),
            inn: flip(&self.inn),
            labels: self.labels.clone(),
        }
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Digraph {
        let mut g = Digraph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if a != b && self.has_arc(u, v) {
                    g.insert_arc(a, b);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let mut g = Digraph::new(self.n + other.n);
        for (u, v) in self.arcs() {
            g.insert_arc(u, v);
        }
        for (u, v) in other.arcs() {
            g.insert_arc(self.n + u, self.n + v);
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}

/// A vertex colouring `vertex -> 0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Compacts arbitrary colour ids to `0..num_colors` in order of first
    /// appearance.
    pub fn from_assignment(raw: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let assignment = raw
            .iter()
            .map(|c| match seen.iter().position(|s| s == c) {
                Some(i) => i,
                None => {
                    seen.push(*c);
                    seen.len() - 1
                }
            })
            .collect();
        Coloring {
            assignment,
            num_colors: seen.len(),
        }
    }

    /// No arc, in either direction, joins two vertices of equal colour.
    pub fn is_proper(&self, g: &Digraph) -> bool {
        self.assignment.len() == g.vertex_count()
            && self.assignment.iter().all(|&c| c < self.num_colors)
            && g.arcs()
                .into_iter()
                .all(|(u, v)| self.assignment[u] != self.assignment[v])
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = alloc::vec![Vec::new(); self.num_colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}
