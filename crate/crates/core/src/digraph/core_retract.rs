use alloc::vec::Vec;

use super::Digraph;
use crate::hom::hom_exists;
use crate::{Error, Result};

/// Vertex cap for [`core`].
pub const DEFAULT_CORE_CAP: usize = 12;
/// Vertex cap for [`canonical_form`] and [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 8;

/// The core of `g` as an induced subgraph, together with the original
/// indices of the vertices kept.
///
/// Vertices are dropped one at a time whenever the current graph maps into
/// itself minus that vertex; the graph left when no vertex can be dropped
/// has only bijective endomorphisms.
pub fn core(g: &Digraph) -> Result<(Digraph, Vec<usize>)> {
    Error::check_size("core search", DEFAULT_CORE_CAP, g.vertex_count())?;
    let mut kept: Vec<usize> = (0..g.vertex_count()).collect();
    let mut current = g.clone();
    'shrink: loop {
        for drop in 0..kept.len() {
            let rest: Vec<usize> = (0..kept.len()).filter(|&i| i != drop).collect();
            let smaller = current.induced_subgraph(&rest);
            if hom_exists(&current, &smaller)?.is_some() {
                kept.remove(drop);
                current = smaller;
                continue 'shrink;
            }
        }
        break;
    }
    Ok((current, kept))
}

/// True iff `g` is a single directed cycle on `n >= 2` vertices.
pub fn is_directed_cycle(g: &Digraph) -> bool {
    let n = g.vertex_count();
    if n < 2 || g.arc_count() != n {
        return false;
    }
    if (0..n).any(|v| g.out_degree(v) != 1 || g.in_degree(v) != 1) {
        return false;
    }
    let mut v = 0;
    for step in 1..=n {
        v = g.out_neighbors(v).next().unwrap();
        if v == 0 {
            return step == n;
        }
    }
    false
}

/// Smallest adjacency bitmask over all vertex relabellings (`n <= 8`).
pub fn canonical_form(g: &Digraph) -> Result<(usize, u64)> {
    let n = g.vertex_count();
    Error::check_size("canonical form", ISOMORPHISM_CAP, n)?;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u64;
        for (u, v) in g.arcs() {
            mask |= 1 << (p[u] * n + p[v]);
        }
        best = best.min(mask);
    });
    Ok((n, if n == 0 { 0 } else { best }))
}

pub fn are_isomorphic(g: &Digraph, h: &Digraph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn permute(p: &mut [usize], i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        visit(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, visit);
        p.swap(i, j);
    }
}
