//! Exhaustive small-graph corpora, deduplicated up to isomorphism.
//!
//! The generator works by augmentation: every connected graph on n vertices
//! arises from a connected graph on n - 1 vertices by attaching a new vertex
//! to a nonempty neighbor set (spanning-tree leaves witness this), so the
//! level-by-level closure is exhaustive.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph};
use crate::iso::{canonical_masks, CanonicalForm, CANON_VERTEX_LIMIT};

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn to_graph(n: usize, adj: &[u64]) -> Graph {
    let names = labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (adj[i] >> j) & 1 == 1 {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Graph::new(names, &edges).expect("valid by construction")
}

/// All connected graphs with exactly `n` vertices, one representative per
/// isomorphism class, in a deterministic order.
pub fn connected_graphs_exactly(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > CANON_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "graph enumeration",
            limit: CANON_VERTEX_LIMIT,
            actual: n,
        });
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0u64]]; // K_1
    for size in 2..=n {
        let mut next: Vec<Vec<u64>> = Vec::new();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        for adj in &level {
            for attach in 1u64..(1 << (size - 1)) {
                let mut bigger = adj.clone();
                bigger.push(attach);
                let new_idx = size - 1;
                for v in 0..new_idx {
                    if (attach >> v) & 1 == 1 {
                        bigger[v] |= 1 << new_idx;
                    }
                }
                let form = canonical_masks(size, &bigger, None)?;
                if seen.insert(form) {
                    next.push(bigger);
                }
            }
        }
        level = next;
    }
    let mut graphs: Vec<Graph> = level.iter().map(|adj| to_graph(n, adj)).collect();
    graphs.sort_by_key(|g| (g.edge_count(), g.edges()));
    Ok(graphs)
}

/// All connected graphs with between 1 and `max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs_exactly(n)?);
    }
    Ok(out)
}

/// All connected marked graphs with between 2 and `max_n` vertices, one
/// representative per mark-preserving isomorphism class. Every vertex of a
/// connected graph on two or more vertices has a neighbor, so each choice of
/// mark is admissible.
pub fn marked_graphs_up_to(max_n: usize) -> Result<Vec<MarkedGraph>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in connected_graphs_exactly(n)? {
            let adj = g.adjacency_masks()?;
            let mut seen: HashSet<CanonicalForm> = HashSet::new();
            for (vi, v) in g.vertices().iter().enumerate() {
                let form = canonical_masks(n, &adj, Some(vi))?;
                if seen.insert(form) {
                    out.push(MarkedGraph::new(g.clone(), v.clone())?);
                }
            }
        }
    }
    Ok(out)
}
