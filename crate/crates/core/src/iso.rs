//! Exact isomorphism and canonical forms for small graphs.
//!
//! Everything here is exhaustive backtracking with degree pruning. That is
//! the right tool at desk scale and keeps the checks trustworthy as oracles;
//! the size guards make the cost explicit.

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph};

pub const ISO_VERTEX_LIMIT: usize = 12;
pub const CANON_VERTEX_LIMIT: usize = 8;

/// True iff an edge-preserving bijection between the two graphs exists.
/// Exhaustive with degree pruning; guarded at 12 vertices per side.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    isomorphic_impl(g, h, None)
}

/// Isomorphism that must map `gv` to `hv`.
pub fn isomorphic_with_pin(g: &Graph, gv: &str, h: &Graph, hv: &str) -> Result<bool> {
    let gi = g
        .index_of(gv)
        .ok_or_else(|| Error::UnknownVertex(gv.to_string()))?;
    let hi = h
        .index_of(hv)
        .ok_or_else(|| Error::UnknownVertex(hv.to_string()))?;
    isomorphic_impl(g, h, Some((gi, hi)))
}

fn isomorphic_impl(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> Result<bool> {
    for side in [g, h] {
        if side.vertex_count() > ISO_VERTEX_LIMIT {
            return Err(Error::TooLarge {
                what: "exact isomorphism",
                limit: ISO_VERTEX_LIMIT,
                actual: side.vertex_count(),
            });
        }
    }
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(true);
    }
    let ga = g.adjacency_masks()?;
    let ha = h.adjacency_masks()?;
    let gdeg: Vec<usize> = ga.iter().map(|m| m.count_ones() as usize).collect();
    let hdeg: Vec<usize> = ha.iter().map(|m| m.count_ones() as usize).collect();
    if let Some((gi, hi)) = pin {
        if gdeg[gi] != hdeg[hi] {
            return Ok(false);
        }
    }

    // Map g's vertices in order of descending degree; high-degree vertices
    // constrain the search fastest.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(gdeg[v]));
    if let Some((gi, _)) = pin {
        order.retain(|&v| v != gi);
        order.insert(0, gi);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn search(
        depth: usize,
        order: &[usize],
        ga: &[u64],
        ha: &[u64],
        gdeg: &[usize],
        hdeg: &[usize],
        mapping: &mut [usize],
        used: &mut [bool],
        pin: Option<(usize, usize)>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..ha.len() {
            if used[w] || gdeg[v] != hdeg[w] {
                continue;
            }
            if let Some((gi, hi)) = pin {
                if v == gi && w != hi {
                    continue;
                }
            }
            // adjacency with every already-mapped vertex must agree
            let ok = order[..depth].iter().all(|&u| {
                let mu = mapping[u];
                (ga[v] >> u) & 1 == (ha[w] >> mu) & 1
            });
            if ok {
                mapping[v] = w;
                used[w] = true;
                if search(depth + 1, order, ga, ha, gdeg, hdeg, mapping, used, pin) {
                    return true;
                }
                used[w] = false;
                mapping[v] = usize::MAX;
            }
        }
        false
    }

    Ok(search(
        0, &order, &ga, &ha, &gdeg, &hdeg, &mut mapping, &mut used, pin,
    ))
}

/// Canonical form of a graph on at most [`CANON_VERTEX_LIMIT`] vertices:
/// vertex count plus the minimal edge bitmask over all degree-respecting
/// relabelings. Equal forms mean isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    pub n: u8,
    pub edges: u64,
    pub mark: u8,
}

const NO_MARK: u8 = u8::MAX;

struct CanonSearch<'a> {
    n: usize,
    adj: &'a [u64],
    deg: &'a [usize],
    target: &'a [usize],
    mark: Option<usize>,
    total_bits: usize,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    /// Bits are laid out so earlier-decided pairs are more significant: the
    /// pair at triangular index t gets bit `total_bits - 1 - t`. That makes
    /// prefix comparison a sound branch-and-bound prune.
    fn bit_for(&self, tri: usize) -> u64 {
        1u64 << (self.total_bits - 1 - tri)
    }

    fn rec(&mut self, pos: usize, acc: u64) {
        if pos == self.n {
            if self.best.is_none_or(|b| acc < b) {
                self.best = Some(acc);
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] || self.deg[v] != self.target[pos] {
                continue;
            }
            match self.mark {
                Some(m) if pos == 0 && v != m => continue,
                Some(m) if pos > 0 && v == m => continue,
                _ => {}
            }
            let base_tri = pos * (pos.saturating_sub(1)) / 2;
            let mut acc2 = acc;
            for (q, &u) in self.placed.iter().enumerate() {
                if (self.adj[v] >> u) & 1 == 1 {
                    acc2 |= self.bit_for(base_tri + q);
                }
            }
            let decided = base_tri + pos;
            let keep = match self.best {
                None => true,
                Some(b) => {
                    let mask = if decided == 0 {
                        0
                    } else {
                        ((1u64 << decided) - 1) << (self.total_bits - decided)
                    };
                    (acc2 & mask) <= (b & mask)
                }
            };
            if keep {
                self.placed.push(v);
                self.used[v] = true;
                self.rec(pos + 1, acc2);
                self.used[v] = false;
                self.placed.pop();
            }
        }
    }
}

fn canonical_impl(g: &Graph, mark: Option<usize>) -> Result<CanonicalForm> {
    let adj = g.adjacency_masks()?;
    canonical_masks(g.vertex_count(), &adj, mark)
}

/// Canonicalization on raw adjacency masks; the workhorse behind both the
/// public forms and the small-graph enumeration.
pub(crate) fn canonical_masks(
    n: usize,
    adj: &[u64],
    mark: Option<usize>,
) -> Result<CanonicalForm> {
    if n > CANON_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "canonical form",
            limit: CANON_VERTEX_LIMIT,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            n: 0,
            edges: 0,
            mark: NO_MARK,
        });
    }
    let deg: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    // position p only ever receives a vertex of the degree that belongs
    // there; with a mark it is pinned to position 0 instead
    let target: Vec<usize> = match mark {
        None => {
            let mut t = deg.clone();
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        }
        Some(m) => {
            let mut rest: Vec<usize> = (0..n).filter(|&v| v != m).map(|v| deg[v]).collect();
            rest.sort_unstable_by(|a, b| b.cmp(a));
            std::iter::once(deg[m]).chain(rest).collect()
        }
    };

    let mut search = CanonSearch {
        n,
        adj,
        deg: &deg,
        target: &target,
        mark,
        total_bits: (n * (n - 1) / 2).max(1),
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.rec(0, 0);
    Ok(CanonicalForm {
        n: n as u8,
        edges: search.best.expect("at least one labeling exists"),
        mark: if mark.is_some() { 0 } else { NO_MARK },
    })
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_impl(g, None)
}

/// Canonical form with the marked vertex distinguished (pinned to the first
/// position). Equal forms mean mark-preserving isomorphic.
pub fn canonical_marked_form(g: &MarkedGraph) -> Result<CanonicalForm> {
    let m = g
        .graph()
        .index_of(g.marked())
        .expect("marked vertex exists");
    canonical_impl(g.graph(), Some(m))
}
