//! Exact poset dimension by complete search.
//!
//! A family of linear extensions realizes P exactly when every critical pair
//! gets reversed by one of them, so dim(P) is the least k for which the
//! critical pairs can be distributed over k buckets, each bucket staying
//! acyclic together with P when its pairs are reversed. The search assigns
//! the most constrained pair first and keeps every bucket transitively
//! closed, which makes feasibility a single bit test.

use crate::error::{Error, Result};

use super::poset::{Poset, Realizer};

pub const DIM_ELEMENT_LIMIT: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DimSearch {
    Found { k: usize, realizer: Realizer },
    ExceedsKMax { k_max: usize },
}

impl DimSearch {
    pub fn value(&self) -> Option<usize> {
        match self {
            DimSearch::Found { k, .. } => Some(*k),
            DimSearch::ExceedsKMax { .. } => None,
        }
    }

    pub fn realizer(&self) -> Option<&Realizer> {
        match self {
            DimSearch::Found { realizer, .. } => Some(realizer),
            DimSearch::ExceedsKMax { .. } => None,
        }
    }
}

/// dim(P): the least k such that k linear orders intersect to exactly `p`,
/// with a verified witness realizer.
pub fn dimension(p: &Poset, k_max: usize) -> Result<DimSearch> {
    let n = p.len();
    if n == 0 {
        return Err(Error::InvalidInput("dimension of the empty poset is undefined".into()));
    }
    if n > DIM_ELEMENT_LIMIT {
        return Err(Error::TooLarge {
            what: "dimension search",
            limit: DIM_ELEMENT_LIMIT,
            actual: n,
        });
    }
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be positive".into()));
    }

    let mut base = vec![0u16; n];
    let mut incomparable = false;
    for i in 0..n {
        for j in 0..n {
            if p.lt_idx(i, j) {
                base[i] |= 1 << j;
            } else if i != j && !p.lt_idx(j, i) {
                incomparable = true;
            }
        }
    }

    let named = |order: &[usize]| -> Vec<String> {
        order.iter().map(|&i| p.elements()[i].clone()).collect()
    };

    if !incomparable {
        // a chain: its unique linear extension is the realizer
        let order = topological(&base, n);
        return finish(p, 1, Realizer::new(vec![named(&order)]), k_max);
    }

    // an antichain needs exactly one order and its reverse
    if base.iter().all(|&row| row == 0) {
        if k_max < 2 {
            return Ok(DimSearch::ExceedsKMax { k_max });
        }
        let fwd: Vec<usize> = (0..n).collect();
        let rev: Vec<usize> = (0..n).rev().collect();
        return finish(p, 2, Realizer::new(vec![named(&fwd), named(&rev)]), k_max);
    }

    // critical pairs (a, b): incomparable, D(a) ⊆ D(b) and U(b) ⊆ U(a);
    // reversing all of them is exactly what a realizer must do
    let mut down = vec![0u16; n];
    for (i, row) in base.iter().enumerate() {
        for j in 0..n {
            if (row >> j) & 1 == 1 {
                down[j] |= 1 << i;
            }
        }
    }
    let mut criticals: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b
                && (base[a] >> b) & 1 == 0
                && (base[b] >> a) & 1 == 0
                && down[a] & !down[b] == 0
                && base[b] & !base[a] == 0
            {
                criticals.push((a, b));
            }
        }
    }
    debug_assert!(!criticals.is_empty(), "non-chain posets have critical pairs");

    for k in 2..=k_max {
        let mut buckets = vec![base.clone(); k];
        if let Some(orders) = assign(&criticals, &mut buckets, n) {
            let realizer = Realizer::new(orders.iter().map(|o| named(o)).collect());
            return finish(p, k, realizer, k_max);
        }
    }
    Ok(DimSearch::ExceedsKMax { k_max })
}

fn finish(p: &Poset, k: usize, realizer: Realizer, k_max: usize) -> Result<DimSearch> {
    if k > k_max {
        return Ok(DimSearch::ExceedsKMax { k_max });
    }
    if !realizer.realizes(p)? {
        return Err(Error::Internal(
            "dimension search produced a non-realizing witness".into(),
        ));
    }
    Ok(DimSearch::Found { k, realizer })
}

/// Least-index-first topological order of a transitively closed relation.
fn topological(lt: &[u16], n: usize) -> Vec<usize> {
    let mut placed = 0u16;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        for v in 0..n {
            let bit = 1u16 << v;
            if placed & bit != 0 {
                continue;
            }
            // v is minimal among the rest: nothing unplaced lies below it
            let below = (0..n).fold(0u16, |acc, u| {
                if (lt[u] >> v) & 1 == 1 {
                    acc | (1 << u)
                } else {
                    acc
                }
            });
            if below & !placed == 0 {
                placed |= bit;
                out.push(v);
                break;
            }
        }
    }
    out
}

/// Adds `u < v` to a transitively closed relation; false on a cycle.
fn add_closed(lt: &mut [u16], n: usize, u: usize, v: usize) -> bool {
    if (lt[v] >> u) & 1 == 1 {
        return false;
    }
    let succ = lt[v] | (1 << v);
    for x in 0..n {
        if x == u || (lt[x] >> u) & 1 == 1 {
            lt[x] |= succ;
        }
    }
    true
}

/// Distributes the critical pairs over the buckets, most constrained pair
/// first; returns the bucket orders on success. Complete: every realizer of
/// this size induces a valid assignment.
fn assign(criticals: &[(usize, usize)], buckets: &mut [Vec<u16>], n: usize) -> Option<Vec<Vec<usize>>> {
    // a pair (a, b) is reversed in a bucket once b < a holds there
    let covered = |buckets: &[Vec<u16>], a: usize, b: usize| {
        buckets.iter().any(|lt| (lt[b] >> a) & 1 == 1)
    };
    let feasible = |lt: &[u16], a: usize, b: usize| (lt[a] >> b) & 1 == 0;

    let mut best: Option<(usize, usize, usize)> = None; // (choices, a, b)
    for &(a, b) in criticals {
        if covered(buckets, a, b) {
            continue;
        }
        let choices = buckets.iter().filter(|lt| feasible(lt, a, b)).count();
        if choices == 0 {
            return None;
        }
        match best {
            Some((c, ..)) if c <= choices => {}
            _ => best = Some((choices, a, b)),
        }
    }
    let Some((_, a, b)) = best else {
        // everything covered: emit the bucket orders
        return Some(buckets.iter().map(|lt| topological(lt, n)).collect());
    };
    for i in 0..buckets.len() {
        if !feasible(&buckets[i], a, b) {
            continue;
        }
        let snapshot = buckets[i].clone();
        if add_closed(&mut buckets[i], n, b, a) {
            if let Some(orders) = assign(criticals, buckets, n) {
                return Some(orders);
            }
        }
        buckets[i] = snapshot;
    }
    None
}
