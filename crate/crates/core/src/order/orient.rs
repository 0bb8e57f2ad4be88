//! Transitive orientations: recognition, directed search with forced roles,
//! and exhaustive enumeration for the small-scale oracle.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A direction for every edge of some graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    arcs: BTreeSet<(String, String)>,
}

impl Orientation {
    /// Wraps an arc set after checking it covers each edge of `g` exactly
    /// once and nothing else.
    pub fn new(g: &Graph, arcs: impl IntoIterator<Item = (String, String)>) -> Result<Self> {
        let arcs: BTreeSet<(String, String)> = arcs.into_iter().collect();
        let mut covered = BTreeSet::new();
        for (a, b) in &arcs {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!(
                    "arc {a}->{b} is not an edge of the graph"
                )));
            }
            if arcs.contains(&(b.clone(), a.clone())) {
                return Err(Error::InvalidInput(format!(
                    "edge {a}-{b} oriented both ways"
                )));
            }
            let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
            covered.insert(key);
        }
        if covered.len() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "orientation covers {} of {} edges",
                covered.len(),
                g.edge_count()
            )));
        }
        Ok(Orientation { arcs })
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.arcs.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, a: &str, b: &str) -> bool {
        self.arcs.contains(&(a.to_string(), b.to_string()))
    }

    /// In-degree zero under this orientation.
    pub fn is_source(&self, v: &str) -> bool {
        self.arcs.iter().all(|(_, head)| head != v)
    }

    /// Out-degree zero under this orientation.
    pub fn is_sink(&self, v: &str) -> bool {
        self.arcs.iter().all(|(tail, _)| tail != v)
    }

    pub fn reversed(&self) -> Orientation {
        Orientation {
            arcs: self.arcs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Independent transitivity check over all arc pairs; reports a violating
    /// triple. Used both as a public verifier and as the final gate on every
    /// orientation this module returns.
    pub fn check_transitive(&self) -> Result<()> {
        for (a, b) in &self.arcs {
            for (b2, c) in &self.arcs {
                if b == b2 && !self.arcs.contains(&(a.clone(), c.clone())) {
                    return Err(Error::NotTransitive {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    Source,
    Sink,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Source => "source",
            Role::Sink => "sink",
        }
    }
}

pub const ORIENT_VERTEX_LIMIT: usize = 20;
pub const ENUMERATE_VERTEX_LIMIT: usize = 9;

/// Finds a transitive orientation if one exists (so: decides comparability).
/// Exhaustive implication-propagation search; exact within the size guard.
pub fn transitive_orientation(g: &Graph) -> Result<Option<Orientation>> {
    search(g, None)
}

/// A transitive orientation in which `v` is a source (or sink), if any.
pub fn orientation_with_role(g: &Graph, v: &str, role: Role) -> Result<Option<Orientation>> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    search(g, Some((v, role)))
}

/// All transitive orientations, for cross-checking the pendant-based
/// feasibility test. Deliberately tightly size-guarded.
pub fn enumerate_transitive_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    if g.vertex_count() > ENUMERATE_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "orientation enumeration",
            limit: ENUMERATE_VERTEX_LIMIT,
            actual: g.vertex_count(),
        });
    }
    let mut engine = OrientSearch::new(g)?;
    let mut all = Vec::new();
    let start = vec![0i8; engine.edges.len()];
    engine.dfs(start, &mut |state, eng| {
        all.push(eng.to_orientation(state));
        true // keep going
    });
    for o in &all {
        o.check_transitive()
            .map_err(|e| Error::Internal(format!("enumerated orientation not transitive: {e}")))?;
    }
    Ok(all)
}

fn search(g: &Graph, forced: Option<(&str, Role)>) -> Result<Option<Orientation>> {
    if g.vertex_count() > ORIENT_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "transitive-orientation search",
            limit: ORIENT_VERTEX_LIMIT,
            actual: g.vertex_count(),
        });
    }
    let mut engine = OrientSearch::new(g)?;
    let mut start = vec![0i8; engine.edges.len()];
    if let Some((v, role)) = forced {
        let vi = g.index_of(v).expect("checked");
        for &w in &g.adj_indices()[vi] {
            let arc = match role {
                Role::Source => (vi, w),
                Role::Sink => (w, vi),
            };
            if !engine.assert_arc(&mut start, arc.0, arc.1) {
                return Ok(None);
            }
        }
    }
    let mut found: Option<Orientation> = None;
    engine.dfs(start, &mut |state, eng| {
        found = Some(eng.to_orientation(state));
        false // stop at the first complete orientation
    });
    if let Some(o) = &found {
        o.check_transitive()
            .map_err(|e| Error::Internal(format!("search produced a non-transitive orientation: {e}")))?;
    }
    Ok(found)
}

/// Edge-state search: 0 unassigned, 1 forward (lo -> hi), -1 backward.
struct OrientSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    edge_id: Vec<Option<usize>>,
    n: usize,
}

impl<'a> OrientSearch<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        let n = g.vertex_count();
        let mut edges = Vec::new();
        let mut edge_id = vec![None; n * n];
        for (i, ns) in g.adj_indices().iter().enumerate() {
            for &j in ns {
                if i < j {
                    edge_id[i * n + j] = Some(edges.len());
                    edge_id[j * n + i] = Some(edges.len());
                    edges.push((i, j));
                }
            }
        }
        Ok(OrientSearch { g, edges, edge_id, n })
    }

    fn arc_state(&self, state: &[i8], u: usize, v: usize) -> Option<i8> {
        self.edge_id[u * self.n + v].map(|e| {
            let (lo, _) = self.edges[e];
            if u == lo { state[e] } else { -state[e] }
        })
    }

    /// Asserts u -> v and propagates every forced consequence. Returns false
    /// on contradiction. Propagation:
    ///   - known w -> u extends to w -> v, known v -> w extends to u -> w
    ///     (conflict if the needed pair is a non-edge);
    ///   - u -> v forces u -> w across every neighbor w of u missing from
    ///     N(v), and w -> v across every neighbor w of v missing from N(u).
    fn assert_arc(&self, state: &mut [i8], u: usize, v: usize) -> bool {
        let mut queue = vec![(u, v)];
        while let Some((u, v)) = queue.pop() {
            let e = self.edge_id[u * self.n + v].expect("arc endpoints adjacent");
            let (lo, _) = self.edges[e];
            let dir = if u == lo { 1 } else { -1 };
            if state[e] == dir {
                continue;
            }
            if state[e] == -dir {
                return false;
            }
            state[e] = dir;

            let adj = self.g.adj_indices();
            for &w in &adj[u] {
                if w == v {
                    continue;
                }
                if adj[v].contains(&w) {
                    if let Some(1) = self.arc_state(state, w, u) { queue.push((w, v)) }
                } else {
                    // two-step chain w -> u -> v over the non-edge wv is
                    // impossible, so the edge uw must point away from u's
                    // predecessor side
                    queue.push((u, w));
                }
            }
            for &w in &adj[v] {
                if w == u {
                    continue;
                }
                if adj[u].contains(&w) {
                    if let Some(1) = self.arc_state(state, v, w) { queue.push((u, w)) }
                } else {
                    queue.push((w, v));
                }
            }
        }
        true
    }

    fn dfs(&mut self, state: Vec<i8>, emit: &mut impl FnMut(&[i8], &OrientSearch) -> bool) -> bool {
        match state.iter().position(|&s| s == 0) {
            None => emit(&state, self),
            Some(e) => {
                let (lo, hi) = self.edges[e];
                for (a, b) in [(lo, hi), (hi, lo)] {
                    let mut next = state.clone();
                    if self.assert_arc(&mut next, a, b) && !self.dfs(next, emit) {
                        return false;
                    }
                }
                true
            }
        }
    }

    fn to_orientation(&self, state: &[i8]) -> Orientation {
        let arcs = self
            .edges
            .iter()
            .zip(state)
            .map(|(&(lo, hi), &s)| {
                let (a, b) = if s == 1 { (lo, hi) } else { (hi, lo) };
                (self.g.label(a).to_string(), self.g.label(b).to_string())
            })
            .collect();
        Orientation { arcs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};

    fn net_graph() -> Graph {
        Graph::new(
            ["1", "2", "3", "4", "5", "6"],
            &[("1", "2"), ("2", "4"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
        )
        .unwrap()
    }

    fn star_gadget_recomposition() -> Graph {
        Graph::new(
            ["1", "2", "3", "4", "5", "6"],
            &[
                ("1", "4"),
                ("1", "5"),
                ("2", "4"),
                ("2", "5"),
                ("4", "5"),
                ("3", "4"),
                ("5", "6"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bipartite_graphs_are_comparability() {
        for spec in [FamilySpec::Cycle(6), FamilySpec::Crown(3), FamilySpec::Path(5)] {
            let g = generate_family(&spec).unwrap();
            let t = transitive_orientation(&g).unwrap().expect("bipartite");
            t.check_transitive().unwrap();
        }
    }

    #[test]
    fn odd_cycles_are_not_comparability() {
        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(transitive_orientation(&c5).unwrap().is_none());
        let c7 = generate_family(&FamilySpec::Cycle(7)).unwrap();
        assert!(transitive_orientation(&c7).unwrap().is_none());
    }

    #[test]
    fn first_example_recomposition_is_not_comparability() {
        assert!(transitive_orientation(&net_graph()).unwrap().is_none());
    }

    #[test]
    fn second_example_recomposition_is_comparability() {
        let t = transitive_orientation(&star_gadget_recomposition()).unwrap().expect("comparability");
        t.check_transitive().unwrap();
    }

    #[test]
    fn orientation_with_forced_source() {
        let p3 = generate_family(&FamilySpec::Path(3)).unwrap();
        // endpoint can be a source
        let t = orientation_with_role(&p3, "1", Role::Source).unwrap().unwrap();
        assert!(t.is_source("1"));
        t.check_transitive().unwrap();
        // the middle of P_3 can also be a source (orient both edges outward)
        let t2 = orientation_with_role(&p3, "2", Role::Source).unwrap().unwrap();
        assert!(t2.is_source("2"));
    }

    #[test]
    fn source_and_sink_swap_under_reversal() {
        let p4 = generate_family(&FamilySpec::Path(4)).unwrap();
        let t = orientation_with_role(&p4, "1", Role::Source).unwrap().unwrap();
        let r = t.reversed();
        assert!(r.is_sink("1"));
        r.check_transitive().unwrap();
    }

    #[test]
    fn enumeration_matches_known_counts() {
        // transitive orientations of K_n are exactly the n! linear orders
        let k3 = generate_family(&FamilySpec::Complete(3)).unwrap();
        assert_eq!(enumerate_transitive_orientations(&k3).unwrap().len(), 6);
        // P_3 has 4 orientations, of which the two directed paths fail
        let p3 = generate_family(&FamilySpec::Path(3)).unwrap();
        assert_eq!(enumerate_transitive_orientations(&p3).unwrap().len(), 2);
        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(enumerate_transitive_orientations(&c5).unwrap().is_empty());
    }

    #[test]
    fn orientation_validation() {
        let p3 = generate_family(&FamilySpec::Path(3)).unwrap();
        let err = Orientation::new(&p3, [("1".to_string(), "2".to_string())]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        let o = Orientation::new(
            &p3,
            [("1".to_string(), "2".to_string()), ("3".to_string(), "2".to_string())],
        )
        .unwrap();
        o.check_transitive().unwrap();
        let bad = Orientation::new(
            &p3,
            [("1".to_string(), "2".to_string()), ("2".to_string(), "3".to_string())],
        )
        .unwrap();
        assert_eq!(
            bad.check_transitive().unwrap_err(),
            Error::NotTransitive { a: "1".into(), b: "2".into(), c: "3".into() }
        );
    }
}
