//! Labeled simple undirected graphs.
//!
//! Vertices are string labels kept in sorted order, so iteration, search and
//! serialized output are deterministic. Graphs are immutable after
//! construction; every operation returns a new value.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex list and an edge list.
    ///
    /// Labels must be unique. Edges must join two distinct known vertices;
    /// duplicate edges collapse.
    pub fn new<I, S>(vertices: I, edges: &[(S, S)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices
            .into_iter()
            .map(|s| s.as_ref().to_string())
            .collect();
        labels.sort();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::LabelCollision(vec![pair[0].clone()]));
            }
        }
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::InvalidInput(format!("self-loop at `{a}`")));
            }
            adj[ia].insert(ib);
            adj[ib].insert(ia);
        }
        Ok(Graph { labels, adj })
    }

    /// Graph with no vertices.
    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Vertex labels in sorted order.
    pub fn vertices(&self) -> &[String] {
        &self.labels
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index_of(v).is_some()
    }

    pub(crate) fn index_of(&self, v: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(v)).ok()
    }

    pub(crate) fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub(crate) fn adj_indices(&self) -> &[BTreeSet<usize>] {
        &self.adj
    }

    /// Adjacency as bitmasks over the sorted vertex order. Only valid for
    /// graphs small enough for the exhaustive engines.
    pub(crate) fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.labels.len() > 64 {
            return Err(Error::TooLarge {
                what: "bitmask adjacency",
                limit: 64,
                actual: self.labels.len(),
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &j| m | (1 << j)))
            .collect())
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(ia), Some(ib)) => self.adj[ia].contains(&ib),
            _ => false,
        }
    }

    pub fn degree(&self, v: &str) -> Result<usize> {
        let i = self
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        Ok(self.adj[i].len())
    }

    /// Neighbors of `v` in sorted order.
    pub fn neighbors(&self, v: &str) -> Result<Vec<String>> {
        let i = self
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j].clone()).collect())
    }

    /// N(S): union of neighborhoods of S, minus S itself.
    pub fn neighborhood_of_set(&self, set: &BTreeSet<String>) -> Result<BTreeSet<String>> {
        let mut out = BTreeSet::new();
        for v in set {
            for n in self.neighbors(v)? {
                if !set.contains(&n) {
                    out.insert(n);
                }
            }
        }
        Ok(out)
    }

    /// Edges as sorted pairs, in sorted order.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, ns) in self.adj.iter().enumerate() {
            for &j in ns {
                if i < j {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    /// G[S], the subgraph induced by `S`.
    pub fn induced_subgraph<'a, I>(&self, subset: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut keep = BTreeSet::new();
        for v in subset {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            keep.insert(v.to_string());
        }
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        Graph::new(keep, &edges)
    }

    /// Removes one vertex.
    pub fn delete_vertex(&self, v: &str) -> Result<Graph> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        self.induced_subgraph(self.labels.iter().map(|l| l.as_str()).filter(|l| *l != v))
    }

    /// C^v: adds one fresh vertex adjacent only to `v`. Returns the new graph
    /// and the fresh label. The fresh label is the base label with a prime
    /// suffix, de-collided with numeric suffixes, so output is reproducible.
    pub fn add_pendant(&self, v: &str) -> Result<(Graph, String)> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let mut fresh = format!("{v}′");
        let mut i = 2usize;
        while self.contains(&fresh) {
            fresh = format!("{v}′{i}");
            i += 1;
        }
        let mut vertices: Vec<String> = self.labels.clone();
        vertices.push(fresh.clone());
        let mut edges = self.edges();
        edges.push((v.to_string(), fresh.clone()));
        let g = Graph::new(vertices, &edges)?;
        Ok((g, fresh))
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.labels.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.labels.len()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.labels.len();
        self.edge_count() == n * (n - 1) / 2
    }

    /// K_{1,t}: one center adjacent to all others, no other edges. Requires at
    /// least two vertices; K_2 counts.
    pub fn is_star(&self) -> bool {
        let n = self.labels.len();
        if n < 2 || self.edge_count() != n - 1 {
            return false;
        }
        self.adj.iter().any(|ns| ns.len() == n - 1)
            && self.adj.iter().filter(|ns| ns.len() == 1).count() >= n - 1
    }

    /// A proper 2-coloring `(A, B)` if one exists. Components are rooted at
    /// their least vertex, which goes to side A.
    pub fn bipartition(&self) -> Option<(BTreeSet<String>, BTreeSet<String>)> {
        let n = self.labels.len();
        let mut color = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[u].unwrap());
                            queue.push_back(w);
                        }
                        Some(c) if c == color[u].unwrap() => return None,
                        _ => {}
                    }
                }
            }
        }
        let mut a = BTreeSet::new();
        let mut b = BTreeSet::new();
        for (i, c) in color.iter().enumerate() {
            if c == &Some(false) {
                a.insert(self.labels[i].clone());
            } else {
                b.insert(self.labels[i].clone());
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|n| n.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({:?}; {:?})", self.labels, self.edges())
    }
}

/// A graph with one distinguished marked vertex, the unit of split
/// recomposition.
///
/// The marked vertex must have at least one neighbor: recomposing at an
/// isolated mark would disconnect the result.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedGraph {
    graph: Graph,
    marked: String,
}

impl MarkedGraph {
    pub fn new(graph: Graph, marked: impl Into<String>) -> Result<Self> {
        let marked = marked.into();
        if !graph.contains(&marked) {
            return Err(Error::UnknownVertex(marked));
        }
        if graph.degree(&marked)? == 0 {
            return Err(Error::InvalidInput(format!(
                "marked vertex `{marked}` has no neighbors"
            )));
        }
        Ok(MarkedGraph { graph, marked })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn marked(&self) -> &str {
        &self.marked
    }

    /// All vertices except the mark.
    pub fn inner_vertices(&self) -> Vec<String> {
        self.graph
            .vertices()
            .iter()
            .filter(|v| *v != &self.marked)
            .cloned()
            .collect()
    }

    pub fn marked_neighbors(&self) -> BTreeSet<String> {
        self.graph
            .neighbors(&self.marked)
            .expect("marked vertex exists")
            .into_iter()
            .collect()
    }

    /// G[V], the graph without its mark.
    pub fn inner_graph(&self) -> Graph {
        self.graph
            .delete_vertex(&self.marked)
            .expect("marked vertex exists")
    }
}

/// H: disjoint union of the two graphs plus the edge between their marks.
pub fn join_by_edge(left: &MarkedGraph, right: &MarkedGraph) -> Result<Graph> {
    let collisions: Vec<String> = left
        .graph()
        .vertices()
        .iter()
        .filter(|v| right.graph().contains(v))
        .cloned()
        .collect();
    if !collisions.is_empty() {
        return Err(Error::LabelCollision(collisions));
    }
    let vertices: Vec<String> = left
        .graph()
        .vertices()
        .iter()
        .chain(right.graph().vertices())
        .cloned()
        .collect();
    let mut edges = left.graph().edges();
    edges.extend(right.graph().edges());
    edges.push((left.marked().to_string(), right.marked().to_string()));
    Graph::new(vertices, &edges)
}
