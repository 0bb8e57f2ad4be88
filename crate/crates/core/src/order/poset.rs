//! Strict partial orders induced by transitive orientations, and realizers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::orient::Orientation;

/// A finite strict partial order on string elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    elements: Vec<String>,
    lt: Vec<bool>,
}

impl Poset {
    /// Builds a poset from explicit `a < b` relations; the relation must
    /// already be transitive and is checked for antisymmetry.
    pub fn new<I, S>(elements: I, relations: &[(S, S)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut els: Vec<String> = elements.into_iter().map(|e| e.as_ref().to_string()).collect();
        els.sort();
        els.dedup();
        let n = els.len();
        let idx = |v: &str| -> Result<usize> {
            els.binary_search_by(|e| e.as_str().cmp(v))
                .map_err(|_| Error::UnknownVertex(v.to_string()))
        };
        let mut lt = vec![false; n * n];
        for (a, b) in relations {
            let (ia, ib) = (idx(a.as_ref())?, idx(b.as_ref())?);
            if ia == ib {
                return Err(Error::InvalidInput(format!(
                    "irreflexivity violated at `{}`",
                    a.as_ref()
                )));
            }
            lt[ia * n + ib] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if lt[i * n + j] && lt[j * n + i] {
                    return Err(Error::InvalidInput(format!(
                        "antisymmetry violated between `{}` and `{}`",
                        els[i], els[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if lt[i * n + j] {
                    for k in 0..n {
                        if lt[j * n + k] && !lt[i * n + k] {
                            return Err(Error::NotTransitive {
                                a: els[i].clone(),
                                b: els[j].clone(),
                                c: els[k].clone(),
                            });
                        }
                    }
                }
            }
        }
        Ok(Poset { elements: els, lt })
    }

    /// The poset induced by a transitive orientation: `a < b` iff `a -> b`.
    pub fn from_orientation(g: &Graph, t: &Orientation) -> Result<Self> {
        t.check_transitive()?;
        let relations: Vec<(String, String)> =
            t.arcs().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        if relations.len() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "orientation has {} arcs for a graph with {} edges",
                relations.len(),
                g.edge_count()
            )));
        }
        for (a, b) in &relations {
            if !g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!(
                    "arc {a}->{b} is not an edge of the graph"
                )));
            }
        }
        let p = Poset::new(g.vertices().iter().cloned(), &relations)?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub(crate) fn index_of(&self, v: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(v)).ok()
    }

    pub(crate) fn lt_idx(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.elements.len() + j]
    }

    pub fn less(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.lt_idx(i, j),
            _ => false,
        }
    }

    pub fn comparable(&self, a: &str, b: &str) -> bool {
        self.less(a, b) || self.less(b, a)
    }

    pub fn is_minimal(&self, v: &str) -> bool {
        self.index_of(v)
            .map(|j| (0..self.len()).all(|i| !self.lt_idx(i, j)))
            .unwrap_or(false)
    }

    pub fn is_maximal(&self, v: &str) -> bool {
        self.index_of(v)
            .map(|i| (0..self.len()).all(|j| !self.lt_idx(i, j)))
            .unwrap_or(false)
    }

    /// U(v): everything strictly above `v`.
    pub fn up_set(&self, v: &str) -> BTreeSet<String> {
        match self.index_of(v) {
            None => BTreeSet::new(),
            Some(i) => (0..self.len())
                .filter(|&j| self.lt_idx(i, j))
                .map(|j| self.elements[j].clone())
                .collect(),
        }
    }

    /// D(v): everything strictly below `v`.
    pub fn down_set(&self, v: &str) -> BTreeSet<String> {
        match self.index_of(v) {
            None => BTreeSet::new(),
            Some(j) => (0..self.len())
                .filter(|&i| self.lt_idx(i, j))
                .map(|i| self.elements[i].clone())
                .collect(),
        }
    }

    /// Unordered incomparable pairs, sorted.
    pub fn incomparable_pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.lt_idx(i, j) && !self.lt_idx(j, i) {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out
    }

    /// The subposet on all elements except `v`.
    pub fn delete_element(&self, v: &str) -> Result<Poset> {
        let vi = self
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != vi).collect();
        let relations: Vec<(String, String)> = keep
            .iter()
            .flat_map(|&i| {
                keep.iter()
                    .filter(move |&&j| self.lt_idx(i, j))
                    .map(move |&j| (self.elements[i].clone(), self.elements[j].clone()))
            })
            .collect();
        Poset::new(
            keep.iter().map(|&i| self.elements[i].clone()),
            &relations,
        )
    }

    /// The comparability graph of this poset.
    pub fn comparability_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.lt_idx(i, j) || self.lt_idx(j, i) {
                    edges.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        Graph::new(self.elements.iter().cloned(), &edges).expect("valid by construction")
    }
}

/// A collection of linear orders whose intersection is some target poset.
/// Each order is a sequence of elements, least first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realizer {
    orders: Vec<Vec<String>>,
}

impl Realizer {
    pub fn new(orders: Vec<Vec<String>>) -> Self {
        Realizer { orders }
    }

    pub fn orders(&self) -> &[Vec<String>] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.len()
    }

    /// Repeats the last order until the realizer has exactly `k` orders;
    /// harmless for the intersection property.
    pub fn padded_to(&self, k: usize) -> Result<Realizer> {
        if k < self.orders.len() {
            return Err(Error::InvalidInput(format!(
                "cannot pad a realizer of size {} down to {k}",
                self.orders.len()
            )));
        }
        let last = self
            .orders
            .last()
            .ok_or_else(|| Error::InvalidInput("empty realizer".into()))?
            .clone();
        let mut orders = self.orders.clone();
        orders.resize(k, last);
        Ok(Realizer { orders })
    }

    /// Checks the defining property pair by pair: `a < b` in the poset iff
    /// `a` precedes `b` in every order.
    pub fn realizes(&self, p: &Poset) -> Result<bool> {
        if self.orders.is_empty() {
            return Ok(p.len() <= 1);
        }
        let n = p.len();
        let mut position = Vec::with_capacity(self.orders.len());
        for order in &self.orders {
            if order.len() != n {
                return Ok(false);
            }
            let mut pos = vec![usize::MAX; n];
            for (at, v) in order.iter().enumerate() {
                match p.index_of(v) {
                    Some(i) if pos[i] == usize::MAX => pos[i] = at,
                    _ => return Ok(false),
                }
            }
            position.push(pos);
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let in_all = position.iter().all(|pos| pos[i] < pos[j]);
                if in_all != p.lt_idx(i, j) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
