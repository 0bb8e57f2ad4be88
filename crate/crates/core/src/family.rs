//! Generators for the standard families the examples and tests draw on.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family with its size parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// K_n
    Complete(usize),
    /// Path on n vertices
    Path(usize),
    /// Cycle on n vertices (n >= 3)
    Cycle(usize),
    /// K_{a,b}
    CompleteBipartite(usize, usize),
    /// K_{1,n}: one center, n leaves
    Star(usize),
    /// H_{n,n}: K_{n,n} minus a perfect matching (n >= 2)
    Crown(usize),
    /// n isolated vertices
    Edgeless(usize),
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    // Zero-pad so lexicographic label order matches numeric order.
    let width = n.to_string().len();
    (1..=n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

/// Builds the canonical labeled instance of a family.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph> {
    let positive = |n: usize, kind: &str| {
        if n == 0 {
            Err(Error::InvalidInput(format!("{kind} needs a positive size")))
        } else {
            Ok(())
        }
    };
    match *spec {
        FamilySpec::Complete(n) => {
            positive(n, "complete")?;
            let vs = numbered("", n);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((vs[i].clone(), vs[j].clone()));
                }
            }
            Graph::new(vs, &edges)
        }
        FamilySpec::Path(n) => {
            positive(n, "path")?;
            let vs = numbered("", n);
            let edges: Vec<_> = (0..n.saturating_sub(1))
                .map(|i| (vs[i].clone(), vs[i + 1].clone()))
                .collect();
            Graph::new(vs, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidInput("cycle needs at least 3 vertices".into()));
            }
            let vs = numbered("", n);
            let mut edges: Vec<_> = (0..n - 1)
                .map(|i| (vs[i].clone(), vs[i + 1].clone()))
                .collect();
            edges.push((vs[n - 1].clone(), vs[0].clone()));
            Graph::new(vs, &edges)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            positive(a, "complete-bipartite")?;
            positive(b, "complete-bipartite")?;
            let left = numbered("a", a);
            let right = numbered("b", b);
            let mut edges = Vec::new();
            for x in &left {
                for y in &right {
                    edges.push((x.clone(), y.clone()));
                }
            }
            Graph::new(left.into_iter().chain(right), &edges)
        }
        FamilySpec::Star(n) => {
            positive(n, "star")?;
            let leaves = numbered("l", n);
            let edges: Vec<_> = leaves.iter().map(|l| ("c".to_string(), l.clone())).collect();
            Graph::new(std::iter::once("c".to_string()).chain(leaves.clone()), &edges)
        }
        FamilySpec::Crown(n) => {
            if n < 2 {
                return Err(Error::InvalidInput("crown needs n >= 2".into()));
            }
            let left = numbered("a", n);
            let right = numbered("b", n);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        edges.push((left[i].clone(), right[j].clone()));
                    }
                }
            }
            Graph::new(left.into_iter().chain(right), &edges)
        }
        FamilySpec::Edgeless(n) => {
            positive(n, "edgeless")?;
            Graph::new(numbered("", n), &[] as &[(String, String)])
        }
    }
}
