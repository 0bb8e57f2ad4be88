//! Shared fixtures for the search-core benchmarks.

use wordrep_core::{generate_family, FamilySpec, Graph, MarkedGraph};

pub fn crown(n: usize) -> Graph {
    generate_family(&FamilySpec::Crown(n)).expect("valid crown")
}

pub fn cycle(n: usize) -> Graph {
    generate_family(&FamilySpec::Cycle(n)).expect("valid cycle")
}

/// The triangle with a pendant on each corner; small but split-rich.
pub fn net() -> Graph {
    Graph::new(
        ["1", "2", "3", "4", "5", "6"],
        &[("1", "2"), ("2", "4"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
    )
    .expect("valid net")
}

pub fn relabeled(g: &Graph, prefix: &str, mark: &str) -> MarkedGraph {
    let vertices: Vec<String> = g.vertices().iter().map(|v| format!("{prefix}{v}")).collect();
    let edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| (format!("{prefix}{a}"), format!("{prefix}{b}")))
        .collect();
    MarkedGraph::new(
        Graph::new(vertices, &edges).expect("relabel keeps validity"),
        format!("{prefix}{mark}"),
    )
    .expect("mark with neighbors")
}
