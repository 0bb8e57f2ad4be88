//! Graph interchange: JSON (bit-exact, sorted) and DOT export.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedGraph};

/// Wire form of a graph: sorted vertices, sorted edge pairs, optional mark.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<String>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges(),
            marked: None,
        }
    }

    pub fn from_marked(g: &MarkedGraph) -> Self {
        GraphJson {
            vertices: g.graph().vertices().to_vec(),
            edges: g.graph().edges(),
            marked: Some(g.marked().to_string()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.vertices.iter().cloned(), &self.edges)
    }

    pub fn to_marked(&self) -> Result<MarkedGraph> {
        let marked = self
            .marked
            .clone()
            .ok_or_else(|| Error::InvalidInput("graph has no \"marked\" field".into()))?;
        MarkedGraph::new(self.to_graph()?, marked)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn marked_graph_to_json(g: &MarkedGraph) -> String {
    serde_json::to_string(&GraphJson::from_marked(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<GraphJson> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad graph JSON: {e}")))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT. The marked vertex, if any, is drawn doubled.
pub fn graph_to_dot(g: &Graph, marked: Option<&str>) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        if Some(v.as_str()) == marked {
            out.push_str(&format!("  {} [peripheries=2];\n", quote(v)));
        } else {
            out.push_str(&format!("  {};\n", quote(v)));
        }
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(&a), quote(&b)));
    }
    out.push_str("}\n");
    out
}

/// Directed DOT from an explicit arc list (already ordered tail, head).
pub fn arcs_to_dot(vertices: &[String], arcs: &[(String, String)]) -> String {
    let mut out = String::from("digraph {\n");
    for v in vertices {
        out.push_str(&format!("  {};\n", quote(v)));
    }
    for (a, b) in arcs {
        out.push_str(&format!("  {} -> {};\n", quote(a), quote(b)));
    }
    out.push_str("}\n");
    out
}
