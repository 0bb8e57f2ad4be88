//! Graph argument parsing: inline JSON, `-` for stdin, family shorthand
//! like `crown:3` or `cycle:6@1`, or a path to a JSON file.

use std::io::Read;

use wordrep_core::{format::GraphJson, generate_family, FamilySpec, Graph, MarkedGraph};

use crate::CliError;

pub enum GraphArg {
    Plain(Graph),
    Marked(MarkedGraph),
}

impl GraphArg {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphArg::Plain(g) => g,
            GraphArg::Marked(m) => m.graph(),
        }
    }

    pub fn into_marked(self) -> Result<MarkedGraph, CliError> {
        match self {
            GraphArg::Marked(m) => Ok(m),
            GraphArg::Plain(_) => Err(CliError::input(
                "a marked graph is required here: add a \"marked\" field or an @vertex suffix",
            )),
        }
    }
}

pub fn parse_graph_arg(spec: &str) -> Result<GraphArg, CliError> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
        buf
    } else if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else if let Some(arg) = parse_family(spec)? {
        return Ok(arg);
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| CliError::input(format!("cannot read `{spec}`: {e}")))?
    };
    let json: GraphJson = wordrep_core::format::graph_from_json(&text)?;
    if json.marked.is_some() {
        Ok(GraphArg::Marked(json.to_marked()?))
    } else {
        Ok(GraphArg::Plain(json.to_graph()?))
    }
}

/// `family:params` with an optional `@mark`: complete:4, path:5, cycle:6,
/// star:3, crown:3, complete-bipartite:2x3, edgeless:2.
fn parse_family(spec: &str) -> Result<Option<GraphArg>, CliError> {
    let (body, mark) = match spec.split_once('@') {
        Some((body, mark)) => (body, Some(mark)),
        None => (spec, None),
    };
    let Some((kind, params)) = body.split_once(':') else {
        return Ok(None);
    };
    let int = |s: &str| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| CliError::input(format!("bad size `{s}` in `{spec}`")))
    };
    let family = match kind {
        "complete" => FamilySpec::Complete(int(params)?),
        "path" => FamilySpec::Path(int(params)?),
        "cycle" => FamilySpec::Cycle(int(params)?),
        "star" => FamilySpec::Star(int(params)?),
        "crown" => FamilySpec::Crown(int(params)?),
        "edgeless" => FamilySpec::Edgeless(int(params)?),
        "complete-bipartite" => {
            let (a, b) = params
                .split_once('x')
                .ok_or_else(|| CliError::input(format!("expected AxB sizes in `{spec}`")))?;
            FamilySpec::CompleteBipartite(int(a)?, int(b)?)
        }
        _ => return Ok(None),
    };
    let graph = generate_family(&family)?;
    Ok(Some(match mark {
        None => GraphArg::Plain(graph),
        Some(m) => GraphArg::Marked(MarkedGraph::new(graph, m)?),
    }))
}
