//! `wordrep`: word-representability, split decomposition and comparability
//! analysis with machine-checkable certificates.
//!
//! Exit codes: 0 success, 2 budget exceeded (answer unknown within bounds),
//! 3 input error, 4 internal verification failure.

mod corpus;
mod input;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wordrep_core::{
    classify_recomposition, dimension, format, is_parity, is_prn_irreducible,
    minimal_split_decomposition, orientation_with_role, prn, recompose, representation_number,
    transitive_orientation, DimSearch, Error, Graph, IrreducibleVerdict, Orientation, Poset,
    PrnSearch, RepSearch, Role, SplitTree, Word,
};

use input::parse_graph_arg;

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 3 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BudgetExceeded(_) | Error::TooLarge { .. } => 2,
            Error::Internal(_) => 4,
            _ => 3,
        };
        CliError { message: e.to_string(), code }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "wordrep",
    about = "Word-representable graphs under split decomposition and recomposition",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (dot only where a graph or orientation is emitted)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Uniformity budget for representation-number searches
    /// (default: WORDREP_K_MAX env var, else 3)
    #[arg(long, global = true)]
    k_max: Option<usize>,
    /// Worker threads for batch commands
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a word represents a graph
    CheckWord {
        /// Graph: JSON, file, family shorthand, or - for stdin
        graph: String,
        /// The word, whitespace-separated vertex labels
        word: Vec<String>,
    },
    /// Representation number by complete search
    Repnum { graph: String },
    /// Minimal split decomposition
    Decompose { graph: String },
    /// Recompose two marked graphs, or a whole decomposition tree
    Recompose {
        left: Option<String>,
        right: Option<String>,
        /// Split-tree JSON file to contract instead of two graphs
        #[arg(long)]
        tree: Option<String>,
    },
    /// Classify the recomposition of two marked graphs, with certificates
    Classify { left: String, right: String },
    /// Permutation-representation number with a witness word and realizer
    Prn { graph: String },
    /// Dimension of the induced poset, with a witness realizer
    Dim { graph: String },
    /// A transitive orientation, optionally with a forced source or sink
    Orient {
        graph: String,
        #[arg(long, conflicts_with = "sink")]
        source: Option<String>,
        #[arg(long)]
        sink: Option<String>,
    },
    /// prn-irreducibility test
    Irreducible { graph: String },
    /// Parity-graph recognition via the split decomposition
    Parity { graph: String },
    /// Run the built-in worked-example corpus and verify every outcome
    PaperExamples,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let k_max = cli.k_max.unwrap_or_else(|| {
        std::env::var("WORDREP_K_MAX")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(3)
    });
    match run(cli, k_max) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli, k_max: usize) -> Result<u8, CliError> {
    let format = cli.format;
    match cli.command {
        Command::CheckWord { graph, word } => {
            let g = parse_graph_arg(&graph)?;
            let tokens: Vec<String> = word
                .iter()
                .flat_map(|w| w.split_whitespace().map(str::to_string))
                .collect();
            if tokens.is_empty() {
                return Err(CliError::input("empty word"));
            }
            let w = Word::new(tokens);
            match format {
                Format::Dot => {
                    let alt = w.alternation_graph()?;
                    println!("{}", format::graph_to_dot(&alt, None));
                }
                _ => {
                    let verdict = w.represents(g.graph())?;
                    emit(format, &format!("represents: {verdict}"), || {
                        format!("{{\"represents\":{verdict}}}")
                    });
                }
            }
            Ok(0)
        }
        Command::Repnum { graph } => {
            let g = parse_graph_arg(&graph)?;
            no_dot(format)?;
            match representation_number(g.graph(), k_max)? {
                RepSearch::Found { k, witness } => {
                    emit(format, &format!("R = {k}\nwitness: {witness}"), || {
                        format!("{{\"k\":{k},\"witness\":\"{witness}\"}}")
                    });
                    Ok(0)
                }
                RepSearch::ExceedsKMax { k_max } => {
                    emit(format, &format!("unknown above k_max = {k_max}"), || {
                        format!("{{\"exceeds_k_max\":{k_max}}}")
                    });
                    Ok(2)
                }
            }
        }
        Command::Decompose { graph } => {
            let g = parse_graph_arg(&graph)?;
            let tree = minimal_split_decomposition(g.graph())?;
            match format {
                Format::Json => println!("{}", tree.to_json()),
                Format::Dot => println!("{}", tree_to_dot(&tree)),
                Format::Text => {
                    for (i, c) in tree.components().iter().enumerate() {
                        println!(
                            "component {i}: {:?} on {{{}}}, {} edges",
                            c.tag,
                            c.graph.vertices().join(", "),
                            c.graph.edge_count()
                        );
                    }
                    for l in tree.links() {
                        println!(
                            "link: component {} at {} -- component {} at {}",
                            l.left, l.left_mark, l.right, l.right_mark
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Recompose { left, right, tree } => {
            let g = match (&tree, &left, &right) {
                (Some(path), None, None) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::input(format!("cannot read `{path}`: {e}")))?;
                    SplitTree::from_json(&text)?.recompose_all()?
                }
                (None, Some(l), Some(r)) => {
                    let lm = parse_graph_arg(l)?.into_marked()?;
                    let rm = parse_graph_arg(r)?.into_marked()?;
                    recompose(&lm, &rm)?
                }
                _ => {
                    return Err(CliError::input(
                        "pass either two marked graphs or --tree <file>",
                    ))
                }
            };
            match format {
                Format::Dot => println!("{}", format::graph_to_dot(&g, None)),
                Format::Json => println!("{}", format::graph_to_json(&g)),
                Format::Text => {
                    println!("vertices: {}", g.vertices().join(" "));
                    for (a, b) in g.edges() {
                        println!("edge: {a} -- {b}");
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { left, right } => {
            let lm = parse_graph_arg(&left)?.into_marked()?;
            let rm = parse_graph_arg(&right)?.into_marked()?;
            let cert = classify_recomposition(&lm, &rm, k_max)?;
            match format {
                Format::Json => println!("{}", cert.to_json()),
                Format::Dot => match &cert.witness_orientation {
                    Some(o) => println!("{}", orientation_dot(&recompose(&lm, &rm)?, o)),
                    None => return Err(CliError::input("no orientation witness to draw")),
                },
                Format::Text => {
                    let verdict = match cert.verdict {
                        wordrep_core::Verdict::Comparability => "comparability",
                        wordrep_core::Verdict::NotComparability => "not a comparability graph",
                        wordrep_core::Verdict::WordRepresentableOnly => {
                            "word-representable (a side is not comparability)"
                        }
                    };
                    let reason = match cert.reason {
                        wordrep_core::Reason::SourceSink => {
                            "via source/sink orientations at the marks"
                        }
                        wordrep_core::Reason::AllAdjacent => "via an all-adjacent mark",
                        wordrep_core::Reason::Neither => "no qualifying condition at the marks",
                    };
                    println!("verdict: {verdict} ({reason})");
                    if let Some((lo, hi)) = cert.prn_bounds {
                        if lo == hi {
                            println!("prn: exactly {lo}");
                        } else {
                            println!("prn: {lo} or {hi}");
                        }
                    }
                    if let Some(w) = &cert.witness_word {
                        println!("witness word: {w}");
                    }
                    if let Some(o) = &cert.witness_orientation {
                        let arcs: Vec<String> =
                            o.arcs().map(|(a, b)| format!("{a}->{b}")).collect();
                        println!("witness orientation: {}", arcs.join(" "));
                    }
                    for note in &cert.notes {
                        println!("note: {note}");
                    }
                }
            }
            Ok(0)
        }
        Command::Prn { graph } => {
            let g = parse_graph_arg(&graph)?;
            no_dot(format)?;
            let cap = g.graph().vertex_count().max(2);
            match prn(g.graph(), cap.min(k_max.max(2)))? {
                PrnSearch::Found { k, witness, realizer } => {
                    emit(
                        format,
                        &format!(
                            "prn = {k}\nwitness: {witness}\nrealizer:\n{}",
                            realizer
                                .orders()
                                .iter()
                                .map(|o| format!("  {}", o.join(" ")))
                                .collect::<Vec<_>>()
                                .join("\n")
                        ),
                        || {
                            format!(
                                "{{\"k\":{k},\"witness\":\"{witness}\",\"realizer\":{}}}",
                                orders_json(realizer.orders())
                            )
                        },
                    );
                    Ok(0)
                }
                PrnSearch::ExceedsKMax { k_max } => {
                    emit(format, &format!("unknown above k_max = {k_max}"), || {
                        format!("{{\"exceeds_k_max\":{k_max}}}")
                    });
                    Ok(2)
                }
            }
        }
        Command::Dim { graph } => {
            let g = parse_graph_arg(&graph)?;
            no_dot(format)?;
            let t = transitive_orientation(g.graph())?.ok_or(Error::NotComparability)?;
            let p = Poset::from_orientation(g.graph(), &t)?;
            let cap = p.len().max(2);
            match dimension(&p, cap.min(k_max.max(2)))? {
                DimSearch::Found { k, realizer } => {
                    emit(
                        format,
                        &format!(
                            "dim = {k}\nrealizer:\n{}",
                            realizer
                                .orders()
                                .iter()
                                .map(|o| format!("  {}", o.join(" ")))
                                .collect::<Vec<_>>()
                                .join("\n")
                        ),
                        || format!("{{\"k\":{k},\"realizer\":{}}}", orders_json(realizer.orders())),
                    );
                    Ok(0)
                }
                DimSearch::ExceedsKMax { k_max } => {
                    emit(format, &format!("unknown above k_max = {k_max}"), || {
                        format!("{{\"exceeds_k_max\":{k_max}}}")
                    });
                    Ok(2)
                }
            }
        }
        Command::Orient { graph, source, sink } => {
            let g = parse_graph_arg(&graph)?;
            let oriented = match (&source, &sink) {
                (Some(v), None) => orientation_with_role(g.graph(), v, Role::Source)?,
                (None, Some(v)) => orientation_with_role(g.graph(), v, Role::Sink)?,
                (None, None) => transitive_orientation(g.graph())?,
                _ => unreachable!("clap forbids both"),
            };
            match oriented {
                None => {
                    let what = match (&source, &sink) {
                        (Some(v), _) => format!("no transitive orientation with source {v}"),
                        (_, Some(v)) => format!("no transitive orientation with sink {v}"),
                        _ => "not a comparability graph".into(),
                    };
                    emit(format, &what, || {
                        format!("{{\"orientation\":null,\"detail\":\"{what}\"}}")
                    });
                    Ok(0)
                }
                Some(o) => {
                    match format {
                        Format::Dot => println!("{}", orientation_dot(g.graph(), &o)),
                        Format::Json => {
                            let arcs: Vec<(String, String)> =
                                o.arcs().map(|(a, b)| (a.to_string(), b.to_string())).collect();
                            println!(
                                "{}",
                                serde_json::to_string(&arcs).expect("arcs serialize")
                            );
                        }
                        Format::Text => {
                            for (a, b) in o.arcs() {
                                println!("{a} -> {b}");
                            }
                        }
                    }
                    Ok(0)
                }
            }
        }
        Command::Irreducible { graph } => {
            let g = parse_graph_arg(&graph)?;
            no_dot(format)?;
            let cap = g.graph().vertex_count().max(2);
            match is_prn_irreducible(g.graph(), cap)? {
                IrreducibleVerdict::Irreducible { k } => {
                    emit(format, &format!("prn-irreducible with k = {k}"), || {
                        format!("{{\"irreducible\":true,\"k\":{k}}}")
                    });
                }
                IrreducibleVerdict::NotIrreducible { witness } => {
                    let detail = match &witness {
                        Some(v) => format!("not prn-irreducible: deleting {v} keeps the prn"),
                        None => "not prn-irreducible".to_string(),
                    };
                    emit(format, &detail, || match &witness {
                        Some(v) => format!("{{\"irreducible\":false,\"witness\":\"{v}\"}}"),
                        None => "{\"irreducible\":false}".to_string(),
                    });
                }
            }
            Ok(0)
        }
        Command::Parity { graph } => {
            let g = parse_graph_arg(&graph)?;
            no_dot(format)?;
            let verdict = is_parity(g.graph())?;
            emit(format, &format!("parity graph: {verdict}"), || {
                format!("{{\"parity\":{verdict}}}")
            });
            Ok(0)
        }
        Command::PaperExamples => corpus::run(cli.jobs),
    }
}

fn emit(format: Format, text: &str, json: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", json()),
        _ => println!("{text}"),
    }
}

fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        Err(CliError::input("dot output is not defined for this command"))
    } else {
        Ok(())
    }
}

fn orders_json(orders: &[Vec<String>]) -> String {
    serde_json::to_string(orders).expect("orders serialize")
}

fn orientation_dot(g: &Graph, o: &Orientation) -> String {
    let arcs: Vec<(String, String)> =
        o.arcs().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    format::arcs_to_dot(g.vertices(), &arcs)
}

/// One DOT graph for the whole tree: solid edges inside components, dashed
/// edges along the marked-vertex links.
fn tree_to_dot(tree: &SplitTree) -> String {
    let mut out = String::from("graph {\n");
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    for (i, c) in tree.components().iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{i} {{\n    label=\"{:?}\";\n", c.tag));
        let marks: BTreeSet<&str> = tree
            .links()
            .iter()
            .flat_map(|l| {
                [
                    (l.left == i).then_some(l.left_mark.as_str()),
                    (l.right == i).then_some(l.right_mark.as_str()),
                ]
            })
            .flatten()
            .collect();
        for v in c.graph.vertices() {
            if marks.contains(v.as_str()) {
                out.push_str(&format!("    {} [peripheries=2];\n", quote(v)));
            } else {
                out.push_str(&format!("    {};\n", quote(v)));
            }
        }
        for (a, b) in c.graph.edges() {
            out.push_str(&format!("    {} -- {};\n", quote(&a), quote(&b)));
        }
        out.push_str("  }\n");
    }
    for l in tree.links() {
        out.push_str(&format!(
            "  {} -- {} [style=dashed];\n",
            quote(&l.left_mark),
            quote(&l.right_mark)
        ));
    }
    out.push_str("}\n");
    out
}
