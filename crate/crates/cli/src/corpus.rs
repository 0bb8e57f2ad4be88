//! The built-in worked-example corpus: the named values and recomposition
//! examples the toolkit is checked against, executed and asserted.
//! `paper-examples` exits nonzero if any entry diverges.

use rayon::prelude::*;

use wordrep_core::{
    are_isomorphic, classify_recomposition, find_split, generate_family, is_parity,
    is_prn_irreducible, prn, recompose, representation_number, FamilySpec, Graph,
    IrreducibleVerdict, MarkedGraph, PrnSearch, Reason, Verdict, Word,
};

use crate::CliError;

type Outcome = Result<String, String>;

fn marked(g: Graph, m: &str) -> MarkedGraph {
    MarkedGraph::new(g, m).expect("corpus graphs are valid")
}

fn family(spec: FamilySpec) -> Graph {
    generate_family(&spec).expect("corpus families are valid")
}

fn prn_of(g: &Graph) -> Result<usize, String> {
    match prn(g, g.vertex_count().max(2)).map_err(|e| e.to_string())? {
        PrnSearch::Found { k, .. } => Ok(k),
        PrnSearch::ExceedsKMax { .. } => Err("prn search exhausted its cap".into()),
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(format!("{what} = {want:?}"))
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn first_example_sides() -> (MarkedGraph, MarkedGraph) {
    (
        marked(
            Graph::new(["1", "2", "m"], &[("1", "2"), ("2", "m")]).unwrap(),
            "m",
        ),
        marked(
            Graph::new(
                ["n", "3", "4", "5", "6"],
                &[("n", "4"), ("n", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
            )
            .unwrap(),
            "n",
        ),
    )
}

fn second_example_sides() -> (MarkedGraph, MarkedGraph) {
    (
        marked(
            Graph::new(["1", "2", "a"], &[("a", "1"), ("a", "2")]).unwrap(),
            "a",
        ),
        marked(
            Graph::new(
                ["b", "3", "4", "5", "6"],
                &[("b", "4"), ("b", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
            )
            .unwrap(),
            "b",
        ),
    )
}

fn entries() -> Vec<(&'static str, fn() -> Outcome)> {
    vec![
        ("projection and alternation of baabdca", || {
            let w = Word::new("baabdca".chars().map(|c| c.to_string()));
            expect(
                "projection to {a,b}",
                w.project(["a", "b"]).to_string(),
                "b a a b a".to_string(),
            )?;
            expect("a,b alternate", w.alternate("a", "b").map_err(|e| e.to_string())?, false)
        }),
        ("the word b a m' b m' a represents the path on a, b, m'", || {
            let p3 = Graph::new(["a", "b", "m'"], &[("a", "b"), ("b", "m'")]).unwrap();
            let w = Word::new(["b", "a", "m'", "b", "m'", "a"]);
            expect("represents", w.represents(&p3).map_err(|e| e.to_string())?, true)
        }),
        ("complete graphs have both numbers equal to one", || {
            for n in 1..=6 {
                let g = family(FamilySpec::Complete(n));
                expect(
                    "R",
                    representation_number(&g, 3).map_err(|e| e.to_string())?.value(),
                    Some(1),
                )?;
                expect("prn", prn_of(&g)?, 1)?;
            }
            Ok("R = prn = 1 up to K_6".into())
        }),
        ("paths have prn 2, even cycles 3, crowns their side size", || {
            for n in 3..=8 {
                expect("prn of the path", prn_of(&family(FamilySpec::Path(n)))?, 2)?;
            }
            for n in [3usize, 4] {
                expect("prn of the even cycle", prn_of(&family(FamilySpec::Cycle(2 * n)))?, 3)?;
                expect("prn of the crown", prn_of(&family(FamilySpec::Crown(n)))?, n)?;
            }
            Ok("paths 2, even cycles 3, crowns n".into())
        }),
        ("first recomposition example: edges and the negative verdict", || {
            let (g, gp) = first_example_sides();
            let r = recompose(&g, &gp).map_err(|e| e.to_string())?;
            let want = Graph::new(
                ["1", "2", "3", "4", "5", "6"],
                &[("1", "2"), ("2", "4"), ("2", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
            )
            .unwrap();
            expect("recomposed graph", r.clone(), want)?;
            let cert = classify_recomposition(&g, &gp, 3).map_err(|e| e.to_string())?;
            expect("verdict", cert.verdict, Verdict::NotComparability)
        }),
        ("second recomposition example: comparability via the all-adjacent mark", || {
            let (g1, g2) = second_example_sides();
            let r = recompose(&g1, &g2).map_err(|e| e.to_string())?;
            let want = Graph::new(
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
            .unwrap();
            expect("recomposed graph", r.clone(), want)?;
            let cert = classify_recomposition(&g1, &g2, 3).map_err(|e| e.to_string())?;
            expect("verdict", cert.verdict, Verdict::Comparability)?;
            expect("reason", cert.reason, Reason::AllAdjacent)?;
            let kappa = prn_of(g1.graph())?.max(prn_of(g2.graph())?);
            expect("exact prn", prn_of(&r)?, kappa)
        }),
        ("crown recompositions reach the larger side size exactly", || {
            let h33 = family(FamilySpec::Crown(3));
            let left = marked(h33.clone(), "a1");
            let right = {
                let vs: Vec<String> = h33.vertices().iter().map(|v| format!("r{v}")).collect();
                let es: Vec<(String, String)> = h33
                    .edges()
                    .into_iter()
                    .map(|(a, b)| (format!("r{a}"), format!("r{b}")))
                    .collect();
                marked(Graph::new(vs, &es).unwrap(), "ra1")
            };
            let r = recompose(&left, &right).map_err(|e| e.to_string())?;
            expect("prn of crown ∇ crown", prn_of(&r)?, 3)
        }),
        ("recomposing the even cycles C_6 and C_8 has prn 3", || {
            let c6 = marked(family(FamilySpec::Cycle(6)), "1");
            let c8 = {
                let g = family(FamilySpec::Cycle(8));
                let vs: Vec<String> = g.vertices().iter().map(|v| format!("r{v}")).collect();
                let es: Vec<(String, String)> = g
                    .edges()
                    .into_iter()
                    .map(|(a, b)| (format!("r{a}"), format!("r{b}")))
                    .collect();
                marked(Graph::new(vs, &es).unwrap(), "r1")
            };
            let r = recompose(&c6, &c8).map_err(|e| e.to_string())?;
            expect("prn of C_6 ∇ C_8", prn_of(&r)?, 3)
        }),
        ("irreducibility of crowns, even cycles, and the edgeless pair", || {
            expect(
                "crown",
                is_prn_irreducible(&family(FamilySpec::Crown(3)), 4).map_err(|e| e.to_string())?,
                IrreducibleVerdict::Irreducible { k: 3 },
            )?;
            expect(
                "C_6",
                is_prn_irreducible(&family(FamilySpec::Cycle(6)), 4).map_err(|e| e.to_string())?,
                IrreducibleVerdict::Irreducible { k: 3 },
            )?;
            expect(
                "edgeless pair",
                is_prn_irreducible(&family(FamilySpec::Edgeless(2)), 4)
                    .map_err(|e| e.to_string())?,
                IrreducibleVerdict::Irreducible { k: 2 },
            )
        }),
        ("the pendant-extended triangle has prn 2 and equals a recomposition", || {
            let k3 = family(FamilySpec::Complete(3));
            let (pendant, _) = k3.add_pendant("1").map_err(|e| e.to_string())?;
            expect("prn", prn_of(&pendant)?, 2)?;
            let p3 = marked(
                Graph::new(["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap(),
                "x",
            );
            let r = recompose(&marked(k3, "1"), &p3).map_err(|e| e.to_string())?;
            expect(
                "isomorphic to the recomposition with a path end",
                are_isomorphic(&pendant, &r).map_err(|e| e.to_string())?,
                true,
            )
        }),
        ("parity recognition on cycles and cliques", || {
            expect("C_6", is_parity(&family(FamilySpec::Cycle(6))).map_err(|e| e.to_string())?, true)?;
            expect("K_4", is_parity(&family(FamilySpec::Complete(4))).map_err(|e| e.to_string())?, true)?;
            expect("C_5", is_parity(&family(FamilySpec::Cycle(5))).map_err(|e| e.to_string())?, false)?;
            expect(
                "C_5 is prime",
                find_split(&family(FamilySpec::Cycle(5))).map_err(|e| e.to_string())?.is_none(),
                true,
            )
        }),
    ]
}

pub fn run(jobs: usize) -> Result<u8, CliError> {
    let entries = entries();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::input(format!("cannot build worker pool: {e}")))?;
    let results: Vec<(&str, Outcome)> = pool.install(|| {
        entries
            .par_iter()
            .map(|(name, f)| (*name, f()))
            .collect()
    });
    let mut failures = 0usize;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("ok   {name}: {detail}"),
            Err(err) => {
                failures += 1;
                println!("FAIL {name}: {err}");
            }
        }
    }
    println!(
        "{} examples, {} failed",
        results.len(),
        failures
    );
    Ok(if failures == 0 { 0 } else { 4 })
}
