//! Comparability machinery: transitive orientations, induced posets,
//! realizers and dimension, the permutation-representation number, and
//! prn-irreducibility.

mod dim;
mod orient;
mod poset;

pub use dim::{dimension, DimSearch, DIM_ELEMENT_LIMIT};
pub use orient::{
    enumerate_transitive_orientations, orientation_with_role, transitive_orientation, Orientation,
    Role,
};
pub use poset::{Poset, Realizer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::word::Word;

/// Outcome of the prn computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrnSearch {
    Found {
        k: usize,
        /// Concatenation of the realizer's permutations; re-verified to
        /// represent the graph.
        witness: Word,
        realizer: Realizer,
    },
    ExceedsKMax {
        k_max: usize,
    },
}

impl PrnSearch {
    pub fn value(&self) -> Option<usize> {
        match self {
            PrnSearch::Found { k, .. } => Some(*k),
            PrnSearch::ExceedsKMax { .. } => None,
        }
    }
}

/// Builds the word `p_1 p_2 ... p_k` out of a realizer's orders.
pub fn permutation_word(realizer: &Realizer) -> Word {
    Word::new(
        realizer
            .orders()
            .iter()
            .flat_map(|order| order.iter().cloned()),
    )
}

/// R^p(G): the least number of vertex permutations whose concatenation
/// represents `g`; equals the dimension of the induced poset. Errors on
/// non-comparability graphs, for which the prn is undefined.
pub fn prn(g: &Graph, k_max: usize) -> Result<PrnSearch> {
    let t = transitive_orientation(g)?.ok_or(Error::NotComparability)?;
    let p = Poset::from_orientation(g, &t)?;
    match dimension(&p, k_max)? {
        DimSearch::ExceedsKMax { k_max } => Ok(PrnSearch::ExceedsKMax { k_max }),
        DimSearch::Found { k, realizer } => {
            let witness = permutation_word(&realizer);
            if !witness.represents(g)? {
                return Err(Error::Internal(format!(
                    "realizer word `{witness}` does not represent the graph"
                )));
            }
            Ok(PrnSearch::Found { k, witness, realizer })
        }
    }
}

/// Whether `v` can be a source under some transitive orientation, decided by
/// the pendant test: attach a fresh vertex to `v` alone and ask whether the
/// result is still a comparability graph.
pub fn is_source_feasible(g: &Graph, v: &str) -> Result<bool> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    if transitive_orientation(g)?.is_none() {
        return Err(Error::NotComparability);
    }
    let (pendant, _) = g.add_pendant(v)?;
    Ok(transitive_orientation(&pendant)?.is_some())
}

/// Sink feasibility coincides with source feasibility: reversing an
/// orientation swaps sources and sinks.
pub fn is_sink_feasible(g: &Graph, v: &str) -> Result<bool> {
    is_source_feasible(g, v)
}

/// deg(v) = |V| - 1.
pub fn is_all_adjacent(g: &Graph, v: &str) -> Result<bool> {
    Ok(g.degree(v)? + 1 == g.vertex_count())
}

/// Extends a realizer of the subposet without `m` to a realizer of the full
/// poset, one order larger.
///
/// For a minimal `m` (role `Source`) the new orders are `m < L_i` plus the
/// order that interleaves `m` between the elements outside and inside the
/// up-set of `m`; dually for a maximal `m` (role `Sink`).
pub fn hiraguchi_extend(
    realizer: &Realizer,
    poset: &Poset,
    m: &str,
    role: Role,
) -> Result<Realizer> {
    if poset.index_of(m).is_none() {
        return Err(Error::UnknownVertex(m.to_string()));
    }
    match role {
        Role::Source if !poset.is_minimal(m) => {
            return Err(Error::InvalidInput(format!(
                "`{m}` is not a minimal element, cannot extend as a source"
            )))
        }
        Role::Sink if !poset.is_maximal(m) => {
            return Err(Error::InvalidInput(format!(
                "`{m}` is not a maximal element, cannot extend as a sink"
            )))
        }
        _ => {}
    }
    let sub = poset.delete_element(m)?;
    if !realizer.realizes(&sub)? {
        return Err(Error::InvalidInput(format!(
            "input realizer does not realize the subposet without `{m}`"
        )));
    }
    let last = realizer
        .orders()
        .last()
        .ok_or_else(|| Error::InvalidInput("empty realizer".into()))?;

    let restrict = |order: &[String], inside: bool, set: &std::collections::BTreeSet<String>| {
        order
            .iter()
            .filter(|v| set.contains(*v) == inside)
            .cloned()
            .collect::<Vec<String>>()
    };
    let mut orders: Vec<Vec<String>> = Vec::with_capacity(realizer.size() + 1);
    match role {
        Role::Source => {
            for order in realizer.orders() {
                let mut o = Vec::with_capacity(order.len() + 1);
                o.push(m.to_string());
                o.extend(order.iter().cloned());
                orders.push(o);
            }
            let up = poset.up_set(m);
            let mut o = restrict(last, false, &up);
            o.push(m.to_string());
            o.extend(restrict(last, true, &up));
            orders.push(o);
        }
        Role::Sink => {
            for order in realizer.orders() {
                let mut o = order.clone();
                o.push(m.to_string());
                orders.push(o);
            }
            let down = poset.down_set(m);
            let mut o = restrict(last, true, &down);
            o.push(m.to_string());
            o.extend(restrict(last, false, &down));
            orders.push(o);
        }
    }
    let extended = Realizer::new(orders);
    if !extended.realizes(poset)? {
        return Err(Error::Internal(
            "extended realizer does not realize the full poset".into(),
        ));
    }
    Ok(extended)
}

/// Verdict of the prn-irreducibility test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IrreducibleVerdict {
    /// prn is k >= 2 and deleting any one vertex drops it to k - 1.
    Irreducible { k: usize },
    /// Not irreducible; when the prn is at least 2 the witness is a vertex
    /// whose deletion keeps the prn unchanged.
    NotIrreducible { witness: Option<String> },
}

/// Tests the definition directly: prn k >= 2, and prn(G - a) = k - 1 for
/// every vertex a.
pub fn is_prn_irreducible(g: &Graph, k_max: usize) -> Result<IrreducibleVerdict> {
    let k = match prn(g, k_max)? {
        PrnSearch::ExceedsKMax { k_max } => {
            return Err(Error::BudgetExceeded(format!("prn unknown above {k_max}")))
        }
        PrnSearch::Found { k, .. } => k,
    };
    if k < 2 {
        // complete graphs: deleting a vertex keeps prn 1
        return Ok(IrreducibleVerdict::NotIrreducible {
            witness: g.vertices().first().cloned().filter(|_| g.vertex_count() > 1),
        });
    }
    for v in g.vertices() {
        let reduced = g.delete_vertex(v)?;
        let sub = match prn(&reduced, k)? {
            PrnSearch::ExceedsKMax { .. } => {
                return Err(Error::Internal(format!(
                    "prn of an induced subgraph exceeded the prn of the graph at `{v}`"
                )))
            }
            PrnSearch::Found { k, .. } => k,
        };
        if sub != k - 1 {
            return Ok(IrreducibleVerdict::NotIrreducible {
                witness: Some(v.clone()),
            });
        }
    }
    Ok(IrreducibleVerdict::Irreducible { k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};
    use crate::graph::Graph;

    fn gadget_graph() -> Graph {
        // five vertices; b sees the triangle's base, 3 and 6 hang off it
        Graph::new(
            ["3", "4", "5", "6", "b"],
            &[("b", "4"), ("b", "5"), ("4", "5"), ("3", "4"), ("5", "6")],
        )
        .unwrap()
    }

    #[test]
    fn prn_of_complete_graphs_is_one() {
        for n in 1..=6 {
            let g = generate_family(&FamilySpec::Complete(n)).unwrap();
            assert_eq!(prn(&g, 3).unwrap().value(), Some(1), "K_{n}");
        }
    }

    #[test]
    fn prn_of_paths_is_two() {
        for n in 3..=8 {
            let g = generate_family(&FamilySpec::Path(n)).unwrap();
            let PrnSearch::Found { k, witness, .. } = prn(&g, 4).unwrap() else {
                panic!()
            };
            assert_eq!(k, 2, "P_{n}");
            assert!(witness.represents(&g).unwrap());
        }
    }

    #[test]
    fn prn_of_even_cycles_is_three() {
        for n in [6, 8] {
            let g = generate_family(&FamilySpec::Cycle(n)).unwrap();
            assert_eq!(prn(&g, 4).unwrap().value(), Some(3), "C_{n}");
        }
    }

    #[test]
    fn prn_of_crowns_matches_side_size() {
        for n in [3, 4] {
            let g = generate_family(&FamilySpec::Crown(n)).unwrap();
            assert_eq!(prn(&g, 5).unwrap().value(), Some(n), "H_{{{n},{n}}}");
        }
    }

    #[test]
    fn prn_rejects_non_comparability() {
        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(prn(&c5, 3).unwrap_err(), Error::NotComparability);
    }

    #[test]
    fn source_feasibility_examples() {
        let star = generate_family(&FamilySpec::Star(2)).unwrap();
        assert!(is_source_feasible(&star, "c").unwrap());

        // every vertex of a complete graph can head a linear order
        let k4 = generate_family(&FamilySpec::Complete(4)).unwrap();
        for v in k4.vertices() {
            assert!(is_source_feasible(&k4, v).unwrap());
        }

        assert!(!is_source_feasible(&gadget_graph(), "b").unwrap());
    }

    #[test]
    fn feasibility_agrees_with_orientation_enumeration() {
        let g = gadget_graph();
        let any_source = enumerate_transitive_orientations(&g)
            .unwrap()
            .iter()
            .any(|t| t.is_source("b"));
        let any_sink = enumerate_transitive_orientations(&g)
            .unwrap()
            .iter()
            .any(|t| t.is_sink("b"));
        assert!(!any_source && !any_sink);
    }

    #[test]
    fn all_adjacent_examples() {
        let k4 = generate_family(&FamilySpec::Complete(4)).unwrap();
        for v in k4.vertices() {
            assert!(is_all_adjacent(&k4, v).unwrap());
        }
        let star = generate_family(&FamilySpec::Star(3)).unwrap();
        assert!(is_all_adjacent(&star, "c").unwrap());
        assert!(!is_all_adjacent(&star, "l1").unwrap());
    }

    #[test]
    fn hiraguchi_star_example() {
        let p = Poset::new(["a", "b", "m"], &[("m", "a"), ("m", "b")]).unwrap();
        let l = Realizer::new(vec![
            vec!["a".into(), "b".into()],
            vec!["b".into(), "a".into()],
        ]);
        let m = hiraguchi_extend(&l, &p, "m", Role::Source).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(
            m.orders(),
            &[
                vec!["m".to_string(), "a".to_string(), "b".to_string()],
                vec!["m".to_string(), "b".to_string(), "a".to_string()],
                vec!["m".to_string(), "b".to_string(), "a".to_string()],
            ]
        );
        assert!(m.realizes(&p).unwrap());
    }

    #[test]
    fn hiraguchi_chain_example() {
        let p = Poset::new(["a", "m"], &[("m", "a")]).unwrap();
        let l = Realizer::new(vec![vec!["a".into()]]);
        let m = hiraguchi_extend(&l, &p, "m", Role::Source).unwrap();
        let expected = vec![vec!["m".to_string(), "a".to_string()]; 2];
        assert_eq!(m.orders(), expected.as_slice());
        assert!(m.realizes(&p).unwrap());
    }

    #[test]
    fn hiraguchi_on_a_crown_with_a_fresh_minimum() {
        // a pendant attached to the crown stays comparability, so the fresh
        // vertex can enter its poset as a new minimal element
        let crown = generate_family(&FamilySpec::Crown(3)).unwrap();
        let (g, m) = crown.add_pendant("a1").unwrap();
        let t = orientation_with_role(&g, &m, Role::Source).unwrap().expect("feasible");
        let p = Poset::from_orientation(&g, &t).unwrap();
        let sub = p.delete_element(&m).unwrap();
        let DimSearch::Found { realizer, .. } = dimension(&sub, 6).unwrap() else {
            panic!()
        };
        let extended = hiraguchi_extend(&realizer, &p, &m, Role::Source).unwrap();
        assert_eq!(extended.size(), realizer.size() + 1);
        assert!(extended.realizes(&p).unwrap());
    }

    #[test]
    fn hiraguchi_rejects_non_minimal() {
        let p = Poset::new(["a", "m"], &[("a", "m")]).unwrap();
        let l = Realizer::new(vec![vec!["a".into()]]);
        assert!(hiraguchi_extend(&l, &p, "m", Role::Source).is_err());
        assert!(hiraguchi_extend(&l, &p, "m", Role::Sink).is_ok());
    }

    #[test]
    fn irreducibility_examples() {
        let h33 = generate_family(&FamilySpec::Crown(3)).unwrap();
        assert_eq!(
            is_prn_irreducible(&h33, 4).unwrap(),
            IrreducibleVerdict::Irreducible { k: 3 }
        );
        let c6 = generate_family(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(
            is_prn_irreducible(&c6, 4).unwrap(),
            IrreducibleVerdict::Irreducible { k: 3 }
        );
        let e2 = generate_family(&FamilySpec::Edgeless(2)).unwrap();
        assert_eq!(
            is_prn_irreducible(&e2, 4).unwrap(),
            IrreducibleVerdict::Irreducible { k: 2 }
        );
    }

    #[test]
    fn non_irreducible_examples() {
        let k3 = generate_family(&FamilySpec::Complete(3)).unwrap();
        assert!(matches!(
            is_prn_irreducible(&k3, 4).unwrap(),
            IrreducibleVerdict::NotIrreducible { witness: Some(_) }
        ));
        let p4 = generate_family(&FamilySpec::Path(4)).unwrap();
        assert!(matches!(
            is_prn_irreducible(&p4, 4).unwrap(),
            IrreducibleVerdict::NotIrreducible { witness: Some(_) }
        ));
    }
}
