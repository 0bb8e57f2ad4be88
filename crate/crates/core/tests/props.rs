//! Property tests for the engine invariants: projection algebra, shift and
//! padding stability, isomorphism symmetry, split round-trips, and
//! monotonicity of the representation numbers under induced subgraphs.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wordrep_core::{
    are_isomorphic, find_split, isomorphic_with_pin, prn, recompose, representation_number,
    split_once, transitive_orientation, Graph, MarkedGraph, PrnSearch, RepSearch, ShiftMode,
    UniformWord, Word,
};

// a small alphabet keeps pair coverage dense
fn letter() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["a", "b", "c", "d", "e"]).prop_map(str::to_string)
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..20).prop_map(Word::new)
}

fn subset() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(letter(), 0..5)
}

proptest! {
    #[test]
    fn projection_composes(w in word(), b in subset(), c in subset()) {
        let b: BTreeSet<String> = b.into_iter().collect();
        let c: BTreeSet<String> = c.into_iter().collect();
        let twice = w
            .project(b.iter().map(String::as_str))
            .project(c.iter().map(String::as_str));
        let inter: Vec<&str> = b.intersection(&c).map(String::as_str).collect();
        prop_assert_eq!(twice, w.project(inter));
    }

    #[test]
    fn alternation_is_symmetric(w in word()) {
        for (a, b) in [("a", "b"), ("b", "d"), ("c", "e")] {
            prop_assert_eq!(w.alternate(a, b).unwrap(), w.alternate(b, a).unwrap());
        }
    }

    #[test]
    fn permutations_represent_complete_graphs(
        perm in Just(vec!["a", "b", "c", "d", "e", "f"]).prop_shuffle()
    ) {
        let w = Word::new(perm.iter().map(|s| s.to_string()));
        let g = w.alternation_graph().unwrap();
        prop_assert!(g.is_complete());
        prop_assert_eq!(g.vertex_count(), 6);
    }
}

fn random_k_uniform(rng: &mut ChaCha8Rng, n: usize, k: usize) -> UniformWord {
    let letters: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let mut seq: Vec<String> = letters
        .iter()
        .flat_map(|l| std::iter::repeat_n(l.clone(), k))
        .collect();
    seq.shuffle(rng);
    UniformWord::new(Word::new(seq)).unwrap()
}

#[test]
fn cyclic_shifts_preserve_what_a_word_represents() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=3);
        let w = random_k_uniform(&mut rng, n, k);
        let g = w.word().alternation_graph().unwrap();
        for mode in [ShiftMode::Prefix, ShiftMode::Suffix] {
            let m = g.vertices()[rng.gen_range(0..n)].clone();
            let shifted = w.cyclic_shift_normalize(&m, mode).unwrap();
            assert!(
                shifted.word().represents(&g).unwrap(),
                "shift of `{}` at `{m}` lost the graph",
                w.word()
            );
        }
    }
}

#[test]
fn padding_preserves_what_a_word_represents() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=2);
        let w = random_k_uniform(&mut rng, n, k);
        let g = w.word().alternation_graph().unwrap();
        let t = k + rng.gen_range(1..=2);
        let padded = w.pad_uniform(&g, t).unwrap();
        assert_eq!(padded.k(), t);
        assert!(padded.word().represents(&g).unwrap());
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(labels, &edges).unwrap()
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.4);
        let h = random_graph(&mut rng, n, 0.4);
        assert!(are_isomorphic(&g, &g).unwrap());
        assert_eq!(
            are_isomorphic(&g, &h).unwrap(),
            are_isomorphic(&h, &g).unwrap()
        );
    }
}

#[test]
fn splits_round_trip_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut tested = 0;
    while tested < 60 {
        let n = rng.gen_range(4..=8);
        let g = random_connected(&mut rng, n, 0.5);
        let Some(split) = find_split(&g).unwrap() else {
            continue;
        };
        let (left, right) = split_once(&g, &split).unwrap();
        assert_eq!(recompose(&left, &right).unwrap(), g);
        tested += 1;
    }
}

#[test]
fn recomposition_contains_both_sides_as_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..40 {
        let n1 = rng.gen_range(2..=4);
        let n2 = rng.gen_range(2..=4);
        let g1 = random_connected(&mut rng, n1, 0.6);
        let left = MarkedGraph::new(g1.clone(), g1.vertices()[0].clone()).unwrap();
        let shifted: Graph = {
            let labels: Vec<String> = (1..=n2).map(|i| format!("r{i}")).collect();
            let mut edges = Vec::new();
            for i in 0..n2 {
                for j in i + 1..n2 {
                    if rng.gen_bool(0.6) {
                        edges.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            match Graph::new(labels, &edges) {
                Ok(g) if g.is_connected() => g,
                _ => continue,
            }
        };
        let right = MarkedGraph::new(shifted.clone(), shifted.vertices()[0].clone()).unwrap();
        let combined = recompose(&left, &right).unwrap();

        // replace the left mark by any neighbor of the right mark
        let b = right.marked_neighbors().iter().next().unwrap().clone();
        let mut keep: Vec<String> = left.inner_vertices();
        keep.push(b.clone());
        let induced = combined
            .induced_subgraph(keep.iter().map(String::as_str))
            .unwrap();
        assert!(
            isomorphic_with_pin(&induced, &b, left.graph(), left.marked()).unwrap(),
            "left side not recovered as an induced subgraph"
        );
    }
}

#[test]
fn representation_number_is_monotone_under_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let RepSearch::Found { k, .. } = representation_number(&g, 3).unwrap() else {
            continue;
        };
        let keep: Vec<String> = g
            .vertices()
            .iter()
            .filter(|_| rng.gen_bool(0.7))
            .cloned()
            .collect();
        if keep.is_empty() {
            continue;
        }
        let h = g.induced_subgraph(keep.iter().map(String::as_str)).unwrap();
        let RepSearch::Found { k: sub, .. } = representation_number(&h, 3).unwrap() else {
            panic!("induced subgraph lost representability within the same budget")
        };
        assert!(sub <= k, "R went up from {k} to {sub} on an induced subgraph");
    }
}

#[test]
fn prn_is_monotone_under_induced_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut tested = 0;
    while tested < 25 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 0.5);
        if transitive_orientation(&g).unwrap().is_none() {
            continue;
        }
        let PrnSearch::Found { k, .. } = prn(&g, 6).unwrap() else {
            continue;
        };
        let keep: Vec<String> = g
            .vertices()
            .iter()
            .filter(|_| rng.gen_bool(0.7))
            .cloned()
            .collect();
        if keep.is_empty() {
            continue;
        }
        let h = g.induced_subgraph(keep.iter().map(String::as_str)).unwrap();
        let PrnSearch::Found { k: sub, .. } = prn(&h, 6).unwrap() else {
            panic!("induced subgraph of a comparability graph must stay comparability")
        };
        assert!(sub <= k);
        tested += 1;
    }
}

#[test]
fn prn_does_not_depend_on_the_chosen_orientation() {
    // the prn is defined through one induced poset; check that every
    // transitive orientation of every small comparability graph induces a
    // poset of the same dimension
    use wordrep_core::{dimension, enumerate_transitive_orientations, Poset};
    let mut graphs = 0usize;
    for g in wordrep_core::enumerate::connected_graphs_up_to(7).unwrap() {
        let orientations = enumerate_transitive_orientations(&g).unwrap();
        if orientations.is_empty() {
            continue;
        }
        let mut dims = BTreeSet::new();
        for t in &orientations {
            let p = Poset::from_orientation(&g, t).unwrap();
            dims.insert(dimension(&p, g.vertex_count().max(2)).unwrap().value().unwrap());
        }
        assert_eq!(
            dims.len(),
            1,
            "orientations of {g:?} disagree on dimension: {dims:?}"
        );
        graphs += 1;
    }
    assert!(graphs > 700, "the sweep covered {graphs} comparability graphs");
}

#[test]
fn recomposition_of_larger_sides_keeps_the_maximum() {
    // sampled companion to the exhaustive small corpus: sides up to six
    // vertices, oracle on both routes
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let mut tested = 0;
    while tested < 15 {
        let n1 = rng.gen_range(4..=6);
        let n2 = rng.gen_range(4..=6);
        let g1 = random_connected(&mut rng, n1, 0.5);
        let g2 = {
            let labels: Vec<String> = (1..=n2).map(|i| format!("r{i}")).collect();
            let mut edges = Vec::new();
            for i in 0..n2 {
                for j in i + 1..n2 {
                    if rng.gen_bool(0.5) {
                        edges.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            match Graph::new(labels, &edges) {
                Ok(g) if g.is_connected() => g,
                _ => continue,
            }
        };
        let left = MarkedGraph::new(g1.clone(), g1.vertices()[0].clone()).unwrap();
        let right = MarkedGraph::new(g2.clone(), g2.vertices()[0].clone()).unwrap();
        let (Some(k), Some(kp)) = (
            representation_number(&g1, 3).unwrap().value(),
            representation_number(&g2, 3).unwrap().value(),
        ) else {
            continue;
        };
        let combined = recompose(&left, &right).unwrap();
        assert_eq!(
            representation_number(&combined, 3).unwrap().value(),
            Some(k.max(kp))
        );
        tested += 1;
    }
}

#[test]
fn any_split_preserves_the_representation_number() {
    // the decomposition identity holds for arbitrary splits, not just the
    // canonical tree; sample first-found splits and compare both routes
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut tested = 0;
    while tested < 40 {
        let n = rng.gen_range(4..=7);
        let g = random_connected(&mut rng, n, 0.5);
        let Some(split) = find_split(&g).unwrap() else {
            continue;
        };
        let (left, right) = split_once(&g, &split).unwrap();
        let direct = representation_number(&g, 3).unwrap().value();
        let l = representation_number(left.graph(), 3).unwrap().value();
        let r = representation_number(right.graph(), 3).unwrap().value();
        if let (Some(direct), Some(l), Some(r)) = (direct, l, r) {
            assert_eq!(direct, l.max(r), "split changed the representation number");
            tested += 1;
        }
    }
}
