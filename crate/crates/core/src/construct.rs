//! Certificate-producing constructions for split recompositions: interleaved
//! uniform words, mark-extended permutation families, permutation words for
//! the edge join and the recomposition, orientations, bipartitions, and the
//! combined classifier.
//!
//! Nothing here returns an unverified certificate: every word is re-checked
//! with `represents`, every orientation with the transitivity test. A
//! verification failure is an internal bug, not an input error.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{join_by_edge, Graph, MarkedGraph};
use crate::order::{
    dimension, hiraguchi_extend, is_all_adjacent, is_prn_irreducible, is_source_feasible,
    orientation_with_role, prn, transitive_orientation, DimSearch, IrreducibleVerdict,
    Orientation, Poset, PrnSearch, Realizer, Role,
};
use crate::split::recompose;
use crate::word::{representation_number, RepSearch, ShiftMode, UniformWord, Word};

fn dim_cap(g: &Graph) -> usize {
    g.vertex_count().max(2)
}

fn prn_value(g: &Graph) -> Result<(usize, Word)> {
    match prn(g, dim_cap(g))? {
        PrnSearch::Found { k, witness, .. } => Ok((k, witness)),
        PrnSearch::ExceedsKMax { k_max } => Err(Error::Internal(format!(
            "prn search exhausted its own upper bound {k_max}"
        ))),
    }
}

fn restrict(perm: &[String], set: &BTreeSet<String>, inside: bool) -> Vec<String> {
    perm.iter()
        .filter(|v| set.contains(*v) == inside)
        .cloned()
        .collect()
}

fn flat(parts: &[&[String]]) -> Vec<String> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// Builds the uniform word for G ∇ G′ out of uniform words for the parts:
/// normalize the left word so every block ends with its mark, the right word
/// so every block starts with its mark, then interleave the mark-free
/// blocks.
pub fn uniform_recomposition_word(
    w: &UniformWord,
    wp: &UniformWord,
    gm: &MarkedGraph,
    gpm: &MarkedGraph,
) -> Result<UniformWord> {
    if !w.word().represents(gm.graph())? {
        return Err(Error::InvalidInput(format!(
            "word `{}` does not represent the left graph",
            w.word()
        )));
    }
    if !wp.word().represents(gpm.graph())? {
        return Err(Error::InvalidInput(format!(
            "word `{}` does not represent the right graph",
            wp.word()
        )));
    }
    let t = w.k().max(wp.k());
    let left = w
        .pad_uniform(gm.graph(), t)?
        .cyclic_shift_normalize(gm.marked(), ShiftMode::Suffix)?;
    let right = wp
        .pad_uniform(gpm.graph(), t)?
        .cyclic_shift_normalize(gpm.marked(), ShiftMode::Prefix)?;
    let left_blocks = left.blocks(gm.marked(), ShiftMode::Suffix)?;
    let right_blocks = right.blocks(gpm.marked(), ShiftMode::Prefix)?;

    let mut letters = Vec::new();
    for (lb, rb) in left_blocks.into_iter().zip(right_blocks) {
        letters.extend(lb);
        letters.extend(rb);
    }
    let u = UniformWord::new(Word::new(letters))?;
    let target = recompose(gm, gpm)?;
    if u.k() != t || !u.word().represents(&target)? {
        return Err(Error::Internal(format!(
            "interleaved word `{}` failed verification against the recomposition",
            u.word()
        )));
    }
    Ok(u)
}

/// Permutations `p_1..p_k` on the unmarked vertices together with their
/// extensions `q_1..q_{k+1}` over the mark, built from a realizer of the
/// induced subposet and its one-larger extension.
#[derive(Clone, Debug)]
pub struct MarkPermutations {
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
}

impl MarkPermutations {
    pub fn p_word(&self) -> Word {
        Word::new(self.p.iter().flatten().cloned())
    }

    pub fn q_word(&self) -> Word {
        Word::new(self.q.iter().flatten().cloned())
    }
}

/// For a comparability graph whose mark can take the requested role, builds
/// k permutations representing G[V] and k+1 permutations representing G.
/// `k` must be at least the dimension of the subposet on V.
pub fn mark_permutations(gm: &MarkedGraph, role: Role, k: usize) -> Result<MarkPermutations> {
    let g = gm.graph();
    let m = gm.marked();
    if transitive_orientation(g)?.is_none() {
        return Err(Error::NotComparability);
    }
    let oriented = orientation_with_role(g, m, role)?.ok_or(Error::RoleInfeasible {
        vertex: m.to_string(),
        role: role.name(),
    })?;
    let poset = Poset::from_orientation(g, &oriented)?;
    let sub = poset.delete_element(m)?;
    let realizer = match dimension(&sub, k)? {
        DimSearch::ExceedsKMax { .. } => {
            return Err(Error::InvalidInput(format!(
                "k = {k} is below the dimension of the subposet without `{m}`"
            )))
        }
        DimSearch::Found { realizer, .. } => realizer.padded_to(k)?,
    };
    let extended = hiraguchi_extend(&realizer, &poset, m, role)?;
    let out = MarkPermutations {
        p: realizer.orders().to_vec(),
        q: extended.orders().to_vec(),
    };
    let inner = gm.inner_graph();
    if inner.vertex_count() > 0 && !out.p_word().represents(&inner)? {
        return Err(Error::Internal(
            "subposet permutations do not represent the unmarked part".into(),
        ));
    }
    if !out.q_word().represents(g)? {
        return Err(Error::Internal(
            "extended permutations do not represent the marked graph".into(),
        ));
    }
    Ok(out)
}

/// Permutation word for H, the two graphs joined by the single edge between
/// their marks. Needs the left mark source-feasible and the right mark
/// sink-feasible; the word uses 1 + max(k, k') permutations.
pub fn edge_join_word(gm: &MarkedGraph, gpm: &MarkedGraph) -> Result<Word> {
    let (k, _) = prn_value(gm.graph())?;
    let (kp, _) = prn_value(gpm.graph())?;
    if k == 1 && kp == 1 {
        // both sides complete: the block construction loses the separator
        // between V and the far mark, so interleave the two chains directly
        let h = join_by_edge(gm, gpm)?;
        let vs = gm.inner_vertices();
        let ws = gpm.inner_vertices();
        let m = [gm.marked().to_string()];
        let mp = [gpm.marked().to_string()];
        let word = Word::new(
            [
                flat(&[&m, &vs, &ws, &mp]),
                flat(&[&ws, &m, &mp, &vs]),
            ]
            .concat(),
        );
        verify_permutation_word(&word, &h, 2)?;
        return Ok(word);
    }
    let left = mark_permutations(gm, Role::Source, k)?;
    let right = mark_permutations(gpm, Role::Sink, kp)?;
    let m = [gm.marked().to_string()];
    let mp = [gpm.marked().to_string()];
    let both = [gm.marked().to_string(), gpm.marked().to_string()];

    let mut blocks: Vec<Vec<String>> = Vec::new();
    blocks.push(flat(&[&right.p[0], &m, &left.p[0], &mp]));
    if kp <= k {
        for i in 1..kp {
            blocks.push(flat(&[&right.p[i], &both, &left.p[i]]));
        }
        for j in kp..k {
            blocks.push(flat(&[&right.p[kp - 1], &both, &left.p[j]]));
        }
    } else {
        for i in 1..k {
            blocks.push(flat(&[&right.p[i], &both, &left.p[i]]));
        }
        for j in k..kp {
            blocks.push(flat(&[&right.p[j], &both, &left.p[k - 1]]));
        }
    }
    blocks.push(flat(&[&left.q[k], &right.q[kp]]));

    let word = Word::new(blocks.into_iter().flatten());
    let h = join_by_edge(gm, gpm)?;
    verify_permutation_word(&word, &h, 1 + k.max(kp))?;
    Ok(word)
}

/// Permutation word for G ∇ G′ under the source/sink hypothesis, with
/// 1 + max(k, k') permutations.
pub fn recomposition_permutation_word(gm: &MarkedGraph, gpm: &MarkedGraph) -> Result<Word> {
    let (k, _) = prn_value(gm.graph())?;
    let (kp, _) = prn_value(gpm.graph())?;
    let left = mark_permutations(gm, Role::Source, k)?;
    let right = mark_permutations(gpm, Role::Sink, kp)?;
    let word = interleave_with_final_block(&left.p, &right.p, gm, gpm)?;
    let target = recompose(gm, gpm)?;
    verify_permutation_word(&word, &target, 1 + k.max(kp))?;
    Ok(word)
}

/// Shared shape of the recomposition words: pair the permutations (repeating
/// the shorter family's last), then close with the block that interleaves
/// the mark neighborhoods.
fn interleave_with_final_block(
    p: &[Vec<String>],
    pp: &[Vec<String>],
    gm: &MarkedGraph,
    gpm: &MarkedGraph,
) -> Result<Word> {
    let k = p.len();
    let kp = pp.len();
    let nb = gm.marked_neighbors();
    let nbp = gpm.marked_neighbors();
    let mut blocks: Vec<Vec<String>> = Vec::new();
    for i in 0..k.max(kp) {
        let pi = &p[i.min(k - 1)];
        let ppi = &pp[i.min(kp - 1)];
        blocks.push(flat(&[ppi, pi]));
    }
    let p_last = &p[k - 1];
    let pp_last = &pp[kp - 1];
    blocks.push(
        [
            restrict(p_last, &nb, false),
            restrict(pp_last, &nbp, true),
            restrict(p_last, &nb, true),
            restrict(pp_last, &nbp, false),
        ]
        .concat(),
    );
    Ok(Word::new(blocks.into_iter().flatten()))
}

fn verify_permutation_word(word: &Word, target: &Graph, permutations: usize) -> Result<()> {
    let uniform = UniformWord::new(word.clone()).map_err(|e| {
        Error::Internal(format!("constructed word is not uniform: {e}"))
    })?;
    if uniform.k() != permutations {
        return Err(Error::Internal(format!(
            "constructed word has {} permutations, expected {permutations}",
            uniform.k()
        )));
    }
    if !word.represents(target)? {
        return Err(Error::Internal(format!(
            "constructed word `{word}` does not represent its target graph"
        )));
    }
    Ok(())
}

/// Permutation word for G ∇ G′ when a mark is all-adjacent: exactly
/// max(k, k') permutations, splicing each right permutation around its mark
/// into the corresponding left permutation (or symmetrically).
pub fn all_adjacent_recomposition_word(gm: &MarkedGraph, gpm: &MarkedGraph) -> Result<Word> {
    let left_all = is_all_adjacent(gm.graph(), gm.marked())?;
    let right_all = is_all_adjacent(gpm.graph(), gpm.marked())?;
    if !left_all && !right_all {
        return Err(Error::InvalidInput(
            "neither marked vertex is all-adjacent".into(),
        ));
    }
    let (k, _) = prn_value(gm.graph())?;
    let (kp, _) = prn_value(gpm.graph())?;
    let t = k.max(kp);
    let left = prn_realizer(gm.graph(), k)?.padded_to(t)?;
    let right = prn_realizer(gpm.graph(), kp)?.padded_to(t)?;

    let split_at = |perm: &[String], mark: &str| -> (Vec<String>, Vec<String>) {
        let at = perm.iter().position(|v| v == mark).expect("mark in permutation");
        (perm[..at].to_vec(), perm[at + 1..].to_vec())
    };
    let mut blocks = Vec::with_capacity(t);
    for i in 0..t {
        let (r, s) = split_at(&left.orders()[i], gm.marked());
        let (rp, sp) = split_at(&right.orders()[i], gpm.marked());
        let block = if left_all {
            [rp, r, s, sp].concat()
        } else {
            [r, rp, sp, s].concat()
        };
        blocks.push(block);
    }
    let word = Word::new(blocks.into_iter().flatten());
    let target = recompose(gm, gpm)?;
    verify_permutation_word(&word, &target, t)?;
    Ok(word)
}

fn prn_realizer(g: &Graph, k: usize) -> Result<Realizer> {
    match prn(g, k)? {
        PrnSearch::Found { realizer, .. } => Ok(realizer),
        PrnSearch::ExceedsKMax { .. } => Err(Error::Internal(
            "prn realizer unavailable at its own prn".into(),
        )),
    }
}

/// Permutation word for the recomposition of two prn-irreducible graphs,
/// using exactly max(k, k') permutations built from realizers of the
/// subposets one size down.
pub fn irreducible_recomposition_word(gm: &MarkedGraph, gpm: &MarkedGraph) -> Result<Word> {
    let k = match is_prn_irreducible(gm.graph(), dim_cap(gm.graph()))? {
        IrreducibleVerdict::Irreducible { k } => k,
        IrreducibleVerdict::NotIrreducible { .. } => {
            return Err(Error::InvalidInput("left graph is not prn-irreducible".into()))
        }
    };
    let kp = match is_prn_irreducible(gpm.graph(), dim_cap(gpm.graph()))? {
        IrreducibleVerdict::Irreducible { k } => k,
        IrreducibleVerdict::NotIrreducible { .. } => {
            return Err(Error::InvalidInput("right graph is not prn-irreducible".into()))
        }
    };
    if k < 3 || kp < 3 {
        return Err(Error::InvalidInput(format!(
            "the construction needs prn at least 3 on both sides, got {k} and {kp}"
        )));
    }
    let left = mark_permutations(gm, Role::Source, k - 1)?;
    let right = mark_permutations(gpm, Role::Sink, kp - 1)?;
    let word = interleave_with_final_block(&left.p, &right.p, gm, gpm)?;
    let target = recompose(gm, gpm)?;
    verify_permutation_word(&word, &target, k.max(kp))?;
    Ok(word)
}

/// Transitive orientation of G ∇ G′ assembled from orientations with the
/// left mark a source and the right mark a sink: keep both restrictions and
/// orient every join edge from the right side into the left.
pub fn orient_recomposition(
    gm: &MarkedGraph,
    t: &Orientation,
    gpm: &MarkedGraph,
    tp: &Orientation,
) -> Result<Orientation> {
    t.check_transitive()?;
    tp.check_transitive()?;
    if !t.is_source(gm.marked()) {
        return Err(Error::RoleInfeasible {
            vertex: gm.marked().to_string(),
            role: "source",
        });
    }
    if !tp.is_sink(gpm.marked()) {
        return Err(Error::RoleInfeasible {
            vertex: gpm.marked().to_string(),
            role: "sink",
        });
    }
    let mut arcs: Vec<(String, String)> = t
        .arcs()
        .filter(|(a, b)| *a != gm.marked() && *b != gm.marked())
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    arcs.extend(
        tp.arcs()
            .filter(|(a, b)| *a != gpm.marked() && *b != gpm.marked())
            .map(|(a, b)| (a.to_string(), b.to_string())),
    );
    for a in gm.marked_neighbors() {
        for b in gpm.marked_neighbors() {
            arcs.push((b.clone(), a.clone()));
        }
    }
    let target = recompose(gm, gpm)?;
    let oriented = Orientation::new(&target, arcs)?;
    oriented
        .check_transitive()
        .map_err(|e| Error::Internal(format!("recomposed orientation is not transitive: {e}")))?;
    Ok(oriented)
}

/// The bipartition of G ∇ G′ induced by bipartitions of the parts with the
/// marks in the first classes: `{(A \ m) ∪ B', (A' \ m') ∪ B}`.
pub fn recomposition_bipartition(
    gm: &MarkedGraph,
    a: &BTreeSet<String>,
    b: &BTreeSet<String>,
    gpm: &MarkedGraph,
    ap: &BTreeSet<String>,
    bp: &BTreeSet<String>,
) -> Result<(BTreeSet<String>, BTreeSet<String>)> {
    validate_bipartition(gm.graph(), a, b)?;
    validate_bipartition(gpm.graph(), ap, bp)?;
    if !a.contains(gm.marked()) {
        return Err(Error::InvalidInput(format!(
            "mark `{}` must lie in the first class of its bipartition",
            gm.marked()
        )));
    }
    if !ap.contains(gpm.marked()) {
        return Err(Error::InvalidInput(format!(
            "mark `{}` must lie in the first class of its bipartition",
            gpm.marked()
        )));
    }
    let mut first: BTreeSet<String> = a.iter().filter(|v| *v != gm.marked()).cloned().collect();
    first.extend(bp.iter().cloned());
    let mut second: BTreeSet<String> = ap.iter().filter(|v| *v != gpm.marked()).cloned().collect();
    second.extend(b.iter().cloned());

    let target = recompose(gm, gpm)?;
    for (x, y) in target.edges() {
        if first.contains(&x) == first.contains(&y) {
            return Err(Error::Internal(format!(
                "edge {x}-{y} does not cross the combined bipartition"
            )));
        }
    }
    Ok((first, second))
}

fn validate_bipartition(g: &Graph, a: &BTreeSet<String>, b: &BTreeSet<String>) -> Result<()> {
    if a.intersection(b).next().is_some() {
        return Err(Error::InvalidInput("bipartition classes overlap".into()));
    }
    if a.len() + b.len() != g.vertex_count()
        || !a.iter().chain(b.iter()).all(|v| g.contains(v))
    {
        return Err(Error::InvalidInput(
            "bipartition does not cover the vertex set".into(),
        ));
    }
    for (x, y) in g.edges() {
        if a.contains(&x) == a.contains(&y) {
            return Err(Error::InvalidInput(format!(
                "edge {x}-{y} lies inside one class of the claimed bipartition"
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Comparability,
    NotComparability,
    WordRepresentableOnly,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    SourceSink,
    AllAdjacent,
    Neither,
}

/// The classifier's output: verdict, the condition that produced it, and
/// re-verified witnesses with prn bounds.
#[derive(Clone, Debug)]
pub struct RecompositionCertificate {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness_word: Option<Word>,
    pub witness_orientation: Option<Orientation>,
    /// `(lower, upper)` for the prn of the recomposition; equal when one of
    /// the exact cases applies.
    pub prn_bounds: Option<(usize, usize)>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    verdict: Verdict,
    reason: Reason,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_orientation: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prn_bounds: Option<(usize, usize)>,
    notes: Vec<String>,
}

impl RecompositionCertificate {
    pub fn to_json(&self) -> String {
        let json = CertificateJson {
            verdict: self.verdict,
            reason: self.reason,
            witness_word: self.witness_word.as_ref().map(|w| w.to_string()),
            witness_orientation: self
                .witness_orientation
                .as_ref()
                .map(|o| o.arcs().map(|(a, b)| (a.to_string(), b.to_string())).collect()),
            prn_bounds: self.prn_bounds,
            notes: self.notes.clone(),
        };
        serde_json::to_string(&json).expect("certificate serializes")
    }
}

/// Reads a transitive orientation off a permutation word: each edge points
/// from the vertex that comes first in every block.
fn orientation_from_permutation_word(g: &Graph, word: &Word) -> Result<Orientation> {
    let n = g.vertex_count();
    if n == 0 || !word.len().is_multiple_of(n) {
        return Err(Error::Internal("word is not a block of permutations".into()));
    }
    let first_block = &word.letters()[..n];
    let position = |v: &str| first_block.iter().position(|l| l == v);
    let mut arcs = Vec::new();
    for (a, b) in g.edges() {
        let (pa, pb) = match (position(&a), position(&b)) {
            (Some(pa), Some(pb)) => (pa, pb),
            _ => return Err(Error::Internal("block is not a permutation".into())),
        };
        if pa < pb {
            arcs.push((a, b));
        } else {
            arcs.push((b, a));
        }
    }
    let oriented = Orientation::new(g, arcs)?;
    oriented.check_transitive().map_err(|e| {
        Error::Internal(format!("orientation read off a permutation word is not transitive: {e}"))
    })?;
    Ok(oriented)
}

/// Classifies G ∇ G′: comparability exactly when the marks admit a
/// source/sink pair of orientations or one of them is all-adjacent. The
/// verdict is cross-checked against a direct comparability test of the
/// recomposed graph, and every attached witness is re-verified.
pub fn classify_recomposition(
    gm: &MarkedGraph,
    gpm: &MarkedGraph,
    k_max: usize,
) -> Result<RecompositionCertificate> {
    if !gm.graph().is_connected() || !gpm.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let target = recompose(gm, gpm)?;
    let mut notes = Vec::new();
    for side in [gm, gpm] {
        if side.graph().vertex_count() == 2 {
            notes.push(format!(
                "side marked `{}` has a single vertex besides the mark; the recomposition degenerates to a substitution",
                side.marked()
            ));
        }
    }

    let left_comp = transitive_orientation(gm.graph())?.is_some();
    let right_comp = transitive_orientation(gpm.graph())?.is_some();
    if !left_comp || !right_comp {
        for (ok, side) in [(left_comp, gm), (right_comp, gpm)] {
            if !ok {
                notes.push(format!(
                    "side marked `{}` is not a comparability graph",
                    side.marked()
                ));
            }
        }
        let w = uniform_word_for(gm, k_max)?;
        let wp = uniform_word_for(gpm, k_max)?;
        let witness = uniform_recomposition_word(&w, &wp, gm, gpm)?;
        return Ok(RecompositionCertificate {
            verdict: Verdict::WordRepresentableOnly,
            reason: Reason::Neither,
            witness_word: Some(witness.word().clone()),
            witness_orientation: None,
            prn_bounds: None,
            notes,
        });
    }

    let (k, left_prn_word) = prn_value(gm.graph())?;
    let (kp, right_prn_word) = prn_value(gpm.graph())?;
    let kappa = k.max(kp);

    let feasible_pair =
        is_source_feasible(gm.graph(), gm.marked())? && is_source_feasible(gpm.graph(), gpm.marked())?;
    let left_all = is_all_adjacent(gm.graph(), gm.marked())?;
    let right_all = is_all_adjacent(gpm.graph(), gpm.marked())?;
    let all_adjacent = left_all || right_all;

    let comparability = feasible_pair || all_adjacent;
    let direct = transitive_orientation(&target)?.is_some();
    if direct != comparability {
        return Err(Error::Internal(format!(
            "classifier verdict (comparability = {comparability}) disagrees with the direct orientation test"
        )));
    }

    if !comparability {
        // both sides are comparability graphs, hence word-representable:
        // the interleaved word still certifies representability
        let w = UniformWord::new(left_prn_word)?;
        let wp = UniformWord::new(right_prn_word)?;
        let witness = uniform_recomposition_word(&w, &wp, gm, gpm)?;
        return Ok(RecompositionCertificate {
            verdict: Verdict::NotComparability,
            reason: Reason::Neither,
            witness_word: Some(witness.word().clone()),
            witness_orientation: None,
            prn_bounds: None,
            notes,
        });
    }

    let irreducible_pair = k >= 3
        && kp >= 3
        && matches!(
            is_prn_irreducible(gm.graph(), dim_cap(gm.graph()))?,
            IrreducibleVerdict::Irreducible { .. }
        )
        && matches!(
            is_prn_irreducible(gpm.graph(), dim_cap(gpm.graph()))?,
            IrreducibleVerdict::Irreducible { .. }
        );

    let (reason, word, orientation) = if feasible_pair {
        let t = orientation_with_role(gm.graph(), gm.marked(), Role::Source)?
            .expect("feasibility just established");
        let tp = orientation_with_role(gpm.graph(), gpm.marked(), Role::Sink)?
            .expect("feasibility just established");
        let oriented = orient_recomposition(gm, &t, gpm, &tp)?;
        let word = if all_adjacent {
            all_adjacent_recomposition_word(gm, gpm)?
        } else if irreducible_pair {
            irreducible_recomposition_word(gm, gpm)?
        } else {
            recomposition_permutation_word(gm, gpm)?
        };
        (Reason::SourceSink, word, oriented)
    } else {
        let word = all_adjacent_recomposition_word(gm, gpm)?;
        let oriented = orientation_from_permutation_word(&target, &word)?;
        (Reason::AllAdjacent, word, oriented)
    };

    let exact = all_adjacent || irreducible_pair;
    let bounds = if exact { (kappa, kappa) } else { (kappa, kappa + 1) };

    Ok(RecompositionCertificate {
        verdict: Verdict::Comparability,
        reason,
        witness_word: Some(word),
        witness_orientation: Some(orientation),
        prn_bounds: Some(bounds),
        notes,
    })
}

fn uniform_word_for(gm: &MarkedGraph, k_max: usize) -> Result<UniformWord> {
    match representation_number(gm.graph(), k_max)? {
        RepSearch::Found { witness, .. } => Ok(witness),
        RepSearch::ExceedsKMax { k_max } => Err(Error::BudgetExceeded(format!(
            "no representing word with uniformity at most {k_max} for the side marked `{}`",
            gm.marked()
        ))),
    }
}
