//! Words over vertex labels: projection, alternation, uniform words, and the
//! complete search for representation numbers.
//!
//! A word represents a graph when two vertices are adjacent exactly if their
//! occurrences alternate. The search core here is exhaustive backtracking
//! over k-uniform words; completeness is the contract, so every prune below
//! removes only provably dead branches.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    letters: Vec<String>,
}

impl Word {
    pub fn new<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Word {
            letters: letters.into_iter().map(Into::into).collect(),
        }
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<String> {
        self.letters.iter().cloned().collect()
    }

    /// w_B: the subword of all occurrences of letters of `B`, order kept.
    pub fn project<'a, I>(&self, subset: I) -> Word
    where
        I: IntoIterator<Item = &'a str>,
    {
        let keep: BTreeSet<&str> = subset.into_iter().collect();
        Word::new(
            self.letters
                .iter()
                .filter(|l| keep.contains(l.as_str()))
                .cloned(),
        )
    }

    /// Whether `a` and `b` alternate: both letters occur and the projection
    /// to the pair never repeats a letter. Letters that do not occur never
    /// alternate with anything.
    pub fn alternate(&self, a: &str, b: &str) -> Result<bool> {
        if a == b {
            return Err(Error::InvalidInput(format!(
                "alternation needs two distinct letters, got `{a}` twice"
            )));
        }
        let proj: Vec<&str> = self
            .letters
            .iter()
            .map(|l| l.as_str())
            .filter(|l| *l == a || *l == b)
            .collect();
        if !proj.contains(&a) || !proj.contains(&b) {
            return Ok(false);
        }
        Ok(proj.windows(2).all(|w| w[0] != w[1]))
    }

    /// The graph on the word's alphabet whose edges are the alternating pairs.
    pub fn alternation_graph(&self) -> Result<Graph> {
        if self.letters.is_empty() {
            return Err(Error::InvalidInput(
                "alternation graph of the empty word is undefined".into(),
            ));
        }
        let alphabet: Vec<String> = self.alphabet().into_iter().collect();
        let mut edges = Vec::new();
        for (i, a) in alphabet.iter().enumerate() {
            for b in alphabet.iter().skip(i + 1) {
                if self.alternate(a, b)? {
                    edges.push((a.clone(), b.clone()));
                }
            }
        }
        Graph::new(alphabet, &edges)
    }

    /// True iff this word represents `g`. The alphabet must equal the vertex
    /// set exactly.
    pub fn represents(&self, g: &Graph) -> Result<bool> {
        let alphabet = self.alphabet();
        let vertices: BTreeSet<String> = g.vertices().iter().cloned().collect();
        if alphabet != vertices {
            return Err(Error::AlphabetMismatch {
                missing: vertices.difference(&alphabet).cloned().collect(),
                extra: alphabet.difference(&vertices).cloned().collect(),
            });
        }
        Ok(&self.alternation_graph()? == g)
    }

    /// Letters in order of first occurrence.
    pub fn initial_permutation(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for l in &self.letters {
            if seen.insert(l.clone()) {
                out.push(l.clone());
            }
        }
        out
    }

    pub fn concat(parts: &[Word]) -> Word {
        Word::new(parts.iter().flat_map(|w| w.letters.iter().cloned()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Word::new(s.split_whitespace().map(str::to_string)))
    }
}

/// A word in which every letter of its alphabet occurs exactly `k` times.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniformWord {
    word: Word,
    k: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShiftMode {
    /// `m w_1 m w_2 ... m w_k`
    Prefix,
    /// `w_1 m w_2 m ... w_k m`
    Suffix,
}

impl UniformWord {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidInput("uniform word must be nonempty".into()));
        }
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for l in word.letters() {
            *counts.entry(l.as_str()).or_default() += 1;
        }
        let k = *counts.values().next().unwrap();
        if counts.values().any(|&c| c != k) {
            return Err(Error::InvalidInput(format!(
                "word `{word}` is not uniform: letter counts differ"
            )));
        }
        Ok(UniformWord { word, k })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Rotates the word (a cyclic shift preserves what a k-uniform word
    /// represents) so `m` sits at the end of each block (`Suffix`) or the
    /// start of each block (`Prefix`).
    pub fn cyclic_shift_normalize(&self, m: &str, mode: ShiftMode) -> Result<UniformWord> {
        let first = self
            .word
            .letters()
            .iter()
            .position(|l| l == m)
            .ok_or_else(|| Error::UnknownVertex(m.to_string()))?;
        let rot = match mode {
            ShiftMode::Suffix => (first + 1) % self.word.len(),
            ShiftMode::Prefix => first,
        };
        let mut letters = self.word.letters().to_vec();
        letters.rotate_left(rot);
        Ok(UniformWord {
            word: Word::new(letters),
            k: self.k,
        })
    }

    /// Splits the blocks around `m`. In suffix form the word is
    /// `w_1 m w_2 m ... w_k m` and the blocks are the `w_i`.
    pub fn blocks(&self, m: &str, mode: ShiftMode) -> Result<Vec<Vec<String>>> {
        let letters = self.word.letters();
        let mut blocks = Vec::with_capacity(self.k);
        match mode {
            ShiftMode::Suffix => {
                if letters.last().map(String::as_str) != Some(m) {
                    return Err(Error::InvalidInput(format!(
                        "word is not in suffix form for `{m}`"
                    )));
                }
                let mut cur = Vec::new();
                for l in letters {
                    if l == m {
                        blocks.push(std::mem::take(&mut cur));
                    } else {
                        cur.push(l.clone());
                    }
                }
            }
            ShiftMode::Prefix => {
                if letters.first().map(String::as_str) != Some(m) {
                    return Err(Error::InvalidInput(format!(
                        "word is not in prefix form for `{m}`"
                    )));
                }
                let mut cur: Option<Vec<String>> = None;
                for l in letters {
                    if l == m {
                        if let Some(b) = cur.take() {
                            blocks.push(b);
                        }
                        cur = Some(Vec::new());
                    } else if let Some(b) = cur.as_mut() {
                        b.push(l.clone());
                    }
                }
                if let Some(b) = cur.take() {
                    blocks.push(b);
                }
            }
        }
        if blocks.len() != self.k {
            return Err(Error::Internal(format!(
                "block split of `{}` produced {} blocks for k = {}",
                self.word,
                blocks.len(),
                self.k
            )));
        }
        Ok(blocks)
    }

    /// Raises uniformity from k to `t` by prepending the initial permutation
    /// `t - k` times; the result is re-verified against `g`.
    pub fn pad_uniform(&self, g: &Graph, t: usize) -> Result<UniformWord> {
        if !self.word.represents(g)? {
            return Err(Error::InvalidInput(format!(
                "word `{}` does not represent the given graph",
                self.word
            )));
        }
        if t < self.k {
            return Err(Error::InvalidInput(format!(
                "cannot pad a {}-uniform word down to {t}",
                self.k
            )));
        }
        if t == self.k {
            return Ok(self.clone());
        }
        let prefix = self.word.initial_permutation();
        let mut letters: Vec<String> = Vec::with_capacity(t * prefix.len());
        for _ in 0..(t - self.k) {
            letters.extend(prefix.iter().cloned());
        }
        letters.extend(self.word.letters().iter().cloned());
        let padded = UniformWord {
            word: Word::new(letters),
            k: t,
        };
        if !padded.word.represents(g)? {
            return Err(Error::Internal(format!(
                "padded word `{}` stopped representing the graph",
                padded.word
            )));
        }
        Ok(padded)
    }
}

impl fmt::Display for UniformWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Outcome of the representation-number search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepSearch {
    /// Minimal k together with the lexicographically least witness.
    Found { k: usize, witness: UniformWord },
    /// No representing word with uniformity at most `k_max`; unknown above.
    ExceedsKMax { k_max: usize },
}

impl RepSearch {
    pub fn value(&self) -> Option<usize> {
        match self {
            RepSearch::Found { k, .. } => Some(*k),
            RepSearch::ExceedsKMax { .. } => None,
        }
    }
}

pub const REPNUM_VERTEX_LIMIT: usize = 12;

/// R(G): the least k such that a k-uniform word represents `g`, by complete
/// iterative-deepening backtracking. Returns the witness found first in
/// lexicographic order.
pub fn representation_number(g: &Graph, k_max: usize) -> Result<RepSearch> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidInput(
            "representation number of the empty graph is undefined".into(),
        ));
    }
    if n > REPNUM_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "representation-number search",
            limit: REPNUM_VERTEX_LIMIT,
            actual: n,
        });
    }
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be positive".into()));
    }
    // 1-uniform words are permutations, which represent exactly the
    // complete graph; the sorted permutation is the least witness.
    if g.is_complete() {
        let witness = UniformWord::new(Word::new(g.vertices().iter().cloned()))?;
        return Ok(RepSearch::Found { k: 1, witness });
    }
    for k in 2..=k_max {
        if let Some(witness) = find_k_uniform_word(g, k)? {
            return Ok(RepSearch::Found { k, witness });
        }
    }
    Ok(RepSearch::ExceedsKMax { k_max })
}

/// Complete search for a k-uniform representing word, lexicographically
/// least first. `None` means no such word exists.
pub fn find_k_uniform_word(g: &Graph, k: usize) -> Result<Option<UniformWord>> {
    let n = g.vertex_count();
    if n > REPNUM_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "representation-number search",
            limit: REPNUM_VERTEX_LIMIT,
            actual: n,
        });
    }
    let adj = g.adjacency_masks()?;
    let mut search = KUniformSearch {
        n,
        k: k as u8,
        adj: &adj,
        counts: vec![0; n],
        last: vec![NONE; n * n],
        violated: vec![false; n * n],
        word: Vec::with_capacity(n * k),
    };
    // Every k-uniform representing word has a cyclic shift starting with the
    // least letter that also represents, so fixing the first letter keeps
    // the search complete.
    let found = search.place(0);
    Ok(if found {
        let labels: Vec<String> = search
            .word
            .iter()
            .map(|&i| g.vertices()[i as usize].clone())
            .collect();
        Some(UniformWord::new(Word::new(labels))?)
    } else {
        None
    })
}

const NONE: u8 = u8::MAX;

struct KUniformSearch<'a> {
    n: usize,
    k: u8,
    adj: &'a [u64],
    counts: Vec<u8>,
    /// last[min*n + max]: which letter of the pair occurred most recently.
    last: Vec<u8>,
    /// violated[min*n + max]: a double has occurred, so the (non-adjacent)
    /// pair can no longer alternate.
    violated: Vec<bool>,
    word: Vec<u8>,
}

impl KUniformSearch<'_> {
    fn pair(&self, a: u8, b: u8) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        lo as usize * self.n + hi as usize
    }

    fn adjacent(&self, a: u8, b: u8) -> bool {
        (self.adj[a as usize] >> b) & 1 == 1
    }

    /// Try to extend the word at position `pos`; true once a full witness is
    /// in `self.word`.
    fn place(&mut self, pos: usize) -> bool {
        if pos == self.n * self.k as usize {
            return true;
        }
        let candidates: Vec<u8> = if pos == 0 {
            vec![0]
        } else {
            (0..self.n as u8)
                .filter(|&x| self.counts[x as usize] < self.k)
                .collect()
        };
        'next: for x in candidates {
            // an adjacent pair may never repeat a letter in its projection
            for j in 0..self.n as u8 {
                if j != x && self.adjacent(x, j) && self.last[self.pair(x, j)] == x {
                    continue 'next;
                }
            }
            let mut trail: Vec<(usize, u8, bool)> = Vec::new();
            for j in 0..self.n as u8 {
                if j == x {
                    continue;
                }
                let idx = self.pair(x, j);
                trail.push((idx, self.last[idx], self.violated[idx]));
                if !self.adjacent(x, j) && self.last[idx] == x {
                    self.violated[idx] = true;
                }
                self.last[idx] = x;
            }
            self.counts[x as usize] += 1;
            self.word.push(x);

            let viable = if self.counts[x as usize] == self.k {
                self.exhaust_check(x)
            } else {
                true
            };
            if viable && self.place(pos + 1) {
                return true;
            }

            self.word.pop();
            self.counts[x as usize] -= 1;
            for (idx, last, violated) in trail {
                self.last[idx] = last;
                self.violated[idx] = violated;
            }
        }
        false
    }

    /// Once the last copy of `x` is placed, every pair involving `x` has its
    /// remaining projection forced; reject states that already decide a pair
    /// the wrong way.
    fn exhaust_check(&self, x: u8) -> bool {
        for j in 0..self.n as u8 {
            if j == x {
                continue;
            }
            let remaining = self.k - self.counts[j as usize];
            if self.adjacent(x, j) {
                // all remaining copies of j land after the final x
                if remaining >= 2 {
                    return false;
                }
            } else if remaining <= 1 && !self.violated[self.pair(x, j)] {
                // at most one j left: the pair will finish alternating
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, FamilySpec};

    fn w(s: &str) -> Word {
        Word::new(s.chars().map(|c| c.to_string()))
    }

    #[test]
    fn projection_worked_example() {
        let word = w("baabdca");
        assert_eq!(word.project(["a", "b"]), w("baaba"));
        assert!(!word.alternate("a", "b").unwrap());
    }

    #[test]
    fn projection_corners() {
        assert_eq!(w("abc").project([]), Word::new(Vec::<String>::new()));
        assert_eq!(w("abab").project(["a", "b"]), w("abab"));
    }

    #[test]
    fn projection_composes_under_intersection() {
        let word = w("baabdca");
        let once = word.project(["a", "b", "c"]).project(["a", "b"]);
        assert_eq!(once, word.project(["a", "b"]));
    }

    #[test]
    fn alternation_basics() {
        assert!(w("ababab").alternate("a", "b").unwrap());
        assert!(!w("abba").alternate("a", "b").unwrap());
        assert!(w("ab").alternate("b", "a").unwrap());
        assert!(!w("aab").alternate("a", "c").unwrap(), "absent letter");
        assert!(!w("aab").alternate("x", "y").unwrap(), "both absent");
        assert!(w("ab").alternate("a", "a").is_err());
    }

    #[test]
    fn alternation_graph_of_permutation_is_complete() {
        let g = w("cabd").alternation_graph().unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.is_complete());
    }

    #[test]
    fn alternation_graph_path_example() {
        let word = Word::new(["b", "a", "m'", "b", "m'", "a"]);
        let g = word.alternation_graph().unwrap();
        assert_eq!(g.edges().len(), 2);
        assert!(g.has_edge("a", "b"));
        assert!(g.has_edge("b", "m'"));
    }

    #[test]
    fn alternation_graph_edgeless() {
        let g = w("aabb").alternation_graph().unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn represents_examples() {
        let p3 = Graph::new(["a", "b", "m'"], &[("a", "b"), ("b", "m'")]).unwrap();
        let word = Word::new(["b", "a", "m'", "b", "m'", "a"]);
        assert!(word.represents(&p3).unwrap());

        let k2 = Graph::new(["a", "b"], &[("a", "b")]).unwrap();
        assert!(w("abab").represents(&k2).unwrap());
        assert!(!w("aabb").represents(&k2).unwrap());
        assert!(matches!(
            w("abcabc").represents(&k2),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn shift_normalization() {
        let u = UniformWord::new(w("mabmab")).unwrap();
        let s = u.cyclic_shift_normalize("m", ShiftMode::Suffix).unwrap();
        assert_eq!(s.word(), &w("abmabm"));
        let p = UniformWord::new(w("abmabm"))
            .unwrap()
            .cyclic_shift_normalize("m", ShiftMode::Prefix)
            .unwrap();
        assert_eq!(p.word(), &w("mabmab"));
        assert!(u.cyclic_shift_normalize("z", ShiftMode::Prefix).is_err());
    }

    #[test]
    fn blocks_split() {
        let s = UniformWord::new(w("abmabm")).unwrap();
        assert_eq!(
            s.blocks("m", ShiftMode::Suffix).unwrap(),
            vec![vec!["a".to_string(), "b".to_string()]; 2]
        );
        let p = UniformWord::new(w("mabmab")).unwrap();
        assert_eq!(
            p.blocks("m", ShiftMode::Prefix).unwrap(),
            vec![vec!["a".to_string(), "b".to_string()]; 2]
        );
    }

    #[test]
    fn pad_uniform_examples() {
        let k2 = Graph::new(["a", "b"], &[("a", "b")]).unwrap();
        let base = UniformWord::new(w("ab")).unwrap();
        assert_eq!(base.pad_uniform(&k2, 1).unwrap(), base);
        let padded = base.pad_uniform(&k2, 3).unwrap();
        assert_eq!(padded.word(), &w("ababab"));
        assert!(padded.word().represents(&k2).unwrap());
        assert!(base.pad_uniform(&k2, 0).is_err());
    }

    #[test]
    fn pad_uniform_p3() {
        let p3 = generate_family(&FamilySpec::Path(3)).unwrap();
        let rep = representation_number(&p3, 3).unwrap();
        let RepSearch::Found { k, witness } = rep else {
            panic!("P_3 is representable")
        };
        assert_eq!(k, 2);
        let padded = witness.pad_uniform(&p3, 4).unwrap();
        assert_eq!(padded.k(), 4);
        assert!(padded.word().represents(&p3).unwrap());
    }

    #[test]
    fn representation_numbers_small() {
        let k4 = generate_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(representation_number(&k4, 3).unwrap().value(), Some(1));

        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        let RepSearch::Found { k, witness } = representation_number(&c5, 3).unwrap() else {
            panic!("C_5 is 2-representable")
        };
        assert_eq!(k, 2);
        assert!(witness.word().represents(&c5).unwrap());

        let p4 = generate_family(&FamilySpec::Path(4)).unwrap();
        assert_eq!(representation_number(&p4, 3).unwrap().value(), Some(2));
    }

    #[test]
    fn representation_number_budget() {
        // the edgeless pair needs k = 2; with k_max = 1 the answer is unknown
        let e2 = generate_family(&FamilySpec::Edgeless(2)).unwrap();
        assert_eq!(
            representation_number(&e2, 1).unwrap(),
            RepSearch::ExceedsKMax { k_max: 1 }
        );
        assert_eq!(representation_number(&e2, 2).unwrap().value(), Some(2));
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let k2 = Graph::new(["a", "b"], &[("a", "b")]).unwrap();
        let RepSearch::Found { witness, .. } = representation_number(&k2, 2).unwrap() else {
            panic!()
        };
        assert_eq!(witness.word(), &w("ab"));
    }
}
