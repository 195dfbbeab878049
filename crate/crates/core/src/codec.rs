//! Word codecs for rooted labeled trees.
//!
//! Both codecs remove the smallest leaf `n-1` times and emit one token per
//! removal, describing the removed leaf's parent `p`:
//!
//! * the Prüfer-style codec emits `p` itself, giving words over `1..=n`;
//! * the blue codec emits the marker `b` when `p = leaf + 1`, `p - 1` when
//!   `p > leaf`, and `p` otherwise, giving words over `{b} ∪ 1..=n-1`.
//!
//! Decoding resolves the parent of vertex `i = 1..n` in turn: scan the word
//! for the last position showing `i` (a regular token equal to `i`, or an
//! already-resolved pair whose parent is `i`), take the first regular token
//! after that position, and interpret it (for the blue codec: `b` means
//! `i+1`, a token above `i` means one more than itself). A vertex whose
//! scan finds no regular token left is the root. Exhaustive round-trip
//! suites pin these semantics.
//!
//! Substituting every letter `n` in a Prüfer word by `b` and decoding blue
//! yields a bijection on rooted trees carrying the children-of-`n` count to
//! the consecutive-edge count.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::forest::{ColoredForest, ForestError};

/// Errors for malformed trees and words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodecError {
    /// Codecs need at least two vertices (words of length zero are refused).
    TooSmall { n: u32 },
    /// The input forest is not a single spanning tree.
    NotASpanningTree,
    /// A token lies outside the word's alphabet.
    TokenOutsideAlphabet { token: Token },
    /// The word length is not `n - 1`.
    BadLength { expected: usize, got: usize },
    /// The word does not decode to a rooted tree.
    Undecodable,
    /// A word string failed to parse.
    Unparseable(String),
    /// Propagated forest construction error.
    Forest(ForestError),
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodecError::TooSmall { n } => write!(f, "codec needs n >= 2, got {n}"),
            CodecError::NotASpanningTree => write!(f, "input is not a spanning tree"),
            CodecError::TokenOutsideAlphabet { token } => {
                write!(f, "token {token} outside the word alphabet")
            }
            CodecError::BadLength { expected, got } => {
                write!(f, "word length {got}, expected {expected}")
            }
            CodecError::Undecodable => write!(f, "word does not decode to a rooted tree"),
            CodecError::Unparseable(s) => write!(f, "cannot parse token '{s}'"),
            CodecError::Forest(e) => write!(f, "{e}"),
        }
    }
}

impl From<ForestError> for CodecError {
    fn from(e: ForestError) -> Self {
        CodecError::Forest(e)
    }
}

/// A word letter: an integer or the marker `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Token {
    B,
    Num(u32),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::B => write!(f, "b"),
            Token::Num(x) => write!(f, "{x}"),
        }
    }
}

/// Which alphabet a word uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    /// Length `n-1` over `1..=n`.
    Pruefer { n: u32 },
    /// Length `n-1` over `{b} ∪ 1..=n-1`.
    Blue { n: u32 },
}

impl WordKind {
    pub fn n(&self) -> u32 {
        match *self {
            WordKind::Pruefer { n } | WordKind::Blue { n } => n,
        }
    }

    fn allows(&self, token: Token) -> bool {
        match (*self, token) {
            (WordKind::Pruefer { n }, Token::Num(x)) => 1 <= x && x <= n,
            (WordKind::Pruefer { .. }, Token::B) => false,
            (WordKind::Blue { .. }, Token::B) => true,
            (WordKind::Blue { n }, Token::Num(x)) => 1 <= x && x < n,
        }
    }
}

/// A checked code word: tokens within the alphabet, length `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeWord {
    kind: WordKind,
    tokens: Vec<Token>,
}

impl CodeWord {
    pub fn new(kind: WordKind, tokens: Vec<Token>) -> Result<Self, CodecError> {
        let n = kind.n();
        if n < 2 {
            return Err(CodecError::TooSmall { n });
        }
        if tokens.len() != n as usize - 1 {
            return Err(CodecError::BadLength {
                expected: n as usize - 1,
                got: tokens.len(),
            });
        }
        for &t in &tokens {
            if !kind.allows(t) {
                return Err(CodecError::TokenOutsideAlphabet { token: t });
            }
        }
        Ok(CodeWord { kind, tokens })
    }

    /// Parses the comma-separated wire format, e.g. `b,5,b,2,4,b`.
    pub fn parse(kind: WordKind, text: &str) -> Result<Self, CodecError> {
        let mut tokens = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let token = if part == "b" {
                Token::B
            } else {
                Token::Num(
                    part.parse::<u32>()
                        .map_err(|_| CodecError::Unparseable(String::from(part)))?,
                )
            };
            tokens.push(token);
        }
        CodeWord::new(kind, tokens)
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// The last token of the word.
    pub fn last(&self) -> Token {
        *self.tokens.last().expect("words are nonempty")
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Runs the shared smallest-leaf elimination, emitting one `(parent, leaf)`
/// pair per removal.
fn eliminate_leaves(tree: &ColoredForest) -> Result<Vec<(u32, u32)>, CodecError> {
    let n = tree.n();
    if n < 2 {
        return Err(CodecError::TooSmall { n });
    }
    if !tree.is_spanning_tree() {
        return Err(CodecError::NotASpanningTree);
    }
    let mut child_count = alloc::vec![0usize; n as usize + 1];
    for (p, _, _) in tree.edges() {
        child_count[p as usize] += 1;
    }
    let mut leaves: BTreeSet<u32> = (1..=n).filter(|&v| child_count[v as usize] == 0).collect();
    let mut out = Vec::with_capacity(n as usize - 1);
    for _ in 0..n - 1 {
        let leaf = *leaves.iter().next().expect("a rooted tree keeps a leaf");
        leaves.remove(&leaf);
        let parent = tree.parent_of(leaf).expect("non-root leaf has a parent");
        out.push((parent, leaf));
        child_count[parent as usize] -= 1;
        if child_count[parent as usize] == 0 {
            // The root only goes childless once the loop is over, so this
            // never selects it.
            leaves.insert(parent);
        }
    }
    Ok(out)
}

/// Encodes a rooted tree as its Prüfer-style word: the parents of the
/// removed leaves in removal order. The final letter is the root.
pub fn pruefer_encode(tree: &ColoredForest) -> Result<CodeWord, CodecError> {
    let n = tree.n();
    let tokens = eliminate_leaves(tree)?
        .into_iter()
        .map(|(parent, _)| Token::Num(parent))
        .collect();
    CodeWord::new(WordKind::Pruefer { n }, tokens)
}

/// Encodes a rooted tree as its blue word: per removed leaf, `b` when the
/// parent is the leaf plus one, else `parent - 1` when above the leaf, else
/// `parent`. The `b` count equals the tree's consecutive-edge count.
pub fn blue_encode(tree: &ColoredForest) -> Result<CodeWord, CodecError> {
    let n = tree.n();
    let tokens = eliminate_leaves(tree)?
        .into_iter()
        .map(|(parent, leaf)| {
            if parent == leaf + 1 {
                Token::B
            } else if parent > leaf {
                Token::Num(parent - 1)
            } else {
                Token::Num(parent)
            }
        })
        .collect();
    CodeWord::new(WordKind::Blue { n }, tokens)
}

/// A word position during decoding: still a raw token, or resolved into a
/// `(parent, child)` pair.
#[derive(Clone, Copy)]
enum Slot {
    Regular(Token),
    Pair { parent: u32 },
}

/// Decodes a word by resolving the parent of each vertex `1..n` in turn;
/// see the module docs for the scan rule. Works for both codecs via the
/// token interpretation.
fn decode_word(word: &CodeWord) -> Result<ColoredForest, CodecError> {
    let n = word.kind().n();
    let mut slots: Vec<Slot> = word.tokens().iter().map(|&t| Slot::Regular(t)).collect();
    let mut parents: Vec<Option<u32>> = alloc::vec![None; n as usize + 1];
    let mut root: Option<u32> = None;
    for i in 1..=n {
        let shows_i = |slot: &Slot| match *slot {
            Slot::Regular(Token::Num(x)) => x == i,
            Slot::Regular(Token::B) => false,
            Slot::Pair { parent } => parent == i,
        };
        let start = slots
            .iter()
            .rposition(shows_i)
            .map(|j| j + 1)
            .unwrap_or(0);
        let next_regular = (start..slots.len()).find(|&j| matches!(slots[j], Slot::Regular(_)));
        match next_regular {
            None => {
                if root.replace(i).is_some() {
                    return Err(CodecError::Undecodable);
                }
            }
            Some(j) => {
                let Slot::Regular(token) = slots[j] else {
                    unreachable!()
                };
                let parent = match (word.kind(), token) {
                    (WordKind::Pruefer { .. }, Token::Num(x)) => x,
                    (WordKind::Blue { .. }, Token::B) => i + 1,
                    (WordKind::Blue { .. }, Token::Num(x)) if x > i => x + 1,
                    (WordKind::Blue { .. }, Token::Num(x)) => x,
                    (WordKind::Pruefer { .. }, Token::B) => {
                        return Err(CodecError::Undecodable)
                    }
                };
                if parent < 1 || parent > n {
                    return Err(CodecError::Undecodable);
                }
                parents[i as usize] = Some(parent);
                slots[j] = Slot::Pair { parent };
            }
        }
    }
    if root.is_none() {
        return Err(CodecError::Undecodable);
    }
    let edges: Vec<(u32, u32, u32)> = (1..=n)
        .filter_map(|v| parents[v as usize].map(|p| (p, v, 1)))
        .collect();
    ColoredForest::from_edges(n, 1, &edges)
        .ok()
        .filter(ColoredForest::is_spanning_tree)
        .ok_or(CodecError::Undecodable)
}

/// Decodes a Prüfer-style word into the unique tree encoding to it.
pub fn pruefer_decode(word: &CodeWord) -> Result<ColoredForest, CodecError> {
    match word.kind() {
        WordKind::Pruefer { .. } => decode_word(word),
        WordKind::Blue { .. } => Err(CodecError::Undecodable),
    }
}

/// Decodes a blue word into the unique tree encoding to it.
pub fn blue_decode(word: &CodeWord) -> Result<ColoredForest, CodecError> {
    match word.kind() {
        WordKind::Blue { .. } => decode_word(word),
        WordKind::Pruefer { .. } => Err(CodecError::Undecodable),
    }
}

/// The statistic-transporting bijection on rooted trees: encode, replace
/// every letter `n` by `b`, decode blue. Children of `n` become consecutive
/// edges.
pub fn swap_bijection(tree: &ColoredForest) -> Result<ColoredForest, CodecError> {
    let n = tree.n();
    let word = pruefer_encode(tree)?;
    let tokens = word
        .tokens()
        .iter()
        .map(|&t| match t {
            Token::Num(x) if x == n => Token::B,
            other => other,
        })
        .collect();
    blue_decode(&CodeWord::new(WordKind::Blue { n }, tokens)?)
}

/// Canned example data shared by the test suites and the CLI demos.
pub mod samples {
    use super::*;

    /// The seven-vertex tree whose Prüfer-style word is `2,6,5,2,5,6` and
    /// whose blue word is `b,5,b,2,4,b`: root 6, edges (2,1), (6,3), (5,4),
    /// (2,7), (5,2), (6,5).
    pub fn worked_tree() -> ColoredForest {
        ColoredForest::from_edges(
            7,
            1,
            &[
                (2, 1, 1),
                (6, 3, 1),
                (5, 4, 1),
                (2, 7, 1),
                (5, 2, 1),
                (6, 5, 1),
            ],
        )
        .expect("well-formed sample")
    }
}

#[cfg(test)]
mod tests {
    use super::samples::worked_tree;
    use super::*;

    fn word(kind: WordKind, text: &str) -> CodeWord {
        CodeWord::parse(kind, text).unwrap()
    }

    #[test]
    fn pruefer_golden_word() {
        let w = pruefer_encode(&worked_tree()).unwrap();
        assert_eq!(alloc::format!("{w}"), "2,6,5,2,5,6");
        assert_eq!(w.last(), Token::Num(6));
    }

    #[test]
    fn pruefer_golden_decode() {
        let w = word(WordKind::Pruefer { n: 7 }, "2,6,5,2,5,6");
        assert_eq!(pruefer_decode(&w).unwrap(), worked_tree());
    }

    #[test]
    fn blue_golden_round_trip() {
        let w = blue_encode(&worked_tree()).unwrap();
        assert_eq!(alloc::format!("{w}"), "b,5,b,2,4,b");
        let back = blue_decode(&word(WordKind::Blue { n: 7 }, "b,5,b,2,4,b")).unwrap();
        assert_eq!(back, worked_tree());
    }

    #[test]
    fn two_vertex_words() {
        let t = ColoredForest::from_edges(2, 1, &[(2, 1, 1)]).unwrap();
        assert_eq!(alloc::format!("{}", pruefer_encode(&t).unwrap()), "2");
        assert_eq!(alloc::format!("{}", blue_encode(&t).unwrap()), "b");
        assert_eq!(
            pruefer_decode(&word(WordKind::Pruefer { n: 2 }, "2")).unwrap(),
            t
        );
        assert_eq!(blue_decode(&word(WordKind::Blue { n: 2 }, "b")).unwrap(), t);
    }

    #[test]
    fn star_and_path_words() {
        let star4 = ColoredForest::from_edges(4, 1, &[(4, 1, 1), (4, 2, 1), (4, 3, 1)]).unwrap();
        assert_eq!(alloc::format!("{}", pruefer_encode(&star4).unwrap()), "4,4,4");

        let path3 = ColoredForest::from_edges(3, 1, &[(3, 2, 1), (2, 1, 1)]).unwrap();
        assert_eq!(alloc::format!("{}", blue_encode(&path3).unwrap()), "b,b");
    }

    #[test]
    fn swap_bijection_examples() {
        let star3 = ColoredForest::from_edges(3, 1, &[(3, 1, 1), (3, 2, 1)]).unwrap();
        let path3 = ColoredForest::from_edges(3, 1, &[(3, 2, 1), (2, 1, 1)]).unwrap();
        assert_eq!(swap_bijection(&star3).unwrap(), path3);

        // No child of n means no letter n, hence no marker and no
        // consecutive edge.
        let t = ColoredForest::from_edges(3, 1, &[(2, 1, 1), (1, 3, 1)]).unwrap();
        let image = swap_bijection(&t).unwrap();
        assert_eq!(crate::forest::consecutive_edges(&image), 0);
    }

    #[test]
    fn rejects_malformed_inputs() {
        let single = ColoredForest::empty(1, 1).unwrap();
        assert!(matches!(
            pruefer_encode(&single),
            Err(CodecError::TooSmall { .. })
        ));

        let forest = ColoredForest::from_edges(3, 1, &[(2, 1, 1)]).unwrap();
        assert!(matches!(
            pruefer_encode(&forest),
            Err(CodecError::NotASpanningTree)
        ));

        assert!(CodeWord::parse(WordKind::Pruefer { n: 3 }, "b,2").is_err());
        assert!(CodeWord::parse(WordKind::Blue { n: 3 }, "3,1").is_err());
        assert!(CodeWord::parse(WordKind::Pruefer { n: 3 }, "1,2,3").is_err());
        assert!(CodeWord::parse(WordKind::Blue { n: 3 }, "1,x").is_err());
    }

    #[test]
    fn word_display_round_trips() {
        let w = word(WordKind::Blue { n: 7 }, "b,5,b,2,4,b");
        let again = CodeWord::parse(WordKind::Blue { n: 7 }, &alloc::format!("{w}")).unwrap();
        assert_eq!(w, again);
    }
}
