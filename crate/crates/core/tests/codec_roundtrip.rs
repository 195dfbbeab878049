//! Exhaustive round trips and statistic transport for both codecs.

use gainact::codec::{
    blue_decode, blue_encode, pruefer_decode, pruefer_encode, swap_bijection, CodeWord, Token,
    WordKind,
};
use gainact::forest::{
    consecutive_edges, enumerate_forests, statistic_value, ClassMode, ColoredForest, ForestClass,
    Statistic,
};
use std::collections::BTreeSet;

fn all_trees(n: u32) -> Vec<ColoredForest> {
    let class = ForestClass::new(ClassMode::Unrestricted, 1, 0);
    enumerate_forests(n, 1, &class, true).unwrap()
}

/// All words of the given kind, in token-vector lexicographic order.
fn all_words(kind: WordKind) -> Vec<CodeWord> {
    let n = kind.n();
    let alphabet: Vec<Token> = match kind {
        WordKind::Pruefer { .. } => (1..=n).map(Token::Num).collect(),
        WordKind::Blue { .. } => core::iter::once(Token::B)
            .chain((1..n).map(Token::Num))
            .collect(),
    };
    let len = n as usize - 1;
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let tokens: Vec<Token> = idx.iter().map(|&i| alphabet[i]).collect();
        out.push(CodeWord::new(kind, tokens).unwrap());
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            idx[i] += 1;
            if idx[i] < alphabet.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn pruefer_round_trips_exhaustively() {
    for n in 2..=6u32 {
        let trees = all_trees(n);
        let expected = (n as u64).pow(n - 1);
        assert_eq!(trees.len() as u64, expected, "tree count at n={n}");
        let mut seen = BTreeSet::new();
        for tree in &trees {
            let word = pruefer_encode(tree).unwrap();
            assert!(seen.insert(format!("{word}")), "duplicate word at n={n}");
            assert_eq!(&pruefer_decode(&word).unwrap(), tree, "n={n}");
        }
        // Every word decodes, and encoding the result returns the word.
        for word in all_words(WordKind::Pruefer { n }) {
            let tree = pruefer_decode(&word).unwrap();
            assert_eq!(pruefer_encode(&tree).unwrap(), word, "n={n}");
        }
    }
}

#[test]
fn blue_round_trips_exhaustively() {
    for n in 2..=5u32 {
        for tree in all_trees(n) {
            let word = blue_encode(&tree).unwrap();
            assert_eq!(&blue_decode(&word).unwrap(), &tree, "n={n}");
        }
        for word in all_words(WordKind::Blue { n }) {
            let tree = blue_decode(&word).unwrap();
            assert_eq!(blue_encode(&tree).unwrap(), word, "n={n}");
        }
    }
}

#[test]
fn words_transport_the_statistics() {
    for n in 2..=6u32 {
        for tree in all_trees(n) {
            let pruefer = pruefer_encode(&tree).unwrap();
            let top_letters = pruefer
                .tokens()
                .iter()
                .filter(|&&t| t == Token::Num(n))
                .count();
            assert_eq!(
                top_letters,
                statistic_value(&tree, Statistic::ChildrenOfN),
                "n={n}"
            );

            let blue = blue_encode(&tree).unwrap();
            let markers = blue.tokens().iter().filter(|&&t| t == Token::B).count();
            assert_eq!(markers, consecutive_edges(&tree), "n={n}");
        }
    }
}

#[test]
fn swap_bijection_is_a_statistic_transporting_bijection() {
    for n in 2..=6u32 {
        let trees = all_trees(n);
        let mut images = BTreeSet::new();
        let mut source_dist = vec![0usize; n as usize];
        let mut image_dist = vec![0usize; n as usize];
        for tree in &trees {
            let image = swap_bijection(tree).unwrap();
            let children = statistic_value(tree, Statistic::ChildrenOfN);
            let consecutive = consecutive_edges(&image);
            assert_eq!(children, consecutive, "per-tree transport at n={n}");
            source_dist[children] += 1;
            image_dist[consecutive] += 1;
            assert!(images.insert(image.edges()), "image collision at n={n}");
        }
        assert_eq!(images.len(), trees.len(), "bijectivity at n={n}");
        assert_eq!(source_dist, image_dist, "distribution equality at n={n}");
    }
}
