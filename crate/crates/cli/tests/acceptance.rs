//! The acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`). Every equality is exact; no tolerances
//! anywhere.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gainact::codec::{
    blue_decode, blue_encode, pruefer_decode, pruefer_encode, samples as codec_samples,
    swap_bijection, CodeWord, Token, WordKind,
};
use gainact::covering::{
    activity_from_cardinality, cardinality_identity_holds, samples as covering_samples,
    ActivityAssignment, ActivityVector, ElementSet,
};
use gainact::forest::{
    classify, consecutive_edges, decreasing_involution, enumerate_forests,
    forests_as_covering_system, statistic_value, tree_statistic_vector, ClassMode, ColoredForest,
    ForestClass, Statistic,
};
use gainact::gain::GainGraph;
use gainact::lbs::{
    conjecture_report, enumerate_lbs, rotate_to_nonincreasing, samples as lbs_samples,
    ConjectureVariant,
};
use gainact::nbc::{
    activity_polynomial, activity_vector, as_covering_system, characteristic_polys,
    exterior_inactive, nbc_bases, nbc_sets,
};
use gainact::poly::{binomial, linial_bounded_regions, pow_bigint, rising_factorial};
use gainact::BigInt;

fn all_trees(n: u32) -> Vec<ColoredForest> {
    let class = ForestClass::new(ClassMode::Unrestricted, 1, 0);
    enumerate_forests(n, 1, &class, true).unwrap()
}

#[test]
fn criterion_01_worked_covering_example() {
    let (sys, act) = covering_samples::five_element_system();
    assert!(sys.verify().is_ok());
    assert_eq!(
        sys.cardinality_vector(),
        ActivityVector::from_i64(&[0, 1, 5, 7, 4])
    );
    let from_c = activity_from_cardinality(&sys.cardinality_vector(), sys.rank()).unwrap();
    assert!(from_c.is_feasible());
    assert_eq!(from_c.vector(), &ActivityVector::from_i64(&[1, 0, 2, 1, 0]));
    assert!(sys.verify_activity(&act).unwrap().is_ok());
    let alpha = sys.activity_vector(&act).unwrap().to_polynomial().unwrap();
    assert_eq!(alpha.to_string(), "1 + 2x^2 + x^3");
    assert!(cardinality_identity_holds(&sys, &act).unwrap());
    println!("acceptance 01: PASS - worked covering example (C, A, alpha, partition, identity)");
}

#[test]
fn criterion_02_pure_counterexample() {
    let sys = covering_samples::two_pure_no_activity();
    assert!(sys.verify().is_ok());
    let from_c = activity_from_cardinality(&sys.cardinality_vector(), sys.rank()).unwrap();
    assert!(!from_c.is_feasible());
    assert_eq!(from_c.vector(), &ActivityVector::from_i64(&[-1, 2, 1]));

    // Exhaustive: no assignment passes the partition check.
    let bases: Vec<ElementSet> = sys.bases().cloned().collect();
    let subsets: Vec<Vec<ElementSet>> = bases
        .iter()
        .map(|basis| {
            let elements: Vec<u32> = basis.iter().collect();
            (0u32..(1 << elements.len()))
                .map(|mask| {
                    ElementSet::new(
                        elements
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask >> i & 1 == 1)
                            .map(|(_, &e)| e),
                    )
                })
                .collect()
        })
        .collect();
    let mut found = 0;
    for first in &subsets[0] {
        for second in &subsets[1] {
            let act = ActivityAssignment::new([
                (bases[0].clone(), first.clone()),
                (bases[1].clone(), second.clone()),
            ]);
            if sys.verify_activity(&act).unwrap().is_ok() {
                found += 1;
            }
        }
    }
    assert_eq!(found, 0);
    println!("acceptance 02: PASS - 2-pure system is infeasible and admits no activity");
}

#[test]
fn criterion_03_all_gain_one_anchors() {
    let g3 = GainGraph::complete_interval(3, 1, 1).unwrap();
    assert_eq!(nbc_sets(&g3).len(), 7);
    assert_eq!(
        activity_vector(&g3).unwrap(),
        ActivityVector::from_i64(&[1, 1, 1])
    );
    let alpha3 = activity_polynomial(&g3).unwrap();
    assert_eq!(alpha3.eval(&BigInt::from(0)), BigInt::from(1));
    assert_eq!(
        alpha3.eval(&BigInt::from(0)),
        linial_bounded_regions(3).unwrap()
    );
    assert_eq!(alpha3.eval(&BigInt::from(2)), BigInt::from(7));

    let g4 = GainGraph::complete_interval(4, 1, 1).unwrap();
    let alpha4 = activity_polynomial(&g4).unwrap();
    assert_eq!(alpha4.to_string(), "4 + 6x + 3x^2 + x^3");
    assert_eq!(nbc_bases(&g4).unwrap().len(), 14);
    assert_eq!(alpha4.eval(&BigInt::from(0)), BigInt::from(4));
    assert_eq!(
        alpha4.eval(&BigInt::from(0)),
        linial_bounded_regions(4).unwrap()
    );
    println!("acceptance 03: PASS - rank-3/4 all-gain-1 anchors (7 sets, (1,1,1); 14 bases, alpha)");
}

#[test]
fn criterion_04_bounded_formula_three_way() {
    let noninc = ForestClass::new(ClassMode::NonIncreasing, 1, 0);
    for n in 3..=6u32 {
        let formula = linial_bounded_regions(n).unwrap();
        if n == 5 {
            assert_eq!(formula, BigInt::from(26));
        }
        let dist = tree_statistic_vector(n, 1, &noninc, Statistic::ChildrenOfN).unwrap();
        assert_eq!(dist.entries()[0], formula, "trees with zero top children, n={n}");
        if n <= 5 {
            let graph = GainGraph::complete_interval(n, 1, 1).unwrap();
            let alpha = activity_polynomial(&graph).unwrap();
            assert_eq!(alpha.eval(&BigInt::from(0)), formula, "NBC bounded, n={n}");
        }
    }
    println!("acceptance 04: PASS - bounded formula = zero-statistic trees (n<=6) = NBC alpha(0) (n<=5), incl. 26 at n=5");
}

#[test]
fn criterion_05_zero_one_closed_forms() {
    let class = ForestClass::new(ClassMode::Unrestricted, 1, 0);
    for n in 2..=6u32 {
        let dist = tree_statistic_vector(n, 1, &class, Statistic::ChildrenOfN).unwrap();
        let e = n as u64 - 1;
        for k in 0..n as u64 {
            let expected = binomial(e, k) * pow_bigint(&BigInt::from(e), (e - k) as u32);
            assert_eq!(dist.entries()[k as usize], expected, "n={n} k={k}");
        }
        assert_eq!(dist.sum(), pow_bigint(&BigInt::from(n), n - 1), "row sum n={n}");
        let alpha = dist.to_polynomial().unwrap();
        assert_eq!(
            alpha.eval(&BigInt::from(2)),
            pow_bigint(&BigInt::from(n + 1), n - 1),
            "alpha(2) n={n}"
        );
        if n <= 5 {
            let graph = GainGraph::complete_interval(n, 0, 1).unwrap();
            assert_eq!(activity_vector(&graph).unwrap(), dist, "NBC cross-check n={n}");
        }
    }
    println!("acceptance 05: PASS - [0,1] closed forms termwise, row sums, alpha(2), NBC cross-check");
}

#[test]
fn criterion_06_all_gain_zero_suite() {
    let dec = ForestClass::new(ClassMode::Decreasing, 1, 0);
    for n in 2..=7u32 {
        let dist = tree_statistic_vector(n, 1, &dec, Statistic::ChildrenOfN).unwrap();
        let oracle = rising_factorial(n).unwrap();
        assert_eq!(dist.to_polynomial().unwrap(), oracle, "distribution n={n}");
        assert_eq!(dist.entries()[0], BigInt::from(0), "no bounded regions n={n}");

        for tree in enumerate_forests(n, 1, &dec, true).unwrap() {
            let image = decreasing_involution(&tree).unwrap();
            assert_eq!(decreasing_involution(&image).unwrap(), tree, "involution n={n}");
            assert_eq!(
                statistic_value(&tree, Statistic::ChildrenOfN),
                consecutive_edges(&image),
                "statistic swap n={n}"
            );
            assert_eq!(
                consecutive_edges(&tree),
                statistic_value(&image, Statistic::ChildrenOfN),
                "statistic swap back n={n}"
            );
        }
    }
    println!("acceptance 06: PASS - decreasing-tree distributions = rising factorial, involution swaps statistics (n<=7)");
}

#[test]
fn criterion_07_codec_golden_and_roundtrips() {
    let tree = codec_samples::worked_tree();
    let pruefer = pruefer_encode(&tree).unwrap();
    assert_eq!(pruefer.to_string(), "2,6,5,2,5,6");
    assert_eq!(
        pruefer_decode(&CodeWord::parse(WordKind::Pruefer { n: 7 }, "2,6,5,2,5,6").unwrap())
            .unwrap(),
        tree
    );
    let blue = blue_encode(&tree).unwrap();
    assert_eq!(blue.to_string(), "b,5,b,2,4,b");
    assert_eq!(
        blue_decode(&CodeWord::parse(WordKind::Blue { n: 7 }, "b,5,b,2,4,b").unwrap()).unwrap(),
        tree
    );

    // Exhaustive round trips: trees -> words -> trees and words -> trees ->
    // words.
    for n in 2..=6u32 {
        let mut words = BTreeSet::new();
        for t in all_trees(n) {
            let w = pruefer_encode(&t).unwrap();
            assert_eq!(pruefer_decode(&w).unwrap(), t, "n={n}");
            assert!(words.insert(w.to_string()), "n={n}");
        }
        assert_eq!(words.len() as u64, (n as u64).pow(n - 1), "word count n={n}");
    }
    for n in 2..=5u32 {
        let mut trees = BTreeSet::new();
        for w in all_words(WordKind::Blue { n }) {
            let t = blue_decode(&w).unwrap();
            assert_eq!(blue_encode(&t).unwrap(), w, "n={n}");
            assert!(trees.insert(t.edges()), "n={n}");
        }
        assert_eq!(trees.len() as u64, (n as u64).pow(n - 1), "tree count n={n}");
    }

    // Statistic transport.
    for n in 2..=6u32 {
        for t in all_trees(n) {
            let pruefer = pruefer_encode(&t).unwrap();
            assert_eq!(
                pruefer
                    .tokens()
                    .iter()
                    .filter(|&&x| x == Token::Num(n))
                    .count(),
                statistic_value(&t, Statistic::ChildrenOfN),
                "n={n}"
            );
            let blue = blue_encode(&t).unwrap();
            assert_eq!(
                blue.tokens().iter().filter(|&&x| x == Token::B).count(),
                consecutive_edges(&t),
                "n={n}"
            );
            let image = swap_bijection(&t).unwrap();
            assert_eq!(
                statistic_value(&t, Statistic::ChildrenOfN),
                consecutive_edges(&image),
                "n={n}"
            );
        }
    }
    println!("acceptance 07: PASS - golden words bit-exact, exhaustive roundtrips (pruefer n<=6, blue n<=5), transport n<=6");
}

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
        out.push(CodeWord::new(kind, idx.iter().map(|&i| alphabet[i]).collect()).unwrap());
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
fn criterion_08_count_equinumerosity() {
    for n in 2..=4u32 {
        for ((a, b), class) in gainact_cli::targets::matched_pairs() {
            let graph = GainGraph::complete_interval(n, a, b).unwrap();
            let forests = enumerate_forests(n, class.colors(), &class, false).unwrap();
            assert_eq!(
                nbc_sets(&graph).len(),
                forests.len(),
                "n={n} [{a},{b}] {class:?}"
            );
        }
        // The [0,2] triple equality.
        let graph = GainGraph::complete_interval(n, 0, 2).unwrap();
        let nbc = nbc_sets(&graph).len();
        let dec = ForestClass::new(ClassMode::Decreasing, 3, 0);
        let noninc = ForestClass::new(ClassMode::NonIncreasing, 1, 1);
        assert_eq!(nbc, enumerate_forests(n, 3, &dec, false).unwrap().len());
        assert_eq!(nbc, enumerate_forests(n, 2, &noninc, false).unwrap().len());
    }
    println!("acceptance 08: PASS - NBC set counts = matched forest class counts (n<=4), incl. the [0,2] triple");
}

#[test]
fn criterion_09_partition_checks() {
    // NBC partition casts for the criteria-3..5 graphs at n <= 5.
    for n in 2..=5u32 {
        for (a, b) in [(1i64, 1i64), (0, 1)] {
            let graph = GainGraph::complete_interval(n, a, b).unwrap();
            let (sys, act) = as_covering_system(&graph).unwrap();
            assert!(sys.verify().is_ok(), "covering n={n} [{a},{b}]");
            assert!(
                sys.verify_activity(&act).unwrap().is_ok(),
                "partition n={n} [{a},{b}]"
            );
        }
    }
    // Forest-class partition casts at n <= 5.
    for n in 2..=5u32 {
        for mode in [
            ClassMode::Unrestricted,
            ClassMode::Decreasing,
            ClassMode::NonIncreasing,
        ] {
            for (k1, k2) in [(1u32, 0u32), (2, 0), (1, 1)] {
                let class = ForestClass::new(mode, k1, k2);
                let (sys, act) =
                    forests_as_covering_system(n, class.colors(), &class).unwrap();
                assert!(sys.verify().is_ok(), "covering n={n} {class:?}");
                assert!(
                    sys.verify_activity(&act).unwrap().is_ok(),
                    "partition n={n} {class:?}"
                );
            }
        }
    }
    // Exterior inactivity of every NBC basis at n <= 4.
    for n in 2..=4u32 {
        for (a, b) in [(1i64, 1i64), (0, 1), (0, 0)] {
            let graph = GainGraph::complete_interval(n, a, b).unwrap();
            for basis in nbc_bases(&graph).unwrap() {
                assert!(
                    exterior_inactive(&graph, &basis.edges).unwrap().is_ok(),
                    "n={n} [{a},{b}]"
                );
            }
        }
    }
    println!("acceptance 09: PASS - partition checks via covering module (n<=5), exterior inactivity (n<=4)");
}

#[test]
fn criterion_10_lbs_suite() {
    // The five published rewirings.
    let rotated = rotate_to_nonincreasing(&lbs_samples::rotation_example()).unwrap();
    for (p, c) in lbs_samples::ROTATION_REWIRINGS {
        assert_eq!(rotated.parent_of(c), Some(p), "rewire ({p},{c})");
    }

    // Rotation bijectivity by counts for n <= 6.
    let noninc = ForestClass::new(ClassMode::NonIncreasing, 1, 0);
    for n in 1..=6u32 {
        let left = enumerate_lbs(n, true);
        let mut images = BTreeSet::new();
        for tree in &left {
            let image = rotate_to_nonincreasing(tree).unwrap();
            assert!(classify(&image, &noninc).unwrap(), "image class n={n}");
            assert!(images.insert(image.edges()), "injectivity n={n}");
        }
        let targets = enumerate_forests(n, 1, &noninc, true).unwrap();
        assert_eq!(left.len(), targets.len(), "count equality n={n}");
    }

    // Conjecture reports at n = 3: restricted equality, literal inequality.
    let restricted = conjecture_report(3, ConjectureVariant::Restricted).unwrap();
    assert_eq!(restricted.dist_consecutive, ActivityVector::from_i64(&[1, 1, 1]));
    assert_eq!(restricted.dist_top, ActivityVector::from_i64(&[1, 1, 1]));
    assert!(restricted.equal);
    let literal = conjecture_report(3, ConjectureVariant::Literal).unwrap();
    assert_eq!(literal.dist_top, ActivityVector::from_i64(&[1, 2, 0]));
    assert_eq!(literal.dist_consecutive, ActivityVector::from_i64(&[1, 1, 1]));
    assert!(!literal.equal);

    // The literal mismatch surfaces as flagged-discrepancy, not failure.
    let report = gainact_cli::targets::conjecture_target(3).unwrap();
    assert!(matches!(
        report.verdict,
        gainact_cli::report::Verdict::FlaggedDiscrepancy
    ));

    // Restricted variant outcome through n = 6, reported either way.
    for n in 1..=6u32 {
        let report = conjecture_report(n, ConjectureVariant::Restricted).unwrap();
        println!(
            "acceptance 10: note - restricted reading at n={n}: {} vs {} ({})",
            report.dist_consecutive,
            report.dist_top,
            if report.equal { "equal" } else { "NOT equal" }
        );
        assert!(report.equal, "restricted reading diverged at n={n}");
    }
    println!("acceptance 10: PASS - rotation rewirings, bijectivity n<=6, conjecture reports");
}

#[test]
fn criterion_11_order_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for n in 2..=4u32 {
        for (a, b) in [(1i64, 1i64), (0, 1), (0, 0), (-1, 1), (0, 2)] {
            let graph = GainGraph::complete_interval(n, a, b).unwrap();
            let sets = nbc_sets(&graph).len();
            let vector = activity_vector(&graph).unwrap();
            let chi = characteristic_polys(&graph);
            for round in 0..5 {
                let mut perm: Vec<usize> = (0..graph.edge_count()).collect();
                perm.shuffle(&mut rng);
                let reordered = graph.reordered(&perm).unwrap();
                assert_eq!(nbc_sets(&reordered).len(), sets, "n={n} [{a},{b}] #{round}");
                assert_eq!(
                    activity_vector(&reordered).unwrap(),
                    vector,
                    "n={n} [{a},{b}] #{round}"
                );
                assert_eq!(
                    characteristic_polys(&reordered),
                    chi,
                    "n={n} [{a},{b}] #{round}"
                );
            }
        }
    }
    println!("acceptance 11: PASS - NBC counts, activity vectors, chi invariant across 5 random edge orders (n<=4)");
}
