//! Seifert moves, random generators and the golden chain file.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use seifert_core::invariants::InvariantReport;
use seifert_core::seifert::{random_seifert, random_unimodular};
use seifert_core::sequiv::{corpus_generate, random_chain, standard_seeds, CorpusParams, MoveWeights};
use seifert_core::{Move, MoveChain, SeifertMatrix};

/// det(P A Pᵗ − (P A Pᵗ)ᵗ) = det(P)² det(A − Aᵗ) = 1, checked by brute force.
#[test]
fn congruence_preserves_seifert_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..500u64 {
        let a = random_seifert(1 + (i % 3) as usize, 3, i);
        let p = random_unimodular(a.size(), &mut rng);
        let b = a.congruate(&p).unwrap();
        let skew = b.matrix() - &b.matrix().transpose();
        assert!(skew.det_cofactor().unwrap().is_one());
    }
}

#[test]
fn random_matrices_validate() {
    for seed in 0..1000u64 {
        let a = random_seifert((seed % 4) as usize, 3, seed);
        assert!(SeifertMatrix::validate(a.matrix().clone()).is_ok());
    }
    assert_eq!(random_seifert(1, 0, 5), SeifertMatrix::from_rows(&[&[0, 1], &[0, 0]]).unwrap());
    assert_eq!(random_seifert(0, 3, 5), SeifertMatrix::unknot());
}

#[test]
fn trefoil_chains_preserve_invariants() {
    let a = SeifertMatrix::trefoil();
    let expected = InvariantReport::of(&a);
    for seed in 0..200u64 {
        let chain = random_chain(&a, 6, &MoveWeights::default(), seed);
        let b = chain.apply().unwrap();
        assert_eq!(InvariantReport::of(&b), expected, "seed {seed}");
    }
}

#[test]
fn default_corpus() {
    let corpus = corpus_generate(&standard_seeds(), 100, &CorpusParams::default());
    assert_eq!(corpus.len(), 300);
    for (entry, seed) in corpus.iter().zip(standard_seeds().iter().flat_map(|s| std::iter::repeat_n(s, 100))) {
        assert!(entry.is_consistent(), "{}", entry.name);
        assert_eq!(entry.invariants.alexander, InvariantReport::of(&seed.1).alexander);
    }
    let again = corpus_generate(&standard_seeds(), 100, &CorpusParams::default());
    assert_eq!(serde_json::to_string(&corpus).unwrap(), serde_json::to_string(&again).unwrap());
}

#[derive(Serialize, Deserialize)]
struct Golden {
    seed: u64,
    chain: MoveChain,
    result: SeifertMatrix,
}

const GOLDEN_SEED: u64 = 6;

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/trefoil_chain6.json")
}

fn golden_text() -> String {
    let chain = random_chain(&SeifertMatrix::trefoil(), 6, &MoveWeights::default(), GOLDEN_SEED);
    let result = chain.apply().unwrap();
    serde_json::to_string_pretty(&Golden { seed: GOLDEN_SEED, chain, result }).unwrap() + "\n"
}

/// Set `UPDATE_GOLDEN=1` to rewrite the file after an intended change.
#[test]
fn golden_chain_replays() {
    let text = golden_text();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(golden_path(), &text).unwrap();
    }
    let stored = std::fs::read_to_string(golden_path()).unwrap();
    assert_eq!(stored, text, "generator output drifted from the golden file");
    let golden: Golden = serde_json::from_str(&stored).unwrap();
    assert_eq!(golden.chain.apply().unwrap(), golden.result);
    assert_eq!(golden.chain.len(), 6);
}

#[test]
fn chain_documents_round_trip() {
    let chain = random_chain(&SeifertMatrix::figure_eight(), 6, &MoveWeights::default(), 77);
    let text = serde_json::to_string(&chain).unwrap();
    let back: MoveChain = serde_json::from_str(&text).unwrap();
    assert_eq!(back, chain);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    let mv: Move = serde_json::from_str(r#"{"move":"enlarge","kind":2,"v":[1,-2]}"#).unwrap();
    assert_eq!(mv, Move::Enlarge { kind: seifert_core::EnlargeKind::Two, v: vec![BigInt::from(1), BigInt::from(-2)] });
}
