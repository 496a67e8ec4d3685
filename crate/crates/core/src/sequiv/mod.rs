//! Random move chains, chain search and the comparison pipeline.

mod lattice;
mod search;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use search::{canonical_form, chain_search, find_congruence, reduction_congruence, ChainBudget, CANONICAL_MAX_SIZE};

use crate::blanchfield::{isometry_search, Isometry, IsometryBudget, Verdict, Witness};
use crate::invariants::{InvariantDiff, InvariantReport};
use crate::seifert::{random_enlarge_vector, random_unimodular, EnlargeKind, Move, MoveChain, SeifertMatrix};

/// Random walks never grow a matrix more than this far beyond its start.
pub const SIZE_CAP_MARGIN: usize = 4;

/// Relative weights of the move types in [`random_chain`]. Unavailable
/// moves (no reduction site, size cap reached) drop out and the rest are
/// renormalized.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveWeights {
    pub enlarge: f64,
    pub reduce: f64,
    pub congruence: f64,
}

impl Default for MoveWeights {
    fn default() -> Self {
        Self { enlarge: 0.3, reduce: 0.3, congruence: 0.4 }
    }
}

/// A chain of `n` random moves from `a`, a pure function of its arguments.
pub fn random_chain(a: &SeifertMatrix, n: usize, weights: &MoveWeights, seed: u64) -> MoveChain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_chain_with(a, n, weights, &mut rng)
}

pub fn random_chain_with(a: &SeifertMatrix, n: usize, weights: &MoveWeights, rng: &mut impl Rng) -> MoveChain {
    let cap = a.size() + SIZE_CAP_MARGIN;
    let mut chain = MoveChain::new(a.clone());
    let mut cur = a.clone();
    while chain.len() < n {
        let sites = cur.find_reductions();
        let options = [
            (weights.enlarge, cur.size() + 2 <= cap),
            (weights.reduce, !sites.is_empty()),
            (weights.congruence, cur.size() > 0),
        ];
        let total: f64 = options.iter().filter(|o| o.1).map(|o| o.0).sum();
        let mut pick = rng.random::<f64>() * total;
        let mut choice = 0;
        for (i, (w, ok)) in options.iter().enumerate() {
            if !ok {
                continue;
            }
            choice = i;
            if pick < *w {
                break;
            }
            pick -= w;
        }
        let mv = match choice {
            0 => {
                let kind = if rng.random_bool(0.5) { EnlargeKind::One } else { EnlargeKind::Two };
                Move::Enlarge { kind, v: random_enlarge_vector(cur.size(), rng) }
            }
            1 => Move::Reduce(sites[rng.random_range(0..sites.len())]),
            _ => Move::Congruence { p: random_unimodular(cur.size(), rng) },
        };
        cur = cur.apply(&mv).expect("generated moves apply");
        chain.moves.push(mv);
    }
    chain
}

/// Budgets for both stages of [`compare`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareBudget {
    pub chain: ChainBudget,
    pub isometry: IsometryBudget,
}

/// The outcome of [`compare`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub invariant_diffs: Vec<InvariantDiff>,
    pub pairing_verdict: Verdict,
    pub chain_witness: Option<MoveChain>,
}

/// Invariant filter, then chain search, then isometry search. Inequivalence
/// is only ever reported through a named invariant; a search that runs out
/// of budget reports `Unknown`.
pub fn compare(a: &SeifertMatrix, b: &SeifertMatrix, budget: &CompareBudget) -> CompareReport {
    let invariant_diffs = InvariantReport::of(a).differences(&InvariantReport::of(b));
    if let Some(d) = invariant_diffs.first() {
        let pairing_verdict =
            Verdict::DistinctInvariant { invariant: d.name.clone(), left: d.left.clone(), right: d.right.clone() };
        return CompareReport { invariant_diffs, pairing_verdict, chain_witness: None };
    }
    if a == b {
        return CompareReport {
            invariant_diffs,
            pairing_verdict: Verdict::Isometric { witness: Witness::Map { isometry: Isometry::identity(a.size()) } },
            chain_witness: Some(MoveChain::new(a.clone())),
        };
    }
    if let Some(chain) = chain_search(a, b, &budget.chain) {
        return CompareReport {
            invariant_diffs,
            pairing_verdict: Verdict::Isometric { witness: Witness::Chain { chain: chain.clone() } },
            chain_witness: Some(chain),
        };
    }
    CompareReport { invariant_diffs, pairing_verdict: isometry_search(a, b, &budget.isometry), chain_witness: None }
}

/// Parameters of [`corpus_generate`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusParams {
    pub chain_length: usize,
    pub seed: u64,
    pub weights: MoveWeights,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self { chain_length: 6, seed: 0, weights: MoveWeights::default() }
    }
}

/// One generated matrix with the chain that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub matrix: SeifertMatrix,
    pub origin: MoveChain,
    pub invariants: InvariantReport,
}

impl CorpusEntry {
    /// The origin replays to the matrix and the stored invariants match a
    /// fresh computation.
    pub fn is_consistent(&self) -> bool {
        self.origin.apply().as_ref() == Ok(&self.matrix) && InvariantReport::of(&self.matrix) == self.invariants
    }
}

/// The standard seeds: unknot, trefoil and figure-eight.
pub fn standard_seeds() -> Vec<(String, SeifertMatrix)> {
    vec![
        ("unknot".to_owned(), SeifertMatrix::unknot()),
        ("trefoil".to_owned(), SeifertMatrix::trefoil()),
        ("figure-eight".to_owned(), SeifertMatrix::figure_eight()),
    ]
}

/// `per_seed` random chains from each seed. Entry `j` of seed `i` uses the
/// chain seed `params.seed + 1_000_003·i + j`, so the corpus is a pure
/// function of its arguments and entries can be generated independently.
pub fn corpus_generate(seeds: &[(String, SeifertMatrix)], per_seed: usize, params: &CorpusParams) -> Vec<CorpusEntry> {
    let mut out = Vec::with_capacity(seeds.len() * per_seed);
    for (i, (name, start)) in seeds.iter().enumerate() {
        for j in 0..per_seed {
            let seed = params.seed.wrapping_add(1_000_003u64.wrapping_mul(i as u64)).wrapping_add(j as u64);
            let origin = random_chain(start, params.chain_length, &params.weights, seed);
            let matrix = origin.apply().expect("generated chains replay");
            out.push(CorpusEntry {
                name: format!("{name}-{j:03}"),
                invariants: InvariantReport::of(&matrix),
                matrix,
                origin,
            });
        }
    }
    out
}
