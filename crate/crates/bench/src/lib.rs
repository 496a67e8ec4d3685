//! Fixed inputs shared by the benchmarks in `benches/`.

use seifert_core::seifert::random_seifert;
use seifert_core::sequiv::{random_chain, MoveWeights};
use seifert_core::{LaurentPoly, Matrix, MoveChain, SeifertMatrix};

/// Genera covered by the size sweeps (sizes 2 to 8).
pub const GENERA: [usize; 4] = [1, 2, 3, 4];

pub fn matrix(genus: usize) -> SeifertMatrix {
    random_seifert(genus, 3, 1_000 + genus as u64)
}

pub fn presentation(genus: usize) -> Matrix<LaurentPoly> {
    matrix(genus).presentation()
}

/// A chain of `len` default-weighted moves from a genus-`genus` matrix.
pub fn chain(genus: usize, len: usize) -> MoveChain {
    random_chain(&matrix(genus), len, &MoveWeights::default(), 77)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        for g in GENERA {
            assert_eq!(matrix(g).size(), 2 * g);
            assert_eq!(chain(g, 6), chain(g, 6));
        }
    }
}
