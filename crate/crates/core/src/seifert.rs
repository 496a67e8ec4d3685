//! Seifert matrices and the moves generating S-equivalence.
//!
//! A square integer matrix `A` is of Seifert type when `det(A − Aᵗ) = 1`.
//! S-equivalence is generated by
//!
//! * elementary enlargements, which append two rows and columns in one of
//!   two fixed block shapes around a column vector `v`,
//! * elementary reductions, their inverses, and
//! * unimodular congruences `A ↦ P A Pᵗ` with `det P = ±1`.
//!
//! Reductions are matched up to a simultaneous permutation of rows and
//! columns: a [`ReductionSite`] names the two indices that play the role of
//! the appended pair, and the permutation moving them to the end is part of
//! the site. Permutations are unimodular congruences, so this stays inside
//! the S-equivalence class.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SeifertError;
use crate::laurent::LaurentPoly;
use crate::matrix::{IntMatrix, Matrix};
use crate::serde_int;

/// Which of the two enlargement block shapes:
///
/// ```text
/// One: [[A, 0, 0], [vᵗ, 0, 0], [0, 1, 0]]
/// Two: [[A, v, 0], [0, 0, 1], [0, 0, 0]]
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum EnlargeKind {
    One,
    Two,
}

impl EnlargeKind {
    pub const ALL: [EnlargeKind; 2] = [EnlargeKind::One, EnlargeKind::Two];

    pub fn number(self) -> u8 {
        match self {
            EnlargeKind::One => 1,
            EnlargeKind::Two => 2,
        }
    }
}

impl TryFrom<u8> for EnlargeKind {
    type Error = SeifertError;
    fn try_from(k: u8) -> Result<Self, SeifertError> {
        match k {
            1 => Ok(EnlargeKind::One),
            2 => Ok(EnlargeKind::Two),
            other => Err(SeifertError::InvalidKind(other)),
        }
    }
}

impl From<EnlargeKind> for u8 {
    fn from(k: EnlargeKind) -> u8 {
        k.number()
    }
}

impl fmt::Display for EnlargeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// A square integer matrix with `det(A − Aᵗ) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    entries: IntMatrix,
}

impl SeifertMatrix {
    pub fn validate(entries: IntMatrix) -> Result<Self, SeifertError> {
        if !entries.is_square() {
            return Err(SeifertError::NotSquare { rows: entries.rows(), cols: entries.cols() });
        }
        let skew = &entries - &entries.transpose();
        let det = skew.det().expect("square");
        if !det.is_one() {
            return Err(SeifertError::NotSeifertType(det));
        }
        Ok(Self { entries })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self, SeifertError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != rows.len()) {
            return Err(SeifertError::NotSquare { rows: rows.len(), cols: bad.len() });
        }
        Self::validate(IntMatrix::from_i64_rows(rows))
    }

    /// The 0×0 matrix; its determinant is the empty product 1.
    pub fn unknot() -> Self {
        Self { entries: IntMatrix::zeros(0, 0) }
    }

    pub fn trefoil() -> Self {
        Self::from_rows(&[&[-1, 1], &[0, -1]]).expect("trefoil is Seifert type")
    }

    pub fn figure_eight() -> Self {
        Self::from_rows(&[&[1, 1], &[0, -1]]).expect("figure-eight is Seifert type")
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i, j)]
    }

    /// The Alexander module presentation `A·t − Aᵗ`.
    pub fn presentation(&self) -> Matrix<LaurentPoly> {
        let k = self.size();
        Matrix::from_fn(k, k, |i, j| {
            LaurentPoly::monomial(self.entries[(i, j)].clone(), 1) - LaurentPoly::constant(self.entries[(j, i)].clone())
        })
    }

    /// Applies one elementary enlargement.
    pub fn enlarge(&self, kind: EnlargeKind, v: &[BigInt]) -> Result<Self, SeifertError> {
        let k = self.size();
        if v.len() != k {
            return Err(SeifertError::DimensionMismatch { expected: k, found: v.len() });
        }
        let entries = Matrix::from_fn(k + 2, k + 2, |i, j| match (i < k, j < k) {
            (true, true) => self.entries[(i, j)].clone(),
            _ => match kind {
                EnlargeKind::One if i == k && j < k => v[j].clone(),
                EnlargeKind::One if i == k + 1 && j == k => BigInt::one(),
                EnlargeKind::Two if j == k && i < k => v[i].clone(),
                EnlargeKind::Two if i == k && j == k + 1 => BigInt::one(),
                _ => BigInt::zero(),
            },
        });
        Ok(Self { entries })
    }

    /// Every way this matrix is, up to simultaneous permutation, an
    /// elementary enlargement of a smaller matrix.
    pub fn find_reductions(&self) -> Vec<ReductionSite> {
        let k = self.size();
        let mut out = Vec::new();
        for kind in EnlargeKind::ALL {
            for first in 0..k {
                for second in 0..k {
                    let site = ReductionSite { kind, first, second };
                    if first != second && self.reduction_vector(&site).is_some() {
                        out.push(site);
                    }
                }
            }
        }
        out
    }

    /// The enlargement vector `v` if `site` matches, else `None`.
    pub fn reduction_vector(&self, site: &ReductionSite) -> Option<Vec<BigInt>> {
        let k = self.size();
        if k < 2 || site.first >= k || site.second >= k || site.first == site.second {
            return None;
        }
        let m = k - 2;
        let a = self.entries.permute_symmetric(&site.permutation(k));
        let zero = |i: usize, j: usize| a[(i, j)].is_zero();
        let one = |i: usize, j: usize| a[(i, j)].is_one();
        let matches = match site.kind {
            EnlargeKind::One => {
                (0..m).all(|i| zero(i, m) && zero(i, m + 1))
                    && zero(m, m)
                    && zero(m, m + 1)
                    && (0..m).all(|j| zero(m + 1, j))
                    && one(m + 1, m)
                    && zero(m + 1, m + 1)
            }
            EnlargeKind::Two => {
                (0..m).all(|i| zero(i, m + 1))
                    && (0..m).all(|j| zero(m, j) && zero(m + 1, j))
                    && zero(m, m)
                    && one(m, m + 1)
                    && zero(m + 1, m)
                    && zero(m + 1, m + 1)
            }
        };
        if !matches {
            return None;
        }
        Some(match site.kind {
            EnlargeKind::One => (0..m).map(|j| a[(m, j)].clone()).collect(),
            EnlargeKind::Two => (0..m).map(|i| a[(i, m)].clone()).collect(),
        })
    }

    /// Removes the enlargement block at `site`.
    pub fn reduce(&self, site: &ReductionSite) -> Result<Self, SeifertError> {
        if self.reduction_vector(site).is_none() {
            return Err(SeifertError::InvalidReductionSite {
                kind: site.kind.number(),
                first: site.first,
                second: site.second,
            });
        }
        let k = self.size();
        let perm = site.permutation(k);
        Ok(Self { entries: self.entries.select(&perm[..k - 2], &perm[..k - 2]) })
    }

    /// `P A Pᵗ` for unimodular `P`.
    pub fn congruate(&self, p: &IntMatrix) -> Result<Self, SeifertError> {
        let k = self.size();
        if p.rows() != k || p.cols() != k {
            return Err(SeifertError::DimensionMismatch { expected: k, found: p.rows().max(p.cols()) });
        }
        let det = p.det().expect("square");
        if !det.is_one() && !(-&det).is_one() {
            return Err(SeifertError::NotUnimodular(det));
        }
        Ok(self.congruate_unchecked(p))
    }

    pub(crate) fn congruate_unchecked(&self, p: &IntMatrix) -> Self {
        Self { entries: &(p * &self.entries) * &p.transpose() }
    }

    pub(crate) fn from_entries_unchecked(entries: IntMatrix) -> Self {
        debug_assert!(SeifertMatrix::validate(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn apply(&self, mv: &Move) -> Result<Self, SeifertError> {
        match mv {
            Move::Enlarge { kind, v } => self.enlarge(*kind, v),
            Move::Reduce(site) => self.reduce(site),
            Move::Congruence { p } => self.congruate(p),
        }
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({})", self.entries)
    }
}

impl Serialize for SeifertMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde_int::matrix::serialize(&self.entries, serializer)
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let m = serde_int::matrix::deserialize(deserializer)?;
        SeifertMatrix::validate(m).map_err(serde::de::Error::custom)
    }
}

/// Where an elementary reduction applies: rows/columns `first` and `second`
/// are moved to the last two positions (the others keep their order) and the
/// result must have the `kind` enlargement shape there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReductionSite {
    pub kind: EnlargeKind,
    pub first: usize,
    pub second: usize,
}

impl ReductionSite {
    /// The site of a freshly appended enlargement block on a `k×k` matrix.
    pub fn trailing(kind: EnlargeKind, k: usize) -> Self {
        Self { kind, first: k - 2, second: k - 1 }
    }

    /// `perm[i]` is the original index placed at position `i`.
    pub fn permutation(&self, k: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..k).filter(|&i| i != self.first && i != self.second).collect();
        perm.push(self.first);
        perm.push(self.second);
        perm
    }

    /// The permutation as a unimodular matrix `Π` with `Π A Πᵗ` the
    /// rearranged matrix.
    pub fn permutation_matrix(&self, k: usize) -> IntMatrix {
        permutation_matrix(&self.permutation(k))
    }
}

pub(crate) fn permutation_matrix(perm: &[usize]) -> IntMatrix {
    let k = perm.len();
    Matrix::from_fn(k, k, |i, j| if perm[i] == j { BigInt::one() } else { BigInt::zero() })
}

/// One S-equivalence move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "lowercase")]
pub enum Move {
    Enlarge {
        kind: EnlargeKind,
        #[serde(with = "serde_int::vec")]
        v: Vec<BigInt>,
    },
    Reduce(ReductionSite),
    Congruence {
        #[serde(with = "serde_int::matrix")]
        p: IntMatrix,
    },
}

/// A start matrix and a sequence of moves to replay from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveChain {
    pub start: SeifertMatrix,
    pub moves: Vec<Move>,
}

impl MoveChain {
    pub fn new(start: SeifertMatrix) -> Self {
        Self { start, moves: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Replays every move; the first failure is reported with its index.
    pub fn apply(&self) -> Result<SeifertMatrix, SeifertError> {
        Ok(self.trace()?.pop().expect("trace holds the start matrix"))
    }

    /// The start matrix followed by the matrix after each move.
    pub fn trace(&self) -> Result<Vec<SeifertMatrix>, SeifertError> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(self.start.clone());
        for (index, mv) in self.moves.iter().enumerate() {
            let next = out
                .last()
                .unwrap()
                .apply(mv)
                .map_err(|e| SeifertError::ChainFailed { index, source: Box::new(e) })?;
            out.push(next);
        }
        Ok(out)
    }
}

/// A `2g×2g` Seifert matrix `S + T`: `S` symmetric with entries in
/// `[−bound, bound]`, `T` the strictly upper part of the standard
/// symplectic form, so `A − Aᵗ` is that form and has determinant 1.
pub fn random_seifert(genus: usize, bound: u32, seed: u64) -> SeifertMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_seifert_with(genus, bound, &mut rng)
}

pub fn random_seifert_with(genus: usize, bound: u32, rng: &mut impl Rng) -> SeifertMatrix {
    let k = 2 * genus;
    let b = bound as i64;
    let mut m = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let s = BigInt::from(rng.random_range(-b..=b));
            m[(i, j)] = s.clone();
            m[(j, i)] = s;
        }
    }
    for i in 0..genus {
        m[(2 * i, 2 * i + 1)] += 1;
    }
    SeifertMatrix::from_entries_unchecked(m)
}

/// Number of elementary operations multiplied into a random unimodular
/// matrix is drawn from `1..=MAX_UNIMODULAR_OPS`.
pub const MAX_UNIMODULAR_OPS: usize = 12;

/// A random `k×k` unimodular matrix: a product of transvections
/// `row_i += ±row_j` and row sign flips.
pub fn random_unimodular(k: usize, rng: &mut impl Rng) -> IntMatrix {
    let mut p = IntMatrix::identity(k);
    if k == 0 {
        return p;
    }
    let ops = rng.random_range(1..=MAX_UNIMODULAR_OPS);
    for _ in 0..ops {
        if k >= 2 && rng.random_bool(0.8) {
            let i = rng.random_range(0..k);
            let mut j = rng.random_range(0..k - 1);
            if j >= i {
                j += 1;
            }
            let s: i64 = if rng.random_bool(0.5) { 1 } else { -1 };
            for c in 0..k {
                let delta = &p[(j, c)] * s;
                p[(i, c)] += delta;
            }
        } else {
            let i = rng.random_range(0..k);
            for c in 0..k {
                p[(i, c)] = -std::mem::take(&mut p[(i, c)]);
            }
        }
    }
    p
}

/// Enlargement vectors have entries drawn uniformly from `[−2, 2]`.
pub const ENLARGE_VECTOR_BOUND: i64 = 2;

pub fn random_enlarge_vector(k: usize, rng: &mut impl Rng) -> Vec<BigInt> {
    (0..k).map(|_| BigInt::from(rng.random_range(-ENLARGE_VECTOR_BOUND..=ENLARGE_VECTOR_BOUND))).collect()
}
