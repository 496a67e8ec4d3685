//! The Blanchfield pairing of a Seifert matrix and isometries between
//! pairings.
//!
//! For a `k×k` Seifert matrix `A` the Alexander module is
//! `Λᵏ / (At − Aᵗ)Λᵏ` with `Λ = Z[t, t⁻¹]`, and the pairing is
//!
//! ```text
//! λ(v, w) = v̄ᵗ (t − 1) (At − Aᵗ)⁻¹ w   in Q(t) / Λ.
//! ```
//!
//! Maps between modules are given on generators: a matrix over Λ whose
//! columns are the images of the source generators. A map is checked on
//! basis pairs only; sesquilinearity extends the check to the whole module.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::BlanchfieldError;
use crate::invariants::InvariantReport;
use crate::laurent::{LaurentPoly, RatFun, TorsionClass};
use crate::matrix::{IntMatrix, Matrix};
use crate::seifert::{EnlargeKind, Move, MoveChain, ReductionSite, SeifertMatrix};

fn t_minus_one() -> LaurentPoly {
    LaurentPoly::from_coeffs(0, &[-1, 1])
}

/// The pairing `(t − 1)(At − Aᵗ)⁻¹` together with the presentation it
/// inverts.
///
/// The pairing is also kept over the common denominator `det(At − Aᵗ)` as
/// a Λ-matrix of numerators, which is what evaluation uses.
#[derive(Clone, Debug)]
pub struct BlanchfieldForm {
    presentation: Matrix<LaurentPoly>,
    order: LaurentPoly,
    adjugate: Matrix<LaurentPoly>,
    numerators: Matrix<LaurentPoly>,
    pairing: Matrix<RatFun>,
}

impl BlanchfieldForm {
    pub fn new(a: &SeifertMatrix) -> Self {
        let presentation = a.presentation();
        let (order, adjugate) = presentation.adjugate().expect("square");
        assert!(!order.is_zero(), "Seifert-type presentations have nonzero determinant");
        let numerators = adjugate.scale(&t_minus_one());
        let pairing = numerators.map(|n| RatFun::new(n.clone(), order.clone()).expect("nonzero order"));
        let form = Self { presentation, order, adjugate, numerators, pairing };
        assert!(form.defining_identity_holds(), "pairing · presentation ≠ (t − 1)·I");
        assert!(form.hermitian_check(), "pairing is not hermitian mod Λ");
        form
    }

    pub fn size(&self) -> usize {
        self.presentation.rows()
    }

    /// `At − Aᵗ`.
    pub fn presentation(&self) -> &Matrix<LaurentPoly> {
        &self.presentation
    }

    /// `det(At − Aᵗ)`, not unit-normalized.
    pub fn order(&self) -> &LaurentPoly {
        &self.order
    }

    /// `(t − 1)(At − Aᵗ)⁻¹` entrywise in Q(t).
    pub fn pairing(&self) -> &Matrix<RatFun> {
        &self.pairing
    }

    /// `pairing · presentation = (t − 1)·I`, checked exactly in Q(t).
    pub fn defining_identity_holds(&self) -> bool {
        let k = self.size();
        let pres = self.presentation.map(|p| RatFun::from_poly(p.clone()));
        let product = &self.pairing * &pres;
        let expected = Matrix::<RatFun>::identity(k).scale(&RatFun::from_poly(t_minus_one()));
        product == expected
    }

    /// `λ(e_j, e_i) = conj(λ(e_i, e_j))` mod Λ on every basis pair.
    pub fn hermitian_check(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| {
            (i..k).all(|j| {
                TorsionClass::new(self.pairing[(j, i)].clone())
                    .class_eq(&TorsionClass::new(self.pairing[(i, j)].involute()))
            })
        })
    }

    /// Some basis pair pairs to a nonzero class. Expected whenever the
    /// Alexander polynomial is not a unit; a finite stand-in for
    /// non-singularity, which is a module-level statement.
    pub fn has_nonzero_pairing(&self) -> bool {
        self.pairing.entries().iter().any(|r| !TorsionClass::new(r.clone()).is_zero_class())
    }

    /// `v̄ᵗ (t − 1)(At − Aᵗ)⁻¹ w` as an element of Q(t).
    pub fn evaluate_exact(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<RatFun, BlanchfieldError> {
        let k = self.size();
        for x in [v, w] {
            if x.len() != k {
                return Err(BlanchfieldError::DimensionMismatch { expected: k, found: x.len() });
            }
        }
        let nw = self.numerators.mul_vec(w);
        Ok(RatFun::new(conj_dot(v, &nw), self.order.clone()).expect("nonzero order"))
    }

    /// The class of `λ(v, w)` in Q(t) / Λ.
    pub fn evaluate(&self, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<TorsionClass, BlanchfieldError> {
        self.evaluate_exact(v, w).map(TorsionClass::new)
    }

    /// Numerator of `λ(x, y)` over [`order`](Self::order) where `x`, `y` are
    /// the columns `i`, `j` of `f`.
    fn gram_numerators(&self, f: &Matrix<LaurentPoly>) -> Matrix<LaurentPoly> {
        &(&f.involute().transpose() * &self.numerators) * f
    }
}

/// `Σ conj(v_i)·w_i`.
fn conj_dot(v: &[LaurentPoly], w: &[LaurentPoly]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (a, b) in v.iter().zip(w) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a.involute() * b);
        }
    }
    acc
}

/// How strictly [`Isometry::verify`] compares pairing values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    /// Equality of classes in Q(t) / Λ.
    ModLambda,
    /// Equality of representatives in Q(t).
    Exact,
}

/// A map of Alexander modules given on generators, from a source form with
/// `forward.cols()` generators to a target form with `forward.rows()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    pub forward: Matrix<LaurentPoly>,
    /// Column indices of `[forward | target presentation]` whose maximal
    /// minor is a unit of Λ, certifying that the map is onto.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
}

impl Isometry {
    pub fn new(forward: Matrix<LaurentPoly>) -> Self {
        Self { forward, certificate: None }
    }

    pub fn identity(k: usize) -> Self {
        Self { forward: Matrix::identity(k), certificate: Some((0..k).collect()) }
    }

    pub fn source_size(&self) -> usize {
        self.forward.cols()
    }

    pub fn target_size(&self) -> usize {
        self.forward.rows()
    }

    /// First apply `inner`, then `self`.
    pub fn compose(&self, inner: &Isometry) -> Isometry {
        Isometry::new(&self.forward * &inner.forward)
    }

    /// Checks that the map is well defined on the quotient modules (relations
    /// go to relations), that it respects the pairings on all basis pairs,
    /// and that the surjectivity certificate holds when one is attached.
    pub fn verify(&self, source: &BlanchfieldForm, target: &BlanchfieldForm, strictness: Strictness) -> Result<(), BlanchfieldError> {
        let f = &self.forward;
        if f.rows() != target.size() {
            return Err(BlanchfieldError::DimensionMismatch { expected: target.size(), found: f.rows() });
        }
        if f.cols() != source.size() {
            return Err(BlanchfieldError::DimensionMismatch { expected: source.size(), found: f.cols() });
        }
        let image = &(&target.adjugate * f) * &source.presentation;
        for j in 0..image.cols() {
            for i in 0..image.rows() {
                if image[(i, j)].divide_exact(&target.order).expect("nonzero order").is_none() {
                    return Err(BlanchfieldError::RelationsNotPreserved { column: j });
                }
            }
        }
        let gram = target.gram_numerators(f);
        for i in 0..source.size() {
            for j in 0..source.size() {
                let value = RatFun::new(gram[(i, j)].clone(), target.order.clone()).expect("nonzero order");
                let expected = &source.pairing[(i, j)];
                let ok = match strictness {
                    Strictness::Exact => &value == expected,
                    Strictness::ModLambda => TorsionClass::new(value).class_eq(&TorsionClass::new(expected.clone())),
                };
                if !ok {
                    return Err(BlanchfieldError::PairingMismatch { i, j });
                }
            }
        }
        if let Some(cols) = &self.certificate {
            if !is_unit_minor(f, &target.presentation, cols) {
                return Err(BlanchfieldError::BadCertificate);
            }
        }
        Ok(())
    }
}

fn is_unit_minor(f: &Matrix<LaurentPoly>, pres: &Matrix<LaurentPoly>, cols: &[usize]) -> bool {
    let k = f.rows();
    if cols.len() != k || cols.iter().any(|&c| c >= f.cols() + k) {
        return false;
    }
    let m = Matrix::from_fn(k, k, |i, j| {
        let c = cols[j];
        if c < f.cols() {
            f[(i, c)].clone()
        } else {
            pres[(i, c - f.cols())].clone()
        }
    });
    m.det().expect("square").as_unit().is_some()
}

/// Searches column subsets of `[f | pres]` in lexicographic order for a unit
/// maximal minor, trying at most `limit` subsets.
fn find_unit_minor(f: &Matrix<LaurentPoly>, pres: &Matrix<LaurentPoly>, limit: usize) -> Option<Vec<usize>> {
    let k = f.rows();
    let n = f.cols() + k;
    if k > n {
        return None;
    }
    let mut cols: Vec<usize> = (0..k).collect();
    for _ in 0..limit {
        if is_unit_minor(f, pres, &cols) {
            return Some(cols);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if cols[i] < n - k + i {
                break;
            }
        }
        cols[i] += 1;
        for j in i + 1..k {
            cols[j] = cols[j - 1] + 1;
        }
    }
    None
}

fn to_laurent(p: &IntMatrix) -> Matrix<LaurentPoly> {
    p.to_laurent()
}

/// The isometry `x ↦ P⁻¹x` from the form of `P A Pᵗ` to the form of `A`.
/// It holds exactly in Q(t), not only modulo Λ, and is checked that way.
pub fn congruence_isometry(a: &SeifertMatrix, p: &IntMatrix) -> Result<Isometry, BlanchfieldError> {
    let b = a.congruate(p)?;
    let inv = p.unimodular_inverse().expect("congruate checked det P = ±1");
    let iso = Isometry::new(to_laurent(&inv));
    iso.verify(&BlanchfieldForm::new(&b), &BlanchfieldForm::new(a), Strictness::Exact)?;
    Ok(iso)
}

/// Generator map from the module of an enlargement back to the module of
/// `A` (`k` generators):
///
/// * kind 1: `e_i ↦ e_i` for `i < k`, `e_k ↦ 0`, `e_{k+1} ↦ t⁻¹·v`
/// * kind 2: `e_i ↦ e_i` for `i < k`, `e_k ↦ 0`, `e_{k+1} ↦ t·v`
///
/// In the kind-1 presentation the last column says `e_k = 0` and column `k`
/// says `t·e_{k+1} = v`; kind 2 is the mirror image.
pub fn enlargement_map(kind: EnlargeKind, v: &[BigInt]) -> Matrix<LaurentPoly> {
    let k = v.len();
    let shift = match kind {
        EnlargeKind::One => -1,
        EnlargeKind::Two => 1,
    };
    Matrix::from_fn(k, k + 2, |i, j| {
        if j < k {
            if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        } else if j == k + 1 {
            LaurentPoly::monomial(v[i].clone(), shift)
        } else {
            LaurentPoly::zero()
        }
    })
}

/// The isometry from the form of `enlarge(A, kind, v)` to the form of `A`,
/// verified modulo Λ on all basis pairs.
pub fn enlargement_isometry(a: &SeifertMatrix, kind: EnlargeKind, v: &[BigInt]) -> Result<Isometry, BlanchfieldError> {
    let big = a.enlarge(kind, v)?;
    let iso = Isometry::new(enlargement_map(kind, v));
    iso.verify(&BlanchfieldForm::new(&big), &BlanchfieldForm::new(a), Strictness::ModLambda)?;
    Ok(iso)
}

/// Generator map from the module of `reduce(X, site)` into the module of
/// `X`: include into the enlarged coordinates, then undo the site's
/// permutation.
pub fn reduction_map(k: usize, site: &ReductionSite) -> Matrix<LaurentPoly> {
    let perm = site.permutation(k);
    // Column c of the included reduced matrix is generator perm[c] of X.
    Matrix::from_fn(k, k - 2, |i, c| if perm[c] == i { LaurentPoly::one() } else { LaurentPoly::zero() })
}

/// The map of one move, from the module after the move to the module
/// before it.
fn move_map(before: &SeifertMatrix, mv: &Move) -> Matrix<LaurentPoly> {
    match mv {
        Move::Congruence { p } => to_laurent(&p.unimodular_inverse().expect("replayed congruences are unimodular")),
        Move::Enlarge { kind, v } => enlargement_map(*kind, v),
        Move::Reduce(site) => reduction_map(before.size(), site),
    }
}

/// Composite of the per-move maps: an isometry from the form of the chain's
/// final matrix to the form of its start, verified end to end modulo Λ.
pub fn chain_isometry(chain: &MoveChain) -> Result<Isometry, BlanchfieldError> {
    let trace = chain.trace()?;
    let mut forward = Matrix::<LaurentPoly>::identity(chain.start.size());
    for (before, mv) in trace.iter().zip(&chain.moves) {
        forward = &forward * &move_map(before, mv);
    }
    let iso = Isometry::new(forward);
    let end = trace.last().expect("nonempty trace");
    iso.verify(&BlanchfieldForm::new(end), &BlanchfieldForm::new(&chain.start), Strictness::ModLambda)?;
    Ok(iso)
}

/// Limits for [`isometry_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryBudget {
    /// Entries are `c·t^d` with `|c| ≤ coeff_bound`.
    pub coeff_bound: u32,
    /// ... and `|d| ≤ degree_bound`.
    pub degree_bound: u32,
    /// Candidate columns examined before giving up.
    pub max_candidates: u64,
}

impl Default for IsometryBudget {
    fn default() -> Self {
        Self { coeff_bound: 2, degree_bound: 1, max_candidates: 1_000_000 }
    }
}

/// Evidence that two Seifert matrices are S-equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A module isomorphism from the first form to the second that respects
    /// the pairings.
    Map { isometry: Isometry },
    /// A chain of moves from the first matrix to the second.
    Chain { chain: MoveChain },
}

/// The outcome of comparing two Blanchfield forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Isometric { witness: Witness },
    DistinctInvariant { invariant: String, left: String, right: String },
    Unknown { explored: u64 },
}

impl Verdict {
    pub fn is_isometric(&self) -> bool {
        matches!(self, Verdict::Isometric { .. })
    }

    /// Re-checks the verdict for the pair `(a, b)` from scratch.
    pub fn verify(&self, a: &SeifertMatrix, b: &SeifertMatrix) -> Result<(), BlanchfieldError> {
        match self {
            Verdict::Isometric { witness: Witness::Map { isometry } } => {
                if isometry.certificate.is_none() {
                    return Err(BlanchfieldError::BadCertificate);
                }
                isometry.verify(&BlanchfieldForm::new(a), &BlanchfieldForm::new(b), Strictness::ModLambda)
            }
            Verdict::Isometric { witness: Witness::Chain { chain } } => {
                if &chain.start != a || &chain.apply()? != b {
                    return Err(BlanchfieldError::DimensionMismatch { expected: b.size(), found: chain.apply()?.size() });
                }
                chain_isometry(chain).map(|_| ())
            }
            Verdict::DistinctInvariant { invariant, left, right } => {
                let diffs = InvariantReport::of(a).differences(&InvariantReport::of(b));
                let found = diffs.iter().any(|d| &d.name == invariant && &d.left == left && &d.right == right);
                if found {
                    Ok(())
                } else {
                    Err(BlanchfieldError::BadCertificate)
                }
            }
            Verdict::Unknown { .. } => Ok(()),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Isometric { witness: Witness::Map { .. } } => f.write_str("isometric (generator map witness)"),
            Verdict::Isometric { witness: Witness::Chain { chain } } => {
                write!(f, "isometric (chain witness, {} moves)", chain.len())
            }
            Verdict::DistinctInvariant { invariant, left, right } => {
                write!(f, "distinct: {invariant} differs ({left} vs {right})")
            }
            Verdict::Unknown { explored } => write!(f, "unknown (search bound reached after {explored} candidates)"),
        }
    }
}

/// Candidate matrix entries `c·t^d` in enumeration order: zero, then by
/// `|c|`, positive before negative, then by `|d|`, positive before negative.
fn entry_alphabet(coeff_bound: u32, degree_bound: u32) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero()];
    for mag in 1..=coeff_bound as i64 {
        for c in [mag, -mag] {
            out.push(LaurentPoly::monomial(c, 0));
            for dm in 1..=degree_bound as i64 {
                for d in [dm, -dm] {
                    out.push(LaurentPoly::monomial(c, d));
                }
            }
        }
    }
    out
}

const CERTIFICATE_SUBSET_LIMIT: usize = 5_000;

/// Bounded search for an isometry from the form of `a` to the form of `b`.
///
/// Invariants are compared first; a difference is reported as
/// `DistinctInvariant`. Otherwise generator maps with monomial entries are
/// enumerated in growing radius (coefficient radius `r`, degree radius
/// `r − 1`, both capped by the budget), column by column in lexicographic
/// order, pruning as soon as an assigned pair of columns fails to respect the
/// pairing. A full candidate must also carry relations into relations and
/// have a unit maximal minor in `[G | presentation_b]`. The first such map is
/// returned; exhausting the budget gives `Unknown`.
pub fn isometry_search(a: &SeifertMatrix, b: &SeifertMatrix, budget: &IsometryBudget) -> Verdict {
    let diffs = InvariantReport::of(a).differences(&InvariantReport::of(b));
    if let Some(d) = diffs.into_iter().next() {
        return Verdict::DistinctInvariant { invariant: d.name, left: d.left, right: d.right };
    }
    if a == b {
        return Verdict::Isometric { witness: Witness::Map { isometry: Isometry::identity(a.size()) } };
    }
    let fa = BlanchfieldForm::new(a);
    let fb = BlanchfieldForm::new(b);
    let mut search = MapSearch::new(&fa, &fb, budget.max_candidates);
    let radii = budget.coeff_bound.max(budget.degree_bound + 1);
    for r in 1..=radii {
        let alphabet = entry_alphabet(r.min(budget.coeff_bound), (r - 1).min(budget.degree_bound));
        let previous = if r == 1 {
            0
        } else {
            entry_alphabet((r - 1).min(budget.coeff_bound), (r - 2).min(budget.degree_bound)).len()
        };
        match search.run(&alphabet, previous) {
            Ok(Some(isometry)) => return Verdict::Isometric { witness: Witness::Map { isometry } },
            Ok(None) => {}
            Err(Exhausted) => break,
        }
    }
    Verdict::Unknown { explored: search.explored }
}

struct Exhausted;

struct MapSearch<'a> {
    source: &'a BlanchfieldForm,
    target: &'a BlanchfieldForm,
    limit: u64,
    explored: u64,
    /// Source pairing values as classes, indexed `[i][j]`.
    expected: Vec<Vec<TorsionClass>>,
}

impl<'a> MapSearch<'a> {
    fn new(source: &'a BlanchfieldForm, target: &'a BlanchfieldForm, limit: u64) -> Self {
        let k = source.size();
        let expected = (0..k)
            .map(|i| (0..k).map(|j| TorsionClass::new(source.pairing[(i, j)].clone())).collect())
            .collect();
        Self { source, target, limit, explored: 0, expected }
    }

    /// Enumerates maps over `alphabet`, skipping those whose entries all lie
    /// in the first `previous` symbols (already tried at a smaller radius).
    fn run(&mut self, alphabet: &[LaurentPoly], previous: usize) -> Result<Option<Isometry>, Exhausted> {
        let mut columns: Vec<Vec<usize>> = Vec::new();
        let mut images: Vec<Vec<LaurentPoly>> = Vec::new();
        self.extend(alphabet, previous, &mut columns, &mut images)
    }

    fn extend(
        &mut self,
        alphabet: &[LaurentPoly],
        previous: usize,
        columns: &mut Vec<Vec<usize>>,
        images: &mut Vec<Vec<LaurentPoly>>,
    ) -> Result<Option<Isometry>, Exhausted> {
        let ka = self.source.size();
        let kb = self.target.size();
        if columns.len() == ka {
            if previous > 0 && columns.iter().flatten().all(|&s| s < previous) {
                return Ok(None);
            }
            let g = Matrix::from_fn(kb, ka, |i, j| alphabet[columns[j][i]].clone());
            return Ok(self.finish(g));
        }
        let j = columns.len();
        let mut symbols = vec![0usize; kb];
        loop {
            self.explored += 1;
            if self.explored > self.limit {
                return Err(Exhausted);
            }
            let column: Vec<LaurentPoly> = symbols.iter().map(|&s| alphabet[s].clone()).collect();
            let image = self.target.numerators.mul_vec(&column);
            if self.column_fits(j, &column, &image, images, columns, alphabet) {
                columns.push(symbols.clone());
                images.push(image);
                if let Some(found) = self.extend(alphabet, previous, columns, images)? {
                    return Ok(Some(found));
                }
                columns.pop();
                images.pop();
            }
            if !odometer(&mut symbols, alphabet.len()) {
                return Ok(None);
            }
        }
    }

    /// Pairs `(i, j)` and `(j, i)` for every assigned column `i ≤ j`.
    fn column_fits(
        &self,
        j: usize,
        column: &[LaurentPoly],
        image: &[LaurentPoly],
        images: &[Vec<LaurentPoly>],
        columns: &[Vec<usize>],
        alphabet: &[LaurentPoly],
    ) -> bool {
        let value = |num: LaurentPoly| TorsionClass::new(RatFun::new(num, self.target.order.clone()).expect("nonzero order"));
        if !value(conj_dot(column, image)).class_eq(&self.expected[j][j]) {
            return false;
        }
        for (i, prev_symbols) in columns.iter().enumerate() {
            let prev: Vec<LaurentPoly> = prev_symbols.iter().map(|&s| alphabet[s].clone()).collect();
            if !value(conj_dot(&prev, image)).class_eq(&self.expected[i][j]) {
                return false;
            }
            if !value(conj_dot(column, &images[i])).class_eq(&self.expected[j][i]) {
                return false;
            }
        }
        true
    }

    fn finish(&self, g: Matrix<LaurentPoly>) -> Option<Isometry> {
        let mut iso = Isometry::new(g);
        // Pairing pairs were checked during the descent; this adds the
        // relation check.
        if iso.verify(self.source, self.target, Strictness::ModLambda).is_err() {
            return None;
        }
        iso.certificate = Some(find_unit_minor(&iso.forward, &self.target.presentation, CERTIFICATE_SUBSET_LIMIT)?);
        Some(iso)
    }
}

/// Advances a big-endian odometer; `false` after the last
/// combination.
fn odometer(symbols: &mut [usize], base: usize) -> bool {
    for s in symbols.iter_mut().rev() {
        *s += 1;
        if *s < base {
            return true;
        }
        *s = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lowest: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(lowest, c)
    }

    fn unit_vec(k: usize, i: usize) -> Vec<LaurentPoly> {
        (0..k).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn empty_form() {
        let f = BlanchfieldForm::new(&SeifertMatrix::unknot());
        assert_eq!(f.size(), 0);
        assert!(f.hermitian_check());
        assert!(f.defining_identity_holds());
        assert!(!f.has_nonzero_pairing());
    }

    #[test]
    fn trefoil_pairing_matrix() {
        // (t − 1)/(t^2 − t + 1) · [[1 − t, −t], [1, 1 − t]]
        let f = BlanchfieldForm::new(&SeifertMatrix::trefoil());
        let delta = lp(0, &[1, -1, 1]);
        let adj = [[lp(0, &[1, -1]), lp(1, &[-1])], [lp(0, &[1]), lp(0, &[1, -1])]];
        for i in 0..2 {
            for j in 0..2 {
                let expected = RatFun::new(&t_minus_one() * &adj[i][j], delta.clone()).unwrap();
                assert_eq!(f.pairing()[(i, j)], expected);
            }
        }
        assert!(f.has_nonzero_pairing());
    }

    #[test]
    fn trefoil_self_pairing() {
        // (t − 1)(1 − t)/(t^2 − t + 1) = −(t − 1)^2/(t^2 − t + 1)
        let f = BlanchfieldForm::new(&SeifertMatrix::trefoil());
        let e1 = unit_vec(2, 0);
        let value = f.evaluate_exact(&e1, &e1).unwrap();
        assert_eq!(value, RatFun::new(lp(0, &[-1, 2, -1]), lp(0, &[1, -1, 1])).unwrap());
        assert_eq!(f.evaluate(&e1, &e1).unwrap().to_string(), "−(1 − 2t + t^2)/(1 − t + t^2) mod Λ");
    }

    #[test]
    fn evaluation_edge_cases() {
        let f = BlanchfieldForm::new(&SeifertMatrix::trefoil());
        let zero = vec![LaurentPoly::zero(); 2];
        assert!(f.evaluate(&zero, &unit_vec(2, 1)).unwrap().is_zero_class());
        assert_eq!(
            f.evaluate(&unit_vec(3, 0), &unit_vec(2, 0)).unwrap_err(),
            BlanchfieldError::DimensionMismatch { expected: 2, found: 3 }
        );
        // A relation column pairs to zero.
        let rel = f.presentation().column(1);
        assert!(f.evaluate(&rel, &unit_vec(2, 0)).unwrap().is_zero_class());
    }

    #[test]
    fn congruence_isometries() {
        let a = SeifertMatrix::trefoil();
        let id = congruence_isometry(&a, &IntMatrix::identity(2)).unwrap();
        assert_eq!(id.forward, Matrix::identity(2));
        let p = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let iso = congruence_isometry(&a, &p).unwrap();
        assert_eq!(iso.forward, IntMatrix::from_i64_rows(&[&[1, -1], &[0, 1]]).to_laurent());
    }

    #[test]
    fn enlargement_isometries() {
        let u = SeifertMatrix::unknot();
        for kind in EnlargeKind::ALL {
            let iso = enlargement_isometry(&u, kind, &[]).unwrap();
            assert_eq!((iso.target_size(), iso.source_size()), (0, 2));
        }
        let a = SeifertMatrix::trefoil();
        for kind in EnlargeKind::ALL {
            enlargement_isometry(&a, kind, &ints(&[1, 0])).unwrap();
            enlargement_isometry(&a, kind, &ints(&[-2, 2])).unwrap();
        }
    }

    #[test]
    fn wrong_enlargement_twist_is_caught() {
        // Using t instead of t⁻¹ for kind 1 must fail verification.
        let a = SeifertMatrix::trefoil();
        let v = ints(&[1, 1]);
        let big = a.enlarge(EnlargeKind::One, &v).unwrap();
        let wrong = Isometry::new(enlargement_map(EnlargeKind::Two, &v));
        let res = wrong.verify(&BlanchfieldForm::new(&big), &BlanchfieldForm::new(&a), Strictness::ModLambda);
        assert!(res.is_err());
    }

    #[test]
    fn inverse_pair_chain() {
        let a = SeifertMatrix::trefoil();
        let chain = MoveChain {
            start: a.clone(),
            moves: vec![
                Move::Enlarge { kind: EnlargeKind::One, v: ints(&[1, 0]) },
                Move::Reduce(ReductionSite::trailing(EnlargeKind::One, 4)),
            ],
        };
        let iso = chain_isometry(&chain).unwrap();
        assert_eq!(iso.forward, Matrix::identity(2));
        assert_eq!(chain_isometry(&MoveChain::new(a)).unwrap().forward, Matrix::identity(2));
    }

    #[test]
    fn search_on_equal_and_distinct() {
        let budget = IsometryBudget::default();
        let a = SeifertMatrix::trefoil();
        let v = isometry_search(&a, &a, &budget);
        assert_eq!(v, Verdict::Isometric { witness: Witness::Map { isometry: Isometry::identity(2) } });
        v.verify(&a, &a).unwrap();

        let v = isometry_search(&a, &SeifertMatrix::figure_eight(), &budget);
        match &v {
            Verdict::DistinctInvariant { invariant, left, right } => {
                assert_eq!(invariant, "alexander");
                assert_eq!(left, "1 − t + t^2");
                assert_eq!(right, "1 − 3t + t^2");
            }
            other => panic!("unexpected {other:?}"),
        }
        v.verify(&a, &SeifertMatrix::figure_eight()).unwrap();
    }

    #[test]
    fn search_finds_congruence() {
        let a = SeifertMatrix::trefoil();
        let b = a.congruate(&IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]])).unwrap();
        let v = isometry_search(&a, &b, &IsometryBudget::default());
        assert!(v.is_isometric(), "{v}");
        v.verify(&a, &b).unwrap();
    }

    #[test]
    fn odometer_order() {
        let mut s = vec![0, 0];
        let mut seen = vec![s.clone()];
        while odometer(&mut s, 3) {
            seen.push(s.clone());
        }
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
    }

    #[test]
    fn alphabet_order() {
        let a = entry_alphabet(2, 1);
        let rendered: Vec<String> = a.iter().map(ToString::to_string).collect();
        assert_eq!(&rendered[..7], ["0", "1", "t", "t^-1", "−1", "−t", "−t^-1"]);
        assert_eq!(a.len(), 13);
        assert_eq!(entry_alphabet(1, 0).len(), 3);
    }
}
