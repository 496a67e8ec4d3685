//! Chain search between Seifert matrices.
//!
//! The search has three stages:
//!
//! 1. Singular matrices are reduced constructively. For a primitive `g` with
//!    `Xg = 0`, the row `r = gᵗX` is primitive because `X − Xᵗ` is
//!    unimodular, so some `f` has `r·f = 1`, and `f` can be corrected by a
//!    multiple of `g` to make `fᵗXf = 0`. Completing `f, g` by a basis of the
//!    joint kernel of `r` and `(Xf)ᵗ` gives a congruence to a kind-1
//!    enlargement; kind 2 is the same on `Xᵗ`.
//! 2. The two nonsingular ends are pushed down in entry size by greedy
//!    transvections.
//! 3. A bidirectional search over transvections and sign flips connects
//!    them, breadth-first within each norm level (smallest norm expanded
//!    first), with nodes identified up to simultaneous permutation.
//!
//! The assembled chain is normalized (congruences moved ahead of the
//! reductions and behind the enlargements, then merged) and replayed before
//! it is returned.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::{lattice_basis, right_kernel_vector, unit_preimage};
use crate::blanchfield::chain_isometry;
use crate::matrix::IntMatrix;
use crate::seifert::{permutation_matrix, EnlargeKind, Move, MoveChain, ReductionSite, SeifertMatrix};

/// Limits for [`chain_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBudget {
    /// Longest chain returned, counting each enlargement, reduction and
    /// congruence as one move.
    pub max_depth: usize,
    /// Distinct matrices the congruence search may visit.
    pub max_nodes: usize,
}

impl Default for ChainBudget {
    fn default() -> Self {
        Self { max_depth: 5, max_nodes: 100_000 }
    }
}

/// Largest size for which nodes are canonicalized over all permutations.
pub const CANONICAL_MAX_SIZE: usize = 8;

/// The simultaneous permutation `Π X Πᵗ` with lexicographically smallest
/// row-major entries, and the permutation (`perm[i]` is the original index
/// at position `i`). Above [`CANONICAL_MAX_SIZE`] the matrix is returned
/// unchanged.
///
/// Positions are filled left to right; once `d` positions are fixed, the
/// first `d` entries of row 0 are known, and branches whose known prefix
/// already exceeds the best complete candidate are cut.
pub fn canonical_form(x: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let k = x.rows();
    let identity: Vec<usize> = (0..k).collect();
    if !(2..=CANONICAL_MAX_SIZE).contains(&k) {
        return (x.clone(), identity);
    }
    let mut search = Canonical { x, best: None, perm: Vec::with_capacity(k), used: vec![false; k] };
    search.extend();
    let best = search.best.expect("at least one permutation");
    (x.permute_symmetric(&best), best)
}

struct Canonical<'a> {
    x: &'a IntMatrix,
    best: Option<Vec<usize>>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Canonical<'_> {
    fn extend(&mut self) {
        let k = self.x.rows();
        if self.perm.len() == k {
            let better = match &self.best {
                None => true,
                Some(b) => precedes(self.x, &self.perm, b),
            };
            if better {
                self.best = Some(self.perm.clone());
            }
            return;
        }
        for c in 0..k {
            if self.used[c] {
                continue;
            }
            self.perm.push(c);
            if !self.prefix_exceeds_best() {
                self.used[c] = true;
                self.extend();
                self.used[c] = false;
            }
            self.perm.pop();
        }
    }

    fn prefix_exceeds_best(&self) -> bool {
        let Some(best) = &self.best else { return false };
        let (p0, b0) = (self.perm[0], best[0]);
        for (j, &pj) in self.perm.iter().enumerate() {
            match self.x[(p0, pj)].cmp(&self.x[(b0, best[j])]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => return true,
                std::cmp::Ordering::Equal => {}
            }
        }
        false
    }
}

fn precedes(x: &IntMatrix, p: &[usize], q: &[usize]) -> bool {
    let k = p.len();
    for i in 0..k {
        for j in 0..k {
            match x[(p[i], p[j])].cmp(&x[(q[i], q[j])]) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    false
}

/// A congruence `P` with `P X Pᵗ` in the trailing enlargement shape of
/// `kind`, for singular `X`.
pub fn reduction_congruence(x: &SeifertMatrix, kind: EnlargeKind) -> Option<IntMatrix> {
    let m = match kind {
        EnlargeKind::One => x.matrix().clone(),
        EnlargeKind::Two => x.matrix().transpose(),
    };
    let n = m.rows();
    let g = right_kernel_vector(&m)?;
    let mt = m.transpose();
    let r = mt.mul_vec(&g);
    let f0 = unit_preimage(&r)?;
    let c = dot(&f0, &m.mul_vec(&f0));
    let f: Vec<BigInt> = f0.iter().zip(&g).map(|(a, b)| a - &c * b).collect();
    let s = m.mul_vec(&f);
    // x ↦ x − (r·x) f − (s·x) g projects onto the joint kernel.
    let projections = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j)) - &r[i] * &f[j] - &s[i] * &g[j]).collect())
        .collect();
    let mut rows = lattice_basis(projections);
    if rows.len() + 2 != n {
        return None;
    }
    rows.push(f);
    rows.push(g);
    let p = IntMatrix::from_rows(rows).ok()?;
    let moved = x.congruate(&p).ok()?;
    moved.reduction_vector(&ReductionSite::trailing(kind, n))?;
    Some(p)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// One reduction step: congruence, then the trailing reduction of `kind`.
struct Step {
    p: IntMatrix,
    kind: EnlargeKind,
    v: Vec<BigInt>,
}

/// Reduces with `kind` while the matrix is singular and larger than
/// `floor`, returning the steps and the final matrix.
fn reduce_down(a: &SeifertMatrix, kind: EnlargeKind, floor: usize) -> (Vec<Step>, SeifertMatrix) {
    let mut steps = Vec::new();
    let mut x = a.clone();
    while x.size() > floor {
        let Some(p) = reduction_congruence(&x, kind) else { break };
        let moved = x.congruate(&p).expect("unimodular");
        let site = ReductionSite::trailing(kind, moved.size());
        let v = moved.reduction_vector(&site).expect("checked shape");
        x = moved.reduce(&site).expect("checked shape");
        steps.push(Step { p, kind, v });
    }
    (steps, x)
}

fn frobenius(x: &IntMatrix) -> BigInt {
    x.entries().iter().map(|e| e * e).sum()
}

/// Generators of the breadth-first stage on `k×k` matrices: transvections
/// `row_i += s·row_j` and sign flips of one coordinate.
#[derive(Clone, Copy)]
enum Elementary {
    /// `row_i += c·row_j`.
    Transvection { i: usize, j: usize, c: i64 },
    Flip(usize),
}

fn elementaries(k: usize) -> Vec<Elementary> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                out.push(Elementary::Transvection { i, j, c: 1 });
                out.push(Elementary::Transvection { i, j, c: -1 });
            }
        }
    }
    out.extend((0..k).map(Elementary::Flip));
    out
}

/// Applies `E` on the left of `x` (row operation only).
fn left_apply(e: Elementary, x: &IntMatrix) -> IntMatrix {
    let mut y = x.clone();
    match e {
        Elementary::Transvection { i, j, c } => {
            for col in 0..x.cols() {
                y[(i, col)] += &x[(j, col)] * c;
            }
        }
        Elementary::Flip(i) => {
            for c in 0..x.cols() {
                y[(i, c)] = -&x[(i, c)];
            }
        }
    }
    y
}

/// `E X Eᵗ`.
fn congruate_elementary(e: Elementary, x: &IntMatrix) -> IntMatrix {
    left_apply(e, &left_apply(e, x).transpose()).transpose()
}

/// Greedy transvections that shrink the Frobenius norm; returns `(Y, P)`
/// with `Y = P X Pᵗ`. Multipliers double while the norm keeps falling, so
/// large entries come down in logarithmically many steps.
fn descend(x: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let k = x.rows();
    let mut cur = x.clone();
    let mut p = IntMatrix::identity(k);
    let mut norm = frobenius(&cur);
    loop {
        let mut best: Option<(BigInt, Elementary, IntMatrix)> = None;
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let mut c = sign;
                    let mut local: Option<(BigInt, Elementary, IntMatrix)> = None;
                    loop {
                        let e = Elementary::Transvection { i, j, c };
                        let y = congruate_elementary(e, &cur);
                        let n = frobenius(&y);
                        if local.as_ref().is_some_and(|l| n >= l.0) || c.unsigned_abs() > 1 << 40 {
                            break;
                        }
                        local = Some((n, e, y));
                        c *= 2;
                    }
                    if let Some(l) = local {
                        if best.as_ref().is_none_or(|b| l.0 < b.0) {
                            best = Some(l);
                        }
                    }
                }
            }
        }
        match best {
            Some((n, e, y)) if n < norm => {
                norm = n;
                cur = y;
                p = left_apply(e, &p);
            }
            _ => return (cur, p),
        }
    }
}

/// A unimodular `P` with `P X Pᵗ = Y`, found within `budget`.
pub fn find_congruence(x: &IntMatrix, y: &IntMatrix, budget: &ChainBudget) -> Option<IntMatrix> {
    let k = x.rows();
    if y.rows() != k {
        return None;
    }
    if x == y {
        return Some(IntMatrix::identity(k));
    }
    let (gx, px) = descend(x);
    let (gy, py) = descend(y);
    let (p1, p2) = meet(&gx, &gy, budget)?;
    // p1 gx p1ᵗ = p2 gy p2ᵗ, gx = px x pxᵗ, gy = py y pyᵗ.
    let back = (&p2 * &py).unimodular_inverse().ok()?;
    let total = &(&back * &p1) * &px;
    debug_assert_eq!(&(&(&total * x) * &total.transpose()), y);
    Some(total)
}

/// Bidirectional best-first search, smallest Frobenius norm first: `(P, Q)`
/// with `P X Pᵗ = Q Y Qᵗ`. The two sides expand one node at a time in
/// turn, so the outcome is deterministic.
fn meet(x: &IntMatrix, y: &IntMatrix, budget: &ChainBudget) -> Option<(IntMatrix, IntMatrix)> {
    let gens = elementaries(x.rows());
    let mut sides = [Side::new(x), Side::new(y)];
    let (start, t0) = sides[0].nodes[0].clone();
    if let Some(q) = sides[1].seen.get(&start) {
        return Some((t0, sides[1].nodes[*q].1.clone()));
    }
    let mut count = 2;
    let mut s = 0;
    while !sides[0].queue.is_empty() || !sides[1].queue.is_empty() {
        if sides[s].queue.is_empty() {
            s = 1 - s;
        }
        let Reverse((_, id)) = sides[s].queue.pop().expect("nonempty");
        let (node, transform) = sides[s].nodes[id].clone();
        for &e in &gens {
            let (canon, perm) = canonical_form(&congruate_elementary(e, &node));
            if sides[s].seen.contains_key(&canon) {
                continue;
            }
            let t = &permutation_matrix(&perm) * &left_apply(e, &transform);
            if let Some(&other) = sides[1 - s].seen.get(&canon) {
                let u = sides[1 - s].nodes[other].1.clone();
                return Some(if s == 0 { (t, u) } else { (u, t) });
            }
            count += 1;
            if count > budget.max_nodes {
                return None;
            }
            sides[s].push(canon, t);
        }
        s = 1 - s;
    }
    None
}

struct Side {
    seen: HashMap<IntMatrix, usize>,
    nodes: Vec<(IntMatrix, IntMatrix)>,
    queue: BinaryHeap<Reverse<(BigInt, usize)>>,
}

impl Side {
    fn new(x: &IntMatrix) -> Self {
        let (canon, perm) = canonical_form(x);
        let mut side = Self { seen: HashMap::new(), nodes: Vec::new(), queue: BinaryHeap::new() };
        side.push(canon, permutation_matrix(&perm));
        side
    }

    fn push(&mut self, canon: IntMatrix, transform: IntMatrix) {
        let id = self.nodes.len();
        self.queue.push(Reverse((frobenius(&canon), id)));
        self.seen.insert(canon.clone(), id);
        self.nodes.push((canon, transform));
    }
}

/// Searches for a chain of moves from `a` to `b`. Any chain returned has been
/// replayed to `b` and its composite isometry verified; `None` means the
/// budget ran out, not that the matrices are inequivalent.
pub fn chain_search(a: &SeifertMatrix, b: &SeifertMatrix, budget: &ChainBudget) -> Option<MoveChain> {
    if let Some(chain) = direct(a, b, budget) {
        return accept(chain, b, budget);
    }
    // Every meeting size whose reductions alone fit the depth budget, the
    // largest first.
    let smaller = a.size().min(b.size());
    let floors = (0..=smaller / 2)
        .rev()
        .map(|h| 2 * h)
        .filter(|&f| (a.size() - f) / 2 + (b.size() - f) / 2 <= budget.max_depth);
    for floor in floors {
        for kind in EnlargeKind::ALL {
            let found = through_reductions(a, b, kind, floor, budget).and_then(|c| accept(c, b, budget));
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

fn accept(chain: MoveChain, b: &SeifertMatrix, budget: &ChainBudget) -> Option<MoveChain> {
    let chain = normalize(chain);
    if &chain.apply().ok()? != b || chain.len() > budget.max_depth {
        return None;
    }
    chain_isometry(&chain).ok()?;
    Some(chain)
}

/// Zero- and one-move answers.
fn direct(a: &SeifertMatrix, b: &SeifertMatrix, budget: &ChainBudget) -> Option<MoveChain> {
    let mut chain = MoveChain::new(a.clone());
    if a == b {
        return Some(chain);
    }
    if b.size() == a.size() + 2 {
        for kind in EnlargeKind::ALL {
            let site = ReductionSite::trailing(kind, b.size());
            if let Some(v) = b.reduction_vector(&site) {
                if &b.reduce(&site).ok()? == a {
                    chain.moves.push(Move::Enlarge { kind, v });
                    return Some(chain);
                }
            }
        }
    }
    if a.size() == b.size() + 2 {
        for site in a.find_reductions() {
            if &a.reduce(&site).ok()? == b {
                chain.moves.push(Move::Reduce(site));
                return Some(chain);
            }
        }
    }
    if a.size() == b.size() {
        if let Some(p) = find_congruence(a.matrix(), b.matrix(), budget) {
            chain.moves.push(Move::Congruence { p });
            return Some(chain);
        }
    }
    None
}

fn through_reductions(
    a: &SeifertMatrix,
    b: &SeifertMatrix,
    kind: EnlargeKind,
    floor: usize,
    budget: &ChainBudget,
) -> Option<MoveChain> {
    let (a_steps, a_end) = reduce_down(a, kind, floor);
    let (b_steps, b_end) = reduce_down(b, kind, floor);
    if a_steps.is_empty() && b_steps.is_empty() {
        // Nothing new beyond the direct attempt.
        return None;
    }
    let mid = find_congruence(a_end.matrix(), b_end.matrix(), budget)?;
    let mut moves = Vec::new();
    let mut k = a.size();
    for step in a_steps {
        moves.push(Move::Congruence { p: step.p });
        moves.push(Move::Reduce(ReductionSite::trailing(step.kind, k)));
        k -= 2;
    }
    moves.push(Move::Congruence { p: mid });
    for step in b_steps.into_iter().rev() {
        moves.push(Move::Enlarge { kind: step.kind, v: step.v });
        moves.push(Move::Congruence { p: step.p.unimodular_inverse().ok()? });
    }
    Some(MoveChain { start: a.clone(), moves })
}

/// Moves congruences before the last reduction to the front of the chain
/// (a trailing reduction followed by `Q` equals `Q ⊕ I₂` followed by the
/// reduction) and those after it to the end (using
/// `[P, enlarge(v)] = [enlarge(P⁻¹v), P ⊕ I₂]`), merges adjacent congruences
/// and drops identities.
fn normalize(chain: MoveChain) -> MoveChain {
    let split = chain.moves.iter().rposition(|m| matches!(m, Move::Reduce(_))).map_or(0, |i| i + 1);
    let mut head = pull_to_front(chain.start.size(), &chain.moves[..split]);
    let mut pending: Option<IntMatrix> = None;
    for mv in &chain.moves[split..] {
        match mv {
            Move::Congruence { p } => {
                pending = Some(match pending {
                    Some(q) => p * &q,
                    None => p.clone(),
                });
            }
            Move::Enlarge { kind, v } => {
                let v = match &pending {
                    Some(q) => {
                        let inv = q.unimodular_inverse().expect("unimodular");
                        inv.mul_vec(v)
                    }
                    None => v.clone(),
                };
                head.push(Move::Enlarge { kind: *kind, v });
                if let Some(q) = pending.take() {
                    pending = Some(direct_sum_identity(&q, 2));
                }
            }
            Move::Reduce(_) => unreachable!("after the last reduction"),
        }
    }
    if let Some(p) = pending {
        if p != IntMatrix::identity(p.rows()) {
            head.push(Move::Congruence { p });
        }
    }
    let moves = merge_congruences(head);
    MoveChain { start: chain.start, moves }
}

/// Rewrites a run of congruences and trailing reductions as one congruence
/// followed by the reductions. Runs with other reductions are left alone.
fn pull_to_front(start: usize, moves: &[Move]) -> Vec<Move> {
    let mut sizes = Vec::with_capacity(moves.len());
    let mut k = start;
    for mv in moves {
        sizes.push(k);
        match mv {
            Move::Reduce(site) if *site == ReductionSite::trailing(site.kind, k) => k -= 2,
            Move::Congruence { .. } => {}
            _ => return moves.to_vec(),
        }
    }
    let mut pending: Option<IntMatrix> = None;
    let mut reductions = Vec::new();
    for mv in moves.iter().rev() {
        match mv {
            Move::Congruence { p } => {
                pending = Some(match pending {
                    Some(q) => &q * p,
                    None => p.clone(),
                });
            }
            Move::Reduce(_) => {
                reductions.push(mv.clone());
                pending = pending.map(|q| direct_sum_identity(&q, 2));
            }
            Move::Enlarge { .. } => unreachable!("checked above"),
        }
    }
    let mut out: Vec<Move> = pending.into_iter().map(|p| Move::Congruence { p }).collect();
    out.extend(reductions.into_iter().rev());
    out
}

fn merge_congruences(moves: Vec<Move>) -> Vec<Move> {
    let mut out: Vec<Move> = Vec::new();
    for mv in moves {
        if let Move::Congruence { p } = &mv {
            if let Some(Move::Congruence { p: q }) = out.last_mut() {
                *q = p * &*q;
                if *q == IntMatrix::identity(q.rows()) {
                    out.pop();
                }
                continue;
            }
            if *p == IntMatrix::identity(p.rows()) {
                continue;
            }
        }
        out.push(mv);
    }
    out
}

fn direct_sum_identity(p: &IntMatrix, extra: usize) -> IntMatrix {
    let k = p.rows();
    IntMatrix::from_fn(k + extra, k + extra, |i, j| {
        if i < k && j < k {
            p[(i, j)].clone()
        } else if i == j {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}
