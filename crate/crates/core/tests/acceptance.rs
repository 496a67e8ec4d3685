//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p seifert-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seifert_core::blanchfield::{chain_isometry, BlanchfieldForm};
use seifert_core::invariants::{alexander_poly, det_at_minus_one, signature, InvariantReport};
use seifert_core::seifert::{random_enlarge_vector, random_seifert};
use seifert_core::sequiv::{compare, random_chain, CompareBudget, MoveWeights};
use seifert_core::{
    EnlargeKind, IntMatrix, LaurentPoly, Matrix, MoveChain, RatFun, ReductionSite, SeifertMatrix, SeifertError,
    TorsionClass, Verdict,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: usize, detail: String) -> Outcome {
    Outcome { passed: failures == 0, detail }
}

fn lp(lowest: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(lowest, c)
}

/// Unit-normalized Alexander polynomial, |Δ(−1)| and signature survive
/// random chains of up to six moves.
fn move_invariance() -> Outcome {
    let mut failures = 0;
    let w = MoveWeights::default();
    for trial in 0..500u64 {
        let a = random_seifert(1 + (trial % 3) as usize, 3, trial);
        let chain = random_chain(&a, (trial % 7) as usize, &w, 10_000 + trial);
        let b = chain.apply().expect("generated chains replay");
        if alexander_poly(&a) != alexander_poly(&b)
            || det_at_minus_one(&a) != det_at_minus_one(&b)
            || signature(&a) != signature(&b)
        {
            failures += 1;
        }
    }
    outcome(failures, format!("500 matrices of genus 1..=3, chains of 0..=6 moves, {failures} failures"))
}

/// The composite isometry of every random 6-move chain verifies on all
/// basis pairs.
fn chain_isometries(forms: &mut usize) -> Outcome {
    let mut failures = 0;
    let mut largest = 0;
    for trial in 0..200u64 {
        let a = random_seifert((trial % 3) as usize, 2, 20_000 + trial);
        let chain = random_chain(&a, 6, &MoveWeights::default(), 30_000 + trial);
        let end = chain.apply().expect("replays");
        largest = largest.max(end.size());
        *forms += 2;
        if chain_isometry(&chain).is_err() {
            failures += 1;
        }
    }
    outcome(failures, format!("200 chains of 6 moves, sizes up to {largest}, {failures} failures"))
}

/// Hermitian on basis pairs, and non-degenerate on some pair whenever the
/// Alexander polynomial is not a unit.
fn hermitian(forms: &mut Vec<BlanchfieldForm>) -> Outcome {
    let mut failures = 0;
    let mut matrices: Vec<SeifertMatrix> = (0..500u64).map(|s| random_seifert(1 + (s % 3) as usize, 3, 40_000 + s)).collect();
    matrices.push(SeifertMatrix::trefoil());
    matrices.push(SeifertMatrix::figure_eight());
    for a in &matrices {
        let form = BlanchfieldForm::new(a);
        let unit_alexander = alexander_poly(a).as_unit().is_some();
        if !form.hermitian_check() || (!unit_alexander && !form.has_nonzero_pairing()) {
            failures += 1;
        }
        forms.push(form);
    }
    outcome(failures, format!("{} forms (500 random, trefoil, figure-eight), {failures} failures", matrices.len()))
}

/// `pairing · presentation = (t − 1)·I` exactly, for every form built in
/// this run.
fn defining_identity(forms: &[BlanchfieldForm], chain_forms: usize) -> Outcome {
    let failures = forms.iter().filter(|f| !f.defining_identity_holds()).count();
    outcome(
        failures,
        format!(
            "{} forms rechecked, plus {chain_forms} checked while building chain isometries, {failures} failures",
            forms.len()
        ),
    )
}

/// Hand-derived values.
fn golden_values() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_owned());
        }
    };
    // Trefoil A = [[−1, 1], [0, −1]]:
    // At − Aᵗ = [[1 − t, t], [−1, 1 − t]], det = (1 − t)² + t = 1 − t + t².
    // Δ(−1) = 1 + 1 + 1 = 3.
    // A + Aᵗ = [[−2, 1], [1, −2]] has leading minors −2 and 3, so both
    // eigenvalues are negative and the signature is −2.
    let t = SeifertMatrix::trefoil();
    check(alexander_poly(&t) == lp(0, &[1, -1, 1]), "trefoil alexander");
    check(alexander_poly(&t).to_string() == "1 − t + t^2", "trefoil rendering");
    check(det_at_minus_one(&t) == BigInt::from(3), "trefoil det");
    check(signature(&t) == -2, "trefoil signature");
    // Figure-eight A = [[1, 1], [0, −1]]:
    // At − Aᵗ = [[t − 1, t], [−1, 1 − t]], det = −(t − 1)² + t = −1 + 3t − t²,
    // normalized by −1 to 1 − 3t + t². Δ(−1) = 1 + 3 + 1 = 5.
    // A + Aᵗ = [[2, 1], [1, −2]] has leading minors 2 and −5: signature 0.
    let f = SeifertMatrix::figure_eight();
    check(alexander_poly(&f) == lp(0, &[1, -3, 1]), "figure-eight alexander");
    check(det_at_minus_one(&f) == BigInt::from(5), "figure-eight det");
    check(signature(&f) == 0, "figure-eight signature");
    // Trefoil pairing: (At − Aᵗ)⁻¹ = adj / Δ with adj = [[1 − t, −t], [1, 1 − t]],
    // so λ(e₁, e₁) = (t − 1)(1 − t)/(t² − t + 1) = −(t − 1)²/(t² − t + 1).
    let form = BlanchfieldForm::new(&t);
    let e1 = vec![LaurentPoly::one(), LaurentPoly::zero()];
    let value = form.evaluate(&e1, &e1).expect("dimensions match");
    let expected = RatFun::new(-(lp(0, &[-1, 1]) * lp(0, &[-1, 1])), lp(0, &[1, -1, 1])).unwrap();
    check(value.rep() == &expected, "trefoil λ(e₁, e₁) representative");
    check(value.to_string() == "−(1 − 2t + t^2)/(1 − t + t^2) mod Λ", "trefoil λ(e₁, e₁) rendering");
    let n = failures.len();
    outcome(n, if n == 0 { "10 values reproduced exactly".to_owned() } else { format!("mismatches: {}", failures.join(", ")) })
}

/// Library against the brute-force oracles in `common`.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut class_failures = 0;
    let mut equal_classes = 0;
    for i in 0..1000 {
        let x = random_ratfun(&mut rng);
        let y = match i % 4 {
            // Same class: add a Laurent polynomial.
            0 => &x + &RatFun::from_poly(common::random_laurent(&mut rng, 4)),
            // Near miss: add half of one.
            1 => &x + &RatFun::new(common::random_nonzero_laurent(&mut rng, 3), LaurentPoly::constant(2)).unwrap(),
            // Shares the denominator.
            2 => RatFun::new(common::random_laurent(&mut rng, 4), x.denominator().clone()).unwrap(),
            _ => random_ratfun(&mut rng),
        };
        let lib = TorsionClass::new(x.clone()).class_eq(&TorsionClass::new(y.clone()));
        if lib {
            equal_classes += 1;
        }
        if lib != common::class_eq_oracle(&x, &y) {
            class_failures += 1;
        }
    }
    let mut inverse_failures = 0;
    let mut tested = 0;
    while tested < 200 {
        let m = Matrix::from_fn(3, 3, |_, _| common::random_laurent(&mut rng, 2));
        let Some(oracle) = common::gauss_inverse(&m) else {
            if m.inverse().is_ok() {
                inverse_failures += 1;
            }
            continue;
        };
        tested += 1;
        match m.inverse() {
            Ok(inv) => {
                if (0..3).any(|i| (0..3).any(|j| !oracle[i][j].equals(&inv[(i, j)]))) {
                    inverse_failures += 1;
                }
            }
            Err(_) => inverse_failures += 1,
        }
    }
    let failures = class_failures + inverse_failures;
    outcome(
        failures,
        format!(
            "class_eq on 1000 pairs ({equal_classes} equal classes): {class_failures} disagreements; \
             3×3 inverses on 200 matrices: {inverse_failures} disagreements"
        ),
    )
}

fn random_ratfun(rng: &mut impl Rng) -> RatFun {
    RatFun::new(common::random_laurent(rng, 4), common::random_nonzero_laurent(rng, 3)).unwrap()
}

/// reduce ∘ enlarge = id, Δ(1) = 1, odd sizes rejected.
fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    let mut seen = 0;
    let mut delta_one = |a: &SeifertMatrix, failures: &mut usize| {
        seen += 1;
        if !InvariantReport::of(a).alexander_at_one.0.is_one() {
            *failures += 1;
        }
    };
    for trial in 0..500u64 {
        let a = random_seifert((trial % 4) as usize, 3, 50_000 + trial);
        delta_one(&a, &mut failures);
        for kind in EnlargeKind::ALL {
            let v = random_enlarge_vector(a.size(), &mut rng);
            let big = a.enlarge(kind, &v).expect("dimensions match");
            delta_one(&big, &mut failures);
            let site = ReductionSite::trailing(kind, big.size());
            if big.reduce(&site).as_ref() != Ok(&a) {
                failures += 1;
            }
        }
        let chain = random_chain(&a, 4, &MoveWeights::default(), 60_000 + trial);
        for x in chain.trace().expect("replays") {
            delta_one(&x, &mut failures);
        }
    }
    let mut odd = 0;
    for size in [1usize, 3, 5, 7] {
        for _ in 0..25 {
            let m = IntMatrix::from_fn(size, size, |_, _| BigInt::from(rng.random_range(-3..=3)));
            odd += 1;
            if !matches!(SeifertMatrix::validate(m), Err(SeifertError::NotSeifertType(_))) {
                failures += 1;
            }
        }
    }
    outcome(failures, format!("1000 round trips, Δ(1) on {seen} matrices, {odd} odd-size rejections, {failures} failures"))
}

/// compare separates by a named invariant or produces a verified witness.
fn comparison_honesty() -> Outcome {
    let budget = CompareBudget::default();
    let mut failures = 0;
    let distinct = compare(&SeifertMatrix::trefoil(), &SeifertMatrix::figure_eight(), &budget);
    match &distinct.pairing_verdict {
        Verdict::DistinctInvariant { invariant, left, right } if invariant == "alexander" && left != right => {}
        _ => failures += 1,
    }
    let mut witnesses = 0;
    let mut dishonest = 0;
    for trial in 0..100u64 {
        let a = match trial % 3 {
            0 => SeifertMatrix::trefoil(),
            1 => SeifertMatrix::figure_eight(),
            _ => random_seifert(1, 2, 70_000 + trial),
        };
        let chain = random_chain(&a, 3, &MoveWeights::default(), 80_000 + trial);
        let b = chain.apply().expect("replays");
        let report = compare(&a, &b, &budget);
        match &report.pairing_verdict {
            Verdict::Isometric { .. } => {
                if report.pairing_verdict.verify(&a, &b).is_ok() && witness_ok(&report.chain_witness, &b) {
                    witnesses += 1;
                }
            }
            Verdict::DistinctInvariant { .. } => dishonest += 1,
            Verdict::Unknown { .. } => {}
        }
    }
    if witnesses < 90 {
        failures += 1;
    }
    failures += dishonest;
    outcome(
        failures,
        format!("trefoil vs figure-eight separated by alexander; verified witnesses {witnesses}/100; unfounded inequivalence claims {dishonest}"),
    )
}

fn witness_ok(chain: &Option<MoveChain>, b: &SeifertMatrix) -> bool {
    match chain {
        Some(c) => c.apply().as_ref() == Ok(b) && chain_isometry(c).is_ok(),
        None => true,
    }
}

fn main() -> ExitCode {
    let mut forms = Vec::new();
    let mut chain_forms = 0;
    let mut all = true;
    let mut run = |n: usize, name: &str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let elapsed: Duration = start.elapsed();
        all &= o.passed;
        println!(
            "criterion {n} [{}] {name}: {} ({:.1} s)",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    };
    run(1, "move invariance", &mut move_invariance);
    run(2, "chain isometries", &mut || chain_isometries(&mut chain_forms));
    run(3, "hermitian forms", &mut || hermitian(&mut forms));
    run(4, "defining identity", &mut || defining_identity(&forms, chain_forms));
    run(5, "golden values", &mut golden_values);
    run(6, "oracle equivalence", &mut oracle_equivalence);
    run(7, "round trips", &mut round_trips);
    run(8, "comparison honesty", &mut comparison_honesty);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
