//! Invariance and isometry checks over a corpus of generated matrices.

use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use seifert_core::blanchfield::chain_isometry;
use seifert_core::sequiv::{corpus_generate, standard_seeds, CorpusParams};
use seifert_core::{BlanchfieldForm, EnlargeKind, InvariantReport, MoveChain, ReductionSite, SeifertMatrix};

use crate::commands::{sha256_hex, Manifest, Report};
use crate::document::{exit, load_chain, read_text, CliError, MatrixDocument};

/// Entries per standard seed when no corpus directory is given.
pub const BUILTIN_PER_SEED: usize = 20;

#[derive(Serialize)]
pub(crate) struct PropertyResult {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
    #[serde(skip)]
    seconds: f64,
}

#[derive(Serialize)]
pub(crate) struct SelftestReport {
    corpus: String,
    entries: usize,
    properties: Vec<PropertyResult>,
    passed: bool,
}

impl Report for SelftestReport {
    fn human(&self) -> String {
        let mut s = format!("corpus: {} ({} entries)\n", self.corpus, self.entries);
        for p in &self.properties {
            let status = if p.failures.is_empty() { "ok" } else { "FAIL" };
            s += &format!("{status:4} {:<18} {:>5} checked {:>4} failed  {:.2} s\n", p.name, p.checked, p.failures.len(), p.seconds);
            for f in &p.failures {
                s += &format!("     {f}\n");
            }
        }
        s += if self.passed { "all properties hold\n" } else { "some properties failed\n" };
        s
    }

    fn code(&self) -> u8 {
        if self.passed {
            exit::OK
        } else {
            exit::DOMAIN
        }
    }
}

struct Entry {
    name: String,
    matrix: SeifertMatrix,
    origin: MoveChain,
}

fn builtin() -> Vec<Entry> {
    corpus_generate(&standard_seeds(), BUILTIN_PER_SEED, &CorpusParams::default())
        .into_iter()
        .map(|e| Entry { name: e.name, matrix: e.matrix, origin: e.origin })
        .collect()
}

fn from_dir(dir: &Path) -> Result<Vec<Entry>, CliError> {
    let manifest_path = dir.join("manifest.json");
    let text = read_text(&manifest_path)?;
    let manifest: Manifest =
        serde_json::from_str(&text).map_err(|e| CliError::json(&manifest_path.display().to_string(), &e))?;
    let mut out = Vec::new();
    for e in manifest.entries {
        for (file, hash) in [(&e.matrix_file, &e.matrix_sha256), (&e.chain_file, &e.chain_sha256)] {
            let found = sha256_hex(read_text(&dir.join(file))?.as_bytes());
            if &found != hash {
                return Err(CliError::Domain(format!("{file}: hash {found} does not match the manifest")));
            }
        }
        let doc = MatrixDocument::load(&dir.join(&e.matrix_file))?;
        out.push(Entry { name: e.name, matrix: doc.seifert()?, origin: load_chain(&dir.join(&e.chain_file))? });
    }
    Ok(out)
}

fn check(name: &'static str, entries: &[Entry], f: impl Fn(&Entry) -> Result<(), String>) -> PropertyResult {
    let t = Instant::now();
    let failures = entries.iter().filter_map(|e| f(e).err().map(|why| format!("{}: {why}", e.name))).collect();
    PropertyResult { name, checked: entries.len(), failures, seconds: t.elapsed().as_secs_f64() }
}

fn expect(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_owned())
    }
}

pub(crate) fn selftest(corpus: Option<&Path>) -> Result<SelftestReport, CliError> {
    let (label, entries) = match corpus {
        Some(dir) => (dir.display().to_string(), from_dir(dir)?),
        None => ("built-in".to_owned(), builtin()),
    };
    let properties = vec![
        check("replay", &entries, |e| expect(e.origin.apply().as_ref() == Ok(&e.matrix), "origin does not replay")),
        check("invariance", &entries, |e| {
            let (a, b) = (InvariantReport::of(&e.origin.start), InvariantReport::of(&e.matrix));
            let diffs = a.differences(&b);
            expect(diffs.is_empty(), &diffs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
        }),
        check("delta_at_one", &entries, |e| {
            expect(InvariantReport::of(&e.matrix).alexander_at_one.0 == BigInt::from(1), "Δ(1) ≠ 1")
        }),
        check("hermitian", &entries, |e| {
            let form = BlanchfieldForm::new(&e.matrix);
            expect(form.hermitian_check(), "not hermitian")?;
            expect(form.defining_identity_holds(), "defining identity fails")
        }),
        check("chain_isometry", &entries, |e| chain_isometry(&e.origin).map(|_| ()).map_err(|err| err.to_string())),
        check("reduce_enlarge", &entries, |e| {
            let k = e.matrix.size();
            let v: Vec<BigInt> = (0..k).map(|i| BigInt::from(i as i64 % 5 - 2)).collect();
            for kind in EnlargeKind::ALL {
                let big = e.matrix.enlarge(kind, &v).map_err(|err| err.to_string())?;
                let back = big.reduce(&ReductionSite::trailing(kind, k + 2)).map_err(|err| err.to_string())?;
                expect(back == e.matrix, "reduce does not undo enlarge")?;
            }
            Ok(())
        }),
    ];
    let passed = properties.iter().all(|p| p.failures.is_empty());
    Ok(SelftestReport { corpus: label, entries: entries.len(), properties, passed })
}
