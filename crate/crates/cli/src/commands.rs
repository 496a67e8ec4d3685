use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use seifert_core::blanchfield::chain_isometry;
use seifert_core::seifert::random_seifert;
use seifert_core::sequiv::{compare, corpus_generate, standard_seeds, CompareBudget, CorpusParams, MoveWeights};
use seifert_core::{BlanchfieldForm, InvariantReport, LaurentPoly, SeifertMatrix, Verdict};
use sha2::{Digest, Sha256};

use crate::document::{self, exit, file_stem, load_chain, pretty, read_text, write_text, CliError, MatrixDocument};
use crate::ingest::{ingest, IngestReport};
use crate::selftest::selftest;
use crate::{BudgetArgs, Cli, Command};

/// What a command prints and how the process exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub human: String,
    pub structured: String,
}

/// A structured report with a human rendering derived from it.
pub(crate) trait Report: Serialize {
    fn human(&self) -> String;

    fn code(&self) -> u8 {
        exit::OK
    }

    fn outcome(&self) -> Outcome {
        Outcome { code: self.code(), human: self.human(), structured: pretty(self) }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { path } => validate(path),
        Command::Invariants { path } => invariants(path),
        Command::Blanchfield { path, v, w } => blanchfield(path, v.as_deref().zip(w.as_deref())),
        Command::Moves { path, chain, out } => moves(path, chain, out.as_deref()),
        Command::Compare { left, right, budget } => compare_files(left, right, budget),
        Command::Random { genus, bound, seed, name, out } => random(*genus, *bound, *seed, name.as_deref(), out.as_deref()),
        Command::Corpus { per_seed, chain_length, seed, out } => corpus(*per_seed, *chain_length, *seed, out),
        Command::Ingest { path, out } => ingest_file(path, out.as_deref()),
        Command::Selftest { corpus } => selftest(corpus.as_deref()).map(|r| r.outcome()),
    }
}

fn load(path: &Path) -> Result<(MatrixDocument, SeifertMatrix), CliError> {
    let doc = MatrixDocument::load(path)?;
    let a = doc.seifert()?;
    Ok((doc, a))
}

#[derive(Serialize)]
struct ValidateReport {
    name: String,
    seifert_type: bool,
    size: usize,
    genus: usize,
}

impl Report for ValidateReport {
    fn human(&self) -> String {
        format!("{}: Seifert type, size {}, genus {}\n", self.name, self.size, self.genus)
    }
}

fn validate(path: &Path) -> Result<Outcome, CliError> {
    let (doc, a) = load(path)?;
    Ok(ValidateReport { name: doc.name, seifert_type: true, size: a.size(), genus: a.genus() }.outcome())
}

/// [`InvariantReport`] with the polynomial in its text form.
#[derive(Serialize)]
struct RenderedInvariants {
    alexander: String,
    det_at_minus_one: String,
    signature: i64,
    alexander_at_one: String,
}

impl From<&InvariantReport> for RenderedInvariants {
    fn from(r: &InvariantReport) -> Self {
        Self {
            alexander: r.alexander.to_string(),
            det_at_minus_one: r.det_at_minus_one.0.to_string(),
            signature: r.signature,
            alexander_at_one: r.alexander_at_one.0.to_string(),
        }
    }
}

#[derive(Serialize)]
struct InvariantsReport {
    name: String,
    size: usize,
    genus: usize,
    invariants: RenderedInvariants,
}

impl Report for InvariantsReport {
    fn human(&self) -> String {
        let i = &self.invariants;
        format!(
            "{} (size {}, genus {})\nalexander: {}\ndet_at_minus_one: {}\nsignature: {}\nalexander_at_one: {}\n",
            self.name, self.size, self.genus, i.alexander, i.det_at_minus_one, i.signature, i.alexander_at_one
        )
    }
}

fn invariants(path: &Path) -> Result<Outcome, CliError> {
    let (doc, a) = load(path)?;
    let report = InvariantReport::of(&a);
    Ok(InvariantsReport { name: doc.name, size: a.size(), genus: a.genus(), invariants: (&report).into() }.outcome())
}

#[derive(Serialize)]
struct PairingValue {
    v: Vec<String>,
    w: Vec<String>,
    class: String,
    hermitian: bool,
}

#[derive(Serialize)]
struct BlanchfieldReport {
    name: String,
    size: usize,
    order: String,
    pairing: Vec<Vec<String>>,
    hermitian: bool,
    defining_identity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<PairingValue>,
}

impl Report for BlanchfieldReport {
    fn human(&self) -> String {
        let mut s = format!("{} (size {})\norder: {}\n", self.name, self.size, self.order);
        if let Some(v) = &self.value {
            s += &format!("λ(v, w) = {}\n", v.class);
            s += &format!("hermitian: {}\n", v.hermitian);
            return s;
        }
        for (i, row) in self.pairing.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                s += &format!("λ(e{}, e{}) = {x}\n", i + 1, j + 1);
            }
        }
        s += &format!("hermitian: {}\ndefining identity: {}\n", self.hermitian, self.defining_identity);
        s
    }
}

fn parse_vector(text: &str, flag: &str) -> Result<Vec<LaurentPoly>, CliError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let p: LaurentPoly = part.parse().map_err(|e: seifert_core::laurent::ParsePolyError| CliError::Parse {
            source_name: flag.to_owned(),
            line: 1,
            column: offset + e.offset + 1,
            message: e.message,
        })?;
        out.push(p);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn blanchfield(path: &Path, vectors: Option<(&str, &str)>) -> Result<Outcome, CliError> {
    let (doc, a) = load(path)?;
    let form = BlanchfieldForm::new(&a);
    let pairing = form.pairing().to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let value = match vectors {
        None => None,
        Some((v, w)) => {
            let (v, w) = (parse_vector(v, "--v")?, parse_vector(w, "--w")?);
            let vw = form.evaluate(&v, &w).map_err(CliError::domain)?;
            let wv = form.evaluate(&w, &v).map_err(CliError::domain)?;
            Some(PairingValue {
                v: v.iter().map(ToString::to_string).collect(),
                w: w.iter().map(ToString::to_string).collect(),
                hermitian: wv.class_eq(&vw.involute()),
                class: vw.to_string(),
            })
        }
    };
    Ok(BlanchfieldReport {
        name: doc.name,
        size: a.size(),
        order: form.order().to_string(),
        pairing,
        hermitian: form.hermitian_check(),
        defining_identity: form.defining_identity_holds(),
        value,
    }
    .outcome())
}

#[derive(Serialize)]
struct MovesReport {
    name: String,
    moves: usize,
    start_size: usize,
    result_size: usize,
    isometry_verified: bool,
    result: MatrixDocument,
    #[serde(skip)]
    written_to: Option<String>,
}

impl Report for MovesReport {
    fn human(&self) -> String {
        let mut s = format!(
            "{}: replayed {} moves, size {} -> {}\nisometry verified: {}\n",
            self.name, self.moves, self.start_size, self.result_size, self.isometry_verified
        );
        match &self.written_to {
            Some(p) => s += &format!("result written to {p}\n"),
            None => s += &self.result.to_json(),
        }
        s
    }
}

fn moves(path: &Path, chain_path: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
    let (doc, a) = load(path)?;
    let chain = load_chain(chain_path)?;
    if chain.start != a {
        return Err(CliError::Domain(format!("{} does not start at the matrix of {}", chain_path.display(), doc.name)));
    }
    let b = chain.apply().map_err(CliError::domain)?;
    chain_isometry(&chain).map_err(|e| CliError::Domain(format!("isometry verification failed: {e}")))?;
    let result = MatrixDocument::new(format!("{}-moved", doc.name), &b);
    if let Some(out) = out {
        write_text(out, &result.to_json())?;
    }
    Ok(MovesReport {
        name: doc.name,
        moves: chain.len(),
        start_size: a.size(),
        result_size: b.size(),
        isometry_verified: true,
        result,
        written_to: out.map(|p| p.display().to_string()),
    }
    .outcome())
}

#[derive(Serialize)]
struct CompareOutput {
    left: String,
    right: String,
    invariant_diffs: Vec<seifert_core::invariants::InvariantDiff>,
    verdict: Verdict,
    witness_verified: bool,
}

impl Report for CompareOutput {
    fn human(&self) -> String {
        let mut s = format!("{} vs {}\n", self.left, self.right);
        for d in &self.invariant_diffs {
            s += &format!("differs: {d}\n");
        }
        s += &format!("verdict: {}\n", self.verdict);
        if self.verdict.is_isometric() {
            s += &format!("witness verified: {}\n", self.witness_verified);
        }
        s
    }

    fn code(&self) -> u8 {
        match self.verdict {
            Verdict::Isometric { .. } => exit::OK,
            Verdict::DistinctInvariant { .. } => exit::DISTINCT,
            Verdict::Unknown { .. } => exit::UNKNOWN,
        }
    }
}

fn compare_budget(args: &BudgetArgs) -> CompareBudget {
    let mut b = CompareBudget::default();
    if let Some(d) = args.budget_depth {
        b.chain.max_depth = d;
    }
    if let Some(n) = args.budget_nodes {
        b.chain.max_nodes = n;
    }
    if let Some(c) = args.coeff_bound {
        b.isometry.coeff_bound = c;
    }
    if let Some(d) = args.deg_bound {
        b.isometry.degree_bound = d;
    }
    b
}

fn compare_files(left: &Path, right: &Path, budget: &BudgetArgs) -> Result<Outcome, CliError> {
    let (ldoc, a) = load(left)?;
    let (rdoc, b) = load(right)?;
    let report = compare(&a, &b, &compare_budget(budget));
    let witness_verified = report.pairing_verdict.is_isometric() && report.pairing_verdict.verify(&a, &b).is_ok();
    Ok(CompareOutput {
        left: ldoc.name,
        right: rdoc.name,
        invariant_diffs: report.invariant_diffs,
        verdict: report.pairing_verdict,
        witness_verified,
    }
    .outcome())
}

/// Commands whose product is a document: the document is the structured
/// output.
struct Written {
    document: String,
    human: String,
}

impl Written {
    fn outcome(self) -> Outcome {
        Outcome { code: exit::OK, human: self.human, structured: self.document }
    }
}

fn random(genus: usize, bound: u32, seed: u64, name: Option<&str>, out: Option<&Path>) -> Result<Outcome, CliError> {
    let a = random_seifert(genus, bound, seed);
    let name = name.map_or_else(|| format!("random-g{genus}-b{bound}-s{seed}"), str::to_owned);
    let doc = MatrixDocument::new(name, &a)
        .with_metadata("genus", genus)
        .with_metadata("bound", bound)
        .with_metadata("seed", seed);
    let text = doc.to_json();
    let human = match out {
        Some(p) => {
            write_text(p, &text)?;
            format!("{} written to {}\n", doc.name, p.display())
        }
        None => text.clone(),
    };
    Ok(Written { document: text, human }.outcome())
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ManifestEntry {
    pub name: String,
    pub matrix_file: String,
    pub matrix_sha256: String,
    pub chain_file: String,
    pub chain_sha256: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct Manifest {
    pub seed: u64,
    pub per_seed: usize,
    pub chain_length: usize,
    pub weights: MoveWeights,
    pub entries: Vec<ManifestEntry>,
}

pub(crate) fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn corpus(per_seed: usize, chain_length: usize, seed: u64, out: &Path) -> Result<Outcome, CliError> {
    let io = |source| CliError::Io { path: out.display().to_string(), source };
    fs::create_dir_all(out).map_err(io)?;
    let params = CorpusParams { chain_length, seed, ..CorpusParams::default() };
    let mut entries = Vec::new();
    for entry in corpus_generate(&standard_seeds(), per_seed, &params) {
        let stem = file_stem(&entry.name);
        let doc = MatrixDocument::new(entry.name.clone(), &entry.matrix)
            .with_metadata("alexander", entry.invariants.alexander.to_string())
            .with_metadata("signature", entry.invariants.signature)
            .with_metadata("origin", format!("{stem}.chain.json"));
        let (matrix_file, chain_file) = (format!("{stem}.json"), format!("{stem}.chain.json"));
        let (doc_text, chain_text) = (doc.to_json(), document::chain_to_json(&entry.origin));
        write_text(&out.join(&matrix_file), &doc_text)?;
        write_text(&out.join(&chain_file), &chain_text)?;
        entries.push(ManifestEntry {
            name: entry.name,
            matrix_file,
            matrix_sha256: sha256_hex(doc_text.as_bytes()),
            chain_file,
            chain_sha256: sha256_hex(chain_text.as_bytes()),
        });
    }
    let count = entries.len();
    let manifest = pretty(&Manifest { seed, per_seed, chain_length, weights: params.weights, entries });
    write_text(&out.join("manifest.json"), &manifest)?;
    Ok(Written { document: manifest, human: format!("{count} entries written to {}\n", out.display()) }.outcome())
}

impl Report for IngestReport {
    fn human(&self) -> String {
        let mut s = String::new();
        for d in &self.accepted {
            s += &format!("accepted {} (size {})\n", d.name, d.matrix.len());
        }
        for r in &self.rejected {
            s += &format!("rejected line {} {:?}: {}\n", r.line, r.name, r.reason);
        }
        s += &format!("{} accepted, {} rejected\n", self.accepted.len(), self.rejected.len());
        s
    }
}

fn ingest_file(path: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
    let report = ingest(&read_text(path)?, &path.display().to_string())?;
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
        for d in &report.accepted {
            write_text(&dir.join(format!("{}.json", file_stem(&d.name))), &d.to_json())?;
        }
    }
    Ok(report.outcome())
}
