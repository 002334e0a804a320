//! Benchmark harness: runs N trials of 9 coverage questions against a
//! contract encoding, scores the outcomes against gold answers, and
//! aggregates mean and sample standard error. Encodings come either from
//! fixture files on disk (replay) or from a live generation endpoint.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis::{validate, Finding};
use crate::engine::{
    parse_program, parse_query, Engine, ErrorKind, Limits, Program, SolveStatus,
};
use crate::llm::{self, Client, GenerationRecord};
use crate::oracle;

/// What running one query produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Yes,
    No,
    Error(ErrorKind),
}

impl Outcome {
    pub fn is_error(self) -> bool {
        matches!(self, Outcome::Error(_))
    }

    /// An error outcome never matches, even when the gold answer is "no".
    pub fn matches_gold(self, covered: bool) -> bool {
        match self {
            Outcome::Yes => covered,
            Outcome::No => !covered,
            Outcome::Error(_) => false,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Yes => f.write_str("yes"),
            Outcome::No => f.write_str("no"),
            Outcome::Error(kind) => write!(f, "error({})", kind.short()),
        }
    }
}

/// Scored result of one query within a trial.
#[derive(Clone, Debug)]
pub struct QueryResult {
    /// 1-based position in the benchmark, 1..=9.
    pub query_id: u32,
    pub outcome: Outcome,
    /// Gold answer: `true` means covered ("yes").
    pub gold: bool,
    pub correct: bool,
    pub steps_used: u64,
}

/// Everything recorded for one trial: the code that ran and how it scored.
#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub trial_id: u32,
    pub model_name: String,
    pub policy_code: String,
    /// Validation findings for the policy encoding (empty when it did not
    /// even parse).
    pub policy_validation: Vec<Finding>,
    pub query_codes: Vec<String>,
    pub results: Vec<QueryResult>,
    /// Number of correct results, 0..=9.
    pub score: u32,
    /// Generation failures that shaped this trial (live mode only).
    pub generation_error: Option<String>,
}

/// A whole benchmark run: every trial plus aggregate statistics.
#[derive(Clone, Debug)]
pub struct RunSummary {
    pub model: String,
    pub trials: Vec<TrialRecord>,
    pub mean: f64,
    /// Sample standard error: standard deviation with N−1 denominator,
    /// divided by √N; 0 when there is a single trial.
    pub stderr: f64,
}

/// One gold answer as stored in `gold.json`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoldEntry {
    /// Query id, `q1` through `q9`.
    pub id: String,
    /// The natural-language coverage question.
    pub question: String,
    /// "yes" or "no".
    pub answer: String,
}

impl GoldEntry {
    pub fn covered(&self) -> bool {
        self.answer == "yes"
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn io_at(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io { path: path.display().to_string(), source }
}

/// The nine benchmark questions with answers adjudicated by the contract
/// oracle.
pub fn gold_entries() -> Vec<GoldEntry> {
    oracle::benchmark_cases()
        .into_iter()
        .map(|case| GoldEntry {
            id: case.id,
            question: case.claim,
            answer: if case.gold { "yes" } else { "no" }.to_string(),
        })
        .collect()
}

/// Serializes gold entries the way `gold.json` stores them.
pub fn gold_json(entries: &[GoldEntry]) -> String {
    let mut text = serde_json::to_string_pretty(entries).expect("gold entries serialize");
    text.push('\n');
    text
}

pub fn write_gold(path: &Path, entries: &[GoldEntry]) -> Result<(), HarnessError> {
    fs::write(path, gold_json(entries)).map_err(io_at(path))
}

pub fn read_gold(path: &Path) -> Result<Vec<GoldEntry>, HarnessError> {
    let text = fs::read_to_string(path).map_err(io_at(path))?;
    let entries: Vec<GoldEntry> = serde_json::from_str(&text)
        .map_err(|e| HarnessError::Config(format!("invalid gold file {}: {e}", path.display())))?;
    for entry in &entries {
        if entry.answer != "yes" && entry.answer != "no" {
            return Err(HarnessError::Config(format!(
                "invalid gold file {}: answer for {} must be \"yes\" or \"no\", got {:?}",
                path.display(),
                entry.id,
                entry.answer
            )));
        }
    }
    if entries.is_empty() {
        return Err(HarnessError::Config(format!(
            "invalid gold file {}: no entries",
            path.display()
        )));
    }
    Ok(entries)
}

/// Answers every gold question through the oracle itself and counts matches.
/// A sanity anchor: the gold answers and the oracle must agree perfectly.
pub fn oracle_self_score() -> u32 {
    let entries = gold_entries();
    oracle::benchmark_cases()
        .iter()
        .zip(&entries)
        .filter(|(case, entry)| oracle::claim_covered(&case.scenario) == entry.covered())
        .count() as u32
}

/// Runs one query against a fresh knowledge base built by appending the
/// query's prelude clauses after the policy's (clauses accumulate; nothing
/// is replaced). Load-time directives run in order during the load.
fn run_query(policy: &Program, query_code: &str, limits: Limits) -> (Outcome, u64) {
    let query = match parse_query(query_code) {
        Ok(q) => q,
        Err(_) => return (Outcome::Error(ErrorKind::Parse), 0),
    };
    let kb = policy.concat(&query.prelude);
    let mut engine = match Engine::load_with_limits(&kb, limits) {
        Ok(engine) => engine,
        Err(e) => return (Outcome::Error(e.kind), 0),
    };
    let solved = engine.solve(&query.goal, limits);
    let outcome = match solved.status {
        SolveStatus::Proved { .. } => Outcome::Yes,
        SolveStatus::Failed => Outcome::No,
        SolveStatus::Error(e) => Outcome::Error(e.kind),
    };
    (outcome, solved.steps_used)
}

/// Scores one policy encoding against the benchmark. Each query gets its own
/// engine over a fresh combined knowledge base, so dynamic-state changes in
/// one query never leak into the next. A policy that fails to parse marks
/// every query `error(parse)` and scores 0.
pub fn run_trial(
    trial_id: u32,
    model_name: &str,
    policy_code: &str,
    query_codes: &[String],
    gold: &[GoldEntry],
    limits: Limits,
) -> TrialRecord {
    assert_eq!(
        query_codes.len(),
        gold.len(),
        "one query encoding per gold entry"
    );
    let (policy, policy_validation) = match parse_program(policy_code) {
        Ok(program) => {
            let findings = validate(&program);
            (Some(program), findings)
        }
        Err(_) => (None, Vec::new()),
    };

    let mut results = Vec::with_capacity(gold.len());
    for (index, (code, entry)) in query_codes.iter().zip(gold).enumerate() {
        let (outcome, steps_used) = match &policy {
            Some(program) => run_query(program, code, limits),
            None => (Outcome::Error(ErrorKind::Parse), 0),
        };
        let covered = entry.covered();
        results.push(QueryResult {
            query_id: index as u32 + 1,
            outcome,
            gold: covered,
            correct: outcome.matches_gold(covered),
            steps_used,
        });
    }
    let score = results.iter().filter(|r| r.correct).count() as u32;

    TrialRecord {
        trial_id,
        model_name: model_name.to_string(),
        policy_code: policy_code.to_string(),
        policy_validation,
        query_codes: query_codes.to_vec(),
        results,
        score,
        generation_error: None,
    }
}

/// Mean and sample standard error of trial scores. The error is the sample
/// standard deviation (N−1 denominator) divided by √N, and 0 for a single
/// score, where the formula is undefined.
pub fn aggregate(scores: &[u32]) -> Result<(f64, f64), HarnessError> {
    if scores.is_empty() {
        return Err(HarnessError::Config("cannot aggregate zero trials".to_string()));
    }
    let n = scores.len() as f64;
    let mean = scores.iter().map(|&s| s as f64).sum::<f64>() / n;
    if scores.len() == 1 {
        return Ok((mean, 0.0));
    }
    let variance = scores
        .iter()
        .map(|&s| {
            let d = s as f64 - mean;
            d * d
        })
        .sum::<f64>()
        / (n - 1.0);
    Ok((mean, variance.sqrt() / n.sqrt()))
}

/// Wraps scored trials into a summary with aggregate statistics.
pub fn summarize(model: impl Into<String>, trials: Vec<TrialRecord>) -> Result<RunSummary, HarnessError> {
    let scores: Vec<u32> = trials.iter().map(|t| t.score).collect();
    let (mean, stderr) = aggregate(&scores)?;
    Ok(RunSummary { model: model.into(), trials, mean, stderr })
}

/// A fixture set on disk: `policy.pl`, `queries/q1.pl`…`q9.pl`, `gold.json`.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub name: String,
    pub policy_code: String,
    pub query_codes: Vec<String>,
    pub gold: Vec<GoldEntry>,
}

pub fn load_fixture_set(dir: &Path) -> Result<FixtureSet, HarnessError> {
    let name = dir
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "replay".to_string());
    let policy_path = dir.join("policy.pl");
    if !policy_path.is_file() {
        return Err(HarnessError::Config(format!(
            "missing policy file: {}",
            policy_path.display()
        )));
    }
    let policy_code = fs::read_to_string(&policy_path).map_err(io_at(&policy_path))?;
    let gold = read_gold(&dir.join("gold.json"))?;
    let mut query_codes = Vec::with_capacity(gold.len());
    for entry in &gold {
        let query_path = dir.join("queries").join(format!("{}.pl", entry.id));
        if !query_path.is_file() {
            return Err(HarnessError::Config(format!(
                "missing query file: {}",
                query_path.display()
            )));
        }
        query_codes.push(fs::read_to_string(&query_path).map_err(io_at(&query_path))?);
    }
    Ok(FixtureSet { name, policy_code, query_codes, gold })
}

/// Replays a fixture set `n_trials` times (replay is deterministic, so every
/// trial is identical; more than one is useful only to exercise aggregation).
pub fn run_replay(dir: &Path, n_trials: u32, limits: Limits) -> Result<RunSummary, HarnessError> {
    if n_trials == 0 {
        return Err(HarnessError::Config("n_trials must be at least 1".to_string()));
    }
    let set = load_fixture_set(dir)?;
    let trials = (1..=n_trials)
        .map(|id| run_trial(id, &set.name, &set.policy_code, &set.query_codes, &set.gold, limits))
        .collect();
    summarize(set.name.clone(), trials)
}

/// Settings for a live benchmark run against a generation endpoint.
pub struct LiveRun<'a> {
    pub client: &'a Client,
    /// The contract text the policy prompt embeds.
    pub contract_text: &'a str,
    pub gold: Vec<GoldEntry>,
    pub limits: Limits,
    /// Every generation is written here (one record per request) before any
    /// generated code is executed.
    pub artifacts_dir: &'a Path,
}

/// Runs live trials: each trial generates one policy encoding and one query
/// encoding per gold question, persists everything, then scores. A failed
/// generation leaves empty code behind (which scores as a parse error) and
/// is recorded in the trial's `generation_error`; the run continues.
pub fn run_live(run: &LiveRun, n_trials: u32) -> Result<RunSummary, HarnessError> {
    if n_trials == 0 {
        return Err(HarnessError::Config("n_trials must be at least 1".to_string()));
    }
    let mut trials = Vec::with_capacity(n_trials as usize);
    for id in 1..=n_trials {
        trials.push(run_live_trial(run, id)?);
    }
    summarize(run.client.model().to_string(), trials)
}

fn run_live_trial(run: &LiveRun, trial_id: u32) -> Result<TrialRecord, HarnessError> {
    let trial_dir = run.artifacts_dir.join(format!("trial-{trial_id:02}"));
    fs::create_dir_all(&trial_dir).map_err(io_at(&trial_dir))?;
    let model = run.client.model().to_string();
    let mut failures: Vec<String> = Vec::new();

    let prompt = llm::policy_prompt(run.contract_text);
    let policy_code = match run.client.complete(&prompt) {
        Ok(completion) => {
            let code = llm::extract_code(&completion.content);
            let record = GenerationRecord {
                kind: "policy".to_string(),
                label: "policy".to_string(),
                model: model.clone(),
                prompt,
                response: Some(completion.content),
                code: Some(code.clone()),
                dropped_params: completion.dropped_params,
                error: None,
            };
            persist_generation(&trial_dir, &record)?;
            code
        }
        Err(e) => {
            let record = GenerationRecord {
                kind: "policy".to_string(),
                label: "policy".to_string(),
                model: model.clone(),
                prompt,
                response: None,
                code: None,
                dropped_params: Vec::new(),
                error: Some(e.to_string()),
            };
            persist_generation(&trial_dir, &record)?;
            failures.push(format!("policy: {e}"));
            String::new()
        }
    };

    // Without a policy encoding there is nothing to ask queries against;
    // empty code stands in and scores as parse errors.
    let mut query_codes = Vec::with_capacity(run.gold.len());
    if policy_code.is_empty() {
        query_codes = vec![String::new(); run.gold.len()];
    } else {
        for entry in &run.gold {
            let prompt = llm::query_prompt(&entry.question, run.contract_text, &policy_code);
            match run.client.complete(&prompt) {
                Ok(completion) => {
                    let code = llm::extract_code(&completion.content);
                    let record = GenerationRecord {
                        kind: "query".to_string(),
                        label: entry.id.clone(),
                        model: model.clone(),
                        prompt,
                        response: Some(completion.content),
                        code: Some(code.clone()),
                        dropped_params: completion.dropped_params,
                        error: None,
                    };
                    persist_generation(&trial_dir, &record)?;
                    query_codes.push(code);
                }
                Err(e) => {
                    let record = GenerationRecord {
                        kind: "query".to_string(),
                        label: entry.id.clone(),
                        model: model.clone(),
                        prompt,
                        response: None,
                        code: None,
                        dropped_params: Vec::new(),
                        error: Some(e.to_string()),
                    };
                    persist_generation(&trial_dir, &record)?;
                    failures.push(format!("{}: {e}", entry.id));
                    query_codes.push(String::new());
                }
            }
        }
    }

    // Only now, with every generation on disk, does any generated code run.
    let mut record = run_trial(trial_id, &model, &policy_code, &query_codes, &run.gold, run.limits);
    if !failures.is_empty() {
        record.generation_error = Some(failures.join("; "));
    }
    Ok(record)
}

/// Writes one generation's full record (and its extracted code, when any) to
/// the trial directory.
fn persist_generation(trial_dir: &Path, record: &GenerationRecord) -> Result<(), HarnessError> {
    let record_path = trial_dir.join(format!("{}.gen.json", record.label));
    let mut text = serde_json::to_string_pretty(record).expect("generation record serializes");
    text.push('\n');
    fs::write(&record_path, text).map_err(io_at(&record_path))?;
    if let Some(code) = &record.code {
        let code_path = trial_dir.join(format!("{}.pl", record.label));
        fs::write(&code_path, code).map_err(io_at(&code_path))?;
    }
    Ok(())
}

// --- result files -----------------------------------------------------------

#[derive(Serialize)]
struct SummaryFile<'a> {
    model: &'a str,
    n_trials: usize,
    trials: Vec<TrialFile>,
    mean: f64,
    stderr: f64,
}

#[derive(Serialize)]
struct TrialFile {
    trial_id: u32,
    score: u32,
    per_query: Vec<QueryFile>,
}

#[derive(Serialize)]
struct QueryFile {
    id: u32,
    outcome: String,
    gold: &'static str,
    correct: bool,
}

impl RunSummary {
    /// The `summary.json` text: stable field order, no timestamps, so
    /// replaying the same fixtures twice produces identical bytes.
    pub fn summary_json(&self) -> String {
        let file = SummaryFile {
            model: &self.model,
            n_trials: self.trials.len(),
            trials: self
                .trials
                .iter()
                .map(|t| TrialFile {
                    trial_id: t.trial_id,
                    score: t.score,
                    per_query: t
                        .results
                        .iter()
                        .map(|r| QueryFile {
                            id: r.query_id,
                            outcome: r.outcome.to_string(),
                            gold: if r.gold { "yes" } else { "no" },
                            correct: r.correct,
                        })
                        .collect(),
                })
                .collect(),
            mean: self.mean,
            stderr: self.stderr,
        };
        let mut text = serde_json::to_string_pretty(&file).expect("summary serializes");
        text.push('\n');
        text
    }

    /// Per-trial scores as one CSV row: model, each trial's score, then mean
    /// and standard error.
    pub fn csv(&self) -> String {
        let mut header = String::from("model");
        let mut row = self.model.clone();
        for trial in &self.trials {
            header.push_str(&format!(",trial{}", trial.trial_id));
            row.push_str(&format!(",{}", trial.score));
        }
        header.push_str(",mean,stderr");
        row.push_str(&format!(",{:.1},{:.2}", self.mean, self.stderr));
        format!("{header}\n{row}\n")
    }

    /// One human-readable scoreboard line: per-trial scores and mean ± stderr.
    pub fn scoreboard(&self) -> String {
        let scores: Vec<String> = self.trials.iter().map(|t| t.score.to_string()).collect();
        format!(
            "{} | {} | mean {:.1} ± {:.2}",
            self.model,
            scores.join(" "),
            self.mean,
            self.stderr
        )
    }
}

/// Writes `summary.json` and `scores.csv` into `dir`, creating it if needed.
pub fn write_summary(dir: &Path, summary: &RunSummary) -> Result<(), HarnessError> {
    fs::create_dir_all(dir).map_err(io_at(dir))?;
    let json_path = dir.join("summary.json");
    fs::write(&json_path, summary.summary_json()).map_err(io_at(&json_path))?;
    let csv_path = dir.join("scores.csv");
    fs::write(&csv_path, summary.csv()).map_err(io_at(&csv_path))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(id: &str, answer: &str) -> GoldEntry {
        GoldEntry { id: id.to_string(), question: format!("question {id}"), answer: answer.to_string() }
    }

    #[test]
    fn outcome_rendering() {
        assert_eq!(Outcome::Yes.to_string(), "yes");
        assert_eq!(Outcome::No.to_string(), "no");
        assert_eq!(Outcome::Error(ErrorKind::Parse).to_string(), "error(parse)");
        assert_eq!(
            Outcome::Error(ErrorKind::ResourceLimit).to_string(),
            "error(resource_limit)"
        );
    }

    #[test]
    fn errors_never_match_gold() {
        for kind in [
            ErrorKind::Parse,
            ErrorKind::Existence,
            ErrorKind::Instantiation,
            ErrorKind::Type,
            ErrorKind::ResourceLimit,
        ] {
            assert!(!Outcome::Error(kind).matches_gold(true));
            assert!(!Outcome::Error(kind).matches_gold(false));
        }
    }

    #[test]
    fn aggregate_known_score_lists() {
        let (mean, stderr) = aggregate(&[6, 0, 5, 2, 0, 0, 5, 5, 0, 1]).unwrap();
        assert!((mean - 2.4).abs() < 1e-12);
        assert!((stderr - 0.81).abs() < 0.005, "stderr {stderr}");

        let (mean, stderr) = aggregate(&[8, 7, 8, 8, 8, 8, 6, 8, 6, 8]).unwrap();
        assert!((mean - 7.5).abs() < 1e-12);
        // The stated formula gives ≈0.27 on these scores.
        assert!((stderr - 0.27).abs() < 0.005, "stderr {stderr}");

        assert_eq!(aggregate(&[5, 5, 5]).unwrap(), (5.0, 0.0));
        assert_eq!(aggregate(&[7]).unwrap(), (7.0, 0.0));
        assert!(aggregate(&[]).is_err());
    }

    #[test]
    fn aggregate_is_permutation_invariant() {
        let mut scores = [6, 0, 5, 2, 0, 0, 5, 5, 0, 1];
        let baseline = aggregate(&scores).unwrap();
        scores.reverse();
        assert_eq!(aggregate(&scores).unwrap(), baseline);
        scores.sort_unstable();
        assert_eq!(aggregate(&scores).unwrap(), baseline);
    }

    #[test]
    fn gold_entries_match_oracle() {
        let entries = gold_entries();
        assert_eq!(entries.len(), 9);
        let answers: Vec<&str> = entries.iter().map(|e| e.answer.as_str()).collect();
        assert_eq!(answers, ["no", "yes", "yes", "no", "no", "no", "yes", "no", "yes"]);
        assert_eq!(oracle_self_score(), 9);
    }

    #[test]
    fn gold_round_trips_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gold.json");
        let entries = gold_entries();
        write_gold(&path, &entries).unwrap();
        assert_eq!(read_gold(&path).unwrap(), entries);
    }

    #[test]
    fn bad_gold_answers_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gold.json");
        fs::write(&path, r#"[{"id": "q1", "question": "?", "answer": "maybe"}]"#).unwrap();
        let err = read_gold(&path).unwrap_err();
        assert!(err.to_string().contains("q1"), "{err}");
    }

    #[test]
    fn broken_policy_scores_zero_with_parse_errors() {
        let gold = vec![entry("q1", "yes"), entry("q2", "no")];
        let queries = vec!["?- p.".to_string(), "?- q.".to_string()];
        let record = run_trial(1, "m", "p :- (", &queries, &gold, Limits::default());
        assert_eq!(record.score, 0);
        for result in &record.results {
            assert_eq!(result.outcome, Outcome::Error(ErrorKind::Parse));
            // Errors are incorrect even where gold is "no".
            assert!(!result.correct);
        }
    }

    #[test]
    fn queries_run_against_fresh_knowledge_bases() {
        let gold = vec![entry("q1", "yes"), entry("q2", "no")];
        let queries = vec![
        // The first query asserts a fact at load time; the second must not
        // see it.
            ":- assert(extra).\n?- extra.".to_string(),
            "?- extra.".to_string(),
        ];
        let record = run_trial(1, "m", ":- dynamic extra/0.", &queries, &gold, Limits::default());
        assert_eq!(record.results[0].outcome, Outcome::Yes);
        assert_eq!(record.results[1].outcome, Outcome::No);
        assert_eq!(record.score, 2);
    }

    #[test]
    fn query_prelude_accumulates_after_policy_clauses() {
        // Policy and query both define p/1; solving tries policy clauses
        // first, so backtracking order proves accumulation, not replacement.
        let gold = vec![entry("q1", "yes")];
        let queries = vec!["p(b).\n?- p(a).".to_string()];
        let record = run_trial(1, "m", "p(a).", &queries, &gold, Limits::default());
        assert_eq!(record.results[0].outcome, Outcome::Yes);
        let record = run_trial(1, "m", "p(c).", &queries, &gold, Limits::default());
        assert_eq!(record.results[0].outcome, Outcome::No);
    }

    #[test]
    fn summary_json_shape_and_determinism() {
        let gold = vec![entry("q1", "yes")];
        let queries = vec!["?- p.".to_string()];
        let record = run_trial(1, "m", "p.", &queries, &gold, Limits::default());
        let summary = summarize("m", vec![record]).unwrap();
        let text = summary.summary_json();
        assert_eq!(text, summary.summary_json());
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["model"], "m");
        assert_eq!(value["n_trials"], 1);
        assert_eq!(value["trials"][0]["trial_id"], 1);
        assert_eq!(value["trials"][0]["score"], 1);
        assert_eq!(value["trials"][0]["per_query"][0]["id"], 1);
        assert_eq!(value["trials"][0]["per_query"][0]["outcome"], "yes");
        assert_eq!(value["trials"][0]["per_query"][0]["gold"], "yes");
        assert_eq!(value["trials"][0]["per_query"][0]["correct"], true);
        assert_eq!(value["mean"], 1.0);
        assert_eq!(value["stderr"], 0.0);
    }

    #[test]
    fn csv_and_scoreboard_shapes() {
        let gold = vec![entry("q1", "yes")];
        let queries = vec!["?- p.".to_string()];
        let t1 = run_trial(1, "m", "p.", &queries, &gold, Limits::default());
        let t2 = run_trial(2, "m", "p.", &queries, &gold, Limits::default());
        let summary = summarize("m", vec![t1, t2]).unwrap();
        assert_eq!(summary.csv(), "model,trial1,trial2,mean,stderr\nm,1,1,1.0,0.00\n");
        assert_eq!(summary.scoreboard(), "m | 1 1 | mean 1.0 ± 0.00");
    }

    #[test]
    fn missing_query_file_is_a_named_configuration_error() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("policy.pl"), "p.\n").unwrap();
        write_gold(&dir.path().join("gold.json"), &gold_entries()).unwrap();
        fs::create_dir(dir.path().join("queries")).unwrap();
        for id in [1, 2, 3, 4, 5, 6, 8, 9] {
            fs::write(dir.path().join("queries").join(format!("q{id}.pl")), "?- p.\n").unwrap();
        }
        let err = load_fixture_set(dir.path()).unwrap_err();
        assert!(matches!(err, HarnessError::Config(_)));
        assert!(err.to_string().contains("q7.pl"), "{err}");
    }

    #[test]
    fn zero_trials_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let err = run_replay(dir.path(), 0, Limits::default()).unwrap_err();
        assert!(err.to_string().contains("at least 1"));
    }
}
