//! `ccx` — command-line front end: encode a contract, query or validate an
//! encoding, draw its rule graph, run the benchmark, or explore coverage
//! interactively.
//!
//! Exit codes: 0 success, 1 error, 2 validation findings, 64 usage.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use ccx::analysis::{rule_graph, validate};
use ccx::engine::{
    parse_goal, parse_program, parse_query, Engine, Goal, Limits, Program, SolveStatus,
};
use ccx::harness::{
    gold_entries, read_gold, run_live, run_replay, write_summary, LiveRun, Outcome,
};
use ccx::llm::{extract_code, policy_prompt, Client, ClientConfig, FileSettings};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_FINDINGS: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "ccx",
    version,
    about = "Computable-contract toolkit: encode, query, validate, graph, bench, repl"
)]
struct Cli {
    /// Engine limits as STEPS or STEPS,DEPTH (default 1000000,10000).
    #[arg(long, global = true, value_name = "STEPS[,DEPTH]", value_parser = parse_limits)]
    limits: Option<Limits>,

    /// Print extra diagnostics (load warnings, dropped parameters) to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Translate a plain-text contract into a logic-program encoding.
    Encode(EncodeArgs),
    /// Answer one coverage question against a policy encoding.
    Query(QueryArgs),
    /// Report singleton variables and undefined predicates in an encoding.
    Validate {
        /// Policy encoding to check.
        #[arg(long)]
        policy: PathBuf,
    },
    /// Emit the rule dependency graph of an encoding.
    Graph {
        /// Policy encoding to graph.
        #[arg(long)]
        policy: PathBuf,
        /// Output format.
        #[arg(long, default_value = "dot", value_parser = ["dot"])]
        format: String,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the 9-question benchmark: replay fixtures or generate encodings.
    Bench(BenchArgs),
    /// Interactive goal prompt against a policy encoding.
    Repl {
        /// Policy encoding to load.
        #[arg(long)]
        policy: PathBuf,
    },
}

#[derive(Args)]
struct EncodeArgs {
    /// Contract text to translate.
    #[arg(long)]
    contract: PathBuf,
    /// Model name for the generation endpoint.
    #[arg(long)]
    model: Option<String>,
    /// Write the encoding here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML config file (base_url, model, api_key, ...).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Generation endpoint root, e.g. https://api.openai.com/v1.
    #[arg(long)]
    base_url: Option<String>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("question").required(true).args(["query", "goal"])))]
struct QueryArgs {
    /// Policy encoding to query.
    #[arg(long)]
    policy: PathBuf,
    /// Query file (clauses plus one goal).
    #[arg(long)]
    query: Option<PathBuf>,
    /// Goal text, e.g. 'claim_covered(100, 0, 0, sickness, 30)'.
    #[arg(long)]
    goal: Option<String>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["replay", "model"])))]
struct BenchArgs {
    /// Number of trials.
    #[arg(long, default_value = "1", value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    /// Replay a fixture set directory (policy.pl, queries/, gold.json).
    #[arg(long)]
    replay: Option<PathBuf>,
    /// Generate encodings live with this model.
    #[arg(long, requires = "contract")]
    model: Option<String>,
    /// Contract text for live generation.
    #[arg(long)]
    contract: Option<PathBuf>,
    /// Gold answers file; defaults to the built-in benchmark.
    #[arg(long)]
    gold: Option<PathBuf>,
    /// Directory for summary.json, scores.csv, and live artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// TOML config file (base_url, model, api_key, ...).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Generation endpoint root.
    #[arg(long)]
    base_url: Option<String>,
}

fn parse_limits(text: &str) -> Result<Limits, String> {
    let mut limits = Limits::default();
    let (steps, depth) = match text.split_once(',') {
        Some((s, d)) => (s, Some(d)),
        None => (text, None),
    };
    limits.max_steps = steps
        .trim()
        .parse()
        .map_err(|_| format!("invalid step limit {steps:?}"))?;
    if let Some(d) = depth {
        limits.max_depth = d
            .trim()
            .parse()
            .map_err(|_| format!("invalid depth limit {d:?}"))?;
    }
    Ok(limits)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let limits = cli.limits.unwrap_or_default();
    let verbose = cli.verbose;
    let outcome = match cli.command {
        Command::Encode(args) => cmd_encode(args, verbose),
        Command::Query(args) => cmd_query(args, limits, verbose),
        Command::Validate { policy } => cmd_validate(&policy),
        Command::Graph { policy, format: _, out } => cmd_graph(&policy, out.as_deref()),
        Command::Bench(args) => cmd_bench(args, limits),
        Command::Repl { policy } => cmd_repl(&policy, limits, verbose),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_policy(path: &Path) -> Result<Program> {
    let source = read_file(path)?;
    parse_program(&source).with_context(|| format!("parsing {}", path.display()))
}

/// Builds the generation client from flags, config file, and environment
/// (flags > config file; the API key also comes from CCX_API_KEY).
fn build_client(
    model: Option<String>,
    base_url: Option<String>,
    config_path: Option<&Path>,
) -> Result<Client> {
    let api_key = std::env::var("CCX_API_KEY").unwrap_or_default();
    let mut config = ClientConfig::new(
        base_url.unwrap_or_default(),
        api_key,
        model.unwrap_or_default(),
    );
    if let Some(path) = config_path {
        let settings = FileSettings::from_toml(&read_file(path)?)
            .with_context(|| format!("reading {}", path.display()))?;
        settings.apply(&mut config);
    }
    if config.base_url.is_empty() {
        config.base_url = "https://api.openai.com/v1".to_string();
    }
    if config.model.is_empty() {
        bail!("no model configured; pass --model or set one in --config");
    }
    Ok(Client::new(config)?)
}

fn print_findings(findings: &[ccx::analysis::Finding]) {
    for finding in findings {
        println!("{finding}");
    }
}

fn cmd_encode(args: EncodeArgs, verbose: bool) -> Result<u8> {
    let contract = read_file(&args.contract)?;
    let client = build_client(args.model, args.base_url, args.config.as_deref())?;
    let completion = client.complete(&policy_prompt(&contract))?;
    if verbose && !completion.dropped_params.is_empty() {
        eprintln!("dropped parameters: {}", completion.dropped_params.join(", "));
    }
    let code = extract_code(&completion.content);

    // Persist (or print) the encoding before judging it.
    match &args.out {
        Some(path) => {
            std::fs::write(path, &code).with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{code}"),
    }

    let program = match parse_program(&code) {
        Ok(p) => p,
        Err(e) => bail!("generated encoding does not parse: {e}"),
    };
    let findings = validate(&program);
    if findings.is_empty() {
        eprintln!("encoding ok: {} predicates, no findings", program.predicates().len());
        Ok(EXIT_OK)
    } else {
        for finding in &findings {
            eprintln!("{finding}");
        }
        Ok(EXIT_FINDINGS)
    }
}

fn outcome_of(engine: &mut Engine, goal: &Goal, limits: Limits) -> (Outcome, SolveStatus) {
    let solved = engine.solve(goal, limits);
    let outcome = match &solved.status {
        SolveStatus::Proved { .. } => Outcome::Yes,
        SolveStatus::Failed => Outcome::No,
        SolveStatus::Error(e) => Outcome::Error(e.kind),
    };
    (outcome, solved.status)
}

fn cmd_query(args: QueryArgs, limits: Limits, verbose: bool) -> Result<u8> {
    let policy_source = read_file(&args.policy)?;
    let policy = match parse_program(&policy_source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{}: {e}", args.policy.display());
            println!("error(parse)");
            return Ok(EXIT_ERROR);
        }
    };

    let (kb, goal) = if let Some(query_path) = &args.query {
        let source = read_file(query_path)?;
        match parse_query(&source) {
            Ok(query) => (policy.concat(&query.prelude), query.goal),
            Err(e) => {
                eprintln!("{}: {e}", query_path.display());
                println!("error(parse)");
                return Ok(EXIT_ERROR);
            }
        }
    } else {
        let text = args.goal.as_deref().expect("clap guarantees one input");
        match parse_goal(text) {
            Ok(goal) => (policy, goal),
            Err(e) => {
                eprintln!("goal: {e}");
                println!("error(parse)");
                return Ok(EXIT_ERROR);
            }
        }
    };

    let mut engine = match Engine::load_with_limits(&kb, limits) {
        Ok(engine) => engine,
        Err(e) => {
            eprintln!("{e}");
            println!("error({})", e.kind.short());
            return Ok(EXIT_ERROR);
        }
    };
    if verbose {
        for warning in engine.warnings() {
            eprintln!("load warning (line {}): {}", warning.line, warning.message);
        }
    }

    let (outcome, status) = outcome_of(&mut engine, &goal, limits);
    if let SolveStatus::Error(e) = &status {
        eprintln!("{e}");
    }
    println!("{outcome}");
    Ok(if outcome.is_error() { EXIT_ERROR } else { EXIT_OK })
}

fn cmd_validate(policy: &Path) -> Result<u8> {
    let program = load_policy(policy)?;
    let findings = validate(&program);
    if findings.is_empty() {
        println!("no findings");
        Ok(EXIT_OK)
    } else {
        print_findings(&findings);
        Ok(EXIT_FINDINGS)
    }
}

fn cmd_graph(policy: &Path, out: Option<&Path>) -> Result<u8> {
    let program = load_policy(policy)?;
    let dot = rule_graph(&program).to_dot();
    match out {
        Some(path) => {
            std::fs::write(path, dot).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{dot}"),
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: BenchArgs, limits: Limits) -> Result<u8> {
    let summary = if let Some(dir) = &args.replay {
        run_replay(dir, args.trials, limits)?
    } else {
        let contract_path = args.contract.as_ref().expect("clap enforces --contract");
        let contract = read_file(contract_path)?;
        let gold = match &args.gold {
            Some(path) => read_gold(path)?,
            None => gold_entries(),
        };
        let client = build_client(args.model.clone(), args.base_url.clone(), args.config.as_deref())?;
        let out_dir = args
            .out
            .clone()
            .unwrap_or_else(|| PathBuf::from("results").join("live"));
        let run = LiveRun {
            client: &client,
            contract_text: &contract,
            gold,
            limits,
            artifacts_dir: &out_dir,
        };
        run_live(&run, args.trials)?
    };

    for trial in &summary.trials {
        if let Some(provenance) = &trial.generation_error {
            eprintln!("trial {}: generation failed: {provenance}", trial.trial_id);
        }
    }
    println!("{}", summary.scoreboard());
    if let Some(dir) = &args.out {
        write_summary(dir, &summary)?;
        eprintln!("results written to {}", dir.display());
    }
    Ok(EXIT_OK)
}

fn cmd_repl(policy: &Path, limits: Limits, verbose: bool) -> Result<u8> {
    let program = load_policy(policy)?;
    let mut engine = Engine::load_with_limits(&program, limits)?;
    if verbose {
        for warning in engine.warnings() {
            eprintln!("load warning (line {}): {}", warning.line, warning.message);
        }
    }
    eprintln!("loaded {} predicates; :graph prints DOT, :quit leaves", program.predicates().len());

    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        eprint!("?- ");
        let _ = std::io::stderr().flush();
        let Some(line) = lines.next() else { break };
        let line = line.context("reading stdin")?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match line {
            ":quit" | ":q" => break,
            ":graph" => {
                print!("{}", rule_graph(&program).to_dot());
                continue;
            }
            _ => {}
        }
        let goal = match parse_goal(line) {
            Ok(goal) => goal,
            Err(e) => {
                eprintln!("parse error: {e}");
                continue;
            }
        };
        match engine.solve(&goal, limits).status {
            SolveStatus::Proved { bindings } => {
                if bindings.is_empty() {
                    println!("yes");
                } else {
                    let parts: Vec<String> = bindings
                        .iter()
                        .map(|(name, term)| format!("{name} = {}", ccx::engine::term_text(term)))
                        .collect();
                    println!("yes: {}", parts.join(", "));
                }
            }
            SolveStatus::Failed => println!("no"),
            SolveStatus::Error(e) => {
                eprintln!("{}", e.message);
                println!("error({})", e.kind.short());
            }
        }
    }
    Ok(EXIT_OK)
}
