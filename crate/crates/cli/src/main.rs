//! `supergrade`: JSON front end to the grading builders, checkers and classifier.

mod report;
mod suite;
mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    VerifyAxioms,
    Build,
    Grade,
    CheckGrading,
    Classify,
    Exchange,
    Obstruction,
    SearchSuperinvolution,
    DemoZ4,
}

impl Verb {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "supergrade", version, about = "Gradings of superalgebras with superinvolution")]
struct Cli {
    #[arg(required_unless_present = "list_checks")]
    verb: Option<Verb>,
    /// JSON input for the verb.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Seed of randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for randomized suites.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    /// Print the acceptance checks and exit.
    #[arg(long)]
    list_checks: bool,
}

fn run(cli: &Cli) -> Report {
    let Some(verb) = cli.verb.filter(|_| !cli.list_checks) else {
        return suite::list_checks();
    };
    let name = verb.name();
    let text = match &cli.input {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => Some(t),
            Err(e) => return Report::error(&name, format!("cannot read {}: {e}", p.display())),
        },
        None => None,
    };
    let input = text.as_deref();
    let out = match verb {
        Verb::VerifyAxioms => verbs::verify_axioms(input),
        Verb::Build => verbs::build(input),
        Verb::Grade => match input {
            Some(t) => verbs::grade(t),
            None => suite::grade_suite(cli.seed, cli.parallel),
        },
        Verb::CheckGrading => verbs::check_grading(input),
        Verb::Classify => verbs::classify_verb(input),
        Verb::Exchange => verbs::exchange_verb(input),
        Verb::Obstruction => verbs::obstruction(input),
        Verb::SearchSuperinvolution => verbs::search_superinvolution(input),
        Verb::DemoZ4 => verbs::demo_z4(input),
    };
    out.unwrap_or_else(|e| Report::error(&name, e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    match cli.output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("json value prints")),
        Output::Text => print!("{}", report.to_text()),
    }
    if let Some(m) = &report.message {
        eprintln!("supergrade: {m}");
    }
    ExitCode::from(report.status.exit_code() as u8)
}
