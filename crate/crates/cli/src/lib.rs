//! Command-line front end: argument parsing, dispatch into `lipmod-core`, JSON/text
//! reports and the manifest runner.

pub mod args;
pub mod batch;
pub mod commands;
pub mod report;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
pub use report::{render, Failure, Outcome, Payload};

fn name(c: &Command) -> &'static str {
    match c {
        Command::Milnor { .. } => "milnor",
        Command::Corank { .. } => "corank",
        Command::Order { .. } => "order",
        Command::Newton { .. } => "newton",
        Command::Fil { .. } => "fil",
        Command::Initial { .. } => "initial",
        Command::Divide { .. } => "divide",
        Command::StdBasis { .. } => "std-basis",
        Command::QuotientBasis { .. } => "quotient-basis",
        Command::CheckTrivial(_) => "check-trivial",
        Command::VerifyTable8 { .. } => "verify-table8",
        Command::HpInvariants { .. } => "hp-invariants",
        Command::Obstruction { .. } => "obstruction",
        Command::Classify { .. } => "classify",
        Command::Lookup { .. } => "lookup",
        Command::VerifyCertificate { .. } => "verify-certificate",
        Command::Batch { .. } => "batch",
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let text = echo.iter().any(|a| a == "--text");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let code = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { report::EXIT_INPUT } else { report::EXIT_OK };
                return Outcome { exit: code, report: serde_json::Value::Null, text, raw: Some(e.to_string()) };
            }
            let command = echo.first().map(String::as_str).unwrap_or("");
            let (exit, report) = report::build(command, &echo, Err(Failure::input(e.to_string())));
            return Outcome { exit, report, text, raw: None };
        }
    };
    let g = &cli.global;
    let cmd = name(&cli.command);
    let outcome = match &cli.command {
        Command::Milnor { expr } => commands::milnor(g, expr),
        Command::Corank { expr } => commands::corank_cmd(g, expr),
        Command::Order { expr } => commands::order(g, expr),
        Command::Newton { expr } => commands::newton(g, expr),
        Command::Fil { expr, weight } => commands::fil(g, expr, weight),
        Command::Initial { expr, weight } => commands::initial(g, expr, weight),
        Command::Divide { dividend, jacobian_of, by } => commands::divide(g, dividend, jacobian_of.as_deref(), by),
        Command::StdBasis { gens, ideal } => commands::std_basis(g, gens, *ideal),
        Command::QuotientBasis { gens, ideal } => commands::quotient(g, gens, *ideal),
        Command::CheckTrivial(a) => commands::check_trivial(g, a),
        Command::VerifyTable8 { labels, max_b } => commands::verify_table8(g, labels, *max_b),
        Command::HpInvariants { b, c } => commands::hp(g, b, c),
        Command::Obstruction { pair } => commands::obstruction(pair),
        Command::Classify { expr } => commands::classify(g, expr),
        Command::Lookup { label } => commands::lookup(label),
        Command::VerifyCertificate { file } => commands::verify_certificate(file),
        Command::Batch { manifest } => batch::run_manifest(manifest),
    };
    let (exit, report) = report::build(cmd, &echo, outcome);
    Outcome { exit, report, text: g.text, raw: None }
}
