pub mod cli;
pub mod format;
pub mod report;

use std::io::{self, Read, Write};

use thiserror::Error;

use lexext_core::bounds::bound_report_for;
use lexext_core::enumerate::independence_profile;
use lexext_core::lexgraph::build_lex_graph;
use lexext_core::sds::max_edges;
use lexext_core::verify::{verify_range, CellOutcome, VerifyConfig};

use crate::cli::{BoundArgs, Command, CountArgs, LexArgs, OutputFormat, TableArgs, VerifyArgs};
use crate::format::{GraphDocument, ParseError};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] lexext_core::Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_DOMAIN
    }
}

/// Runs one subcommand, writing its output to `out`; returns the process exit code.
pub fn run(command: &Command, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Bound(args) => bound(args, out),
        Command::Lex(args) => lex(args, out),
        Command::Count(args) => count(args, input, out),
        Command::Verify(args) => verify(args, out),
        Command::Table(args) => table(args, out),
    }
}

fn bound(args: &BoundArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let sizes: Vec<u64> = if args.all_r {
        (2..=args.n).collect()
    } else {
        args.r.clone()
    };
    let report = bound_report_for(args.n, args.m, &sizes)?;
    match args.format {
        OutputFormat::Json => writeln!(out, "{}", report::bound_json(&report))?,
        OutputFormat::Csv => report::bound_csv(&report, out)?,
    }
    Ok(0)
}

fn lex(args: &LexArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let graph = build_lex_graph(args.n, args.m)?;
    let doc = GraphDocument {
        format: args.format.into(),
        graph,
    };
    out.write_all(doc.emit().as_bytes())?;
    Ok(0)
}

fn count(args: &CountArgs, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match &args.input {
        Some(path) if path != "-" => std::fs::read_to_string(path)?,
        _ => {
            let mut s = String::new();
            input.read_to_string(&mut s)?;
            s
        }
    };
    let doc = GraphDocument::parse(args.format.into(), &text)?;
    let profile = independence_profile(&doc.graph);
    writeln!(out, "{}", report::count_json(&doc.graph, &profile, args.r))?;
    Ok(0)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let config = VerifyConfig {
        budget: args.budget,
        jobs: args.jobs,
    };
    let r_max = args.r_max.unwrap_or(args.n_max);
    let mut write_error = None;
    let summary = verify_range(args.n_max, r_max, &config, |outcome| {
        let lines: Vec<String> = match outcome {
            CellOutcome::Certified { certificates, .. } => {
                certificates.iter().map(report::certificate_json).collect()
            }
            CellOutcome::Refused { n, m, reason } => vec![report::refusal_json(*n, *m, reason)],
        };
        for line in lines {
            if let Err(e) = writeln!(out, "{line}") {
                write_error.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    writeln!(out, "{}", report::summary_json(&summary))?;
    if !summary.all_passed() {
        return Ok(EXIT_DOMAIN);
    }
    if args.strict && !summary.complete() {
        return Ok(EXIT_INCOMPLETE);
    }
    Ok(0)
}

fn table(args: &TableArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.r < 2 {
        return Err(lexext_core::Error::SizeOutOfRange { r: args.r, min: 2 }.into());
    }
    let max = max_edges(args.n)?;
    let mut rows = Vec::with_capacity(max as usize + 1);
    for m in 0..=max {
        rows.push(bound_report_for(args.n, m, &[args.r])?);
    }
    match args.format {
        OutputFormat::Csv => report::table_csv(&rows, out)?,
        OutputFormat::Json => {
            for row in &rows {
                writeln!(out, "{}", report::table_row_json(row))?;
            }
        }
    }
    Ok(0)
}
