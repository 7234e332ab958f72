//! Thin command-line front end.
//!
//! Subcommands: `classify --max-rank N [--json]`,
//! `inspect TYPE RANK ALPHA BETA [--json]`, `selftest`.
//! Exit codes: 0 success, 1 invalid input, 2 consistency failure.

use std::process::ExitCode;

use horospherical::report::{cmd_classify, cmd_inspect};
use horospherical::root_system::Series;
use horospherical::selftest::run_selftest;

const USAGE: &str = "\
usage:
  horoclass classify --max-rank N [--json]   classification table up to rank N (1..=12)
  horoclass inspect TYPE RANK ALPHA BETA [--json]
                                             full report for one pair, e.g. `inspect B 3 1 3`
  horoclass selftest                         run the invariant suites
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprint!("{USAGE}");
            ExitCode::from(1)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(command) = args.first() else {
        return Err("missing subcommand".into());
    };
    match command.as_str() {
        "-h" | "--help" | "help" => {
            print!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        "classify" => classify(&args[1..]),
        "inspect" => inspect(&args[1..]),
        "selftest" => {
            if args.len() > 1 {
                return Err("selftest takes no arguments".into());
            }
            let report = run_selftest();
            print!("{}", report.render());
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        other => Err(format!("unknown subcommand {other:?}")),
    }
}

fn classify(args: &[String]) -> Result<ExitCode, String> {
    let mut max_rank: Option<usize> = None;
    let mut json = false;
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--max-rank" => {
                let value = iter.next().ok_or("--max-rank needs a value")?;
                max_rank = Some(value.parse().map_err(|_| format!("bad rank {value:?}"))?);
            }
            "--json" => json = true,
            other => return Err(format!("unexpected argument {other:?}")),
        }
    }
    let max_rank = max_rank.ok_or("classify requires --max-rank")?;
    let out = cmd_classify(max_rank, json).map_err(|e| e.to_string())?;
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn inspect(args: &[String]) -> Result<ExitCode, String> {
    let positional: Vec<&String> = args.iter().filter(|a| *a != "--json").collect();
    let json = args.iter().any(|a| a == "--json");
    if positional.len() != 4 {
        return Err("inspect takes TYPE RANK ALPHA BETA".into());
    }
    let series: Series = positional[0].parse()?;
    let parse = |s: &str| s.parse::<usize>().map_err(|_| format!("bad number {s:?}"));
    let rank = parse(positional[1])?;
    let alpha = parse(positional[2])?;
    let beta = parse(positional[3])?;
    let out = cmd_inspect(series, rank, alpha, beta, json).map_err(|e| e.to_string())?;
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}
