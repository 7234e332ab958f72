//! Full report for one pair, selected on the command line:
//!
//! ```text
//! cargo run --example inspect_pair -- B 3 1 3
//! ```
//!
//! Defaults to (G2, a2, a1) when no arguments are given.

use horospherical::report::cmd_inspect;
use horospherical::{Result, Series};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (series, rank, alpha, beta) = if args.len() == 4 {
        let series: Series = args[0].parse().expect("series letter A..G");
        let parse = |s: &String| s.parse::<usize>().expect("positive integer");
        (series, parse(&args[1]), parse(&args[2]), parse(&args[3]))
    } else {
        (Series::G, 2, 2, 1)
    };
    print!("{}", cmd_inspect(series, rank, alpha, beta, false)?);
    Ok(())
}
