mod commands;
mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use genex_core::suites::suite_limits;
use genex_core::Limits;

use commands::Method;
use output::Format;

/// Exact computations on finite permutation groups: generating sets, the
/// exchange property, flexibility and generation densities.
#[derive(Parser, Debug)]
#[command(name = "genex", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest group order for subgroup-lattice operations.
    #[arg(long, global = true)]
    max_order: Option<u128>,
    /// Largest degree for coset actions and products.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basic invariants of a group.
    Info { group: String },
    /// d(G) with a generating witness.
    Dgen { group: String },
    /// Decide the exchange property for minimal generating sets.
    Mgse {
        group: String,
        #[arg(long, value_enum, default_value_t = Method::Opt)]
        method: Method,
    },
    /// D_M(G) for one subgroup or every maximal class.
    #[command(group(ArgGroup::new("which").args(["subgroup", "all_maximal"])))]
    Dmetrics {
        group: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        all_maximal: bool,
    },
    /// Flexibility of subgroups of a monolithic group K.
    #[command(group(ArgGroup::new("mode").args(["subgroup", "scan"])))]
    Flexible {
        k: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        scan: bool,
    },
    /// Primitive type and socle intersection of every maximal class.
    ClassifyMaximal { group: String },
    /// Exact density of generating socle corrections of a lift tuple.
    Density { group: String, socle: String, lifts_file: String },
    /// Socle corrections for the first two elements of a tuple in a wreath product.
    Replace { group: String, gens_file: String, subgroup: String },
    /// Run a named verification suite.
    Verify { suite: String },
}

fn run(cli: &Cli) -> genex_core::Result<output::Report> {
    let mut limits = match cli.command {
        Command::Verify { .. } => suite_limits(),
        _ => Limits::default(),
    };
    if let Some(m) = cli.max_order {
        limits.max_order = m;
    }
    if let Some(m) = cli.max_degree {
        limits.max_degree = m;
    }
    match &cli.command {
        Command::Info { group } => commands::info(group, &limits),
        Command::Dgen { group } => commands::dgen(group, &limits),
        Command::Mgse { group, method } => commands::mgse(group, *method, &limits),
        Command::Dmetrics { group, subgroup, .. } => commands::dmetrics(group, subgroup.as_deref(), &limits),
        Command::Flexible { k, subgroup, scan } => commands::flexible(k, subgroup.as_deref(), *scan, &limits),
        Command::ClassifyMaximal { group } => commands::classify(group, &limits),
        Command::Density { group, socle, lifts_file } => commands::density(group, socle, lifts_file, &limits),
        Command::Replace { group, gens_file, subgroup } => commands::replace(group, gens_file, subgroup, &limits),
        Command::Verify { suite } => commands::verify(suite, &limits),
    }
}

fn error_code(e: &genex_core::Error) -> u8 {
    if e.is_bound() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("genex: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.status.code())
        }
        Err(e) => {
            eprintln!("genex: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn exec(args: &[&str]) -> (u8, String) {
        let cli = Cli::try_parse_from([&["genex"], args].concat()).unwrap();
        match run(&cli) {
            Ok(r) => (r.status.code(), r.render(cli.format)),
            Err(e) => (error_code(&e), e.to_string()),
        }
    }

    fn json(args: &[&str]) -> (u8, Value) {
        let (code, out) = exec(&[args, &["--format", "json"]].concat());
        (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
    }

    #[test]
    fn usage_errors() {
        let e = Cli::try_parse_from(["genex", "frobnicate"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = Cli::try_parse_from(["genex", "flexible", "S5", "--scan", "--subgroup", "S4"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert_eq!(exec(&["info", "builtin:Nope"]).0, 2);
        assert_eq!(exec(&["verify", "no-such-suite"]).0, 2);
    }

    #[test]
    fn bound_errors() {
        assert_eq!(exec(&["classify-maximal", "S8"]).0, 3);
        assert_eq!(exec(&["dmetrics", "S5", "--max-order", "100"]).0, 3);
    }

    #[test]
    fn mgse_verdicts() {
        let (code, v) = json(&["mgse", "builtin:Q8"]);
        assert_eq!((code, &v["holds"]), (0, &Value::Bool(true)));
        let (code, v) = json(&["mgse", "builtin:A5", "--method", "both"]);
        assert_eq!(code, 0);
        assert_eq!(v["holds"], false);
        assert!(v["records"].as_array().unwrap().iter().all(|r| r["verified"] == true));
    }

    #[test]
    fn a6_scan() {
        let (code, out) = exec(&["flexible", "AutA6", "--scan", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"{2,10}; {4}\"") && out.contains("\"{2,6}; {4}; {8}\""), "{out}");
        let (code, v) = json(&["verify", "a6-flexibility"]);
        assert_eq!((code, &v["passed"]), (0, &Value::Bool(true)));
    }

    #[test]
    fn failing_claims_exit_one() {
        // F20 is a maximal subgroup of S5 that is not flexible.
        let (code, v) = json(&["flexible", "S5", "--subgroup", "F20"]);
        assert_eq!((code, &v["flexible"]), (0, &Value::Bool(false)));
        let (code, v) = json(&["verify", "an-flexibility"]);
        assert_eq!(code, 1);
        let failed: Vec<&str> = v["records"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["pass"] == false)
            .map(|r| r["id"].as_str().unwrap())
            .collect();
        assert_eq!(failed, vec!["S5/M15(order 20)"]);
    }
}
