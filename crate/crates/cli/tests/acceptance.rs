//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use genex_core::suites::{run_suite, suite_limits, SuiteResult};

struct Criterion {
    number: u8,
    suite: &'static str,
    title: &'static str,
    extra: fn(&SuiteResult, Duration) -> Result<(), String>,
}

fn none(_: &SuiteResult, _: Duration) -> Result<(), String> {
    Ok(())
}

fn count(res: &SuiteResult, prefix: &str) -> usize {
    res.cases.iter().filter(|c| c.id.starts_with(prefix)).count()
}

fn oracle(res: &SuiteResult, t: Duration) -> Result<(), String> {
    let groups = res.cases.iter().filter(|c| c.id != "coverage").count();
    if groups < 20 {
        return Err(format!("only {groups} groups"));
    }
    if t > Duration::from_secs(600) {
        return Err(format!("took {t:?}"));
    }
    Ok(())
}

fn a6(_: &SuiteResult, t: Duration) -> Result<(), String> {
    if t > Duration::from_secs(300) {
        return Err(format!("took {t:?}"));
    }
    Ok(())
}

fn density(res: &SuiteResult, t: Duration) -> Result<(), String> {
    let s5 = count(res, "S5#");
    if s5 < 3 {
        return Err(format!("only {s5} S5 lift pairs"));
    }
    let pairs = res.cases.iter().filter(|c| c.id.contains('#')).count().max(1) as u32;
    if t / pairs > Duration::from_secs(120) {
        return Err(format!("{:?} per lift pair", t / pairs));
    }
    Ok(())
}

fn replacement(res: &SuiteResult, _: Duration) -> Result<(), String> {
    for g in ["S5#", "A5wrC2#"] {
        let n = count(res, g);
        if n < 10 {
            return Err(format!("only {n} tuples for {}", g.trim_end_matches('#')));
        }
    }
    Ok(())
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, suite: "mgse-oracle", title: "exchange property: fast decision equals brute force", extra: oracle },
    Criterion { number: 2, suite: "mgse-solvable", title: "solvable classification agrees with brute force", extra: none },
    Criterion { number: 3, suite: "mgse-nonsolvable", title: "non-solvable groups fail the exchange property", extra: none },
    Criterion { number: 4, suite: "mgse-quotient", title: "exchange property passes to quotients", extra: none },
    Criterion { number: 5, suite: "a6-flexibility", title: "Aut(A6): two non-flexible maximals, orders 40 and 144", extra: a6 },
    Criterion { number: 6, suite: "an-flexibility", title: "A_n, S_n (n = 5, 7, 8): every maximal is flexible", extra: none },
    Criterion { number: 7, suite: "d-bounds", title: "D_M(G) >= d - 2 and the d - 1 cases", extra: none },
    Criterion { number: 8, suite: "d-solvable", title: "D(G) = d(G) - 1 for solvable groups", extra: none },
    Criterion { number: 9, suite: "density-5390", title: "generation density at least 53/90", extra: density },
    Criterion { number: 10, suite: "lemma-replacement", title: "socle corrections exist in H~", extra: replacement },
    Criterion { number: 11, suite: "dmax-formula", title: "d(G) = max(2, d(G/N))", extra: none },
    Criterion { number: 12, suite: "engine", title: "chain orders, Frattini and lattice against oracles", extra: none },
];

fn main() -> ExitCode {
    let limits = suite_limits();
    let mut passed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(c.suite, &limits);
        let t = start.elapsed();
        match outcome {
            Ok(res) => {
                let failures: Vec<_> = res.failures().collect();
                let extra = (c.extra)(&res, t);
                let ok = res.passed && extra.is_ok();
                passed += usize::from(ok);
                println!(
                    "criterion {:2} {:<18} {}  {} cases, {} failed, {} skipped, {:.1}s  {}",
                    c.number,
                    c.suite,
                    if ok { "PASS" } else { "FAIL" },
                    res.cases.len(),
                    failures.len(),
                    res.skipped.len(),
                    t.as_secs_f64(),
                    c.title,
                );
                for s in &res.skipped {
                    println!("    skipped: {s}");
                }
                for f in failures {
                    println!("    failed: {} | {} | {}", f.id, f.details, f.witness.as_deref().unwrap_or("-"));
                }
                if let Err(e) = extra {
                    println!("    requirement not met: {e}");
                }
            }
            Err(e) => println!("criterion {:2} {:<18} FAIL  error: {e}", c.number, c.suite),
        }
    }
    println!("acceptance: {passed}/{} criteria pass", CRITERIA.len());
    if passed == CRITERIA.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
