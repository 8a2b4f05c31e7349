//! Acceptance run: every criterion maps to one or more suites, which must
//! all pass within the criterion's time limit. Prints one line per
//! criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use closurelab::experiments::{run_suite, Report, SuiteConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [&'static str],
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "kappa(down w) = |w| + 2 on 200 random words",
        suites: &["kappa-down-word"],
        limit: secs(5),
    },
    Criterion {
        id: 2,
        title: "kappa(sqrt(down W_n)) = n^2 - n + 3, n <= 5",
        suites: &["sqrt-down-Wn"],
        limit: secs(30),
    },
    Criterion {
        id: 3,
        title: "k-th and star roots of up(V_n) have >= 2^n states",
        suites: &["sqrt-up-lower"],
        limit: secs(60),
    },
    Criterion {
        id: 4,
        title: "CS(V_n) generates sqrt(up V_n) minimally, n <= 5",
        suites: &["cs-generators"],
        limit: secs(60),
    },
    Criterion {
        id: 5,
        title: "dividing family F_n for sqrt(up V_n), n <= 5",
        suites: &["dividing-family"],
        limit: secs(60),
    },
    Criterion {
        id: 6,
        title: "exact substitution state counts",
        suites: &["subst-2n", "subst-product-lower", "subst-word"],
        limit: secs(60),
    },
    Criterion {
        id: 7,
        title: "singular substitution bounds on 2 x 1000 random pairs",
        suites: &["subst-disjoint-bound", "subst-product-bound"],
        limit: secs(120),
    },
    Criterion {
        id: 8,
        title: "symbolic SRE engine agrees with automata",
        suites: &["sre-oracle"],
        limit: secs(60),
    },
    Criterion {
        id: 9,
        title: "every residual of rho(L) factors as P.rho(Q)",
        suites: &["psi-factorization"],
        limit: secs(60),
    },
    Criterion {
        id: 10,
        title: "residual sets commute with rho for products",
        suites: &["subst-commutation"],
        limit: secs(30),
    },
    Criterion {
        id: 11,
        title: "alpha(n) for n <= 9: monotone, bounded, attained by U_n",
        suites: &["alpha"],
        limit: secs(600),
    },
    Criterion {
        id: 12,
        title: "kappa(L_n^k) = k(n-1) + 1 for n, k <= 5",
        suites: &["lk-tight"],
        limit: secs(10),
    },
    Criterion {
        id: 13,
        title: "closure axioms and closure preservation by roots",
        suites: &["closure-axioms", "root-preserves-closure"],
        limit: secs(60),
    },
];

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    println!("acceptance run, seed {}", cfg.seed);
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let reports: Vec<Report> = c
            .suites
            .iter()
            .map(|name| run_suite(name, &cfg).expect("registered suite"))
            .collect();
        let elapsed = start.elapsed();
        let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
        let bad_rows: usize = reports.iter().map(|r| r.failures().count()).sum();
        let in_time = elapsed <= c.limit;
        let pass = in_time && rows > 0 && reports.iter().all(|r| r.pass);
        println!(
            "[{}] {:>2}. {} ({} rows, {} failed, {:.2}s, limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            rows,
            bad_rows,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        if !pass {
            failed += 1;
            if !in_time {
                println!("      over the time limit");
            }
            for r in reports.iter().filter(|r| !r.pass) {
                print!("{}", r.to_table());
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
