use closurelab::experiments::gen::random_word;
use closurelab::experiments::{rng_for, run_all, run_suite, SuiteConfig, SUITES};
use closurelab::{Alphabet, Error, Word};

fn cfg(seed: u64) -> SuiteConfig {
    SuiteConfig {
        seed,
        alpha_max_n: 7,
        hunt_budget: 200,
        jobs: 0,
    }
}

#[test]
fn every_registered_suite_passes() {
    let reports = run_all(&cfg(5));
    assert_eq!(reports.len(), SUITES.len());
    for (r, name) in reports.iter().zip(SUITES) {
        assert_eq!(&r.suite, name);
        assert!(!r.rows.is_empty(), "{name} has no rows");
        assert!(r.pass, "{}", r.to_table());
    }
}

#[test]
fn same_seed_same_report() {
    for name in [
        "subst-disjoint-bound",
        "closure-axioms",
        "sre-oracle",
        "hunt-singular",
    ] {
        let a = run_suite(name, &cfg(17)).unwrap();
        let b = run_suite(name, &cfg(17)).unwrap();
        assert_eq!(a.to_json_untimed(), b.to_json_untimed(), "{name}");
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap(), "{name}");
    }
}

#[test]
fn seed_reaches_the_cases() {
    let a = run_suite("kappa-down-word", &cfg(1)).unwrap();
    let b = run_suite("kappa-down-word", &cfg(2)).unwrap();
    assert_eq!(a.seed, 1);
    assert_eq!(b.seed, 2);
    let sigma = Alphabet::first(3).unwrap();
    let words = |seed| -> Vec<Word> {
        let mut rng = rng_for(seed, 0);
        (0..8)
            .map(|_| random_word(&mut rng, &sigma, 4, 8))
            .collect()
    };
    assert_eq!(words(1), words(1));
    assert_ne!(words(1), words(2));
}

#[test]
fn fixed_values() {
    let r = run_suite("sqrt-down-Wn", &cfg(0)).unwrap();
    let measured: Vec<&str> = r.rows.iter().map(|row| row.measured.as_str()).collect();
    assert_eq!(measured, ["3", "5", "9", "15", "23"]);
    let r = run_suite("lk-tight", &cfg(0)).unwrap();
    assert_eq!(r.rows.len(), 25);
    let r = run_suite("subst-product-lower", &cfg(0)).unwrap();
    assert_eq!(r.rows.len(), 3 + 9 + 27);
}

#[test]
fn unknown_suite() {
    assert!(matches!(
        run_suite("no-such-suite", &cfg(0)),
        Err(Error::UnknownSuite(name)) if name == "no-such-suite"
    ));
}
