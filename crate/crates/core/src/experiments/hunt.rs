//! Randomized searches for counterexamples to the two open bounds. A hunt
//! never confirms a bound; it only reports what it looked at and fails if
//! it finds a violation.

use std::time::Instant;

use rayon::prelude::*;

use super::alpha::{alpha_search, sqrt_down_kappa, AlphaOptions};
use super::gen::random_down_lang;
use super::report::Report;
use super::rng_for;
use crate::automata::Lang;
use crate::error::Result;
use crate::families;
use crate::substitution::substitute_single;
use crate::word::{Alphabet, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// `κ(L^{a←K}) ≤ κ(L)κ(K)` for downward closed `L`, `K` over a shared
    /// alphabet.
    SingularSubstBound,
    /// `α(n) ≤ c(n)² − c(n) + 3`.
    AlphaBound,
}

impl Conjecture {
    pub fn name(self) -> &'static str {
        match self {
            Conjecture::SingularSubstBound => "singular-subst-bound",
            Conjecture::AlphaBound => "alpha-bound",
        }
    }
}

/// For [`Conjecture::SingularSubstBound`] `budget` is the number of random
/// pairs; for [`Conjecture::AlphaBound`] it is the largest word length.
pub fn hunt_counterexample(conjecture: Conjecture, budget: usize, seed: u64) -> Report {
    let start = Instant::now();
    let mut report = Report::new(&format!("hunt-{}", conjecture.name()), seed);
    report.param("budget", budget);
    if budget > 0 {
        match conjecture {
            Conjecture::SingularSubstBound => hunt_subst(&mut report, budget, seed),
            Conjecture::AlphaBound => hunt_alpha(&mut report, budget),
        }
    }
    report.seconds = start.elapsed().as_secs_f64();
    report
}

/// State complexity over the letters the language actually uses; a
/// language using no letter (`∅` or `{ε}`) has a single state.
pub fn kappa_over_used(l: &Lang) -> Result<usize> {
    let used = l.used_letters();
    if used.is_empty() {
        return Ok(1);
    }
    Ok(l.restrict_alphabet(&Alphabet::new(used)?)?.kappa())
}

/// `(κ(L^{a←K}), κ(L), κ(K))`. `L` and `K` are measured over the union
/// of their alphabets, the image over the letters it uses, which for
/// downward closed inputs is `Σ(L) ∖ {a} ∪ Σ(K)`.
pub fn singular_kappas(l: &Lang, a: Letter, k: &Lang) -> Result<(usize, usize, usize)> {
    let all = l.alphabet().union(k.alphabet());
    let image = substitute_single(l, a, k)?;
    Ok((
        kappa_over_used(&image)?,
        l.extend_alphabet(&all)?.kappa(),
        k.extend_alphabet(&all)?.kappa(),
    ))
}

struct Case {
    image: usize,
    l: usize,
    k: usize,
    desc: String,
}

impl Case {
    fn ratio(&self) -> f64 {
        self.image as f64 / (self.l * self.k) as f64
    }
}

fn hunt_subst(report: &mut Report, budget: usize, seed: u64) {
    let cases: Vec<Case> = (0..budget)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i as u64);
            let n = 2 + i % 2;
            let sigma = Alphabet::first(n).unwrap();
            let l = random_down_lang(&mut rng, &sigma);
            let k = random_down_lang(&mut rng, &sigma);
            let a = Letter((i / 2 % n) as u16);
            let (kr, kl, kk) = singular_kappas(&l, a, &k).expect("a in sigma");
            let desc = format!(
                "L={:?} K={:?} a={a}",
                l.sample(4)
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>(),
                k.sample(4)
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
            );
            Case {
                image: kr,
                l: kl,
                k: kk,
                desc,
            }
        })
        .collect();
    let worst = cases
        .iter()
        .enumerate()
        .max_by(|(i, x), (j, y)| x.ratio().total_cmp(&y.ratio()).then(j.cmp(i)))
        .map(|(i, c)| (i, c.ratio()))
        .unwrap();
    let violations: Vec<(usize, &Case)> = cases
        .iter()
        .enumerate()
        .filter(|(_, c)| c.image > c.l * c.k)
        .collect();
    report.param("alphabet_sizes", "2..=3");
    report.param(
        "measured_over",
        "L, K over their union; image over its letters",
    );
    report.row(
        format!("{budget} random pairs"),
        format!("max ratio {:.4} (case {})", worst.1, worst.0),
        "max ratio <= 1",
        violations.is_empty(),
    );
    for (i, c) in violations.into_iter().take(20) {
        report.row(
            format!("case {i}: {}", c.desc),
            format!("kappa(rho(L)) = {}", c.image),
            format!("<= {} * {}", c.l, c.k),
            false,
        );
    }
}

fn hunt_alpha(report: &mut Report, max_n: usize) {
    for level in alpha_search(max_n, AlphaOptions::default()) {
        let c = families::c(level.m);
        let bound = c * c - c + 3;
        report.row(
            format!("n={}", level.m),
            format!("alpha={}", level.alpha),
            format!("<= {bound}"),
            level.alpha <= bound,
        );
    }
    // U_n beyond the exhaustive range, as a spot check of the formula
    for n in max_n + 1..=max_n + 3 {
        let u = families::u(n).unwrap();
        let c = families::c(n);
        let bound = c * c - c + 3;
        let k = sqrt_down_kappa(&u);
        report.row(
            format!("U_{n}={u}"),
            format!("kappa={k}"),
            format!("<= {bound}"),
            k <= bound,
        );
    }
}
