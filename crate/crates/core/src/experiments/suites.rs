//! The registered verification suites. Each suite fills a [`Report`] with
//! one row per checked instance; random suites add a summary row followed
//! by at most twenty failing cases.

use std::collections::HashSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::alpha::{alpha_search, canonical_words, sqrt_down_kappa, AlphaOptions};
use super::dividing::{build_sqrt_dividing_family, verify_dividing_set};
use super::gen::{
    random_down_lang, random_lang, random_product, random_sre, random_up_lang, random_word,
};
use super::hunt::{hunt_counterexample, singular_kappas, Conjecture};
use super::report::Report;
use super::{rng_for, SuiteConfig};
use crate::automata::Lang;
use crate::closures::{
    closure, downward_closure, is_closed, minimal_generators, upward_closure, Direction,
};
use crate::error::{Error, Result};
use crate::families;
use crate::roots::{kth_root, star_root};
use crate::sre::{
    product_to_lang, render_sre, sre_normalize, sre_quotient, sre_residuals, sre_substitute,
    sre_to_lang, subst_quotient_rule, Atom, Product, Sre,
};
use crate::substitution::{substitute, substitute_single, Factorizer, SubstitutionMap};
use crate::word::{conjugates, cut_shuffle, is_subword, Alphabet, Letter, Word};

pub const SUITES: &[&str] = &[
    "kappa-down-word",
    "sqrt-down-Wn",
    "sqrt-up-lower",
    "cs-generators",
    "dividing-family",
    "subst-2n",
    "subst-product-lower",
    "subst-word",
    "subst-disjoint-bound",
    "subst-product-bound",
    "subst-commutation",
    "psi-factorization",
    "lk-tight",
    "closure-axioms",
    "root-preserves-closure",
    "conjugate-characterization",
    "sre-oracle",
    "alpha",
    "hunt-singular",
    "hunt-alpha",
];

/// Runs one suite. Library errors inside a suite become a failing row, so
/// the only error is an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let start = Instant::now();
    let mut report = match name {
        "hunt-singular" => {
            hunt_counterexample(Conjecture::SingularSubstBound, cfg.hunt_budget, cfg.seed)
        }
        "hunt-alpha" => hunt_counterexample(Conjecture::AlphaBound, cfg.alpha_max_n, cfg.seed),
        _ => {
            let mut report = Report::new(name, cfg.seed);
            let body = match name {
                "kappa-down-word" => kappa_down_word(&mut report, cfg),
                "sqrt-down-Wn" => sqrt_down_wn(&mut report),
                "sqrt-up-lower" => sqrt_up_lower(&mut report),
                "cs-generators" => cs_generators(&mut report),
                "dividing-family" => dividing_family(&mut report),
                "subst-2n" => subst_2n(&mut report),
                "subst-product-lower" => subst_product_lower(&mut report),
                "subst-word" => subst_word(&mut report, cfg),
                "subst-disjoint-bound" => subst_disjoint_bound(&mut report, cfg),
                "subst-product-bound" => subst_product_bound(&mut report, cfg),
                "subst-commutation" => subst_commutation(&mut report, cfg),
                "psi-factorization" => psi_factorization(&mut report, cfg),
                "lk-tight" => lk_tight(&mut report),
                "closure-axioms" => closure_axioms(&mut report, cfg),
                "root-preserves-closure" => root_preserves_closure(&mut report, cfg),
                "conjugate-characterization" => conjugate_characterization(&mut report),
                "sre-oracle" => sre_oracle(&mut report, cfg),
                "alpha" => alpha(&mut report, cfg),
                _ => unreachable!("checked against SUITES"),
            };
            if let Err(e) = body {
                report.row("suite aborted", format!("error: {e}"), "completion", false);
            }
            report
        }
    };
    report.suite = name.to_string();
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Every registered suite, in registration order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<Report> {
    SUITES
        .iter()
        .map(|name| run_suite(name, cfg).expect("registered suite"))
        .collect()
}

type Outcome = Result<Option<String>>;

/// Evaluates `count` independent random cases in parallel. Case `i` of
/// block `block` always sees the same generator.
fn random_cases<F>(seed: u64, block: u64, count: usize, case: F) -> Vec<Outcome>
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync + Send,
{
    (0..count)
        .into_par_iter()
        .map(|i| case(&mut rng_for(seed, (block << 32) | i as u64)))
        .collect()
}

fn tally(report: &mut Report, label: &str, outcomes: Vec<Outcome>) {
    let total = outcomes.len();
    let failures: Vec<(usize, String)> = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(i, o)| match o {
            Ok(None) => None,
            Ok(Some(msg)) => Some((i, msg)),
            Err(e) => Some((i, format!("error: {e}"))),
        })
        .collect();
    report.row(
        label,
        format!("{} violations in {total} cases", failures.len()),
        "0 violations",
        failures.is_empty(),
    );
    for (i, msg) in failures.iter().take(20) {
        report.row(format!("{label}, case {i}"), msg, "no violation", false);
    }
}

fn violation(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(msg()) })
}

fn show_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn show(l: &Lang) -> String {
    let words: Vec<String> = l.sample(5).iter().map(show_word).collect();
    format!(
        "{{{}, ...}} over {} (kappa {})",
        words.join(","),
        l.alphabet(),
        l.kappa()
    )
}

fn letter_words(s: &Alphabet) -> Vec<Word> {
    std::iter::once(Word::empty())
        .chain(s.letters().iter().map(|&a| Word::from_letters([a])))
        .collect()
}

fn sigma(n: usize) -> Result<Alphabet> {
    Alphabet::first(n)
}

fn kappa_down_word(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 200)
        .param("max_len", 12)
        .param("alphabet_sizes", "1..=4");
    for text in ["", "a", "ab", "abc", "abca", "aaaa"] {
        let w: Word = text.parse()?;
        let k = Lang::down_word(&Alphabet::of_word(&w), &w)?.kappa();
        report.row(
            format!("w={}", show_word(&w)),
            k,
            w.len() + 2,
            k == w.len() + 2,
        );
    }
    let outcomes = random_cases(cfg.seed, 1, 200, |rng| {
        let s = sigma(rng.gen_range(1..=4))?;
        let w = random_word(rng, &s, 0, 12);
        let k = Lang::down_word(&s, &w)?.kappa();
        violation(k == w.len() + 2, || {
            format!(
                "w={} over {s}: kappa {k}, expected {}",
                show_word(&w),
                w.len() + 2
            )
        })
    });
    tally(report, "random words", outcomes);
    Ok(())
}

fn sqrt_down_wn(report: &mut Report) -> Result<()> {
    for n in 1..=5 {
        let w = families::w(n)?;
        let root = kth_root(&Lang::down_word(&sigma(n)?, &w)?, 2)?;
        let expected = n * n - n + 3;
        report.row(
            format!("n={n} W_n={w}"),
            root.kappa(),
            expected,
            root.kappa() == expected,
        );
    }
    Ok(())
}

fn sqrt_up_lower(report: &mut Report) -> Result<()> {
    let mut observed = Vec::new();
    for n in 1..=4 {
        let up = Lang::up_word(&sigma(n)?, &families::v(n)?)?;
        let bound = 1usize << n;
        for k in [2, 3] {
            let kappa = kth_root(&up, k)?.kappa();
            if k == 2 {
                observed.push(serde_json::json!({
                    "n": n,
                    "kappa": kappa,
                    "three_pow_n_minus_1": 3usize.pow(n as u32 - 1),
                }));
            }
            report.row(
                format!("n={n} k={k}"),
                kappa,
                format!(">= {bound}"),
                kappa >= bound,
            );
        }
        let kappa = star_root(&up).kappa();
        report.row(
            format!("n={n} star"),
            kappa,
            format!(">= {bound}"),
            kappa >= bound,
        );
    }
    // growth of the square root next to 3^(n-1), logged only
    report.param("sqrt_up_v_growth", observed);
    Ok(())
}

fn cs_generators(report: &mut Report) -> Result<()> {
    for n in 1..=5 {
        let s = sigma(n)?;
        let v = families::v(n)?;
        let cs = cut_shuffle(&v);
        let expected = (1usize << n) - n;
        report.row(
            format!("n={n} |CS(V_n)|"),
            cs.len(),
            expected,
            cs.len() == expected,
        );
        let root = kth_root(&Lang::up_word(&s, &v)?, 2)?;
        let generated = upward_closure(&Lang::words(&s, cs.iter())?);
        let same = generated == root;
        report.row(
            format!("n={n} up(CS(V_n)) vs sqrt(up V_n)"),
            if same { "equal" } else { "different" },
            "equal",
            same,
        );
        let mut gens = minimal_generators(&root)?;
        gens.sort();
        let expected_gens: Vec<Word> = cs.iter().cloned().collect();
        let mut expected_gens = expected_gens;
        expected_gens.sort();
        report.row(
            format!("n={n} minimal generators"),
            format!("{} words", gens.len()),
            format!("CS(V_n), {} words", expected_gens.len()),
            gens == expected_gens,
        );
    }
    Ok(())
}

fn dividing_family(report: &mut Report) -> Result<()> {
    let family = match build_sqrt_dividing_family(5) {
        Ok(f) => f,
        Err(e) => {
            report.row("F_1..F_5", format!("error: {e}"), "all dividing", false);
            return Ok(());
        }
    };
    let sizes: Vec<usize> = family.iter().map(|f| f.words.len()).collect();
    report.param("sizes", sizes.clone());
    for (i, set) in family.iter().enumerate() {
        let n = i + 1;
        let check = verify_dividing_set(&set.target, &set.words)?;
        let kappa = set.target.kappa();
        report.row(
            format!("F_{n} dividing for sqrt(up V_{n})"),
            format!(
                "|F|={} dividing={} kappa={kappa}",
                set.words.len(),
                check.dividing
            ),
            "dividing, |F| <= kappa",
            check.dividing && set.words.len() <= kappa,
        );
        let bound = 0.46 * 2.41f64.powi(n as i32);
        report.row(
            format!("|F_{n}| growth"),
            set.words.len(),
            format!(">= {bound:.3}"),
            set.words.len() as f64 >= bound,
        );
        if n >= 3 {
            let need = 2 * sizes[n - 2] + sizes[n - 3] - 1;
            report.row(
                format!("|F_{n}| recurrence"),
                sizes[n - 1],
                format!(">= 2*{} + {} - 1 = {need}", sizes[n - 2], sizes[n - 3]),
                sizes[n - 1] >= need,
            );
        }
    }
    // subwords of V_n are identified by their letter sets
    for n in 1..=4 {
        let v = families::v(n)?;
        let root = kth_root(&Lang::up_word(&sigma(n)?, &v)?, 2)?;
        let subwords: Vec<Word> = (0u32..1 << n)
            .map(|mask| {
                Word::from_letters(
                    v.letters()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &l)| l),
                )
            })
            .collect();
        let residuals: Vec<Lang> = subwords.iter().map(|x| root.residual(x)).collect();
        let mut pairs = 0;
        let mut clashes = Vec::new();
        for i in 0..subwords.len() {
            for j in i + 1..subwords.len() {
                pairs += 1;
                if residuals[i] == residuals[j] {
                    clashes.push(format!(
                        "{}~{}",
                        show_word(&subwords[i]),
                        show_word(&subwords[j])
                    ));
                }
            }
        }
        report.row(
            format!("n={n} subwords of V_n with different alphabets"),
            format!("{} equal residual pairs of {pairs}", clashes.len()),
            "0 equal pairs",
            clashes.is_empty(),
        );
    }
    Ok(())
}

fn subst_2n(report: &mut Report) -> Result<()> {
    for n in 1..=5 {
        let s = sigma(n)?;
        let base = Lang::words(&s, letter_words(&s).iter())?;
        let mut rho = SubstitutionMap::identity(&s);
        for i in 1..=n {
            rho.set(Letter(i as u16 - 1), families::a_i(n, i)?)?;
        }
        let kappa = substitute(&base, &rho)?.kappa();
        report.row(format!("n={n}"), kappa, 1usize << n, kappa == 1 << n);
    }
    Ok(())
}

fn subst_product_lower(report: &mut Report) -> Result<()> {
    for n in 1..=3usize {
        let s = sigma(n)?;
        let base = Lang::words(&s, letter_words(&s).iter())?;
        for code in 0..3usize.pow(n as u32) {
            let ms: Vec<usize> = (0..n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
            let mut rho = SubstitutionMap::identity(&s);
            for (i, &m) in ms.iter().enumerate() {
                rho.set(Letter(i as u16), families::a_ij(n, i + 1, m)?)?;
            }
            let kappa = substitute(&base, &rho)?.kappa();
            let expected: usize = ms.iter().map(|m| m + 2).product();
            report.row(
                format!("n={n} m={ms:?}"),
                kappa,
                expected,
                kappa == expected,
            );
        }
    }
    Ok(())
}

fn subst_word(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 100)
        .param("u_alphabet", "abc")
        .param("v_alphabet", "abcd");
    let outcomes = random_cases(cfg.seed, 2, 100, |rng| {
        let su = sigma(3)?;
        let sv = sigma(4)?;
        let a = Letter(0);
        let u = random_word(rng, &su, 0, 8);
        let v = random_word(rng, &sv, 0, 5);
        let r = substitute_single(&Lang::down_word(&su, &u)?, a, &Lang::down_word(&sv, &v)?)?;
        let na = u.count(a);
        let expected = u.len() - na + na * v.len() + 2;
        let replaced = Word::from_letters(u.letters().iter().flat_map(|&l| {
            if l == a {
                v.letters().to_vec()
            } else {
                vec![l]
            }
        }));
        let direct = Lang::down_word(r.alphabet(), &replaced)?;
        violation(r.kappa() == expected && r == direct, || {
            format!(
                "u={} v={}: kappa {}, expected {expected}, equals down(u[a:=v]): {}",
                show_word(&u),
                show_word(&v),
                r.kappa(),
                r == direct
            )
        })
    });
    tally(
        report,
        "kappa(down u^{a<-down v}) = |u| - |u|_a + |u|_a|v| + 2",
        outcomes,
    );
    Ok(())
}

fn subst_disjoint_bound(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 1000)
        .param("l_alphabet", "a.. (1..=3 letters)")
        .param("k_alphabet", "d.. (1..=3 letters)")
        .param(
            "measured_over",
            "L, K over their union; image over its letters",
        );
    let worst = std::sync::Mutex::new(0.0f64);
    let outcomes = random_cases(cfg.seed, 3, 1000, |rng| {
        let sl = sigma(rng.gen_range(1..=3))?;
        let sk = Alphabet::new((0..rng.gen_range(1..=3u16)).map(|i| Letter(3 + i)))?;
        let l = random_down_lang(rng, &sl);
        let k = random_down_lang(rng, &sk);
        let a = *sl.letters().choose(rng).unwrap();
        let (kr, kl, kk) = singular_kappas(&l, a, &k)?;
        let ratio = kr as f64 / (kl * kk) as f64;
        let mut w = worst.lock().unwrap();
        *w = w.max(ratio);
        violation(kr <= kl * kk, || {
            format!(
                "L={} K={} a={a}: kappa {kr} > {kl}*{kk}",
                show(&l),
                show(&k)
            )
        })
    });
    tally(report, "kappa(L^{a<-K}) <= kappa(L) kappa(K)", outcomes);
    report.param(
        "max_ratio",
        (worst.into_inner().unwrap() * 1e4).round() / 1e4,
    );
    Ok(())
}

fn subst_product_bound(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 1000)
        .param("alphabet_sizes", "2..=3")
        .param("max_atoms", 5)
        .param(
            "measured_over",
            "L, K over their union; image over its letters",
        );
    let outcomes = random_cases(cfg.seed, 4, 1000, |rng| {
        let s = sigma(rng.gen_range(2..=3))?;
        let p = random_product(rng, &s, 5);
        let k = random_down_lang(rng, &s);
        let a = *s.letters().choose(rng).unwrap();
        let i = product_to_lang(&p, &s)?;
        let (kr, ki, kk) = singular_kappas(&i, a, &k)?;
        violation(kr <= ki * kk, || {
            format!("I={p} K={} a={a}: kappa {kr} > {ki}*{kk}", show(&k))
        })
    });
    tally(report, "kappa(I^{a<-K}) <= kappa(K) kappa(I)", outcomes);
    Ok(())
}

/// A random product over `{a,b,c}` whose star atoms avoid `a`.
fn product_without_a_star(rng: &mut ChaCha8Rng, s: &Alphabet) -> Product {
    let a = Letter(0);
    loop {
        let p = random_product(rng, s, 5);
        if !p
            .0
            .iter()
            .any(|atom| matches!(atom, Atom::Star(b) if b.contains(&a)))
        {
            return p;
        }
    }
}

fn residual_set(l: &Lang) -> HashSet<Lang> {
    l.residuals().into_iter().map(|(_, r)| r).collect()
}

fn subst_commutation(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 200)
        .param("letter", "a")
        .param("K", "letters(I) + 1");
    let a = Letter(0);
    let outcomes = random_cases(cfg.seed, 5, 200, |rng| {
        let p = product_without_a_star(rng, &sigma(3)?);
        let s = Alphabet::new(p.letters().into_iter().chain([a]))?;
        let i = product_to_lang(&p, &s)?;
        let k_words: Vec<Word> = std::iter::once(Word::empty())
            .chain(p.letters().into_iter().map(|l| Word::from_letters([l])))
            .collect();
        let k = Lang::words(&s, k_words.iter())?;
        let image = substitute_single(&i, a, &k)?;
        let lhs = residual_set(&image);
        let rhs: HashSet<Lang> = residual_set(&i)
            .iter()
            .map(|q| substitute_single(q, a, &k))
            .collect::<Result<_>>()?;
        violation(lhs == rhs, || {
            format!("I={p}: |R(rho I)|={} |rho(R(I))|={}", lhs.len(), rhs.len())
        })
    });
    tally(report, "R(rho(I)) = rho(R(I))", outcomes);

    // pointwise failure for I = down(abc)
    let s = sigma(3)?;
    let i = Lang::down_word(&s, &"abc".parse()?)?;
    let k = Lang::words(&s, letter_words(&s).iter())?;
    let image = substitute_single(&i, a, &k)?;
    let b: Word = "b".parse()?;
    let left = image.residual(&b);
    let right = substitute_single(&i.residual(&b), a, &k)?;
    let bc = Lang::down_word(&s, &"bc".parse()?)?;
    let c = Lang::down_word(&s, &"c".parse()?)?;
    report.row("I=down(abc): rho(I)/b", show(&left), "down(bc)", left == bc);
    report.row("I=down(abc): rho(I/b)", show(&right), "down(c)", right == c);
    let same = residual_set(&image)
        == residual_set(&i)
            .iter()
            .map(|q| substitute_single(q, a, &k))
            .collect::<Result<HashSet<_>>>()?;
    report.row(
        "I=down(abc): R(rho(I)) vs rho(R(I))",
        format!("{} classes, equal: {same}", residual_set(&image).len()),
        "equal",
        same,
    );

    // closure commutes with substitution by non-empty languages
    let outcomes = random_cases(cfg.seed, 6, 200, |rng| {
        let s = sigma(2)?;
        let sk = Alphabet::new([Letter(1), Letter(2)])?;
        let n = rng.gen_range(1..=4);
        let l = random_lang(rng, &s, n);
        let n = rng.gen_range(1..=3);
        let mut k = random_lang(rng, &sk, n);
        while k.is_empty() {
            let n = rng.gen_range(1..=3);
            k = random_lang(rng, &sk, n);
        }
        let lhs = downward_closure(&substitute_single(&l, a, &k)?);
        let rhs = substitute_single(&downward_closure(&l), a, &downward_closure(&k))?;
        violation(lhs == rhs, || format!("L={} K={}", show(&l), show(&k)))
    });
    tally(report, "down(rho(L)) = rho_down(down L)", outcomes);
    Ok(())
}

fn psi_factorization(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 200)
        .param("l_alphabet", "a.. (2..=3)")
        .param("k_alphabet", "d.. (1..=2)");
    let residual_count = std::sync::atomic::AtomicUsize::new(0);
    let outcomes = random_cases(cfg.seed, 7, 200, |rng| {
        let sl = sigma(rng.gen_range(2..=3))?;
        let sk = Alphabet::new((0..rng.gen_range(1..=2u16)).map(|i| Letter(3 + i)))?;
        let l = random_down_lang(rng, &sl);
        let mut k = random_down_lang(rng, &sk);
        while k.is_empty() {
            k = random_down_lang(rng, &sk);
        }
        let a = *sl.letters().choose(rng).unwrap();
        let f = Factorizer::new(&l, a, &k)?;
        let residuals = f.image().residuals();
        residual_count.fetch_add(residuals.len(), std::sync::atomic::Ordering::Relaxed);
        for (x, r) in residuals {
            let (p, q) = match f.factor(&x) {
                Ok(pq) => pq,
                Err(e) => {
                    return Ok(Some(format!(
                        "L={} K={} a={a} x={}: {e}",
                        show(&l),
                        show(&k),
                        show_word(&x)
                    )))
                }
            };
            // a non-empty residual only factors through non-empty P and Q
            if !r.is_empty() && (p.is_empty() || q.is_empty()) {
                return Ok(Some(format!(
                    "x={}: non-empty residual with an empty factor",
                    show_word(&x)
                )));
            }
        }
        Ok(None)
    });
    tally(report, "every residual of rho(L) is P.rho(Q)", outcomes);
    report.param("residuals_factored", residual_count.into_inner());
    Ok(())
}

fn lk_tight(report: &mut Report) -> Result<()> {
    for n in 1..=5 {
        let l = families::l_n(n)?;
        for k in 1..=5 {
            let kappa = l.power(k)?.kappa();
            let expected = k * (n - 1) + 1;
            report.row(format!("n={n} k={k}"), kappa, expected, kappa == expected);
        }
    }
    Ok(())
}

fn closure_axioms(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 500)
        .param("alphabet_sizes", "1..=3")
        .param("max_states", 5);
    let random_pair = |rng: &mut ChaCha8Rng| -> Result<(Alphabet, Lang, Lang)> {
        let s = sigma(rng.gen_range(1..=3))?;
        let (nl, nm) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let l = random_lang(rng, &s, nl);
        let m = random_lang(rng, &s, nm);
        Ok((s, l, m))
    };
    for (block, dir) in [(8, Direction::Down), (9, Direction::Up)] {
        let outcomes = random_cases(cfg.seed, block, 500, |rng| {
            let (s, l, m) = random_pair(rng)?;
            let cl = closure(&l, dir);
            let mut broken = Vec::new();
            if !l.is_subset(&cl)? {
                broken.push("extensive");
            }
            if closure(&cl, dir) != cl {
                broken.push("idempotent");
            }
            if closure(&l.union(&m)?, dir) != cl.union(&closure(&m, dir))? {
                broken.push("additive");
            }
            if !closure(&Lang::empty(&s), dir).is_empty() {
                broken.push("empty");
            }
            violation(broken.is_empty(), || {
                format!("L={} M={}: {}", show(&l), show(&m), broken.join(", "))
            })
        });
        tally(report, &format!("{dir:?} closure axioms"), outcomes);
    }
    let outcomes = random_cases(cfg.seed, 10, 500, |rng| {
        let (s, l, _) = random_pair(rng)?;
        let mut broken = Vec::new();
        for x in [l.clone(), downward_closure(&l), upward_closure(&l)] {
            if is_closed(&x, Direction::Down) != is_closed(&x.complement(), Direction::Up) {
                broken.push("down/complement-up");
            }
            if is_closed(&x, Direction::Up) != is_closed(&x.complement(), Direction::Down) {
                broken.push("up/complement-down");
            }
        }
        if upward_closure(&l) != l.shuffle(&Lang::universal(&s))? {
            broken.push("up(L) = L shuffle sigma*");
        }
        violation(broken.is_empty(), || {
            format!("L={}: {}", show(&l), broken.join(", "))
        })
    });
    tally(report, "duality and up(L) = L shuffle sigma*", outcomes);
    Ok(())
}

fn root_preserves_closure(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 500)
        .param("alphabet_sizes", "1..=3")
        .param("k", "2..=3 and star");
    let outcomes = random_cases(cfg.seed, 11, 500, |rng| {
        let s = sigma(rng.gen_range(1..=3))?;
        let k = rng.gen_range(2..=3);
        let down = random_down_lang(rng, &s);
        let up = random_up_lang(rng, &s, 5);
        let mut broken = Vec::new();
        if !is_closed(&kth_root(&down, k)?, Direction::Down) {
            broken.push(format!("{k}-th root of {}", show(&down)));
        }
        if !is_closed(&star_root(&down), Direction::Down) {
            broken.push(format!("star root of {}", show(&down)));
        }
        if !is_closed(&kth_root(&up, k)?, Direction::Up) {
            broken.push(format!("{k}-th root of {}", show(&up)));
        }
        if !is_closed(&star_root(&up), Direction::Up) {
            broken.push(format!("star root of {}", show(&up)));
        }
        violation(broken.is_empty(), || broken.join("; "))
    });
    tally(report, "roots of closed languages are closed", outcomes);
    Ok(())
}

fn conjugate_characterization(report: &mut Report) -> Result<()> {
    for n in 1..=5 {
        let s = sigma(n)?;
        let v = families::v(n)?;
        let root = kth_root(&Lang::down_word(&s, &families::w(n)?)?, 2)?;
        let conj = conjugates(&v);
        let via_conj = downward_closure(&Lang::words(&s, conj.iter())?);
        report.row(
            format!("n={n} sqrt(down W_n) vs down(conjugates of V_n)"),
            if root == via_conj {
                "equal"
            } else {
                "different"
            },
            "equal",
            root == via_conj,
        );
        let max_len = n + 1;
        let words = s.words_up_to(max_len);
        let mismatches = words
            .iter()
            .filter(|x| root.contains(x) != conj.iter().any(|c| is_subword(x, c)))
            .count();
        report.row(
            format!("n={n} words up to length {max_len}"),
            format!("{mismatches} mismatches in {}", words.len()),
            "0 mismatches",
            mismatches == 0,
        );
    }
    Ok(())
}

fn sre_oracle(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    report
        .param("cases", 500)
        .param("alphabet", "abc")
        .param("shape", "<= 3 products of <= 4 atoms");
    let outcomes = random_cases(cfg.seed, 12, 500, |rng| {
        let s = sigma(3)?;
        let e = random_sre(rng, &s, 3, 4);
        let x = random_word(rng, &s, 0, 3);
        let lang = sre_to_lang(&e, &s)?;
        let q = sre_to_lang(&sre_quotient(&e, &x), &s)?;
        violation(q == lang.residual(&x), || {
            format!("E={e} x={}", show_word(&x))
        })
    });
    tally(report, "sre_quotient vs residual", outcomes);

    let outcomes = random_cases(cfg.seed, 13, 500, |rng| {
        let s = sigma(3)?;
        let e = random_sre(rng, &s, 3, 4);
        let count = sre_residuals(&e, &s)?.len();
        let kappa = sre_to_lang(&e, &s)?.kappa();
        violation(count == kappa, || {
            format!("E={e}: {count} residuals, kappa {kappa}")
        })
    });
    tally(report, "|sre_residuals(E)| = kappa", outcomes);

    let outcomes = random_cases(cfg.seed, 14, 500, |rng| {
        let s = sigma(3)?;
        let e = random_sre(rng, &s, 3, 4);
        let k = random_sre(rng, &s, 2, 3);
        let a = *s.letters().choose(rng).unwrap();
        let symbolic = sre_to_lang(&sre_substitute(&e, a, &k), &s)?;
        let backend = substitute_single(&sre_to_lang(&e, &s)?, a, &sre_to_lang(&k, &s)?)?
            .extend_alphabet(&s)?;
        violation(symbolic == backend, || format!("E={e} K={k} a={a}"))
    });
    tally(report, "sre_substitute vs automata", outcomes);

    let outcomes = random_cases(cfg.seed, 15, 500, |rng| {
        let s = sigma(3)?;
        let e = random_sre(rng, &s, 3, 4);
        let k = random_sre(rng, &s, 2, 3);
        let a = *s.letters().choose(rng).unwrap();
        let b = *s.letters().choose(rng).unwrap();
        let rule = sre_to_lang(&subst_quotient_rule(&e, &k, a, b), &s)?;
        let image = substitute_single(&sre_to_lang(&e, &s)?, a, &sre_to_lang(&k, &s)?)?
            .extend_alphabet(&s)?;
        violation(rule == image.residual(&Word::from_letters([b])), || {
            format!("E={e} K={k} a={a} b={b}")
        })
    });
    tally(report, "subst_quotient_rule vs automata", outcomes);

    // L = down(ab) + down(ba), K = down(bbc) over {a,b,c}
    let s = sigma(3)?;
    let l: Sre = "a?b? + b?a?".parse()?;
    let k: Sre = "b?b?c?".parse()?;
    let rule = subst_quotient_rule(&l, &k, Letter(0), Letter(1));
    let expected = sre_normalize(&"b?c?b? + b?b?c?".parse()?);
    report.row(
        "L=down(ab)+down(ba), K=down(bbc): rho(L)/b",
        render_sre(&rule),
        render_sre(&expected),
        rule == expected,
    );
    let image = substitute_single(&sre_to_lang(&l, &s)?, Letter(0), &sre_to_lang(&k, &s)?)?;
    let agrees = image.residual(&"b".parse()?) == sre_to_lang(&expected, &s)?;
    report.row(
        "same, through automata",
        if agrees {
            "down(bcb) + down(bbc)"
        } else {
            "different"
        },
        "down(bcb) + down(bbc)",
        agrees,
    );
    Ok(())
}

fn alpha(report: &mut Report, cfg: &SuiteConfig) -> Result<()> {
    let max_n = cfg.alpha_max_n.max(1);
    report.param("max_n", max_n).param("prune_singletons", true);
    let levels = alpha_search(
        max_n,
        AlphaOptions {
            prune_singletons: true,
            jobs: cfg.jobs,
        },
    );
    let values: Vec<usize> = levels.iter().map(|l| l.alpha).collect();
    report.param("alpha", values.clone());
    for level in &levels {
        let m = level.m;
        let c = families::c(m);
        let bound = c * c - c + 3;
        let witnesses: Vec<String> = level.witnesses.iter().take(4).map(show_word).collect();
        report.row(
            format!("n={m} alpha <= c^2 - c + 3"),
            format!(
                "alpha={} ({} words, {} pruned, witnesses {})",
                level.alpha,
                level.examined,
                level.pruned,
                witnesses.join(" ")
            ),
            format!("<= {bound}"),
            level.alpha <= bound,
        );
        let u = families::u(m)?;
        let ku = sqrt_down_kappa(&u);
        report.row(
            format!("n={m} U_n={u} attains alpha"),
            ku,
            level.alpha,
            ku == level.alpha,
        );
    }
    for m in 1..values.len() {
        report.row(
            format!("alpha({m}) <= alpha({})", m + 1),
            format!("{} vs {}", values[m - 1], values[m]),
            "non-decreasing",
            values[m - 1] <= values[m],
        );
        if m + 1 < values.len() {
            report.row(
                format!("alpha({m}) < alpha({})", m + 2),
                format!("{} vs {}", values[m - 1], values[m + 1]),
                "strictly increasing",
                values[m - 1] < values[m + 1],
            );
        }
    }
    let check_n = max_n.min(7);
    let full = alpha_search(
        check_n,
        AlphaOptions {
            prune_singletons: false,
            jobs: cfg.jobs,
        },
    );
    let agree = full
        .iter()
        .zip(&levels)
        .all(|(f, p)| f.alpha == p.alpha && f.witnesses == p.witnesses);
    report.row(
        format!("pruned vs unpruned, n <= {check_n}"),
        if agree { "agree" } else { "differ" },
        "agree",
        agree,
    );
    let total: usize = (0..=check_n).map(|m| canonical_words(m).len()).sum();
    report.param("unpruned_words_checked", total);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SuiteConfig {
        SuiteConfig {
            seed: 11,
            alpha_max_n: 6,
            hunt_budget: 40,
            jobs: 0,
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            run_suite("nope", &cfg()),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn fast_suites_pass() {
        for name in [
            "kappa-down-word",
            "sqrt-down-Wn",
            "lk-tight",
            "subst-2n",
            "conjugate-characterization",
        ] {
            let r = run_suite(name, &cfg()).unwrap();
            assert_eq!(r.suite, name);
            assert!(r.pass, "{}", r.to_table());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suite("kappa-down-word", &cfg()).unwrap();
        let b = run_suite("kappa-down-word", &cfg()).unwrap();
        assert_eq!(a.to_json_untimed(), b.to_json_untimed());
    }
}
