use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use closurelab::automata::format::{dfa_to_dot, parse_automaton, write_dfa};
use closurelab::closures::{downward_closure, upward_closure};
use closurelab::experiments::{
    alpha_search, build_sqrt_dividing_family, default_seed, reports_to_csv, run_suite,
    AlphaOptions, Report, SuiteConfig, SUITES,
};
use closurelab::families;
use closurelab::roots::{kth_root, star_root};
use closurelab::sre::{alphabet_for, sre_normalize, sre_residuals, sre_to_lang};
use closurelab::substitution::{substitute, SubstitutionMap};
use closurelab::{Alphabet, Error, Lang, Letter, Sre, Word};

/// Closures, roots and substitutions of regular languages, with the
/// state-complexity experiments built on them.
///
/// A <LANG> argument is one of: a path to an automaton in the text format,
/// `-` for such an automaton on stdin, `sre:<expr>` for a simple regular
/// expression, `down:<word>` for ↓(word) or `up:<word>` for ↑(word).
/// Write the empty word as `-`.
#[derive(Parser)]
#[command(name = "closurelab", version)]
struct Cli {
    /// Alphabet for every <LANG>, e.g. `abc`; inferred from the input if
    /// absent.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the state complexity κ(L).
    Kappa { lang: String },
    /// Print the canonical DFA of ↓(L) or ↑(L).
    Closure {
        #[command(flatten)]
        dir: ClosureDir,
        lang: String,
    },
    /// Print the canonical DFA of the k-th root or the star root of L.
    Root {
        #[command(flatten)]
        kind: RootKind,
        lang: String,
    },
    /// Print the canonical DFA of L with each mapped letter substituted.
    Subst {
        /// `a=<LANG>`; repeat for several letters.
        #[arg(long = "map", required = true, value_name = "LETTER=LANG")]
        maps: Vec<String>,
        lang: String,
    },
    /// Print the canonical DFA of the left quotient L/x.
    Quotient {
        #[arg(long, value_name = "WORD")]
        by: String,
        lang: String,
    },
    /// Normalize a simple regular expression, or list its residuals or DFA.
    Sre {
        expr: String,
        #[arg(long, conflicts_with = "residuals")]
        to_dfa: bool,
        #[arg(long)]
        residuals: bool,
    },
    /// Exhaustive search for α(1), ..., α(max-n).
    Alpha {
        #[arg(long)]
        max_n: usize,
        /// Also measure words with two or more letters occurring once.
        #[arg(long)]
        no_prune: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Build and verify the dividing sets F_1, ..., F_n.
    Divset {
        #[arg(long)]
        n: usize,
    },
    /// Run a registered suite, or `all`, and print its report.
    Verify {
        suite: String,
        /// Defaults to CLOSURELAB_SEED, then to a fixed seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Largest n for the alpha suites.
        #[arg(long, default_value_t = 9)]
        alpha_max_n: usize,
        /// Random pairs examined by hunt-singular.
        #[arg(long, default_value_t = 1000)]
        hunt_budget: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Write the canonical DFA of L in DOT format.
    Dot {
        lang: String,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ClosureDir {
    #[arg(long)]
    down: bool,
    #[arg(long)]
    up: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RootKind {
    #[arg(long, value_name = "INT")]
    k: Option<usize>,
    #[arg(long)]
    star: bool,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(text: &str) -> Result<Word, Error> {
    if text == "-" {
        Ok(Word::empty())
    } else {
        text.parse()
    }
}

struct Loader {
    alphabet: Option<Alphabet>,
}

impl Loader {
    fn new(alphabet: Option<&str>) -> Result<Self, Error> {
        Ok(Loader {
            alphabet: alphabet.map(Alphabet::parse).transpose()?,
        })
    }

    fn load(&self, source: &str) -> Result<Lang, Error> {
        let (lang, inferred) = if let Some(text) = source.strip_prefix("sre:") {
            let e: Sre = text.parse()?;
            let sigma = self
                .alphabet
                .clone()
                .unwrap_or_else(|| alphabet_for(&e.letters()));
            (sre_to_lang(&e, &sigma)?, true)
        } else if let Some(text) = source.strip_prefix("down:") {
            let w = parse_word(text)?;
            let sigma = self
                .alphabet
                .clone()
                .unwrap_or_else(|| Alphabet::of_word(&w));
            (Lang::down_word(&sigma, &w)?, true)
        } else if let Some(text) = source.strip_prefix("up:") {
            let w = parse_word(text)?;
            let sigma = self
                .alphabet
                .clone()
                .unwrap_or_else(|| Alphabet::of_word(&w));
            (Lang::up_word(&sigma, &w)?, true)
        } else {
            let text = if source == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?
            };
            (Lang::from_nfa(&parse_automaton(&text)?), false)
        };
        match &self.alphabet {
            Some(sigma) if !inferred => lang.extend_alphabet(sigma),
            _ => Ok(lang),
        }
    }
}

fn print_lang(l: &Lang) {
    println!("# kappa: {}", l.kappa());
    print!("{}", write_dfa(l.dfa()));
}

fn show_word(w: &Word) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.to_string()
    }
}

fn run(cli: Cli) -> Result<Status, Error> {
    let loader = Loader::new(cli.alphabet.as_deref())?;
    match cli.command {
        Command::Kappa { lang } => println!("{}", loader.load(&lang)?.kappa()),
        Command::Closure { dir, lang } => {
            let l = loader.load(&lang)?;
            print_lang(&if dir.down {
                downward_closure(&l)
            } else {
                upward_closure(&l)
            });
        }
        Command::Root { kind, lang } => {
            let l = loader.load(&lang)?;
            let r = match kind.k {
                Some(k) => kth_root(&l, k)?,
                None => star_root(&l),
            };
            print_lang(&r);
        }
        Command::Subst { maps, lang } => {
            let mut images: Vec<(Letter, Lang)> = Vec::new();
            for m in &maps {
                let (letter, source) = m.split_once('=').ok_or_else(|| {
                    Error::InvalidParameter(format!("--map expects LETTER=LANG, got {m:?}"))
                })?;
                images.push((letter.parse()?, loader.load(source)?));
            }
            let mut l = loader.load(&lang)?;
            if loader.alphabet.is_none() {
                let sources = Alphabet::new(images.iter().map(|(a, _)| *a))?;
                l = l.extend_alphabet(&l.alphabet().union(&sources))?;
            }
            let mut rho = SubstitutionMap::identity(l.alphabet());
            for (a, k) in images {
                rho.set(a, k)?;
            }
            print_lang(&substitute(&l, &rho)?);
        }
        Command::Quotient { by, lang } => {
            let l = loader.load(&lang)?;
            let x = parse_word(&by)?;
            if let Some(bad) = x.letters().iter().find(|a| !l.alphabet().contains(**a)) {
                return Err(Error::LetterOutsideAlphabet(bad.to_string()));
            }
            print_lang(&l.residual(&x));
        }
        Command::Sre {
            expr,
            to_dfa,
            residuals,
        } => {
            let e: Sre = expr.parse()?;
            let sigma = loader
                .alphabet
                .clone()
                .unwrap_or_else(|| alphabet_for(&e.letters()));
            if to_dfa {
                print_lang(&sre_to_lang(&e, &sigma)?);
            } else if residuals {
                for (x, r) in sre_residuals(&e, &sigma)? {
                    println!("{}\t{r}", show_word(&x));
                }
            } else {
                println!("{}", sre_normalize(&e));
            }
        }
        Command::Alpha {
            max_n,
            no_prune,
            jobs,
        } => {
            if max_n == 0 {
                return Err(Error::InvalidParameter("--max-n must be >= 1".into()));
            }
            let opts = AlphaOptions {
                prune_singletons: !no_prune,
                jobs,
            };
            println!("n\talpha\tbound\tmeasured\tpruned\twitnesses");
            let mut ok = true;
            for level in alpha_search(max_n, opts) {
                let c = families::c(level.m);
                let bound = c * c - c + 3;
                ok &= level.alpha <= bound;
                let witnesses: Vec<String> = level.witnesses.iter().map(show_word).collect();
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    level.m,
                    level.alpha,
                    bound,
                    level.examined,
                    level.pruned,
                    witnesses.join(" ")
                );
            }
            if !ok {
                return Ok(Status::CheckFailed);
            }
        }
        Command::Divset { n } => match build_sqrt_dividing_family(n) {
            Ok(family) => {
                for (i, set) in family.iter().enumerate() {
                    let words: Vec<String> = set.words.iter().map(show_word).collect();
                    println!(
                        "F_{}\tsize {}\tkappa {}\t{}",
                        i + 1,
                        set.words.len(),
                        set.target.kappa(),
                        words.join(" ")
                    );
                }
            }
            Err(Error::DividingSetFailed(k)) => {
                eprintln!("F_{k} is not a dividing set");
                return Ok(Status::CheckFailed);
            }
            Err(e) => return Err(e),
        },
        Command::Verify {
            suite,
            seed,
            json,
            csv,
            alpha_max_n,
            hunt_budget,
            jobs,
        } => {
            let cfg = SuiteConfig {
                seed: seed.unwrap_or_else(default_seed),
                alpha_max_n,
                hunt_budget,
                jobs,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports: Vec<Report> = Vec::new();
            for name in names {
                let r = run_suite(name, &cfg)?;
                print!("{}", r.to_table());
                reports.push(r);
            }
            if let Some(path) = json {
                let text = if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    serde_json::to_string_pretty(&reports).expect("reports are serializable")
                };
                write(&path, &text)?;
            }
            if let Some(path) = csv {
                let text = if reports.len() == 1 {
                    reports[0].to_csv()?
                } else {
                    reports_to_csv(&reports)?
                };
                write(&path, &text)?;
            }
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.suite.as_str())
                .collect();
            if reports.len() > 1 {
                println!(
                    "{} of {} suites passed",
                    reports.len() - failed.len(),
                    reports.len()
                );
            }
            if !failed.is_empty() {
                eprintln!("failed: {}", failed.join(", "));
                return Ok(Status::CheckFailed);
            }
        }
        Command::Dot { lang, out } => {
            let l = loader.load(&lang)?;
            write(&out, &dfa_to_dot(l.dfa()))?;
        }
    }
    Ok(Status::Ok)
}

fn write(path: &PathBuf, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
