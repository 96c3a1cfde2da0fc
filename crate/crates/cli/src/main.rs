use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use liecx::checks::{self, CheckOutcome};
use liecx::complexity::complexity_lie;
use liecx::freelie::{action_matrix, lie_module_rep, lyndon_basis, normal_form, BracketTree};
use liecx::growth::{family_report, gamma_estimate, lower_bound_family, shift_series, FamilySpec};
use liecx::oracle::{
    cohomology_dims_with, decomposition_fit_with, tor_dims_with, Capacity, GModuleRep,
};
use liecx::words::{dimension_series, enumerate_words};
use liecx::{Composition, Error, Perm, Prime};

#[derive(Parser)]
#[command(
    name = "liecx",
    version,
    about = "Homology of symmetric groups with Lie-module coefficients"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Largest group order the oracle will build.
    #[arg(long, default_value_t = 1000, global = true)]
    capacity_group_order: usize,

    /// Largest F_p-dimension of a resolution term.
    #[arg(long, default_value_t = 5000, global = true)]
    capacity_width: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Word-count dimension series.
    Dims {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(long = "max")]
        m_max: u64,
    },
    /// Admissible words in one homology degree.
    Words {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        degree: u64,
    },
    /// Growth-rate estimate of a word-count series.
    Gamma {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(long = "max")]
        m_max: u64,
        /// Suspend the series this many times first.
        #[arg(long, default_value_t = 0)]
        shift: usize,
    },
    /// Explicit lower-bound family of words.
    Family {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        x: u64,
    },
    /// The Lie module: basis, straightening, or action matrices.
    Lie {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 2)]
        p: u32,
        /// Permutation in cycle notation, e.g. "(1 2)(3 4)".
        #[arg(long, conflicts_with = "tree")]
        perm: Option<String>,
        /// Bracketing such as "[[1,2],3]".
        #[arg(long)]
        tree: Option<String>,
    },
    /// Oracle homology (or cohomology) of a Young subgroup.
    Oracle {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        lambda: Composition,
        #[arg(long, value_enum, default_value_t = ModuleKind::Lie)]
        module: ModuleKind,
        #[arg(long = "max")]
        m_max: usize,
        #[arg(long)]
        cohomology: bool,
    },
    /// Complexity of Lie(n).
    Complexity {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        p: u32,
        /// Re-estimate each growth rate from word counts.
        #[arg(long)]
        audited: bool,
        #[arg(long)]
        m_max: Option<u64>,
    },
    /// Verification checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Lie,
    Trivial,
    Sign,
    Natural,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// The full acceptance suite.
    All {
        /// Desk-scale parameters (the only suite there is).
        #[arg(long)]
        small: bool,
    },
    /// Fit oracle homology by word-count series.
    Decomposition {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: u32,
        #[arg(long)]
        lambda: Composition,
        #[arg(long = "max")]
        m_max: usize,
    },
    /// Word counts against the oracle for Σ_{p^r}.
    Oracle {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(long = "max")]
        m_max: usize,
    },
    /// Vanishing homology of Lie(n) over Σ_{n-1}.
    Freeness {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: u32,
        #[arg(long = "max", default_value_t = 4)]
        m_max: usize,
    },
    /// Cohomology against homology of the dual on random modules.
    Duality {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        lambda: Composition,
        #[command(flatten)]
        sample: Sample,
        #[arg(long = "max", default_value_t = 4)]
        m_max: usize,
    },
    /// Minimal resolution against the bar complex.
    Resolution {
        #[arg(short)]
        p: u32,
        #[arg(long)]
        lambda: Composition,
        #[arg(long = "max", default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// One lower-bound family.
    Family {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        x: u64,
    },
    /// Action homomorphism and straightening on random samples.
    Lie {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: u32,
        #[command(flatten)]
        sample: Sample,
    },
}

#[derive(Args)]
struct Sample {
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Check,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, (Failure, Option<String>)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("LIECX_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // ignore failure: a pool may already exist
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    let cap = Capacity {
        group_order: cli.capacity_group_order,
        width: cli.capacity_width,
        ..Capacity::default()
    };
    let result = run(&cli, &cap);
    let mut out = std::io::stdout().lock();
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err((failure, text)) => {
            if let Some(text) = text {
                let _ = out.write_all(text.as_bytes());
            }
            match failure {
                Failure::Check => ExitCode::from(1),
                Failure::Lib(e) => {
                    eprintln!("liecx: {e}");
                    ExitCode::from(match e {
                        Error::Capacity { .. } => 3,
                        _ => 2,
                    })
                }
            }
        }
    }
}

fn prime(p: u32) -> Result<Prime, Error> {
    Prime::new(p)
}

fn lib<T>(r: Result<T, Error>) -> Result<T, (Failure, Option<String>)> {
    r.map_err(|e| (Failure::Lib(e), None))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

fn run(cli: &Cli, cap: &Capacity) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Dims { p, r, m_max } => {
            let series = lib(prime(*p).and_then(|p| dimension_series(p, *r, *m_max)))?;
            Ok(series_text(&series, fmt))
        }
        Command::Words { p, r, degree } => {
            let p = lib(prime(*p))?;
            let words = enumerate_words(p, *r, *degree);
            #[derive(Serialize)]
            struct WordOut {
                text: String,
                s: Vec<u64>,
                eps: Vec<u8>,
            }
            #[derive(Serialize)]
            struct WordsOut {
                p: Prime,
                r: usize,
                degree: u64,
                count: usize,
                words: Vec<WordOut>,
            }
            let list: Vec<WordOut> = words
                .into_iter()
                .map(|w| WordOut {
                    text: w.to_string(),
                    s: w.s,
                    eps: w.eps,
                })
                .collect();
            Ok(match fmt {
                Format::Json => json(&WordsOut {
                    p,
                    r: *r,
                    degree: *degree,
                    count: list.len(),
                    words: list,
                }),
                Format::Csv => csv_table(
                    &["word", "s", "eps"],
                    list.into_iter()
                        .map(|w| vec![w.text, join(&w.s), join(&w.eps)]),
                ),
            })
        }
        Command::Gamma { p, r, m_max, shift } => {
            let series = lib(prime(*p).and_then(|p| dimension_series(p, *r, *m_max)))?;
            let series = shift_series(&series, *shift);
            let est = lib(gamma_estimate(&series))?;
            Ok(match fmt {
                Format::Json => json(&est),
                Format::Csv => csv_table(
                    &["gamma", "slope", "window_lo", "window_hi", "note"],
                    [vec![
                        est.gamma.to_string(),
                        est.slope.to_string(),
                        est.window.0.to_string(),
                        est.window.1.to_string(),
                        est.confidence_note.clone(),
                    ]],
                ),
            })
        }
        Command::Family { p, r, x } => {
            let spec = lib(prime(*p).and_then(|p| FamilySpec::new(p, *r, *x)))?;
            let report = lib(family_report(&spec))?;
            let words = lower_bound_family(&spec);
            Ok(match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct FamilyOut<'a> {
                        report: &'a liecx::growth::FamilyReport,
                        words: Vec<Vec<u64>>,
                    }
                    json(&FamilyOut {
                        report: &report,
                        words: words.into_iter().map(|w| w.s).collect(),
                    })
                }
                Format::Csv => {
                    let header: Vec<String> = (1..=*r).map(|j| format!("s{j}")).collect();
                    let header: Vec<&str> = header.iter().map(String::as_str).collect();
                    csv_table(
                        &header,
                        words
                            .into_iter()
                            .map(|w| w.s.iter().map(u64::to_string).collect()),
                    )
                }
            })
        }
        Command::Lie { n, p, perm, tree } => lie(*n, *p, perm.as_deref(), tree.as_deref(), fmt),
        Command::Oracle {
            p,
            lambda,
            module,
            m_max,
            cohomology,
        } => {
            let p = lib(prime(*p))?;
            let m = match module {
                ModuleKind::Lie => lib(lie_module_rep(lambda.total(), p, lambda))?,
                ModuleKind::Trivial => GModuleRep::trivial(p, lambda.clone()),
                ModuleKind::Sign => GModuleRep::sign(p, lambda.clone()),
                ModuleKind::Natural => GModuleRep::natural(p, lambda.clone()),
            };
            let series = if *cohomology {
                lib(cohomology_dims_with(lambda, p, &m, *m_max, cap))?
            } else {
                lib(tor_dims_with(lambda, p, &m, *m_max, cap))?
            };
            Ok(series_text(&series, fmt))
        }
        Command::Complexity {
            n,
            p,
            audited,
            m_max,
        } => {
            let rep = lib(prime(*p).and_then(|p| complexity_lie(*n, p, *audited, *m_max)))?;
            let text = match fmt {
                Format::Json => json(&rep),
                Format::Csv => csv_table(
                    &["r", "gamma", "matches"],
                    rep.per_r
                        .iter()
                        .map(|e| vec![e.r.to_string(), e.gamma.to_string(), e.matches.to_string()]),
                ),
            };
            if rep.consistent() {
                Ok(text)
            } else {
                Err((Failure::Check, Some(text)))
            }
        }
        Command::Check { what } => check(what, cap, fmt),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn series_text(series: &liecx::DimSeries, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let mut s = series.to_json();
            s.push('\n');
            s
        }
        Format::Csv => series.to_csv(),
    }
}

fn lie(n: usize, p: u32, perm: Option<&str>, tree: Option<&str>, fmt: Format) -> Outcome {
    let p = lib(prime(p))?;
    if let Some(text) = perm {
        let sigma = lib(Perm::parse_cycles(n, text))?;
        let m = lib(action_matrix(n, p, &sigma))?;
        return Ok(match fmt {
            Format::Json => json(&m.to_rows()),
            Format::Csv => {
                let header: Vec<String> = (0..m.cols()).map(|j| format!("c{j}")).collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                csv_table(
                    &header,
                    m.to_rows()
                        .into_iter()
                        .map(|r| r.iter().map(u32::to_string).collect()),
                )
            }
        });
    }
    if let Some(text) = tree {
        let t: BracketTree = lib(text.parse())?;
        let nf = lib(normal_form(&t, n, p))?;
        let basis = lib(lyndon_basis(n))?;
        let terms: Vec<(String, u32)> = nf
            .coeffs
            .iter()
            .map(|(&i, &c)| (basis[i].to_string(), c))
            .collect();
        return Ok(match fmt {
            Format::Json => {
                #[derive(Serialize)]
                struct Term {
                    basis: String,
                    coefficient: u32,
                }
                #[derive(Serialize)]
                struct NormalForm {
                    input: String,
                    p: Prime,
                    terms: Vec<Term>,
                }
                json(&NormalForm {
                    input: t.to_string(),
                    p,
                    terms: terms
                        .into_iter()
                        .map(|(basis, coefficient)| Term { basis, coefficient })
                        .collect(),
                })
            }
            Format::Csv => csv_table(
                &["basis", "coefficient"],
                terms.into_iter().map(|(b, c)| vec![b, c.to_string()]),
            ),
        });
    }
    let basis = lib(lyndon_basis(n))?;
    let texts: Vec<String> = basis.iter().map(|t| t.to_string()).collect();
    Ok(match fmt {
        Format::Json => json(&texts),
        Format::Csv => csv_table(
            &["index", "bracketing"],
            texts
                .into_iter()
                .enumerate()
                .map(|(i, t)| vec![i.to_string(), t]),
        ),
    })
}

fn outcomes_text(outcomes: &[CheckOutcome], fmt: Format) -> String {
    match fmt {
        Format::Json => json(&outcomes),
        Format::Csv => csv_table(
            &["id", "name", "passed", "detail"],
            outcomes.iter().map(|o| {
                vec![
                    o.id.to_string(),
                    o.name.clone(),
                    o.passed.to_string(),
                    o.detail.clone(),
                ]
            }),
        ),
    }
}

fn finish(outcomes: Vec<CheckOutcome>, fmt: Format) -> Outcome {
    for o in &outcomes {
        eprintln!("{} ({:.2}s)", o.line(), o.elapsed.as_secs_f64());
    }
    let text = outcomes_text(&outcomes, fmt);
    if outcomes.iter().all(|o| o.passed) {
        Ok(text)
    } else {
        Err((Failure::Check, Some(text)))
    }
}

fn check(what: &CheckCommand, cap: &Capacity, fmt: Format) -> Outcome {
    let single = |o: Result<CheckOutcome, Error>| -> Outcome { finish(vec![lib(o)?], fmt) };
    match what {
        CheckCommand::All { small: _ } => {
            let outcomes: Vec<CheckOutcome> = (1..=checks::COUNT)
                .into_par_iter()
                .filter_map(checks::run)
                .collect();
            finish(outcomes, fmt)
        }
        CheckCommand::Decomposition {
            n,
            p,
            lambda,
            m_max,
        } => {
            let fit =
                lib(prime(*p).and_then(|p| decomposition_fit_with(*n, p, lambda, *m_max, cap)))?;
            let text = match fmt {
                Format::Json => {
                    let mut s = fit.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => csv_table(
                    &["m", "oracle", "fitted"],
                    (0..=fit.m_max).map(|m| {
                        vec![
                            m.to_string(),
                            fit.oracle_dims[m].to_string(),
                            fit.fitted[m].to_string(),
                        ]
                    }),
                ),
            };
            if fit.exact {
                Ok(text)
            } else {
                Err((Failure::Check, Some(text)))
            }
        }
        CheckCommand::Oracle { p, r, m_max } => {
            single(prime(*p).and_then(|p| checks::check_oracle(p, *r, *m_max)))
        }
        CheckCommand::Freeness { n, p, m_max } => {
            single(prime(*p).and_then(|p| checks::check_freeness(*n, p, *m_max)))
        }
        CheckCommand::Duality {
            p,
            lambda,
            sample,
            m_max,
        } => single(
            prime(*p)
                .and_then(|p| checks::check_duality(lambda, p, sample.count, *m_max, sample.seed)),
        ),
        CheckCommand::Resolution {
            p,
            lambda,
            m_max,
            seed,
        } => {
            single(prime(*p).and_then(|p| checks::check_resolution(lambda, p, *m_max, *seed, cap)))
        }
        CheckCommand::Family { p, r, x } => {
            single(prime(*p).and_then(|p| checks::check_family(p, *r, *x)))
        }
        CheckCommand::Lie { n, p, sample } => {
            single(prime(*p).and_then(|p| checks::check_lie(*n, p, sample.count, sample.seed)))
        }
    }
}
