use std::io::{self, BufRead};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use rainbow_arrow::arrow::{arrows, arrows_oracle, Answer, ArrowVerdict, Budget};
use rainbow_arrow::classify::{arrow_set, f_value, in_f_infinity, recognize_t_prime};
use rainbow_arrow::iso::{certificate, deck};
use rainbow_arrow::special::{make_named, prime_of, Family, FamilySpec};
use rainbow_arrow::verify::{
    cmd_verify_bosak, cmd_verify_lemma_k1, cmd_verify_main_theorem, cmd_verify_special,
    SpecialMode, SpecialTarget,
};
use rainbow_arrow::{graph6, Graph};

const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_ERROR: u8 = 3;

/// Rainbow induced subgraphs: does every colouring of G with |V(H)| colours
/// contain an induced, all-distinct-colour copy of H?
///
/// Graphs are given in graph6; `-` reads one graph per line from stdin.
/// Exit status: 0 yes/pass, 1 no/fail, 2 unknown, 3 error.
#[derive(Parser, Debug)]
#[command(name = "rainbow-arrow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a pattern H: f(H), special cases, and Arrow(H) one and two orders up.
    Classify { h: String },
    /// Decide G -> H from the classification.
    Arrows {
        g: String,
        h: String,
        /// Fall back to the exhaustive oracle where the classification is open.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide G -> H by checking every colouring.
    Oracle {
        g: String,
        h: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a named graph in graph6.
    Gen {
        #[arg(value_parser = parse_family)]
        family: Family,
        param: Option<usize>,
        /// Delete a non-adjacent pair of vertices.
        #[arg(long)]
        prime: bool,
        #[arg(long)]
        complement: bool,
    },
    /// Print the deck (one-vertex-deleted subgraphs up to isomorphism).
    Deck { g: String },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Pattern order for the one-order-up suite.
        #[arg(long, default_value_t = 5)]
        k: usize,
        /// Required for the Hoffman-Singleton suite.
        #[arg(long)]
        extended: bool,
        /// Check every partition instead of one per automorphism orbit.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(clap::Args, Debug)]
struct BudgetArgs {
    /// Maximum number of colourings to check; 0 means no limit.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u128,
    /// Time limit in seconds; 0 means no limit.
    #[arg(long, default_value_t = 60)]
    time_limit: u64,
    /// Worker threads (default: available cores).
    #[arg(long)]
    jobs: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let mut b = Budget {
            max_partitions: (self.budget > 0).then_some(self.budget),
            max_time: (self.time_limit > 0).then(|| Duration::from_secs(self.time_limit)),
            ..Budget::default()
        };
        if let Some(j) = self.jobs {
            b = b.with_jobs(j);
        }
        b
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    MainTheorem,
    LemmaK1,
    Bosak,
    Petersen,
    HoffmanSingleton,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: rainbow_arrow::Error| e.to_string())
}

/// Resolves graph arguments, reading `-` from stdin in order.
struct Inputs {
    stdin: Option<io::Lines<io::StdinLock<'static>>>,
}

impl Inputs {
    fn new() -> Self {
        Inputs { stdin: None }
    }

    fn graph(&mut self, arg: &str) -> Result<Graph> {
        let text = if arg == "-" {
            let lines = self.stdin.get_or_insert_with(|| io::stdin().lock().lines());
            lines
                .next()
                .context("expected a graph6 line on standard input")?
                .context("reading standard input")?
        } else {
            arg.to_string()
        };
        graph6::parse(text.trim_end())
            .with_context(|| format!("parsing graph6 '{}'", text.trim_end()))
    }
}

fn print_verdict(v: &ArrowVerdict) -> u8 {
    println!("answer: {}", v.answer);
    println!("provenance: {}", v.provenance);
    if v.partitions_checked > 0 {
        println!("colourings checked: {}", v.partitions_checked);
    }
    if let Some(note) = &v.note {
        println!("note: {note}");
    }
    if let Some(w) = &v.witness {
        let w: Vec<String> = w.iter().map(usize::to_string).collect();
        println!("witness: {}", w.join(" "));
    }
    if let Some(c) = &v.counterexample {
        println!("counterexample: {c}");
    }
    match v.answer {
        Answer::Yes => 0,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

fn classify(h: &Graph) -> Result<u8> {
    let k = h.vertex_count();
    println!("graph6: {}", h.to_graph6());
    println!("certificate: {}", certificate(h)?);
    println!("vertices: {k}, edges: {}", h.edge_count());
    if k < 2 {
        println!("f: infinite (every graph arrows a single vertex)");
        return Ok(0);
    }
    if let Some(case) = in_f_infinity(h)? {
        println!("infinite case: {case:?}");
    }
    println!("f: {}", f_value(h)?);
    if k >= 3 {
        for c in recognize_t_prime(h)? {
            println!(
                "transitive parent: {} (deleted vertex {}, {:?})",
                c.parent.to_graph6(),
                c.deleted,
                c.construction
            );
        }
    }
    for n in [k + 1, k + 2] {
        println!("Arrow(H) at order {n}: {}", arrow_set(h, n)?);
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    let mut inputs = Inputs::new();
    match cli.command {
        Command::Classify { h } => classify(&inputs.graph(&h)?),
        Command::Arrows {
            g,
            h,
            oracle,
            budget,
        } => {
            let (g, h) = (inputs.graph(&g)?, inputs.graph(&h)?);
            let mut v = arrows(&g, &h)?;
            if oracle && v.answer == Answer::Unknown {
                v = arrows_oracle(&g, &h, &budget.budget())?;
            }
            Ok(print_verdict(&v))
        }
        Command::Oracle { g, h, budget } => {
            let (g, h) = (inputs.graph(&g)?, inputs.graph(&h)?);
            Ok(print_verdict(&arrows_oracle(&g, &h, &budget.budget())?))
        }
        Command::Gen {
            family,
            param,
            prime,
            complement,
        } => {
            let mut g = make_named(FamilySpec::new(family, param)?)?;
            if prime {
                g = prime_of(&g)?;
            }
            if complement {
                g = g.complement();
            }
            println!("{}", graph6::emit(&g)?);
            Ok(0)
        }
        Command::Deck { g } => {
            for card in deck(&inputs.graph(&g)?)? {
                println!("{card}");
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            k_max,
            n_max,
            k,
            extended,
            full,
            jobs,
        } => {
            let jobs = jobs.unwrap_or_else(|| Budget::default().jobs);
            let mode = if full {
                SpecialMode::Full
            } else {
                SpecialMode::OrbitReduced
            };
            let mut progress = |done: u128, total: u128| eprintln!("progress: {done}/{total}");
            let report = match suite {
                Suite::MainTheorem => cmd_verify_main_theorem(k_max, n_max, jobs)?,
                Suite::LemmaK1 => cmd_verify_lemma_k1(k, jobs)?,
                Suite::Bosak => cmd_verify_bosak(n_max)?,
                Suite::Petersen => {
                    cmd_verify_special(SpecialTarget::Petersen, mode, &mut progress)?
                }
                Suite::HoffmanSingleton => {
                    if !extended {
                        bail!("the Hoffman-Singleton suite is long-running; pass --extended to run it");
                    }
                    cmd_verify_special(SpecialTarget::HoffmanSingleton, mode, &mut progress)?
                }
            };
            println!("{report}");
            Ok(if report.passed() { 0 } else { EXIT_NO })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
