use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};
use minorlab::catalog::enumerate_functions;
use minorlab::format::{parse_function, parse_functions, parse_hypergraph};
use minorlab::graphs::{classify_graph, Graph};
use minorlab::irreducibility::{cover_report, hyper_report, Backend};
use minorlab::steiner::{builtin, steiner_report, sts13_pair};
use minorlab::verify::{verify_suite, VerifyOptions, DEFAULT_SEED, SUITES};
use minorlab::{boolfn, Hypergraph};

/// Simple minors of Boolean functions: classification, Steiner systems,
/// catalogs and verification suites.
#[derive(Parser)]
#[command(name = "minor-lab", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include the slow STS(13) instances.
    #[arg(long, global = true)]
    extended: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide join-irreducibility of the object in a file.
    #[command(subcommand)]
    Classify(Classify),
    #[command(subcommand)]
    Steiner(Steiner),
    /// Write the catalog of equivalence classes up to an arity.
    Enumerate {
        #[arg(long)]
        max_arity: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification suite (or `all`).
    Verify {
        #[arg(value_parser = suite_names())]
        suite: String,
    },
    #[command(subcommand)]
    Minor(Minor),
}

#[derive(Subcommand)]
enum Classify {
    /// Prints `ess gap ji n_cover_classes cf_size [witness]` per function.
    Fn { file: PathBuf },
    /// Prints the recognized shape, or `Reducible` with a witness.
    Graph { file: PathBuf },
    /// Prints `ji dh_size dh_classes gap2_shape [witness]`.
    Hypergraph { file: PathBuf },
}

#[derive(Subcommand)]
enum Steiner {
    /// Three-way report for a file or a builtin (`fano`, `ag9`, `sts13`).
    Check { source: String },
}

#[derive(Subcommand)]
enum Minor {
    /// Prints whether the function in `g` is a minor of the one in `f`.
    Test { f: PathBuf, g: PathBuf },
}

fn suite_names() -> PossibleValuesParser {
    PossibleValuesParser::new(SUITES.iter().copied().chain(["all"]))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    parse_hypergraph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Success flag of the command; `false` means a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Classify(Classify::Fn { file }) => {
            let fs = parse_functions(&read(&file)?)
                .with_context(|| format!("parsing {}", file.display()))?;
            println!("#ess\tgap\tji\tn_cover_classes\tcf_size\twitness");
            for f in fs {
                println!("{}", cover_report(&f).with_context(|| f.to_string())?.to_tsv());
            }
        }
        Command::Classify(Classify::Graph { file }) => {
            let g = Graph::new(read_hypergraph(&file)?)?;
            println!("{}", classify_graph(&g));
        }
        Command::Classify(Classify::Hypergraph { file }) => {
            let h = read_hypergraph(&file)?;
            println!("#ji\tdh_size\tdh_classes\tgap2\twitness");
            println!("{}", hyper_report(&h, Backend::Auto)?.to_tsv());
        }
        Command::Steiner(Steiner::Check { source }) => {
            let systems = match source.as_str() {
                "sts13" if !cli.extended => bail!("`sts13` needs --extended"),
                "sts13" => sts13_pair(cli.seed)?.to_vec(),
                name => match builtin(name) {
                    Some(h) => vec![h],
                    None => vec![read_hypergraph(Path::new(name))?],
                },
            };
            println!("#params\tji\tcontraction_mono\tminus2_mono\tdh_size\tn_pairs");
            let mut agree = true;
            for h in &systems {
                let r = steiner_report(h)?;
                println!("{}", r.to_tsv());
                agree &= r.agrees();
            }
            return Ok(agree);
        }
        Command::Enumerate { max_arity, out } => {
            let mut c = enumerate_functions(max_arity)?;
            c.compute_levels()?;
            fs::write(&out, c.to_tsv()).with_context(|| format!("writing {}", out.display()))?;
            println!("classes={}\tlevels={}", c.len(), c.n_levels());
        }
        Command::Verify { suite } => {
            let opts = VerifyOptions {
                seed: cli.seed,
                extended: cli.extended,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut ok = true;
            for name in names {
                let r = verify_suite(name, opts)?;
                println!("{r}");
                ok &= r.passed();
            }
            return Ok(ok);
        }
        Command::Minor(Minor::Test { f, g }) => {
            let ft = parse_function(&read(&f)?).with_context(|| format!("parsing {}", f.display()))?;
            let gt = parse_function(&read(&g)?).with_context(|| format!("parsing {}", g.display()))?;
            println!("{}", boolfn::is_minor(&gt, &ft)?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
