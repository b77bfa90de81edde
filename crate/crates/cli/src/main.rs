//! `lyutab`: exact Lyubeznik tables, deficiency-module classifications and
//! theorem verification for squarefree monomial ideals.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 resource bound exceeded,
//! 4 internal invariant failure, 5 failed verified implication.

mod cache;
mod report;

use cache::{cache_key, Cache, CACHE_ENV_VAR};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lyutab_core::corpus::{self, CorpusSpec};
use lyutab_core::field::{Field, FieldSpec, PrimeField, Rationals};
use lyutab_core::lyub::{analyze_with, verify, Analysis, CheckOutcome, CHECK_NAMES};
use lyutab_core::{Error, SquarefreeIdeal};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lyutab",
    about = "Exact Lyubeznik tables and Cohen-Macaulay classifications of squarefree monomial ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Field characteristic: 0 for the rationals, or a prime below 2^31.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the available cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Cache directory for first-level resolutions (also via LYUTAB_CACHE).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and print the Lyubeznik table of the input ideal.
    Table {
        /// Input JSON document; `-` or absent reads stdin.
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Full classification report with verified implications.
    Classify {
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Stanley-Reisner data: generators, facets, primes, Alexander dual.
    Duals {
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Generate a corpus and verify every element, aggregating the checks.
    Verify {
        /// Corpus family: random | nonpure-shellable | forest.
        #[arg(long)]
        family: String,
        /// Vertex count (corpus families support up to 8).
        #[arg(long)]
        n: usize,
        /// Number of elements.
        #[arg(long)]
        count: usize,
        /// RNG seed; required so runs are reproducible.
        #[arg(long)]
        seed: u64,
        /// Facet probability for the random family.
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceBound(_) => 3,
        Error::Invariant(_) => 4,
        Error::ImplicationFailed(_) => 5,
        _ => 2,
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String, Error> {
    match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
}

fn open_cache(opt: &Option<PathBuf>) -> Option<Cache> {
    let dir = opt.clone().or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from))?;
    Cache::new(dir)
}

/// Run the analysis, consulting and populating the cache when enabled.
fn cached_analysis<F: Field>(
    ideal: &SquarefreeIdeal,
    f: &F,
    cache: Option<&Cache>,
) -> Result<Analysis<F>, Error> {
    let key = cache_key(ideal, f.characteristic());
    if let Some(c) = cache {
        if let Some(first) = c.load(f, &key) {
            return analyze_with(ideal, f, Some(first));
        }
    }
    let analysis = analyze_with(ideal, f, None)?;
    if let Some(c) = cache {
        c.store(&key, &analysis.resolution, &analysis.ext);
    }
    Ok(analysis)
}

fn cmd_table(file: &Option<PathBuf>, common: &CommonOpts) -> Result<String, Error> {
    configure_jobs(common.jobs);
    let (ideal, _) = lyutab_core::input::parse_input(&read_input(file)?)?;
    let cache = open_cache(&common.cache);
    match FieldSpec::new(common.characteristic)? {
        FieldSpec::Rational => {
            let a = cached_analysis(&ideal, &Rationals, cache.as_ref())?;
            Ok(render_table(&a, common, 0))
        }
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            let a = cached_analysis(&ideal, &f, cache.as_ref())?;
            Ok(render_table(&a, common, p))
        }
    }
}

fn render_table<F: Field>(analysis: &Analysis<F>, common: &CommonOpts, ch: u64) -> String {
    match common.format {
        Format::Json => {
            let mut s = report::table_json(analysis, ch).to_string();
            s.push('\n');
            s
        }
        Format::Text => report::table_text(analysis, ch),
    }
}

fn cmd_classify(file: &Option<PathBuf>, common: &CommonOpts) -> Result<String, Error> {
    configure_jobs(common.jobs);
    let (ideal, _) = lyutab_core::input::parse_input(&read_input(file)?)?;
    let cache = open_cache(&common.cache);
    match FieldSpec::new(common.characteristic)? {
        FieldSpec::Rational => classify_rendered(&ideal, &Rationals, common, cache.as_ref()),
        FieldSpec::Prime(p) => {
            classify_rendered(&ideal, &PrimeField::new(p)?, common, cache.as_ref())
        }
    }
}

fn classify_rendered<F: Field>(
    ideal: &SquarefreeIdeal,
    f: &F,
    common: &CommonOpts,
    cache: Option<&Cache>,
) -> Result<String, Error> {
    let analysis = cached_analysis(ideal, f, cache)?;
    let checks = verify(&analysis)?;
    Ok(match common.format {
        Format::Json => {
            let mut s = report::classify_json(&analysis, &checks, f.characteristic()).to_string();
            s.push('\n');
            s
        }
        Format::Text => report::classify_text(&analysis, &checks, f.characteristic()),
    })
}

fn cmd_duals(file: &Option<PathBuf>, common: &CommonOpts) -> Result<String, Error> {
    let (ideal, _) = lyutab_core::input::parse_input(&read_input(file)?)?;
    Ok(match common.format {
        Format::Json => {
            let mut s = report::duals_json(&ideal).to_string();
            s.push('\n');
            s
        }
        Format::Text => report::duals_text(&ideal),
    })
}

fn cmd_verify(
    family: &str,
    n: usize,
    count: usize,
    seed: u64,
    q: f64,
    common: &CommonOpts,
) -> Result<String, Error> {
    configure_jobs(common.jobs);
    let spec = CorpusSpec { family: corpus::Family::parse(family, q)?, n, count, seed };
    let elements = corpus::generate(&spec)?;
    let ideals: Vec<SquarefreeIdeal> =
        elements.iter().map(corpus::CorpusElement::ideal).collect::<Result<_, _>>()?;

    // classify every element in parallel; any failure carries the offending
    // canonical ideal for reproduction
    let characteristic = common.characteristic;
    let per_element: Vec<BTreeMap<&'static str, CheckOutcome>> = ideals
        .par_iter()
        .map(|ideal| -> Result<BTreeMap<&'static str, CheckOutcome>, Error> {
            let run = || -> Result<BTreeMap<&'static str, CheckOutcome>, Error> {
                match FieldSpec::new(characteristic)? {
                    FieldSpec::Rational => {
                        let a = analyze_with(ideal, &Rationals, None)?;
                        verify(&a)
                    }
                    FieldSpec::Prime(p) => {
                        let a = analyze_with(ideal, &PrimeField::new(p)?, None)?;
                        verify(&a)
                    }
                }
            };
            run().map_err(|e| match e {
                Error::ImplicationFailed(msg) => Error::ImplicationFailed(format!(
                    "{msg}\noffending ideal: {}",
                    lyutab_core::input::canonical_json(ideal)
                )),
                other => other,
            })
        })
        .collect::<Result<_, _>>()?;

    let mut pass_counts: BTreeMap<&'static str, (usize, usize)> = BTreeMap::new();
    for checks in &per_element {
        for name in CHECK_NAMES {
            if let Some(&o) = checks.get(name) {
                let slot = pass_counts.entry(name).or_insert((0, 0));
                match o {
                    CheckOutcome::Pass => slot.0 += 1,
                    CheckOutcome::NotApplicable => slot.1 += 1,
                }
            }
        }
    }

    match common.format {
        Format::Json => {
            let checks_json: serde_json::Map<String, serde_json::Value> = pass_counts
                .iter()
                .map(|(&name, &(pass, na))| {
                    (name.to_string(), serde_json::json!({"pass": pass, "n/a": na}))
                })
                .collect();
            let doc = serde_json::json!({
                "family": family,
                "n": n,
                "count": count,
                "seed": seed,
                "q": q,
                "characteristic": characteristic,
                "elements": elements.len(),
                "checks": checks_json,
                "all_pass": true,
            });
            let mut s = doc.to_string();
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "verified {} elements (family {family}, n = {n}, seed = {seed}, characteristic {characteristic})\n",
                elements.len()
            ));
            for (name, (pass, na)) in &pass_counts {
                out.push_str(&format!("check {name}: pass {pass}, n/a {na}\n"));
            }
            out.push_str("all applicable checks passed\n");
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table { file, common } => cmd_table(file, common),
        Command::Classify { file, common } => cmd_classify(file, common),
        Command::Duals { file, common } => cmd_duals(file, common),
        Command::Verify { family, n, count, seed, q, common } => {
            cmd_verify(family, *n, *count, *seed, *q, common)
        }
    };
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
