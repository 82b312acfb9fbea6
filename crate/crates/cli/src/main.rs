use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use centrum_core::harness::{corpus_default, run_all, RunOptions, TierFilter};
use centrum_core::limits::{Limits, HARD_MAX_ORDER, MAX_ORDER_ENV};
use centrum_core::radicals::{prime_radical_by_intersection, RadicalReport, ORACLE_MAX_ORDER};
use centrum_core::ring::table_file::write_table;
use centrum_core::search::{search, Generator, SearchOptions};
use centrum_core::{
    build_with, check_poly_property, check_property, Error, FiniteRing, PolyPropertyId, PropertyId,
    RingExpr, VerdictLine,
};

/// Exhaustive property checks for finite rings.
#[derive(Parser)]
#[command(name = "centrum", version)]
struct Cli {
    #[command(flatten)]
    caps: Caps,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Caps {
    /// Largest ring order any construction may produce
    #[arg(long, global = true, env = MAX_ORDER_ENV, default_value_t = Limits::default().max_order)]
    order_cap: usize,

    /// Largest order for which the ideal lattice is enumerated
    #[arg(long, global = true, default_value_t = Limits::default().ideal_cap)]
    ideal_cap: usize,

    /// Step budget for polynomial searches
    #[arg(long, global = true, default_value_t = Limits::default().budget)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print order, center, N(R), P(R) and every property verdict
    Report { expr: String },
    /// Check a single property
    Check {
        expr: String,
        property: String,
        /// Degree bound for polynomial properties
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Print the nilpotent set, prime radical and singular ideals
    Radicals { expr: String },
    /// Run the theorem registry over the built-in corpus
    Theorems {
        /// standard, slow or all
        #[arg(long, default_value = "standard")]
        tier: TierFilter,
        /// Comma-separated theorem ids
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Degree bound for the bounded theorems
        #[arg(long, default_value_t = Limits::default().degree)]
        degree: usize,
    },
    /// Enumerate rings with some properties and without others
    Search {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        #[arg(long, value_delimiter = ',')]
        satisfy: Vec<PropertyId>,
        #[arg(long, value_delimiter = ',')]
        violate: Vec<PropertyId>,
        /// Comma-separated constructor names (default: all)
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<Generator>>,
        /// Maximum number of nested constructor applications
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Write the ring's tables in the table file format
    Export { expr: String, path: PathBuf },
}

enum Outcome {
    Favorable,
    Fails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_order: cli.caps.order_cap.min(HARD_MAX_ORDER),
        ideal_cap: cli.caps.ideal_cap,
        budget: cli.caps.budget,
        ..Limits::default()
    };
    match run(cli.command, limits) {
        Ok(Outcome::Favorable) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build(src: &str, limits: &Limits) -> Result<(RingExpr, FiniteRing), Error> {
    let expr = RingExpr::parse(src)?;
    let ring = build_with(&expr, limits)?;
    Ok((expr, ring))
}

fn run(command: Command, limits: Limits) -> Result<Outcome, Error> {
    match command {
        Command::Report { expr } => {
            let (expr, ring) = build(&expr, &limits)?;
            let radicals = RadicalReport::compute(&ring);
            println!("ring \"{expr}\"");
            println!("order {}", ring.order());
            println!("characteristic {}", ring.characteristic());
            println!("center_size {}", ring.center().len());
            println!("nilpotents {}", ring.format_subset(&radicals.nilpotents));
            println!("prime_radical {}", ring.format_subset(&radicals.prime_radical));
            let expr = expr.to_string();
            for &p in PropertyId::ALL.iter() {
                println!("{}", VerdictLine::new(p, &expr, &check_property(&ring, p), &ring));
            }
            Ok(Outcome::Favorable)
        }
        Command::Check {
            expr,
            property,
            degree,
        } => {
            let (expr, ring) = build(&expr, &limits)?;
            let verdict = match (property.parse::<PropertyId>(), property.parse::<PolyPropertyId>()) {
                (Ok(p), _) => {
                    if degree.is_some() {
                        return Err(Error::Hypothesis(format!("--degree applies only to polynomial properties, not {p}")));
                    }
                    check_property(&ring, p)
                }
                (_, Ok(p)) => check_poly_property(&ring, p, degree.unwrap_or(limits.degree), limits.budget)?,
                _ => return Err(Error::UnknownProperty(property)),
            };
            println!("{}", VerdictLine::new(&property, &expr.to_string(), &verdict, &ring));
            Ok(if verdict.is_fail() { Outcome::Fails } else { Outcome::Favorable })
        }
        Command::Radicals { expr } => {
            let (_, ring) = build(&expr, &limits)?;
            let r = RadicalReport::compute(&ring);
            println!("nilpotents {}", ring.format_subset(&r.nilpotents));
            println!("prime_radical {}", ring.format_subset(&r.prime_radical));
            println!("two_primal {}", r.two_primal);
            println!("singular_right {}", ring.format_subset(&r.singular_right));
            println!("singular_left {}", ring.format_subset(&r.singular_left));
            if ring.order() <= ORACLE_MAX_ORDER {
                let by_primes = prime_radical_by_intersection(&ring)?;
                println!("prime_ideal_intersection {}", ring.format_subset(&by_primes));
            }
            Ok(Outcome::Favorable)
        }
        Command::Theorems { tier, only, degree } => {
            let opts = RunOptions {
                tier,
                only,
                limits: Limits { degree, ..limits },
            };
            let report = run_all(&corpus_default(), &opts)?;
            print!("{}", report.render());
            Ok(if report.is_clean() { Outcome::Favorable } else { Outcome::Fails })
        }
        Command::Search {
            max_order,
            satisfy,
            violate,
            generators,
            depth,
        } => {
            if satisfy.is_empty() && violate.is_empty() {
                return Err(Error::Hypothesis("give at least one --satisfy or --violate property".into()));
            }
            let opts = SearchOptions {
                max_order,
                satisfy,
                violate,
                generators: generators.unwrap_or_else(|| Generator::ALL.to_vec()),
                depth,
            };
            let outcome = search(&opts, &limits)?;
            if let Some(w) = &outcome.warning {
                eprintln!("warning: {w}");
            }
            for hit in &outcome.hits {
                println!("order={} ring=\"{}\"", hit.order, hit.expr);
            }
            eprintln!("{} hits among {} distinct rings", outcome.hits.len(), outcome.examined);
            Ok(Outcome::Favorable)
        }
        Command::Export { expr, path } => {
            let (_, ring) = build(&expr, &limits)?;
            std::fs::write(&path, write_table(&ring))?;
            Ok(Outcome::Favorable)
        }
    }
}
