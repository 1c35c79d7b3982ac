//! `betti` — exact Betti numbers of monomial ideals from the command line.

mod render;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use betti_core::forest::{verify_ideal_via_oracle, verify_main_theorem, VerifyOptions};
use betti_core::monomial::facet_ideal;
use betti_core::random::{random_forest, ForestParams};
use betti_core::taylor::all_multigraded_betti_with_cap;
use betti_core::{Error, MonomialIdeal, PrimeField, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "betti",
    about = "Multigraded and graded Betti numbers of monomial ideals, with a fast path for facet ideals of simplicial forests",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table of an ideal or facet complex
    Betti(ComputeArgs),
    /// Nonzero multigraded Betti numbers, one `i m value` line each
    Multigraded(ComputeArgs),
    /// Decide whether a complex is a simplicial forest
    ForestCheck(ComputeArgs),
    /// Print a leaf order of a forest
    LeafOrder(ComputeArgs),
    /// Check that multigraded Betti numbers are 0/1 and concentrated in
    /// one homological degree; exits 0 only when the check holds
    Verify(ComputeArgs),
    /// Emit a seeded random simplicial forest in the complex text format
    RandomForest(GenerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Ideal,
    Complex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input: a file path, `-` for standard input, or inline text
    /// (`/` separates lines)
    #[arg(default_value = "-")]
    input: String,
    /// Force the input interpretation instead of auto-detecting
    #[arg(long = "as", value_enum)]
    kind: Option<InputKind>,
    /// Field characteristic for homology computations
    #[arg(long, default_value_t = 2)]
    field: u64,
    /// Use the Taylor-homology oracle even where the fast path applies;
    /// under `verify`, cross-check the fast path against the oracle
    #[arg(long)]
    oracle: bool,
    /// Try the forest fast path on ideal input
    #[arg(long)]
    fast: bool,
    /// Cap on the generator count for whole-ideal scans
    #[arg(long, default_value_t = 20)]
    max_generators: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    max_vertices: usize,
    #[arg(long, default_value_t = 8)]
    max_facets: usize,
}

enum ParsedInput {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

fn read_input(spec: &str) -> std::io::Result<String> {
    if spec == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else if std::path::Path::new(spec).exists() {
        std::fs::read_to_string(spec)
    } else if spec.contains(char::is_whitespace)
        || spec.contains(['*', '^', '#'])
        || spec.chars().all(|c| c.is_ascii_alphabetic())
    {
        // Inline text; slashes separate lines.
        Ok(spec.replace('/', "\n"))
    } else {
        // Path-like tokens (dots, slashes, digits) are mistyped paths more
        // often than inline input.
        Err(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no such file `{spec}` (quote inline input, or pipe it to `-`)"),
        ))
    }
}

/// Auto-detection: `*` or `^` anywhere means monomials; otherwise lines of
/// bare multi-letter words are paper-style juxtaposed monomials (`abe`),
/// and anything else is facet lines.
fn detect_kind(text: &str) -> InputKind {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.find('#').map_or(l, |p| &l[..p]).trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.iter().any(|l| l.contains('*') || l.contains('^')) {
        return InputKind::Ideal;
    }
    let paper_style = !lines.is_empty()
        && lines.iter().all(|l| {
            l.split_whitespace().count() == 1
                && l.len() >= 2
                && l.chars().all(|c| c.is_ascii_alphabetic())
        });
    if paper_style {
        InputKind::Ideal
    } else {
        InputKind::Complex
    }
}

fn parse_input(args: &ComputeArgs) -> Result<ParsedInput, CliError> {
    let text = read_input(&args.input).map_err(CliError::Io)?;
    let kind = args.kind.unwrap_or_else(|| detect_kind(&text));
    match kind {
        InputKind::Ideal => Ok(ParsedInput::Ideal(MonomialIdeal::parse_text(&text)?)),
        InputKind::Complex => Ok(ParsedInput::Complex(SimplicialComplex::parse_text(&text)?)),
    }
}

/// A complex view of the input: complexes pass through, squarefree ideals
/// convert to their facet complex.
fn as_complex(input: ParsedInput) -> Result<SimplicialComplex, CliError> {
    match input {
        ParsedInput::Complex(g) => Ok(g),
        ParsedInput::Ideal(i) => Ok(i.facet_complex()?),
    }
}

enum CliError {
    Io(std::io::Error),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 2,
            CliError::Core(Error::Parse { .. }) => 2,
            CliError::Core(Error::TooLarge(_)) => 3,
            CliError::Core(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(e) => format!("input error: {e}"),
            CliError::Core(e) => format!("error: {e}"),
        }
    }
}

fn cmd_betti(args: &ComputeArgs) -> Result<(), CliError> {
    let field = PrimeField::new(args.field)?;
    let table = match parse_input(args)? {
        ParsedInput::Complex(g) => {
            if !args.oracle && g.is_forest() {
                betti_core::forest::forest_graded_betti(&g)?
            } else {
                let ideal = facet_ideal(&g);
                if ideal.is_zero() {
                    betti_core::BettiTable::new()
                } else {
                    all_multigraded_betti_with_cap(&ideal, &field, args.max_generators)?.graded()
                }
            }
        }
        ParsedInput::Ideal(ideal) => {
            let fast_path = if args.fast && !args.oracle && ideal.is_squarefree() {
                let g = ideal.facet_complex()?;
                g.is_forest().then_some(g)
            } else {
                None
            };
            match fast_path {
                Some(g) => betti_core::forest::forest_graded_betti(&g)?,
                None => {
                    if ideal.is_zero() {
                        betti_core::BettiTable::new()
                    } else {
                        all_multigraded_betti_with_cap(&ideal, &field, args.max_generators)?
                            .graded()
                    }
                }
            }
        }
    };
    match args.format {
        OutputFormat::Table => print!("{}", render::betti_table_text(&table)),
        OutputFormat::Json => println!("{}", render::betti_table_json(&table)),
    }
    Ok(())
}

fn cmd_multigraded(args: &ComputeArgs) -> Result<(), CliError> {
    let field = PrimeField::new(args.field)?;
    let ideal = match parse_input(args)? {
        ParsedInput::Ideal(i) => i,
        ParsedInput::Complex(g) => facet_ideal(&g),
    };
    if ideal.is_zero() {
        match args.format {
            OutputFormat::Table => {}
            OutputFormat::Json => {
                println!("{}", json!({"command": "multigraded", "entries": []}))
            }
        }
        return Ok(());
    }
    let map = all_multigraded_betti_with_cap(&ideal, &field, args.max_generators)?;
    match args.format {
        OutputFormat::Table => print!("{}", render::multigraded_text(&map, &ideal)),
        OutputFormat::Json => println!("{}", render::multigraded_json(&map, &ideal)),
    }
    Ok(())
}

fn cmd_forest_check(args: &ComputeArgs) -> Result<u8, CliError> {
    let g = as_complex(parse_input(args)?)?;
    match g.leaf_order() {
        Some(order) => {
            let facets = render::facet_lists(&g, order.indices());
            match args.format {
                OutputFormat::Table => {
                    println!("forest");
                    println!("leaf order:");
                    for f in &facets {
                        println!("  {}", f.join(" "));
                    }
                }
                OutputFormat::Json => println!(
                    "{}",
                    json!({"command": "forest-check", "forest": true, "leaf_order": facets})
                ),
            }
            Ok(0)
        }
        None => {
            let witness = match g.leafless_subcollection() {
                Ok(w) => w,
                Err(Error::TooLarge(_)) => None,
                Err(e) => return Err(e.into()),
            };
            match args.format {
                OutputFormat::Table => {
                    println!("not a forest");
                    match &witness {
                        Some(idx) => {
                            println!("leafless subcollection:");
                            for f in render::facet_lists(&g, idx) {
                                println!("  {}", f.join(" "));
                            }
                        }
                        None => println!("(too many facets for a brute-force witness)"),
                    }
                }
                OutputFormat::Json => {
                    let witness = witness.map(|idx| render::facet_lists(&g, &idx));
                    println!(
                        "{}",
                        json!({"command": "forest-check", "forest": false, "witness": witness})
                    );
                }
            }
            Ok(1)
        }
    }
}

fn cmd_leaf_order(args: &ComputeArgs) -> Result<u8, CliError> {
    let g = as_complex(parse_input(args)?)?;
    match g.leaf_order() {
        Some(order) => {
            let facets = render::facet_lists(&g, order.indices());
            match args.format {
                OutputFormat::Table => {
                    for f in &facets {
                        println!("{}", f.join(" "));
                    }
                }
                OutputFormat::Json => println!(
                    "{}",
                    json!({"command": "leaf-order", "leaf_order": facets})
                ),
            }
            Ok(0)
        }
        None => {
            eprintln!("error: {}", Error::NotAForest);
            Ok(1)
        }
    }
}

fn cmd_verify(args: &ComputeArgs) -> Result<u8, CliError> {
    let field = PrimeField::new(args.field)?;
    let g = as_complex(parse_input(args)?)?;
    let report = if g.is_forest() {
        verify_main_theorem(
            &g,
            &field,
            VerifyOptions {
                use_oracle: args.oracle,
                exhaustive_candidates: false,
            },
        )?
    } else if args.oracle {
        // Oracle-only mode exhibits the violations on non-forests.
        verify_ideal_via_oracle(&facet_ideal(&g), &field)?
    } else {
        return Err(Error::NotAForest.into());
    };
    match args.format {
        OutputFormat::Table => print!("{}", render::report_text(&report, args.oracle)),
        OutputFormat::Json => println!("{}", render::report_json(&report)),
    }
    let ok = report.holds && report.oracle_agreement() != Some(false);
    Ok(if ok { 0 } else { 1 })
}

fn cmd_random_forest(args: &GenerateArgs) -> u8 {
    let g = random_forest(
        args.seed,
        &ForestParams {
            max_vertices: args.max_vertices,
            max_facets: args.max_facets,
        },
    );
    print!("{}", g.to_text());
    0
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Betti(args) => cmd_betti(args).map(|()| 0),
        Command::Multigraded(args) => cmd_multigraded(args).map(|()| 0),
        Command::ForestCheck(args) => cmd_forest_check(args),
        Command::LeafOrder(args) => cmd_leaf_order(args),
        Command::Verify(args) => cmd_verify(args),
        Command::RandomForest(args) => Ok(cmd_random_forest(args)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
