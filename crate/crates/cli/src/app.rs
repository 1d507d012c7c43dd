//! Argument definitions and command dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use sebthom_core::expr::{eval, parse, parse_poly};
use sebthom_core::graded::total_rank;
use sebthom_core::oracle::{milnor_groebner, DEFAULT_ENUMERATION_BOUND};
use sebthom_core::AtomRegistry;

use crate::atomfile::{expand_paths, load_atom, load_registry};
use crate::error::CliError;
use crate::json::{AtomDoc, DataDoc};
use crate::report::{data_table, table, Report};
use crate::verify::{precheck, verify, Options, DEFAULT_SEED};

const EXPR_HELP: &str = "\
Expressions:
  join(E, E)         Thom-Sebastiani join
  suspend(E, m)      join with a nondegenerate quadric in m variables
  pow(a)             x^a, a >= 2
  quad(m)            x1^2 + ... + xm^2
  pham(a1, ..., an)  x1^a1 + ... + xn^an
  atom(\"name\")       custom atom loaded with --atoms
  polynomial         e.g. x^2 + y^3 - 2*z^5; must split into c*x^a summands

Zeta convention: zeta(t) = prod_j det(1 - t*h | H^j(F))^((-1)^(j+1)) on
unreduced cohomology of the Milnor fiber.

Exit codes: 0 ok, 2 parse/validation/input error, 3 unsupported summand,
4 oracle mismatch, 5 non-isolated critical locus, 6 enumeration bound exceeded.";

#[derive(Debug, Parser)]
#[command(name = "sebthom", version, about = "Vanishing cohomology of Thom-Sebastiani sums", after_help = EXPR_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Run the oracles after evaluating
    #[arg(long, global = true)]
    pub verify: bool,

    /// Largest number of tuples the enumeration oracle may visit
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub max_enum: u64,

    /// Atom file or directory of *.atom.json files; repeatable
    #[arg(long = "atoms", global = true, value_name = "PATH")]
    pub atoms: Vec<PathBuf>,

    /// Seed for randomized checks
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print its invariants
    Eval { expr: String },
    /// Evaluate and check against every applicable oracle
    Verify { expr: String },
    /// Milnor number of a polynomial by Groebner basis
    Milnor { poly: String },
    /// Inspect atom files
    #[command(subcommand)]
    Atoms(AtomsCommand),
}

#[derive(Debug, Subcommand)]
pub enum AtomsCommand {
    /// Names and total ranks of the atoms given with --atoms
    List,
    /// Full data of one atom
    Show { name: String },
    /// Validate atom files and list what they define
    Load {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
}

/// Runs a parsed command line, writing the result to `out` and
/// diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Eval { expr } => cmd_eval(cli, expr, cli.verify, out, err),
        Command::Verify { expr } => cmd_eval(cli, expr, true, out, err),
        Command::Milnor { poly } => cmd_milnor(cli, poly, out, err),
        Command::Atoms(sub) => cmd_atoms(cli, sub, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn cmd_eval(
    cli: &Cli,
    src: &str,
    with_verify: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let registry = load_registry(&cli.atoms)?;
    let expr = parse(src).map_err(sebthom_core::Error::from)?;
    if with_verify {
        precheck(&expr)?;
    }
    let data = eval(&expr, &registry)?;
    let mut report = Report::new(src, &data);
    if with_verify {
        let opts = Options {
            max_enum: cli.max_enum,
            seed: cli.seed,
        };
        report.verification = Some(verify(&expr, &data, &registry, &opts)?);
        let _ = writeln!(err, "seed: {}", cli.seed);
    }
    emit(
        out,
        &match cli.format {
            Format::Json => report.to_json(),
            Format::Text => report.to_text(),
        },
    )?;
    match &report.verification {
        Some(v) if v.mismatches() > 0 => Err(CliError::Mismatch(v.mismatches())),
        _ => Ok(()),
    }
}

fn cmd_milnor(cli: &Cli, src: &str, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let poly = parse_poly(src).map_err(sebthom_core::Error::from)?;
    let mu = milnor_groebner(&poly)?;
    let _ = writeln!(
        err,
        "note: the count is global; critical points away from the origin are included"
    );
    let text = match cli.format {
        Format::Json => {
            let doc = serde_json::json!({ "input": src, "milnor": mu });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Text => format!("{mu}\n"),
    };
    emit(out, &text)
}

fn listing(registry: &AtomRegistry, format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = registry
                .iter()
                .map(|a| serde_json::json!({ "name": a.name, "total_rank": total_rank(&a.data) }))
                .collect();
            serde_json::to_string_pretty(&items).expect("serializes") + "\n"
        }
        Format::Text if registry.is_empty() => String::new(),
        Format::Text => {
            let rows: Vec<Vec<String>> = registry
                .iter()
                .map(|a| vec![a.name.clone(), total_rank(&a.data).to_string()])
                .collect();
            table(&["name", "total rank"], &rows)
        }
    }
}

fn cmd_atoms(cli: &Cli, sub: &AtomsCommand, out: &mut dyn Write) -> Result<(), CliError> {
    match sub {
        AtomsCommand::List => {
            let registry = load_registry(&cli.atoms)?;
            emit(out, &listing(&registry, cli.format))
        }
        AtomsCommand::Show { name } => {
            let registry = load_registry(&cli.atoms)?;
            let atom = registry
                .get(name)
                .ok_or_else(|| sebthom_core::Error::UnknownAtom(name.clone()))?;
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&AtomDoc::from(atom)).expect("serializes") + "\n"
                }
                Format::Text => format!(
                    "atom  {}\n\n{}",
                    atom.name,
                    data_table(&DataDoc::from(&atom.data), None)
                ),
            };
            emit(out, &text)
        }
        AtomsCommand::Load { paths } => {
            // every file must validate on its own before names are merged
            for path in expand_paths(paths)? {
                load_atom(&path)?;
            }
            let mut all = cli.atoms.clone();
            all.extend(paths.iter().cloned());
            let registry = load_registry(&all)?;
            emit(out, &listing(&registry, cli.format))
        }
    }
}
