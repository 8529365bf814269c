//! `fock`: command-line access to Fock space crystals.
//!
//! Arguments are positional in the order level, charge(s), payload.
//! Multipartitions use the text form `2.1|-|1`, charges `0,-2,5`.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fock_crystal::{
    crystal_graph, extract_path, hu_map, iota, is_divided_bipartition, is_flotw, is_uglov, psi,
    split_count, to_fundamental, uglov_set, Error, Multicharge, Multipartition,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fock",
    version,
    about = "Crystals of level-l Fock spaces in affine type A"
)]
struct Cli {
    /// Output format. Graphs default to json; everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Suppress diagnostics on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Crystal graph of the empty multipartition up to rank N_MAX.
    Crystal {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        n_max: usize,
    },
    /// Uglov multipartitions of rank N, in text order.
    Uglov {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        n: usize,
    },
    /// Whether MP lies in the crystal component of the empty multipartition.
    IsUglov {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// The FLOTW test; needs 0 < s_j - s_i < e for i < j.
    Flotw {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Crystal isomorphism from one charge to an orbit-equivalent one.
    Psi {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Hu's map: shift every path residue by e/l.
    Hu {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// The embedding iota_k of the level ke/l crystal.
    Iota {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        k: usize,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Number of simple summands after restriction.
    Split {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Whether a bipartition is divided for the charge (0, e/2 + N e).
    Divided {
        e: i64,
        n: i64,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Residues i_1 .. i_n with f_{i_1} .. f_{i_n} of the empty multipartition equal to MP.
    Path {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
        #[arg(allow_hyphen_values = true)]
        mp: String,
    },
    /// Representative of the charge's orbit with 0 <= s_1 <= .. <= s_l < e.
    Fundamental {
        e: i64,
        #[arg(allow_hyphen_values = true)]
        charge: String,
    },
}

/// What went wrong, and which exit code it maps to.
enum Failure {
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse { .. } => Failure::Parse(err.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn charge(text: &str, e: i64) -> Result<Multicharge, Error> {
    Multicharge::parse(text, e)
}

fn multipartition(text: &str) -> Result<Multipartition, Error> {
    text.parse()
}

fn scalar(format: Format, key: &str, value: serde_json::Value) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(json!({ key: value }).to_string()),
        Format::Text => Ok(match value {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        }),
        Format::Dot => Err(Failure::Parse(
            "--format dot is only available for crystal".into(),
        )),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let text_or = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Crystal {
            e,
            charge: s,
            n_max,
        } => {
            let graph = crystal_graph(&charge(s, *e)?, *n_max);
            match text_or(Format::Json) {
                Format::Json => Ok(graph.to_json()),
                Format::Dot => Ok(graph.to_dot().trim_end().to_string()),
                Format::Text => Ok(graph
                    .layers()
                    .iter()
                    .enumerate()
                    .map(|(r, layer)| {
                        let names: Vec<String> = layer.iter().map(ToString::to_string).collect();
                        format!("{r}: {}", names.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n")),
            }
        }
        Command::Uglov { e, charge: s, n } => {
            let set: Vec<String> = uglov_set(&charge(s, *e)?, *n)
                .iter()
                .map(ToString::to_string)
                .collect();
            match text_or(Format::Text) {
                Format::Text => Ok(set.join("\n")),
                f => scalar(f, "uglov", json!(set)),
            }
        }
        Command::IsUglov { e, charge: s, mp } => {
            let (s, mp) = (charge(s, *e)?, multipartition(mp)?);
            check_level(&s, &mp)?;
            scalar(text_or(Format::Text), "uglov", json!(is_uglov(&mp, &s)))
        }
        Command::Flotw { e, charge: s, mp } => {
            let answer = is_flotw(&multipartition(mp)?, &charge(s, *e)?)?;
            scalar(text_or(Format::Text), "flotw", json!(answer))
        }
        Command::Psi { e, from, to, mp } => {
            let image = psi(&multipartition(mp)?, &charge(from, *e)?, &charge(to, *e)?)?;
            scalar(text_or(Format::Text), "image", json!(image.to_string()))
        }
        Command::Hu { e, charge: s, mp } => {
            let image = hu_map(&multipartition(mp)?, &charge(s, *e)?)?;
            scalar(text_or(Format::Text), "image", json!(image.to_string()))
        }
        Command::Iota {
            e,
            charge: s,
            k,
            mp,
        } => {
            let image = iota(&multipartition(mp)?, *k, &charge(s, *e)?)?;
            scalar(text_or(Format::Text), "image", json!(image.to_string()))
        }
        Command::Split { e, charge: s, mp } => {
            let count = split_count(&multipartition(mp)?, &charge(s, *e)?)?;
            scalar(text_or(Format::Text), "split", json!(count))
        }
        Command::Divided { e, n, mp } => {
            let answer = is_divided_bipartition(&multipartition(mp)?, *n, *e)?;
            scalar(text_or(Format::Text), "divided", json!(answer))
        }
        Command::Path { e, charge: s, mp } => {
            let path = extract_path(&multipartition(mp)?, &charge(s, *e)?)?;
            match text_or(Format::Text) {
                Format::Text => Ok(path
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")),
                f => scalar(f, "path", json!(path)),
            }
        }
        Command::Fundamental { e, charge: s } => {
            let (target, word) = to_fundamental(&charge(s, *e)?);
            match text_or(Format::Text) {
                Format::Text => Ok(format!("{target}\n{word}")),
                f => scalar(
                    f,
                    "fundamental",
                    json!({ "charge": target.entries(), "word": word.tokens() }),
                ),
            }
        }
    }
}

fn check_level(s: &Multicharge, mp: &Multipartition) -> Result<(), Failure> {
    if s.len() != mp.level() {
        return Err(Error::LengthMismatch {
            expected: s.len(),
            found: mp.level(),
        }
        .into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Parse(msg) => (2, msg),
                Failure::Domain(msg) => (1, msg),
            };
            if !cli.quiet {
                eprintln!("fock: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
