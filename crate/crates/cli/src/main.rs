use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyprod_core::interchange::parse_corpus;
use polyprod_core::report::{
    cmd_analyze, cmd_generate, cmd_jacobi, cmd_verify, ExitStatus, Format, Mutations, Outcome, RunConfig,
};
use polyprod_core::vertex::MAX_ENUMERATION_M;
use polyprod_core::{Error, SimplicialComplex};

/// Wedge decompositions of polyhedral products over shifted complexes.
#[derive(Parser, Debug)]
#[command(name = "polyprod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shiftedness, minimal non-faces, wedge summands and pinch-map expressions.
    Analyze(Common),
    /// Check the wedge decomposition against computed homology.
    Verify(Common),
    /// Render the higher Jacobi identity and check the classical one.
    Jacobi(Common),
    /// Write a seeded corpus of distinct shifted complexes.
    Generate(Common),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Human,
    Structured,
}

#[derive(Args, Debug)]
struct Common {
    /// File holding a complex or a JSON array of complexes.
    #[arg(long, conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// A complex given directly, e.g. '{"m":3,"facets":[[1],[2],[3]]}'.
    #[arg(long)]
    inline: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus size for generate (and verify without input).
    #[arg(long, default_value_t = 10)]
    size: usize,
    /// Vertex count for generate/verify corpora, or m for jacobi.
    #[arg(long)]
    m: Option<usize>,
    /// Sphere dimensions n_i, one value or a comma list of m values.
    #[arg(long, value_delimiter = ',')]
    spheres: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
    #[arg(long, default_value_t = MAX_ENUMERATION_M)]
    max_m: usize,
    /// Upper end of the (p, q, r) sweep in jacobi.
    #[arg(long, default_value_t = 8)]
    max_degree: u32,
    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, hide = true)]
    corrupt_nonfaces: bool,
    #[arg(long, hide = true)]
    flip_antisymmetry: bool,
}

impl Common {
    fn config(&self, default_m: usize) -> RunConfig {
        RunConfig {
            spheres: self.spheres.clone(),
            seed: self.seed,
            size: self.size,
            m: self.m.unwrap_or(default_m),
            max_m: self.max_m,
            max_degree: self.max_degree,
            format: match self.format {
                FormatArg::Human => Format::Human,
                FormatArg::Structured => Format::Structured,
            },
            mutations: Mutations {
                corrupt_nonfaces: self.corrupt_nonfaces,
                flip_antisymmetry: self.flip_antisymmetry,
            },
        }
    }

    fn complexes(&self) -> Result<Vec<SimplicialComplex>, Error> {
        let text = match (&self.input, &self.inline) {
            (Some(path), _) => fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?,
            (None, Some(text)) => text.clone(),
            (None, None) => return Ok(Vec::new()),
        };
        parse_corpus(&text)
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Analyze(c) => {
            let complexes = c.complexes()?;
            if complexes.is_empty() {
                return Err(Error::Input("analyze needs --input or --inline".into()));
            }
            cmd_analyze(&c.config(3), &complexes)
        }
        Command::Verify(c) => cmd_verify(&c.config(5), &c.complexes()?),
        Command::Jacobi(c) => cmd_jacobi(&c.config(3)),
        Command::Generate(c) => cmd_generate(&c.config(5)),
    }
}

fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Analyze(c) | Command::Verify(c) | Command::Jacobi(c) | Command::Generate(c) => c.output.as_ref(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Some(path) = output_path(&cli) {
                if let Err(e) = fs::write(path, &outcome.output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(ExitStatus::InputError.code() as u8);
                }
            } else {
                print!("{}", outcome.output);
            }
            ExitCode::from(outcome.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ExitStatus::from_error(&e).code() as u8)
        }
    }
}
