use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use tromino::analytics::gf::{named_gf, GF_NAMES};
use tromino::analytics::{compare_bound, f_harness, gf_series};
use tromino::characterize::{bad_pairs, decide};
use tromino::construct::search::DEFAULT_CELL_CAP;
use tromino::construct::{construct_tiling, solve_exact_with, Outcome};
use tromino::enumerate::{count_with, enumerate_tilings_with, TileMix};
use tromino::render::{render_ascii, render_svg};
use tromino::verify::{run_verify, VerifyOptions};
use tromino::{DeficientBoard, Rect, Tiling};

#[derive(Parser, Debug)]
#[command(name = "tromino", version, about = "Right-tromino tilings of deficient rectangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide tileability; exits 1 when the board is untileable.
    Decide(BoardArgs),
    /// Construct a tiling by decomposition.
    Tile {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count tilings exactly.
    Count {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, default_value = "tromino", value_parser = parse_mix)]
        mix: TileMix,
    },
    /// List tilings as a JSON array.
    Enumerate {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, default_value = "tromino", value_parser = parse_mix)]
        mix: TileMix,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
    /// Expand a named generating function.
    Gf {
        #[arg(long, required_unless_present = "harness", value_parser = clap::builder::PossibleValuesParser::new(GF_NAMES))]
        name: Option<String>,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Print the width-four mixed-tiling comparison report instead.
        #[arg(long, conflicts_with = "name")]
        harness: bool,
    },
    /// Compare the domino-deficient upper bound with the exact count.
    Bound { m: u32, n: u32 },
    /// List the bad missing-domino pairs for an m x n rectangle.
    BadPairs { m: u32, n: u32 },
    /// Brute-force search.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run every acceptance and invariant check and print a JSON report.
    Verify {
        #[arg(long, default_value_t = VerifyOptions::default().random_boards)]
        random_boards: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
    /// Draw a tiling read from JSON.
    Render {
        /// Tiling JSON file, or `-` for standard input.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Exhaustive search for one tiling; exits 1 when none exists.
    Solve {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, default_value = "tromino", value_parser = parse_mix)]
        mix: TileMix,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
struct BoardArgs {
    #[arg(long, requires = "cols", conflicts_with = "input", value_parser = clap::value_parser!(u32).range(1..))]
    rows: Option<u32>,
    #[arg(long, requires = "rows", conflicts_with = "input", value_parser = clap::value_parser!(u32).range(1..))]
    cols: Option<u32>,
    /// Missing cells as a flat list: r,c[,r,c].
    #[arg(long, value_delimiter = ',', requires = "rows")]
    missing: Vec<u32>,
    /// Board JSON file, or `-` for standard input.
    #[arg(long, required_unless_present = "rows")]
    input: Option<PathBuf>,
}

fn parse_mix(s: &str) -> Result<TileMix, String> {
    s.parse().map_err(|e: tromino::Error| e.to_string())
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

impl BoardArgs {
    fn board(&self) -> Result<DeficientBoard> {
        if let Some(path) = &self.input {
            let text = read_input(path)?;
            return serde_json::from_str(&text).context("parsing board JSON");
        }
        let (Some(rows), Some(cols)) = (self.rows, self.cols) else {
            bail!("either --rows and --cols or --input is required");
        };
        if !self.missing.len().is_multiple_of(2) {
            bail!("--missing takes row,col pairs; got {} numbers", self.missing.len());
        }
        let missing: Vec<(u32, u32)> = self.missing.chunks(2).map(|p| (p[0], p[1])).collect();
        Ok(DeficientBoard::with_missing(rows, cols, &missing)?)
    }
}

/// Accepts a bare tiling, or any object carrying one under `tiling`.
fn tiling_from_json(text: &str) -> Result<Tiling> {
    let value: Value = serde_json::from_str(text).context("parsing tiling JSON")?;
    let inner = match value.get("tiling") {
        Some(t) => t.clone(),
        None => value,
    };
    let tiling: Tiling = serde_json::from_value(inner).context("parsing tiling JSON")?;
    let report = tiling.validate();
    if !report.ok {
        bail!("invalid tiling: {}", serde_json::to_string(&report.violation)?);
    }
    Ok(tiling)
}

fn draw(t: &Tiling, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(t)? + "\n",
        Format::Ascii => render_ascii(t),
        Format::Svg => render_svg(t),
    })
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Writes to stdout; a reader that hangs up early (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: serde::Serialize>(v: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(v)? + "\n"))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Decide(args) => {
            let verdict = decide(&args.board()?)?;
            print_json(&verdict)?;
            Ok(status(verdict.tileable))
        }
        Command::Tile { board, format } => match construct_tiling(&board.board()?)? {
            Outcome::Tiled(c) if format == Format::Json => {
                print_json(&Outcome::Tiled(c))?;
                Ok(ExitCode::SUCCESS)
            }
            Outcome::Tiled(c) => {
                emit(&draw(&c.tiling, format)?)?;
                Ok(ExitCode::SUCCESS)
            }
            Outcome::Untileable(v) => {
                if format == Format::Json {
                    print_json(&Outcome::Untileable(v))?;
                } else {
                    eprintln!("untileable: {}", serde_json::to_string(&v.reason)?);
                }
                Ok(ExitCode::from(1))
            }
        },
        Command::Count { board, mix } => {
            emit(&format!("{}\n", count_with(&board.board()?, mix)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { board, mix, limit, cap } => {
            print_json(&enumerate_tilings_with(&board.board()?, mix, limit, cap)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf { harness: true, terms, .. } => {
            let report = f_harness(terms)?;
            print_json(&report)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gf { name, terms, .. } => {
            let name = name.expect("clap requires --name without --harness");
            let gf = named_gf(&name).with_context(|| format!("unknown generating function {name}"))?;
            let coeffs: Vec<String> = gf_series(&gf, terms)?.iter().map(|c| c.to_string()).collect();
            emit(&(coeffs.join(" ") + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { m, n } => {
            let cmp = compare_bound(m, n)?;
            print_json(&cmp)?;
            Ok(status(cmp.holds))
        }
        Command::BadPairs { m, n } => {
            Rect::new(m, n)?;
            print_json(&bad_pairs(m, n)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { command: OracleCommand::Solve { board, mix, cap } } => {
            match solve_exact_with(&board.board()?, mix, cap)? {
                Some(t) => {
                    print_json(&t)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    emit("null\n")?;
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Verify { random_boards, seed } => {
            let report = run_verify(&VerifyOptions { random_boards, seed });
            print_json(&report)?;
            Ok(status(report.ok))
        }
        Command::Render { input, format } => {
            let tiling = tiling_from_json(&read_input(&input)?)?;
            emit(&draw(&tiling, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors and 0 for --help/--version.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
