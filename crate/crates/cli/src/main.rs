use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use effcone::commands::{self, CurveFormat, CurveRequest, CurveTable, Format};
use effcone::input::{self, SlopeInput};
use effcone::{Config, Outcome};
use effcone_core::arith::parse_rational;
use effcone_core::ChernCharacter;

/// Exact effective cones of moduli spaces of sheaves on the projective plane.
///
/// Reads defaults for --max-order and --multiplier from the TOML file named
/// by EFFCONE_CONFIG, if set. Flags override the file.
#[derive(Parser)]
#[command(name = "effcone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: classification, dimension and both edges of the cone.
    Cone {
        #[command(flatten)]
        character: CharacterArgs,
        /// Scale the extremal characters by this factor.
        #[arg(long)]
        multiplier: Option<u32>,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Classification only.
    Classify {
        #[command(flatten)]
        character: CharacterArgs,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Rank, discriminant, address and interval of an exceptional slope.
    Slope {
        #[command(flatten)]
        slope: SlopeArgs,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Continued fraction expansions of an exceptional slope, reduced to [0, 1/2].
    Cfrac {
        #[command(flatten)]
        slope: SlopeArgs,
        /// Include the odd expansion.
        #[arg(long)]
        odd: bool,
        /// Include the period structure of the even expansion.
        #[arg(long)]
        period: bool,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Exact samples of the delta curve and the table of exceptional intervals.
    Curve {
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        /// Number of evenly spaced samples, endpoints included.
        #[arg(long, default_value_t = 17)]
        samples: usize,
        /// Largest order listed in the interval table.
        #[arg(long, default_value_t = 4)]
        order: u32,
        /// Order bound for the descent at each sample; deeper samples are flagged.
        #[arg(long)]
        max_order: Option<u32>,
        #[arg(long, value_enum, default_value_t = CurveFormatArg::Json)]
        format: CurveFormatArg,
        /// Table written in CSV format.
        #[arg(long, value_enum, default_value_t = CurveTableArg::Samples)]
        table: CurveTableArg,
        /// Add a rounded decimal column with this many digits.
        #[arg(long, value_name = "DIGITS")]
        approx: Option<u32>,
        #[command(flatten)]
        overlay: OverlayArgs,
    },
    /// One JSON character per line in, one JSON record per line out.
    Batch {
        /// Input file; standard input if absent or "-".
        path: Option<PathBuf>,
        #[arg(long)]
        multiplier: Option<u32>,
        #[command(flatten)]
        order: OrderArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CharacterArgs {
    /// Chern character r,c1,ch2.
    #[arg(long, value_name = "R,C1,CH2", allow_hyphen_values = true)]
    chern: Option<String>,
    /// Rank, slope and discriminant r,mu,delta.
    #[arg(long, value_name = "R,MU,DELTA", allow_hyphen_values = true)]
    rmd: Option<String>,
    /// Rank zero character d,chi.
    #[arg(long, value_name = "D,CHI", allow_hyphen_values = true)]
    rank_zero: Option<String>,
}

impl CharacterArgs {
    fn character(&self) -> effcone::error::Result<ChernCharacter> {
        match (&self.chern, &self.rmd, &self.rank_zero) {
            (Some(s), _, _) => input::chern(s),
            (_, Some(s), _) => input::rmd(s),
            (_, _, Some(s)) => input::rank_zero(s),
            _ => unreachable!("clap requires one character flag"),
        }
    }
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct OverlayArgs {
    /// Overlay the parabola of this character r,c1,ch2.
    #[arg(long, value_name = "R,C1,CH2", allow_hyphen_values = true)]
    chern: Option<String>,
    /// Overlay the parabola of this character r,mu,delta.
    #[arg(long, value_name = "R,MU,DELTA", allow_hyphen_values = true)]
    rmd: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SlopeArgs {
    /// Dyadic address p/2^q.
    #[arg(long, allow_hyphen_values = true)]
    dyadic: Option<String>,
    /// The slope itself, p/q.
    #[arg(long, allow_hyphen_values = true)]
    rational: Option<String>,
    /// Left-right word, e.g. RLLLRR.
    #[arg(long)]
    lr: Option<String>,
}

impl SlopeArgs {
    fn given(&self) -> SlopeInput {
        match (&self.dyadic, &self.rational, &self.lr) {
            (Some(s), _, _) => SlopeInput::Dyadic(s.clone()),
            (_, Some(s), _) => SlopeInput::Rational(s.clone()),
            (_, _, Some(s)) => SlopeInput::Lr(s.clone()),
            _ => unreachable!("clap requires one slope flag"),
        }
    }
}

#[derive(Args)]
struct OrderArgs {
    /// Order bound for interval descent and slope recognition.
    #[arg(long)]
    max_order: Option<u32>,
}

#[derive(Args)]
struct FormatArgs {
    /// JSON output (default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Aligned key/value text output.
    #[arg(long)]
    text: bool,
}

impl FormatArgs {
    fn format(&self) -> Format {
        if self.text {
            Format::Text
        } else {
            Format::Json
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveFormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveTableArg {
    Samples,
    Intervals,
}

fn positive(m: u32) -> anyhow::Result<u32> {
    anyhow::ensure!(m > 0, "multiplier must be positive");
    Ok(m)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let cfg = Config::from_env()?;
    let out = match cli.command {
        Command::Cone {
            character,
            multiplier,
            order,
            format,
        } => commands::cone(
            &character.character()?,
            positive(cfg.multiplier(multiplier))?,
            cfg.max_order(order.max_order),
            format.format(),
        )?,
        Command::Classify {
            character,
            order,
            format,
        } => commands::classify(
            &character.character()?,
            cfg.max_order(order.max_order),
            format.format(),
        )?,
        Command::Slope {
            slope,
            order,
            format,
        } => commands::slope(&slope.given(), cfg.max_order(order.max_order), format.format())?,
        Command::Cfrac {
            slope,
            odd,
            period,
            order,
            format,
        } => commands::cfrac(
            &slope.given(),
            cfg.max_order(order.max_order),
            odd,
            period,
            format.format(),
        )?,
        Command::Curve {
            lo,
            hi,
            samples,
            order,
            max_order,
            format,
            table,
            approx,
            overlay,
        } => {
            let overlay = match (&overlay.chern, &overlay.rmd) {
                (Some(s), _) => Some(input::chern(s)?),
                (_, Some(s)) => Some(input::rmd(s)?),
                _ => None,
            };
            commands::curve(&CurveRequest {
                lo: parse_rational(&lo)?,
                hi: parse_rational(&hi)?,
                samples,
                table_order: order,
                max_order: cfg.max_order(max_order),
                format: match format {
                    CurveFormatArg::Json => CurveFormat::Json,
                    CurveFormatArg::Csv => CurveFormat::Csv,
                },
                table: match table {
                    CurveTableArg::Samples => CurveTable::Samples,
                    CurveTableArg::Intervals => CurveTable::Intervals,
                },
                approx,
                overlay,
            })?
        }
        Command::Batch {
            path,
            multiplier,
            order,
        } => {
            let mut text = String::new();
            match path.as_deref() {
                Some(p) if p.as_os_str() != "-" => {
                    text = std::fs::read_to_string(p)
                        .with_context(|| format!("cannot read {}", p.display()))?;
                }
                _ => {
                    std::io::stdin()
                        .read_to_string(&mut text)
                        .context("cannot read standard input")?;
                }
            }
            commands::batch(
                &text,
                positive(cfg.multiplier(multiplier))?,
                cfg.max_order(order.max_order),
            )
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
