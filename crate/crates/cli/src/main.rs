//! Command-line front end for tableau promotion orbits.
//!
//! Tableaux arrive as whitespace-separated rows on standard input or via
//! `--input`. Machine-readable results go to standard output (JSON lines or
//! tableau text), diagnostics to standard error. Exit codes: 0 on success,
//! 1 on domain or data errors, 2 on usage errors.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tableau_orbits::enumerate::{census, enumerate_syt, DEFAULT_CENSUS_LIMIT};
use tableau_orbits::mdiagram::{build_mdiagram, decompose, render_svg, render_text};
use tableau_orbits::orbit::{
    orbit_length_both, orbit_length_fast, orbit_length_oracle, Method, OrbitReport,
};
use tableau_orbits::ssyt::{
    orbit_length_ssyt, orbit_length_ssyt_both, orbit_length_ssyt_oracle_report, SsytTableau,
};
use tableau_orbits::tableau::{promote_k, validate, Shape, Tableau, ValidationKind};
use tableau_orbits::Error;

#[derive(Parser)]
#[command(
    name = "tableau-orbits",
    version,
    about = "Promotion orbits of standard and column semi-standard Young tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a tableau against a validity predicate.
    Validate {
        /// Predicate to apply.
        #[arg(long, value_enum, default_value_t = KindArg::Standard)]
        kind: KindArg,
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Apply promotion to a standard tableau and print the result.
    Promote {
        /// Number of promotion steps.
        #[arg(short, default_value_t = 1)]
        k: u64,
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Render the arc diagram of a standard tableau.
    Mdiagram {
        /// Print the text rendering (the default).
        #[arg(long, conflicts_with = "svg")]
        text: bool,
        /// Write an SVG rendering to this file.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Decompose the arc diagram of a standard tableau into components.
    Components {
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Orbit length of a standard tableau under promotion.
    Orbit {
        /// Computation route.
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Orbit length of a column semi-standard tableau under promotion.
    SsytOrbit {
        /// Computation route.
        #[arg(long, value_enum, default_value_t = SsytMethodArg::Formula)]
        method: SsytMethodArg,
        /// Read the tableau from this file instead of standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Orbit statistics over every standard tableau of a rectangular shape.
    Census {
        /// Shape as ROWSxCOLS, for example 4x6.
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        /// Computation route.
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Check orbit computations over every standard tableau of a shape.
    Verify {
        /// Shape as ROWSxCOLS, for example 2x3.
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        /// Computation route; `both` compares the fast route to the oracle.
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Box-count cap (defaults to the census cap).
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Standard,
    SkewStandard,
    ColumnSsyt,
}

impl From<KindArg> for ValidationKind {
    fn from(kind: KindArg) -> ValidationKind {
        match kind {
            KindArg::Standard => ValidationKind::Standard,
            KindArg::SkewStandard => ValidationKind::SkewStandard,
            KindArg::ColumnSsyt => ValidationKind::ColumnSsyt,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Fast,
    Both,
}

impl From<MethodArg> for Method {
    fn from(method: MethodArg) -> Method {
        match method {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Fast => Method::Fast,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SsytMethodArg {
    Formula,
    Oracle,
    Both,
}

fn parse_shape(arg: &str) -> Result<Shape, String> {
    let lower = arg.to_ascii_lowercase();
    let (rows, cols) = lower
        .split_once('x')
        .ok_or_else(|| format!("expected ROWSxCOLS, got {arg:?}"))?;
    let rows: usize = rows
        .trim()
        .parse()
        .map_err(|_| format!("invalid row count in {arg:?}"))?;
    let cols: usize = cols
        .trim()
        .parse()
        .map_err(|_| format!("invalid column count in {arg:?}"))?;
    Shape::rectangular(rows, cols).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct ValidateOut {
    kind: &'static str,
    valid: bool,
}

#[derive(Serialize)]
struct ComponentOut {
    boundary: Vec<u32>,
    uniform: bool,
    arcs: Vec<(u32, u32)>,
}

#[derive(Serialize)]
struct ComponentsOut {
    n: u32,
    components: Vec<ComponentOut>,
}

#[derive(Serialize)]
struct VerifyOut {
    shape: Vec<usize>,
    tableaux: u64,
    mismatches: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Run(e)
    }
}

fn read_tableau(input: &Option<PathBuf>) -> Result<Tableau, Failure> {
    let text = match input {
        Some(path) => fs::read_to_string(path).map_err(|e| {
            Failure::Run(Error::Malformed(format!(
                "cannot read {}: {e}",
                path.display()
            )))
        })?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Run(Error::Malformed(format!("cannot read input: {e}"))))?;
            buf
        }
    };
    Ok(Tableau::parse_text(&text)?)
}

fn census_cap() -> Result<usize, Failure> {
    match std::env::var("TABLEAU_ORBITS_LIMIT") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "TABLEAU_ORBITS_LIMIT must be a positive integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_CENSUS_LIMIT),
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Validate { kind, input } => {
            let t = read_tableau(&input)?;
            let kind: ValidationKind = kind.into();
            let valid = validate(&t, kind);
            let out = ValidateOut {
                kind: kind.as_str(),
                valid,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("verdict serializes")
            );
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Promote { k, input } => {
            let t = read_tableau(&input)?;
            if !t.is_standard() {
                return Err(Failure::Run(Error::Domain(
                    "promotion requires a standard tableau".into(),
                )));
            }
            let result = promote_k(&t, k)?;
            print!("{}", result.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Mdiagram { text: _, svg, input } => {
            let t = read_tableau(&input)?;
            let m = build_mdiagram(&t)?;
            match svg {
                Some(path) => {
                    fs::write(&path, render_svg(&m)).map_err(|e| {
                        Failure::Run(Error::Malformed(format!(
                            "cannot write {}: {e}",
                            path.display()
                        )))
                    })?;
                }
                None => print!("{}", render_text(&m)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { input } => {
            let t = read_tableau(&input)?;
            let m = build_mdiagram(&t)?;
            let decomposition = decompose(&m);
            let out = ComponentsOut {
                n: m.n(),
                components: decomposition
                    .components
                    .iter()
                    .map(|c| ComponentOut {
                        boundary: c.boundary.clone(),
                        uniform: c.uniform,
                        arcs: c.arcs.iter().map(|a| (a.a(), a.b())).collect(),
                    })
                    .collect(),
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("components serialize")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { method, input } => {
            let t = read_tableau(&input)?;
            let report: OrbitReport = match method {
                MethodArg::Oracle => orbit_length_oracle(&t)?,
                MethodArg::Fast => orbit_length_fast(&t)?,
                MethodArg::Both => orbit_length_both(&t)?,
            };
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::SsytOrbit { method, input } => {
            let t = SsytTableau::new(read_tableau(&input)?)?;
            let report = match method {
                SsytMethodArg::Formula => orbit_length_ssyt(&t, None)?,
                SsytMethodArg::Oracle => orbit_length_ssyt_oracle_report(&t)?,
                SsytMethodArg::Both => orbit_length_ssyt_both(&t)?,
            };
            println!("{}", report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { shape, method } => {
            let record = census(&shape, method.into(), census_cap()?)?;
            println!("{}", record.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            shape,
            method,
            limit,
        } => {
            let cap = match limit {
                Some(given) => given,
                None => census_cap()?,
            };
            if shape.boxes() > cap {
                return Err(Failure::Run(Error::LimitExceeded {
                    what: "verify",
                    boxes: shape.boxes(),
                    limit: cap,
                }));
            }
            let mut tableaux = 0u64;
            for t in enumerate_syt(&shape) {
                tableaux += 1;
                let outcome = match method {
                    MethodArg::Oracle => orbit_length_oracle(&t).map(|_| ()),
                    MethodArg::Fast => orbit_length_fast(&t).map(|_| ()),
                    MethodArg::Both => orbit_length_both(&t).map(|_| ()),
                };
                if let Err(e) = outcome {
                    eprintln!("error: {e}");
                    print!("{}", t.to_text());
                    return Ok(ExitCode::from(1));
                }
            }
            let out = VerifyOut {
                shape: shape.rows().to_vec(),
                tableaux,
                mismatches: 0,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("verify summary serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
