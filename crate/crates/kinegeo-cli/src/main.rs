//! `kinegeo`: verify the catalog, show entries and dump it.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kinegeo::exactnum::DEFAULT_SEED;
use kinegeo::speccli::{
    dump_json, dump_text, emit_report, run_verification, show_algebra, show_geometry, Corruption, Format, Selection,
    Suite, Workspace,
};

#[derive(Parser)]
#[command(name = "kinegeo", version, about = "Exact verification of kinematical algebras and their geometries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum SuiteArg {
    All,
    Closure,
    Geometry,
    Contraction,
    Duality,
    Additivity,
    Contrast,
    Kinematics,
    Finite,
    Combinatory,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Kind {
    Algebra,
    Geometry,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Only checks involving this algebra or geometry.
        #[arg(long, value_name = "NAME")]
        only: Option<String>,
        /// Spec files merged into the catalog, in order.
        #[arg(long = "spec", value_name = "FILE")]
        specs: Vec<PathBuf>,
        /// Sample seed in hexadecimal.
        #[arg(long, value_name = "HEX", value_parser = parse_seed)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Include per-check wall times (makes reports nondeterministic).
        #[arg(long)]
        timings: bool,
        /// Corrupt one entry before verifying: algebra:NAME, geometry:NAME,
        /// recipe:SRC->DST or duality:NAME.
        #[arg(long = "inject", value_name = "FAULT")]
        inject: Vec<String>,
    },
    /// Print the normalized components of one entry.
    Show {
        #[arg(value_enum)]
        kind: Kind,
        name: String,
        #[arg(long = "spec", value_name = "FILE")]
        specs: Vec<PathBuf>,
    },
    /// Print the whole catalog.
    DumpCatalog {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long = "spec", value_name = "FILE")]
        specs: Vec<PathBuf>,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hexadecimal seed {:?}: {}", s, e))
}

/// Usage-level failure: message on stderr, exit status 2.
fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("kinegeo: {}", msg);
    ExitCode::from(2)
}

fn load(specs: &[PathBuf]) -> Result<Workspace, String> {
    let mut ws = Workspace::builtin();
    for path in specs {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
        ws.load_spec(&path.display().to_string(), &text).map_err(|e| e.to_string())?;
    }
    Ok(ws)
}

fn suites(s: SuiteArg) -> Vec<Suite> {
    let name = match s {
        SuiteArg::All => "all",
        SuiteArg::Closure => "closure",
        SuiteArg::Geometry => "geometry",
        SuiteArg::Contraction => "contraction",
        SuiteArg::Duality => "duality",
        SuiteArg::Additivity => "additivity",
        SuiteArg::Contrast => "contrast",
        SuiteArg::Kinematics => "kinematics",
        SuiteArg::Finite => "finite",
        SuiteArg::Combinatory => "combinatory",
    };
    Suite::parse(name).expect("suite names match")
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {}", p.display(), e)),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, only, specs, seed, format, out, timings, inject } => {
            let mut ws = match load(&specs) {
                Ok(ws) => ws,
                Err(e) => return usage(e),
            };
            for f in &inject {
                if let Err(e) = f.parse::<Corruption>().and_then(|c| ws.corrupt(&c)) {
                    return usage(e);
                }
            }
            let only = match only {
                None => None,
                Some(n) => match ws.resolve(&n) {
                    Some((canonical, _)) => Some(canonical),
                    None => return usage(format!("unknown algebra or geometry {:?}", n)),
                },
            };
            let sel = Selection { suites: suites(suite), only, seed: seed.unwrap_or(DEFAULT_SEED), timings };
            let report = run_verification(&ws, &sel);
            if let Err(e) = write_out(out.as_ref(), &emit_report(&report, format.into())) {
                return usage(e);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for c in report.failures() {
                    eprintln!("FAIL {}/{} {}: {}", c.suite.name(), c.check, c.subject, c.detail);
                }
                ExitCode::from(1)
            }
        }
        Command::Show { kind, name, specs } => {
            let ws = match load(&specs) {
                Ok(ws) => ws,
                Err(e) => return usage(e),
            };
            let text = match kind {
                Kind::Algebra => show_algebra(&ws, &name),
                Kind::Geometry => show_geometry(&ws, &name),
            };
            match text {
                Some(t) => {
                    print!("{}", t);
                    ExitCode::SUCCESS
                }
                None => usage(format!("unknown {} {:?}", if matches!(kind, Kind::Algebra) { "algebra" } else { "geometry" }, name)),
            }
        }
        Command::DumpCatalog { format, specs } => {
            let ws = match load(&specs) {
                Ok(ws) => ws,
                Err(e) => return usage(e),
            };
            print!("{}", if matches!(format, FormatArg::Json) { dump_json(&ws) } else { dump_text(&ws) });
            ExitCode::SUCCESS
        }
    }
}
