//! Command line front end. Subcommands either read a complex file (JSON or
//! plain text) or build a named complex, then print a report in the chosen
//! format. Exit codes: 0 all good, 2 an asserted fact failed or a required
//! exact answer was not reached, 3 the input could not be read or parsed.

use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use topo_cli::catalog::{build_twin_complexes, square};
use topo_cli::io::{self, Repr};
use topo_cli::render::{flatten_tsv, Format};
use topo_cli::reports::{
    buchstaber_json, buchstaber_text, invariants_report, parse_field, BettiMethod, BettiReport,
    MultigradedReport, TorReport,
};
use topo_cli::theorems::{
    lift_obstruction_report, search_json, search_text, twin_separation_report,
};
use topo_core::error::Error;
use topo_core::{
    ru4_lift_search, FieldSpec, LiftMode, RUComplex, Result, SimplicialComplex, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "topo",
    version,
    about = "Invariants, Betti tables, and torus representation searches for simplicial complexes"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to the machine's available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Node budget for the exact width search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum LiftModeArg {
    Staged,
    Backtrack,
}

impl From<LiftModeArg> for LiftMode {
    fn from(mode: LiftModeArg) -> LiftMode {
        match mode {
            LiftModeArg::Staged => LiftMode::Staged,
            LiftModeArg::Backtrack => LiftMode::Backtrack,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every invariant the tool knows for a complex file.
    Invariants { file: PathBuf },
    /// Bigraded Betti numbers of a complex file.
    Betti {
        file: PathBuf,
        /// Engine: read off a minimal resolution, sweep full subcomplexes,
        /// or rank the ambient cochain complex directly.
        #[arg(long, value_enum, default_value_t = BettiMethod::Hochster)]
        method: BettiMethod,
        /// Coefficients: gf2, q, or gfp:<p>. The taylor engine is
        /// field-free and ignores this.
        #[arg(long, value_parser = parse_field, default_value = "gf2")]
        field: FieldSpec,
        /// Break entries down by vertex subset instead of degree.
        #[arg(long)]
        multigraded: bool,
    },
    /// Torus representation widths and the Buchstaber bracket of a file.
    Buchstaber {
        file: PathBuf,
        /// Exit 2 unless the real width came out exact within the budget.
        #[arg(long)]
        exact_real: bool,
    },
    /// Search for an integral lift of the rank-4 real universal cover.
    #[command(name = "ru4-lift")]
    Ru4Lift {
        #[arg(long, value_enum, default_value_t = LiftModeArg::Staged)]
        mode: LiftModeArg,
    },
    /// Products of positive-degree Tor classes of a complex file.
    TorProducts { file: PathBuf },
    /// Write a named complex in the standard file format.
    Emit {
        #[command(subcommand)]
        which: EmitCmd,
    },
    /// Replay the two flagship computations end to end.
    Paper {
        #[command(subcommand)]
        which: PaperCmd,
    },
}

#[derive(Subcommand)]
enum EmitCmd {
    /// Real universal complex of the given rank.
    Ru {
        #[arg(long)]
        n: usize,
    },
    /// First complex of the equal-tables pair.
    K1,
    /// Second complex of the equal-tables pair.
    K2,
    /// Nine-vertex base of k1, before resolving.
    L1,
    /// Nine-vertex base of k2, before resolving.
    L2,
    /// Boundary of the square.
    Square,
    /// The complex on m vertices in which every vertex is ghost.
    Om {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum PaperCmd {
    /// No integral lift for the rank-4 real universal complex.
    #[command(name = "thm1.3")]
    Thm13 {
        #[arg(long, value_enum, default_value_t = LiftModeArg::Staged)]
        mode: LiftModeArg,
    },
    /// Equal Betti tables, different torus invariants.
    #[command(name = "thm1.5")]
    Thm15,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    process::exit(code);
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Parse { .. } | Error::BadFormat(_) => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Invariants { file } => {
            let k = io::read_complex(file)?;
            let report = invariants_report(&k, cli.budget)?;
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Tsv => print!("{}", flatten_tsv(&report.to_json())),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(0)
        }
        Cmd::Betti {
            file,
            method,
            field,
            multigraded,
        } => {
            let k = io::read_complex(file)?;
            if *multigraded {
                let report = MultigradedReport::new(&k, *method, *field)?;
                match cli.format {
                    Format::Json => println!("{}", report.to_json()),
                    Format::Tsv => print!("{}", report.to_tsv()),
                    Format::Text => print!("{}", report.to_text()),
                }
            } else {
                let report = BettiReport::new(&k, *method, *field)?;
                match cli.format {
                    Format::Json => println!("{}", report.to_json()),
                    Format::Tsv => print!("{}", report.to_tsv()),
                    Format::Text => print!("{}", report.to_text()),
                }
            }
            Ok(0)
        }
        Cmd::Buchstaber { file, exact_real } => {
            let k = io::read_complex(file)?;
            let report = topo_core::buchstaber_report(&k, cli.budget)?;
            match cli.format {
                Format::Json => println!("{}", buchstaber_json(&report)),
                Format::Tsv => print!("{}", flatten_tsv(&buchstaber_json(&report))),
                Format::Text => print!("{}", buchstaber_text(&report)),
            }
            if *exact_real && report.r_real.is_none() {
                eprintln!("error: budget exhausted before the real width was exact; rerun with a larger --budget");
                return Ok(2);
            }
            Ok(0)
        }
        Cmd::Ru4Lift { mode } => {
            let report = ru4_lift_search((*mode).into())?;
            match cli.format {
                Format::Json => println!("{}", search_json(&report)),
                Format::Tsv => print!("{}", flatten_tsv(&search_json(&report))),
                Format::Text => print!("{}", search_text(&report)),
            }
            Ok(0)
        }
        Cmd::TorProducts { file } => {
            let k = io::read_complex(file)?;
            let report = TorReport::new(&k)?;
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Tsv => print!("{}", flatten_tsv(&report.to_json())),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(0)
        }
        Cmd::Emit { which } => {
            let (k, repr) = build_emit(which)?;
            let out = match cli.format {
                Format::Json => io::complex_to_json(&k, repr)?,
                Format::Tsv | Format::Text => io::complex_to_text(&k)?,
            };
            print!("{out}");
            Ok(0)
        }
        Cmd::Paper { which } => {
            let report = match which {
                PaperCmd::Thm13 { mode } => lift_obstruction_report((*mode).into(), cli.budget)?,
                PaperCmd::Thm15 => twin_separation_report(cli.budget)?,
            };
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Tsv => print!("{}", flatten_tsv(&report.to_json())),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.pass() { 0 } else { 2 })
        }
    }
}

fn build_emit(which: &EmitCmd) -> Result<(SimplicialComplex, Repr)> {
    Ok(match which {
        EmitCmd::Ru { n } => (RUComplex::new(*n)?.complex()?, Repr::Facets),
        EmitCmd::K1 => (build_twin_complexes()?.k1, Repr::MinimalNonfaces),
        EmitCmd::K2 => (build_twin_complexes()?.k2, Repr::MinimalNonfaces),
        EmitCmd::L1 => (build_twin_complexes()?.l1, Repr::MinimalNonfaces),
        EmitCmd::L2 => (build_twin_complexes()?.l2, Repr::MinimalNonfaces),
        EmitCmd::Square => (square(), Repr::Facets),
        EmitCmd::Om { m } => (SimplicialComplex::from_facets(*m, &[])?, Repr::Facets),
    })
}
