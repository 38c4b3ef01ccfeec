use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ramanujan49::witness::{default_tables, load_tables, TableSet};
use ramanujan49_cli::{
    cmd_congruence, cmd_derive, cmd_selfcheck, cmd_verify, tables_text, Common, CongruenceKind,
    Identity, RunReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "ramanujan49",
    version,
    about = "Exact checks of the mod 49 partition witness identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,

    /// Worker threads for independent checks (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    /// Coefficient table file (default: the tables built into the binary).
    #[arg(long, global = true)]
    tables: Option<PathBuf>,

    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities coefficient by coefficient (default: all of them).
    Verify {
        #[arg(value_enum)]
        ids: Vec<Identity>,
        /// Number of coefficients compared.
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Re-derive one residue component by the matrix method.
    Derive {
        /// 4 for f_7^3/f_1^4, 8 for q f_7^7/f_1^8.
        #[arg(long, value_parser = ["4", "8"])]
        ell: String,
        /// Progression residue s in 0..=6 (the 7n + s part).
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..7))]
        residue: u64,
        /// Working order in q for the series cross-check.
        #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Sweep congruences over arithmetic progressions.
    Congruence {
        #[arg(long, value_enum)]
        kind: CongruenceKind,
        /// Number of progression terms, n = 0..count.
        #[arg(long)]
        count: Option<usize>,
        /// Residues r for p(49n + r) (default 19, 33, 40).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(0..49))]
        residue: Vec<u64>,
        /// Color steps r for p_(1,r) (default all).
        #[arg(long = "color-step", value_delimiter = ',', value_parser = ["2", "4", "7", "17"])]
        color_step: Vec<String>,
    },
    /// Print the coefficient tables.
    Tables,
    /// Randomized kernel cross-checks.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

fn load(path: &Option<PathBuf>) -> Result<TableSet, String> {
    match path {
        None => Ok(default_tables()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            load_tables(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
    }
}

fn render(report: &RunReport, emit: Emit) -> ExitCode {
    match emit {
        Emit::Text => {
            println!("{report}");
            if let Some(out) = &report.output {
                if let Some(form) = out.get("reduced_form") {
                    println!(
                        "reduced form: q^{} * ({})",
                        form["q_power"],
                        form["poly"].as_str().unwrap_or_default()
                    );
                }
                if let Some(cols) = out.get("columns").and_then(|c| c.as_array()) {
                    for col in cols {
                        let vals: Vec<&str> = col["values"]
                            .as_array()
                            .map(|a| a.iter().filter_map(|v| v.as_str()).collect())
                            .unwrap_or_default();
                        println!(
                            "{}_{}: {}",
                            col["column"].as_str().unwrap_or_default(),
                            out["r"],
                            vals.join(" ")
                        );
                    }
                }
            }
        }
        Emit::Structured => println!("{}", report.to_json()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = Common {
        jobs: cli.jobs.map(|j| j as usize),
        timings: cli.timings,
    };
    let tables = match load(&cli.tables) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let report = match cli.command {
        Command::Verify { ids, order } => cmd_verify(&ids, order as usize, &tables, &common),
        Command::Derive {
            ell,
            residue,
            order,
        } => cmd_derive(
            ell.parse().expect("restricted by clap"),
            residue as usize,
            order as usize,
            &tables,
            &common,
        ),
        Command::Congruence {
            kind,
            count,
            residue,
            color_step,
        } => {
            let count = count.unwrap_or(match kind {
                CongruenceKind::PMod49 => 200,
                CongruenceKind::TwoColor => 100,
            });
            let residue: Vec<usize> = residue.into_iter().map(|r| r as usize).collect();
            let color_step: Vec<usize> = color_step
                .iter()
                .map(|r| r.parse().expect("restricted by clap"))
                .collect();
            cmd_congruence(kind, count, &residue, &color_step, &common)
        }
        Command::Tables => {
            match cli.emit {
                Emit::Text => print!("{}", tables_text(&tables)),
                Emit::Structured => print!("{}", tables.to_json()),
            }
            return ExitCode::SUCCESS;
        }
        Command::Selfcheck { seed, samples } => cmd_selfcheck(seed, samples, &common),
    };
    render(&report, cli.emit)
}
