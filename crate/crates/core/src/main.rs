use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twobridge_hf::cli::{
    census_rows, hf_output, invariants_record, stable_model, stable_record, to_json,
    write_census, CliError, Flavor, SpincSelection, Surgery,
};
use twobridge_hf::complexes::export_svg;
use twobridge_hf::twobridge::normalize;

#[derive(Parser)]
#[command(name = "twobridge-hf", version, about = "Floer homology of surgeries on two-bridge knots")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, signature, genus, determinant and d-invariants.
    Invariants {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        json: bool,
    },
    /// Floer homology of a surgery, per Spin^c structure.
    Hf {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        /// `large`, `0`, or a nonzero integer.
        #[arg(long, allow_negative_numbers = true)]
        surgery: Surgery,
        /// An integer label or `all`.
        #[arg(long, allow_negative_numbers = true, default_value = "all")]
        spinc: SpincSelection,
        /// `plus`, `minus` or `hat`; the last two only for large surgery.
        #[arg(long, default_value = "plus")]
        flavor: Flavor,
        #[arg(long)]
        json: bool,
    },
    /// The stable model complex, optionally reflected, with its homology.
    Stable {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, allow_negative_numbers = true)]
        reflect: Option<i64>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// CSV table of classical invariants and d-invariants.
    Census {
        #[arg(long = "max-p", allow_negative_numbers = true)]
        max_p: i64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Invariants { p, q, json } => {
            let r = invariants_record(normalize(p, q)?);
            Ok(if json { to_json(&r) } else { format!("{r}\n") })
        }
        Command::Hf {
            p,
            q,
            surgery,
            spinc,
            flavor,
            json,
        } => {
            let out = hf_output(normalize(p, q)?, surgery, flavor, spinc)?;
            Ok(if json { to_json(&out) } else { format!("{out}\n") })
        }
        Command::Stable {
            p,
            q,
            reflect,
            svg,
            json,
        } => {
            let model = stable_model(normalize(p, q)?, reflect)?;
            if let Some(path) = svg {
                export_svg(&model, path)?;
            }
            let r = stable_record(&model);
            Ok(if json { to_json(&r) } else { format!("{r}\n") })
        }
        Command::Census { max_p, out } => {
            let rows = census_rows(max_p)?;
            match out {
                Some(path) => {
                    write_census(&rows, BufWriter::new(File::create(path)?))?;
                    Ok(String::new())
                }
                None => {
                    let mut buf = Vec::new();
                    write_census(&rows, &mut buf)?;
                    Ok(String::from_utf8(buf).expect("census is ASCII"))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
