use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use rotor_bch_cli::bench::cmd_bench;
use rotor_bch_cli::{
    cmd_compose, cmd_exp, cmd_log, cmd_velocity, Backend, CliError, GeneratorRecord, MatrixInput,
    Result, VelocityInput,
};

/// Compose Lorentz transformations through their bivector generators.
#[derive(Parser, Debug)]
#[command(name = "rotor-bch", version)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// BCH implementation used by `compose`.
    #[arg(long, value_enum, default_value_t = Backend::Pauli, global = true)]
    backend: Backend,

    /// JSON input file, or `-` for stdin.
    #[arg(long, default_value = "-", global = true)]
    input: String,

    /// Emit JSON (default for all commands except `bench`).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Emit human-readable text.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Left-fold BCH over a JSON array of generators.
    Compose,
    /// Lorentz matrix of one generator, by rotor and by matrix exponential.
    Exp,
    /// Principal generator of a 4×4 Lorentz matrix (16 row-major entries).
    Log,
    /// Compose two velocities given as {"beta1": [..], "beta2": [..]}.
    Velocity,
    /// Time the pauli, ga and dense paths on seeded random pairs.
    Bench {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input<T: DeserializeOwned>(input: &str) -> Result<T> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(PathBuf::from(input))
            .map_err(|e| CliError::Malformed(format!("{input}: {e}")))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit<T: Serialize>(value: &T, text: Option<String>) -> Result<()> {
    match text {
        Some(t) => print!("{t}"),
        None => println!("{}", serde_json::to_string_pretty(value)?),
    }
    Ok(())
}

fn run(args: Args) -> Result<()> {
    let as_text = |default_text: bool| args.text || (default_text && !args.json);
    match args.command {
        Command::Compose => {
            let inputs: Vec<GeneratorRecord> = read_input(&args.input)?;
            let r = cmd_compose(&inputs, args.backend)?;
            emit(&r, as_text(false).then(|| r.to_text()))
        }
        Command::Exp => {
            let g: GeneratorRecord = read_input(&args.input)?;
            let r = cmd_exp(&g)?;
            emit(&r, as_text(false).then(|| r.to_text()))
        }
        Command::Log => {
            let m: MatrixInput = read_input(&args.input)?;
            let r = cmd_log(&m.entries()?)?;
            emit(&r, as_text(false).then(|| r.to_text()))
        }
        Command::Velocity => {
            let v: VelocityInput = read_input(&args.input)?;
            let r = cmd_velocity(&v.beta1, &v.beta2)?;
            emit(&r, as_text(false).then(|| r.to_text()))
        }
        Command::Bench { n, seed } => {
            if n == 0 {
                return Err(CliError::Malformed("--n must be at least 1".into()));
            }
            let r = cmd_bench(n, seed);
            emit(&r, as_text(true).then(|| r.to_text()))
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
