//! Command-line interface: `construct`, `verify`, `selfcheck`, `audit`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::certificate::{reverify_path, Outcome};
use crate::error::Error;
use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::pipeline::{run_construction, DEFAULT_RETRIES};
use crate::selfcheck::run_selfcheck;
use crate::verify::DimensionAudit;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_RETRY_EXHAUSTED: u8 = 2;
pub const EXIT_NOT_REPRODUCED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz98",
    version,
    about = "12-nodal plane octics with a simply branched pencil over F_p"
)]
pub struct Cli {
    /// More log output (-v info, -vv debug)
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the construction and write a certificate
    Construct {
        #[arg(long, default_value_t = DEFAULT_PRIME, value_parser = parse_prime)]
        prime: u32,
        /// Defaults to a fresh random seed, echoed on stdout
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_RETRIES)]
        retries: u32,
        #[arg(long, default_value = "certificate.json")]
        out: PathBuf,
        /// Run seeds seed..seed+N-1 in parallel, writing OUT.<seed>
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
    },
    /// Recheck a certificate from its raw data
    Verify { certificate: PathBuf },
    /// Run the fixed-seed invariant suite
    Selfcheck,
    /// Print the dimension count
    Audit {
        #[arg(long, hide = true, default_value_t = 9)]
        genus: i64,
    },
}

fn parse_prime(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|e| format!("{e}"))?;
    PrimeField::new(p)
        .map(|f| f.modulus())
        .map_err(|e| e.to_string())
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
}

/// Parses `args` and runs the command. Help and version exit 0; any other
/// parse error is a usage error.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    init_logging(cli.verbose);
    match cli.command {
        Command::Construct {
            prime,
            seed,
            retries,
            out,
            jobs,
        } => {
            let seed = seed.unwrap_or_else(rand::random);
            cmd_construct(prime, seed, retries, &out, jobs)
        }
        Command::Verify { certificate } => cmd_verify(&certificate),
        Command::Selfcheck => cmd_selfcheck(),
        Command::Audit { genus } => cmd_audit(genus),
    }
}

fn job_path(out: &Path, seed: u64) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".{seed}"));
    PathBuf::from(s)
}

fn construct_one(prime: u32, seed: u64, retries: u32, out: &Path) -> u8 {
    println!("seed: {seed}");
    let cert = match run_construction(prime, seed, retries) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    if let Err(e) = cert.write(out) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return EXIT_DATA;
    }
    println!("seed {seed}: {} -> {}", cert.status, out.display());
    if cert.is_success() {
        EXIT_OK
    } else {
        EXIT_RETRY_EXHAUSTED
    }
}

pub fn cmd_construct(prime: u32, seed: u64, retries: u32, out: &Path, jobs: u32) -> u8 {
    if jobs == 1 {
        return construct_one(prime, seed, retries, out);
    }
    let codes: Vec<u8> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs as u64)
            .map(|k| {
                let s = seed.wrapping_add(k);
                let path = job_path(out, s);
                scope.spawn(move || construct_one(prime, s, retries, &path))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or(EXIT_DATA))
            .collect()
    });
    codes.into_iter().max().unwrap_or(EXIT_OK)
}

pub fn cmd_verify(path: &Path) -> u8 {
    let report = match reverify_path(path) {
        Ok(r) => r,
        Err(Error::Io(e)) => {
            eprintln!("error: cannot open {}: {e}", path.display());
            return EXIT_NO_INPUT;
        }
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_DATA;
        }
    };
    for (name, ok) in &report.checks {
        println!("{:<14} {name}", if *ok { "reproduced" } else { "MISMATCH" });
    }
    println!("status: {}", report.status);
    match report.outcome {
        Outcome::Reproduced => {
            println!("verdict: REPRODUCED");
            EXIT_OK
        }
        Outcome::Tampered => {
            println!("verdict: TAMPERED");
            EXIT_NOT_REPRODUCED
        }
        Outcome::Undecided => {
            println!("verdict: UNDECIDED");
            EXIT_NOT_REPRODUCED
        }
    }
}

pub fn cmd_selfcheck() -> u8 {
    let results = run_selfcheck();
    for r in &results {
        println!("{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
    }
    if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn cmd_audit(genus: i64) -> u8 {
    let audit = DimensionAudit::for_genus(genus);
    print!("{}", audit.render());
    if audit.holds() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
