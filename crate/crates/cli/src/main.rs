use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use symrees_cli::jobfile::{Command, FamilyChoice, LocatedCommand};
use symrees_cli::{
    parse_error_report, parse_jobfile, render_text, run_job, JobOptions, JobSpec, OutputFormat, RunOptions,
};

#[derive(Parser)]
#[command(
    name = "symrees",
    version,
    about = "Exact symbolic powers, Hilbert series and multiplicity checks"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalFlags,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct GlobalFlags {
    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for every randomized choice.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest S-polynomial degree processed by Buchberger.
    #[arg(long = "gb-degree-cap", global = true)]
    gb_degree_cap: Option<u32>,
    /// Largest truncation N tried by local lengths.
    #[arg(long = "local-N-cap", global = true)]
    local_n_cap: Option<u32>,
    /// Wall-clock budget for the whole job.
    #[arg(long = "time-budget-sec", global = true)]
    time_budget_sec: Option<f64>,
    /// Skip stages flagged as slow.
    #[arg(long = "skip-slow", global = true)]
    skip_slow: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Edge,
    Fermat,
    Jacobian,
}

impl From<FamilyArg> for FamilyChoice {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Edge => FamilyChoice::Edge,
            FamilyArg::Fermat => FamilyChoice::Fermat,
            FamilyArg::Jacobian => FamilyChoice::Jacobian,
        }
    }
}

#[derive(Subcommand)]
enum Sub {
    /// Run a jobfile (`-` reads standard input).
    Run { file: String },
    /// Parse and validate a jobfile without running it.
    Check { file: String },
    /// Replicate the published numbers for one family.
    VerifyPaper {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Print a built-in family instance.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<u32>,
        /// Work over Q without the cyclotomic field (Fermat only).
        #[arg(long)]
        rational: bool,
    },
}

impl GlobalFlags {
    fn options(&self) -> JobOptions {
        JobOptions {
            format: self.format.map(|f| match f {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            }),
            seed: self.seed,
            gb_degree_cap: self.gb_degree_cap,
            local_n_cap: self.local_n_cap,
            time_budget_sec: self.time_budget_sec,
            skip_slow: self.skip_slow.then_some(true),
        }
    }
}

fn read_source(file: &str) -> std::io::Result<String> {
    if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

fn emit(report: &Value, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("json values serialize")
        ),
        OutputFormat::Text => print!("{}", render_text(report)),
    }
}

fn single_command(command: Command) -> JobSpec {
    JobSpec {
        ring: None,
        ideals: Vec::new(),
        polys: Vec::new(),
        options: JobOptions::default(),
        commands: vec![LocatedCommand { line: 0, command }],
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = cli.global.options();
    let job = match cli.command {
        sub @ (Sub::Run { .. } | Sub::Check { .. }) => {
            let (file, check_only) = match sub {
                Sub::Run { file } => (file, false),
                Sub::Check { file } => (file, true),
                _ => unreachable!(),
            };
            let text = match read_source(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("symrees: cannot read {file}: {e}");
                    return ExitCode::from(1);
                }
            };
            match parse_jobfile(&text) {
                Ok(job) if check_only => {
                    println!("ok: {} command(s)", job.commands.len());
                    return ExitCode::SUCCESS;
                }
                Ok(job) => job,
                Err(d) => {
                    let format = flags.format.unwrap_or(OutputFormat::Text);
                    match format {
                        OutputFormat::Json => emit(&parse_error_report(&d), format),
                        OutputFormat::Text => eprintln!("symrees: {file}: {d}"),
                    }
                    return ExitCode::from(1);
                }
            }
        }
        Sub::VerifyPaper { family, n } => single_command(Command::VerifyPaper {
            family: family.into(),
            n,
        }),
        Sub::Family { family, n, rational } => single_command(Command::Family {
            family: family.into(),
            n,
            cyclotomic: !rational,
        }),
    };
    let opts = RunOptions::resolve(&job.options.merged(&flags));
    let (report, code) = run_job(&job, &opts);
    emit(&report, opts.format);
    ExitCode::from(code as u8)
}
