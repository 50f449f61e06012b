use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use kzero::cli::{self, BaseJson, IntStr, JobError, JobSpec, JobSpecJson, ParamsJson};
use kzero::verify::{self, Grid};

#[derive(Parser)]
#[command(
    name = "kzero",
    version,
    about = "K0 and intersection theory of quantum ruled surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the K0 presentation, Hilbert series and intersection data of a job.
    Run(RunArgs),
    /// Run the built-in property grid.
    Verify {
        /// Grid bounds GMAX,DMAX: genus in [0, GMAX], degrees in [-DMAX, DMAX].
        #[arg(long, default_value = "5,5", allow_hyphen_values = true)]
        grid: Grid,
    },
}

#[derive(Args)]
struct RunArgs {
    /// JSON job file; its fields override the flags below.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Emit the machine-readable report.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    series_order: Option<usize>,
    /// ruled, pnbundle or point.
    #[arg(long)]
    mode: Option<String>,
    /// Genus of the base curve (omit for a point base).
    #[arg(long)]
    genus: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    deg_e: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true)]
    deg_q: Option<BigInt>,
    /// Fiber dimension of a P^n-bundle.
    #[arg(long)]
    n: Option<usize>,
    /// Koszul classes as rank:degree pairs, e.g. 1:0,2:-1,1:-1.
    #[arg(long, allow_hyphen_values = true)]
    koszul: Option<String>,
    /// Integer relation coefficients, constant term first, e.g. 1,-3,3,-1.
    #[arg(long, allow_hyphen_values = true)]
    relation: Option<String>,
}

fn parse_int(s: &str) -> Result<IntStr, JobError> {
    s.trim()
        .parse::<BigInt>()
        .map(IntStr)
        .map_err(|_| JobError::Parse(format!("invalid integer {s:?}")))
}

impl RunArgs {
    fn flags_json(&self) -> Result<JobSpecJson, JobError> {
        let base = match (&self.genus, self.mode.as_deref()) {
            (Some(g), _) => Some(BaseJson {
                kind: "curve".into(),
                genus: Some(IntStr((*g).into())),
            }),
            (None, Some("point")) => Some(BaseJson {
                kind: "point".into(),
                genus: None,
            }),
            _ => None,
        };
        let koszul = self
            .koszul
            .as_deref()
            .map(|s| {
                s.split(',')
                    .map(|pair| {
                        let (r, d) = pair.split_once(':').ok_or_else(|| {
                            JobError::Parse(format!("Koszul entry {pair:?} is not rank:degree"))
                        })?;
                        Ok([parse_int(r)?, parse_int(d)?])
                    })
                    .collect::<Result<Vec<_>, JobError>>()
            })
            .transpose()?;
        let relation = self
            .relation
            .as_deref()
            .map(|s| s.split(',').map(parse_int).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        let params = ParamsJson {
            deg_e: self.deg_e.clone().map(IntStr),
            deg_q: self.deg_q.clone().map(IntStr),
            n: self.n.map(|n| IntStr(n.into())),
            koszul,
            relation,
        };
        Ok(JobSpecJson {
            mode: self.mode.clone(),
            base,
            parameters: (params != ParamsJson::default()).then_some(params),
            series_order: self.series_order.map(|n| IntStr(n.into())),
        })
    }

    fn job(&self) -> Result<JobSpec, JobError> {
        let mut wire = self.flags_json()?;
        if let Some(path) = &self.spec {
            let text = std::fs::read_to_string(path)
                .map_err(|e| JobError::Parse(format!("{}: {e}", path.display())))?;
            let doc: JobSpecJson =
                serde_json::from_str(&text).map_err(|e| JobError::Parse(e.to_string()))?;
            wire = wire.overlay(doc);
        }
        JobSpec::try_from(wire)
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("kzero: {e}");
        }
    }
}

fn run(args: &RunArgs) -> Result<(), JobError> {
    let job = args.job()?;
    let report = cli::run(&job)?;
    if args.json {
        emit(&format!("{}\n", report.to_json_string()));
    } else {
        emit(&report.to_string());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => match run(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("kzero: {e}");
                ExitCode::from(1)
            }
        },
        Command::Verify { grid } => {
            let summary = verify::verify(grid);
            emit(&format!("{summary}\n"));
            ExitCode::from(summary.exit_code() as u8)
        }
    }
}
