use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bochner_cli::{run, summary, CheckRequest, CliError, Command};
use bochner_core::embed::{CatalogSpec, PointChoice};
use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

/// Exact rigidity checks for vector-valued polynomial forms and polynomial
/// embeddings. Writes a JSON report; a short summary goes to stderr.
#[derive(Parser, Debug)]
#[command(name = "bochner", version, about)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// JSON request, or just the payload (a form, symmetric form or map).
    #[arg(long)]
    input: Option<PathBuf>,

    /// Catalog embedding: plucker, whitney_hat, whitney_ball, linear, veronese.
    #[arg(long)]
    catalog: Option<String>,

    #[arg(long)]
    n: Option<usize>,

    #[arg(long)]
    p: Option<usize>,

    /// Polynomial degree (veronese only).
    #[arg(long)]
    degree: Option<usize>,

    #[arg(long, value_enum)]
    point: Option<PointArg>,

    #[arg(long)]
    seed: Option<u64>,

    /// Include witness forms and explicit solutions in the report.
    #[arg(long)]
    emit_witness: bool,

    /// Report path; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Suppress the stderr summary.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum PointArg {
    Base,
    Random,
}

const PAYLOAD_KEYS: [&str; 4] = ["form", "sym_form", "map", "catalog"];

fn read_input(path: &Path, command: Command) -> Result<CheckRequest, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| CliError::Input(format!("{}: expected a JSON object", path.display())))?;
    let is_request = obj.contains_key("command") || PAYLOAD_KEYS.iter().any(|k| obj.contains_key(*k));
    if !is_request {
        let field = match command {
            Command::CheckWeyl => "sym_form",
            Command::FundamentalForms => "map",
            _ => "form",
        };
        value = serde_json::json!({ field: value });
    }
    let obj = value.as_object_mut().expect("object");
    match obj.get("command") {
        None => {
            obj.insert("command".into(), serde_json::to_value(command).expect("command serializes"));
        }
        Some(c) if *c == serde_json::to_value(command).expect("command serializes") => {}
        Some(c) => {
            return Err(CliError::Input(format!("command: input file says {c}, command line says {}", command.name())));
        }
    }
    serde_json::from_value(value).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn build_request(args: &Args) -> Result<CheckRequest, CliError> {
    let mut req = match &args.input {
        Some(path) => read_input(path, args.command)?,
        None => CheckRequest::new(args.command),
    };
    req.emit_witness |= args.emit_witness;
    if let Some(name) = &args.catalog {
        req.catalog = Some(CatalogSpec {
            embedding: name.clone(),
            n: args.n,
            p: args.p,
            degree: args.degree,
            point: match args.point {
                Some(PointArg::Random) => PointChoice::Random,
                _ => PointChoice::Base,
            },
            seed: args.seed,
        });
    } else {
        if args.point.is_some() || args.seed.is_some() || args.degree.is_some() {
            return Err(CliError::Input("--point, --seed and --degree need --catalog".into()));
        }
        req.n = args.n.or(req.n);
        req.p = args.p.or(req.p);
    }
    Ok(req)
}

/// Write to a sibling temporary file, then rename over the target.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

fn execute(args: &Args) -> Result<(), CliError> {
    let req = build_request(args)?;
    log::info!("running {}", req.command.name());
    let report = std::panic::catch_unwind(|| run(req))
        .map_err(|_| CliError::Internal("the engine panicked".into()))??;
    let value = serde_json::to_value(&report).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&value).map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    match &args.output {
        Some(path) => write_atomic(path, &text).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if !args.quiet {
        eprintln!("{}", summary(&value));
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match execute(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
