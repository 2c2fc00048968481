use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use brieskorn::{
    bp4m2_status, bp4m_order, certify, classify, run_census, ExponentVector, SearchSpec,
    DEFAULT_SIGNATURE_BUDGET,
};
use brieskorn_cli::record::RecordDto;
use brieskorn_cli::{cache, output, CliError};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Brieskorn-Pham links: diffeomorphism class and Sasakian-Einstein certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify exponent vectors and check the Einstein certificate
    Classify(ClassifyArgs),
    /// Enumerate, classify, and certify all links of one dimension
    Search(SearchArgs),
    /// Order of bP_{4m}, or status of bP_{4m+2}
    Bp(BpArgs),
}

#[derive(Clone)]
struct Exponents(Vec<u64>);

fn parse_exponents(s: &str) -> Result<Exponents, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad exponent {t:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Exponents)
}

#[derive(Args)]
struct ClassifyArgs {
    /// Exponent vectors, each comma-separated: 2,3,7,35
    #[arg(required = true, value_parser = parse_exponents)]
    vectors: Vec<Exponents>,
    #[arg(long, value_enum, default_value_t = ClassifyFormat::Text)]
    format: ClassifyFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassifyFormat {
    Text,
    Json,
}

#[derive(Args)]
struct SearchArgs {
    /// Link dimension (odd, at least 5)
    #[arg(long)]
    dim: u32,
    /// Emit records in this format instead of the summary table
    #[arg(long, value_enum)]
    format: Option<RecordFormat>,
    /// Write records to this file (keeps the table on stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 means one per core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Abort if a candidate's exponent product exceeds this
    #[arg(long, default_value_t = DEFAULT_SIGNATURE_BUDGET)]
    max_product: u64,
    /// Cap on the largest exponent (makes sum-1 families finite)
    #[arg(long)]
    max_last_entry: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BpArgs {
    /// Dimension 4m (m >= 2): print |bP_{4m}|
    #[arg(long)]
    order: Option<u32>,
    /// Dimension 4m+2 (m >= 1): print trivial/order_two/unknown
    #[arg(long)]
    status: Option<u32>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Search(args) => run_search(args),
        Command::Bp(args) => run_bp(args),
    }
}

fn run_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let mut dtos = Vec::with_capacity(args.vectors.len());
    for Exponents(entries) in &args.vectors {
        let a = ExponentVector::new(entries.clone())?;
        let class = classify(&a)?;
        let certificate = certify(&a)?;
        dtos.push(RecordDto::new(a.entries(), a.link_dimension(), &class, &certificate));
    }
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match args.format {
        ClassifyFormat::Text => {
            for (i, dto) in dtos.iter().enumerate() {
                if i > 0 {
                    writeln!(w)?;
                }
                output::write_text(&mut w, dto)?;
            }
        }
        ClassifyFormat::Json => {
            serde_json::to_writer_pretty(&mut w, &dtos)?;
            writeln!(w)?;
        }
    }
    Ok(())
}

fn run_search(args: SearchArgs) -> Result<(), CliError> {
    let mut spec = SearchSpec::new(args.dim)?.with_max_product(args.max_product);
    if let Some(cap) = args.max_last_entry {
        spec = spec.with_max_last_entry(cap);
    }

    let dtos = match cache::load(&spec) {
        Some(dtos) => dtos,
        None => {
            let (_, records) = run_census(&spec, args.jobs)?;
            let dtos: Vec<RecordDto> = records.iter().map(RecordDto::from).collect();
            cache::store(&spec, &dtos)?;
            dtos
        }
    };
    let table = output::table_from_dtos(args.dim, &dtos);

    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match (args.format, args.out) {
        (None, _) => write!(w, "{table}")?,
        (Some(format), Some(path)) => {
            let mut file = fs::File::create(&path)?;
            write_records(&mut file, format, &dtos)?;
            write!(w, "{table}")?;
        }
        (Some(format), None) => write_records(&mut w, format, &dtos)?,
    }
    Ok(())
}

fn write_records(w: &mut impl Write, format: RecordFormat, dtos: &[RecordDto]) -> Result<(), CliError> {
    match format {
        RecordFormat::Json => output::write_json_lines(w, dtos),
        RecordFormat::Csv => output::write_csv(w, dtos),
    }
}

fn run_bp(args: BpArgs) -> Result<(), CliError> {
    if let Some(dim) = args.order {
        if dim % 4 != 0 || dim < 8 {
            return Err(CliError::Usage(format!(
                "--order takes a dimension 4m with m >= 2, got {dim}"
            )));
        }
        println!("{}", bp4m_order(dim / 4)?);
    } else if let Some(dim) = args.status {
        if dim % 4 != 2 || dim < 6 {
            return Err(CliError::Usage(format!(
                "--status takes a dimension 4m+2 with m >= 1, got {dim}"
            )));
        }
        println!("{}", bp4m2_status((dim - 2) / 4).as_str());
    }
    Ok(())
}
