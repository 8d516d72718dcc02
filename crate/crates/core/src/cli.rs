//! Command-line surface. [`run`] takes explicit streams so the binary stays
//! a thin wrapper and every command is testable in-process.
//!
//! Exit codes: 0 success, 1 usage, 2 invalid spec, 3 data or I/O error.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::evaluator::first_failure;
use crate::search::default_resolution;
use crate::table::{format_real, read_table, write_table};
use crate::{
    evaluate_batch, front_sample, generate_suite, igd, pareto_set_sample, parse_spec, perturb_experiment,
    random_search, Error, ProblemSpec, SuiteRanges,
};

#[derive(Parser)]
#[command(name = "gpd", version, about = "Generalized Position-Distance benchmark problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a spec and print it in canonical form with derived sizes
    New {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Evaluate decision vectors (one per row)
    Eval {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        io: InOut,
    },
    /// Sample the reference Pareto front
    Front {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        resolution: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample decision vectors on the Pareto set
    Pset {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded family of specs into a directory
    Suite {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Parameter ranges file; defaults cover every field
        #[arg(long = "in")]
        ranges: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure objective displacement under noise on the distance variables
    Perturb {
        #[command(flatten)]
        spec: SpecArg,
        #[command(flatten)]
        io: InOut,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Inverted generational distance of an approximation set
    Igd {
        /// Reference front CSV
        #[arg(long = "ref")]
        reference: PathBuf,
        /// Approximation set CSV
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Uniform random search baseline
    Search {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        seed: u64,
        /// Reference front resolution used for scoring
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArg {
    #[arg(long = "spec")]
    path: PathBuf,
}

#[derive(Args)]
struct InOut {
    /// Input CSV; standard input when omitted
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output CSV; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::InvalidSpec(_) | Error::Suite(_) => 2,
            Error::InvalidArgument(_) => 1,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::Io(e).into()
    }
}

type CmdResult = Result<(), Failure>;

/// Standard streams of one invocation.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_spec(arg: &SpecArg) -> Result<ProblemSpec, Failure> {
    let text = read_file(&arg.path)?;
    parse_spec(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", arg.path.display(), f.message);
        f
    })
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path).map(BufReader::new).map_err(|e| Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    })
}

fn input<'a>(path: &Option<PathBuf>, stdin: &'a mut dyn Read) -> Result<Box<dyn Read + 'a>, Failure> {
    Ok(match path {
        Some(p) => Box::new(open(p)?),
        None => Box::new(stdin),
    })
}

fn output<'a>(path: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure {
            code: 3,
            message: format!("{}: {e}", p.display()),
        })?)),
        None => Box::new(stdout),
    })
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn cmd_new(path: &Path, s: &mut Streams) -> CmdResult {
    let spec = load_spec(&SpecArg { path: path.to_path_buf() })?;
    let out = &mut *s.stdout;
    write!(out, "{}", spec.render())?;
    writeln!(out, "# R = {}", spec.position_dim())?;
    writeln!(out, "# N = {}", spec.dimension())?;
    writeln!(out, "# p = {}", format_real(spec.norm_p()))?;
    if spec.is_quasi_norm() {
        writeln!(out, "# p < 1: quasi-norm surface")?;
    }
    Ok(())
}

fn cmd_eval(spec: &SpecArg, io: &InOut, s: &mut Streams) -> CmdResult {
    let spec = load_spec(spec)?;
    let rows = read_table(input(&io.input, s.stdin)?, Some(spec.dimension()))?;
    let results = evaluate_batch(&rows, &spec);
    if let Some((i, e)) = first_failure(&results) {
        return Err(Error::Row {
            row: i + 1,
            message: e.to_string(),
        }
        .into());
    }
    let c = spec.constraints().len();
    let table: Vec<Vec<f64>> = results
        .into_iter()
        .map(|r| {
            let e = r.expect("failures handled above");
            let mut row = e.objectives;
            row.extend(&e.report.phi);
            row.extend(&e.report.violations);
            row.push(if e.report.feasible { 1.0 } else { 0.0 });
            row
        })
        .collect();
    let mut header = labels("f", spec.objectives());
    header.extend(labels("phi", c));
    header.extend(labels("violation", c));
    header.push("feasible".into());
    let header = (!table.is_empty()).then_some(header);
    write_table(output(&io.out, s.stdout)?, header.as_deref(), &table)?;
    Ok(())
}

fn cmd_front(spec: &SpecArg, resolution: usize, out: &Option<PathBuf>, s: &mut Streams) -> CmdResult {
    let spec = load_spec(spec)?;
    let front = front_sample(&spec, resolution)?;
    if front.points.is_empty() {
        writeln!(s.stderr, "note: no feasible front points at resolution {resolution}")?;
    }
    write_table(output(out, s.stdout)?, Some(&labels("f", spec.objectives())), &front.points)?;
    Ok(())
}

fn cmd_pset(spec: &SpecArg, n: usize, out: &Option<PathBuf>, s: &mut Streams) -> CmdResult {
    let spec = load_spec(spec)?;
    let set = pareto_set_sample(&spec, n)?;
    write_table(output(out, s.stdout)?, Some(&labels("x", spec.dimension())), &set.vectors)?;
    Ok(())
}

fn cmd_suite(seed: u64, count: usize, ranges: &Option<PathBuf>, dir: &Path) -> CmdResult {
    let ranges = match ranges {
        Some(p) => SuiteRanges::parse(&read_file(p)?)?,
        None => SuiteRanges::default(),
    };
    let specs = generate_suite(seed, count, &ranges)?;
    fs::create_dir_all(dir)?;
    let width = count.to_string().len().max(3);
    for (i, spec) in specs.iter().enumerate() {
        let path = dir.join(format!("instance_{:0width$}.spec", i + 1));
        fs::write(path, spec.render())?;
    }
    Ok(())
}

fn cmd_perturb(spec: &SpecArg, io: &InOut, radius: f64, samples: usize, seed: u64, s: &mut Streams) -> CmdResult {
    let spec = load_spec(spec)?;
    let rows = read_table(input(&io.input, s.stdin)?, Some(spec.dimension()))?;
    let mut table = Vec::with_capacity(rows.len());
    for (i, x) in rows.iter().enumerate() {
        let report = perturb_experiment(x, radius, samples, &spec, seed).map_err(|e| match e {
            Error::InvalidArgument(_) => e,
            other => Error::Row {
                row: i + 1,
                message: other.to_string(),
            },
        })?;
        table.push(vec![report.worst, report.mean]);
    }
    let header = ["worst".to_string(), "mean".to_string()];
    write_table(output(&io.out, s.stdout)?, Some(&header), &table)?;
    Ok(())
}

fn cmd_igd(reference: &Path, approximation: &Path, s: &mut Streams) -> CmdResult {
    let r = read_table(open(reference)?, None)?;
    let a = read_table(open(approximation)?, None)?;
    writeln!(s.stdout, "{}", format_real(igd(&a, &r)?))?;
    Ok(())
}

fn cmd_search(
    spec: &SpecArg,
    budget: usize,
    seed: u64,
    resolution: Option<usize>,
    out: &Option<PathBuf>,
    s: &mut Streams,
) -> CmdResult {
    let spec = load_spec(spec)?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(spec.objectives()));
    let result = random_search(&spec, budget, seed, resolution)?;
    let rows: Vec<Vec<f64>> = result
        .decisions
        .iter()
        .zip(&result.objectives)
        .map(|(x, f)| x.iter().chain(f).copied().collect())
        .collect();
    let mut header = labels("x", spec.dimension());
    header.extend(labels("f", spec.objectives()));
    write_table(output(out, s.stdout)?, Some(&header), &rows)?;

    let score = match result.igd {
        Some(v) => format!("igd = {}", format_real(v)),
        None => "igd = undefined (empty archive or front)".to_string(),
    };
    // keep standard output a clean CSV when the archive goes there
    if out.is_some() {
        writeln!(s.stdout, "{score}")?;
    } else {
        writeln!(s.stderr, "{score}")?;
    }
    Ok(())
}

fn dispatch(cli: Cli, s: &mut Streams) -> CmdResult {
    match &cli.command {
        Command::New { spec } => cmd_new(spec, s),
        Command::Eval { spec, io } => cmd_eval(spec, io, s),
        Command::Front { spec, resolution, out } => cmd_front(spec, *resolution, out, s),
        Command::Pset { spec, n, out } => cmd_pset(spec, *n, out, s),
        Command::Suite {
            seed,
            count,
            ranges,
            out,
        } => cmd_suite(*seed, *count, ranges, out),
        Command::Perturb {
            spec,
            io,
            radius,
            samples,
            seed,
        } => cmd_perturb(spec, io, *radius, *samples, *seed, s),
        Command::Igd { reference, input } => cmd_igd(reference, input, s),
        Command::Search {
            spec,
            budget,
            seed,
            resolution,
            out,
        } => cmd_search(spec, *budget, *seed, *resolution, out, s),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, s: &mut Streams) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(s.stderr, "{text}");
                1
            } else {
                let _ = write!(s.stdout, "{text}");
                0
            };
        }
    };
    match dispatch(cli, s) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(s.stderr, "error: {}", f.message);
            f.code
        }
    }
}
