//! Thin command-line front end; all actual work lives in the library.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twobp::bounds::OracleLimits;
use twobp::generator::{self, generate_suite, parse_class, suite_name};
use twobp::ilp::{build_model, export_lp};
use twobp::io::{import_tolerant, read_instance, read_solution, write_instance, write_solution};
use twobp::model::{validate_instance, Instance};
use twobp::render::render_svg;
use twobp::report::{run_bench, solve_instance, Algorithm, BenchConfig, BenchReport, SolverParams};
use twobp::RandomStream;

const SEED_ENV: &str = "TWOBP_SEED";

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_ORACLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "twobp",
    version,
    about = "Oriented two-dimensional bin packing: constructive, multi-start and evolutionary solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    /// Solver: lgfi, ms, ea or exact.
    #[arg(long, default_value = "lgfi")]
    algo: Algorithm,
    /// Sampling concentration.
    #[arg(long, default_value_t = 10.0)]
    kappa: f64,
    /// Partner-selection rank bias.
    #[arg(long, default_value_t = 20.0)]
    delta: f64,
    /// Population size.
    #[arg(long = "psize", default_value_t = 10)]
    psize: usize,
    /// Crossover rate in (0, 1].
    #[arg(long = "crate", default_value_t = 0.7)]
    c_rate: f64,
    /// Solution evaluation budget.
    #[arg(long, default_value_t = 5_000_000)]
    budget: u64,
    /// Master seed; falls back to $TWOBP_SEED, then 1.
    #[arg(long)]
    seed: Option<u64>,
    /// Early-stop bin target.
    #[arg(long)]
    target: Option<usize>,
}

impl ParamArgs {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or_else(|| {
            std::env::var(SEED_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(1)
        })
    }

    fn solver_params(&self) -> SolverParams {
        SolverParams {
            kappa: self.kappa,
            delta: self.delta,
            p_size: self.psize,
            c_rate: self.c_rate,
            budget: self.budget,
            ..SolverParams::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and write its solution file.
    Solve {
        instance: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        /// Solution output path (default: instance path with .sol).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Read the instance with the tolerant importer.
        #[arg(long)]
        tolerant: bool,
    },
    /// Sweep many instances and print report tables.
    Bench {
        /// Instance files; omit when generating with --suite or --classes.
        paths: Vec<PathBuf>,
        /// Run the full 500-instance generated suite.
        #[arg(long)]
        suite: bool,
        /// Generate these classes (e.g. I,IV,IX or 1,4,9).
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
        /// Generate these instance sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Replicates per class-size cell.
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[command(flatten)]
        params: ParamArgs,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report format: csv or markdown.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Per-instance bin targets: lines of `instance_name target`.
        #[arg(long = "target-file")]
        target_file: Option<PathBuf>,
        /// Write the per-instance table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Read instance files with the tolerant importer.
        #[arg(long)]
        tolerant: bool,
    },
    /// Generate benchmark instances into a directory.
    Generate {
        /// Output directory.
        #[arg(long = "out-dir")]
        out_dir: PathBuf,
        /// Generate the full 500-instance suite.
        #[arg(long)]
        suite: bool,
        /// Class to generate (I-X or 1-10).
        #[arg(long)]
        class: Option<String>,
        /// Items per instance.
        #[arg(long)]
        n: Option<usize>,
        /// Number of replicates.
        #[arg(long, default_value_t = 10)]
        reps: usize,
        /// Master seed; falls back to $TWOBP_SEED, then 1.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Export the integer-programming model as an LP file.
    Ilp {
        instance: PathBuf,
        /// LP output path (default: instance path with .lp).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tolerant: bool,
    },
    /// Render a packing as SVG.
    Render {
        instance: PathBuf,
        /// Existing solution file; omit to solve first.
        #[arg(long)]
        solution: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
        /// SVG output path (default: instance path with .svg).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        tolerant: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own help/version output through the error path
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            instance,
            params,
            out,
            tolerant,
        } => cmd_solve(&instance, &params, out, tolerant),
        Command::Bench {
            paths,
            suite,
            classes,
            sizes,
            reps,
            params,
            jobs,
            format,
            target_file,
            out,
            tolerant,
        } => cmd_bench(
            &paths,
            suite,
            &classes,
            &sizes,
            reps,
            &params,
            jobs,
            &format,
            target_file,
            out,
            tolerant,
        ),
        Command::Generate {
            out_dir,
            suite,
            class,
            n,
            reps,
            seed,
        } => cmd_generate(&out_dir, suite, class, n, reps, seed),
        Command::Ilp {
            instance,
            out,
            tolerant,
        } => cmd_ilp(&instance, out, tolerant),
        Command::Render {
            instance,
            solution,
            params,
            out,
            tolerant,
        } => cmd_render(&instance, solution, &params, out, tolerant),
    }
}

fn load_instance(path: &Path, tolerant: bool) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into());
    let instance = if tolerant {
        let mut found = import_tolerant(&text, &name)
            .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
        if found.len() != 1 {
            return Err(Failure::data(format!(
                "{}: file holds {} instances; bench accepts multi-instance files, solve does not",
                path.display(),
                found.len()
            )));
        }
        found.remove(0)
    } else {
        read_instance(&text, &name)
            .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?
    };
    let report = validate_instance(&instance);
    if !report.is_ok() {
        return Err(Failure::data(format!(
            "{} is not a valid instance:\n{report}",
            path.display()
        )));
    }
    Ok(instance)
}

fn load_instances(path: &Path, tolerant: bool) -> Result<Vec<Instance>, Failure> {
    if !tolerant {
        return Ok(vec![load_instance(path, false)?]);
    }
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into());
    let found = import_tolerant(&text, &name)
        .map_err(|e| Failure::data(format!("{}: {e}", path.display())))?;
    for instance in &found {
        let report = validate_instance(instance);
        if !report.is_ok() {
            return Err(Failure::data(format!(
                "{} ({}) is not a valid instance:\n{report}",
                path.display(),
                instance.name
            )));
        }
    }
    Ok(found)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::data(format!("cannot write {}: {e}", path.display())))
}

/// Rejects parameter combinations the solvers would choke on.
fn check_params(params: &ParamArgs) -> Result<(), Failure> {
    if params.budget < 1 {
        return Err(Failure::usage("--budget must be at least 1"));
    }
    if matches!(params.algo, Algorithm::Ms | Algorithm::Ea) && params.kappa < 1.0 {
        return Err(Failure::usage("--kappa must be at least 1"));
    }
    if params.algo == Algorithm::Ea {
        params
            .solver_params()
            .ea_params()
            .validate()
            .map_err(Failure::usage)?;
    }
    Ok(())
}

fn run_one(
    instance: &Instance,
    params: &ParamArgs,
) -> Result<(twobp::report::RowResult, twobp::model::PackingSolution), Failure> {
    check_params(params)?;
    let solver = params.solver_params();
    if params.algo == Algorithm::Exact && !solver.oracle.admits(instance.len()) {
        return Err(Failure {
            code: EXIT_ORACLE,
            message: format!(
                "oracle limit exceeded: {} items (max {})",
                instance.len(),
                solver.oracle.max_items.min(OracleLimits::HARD_MAX_ITEMS)
            ),
        });
    }
    solve_instance(instance, params.algo, &solver, params.seed(), params.target).map_err(|e| {
        if e.starts_with("oracle") {
            Failure {
                code: EXIT_ORACLE,
                message: e,
            }
        } else {
            Failure::data(e)
        }
    })
}

fn cmd_solve(
    path: &Path,
    params: &ParamArgs,
    out: Option<PathBuf>,
    tolerant: bool,
) -> Result<(), Failure> {
    let instance = load_instance(path, tolerant)?;
    let (row, solution) = run_one(&instance, params)?;
    let out_path = out.unwrap_or_else(|| path.with_extension("sol"));
    write_file(&out_path, &write_solution(&solution))?;
    println!("instance,n,L0,res,eval,time");
    println!(
        "{},{},{},{},{},{:.3}",
        instance.name,
        instance.len(),
        twobp::bounds::area_lower_bound(&instance),
        row.res,
        row.eval,
        row.time
    );
    Ok(())
}

fn parse_classes(labels: &[String]) -> Result<Vec<u8>, Failure> {
    labels
        .iter()
        .map(|label| {
            parse_class(label)
                .ok_or_else(|| Failure::usage(format!("unknown class {label:?} (use I-X or 1-10)")))
        })
        .collect()
}

fn generated_instances(
    master_seed: u64,
    classes: &[u8],
    sizes: &[usize],
    reps: usize,
) -> Vec<Instance> {
    let master = RandomStream::new(master_seed);
    let mut out = Vec::new();
    for &class_id in classes {
        for &n in sizes {
            for rep in 1..=reps {
                let name = suite_name(class_id, n, Some(rep));
                let mut rng = master.derive(&name);
                let mut instance = generator::generate_instance(class_id, n, &mut rng);
                instance.name = name;
                out.push(instance);
            }
        }
    }
    out
}

fn read_target_file(path: &Path) -> Result<HashMap<String, usize>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::data(format!("cannot read {}: {e}", path.display())))?;
    let mut targets = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (Some(name), Some(bins), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Failure::data(format!(
                "{}: line {}: expected `instance_name target`",
                path.display(),
                idx + 1
            )));
        };
        let bins: usize = bins.parse().map_err(|_| {
            Failure::data(format!(
                "{}: line {}: bad target {bins:?}",
                path.display(),
                idx + 1
            ))
        })?;
        targets.insert(name.to_string(), bins);
    }
    Ok(targets)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    paths: &[PathBuf],
    suite: bool,
    classes: &[String],
    sizes: &[usize],
    reps: usize,
    params: &ParamArgs,
    jobs: usize,
    format: &str,
    target_file: Option<PathBuf>,
    out: Option<PathBuf>,
    tolerant: bool,
) -> Result<(), Failure> {
    let generating = suite || !classes.is_empty();
    if generating && !paths.is_empty() {
        return Err(Failure::usage(
            "pass instance files or a generation spec (--suite / --classes), not both",
        ));
    }
    let instances: Vec<Instance> = if suite {
        generate_suite(params.seed())
    } else if !classes.is_empty() {
        let class_ids = parse_classes(classes)?;
        let sizes: Vec<usize> = if sizes.is_empty() {
            generator::SUITE_SIZES.to_vec()
        } else {
            sizes.to_vec()
        };
        generated_instances(params.seed(), &class_ids, &sizes, reps)
    } else if !paths.is_empty() {
        let mut all = Vec::new();
        for path in paths {
            all.extend(load_instances(path, tolerant)?);
        }
        all
    } else {
        return Err(Failure::usage(
            "nothing to bench: pass instance files, --suite, or --classes",
        ));
    };

    let targets = match target_file {
        Some(path) => read_target_file(&path)?,
        None => HashMap::new(),
    };

    let config = BenchConfig {
        algorithm: params.algo,
        params: params.solver_params(),
        master_seed: params.seed(),
        jobs,
        targets,
    };
    let report = run_bench(&instances, &config);
    emit_report(&report, format, out)?;
    for row in &report.rows {
        if let Err(err) = &row.result {
            eprintln!("{}: {err}", row.instance);
        }
    }
    Ok(())
}

fn emit_report(report: &BenchReport, format: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    let table = match format {
        "csv" => report.to_csv(),
        "markdown" | "md" => report.to_markdown(),
        other => {
            return Err(Failure::usage(format!(
                "unknown format {other:?} (expected csv or markdown)"
            )))
        }
    };
    match out {
        Some(path) => {
            write_file(&path, &table)?;
            print!("{}", report.aggregate_table());
        }
        None => {
            print!("{table}");
            eprint!("{}", report.aggregate_table());
        }
    }
    Ok(())
}

fn cmd_generate(
    out_dir: &Path,
    suite: bool,
    class: Option<String>,
    n: Option<usize>,
    reps: usize,
    seed: Option<u64>,
) -> Result<(), Failure> {
    let seed = seed.unwrap_or_else(|| {
        std::env::var(SEED_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(1)
    });
    let instances = if suite {
        generate_suite(seed)
    } else {
        let class = class.ok_or_else(|| Failure::usage("pass --suite or --class"))?;
        let class_id = parse_class(&class)
            .ok_or_else(|| Failure::usage(format!("unknown class {class:?} (use I-X or 1-10)")))?;
        let n = n.ok_or_else(|| Failure::usage("--class needs --n"))?;
        if n == 0 {
            return Err(Failure::usage("--n must be at least 1"));
        }
        generated_instances(seed, &[class_id], &[n], reps)
    };
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::data(format!("cannot create {}: {e}", out_dir.display())))?;
    for instance in &instances {
        let path = out_dir.join(format!("{}.txt", instance.name));
        write_file(&path, &write_instance(instance))?;
    }
    println!("wrote {} instances to {}", instances.len(), out_dir.display());
    Ok(())
}

fn cmd_ilp(path: &Path, out: Option<PathBuf>, tolerant: bool) -> Result<(), Failure> {
    let instance = load_instance(path, tolerant)?;
    if instance.is_empty() {
        return Err(Failure::data("cannot build a model for an empty instance"));
    }
    let model = build_model(&instance);
    let out_path = out.unwrap_or_else(|| path.with_extension("lp"));
    write_file(&out_path, &export_lp(&model))?;
    println!(
        "wrote {} variables, {} constraints to {}",
        model.variables().len(),
        model.constraints().len(),
        out_path.display()
    );
    Ok(())
}

fn cmd_render(
    path: &Path,
    solution: Option<PathBuf>,
    params: &ParamArgs,
    out: Option<PathBuf>,
    tolerant: bool,
) -> Result<(), Failure> {
    let instance = load_instance(path, tolerant)?;
    let packing = match solution {
        Some(sol_path) => {
            let text = fs::read_to_string(&sol_path)
                .map_err(|e| Failure::data(format!("cannot read {}: {e}", sol_path.display())))?;
            let packing = read_solution(&text, &instance)
                .map_err(|e| Failure::data(format!("{}: {e}", sol_path.display())))?;
            let report = twobp::model::validate_solution(&instance, &packing);
            if !report.is_ok() {
                return Err(Failure::data(format!(
                    "{} is not a valid solution:\n{report}",
                    sol_path.display()
                )));
            }
            packing
        }
        None => run_one(&instance, params)?.1,
    };
    let out_path = out.unwrap_or_else(|| path.with_extension("svg"));
    write_file(&out_path, &render_svg(&instance, &packing))?;
    println!("wrote {}", out_path.display());
    Ok(())
}
