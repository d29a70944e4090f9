//! Running solvers over instances and rendering benchmark reports.
//!
//! Every run is seeded from the master seed and the instance name, so a sweep
//! produces the same `res`/`eval` columns at any parallelism width and in any
//! scheduling order. Wall-clock times are reported but never part of any
//! determinism contract.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;

use crate::bounds::{area_lower_bound, exact_solution, OracleLimits, OracleOutcome};
use crate::ea::{run_ea, EaParams};
use crate::lgfi::{pack, preprocess_sort};
use crate::model::{Instance, PackingSolution};
use crate::ms::run_ms;
use crate::rng::RandomStream;

/// Which solver a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Lgfi,
    Ms,
    Ea,
    Exact,
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lgfi" => Ok(Algorithm::Lgfi),
            "ms" => Ok(Algorithm::Ms),
            "ea" => Ok(Algorithm::Ea),
            "exact" => Ok(Algorithm::Exact),
            other => Err(format!(
                "unknown algorithm {other:?} (expected lgfi, ms, ea or exact)"
            )),
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Algorithm::Lgfi => "lgfi",
            Algorithm::Ms => "ms",
            Algorithm::Ea => "ea",
            Algorithm::Exact => "exact",
        };
        write!(f, "{name}")
    }
}

/// Shared solver parameters; each algorithm reads the knobs it uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverParams {
    pub kappa: f64,
    pub delta: f64,
    pub p_size: usize,
    pub c_rate: f64,
    pub better_bias: f64,
    pub budget: u64,
    pub oracle: OracleLimits,
}

impl Default for SolverParams {
    fn default() -> Self {
        let ea = EaParams::default();
        Self {
            kappa: ea.kappa,
            delta: ea.delta,
            p_size: ea.p_size,
            c_rate: ea.c_rate,
            better_bias: ea.better_bias,
            budget: ea.eval_budget,
            oracle: OracleLimits::default(),
        }
    }
}

impl SolverParams {
    pub fn ea_params(&self) -> EaParams {
        EaParams {
            p_size: self.p_size,
            c_rate: self.c_rate,
            kappa: self.kappa,
            delta: self.delta,
            better_bias: self.better_bias,
            eval_budget: self.budget,
        }
    }
}

/// The result columns of one successful run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowResult {
    /// Bins used by the best solution.
    pub res: usize,
    /// Evaluation index at which the best solution was found.
    pub eval: u64,
    /// Seconds until the best solution was found.
    pub time: f64,
}

/// One report line: instance identity, the continuous lower bound `L0`, and
/// the run outcome (or the per-instance failure).
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub instance: String,
    pub n: usize,
    pub l0: usize,
    pub result: Result<RowResult, String>,
}

/// Runs one algorithm on one instance.
///
/// Returns the result columns plus the best packing found. The seed only
/// matters for the randomized algorithms.
pub fn solve_instance(
    instance: &Instance,
    algorithm: Algorithm,
    params: &SolverParams,
    seed: u64,
    target_bins: Option<usize>,
) -> Result<(RowResult, PackingSolution), String> {
    match algorithm {
        Algorithm::Lgfi => {
            let start = Instant::now();
            let solution = pack(instance, &preprocess_sort(instance));
            let time = start.elapsed().as_secs_f64();
            Ok((
                RowResult {
                    res: solution.bins_used,
                    eval: 1,
                    time,
                },
                solution,
            ))
        }
        Algorithm::Ms => {
            let mut rng = RandomStream::new(seed);
            let record = run_ms(instance, params.kappa, params.budget, &mut rng, target_bins);
            let solution = pack(instance, &record.best_sequence);
            Ok((
                RowResult {
                    res: record.best_bins,
                    eval: record.found_at_eval,
                    time: record.found_at_time,
                },
                solution,
            ))
        }
        Algorithm::Ea => {
            let ea = params.ea_params();
            ea.validate()?;
            let mut rng = RandomStream::new(seed);
            let record = run_ea(instance, &ea, &mut rng, target_bins);
            let solution = pack(instance, &record.best_sequence);
            Ok((
                RowResult {
                    res: record.best_bins,
                    eval: record.found_at_eval,
                    time: record.found_at_time,
                },
                solution,
            ))
        }
        Algorithm::Exact => {
            if !params.oracle.admits(instance.len()) {
                return Err(format!(
                    "oracle limit exceeded: {} items (max {})",
                    instance.len(),
                    params.oracle.max_items.min(OracleLimits::HARD_MAX_ITEMS)
                ));
            }
            let start = Instant::now();
            match exact_solution(instance, &params.oracle) {
                OracleOutcome::Definite((bins, solution)) => Ok((
                    RowResult {
                        res: bins,
                        eval: 1,
                        time: start.elapsed().as_secs_f64(),
                    },
                    solution,
                )),
                OracleOutcome::Unknown => {
                    Err("oracle node budget exhausted before an answer".into())
                }
            }
        }
    }
}

/// Sweep configuration.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithm: Algorithm,
    pub params: SolverParams,
    pub master_seed: u64,
    /// Worker threads; results are identical at any width.
    pub jobs: usize,
    /// Optional per-instance early-stop targets, keyed by instance name.
    pub targets: HashMap<String, usize>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::Lgfi,
            params: SolverParams::default(),
            master_seed: 1,
            jobs: 1,
            targets: HashMap::new(),
        }
    }
}

/// Aggregate over one instance group (a class-size cell for suite names).
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub group: String,
    pub solved: usize,
    pub failed: usize,
    pub l0_sum: usize,
    pub res_sum: usize,
    pub mean_time: f64,
}

/// Per-instance rows plus their aggregates.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<ReportRow>,
}

/// The seed a sweep uses for one instance: derived from the master seed and
/// the instance name only.
pub fn instance_seed(master_seed: u64, name: &str) -> u64 {
    RandomStream::new(master_seed).derive(name).seed()
}

/// Runs the sweep. Per-instance failures land in their rows; the sweep never
/// aborts. Rows come back sorted by instance name regardless of scheduling.
pub fn run_bench(instances: &[Instance], config: &BenchConfig) -> BenchReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("building a worker pool");
    let mut rows: Vec<ReportRow> = pool.install(|| {
        instances
            .par_iter()
            .map(|instance| {
                let seed = instance_seed(config.master_seed, &instance.name);
                let target = config.targets.get(&instance.name).copied();
                let outcome =
                    solve_instance(instance, config.algorithm, &config.params, seed, target);
                ReportRow {
                    instance: instance.name.clone(),
                    n: instance.len(),
                    l0: area_lower_bound(instance),
                    result: outcome.map(|(row, _)| row),
                }
            })
            .collect()
    });
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    BenchReport { rows }
}

/// Group key of an instance name: the name minus a trailing `_NN` replicate
/// suffix, which folds suite replicates into their class-size cell.
fn group_key(name: &str) -> String {
    match name.rsplit_once('_') {
        Some((head, tail)) if !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) => {
            head.to_string()
        }
        _ => name.to_string(),
    }
}

impl BenchReport {
    /// Per-group aggregates in group order, plus a grand-total row.
    pub fn aggregates(&self) -> (Vec<AggregateRow>, AggregateRow) {
        let mut order: Vec<String> = Vec::new();
        let mut by_group: HashMap<String, AggregateRow> = HashMap::new();
        for row in &self.rows {
            let key = group_key(&row.instance);
            let entry = by_group.entry(key.clone()).or_insert_with(|| {
                order.push(key.clone());
                AggregateRow {
                    group: key,
                    solved: 0,
                    failed: 0,
                    l0_sum: 0,
                    res_sum: 0,
                    mean_time: 0.0,
                }
            });
            entry.l0_sum += row.l0;
            match &row.result {
                Ok(res) => {
                    entry.solved += 1;
                    entry.res_sum += res.res;
                    entry.mean_time += res.time;
                }
                Err(_) => entry.failed += 1,
            }
        }
        let mut groups: Vec<AggregateRow> = order
            .into_iter()
            .map(|key| by_group.remove(&key).unwrap())
            .collect();
        let mut total = AggregateRow {
            group: "total".into(),
            solved: 0,
            failed: 0,
            l0_sum: 0,
            res_sum: 0,
            mean_time: 0.0,
        };
        for g in &mut groups {
            total.solved += g.solved;
            total.failed += g.failed;
            total.l0_sum += g.l0_sum;
            total.res_sum += g.res_sum;
            total.mean_time += g.mean_time;
            if g.solved > 0 {
                g.mean_time /= g.solved as f64;
            }
        }
        if total.solved > 0 {
            total.mean_time /= total.solved as f64;
        }
        (groups, total)
    }

    /// Per-instance table as CSV with columns `instance,n,L0,res,eval,time`.
    /// Failed rows leave the result columns empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("instance,n,L0,res,eval,time\n");
        for row in &self.rows {
            match &row.result {
                Ok(res) => {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{:.3}",
                        row.instance, row.n, row.l0, res.res, res.eval, res.time
                    );
                }
                Err(_) => {
                    let _ = writeln!(out, "{},{},{},,,", row.instance, row.n, row.l0);
                }
            }
        }
        out
    }

    /// Per-instance table as Markdown.
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| instance | n | L0 | res | eval | time |\n|---|---|---|---|---|---|\n",
        );
        for row in &self.rows {
            match &row.result {
                Ok(res) => {
                    let _ = writeln!(
                        out,
                        "| {} | {} | {} | {} | {} | {:.3} |",
                        row.instance, row.n, row.l0, res.res, res.eval, res.time
                    );
                }
                Err(err) => {
                    let _ = writeln!(
                        out,
                        "| {} | {} | {} | error: {} | | |",
                        row.instance, row.n, row.l0, err
                    );
                }
            }
        }
        out
    }

    /// Aggregate table (groups plus the total line) as plain text.
    pub fn aggregate_table(&self) -> String {
        let (groups, total) = self.aggregates();
        let mut out = String::from("group        solved failed   L0  res  mean_time\n");
        for g in groups.iter().chain(std::iter::once(&total)) {
            let _ = writeln!(
                out,
                "{:<12} {:>6} {:>6} {:>4} {:>4}  {:>9.3}",
                g.group, g.solved, g.failed, g.l0_sum, g.res_sum, g.mean_time
            );
        }
        out
    }

    /// CSV with the wall-clock column removed; the byte-stable part used by
    /// determinism checks.
    pub fn to_csv_without_time(&self) -> String {
        self.to_csv()
            .lines()
            .map(|line| match line.rsplit_once(',') {
                Some((head, _)) => format!("{head}\n"),
                None => format!("{line}\n"),
            })
            .collect()
    }
}
