//! Runs a small benchmark sweep in parallel and prints the per-instance CSV
//! plus the aggregate table. Seeds derive from the master seed and each
//! instance name, so the result columns do not depend on `jobs`.
//!
//!     cargo run --example benchmark_report

use twobp::generator::{generate_suite, SUITE_SIZES};
use twobp::report::{run_bench, Algorithm, BenchConfig};

fn main() {
    // two classes at the smallest size keep this quick
    let instances: Vec<_> = generate_suite(99)
        .into_iter()
        .filter(|i| {
            (i.name.starts_with("c01_") || i.name.starts_with("c09_"))
                && i.len() == SUITE_SIZES[0]
        })
        .collect();

    let mut config = BenchConfig {
        algorithm: Algorithm::Ms,
        master_seed: 99,
        jobs: 4,
        ..BenchConfig::default()
    };
    config.params.budget = 2_000;

    let report = run_bench(&instances, &config);
    print!("{}", report.to_csv());
    println!();
    print!("{}", report.aggregate_table());
}
