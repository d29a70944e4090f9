//! Compares the exact desk-scale oracle against the heuristic and the area
//! bound on a batch of tiny random instances.
//!
//!     cargo run --example exact_oracle

use twobp::bounds::{area_lower_bound, exact_min_bins, OracleLimits, OracleOutcome};
use twobp::lgfi::{pack, preprocess_sort};
use twobp::model::Instance;
use twobp::RandomStream;

fn main() {
    let limits = OracleLimits::default();
    let mut rng = RandomStream::new(31);
    println!("   n  bin      L0  exact  heuristic");
    let mut heuristic_optimal = 0;
    let total = 30;
    for _ in 0..total {
        let n = 2 + rng.below(4) as usize;
        let bin = rng.int_in(6, 10);
        let dims: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.int_in(1, bin), rng.int_in(1, bin)))
            .collect();
        let instance = Instance::from_dims("tiny", bin, bin, &dims);

        let heuristic = pack(&instance, &preprocess_sort(&instance)).bins_used;
        let exact = match exact_min_bins(&instance, &limits) {
            OracleOutcome::Definite(bins) => bins.to_string(),
            OracleOutcome::Unknown => "?".into(),
        };
        if exact == heuristic.to_string() {
            heuristic_optimal += 1;
        }
        println!(
            "  {:>2}  {:>2}x{:<3} {:>3}  {:>5}  {:>9}",
            n,
            bin,
            bin,
            area_lower_bound(&instance),
            exact,
            heuristic
        );
    }
    println!("\nheuristic matched the optimum on {heuristic_optimal}/{total} instances");
}
