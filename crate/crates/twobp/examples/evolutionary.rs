//! Evolutionary search over input sequences, compared against the plain
//! heuristic and plain multi-start on the same instance and budget.
//!
//!     cargo run --example evolutionary

use twobp::ea::{run_ea, EaParams};
use twobp::generator::generate_instance;
use twobp::lgfi::{pack, preprocess_sort};
use twobp::ms::run_ms;
use twobp::RandomStream;

fn main() {
    let mut gen_rng = RandomStream::new(404);
    let instance = generate_instance(10, 60, &mut gen_rng);
    println!(
        "instance {}: {} items in {}x{} bins",
        instance.name,
        instance.len(),
        instance.bin_width,
        instance.bin_height
    );

    let deterministic = pack(&instance, &preprocess_sort(&instance));
    println!("deterministic pass:          {}", deterministic.fitness());

    let budget = 30_000;
    let ms = run_ms(&instance, 10.0, budget, &mut RandomStream::new(1), None);
    println!(
        "multi-start, budget {budget}:   {} (found at eval {})",
        ms.best_fitness, ms.found_at_eval
    );

    let params = EaParams {
        eval_budget: budget,
        ..EaParams::default()
    };
    let ea = run_ea(&instance, &params, &mut RandomStream::new(1), None);
    println!(
        "evolutionary, budget {budget}:  {} (found at eval {})",
        ea.best_fitness, ea.found_at_eval
    );
    println!(
        "population {} | crossover rate {} | kappa {} | delta {} | bias {}",
        params.p_size, params.c_rate, params.kappa, params.delta, params.better_bias
    );
    println!("evaluations spent: {}", ea.total_evals);
}
