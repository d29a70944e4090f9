//! Multi-start search on a generated benchmark instance: sample sequences
//! around the deterministic order, keep the best packing.
//!
//!     cargo run --example multi_start

use twobp::bounds::area_lower_bound;
use twobp::generator::generate_instance;
use twobp::lgfi::{pack, preprocess_sort};
use twobp::ms::run_ms;
use twobp::RandomStream;

fn main() {
    let mut gen_rng = RandomStream::new(2023);
    let instance = generate_instance(5, 40, &mut gen_rng);
    println!(
        "instance {}: {} items in {}x{} bins, area bound {}",
        instance.name,
        instance.len(),
        instance.bin_width,
        instance.bin_height,
        area_lower_bound(&instance)
    );

    let deterministic = pack(&instance, &preprocess_sort(&instance));
    println!("deterministic pass: {}", deterministic.fitness());

    let mut rng = RandomStream::new(7);
    let record = run_ms(&instance, 10.0, 20_000, &mut rng, None);
    println!(
        "multi-start (kappa 10, budget 20000): {} after {} evaluations ({:.3}s)",
        record.best_fitness, record.found_at_eval, record.found_at_time
    );
    println!("improvement history:");
    for imp in &record.improvements {
        println!("  eval {:>6}: {}", imp.eval, imp.fitness);
    }
}
