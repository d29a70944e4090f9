//! Builds the integer-programming model for a small instance and prints it
//! in LP format, ready for an external MIP engine.
//!
//!     cargo run --example export_lp

use twobp::ilp::{build_model, export_lp};
use twobp::lgfi::{pack, preprocess_sort};
use twobp::model::Instance;

fn main() {
    let instance = Instance::from_dims(
        "demo6",
        6,
        6,
        &[(3, 3), (2, 4), (3, 2), (1, 4), (2, 2), (2, 1)],
    );
    let model = build_model(&instance);
    println!(
        "\\ model shape: {} variables, {} constraints",
        model.variables().len(),
        model.constraints().len()
    );
    print!("{}", export_lp(&model));

    // a heuristic packing doubles as a feasible starting point
    let solution = pack(&instance, &preprocess_sort(&instance));
    let values = model.assignment_from_packing(&instance, &solution);
    match model.check_assignment(&values) {
        Ok(objective) => eprintln!("heuristic packing satisfies the model, objective {objective}"),
        Err(violations) => {
            eprintln!("heuristic packing violates the model:");
            for v in violations {
                eprintln!("  {v}");
            }
        }
    }
}
