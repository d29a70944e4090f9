//! Packs a generated instance and writes the result as an SVG drawing:
//! labeled item rectangles, hatched wastage, one group per bin.
//!
//!     cargo run --example render_packing [out.svg]

use twobp::generator::generate_instance;
use twobp::lgfi::{pack, preprocess_sort};
use twobp::render::render_svg;
use twobp::RandomStream;

fn main() {
    let mut rng = RandomStream::new(12);
    let instance = generate_instance(1, 20, &mut rng);
    let solution = pack(&instance, &preprocess_sort(&instance));
    println!(
        "packed {} items into {} bins ({} wastage rectangles declared)",
        instance.len(),
        solution.bins_used,
        solution.wastage.len()
    );

    let svg = render_svg(&instance, &solution);
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "packing.svg".into());
    std::fs::write(&path, svg).expect("write SVG");
    println!("wrote {path}");
}
