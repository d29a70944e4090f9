//! Step-by-step walkthrough of the constructive heuristic on a six-item
//! instance that packs into a single 6x6 bin.
//!
//!     cargo run --example walkthrough

use twobp::io::read_instance;
use twobp::lgfi::{pack_with_trace, preprocess_sort, Decision};
use twobp::model::validate_solution;

const DEMO: &str = "\
6
6 6
3 3
2 4
3 2
1 4
2 2
2 1
";

fn main() {
    let instance = read_instance(DEMO, "demo6").expect("canonical text parses");
    let sequence = preprocess_sort(&instance);
    println!("preprocessing order: {:?}", sequence.order());

    let (solution, trace) = pack_with_trace(&instance, &sequence);
    for (step, s) in trace.iter().enumerate() {
        print!(
            "step {}: bin {} position ({},{}) hgap {} vgap {} -> ",
            step + 1,
            s.bin,
            s.x,
            s.y,
            s.hgap,
            s.vgap
        );
        match s.decision {
            Decision::Placed { item_id, gap_filled } => {
                let item = instance.item(item_id);
                println!(
                    "place item {} ({}x{}){}",
                    item_id,
                    item.width,
                    item.height,
                    if gap_filled { " [fills the gap]" } else { "" }
                );
            }
            Decision::Wastage { width, height } => {
                println!("declare {width}x{height} wastage");
            }
        }
    }

    println!(
        "\npacked {} items into {} bin(s), last-bin load {}",
        solution.placements.len(),
        solution.bins_used,
        solution.last_bin_load
    );
    for p in &solution.placements {
        let item = instance.item(p.item_id);
        println!(
            "  item {} ({}x{}) -> bin {} at ({},{})",
            p.item_id, item.width, item.height, p.bin, p.x, p.y
        );
    }
    for w in &solution.wastage {
        println!("  wastage {}x{} at ({},{}) in bin {}", w.width, w.height, w.x, w.y, w.bin);
    }
    assert!(validate_solution(&instance, &solution).is_ok());
}
