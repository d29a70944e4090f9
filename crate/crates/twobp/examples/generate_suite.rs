//! Generates the 500-instance benchmark suite (ten classes, five sizes, ten
//! replicates) and summarizes it; pass a directory to also write the files.
//!
//!     cargo run --example generate_suite [out_dir]

use twobp::generator::{class_label, generate_suite};
use twobp::io::write_instance;
use twobp::model::validate_instance;

fn main() {
    let suite = generate_suite(1);
    println!("generated {} instances", suite.len());

    for class_id in 1..=10u8 {
        let prefix = format!("c{class_id:02}_");
        let of_class: Vec<_> = suite
            .iter()
            .filter(|i| i.name.starts_with(&prefix))
            .collect();
        let items: usize = of_class.iter().map(|i| i.len()).sum();
        let bin = of_class[0].bin_width;
        println!(
            "class {:>4}: {} instances, {} items total, bin {}x{}",
            class_label(class_id),
            of_class.len(),
            items,
            bin,
            of_class[0].bin_height
        );
    }

    assert!(suite.iter().all(|i| validate_instance(i).is_ok()));

    if let Some(dir) = std::env::args().nth(1) {
        let dir = std::path::PathBuf::from(dir);
        std::fs::create_dir_all(&dir).expect("create output directory");
        for instance in &suite {
            let path = dir.join(format!("{}.txt", instance.name));
            std::fs::write(&path, write_instance(instance)).expect("write instance");
        }
        println!("wrote the suite to {}", dir.display());
    }
}
