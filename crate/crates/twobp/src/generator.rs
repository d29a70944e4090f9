//! Benchmark instance generation for the ten classic instance classes.
//!
//! Classes 1-6 draw item widths and heights uniformly from one interval per
//! class and differ in bin size. Classes 7-10 work on a 100x100 bin and mix
//! four item types (wide, tall, large, small) in class-specific proportions;
//! each item is assigned a type first, then its dimensions are drawn from the
//! type's ranges. Fractional range endpoints round up on lower bounds and
//! down on upper bounds.

use crate::model::{Instance, Item};
use crate::rng::RandomStream;

pub const CLASS_COUNT: usize = 10;
pub const SUITE_SIZES: [usize; 5] = [20, 40, 60, 80, 100];
pub const SUITE_REPLICATES: usize = 10;

/// How one class draws its items.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemRecipe {
    /// Width and height drawn uniformly from fixed inclusive ranges.
    Uniform {
        w_lo: i64,
        w_hi: i64,
        h_lo: i64,
        h_hi: i64,
    },
    /// Item type drawn from percentages over the four types, then the
    /// dimensions from the chosen type's ranges.
    TypeMix { percent: [u8; 4] },
}

/// Full recipe for one instance class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    /// 1-based class number (1-10, traditionally written I-X).
    pub id: u8,
    pub bin_width: i64,
    pub bin_height: i64,
    pub recipe: ItemRecipe,
}

/// Inclusive `(w_lo, w_hi, h_lo, h_hi)` ranges of the four item types on a
/// `W x H` bin: wide-flat, narrow-tall, large, small.
pub fn type_ranges(item_type: usize, bin_w: i64, bin_h: i64) -> (i64, i64, i64, i64) {
    let ceil_div = |a: i64, b: i64| (a + b - 1) / b;
    match item_type {
        1 => (ceil_div(2 * bin_w, 3), bin_w, 1, bin_h / 2),
        2 => (1, bin_w / 2, ceil_div(2 * bin_h, 3), bin_h),
        3 => (ceil_div(bin_w, 2), bin_w, ceil_div(bin_h, 2), bin_h),
        4 => (1, bin_w / 2, 1, bin_h / 2),
        _ => panic!("item type must be 1-4, got {item_type}"),
    }
}

/// The class table. Panics for ids outside 1-10.
pub fn class_spec(class_id: u8) -> ClassSpec {
    let uniform = |hi: i64| ItemRecipe::Uniform {
        w_lo: 1,
        w_hi: hi,
        h_lo: 1,
        h_hi: hi,
    };
    let (bin, recipe) = match class_id {
        1 => (10, uniform(10)),
        2 => (30, uniform(10)),
        3 => (40, uniform(35)),
        4 => (100, uniform(35)),
        5 => (100, uniform(100)),
        6 => (300, uniform(100)),
        7 => (100, ItemRecipe::TypeMix { percent: [70, 10, 10, 10] }),
        8 => (100, ItemRecipe::TypeMix { percent: [10, 70, 10, 10] }),
        9 => (100, ItemRecipe::TypeMix { percent: [10, 10, 70, 10] }),
        10 => (100, ItemRecipe::TypeMix { percent: [10, 10, 10, 70] }),
        _ => panic!("class id must be 1-10, got {class_id}"),
    };
    ClassSpec {
        id: class_id,
        bin_width: bin,
        bin_height: bin,
        recipe,
    }
}

/// Parses a class label: arabic `1`-`10` or roman `I`-`X`, case-insensitive.
pub fn parse_class(label: &str) -> Option<u8> {
    if let Ok(v) = label.parse::<u8>() {
        return (1..=10).contains(&v).then_some(v);
    }
    let roman = [
        "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X",
    ];
    let upper = label.to_ascii_uppercase();
    roman
        .iter()
        .position(|&r| r == upper)
        .map(|idx| (idx + 1) as u8)
}

/// Roman label of a class id.
pub fn class_label(class_id: u8) -> &'static str {
    [
        "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X",
    ][(class_id - 1) as usize]
}

/// Draws an item type index (1-4) from a class's percentage mix.
pub fn draw_item_type(percent: [u8; 4], rng: &mut RandomStream) -> usize {
    debug_assert_eq!(percent.iter().map(|&p| p as u64).sum::<u64>(), 100);
    let roll = rng.below(100);
    let mut acc = 0u64;
    for (idx, &p) in percent.iter().enumerate() {
        acc += p as u64;
        if roll < acc {
            return idx + 1;
        }
    }
    unreachable!("percentages sum to 100")
}

/// Generates one instance of the given class and size.
pub fn generate_instance(class_id: u8, n: usize, rng: &mut RandomStream) -> Instance {
    assert!(n >= 1, "instance size must be at least 1");
    let spec = class_spec(class_id);
    let items = (0..n)
        .map(|idx| {
            let (w, h) = match spec.recipe {
                ItemRecipe::Uniform { w_lo, w_hi, h_lo, h_hi } => {
                    (rng.int_in(w_lo, w_hi), rng.int_in(h_lo, h_hi))
                }
                ItemRecipe::TypeMix { percent } => {
                    let ty = draw_item_type(percent, rng);
                    let (w_lo, w_hi, h_lo, h_hi) =
                        type_ranges(ty, spec.bin_width, spec.bin_height);
                    (rng.int_in(w_lo, w_hi), rng.int_in(h_lo, h_hi))
                }
            };
            Item::new(idx + 1, w, h)
        })
        .collect();
    Instance::new(
        suite_name(class_id, n, None),
        spec.bin_width,
        spec.bin_height,
        items,
    )
}

/// Canonical instance name: `c07_n040` or `c07_n040_03` with a replicate.
pub fn suite_name(class_id: u8, n: usize, replicate: Option<usize>) -> String {
    match replicate {
        Some(rep) => format!("c{class_id:02}_n{n:03}_{rep:02}"),
        None => format!("c{class_id:02}_n{n:03}"),
    }
}

/// The full 500-instance benchmark suite: classes 1-10, five sizes, ten
/// replicates, each seeded from the master seed and its own name.
pub fn generate_suite(master_seed: u64) -> Vec<Instance> {
    let master = RandomStream::new(master_seed);
    let mut suite = Vec::with_capacity(CLASS_COUNT * SUITE_SIZES.len() * SUITE_REPLICATES);
    for class_id in 1..=CLASS_COUNT as u8 {
        for &n in &SUITE_SIZES {
            for rep in 1..=SUITE_REPLICATES {
                let name = suite_name(class_id, n, Some(rep));
                let mut rng = master.derive(&name);
                let mut instance = generate_instance(class_id, n, &mut rng);
                instance.name = name;
                suite.push(instance);
            }
        }
    }
    suite
}
