//! Core domain types: items, instances, sequences, packings and the fitness
//! order used by every search component.
//!
//! All coordinates and lengths are integers. Types here are immutable value
//! data and safe to share between threads.

use std::fmt;

/// A rectangular item with a fixed orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Item {
    /// 1-based item index; instance items carry ids `1..=n`.
    pub id: usize,
    pub width: i64,
    pub height: i64,
}

impl Item {
    pub fn new(id: usize, width: i64, height: i64) -> Self {
        Self { id, width, height }
    }

    pub fn area(&self) -> i64 {
        self.width * self.height
    }
}

/// A problem instance: bin dimensions plus the item list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub bin_width: i64,
    pub bin_height: i64,
    pub items: Vec<Item>,
}

impl Instance {
    pub fn new(name: impl Into<String>, bin_width: i64, bin_height: i64, items: Vec<Item>) -> Self {
        Self {
            name: name.into(),
            bin_width,
            bin_height,
            items,
        }
    }

    /// Builds an instance from `(width, height)` pairs, assigning ids `1..=n`.
    pub fn from_dims(
        name: impl Into<String>,
        bin_width: i64,
        bin_height: i64,
        dims: &[(i64, i64)],
    ) -> Self {
        let items = dims
            .iter()
            .enumerate()
            .map(|(i, &(w, h))| Item::new(i + 1, w, h))
            .collect();
        Self::new(name, bin_width, bin_height, items)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Item lookup by id. Panics on an unknown id.
    pub fn item(&self, id: usize) -> &Item {
        self.items
            .iter()
            .find(|it| it.id == id)
            .unwrap_or_else(|| panic!("unknown item id {id}"))
    }

    pub fn total_item_area(&self) -> i64 {
        self.items.iter().map(Item::area).sum()
    }

    pub fn bin_area(&self) -> i64 {
        self.bin_width * self.bin_height
    }
}

/// A permutation of the instance's item ids; the input to the packing
/// heuristic and the genome of the sequence-search algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    order: Vec<usize>,
}

impl Sequence {
    /// Wraps an id list. Panics if it is not a permutation of `1..=n`.
    pub fn new(order: Vec<usize>) -> Self {
        assert!(
            is_permutation(&order),
            "sequence is not a permutation of 1..={}",
            order.len()
        );
        Self { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// True iff `order` contains each of `1..=order.len()` exactly once.
pub fn is_permutation(order: &[usize]) -> bool {
    let n = order.len();
    let mut seen = vec![false; n + 1];
    for &id in order {
        if id == 0 || id > n || seen[id] {
            return false;
        }
        seen[id] = true;
    }
    true
}

/// Where one item ended up: bin index plus bottom-left corner coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub item_id: usize,
    /// 0-based bin index.
    pub bin: usize,
    pub x: i64,
    pub y: i64,
}

/// An axis-aligned rectangle inside a bin, used for declared wastage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WastageRect {
    pub bin: usize,
    pub x: i64,
    pub y: i64,
    pub width: i64,
    pub height: i64,
}

/// A complete packing: one placement per item plus the wastage rectangles the
/// construction declared along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSolution {
    pub placements: Vec<Placement>,
    pub wastage: Vec<WastageRect>,
    pub bins_used: usize,
    /// Sum of item areas in the highest-index bin.
    pub last_bin_load: i64,
}

impl PackingSolution {
    /// Assembles a solution, computing `bins_used` and `last_bin_load` from
    /// the placements.
    pub fn new(instance: &Instance, placements: Vec<Placement>, wastage: Vec<WastageRect>) -> Self {
        let bins_used = placements.iter().map(|p| p.bin + 1).max().unwrap_or(0);
        let last_bin_load = if bins_used == 0 {
            0
        } else {
            placements
                .iter()
                .filter(|p| p.bin == bins_used - 1)
                .map(|p| instance.item(p.item_id).area())
                .sum()
        };
        Self {
            placements,
            wastage,
            bins_used,
            last_bin_load,
        }
    }

    pub fn fitness(&self) -> Fitness {
        fitness_of(self)
    }
}

/// The solution order: fewer bins first, ties broken by a lower load in the
/// last bin (a nearly-empty last bin is closer to being emptied).
///
/// The derived lexicographic `Ord` is exactly that order; "better" means
/// strictly smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fitness {
    pub bins: usize,
    pub last_load: i64,
}

impl Fitness {
    pub fn new(bins: usize, last_load: i64) -> Self {
        Self { bins, last_load }
    }

    pub fn better_than(&self, other: &Fitness) -> bool {
        self < other
    }
}

impl fmt::Display for Fitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} bins (last load {})", self.bins, self.last_load)
    }
}

/// Evaluates a packing: bin count plus last-bin load.
pub fn fitness_of(solution: &PackingSolution) -> Fitness {
    Fitness::new(solution.bins_used, solution.last_bin_load)
}

/// One broken rule, naming the offending item or rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPositiveBin { width: i64, height: i64 },
    IdsNotPermutation,
    NonPositiveItem { id: usize },
    WidthExceedsBin { id: usize },
    HeightExceedsBin { id: usize },
    ItemUnplaced { id: usize },
    ItemPlacedTwice { id: usize },
    UnknownItem { id: usize },
    PlacementOutOfBounds { id: usize },
    Overlap { bin: usize, first: usize, second: usize },
    WastageOutOfBounds { index: usize },
    WastageOverlapsItem { index: usize, id: usize },
    BinsUsedMismatch { stored: usize, computed: usize },
    LastLoadMismatch { stored: i64, computed: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NonPositiveBin { width, height } => {
                write!(f, "bin dimensions {width}x{height} must be at least 1x1")
            }
            IdsNotPermutation => write!(f, "item ids are not a permutation of 1..=n"),
            NonPositiveItem { id } => write!(f, "item {id}: width and height must be at least 1"),
            WidthExceedsBin { id } => write!(f, "item {id}: width exceeds bin width"),
            HeightExceedsBin { id } => write!(f, "item {id}: height exceeds bin height"),
            ItemUnplaced { id } => write!(f, "item {id} is unplaced"),
            ItemPlacedTwice { id } => write!(f, "item {id} is placed more than once"),
            UnknownItem { id } => write!(f, "placement references unknown item {id}"),
            PlacementOutOfBounds { id } => write!(f, "item {id} extends outside its bin"),
            Overlap { bin, first, second } => {
                write!(f, "items {first} and {second} overlap in bin {bin}")
            }
            WastageOutOfBounds { index } => {
                write!(f, "wastage rectangle {index} extends outside its bin")
            }
            WastageOverlapsItem { index, id } => {
                write!(f, "wastage rectangle {index} overlaps item {id}")
            }
            BinsUsedMismatch { stored, computed } => {
                write!(f, "bins_used is {stored} but placements use {computed}")
            }
            LastLoadMismatch { stored, computed } => {
                write!(f, "last_bin_load is {stored} but placements sum to {computed}")
            }
        }
    }
}

/// Outcome of a validation pass. Violations are data, not failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Checks the instance invariants: positive dimensions, ids forming a
/// permutation of `1..=n`, every item fitting a single bin.
pub fn validate_instance(instance: &Instance) -> ValidationReport {
    let mut violations = Vec::new();
    if instance.bin_width < 1 || instance.bin_height < 1 {
        violations.push(Violation::NonPositiveBin {
            width: instance.bin_width,
            height: instance.bin_height,
        });
    }
    let ids: Vec<usize> = instance.items.iter().map(|it| it.id).collect();
    if !is_permutation(&ids) {
        violations.push(Violation::IdsNotPermutation);
    }
    for item in &instance.items {
        if item.width < 1 || item.height < 1 {
            violations.push(Violation::NonPositiveItem { id: item.id });
            continue;
        }
        if item.width > instance.bin_width {
            violations.push(Violation::WidthExceedsBin { id: item.id });
        }
        if item.height > instance.bin_height {
            violations.push(Violation::HeightExceedsBin { id: item.id });
        }
    }
    ValidationReport { violations }
}

fn rects_overlap(
    (ax, ay, aw, ah): (i64, i64, i64, i64),
    (bx, by, bw, bh): (i64, i64, i64, i64),
) -> bool {
    ax < bx + bw && bx < ax + aw && ay < by + bh && by < ay + ah
}

/// Checks the packing invariants: completeness, in-bounds placements,
/// pairwise non-overlap per bin, wastage geometry and the cached summary
/// fields.
pub fn validate_solution(instance: &Instance, solution: &PackingSolution) -> ValidationReport {
    let mut violations = Vec::new();
    let (bin_w, bin_h) = (instance.bin_width, instance.bin_height);
    let n = instance.len();

    let mut placed_count = vec![0usize; n + 1];
    for p in &solution.placements {
        if p.item_id == 0 || p.item_id > n {
            violations.push(Violation::UnknownItem { id: p.item_id });
            continue;
        }
        placed_count[p.item_id] += 1;
    }
    for (id, &count) in placed_count.iter().enumerate().skip(1) {
        match count {
            0 => violations.push(Violation::ItemUnplaced { id }),
            1 => {}
            _ => violations.push(Violation::ItemPlacedTwice { id }),
        }
    }

    let rect_of = |p: &Placement| {
        let item = instance.item(p.item_id);
        (p.x, p.y, item.width, item.height)
    };

    let known: Vec<&Placement> = solution
        .placements
        .iter()
        .filter(|p| p.item_id >= 1 && p.item_id <= n)
        .collect();

    for p in &known {
        let (x, y, w, h) = rect_of(p);
        if x < 0 || y < 0 || x + w > bin_w || y + h > bin_h {
            violations.push(Violation::PlacementOutOfBounds { id: p.item_id });
        }
    }

    for (i, a) in known.iter().enumerate() {
        for b in &known[i + 1..] {
            if a.bin == b.bin && rects_overlap(rect_of(a), rect_of(b)) {
                violations.push(Violation::Overlap {
                    bin: a.bin,
                    first: a.item_id,
                    second: b.item_id,
                });
            }
        }
    }

    for (index, w) in solution.wastage.iter().enumerate() {
        if w.x < 0 || w.y < 0 || w.width < 1 || w.height < 1 || w.x + w.width > bin_w
            || w.y + w.height > bin_h
        {
            violations.push(Violation::WastageOutOfBounds { index });
            continue;
        }
        for p in &known {
            if p.bin == w.bin && rects_overlap((w.x, w.y, w.width, w.height), rect_of(p)) {
                violations.push(Violation::WastageOverlapsItem {
                    index,
                    id: p.item_id,
                });
            }
        }
    }

    let computed_bins = solution
        .placements
        .iter()
        .map(|p| p.bin + 1)
        .max()
        .unwrap_or(0);
    if solution.bins_used != computed_bins {
        violations.push(Violation::BinsUsedMismatch {
            stored: solution.bins_used,
            computed: computed_bins,
        });
    } else if computed_bins > 0 {
        let computed_load: i64 = known
            .iter()
            .filter(|p| p.bin == computed_bins - 1)
            .map(|p| instance.item(p.item_id).area())
            .sum();
        if solution.last_bin_load != computed_load {
            violations.push(Violation::LastLoadMismatch {
                stored: solution.last_bin_load,
                computed: computed_load,
            });
        }
    }

    ValidationReport { violations }
}
