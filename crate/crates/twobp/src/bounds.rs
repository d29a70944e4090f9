//! The continuous area lower bound and a desk-scale exact oracle.
//!
//! The oracle decides single-bin feasibility by depth-first search over
//! *normal positions*: any feasible packing can be pushed left and down until
//! every item rests against the bin border or other items, which puts every
//! coordinate on a subset sum of the other items' dimensions. Restricting the
//! search to those coordinates therefore loses no packings. Minimal bin
//! counts are then a partition problem over feasible item subsets, solved by
//! dynamic programming over bitmasks. All of this is only tractable for a
//! handful of items; [`OracleLimits`] caps both the item count and the number
//! of search nodes.

use std::collections::HashMap;

use crate::model::{Instance, Item, PackingSolution, Placement};

/// Size guards for the exact oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest instance the oracle accepts. Hard-capped at 10.
    pub max_items: usize,
    /// Search node cap shared by all feasibility queries of one call.
    pub node_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_items: 7,
            node_budget: 2_000_000,
        }
    }
}

impl OracleLimits {
    pub const HARD_MAX_ITEMS: usize = 10;

    pub fn admits(&self, n: usize) -> bool {
        n <= self.max_items.min(Self::HARD_MAX_ITEMS)
    }
}

/// An oracle answer: definite, or unknown because the node budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome<T> {
    Definite(T),
    Unknown,
}

impl<T> OracleOutcome<T> {
    pub fn definite(self) -> Option<T> {
        match self {
            OracleOutcome::Definite(v) => Some(v),
            OracleOutcome::Unknown => None,
        }
    }
}

/// Continuous lower bound: total item area divided by bin area, rounded up.
/// At least 1 for any non-empty instance.
pub fn area_lower_bound(instance: &Instance) -> usize {
    if instance.is_empty() {
        return 0;
    }
    let total = instance.total_item_area();
    let bin = instance.bin_area();
    (((total + bin - 1) / bin).max(1)) as usize
}

struct BudgetExceeded;

/// `(x, y, width, height)` of a placed rectangle during search.
type PlacedRect = (i64, i64, i64, i64);
/// `(item index, x, y)` triples proving a subset feasible.
type Witness = Vec<(usize, i64, i64)>;

struct FeasibilitySearch {
    dims: Vec<(i64, i64)>,
    bin_w: i64,
    bin_h: i64,
    xs: Vec<i64>,
    ys: Vec<i64>,
    nodes: u64,
    budget: u64,
}

/// Deduplicated subset sums of `values`, capped at `limit`.
fn subset_sums(values: &[i64], limit: i64) -> Vec<i64> {
    let mut sums = vec![false; (limit + 1) as usize];
    sums[0] = true;
    for &v in values {
        if v > limit {
            continue;
        }
        for s in (0..=(limit - v) as usize).rev() {
            if sums[s] {
                sums[s + v as usize] = true;
            }
        }
    }
    sums.iter()
        .enumerate()
        .filter_map(|(s, &ok)| ok.then_some(s as i64))
        .collect()
}

impl FeasibilitySearch {
    fn new(items: &[(i64, i64)], bin_w: i64, bin_h: i64, budget: u64) -> Self {
        // harder (larger) items first; identical items adjacent for the
        // symmetry break
        let mut dims = items.to_vec();
        dims.sort_by(|a, b| (b.0 * b.1, b).cmp(&(a.0 * a.1, a)));
        let widths: Vec<i64> = dims.iter().map(|d| d.0).collect();
        let heights: Vec<i64> = dims.iter().map(|d| d.1).collect();
        Self {
            xs: subset_sums(&widths, bin_w - 1),
            ys: subset_sums(&heights, bin_h - 1),
            dims,
            bin_w,
            bin_h,
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<Option<Vec<PlacedRect>>, BudgetExceeded> {
        let mut placed: Vec<PlacedRect> = Vec::with_capacity(self.dims.len());
        if self.dfs(0, &mut placed)? {
            Ok(Some(placed))
        } else {
            Ok(None)
        }
    }

    fn dfs(
        &mut self,
        idx: usize,
        placed: &mut Vec<PlacedRect>,
    ) -> Result<bool, BudgetExceeded> {
        if idx == self.dims.len() {
            return Ok(true);
        }
        let (w, h) = self.dims[idx];
        let identical_prev = idx > 0 && self.dims[idx - 1] == self.dims[idx];
        for yi in 0..self.ys.len() {
            let y = self.ys[yi];
            if y + h > self.bin_h {
                break;
            }
            for xi in 0..self.xs.len() {
                let x = self.xs[xi];
                if x + w > self.bin_w {
                    break;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(BudgetExceeded);
                }
                // identical items are placed in canonical position order
                if identical_prev {
                    let prev = &placed[idx - 1];
                    if (x, y) < (prev.0, prev.1) {
                        continue;
                    }
                }
                if placed
                    .iter()
                    .all(|&(px, py, pw, ph)| x >= px + pw || px >= x + w || y >= py + ph || py >= y + h)
                {
                    placed.push((x, y, w, h));
                    if self.dfs(idx + 1, placed)? {
                        return Ok(true);
                    }
                    placed.pop();
                }
            }
        }
        Ok(false)
    }
}

/// Whether the items admit a non-overlapping packing into one `bin_w x bin_h`
/// bin. Order of `items` never changes the answer.
pub fn feasible_single_bin(
    items: &[Item],
    bin_w: i64,
    bin_h: i64,
    limits: &OracleLimits,
) -> OracleOutcome<bool> {
    assert!(
        limits.admits(items.len()),
        "oracle limit exceeded: {} items (max {})",
        items.len(),
        limits.max_items.min(OracleLimits::HARD_MAX_ITEMS)
    );
    if items
        .iter()
        .any(|it| it.width > bin_w || it.height > bin_h || it.width < 1 || it.height < 1)
    {
        return OracleOutcome::Definite(false);
    }
    let total: i64 = items.iter().map(Item::area).sum();
    if total > bin_w * bin_h {
        return OracleOutcome::Definite(false);
    }
    let dims: Vec<(i64, i64)> = items.iter().map(|it| (it.width, it.height)).collect();
    let mut search = FeasibilitySearch::new(&dims, bin_w, bin_h, limits.node_budget);
    match search.run() {
        Ok(found) => OracleOutcome::Definite(found.is_some()),
        Err(BudgetExceeded) => OracleOutcome::Unknown,
    }
}

struct PartitionOracle<'a> {
    instance: &'a Instance,
    nodes_left: u64,
    /// Per item subset: feasibility, plus witness placements when feasible.
    cache: HashMap<u32, OracleOutcome<Option<Witness>>>,
}

impl<'a> PartitionOracle<'a> {
    fn new(instance: &'a Instance, limits: &OracleLimits) -> Self {
        Self {
            instance,
            nodes_left: limits.node_budget,
            cache: HashMap::new(),
        }
    }

    fn subset_feasible(&mut self, mask: u32) -> OracleOutcome<bool> {
        match self.subset_witness(mask) {
            OracleOutcome::Definite(w) => OracleOutcome::Definite(w.is_some()),
            OracleOutcome::Unknown => OracleOutcome::Unknown,
        }
    }

    fn subset_witness(&mut self, mask: u32) -> OracleOutcome<Option<Witness>> {
        if let Some(cached) = self.cache.get(&mask) {
            return cached.clone();
        }
        let items: Vec<&Item> = self
            .instance
            .items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, it)| it)
            .collect();
        let total: i64 = items.iter().map(|it| it.area()).sum();
        let outcome = if total > self.instance.bin_area() {
            OracleOutcome::Definite(None)
        } else {
            let dims: Vec<(i64, i64)> = items.iter().map(|it| (it.width, it.height)).collect();
            let mut search = FeasibilitySearch::new(
                &dims,
                self.instance.bin_width,
                self.instance.bin_height,
                self.nodes_left,
            );
            let result = search.run();
            self.nodes_left = self.nodes_left.saturating_sub(search.nodes);
            match result {
                Ok(Some(placed)) => {
                    // map sorted search dims back to item indices
                    let mut remaining: Vec<usize> = (0..self.instance.len())
                        .filter(|i| mask & (1 << i) != 0)
                        .collect();
                    let mut witness = Vec::with_capacity(placed.len());
                    for &(x, y, w, h) in &placed {
                        let slot = remaining
                            .iter()
                            .position(|&i| {
                                let it = &self.instance.items[i];
                                it.width == w && it.height == h
                            })
                            .expect("witness dims match an item");
                        witness.push((remaining.remove(slot), x, y));
                    }
                    OracleOutcome::Definite(Some(witness))
                }
                Ok(None) => OracleOutcome::Definite(None),
                Err(BudgetExceeded) => OracleOutcome::Unknown,
            }
        };
        self.cache.insert(mask, outcome.clone());
        outcome
    }

    /// Bitmask DP for the minimal feasible partition, with unknown subsets
    /// treated per `optimistic`. Returns `None` when no partition exists
    /// under that assumption.
    fn min_bins(&mut self, optimistic: bool) -> Option<(usize, Vec<u32>)> {
        let n = self.instance.len();
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let mut dp: Vec<Option<(usize, u32)>> = vec![None; (full as usize) + 1];
        dp[0] = Some((0, 0));
        for mask in 1..=full {
            let lowest = mask & mask.wrapping_neg();
            // enumerate submasks of mask containing the lowest set bit
            let mut sub = mask;
            let mut best: Option<(usize, u32)> = None;
            loop {
                if sub & lowest != 0 {
                    let usable = match self.subset_feasible(sub) {
                        OracleOutcome::Definite(f) => f,
                        OracleOutcome::Unknown => optimistic,
                    };
                    if usable {
                        if let Some((rest, _)) = dp[(mask ^ sub) as usize] {
                            let bins = rest + 1;
                            if best.is_none_or(|(b, _)| bins < b) {
                                best = Some((bins, sub));
                            }
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            dp[mask as usize] = best;
        }
        dp[full as usize].map(|(bins, _)| {
            let mut parts = Vec::with_capacity(bins);
            let mut mask = full;
            while mask != 0 {
                let (_, sub) = dp[mask as usize].unwrap();
                parts.push(sub);
                mask ^= sub;
            }
            (bins, parts)
        })
    }
}

/// Exact minimal number of bins, by feasibility-checked set partition.
///
/// Panics when the instance exceeds the oracle's item limit; answers
/// `Unknown` when the node budget runs out before the optimum is pinned down.
pub fn exact_min_bins(instance: &Instance, limits: &OracleLimits) -> OracleOutcome<usize> {
    match exact_solution(instance, limits) {
        OracleOutcome::Definite((bins, _)) => OracleOutcome::Definite(bins),
        OracleOutcome::Unknown => OracleOutcome::Unknown,
    }
}

/// Like [`exact_min_bins`], also returning a witness packing that attains the
/// optimum.
pub fn exact_solution(
    instance: &Instance,
    limits: &OracleLimits,
) -> OracleOutcome<(usize, PackingSolution)> {
    assert!(
        limits.admits(instance.len()),
        "oracle limit exceeded: {} items (max {})",
        instance.len(),
        limits.max_items.min(OracleLimits::HARD_MAX_ITEMS)
    );
    if instance.is_empty() {
        return OracleOutcome::Definite((0, PackingSolution::new(instance, vec![], vec![])));
    }
    let mut oracle = PartitionOracle::new(instance, limits);
    let pessimistic = oracle.min_bins(false);
    let definite = match pessimistic {
        Some((bins, ref parts)) => {
            // only trust the answer if assuming the unknowns feasible could
            // not do better
            match oracle.min_bins(true) {
                Some((optimistic_bins, _)) if optimistic_bins == bins => Some((bins, parts.clone())),
                _ => None,
            }
        }
        None => None,
    };
    let Some((bins, parts)) = definite else {
        return OracleOutcome::Unknown;
    };
    let mut placements = Vec::with_capacity(instance.len());
    for (bin, &part) in parts.iter().enumerate() {
        let witness = oracle
            .subset_witness(part)
            .definite()
            .flatten()
            .expect("partition blocks are definitely feasible");
        for (item_idx, x, y) in witness {
            placements.push(Placement {
                item_id: instance.items[item_idx].id,
                bin,
                x,
                y,
            });
        }
    }
    OracleOutcome::Definite((bins, PackingSolution::new(instance, placements, vec![])))
}
