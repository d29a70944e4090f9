//! Probabilistic generation of input sequences around the deterministic
//! preprocessing order.
//!
//! Every item gets a fixed weight from its position in the deterministic
//! order, `v_i = (n - pos_i)^kappa` with 1-based positions, so earlier items
//! weigh more and the last item weighs zero. Sequence positions are then
//! filled front to back by roulette-wheel draws over the not-yet-assigned
//! items. Larger `kappa` concentrates the distribution on the deterministic
//! order.

use crate::lgfi::preprocess_sort;
use crate::model::{Instance, Sequence};
use crate::rng::RandomStream;

/// Position-based weights, indexed by item id (index 0 unused).
///
/// `base` must be a permutation of `1..=n`; the weight of the item at 1-based
/// position `p` is `(n - p)^kappa`.
pub fn sequence_weights(n: usize, base: &Sequence, kappa: f64) -> Vec<f64> {
    assert_eq!(base.len(), n, "base sequence length mismatch");
    assert!(kappa >= 1.0, "kappa must be at least 1, got {kappa}");
    let mut weights = vec![0.0; n + 1];
    for (idx, &id) in base.order().iter().enumerate() {
        let pos = (idx + 1) as f64;
        weights[id] = (n as f64 - pos).powf(kappa);
    }
    weights
}

/// Roulette-wheel draw over `candidates` proportional to `weights[id]`.
///
/// Candidates with weight zero are never chosen while any positive weight
/// remains; when the total weight is zero the draw is uniform. Panics on an
/// empty candidate set.
pub fn roulette_select(candidates: &[usize], weights: &[f64], rng: &mut RandomStream) -> usize {
    roulette_by_log(candidates, |c| weights[c].ln(), rng)
}

/// Roulette over log-weights. Rescaling by the largest candidate per draw
/// leaves the distribution untouched (only weight ratios matter) but keeps
/// the arithmetic finite for weights far outside the `f64` range.
fn roulette_by_log(
    candidates: &[usize],
    log_weight: impl Fn(usize) -> f64,
    rng: &mut RandomStream,
) -> usize {
    assert!(!candidates.is_empty(), "roulette over an empty candidate set");
    let max_lw = candidates
        .iter()
        .map(|&c| log_weight(c))
        .fold(f64::NEG_INFINITY, f64::max);
    if max_lw == f64::NEG_INFINITY {
        // every candidate has weight zero
        return candidates[rng.below(candidates.len() as u64) as usize];
    }
    let scaled: Vec<f64> = candidates
        .iter()
        .map(|&c| (log_weight(c) - max_lw).exp())
        .collect();
    let total: f64 = scaled.iter().sum();
    let target = rng.next_unit() * total;
    let mut acc = 0.0;
    let mut last_positive = None;
    for (idx, &w) in scaled.iter().enumerate() {
        if w > 0.0 {
            acc += w;
            last_positive = Some(candidates[idx]);
            if target < acc {
                return candidates[idx];
            }
        }
    }
    // float rounding can leave target marginally above the final accumulator
    last_positive.expect("total weight was positive")
}

/// Samples one input sequence from the weights of the deterministic order.
pub fn sample_sequence(instance: &Instance, kappa: f64, rng: &mut RandomStream) -> Sequence {
    assert!(kappa >= 1.0, "kappa must be at least 1, got {kappa}");
    let n = instance.len();
    let base = preprocess_sort(instance);
    // fixed per-item log-weights, kappa * ln(n - pos); computed once
    let mut log_weights = vec![f64::NEG_INFINITY; n + 1];
    for (idx, &id) in base.order().iter().enumerate() {
        let rank = (n - (idx + 1)) as f64;
        if rank > 0.0 {
            log_weights[id] = kappa * rank.ln();
        }
    }
    let mut remaining: Vec<usize> = base.order().to_vec();
    let mut order = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let pick = roulette_by_log(&remaining, |c| log_weights[c], rng);
        order.push(pick);
        remaining.retain(|&c| c != pick);
    }
    Sequence::new(order)
}
