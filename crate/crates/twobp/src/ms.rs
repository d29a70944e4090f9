//! Multi-start search: sample an input sequence, pack it, keep the best.

use std::time::Instant;

use crate::lgfi::pack;
use crate::model::{Fitness, Instance, Sequence};
use crate::rng::RandomStream;
use crate::sampling::sample_sequence;

/// A strict improvement of the incumbent during a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Improvement {
    /// 1-based evaluation index at which the improvement happened.
    pub eval: u64,
    pub fitness: Fitness,
}

/// Outcome of one search run: the best solution found, when it was found and
/// how much effort the run spent. One evaluation is one application of the
/// packing heuristic to a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub best_bins: usize,
    pub best_fitness: Fitness,
    pub best_sequence: Sequence,
    /// Evaluation index (1-based) at which the final incumbent first appeared.
    pub found_at_eval: u64,
    /// Wall-clock seconds from run start to the final incumbent.
    pub found_at_time: f64,
    pub total_evals: u64,
    /// Every strict incumbent improvement in order; fitness strictly
    /// decreases along this list.
    pub improvements: Vec<Improvement>,
}

impl RunRecord {
    /// Equality that ignores the wall-clock field; used by reproducibility
    /// checks.
    pub fn same_outcome(&self, other: &RunRecord) -> bool {
        self.best_fitness == other.best_fitness
            && self.best_sequence == other.best_sequence
            && self.found_at_eval == other.found_at_eval
            && self.total_evals == other.total_evals
            && self.improvements == other.improvements
    }
}

/// Incumbent bookkeeping shared by the search drivers.
pub(crate) struct SearchTracker {
    start: Instant,
    evals: u64,
    best: Option<(Fitness, Sequence)>,
    found_at_eval: u64,
    found_at_time: f64,
    improvements: Vec<Improvement>,
}

impl SearchTracker {
    pub(crate) fn new() -> Self {
        Self {
            start: Instant::now(),
            evals: 0,
            best: None,
            found_at_eval: 0,
            found_at_time: 0.0,
            improvements: Vec::new(),
        }
    }

    pub(crate) fn evals(&self) -> u64 {
        self.evals
    }

    /// Counts one evaluation and updates the incumbent on strict improvement.
    pub(crate) fn observe(&mut self, fitness: Fitness, sequence: &Sequence) {
        self.evals += 1;
        let improved = match &self.best {
            Some((best, _)) => fitness.better_than(best),
            None => true,
        };
        if improved {
            self.best = Some((fitness, sequence.clone()));
            self.found_at_eval = self.evals;
            self.found_at_time = self.start.elapsed().as_secs_f64();
            self.improvements.push(Improvement {
                eval: self.evals,
                fitness,
            });
        }
    }

    pub(crate) fn target_reached(&self, target_bins: Option<usize>) -> bool {
        match (target_bins, &self.best) {
            (Some(target), Some((best, _))) => best.bins <= target,
            _ => false,
        }
    }

    pub(crate) fn finish(self) -> RunRecord {
        let (best_fitness, best_sequence) =
            self.best.expect("at least one evaluation was performed");
        RunRecord {
            best_bins: best_fitness.bins,
            best_fitness,
            best_sequence,
            found_at_eval: self.found_at_eval,
            found_at_time: self.found_at_time,
            total_evals: self.evals,
            improvements: self.improvements,
        }
    }
}

/// Runs multi-start search: `eval_budget` independent samples, keeping the
/// best under the fitness order.
///
/// With `target_bins` set, the run stops as soon as the incumbent reaches
/// that bin count (used when a known lower bound or optimum is available).
pub fn run_ms(
    instance: &Instance,
    kappa: f64,
    eval_budget: u64,
    rng: &mut RandomStream,
    target_bins: Option<usize>,
) -> RunRecord {
    assert!(eval_budget >= 1, "eval budget must be at least 1");
    let mut tracker = SearchTracker::new();
    while tracker.evals() < eval_budget {
        let sequence = sample_sequence(instance, kappa, rng);
        let fitness = pack(instance, &sequence).fitness();
        tracker.observe(fitness, &sequence);
        if tracker.target_reached(target_bins) {
            break;
        }
    }
    tracker.finish()
}
