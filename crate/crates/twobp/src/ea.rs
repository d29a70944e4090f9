//! Evolutionary search over input sequences: rank-biased partner selection,
//! a three-pointer crossover and elitist replacement, with the free slots of
//! each generation refilled by fresh samples.

use crate::lgfi::pack;
use crate::model::{Fitness, Instance, Sequence};
use crate::ms::{RunRecord, SearchTracker};
use crate::rng::RandomStream;
use crate::sampling::{roulette_select, sample_sequence};

/// Tuning knobs of the evolutionary search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EaParams {
    /// Population size, at least 2.
    pub p_size: usize,
    /// Fraction of the population recreated by crossover each generation,
    /// in `(0, 1]`.
    pub c_rate: f64,
    /// Sampling concentration for initial and refill individuals.
    pub kappa: f64,
    /// Rank bias of partner selection; larger prefers better partners.
    pub delta: f64,
    /// Probability that a disputed crossover position takes the item from
    /// the better parent.
    pub better_bias: f64,
    pub eval_budget: u64,
}

impl Default for EaParams {
    fn default() -> Self {
        Self {
            p_size: 10,
            c_rate: 0.7,
            kappa: 10.0,
            delta: 20.0,
            better_bias: 0.75,
            eval_budget: 5_000_000,
        }
    }
}

impl EaParams {
    /// Number of members recreated by crossover per generation.
    pub fn crossover_count(&self) -> usize {
        // the epsilon shields intended integer products from float noise
        (self.c_rate * self.p_size as f64 + 1e-9).floor() as usize
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.p_size < 2 {
            return Err(format!("p_size must be at least 2, got {}", self.p_size));
        }
        if !(self.c_rate > 0.0 && self.c_rate <= 1.0) {
            return Err(format!("c_rate must be in (0, 1], got {}", self.c_rate));
        }
        if self.crossover_count() < 1 {
            return Err(format!(
                "c_rate {} with p_size {} recreates nobody",
                self.c_rate, self.p_size
            ));
        }
        if self.kappa < 1.0 {
            return Err(format!("kappa must be at least 1, got {}", self.kappa));
        }
        if self.delta < 1.0 {
            return Err(format!("delta must be at least 1, got {}", self.delta));
        }
        if !(0.0..=1.0).contains(&self.better_bias) {
            return Err(format!(
                "better_bias must be in [0, 1], got {}",
                self.better_bias
            ));
        }
        if self.eval_budget < 1 {
            return Err("eval budget must be at least 1".into());
        }
        Ok(())
    }
}

/// A sequence together with its cached evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub sequence: Sequence,
    pub fitness: Fitness,
}

impl Individual {
    fn evaluate(instance: &Instance, sequence: Sequence) -> Self {
        let fitness = pack(instance, &sequence).fitness();
        Self { sequence, fitness }
    }
}

/// A population kept sorted best-first; position 0 is the best member. The
/// sort is stable, so members with fully equal fitness keep their insertion
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    fn from_members(mut members: Vec<Individual>) -> Self {
        members.sort_by_key(|ind| ind.fitness);
        Self { members }
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> &Individual {
        &self.members[0]
    }
}

/// Builds the initial population from `p_size` sampled-and-evaluated
/// sequences. Duplicates are permitted.
pub fn generate_initial_population(
    instance: &Instance,
    p_size: usize,
    kappa: f64,
    rng: &mut RandomStream,
) -> Population {
    initial_population(instance, p_size, kappa, rng, &mut |_, _| {})
}

fn initial_population(
    instance: &Instance,
    p_size: usize,
    kappa: f64,
    rng: &mut RandomStream,
    observe: &mut dyn FnMut(Fitness, &Sequence),
) -> Population {
    assert!(p_size >= 2, "p_size must be at least 2");
    let members = (0..p_size)
        .map(|_| {
            let ind = Individual::evaluate(instance, sample_sequence(instance, kappa, rng));
            observe(ind.fitness, &ind.sequence);
            ind
        })
        .collect();
    Population::from_members(members)
}

/// Selection distribution for the crossover partner of the member at
/// `s_index`: candidate at position `pos` weighs `(p_size - 1 - pos)^delta`,
/// normalized over all other members. Degenerates to uniform when every
/// candidate weight is zero (only possible for a population of two).
///
/// Returns one probability per population slot; the entry at `s_index` is 0.
pub fn partner_probabilities(population: &Population, s_index: usize, delta: f64) -> Vec<f64> {
    let p_size = population.len();
    assert!(p_size >= 2, "partner selection needs at least two members");
    assert!(s_index < p_size, "member index out of range");
    let mut weights: Vec<f64> = (0..p_size)
        .map(|pos| {
            if pos == s_index {
                0.0
            } else {
                ((p_size - 1 - pos) as f64).powf(delta)
            }
        })
        .collect();
    let total: f64 = weights.iter().sum();
    if total > 0.0 {
        for w in &mut weights {
            *w /= total;
        }
    } else {
        let share = 1.0 / (p_size - 1) as f64;
        for (pos, w) in weights.iter_mut().enumerate() {
            *w = if pos == s_index { 0.0 } else { share };
        }
    }
    weights
}

/// Three-pointer crossover of two parent sequences.
///
/// Offspring positions are filled front to back. Both parent pointers skip
/// items already copied; when the parents agree on the next item it is copied
/// and both pointers advance, otherwise one parent donates its item with
/// probability `better_bias` for the better parent (ties favor `parent_s`)
/// and only the donor's pointer advances.
///
/// Panics if the parents' sequences are not permutations of the same id set.
pub fn crossover(
    parent_s: &Individual,
    parent_sc: &Individual,
    better_bias: f64,
    rng: &mut RandomStream,
) -> Sequence {
    let n = parent_s.sequence.len();
    assert_eq!(
        n,
        parent_sc.sequence.len(),
        "parents must order the same item set"
    );
    let s_ord = parent_s.sequence.order();
    let c_ord = parent_sc.sequence.order();
    let s_is_better = parent_s.fitness <= parent_sc.fitness;
    let take_s_prob = if s_is_better {
        better_bias
    } else {
        1.0 - better_bias
    };

    let mut used = vec![false; n + 1];
    let mut out = Vec::with_capacity(n);
    let (mut k, mut l) = (0usize, 0usize);
    for _ in 0..n {
        while used[s_ord[k]] {
            k += 1;
        }
        while used[c_ord[l]] {
            l += 1;
        }
        let pick = if s_ord[k] == c_ord[l] {
            let id = s_ord[k];
            k += 1;
            l += 1;
            id
        } else if rng.next_unit() < take_s_prob {
            let id = s_ord[k];
            k += 1;
            id
        } else {
            let id = c_ord[l];
            l += 1;
            id
        };
        used[pick] = true;
        out.push(pick);
    }
    Sequence::new(out)
}

/// One generation: the best `crossover_count()` members are each recombined
/// with a roulette-chosen partner, an offspring replaces its parent only if
/// strictly better, and the remaining slots are refilled with fresh samples.
/// Consumes exactly `p_size` evaluations.
pub fn ea_step(
    instance: &Instance,
    population: &Population,
    params: &EaParams,
    rng: &mut RandomStream,
) -> Population {
    ea_step_inner(instance, population, params, rng, &mut |_, _| {})
}

fn ea_step_inner(
    instance: &Instance,
    population: &Population,
    params: &EaParams,
    rng: &mut RandomStream,
    observe: &mut dyn FnMut(Fitness, &Sequence),
) -> Population {
    let p_size = params.p_size;
    assert_eq!(population.len(), p_size, "population size mismatch");
    let recreated = params.crossover_count();

    let mut next = Vec::with_capacity(p_size);
    for i in 0..recreated {
        let s = &population.members()[i];
        let probs = partner_probabilities(population, i, params.delta);
        let candidates: Vec<usize> = (0..p_size).filter(|&j| j != i).collect();
        let partner_idx = roulette_select(&candidates, &probs, rng);
        let partner = &population.members()[partner_idx];
        let child_seq = crossover(s, partner, params.better_bias, rng);
        let child = Individual::evaluate(instance, child_seq);
        observe(child.fitness, &child.sequence);
        if child.fitness.better_than(&s.fitness) {
            next.push(child);
        } else {
            next.push(s.clone());
        }
    }
    for _ in recreated..p_size {
        let fresh = Individual::evaluate(instance, sample_sequence(instance, params.kappa, rng));
        observe(fresh.fitness, &fresh.sequence);
        next.push(fresh);
    }
    Population::from_members(next)
}

/// Runs the evolutionary search until the evaluation budget is exhausted or
/// `target_bins` is reached.
///
/// The initial population consumes `p_size` evaluations and each generation
/// another `p_size`; generations are only started while a full one fits in
/// the budget. The incumbent is tracked across the whole run, so refill churn
/// can never lose the best solution found.
pub fn run_ea(
    instance: &Instance,
    params: &EaParams,
    rng: &mut RandomStream,
    target_bins: Option<usize>,
) -> RunRecord {
    params.validate().expect("invalid EA parameters");
    let mut tracker = SearchTracker::new();
    let mut population = {
        let observe = &mut |fitness: Fitness, seq: &Sequence| tracker.observe(fitness, seq);
        initial_population(instance, params.p_size, params.kappa, rng, observe)
    };
    while !tracker.target_reached(target_bins)
        && tracker.evals() + params.p_size as u64 <= params.eval_budget
    {
        let observe = &mut |fitness: Fitness, seq: &Sequence| tracker.observe(fitness, seq);
        population = ea_step_inner(instance, &population, params, rng, observe);
    }
    tracker.finish()
}
