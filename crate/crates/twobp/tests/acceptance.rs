//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use twobp::bounds::{area_lower_bound, exact_min_bins, OracleLimits, OracleOutcome};
use twobp::ea::{run_ea, EaParams};
use twobp::generator::{generate_instance, suite_name, SUITE_SIZES};
use twobp::ilp::{build_model, ConstraintFamily};
use twobp::io::import_tolerant;
use twobp::lgfi::{pack, pack_with_trace, preprocess_sort, Decision};
use twobp::model::{validate_solution, Fitness, Instance};
use twobp::ms::run_ms;
use twobp::report::{run_bench, Algorithm, BenchConfig};
use twobp::sampling::sample_sequence;
use twobp::RandomStream;

fn six_item_demo() -> Instance {
    Instance::from_dims(
        "demo6",
        6,
        6,
        &[(3, 3), (2, 4), (3, 2), (1, 4), (2, 2), (2, 1)],
    )
}

/// Criterion 1: the six-item walkthrough reproduces the known construction
/// step for step, within a millisecond.
#[test]
fn acceptance_1_golden_walkthrough() {
    let instance = six_item_demo();
    let sequence = preprocess_sort(&instance);
    assert_eq!(sequence.order(), [1, 2, 3, 4, 5, 6]);

    // warm-up, then the timed run
    let _ = pack_with_trace(&instance, &sequence);
    let start = Instant::now();
    let (solution, trace) = pack_with_trace(&instance, &sequence);
    let elapsed = start.elapsed();

    let expected_placements = [
        (1, 0, 0, 0),
        (3, 0, 3, 0),
        (2, 0, 3, 2),
        (4, 0, 5, 2),
        (5, 0, 0, 3),
        (6, 0, 0, 5),
    ];
    assert_eq!(solution.bins_used, 1);
    for (id, bin, x, y) in expected_placements {
        let p = solution
            .placements
            .iter()
            .find(|p| p.item_id == id)
            .unwrap_or_else(|| panic!("item {id} unplaced"));
        assert_eq!((p.bin, p.x, p.y), (bin, x, y), "item {id}");
    }
    assert_eq!(solution.wastage.len(), 1);
    let w = solution.wastage[0];
    assert_eq!((w.bin, w.x, w.y, w.width, w.height), (0, 2, 3, 1, 2));

    // the step order must match too: five placements, wastage, final placement
    let decisions: Vec<Decision> = trace.iter().map(|s| s.decision).collect();
    let placed = |id, gap_filled| Decision::Placed { item_id: id, gap_filled };
    assert_eq!(
        decisions,
        [
            placed(1, false),
            placed(3, true),
            placed(2, false),
            placed(4, true),
            placed(5, false),
            Decision::Wastage { width: 1, height: 2 },
            placed(6, true),
        ]
    );
    assert!(
        elapsed.as_secs_f64() < 1e-3,
        "construction took {elapsed:?}, budget is 1 ms"
    );
    println!("acceptance 1 (golden walkthrough): PASS ({elapsed:?})");
}

/// Criterion 2: 1,000 generated instances across all classes and sizes;
/// every solution of all three algorithms validates with zero violations.
#[test]
fn acceptance_2_validity_sweep() {
    let master = RandomStream::new(20_002);
    let mut instances = Vec::with_capacity(1000);
    for class_id in 1..=10u8 {
        for &n in &SUITE_SIZES {
            for rep in 1..=20usize {
                let name = format!("{}_{rep:02}", suite_name(class_id, n, None));
                let mut rng = master.derive(&name);
                let mut instance = generate_instance(class_id, n, &mut rng);
                instance.name = name;
                instances.push(instance);
            }
        }
    }
    assert_eq!(instances.len(), 1000);

    let start = Instant::now();
    let violations: usize = instances
        .par_iter()
        .map(|instance| {
            let mut bad = 0;
            let lgfi_solution = pack(instance, &preprocess_sort(instance));
            if !validate_solution(instance, &lgfi_solution).is_ok() {
                bad += 1;
            }
            let seed = RandomStream::new(7).derive(&instance.name).seed();
            let ms = run_ms(instance, 10.0, 1_000, &mut RandomStream::new(seed), None);
            if !validate_solution(instance, &pack(instance, &ms.best_sequence)).is_ok() {
                bad += 1;
            }
            let params = EaParams {
                eval_budget: 1_000,
                ..EaParams::default()
            };
            let ea = run_ea(instance, &params, &mut RandomStream::new(seed), None);
            if !validate_solution(instance, &pack(instance, &ea.best_sequence)).is_ok() {
                bad += 1;
            }
            bad
        })
        .sum();
    assert_eq!(violations, 0, "{violations} invalid solutions");
    println!(
        "acceptance 2 (validity sweep, 1000 instances x 3 algorithms): PASS ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 3: on tiny instances the oracle never exceeds the heuristic,
/// and the evolutionary search reaches the optimum on at least 80% of them.
#[test]
fn acceptance_3_oracle_dominance() {
    let limits = OracleLimits::default();
    let mut rng = RandomStream::new(20_003);
    let mut cases = Vec::new();
    for idx in 0..200 {
        let n = 1 + rng.below(5) as usize;
        let bin = rng.int_in(5, 10);
        let dims: Vec<(i64, i64)> = (0..n)
            .map(|_| (rng.int_in(1, bin), rng.int_in(1, bin)))
            .collect();
        let mut instance = Instance::from_dims("tiny", bin, bin, &dims);
        instance.name = format!("tiny_{idx:03}");
        cases.push(instance);
    }

    let results: Vec<(usize, usize, usize)> = cases
        .par_iter()
        .map(|instance| {
            let exact = match exact_min_bins(instance, &limits) {
                OracleOutcome::Definite(bins) => bins,
                OracleOutcome::Unknown => panic!("budget exhausted on {}", instance.name),
            };
            let heuristic = pack(instance, &preprocess_sort(instance)).bins_used;
            let params = EaParams {
                eval_budget: 10_000,
                ..EaParams::default()
            };
            let seed = RandomStream::new(3).derive(&instance.name).seed();
            let ea = run_ea(instance, &params, &mut RandomStream::new(seed), Some(exact));
            (exact, heuristic, ea.best_bins)
        })
        .collect();

    let mut ea_optimal = 0;
    for (exact, heuristic, ea_bins) in &results {
        assert!(exact <= heuristic, "oracle above the one-pass heuristic");
        assert!(ea_bins >= exact, "search beat a definite optimum");
        if ea_bins == exact {
            ea_optimal += 1;
        }
    }
    let rate = ea_optimal as f64 / results.len() as f64;
    assert!(rate >= 0.8, "optimum rate {rate:.2} below the 0.8 target");
    println!(
        "acceptance 3 (oracle dominance, 200 tiny instances): PASS (evolutionary search optimal on {:.1}%)",
        rate * 100.0
    );
}

/// Criterion 4: n full-size items need exactly n bins under every algorithm,
/// and the area bound says the same.
#[test]
fn acceptance_4_trivial_counts() {
    let n = 5;
    let instance = Instance::from_dims("full5", 7, 4, &[(7, 4); 5]);
    assert_eq!(area_lower_bound(&instance), n);

    let lgfi_bins = pack(&instance, &preprocess_sort(&instance)).bins_used;
    assert_eq!(lgfi_bins, n);

    let ms = run_ms(&instance, 10.0, 50, &mut RandomStream::new(1), None);
    assert_eq!(ms.best_bins, n);

    let params = EaParams {
        eval_budget: 50,
        ..EaParams::default()
    };
    let ea = run_ea(&instance, &params, &mut RandomStream::new(1), None);
    assert_eq!(ea.best_bins, n);

    let exact = exact_min_bins(&instance, &OracleLimits::default());
    assert_eq!(exact, OracleOutcome::Definite(n));
    println!("acceptance 4 (trivial counts): PASS");
}

/// Criterion 5: sampled first-position frequencies and the full-sequence
/// probability of the deterministic order match exact enumeration within
/// three sigma over 10^5 samples.
#[test]
fn acceptance_5_sampler_distribution() {
    // distinct areas pin the deterministic order to [1, 2, 3]
    let instance = Instance::from_dims("three", 6, 6, &[(3, 3), (2, 2), (1, 1)]);
    assert_eq!(preprocess_sort(&instance).order(), [1, 2, 3]);

    // independent oracle: walk the selection tree with the weight formula
    let weights = |id: usize| (3.0 - id as f64).max(0.0); // (n - pos)^1 for base [1,2,3]
    let order_probability = |order: &[usize]| {
        let mut remaining = vec![1usize, 2, 3];
        let mut prob = 1.0;
        for &pick in order {
            let total: f64 = remaining.iter().map(|&c| weights(c)).sum();
            prob *= if total > 0.0 {
                weights(pick) / total
            } else {
                1.0 / remaining.len() as f64
            };
            remaining.retain(|&c| c != pick);
        }
        prob
    };
    let det_prob = order_probability(&[1, 2, 3]);
    assert!((det_prob - 2.0 / 3.0).abs() < 1e-12);

    let draws = 100_000u64;
    let mut rng = RandomStream::new(20_005);
    let mut first_counts = [0u64; 4];
    let mut det_count = 0u64;
    for _ in 0..draws {
        let s = sample_sequence(&instance, 1.0, &mut rng);
        first_counts[s.order()[0]] += 1;
        if s.order() == [1, 2, 3] {
            det_count += 1;
        }
    }

    for (id, expected_p) in [(1usize, 2.0 / 3.0), (2, 1.0 / 3.0), (3, 0.0)] {
        let expected = draws as f64 * expected_p;
        let sigma = (draws as f64 * expected_p * (1.0 - expected_p)).sqrt();
        let observed = first_counts[id] as f64;
        assert!(
            (observed - expected).abs() <= 3.0 * sigma,
            "first-position frequency of item {id}: {observed} vs {expected} (3 sigma {})",
            3.0 * sigma
        );
    }
    let sigma_det = (draws as f64 * det_prob * (1.0 - det_prob)).sqrt();
    assert!((det_count as f64 - draws as f64 * det_prob).abs() <= 3.0 * sigma_det);
    println!(
        "acceptance 5 (sampler distribution): PASS (deterministic order {:.2}% vs exact {:.2}%)",
        det_count as f64 / draws as f64 * 100.0,
        det_prob * 100.0
    );
}

/// Criterion 6: exact evaluation accounting, monotone incumbent, and
/// bit-identical res/eval columns across reruns and parallelism widths.
#[test]
fn acceptance_6_ea_accounting_and_determinism() {
    let mut rng = RandomStream::new(20_006);
    let instance = generate_instance(5, 40, &mut rng);
    let params = EaParams {
        eval_budget: 1_000,
        ..EaParams::default()
    };

    let record = run_ea(&instance, &params, &mut RandomStream::new(11), None);
    // p_size evaluations for the initial population plus p_size per generation
    assert_eq!(record.total_evals % params.p_size as u64, 0);
    assert_eq!(record.total_evals, 1_000);
    let generations = record.total_evals / params.p_size as u64 - 1;
    assert_eq!(
        record.total_evals,
        params.p_size as u64 * (generations + 1)
    );

    let mut last: Option<Fitness> = None;
    for imp in &record.improvements {
        if let Some(prev) = last {
            assert!(imp.fitness.better_than(&prev), "incumbent worsened");
        }
        last = Some(imp.fitness);
    }

    let rerun = run_ea(&instance, &params, &mut RandomStream::new(11), None);
    assert!(record.same_outcome(&rerun), "rerun diverged");

    // a sweep's res/eval columns are invariant to the worker count
    let instances: Vec<Instance> = (0..12)
        .map(|i| {
            let mut inst = generate_instance(3, 20, &mut rng);
            inst.name = format!("par_{i:02}");
            inst
        })
        .collect();
    let mut config = BenchConfig {
        algorithm: Algorithm::Ea,
        master_seed: 77,
        jobs: 1,
        ..BenchConfig::default()
    };
    config.params.budget = 300;
    let serial = run_bench(&instances, &config);
    config.jobs = 4;
    let parallel = run_bench(&instances, &config);
    assert_eq!(serial.to_csv_without_time(), parallel.to_csv_without_time());
    println!("acceptance 6 (accounting, monotonicity, determinism): PASS");
}

/// Criterion 7: the n=6 model has the documented variable and constraint
/// structure, and the walkthrough packing satisfies it with objective 1.
#[test]
fn acceptance_7_ilp_structure() {
    let instance = six_item_demo();
    let model = build_model(&instance);

    let count_prefix = |prefix: &str| {
        model
            .variables()
            .iter()
            .filter(|v| v.name.starts_with(prefix))
            .count()
    };
    assert_eq!(count_prefix("alpha_"), 21);
    assert_eq!(count_prefix("x_") + count_prefix("y_"), 12);
    let direction_vars =
        count_prefix("ul_") + count_prefix("ua_") + count_prefix("ur_") + count_prefix("uu_");
    assert_eq!(direction_vars, 60);
    assert_eq!(model.variables().len(), 93);

    // derive the separation-row count by enumeration: one row per k <= i < j
    let mut triples = 0usize;
    for i in 1..=6usize {
        for _j in (i + 1)..=6 {
            triples += i;
        }
    }
    assert_eq!(triples, 35);

    use ConstraintFamily::*;
    for (family, expected) in [
        (Assignment, 6),
        (OpenBin, 15),
        (Direction, 15),
        (SeparateLeft, triples),
        (SeparateAbove, triples),
        (SeparateRight, triples),
        (SeparateBelow, triples),
    ] {
        assert_eq!(model.family_count(family), expected, "{family:?}");
    }

    let solution = pack(&instance, &preprocess_sort(&instance));
    let values = model.assignment_from_packing(&instance, &solution);
    assert_eq!(model.check_assignment(&values), Ok(1));
    println!("acceptance 7 (ilp structure): PASS");
}

/// Criterion 8 (conditional): totals on the original benchmark files.
///
/// Needs the original instance files, which are not regenerable from a seed.
/// Point `TWOBP_BENCH_DIR` at a directory containing the ten class files
/// (named so that the class number is recognizable, e.g. `Class_09.*`); the
/// tolerant importer reads them. Without the variable the criterion is
/// skipped.
#[test]
fn acceptance_8_original_benchmark_totals() {
    let Ok(dir) = std::env::var("TWOBP_BENCH_DIR") else {
        println!(
            "acceptance 8 (original benchmark totals): SKIP — set TWOBP_BENCH_DIR to the directory with the original class files"
        );
        return;
    };
    let mut by_class: HashMap<u8, Vec<Instance>> = HashMap::new();
    for entry in std::fs::read_dir(&dir).expect("readable benchmark directory") {
        let path = entry.expect("directory entry").path();
        if !path.is_file() {
            continue;
        }
        let stem = path.file_stem().unwrap().to_string_lossy().to_string();
        let digits: String = stem.chars().filter(char::is_ascii_digit).collect();
        let Ok(class_id) = digits.parse::<u8>() else {
            continue;
        };
        if !(1..=10).contains(&class_id) {
            continue;
        }
        let text = std::fs::read_to_string(&path).expect("readable class file");
        let instances = import_tolerant(&text, &stem)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(
            instances.len(),
            50,
            "{}: expected 50 instances per class file",
            path.display()
        );
        by_class.insert(class_id, instances);
    }

    // class sizes run 20..=100 in blocks of ten instances
    let totals = |instances: &[Instance], algo: &dyn Fn(&Instance, u64) -> usize| -> Vec<usize> {
        instances
            .chunks(10)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .map(|(i, inst)| algo(inst, i as u64))
                    .sum()
            })
            .collect()
    };

    let ms_algo = |inst: &Instance, salt: u64| {
        run_ms(inst, 10.0, 10_000, &mut RandomStream::new(1 + salt), None).best_bins
    };
    let class9 = &by_class[&9];
    assert_eq!(totals(class9, &ms_algo), [143, 278, 437, 577, 695]);
    let class1 = &by_class[&1];
    assert_eq!(totals(&class1[..10], &ms_algo), [71]);

    let ea_algo = |inst: &Instance, salt: u64| {
        let params = EaParams {
            eval_budget: 100_000,
            ..EaParams::default()
        };
        run_ea(inst, &params, &mut RandomStream::new(1 + salt), None).best_bins
    };
    let class2 = &by_class[&2];
    assert_eq!(totals(class2, &ea_algo), [10, 19, 25, 31, 39]);
    println!("acceptance 8 (original benchmark totals): PASS");
}

/// Criterion 9: whole-suite totals at the full default budget are not
/// asserted anywhere; criteria 1-8 stand in for them.
#[test]
fn acceptance_9_headline_totals_not_reproduced() {
    // 500 original instances x 5 million evaluations each is a cluster-scale
    // budget; nothing here asserts those totals.
    println!(
        "acceptance 9 (headline totals): N/A — substituted by criteria 1-8"
    );
}
