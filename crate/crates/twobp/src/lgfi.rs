//! The deterministic one-pass packing heuristic: a preprocessing sort plus a
//! skyline packing stage driven by gap filling.
//!
//! The packing stage repeatedly looks at the current position of the open
//! bin's frontier. Scanning the unpacked items in sequence order, it first
//! tries an item that fills the current gap exactly, then any item that fits;
//! if neither exists the gap is written off as wastage. A new bin is opened
//! only when the frontier reaches the ceiling with items still unpacked.

use crate::model::{is_permutation, Instance, PackingSolution, Placement, Sequence, WastageRect};
use crate::skyline::Skyline;

/// What happened at one step of the packing stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// An item was placed; `gap_filled` is true when it was selected for
    /// filling the current gap exactly (pass 1) rather than merely fitting.
    Placed { item_id: usize, gap_filled: bool },
    /// No unpacked item fits; the gap was declared wastage.
    Wastage { width: i64, height: i64 },
}

/// One step of the packing stage: the current position, its gaps, and the
/// decision taken there. Diagnostic output for walkthroughs and golden tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub bin: usize,
    pub x: i64,
    pub y: i64,
    pub hgap: i64,
    pub vgap: i64,
    pub decision: Decision,
}

/// The preprocessing stage: items sorted by non-increasing area, ties broken
/// by non-increasing |height - width|, remaining ties by ascending id.
pub fn preprocess_sort(instance: &Instance) -> Sequence {
    let mut ids: Vec<usize> = instance.items.iter().map(|it| it.id).collect();
    ids.sort_by(|&a, &b| {
        let ia = instance.item(a);
        let ib = instance.item(b);
        ib.area()
            .cmp(&ia.area())
            .then((ib.height - ib.width).abs().cmp(&(ia.height - ia.width).abs()))
            .then(a.cmp(&b))
    });
    Sequence::new(ids)
}

/// Packs the items in the given sequence order. Deterministic; counts as one
/// solution evaluation.
///
/// Panics if `sequence` is not a permutation of the instance's item ids.
pub fn pack(instance: &Instance, sequence: &Sequence) -> PackingSolution {
    pack_with_trace(instance, sequence).0
}

/// Like [`pack`], also returning the per-step trace of the packing stage.
pub fn pack_with_trace(instance: &Instance, sequence: &Sequence) -> (PackingSolution, Vec<TraceStep>) {
    assert!(
        sequence.len() == instance.len() && is_permutation(sequence.order()),
        "sequence is not a permutation of the instance's item ids"
    );

    let n = instance.len();
    let mut dims = vec![(0i64, 0i64); n + 1];
    for item in &instance.items {
        dims[item.id] = (item.width, item.height);
    }

    let mut unpacked: Vec<usize> = sequence.order().to_vec();
    let mut placements = Vec::with_capacity(n);
    let mut wastage = Vec::new();
    let mut trace = Vec::new();

    if n > 0 {
        let bin_h = instance.bin_height;
        let mut bin = 0usize;
        let mut sky = Skyline::new(instance.bin_width, bin_h);
        while !unpacked.is_empty() {
            let gap = match sky.current_position() {
                Some(gap) => gap,
                None => {
                    bin += 1;
                    sky = Skyline::new(instance.bin_width, bin_h);
                    continue;
                }
            };
            let current = gap.current_gap();
            let horizontal = gap.is_horizontal();
            let fits = |id: usize| {
                let (w, h) = dims[id];
                w <= gap.hgap && gap.y + h <= bin_h
            };
            // pass 1: exact fill of the current gap; pass 2: first fit
            let pass1 = unpacked.iter().position(|&id| {
                let (w, h) = dims[id];
                let gap_side = if horizontal { w } else { h };
                gap_side == current && fits(id)
            });
            let pick = pass1.or_else(|| unpacked.iter().position(|&id| fits(id)));
            let decision = match pick {
                Some(pos) => {
                    let id = unpacked.remove(pos);
                    let (w, h) = dims[id];
                    let (x, y) = sky.place_at_current(w, h);
                    placements.push(Placement {
                        item_id: id,
                        bin,
                        x,
                        y,
                    });
                    Decision::Placed {
                        item_id: id,
                        gap_filled: pass1.is_some(),
                    }
                }
                None => {
                    let (x, y, w, h) = sky.declare_wastage();
                    wastage.push(WastageRect {
                        bin,
                        x,
                        y,
                        width: w,
                        height: h,
                    });
                    Decision::Wastage {
                        width: w,
                        height: h,
                    }
                }
            };
            trace.push(TraceStep {
                bin,
                x: gap.x,
                y: gap.y,
                hgap: gap.hgap,
                vgap: gap.vgap,
                decision,
            });
        }
    }

    (
        PackingSolution::new(instance, placements, wastage),
        trace,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{validate_solution, Fitness, Instance};

    fn six_item_demo() -> Instance {
        Instance::from_dims(
            "demo6",
            6,
            6,
            &[(3, 3), (2, 4), (3, 2), (1, 4), (2, 2), (2, 1)],
        )
    }

    #[test]
    fn sort_orders_by_area_then_squareness_then_id() {
        let seq = preprocess_sort(&six_item_demo());
        assert_eq!(seq.order(), [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn sort_falls_back_to_id_on_full_ties() {
        let inst = Instance::from_dims("ties", 6, 6, &[(2, 2), (2, 2), (2, 2)]);
        assert_eq!(preprocess_sort(&inst).order(), [1, 2, 3]);
    }

    #[test]
    fn sort_breaks_equal_areas_by_aspect() {
        let inst = Instance::from_dims("aspect", 6, 6, &[(1, 6), (6, 1), (2, 3)]);
        assert_eq!(preprocess_sort(&inst).order(), [1, 2, 3]);
    }

    #[test]
    fn demo_walkthrough_packs_one_bin() {
        let inst = six_item_demo();
        let seq = preprocess_sort(&inst);
        let (sol, trace) = pack_with_trace(&inst, &seq);

        let expected = [
            (1, 0, 0),
            (3, 3, 0),
            (2, 3, 2),
            (4, 5, 2),
            (5, 0, 3),
            (6, 0, 5),
        ];
        assert_eq!(sol.bins_used, 1);
        assert_eq!(sol.placements.len(), 6);
        for (id, x, y) in expected {
            let p = sol.placements.iter().find(|p| p.item_id == id).unwrap();
            assert_eq!((p.bin, p.x, p.y), (0, x, y), "item {id}");
        }
        assert_eq!(sol.wastage.len(), 1);
        let w = sol.wastage[0];
        assert_eq!((w.bin, w.x, w.y, w.width, w.height), (0, 2, 3, 1, 2));
        assert_eq!(sol.fitness(), Fitness::new(1, 33));

        // the step-by-step gap readings
        let gaps: Vec<(i64, i64, i64, i64)> =
            trace.iter().map(|s| (s.x, s.y, s.hgap, s.vgap)).collect();
        assert_eq!(
            gaps,
            [
                (0, 0, 6, 6),
                (3, 0, 3, 6),
                (3, 2, 3, 4),
                (5, 2, 1, 4),
                (0, 3, 3, 3),
                (2, 3, 1, 3),
                (0, 5, 3, 1),
            ]
        );
        assert_eq!(
            trace[3].decision,
            Decision::Placed {
                item_id: 4,
                gap_filled: true
            }
        );
        assert_eq!(trace[5].decision, Decision::Wastage { width: 1, height: 2 });
        assert_eq!(
            trace[6].decision,
            Decision::Placed {
                item_id: 6,
                gap_filled: true
            }
        );
    }

    #[test]
    fn single_full_size_item() {
        let inst = Instance::from_dims("one", 8, 5, &[(8, 5)]);
        let sol = pack(&inst, &preprocess_sort(&inst));
        assert_eq!(sol.bins_used, 1);
        assert_eq!(sol.placements, [Placement { item_id: 1, bin: 0, x: 0, y: 0 }]);
        assert!(sol.wastage.is_empty());
    }

    #[test]
    fn full_size_items_take_one_bin_each() {
        let inst = Instance::from_dims("full", 4, 7, &[(4, 7); 5]);
        let sol = pack(&inst, &preprocess_sort(&inst));
        assert_eq!(sol.bins_used, 5);
        let mut bins: Vec<usize> = sol.placements.iter().map(|p| p.bin).collect();
        bins.sort_unstable();
        assert_eq!(bins, [0, 1, 2, 3, 4]);
    }

    #[test]
    fn empty_instance_packs_nothing() {
        let inst = Instance::from_dims("empty", 6, 6, &[]);
        let sol = pack(&inst, &Sequence::new(vec![]));
        assert_eq!(sol.bins_used, 0);
        assert!(sol.placements.is_empty());
    }

    #[test]
    #[should_panic(expected = "not a permutation")]
    fn rejects_foreign_sequences() {
        let inst = six_item_demo();
        pack(&inst, &Sequence::new(vec![1, 2, 3]));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arbitrary_instance() -> impl Strategy<Value = Instance> {
            (2i64..=14, 2i64..=14)
                .prop_flat_map(|(w, h)| {
                    let items = proptest::collection::vec((1..=w, 1..=h), 1..25);
                    (Just(w), Just(h), items)
                })
                .prop_map(|(w, h, dims)| Instance::from_dims("prop", w, h, &dims))
        }

        proptest! {
            #[test]
            fn packings_are_always_valid(inst in arbitrary_instance()) {
                let seq = preprocess_sort(&inst);
                let sol = pack(&inst, &seq);
                let report = validate_solution(&inst, &sol);
                prop_assert!(report.is_ok(), "violations: {report}");
            }

            #[test]
            fn packing_is_deterministic(inst in arbitrary_instance()) {
                let seq = preprocess_sort(&inst);
                prop_assert_eq!(pack(&inst, &seq), pack(&inst, &seq));
            }

            #[test]
            fn bin_count_respects_the_area_bound(inst in arbitrary_instance()) {
                let sol = pack(&inst, &preprocess_sort(&inst));
                let bound = (inst.total_item_area() + inst.bin_area() - 1) / inst.bin_area();
                prop_assert!((sol.bins_used as i64) >= bound);
            }

            #[test]
            fn gap_fill_picks_match_the_current_gap(inst in arbitrary_instance()) {
                let seq = preprocess_sort(&inst);
                let (_, trace) = pack_with_trace(&inst, &seq);
                for step in trace {
                    if let Decision::Placed { item_id, gap_filled: true } = step.decision {
                        let item = inst.item(item_id);
                        let horizontal = step.hgap <= step.vgap;
                        let gap_side = if horizontal { item.width } else { item.height };
                        prop_assert_eq!(gap_side, step.hgap.min(step.vgap));
                    }
                }
            }
        }
    }
}
