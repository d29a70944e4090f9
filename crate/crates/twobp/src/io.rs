//! Text formats: the canonical instance format, the solution format, and a
//! tolerant importer for third-party benchmark files.
//!
//! Canonical instance format, line by line: the item count `n`, the bin `W H`,
//! then `n` lines `w h`. Blank lines and `#` comments are allowed anywhere.
//! The solution format holds one `item_id bin x y` line per item followed by
//! `W bin x y w h` lines for declared wastage.

use std::fmt;

use crate::model::{Instance, Item, PackingSolution, Placement, WastageRect};

/// A parse failure naming the offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Significant lines (1-based numbers attached), with comments and blank
/// lines dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim();
        (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some((idx + 1, trimmed))
    })
}

fn parse_ints(line_no: usize, line: &str, expected: usize) -> Result<Vec<i64>, ParseError> {
    let values: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
    let values = values
        .map_err(|_| ParseError::new(line_no, format!("expected integers, got {line:?}")))?;
    if values.len() != expected {
        return Err(ParseError::new(
            line_no,
            format!("expected {expected} integers, got {}", values.len()),
        ));
    }
    Ok(values)
}

/// Renders an instance in the canonical format.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = format!(
        "# instance: {}\n{}\n{} {}\n",
        instance.name,
        instance.len(),
        instance.bin_width,
        instance.bin_height
    );
    for item in &instance.items {
        out.push_str(&format!("{} {}\n", item.width, item.height));
    }
    out
}

/// Parses the canonical instance format; `name` labels the result (callers
/// usually pass the file stem).
pub fn read_instance(text: &str, name: &str) -> Result<Instance, ParseError> {
    let mut lines = significant_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing item count"))?;
    let n = parse_ints(line_no, header, 1)?[0];
    if n < 0 {
        return Err(ParseError::new(line_no, "item count must be non-negative"));
    }
    let n = n as usize;
    let (line_no, bin_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(line_no, "missing bin dimensions"))?;
    let bin = parse_ints(line_no, bin_line, 2)?;
    let mut items = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, item_line) in lines {
        if items.len() == n {
            return Err(ParseError::new(
                line_no,
                format!("count mismatch: {n} items declared but more lines follow"),
            ));
        }
        let dims = parse_ints(line_no, item_line, 2)?;
        items.push(Item::new(items.len() + 1, dims[0], dims[1]));
        last_line = line_no;
    }
    if items.len() != n {
        return Err(ParseError::new(
            last_line,
            format!("count mismatch: {n} items declared, {} found", items.len()),
        ));
    }
    Ok(Instance::new(name, bin[0], bin[1], items))
}

/// Renders a packing in the solution format: placements sorted by item id,
/// then the wastage rectangles.
pub fn write_solution(solution: &PackingSolution) -> String {
    let mut out = String::from("# item_id bin x y / W bin x y w h\n");
    let mut placements = solution.placements.clone();
    placements.sort_by_key(|p| p.item_id);
    for p in &placements {
        out.push_str(&format!("{} {} {} {}\n", p.item_id, p.bin, p.x, p.y));
    }
    for w in &solution.wastage {
        out.push_str(&format!(
            "W {} {} {} {} {}\n",
            w.bin, w.x, w.y, w.width, w.height
        ));
    }
    out
}

/// Parses the solution format against its instance, recomputing the summary
/// fields.
pub fn read_solution(text: &str, instance: &Instance) -> Result<PackingSolution, ParseError> {
    let mut placements = Vec::new();
    let mut wastage = Vec::new();
    for (line_no, line) in significant_lines(text) {
        if let Some(rest) = line.strip_prefix("W ") {
            let v = parse_ints(line_no, rest, 5)?;
            if v[0] < 0 {
                return Err(ParseError::new(line_no, "negative bin index"));
            }
            wastage.push(WastageRect {
                bin: v[0] as usize,
                x: v[1],
                y: v[2],
                width: v[3],
                height: v[4],
            });
        } else {
            let v = parse_ints(line_no, line, 4)?;
            if v[0] < 1 || v[1] < 0 {
                return Err(ParseError::new(line_no, "bad item id or bin index"));
            }
            placements.push(Placement {
                item_id: v[0] as usize,
                bin: v[1] as usize,
                x: v[2],
                y: v[3],
            });
        }
    }
    Ok(PackingSolution::new(instance, placements, wastage))
}

/// Best-effort importer for benchmark files in foreign layouts.
///
/// Lines whose tokens are not all integers are treated as labels and skipped;
/// the remaining number stream is read as consecutive instances. Two header
/// layouts are tried, each with both item-dimension orders:
///
/// 1. `n, W, H`, then `n` pairs
/// 2. `n, <relative id>, <absolute id>, W, H`, then `n` pairs
///
/// An interpretation is accepted when every item fits the bin; width-first
/// pairs win ties. This mapping is not normative. If a file resists, convert
/// it by hand into the canonical format (`n`, then `W H`, then `w h` lines).
pub fn import_tolerant(text: &str, name_prefix: &str) -> Result<Vec<Instance>, ParseError> {
    let mut stream: Vec<(usize, i64)> = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let parsed: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
        if let Ok(values) = parsed {
            stream.extend(values.into_iter().map(|v| (line_no, v)));
        }
    }
    if stream.is_empty() {
        return Err(ParseError::new(1, "no numeric data found"));
    }

    let mut instances = Vec::new();
    let mut pos = 0;
    while pos < stream.len() {
        let (line_no, n) = stream[pos];
        if !(1..=10_000).contains(&n) {
            return Err(ParseError::new(
                line_no,
                format!("implausible item count {n}"),
            ));
        }
        let n = n as usize;
        let mut accepted = None;
        for header_len in [2usize, 4] {
            let header_at = pos + 1;
            let items_at = header_at + header_len;
            if items_at + 2 * n > stream.len() {
                continue;
            }
            // the bin is in the last two header slots
            let bin_a = stream[header_at + header_len - 2].1;
            let bin_b = stream[header_at + header_len - 1].1;
            if bin_a < 1 || bin_b < 1 {
                continue;
            }
            for swap_dims in [false, true] {
                let mut items = Vec::with_capacity(n);
                let mut ok = true;
                for i in 0..n {
                    let a = stream[items_at + 2 * i].1;
                    let b = stream[items_at + 2 * i + 1].1;
                    let (w, h) = if swap_dims { (b, a) } else { (a, b) };
                    if w < 1 || h < 1 || w > bin_a || h > bin_b {
                        ok = false;
                        break;
                    }
                    items.push(Item::new(i + 1, w, h));
                }
                if ok {
                    accepted = Some((items_at + 2 * n, bin_a, bin_b, items));
                    break;
                }
            }
            if accepted.is_some() {
                break;
            }
        }
        let Some((next_pos, bin_w, bin_h, items)) = accepted else {
            return Err(ParseError::new(
                line_no,
                "no known layout fits this block; convert it to the canonical format by hand",
            ));
        };
        let name = format!("{name_prefix}_{:03}", instances.len() + 1);
        instances.push(Instance::new(name, bin_w, bin_h, items));
        pos = next_pos;
    }
    if instances.len() == 1 {
        instances[0].name = name_prefix.to_string();
    }
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lgfi::{pack, preprocess_sort};
    use crate::model::{validate_instance, validate_solution};

    const DEMO_TEXT: &str = "# six items\n6\n6 6\n3 3\n2 4\n3 2\n1 4\n2 2\n2 1\n";

    #[test]
    fn canonical_text_parses() {
        let inst = read_instance(DEMO_TEXT, "demo6").unwrap();
        assert_eq!(inst.len(), 6);
        assert_eq!((inst.bin_width, inst.bin_height), (6, 6));
        assert_eq!(inst.item(4).width, 1);
        assert!(validate_instance(&inst).is_ok());
    }

    #[test]
    fn round_trip_is_identity() {
        let inst = read_instance(DEMO_TEXT, "demo6").unwrap();
        let again = read_instance(&write_instance(&inst), "demo6").unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn count_mismatch_is_reported_with_line() {
        let text = "5\n6 6\n3 3\n2 4\n3 2\n1 4\n2 2\n2 1\n";
        let err = read_instance(text, "bad").unwrap_err();
        assert!(err.message.contains("count mismatch"), "{err}");
        let short = "6\n6 6\n3 3\n";
        let err = read_instance(short, "bad").unwrap_err();
        assert!(err.message.contains("count mismatch"), "{err}");
        assert_eq!(err.line, 3);
    }

    #[test]
    fn garbage_tokens_are_reported_with_line() {
        let err = read_instance("2\n6 six\n1 1\n1 1\n", "bad").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("expected integers"));
    }

    #[test]
    fn solution_round_trip_revalidates() {
        let inst = read_instance(DEMO_TEXT, "demo6").unwrap();
        let sol = pack(&inst, &preprocess_sort(&inst));
        let text = write_solution(&sol);
        let parsed = read_solution(&text, &inst).unwrap();
        assert!(validate_solution(&inst, &parsed).is_ok());
        assert_eq!(parsed.fitness(), sol.fitness());
        assert_eq!(parsed.wastage, sol.wastage);
    }

    #[test]
    fn tolerant_import_reads_plain_layout() {
        let text = "6\n6 6\n3 3\n2 4\n3 2\n1 4\n2 2\n2 1\n";
        let got = import_tolerant(text, "plain").unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].name, "plain");
        assert_eq!(got[0].len(), 6);
    }

    #[test]
    fn tolerant_import_reads_labeled_multi_instance_files() {
        let text = "\
 PROBLEM CLASS 1
 2
 1 1
 10 10
 3 4
 5 6
 2
 2 2
 10 10
 10 1
 1 10
";
        let got = import_tolerant(text, "cls01").unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].name, "cls01_001");
        assert_eq!(got[0].items[0], Item::new(1, 3, 4));
        assert_eq!(got[1].items[1], Item::new(2, 1, 10));
        for inst in &got {
            assert!(validate_instance(inst).is_ok());
        }
    }

    #[test]
    fn tolerant_import_swaps_dimensions_when_needed() {
        // items only fit the 4x20 bin with the pair order flipped
        let text = "2\n4 20\n15 2\n18 3\n";
        let got = import_tolerant(text, "swap").unwrap();
        assert_eq!(got[0].items[0], Item::new(1, 2, 15));
        assert_eq!(got[0].items[1], Item::new(2, 3, 18));
    }

    #[test]
    fn tolerant_import_rejects_nonsense() {
        assert!(import_tolerant("only words here", "x").is_err());
        let err = import_tolerant("3\n5 5\n6 6\n", "x").unwrap_err();
        assert!(err.message.contains("no known layout"));
    }

    mod properties {
        use super::*;
        use crate::generator::generate_instance;
        use crate::rng::RandomStream;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn generated_instances_round_trip(class in 1u8..=10, seed in 0u64..200) {
                let mut rng = RandomStream::new(seed);
                let inst = generate_instance(class, 12, &mut rng);
                let again = read_instance(&write_instance(&inst), &inst.name).unwrap();
                prop_assert_eq!(inst, again);
            }

            #[test]
            fn packed_solutions_round_trip(seed in 0u64..200) {
                let mut rng = RandomStream::new(seed);
                let inst = generate_instance(5, 10, &mut rng);
                let sol = pack(&inst, &preprocess_sort(&inst));
                let parsed = read_solution(&write_solution(&sol), &inst).unwrap();
                prop_assert!(validate_solution(&inst, &parsed).is_ok());
                prop_assert_eq!(parsed.fitness(), sol.fitness());
            }
        }
    }
}
