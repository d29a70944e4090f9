//! Integer-programming model of the packing problem and its LP-format export.
//!
//! One binary `alpha_i_k` (for `i >= k`) assigns item `i` to bin `k`, with
//! `alpha_k_k` doubling as the bin-open indicator, so only `(n^2+n)/2`
//! assignment variables exist. Integer coordinates place each item inside its
//! bin, and per item pair `i < j` four binaries choose a separating direction
//! (left, above, right, underneath), enforced through big-M rows that are
//! active only when both items share a bin. Solving the model is out of
//! scope; the export targets external MIP engines.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::model::{Instance, PackingSolution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    Integer { lo: i64, hi: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

/// `coef * variables[var]`, coefficients are integral throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coef: i64,
    pub var: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
}

/// Which model rule a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintFamily {
    /// Every item goes to exactly one bin.
    Assignment,
    /// Items may only enter opened bins.
    OpenBin,
    /// Every pair picks exactly one separating direction.
    Direction,
    /// Big-M row for "i left of j".
    SeparateLeft,
    /// Big-M row for "i above j".
    SeparateAbove,
    /// Big-M row for "i right of j".
    SeparateRight,
    /// Big-M row for "i underneath j".
    SeparateBelow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<Term>,
    pub sense: Sense,
    pub rhs: i64,
    pub family: ConstraintFamily,
}

/// The assembled model for one instance.
#[derive(Debug, Clone)]
pub struct IlpModel {
    n: usize,
    instance_name: String,
    bin_w: i64,
    bin_h: i64,
    variables: Vec<Variable>,
    objective: Vec<Term>,
    constraints: Vec<Constraint>,
    alpha: HashMap<(usize, usize), usize>,
    x: Vec<usize>,
    y: Vec<usize>,
    dir: HashMap<(char, usize, usize), usize>,
}

impl IlpModel {
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn objective(&self) -> &[Term] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn family_count(&self, family: ConstraintFamily) -> usize {
        self.constraints
            .iter()
            .filter(|c| c.family == family)
            .count()
    }

    /// Index of `alpha_i_k`; defined for `k <= i` only.
    pub fn alpha(&self, i: usize, k: usize) -> usize {
        self.alpha[&(i, k)]
    }

    pub fn x_var(&self, i: usize) -> usize {
        self.x[i - 1]
    }

    pub fn y_var(&self, i: usize) -> usize {
        self.y[i - 1]
    }

    /// Index of a direction variable; `which` is one of 'l', 'a', 'r', 'u'.
    pub fn dir_var(&self, which: char, i: usize, j: usize) -> usize {
        self.dir[&(which, i, j)]
    }

    /// Translates a packing into values for every model variable. Bin `b`'s
    /// items are assigned to the model bin indexed by the smallest item id in
    /// `b`; direction variables take the first geometric relation that holds
    /// (any direction for pairs in different bins).
    pub fn assignment_from_packing(
        &self,
        instance: &Instance,
        solution: &PackingSolution,
    ) -> Vec<i64> {
        let mut values = vec![0i64; self.variables.len()];
        let mut bin_anchor: HashMap<usize, usize> = HashMap::new();
        for p in &solution.placements {
            let anchor = bin_anchor.entry(p.bin).or_insert(p.item_id);
            *anchor = (*anchor).min(p.item_id);
        }
        let mut coords: HashMap<usize, (i64, i64, usize)> = HashMap::new();
        for p in &solution.placements {
            values[self.alpha(p.item_id, bin_anchor[&p.bin])] = 1;
            values[self.x_var(p.item_id)] = p.x;
            values[self.y_var(p.item_id)] = p.y;
            coords.insert(p.item_id, (p.x, p.y, p.bin));
        }
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                let (xi, yi, bi) = coords[&i];
                let (xj, yj, bj) = coords[&j];
                let (wi, hi) = {
                    let it = instance.item(i);
                    (it.width, it.height)
                };
                let (wj, hj) = {
                    let it = instance.item(j);
                    (it.width, it.height)
                };
                // different bins leave every row inactive; 'l' is the
                // deterministic filler choice there
                let which = if bi != bj || xi + wi <= xj {
                    'l'
                } else if yi >= yj + hj {
                    'a'
                } else if xi >= xj + wj {
                    'r'
                } else if yi + hi <= yj {
                    'u'
                } else {
                    unreachable!("non-overlapping rectangles always separate")
                };
                values[self.dir_var(which, i, j)] = 1;
            }
        }
        values
    }

    /// Substitutes an assignment into the model: bound, integrality and row
    /// checks. Returns the objective value, or every violated rule.
    pub fn check_assignment(&self, values: &[i64]) -> Result<i64, Vec<String>> {
        let mut violated = Vec::new();
        if values.len() != self.variables.len() {
            return Err(vec![format!(
                "assignment has {} values for {} variables",
                values.len(),
                self.variables.len()
            )]);
        }
        for (idx, var) in self.variables.iter().enumerate() {
            let v = values[idx];
            let ok = match var.kind {
                VarKind::Binary => v == 0 || v == 1,
                VarKind::Integer { lo, hi } => (lo..=hi).contains(&v),
            };
            if !ok {
                violated.push(format!("variable {} = {v} out of domain", var.name));
            }
        }
        for c in &self.constraints {
            let lhs: i64 = c.terms.iter().map(|t| t.coef * values[t.var]).sum();
            let ok = match c.sense {
                Sense::Le => lhs <= c.rhs,
                Sense::Eq => lhs == c.rhs,
            };
            if !ok {
                violated.push(format!(
                    "constraint {}: lhs {lhs} {} rhs {}",
                    c.name,
                    match c.sense {
                        Sense::Le => "must be <=",
                        Sense::Eq => "must equal",
                    },
                    c.rhs
                ));
            }
        }
        if violated.is_empty() {
            Ok(self
                .objective
                .iter()
                .map(|t| t.coef * values[t.var])
                .sum())
        } else {
            Err(violated)
        }
    }
}

/// Builds the model for a validated, non-empty instance.
pub fn build_model(instance: &Instance) -> IlpModel {
    let n = instance.len();
    assert!(n >= 1, "model needs at least one item");
    let (bin_w, bin_h) = (instance.bin_width, instance.bin_height);

    let mut variables = Vec::new();
    let mut alpha = HashMap::new();
    for i in 1..=n {
        for k in 1..=i {
            alpha.insert((i, k), variables.len());
            variables.push(Variable {
                name: format!("alpha_{i}_{k}"),
                kind: VarKind::Binary,
            });
        }
    }
    let mut x = Vec::with_capacity(n);
    for i in 1..=n {
        x.push(variables.len());
        variables.push(Variable {
            name: format!("x_{i}"),
            kind: VarKind::Integer {
                lo: 0,
                hi: bin_w - instance.item(i).width,
            },
        });
    }
    let mut y = Vec::with_capacity(n);
    for i in 1..=n {
        y.push(variables.len());
        variables.push(Variable {
            name: format!("y_{i}"),
            kind: VarKind::Integer {
                lo: 0,
                hi: bin_h - instance.item(i).height,
            },
        });
    }
    let mut dir = HashMap::new();
    for &(which, word) in &[('l', "ul"), ('a', "ua"), ('r', "ur"), ('u', "uu")] {
        for i in 1..=n {
            for j in (i + 1)..=n {
                dir.insert((which, i, j), variables.len());
                variables.push(Variable {
                    name: format!("{word}_{i}_{j}"),
                    kind: VarKind::Binary,
                });
            }
        }
    }

    let objective: Vec<Term> = (1..=n)
        .map(|i| Term {
            coef: 1,
            var: alpha[&(i, i)],
        })
        .collect();

    let mut constraints = Vec::new();
    for i in 1..=n {
        constraints.push(Constraint {
            name: format!("assign_{i}"),
            terms: (1..=i)
                .map(|k| Term {
                    coef: 1,
                    var: alpha[&(i, k)],
                })
                .collect(),
            sense: Sense::Eq,
            rhs: 1,
            family: ConstraintFamily::Assignment,
        });
    }
    for i in 1..=n {
        for k in 1..i {
            constraints.push(Constraint {
                name: format!("open_{i}_{k}"),
                terms: vec![
                    Term { coef: 1, var: alpha[&(i, k)] },
                    Term { coef: -1, var: alpha[&(k, k)] },
                ],
                sense: Sense::Le,
                rhs: 0,
                family: ConstraintFamily::OpenBin,
            });
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            constraints.push(Constraint {
                name: format!("dir_{i}_{j}"),
                terms: "laru"
                    .chars()
                    .map(|c| Term { coef: 1, var: dir[&(c, i, j)] })
                    .collect(),
                sense: Sense::Eq,
                rhs: 1,
                family: ConstraintFamily::Direction,
            });
        }
    }

    // big-M separation rows, one per (i, j, k) with k <= i < j
    let families = [
        ConstraintFamily::SeparateLeft,
        ConstraintFamily::SeparateAbove,
        ConstraintFamily::SeparateRight,
        ConstraintFamily::SeparateBelow,
    ];
    for family in families {
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 1..=i {
                    let (wi, hi) = {
                        let it = instance.item(i);
                        (it.width, it.height)
                    };
                    let (wj, hj) = {
                        let it = instance.item(j);
                        (it.width, it.height)
                    };
                    let both = [
                        Term { coef: bin_w, var: alpha[&(i, k)] },
                        Term { coef: bin_w, var: alpha[&(j, k)] },
                    ];
                    let both_h = [
                        Term { coef: bin_h, var: alpha[&(i, k)] },
                        Term { coef: bin_h, var: alpha[&(j, k)] },
                    ];
                    let (name, terms, rhs) = match family {
                        // x_i + w_i <= x_j + W(3 - ul - a_ik - a_jk)
                        ConstraintFamily::SeparateLeft => (
                            format!("left_{i}_{j}_{k}"),
                            vec![
                                Term { coef: 1, var: x[i - 1] },
                                Term { coef: -1, var: x[j - 1] },
                                Term { coef: bin_w, var: dir[&('l', i, j)] },
                                both[0],
                                both[1],
                            ],
                            3 * bin_w - wi,
                        ),
                        // y_i + H(3 - ua - a_ik - a_jk) >= y_j + h_j
                        ConstraintFamily::SeparateAbove => (
                            format!("above_{i}_{j}_{k}"),
                            vec![
                                Term { coef: -1, var: y[i - 1] },
                                Term { coef: 1, var: y[j - 1] },
                                Term { coef: bin_h, var: dir[&('a', i, j)] },
                                both_h[0],
                                both_h[1],
                            ],
                            3 * bin_h - hj,
                        ),
                        // x_i + W(3 - ur - a_ik - a_jk) >= x_j + w_j
                        ConstraintFamily::SeparateRight => (
                            format!("right_{i}_{j}_{k}"),
                            vec![
                                Term { coef: -1, var: x[i - 1] },
                                Term { coef: 1, var: x[j - 1] },
                                Term { coef: bin_w, var: dir[&('r', i, j)] },
                                both[0],
                                both[1],
                            ],
                            3 * bin_w - wj,
                        ),
                        // y_i + h_i <= y_j + H(3 - uu - a_ik - a_jk)
                        ConstraintFamily::SeparateBelow => (
                            format!("below_{i}_{j}_{k}"),
                            vec![
                                Term { coef: 1, var: y[i - 1] },
                                Term { coef: -1, var: y[j - 1] },
                                Term { coef: bin_h, var: dir[&('u', i, j)] },
                                both_h[0],
                                both_h[1],
                            ],
                            3 * bin_h - hi,
                        ),
                        _ => unreachable!(),
                    };
                    constraints.push(Constraint {
                        name,
                        terms,
                        sense: Sense::Le,
                        rhs,
                        family,
                    });
                }
            }
        }
    }

    IlpModel {
        n,
        instance_name: instance.name.clone(),
        bin_w,
        bin_h,
        variables,
        objective,
        constraints,
        alpha,
        x,
        y,
        dir,
    }
}

fn push_terms(out: &mut String, terms: &[Term], variables: &[Variable]) {
    let mut line_len = out.len() - out.rfind('\n').map_or(0, |p| p + 1);
    for (idx, term) in terms.iter().enumerate() {
        let mut piece = String::new();
        if idx == 0 {
            if term.coef < 0 {
                piece.push_str("- ");
            }
        } else if term.coef < 0 {
            piece.push_str(" - ");
        } else {
            piece.push_str(" + ");
        }
        let mag = term.coef.abs();
        if mag != 1 {
            let _ = write!(piece, "{mag} ");
        }
        piece.push_str(&variables[term.var].name);
        // wrap long rows (large objectives); old LP readers cap line length
        if line_len + piece.len() > 200 {
            out.push_str("\n   ");
            piece = piece.trim_start().to_string();
            line_len = 3;
        }
        line_len += piece.len();
        out.push_str(&piece);
    }
}

/// Renders the model as CPLEX-dialect LP text. Output is byte-identical for
/// identical models.
pub fn export_lp(model: &IlpModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ two-dimensional bin packing model for instance {}",
        model.instance_name
    );
    let _ = writeln!(
        out,
        "\\ n={} items, bin {}x{}",
        model.n, model.bin_w, model.bin_h
    );
    out.push_str("Minimize\n obj: ");
    push_terms(&mut out, &model.objective, &model.variables);
    out.push_str("\nSubject To\n");
    for c in &model.constraints {
        let _ = write!(out, " {}: ", c.name);
        push_terms(&mut out, &c.terms, &model.variables);
        let sense = match c.sense {
            Sense::Le => "<=",
            Sense::Eq => "=",
        };
        let _ = writeln!(out, " {sense} {}", c.rhs);
    }
    out.push_str("Bounds\n");
    for var in &model.variables {
        if let VarKind::Integer { lo, hi } = var.kind {
            let _ = writeln!(out, " {lo} <= {} <= {hi}", var.name);
        }
    }
    out.push_str("Generals\n");
    for var in &model.variables {
        if matches!(var.kind, VarKind::Integer { .. }) {
            let _ = writeln!(out, " {}", var.name);
        }
    }
    out.push_str("Binaries\n");
    for var in &model.variables {
        if matches!(var.kind, VarKind::Binary) {
            let _ = writeln!(out, " {}", var.name);
        }
    }
    out.push_str("End\n");
    out
}

/// Writes the LP text to a file.
pub fn write_lp(model: &IlpModel, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, export_lp(model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lgfi::{pack, preprocess_sort};
    use crate::rng::RandomStream;

    fn six_item_demo() -> Instance {
        Instance::from_dims(
            "demo6",
            6,
            6,
            &[(3, 3), (2, 4), (3, 2), (1, 4), (2, 2), (2, 1)],
        )
    }

    fn expected_counts(n: usize) -> (usize, [usize; 7]) {
        // enumerate the index sets rather than trusting closed forms
        let mut alpha = 0;
        for i in 1..=n {
            for _k in 1..=i {
                alpha += 1;
            }
        }
        let mut pairs = 0;
        let mut triples = 0;
        for i in 1..=n {
            for _j in (i + 1)..=n {
                pairs += 1;
                triples += i;
            }
        }
        let vars = alpha + 2 * n + 4 * pairs;
        (
            vars,
            [n, alpha - n, pairs, triples, triples, triples, triples],
        )
    }

    #[test]
    fn demo_model_has_the_documented_shape() {
        let model = build_model(&six_item_demo());
        let (vars, counts) = expected_counts(6);
        assert_eq!(vars, 93);
        assert_eq!(model.variables().len(), 93);
        assert_eq!(counts, [6, 15, 15, 35, 35, 35, 35]);
        use ConstraintFamily::*;
        for (family, expected) in [
            (Assignment, counts[0]),
            (OpenBin, counts[1]),
            (Direction, counts[2]),
            (SeparateLeft, counts[3]),
            (SeparateAbove, counts[4]),
            (SeparateRight, counts[5]),
            (SeparateBelow, counts[6]),
        ] {
            assert_eq!(model.family_count(family), expected, "{family:?}");
        }
    }

    #[test]
    fn counts_match_enumeration_for_all_small_sizes() {
        for n in 1..=10 {
            let dims: Vec<(i64, i64)> = (0..n).map(|i| (1 + i as i64 % 3, 1)).collect();
            let inst = Instance::from_dims("count", 10, 10, &dims);
            let model = build_model(&inst);
            let (vars, counts) = expected_counts(n);
            assert_eq!(model.variables().len(), vars);
            assert_eq!(model.constraints().len(), counts.iter().sum::<usize>());
        }
    }

    #[test]
    fn single_item_model_is_minimal() {
        let inst = Instance::from_dims("one", 8, 5, &[(3, 2)]);
        let model = build_model(&inst);
        assert_eq!(model.variables().len(), 3);
        assert_eq!(model.constraints().len(), 1);
        let c = &model.constraints()[0];
        assert_eq!(c.name, "assign_1");
        assert_eq!(c.sense, Sense::Eq);
        // alpha_1_1 = 1 forces the objective to 1
        let values = vec![1, 0, 0];
        assert_eq!(model.check_assignment(&values), Ok(1));
        let lp = export_lp(&model);
        assert!(lp.contains("obj: alpha_1_1"));
        assert!(lp.contains(" 0 <= x_1 <= 5"));
        assert!(lp.contains(" 0 <= y_1 <= 3"));
    }

    #[test]
    fn demo_packing_satisfies_the_model() {
        let inst = six_item_demo();
        let model = build_model(&inst);
        let sol = pack(&inst, &preprocess_sort(&inst));
        let values = model.assignment_from_packing(&inst, &sol);
        assert_eq!(model.check_assignment(&values), Ok(1));
    }

    #[test]
    fn corrupted_assignment_is_rejected() {
        let inst = six_item_demo();
        let model = build_model(&inst);
        let sol = pack(&inst, &preprocess_sort(&inst));
        let mut values = model.assignment_from_packing(&inst, &sol);
        // drop item 3 on top of item 1
        values[model.x_var(3)] = 0;
        values[model.y_var(3)] = 0;
        assert!(model.check_assignment(&values).is_err());
    }

    #[test]
    fn random_packings_satisfy_their_models() {
        let mut rng = RandomStream::new(555);
        for _ in 0..40 {
            let n = 2 + rng.below(5) as usize;
            let bin = rng.int_in(5, 12);
            let dims: Vec<(i64, i64)> = (0..n)
                .map(|_| (rng.int_in(1, bin), rng.int_in(1, bin)))
                .collect();
            let inst = Instance::from_dims("rnd", bin, bin, &dims);
            let model = build_model(&inst);
            let sol = pack(&inst, &preprocess_sort(&inst));
            let values = model.assignment_from_packing(&inst, &sol);
            let objective = model.check_assignment(&values).unwrap_or_else(|v| {
                panic!("violations for {inst:?}: {v:?}");
            });
            assert_eq!(objective, sol.bins_used as i64);
        }
    }

    #[test]
    fn export_is_deterministic() {
        let inst = six_item_demo();
        let a = export_lp(&build_model(&inst));
        let b = export_lp(&build_model(&inst));
        assert_eq!(a, b);
    }

    /// Minimal LP-format reader used as an independent check of the export:
    /// splits sections, parses every constraint row into (name, terms, sense,
    /// rhs) and collects declared variable names.
    mod lp_reader {
        use std::collections::HashSet;

        pub struct LpFile {
            pub objective_terms: usize,
            pub constraints: Vec<(String, Vec<(i64, String)>, String, i64)>,
            pub bounds: usize,
            pub declared: HashSet<String>,
        }

        fn parse_terms(expr: &str) -> Vec<(i64, String)> {
            let mut terms = Vec::new();
            let mut sign = 1i64;
            let mut coef: Option<i64> = None;
            for token in expr.split_whitespace() {
                match token {
                    "+" => sign = 1,
                    "-" => sign = -1,
                    t => {
                        if let Ok(v) = t.parse::<i64>() {
                            coef = Some(v);
                        } else {
                            terms.push((sign * coef.take().unwrap_or(1), t.to_string()));
                            sign = 1;
                        }
                    }
                }
            }
            terms
        }

        pub fn parse(text: &str) -> Result<LpFile, String> {
            let mut section = String::new();
            let mut objective = String::new();
            let mut constraint_lines: Vec<String> = Vec::new();
            let mut bounds = 0;
            let mut declared = HashSet::new();
            for raw in text.lines() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('\\') {
                    continue;
                }
                match line {
                    "Minimize" | "Subject To" | "Bounds" | "Generals" | "Binaries" | "End" => {
                        section = line.to_string();
                        continue;
                    }
                    _ => {}
                }
                match section.as_str() {
                    "Minimize" => objective.push_str(&format!(" {line}")),
                    "Subject To" => {
                        if line.contains(':') {
                            constraint_lines.push(line.to_string());
                        } else {
                            // continuation of a wrapped row
                            let last = constraint_lines
                                .last_mut()
                                .ok_or("continuation before any constraint")?;
                            last.push(' ');
                            last.push_str(line);
                        }
                    }
                    "Bounds" => bounds += 1,
                    "Generals" | "Binaries" => {
                        if !declared.insert(line.to_string()) {
                            return Err(format!("variable {line} declared twice"));
                        }
                    }
                    other => return Err(format!("line {line:?} outside any section ({other:?})")),
                }
            }
            let objective_terms = parse_terms(objective.split(':').nth(1).ok_or("no objective")?)
                .len();
            let mut constraints = Vec::new();
            for line in constraint_lines {
                let (name, rest) = line.split_once(':').ok_or("constraint without name")?;
                let (sense, pos) = if let Some(pos) = rest.find("<=") {
                    ("<=", pos)
                } else if let Some(pos) = rest.find(">=") {
                    (">=", pos)
                } else if let Some(pos) = rest.find('=') {
                    ("=", pos)
                } else {
                    return Err(format!("constraint {name} has no relation"));
                };
                let lhs = &rest[..pos];
                let rhs: i64 = rest[pos + sense.len()..]
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad rhs in {name}"))?;
                constraints.push((
                    name.trim().to_string(),
                    parse_terms(lhs),
                    sense.to_string(),
                    rhs,
                ));
            }
            Ok(LpFile {
                objective_terms,
                constraints,
                bounds,
                declared,
            })
        }
    }

    #[test]
    fn export_round_trips_through_an_independent_reader() {
        let inst = six_item_demo();
        let model = build_model(&inst);
        let parsed = lp_reader::parse(&export_lp(&model)).expect("export parses");

        assert_eq!(parsed.declared.len(), 93);
        assert_eq!(parsed.objective_terms, 6);
        assert_eq!(parsed.constraints.len(), model.constraints().len());
        assert_eq!(parsed.bounds, 12);

        // every referenced variable is declared, and each parsed row matches
        // the model row of the same name
        for (name, terms, sense, rhs) in &parsed.constraints {
            for (_, var) in terms {
                assert!(parsed.declared.contains(var), "{var} undeclared");
            }
            let row = model
                .constraints()
                .iter()
                .find(|c| c.name == *name)
                .unwrap_or_else(|| panic!("unknown constraint {name}"));
            assert_eq!(*rhs, row.rhs, "{name}");
            let expected_sense = match row.sense {
                Sense::Le => "<=",
                Sense::Eq => "=",
            };
            assert_eq!(sense, expected_sense, "{name}");
            let expected_terms: Vec<(i64, String)> = row
                .terms
                .iter()
                .map(|t| (t.coef, model.variables()[t.var].name.clone()))
                .collect();
            assert_eq!(*terms, expected_terms, "{name}");
        }
    }

    #[test]
    fn export_sections_are_ordered() {
        let lp = export_lp(&build_model(&six_item_demo()));
        let pos = |needle: &str| lp.find(needle).unwrap_or_else(|| panic!("missing {needle}"));
        assert!(pos("Minimize") < pos("Subject To"));
        assert!(pos("Subject To") < pos("Bounds"));
        assert!(pos("Bounds") < pos("Generals"));
        assert!(pos("Generals") < pos("Binaries"));
        assert!(pos("Binaries") < pos("End"));
        assert!(lp.contains("left_1_2_1:"));
    }
}
