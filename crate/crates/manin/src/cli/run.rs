//! Command execution: every command returns a [`CommandOutcome`] holding
//! the human-readable text, the machine-readable JSON report, and the
//! process exit code (0 exactly when every clause passed, 1 otherwise;
//! argument and input-file errors exit with 2 before reaching here).

use crate::cli::input::{canonical_json, from_flag_case, InputSpec};
use crate::doublepoisson::{bivector_at, DoubleVariant};
use crate::error::{Error, Result};
use crate::exactlin::{format_rat, Mat};
use crate::flagapps::{minimal_coset_reps, run_flag_suite, CaseKind, FlagCase, SuiteOpts};
use crate::groupgeom::GroupPoint;
use crate::maningen::{build_rmatrix, schouten_square, three_tensor_is_ad_invariant};
use crate::report::CheckReport;
use crate::splitcheck::{check_weak_splitting, verify_section_with_samples};
use serde_json::{json, Map, Value};

/// What a command produced: text for people, JSON for machines, and the
/// exit code.
#[derive(Clone, Debug)]
pub struct CommandOutcome {
    pub human: String,
    pub json: Value,
    pub exit_code: i32,
}

fn variant_name(variant: DoubleVariant) -> &'static str {
    match variant {
        DoubleVariant::Drinfeld => "drinfeld",
        DoubleVariant::Heisenberg => "heisenberg",
    }
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|r| Value::String(format_rat(r))).collect()))
            .collect(),
    )
}

fn render_mat(m: &Mat) -> String {
    (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(format_rat).collect();
            format!("  [ {} ]", cells.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Wrap a report (plus optional command-specific payload) into the
/// uniform outcome envelope.
fn finish(command: &str, report: &CheckReport, data: Value, human_prefix: String) -> CommandOutcome {
    let verdict = report.verdict();
    let clauses: Vec<Value> = report
        .clauses
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "pass": c.pass,
                "witness": c.witness,
            })
        })
        .collect();
    let json = json!({
        "schema_version": 1,
        "command": command,
        "verdict": if verdict { "pass" } else { "fail" },
        "clauses": clauses,
        "data": data,
    });
    let mut human = human_prefix;
    if !human.is_empty() && !human.ends_with('\n') {
        human.push('\n');
    }
    human.push_str(&report.render());
    human.push_str(&format!("\nVERDICT: {}\n", if verdict { "pass" } else { "fail" }));
    CommandOutcome { human, json, exit_code: if verdict { 0 } else { 1 } }
}

/// `validate`: Lie structure, invariant form, and Manin-triple axioms.
pub fn cmd_validate(spec: &InputSpec) -> Result<CommandOutcome> {
    let report = spec.validation_report()?;
    Ok(finish("validate", &report, Value::Null, String::new()))
}

/// `rmatrix`: construct the canonical r-matrix of the triple and check
/// that the Schouten square of its tensor is ad-invariant.
pub fn cmd_rmatrix(spec: &InputSpec) -> Result<CommandOutcome> {
    let triple = spec.build_triple()?;
    let rm = build_rmatrix(&triple)?;
    let mut report = CheckReport::new();
    report.pass("dual_bases_cross_checked");
    let square = schouten_square(triple.alg(), &rm.r_tensor());
    report.record(
        "schouten_square_ad_invariant",
        three_tensor_is_ad_invariant(triple.alg(), &square),
        || "the Schouten square [r, r] is not ad-invariant".into(),
    );
    let data = json!({
        "coefficients": mat_json(rm.coeff()),
        "r_tensor": mat_json(&rm.r_tensor()),
    });
    let human = format!("r-matrix tensor (doubled coefficients shown halved):\n{}\n", render_mat(&rm.r_tensor()));
    Ok(finish("rmatrix", &report, data, human))
}

/// `bivector-at`: evaluate the double Poisson bivector at the base point
/// of one section, in that section's variant.
pub fn cmd_bivector_at(spec: &InputSpec, section: usize) -> Result<CommandOutcome> {
    let s = spec.sections.get(section).ok_or_else(|| Error::Spec {
        pointer: format!("/sections/{section}"),
        message: "no such section".into(),
    })?;
    let triple = spec.build_triple()?;
    let rep = spec.build_rep(triple.alg())?;
    let point = GroupPoint::new(rep, s.d.clone())?;
    let rm = build_rmatrix(&triple)?;
    let bv = bivector_at(&triple, &rm, &point, s.variant)?;
    let mut report = CheckReport::new();
    report.pass("sharp_routes_cross_checked");
    let is_zero = bv.tensor().is_zero();
    let data = json!({
        "section": s.label,
        "variant": variant_name(s.variant),
        "tensor": mat_json(bv.tensor()),
        "is_zero": is_zero,
    });
    let human = format!(
        "{} bivector at section {:?} base point{}:\n{}\n",
        variant_name(s.variant),
        s.label,
        if is_zero { " (zero)" } else { "" },
        render_mat(bv.tensor()),
    );
    Ok(finish("bivector-at", &report, data, human))
}

/// `check-section`: section conditions plus weak-section verification at
/// the identity and at sampled orbit points, for one or all sections.
pub fn cmd_check_section(
    spec: &InputSpec,
    section: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<CommandOutcome> {
    let ctx = spec.build_ctx()?;
    let sections = spec.build_sections(&ctx)?;
    if let Some(i) = section {
        if i >= sections.len() {
            return Err(Error::Spec {
                pointer: format!("/sections/{i}"),
                message: "no such section".into(),
            });
        }
    }
    let mut report = CheckReport::new();
    for (i, sec) in sections.iter().enumerate() {
        if section.is_some_and(|want| want != i) {
            continue;
        }
        let sub = verify_section_with_samples(sec, samples, seed.wrapping_add(i as u64))?;
        report.merge(sec.label(), sub);
    }
    let data = json!({ "samples": samples, "seed": seed });
    Ok(finish("check-section", &report, data, String::new()))
}

/// `check-splitting`: the full weak-splitting suite over the spec's
/// sections, cell modes, and coverage points.
pub fn cmd_check_splitting(
    spec: &InputSpec,
    samples: usize,
    seed: u64,
    parallel: bool,
) -> Result<CommandOutcome> {
    let ctx = spec.build_ctx()?;
    let splitting = spec.build_splitting(&ctx, samples, seed, parallel)?;
    let report = check_weak_splitting(&splitting)?;
    let data = json!({
        "sections": splitting.sections.len(),
        "coverage_points": splitting.coverage_points.len(),
        "samples": samples,
        "seed": seed,
    });
    Ok(finish("check-splitting", &report, data, String::new()))
}

fn build_case(kind: CaseKind, n: usize) -> Result<FlagCase> {
    match kind {
        CaseKind::GroupTorus => FlagCase::standard_gxt(n),
        CaseKind::GroupGroup => FlagCase::standard_gxg(n),
    }
}

/// `flag-suite`: run a built-in case end to end.
pub fn cmd_flag_suite(
    kind: CaseKind,
    n: usize,
    variant: DoubleVariant,
    opts: &SuiteOpts,
) -> Result<CommandOutcome> {
    let case = build_case(kind, n)?;
    let report = run_flag_suite(&case, variant, opts)?;
    let data = json!({
        "case": kind.to_string(),
        "n": n,
        "variant": variant_name(variant),
        "sections": case.weyl_reps().len(),
        "seed": opts.seed,
    });
    let human = format!(
        "case {kind}, n = {n}, variant {}, {} cell representatives\n",
        variant_name(variant),
        case.weyl_reps().len(),
    );
    Ok(finish("flag-suite", &report, data, human))
}

/// `coset-reps`: minimal-length coset representatives for W/W_I.
pub fn cmd_coset_reps(n: usize, parabolic: &[usize]) -> Result<CommandOutcome> {
    let reps = minimal_coset_reps(n, parabolic)?;
    let mut report = CheckReport::new();
    report.pass_note("coset_enumeration", format!("{} representatives", reps.len()));
    let listed: Vec<Value> = reps
        .iter()
        .map(|w| {
            let one_line: Vec<u64> = w.perm.iter().map(|&p| (p + 1) as u64).collect();
            json!({ "label": w.label(), "one_line": one_line, "length": w.word.len() })
        })
        .collect();
    let data = json!({ "n": n, "parabolic": parabolic, "count": reps.len(), "representatives": listed });
    let mut human = String::new();
    for w in &reps {
        let one_line: Vec<String> = w.perm.iter().map(|&p| (p + 1).to_string()).collect();
        human.push_str(&format!("{}: [{}]\n", w.label(), one_line.join(" ")));
    }
    human.push_str(&format!("{} representatives\n", reps.len()));
    Ok(finish("coset-reps", &report, data, human))
}

/// `export-builtin`: print a built-in case as a canonical JSON input spec
/// (a starting template for user-defined specs and the source of the
/// shipped fixtures).
pub fn cmd_export_builtin(
    kind: CaseKind,
    n: usize,
    variant: DoubleVariant,
    coverage: usize,
    seed: u64,
) -> Result<CommandOutcome> {
    let case = build_case(kind, n)?;
    let spec = from_flag_case(&case, variant, coverage, seed)?;
    let text = canonical_json(&spec);
    let value: Value = serde_json::from_str(&text)?;
    let mut envelope = Map::new();
    envelope.insert("schema_version".into(), Value::from(1u64));
    envelope.insert("command".into(), Value::String("export-builtin".into()));
    envelope.insert("verdict".into(), Value::String("pass".into()));
    envelope.insert("clauses".into(), Value::Array(vec![]));
    envelope.insert("data".into(), value);
    Ok(CommandOutcome { human: text, json: Value::Object(envelope), exit_code: 0 })
}
