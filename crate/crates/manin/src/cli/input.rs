//! JSON input specifications.
//!
//! The batch front-end reads one JSON document describing a quadratic Lie
//! algebra, its matrix realization, a Manin triple, and optional section /
//! splitting data. Parsing is strict: unknown fields are rejected, every
//! rational must parse exactly, and every error carries the JSON pointer
//! of the offending value. Rationals travel as strings (`"p/q"` or `"p"`)
//! in both directions — never floats.
//!
//! The top-level schema (`schema_version: 1`):
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "algebra": { "dim": 4, "structure_constants": [[["0", ...], ...], ...],
//!                 "form": [["0", ...], ...] },
//!   "rep":     { "block_sizes": [2, 2], "basis_images": [[block, ...], ...] },
//!   "triple":  { "gplus": [vector, ...], "gminus": [vector, ...] },
//!   "sections": [ { "label": "w=e", "variant": "drinfeld",
//!                   "d": [block, ...], "q": [vector, ...],
//!                   "declared_fiber_seed": [vector, ...],
//!                   "allow_dirac_obstruction": true,
//!                   "group": { "nilpotents": [...], "cochars": [...] },
//!                   "stabilizer_group": { ... } } ],
//!   "splitting": { "cell_modes": ["minus_plus", null, ...],
//!                  "coverage": [[block, ...], ...] }
//! }
//! ```
//!
//! `rep`, `triple`, `sections`, and `splitting` are optional; commands that
//! need an absent block fail with a pointer to it.

use crate::doublepoisson::DoubleVariant;
use crate::error::{Error, Result};
use crate::exactlin::{format_rat, parse_rat, unit_vec, Mat, Rat, Subspace};
use crate::flagapps::FlagCase;
use crate::groupgeom::{BruhatMode, GroupPoint, MatRep};
use crate::liecore::{validate_invariant_form, validate_lie_structure, LieAlg, QuadLie};
use crate::maningen::{validate_manin_triple, ManinTriple};
use crate::report::CheckReport;
use crate::splitcheck::{DoubleContext, GroupData, SectionSpec, SplittingSpec};
use serde_json::{Map, Value};
use std::sync::Arc;

/// Fully parsed input document. Equality is exact (all leaves are exact
/// rationals or integers), which the golden-file tests rely on.
#[derive(Clone, Debug, PartialEq)]
pub struct InputSpec {
    pub algebra: AlgebraInput,
    pub rep: Option<RepInput>,
    pub triple: Option<TripleInput>,
    pub sections: Vec<SectionInput>,
    pub splitting: Option<SplittingInput>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraInput {
    pub dim: usize,
    pub structure_constants: Vec<Vec<Vec<Rat>>>,
    pub form: Mat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepInput {
    pub block_sizes: Vec<usize>,
    pub basis_images: Vec<Vec<Mat>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleInput {
    pub gplus: Vec<Vec<Rat>>,
    pub gminus: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectionInput {
    pub label: String,
    pub variant: DoubleVariant,
    pub d: Vec<Mat>,
    pub q: Vec<Vec<Rat>>,
    pub declared_fiber_seed: Option<Vec<Vec<Rat>>>,
    pub allow_dirac_obstruction: bool,
    pub group: GroupData,
    pub stabilizer_group: GroupData,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplittingInput {
    pub cell_modes: Vec<Option<BruhatMode>>,
    pub coverage: Vec<Vec<Mat>>,
}

// ───────────────────── pointer-tracked JSON walking ─────────────────────

fn err_at(ptr: &str, message: impl Into<String>) -> Error {
    Error::Spec { pointer: if ptr.is_empty() { "/".into() } else { ptr.into() }, message: message.into() }
}

fn as_obj<'a>(v: &'a Value, ptr: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err_at(ptr, "expected an object"))
}

fn as_arr<'a>(v: &'a Value, ptr: &str) -> Result<&'a [Value]> {
    v.as_array().map(Vec::as_slice).ok_or_else(|| err_at(ptr, "expected an array"))
}

fn as_str<'a>(v: &'a Value, ptr: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| err_at(ptr, "expected a string"))
}

fn as_size(v: &Value, ptr: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| err_at(ptr, "expected a non-negative integer"))
}

fn as_int(v: &Value, ptr: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| err_at(ptr, "expected an integer"))
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, ptr: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| err_at(&format!("{ptr}/{key}"), "missing required field"))
}

fn optional<'a>(m: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
    match m.get(key) {
        None | Some(Value::Null) => None,
        Some(v) => Some(v),
    }
}

fn reject_unknown(m: &Map<String, Value>, allowed: &[&str], ptr: &str) -> Result<()> {
    for key in m.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(err_at(&format!("{ptr}/{key}"), "unknown field"));
        }
    }
    Ok(())
}

fn rat_value(v: &Value, ptr: &str) -> Result<Rat> {
    let s = as_str(v, ptr)?;
    parse_rat(s).map_err(|e| match e {
        Error::RatParse { message, .. } => Error::RatParse { pointer: ptr.to_owned(), message },
        other => other,
    })
}

fn rat_vec(v: &Value, ptr: &str, expect: usize) -> Result<Vec<Rat>> {
    let items = as_arr(v, ptr)?;
    if items.len() != expect {
        return Err(err_at(ptr, format!("expected {expect} entries, found {}", items.len())));
    }
    items.iter().enumerate().map(|(i, x)| rat_value(x, &format!("{ptr}/{i}"))).collect()
}

fn rat_mat(v: &Value, ptr: &str, rows: usize, cols: usize) -> Result<Mat> {
    let row_vals = as_arr(v, ptr)?;
    if row_vals.len() != rows {
        return Err(err_at(ptr, format!("expected {rows} rows, found {}", row_vals.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, rv) in row_vals.iter().enumerate() {
        out.push(rat_vec(rv, &format!("{ptr}/{i}"), cols)?);
    }
    Mat::from_rows(out)
}

fn vector_list(v: &Value, ptr: &str, dim: usize) -> Result<Vec<Vec<Rat>>> {
    let items = as_arr(v, ptr)?;
    items.iter().enumerate().map(|(i, x)| rat_vec(x, &format!("{ptr}/{i}"), dim)).collect()
}

fn point_blocks(v: &Value, ptr: &str, block_sizes: &[usize]) -> Result<Vec<Mat>> {
    let items = as_arr(v, ptr)?;
    if items.len() != block_sizes.len() {
        return Err(err_at(
            ptr,
            format!("expected {} blocks, found {}", block_sizes.len(), items.len()),
        ));
    }
    items
        .iter()
        .zip(block_sizes)
        .enumerate()
        .map(|(k, (x, &b))| rat_mat(x, &format!("{ptr}/{k}"), b, b))
        .collect()
}

// ───────────────────── parsing ─────────────────────

/// Parse and structurally validate an input document. Semantic validation
/// (Jacobi, invariance, triple axioms, section conditions) happens in the
/// commands; parsing checks shapes, dimensions, and exact rationals.
pub fn parse_input_spec(text: &str) -> Result<InputSpec> {
    let root: Value = serde_json::from_str(text)?;
    let m = as_obj(&root, "")?;
    reject_unknown(m, &["schema_version", "algebra", "rep", "triple", "sections", "splitting"], "")?;
    let version = as_size(field(m, "schema_version", "")?, "/schema_version")?;
    if version != 1 {
        return Err(err_at("/schema_version", "unsupported schema version (expected 1)"));
    }

    let algebra = parse_algebra(field(m, "algebra", "")?)?;
    let dim = algebra.dim;

    let rep = optional(m, "rep").map(|v| parse_rep(v, dim)).transpose()?;
    let triple = optional(m, "triple").map(|v| parse_triple(v, dim)).transpose()?;

    let sections = match optional(m, "sections") {
        None => Vec::new(),
        Some(v) => {
            let r = rep
                .as_ref()
                .ok_or_else(|| err_at("/sections", "sections require the rep block"))?;
            parse_sections(v, dim, r)?
        }
    };

    let splitting = match optional(m, "splitting") {
        None => None,
        Some(v) => {
            let r = rep
                .as_ref()
                .ok_or_else(|| err_at("/splitting", "splitting data requires the rep block"))?;
            if sections.is_empty() {
                return Err(err_at("/splitting", "splitting data requires sections"));
            }
            Some(parse_splitting(v, r)?)
        }
    };

    Ok(InputSpec { algebra, rep, triple, sections, splitting })
}

fn parse_algebra(v: &Value) -> Result<AlgebraInput> {
    let ptr = "/algebra";
    let m = as_obj(v, ptr)?;
    reject_unknown(m, &["dim", "structure_constants", "form"], ptr)?;
    let dim = as_size(field(m, "dim", ptr)?, "/algebra/dim")?;
    if dim == 0 {
        return Err(err_at("/algebra/dim", "dimension must be positive"));
    }
    let sc_val = field(m, "structure_constants", ptr)?;
    let sc_ptr = "/algebra/structure_constants";
    let rows = as_arr(sc_val, sc_ptr)?;
    if rows.len() != dim {
        return Err(err_at(sc_ptr, format!("expected {dim} entries, found {}", rows.len())));
    }
    let mut consts = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let row_ptr = format!("{sc_ptr}/{i}");
        let cells = as_arr(row, &row_ptr)?;
        if cells.len() != dim {
            return Err(err_at(&row_ptr, format!("expected {dim} entries, found {}", cells.len())));
        }
        let mut out_row = Vec::with_capacity(dim);
        for (j, cell) in cells.iter().enumerate() {
            out_row.push(rat_vec(cell, &format!("{row_ptr}/{j}"), dim)?);
        }
        consts.push(out_row);
    }
    let form = rat_mat(field(m, "form", ptr)?, "/algebra/form", dim, dim)?;
    Ok(AlgebraInput { dim, structure_constants: consts, form })
}

fn parse_rep(v: &Value, dim: usize) -> Result<RepInput> {
    let ptr = "/rep";
    let m = as_obj(v, ptr)?;
    reject_unknown(m, &["block_sizes", "basis_images"], ptr)?;
    let sizes_val = field(m, "block_sizes", ptr)?;
    let sizes_arr = as_arr(sizes_val, "/rep/block_sizes")?;
    let mut block_sizes = Vec::with_capacity(sizes_arr.len());
    for (k, s) in sizes_arr.iter().enumerate() {
        let b = as_size(s, &format!("/rep/block_sizes/{k}"))?;
        if b == 0 {
            return Err(err_at(&format!("/rep/block_sizes/{k}"), "block size must be positive"));
        }
        block_sizes.push(b);
    }
    let images_val = field(m, "basis_images", ptr)?;
    let images_arr = as_arr(images_val, "/rep/basis_images")?;
    if images_arr.len() != dim {
        return Err(err_at(
            "/rep/basis_images",
            format!("expected {dim} entries, found {}", images_arr.len()),
        ));
    }
    let mut basis_images = Vec::with_capacity(dim);
    for (i, bi) in images_arr.iter().enumerate() {
        basis_images.push(point_blocks(bi, &format!("/rep/basis_images/{i}"), &block_sizes)?);
    }
    Ok(RepInput { block_sizes, basis_images })
}

fn parse_triple(v: &Value, dim: usize) -> Result<TripleInput> {
    let ptr = "/triple";
    let m = as_obj(v, ptr)?;
    reject_unknown(m, &["gplus", "gminus"], ptr)?;
    Ok(TripleInput {
        gplus: vector_list(field(m, "gplus", ptr)?, "/triple/gplus", dim)?,
        gminus: vector_list(field(m, "gminus", ptr)?, "/triple/gminus", dim)?,
    })
}

fn parse_variant(v: &Value, ptr: &str) -> Result<DoubleVariant> {
    match as_str(v, ptr)? {
        "drinfeld" => Ok(DoubleVariant::Drinfeld),
        "heisenberg" => Ok(DoubleVariant::Heisenberg),
        other => Err(err_at(ptr, format!("unknown variant {other:?} (expected \"drinfeld\" or \"heisenberg\")"))),
    }
}

fn parse_group(v: &Value, ptr: &str, dim: usize, rep: &RepInput) -> Result<GroupData> {
    let m = as_obj(v, ptr)?;
    reject_unknown(m, &["nilpotents", "cochars"], ptr)?;
    let nilpotents = match optional(m, "nilpotents") {
        None => Vec::new(),
        Some(x) => vector_list(x, &format!("{ptr}/nilpotents"), dim)?,
    };
    let mut cochars = Vec::new();
    if let Some(x) = optional(m, "cochars") {
        let c_ptr = format!("{ptr}/cochars");
        for (i, c) in as_arr(x, &c_ptr)?.iter().enumerate() {
            let one_ptr = format!("{c_ptr}/{i}");
            let blocks = as_arr(c, &one_ptr)?;
            if blocks.len() != rep.block_sizes.len() {
                return Err(err_at(
                    &one_ptr,
                    format!("expected {} blocks, found {}", rep.block_sizes.len(), blocks.len()),
                ));
            }
            let mut out = Vec::with_capacity(blocks.len());
            for (k, (b, &size)) in blocks.iter().zip(&rep.block_sizes).enumerate() {
                let b_ptr = format!("{one_ptr}/{k}");
                let entries = as_arr(b, &b_ptr)?;
                if entries.len() != size {
                    return Err(err_at(
                        &b_ptr,
                        format!("expected {size} exponents, found {}", entries.len()),
                    ));
                }
                let mut exps = Vec::with_capacity(size);
                for (j, e) in entries.iter().enumerate() {
                    exps.push(as_int(e, &format!("{b_ptr}/{j}"))?);
                }
                out.push(exps);
            }
            cochars.push(out);
        }
    }
    Ok(GroupData { nilpotents, cochars })
}

fn parse_sections(v: &Value, dim: usize, rep: &RepInput) -> Result<Vec<SectionInput>> {
    let items = as_arr(v, "/sections")?;
    let mut out = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let ptr = format!("/sections/{i}");
        let m = as_obj(item, &ptr)?;
        reject_unknown(
            m,
            &[
                "label",
                "variant",
                "d",
                "q",
                "declared_fiber_seed",
                "allow_dirac_obstruction",
                "group",
                "stabilizer_group",
            ],
            &ptr,
        )?;
        let label = as_str(field(m, "label", &ptr)?, &format!("{ptr}/label"))?.to_owned();
        let variant = parse_variant(field(m, "variant", &ptr)?, &format!("{ptr}/variant"))?;
        let d = point_blocks(field(m, "d", &ptr)?, &format!("{ptr}/d"), &rep.block_sizes)?;
        let q = vector_list(field(m, "q", &ptr)?, &format!("{ptr}/q"), dim)?;
        let declared_fiber_seed = optional(m, "declared_fiber_seed")
            .map(|x| vector_list(x, &format!("{ptr}/declared_fiber_seed"), dim))
            .transpose()?;
        let allow_dirac_obstruction = match optional(m, "allow_dirac_obstruction") {
            None => false,
            Some(x) => x
                .as_bool()
                .ok_or_else(|| err_at(&format!("{ptr}/allow_dirac_obstruction"), "expected a boolean"))?,
        };
        let group = match optional(m, "group") {
            None => GroupData::default(),
            Some(x) => parse_group(x, &format!("{ptr}/group"), dim, rep)?,
        };
        let stabilizer_group = match optional(m, "stabilizer_group") {
            None => GroupData::default(),
            Some(x) => parse_group(x, &format!("{ptr}/stabilizer_group"), dim, rep)?,
        };
        out.push(SectionInput {
            label,
            variant,
            d,
            q,
            declared_fiber_seed,
            allow_dirac_obstruction,
            group,
            stabilizer_group,
        });
    }
    Ok(out)
}

fn parse_mode(v: &Value, ptr: &str) -> Result<Option<BruhatMode>> {
    if v.is_null() {
        return Ok(None);
    }
    match as_str(v, ptr)? {
        "minus_plus" => Ok(Some(BruhatMode::MinusPlus)),
        "plus_plus" => Ok(Some(BruhatMode::PlusPlus)),
        "minus_minus" => Ok(Some(BruhatMode::MinusMinus)),
        other => Err(err_at(
            ptr,
            format!("unknown cell mode {other:?} (expected \"minus_plus\", \"plus_plus\", \"minus_minus\", or null)"),
        )),
    }
}

fn parse_splitting(v: &Value, rep: &RepInput) -> Result<SplittingInput> {
    let ptr = "/splitting";
    let m = as_obj(v, ptr)?;
    reject_unknown(m, &["cell_modes", "coverage"], ptr)?;
    let modes_val = field(m, "cell_modes", ptr)?;
    let modes_arr = as_arr(modes_val, "/splitting/cell_modes")?;
    if modes_arr.len() != rep.block_sizes.len() {
        return Err(err_at(
            "/splitting/cell_modes",
            format!("expected {} entries, found {}", rep.block_sizes.len(), modes_arr.len()),
        ));
    }
    let cell_modes = modes_arr
        .iter()
        .enumerate()
        .map(|(k, x)| parse_mode(x, &format!("/splitting/cell_modes/{k}")))
        .collect::<Result<Vec<_>>>()?;
    let coverage = match optional(m, "coverage") {
        None => Vec::new(),
        Some(x) => as_arr(x, "/splitting/coverage")?
            .iter()
            .enumerate()
            .map(|(i, p)| point_blocks(p, &format!("/splitting/coverage/{i}"), &rep.block_sizes))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(SplittingInput { cell_modes, coverage })
}

// ───────────────────── canonical serialization ─────────────────────

fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

fn mat_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_json(m.row(i))).collect())
}

fn blocks_json(blocks: &[Mat]) -> Value {
    Value::Array(blocks.iter().map(mat_json).collect())
}

fn group_json(g: &GroupData) -> Value {
    let mut m = Map::new();
    if !g.nilpotents.is_empty() {
        m.insert("nilpotents".into(), Value::Array(g.nilpotents.iter().map(|v| vec_json(v)).collect()));
    }
    if !g.cochars.is_empty() {
        m.insert(
            "cochars".into(),
            Value::Array(
                g.cochars
                    .iter()
                    .map(|c| {
                        Value::Array(
                            c.iter()
                                .map(|b| Value::Array(b.iter().map(|&e| Value::from(e)).collect()))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        );
    }
    Value::Object(m)
}

fn mode_json(mode: &Option<BruhatMode>) -> Value {
    match mode {
        None => Value::Null,
        Some(BruhatMode::MinusPlus) => Value::String("minus_plus".into()),
        Some(BruhatMode::PlusPlus) => Value::String("plus_plus".into()),
        Some(BruhatMode::MinusMinus) => Value::String("minus_minus".into()),
    }
}

/// The one-and-only canonical JSON form of a spec: keys sorted, rationals
/// as strings, optional empty blocks omitted, trailing newline.
pub fn canonical_json(spec: &InputSpec) -> String {
    let mut root = Map::new();
    root.insert("schema_version".into(), Value::from(1u64));

    let mut algebra = Map::new();
    algebra.insert("dim".into(), Value::from(spec.algebra.dim as u64));
    algebra.insert(
        "structure_constants".into(),
        Value::Array(
            spec.algebra
                .structure_constants
                .iter()
                .map(|row| Value::Array(row.iter().map(|cell| vec_json(cell)).collect()))
                .collect(),
        ),
    );
    algebra.insert("form".into(), mat_json(&spec.algebra.form));
    root.insert("algebra".into(), Value::Object(algebra));

    if let Some(rep) = &spec.rep {
        let mut r = Map::new();
        r.insert(
            "block_sizes".into(),
            Value::Array(rep.block_sizes.iter().map(|&b| Value::from(b as u64)).collect()),
        );
        r.insert(
            "basis_images".into(),
            Value::Array(rep.basis_images.iter().map(|b| blocks_json(b)).collect()),
        );
        root.insert("rep".into(), Value::Object(r));
    }

    if let Some(t) = &spec.triple {
        let mut tr = Map::new();
        tr.insert("gplus".into(), Value::Array(t.gplus.iter().map(|v| vec_json(v)).collect()));
        tr.insert("gminus".into(), Value::Array(t.gminus.iter().map(|v| vec_json(v)).collect()));
        root.insert("triple".into(), Value::Object(tr));
    }

    if !spec.sections.is_empty() {
        let sections: Vec<Value> = spec
            .sections
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("label".into(), Value::String(s.label.clone()));
                m.insert(
                    "variant".into(),
                    Value::String(
                        match s.variant {
                            DoubleVariant::Drinfeld => "drinfeld",
                            DoubleVariant::Heisenberg => "heisenberg",
                        }
                        .into(),
                    ),
                );
                m.insert("d".into(), blocks_json(&s.d));
                m.insert("q".into(), Value::Array(s.q.iter().map(|v| vec_json(v)).collect()));
                if let Some(seed) = &s.declared_fiber_seed {
                    m.insert(
                        "declared_fiber_seed".into(),
                        Value::Array(seed.iter().map(|v| vec_json(v)).collect()),
                    );
                }
                if s.allow_dirac_obstruction {
                    m.insert("allow_dirac_obstruction".into(), Value::Bool(true));
                }
                if !s.group.is_empty() {
                    m.insert("group".into(), group_json(&s.group));
                }
                if !s.stabilizer_group.is_empty() {
                    m.insert("stabilizer_group".into(), group_json(&s.stabilizer_group));
                }
                Value::Object(m)
            })
            .collect();
        root.insert("sections".into(), Value::Array(sections));
    }

    if let Some(sp) = &spec.splitting {
        let mut m = Map::new();
        m.insert("cell_modes".into(), Value::Array(sp.cell_modes.iter().map(mode_json).collect()));
        if !sp.coverage.is_empty() {
            m.insert("coverage".into(), Value::Array(sp.coverage.iter().map(|b| blocks_json(b)).collect()));
        }
        root.insert("splitting".into(), Value::Object(m));
    }

    let mut text = serde_json::to_string_pretty(&Value::Object(root))
        .expect("JSON serialization of finite data cannot fail");
    text.push('\n');
    text
}

// ───────────────────── domain builders ─────────────────────

fn subspace_rows(s: &Subspace) -> Vec<Vec<Rat>> {
    (0..s.dim()).map(|i| s.basis().row(i).to_vec()).collect()
}

impl InputSpec {
    /// Clause-level validation used by the `validate` command: Lie
    /// structure, form invariance, then (when a triple is given) the
    /// Manin-triple axioms. Later tiers are skipped when earlier ones
    /// fail, so witnesses always point at the root cause.
    pub fn validation_report(&self) -> Result<CheckReport> {
        let mut report = CheckReport::new();
        let lie = validate_lie_structure(self.algebra.dim, &self.algebra.structure_constants);
        let lie_ok = lie.verdict();
        report.merge("algebra", lie);
        if !lie_ok {
            report.fail("form", "skipped: Lie structure invalid");
            if self.triple.is_some() {
                report.fail("triple", "skipped: Lie structure invalid");
            }
            return Ok(report);
        }
        let alg = LieAlg::new(self.algebra.dim, self.algebra.structure_constants.clone())?;
        let form_report = validate_invariant_form(&alg, &self.algebra.form);
        let form_ok = form_report.verdict();
        report.merge("form", form_report);
        if let Some(t) = &self.triple {
            if !form_ok {
                report.fail("triple", "skipped: invariant form invalid");
                return Ok(report);
            }
            let quad = QuadLie::new(alg, self.algebra.form.clone())?;
            let gplus = Subspace::from_vectors(self.algebra.dim, &t.gplus)?;
            let gminus = Subspace::from_vectors(self.algebra.dim, &t.gminus)?;
            report.merge("triple", validate_manin_triple(&quad, &gplus, &gminus)?);
        }
        Ok(report)
    }

    pub fn build_alg(&self) -> Result<LieAlg> {
        LieAlg::new(self.algebra.dim, self.algebra.structure_constants.clone())
    }

    pub fn build_triple(&self) -> Result<ManinTriple> {
        let t = self
            .triple
            .as_ref()
            .ok_or_else(|| err_at("/triple", "required by this command"))?;
        let alg = self.build_alg()?;
        let quad = QuadLie::new(alg, self.algebra.form.clone())?;
        let gplus = Subspace::from_vectors(self.algebra.dim, &t.gplus)?;
        let gminus = Subspace::from_vectors(self.algebra.dim, &t.gminus)?;
        ManinTriple::new(quad, gplus, gminus)
    }

    pub fn build_rep(&self, alg: &LieAlg) -> Result<Arc<MatRep>> {
        let r = self.rep.as_ref().ok_or_else(|| err_at("/rep", "required by this command"))?;
        Ok(Arc::new(MatRep::new(alg, r.block_sizes.clone(), r.basis_images.clone())?))
    }

    pub fn build_ctx(&self) -> Result<Arc<DoubleContext>> {
        let triple = self.build_triple()?;
        let rep = self.build_rep(triple.alg())?;
        Ok(Arc::new(DoubleContext::new(triple, rep)?))
    }

    pub fn build_sections(&self, ctx: &Arc<DoubleContext>) -> Result<Vec<SectionSpec>> {
        let dim = self.algebra.dim;
        self.sections
            .iter()
            .map(|s| {
                let d = GroupPoint::new(ctx.rep().clone(), s.d.clone())?;
                let q = Subspace::from_vectors(dim, &s.q)?;
                let seed = s
                    .declared_fiber_seed
                    .as_ref()
                    .map(|v| Subspace::from_vectors(dim, v))
                    .transpose()?;
                SectionSpec::new(
                    s.label.clone(),
                    ctx.clone(),
                    d,
                    q,
                    seed,
                    s.allow_dirac_obstruction,
                    s.variant,
                    s.group.clone(),
                    s.stabilizer_group.clone(),
                )
            })
            .collect()
    }

    pub fn build_splitting(
        &self,
        ctx: &Arc<DoubleContext>,
        samples_per_section: usize,
        seed: u64,
        parallel: bool,
    ) -> Result<SplittingSpec> {
        let sp = self
            .splitting
            .as_ref()
            .ok_or_else(|| err_at("/splitting", "required by this command"))?;
        let sections = self.build_sections(ctx)?;
        let coverage_points = sp
            .coverage
            .iter()
            .map(|blocks| GroupPoint::new(ctx.rep().clone(), blocks.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SplittingSpec {
            sections,
            cell_modes: sp.cell_modes.clone(),
            coverage_points,
            samples_per_section,
            seed,
            parallel,
        })
    }
}

/// Export a built-in flag case as an input spec, including its sections,
/// cell modes, and a deterministic batch of coverage points.
pub fn from_flag_case(
    case: &FlagCase,
    variant: DoubleVariant,
    coverage_count: usize,
    seed: u64,
) -> Result<InputSpec> {
    let ctx = case.ctx();
    let triple = ctx.triple();
    let alg = triple.alg();
    let dim = alg.dim();
    let algebra = AlgebraInput {
        dim,
        structure_constants: alg.consts().clone(),
        form: triple.form().clone(),
    };
    let basis_images = (0..dim)
        .map(|i| ctx.rep().rep_of(&unit_vec(dim, i)))
        .collect::<Result<Vec<_>>>()?;
    let rep = RepInput { block_sizes: ctx.rep().block_sizes().to_vec(), basis_images };
    let triple_input = TripleInput {
        gplus: subspace_rows(triple.gplus()),
        gminus: subspace_rows(triple.gminus()),
    };
    let sections = case
        .section_specs(variant)?
        .iter()
        .map(|s| SectionInput {
            label: s.label().to_owned(),
            variant,
            d: s.d().blocks().to_vec(),
            q: subspace_rows(s.q()),
            declared_fiber_seed: s.declared_seed().map(subspace_rows),
            allow_dirac_obstruction: s.allows_dirac_obstruction(),
            group: s.group_data().clone(),
            stabilizer_group: s.h_data().clone(),
        })
        .collect();
    let coverage = case
        .coverage_points(coverage_count, seed, variant)?
        .iter()
        .map(|p| p.blocks().to_vec())
        .collect();
    let splitting = Some(SplittingInput { cell_modes: case.cell_modes(variant), coverage });
    Ok(InputSpec {
        algebra,
        rep: Some(rep),
        triple: Some(triple_input),
        sections,
        splitting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::DEFAULT_SEED;

    #[test]
    fn minimal_abelian_example_parses() {
        let text = r#"{
            "schema_version": 1,
            "algebra": {
                "dim": 2,
                "structure_constants": [
                    [["0","0"], ["0","0"]],
                    [["0","0"], ["0","0"]]
                ],
                "form": [["1","0"], ["0","-1"]]
            }
        }"#;
        let spec = parse_input_spec(text).unwrap();
        assert_eq!(spec.algebra.dim, 2);
        assert!(spec.rep.is_none());
        assert!(spec.sections.is_empty());
    }

    #[test]
    fn zero_denominator_error_carries_the_pointer() {
        let text = r#"{
            "schema_version": 1,
            "algebra": {
                "dim": 1,
                "structure_constants": [[["0"]]],
                "form": [["1/0"]]
            }
        }"#;
        let err = parse_input_spec(text).unwrap_err();
        match err {
            Error::RatParse { pointer, .. } => assert_eq!(pointer, "/algebra/form/0/0"),
            other => panic!("expected a rational parse error, got {other}"),
        }
    }

    #[test]
    fn unknown_field_error_carries_the_pointer() {
        let text = r#"{
            "schema_version": 1,
            "algebra": {
                "dim": 1,
                "structure_constants": [[["0"]]],
                "form": [["1"]],
                "extra": true
            }
        }"#;
        let err = parse_input_spec(text).unwrap_err();
        match err {
            Error::Spec { pointer, message } => {
                assert_eq!(pointer, "/algebra/extra");
                assert!(message.contains("unknown field"));
            }
            other => panic!("expected a spec error, got {other}"),
        }
    }

    #[test]
    fn dimension_mismatch_error_carries_the_pointer() {
        let text = r#"{
            "schema_version": 1,
            "algebra": {
                "dim": 2,
                "structure_constants": [
                    [["0","0"], ["0","0"]],
                    [["0","0"], ["0","0"]]
                ],
                "form": [["1","0"], ["0"]]
            }
        }"#;
        let err = parse_input_spec(text).unwrap_err();
        match err {
            Error::Spec { pointer, .. } => assert_eq!(pointer, "/algebra/form/1"),
            other => panic!("expected a spec error, got {other}"),
        }
    }

    #[test]
    fn round_trip_is_idempotent_on_the_builtin_export() {
        let case = FlagCase::standard_gxt(2).unwrap();
        let spec = from_flag_case(&case, DoubleVariant::Drinfeld, 4, DEFAULT_SEED).unwrap();
        let text = canonical_json(&spec);
        let reparsed = parse_input_spec(&text).unwrap();
        assert_eq!(reparsed, spec);
        assert_eq!(canonical_json(&reparsed), text);
    }

    #[test]
    fn validation_report_passes_for_the_builtin_and_fails_when_perturbed() {
        let case = FlagCase::standard_gxt(2).unwrap();
        let mut spec = from_flag_case(&case, DoubleVariant::Drinfeld, 0, DEFAULT_SEED).unwrap();
        assert!(spec.validation_report().unwrap().verdict());
        // tilt the plus half out of isotropy: replace (e,0) by (e,0)+(f,0)
        let t = spec.triple.as_mut().unwrap();
        t.gplus[0][2] = crate::exactlin::rat(1);
        let report = spec.validation_report().unwrap();
        assert!(!report.verdict());
        let failing = report.first_failure().unwrap();
        assert!(failing.name.starts_with("triple/plus"), "failing clause: {}", failing.name);
        assert!(failing.witness.is_some());
    }
}
