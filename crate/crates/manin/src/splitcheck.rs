//! Weak-section and weak-splitting verification.
//!
//! Given a Manin triple realized as a matrix group, a choice of double
//! structure (Drinfeld or Heisenberg), a coisotropic-type subalgebra `q`
//! and a representative point `d`, this module checks — point by point, in
//! exact arithmetic — the linear-algebra conditions under which the orbit
//! of `d` under its stabilizer-type subgroup is a Poisson–Dirac
//! transversal in the quotient of the double, and the induced tensor on
//! the orbit matches the quotient Poisson tensor on the coset space.
//!
//! The checks are organized in three tiers:
//!
//! 1. [`check_section_conditions`] — point-independent subspace conditions
//!    at the representative `d` alone;
//! 2. [`weak_section_verify`] — the full verification at a sampled point
//!    `m = g·d`, including the Poisson–Dirac criteria and the section law
//!    comparing the reduced tensor with the quotient tensor;
//! 3. [`check_weak_splitting`] — a family of representatives: per-cell
//!    verification, pairwise-distinct decomposition cells, and coverage.

use crate::doublepoisson::{
    bivector_with_ad, chi_r_with_ad, pushforward_bivector, DoubleVariant,
};
use crate::error::{Error, Result};
use crate::exactlin::{projection_matrix, Mat, Rat, Subspace};
use crate::groupgeom::{bruhat_cell, BruhatMode, GroupPoint, MatRep, QuotientFrame};
use crate::maningen::{build_rmatrix, ManinTriple, RMatrix};
use crate::report::CheckReport;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

// ───────────────────── double context ─────────────────────

/// A Manin triple together with its matrix realization and the derived
/// data every section check needs: the Lie normalizers of the two halves,
/// their intersection (the stabilizer subalgebra), and the r-matrix.
#[derive(Clone, Debug)]
pub struct DoubleContext {
    triple: ManinTriple,
    rep: Arc<MatRep>,
    nplus: Subspace,
    nminus: Subspace,
    h: Subspace,
    rmatrix: RMatrix,
}

impl DoubleContext {
    pub fn new(triple: ManinTriple, rep: Arc<MatRep>) -> Result<DoubleContext> {
        if rep.alg().consts() != triple.alg().consts() {
            return Err(Error::BadRep(
                "matrix realization does not match the triple's structure constants".into(),
            ));
        }
        let nplus = triple.alg().lie_normalizer(triple.gplus())?;
        let nminus = triple.alg().lie_normalizer(triple.gminus())?;
        if !nplus.contains(triple.gplus())? || !nminus.contains(triple.gminus())? {
            return Err(Error::CrossCheck(
                "a subalgebra escaped its own normalizer".into(),
            ));
        }
        let h = nplus.intersect(&nminus)?;
        let rmatrix = build_rmatrix(&triple)?;
        Ok(DoubleContext { triple, rep, nplus, nminus, h, rmatrix })
    }

    pub fn triple(&self) -> &ManinTriple {
        &self.triple
    }

    pub fn rep(&self) -> &Arc<MatRep> {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.triple.dim()
    }

    /// Normalizer of the plus half.
    pub fn nplus(&self) -> &Subspace {
        &self.nplus
    }

    /// Normalizer of the minus half.
    pub fn nminus(&self) -> &Subspace {
        &self.nminus
    }

    /// Stabilizer subalgebra `h = n₊ ∩ n₋`.
    pub fn stabilizer(&self) -> &Subspace {
        &self.h
    }

    pub fn rmatrix(&self) -> &RMatrix {
        &self.rmatrix
    }

    /// The normalizer on the side opposite to the variant's quotient: the
    /// minus side for the Drinfeld double, the plus side for Heisenberg.
    pub fn opposite_normalizer(&self, variant: DoubleVariant) -> &Subspace {
        match variant {
            DoubleVariant::Drinfeld => &self.nminus,
            DoubleVariant::Heisenberg => &self.nplus,
        }
    }

    /// Half-projection used in the fiber construction (plus for Drinfeld,
    /// minus for Heisenberg).
    pub fn fiber_projection(&self, variant: DoubleVariant) -> &Mat {
        match variant {
            DoubleVariant::Drinfeld => self.triple.pplus_matrix(),
            DoubleVariant::Heisenberg => self.triple.pminus_matrix(),
        }
    }
}

// ───────────────────── group sampling data ─────────────────────

/// Generators for sampling points of a matrix subgroup: nilpotent algebra
/// directions (exponentiated with random rational coefficients) and
/// cocharacters (integer exponent vectors per block, evaluated at random
/// nonzero rational parameters).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupData {
    pub nilpotents: Vec<Vec<Rat>>,
    pub cochars: Vec<Vec<Vec<i64>>>,
}

impl GroupData {
    pub fn is_empty(&self) -> bool {
        self.nilpotents.is_empty() && self.cochars.is_empty()
    }

    /// Derivative of a cocharacter at parameter 1: the diagonal matrices
    /// with the integer exponents as entries, as algebra coordinates.
    pub fn cochar_derivative(rep: &MatRep, cochar: &[Vec<i64>]) -> Result<Vec<Rat>> {
        if cochar.len() != rep.block_sizes().len() {
            return Err(Error::BadPoint("cocharacter has wrong number of blocks".into()));
        }
        let mut blocks = Vec::with_capacity(cochar.len());
        for (es, &s) in cochar.iter().zip(rep.block_sizes()) {
            if es.len() != s {
                return Err(Error::BadPoint("cocharacter exponent count mismatch".into()));
            }
            let mut m = Mat::zeros(s, s);
            for (i, &e) in es.iter().enumerate() {
                m.set(i, i, crate::exactlin::rat(e));
            }
            blocks.push(m);
        }
        rep.coords_of(&blocks)
    }

    /// Check that every generator stays inside the given subalgebra (the
    /// nilpotent directions directly, the cocharacters via their
    /// derivatives) and that cocharacter exponents sum to zero per block.
    pub fn validate_within(&self, rep: &MatRep, sub: &Subspace) -> Result<()> {
        for (i, x) in self.nilpotents.iter().enumerate() {
            if x.len() != sub.ambient_dim() {
                return Err(Error::BadSection(format!("nilpotent generator {i} has wrong length")));
            }
            if !sub.contains_vec(x)? {
                return Err(Error::BadSection(format!(
                    "nilpotent generator {i} is outside the allowed subalgebra"
                )));
            }
        }
        for (i, cochar) in self.cochars.iter().enumerate() {
            for es in cochar {
                if es.iter().sum::<i64>() != 0 {
                    return Err(Error::BadSection(format!(
                        "cocharacter {i} exponents do not sum to zero"
                    )));
                }
            }
            let derivative = Self::cochar_derivative(rep, cochar)?;
            if !sub.contains_vec(&derivative)? {
                return Err(Error::BadSection(format!(
                    "cocharacter {i} derivative is outside the allowed subalgebra"
                )));
            }
        }
        Ok(())
    }

    /// Sample one subgroup point: exponential of a random combination of
    /// the nilpotent generators times cocharacter values at random nonzero
    /// parameters. Empty data yields the identity.
    pub fn sample<R: Rng>(&self, rep: &Arc<MatRep>, rng: &mut R) -> Result<GroupPoint> {
        let mut point = GroupPoint::identity(rep.clone());
        if !self.nilpotents.is_empty() {
            let mut x = crate::exactlin::vec_zero(rep.alg_dim());
            for gen in &self.nilpotents {
                let c = crate::sampling::random_rat(rng);
                for (out, v) in x.iter_mut().zip(gen) {
                    *out += &c * v;
                }
            }
            point = point.mul(&GroupPoint::exp_nilpotent(rep.clone(), &x)?)?;
        }
        for cochar in &self.cochars {
            let t = crate::sampling::random_nonzero_rat(rng);
            point = point.mul(&GroupPoint::toral(rep.clone(), &t, cochar)?)?;
        }
        Ok(point)
    }
}

// ───────────────────── section specification ─────────────────────

/// One weak-section instance: a double context, a variant, the subalgebra
/// `q`, a representative `d`, and sampling data for the groups involved.
///
/// Two bundle-fiber constructions can coexist:
///
/// * the **conormal fiber** — seeded by `q^⊥`, the general construction;
///   this is the fiber all transversality and Poisson–Dirac clauses run
///   against;
/// * an optional **declared fiber** — seeded by an explicitly given
///   subspace, for configurations whose published description fixes a
///   concrete seed formula; it is exposed for formula-level cross-checks
///   and used by [`section_bundle_fiber`] when present.
///
/// `allow_dirac_obstruction` controls what happens at a sampled point
/// where the sharp image of the orbit conormal meets the orbit tangent
/// nontrivially, so that *no* transversal complement can satisfy the
/// projection criterion there: sections constructed so that this never
/// happens keep the default `false` and fail loudly, while constructions
/// where the obstruction genuinely occurs on some cells set `true` and
/// have each such point recorded with a witness instead.
#[derive(Clone, Debug)]
pub struct SectionSpec {
    label: String,
    ctx: Arc<DoubleContext>,
    d: GroupPoint,
    q: Subspace,
    qperp: Subspace,
    declared_seed: Option<Subspace>,
    allow_dirac_obstruction: bool,
    variant: DoubleVariant,
    group_data: GroupData,
    h_data: GroupData,
    ad_d: Mat,
    ad_d_inv: Mat,
    tangent: Subspace,
    fiber_base: Subspace,
    declared_base: Option<Subspace>,
}

impl SectionSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        label: impl Into<String>,
        ctx: Arc<DoubleContext>,
        d: GroupPoint,
        q: Subspace,
        declared_seed: Option<Subspace>,
        allow_dirac_obstruction: bool,
        variant: DoubleVariant,
        group_data: GroupData,
        h_data: GroupData,
    ) -> Result<SectionSpec> {
        let n = ctx.dim();
        if q.ambient_dim() != n {
            return Err(Error::BadSection("q has the wrong ambient dimension".into()));
        }
        if !ctx.triple().alg().is_subalgebra(&q)? {
            return Err(Error::BadSection("q is not a subalgebra".into()));
        }
        let qperp = ctx.triple().quad().orth_complement(&q)?;
        if let Some(seed) = &declared_seed {
            if seed.ambient_dim() != n {
                return Err(Error::BadSection(
                    "declared fiber seed has the wrong ambient dimension".into(),
                ));
            }
        }
        let ad_d = d.adjoint_matrix()?;
        let ad_d_inv = ad_d.inverse()?;
        let tangent = ctx.opposite_normalizer(variant).intersect(&q.map(&ad_d)?)?;
        let fiber_base = qperp.map(&ad_d)?.map(ctx.fiber_projection(variant))?;
        let declared_base = match &declared_seed {
            None => None,
            Some(seed) => Some(seed.map(&ad_d)?.map(ctx.fiber_projection(variant))?),
        };
        group_data.validate_within(ctx.rep(), &tangent)?;
        h_data.validate_within(ctx.rep(), ctx.stabilizer())?;
        Ok(SectionSpec {
            label: label.into(),
            ctx,
            d,
            q,
            qperp,
            declared_seed,
            allow_dirac_obstruction,
            variant,
            group_data,
            h_data,
            ad_d,
            ad_d_inv,
            tangent,
            fiber_base,
            declared_base,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ctx(&self) -> &Arc<DoubleContext> {
        &self.ctx
    }

    pub fn d(&self) -> &GroupPoint {
        &self.d
    }

    pub fn q(&self) -> &Subspace {
        &self.q
    }

    pub fn qperp(&self) -> &Subspace {
        &self.qperp
    }

    pub fn variant(&self) -> DoubleVariant {
        self.variant
    }

    /// Tangent algebra of the orbit-carrying subgroup at `d` (constant in
    /// the sampled point): the opposite normalizer meets the moved `q`.
    pub fn tangent(&self) -> &Subspace {
        &self.tangent
    }

    /// Conormal-seeded fiber subspace, right-trivialized at `m`: the
    /// projected moved conormal of `q` plus the moved plus-normalizer.
    pub fn fiber_at(&self, ad_m: &Mat) -> Result<Subspace> {
        self.fiber_base.sum(&self.ctx.nplus().map(ad_m)?)
    }

    /// Fiber built from the declared seed subspace, if one was given.
    pub fn declared_fiber_at(&self, ad_m: &Mat) -> Result<Option<Subspace>> {
        match &self.declared_base {
            None => Ok(None),
            Some(base) => Ok(Some(base.sum(&self.ctx.nplus().map(ad_m)?)?)),
        }
    }

    /// Declared fiber seed subspace, if one was given.
    pub fn declared_seed(&self) -> Option<&Subspace> {
        self.declared_seed.as_ref()
    }

    /// Whether sampled points where the projection criterion is
    /// unsatisfiable are recorded with a witness rather than failed.
    pub fn allows_dirac_obstruction(&self) -> bool {
        self.allow_dirac_obstruction
    }

    /// Exponential-coordinate generators of the orbit-carrying subgroup.
    pub fn group_data(&self) -> &GroupData {
        &self.group_data
    }

    /// Exponential-coordinate generators of the stabilizer subgroup.
    pub fn h_data(&self) -> &GroupData {
        &self.h_data
    }

    pub fn sample_g<R: Rng>(&self, rng: &mut R) -> Result<GroupPoint> {
        self.group_data.sample(self.ctx.rep(), rng)
    }

    pub fn sample_h<R: Rng>(&self, rng: &mut R) -> Result<Option<GroupPoint>> {
        if self.h_data.is_empty() {
            return Ok(None);
        }
        Ok(Some(self.h_data.sample(self.ctx.rep(), rng)?))
    }
}

// ───────────────────── tier 1: conditions at d ─────────────────────

/// Point-independent section conditions at the representative `d`.
///
/// With `n₊` the plus-normalizer, `n∓` the opposite normalizer for the
/// variant, `h` the stabilizer subalgebra, and `A = Ad_d`:
///
/// * `h_image_in_opposite_normalizer` — `A(h) ⊆ n∓`;
/// * `opposite_normalizer_splits` — `n∓ = (n∓ ∩ A(n₊)) + (n∓ ∩ A(q))`;
/// * `q_meets_nplus_in_stabilizer` — `q ∩ n₊ = h`;
/// * `nplus_plus_q_fills_ambient` — `n₊ + q` is everything;
/// * `nplus_qperp_pullback_fills_ambient` — `n₊ + q^⊥ + A⁻¹(n∓)` is
///   everything;
/// * `fiber_dimension_count` — the dimension bookkeeping that makes the
///   fiber-and-tangent decomposition possible. For the Drinfeld double it
///   is the literal sum `dim p₊A(q^⊥) + dim n₊ + dim(n₋ ∩ A(q))`; for the
///   Heisenberg double the first two terms must be counted as a genuine
///   subspace sum, `dim(p₋A(q^⊥) + A(n₊)) + dim(n₊ ∩ A(q))` — the naive
///   term-by-term count double-books the overlap of the projected conormal
///   with the moved normalizer. Both equal `dim ambient + dim h`.
pub fn check_section_conditions(spec: &SectionSpec) -> Result<CheckReport> {
    let ctx = spec.ctx();
    let n = ctx.dim();
    let full = Subspace::full(n);
    let nplus = ctx.nplus();
    let nopp = ctx.opposite_normalizer(spec.variant());
    let h = ctx.stabilizer();
    let ad = &spec.ad_d;

    let mut report = CheckReport::new();

    let h_moved = h.map(ad)?;
    report.record("h_image_in_opposite_normalizer", nopp.contains(&h_moved)?, || {
        "Ad_d does not move the stabilizer into the opposite normalizer".into()
    });

    let moved_nplus = nplus.map(ad)?;
    let moved_q = spec.q().map(ad)?;
    let split_sum = nopp.intersect(&moved_nplus)?.sum(&nopp.intersect(&moved_q)?)?;
    report.record("opposite_normalizer_splits", split_sum == *nopp, || {
        format!("split parts span only dim {} of dim {}", split_sum.dim(), nopp.dim())
    });

    let q_cap_nplus = spec.q().intersect(nplus)?;
    report.record("q_meets_nplus_in_stabilizer", q_cap_nplus == *h, || {
        format!("q ∩ n₊ has dim {}, stabilizer has dim {}", q_cap_nplus.dim(), h.dim())
    });

    let coarse_sum = nplus.sum(spec.q())?;
    report.record("nplus_plus_q_fills_ambient", coarse_sum == full, || {
        format!("n₊ + q has dim {} of {}", coarse_sum.dim(), n)
    });

    let pulled_back = nopp.map(&spec.ad_d_inv)?;
    let fine_sum = nplus.sum(spec.qperp())?.sum(&pulled_back)?;
    report.record("nplus_qperp_pullback_fills_ambient", fine_sum == full, || {
        format!("n₊ + q^⊥ + Ad_d⁻¹(n∓) has dim {} of {}", fine_sum.dim(), n)
    });

    let moved_qperp = spec.qperp().map(ad)?;
    let projected = moved_qperp.map(ctx.fiber_projection(spec.variant()))?;
    let lhs = match spec.variant() {
        DoubleVariant::Drinfeld => {
            projected.dim() + nplus.dim() + nopp.intersect(&moved_q)?.dim()
        }
        DoubleVariant::Heisenberg => {
            projected.sum(&moved_nplus)?.dim() + nplus.intersect(&moved_q)?.dim()
        }
    };
    report.record("fiber_dimension_count", lhs == n + h.dim(), || {
        format!("count gives {lhs}, expected {} + {} = {}", n, h.dim(), n + h.dim())
    });

    Ok(report)
}

/// The bundle fiber at `m = g·d` in the right-trivialized frame, built
/// from the section's configured seed — the declared seed when one was
/// given, the conormal of `q` otherwise — and verified against the
/// complement conditions: the fiber meets the orbit tangent exactly in
/// the moved stabilizer, and together they fill the ambient algebra.
/// Either condition failing is reported as an error, signalling that the
/// configured seed does not produce a transversal complement at `m`.
pub fn section_bundle_fiber(spec: &SectionSpec, g: &GroupPoint) -> Result<Subspace> {
    let m = g.mul(spec.d())?;
    let ad_m = m.adjoint_matrix()?;
    let fiber = match spec.declared_fiber_at(&ad_m)? {
        Some(f) => f,
        None => spec.fiber_at(&ad_m)?,
    };
    let tangent = spec.tangent();
    let h_moved = spec.ctx().stabilizer().map(&ad_m)?;
    let meet = fiber.intersect(tangent)?;
    if meet != h_moved {
        return Err(Error::FiberCondition(format!(
            "fiber meets the orbit tangent in dim {}, expected the moved stabilizer of dim {}",
            meet.dim(),
            h_moved.dim()
        )));
    }
    let span = fiber.sum(tangent)?;
    if span.dim() != spec.ctx().dim() {
        return Err(Error::FiberCondition(format!(
            "fiber + tangent spans dim {} of {}",
            span.dim(),
            spec.ctx().dim()
        )));
    }
    Ok(fiber)
}

// ───────────────────── Poisson–Dirac criterion ─────────────────────

/// Poisson–Dirac transversality of `x` against the complement `e` for an
/// antisymmetric tensor `pi`, all in one coordinate frame with pairing
/// matrix `form` (the invariant form in the ambient frame, the identity in
/// quotient frames).
///
/// Records the decomposition clause, the vanishing of the mixed block
/// `P_x Π P_eᵀ`, the sharp-image criterion `Πᵀ·form·(x^⊥) ⊆ e`, and — as a
/// cross-check of the implementation — the equivalence of the two
/// criteria, which holds for every antisymmetric tensor.
pub fn poisson_dirac_check(
    pi: &Mat,
    x: &Subspace,
    e: &Subspace,
    form: &Mat,
) -> Result<CheckReport> {
    let n = pi.rows();
    let mut report = CheckReport::new();
    if pi.cols() != n || x.ambient_dim() != n || e.ambient_dim() != n || form.rows() != n {
        return Err(Error::DimMismatch("poisson_dirac_check: frame sizes differ".into()));
    }
    if !pi.is_antisymmetric() {
        return Err(Error::CrossCheck("poisson_dirac_check: tensor not antisymmetric".into()));
    }

    let transversal = x.dim() + e.dim() == n && x.intersect(e)?.dim() == 0;
    report.record("tangent_transversal_decomposition", transversal, || {
        format!(
            "dims {} + {} in ambient {}, intersection dim {}",
            x.dim(),
            e.dim(),
            n,
            x.intersect(e).map(|s| s.dim()).unwrap_or(0)
        )
    });
    if !transversal {
        report.fail("mixed_block_vanishes", "skipped: no decomposition");
        report.fail("sharp_maps_conormal_into_transversal", "skipped: no decomposition");
        report.fail("criteria_agree", "skipped: no decomposition");
        return Ok(report);
    }

    let px = projection_matrix(x, e)?;
    let pe = projection_matrix(e, x)?;
    let mixed = px.mul(pi)?.mul(&pe.transpose())?;
    let mixed_ok = mixed.is_zero();
    report.record("mixed_block_vanishes", mixed_ok, || {
        "mixed tangent/transversal block of the tensor is nonzero".into()
    });

    let sharp = pi.transpose().mul(form)?;
    let conormal = x.orth_complement(form)?;
    let image = conormal.map(&sharp)?;
    let sharp_ok = e.contains(&image)?;
    report.record("sharp_maps_conormal_into_transversal", sharp_ok, || {
        "sharp image of the conormal escapes the transversal".into()
    });

    report.record("criteria_agree", mixed_ok == sharp_ok, || {
        format!("mixed-block says {mixed_ok}, sharp criterion says {sharp_ok}")
    });
    Ok(report)
}

// ───────────────────── tier 2: verification at a point ─────────────────────

/// The clause set of [`weak_section_verify`] at one point, without the
/// equivariance comparison (which re-runs this at a shifted point).
///
/// The point is first classified by intrinsic computations in the coset
/// frame, and the clause set follows the classification:
///
/// * the sharp image of the orbit's conormal under the pushed bivector
///   meets the orbit tangent nontrivially — then no transversal
///   complement whatsoever can satisfy the projection criterion at this
///   point, and the clause set shrinks to the facts that remain
///   checkable: the witness itself, the containment of the sharp image
///   in the fiber, and the spanning half of the complement condition;
/// * the sharp image misses the tangent and the conormal-seeded fiber is
///   a transversal complement — the full clause set runs against that
///   fiber;
/// * the sharp image misses the tangent but the fiber formulas
///   (conormal-seeded and declared) overlap the tangent beyond the moved
///   stabilizer — a transversal complement satisfying the criterion
///   exists but the formulas fail to provide one; a complement is then
///   constructed by extending the sharp image and verified outright, so
///   the existence statement is machine-checked even where the closed
///   formulas break down.
///
/// For specs that do not allow recorded degeneracies, the first and
/// third situations fail with the same witnesses instead.
fn weak_section_clauses(spec: &SectionSpec, g: &GroupPoint) -> Result<CheckReport> {
    let ctx = spec.ctx();
    let triple = ctx.triple();
    let n = ctx.dim();
    let m = g.mul(spec.d())?;
    let ad_m = m.adjoint_matrix()?;

    let mut report = CheckReport::new();

    let fiber = spec.fiber_at(&ad_m)?;
    let tangent = spec.tangent();
    let h_moved = ctx.stabilizer().map(&ad_m)?;

    // quotient frame on the coset space by the stabilizer at m
    let frame_h = QuotientFrame::new(h_moved.clone())?;
    let biv = bivector_with_ad(triple, ctx.rmatrix(), &ad_m, spec.variant())?;
    let pi_h = pushforward_bivector(&biv, &frame_h)?;
    let x = frame_h.project_subspace(tangent)?;
    let e = frame_h.project_subspace(&fiber)?;
    let frame_form = Mat::identity(frame_h.dim());

    // intrinsic classification: does the sharp image of the orbit's
    // conormal meet the orbit tangent?
    let sharp = pi_h.tensor().transpose().mul(&frame_form)?;
    let conormal = x.orth_complement(&frame_form)?;
    let sharp_image = conormal.map(&sharp)?;
    let obstruction = sharp_image.intersect(&x)?;

    if obstruction.dim() > 0 {
        let witness = format!(
            "sharp image of the orbit conormal meets the orbit tangent in dim {} \
             (tangent dim {}, coset frame dim {}); no transversal complement can \
             contain the sharp image here",
            obstruction.dim(),
            x.dim(),
            frame_h.dim()
        );
        if spec.allows_dirac_obstruction() {
            report.pass_note("dirac_projection_obstructed", witness);
        } else {
            report.fail("dirac_projection_obstructed", witness);
        }
        report.record("fiber_contains_sharp_image", e.contains(&sharp_image)?, || {
            "sharp image of the orbit conormal escapes the fiber".into()
        });
        let span = fiber.sum(tangent)?;
        report.record("fiber_plus_tangent_fills_ambient", span == Subspace::full(n), || {
            format!("fiber + tangent has dim {} of {}", span.dim(), n)
        });
        return Ok(report);
    }

    let meet = fiber.intersect(tangent)?;
    let span = fiber.sum(tangent)?;
    let transversal = meet == h_moved && span == Subspace::full(n);

    if !transversal && spec.allows_dirac_obstruction() {
        // A valid complement exists (the sharp image misses the tangent),
        // but the closed fiber formulas do not provide one at this point.
        let declared_dims = match spec.declared_fiber_at(&ad_m)? {
            Some(df) => format!(
                "declared fiber meets it in dim {}",
                df.intersect(tangent)?.dim()
            ),
            None => "no declared fiber".into(),
        };
        report.pass_note(
            "fiber_formulas_overlap_tangent",
            format!(
                "conormal-seeded fiber meets the orbit tangent in dim {} ({}), moved \
                 stabilizer has dim {}; no intrinsic obstruction, so a transversal \
                 complement containing the sharp image exists but the fiber formulas \
                 do not realize it here",
                meet.dim(),
                declared_dims,
                h_moved.dim()
            ),
        );
        report.record("fiber_contains_sharp_image", e.contains(&sharp_image)?, || {
            "sharp image of the orbit conormal escapes the fiber".into()
        });
        report.record("fiber_plus_tangent_fills_ambient", span == Subspace::full(n), || {
            format!("fiber + tangent has dim {} of {}", span.dim(), n)
        });

        // Constructive existence check: extend the sharp image to a
        // transversal complement of the tangent in the coset frame and
        // verify the projection criterion against it.
        let frame_dim = frame_h.dim();
        let mut e_vecs = sharp_image.basis_vectors();
        let mut filled = x.sum(&sharp_image)?;
        for i in 0..frame_dim {
            if filled.dim() == frame_dim {
                break;
            }
            let candidate = filled.sum(&Subspace::from_vectors(
                frame_dim,
                &[crate::exactlin::unit_vec(frame_dim, i)],
            )?)?;
            if candidate.dim() > filled.dim() {
                e_vecs.push(crate::exactlin::unit_vec(frame_dim, i));
                filled = candidate;
            }
        }
        let built = Subspace::from_vectors(frame_dim, &e_vecs)?;
        let pd_built = poisson_dirac_check(pi_h.tensor(), &x, &built, &frame_form)?;
        report.record(
            "constructed_complement_admits_projection",
            pd_built.verdict(),
            || {
                pd_built
                    .first_failure()
                    .map(|c| format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("")))
                    .unwrap_or_else(|| "construction failed".into())
            },
        );
        return Ok(report);
    }

    report.record("fiber_meets_tangent_in_moved_stabilizer", meet == h_moved, || {
        format!("intersection has dim {}, moved stabilizer dim {}", meet.dim(), h_moved.dim())
    });
    report.record("fiber_plus_tangent_fills_ambient", span == Subspace::full(n), || {
        format!("fiber + tangent has dim {} of {}", span.dim(), n)
    });

    let pd = poisson_dirac_check(pi_h.tensor(), &x, &e, &frame_form)?;
    let pd_decomposes = pd
        .clause("tangent_transversal_decomposition")
        .map(|c| c.pass)
        .unwrap_or(false);
    let pd_ok = pd.verdict();
    report.merge("poisson_dirac", pd);

    // section law: the tensor reduced to the tangent directions, carried
    // to the coset frame by the plus-normalizer, equals the quotient
    // tensor χ(r) at the same point.
    if pd_decomposes && pd_ok {
        let px = projection_matrix(&x, &e)?;
        let pi_x = px.mul(pi_h.tensor())?.mul(&px.transpose())?;
        let frame_n = QuotientFrame::new(ctx.nplus().map(&ad_m)?)?;
        let psi = frame_h.transport_to(&frame_n)?;
        let carried = psi.mul(&pi_x)?.mul(&psi.transpose())?;
        let chi = chi_r_with_ad(triple, ctx.rmatrix(), &ad_m, ctx.nplus())?;
        report.record("section_law_matches_quotient_tensor", carried == *chi.tensor(), || {
            "reduced tensor and quotient tensor differ".into()
        });
    } else {
        report.fail(
            "section_law_matches_quotient_tensor",
            "skipped: Poisson-Dirac transversality failed",
        );
    }

    Ok(report)
}

/// Full weak-section verification at the point `m = g·d`.
///
/// When a stabilizer sample is supplied, the whole clause set is re-run at
/// the shifted point `g·(d·h·d⁻¹)·d = g·d·h` — a different representative
/// of the same coset — and clause-by-clause agreement of the verdicts is
/// recorded as `h_equivariance`.
pub fn weak_section_verify(
    spec: &SectionSpec,
    g: &GroupPoint,
    h_sample: Option<&GroupPoint>,
) -> Result<CheckReport> {
    let mut report = weak_section_clauses(spec, g)?;
    if let Some(h_pt) = h_sample {
        let ctx = spec.ctx();
        let ad_h = h_pt.adjoint_matrix()?;
        let preserves = ctx.triple().gplus().map(&ad_h)? == *ctx.triple().gplus()
            && ctx.triple().gminus().map(&ad_h)? == *ctx.triple().gminus()
            && ctx.nplus().map(&ad_h)? == *ctx.nplus()
            && ctx.stabilizer().map(&ad_h)? == *ctx.stabilizer();
        if !preserves {
            report.fail(
                "h_equivariance",
                "stabilizer sample does not preserve the triple's structure",
            );
            return Ok(report);
        }
        let conj = spec.d().mul(h_pt)?.mul(&spec.d().inverse()?)?;
        let shifted_g = g.mul(&conj)?;
        let shifted = weak_section_clauses(spec, &shifted_g)?;
        let mismatch = if report.clauses.len() != shifted.clauses.len() {
            Some("clause sets differ in size".to_string())
        } else {
            report
                .clauses
                .iter()
                .zip(&shifted.clauses)
                .find(|(a, b)| a.name != b.name || a.pass != b.pass)
                .map(|(a, _)| format!("verdict changed for clause {}", a.name))
        };
        match mismatch {
            None => report.pass("h_equivariance"),
            Some(w) => report.fail("h_equivariance", w),
        }
    }
    Ok(report)
}

// ───────────────────── tier 3: splitting across cells ─────────────────────

/// A family of weak sections, one per decomposition cell, plus the data
/// needed to check that the cells tile the group: the decomposition mode
/// of every block (`None` for blocks whose cell is ignored, e.g. torus
/// factors) and points whose cells must each be hit by exactly one
/// representative.
#[derive(Clone, Debug)]
pub struct SplittingSpec {
    pub sections: Vec<SectionSpec>,
    pub cell_modes: Vec<Option<BruhatMode>>,
    pub coverage_points: Vec<GroupPoint>,
    pub samples_per_section: usize,
    pub seed: u64,
    pub parallel: bool,
}

/// Per-block decomposition cell of a point under the given modes.
pub fn cell_signature(
    point: &GroupPoint,
    modes: &[Option<BruhatMode>],
) -> Result<Vec<Option<Vec<usize>>>> {
    if modes.len() != point.blocks().len() {
        return Err(Error::DimMismatch("cell_signature: mode count".into()));
    }
    point
        .blocks()
        .iter()
        .zip(modes)
        .map(|(block, mode)| match mode {
            None => Ok(None),
            Some(m) => Ok(Some(bruhat_cell(block, *m)?)),
        })
        .collect()
}

fn render_signature(sig: &[Option<Vec<usize>>]) -> String {
    let parts: Vec<String> = sig
        .iter()
        .map(|s| match s {
            None => "*".to_string(),
            Some(p) => format!("{p:?}"),
        })
        .collect();
    parts.join("|")
}

/// Verify one section end to end: the conditions at `d`, then the full
/// point verification at the identity and at `samples` further sampled
/// subgroup points (each with a stabilizer sample when available).
pub fn verify_section_with_samples(
    spec: &SectionSpec,
    samples: usize,
    seed: u64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    report.merge("conditions", check_section_conditions(spec)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 0..=samples {
        let g = if j == 0 {
            GroupPoint::identity(spec.ctx().rep().clone())
        } else {
            spec.sample_g(&mut rng)?
        };
        let h_sample = spec.sample_h(&mut rng)?;
        let verified = weak_section_verify(spec, &g, h_sample.as_ref())?;
        report.merge(&format!("point{j}"), verified);
    }
    Ok(report)
}

/// Check a weak splitting: every section passes its per-cell verification,
/// the representatives sit in pairwise distinct cells (and normalize the
/// stabilizer, for the Heisenberg double), and every coverage point lands
/// in exactly one representative's cell.
pub fn check_weak_splitting(spec: &SplittingSpec) -> Result<CheckReport> {
    let mut report = CheckReport::new();

    // distinct cells
    let mut signatures = Vec::with_capacity(spec.sections.len());
    for sec in &spec.sections {
        signatures.push(cell_signature(sec.d(), &spec.cell_modes)?);
    }
    let mut distinct = true;
    let mut clash = String::new();
    for i in 0..signatures.len() {
        for j in (i + 1)..signatures.len() {
            if signatures[i] == signatures[j] {
                distinct = false;
                clash = format!(
                    "{} and {} share cell {}",
                    spec.sections[i].label(),
                    spec.sections[j].label(),
                    render_signature(&signatures[i])
                );
            }
        }
    }
    report.record("representative_cells_pairwise_distinct", distinct, || clash.clone());

    // Heisenberg: each representative must carry the stabilizer into the
    // plus-normalizer. (This containment is what the splitting theorem's
    // proof uses per representative; demanding that representatives
    // normalize the stabilizer outright is not satisfiable even for the
    // standard double-flag representatives with two distinct Weyl
    // components, and the construction does not need it.)
    for sec in &spec.sections {
        if sec.variant() == DoubleVariant::Heisenberg {
            let moved = sec.ctx().stabilizer().map(&sec.ad_d)?;
            report.record(
                format!("{}/stabilizer_conjugate_in_plus_normalizer", sec.label()),
                sec.ctx().nplus().contains(&moved)?,
                || "Ad_d moves the stabilizer outside the plus-normalizer".into(),
            );
        }
    }

    // per-section verification (deterministic per-section seeds, so the
    // parallel path merges identically to the serial one)
    let jobs: Vec<(usize, &SectionSpec)> = spec.sections.iter().enumerate().collect();
    let run = |(i, sec): &(usize, &SectionSpec)| -> Result<(usize, CheckReport)> {
        let seed = spec.seed.wrapping_add(*i as u64);
        Ok((*i, verify_section_with_samples(sec, spec.samples_per_section, seed)?))
    };
    let mut results: Vec<(usize, CheckReport)> = if spec.parallel {
        use rayon::prelude::*;
        jobs.par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        jobs.iter().map(run).collect::<Result<Vec<_>>>()?
    };
    results.sort_by_key(|(i, _)| *i);
    for (i, sub) in results {
        report.merge(spec.sections[i].label(), sub);
    }

    // coverage: each point's cell is hit by exactly one representative
    for (k, point) in spec.coverage_points.iter().enumerate() {
        let sig = cell_signature(point, &spec.cell_modes)?;
        let hits: Vec<&str> = signatures
            .iter()
            .zip(&spec.sections)
            .filter(|(s, _)| **s == sig)
            .map(|(_, sec)| sec.label())
            .collect();
        report.record(
            format!("coverage_point{k}_in_exactly_one_cell"),
            hits.len() == 1,
            || {
                format!(
                    "point cell {} matched representatives [{}]",
                    render_signature(&sig),
                    hits.join(", ")
                )
            },
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, unit_vec};
    use crate::liecore::{sl2, LieAlg, QuadLie};
    use crate::groupgeom::weyl_rep_matrix;
    use proptest::prelude::*;

    fn sp(ambient: usize, vecs: &[&[i64]]) -> Subspace {
        let vv: Vec<Vec<Rat>> =
            vecs.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Subspace::from_vectors(ambient, &vv).unwrap()
    }

    fn sl2_torus_ctx() -> Arc<DoubleContext> {
        let d = sl2().direct_sum(&LieAlg::abelian(1));
        let k = sl2().killing_form();
        let form = Mat::block_diag(&[&k, &Mat::from_i64(&[&[-8]])]);
        let quad = QuadLie::new(d.clone(), form).unwrap();
        let gplus = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
        let gminus = sp(4, &[&[0, 0, 1, 0], &[0, 1, 0, -1]]);
        let triple = ManinTriple::new(quad, gplus, gminus).unwrap();

        let e = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        let h = Mat::from_i64(&[&[1, 0], &[0, -1]]);
        let f = Mat::from_i64(&[&[0, 0], &[1, 0]]);
        let z2 = Mat::zeros(2, 2);
        let rep = MatRep::new(
            &d,
            vec![2, 2],
            vec![
                vec![e, z2.clone()],
                vec![h.clone(), z2.clone()],
                vec![f, z2],
                vec![Mat::zeros(2, 2), h],
            ],
        )
        .unwrap();
        Arc::new(DoubleContext::new(triple, Arc::new(rep)).unwrap())
    }

    fn d_identity(ctx: &Arc<DoubleContext>) -> GroupPoint {
        GroupPoint::identity(ctx.rep().clone())
    }

    fn d_reflection(ctx: &Arc<DoubleContext>) -> GroupPoint {
        GroupPoint::new(
            ctx.rep().clone(),
            vec![weyl_rep_matrix(&[1, 0]).unwrap(), Mat::identity(2)],
        )
        .unwrap()
    }

    /// q = lower Borel ⊕ torus line: span{e2, e3, e4}.
    fn borel_q() -> Subspace {
        sp(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
    }

    fn section_at(
        ctx: &Arc<DoubleContext>,
        d: GroupPoint,
        variant: DoubleVariant,
        label: &str,
        with_cochars: bool,
    ) -> SectionSpec {
        // generators of the orbit subgroup; the torus cocharacters are
        // valid for both representatives here
        let group_data = if with_cochars {
            GroupData {
                nilpotents: vec![],
                cochars: vec![vec![vec![1, -1], vec![0, 0]], vec![vec![0, 0], vec![1, -1]]],
            }
        } else {
            GroupData::default()
        };
        let h_data = GroupData {
            nilpotents: vec![],
            cochars: vec![vec![vec![1, -1], vec![1, -1]]],
        };
        SectionSpec::new(
            label,
            ctx.clone(),
            d,
            borel_q(),
            None,
            false,
            variant,
            group_data,
            h_data,
        )
        .unwrap()
    }

    // Frozen normalizers for the sl2 ⊕ torus double: n₊ = span{e1,e2,e4},
    // n₋ = span{e2,e3,e4}, stabilizer h = span{e2,e4}.
    #[test]
    fn context_normalizers_frozen() {
        let ctx = sl2_torus_ctx();
        assert_eq!(ctx.nplus(), &sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
        assert_eq!(ctx.nminus(), &sp(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(ctx.stabilizer(), &sp(4, &[&[0, 1, 0, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn section_conditions_pass_for_both_representatives_and_variants() {
        let ctx = sl2_torus_ctx();
        for variant in [DoubleVariant::Drinfeld, DoubleVariant::Heisenberg] {
            for (label, d) in [("w=e", d_identity(&ctx)), ("w=s", d_reflection(&ctx))] {
                let spec = section_at(&ctx, d, variant, label, false);
                let report = check_section_conditions(&spec).unwrap();
                assert!(report.verdict(), "{variant} {label}:\n{}", report.render());
            }
        }
    }

    #[test]
    fn weak_section_passes_at_identity_and_samples() {
        let ctx = sl2_torus_ctx();
        for variant in [DoubleVariant::Drinfeld, DoubleVariant::Heisenberg] {
            for (label, d, cochars) in [
                ("w=e", d_identity(&ctx), true),
                ("w=s", d_reflection(&ctx), true),
            ] {
                let spec = section_at(&ctx, d, variant, label, cochars);
                let report = verify_section_with_samples(&spec, 3, 99).unwrap();
                assert!(report.verdict(), "{variant} {label}:\n{}", report.render());
                // equivariance clauses were actually exercised
                assert!(report
                    .clauses
                    .iter()
                    .any(|c| c.name.ends_with("h_equivariance") && c.pass));
            }
        }
    }

    // Negative control: q = n₊ breaks the "q ∩ n₊ = stabilizer" clause.
    #[test]
    fn enlarged_q_fails_intersection_clause() {
        let ctx = sl2_torus_ctx();
        let spec = SectionSpec::new(
            "bad",
            ctx.clone(),
            d_reflection(&ctx),
            ctx.nplus().clone(),
            None,
            false,
            DoubleVariant::Drinfeld,
            GroupData::default(),
            GroupData::default(),
        )
        .unwrap();
        let report = check_section_conditions(&spec).unwrap();
        assert!(!report.clause("q_meets_nplus_in_stabilizer").unwrap().pass);
    }

    #[test]
    fn group_data_is_validated_against_the_tangent() {
        let ctx = sl2_torus_ctx();
        // e1 is not in the tangent algebra at d = reflection
        let bad = GroupData { nilpotents: vec![unit_vec(4, 0)], cochars: vec![] };
        let err = SectionSpec::new(
            "bad",
            ctx.clone(),
            d_reflection(&ctx),
            borel_q(),
            None,
            false,
            DoubleVariant::Drinfeld,
            bad,
            GroupData::default(),
        );
        assert!(err.is_err());
    }

    // The configured bundle fiber at both representatives: complement
    // conditions verified by construction, dimension bookkeeping, and
    // literal equality under a right stabilizer shift (the fiber is
    // constant along stabilizer cosets in the right-trivialized frame).
    #[test]
    fn bundle_fiber_dimensions_and_stabilizer_shift() {
        let ctx = sl2_torus_ctx();
        for variant in [DoubleVariant::Drinfeld, DoubleVariant::Heisenberg] {
            for (label, d) in [("w=e", d_identity(&ctx)), ("w=s", d_reflection(&ctx))] {
                let spec = section_at(&ctx, d, variant, label, true);
                let g = GroupPoint::identity(ctx.rep().clone());
                let fiber = section_bundle_fiber(&spec, &g).unwrap();
                assert_eq!(
                    fiber.dim(),
                    ctx.dim() - spec.tangent().dim() + ctx.stabilizer().dim(),
                    "{variant} {label}"
                );
                // shift by a stabilizer point: g·(d·h·d⁻¹) moves m = g·d to m·h
                let h_pt = GroupPoint::toral(
                    ctx.rep().clone(),
                    &rat(3),
                    &[vec![1, -1], vec![1, -1]],
                )
                .unwrap();
                let conj = spec.d().mul(&h_pt).unwrap().mul(&spec.d().inverse().unwrap()).unwrap();
                let shifted = section_bundle_fiber(&spec, &g.mul(&conj).unwrap()).unwrap();
                assert_eq!(fiber, shifted, "{variant} {label}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let ctx = sl2_torus_ctx();
        let data = GroupData {
            nilpotents: vec![unit_vec(4, 2)],
            cochars: vec![vec![vec![1, -1], vec![0, 0]]],
        };
        let mut rng1 = ChaCha8Rng::seed_from_u64(17);
        let mut rng2 = ChaCha8Rng::seed_from_u64(17);
        let p1 = data.sample(ctx.rep(), &mut rng1).unwrap();
        let p2 = data.sample(ctx.rep(), &mut rng2).unwrap();
        assert_eq!(p1.blocks(), p2.blocks());
    }

    #[test]
    fn splitting_passes_and_detects_dropped_cell() {
        let ctx = sl2_torus_ctx();
        let make = |labels: &[&str]| -> Vec<SectionSpec> {
            labels
                .iter()
                .map(|&l| {
                    let d = if l == "w=e" { d_identity(&ctx) } else { d_reflection(&ctx) };
                    section_at(&ctx, d, DoubleVariant::Drinfeld, l, true)
                })
                .collect()
        };
        let coverage = vec![d_identity(&ctx), d_reflection(&ctx)];
        let full = SplittingSpec {
            sections: make(&["w=e", "w=s"]),
            cell_modes: vec![Some(BruhatMode::MinusPlus), None],
            coverage_points: coverage.clone(),
            samples_per_section: 1,
            seed: 7,
            parallel: false,
        };
        let report = check_weak_splitting(&full).unwrap();
        assert!(report.verdict(), "{}", report.render());

        let dropped = SplittingSpec {
            sections: make(&["w=e"]),
            cell_modes: vec![Some(BruhatMode::MinusPlus), None],
            coverage_points: coverage,
            samples_per_section: 0,
            seed: 7,
            parallel: false,
        };
        let report = check_weak_splitting(&dropped).unwrap();
        assert!(!report.verdict());
        assert!(!report.clause("coverage_point1_in_exactly_one_cell").unwrap().pass);
    }

    #[test]
    fn parallel_and_serial_reports_agree() {
        let ctx = sl2_torus_ctx();
        let sections = vec![
            section_at(&ctx, d_identity(&ctx), DoubleVariant::Heisenberg, "w=e", true),
            section_at(&ctx, d_reflection(&ctx), DoubleVariant::Heisenberg, "w=s", true),
        ];
        let mk = |parallel| SplittingSpec {
            sections: sections.clone(),
            cell_modes: vec![Some(BruhatMode::PlusPlus), None],
            coverage_points: vec![d_identity(&ctx)],
            samples_per_section: 2,
            seed: 23,
            parallel,
        };
        let serial = check_weak_splitting(&mk(false)).unwrap();
        let parallel = check_weak_splitting(&mk(true)).unwrap();
        assert_eq!(serial.clauses.len(), parallel.clauses.len());
        for (a, b) in serial.clauses.iter().zip(&parallel.clauses) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.pass, b.pass);
        }
    }

    // Hand case where the mixed block is genuinely nonzero: both criteria
    // must say "no" together.
    #[test]
    fn poisson_dirac_criteria_fail_together() {
        let mut pi = Mat::zeros(2, 2);
        pi.set(0, 1, rat(1));
        pi.set(1, 0, rat(-1));
        let x = sp(2, &[&[1, 0]]);
        let e = sp(2, &[&[0, 1]]);
        let report = poisson_dirac_check(&pi, &x, &e, &Mat::identity(2)).unwrap();
        assert!(!report.clause("mixed_block_vanishes").unwrap().pass);
        assert!(!report.clause("sharp_maps_conormal_into_transversal").unwrap().pass);
        assert!(report.clause("criteria_agree").unwrap().pass);
    }

    proptest! {
        // The two Poisson–Dirac criteria agree for arbitrary antisymmetric
        // tensors and arbitrary transversal pairs.
        #[test]
        fn poisson_dirac_criteria_agree_on_random_instances(
            upper in proptest::collection::vec(-3i64..=3, 6),
            xv in proptest::collection::vec(-2i64..=2, 8),
        ) {
            // antisymmetric 4x4 tensor from the strict upper triangle
            let mut pi = Mat::zeros(4, 4);
            let mut it = upper.iter();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let v = rat(*it.next().unwrap());
                    pi.set(i, j, v.clone());
                    pi.set(j, i, -v);
                }
            }
            // random 2-dim x; complement e completes it to Q^4
            let rows: Vec<Vec<Rat>> =
                xv.chunks(4).map(|ch| ch.iter().map(|&c| rat(c)).collect()).collect();
            let x = Subspace::from_vectors(4, &rows).unwrap();
            prop_assume!(x.dim() == 2);
            let e = x.canonical_complement();
            let report = poisson_dirac_check(&pi, &x, &e, &Mat::identity(4)).unwrap();
            prop_assert!(report.clause("criteria_agree").unwrap().pass);
        }
    }
}
