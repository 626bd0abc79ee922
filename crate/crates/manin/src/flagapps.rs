//! Built-in flag-variety configurations for `sl_n`.
//!
//! Two standard double constructions ship ready to run:
//!
//! * **group × torus** — the double `sl_n ⊕ t` with its Borel-type halves,
//!   whose quotient is the full flag variety; supports both the Drinfeld
//!   and the Heisenberg structure, with cells indexed by the Weyl group;
//! * **group × group** — the double `sl_n ⊕ sl_n` with the twisted-Borel
//!   and diagonal halves, whose quotient is the product of two opposite
//!   flag varieties; supports the Heisenberg structure only, with cells
//!   indexed by pairs of Weyl group elements.
//!
//! Everything is exact: Weyl representatives are signed permutation
//! matrices of determinant one, tori are rational, and unipotents have
//! rational entries.

use crate::doublepoisson::DoubleVariant;
use crate::error::{Error, Result};
use crate::exactlin::{rat, unit_vec, vec_zero, Mat, Rat, Subspace};
use crate::groupgeom::{
    perm_inverse, perm_length, weyl_rep_matrix, BruhatMode, GroupPoint, MatRep,
};
use crate::liecore::LieAlg;
use crate::liecore::QuadLie;
use crate::maningen::ManinTriple;
use crate::report::CheckReport;
use crate::sampling::{random_nonzero_rat, random_rat, rng_from_seed, DEFAULT_SEED};
use crate::splitcheck::{check_weak_splitting, DoubleContext, GroupData, SectionSpec, SplittingSpec};
use num_traits::One;
use rand::Rng;
use std::collections::HashSet;
use std::sync::Arc;

// ───────────────────── sl(n) structure ─────────────────────

/// Basis bookkeeping for `sl_n`: off-diagonal units `E_ij` (upper
/// triangle first, then the simple coroot differences `H_k`, then the
/// lower triangle), each triangle in lexicographic order.
struct SlBasis {
    n: usize,
    npos: usize,
    /// index of E_ij for i ≠ j
    offdiag: Vec<Vec<Option<usize>>>,
}

impl SlBasis {
    fn new(n: usize) -> SlBasis {
        let npos = n * (n - 1) / 2;
        let mut offdiag = vec![vec![None; n]; n];
        let mut next = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                offdiag[i][j] = Some(next);
                next += 1;
            }
        }
        next += n - 1; // skip the Cartan block
        for i in 0..n {
            for j in 0..i {
                offdiag[i][j] = Some(next);
                next += 1;
            }
        }
        SlBasis { n, npos, offdiag }
    }

    fn dim(&self) -> usize {
        self.n * self.n - 1
    }

    fn root_index(&self, i: usize, j: usize) -> usize {
        self.offdiag[i][j].expect("root_index requires i != j")
    }

    fn cartan_index(&self, k: usize) -> usize {
        self.npos + k
    }

    /// The basis as n×n matrices, in index order.
    fn matrices(&self) -> Vec<Mat> {
        let n = self.n;
        let mut mats = vec![Mat::zeros(n, n); self.dim()];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = Mat::zeros(n, n);
                    m.set(i, j, rat(1));
                    mats[self.root_index(i, j)] = m;
                }
            }
        }
        for k in 0..(n - 1) {
            let mut m = Mat::zeros(n, n);
            m.set(k, k, rat(1));
            m.set(k + 1, k + 1, rat(-1));
            mats[self.cartan_index(k)] = m;
        }
        mats
    }

    /// Coordinates of a traceless matrix in this basis.
    fn expand(&self, m: &Mat) -> Result<Vec<Rat>> {
        let n = self.n;
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimMismatch("sl expansion: wrong matrix size".into()));
        }
        let mut coords = vec_zero(self.dim());
        let mut partial = Rat::from_integer(0.into());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coords[self.root_index(i, j)] = m.at(i, j).clone();
                }
            }
            partial += m.at(i, i);
            if i + 1 < n {
                coords[self.cartan_index(i)] = partial.clone();
            }
        }
        if !num_traits::Zero::is_zero(&partial) {
            return Err(Error::BadStructure("sl expansion: matrix has nonzero trace".into()));
        }
        Ok(coords)
    }
}

/// The Lie algebra `sl_n` with structure constants computed from matrix
/// commutators in the triangular basis order.
pub fn sln_alg(n: usize) -> Result<LieAlg> {
    if n < 2 {
        return Err(Error::BadStructure("sl_n needs n >= 2".into()));
    }
    let basis = SlBasis::new(n);
    let mats = basis.matrices();
    let dim = basis.dim();
    let mut consts = vec![vec![vec_zero(dim); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let comm = mats[i].mul(&mats[j])?.sub(&mats[j].mul(&mats[i])?)?;
            consts[i][j] = basis.expand(&comm)?;
        }
    }
    LieAlg::new(dim, consts)
}

// ───────────────────── Weyl group enumeration ─────────────────────

/// A Weyl group element: its one-line permutation and one reduced word
/// in the simple reflections (0-based generator indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylWord {
    pub perm: Vec<usize>,
    pub word: Vec<usize>,
}

impl WeylWord {
    /// Human label: `e` for the identity, otherwise e.g. `s1s2`.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        self.word.iter().map(|k| format!("s{}", k + 1)).collect()
    }
}

/// All of the symmetric group S_n with reduced words, breadth-first by
/// length, sorted by (length, word) for a deterministic order.
pub fn weyl_elements(n: usize) -> Vec<WeylWord> {
    let identity: Vec<usize> = (0..n).collect();
    let mut out = vec![WeylWord { perm: identity.clone(), word: vec![] }];
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(identity);
    let mut cursor = 0;
    while cursor < out.len() {
        let current = out[cursor].clone();
        for k in 0..n.saturating_sub(1) {
            // right multiplication by s_k lengthens iff entries ascend
            if current.perm[k] < current.perm[k + 1] {
                let mut perm = current.perm.clone();
                perm.swap(k, k + 1);
                if seen.insert(perm.clone()) {
                    let mut word = current.word.clone();
                    word.push(k);
                    out.push(WeylWord { perm, word });
                }
            }
        }
        cursor += 1;
    }
    out.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
    out
}

/// Minimal-length coset representatives for W/W_I, where `parabolic`
/// lists 1-based simple reflection numbers. An element is minimal in its
/// coset exactly when it ascends at every listed position.
pub fn minimal_coset_reps(n: usize, parabolic: &[usize]) -> Result<Vec<WeylWord>> {
    if n < 2 {
        return Err(Error::BadStructure("coset enumeration needs n >= 2".into()));
    }
    for &i in parabolic {
        if i == 0 || i >= n {
            return Err(Error::BadStructure(format!(
                "simple reflection s{i} out of range for rank {}",
                n - 1
            )));
        }
    }
    Ok(weyl_elements(n)
        .into_iter()
        .filter(|w| parabolic.iter().all(|&i| w.perm[i - 1] < w.perm[i]))
        .collect())
}

// ───────────────────── the built-in cases ─────────────────────

/// Which standard double a [`FlagCase`] is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseKind {
    /// `sl_n ⊕ t`: quotient is the full flag variety.
    GroupTorus,
    /// `sl_n ⊕ sl_n`: quotient is the double flag variety.
    GroupGroup,
}

impl std::fmt::Display for CaseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseKind::GroupTorus => write!(f, "gxt"),
            CaseKind::GroupGroup => write!(f, "gxg"),
        }
    }
}

/// One cell representative: Weyl data per block and the group point.
#[derive(Clone, Debug)]
pub struct WeylRep {
    pub label: String,
    pub perms: Vec<Vec<usize>>,
    pub point: GroupPoint,
}

/// A ready-made flag-variety configuration: the double context, the
/// section subalgebra, and the Weyl cell representatives.
#[derive(Clone, Debug)]
pub struct FlagCase {
    kind: CaseKind,
    n: usize,
    ctx: Arc<DoubleContext>,
    q_alg: Subspace,
    declared_seed: Option<Subspace>,
    base_weyl: Vec<WeylWord>,
    reps: Vec<WeylRep>,
}

impl FlagCase {
    pub fn standard_gxt(n: usize) -> Result<FlagCase> {
        if n < 2 {
            return Err(Error::BadStructure("flag case needs n >= 2".into()));
        }
        let basis = SlBasis::new(n);
        let sl = sln_alg(n)?;
        let sl_dim = basis.dim();
        let torus_dim = n - 1;
        let dim = sl_dim + torus_dim;
        let alg = sl.direct_sum(&LieAlg::abelian(torus_dim));

        let k_form = sl.killing_form();
        let mut k_torus = Mat::zeros(torus_dim, torus_dim);
        for a in 0..torus_dim {
            for b in 0..torus_dim {
                k_torus.set(a, b, k_form.at(basis.cartan_index(a), basis.cartan_index(b)).clone());
            }
        }
        let form = Mat::block_diag(&[&k_form, &k_torus.neg()]);
        let quad = QuadLie::new(alg.clone(), form)?;

        let mut gplus = Vec::new();
        let mut gminus = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    gplus.push(unit_vec(dim, basis.root_index(i, j)));
                } else if i > j {
                    gminus.push(unit_vec(dim, basis.root_index(i, j)));
                }
            }
        }
        for k in 0..torus_dim {
            let mut plus = unit_vec(dim, basis.cartan_index(k));
            plus[sl_dim + k] = rat(1);
            gplus.push(plus);
            let mut minus = unit_vec(dim, basis.cartan_index(k));
            minus[sl_dim + k] = rat(-1);
            gminus.push(minus);
        }
        let gplus = Subspace::from_vectors(dim, &gplus)?;
        let gminus = Subspace::from_vectors(dim, &gminus)?;
        let triple = ManinTriple::new(quad, gplus, gminus)?;

        // matrix realization: two n×n blocks, the second one diagonal
        let sl_mats = basis.matrices();
        let zero_block = Mat::zeros(n, n);
        let mut images = Vec::with_capacity(dim);
        for m in &sl_mats {
            images.push(vec![m.clone(), zero_block.clone()]);
        }
        for k in 0..torus_dim {
            images.push(vec![zero_block.clone(), sl_mats[basis.cartan_index(k)].clone()]);
        }
        let rep = Arc::new(MatRep::new(&alg, vec![n, n], images)?);
        let ctx = Arc::new(DoubleContext::new(triple, rep.clone())?);
        if ctx.stabilizer().dim() != 2 * (n - 1) {
            return Err(Error::CrossCheck("group×torus stabilizer has unexpected dimension".into()));
        }

        let mut q_vecs = Vec::new();
        for i in 0..n {
            for j in 0..i {
                q_vecs.push(unit_vec(dim, basis.root_index(i, j)));
            }
        }
        for k in 0..torus_dim {
            q_vecs.push(unit_vec(dim, basis.cartan_index(k)));
            q_vecs.push(unit_vec(dim, sl_dim + k));
        }
        let q_alg = Subspace::from_vectors(dim, &q_vecs)?;

        let base_weyl = weyl_elements(n);
        let mut reps = Vec::with_capacity(base_weyl.len());
        for w in &base_weyl {
            let point = GroupPoint::new(
                rep.clone(),
                vec![weyl_rep_matrix(&w.perm)?, Mat::identity(n)],
            )?;
            reps.push(WeylRep {
                label: format!("w={}", w.label()),
                perms: vec![w.perm.clone()],
                point,
            });
        }

        Ok(FlagCase {
            kind: CaseKind::GroupTorus,
            n,
            ctx,
            q_alg,
            declared_seed: None,
            base_weyl,
            reps,
        })
    }

    pub fn standard_gxg(n: usize) -> Result<FlagCase> {
        if n < 2 {
            return Err(Error::BadStructure("flag case needs n >= 2".into()));
        }
        let basis = SlBasis::new(n);
        let sl = sln_alg(n)?;
        let sl_dim = basis.dim();
        let dim = 2 * sl_dim;
        let alg = sl.direct_sum(&sl);

        let k_form = sl.killing_form();
        let form = Mat::block_diag(&[&k_form, &k_form.neg()]);
        let quad = QuadLie::new(alg.clone(), form)?;

        let mut gplus = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < j {
                    gplus.push(unit_vec(dim, basis.root_index(i, j)));
                } else if i > j {
                    gplus.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                }
            }
        }
        for k in 0..(n - 1) {
            let mut v = unit_vec(dim, basis.cartan_index(k));
            v[sl_dim + basis.cartan_index(k)] = rat(-1);
            gplus.push(v);
        }
        let mut gminus = Vec::new();
        for b in 0..sl_dim {
            let mut v = unit_vec(dim, b);
            v[sl_dim + b] = rat(1);
            gminus.push(v);
        }
        let gplus = Subspace::from_vectors(dim, &gplus)?;
        let gminus = Subspace::from_vectors(dim, &gminus)?;
        let triple = ManinTriple::new(quad, gplus, gminus)?;

        let sl_mats = basis.matrices();
        let zero_block = Mat::zeros(n, n);
        let mut images = Vec::with_capacity(dim);
        for m in &sl_mats {
            images.push(vec![m.clone(), zero_block.clone()]);
        }
        for m in &sl_mats {
            images.push(vec![zero_block.clone(), m.clone()]);
        }
        let rep = Arc::new(MatRep::new(&alg, vec![n, n], images)?);
        let ctx = Arc::new(DoubleContext::new(triple, rep.clone())?);
        if ctx.stabilizer().dim() != n - 1 {
            return Err(Error::CrossCheck("group×group stabilizer has unexpected dimension".into()));
        }

        // q: lower triangle in the first factor, upper in the second,
        // plus the diagonal torus pairs; the declared fiber seed swaps
        // the torus pairs for their antidiagonal counterparts
        let mut q_vecs = Vec::new();
        let mut seed_vecs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    q_vecs.push(unit_vec(dim, basis.root_index(i, j)));
                    seed_vecs.push(unit_vec(dim, basis.root_index(i, j)));
                } else if i < j {
                    q_vecs.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                    seed_vecs.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                }
            }
        }
        for k in 0..(n - 1) {
            let mut v = unit_vec(dim, basis.cartan_index(k));
            v[sl_dim + basis.cartan_index(k)] = rat(1);
            q_vecs.push(v);
            let mut a = unit_vec(dim, basis.cartan_index(k));
            a[sl_dim + basis.cartan_index(k)] = rat(-1);
            seed_vecs.push(a);
        }
        let q_alg = Subspace::from_vectors(dim, &q_vecs)?;
        let declared_seed = Some(Subspace::from_vectors(dim, &seed_vecs)?);

        let base_weyl = weyl_elements(n);
        let mut reps = Vec::with_capacity(base_weyl.len() * base_weyl.len());
        for w in &base_weyl {
            for v in &base_weyl {
                let point = GroupPoint::new(
                    rep.clone(),
                    vec![weyl_rep_matrix(&w.perm)?, weyl_rep_matrix(&v.perm)?],
                )?;
                reps.push(WeylRep {
                    label: format!("w={},v={}", w.label(), v.label()),
                    perms: vec![w.perm.clone(), v.perm.clone()],
                    point,
                });
            }
        }

        Ok(FlagCase {
            kind: CaseKind::GroupGroup,
            n,
            ctx,
            q_alg,
            declared_seed,
            base_weyl,
            reps,
        })
    }

    pub fn kind(&self) -> CaseKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &Arc<DoubleContext> {
        &self.ctx
    }

    pub fn q_alg(&self) -> &Subspace {
        &self.q_alg
    }

    /// Declared fiber seed, for cases whose bundle formula fixes one
    /// explicitly (the group×group case, where the antidiagonal torus
    /// enters the seed).
    pub fn declared_seed(&self) -> Option<&Subspace> {
        self.declared_seed.as_ref()
    }

    pub fn weyl_reps(&self) -> &[WeylRep] {
        &self.reps
    }

    /// Decomposition mode per block for this case's cells: `None` marks a
    /// block whose cell is ignored (the torus factor).
    pub fn cell_modes(&self, variant: DoubleVariant) -> Vec<Option<BruhatMode>> {
        match self.kind {
            CaseKind::GroupTorus => {
                let mode = match variant {
                    DoubleVariant::Drinfeld => BruhatMode::MinusPlus,
                    DoubleVariant::Heisenberg => BruhatMode::PlusPlus,
                };
                vec![Some(mode), None]
            }
            CaseKind::GroupGroup => {
                vec![Some(BruhatMode::PlusPlus), Some(BruhatMode::MinusMinus)]
            }
        }
    }

    /// The simple cocharacter exponent vector `e_k − e_{k+1}`.
    fn simple_cochar(n: usize, k: usize) -> Vec<i64> {
        let mut a = vec![0i64; n];
        a[k] = 1;
        a[k + 1] = -1;
        a
    }

    /// Section specifications for every cell representative.
    pub fn section_specs(&self, variant: DoubleVariant) -> Result<Vec<SectionSpec>> {
        if self.kind == CaseKind::GroupGroup && variant == DoubleVariant::Drinfeld {
            return Err(Error::Unsupported(
                "the Drinfeld-double section construction does not apply to the \
                 group×group quotient; use the Heisenberg variant"
                    .into(),
            ));
        }
        let n = self.n;
        let basis = SlBasis::new(n);
        let sl_dim = basis.dim();
        let dim = self.ctx.dim();
        let mut specs = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            let mut nilpotents = Vec::new();
            let mut cochars = Vec::new();
            match self.kind {
                CaseKind::GroupTorus => {
                    let winv = perm_inverse(&rep.perms[0]);
                    for i in 0..n {
                        for j in 0..n {
                            let in_block = match variant {
                                DoubleVariant::Drinfeld => i > j,
                                DoubleVariant::Heisenberg => i < j,
                            };
                            if in_block && winv[i] > winv[j] {
                                nilpotents.push(unit_vec(dim, basis.root_index(i, j)));
                            }
                        }
                    }
                    for k in 0..(n - 1) {
                        cochars.push(vec![Self::simple_cochar(n, k), vec![0; n]]);
                        cochars.push(vec![vec![0; n], Self::simple_cochar(n, k)]);
                    }
                }
                CaseKind::GroupGroup => {
                    let winv = perm_inverse(&rep.perms[0]);
                    let vinv = perm_inverse(&rep.perms[1]);
                    for i in 0..n {
                        for j in 0..n {
                            if i < j && winv[i] > winv[j] {
                                nilpotents.push(unit_vec(dim, basis.root_index(i, j)));
                            }
                            if i > j && vinv[i] < vinv[j] {
                                nilpotents.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                            }
                        }
                    }
                    for k in 0..(n - 1) {
                        let a = Self::simple_cochar(n, k);
                        let block1: Vec<i64> = (0..n).map(|j| a[winv[j]]).collect();
                        let block2: Vec<i64> = (0..n).map(|j| a[vinv[j]]).collect();
                        cochars.push(vec![block1, block2]);
                    }
                }
            }
            let h_data = self.stabilizer_group_data();
            let group_data = GroupData { nilpotents, cochars };
            let mut span_vecs = group_data.nilpotents.clone();
            for cochar in &group_data.cochars {
                span_vecs.push(GroupData::cochar_derivative(self.ctx.rep(), cochar)?);
            }
            // Away from the base orbit, most group×group cells defeat the
            // projection claim in one of two ways: the sharp image of the
            // orbit conormal meets the tangent (no complement can work),
            // or the fiber formulas overlap the tangent even though a
            // complement exists (one is then constructed and verified).
            // Those points are classified and witnessed rather than
            // failed. The group×torus cells never degenerate.
            let spec = SectionSpec::new(
                rep.label.clone(),
                self.ctx.clone(),
                rep.point.clone(),
                self.q_alg.clone(),
                self.declared_seed.clone(),
                self.kind == CaseKind::GroupGroup,
                variant,
                group_data,
                h_data,
            )?;
            // the declared generators must span the whole orbit algebra
            let span = Subspace::from_vectors(dim, &span_vecs)?;
            if span != *spec.tangent() {
                return Err(Error::CrossCheck(format!(
                    "declared generators span dim {} but the orbit algebra at {} has dim {}",
                    span.dim(),
                    rep.label,
                    spec.tangent().dim()
                )));
            }
            specs.push(spec);
        }
        Ok(specs)
    }

    /// Cocharacter generators for the stabilizer subgroup.
    fn stabilizer_group_data(&self) -> GroupData {
        let n = self.n;
        let mut cochars = Vec::new();
        match self.kind {
            CaseKind::GroupTorus => {
                for k in 0..(n - 1) {
                    cochars.push(vec![Self::simple_cochar(n, k), vec![0; n]]);
                    cochars.push(vec![vec![0; n], Self::simple_cochar(n, k)]);
                }
            }
            CaseKind::GroupGroup => {
                for k in 0..(n - 1) {
                    let a = Self::simple_cochar(n, k);
                    cochars.push(vec![a.clone(), a]);
                }
            }
        }
        GroupData { nilpotents: vec![], cochars }
    }

    /// Deterministic random points spread across the decomposition cells,
    /// for coverage checking.
    pub fn coverage_points(
        &self,
        count: usize,
        seed: u64,
        variant: DoubleVariant,
    ) -> Result<Vec<GroupPoint>> {
        let n = self.n;
        let modes = self.cell_modes(variant);
        let mut rng = rng_from_seed(seed);
        let mut points = Vec::with_capacity(count);
        for _ in 0..count {
            let mut blocks = Vec::with_capacity(modes.len());
            for mode in &modes {
                let block = match mode {
                    None => random_torus_block(n, &mut rng),
                    Some(m) => {
                        let w = &self.base_weyl[rng.gen_range(0..self.base_weyl.len())].perm;
                        let (left_lower, right_lower) = match m {
                            BruhatMode::MinusPlus => (true, false),
                            BruhatMode::PlusPlus => (false, false),
                            BruhatMode::MinusMinus => (true, true),
                        };
                        let l = random_unipotent(n, left_lower, &mut rng);
                        let r = random_unipotent(n, right_lower, &mut rng);
                        let t = random_torus_block(n, &mut rng);
                        l.mul(&weyl_rep_matrix(w)?)?.mul(&t.mul(&r)?)?
                    }
                };
                blocks.push(block);
            }
            points.push(GroupPoint::new(self.ctx.rep().clone(), blocks)?);
        }
        Ok(points)
    }
}

/// Random unipotent matrix (strictly lower or strictly upper entries).
fn random_unipotent<R: Rng>(n: usize, lower: bool, rng: &mut R) -> Mat {
    let mut m = Mat::identity(n);
    for i in 0..n {
        for j in 0..n {
            let fill = if lower { i > j } else { i < j };
            if fill {
                m.set(i, j, random_rat(rng));
            }
        }
    }
    m
}

/// Random rational diagonal matrix of determinant one.
fn random_torus_block<R: Rng>(n: usize, rng: &mut R) -> Mat {
    let mut t = vec![Rat::one(); n + 1];
    for item in t.iter_mut().take(n).skip(1) {
        *item = random_nonzero_rat(rng);
    }
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        m.set(i, i, &t[i + 1] / &t[i]);
    }
    m
}

// ───────────────────── suite runner ─────────────────────

/// Options for [`run_flag_suite`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteOpts {
    pub seed: u64,
    pub samples_per_cell: usize,
    pub coverage_points: usize,
    pub parallel: bool,
    /// Rank parameters above 4 multiply the Weyl-pair count steeply; they
    /// are rejected unless explicitly allowed.
    pub allow_large: bool,
}

impl Default for SuiteOpts {
    fn default() -> SuiteOpts {
        SuiteOpts {
            seed: DEFAULT_SEED,
            samples_per_cell: 5,
            coverage_points: 100,
            parallel: false,
            allow_large: false,
        }
    }
}

/// Run the full verification suite for a built-in case: section
/// conditions and weak-section verification per cell representative,
/// pairwise-distinct cells, and coverage of sampled points — plus the
/// case-specific bookkeeping:
///
/// * group×torus, Heisenberg: the Schubert complement dimension
///   `dim(u₊ ∩ Ad_ẇ u₊) = n(n−1)/2 − length(w)` per cell;
/// * group×group: the orbit-algebra dimension `length(w) + length(v) +
///   (n−1)` per cell, and — at the base point and freshly sampled points
///   of every cell — equality of the declared bundle fiber computed by
///   the section machinery with the same fiber assembled from literal
///   block data (strictly-triangular factors, antidiagonal torus seed,
///   opposite Borel pair).
pub fn run_flag_suite(
    case: &FlagCase,
    variant: DoubleVariant,
    opts: &SuiteOpts,
) -> Result<CheckReport> {
    if case.n() > 4 && !opts.allow_large {
        return Err(Error::Unsupported(
            "rank parameters above 4 are rejected by default; enable allow_large to run them"
                .into(),
        ));
    }
    let sections = case.section_specs(variant)?;
    let coverage =
        case.coverage_points(opts.coverage_points, opts.seed ^ 0x9E37_79B9_7F4A_7C15, variant)?;
    let splitting = SplittingSpec {
        sections: sections.clone(),
        cell_modes: case.cell_modes(variant),
        coverage_points: coverage,
        samples_per_section: opts.samples_per_cell,
        seed: opts.seed,
        parallel: opts.parallel,
    };
    let mut report = check_weak_splitting(&splitting)?;

    if case.kind() == CaseKind::GroupTorus && variant == DoubleVariant::Heisenberg {
        let n = case.n();
        let basis = SlBasis::new(n);
        let dim = case.ctx().dim();
        let mut upper = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                upper.push(unit_vec(dim, basis.root_index(i, j)));
            }
        }
        let upper = Subspace::from_vectors(dim, &upper)?;
        for rep in case.weyl_reps() {
            let ad = rep.point.adjoint_matrix()?;
            let meet = upper.intersect(&upper.map(&ad)?)?;
            let expected = n * (n - 1) / 2 - perm_length(&rep.perms[0]);
            report.record(
                format!("{}/schubert_complement_dimension", rep.label),
                meet.dim() == expected,
                || format!("dim(u₊ ∩ Ad_w u₊) = {}, expected {expected}", meet.dim()),
            );
        }
    }

    if case.kind() == CaseKind::GroupGroup {
        let n = case.n();
        let basis = SlBasis::new(n);
        let sl_dim = basis.dim();
        let dim = case.ctx().dim();

        // Literal block data, assembled independently of the section
        // machinery: the declared seed (strictly lower entries in the
        // first factor, strictly upper in the second, antidiagonal torus
        // pairs) and the upper×lower Borel pair.
        let mut seed_vecs = Vec::new();
        let mut borel_vecs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    seed_vecs.push(unit_vec(dim, basis.root_index(i, j)));
                    borel_vecs.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                } else if i < j {
                    seed_vecs.push(unit_vec(dim, sl_dim + basis.root_index(i, j)));
                    borel_vecs.push(unit_vec(dim, basis.root_index(i, j)));
                }
            }
        }
        for k in 0..(n - 1) {
            let mut a = unit_vec(dim, basis.cartan_index(k));
            a[sl_dim + basis.cartan_index(k)] = rat(-1);
            seed_vecs.push(a);
            borel_vecs.push(unit_vec(dim, basis.cartan_index(k)));
            borel_vecs.push(unit_vec(dim, sl_dim + basis.cartan_index(k)));
        }
        let seed = Subspace::from_vectors(dim, &seed_vecs)?;
        let borel_pair = Subspace::from_vectors(dim, &borel_vecs)?;
        let pminus = case.ctx().triple().pminus_matrix();

        for (rep, spec) in case.weyl_reps().iter().zip(&sections) {
            let expected = perm_length(&rep.perms[0]) + perm_length(&rep.perms[1]) + (n - 1);
            report.record(
                format!("{}/cell_dimension_matches_word_lengths", rep.label),
                spec.tangent().dim() == expected,
                || format!("orbit algebra has dim {}, expected {expected}", spec.tangent().dim()),
            );

            let ad_d = rep.point.adjoint_matrix()?;
            let formula_base = seed.map(&ad_d)?.map(pminus)?;
            let mut rng = rng_from_seed(opts.seed ^ 0xB10C_0DA7);
            for k in 0..=opts.samples_per_cell {
                let g = if k == 0 {
                    GroupPoint::identity(case.ctx().rep().clone())
                } else {
                    spec.sample_g(&mut rng)?
                };
                let ad_m = g.mul(spec.d())?.adjoint_matrix()?;
                let machinery = spec.declared_fiber_at(&ad_m)?.ok_or_else(|| {
                    Error::CrossCheck("group×group section lacks a declared seed".into())
                })?;
                let formula = formula_base.sum(&borel_pair.map(&ad_m)?)?;
                report.record(
                    format!("{}/sample{k}/declared_fiber_matches_block_formula", rep.label),
                    machinery == formula,
                    || {
                        format!(
                            "machinery fiber has dim {}, literal formula fiber has dim {}",
                            machinery.dim(),
                            formula.dim()
                        )
                    },
                );
            }
        }
    }

    Ok(report)
}
