//! Lie algebras over the rationals, presented by structure constants.
//!
//! A [`LieAlg`] stores the full structure-constant tensor and is only
//! constructible when antisymmetry and the Jacobi identity hold exactly.
//! A [`QuadLie`] pairs an algebra with a nondegenerate invariant symmetric
//! bilinear form. The Killing form is always computed from traces of
//! adjoint maps, never assumed.

use crate::error::{Error, Result};
use crate::exactlin::{form_pair, rat, vec_zero, unit_vec, Mat, Rat, Subspace};
use crate::report::CheckReport;
use num_traits::Zero;

/// Structure-constant tensor: `c[i][j][k]` is the `e_k`-coefficient of
/// `[e_i, e_j]`.
pub type StructConsts = Vec<Vec<Vec<Rat>>>;

/// Finite-dimensional Lie algebra presented by structure constants.
#[derive(Clone, Debug)]
pub struct LieAlg {
    dim: usize,
    c: StructConsts,
}

/// Check antisymmetry and the Jacobi identity for a raw tensor. Witnesses
/// report the lexicographically first failing index tuple.
pub fn validate_lie_structure(dim: usize, c: &StructConsts) -> CheckReport {
    let mut report = CheckReport::new();
    if c.len() != dim || c.iter().any(|p| p.len() != dim || p.iter().any(|q| q.len() != dim)) {
        report.fail("tensor_shape", format!("expected {dim}x{dim}x{dim} tensor"));
        return report;
    }
    report.pass("tensor_shape");

    let anti_witness = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .flat_map(|(i, j)| (0..dim).map(move |k| (i, j, k)))
        .find(|&(i, j, k)| c[i][j][k] != -&c[j][i][k]);
    match anti_witness {
        None => report.pass("antisymmetry"),
        Some((i, j, k)) => report.fail(
            "antisymmetry",
            format!("c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]"),
        ),
    }

    let mut jacobi_witness = None;
    'outer: for i in 0..dim {
        for j in (i + 1)..dim {
            for l in (j + 1)..dim {
                for k in 0..dim {
                    let mut acc = Rat::zero();
                    for m in 0..dim {
                        acc += &c[i][j][m] * &c[m][l][k];
                        acc += &c[j][l][m] * &c[m][i][k];
                        acc += &c[l][i][m] * &c[m][j][k];
                    }
                    if !acc.is_zero() {
                        jacobi_witness = Some((i, j, l, k));
                        break 'outer;
                    }
                }
            }
        }
    }
    match jacobi_witness {
        None => report.pass("jacobi"),
        Some((i, j, l, k)) => report.fail(
            "jacobi",
            format!("[[e{i},e{j}],e{l}] cycle has nonzero e{k}-component"),
        ),
    }
    report
}

impl LieAlg {
    /// Construct and validate. Fails on shape, antisymmetry, or Jacobi
    /// violations.
    pub fn new(dim: usize, c: StructConsts) -> Result<LieAlg> {
        let report = validate_lie_structure(dim, &c);
        if !report.verdict() {
            let first = report.first_failure().expect("failed report has a failure");
            return Err(Error::BadStructure(format!(
                "{}: {}",
                first.name,
                first.witness.clone().unwrap_or_default()
            )));
        }
        Ok(LieAlg { dim, c })
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> LieAlg {
        LieAlg { dim, c: vec![vec![vec_zero(dim); dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn consts(&self) -> &StructConsts {
        &self.c
    }

    /// `[x, y]` in coordinates.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vec_zero(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &coef * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x : y -> [x, y]` in the standard basis.
    pub fn ad_matrix(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vec(self.dim, j));
            for k in 0..self.dim {
                m.set(k, j, col[k].clone());
            }
        }
        m
    }

    /// Killing form `K(x, y) = tr(ad_x ad_y)`, computed from the structure
    /// constants: `K[i][j] = sum_{a,b} c[i][a][b] c[j][b][a]`.
    pub fn killing_form(&self) -> Mat {
        let mut k = Mat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                let mut acc = Rat::zero();
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        if !self.c[i][a][b].is_zero() && !self.c[j][b][a].is_zero() {
                            acc += &self.c[i][a][b] * &self.c[j][b][a];
                        }
                    }
                }
                k.set(i, j, acc.clone());
                k.set(j, i, acc);
            }
        }
        k
    }

    /// Direct sum with component-wise bracket (no cross terms).
    pub fn direct_sum(&self, other: &LieAlg) -> LieAlg {
        let n = self.dim + other.dim;
        let mut c = vec![vec![vec_zero(n); n]; n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[self.dim + i][self.dim + j][self.dim + k] = other.c[i][j][k].clone();
                }
            }
        }
        LieAlg { dim: n, c }
    }

    /// Span of `[a, b]` over basis pairs of the two subspaces.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        if a.ambient_dim() != self.dim || b.ambient_dim() != self.dim {
            return Err(Error::DimMismatch("bracket_span: ambient".into()));
        }
        let mut vecs = Vec::new();
        for va in a.basis_vectors() {
            for vb in b.basis_vectors() {
                vecs.push(self.bracket(&va, &vb));
            }
        }
        Subspace::from_vectors(self.dim, &vecs)
    }

    /// Is the subspace closed under the bracket?
    pub fn is_subalgebra(&self, sub: &Subspace) -> Result<bool> {
        let span = self.bracket_span(sub, sub)?;
        sub.contains(&span)
    }

    /// Lie normalizer `{x : [x, l] ⊆ l}` of a subspace `l`, computed as the
    /// kernel of the stacked "bracket with a basis vector, then reduce
    /// modulo l" maps.
    pub fn lie_normalizer(&self, l: &Subspace) -> Result<Subspace> {
        if l.ambient_dim() != self.dim {
            return Err(Error::DimMismatch("lie_normalizer: ambient".into()));
        }
        if l.dim() == 0 {
            return Ok(Subspace::full(self.dim));
        }
        let mut stacked_rows: Vec<Vec<Rat>> = Vec::with_capacity(l.dim() * self.dim);
        for v in l.basis_vectors() {
            // column i of the composite map: reduce_mod_l([e_i, v])
            let mut block = Mat::zeros(self.dim, self.dim);
            for i in 0..self.dim {
                let residual = l.reduce_mod(&self.bracket(&unit_vec(self.dim, i), &v));
                for k in 0..self.dim {
                    block.set(k, i, residual[k].clone());
                }
            }
            for k in 0..self.dim {
                stacked_rows.push(block.row_vec(k));
            }
        }
        let stacked = Mat::from_rows(stacked_rows)?;
        Ok(Subspace::rref_canonical(&stacked.kernel()))
    }
}

/// Check that `form` is a symmetric, invertible, ad-invariant bilinear form
/// on the algebra. The ad-invariance witness is the lexicographically first
/// basis triple `(i, j, k)` with `B([e_i,e_j],e_k) != B(e_i,[e_j,e_k])`.
pub fn validate_invariant_form(alg: &LieAlg, form: &Mat) -> CheckReport {
    let mut report = CheckReport::new();
    let n = alg.dim();
    if form.rows() != n || form.cols() != n {
        report.fail("form_shape", format!("expected {n}x{n} matrix"));
        return report;
    }
    report.pass("form_shape");
    report.record("form_symmetric", form.is_symmetric(), || "form != form^T".into());
    report.record("form_invertible", form.rank() == n, || {
        format!("rank {} < {}", form.rank(), n)
    });

    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let ei = unit_vec(n, i);
                let ej = unit_vec(n, j);
                let ek = unit_vec(n, k);
                let lhs = form_pair(form, &alg.bracket(&ei, &ej), &ek);
                let rhs = form_pair(form, &ei, &alg.bracket(&ej, &ek));
                if lhs != rhs {
                    witness = Some((i, j, k, lhs, rhs));
                    break 'outer;
                }
            }
        }
    }
    match witness {
        None => report.pass("ad_invariance"),
        Some((i, j, k, lhs, rhs)) => report.fail(
            "ad_invariance",
            format!("B([e{i},e{j}],e{k}) = {lhs} but B(e{i},[e{j},e{k}]) = {rhs}"),
        ),
    }
    report
}

/// Full validation of raw quadratic-Lie-algebra data: structure first, then
/// the form (the form checks use the raw bracket and run even when Jacobi
/// fails, so negative examples report every broken clause).
pub fn validate_quadratic_lie(dim: usize, c: &StructConsts, form: &Mat) -> CheckReport {
    let mut report = validate_lie_structure(dim, c);
    if report.clause("tensor_shape").map(|cl| cl.pass) != Some(true) {
        return report;
    }
    // Bracket evaluation needs only the tensor shape.
    let raw = LieAlg { dim, c: c.clone() };
    let form_report = validate_invariant_form(&raw, form);
    for cl in form_report.clauses {
        report.clauses.push(cl);
    }
    report
}

/// Lie algebra equipped with a nondegenerate invariant symmetric form.
#[derive(Clone, Debug)]
pub struct QuadLie {
    alg: LieAlg,
    form: Mat,
}

impl QuadLie {
    pub fn new(alg: LieAlg, form: Mat) -> Result<QuadLie> {
        let report = validate_invariant_form(&alg, &form);
        if !report.verdict() {
            let first = report.first_failure().expect("failed report has a failure");
            return Err(Error::BadForm(format!(
                "{}: {}",
                first.name,
                first.witness.clone().unwrap_or_default()
            )));
        }
        Ok(QuadLie { alg, form })
    }

    pub fn alg(&self) -> &LieAlg {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        form_pair(&self.form, x, y)
    }

    pub fn orth_complement(&self, sub: &Subspace) -> Result<Subspace> {
        sub.orth_complement(&self.form)
    }

    /// Isotropy: `B(a, a') = 0` for all pairs from the subspace.
    pub fn is_isotropic(&self, sub: &Subspace) -> Result<bool> {
        if sub.ambient_dim() != self.dim() {
            return Err(Error::DimMismatch("is_isotropic: ambient".into()));
        }
        let gram = sub.basis().mul(&self.form)?.mul(&sub.basis().transpose())?;
        Ok(gram.is_zero())
    }

    /// Lagrangian-subalgebra report: isotropic, half-dimensional, closed
    /// under the bracket.
    pub fn lagrangian_subalgebra_report(&self, sub: &Subspace) -> Result<CheckReport> {
        let mut report = CheckReport::new();
        report.record("isotropic", self.is_isotropic(sub)?, || {
            "form does not vanish on the subspace".into()
        });
        report.record("half_dimension", 2 * sub.dim() == self.dim(), || {
            format!("dim {} in ambient {}", sub.dim(), self.dim())
        });
        report.record("closed_under_bracket", self.alg.is_subalgebra(sub)?, || {
            "bracket leaves the subspace".into()
        });
        Ok(report)
    }

    pub fn is_lagrangian_subalgebra(&self, sub: &Subspace) -> Result<bool> {
        Ok(self.lagrangian_subalgebra_report(sub)?.verdict())
    }
}

/// `sl_2` structure constants in the basis `(e, h, f)`:
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlg {
    let mut c = vec![vec![vec_zero(3); 3]; 3];
    // indices: e = 0, h = 1, f = 2
    c[1][0][0] = rat(2);
    c[0][1][0] = rat(-2);
    c[1][2][2] = rat(-2);
    c[2][1][2] = rat(2);
    c[0][2][1] = rat(1);
    c[2][0][1] = rat(-1);
    LieAlg::new(3, c).expect("sl2 structure constants are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{ratio, vec_add, vec_is_zero, vec_scale};
    use proptest::prelude::*;

    fn sp(ambient: usize, vecs: &[&[i64]]) -> Subspace {
        let vv: Vec<Vec<Rat>> = vecs.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Subspace::from_vectors(ambient, &vv).unwrap()
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        let (e, h, f) = (unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2));
        assert_eq!(g.bracket(&h, &e), vec_scale(&rat(2), &e));
        assert_eq!(g.bracket(&h, &f), vec_scale(&rat(-2), &f));
        assert_eq!(g.bracket(&e, &f), h);
        assert!(vec_is_zero(&g.bracket(&e, &e)));
    }

    // Frozen Killing values for sl2 in basis (e, h, f):
    // K(h,h) = tr(ad_h^2) = 4 + 0 + 4 = 8; K(e,f) = tr(ad_e ad_f) = 4.
    #[test]
    fn sl2_killing_form_frozen() {
        let k = sl2().killing_form();
        let expected = Mat::from_i64(&[&[0, 0, 4], &[0, 8, 0], &[4, 0, 0]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn killing_form_is_invariant_for_sl2() {
        let g = sl2();
        let k = g.killing_form();
        let report = validate_invariant_form(&g, &k);
        assert!(report.verdict(), "{}", report.render());
    }

    // Frozen negative control: the identity form on sl2 is symmetric and
    // invertible but not ad-invariant; the lexicographically first failing
    // triple is (0,0,1) — B([e,e],h) = 0 while B(e,[e,h]) = B(e,-2e) = -2.
    #[test]
    fn identity_form_on_sl2_fails_with_frozen_witness() {
        let g = sl2();
        let report = validate_invariant_form(&g, &Mat::identity(3));
        assert!(!report.verdict());
        let failing = report.first_failure().unwrap();
        assert_eq!(failing.name, "ad_invariance");
        let witness = failing.witness.clone().unwrap();
        assert!(witness.contains("B([e0,e0],e1)"), "witness was: {witness}");

        // independent brute-force oracle for the first failing triple
        let mut oracle = None;
        'outer: for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let lhs = g.bracket(&unit_vec(3, i), &unit_vec(3, j))[k].clone();
                    let rhs_vec = g.bracket(&unit_vec(3, j), &unit_vec(3, k));
                    let rhs = rhs_vec[i].clone();
                    if lhs != rhs {
                        oracle = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(oracle, Some((0, 0, 1)));
    }

    #[test]
    fn broken_jacobi_is_reported() {
        // antisymmetric but non-Jacobi: [e0,e1] = e2 and [e1,e2] = e1
        // give J(e0,e1,e2) = [[e1,e2],e0] = [e1,e0] = -e2 ≠ 0
        let mut c = vec![vec![vec_zero(3); 3]; 3];
        c[0][1][2] = rat(1);
        c[1][0][2] = rat(-1);
        c[1][2][1] = rat(1);
        c[2][1][1] = rat(-1);
        let report = validate_lie_structure(3, &c);
        assert!(report.clause("antisymmetry").unwrap().pass);
        assert!(!report.clause("jacobi").unwrap().pass);
        assert!(LieAlg::new(3, c).is_err());
    }

    #[test]
    fn normalizer_of_e_line_in_sl2() {
        let g = sl2();
        let l = sp(3, &[&[1, 0, 0]]); // span{e}
        let n = g.lie_normalizer(&l).unwrap();
        assert_eq!(n, sp(3, &[&[1, 0, 0], &[0, 1, 0]])); // span{e, h}
    }

    #[test]
    fn normalizer_of_borel_is_borel() {
        let g = sl2();
        let b = sp(3, &[&[1, 0, 0], &[0, 1, 0]]); // span{e, h}
        assert_eq!(g.lie_normalizer(&b).unwrap(), b);
        assert!(g.is_subalgebra(&b).unwrap());
    }

    #[test]
    fn normalizer_of_zero_is_everything() {
        let g = sl2();
        assert_eq!(g.lie_normalizer(&Subspace::zero(3)).unwrap(), Subspace::full(3));
    }

    // The 4-dimensional double sl2 ⊕ (torus line) with the difference form
    // blockdiag(K, -K(h,h)) has Lagrangian halves
    //   g+ = span{(e; 0), (h; 1)},  g- = span{(f; 0), (h; -1)}.
    #[test]
    fn sl2_torus_double_lagrangians() {
        let d = sl2().direct_sum(&LieAlg::abelian(1));
        let k = sl2().killing_form();
        let kt = Mat::from_i64(&[&[-8]]);
        let form = Mat::block_diag(&[&k, &kt]);
        let quad = QuadLie::new(d, form).unwrap();

        let gplus = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
        let gminus = sp(4, &[&[0, 0, 1, 0], &[0, 1, 0, -1]]);
        assert!(quad.is_lagrangian_subalgebra(&gplus).unwrap());
        assert!(quad.is_lagrangian_subalgebra(&gminus).unwrap());
        // they are complementary
        assert_eq!(gplus.sum(&gminus).unwrap(), Subspace::full(4));
        // each is its own orthogonal complement
        assert_eq!(quad.orth_complement(&gplus).unwrap(), gplus);
    }

    #[test]
    fn non_lagrangian_reports_failing_clause() {
        let d = sl2().direct_sum(&LieAlg::abelian(1));
        let k = sl2().killing_form();
        let form = Mat::block_diag(&[&k, &Mat::from_i64(&[&[-8]])]);
        let quad = QuadLie::new(d, form).unwrap();
        // span{(e;0),(f;0)}: not isotropic (K(e,f) = 4), not a subalgebra
        let bad = sp(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        let report = quad.lagrangian_subalgebra_report(&bad).unwrap();
        assert!(!report.clause("isotropic").unwrap().pass);
        assert!(!report.clause("closed_under_bracket").unwrap().pass);
        assert!(report.clause("half_dimension").unwrap().pass);
    }

    #[test]
    fn ad_matrix_matches_bracket() {
        let g = sl2();
        let x = vec![rat(1), ratio(1, 2), rat(-3)];
        let y = vec![rat(2), rat(0), rat(5)];
        let ad = g.ad_matrix(&x);
        assert_eq!(ad.mul_vec(&y).unwrap(), g.bracket(&x, &y));
    }

    proptest! {
        // bilinearity and antisymmetry of the bracket on random vectors
        #[test]
        fn bracket_is_bilinear_and_antisymmetric(
            xs in proptest::collection::vec(-3i64..=3, 3),
            ys in proptest::collection::vec(-3i64..=3, 3),
            zs in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let g = sl2();
            let x: Vec<Rat> = xs.iter().map(|&v| rat(v)).collect();
            let y: Vec<Rat> = ys.iter().map(|&v| rat(v)).collect();
            let z: Vec<Rat> = zs.iter().map(|&v| rat(v)).collect();
            prop_assert_eq!(g.bracket(&x, &y), vec_scale(&rat(-1), &g.bracket(&y, &x)));
            prop_assert_eq!(
                g.bracket(&vec_add(&x, &y), &z),
                vec_add(&g.bracket(&x, &z), &g.bracket(&y, &z))
            );
            // Jacobi on random vectors
            let jac = vec_add(
                &vec_add(
                    &g.bracket(&g.bracket(&x, &y), &z),
                    &g.bracket(&g.bracket(&y, &z), &x),
                ),
                &g.bracket(&g.bracket(&z, &x), &y),
            );
            prop_assert!(vec_is_zero(&jac));
        }

        // Killing form invariance as a random-vector identity
        #[test]
        fn killing_invariance_random(
            xs in proptest::collection::vec(-2i64..=2, 3),
            ys in proptest::collection::vec(-2i64..=2, 3),
            zs in proptest::collection::vec(-2i64..=2, 3),
        ) {
            let g = sl2();
            let k = g.killing_form();
            let x: Vec<Rat> = xs.iter().map(|&v| rat(v)).collect();
            let y: Vec<Rat> = ys.iter().map(|&v| rat(v)).collect();
            let z: Vec<Rat> = zs.iter().map(|&v| rat(v)).collect();
            let lhs = form_pair(&k, &g.bracket(&x, &y), &z);
            let rhs = form_pair(&k, &x, &g.bracket(&y, &z));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
