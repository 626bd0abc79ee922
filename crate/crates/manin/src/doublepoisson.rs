//! Poisson bivectors of the Drinfeld and Heisenberg doubles.
//!
//! All tensors are right-trivialized: the tangent space at a group point
//! is identified with the double's Lie algebra by right translation, and
//! the bivector at a point is the matrix of the corresponding 2-tensor in
//! the algebra basis. With `A` the adjoint matrix of the point and `coeff`
//! the doubled r-matrix coefficients, the two structures are
//!
//! * Drinfeld:   `Π = (coeff − A·coeff·Aᵀ) / 2`
//! * Heisenberg: `Π = (coeff + A·coeff·Aᵀ) / 2`
//!
//! Every constructor cross-checks the tensor against the independent
//! sharp-map formulas `y ↦ P₊y − Ad p₊ Ad⁻¹ y` (Drinfeld, and its
//! Heisenberg counterpart with the projections swapped), so a disagreement
//! between the two derivations is an immediate hard error rather than a
//! silently wrong tensor.

use crate::error::{Error, Result};
use crate::exactlin::{ratio, unit_vec, vec_sub, Mat, Rat};
use crate::exactlin::Subspace;
use crate::groupgeom::{GroupPoint, QuotientFrame};
use crate::maningen::{ManinTriple, RMatrix};

/// Which double the bivector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleVariant {
    Drinfeld,
    Heisenberg,
}

impl std::fmt::Display for DoubleVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DoubleVariant::Drinfeld => write!(f, "drinfeld"),
            DoubleVariant::Heisenberg => write!(f, "heisenberg"),
        }
    }
}

/// Coordinate frame a tensor is expressed in: the full right-trivialized
/// algebra, or a quotient frame.
#[derive(Clone, Debug)]
pub enum Frame {
    Ambient(usize),
    Quotient(QuotientFrame),
}

impl Frame {
    pub fn dim(&self) -> usize {
        match self {
            Frame::Ambient(n) => *n,
            Frame::Quotient(f) => f.dim(),
        }
    }
}

/// Antisymmetric 2-tensor in a frame.
#[derive(Clone, Debug)]
pub struct Bivector {
    frame: Frame,
    tensor: Mat,
}

impl Bivector {
    pub fn new(frame: Frame, tensor: Mat) -> Result<Bivector> {
        if tensor.rows() != frame.dim() || tensor.cols() != frame.dim() {
            return Err(Error::DimMismatch("bivector tensor size".into()));
        }
        if !tensor.is_antisymmetric() {
            return Err(Error::CrossCheck("bivector tensor is not antisymmetric".into()));
        }
        Ok(Bivector { frame, tensor })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn tensor(&self) -> &Mat {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// Sharp map `y ↦ Πᵀ F y` for the frame's pairing matrix `F` (the
    /// ambient invariant form, or the identity in quotient coordinates).
    pub fn sharp_matrix(&self, ambient_form: Option<&Mat>) -> Result<Mat> {
        let t = self.tensor.transpose();
        match (&self.frame, ambient_form) {
            (Frame::Ambient(_), Some(b)) => t.mul(b),
            (Frame::Ambient(_), None) => {
                Err(Error::BadForm("ambient sharp needs the invariant form".into()))
            }
            (Frame::Quotient(_), _) => Ok(t),
        }
    }
}

/// Double tensor from the doubled r-matrix coefficients and the adjoint
/// matrix of the base point.
pub fn double_tensor(rm: &RMatrix, ad: &Mat, variant: DoubleVariant) -> Result<Mat> {
    let transported = ad.mul(rm.coeff())?.mul(&ad.transpose())?;
    let combined = match variant {
        DoubleVariant::Drinfeld => rm.coeff().sub(&transported)?,
        DoubleVariant::Heisenberg => rm.coeff().add(&transported)?,
    };
    Ok(combined.scale(&ratio(1, 2)))
}

/// Sharp of the double bivector straight from the projection formulas,
/// evaluated through both equivalent expressions (plus- and minus-sided);
/// any disagreement is a hard error.
pub fn sharp_by_formula(
    triple: &ManinTriple,
    ad: &Mat,
    ad_inv: &Mat,
    y: &[Rat],
    variant: DoubleVariant,
) -> Result<Vec<Rat>> {
    let x = triple.project_plus(y);
    let xi = triple.project_minus(y);
    let y_back = ad_inv.mul_vec(y)?;
    let (inner_first, inner_second) = match variant {
        DoubleVariant::Drinfeld => (triple.project_plus(&y_back), triple.project_minus(&y_back)),
        DoubleVariant::Heisenberg => (triple.project_minus(&y_back), triple.project_plus(&y_back)),
    };
    let route_plus = vec_sub(&x, &ad.mul_vec(&inner_first)?);
    let mut route_minus = ad.mul_vec(&inner_second)?;
    for (out, v) in route_minus.iter_mut().zip(&xi) {
        *out -= v;
    }
    // route_minus now holds  Ad·p∓(Ad⁻¹y) − ξ
    if route_plus != route_minus {
        return Err(Error::CrossCheck(
            "plus- and minus-sided sharp formulas disagree".into(),
        ));
    }
    Ok(route_plus)
}

/// Right-trivialized double bivector at a group point, cross-checked
/// column by column against the sharp formulas.
pub fn bivector_at(
    triple: &ManinTriple,
    rm: &RMatrix,
    point: &GroupPoint,
    variant: DoubleVariant,
) -> Result<Bivector> {
    let ad = point.adjoint_matrix()?;
    bivector_with_ad(triple, rm, &ad, variant)
}

/// Same as [`bivector_at`] but with a precomputed adjoint matrix (callers
/// evaluating many tensors at one point should reuse it).
pub fn bivector_with_ad(
    triple: &ManinTriple,
    rm: &RMatrix,
    ad: &Mat,
    variant: DoubleVariant,
) -> Result<Bivector> {
    let n = triple.dim();
    let tensor = double_tensor(rm, ad, variant)?;
    let sharp = tensor.transpose().mul(triple.form())?;
    let ad_inv = ad.inverse()?;
    for i in 0..n {
        let e = unit_vec(n, i);
        let by_formula = sharp_by_formula(triple, ad, &ad_inv, &e, variant)?;
        if sharp.mul_vec(&e)? != by_formula {
            return Err(Error::CrossCheck(format!(
                "tensor sharp and formula sharp disagree on basis vector {i}"
            )));
        }
    }
    Bivector::new(Frame::Ambient(n), tensor)
}

/// Pushforward of an ambient bivector to a quotient frame: `Q Π Qᵀ`.
pub fn pushforward_bivector(biv: &Bivector, frame: &QuotientFrame) -> Result<Bivector> {
    match biv.frame() {
        Frame::Ambient(n) if *n == frame.ambient_dim() => {
            let pushed = frame.push_tensor(biv.tensor())?;
            Bivector::new(Frame::Quotient(frame.clone()), pushed)
        }
        _ => Err(Error::DimMismatch(
            "pushforward expects an ambient bivector matching the frame".into(),
        )),
    }
}

/// Quotient bivector `χ(r)` on the coset space by a subalgebra containing
/// the plus half: the pushforward of the r-matrix tensor itself.
///
/// Because the plus half is contained in the quotiented subalgebra, the
/// transported term of either double tensor dies under the projection, so
/// the pushforwards of the Drinfeld and the Heisenberg bivectors both
/// coincide with `χ(r)`. Both equalities are re-verified here at the given
/// point; a mismatch is a hard error.
pub fn chi_r_at(
    triple: &ManinTriple,
    rm: &RMatrix,
    point: &GroupPoint,
    quotient_subalg: &Subspace,
) -> Result<Bivector> {
    chi_r_with_ad(triple, rm, &point.adjoint_matrix()?, quotient_subalg)
}

/// Same as [`chi_r_at`] with the adjoint matrix of the point precomputed.
pub fn chi_r_with_ad(
    triple: &ManinTriple,
    rm: &RMatrix,
    ad: &Mat,
    quotient_subalg: &Subspace,
) -> Result<Bivector> {
    if !quotient_subalg.contains(triple.gplus())? {
        return Err(Error::BadSection(
            "chi(r) needs the plus half inside the quotiented subalgebra".into(),
        ));
    }
    let moved = quotient_subalg.map(ad)?;
    let frame = QuotientFrame::new(moved)?;
    let chi = frame.push_tensor(&rm.r_tensor())?;
    for variant in [DoubleVariant::Drinfeld, DoubleVariant::Heisenberg] {
        let full = bivector_with_ad(triple, rm, ad, variant)?;
        let pushed = pushforward_bivector(&full, &frame)?;
        if pushed.tensor() != &chi {
            return Err(Error::CrossCheck(format!(
                "chi(r) differs from the pushed {variant} bivector"
            )));
        }
    }
    Bivector::new(Frame::Quotient(frame), chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, vec_is_zero};
    use crate::liecore::{sl2, LieAlg, QuadLie};
    use crate::maningen::build_rmatrix;
    use crate::groupgeom::{weyl_rep_matrix, MatRep};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn sp(ambient: usize, vecs: &[&[i64]]) -> Subspace {
        let vv: Vec<Vec<Rat>> =
            vecs.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Subspace::from_vectors(ambient, &vv).unwrap()
    }

    /// sl2 ⊕ torus double with its defining realization: block sizes
    /// [2, 2], second block diagonal.
    fn sl2_torus_setup() -> (ManinTriple, RMatrix, Arc<MatRep>) {
        let d = sl2().direct_sum(&LieAlg::abelian(1));
        let k = sl2().killing_form();
        let form = Mat::block_diag(&[&k, &Mat::from_i64(&[&[-8]])]);
        let quad = QuadLie::new(d.clone(), form).unwrap();
        let gplus = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
        let gminus = sp(4, &[&[0, 0, 1, 0], &[0, 1, 0, -1]]);
        let triple = ManinTriple::new(quad, gplus, gminus).unwrap();
        let rm = build_rmatrix(&triple).unwrap();

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
        (triple, rm, Arc::new(rep))
    }

    fn point_s1(rep: &Arc<MatRep>) -> GroupPoint {
        GroupPoint::new(
            rep.clone(),
            vec![weyl_rep_matrix(&[1, 0]).unwrap(), Mat::identity(2)],
        )
        .unwrap()
    }

    #[test]
    fn identity_point_tensors() {
        let (triple, rm, rep) = sl2_torus_setup();
        let id = GroupPoint::identity(rep);
        let dr = bivector_at(&triple, &rm, &id, DoubleVariant::Drinfeld).unwrap();
        assert!(dr.tensor().is_zero());
        let hb = bivector_at(&triple, &rm, &id, DoubleVariant::Heisenberg).unwrap();
        assert_eq!(hb.tensor(), rm.coeff());
    }

    // Frozen adjoint of the lifted reflection: e1 ↦ -e3, e2 ↦ -e2,
    // e3 ↦ -e1, e4 ↦ e4; it flips the sign of the whole coefficient
    // tensor, so the Drinfeld tensor equals coeff and the Heisenberg
    // tensor vanishes at this point.
    #[test]
    fn reflection_point_frozen_tensors() {
        let (triple, rm, rep) = sl2_torus_setup();
        let s = point_s1(&rep);
        let a = s.adjoint_matrix().unwrap();
        let mut expected_a = Mat::zeros(4, 4);
        expected_a.set(2, 0, rat(-1));
        expected_a.set(1, 1, rat(-1));
        expected_a.set(0, 2, rat(-1));
        expected_a.set(3, 3, rat(1));
        assert_eq!(a, expected_a);

        let transported = a.mul(rm.coeff()).unwrap().mul(&a.transpose()).unwrap();
        assert_eq!(transported, rm.coeff().neg());

        let dr = bivector_at(&triple, &rm, &s, DoubleVariant::Drinfeld).unwrap();
        assert_eq!(dr.tensor(), rm.coeff());
        let hb = bivector_at(&triple, &rm, &s, DoubleVariant::Heisenberg).unwrap();
        assert!(hb.tensor().is_zero());

        // frozen sharp values: Drinfeld sharp sends e1 to e1, the
        // Heisenberg sharp kills e3 along with everything else
        let sharp_dr = dr.sharp_matrix(Some(triple.form())).unwrap();
        assert_eq!(sharp_dr.mul_vec(&unit_vec(4, 0)).unwrap(), unit_vec(4, 0));
        let sharp_hb = hb.sharp_matrix(Some(triple.form())).unwrap();
        assert!(vec_is_zero(&sharp_hb.mul_vec(&unit_vec(4, 2)).unwrap()));
    }

    // The Drinfeld structure vanishes along the subgroup whose adjoint
    // action preserves both halves (diagonal torus pairs here).
    #[test]
    fn drinfeld_vanishes_on_stabilizing_torus() {
        let (triple, rm, rep) = sl2_torus_setup();
        for t in [2i64, 3, 5] {
            let h = GroupPoint::toral(rep.clone(), &rat(t), &[vec![1, -1], vec![1, -1]]).unwrap();
            let dr = bivector_at(&triple, &rm, &h, DoubleVariant::Drinfeld).unwrap();
            assert!(dr.tensor().is_zero(), "t = {t}");
        }
    }

    #[test]
    fn sharp_satisfies_form_antisymmetry() {
        let (triple, rm, rep) = sl2_torus_setup();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..8 {
            let g = GroupPoint::exp_nilpotent(
                rep.clone(),
                &[rat(rng.gen_range(-2..=2)), rat(0), rat(0), rat(0)],
            )
            .unwrap();
            let t = GroupPoint::toral(rep.clone(), &rat(2), &[vec![1, -1], vec![1, -1]]).unwrap();
            let p = g.mul(&t).unwrap();
            for variant in [DoubleVariant::Drinfeld, DoubleVariant::Heisenberg] {
                let biv = bivector_at(&triple, &rm, &p, variant).unwrap();
                let s = biv.sharp_matrix(Some(triple.form())).unwrap();
                let b = triple.form();
                // S^T B = -B S  (form-antisymmetry of the sharp map)
                assert_eq!(s.transpose().mul(b).unwrap(), b.mul(&s).unwrap().neg());
            }
        }
    }

    #[test]
    fn chi_on_coset_space_agrees_with_both_pushforwards() {
        let (triple, rm, rep) = sl2_torus_setup();
        let nplus = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        // the constructor itself re-verifies both pushforward equalities
        let chi = chi_r_at(&triple, &rm, &point_s1(&rep), &nplus).unwrap();
        assert_eq!(chi.dim(), 1);
        assert!(chi.tensor().is_zero());

        // precondition: the quotiented subalgebra must contain the plus half
        let too_small = sp(4, &[&[0, 0, 1, 0], &[0, 1, 0, -1]]);
        assert!(chi_r_at(&triple, &rm, &point_s1(&rep), &too_small).is_err());
    }

    #[test]
    fn pushforward_matches_manual_computation() {
        let (triple, rm, rep) = sl2_torus_setup();
        let biv = bivector_at(&triple, &rm, &point_s1(&rep), DoubleVariant::Drinfeld).unwrap();
        let quot = sp(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let frame = QuotientFrame::new(quot).unwrap();
        let pushed = pushforward_bivector(&biv, &frame).unwrap();
        let manual =
            frame.q_matrix().mul(biv.tensor()).unwrap().mul(&frame.q_matrix().transpose()).unwrap();
        assert_eq!(pushed.tensor(), &manual);
    }
}
