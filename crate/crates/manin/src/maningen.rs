//! Manin triples and their classical r-matrices.
//!
//! A Manin triple here is a quadratic Lie algebra together with two
//! complementary Lagrangian subalgebras. From the canonical bases of the
//! two halves we produce dual bases (via the nondegenerate pairing between
//! the halves), the skew-symmetrized r-matrix, and the Schouten square
//! `[r, r]` — the classical Yang–Baxter obstruction, which must be
//! ad-invariant for these r-matrices and is checked as such in tests.

use crate::error::{Error, Result};
use crate::exactlin::{projection_matrix, vec_zero, Mat, Rat, Subspace};
use crate::liecore::{LieAlg, QuadLie};
use crate::report::CheckReport;
use num_traits::Zero;

/// Validate the Manin-triple axioms clause by clause: each half must be a
/// Lagrangian subalgebra and the two must decompose the ambient space.
pub fn validate_manin_triple(
    quad: &QuadLie,
    gplus: &Subspace,
    gminus: &Subspace,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    report.merge("plus", quad.lagrangian_subalgebra_report(gplus)?);
    report.merge("minus", quad.lagrangian_subalgebra_report(gminus)?);
    report.record("transversal", gplus.intersect(gminus)?.dim() == 0, || {
        format!("intersection has dim {}", gplus.intersect(gminus).unwrap().dim())
    });
    report.record("spanning", gplus.sum(gminus)? == Subspace::full(quad.dim()), || {
        format!("sum has dim {}", gplus.sum(gminus).unwrap().dim())
    });
    Ok(report)
}

/// Quadratic Lie algebra with a fixed pair of complementary Lagrangian
/// subalgebras. Projection matrices onto the two halves are precomputed.
#[derive(Clone, Debug)]
pub struct ManinTriple {
    quad: QuadLie,
    gplus: Subspace,
    gminus: Subspace,
    pplus: Mat,
    pminus: Mat,
}

impl ManinTriple {
    pub fn new(quad: QuadLie, gplus: Subspace, gminus: Subspace) -> Result<ManinTriple> {
        let report = validate_manin_triple(&quad, &gplus, &gminus)?;
        if !report.verdict() {
            let first = report.first_failure().expect("failed report has a failure");
            return Err(Error::BadTriple(format!(
                "{}: {}",
                first.name,
                first.witness.clone().unwrap_or_default()
            )));
        }
        let pplus = projection_matrix(&gplus, &gminus)?;
        let pminus = projection_matrix(&gminus, &gplus)?;
        let ident = Mat::identity(quad.dim());
        if pplus.add(&pminus)? != ident {
            return Err(Error::CrossCheck(
                "half projections do not sum to the identity".into(),
            ));
        }
        Ok(ManinTriple { quad, gplus, gminus, pplus, pminus })
    }

    pub fn quad(&self) -> &QuadLie {
        &self.quad
    }

    pub fn alg(&self) -> &LieAlg {
        self.quad.alg()
    }

    pub fn dim(&self) -> usize {
        self.quad.dim()
    }

    pub fn form(&self) -> &Mat {
        self.quad.form()
    }

    pub fn gplus(&self) -> &Subspace {
        &self.gplus
    }

    pub fn gminus(&self) -> &Subspace {
        &self.gminus
    }

    /// Projection matrix onto the plus half along the minus half.
    pub fn pplus_matrix(&self) -> &Mat {
        &self.pplus
    }

    /// Projection matrix onto the minus half along the plus half.
    pub fn pminus_matrix(&self) -> &Mat {
        &self.pminus
    }

    pub fn project_plus(&self, v: &[Rat]) -> Vec<Rat> {
        self.pplus.mul_vec(v).expect("projection matrix matches ambient dim")
    }

    pub fn project_minus(&self, v: &[Rat]) -> Vec<Rat> {
        self.pminus.mul_vec(v).expect("projection matrix matches ambient dim")
    }
}

/// Dual bases of the two halves: `xs` is the canonical basis of the plus
/// half, `xis[j]` lies in the minus half, and `B(xis[j], xs[i]) = δ_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisPair {
    pub xs: Vec<Vec<Rat>>,
    pub xis: Vec<Vec<Rat>>,
}

/// Compute dual bases from the canonical bases of the halves. Fails when
/// the pairing between the halves is degenerate (impossible for a genuine
/// Manin triple, and reported as such if data is corrupted).
pub fn dual_bases(triple: &ManinTriple) -> Result<DualBasisPair> {
    dual_bases_for(triple.quad(), triple.gplus(), triple.gminus())
}

/// Dual-basis computation against explicit halves (the plus half supplies
/// `xs`; representatives of `xis` are solved inside the minus half).
pub fn dual_bases_for(
    quad: &QuadLie,
    gplus: &Subspace,
    gminus: &Subspace,
) -> Result<DualBasisPair> {
    let k = gplus.dim();
    if gminus.dim() != k {
        return Err(Error::BadTriple(format!(
            "halves have different dims: {} vs {}",
            k,
            gminus.dim()
        )));
    }
    let xs = gplus.basis_vectors();
    let bminus = gminus.basis_vectors();
    // gram[i][a] = B(bminus_a, xs_i); solve gram * alpha = e_j per j.
    let mut gram = Mat::zeros(k, k);
    for (i, x) in xs.iter().enumerate() {
        for (a, b) in bminus.iter().enumerate() {
            gram.set(i, a, quad.pair(b, x));
        }
    }
    let gram_inv = gram
        .inverse()
        .map_err(|_| Error::Singular("pairing between the halves is degenerate".into()))?;
    let mut xis = Vec::with_capacity(k);
    for j in 0..k {
        let alpha = gram_inv.col_vec(j);
        let mut xi = vec_zero(quad.dim());
        for (a, b) in bminus.iter().enumerate() {
            if !alpha[a].is_zero() {
                for t in 0..quad.dim() {
                    xi[t] += &alpha[a] * &b[t];
                }
            }
        }
        xis.push(xi);
    }
    Ok(DualBasisPair { xs, xis })
}

/// Skew r-matrix of a Manin triple, stored via its doubled coefficient
/// matrix: `coeff[a][b] = Σ_j ((ξ_j)_a (x_j)_b − (x_j)_a (ξ_j)_b)`, so the
/// r-matrix tensor itself is `coeff / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    coeff: Mat,
}

impl RMatrix {
    /// Doubled coefficient matrix (antisymmetric).
    pub fn coeff(&self) -> &Mat {
        &self.coeff
    }

    /// The r-matrix tensor `r = coeff / 2`.
    pub fn r_tensor(&self) -> Mat {
        self.coeff.scale(&crate::exactlin::ratio(1, 2))
    }

    /// Matrix of the sharp map `y ↦ (r^T B) y` of the r-matrix tensor.
    pub fn sharp_matrix(&self, form: &Mat) -> Result<Mat> {
        self.r_tensor().transpose().mul(form)
    }
}

/// Assemble the r-matrix from dual bases.
pub fn rmatrix_from_pair(dim: usize, pair: &DualBasisPair) -> Result<RMatrix> {
    let mut coeff = Mat::zeros(dim, dim);
    for (x, xi) in pair.xs.iter().zip(&pair.xis) {
        for a in 0..dim {
            for b in 0..dim {
                if !xi[a].is_zero() && !x[b].is_zero() {
                    let v = coeff.at(a, b) + &xi[a] * &x[b];
                    coeff.set(a, b, v);
                }
                if !x[a].is_zero() && !xi[b].is_zero() {
                    let v = coeff.at(a, b) - &x[a] * &xi[b];
                    coeff.set(a, b, v);
                }
            }
        }
    }
    if !coeff.is_antisymmetric() {
        return Err(Error::CrossCheck("r-matrix coefficients are not antisymmetric".into()));
    }
    Ok(RMatrix { coeff })
}

/// r-matrix of a Manin triple (canonical: depends only on the subspaces,
/// because dual bases are solved from the canonical half bases).
pub fn build_rmatrix(triple: &ManinTriple) -> Result<RMatrix> {
    let pair = dual_bases(triple)?;
    rmatrix_from_pair(triple.dim(), &pair)
}

/// Schouten square `[r, r]` of an antisymmetric 2-tensor, as a 3-tensor:
/// `[r,r]^{xyz} = Σ r^{ay} r^{cz} c_ac^x + Σ r^{xb} r^{cz} c_bc^y
///             + Σ r^{xb} r^{yd} c_bd^z`.
pub fn schouten_square(alg: &LieAlg, r: &Mat) -> Vec<Vec<Vec<Rat>>> {
    let n = alg.dim();
    let c = alg.consts();
    let mut t = vec![vec![vec_zero(n); n]; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut acc = Rat::zero();
                for a in 0..n {
                    if r.at(a, y).is_zero() {
                        continue;
                    }
                    for cc in 0..n {
                        if !r.at(cc, z).is_zero() && !c[a][cc][x].is_zero() {
                            acc += r.at(a, y) * r.at(cc, z) * &c[a][cc][x];
                        }
                    }
                }
                for b in 0..n {
                    if r.at(x, b).is_zero() {
                        continue;
                    }
                    for cc in 0..n {
                        if !r.at(cc, z).is_zero() && !c[b][cc][y].is_zero() {
                            acc += r.at(x, b) * r.at(cc, z) * &c[b][cc][y];
                        }
                    }
                }
                for b in 0..n {
                    if r.at(x, b).is_zero() {
                        continue;
                    }
                    for d in 0..n {
                        if !r.at(y, d).is_zero() && !c[b][d][z].is_zero() {
                            acc += r.at(x, b) * r.at(y, d) * &c[b][d][z];
                        }
                    }
                }
                t[x][y][z] = acc;
            }
        }
    }
    t
}

pub fn three_tensor_is_zero(t: &[Vec<Vec<Rat>>]) -> bool {
    t.iter().all(|p| p.iter().all(|q| q.iter().all(|v| v.is_zero())))
}

/// Ad-invariance of a 3-tensor: for every basis direction `i`,
/// `Σ_u (c_iu^x T^{uyz} + c_iu^y T^{xuz} + c_iu^z T^{xyu}) = 0`.
pub fn three_tensor_is_ad_invariant(alg: &LieAlg, t: &[Vec<Vec<Rat>>]) -> bool {
    let n = alg.dim();
    let c = alg.consts();
    for i in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut acc = Rat::zero();
                    for u in 0..n {
                        if !c[i][u][x].is_zero() {
                            acc += &c[i][u][x] * &t[u][y][z];
                        }
                        if !c[i][u][y].is_zero() {
                            acc += &c[i][u][y] * &t[x][u][z];
                        }
                        if !c[i][u][z].is_zero() {
                            acc += &c[i][u][z] * &t[x][y][u];
                        }
                    }
                    if !acc.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}
