//! Coproducts, invariant functionals, and the regular representation
//! unitaries of a finite quantum group.
//!
//! The coproduct is a `dim² × dim` matrix over the Kronecker pair index
//! `(p, q) ↦ p·dim + q`, so `Δ(e_j)` is column `j` and simple tensors have
//! Kronecker coefficient vectors. The invariant-functional solver works by
//! SVD nullspace; representations are assembled in the orthonormal GNS
//! frames.

use thiserror::Error;

use crate::algebra::{self, AlgebraSpec, Element, Functional, Violation};
use crate::gns::GnsData;
use crate::linalg::{self, cr, CMat, CVec};

/// Relative singular-value cutoff for nullspaces and ranks.
pub const RANK_CUTOFF: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct Coproduct {
    mat: CMat,
    dim: usize,
}

#[derive(Debug, Error)]
pub enum CoproductError {
    #[error("coproduct has shape {rows}×{cols}, want {want}²×{want}")]
    Shape { rows: usize, cols: usize, want: usize },
}

impl Coproduct {
    pub fn new(mat: CMat, dim: usize) -> Result<Self, CoproductError> {
        if mat.nrows() != dim * dim || mat.ncols() != dim {
            return Err(CoproductError::Shape { rows: mat.nrows(), cols: mat.ncols(), want: dim });
        }
        Ok(Self { mat, dim })
    }

    pub fn mat(&self) -> &CMat {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, x: &Element) -> CVec {
        &self.mat * x
    }

    /// `χ ∘ Δ`, the coproduct with swapped legs.
    pub fn flip(&self) -> Coproduct {
        Coproduct { mat: linalg::flip_op(self.dim) * &self.mat, dim: self.dim }
    }

    /// Slice `D_p` with `D_p[(q, j)] = Δ(e_j)` coefficient at `e_p ⊗ e_q`.
    pub fn first_slice(&self, p: usize) -> CMat {
        let n = self.dim;
        CMat::from_fn(n, n, |q, j| self.mat[(p * n + q, j)])
    }

    /// Slice over the second leg: `[(p, j)] ↦` coefficient at `e_p ⊗ e_q`.
    pub fn second_slice(&self, q: usize) -> CMat {
        let n = self.dim;
        CMat::from_fn(n, n, |p, j| self.mat[(p * n + q, j)])
    }
}

/// Check that the coproduct is a coassociative unital *-homomorphism.
pub fn validate_coproduct(alg: &AlgebraSpec, cop: &Coproduct, tol: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = alg.dim();
    let threshold = tol * alg.scale();
    let d = cop.mat();

    let unital = linalg::resid_vec(&cop.apply(alg.unit()), &alg.unit().kronecker(alg.unit()));
    if unital > threshold {
        out.push(Violation {
            check: "coproduct-unital".into(),
            residual: unital,
            detail: "Δ(1) differs from 1⊗1".into(),
        });
    }

    let star_big = alg.star_mat().kronecker(alg.star_mat());
    let star_resid = linalg::resid(&(d * alg.star_mat()), &(star_big * d.conjugate()));
    if star_resid > threshold {
        out.push(Violation {
            check: "coproduct-star".into(),
            residual: star_resid,
            detail: "Δ(x*) differs from Δ(x)*".into(),
        });
    }

    let tt = algebra::tensor(alg, alg);
    let mut hom: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let prod = alg.multiply(&alg.basis(i), &alg.basis(j)).expect("dims");
            let lhs = cop.apply(&prod);
            let rhs = tt
                .multiply(&cop.apply(&alg.basis(i)), &cop.apply(&alg.basis(j)))
                .expect("dims");
            hom = hom.max(linalg::resid_vec(&lhs, &rhs));
        }
    }
    if hom > threshold {
        out.push(Violation {
            check: "coproduct-multiplicative".into(),
            residual: hom,
            detail: "Δ(xy) differs from Δ(x)Δ(y)".into(),
        });
    }

    let left = d.kronecker(&linalg::eye(n)) * d;
    let right = linalg::eye(n).kronecker(d) * d;
    let coassoc = linalg::resid(&left, &right);
    if coassoc > threshold {
        out.push(Violation {
            check: "coassociativity".into(),
            residual: coassoc,
            detail: "(Δ⊗ι)Δ differs from (ι⊗Δ)Δ".into(),
        });
    }

    out
}

#[derive(Debug, Error)]
pub enum HaarError {
    #[error("no invariant functional (left nullity {left}, right nullity {right})")]
    NoInvariantFunctional { left: usize, right: usize },
    #[error(
        "invariant functional is not unique: solution space has dimension \
         (left {left}, right {right})"
    )]
    NonUniqueInvariant { left: usize, right: usize },
    #[error("invariant functional on the {side} is not positive: {detail}")]
    NotPositive { side: &'static str, detail: String },
    #[error(
        "invariant functional on the {side} is not faithful: gram eigenvalues \
         [{min_eig:.3e}, {max_eig:.3e}]"
    )]
    NotFaithful { side: &'static str, min_eig: f64, max_eig: f64 },
}

/// The two Haar functionals, normalized at the unit.
#[derive(Clone, Debug)]
pub struct HaarPair {
    pub phi: Functional,
    pub psi: Functional,
    pub left_nullity: usize,
    pub right_nullity: usize,
    /// Worst invariance equation residual after normalization.
    pub invariance_resid: f64,
}

fn left_invariance_system(alg: &AlgebraSpec, cop: &Coproduct) -> CMat {
    // Row (j, p), unknown q: Σ_q D[(p,q)][j] φ_q − φ_j unit_p = 0.
    let n = alg.dim();
    let mut a = CMat::zeros(n * n, n);
    for j in 0..n {
        for p in 0..n {
            for q in 0..n {
                a[(j * n + p, q)] += cop.mat[(p * n + q, j)];
            }
            a[(j * n + p, j)] -= alg.unit()[p];
        }
    }
    a
}

fn right_invariance_system(alg: &AlgebraSpec, cop: &Coproduct) -> CMat {
    // Row (j, q), unknown p: Σ_p D[(p,q)][j] ψ_p − ψ_j unit_q = 0.
    let n = alg.dim();
    let mut a = CMat::zeros(n * n, n);
    for j in 0..n {
        for q in 0..n {
            for p in 0..n {
                a[(j * n + q, p)] += cop.mat[(p * n + q, j)];
            }
            a[(j * n + q, j)] -= alg.unit()[q];
        }
    }
    a
}

fn check_state(
    alg: &AlgebraSpec,
    side: &'static str,
    raw: &CVec,
) -> Result<Functional, HaarError> {
    let normalizer = raw.dot(alg.unit());
    if normalizer.norm() < 1e-12 * linalg::max_abs_vec(raw) {
        return Err(HaarError::NotPositive {
            side,
            detail: "invariant functional vanishes on the unit".into(),
        });
    }
    let f = Functional(raw / normalizer);
    let (lo, hi) = f.gram_eigen_range(alg);
    if lo < -1e-9 * hi.max(1.0) {
        return Err(HaarError::NotPositive {
            side,
            detail: format!("gram eigenvalues range [{lo:.3e}, {hi:.3e}]"),
        });
    }
    if !(lo > crate::gns::FAITHFUL_CUTOFF * hi && hi > 0.0) {
        return Err(HaarError::NotFaithful { side, min_eig: lo, max_eig: hi });
    }
    Ok(f)
}

/// Solve for the left and right invariant functionals. Errors unless both
/// solution spaces are exactly one-dimensional and the normalized solutions
/// are faithful states.
pub fn solve_haar(alg: &AlgebraSpec, cop: &Coproduct) -> Result<HaarPair, HaarError> {
    let n = alg.dim();
    let left_sys = left_invariance_system(alg, cop);
    let right_sys = right_invariance_system(alg, cop);
    let left_null = linalg::nullspace(&left_sys, RANK_CUTOFF);
    let right_null = linalg::nullspace(&right_sys, RANK_CUTOFF);
    let (left, right) = (left_null.len(), right_null.len());
    // A solution space of dimension ≥ 2 on either side is the sharper
    // diagnosis, so it takes precedence over an empty space on the other.
    if left > 1 || right > 1 {
        return Err(HaarError::NonUniqueInvariant { left, right });
    }
    if left == 0 || right == 0 {
        return Err(HaarError::NoInvariantFunctional { left, right });
    }
    let phi = check_state(alg, "left", &left_null[0])?;
    let psi = check_state(alg, "right", &right_null[0])?;
    let invariance_resid = linalg::max_abs_vec(&(&left_sys * &phi.0))
        .max(linalg::max_abs_vec(&(&right_sys * &psi.0)));
    let _ = n;
    Ok(HaarPair { phi, psi, left_nullity: left, right_nullity: right, invariance_resid })
}

/// Unnormalized invariant-functional solution spaces (left, right), as
/// orthonormal nullspace bases of the invariance systems.
pub fn raw_invariant_solutions(alg: &AlgebraSpec, cop: &Coproduct) -> (Vec<CVec>, Vec<CVec>) {
    (
        linalg::nullspace(&left_invariance_system(alg, cop), RANK_CUTOFF),
        linalg::nullspace(&right_invariance_system(alg, cop), RANK_CUTOFF),
    )
}

/// Raw invariance residuals `‖(ι⊗φ)Δ − φ(·)1‖` and `‖(ψ⊗ι)Δ − ψ(·)1‖` for
/// a candidate pair of functionals, without normalization.
pub fn invariance_resids(
    alg: &AlgebraSpec,
    cop: &Coproduct,
    phi: &Functional,
    psi: &Functional,
) -> (f64, f64) {
    let left_sys = left_invariance_system(alg, cop);
    let right_sys = right_invariance_system(alg, cop);
    (
        linalg::max_abs_vec(&(&left_sys * &phi.0)),
        linalg::max_abs_vec(&(&right_sys * &psi.0)),
    )
}

/// Counit solved from `(ε⊗ι)Δ = ι = (ι⊗ε)Δ` as a least-squares system;
/// returns the functional and the system residual.
pub fn solve_counit(alg: &AlgebraSpec, cop: &Coproduct) -> (Functional, f64) {
    let n = alg.dim();
    let mut a = CMat::zeros(2 * n * n, n);
    let mut b = CVec::zeros(2 * n * n);
    for j in 0..n {
        for q in 0..n {
            for p in 0..n {
                a[(j * n + q, p)] += cop.mat[(p * n + q, j)];
            }
            b[j * n + q] = if q == j { cr(1.0) } else { cr(0.0) };
        }
        for p in 0..n {
            for q in 0..n {
                a[(n * n + j * n + p, q)] += cop.mat[(p * n + q, j)];
            }
            b[n * n + j * n + p] = if p == j { cr(1.0) } else { cr(0.0) };
        }
    }
    let (x, r) = linalg::lstsq_vec(&a, &b);
    (Functional(x), r)
}

#[derive(Debug, Error)]
pub enum RepError {
    #[error("regular representation is not unitary (residual {resid:.3e})")]
    NotUnitary { resid: f64 },
}

/// Left regular unitary `W` on `H₁ ⊗ H₂`: `first_leg` carries the algebra
/// action on `H₁`, `lambda` the cyclic map of the weight on `H₂`.
/// Characterized by `W*(ξ ⊗ Λ(x)) = Σ π(x₍₁₎)ξ ⊗ Λ(x₍₂₎)`.
pub fn left_unitary(cop: &Coproduct, first_leg: &[CMat], lambda: &CMat) -> CMat {
    let h1 = first_leg[0].nrows();
    let h2 = lambda.nrows();
    let lambda_inv = linalg::inv(lambda);
    let mut w_star = CMat::zeros(h1 * h2, h1 * h2);
    for p in 0..cop.dim {
        let block = lambda * cop.first_slice(p) * &lambda_inv;
        w_star += first_leg[p].kronecker(&block);
    }
    w_star.adjoint()
}

/// Right regular unitary `V` on `H₁ ⊗ H₂`: `lambda` is the cyclic map of
/// the right weight on `H₁`, `second_leg` the algebra action on `H₂`.
/// Characterized by `V(Λ(x) ⊗ ξ) = Σ Λ(x₍₁₎) ⊗ π(x₍₂₎)ξ`.
pub fn right_unitary(cop: &Coproduct, lambda: &CMat, second_leg: &[CMat]) -> CMat {
    let lambda_inv = linalg::inv(lambda);
    let h1 = lambda.nrows();
    let h2 = second_leg[0].nrows();
    let mut v = CMat::zeros(h1 * h2, h1 * h2);
    for q in 0..cop.dim {
        let block = lambda * cop.second_slice(q) * &lambda_inv;
        v += block.kronecker(&second_leg[q]);
    }
    v
}

#[derive(Clone, Debug)]
pub struct RegularRepresentations {
    /// Left regular unitary on `H ⊗ H`.
    pub w: CMat,
    /// Right regular unitary on `H ⊗ H`.
    pub v: CMat,
    pub w_unitarity: f64,
    pub v_unitarity: f64,
    /// Worst residual of `W*(1⊗x)W = Δ(x)` and `V(x⊗1)V* = Δ(x)` on basis
    /// elements.
    pub implement_resid: f64,
}

/// Build `W` and `V` on `H ⊗ H`, where `H` is the GNS space of the left
/// weight and `lambda_right` columns realize the right weight's cyclic map
/// on the same space.
pub fn build_regular_reps(
    alg: &AlgebraSpec,
    cop: &Coproduct,
    gns_phi: &GnsData,
    lambda_right: &CMat,
    tol: f64,
) -> Result<RegularRepresentations, RepError> {
    let w = left_unitary(cop, &gns_phi.rep, &gns_phi.lambda);
    let v = right_unitary(cop, lambda_right, &gns_phi.rep);
    let w_unitarity = linalg::unitarity_resid(&w);
    let v_unitarity = linalg::unitarity_resid(&v);
    let threshold = tol * alg.scale() * 1e3;
    if w_unitarity > threshold || v_unitarity > threshold {
        return Err(RepError::NotUnitary { resid: w_unitarity.max(v_unitarity) });
    }
    let n = alg.dim();
    let mut implement_resid: f64 = 0.0;
    for j in 0..n {
        let dx = cop.apply(&alg.basis(j));
        let mut rep_dx = CMat::zeros(w.nrows(), w.ncols());
        for p in 0..n {
            for q in 0..n {
                let coeff = dx[p * n + q];
                if coeff != cr(0.0) {
                    rep_dx += gns_phi.rep[p].kronecker(&gns_phi.rep[q]) * coeff;
                }
            }
        }
        let via_w = w.adjoint() * linalg::eye(gns_phi.hilbert_dim()).kronecker(&gns_phi.rep[j]) * &w;
        let via_v = &v * gns_phi.rep[j].kronecker(&linalg::eye(gns_phi.hilbert_dim())) * v.adjoint();
        implement_resid = implement_resid
            .max(linalg::resid(&via_w, &rep_dx))
            .max(linalg::resid(&via_v, &rep_dx));
    }
    Ok(RegularRepresentations { w, v, w_unitarity, v_unitarity, implement_resid })
}

/// Rank-based density checks: slices of `W` through the second leg span the
/// algebra, coproduct slices span it, and `Δ(A)(1⊗A)` spans the tensor
/// square.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub w_slice_rank: usize,
    pub w_slice_membership: f64,
    pub coproduct_slice_rank: usize,
    pub density_rank: usize,
    pub dim: usize,
}

impl DensityReport {
    pub fn passes(&self) -> bool {
        self.w_slice_rank == self.dim
            && self.coproduct_slice_rank == self.dim
            && self.density_rank == self.dim * self.dim
    }
}

pub fn check_densities(
    alg: &AlgebraSpec,
    cop: &Coproduct,
    gns_phi: &GnsData,
    w: &CMat,
) -> DensityReport {
    let n = alg.dim();
    let h = gns_phi.hilbert_dim();

    // Second-leg matrix-coefficient slices of W, pulled back to elements.
    let mut slice_vecs = CMat::zeros(n * n, h * h);
    let mut membership: f64 = 0.0;
    for i in 0..h {
        for j in 0..h {
            let block = CMat::from_fn(h, h, |s, t| w[(s * h + i, t * h + j)]);
            let (_, r) = gns_phi.to_element(&block);
            membership = membership.max(r);
            slice_vecs.row_mut(i * h + j).copy_from(&linalg::vec_of(&block).transpose());
        }
    }
    let w_slice_rank = linalg::rank(&slice_vecs.transpose(), RANK_CUTOFF);

    let mut cop_slices = CMat::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for q in 0..n {
                cop_slices[(i * n + j, q)] = cop.mat[(i * n + q, j)];
            }
        }
    }
    let coproduct_slice_rank = linalg::rank(&cop_slices.transpose(), RANK_CUTOFF);

    let tt = algebra::tensor(alg, alg);
    let mut density = CMat::zeros(n * n, n * n);
    for i in 0..n {
        let dx = cop.apply(&alg.basis(i));
        for j in 0..n {
            let rhs = alg.unit().kronecker(&alg.basis(j));
            let prod = tt.multiply(&dx, &rhs).expect("dims");
            density.column_mut(i * n + j).copy_from(&prod);
        }
    }
    let density_rank = linalg::rank(&density, RANK_CUTOFF);

    DensityReport {
        w_slice_rank,
        w_slice_membership: membership,
        coproduct_slice_rank,
        density_rank,
        dim: n,
    }
}

/// Dimensions of `{x : Δ(x) = x⊗1}` and `{x : Δ(x) = 1⊗x}`; both are one
/// for a quantum group.
pub fn scalar_kernel(alg: &AlgebraSpec, cop: &Coproduct) -> (usize, usize) {
    let n = alg.dim();
    let mut right_leg = CMat::zeros(n * n, n);
    let mut left_leg = CMat::zeros(n * n, n);
    for j in 0..n {
        for q in 0..n {
            right_leg[(j * n + q, j)] = alg.unit()[q];
            left_leg[(q * n + j, j)] = alg.unit()[q];
        }
    }
    let a1 = &cop.mat - right_leg;
    let a2 = &cop.mat - left_leg;
    (linalg::nullspace(&a1, RANK_CUTOFF).len(), linalg::nullspace(&a2, RANK_CUTOFF).len())
}

#[derive(Debug, Error)]
pub enum ModularElementError {
    #[error(
        "modular element extraction needs a tracial left invariant functional \
         (traciality residual {resid:.3e})"
    )]
    NonTracialUnsupported { resid: f64 },
    #[error("modular element is not positive: {detail}")]
    NotPositive { detail: String },
}

/// The positive invertible `δ` with `ψ = φ(δ^{1/2} · δ^{1/2})`, its powers,
/// and the scaling constant fitted from `φ ∘ τ_t = ν^{-t} φ`.
#[derive(Clone, Debug)]
pub struct ModularElementData {
    pub delta: Element,
    pub delta_sqrt: Element,
    pub delta_inv: Element,
    pub nu: f64,
    pub traciality_resid: f64,
    pub solve_resid: f64,
    pub nu_fit_resid: f64,
}

/// Solve `ψ = φ(δ ·)` under a tracial `φ` and take positive powers through
/// the GNS representation.
pub fn solve_modular_element(
    alg: &AlgebraSpec,
    haar: &HaarPair,
    gns_phi: &GnsData,
    tol: f64,
) -> Result<(Element, Element, Element, f64, f64), ModularElementError> {
    let traciality = haar.phi.traciality_resid(alg);
    if traciality > tol * alg.scale() * 1e3 {
        return Err(ModularElementError::NonTracialUnsupported { resid: traciality });
    }
    let n = alg.dim();
    // Σ_i δ_i φ(e_i e_j) = ψ(e_j).
    let mut pairing = CMat::zeros(n, n);
    for k in 0..n {
        pairing += &alg.mult()[k].transpose() * haar.phi.0[k];
    }
    let rhs = haar.psi.0.clone();
    let (delta, solve_resid) = linalg::lstsq_vec(&pairing, &rhs);
    let star_resid = linalg::resid_vec(&alg.star_of(&delta), &delta);
    if star_resid > 1e-8 {
        return Err(ModularElementError::NotPositive {
            detail: format!("δ is not self-adjoint (residual {star_resid:.3e})"),
        });
    }
    let op = gns_phi.pi(&delta);
    let (vals, _) = linalg::herm_eig(&op);
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    if lo <= 0.0 {
        return Err(ModularElementError::NotPositive {
            detail: format!("smallest eigenvalue {lo:.3e}"),
        });
    }
    let (sqrt, r1) = gns_phi.to_element(&linalg::herm_power(&op, 0.5));
    let (inverse, r2) = gns_phi.to_element(&linalg::herm_power(&op, -1.0));
    Ok((delta, sqrt, inverse, solve_resid.max(r1).max(r2), traciality))
}

/// Fit `ν` from covector equations `φ ∘ τ_t = ν^{-t} φ` over the sampled
/// `t` grid; returns `(ν, worst fit residual)`.
pub fn fit_nu(phi: &Functional, tau_maps: &[(f64, CMat)]) -> (f64, f64) {
    let denom = phi.0.dotc(&phi.0).re;
    let mut ratios = Vec::new();
    let mut fit: f64 = 0.0;
    for (t, tau) in tau_maps {
        let moved = tau.transpose() * &phi.0;
        let c_t = phi.0.dotc(&moved) / cr(denom);
        fit = fit.max(linalg::max_abs_vec(&(&moved - &phi.0 * c_t)));
        ratios.push((*t, c_t));
    }
    let mut nu = 1.0f64;
    for (t, c_t) in &ratios {
        if (*t - 1.0).abs() < 1e-12 {
            fit = fit.max(c_t.im.abs());
            nu = 1.0 / c_t.re;
        }
    }
    for (t, c_t) in &ratios {
        fit = fit.max((c_t - cr(nu.powf(-t))).norm());
    }
    (nu, fit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn haar_on_cyclic_function_algebra_is_uniform() {
        let (alg, cop) = examples::function_algebra(&examples::cyclic(3));
        assert!(validate_coproduct(&alg, &cop, 1e-9).is_empty());
        let haar = solve_haar(&alg, &cop).unwrap();
        assert_eq!(haar.left_nullity, 1);
        for i in 0..3 {
            assert!((haar.phi.0[i] - cr(1.0 / 3.0)).norm() < 1e-12);
            assert!((haar.psi.0[i] - cr(1.0 / 3.0)).norm() < 1e-12);
        }
        assert!(haar.invariance_resid < 1e-12);
    }

    #[test]
    fn haar_on_group_algebra_is_evaluation_at_identity() {
        let (alg, cop) = examples::group_algebra(&examples::s3());
        let haar = solve_haar(&alg, &cop).unwrap();
        assert!((haar.phi.0[0] - cr(1.0)).norm() < 1e-12);
        for i in 1..6 {
            assert!(haar.phi.0[i].norm() < 1e-12);
        }
    }

    #[test]
    fn counit_of_function_algebra_evaluates_at_identity() {
        let (alg, cop) = examples::function_algebra(&examples::s3());
        let (eps, r) = solve_counit(&alg, &cop);
        assert!(r < 1e-12);
        // ε(δ_g) = [g = e]; the identity is element 0 of the table.
        assert!((eps.0[0] - cr(1.0)).norm() < 1e-10);
        for i in 1..6 {
            assert!(eps.0[i].norm() < 1e-10);
        }
    }

    #[test]
    fn scalar_kernel_is_trivial_for_groups() {
        let (alg, cop) = examples::function_algebra(&examples::cyclic(4));
        assert_eq!(scalar_kernel(&alg, &cop), (1, 1));
        let (alg, cop) = examples::group_algebra(&examples::q8());
        assert_eq!(scalar_kernel(&alg, &cop), (1, 1));
    }

    #[test]
    fn blocksum_specimen_fails_uniqueness_but_not_coproduct_axioms() {
        let (alg, cop) = examples::invalid_blocksum();
        assert!(crate::algebra::validate_algebra(&alg, 1e-9).is_empty());
        assert!(validate_coproduct(&alg, &cop, 1e-9).is_empty());
        let (k1, k2) = scalar_kernel(&alg, &cop);
        assert_eq!(k1.max(k2), 2, "one-sided scalar kernel is two-dimensional");
        match solve_haar(&alg, &cop) {
            Err(HaarError::NonUniqueInvariant { left, right }) => {
                assert!(left.max(right) >= 2);
            }
            other => panic!("expected NonUniqueInvariant, got {other:?}"),
        }
    }

    #[test]
    fn left_unitary_on_z2_group_algebra_is_the_frozen_permutation() {
        let (alg, cop) = examples::group_algebra(&examples::cyclic(2));
        let haar = solve_haar(&alg, &cop).unwrap();
        let g = crate::gns::gns(&alg, &haar.phi).unwrap();
        let w = left_unitary(&cop, &g.rep, &g.lambda);
        // W(u_k ⊗ u_g) = u_{g⁻¹k} ⊗ u_g over the group basis: the
        // permutation fixing 00 and 10 and swapping 01 with 11.
        let mut want = CMat::zeros(4, 4);
        want[(0, 0)] = cr(1.0);
        want[(3, 1)] = cr(1.0);
        want[(2, 2)] = cr(1.0);
        want[(1, 3)] = cr(1.0);
        assert!(linalg::resid(&w, &want) < 1e-12);
    }

    #[test]
    fn regular_reps_implement_the_coproduct() {
        let (alg, cop) = examples::function_algebra(&examples::s3());
        let haar = solve_haar(&alg, &cop).unwrap();
        let g = crate::gns::gns(&alg, &haar.phi).unwrap();
        let reps = build_regular_reps(&alg, &cop, &g, &g.lambda, 1e-9).unwrap();
        assert!(reps.w_unitarity < 1e-12);
        assert!(reps.v_unitarity < 1e-12);
        assert!(reps.implement_resid < 1e-12);
    }

    #[test]
    fn density_ranks_for_s3_function_algebra() {
        let (alg, cop) = examples::function_algebra(&examples::s3());
        let haar = solve_haar(&alg, &cop).unwrap();
        let g = crate::gns::gns(&alg, &haar.phi).unwrap();
        let reps = build_regular_reps(&alg, &cop, &g, &g.lambda, 1e-9).unwrap();
        let d = check_densities(&alg, &cop, &g, &reps.w);
        assert_eq!((d.w_slice_rank, d.coproduct_slice_rank, d.density_rank), (6, 6, 36));
        assert!(d.w_slice_membership < 1e-12);
        assert!(d.passes());
    }

    #[test]
    fn modular_element_of_a_group_example_is_the_unit() {
        let (alg, cop) = examples::function_algebra(&examples::d4());
        let haar = solve_haar(&alg, &cop).unwrap();
        let g = crate::gns::gns(&alg, &haar.phi).unwrap();
        let (delta, sqrt, inv, resid, _) =
            solve_modular_element(&alg, &haar, &g, 1e-9).unwrap();
        assert!(linalg::resid_vec(&delta, alg.unit()) < 1e-10);
        assert!(linalg::resid_vec(&sqrt, alg.unit()) < 1e-10);
        assert!(linalg::resid_vec(&inv, alg.unit()) < 1e-10);
        assert!(resid < 1e-10);
    }
}
