//! The antipode built analytically: an antilinear operator `K` on the GNS
//! space is assembled from slices of the left regular unitary, its polar
//! decomposition `K = I L^{1/2}` yields the unitary antipode `R = I (·)* I`
//! and the scaling maps `τ_t = L^{it} (·) L^{-it}`, and the antipode itself
//! is recovered as `S = R ∘ τ_{-i/2}`.

use thiserror::Error;

use crate::algebra::{AlgebraSpec, Element, Functional};
use crate::antilinear::AntilinearOp;
use crate::gns::GnsData;
use crate::linalg::{
    flip_op, herm_power, herm_upower, inv, lstsq, max_abs, max_abs_vec, rank, CMat,
};
use crate::quantum_group::Coproduct;

#[derive(Debug, Error)]
pub enum AntipodeError {
    #[error("antipode assignment determines the operator only on a rank-{rank} subspace of a dim-{dim} space")]
    RankDeficient { rank: usize, dim: usize },
    #[error("antipode assignment is inconsistent (residual {resid:.3e}); the input does not carry a quantum-group structure")]
    InconsistentAssignment { resid: f64 },
    #[error("implemented antipode generator squares to something other than the identity (residual {resid:.3e})")]
    NotInvolutive { resid: f64 },
}

/// Antipode package: the antilinear generator, its polar parts, and the
/// induced coefficient maps on the algebra.
pub struct AntipodeData {
    /// Antilinear `K` with `K Λ_ψ((ι⊗ω)W) = Λ_ψ((ι⊗ω̄)W)`.
    pub k: AntilinearOp,
    /// Antiunitary phase of the polar decomposition `K = I L^{1/2}`.
    pub i_op: AntilinearOp,
    /// Positive part `L = K†K`.
    pub l_mat: CMat,
    /// Coefficient map of the unitary antipode `R(x) = I x* I`.
    pub r_map: CMat,
    /// Coefficient map of the analytic continuation `τ_{-i/2}(x) = L^{1/2} x L^{-1/2}`.
    pub tau_half: CMat,
    /// Coefficient map of the antipode `S = R ∘ τ_{-i/2}`.
    pub s_map: CMat,
    /// Least-squares residual of the defining assignment for `K`.
    pub build_resid: f64,
    /// Worst membership residual among all pullbacks to the algebra.
    pub pullback_resid: f64,
}

/// Elements `x_{E_uv} = (ι⊗ω_{E_uv})W` for all matrix units, as columns
/// `u·h + v` of an `n × h²` matrix, plus the worst membership residual.
pub fn slice_elements(gns: &GnsData, w: &CMat) -> (CMat, f64) {
    let h = gns.hilbert_dim();
    let n = gns.lambda.ncols();
    let mut slice = CMat::zeros(n, h * h);
    let mut worst: f64 = 0.0;
    for u in 0..h {
        for v in 0..h {
            // ω_F(T) = Tr(F T) at F = E_uv picks entry (v,u) of each block.
            let b = CMat::from_fn(h, h, |s, t| w[(s * h + v, t * h + u)]);
            let (el, r) = gns.to_element(&b);
            slice.column_mut(u * h + v).copy_from(&el);
            worst = worst.max(r);
        }
    }
    (slice, worst)
}

/// Coefficient map of `x ↦ f(π(x))` pulled back through the representation,
/// with the worst membership residual.
pub fn coeff_map(gns: &GnsData, f: impl Fn(&CMat) -> CMat) -> (CMat, f64) {
    let n = gns.rep.len();
    let mut map = CMat::zeros(n, n);
    let mut worst: f64 = 0.0;
    for j in 0..n {
        let (el, r) = gns.to_element(&f(&gns.rep[j]));
        map.column_mut(j).copy_from(&el);
        worst = worst.max(r);
    }
    (map, worst)
}

/// Build the antipode from the left regular unitary. `lambda_psi` is the
/// GNS map of the right invariant functional realized on the same space.
pub fn build_antipode(
    alg: &AlgebraSpec,
    gns: &GnsData,
    lambda_psi: &CMat,
    w: &CMat,
) -> Result<AntipodeData, AntipodeError> {
    let n = alg.dim();
    let h = gns.hilbert_dim();
    let (slice, slice_resid) = slice_elements(gns, w);
    let a = lambda_psi * &slice;
    let flip = flip_op(h);

    // Generating family: for every basis pair (c, d) and every matrix unit
    // F, the functional ω(π(c) · π(d)†) corresponds to G = π(d)† F π(c),
    // and K sends the vector of G to the vector of G†. Row-major vec gives
    // vec(π(d)† F π(c)) = (π(d)† ⊗ π(c)ᵀ) vec(F).
    let cols = n * n * h * h;
    let mut x = CMat::zeros(h, cols);
    let mut y = CMat::zeros(h, cols);
    let mut off = 0;
    for c in 0..n {
        for d in 0..n {
            let pc = &gns.rep[c];
            let pd = &gns.rep[d];
            let xb = &a * pd.adjoint().kronecker(&pc.transpose());
            let yb = (&a * pc.adjoint().kronecker(&pd.transpose())) * &flip;
            x.view_mut((0, off), (h, h * h)).copy_from(&xb);
            y.view_mut((0, off), (h, h * h)).copy_from(&yb);
            off += h * h;
        }
    }

    let x_rank = rank(&x, 1e-10);
    if x_rank < h {
        return Err(AntipodeError::RankDeficient { rank: x_rank, dim: h });
    }
    // Antilinearity: K_m conj(X) = Y, solved column-stacked via transposes.
    let (kt, build_resid) = lstsq(&x.conjugate().transpose(), &y.transpose());
    let scale = max_abs(&x).max(max_abs(&y)).max(1.0);
    if build_resid > 1e-8 * scale {
        return Err(AntipodeError::InconsistentAssignment { resid: build_resid });
    }
    let k = AntilinearOp::new(kt.transpose());

    let inv_resid = k.involution_resid();
    if inv_resid > 1e-8 * scale {
        return Err(AntipodeError::NotInvolutive { resid: inv_resid });
    }

    let (i_op, l_mat) = k.polar();
    let (r_map, r_resid) = coeff_map(gns, |p| i_op.sandwich(&p.adjoint()));
    let l_pos = herm_power(&l_mat, 0.5);
    let l_neg = herm_power(&l_mat, -0.5);
    let (tau_half, t_resid) = coeff_map(gns, |p| &l_pos * p * &l_neg);
    let s_map = &r_map * &tau_half;

    Ok(AntipodeData {
        k,
        i_op,
        l_mat,
        r_map,
        tau_half,
        s_map,
        build_resid,
        pullback_resid: slice_resid.max(r_resid).max(t_resid),
    })
}

impl AntipodeData {
    /// Coefficient map of `τ_t(x) = L^{it} x L^{-it}` with membership residual.
    pub fn tau_map(&self, gns: &GnsData, t: f64) -> (CMat, f64) {
        let u = herm_upower(&self.l_mat, t);
        let ui = u.adjoint();
        coeff_map(gns, |p| &u * p * &ui)
    }

    /// Apply the antipode to an element by coefficients.
    pub fn s_of(&self, x: &Element) -> Element {
        &self.s_map * x
    }
}

/// Residual of the counit law `m(S⊗ι)Δ(x) = ε(x)·1` over the basis.
pub fn hopf_counit_resid(
    alg: &AlgebraSpec,
    cop: &Coproduct,
    s_map: &CMat,
    counit: &Functional,
) -> f64 {
    let n = alg.dim();
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let img = cop.apply(&alg.basis(k));
        let mut acc = Element::zeros(n);
        for p in 0..n {
            for q in 0..n {
                let coef = img[p * n + q];
                if coef.norm() > 0.0 {
                    let sp = s_map.column(p).clone_owned();
                    let prod = alg
                        .multiply(&sp, &alg.basis(q))
                        .expect("basis dimensions agree");
                    acc += prod * coef;
                }
            }
        }
        let target = alg.unit().clone_owned() * counit.eval(&alg.basis(k));
        worst = worst.max(max_abs_vec(&(acc - target)));
    }
    worst
}

/// A-priori antilinear generator for group-derived specimens, where the
/// antipode permutes the basis by inversion: `K = Λ_ψ ∘ * ∘ S ∘ Λ_ψ⁻¹`.
pub fn group_oracle_k(alg: &AlgebraSpec, lambda_psi: &CMat, s_perm: &CMat) -> AntilinearOp {
    let li = inv(lambda_psi);
    AntilinearOp::new(lambda_psi * alg.star_mat() * s_perm.conjugate() * li.conjugate())
}
