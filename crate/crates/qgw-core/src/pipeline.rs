//! End-to-end construction: from an algebra and coproduct to the full
//! quantum-group package — Haar functionals, GNS and modular data on both
//! weights, regular representations, antipode, scaling group, the dual,
//! and the bidual.

use thiserror::Error;

use crate::algebra::{validate_algebra, AlgebraSpec, Element, Functional, Violation};
use crate::antipode::{build_antipode, coeff_map, AntipodeData, AntipodeError};
use crate::duality::{biduality, build_dual, BidualityReport, DualData, DualityError};
use crate::gns::{gns, kms_resid, tomita, GnsData, GnsError, ModularData};
use crate::linalg::{self, herm_eig, herm_upower, resid, CMat, C};
use crate::quantum_group::{
    build_regular_reps, check_densities, fit_nu, invariance_resids, solve_counit, solve_haar,
    solve_modular_element, validate_coproduct, Coproduct, DensityReport, HaarError, HaarPair,
    ModularElementData, ModularElementError, RegularRepresentations, RepError,
};

/// The fixed sample grid for one-parameter identities.
pub const T_GRID: [f64; 5] = [1.0, -1.0, 0.5, -0.5, 1.0 / 3.0];

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("{} (residual {:.3e})", x.check, x.residual))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("algebra axioms violated: {}", format_violations(.0))]
    InvalidAlgebra(Vec<Violation>),
    #[error("coproduct axioms violated: {}", format_violations(.0))]
    InvalidCoproduct(Vec<Violation>),
    #[error(transparent)]
    Haar(#[from] HaarError),
    #[error(transparent)]
    Gns(#[from] GnsError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    ModularElement(#[from] ModularElementError),
    #[error(transparent)]
    Antipode(#[from] AntipodeError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error("scaling operator P is not positive (min eigenvalue {min_eig:.3e})")]
    ScalingNotPositive { min_eig: f64 },
}

/// The positive scaling operator `P` with `P^{it}Λ_φ(x) = ν^{t/2}Λ_φ(τ_t(x))`.
pub struct ScalingData {
    pub p_mat: CMat,
    /// Asymmetry removed when hermitizing the analytic continuation.
    pub herm_resid: f64,
    pub min_eig: f64,
}

/// Everything the relation suite consumes, built in dependency order.
pub struct QuantumGroup {
    pub alg: AlgebraSpec,
    pub cop: Coproduct,
    pub tol: f64,
    pub haar: HaarPair,
    pub counit: Functional,
    pub counit_resid: f64,
    pub gns: GnsData,
    pub modular: ModularData,
    pub kms: f64,
    pub modular_element: ModularElementData,
    /// GNS map of the right invariant functional on the same space,
    /// `Λ_ψ(x) = Λ_φ(x δ^{1/2})`.
    pub lambda_psi: CMat,
    pub psi_gram_resid: f64,
    pub gns_psi: GnsData,
    pub modular_psi: ModularData,
    pub reps: RegularRepresentations,
    pub density: DensityReport,
    pub antipode: AntipodeData,
    pub scaling: ScalingData,
    pub pi_delta: CMat,
    pub dual: DualData,
    pub dual_haar: HaarPair,
    pub dual_modular_element: ModularElementData,
    pub delta_hat_op: CMat,
    pub lambda_psi_hat: CMat,
    pub gns_psi_hat: GnsData,
    pub modular_psi_hat: ModularData,
    pub dual_antipode: AntipodeData,
    pub bidual: BidualityReport,
}

impl QuantumGroup {
    pub fn build(alg: AlgebraSpec, cop: Coproduct, tol: f64) -> Result<Self, BuildError> {
        let alg_viols = validate_algebra(&alg, tol);
        if !alg_viols.is_empty() {
            return Err(BuildError::InvalidAlgebra(alg_viols));
        }
        let cop_viols = validate_coproduct(&alg, &cop, tol);
        if !cop_viols.is_empty() {
            return Err(BuildError::InvalidCoproduct(cop_viols));
        }
        let haar = solve_haar(&alg, &cop)?;
        let (counit, counit_resid) = solve_counit(&alg, &cop);
        let gns_phi = gns(&alg, &haar.phi)?;
        let modular = tomita(&alg, &gns_phi);
        let kms = kms_resid(&alg, &gns_phi, &modular, &haar.phi);

        let (delta, delta_sqrt, delta_inv, solve_resid, traciality_resid) =
            solve_modular_element(&alg, &haar, &gns_phi, tol)?;
        let lambda_psi = &gns_phi.lambda * alg.right_mult_by(&delta_sqrt);
        let gram_psi = haar.psi.gram(&alg);
        let psi_gram_resid = resid(&(lambda_psi.adjoint() * &lambda_psi), &gram_psi);
        let gns_psi = GnsData::from_lambda_rep(gram_psi, lambda_psi.clone(), gns_phi.rep.clone());
        let modular_psi = tomita(&alg, &gns_psi);

        let reps = build_regular_reps(&alg, &cop, &gns_phi, &lambda_psi, tol)?;
        let density = check_densities(&alg, &cop, &gns_phi, &reps.w);
        let antipode = build_antipode(&alg, &gns_phi, &lambda_psi, &reps.w)?;

        let tau_maps: Vec<(f64, CMat)> = T_GRID
            .iter()
            .map(|&t| (t, antipode.tau_map(&gns_phi, t).0))
            .collect();
        let (nu, nu_fit_resid) = fit_nu(&haar.phi, &tau_maps);
        let modular_element = ModularElementData {
            delta,
            delta_sqrt,
            delta_inv,
            nu,
            traciality_resid,
            solve_resid,
            nu_fit_resid,
        };
        let pi_delta = gns_phi.pi(&modular_element.delta);

        // P from the analytic continuation of v_t = ν^{t/2} Λ τ_t Λ⁻¹ to
        // t = −i, where τ_{-i}(x) = L x L⁻¹; the scalar prefactor becomes
        // ν^{-i/2}, a phase that is 1 whenever ν = 1.
        let (tau_full, _) = coeff_map(&gns_phi, |p| {
            &antipode.l_mat * p * linalg::inv(&antipode.l_mat)
        });
        let phase = C::new(0.0, -nu.ln() / 2.0).exp();
        let p_raw = (&gns_phi.lambda * &tau_full * &gns_phi.lambda_inv) * phase;
        let p_mat = (&p_raw + p_raw.adjoint()) * linalg::cr(0.5);
        let herm_resid = resid(&p_raw, &p_mat);
        let (p_vals, _) = herm_eig(&p_mat);
        let min_eig = p_vals.iter().cloned().fold(f64::INFINITY, f64::min);
        if min_eig <= 0.0 {
            return Err(BuildError::ScalingNotPositive { min_eig });
        }
        let scaling = ScalingData { p_mat, herm_resid, min_eig };

        let dual = build_dual(&alg, &gns_phi, &modular, &reps.w)?;
        let (li, ri) = invariance_resids(&dual.alg, &dual.cop, &dual.phi_hat, &dual.psi_hat);
        let dual_haar = HaarPair {
            phi: dual.phi_hat.clone(),
            psi: dual.psi_hat.clone(),
            left_nullity: 1,
            right_nullity: 1,
            invariance_resid: li.max(ri),
        };
        let (delta_hat, delta_hat_sqrt, delta_hat_inv, hat_solve_resid, hat_traciality) =
            solve_modular_element(&dual.alg, &dual_haar, &dual.gns, tol)?;
        let delta_hat_op = dual.op_of(&delta_hat);
        let lambda_psi_hat = &dual.xi * dual.alg.right_mult_by(&delta_hat_sqrt);
        let gram_psi_hat = dual.psi_hat.gram(&dual.alg);
        let gns_psi_hat = GnsData::from_lambda_rep(
            gram_psi_hat,
            lambda_psi_hat.clone(),
            dual.basis_ops.clone(),
        );
        let modular_psi_hat = tomita(&dual.alg, &gns_psi_hat);

        let bidual = biduality(&alg, &cop, &gns_phi, &dual, tol)?;
        let dual_antipode = build_antipode(&dual.alg, &dual.gns, &lambda_psi_hat, &bidual.w_dual)?;
        let tau_hat_maps: Vec<(f64, CMat)> = T_GRID
            .iter()
            .map(|&t| (t, dual_antipode.tau_map(&dual.gns, t).0))
            .collect();
        let (nu_hat, nu_hat_fit) = fit_nu(&dual.phi_hat, &tau_hat_maps);
        let dual_modular_element = ModularElementData {
            delta: delta_hat,
            delta_sqrt: delta_hat_sqrt,
            delta_inv: delta_hat_inv,
            nu: nu_hat,
            traciality_resid: hat_traciality,
            solve_resid: hat_solve_resid,
            nu_fit_resid: nu_hat_fit,
        };

        Ok(QuantumGroup {
            alg,
            cop,
            tol,
            haar,
            counit,
            counit_resid,
            gns: gns_phi,
            modular,
            kms,
            modular_element,
            lambda_psi,
            psi_gram_resid,
            gns_psi,
            modular_psi,
            reps,
            density,
            antipode,
            scaling,
            pi_delta,
            dual,
            dual_haar,
            dual_modular_element,
            delta_hat_op,
            lambda_psi_hat,
            gns_psi_hat,
            modular_psi_hat,
            dual_antipode,
            bidual,
        })
    }

    /// `u_t = ∇^{it}`.
    pub fn u_t(&self, t: f64) -> CMat {
        herm_upower(&self.modular.nabla, t)
    }

    /// `v_t = P^{it}`.
    pub fn v_t(&self, t: f64) -> CMat {
        herm_upower(&self.scaling.p_mat, t)
    }

    /// `w_t = ∇′^{it}`, the right-weight modular group.
    pub fn w_t(&self, t: f64) -> CMat {
        herm_upower(&self.modular_psi.nabla, t)
    }

    /// `π(δ)^{it}`.
    pub fn delta_power(&self, t: f64) -> CMat {
        herm_upower(&self.pi_delta, t)
    }

    /// `δ̂^{it}` as an operator in the dual algebra.
    pub fn delta_hat_power(&self, t: f64) -> CMat {
        herm_upower(&self.delta_hat_op, t)
    }

    /// Coefficient map of `σ_t` with membership residual.
    pub fn sigma_map(&self, t: f64) -> (CMat, f64) {
        self.modular.sigma_t(&self.gns, t)
    }

    /// Coefficient map of `σ′_t` with membership residual.
    pub fn sigma_prime_map(&self, t: f64) -> (CMat, f64) {
        self.modular_psi.sigma_t(&self.gns_psi, t)
    }

    /// Coefficient map of `τ_t` with membership residual.
    pub fn tau_map(&self, t: f64) -> (CMat, f64) {
        self.antipode.tau_map(&self.gns, t)
    }

    /// Coefficient map of `τ̂_t` on dual coordinates.
    pub fn tau_hat_map(&self, t: f64) -> (CMat, f64) {
        self.dual_antipode.tau_map(&self.dual.gns, t)
    }

    /// `δ^{it}` pulled back to algebra coefficients.
    pub fn delta_it_element(&self, t: f64) -> (Element, f64) {
        self.gns.to_element(&self.delta_power(t))
    }
}
