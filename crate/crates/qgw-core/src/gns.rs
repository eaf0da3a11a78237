//! GNS representations and modular theory for faithful positive functionals.
//!
//! `gns` turns a functional into a concrete Hilbert space: the Gram matrix
//! of the basis is Cholesky-factored and all vectors and operators are
//! expressed in the resulting orthonormal frame. `tomita` builds the
//! conjugate-linear involution `Λ(x) ↦ Λ(x*)`, its polar decomposition
//! `T = J ∇^{1/2}`, and the modular automorphism group; `relative_tomita`
//! does the same for a pair of functionals and exposes the cocycle
//! `u_t = ∇₁^{it} ∇_r^{-it}`.

use thiserror::Error;

use crate::algebra::{AlgebraSpec, Element, Functional};
use crate::antilinear::AntilinearOp;
use crate::linalg::{self, CMat, CVec};

/// Eigenvalue ratio below which a Gram matrix counts as degenerate.
pub const FAITHFUL_CUTOFF: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum GnsError {
    #[error(
        "functional is not faithful positive: gram eigenvalues range \
         [{min_eig:.3e}, {max_eig:.3e}]"
    )]
    NotFaithful { min_eig: f64, max_eig: f64 },
}

/// A functional realized on its GNS space, everything in orthonormal
/// coordinates.
#[derive(Clone, Debug)]
pub struct GnsData {
    /// `gram[a][b] = φ(e_a* e_b)`.
    pub gram: CMat,
    /// Columns are `Λ(e_j)`; for a Cholesky frame this is upper triangular.
    pub lambda: CMat,
    pub lambda_inv: CMat,
    /// `π(e_i)` acting on the GNS space.
    pub rep: Vec<CMat>,
    rep_stack: CMat,
    rep_pinv: CMat,
}

impl GnsData {
    /// Assemble from an explicit cyclic-vector map and representation; used
    /// both by `gns` and by the dual side, where `Λ` is not triangular.
    pub fn from_lambda_rep(gram: CMat, lambda: CMat, rep: Vec<CMat>) -> Self {
        let lambda_inv = linalg::inv(&lambda);
        let h = rep[0].nrows();
        let n = rep.len();
        let mut rep_stack = CMat::zeros(h * h, n);
        for (i, r) in rep.iter().enumerate() {
            rep_stack.column_mut(i).copy_from(&linalg::vec_of(r));
        }
        let svd = nalgebra::SVD::new(rep_stack.clone(), true, true);
        let u = svd.u.as_ref().expect("svd u");
        let vt = svd.v_t.as_ref().expect("svd v_t");
        let sv = &svd.singular_values;
        let smax = sv.iter().cloned().fold(0.0f64, f64::max);
        let mut sinv = CMat::zeros(n, u.ncols());
        for i in 0..sv.len() {
            if sv[i] > 1e-13 * smax {
                sinv[(i, i)] = linalg::cr(1.0 / sv[i]);
            }
        }
        let rep_pinv = vt.adjoint() * sinv * u.adjoint();
        Self { gram, lambda, lambda_inv, rep, rep_stack, rep_pinv }
    }

    pub fn hilbert_dim(&self) -> usize {
        self.rep[0].nrows()
    }

    pub fn lambda_of(&self, x: &Element) -> CVec {
        &self.lambda * x
    }

    pub fn pi(&self, x: &Element) -> CMat {
        let h = self.hilbert_dim();
        let mut m = CMat::zeros(h, h);
        for (i, r) in self.rep.iter().enumerate() {
            if x[i] != linalg::cr(0.0) {
                m += r * x[i];
            }
        }
        m
    }

    /// Nearest element of the represented algebra, with the entrywise
    /// residual of the reconstruction. A residual at roundoff scale is a
    /// membership proof at this dimension.
    pub fn to_element(&self, op: &CMat) -> (Element, f64) {
        let x = &self.rep_pinv * linalg::vec_of(op);
        let back = &self.rep_stack * &x;
        let r = linalg::max_abs_vec(&(back - linalg::vec_of(op)));
        (x, r)
    }
}

/// GNS data of a faithful positive functional.
pub fn gns(alg: &AlgebraSpec, phi: &Functional) -> Result<GnsData, GnsError> {
    let gram = phi.gram(alg);
    let (min_eig, max_eig) = phi.gram_eigen_range(alg);
    if !(min_eig > FAITHFUL_CUTOFF * max_eig && max_eig > 0.0) {
        return Err(GnsError::NotFaithful { min_eig, max_eig });
    }
    let frame = linalg::cholesky_frame(&gram)
        .ok_or(GnsError::NotFaithful { min_eig, max_eig })?;
    let frame_inv = linalg::inv(&frame);
    let rep = (0..alg.dim())
        .map(|i| &frame * alg.left_mult_by(&alg.basis(i)) * &frame_inv)
        .collect();
    Ok(GnsData::from_lambda_rep(gram, frame, rep))
}

/// Modular data of one functional: `t_op = j ∘ nabla^{1/2}`.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub t_op: AntilinearOp,
    pub nabla: CMat,
    pub j: AntilinearOp,
}

impl ModularData {
    /// Coefficient matrix of `σ_t = ∇^{it} · ∇^{-it}` together with the
    /// worst membership residual of the conjugated basis operators.
    pub fn sigma_t(&self, gns: &GnsData, t: f64) -> (CMat, f64) {
        self.conjugation_map(gns, &linalg::herm_upower(&self.nabla, t))
    }

    /// Coefficient matrix of the analytic extension `σ_{is}` (so `s = -1`
    /// gives `σ_{-i} = ∇ · ∇^{-1}`).
    pub fn sigma_imag(&self, gns: &GnsData, s: f64) -> (CMat, f64) {
        self.conjugation_map(gns, &linalg::herm_power(&self.nabla, -s))
    }

    fn conjugation_map(&self, gns: &GnsData, u: &CMat) -> (CMat, f64) {
        let uinv = linalg::inv(u);
        let n = gns.rep.len();
        let mut map = CMat::zeros(n, n);
        let mut worst: f64 = 0.0;
        for j in 0..n {
            let conj = u * &gns.rep[j] * &uinv;
            let (x, r) = gns.to_element(&conj);
            worst = worst.max(r);
            map.column_mut(j).copy_from(&x);
        }
        (map, worst)
    }
}

/// Modular data of the functional behind `gns`.
pub fn tomita(alg: &AlgebraSpec, gns: &GnsData) -> ModularData {
    let t_mat = &gns.lambda * alg.star_mat() * gns.lambda_inv.conjugate();
    let t_op = AntilinearOp::new(t_mat);
    let (j, nabla) = t_op.polar();
    ModularData { t_op, nabla, j }
}

/// Worst deviation from the KMS property `φ(xy) = φ(y σ_{-i}(x))` over
/// basis pairs.
pub fn kms_resid(alg: &AlgebraSpec, gns: &GnsData, modular: &ModularData, phi: &Functional) -> f64 {
    let (sigma, _) = modular.sigma_imag(gns, -1.0);
    let mut worst: f64 = 0.0;
    for i in 0..alg.dim() {
        let si = sigma.column(i).into_owned();
        for j in 0..alg.dim() {
            let lhs = phi.eval(&alg.multiply(&alg.basis(i), &alg.basis(j)).expect("dims"));
            let rhs = phi.eval(&alg.multiply(&alg.basis(j), &si).expect("dims"));
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// Relative modular data for a pair of faithful positive functionals:
/// the closure of `Λ₁(x) ↦ Λ₂(x*)` and its polar parts.
#[derive(Clone, Debug)]
pub struct RelativeModularData {
    /// Conjugate-linear, from the first GNS space to the second.
    pub t_r: AntilinearOp,
    /// Positive operator on the first GNS space.
    pub nabla_r: CMat,
    /// Antiunitary part, from the first GNS space to the second.
    pub j_r: AntilinearOp,
}

impl RelativeModularData {
    /// Connes cocycle `u_t = ∇₁^{it} ∇_r^{-it}` on the first GNS space;
    /// `modular1` is the modular data of the first functional.
    pub fn cocycle(&self, modular1: &ModularData, t: f64) -> CMat {
        linalg::herm_upower(&modular1.nabla, t) * linalg::herm_upower(&self.nabla_r, -t)
    }

    /// The cocycle as an algebra element, with its membership residual.
    pub fn cocycle_element(
        &self,
        gns1: &GnsData,
        modular1: &ModularData,
        t: f64,
    ) -> (Element, f64) {
        gns1.to_element(&self.cocycle(modular1, t))
    }
}

pub fn relative_tomita(
    alg: &AlgebraSpec,
    gns1: &GnsData,
    gns2: &GnsData,
) -> RelativeModularData {
    let t_mat = &gns2.lambda * alg.star_mat() * gns1.lambda_inv.conjugate();
    let t_r = AntilinearOp::new(t_mat);
    let nabla_r = t_r.absolute_square();
    let half_inv = linalg::herm_power(&nabla_r, -0.5);
    let j_r = t_r.compose_linear(&half_inv);
    RelativeModularData { t_r, nabla_r, j_r }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::matrix_algebra;
    use crate::linalg::{c, cr, eye, herm_upower, max_abs, resid};

    /// Functional `x ↦ Tr(ρ x)` on a matrix algebra over matrix units.
    fn density_functional(n: usize, rho: &CMat) -> Functional {
        let mut w = CVec::zeros(n * n);
        for i in 0..n {
            for j in 0..n {
                w[i * n + j] = rho[(j, i)];
            }
        }
        Functional(w)
    }

    fn rho_third() -> CMat {
        CMat::from_diagonal(&CVec::from_vec(vec![cr(1.0 / 3.0), cr(2.0 / 3.0)]))
    }

    #[test]
    fn gram_matches_trace_oracle() {
        let alg = matrix_algebra(2);
        let rho = rho_third();
        let phi = density_functional(2, &rho);
        let gram = phi.gram(&alg);
        // Oracle: gram[(a, b)] = Tr(ρ E_a† E_b) computed on raw matrices.
        let units: Vec<CMat> = (0..4)
            .map(|k| {
                let mut m = CMat::zeros(2, 2);
                m[(k / 2, k % 2)] = cr(1.0);
                m
            })
            .collect();
        for a in 0..4 {
            for b in 0..4 {
                let want = (&rho * units[a].adjoint() * &units[b]).trace();
                assert!((gram[(a, b)] - want).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn modular_spectrum_is_density_ratio() {
        let alg = matrix_algebra(2);
        let phi = density_functional(2, &rho_third());
        let g = gns(&alg, &phi).unwrap();
        let md = tomita(&alg, &g);
        let (mut vals, _) = linalg::herm_eig(&md.nabla);
        vals.sort_by(f64::total_cmp);
        let want = [0.5, 1.0, 1.0, 2.0];
        for (got, want) in vals.iter().zip(want) {
            assert!((got - want).abs() < 1e-12, "spectrum {vals:?}");
        }
    }

    #[test]
    fn modular_identities_hold() {
        let alg = matrix_algebra(2);
        let phi = density_functional(2, &rho_third());
        let g = gns(&alg, &phi).unwrap();
        let md = tomita(&alg, &g);
        assert!(md.t_op.involution_resid() < 1e-12, "T² = 1");
        assert!(md.j.antiunitarity_resid() < 1e-12);
        assert!(md.j.involution_resid() < 1e-12, "J² = 1");
        // J ∇ J = ∇⁻¹.
        let sandwiched = md.j.sandwich(&md.nabla);
        assert!(resid(&sandwiched, &linalg::inv(&md.nabla)) < 1e-12);
        assert!(kms_resid(&alg, &g, &md, &phi) < 1e-12);
    }

    #[test]
    fn sigma_matches_density_conjugation() {
        let alg = matrix_algebra(2);
        let rho = rho_third();
        let phi = density_functional(2, &rho);
        let g = gns(&alg, &phi).unwrap();
        let md = tomita(&alg, &g);
        for &t in &[1.0, -0.5, 1.0 / 3.0] {
            let (map, r) = md.sigma_t(&g, t);
            assert!(r < 1e-12);
            let rit = herm_upower(&rho, t);
            let rmit = herm_upower(&rho, -t);
            for a in 0..4 {
                let unit = {
                    let mut m = CMat::zeros(2, 2);
                    m[(a / 2, a % 2)] = cr(1.0);
                    m
                };
                let want = &rit * unit * &rmit;
                let got = map.column(a);
                for i in 0..2 {
                    for j in 0..2 {
                        assert!((got[i * 2 + j] - want[(i, j)]).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn gns_rejects_degenerate_functional() {
        let alg = matrix_algebra(2);
        let rho = CMat::from_diagonal(&CVec::from_vec(vec![cr(1.0), cr(0.0)]));
        let phi = density_functional(2, &rho);
        assert!(matches!(gns(&alg, &phi), Err(GnsError::NotFaithful { .. })));
    }

    #[test]
    fn cocycle_matches_density_power_oracle() {
        let alg = matrix_algebra(2);
        let rho1 = CMat::from_diagonal(&CVec::from_vec(vec![cr(0.5), cr(0.5)]));
        let rho2 = rho_third();
        let phi1 = density_functional(2, &rho1);
        let phi2 = density_functional(2, &rho2);
        let g1 = gns(&alg, &phi1).unwrap();
        let g2 = gns(&alg, &phi2).unwrap();
        let m1 = tomita(&alg, &g1);
        let rel = relative_tomita(&alg, &g1, &g2);
        for &t in &[1.0, -1.0, 0.5, -0.5] {
            let (elt, r) = rel.cocycle_element(&g1, &m1, t);
            assert!(r < 1e-12, "cocycle lies in the algebra");
            let want = herm_upower(&rho1, t) * herm_upower(&rho2, -t);
            for i in 0..2 {
                for j in 0..2 {
                    assert!(
                        (elt[i * 2 + j] - want[(i, j)]).norm() < 1e-11,
                        "u_{t} disagrees with ρ₁^it ρ₂^-it"
                    );
                }
            }
        }
    }

    #[test]
    fn cocycle_identity_and_chain_rule() {
        let alg = matrix_algebra(2);
        let rho1 = CMat::from_row_slice(2, 2, &[cr(0.55), c(0.1, 0.05), c(0.1, -0.05), cr(0.45)]);
        let rho2 = rho_third();
        let rho3 = CMat::from_diagonal(&CVec::from_vec(vec![cr(0.25), cr(0.75)]));
        let f = |r: &CMat| density_functional(2, r);
        let (g1, g2, g3) = (
            gns(&alg, &f(&rho1)).unwrap(),
            gns(&alg, &f(&rho2)).unwrap(),
            gns(&alg, &f(&rho3)).unwrap(),
        );
        let m1 = tomita(&alg, &g1);
        let m2 = tomita(&alg, &g2);
        let r12 = relative_tomita(&alg, &g1, &g2);
        let r23 = relative_tomita(&alg, &g2, &g3);
        let r13 = relative_tomita(&alg, &g1, &g3);
        let (s, t) = (0.5, -1.0 / 3.0);

        // u_{s+t} = u_s σ²_s(u_t), the modular group of the second functional.
        let (ust, _) = r12.cocycle_element(&g1, &m1, s + t);
        let (us, _) = r12.cocycle_element(&g1, &m1, s);
        let (ut, _) = r12.cocycle_element(&g1, &m1, t);
        let (sigma2, _) = m2.sigma_t(&g2, s);
        let moved = &sigma2 * &ut;
        let prod = alg.multiply(&us, &moved).unwrap();
        assert!(linalg::max_abs_vec(&(prod - ust)) < 1e-10);

        // Chain rule through the middle functional.
        let (u12, _) = r12.cocycle_element(&g1, &m1, s);
        let (u23, _) = r23.cocycle_element(&g2, &m2, s);
        let (u13, _) = r13.cocycle_element(&g1, &m1, s);
        let chained = alg.multiply(&u12, &u23).unwrap();
        assert!(linalg::max_abs_vec(&(chained - u13)) < 1e-10);
    }

    #[test]
    fn relative_data_reduces_to_tomita_on_equal_functionals() {
        let alg = matrix_algebra(2);
        let phi = density_functional(2, &rho_third());
        let g = gns(&alg, &phi).unwrap();
        let md = tomita(&alg, &g);
        let rel = relative_tomita(&alg, &g, &g);
        assert!(resid(rel.t_r.mat(), md.t_op.mat()) < 1e-10);
        assert!(resid(&rel.nabla_r, &md.nabla) < 1e-10);
    }

    #[test]
    fn scaled_functional_gives_scalar_cocycle() {
        let alg = matrix_algebra(2);
        let phi = density_functional(2, &rho_third());
        let scaled = Functional(&phi.0 * cr(2.0));
        let g1 = gns(&alg, &phi).unwrap();
        let g2 = gns(&alg, &scaled).unwrap();
        let m1 = tomita(&alg, &g1);
        let rel = relative_tomita(&alg, &g1, &g2);
        for &t in &[1.0, 0.5] {
            let u = rel.cocycle(&m1, t);
            // u_t = (1/2)^{it} 1 for φ₂ = 2 φ₁.
            let scalar = c(0.0, t * (0.5f64).ln()).exp();
            assert!(resid(&u, &(eye(4) * scalar)) < 1e-11, "{}", max_abs(&u));
        }
    }
}
