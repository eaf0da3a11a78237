//! Conjugate-linear operators as matrices acting after entrywise conjugation.
//!
//! An operator here is `v ↦ mat · conj(v)`, possibly between spaces of
//! different dimension. The adjoint convention is `⟨Av, w⟩ = ⟨A†w, v⟩`,
//! which makes the adjoint matrix the plain transpose, and the composition
//! of two conjugate-linear maps the linear map `mat₁ · conj(mat₂)`.

use crate::linalg::{self, CMat, CVec};

#[derive(Clone, Debug)]
pub struct AntilinearOp {
    mat: CMat,
}

impl AntilinearOp {
    pub fn new(mat: CMat) -> Self {
        Self { mat }
    }

    pub fn mat(&self) -> &CMat {
        &self.mat
    }

    pub fn apply(&self, v: &CVec) -> CVec {
        &self.mat * v.map(|z| z.conj())
    }

    pub fn adjoint(&self) -> AntilinearOp {
        AntilinearOp::new(self.mat.transpose())
    }

    /// `self ∘ other` for conjugate-linear `other`: a linear map.
    pub fn compose_antilinear(&self, other: &AntilinearOp) -> CMat {
        &self.mat * other.mat.conjugate()
    }

    /// `self ∘ m` for linear `m`: conjugate-linear again.
    pub fn compose_linear(&self, m: &CMat) -> AntilinearOp {
        AntilinearOp::new(&self.mat * m.conjugate())
    }

    /// `m ∘ self` for linear `m`: conjugate-linear again.
    pub fn precede_linear(&self, m: &CMat) -> AntilinearOp {
        AntilinearOp::new(m * &self.mat)
    }

    /// Conjugation `self ∘ m ∘ self⁻¹` of a linear operator, for involutive
    /// `self` (so `self⁻¹ = self`). The result is linear.
    pub fn sandwich(&self, m: &CMat) -> CMat {
        &self.mat * m.conjugate() * self.mat.conjugate()
    }

    /// Positive part `A† A` of the polar decomposition (a linear operator).
    pub fn absolute_square(&self) -> CMat {
        let l = self.adjoint().compose_antilinear(self);
        (&l + l.adjoint()) * linalg::cr(0.5)
    }

    /// Polar decomposition `A = phase ∘ modulus^{1/2}` with `modulus = A†A`
    /// positive and `phase` conjugate-linear and antiunitary.
    pub fn polar(&self) -> (AntilinearOp, CMat) {
        let modulus = self.absolute_square();
        let half_inv = linalg::herm_power(&modulus, -0.5);
        let phase = AntilinearOp::new(&self.mat * half_inv.conjugate());
        (phase, modulus)
    }

    pub fn antiunitarity_resid(&self) -> f64 {
        linalg::unitarity_resid(&self.mat)
    }

    /// Residual of `A ∘ A = 1`.
    pub fn involution_resid(&self) -> f64 {
        let sq = self.compose_antilinear(self);
        linalg::resid(&sq, &linalg::eye(sq.nrows()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, cr, eye, herm_power, max_abs_vec, resid};

    fn sample() -> AntilinearOp {
        AntilinearOp::new(CMat::from_row_slice(
            2,
            2,
            &[c(1.0, 1.0), c(0.5, 0.0), c(0.0, -2.0), c(1.0, 0.5)],
        ))
    }

    #[test]
    fn adjoint_pairing_holds() {
        let a = sample();
        let v = CVec::from_vec(vec![c(0.3, -0.7), c(1.1, 0.2)]);
        let w = CVec::from_vec(vec![c(-0.4, 0.9), c(0.6, 0.1)]);
        // ⟨Av, w⟩ with ⟨x, y⟩ = y† x.
        let lhs = (w.adjoint() * a.apply(&v))[(0, 0)];
        let rhs = (v.adjoint() * a.adjoint().apply(&w))[(0, 0)];
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn composition_is_linear_with_conjugated_second_factor() {
        let a = sample();
        let b = AntilinearOp::new(CMat::from_row_slice(
            2,
            2,
            &[c(0.0, 1.0), cr(2.0), cr(-1.0), c(0.3, 0.4)],
        ));
        let composed = a.compose_antilinear(&b);
        let v = CVec::from_vec(vec![c(0.2, 0.5), c(-1.0, 0.8)]);
        let direct = a.apply(&b.apply(&v));
        assert!(max_abs_vec(&(&composed * &v - direct)) < 1e-12);
    }

    #[test]
    fn polar_recomposes_and_phase_is_antiunitary() {
        let a = sample();
        let (phase, modulus) = a.polar();
        assert!(phase.antiunitarity_resid() < 1e-10);
        let root = herm_power(&modulus, 0.5);
        let recomposed = phase.compose_linear(&root);
        assert!(resid(recomposed.mat(), a.mat()) < 1e-10);
    }

    #[test]
    fn conjugation_matrix_is_an_involution() {
        let conj = AntilinearOp::new(eye(3));
        assert!(conj.involution_resid() < 1e-15);
        assert!(conj.antiunitarity_resid() < 1e-15);
    }
}
