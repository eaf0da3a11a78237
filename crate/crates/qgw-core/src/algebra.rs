//! Finite-dimensional *-algebras given by structure constants.
//!
//! An algebra is a basis `e_0 … e_{n-1}` together with the tensor
//! `mult[k][(i,j)]` = coefficient of `e_k` in `e_i e_j`, a conjugate-linear
//! star map stored as the matrix acting after conjugation, and the
//! coefficient vector of the unit. Elements and functionals are plain
//! coefficient vectors; a functional applies as `covector · coeffs` with no
//! conjugation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, cr, CMat, CVec};

pub type Element = CVec;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed algebra data: {0}")]
    Malformed(String),
}

/// One failed structural check, with the size of the failure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub residual: f64,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    dim: usize,
    labels: Vec<String>,
    mult: Vec<CMat>,
    star: CMat,
    unit: CVec,
    left_mult: Vec<CMat>,
    right_mult: Vec<CMat>,
}

impl AlgebraSpec {
    pub fn new(
        labels: Vec<String>,
        mult: Vec<CMat>,
        star: CMat,
        unit: CVec,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if mult.len() != dim {
            return Err(AlgebraError::Malformed(format!(
                "mult has {} component matrices for dimension {dim}",
                mult.len()
            )));
        }
        for (k, m) in mult.iter().enumerate() {
            if m.shape() != (dim, dim) {
                return Err(AlgebraError::Malformed(format!(
                    "mult[{k}] has shape {:?}, want ({dim}, {dim})",
                    m.shape()
                )));
            }
        }
        if star.shape() != (dim, dim) {
            return Err(AlgebraError::Malformed(format!(
                "star has shape {:?}, want ({dim}, {dim})",
                star.shape()
            )));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Malformed(format!(
                "unit has length {}, want {dim}",
                unit.len()
            )));
        }
        let mut left_mult = Vec::with_capacity(dim);
        let mut right_mult = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut li = CMat::zeros(dim, dim);
            let mut ri = CMat::zeros(dim, dim);
            for k in 0..dim {
                for j in 0..dim {
                    li[(k, j)] = mult[k][(i, j)];
                    ri[(k, j)] = mult[k][(j, i)];
                }
            }
            left_mult.push(li);
            right_mult.push(ri);
        }
        Ok(Self { dim, labels, mult, star, unit, left_mult, right_mult })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &[CMat] {
        &self.mult
    }

    pub fn star_mat(&self) -> &CMat {
        &self.star
    }

    pub fn unit(&self) -> &CVec {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = CVec::zeros(self.dim);
        v[i] = cr(1.0);
        v
    }

    /// Matrix of left multiplication by `a` on coefficient vectors.
    pub fn left_mult_by(&self, a: &Element) -> CMat {
        let mut m = CMat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if a[i] != cr(0.0) {
                m += &self.left_mult[i] * a[i];
            }
        }
        m
    }

    pub fn right_mult_by(&self, a: &Element) -> CMat {
        let mut m = CMat::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if a[i] != cr(0.0) {
                m += &self.right_mult[i] * a[i];
            }
        }
        m
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        if a.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        if b.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: b.len() });
        }
        Ok(self.left_mult_by(a) * b)
    }

    pub fn star_of(&self, a: &Element) -> Element {
        &self.star * a.map(|z| z.conj())
    }

    /// Largest structure constant, floored at one; the scale for relative
    /// tolerances.
    pub fn scale(&self) -> f64 {
        self.mult.iter().map(linalg::max_abs).fold(1.0f64, f64::max)
    }

    /// Dimension of the center, as a rank computation.
    pub fn center_dim(&self) -> usize {
        let mut stacked = CMat::zeros(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            let d = &self.left_mult[i] - &self.right_mult[i];
            stacked.view_mut((i * self.dim, 0), (self.dim, self.dim)).copy_from(&d);
        }
        linalg::nullspace(&stacked, 1e-10).len()
    }

    pub fn is_commutative(&self, tol: f64) -> bool {
        self.center_dim() == self.dim
            && (0..self.dim).all(|i| linalg::resid(&self.left_mult[i], &self.right_mult[i]) <= tol)
    }
}

/// Linear functional as a covector; `eval` pairs without conjugation.
#[derive(Clone, Debug)]
pub struct Functional(pub CVec);

impl Functional {
    pub fn eval(&self, x: &Element) -> linalg::C {
        self.0.dot(x)
    }

    /// The functional `x ↦ conj(ω(x*))`.
    pub fn bar(&self, alg: &AlgebraSpec) -> Functional {
        Functional((alg.star.transpose() * &self.0).map(|z| z.conj()))
    }

    /// Gram matrix `G[a][b] = ω(e_a* e_b)`; positive semidefinite Hermitian
    /// exactly when the functional is positive.
    pub fn gram(&self, alg: &AlgebraSpec) -> CMat {
        let mut g = CMat::zeros(alg.dim, alg.dim);
        for a in 0..alg.dim {
            let sa = alg.star_of(&alg.basis(a));
            let la = alg.left_mult_by(&sa);
            for b in 0..alg.dim {
                g[(a, b)] = self.0.dot(&la.column(b).into_owned());
            }
        }
        g
    }

    /// Deviation from traciality, `max |ω(e_i e_j) − ω(e_j e_i)|`.
    pub fn traciality_resid(&self, alg: &AlgebraSpec) -> f64 {
        let mut pairing = CMat::zeros(alg.dim, alg.dim);
        for k in 0..alg.dim {
            pairing += &alg.mult[k] * self.0[k];
        }
        linalg::resid(&pairing, &pairing.transpose().into_owned())
    }

    /// `(smallest, largest)` eigenvalue of the Gram matrix; positivity and
    /// faithfulness are read off these.
    pub fn gram_eigen_range(&self, alg: &AlgebraSpec) -> (f64, f64) {
        let g = self.gram(alg);
        let herm_defect = linalg::hermiticity_resid(&g);
        if herm_defect > 1e-8 * linalg::max_abs(&g).max(1.0) {
            return (f64::NEG_INFINITY, linalg::max_abs(&g));
        }
        let (vals, _) = linalg::herm_eig(&g);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }
}

/// Check associativity, the unit, the star axioms, and representability on a
/// Hilbert space (positive definiteness of the regular trace form). Returns
/// one entry per failed check; an empty vector means the data is a
/// *-algebra within `tol` (scaled by the largest structure constant).
pub fn validate_algebra(alg: &AlgebraSpec, tol: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let threshold = tol * alg.scale();
    let n = alg.dim;

    let mut assoc: f64 = 0.0;
    let mut assoc_at = (0, 0);
    for i in 0..n {
        for j in 0..n {
            let prod = alg.multiply(&alg.basis(i), &alg.basis(j)).expect("basis dims");
            let lhs = &alg.left_mult[i] * &alg.left_mult[j];
            let r = linalg::resid(&lhs, &alg.left_mult_by(&prod));
            if r > assoc {
                assoc = r;
                assoc_at = (i, j);
            }
        }
    }
    if assoc > threshold {
        out.push(Violation {
            check: "associativity".into(),
            residual: assoc,
            detail: format!(
                "worst pair ({}, {})",
                alg.labels[assoc_at.0], alg.labels[assoc_at.1]
            ),
        });
    }

    let unit_resid = linalg::resid(&alg.left_mult_by(&alg.unit), &linalg::eye(n))
        .max(linalg::resid(&alg.right_mult_by(&alg.unit), &linalg::eye(n)));
    if unit_resid > threshold {
        out.push(Violation {
            check: "unit".into(),
            residual: unit_resid,
            detail: "declared unit is not a two-sided identity".into(),
        });
    }

    let invol = linalg::resid(&(&alg.star * alg.star.conjugate()), &linalg::eye(n));
    if invol > threshold {
        out.push(Violation {
            check: "star-involution".into(),
            residual: invol,
            detail: "star applied twice is not the identity".into(),
        });
    }

    let mut antimult: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let prod = alg.multiply(&alg.basis(i), &alg.basis(j)).expect("basis dims");
            let lhs = alg.star_of(&prod);
            let rhs = alg
                .multiply(&alg.star_of(&alg.basis(j)), &alg.star_of(&alg.basis(i)))
                .expect("basis dims");
            antimult = antimult.max(linalg::resid_vec(&lhs, &rhs));
        }
    }
    if antimult > threshold {
        out.push(Violation {
            check: "star-antimultiplicative".into(),
            residual: antimult,
            detail: "(xy)* differs from y*x*".into(),
        });
    }

    // The form tr(L_{x* y}) is positive definite exactly when the algebra
    // carries a faithful positive functional, i.e. embeds in a matrix
    // algebra compatibly with the star.
    let mut form = CMat::zeros(n, n);
    for a in 0..n {
        let sa = alg.star_of(&alg.basis(a));
        for b in 0..n {
            let prod = alg.multiply(&sa, &alg.basis(b)).expect("basis dims");
            form[(a, b)] = alg.left_mult_by(&prod).trace();
        }
    }
    let herm_defect = linalg::hermiticity_resid(&form);
    if herm_defect > threshold {
        out.push(Violation {
            check: "representability".into(),
            residual: herm_defect,
            detail: "regular trace form is not hermitian".into(),
        });
    } else {
        let (vals, _) = linalg::herm_eig(&form);
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(0.0f64, f64::max);
        if lo <= 1e-10 * hi {
            out.push(Violation {
                check: "representability".into(),
                residual: (1e-10 * hi - lo).max(0.0),
                detail: format!(
                    "regular trace form has eigenvalue range [{lo:.3e}, {hi:.3e}]; \
                     no faithful positive functional exists"
                ),
            });
        }
    }

    out
}

/// Tensor product algebra; basis pairs in Kronecker order, so the pair
/// `(p, q)` sits at index `p * dim_b + q` and coefficient vectors of simple
/// tensors are Kronecker products.
pub fn tensor(a: &AlgebraSpec, b: &AlgebraSpec) -> AlgebraSpec {
    let (na, nb) = (a.dim, b.dim);
    let labels = (0..na * nb)
        .map(|k| format!("{}⊗{}", a.labels[k / nb], b.labels[k % nb]))
        .collect();
    let mut mult = Vec::with_capacity(na * nb);
    for ka in 0..na {
        for kb in 0..nb {
            mult.push(a.mult[ka].kronecker(&b.mult[kb]));
        }
    }
    let star = a.star.kronecker(&b.star);
    let unit = a.unit.kronecker(&b.unit);
    AlgebraSpec::new(labels, mult, star, unit).expect("tensor dimensions are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, max_abs_vec};

    /// 2×2 matrix algebra over the matrix-unit basis, assembled by hand so
    /// these tests do not depend on the example builders.
    pub(crate) fn m2() -> AlgebraSpec {
        let labels: Vec<String> = ["e11", "e12", "e21", "e22"].iter().map(|s| s.to_string()).collect();
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mult = vec![CMat::zeros(4, 4); 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mult[idx(i, l)][(idx(i, j), idx(k, l))] = cr(1.0);
                        }
                    }
                }
            }
        }
        let mut star = CMat::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                star[(idx(j, i), idx(i, j))] = cr(1.0);
            }
        }
        let mut unit = CVec::zeros(4);
        unit[idx(0, 0)] = cr(1.0);
        unit[idx(1, 1)] = cr(1.0);
        AlgebraSpec::new(labels, mult, star, unit).unwrap()
    }

    /// Brute-force product straight from the structure constants, as an
    /// independent oracle for `multiply`.
    fn oracle_multiply(alg: &AlgebraSpec, a: &Element, b: &Element) -> Element {
        let n = alg.dim();
        let mut out = CVec::zeros(n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    out[k] += alg.mult()[k][(i, j)] * a[i] * b[j];
                }
            }
        }
        out
    }

    #[test]
    fn multiply_matches_triple_loop_oracle() {
        let alg = m2();
        let a = CVec::from_vec(vec![c(1.0, 0.5), c(0.0, -1.0), c(2.0, 0.0), c(0.3, 0.3)]);
        let b = CVec::from_vec(vec![c(0.0, 1.0), c(1.0, 0.0), c(-0.5, 0.5), c(1.0, -1.0)]);
        let got = alg.multiply(&a, &b).unwrap();
        let want = oracle_multiply(&alg, &a, &b);
        assert!(max_abs_vec(&(got - want)) < 1e-12);
    }

    #[test]
    fn multiply_rejects_wrong_dimension() {
        let alg = m2();
        let short = CVec::zeros(3);
        let err = alg.multiply(&short, &alg.unit().clone()).unwrap_err();
        assert!(matches!(err, AlgebraError::DimensionMismatch { expected: 4, got: 3 }));
    }

    #[test]
    fn m2_passes_validation() {
        let v = validate_algebra(&m2(), 1e-9);
        assert!(v.is_empty(), "unexpected violations: {v:?}");
    }

    #[test]
    fn associativity_perturbation_is_detected() {
        let alg = m2();
        let mut mult = alg.mult().to_vec();
        mult[0][(1, 2)] += cr(1e-6);
        let bad = AlgebraSpec::new(
            alg.labels().to_vec(),
            mult,
            alg.star_mat().clone(),
            alg.unit().clone(),
        )
        .unwrap();
        let v = validate_algebra(&bad, 1e-9);
        assert!(v.iter().any(|x| x.check == "associativity" && x.residual > 1e-7));
    }

    #[test]
    fn identity_star_on_m2_breaks_antimultiplicativity() {
        let alg = m2();
        let bad = AlgebraSpec::new(
            alg.labels().to_vec(),
            alg.mult().to_vec(),
            linalg::eye(4),
            alg.unit().clone(),
        )
        .unwrap();
        let v = validate_algebra(&bad, 1e-9);
        assert!(v.iter().any(|x| x.check == "star-antimultiplicative"));
    }

    #[test]
    fn functional_bar_matches_definition() {
        let alg = m2();
        let omega = Functional(CVec::from_vec(vec![c(0.2, 0.1), c(0.0, 1.0), c(1.0, 0.0), c(0.5, -0.5)]));
        let bar = omega.bar(&alg);
        for i in 0..4 {
            let want = omega.eval(&alg.star_of(&alg.basis(i))).conj();
            assert!((bar.eval(&alg.basis(i)) - want).norm() < 1e-14);
        }
    }

    #[test]
    fn trace_functional_on_m2_is_tracial_positive_faithful() {
        let alg = m2();
        // tr = e11 + e22 coefficients.
        let tr = Functional(CVec::from_vec(vec![cr(1.0), cr(0.0), cr(0.0), cr(1.0)]));
        assert!(tr.traciality_resid(&alg) < 1e-14);
        let (lo, hi) = tr.gram_eigen_range(&alg);
        assert!(lo > 0.9 && hi < 1.1, "gram of the trace on matrix units is the identity");
    }

    #[test]
    fn tensor_multiplies_factorwise() {
        let alg = m2();
        let tt = tensor(&alg, &alg);
        assert!(validate_algebra(&tt, 1e-9).is_empty());
        let a = CVec::from_vec(vec![c(1.0, 0.0), c(0.0, 2.0), c(0.5, 0.0), c(0.0, -1.0)]);
        let b = CVec::from_vec(vec![c(0.0, 1.0), c(1.0, 1.0), c(2.0, 0.0), c(0.3, 0.0)]);
        let lhs = tt.multiply(&a.kronecker(&b), &b.kronecker(&a)).unwrap();
        let rhs = alg
            .multiply(&a, &b)
            .unwrap()
            .kronecker(&alg.multiply(&b, &a).unwrap());
        assert!(max_abs_vec(&(lhs - rhs)) < 1e-12);
    }

    #[test]
    fn center_of_m2_is_scalars() {
        assert_eq!(m2().center_dim(), 1);
    }
}
