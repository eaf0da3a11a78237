//! Dense complex linear algebra helpers shared by every module.
//!
//! Everything here works on `DMatrix<Complex<f64>>`. The helpers wrap
//! nalgebra's SVD, Hermitian eigendecomposition and Cholesky factorization
//! with the cutoff conventions used throughout the crate: ranks and
//! nullspaces are decided relative to the largest singular value.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen, SVD};
use num_complex::Complex;

pub type C = Complex<f64>;
pub type CMat = DMatrix<C>;
pub type CVec = DVector<C>;

pub fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

pub fn cr(re: f64) -> C {
    Complex::new(re, 0.0)
}

pub fn eye(n: usize) -> CMat {
    CMat::identity(n, n)
}

/// Largest entry modulus; the norm used for residuals across the crate.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_vec(v: &CVec) -> f64 {
    v.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// Entrywise residual between two matrices of equal shape.
pub fn resid(a: &CMat, b: &CMat) -> f64 {
    assert_eq!(a.shape(), b.shape(), "residual of mismatched shapes");
    max_abs(&(a - b))
}

pub fn resid_vec(a: &CVec, b: &CVec) -> f64 {
    max_abs_vec(&(a - b))
}

/// Deviation of `u` from being unitary.
pub fn unitarity_resid(u: &CMat) -> f64 {
    let n = u.nrows();
    resid(&(u.adjoint() * u), &eye(n)).max(resid(&(u * u.adjoint()), &eye(n)))
}

pub fn hermiticity_resid(h: &CMat) -> f64 {
    resid(h, &h.adjoint())
}

/// `σ` values of `m`, always as a full list of length `min(r, c)`.
pub fn singular_values(m: &CMat) -> Vec<f64> {
    let svd = SVD::new(m.clone(), false, false);
    svd.singular_values.iter().cloned().collect()
}

/// Rank of `m` with cutoff `rel_cutoff * σ_max`.
pub fn rank(m: &CMat, rel_cutoff: f64) -> usize {
    let sv = singular_values(m);
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_cutoff * smax).count()
}

/// Orthonormal basis of the right nullspace of `m`, cutoff `rel_cutoff * σ_max`.
///
/// Works for any shape; short matrices are padded with zero rows so the
/// decomposition exposes the full right singular basis.
pub fn nullspace(m: &CMat, rel_cutoff: f64) -> Vec<CVec> {
    let (r, cdim) = m.shape();
    let padded = if r < cdim {
        let mut p = CMat::zeros(cdim, cdim);
        p.view_mut((0, 0), (r, cdim)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = SVD::new(padded, false, true);
    let vt = svd.v_t.expect("svd v_t requested");
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let mut basis = Vec::new();
    for i in 0..sv.len() {
        if sv[i] <= rel_cutoff * smax || smax == 0.0 {
            // Row i of V^H is the conjugate of the i-th right singular vector.
            basis.push(vt.row(i).transpose().map(|z| z.conj()));
        }
    }
    basis
}

/// Least-squares solution of `a x = b` for every column of `b`, via one SVD.
/// Returns the solution and the entrywise residual `max |a x - b|`.
pub fn lstsq(a: &CMat, b: &CMat) -> (CMat, f64) {
    let svd = SVD::new(a.clone(), true, true);
    let u = svd.u.as_ref().expect("svd u requested");
    let vt = svd.v_t.as_ref().expect("svd v_t requested");
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = 1e-14 * smax;
    let utb = u.adjoint() * b;
    let mut scaled = CMat::zeros(vt.nrows(), b.ncols());
    for i in 0..sv.len() {
        if sv[i] > cutoff {
            let row = utb.row(i) / cr(sv[i]);
            scaled.row_mut(i).copy_from(&row);
        }
    }
    let x = vt.adjoint() * scaled;
    let r = resid(&(a * &x), b);
    (x, r)
}

pub fn lstsq_vec(a: &CMat, b: &CVec) -> (CVec, f64) {
    let bm = CMat::from_columns(&[b.clone()]);
    let (x, r) = lstsq(a, &bm);
    (x.column(0).into_owned(), r)
}

/// Eigendecomposition of a Hermitian matrix: `h = u diag(vals) u†`.
/// Panics when `h` is visibly non-Hermitian; callers check first.
pub fn herm_eig(h: &CMat) -> (Vec<f64>, CMat) {
    let asym = hermiticity_resid(h);
    let scale = max_abs(h).max(1.0);
    assert!(
        asym <= 1e-8 * scale,
        "hermitian eigendecomposition of a non-hermitian matrix (asymmetry {asym:.3e})"
    );
    let sym = (h + h.adjoint()) * cr(0.5);
    let eig = SymmetricEigen::new(sym);
    (eig.eigenvalues.iter().cloned().collect(), eig.eigenvectors)
}

/// Apply a scalar function to a Hermitian matrix through its spectrum.
pub fn herm_fun(h: &CMat, f: impl Fn(f64) -> C) -> CMat {
    let (vals, u) = herm_eig(h);
    let diag = CMat::from_diagonal(&CVec::from_iterator(vals.len(), vals.iter().map(|&l| f(l))));
    &u * diag * u.adjoint()
}

/// Real power of a positive definite Hermitian matrix.
pub fn herm_power(h: &CMat, p: f64) -> CMat {
    herm_fun(h, |l| {
        assert!(l > 0.0, "real power of a non positive definite matrix (eigenvalue {l:.3e})");
        cr(l.powf(p))
    })
}

/// Imaginary power `h^{it}` of a positive definite Hermitian matrix.
pub fn herm_upower(h: &CMat, t: f64) -> CMat {
    herm_fun(h, |l| {
        assert!(l > 0.0, "imaginary power of a non positive definite matrix (eigenvalue {l:.3e})");
        c(0.0, t * l.ln()).exp()
    })
}

/// Hermitian logarithm of a positive definite matrix.
pub fn herm_log(h: &CMat) -> CMat {
    herm_fun(h, |l| {
        assert!(l > 0.0, "logarithm of a non positive definite matrix (eigenvalue {l:.3e})");
        cr(l.ln())
    })
}

/// Upper-triangular frame `F` with `gram = F† F`, so `x ↦ F x` carries the
/// gram inner product to the standard one. `None` when `gram` is not
/// positive definite enough for Cholesky.
pub fn cholesky_frame(gram: &CMat) -> Option<CMat> {
    let sym = (gram + gram.adjoint()) * cr(0.5);
    Cholesky::new(sym).map(|ch| ch.l().adjoint())
}

pub fn inv(m: &CMat) -> CMat {
    m.clone().try_inverse().expect("matrix inversion of a singular matrix")
}

/// Flip operator on `C^n ⊗ C^n`: `Σ (ξ ⊗ η) = η ⊗ ξ` in Kronecker indexing.
pub fn flip_op(n: usize) -> CMat {
    let mut s = CMat::zeros(n * n, n * n);
    for p in 0..n {
        for q in 0..n {
            s[(q * n + p, p * n + q)] = cr(1.0);
        }
    }
    s
}

/// Swap the two tensor legs of an operator on `C^n ⊗ C^n`.
pub fn flip_conj(x: &CMat, n: usize) -> CMat {
    let s = flip_op(n);
    &s * x * s
}

pub fn vec_of(m: &CMat) -> CVec {
    CVec::from_iterator(m.nrows() * m.ncols(), m.iter().cloned())
}

/// Greedy column-pivoted orthonormalization of a family of vectors.
///
/// Pivots on the column of largest remaining norm (ties resolved by lowest
/// index) and stops when the remaining mass drops below
/// `rel_cutoff * (largest initial norm)`. Returns the pivot indices and the
/// orthonormal basis, in pivot order.
pub fn pivoted_orth(cols: &[CVec], rel_cutoff: f64) -> (Vec<usize>, Vec<CVec>) {
    let mut work: Vec<CVec> = cols.to_vec();
    let norms: Vec<f64> = work.iter().map(|v| v.norm()).collect();
    let scale = norms.iter().cloned().fold(0.0f64, f64::max);
    let mut pivots = Vec::new();
    let mut basis: Vec<CVec> = Vec::new();
    if scale == 0.0 {
        return (pivots, basis);
    }
    loop {
        let mut best = 0usize;
        let mut best_norm = -1.0f64;
        for (i, v) in work.iter().enumerate() {
            let nv = v.norm();
            // Strict inequality keeps the lowest index on ties.
            if nv > best_norm {
                best = i;
                best_norm = nv;
            }
        }
        if best_norm <= rel_cutoff * scale {
            break;
        }
        let q = &work[best] / cr(best_norm);
        pivots.push(best);
        for v in work.iter_mut() {
            let coeff = q.dotc(v);
            *v -= &q * coeff;
        }
        basis.push(q);
        if basis.len() == work[0].len() {
            break;
        }
    }
    (pivots, basis)
}
