//! Catalog-driven verification of the structural identities of a
//! finite-dimensional locally compact quantum group and its dual.
//!
//! Every identity is a [`RelationCatalogEntry`]: a pure evaluator mapping
//! built [`QuantumGroup`] data to a worst-case residual plus a note with the
//! computed quantities. [`run_suite`] evaluates a selection (or the whole
//! catalog) in parallel and assembles a deterministic [`VerificationReport`]
//! ordered by entry id.
//!
//! One-parameter identities are checked on the fixed sample grid
//! [`T_GRID`] *and*, where both sides are powers of positive operators, at
//! generator level (sums and commutators of logarithms). Conjugation by an
//! antilinear involution `J` sends `A^{it}` to `(JAJ)^{-it}`, so the
//! generator of `t ↦ J A^{it} J` is `−J (log A) J`; generators of products
//! of one-parameter groups add regardless of commutation.

use crate::algebra::{Element, Functional};
use crate::antilinear::AntilinearOp;
use crate::antipode;
use crate::duality;
use crate::gns;
use crate::linalg::{
    self, cr, eye, flip_op, herm_power, herm_upower, lstsq, lstsq_vec, max_abs, max_abs_vec,
    resid, resid_vec, C, CMat, CVec,
};
use crate::pipeline::{QuantumGroup, T_GRID};
use crate::quantum_group::{self, RANK_CUTOFF};
use crate::report::{ReportEntry, VerificationReport};
use rayon::prelude::*;
use thiserror::Error;

/// Whether an identity carries independent content on every valid specimen
/// or degenerates at finite dimension, where the scaling constant, the
/// modular element, and all positive modular operators are forced trivial
/// (`ν = ν̂ = 1`, `δ = δ̂ = 1`, `∇ = ∇′ = ∇̂ = P = L = 1`). Degenerate
/// entries are still evaluated — they pin down code paths and signs — and
/// their notes record the computed values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    AlwaysHolds,
    EmergentTrivial,
}

/// One identity of the catalog.
pub struct RelationCatalogEntry {
    /// Stable public identifier, e.g. `"REL-4.20"`.
    pub id: &'static str,
    /// What the entry verifies, in words.
    pub description: &'static str,
    /// The identity in display form; quoted verbatim in reports.
    pub paper_ref: &'static str,
    /// Worst-case residual plus a note with computed quantities.
    pub evaluator: fn(&SuiteCtx) -> (f64, String),
    pub expected: Expected,
}

/// Raised when a requested entry id is not in the catalog.
#[derive(Debug, Error)]
#[error("unknown relation id: {0}")]
pub struct UnknownRelation(pub String);

/// Shared precomputations handed to every evaluator.
pub struct SuiteCtx<'a> {
    pub qg: &'a QuantumGroup,
    /// Algebra dimension.
    n: usize,
    /// GNS space dimension.
    h: usize,
    /// Dual algebra dimension.
    m: usize,
    /// `C_i` with `W = Σ_i π(e_i) ⊗ C_i`.
    first_leg: Vec<CMat>,
    first_leg_resid: f64,
    /// `B_q` with `V = Σ_q B_q ⊗ π(e_q)`.
    second_leg: Vec<CMat>,
    second_leg_resid: f64,
    /// Columns are the flattened dual basis operators `Y_i`.
    dual_span: CMat,
    log_nabla: CMat,
    log_nabla_prime: CMat,
    log_nabla_hat: CMat,
    log_nabla_hat_prime: CMat,
    log_p: CMat,
    log_l: CMat,
    log_delta: CMat,
    log_delta_hat: CMat,
}

impl<'a> SuiteCtx<'a> {
    pub fn new(qg: &'a QuantumGroup) -> Self {
        let n = qg.alg.dim();
        let h = qg.gns.hilbert_dim();
        let m = qg.dual.alg.dim();
        // Row-major stack of the GNS representation: column i holds π(e_i)
        // flattened as (s, t) ↦ s·h + t. The leg regroupings below must use
        // the same row-major convention.
        let pstack = CMat::from_fn(h * h, n, |row, i| qg.gns.rep[i][(row / h, row % h)]);
        let w = &qg.reps.w;
        let r1 = CMat::from_fn(h * h, h * h, |row, col| {
            w[((row / h) * h + col / h, (row % h) * h + col % h)]
        });
        let (gamma, first_leg_resid) = lstsq(&pstack, &r1);
        let first_leg: Vec<CMat> = (0..n)
            .map(|i| CMat::from_fn(h, h, |u, v| gamma[(i, u * h + v)]))
            .collect();
        let v = &qg.reps.v;
        let r2 = CMat::from_fn(h * h, h * h, |row, col| {
            v[((col / h) * h + row / h, (col % h) * h + row % h)]
        });
        let (theta, second_leg_resid) = lstsq(&pstack, &r2);
        let second_leg: Vec<CMat> = (0..n)
            .map(|q| CMat::from_fn(h, h, |s, t| theta[(q, s * h + t)]))
            .collect();
        SuiteCtx {
            qg,
            n,
            h,
            m,
            first_leg,
            first_leg_resid,
            second_leg,
            second_leg_resid,
            dual_span: stack_ops(&qg.dual.basis_ops),
            log_nabla: linalg::herm_log(&qg.modular.nabla),
            log_nabla_prime: linalg::herm_log(&qg.modular_psi.nabla),
            log_nabla_hat: linalg::herm_log(&qg.dual.modular.nabla),
            log_nabla_hat_prime: linalg::herm_log(&qg.modular_psi_hat.nabla),
            log_p: linalg::herm_log(&qg.scaling.p_mat),
            log_l: linalg::herm_log(&qg.antipode.l_mat),
            log_delta: linalg::herm_log(&qg.pi_delta),
            log_delta_hat: linalg::herm_log(&qg.delta_hat_op),
        }
    }

    /// `Σ_{p,q} coords[p·n+q] · π(e_p) ⊗ π(e_q)` on `H ⊗ H`.
    fn pair_op(&self, coords: &CVec) -> CMat {
        pair_op_in(&self.qg.gns.rep, coords)
    }

    /// `J (log A) J` for the primal modular conjugation.
    fn sand_j(&self, x: &CMat) -> CMat {
        self.qg.modular.j.sandwich(x)
    }

    /// `Ĵ (log A) Ĵ` for the dual modular conjugation.
    fn sand_j_hat(&self, x: &CMat) -> CMat {
        self.qg.dual.modular.j.sandwich(x)
    }
}

fn comm(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

fn stack_ops(ops: &[CMat]) -> CMat {
    let hh = ops[0].nrows() * ops[0].ncols();
    let mut m = CMat::zeros(hh, ops.len());
    for (i, op) in ops.iter().enumerate() {
        m.column_mut(i).copy_from(&linalg::vec_of(op));
    }
    m
}

fn hcat(a: &CMat, b: &CMat) -> CMat {
    let mut out = CMat::zeros(a.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((0, a.ncols()), (b.nrows(), b.ncols())).copy_from(b);
    out
}

fn pair_op_in(ops: &[CMat], coords: &CVec) -> CMat {
    let d = ops.len();
    let h = ops[0].nrows();
    let mut acc = CMat::zeros(h * h, h * h);
    for p in 0..d {
        for q in 0..d {
            let cpq = coords[p * d + q];
            if cpq.norm() > 0.0 {
                acc += ops[p].kronecker(&ops[q]) * cpq;
            }
        }
    }
    acc
}

/// Coordinates of `a ⊗ b` in the pair basis `e_p ⊗ e_q ↦ p·n + q`.
fn tensor_coords(a: &CVec, b: &CVec) -> CVec {
    let (na, nb) = (a.len(), b.len());
    CVec::from_fn(na * nb, |k, _| a[k / nb] * b[k % nb])
}

/// Deterministic dense probe vector; entries are O(1) and seed-dependent.
fn probe_vec(dim: usize, seed: usize) -> CVec {
    CVec::from_fn(dim, |j, _| {
        let a = ((seed * 31 + j * 17 + 3) % 97) as f64 / 97.0;
        let b = ((seed * 53 + j * 29 + 7) % 89) as f64 / 89.0;
        C::new(0.25 + a, b - 0.5)
    })
}

/// `⟨x, y⟩`, linear in the first argument.
fn ip(x: &CVec, y: &CVec) -> C {
    y.dotc(x)
}

/// `e^{iθ}`.
fn phase(theta: f64) -> C {
    C::new(0.0, theta).exp()
}

// ---------------------------------------------------------------------------
// Antipode and regular-representation identities.
// ---------------------------------------------------------------------------

fn rel_1_2(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let alg = &qg.alg;
    let s = &qg.antipode.s_map;
    let mut anti: f64 = 0.0;
    for i in 0..cx.n {
        for j in 0..cx.n {
            let prod = alg.multiply(&alg.basis(i), &alg.basis(j)).expect("same algebra");
            let lhs: Element = s * &prod;
            let rhs = alg
                .multiply(&(s * alg.basis(j)), &(s * alg.basis(i)))
                .expect("same algebra");
            anti = anti.max(resid_vec(&lhs, &rhs));
        }
    }
    // (∗ ∘ S)² = ι as a linear map on coefficients.
    let star = alg.star_mat();
    let twice = star * s.conjugate() * star.conjugate() * s;
    let inv = resid(&twice, &eye(cx.n));
    let mut rt: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (tau_t, memb) = qg.tau_map(t);
        rt = rt
            .max(resid(&(&qg.antipode.r_map * &tau_t), &(&tau_t * &qg.antipode.r_map)))
            .max(memb);
    }
    let hopf = antipode::hopf_counit_resid(alg, &qg.cop, s, &qg.counit);
    let polar = qg
        .antipode
        .k
        .involution_resid()
        .max(qg.antipode.i_op.involution_resid())
        .max(qg.antipode.i_op.antiunitarity_resid());
    let r = anti.max(inv).max(rt).max(hopf).max(polar);
    (
        r,
        format!(
            "antimultiplicativity {:.3e}; (∗S)² − ι {:.3e}; [R, τ_t] {:.3e}; counit law {:.3e}; polar data {:.3e}",
            anti, inv, rt, hopf, polar
        ),
    )
}

fn rel_1_11(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let w = &qg.reps.w;
    let uni = linalg::unitarity_resid(w);
    let mut imp: f64 = 0.0;
    for j in 0..cx.n {
        let dx = cx.pair_op(&qg.cop.apply(&qg.alg.basis(j)));
        let got = eye(h).kronecker(&qg.gns.rep[j]) * w;
        imp = imp.max(resid(&got, &(w * dx)));
    }
    let mut lhs = CMat::zeros(h * h * h, h * h * h);
    for i in 0..cx.n {
        lhs += cx
            .pair_op(&qg.cop.apply(&qg.alg.basis(i)))
            .kronecker(&cx.first_leg[i]);
    }
    let idh = eye(h);
    let w12 = w.kronecker(&idh);
    let w23 = idh.kronecker(w);
    let s23 = idh.kronecker(&flip_op(h));
    let w13 = &s23 * &w12 * &s23;
    let leg = resid(&lhs, &(&w13 * &w23));
    let pent = resid(&(&w12 * &w13 * &w23), &(&w23 * &w12));
    let r = uni.max(imp).max(leg).max(pent).max(cx.first_leg_resid);
    (
        r,
        format!(
            "unitarity {:.3e}; (1⊗x)W = WΔ(x) {:.3e}; (Δ⊗ι)W − W₁₃W₂₃ {:.3e}; pentagon {:.3e}; leg split {:.3e}",
            uni, imp, leg, pent, cx.first_leg_resid
        ),
    )
}

fn rel_1_15(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let v = &qg.reps.v;
    let uni = linalg::unitarity_resid(v);
    let mut imp: f64 = 0.0;
    for j in 0..cx.n {
        let dx = cx.pair_op(&qg.cop.apply(&qg.alg.basis(j)));
        let got = v * qg.gns.rep[j].kronecker(&eye(h)) * v.adjoint();
        imp = imp.max(resid(&got, &dx));
    }
    let mut lhs = CMat::zeros(h * h * h, h * h * h);
    for q in 0..cx.n {
        lhs += cx.second_leg[q].kronecker(&cx.pair_op(&qg.cop.apply(&qg.alg.basis(q))));
    }
    let idh = eye(h);
    let v12 = v.kronecker(&idh);
    let v23 = idh.kronecker(v);
    let s23 = idh.kronecker(&flip_op(h));
    let v13 = &s23 * &v12 * &s23;
    let leg = resid(&lhs, &(&v12 * &v13));
    let pent = resid(&(&v12 * &v13 * &v23), &(&v23 * &v12));
    let r = uni.max(imp).max(leg).max(pent).max(cx.second_leg_resid);
    (
        r,
        format!(
            "unitarity {:.3e}; Δ(x) = V(x⊗1)V* {:.3e}; (ι⊗Δ)V − V₁₂V₁₃ {:.3e}; pentagon {:.3e}; leg split {:.3e}",
            uni, imp, leg, pent, cx.second_leg_resid
        ),
    )
}

fn rel_1_16(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let w = &qg.reps.w;
    let k = qg.antipode.k.mat();
    // ω over the matrix units E_uv; the conjugate functional swaps u and v.
    let mut worst: f64 = 0.0;
    for u in 0..h {
        for v in 0..h {
            let x_uv = CMat::from_fn(h, h, |s, t| w[(s * h + v, t * h + u)]);
            let x_vu = CMat::from_fn(h, h, |s, t| w[(s * h + u, t * h + v)]);
            worst = worst.max(resid(&(k * x_uv.conjugate()), &(x_vu * k)));
        }
    }
    let r = worst.max(qg.antipode.build_resid);
    (
        r,
        format!(
            "exchange over {} matrix-unit slices {:.3e}; defining assignment {:.3e}",
            h * h,
            worst,
            qg.antipode.build_resid
        ),
    )
}

fn rel_1_20i(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let ij = AntilinearOp::new(qg.antipode.i_op.mat().kronecker(qg.modular.j.mat()));
    let r = resid(&ij.sandwich(&qg.reps.w), &qg.reps.w.adjoint());
    (r, format!("‖(I⊗J)W(I⊗J) − W*‖ = {:.3e}", r))
}

fn rel_1_20ii(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let w = &qg.reps.w;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let a = herm_upower(&qg.antipode.l_mat, t).kronecker(&qg.u_t(t));
        let b = herm_upower(&qg.antipode.l_mat, -t).kronecker(&qg.u_t(-t));
        sampled = sampled.max(resid(&(a * w * b), w));
    }
    let gen = cx.log_l.kronecker(&eye(h)) + eye(h).kronecker(&cx.log_nabla);
    let g = max_abs(&comm(&gen, w));
    (
        sampled.max(g),
        format!(
            "sampled {:.3e}; generator commutator {:.3e}; ‖L − 1‖ = {:.3e}",
            sampled,
            g,
            resid(&qg.antipode.l_mat, &eye(h))
        ),
    )
}

fn rel_1_24(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let w = &qg.reps.w;
    // Route one: apply S to the first leg of the decomposition.
    let mut lhs = CMat::zeros(h * h, h * h);
    for i in 0..cx.n {
        let s_ei: Element = &qg.antipode.s_map * qg.alg.basis(i);
        lhs += qg.gns.pi(&s_ei).kronecker(&cx.first_leg[i]);
    }
    let a = resid(&lhs, &w.adjoint());
    // Route two: slice by slice through the algebra, S((ι⊗ω)W) = (ι⊗ω)(W*).
    let mut b: f64 = 0.0;
    for u in 0..h {
        for v in 0..h {
            let x = CMat::from_fn(h, h, |s, t| w[(s * h + v, t * h + u)]);
            let xp = CMat::from_fn(h, h, |s, t| w[(t * h + u, s * h + v)].conj());
            let (el, r1) = qg.gns.to_element(&x);
            let (elp, r2) = qg.gns.to_element(&xp);
            b = b
                .max(resid_vec(&(&qg.antipode.s_map * el), &elp))
                .max(r1)
                .max(r2);
        }
    }
    let r = a.max(b).max(cx.first_leg_resid);
    (r, format!("leg route {:.3e}; slice route {:.3e}", a, b))
}

// ---------------------------------------------------------------------------
// Haar functionals, uniqueness, and the automorphism groups.
// ---------------------------------------------------------------------------

fn rel_2_2(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nullity = (qg.haar.left_nullity as f64 - 1.0).abs()
        + (qg.haar.right_nullity as f64 - 1.0).abs();
    // The only second left invariant functional is a scalar multiple; its
    // cocycle against the first is the scalar group s^{-it}.
    let scale = 1.75_f64;
    let phi2 = Functional(&qg.haar.phi.0 * cr(scale));
    let gns2 = gns::gns(&qg.alg, &phi2).expect("a scaled invariant functional stays faithful");
    let rel = gns::relative_tomita(&qg.alg, &qg.gns, &gns2);
    let mut sampled: f64 = 0.0;
    let mut coprod: f64 = 0.0;
    for &t in T_GRID.iter() {
        let u_t = rel.cocycle(&qg.modular, t);
        let expect = eye(cx.h) * phase(-t * scale.ln());
        sampled = sampled.max(resid(&u_t, &expect));
        let (u_el, memb) = rel.cocycle_element(&qg.gns, &qg.modular, t);
        let lhs = qg.cop.apply(&u_el);
        let rhs = tensor_coords(qg.alg.unit(), &u_el);
        coprod = coprod.max(resid_vec(&lhs, &rhs)).max(memb);
    }
    let r = nullity.max(sampled).max(coprod);
    (
        r,
        format!(
            "invariant nullities ({}, {}); cocycle vs {:.2}^(-it): {:.3e}; Δ(u_t) = 1⊗u_t: {:.3e}",
            qg.haar.left_nullity, qg.haar.right_nullity, scale, sampled, coprod
        ),
    )
}

fn rel_2_3i(cx: &SuiteCtx) -> (f64, String) {
    let d = cx.qg.cop.mat();
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = cx.qg.sigma_map(t);
        let (tau, r2) = cx.qg.tau_map(t);
        memb = memb.max(r1).max(r2);
        worst = worst.max(resid(&(d * &sig), &(tau.kronecker(&sig) * d)));
    }
    (
        worst.max(memb),
        format!("sampled {:.3e}; coefficient membership {:.3e}", worst, memb),
    )
}

fn rel_2_3ii(cx: &SuiteCtx) -> (f64, String) {
    let d = cx.qg.cop.mat();
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (tau, r1) = cx.qg.tau_map(t);
        memb = memb.max(r1);
        worst = worst.max(resid(&(d * &tau), &(tau.kronecker(&tau) * d)));
    }
    (
        worst.max(memb),
        format!("sampled {:.3e}; coefficient membership {:.3e}", worst, memb),
    )
}

fn rel_2_3iii(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let d = qg.cop.mat();
    let r_map = &qg.antipode.r_map;
    let flipped = flip_op(cx.n) * d;
    let r = resid(&(d * r_map), &(r_map.kronecker(r_map) * flipped));
    (r, format!("‖ΔR − χ(R⊗R)Δ‖ = {:.3e}", r))
}

fn rel_2_6i(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let r_map = &qg.antipode.r_map;
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp_neg, r2) = qg.sigma_prime_map(-t);
        memb = memb.max(r1).max(r2);
        worst = worst.max(resid(&(r_map * sig), &(sigp_neg * r_map)));
    }
    (
        worst.max(memb),
        format!("sampled {:.3e}; coefficient membership {:.3e}", worst, memb),
    )
}

fn rel_2_6ii(cx: &SuiteCtx) -> (f64, String) {
    let d = cx.qg.cop.mat();
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sigp, r1) = cx.qg.sigma_prime_map(t);
        let (tau_neg, r2) = cx.qg.tau_map(-t);
        memb = memb.max(r1).max(r2);
        worst = worst.max(resid(&(d * &sigp), &(sigp.kronecker(&tau_neg) * d)));
    }
    (
        worst.max(memb),
        format!("sampled {:.3e}; coefficient membership {:.3e}", worst, memb),
    )
}

fn rel_2_7(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nu = qg.modular_element.nu;
    let mut worst: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (tau, memb) = qg.tau_map(t);
        let taut = tau.transpose();
        let a = resid_vec(&(&taut * &qg.haar.phi.0), &(&qg.haar.phi.0 * cr(nu.powf(-t))));
        let b = resid_vec(&(&taut * &qg.haar.psi.0), &(&qg.haar.psi.0 * cr(nu.powf(-t))));
        worst = worst.max(a).max(b).max(memb);
    }
    (worst, format!("ν = {:.6}; worst over grid {:.3e}", nu, worst))
}

fn rel_2_8(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &s in T_GRID.iter() {
        let (sig_s, r1) = qg.sigma_map(s);
        let (sigp_s, r2) = qg.sigma_prime_map(s);
        let (tau_s, r3) = qg.tau_map(s);
        memb = memb.max(r1).max(r2).max(r3);
        for &t in T_GRID.iter() {
            let (sig_t, _) = qg.sigma_map(t);
            let (sigp_t, _) = qg.sigma_prime_map(t);
            let (tau_t, _) = qg.tau_map(t);
            worst = worst
                .max(max_abs(&comm(&sig_s, &sigp_t)))
                .max(max_abs(&comm(&sig_s, &tau_t)))
                .max(max_abs(&comm(&sigp_s, &tau_t)))
                .max(max_abs(&comm(&sig_s, &sig_t)))
                .max(max_abs(&comm(&sigp_s, &sigp_t)))
                .max(max_abs(&comm(&tau_s, &tau_t)));
        }
    }
    (
        worst.max(memb),
        format!("pairwise commutators over the grid {:.3e}; membership {:.3e}", worst, memb),
    )
}

fn rel_2_9(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nu = qg.modular_element.nu;
    let mut worst: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp, r2) = qg.sigma_prime_map(t);
        let a = resid_vec(
            &(sig.transpose() * &qg.haar.psi.0),
            &(&qg.haar.psi.0 * cr(nu.powf(-t))),
        );
        let b = resid_vec(
            &(sigp.transpose() * &qg.haar.phi.0),
            &(&qg.haar.phi.0 * cr(nu.powf(t))),
        );
        worst = worst.max(a).max(b).max(r1).max(r2);
    }
    (worst, format!("ν = {:.6}; worst over grid {:.3e}", nu, worst))
}

fn rel_2_10(cx: &SuiteCtx) -> (f64, String) {
    let d = cx.qg.cop.mat();
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (tau, r1) = cx.qg.tau_map(t);
        let (sig, r2) = cx.qg.sigma_map(t);
        let (sigp_neg, r3) = cx.qg.sigma_prime_map(-t);
        memb = memb.max(r1).max(r2).max(r3);
        worst = worst.max(resid(&(d * &tau), &(sig.kronecker(&sigp_neg) * d)));
    }
    (
        worst.max(memb),
        format!("sampled {:.3e}; coefficient membership {:.3e}", worst, memb),
    )
}

fn rel_2_11(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let alg = &qg.alg;
    let me = &qg.modular_element;
    let nu = me.nu;
    // ψ(x) = φ(δ^{1/2} x δ^{1/2}) as covectors.
    let sandwich = alg.left_mult_by(&me.delta_sqrt) * alg.right_mult_by(&me.delta_sqrt);
    let a = resid_vec(&qg.haar.psi.0, &(sandwich.transpose() * &qg.haar.phi.0));
    let mut b: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp, r2) = qg.sigma_prime_map(t);
        let (tau, r3) = qg.tau_map(t);
        memb = memb.max(r1).max(r2).max(r3);
        b = b.max(resid_vec(&(&sig * &me.delta), &(&me.delta * cr(nu.powf(t)))));
        // σ′_t = δ^{it} σ_t(·) δ^{-it} together with σ_t(δ) = ν^t δ forces
        // σ′_t(δ) = ν^t δ; at finite dimension ν = 1 and the exponent sign
        // carries no numerical content.
        b = b.max(resid_vec(&(&sigp * &me.delta), &(&me.delta * cr(nu.powf(t)))));
        b = b.max(resid_vec(&(&tau * &me.delta), &me.delta));
        let (dit, r4) = qg.delta_it_element(t);
        let (dmit, r5) = qg.delta_it_element(-t);
        memb = memb.max(r4).max(r5);
        let conj_map = alg.left_mult_by(&dit) * alg.right_mult_by(&dmit) * &sig;
        b = b.max(resid(&sigp, &conj_map));
    }
    let c = resid_vec(&(&qg.antipode.r_map * &me.delta), &me.delta_inv);
    let delta_dist = resid_vec(&me.delta, alg.unit());
    let mut r = a.max(b).max(c).max(memb).max(me.solve_resid);
    // With a trivial modular element the ψ-side cyclic map coincides with
    // the φ-side one; assert the identification exactly in that case.
    if delta_dist <= qg.tol {
        r = r.max(resid(&qg.lambda_psi, &qg.gns.lambda));
    }
    (
        r,
        format!(
            "ν = {:.6}; ‖δ − 1‖ = {:.3e}; covector form {:.3e}; action laws {:.3e}; R(δ) − δ⁻¹ {:.3e}",
            nu, delta_dist, a, b, c
        ),
    )
}

// ---------------------------------------------------------------------------
// The dual construction.
// ---------------------------------------------------------------------------

fn rel_3_3(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let pi_span = stack_ops(&qg.gns.rep);
    let joint = hcat(&pi_span, &cx.dual_span);
    let inter = cx.n + cx.m - linalg::rank(&joint, RANK_CUTOFF);
    // x ∈ M with [x, Y_i] = 0 for every dual basis operator.
    let hh = cx.h * cx.h;
    let mut sys = CMat::zeros(hh * cx.m, cx.n);
    for i in 0..cx.m {
        for j in 0..cx.n {
            let cv = linalg::vec_of(&comm(&qg.gns.rep[j], &qg.dual.basis_ops[i]));
            for r in 0..hh {
                sys[(i * hh + r, j)] = cv[r];
            }
        }
    }
    let central = linalg::nullspace(&sys, RANK_CUTOFF).len();
    let r = (inter as f64 - 1.0).abs() + (central as f64 - 1.0).abs();
    (
        r,
        format!("dim(M ∩ M̂) = {}; dim(M ∩ M̂′) = {}", inter, central),
    )
}

fn rel_3_7(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let slices = duality::first_leg_slices(&qg.reps.w, h);
    let mut worst: f64 = 0.0;
    for pair in 0..3 {
        let xi_v = probe_vec(h, 2 * pair);
        let eta = probe_vec(h, 2 * pair + 1);
        // ω = ⟨· ξ, η⟩ assembled from matrix-unit functionals.
        let mut y = CMat::zeros(h, h);
        for s in 0..h {
            for t in 0..h {
                y += &slices[t * h + s] * (eta[s].conj() * xi_v[t]);
            }
        }
        let (coords, memb) = lstsq_vec(&cx.dual_span, &linalg::vec_of(&y));
        let got = qg.dual.lambda_hat(&coords);
        // π′(η) is the right action: π′(η) Λ_φ(x) = π(x) η.
        let mut stack_eta = CMat::zeros(h, cx.n);
        for j in 0..cx.n {
            stack_eta.column_mut(j).copy_from(&(&qg.gns.rep[j] * &eta));
        }
        let pi_prime = stack_eta * &qg.gns.lambda_inv;
        let want = pi_prime.adjoint() * &xi_v;
        worst = worst.max(resid_vec(&got, &want)).max(memb);
    }
    (worst, format!("three probe functionals, worst {:.3e}", worst))
}

fn rel_3_8(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut worst: f64 = 0.0;
    for i in 0..cx.m {
        for j in 0..cx.m {
            let prod = qg
                .dual
                .alg
                .multiply(&qg.dual.alg.basis(i), &qg.dual.alg.basis(j))
                .expect("same algebra");
            let lhs = qg.dual.lambda_hat(&prod);
            let rhs = &qg.dual.basis_ops[i] * qg.dual.xi.column(j).clone_owned();
            worst = worst.max(resid_vec(&lhs, &rhs));
        }
    }
    (worst, format!("over all {} basis pairs", cx.m * cx.m))
}

fn rel_3_11(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut worst: f64 = 0.0;
    for i in 0..cx.m {
        let star_i = qg.dual.alg.star_of(&qg.dual.alg.basis(i));
        let lam_star = qg.dual.lambda_hat(&star_i);
        let lam_plain = qg.dual.xi.column(i).clone_owned();
        for j in 0..cx.n {
            let lhs = ip(&lam_star, &qg.gns.lambda.column(j).clone_owned());
            let s_astar: Element = &qg.antipode.s_map * qg.alg.star_of(&qg.alg.basis(j));
            let rhs = ip(&lam_plain, &qg.gns.lambda_of(&s_astar)).conj();
            worst = worst.max((lhs - rhs).norm());
        }
    }
    (worst, format!("over all {} pairings", cx.m * cx.n))
}

fn rel_3_13(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let (lo, hi) = qg.dual.phi_hat.gram_eigen_range(&qg.dual.alg);
    let faithful_pen = if lo > 0.0 { 0.0 } else { 1.0 };
    let r = qg.dual.gram_consistency.max(faithful_pen);
    (
        r,
        format!(
            "‖Ξ†Ξ − Ĝ‖ = {:.3e}; Gram spectrum [{:.3e}, {:.3e}]",
            qg.dual.gram_consistency, lo, hi
        ),
    )
}

fn rel_3_14(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let wh = &qg.dual.w_hat;
    let uni = linalg::unitarity_resid(wh);
    let agree = qg.bidual.w_hat_agreement;
    let idh = eye(h);
    let w12 = wh.kronecker(&idh);
    let w23 = idh.kronecker(wh);
    let s23 = idh.kronecker(&flip_op(h));
    let w13 = &s23 * &w12 * &s23;
    let pent = resid(&(&w12 * &w13 * &w23), &(&w23 * &w12));
    let mut imp: f64 = 0.0;
    for j in 0..cx.m {
        let dj = pair_op_in(&qg.dual.basis_ops, &qg.dual.cop.apply(&qg.dual.alg.basis(j)));
        let got = wh.adjoint() * idh.kronecker(&qg.dual.basis_ops[j]) * wh;
        imp = imp.max(resid(&got, &dj));
    }
    let r = uni.max(agree).max(pent).max(imp);
    (
        r,
        format!(
            "unitarity {:.3e}; two-route agreement {:.3e}; pentagon {:.3e}; Δ̂ implementation {:.3e}",
            uni, agree, pent, imp
        ),
    )
}

fn rel_3_15(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let (raw_l, raw_r) = quantum_group::invariance_resids(
        &qg.dual.alg,
        &qg.dual.cop,
        &qg.dual.phi_hat,
        &qg.dual.psi_hat,
    );
    let scale_l = max_abs_vec(&qg.dual.phi_hat.0).max(1.0);
    let scale_r = max_abs_vec(&qg.dual.psi_hat.0).max(1.0);
    let (left_sols, right_sols) = quantum_group::raw_invariant_solutions(&qg.dual.alg, &qg.dual.cop);
    let nullity = (left_sols.len() as f64 - 1.0).abs() + (right_sols.len() as f64 - 1.0).abs();
    let r = (raw_l / scale_l).max(raw_r / scale_r).max(nullity);
    (
        r,
        format!(
            "left {:.3e}, right {:.3e} (normalized); invariant nullities ({}, {})",
            raw_l / scale_l,
            raw_r / scale_r,
            left_sols.len(),
            right_sols.len()
        ),
    )
}

fn rel_3_16(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let dual = &qg.dual;
    let dm = dual.cop.mat();
    let rh = &dual.r_hat_map;
    let flip_cop = resid(&(dm * rh), &(rh.kronecker(rh) * (flip_op(cx.m) * dm)));
    let mut anti: f64 = 0.0;
    for i in 0..cx.m {
        for j in 0..cx.m {
            let prod = dual
                .alg
                .multiply(&dual.alg.basis(i), &dual.alg.basis(j))
                .expect("same algebra");
            let lhs: Element = rh * &prod;
            let rhs = dual
                .alg
                .multiply(&(rh * dual.alg.basis(j)), &(rh * dual.alg.basis(i)))
                .expect("same algebra");
            anti = anti.max(resid_vec(&lhs, &rhs));
        }
    }
    let invol = resid(&(rh * rh), &eye(cx.m));
    let star_h = dual.alg.star_mat();
    let star_compat = resid(&(rh * star_h), &(star_h * rh.conjugate()));
    let r = flip_cop.max(anti).max(invol).max(star_compat);
    (
        r,
        format!(
            "coproduct flip {:.3e}; antimultiplicativity {:.3e}; R̂² − ι {:.3e}; star compatibility {:.3e}",
            flip_cop, anti, invol, star_compat
        ),
    )
}

fn rel_3_18(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let b = &qg.bidual;
    let dim_pen = if b.dim_match { 0.0 } else { 1.0 };
    let span_pen = b.span_defect as f64;
    let r = b.cop_resid.max(b.membership_resid).max(dim_pen).max(span_pen);
    (
        r,
        format!(
            "coproduct transport {:.3e}; membership {:.3e}; span defect {}; dimensions match: {}",
            b.cop_resid, b.membership_resid, b.span_defect, b.dim_match
        ),
    )
}

// ---------------------------------------------------------------------------
// The operator zoo tying both sides together.
// ---------------------------------------------------------------------------

fn rel_4_2(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nu = qg.modular_element.nu;
    let lam = &qg.gns.lambda;
    let lam_psi = &qg.lambda_psi;
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp, r2) = qg.sigma_prime_map(t);
        let (tau, r3) = qg.tau_map(t);
        memb = memb.max(r1).max(r2).max(r3);
        worst = worst
            .max(resid(&(qg.u_t(t) * lam), &(lam * &sig)))
            .max(resid(&(qg.v_t(t) * lam), &(lam * &tau * cr(nu.powf(t / 2.0)))))
            .max(resid(&(qg.w_t(t) * lam), &(lam * &sigp * cr(nu.powf(-t / 2.0)))))
            .max(resid(&(qg.w_t(t) * lam_psi), &(lam_psi * &sigp)));
    }
    (
        worst.max(memb),
        format!("ν = {:.6}; worst defining relation {:.3e}", nu, worst),
    )
}

fn rel_4_3(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let want = qg.delta_power(t) * qg.modular.j.sandwich(&qg.delta_power(t)) * qg.u_t(t);
        sampled = sampled.max(resid(&qg.w_t(t), &want));
    }
    let gen = resid(
        &cx.log_nabla_prime,
        &(&cx.log_delta - cx.sand_j(&cx.log_delta) + &cx.log_nabla),
    );
    let c1 = max_abs(&comm(&cx.log_delta, &cx.sand_j(&cx.log_delta)));
    let c2 = max_abs(&comm(
        &(&cx.log_delta - cx.sand_j(&cx.log_delta)),
        &cx.log_nabla,
    ));
    let r = sampled.max(gen).max(c1).max(c2);
    (
        r,
        format!(
            "sampled {:.3e}; generator {:.3e}; factor commutators {:.3e}",
            sampled,
            gen,
            c1.max(c2)
        ),
    )
}

fn rel_4_4(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    // Mutual commutation at generator level.
    let pair = max_abs(&comm(&cx.log_nabla, &cx.log_p))
        .max(max_abs(&comm(&cx.log_nabla, &cx.log_nabla_prime)))
        .max(max_abs(&comm(&cx.log_p, &cx.log_nabla_prime)));
    // Commutation with J: J A^{it} J = A^{it} means J (log A) J = −log A.
    let with_j = resid(&cx.sand_j(&cx.log_nabla), &(-&cx.log_nabla))
        .max(resid(&cx.sand_j(&cx.log_p), &(-&cx.log_p)))
        .max(resid(&cx.sand_j(&cx.log_nabla_prime), &(-&cx.log_nabla_prime)));
    // Implementation of the three automorphism groups.
    let mut imp: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp, r2) = qg.sigma_prime_map(t);
        let (tau, r3) = qg.tau_map(t);
        memb = memb.max(r1).max(r2).max(r3);
        let (u, v, w) = (qg.u_t(t), qg.v_t(t), qg.w_t(t));
        for j in 0..cx.n {
            let rep_j = &qg.gns.rep[j];
            imp = imp
                .max(resid(&(&u * rep_j * u.adjoint()), &qg.gns.pi(&sig.column(j).clone_owned())))
                .max(resid(&(&w * rep_j * w.adjoint()), &qg.gns.pi(&sigp.column(j).clone_owned())))
                .max(resid(&(&v * rep_j * v.adjoint()), &qg.gns.pi(&tau.column(j).clone_owned())));
        }
    }
    let r = pair.max(with_j).max(imp).max(memb);
    (
        r,
        format!(
            "generator commutators {:.3e}; commutation with J {:.3e}; implementation {:.3e}",
            pair, with_j, imp
        ),
    )
}

/// The antilinear operator `Λ_φ(x) ↦ Λ_φ(R(x)* δ^{1/2})` in matrix form.
fn j_hat_defined(cx: &SuiteCtx) -> CMat {
    let qg = cx.qg;
    let coords = qg.alg.right_mult_by(&qg.modular_element.delta_sqrt)
        * qg.alg.star_mat()
        * qg.antipode.r_map.conjugate();
    &qg.gns.lambda * coords * qg.gns.lambda_inv.conjugate()
}

/// The unitary `Λ_φ(x) ↦ Λ_φ(τ_t(x) δ^{-it})` with its membership residual.
fn nabla_hat_defined(cx: &SuiteCtx, t: f64) -> (CMat, f64) {
    let qg = cx.qg;
    let (dmit, r1) = qg.delta_it_element(-t);
    let (tau, r2) = qg.tau_map(t);
    let mat = &qg.gns.lambda * qg.alg.right_mult_by(&dmit) * tau * &qg.gns.lambda_inv;
    (mat, r1.max(r2))
}

fn rel_4_5(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let jh = j_hat_defined(cx);
    let jh_op = AntilinearOp::new(jh.clone());
    let j_agree = resid(&jh, qg.dual.modular.j.mat());
    let props = jh_op.involution_resid().max(jh_op.antiunitarity_resid());
    let mut n_agree: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (nh, r1) = nabla_hat_defined(cx, t);
        memb = memb.max(r1);
        n_agree = n_agree.max(resid(&nh, &herm_upower(&qg.dual.modular.nabla, t)));
    }
    let r = j_agree.max(props).max(n_agree).max(memb);
    (
        r,
        format!(
            "Ĵ agreement {:.3e} (involutive antiunitary to {:.3e}); ∇̂^(it) agreement {:.3e}",
            j_agree, props, n_agree
        ),
    )
}

fn rel_4_6(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let want = qg.modular.j.sandwich(&qg.delta_power(t)) * qg.v_t(t);
        sampled = sampled.max(resid(&herm_upower(&qg.dual.modular.nabla, t), &want));
    }
    let gen = resid(&cx.log_nabla_hat, &(-cx.sand_j(&cx.log_delta) + &cx.log_p));
    let c1 = max_abs(&comm(&cx.sand_j(&cx.log_delta), &cx.log_p));
    let r = sampled.max(gen).max(c1);
    (
        r,
        format!("sampled {:.3e}; generator {:.3e}; factor commutator {:.3e}", sampled, gen, c1),
    )
}

fn rel_4_7(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut r_part: f64 = 0.0;
    for j in 0..cx.n {
        let got = qg.dual.modular.j.sandwich(&qg.gns.rep[j].adjoint());
        let want = qg.gns.pi(&(&qg.antipode.r_map * qg.alg.basis(j)));
        r_part = r_part.max(resid(&got, &want));
    }
    let mut t_part: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (tau, r1) = qg.tau_map(t);
        memb = memb.max(r1);
        let nh = herm_upower(&qg.dual.modular.nabla, t);
        let nh_inv = herm_upower(&qg.dual.modular.nabla, -t);
        for j in 0..cx.n {
            let got = &nh * &qg.gns.rep[j] * &nh_inv;
            t_part = t_part.max(resid(&got, &qg.gns.pi(&tau.column(j).clone_owned())));
        }
    }
    let r = r_part.max(t_part).max(memb);
    (
        r,
        format!("R(x) = Ĵx*Ĵ {:.3e}; τ_t by ∇̂ conjugation {:.3e}", r_part, t_part),
    )
}

fn rel_4_8(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let got = qg.dual.modular.j.sandwich(&qg.u_t(-t));
        sampled = sampled.max(resid(&got, &qg.w_t(t)));
    }
    let gen = resid(&cx.log_nabla_prime, &cx.sand_j_hat(&cx.log_nabla));
    (
        sampled.max(gen),
        format!("sampled {:.3e}; generator {:.3e}", sampled, gen),
    )
}

fn rel_4_9(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let jj = AntilinearOp::new(qg.dual.modular.j.mat().kronecker(qg.dual.modular.j.mat()));
    let got = jj.sandwich(&qg.dual.w_hat);
    let r = resid(&got, &qg.reps.v);
    let j_dist = resid(qg.dual.modular.j.mat(), qg.modular.j.mat());
    (
        r,
        format!("‖(Ĵ⊗Ĵ)ΣW*Σ(Ĵ⊗Ĵ) − V‖ = {:.3e}; ‖Ĵ − J‖ = {:.3e}", r, j_dist),
    )
}

fn rel_4_11(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    // Analytic continuation of the defining unitary group to t = −i/2:
    // Λ_φ(x) ↦ Λ_φ(τ_{-i/2}(x) δ^{-1/2}).
    let (dm_half, memb) = qg.gns.to_element(&herm_power(&qg.pi_delta, -0.5));
    let half = &qg.gns.lambda
        * qg.alg.right_mult_by(&dm_half)
        * &qg.antipode.tau_half
        * &qg.gns.lambda_inv;
    let polar_mat = j_hat_defined(cx) * half.conjugate();
    let r = resid(qg.dual.modular.t_op.mat(), &polar_mat).max(memb);
    (
        r,
        format!("‖T̂ − Ĵ∇̂^(1/2)‖ = {:.3e} (independent construction)", r),
    )
}

fn rel_4_12(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    // Two independent routes to the dual unitary antipode.
    let two_routes = resid(&qg.dual_antipode.r_map, &qg.dual.r_hat_map);
    let mut op_route: f64 = 0.0;
    for i in 0..cx.m {
        let got = qg.modular.j.sandwich(&qg.dual.basis_ops[i].adjoint());
        let want = qg.dual.op_of(&(&qg.dual.r_hat_map * qg.dual.alg.basis(i)));
        op_route = op_route.max(resid(&got, &want));
    }
    let mut tau_hat: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (th, r1) = qg.tau_hat_map(t);
        memb = memb.max(r1);
        let (u, u_inv) = (qg.u_t(t), qg.u_t(-t));
        for i in 0..cx.m {
            let got = &u * &qg.dual.basis_ops[i] * &u_inv;
            tau_hat = tau_hat.max(resid(&got, &qg.dual.op_of(&th.column(i).clone_owned())));
        }
    }
    // The conjugation symmetries of W feeding the proof.
    let jj = AntilinearOp::new(qg.dual.modular.j.mat().kronecker(qg.modular.j.mat()));
    let w_conj = resid(&jj.sandwich(&qg.reps.w), &qg.reps.w.adjoint());
    let mut w_mod: f64 = 0.0;
    for &t in T_GRID.iter() {
        let a = herm_upower(&qg.dual.modular.nabla, t).kronecker(&qg.u_t(t));
        let b = herm_upower(&qg.dual.modular.nabla, -t).kronecker(&qg.u_t(-t));
        w_mod = w_mod.max(resid(&(a * &qg.reps.w * b), &qg.reps.w));
    }
    let w_gen = max_abs(&comm(
        &(cx.log_nabla_hat.kronecker(&eye(h)) + eye(h).kronecker(&cx.log_nabla)),
        &qg.reps.w,
    ));
    let r = two_routes.max(op_route).max(tau_hat).max(memb).max(w_conj).max(w_mod).max(w_gen);
    (
        r,
        format!(
            "R̂ two-route {:.3e}; R̂(y) = Jy*J {:.3e}; τ̂ implementation {:.3e}; (Ĵ⊗J)W(Ĵ⊗J) − W* {:.3e}; modular W symmetry {:.3e}",
            two_routes, op_route, tau_hat, w_conj, w_mod.max(w_gen)
        ),
    )
}

fn rel_4_13(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nu = qg.modular_element.nu;
    let nu_hat = qg.dual_modular_element.nu;
    let recip = (nu_hat * nu - 1.0).abs();
    let mut lam_rule: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (th, r1) = qg.tau_hat_map(t);
        memb = memb.max(r1);
        let lhs = qg.v_t(t) * &qg.dual.xi;
        let rhs = &qg.dual.xi * th * cr(nu.powf(-t / 2.0));
        lam_rule = lam_rule.max(resid(&lhs, &rhs));
    }
    let r = recip.max(lam_rule).max(memb);
    (
        r,
        format!(
            "ν = {:.6}, ν̂ = {:.6}, |ν̂ν − 1| = {:.3e}; P^(it) on Λ̂ {:.3e}",
            nu, nu_hat, recip, lam_rule
        ),
    )
}

fn rel_4_14(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let h = cx.h;
    let w = &qg.reps.w;
    // (α⊗ι)W through the first-leg decomposition.
    let apply_first = |alpha: &CMat| -> CMat {
        let mut acc = CMat::zeros(h * h, h * h);
        for i in 0..cx.n {
            let moved: Element = alpha * qg.alg.basis(i);
            acc += qg.gns.pi(&moved).kronecker(&cx.first_leg[i]);
        }
        acc
    };
    let lift = |x: &CMat| eye(h).kronecker(x);
    let mut worst: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let (sig, r1) = qg.sigma_map(t);
        let (sigp, r2) = qg.sigma_prime_map(t);
        let (tau, r3) = qg.tau_map(t);
        memb = memb.max(r1).max(r2).max(r3);
        let (u, v, wt) = (qg.u_t(t), qg.v_t(t), qg.w_t(t));
        let tau_w = apply_first(&tau);
        worst = worst
            .max(resid(&tau_w, &(lift(&u.adjoint()) * w * lift(&u))))
            .max(resid(&tau_w, &(lift(&v.adjoint()) * w * lift(&v))))
            .max(resid(&apply_first(&sigp), &(lift(&wt.adjoint()) * w * lift(&v.adjoint()))))
            .max(resid(&apply_first(&sig), &(lift(&v.adjoint()) * w * lift(&wt.adjoint()))));
    }
    (
        worst.max(memb).max(cx.first_leg_resid),
        format!("four conjugation rules over the grid, worst {:.3e}", worst),
    )
}

fn rel_4_15(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    let mut group_like: f64 = 0.0;
    let mut memb: f64 = 0.0;
    for &t in T_GRID.iter() {
        let dh = qg.delta_hat_power(t);
        sampled = sampled.max(resid(&dh, &(qg.v_t(t).adjoint() * qg.w_t(t).adjoint())));
        let (coords, r1) = lstsq_vec(&cx.dual_span, &linalg::vec_of(&dh));
        memb = memb.max(r1);
        group_like = group_like.max(resid_vec(
            &qg.dual.cop.apply(&coords),
            &tensor_coords(&coords, &coords),
        ));
    }
    let commute = max_abs(&comm(&cx.log_p, &cx.log_nabla_prime));
    let dist = resid(&qg.delta_hat_op, &eye(cx.h));
    let r = sampled.max(group_like).max(memb).max(commute);
    (
        r,
        format!(
            "δ̂^(it) = v_t*w_t* {:.3e}; group-like {:.3e}; ‖δ̂ − 1‖ = {:.3e}",
            sampled, group_like, dist
        ),
    )
}

fn rel_4_17(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        sampled = sampled
            .max(resid(
                &qg.u_t(t),
                &(cx.sand_j_hat(&qg.delta_hat_power(t)) * qg.v_t(t)),
            ))
            .max(resid(
                &herm_upower(&qg.dual.modular.nabla, t),
                &(cx.sand_j(&qg.delta_power(t)) * qg.v_t(t)),
            ))
            .max(resid(
                &qg.w_t(t),
                &(qg.delta_hat_power(-t) * qg.v_t(-t)),
            ))
            .max(resid(
                &herm_upower(&qg.modular_psi_hat.nabla, t),
                &(qg.delta_power(-t) * qg.v_t(-t)),
            ));
    }
    let gen = resid(&cx.log_nabla, &(-cx.sand_j_hat(&cx.log_delta_hat) + &cx.log_p))
        .max(resid(&cx.log_nabla_hat, &(-cx.sand_j(&cx.log_delta) + &cx.log_p)))
        .max(resid(&cx.log_nabla_prime, &(-&cx.log_delta_hat - &cx.log_p)))
        .max(resid(&cx.log_nabla_hat_prime, &(-&cx.log_delta - &cx.log_p)));
    // Commutation facts used throughout: P^{it} commutes with J, Ĵ, δ, δ̂;
    // J with δ̂^{it}; Ĵ with δ^{it}.
    let facts = resid(&cx.sand_j(&cx.log_p), &(-&cx.log_p))
        .max(resid(&cx.sand_j_hat(&cx.log_p), &(-&cx.log_p)))
        .max(max_abs(&comm(&cx.log_p, &cx.log_delta)))
        .max(max_abs(&comm(&cx.log_p, &cx.log_delta_hat)))
        .max(resid(&cx.sand_j(&cx.log_delta_hat), &(-&cx.log_delta_hat)))
        .max(resid(&cx.sand_j_hat(&cx.log_delta), &(-&cx.log_delta)));
    let r = sampled.max(gen).max(facts);
    (
        r,
        format!(
            "four factorizations sampled {:.3e}; generators {:.3e}; commutation facts {:.3e}",
            sampled, gen, facts
        ),
    )
}

fn rel_4_18(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let lhs1 = cx.sand_j_hat(&qg.u_t(-t));
        let rhs1 = qg.delta_power(t) * cx.sand_j(&qg.delta_power(t)) * qg.u_t(t);
        let nh = herm_upower(&qg.dual.modular.nabla, t);
        let nh_neg = herm_upower(&qg.dual.modular.nabla, -t);
        let lhs2 = cx.sand_j(&nh_neg);
        let rhs2 = qg.delta_hat_power(t) * cx.sand_j_hat(&qg.delta_hat_power(t)) * nh;
        sampled = sampled.max(resid(&lhs1, &rhs1)).max(resid(&lhs2, &rhs2));
    }
    let gen = resid(
        &cx.sand_j_hat(&cx.log_nabla),
        &(&cx.log_delta - cx.sand_j(&cx.log_delta) + &cx.log_nabla),
    )
    .max(resid(
        &cx.sand_j(&cx.log_nabla_hat),
        &(&cx.log_delta_hat - cx.sand_j_hat(&cx.log_delta_hat) + &cx.log_nabla_hat),
    ));
    (
        sampled.max(gen),
        format!("sampled {:.3e}; generators {:.3e}", sampled, gen),
    )
}

fn rel_4_19(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nu = qg.modular_element.nu;
    let mut weyl: f64 = 0.0;
    for &s in T_GRID.iter() {
        for &t in T_GRID.iter() {
            let lhs = qg.delta_hat_power(s) * qg.delta_power(t);
            let rhs = qg.delta_power(t) * qg.delta_hat_power(s) * phase(-s * t * nu.ln());
            weyl = weyl.max(resid(&lhs, &rhs));
        }
    }
    let gen = resid(
        &comm(&cx.log_delta_hat, &cx.log_delta),
        &(eye(cx.h) * C::new(0.0, nu.ln())),
    );
    let j_mat = qg.modular.j.mat();
    let jh_mat = qg.dual.modular.j.mat();
    let lhs = jh_mat * j_mat.conjugate();
    let rhs = j_mat * jh_mat.conjugate() * phase(nu.ln() / 4.0);
    let conj_rule = resid(&lhs, &rhs);
    let r = weyl.max(gen).max(conj_rule);
    (
        r,
        format!(
            "Weyl law {:.3e}; generator {:.3e}; ĴJ vs ν^(i/4)JĴ {:.3e}; ν = {:.6} — at finite dimension ν = 1 is forced, so the phase ν^(i/4) is only exercised at the value 1 and the check confirms commutation of Ĵ and J",
            weyl, gen, conj_rule, nu
        ),
    )
}

fn rel_4_20(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let mut sampled: f64 = 0.0;
    for &t in T_GRID.iter() {
        let lhs = qg.v_t(-2.0 * t);
        let rhs = qg.delta_power(t)
            * cx.sand_j(&qg.delta_power(t))
            * qg.delta_hat_power(t)
            * cx.sand_j_hat(&qg.delta_hat_power(t));
        sampled = sampled.max(resid(&lhs, &rhs));
    }
    let gen = resid(
        &(&cx.log_p * cr(-2.0)),
        &(&cx.log_delta - cx.sand_j(&cx.log_delta) + &cx.log_delta_hat
            - cx.sand_j_hat(&cx.log_delta_hat)),
    );
    (
        sampled.max(gen),
        format!("sampled {:.3e}; generator {:.3e}", sampled, gen),
    )
}

fn rel_r4_10(cx: &SuiteCtx) -> (f64, String) {
    let qg = cx.qg;
    let nhalf = herm_power(&qg.dual.modular.nabla, 0.5);
    let polar_mat = qg.dual.modular.j.mat() * nhalf.conjugate();
    let k_dist = resid(qg.antipode.k.mat(), &polar_mat);
    let i_dist = resid(qg.antipode.i_op.mat(), qg.dual.modular.j.mat());
    let l_dist = resid(&qg.antipode.l_mat, &qg.dual.modular.nabla);
    let r = k_dist.max(i_dist).max(l_dist);
    (
        r,
        format!(
            "‖K − Ĵ∇̂^(1/2)‖ = {:.3e}; ‖I − Ĵ‖ = {:.3e}; ‖L − ∇̂‖ = {:.3e} (empirical identification)",
            k_dist, i_dist, l_dist
        ),
    )
}

// ---------------------------------------------------------------------------
// Catalog, suite runner, and the named unitary groups.
// ---------------------------------------------------------------------------

/// The full identity catalog. Ids are stable public names; reports list
/// entries in lexicographic id order.
pub fn catalog() -> &'static [RelationCatalogEntry] {
    use Expected::{AlwaysHolds, EmergentTrivial};
    static CATALOG: &[RelationCatalogEntry] = &[
        RelationCatalogEntry {
            id: "REL-1.2",
            description: "antipode polar decomposition: antimultiplicative, star-involutive, R commutes with the scaling group, counit law",
            paper_ref: "S = R∘τ_{-i/2}; S(xy) = S(y)S(x); S(S(x)*)* = x; m(S⊗ι)Δ(x) = ε(x)1",
            evaluator: rel_1_2,
            expected: Expected::AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-1.11",
            description: "left regular representation: unitary, implements the coproduct, leg identity and pentagon",
            paper_ref: "WW* = 1; (1⊗x)W = WΔ(x); (Δ⊗ι)W = W₁₃W₂₃; W₁₂W₁₃W₂₃ = W₂₃W₁₂",
            evaluator: rel_1_11,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-1.15",
            description: "right regular representation: unitary, implements the coproduct, leg identity and pentagon",
            paper_ref: "V unitary; Δ(x) = V(x⊗1)V*; (ι⊗Δ)V = V₁₂V₁₃; V₁₂V₁₃V₂₃ = V₂₃V₁₂",
            evaluator: rel_1_15,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-1.16",
            description: "the antilinear K exchanges a slice of W with its conjugate slice",
            paper_ref: "K((ι⊗ω)W)ξ = ((ι⊗ω̄)W)Kξ",
            evaluator: rel_1_16,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-1.20i",
            description: "the polar phases conjugate W to its adjoint",
            paper_ref: "(I⊗J)W(I⊗J) = W*",
            evaluator: rel_1_20i,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-1.20ii",
            description: "the polar moduli commute with W as a tensor pair",
            paper_ref: "(L^{it}⊗∇^{it})W(L^{-it}⊗∇^{-it}) = W",
            evaluator: rel_1_20ii,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-1.24",
            description: "the antipode sends slices of W to slices of W*",
            paper_ref: "S((ι⊗ω)W) = (ι⊗ω)(W*)",
            evaluator: rel_1_24,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-2.2",
            description: "invariant functionals are unique up to a scalar; the cocycle of a second one is scalar and group-like in the second leg",
            paper_ref: "Δ(u_t) = 1⊗u_t for the cocycle u_t of two left invariant functionals",
            evaluator: rel_2_2,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-2.3i",
            description: "the coproduct intertwines the modular group with the scaling-modular pair",
            paper_ref: "Δ(σ_t(x)) = (τ_t⊗σ_t)Δ(x)",
            evaluator: rel_2_3i,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.3ii",
            description: "the coproduct commutes with the scaling group doubled",
            paper_ref: "Δ(τ_t(x)) = (τ_t⊗τ_t)Δ(x)",
            evaluator: rel_2_3ii,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.3iii",
            description: "the unitary antipode flips the coproduct",
            paper_ref: "Δ(R(x)) = χ(R⊗R)Δ(x)",
            evaluator: rel_2_3iii,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-2.6i",
            description: "R exchanges the two modular groups up to time reversal",
            paper_ref: "R(σ_t(x)) = σ′_{-t}(R(x))",
            evaluator: rel_2_6i,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.6ii",
            description: "the coproduct intertwines the right modular group with the scaling group reversed",
            paper_ref: "Δ(σ′_t(x)) = (σ′_t⊗τ_{-t})Δ(x)",
            evaluator: rel_2_6ii,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.7",
            description: "both invariant functionals are relatively invariant under the scaling group with the scaling constant",
            paper_ref: "φ∘τ_t = ν^{-t}φ; ψ∘τ_t = ν^{-t}ψ",
            evaluator: rel_2_7,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.8",
            description: "the three automorphism groups mutually commute",
            paper_ref: "σ, σ′, τ pairwise commute",
            evaluator: rel_2_8,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.9",
            description: "each invariant functional is relatively invariant under the other modular group",
            paper_ref: "ψ∘σ_t = ν^{-t}ψ; φ∘σ′_t = ν^{t}φ",
            evaluator: rel_2_9,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.10",
            description: "the coproduct intertwines the scaling group with the two modular groups",
            paper_ref: "Δ(τ_t(x)) = (σ_t⊗σ′_{-t})Δ(x)",
            evaluator: rel_2_10,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-2.11",
            description: "the modular element links the invariant pair and transforms by the scaling constant",
            paper_ref: "ψ = φ(δ^{1/2}·δ^{1/2}); σ_t(δ) = ν^tδ; τ_t(δ) = δ; R(δ) = δ⁻¹; σ′_t(x) = δ^{it}σ_t(x)δ^{-it}",
            evaluator: rel_2_11,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-3.3",
            description: "the algebra and its dual sit in general position on the GNS space",
            paper_ref: "M ∩ M̂ = ℂ1; M ∩ M̂′ = ℂ1",
            evaluator: rel_3_3,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.7",
            description: "the dual cyclic map evaluates vector functionals through the commutant action",
            paper_ref: "Λ̂((⟨·ξ,η⟩⊗ι)W) = π′(η)*ξ",
            evaluator: rel_3_7,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.8",
            description: "the dual cyclic map is a left module map",
            paper_ref: "Λ̂(y₁y) = y₁Λ̂(y)",
            evaluator: rel_3_8,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.11",
            description: "the dual involution pairs with the antipode across the duality",
            paper_ref: "⟨Λ̂(y*), Λ_φ(a)⟩ = ⟨Λ̂(y), Λ_φ(S(a*))⟩⁻",
            evaluator: rel_3_11,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.13",
            description: "the dual invariant functional is faithful and consistent with the dual cyclic map",
            paper_ref: "φ̂(y*y) = ⟨Λ̂(y), Λ̂(y)⟩",
            evaluator: rel_3_13,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.14",
            description: "the dual left regular representation is the flipped conjugate of W and implements the dual coproduct",
            paper_ref: "Ŵ = ΣW*Σ; ((ω⊗ι)Ŵ*)Λ_φ̂(y) = Λ_φ̂((ω⊗ι)Δ̂(y))",
            evaluator: rel_3_14,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.15",
            description: "the dual invariant pair is invariant for the dual coproduct",
            paper_ref: "φ̂((ω⊗ι)Δ̂(y*y)) = ω(1)φ̂(y*y)",
            evaluator: rel_3_15,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.16",
            description: "conjugation by the modular involution is an involutive anti-automorphism flipping the dual coproduct",
            paper_ref: "R̂(y) = Jy*J; Δ̂(R̂(y)) = χ(R̂⊗R̂)Δ̂(y)",
            evaluator: rel_3_16,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-3.18",
            description: "applying the duality twice returns the original pair",
            paper_ref: "the dual of (M̂, Δ̂) is (M, Δ)",
            evaluator: rel_3_18,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.2",
            description: "the three named unitary groups satisfy their defining relations on both cyclic maps",
            paper_ref: "u_tΛ_φ(x) = Λ_φ(σ_t(x)); v_tΛ_φ(x) = ν^{t/2}Λ_φ(τ_t(x)); w_tΛ_φ(x) = ν^{-t/2}Λ_φ(σ′_t(x)); w_tΛ_ψ(x) = Λ_ψ(σ′_t(x))",
            evaluator: rel_4_2,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.3",
            description: "the right modular operator factors through the modular element",
            paper_ref: "∇′^{it} = δ^{it}(Jδ^{it}J)∇^{it}",
            evaluator: rel_4_3,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.4",
            description: "the named unitary groups mutually commute, commute with J, and implement the automorphism groups",
            paper_ref: "u_t, v_t, w_t mutually commute and commute with J; σ_t = u_t·u_t*; σ′_t = w_t·w_t*; τ_t = v_t·v_t*",
            evaluator: rel_4_4,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.5",
            description: "the dual modular involution and operator satisfy their defining assignments on the primal cyclic map",
            paper_ref: "ĴΛ_φ(x) = Λ_φ(R(x)*δ^{1/2}); ∇̂^{it}Λ_φ(x) = Λ_φ(τ_t(x)δ^{-it})",
            evaluator: rel_4_5,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.6",
            description: "the dual modular operator factors through the modular element and P",
            paper_ref: "∇̂^{it} = (Jδ^{it}J)P^{it}",
            evaluator: rel_4_6,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.7",
            description: "the dual modular data implements the unitary antipode and the scaling group",
            paper_ref: "R(x) = Ĵx*Ĵ; τ_t(x) = ∇̂^{it}x∇̂^{-it}",
            evaluator: rel_4_7,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.8",
            description: "conjugating the modular group by the dual involution reverses it into the right modular group",
            paper_ref: "∇′^{it} = Ĵ∇^{-it}Ĵ",
            evaluator: rel_4_8,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.9",
            description: "the right regular representation is the Ĵ-twist of the flipped conjugate of W",
            paper_ref: "V = (Ĵ⊗Ĵ)ΣW*Σ(Ĵ⊗Ĵ)",
            evaluator: rel_4_9,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.11",
            description: "the dual involution operator has the predicted polar decomposition, built by an independent route",
            paper_ref: "T̂: Λ̂(y) ↦ Λ̂(y*) has polar decomposition T̂ = Ĵ∇̂^{1/2}",
            evaluator: rel_4_11,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.12",
            description: "the dual unitary antipode is conjugation by J; the dual scaling group is implemented by ∇",
            paper_ref: "R̂(y) = Jy*J; τ̂_t(y) = ∇^{it}y∇^{-it}",
            evaluator: rel_4_12,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.13",
            description: "P acts on the dual cyclic map through the dual scaling group; the dual scaling constant is the reciprocal",
            paper_ref: "P^{it}Λ̂(y) = ν^{-t/2}Λ̂(τ̂_t(y)); ν̂ = ν⁻¹",
            evaluator: rel_4_13,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.14",
            description: "the four conjugation rules moving automorphism groups through the first leg of W",
            paper_ref: "(τ_t⊗ι)W = (1⊗u_t*)W(1⊗u_t) = (1⊗v_t*)W(1⊗v_t); (σ′_t⊗ι)W = (1⊗w_t*)W(1⊗v_t*); (σ_t⊗ι)W = (1⊗v_t*)W(1⊗w_t*)",
            evaluator: rel_4_14,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.15",
            description: "the dual modular element is assembled from the named unitary groups and is group-like",
            paper_ref: "δ̂^{it} = v_t*w_t*; Δ̂(δ̂^{it}) = δ̂^{it}⊗δ̂^{it}",
            evaluator: rel_4_15,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.17",
            description: "all four modular operators factor through P and the two modular elements",
            paper_ref: "∇^{it} = (Ĵδ̂^{it}Ĵ)P^{it}; ∇̂^{it} = (Jδ^{it}J)P^{it}; ∇′^{it} = δ̂^{-it}P^{-it}; ∇̂′^{it} = δ^{-it}P^{-it}",
            evaluator: rel_4_17,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.18",
            description: "conjugating a modular operator by the other side's involution factors through both modular elements",
            paper_ref: "Ĵ∇^{-it}Ĵ = δ^{it}(Jδ^{it}J)∇^{it}; J∇̂^{-it}J = δ̂^{it}(Ĵδ̂^{it}Ĵ)∇̂^{it}",
            evaluator: rel_4_18,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-4.19",
            description: "the two modular elements satisfy a Weyl-type commutation law; the two involutions commute up to a phase",
            paper_ref: "δ̂^{is}δ^{it} = ν^{-ist}δ^{it}δ̂^{is}; ĴJ = ν^{i/4}JĴ",
            evaluator: rel_4_19,
            expected: AlwaysHolds,
        },
        RelationCatalogEntry {
            id: "REL-4.20",
            description: "the square of P factors through both modular elements and their conjugates",
            paper_ref: "P^{-2it} = δ^{it}(Jδ^{it}J)δ̂^{it}(Ĵδ̂^{it}Ĵ)",
            evaluator: rel_4_20,
            expected: EmergentTrivial,
        },
        RelationCatalogEntry {
            id: "REL-R4.10",
            description: "the antilinear K and its polar parts coincide with the dual modular data",
            paper_ref: "K = Ĵ∇̂^{1/2}; I = Ĵ; L = ∇̂",
            evaluator: rel_r4_10,
            expected: AlwaysHolds,
        },
    ];
    CATALOG
}

/// Evaluate the catalog (or a selection of ids) on built data. Entries run
/// in parallel; the report is assembled in lexicographic id order, so equal
/// inputs produce byte-identical JSON.
pub fn run_suite(
    qg: &QuantumGroup,
    example: &str,
    ids: Option<&[String]>,
) -> Result<VerificationReport, UnknownRelation> {
    let all = catalog();
    let selected: Vec<&RelationCatalogEntry> = match ids {
        None => all.iter().collect(),
        Some(list) => {
            let mut sel = Vec::with_capacity(list.len());
            for id in list {
                match all.iter().find(|e| e.id == id) {
                    Some(e) => sel.push(e),
                    None => return Err(UnknownRelation(id.clone())),
                }
            }
            sel
        }
    };
    let cx = SuiteCtx::new(qg);
    let mut entries: Vec<ReportEntry> = selected
        .par_iter()
        .map(|entry| {
            let (residual, note) = (entry.evaluator)(&cx);
            ReportEntry {
                id: entry.id.to_string(),
                paper_ref: entry.paper_ref.to_string(),
                residual,
                pass: residual.is_finite() && residual <= qg.tol,
                note,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(VerificationReport {
        example: example.to_string(),
        tol: qg.tol,
        t_samples: T_GRID.to_vec(),
        entries,
    })
}

/// A one-parameter unitary group `t ↦ G^{it}` of a positive generator.
pub struct OneParamGroup {
    gen: CMat,
}

impl OneParamGroup {
    pub fn at(&self, t: f64) -> CMat {
        herm_upower(&self.gen, t)
    }

    /// The positive operator being exponentiated.
    pub fn generator(&self) -> &CMat {
        &self.gen
    }
}

/// The named unitary groups `(u, v, w)` on the GNS space together with the
/// positive operator `P`: `u_t = ∇^{it}`, `v_t = P^{it}`, `w_t = ∇′^{it}`.
pub fn unitary_groups(qg: &QuantumGroup) -> (OneParamGroup, OneParamGroup, OneParamGroup, CMat) {
    (
        OneParamGroup { gen: qg.modular.nabla.clone() },
        OneParamGroup { gen: qg.scaling.p_mat.clone() },
        OneParamGroup { gen: qg.modular_psi.nabla.clone() },
        qg.scaling.p_mat.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use std::collections::HashSet;

    fn qg(name: &str) -> QuantumGroup {
        let (alg, cop) = examples::build(name).unwrap();
        QuantumGroup::build(alg, cop, 1e-9).expect("specimen must build")
    }

    #[test]
    fn catalog_ids_are_unique_and_cover_the_mandated_families() {
        let all = catalog();
        let ids: HashSet<&str> = all.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), all.len(), "duplicate catalog id");
        for required in [
            "REL-2.3i", "REL-2.3ii", "REL-2.3iii", "REL-2.6i", "REL-2.6ii", "REL-2.7",
            "REL-2.8", "REL-2.9", "REL-2.10", "REL-2.11", "REL-4.3", "REL-4.4", "REL-4.5",
            "REL-4.6", "REL-4.7", "REL-4.8", "REL-4.9", "REL-4.11", "REL-4.12", "REL-4.13",
            "REL-4.14", "REL-4.15", "REL-4.17", "REL-4.18", "REL-4.19", "REL-4.20",
            "REL-R4.10",
        ] {
            assert!(ids.contains(required), "missing {required}");
        }
        assert_eq!(
            all.iter().find(|e| e.id == "REL-4.9").unwrap().expected,
            Expected::AlwaysHolds
        );
        assert_eq!(
            all.iter().find(|e| e.id == "REL-2.7").unwrap().expected,
            Expected::EmergentTrivial
        );
    }

    #[test]
    fn report_is_deterministic_and_sorted_by_id() {
        let g = qg("z3_function");
        let r1 = run_suite(&g, "z3_function", None).unwrap();
        let r2 = run_suite(&g, "z3_function", None).unwrap();
        assert_eq!(r1.to_json(), r2.to_json());
        let ids: Vec<&str> = r1.entries.iter().map(|e| e.id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert_eq!(r1.t_samples, T_GRID.to_vec());
        assert_eq!(r1.entries.len(), catalog().len());
    }

    #[test]
    fn full_suite_passes_on_small_specimens() {
        for name in ["z2_function", "z4_group", "s3_function", "s3_group"] {
            let g = qg(name);
            let report = run_suite(&g, name, None).unwrap();
            for e in &report.entries {
                assert!(
                    e.pass,
                    "{} failed on {}: residual {:.3e} ({})",
                    e.id, name, e.residual, e.note
                );
            }
        }
    }

    #[test]
    fn trivial_specimen_is_exact_to_machine_precision() {
        let g = qg("trivial");
        let report = run_suite(&g, "trivial", None).unwrap();
        for e in &report.entries {
            assert!(
                e.residual <= 1e-12,
                "{} residual {:.3e} exceeds machine scale",
                e.id,
                e.residual
            );
        }
    }

    #[test]
    fn unknown_id_is_rejected() {
        let g = qg("z2_function");
        let err = run_suite(&g, "z2_function", Some(&["REL-0.0".to_string()])).unwrap_err();
        assert!(err.to_string().contains("REL-0.0"));
    }

    #[test]
    fn subset_selection_runs_exactly_the_requested_entries() {
        let g = qg("z2_function");
        let ids = vec!["REL-4.9".to_string(), "REL-2.8".to_string()];
        let report = run_suite(&g, "z2_function", Some(&ids)).unwrap();
        let got: Vec<&str> = report.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(got, vec!["REL-2.8", "REL-4.9"]);
    }

    #[test]
    fn unitary_groups_satisfy_their_defining_relations() {
        let g = qg("s3_group");
        let (u, v, w, p) = unitary_groups(&g);
        let nu = g.modular_element.nu;
        assert_eq!(p, g.scaling.p_mat);
        for &t in T_GRID.iter() {
            let (sig, _) = g.sigma_map(t);
            let (sigp, _) = g.sigma_prime_map(t);
            let (tau, _) = g.tau_map(t);
            assert!(resid(&(u.at(t) * &g.gns.lambda), &(&g.gns.lambda * sig)) < 1e-9);
            assert!(
                resid(
                    &(v.at(t) * &g.gns.lambda),
                    &(&g.gns.lambda * tau * cr(nu.powf(t / 2.0)))
                ) < 1e-9
            );
            // w is the right-weight modular group: no prefactor on Λ_ψ.
            assert!(resid(&(w.at(t) * &g.lambda_psi), &(&g.lambda_psi * sigp)) < 1e-9);
        }
    }
}
