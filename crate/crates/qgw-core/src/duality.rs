//! The dual quantum group realized on the same GNS space: the span of
//! first-leg slices of the left regular unitary, its algebra structure,
//! the dual GNS map, invariant functional, coproduct, and the bidual.

use thiserror::Error;

use crate::algebra::{AlgebraSpec, Functional};
use crate::gns::{tomita, GnsData, ModularData};
use crate::linalg::{
    self, eye, flip_conj, lstsq, lstsq_vec, max_abs, rank, resid, vec_of, CMat, CVec,
};
use crate::quantum_group::{
    build_regular_reps, invariance_resids, solve_modular_element, Coproduct, HaarPair,
};

#[derive(Debug, Error)]
pub enum DualityError {
    #[error("dual slice span is not closed under {what} (residual {resid:.3e})")]
    SliceSpanNotClosed { what: String, resid: f64 },
    #[error("dual algebra has dimension {found}, expected {expected}")]
    WrongDimension { found: usize, expected: usize },
    #[error("dual structure rebuild failed: {0}")]
    DualStructure(String),
}

/// The dual quantum group acting on the original GNS space.
pub struct DualData {
    /// Basis operators `Y_i`, a maximal independent family of slices.
    pub basis_ops: Vec<CMat>,
    /// Which slice index `l·h + k` each basis operator came from.
    pub pivots: Vec<usize>,
    /// Structure constants of the dual algebra over `Y_i`.
    pub alg: AlgebraSpec,
    /// Dual coproduct `Δ̂(y) = Σ W (y⊗1) W* Σ` in `Y⊗Y` coordinates.
    pub cop: Coproduct,
    /// Dual GNS map: column `i` is `Λ̂(Y_i)`.
    pub xi: CMat,
    pub phi_hat: Functional,
    pub psi_hat: Functional,
    /// Dual GNS package over `(φ̂, Λ̂, Y)`.
    pub gns: GnsData,
    /// Modular data of the dual from `Λ̂(y) ↦ Λ̂(y*)`.
    pub modular: ModularData,
    /// `Σ W* Σ`.
    pub w_hat: CMat,
    /// Coefficient map of `R̂(y) = J y* J` on dual coordinates.
    pub r_hat_map: CMat,
    /// Worst least-squares residual among all span decompositions.
    pub structure_resid: f64,
    /// `‖Ξ†Ξ − Ĝ‖` between the dual GNS map and the dual gram matrix.
    pub gram_consistency: f64,
}

/// All `h²` first-leg slices `(ω_{E_lk}⊗ι)W`, enumerated as `l·h + k`.
pub fn first_leg_slices(w: &CMat, h: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(h * h);
    for l in 0..h {
        for k in 0..h {
            out.push(CMat::from_fn(h, h, |u, v| w[(k * h + u, l * h + v)]));
        }
    }
    out
}

fn stack(ops: &[CMat]) -> CMat {
    let hh = ops[0].nrows() * ops[0].ncols();
    let mut m = CMat::zeros(hh, ops.len());
    for (i, op) in ops.iter().enumerate() {
        m.column_mut(i).copy_from(&vec_of(op));
    }
    m
}

/// Build the dual quantum group from the left regular unitary. `modular`
/// is the Tomita data of the primal invariant functional (its conjugation
/// enters through `ψ̂ = φ̂ ∘ R̂`).
pub fn build_dual(
    alg: &AlgebraSpec,
    gns: &GnsData,
    modular: &ModularData,
    w: &CMat,
) -> Result<DualData, DualityError> {
    let n = alg.dim();
    let h = gns.hilbert_dim();
    let slices = first_leg_slices(w, h);
    let cols: Vec<CVec> = slices.iter().map(vec_of).collect();
    let (pivots, _) = linalg::pivoted_orth(&cols, 1e-10);
    let m = pivots.len();
    if m != n {
        return Err(DualityError::WrongDimension { found: m, expected: n });
    }
    let basis_ops: Vec<CMat> = pivots.iter().map(|&p| slices[p].clone()).collect();
    let span = stack(&basis_ops);
    let scale = max_abs(&span).max(1.0);
    let mut structure_resid: f64 = 0.0;

    // Closure under products, adjoints, and the identity.
    let mut prod_rhs = CMat::zeros(h * h, m * m);
    for i in 0..m {
        for j in 0..m {
            prod_rhs
                .column_mut(i * m + j)
                .copy_from(&vec_of(&(&basis_ops[i] * &basis_ops[j])));
        }
    }
    let (prod_coords, r_prod) = lstsq(&span, &prod_rhs);
    if r_prod > 1e-8 * scale {
        return Err(DualityError::SliceSpanNotClosed { what: "products".into(), resid: r_prod });
    }
    structure_resid = structure_resid.max(r_prod);

    let star_rhs = stack(&basis_ops.iter().map(|y| y.adjoint()).collect::<Vec<_>>());
    let (star_coords, r_star) = lstsq(&span, &star_rhs);
    if r_star > 1e-8 * scale {
        return Err(DualityError::SliceSpanNotClosed { what: "adjoints".into(), resid: r_star });
    }
    structure_resid = structure_resid.max(r_star);

    let (unit_coords, r_unit) = lstsq_vec(&span, &vec_of(&eye(h)));
    if r_unit > 1e-8 * scale {
        return Err(DualityError::SliceSpanNotClosed { what: "the unit".into(), resid: r_unit });
    }
    structure_resid = structure_resid.max(r_unit);

    let mult: Vec<CMat> = (0..m)
        .map(|k| CMat::from_fn(m, m, |i, j| prod_coords[(k, i * m + j)]))
        .collect();
    // The star is antilinear: its coordinate matrix must conjugate inputs,
    // and on basis vectors that is exactly the coordinate array above.
    let labels = (0..m).map(|i| format!("Y{i}")).collect();
    let dual_alg = AlgebraSpec::new(labels, mult, star_coords.clone(), unit_coords)
        .map_err(|e| DualityError::DualStructure(e.to_string()))?;

    // Λ̂: for y = (ω_F⊗ι)W, the vector Λ̂(y) satisfies
    // ⟨Λ_φ(e_j), Λ̂(y)⟩ = ω_F(π(e_j*)); solve for a consistent F first.
    let slice_map = stack(&slices); // maps vec(F) row-major to vec(y)
    let star_reps: Vec<CMat> = (0..n)
        .map(|j| gns.pi(&alg.star_of(&alg.basis(j))))
        .collect();
    let lam_inv_adj = gns.lambda_inv.adjoint();
    let mut xi = CMat::zeros(h, m);
    for (i, y) in basis_ops.iter().enumerate() {
        let (f_vec, r_f) = lstsq_vec(&slice_map, &vec_of(y));
        structure_resid = structure_resid.max(r_f);
        let f = CMat::from_fn(h, h, |a, b| f_vec[a * h + b]);
        let b = CVec::from_fn(n, |j, _| (&f * &star_reps[j]).trace());
        xi.column_mut(i).copy_from(&(&lam_inv_adj * b));
    }

    // φ̂ from the GNS inner products ⟨Λ̂(Y_i), Λ̂(Y_j)⟩ = φ̂(Y_i* Y_j).
    let mut sys = CMat::zeros(m * m, m);
    let mut rhs = CVec::zeros(m * m);
    for i in 0..m {
        let star_i = star_coords.column(i).clone_owned();
        for j in 0..m {
            let prod = dual_alg
                .multiply(&star_i, &dual_alg.basis(j))
                .expect("dual basis dims agree");
            sys.row_mut(i * m + j).tr_copy_from(&prod);
            rhs[i * m + j] = xi.column(i).dotc(&xi.column(j));
        }
    }
    let (phi_hat_vec, r_phi) = lstsq_vec(&sys, &rhs);
    structure_resid = structure_resid.max(r_phi);
    let phi_hat = Functional(phi_hat_vec);

    // R̂(y) = J y* J and ψ̂ = φ̂ ∘ R̂.
    let r_hat_ops: Vec<CMat> = basis_ops
        .iter()
        .map(|y| modular.j.sandwich(&y.adjoint()))
        .collect();
    let (r_hat_map, r_rhat) = lstsq(&span, &stack(&r_hat_ops));
    structure_resid = structure_resid.max(r_rhat);
    let psi_hat = Functional(r_hat_map.transpose() * &phi_hat.0);

    let gram_hat = phi_hat.gram(&dual_alg);
    let gram_consistency = resid(&(xi.adjoint() * &xi), &gram_hat);
    let dual_gns = GnsData::from_lambda_rep(gram_hat, xi.clone(), basis_ops.clone());
    let dual_modular = tomita(&dual_alg, &dual_gns);

    // Δ̂(y) = Σ W (y⊗1) W* Σ, coordinates in the Y⊗Y basis.
    let pair_span = stack(
        &(0..m * m)
            .map(|ij| basis_ops[ij / m].kronecker(&basis_ops[ij % m]))
            .collect::<Vec<_>>(),
    );
    let id = eye(h);
    let mut cop_rhs = CMat::zeros(h * h * h * h, m);
    for i in 0..m {
        let moved = flip_conj(&(w * basis_ops[i].kronecker(&id) * w.adjoint()), h);
        cop_rhs.column_mut(i).copy_from(&vec_of(&moved));
    }
    let (dhat, r_cop) = lstsq(&pair_span, &cop_rhs);
    if r_cop > 1e-8 * scale {
        return Err(DualityError::SliceSpanNotClosed {
            what: "the dual coproduct".into(),
            resid: r_cop,
        });
    }
    structure_resid = structure_resid.max(r_cop);
    let cop_hat = Coproduct::new(dhat, m).map_err(|e| DualityError::DualStructure(e.to_string()))?;

    let w_hat = flip_conj(&w.adjoint(), h);

    Ok(DualData {
        basis_ops,
        pivots,
        alg: dual_alg,
        cop: cop_hat,
        xi,
        phi_hat,
        psi_hat,
        gns: dual_gns,
        modular: dual_modular,
        w_hat,
        r_hat_map,
        structure_resid,
        gram_consistency,
    })
}

impl DualData {
    /// `Λ̂` applied to a dual element given by coordinates.
    pub fn lambda_hat(&self, coords: &CVec) -> CVec {
        &self.xi * coords
    }

    /// Realize a dual element as an operator on the GNS space.
    pub fn op_of(&self, coords: &CVec) -> CMat {
        let h = self.basis_ops[0].nrows();
        let mut acc = CMat::zeros(h, h);
        for (i, y) in self.basis_ops.iter().enumerate() {
            acc += y * coords[i];
        }
        acc
    }
}

/// Outcome of applying the duality construction twice.
pub struct BidualityReport {
    /// Left regular unitary of the dual, built from dual data alone.
    pub w_dual: CMat,
    /// `‖Ŵ_built − ΣW*Σ‖`.
    pub w_hat_agreement: f64,
    /// Rank excess of the joint span of `π(M)` and the bidual slices.
    pub span_defect: usize,
    pub dim_match: bool,
    /// Residual of coproduct transport `Δ(t(z)) = (t⊗t)Δ̂̂(z)`.
    pub cop_resid: f64,
    /// Worst membership residual pulling bidual slices back into `M`.
    pub membership_resid: f64,
}

/// Build the dual of the dual and compare it with the original. The dual's
/// regular unitary is constructed from dual data alone, so the comparison
/// with `ΣW*Σ` is an independent route.
pub fn biduality(
    alg: &AlgebraSpec,
    cop: &Coproduct,
    gns: &GnsData,
    dual: &DualData,
    tol: f64,
) -> Result<BidualityReport, DualityError> {
    let n = alg.dim();
    let (li, ri) = invariance_resids(&dual.alg, &dual.cop, &dual.phi_hat, &dual.psi_hat);
    let dual_haar = HaarPair {
        phi: dual.phi_hat.clone(),
        psi: dual.psi_hat.clone(),
        left_nullity: 1,
        right_nullity: 1,
        invariance_resid: li.max(ri),
    };
    let (_, delta_sqrt, _, _, _) =
        solve_modular_element(&dual.alg, &dual_haar, &dual.gns, tol)
            .map_err(|e| DualityError::DualStructure(e.to_string()))?;
    let lambda_psi_hat = &dual.xi * dual.alg.right_mult_by(&delta_sqrt);
    let reps = build_regular_reps(&dual.alg, &dual.cop, &dual.gns, &lambda_psi_hat, tol)
        .map_err(|e| DualityError::DualStructure(e.to_string()))?;
    let w_hat_agreement = resid(&reps.w, &dual.w_hat);

    let dd = build_dual(&dual.alg, &dual.gns, &dual.modular, &reps.w)?;
    let dim_match = dd.alg.dim() == n;

    // Span comparison between π(M) and the bidual slice span.
    let rep_cols: Vec<CMat> = (0..n).map(|i| gns.rep[i].clone()).collect();
    let mut joint = Vec::with_capacity(n + dd.basis_ops.len());
    joint.extend(rep_cols.iter().cloned());
    joint.extend(dd.basis_ops.iter().cloned());
    let joint_rank = rank(&stack(&joint), 1e-10);
    let span_defect = joint_rank.saturating_sub(n);

    // Transport the bidual coproduct along membership pullback.
    let mut to_m = CMat::zeros(n, dd.alg.dim());
    let mut membership_resid: f64 = 0.0;
    for (j, z) in dd.basis_ops.iter().enumerate() {
        let (el, r) = gns.to_element(z);
        membership_resid = membership_resid.max(r);
        to_m.column_mut(j).copy_from(&el);
    }
    let cop_resid = resid(&(to_m.kronecker(&to_m) * dd.cop.mat()), &(cop.mat() * &to_m));

    Ok(BidualityReport {
        w_dual: reps.w,
        w_hat_agreement,
        span_defect,
        dim_match,
        cop_resid,
        membership_resid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_algebra;
    use crate::examples;
    use crate::gns::gns;
    use crate::linalg::cr;
    use crate::quantum_group::{solve_haar, validate_coproduct};

    pub(crate) fn setup(name: &str) -> (AlgebraSpec, Coproduct, GnsData, ModularData, CMat) {
        let (alg, cop) = examples::build(name).unwrap();
        let haar = solve_haar(&alg, &cop).unwrap();
        let g = gns(&alg, &haar.phi).unwrap();
        let modular = tomita(&alg, &g);
        let reps = build_regular_reps(&alg, &cop, &g, &g.lambda, 1e-9).unwrap();
        (alg, cop, g, modular, reps.w)
    }

    #[test]
    fn dual_of_function_algebra_is_the_group_algebra() {
        let gt = examples::s3();
        let n = gt.order;
        let (alg, cop, g, modular, w) = setup("s3_function");
        let dual = build_dual(&alg, &g, &modular, &w).unwrap();
        assert_eq!(dual.alg.dim(), n);
        let (ga, gcop) = examples::group_algebra(&gt);
        for k in 0..n {
            assert!(resid(&dual.alg.mult()[k], &ga.mult()[k]) < 1e-9, "mult[{k}]");
        }
        assert!(resid(dual.alg.star_mat(), ga.star_mat()) < 1e-9);
        assert!(resid(dual.cop.mat(), gcop.mat()) < 1e-9, "grouplike dual coproduct");
        // Λ̂(λ_g) = √n e_g and φ̂ = n·[k = identity].
        let root = (n as f64).sqrt();
        assert!(resid(&dual.xi, &(eye(n) * cr(root))) < 1e-9);
        assert!((dual.phi_hat.0[0] - cr(n as f64)).norm() < 1e-9);
        for k in 1..n {
            assert!(dual.phi_hat.0[k].norm() < 1e-9);
        }
        let _ = cop;
    }

    #[test]
    fn dual_of_group_algebra_is_the_function_algebra() {
        let gt = examples::s3();
        let n = gt.order;
        let (alg, _, g, modular, w) = setup("s3_group");
        let dual = build_dual(&alg, &g, &modular, &w).unwrap();
        assert_eq!(dual.alg.dim(), n);
        // Each dual basis operator is a diagonal matrix unit E_{p(k)}; the
        // labels p(k) form a permutation of the group elements, so the dual
        // is the function algebra up to this relabeling.
        let mut perm = vec![usize::MAX; n];
        for (k, y) in dual.basis_ops.iter().enumerate() {
            for d in 0..n {
                let mut want = CMat::zeros(n, n);
                want[(d, d)] = cr(1.0);
                if resid(y, &want) < 1e-9 {
                    perm[k] = d;
                    break;
                }
            }
            assert!(perm[k] < n, "basis op {k} is not a diagonal matrix unit");
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            seen[p] = true;
        }
        assert!(seen.iter().all(|&s| s), "relabeling must be a permutation");
        // Multiplication and star of a function algebra are invariant under
        // relabeling, so they compare entry for entry.
        let (fa, _) = examples::function_algebra(&gt);
        for k in 0..n {
            assert!(resid(&dual.alg.mult()[k], &fa.mult()[k]) < 1e-9, "mult[{k}]");
        }
        assert!(resid(dual.alg.star_mat(), fa.star_mat()) < 1e-9);
        // The coproduct sees the group law through the relabeling:
        // Δ̂(Y_k) = Σ Y_a ⊗ Y_b over pairs with g_{p(a)} g_{p(b)} = g_{p(k)}.
        let d = dual.cop.mat();
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let want = if gt.table[perm[a]][perm[b]] == perm[k] {
                        cr(1.0)
                    } else {
                        cr(0.0)
                    };
                    assert!(
                        (d[(a * n + b, k)] - want).norm() < 1e-9,
                        "cop entry ({a},{b};{k})"
                    );
                }
            }
        }
        let _ = alg;
    }

    #[test]
    fn dual_structures_validate_and_are_consistent() {
        for name in ["z4_function", "q8_group", "kac_paljutkin"] {
            let (alg, _, g, modular, w) = setup(name);
            let dual = build_dual(&alg, &g, &modular, &w).unwrap();
            assert!(
                validate_algebra(&dual.alg, 1e-8).is_empty(),
                "{name}: dual algebra axioms"
            );
            assert!(
                validate_coproduct(&dual.alg, &dual.cop, 1e-8).is_empty(),
                "{name}: dual coproduct axioms"
            );
            assert!(dual.structure_resid < 1e-9, "{name}: structure resid");
            assert!(dual.gram_consistency < 1e-9, "{name}: gram consistency");
            let (li, ri) = invariance_resids(&dual.alg, &dual.cop, &dual.phi_hat, &dual.psi_hat);
            let scale = linalg::max_abs_vec(&dual.phi_hat.0).max(1.0);
            assert!(li < 1e-9 * scale, "{name}: φ̂ not left invariant");
            assert!(ri < 1e-9 * scale, "{name}: ψ̂ not right invariant");
        }
    }

    #[test]
    fn biduality_recovers_the_original() {
        for name in ["z3_function", "s3_function", "q8_group", "kac_paljutkin"] {
            let (alg, cop, g, modular, w) = setup(name);
            let dual = build_dual(&alg, &g, &modular, &w).unwrap();
            let bd = biduality(&alg, &cop, &g, &dual, 1e-9).unwrap();
            assert!(bd.dim_match, "{name}: bidual dimension");
            assert_eq!(bd.span_defect, 0, "{name}: bidual span differs from π(M)");
            assert!(bd.w_hat_agreement < 1e-9, "{name}: Ŵ ≠ ΣW*Σ");
            assert!(bd.cop_resid < 1e-8, "{name}: bidual coproduct transport");
            assert!(bd.membership_resid < 1e-9, "{name}: bidual membership");
        }
    }

    #[test]
    fn gns_map_is_a_module_map_over_the_dual_algebra() {
        use rand::{Rng, SeedableRng};
        let (alg, _, g, modular, w) = setup("s3_function");
        let dual = build_dual(&alg, &g, &modular, &w).unwrap();
        let m = dual.alg.dim();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c1 = CVec::from_fn(m, |_, _| linalg::c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
            let c2 = CVec::from_fn(m, |_, _| linalg::c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
            let prod = dual.alg.multiply(&c1, &c2).unwrap();
            let lhs = dual.lambda_hat(&prod);
            let rhs = dual.op_of(&c1) * dual.lambda_hat(&c2);
            assert!(linalg::resid_vec(&lhs, &rhs) < 1e-9);
        }
    }

    #[test]
    fn vector_functionals_slice_to_commutant_actions() {
        use rand::{Rng, SeedableRng};
        let (alg, _, g, modular, w) = setup("s3_function");
        let dual = build_dual(&alg, &g, &modular, &w).unwrap();
        let h = g.hilbert_dim();
        let n = alg.dim();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let mut rand_vec = || CVec::from_fn(h, |_, _| linalg::c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5));
        let span = stack(&dual.basis_ops);
        for _ in 0..10 {
            let xi_v = rand_vec();
            let eta = rand_vec();
            // ω(T) = ⟨Tη, ξ⟩ = ξ†Tη = Tr(F T) with F = η ξ†.
            let f = &eta * xi_v.adjoint();
            let slices = first_leg_slices(&w, h);
            let mut y = CMat::zeros(h, h);
            for l in 0..h {
                for k in 0..h {
                    y += &slices[l * h + k] * f[(l, k)];
                }
            }
            let (coords, r) = lstsq_vec(&span, &vec_of(&y));
            assert!(r < 1e-9, "slice must lie in the dual span");
            let got = dual.lambda_hat(&coords);
            // π′(ξ): the commutant action Λ(x) ↦ π(x)ξ. For ω = ⟨·η, ξ⟩ the
            // GNS vector of the slice is Λ̂(y) = π′(ξ)*η.
            let mut stack_xi = CMat::zeros(h, n);
            for j in 0..n {
                stack_xi.column_mut(j).copy_from(&(&g.rep[j] * &xi_v));
            }
            let pi_prime_xi = &stack_xi * &g.lambda_inv;
            for r_i in 0..n {
                // π′(ξ) commutes with the representation.
                let lhs = &pi_prime_xi * &g.rep[r_i];
                let rhs = &g.rep[r_i] * &pi_prime_xi;
                assert!(resid(&lhs, &rhs) < 1e-9);
            }
            let want = pi_prime_xi.adjoint() * &eta;
            assert!(linalg::resid_vec(&got, &want) < 1e-8);
        }
    }
}
