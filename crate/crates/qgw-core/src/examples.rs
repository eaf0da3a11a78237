//! Specimen catalog: group tables, function and group algebras, matrix
//! algebras, an eight-dimensional quantum group that is neither commutative
//! nor cocommutative, and a deliberately invalid coproduct for negative
//! testing.

use thiserror::Error;

use crate::algebra::{self, AlgebraSpec};
use crate::linalg::{cr, CMat, CVec};
use crate::quantum_group::Coproduct;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
}

/// A finite group as a Cayley table; `table[i][j]` is the index of
/// `g_i g_j`, with the identity at index 0.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl GroupTable {
    pub fn from_table(
        name: &str,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotAGroup(format!(
                "table of {name} is not {n}×{n}"
            )));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotAGroup(format!(
                        "product at ({i},{j}) leaves the set"
                    )));
                }
            }
        }
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(GroupError::NotAGroup(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            if !(0..n).any(|j| table[i][j] == 0 && table[j][i] == 0) {
                return Err(GroupError::NotAGroup(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
        }
        Ok(Self { name: name.into(), order: n, table, labels })
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order)
            .find(|&j| self.table[i][j] == 0)
            .expect("validated group has inverses")
    }
}

pub fn cyclic(n: usize) -> GroupTable {
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable::from_table(&format!("z{n}"), labels, table).expect("cyclic group is a group")
}

/// Dihedral group of order `2n`, elements `r^a s^b` indexed as `b·n + a`.
pub fn dihedral(n: usize, name: &str) -> GroupTable {
    let order = 2 * n;
    let idx = |a: usize, b: usize| b * n + a;
    let mut labels = vec![String::new(); order];
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..n {
        for b in 0..2 {
            let r_part = match a {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r{a}"),
            };
            let s_part = if b == 1 { "s" } else { "" };
            let l = format!("{r_part}{s_part}");
            labels[idx(a, b)] = if l.is_empty() { "e".to_string() } else { l };
        }
    }
    for a in 0..n {
        for b in 0..2 {
            for c in 0..n {
                for d in 0..2 {
                    // (r^a s^b)(r^c s^d) = r^{a + c·(-1)^b} s^{b+d}.
                    let exp = if b == 0 { (a + c) % n } else { (a + n - c % n) % n };
                    table[idx(a, b)][idx(c, d)] = idx(exp, (b + d) % 2);
                }
            }
        }
    }
    GroupTable::from_table(name, labels, table).expect("dihedral group is a group")
}

pub fn s3() -> GroupTable {
    dihedral(3, "s3")
}

pub fn d4() -> GroupTable {
    dihedral(4, "d4")
}

/// Quaternion group, elements `±1, ±i, ±j, ±k` indexed as `2·axis + sign`.
pub fn q8() -> GroupTable {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // Axis products: (axis, axis) -> (sign, axis) for axes 1..=3 = i, j, k.
    let axis_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (0, x),
            (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0usize; 8]; 8];
    for a in 0..4 {
        for sa in 0..2 {
            for b in 0..4 {
                for sb in 0..2 {
                    let (s, ax) = axis_mul(a, b);
                    table[2 * a + sa][2 * b + sb] = 2 * ax + (s + sa + sb) % 2;
                }
            }
        }
    }
    GroupTable::from_table("q8", labels, table).expect("quaternion group is a group")
}

/// Full matrix algebra `M_n` over the matrix-unit basis `E_ij ↦ i·n + j`.
pub fn matrix_algebra(n: usize) -> AlgebraSpec {
    let d = n * n;
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{i}{j}")))
        .collect();
    let mut mult = vec![CMat::zeros(d, d); d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult[idx(i, l)][(idx(i, j), idx(j, l))] = cr(1.0);
            }
        }
    }
    let mut star = CMat::zeros(d, d);
    for i in 0..n {
        for j in 0..n {
            star[(idx(j, i), idx(i, j))] = cr(1.0);
        }
    }
    let mut unit = CVec::zeros(d);
    for i in 0..n {
        unit[idx(i, i)] = cr(1.0);
    }
    AlgebraSpec::new(labels, mult, star, unit).expect("matrix algebra dimensions are consistent")
}

/// Direct sum of algebras, basis blocks concatenated in order.
pub fn direct_sum(parts: &[AlgebraSpec]) -> AlgebraSpec {
    let dim: usize = parts.iter().map(|a| a.dim()).sum();
    let mut labels = Vec::with_capacity(dim);
    for (b, a) in parts.iter().enumerate() {
        for l in a.labels() {
            labels.push(format!("b{b}.{l}"));
        }
    }
    let mut mult = vec![CMat::zeros(dim, dim); dim];
    let mut star = CMat::zeros(dim, dim);
    let mut unit = CVec::zeros(dim);
    let mut off = 0;
    for a in parts {
        let n = a.dim();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    mult[off + k][(off + i, off + j)] = a.mult()[k][(i, j)];
                }
                star[(off + k, off + i)] = a.star_mat()[(k, i)];
            }
            unit[off + k] = a.unit()[k];
        }
        off += n;
    }
    AlgebraSpec::new(labels, mult, star, unit).expect("direct sum dimensions are consistent")
}

/// `C(G)`: functions on the group with the delta basis, coproduct dual to
/// the group law: `Δ(δ_g) = Σ_{rs=g} δ_r ⊗ δ_s`.
pub fn function_algebra(g: &GroupTable) -> (AlgebraSpec, Coproduct) {
    let n = g.order;
    let labels = g.labels.iter().map(|l| format!("d_{l}")).collect();
    let mut mult = vec![CMat::zeros(n, n); n];
    for k in 0..n {
        mult[k][(k, k)] = cr(1.0);
    }
    let star = crate::linalg::eye(n);
    let unit = CVec::from_element(n, cr(1.0));
    let alg = AlgebraSpec::new(labels, mult, star, unit).expect("function algebra dims");
    let mut d = CMat::zeros(n * n, n);
    for r in 0..n {
        for s in 0..n {
            d[(r * n + s, g.table[r][s])] = cr(1.0);
        }
    }
    (alg, Coproduct::new(d, n).expect("coproduct shape"))
}

/// `C[G]`: the group algebra with `λ_g λ_h = λ_{gh}`, `λ_g* = λ_{g⁻¹}`,
/// and grouplike coproduct `Δ(λ_g) = λ_g ⊗ λ_g`.
pub fn group_algebra(g: &GroupTable) -> (AlgebraSpec, Coproduct) {
    let n = g.order;
    let labels = g.labels.iter().map(|l| format!("l_{l}")).collect();
    let mut mult = vec![CMat::zeros(n, n); n];
    for i in 0..n {
        for j in 0..n {
            mult[g.table[i][j]][(i, j)] = cr(1.0);
        }
    }
    let mut star = CMat::zeros(n, n);
    for i in 0..n {
        star[(g.inverse(i), i)] = cr(1.0);
    }
    let mut unit = CVec::zeros(n);
    unit[0] = cr(1.0);
    let alg = AlgebraSpec::new(labels, mult, star, unit).expect("group algebra dims");
    let mut d = CMat::zeros(n * n, n);
    for i in 0..n {
        d[(i * n + i, i)] = cr(1.0);
    }
    (alg, Coproduct::new(d, n).expect("coproduct shape"))
}

/// The dim-1 quantum group.
pub fn trivial() -> (AlgebraSpec, Coproduct) {
    function_algebra(&cyclic(1))
}

/// The eight-dimensional quantum group that is neither commutative nor
/// cocommutative, generated from its standard presentation: unitary
/// generators x, y, z with
///
/// ```text
///   x² = y² = 1,   xy = yx,   zx = yz,   zy = xz,
///   z² = (1 + x + y − xy)/2,  z* = z⁻¹ = z³,
///   Δ(x) = x⊗x,   Δ(y) = y⊗y,
///   Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z).
/// ```
///
/// As a *-algebra it is C ⊕ C ⊕ C ⊕ C ⊕ M₂(C). The structure constants are
/// committed as generated data; the axiom checkers, Haar uniqueness, and the
/// relation suite are the acceptance gate for them.
pub fn kac_paljutkin() -> (AlgebraSpec, Coproduct) {
    let n = 8;
    // Monomial basis x^a y^b z^e at index a + 2b + 4e.
    let idx = |a: usize, b: usize, e: usize| (a % 2) + 2 * (b % 2) + 4 * e;
    let labels: Vec<String> = (0..n)
        .map(|k| {
            let mut s = String::new();
            if k & 1 == 1 {
                s.push('x');
            }
            if k & 2 == 2 {
                s.push('y');
            }
            if k & 4 == 4 {
                s.push('z');
            }
            if s.is_empty() {
                s.push('1');
            }
            s
        })
        .collect();
    // z² = (1 + x + y − xy)/2, a central element of the x,y subalgebra.
    let zsq = [(0usize, 0usize, 0.5), (1, 0, 0.5), (0, 1, 0.5), (1, 1, -0.5)];
    let mut mult = vec![CMat::zeros(n, n); n];
    for a1 in 0..2usize {
        for b1 in 0..2usize {
            for e1 in 0..2usize {
                for a2 in 0..2usize {
                    for b2 in 0..2usize {
                        for e2 in 0..2usize {
                            let i = idx(a1, b1, e1);
                            let j = idx(a2, b2, e2);
                            // Conjugation by z swaps x and y, so moving z^{e1}
                            // across x^{a2} y^{b2} swaps the exponents.
                            let (a2p, b2p) = if e1 == 1 { (b2, a2) } else { (a2, b2) };
                            let (a, b) = (a1 + a2p, b1 + b2p);
                            if e1 + e2 < 2 {
                                mult[idx(a, b, e1 + e2)][(i, j)] += cr(1.0);
                            } else {
                                for &(da, db, w) in &zsq {
                                    mult[idx(a + da, b + db, 0)][(i, j)] += cr(w);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // (x^a y^b)* = x^a y^b and (x^a y^b z)* = x^b y^a z·z², from z* = z³.
    let mut star = CMat::zeros(n, n);
    for a in 0..2usize {
        for b in 0..2usize {
            star[(idx(a, b, 0), idx(a, b, 0))] = cr(1.0);
            for &(da, db, w) in &zsq {
                star[(idx(b + da, a + db, 1), idx(a, b, 1))] += cr(w);
            }
        }
    }
    let mut unit = CVec::zeros(n);
    unit[0] = cr(1.0);
    let alg = AlgebraSpec::new(labels, mult, star, unit).expect("presentation dims");
    // Comultiplication: extend the generator images multiplicatively.
    let tt = algebra::tensor(&alg, &alg);
    let one = alg.unit().clone_owned();
    let bx = alg.basis(1);
    let by = alg.basis(2);
    let bz = alg.basis(4);
    let dx = bx.kronecker(&bx);
    let dy = by.kronecker(&by);
    let twist = (one.kronecker(&one) + one.kronecker(&bx) + by.kronecker(&one)
        - by.kronecker(&bx))
        * cr(0.5);
    let dz = tt.multiply(&twist, &bz.kronecker(&bz)).expect("dims");
    let mut d = CMat::zeros(n * n, n);
    for a in 0..2usize {
        for b in 0..2usize {
            for e in 0..2usize {
                let mut col = one.kronecker(&one);
                if a == 1 {
                    col = tt.multiply(&col, &dx).expect("dims");
                }
                if b == 1 {
                    col = tt.multiply(&col, &dy).expect("dims");
                }
                if e == 1 {
                    col = tt.multiply(&col, &dz).expect("dims");
                }
                d.column_mut(idx(a, b, e)).copy_from(&col);
            }
        }
    }
    (alg, Coproduct::new(d, n).expect("coproduct shape"))
}

/// Negative specimen: the function algebra of the semigroup `Z₂ × E` where
/// `E = {0, 1}` with product `x·y = y`. As an algebra it is the direct sum
/// of two copies of `C(Z₂)`; the coproduct satisfies every comultiplication
/// axiom but the semigroup has no inverses, so the invariant-functional
/// space is two-dimensional and the one-sided scalar kernel has dimension 2.
pub fn invalid_blocksum() -> (AlgebraSpec, Coproduct) {
    let n = 4;
    let idx = |a: usize, i: usize| a * 2 + i;
    let labels = (0..2)
        .flat_map(|a| (0..2).map(move |i| format!("d_{a}{i}")))
        .collect();
    let mut mult = vec![CMat::zeros(n, n); n];
    for k in 0..n {
        mult[k][(k, k)] = cr(1.0);
    }
    let star = crate::linalg::eye(n);
    let unit = CVec::from_element(n, cr(1.0));
    let alg = AlgebraSpec::new(labels, mult, star, unit).expect("dims");
    let mut d = CMat::zeros(n * n, n);
    for a in 0..2 {
        for i in 0..2 {
            for b in 0..2 {
                for j in 0..2 {
                    // (a,i)·(b,j) = (a+b, j).
                    let prod = idx((a + b) % 2, j);
                    d[(idx(a, i) * n + idx(b, j), prod)] = cr(1.0);
                }
            }
        }
    }
    (alg, Coproduct::new(d, n).expect("coproduct shape"))
}

/// Names of all shipped specimens, positive ones first.
pub fn catalog() -> Vec<&'static str> {
    vec![
        "trivial",
        "z2_function",
        "z3_function",
        "z4_function",
        "s3_function",
        "d4_function",
        "q8_function",
        "z2_group",
        "z3_group",
        "z4_group",
        "s3_group",
        "d4_group",
        "q8_group",
        "kac_paljutkin",
        "invalid_blocksum",
    ]
}

/// Look a specimen up by its catalog name.
pub fn build(name: &str) -> Option<(AlgebraSpec, Coproduct)> {
    let group = |name: &str| -> Option<GroupTable> {
        Some(match name {
            "z2" => cyclic(2),
            "z3" => cyclic(3),
            "z4" => cyclic(4),
            "s3" => s3(),
            "d4" => d4(),
            "q8" => q8(),
            _ => return None,
        })
    };
    if name == "trivial" {
        return Some(trivial());
    }
    if name == "kac_paljutkin" {
        return Some(kac_paljutkin());
    }
    if name == "invalid_blocksum" {
        return Some(invalid_blocksum());
    }
    if let Some(g) = name.strip_suffix("_function").and_then(group) {
        return Some(function_algebra(&g));
    }
    if let Some(g) = name.strip_suffix("_group").and_then(group) {
        return Some(group_algebra(&g));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_algebra;
    use crate::linalg::{self, resid};
    use crate::quantum_group::{solve_haar, validate_coproduct};

    #[test]
    fn group_constructors_validate() {
        for g in [cyclic(1), cyclic(2), cyclic(5), s3(), d4(), q8()] {
            assert_eq!(g.table[0][1 % g.order], 1 % g.order);
            for i in 0..g.order {
                let inv = g.inverse(i);
                assert_eq!(g.table[i][inv], 0);
            }
        }
    }

    #[test]
    fn broken_tables_are_rejected() {
        // Non-associative magma: tweak one entry of Z₃.
        let mut t = cyclic(3).table;
        t[1][1] = 1;
        let labels = vec!["e".into(), "a".into(), "b".into()];
        match GroupTable::from_table("bad", labels.clone(), t) {
            Err(GroupError::NotAGroup(msg)) => {
                assert!(msg.contains("associativity") || msg.contains("identity"))
            }
            Ok(_) => panic!("non-associative table accepted"),
        }
        // Right-zero semigroup: has no identity.
        let t = vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(GroupTable::from_table("bad", labels, t).is_err());
    }

    #[test]
    fn q8_relations() {
        let g = q8();
        let (i, j, k, minus) = (2, 4, 6, 1);
        assert_eq!(g.table[i][i], minus);
        assert_eq!(g.table[j][j], minus);
        assert_eq!(g.table[i][j], k);
        assert_eq!(g.table[j][i], g.table[minus][k]);
    }

    #[test]
    fn all_builders_pass_the_axiom_checkers() {
        for name in catalog() {
            let (alg, cop) = build(name).unwrap();
            assert!(
                validate_algebra(&alg, 1e-10).is_empty(),
                "{name}: algebra axioms fail"
            );
            assert!(
                validate_coproduct(&alg, &cop, 1e-10).is_empty(),
                "{name}: coproduct axioms fail"
            );
        }
    }

    #[test]
    fn matrix_algebra_against_direct_product_oracle() {
        let m3 = matrix_algebra(3);
        assert!(validate_algebra(&m3, 1e-12).is_empty());
        assert_eq!(m3.center_dim(), 1);
        let sum = direct_sum(&[matrix_algebra(2), matrix_algebra(3)]);
        assert!(validate_algebra(&sum, 1e-12).is_empty());
        assert_eq!(sum.dim(), 13);
        assert_eq!(sum.center_dim(), 2);
    }

    #[test]
    fn dim8_specimen_is_neither_commutative_nor_cocommutative() {
        let (alg, cop) = kac_paljutkin();
        assert_eq!(alg.dim(), 8);
        assert!(!alg.is_commutative(1e-10), "must be noncommutative");
        assert_eq!(alg.center_dim(), 5, "center must be C⁴ ⊕ (center of M₂)");
        let flipped = cop.flip();
        assert!(
            resid(cop.mat(), flipped.mat()) > 0.1,
            "must be noncocommutative"
        );
        let haar = solve_haar(&alg, &cop).unwrap();
        assert_eq!((haar.left_nullity, haar.right_nullity), (1, 1));
        // The Haar state is the coefficient of the identity monomial.
        assert!((haar.phi.0[0] - linalg::cr(1.0)).norm() < 1e-10);
        for i in 1..8 {
            assert!(haar.phi.0[i].norm() < 1e-10);
        }
        assert!(linalg::resid_vec(&haar.phi.0, &haar.psi.0) < 1e-10);
    }

    #[test]
    fn dim8_presentation_relations_hold() {
        let (alg, cop) = kac_paljutkin();
        let (x, y, z) = (alg.basis(1), alg.basis(2), alg.basis(4));
        let one = alg.unit().clone_owned();
        let mul = |a: &CVec, b: &CVec| alg.multiply(a, b).unwrap();
        // x² = y² = 1, xy = yx, zx = yz, zy = xz.
        assert!(linalg::resid_vec(&mul(&x, &x), &one) < 1e-12);
        assert!(linalg::resid_vec(&mul(&y, &y), &one) < 1e-12);
        assert!(linalg::resid_vec(&mul(&x, &y), &mul(&y, &x)) < 1e-12);
        assert!(linalg::resid_vec(&mul(&z, &x), &mul(&y, &z)) < 1e-12);
        assert!(linalg::resid_vec(&mul(&z, &y), &mul(&x, &z)) < 1e-12);
        // z² = (1 + x + y − xy)/2 and z is unitary: z z* = z* z = 1.
        let want = (&one + &x + &y - mul(&x, &y)) * cr(0.5);
        assert!(linalg::resid_vec(&mul(&z, &z), &want) < 1e-12);
        let z_star = alg.star_of(&z);
        assert!(linalg::resid_vec(&mul(&z, &z_star), &one) < 1e-12);
        assert!(linalg::resid_vec(&mul(&z_star, &z), &one) < 1e-12);
        // Δ(z) is unitary in the tensor algebra and Δ(1) = 1⊗1.
        let tt = algebra::tensor(&alg, &alg);
        let dz = cop.apply(&z);
        let dz_star = tt.star_of(&dz);
        let tt_one = tt.unit().clone_owned();
        assert!(
            linalg::resid_vec(&tt.multiply(&dz, &dz_star).unwrap(), &tt_one) < 1e-12
        );
        assert!(linalg::resid_vec(&cop.apply(&one), &tt_one) < 1e-12);
    }

    #[test]
    fn registry_is_total_over_its_catalog() {
        for name in catalog() {
            assert!(build(name).is_some(), "{name} missing from registry");
        }
        assert!(build("nope").is_none());
        assert!(build("z5_function").is_none());
    }
}
