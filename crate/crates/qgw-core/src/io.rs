//! JSON serialization of algebras and coproducts.
//!
//! The on-disk format stores complex scalars as `[re, im]` pairs, the
//! structure constants as `mult[k][i][j]`, and the coproduct as a
//! `dim² × dim` matrix whose rows enumerate tensor pairs `(p, q)`
//! column-major, i.e. row `p + q·dim`. Internally tensor coordinates are
//! Kronecker-ordered (`p·dim + q`), so load/save convert between the two.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::linalg::{c, CMat, CVec, C};
use crate::quantum_group::{Coproduct, CoproductError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed input: {0}")]
    Shape(String),
    #[error("algebra data rejected: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("coproduct data rejected: {0}")]
    Coproduct(#[from] CoproductError),
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<[f64; 2]>>>,
    star: Vec<Vec<[f64; 2]>>,
    unit: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coproduct: Option<Vec<Vec<[f64; 2]>>>,
}

fn pack(z: C) -> [f64; 2] {
    [z.re, z.im]
}

fn pack_mat(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| pack(m[(i, j)])).collect())
        .collect()
}

fn unpack_mat(rows: &[Vec<[f64; 2]>], nr: usize, nc: usize, what: &str) -> Result<CMat, IoError> {
    if rows.len() != nr || rows.iter().any(|r| r.len() != nc) {
        return Err(IoError::Shape(format!("{what} must be {nr}×{nc}")));
    }
    Ok(CMat::from_fn(nr, nc, |i, j| {
        c(rows[i][j][0], rows[i][j][1])
    }))
}

/// Serialize an algebra (and optional coproduct) to pretty-printed JSON.
pub fn algebra_to_json(alg: &AlgebraSpec, cop: Option<&Coproduct>) -> String {
    let n = alg.dim();
    let file = AlgebraFile {
        dim: n,
        labels: alg.labels().to_vec(),
        mult: alg.mult().iter().map(pack_mat).collect(),
        star: pack_mat(alg.star_mat()),
        unit: alg.unit().iter().map(|&z| pack(z)).collect(),
        coproduct: cop.map(|d| {
            // Reorder rows from internal p·n + q to external p + q·n.
            let m = d.mat();
            (0..n * n)
                .map(|ext| {
                    let (p, q) = (ext % n, ext / n);
                    (0..n).map(|k| pack(m[(p * n + q, k)])).collect()
                })
                .collect()
        }),
    };
    serde_json::to_string_pretty(&file).expect("serializable structure")
}

/// Parse an algebra (and optional coproduct) from JSON text.
pub fn algebra_from_json(text: &str) -> Result<(AlgebraSpec, Option<Coproduct>), IoError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let n = file.dim;
    if file.labels.len() != n {
        return Err(IoError::Shape(format!("expected {n} labels")));
    }
    if file.mult.len() != n {
        return Err(IoError::Shape(format!("expected {n} structure matrices")));
    }
    let mult = file
        .mult
        .iter()
        .enumerate()
        .map(|(k, m)| unpack_mat(m, n, n, &format!("mult[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let star = unpack_mat(&file.star, n, n, "star")?;
    if file.unit.len() != n {
        return Err(IoError::Shape(format!("unit must have length {n}")));
    }
    let unit = CVec::from_fn(n, |i, _| c(file.unit[i][0], file.unit[i][1]));
    let alg = AlgebraSpec::new(file.labels, mult, star, unit)?;
    let cop = match file.coproduct {
        None => None,
        Some(rows) => {
            let ext = unpack_mat(&rows, n * n, n, "coproduct")?;
            let mut internal = CMat::zeros(n * n, n);
            for p in 0..n {
                for q in 0..n {
                    for k in 0..n {
                        internal[(p * n + q, k)] = ext[(p + q * n, k)];
                    }
                }
            }
            Some(Coproduct::new(internal, n)?)
        }
    };
    Ok((alg, cop))
}
