use std::fmt;

use super::{LieAlgebra, Subspace};
use crate::error::{check_dim, Error, Result};
use crate::field::matrix::independent_subset;
use crate::field::{solve_in_span, Matrix, Scalar, Vector};

/// A basis vector `e_i` and an ideal generator `w` with `[e_i, w] ∉ 𝔥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWitness {
    pub basis_index: usize,
    pub generator: Vector,
    pub bracket: Vector,
}

impl fmt::Display for IdealWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[e{}, {}] = {}",
            self.basis_index + 1,
            combination_text(&self.generator),
            combination_text(&self.bracket)
        )
    }
}

/// Renders a vector as a combination of `e1 … en`, e.g. `e1 - 1/2*e3`.
pub fn combination_text(v: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_text();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
            _ => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == "1" {
            out.push_str(&format!("e{}", i + 1));
        } else if mag.contains(' ') {
            out.push_str(&format!("({mag})*e{}", i + 1));
        } else {
            out.push_str(&format!("{mag}*e{}", i + 1));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Checks `[𝔤, 𝔥] ⊆ 𝔥` on basis vectors; returns the first failing pair.
pub fn ideal_check(alg: &LieAlgebra, h: &Subspace) -> Result<Option<IdealWitness>> {
    check_dim(alg.dim(), h.ambient_dim())?;
    let n = alg.dim();
    for i in 0..n {
        let e = alg.field().unit_vector(n, i);
        for w in h.basis() {
            let b = alg.bracket(&e, w)?;
            if solve_in_span(alg.field(), h.basis(), &b)?.is_none() {
                return Ok(Some(IdealWitness { basis_index: i, generator: w.clone(), bracket: b }));
            }
        }
    }
    Ok(None)
}

/// `𝔤/𝔥` together with the projection `π` and a section.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub quotient: LieAlgebra,
    /// `(n - dim 𝔥) × n`, annihilates `𝔥`.
    pub projection: Matrix,
    /// `n × (n - dim 𝔥)`, columns are the complement basis vectors.
    pub section: Matrix,
    /// 0-based indices of the standard basis vectors completing `𝔥` to a basis.
    pub complement: Vec<usize>,
}

impl QuotientData {
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        self.projection.mul_vec(v)
    }
}

/// Builds `𝔤/𝔥` on the lexicographically first standard complement of `𝔥`.
pub fn quotient_algebra(alg: &LieAlgebra, h: &Subspace) -> Result<QuotientData> {
    if let Some(w) = ideal_check(alg, h)? {
        return Err(Error::NotAnIdeal(w));
    }
    let n = alg.dim();
    let field = alg.field();
    let d = h.dim();
    let mut candidates: Vec<Vector> = h.basis().to_vec();
    candidates.extend((0..n).map(|i| field.unit_vector(n, i)));
    let complement: Vec<usize> = independent_subset(field, n, &candidates)?
        .into_iter()
        .filter(|&c| c >= d)
        .map(|c| c - d)
        .collect();
    let q = complement.len();
    debug_assert_eq!(q + d, n);

    let mut change: Vec<Vector> = h.basis().to_vec();
    change.extend(complement.iter().map(|&c| field.unit_vector(n, c)));
    let inv = Matrix::from_columns(field, n, &change)?.inverse()?;
    let rows: Vec<usize> = (d..n).collect();
    let all: Vec<usize> = (0..n).collect();
    let projection = inv.minor(&rows, &all);
    let section = Matrix::from_columns(
        field,
        n,
        &complement.iter().map(|&c| field.unit_vector(n, c)).collect::<Vec<_>>(),
    )?;

    let mut brackets = Vec::new();
    for a in 0..q {
        for b in a + 1..q {
            let v = projection.mul_vec(alg.basis_bracket(complement[a], complement[b]))?;
            brackets.push((a, b, v));
        }
    }
    let quotient = LieAlgebra::new(format!("{}/h", alg.name()), q, field, brackets)?;
    Ok(QuotientData { quotient, projection, section, complement })
}
