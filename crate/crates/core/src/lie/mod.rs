//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Indices are 0-based in the API and 1-based in every rendered message,
//! document and report.

mod quotient;
mod subspace;

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::field::{vector, Field, Scalar, Vector};

pub use quotient::{ideal_check, quotient_algebra, IdealWitness, QuotientData};
pub use subspace::{torus_ideal_from_directions, Subspace};

/// A Lie algebra `𝔤` with basis `e_0 … e_{n-1}` and `[e_i, e_j] = Σ_k c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    field: Field,
    /// Dense `n × n` table of bracket vectors, antisymmetric by construction.
    table: Vec<Vector>,
}

impl LieAlgebra {
    /// The abelian algebra of dimension `dim`.
    pub fn abelian(name: impl Into<String>, dim: usize, field: &Field) -> Self {
        LieAlgebra {
            name: name.into(),
            dim,
            field: field.clone(),
            table: vec![field.zero_vector(dim); dim * dim],
        }
    }

    /// Builds from brackets `(i, j, [e_i, e_j])` with `i < j`; pairs not
    /// listed are zero.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        field: &Field,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let mut alg = Self::abelian(name, dim, field);
        let mut seen = vec![false; dim * dim];
        for (i, j, value) in brackets {
            if i >= j || j >= dim {
                return Err(Error::Document(format!(
                    "bracket pair ({}, {}) must satisfy 1 <= i < j <= {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(Error::Document(format!("bracket pair ({}, {}) given twice", i + 1, j + 1)));
            }
            check_dim(dim, value.len())?;
            if let Some(x) = value.iter().find(|x| x.field() != *field) {
                return Err(Error::MixedFields(field.clone(), x.field()));
            }
            alg.table[j * dim + i] = value.iter().map(|x| -x).collect();
            alg.table[i * dim + j] = value;
        }
        Ok(alg)
    }

    /// Builds from sparse structure constants `(i, j, k, c^k_ij)`, 0-based, `i < j`.
    pub fn from_constants(
        name: impl Into<String>,
        dim: usize,
        field: &Field,
        constants: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let mut grouped: Vec<(usize, usize, Vector)> = Vec::new();
        for (i, j, k, c) in constants {
            if *k >= dim {
                return Err(Error::Document(format!("term index {} exceeds dimension {dim}", k + 1)));
            }
            match grouped.iter_mut().find(|(a, b, _)| a == i && b == j) {
                Some((_, _, v)) => v[*k] = &v[*k] + c,
                None => {
                    let mut v = field.zero_vector(dim);
                    v[*k] = c.clone();
                    grouped.push((*i, *j, v));
                }
            }
        }
        Self::new(name, dim, field, grouped)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`, in lexicographic order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        (0..self.dim)
            .flat_map(move |i| (i + 1..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.basis_bracket(i, j)))
            .filter(|(_, _, v)| !vector::is_zero(v))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets().next().is_none()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_dim(self.dim, x.len())?;
        check_dim(self.dim, y.len())?;
        let mut out = self.field.zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.basis_bracket(i, j));
            }
        }
        Ok(out)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with one structure constant `c^k_ij` (i < j) replaced.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: Scalar) -> Self {
        let mut alg = self.clone();
        alg.table[j * self.dim + i][k] = -&value;
        alg.table[i * self.dim + j][k] = value;
        alg
    }
}

/// A basis triple where the Jacobiator
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: Vector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}): residual {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            vector::to_text(&self.residual)
        )
    }
}

/// All basis triples `i < j < k` violating the Jacobi identity.
pub fn jacobi_check(alg: &LieAlgebra) -> Vec<JacobiViolation> {
    let n = alg.dim;
    let br = |x: &[Scalar], y: &[Scalar]| alg.bracket(x, y).expect("dimensions agree");
    let e = |i| alg.field.unit_vector(n, i);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a = br(alg.basis_bracket(i, j), &e(k));
                let b = br(alg.basis_bracket(j, k), &e(i));
                let c = br(alg.basis_bracket(k, i), &e(j));
                let residual = vector::add(&vector::add(&a, &b), &c);
                if !vector::is_zero(&residual) {
                    out.push(JacobiViolation { i, j, k, residual });
                }
            }
        }
    }
    out
}

/// [`jacobi_check`] as a `Result`.
pub fn require_jacobi(alg: &LieAlgebra) -> Result<()> {
    let violations = jacobi_check(alg);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Jacobi(violations))
    }
}
