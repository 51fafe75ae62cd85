use crate::error::{check_dim, Error, Result};
use crate::field::matrix::independent_subset;
use crate::field::{solve_in_span, Field, Scalar, Vector};

/// A subspace of `𝔤` spanned by linearly independent column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    field: Field,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Fails with [`Error::DependentBasis`] unless `basis` is independent.
    pub fn new(field: &Field, ambient_dim: usize, basis: Vec<Vector>) -> Result<Self> {
        for v in &basis {
            check_dim(ambient_dim, v.len())?;
        }
        if independent_subset(field, ambient_dim, &basis)?.len() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace { ambient_dim, field: field.clone(), basis })
    }

    pub fn zero(field: &Field, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, field: field.clone(), basis: Vec::new() }
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| field.unit_vector(ambient_dim, i)).collect();
        Subspace { ambient_dim, field: field.clone(), basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_dim(self.ambient_dim, v.len())?;
        Ok(solve_in_span(&self.field, &self.basis, v)?.is_some())
    }
}

/// Lie algebra of the subgroup of an `n`-dimensional abelian group generated
/// by one-parameter subgroups along `directions`: their span, reduced to an
/// independent subset by elimination (earlier directions win).
pub fn torus_ideal_from_directions(field: &Field, n: usize, directions: &[Vector]) -> Result<Subspace> {
    for d in directions {
        check_dim(n, d.len())?;
    }
    let keep = independent_subset(field, n, directions)?;
    let basis = keep.into_iter().map(|i| directions[i].clone()).collect();
    Ok(Subspace { ambient_dim: n, field: field.clone(), basis })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_direction() {
        let f = Field::rational_function("a");
        let d = vec![f.one(), f.indeterminate().unwrap()];
        let h = torus_ideal_from_directions(&f, 2, std::slice::from_ref(&d)).unwrap();
        assert_eq!(h.basis(), &[d]);
    }

    #[test]
    fn dependent_directions_collapse() {
        let f = Field::Rational;
        let dirs = vec![
            vec![f.from_int(1), f.zero(), f.zero()],
            vec![f.from_int(2), f.zero(), f.zero()],
        ];
        let h = torus_ideal_from_directions(&f, 3, &dirs).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(matches!(Subspace::new(&f, 3, dirs), Err(Error::DependentBasis)));
    }

    #[test]
    fn no_directions_give_zero_subspace() {
        let f = Field::rational_function("a");
        let h = torus_ideal_from_directions(&f, 2, &[]).unwrap();
        assert_eq!(h.dim(), 0);
        assert_eq!(h.ambient_dim(), 2);
    }

    #[test]
    fn direction_length_checked() {
        let f = Field::Rational;
        let r = torus_ideal_from_directions(&f, 2, &[vec![f.one()]]);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }
}
