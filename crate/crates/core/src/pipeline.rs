//! De Rham cohomology of `G/H` for a dense subgroup `H` with Lie algebra
//! `𝔥`, computed as `H•(𝔤/𝔥)`.
//!
//! Density of `H` is taken as given; only its algebraic consequence, that
//! `𝔥` is an ideal, is checked. The pullback `π*: Λ•(𝔤/𝔥)* → (Λ•𝔤*)_𝔥`
//! is verified degree by degree to be a chain isomorphism unless disabled.

use std::fmt;

use crate::complex::{
    check_dimension_cap, cohomology_with_cap, d_apply, horizontal_basis, is_horizontal, CohomologyReport,
    DEFAULT_MAX_DIM,
};
use crate::error::{check_dim, Error, Result};
use crate::field::matrix::rank;
use crate::field::Matrix;
use crate::forms::{binomial, tuples, ExteriorForm};
use crate::lie::{quotient_algebra, require_jacobi, LieAlgebra, Subspace};

#[derive(Clone, Debug)]
pub struct DenseQuotientInput {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    /// Free-form description of `G` and `H`; carried into the report.
    pub note: String,
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub max_dim: usize,
    pub verify_chain_iso: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { max_dim: DEFAULT_MAX_DIM, verify_chain_iso: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseQuotientReport {
    pub algebra: String,
    pub note: String,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub abelian_quotient: bool,
    /// `false` only when the check was skipped.
    pub chain_iso_verified: bool,
    pub report: CohomologyReport,
}

pub fn dense_quotient_cohomology(
    input: &DenseQuotientInput,
    options: &PipelineOptions,
) -> Result<DenseQuotientReport> {
    let alg = &input.algebra;
    require_jacobi(alg)?;
    check_dimension_cap(alg.dim(), options.max_dim)?;
    let data = quotient_algebra(alg, &input.ideal)?;

    let chain_iso_verified = if options.verify_chain_iso {
        if let Some(bad) = chain_iso_check(alg, &input.ideal)? {
            return Err(Error::Verification(bad.to_string()));
        }
        true
    } else {
        false
    };

    let report = cohomology_with_cap(&data.quotient, options.max_dim)?;
    let q = data.quotient.dim();
    let abelian_quotient = data.quotient.is_abelian();
    if abelian_quotient {
        let binomials: Vec<usize> = (0..=q).map(|k| binomial(q, k)).collect();
        if report.betti != binomials {
            return Err(Error::Verification(format!(
                "abelian quotient has Betti numbers {:?}, expected {binomials:?}",
                report.betti
            )));
        }
    }

    Ok(DenseQuotientReport {
        algebra: alg.name().to_string(),
        note: input.note.clone(),
        ideal_dim: input.ideal.dim(),
        quotient_dim: q,
        abelian_quotient,
        chain_iso_verified,
        report,
    })
}

/// `(π*σ)(Z_1,…,Z_k) = σ(πZ_1,…,πZ_k)`; the coefficient on `θ^I` is
/// `Σ_A σ_A · det(π[A, I])`.
pub fn pullback_form(projection: &Matrix, sigma: &ExteriorForm) -> Result<ExteriorForm> {
    check_dim(projection.rows(), sigma.ambient())?;
    if projection.field() != sigma.field() {
        return Err(Error::MixedFields(projection.field().clone(), sigma.field().clone()));
    }
    let n = projection.cols();
    let k = sigma.degree();
    let mut terms = Vec::new();
    for target in tuples(n, k) {
        let mut acc = sigma.field().zero();
        for (a, c) in sigma.terms() {
            let det = projection.minor(a.indices(), target.indices()).determinant()?;
            if !det.is_zero() {
                acc = acc + c * &det;
            }
        }
        terms.push((target, acc));
    }
    ExteriorForm::from_terms(sigma.field(), n, k, terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainIsoCounterexample {
    pub degree: usize,
    /// The quotient basis form at fault, when one is singled out.
    pub form: Option<ExteriorForm>,
    pub reason: String,
}

impl fmt::Display for ChainIsoCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}: {}", self.degree, self.reason)?;
        if let Some(form) = &self.form {
            write!(f, " (at {form})")?;
        }
        Ok(())
    }
}

/// Verifies that `π*` maps `Λ^k(𝔤/𝔥)*` isomorphically onto the horizontal
/// `k`-forms and commutes with `d`, in every degree.
pub fn chain_iso_check(alg: &LieAlgebra, h: &Subspace) -> Result<Option<ChainIsoCounterexample>> {
    let data = quotient_algebra(alg, h)?;
    let n = alg.dim();
    let q = data.quotient.dim();
    let field = alg.field();
    let fail = |degree, form: Option<&ExteriorForm>, reason: String| {
        Ok(Some(ChainIsoCounterexample { degree, form: form.cloned(), reason }))
    };

    for k in 0..=n {
        let horizontal = horizontal_basis(alg, h, k)?.len();
        if horizontal != binomial(q, k) {
            return fail(k, None, format!("horizontal dimension {horizontal}, expected {}", binomial(q, k)));
        }
        if k > q {
            continue;
        }
        let mut images = Vec::new();
        for a in tuples(q, k) {
            let sigma = ExteriorForm::basis(field, q, a)?;
            let pulled = pullback_form(&data.projection, &sigma)?;
            if !is_horizontal(&pulled, h)? {
                return fail(k, Some(&sigma), "pullback is not horizontal".into());
            }
            let lhs = d_apply(alg, &pulled)?;
            let rhs = pullback_form(&data.projection, &d_apply(&data.quotient, &sigma)?)?;
            if lhs != rhs {
                return fail(k, Some(&sigma), format!("d∘π* = {lhs} but π*∘d = {rhs}"));
            }
            images.push(pulled.to_dense());
        }
        let r = rank(&Matrix::from_columns(field, binomial(n, k), &images)?);
        if r != images.len() {
            return fail(k, None, format!("pullback has rank {r}, expected {}", images.len()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::complex::cohomology;
    use crate::field::Field;
    use crate::lie::torus_ideal_from_directions;

    fn center() -> Subspace {
        let f = Field::Rational;
        Subspace::new(&f, 3, vec![f.unit_vector(3, 2)]).unwrap()
    }

    fn slope_ideal() -> (LieAlgebra, Subspace) {
        let f = Field::rational_function("a");
        let dir = vec![f.one(), f.indeterminate().unwrap()];
        (LieAlgebra::abelian("R2", 2, &f), torus_ideal_from_directions(&f, 2, &[dir]).unwrap())
    }

    fn run(algebra: LieAlgebra, ideal: Subspace) -> DenseQuotientReport {
        let input = DenseQuotientInput { algebra, ideal, note: String::new() };
        dense_quotient_cohomology(&input, &PipelineOptions::default()).unwrap()
    }

    #[test]
    fn discrete_subgroup_of_so3() {
        let r = run(catalog::so3(), Subspace::zero(&Field::Rational, 3));
        assert_eq!(r.report.betti, vec![1, 0, 0, 1]);
        assert!(!r.abelian_quotient);
        assert!(r.chain_iso_verified);
    }

    #[test]
    fn slope_subgroup_of_torus() {
        let (alg, h) = slope_ideal();
        let r = run(alg, h);
        assert_eq!(r.quotient_dim, 1);
        assert!(r.abelian_quotient);
        assert_eq!(r.report.betti, vec![1, 1]);
    }

    #[test]
    fn dense_subgroup_of_line() {
        let r = run(catalog::abelian(1), Subspace::zero(&Field::Rational, 1));
        assert_eq!(r.report.betti, vec![1, 1]);
    }

    #[test]
    fn discrete_case_equals_algebra_cohomology() {
        for alg in [catalog::sl2(), catalog::heisenberg3(), catalog::abelian(3)] {
            let direct = cohomology(&alg).unwrap().betti;
            assert_eq!(run(alg, Subspace::zero(&Field::Rational, 3)).report.betti, direct);
        }
    }

    #[test]
    fn not_an_ideal_is_reported() {
        let f = Field::Rational;
        let input = DenseQuotientInput {
            algebra: catalog::so3(),
            ideal: Subspace::new(&f, 3, vec![f.unit_vector(3, 2)]).unwrap(),
            note: String::new(),
        };
        let r = dense_quotient_cohomology(&input, &PipelineOptions::default());
        assert!(matches!(r, Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn chain_iso_examples() {
        assert_eq!(chain_iso_check(&catalog::heisenberg3(), &center()).unwrap(), None);
        let (alg, h) = slope_ideal();
        assert_eq!(chain_iso_check(&alg, &h).unwrap(), None);
        assert_eq!(chain_iso_check(&catalog::so3(), &Subspace::zero(&Field::Rational, 3)).unwrap(), None);
    }

    #[test]
    fn pullback_examples() {
        let f = Field::Rational;
        let id = Matrix::identity(&f, 3);
        let sigma = ExteriorForm::from_dense(&f, 3, 2, &[f.from_int(2), f.zero(), f.parse("-1/3").unwrap()])
            .unwrap();
        assert_eq!(pullback_form(&id, &sigma).unwrap(), sigma);

        let data = quotient_algebra(&catalog::heisenberg3(), &center()).unwrap();
        let top = ExteriorForm::theta(&f, 2, 0).unwrap().wedge(&ExteriorForm::theta(&f, 2, 1).unwrap()).unwrap();
        let expected = ExteriorForm::theta(&f, 3, 0).unwrap().wedge(&ExteriorForm::theta(&f, 3, 1).unwrap()).unwrap();
        assert_eq!(pullback_form(&data.projection, &top).unwrap(), expected);

        let zero = ExteriorForm::zero(&f, 2, 1);
        assert!(pullback_form(&data.projection, &zero).unwrap().is_zero());
        assert!(matches!(
            pullback_form(&data.projection, &sigma),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
