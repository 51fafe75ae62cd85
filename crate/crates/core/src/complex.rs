//! The Chevalley-Eilenberg complex `(Λ•𝔤*, d)` with
//!
//! ```text
//! dω(Z_0,…,Z_k) = Σ_{0≤i<j≤k} (-1)^{i+j} ω([Z_i,Z_j], Z_0,…,Ẑ_i,…,Ẑ_j,…,Z_k)
//! ```
//!
//! and its cohomology. Matrix rows and columns follow the lexicographic
//! order of index tuples.

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::field::matrix::{independent_subset, rank, rref};
use crate::field::{rank_and_kernel, vector, Field, Matrix, Scalar, Vector};
use crate::forms::{binomial, lex_rank, tuples, ExteriorForm, IndexTuple};
use crate::lie::{require_jacobi, LieAlgebra, Subspace};

/// Complex size grows as `2^n`; larger algebras are refused.
pub const DEFAULT_MAX_DIM: usize = 20;

/// Matrix of `d: Λ^k → Λ^{k+1}`, shape `C(n,k+1) × C(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    pub degree: usize,
    pub matrix: Matrix,
}

/// Calls `visit(I, c)` for every `c·θ^I` term contributing to `dθ^I(e_J)`,
/// where `target` is the `(k+1)`-tuple `J`.
///
/// `θ^I(v, e_R)` with `R` a `(k-1)`-tuple is `±v_m` when `I = R ∪ {m}`,
/// the sign being the parity of the position of `m` in `I`.
fn coboundary_row(alg: &LieAlgebra, target: &[usize], mut visit: impl FnMut(&[usize], Scalar)) {
    let len = target.len();
    let mut merged = Vec::with_capacity(len.saturating_sub(1));
    for p in 0..len {
        for q in p + 1..len {
            let bracket = alg.basis_bracket(target[p], target[q]);
            let rest: Vec<usize> = target
                .iter()
                .enumerate()
                .filter(|(s, _)| *s != p && *s != q)
                .map(|(_, &v)| v)
                .collect();
            for (m, c) in bracket.iter().enumerate() {
                if c.is_zero() || rest.binary_search(&m).is_ok() {
                    continue;
                }
                let pos = rest.partition_point(|&r| r < m);
                merged.clear();
                merged.extend_from_slice(&rest[..pos]);
                merged.push(m);
                merged.extend_from_slice(&rest[pos..]);
                visit(&merged, c.signed((p + q + pos) % 2 == 0));
            }
        }
    }
}

/// The coboundary `d_k` as a matrix.
pub fn ce_differential(alg: &LieAlgebra, k: usize) -> Result<CoboundaryMatrix> {
    let n = alg.dim();
    if k > n {
        return Err(Error::DegreeOutOfRange { degree: k, dim: n });
    }
    let field = alg.field();
    let rows: Vec<Vector> = tuples(n, k + 1)
        .par_iter()
        .map(|target| {
            let mut row = field.zero_vector(binomial(n, k));
            coboundary_row(alg, target.indices(), |source, c| {
                let col = lex_rank(n, source);
                row[col] = &row[col] + &c;
            });
            row
        })
        .collect();
    let mut matrix = Matrix::zeros(field, rows.len(), binomial(n, k));
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            matrix.set(i, j, x);
        }
    }
    Ok(CoboundaryMatrix { degree: k, matrix })
}

/// `dω`, evaluated directly on each basis `(k+1)`-tuple.
pub fn d_apply(alg: &LieAlgebra, form: &ExteriorForm) -> Result<ExteriorForm> {
    let n = alg.dim();
    check_dim(n, form.ambient())?;
    if form.field() != alg.field() {
        return Err(Error::MixedFields(alg.field().clone(), form.field().clone()));
    }
    let k = form.degree();
    if k > n {
        return Err(Error::DegreeOutOfRange { degree: k, dim: n });
    }
    let field = alg.field();
    let mut terms = Vec::new();
    for target in tuples(n, k + 1) {
        let mut acc = field.zero();
        coboundary_row(alg, target.indices(), |source, c| {
            let w = form.coeff(&IndexTuple::from_sorted_unchecked(source.to_vec()));
            if !w.is_zero() {
                acc = &acc + &(c * w);
            }
        });
        terms.push((target, acc));
    }
    ExteriorForm::from_terms(field, n, k + 1, terms)
}

/// Compares `d(θ_1∧…∧θ_k)` with `Σ_m (-1)^{m+1} θ_1∧…∧dθ_m∧…∧θ_k`.
/// Returns the difference when they disagree.
pub fn leibniz_check(alg: &LieAlgebra, one_forms: &[ExteriorForm]) -> Result<Option<ExteriorForm>> {
    let n = alg.dim();
    let field = alg.field();
    for th in one_forms {
        check_dim(1, th.degree())?;
    }
    let product = |forms: &[ExteriorForm]| -> Result<ExteriorForm> {
        forms.iter().try_fold(ExteriorForm::constant(field.one(), n), |acc, f| acc.wedge(f))
    };
    let lhs = d_apply(alg, &product(one_forms)?)?;
    let mut rhs = ExteriorForm::zero(field, n, one_forms.len() + 1);
    for m in 0..one_forms.len() {
        let mut factors = one_forms.to_vec();
        factors[m] = d_apply(alg, &one_forms[m])?;
        let term = product(&factors)?;
        rhs = if m % 2 == 0 { rhs.add(&term)? } else { rhs.sub(&term)? };
    }
    let residual = lhs.sub(&rhs)?;
    Ok(if residual.is_zero() { None } else { Some(residual) })
}

/// Matrix of `ω ↦ (ι_w ω)_w` over the basis of `h`, from `Λ^k` into
/// `⊕_w Λ^{k-1}`.
fn contraction_matrix(field: &Field, n: usize, h: &Subspace, k: usize) -> Matrix {
    if k == 0 {
        return Matrix::zeros(field, 0, 1);
    }
    let lower = tuples(n, k - 1);
    let mut m = Matrix::zeros(field, h.dim() * lower.len(), binomial(n, k));
    for (b, w) in h.basis().iter().enumerate() {
        for (r, rest) in lower.iter().enumerate() {
            let row = b * lower.len() + r;
            for (mi, c) in w.iter().enumerate() {
                if c.is_zero() || rest.indices().binary_search(&mi).is_ok() {
                    continue;
                }
                let pos = rest.indices().partition_point(|&x| x < mi);
                let mut merged = rest.indices().to_vec();
                merged.insert(pos, mi);
                m.set(row, lex_rank(n, &merged), c.signed(pos % 2 == 0));
            }
        }
    }
    m
}

/// Basis of the `𝔥`-horizontal `k`-forms, those vanishing whenever an
/// argument lies in `h`.
pub fn horizontal_basis(alg: &LieAlgebra, h: &Subspace, k: usize) -> Result<Vec<ExteriorForm>> {
    let n = alg.dim();
    check_dim(n, h.ambient_dim())?;
    if k > n {
        return Err(Error::DegreeOutOfRange { degree: k, dim: n });
    }
    let field = alg.field();
    let rk = rank_and_kernel(&contraction_matrix(field, n, h, k));
    rk.kernel.iter().map(|v| ExteriorForm::from_dense(field, n, k, v)).collect()
}

/// True if `form` is annihilated by contraction with every basis vector of `h`.
pub fn is_horizontal(form: &ExteriorForm, h: &Subspace) -> Result<bool> {
    check_dim(form.ambient(), h.ambient_dim())?;
    let m = contraction_matrix(form.field(), form.ambient(), h, form.degree());
    Ok(vector::is_zero(&m.mul_vec(&form.to_dense())?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub algebra: String,
    pub dimension: usize,
    pub betti: Vec<usize>,
    /// `rank d_k` for `k = 0..=n`.
    pub ranks: Vec<usize>,
    /// Cocycles per degree spanning `H^k` modulo coboundaries.
    pub representatives: Vec<Vec<ExteriorForm>>,
}

impl CohomologyReport {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn check_dimension_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::DimensionCap { dim, cap })
    } else {
        Ok(())
    }
}

/// `H•(𝔤)` with the default dimension cap.
pub fn cohomology(alg: &LieAlgebra) -> Result<CohomologyReport> {
    cohomology_with_cap(alg, DEFAULT_MAX_DIM)
}

/// `H•(𝔤)`. Representatives are kernel vectors of `d_k` reduced against the
/// reduced echelon basis of `im d_{k-1}`, kept greedily when independent,
/// and scaled to leading coefficient 1.
pub fn cohomology_with_cap(alg: &LieAlgebra, max_dim: usize) -> Result<CohomologyReport> {
    require_jacobi(alg)?;
    let n = alg.dim();
    check_dimension_cap(n, max_dim)?;
    let field = alg.field();

    let differentials: Vec<CoboundaryMatrix> =
        (0..=n).into_par_iter().map(|k| ce_differential(alg, k)).collect::<Result<_>>()?;
    let kernels: Vec<_> = differentials.par_iter().map(|d| rank_and_kernel(&d.matrix)).collect();
    let ranks: Vec<usize> = kernels.iter().map(|rk| rk.rank).collect();

    let mut betti = Vec::with_capacity(n + 1);
    let mut representatives = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let incoming = if k == 0 { 0 } else { ranks[k - 1] };
        betti.push(binomial(n, k) - ranks[k] - incoming);

        let image = if k == 0 { Vec::new() } else { rref(&differentials[k - 1].matrix.transpose()).rows };
        let pivots: Vec<usize> = image.iter().map(|row| vector::leading_index(row).expect("nonzero row")).collect();
        let reduced: Vec<Vector> = kernels[k]
            .kernel
            .iter()
            .map(|v| {
                let mut v = v.clone();
                for (row, &p) in image.iter().zip(&pivots) {
                    let c = -&v[p];
                    vector::axpy(&mut v, &c, row);
                }
                v
            })
            .collect();
        let keep = independent_subset(field, binomial(n, k), &reduced)?;
        let reps = keep
            .into_iter()
            .map(|i| ExteriorForm::from_dense(field, n, k, &vector::normalize_leading(&reduced[i])))
            .collect::<Result<Vec<_>>>()?;
        debug_assert_eq!(reps.len(), betti[k]);
        representatives.push(reps);
    }

    Ok(CohomologyReport { algebra: alg.name().to_string(), dimension: n, betti, ranks, representatives })
}

/// Rank of `d_k`, for callers that only need Betti numbers.
pub fn coboundary_rank(alg: &LieAlgebra, k: usize) -> Result<usize> {
    Ok(rank(&ce_differential(alg, k)?.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn theta(alg: &LieAlgebra, i: usize) -> ExteriorForm {
        ExteriorForm::theta(alg.field(), alg.dim(), i).unwrap()
    }

    fn wedge2(alg: &LieAlgebra, i: usize, j: usize) -> ExteriorForm {
        theta(alg, i).wedge(&theta(alg, j)).unwrap()
    }

    #[test]
    fn so3_one_forms() {
        let so3 = catalog::so3();
        let neg = |f: ExteriorForm| f.scale(&-so3.field().one());
        assert_eq!(d_apply(&so3, &theta(&so3, 0)).unwrap(), neg(wedge2(&so3, 1, 2)));
        assert_eq!(d_apply(&so3, &theta(&so3, 1)).unwrap(), neg(wedge2(&so3, 2, 0)));
        assert_eq!(d_apply(&so3, &theta(&so3, 2)).unwrap(), neg(wedge2(&so3, 0, 1)));
    }

    #[test]
    fn so3_two_form_closed() {
        let so3 = catalog::so3();
        assert!(d_apply(&so3, &wedge2(&so3, 1, 2)).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_one_forms() {
        let h = catalog::heisenberg3();
        assert!(d_apply(&h, &theta(&h, 0)).unwrap().is_zero());
        assert!(d_apply(&h, &theta(&h, 1)).unwrap().is_zero());
        assert_eq!(d_apply(&h, &theta(&h, 2)).unwrap(), wedge2(&h, 0, 1).scale(&h.field().from_int(-1)));
    }

    #[test]
    fn constants_are_closed() {
        let so3 = catalog::so3();
        let c = ExteriorForm::constant(so3.field().from_int(7), 3);
        assert!(d_apply(&so3, &c).unwrap().is_zero());
        assert!(ce_differential(&so3, 0).unwrap().matrix.is_zero());
    }

    #[test]
    fn abelian_differentials_vanish() {
        let a = catalog::abelian(4);
        for k in 0..=4 {
            assert!(ce_differential(&a, k).unwrap().matrix.is_zero());
        }
    }

    #[test]
    fn degree_range() {
        let so3 = catalog::so3();
        assert!(matches!(ce_differential(&so3, 4), Err(Error::DegreeOutOfRange { degree: 4, dim: 3 })));
        let top = ce_differential(&so3, 3).unwrap();
        assert_eq!((top.matrix.rows(), top.matrix.cols()), (0, 1));
    }

    #[test]
    fn leibniz_examples() {
        let so3 = catalog::so3();
        assert_eq!(leibniz_check(&so3, &[theta(&so3, 0), theta(&so3, 1)]).unwrap(), None);
        let h = catalog::heisenberg3();
        assert_eq!(leibniz_check(&h, &[theta(&h, 0), theta(&h, 2)]).unwrap(), None);
        let a = catalog::abelian(3);
        assert_eq!(leibniz_check(&a, &[theta(&a, 2), theta(&a, 0), theta(&a, 1)]).unwrap(), None);
    }

    #[test]
    fn horizontal_examples() {
        let h = catalog::heisenberg3();
        let f = h.field().clone();
        let center = Subspace::new(&f, 3, vec![f.unit_vector(3, 2)]).unwrap();
        let basis = horizontal_basis(&h, &center, 1).unwrap();
        assert_eq!(basis, vec![theta(&h, 0), theta(&h, 1)]);

        for k in 0..=3 {
            let all = horizontal_basis(&h, &Subspace::zero(&f, 3), k).unwrap();
            let expected: Vec<_> =
                tuples(3, k).into_iter().map(|t| ExteriorForm::basis(&f, 3, t).unwrap()).collect();
            assert_eq!(all, expected);
            let none = horizontal_basis(&h, &Subspace::full(&f, 3), k).unwrap();
            assert_eq!(none.len(), usize::from(k == 0));
        }
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(cohomology(&catalog::so3()).unwrap().betti, vec![1, 0, 0, 1]);
        assert_eq!(cohomology(&catalog::heisenberg3()).unwrap().betti, vec![1, 2, 2, 1]);
        assert_eq!(cohomology(&catalog::abelian(4)).unwrap().betti, vec![1, 4, 6, 4, 1]);
        assert_eq!(cohomology(&catalog::abelian(0)).unwrap().betti, vec![1]);
    }

    #[test]
    fn heisenberg_representatives() {
        let h = catalog::heisenberg3();
        let report = cohomology(&h).unwrap();
        assert_eq!(report.representatives[1], vec![theta(&h, 0), theta(&h, 1)]);
        // im d_1 = span{θ1∧θ2}; H^2 is spanned by θ1∧θ3, θ2∧θ3.
        assert_eq!(report.representatives[2], vec![wedge2(&h, 0, 2), wedge2(&h, 1, 2)]);
        for (k, reps) in report.representatives.iter().enumerate() {
            for r in reps {
                assert_eq!(r.degree(), k);
                assert!(d_apply(&h, r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn jacobi_violation_blocks_cohomology() {
        let f = Field::Rational;
        // [e1,e2] = e1 + e3 leaves Jacobiator [e1,e3] = -e2.
        let broken = catalog::so3().with_constant(0, 1, 0, f.one());
        assert!(matches!(cohomology(&broken), Err(Error::Jacobi(_))));
    }

    #[test]
    fn dimension_cap() {
        let a = catalog::abelian(5);
        assert!(matches!(cohomology_with_cap(&a, 4), Err(Error::DimensionCap { dim: 5, cap: 4 })));
    }
}
