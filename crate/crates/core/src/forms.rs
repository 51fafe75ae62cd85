//! Alternating forms on `𝔤`, in the basis `θ^{i₁}∧…∧θ^{i_k}` dual to the
//! standard basis, with strictly increasing index tuples in lexicographic
//! order.
//!
//! Evaluation follows the determinant convention: `θ^I(e_J) = δ_IJ` for
//! increasing tuples, with no factorial normalization.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::field::{Field, Matrix, Scalar, Vector};

/// Strictly increasing 0-based basis indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Document(format!("index tuple {indices:?} is not strictly increasing")));
        }
        Ok(IndexTuple(indices))
    }

    pub fn empty() -> Self {
        IndexTuple(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based indices, as they appear in documents.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexTuple(indices)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All increasing `k`-tuples from `0..n`, lexicographically.
pub fn tuples(n: usize, k: usize) -> Vec<IndexTuple> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(IndexTuple(cur.clone()));
        // Advance the rightmost index that still has room.
        let Some(t) = (0..k).rev().find(|&t| cur[t] < n - k + t) else {
            return out;
        };
        cur[t] += 1;
        for s in t + 1..k {
            cur[s] = cur[s - 1] + 1;
        }
    }
}

/// Position of `tuple` in [`tuples`]`(n, tuple.len())`.
pub fn lex_rank(n: usize, tuple: &[usize]) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut next = 0;
    for (t, &c) in tuple.iter().enumerate() {
        for v in next..c {
            rank += binomial(n - v - 1, k - t - 1);
        }
        next = c + 1;
    }
    rank
}

/// Number of pairs out of order in `seq`.
pub(crate) fn inversions(seq: &[usize]) -> usize {
    let mut count = 0;
    for (a, x) in seq.iter().enumerate() {
        count += seq[a + 1..].iter().filter(|y| *y < x).count();
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorForm {
    ambient: usize,
    degree: usize,
    field: Field,
    coeffs: BTreeMap<IndexTuple, Scalar>,
}

impl ExteriorForm {
    pub fn zero(field: &Field, ambient: usize, degree: usize) -> Self {
        ExteriorForm { ambient, degree, field: field.clone(), coeffs: BTreeMap::new() }
    }

    /// The constant 0-form `c`.
    pub fn constant(c: Scalar, ambient: usize) -> Self {
        let field = c.field();
        Self::zero(&field, ambient, 0).with_term(IndexTuple::empty(), c)
    }

    /// `θ^I`.
    pub fn basis(field: &Field, ambient: usize, tuple: IndexTuple) -> Result<Self> {
        Self::from_terms(field, ambient, tuple.len(), [(tuple, field.one())])
    }

    /// `θ^i` for a single 0-based index.
    pub fn theta(field: &Field, ambient: usize, i: usize) -> Result<Self> {
        Self::basis(field, ambient, IndexTuple(vec![i]))
    }

    /// The 1-form `Σ v_i θ^i`.
    pub fn from_covector(field: &Field, v: &[Scalar]) -> Self {
        Self::from_dense(field, v.len(), 1, v).expect("covector length matches")
    }

    pub fn from_terms(
        field: &Field,
        ambient: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (IndexTuple, Scalar)>,
    ) -> Result<Self> {
        let mut form = Self::zero(field, ambient, degree);
        for (tuple, c) in terms {
            check_dim(degree, tuple.len())?;
            if let Some(&last) = tuple.0.last() {
                if last >= ambient {
                    return Err(Error::DimensionMismatch { expected: ambient, found: last + 1 });
                }
            }
            if c.field() != *field {
                return Err(Error::MixedFields(field.clone(), c.field()));
            }
            form.add_term(tuple, &c);
        }
        Ok(form)
    }

    /// From coefficients listed in lexicographic tuple order.
    pub fn from_dense(field: &Field, ambient: usize, degree: usize, coeffs: &[Scalar]) -> Result<Self> {
        check_dim(binomial(ambient, degree), coeffs.len())?;
        let terms = tuples(ambient, degree).into_iter().zip(coeffs.iter().cloned());
        Self::from_terms(field, ambient, degree, terms)
    }

    /// Coefficients in lexicographic tuple order.
    pub fn to_dense(&self) -> Vector {
        let mut v = self.field.zero_vector(binomial(self.ambient, self.degree));
        for (t, c) in &self.coeffs {
            v[lex_rank(self.ambient, &t.0)] = c.clone();
        }
        v
    }

    fn with_term(mut self, tuple: IndexTuple, c: Scalar) -> Self {
        self.add_term(tuple, &c);
        self
    }

    fn add_term(&mut self, tuple: IndexTuple, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&tuple) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.coeffs.remove(&tuple);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(tuple, c.clone());
            }
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, tuple: &IndexTuple) -> Scalar {
        self.coeffs.get(tuple).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero terms in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &Scalar)> {
        self.coeffs.iter()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        check_dim(self.ambient, other.ambient)?;
        if self.field != other.field {
            return Err(Error::MixedFields(self.field.clone(), other.field.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        check_dim(self.degree, other.degree)?;
        let mut out = self.clone();
        for (t, c) in &other.coeffs {
            out.add_term(t.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(&self.field, self.ambient, self.degree);
        for (t, c) in &self.coeffs {
            out.add_term(t.clone(), &(s * c));
        }
        out
    }

    /// Value on `args`: each basis term contributes the minor of the
    /// argument matrix on its rows.
    pub fn evaluate(&self, args: &[Vector]) -> Result<Scalar> {
        if args.len() != self.degree {
            return Err(Error::ArityMismatch { degree: self.degree, given: args.len() });
        }
        let columns = Matrix::from_columns(&self.field, self.ambient, args)?;
        let all: Vec<usize> = (0..self.degree).collect();
        let mut acc = self.field.zero();
        for (t, c) in &self.coeffs {
            let det = columns.minor(&t.0, &all).determinant()?;
            if !det.is_zero() {
                acc = acc + c * &det;
            }
        }
        Ok(acc)
    }

    /// `self ∧ other`; basis tuples combine with the sign of the permutation
    /// sorting their concatenation.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let degree = self.degree + other.degree;
        let mut out = Self::zero(&self.field, self.ambient, degree);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let mut joined = i.0.clone();
                joined.extend_from_slice(&j.0);
                let sign_positive = inversions(&joined).is_multiple_of(2);
                joined.sort_unstable();
                if joined.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                out.add_term(IndexTuple(joined), &(a * b).signed(sign_positive));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (t, c) in &self.coeffs {
            let monomial: Vec<String> = t.0.iter().map(|i| format!("θ{}", i + 1)).collect();
            let monomial = monomial.join("∧");
            let text = c.to_text();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = if mag.contains(' ') { format!("({mag})") } else { mag };
            match (monomial.is_empty(), mag == "1") {
                (true, _) => f.write_str(&mag)?,
                (false, true) => f.write_str(&monomial)?,
                (false, false) => write!(f, "{mag}*{monomial}")?,
            }
        }
        Ok(())
    }
}

/// `(α∧β)(Z_0,…,Z_k)` by the pair expansion
/// `Σ_{i<j} (-1)^{i+j-1} α(Z_i,Z_j) β(Z_0,…,Ẑ_i,…,Ẑ_j,…,Z_k)`
/// for a 2-form `α` and a `(k-1)`-form `β`.
pub fn shuffle_eval(alpha: &ExteriorForm, beta: &ExteriorForm, args: &[Vector]) -> Result<Scalar> {
    if alpha.degree != 2 {
        return Err(Error::ArityMismatch { degree: alpha.degree, given: 2 });
    }
    if args.len() != beta.degree + 2 {
        return Err(Error::ArityMismatch { degree: beta.degree + 2, given: args.len() });
    }
    alpha.check_compatible(beta)?;
    let mut acc = alpha.field.zero();
    for i in 0..args.len() {
        for j in i + 1..args.len() {
            let a = alpha.evaluate(&[args[i].clone(), args[j].clone()])?;
            if a.is_zero() {
                continue;
            }
            let rest: Vec<Vector> = args
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != i && *p != j)
                .map(|(_, v)| v.clone())
                .collect();
            let b = beta.evaluate(&rest)?;
            acc = acc + (a * b).signed((i + j) % 2 == 1);
        }
    }
    Ok(acc)
}
