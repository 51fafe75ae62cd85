//! Exact scalars over ℚ and ℚ(a), and dense linear algebra over them.
//!
//! Every [`Scalar`] carries its field tag. Binary operations between
//! scalars of different fields are rejected by the checked API
//! ([`scalar_arith`]) and panic through the operator impls, which are meant
//! for code that has already established a common field.

pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
pub use matrix::{rank_and_kernel, solve_in_span, Matrix, RankKernel};
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Column vector of scalars.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Rational functions in the named indeterminate.
    RationalFunction(Arc<str>),
}

impl Field {
    pub fn rational_function(var: &str) -> Self {
        Field::RationalFunction(Arc::from(var))
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: BigRational) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(q),
            Field::RationalFunction(v) => Scalar::Function(RatFunc::constant(v.clone(), q)),
        }
    }

    /// The indeterminate of a function field.
    pub fn indeterminate(&self) -> Option<Scalar> {
        match self {
            Field::Rational => None,
            Field::RationalFunction(v) => Some(Scalar::Function(RatFunc::from_poly(v.clone(), Poly::x()))),
        }
    }

    /// Standard basis vector `e_i` (0-based) of length `n`.
    pub fn unit_vector(&self, n: usize, i: usize) -> Vector {
        let mut v = vec![self.zero(); n];
        v[i] = self.one();
        v
    }

    pub fn zero_vector(&self, n: usize) -> Vector {
        vec![self.zero(); n]
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        parse::parse_scalar(self, text)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::RationalFunction(v) => write!(f, "Q({v})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Function(RatFunc),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Function(f) => Field::RationalFunction(f.var().clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Function(f) => f.is_one(),
        }
    }

    pub fn same_field(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Function(a), Scalar::Function(b)) => a.var() == b.var(),
            _ => false,
        }
    }

    fn require_same_field(&self, other: &Scalar) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::MixedFields(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.require_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.require_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.require_same_field(other)?;
        let inv = other.recip()?;
        self.checked_mul(&inv)
    }

    pub fn recip(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(q) => Ok(Scalar::Rational(q.recip())),
            Scalar::Function(f) => f.recip().map(Scalar::Function).ok_or(Error::DivisionByZero),
        }
    }

    /// Sign-adjusted copy: `self` if `positive`, else `-self`.
    pub fn signed(&self, positive: bool) -> Scalar {
        if positive {
            self.clone()
        } else {
            -self
        }
    }

    /// Canonical text form, parseable by [`Field::parse`].
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Rational(q) => q.to_string(),
            Scalar::Function(f) => f.to_text(),
        }
    }

    /// The rational value, for ℚ only.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Function(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Function(f) => Scalar::Function(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar operands from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

/// Helpers on [`Vector`]. Operands are assumed to share length and field.
pub mod vector {
    use super::{Field, Scalar, Vector};

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(s: &Scalar, a: &[Scalar]) -> Vector {
        a.iter().map(|x| s * x).collect()
    }

    /// `acc += s * a`
    pub fn axpy(acc: &mut [Scalar], s: &Scalar, a: &[Scalar]) {
        if s.is_zero() {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !y.is_zero() {
                *x = &*x + &(s * y);
            }
        }
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(Scalar::is_zero)
    }

    pub fn dot(field: &Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter().zip(b).fold(field.zero(), |acc, (x, y)| acc + x * y)
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(a: &[Scalar]) -> Option<usize> {
        a.iter().position(|x| !x.is_zero())
    }

    /// Scales so that the first nonzero entry is 1.
    pub fn normalize_leading(a: &[Scalar]) -> Vector {
        match leading_index(a) {
            None => a.to_vec(),
            Some(i) => {
                let inv = a[i].recip().expect("nonzero leading entry");
                scale(&inv, a)
            }
        }
    }

    pub fn to_text(a: &[Scalar]) -> String {
        let parts: Vec<String> = a.iter().map(Scalar::to_text).collect();
        format!("({})", parts.join(", "))
    }
}
