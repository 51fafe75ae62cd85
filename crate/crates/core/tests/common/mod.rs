#![allow(dead_code)]

pub mod oracle;

use liecohom::field::{Field, Matrix, Scalar};
use liecohom::LieAlgebra;
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn q(n: i64) -> Scalar {
    Field::Rational.from_int(n)
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Field::Rational.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Two-step nilpotent algebra on `n` generators whose last `center` basis
/// vectors are central; `coeffs` is consumed cyclically.
pub fn two_step_nilpotent(n: usize, center: usize, coeffs: &[i64]) -> LieAlgebra {
    let free = n - center;
    let mut constants = Vec::new();
    let mut t = 0;
    for i in 0..free {
        for j in i + 1..free {
            for k in free..n {
                let c = coeffs[t % coeffs.len()];
                t += 1;
                if c != 0 {
                    constants.push((i, j, k, q(c)));
                }
            }
        }
    }
    LieAlgebra::from_constants(format!("nil{n}_{center}"), n, &Field::Rational, &constants).unwrap()
}

/// `g = L·U` with unit diagonals, entries below and above taken from `offdiag`.
pub fn unimodular(n: usize, offdiag: &[i64]) -> Matrix {
    let f = Field::Rational;
    let mut l = Matrix::identity(&f, n);
    let mut u = Matrix::identity(&f, n);
    let mut t = 0;
    let mut next = || {
        let v = offdiag[t % offdiag.len()];
        t += 1;
        q(v)
    };
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, next());
            u.set(j, i, next());
        }
    }
    l.mul(&u).unwrap()
}

/// The same algebra in the basis given by the columns of `g`.
pub fn change_basis(alg: &LieAlgebra, g: &Matrix) -> LieAlgebra {
    let n = alg.dim();
    let inv = g.inverse().unwrap();
    let cols: Vec<_> = (0..n).map(|i| g.column(i)).collect();
    let brackets = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| {
        let b = alg.bracket(&cols[i], &cols[j]).unwrap();
        (i, j, inv.mul_vec(&b).unwrap())
    });
    LieAlgebra::new(format!("{}'", alg.name()), n, alg.field(), brackets.collect::<Vec<_>>()).unwrap()
}
