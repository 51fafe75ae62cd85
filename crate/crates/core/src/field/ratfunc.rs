//! Rational functions in one indeterminate over the rationals.

use std::sync::Arc;

use num_rational::BigRational;

use super::poly::Poly;

/// `num / den` in lowest terms with `den` monic. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    var: Arc<str>,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and canonicalizes `num / den`. Returns `None` when `den` is zero.
    pub fn new(var: Arc<str>, num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero(var));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").recip();
        Some(RatFunc { var, num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(var: Arc<str>, num: Poly) -> Self {
        RatFunc { var, num, den: Poly::one() }
    }

    pub fn constant(var: Arc<str>, c: BigRational) -> Self {
        Self::from_poly(var, Poly::constant(c))
    }

    pub fn zero(var: Arc<str>) -> Self {
        RatFunc { var, num: Poly::zero(), den: Poly::one() }
    }

    pub fn var(&self) -> &Arc<str> {
        &self.var
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFunc { var: self.var.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.var.clone(), self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(self.var.clone(), num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Cross-cancel before multiplying to keep degrees down.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, _) = self.num.div_rem(&nonzero_or_one(g1.clone()));
        let (d2, _) = other.den.div_rem(&nonzero_or_one(g1));
        let (b, _) = other.num.div_rem(&nonzero_or_one(g2.clone()));
        let (d1, _) = self.den.div_rem(&nonzero_or_one(g2));
        Self::new(self.var.clone(), a.mul(&b), d1.mul(&d2)).expect("nonzero denominator")
    }

    /// `None` if `self` is zero.
    pub fn recip(&self) -> Option<Self> {
        Self::new(self.var.clone(), self.den.clone(), self.num.clone())
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text(&self.var)
        } else {
            format!("({})/({})", self.num.to_text(&self.var), self.den.to_text(&self.var))
        }
    }
}

fn nonzero_or_one(p: Poly) -> Poly {
    if p.is_zero() {
        Poly::one()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    #[test]
    fn canonical_form_cancels_and_makes_monic() {
        let v: Arc<str> = Arc::from("a");
        // (2a + 2) / (4a^2 - 4) = (1/2) / (a - 1)
        let f = RatFunc::new(v.clone(), p(&[2, 2]), p(&[-4, 0, 4])).unwrap();
        assert_eq!(f.denom(), &p(&[-1, 1]));
        assert_eq!(f.numer(), &Poly::constant(BigRational::new(1.into(), 2.into())));
        assert!(RatFunc::new(v, p(&[1]), Poly::zero()).is_none());
    }

    #[test]
    fn field_operations() {
        let v: Arc<str> = Arc::from("a");
        let x = RatFunc::new(v.clone(), p(&[0, 1]), p(&[1, 1])).unwrap();
        assert!(x.sub(&x).is_zero());
        assert!(x.mul(&x.recip().unwrap()).is_one());
        let sum = x.add(&RatFunc::new(v.clone(), p(&[1]), p(&[1, 1])).unwrap());
        assert!(sum.is_one());
        assert_eq!(x.to_text(), "(a)/(a + 1)");
    }
}
