use core::fmt;

use super::gcd::gcd;
use super::poly::{mono_sub, Poly, TermOrder, ONE_MONO};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A reduced quotient of two polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` has leading coefficient 1 and,
/// in Laurent rings, no monomial factor. Two fractions are equal exactly when
/// their canonical records are identical, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction<O: TermOrder> {
    num: Poly<O>,
    den: Poly<O>,
}

impl<O: TermOrder> Default for Fraction<O> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<O: TermOrder> From<Poly<O>> for Fraction<O> {
    fn from(p: Poly<O>) -> Self {
        Fraction { num: p, den: Poly::one() }
    }
}

impl<O: TermOrder> Fraction<O> {
    pub fn zero() -> Self {
        Poly::zero().into()
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        Poly::from_int(n).into()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::constant(c).into()
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly<O>, den: Poly<O>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(q) = num.div_exact(&den) {
            return Ok(q.into());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::normalize_den(num, den))
    }

    /// Builds `num / ∏ factors` where every factor is irreducible, cancelling
    /// by trial division instead of a gcd. The result is in canonical form.
    pub fn over_irreducibles(num: Poly<O>, factors: &[Poly<O>]) -> Result<Self> {
        if factors.iter().any(Poly::is_zero) {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let mut num = num;
        let mut den = Poly::one();
        for f in factors {
            match num.div_exact(f) {
                Some(q) => num = q,
                None => den = den.mul(f),
            }
        }
        Ok(Self::normalize_den(num, den))
    }

    /// Fixes the unit ambiguity of an already coprime pair.
    fn normalize_den(mut num: Poly<O>, mut den: Poly<O>) -> Self {
        if O::LAURENT {
            let (m, rest) = den.split_monomial();
            if m != ONE_MONO {
                den = rest;
                num = num.shift(&mono_sub(&ONE_MONO, &m));
            }
        }
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip().expect("nonzero denominator");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if den.is_one() {
            return num.into();
        }
        Fraction { num, den }
    }

    pub fn num(&self) -> &Poly<O> {
        &self.num
    }

    pub fn den(&self) -> &Poly<O> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` when the denominator is 1 (a genuine ring element).
    pub fn as_poly(&self) -> Option<&Poly<O>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        let combine = |a: &Poly<O>, b: &Poly<O>| if negate { a.sub(b) } else { a.add(b) };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        if self.den == other.den {
            let num = combine(&self.num, &other.num);
            if self.den.is_one() {
                return num.into();
            }
            return Self::new(num, self.den.clone()).expect("nonzero denominator");
        }
        if other.den.is_one() {
            let num = combine(&self.num, &other.num.mul(&self.den));
            return Self::normalize_den(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = combine(&self.num.mul(&other.den), &other.num);
            return Self::normalize_den(num, other.den.clone());
        }
        // Henrici: with g = gcd(b, d) only g can share factors with the sum.
        let g = gcd(&self.den, &other.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = combine(&self.num.mul(&d1), &other.num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = b1.mul(&other.den);
        if g.is_one() {
            return Self::normalize_den(num, den);
        }
        let h = gcd(&num, &g);
        if h.is_one() {
            Self::normalize_den(num, den)
        } else {
            Self::normalize_den(num.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"))
        }
    }

    pub fn neg(&self) -> Self {
        Fraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        match (self.den.is_one(), other.den.is_one()) {
            (true, true) => self.num.mul(&other.num).into(),
            (true, false) => Self::mul_poly_frac(&self.num, other),
            (false, true) => Self::mul_poly_frac(&other.num, self),
            (false, false) => {
                let g1 = gcd(&self.num, &other.den);
                let g2 = gcd(&other.num, &self.den);
                let a = self.num.div_exact(&g1).expect("gcd divides");
                let d = other.den.div_exact(&g1).expect("gcd divides");
                let c = other.num.div_exact(&g2).expect("gcd divides");
                let b = self.den.div_exact(&g2).expect("gcd divides");
                Self::normalize_den(a.mul(&c), b.mul(&d))
            }
        }
    }

    fn mul_poly_frac(p: &Poly<O>, f: &Self) -> Self {
        if let Some(c) = p.as_constant() {
            return f.scale(&c);
        }
        if let Some(q) = p.div_exact(&f.den) {
            return q.mul(&f.num).into();
        }
        let g = gcd(p, &f.den);
        let a = p.div_exact(&g).expect("gcd divides");
        let d = f.den.div_exact(&g).expect("gcd divides");
        Self::normalize_den(a.mul(&f.num), d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Fraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly<O>) -> Self {
        if self.den.is_one() {
            return self.num.mul(p).into();
        }
        Self::mul_poly_frac(p, self)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::new(self.num.clone(), other.num.clone());
        }
        Ok(self.mul(&other.recip()?))
    }

    /// Divides by a ring element, trying exact division before reducing.
    pub fn div_poly(&self, p: &Poly<O>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() {
            return Self::new(self.num.clone(), p.clone());
        }
        self.div(&p.clone().into())
    }

    pub fn pow(&self, e: u32) -> Self {
        Fraction::normalize_den(self.num.pow(e), self.den.pow(e))
    }

    /// Applies a ring automorphism of the polynomial ring to both parts.
    pub fn map<F: Fn(&Poly<O>) -> Poly<O>>(&self, f: F) -> Self {
        if self.den.is_one() {
            return f(&self.num).into();
        }
        Self::normalize_den(f(&self.num), f(&self.den))
    }

    /// Applies a ring homomorphism that may create common factors
    /// (a specialization), reducing afterwards.
    pub fn specialize<F: Fn(&Poly<O>) -> Poly<O>>(&self, f: F) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }
}

impl<O: TermOrder> fmt::Debug for Fraction<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{GrLex, LatticeLex, Mono};

    type HF = Fraction<GrLex>;
    type KF = Fraction<LatticeLex>;
    type H = Poly<GrLex>;
    type K = Poly<LatticeLex>;

    fn e(lambda: &[i32]) -> K {
        let mut m: Mono = ONE_MONO;
        m[..lambda.len()].copy_from_slice(lambda);
        K::monomial(m, Rational::one())
    }

    #[test]
    fn root_over_itself_is_one() {
        let a: HF = H::var(0).into();
        assert!(a.div(&a).unwrap().is_one());
    }

    #[test]
    fn geometric_series_quotient() {
        let q = KF::new(K::one().sub(&e(&[2])), K::one().sub(&e(&[1]))).unwrap();
        assert_eq!(q, KF::from(K::one().add(&e(&[1]))));
    }

    #[test]
    fn difference_of_equal_fractions_is_zero_over_one() {
        let inv = HF::one().div(&H::var(0).into()).unwrap();
        let z = inv.sub(&inv);
        assert!(z.is_zero());
        assert!(z.den().is_one());
    }

    #[test]
    fn denominator_is_monic_and_monomial_free() {
        // 1/(e^{-α} - 1) = -e^{α}/(e^{α} - 1)
        let f = KF::new(K::one(), e(&[-1]).sub(&K::one())).unwrap();
        assert_eq!(f.den(), &e(&[1]).sub(&K::one()));
        assert_eq!(f.num(), &e(&[1]).neg());
        let g = HF::new(H::one(), H::var(0).scale(&Rational::from_int(-2))).unwrap();
        assert_eq!(g.den(), &H::var(0));
        assert_eq!(g.num(), &H::constant(Rational::new(-1, 2)));
    }

    #[test]
    fn sums_with_shared_factors_reduce() {
        let a = H::var(0);
        let b = H::var(1);
        // 1/(a b) + 1/(a (a+b)) = (a + 2b) / (a b (a+b))... check against cross-multiplication
        let x = HF::new(H::one(), a.mul(&b)).unwrap();
        let y = HF::new(H::one(), a.mul(&a.add(&b))).unwrap();
        let s = x.add(&y);
        let lhs = s.num().mul(&a.mul(&b).mul(&a.mul(&a.add(&b))));
        let rhs = s.den().mul(&a.mul(&a.add(&b)).add(&a.mul(&b)));
        assert_eq!(lhs, rhs);
        // (1/a) * a = 1 and (a/b) - (a/b) = 0
        let inv = HF::new(H::one(), a.clone()).unwrap();
        assert!(inv.mul_poly(&a).is_one());
    }
}
