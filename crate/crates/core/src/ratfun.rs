//! Univariate rational functions over the rationals.
//!
//! Canonical form: denominator monic and nonzero, numerator and denominator
//! coprime, zero is 0/1. Equality is therefore structural.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    /// `num/den` in lowest terms with monic denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFun {
                num,
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFun {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(UniPoly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        RatFun::from_poly(UniPoly::x())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFun) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient rule, reduced.
    pub fn derivative(&self) -> Self {
        if self.is_polynomial() {
            return RatFun::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduced(num, den)
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let dv = self.den.eval(x);
        if dv == Rat::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(x) / dv)
    }

    /// Substitutes x -> (a x + b)/(c x + d); the Moebius map must be invertible.
    pub fn compose_moebius(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        let lin_num = UniPoly::new(alloc::vec![b.clone(), a.clone()]);
        let lin_den = UniPoly::new(alloc::vec![d.clone(), c.clone()]);
        let k = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let lift = |p: &UniPoly| -> UniPoly {
            // sum p_j (a x + b)^j (c x + d)^(k - j)
            let mut acc = UniPoly::zero();
            for (j, coeff) in p.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let term = &lin_num.pow(j) * &lin_den.pow(k - j);
                acc = &acc + &term.scale(coeff);
            }
            acc
        };
        Self::reduced(lift(&self.num), lift(&self.den))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_canonical_string(self, "x"))
    }
}

pub fn to_canonical_string(r: &RatFun, var: &str) -> String {
    use alloc::format;
    if r.is_polynomial() {
        r.num.to_string_var(var)
    } else {
        format!(
            "({})/({})",
            r.num.to_string_var(var),
            r.den.to_string_var(var)
        )
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::reduced(num, den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::reduced(num, den)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        // cross-reduce before multiplying to keep the gcd calls small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1) };
        let d2 = if g1.is_one() { rhs.den.clone() } else { rhs.den.exact_div(&g1) };
        let n2 = if g2.is_one() { rhs.num.clone() } else { rhs.num.exact_div(&g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2) };
        RatFun::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn reduce_cancels_and_makes_monic() {
        // (x^2 - 1) / (2x - 2) = (x + 1)/2
        let f = RatFun::new(UniPoly::from_i64(&[-1, 0, 1]), UniPoly::from_i64(&[-2, 2])).unwrap();
        assert_eq!(f.numerator(), &UniPoly::new(alloc::vec![rat(1, 2), rat(1, 2)]));
        assert!(f.is_polynomial());
    }

    #[test]
    fn zero_numerator_collapses() {
        let f = RatFun::new(UniPoly::zero(), UniPoly::x()).unwrap();
        assert!(f.is_zero());
        assert!(f.denominator().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFun::new(UniPoly::one(), UniPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_inverse() {
        let f = RatFun::new(UniPoly::from_i64(&[1, 2]), UniPoly::from_i64(&[0, 0, 3])).unwrap();
        let g = f.inv().unwrap();
        assert_eq!(&f * &g, RatFun::one());
    }

    #[test]
    fn derivative_of_inverse_x() {
        let f = RatFun::new(UniPoly::one(), UniPoly::x()).unwrap();
        let fp = f.derivative();
        // -1/x^2
        assert_eq!(fp.numerator(), &UniPoly::from_i64(&[-1]));
        assert_eq!(fp.denominator(), &UniPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn moebius_composition() {
        // f(x) = x^2 composed with x -> 1/x gives 1/x^2
        let f = RatFun::from_poly(UniPoly::from_i64(&[0, 0, 1]));
        let g = f.compose_moebius(&rat_int(0), &rat_int(1), &rat_int(1), &rat_int(0));
        assert_eq!(g.numerator(), &UniPoly::one());
        assert_eq!(g.denominator(), &UniPoly::from_i64(&[0, 0, 1]));
    }
}
