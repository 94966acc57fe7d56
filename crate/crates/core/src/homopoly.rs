//! Homogeneous bivariate polynomials in `s`, `t` of a fixed total degree.
//!
//! `coeffs[i]` multiplies `s^(degree-i) * t^i`, so index 0 is the pure
//! `s`-power. The zero polynomial of every degree is representable; two
//! zero polynomials of different degrees are different values.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rat::Rat;
use crate::unipoly::{push_term, var_power, UniPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomoPoly {
    degree: usize,
    coeffs: Vec<Rat>,
}

impl HomoPoly {
    pub fn new(degree: usize, coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "homogeneous coefficient count");
        HomoPoly { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomoPoly {
            degree,
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    /// `c * s^(degree-i) * t^i`
    pub fn monomial(degree: usize, i: usize, c: Rat) -> Self {
        let mut p = HomoPoly::zero(degree);
        p.coeffs[i] = c;
        p
    }

    /// `a*s + b*t`
    pub fn linear(a: Rat, b: Rat) -> Self {
        HomoPoly {
            degree: 1,
            coeffs: vec![a, b],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplicity of `t` dividing this polynomial; `degree + 1` sentinel for zero.
    fn mult_t(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.degree + 1)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        HomoPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let mut spow = vec![Rat::from_integer(1.into())];
        let mut tpow = spow.clone();
        for k in 1..=self.degree {
            spow.push(&spow[k - 1] * s);
            tpow.push(&tpow[k - 1] * t);
        }
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c * &spow[self.degree - i] * &tpow[i];
            }
        }
        acc
    }

    /// Restriction to the affine chart t = 1, x = s/t.
    pub fn dehomogenize(&self) -> UniPoly {
        let mut coeffs = vec![Rat::zero(); self.degree + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[self.degree - i] = c.clone();
        }
        UniPoly::new(coeffs)
    }

    /// Lifts `p(x)` to degree `degree`, padding with powers of `t`.
    /// Panics if `deg p > degree`.
    pub fn homogenize(p: &UniPoly, degree: usize) -> Self {
        let mut out = HomoPoly::zero(degree);
        for (k, c) in p.coeffs().iter().enumerate() {
            assert!(k <= degree, "polynomial degree exceeds homogenization target");
            out.coeffs[degree - k] = c.clone();
        }
        out
    }

    /// Substitution (s, t) -> (a*s + b*t, c*s + d*t).
    pub fn substitute_linear(&self, a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Self {
        let u = HomoPoly::linear(a.clone(), b.clone());
        let v = HomoPoly::linear(c.clone(), d.clone());
        let mut upow = vec![HomoPoly::new(0, vec![Rat::from_integer(1.into())])];
        let mut vpow = upow.clone();
        for k in 1..=self.degree {
            upow.push(&upow[k - 1] * &u);
            vpow.push(&vpow[k - 1] * &v);
        }
        let mut acc = HomoPoly::zero(self.degree);
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if !coeff.is_zero() {
                acc = &acc + &(&upow[self.degree - i] * &vpow[i]).scale(coeff);
            }
        }
        acc
    }

    /// Monic-normalized gcd (leading `s`-power coefficient 1); gcd(0, 0) = 0 of degree 0.
    pub fn gcd(&self, other: &HomoPoly) -> HomoPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let a = self.mult_t().min(other.mult_t());
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let gd = g.degree().expect("gcd of nonzero polynomials");
        // t^a * homogenize(g, gd)
        let mut shifted = HomoPoly::zero(a + gd);
        for (k, c) in g.coeffs().iter().enumerate() {
            shifted.coeffs[gd - k + a] = c.clone();
        }
        shifted
    }

    /// Divides exactly by `g`; panics when the division is not exact.
    pub fn exact_div(&self, g: &HomoPoly) -> HomoPoly {
        assert!(!g.is_zero(), "division by zero homogeneous polynomial");
        if self.is_zero() {
            assert!(g.degree() <= self.degree);
            return HomoPoly::zero(self.degree - g.degree);
        }
        let target = self.degree - g.degree;
        let q = self.dehomogenize().exact_div(&g.dehomogenize());
        HomoPoly::homogenize(&q, target)
    }

    /// Scaled so the first nonzero coefficient (highest `s`-power) is 1.
    pub fn normalized(&self) -> HomoPoly {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    pub fn to_string_st(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let spow = var_power("s", self.degree - i);
            let tpow = var_power("t", i);
            let vars = match (spow.is_empty(), tpow.is_empty()) {
                (true, true) => String::new(),
                (false, true) => spow,
                (true, false) => tpow,
                (false, false) => {
                    let mut v = spow;
                    v.push('*');
                    v.push_str(&tpow);
                    v
                }
            };
            push_term(&mut out, c, &vars);
        }
        out
    }
}

impl fmt::Display for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_st())
    }
}

impl Add for &HomoPoly {
    type Output = HomoPoly;
    fn add(self, rhs: &HomoPoly) -> HomoPoly {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in homogeneous sum");
        HomoPoly {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &HomoPoly {
    type Output = HomoPoly;
    fn sub(self, rhs: &HomoPoly) -> HomoPoly {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in homogeneous difference");
        HomoPoly {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &HomoPoly {
    type Output = HomoPoly;
    fn neg(self) -> HomoPoly {
        HomoPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HomoPoly {
    type Output = HomoPoly;
    fn mul(self, rhs: &HomoPoly) -> HomoPoly {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![Rat::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        HomoPoly { degree, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn st(degree: usize, coeffs: &[i64]) -> HomoPoly {
        HomoPoly::new(degree, coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn gcd_strips_common_factor() {
        // gcd(s*t, t^2) = t
        let a = st(2, &[0, 1, 0]);
        let b = st(2, &[0, 0, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, st(1, &[0, 1]));
        assert_eq!(a.exact_div(&g), st(1, &[1, 0]));
        assert_eq!(b.exact_div(&g), st(1, &[0, 1]));
    }

    #[test]
    fn gcd_mixed() {
        // gcd(s^4 t^2, s^3 t^3) = s^3 t^2
        let a = st(6, &[0, 0, 1, 0, 0, 0, 0]);
        let b = st(6, &[0, 0, 0, 1, 0, 0, 0]);
        let g = a.gcd(&b);
        assert_eq!(g, st(5, &[0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn dehomogenize_homogenize_roundtrip() {
        let p = st(3, &[2, 0, -1, 5]); // 2s^3 - s t^2 + 5 t^3
        let u = p.dehomogenize();
        assert_eq!(HomoPoly::homogenize(&u, 3), p);
    }

    #[test]
    fn substitution_swap() {
        // (s, t) -> (t, s) on s^2 t gives t^2 s
        let p = st(3, &[0, 1, 0, 0]);
        let q = p.substitute_linear(&rat_int(0), &rat_int(1), &rat_int(1), &rat_int(0));
        assert_eq!(q, st(3, &[0, 0, 1, 0]));
    }

    #[test]
    fn display_canonical() {
        let p = HomoPoly::new(2, vec![crate::rat::rat(3, 2), rat_int(0), rat_int(-1)]);
        assert_eq!(p.to_string_st(), "3/2*s^2 - t^2");
    }
}
