//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending, index = degree of `x`. The zero
//! polynomial is the empty list and its degree is `None` (a real sentinel,
//! never `-1` arithmetic).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat_string, Int, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * x^k`
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&n| Rat::from_integer(Int::from(n))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Same polynomial with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(Int::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero; callers guard.
    pub fn div_rem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        if self.coeffs.len() < div.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let lc_inv = div.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let dq = self.coeffs.len() - div.coeffs.len();
        let mut quot = vec![Rat::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] = &rem[k + i] - &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero (internal use after gcd).
    pub fn exact_div(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(div);
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    ///
    /// Runs a primitive polynomial remainder sequence over the integers so
    /// coefficient growth stays polynomial.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return UniPoly::one();
        }
        let mut a = to_primitive_int(self);
        let mut b = to_primitive_int(other);
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.len() == 1 {
                // nonzero constant divides everything
                return UniPoly::one();
            }
            let r = pseudo_rem(&a, &b);
            if r.is_empty() {
                break;
            }
            a = b;
            b = primitive_part(r);
        }
        from_int(&b).monic()
    }

    /// Horner evaluation with coefficients lifted into another value type.
    pub fn eval_with<T>(&self, x: &T, lift: impl Fn(&Rat) -> T, mul: impl Fn(&T, &T) -> T, add: impl Fn(&T, &T) -> T, zero: T) -> T {
        let mut acc = zero;
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x), &lift(c));
        }
        acc
    }

    /// Canonical string with descending powers in the given variable.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, &var_power(var, k));
        }
        out
    }
}

/// Appends `coeff * vars` to a canonical polynomial string.
pub(crate) fn push_term(out: &mut String, c: &Rat, vars: &str) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let a = c.abs();
    if vars.is_empty() {
        out.push_str(&rat_string(&a));
    } else {
        if !a.is_one() {
            out.push_str(&rat_string(&a));
            out.push('*');
        }
        out.push_str(vars);
    }
}

pub(crate) fn var_power(var: &str, k: usize) -> String {
    use alloc::format;
    match k {
        0 => String::new(),
        1 => String::from(var),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

// --- integer helpers for the primitive remainder sequence ---

fn to_primitive_int(p: &UniPoly) -> Vec<Int> {
    let mut lcm = Int::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = Int::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

/// Remainder of `lc(b)^(da-db+1) * a` divided by `b`, over the integers.
fn pseudo_rem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<Int> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for i in 0..db {
            r[dr - db + i] -= &lr * &b[i];
        }
        r.truncate(dr);
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn from_int(v: &[Int]) -> UniPoly {
    UniPoly::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn gcd_of_factored_pair() {
        // (x^2 - 1, x - 1) -> x - 1
        let p = UniPoly::from_i64(&[-1, 0, 1]);
        let q = UniPoly::from_i64(&[-1, 1]);
        assert_eq!(p.gcd(&q), q.monic());
    }

    #[test]
    fn gcd_with_zero_is_monic_other() {
        let p = UniPoly::from_i64(&[2, 4]);
        assert_eq!(p.gcd(&UniPoly::zero()), UniPoly::from_i64(&[1, 2]).scale(&crate::rat::rat(1, 2)));
        assert_eq!(UniPoly::zero().gcd(&UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn gcd_of_nonzero_constants_is_one() {
        let p = UniPoly::constant(rat_int(3));
        let q = UniPoly::constant(rat_int(5));
        assert_eq!(p.gcd(&q), UniPoly::one());
    }

    #[test]
    fn division_roundtrip() {
        let p = UniPoly::from_i64(&[1, 0, 0, 1]); // x^3 + 1
        let d = UniPoly::from_i64(&[1, 1]); // x + 1
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::one().degree(), Some(0));
    }

    #[test]
    fn canonical_display() {
        let p = UniPoly::new(vec![rat_int(1), crate::rat::rat(-3, 2), rat_int(1)]);
        assert_eq!(p.to_string_var("x"), "x^2 - 3/2*x + 1");
        assert_eq!(UniPoly::zero().to_string_var("x"), "0");
    }
}
