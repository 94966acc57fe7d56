//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; zero is 0/1. Those invariants are maintained by
//! `num_rational::BigRational`, which this crate uses as its scalar field.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational scalar.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// The fraction `n/d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Canonical string form: `n` for integers, `n/d` otherwise, `-` in front.
pub fn rat_string(r: &Rat) -> alloc::string::String {
    use alloc::string::ToString;
    r.to_string()
}

/// True if `r` is a (positive or negative) unit, i.e. |r| = 1.
pub fn is_unit(r: &Rat) -> bool {
    r.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert!(r.denom() > &Int::from(0));
        assert_eq!(rat_string(&r), "-2/3");
        assert_eq!(rat_string(&rat(6, 3)), "2");
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &Int::from(1));
    }
}
