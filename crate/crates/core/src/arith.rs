//! Arbitrary-precision integer and rational scalars.
//!
//! Everything downstream computes over these; no floating point anywhere.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// gcd of a slice, ignoring signs; zero for the empty slice or all zeros.
pub fn content(values: &[Int]) -> Int {
    let mut g = Int::zero();
    for v in values {
        g = g.gcd(v);
    }
    g
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Floor of a rational as an integer.
pub fn floor_int(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn ceil_int(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Sign as -1, 0, 1.
pub fn sign_rat(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn sign_int(v: &Int) -> i32 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// `p/q` rendering; integers render without the denominator.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_basics() {
        assert_eq!(content(&[int(2), int(2), int(4)]), int(2));
        assert_eq!(content(&[int(0), int(0), int(-3)]), int(3));
        assert_eq!(content(&[int(5), int(-4), int(-15)]), int(1));
        assert_eq!(content(&[]), int(0));
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat_to_string(&rat(-1, 2)), "-1/2");
        assert_eq!(rat_to_string(&rat(6, 3)), "2");
    }
}
