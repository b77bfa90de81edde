//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! All engine code is generic over [`Field`]; the two implementations are
//! selected at run time from a [`FieldSpec`]. No floating point anywhere.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt::Debug;
use std::str::FromStr;

/// A runtime description of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// Characteristic zero: arbitrary-precision rationals.
    Rational,
    /// A prime field `F_p`, `p < 2^31`.
    Prime(u64),
}

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<Self> {
        match characteristic {
            0 => Ok(FieldSpec::Rational),
            p if p < (1 << 31) && is_prime(p) => Ok(FieldSpec::Prime(p)),
            p => Err(Error::BadCharacteristic(p)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Exact field operations over a runtime-chosen field.
///
/// Implementations carry whatever context the element type needs (the prime
/// modulus for `F_p`); elements themselves stay plain data.
pub trait Field: Clone + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync + 'static;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; must not be called on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    /// Exact literal used in serialized matrices (`-3/4`, `17`, ...).
    fn elem_to_string(&self, a: &Self::Elem) -> String;
    fn elem_from_str(&self, s: &str) -> Result<Self::Elem>;
}

/// The field of rationals with arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero());
        a.recip()
    }
    fn elem_to_string(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn elem_from_str(&self, s: &str) -> Result<BigRational> {
        let parse_int =
            |t: &str| BigInt::from_str(t).map_err(|e| Error::Parse(format!("bad rational `{s}`: {e}")));
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(parse_int(s)?)),
            Some((num, den)) => {
                let d = parse_int(den)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("bad rational `{s}`: zero denominator")));
                }
                Ok(BigRational::new(parse_int(num)?, d))
            }
        }
    }
}

/// A prime field `F_p` with `p < 2^31`; elements are least residues in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match FieldSpec::new(p)? {
            FieldSpec::Prime(p) => Ok(PrimeField { p }),
            FieldSpec::Rational => Err(Error::BadCharacteristic(0)),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        // p < 2^31, so the product fits u64.
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn elem_to_string(&self, a: &u64) -> String {
        a.to_string()
    }
    fn elem_from_str(&self, s: &str) -> Result<u64> {
        let v = u64::from_str(s).map_err(|e| Error::Parse(format!("bad residue `{s}`: {e}")))?;
        Ok(v % self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(2147483647).is_ok()); // 2^31 - 1 is prime
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(1 << 31).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        let a = f.from_i64(-3); // 4 mod 7
        assert_eq!(a, 4);
        assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        assert_eq!(f.sub(&f.zero(), &a), 3);
    }

    #[test]
    fn rational_literals_round_trip() {
        let f = Rationals;
        for s in ["0", "-17", "3/4", "-22/7"] {
            let e = f.elem_from_str(s).unwrap();
            assert_eq!(f.elem_to_string(&e), s);
        }
        assert!(f.elem_from_str("1/0").is_err());
    }
}
