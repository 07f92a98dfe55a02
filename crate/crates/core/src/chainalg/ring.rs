use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients for chains: ℤ, ℚ or ℤ/p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl CoefficientRing {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientRing::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    pub fn field(&self) -> Result<Field> {
        match *self {
            CoefficientRing::Integers => Err(Error::FieldRequired(self.to_string())),
            CoefficientRing::Rationals => Ok(Field::Rationals),
            CoefficientRing::PrimeField(p) => Ok(Field::Prime(p)),
        }
    }

    /// Canonical representative of an integer in this ring.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match *self {
            CoefficientRing::PrimeField(p) => x.mod_floor(&BigInt::from(p)),
            _ => x.clone(),
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => f.write_str("Z"),
            CoefficientRing::Rationals => f.write_str("Q"),
            CoefficientRing::PrimeField(p) => write!(f, "Z/{p}"),
        }
    }
}

impl From<Field> for CoefficientRing {
    fn from(f: Field) -> Self {
        match f {
            Field::Rationals => CoefficientRing::Rationals,
            Field::Prime(p) => CoefficientRing::PrimeField(p),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A coefficient field. Elements are carried as `BigRational`; for ℤ/p they
/// are integers in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    fn modulus(p: u64) -> BigInt {
        BigInt::from(p)
    }

    pub fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    pub fn one(&self) -> BigRational {
        BigRational::one()
    }

    pub fn from_int(&self, x: &BigInt) -> BigRational {
        match *self {
            Field::Rationals => BigRational::from_integer(x.clone()),
            Field::Prime(p) => BigRational::from_integer(x.mod_floor(&Self::modulus(p))),
        }
    }

    pub fn from_i64(&self, x: i64) -> BigRational {
        self.from_int(&BigInt::from(x))
    }

    /// Normal form of an element.
    pub fn normalize(&self, x: BigRational) -> BigRational {
        match *self {
            Field::Rationals => x,
            Field::Prime(p) => {
                let m = Self::modulus(p);
                let num = x.numer().mod_floor(&m);
                let den = x.denom().mod_floor(&m);
                let inv = mod_inverse(&den, &m).expect("denominator invertible mod p");
                BigRational::from_integer((num * inv).mod_floor(&m))
            }
        }
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.normalize(-a)
    }

    pub fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        match *self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let m = Self::modulus(p);
                BigRational::from_integer(mod_inverse(&a.to_integer(), &m).expect("invertible"))
            }
        }
    }

    pub fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.mul(a, &self.inv(b))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd.signum()).mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(CoefficientRing::prime(4).is_err());
        assert_eq!(CoefficientRing::prime(7).unwrap().to_string(), "Z/7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        let three = f.from_i64(3);
        assert_eq!(f.inv(&three), f.from_i64(5));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.div(&f.one(), &three), f.from_i64(5));
        assert_eq!(f.normalize(BigRational::new(1.into(), 2.into())), f.from_i64(4));
    }

    #[test]
    fn integers_are_not_a_field() {
        assert!(CoefficientRing::Integers.field().is_err());
        assert_eq!(CoefficientRing::Rationals.field().unwrap(), Field::Rationals);
    }
}
