use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients are stored as `BigRational` for both field kinds. Over a
/// prime field every stored value is an integer in `[0, p)`.
pub type Coeff = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not a prime")));
        }
        Ok(CoefficientField::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    /// Brings an arbitrary rational into canonical form for this field.
    pub fn normalize(&self, c: Coeff) -> Result<Coeff> {
        match self {
            CoefficientField::Rationals => Ok(c),
            CoefficientField::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let inv = mod_inverse(&den, &p);
                Ok(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.normalize(BigRational::from_integer(BigInt::from(n)))
            .expect("integers have unit denominator")
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.reduce(-a)
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            CoefficientField::Rationals => Ok(a.recip()),
            CoefficientField::PrimeField(p) => {
                let p = BigInt::from(*p);
                Ok(BigRational::from_integer(mod_inverse(a.numer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    // integer-valued inputs only over prime fields
    fn reduce(&self, c: Coeff) -> Coeff {
        match self {
            CoefficientField::Rationals => c,
            CoefficientField::PrimeField(p) => {
                debug_assert!(c.is_integer());
                BigRational::from_integer(c.numer().mod_floor(&BigInt::from(*p)))
            }
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "Q"),
            CoefficientField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let eg = a.mod_floor(p).extended_gcd(p);
    debug_assert!(eg.gcd.is_one());
    eg.x.mod_floor(p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Renders a coefficient magnitude as `a` or `a/b`.
pub(crate) fn render_abs(c: &Coeff) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(CoefficientField::prime(7).is_ok());
        assert!(CoefficientField::prime(9).is_err());
        assert!(CoefficientField::prime(1).is_err());
        assert!(CoefficientField::prime(0).is_err());
    }

    #[test]
    fn prime_field_normalizes_fractions() {
        let f = CoefficientField::prime(7).unwrap();
        let c = f.normalize(BigRational::new(BigInt::from(3), BigInt::from(4))).unwrap();
        // 4 * 6 = 24 = 3 mod 7
        assert_eq!(c, BigRational::from_integer(BigInt::from(6)));
        let neg = f.from_int(-1);
        assert_eq!(neg, BigRational::from_integer(BigInt::from(6)));
        assert!(f
            .normalize(BigRational::new(BigInt::from(1), BigInt::from(14)))
            .is_err());
    }

    #[test]
    fn inverse_round_trips() {
        let f = CoefficientField::prime(11).unwrap();
        for n in 1..11 {
            let a = f.from_int(n);
            let b = f.inv(&a).unwrap();
            assert!(f.mul(&a, &b).is_one());
        }
    }
}
