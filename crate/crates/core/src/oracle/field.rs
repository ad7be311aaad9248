use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The exact scalars the oracle can work over.
pub trait Field:
    Copy
    + Eq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv(self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl Field for Rational64 {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
    fn inv(self) -> Self {
        self.recip()
    }
}

pub const PRIME: u32 = 65521;

/// Integers modulo 65521.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u32);

impl Fp {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(PRIME as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp((self.0 + rhs.0) % PRIME)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp((self.0 + PRIME - rhs.0) % PRIME)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u64 * rhs.0 as u64) % PRIME as u64) as u32)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp((PRIME - self.0) % PRIME)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat: a^(p-2).
        let mut base = self;
        let mut exp = PRIME - 2;
        let mut acc = Fp(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

/// Field selection for command-line and suite configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    #[default]
    Rational,
    Prime,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Rational => "rational",
            FieldKind::Prime => "prime",
        })
    }
}

impl FromStr for FieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rational" => Ok(FieldKind::Rational),
            "prime" => Ok(FieldKind::Prime),
            other => Err(Error::Parse(format!("unknown field `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp::new(-1);
        assert_eq!(a.value(), PRIME - 1);
        assert_eq!(a + Fp::one(), Fp::zero());
        for v in [1, 2, 3, 12345, 65520] {
            let x = Fp::new(v);
            assert_eq!(x * x.inv(), Fp::one());
        }
        assert_eq!(Fp::new(3) - Fp::new(5), Fp::new(-2));
        assert_eq!(-Fp::new(0), Fp::zero());
    }

    #[test]
    fn rational_field() {
        let x = <Rational64 as Field>::from_i64(4);
        assert_eq!(x * x.inv(), <Rational64 as Field>::one());
    }
}
