//! Base fields and their elements.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::rational::{mod_pow, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// The coefficient field: `Q`, or `F_p` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u32,
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub const fn rationals() -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            characteristic: 0,
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) {
            return Err(Error::Field(format!(
                "characteristic {p} must be an odd prime below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimeField,
            characteristic: p as u32,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_char_zero(&self) -> bool {
        self.kind == FieldKind::Rationals
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(Rational::from_int(v)),
            FieldKind::PrimeField => {
                let p = self.characteristic as i64;
                Scalar::Residue {
                    value: v.rem_euclid(p) as u32,
                    modulus: self.characteristic,
                }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Rational(Rational::from(v.clone())),
            FieldKind::PrimeField => {
                let p = BigInt::from(self.characteristic);
                Scalar::Residue {
                    value: v.mod_floor(&p).to_u32().expect("residue fits"),
                    modulus: self.characteristic,
                }
            }
        }
    }

    /// `num / den` in this field; `None` when the denominator is zero in it.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        Some(n * d.inv()?)
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::rationals()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "Fp:{}", self.characteristic),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Self::rationals());
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Field(format!("bad characteristic in {s:?}")))?;
            return Self::prime(p);
        }
        if s == "Fp" {
            return Self::prime(Self::DEFAULT_PRIME as u64);
        }
        Err(Error::Field(format!(
            "unknown field {s:?}; expected Q or Fp:<prime>"
        )))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues carry their modulus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::rationals(),
            Scalar::Residue { modulus, .. } => FieldSpec {
                kind: FieldKind::PrimeField,
                characteristic: *modulus,
            },
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(Rational::ZERO),
            Scalar::Residue { modulus, .. } => Scalar::Residue {
                value: 0,
                modulus: *modulus,
            },
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(Rational::ONE),
            Scalar::Residue { modulus, .. } => Scalar::Residue {
                value: 1,
                modulus: *modulus,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.inv().map(Scalar::Rational),
            Scalar::Residue { value: 0, .. } => None,
            Scalar::Residue { value, modulus } => Some(Scalar::Residue {
                value: mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            }),
        }
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) => {
                debug_assert_eq!(modulus, m2);
                let s = *a as u64 + *b as u64;
                let m = *modulus as u64;
                Scalar::Residue {
                    value: if s >= m { (s - m) as u32 } else { s as u32 },
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (
                Scalar::Residue { value: a, modulus },
                Scalar::Residue {
                    value: b,
                    modulus: m2,
                },
            ) => {
                debug_assert_eq!(modulus, m2);
                Scalar::Residue {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    /// Integer representative: the rational itself, or the residue in `[0, p)`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value as i64),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::rationals());
        let f: FieldSpec = "Fp:32003".parse().unwrap();
        assert_eq!(f.characteristic(), 32003);
        assert_eq!(f.to_string(), "Fp:32003");
        assert!("Fp:32004".parse::<FieldSpec>().is_err());
        assert!("Fp:2".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(-3);
        assert_eq!(&a + &b, f.from_i64(2));
        assert_eq!(&a * &b, f.from_i64(-15));
        assert_eq!(a.inv().unwrap() * a.clone(), f.one());
        assert!(f.zero().inv().is_none());
        assert_eq!(f.from_fraction(&1.into(), &2.into()), Some(f.from_i64(4)));
        assert_eq!(f.from_fraction(&1.into(), &7.into()), None);
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldSpec::rationals();
        let half = q.from_fraction(&1.into(), &2.into()).unwrap();
        assert_eq!(&half + &half, q.one());
        assert_eq!(half.to_string(), "1/2");
        assert_eq!((-half.clone()).to_string(), "-1/2");
        assert!(q.from_fraction(&1.into(), &0.into()).is_none());
    }
}
