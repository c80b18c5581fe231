//! Arbitrary-precision rationals with an inline fast path for small values.
//!
//! Values that fit `i64 / u64` after reduction are always stored inline, so
//! the derived equality and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// Reduced fraction `num / den` with `den > 0`.
    Small(i64, u64),
    Big(Box<BigRational>),
}

impl Rational {
    pub const ZERO: Rational = Rational::Small(0, 1);
    pub const ONE: Rational = Rational::Small(1, 1);

    pub fn from_int(v: i64) -> Self {
        Rational::Small(v, 1)
    }

    /// Builds `num / den`; `None` when `den == 0`.
    pub fn from_fraction(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(num, den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational keeps lowest terms with a positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_u64()) {
            return Rational::Small(n, d);
        }
        Rational::Big(Box::new(r))
    }

    fn from_i128(num: i128, den: u128) -> Self {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den);
        let (num, den) = (num / g as i128, den / g);
        match (i64::try_from(num), u64::try_from(den)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational::Small(s, 1);
                    }
                }
                let num = (*a as i128 * *d as i128).checked_add(*c as i128 * *b as i128);
                match num {
                    // b, d < 2^64 so the product fits in u128.
                    Some(num) => Self::from_i128(num, *b as u128 * *d as u128),
                    None => Self::from_big(self.to_big() + other.to_big()),
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Self::from_big(-self.to_big()),
            },
            Rational::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Rational::ZERO;
                }
                // Cross-reduce first to keep intermediates small.
                let g1 = gcd_u128(a.unsigned_abs() as u128, *d as u128);
                let g2 = gcd_u128(c.unsigned_abs() as u128, *b as u128);
                let num = (*a as i128 / g1 as i128) * (*c as i128 / g2 as i128);
                let den = (*b as u128 / g2) * (*d as u128 / g1);
                match (i64::try_from(num), u64::try_from(den)) {
                    (Ok(n), Ok(m)) => Rational::Small(n, m),
                    _ => Self::from_big(BigRational::new_raw(BigInt::from(num), BigInt::from(den))),
                }
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(n, d) => {
                let sign: i128 = if *n < 0 { -1 } else { 1 };
                Some(Self::from_i128(sign * *d as i128, n.unsigned_abs() as u128))
            }
            Rational::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    /// Value modulo a prime; `None` when the denominator vanishes mod `p`.
    pub fn reduce_mod(&self, p: u32) -> Option<u32> {
        let p_big = BigInt::from(p);
        let num = self.numer().mod_floor(&p_big).to_u64()?;
        let den = self.denom().mod_floor(&p_big).to_u64()?;
        if den == 0 {
            return None;
        }
        let inv = mod_pow(den, p as u64 - 2, p as u64);
        Some(((num * inv) % p as u64) as u32)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(v))
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    let g = a.gcd(&b);
    if g == 0 {
        1
    } else {
        g
    }
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Binomial coefficient as an exact rational; used by interpolation code.
pub fn big_binomial(n: i64, k: u32) -> BigRational {
    // Generalized binomial: n (n-1) ... (n-k+1) / k!
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k as i64 {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    BigRational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_values_stay_inline() {
        let a = Rational::from_fraction(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(a, Rational::Small(-3, 2));
        assert_eq!(a.to_string(), "-3/2");
        assert!(Rational::from_fraction(BigInt::from(1), BigInt::from(0)).is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Rational::from_int(i64::MAX);
        let b = a.add(&Rational::ONE);
        assert!(matches!(b, Rational::Big(_)));
        let c = b.sub(&Rational::ONE);
        assert_eq!(c, Rational::from_int(i64::MAX));
        let m = Rational::from_int(i64::MIN);
        assert!(matches!(m.neg(), Rational::Big(_)));
    }

    #[test]
    fn reduction_mod_prime() {
        let half = Rational::from_fraction(BigInt::from(1), BigInt::from(2)).unwrap();
        assert_eq!(half.reduce_mod(7), Some(4));
        let third = Rational::from_fraction(BigInt::from(1), BigInt::from(3)).unwrap();
        assert_eq!(third.reduce_mod(3), None);
        assert_eq!(Rational::from_int(-1).reduce_mod(5), Some(4));
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in -1_000_000_000_000i64..1_000_000_000_000, b in 1i64..1_000_000_000_000,
                                   c in -1_000_000_000_000i64..1_000_000_000_000, d in 1i64..1_000_000_000_000) {
            let x = Rational::from_big(big(a, b));
            let y = Rational::from_big(big(c, d));
            prop_assert_eq!(x.add(&y).to_big(), big(a, b) + big(c, d));
            prop_assert_eq!(x.sub(&y).to_big(), big(a, b) - big(c, d));
            prop_assert_eq!(x.mul(&y).to_big(), big(a, b) * big(c, d));
            prop_assert_eq!(x.cmp(&y), big(a, b).cmp(&big(c, d)));
            if c != 0 {
                prop_assert_eq!(y.inv().unwrap().to_big(), big(d, c));
            }
            // canonical representation
            prop_assert_eq!(x.add(&y), Rational::from_big(big(a, b) + big(c, d)));
        }
    }
}
