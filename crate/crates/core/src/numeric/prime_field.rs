use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Largest supported modulus; products are formed in `u128`, and primality
/// is checked by trial division.
const MAX_MODULUS: u64 = 1 << 32;

/// A validated odd prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn element(&self, n: i64) -> PrimeFieldElement {
        PrimeFieldElement {
            value: (n as i128).rem_euclid(self.p as i128) as u64,
            modulus: self.p,
        }
    }

    pub fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }

    pub fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }

    /// Reduces `n/d` mod p; fails when p divides the denominator.
    pub fn from_rational(&self, r: &Rational) -> Result<PrimeFieldElement> {
        let p = BigInt::from(self.p);
        let reduce = |n: &BigInt| n.mod_floor(&p).to_u64().expect("residue below p");
        let numer = PrimeFieldElement { value: reduce(r.numer()), modulus: self.p };
        let denom = PrimeFieldElement { value: reduce(r.denom()), modulus: self.p };
        numer.try_div(&denom)
    }

    /// All elements `0, 1, …, p − 1` in order.
    pub fn elements(&self) -> impl Iterator<Item = PrimeFieldElement> + '_ {
        (0..self.p).map(move |value| PrimeFieldElement { value, modulus: self.p })
    }
}

/// Deterministic trial division up to √n.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, stored reduced into `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElement {
    value: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    pub fn new(n: i64, p: u64) -> Result<Self> {
        Ok(PrimeField::new(p)?.element(n))
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: rhs.modulus });
        }
        Ok(())
    }

    fn with_value(&self, value: u64) -> Self {
        PrimeFieldElement { value, modulus: self.modulus }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with_value(((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with_value(
            ((self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128) as u64,
        ))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with_value(((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.try_mul(&rhs.inv()?)
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut old_r, mut r) = (self.value as i128, self.modulus as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.with_value(old_s.rem_euclid(self.modulus as i128) as u64))
    }
}

impl Scalar for PrimeFieldElement {
    fn int_like(&self, n: i64) -> Self {
        self.field().element(n)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        PrimeFieldElement::try_div(self, rhs)
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the moduli differ.
        impl $trait for PrimeFieldElement {
            type Output = PrimeFieldElement;
            fn $method(self, rhs: PrimeFieldElement) -> PrimeFieldElement {
                match self.$checked(&rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_mul);

impl Neg for PrimeFieldElement {
    type Output = PrimeFieldElement;
    fn neg(self) -> PrimeFieldElement {
        self.with_value((self.modulus - self.value) % self.modulus)
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Serialize for PrimeFieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
