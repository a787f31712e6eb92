//! Coefficient domains: prime fields `F_p` and the rationals.
//!
//! A [`Field`] value is a *context* object; elements are plain data
//! (`u32` residues, `BigRational`s) and all arithmetic goes through the
//! context. Two matrices or subspaces can only be combined when their
//! contexts compare equal.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arithmetic context for a coefficient field.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic(&self) -> u64;
    fn format(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// The prime field `F_p`, elements are residues in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Returns `None` unless `p` is prime and fits the `u32` residue range.
    pub fn new(p: u64) -> Option<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return None;
        }
        Some(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduce an arbitrary integer into `0..p`.
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Reduce a rational whose denominator is prime to `p`.
    pub fn reduce_rational(&self, v: &BigRational) -> Option<u32> {
        let p = BigInt::from(self.p);
        let num = v.numer().mod_floor(&p).to_u32()?;
        let den = v.denom().mod_floor(&p).to_u32()?;
        let den_inv = self.inv(&den)?;
        Some(self.mul(&num, &den_inv))
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order(&self, a: u32) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let mut x = a % self.p;
        let mut k = 1u64;
        while x != 1 {
            x = self.mul(&x, &a);
            k += 1;
        }
        Some(k)
    }

    /// The least primitive root modulo `p`.
    pub fn least_primitive_root(&self) -> u32 {
        if self.p == 2 {
            return 1;
        }
        (2..self.p)
            .find(|&g| self.order(g) == Some(self.p as u64 - 1))
            .expect("every prime has a primitive root")
    }
}

impl Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if (*a).is_multiple_of(self.p) {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.reduce(t0))
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    #[inline]
    fn add_mul_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        *acc = ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32;
    }
}

/// The field of rational numbers with arbitrary-precision numerator and
/// denominator (always in lowest terms, positive denominator).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Display for Rationals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
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
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
}

/// `true` when the rational is an integer.
pub fn is_integral(a: &BigRational) -> bool {
    a.is_integer()
}

/// `true` when `a` is a unit of the localisation `Z_(p)`, i.e. neither
/// numerator nor denominator is divisible by `p`.
pub fn is_p_adic_unit(a: &BigInt, p: u64) -> bool {
    !a.is_zero() && !(a.abs() % BigInt::from(p)).is_zero()
}

/// Deterministic trial-division primality test (inputs here are tiny).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.sub(&2, &5), 4);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn no_overflow_near_limit() {
        let f = PrimeField::new(32749).unwrap();
        let a = 32748u32;
        assert_eq!(f.mul(&a, &a), 1);
        let big = PrimeField::new(4_294_967_291).unwrap();
        let b = 4_294_967_290u32;
        assert_eq!(big.mul(&b, &b), 1);
        let mut acc = b;
        big.add_mul_assign(&mut acc, &b, &b);
        assert_eq!(acc, 0);
    }

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(9).is_none());
        assert!(PrimeField::new(1).is_none());
        assert!(PrimeField::new(13).is_some());
    }

    #[test]
    fn primitive_roots() {
        let roots: Vec<u32> = [3u64, 5, 7, 11, 13]
            .iter()
            .map(|&p| PrimeField::new(p).unwrap().least_primitive_root())
            .collect();
        assert_eq!(roots, vec![2, 2, 3, 2, 2]);
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = Rationals;
        let a = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = q.mul(&a, &q.from_i64(2));
        assert_eq!(q.format(&b), "-3");
    }

    #[test]
    fn reduce_rational_mod_p() {
        let f = PrimeField::new(5).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.reduce_rational(&half), Some(3));
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(f.reduce_rational(&fifth), None);
    }
}
