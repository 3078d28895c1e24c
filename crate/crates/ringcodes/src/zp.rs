//! Scalar arithmetic in the prime field Z_p.

use crate::error::{Error, Result};

/// Largest prime the library accepts. Everything downstream is polynomial
/// in `p`, but distance enumeration is exponential in the code dimension,
/// so small primes are the intended regime.
pub const MAX_PRIME: u64 = 97;

/// A validated prime modulus.
///
/// Construction runs trial division, so holding a `Prime` is proof that
/// the value is prime and within [`MAX_PRIME`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeOutOfRange(p, MAX_PRIME));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical residue of `v` in [0, p).
    pub fn reduce(self, v: u64) -> u64 {
        v % self.0
    }

    /// Canonical residue of a signed value.
    pub fn reduce_signed(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b % self.0) % self.0
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        // p <= 97, so products stay far below u64::MAX
        (a % self.0) * (b % self.0) % self.0
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut base = base % self.0;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat exponentiation; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 - 2))
        }
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_primes_up_to_bound() {
        for p in [2, 3, 5, 7, 11, 13, 97] {
            assert!(Prime::new(p).is_ok());
        }
    }

    #[test]
    fn rejects_composites_and_small_values() {
        for p in [0, 1, 4, 6, 9, 15, 91] {
            assert_eq!(Prime::new(p), Err(Error::NotPrime(p)));
        }
    }

    #[test]
    fn rejects_primes_above_bound() {
        assert_eq!(Prime::new(101), Err(Error::PrimeOutOfRange(101, MAX_PRIME)));
    }

    #[test]
    fn inverse_and_pow() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.inv(2), Some(3));
        assert_eq!(p.inv(0), None);
        assert_eq!(p.pow(2, 4), 1);
        for a in 1..5 {
            let inv = p.inv(a).unwrap();
            assert_eq!(p.mul(a, inv), 1);
        }
    }

    #[test]
    fn signed_reduction() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.reduce_signed(-2), 3);
        assert_eq!(p.reduce_signed(-5), 0);
        assert_eq!(p.reduce_signed(12), 2);
    }
}
