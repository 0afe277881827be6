use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Residue class modulo a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let v = value.mod_floor(&m).to_u64().expect("residue fits in u64");
        Fp { value: v, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.modulus, other.modulus, "mixed prime-field moduli");
    }

    pub fn add(&self, other: &Fp) -> Fp {
        self.check(other);
        Fp {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        self.check(other);
        Fp {
            value: (self.value + self.modulus - other.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> Fp {
        Fp {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn mul(&self, other: &Fp) -> Fp {
        self.check(other);
        let v = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Fp {
            value: v as u64,
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Fp> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Primality check used to validate user-supplied moduli.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Maps a rational `n/d` into `F_p`, failing when `p` divides `d`.
pub fn rational_to_fp(n: &BigInt, d: &BigInt, p: u64) -> Option<Fp> {
    let num = Fp::from_bigint(n, p);
    let den = Fp::from_bigint(d, p);
    den.inv().map(|inv| num.mul(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_negation() {
        let a = Fp::new(3, 7);
        assert_eq!(a.mul(&a.inv().unwrap()), Fp::new(1, 7));
        assert_eq!(a.add(&a.neg()), Fp::new(0, 7));
        assert_eq!(Fp::new(-1, 7).value(), 6);
        assert!(Fp::new(14, 7).inv().is_none());
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(7) && is_prime(101));
        assert!(!is_prime(1) && !is_prime(9));
    }
}
