use crate::{LinAlgError, Result};

/// A prime field `F_p`. Elements are stored as `u8` residues, so `p < 256`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    p: u8,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self> {
        if p > 251 || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u8 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        let p = self.p as u16;
        (if s >= p { s - p } else { s }) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // a^(p-2)
        self.pow(a, self.p as u64 - 2)
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a % self.p;
        let mut acc = 1u8 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Reduce an arbitrary integer into `{0, …, p-1}`.
    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    #[inline]
    pub fn reduce_u64(self, x: u64) -> u8 {
        (x % self.p as u64) as u8
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(0).is_err());
        assert!(FieldSpec::new(257).is_err());
        assert!(FieldSpec::new(251).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 11] {
            let f = FieldSpec::new(p).unwrap();
            for a in 1..p as u8 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            assert_eq!(f.reduce(-1), (p - 1) as u8);
        }
    }
}
