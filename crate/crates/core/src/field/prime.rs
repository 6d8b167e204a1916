use super::{is_prime, prime_factors, FiniteField};
use crate::error::{Error, Result};

/// GF(p) with elements as residues `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    generator: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidConfig(format!("{p} is not prime")));
        }
        let factors = prime_factors(p as u64 - 1);
        let generator = (1..p)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| pow_mod(g, (p as u64 - 1) / r, p) != 1)
            })
            .expect("every prime field has a primitive root");
        Ok(Self { p, generator })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

fn pow_mod(a: u32, mut e: u64, p: u32) -> u32 {
    let p = p as u64;
    let mut base = a as u64 % p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

impl FiniteField for PrimeField {
    type Elem = u32;

    fn order(&self) -> u64 {
        self.p as u64
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(pow_mod(a, self.p as u64 - 2, self.p))
    }

    fn pow(&self, a: u32, e: u64) -> u32 {
        pow_mod(a, e, self.p)
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < self.p as u64);
        index as u32
    }

    fn index_of(&self, a: u32) -> u64 {
        a as u64
    }

    fn primitive_element(&self) -> u32 {
        self.generator
    }

    fn discrete_log(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::LogOfZero);
        }
        let mut x = 1u32;
        for t in 0..self.p as u64 - 1 {
            if x == a {
                return Ok(t);
            }
            x = self.mul(x, self.generator);
        }
        unreachable!("generator spans the multiplicative group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf7_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.primitive_element(), 3);
        assert_eq!(f.inv(3).unwrap(), 5);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.from_log(f.discrete_log(6).unwrap()), 6);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn rejects_composite() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }
}
