//! Finite-field arithmetic for the tower GF(p) ⊂ GF(q) ⊂ GF(q^n), q = p^n.
//!
//! Both extension levels share one implementation, [`ExtensionField`], which
//! stores elements as coefficient vectors over the level below, packed into a
//! single integer (coefficient `i` is digit `i` in base `|base field|`). The
//! packing is canonical, so equality, hashing and ordering are integer
//! operations. Multiplication goes through log/antilog tables when the field
//! is small enough, and through polynomial arithmetic otherwise.

mod basis;
mod extension;
mod prime;
mod tower;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub use basis::{
    basis_rank, find_self_complementary_normal_basis, gram_matrix, normal_basis_from_generator,
    self_complementary_from_generator, Basis, BasisKind, GroundBasis,
};
pub use extension::{ExtensionField, GroundElement, PackedElement, TopElement};
pub use prime::PrimeField;
pub use tower::{Level, Tower, TowerConfig, DEFAULT_LOG_TABLE_BOUND};

/// GF(p^n) over GF(p).
pub type GroundField = ExtensionField<PrimeField, GroundElement>;
/// GF(q^n) over GF(q).
pub type TopField = ExtensionField<GroundField, TopElement>;

/// A finite field with a fixed enumeration of its elements.
pub trait FiniteField: Send + Sync + 'static {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static;

    fn order(&self) -> u64;
    fn characteristic(&self) -> u32;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;

    /// The `index`-th element; indices `0..order()` enumerate the field.
    fn element(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: Self::Elem) -> u64;

    /// The designated primitive element used for logarithms.
    fn primitive_element(&self) -> Self::Elem;
    fn discrete_log(&self, a: Self::Elem) -> Result<u64>;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    /// `a^e`; for nonzero `a` the exponent is reduced modulo `order() - 1`.
    fn pow(&self, a: Self::Elem, e: u64) -> Self::Elem {
        if e == 0 {
            return self.one();
        }
        if self.is_zero(a) {
            return self.zero();
        }
        let mut e = e % (self.order() - 1);
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_log(&self, t: u64) -> Self::Elem {
        self.pow(self.primitive_element(), t % (self.order() - 1))
    }

    /// Multiplicative order of a nonzero element.
    fn multiplicative_order(&self, a: Self::Elem) -> Result<u64> {
        if self.is_zero(a) {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(element_order(self.order() - 1, |e| {
            self.pow(a, e) == self.one()
        }))
    }

    fn elements(&self) -> impl Iterator<Item = Self::Elem> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }
}

/// A field presented as a degree-`n` vector space over a base field.
pub trait Extension: FiniteField {
    type Base: FiniteField;

    fn base(&self) -> &Self::Base;
    fn degree(&self) -> usize;

    /// Coordinates with respect to the power basis `1, x, …, x^(n-1)`.
    fn coefficients(&self, a: Self::Elem) -> Vec<<Self::Base as FiniteField>::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_coefficients(&self, c: &[<Self::Base as FiniteField>::Elem]) -> Result<Self::Elem>;

    /// `x ↦ x^|base|`, the generator of the relative Galois group.
    fn frobenius(&self, a: Self::Elem) -> Self::Elem {
        self.pow(a, self.base().order())
    }

    /// `a + a^Q + … + a^(Q^(n-1))` with `Q = |base|`, read back in the base field.
    fn trace(&self, a: Self::Elem) -> <Self::Base as FiniteField>::Elem {
        let mut acc = self.zero();
        let mut conj = a;
        for _ in 0..self.degree() {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj);
        }
        let coeffs = self.coefficients(acc);
        debug_assert!(coeffs[1..].iter().all(|&c| self.base().is_zero(c)));
        coeffs[0]
    }

    /// Embeds a base-field scalar as a constant.
    fn embed(&self, c: <Self::Base as FiniteField>::Elem) -> Self::Elem {
        let mut coeffs = vec![self.base().zero(); self.degree()];
        coeffs[0] = c;
        self.from_coefficients(&coeffs)
            .expect("constant polynomial has the right length")
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
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

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Smallest divisor `e` of `group_order` with `is_identity(e)`, given that
/// `is_identity(group_order)` holds.
pub(crate) fn element_order(group_order: u64, is_identity: impl Fn(u64) -> bool) -> u64 {
    let mut order = group_order;
    for r in prime_factors(group_order) {
        while order.is_multiple_of(r) && is_identity(order / r) {
            order /= r;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(prime_factors(511), vec![7, 73]);
        assert_eq!(prime_factors(7), vec![7]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert!(is_prime(2) && is_prime(73) && !is_prime(1) && !is_prime(511));
    }

    #[test]
    fn order_search() {
        // element of order 12 inside a cyclic group of order 360
        assert_eq!(element_order(360, |e| e % 12 == 0), 12);
        assert_eq!(element_order(7, |e| e % 7 == 0), 7);
    }
}
