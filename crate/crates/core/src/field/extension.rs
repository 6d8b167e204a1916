use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::marker::PhantomData;
use std::sync::Arc;

use super::{element_order, Extension, FiniteField};
use crate::error::{Error, Result};

/// An element stored as its enumeration index inside an [`ExtensionField`].
pub trait PackedElement: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    fn from_index(index: u64) -> Self;
    fn index(self) -> u64;
}

macro_rules! packed_element {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(u64);

        impl PackedElement for $name {
            fn from_index(index: u64) -> Self {
                $name(index)
            }

            fn index(self) -> u64 {
                self.0
            }
        }
    };
}

packed_element!(
    /// Element of GF(q), q = p^n: base-p digits are the power-basis coordinates.
    GroundElement
);
packed_element!(
    /// Element of GF(q^n): base-q digits are the power-basis coordinates,
    /// each digit the index of a [`GroundElement`].
    TopElement
);

#[derive(Debug)]
struct LogTables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

/// Degree-`n` extension `B[x] / (f(x))` of a base field `B`, with `f` monic
/// and primitive. The root `x` of `f` is the designated primitive element.
#[derive(Debug)]
pub struct ExtensionField<B: FiniteField, E> {
    base: Arc<B>,
    degree: usize,
    modulus: Vec<B::Elem>,
    base_order: u64,
    order: u64,
    xor_add: bool,
    tables: Option<LogTables>,
    _elem: PhantomData<fn() -> E>,
}

impl<B: FiniteField, E: PackedElement> ExtensionField<B, E> {
    /// Builds the field from ascending modulus coefficients `f_0, …, f_n`.
    ///
    /// Fails unless `f` is monic of degree ≥ 2 and its root has multiplicative
    /// order `|B|^n - 1`. Log tables are built when the order is at most
    /// `table_bound`.
    pub fn new(base: Arc<B>, modulus: Vec<B::Elem>, table_bound: u64) -> Result<Self> {
        if modulus.len() < 3 {
            return Err(Error::InvalidConfig(
                "defining polynomial must have degree at least 2".into(),
            ));
        }
        if *modulus.last().unwrap() != base.one() {
            return Err(Error::InvalidConfig(
                "defining polynomial must be monic".into(),
            ));
        }
        let degree = modulus.len() - 1;
        let base_order = base.order();
        let order = base_order
            .checked_pow(degree as u32)
            .filter(|&o| o < u64::MAX)
            .ok_or_else(|| Error::InvalidConfig("field order does not fit in 64 bits".into()))?;
        let xor_add = base.characteristic() == 2 && base_order.is_power_of_two();
        let mut field = Self {
            base,
            degree,
            modulus,
            base_order,
            order,
            xor_add,
            tables: None,
            _elem: PhantomData,
        };

        let root = field.primitive_element();
        let group = order - 1;
        if field.pow_slow(root, group) != field.one()
            || element_order(group, |e| field.pow_slow(root, e) == field.one()) != group
        {
            return Err(Error::InvalidConfig(
                "defining polynomial is not primitive".into(),
            ));
        }
        if order <= table_bound && order <= u32::MAX as u64 {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn modulus(&self) -> &[B::Elem] {
        &self.modulus
    }

    pub fn base_arc(&self) -> &Arc<B> {
        &self.base
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    fn build_tables(&self) -> LogTables {
        let group = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![0u32; self.order as usize];
        let root = self.primitive_element();
        let mut x = self.one();
        for t in 0..group {
            exp.push(x.index());
            log[x.index() as usize] = t as u32;
            x = self.mul_poly(x, root);
        }
        LogTables { exp, log }
    }

    fn unpack(&self, a: E) -> Vec<B::Elem> {
        let mut idx = a.index();
        (0..self.degree)
            .map(|_| {
                let d = idx % self.base_order;
                idx /= self.base_order;
                self.base.element(d)
            })
            .collect()
    }

    fn pack(&self, coeffs: &[B::Elem]) -> E {
        let idx = coeffs.iter().rev().fold(0u64, |acc, &c| {
            acc * self.base_order + self.base.index_of(c)
        });
        E::from_index(idx)
    }

    fn mul_poly(&self, a: E, b: E) -> E {
        let x = self.unpack(a);
        let y = self.unpack(b);
        let n = self.degree;
        let base = &*self.base;
        let mut prod = vec![base.zero(); 2 * n - 1];
        for (i, &xi) in x.iter().enumerate() {
            if base.is_zero(xi) {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(xi, yj));
            }
        }
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if base.is_zero(c) {
                continue;
            }
            for i in 0..=n {
                prod[d - n + i] = base.sub(prod[d - n + i], base.mul(c, self.modulus[i]));
            }
        }
        self.pack(&prod[..n])
    }

    fn pow_slow(&self, a: E, mut e: u64) -> E {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    // baby-step giant-step for fields without tables
    fn bsgs_log(&self, a: E) -> u64 {
        let group = self.order - 1;
        let m = (group as f64).sqrt().ceil() as u64;
        let root = self.primitive_element();
        let mut baby = HashMap::with_capacity(m as usize);
        let mut x = self.one();
        for j in 0..m {
            baby.entry(x).or_insert(j);
            x = self.mul_poly(x, root);
        }
        let giant = self.inv(self.pow_slow(root, m)).expect("root is nonzero");
        let mut y = a;
        for i in 0..=m {
            if let Some(&j) = baby.get(&y) {
                return (i * m + j) % group;
            }
            y = self.mul_poly(y, giant);
        }
        unreachable!("primitive root generates every nonzero element")
    }
}

impl<B: FiniteField, E: PackedElement> FiniteField for ExtensionField<B, E> {
    type Elem = E;

    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    fn zero(&self) -> E {
        E::from_index(0)
    }

    fn one(&self) -> E {
        E::from_index(self.base.index_of(self.base.one()))
    }

    fn add(&self, a: E, b: E) -> E {
        if self.xor_add {
            return E::from_index(a.index() ^ b.index());
        }
        let x = self.unpack(a);
        let y = self.unpack(b);
        let sum: Vec<_> = x
            .iter()
            .zip(&y)
            .map(|(&u, &v)| self.base.add(u, v))
            .collect();
        self.pack(&sum)
    }

    fn neg(&self, a: E) -> E {
        if self.xor_add {
            return a;
        }
        let x: Vec<_> = self
            .unpack(a)
            .into_iter()
            .map(|u| self.base.neg(u))
            .collect();
        self.pack(&x)
    }

    fn mul(&self, a: E, b: E) -> E {
        match &self.tables {
            Some(t) => {
                if a.index() == 0 || b.index() == 0 {
                    return self.zero();
                }
                let group = t.exp.len();
                let s = t.log[a.index() as usize] as usize + t.log[b.index() as usize] as usize;
                E::from_index(t.exp[s % group])
            }
            None => self.mul_poly(a, b),
        }
    }

    fn inv(&self, a: E) -> Result<E> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match &self.tables {
            Some(t) => {
                let group = t.exp.len();
                let l = t.log[a.index() as usize] as usize;
                Ok(E::from_index(t.exp[(group - l) % group]))
            }
            None => Ok(self.pow_slow(a, self.order - 2)),
        }
    }

    fn pow(&self, a: E, e: u64) -> E {
        if e == 0 {
            return self.one();
        }
        if self.is_zero(a) {
            return self.zero();
        }
        let group = self.order - 1;
        match &self.tables {
            Some(t) => {
                let l = t.log[a.index() as usize] as u128;
                let s = (l * (e % group) as u128 % group as u128) as usize;
                E::from_index(t.exp[s])
            }
            None => self.pow_slow(a, e % group),
        }
    }

    fn element(&self, index: u64) -> E {
        debug_assert!(index < self.order);
        E::from_index(index)
    }

    fn index_of(&self, a: E) -> u64 {
        a.index()
    }

    fn primitive_element(&self) -> E {
        // the polynomial `x`: digit 1 set to the base field's one
        E::from_index(self.base.index_of(self.base.one()) * self.base_order)
    }

    fn discrete_log(&self, a: E) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::LogOfZero);
        }
        Ok(match &self.tables {
            Some(t) => t.log[a.index() as usize] as u64,
            None => self.bsgs_log(a),
        })
    }
}

impl<B: FiniteField, E: PackedElement> Extension for ExtensionField<B, E> {
    type Base = B;

    fn base(&self) -> &B {
        &self.base
    }

    fn degree(&self) -> usize {
        self.degree
    }

    fn coefficients(&self, a: E) -> Vec<B::Elem> {
        self.unpack(a)
    }

    fn from_coefficients(&self, c: &[B::Elem]) -> Result<E> {
        if c.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                got: c.len(),
            });
        }
        Ok(self.pack(c))
    }
}
