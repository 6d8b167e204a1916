use super::{Extension, FiniteField, GroundElement};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    General,
    Normal,
    SelfComplementaryNormal,
}

/// A basis of an extension over its base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis<E> {
    pub elements: Vec<E>,
    pub kind: BasisKind,
}

pub type GroundBasis = Basis<GroundElement>;

impl<E: Copy> Basis<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Rank of the coefficient matrix of `elems` over the base field.
pub fn basis_rank<F: Extension>(f: &F, elems: &[F::Elem]) -> usize {
    let rows: Vec<_> = elems.iter().map(|&e| f.coefficients(e)).collect();
    Matrix::new(elems.len(), f.degree(), rows.concat()).rank(f.base())
}

/// `[tr(e_i · e_j)]` over the base field.
pub fn gram_matrix<F: Extension>(
    f: &F,
    elems: &[F::Elem],
) -> Matrix<<F::Base as FiniteField>::Elem> {
    let n = elems.len();
    let mut data = Vec::with_capacity(n * n);
    for &a in elems {
        for &b in elems {
            data.push(f.trace(f.mul(a, b)));
        }
    }
    Matrix::new(n, n, data)
}

/// `{g, g^Q, …, g^(Q^(n-1))}` if those conjugates are linearly independent.
pub fn normal_basis_from_generator<F: Extension>(
    f: &F,
    generator: F::Elem,
) -> Result<Basis<F::Elem>> {
    let mut elements = Vec::with_capacity(f.degree());
    let mut x = generator;
    for _ in 0..f.degree() {
        elements.push(x);
        x = f.frobenius(x);
    }
    if basis_rank(f, &elements) != f.degree() {
        return Err(Error::NotABasis);
    }
    Ok(Basis {
        elements,
        kind: BasisKind::Normal,
    })
}

/// The normal basis generated by `generator`, if it is also self-complementary.
pub fn self_complementary_from_generator<F: Extension>(
    f: &F,
    generator: F::Elem,
) -> Result<Basis<F::Elem>> {
    let mut basis = normal_basis_from_generator(f, generator).map_err(|_| Error::NotFound)?;
    let gram = gram_matrix(f, &basis.elements);
    if gram != Matrix::identity(f.base(), f.degree()) {
        return Err(Error::NotFound);
    }
    basis.kind = BasisKind::SelfComplementaryNormal;
    Ok(basis)
}

/// Scans generators in increasing discrete-log order and returns the first
/// self-complementary normal basis.
///
/// Such a basis exists when the base field has even order, or when both the
/// base order and the degree are odd; outside those cases the scan normally
/// returns `NotFound`.
pub fn find_self_complementary_normal_basis<F: Extension>(f: &F) -> Result<Basis<F::Elem>> {
    (0..f.order() - 1)
        .find_map(|t| self_complementary_from_generator(f, f.from_log(t)).ok())
        .ok_or(Error::NotFound)
}
