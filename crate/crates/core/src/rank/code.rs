use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Extension, FiniteField};
use crate::matrix::{vec_mul, Matrix};

/// Moore matrix with rows `basis^(Q^i)`, `i = 0..k`, where `x ↦ x^Q` is the
/// Frobenius of `f` over its base field.
pub fn moore_matrix<F: Extension>(f: &F, basis: &[F::Elem], k: usize) -> Result<Matrix<F::Elem>> {
    let n = basis.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "dimension {k} outside 1..={n}"
        )));
    }
    if crate::field::basis_rank(f, basis) != n {
        return Err(Error::NotABasis);
    }
    Ok(moore_rows(f, basis, 0..k))
}

fn moore_rows<F: Extension>(
    f: &F,
    basis: &[F::Elem],
    rows: std::ops::Range<usize>,
) -> Matrix<F::Elem> {
    let n = basis.len();
    let mut data = Vec::with_capacity(rows.len() * n);
    let mut row: Vec<F::Elem> = basis.to_vec();
    for _ in 0..rows.start {
        row.iter_mut().for_each(|x| *x = f.frobenius(*x));
    }
    for _ in rows.clone() {
        data.extend_from_slice(&row);
        row.iter_mut().for_each(|x| *x = f.frobenius(*x));
    }
    Matrix::new(rows.len(), n, data)
}

/// A full-rank parity-check matrix: a basis of `{h : G·hᵀ = 0}` as rows.
/// For `k = n` this is the empty `0 x n` matrix.
pub fn parity_check<F: FiniteField>(f: &F, generator: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    generator.nullspace(f)
}

/// LCD test: `G·Gᵀ` is non-singular.
pub fn is_lcd<F: FiniteField>(f: &F, generator: &Matrix<F::Elem>) -> bool {
    let ggt = generator
        .mul(f, &generator.transpose())
        .expect("G and G^T are conformable");
    !f.is_zero(ggt.determinant(f).expect("G*G^T is square"))
}

/// Orthogonal projector `Gᵀ (G Gᵀ)⁻¹ G` onto the row space of `G`.
pub fn projector<F: FiniteField>(f: &F, generator: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let gt = generator.transpose();
    let ggt_inv = generator
        .mul(f, &gt)?
        .inverse(f)
        .map_err(|_| Error::NotLcd)?;
    gt.mul(f, &ggt_inv)?.mul(f, generator)
}

/// The pair of complementary projectors of an LCD code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projectors<E> {
    pub code: Matrix<E>,
    pub dual: Matrix<E>,
}

/// A linear code given by its generator matrix, with the derived parity
/// check, projectors (when LCD) and an information set for inversion.
pub struct CodeSpec<F: FiniteField> {
    field: Arc<F>,
    generator: Matrix<F::Elem>,
    parity_check: Matrix<F::Elem>,
    projectors: Option<Projectors<F::Elem>>,
    info_set: Vec<usize>,
    info_inverse: Matrix<F::Elem>,
}

impl<F: FiniteField> Clone for CodeSpec<F> {
    fn clone(&self) -> Self {
        Self {
            field: self.field.clone(),
            generator: self.generator.clone(),
            parity_check: self.parity_check.clone(),
            projectors: self.projectors.clone(),
            info_set: self.info_set.clone(),
            info_inverse: self.info_inverse.clone(),
        }
    }
}

impl<F: FiniteField> fmt::Debug for CodeSpec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodeSpec")
            .field("n", &self.n())
            .field("k", &self.k())
            .field("generator", &self.generator)
            .field("parity_check", &self.parity_check)
            .field("projectors", &self.projectors)
            .finish()
    }
}

impl<F: FiniteField> CodeSpec<F> {
    /// Builds a code from a full-row-rank generator; `H` is the kernel basis.
    pub fn new(field: Arc<F>, generator: Matrix<F::Elem>) -> Result<Self> {
        let h = parity_check(&*field, &generator);
        Self::with_parity_check(field, generator, h)
    }

    /// Builds a code with an explicit parity-check matrix, which must be of
    /// full rank `n - k` and satisfy `G·Hᵀ = 0`.
    pub fn with_parity_check(
        field: Arc<F>,
        generator: Matrix<F::Elem>,
        parity_check: Matrix<F::Elem>,
    ) -> Result<Self> {
        let f = &*field;
        let (k, n) = generator.shape();
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!(
                "generator is {k}x{n}; need 1 <= k <= n"
            )));
        }
        let (_, pivots) = generator.rref(f);
        if pivots.len() != k {
            return Err(Error::NotABasis);
        }
        if parity_check.cols() != n
            || parity_check.rows() != n - k
            || parity_check.rank(f) != n - k
            || !generator.mul(f, &parity_check.transpose())?.is_zero(f)
        {
            return Err(Error::InvalidParameters(
                "parity-check matrix does not match the generator".into(),
            ));
        }
        let info_inverse = generator
            .select_columns(&pivots)
            .inverse(f)
            .expect("pivot columns of a full-rank matrix are independent");
        let projectors = projector(f, &generator).ok().map(|code| {
            let dual = Matrix::identity(f, n)
                .sub(f, &code)
                .expect("projector is n x n");
            Projectors { code, dual }
        });
        Ok(Self {
            field,
            generator,
            parity_check,
            projectors,
            info_set: pivots,
            info_inverse,
        })
    }

    pub fn field(&self) -> &Arc<F> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// `n - k + 1`, attained exactly by MRD codes.
    pub fn designed_distance(&self) -> usize {
        self.n() - self.k() + 1
    }

    /// `⌊(d - 1) / 2⌋` for the designed distance.
    pub fn unique_decoding_radius(&self) -> usize {
        (self.designed_distance() - 1) / 2
    }

    pub fn generator(&self) -> &Matrix<F::Elem> {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix<F::Elem> {
        &self.parity_check
    }

    pub fn is_lcd(&self) -> bool {
        self.projectors.is_some()
    }

    pub fn projectors(&self) -> Result<&Projectors<F::Elem>> {
        self.projectors.as_ref().ok_or(Error::NotLcd)
    }

    pub fn projector(&self) -> Result<&Matrix<F::Elem>> {
        Ok(&self.projectors()?.code)
    }

    pub fn projector_dual(&self) -> Result<&Matrix<F::Elem>> {
        Ok(&self.projectors()?.dual)
    }

    /// `message · G`.
    pub fn encode(&self, message: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        vec_mul(&*self.field, message, &self.generator)
    }

    /// `H · vᵀ`; empty when `k = n`.
    pub fn syndrome(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        vec_mul(&*self.field, v, &self.parity_check.transpose())
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        Ok(self.syndrome(v)?.iter().all(|&s| self.field.is_zero(s)))
    }

    /// The unique message `m` with `m · G = codeword`.
    pub fn solve_message(&self, codeword: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if codeword.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: codeword.len(),
            });
        }
        let restricted: Vec<F::Elem> = self.info_set.iter().map(|&j| codeword[j]).collect();
        let message = vec_mul(&*self.field, &restricted, &self.info_inverse)?;
        if self.encode(&message)? != codeword {
            return Err(Error::NotInCode);
        }
        Ok(message)
    }

    /// Number of codewords, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.field.order() as u128).checked_pow(self.k() as u32)
    }
}

impl<F: Extension> CodeSpec<F> {
    /// Gabidulin code from a Moore matrix over `basis`.
    ///
    /// When the basis has `n = [F : base]` elements and the remaining
    /// Frobenius rows `k..n` annihilate `G` (as happens for self-complementary
    /// normal bases), those rows are used as `H`; otherwise `H` is the kernel
    /// basis.
    pub fn moore(field: Arc<F>, basis: &[F::Elem], k: usize) -> Result<Self> {
        let f = &*field;
        let g = moore_matrix(f, basis, k)?;
        let n = basis.len();
        if n == f.degree() {
            let h = moore_rows(f, basis, k..n);
            if g.mul(f, &h.transpose())?.is_zero(f) && h.rank(f) == n - k {
                return Self::with_parity_check(field, g, h);
            }
        }
        Self::new(field, g)
    }
}
