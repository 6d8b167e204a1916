use rayon::prelude::*;

use super::CodeSpec;
use crate::error::{Error, Result};
use crate::field::{Extension, FiniteField};
use crate::matrix::{vec_sub, Matrix};

/// Default cap on the number of codewords an exhaustive routine may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 20;

/// Rank over the base field of the `degree x len` matrix whose column `j`
/// holds the coordinates of `v[j]`.
pub fn rank_weight<F: Extension>(f: &F, v: &[F::Elem]) -> usize {
    if v.is_empty() {
        return 0;
    }
    let m = f.degree();
    let cols: Vec<_> = v.iter().map(|&x| f.coefficients(x)).collect();
    let mut data = Vec::with_capacity(m * v.len());
    for i in 0..m {
        data.extend(cols.iter().map(|c| c[i]));
    }
    Matrix::new(m, v.len(), data).rank(f.base())
}

pub fn rank_distance<F: Extension>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> usize {
    rank_weight(f, &vec_sub(f, a, b))
}

pub fn hamming_weight<F: FiniteField>(f: &F, v: &[F::Elem]) -> usize {
    v.iter().filter(|&&x| !f.is_zero(x)).count()
}

/// The `index`-th vector of length `len` in base-`|F|` little-endian order.
pub(crate) fn vector_at<F: FiniteField>(f: &F, len: usize, mut index: u64) -> Vec<F::Elem> {
    let q = f.order();
    (0..len)
        .map(|_| {
            let d = index % q;
            index /= q;
            f.element(d)
        })
        .collect()
}

/// `|F|^len`, checked against `bound`.
pub(crate) fn space_size<F: FiniteField>(f: &F, len: usize, bound: u64) -> Result<u64> {
    let size = (f.order() as u128)
        .checked_pow(len as u32)
        .unwrap_or(u128::MAX);
    if size > bound as u128 {
        return Err(Error::TooLarge { size, bound });
    }
    Ok(size as u64)
}

/// Every vector of length `len` over `f`, provided there are at most `bound`.
pub fn all_vectors<F: FiniteField>(
    f: &F,
    len: usize,
    bound: u64,
) -> Result<impl Iterator<Item = Vec<F::Elem>> + '_> {
    let size = space_size(f, len, bound)?;
    Ok((0..size).map(move |i| vector_at(f, len, i)))
}

/// Minimum rank weight over all nonzero codewords, by enumeration.
pub fn min_rank_distance<F: Extension>(code: &CodeSpec<F>, bound: u64) -> Result<usize> {
    let f = &**code.field();
    let size = space_size(f, code.k(), bound)?;
    let best = (1..size)
        .into_par_iter()
        .map(|i| {
            let c = code
                .encode(&vector_at(f, code.k(), i))
                .expect("message has length k");
            rank_weight(f, &c)
        })
        .min()
        .unwrap_or(0);
    Ok(best)
}
