use rayon::prelude::*;

use super::metric::{rank_weight, space_size, vector_at, DEFAULT_ENUMERATION_BOUND};
use super::CodeSpec;
use crate::error::{Error, Result};
use crate::field::Extension;
use crate::matrix::vec_sub;

/// Output of a rank-metric decoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded<E> {
    pub message: Vec<E>,
    pub codeword: Vec<E>,
    /// `received - codeword`.
    pub error: Vec<E>,
    pub error_rank: usize,
}

/// Anything that can correct rank errors for a [`CodeSpec`].
///
/// Implementations must return the unique codeword within rank distance
/// `t_max` of `received`, or `Undecodable` when there is none.
pub trait RankDecoder<F: Extension>: Send + Sync {
    fn decode(
        &self,
        code: &CodeSpec<F>,
        received: &[F::Elem],
        t_max: usize,
    ) -> Result<Decoded<F::Elem>>;
}

/// Nearest-codeword search over the whole code.
///
/// Visits every message in index order and returns the first codeword within
/// `t_max`; with `t_max` at most the unique-decoding radius that codeword is
/// the only candidate. `t_max = 0` short-circuits to a membership test.
#[derive(Debug, Clone, Copy)]
pub struct ExhaustiveDecoder {
    pub bound: u64,
}

impl Default for ExhaustiveDecoder {
    fn default() -> Self {
        Self {
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl<F: Extension> RankDecoder<F> for ExhaustiveDecoder {
    fn decode(
        &self,
        code: &CodeSpec<F>,
        received: &[F::Elem],
        t_max: usize,
    ) -> Result<Decoded<F::Elem>> {
        let f = &**code.field();
        let radius = code.unique_decoding_radius();
        if t_max > radius {
            return Err(Error::RadiusTooLarge { t_max, radius });
        }
        if received.len() != code.n() {
            return Err(Error::DimensionMismatch {
                expected: code.n(),
                got: received.len(),
            });
        }
        if t_max == 0 {
            let message = code
                .solve_message(received)
                .map_err(|_| Error::Undecodable { t_max })?;
            return Ok(Decoded {
                message,
                codeword: received.to_vec(),
                error: vec![f.zero(); received.len()],
                error_rank: 0,
            });
        }
        let size = space_size(f, code.k(), self.bound)?;
        let hit = (0..size).into_par_iter().find_map_first(|i| {
            let message = vector_at(f, code.k(), i);
            let codeword = code.encode(&message).expect("message has length k");
            let error = vec_sub(f, received, &codeword);
            let error_rank = rank_weight(f, &error);
            (error_rank <= t_max).then_some(Decoded {
                message,
                codeword,
                error,
                error_rank,
            })
        });
        hit.ok_or(Error::Undecodable { t_max })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{FiniteField, Tower};

    fn mother() -> (Tower, CodeSpec<crate::field::TopField>) {
        let t = Tower::paper_8_3();
        let top = t.top().clone();
        let basis = [top.one(), t.beta(), top.pow(t.beta(), 2)];
        let code = CodeSpec::moore(Arc::clone(&top), &basis, 1).unwrap();
        (t, code)
    }

    #[test]
    fn corrects_constant_rank_one_error() {
        let (t, code) = mother();
        let top = t.top();
        let m = vec![top.from_log(26)];
        let c = code.encode(&m).unwrap();
        let b5 = top.from_log(5);
        let r: Vec<_> = c.iter().map(|&x| top.add(x, b5)).collect();
        let d = ExhaustiveDecoder::default().decode(&code, &r, 1).unwrap();
        assert_eq!(d.message, m);
        assert_eq!(d.codeword, c);
        assert_eq!(d.error_rank, 1);
    }

    #[test]
    fn radius_is_enforced() {
        let (t, code) = mother();
        let z = vec![t.top().zero(); 3];
        assert_eq!(
            ExhaustiveDecoder::default().decode(&code, &z, 2),
            Err(Error::RadiusTooLarge {
                t_max: 2,
                radius: 1
            })
        );
    }

    #[test]
    fn rank_two_error_is_not_silently_accepted() {
        let (t, code) = mother();
        let top = t.top();
        let m = vec![top.from_log(26)];
        let c = code.encode(&m).unwrap();
        // (1, β, 0) expands to two independent GF(8)-columns: rank 2
        let e = [top.one(), t.beta(), top.zero()];
        assert_eq!(rank_weight(&**top, &e), 2);
        let r: Vec<_> = c.iter().zip(&e).map(|(&x, &y)| top.add(x, y)).collect();
        match ExhaustiveDecoder::default().decode(&code, &r, 1) {
            Err(Error::Undecodable { .. }) => {}
            Ok(d) => assert_ne!(d.message, m),
            Err(other) => panic!("unexpected error {other}"),
        }
    }
}
