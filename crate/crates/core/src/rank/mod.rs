//! Rank-metric codes: Moore (Gabidulin) generators, parity checks, LCD
//! projectors, rank weight, and an exhaustive nearest-codeword decoder.

mod code;
mod decoder;
mod metric;

pub use code::{is_lcd, moore_matrix, parity_check, projector, CodeSpec, Projectors};
pub use decoder::{Decoded, ExhaustiveDecoder, RankDecoder};
pub use metric::{
    all_vectors, hamming_weight, min_rank_distance, rank_distance, rank_weight,
    DEFAULT_ENUMERATION_BOUND,
};
