//! Multiple-rate channel coding with rank-metric codes.
//!
//! A [`multirate::MultiRateCode`] pairs a `k`-dimensional Gabidulin code over
//! GF(q^n) with `n` LCD Gabidulin codes over GF(q), one per segment length.
//! A message of `k` segments, each of length 1 to `n`, is encoded segment by
//! segment with the matching child code, shifted by a per-length pad, and
//! then encoded with the mother code into one codeword of length `n`.
//!
//! ```
//! use multirate_mrd::multirate::MultiRateCode;
//! use multirate_mrd::text::{format_codeword, parse_message};
//!
//! let code = MultiRateCode::preset("paper-8-3-k1")?;
//! let msg = parse_message(code.tower(), "a,0")?;
//! let cw = code.encode(&msg)?;
//! assert_eq!(format_codeword(code.tower(), &cw), "b^191,b^192,b^193");
//! assert_eq!(code.decode(&cw)?, msg);
//! # Ok::<(), multirate_mrd::Error>(())
//! ```
//!
//! Segments of full length `n` can share a padded symbol with a shorter
//! segment; [`multirate::MultiRateCode::shadowed_segments`] says which.

pub mod cli;
pub mod error;
pub mod field;
pub mod golden;
pub mod matrix;
pub mod multirate;
pub mod props;
pub mod rank;
pub mod sim;
pub mod stream;
pub mod text;

pub use error::{Error, Result};
