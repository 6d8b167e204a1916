//! The multiple-rate scheme: segment, child-encode, pad, mother-encode, and
//! the inverse pipeline with projector-based length identification.

mod codec;
mod message;
mod pads;

pub use codec::{
    DecodeOptions, DecodeReport, Encoding, Identification, MultiRateCode, ProjectionStep, Rate,
    PRESETS,
};
pub use message::MessageBlock;
pub use pads::PadTable;
