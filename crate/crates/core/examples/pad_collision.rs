//! (a) and (a,0) produce the same child codeword; without pads they also
//! produce the same transmitted codeword.

use multirate_mrd::multirate::MultiRateCode;
use multirate_mrd::text::{format_codeword, format_ground_tuple, format_message, parse_message};

fn main() -> multirate_mrd::Result<()> {
    let padded = MultiRateCode::preset("paper-8-3-k1")?;
    let bare = padded.without_pads();
    let t = padded.tower();
    for code in [&padded, &bare] {
        println!("pads disabled: {}", code.pads().is_disabled());
        for line in ["a", "a,0"] {
            let msg = parse_message(t, line)?;
            let enc = code.encode_detailed(&msg)?;
            let back = code.decode(&enc.codeword)?;
            println!(
                "  ({line}): child {} sent {} decoded ({})",
                format_ground_tuple(t, &enc.child_codewords[0]),
                format_codeword(t, &enc.codeword),
                format_message(t, &back)
            );
        }
    }
    Ok(())
}
