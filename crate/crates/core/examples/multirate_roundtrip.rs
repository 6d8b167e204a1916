//! Variable-length messages through one fixed-length code, for k = 1 and
//! k = 2, including the full-length blocks that cannot come back.

use multirate_mrd::field::FiniteField;
use multirate_mrd::multirate::{MessageBlock, MultiRateCode};
use multirate_mrd::text::{format_codeword, format_message, parse_message};

fn main() -> multirate_mrd::Result<()> {
    for (preset, lines) in [
        ("paper-8-3-k1", vec!["a", "a,0", "a,a^2,a^3", "1,1,1"]),
        (
            "paper-8-3-k2",
            vec!["a | a^2,a^3", "1,0,a^6 | a^4", "a^5,a^5 | 0"],
        ),
    ] {
        let code = MultiRateCode::preset(preset)?;
        let t = code.tower();
        let rates: Vec<String> = code
            .achievable_rates()
            .iter()
            .map(|r| r.to_string())
            .collect();
        println!("{preset}: rates {}", rates.join(", "));
        for line in lines {
            let msg = parse_message(t, line)?;
            let cw = code.encode(&msg)?;
            let back = code.decode(&cw)?;
            let shadowed = code.shadowed_segments(&msg)?;
            println!(
                "  ({}) rate {} -> {} -> ({}){}",
                format_message(t, &msg),
                code.rate_of(&msg),
                format_codeword(t, &cw),
                format_message(t, &back),
                if shadowed.is_empty() {
                    ""
                } else {
                    "  [shadowed]"
                }
            );
        }
    }

    let code = MultiRateCode::preset("paper-8-3-k1")?;
    let g = code.tower().ground();
    let mut lost = [0usize; 4];
    for len in 1..=3u32 {
        for idx in 0..g.order().pow(len) {
            let seg = (0..len)
                .map(|i| g.element(idx / g.order().pow(i) % g.order()))
                .collect();
            let msg = MessageBlock::new(vec![seg]);
            if code.decode(&code.encode(&msg)?)? != msg {
                lost[len as usize] += 1;
            }
        }
    }
    println!(
        "k = 1, blocks that do not round-trip by length: 1 -> {}, 2 -> {}, 3 -> {}",
        lost[1], lost[2], lost[3]
    );
    Ok(())
}
