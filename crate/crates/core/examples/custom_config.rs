//! A code built from a config file instead of a preset: GF(4) inside GF(16).

use multirate_mrd::text::{
    format_codeword, format_config, format_message, parse_config, parse_message,
};

const CONFIG: &str = "\
# GF(4) = GF(2)[a]/(a^2 + a + 1), GF(16) = GF(4)[b]/(b^2 + b + a)
p=2
n=2
ground_poly=1,1,1
top_poly=a,1,1
k=1
";

fn main() -> multirate_mrd::Result<()> {
    let cfg = parse_config(CONFIG)?;
    let code = cfg.build()?;
    let t = code.tower();
    print!("{}", format_config(t, code.k(), cfg.seed));
    for line in ["a", "1", "a,a^2", "0,1"] {
        let msg = parse_message(t, line)?;
        let cw = code.encode(&msg)?;
        let back = code.decode(&cw)?;
        println!(
            "({line}) -> {} -> ({})",
            format_codeword(t, &cw),
            format_message(t, &back)
        );
    }
    match parse_config("p=2\nn=2\nground_poly=1,1,1\ntop_poly=a,1,x\n") {
        Err(e) => println!("bad config: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
