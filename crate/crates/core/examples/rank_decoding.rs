//! Nearest-codeword decoding in the rank metric: a rank-1 error on the
//! mother code is corrected, a rank-2 one is not.

use multirate_mrd::field::FiniteField;
use multirate_mrd::multirate::MultiRateCode;
use multirate_mrd::rank::{rank_weight, ExhaustiveDecoder, RankDecoder};
use multirate_mrd::sim::random_rank_error;
use multirate_mrd::text::format_codeword;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> multirate_mrd::Result<()> {
    let code = MultiRateCode::preset("paper-8-3-k1")?;
    let t = code.tower();
    let top = t.top();
    let mother = code.mother();
    let decoder = ExhaustiveDecoder::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);

    let sent = mother.encode(&[top.from_log(26)])?;
    for r in 0..=2 {
        let e = random_rank_error(t, r, &mut rng)?;
        let rx: Vec<_> = sent.iter().zip(&e).map(|(&c, &x)| top.add(c, x)).collect();
        print!(
            "rank {} error, received {}: ",
            rank_weight(&**top, &e),
            format_codeword(t, &rx)
        );
        match decoder.decode(mother, &rx, mother.unique_decoding_radius()) {
            Ok(d) if d.codeword == sent => println!("corrected"),
            Ok(d) => println!(
                "decoded to another codeword {}",
                format_codeword(t, &d.codeword)
            ),
            Err(err) => println!("{err}"),
        }
    }
    Ok(())
}
