use std::collections::BTreeSet;

use multirate_mrd::field::{FiniteField, GroundElement, TopElement};
use multirate_mrd::multirate::{DecodeOptions, MessageBlock, MultiRateCode, Rate};
use multirate_mrd::rank::ExhaustiveDecoder;
use multirate_mrd::sim::random_rank_error;
use multirate_mrd::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn k1() -> MultiRateCode {
    MultiRateCode::preset("paper-8-3-k1").unwrap()
}

fn k2() -> MultiRateCode {
    MultiRateCode::preset("paper-8-3-k2").unwrap()
}

fn all_segments(code: &MultiRateCode, len: u32) -> impl Iterator<Item = Vec<GroundElement>> + '_ {
    let g = code.tower().ground();
    let q = g.order();
    (0..q.pow(len)).map(move |idx| (0..len).map(|i| g.element(idx / q.pow(i) % q)).collect())
}

fn segment() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(0u64..8, 1..=3)
}

fn block(code: &MultiRateCode, segs: &[Vec<u64>]) -> MessageBlock {
    let g = code.tower().ground();
    segs.iter()
        .map(|s| s.iter().map(|&i| g.element(i)).collect())
        .collect::<Vec<Vec<_>>>()
        .into()
}

#[test]
fn short_segments_always_round_trip() {
    let code = k1();
    for len in 1..=2 {
        for seg in all_segments(&code, len) {
            let msg = MessageBlock::new(vec![seg]);
            assert_eq!(code.decode(&code.encode(&msg).unwrap()).unwrap(), msg);
        }
    }
}

/// A full-length block fails exactly when its padded symbol also passes the
/// projector test for a shorter length.
#[test]
fn full_length_failures_are_exactly_the_shadowed_blocks() {
    let code = k1();
    let mut failures = 0;
    for seg in all_segments(&code, 3) {
        let msg = MessageBlock::new(vec![seg]);
        let shadowed = !code.shadowed_segments(&msg).unwrap().is_empty();
        let ok = code.decode(&code.encode(&msg).unwrap()).unwrap() == msg;
        assert_eq!(ok, !shadowed);
        failures += usize::from(!ok);
    }
    assert_eq!(failures, 8 + 64);
}

#[test]
fn encoding_covers_every_mother_symbol() {
    // 584 messages into 512 symbols: the counting argument behind shadowing
    let code = k1();
    let mut images = BTreeSet::new();
    let mut total = 0;
    for len in 1..=3 {
        for seg in all_segments(&code, len) {
            let enc = code.encode_detailed(&MessageBlock::new(vec![seg])).unwrap();
            images.insert(enc.padded[0]);
            total += 1;
        }
    }
    assert_eq!(total, 584);
    assert_eq!(images.len(), 512);
}

#[test]
fn identification_is_unique_below_n() {
    let code = k1();
    let top = code.tower().top();
    for i in 0..512 {
        assert!(code.matching_lengths(top.element(i)).len() <= 1);
    }
}

#[test]
fn rate_schedules() {
    let r = |a, b| Rate::new(a, b);
    assert_eq!(k1().achievable_rates(), [r(1, 9), r(2, 9), r(3, 9)].into());
    assert_eq!(
        k2().achievable_rates(),
        [r(2, 9), r(3, 9), r(4, 9), r(5, 9), r(6, 9)].into()
    );
}

#[test]
fn diagnostics_report_no_multi_matches() {
    let code = k2();
    let g = code.tower().ground();
    let msg = MessageBlock::new(vec![vec![g.one()], vec![g.from_log(2), g.zero()]]);
    let cw = code.encode(&msg).unwrap();
    let opts = DecodeOptions {
        t_max: Some(0),
        diagnostics: true,
    };
    let report = code
        .decode_with(&ExhaustiveDecoder::default(), &cw, opts)
        .unwrap();
    assert_eq!(report.block, msg);
    assert!(report.multi_matches.is_empty());
    assert_eq!(report.identifications.len(), 2);
}

#[test]
fn k2_rejects_nonzero_radius() {
    let code = k2();
    let cw = code
        .encode(&MessageBlock::new(vec![vec![code.tower().alpha()]; 2]))
        .unwrap();
    let opts = DecodeOptions {
        t_max: Some(1),
        diagnostics: false,
    };
    assert!(matches!(
        code.decode_with(&ExhaustiveDecoder::default(), &cw, opts),
        Err(Error::RadiusTooLarge { .. })
    ));
}

proptest! {
    #[test]
    fn k2_round_trips_unless_shadowed(a in segment(), b in segment()) {
        let code = k2();
        let msg = block(&code, &[a, b]);
        let shadowed = !code.shadowed_segments(&msg).unwrap().is_empty();
        let back = code.decode(&code.encode(&msg).unwrap()).unwrap();
        prop_assert_eq!(back == msg, !shadowed);
        prop_assert!(code.achievable_rates().contains(&code.rate_of(&msg)));
    }

    #[test]
    fn rank_one_errors_do_not_change_the_outcome(a in segment(), seed in any::<u64>()) {
        let code = k1();
        let msg = block(&code, &[a]);
        let sent = code.encode(&msg).unwrap();
        let clean = code.decode(&sent).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_rank_error(code.tower(), 1, &mut rng).unwrap();
        let top = code.tower().top();
        let rx: Vec<TopElement> = sent.iter().zip(&e).map(|(&c, &x)| top.add(c, x)).collect();
        prop_assert_eq!(code.decode(&rx).unwrap(), clean);
    }

    #[test]
    fn padded_symbols_carry_the_pad_of_their_length(a in segment()) {
        let code = k1();
        let len = a.len();
        let enc = code.encode_detailed(&block(&code, &[a])).unwrap();
        let top = code.tower().top();
        prop_assert_eq!(code.mother().solve_message(&enc.codeword).unwrap(), enc.padded.clone());
        prop_assert!(code.child(len).contains(&enc.child_codewords[0]).unwrap());
        prop_assert_eq!(top.sub(enc.padded[0], enc.child_symbols[0]), code.pads().beta(len));
    }
}
