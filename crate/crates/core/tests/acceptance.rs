//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Runs with `cargo test --test acceptance`; it has its own `main` so the
//! lines come out in order and unbuffered.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use multirate_mrd::field::{gram_matrix, FiniteField};
use multirate_mrd::golden::{verify_example, Status};
use multirate_mrd::matrix::{vec_mul, Matrix};
use multirate_mrd::multirate::{DecodeOptions, MessageBlock, MultiRateCode, Rate};
use multirate_mrd::rank::{min_rank_distance, ExhaustiveDecoder, DEFAULT_ENUMERATION_BOUND};
use multirate_mrd::sim::{
    random_message, simulate, ErrorRankSpec, MessageSource, SimulationConfig,
};
use multirate_mrd::text::{format_ground_tuple, format_message, parse_message};
use multirate_mrd::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict {
        pass,
        detail: detail.into(),
    })
}

fn k1() -> Result<MultiRateCode> {
    MultiRateCode::preset("paper-8-3-k1")
}

fn golden_example() -> Result<Verdict> {
    let start = Instant::now();
    let report = verify_example(&k1()?)?;
    let elapsed = start.elapsed();
    let errata: Vec<String> = report
        .errata()
        .map(|c| format!("{} published {} computed {}", c.name, c.expected, c.actual))
        .collect();
    let mut detail = format!(
        "{} checks, {} pass, {} fail, {} not reproducible ({:.0?})",
        report.checks.len(),
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Erratum),
        elapsed
    );
    if !errata.is_empty() {
        detail.push_str(&format!(
            "; published values that contradict the published m0 and projector: {}",
            errata.join("; ")
        ));
    }
    if let Some(m) = report.checks.iter().find(|c| c.status == Status::Fail) {
        detail.push_str(&format!(
            "; first failure {}: expected {}, got {}",
            m.name, m.expected, m.actual
        ));
    }
    verdict(
        report.all_reproduced() && elapsed < Duration::from_secs(1),
        detail,
    )
}

fn exhaustive_round_trip() -> Result<Verdict> {
    let code = k1()?;
    let g = code.tower().ground();
    let mut total = 0;
    let mut lost = [0usize; 4];
    for len in 1..=3u32 {
        for idx in 0..g.order().pow(len) {
            let seg = (0..len)
                .map(|i| g.element(idx / g.order().pow(i) % g.order()))
                .collect();
            let msg = MessageBlock::new(vec![seg]);
            total += 1;
            if code.decode(&code.encode(&msg)?)? != msg {
                lost[len as usize] += 1;
            }
        }
    }
    let failed: usize = lost.iter().sum();
    let symbols = code.tower().top().order() as usize;
    verdict(
        failed == 0,
        format!(
            "{}/{total} round-trip; failures by length 1/2/3: {}/{}/{}; {total} blocks map into {symbols} mother symbols, so at least {} must collide",
            total - failed,
            lost[1],
            lost[2],
            lost[3],
            total.saturating_sub(symbols)
        ),
    )
}

fn rank_one_trials() -> Result<Verdict> {
    let code = k1()?;
    let start = Instant::now();
    let report = simulate(
        &code,
        &SimulationConfig {
            trials: 1000,
            seed: 20_240_601,
            error_ranks: ErrorRankSpec::fixed(1),
            source: MessageSource::Uniform,
            t_max: None,
        },
    )?;
    let elapsed = start.elapsed();
    verdict(
        report.decode_successes == report.trials && elapsed < Duration::from_secs(30),
        format!(
            "{}/{} blocks recovered, mother codeword recovered in {}/{}, {} failures all from shadowed full-length blocks: {} ({:.1?})",
            report.decode_successes,
            report.trials,
            report.mother_successes,
            report.trials,
            report.decode_failures,
            report.decode_failures == report.shadowed,
            elapsed
        ),
    )
}

fn mrd_distances() -> Result<Verdict> {
    let code = k1()?;
    let mut ds = Vec::new();
    for c in code.children() {
        ds.push(min_rank_distance(c, DEFAULT_ENUMERATION_BOUND)?);
    }
    ds.push(min_rank_distance(code.mother(), DEFAULT_ENUMERATION_BOUND)?);
    verdict(
        ds == [3, 2, 1, 3],
        format!("d(C1), d(C2), d(C3), d(mother) = {ds:?}"),
    )
}

fn projector_algebra() -> Result<Verdict> {
    let code = k1()?;
    let g = &**code.tower().ground();
    let eye = Matrix::identity(g, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    for (i, c) in code.children().iter().enumerate() {
        let p = c.projector()?;
        let pd = c.projector_dual()?;
        let h = c.parity_check();
        if p.mul(g, p)? != *p {
            bad.push(format!("C{} P^2", i + 1));
        }
        if p.add(g, pd)? != eye {
            bad.push(format!("C{} P+Pd", i + 1));
        }
        if c.generator().mul(g, p)? != *c.generator() {
            bad.push(format!("C{} GP", i + 1));
        }
        if h.rows() > 0 && !h.mul(g, p)?.is_zero(g) {
            bad.push(format!("C{} HP", i + 1));
        }
        let gt = c.generator().transpose();
        for _ in 0..1000 {
            let v: Vec<_> = (0..3).map(|_| g.element(rng.gen_range(0..8))).collect();
            let inside = vec_mul(g, &v, p)?;
            let outside = vec_mul(g, &v, pd)?;
            let in_code = c.solve_message(&inside).is_ok() && c.contains(&inside)?;
            // the dual code has G as its parity check
            let in_dual = vec_mul(g, &outside, &gt)?.iter().all(|&x| g.is_zero(x));
            if !(in_code && in_dual) {
                bad.push(format!(
                    "C{} v={}",
                    i + 1,
                    format_ground_tuple(code.tower(), &v)
                ));
                break;
            }
        }
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() {
            "P^2 = P, P + Pd = I, GP = G, HP = 0 for C1..C3; 3 x 1000 random vectors split into code and dual".into()
        } else {
            format!("violations: {}", bad.join(", "))
        },
    )
}

fn lcd_determinants() -> Result<Verdict> {
    let code = k1()?;
    let t = code.tower();
    let g = &**t.ground();
    let mut dets = Vec::new();
    for c in code.children() {
        let d = c
            .generator()
            .mul(g, &c.generator().transpose())?
            .determinant(g)?;
        dets.push(d);
    }
    let logs: Vec<String> = dets
        .iter()
        .map(|&d| g.discrete_log(d).map_or("0".into(), |l| format!("a^{l}")))
        .collect();
    let basis_ok = code.basis().elements == [g.from_log(3), g.from_log(6), g.from_log(5)];
    let gram_ok = gram_matrix(g, &code.basis().elements) == Matrix::identity(&**t.prime(), 3);
    verdict(
        dets.iter().all(|&d| !g.is_zero(d)) && basis_ok && gram_ok,
        format!(
            "det(G_i G_i^T) = {}; basis {{a^3,a^6,a^5}}: {basis_ok}; Gram = I: {gram_ok}",
            logs.join(", ")
        ),
    )
}

fn pad_necessity() -> Result<Verdict> {
    let padded = k1()?;
    let bare = padded.without_pads();
    let t = padded.tower();
    let a = parse_message(t, "a")?;
    let b = parse_message(t, "a,0")?;
    let child = |code: &MultiRateCode, m: &MessageBlock| -> Result<Vec<_>> {
        Ok(code.encode_detailed(m)?.child_codewords[0].clone())
    };
    let expected_child = t.top_to_vec(t.top().from_log(133));
    let same_child = child(&bare, &a)? == expected_child && child(&bare, &b)? == expected_child;
    let bare_a = bare.encode(&a)?;
    let collide = bare_a == bare.encode(&b)?;
    // one codeword can only decode to one of the two messages
    let bare_decoded = bare.decode(&bare_a)?;
    let ambiguous = collide && (bare_decoded != a || bare_decoded != b);
    let padded_ok =
        padded.decode(&padded.encode(&a)?)? == a && padded.decode(&padded.encode(&b)?)? == b;
    verdict(
        same_child && ambiguous && padded_ok,
        format!(
            "child codewords (a^4,1,a^6) for both: {same_child}; without pads both send the same codeword: {collide} and it decodes to ({}); with pads both decode: {padded_ok}",
            format_message(t, &bare_decoded)
        ),
    )
}

fn rate_schedule() -> Result<Verdict> {
    let r = |a, b| Rate::new(a, b);
    let one = k1()?.achievable_rates();
    let two = MultiRateCode::preset("paper-8-3-k2")?.achievable_rates();
    let show = |s: &std::collections::BTreeSet<Rate>| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    verdict(
        one == [r(1, 9), r(2, 9), r(3, 9)].into()
            && two == [r(2, 9), r(3, 9), r(4, 9), r(5, 9), r(6, 9)].into(),
        format!("k=1 {{{}}}, k=2 {{{}}}", show(&one), show(&two)),
    )
}

fn k2_round_trip() -> Result<Verdict> {
    let code = MultiRateCode::preset("paper-8-3-k2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let options = DecodeOptions {
        t_max: Some(0),
        diagnostics: false,
    };
    let decoder = ExhaustiveDecoder::default();
    let (mut ok, mut shadowed) = (0, 0);
    let samples = 500;
    let mut lengths = std::collections::BTreeSet::new();
    for _ in 0..samples {
        let msg = random_message(&code, &mut rng);
        lengths.insert(msg.total_len());
        shadowed += usize::from(!code.shadowed_segments(&msg)?.is_empty());
        let cw = code.encode(&msg)?;
        if code.decode_with(&decoder, &cw, options)?.block == msg {
            ok += 1;
        }
    }
    verdict(
        ok == samples,
        format!(
            "{ok}/{samples} round-trip with t_max = 0 (total lengths {lengths:?}); {} failures, {shadowed} blocks contain a shadowed length-3 segment",
            samples - ok
        ),
    )
}

fn identification_uniqueness() -> Result<Verdict> {
    let code = k1()?;
    let top = code.tower().top();
    let multi: Vec<u64> = (0..top.order())
        .filter(|&i| code.matching_lengths(top.element(i)).len() > 1)
        .collect();
    verdict(
        multi.is_empty(),
        format!(
            "{} mother symbols scanned, {} match more than one length in {{1,2}}",
            top.order(),
            multi.len()
        ),
    )
}

type Criterion = fn() -> Result<Verdict>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 10] = [
        ("golden example", golden_example),
        ("exhaustive round-trip, k=1", exhaustive_round_trip),
        ("rank-1 error correction, 1000 trials", rank_one_trials),
        ("MRD distances", mrd_distances),
        ("projector algebra", projector_algebra),
        ("LCD determinants and Gram identity", lcd_determinants),
        ("pad necessity", pad_necessity),
        ("rate schedule", rate_schedule),
        ("k=2 round-trip, t_max=0", k2_round_trip),
        ("identification uniqueness", identification_uniqueness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (pass, detail) = match f() {
            Ok(v) => (v.pass, v.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!pass);
        println!(
            "criterion {:>2} {}: {name}: {detail}",
            i + 1,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
