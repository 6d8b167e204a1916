//! Rank-error channel simulation.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FiniteField, GroundElement, TopElement, Tower};
use crate::matrix::Matrix;
use crate::multirate::{DecodeOptions, MessageBlock, MultiRateCode, Rate};
use crate::rank::{ExhaustiveDecoder, RankDecoder};

/// Probability weights over error ranks, written `0:0.5,1:0.5`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRankSpec {
    entries: Vec<(usize, f64)>,
}

impl ErrorRankSpec {
    pub fn new(entries: Vec<(usize, f64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidConfig("empty error-rank distribution".into()));
        }
        if let Some((r, w)) = entries.iter().find(|(_, w)| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidConfig(format!("rank {r} has bad weight {w}")));
        }
        if entries.iter().all(|(_, w)| *w == 0.0) {
            return Err(Error::InvalidConfig(
                "all error-rank weights are zero".into(),
            ));
        }
        Ok(Self { entries })
    }

    /// Every error has rank `r`.
    pub fn fixed(r: usize) -> Self {
        Self {
            entries: vec![(r, 1.0)],
        }
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn max_rank(&self) -> usize {
        self.entries.iter().map(|e| e.0).max().unwrap_or(0)
    }

    fn sampler(&self) -> WeightedIndex<f64> {
        WeightedIndex::new(self.entries.iter().map(|e| e.1)).expect("validated weights")
    }
}

impl std::str::FromStr for ErrorRankSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let col = offset + 1 + (part.len() - part.trim_start().len());
            offset += part.len() + 1;
            let (r, w) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::parse(1, col, "expected rank:weight"))?;
            let r = r
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, col, format!("bad rank {r:?}")))?;
            let w = w
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, col, format!("bad weight {w:?}")))?;
            entries.push((r, w));
        }
        Self::new(entries)
    }
}

#[derive(Debug, Clone)]
pub enum MessageSource {
    /// Uniform segment lengths, then uniform symbols.
    Uniform,
    /// Trial `i` sends block `i mod len`.
    Blocks(Vec<MessageBlock>),
}

#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub trials: u64,
    pub seed: u64,
    pub error_ranks: ErrorRankSpec,
    pub source: MessageSource,
    /// Mother decoder radius; defaults to the unique-decoding radius.
    pub t_max: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimulationReport {
    pub trials: u64,
    /// Injected error rank → count.
    pub errors_injected: BTreeMap<usize, u64>,
    pub decode_successes: u64,
    pub decode_failures: u64,
    /// Failures where the decoder returned an error.
    pub undecodable: u64,
    /// Failures where the decoder returned a different message.
    pub miscorrected: u64,
    /// Trials whose mother decoder recovered the transmitted codeword.
    pub mother_successes: u64,
    /// Trials whose block has a segment that no decoder can recover, because
    /// it shares its padded symbol with a shorter segment (see
    /// [`MultiRateCode::shadowed_segments`]).
    pub shadowed: u64,
    pub rates_used: BTreeMap<Rate, u64>,
    pub wall_time: Duration,
}

impl SimulationReport {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.decode_successes as f64 / self.trials as f64
    }
}

/// Deterministic part of the report; wall time is left out so that two runs
/// with one seed print identical text.
impl fmt::Display for SimulationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials: {}", self.trials)?;
        let hist: Vec<String> = self
            .errors_injected
            .iter()
            .map(|(r, c)| format!("{r}:{c}"))
            .collect();
        writeln!(f, "errors injected (rank:count): {}", hist.join(" "))?;
        writeln!(f, "decode successes: {}", self.decode_successes)?;
        writeln!(
            f,
            "decode failures: {} (undecodable {}, miscorrected {})",
            self.decode_failures, self.undecodable, self.miscorrected
        )?;
        writeln!(f, "mother decoder successes: {}", self.mother_successes)?;
        writeln!(f, "shadowed blocks: {}", self.shadowed)?;
        let rates: Vec<String> = self
            .rates_used
            .iter()
            .map(|(r, c)| format!("{r}:{c}"))
            .collect();
        write!(f, "rates used (rate:count): {}", rates.join(" "))
    }
}

enum Outcome {
    Success,
    Undecodable,
    Miscorrected,
}

struct Trial {
    rank: usize,
    mother_ok: bool,
    shadowed: bool,
    rate: Rate,
    outcome: Outcome,
}

pub fn random_message<R: Rng>(code: &MultiRateCode, rng: &mut R) -> MessageBlock {
    let g = code.tower().ground();
    let n = code.n();
    (0..code.k())
        .map(|_| {
            let len = rng.gen_range(1..=n);
            (0..len)
                .map(|_| g.element(rng.gen_range(0..g.order())))
                .collect()
        })
        .collect::<Vec<Vec<GroundElement>>>()
        .into()
}

/// A length-`n` error vector of rank exactly `r`, built as `A · B` with `A`
/// n×r and `B` r×n over the ground field; column `j` holds the coordinates
/// of symbol `j`.
pub fn random_rank_error<R: Rng>(tower: &Tower, r: usize, rng: &mut R) -> Result<Vec<TopElement>> {
    let n = tower.n();
    if r > n {
        return Err(Error::InvalidParameters(format!(
            "error rank {r} exceeds n = {n}"
        )));
    }
    let g = &**tower.ground();
    let mut random = |rows, cols| {
        let data = (0..rows * cols)
            .map(|_| g.element(rng.gen_range(0..g.order())))
            .collect();
        Matrix::new(rows, cols, data)
    };
    let e = loop {
        if r == 0 {
            break Matrix::zeros(g, n, n);
        }
        let e = random(n, r).mul(g, &random(r, n))?;
        if e.rank(g) == r {
            break e;
        }
    };
    (0..n).map(|j| tower.vec_to_top(&e.column(j))).collect()
}

fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn simulate(code: &MultiRateCode, cfg: &SimulationConfig) -> Result<SimulationReport> {
    simulate_with(code, &ExhaustiveDecoder::default(), cfg)
}

/// Runs `cfg.trials` independent trials in parallel. Each trial draws from
/// its own ChaCha stream, so the report does not depend on scheduling.
pub fn simulate_with(
    code: &MultiRateCode,
    decoder: &dyn RankDecoder<crate::field::TopField>,
    cfg: &SimulationConfig,
) -> Result<SimulationReport> {
    let n = code.n();
    if cfg.error_ranks.max_rank() > n {
        return Err(Error::InvalidParameters(format!(
            "error rank {} exceeds n = {n}",
            cfg.error_ranks.max_rank()
        )));
    }
    if let MessageSource::Blocks(blocks) = &cfg.source {
        if blocks.is_empty() && cfg.trials > 0 {
            return Err(Error::InvalidConfig("message file has no blocks".into()));
        }
        for b in blocks {
            code.validate(b)?;
        }
    }
    let start = Instant::now();
    let sampler = cfg.error_ranks.sampler();
    let top = code.tower().top();
    let options = DecodeOptions {
        t_max: cfg.t_max,
        diagnostics: false,
    };
    let trials = (0..cfg.trials)
        .into_par_iter()
        .map(|i| -> Result<Trial> {
            let mut rng = trial_rng(cfg.seed, i);
            let msg = match &cfg.source {
                MessageSource::Uniform => random_message(code, &mut rng),
                MessageSource::Blocks(b) => b[(i % b.len() as u64) as usize].clone(),
            };
            let rank = cfg.error_ranks.entries()[sampler.sample(&mut rng)].0;
            let err = random_rank_error(code.tower(), rank, &mut rng)?;
            let sent = code.encode(&msg)?;
            let received: Vec<_> = sent
                .iter()
                .zip(&err)
                .map(|(&c, &e)| top.add(c, e))
                .collect();
            let shadowed = !code.shadowed_segments(&msg)?.is_empty();
            let (outcome, mother_ok) = match code.decode_with(decoder, &received, options) {
                Ok(r) if r.block == msg => (Outcome::Success, true),
                Ok(r) => (Outcome::Miscorrected, r.mother.codeword == sent),
                Err(_) => (Outcome::Undecodable, false),
            };
            Ok(Trial {
                rank,
                mother_ok,
                shadowed,
                rate: code.rate_of(&msg),
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = SimulationReport {
        trials: cfg.trials,
        ..Default::default()
    };
    for t in trials {
        *report.errors_injected.entry(t.rank).or_default() += 1;
        *report.rates_used.entry(t.rate).or_default() += 1;
        report.mother_successes += u64::from(t.mother_ok);
        report.shadowed += u64::from(t.shadowed);
        match t.outcome {
            Outcome::Success => report.decode_successes += 1,
            Outcome::Undecodable => report.undecodable += 1,
            Outcome::Miscorrected => report.miscorrected += 1,
        }
    }
    report.decode_failures = report.undecodable + report.miscorrected;
    report.wall_time = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::rank_weight;

    fn cfg(trials: u64, spec: &str) -> SimulationConfig {
        SimulationConfig {
            trials,
            seed: 11,
            error_ranks: spec.parse().unwrap(),
            source: MessageSource::Uniform,
            t_max: None,
        }
    }

    #[test]
    fn parses_rank_spec() {
        let s: ErrorRankSpec = "0:0.5, 1:0.5".parse().unwrap();
        assert_eq!(s.entries(), &[(0, 0.5), (1, 0.5)]);
        assert!(matches!(
            "0:0.5,x".parse::<ErrorRankSpec>(),
            Err(Error::Parse { column: 7, .. })
        ));
        assert!("1:0".parse::<ErrorRankSpec>().is_err());
        assert!("1:-1".parse::<ErrorRankSpec>().is_err());
    }

    #[test]
    fn errors_have_the_requested_rank() {
        let t = Tower::paper_8_3();
        let mut rng = trial_rng(3, 0);
        for r in 0..=3 {
            for _ in 0..20 {
                let e = random_rank_error(&t, r, &mut rng).unwrap();
                assert_eq!(rank_weight(&**t.top(), &e), r);
            }
        }
        assert!(random_rank_error(&t, 4, &mut rng).is_err());
    }

    #[test]
    fn zero_trials() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let r = simulate(&code, &cfg(0, "1:1")).unwrap();
        assert_eq!(r.trials, 0);
        assert!(r.errors_injected.is_empty() && r.rates_used.is_empty());
    }

    #[test]
    fn deterministic_and_consistent() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let a = simulate(&code, &cfg(60, "0:0.5,1:0.5")).unwrap();
        let b = simulate(&code, &cfg(60, "0:0.5,1:0.5")).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.mother_successes, 60);
        assert_eq!(a.decode_failures, a.shadowed);
        assert_eq!(a.decode_successes + a.decode_failures, a.trials);
        let rates = code.achievable_rates();
        assert!(a.rates_used.keys().all(|r| rates.contains(r)));
    }

    #[test]
    fn rank_two_errors_are_not_counted_as_successes() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let r = simulate(&code, &cfg(40, "2:1")).unwrap();
        assert_eq!(r.errors_injected.get(&2), Some(&40));
        assert_eq!(r.decode_successes + r.decode_failures, 40);
        assert!(r.decode_failures > 0);
    }
}
