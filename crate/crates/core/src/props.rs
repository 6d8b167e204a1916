//! Property checks over an arbitrary multirate code, exhaustive where the
//! spaces are small enough and sampled otherwise.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{gram_matrix, Extension, FiniteField, TopElement};
use crate::matrix::Matrix;
use crate::multirate::{MessageBlock, MultiRateCode};
use crate::rank::{min_rank_distance, DEFAULT_ENUMERATION_BOUND};
use crate::sim::{random_message, random_rank_error};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropResult {
    pub name: String,
    pub status: PropStatus,
    pub detail: String,
}

impl fmt::Display for PropResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            PropStatus::Pass => "PASS",
            PropStatus::Fail => "FAIL",
            PropStatus::Skipped => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

pub struct PropOptions {
    pub seed: u64,
    /// Samples per sampled property.
    pub trials: u64,
    /// Largest space enumerated exhaustively.
    pub bound: u64,
}

impl Default for PropOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 200,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

struct Runner {
    results: Vec<PropResult>,
}

impl Runner {
    fn record(&mut self, name: &str, outcome: Result<std::result::Result<String, String>>) {
        let (status, detail) = match outcome {
            Ok(Ok(d)) => (PropStatus::Pass, d),
            Ok(Err(d)) => (PropStatus::Fail, d),
            Err(Error::TooLarge { size, bound }) => (
                PropStatus::Skipped,
                format!("space of {size} exceeds enumeration bound {bound}"),
            ),
            Err(e) => (PropStatus::Fail, e.to_string()),
        };
        self.results.push(PropResult {
            name: name.into(),
            status,
            detail,
        });
    }
}

fn expect(
    ok: bool,
    pass: impl Into<String>,
    fail: impl FnOnce() -> String,
) -> std::result::Result<String, String> {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail())
    }
}

pub fn run_props(code: &MultiRateCode, opts: &PropOptions) -> Vec<PropResult> {
    let mut r = Runner {
        results: Vec::new(),
    };
    let tower = code.tower();
    let g = &**tower.ground();
    let top = &**tower.top();
    let n = code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    r.record("frobenius is additive", {
        let ok = (0..opts.trials).all(|_| {
            let a = top.element(rng.gen_range(0..top.order()));
            let b = top.element(rng.gen_range(0..top.order()));
            top.frobenius(top.add(a, b)) == top.add(top.frobenius(a), top.frobenius(b))
        });
        Ok(expect(ok, format!("{} samples", opts.trials), || {
            "counterexample found".into()
        }))
    });

    r.record("trace is GF(q)-linear", {
        let ok = (0..opts.trials).all(|_| {
            let a = top.element(rng.gen_range(0..top.order()));
            let b = top.element(rng.gen_range(0..top.order()));
            let c = g.element(rng.gen_range(0..g.order()));
            let lhs = top.trace(top.add(top.mul(top.embed(c), a), b));
            lhs == g.add(g.mul(c, top.trace(a)), top.trace(b))
        });
        Ok(expect(ok, format!("{} samples", opts.trials), || {
            "counterexample found".into()
        }))
    });

    r.record("vec_to_top inverts top_to_vec", {
        let samples = top.order().min(opts.bound);
        let ok = (0..samples).all(|i| {
            let e = if top.order() <= opts.bound {
                top.element(i)
            } else {
                top.element(rng.gen_range(0..top.order()))
            };
            tower.vec_to_top(&tower.top_to_vec(e)).ok() == Some(e)
        });
        Ok(expect(ok, format!("{samples} elements"), || {
            "mismatch".into()
        }))
    });

    r.record("basis is self-complementary", {
        let gram = gram_matrix(g, &code.basis().elements);
        Ok(expect(
            gram == Matrix::identity(&**tower.prime(), n),
            "Gram matrix = I",
            || "Gram matrix differs from I".into(),
        ))
    });

    for (i, child) in code.children().iter().enumerate() {
        let name = format!("C{}", i + 1);
        r.record(&format!("{name} is LCD"), {
            let gram = child.generator().mul(g, &child.generator().transpose());
            gram.and_then(|m| m.determinant(g))
                .map(|d| expect(!g.is_zero(d), "det(G G^T) != 0", || "det(G G^T) = 0".into()))
        });
        r.record(
            &format!("{name} projector identities"),
            (|| {
                let p = child.projector()?;
                let pd = child.projector_dual()?;
                let eye = Matrix::identity(g, n);
                let checks = [
                    ("P^2 = P", p.mul(g, p)? == *p),
                    ("P + Pd = I", p.add(g, pd)? == eye),
                    (
                        "G P = G",
                        child.generator().mul(g, p)? == *child.generator(),
                    ),
                    (
                        "H P = 0",
                        child.parity_check().rows() == 0
                            || child.parity_check().mul(g, p)?.is_zero(g),
                    ),
                ];
                let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
                Ok(expect(
                    failed.is_empty(),
                    "P^2 = P, P + Pd = I, G P = G, H P = 0",
                    || format!("violated: {}", failed.join(", ")),
                ))
            })(),
        );
        r.record(&format!("{name} is MRD"), {
            min_rank_distance(child, opts.bound).map(|d| {
                let want = n - child.k() + 1;
                expect(d == want, format!("d = {d}"), || {
                    format!("d = {d}, expected {want}")
                })
            })
        });
    }

    r.record("mother is MRD", {
        let mother = code.mother();
        min_rank_distance(mother, opts.bound).map(|d| {
            let want = n - mother.k() + 1;
            expect(d == want, format!("d = {d}"), || {
                format!("d = {d}, expected {want}")
            })
        })
    });

    r.record(
        "identification is unique below n",
        (|| {
            if top.order() > opts.bound {
                return Err(Error::TooLarge {
                    size: top.order() as u128,
                    bound: opts.bound,
                });
            }
            let multi = (0..top.order())
                .map(|i| top.element(i))
                .find(|&e| code.matching_lengths(e).len() > 1);
            Ok(expect(
                multi.is_none(),
                format!("{} symbols scanned", top.order()),
                || format!("symbol {:?} matches several lengths", multi),
            ))
        })(),
    );

    r.record("short segments round-trip", {
        let ok = (0..opts.trials).all(|_| {
            let mut msg = random_message(code, &mut rng);
            let segs: Vec<Vec<_>> = msg
                .segments()
                .iter()
                .map(|s| s[..s.len().min(n - 1).max(1)].to_vec())
                .collect();
            msg = MessageBlock::new(segs);
            code.encode(&msg).and_then(|c| code.decode(&c)).ok() == Some(msg)
        });
        Ok(expect(
            ok,
            format!("{} blocks with all lengths < n", opts.trials),
            || "a block failed to round-trip".into(),
        ))
    });

    r.record(
        "shadowing equals the counting bound",
        (|| {
            // Each padded symbol hit by a shorter length steals one length-n segment.
            if top.order() > opts.bound {
                return Err(Error::TooLarge {
                    size: top.order() as u128,
                    bound: opts.bound,
                });
            }
            let stolen = (0..top.order())
                .filter(|&i| code.identify_segment(top.element(i)).length < n)
                .count() as u64;
            let q = g.order();
            let bound: u64 = (1..n as u32).map(|l| q.pow(l)).sum();
            Ok(expect(
                stolen == bound,
                format!("{stolen} of {} full-length segments shadowed", top.order()),
                || format!("{stolen} shadowed, expected {bound}"),
            ))
        })(),
    );

    r.record(
        "rank errors within radius are corrected by the mother",
        (|| {
            let mother = code.mother();
            let t = mother.unique_decoding_radius();
            let decoder = crate::rank::ExhaustiveDecoder { bound: opts.bound };
            let mut ok = true;
            for _ in 0..opts.trials.min(100) {
                let msg: Vec<TopElement> = (0..mother.k())
                    .map(|_| top.element(rng.gen_range(0..top.order())))
                    .collect();
                let cw = mother.encode(&msg)?;
                let rank = rng.gen_range(0..=t);
                let err = random_rank_error(tower, rank, &mut rng)?;
                let rx: Vec<_> = cw.iter().zip(&err).map(|(&c, &e)| top.add(c, e)).collect();
                let d = crate::rank::RankDecoder::decode(&decoder, mother, &rx, t)?;
                ok &= d.codeword == cw;
            }
            Ok(expect(ok, format!("radius {t}"), || {
                "a correctable error was not corrected".into()
            }))
        })(),
    );

    r.results
}

pub fn all_passed(results: &[PropResult]) -> bool {
    results.iter().all(|r| r.status != PropStatus::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_satisfy_every_property() {
        for name in crate::multirate::PRESETS {
            let code = MultiRateCode::preset(name).unwrap();
            let res = run_props(
                &code,
                &PropOptions {
                    trials: 30,
                    ..Default::default()
                },
            );
            assert!(all_passed(&res), "{name}: {res:#?}");
        }
    }

    #[test]
    fn small_bound_skips() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let res = run_props(
            &code,
            &PropOptions {
                trials: 5,
                bound: 16,
                seed: 1,
            },
        );
        assert!(res.iter().any(|r| r.status == PropStatus::Skipped));
    }
}
