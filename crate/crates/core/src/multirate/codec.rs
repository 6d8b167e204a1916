use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::Ratio;

use super::{MessageBlock, PadTable};
use crate::error::{Error, Result};
use crate::field::{
    find_self_complementary_normal_basis, FiniteField, GroundBasis, GroundElement, GroundField,
    TopElement, TopField, Tower, TowerConfig,
};
use crate::matrix::vec_mul;
use crate::rank::{CodeSpec, Decoded, ExhaustiveDecoder, RankDecoder};

/// Code rate ℓ / n² in lowest terms.
pub type Rate = Ratio<u64>;

/// Names accepted by [`MultiRateCode::preset`].
pub const PRESETS: &[&str] = &["paper-8-3-k1", "paper-8-3-k2"];

/// One step of the projector search for a single mother-decoded coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionStep {
    pub length: usize,
    /// `m″ − β′_ℓ` as a vector over GF(q).
    pub m0: Vec<GroundElement>,
    /// `m0 · Π_ℓ`.
    pub m1: Vec<GroundElement>,
    /// `m0 · Π_ℓ^⊥`.
    pub m2: Vec<GroundElement>,
    pub matched: bool,
}

/// Result of recovering the segment length of one coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub length: usize,
    pub child_codeword: Vec<GroundElement>,
    /// Steps for ℓ = 1 up to the match (or up to n − 1 on fallthrough).
    pub steps: Vec<ProjectionStep>,
}

/// Intermediate values of [`MultiRateCode::encode_detailed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    /// m′ᵢ: child codewords over GF(q).
    pub child_codewords: Vec<Vec<GroundElement>>,
    /// m′ᵢ viewed in GF(q^n).
    pub child_symbols: Vec<TopElement>,
    /// m″ᵢ = m′ᵢ + β′_ℓᵢ.
    pub padded: Vec<TopElement>,
    pub codeword: Vec<TopElement>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DecodeOptions {
    /// Rank radius for the mother decoder; defaults to ⌊(d − 1)/2⌋.
    pub t_max: Option<usize>,
    /// Also test every ℓ < n and record coordinates where several match.
    pub diagnostics: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub block: MessageBlock,
    pub mother: Decoded<TopElement>,
    pub identifications: Vec<Identification>,
    /// `(coordinate, qualifying lengths)` wherever more than one ℓ < n matched.
    pub multi_matches: Vec<(usize, Vec<usize>)>,
}

/// A mother MRD code over GF(q^n) plus `n` LCD children over GF(q).
///
/// Child `i` (1-based) is the `i`-dimensional Gabidulin code over a
/// self-complementary normal basis of GF(q); the mother is the
/// `k`-dimensional Gabidulin code over `{1, β, …, β^(n-1)}`.
#[derive(Debug, Clone)]
pub struct MultiRateCode {
    tower: Tower,
    basis: GroundBasis,
    mother: CodeSpec<TopField>,
    children: Vec<CodeSpec<GroundField>>,
    pads: PadTable,
}

impl MultiRateCode {
    /// `pad_alphas` overrides the default pads α′_ℓ = α^ℓ.
    pub fn build(tower: Tower, k: usize, pad_alphas: Option<Vec<GroundElement>>) -> Result<Self> {
        let n = tower.n();
        if k == 0 || k > n {
            return Err(Error::InvalidParameters(format!(
                "mother dimension {k} outside 1..={n}"
            )));
        }
        let basis = find_self_complementary_normal_basis(&**tower.ground())?;
        let children = (1..=n)
            .map(|i| CodeSpec::moore(Arc::clone(tower.ground()), &basis.elements, i))
            .collect::<Result<Vec<_>>>()?;
        if let Some(i) = children.iter().position(|c| !c.is_lcd()) {
            return Err(Error::InvalidParameters(format!(
                "child code {} is not LCD",
                i + 1
            )));
        }
        let top = tower.top();
        let mother_basis: Vec<TopElement> =
            (0..n as u64).map(|i| top.pow(tower.beta(), i)).collect();
        let mother = CodeSpec::moore(Arc::clone(top), &mother_basis, k)?;
        let pads = match pad_alphas {
            Some(alphas) => PadTable::new(&tower, alphas)?,
            None => PadTable::default_for(&tower),
        };
        Ok(Self {
            tower,
            basis,
            mother,
            children,
            pads,
        })
    }

    /// `paper-8-3-k1` or `paper-8-3-k2`.
    pub fn preset(name: &str) -> Result<Self> {
        let k = match name {
            "paper-8-3-k1" => 1,
            "paper-8-3-k2" => 2,
            _ => {
                return Err(Error::InvalidConfig(format!(
                    "unknown preset {name:?}; known: {}",
                    PRESETS.join(", ")
                )))
            }
        };
        Self::build(Tower::new(TowerConfig::paper_8_3())?, k, None)
    }

    /// Same code with every pad set to zero.
    pub fn without_pads(&self) -> Self {
        Self {
            pads: PadTable::disabled(&self.tower),
            ..self.clone()
        }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn n(&self) -> usize {
        self.tower.n()
    }

    pub fn k(&self) -> usize {
        self.mother.k()
    }

    pub fn basis(&self) -> &GroundBasis {
        &self.basis
    }

    pub fn mother(&self) -> &CodeSpec<TopField> {
        &self.mother
    }

    /// Child code of dimension `len` (1-based).
    pub fn child(&self, len: usize) -> &CodeSpec<GroundField> {
        &self.children[len - 1]
    }

    pub fn children(&self) -> &[CodeSpec<GroundField>] {
        &self.children
    }

    pub fn pads(&self) -> &PadTable {
        &self.pads
    }

    pub fn validate(&self, msg: &MessageBlock) -> Result<()> {
        if msg.segments().len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: msg.segments().len(),
            });
        }
        let n = self.n();
        for (index, seg) in msg.segments().iter().enumerate() {
            if seg.is_empty() || seg.len() > n {
                return Err(Error::BadSegmentLength {
                    index,
                    len: seg.len(),
                    n,
                });
            }
        }
        Ok(())
    }

    pub fn encode(&self, msg: &MessageBlock) -> Result<Vec<TopElement>> {
        Ok(self.encode_detailed(msg)?.codeword)
    }

    pub fn encode_detailed(&self, msg: &MessageBlock) -> Result<Encoding> {
        self.validate(msg)?;
        let top = self.tower.top();
        let mut child_codewords = Vec::with_capacity(self.k());
        let mut child_symbols = Vec::with_capacity(self.k());
        let mut padded = Vec::with_capacity(self.k());
        for seg in msg.segments() {
            let len = seg.len();
            let cw = self.child(len).encode(seg)?;
            let sym = self.tower.vec_to_top(&cw)?;
            padded.push(top.add(sym, self.pads.beta(len)));
            child_symbols.push(sym);
            child_codewords.push(cw);
        }
        let codeword = self.mother.encode(&padded)?;
        Ok(Encoding {
            child_codewords,
            child_symbols,
            padded,
            codeword,
        })
    }

    fn projection_step(&self, m_dd: TopElement, len: usize) -> ProjectionStep {
        let ground = &**self.tower.ground();
        let top = self.tower.top();
        let m0 = self.tower.top_to_vec(top.sub(m_dd, self.pads.beta(len)));
        let proj = self
            .child(len)
            .projectors()
            .expect("children are LCD by construction");
        let m1 = vec_mul(ground, &m0, &proj.code).expect("length n");
        let m2 = vec_mul(ground, &m0, &proj.dual).expect("length n");
        let matched = m1 == m0 && m2.iter().all(|&x| ground.is_zero(x));
        ProjectionStep {
            length: len,
            m0,
            m1,
            m2,
            matched,
        }
    }

    /// First ℓ in `1..n` whose projector conditions hold; `n` otherwise.
    pub fn identify_segment(&self, m_dd: TopElement) -> Identification {
        let n = self.n();
        let mut steps = Vec::new();
        for len in 1..n {
            let step = self.projection_step(m_dd, len);
            let matched = step.matched;
            let m0 = step.m0.clone();
            steps.push(step);
            if matched {
                return Identification {
                    length: len,
                    child_codeword: m0,
                    steps,
                };
            }
        }
        let top = self.tower.top();
        Identification {
            length: n,
            child_codeword: self.tower.top_to_vec(top.sub(m_dd, self.pads.beta(n))),
            steps,
        }
    }

    /// Every ℓ in `1..n` whose projector conditions hold.
    pub fn matching_lengths(&self, m_dd: TopElement) -> Vec<usize> {
        (1..self.n())
            .filter(|&len| self.projection_step(m_dd, len).matched)
            .collect()
    }

    /// Segments the decoder will attribute to a shorter length, as
    /// `(segment index, length the decoder picks)`.
    ///
    /// Only full-length segments can be affected: C_n is all of GF(q)^n, so
    /// the q^n padded symbols of length-n segments cover the whole of
    /// GF(q^n), including every symbol produced by a shorter segment.
    pub fn shadowed_segments(&self, msg: &MessageBlock) -> Result<Vec<(usize, usize)>> {
        let enc = self.encode_detailed(msg)?;
        Ok(enc
            .padded
            .iter()
            .zip(msg.segments())
            .enumerate()
            .filter_map(|(i, (&m_dd, seg))| {
                let picked = self.identify_segment(m_dd).length;
                (picked != seg.len()).then_some((i, picked))
            })
            .collect())
    }

    /// Decodes with the exhaustive mother decoder at the unique-decoding radius.
    pub fn decode(&self, received: &[TopElement]) -> Result<MessageBlock> {
        Ok(self
            .decode_with(
                &ExhaustiveDecoder::default(),
                received,
                DecodeOptions::default(),
            )?
            .block)
    }

    pub fn decode_with(
        &self,
        decoder: &dyn RankDecoder<TopField>,
        received: &[TopElement],
        options: DecodeOptions,
    ) -> Result<DecodeReport> {
        let t_max = options
            .t_max
            .unwrap_or_else(|| self.mother.unique_decoding_radius());
        let mother = decoder.decode(&self.mother, received, t_max)?;
        let mut segments = Vec::with_capacity(self.k());
        let mut identifications = Vec::with_capacity(self.k());
        let mut multi_matches = Vec::new();
        for (coordinate, &m_dd) in mother.message.iter().enumerate() {
            let id = self.identify_segment(m_dd);
            if options.diagnostics {
                let all = self.matching_lengths(m_dd);
                if all.len() > 1 {
                    multi_matches.push((coordinate, all));
                }
            }
            let seg = self
                .child(id.length)
                .solve_message(&id.child_codeword)
                .map_err(|_| Error::IdentificationFailure {
                    coordinate,
                    length: id.length,
                })?;
            segments.push(seg);
            identifications.push(id);
        }
        Ok(DecodeReport {
            block: MessageBlock::new(segments),
            mother,
            identifications,
            multi_matches,
        })
    }

    /// ℓ / n².
    pub fn rate_of(&self, msg: &MessageBlock) -> Rate {
        let n = self.n() as u64;
        Rate::new(msg.total_len() as u64, n * n)
    }

    /// `{ℓ / n² : k ≤ ℓ ≤ kn}`.
    pub fn achievable_rates(&self) -> BTreeSet<Rate> {
        let n = self.n() as u64;
        let k = self.k() as u64;
        (k..=k * n).map(|l| Rate::new(l, n * n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(t: &Tower, e: u64) -> GroundElement {
        t.ground().from_log(e)
    }

    #[test]
    fn rejects_bad_dimension() {
        let t = Tower::paper_8_3();
        assert!(matches!(
            MultiRateCode::build(t.clone(), 4, None),
            Err(Error::InvalidParameters(_))
        ));
        assert!(MultiRateCode::build(t, 0, None).is_err());
        assert!(MultiRateCode::preset("nope").is_err());
    }

    #[test]
    fn rejects_bad_segments() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let t = code.tower().clone();
        let long = MessageBlock::new(vec![vec![a(&t, 1); 4]]);
        assert_eq!(
            code.encode(&long),
            Err(Error::BadSegmentLength {
                index: 0,
                len: 4,
                n: 3
            })
        );
        let empty = MessageBlock::new(vec![vec![]]);
        assert!(matches!(
            code.encode(&empty),
            Err(Error::BadSegmentLength { .. })
        ));
        let two = MessageBlock::new(vec![vec![a(&t, 1)], vec![a(&t, 1)]]);
        assert!(matches!(
            code.encode(&two),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn identification_falls_through_to_n() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let t = code.tower();
        let id = code.identify_segment(t.top().from_log(399));
        assert_eq!(id.length, 3);
        assert_eq!(id.steps.len(), 2);
        assert_eq!(id.child_codeword, vec![a(t, 4), a(t, 6), a(t, 4)]);
    }

    #[test]
    fn shadowing() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let t = code.tower().clone();
        // 1,1,1 lands on the padded symbol of the length-1 message (0)
        let full = MessageBlock::new(vec![vec![t.ground().one(); 3]]);
        assert_eq!(code.shadowed_segments(&full).unwrap(), vec![(0, 1)]);
        let decoded = code.decode(&code.encode(&full).unwrap()).unwrap();
        assert_eq!(decoded, MessageBlock::new(vec![vec![t.ground().zero()]]));
        let short = MessageBlock::new(vec![vec![a(&t, 1), a(&t, 2)]]);
        assert!(code.shadowed_segments(&short).unwrap().is_empty());
    }

    #[test]
    fn rates() {
        let k2 = MultiRateCode::preset("paper-8-3-k2").unwrap();
        let t = k2.tower().clone();
        let msg = MessageBlock::new(vec![vec![a(&t, 1); 2], vec![a(&t, 2); 3]]);
        assert_eq!(k2.rate_of(&msg), Rate::new(5, 9));
        let k1 = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let full = MessageBlock::new(vec![vec![a(&t, 1); 3]]);
        assert_eq!(k1.rate_of(&full), Rate::new(1, 3));
    }
}
