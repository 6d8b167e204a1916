use crate::error::{Error, Result};
use crate::field::{Extension, FiniteField, GroundElement, TopElement, Tower};

/// Pad elements β′_ℓ = (α′_ℓ, …, α′_ℓ) added to a child codeword of length-ℓ
/// segments so the decoder can tell which child code produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadTable {
    alphas: Vec<GroundElement>,
    betas: Vec<TopElement>,
}

impl PadTable {
    /// Validates `n` distinct ground elements lying outside the prime field.
    pub fn new(tower: &Tower, alphas: Vec<GroundElement>) -> Result<Self> {
        let n = tower.n();
        if alphas.len() != n {
            return Err(Error::BadPadTable(format!(
                "expected {n} pad elements, got {}",
                alphas.len()
            )));
        }
        for (i, &a) in alphas.iter().enumerate() {
            if in_prime_field(tower, a) {
                return Err(Error::BadPadTable(format!(
                    "pad {} lies in the prime field",
                    i + 1
                )));
            }
            if alphas[..i].contains(&a) {
                return Err(Error::BadPadTable(format!("pad {} is repeated", i + 1)));
            }
        }
        Ok(Self::from_alphas(tower, alphas))
    }

    /// α′_ℓ = α^ℓ, skipping forward past exponents that land in GF(p) or repeat.
    pub fn default_for(tower: &Tower) -> Self {
        let g = tower.ground();
        let mut alphas = Vec::with_capacity(tower.n());
        let mut e = 1u64;
        while alphas.len() < tower.n() {
            let a = g.from_log(e);
            if !in_prime_field(tower, a) && !alphas.contains(&a) {
                alphas.push(a);
            }
            e += 1;
        }
        Self::from_alphas(tower, alphas)
    }

    /// All-zero pads. Decoding with these is ambiguous whenever two child
    /// codes share a codeword; useful only to demonstrate why pads exist.
    pub fn disabled(tower: &Tower) -> Self {
        Self::from_alphas(tower, vec![tower.ground().zero(); tower.n()])
    }

    fn from_alphas(tower: &Tower, alphas: Vec<GroundElement>) -> Self {
        let n = tower.n();
        let betas = alphas
            .iter()
            .map(|&a| {
                tower
                    .vec_to_top(&vec![a; n])
                    .expect("constant vector has length n")
            })
            .collect();
        Self { alphas, betas }
    }

    pub fn is_disabled(&self) -> bool {
        self.alphas.iter().all(|a| *a == GroundElement::default())
    }

    /// α′_ℓ for segment length `len` (1-based).
    pub fn alpha(&self, len: usize) -> GroundElement {
        self.alphas[len - 1]
    }

    /// β′_ℓ for segment length `len` (1-based).
    pub fn beta(&self, len: usize) -> TopElement {
        self.betas[len - 1]
    }

    pub fn alphas(&self) -> &[GroundElement] {
        &self.alphas
    }

    pub fn betas(&self) -> &[TopElement] {
        &self.betas
    }
}

fn in_prime_field(tower: &Tower, a: GroundElement) -> bool {
    tower.ground().coefficients(a)[1..].iter().all(|&c| c == 0)
}
