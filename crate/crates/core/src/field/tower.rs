use std::fmt;
use std::sync::Arc;

use super::{Extension, FiniteField, GroundElement, GroundField, PrimeField, TopElement, TopField};
use crate::error::{Error, Result};

/// Fields with at most this many elements get log/antilog tables.
pub const DEFAULT_LOG_TABLE_BOUND: u64 = 1 << 20;

/// Which tower level a code or element lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Ground,
    Top,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Ground => f.write_str("ground"),
            Level::Top => f.write_str("top"),
        }
    }
}

/// Parameters of the tower GF(p) ⊂ GF(p^n) ⊂ GF((p^n)^n).
///
/// Both polynomials are ascending coefficient lists and must be monic.
/// `top_poly` coefficients are ground elements in packed form (base-p
/// digits, least significant first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerConfig {
    pub p: u32,
    pub n: usize,
    pub ground_poly: Vec<u32>,
    pub top_poly: Vec<GroundElement>,
    pub log_table_bound: u64,
}

impl TowerConfig {
    /// GF(8) via α³ + α + 1 and GF(8³) via x³ + x + α.
    pub fn paper_8_3() -> Self {
        let alpha = GroundElement::from_digits(&[0, 1, 0], 2);
        let one = GroundElement::from_digits(&[1, 0, 0], 2);
        let zero = GroundElement::from_digits(&[0, 0, 0], 2);
        Self {
            p: 2,
            n: 3,
            ground_poly: vec![1, 1, 0, 1],
            top_poly: vec![alpha, one, zero, one],
            log_table_bound: DEFAULT_LOG_TABLE_BOUND,
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "paper-8-3" | "paper-8-3-k1" | "paper-8-3-k2" => Some(Self::paper_8_3()),
            _ => None,
        }
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.n as u32)
    }
}

impl GroundElement {
    /// Packs ascending base-`p` digits.
    pub fn from_digits(digits: &[u32], p: u32) -> Self {
        use super::PackedElement;
        GroundElement::from_index(
            digits
                .iter()
                .rev()
                .fold(0u64, |acc, &d| acc * p as u64 + d as u64),
        )
    }
}

/// A constructed tower. Cheap to clone; fields are shared.
#[derive(Debug, Clone)]
pub struct Tower {
    config: TowerConfig,
    prime: Arc<PrimeField>,
    ground: Arc<GroundField>,
    top: Arc<TopField>,
}

impl Tower {
    pub fn new(config: TowerConfig) -> Result<Self> {
        if config.n < 2 {
            return Err(Error::InvalidConfig("n must be at least 2".into()));
        }
        let prime = Arc::new(PrimeField::new(config.p)?);
        if config.ground_poly.len() != config.n + 1 {
            return Err(Error::InvalidConfig(format!(
                "ground_poly must have degree n = {}",
                config.n
            )));
        }
        if config.ground_poly.iter().any(|&c| c >= config.p) {
            return Err(Error::InvalidConfig(
                "ground_poly coefficient out of range".into(),
            ));
        }
        let ground = Arc::new(
            GroundField::new(
                prime.clone(),
                config.ground_poly.clone(),
                config.log_table_bound,
            )
            .map_err(|e| prefix(e, "ground_poly"))?,
        );
        if config.top_poly.len() != config.n + 1 {
            return Err(Error::InvalidConfig(format!(
                "top_poly must have degree n = {}",
                config.n
            )));
        }
        if config
            .top_poly
            .iter()
            .any(|c| ground.index_of(*c) >= ground.order())
        {
            return Err(Error::InvalidConfig(
                "top_poly coefficient out of range".into(),
            ));
        }
        let top = Arc::new(
            TopField::new(
                ground.clone(),
                config.top_poly.clone(),
                config.log_table_bound,
            )
            .map_err(|e| prefix(e, "top_poly"))?,
        );
        Ok(Self {
            config,
            prime,
            ground,
            top,
        })
    }

    pub fn paper_8_3() -> Self {
        Self::new(TowerConfig::paper_8_3()).expect("preset polynomials are primitive")
    }

    pub fn config(&self) -> &TowerConfig {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    pub fn prime(&self) -> &Arc<PrimeField> {
        &self.prime
    }

    pub fn ground(&self) -> &Arc<GroundField> {
        &self.ground
    }

    pub fn top(&self) -> &Arc<TopField> {
        &self.top
    }

    /// α, the root of `ground_poly`.
    pub fn alpha(&self) -> GroundElement {
        self.ground.primitive_element()
    }

    /// β, the root of `top_poly`.
    pub fn beta(&self) -> TopElement {
        self.top.primitive_element()
    }

    /// The isomorphism [GF(q)]^n → GF(q^n); component `i` is the coefficient of β^i.
    pub fn vec_to_top(&self, v: &[GroundElement]) -> Result<TopElement> {
        self.top.from_coefficients(v)
    }

    pub fn top_to_vec(&self, e: TopElement) -> Vec<GroundElement> {
        self.top.coefficients(e)
    }
}

fn prefix(e: Error, what: &str) -> Error {
    match e {
        Error::InvalidConfig(msg) => Error::InvalidConfig(format!("{what}: {msg}")),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_tower_orders() {
        let t = Tower::paper_8_3();
        assert_eq!(t.ground().order(), 8);
        assert_eq!(t.top().order(), 512);
        assert_eq!(t.ground().multiplicative_order(t.alpha()).unwrap(), 7);
        assert_eq!(t.top().multiplicative_order(t.beta()).unwrap(), 511);
        assert_eq!(t.top().discrete_log(t.beta()).unwrap(), 1);
    }

    #[test]
    fn bad_configs() {
        let mut c = TowerConfig::paper_8_3();
        c.n = 1;
        assert!(Tower::new(c).is_err());

        let mut c = TowerConfig::paper_8_3();
        c.p = 4;
        assert!(Tower::new(c).is_err());

        // x^3 + x + 1 splits over GF(8): α is one of its roots
        let mut c = TowerConfig::paper_8_3();
        c.top_poly[0] = GroundElement::from_digits(&[1, 0, 0], 2);
        assert!(matches!(Tower::new(c), Err(Error::InvalidConfig(_))));

        let mut c = TowerConfig::paper_8_3();
        c.ground_poly = vec![1, 0, 1];
        assert!(Tower::new(c).is_err());
    }
}
