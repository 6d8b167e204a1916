//! Textual formats.
//!
//! * Elements: `0`, `1`, `a^t` (ground), `b^t` (top), or a tuple of ground
//!   literals `(a^4,1,a^6)` for a top element given by its coordinates.
//! * Matrices: rows separated by `;`, entries by `,`.
//! * Message blocks: segments separated by `|`, symbols by `,`.
//! * Codewords: top literals separated by `,`.
//! * Config files: one `key=value` per line, `#` starts a comment.
//!
//! Parse errors carry 1-based columns; callers that read files fix up the
//! line number with [`Error::at_line`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{
    Extension, FiniteField, GroundElement, GroundField, PrimeField, TopElement, Tower, TowerConfig,
    DEFAULT_LOG_TABLE_BOUND,
};
use crate::matrix::Matrix;
use crate::multirate::{MessageBlock, MultiRateCode};

pub fn format_ground(tower: &Tower, e: GroundElement) -> String {
    match tower.ground().discrete_log(e) {
        Err(_) => "0".into(),
        Ok(0) => "1".into(),
        Ok(t) => format!("a^{t}"),
    }
}

pub fn format_top(tower: &Tower, e: TopElement) -> String {
    match tower.top().discrete_log(e) {
        Err(_) => "0".into(),
        Ok(t) => format!("b^{t}"),
    }
}

/// `(a^4,1,a^6)`
pub fn format_ground_tuple(tower: &Tower, v: &[GroundElement]) -> String {
    format!("({})", format_ground_list(tower, v))
}

pub fn format_ground_list(tower: &Tower, v: &[GroundElement]) -> String {
    v.iter()
        .map(|&e| format_ground(tower, e))
        .collect::<Vec<_>>()
        .join(",")
}

/// `b^26,b^27,b^28`
pub fn format_codeword(tower: &Tower, v: &[TopElement]) -> String {
    v.iter()
        .map(|&e| format_top(tower, e))
        .collect::<Vec<_>>()
        .join(",")
}

/// `a^3,a^6,a^5; a^6,a^5,a^3`; the empty matrix formats as an empty string.
pub fn format_ground_matrix(tower: &Tower, m: &Matrix<GroundElement>) -> String {
    m.row_vecs()
        .iter()
        .map(|r| format_ground_list(tower, r))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn format_top_matrix(tower: &Tower, m: &Matrix<TopElement>) -> String {
    m.row_vecs()
        .iter()
        .map(|r| format_codeword(tower, r))
        .collect::<Vec<_>>()
        .join("; ")
}

/// `a^1 | a^1,0 | a^1,a^2,a^3`
pub fn format_message(tower: &Tower, block: &MessageBlock) -> String {
    block
        .segments()
        .iter()
        .map(|s| format_ground_list(tower, s))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Splits on `sep` outside parentheses, yielding trimmed pieces with their
/// 0-based byte offsets.
fn split_top_level(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(trimmed(s, start, i));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(trimmed(s, start, s.len()));
    out
}

fn trimmed(s: &str, start: usize, end: usize) -> (usize, &str) {
    let piece = &s[start..end];
    let lead = piece.len() - piece.trim_start().len();
    (start + lead, piece.trim())
}

fn exponent(tok: &str, prefix: char, offset: usize) -> Option<Result<u64>> {
    let rest = tok.strip_prefix(prefix)?;
    if rest.is_empty() {
        return Some(Ok(1));
    }
    let digits = rest.strip_prefix('^')?;
    Some(
        digits
            .parse::<u64>()
            .map_err(|_| Error::parse(1, offset + 1, format!("bad exponent in {tok:?}"))),
    )
}

fn parse_ground_at(field: &GroundField, tok: &str, offset: usize) -> Result<GroundElement> {
    match tok {
        "0" => return Ok(field.zero()),
        "1" => return Ok(field.one()),
        _ => {}
    }
    match exponent(tok, 'a', offset) {
        Some(t) => Ok(field.from_log(t?)),
        None => Err(Error::parse(
            1,
            offset + 1,
            format!("expected 0, 1 or a^t, found {tok:?}"),
        )),
    }
}

fn parse_top_at(tower: &Tower, tok: &str, offset: usize) -> Result<TopElement> {
    let top = tower.top();
    match tok {
        "0" => return Ok(top.zero()),
        "1" => return Ok(top.one()),
        _ => {}
    }
    if let Some(inner) = tok.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts = split_top_level(inner, ',');
        if parts.len() != tower.n() {
            return Err(Error::parse(
                1,
                offset + 1,
                format!(
                    "tuple needs {} components, found {}",
                    tower.n(),
                    parts.len()
                ),
            ));
        }
        let coords = parts
            .into_iter()
            .map(|(o, t)| parse_ground_at(tower.ground(), t, offset + 1 + o))
            .collect::<Result<Vec<_>>>()?;
        return tower.vec_to_top(&coords);
    }
    match exponent(tok, 'b', offset) {
        Some(t) => Ok(top.from_log(t?)),
        None => Err(Error::parse(
            1,
            offset + 1,
            format!("expected 0, 1, b^t or a tuple, found {tok:?}"),
        )),
    }
}

pub fn parse_ground(tower: &Tower, s: &str) -> Result<GroundElement> {
    let (o, t) = trimmed(s, 0, s.len());
    parse_ground_at(tower.ground(), t, o)
}

pub fn parse_top(tower: &Tower, s: &str) -> Result<TopElement> {
    let (o, t) = trimmed(s, 0, s.len());
    parse_top_at(tower, t, o)
}

/// Comma-separated top literals.
pub fn parse_codeword(tower: &Tower, line: &str) -> Result<Vec<TopElement>> {
    split_top_level(line, ',')
        .into_iter()
        .map(|(o, t)| parse_top_at(tower, t, o))
        .collect()
}

pub fn parse_message(tower: &Tower, line: &str) -> Result<MessageBlock> {
    let mut segments = Vec::new();
    for (so, seg) in split_top_level(line, '|') {
        let seg_offset = so;
        if seg.is_empty() {
            return Err(Error::parse(1, seg_offset + 1, "empty segment"));
        }
        let symbols = split_top_level(seg, ',')
            .into_iter()
            .map(|(o, t)| parse_ground_at(tower.ground(), t, seg_offset + o))
            .collect::<Result<Vec<_>>>()?;
        segments.push(symbols);
    }
    Ok(MessageBlock::new(segments))
}

fn parse_matrix<E: Copy + PartialEq>(
    s: &str,
    mut entry: impl FnMut(&str, usize) -> Result<E>,
) -> Result<Matrix<E>> {
    if s.trim().is_empty() {
        return Ok(Matrix::new(0, 0, Vec::new()));
    }
    let mut rows = Vec::new();
    for (ro, row) in split_top_level(s, ';') {
        let parsed = split_top_level(row, ',')
            .into_iter()
            .map(|(o, t)| entry(t, ro + o))
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    Matrix::from_rows(rows)
}

pub fn parse_ground_matrix(tower: &Tower, s: &str) -> Result<Matrix<GroundElement>> {
    parse_matrix(s, |t, o| parse_ground_at(tower.ground(), t, o))
}

pub fn parse_top_matrix(tower: &Tower, s: &str) -> Result<Matrix<TopElement>> {
    parse_matrix(s, |t, o| parse_top_at(tower, t, o))
}

/// Contents of a config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeConfig {
    pub tower: TowerConfig,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub pads: Option<Vec<GroundElement>>,
}

impl CodeConfig {
    pub fn build(&self) -> Result<MultiRateCode> {
        MultiRateCode::build(
            Tower::new(self.tower.clone())?,
            self.k.unwrap_or(1),
            self.pads.clone(),
        )
    }
}

/// Parses `key=value` lines: `p`, `n`, `ground_poly` (ascending GF(p)
/// coefficients), `top_poly` (ascending ground literals or base-p digit
/// strings, least significant digit first), and optionally `k`, `seed`,
/// `pads` and `log_table_bound`.
pub fn parse_config(text: &str) -> Result<CodeConfig> {
    let mut p = None;
    let mut n = None;
    let mut ground_poly = None;
    let mut top_poly = None;
    let mut k = None;
    let mut seed = None;
    let mut pads = None;
    let mut bound = DEFAULT_LOG_TABLE_BOUND;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(Error::parse(line_no, 1, "expected key=value"));
        };
        let key = line[..eq].trim();
        let value_offset = eq + 1;
        let value = &line[value_offset..];
        let int = |what: &str| -> Result<u64> {
            value.trim().parse::<u64>().map_err(|_| {
                Error::parse(
                    line_no,
                    value_offset + 1,
                    format!("{what} must be an integer"),
                )
            })
        };
        match key {
            "p" => p = Some(int("p")? as u32),
            "n" => n = Some(int("n")? as usize),
            "k" => k = Some(int("k")? as usize),
            "seed" => seed = Some(int("seed")?),
            "log_table_bound" => bound = int("log_table_bound")?,
            "ground_poly" => {
                let coeffs = split_top_level(value, ',')
                    .into_iter()
                    .map(|(o, t)| {
                        t.parse::<u32>().map_err(|_| {
                            Error::parse(
                                line_no,
                                value_offset + o + 1,
                                format!("bad coefficient {t:?}"),
                            )
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                ground_poly = Some(coeffs);
            }
            "top_poly" => top_poly = Some((line_no, value_offset, value.to_string())),
            "pads" => pads = Some((line_no, value_offset, value.to_string())),
            other => {
                return Err(Error::parse(line_no, 1, format!("unknown key {other:?}")));
            }
        }
    }

    let missing = |what: &str| Error::InvalidConfig(format!("missing key {what}"));
    let p = p.ok_or_else(|| missing("p"))?;
    let n = n.ok_or_else(|| missing("n"))?;
    let ground_poly: Vec<u32> = ground_poly.ok_or_else(|| missing("ground_poly"))?;
    let (tl, to, tv) = top_poly.ok_or_else(|| missing("top_poly"))?;

    let prime = Arc::new(PrimeField::new(p)?);
    let ground = GroundField::new(prime, ground_poly.clone(), bound)?;
    if ground.degree() != n {
        return Err(Error::InvalidConfig(format!(
            "ground_poly has degree {}, expected n = {n}",
            ground.degree()
        )));
    }
    let top_coeffs = split_top_level(&tv, ',')
        .into_iter()
        .map(|(o, t)| parse_poly_coeff(&ground, p, n, t, to + o).map_err(|e| e.at_line(tl)))
        .collect::<Result<Vec<_>>>()?;
    let pads = match pads {
        Some((pl, po, pv)) => Some(
            split_top_level(&pv, ',')
                .into_iter()
                .map(|(o, t)| parse_ground_at(&ground, t, po + o).map_err(|e| e.at_line(pl)))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    Ok(CodeConfig {
        tower: TowerConfig {
            p,
            n,
            ground_poly,
            top_poly: top_coeffs,
            log_table_bound: bound,
        },
        k,
        seed,
        pads,
    })
}

fn parse_poly_coeff(
    ground: &GroundField,
    p: u32,
    n: usize,
    tok: &str,
    offset: usize,
) -> Result<GroundElement> {
    if tok.starts_with('a') {
        return parse_ground_at(ground, tok, offset);
    }
    let digits = tok
        .chars()
        .map(|c| c.to_digit(10).filter(|&d| d < p))
        .collect::<Option<Vec<u32>>>()
        .filter(|d| !d.is_empty() && d.len() <= n)
        .ok_or_else(|| {
            Error::parse(
                1,
                offset + 1,
                format!("expected a^t or base-{p} digits, found {tok:?}"),
            )
        })?;
    Ok(GroundElement::from_digits(&digits, p))
}

/// The config text that reproduces `cfg`.
pub fn format_config(tower: &Tower, k: usize, seed: Option<u64>) -> String {
    let cfg = tower.config();
    let mut out = format!("p={}\nn={}\n", cfg.p, cfg.n);
    let gp: Vec<String> = cfg.ground_poly.iter().map(u32::to_string).collect();
    out.push_str(&format!("ground_poly={}\n", gp.join(",")));
    let tp: Vec<String> = cfg
        .top_poly
        .iter()
        .map(|&c| format_ground(tower, c))
        .collect();
    out.push_str(&format!("top_poly={}\nk={k}\n", tp.join(",")));
    if let Some(s) = seed {
        out.push_str(&format!("seed={s}\n"));
    }
    out
}
