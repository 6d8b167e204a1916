//! Line-oriented encode and decode of message and codeword files.
//!
//! Blank lines and lines starting with `#` are skipped; every other line
//! produces exactly one output line.

use std::io::{self, BufRead, Write};

use crate::error::Error;
use crate::field::TopField;
use crate::multirate::{DecodeOptions, MultiRateCode};
use crate::rank::RankDecoder;
use crate::text::{format_codeword, format_message, parse_codeword, parse_message};

#[derive(Debug, thiserror::Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Line { line: usize, source: Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl StreamError {
    /// The underlying codec error, if any.
    pub fn codec(&self) -> Option<&Error> {
        match self {
            StreamError::Line { source, .. } => Some(source),
            StreamError::Io(_) => None,
        }
    }
}

/// `(line, [(coordinate, matching lengths)])` for each decoded line where
/// several lengths matched.
pub type MultiMatchDiagnostics = Vec<(usize, Vec<(usize, Vec<usize>)>)>;

/// A full-length segment that will decode as a shorter one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShadowWarning {
    pub line: usize,
    pub segment: usize,
    pub decodes_as_length: usize,
}

fn content_lines(input: impl BufRead) -> impl Iterator<Item = io::Result<(usize, String)>> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| l.map(|l| (i + 1, l)))
        .filter(|r| match r {
            Ok((_, l)) => !(l.trim().is_empty() || l.trim_start().starts_with('#')),
            Err(_) => true,
        })
}

fn at(line: usize) -> impl Fn(Error) -> StreamError {
    move |e| StreamError::Line {
        line,
        source: e.at_line(line),
    }
}

/// Encodes one message block per line. Returns the blocks that cannot
/// survive a round trip.
pub fn encode_stream(
    code: &MultiRateCode,
    input: impl BufRead,
    mut output: impl Write,
) -> Result<Vec<ShadowWarning>, StreamError> {
    let tower = code.tower();
    let mut warnings = Vec::new();
    for item in content_lines(input) {
        let (line, text) = item?;
        let msg = parse_message(tower, &text).map_err(at(line))?;
        let cw = code.encode(&msg).map_err(at(line))?;
        for (segment, len) in code.shadowed_segments(&msg).map_err(at(line))? {
            warnings.push(ShadowWarning {
                line,
                segment,
                decodes_as_length: len,
            });
        }
        writeln!(output, "{}", format_codeword(tower, &cw))?;
    }
    Ok(warnings)
}

/// Decodes one codeword per line, stopping at the first failure.
pub fn decode_stream(
    code: &MultiRateCode,
    decoder: &dyn RankDecoder<TopField>,
    options: DecodeOptions,
    input: impl BufRead,
    mut output: impl Write,
) -> Result<MultiMatchDiagnostics, StreamError> {
    let tower = code.tower();
    let mut diagnostics = Vec::new();
    for item in content_lines(input) {
        let (line, text) = item?;
        let received = parse_codeword(tower, &text).map_err(at(line))?;
        let report = code
            .decode_with(decoder, &received, options)
            .map_err(at(line))?;
        if !report.multi_matches.is_empty() {
            diagnostics.push((line, report.multi_matches));
        }
        writeln!(output, "{}", format_message(tower, &report.block))?;
    }
    Ok(diagnostics)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::ExhaustiveDecoder;

    fn run_encode(
        code: &MultiRateCode,
        input: &str,
    ) -> Result<(String, Vec<ShadowWarning>), StreamError> {
        let mut out = Vec::new();
        let w = encode_stream(code, input.as_bytes(), &mut out)?;
        Ok((String::from_utf8(out).unwrap(), w))
    }

    fn run_decode(code: &MultiRateCode, input: &str) -> Result<String, StreamError> {
        let mut out = Vec::new();
        decode_stream(
            code,
            &ExhaustiveDecoder::default(),
            DecodeOptions::default(),
            input.as_bytes(),
            &mut out,
        )?;
        Ok(String::from_utf8(out).unwrap())
    }

    #[test]
    fn worked_example_lines() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let (out, warnings) = run_encode(&code, "a^1\n\n# comment\na^1,0\na,a^2,a^3\n").unwrap();
        assert_eq!(
            out,
            "b^26,b^27,b^28\nb^191,b^192,b^193\nb^399,b^400,b^401\n"
        );
        assert!(warnings.is_empty());
        assert_eq!(
            run_decode(&code, &out).unwrap(),
            "a^1\na^1,0\na^1,a^2,a^3\n"
        );
    }

    #[test]
    fn empty_input() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        assert_eq!(run_encode(&code, "").unwrap().0, "");
        assert_eq!(run_decode(&code, "").unwrap(), "");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let err = run_encode(&code, "a\n\na,zz\n").unwrap_err();
        assert!(
            matches!(
                err.codec(),
                Some(Error::Parse {
                    line: 3,
                    column: 3,
                    ..
                })
            ),
            "{err}"
        );
        let far = (2..)
            .map(|t| format!("0,1,b^{t}"))
            .find(|w| run_decode(&code, w).is_err())
            .unwrap();
        let err = run_decode(&code, &format!("0,0,0\n{far}\n")).unwrap_err();
        assert!(
            matches!(
                err,
                StreamError::Line {
                    line: 2,
                    source: Error::Undecodable { .. }
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn warns_about_shadowed_blocks() {
        let code = MultiRateCode::preset("paper-8-3-k1").unwrap();
        let (_, w) = run_encode(&code, "a\n1,1,1\n").unwrap();
        assert_eq!(
            w,
            vec![ShadowWarning {
                line: 2,
                segment: 0,
                decodes_as_length: 1
            }]
        );
    }
}
