//! Code and complex text files.
//!
//! One codeword (or facet) per line; `#` starts a comment. Accepted forms:
//!
//! ```text
//! n = 5          # optional ambient size declaration
//! 2345           # compact digits (labels 1..=9)
//! 2 3 4 5        # separated integers (commas or whitespace)
//! 01111          # binary string of length n, leftmost bit is neuron 1
//! 0              # the empty codeword (also `empty`, `{}`, `∅`)
//! ```
//!
//! Binary and integer forms cannot be mixed in one file.

use std::fmt::Write as _;

use crate::code::Code;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_LABEL};

/// A parsed but not yet interpreted file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFileDocument {
    pub declared_n: Option<u32>,
    /// `(line number, token text)` for every codeword line.
    pub lines: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Empty,
    Binary(String),
    Labels(Vec<u64>),
    /// Compact digits or a lone multi-digit integer; resolved once `n` is known.
    Digits(String),
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn declaration(line: &str) -> Option<&str> {
    let rest = line.strip_prefix('n')?.trim_start();
    let rest = rest.strip_prefix('=').or_else(|| rest.strip_prefix(':'))?;
    Some(rest.trim())
}

impl CodeFileDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared_n = None;
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(value) = declaration(line) {
                if declared_n.is_some() {
                    return Err(parse_error(line_no, "n is declared twice"));
                }
                let n: u32 = value
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad ambient size {value:?}")))?;
                if n == 0 || n > MAX_LABEL {
                    return Err(Error::AmbientSize(n));
                }
                declared_n = Some(n);
                continue;
            }
            lines.push((line_no, line.to_string()));
        }
        Ok(CodeFileDocument { declared_n, lines })
    }

    /// Resolves every line to a face, returning `(n, faces)`.
    pub fn faces(&self, override_n: Option<u32>) -> Result<(u32, Vec<Face>)> {
        if self.lines.is_empty() {
            return Err(parse_error(0, "no codewords"));
        }
        let declared = override_n.or(self.declared_n);
        let mut tokens = Vec::with_capacity(self.lines.len());
        for (line_no, text) in &self.lines {
            let mut t = tokenize(*line_no, text)?;
            // With n >= 10 declared, "10" or "11" is a label, not a bit string.
            if let (Token::Binary(bits), Some(d)) = (&t, declared) {
                if d >= 10 && bits.len() != d as usize {
                    t = Token::Digits(bits.clone());
                }
            }
            tokens.push((*line_no, t));
        }

        let first_binary = tokens.iter().find(|(_, t)| matches!(t, Token::Binary(_)));
        let first_integer = tokens
            .iter()
            .find(|(_, t)| matches!(t, Token::Labels(_) | Token::Digits(_)));
        if let (Some((b, _)), Some((i, _))) = (first_binary, first_integer) {
            return Err(Error::MixedNotation { line: *b.max(i) });
        }

        let n = if let Some((line_no, Token::Binary(bits))) = first_binary {
            let len = bits.len() as u32;
            if let Some(d) = declared {
                if d != len {
                    return Err(parse_error(
                        *line_no,
                        format!("binary word has length {len} but n = {d}"),
                    ));
                }
            }
            if len > MAX_LABEL {
                return Err(Error::AmbientSize(len));
            }
            len
        } else {
            match declared {
                Some(d) => d,
                None => {
                    let mut top = 0u64;
                    for (line_no, t) in &tokens {
                        top = top.max(max_label(*line_no, t, None)?);
                    }
                    if top == 0 {
                        return Err(parse_error(0, "cannot infer n from empty codewords only"));
                    }
                    top as u32
                }
            }
        };

        let mut faces = Vec::with_capacity(tokens.len());
        for (line_no, t) in &tokens {
            faces.push(resolve(*line_no, t, n)?);
        }
        Ok((n, faces))
    }
}

fn tokenize(line_no: usize, text: &str) -> Result<Token> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(text)
        .trim();
    if inner.is_empty() || inner == "0" || inner == "∅" || inner.eq_ignore_ascii_case("empty") {
        return Ok(Token::Empty);
    }
    let parts: Vec<&str> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.len() > 1 || inner.contains(',') {
        let labels = parts
            .iter()
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| parse_error(line_no, format!("bad label {p:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        return Ok(Token::Labels(labels));
    }
    if !inner.chars().all(|c| c.is_ascii_digit()) {
        return Err(parse_error(line_no, format!("unrecognized codeword {inner:?}")));
    }
    if inner.len() >= 2 && inner.chars().all(|c| c == '0' || c == '1') {
        return Ok(Token::Binary(inner.to_string()));
    }
    Ok(Token::Digits(inner.to_string()))
}

/// A lone multi-digit token is one integer label when `n >= 10`, otherwise a
/// compact digit string.
fn digit_labels(line_no: usize, digits: &str, n: Option<u32>) -> Result<Vec<u64>> {
    if digits.len() == 1 || n.is_some_and(|n| n >= 10) {
        let v: u64 = digits
            .parse()
            .map_err(|_| parse_error(line_no, format!("bad label {digits:?}")))?;
        return Ok(vec![v]);
    }
    let mut labels = Vec::with_capacity(digits.len());
    for c in digits.chars() {
        let d = c.to_digit(10).unwrap() as u64;
        if d == 0 {
            return Err(parse_error(line_no, format!("label 0 in {digits:?}")));
        }
        if labels.contains(&d) {
            return Err(parse_error(line_no, format!("repeated label {d} in {digits:?}")));
        }
        labels.push(d);
    }
    Ok(labels)
}

fn max_label(line_no: usize, t: &Token, n: Option<u32>) -> Result<u64> {
    Ok(match t {
        Token::Empty | Token::Binary(_) => 0,
        Token::Labels(v) => v.iter().copied().max().unwrap_or(0),
        Token::Digits(d) => digit_labels(line_no, d, n)?.into_iter().max().unwrap_or(0),
    })
}

fn resolve(line_no: usize, t: &Token, n: u32) -> Result<Face> {
    let labels = match t {
        Token::Empty => return Ok(Face::EMPTY),
        Token::Binary(bits) => {
            if bits.len() != n as usize {
                return Err(parse_error(
                    line_no,
                    format!("binary word {bits:?} does not have length {n}"),
                ));
            }
            return Ok(Face::from_labels(
                bits.chars()
                    .enumerate()
                    .filter(|(_, c)| *c == '1')
                    .map(|(i, _)| i as u32 + 1),
            )
            .expect("n <= 64"));
        }
        Token::Labels(v) => v.clone(),
        Token::Digits(d) => digit_labels(line_no, d, Some(n))?,
    };
    let mut face = Face::EMPTY;
    for l in labels {
        if l == 0 {
            return Err(parse_error(line_no, "label 0 is not allowed"));
        }
        if l > n as u64 || l > MAX_LABEL as u64 {
            return Err(Error::LabelOutOfRange {
                label: l,
                max: n.min(MAX_LABEL),
            });
        }
        face = face.with(l as u32);
    }
    Ok(face)
}

/// Parses a code file. `override_n` takes precedence over an `n = ...` line.
pub fn parse_code(text: &str, override_n: Option<u32>) -> Result<Code> {
    let (n, faces) = CodeFileDocument::parse(text)?.faces(override_n)?;
    Code::new(n, faces)
}

/// Parses a complex file (one facet per line) into its closure.
pub fn parse_complex(text: &str, override_n: Option<u32>) -> Result<SimplicialComplex> {
    let (n, faces) = CodeFileDocument::parse(text)?.faces(override_n)?;
    SimplicialComplex::from_faces(n, faces)
}

fn write_face(out: &mut String, face: Face, n: u32) {
    if face.is_empty() {
        out.push('0');
    } else if n <= 9 {
        for l in face.labels() {
            let _ = write!(out, "{l}");
        }
    } else {
        for (i, l) in face.labels().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{l}");
        }
    }
    out.push('\n');
}

fn emit_faces(n: u32, faces: impl IntoIterator<Item = Face>) -> String {
    let mut sorted: Vec<Face> = faces.into_iter().collect();
    sorted.sort_by(|a, b| b.graded_cmp(a));
    let mut out = format!("n = {n}\n");
    for f in sorted {
        write_face(&mut out, f, n);
    }
    out
}

/// Writes a code in the file format; [`parse_code`] reads it back exactly.
pub fn emit_code(code: &Code) -> String {
    emit_faces(code.ambient_n(), code.words().iter().copied())
}

/// Writes the facets of a complex.
pub fn emit_complex(complex: &SimplicialComplex) -> String {
    emit_faces(complex.ambient_n(), complex.facets().iter().copied())
}
