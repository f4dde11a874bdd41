//! Plain-text code files: `# key: value` header lines, then one word per
//! line written coordinate 1 first.

use std::fmt::Write as _;

use crate::construct::{Code, CodeMeta};
use crate::error::{Error, Result};
use crate::field::{parse_hex, FieldElement, FieldSpec};
use crate::word::{Alphabet, BinaryWord, TernaryWord, Word};

/// A code read from a file, of either alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyCode {
    Binary(Code<BinaryWord>),
    Ternary(Code<TernaryWord>),
}

impl AnyCode {
    pub fn n(&self) -> usize {
        match self {
            AnyCode::Binary(c) => c.n(),
            AnyCode::Ternary(c) => c.n(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyCode::Binary(c) => c.len(),
            AnyCode::Ternary(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn meta(&self) -> &CodeMeta {
        match self {
            AnyCode::Binary(c) => c.meta(),
            AnyCode::Ternary(c) => c.meta(),
        }
    }
}

impl From<Code<BinaryWord>> for AnyCode {
    fn from(c: Code<BinaryWord>) -> Self {
        AnyCode::Binary(c)
    }
}

impl From<Code<TernaryWord>> for AnyCode {
    fn from(c: Code<TernaryWord>) -> Self {
        AnyCode::Ternary(c)
    }
}

pub fn write_code<W: Word>(code: &Code<W>) -> String {
    let meta = code.meta();
    let mut out = String::new();
    let mut header = |key: &str, value: &dyn std::fmt::Display| {
        writeln!(out, "# {key}: {value}").expect("write to string");
    };
    header("family", &meta.family);
    header("n", &code.n());
    header("alphabet", &W::ALPHABET);
    if let Some(field) = &meta.field {
        header("m", &field.m());
        header("modulus", &format_args!("{:#x}", field.modulus()));
        header("generator", &field.generator());
    }
    if let Some(op) = &meta.operator {
        header("operator", op);
    }
    if let Some(p) = &meta.provenance {
        header("provenance", p);
    }
    if let Some(s) = meta.syndrome {
        header("syndrome", &s);
    }
    if let Some(note) = &meta.note {
        header("note", note);
    }
    header("distance", &code.claimed_distance());
    header("cardinality", &code.claimed_cardinality());
    for w in code.words() {
        writeln!(out, "{w}").expect("write to string");
    }
    out
}

#[derive(Default)]
struct Header {
    meta: CodeMeta,
    n: Option<usize>,
    alphabet: Option<Alphabet>,
    m: Option<u32>,
    modulus: Option<u32>,
    generator: Option<u32>,
    distance: Option<usize>,
    cardinality: Option<u128>,
}

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::CodeFile {
        line,
        reason: reason.into(),
    }
}

impl Header {
    fn set(&mut self, line: usize, key: &str, value: &str) -> Result<()> {
        let int = |v: &str| v.parse::<u128>().map_err(|_| bad(line, format!("{key}: not an integer")));
        let hex = |v: &str| parse_hex(v).ok_or_else(|| bad(line, format!("{key}: not a hex value")));
        match key {
            "family" => self.meta.family = value.parse().map_err(|e: Error| bad(line, e.to_string()))?,
            "n" => self.n = Some(int(value)? as usize),
            "alphabet" => {
                self.alphabet = Some(match value {
                    "binary" => Alphabet::Binary,
                    "ternary" => Alphabet::Ternary,
                    _ => return Err(bad(line, format!("unknown alphabet {value:?}"))),
                })
            }
            "m" => self.m = Some(int(value)? as u32),
            "modulus" => self.modulus = Some(hex(value)?),
            "generator" => self.generator = Some(hex(value)?),
            "operator" => self.meta.operator = Some(value.to_string()),
            "provenance" => self.meta.provenance = Some(value.to_string()),
            "syndrome" => self.meta.syndrome = Some(FieldElement(hex(value)?)),
            "note" => self.meta.note = Some(value.to_string()),
            "distance" => self.distance = Some(int(value)? as usize),
            "cardinality" => self.cardinality = Some(int(value)?),
            // unknown keys are comments
            _ => {}
        }
        Ok(())
    }
}

fn finish<W: Word>(header: Header, lines: Vec<(usize, &str)>) -> Result<Code<W>> {
    let words = lines
        .iter()
        .map(|&(line, text)| W::parse(text).map_err(|e| bad(line, e.to_string())))
        .collect::<Result<Vec<W>>>()?;
    let n = match (header.n, words.first()) {
        (Some(n), _) => n,
        (None, Some(w)) => w.len(),
        (None, None) => return Err(bad(0, "no words and no length")),
    };
    if let Some((i, w)) = words.iter().enumerate().find(|(_, w)| w.len() != n) {
        return Err(bad(lines[i].0, format!("word {w} has length {}, expected {n}", w.len())));
    }
    let len = words.len() as u128;
    Code::new(
        n,
        words,
        header.meta,
        header.distance.unwrap_or(0),
        header.cardinality.unwrap_or(len),
    )
}

pub fn read_code(text: &str) -> Result<AnyCode> {
    let mut header = Header::default();
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if let Some((key, value)) = rest.split_once(':') {
                header.set(line, key.trim(), value.trim())?;
            }
            continue;
        }
        words.push((line, t));
    }
    if let Some(m) = header.m {
        let default = FieldSpec::default_for(m).map_err(|e| bad(0, e.to_string()))?;
        let field = FieldSpec::new(
            m,
            header.modulus.unwrap_or(default.modulus()),
            header.generator.unwrap_or(default.generator().0),
        )
        .map_err(|e| bad(0, e.to_string()))?;
        header.meta.field = Some(field);
    }
    let alphabet = header.alphabet.unwrap_or(match words.first() {
        Some((_, w)) if w.contains('*') => Alphabet::Ternary,
        _ => Alphabet::Binary,
    });
    Ok(match alphabet {
        Alphabet::Binary => AnyCode::Binary(finish(header, words)?),
        Alphabet::Ternary => AnyCode::Ternary(finish(header, words)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_d3, build_d4_conference, build_preparata};
    use crate::operator::parse_operator;

    #[test]
    fn round_trip_ternary() {
        let field = FieldSpec::default_for(3).unwrap();
        let code = build_d3(parse_operator("matrix3", field).unwrap()).unwrap();
        let text = write_code(&code);
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 128);
        let AnyCode::Ternary(back) = read_code(&text).unwrap() else {
            panic!("alphabet lost");
        };
        assert_eq!(back.words(), code.words());
        assert_eq!(back.meta().field, code.meta().field);
        assert_eq!(back.meta().operator, code.meta().operator);
        assert_eq!((back.claimed_distance(), back.claimed_cardinality()), (3, 128));
    }

    #[test]
    fn round_trip_binary_and_conference() {
        let field = FieldSpec::default_for(3).unwrap();
        let p = build_preparata(parse_operator("pow:3", field).unwrap()).unwrap();
        assert_eq!(read_code(&write_code(&p)).unwrap(), AnyCode::Binary(p));
        let c = build_d4_conference().unwrap();
        assert_eq!(read_code(&write_code(&c)).unwrap(), AnyCode::Ternary(c));
    }

    #[test]
    fn headerless_files_infer_the_alphabet() {
        assert!(matches!(read_code("*01\n1*0\n").unwrap(), AnyCode::Ternary(_)));
        assert!(matches!(read_code("# just a comment\n0101\n").unwrap(), AnyCode::Binary(_)));
    }

    #[test]
    fn reports_line_numbers() {
        let err = read_code("# n: 3\n*01\n\n1*2\n").unwrap_err();
        assert!(matches!(err, Error::CodeFile { line: 4, .. }), "{err}");
        let err = read_code("*01\n1*00\n").unwrap_err();
        assert!(matches!(err, Error::CodeFile { line: 2, .. }), "{err}");
        assert!(read_code("# alphabet: quaternary\n").is_err());
    }
}
