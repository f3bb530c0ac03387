//! Text and JSON renderings of words, pairs and necklaces.
//!
//! PLAIN writes one digit per symbol when `s <= 10` and comma separated
//! integers otherwise. BLOCKS is PLAIN with `|` between Lyndon words. JSON
//! uses `{"word": [..], "residue": u}` for pairs and
//! `{"necklace": [..], "s": s, "n": n, "k": k, "length": len}` for necklaces.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pair::{LyndonPair, Pair};
use crate::params::Params;
use crate::word::{Symbol, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Blocks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub word: Vec<Symbol>,
    pub residue: usize,
}

impl From<&Pair> for PairJson {
    fn from(a: &Pair) -> Self {
        PairJson {
            word: a.word().to_vec(),
            residue: a.residue(),
        }
    }
}

impl From<&LyndonPair> for PairJson {
    fn from(a: &LyndonPair) -> Self {
        PairJson {
            word: a.word().to_vec(),
            residue: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceJson {
    pub necklace: Vec<Symbol>,
    pub s: u32,
    pub n: usize,
    pub k: usize,
    pub length: u64,
}

fn uses_digits(s: u32) -> bool {
    s <= 10
}

pub fn render_word(w: &[Symbol], s: u32) -> String {
    if uses_digits(s) {
        w.iter()
            .map(|&c| char::from_digit(c, 10).expect("symbol below 10"))
            .collect()
    } else {
        w.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// One line per pair: the word, a space, the residue. JSON gives an object.
pub fn render_pair(word: &[Symbol], residue: usize, s: u32, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(&PairJson {
            word: word.to_vec(),
            residue,
        })
        .expect("plain data serializes"),
        OutputFormat::Plain | OutputFormat::Blocks => {
            format!("{} {residue}", render_word(word, s))
        }
    }
}

/// Parses a word in the given format. Whitespace is ignored, `|` separators
/// are accepted in BLOCKS, and JSON may be a bare array, a pair object or a
/// necklace object.
pub fn parse_word(text: &str, s: u32, format: OutputFormat) -> Result<Word> {
    match format {
        OutputFormat::Json => parse_json_word(text),
        OutputFormat::Plain => parse_text_word(text, s, false),
        OutputFormat::Blocks => parse_text_word(text, s, true),
    }
}

fn parse_text_word(text: &str, s: u32, blocks: bool) -> Result<Word> {
    let bad = |t: &str| Error::InvalidInput(format!("malformed symbol {t:?}"));
    if uses_digits(s) && !text.contains(',') {
        return text
            .chars()
            .filter(|c| !c.is_whitespace() && !(blocks && *c == '|'))
            .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Word::new);
    }
    let text = if blocks {
        text.replace('|', ",")
    } else {
        text.to_string()
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Word::default());
    }
    trimmed
        .split(',')
        .map(str::trim)
        .map(|t| t.parse::<Symbol>().map_err(|_| bad(t)))
        .collect::<Result<Vec<_>>>()
        .map(Word::new)
}

fn parse_json_word(text: &str) -> Result<Word> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Input {
        Bare(Vec<Symbol>),
        Necklace { necklace: Vec<Symbol> },
        Pair { word: Vec<Symbol> },
    }
    let input: Input = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    Ok(Word::new(match input {
        Input::Bare(v) | Input::Necklace { necklace: v } | Input::Pair { word: v } => v,
    }))
}

/// Writes a symbol stream as a necklace in PLAIN or JSON form, followed by a
/// newline. Symbols are written as they arrive.
pub fn write_necklace<W: Write>(
    out: &mut W,
    symbols: impl Iterator<Item = Symbol>,
    p: &Params,
    length: u64,
    format: OutputFormat,
) -> io::Result<()> {
    let digits = uses_digits(p.s());
    match format {
        OutputFormat::Json => {
            out.write_all(b"{\"necklace\":[")?;
            for (i, c) in symbols.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "{c}")?;
            }
            writeln!(
                out,
                "],\"s\":{},\"n\":{},\"k\":{},\"length\":{length}}}",
                p.s(),
                p.n(),
                p.k()
            )
        }
        OutputFormat::Plain | OutputFormat::Blocks => {
            for (i, c) in symbols.enumerate() {
                if digits {
                    out.write_all(&[b'0' + c as u8])?;
                } else {
                    if i > 0 {
                        out.write_all(b",")?;
                    }
                    write!(out, "{c}")?;
                }
            }
            writeln!(out)
        }
    }
}

/// BLOCKS rendering: Lyndon words joined by `|`.
pub fn write_blocks<W: Write>(
    out: &mut W,
    blocks: impl Iterator<Item = LyndonPair>,
    s: u32,
) -> io::Result<()> {
    for (i, b) in blocks.enumerate() {
        if i > 0 {
            out.write_all(b"|")?;
        }
        out.write_all(render_word(b.word(), s).as_bytes())?;
    }
    writeln!(out)
}
