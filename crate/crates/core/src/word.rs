use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Symbol = u32;

/// A finite sequence of symbols. Symbols are plain integers; the alphabet
/// bound is checked wherever a [`Params`](crate::Params) is at hand.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// `symbol^len`
    pub fn run(symbol: Symbol, len: usize) -> Self {
        Word(vec![symbol; len])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// Prefix of length `len`.
    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// `self^times`
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Cyclic left shift by `by` positions: `a_{by+1}..a_m a_1..a_by`.
    pub fn rotated(&self, by: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(by % self.0.len());
        Word(v)
    }

    pub fn check_alphabet(&self, s: u32) -> Result<()> {
        match self.0.iter().position(|&c| c >= s) {
            Some(pos) => Err(Error::InvalidInput(format!(
                "symbol {} at position {pos} is outside the alphabet 0..{s}",
                self.0[pos]
            ))),
            None => Ok(()),
        }
    }

    pub fn is_constant(&self, symbol: Symbol) -> bool {
        self.0.iter().all(|&c| c == symbol)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

/// Digits when every symbol is below 10, comma separated integers otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().all(|&c| c < 10) {
            ""
        } else {
            ","
        };
        let text = self
            .0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(sep);
        f.pad(&text)
    }
}

/// Accepts `"0110"` (one digit per symbol) or `"0,12,3"`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Symbol>()
                        .map_err(|_| Error::InvalidInput(format!("not a symbol: {:?}", t.trim())))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidInput(format!("not a digit: {c:?}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}
