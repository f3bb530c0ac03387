use std::fmt;

use crate::error::{Error, Result};

/// Which divisibility relation holds between `n` and `k`.
///
/// `n == k` satisfies both and is always reported as [`Mode::KDividesN`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    KDividesN,
    NDividesK,
}

/// Validated alphabet size, word length and modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    s: u32,
    n: usize,
    k: usize,
    mode: Mode,
}

impl Params {
    pub fn new(s: u32, n: usize, k: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidParams(format!(
                "alphabet size s must be at least 2, got {s}"
            )));
        }
        if n == 0 || k == 0 {
            return Err(Error::InvalidParams(format!(
                "n and k must be positive, got n={n}, k={k}"
            )));
        }
        let mode = if n.is_multiple_of(k) {
            Mode::KDividesN
        } else if k.is_multiple_of(n) {
            Mode::NDividesK
        } else {
            return Err(Error::InvalidParams(format!(
                "k must divide n or n must divide k, got n={n}, k={k}"
            )));
        };
        Ok(Params { s, n, k, mode })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Largest symbol of the alphabet, `s - 1`.
    pub fn top(&self) -> u32 {
        self.s - 1
    }

    /// Size of a rotation class, `max(n, k)`.
    pub fn orbit(&self) -> usize {
        self.n.max(self.k)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("s={} n={} k={}", self.s, self.n, self.k))
    }
}
