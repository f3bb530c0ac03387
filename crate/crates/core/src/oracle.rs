//! Construction-agnostic checks: perfectness of an arbitrary circular word,
//! exhaustive search for the greatest perfect necklace on tiny instances, and
//! a naive Fredricksen–Maiorana reference for `k = 1`.
//!
//! Nothing in this module calls into the generator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::word::{Symbol, Word};

/// Why a circular word fails to be perfect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    /// The word occurs `found` times instead of `k`.
    WrongCount { found: usize, expected: usize },
    /// Two occurrences share a residue modulo `k`.
    ResidueCollision { residues: Vec<usize> },
    /// The input is not `s^n·k` symbols long.
    WrongLength { found: usize, expected: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `None` for violations about the input as a whole.
    pub word: Option<Word>,
    pub reason: Reason,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(w) = &self.word {
            write!(f, "{w}: ")?;
        }
        match &self.reason {
            Reason::WrongCount { found, expected } => {
                write!(f, "occurs {found} times, expected {expected}")
            }
            Reason::ResidueCollision { residues } => {
                write!(f, "start residues {residues:?} are not pairwise distinct")
            }
            Reason::WrongLength { found, expected } => {
                write!(f, "input has length {found}, expected s^n*k = {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectnessReport {
    #[serde(skip)]
    pub params: Params,
    pub is_perfect: bool,
    /// 0-based circular start positions of every occurring length-n word.
    #[serde(skip)]
    pub occurrences: BTreeMap<Word, Vec<usize>>,
    pub violations: Vec<Violation>,
    pub input_length: usize,
}

impl PerfectnessReport {
    pub fn positions(&self, w: &Word) -> &[usize] {
        self.occurrences.get(w).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Words of `Σⁿ` are enumerated for missing-word reporting only below this.
const DENSE_LIMIT: u64 = 1 << 24;

fn unrank(mut r: u64, s: u32, n: usize) -> Word {
    let mut v = vec![0; n];
    for slot in v.iter_mut().rev() {
        *slot = (r % s as u64) as Symbol;
        r /= s as u64;
    }
    Word::new(v)
}

/// Counts circular occurrences of every length-n word in `x` and checks that
/// each occurs exactly `k` times at pairwise distinct residues mod `k`.
pub fn check_perfect(x: &[Symbol], p: &Params) -> Result<PerfectnessReport> {
    if let Some(pos) = x.iter().position(|&c| c >= p.s()) {
        return Err(Error::InvalidInput(format!(
            "symbol {} at position {pos} is outside the alphabet 0..{}",
            x[pos],
            p.s()
        )));
    }
    let (s, n, k) = (p.s(), p.n(), p.k());
    let len = x.len();
    let words_total = (s as u64).checked_pow(n as u32);
    let expected_len = words_total.and_then(|w| w.checked_mul(k as u64));

    // Every word of Σⁿ gets an entry (possibly empty) when Σⁿ is small enough
    // to enumerate; otherwise only occurring words are recorded.
    let mut occurrences: BTreeMap<Word, Vec<usize>> = BTreeMap::new();
    match words_total {
        Some(total) if total <= DENSE_LIMIT => {
            // exact base-s rank of each window, rolled forward one symbol at a time
            let mut dense: Vec<Vec<usize>> = vec![Vec::new(); total as usize];
            if len > 0 {
                let mut rank = (0..n).fold(0u64, |r, t| r * s as u64 + x[t % len] as u64);
                for start in 0..len {
                    dense[rank as usize].push(start);
                    let incoming = x[(start + n) % len] as u64;
                    rank = (rank * s as u64 + incoming) % total;
                }
            }
            for (r, pos) in dense.into_iter().enumerate() {
                occurrences.insert(unrank(r as u64, s, n), pos);
            }
        }
        _ => {
            for start in 0..len {
                let w: Word = (0..n)
                    .map(|t| x[(start + t) % len])
                    .collect::<Vec<_>>()
                    .into();
                occurrences.entry(w).or_default().push(start);
            }
        }
    }

    let mut violations = Vec::new();
    if expected_len != Some(len as u64) {
        violations.push(Violation {
            word: None,
            reason: Reason::WrongLength {
                found: len,
                expected: expected_len.unwrap_or(u64::MAX),
            },
        });
    }
    for (w, pos) in &occurrences {
        if pos.len() != k {
            // includes words that never occur
            violations.push(Violation {
                word: Some(w.clone()),
                reason: Reason::WrongCount {
                    found: pos.len(),
                    expected: k,
                },
            });
        }
        let mut residues: Vec<usize> = pos.iter().map(|i| i % k).collect();
        residues.sort_unstable();
        if residues.windows(2).any(|r| r[0] == r[1]) {
            violations.push(Violation {
                word: Some(w.clone()),
                reason: Reason::ResidueCollision { residues },
            });
        }
    }
    occurrences.retain(|_, pos| !pos.is_empty());
    violations.sort_by(|a, b| a.word.cmp(&b.word));

    Ok(PerfectnessReport {
        params: *p,
        is_perfect: violations.is_empty(),
        occurrences,
        violations,
        input_length: len,
    })
}

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Longest necklace (`s^n·k`) the search will attempt.
    pub max_length: u64,
    /// Upper bound on visited search nodes.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_length: 24,
            max_nodes: 100_000_000,
        }
    }
}

fn target_length(p: &Params, budget: &SearchBudget) -> Result<usize> {
    let len = (p.s() as u64)
        .checked_pow(p.n() as u32)
        .and_then(|x| x.checked_mul(p.k() as u64));
    match len {
        Some(len) if len <= budget.max_length => Ok(len as usize),
        _ => Err(Error::Capacity {
            what: format!(
                "exhaustive search for {p} needs length {}",
                len.map_or("> 2^64".to_string(), |l| l.to_string())
            ),
            limit: budget.max_length as u128,
        }),
    }
}

struct Dfs<'a> {
    params: &'a Params,
    len: usize,
    buf: Vec<Symbol>,
    /// indexed by `rank * k + residue`
    seen: Vec<bool>,
    visited: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn window_slot(&self, start: usize) -> usize {
        let s = self.params.s() as usize;
        let rank = self.buf[start..start + self.params.n()]
            .iter()
            .fold(0usize, |r, &c| r * s + c as usize);
        rank * self.params.k() + start % self.params.k()
    }

    fn search(&mut self) -> Result<bool> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::Budget {
                visited: self.visited - 1,
                budget: self.budget,
            });
        }
        if self.buf.len() == self.len {
            return Ok(check_perfect(&self.buf, self.params)?.is_perfect);
        }
        let n = self.params.n();
        for c in (0..self.params.s()).rev() {
            self.buf.push(c);
            let m = self.buf.len();
            let slot = (m >= n).then(|| self.window_slot(m - n));
            if let Some(slot) = slot {
                if self.seen[slot] {
                    self.buf.pop();
                    continue;
                }
                self.seen[slot] = true;
            }
            if self.search()? {
                return Ok(true);
            }
            if let Some(slot) = slot {
                self.seen[slot] = false;
            }
            self.buf.pop();
        }
        Ok(false)
    }
}

/// The lexicographically greatest string of length `s^n·k` that is an
/// (n,k)-perfect necklace, by depth-first search in decreasing symbol order.
/// A prefix is abandoned as soon as one of its complete windows repeats a
/// (word, start residue) combination.
pub fn brute_force_greatest(p: &Params, budget: &SearchBudget) -> Result<Word> {
    let len = target_length(p, budget)?;
    let mut dfs = Dfs {
        params: p,
        len,
        buf: Vec::with_capacity(len),
        seen: vec![false; len],
        visited: 0,
        budget: budget.max_nodes,
    };
    if dfs.search()? {
        Ok(Word::new(dfs.buf))
    } else {
        Err(Error::SearchExhausted)
    }
}

/// Same answer as [`brute_force_greatest`] by checking every one of the
/// `s^(s^n·k)` strings, largest first. `budget.max_nodes` caps the number of
/// candidates.
pub fn filter_all_greatest(p: &Params, budget: &SearchBudget) -> Result<Word> {
    let len = target_length(p, budget)?;
    let s = p.s();
    let candidates = (s as u64).checked_pow(len as u32);
    if candidates.is_none_or(|c| c > budget.max_nodes) {
        return Err(Error::Budget {
            visited: 0,
            budget: budget.max_nodes,
        });
    }
    let mut x = vec![s - 1; len];
    loop {
        if check_perfect(&x, p)?.is_perfect {
            return Ok(Word::new(x));
        }
        // decrement as a base-s number
        let Some(t) = x.iter().rposition(|&c| c > 0) else {
            return Err(Error::SearchExhausted);
        };
        x[t] -= 1;
        for c in &mut x[t + 1..] {
            *c = s - 1;
        }
    }
}

/// Strictly greater than each of its non-trivial rotations (which also makes
/// it aperiodic).
fn is_dominant(w: &[Symbol]) -> bool {
    let m = w.len();
    (1..m).all(|r| {
        let rotated = w[r..].iter().chain(&w[..r]);
        w.iter().cmp(rotated) == Ordering::Greater
    })
}

/// Decreasing lexicographic order where a proper prefix precedes its
/// extensions.
fn fkm_order(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| y.cmp(x))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

/// Greatest de Bruijn necklace of order `n`: all dominant aperiodic words of
/// length dividing `n`, found by brute force over `Σ^d`, concatenated in
/// decreasing order.
pub fn fkm_reference(s: u32, n: usize, guard: u64) -> Result<Word> {
    if s < 2 || n == 0 {
        return Err(Error::InvalidParams(format!(
            "need s >= 2 and n >= 1, got s={s}, n={n}"
        )));
    }
    let size = (s as u64).checked_pow(n as u32);
    if size.is_none_or(|x| x > guard) {
        return Err(Error::Capacity {
            what: format!("de Bruijn necklace with s={s}, n={n}"),
            limit: guard as u128,
        });
    }
    let mut lyndon: Vec<Vec<Symbol>> = Vec::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mut w = vec![0; d];
        loop {
            if is_dominant(&w) {
                lyndon.push(w.clone());
            }
            let Some(t) = w.iter().rposition(|&c| c < s - 1) else {
                break;
            };
            w[t] += 1;
            for c in &mut w[t + 1..] {
                *c = 0;
            }
        }
    }
    lyndon.sort_by(|a, b| fkm_order(a, b));
    Ok(Word::new(lyndon.concat()))
}
