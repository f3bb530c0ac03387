//! Pairs `⟨A, u⟩ ∈ Σⁿ × ℤ_k`, the `≻` order on them, rotations, maximality,
//! and the two ways of turning a maximal pair into a Lyndon pair
//! (reduction when `k | n`, expansion when `n | k`).
//!
//! All positions are 0-based. Where a formula is stated over 1-based
//! positions `a_1..a_n`, symbol `a_i` lives at index `i - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::params::{Mode, Params};
use crate::word::Word;

/// A word together with a residue modulo `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair {
    word: Word,
    residue: usize,
}

impl Pair {
    /// Builds a pair, checking it against `p`: length `n`, symbols below `s`,
    /// residue below `k`.
    pub fn new(word: Word, residue: usize, p: &Params) -> Result<Self> {
        let pair = Pair { word, residue };
        pair.validate(p)?;
        Ok(pair)
    }

    /// `⟨A, 0⟩`, checked against `p`.
    pub fn zero(word: Word, p: &Params) -> Result<Self> {
        Pair::new(word, 0, p)
    }

    pub(crate) fn raw(word: Word, residue: usize) -> Self {
        Pair { word, residue }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn validate(&self, p: &Params) -> Result<()> {
        if self.word.len() != p.n() {
            return Err(Error::InvalidInput(format!(
                "pair word has length {}, expected n={}",
                self.word.len(),
                p.n()
            )));
        }
        if self.residue >= p.k() {
            return Err(Error::InvalidInput(format!(
                "residue {} is not in Z_{}",
                self.residue,
                p.k()
            )));
        }
        self.word.check_alphabet(p.s())
    }

    /// The `≻` comparison without validation. `Greater` means `self ≻ other`:
    /// the smaller residue wins, equal residues fall back to the lexicographic
    /// order on words.
    pub fn succ_cmp(&self, other: &Pair) -> Ordering {
        other
            .residue
            .cmp(&self.residue)
            .then_with(|| self.word.cmp(&other.word))
    }

    /// `⟨A, u⟩^t = ⟨A^t, t·u mod k⟩`.
    pub fn power(&self, t: usize, k: usize) -> Pair {
        Pair::raw(self.word.repeat(t), (self.residue * t) % k)
    }

    /// Concatenation `⟨A, u⟩⟨B, u⟩ = ⟨AB, u⟩`; residues must agree.
    pub fn concat(&self, other: &Pair) -> Result<Pair> {
        if self.residue != other.residue {
            return Err(Error::InvalidInput(format!(
                "cannot concatenate pairs with residues {} and {}",
                self.residue, other.residue
            )));
        }
        let mut v = self.word.symbols().to_vec();
        v.extend_from_slice(other.word.symbols());
        Ok(Pair::raw(Word::new(v), self.residue))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("⟨{},{}⟩", self.word, self.residue))
    }
}

/// A residue-0 pair obtained from a maximal pair by reduction (`k | n`, the
/// word has length a multiple of `k` dividing `n`) or expansion (`n | k`, the
/// word has length `k`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LyndonPair {
    word: Word,
}

impl LyndonPair {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn residue(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn as_pair(&self) -> Pair {
        Pair::raw(self.word.clone(), 0)
    }
}

impl fmt::Display for LyndonPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("⟨{},0⟩", self.word))
    }
}

/// Compares the pairs under `≻`; `Greater` means `a ≻ b`.
pub fn cmp_succ(a: &Pair, b: &Pair, p: &Params) -> Result<Ordering> {
    a.validate(p)?;
    b.validate(p)?;
    Ok(a.succ_cmp(b))
}

/// `⟨a_1..a_n, u⟩ ↦ ⟨a_2..a_n a_1, u+1⟩`
pub fn rotate_right(a: &Pair, p: &Params) -> Result<Pair> {
    a.validate(p)?;
    Ok(Pair::raw(a.word.rotated(1), (a.residue + 1) % p.k()))
}

/// `⟨a_1..a_n, u⟩ ↦ ⟨a_n a_1..a_{n-1}, u-1⟩`
pub fn rotate_left(a: &Pair, p: &Params) -> Result<Pair> {
    a.validate(p)?;
    let n = p.n();
    Ok(Pair::raw(
        a.word.rotated(n - 1),
        (a.residue + p.k() - 1) % p.k(),
    ))
}

/// The `i`-fold right rotation, i.e. the word shifted left by `i` with the
/// residue advanced by `i`.
fn rotation_raw(a: &Pair, i: usize, p: &Params) -> Pair {
    Pair::raw(a.word.rotated(i % p.n()), (a.residue + i) % p.k())
}

/// Every pair reachable from `a` by rotation, in rotation order
/// `i = 0, 1, .., max(n,k) - 1`, duplicates removed.
pub fn rotation_class(a: &Pair, p: &Params) -> Result<Vec<Pair>> {
    a.validate(p)?;
    let mut out: Vec<Pair> = Vec::with_capacity(p.orbit());
    for i in 0..p.orbit() {
        let r = rotation_raw(a, i, p);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

/// Compares the cyclic shift of `w` by `by` against `w` itself, without
/// allocating.
fn shifted_cmp(w: &[u32], by: usize) -> Ordering {
    let m = w.len();
    (0..m)
        .map(|t| w[(t + by) % m].cmp(&w[t]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Whether no rotation of `a` is `≻`-greater than `a` (ties allowed).
pub fn is_maximal(a: &Pair, p: &Params) -> Result<bool> {
    a.validate(p)?;
    Ok(is_maximal_unchecked(a, p))
}

pub(crate) fn is_maximal_unchecked(a: &Pair, p: &Params) -> bool {
    if a.residue == 0 {
        return match p.mode() {
            // every non-trivial rotation has a non-zero residue
            Mode::NDividesK => true,
            // only rotations by multiples of k keep residue 0
            Mode::KDividesN => (p.k()..p.n())
                .step_by(p.k())
                .all(|i| shifted_cmp(&a.word, i).is_le()),
        };
    }
    (1..p.orbit()).all(|i| rotation_raw(a, i, p).succ_cmp(a).is_le())
}

fn require_residue_zero(a: &Pair, what: &str) -> Result<()> {
    if a.residue != 0 {
        return Err(Error::Precondition(format!(
            "{what} needs a residue-0 pair, got residue {}",
            a.residue
        )));
    }
    Ok(())
}

/// Smallest `q` with `k | q`, `q | n` such that the word is `(A_q)^{n/q}`.
/// Returns `⟨A_q, 0⟩`.
pub fn reduce(a: &Pair, p: &Params) -> Result<LyndonPair> {
    a.validate(p)?;
    if !p.n().is_multiple_of(p.k()) {
        return Err(Error::Precondition(format!("reduction needs k | n ({p})")));
    }
    require_residue_zero(a, "reduction")?;
    Ok(reduce_unchecked(&a.word, p.k()))
}

pub(crate) fn reduce_unchecked(w: &Word, k: usize) -> LyndonPair {
    let n = w.len();
    let q = (k..=n)
        .step_by(k)
        .filter(|q| n.is_multiple_of(*q))
        .find(|&q| (q..n).all(|t| w[t] == w[t - q]))
        .unwrap_or(n);
    LyndonPair { word: w.prefix(q) }
}

/// `⟨A, 0⟩ ↦ ⟨A^{k/n}, 0⟩`, requires `n | k`.
pub fn expand(a: &Pair, p: &Params) -> Result<LyndonPair> {
    a.validate(p)?;
    if !p.k().is_multiple_of(p.n()) {
        return Err(Error::Precondition(format!("expansion needs n | k ({p})")));
    }
    require_residue_zero(a, "expansion")?;
    Ok(expand_unchecked(&a.word, p.k()))
}

pub(crate) fn expand_unchecked(w: &Word, k: usize) -> LyndonPair {
    LyndonPair {
        word: w.repeat(k / w.len()),
    }
}

/// The Lyndon pair of a residue-0 pair: reduction or expansion by mode.
pub fn lyndon_of(a: &Pair, p: &Params) -> Result<LyndonPair> {
    match p.mode() {
        Mode::KDividesN => reduce(a, p),
        Mode::NDividesK => expand(a, p),
    }
}
