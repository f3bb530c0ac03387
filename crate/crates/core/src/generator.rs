//! Enumeration of the θ-chain, the list of maximal pairs, the list of Lyndon
//! pairs and the necklace obtained by concatenating the latter.
//!
//! Everything here is a lazy iterator holding O(n) symbols of state; the
//! necklace itself is never materialized unless the caller collects it.

use crate::error::{Error, Result};
use crate::pair::{expand_unchecked, is_maximal_unchecked, reduce_unchecked, LyndonPair, Pair};
use crate::params::{Mode, Params};
use crate::theta::theta_unchecked;
use crate::word::{Symbol, Word};

/// Default cap on the number of symbols [`build_necklace`] agrees to emit.
pub const DEFAULT_GUARD: u64 = 100_000_000;

/// `s^n · k`, the length of the necklace.
pub fn necklace_length(p: &Params) -> Result<u64> {
    let overflow = || Error::Capacity {
        what: format!("necklace length s^n*k for {p} overflows"),
        limit: u64::MAX as u128,
    };
    let n = u32::try_from(p.n()).map_err(|_| overflow())?;
    (p.s() as u64)
        .checked_pow(n)
        .and_then(|x| x.checked_mul(p.k() as u64))
        .ok_or_else(overflow)
}

/// Iterator over `θ^i ⟨(s-1)ⁿ, 0⟩` for `i = 0..=T`, ending at `⟨0ⁿ, 0⟩`.
#[derive(Debug, Clone)]
pub struct ChainCursor {
    params: Params,
    current: Option<Word>,
    step_index: usize,
}

impl ChainCursor {
    pub fn new(params: Params) -> Self {
        ChainCursor {
            params,
            current: Some(Word::run(params.top(), params.n())),
            step_index: 0,
        }
    }

    /// The exponent `i` of the next pair to be yielded.
    pub fn step_index(&self) -> usize {
        self.step_index
    }

    pub fn params(&self) -> &Params {
        &self.params
    }
}

impl Iterator for ChainCursor {
    type Item = Pair;

    fn next(&mut self) -> Option<Pair> {
        let cur = self.current.take()?;
        self.current = theta_unchecked(&cur, &self.params);
        self.step_index += 1;
        Some(Pair::raw(cur, 0))
    }
}

pub fn chain_iter(p: &Params) -> ChainCursor {
    ChainCursor::new(*p)
}

/// The chain with non-maximal pairs dropped.
pub fn maximal_list(p: &Params) -> impl Iterator<Item = Pair> {
    let p = *p;
    chain_iter(&p).filter(move |a| is_maximal_unchecked(a, &p))
}

/// Lyndon pairs of the maximal pairs, in the same order.
pub fn lyndon_list(p: &Params) -> LyndonIter {
    LyndonIter {
        params: *p,
        maximal: Box::new(maximal_list(p)),
        previous: None,
    }
}

pub struct LyndonIter {
    params: Params,
    maximal: Box<dyn Iterator<Item = Pair>>,
    previous: Option<Word>,
}

impl Iterator for LyndonIter {
    type Item = LyndonPair;

    fn next(&mut self) -> Option<LyndonPair> {
        let a = self.maximal.next()?;
        let lyndon = lyndon_of_word(a.word(), &self.params);
        if cfg!(debug_assertions) {
            if let Some(prev) = &self.previous {
                debug_assert!(
                    neighbour_prefix_holds(prev, a.word(), &self.params),
                    "{prev} is not a prefix of its Lyndon word followed by that of {}",
                    a.word()
                );
            }
            self.previous = Some(a.word().clone());
        }
        Some(lyndon)
    }
}

fn lyndon_of_word(w: &Word, p: &Params) -> LyndonPair {
    match p.mode() {
        Mode::KDividesN => reduce_unchecked(w, p.k()),
        Mode::NDividesK => expand_unchecked(w, p.k()),
    }
}

/// For consecutive maximal pairs `⟨A,0⟩, ⟨B,0⟩`: is `A` a prefix of the
/// concatenated Lyndon words of `A` and `B`?
pub fn neighbour_prefix_holds(a: &Word, b: &Word, p: &Params) -> bool {
    let la = lyndon_of_word(a, p);
    let lb = lyndon_of_word(b, p);
    la.word()
        .iter()
        .chain(lb.word().iter())
        .take(a.len())
        .eq(a.iter())
}

/// The necklace as a stream of symbols.
pub struct NecklaceStream {
    params: Params,
    lyndon: LyndonIter,
    block: Word,
    pos: usize,
    emitted: u64,
    total: u64,
}

impl NecklaceStream {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn total_length(&self) -> u64 {
        self.total
    }

    /// Switches to yielding whole Lyndon words instead of single symbols.
    /// Only meaningful before any symbol has been consumed.
    pub fn into_blocks(self) -> LyndonIter {
        self.lyndon
    }
}

impl Iterator for NecklaceStream {
    type Item = Symbol;

    fn next(&mut self) -> Option<Symbol> {
        while self.pos == self.block.len() {
            self.block = self.lyndon.next()?.into_word();
            self.pos = 0;
        }
        let c = self.block[self.pos];
        self.pos += 1;
        self.emitted += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.emitted).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Streams the necklace for `p`, refusing if it is longer than
/// [`DEFAULT_GUARD`] symbols.
pub fn build_necklace(p: &Params) -> Result<NecklaceStream> {
    build_necklace_with_guard(p, DEFAULT_GUARD)
}

pub fn build_necklace_with_guard(p: &Params, guard: u64) -> Result<NecklaceStream> {
    let total = necklace_length(p)?;
    if total > guard {
        return Err(Error::Capacity {
            what: format!("necklace for {p} has {total} symbols"),
            limit: guard as u128,
        });
    }
    Ok(NecklaceStream {
        params: *p,
        lyndon: lyndon_list(p),
        block: Word::default(),
        pos: 0,
        emitted: 0,
        total,
    })
}

/// Collects [`build_necklace`] into a word.
pub fn necklace_word(p: &Params) -> Result<Word> {
    Ok(Word::new(build_necklace(p)?.collect()))
}
