//! The successor operator θ on residue-0 pairs and its chain inverse.

use crate::error::{Error, Result};
use crate::pair::Pair;
use crate::params::{Mode, Params};
use crate::word::Word;

fn require_residue_zero(a: &Pair) -> Result<()> {
    if a.residue() != 0 {
        return Err(Error::Domain(format!(
            "θ acts on residue-0 pairs, got residue {}",
            a.residue()
        )));
    }
    Ok(())
}

/// θ⟨A,0⟩.
///
/// With `i` the 1-based position of the last non-zero symbol and `j` the
/// smallest multiple of `k` that is at least `i` (capped at `n` when `n | k`),
/// the result is `[A_{i-1} (a_i - 1) (s-1)^{j-i}]^q A_{n-qj}` with `q = ⌊n/j⌋`.
/// Both modes are covered by `j = i + ((n - i) mod k)`.
pub fn theta(a: &Pair, p: &Params) -> Result<Pair> {
    a.validate(p)?;
    require_residue_zero(a)?;
    theta_unchecked(a.word(), p)
        .map(|w| Pair::raw(w, 0))
        .ok_or_else(|| Error::Domain("θ is undefined at the all-zero pair".into()))
}

/// θ on a bare word of length `n`; `None` at `0ⁿ`.
pub(crate) fn theta_unchecked(w: &[u32], p: &Params) -> Option<Word> {
    let n = p.n();
    let i = w.iter().rposition(|&c| c != 0)? + 1;
    let j = i + (n - i) % p.k();
    let q = n / j;

    let mut block = Vec::with_capacity(j);
    block.extend_from_slice(&w[..i - 1]);
    block.push(w[i - 1] - 1);
    block.resize(j, p.top());

    let mut out = Vec::with_capacity(n);
    for _ in 0..q {
        out.extend_from_slice(&block);
    }
    // n - qj < i, so this tail is untouched by the decrement
    out.extend_from_slice(&w[..n - q * j]);
    Some(Word::new(out))
}

/// The predecessor of `a` on the θ-chain starting at `⟨(s-1)ⁿ,0⟩`.
///
/// When `n | k` θ is a bijection on residue-0 pairs and this is its inverse:
/// increment the last symbol below `s-1` and zero everything after it.
///
/// When `k | n` the word is factored as `(A_r)^w A_v` with `A_r =
/// A_u (s-1)^{r-u}`, scanning `r = k, 2k, .., n` and taking the first `r`
/// that admits such a factorization with `r-k < u ≤ r` and `a_u < s-1`; the
/// predecessor is `A_{u-1} (a_u + 1) 0^{n-u}`. Inputs off the chain may have
/// no such factorization, reported as [`Error::NoPredecessor`].
pub fn theta_preimage(a: &Pair, p: &Params) -> Result<Pair> {
    a.validate(p)?;
    require_residue_zero(a)?;
    let w = a.word();
    let top = p.top();
    if w.is_constant(top) {
        return Err(Error::Domain(
            "the all-(s-1) pair is the head of the chain and has no predecessor".into(),
        ));
    }
    let n = p.n();
    let k = p.k();

    let bump = |u: usize| {
        // u is 1-based
        let mut out = w[..u].to_vec();
        out[u - 1] += 1;
        out.resize(n, 0);
        Pair::raw(Word::new(out), 0)
    };

    if p.mode() == Mode::NDividesK {
        let u = w.iter().rposition(|&c| c < top).expect("not constant") + 1;
        return Ok(bump(u));
    }

    for r in (k..=n).step_by(k) {
        if (r..n).any(|t| w[t] != w[t - r]) {
            continue;
        }
        let Some(u) = w[..r].iter().rposition(|&c| c < top).map(|x| x + 1) else {
            continue;
        };
        if u + k > r {
            return Ok(bump(u));
        }
    }
    Err(Error::NoPredecessor(format!(
        "{} admits no chain factorization",
        w
    )))
}
