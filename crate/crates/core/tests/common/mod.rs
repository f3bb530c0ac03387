#![allow(dead_code)]

use perfect_necklace::{Params, Word};

/// All words of `Σ^n`, in decreasing lexicographic order.
pub fn all_words(s: u32, n: usize) -> Vec<Word> {
    let total = (s as usize).pow(n as u32);
    (0..total)
        .rev()
        .map(|mut r| {
            let mut v = vec![0u32; n];
            for slot in v.iter_mut().rev() {
                *slot = (r % s as usize) as u32;
                r /= s as usize;
            }
            Word::new(v)
        })
        .collect()
}

/// Valid `k` for `n`: its divisors plus the given multiples of `n`.
pub fn valid_ks(n: usize, multiples: &[usize]) -> Vec<usize> {
    let mut ks: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    ks.extend(multiples.iter().map(|t| t * n));
    ks.sort_unstable();
    ks.dedup();
    ks
}

pub fn params_grid(ss: &[u32], ns: &[usize], multiples: &[usize], max_len: u64) -> Vec<Params> {
    let mut out = Vec::new();
    for &s in ss {
        for &n in ns {
            for k in valid_ks(n, multiples) {
                let p = Params::new(s, n, k).unwrap();
                if perfect_necklace::necklace_length(&p).unwrap() <= max_len {
                    out.push(p);
                }
            }
        }
    }
    out
}
