//! The enumeration `θ : ℕ → h(V)` and the prefix decider for the set `𝒟`.
//!
//! `θ` lists `h(V)` in length-lexicographic order over `0 < 1 < α < β`.

use std::sync::{OnceLock, RwLock};

use super::blocks::member_hv;
use super::viable::viable_prefix;
use crate::word::{CodedWord, Letter, Symbol, Word};

/// Memo table of `h(V)` members grouped by length.
///
/// Readers share the table; a caller that needs a longer length takes the
/// write lock and appends the missing levels.
#[derive(Debug, Default)]
pub struct Theta {
    levels: RwLock<Vec<Vec<CodedWord>>>,
}

impl Theta {
    pub fn new() -> Self {
        Theta::default()
    }

    /// `θ(i)`.
    pub fn get(&self, i: usize) -> CodedWord {
        let mut len = 0;
        let mut skipped = 0;
        loop {
            let level = self.level(len);
            if i < skipped + level.len() {
                return level[i - skipped].clone();
            }
            skipped += level.len();
            len += 1;
        }
    }

    /// Members of `h(V)` of exactly `len` symbols, in lexicographic order.
    pub fn level(&self, len: usize) -> Vec<CodedWord> {
        if let Some(level) = self.levels.read().unwrap().get(len) {
            return level.clone();
        }
        let mut levels = self.levels.write().unwrap();
        while levels.len() <= len {
            let next = members_of_len(levels.len());
            levels.push(next);
        }
        levels[len].clone()
    }

    /// Members of length at most `max_len`, in `θ` order.
    pub fn up_to_len(&self, max_len: usize) -> Vec<CodedWord> {
        (0..=max_len).flat_map(|len| self.level(len)).collect()
    }
}

/// Depth-first over viable prefixes, which are closed under taking prefixes.
fn members_of_len(len: usize) -> Vec<CodedWord> {
    fn go(buf: &mut Vec<Symbol>, len: usize, out: &mut Vec<CodedWord>) {
        if buf.len() == len {
            if member_hv(buf) {
                out.push(Word::new(buf.clone()));
            }
            return;
        }
        for s in Symbol::ALL {
            buf.push(s);
            if viable_prefix(buf) {
                go(buf, len, out);
            }
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(len), len, &mut out);
    out
}

fn shared() -> &'static Theta {
    static THETA: OnceLock<Theta> = OnceLock::new();
    THETA.get_or_init(Theta::new)
}

pub fn theta(i: usize) -> CodedWord {
    shared().get(i)
}

/// All members of `h(V)` with at most `max_len` symbols; `enumerate_hv(n)[i] = θ(i)`.
pub fn enumerate_hv(max_len: usize) -> Vec<CodedWord> {
    shared().up_to_len(max_len)
}

/// Complete blocks `0^{n_i}·1` of `sigma` and the number of trailing zeros.
pub fn sigma_blocks(sigma: &[Letter]) -> (Vec<usize>, usize) {
    let mut blocks = Vec::new();
    let mut zeros = 0;
    for &l in sigma {
        match l {
            Letter::Zero => zeros += 1,
            Letter::One => {
                blocks.push(zeros);
                zeros = 0;
            }
        }
    }
    (blocks, zeros)
}

/// Can `(sigma, nu)` be extended to a pair of `𝒟`?
///
/// `nu` must agree with `θ(n_1)·θ(n_2)·…` over the complete blocks of `sigma`.
/// Past those, the next factor `θ(n)` is open, and every viable word is a
/// prefix of infinitely many members of `h(V)`, so the tail only has to be
/// viable.
pub fn d_check(sigma: &[Letter], nu: &[Symbol]) -> bool {
    let (blocks, _) = sigma_blocks(sigma);
    let mut offset = 0;
    for n in blocks {
        let factor = theta(n);
        let rest = &nu[offset..];
        if rest.len() <= factor.len() {
            return factor.starts_with(rest);
        }
        if !rest.starts_with(&factor) {
            return false;
        }
        offset += factor.len();
    }
    viable_prefix(&nu[offset..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_up_to;

    fn coded(s: &str) -> CodedWord {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Vec<Letter> {
        s.parse::<Word<Letter>>().unwrap().into_symbols()
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(0).to_string(), "1");
        assert_eq!(theta(1).to_string(), "01");
        assert_eq!(theta(2).to_string(), "001");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_hv(0), Vec::<CodedWord>::new());
        assert_eq!(enumerate_hv(1), [coded("1")]);
        assert_eq!(enumerate_hv(2), [coded("1"), coded("01")]);
    }

    #[test]
    fn levels_match_filtering_every_word() {
        let t = Theta::new();
        for len in 0..=6 {
            let filtered: Vec<CodedWord> = words_up_to(&Symbol::ALL, len)
                .filter(|w| w.len() == len && member_hv(w))
                .collect();
            assert_eq!(t.level(len), filtered, "length {len}");
        }
    }

    #[test]
    fn d_check_examples() {
        assert!(d_check(&letters("1"), &coded("1")));
        assert!(d_check(&letters("01"), &coded("01")));
        assert!(!d_check(&letters("1"), &coded("0")));
    }

    #[test]
    fn d_check_partial_factors() {
        // θ(1) = "01": a proper prefix of it is consistent.
        assert!(d_check(&letters("01"), &coded("0")));
        // Past the complete blocks anything viable is consistent.
        assert!(d_check(&letters("1"), &coded("10ab")));
        assert!(!d_check(&letters("1"), &coded("1aba")));
        assert!(d_check(&letters(""), &coded("")));
    }

    #[test]
    fn shared_memo_is_thread_safe() {
        let t = Theta::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4).map(|_| scope.spawn(|| t.get(40))).collect();
            let results: Vec<CodedWord> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            assert!(results.windows(2).all(|w| w[0] == w[1]));
        });
    }
}
