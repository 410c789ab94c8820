//! Prefix-level check of `(h(V))^ω ∩ R_p = ψ_p(h_p(V^ω))`.
//!
//! The left side is computed over coded words with the block search limited to
//! codes of index at most `p`. The right side is computed over staged words
//! with `L_p` membership and then encoded. Both produce every word of length
//! at most `n` that is a prefix of some element of the respective ω-language.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::viable::viable_prefix_within;
use crate::coding::{code_len, encode};
use crate::staged::member_lk;
use crate::word::{CodedWord, StagedSymbol, Symbol, Word};

#[derive(Debug, Clone)]
pub struct RpIdentity {
    pub p: u32,
    pub n: usize,
    /// Prefixes of `(h(V))^ω ∩ R_p`.
    pub coded_side: BTreeSet<CodedWord>,
    /// Prefixes of `ψ_p(h_p(V^ω))`.
    pub staged_side: BTreeSet<CodedWord>,
}

impl RpIdentity {
    pub fn compute(p: u32, n: usize) -> RpIdentity {
        RpIdentity {
            p,
            n,
            coded_side: coded_prefixes(p, n),
            staged_side: staged_prefixes(p, n),
        }
    }

    pub fn holds(&self) -> bool {
        self.coded_side == self.staged_side
    }

    pub fn only_coded(&self) -> impl Iterator<Item = &CodedWord> {
        self.coded_side.difference(&self.staged_side)
    }

    pub fn only_staged(&self) -> impl Iterator<Item = &CodedWord> {
        self.staged_side.difference(&self.coded_side)
    }

    /// Plain-text summary listing every word found on one side only.
    pub fn report(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p={} n={}", self.p, self.n);
        let _ = writeln!(out, "coded side: {} words", self.coded_side.len());
        let _ = writeln!(out, "staged side: {} words", self.staged_side.len());
        for w in self.only_coded() {
            let _ = writeln!(out, "only coded: {w}");
        }
        for w in self.only_staged() {
            let _ = writeln!(out, "only staged: {w}");
        }
        let _ = writeln!(out, "{}", if self.holds() { "equal" } else { "differ" });
        out
    }
}

pub fn verify_rp_identity(p: u32, n: usize) -> bool {
    RpIdentity::compute(p, n).holds()
}

/// The set is prefix-closed, so a depth-first search never needs to leave it.
fn coded_prefixes(p: u32, n: usize) -> BTreeSet<CodedWord> {
    fn go(buf: &mut Vec<Symbol>, p: u32, n: usize, out: &mut BTreeSet<CodedWord>) {
        out.insert(Word::new(buf.clone()));
        if buf.len() == n {
            return;
        }
        for s in Symbol::ALL {
            buf.push(s);
            if viable_prefix_within(buf, p) {
                go(buf, p, n, out);
            }
            buf.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(&mut Vec::new(), p, n, &mut out);
    out
}

/// Prefix of `(h_p(V))^ω` over the staged alphabet. A block tail is accepted
/// when appending some number of `↞_1` turns it into a word of `L_p`.
pub fn staged_viable_prefix(s: &[StagedSymbol], p: u32) -> bool {
    let n = s.len();
    let mut starts = vec![false; n + 1];
    starts[0] = true;
    for q in 0..=n {
        if !starts[q] {
            continue;
        }
        let tail = &s[q..];
        let mut padded = tail.to_vec();
        for _ in 0..=tail.len() {
            if member_lk(&padded, p) {
                return true;
            }
            padded.push(StagedSymbol::Eraser(1));
        }
        for e in q..n {
            if matches!(s[e], StagedSymbol::Letter(_)) && member_lk(&s[q..e], p) {
                starts[e + 1] = true;
            }
        }
    }
    false
}

/// Every coded prefix of length at most `n` of `φ_p(s)` for staged viable `s`.
fn staged_prefixes(p: u32, n: usize) -> BTreeSet<CodedWord> {
    fn go(buf: &mut Vec<StagedSymbol>, coded_len: usize, p: u32, n: usize, out: &mut BTreeSet<CodedWord>) {
        let coded = encode(buf);
        for len in 0..=coded.len().min(n) {
            out.insert(Word::new(coded[..len].to_vec()));
        }
        // Only symbols whose code starts within the first n positions matter.
        if coded_len >= n {
            return;
        }
        for s in StagedSymbol::alphabet(p) {
            buf.push(s);
            if staged_viable_prefix(buf, p) {
                go(buf, coded_len + code_len(s), p, n, out);
            }
            buf.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(&mut Vec::new(), 0, p, n, &mut out);
    out
}
