//! The staged erasure languages `L_1 ⊂ L_2 ⊂ …`.
//!
//! `L_k` holds the finite words over `{0, 1, ↞_1, …, ↞_k}` that evaluate to
//! the empty word under staged erasure.

use crate::erase::run_stages;
use crate::word::{words_of_len, Letter, StagedSymbol, StagedWord};

/// Membership in `L_1` through the grammar `S → a S ↞_1 S | λ`, `a ∈ {0, 1}`.
///
/// A chart over spans: `derives[i][j]` holds when `w[i..j]` derives from `S`.
/// Does not touch the eraser engine.
pub fn member_l1_grammar(w: &StagedWord) -> bool {
    let n = w.len();
    let mut derives = vec![vec![false; n + 1]; n + 1];
    for (i, row) in derives.iter_mut().enumerate() {
        row[i] = true;
    }
    for len in 1..=n {
        for i in 0..=n - len {
            let j = i + len;
            if !matches!(w[i], StagedSymbol::Letter(_)) {
                continue;
            }
            // w[i] = a, w[m] = ↞_1, S spans (i+1..m) and (m+1..j).
            derives[i][j] = (i + 1..j)
                .any(|m| w[m] == StagedSymbol::Eraser(1) && derives[i + 1][m] && derives[m + 1][j]);
        }
    }
    derives[0][n]
}

/// Membership in `L_k` by staged evaluation. Words using an index above `k`
/// are simply not members.
pub fn member_lk(w: &[StagedSymbol], k: u32) -> bool {
    if k == 0 || w.iter().any(|s| s.eraser_index().is_some_and(|j| j > k)) {
        return false;
    }
    run_stages(w, k).is_some_and(|r| r.is_empty())
}

/// Every member of `L_k` with at most `max_len` symbols, in length-lex order
/// over `0 < 1 < ↞_1 < … < ↞_k`.
pub fn enumerate_lk(k: u32, max_len: usize) -> Vec<StagedWord> {
    let alphabet = StagedSymbol::alphabet(k);
    (0..=max_len)
        .flat_map(|len| words_of_len(&alphabet, len).filter(|w| member_lk(w, k)).collect::<Vec<_>>())
        .collect()
}

/// The least `k` with `w ∈ L_k`.
///
/// Stages above the largest index present are identity passes and smaller
/// `k` exclude that index from the alphabet, so one evaluation decides it.
pub fn min_k(w: &StagedWord) -> Option<u32> {
    let k = w.max_index().max(1);
    member_lk(w, k).then_some(k)
}

/// `0 ↞_k`, the shortest word in `L_k` outside `L_{k-1}`.
pub fn chain_witness(k: u32) -> StagedWord {
    StagedWord::new(vec![StagedSymbol::Letter(Letter::Zero), StagedSymbol::eraser(k)])
}
