//! Membership in `𝓛` and `h(V)` over coded words, with per-word memo tables
//! shared by the factorization, viability and lasso searches.

use crate::coding::{decode_complete, Scanner};
use crate::erase::run_stages;
use crate::word::{StagedSymbol, Symbol};

/// `w ∈ 𝓛 = ⋃_n φ_n(L_n)`.
///
/// Stages above the largest index `m` present are identity passes, and
/// `L_n ⊂ L_{n+1}`, so the union reduces to one staged evaluation at `m`.
pub fn member_lscript(w: &[Symbol]) -> bool {
    match decode_complete(w) {
        Some(s) => erases_completely(&s, s.max_index().max(1)),
        None => false,
    }
}

fn erases_completely(s: &[StagedSymbol], k: u32) -> bool {
    // Every acting eraser takes itself and one other symbol with it.
    let erasers = s.iter().filter(|x| x.eraser_index().is_some()).count();
    if s.len() % 2 != 0 || s.len() > 2 * erasers {
        return false;
    }
    run_stages(s, k).is_some_and(|r| r.is_empty())
}

/// Block structure of one coded word.
///
/// `max_index` restricts blocks to codes of index at most `p`, which selects
/// `φ_p(L_p)` instead of `𝓛`.
pub(crate) struct BlockTable<'w> {
    word: &'w [Symbol],
    max_index: Option<u32>,
    lscript_ends: Vec<Option<Vec<usize>>>,
}

impl<'w> BlockTable<'w> {
    pub(crate) fn new(word: &'w [Symbol], max_index: Option<u32>) -> Self {
        BlockTable {
            word,
            max_index,
            lscript_ends: vec![None; word.len() + 1],
        }
    }

    pub(crate) fn word(&self) -> &'w [Symbol] {
        self.word
    }

    pub(crate) fn max_index(&self) -> Option<u32> {
        self.max_index
    }

    /// All `e` with `word[start..e]` a block, in increasing order.
    pub(crate) fn lscript_ends(&mut self, start: usize) -> &[usize] {
        if self.lscript_ends[start].is_none() {
            let ends = self.compute_lscript_ends(start);
            self.lscript_ends[start] = Some(ends);
        }
        self.lscript_ends[start].as_deref().unwrap()
    }

    fn compute_lscript_ends(&self, start: usize) -> Vec<usize> {
        let mut ends = vec![start];
        let mut scanner = Scanner::new();
        let mut decoded: Vec<StagedSymbol> = Vec::new();
        let mut top = 0u32;
        for (offset, &c) in self.word[start..].iter().enumerate() {
            match scanner.step(c) {
                Err(()) => break,
                Ok(None) => continue,
                Ok(Some(s)) => {
                    if let Some(j) = s.eraser_index() {
                        if self.max_index.is_some_and(|p| j > p) {
                            break;
                        }
                        top = top.max(j);
                    }
                    decoded.push(s);
                }
            }
            if erases_completely(&decoded, top.max(1)) {
                ends.push(start + offset + 1);
            }
        }
        ends
    }

    /// Positions reachable from `start` through blocks each followed by a
    /// letter: `(start, ends after a 0-terminated block, ends after a
    /// 1-terminated block)`. The first vector is indexed by position.
    pub(crate) fn block_starts(&mut self, start: usize) -> (Vec<bool>, Vec<usize>) {
        let n = self.word.len();
        let mut reached = vec![false; n + 1];
        let mut factor_ends = Vec::new();
        reached[start] = true;
        for q in start..=n {
            if !reached[q] {
                continue;
            }
            let ends = self.lscript_ends(q).to_vec();
            for e in ends {
                if e >= n {
                    continue;
                }
                match self.word[e] {
                    Symbol::ZERO => reached[e + 1] = true,
                    Symbol::ONE => factor_ends.push(e + 1),
                    _ => {}
                }
            }
        }
        factor_ends.sort_unstable();
        factor_ends.dedup();
        (reached, factor_ends)
    }

    /// All `e` with `word[start..e] ∈ h(V) = (𝓛·0)^*·𝓛·1`.
    pub(crate) fn factor_ends(&mut self, start: usize) -> Vec<usize> {
        self.block_starts(start).1
    }
}

/// `w ∈ h(V)` with `V = 0^*·1`, i.e. `w ∈ (𝓛·0)^*·𝓛·1`.
pub fn member_hv(w: &[Symbol]) -> bool {
    if w.last() != Some(&Symbol::ONE) {
        return false;
    }
    BlockTable::new(w, None).factor_ends(0).contains(&w.len())
}
