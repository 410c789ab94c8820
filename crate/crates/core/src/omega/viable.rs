//! Prefixes of the ω-power `(h(V))^ω`.

use super::blocks::BlockTable;
use crate::coding::decode;
use crate::erase::backspace;
use crate::word::{StagedSymbol, Symbol};

/// True when `w` is a prefix of some element of `(h(V))^ω`.
///
/// `w` splits into complete blocks, each followed by a letter, and a tail
/// that must extend to a block. Whether the letters close `h(V)` factors or
/// only blocks inside one factor makes no difference to viability.
pub fn viable_prefix(w: &[Symbol]) -> bool {
    viable_in(&mut BlockTable::new(w, None))
}

/// True when `w` is a prefix of some element of `(h(V))^ω ∩ R_p`: the same
/// search with every code, including completions, limited to index `p`.
pub fn viable_prefix_within(w: &[Symbol], p: u32) -> bool {
    viable_in(&mut BlockTable::new(w, Some(p)))
}

fn viable_in(table: &mut BlockTable<'_>) -> bool {
    let n = table.word().len();
    let bound = table.max_index();
    let (reached, _) = table.block_starts(0);
    (0..=n).any(|q| reached[q] && tail_extends_to_block(&table.word()[q..], bound))
}

/// Can `tail` be completed to a block?
///
/// Stage 1 is the only stage whose stuck erasers cannot be repaired by
/// appending symbols: once it survives `tail`, appending one `↞_1` per
/// symbol left on its stack empties the word at stage 1. A dangling code is
/// first closed at some admissible index.
pub(crate) fn tail_extends_to_block(tail: &[Symbol], bound: Option<u32>) -> bool {
    let Ok(decoded) = decode(tail) else {
        return false;
    };
    let mut symbols = decoded.symbols.into_symbols();
    if bound.is_some_and(|p| symbols.iter().any(|s| s.eraser_index().is_some_and(|j| j > p))) {
        return false;
    }
    let stage_one = |s: &[StagedSymbol]| backspace(s, |x| x == StagedSymbol::Eraser(1)).is_some();
    match decoded.dangling {
        None => stage_one(&symbols),
        Some(d) => {
            let lowest = d.betas.max(1);
            // Unbounded, any index from 2 up is pushed at stage 1 and behaves alike.
            let highest = bound.unwrap_or(lowest + 1);
            (lowest..=highest).any(|c| {
                symbols.push(StagedSymbol::Eraser(c));
                let ok = stage_one(&symbols);
                symbols.pop();
                ok
            })
        }
    }
}
