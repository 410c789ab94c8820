use std::fmt;

use super::blocks::BlockTable;
use crate::word::Symbol;

/// Decompositions of a finite word into `h(V)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Total number of distinct decompositions, saturating.
    pub count: u64,
    /// When `count == 1`: `0 = c_0 < c_1 < … < c_m = |w|`. Empty otherwise.
    pub cuts: Vec<usize>,
}

impl Factorization {
    /// Cut positions strictly inside the word.
    pub fn interior_cuts(&self) -> &[usize] {
        match self.cuts.len() {
            0..=2 => &[],
            n => &self.cuts[1..n - 1],
        }
    }

    pub fn factors<'a, S>(&self, w: &'a [S]) -> Vec<&'a [S]> {
        self.cuts.windows(2).map(|c| &w[c[0]..c[1]]).collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "count={}", self.count)?;
        if self.count == 1 {
            let inner: Vec<String> = self.interior_cuts().iter().map(|c| c.to_string()).collect();
            write!(f, " cuts=[{}]", inner.join(","))?;
        }
        Ok(())
    }
}

/// Reachable cut positions of `w` with the number of factorizations of each
/// prefix, and one predecessor per reached cut.
pub(crate) struct CutGraph {
    pub(crate) count: Vec<u64>,
    pub(crate) pred: Vec<Option<usize>>,
}

impl CutGraph {
    pub(crate) fn build(table: &mut BlockTable<'_>) -> CutGraph {
        let n = table.word().len();
        let mut count = vec![0u64; n + 1];
        let mut pred = vec![None; n + 1];
        count[0] = 1;
        for i in 0..n {
            if count[i] == 0 {
                continue;
            }
            for e in table.factor_ends(i) {
                count[e] = count[e].saturating_add(count[i]);
                pred[e].get_or_insert(i);
            }
        }
        CutGraph { count, pred }
    }

    pub(crate) fn reached(&self, i: usize) -> bool {
        self.count[i] > 0
    }

    /// Cuts along the predecessor chain ending at `end`.
    pub(crate) fn path_to(&self, end: usize) -> Vec<usize> {
        let mut cuts = vec![end];
        let mut at = end;
        while let Some(p) = self.pred[at] {
            cuts.push(p);
            at = p;
        }
        cuts.reverse();
        cuts
    }
}

/// Counts the decompositions of `w` into `h(V)` factors and returns the cuts
/// when there is exactly one. `λ` has the single empty decomposition.
pub fn factorize(w: &[Symbol]) -> Factorization {
    let mut table = BlockTable::new(w, None);
    let graph = CutGraph::build(&mut table);
    let count = graph.count[w.len()];
    let cuts = if count == 1 { graph.path_to(w.len()) } else { Vec::new() };
    Factorization { count, cuts }
}
