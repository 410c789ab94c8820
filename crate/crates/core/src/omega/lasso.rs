use std::fmt;

use super::blocks::{member_hv, BlockTable};
use super::factor::{factorize, CutGraph};
use super::viable::viable_prefix;
use crate::word::{Symbol, UpWord};

/// Bounded verdict on `u·v^ω ∈ (h(V))^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LassoVerdict {
    /// `factor_cuts` runs from 0 to `loop_start + loop_length`; the factors
    /// between `loop_start` and its end repeat forever.
    Yes {
        loop_start: usize,
        loop_length: usize,
        factor_cuts: Vec<usize>,
    },
    /// Some finite prefix is not a prefix of the ω-power.
    No,
    /// Nothing decided within `bound` copies of the period.
    Unknown { bound: usize },
}

impl fmt::Display for LassoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LassoVerdict::Yes {
                loop_start,
                loop_length,
                factor_cuts,
            } => {
                let cuts: Vec<String> = factor_cuts.iter().map(|c| c.to_string()).collect();
                write!(
                    f,
                    "yes loop_start={loop_start} loop_length={loop_length} cuts=[{}]",
                    cuts.join(",")
                )
            }
            LassoVerdict::No => f.write_str("no"),
            LassoVerdict::Unknown { bound } => write!(f, "unknown bound={bound}"),
        }
    }
}

/// Searches `u·v^bound` for two factorization cuts past `u` that are a whole
/// number of periods apart with a factorizable segment between them.
///
/// `Yes` is certified, `No` is sound, and `Unknown` is returned when neither
/// is found within the bound.
pub fn lasso_member(x: &UpWord<Symbol>, bound: usize) -> LassoVerdict {
    let (u, v) = (x.prefix().len(), x.period().len());
    let w = x.take(u + bound * v);
    let mut table = BlockTable::new(&w, None);
    let graph = CutGraph::build(&mut table);
    let cuts: Vec<usize> = (u..=w.len()).filter(|&i| graph.reached(i)).collect();
    for (a, &start) in cuts.iter().enumerate() {
        for &end in &cuts[a + 1..] {
            if (end - start) % v != 0 {
                continue;
            }
            let segment = factorize(&w[start..end]);
            if segment.count != 1 {
                continue;
            }
            let mut factor_cuts = graph.path_to(start);
            factor_cuts.extend(segment.cuts.iter().skip(1).map(|c| c + start));
            return LassoVerdict::Yes {
                loop_start: start,
                loop_length: end - start,
                factor_cuts,
            };
        }
    }
    if viable_prefix(&w) {
        LassoVerdict::Unknown { bound }
    } else {
        LassoVerdict::No
    }
}

/// Replays a `Yes` certificate against `x`.
pub fn check_lasso_certificate(x: &UpWord<Symbol>, verdict: &LassoVerdict) -> bool {
    let LassoVerdict::Yes {
        loop_start,
        loop_length,
        factor_cuts,
    } = verdict
    else {
        return false;
    };
    let (u, v) = (x.prefix().len(), x.period().len());
    let end = loop_start + loop_length;
    if *loop_length == 0 || loop_length % v != 0 || *loop_start < u {
        return false;
    }
    if factor_cuts.first() != Some(&0) || factor_cuts.last() != Some(&end) || !factor_cuts.contains(loop_start) {
        return false;
    }
    let w = x.take(end);
    factor_cuts
        .windows(2)
        .all(|c| c[0] < c[1] && member_hv(&w[c[0]..c[1]]))
}
