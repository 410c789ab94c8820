//! `R = (0^*·1)^ω` and its staged and coded counterparts.

use crate::coding::{decode_up, member_rp};
use crate::erase::{staged_erase_up, EvalOutcome};
use crate::error::Error;
use crate::word::{Letter, StagedSymbol, Symbol, UpWord};

/// Infinitely many 1s.
pub fn member_r(x: &UpWord<Letter>) -> bool {
    x.normalize().period().contains(&Letter::One)
}

/// `x ∈ R^{≈.p}`: staged erasure with `↞_1 … ↞_p` yields an ω-word in `R`.
pub fn member_r_approx_p(x: &UpWord<StagedSymbol>, p: u32) -> Result<bool, Error> {
    Ok(match staged_erase_up(x, p)? {
        EvalOutcome::Infinite(r) => {
            let letters = UpWord::new(
                r.prefix().letters().ok_or(Error::NotBinary)?,
                r.period().letters().ok_or(Error::NotBinary)?,
            )?;
            member_r(&letters)
        }
        EvalOutcome::Finite(_) | EvalOutcome::Undefined => false,
    })
}

/// `x ∈ ψ_p(R^{≈.p})` for a coded ultimately periodic word.
pub fn member_encoded_r_approx_p(x: &UpWord<Symbol>, p: u32) -> bool {
    if !member_rp(x, p) {
        return false;
    }
    match decode_up(x, Some(p)) {
        Ok(staged) => member_r_approx_p(&staged, p).unwrap_or(false),
        Err(_) => false,
    }
}
