//! Backspace evaluation and an ω-power built on staged erasure.
//!
//! * [`word`]: alphabets, finite words, ultimately periodic ω-words.
//! * [`erase`]: single and staged eraser evaluation.
//! * [`staged`]: the languages `L_k`.
//! * [`coding`]: the coding `↞_j ↦ α β^j α` and the sets `R_p`.
//! * [`omega`]: `𝓛`, `h(V)`, factorization, viable prefixes, `θ` and `𝒟`.

pub mod coding;
pub mod erase;
mod error;
pub mod omega;
pub mod staged;
pub mod word;

pub use coding::{decode, decode_up, encode, member_rp, psi_up, DecodeResult, Dangling};
pub use erase::{
    erase_finite, erase_up, staged_erase_finite, staged_erase_up, EvalOutcome, LoopCertificate, UpEvaluation,
};
pub use error::Error;
pub use omega::*;
pub use staged::{enumerate_lk, member_l1_grammar, member_lk, min_k};
pub use word::{
    up_equal, up_normalize, up_prefix, BinaryWord, CodedWord, Letter, StagedSymbol, StagedWord, Symbol, UpWord, Word,
};
