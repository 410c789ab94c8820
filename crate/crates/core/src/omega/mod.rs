//! The coded ω-power `(h(V))^ω` with `h(a) = 𝓛·a` and `V = 0^*·1`.
//!
//! Coded words are words over `{0, 1, α, β}`. A *block* is a member of
//! `𝓛 = ⋃_n φ_n(L_n)`, and a factor of `h(V)` is a run of blocks separated by
//! `0`s and closed by a `1`.

mod blocks;
mod factor;
mod identity;
mod lasso;
mod rsets;
mod theta;
mod viable;

pub use blocks::{member_hv, member_lscript};
pub use factor::{factorize, Factorization};
pub use identity::{staged_viable_prefix, verify_rp_identity, RpIdentity};
pub use lasso::{check_lasso_certificate, lasso_member, LassoVerdict};
pub use rsets::{member_encoded_r_approx_p, member_r, member_r_approx_p};
pub use theta::{d_check, enumerate_hv, sigma_blocks, theta, Theta};
pub use viable::{viable_prefix, viable_prefix_within};
