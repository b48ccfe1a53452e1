//! The tensor product rule for `n` factors.
//!
//! For `b_1 ⊗ ⋯ ⊗ b_n` and a color `k`,
//!
//! ```text
//! ε_k^p = ε_k(b_p) − Σ_{q<p} wt_k(b_q)      φ_k^p = φ_k(b_p) + Σ_{q>p} wt_k(b_q)
//! ε_k   = max_p ε_k^p                       φ_k   = max_p φ_k^p
//! ```
//!
//! `ẽ_k` acts on the leftmost factor attaining `ε_k`, `f̃_k` on the rightmost
//! factor attaining `φ_k`. For two factors this is the usual rule where `f̃_k`
//! acts on the left factor iff `φ_k(b_1) > ε_k(b_2)`. No other convention is
//! offered.
//!
//! Positions are 0-based here; the serialized order is left to right.

use alloc::vec::Vec;

use crate::crystal::{Crystal, ExtInt};
use crate::root_datum::Weight;

pub fn tensor_wt<C: Crystal>(c: &C, factors: &[C::Element]) -> Weight {
    let mut total = Weight::zero(c.rank());
    for b in factors {
        total = &total + &c.wt(b);
    }
    total
}

/// `(ε_k^1, …, ε_k^n)`.
pub fn eps_profile<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Vec<ExtInt> {
    let mut left = 0;
    factors
        .iter()
        .map(|b| {
            let value = c.eps(b, k).shift(-left);
            left += c.wt_k(b, k);
            value
        })
        .collect()
}

/// `(φ_k^1, …, φ_k^n)`.
pub fn phi_profile<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Vec<ExtInt> {
    let mut right = 0;
    let mut out: Vec<ExtInt> = factors
        .iter()
        .rev()
        .map(|b| {
            let value = c.phi(b, k).shift(right);
            right += c.wt_k(b, k);
            value
        })
        .collect();
    out.reverse();
    out
}

pub fn tensor_eps<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> ExtInt {
    eps_profile(c, factors, k)
        .into_iter()
        .max()
        .unwrap_or(ExtInt::NegInfinity)
}

pub fn tensor_phi<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> ExtInt {
    phi_profile(c, factors, k)
        .into_iter()
        .max()
        .unwrap_or(ExtInt::NegInfinity)
}

/// Position `ẽ_k` acts on, or `None` if `ε_k = −∞`.
pub fn e_position<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Option<usize> {
    let profile = eps_profile(c, factors, k);
    let max = profile.iter().copied().max()?;
    if !max.is_finite() {
        return None;
    }
    profile.iter().position(|&v| v == max)
}

/// Position `f̃_k` acts on, or `None` if `φ_k = −∞`.
pub fn f_position<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Option<usize> {
    let profile = phi_profile(c, factors, k);
    let max = profile.iter().copied().max()?;
    if !max.is_finite() {
        return None;
    }
    profile.iter().rposition(|&v| v == max)
}

pub fn tensor_e<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Option<Vec<C::Element>> {
    let p = e_position(c, factors, k)?;
    let image = c.e(&factors[p], k)?;
    let mut out = factors.to_vec();
    out[p] = image;
    Some(out)
}

pub fn tensor_f<C: Crystal>(c: &C, factors: &[C::Element], k: usize) -> Option<Vec<C::Element>> {
    let p = f_position(c, factors, k)?;
    let image = c.f(&factors[p], k)?;
    let mut out = factors.to_vec();
    out[p] = image;
    Some(out)
}
