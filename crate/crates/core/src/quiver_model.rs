//! Combinatorial model of `B(w)` by dimension profiles.
//!
//! An element is a finitely supported profile `v_k^p ≥ 0` (`k` a vertex,
//! `p ∈ ℤ` a slot) over a fixed framing profile `w_k^p`. Its crystal data
//! comes from the Euler rank of the three-term complex at `(k, p)`
//!
//! ```text
//! rank(k, p) = w_k^{p−1} − v_k^p − v_k^{p−1} + Σ_{l<k} m_kl v_l^{p−1} + Σ_{l>k} m_kl v_l^p
//! ```
//!
//! where `m_kl` counts edges. With `ε̄_k^p = −Σ_{q>p} rank(k, q)` and
//! `φ̄_k^p = Σ_{q≤p} rank(k, q)`:
//!
//! * `ε_k = max_p ε̄_k^p` and `φ_k = max_p φ̄_k^p`, both `≥ 0`;
//! * `ẽ_k` is `0` if `ε_k = 0`, otherwise it lowers `v_k^p` by one at the
//!   largest slot `p` attaining `ε_k`;
//! * `f̃_k` is `0` if `φ_k = 0`, otherwise it raises `v_k^p` by one at the
//!   smallest slot `p` attaining `φ_k`.
//!
//! Slots decrease from left to right in the ambient tensor product
//! ([`embed_psi`]), so the leftmost/rightmost choice of the tensor rule becomes
//! largest/smallest slot here. The agreement with [`embed_psi`] is what the
//! test suites check.
//!
//! The partial sums are constant outside `[L, R]`, where `L`, `R` bound the
//! support of `v` and of `w` shifted by one. All maxima are therefore taken on
//! the window `[L − 1, R + 1]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::crystal::{write_int_list, CrystalElement};
use crate::elementary::BkElement;
use crate::root_datum::{RootDatum, Weight};

/// Framing dimensions `w_k^p`, finitely supported in `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WProfile {
    n: usize,
    slots: BTreeMap<i64, Vec<i64>>,
}

impl WProfile {
    /// Zero vectors are dropped. Panics on negative entries or wrong lengths.
    pub fn new(n: usize, slots: impl IntoIterator<Item = (i64, Vec<i64>)>) -> Self {
        let mut map = BTreeMap::new();
        for (p, w) in slots {
            assert_eq!(w.len(), n, "framing vector at slot {} has wrong length", p);
            assert!(w.iter().all(|&x| x >= 0), "framing dimensions must be nonnegative");
            if w.iter().any(|&x| x != 0) {
                let entry = map.entry(p).or_insert_with(|| vec![0; n]);
                for (a, b) in entry.iter_mut().zip(&w) {
                    *a += b;
                }
            }
        }
        WProfile { n, slots: map }
    }

    /// All of `w` at slot 0.
    pub fn single(w: Vec<i64>) -> Self {
        let n = w.len();
        Self::new(n, [(0, w)])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> &BTreeMap<i64, Vec<i64>> {
        &self.slots
    }

    pub fn get(&self, k: usize, p: i64) -> i64 {
        self.slots.get(&p).map_or(0, |w| w[k])
    }

    /// `Σ_p w^p` as a weight with zero root part.
    pub fn total(&self) -> Weight {
        let mut lambda = vec![0; self.n];
        for w in self.slots.values() {
            for (a, b) in lambda.iter_mut().zip(w) {
                *a += b;
            }
        }
        Weight::from_lambda(lambda)
    }

    pub(crate) fn write_canonical(&self, out: &mut String) -> fmt::Result {
        out.push('{');
        for (i, (p, w)) in self.slots.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "\"{}\":", p)?;
            write_int_list(out, w)?;
        }
        out.push('}');
        Ok(())
    }
}

/// A dimension profile `v_k^p` over a framing profile.
///
/// Only nonzero entries are stored; absent entries read as `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModelElement {
    wp: Arc<WProfile>,
    v: BTreeMap<(usize, i64), i64>,
}

/// Lowering a dimension below zero. Unreachable from `v ≡ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeDimension {
    pub k: usize,
    pub p: i64,
}

impl fmt::Display for NegativeDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e_{} would make v_{}^{} negative", self.k + 1, self.k + 1, self.p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WindowError {
    /// Slot `p` carries data (or is a required margin slot) but lies outside
    /// the window.
    Uncovered {
        slot: i64,
    },
    Empty {
        lo: i64,
        hi: i64,
    },
}

impl fmt::Display for WindowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WindowError::Uncovered { slot } => write!(f, "window does not cover slot {}", slot),
            WindowError::Empty { lo, hi } => write!(f, "empty window [{}, {}]", lo, hi),
        }
    }
}

impl ModelElement {
    /// The profile `v ≡ 0`.
    pub fn highest(wp: Arc<WProfile>) -> Self {
        ModelElement { wp, v: BTreeMap::new() }
    }

    /// Panics on negative entries or vertex indices out of range.
    pub fn from_entries(wp: Arc<WProfile>, entries: impl IntoIterator<Item = ((usize, i64), i64)>) -> Self {
        let mut x = Self::highest(wp);
        for ((k, p), value) in entries {
            assert!(k < x.wp.rank(), "vertex index out of range");
            assert!(value >= 0, "dimensions must be nonnegative");
            x.set(k, p, x.get(k, p) + value);
        }
        x
    }

    pub fn w_profile(&self) -> &Arc<WProfile> {
        &self.wp
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i64), i64> {
        &self.v
    }

    pub fn get(&self, k: usize, p: i64) -> i64 {
        self.v.get(&(k, p)).copied().unwrap_or(0)
    }

    fn set(&mut self, k: usize, p: i64, value: i64) {
        if value == 0 {
            self.v.remove(&(k, p));
        } else {
            self.v.insert((k, p), value);
        }
    }

    pub fn rank(&self) -> usize {
        self.wp.rank()
    }

    /// `(Σ_p w^p, Σ_p v^p)`.
    pub fn wt(&self) -> Weight {
        let mut wt = self.wp.total();
        for (&(k, _), &value) in &self.v {
            wt.root[k] += value;
        }
        wt
    }

    /// Smallest and largest slot carrying data in `v` or `w`.
    pub fn support(&self) -> Option<(i64, i64)> {
        let slots = self.v.keys().map(|&(_, p)| p).chain(self.wp.slots.keys().copied());
        slots.fold(None, |acc, p| match acc {
            None => Some((p, p)),
            Some((lo, hi)) => Some((lo.min(p), hi.max(p))),
        })
    }

    /// `[L − 1, R + 1]`, where `L`, `R` bound the support of `v` and of `w`
    /// shifted by `+1`. `None` for the empty profile over `w = 0`.
    pub fn window(&self) -> Option<(i64, i64)> {
        let slots = self
            .v
            .keys()
            .map(|&(_, p)| p)
            .chain(self.wp.slots.keys().map(|&p| p + 1));
        let (lo, hi) = slots.fold(None, |acc: Option<(i64, i64)>, p| match acc {
            None => Some((p, p)),
            Some((lo, hi)) => Some((lo.min(p), hi.max(p))),
        })?;
        Some((lo - 1, hi + 1))
    }

    pub(crate) fn write_canonical(&self, out: &mut String) -> fmt::Result {
        out.push_str("{\"w\":");
        self.wp.write_canonical(out)?;
        out.push_str(",\"v\":{");
        for (i, ((k, p), value)) in self.v.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "\"{},{}\":{}", k + 1, p, value)?;
        }
        out.push_str("}}");
        Ok(())
    }

    /// The canonical serialization `{"w":{…},"v":{"k,p":…}}`.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        self.write_canonical(&mut out).expect("writing to a String cannot fail");
        out
    }
}

/// Euler rank of the complex at vertex `k`, slot `p`.
pub fn rank_complex(rd: &RootDatum, x: &ModelElement, k: usize, p: i64) -> i64 {
    let mut rank = x.wp.get(k, p - 1) - x.get(k, p) - x.get(k, p - 1);
    for l in 0..rd.rank() {
        let m = rd.edge_mult(k, l);
        if m == 0 {
            continue;
        }
        if l < k {
            rank += m * x.get(l, p - 1);
        } else if l > k {
            rank += m * x.get(l, p);
        }
    }
    rank
}

/// Per-slot partial sums over the window.
struct SlotSums {
    lo: i64,
    eps_bar: Vec<i64>,
    phi_bar: Vec<i64>,
}

impl SlotSums {
    fn compute(rd: &RootDatum, x: &ModelElement, k: usize) -> Option<Self> {
        let (lo, hi) = x.window()?;
        // rank vanishes outside [lo + 1, hi]
        let ranks: Vec<i64> = (lo..=hi)
            .map(|p| if p == lo { 0 } else { rank_complex(rd, x, k, p) })
            .collect();
        let total: i64 = ranks.iter().sum();
        debug_assert_eq!(total, rd.pairing(k, &x.wt()), "rank telescoping failed");
        let mut phi_bar = Vec::with_capacity(ranks.len());
        let mut acc = 0;
        for r in &ranks {
            acc += r;
            phi_bar.push(acc);
        }
        let eps_bar = phi_bar.iter().map(|s| s - total).collect();
        Some(SlotSums { lo, eps_bar, phi_bar })
    }

    fn slot(&self, index: usize) -> i64 {
        self.lo + index as i64
    }
}

/// `ε̄_k^p = −Σ_{q>p} rank(k, q)`.
pub fn eps_bar(rd: &RootDatum, x: &ModelElement, k: usize, p: i64) -> i64 {
    match x.window() {
        None => 0,
        Some((_, hi)) => -(p + 1..=hi).map(|q| rank_complex(rd, x, k, q)).sum::<i64>(),
    }
}

/// `φ̄_k^p = Σ_{q≤p} rank(k, q)`.
pub fn phi_bar(rd: &RootDatum, x: &ModelElement, k: usize, p: i64) -> i64 {
    match x.window() {
        None => 0,
        Some((lo, _)) => (lo..=p).map(|q| rank_complex(rd, x, k, q)).sum(),
    }
}

pub fn model_eps(rd: &RootDatum, x: &ModelElement, k: usize) -> i64 {
    SlotSums::compute(rd, x, k).map_or(0, |s| s.eps_bar.iter().copied().max().unwrap_or(0).max(0))
}

pub fn model_phi(rd: &RootDatum, x: &ModelElement, k: usize) -> i64 {
    SlotSums::compute(rd, x, k).map_or(0, |s| s.phi_bar.iter().copied().max().unwrap_or(0).max(0))
}

/// Slot `ẽ_k` acts on, or `None` when `ε_k = 0`.
pub fn e_slot(rd: &RootDatum, x: &ModelElement, k: usize) -> Option<i64> {
    let sums = SlotSums::compute(rd, x, k)?;
    let max = sums.eps_bar.iter().copied().max()?;
    if max <= 0 {
        return None;
    }
    sums.eps_bar.iter().rposition(|&v| v == max).map(|i| sums.slot(i))
}

/// Slot `f̃_k` acts on, or `None` when `φ_k = 0`.
pub fn f_slot(rd: &RootDatum, x: &ModelElement, k: usize) -> Option<i64> {
    let sums = SlotSums::compute(rd, x, k)?;
    let max = sums.phi_bar.iter().copied().max()?;
    if max <= 0 {
        return None;
    }
    sums.phi_bar.iter().position(|&v| v == max).map(|i| sums.slot(i))
}

pub fn model_e(rd: &RootDatum, x: &ModelElement, k: usize) -> Result<Option<ModelElement>, NegativeDimension> {
    let Some(p) = e_slot(rd, x, k) else {
        return Ok(None);
    };
    let current = x.get(k, p);
    if current == 0 {
        return Err(NegativeDimension { k, p });
    }
    let mut out = x.clone();
    out.set(k, p, current - 1);
    Ok(Some(out))
}

pub fn model_f(rd: &RootDatum, x: &ModelElement, k: usize) -> Option<ModelElement> {
    let p = f_slot(rd, x, k)?;
    let mut out = x.clone();
    out.set(k, p, x.get(k, p) + 1);
    Some(out)
}

/// Smallest window accepted by [`embed_psi`] for `x`: its data support with
/// one margin slot on each side. Falls back to `[-1, 1]` for empty data.
pub fn psi_window(x: &ModelElement) -> (i64, i64) {
    x.support().map_or((-1, 1), |(lo, hi)| (lo - 1, hi + 1))
}

/// The strict embedding into the capped tensor product
///
/// ```text
/// s_0 ⊗ ⨂_{p = hi … lo} ( t_{w^p} ⊗ b_1(−v_1^p) ⊗ ⋯ ⊗ b_n(−v_n^p) ) ⊗ s_0
/// ```
///
/// as one flat tensor, slots in decreasing order.
pub fn embed_psi(x: &ModelElement, window: (i64, i64)) -> Result<CrystalElement, WindowError> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(WindowError::Empty { lo, hi });
    }
    if let Some((s_lo, s_hi)) = x.support() {
        if s_hi + 1 > hi {
            return Err(WindowError::Uncovered { slot: s_hi + 1 });
        }
        if s_lo - 1 < lo {
            return Err(WindowError::Uncovered { slot: s_lo - 1 });
        }
    }
    let n = x.rank();
    let mut factors = Vec::with_capacity(2 + (hi - lo + 1) as usize * (n + 1));
    factors.push(CrystalElement::S0);
    for p in (lo..=hi).rev() {
        let w = x.wp.slots.get(&p).cloned().unwrap_or_else(|| vec![0; n]);
        factors.push(CrystalElement::T(Weight::from_lambda(w)));
        for k in 0..n {
            factors.push(CrystalElement::Bk(BkElement::new(k, -x.get(k, p))));
        }
    }
    factors.push(CrystalElement::S0);
    Ok(CrystalElement::Tensor(factors))
}
