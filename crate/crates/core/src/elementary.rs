//! The elementary crystals `B_k`, `T_λ` and `S_0`.
//!
//! `T_λ` and `S_0` are both singletons killed by every `ẽ_k`, `f̃_k`. They
//! differ in `ε_k = φ_k`: `−∞` on `t_λ`, `0` on `s_0`. The two are kept as
//! separate variants of [`CrystalElement`](crate::CrystalElement) and are never
//! identified, even for `λ = 0`.

use alloc::vec;

use crate::crystal::ExtInt;
use crate::root_datum::Weight;

/// `b_k(n)`: weight `n·α_k`, `ε_k = −n`, `φ_k = n`, `−∞` in other colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BkElement {
    pub k: usize,
    pub n: i64,
}

impl BkElement {
    pub fn new(k: usize, n: i64) -> Self {
        BkElement { k, n }
    }

    pub fn wt(&self, rank: usize) -> Weight {
        let mut root = vec![0; rank];
        root[self.k] = -self.n;
        Weight {
            lambda: vec![0; rank],
            root,
        }
    }

    pub fn eps(&self, l: usize) -> ExtInt {
        if l == self.k {
            ExtInt::Finite(-self.n)
        } else {
            ExtInt::NegInfinity
        }
    }

    pub fn phi(&self, l: usize) -> ExtInt {
        if l == self.k {
            ExtInt::Finite(self.n)
        } else {
            ExtInt::NegInfinity
        }
    }
}

/// `ẽ_l b_k(n)`: `b_k(n + 1)` when `l = k`, otherwise `0`.
pub fn bk_e(x: &BkElement, l: usize) -> Option<BkElement> {
    (l == x.k).then(|| BkElement { k: x.k, n: x.n + 1 })
}

/// `f̃_l b_k(n)`: `b_k(n − 1)` when `l = k`, otherwise `0`.
pub fn bk_f(x: &BkElement, l: usize) -> Option<BkElement> {
    (l == x.k).then(|| BkElement { k: x.k, n: x.n - 1 })
}
