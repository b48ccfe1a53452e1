//! The crystal contract and the element type shared by every crystal in the
//! crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

use crate::elementary::{self, BkElement};
use crate::quiver_model::{self, ModelElement};
use crate::root_datum::{RootDatum, Weight};
use crate::tensor;

/// `ℤ ⊔ {−∞}`, the codomain of `ε_k` and `φ_k`.
///
/// `−∞` absorbs addition and is the bottom element for `max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInfinity,
    Finite(i64),
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::NegInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn shift(self, by: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + by),
            ExtInt::NegInfinity => ExtInt::NegInfinity,
        }
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInfinity, ExtInt::NegInfinity) => Ordering::Equal,
            (ExtInt::NegInfinity, _) => Ordering::Less,
            (_, ExtInt::NegInfinity) => Ordering::Greater,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{}", v),
            ExtInt::NegInfinity => f.write_str("-inf"),
        }
    }
}

/// A set with `wt`, `ε_k`, `φ_k`, `ẽ_k`, `f̃_k`. The formal element `0` is
/// `None`.
pub trait Crystal {
    type Element: Clone + Ord;

    fn root_datum(&self) -> &RootDatum;
    fn wt(&self, b: &Self::Element) -> Weight;
    fn eps(&self, b: &Self::Element, k: usize) -> ExtInt;
    fn phi(&self, b: &Self::Element, k: usize) -> ExtInt;
    fn e(&self, b: &Self::Element, k: usize) -> Option<Self::Element>;
    fn f(&self, b: &Self::Element, k: usize) -> Option<Self::Element>;

    /// `wt_k(b) = ⟨h_k, wt(b)⟩`.
    fn wt_k(&self, b: &Self::Element, k: usize) -> i64 {
        self.root_datum().pairing(k, &self.wt(b))
    }

    fn rank(&self) -> usize {
        self.root_datum().rank()
    }
}

/// Elements of all crystals built in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrystalElement {
    /// `b_k(n) ∈ B_k`.
    Bk(BkElement),
    /// `t_λ ∈ T_λ`.
    T(Weight),
    /// `s_0 ∈ S_0`.
    S0,
    /// `b_1 ⊗ ⋯ ⊗ b_n`, left to right.
    Tensor(Vec<CrystalElement>),
    /// A dimension profile of the quiver model.
    Model(ModelElement),
}

impl CrystalElement {
    pub fn kind(&self) -> &'static str {
        match self {
            CrystalElement::Bk(_) => "Bk",
            CrystalElement::T(_) => "T",
            CrystalElement::S0 => "S0",
            CrystalElement::Tensor(_) => "Tensor",
            CrystalElement::Model(_) => "Model",
        }
    }

    pub fn tensor(factors: impl IntoIterator<Item = CrystalElement>) -> Self {
        CrystalElement::Tensor(factors.into_iter().collect())
    }

    /// Compact JSON with a fixed key order. Injective on elements, so it is
    /// used for hashing and for stable node ordering.
    ///
    /// Vertex indices are written 1-based.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        self.write_canonical(&mut out).expect("writing to a String cannot fail");
        out
    }

    fn write_canonical(&self, out: &mut String) -> fmt::Result {
        match self {
            CrystalElement::Bk(b) => write!(out, "{{\"Bk\":{{\"k\":{},\"n\":{}}}}}", b.k + 1, b.n),
            CrystalElement::T(lam) => {
                out.push_str("{\"T\":{\"lambda\":");
                write_int_list(out, &lam.lambda)?;
                out.push_str(",\"root\":");
                write_int_list(out, &lam.root)?;
                out.push_str("}}");
                Ok(())
            }
            CrystalElement::S0 => {
                out.push_str("{\"S0\":{}}");
                Ok(())
            }
            CrystalElement::Tensor(factors) => {
                out.push_str("{\"Tensor\":[");
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    factor.write_canonical(out)?;
                }
                out.push_str("]}");
                Ok(())
            }
            CrystalElement::Model(x) => {
                out.push_str("{\"Model\":");
                x.write_canonical(out)?;
                out.push('}');
                Ok(())
            }
        }
    }
}

pub(crate) fn write_int_list(out: &mut String, values: &[i64]) -> fmt::Result {
    out.push('[');
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{}", v)?;
    }
    out.push(']');
    Ok(())
}

/// The crystal structure on [`CrystalElement`] over a fixed root datum.
///
/// Tensor elements follow the n-fold tensor product rule; model elements
/// follow the profile model.
#[derive(Debug, Clone)]
pub struct CrystalOps {
    rd: RootDatum,
}

impl CrystalOps {
    pub fn new(rd: RootDatum) -> Self {
        CrystalOps { rd }
    }
}

impl Crystal for CrystalOps {
    type Element = CrystalElement;

    fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    fn wt(&self, b: &CrystalElement) -> Weight {
        match b {
            CrystalElement::Bk(x) => x.wt(self.rd.rank()),
            CrystalElement::T(lam) => lam.clone(),
            CrystalElement::S0 => Weight::zero(self.rd.rank()),
            CrystalElement::Tensor(factors) => tensor::tensor_wt(self, factors),
            CrystalElement::Model(x) => x.wt(),
        }
    }

    fn eps(&self, b: &CrystalElement, k: usize) -> ExtInt {
        match b {
            CrystalElement::Bk(x) => x.eps(k),
            CrystalElement::T(_) => ExtInt::NegInfinity,
            CrystalElement::S0 => ExtInt::Finite(0),
            CrystalElement::Tensor(factors) => tensor::tensor_eps(self, factors, k),
            CrystalElement::Model(x) => ExtInt::Finite(quiver_model::model_eps(&self.rd, x, k)),
        }
    }

    fn phi(&self, b: &CrystalElement, k: usize) -> ExtInt {
        match b {
            CrystalElement::Bk(x) => x.phi(k),
            CrystalElement::T(_) => ExtInt::NegInfinity,
            CrystalElement::S0 => ExtInt::Finite(0),
            CrystalElement::Tensor(factors) => tensor::tensor_phi(self, factors, k),
            CrystalElement::Model(x) => ExtInt::Finite(quiver_model::model_phi(&self.rd, x, k)),
        }
    }

    fn e(&self, b: &CrystalElement, k: usize) -> Option<CrystalElement> {
        match b {
            CrystalElement::Bk(x) => elementary::bk_e(x, k).map(CrystalElement::Bk),
            CrystalElement::T(_) | CrystalElement::S0 => None,
            CrystalElement::Tensor(factors) => tensor::tensor_e(self, factors, k).map(CrystalElement::Tensor),
            CrystalElement::Model(x) => quiver_model::model_e(&self.rd, x, k)
                .unwrap_or_else(|err| panic!("{}", err))
                .map(CrystalElement::Model),
        }
    }

    fn f(&self, b: &CrystalElement, k: usize) -> Option<CrystalElement> {
        match b {
            CrystalElement::Bk(x) => elementary::bk_f(x, k).map(CrystalElement::Bk),
            CrystalElement::T(_) | CrystalElement::S0 => None,
            CrystalElement::Tensor(factors) => tensor::tensor_f(self, factors, k).map(CrystalElement::Tensor),
            CrystalElement::Model(x) => quiver_model::model_f(&self.rd, x, k).map(CrystalElement::Model),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn neg_infinity_is_bottom() {
        assert!(ExtInt::NegInfinity < ExtInt::Finite(i64::MIN));
        assert_eq!(ExtInt::NegInfinity.max(ExtInt::Finite(-3)), ExtInt::Finite(-3));
        assert_eq!(ExtInt::NegInfinity.shift(5), ExtInt::NegInfinity);
        assert_eq!(ExtInt::Finite(2).shift(-5), ExtInt::Finite(-3));
    }

    #[test]
    fn canonical_forms() {
        let b = CrystalElement::Bk(BkElement { k: 0, n: -2 });
        assert_eq!(b.canonical(), r#"{"Bk":{"k":1,"n":-2}}"#);
        let t = CrystalElement::T(Weight::new(vec![1, 0], vec![0, 0]));
        assert_eq!(t.canonical(), r#"{"T":{"lambda":[1,0],"root":[0,0]}}"#);
        let x = CrystalElement::tensor([CrystalElement::S0, b, t]);
        assert_eq!(
            x.canonical(),
            r#"{"Tensor":[{"S0":{}},{"Bk":{"k":1,"n":-2}},{"T":{"lambda":[1,0],"root":[0,0]}}]}"#
        );
    }
}
