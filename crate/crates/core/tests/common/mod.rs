#![allow(dead_code)]

use std::sync::Arc;

use crystal_core::{generate, CrystalElement, CrystalGraph, CrystalOps, ModelElement, RootDatum, WProfile};

pub fn ops(name: &str) -> CrystalOps {
    CrystalOps::new(RootDatum::preset(name).unwrap())
}

pub fn hw(lambda: &[i64]) -> CrystalElement {
    CrystalElement::Model(ModelElement::highest(Arc::new(WProfile::single(lambda.to_vec()))))
}

/// `B(λ)` from the profile model, exhaustively or to `depth`.
pub fn b_lambda(ops: &CrystalOps, lambda: &[i64], depth: Option<usize>) -> CrystalGraph<CrystalElement> {
    generate(ops, [hw(lambda)], depth, 1_000_000).unwrap()
}

/// All of `B_1 × ⋯ × B_n` as tensor elements, closed under the operators.
pub fn tensor_graph(ops: &CrystalOps, factors: &[&CrystalGraph<CrystalElement>]) -> CrystalGraph<CrystalElement> {
    let mut tuples: Vec<Vec<CrystalElement>> = vec![vec![]];
    for g in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                g.nodes.iter().map(move |n| {
                    let mut t = t.clone();
                    t.push(n.element.clone());
                    t
                })
            })
            .collect();
    }
    generate(ops, tuples.into_iter().map(CrystalElement::Tensor), None, 1_000_000).unwrap()
}

/// Dominant weights with entries in `0..=max`.
pub fn dominant_box(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}
