//! The `graph` and `tensor` commands as library functions.

use std::sync::Arc;

use crystal_core::{
    decompose, generate, CrystalElement, CrystalGraph, CrystalOps, DecompositionTable, GenerateError, ModelElement,
    RootDatum, WProfile,
};

use crate::error::CliError;
use crate::input::dominant_weight;

/// [`generate`] with budget overruns mapped to [`CliError::Budget`].
pub fn explore(
    ops: &CrystalOps,
    generators: impl IntoIterator<Item = CrystalElement>,
    depth: Option<usize>,
    budget: usize,
) -> Result<CrystalGraph<CrystalElement>, CliError> {
    generate(ops, generators, depth, budget).map_err(|GenerateError::Budget { budget, partial }| CliError::Budget {
        budget,
        explored: partial.len(),
    })
}

/// Highest-weight element of `B(λ)` in the profile model, all of `λ` at
/// slot 0.
pub fn highest(lambda: &[i64]) -> CrystalElement {
    CrystalElement::Model(ModelElement::highest(Arc::new(WProfile::single(lambda.to_vec()))))
}

/// `B(λ)` explored from its highest-weight element, renumbered canonically.
pub fn cmd_graph(
    rd: &RootDatum,
    lambda: &[i64],
    depth: Option<usize>,
    budget: usize,
) -> Result<CrystalGraph<CrystalElement>, CliError> {
    dominant_weight(rd, lambda)?;
    let ops = CrystalOps::new(rd.clone());
    Ok(explore(&ops, [highest(lambda)], depth, budget)?.sorted_by_canonical())
}

/// The explored part of `B(λ_1) ⊗ ⋯ ⊗ B(λ_n)`.
///
/// Every tuple of explored factor elements is a generator. If some factor was
/// truncated, the tensor exploration goes one step further so that components
/// leaving the product of the explored regions end up touching the frontier.
pub fn tensor_region(
    rd: &RootDatum,
    lambdas: &[Vec<i64>],
    depth: Option<usize>,
    budget: usize,
) -> Result<CrystalGraph<CrystalElement>, CliError> {
    if lambdas.is_empty() {
        return Err(CliError::usage("tensor needs at least one weight"));
    }
    let ops = CrystalOps::new(rd.clone());
    let mut factors = Vec::new();
    for lambda in lambdas {
        dominant_weight(rd, lambda)?;
        factors.push(explore(&ops, [highest(lambda)], depth, budget)?);
    }
    let size = factors.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.len()));
    match size {
        Some(s) if s <= budget => {}
        _ => {
            return Err(CliError::Budget {
                budget,
                explored: factors.iter().map(|g| g.len()).sum(),
            })
        }
    }
    let mut tuples: Vec<Vec<CrystalElement>> = vec![vec![]];
    for g in &factors {
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
    let truncated = factors.iter().any(|g| g.has_frontier());
    let tensor_depth = if truncated { Some(1) } else { None };
    let mut g = explore(
        &ops,
        tuples.into_iter().map(CrystalElement::Tensor),
        tensor_depth,
        budget,
    )?;
    g.depth = depth;
    Ok(g)
}

/// Decomposition of `B(λ_1) ⊗ ⋯ ⊗ B(λ_n)` into highest-weight components.
pub fn cmd_tensor(
    rd: &RootDatum,
    lambdas: &[Vec<i64>],
    depth: Option<usize>,
    budget: usize,
) -> Result<DecompositionTable, CliError> {
    Ok(decompose(&tensor_region(rd, lambdas, depth, budget)?))
}
