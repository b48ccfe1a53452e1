//! Finite-type oracles independent of any crystal: positive roots, the Weyl
//! dimension formula and Freudenthal's multiplicity recursion.
//!
//! Everything is exact integer arithmetic in simple-root coordinates. For a
//! simply laced datum `(α, α) = 2` for every root, and `(λ, α_i)` is the
//! pairing `⟨h_i, λ⟩`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::leading_principal_minors;
use crate::root_datum::{RootDatum, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    NotFiniteType,
    NotDominant,
    WeightLength,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotFiniteType => f.write_str("root datum is not of finite type"),
            OracleError::NotDominant => f.write_str("weight is not dominant"),
            OracleError::WeightLength => f.write_str("weight length does not match the root datum"),
        }
    }
}

/// Finite type iff the Cartan matrix is positive definite, i.e. every leading
/// principal minor is positive.
pub fn finite_type_check(rd: &RootDatum) -> bool {
    leading_principal_minors(rd.cartan()).iter().all(|&m| m > 0)
}

/// Positive roots in simple-root coordinates, closing the simple roots under
/// the simple reflections `s_j(α) = α − ⟨h_j, α⟩ α_j`. Sorted by height, then
/// lexicographically.
pub fn positive_roots(rd: &RootDatum) -> Result<Vec<Vec<i64>>, OracleError> {
    if !finite_type_check(rd) {
        return Err(OracleError::NotFiniteType);
    }
    let n = rd.rank();
    let mut roots = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut a = vec![0; n];
        a[i] = 1;
        roots.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(a) = queue.pop_front() {
        for j in 0..n {
            let pairing: i64 = (0..n).map(|l| rd.cartan_entry(j, l) * a[l]).sum();
            let mut b = a.clone();
            b[j] -= pairing;
            if b.iter().all(|&x| x >= 0) && b.iter().any(|&x| x > 0) && roots.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = roots.into_iter().collect();
    out.sort_by_key(|a| (a.iter().sum::<i64>(), a.clone()));
    Ok(out)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn dominant_pairings(rd: &RootDatum, lambda: &Weight) -> Result<Vec<i64>, OracleError> {
    rd.check_weight(lambda).map_err(|_| OracleError::WeightLength)?;
    let p = rd.pairings(lambda);
    if p.iter().any(|&x| x < 0) {
        return Err(OracleError::NotDominant);
    }
    Ok(p)
}

/// `dim V(λ) = Π_{α>0} (λ + ρ, α) / (ρ, α)`.
pub fn weyl_dim(rd: &RootDatum, lambda: &Weight) -> Result<u128, OracleError> {
    let p = dominant_pairings(rd, lambda)?;
    let roots = positive_roots(rd)?;
    let (mut num, mut den) = (1u128, 1u128);
    for a in &roots {
        let top: i64 = a.iter().zip(&p).map(|(ai, pi)| ai * (pi + 1)).sum();
        let height: i64 = a.iter().sum();
        num *= top as u128;
        den *= height as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Ok(num / den)
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion
///
/// ```text
/// ((λ+ρ, λ+ρ) − (μ+ρ, μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{j≥1} m(μ + jα) (μ + jα, α)
/// ```
///
/// run level by level in the height of `λ − μ`. Weights are returned in the
/// same coordinates as `λ` (root part shifted by `λ − μ`).
pub fn freudenthal_multiplicities(rd: &RootDatum, lambda: &Weight) -> Result<BTreeMap<Weight, u64>, OracleError> {
    let p = dominant_pairings(rd, lambda)?;
    let roots = positive_roots(rd)?;
    let n = rd.rank();
    let lambda_on: Vec<i64> = roots
        .iter()
        .map(|a| a.iter().zip(&p).map(|(x, y)| x * y).sum())
        .collect();

    // keys: β = λ − μ in simple-root coordinates
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    mult.insert(vec![0; n], 1);
    let mut level = vec![vec![0; n]];
    while !level.is_empty() {
        let mut candidates = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut next = beta.clone();
                next[i] += 1;
                candidates.insert(next);
            }
        }
        let mut next_level = Vec::new();
        for beta in candidates {
            let gap: i64 =
                2 * beta.iter().zip(&p).map(|(b, pi)| b * (pi + 1)).sum::<i64>() - rd.root_form(&beta, &beta);
            if gap <= 0 {
                continue;
            }
            let mut total: i128 = 0;
            for (a, lam_a) in roots.iter().zip(&lambda_on) {
                let beta_a = rd.root_form(&beta, a);
                let mut j = 1;
                loop {
                    let shifted: Vec<i64> = beta.iter().zip(a).map(|(b, x)| b - j * x).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&shifted) {
                        total += m as i128 * (lam_a - beta_a + 2 * j) as i128;
                    }
                    j += 1;
                }
            }
            let numerator = 2 * total;
            assert_eq!(numerator % gap as i128, 0, "Freudenthal recursion produced a fraction");
            let m = numerator / gap as i128;
            if m > 0 {
                mult.insert(beta.clone(), m as u64);
                next_level.push(beta);
            }
        }
        level = next_level;
    }
    Ok(mult
        .into_iter()
        .map(|(beta, m)| {
            let root = lambda.root.iter().zip(&beta).map(|(r, b)| r + b).collect();
            (Weight::new(lambda.lambda.clone(), root), m)
        })
        .collect())
}
