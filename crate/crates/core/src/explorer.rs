//! Analyses of explored crystal graphs: highest-weight elements,
//! decomposition, isomorphism of highest-weight crystals, characters.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::checks::check_strict_morphism;
use crate::crystal::ExtInt;
use crate::graph::{CrystalGraph, Link};
use crate::root_datum::Weight;

/// Nodes with `ε_k ≤ 0` for every `k`, `−∞` included.
///
/// On normal crystals this is exactly `ε_k = 0` for all `k`.
pub fn highest_weight_elements<E: Clone + Ord>(g: &CrystalGraph<E>) -> Vec<usize> {
    g.nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| n.eps.iter().all(|&e| e <= ExtInt::Finite(0)))
        .map(|(id, _)| id)
        .collect()
}

/// Connected components of the explored region (edges of every color,
/// ignoring direction). Each component is sorted; components are ordered by
/// their smallest node.
pub fn components<E: Clone + Ord>(g: &CrystalGraph<E>) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; g.len()];
    let mut out = Vec::new();
    for start in 0..g.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let c = out.len();
        let mut members = vec![start];
        label[start] = c;
        let mut queue = VecDeque::from([start]);
        while let Some(id) = queue.pop_front() {
            let node = &g.nodes[id];
            for next in node.e.iter().chain(node.f.iter()).filter_map(|l| l.node()) {
                if label[next] == usize::MAX {
                    label[next] = c;
                    members.push(next);
                    queue.push_back(next);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Highest weights of a (tensor) crystal with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    pub entries: BTreeMap<Weight, usize>,
    /// Highest weights whose component reaches the frontier. Not counted in
    /// `entries`.
    pub flagged: Vec<Weight>,
    pub depth: Option<usize>,
    /// Every node lies in a fully explored component with a highest-weight
    /// element.
    pub complete: bool,
    /// `(highest weight, component size)` for each counted component.
    pub components: Vec<(Weight, usize)>,
}

impl DecompositionTable {
    pub fn multiplicity(&self, wt: &Weight) -> usize {
        self.entries.get(wt).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.values().sum()
    }
}

/// Decomposes an explored normal crystal into highest-weight components.
///
/// A component is counted only if none of its nodes is on the frontier;
/// highest-weight elements of other components are listed in `flagged`.
pub fn decompose<E: Clone + Ord>(g: &CrystalGraph<E>) -> DecompositionTable {
    let hw: Vec<usize> = highest_weight_elements(g);
    let mut is_hw = vec![false; g.len()];
    for &id in &hw {
        is_hw[id] = true;
    }
    let mut entries = BTreeMap::new();
    let mut flagged = Vec::new();
    let mut counted = Vec::new();
    let mut covered = 0;
    for members in components(g) {
        let sealed = members.iter().all(|&id| !g.nodes[id].frontier);
        let heads: Vec<usize> = members.iter().copied().filter(|&id| is_hw[id]).collect();
        for &h in &heads {
            let wt = g.nodes[h].wt.clone();
            if sealed {
                *entries.entry(wt.clone()).or_insert(0) += 1;
                counted.push((wt, members.len()));
            } else {
                flagged.push(wt);
            }
        }
        if sealed && heads.len() == 1 {
            covered += members.len();
        }
    }
    DecompositionTable {
        complete: flagged.is_empty() && covered == g.len(),
        entries,
        flagged,
        depth: g.depth,
        components: counted,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    /// The graph does not have exactly one highest-weight element.
    HighestWeight { graph: usize, count: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::HighestWeight { graph, count } => {
                write!(f, "graph {} has {} highest-weight elements, expected 1", graph, count)
            }
        }
    }
}

/// Isomorphism of two highest-weight crystal graphs.
///
/// Walks both graphs in parallel from their unique highest-weight elements,
/// matching `wt`, `ε`, `φ`, frontier flags and every colored link. A crystal
/// morphism between highest-weight crystals is determined by the image of the
/// highest-weight element, so the first mismatch decides. On success the
/// witness `g1 id → g2 id` has also passed [`check_strict_morphism`].
///
/// Graphs truncated at the same depth from their highest-weight elements
/// compare correctly: frontier sets and `Outside` links must then match too.
pub fn is_isomorphic<E1: Clone + Ord, E2: Clone + Ord>(
    g1: &CrystalGraph<E1>,
    g2: &CrystalGraph<E2>,
) -> Result<Option<Vec<usize>>, IsoError> {
    let h1 = highest_weight_elements(g1);
    let h2 = highest_weight_elements(g2);
    if h1.len() != 1 {
        return Err(IsoError::HighestWeight {
            graph: 1,
            count: h1.len(),
        });
    }
    if h2.len() != 1 {
        return Err(IsoError::HighestWeight {
            graph: 2,
            count: h2.len(),
        });
    }
    if g1.len() != g2.len() || g1.root_datum() != g2.root_datum() {
        return Ok(None);
    }
    let mut forward = vec![usize::MAX; g1.len()];
    let mut backward = vec![usize::MAX; g2.len()];
    let mut queue = VecDeque::new();
    forward[h1[0]] = h2[0];
    backward[h2[0]] = h1[0];
    queue.push_back((h1[0], h2[0]));
    while let Some((a, b)) = queue.pop_front() {
        let (na, nb) = (&g1.nodes[a], &g2.nodes[b]);
        if na.wt != nb.wt || na.eps != nb.eps || na.phi != nb.phi || na.frontier != nb.frontier {
            return Ok(None);
        }
        for (la, lb) in na.e.iter().zip(&nb.e).chain(na.f.iter().zip(&nb.f)) {
            match (*la, *lb) {
                (Link::Zero, Link::Zero) | (Link::Outside, Link::Outside) => {}
                (Link::Node(x), Link::Node(y)) => {
                    if forward[x] == usize::MAX && backward[y] == usize::MAX {
                        forward[x] = y;
                        backward[y] = x;
                        queue.push_back((x, y));
                    } else if forward[x] != y || backward[y] != x {
                        return Ok(None);
                    }
                }
                _ => return Ok(None),
            }
        }
    }
    if forward.contains(&usize::MAX) {
        return Ok(None);
    }
    let report = check_strict_morphism(g1, g2, |id| Some(forward[id])).expect("witness is total");
    if !report.passed() {
        return Ok(None);
    }
    Ok(Some(forward))
}

/// Weight multiset `Σ_b e^{wt b}` of an explored region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub weights: BTreeMap<Weight, u64>,
    /// `false` if the region has frontier nodes.
    pub complete: bool,
}

impl Character {
    pub fn dimension(&self) -> u64 {
        self.weights.values().sum()
    }

    /// Character of a tensor product: weights add, multiplicities multiply.
    pub fn product(&self, other: &Character) -> Character {
        let mut weights = BTreeMap::new();
        for (a, ma) in &self.weights {
            for (b, mb) in &other.weights {
                *weights.entry(a + b).or_insert(0) += ma * mb;
            }
        }
        Character {
            weights,
            complete: self.complete && other.complete,
        }
    }
}

pub fn character<E: Clone + Ord>(g: &CrystalGraph<E>) -> Character {
    let mut weights = BTreeMap::new();
    for node in &g.nodes {
        *weights.entry(node.wt.clone()).or_insert(0) += 1;
    }
    Character {
        weights,
        complete: !g.has_frontier(),
    }
}
