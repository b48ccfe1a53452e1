//! Explicit crystal graphs obtained by breadth-first exploration.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::crystal::{Crystal, CrystalElement, ExtInt};
use crate::root_datum::{RootDatum, Weight};

/// Target of `ẽ_k` or `f̃_k` as seen from a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Link {
    /// The operator gives `0`.
    Zero,
    Node(usize),
    /// The image exists but was not explored. Only occurs on frontier nodes.
    Outside,
}

impl Link {
    pub fn node(self) -> Option<usize> {
        match self {
            Link::Node(id) => Some(id),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node<E> {
    pub element: E,
    pub wt: Weight,
    pub eps: Vec<ExtInt>,
    pub phi: Vec<ExtInt>,
    /// Operator images of a frontier node were not added to the graph.
    pub frontier: bool,
    pub e: Vec<Link>,
    pub f: Vec<Link>,
}

/// A materialized region of a crystal.
///
/// Node ids are positions in `nodes`. An `f̃_k`-edge `(x, k, y)` is stored
/// as `nodes[x].f[k] == Link::Node(y)` and the reverse `ẽ_k` link on `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    rd: RootDatum,
    pub nodes: Vec<Node<E>>,
    index: BTreeMap<E, usize>,
    pub generators: Vec<usize>,
    /// Depth bound used during generation; `None` for an exhaustive run.
    pub depth: Option<usize>,
}

impl<E: Clone + Ord> CrystalGraph<E> {
    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn id_of(&self, element: &E) -> Option<usize> {
        self.index.get(element).copied()
    }

    pub fn node(&self, id: usize) -> &Node<E> {
        &self.nodes[id]
    }

    pub fn has_frontier(&self) -> bool {
        self.nodes.iter().any(|n| n.frontier)
    }

    pub fn frontier_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.frontier).count()
    }

    /// `f̃`-edges `(source, k, target)`, sorted by source then color.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            for (k, link) in node.f.iter().enumerate() {
                if let Link::Node(target) = link {
                    out.push((id, k, *target));
                }
            }
        }
        out
    }

    /// `(⟨h_1, wt⟩, …, ⟨h_n, wt⟩)` of a node.
    pub fn pairings(&self, id: usize) -> Vec<i64> {
        self.rd.pairings(&self.nodes[id].wt)
    }

    /// Assembles a graph from explicit parts. Links are taken as given, which
    /// makes it possible to build malformed graphs for checker tests.
    pub fn from_parts(rd: RootDatum, nodes: Vec<Node<E>>, generators: Vec<usize>, depth: Option<usize>) -> Self {
        let index = nodes.iter().enumerate().map(|(i, n)| (n.element.clone(), i)).collect();
        CrystalGraph {
            rd,
            nodes,
            index,
            generators,
            depth,
        }
    }
}

/// Node budget exhausted during [`generate`]. Carries the partial graph.
#[derive(Debug, Clone)]
pub enum GenerateError<E> {
    Budget {
        budget: usize,
        partial: Box<CrystalGraph<E>>,
    },
}

impl<E> fmt::Display for GenerateError<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerateError::Budget { budget, partial } => {
                write!(
                    f,
                    "node budget of {} exceeded ({} nodes explored)",
                    budget,
                    partial.nodes.len()
                )
            }
        }
    }
}

/// `ẽ_k` and `f̃_k` images of an expanded node, by `k`.
type Images<E> = (Vec<Option<E>>, Vec<Option<E>>);

/// Breadth-first closure of `generators` under every `ẽ_k` and `f̃_k`.
///
/// Nodes at distance `depth` from the generators are not expanded and are
/// flagged as frontier. `depth = None` explores until closure. Exceeding
/// `budget` nodes aborts with the partial graph, in which every unexpanded
/// node is frontier.
///
/// Node ids are assigned by sorting on the elements' order, so the result
/// does not depend on the order of `generators`.
pub fn generate<C: Crystal>(
    c: &C,
    generators: impl IntoIterator<Item = C::Element>,
    depth: Option<usize>,
    budget: usize,
) -> Result<CrystalGraph<C::Element>, GenerateError<C::Element>> {
    let n = c.rank();
    let mut dist: BTreeMap<C::Element, usize> = BTreeMap::new();
    let mut expanded: BTreeMap<C::Element, Images<C::Element>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut gens = Vec::new();
    for g in generators {
        if !dist.contains_key(&g) {
            dist.insert(g.clone(), 0);
            gens.push(g.clone());
            queue.push_back(g);
        }
    }
    let mut over_budget = dist.len() > budget;
    while let Some(b) = queue.pop_front() {
        if over_budget {
            break;
        }
        let d = dist[&b];
        if depth.is_some_and(|max| d >= max) {
            continue;
        }
        let es: Vec<_> = (0..n).map(|k| c.e(&b, k)).collect();
        let fs: Vec<_> = (0..n).map(|k| c.f(&b, k)).collect();
        for image in es.iter().chain(fs.iter()).flatten() {
            if !dist.contains_key(image) {
                dist.insert(image.clone(), d + 1);
                queue.push_back(image.clone());
                if dist.len() > budget {
                    over_budget = true;
                }
            }
        }
        expanded.insert(b, (es, fs));
    }

    let mut elements: Vec<C::Element> = dist.keys().cloned().collect();
    elements.sort();
    let index: BTreeMap<C::Element, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let link = |image: &Option<C::Element>| match image {
        None => Link::Zero,
        Some(x) => index.get(x).map_or(Link::Outside, |&id| Link::Node(id)),
    };
    let nodes: Vec<Node<C::Element>> = elements
        .iter()
        .map(|b| {
            let (e, f, frontier) = match expanded.get(b) {
                Some((es, fs)) => (es.iter().map(link).collect(), fs.iter().map(link).collect(), false),
                None => {
                    let es: Vec<_> = (0..n).map(|k| c.e(b, k)).collect();
                    let fs: Vec<_> = (0..n).map(|k| c.f(b, k)).collect();
                    (es.iter().map(link).collect(), fs.iter().map(link).collect(), true)
                }
            };
            Node {
                element: b.clone(),
                wt: c.wt(b),
                eps: (0..n).map(|k| c.eps(b, k)).collect(),
                phi: (0..n).map(|k| c.phi(b, k)).collect(),
                frontier,
                e,
                f,
            }
        })
        .collect();
    let generators = gens.iter().map(|g| index[g]).collect();
    let graph = CrystalGraph {
        rd: c.root_datum().clone(),
        nodes,
        index,
        generators,
        depth,
    };
    if over_budget {
        return Err(GenerateError::Budget {
            budget,
            partial: Box::new(graph),
        });
    }
    Ok(graph)
}

impl CrystalGraph<CrystalElement> {
    /// Canonical serializations of the nodes, by id.
    pub fn canonical_keys(&self) -> Vec<String> {
        self.nodes.iter().map(|n| n.element.canonical()).collect()
    }

    /// Renumbers nodes so that ids follow the canonical serialization order.
    pub fn sorted_by_canonical(&self) -> Self {
        let keys = self.canonical_keys();
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut new_id = alloc::vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let remap = |l: &Link| match l {
            Link::Node(id) => Link::Node(new_id[*id]),
            other => *other,
        };
        let nodes = order
            .iter()
            .map(|&old| {
                let n = &self.nodes[old];
                Node {
                    element: n.element.clone(),
                    wt: n.wt.clone(),
                    eps: n.eps.clone(),
                    phi: n.phi.clone(),
                    frontier: n.frontier,
                    e: n.e.iter().map(remap).collect(),
                    f: n.f.iter().map(remap).collect(),
                }
            })
            .collect();
        let generators = self.generators.iter().map(|&g| new_id[g]).collect();
        CrystalGraph::from_parts(self.rd.clone(), nodes, generators, self.depth)
    }
}
