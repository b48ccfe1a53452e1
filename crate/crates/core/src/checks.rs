//! Checkers for the crystal axioms, normality and (strict) morphisms.
//!
//! Checkers read explored graphs only. Assertions that need data beyond the
//! frontier are skipped and counted, never reported as failures.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::crystal::{Crystal, CrystalElement, CrystalOps, ExtInt};
use crate::graph::{CrystalGraph, Link};
use crate::quiver_model::{embed_psi, psi_window, rank_complex, ModelElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Short rule tag, e.g. `"a"`, `"d"`, `"normal-eps"`, `"morphism-wt"`.
    pub rule: &'static str,
    pub node: usize,
    pub k: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "[{}] node {} color {}: {}", self.rule, self.node, k + 1, self.detail),
            None => write!(f, "[{}] node {}: {}", self.rule, self.node, self.detail),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, rule: &str) -> usize {
        self.violations.iter().filter(|v| v.rule == rule).count()
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
    }

    fn fail(&mut self, rule: &'static str, node: usize, k: Option<usize>, detail: String) {
        self.violations.push(Violation { rule, node, k, detail });
    }
}

/// Checks axioms (a)–(e) on every non-frontier node.
///
/// * (a) `φ_k = ε_k + ⟨h_k, wt⟩`, `−∞` absorbing;
/// * (b), (c) shifts of `wt`, `ε_k`, `φ_k` along `ẽ_k`, `f̃_k`;
/// * (d) `f̃_k x = y ⇔ ẽ_k y = x`;
/// * (e) `φ_k = −∞ ⇒ ẽ_k = f̃_k = 0`.
pub fn check_axioms<E: Clone + Ord>(g: &CrystalGraph<E>) -> Report {
    let rd = g.root_datum();
    let mut report = Report::default();
    for (id, node) in g.nodes.iter().enumerate() {
        if node.frontier {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        for k in 0..rd.rank() {
            let wt_k = rd.pairing(k, &node.wt);
            if node.phi[k] != node.eps[k].shift(wt_k) {
                report.fail(
                    "a",
                    id,
                    Some(k),
                    format!("phi {} != eps {} + {}", node.phi[k], node.eps[k], wt_k),
                );
            }
            if node.phi[k] == ExtInt::NegInfinity && (node.e[k] != Link::Zero || node.f[k] != Link::Zero) {
                report.fail("e", id, Some(k), "phi is -inf but an operator is defined".into());
            }
            match node.f[k] {
                Link::Node(y) => {
                    let target = &g.nodes[y];
                    if target.wt != node.wt.subtract_alpha(k)
                        || target.eps[k] != node.eps[k].shift(1)
                        || target.phi[k] != node.phi[k].shift(-1)
                    {
                        report.fail("c", id, Some(k), format!("statistics of f-image {} do not shift", y));
                    }
                    match g.nodes[y].e[k] {
                        Link::Node(x) if x == id => {}
                        Link::Outside => report.skipped += 1,
                        other => report.fail("d", id, Some(k), format!("f gives {} but e of {} is {:?}", y, y, other)),
                    }
                }
                Link::Outside => report.fail("frontier", id, Some(k), "interior node links outside".into()),
                Link::Zero => {}
            }
            match node.e[k] {
                Link::Node(x) => {
                    let target = &g.nodes[x];
                    if target.wt != node.wt.add_alpha(k)
                        || target.eps[k] != node.eps[k].shift(-1)
                        || target.phi[k] != node.phi[k].shift(1)
                    {
                        report.fail("b", id, Some(k), format!("statistics of e-image {} do not shift", x));
                    }
                    match g.nodes[x].f[k] {
                        Link::Node(y) if y == id => {}
                        Link::Outside => report.skipped += 1,
                        other => report.fail("d", id, Some(k), format!("e gives {} but f of {} is {:?}", x, x, other)),
                    }
                }
                Link::Outside => report.fail("frontier", id, Some(k), "interior node links outside".into()),
                Link::Zero => {}
            }
        }
    }
    report
}

enum StringWalk {
    /// Number of steps until the operator gives `0`.
    Length(i64),
    /// Left the explored region after this many steps.
    Exits(i64),
}

fn walk<E: Clone + Ord>(g: &CrystalGraph<E>, start: usize, k: usize, limit: i64, up: bool) -> StringWalk {
    let mut current = start;
    let mut steps = 0;
    loop {
        let node = &g.nodes[current];
        let link = if up { node.e[k] } else { node.f[k] };
        match link {
            Link::Zero => return StringWalk::Length(steps),
            Link::Outside => return StringWalk::Exits(steps),
            Link::Node(next) => {
                steps += 1;
                // A cycle or an over-long string cannot match a finite statistic.
                if steps > limit {
                    return StringWalk::Exits(steps);
                }
                current = next;
            }
        }
    }
}

/// Checks `ε_k(b) = max{n : ẽ_kⁿ b ≠ 0}` and the dual statement for `φ_k`.
///
/// Negative or `−∞` statistics are violations outright, as is a string that
/// is already longer than the statistic inside the explored region. Strings
/// that leave the region before ending are skipped.
pub fn check_normal<E: Clone + Ord>(g: &CrystalGraph<E>) -> Report {
    let rd = g.root_datum();
    let cap = g.len() as i64 + 1;
    let mut report = Report::default();
    for (id, node) in g.nodes.iter().enumerate() {
        for k in 0..rd.rank() {
            for (up, stat, rule) in [(true, node.eps[k], "normal-eps"), (false, node.phi[k], "normal-phi")] {
                let expected = match stat {
                    ExtInt::Finite(v) if v >= 0 => v,
                    other => {
                        report.checked += 1;
                        report.fail(rule, id, Some(k), format!("statistic {} is not a string length", other));
                        continue;
                    }
                };
                match walk(g, id, k, expected.max(cap), up) {
                    StringWalk::Length(len) => {
                        report.checked += 1;
                        if len != expected {
                            report.fail(rule, id, Some(k), format!("string length {} != {}", len, expected));
                        }
                    }
                    StringWalk::Exits(steps) if steps > expected => {
                        report.checked += 1;
                        report.fail(rule, id, Some(k), format!("string longer than {}", expected));
                    }
                    StringWalk::Exits(_) => report.skipped += 1,
                }
            }
        }
    }
    report
}

/// Error raised when a morphism is undefined on a node it must be defined on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndefinedMap {
    pub node: usize,
}

impl fmt::Display for UndefinedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "map is undefined on node {}", self.node)
    }
}

/// Checks that `map` is a strict morphism from `g1` to `g2`.
///
/// `map` sends node ids of `g1` to node ids of `g2`, or `None` where it is
/// undefined; it must be defined on every non-frontier node. For those nodes
/// `wt`, `ε_k`, `φ_k` must be preserved and `ẽ_k`, `f̃_k` must commute with
/// the map, `0 ↦ 0` included.
pub fn check_strict_morphism<E1: Clone + Ord, E2: Clone + Ord>(
    g1: &CrystalGraph<E1>,
    g2: &CrystalGraph<E2>,
    map: impl Fn(usize) -> Option<usize>,
) -> Result<Report, UndefinedMap> {
    let mut report = Report::default();
    for (id, node) in g1.nodes.iter().enumerate() {
        if node.frontier {
            report.skipped += 1;
            continue;
        }
        let image = map(id).ok_or(UndefinedMap { node: id })?;
        report.checked += 1;
        let target = &g2.nodes[image];
        if target.wt != node.wt {
            report.fail("morphism-wt", id, None, format!("weight differs on image {}", image));
        }
        for k in 0..g1.root_datum().rank() {
            if target.eps[k] != node.eps[k] {
                report.fail(
                    "morphism-eps",
                    id,
                    Some(k),
                    format!("eps {} -> {}", node.eps[k], target.eps[k]),
                );
            }
            if target.phi[k] != node.phi[k] {
                report.fail(
                    "morphism-phi",
                    id,
                    Some(k),
                    format!("phi {} -> {}", node.phi[k], target.phi[k]),
                );
            }
            for (rule, source_link, target_link) in [
                ("morphism-e", node.e[k], target.e[k]),
                ("morphism-f", node.f[k], target.f[k]),
            ] {
                match (source_link, target_link) {
                    (Link::Zero, Link::Zero) => {}
                    (Link::Node(a), Link::Node(b)) => match map(a) {
                        Some(mapped) if mapped == b => {}
                        Some(mapped) => report.fail(rule, id, Some(k), format!("maps to {} not {}", mapped, b)),
                        None => report.skipped += 1,
                    },
                    (_, Link::Outside) | (Link::Outside, _) => report.skipped += 1,
                    (a, b) => report.fail(rule, id, Some(k), format!("{:?} vs {:?}", a, b)),
                }
            }
        }
    }
    Ok(report)
}

/// [`check_strict_morphism`] for a map given on elements. Images that are
/// not nodes of `g2` count as undefined.
pub fn check_strict_morphism_by_element<E1: Clone + Ord, E2: Clone + Ord>(
    g1: &CrystalGraph<E1>,
    g2: &CrystalGraph<E2>,
    map: impl Fn(&E1) -> Option<E2>,
) -> Result<Report, UndefinedMap> {
    let ids: Vec<Option<usize>> = g1
        .nodes
        .iter()
        .map(|n| map(&n.element).and_then(|y| g2.id_of(&y)))
        .collect();
    check_strict_morphism(g1, g2, |id| ids[id])
}

/// Checks that `map` is injective on the nodes where it is defined.
pub fn check_injective(len: usize, map: impl Fn(usize) -> Option<usize>) -> Report {
    let mut seen = BTreeMap::new();
    let mut report = Report::default();
    for id in 0..len {
        if let Some(image) = map(id) {
            report.checked += 1;
            if let Some(prev) = seen.insert(image, id) {
                report.fail("injective", id, None, format!("collides with node {}", prev));
            }
        }
    }
    report
}

/// Compares the profile-model operators on every node of `g` with the tensor
/// rule applied through [`embed_psi`], and checks that the complex ranks sum
/// to the pairing over the window.
///
/// The window for each comparison covers the node and its `ẽ_k`, `f̃_k`
/// images. Rules: `"psi-eps"`, `"psi-phi"`, `"psi-e"`, `"psi-f"`,
/// `"telescoping"`, `"kind"` for nodes that are not model elements.
pub fn check_embedding(c: &CrystalOps, g: &CrystalGraph<CrystalElement>) -> Report {
    let rd = c.root_datum();
    let mut report = Report::default();
    for (id, node) in g.nodes.iter().enumerate() {
        let CrystalElement::Model(x) = &node.element else {
            report.fail(
                "kind",
                id,
                None,
                format!("expected a model element, found {}", node.element.kind()),
            );
            continue;
        };
        report.checked += 1;
        let (lo, hi) = psi_window(x);
        for k in 0..rd.rank() {
            let total: i64 = (lo..=hi + 1).map(|p| rank_complex(rd, x, k, p)).sum();
            let pairing = rd.pairing(k, &node.wt);
            if total != pairing {
                report.fail(
                    "telescoping",
                    id,
                    Some(k),
                    format!("ranks sum to {}, pairing is {}", total, pairing),
                );
            }
            let e = c.e(&node.element, k);
            let f = c.f(&node.element, k);
            let mut window = (lo, hi);
            for y in e.iter().chain(f.iter()) {
                if let CrystalElement::Model(y) = y {
                    let (a, b) = psi_window(y);
                    window = (window.0.min(a), window.1.max(b));
                }
            }
            let embed = |y: &ModelElement| embed_psi(y, window).expect("window covers the support");
            let t = embed(x);
            if c.eps(&t, k) != node.eps[k] {
                report.fail(
                    "psi-eps",
                    id,
                    Some(k),
                    format!("model {}, tensor {}", node.eps[k], c.eps(&t, k)),
                );
            }
            if c.phi(&t, k) != node.phi[k] {
                report.fail(
                    "psi-phi",
                    id,
                    Some(k),
                    format!("model {}, tensor {}", node.phi[k], c.phi(&t, k)),
                );
            }
            let through = |y: Option<CrystalElement>| match y {
                Some(CrystalElement::Model(y)) => Some(embed(&y)),
                other => other,
            };
            if c.e(&t, k) != through(e) {
                report.fail(
                    "psi-e",
                    id,
                    Some(k),
                    String::from("ẽ does not commute with the embedding"),
                );
            }
            if c.f(&t, k) != through(f) {
                report.fail(
                    "psi-f",
                    id,
                    Some(k),
                    String::from("f̃ does not commute with the embedding"),
                );
            }
        }
    }
    report
}
