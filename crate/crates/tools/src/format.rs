//! Serialization: graph JSON and DOT, decomposition TSV and JSON, and parsing
//! of canonical element JSON.
//!
//! Every writer renumbers graph nodes by canonical serialization first, so
//! output bytes depend only on the crystal, not on exploration order.

use std::fmt::Write;
use std::sync::Arc;

use crystal_core::{
    BkElement, CrystalElement, CrystalGraph, DecompositionTable, ExtInt, Link, ModelElement, RootDatum, WProfile,
    Weight,
};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::input::join;

#[derive(Serialize)]
#[serde(untagged)]
enum Stat {
    Finite(i64),
    NegInfinity(&'static str),
}

impl From<ExtInt> for Stat {
    fn from(x: ExtInt) -> Self {
        match x {
            ExtInt::Finite(v) => Stat::Finite(v),
            ExtInt::NegInfinity => Stat::NegInfinity("-inf"),
        }
    }
}

#[derive(Serialize)]
struct WeightJson<'a> {
    lambda: &'a [i64],
    root: &'a [i64],
}

impl<'a> From<&'a Weight> for WeightJson<'a> {
    fn from(w: &'a Weight) -> Self {
        WeightJson {
            lambda: &w.lambda,
            root: &w.root,
        }
    }
}

#[derive(Serialize)]
struct NodeJson<'a> {
    id: usize,
    kind: &'static str,
    element: String,
    wt: WeightJson<'a>,
    eps: Vec<Stat>,
    phi: Vec<Stat>,
    frontier: bool,
}

#[derive(Serialize)]
struct EdgeJson {
    src: usize,
    k: usize,
    dst: usize,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    depth: Option<usize>,
    nodes: Vec<NodeJson<'a>>,
    edges: Vec<EdgeJson>,
}

/// `{depth, nodes: [{id, kind, element, wt, eps, phi, frontier}], edges: [{src, k, dst}]}`.
///
/// Edges are the `f̃_k` arrows between explored nodes; `k` is 1-based and
/// `−∞` is written as the string `"-inf"`.
pub fn graph_json(g: &CrystalGraph<CrystalElement>) -> String {
    let g = g.sorted_by_canonical();
    let nodes = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| NodeJson {
            id,
            kind: n.element.kind(),
            element: n.element.canonical(),
            wt: (&n.wt).into(),
            eps: n.eps.iter().map(|&x| x.into()).collect(),
            phi: n.phi.iter().map(|&x| x.into()).collect(),
            frontier: n.frontier,
        })
        .collect();
    let edges = g
        .edges()
        .into_iter()
        .map(|(src, k, dst)| EdgeJson { src, k: k + 1, dst })
        .collect();
    let doc = GraphJson {
        depth: g.depth,
        nodes,
        edges,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("graph JSON is serializable");
    out.push('\n');
    out
}

const EDGE_COLORS: [&str; 8] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
];

fn tuple(values: &[i64]) -> String {
    format!("({})", join(values))
}

/// DOT with one node per element labelled by its pairing vector, `f̃_k` edges
/// labelled and colored by `k`, and frontier nodes dashed.
pub fn graph_dot(g: &CrystalGraph<CrystalElement>) -> String {
    let g = g.sorted_by_canonical();
    let mut out = String::from("digraph crystal {\n  node [shape=box];\n");
    for (id, n) in g.nodes.iter().enumerate() {
        let style = if n.frontier { ", style=dashed" } else { "" };
        writeln!(out, "  {} [label=\"{}\"{}];", id, tuple(&g.pairings(id)), style).unwrap();
    }
    for (src, k, dst) in g.edges() {
        let color = EDGE_COLORS[k % EDGE_COLORS.len()];
        writeln!(out, "  {} -> {} [label=\"{}\", color={}];", src, dst, k + 1, color).unwrap();
    }
    for (id, n) in g.nodes.iter().enumerate() {
        for (k, link) in n.f.iter().enumerate() {
            if *link == Link::Outside {
                writeln!(
                    out,
                    "  {} -> out{}_{} [label=\"{}\", color={}, style=dashed];",
                    id,
                    id,
                    k + 1,
                    k + 1,
                    EDGE_COLORS[k % EDGE_COLORS.len()]
                )
                .unwrap();
                writeln!(out, "  out{}_{} [label=\"\", shape=point];", id, k + 1).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Tab separated: comment lines for completeness, depth and flagged highest
/// weights, then a header and one row per highest weight.
pub fn decomposition_tsv(rd: &RootDatum, t: &DecompositionTable) -> String {
    let mut out = String::new();
    writeln!(out, "# complete\t{}", t.complete).unwrap();
    match t.depth {
        Some(d) => writeln!(out, "# depth\t{}", d).unwrap(),
        None => out.push_str("# depth\tnone\n"),
    }
    for w in &t.flagged {
        writeln!(
            out,
            "# flagged\t{}\t{}\t{}",
            join(&w.lambda),
            join(&w.root),
            join(&rd.pairings(w))
        )
        .unwrap();
    }
    out.push_str("lambda\troot\tmultiplicity\tpairing\n");
    for (w, m) in &t.entries {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            join(&w.lambda),
            join(&w.root),
            m,
            join(&rd.pairings(w))
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct EntryJson<'a> {
    lambda: &'a [i64],
    root: &'a [i64],
    pairing: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<usize>,
}

impl<'a> EntryJson<'a> {
    fn new(rd: &RootDatum, w: &'a Weight, multiplicity: Option<usize>) -> Self {
        EntryJson {
            lambda: &w.lambda,
            root: &w.root,
            pairing: rd.pairings(w),
            multiplicity,
        }
    }
}

#[derive(Serialize)]
struct TableJson<'a> {
    complete: bool,
    depth: Option<usize>,
    entries: Vec<EntryJson<'a>>,
    flagged: Vec<EntryJson<'a>>,
}

/// `{complete, depth, entries: [{lambda, root, pairing, multiplicity}], flagged: [{lambda, root, pairing}]}`.
pub fn decomposition_json(rd: &RootDatum, t: &DecompositionTable) -> String {
    let doc = TableJson {
        complete: t.complete,
        depth: t.depth,
        entries: t.entries.iter().map(|(w, &m)| EntryJson::new(rd, w, Some(m))).collect(),
        flagged: t.flagged.iter().map(|w| EntryJson::new(rd, w, None)).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("table JSON is serializable");
    out.push('\n');
    out
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("element: {0}")]
    Shape(String),
}

fn shape(msg: impl Into<String>) -> FormatError {
    FormatError::Shape(msg.into())
}

fn int(v: &Value) -> Result<i64, FormatError> {
    v.as_i64()
        .ok_or_else(|| shape(format!("expected an integer, found {}", v)))
}

fn int_list(v: &Value, len: usize) -> Result<Vec<i64>, FormatError> {
    let items = v
        .as_array()
        .ok_or_else(|| shape(format!("expected an array, found {}", v)))?;
    if items.len() != len {
        return Err(shape(format!("expected {} entries, found {}", len, items.len())));
    }
    items.iter().map(int).collect()
}

fn vertex(v: &Value, rank: usize) -> Result<usize, FormatError> {
    let k = int(v)?;
    if k < 1 || k as usize > rank {
        return Err(shape(format!("vertex {} out of range 1..={}", k, rank)));
    }
    Ok(k as usize - 1)
}

fn element_from_value(v: &Value, rank: usize) -> Result<CrystalElement, FormatError> {
    let obj = v
        .as_object()
        .filter(|o| o.len() == 1)
        .ok_or_else(|| shape("expected a single-key object"))?;
    let (tag, body) = obj.iter().next().unwrap();
    match tag.as_str() {
        "Bk" => Ok(CrystalElement::Bk(BkElement::new(
            vertex(&body["k"], rank)?,
            int(&body["n"])?,
        ))),
        "T" => Ok(CrystalElement::T(Weight::new(
            int_list(&body["lambda"], rank)?,
            int_list(&body["root"], rank)?,
        ))),
        "S0" => Ok(CrystalElement::S0),
        "Tensor" => {
            let factors = body.as_array().ok_or_else(|| shape("Tensor expects an array"))?;
            Ok(CrystalElement::Tensor(
                factors
                    .iter()
                    .map(|f| element_from_value(f, rank))
                    .collect::<Result<_, _>>()?,
            ))
        }
        "Model" => {
            let w = body["w"]
                .as_object()
                .ok_or_else(|| shape("Model expects a `w` object"))?;
            let mut slots = Vec::new();
            for (p, dims) in w {
                let p: i64 = p
                    .parse()
                    .map_err(|_| shape(format!("slot {:?} is not an integer", p)))?;
                let dims = int_list(dims, rank)?;
                if dims.iter().any(|&d| d < 0) {
                    return Err(shape(format!("negative framing dimension at slot {}", p)));
                }
                slots.push((p, dims));
            }
            let wp = Arc::new(WProfile::new(rank, slots));
            let v = body["v"]
                .as_object()
                .ok_or_else(|| shape("Model expects a `v` object"))?;
            let mut entries = Vec::new();
            for (key, value) in v {
                let (k, p) = key
                    .split_once(',')
                    .ok_or_else(|| shape(format!("key {:?} is not `k,p`", key)))?;
                let k = vertex(
                    &Value::from(
                        k.parse::<i64>()
                            .map_err(|_| shape(format!("bad vertex in {:?}", key)))?,
                    ),
                    rank,
                )?;
                let p: i64 = p.parse().map_err(|_| shape(format!("bad slot in {:?}", key)))?;
                let value = int(value)?;
                if value < 0 {
                    return Err(shape(format!("negative dimension at {:?}", key)));
                }
                entries.push(((k, p), value));
            }
            Ok(CrystalElement::Model(ModelElement::from_entries(wp, entries)))
        }
        other => Err(shape(format!("unknown element kind {:?}", other))),
    }
}

/// Parses the canonical JSON form of an element (see
/// [`CrystalElement::canonical`]) over a root datum of the given rank.
pub fn element_from_json(text: &str, rank: usize) -> Result<CrystalElement, FormatError> {
    element_from_value(&serde_json::from_str(text)?, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crystal_core::{decompose, generate, CrystalOps};

    fn b_lambda(name: &str, lambda: &[i64], depth: Option<usize>) -> CrystalGraph<CrystalElement> {
        let ops = CrystalOps::new(RootDatum::preset(name).unwrap());
        let top = CrystalElement::Model(ModelElement::highest(Arc::new(WProfile::single(lambda.to_vec()))));
        generate(&ops, [top], depth, 10_000).unwrap()
    }

    #[test]
    fn a2_fundamental_dot() {
        let dot = graph_dot(&b_lambda("A2", &[1, 0], None));
        let expected = "digraph crystal {
  node [shape=box];
  0 [label=\"(0,-1)\"];
  1 [label=\"(-1,1)\"];
  2 [label=\"(1,0)\"];
  1 -> 0 [label=\"2\", color=blue];
  2 -> 1 [label=\"1\", color=red];
}
";
        assert_eq!(dot, expected);
    }

    #[test]
    fn frontier_nodes_are_dashed() {
        let dot = graph_dot(&b_lambda("affineA1", &[1, 0], Some(2)));
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("shape=point"));
    }

    #[test]
    fn graph_json_fields() {
        let json: Value = serde_json::from_str(&graph_json(&b_lambda("A1", &[1], None))).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 2);
        assert_eq!(json["nodes"][0]["kind"], "Model");
        assert_eq!(json["nodes"][0]["wt"]["lambda"], serde_json::json!([1]));
        assert_eq!(json["edges"], serde_json::json!([{"src": 1, "k": 1, "dst": 0}]));
        let t = CrystalElement::T(Weight::new(vec![1], vec![0]));
        let ops = CrystalOps::new(RootDatum::preset("A1").unwrap());
        let g = generate(&ops, [t], None, 10).unwrap();
        let json: Value = serde_json::from_str(&graph_json(&g)).unwrap();
        assert_eq!(json["nodes"][0]["eps"], serde_json::json!(["-inf"]));
    }

    #[test]
    fn decomposition_outputs() {
        let rd = RootDatum::preset("A1").unwrap();
        let ops = CrystalOps::new(rd.clone());
        let g = b_lambda("A1", &[1], None);
        let gens: Vec<_> = g
            .nodes
            .iter()
            .flat_map(|a| {
                g.nodes
                    .iter()
                    .map(move |b| CrystalElement::tensor([a.element.clone(), b.element.clone()]))
            })
            .collect();
        let table = decompose(&generate(&ops, gens, None, 100).unwrap());
        assert_eq!(
            decomposition_tsv(&rd, &table),
            "# complete\ttrue\n# depth\tnone\nlambda\troot\tmultiplicity\tpairing\n2\t0\t1\t2\n2\t1\t1\t0\n"
        );
        let json: Value = serde_json::from_str(&decomposition_json(&rd, &table)).unwrap();
        assert_eq!(
            json["entries"][1],
            serde_json::json!({"lambda": [2], "root": [1], "pairing": [0], "multiplicity": 1})
        );
    }

    #[test]
    fn element_round_trip() {
        let wp = Arc::new(WProfile::new(2, [(-1, vec![1, 0]), (2, vec![0, 3])]));
        let x = CrystalElement::tensor([
            CrystalElement::S0,
            CrystalElement::Bk(BkElement::new(1, -4)),
            CrystalElement::T(Weight::new(vec![1, 2], vec![0, -1])),
            CrystalElement::Model(ModelElement::from_entries(wp, [((0, 0), 2), ((1, 3), 1)])),
            CrystalElement::S0,
        ]);
        let text = x.canonical();
        assert_eq!(element_from_json(&text, 2).unwrap(), x);
        assert!(element_from_json(r#"{"Bk":{"k":3,"n":0}}"#, 2).is_err());
        assert!(element_from_json(r#"{"Q":{}}"#, 2).is_err());
        assert!(element_from_json(r#"{"Model":{"w":{"0":[1,0]},"v":{"1,1":-1}}}"#, 2).is_err());
    }
}
