mod common;

use common::{b_lambda, hw, ops, tensor_graph};
use crystal_core::{check_axioms, check_normal, Crystal, CrystalElement, CrystalOps, ExtInt};
use proptest::prelude::*;

/// Two-factor rule applied along an explicit bracketing. Independent of the
/// n-fold implementation in the crate; leaves go through `CrystalOps`.
#[derive(Clone, Debug, PartialEq)]
enum Tree {
    Leaf(CrystalElement),
    Pair(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn left_bracketed(factors: &[CrystalElement]) -> Tree {
        let mut tree = Tree::Leaf(factors[0].clone());
        for b in &factors[1..] {
            tree = Tree::Pair(Box::new(tree), Box::new(Tree::Leaf(b.clone())));
        }
        tree
    }

    fn right_bracketed(factors: &[CrystalElement]) -> Tree {
        let mut tree = Tree::Leaf(factors[factors.len() - 1].clone());
        for b in factors[..factors.len() - 1].iter().rev() {
            tree = Tree::Pair(Box::new(Tree::Leaf(b.clone())), Box::new(tree));
        }
        tree
    }

    fn leaves(&self) -> Vec<CrystalElement> {
        match self {
            Tree::Leaf(b) => vec![b.clone()],
            Tree::Pair(a, b) => {
                let mut out = a.leaves();
                out.extend(b.leaves());
                out
            }
        }
    }

    fn wt_k(&self, c: &CrystalOps, k: usize) -> i64 {
        self.leaves().iter().map(|b| c.wt_k(b, k)).sum()
    }

    fn eps(&self, c: &CrystalOps, k: usize) -> ExtInt {
        match self {
            Tree::Leaf(b) => c.eps(b, k),
            Tree::Pair(b1, b2) => b1.eps(c, k).max(b2.eps(c, k).shift(-b1.wt_k(c, k))),
        }
    }

    fn phi(&self, c: &CrystalOps, k: usize) -> ExtInt {
        match self {
            Tree::Leaf(b) => c.phi(b, k),
            Tree::Pair(b1, b2) => b2.phi(c, k).max(b1.phi(c, k).shift(b2.wt_k(c, k))),
        }
    }

    fn e(&self, c: &CrystalOps, k: usize) -> Option<Tree> {
        match self {
            Tree::Leaf(b) => c.e(b, k).map(Tree::Leaf),
            Tree::Pair(b1, b2) => {
                if b1.phi(c, k) >= b2.eps(c, k) {
                    Some(Tree::Pair(Box::new(b1.e(c, k)?), b2.clone()))
                } else {
                    Some(Tree::Pair(b1.clone(), Box::new(b2.e(c, k)?)))
                }
            }
        }
    }

    fn f(&self, c: &CrystalOps, k: usize) -> Option<Tree> {
        match self {
            Tree::Leaf(b) => c.f(b, k).map(Tree::Leaf),
            Tree::Pair(b1, b2) => {
                if b1.phi(c, k) > b2.eps(c, k) {
                    Some(Tree::Pair(Box::new(b1.f(c, k)?), b2.clone()))
                } else {
                    Some(Tree::Pair(b1.clone(), Box::new(b2.f(c, k)?)))
                }
            }
        }
    }
}

fn flat(factors: Vec<CrystalElement>) -> CrystalElement {
    CrystalElement::Tensor(factors)
}

fn flatten(x: &CrystalElement) -> Vec<CrystalElement> {
    match x {
        CrystalElement::Tensor(fs) => fs.iter().flat_map(flatten).collect(),
        other => vec![other.clone()],
    }
}

/// Asserts that the n-fold rule on `factors` agrees with both bracketings of
/// the binary rule and with nested tensor elements.
fn assert_rules_agree(c: &CrystalOps, factors: &[CrystalElement]) {
    let x = flat(factors.to_vec());
    let trees = [Tree::left_bracketed(factors), Tree::right_bracketed(factors)];
    let mut nested = vec![];
    if factors.len() == 3 {
        nested.push(flat(vec![flat(factors[..2].to_vec()), factors[2].clone()]));
        nested.push(flat(vec![factors[0].clone(), flat(factors[1..].to_vec())]));
    }
    for k in 0..c.rank() {
        for t in &trees {
            assert_eq!(c.eps(&x, k), t.eps(c, k));
            assert_eq!(c.phi(&x, k), t.phi(c, k));
            assert_eq!(c.e(&x, k).map(|y| flatten(&y)), t.e(c, k).map(|t| t.leaves()));
            assert_eq!(c.f(&x, k).map(|y| flatten(&y)), t.f(c, k).map(|t| t.leaves()));
        }
        for y in &nested {
            assert_eq!(c.wt(y), c.wt(&x));
            assert_eq!(c.eps(y, k), c.eps(&x, k));
            assert_eq!(c.phi(y, k), c.phi(&x, k));
            assert_eq!(c.e(y, k).map(|z| flatten(&z)), c.e(&x, k).map(|z| flatten(&z)));
            assert_eq!(c.f(y, k).map(|z| flatten(&z)), c.f(&x, k).map(|z| flatten(&z)));
        }
    }
}

#[test]
fn binary_rule_matches_two_fold_rule_on_a2() {
    let c = ops("A2");
    let pairs = [
        ([1, 0], [0, 1]),
        ([1, 1], [1, 0]),
        ([2, 1], [0, 2]),
        ([1, 1], [1, 1]),
        ([2, 0], [1, 1]),
    ];
    let mut checked = 0;
    for (l, m) in pairs {
        let (gl, gm) = (b_lambda(&c, &l, None), b_lambda(&c, &m, None));
        for a in &gl.nodes {
            for b in &gm.nodes {
                assert_rules_agree(&c, &[a.element.clone(), b.element.clone()]);
                checked += 1;
            }
        }
    }
    assert!(checked >= 200, "{}", checked);
}

#[test]
fn n_fold_rule_is_iterated_binary_rule() {
    let c = ops("A2");
    let g1 = b_lambda(&c, &[1, 0], None);
    let g2 = b_lambda(&c, &[0, 1], None);
    let g3 = b_lambda(&c, &[1, 1], None);
    for a in &g1.nodes {
        for b in &g2.nodes {
            for d in &g3.nodes {
                assert_rules_agree(&c, &[a.element.clone(), b.element.clone(), d.element.clone()]);
            }
        }
    }
    let c = ops("A1");
    let g = b_lambda(&c, &[1], None);
    let two = b_lambda(&c, &[2], None);
    for a in &g.nodes {
        for b in &two.nodes {
            for d in &g.nodes {
                for e in &two.nodes {
                    let fs = [
                        a.element.clone(),
                        b.element.clone(),
                        d.element.clone(),
                        e.element.clone(),
                    ];
                    assert_rules_agree(&c, &fs);
                }
            }
        }
    }
}

#[test]
fn sl2_highest_pair() {
    let c = ops("A1");
    let x = flat(vec![hw(&[1]), hw(&[1])]);
    assert_eq!(c.eps(&x, 0), ExtInt::Finite(0));
    assert_eq!(c.phi(&x, 0), ExtInt::Finite(2));
    let low = c.f(&hw(&[1]), 0).unwrap();
    assert_eq!(c.f(&x, 0), Some(flat(vec![low, hw(&[1])])));
}

#[test]
fn tensor_products_of_normal_crystals_are_normal() {
    for (name, weights) in [
        ("A1", vec![vec![1], vec![2]]),
        ("A2", vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
    ] {
        let c = ops(name);
        let graphs: Vec<_> = weights.iter().map(|w| b_lambda(&c, w, None)).collect();
        for g in &graphs {
            assert!(check_normal(g).passed());
        }
        for a in &graphs {
            for b in &graphs {
                let t = tensor_graph(&c, &[a, b]);
                let axioms = check_axioms(&t);
                let normal = check_normal(&t);
                assert!(axioms.passed(), "{:?}", axioms.violations.first());
                assert!(normal.passed(), "{:?}", normal.violations.first());
                assert_eq!(normal.skipped, 0);
            }
        }
        let t = tensor_graph(&c, &[&graphs[0], &graphs[1], &graphs[0]]);
        assert!(check_axioms(&t).passed());
        assert!(check_normal(&t).passed());
    }
}

fn f_power(c: &CrystalOps, x: &CrystalElement, k: usize, r: i64) -> Option<CrystalElement> {
    let mut cur = x.clone();
    for _ in 0..r {
        cur = c.f(&cur, k)?;
    }
    Some(cur)
}

#[test]
fn f_powers_from_eps_zero_elements() {
    let c = ops("A2");
    let a = b_lambda(&c, &[1, 1], None);
    let b = b_lambda(&c, &[2, 0], None);
    let t = tensor_graph(&c, &[&a, &b]);
    let mut checked = 0;
    for node in &t.nodes {
        let CrystalElement::Tensor(fs) = &node.element else {
            unreachable!()
        };
        let (x1, x2) = (&fs[0], &fs[1]);
        for k in 0..2 {
            if node.eps[k] != ExtInt::Finite(0) {
                continue;
            }
            assert_eq!(c.eps(x1, k), ExtInt::Finite(0));
            let d = c.wt_k(x1, k) - c.eps(x2, k).finite().unwrap();
            assert!(d >= 0);
            let phi = node.phi[k].finite().unwrap();
            for r in 0..=phi + 1 {
                let expected = if r <= d {
                    f_power(&c, x1, k, r).map(|y| flat(vec![y, x2.clone()]))
                } else {
                    match (f_power(&c, x1, k, d), f_power(&c, x2, k, r - d)) {
                        (Some(y1), Some(y2)) => Some(flat(vec![y1, y2])),
                        _ => None,
                    }
                };
                assert_eq!(f_power(&c, &node.element, k, r), expected, "r = {}", r);
            }
            checked += 1;
        }
    }
    assert!(checked > 20);
}

proptest! {
    #[test]
    fn random_triples_in_a3(
        l in proptest::collection::vec(0i64..=1, 3),
        m in proptest::collection::vec(0i64..=1, 3),
        picks in proptest::collection::vec(0usize..1000, 3),
    ) {
        let c = ops("A3");
        let ga = b_lambda(&c, &l, None);
        let gb = b_lambda(&c, &m, None);
        let fs = [
            ga.nodes[picks[0] % ga.len()].element.clone(),
            gb.nodes[picks[1] % gb.len()].element.clone(),
            ga.nodes[picks[2] % ga.len()].element.clone(),
        ];
        assert_rules_agree(&c, &fs);
    }
}
