//! Verification suites behind `crystal verify`.

use std::fmt;

use clap::ValueEnum;
use crystal_core::{
    character, check_axioms, check_embedding, check_normal, finite_type_check, freudenthal_multiplicities,
    is_isomorphic, weyl_dim, CrystalElement, CrystalGraph, CrystalOps, Report, RootDatum, Weight,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{explore, highest, tensor_region};
use crate::error::CliError;
use crate::input::{dominant_weight, join};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Crystal axioms on B(λ) and on sampled tensor products.
    Axioms,
    /// Normality on B(λ) and on sampled tensor products.
    Normal,
    /// Component of b_λ ⊗ b_μ isomorphic to B(λ+μ) for sampled pairs.
    Closed,
    /// Profile model operators agree with the capped tensor embedding.
    Embedding,
    /// Sizes and characters against Weyl and Freudenthal (finite type).
    Oracle,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyParams {
    /// Explicit weights. Empty means every dominant weight with entries up to
    /// `max_entry`.
    pub weights: Vec<Vec<i64>>,
    pub max_entry: i64,
    pub depth: Option<usize>,
    pub seed: u64,
    /// Number of sampled pairs for the tensor and closed-family suites.
    pub samples: usize,
    pub budget: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            weights: Vec::new(),
            max_entry: 1,
            depth: None,
            seed: 0,
            samples: 20,
            budget: crate::input::DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: Suite,
    /// One line per tested instance.
    pub lines: Vec<String>,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} checked, {} skipped, {} failures)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.lines.len(),
            self.checked,
            self.skipped,
            self.failures
        )
    }

    fn record(&mut self, label: String, report: Report) {
        self.checked += report.checked;
        self.skipped += report.skipped;
        self.failures += report.violations.len();
        let mut line = format!(
            "{}: {} checked, {} skipped, {} violations",
            label,
            report.checked,
            report.skipped,
            report.violations.len()
        );
        if let Some(v) = report.violations.first() {
            line.push_str(&format!(" (first: {})", v));
        }
        self.lines.push(line);
    }

    fn verdict(&mut self, label: String, ok: bool, detail: String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
        self.lines
            .push(format!("{}: {} ({})", label, if ok { "ok" } else { "FAIL" }, detail));
    }
}

fn dominant_box(n: usize, max: i64) -> Vec<Vec<i64>> {
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

/// Ordered pairs from `weights`: all of them if there are at most `samples`,
/// otherwise `samples` drawn with the seeded generator.
pub fn sample_pairs(weights: &[Vec<i64>], samples: usize, seed: u64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let n = weights.len();
    if n * n <= samples {
        return weights
            .iter()
            .flat_map(|a| weights.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            (
                weights[rng.gen_range(0..n)].clone(),
                weights[rng.gen_range(0..n)].clone(),
            )
        })
        .collect()
}

fn label(lambda: &[i64]) -> String {
    format!("B({})", join(lambda))
}

pub fn run_suite(rd: &RootDatum, suite: Suite, params: &VerifyParams) -> Result<SuiteOutcome, CliError> {
    let finite = finite_type_check(rd);
    if !finite && params.depth.is_none() {
        return Err(CliError::usage("root datum is not of finite type: pass --depth"));
    }
    if suite == Suite::Oracle && !finite {
        return Err(CliError::usage("the oracle suite needs a root datum of finite type"));
    }
    let weights = if params.weights.is_empty() {
        dominant_box(rd.rank(), params.max_entry)
    } else {
        params.weights.clone()
    };
    for w in &weights {
        dominant_weight(rd, w)?;
    }
    let ops = CrystalOps::new(rd.clone());
    let mut out = SuiteOutcome {
        suite,
        lines: Vec::new(),
        checked: 0,
        skipped: 0,
        failures: 0,
    };
    let b = |lambda: &[i64]| explore(&ops, [highest(lambda)], params.depth, params.budget);
    match suite {
        Suite::Axioms | Suite::Normal => {
            let check = |g: &CrystalGraph<CrystalElement>| {
                if suite == Suite::Axioms {
                    check_axioms(g)
                } else {
                    check_normal(g)
                }
            };
            for lambda in &weights {
                out.record(label(lambda), check(&b(lambda)?));
            }
            for (l, m) in sample_pairs(&weights, params.samples, params.seed) {
                let t = tensor_region(rd, &[l.clone(), m.clone()], params.depth, params.budget)?;
                out.record(format!("{} ⊗ {}", label(&l), label(&m)), check(&t));
            }
        }
        Suite::Closed => {
            for (l, m) in sample_pairs(&weights, params.samples, params.seed) {
                let top = CrystalElement::tensor([highest(&l), highest(&m)]);
                let component = explore(&ops, [top], params.depth, params.budget)?;
                let sum: Vec<i64> = l.iter().zip(&m).map(|(a, b)| a + b).collect();
                let target = b(&sum)?;
                let name = format!("{} ⊗ {} ⊇ {}", label(&l), label(&m), label(&sum));
                match is_isomorphic(&component, &target) {
                    Ok(Some(_)) => out.verdict(name, true, format!("{} nodes", component.len())),
                    Ok(None) => out.verdict(name, false, "not isomorphic".into()),
                    Err(e) => out.verdict(name, false, e.to_string()),
                }
            }
        }
        Suite::Embedding => {
            for lambda in &weights {
                out.record(label(lambda), check_embedding(&ops, &b(lambda)?));
            }
        }
        Suite::Oracle => {
            for lambda in &weights {
                let g = b(lambda)?;
                let w = Weight::from_lambda(lambda.clone());
                let dim = weyl_dim(rd, &w).expect("finite type, dominant");
                let expected = freudenthal_multiplicities(rd, &w).expect("finite type, dominant");
                let ok = g.len() as u128 == dim && character(&g).weights == expected;
                out.verdict(label(lambda), ok, format!("#B = {}, weyl_dim = {}", g.len(), dim));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(name: &str) -> RootDatum {
        RootDatum::preset(name).unwrap()
    }

    #[test]
    fn suites_pass_on_a2() {
        let params = VerifyParams {
            max_entry: 1,
            ..Default::default()
        };
        for suite in [
            Suite::Axioms,
            Suite::Normal,
            Suite::Closed,
            Suite::Embedding,
            Suite::Oracle,
        ] {
            let out = run_suite(&rd("A2"), suite, &params).unwrap();
            assert!(out.passed(), "{}", out.summary());
            assert!(out.checked > 0);
        }
    }

    #[test]
    fn oracle_a3() {
        let params = VerifyParams {
            weights: vec![vec![0, 1, 0]],
            ..Default::default()
        };
        let out = run_suite(&rd("A3"), Suite::Oracle, &params).unwrap();
        assert!(out.passed());
        assert!(out.lines[0].contains("#B = 6, weyl_dim = 6"), "{}", out.lines[0]);
    }

    #[test]
    fn affine_needs_depth() {
        let err = run_suite(&rd("affineA1"), Suite::Axioms, &VerifyParams::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let params = VerifyParams {
            depth: Some(4),
            weights: vec![vec![1, 0]],
            ..Default::default()
        };
        assert!(run_suite(&rd("affineA1"), Suite::Oracle, &params).is_err());
        let out = run_suite(&rd("affineA1"), Suite::Normal, &params).unwrap();
        assert!(out.passed());
        assert!(out.skipped > 0);
    }

    #[test]
    fn sampling_is_seeded() {
        let ws = dominant_box(3, 2);
        assert_eq!(sample_pairs(&ws, 20, 7), sample_pairs(&ws, 20, 7));
        assert_ne!(sample_pairs(&ws, 20, 7), sample_pairs(&ws, 20, 8));
        assert_eq!(sample_pairs(&ws[..3], 20, 0).len(), 9);
    }
}
