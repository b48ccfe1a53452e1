//! Symmetric Kac-Moody root data and weights.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

/// Errors raised while building a [`RootDatum`] or indexing into one.
///
/// Vertex indices in messages are 1-based, matching the input files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootDatumError {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    Loop { vertex: usize },
    Negative { row: usize, col: usize, value: i64 },
    Asymmetric { row: usize, col: usize },
    UnknownPreset(String),
    IndexOutOfRange { index: usize, n: usize },
    WeightLength { len: usize, n: usize },
}

impl fmt::Display for RootDatumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "adjacency matrix is empty"),
            Self::NotSquare { row, len, expected } => {
                write!(
                    f,
                    "adjacency row {} has {} entries, expected {}",
                    row + 1,
                    len,
                    expected
                )
            }
            Self::Loop { vertex } => write!(f, "edge loop at vertex {}", vertex + 1),
            Self::Negative { row, col, value } => {
                write!(f, "negative edge count {} at entry ({}, {})", value, row + 1, col + 1)
            }
            Self::Asymmetric { row, col } => {
                write!(f, "adjacency is not symmetric at entry ({}, {})", row + 1, col + 1)
            }
            Self::UnknownPreset(name) => write!(f, "unknown preset {:?}", name),
            Self::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {} out of range 1..={}", index + 1, n)
            }
            Self::WeightLength { len, n } => {
                write!(f, "weight has {} coordinates, expected {}", len, n)
            }
        }
    }
}

/// A symmetric generalized Cartan matrix together with its graph.
///
/// The vertex numbering is fixed by construction. Oriented edges from `l`
/// to `k` with `l < k` form the orientation `Ω`; their reverses form `Ω̄`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootDatum {
    n: usize,
    cartan: Vec<Vec<i64>>,
    edge_mult: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Builds the root datum of a loop-free graph given by its edge
    /// multiplicities. The Cartan matrix is `2·I − adjacency`.
    pub fn from_adjacency(adjacency: Vec<Vec<i64>>) -> Result<Self, RootDatumError> {
        let n = adjacency.len();
        if n == 0 {
            return Err(RootDatumError::Empty);
        }
        for (row, entries) in adjacency.iter().enumerate() {
            if entries.len() != n {
                return Err(RootDatumError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
        }
        for k in 0..n {
            if adjacency[k][k] != 0 {
                return Err(RootDatumError::Loop { vertex: k });
            }
        }
        for k in 0..n {
            for l in 0..n {
                let value = adjacency[k][l];
                if value < 0 {
                    return Err(RootDatumError::Negative { row: k, col: l, value });
                }
                if value != adjacency[l][k] {
                    return Err(RootDatumError::Asymmetric { row: k, col: l });
                }
            }
        }
        let cartan = (0..n)
            .map(|k| (0..n).map(|l| if k == l { 2 } else { -adjacency[k][l] }).collect())
            .collect();
        Ok(RootDatum {
            n,
            cartan,
            edge_mult: adjacency,
        })
    }

    /// Builds a root datum from a Cartan matrix. Equivalent to
    /// [`RootDatum::from_adjacency`] on `2·I − C`, with a diagonal check.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self, RootDatumError> {
        let n = cartan.len();
        let mut adjacency = Vec::with_capacity(n);
        for (k, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(RootDatumError::NotSquare {
                    row: k,
                    len: row.len(),
                    expected: n,
                });
            }
            if row[k] != 2 {
                return Err(RootDatumError::Loop { vertex: k });
            }
            adjacency.push(
                row.iter()
                    .enumerate()
                    .map(|(l, &c)| if l == k { 0 } else { -c })
                    .collect(),
            );
        }
        Self::from_adjacency(adjacency)
    }

    /// Presets: `A<n>` (n ≥ 1), `D<n>` (n ≥ 4), `E6`, `E7`, `E8` in Bourbaki
    /// numbering, and `affineA1` (two vertices joined by a double edge).
    pub fn preset(name: &str) -> Result<Self, RootDatumError> {
        let unknown = || RootDatumError::UnknownPreset(name.to_string());
        if name.eq_ignore_ascii_case("affineA1") || name.eq_ignore_ascii_case("A1~") {
            return Self::from_adjacency(vec![vec![0, 2], vec![2, 0]]);
        }
        let (family, rank) = name.split_at(1.min(name.len()));
        let rank: usize = rank.parse().map_err(|_| unknown())?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match family {
            "A" | "a" if rank >= 1 => edges.extend((1..rank).map(|i| (i - 1, i))),
            "D" | "d" if rank >= 4 => {
                edges.extend((1..rank - 1).map(|i| (i - 1, i)));
                edges.push((rank - 3, rank - 1));
            }
            "E" | "e" if (6..=8).contains(&rank) => {
                // 1-3-4-5-6(-7-8) with 2 hanging off 4.
                edges.extend([(0, 2), (2, 3), (1, 3)]);
                edges.extend((3..rank - 1).map(|i| (i, i + 1)));
            }
            _ => return Err(unknown()),
        }
        let mut adjacency = vec![vec![0; rank]; rank];
        for (a, b) in edges {
            adjacency[a][b] += 1;
            adjacency[b][a] += 1;
        }
        Self::from_adjacency(adjacency)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, k: usize, l: usize) -> i64 {
        self.cartan[k][l]
    }

    /// Number of edges between `k` and `l`; zero on the diagonal.
    pub fn edge_mult(&self, k: usize, l: usize) -> i64 {
        self.edge_mult[k][l]
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.edge_mult
    }

    /// `⟨h_k, wt⟩ = λ_k − Σ_l C_kl v_l`.
    ///
    /// Panics if `k` is out of range; see [`RootDatum::checked_pairing`].
    pub fn pairing(&self, k: usize, wt: &Weight) -> i64 {
        let row = &self.cartan[k];
        wt.lambda[k] - row.iter().zip(&wt.root).map(|(c, v)| c * v).sum::<i64>()
    }

    pub fn checked_pairing(&self, k: usize, wt: &Weight) -> Result<i64, RootDatumError> {
        if k >= self.n {
            return Err(RootDatumError::IndexOutOfRange { index: k, n: self.n });
        }
        self.check_weight(wt)?;
        Ok(self.pairing(k, wt))
    }

    /// All pairings `(⟨h_1, wt⟩, …, ⟨h_n, wt⟩)`.
    pub fn pairings(&self, wt: &Weight) -> Vec<i64> {
        (0..self.n).map(|k| self.pairing(k, wt)).collect()
    }

    pub fn is_dominant(&self, wt: &Weight) -> bool {
        (0..self.n).all(|k| self.pairing(k, wt) >= 0)
    }

    pub fn check_weight(&self, wt: &Weight) -> Result<(), RootDatumError> {
        if wt.lambda.len() != self.n || wt.root.len() != self.n {
            let len = if wt.lambda.len() != self.n {
                wt.lambda.len()
            } else {
                wt.root.len()
            };
            return Err(RootDatumError::WeightLength { len, n: self.n });
        }
        Ok(())
    }

    /// Bilinear form `(α, β)` on the root lattice, in simple-root coordinates.
    pub fn root_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for k in 0..self.n {
            if a[k] == 0 {
                continue;
            }
            for l in 0..self.n {
                total += a[k] * self.cartan[k][l] * b[l];
            }
        }
        total
    }
}

/// A weight `Σ λ_k Λ_k − Σ v_k α_k`, stored as the exact coordinate pair.
///
/// Two weights are equal only if both coordinate vectors agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub lambda: Vec<i64>,
    pub root: Vec<i64>,
}

impl Weight {
    pub fn new(lambda: Vec<i64>, root: Vec<i64>) -> Self {
        Weight { lambda, root }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            lambda: vec![0; n],
            root: vec![0; n],
        }
    }

    /// `Σ λ_k Λ_k`, no root part.
    pub fn from_lambda(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        Weight {
            lambda,
            root: vec![0; n],
        }
    }

    /// The fundamental weight `Λ_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        let mut wt = Self::zero(n);
        wt.lambda[k] = 1;
        wt
    }

    /// `wt − α_k`.
    pub fn subtract_alpha(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.root[k] += 1;
        out
    }

    /// `wt + α_k`.
    pub fn add_alpha(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.root[k] -= 1;
        out
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            lambda: self.lambda.iter().zip(&rhs.lambda).map(|(a, b)| a + b).collect(),
            root: self.root.iter().zip(&rhs.root).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}
