//! Hom ranks between the Lefschetz thimbles `L_i`, `i ∈ {1..a-1}^{n+1}`, their
//! generators written as words in `∂̄_1, ..., ∂̄_{n+2}`, the graph of nonzero homs,
//! and the degree bounds that make the construction work.

use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::check_params;

pub const DEFAULT_VERTEX_CAP: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThimbleIndex(Vec<u32>);

impl ThimbleIndex {
    pub fn new(entries: Vec<u32>, n: u32, a: u32) -> Result<Self> {
        check_params(n, a)?;
        if entries.len() != n as usize + 1 {
            return Err(Error::IndexOutOfRange(format!(
                "thimble index {entries:?} must have {} entries",
                n + 1
            )));
        }
        if let Some(e) = entries.iter().find(|&&e| e < 1 || e > a - 1) {
            return Err(Error::IndexOutOfRange(format!(
                "entry {e} outside [1, {}]",
                a - 1
            )));
        }
        Ok(ThimbleIndex(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// Comma-separated entries; range checks happen in [`ThimbleIndex::new`].
impl FromStr for ThimbleIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad index entry '{t}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ThimbleIndex)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomCase {
    Disjoint,
    Forward,
    Backward,
    Diagonal,
}

/// A product of the symbols `∂̄_l` (one-based); the empty word is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("dbar{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Rank over the loop ring `k[s^{±a}]` and the generator words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDescriptor {
    pub rank: u8,
    pub case: HomCase,
    pub generators: Vec<Word>,
    /// Word length mod 2 for each generator.
    pub parities: Vec<u8>,
}

pub fn hom_descriptor(
    from: &ThimbleIndex,
    to: &ThimbleIndex,
    n: u32,
    a: u32,
) -> Result<HomDescriptor> {
    let from = ThimbleIndex::new(from.0.clone(), n, a)?;
    let to = ThimbleIndex::new(to.0.clone(), n, a)?;
    let top = n as usize + 2;
    let (case, generators) = if from == to {
        (
            HomCase::Diagonal,
            vec![Word(vec![]), Word((1..=top).collect())],
        )
    } else {
        let diffs: Vec<i64> = from
            .0
            .iter()
            .zip(&to.0)
            .map(|(&i, &j)| j as i64 - i as i64)
            .collect();
        if diffs.iter().all(|d| (0..=1).contains(d)) {
            let w = diffs
                .iter()
                .enumerate()
                .filter(|(_, &d)| d == 1)
                .map(|(l, _)| l + 1)
                .collect();
            (HomCase::Forward, vec![Word(w)])
        } else if diffs.iter().all(|d| (-1..=0).contains(d)) {
            let mut w: Vec<usize> = diffs
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != -1)
                .map(|(l, _)| l + 1)
                .collect();
            w.push(top);
            (HomCase::Backward, vec![Word(w)])
        } else {
            (HomCase::Disjoint, vec![])
        }
    };
    Ok(HomDescriptor {
        rank: generators.len() as u8,
        case,
        parities: generators.iter().map(|w| (w.len() % 2) as u8).collect(),
        generators,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomGraphSummary {
    pub n: u32,
    pub a: u32,
    pub vertices: u64,
    /// Unordered pairs `{i, j}`, `i ≠ j`, with a nonzero hom.
    pub edges: u64,
    pub components: u64,
}

fn decode(mut idx: u64, len: usize, base: u64) -> Vec<u32> {
    let mut v = vec![0u32; len];
    for slot in v.iter_mut().rev() {
        *slot = (idx % base) as u32 + 1;
        idx /= base;
    }
    v
}

fn encode(v: &[u32], base: u64) -> u64 {
    v.iter().fold(0, |acc, &e| acc * base + (e as u64 - 1))
}

pub fn hom_graph(n: u32, a: u32) -> Result<HomGraphSummary> {
    hom_graph_with_cap(n, a, DEFAULT_VERTEX_CAP)
}

pub fn hom_graph_with_cap(n: u32, a: u32, cap: u64) -> Result<HomGraphSummary> {
    check_params(n, a)?;
    let len = n as usize + 1;
    let base = a as u64 - 1;
    let vertices = base
        .checked_pow(len as u32)
        .filter(|&v| v <= cap)
        .ok_or_else(|| {
            Error::ResourceExhausted(format!("(a-1)^(n+1) exceeds the vertex cap {cap}"))
        })?;
    let mut uf = UnionFind::<usize>::new(vertices as usize);
    let mut edges = 0u64;
    // Off-diagonal nonzero homs come in forward/backward mirror pairs, so it is
    // enough to walk the forward steps `j = i + δ`, δ ∈ {0,1}^{n+1} \ {0}.
    for idx in 0..vertices {
        let v = decode(idx, len, base);
        for delta in 1u32..(1 << len) {
            let w: Vec<u32> = v
                .iter()
                .enumerate()
                .map(|(l, &e)| e + ((delta >> l) & 1))
                .collect();
            if w.iter().all(|&e| e < a) {
                edges += 1;
                uf.union(idx as usize, encode(&w, base) as usize);
            }
        }
    }
    let mut roots: Vec<usize> = (0..vertices as usize).map(|i| uf.find_mut(i)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(HomGraphSummary {
        n,
        a,
        vertices,
        edges,
        components: roots.len() as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundItem {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBoundReport {
    pub n: u32,
    pub a: u32,
    pub items: Vec<BoundItem>,
    pub all_pass: bool,
}

/// (i) `a > 2n + 1`; (ii) `2 + 2(a-n-2) >= 2n + 2` and `> dim C = 2n + 1`;
/// (iii) degrees `0` and `n` differ modulo `2(a-n-2)`.
pub fn check_degree_bounds(n: u32, a: u32) -> Result<DegreeBoundReport> {
    check_params(n, a)?;
    let (ni, ai) = (n as i64, a as i64);
    let high = ai > 2 * ni + 1;
    let lower = 2 + 2 * (ai - ni - 2);
    let dim_c = 2 * ni + 1;
    let maslov = lower >= 2 * ni + 2 && lower > dim_c;
    let period = 2 * (ai - ni - 2);
    let separated = if period == 0 {
        ni != 0
    } else {
        ni.rem_euclid(period.abs()) != 0
    };
    let items = vec![
        BoundItem {
            name: "high-degree".into(),
            detail: format!("a = {a} > 2n+1 = {}", 2 * n + 1),
            pass: high,
        },
        BoundItem {
            name: "maslov".into(),
            detail: format!(
                "2+2(a-n-2) = {lower} >= 2n+2 = {} and > dim C = {dim_c}",
                2 * n + 2
            ),
            pass: maslov,
        },
        BoundItem {
            name: "grading-separation".into(),
            detail: format!("0 and n = {n} distinct modulo 2(a-n-2) = {period}"),
            pass: separated,
        },
    ];
    let all_pass = items.iter().all(|i| i.pass);
    Ok(DegreeBoundReport {
        n,
        a,
        items,
        all_pass,
    })
}
