//! Local (power-series) quotients `S / I S` at the origin.
//!
//! Two exact routes compute the same basis:
//! * `Truncation` computes reduced Gröbner bases of `I + m^N` for consecutive `N`
//!   until the quotient dimension repeats.
//! * `Operators` works inside `A = k[x]/I` when `I` is zero-dimensional: it
//!   iterates `V_{k+1} = x_1 V_k + ... + x_m V_k` from `V_0 = A`, so `V_k = m^k A`,
//!   and stops once the dimension repeats. The leading monomials of `V_N` are the
//!   extra leading monomials of `I + m^N`.
//!
//! In both cases equal consecutive dimensions force `m^N ⊆ I + m^{N+1}`, hence
//! `m^N ⊆ I S` and the truncated quotient is the local one.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::groebner::{groebner_with_limits, GroebnerBasis, GroebnerLimits, Ideal};
use super::quotient::{standard_monomials, Locality, QuotientBasis};
use crate::error::{Error, Result};
use crate::ring::{Coeff, Monomial, Polynomial};
use crate::symmetry::DiagonalGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalMethod {
    /// Operators when the global quotient is finite, otherwise truncation.
    Auto,
    Operators,
    Truncation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalOptions {
    pub method: LocalMethod,
    /// First truncation order tried by the truncation route.
    pub start: u32,
    /// Largest truncation order allowed before giving up.
    pub cap: u32,
    pub limits: GroebnerLimits,
}

impl Default for LocalOptions {
    fn default() -> Self {
        LocalOptions {
            method: LocalMethod::Truncation,
            start: 1,
            cap: 200,
            limits: GroebnerLimits::default(),
        }
    }
}

impl LocalOptions {
    /// Starts one past the top socle degree of the Fermat Milnor algebra.
    pub fn for_potential(n: u32, a: u32) -> Self {
        let start = (n + 2) * a.saturating_sub(2) + 2;
        LocalOptions {
            start,
            cap: (4 * (a - 1)).max(start + 4),
            ..Default::default()
        }
    }

    pub fn with_method(self, method: LocalMethod) -> Self {
        LocalOptions { method, ..self }
    }
}

/// Entries `((block, position), coefficient)`.
type SparseVec = Vec<((usize, usize), Coeff)>;

enum Reducer {
    Operators {
        global: GroebnerBasis,
        rows: Vec<Polynomial>,
        pivots: Vec<Monomial>,
    },
    Truncation {
        gb: GroebnerBasis,
    },
}

/// A local quotient together with the data needed to reduce into it.
pub struct LocalQuotient {
    pub basis: QuotientBasis,
    reducer: Reducer,
}

impl LocalQuotient {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn truncation(&self) -> u32 {
        match self.basis.locality {
            Locality::Local { truncation } => truncation,
            Locality::Global => 0,
        }
    }

    pub fn method(&self) -> LocalMethod {
        match self.reducer {
            Reducer::Operators { .. } => LocalMethod::Operators,
            Reducer::Truncation { .. } => LocalMethod::Truncation,
        }
    }

    /// Unique representative of `f` in the span of the local standard monomials.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        match &self.reducer {
            Reducer::Truncation { gb } => gb.normal_form(f),
            Reducer::Operators {
                global,
                rows,
                pivots,
            } => {
                let r = global.normal_form(f);
                let mut out = r.clone();
                for (row, pivot) in rows.iter().zip(pivots) {
                    let c = r.coeff(pivot);
                    if !c.is_zero() {
                        out = &out - &row.scale(&c);
                    }
                }
                out
            }
        }
    }
}

pub fn local_quotient_basis(ideal: &Ideal, group: &DiagonalGroup) -> Result<QuotientBasis> {
    Ok(local_quotient(ideal, group, &LocalOptions::default())?.basis)
}

pub fn local_quotient(
    ideal: &Ideal,
    group: &DiagonalGroup,
    opts: &LocalOptions,
) -> Result<LocalQuotient> {
    if group.num_vars != ideal.nvars() {
        return Err(Error::ArityMismatch {
            expected: ideal.nvars(),
            found: group.num_vars,
        });
    }
    match opts.method {
        LocalMethod::Truncation => by_truncation(ideal, group, opts),
        LocalMethod::Operators => by_operators(ideal, group, opts),
        LocalMethod::Auto => match by_operators(ideal, group, opts) {
            Err(Error::NotZeroDimensional(_)) => by_truncation(ideal, group, opts),
            other => other,
        },
    }
}

fn by_truncation(
    ideal: &Ideal,
    group: &DiagonalGroup,
    opts: &LocalOptions,
) -> Result<LocalQuotient> {
    let mut prev: Option<(u32, GroebnerBasis, Vec<Monomial>)> = None;
    for n in opts.start.max(1)..=opts.cap {
        let gb = groebner_with_limits(&ideal.plus_power_of_maximal(n), opts.limits)?;
        let std = standard_monomials(&gb)?;
        if let Some((pn, pgb, pstd)) = prev.take() {
            if pstd.len() == std.len() {
                let basis = QuotientBasis::from_monomials(
                    pstd,
                    ideal.order().clone(),
                    Locality::Local { truncation: pn },
                    group,
                );
                return Ok(LocalQuotient {
                    basis,
                    reducer: Reducer::Truncation { gb: pgb },
                });
            }
        }
        prev = Some((n, gb, std));
    }
    Err(Error::NoStabilization { cap: opts.cap })
}

fn is_homogeneous(ideal: &Ideal, group: &DiagonalGroup) -> bool {
    ideal.generators().iter().all(|g| {
        let mut classes = g.terms().map(|(m, _)| group.monomial_degree(m));
        match classes.next() {
            Some(first) => classes.all(|c| c == first),
            None => true,
        }
    })
}

/// Reduced row echelon form over one block of basis columns; column 0 is the
/// largest monomial of the block, so pivots are leading monomials.
#[derive(Default, Clone)]
struct Echelon {
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn insert(&mut self, mut v: Vec<Coeff>) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let inv = v[p].recip();
        if !inv.is_one() {
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn by_operators(
    ideal: &Ideal,
    group: &DiagonalGroup,
    opts: &LocalOptions,
) -> Result<LocalQuotient> {
    let order = ideal.order().clone();
    let global = groebner_with_limits(ideal, opts.limits)?;
    let mut std = standard_monomials(&global)?;
    let nvars = ideal.nvars();

    // Blocks: character classes when the ideal is graded, else a single block.
    let graded = is_homogeneous(ideal, group);
    let mut block_of_class = HashMap::new();
    let mut blocks: Vec<Vec<Monomial>> = Vec::new();
    std.sort_by(|a, b| order.compare(b, a));
    let mut place: HashMap<Monomial, (usize, usize)> = HashMap::new();
    for m in &std {
        let key = if graded {
            Some(group.monomial_degree(m))
        } else {
            None
        };
        let b = *block_of_class.entry(key).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        place.insert(m.clone(), (b, blocks[b].len()));
        blocks[b].push(m.clone());
    }

    // Multiplication table: x_i * (basis monomial) as a sparse vector.
    let former = global.normal_former();
    let mut table: HashMap<(usize, usize, usize), SparseVec> = HashMap::new();
    for (b, block) in blocks.iter().enumerate() {
        for (j, m) in block.iter().enumerate() {
            for i in 0..nvars {
                let prod = m.mul_var(i);
                let entry = match place.get(&prod) {
                    Some(&pos) => vec![(pos, Coeff::one())],
                    None => former
                        .reduce(&Polynomial::monomial(prod))
                        .terms()
                        .map(|(t, c)| (place[t], c.clone()))
                        .collect(),
                };
                table.insert((b, j, i), entry);
            }
        }
    }

    let mut current: Vec<Echelon> = blocks
        .iter()
        .map(|block| {
            let mut e = Echelon::default();
            for j in 0..block.len() {
                let mut v = vec![Coeff::zero(); block.len()];
                v[j] = Coeff::one();
                e.insert(v);
            }
            e
        })
        .collect();
    let mut rank: usize = std.len();
    let mut level = 0u32;
    loop {
        if level > opts.cap.max(std.len() as u32 + 1) {
            return Err(Error::NoStabilization { cap: opts.cap });
        }
        let mut next: Vec<Echelon> = vec![Echelon::default(); blocks.len()];
        for (b, ech) in current.iter().enumerate() {
            for row in &ech.rows {
                for i in 0..nvars {
                    let mut target: Option<usize> = None;
                    let mut acc: HashMap<usize, Coeff> = HashMap::new();
                    for (j, c) in row.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for ((tb, tj), tc) in &table[&(b, j, i)] {
                            debug_assert!(target.is_none_or(|t| t == *tb));
                            target = Some(*tb);
                            *acc.entry(*tj).or_insert_with(Coeff::zero) += c * tc;
                        }
                    }
                    if let Some(tb) = target {
                        let mut v = vec![Coeff::zero(); blocks[tb].len()];
                        for (tj, c) in acc {
                            v[tj] = c;
                        }
                        next[tb].insert(v);
                    }
                }
            }
        }
        let next_rank: usize = next.iter().map(Echelon::rank).sum();
        if next_rank == rank {
            break;
        }
        rank = next_rank;
        current = next;
        level += 1;
    }

    // `current` is V_level = V_{level+1}.
    let mut local_std = Vec::new();
    let mut rows = Vec::new();
    let mut pivots = Vec::new();
    for (b, ech) in current.iter().enumerate() {
        let mut is_pivot = vec![false; blocks[b].len()];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            is_pivot[p] = true;
            pivots.push(blocks[b][p].clone());
            rows.push(Polynomial::from_terms(
                nvars,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (blocks[b][j].clone(), c.clone())),
            ));
        }
        local_std.extend(
            blocks[b]
                .iter()
                .zip(&is_pivot)
                .filter(|(_, &p)| !p)
                .map(|(m, _)| m.clone()),
        );
    }
    let basis = QuotientBasis::from_monomials(
        local_std,
        order,
        Locality::Local { truncation: level },
        group,
    );
    Ok(LocalQuotient {
        basis,
        reducer: Reducer::Operators {
            global,
            rows,
            pivots,
        },
    })
}
