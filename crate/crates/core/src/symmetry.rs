//! Finite diagonal symmetry groups of the potentials and their character lattices.
//!
//! Both groups are realised as `{k in (Z/a)^m : k_1 + ... + k_m = 0 mod a}`, the
//! element `k` acting by `x_i -> exp(2 pi sqrt(-1) k_i / a) x_i`. For `G` we have
//! `m = n + 2`; for `H` the extra coordinate `t_0` is prepended, so `m = n + 3`.
//! Characters of either group are exponent vectors modulo `<a e_i, (1,...,1)>`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{check_params, Monomial};

pub const DEFAULT_ELEMENT_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupVariant {
    G,
    H,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalGroup {
    pub variant: GroupVariant,
    pub num_vars: usize,
    pub modulus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement {
    residues: Vec<u32>,
}

/// Canonical representative of a character: first coordinate 0, entries in `[0, a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharacterClass(Vec<u32>);

impl CharacterClass {
    pub fn representative(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn is_identity(&self) -> bool {
        self.residues.iter().all(|&k| k == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.residues)
    }
}

/// `G` (on `n + 2` variables) or `H` (on `n + 3`) for the degree-`a` potential.
pub fn build_group(variant: GroupVariant, n: u32, a: u32) -> Result<DiagonalGroup> {
    build_group_with_cap(variant, n, a, DEFAULT_ELEMENT_CAP)
}

pub fn build_group_with_cap(
    variant: GroupVariant,
    n: u32,
    a: u32,
    cap: u64,
) -> Result<DiagonalGroup> {
    check_params(n, a)?;
    let num_vars = match variant {
        GroupVariant::G => n as usize + 2,
        GroupVariant::H => n as usize + 3,
    };
    let group = DiagonalGroup {
        variant,
        num_vars,
        modulus: a,
    };
    match group.order() {
        Some(size) if size <= cap => Ok(group),
        size => Err(Error::ResourceExhausted(format!(
            "group of order {} exceeds the element cap {cap}",
            size.map_or_else(|| "> 2^64".to_string(), |s| s.to_string())
        ))),
    }
}

impl DiagonalGroup {
    /// A zero-sum diagonal group on `num_vars` coordinates with no range checks,
    /// used to grade auxiliary rings in tests and small examples.
    pub fn zero_sum(num_vars: usize, modulus: u32) -> Self {
        assert!(num_vars >= 1 && modulus >= 1);
        DiagonalGroup {
            variant: GroupVariant::G,
            num_vars,
            modulus,
        }
    }

    /// `a^(m-1)`, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        (self.modulus as u64).checked_pow(self.num_vars as u32 - 1)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.num_vars],
        }
    }

    /// Validates and wraps a residue vector.
    pub fn element(&self, residues: Vec<u32>) -> Result<GroupElement> {
        if residues.len() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: residues.len(),
            });
        }
        let a = self.modulus as u64;
        if residues.iter().any(|&k| k >= self.modulus) {
            return Err(Error::InvalidParameters(format!(
                "residues {residues:?} not reduced mod {a}"
            )));
        }
        if residues.iter().map(|&k| k as u64).sum::<u64>() % a != 0 {
            return Err(Error::InvalidParameters(format!(
                "residues {residues:?} do not sum to 0 mod {a}"
            )));
        }
        Ok(GroupElement { residues })
    }

    /// The element with enumeration index `idx`: the first `m - 1` residues are
    /// the base-`a` digits of `idx` (most significant first), the last one closes the sum.
    pub fn element_at(&self, idx: u64) -> GroupElement {
        let a = self.modulus as u64;
        let m = self.num_vars;
        let mut residues = vec![0u32; m];
        let mut rest = idx;
        for slot in residues[..m - 1].iter_mut().rev() {
            *slot = (rest % a) as u32;
            rest /= a;
        }
        let s: u64 = residues.iter().map(|&k| k as u64).sum();
        residues[m - 1] = ((a - s % a) % a) as u32;
        GroupElement { residues }
    }

    /// Deterministic enumeration of all elements.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let total = self.order().expect("group order fits in u64");
        (0..total).map(move |i| self.element_at(i))
    }

    pub fn compose(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement {
            residues: g
                .residues
                .iter()
                .zip(&h.residues)
                .map(|(x, y)| (x + y) % self.modulus)
                .collect(),
        }
    }

    /// Zero-based indices `i` with `k_i = 0`.
    pub fn fixed_coords(&self, g: &GroupElement) -> Vec<usize> {
        g.residues
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Codimension of the fixed locus.
    pub fn normal_dim(&self, g: &GroupElement) -> usize {
        self.num_vars - self.fixed_coords(g).len()
    }

    /// Class of `sum_{i not fixed} e_i`.
    pub fn sector_shift(&self, g: &GroupElement) -> CharacterClass {
        let v: Vec<i64> = g.residues.iter().map(|&k| i64::from(k != 0)).collect();
        self.class_of(&v)
    }

    pub fn class_of(&self, exps: &[i64]) -> CharacterClass {
        assert_eq!(exps.len(), self.num_vars, "exponent vector arity");
        let a = self.modulus as i64;
        let base = exps[0];
        CharacterClass(
            exps.iter()
                .map(|&e| (e - base).rem_euclid(a) as u32)
                .collect(),
        )
    }

    pub fn monomial_degree(&self, m: &Monomial) -> CharacterClass {
        let v: Vec<i64> = m.exponents().iter().map(|&e| e as i64).collect();
        self.class_of(&v)
    }

    pub fn zero_class(&self) -> CharacterClass {
        CharacterClass(vec![0; self.num_vars])
    }

    pub fn add_classes(&self, x: &CharacterClass, y: &CharacterClass) -> CharacterClass {
        let v: Vec<i64> = x.0.iter().zip(&y.0).map(|(p, q)| (p + q) as i64).collect();
        self.class_of(&v)
    }

    pub fn neg_class(&self, x: &CharacterClass) -> CharacterClass {
        let v: Vec<i64> = x.0.iter().map(|&p| -(p as i64)).collect();
        self.class_of(&v)
    }

    /// The class of `e_i` (zero-based).
    pub fn basis_class(&self, i: usize) -> CharacterClass {
        let mut v = vec![0i64; self.num_vars];
        v[i] = 1;
        self.class_of(&v)
    }
}

/// Number of residue vectors in `[1, a-1]^m` summing to 0 mod `a`, by the
/// roots-of-unity filter: `f(1) = a - 1` and `f(w) = -1` for the other `a`-th roots.
pub fn free_sector_count(num_vars: u32, a: u32) -> BigInt {
    let a_big = BigInt::from(a);
    let top = num_traits::pow(BigInt::from(a) - 1, num_vars as usize);
    let sign = if num_vars.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    (top + (&a_big - 1) * sign) / a_big
}
