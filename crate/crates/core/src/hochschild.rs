//! Orbifold Hochschild dimensions of the `G`-equivariant matrix-factorization
//! category of the deformed Fermat potential.
//!
//! The cohomology splits into sectors indexed by `γ ∈ ker χ`. Sector `γ`
//! contributes the part of the local Jacobian ring of the restriction `ŵ_γ` (to
//! the fixed coordinates `I_γ`) lying in the character `uχ - n_γ`, placed in
//! parity `dim N_γ`. Characters act on coordinate functions dually, so in terms
//! of exponent vectors the piece sits in the class of `uχ + Σ_{i ∉ I_γ} e_i`.
//! For `G` the potential is invariant and `χ` is the zero class, so `u` is free
//! and each sector lands in a single parity.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{cached, Cache};
use crate::error::Result;
use crate::ring::{check_params, deformed_potential, MonomialOrder, Polynomial};
use crate::stdbasis::{local_quotient, Ideal, LocalOptions, QuotientBasis};
use crate::symmetry::{
    build_group_with_cap, CharacterClass, DiagonalGroup, GroupElement, GroupVariant,
    DEFAULT_ELEMENT_CAP,
};

pub const REPORT_SCHEMA: u32 = 1;

pub const SHIFT_CONVENTION: &str =
    "piece of degree u*chi - n_gamma with x_i of weight -chi_i; exponent class u*chi + sum_{i not in I} e_i";

#[derive(Clone, Debug)]
pub struct HHOptions {
    pub order: MonomialOrder,
    /// Take the γ ≠ 1 sectors from the closed-form criterion instead of computing them.
    pub trust_sector_criterion: bool,
    /// `None` means the zero class.
    pub chi: Option<CharacterClass>,
    pub local: Option<LocalOptions>,
    pub element_cap: u64,
    pub cache: Option<Cache>,
}

impl Default for HHOptions {
    fn default() -> Self {
        HHOptions {
            order: MonomialOrder::degrevlex(),
            trust_sector_criterion: false,
            chi: None,
            local: None,
            element_cap: DEFAULT_ELEMENT_CAP,
            cache: None,
        }
    }
}

impl HHOptions {
    pub fn fast() -> Self {
        HHOptions {
            trust_sector_criterion: true,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorReport {
    pub gamma: GroupElement,
    /// Fixed coordinates, one-based.
    #[serde(rename = "I")]
    pub fixed: Vec<usize>,
    #[serde(rename = "dimN")]
    pub normal_dim: usize,
    pub shift: CharacterClass,
    pub restricted_potential: Polynomial,
    pub contribution: usize,
    pub parity: u8,
    /// False when the value came from the closed-form criterion.
    pub computed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HHReport {
    pub schema: u32,
    pub n: u32,
    pub a: u32,
    pub hh_even: u64,
    pub hh_odd: u64,
    pub identity_sector_dim: u64,
    pub free_sector_count: u64,
    pub other_sector_total: u64,
    pub high_degree: bool,
    pub trusted_sector_criterion: bool,
    pub order: MonomialOrder,
    pub shift_convention: String,
    pub sectors: Vec<SectorReport>,
}

impl HHReport {
    pub fn total(&self) -> u64 {
        self.hh_even + self.hh_odd
    }
}

/// Data shared by all sectors with the same fixed set.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
struct LocusData {
    restricted: Polynomial,
    contribution: usize,
    computed: bool,
}

fn chi_class(group: &DiagonalGroup, opts: &HHOptions) -> CharacterClass {
    opts.chi.clone().unwrap_or_else(|| group.zero_class())
}

/// Is `γ` in the kernel of the character `chi`?
pub fn in_kernel(group: &DiagonalGroup, chi: &CharacterClass, g: &GroupElement) -> bool {
    let s: u64 = chi
        .representative()
        .iter()
        .zip(g.residues())
        .map(|(&r, &k)| r as u64 * k as u64)
        .sum();
    s.is_multiple_of(group.modulus as u64)
}

/// Classes `u·chi + shift` for all integers `u`.
fn target_classes(
    group: &DiagonalGroup,
    chi: &CharacterClass,
    shift: &CharacterClass,
) -> BTreeSet<CharacterClass> {
    let mut out = BTreeSet::new();
    let mut c = shift.clone();
    while out.insert(c.clone()) {
        c = group.add_classes(&c, chi);
    }
    out
}

/// `x_j` for `j ∉ I` together with `∂ŵ_γ/∂x_i` for `i ∈ I`; its quotient is `Jac(ŵ_γ)` on `S_γ`.
pub fn sector_ideal(
    w: &Polynomial,
    fixed: &[usize],
    order: &MonomialOrder,
) -> Result<(Polynomial, Ideal)> {
    let m = w.nvars();
    let moved: Vec<usize> = (0..m).filter(|i| !fixed.contains(i)).collect();
    let restricted = w.restrict_to_zero(&moved);
    let mut gens: Vec<Polynomial> = moved.iter().map(|&j| Polynomial::var(m, j)).collect();
    gens.extend(fixed.iter().map(|&i| restricted.derivative(i)));
    Ok((restricted.clone(), Ideal::new(m, gens, order.clone())?))
}

fn fixed_key(fixed: &[usize]) -> String {
    fixed
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join("_")
}

/// Local Jacobian-ring basis of the restriction to `fixed` (zero-based), cached.
pub fn sector_quotient(
    n: u32,
    a: u32,
    fixed: &[usize],
    opts: &HHOptions,
) -> Result<(Polynomial, QuotientBasis)> {
    let w = deformed_potential(n, a)?;
    let group = DiagonalGroup {
        variant: GroupVariant::G,
        num_vars: w.nvars(),
        modulus: a,
    };
    let (restricted, ideal) = sector_ideal(&w, fixed, &opts.order)?;
    let local = opts
        .local
        .unwrap_or_else(|| LocalOptions::for_potential(n, a));
    let key = format!(
        "quotient-n{n}-a{a}-I{}-{}-{:?}-N{}",
        fixed_key(fixed),
        opts.order,
        local.method,
        local.start
    );
    let basis = cached(opts.cache.as_ref(), &key, || {
        Ok(local_quotient(&ideal, &group, &local)?.basis)
    })?;
    Ok((restricted, basis))
}

fn locus_data(
    n: u32,
    a: u32,
    group: &DiagonalGroup,
    fixed: &[usize],
    shift: &CharacterClass,
    opts: &HHOptions,
) -> Result<LocusData> {
    let m = group.num_vars;
    let is_identity = fixed.len() == m;
    if opts.trust_sector_criterion && !is_identity {
        let moved: Vec<usize> = (0..m).filter(|i| !fixed.contains(i)).collect();
        return Ok(LocusData {
            restricted: deformed_potential(n, a)?.restrict_to_zero(&moved),
            contribution: usize::from(fixed.is_empty()),
            computed: false,
        });
    }
    let (restricted, basis) = sector_quotient(n, a, fixed, opts)?;
    let chi = chi_class(group, opts);
    let contribution = target_classes(group, &chi, shift)
        .iter()
        .map(|c| basis.dim_in(c))
        .sum();
    Ok(LocusData {
        restricted,
        contribution,
        computed: true,
    })
}

fn report_for(group: &DiagonalGroup, g: &GroupElement, data: &LocusData) -> SectorReport {
    let normal_dim = group.normal_dim(g);
    SectorReport {
        gamma: g.clone(),
        fixed: group.fixed_coords(g).into_iter().map(|i| i + 1).collect(),
        normal_dim,
        shift: group.sector_shift(g),
        restricted_potential: data.restricted.clone(),
        contribution: data.contribution,
        parity: (normal_dim % 2) as u8,
        computed: data.computed,
    }
}

/// The contribution of a single sector, computed from scratch.
pub fn sector_contribution(
    g: &GroupElement,
    n: u32,
    a: u32,
    opts: &HHOptions,
) -> Result<SectorReport> {
    let group = build_group_with_cap(GroupVariant::G, n, a, opts.element_cap)?;
    let g = group.element(g.residues().to_vec())?;
    let chi = chi_class(&group, opts);
    let fixed = group.fixed_coords(&g);
    let shift = group.sector_shift(&g);
    let mut data = locus_data(n, a, &group, &fixed, &shift, opts)?;
    if !in_kernel(&group, &chi, &g) {
        data.contribution = 0;
    }
    Ok(report_for(&group, &g, &data))
}

/// Sums all sector contributions into even and odd Hochschild dimensions.
pub fn hochschild_dimensions(n: u32, a: u32, opts: &HHOptions) -> Result<HHReport> {
    check_params(n, a)?;
    let group = build_group_with_cap(GroupVariant::G, n, a, opts.element_cap)?;
    let m = group.num_vars;
    let chi = chi_class(&group, opts);

    // Fixed sets that occur: the moved set has size 0 or at least 2.
    let loci: Vec<Vec<usize>> = (0u32..1 << m)
        .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|fixed| m - fixed.len() != 1)
        .collect();
    let computed: Vec<LocusData> = loci
        .par_iter()
        .map(|fixed| {
            let moved: Vec<i64> = (0..m).map(|i| i64::from(!fixed.contains(&i))).collect();
            locus_data(n, a, &group, fixed, &group.class_of(&moved), opts)
        })
        .collect::<Result<_>>()?;
    let by_locus: BTreeMap<Vec<usize>, LocusData> = loci.into_iter().zip(computed).collect();

    let total = group.order().expect("bounded by element cap");
    let sectors: Vec<SectorReport> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let g = group.element_at(idx);
            let mut data = by_locus[&group.fixed_coords(&g)].clone();
            if !in_kernel(&group, &chi, &g) {
                data.contribution = 0;
            }
            report_for(&group, &g, &data)
        })
        .collect();

    let (mut even, mut odd) = (0u64, 0u64);
    let (mut identity, mut free, mut other) = (0u64, 0u64, 0u64);
    for s in &sectors {
        let c = s.contribution as u64;
        if s.parity == 0 {
            even += c;
        } else {
            odd += c;
        }
        if s.gamma.is_identity() {
            identity += c;
        } else if s.fixed.is_empty() {
            free += c;
        } else {
            other += c;
        }
    }
    Ok(HHReport {
        schema: REPORT_SCHEMA,
        n,
        a,
        hh_even: even,
        hh_odd: odd,
        identity_sector_dim: identity,
        free_sector_count: free,
        other_sector_total: other,
        high_degree: a > 2 * n + 1,
        trusted_sector_criterion: opts.trust_sector_criterion,
        order: opts.order.clone(),
        shift_convention: SHIFT_CONVENTION.to_string(),
        sectors,
    })
}
