use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial};

/// An ideal given by generators, together with the order used to compute with it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl Ideal {
    /// Drops zero generators and exact duplicates.
    pub fn new(nvars: usize, generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let mut gens: Vec<Polynomial> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Ideal {
            nvars,
            generators: gens,
            order,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            order,
            ..self.clone()
        }
    }

    /// `self + (all monomials of degree d)`.
    pub fn plus_power_of_maximal(&self, d: u32) -> Ideal {
        let mut gens = self.generators.clone();
        for m in monomials_of_degree(self.nvars, d) {
            gens.push(Polynomial::monomial(m));
        }
        Ideal {
            nvars: self.nvars,
            generators: gens,
            order: self.order.clone(),
        }
    }
}

pub(crate) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial::from_exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(&mut Vec::with_capacity(nvars), d, nvars, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerLimits {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_basis: 20_000,
            max_degree: 400,
        }
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

/// Terms in increasing order; the leading term is last.
type Terms = Vec<(Monomial, Coeff)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t = p.sorted_terms(order);
    t.reverse();
    t
}

fn from_terms(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

/// `f - c * shift * g`, both increasing; `f` and `g` must not contain their cancelled lead.
fn sub_scaled(
    order: &MonomialOrder,
    f: &[(Monomial, Coeff)],
    c: &Coeff,
    shift: &Monomial,
    g: &[(Monomial, Coeff)],
) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        if j == g.len() {
            out.push(f[i].clone());
            i += 1;
            continue;
        }
        let gm = g[j].0.mul(shift);
        if i == f.len() {
            out.push((gm, -(c * &g[j].1)));
            j += 1;
            continue;
        }
        match order.compare(&f[i].0, &gm) {
            Ordering::Less => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &f[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

struct Elem {
    lead: Monomial,
    /// Monic, increasing, leading term included as the last entry.
    terms: Terms,
}

impl Elem {
    fn new(mut terms: Terms) -> Option<Elem> {
        let (lead, lc) = terms.last()?.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            for t in terms.iter_mut() {
                t.1 = &t.1 * &inv;
            }
        }
        Some(Elem { lead, terms })
    }

    fn tail(&self) -> &[(Monomial, Coeff)] {
        &self.terms[..self.terms.len() - 1]
    }
}

/// Fully reduces `f` (increasing terms) by the elements selected by `active`.
fn reduce_terms<'a>(
    order: &MonomialOrder,
    mut f: Terms,
    basis: impl Fn(&Monomial) -> Option<&'a Elem>,
) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((lm, lc)) = f.pop() {
        match basis(&lm) {
            Some(g) => {
                let shift = lm.checked_div(&g.lead).expect("divisor");
                f = sub_scaled(order, &f, &lc, &shift, g.tail());
            }
            None => rem.push((lm, lc)),
        }
    }
    rem.reverse();
    rem
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis by Buchberger's algorithm with the Gebauer–Möller
/// criteria and the normal selection strategy.
pub fn groebner(ideal: &Ideal) -> Result<GroebnerBasis> {
    groebner_with_limits(ideal, GroebnerLimits::default())
}

pub fn groebner_with_limits(ideal: &Ideal, limits: GroebnerLimits) -> Result<GroebnerBasis> {
    let order = ideal.order().clone();
    let nvars = ideal.nvars();
    let mut elems: Vec<Elem> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // Seed with the generators, smallest leading monomial first so monomial
    // generators of large degree are inserted after the lower-degree ones.
    let mut seeds: Vec<Terms> = ideal
        .generators()
        .iter()
        .map(|g| to_terms(g, &order))
        .collect();
    seeds.sort_by(|a, b| order.compare(&a.last().unwrap().0, &b.last().unwrap().0));

    let find = |elems: &[Elem], active: &[bool], m: &Monomial| -> Option<usize> {
        (0..elems.len()).find(|&k| active[k] && elems[k].lead.divides(m))
    };

    let mut queue: std::collections::VecDeque<Terms> = seeds.into();
    loop {
        // Insert pending polynomials after reduction.
        while let Some(t) = queue.pop_front() {
            let reduced = {
                let elems_ref = &elems;
                let active_ref = &active;
                reduce_terms(&order, t, |m| {
                    find(elems_ref, active_ref, m).map(|k| &elems_ref[k])
                })
            };
            if let Some(h) = Elem::new(reduced) {
                if h.lead.degree() > limits.max_degree {
                    return Err(Error::ResourceExhausted(format!(
                        "Gröbner element of degree {} exceeds limit {}",
                        h.lead.degree(),
                        limits.max_degree
                    )));
                }
                update(&mut elems, &mut active, &mut pairs, h);
                if active.iter().filter(|&&a| a).count() > limits.max_basis {
                    return Err(Error::ResourceExhausted(format!(
                        "Gröbner basis exceeds {} elements",
                        limits.max_basis
                    )));
                }
            }
        }
        // Normal strategy: smallest lcm first.
        let Some(best) =
            (0..pairs.len()).min_by(|&x, &y| order.compare(&pairs[x].lcm, &pairs[y].lcm))
        else {
            break;
        };
        let p = pairs.swap_remove(best);
        let (gi, gj) = (&elems[p.i], &elems[p.j]);
        if gi.terms.len() == 1 && gj.terms.len() == 1 {
            continue;
        }
        let si = p.lcm.checked_div(&gi.lead).unwrap();
        let sj = p.lcm.checked_div(&gj.lead).unwrap();
        let left: Terms = gi
            .tail()
            .iter()
            .map(|(m, c)| (m.mul(&si), c.clone()))
            .collect();
        let s = sub_scaled(&order, &left, &Coeff::one(), &sj, gj.tail());
        if !s.is_empty() {
            queue.push_back(s);
        }
    }

    // Minimalize then interreduce.
    let mut keep: Vec<usize> = Vec::new();
    for k in 0..elems.len() {
        if !active[k] {
            continue;
        }
        let dominated = (0..elems.len()).any(|o| {
            o != k
                && active[o]
                && elems[o].lead.divides(&elems[k].lead)
                && (elems[o].lead != elems[k].lead || o < k)
        });
        if !dominated {
            keep.push(k);
        }
    }
    let minimal: Vec<&Elem> = keep.iter().map(|&k| &elems[k]).collect();
    let mut polys = Vec::with_capacity(minimal.len());
    for (idx, e) in minimal.iter().enumerate() {
        let tail = reduce_terms(&order, e.tail().to_vec(), |m| {
            minimal
                .iter()
                .enumerate()
                .find(|(o, g)| *o != idx && g.lead.divides(m))
                .map(|(_, g)| *g)
        });
        let mut terms = tail;
        terms.push((e.lead.clone(), Coeff::one()));
        polys.push(from_terms(nvars, terms));
    }
    polys.sort_by(|a, b| {
        order.compare(
            a.leading_term(&order).unwrap().0,
            b.leading_term(&order).unwrap().0,
        )
    });
    Ok(GroebnerBasis {
        nvars,
        order,
        polys,
    })
}

/// Gebauer–Möller update with the new element `h`.
fn update(elems: &mut Vec<Elem>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Elem) {
    let hk = elems.len();
    let hl = h.lead.clone();
    // Candidate pairs (g, h).
    let cands: Vec<(usize, Monomial, bool)> = (0..elems.len())
        .filter(|&k| active[k])
        .map(|k| {
            let l = elems[k].lead.lcm(&hl);
            let coprime = elems[k].lead.is_coprime(&hl);
            (k, l, coprime)
        })
        .collect();
    // Chain criterion within the new pairs.
    let mut d: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, c) in cands.iter().enumerate() {
        if c.2 {
            d.push(c.clone());
            continue;
        }
        let dominated_later = cands[idx + 1..].iter().any(|o| o.1.divides(&c.1));
        let dominated_kept = d.iter().any(|o| o.1.divides(&c.1));
        if !dominated_later && !dominated_kept {
            d.push(c.clone());
        }
    }
    // Drop equal-lcm duplicates among the survivors in a deterministic way,
    // preferring coprime representatives (which are then discarded).
    let mut e: Vec<(usize, Monomial)> = Vec::new();
    for c in &d {
        if c.2 {
            continue;
        }
        if d.iter().any(|o| o.1 == c.1 && o.2) {
            continue;
        }
        if e.iter().any(|o| o.1 == c.1) {
            continue;
        }
        e.push((c.0, c.1.clone()));
    }
    // Old pairs made redundant by h.
    pairs.retain(|p| {
        !(hl.divides(&p.lcm)
            && elems[p.i].lead.lcm(&hl) != p.lcm
            && elems[p.j].lead.lcm(&hl) != p.lcm)
    });
    for (k, l) in e {
        pairs.push(Pair {
            i: k,
            j: hk,
            lcm: l,
        });
    }
    for k in 0..elems.len() {
        if active[k] && hl.divides(&elems[k].lead) {
            active[k] = false;
        }
    }
    elems.push(h);
    active.push(true);
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_term(&self.order).unwrap().0.clone())
            .collect()
    }

    /// Is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(Monomial::is_one)
    }

    fn elems(&self) -> Vec<Elem> {
        self.polys
            .iter()
            .map(|p| Elem::new(to_terms(p, &self.order)).unwrap())
            .collect()
    }

    /// Complete reduction of `f`; no term of the result is divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "polynomial arity");
        let elems = self.elems();
        self.normal_form_with(&elems, f)
    }

    fn normal_form_with(&self, elems: &[Elem], f: &Polynomial) -> Polynomial {
        let t = reduce_terms(&self.order, to_terms(f, &self.order), |m| {
            elems.iter().find(|e| e.lead.divides(m))
        });
        from_terms(self.nvars, t)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let elems = self.elems();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let l = elems[i].lead.lcm(&elems[j].lead);
                let si = l.checked_div(&elems[i].lead).unwrap();
                let sj = l.checked_div(&elems[j].lead).unwrap();
                let left: Terms = elems[i]
                    .tail()
                    .iter()
                    .map(|(m, c)| (m.mul(&si), c.clone()))
                    .collect();
                let s = sub_scaled(&self.order, &left, &Coeff::one(), &sj, elems[j].tail());
                let r = reduce_terms(&self.order, s, |m| elems.iter().find(|e| e.lead.divides(m)));
                if !r.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Monic, and no term of any element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.polys.iter().enumerate().all(|(i, p)| {
            p.leading_term(&self.order).unwrap().1.is_one()
                && p.terms().all(|(m, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }
}

/// Reusable reducer for many normal-form computations against one basis.
pub struct NormalFormer<'a> {
    gb: &'a GroebnerBasis,
    elems: Vec<Elem>,
}

impl NormalFormer<'_> {
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form_with(&self.elems, f)
    }
}

impl GroebnerBasis {
    pub fn normal_former(&self) -> NormalFormer<'_> {
        NormalFormer {
            gb: self,
            elems: self.elems(),
        }
    }
}

/// Normal form of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}
