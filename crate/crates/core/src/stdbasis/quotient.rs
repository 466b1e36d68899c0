use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::groebner::{groebner, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder};
use crate::symmetry::{CharacterClass, DiagonalGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Locality {
    Global,
    /// Stabilized quotient by `I + m^truncation`.
    Local {
        truncation: u32,
    },
}

/// Standard monomials of a finite-dimensional quotient with their character-graded counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientBasis {
    pub order: MonomialOrder,
    pub locality: Locality,
    /// Sorted increasingly in `order`.
    pub standard: Vec<Monomial>,
    #[serde(serialize_with = "ser_graded", deserialize_with = "de_graded")]
    pub graded_dims: BTreeMap<CharacterClass, usize>,
}

fn ser_graded<S: Serializer>(m: &BTreeMap<CharacterClass, usize>, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        class: &'a CharacterClass,
        dim: usize,
    }
    s.collect_seq(m.iter().map(|(class, &dim)| Entry { class, dim }))
}

fn de_graded<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<CharacterClass, usize>, D::Error> {
    #[derive(Deserialize)]
    struct Entry {
        class: CharacterClass,
        dim: usize,
    }
    Ok(Vec::<Entry>::deserialize(d)?
        .into_iter()
        .map(|e| (e.class, e.dim))
        .collect())
}

impl QuotientBasis {
    pub(crate) fn from_monomials(
        mut standard: Vec<Monomial>,
        order: MonomialOrder,
        locality: Locality,
        group: &DiagonalGroup,
    ) -> Self {
        standard.sort_by(|a, b| order.compare(a, b));
        let mut graded_dims = BTreeMap::new();
        for m in &standard {
            *graded_dims.entry(group.monomial_degree(m)).or_insert(0) += 1;
        }
        QuotientBasis {
            order,
            locality,
            standard,
            graded_dims,
        }
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn dim_in(&self, class: &CharacterClass) -> usize {
        self.graded_dims.get(class).copied().unwrap_or(0)
    }

    pub fn monomials_in<'a>(
        &'a self,
        class: &'a CharacterClass,
        group: &'a DiagonalGroup,
    ) -> impl Iterator<Item = &'a Monomial> + 'a {
        self.standard
            .iter()
            .filter(move |m| &group.monomial_degree(m) == class)
    }

    /// Counts of standard monomials by total degree.
    pub fn degree_profile(&self) -> Vec<usize> {
        let top = self
            .standard
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0) as usize;
        let mut v = vec![0; top + 1];
        if self.standard.is_empty() {
            return Vec::new();
        }
        for m in &self.standard {
            v[m.degree() as usize] += 1;
        }
        v
    }
}

/// Standard monomials of a zero-dimensional Gröbner basis.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let nvars = gb.nvars();
    let leads = gb.leading_monomials();
    if leads.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    let mut bounds = vec![u32::MAX; nvars];
    for l in &leads {
        if let Some((i, e)) = l.pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if let Some(i) = bounds.iter().position(|&b| b == u32::MAX) {
        return Err(Error::NotZeroDimensional(i + 1));
    }
    // Depth-first walk of the order ideal: children of a standard monomial are
    // only visited through their largest variable index so each is produced once.
    let mut out = Vec::new();
    let mut stack = vec![(Monomial::one(nvars), 0usize)];
    while let Some((m, first)) = stack.pop() {
        if leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        for i in first..nvars {
            if m.exponents()[i] + 1 < bounds[i] {
                stack.push((m.mul_var(i), i));
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Basis of `k[x]/I` for a zero-dimensional ideal.
pub fn quotient_basis(ideal: &Ideal, group: &DiagonalGroup) -> Result<QuotientBasis> {
    let gb = groebner(ideal)?;
    quotient_basis_from(&gb, group)
}

pub fn quotient_basis_from(gb: &GroebnerBasis, group: &DiagonalGroup) -> Result<QuotientBasis> {
    if group.num_vars != gb.nvars() {
        return Err(Error::ArityMismatch {
            expected: gb.nvars(),
            found: group.num_vars,
        });
    }
    let std = standard_monomials(gb)?;
    Ok(QuotientBasis::from_monomials(
        std,
        gb.order().clone(),
        Locality::Global,
        group,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{OrderKind, Polynomial};

    fn ideal(gens: &[&str], n: usize, order: MonomialOrder) -> Ideal {
        Ideal::new(
            n,
            gens.iter()
                .map(|g| Polynomial::parse(g, n).unwrap())
                .collect(),
            order,
        )
        .unwrap()
    }

    #[test]
    fn one_variable_quotients() {
        let g = DiagonalGroup::zero_sum(1, 1);
        let q = quotient_basis(&ideal(&["x1"], 1, MonomialOrder::default()), &g).unwrap();
        assert_eq!(q.standard, vec![Monomial::one(1)]);
        for a in 3..9u32 {
            let gen = format!("{a}*x1^{}", a - 1);
            let q = quotient_basis(&ideal(&[&gen], 1, MonomialOrder::default()), &g).unwrap();
            assert_eq!(q.dim(), a as usize - 1);
            assert_eq!(q.standard.last().unwrap().degree(), a - 2);
        }
    }

    #[test]
    fn fermat_jacobian_box() {
        let g = DiagonalGroup::zero_sum(4, 6);
        let gens: Vec<String> = (1..=4).map(|i| format!("6*x{i}^5")).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let q = quotient_basis(&ideal(&refs, 4, MonomialOrder::default()), &g).unwrap();
        assert_eq!(q.dim(), 625);
        assert!(q
            .standard
            .iter()
            .all(|m| m.exponents().iter().all(|&e| e <= 4)));
        assert_eq!(q.graded_dims.values().sum::<usize>(), 625);
    }

    #[test]
    fn positive_dimensional_is_rejected() {
        let g = DiagonalGroup::zero_sum(2, 2);
        let err = quotient_basis(&ideal(&["x1^2"], 2, MonomialOrder::default()), &g).unwrap_err();
        assert!(matches!(err, Error::NotZeroDimensional(2)));
    }

    #[test]
    fn dimension_is_order_independent() {
        let g = DiagonalGroup::zero_sum(3, 3);
        let gens = [
            "x1^3 + -1/1*x2*x3",
            "x2^3 + -1/1*x1*x3",
            "x3^3 + -1/1*x1*x2",
        ];
        let dims: Vec<usize> = OrderKind::ALL
            .iter()
            .map(|&k| {
                quotient_basis(&ideal(&gens, 3, MonomialOrder::new(k)), &g)
                    .unwrap()
                    .dim()
            })
            .collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "{dims:?}");
        // Bezout: three cubics with no common zero at infinity
        assert_eq!(dims[0], 27);
    }

    #[test]
    fn serde_round_trip_is_stable() {
        let g = DiagonalGroup::zero_sum(2, 3);
        let q = quotient_basis(
            &ideal(&["x1^2", "x2^3 + x1"], 2, MonomialOrder::default()),
            &g,
        )
        .unwrap();
        let text = serde_json::to_string(&q).unwrap();
        let back: QuotientBasis = serde_json::from_str(&text).unwrap();
        assert_eq!(back, q);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
