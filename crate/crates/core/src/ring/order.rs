use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            "deglex" | "grlex" => Ok(OrderKind::DegLex),
            "lex" => Ok(OrderKind::Lex),
            other => Err(Error::Parse(format!("unknown monomial order '{other}'"))),
        }
    }
}

/// A monomial order together with the priority of the variables.
///
/// `perm[k]` is the variable compared at position `k`; with no permutation the
/// natural order `x_1 > x_2 > ... > x_m` is used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, perm: None }
    }

    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidParameters(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder {
            kind,
            perm: Some(perm),
        })
    }

    pub fn degrevlex() -> Self {
        Self::new(OrderKind::DegRevLex)
    }

    pub fn deglex() -> Self {
        Self::new(OrderKind::DegLex)
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex)
    }

    #[inline]
    fn var_at(&self, k: usize) -> usize {
        match &self.perm {
            Some(p) => p[k],
            None => k,
        }
    }

    /// Global orders have `1` as their minimal monomial. All three kinds are global.
    pub fn is_global(&self) -> bool {
        true
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), eb.len());
        let m = ea.len();
        match self.kind {
            OrderKind::Lex => {
                for k in 0..m {
                    let v = self.var_at(k);
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| {
                for k in 0..m {
                    let v = self.var_at(k);
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for k in (0..m).rev() {
                    let v = self.var_at(k);
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.perm {
            None => write!(f, "{}", self.kind),
            Some(p) => write!(f, "{}{:?}", self.kind, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn textbook_comparisons() {
        // x1^2 x2 vs x1 x3^2 (degree 3 each)
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 2]);
        assert_eq!(MonomialOrder::lex().compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::deglex().compare(&a, &b), Ordering::Greater);
        assert_eq!(
            MonomialOrder::degrevlex().compare(&a, &b),
            Ordering::Greater
        );
        // x1 x2 x3 vs x1^2 x3... degrevlex distinguishes deglex
        let c = m(&[1, 2, 0]);
        let d = m(&[2, 0, 1]);
        assert_eq!(MonomialOrder::deglex().compare(&c, &d), Ordering::Less);
        assert_eq!(
            MonomialOrder::degrevlex().compare(&c, &d),
            Ordering::Greater
        );
        // lex is not degree compatible
        assert_eq!(
            MonomialOrder::lex().compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn permutation_changes_priority() {
        let o = MonomialOrder::with_permutation(OrderKind::Lex, vec![2, 0, 1]).unwrap();
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        assert!(MonomialOrder::with_permutation(OrderKind::Lex, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn parse_names() {
        for k in OrderKind::ALL {
            assert_eq!(k.name().parse::<OrderKind>().unwrap(), k);
        }
        assert!("revlex".parse::<OrderKind>().is_err());
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(a in mono3(), b in mono3(), w in mono3(), k in 0usize..3) {
            let order = MonomialOrder::new(OrderKind::ALL[k]);
            let ab = order.compare(&a, &b);
            // totality: equal only when identical
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(order.compare(&b, &a), ab.reverse());
            prop_assert_eq!(order.compare(&a.mul(&w), &b.mul(&w)), ab);
            // 1 is minimal
            prop_assert_ne!(order.compare(&Monomial::one(3), &a), Ordering::Greater);
        }
    }
}
