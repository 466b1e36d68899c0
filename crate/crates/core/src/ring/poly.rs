use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial with exact rational coefficients in a fixed number of variables.
///
/// Terms are kept in a map with no zero coefficients; the map's key order is a
/// storage detail, use [`Polynomial::sorted_terms`] for a monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Coeff::one(), Monomial::var(nvars, i))
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Coeff::one(), m)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms sorted in decreasing order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, t: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(t), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_i` (zero-based).
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::from_exponents(exps), c * rat(e as i64));
        }
        out
    }

    /// Sets every variable listed in `vars` to zero.
    pub fn restrict_to_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponents()[v] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars);
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Canonical text: terms in decreasing order, every coefficient written as `p/q`.
    pub fn to_canonical_string(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.sorted_terms(order)
            .iter()
            .map(|(m, c)| {
                let coeff = format!("{}/{}", c.numer(), c.denom());
                if m.is_one() {
                    coeff
                } else {
                    format!("{coeff}*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the canonical text form (and the looser `c*x1^2` variant).
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let text = text.trim();
        let mut p = Polynomial::zero(nvars);
        if text == "0" {
            return Ok(p);
        }
        for raw in text.split(" + ") {
            let (coeff_text, mono_text) = match raw.split_once('*') {
                Some((c, m)) if !c.starts_with('x') => (c, Some(m)),
                _ if raw.starts_with('x') => ("1", Some(raw)),
                _ => (raw, None),
            };
            let coeff = parse_coeff(coeff_text)?;
            let mut exps = vec![0u32; nvars];
            if let Some(mt) = mono_text {
                for factor in mt.split('*') {
                    let (v, e) = match factor.split_once('^') {
                        Some((v, e)) => (
                            v,
                            e.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?,
                        ),
                        None => (factor, 1),
                    };
                    let idx: usize = v
                        .strip_prefix('x')
                        .and_then(|s| s.parse().ok())
                        .filter(|&i: &usize| i >= 1 && i <= nvars)
                        .ok_or_else(|| Error::Parse(format!("bad variable '{v}'")))?;
                    exps[idx - 1] += e;
                }
            }
            p.add_term(Monomial::from_exponents(exps), coeff);
        }
        Ok(p)
    }
}

fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad coefficient '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self
            .sorted_terms(&MonomialOrder::degrevlex())
            .iter()
            .enumerate()
        {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            nvars: usize,
            text: &'a str,
        }
        let text = self.to_canonical_string(&MonomialOrder::degrevlex());
        Repr {
            nvars: self.nvars,
            text: &text,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            nvars: usize,
            text: String,
        }
        let r = Repr::deserialize(d)?;
        Polynomial::parse(&r.text, r.nvars).map_err(serde::de::Error::custom)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn binomial_coefficients_are_exact() {
        let p = &x(1, 0) + &Polynomial::one(1);
        let mut pow = Polynomial::one(1);
        let mut binom: Vec<BigInt> = vec![BigInt::one()];
        for k in 1..=20u32 {
            pow = &pow * &p;
            let mut next = vec![BigInt::one(); k as usize + 1];
            for j in 1..k as usize {
                next[j] = &binom[j - 1] + &binom[j];
            }
            binom = next;
            for (j, b) in binom.iter().enumerate() {
                let m = Monomial::from_exponents(vec![j as u32]);
                assert_eq!(pow.coeff(&m), BigRational::from_integer(b.clone()));
            }
        }
        // C(20,10)
        assert_eq!(pow.coeff(&Monomial::from_exponents(vec![10])), rat(184756));
    }

    #[test]
    fn derivatives() {
        let f = x(1, 0).pow(2);
        assert_eq!(f.derivative(0), x(1, 0).scale(&rat(2)));
        let one = Polynomial::one(3);
        assert!((0..3).all(|i| one.derivative(i).is_zero()));
    }

    #[test]
    fn canonical_text_round_trip() {
        let f = Polynomial::parse("6/1*x1^5 + -1/1*x2*x3*x4", 4).unwrap();
        assert_eq!(
            f.to_canonical_string(&MonomialOrder::degrevlex()),
            "6/1*x1^5 + -1/1*x2*x3*x4"
        );
        assert_eq!(f.to_string(), "6*x1^5 - x2*x3*x4");
        let g = Polynomial::parse("1/3 + x1", 2).unwrap();
        assert_eq!(g.to_canonical_string(&MonomialOrder::lex()), "1/1*x1 + 1/3");
        assert!(Polynomial::parse("x9", 2).is_err());
        assert!(Polynomial::parse("1/0", 2).is_err());
        assert!(Polynomial::parse("0", 2).unwrap().is_zero());
    }

    #[test]
    fn restriction_drops_terms() {
        let f = Polynomial::parse("x1^3 + x2^3 + -1/1*x1*x2", 2).unwrap();
        assert_eq!(
            f.restrict_to_zero(&[1]),
            Polynomial::parse("x1^3", 2).unwrap()
        );
    }

    pub(crate) fn small_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, nvars), -5i64..6, 1i64..4),
            0..5,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(
                nvars,
                ts.into_iter()
                    .map(|(e, n, d)| (Monomial::from_exponents(e), ratio(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(3), g in small_poly(3), h in small_poly(3)) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn leibniz(f in small_poly(3), g in small_poly(3), i in 0usize..3) {
            let lhs = (&f * &g).derivative(i);
            let rhs = &(&f * &g.derivative(i)) + &(&g * &f.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_text_parses_back(f in small_poly(3)) {
            let text = f.to_canonical_string(&MonomialOrder::degrevlex());
            prop_assert_eq!(Polynomial::parse(&text, 3).unwrap(), f);
        }
    }
}
