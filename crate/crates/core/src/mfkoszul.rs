//! Koszul matrix factorizations `d = sum_i f_i (e_i ∧ -) + g_i ι_i` of a potential
//! `w = sum_i f_i g_i` on the exterior algebra `Λ(e_1, ..., e_m)`, split into the
//! odd-to-even block `P` and the even-to-odd block `Q`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{check_params, deformed_potential, rat, Monomial, MonomialOrder, Polynomial};
use crate::symmetry::{CharacterClass, DiagonalGroup};

/// A dense matrix of polynomials, serialized with entries in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Polynomial {
        &mut self.entries[r * self.cols + c]
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Row-parallel product; `None` on a shape mismatch.
    pub fn mul(&self, other: &PolyMatrix) -> Option<PolyMatrix> {
        if self.cols != other.rows || self.nvars != other.nvars {
            return None;
        }
        let entries: Vec<Polynomial> = (0..self.rows)
            .into_par_iter()
            .flat_map_iter(|r| {
                (0..other.cols).map(move |c| {
                    let mut acc = Polynomial::zero(self.nvars);
                    for k in 0..self.cols {
                        let (x, y) = (self.get(r, k), other.get(k, c));
                        if !x.is_zero() && !y.is_zero() {
                            acc = &acc + &(x * y);
                        }
                    }
                    acc
                })
            })
            .collect();
        Some(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            nvars: self.nvars,
            entries,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PolyMatrixText {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let order = MonomialOrder::default();
        PolyMatrixText {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: (0..self.rows)
                .map(|r| {
                    (0..self.cols)
                        .map(|c| self.get(r, c).to_canonical_string(&order))
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let t = PolyMatrixText::deserialize(d)?;
        if t.entries.len() != t.rows || t.entries.iter().any(|row| row.len() != t.cols) {
            return Err(D::Error::custom("matrix shape does not match its entries"));
        }
        let entries = t
            .entries
            .iter()
            .flatten()
            .map(|s| Polynomial::parse(s, t.nvars))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(PolyMatrix {
            rows: t.rows,
            cols: t.cols,
            nvars: t.nvars,
            entries,
        })
    }
}

/// An exterior word `e_{i_1} ∧ ... ∧ e_{i_k}` (one-based, increasing) and its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisWord {
    pub word: Vec<usize>,
    pub weight: CharacterClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFactorization {
    pub nvars: usize,
    /// Modulus of the zero-sum diagonal group grading the entries.
    pub modulus: u32,
    pub even: Vec<BasisWord>,
    pub odd: Vec<BasisWord>,
    /// Odd to even.
    pub p: PolyMatrix,
    /// Even to odd.
    pub q: PolyMatrix,
}

impl MatrixFactorization {
    pub fn rank(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn group(&self) -> DiagonalGroup {
        DiagonalGroup::zero_sum(self.nvars, self.modulus)
    }

    /// Tensor every basis word with a fixed character.
    pub fn twist(&self, class: &CharacterClass) -> MatrixFactorization {
        let g = self.group();
        let shift = |ws: &[BasisWord]| {
            ws.iter()
                .map(|b| BasisWord {
                    word: b.word.clone(),
                    weight: g.add_classes(&b.weight, class),
                })
                .collect()
        };
        MatrixFactorization {
            even: shift(&self.even),
            odd: shift(&self.odd),
            ..self.clone()
        }
    }
}

/// The splitting `f_i = x_i`, `g_1 = x_1^{a-1} - x_2 ... x_{n+2}`, `g_i = x_i^{a-1}`.
pub fn default_splitting(n: u32, a: u32) -> Result<Vec<(Polynomial, Polynomial)>> {
    check_params(n, a)?;
    let m = n as usize + 2;
    Ok((0..m)
        .map(|i| {
            let f = Polynomial::var(m, i);
            let mut g = Polynomial::monomial(Monomial::var(m, i).pow(a - 1));
            if i == 0 {
                let mut rest = vec![1u32; m];
                rest[0] = 0;
                g.add_term(Monomial::from_exponents(rest), rat(-1));
            }
            (f, g)
        })
        .collect())
}

/// Koszul factorization of the deformed potential for `(n, a)`; `None` selects
/// the default splitting.
pub fn koszul_mf(
    n: u32,
    a: u32,
    splitting: Option<&[(Polynomial, Polynomial)]>,
) -> Result<MatrixFactorization> {
    let w = deformed_potential(n, a)?;
    let default;
    let split = match splitting {
        Some(s) => s,
        None => {
            default = default_splitting(n, a)?;
            &default
        }
    };
    koszul_mf_for(&w, split, a)
}

/// Koszul factorization of an arbitrary `w = sum f_i g_i`, graded by the zero-sum
/// group of the given modulus. Word weights are sums of the classes of the
/// leading monomials of the `f_i`.
pub fn koszul_mf_for(
    w: &Polynomial,
    splitting: &[(Polynomial, Polynomial)],
    modulus: u32,
) -> Result<MatrixFactorization> {
    let nv = w.nvars();
    for (f, g) in splitting {
        for p in [f, g] {
            if p.nvars() != nv {
                return Err(Error::ArityMismatch {
                    expected: nv,
                    found: p.nvars(),
                });
            }
        }
    }
    let sum = splitting
        .iter()
        .fold(Polynomial::zero(nv), |acc, (f, g)| &acc + &(f * g));
    if &sum != w {
        return Err(Error::SplittingMismatch);
    }
    let k = splitting.len();
    if k >= usize::BITS as usize - 1 {
        return Err(Error::ResourceExhausted(format!("2^{k} exterior words")));
    }
    let group = DiagonalGroup::zero_sum(nv, modulus);
    let order = MonomialOrder::default();
    let f_class: Vec<CharacterClass> = splitting
        .iter()
        .map(|(f, _)| {
            f.leading_term(&order)
                .map_or_else(|| group.zero_class(), |(m, _)| group.monomial_degree(m))
        })
        .collect();

    let mut even_masks = Vec::new();
    let mut odd_masks = Vec::new();
    for mask in 0usize..(1 << k) {
        if mask.count_ones() % 2 == 0 {
            even_masks.push(mask);
        } else {
            odd_masks.push(mask);
        }
    }
    let word = |mask: usize| BasisWord {
        word: (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect(),
        weight: (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(group.zero_class(), |acc, i| {
                group.add_classes(&acc, &f_class[i])
            }),
    };
    let position =
        |masks: &[usize], mask: usize| masks.binary_search(&mask).expect("parity-split basis");

    // Column `c` of the block holds `d(e_c)` written in the target basis.
    let block = |src: &[usize], dst: &[usize]| {
        let mut m = PolyMatrix::zero(dst.len(), src.len(), nv);
        for (c, &mask) in src.iter().enumerate() {
            for (i, (f, g)) in splitting.iter().enumerate() {
                let sign = if (mask & ((1 << i) - 1)).count_ones() % 2 == 0 {
                    rat(1)
                } else {
                    rat(-1)
                };
                let bit = 1 << i;
                let (target, coeff) = if mask & bit == 0 {
                    (mask | bit, f)
                } else {
                    (mask & !bit, g)
                };
                let r = position(dst, target);
                let entry = m.get_mut(r, c);
                *entry = &*entry + &coeff.scale(&sign);
            }
        }
        m
    };
    let p = block(&odd_masks, &even_masks);
    let q = block(&even_masks, &odd_masks);
    Ok(MatrixFactorization {
        nvars: nv,
        modulus,
        even: even_masks.iter().map(|&m| word(m)).collect(),
        odd: odd_masks.iter().map(|&m| word(m)).collect(),
        p,
        q,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfFailure {
    pub check: String,
    pub row: usize,
    pub col: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfReport {
    pub rank: usize,
    pub shapes_ok: bool,
    pub pq_identity: bool,
    pub qp_identity: bool,
    pub homogeneous: bool,
    pub pass: bool,
    pub first_failure: Option<MfFailure>,
}

fn identity_failure(check: &str, prod: &PolyMatrix, w: &Polynomial) -> Option<MfFailure> {
    let zero = Polynomial::zero(w.nvars());
    let order = MonomialOrder::default();
    (0..prod.rows)
        .flat_map(|r| (0..prod.cols).map(move |c| (r, c)))
        .find_map(|(r, c)| {
            let want = if r == c { w } else { &zero };
            let got = prod.get(r, c);
            (got != want).then(|| MfFailure {
                check: check.into(),
                row: r,
                col: c,
                detail: format!(
                    "expected {}, found {}",
                    want.to_canonical_string(&order),
                    got.to_canonical_string(&order)
                ),
            })
        })
}

fn homogeneity_failure(
    name: &str,
    m: &PolyMatrix,
    rows: &[BasisWord],
    cols: &[BasisWord],
    g: &DiagonalGroup,
) -> Option<MfFailure> {
    (0..m.rows)
        .flat_map(|r| (0..m.cols).map(move |c| (r, c)))
        .find_map(|(r, c)| {
            let want = g.add_classes(&rows[r].weight, &g.neg_class(&cols[c].weight));
            m.get(r, c).terms().find_map(|(mono, _)| {
                let got = g.monomial_degree(mono);
                (got != want).then(|| MfFailure {
                    check: format!("{name}-homogeneity"),
                    row: r,
                    col: c,
                    detail: format!("term {mono} has class {got}, expected {want}"),
                })
            })
        })
}

/// Checks `PQ = QP = w·Id` exactly and the weight homogeneity of every entry.
pub fn verify_mf(mf: &MatrixFactorization, w: &Polynomial) -> MfReport {
    let (ne, no) = (mf.even.len(), mf.odd.len());
    let shapes_ok = ne == no
        && (mf.p.rows, mf.p.cols) == (ne, no)
        && (mf.q.rows, mf.q.cols) == (no, ne)
        && mf.p.nvars() == w.nvars()
        && mf.q.nvars() == w.nvars()
        && mf.nvars == w.nvars()
        && mf
            .even
            .iter()
            .chain(&mf.odd)
            .all(|b| b.weight.representative().len() == mf.nvars);
    if !shapes_ok {
        return MfReport {
            rank: ne + no,
            shapes_ok,
            pq_identity: false,
            qp_identity: false,
            homogeneous: false,
            pass: false,
            first_failure: Some(MfFailure {
                check: "shape".into(),
                row: 0,
                col: 0,
                detail: format!(
                    "P is {}x{}, Q is {}x{}, basis {ne}+{no}",
                    mf.p.rows, mf.p.cols, mf.q.rows, mf.q.cols
                ),
            }),
        };
    }
    let g = mf.group();
    let (pq, qp, hp, hq) = {
        let ((pq, qp), (hp, hq)) = rayon::join(
            || {
                rayon::join(
                    || identity_failure("PQ", &mf.p.mul(&mf.q).expect("checked shapes"), w),
                    || identity_failure("QP", &mf.q.mul(&mf.p).expect("checked shapes"), w),
                )
            },
            || {
                rayon::join(
                    || homogeneity_failure("P", &mf.p, &mf.even, &mf.odd, &g),
                    || homogeneity_failure("Q", &mf.q, &mf.odd, &mf.even, &g),
                )
            },
        );
        (pq, qp, hp, hq)
    };
    let report = MfReport {
        rank: ne + no,
        shapes_ok,
        pq_identity: pq.is_none(),
        qp_identity: qp.is_none(),
        homogeneous: hp.is_none() && hq.is_none(),
        pass: false,
        first_failure: None,
    };
    let first_failure = pq.or(qp).or(hp).or(hq);
    MfReport {
        pass: first_failure.is_none(),
        first_failure,
        ..report
    }
}
