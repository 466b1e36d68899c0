//! Primitive Hodge numbers of smooth degree-`a` hypersurfaces in `P^{n+1}` from
//! the Fermat Jacobi ring, and the resulting total cohomology dimension.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::check_params;

/// `#{v in [lo, hi]^parts : |v| = total}` by dynamic programming over parts.
pub fn bounded_compositions(parts: u32, lo: u32, hi: u32, total: i64) -> BigUint {
    if total < 0 || hi < lo {
        return BigUint::zero();
    }
    let total = total as usize;
    let mut ways = vec![BigUint::zero(); total + 1];
    ways[0] = BigUint::from(1u32);
    for _ in 0..parts {
        let mut next = vec![BigUint::zero(); total + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for v in lo..=hi {
                let t = s + v as usize;
                if t > total {
                    break;
                }
                next[t] += w;
            }
        }
        ways = next;
    }
    std::mem::take(&mut ways[total])
}

/// Coefficient of `t^total` in `((1 - t^(b+1)) / (1 - t))^parts`, by inclusion–exclusion.
pub fn bounded_compositions_gf(parts: u32, max_part: u32, total: i64) -> BigInt {
    if total < 0 {
        return BigInt::zero();
    }
    if parts == 0 {
        return BigInt::from(u8::from(total == 0));
    }
    let mut acc = BigInt::zero();
    let step = max_part as i64 + 1;
    let mut k = 0i64;
    while k <= parts as i64 && total - k * step >= 0 {
        let rest = total - k * step;
        let term = binomial(BigInt::from(parts), BigInt::from(k))
            * binomial(
                BigInt::from(rest + parts as i64 - 1),
                BigInt::from(parts - 1),
            );
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        k += 1;
    }
    acc
}

fn to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::ResourceExhausted(format!("count {v} does not fit in 64 bits")))
}

/// `[h_prim^{n-p,p}]_{p=0..n}`.
pub fn primitive_hodge(n: u32, a: u32) -> Result<Vec<u64>> {
    check_params(n, a)?;
    (0..=n)
        .map(|p| {
            let d = (p as i64 + 1) * a as i64 - (n as i64 + 2);
            to_u64(&bounded_compositions(n + 2, 0, a - 2, d))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeReport {
    pub n: u32,
    pub a: u32,
    pub prim: Vec<u64>,
    pub qh_dim: u64,
    #[serde(rename = "even")]
    pub total_even: u64,
    #[serde(rename = "odd")]
    pub total_odd: u64,
}

/// Hyperplane powers `1, h, ..., h^n` (even) plus primitive middle cohomology (parity of `n`).
pub fn qh_dimension(n: u32, a: u32) -> Result<HodgeReport> {
    let prim = primitive_hodge(n, a)?;
    let middle: u64 = prim.iter().sum();
    let ambient = n as u64 + 1;
    let (total_even, total_odd) = if n.is_multiple_of(2) {
        (ambient + middle, 0)
    } else {
        (ambient, middle)
    };
    Ok(HodgeReport {
        n,
        a,
        prim,
        qh_dim: ambient + middle,
        total_even,
        total_odd,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionWitness {
    pub p: u32,
    pub count_i: u64,
    pub count_j: u64,
    pub equal: bool,
}

/// Counts `i ∈ [0, a-2]^{n+2}` with `|i| = (p+1)a - (n+2)` and `j ∈ [1, a-1]^{n+2}`
/// with `|j| = (p+1)a` separately.
pub fn index_bijection_check(n: u32, a: u32, p: u32) -> Result<BijectionWitness> {
    check_params(n, a)?;
    if p > n {
        return Err(Error::IndexOutOfRange(format!("p = {p} exceeds n = {n}")));
    }
    let top = (p as i64 + 1) * a as i64;
    let count_i = to_u64(&bounded_compositions(n + 2, 0, a - 2, top - (n as i64 + 2)))?;
    let count_j = to_u64(&bounded_compositions(n + 2, 1, a - 1, top))?;
    Ok(BijectionWitness {
        p,
        count_i,
        count_j,
        equal: count_i == count_j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force count over the box `[lo, hi]^parts`.
    fn brute(parts: u32, lo: u32, hi: u32, total: i64) -> u64 {
        let mut count = 0;
        let mut v = vec![lo; parts as usize];
        loop {
            if v.iter().map(|&x| x as i64).sum::<i64>() == total {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == v.len() {
                    return count;
                }
                v[k] += 1;
                if v[k] <= hi {
                    break;
                }
                v[k] = lo;
                k += 1;
            }
        }
    }

    #[test]
    fn sextic_surface_and_octic_threefold() {
        assert_eq!(primitive_hodge(2, 6).unwrap(), vec![10, 85, 10]);
        for (p, d) in [(0, 2), (1, 8), (2, 14)] {
            assert_eq!(brute(4, 0, 4, d), [10, 85, 10][p]);
        }
        assert_eq!(primitive_hodge(3, 8).unwrap(), vec![35, 1015, 1015, 35]);
        for (p, d) in [3i64, 11, 19, 27].iter().enumerate() {
            assert_eq!(brute(5, 0, 6, *d), [35, 1015, 1015, 35][p]);
        }
        assert_eq!(primitive_hodge(2, 7).unwrap(), vec![20, 146, 20]);
    }

    #[test]
    fn totals() {
        let r = qh_dimension(2, 6).unwrap();
        assert_eq!((r.qh_dim, r.total_even, r.total_odd), (108, 108, 0));
        let r = qh_dimension(3, 8).unwrap();
        assert_eq!((r.qh_dim, r.total_even, r.total_odd), (2104, 4, 2100));
        assert_eq!(qh_dimension(2, 7).unwrap().qh_dim, 189);
        // cubic surface: 1 + 7 + 1
        assert_eq!(qh_dimension(2, 3).unwrap().qh_dim, 9);
        assert!(qh_dimension(1, 6).is_err());
    }

    #[test]
    fn first_hodge_number_is_an_unbounded_count() {
        for (n, a) in [(2u32, 6u32), (2, 7), (3, 8), (3, 9), (4, 10)] {
            let expected = binomial(BigUint::from(a - 1), BigUint::from(n + 1));
            assert_eq!(BigUint::from(primitive_hodge(n, a).unwrap()[0]), expected);
            assert_eq!(
                brute(n + 2, 0, a - 2, a as i64 - n as i64 - 2),
                expected.to_u64().unwrap()
            );
        }
    }

    #[test]
    fn bijection_witnesses() {
        let w = index_bijection_check(2, 6, 1).unwrap();
        assert_eq!((w.count_i, w.count_j, w.equal), (85, 85, true));
        let w = index_bijection_check(2, 6, 0).unwrap();
        assert_eq!((w.count_i, w.count_j), (10, 10));
        assert_eq!(brute(4, 1, 5, 6), 10);
        assert!(index_bijection_check(2, 6, 3).is_err());
    }

    #[test]
    fn dp_and_generating_function_agree_with_enumeration() {
        for parts in 1..=5u32 {
            for a in 3..=8u32 {
                if (a as u64 - 1).pow(parts) > 10_000_000 {
                    continue;
                }
                for total in 0..=(parts * (a - 2)) as i64 {
                    let b = brute(parts, 0, a - 2, total);
                    assert_eq!(
                        bounded_compositions(parts, 0, a - 2, total)
                            .to_u64()
                            .unwrap(),
                        b
                    );
                    assert_eq!(
                        bounded_compositions_gf(parts, a - 2, total),
                        BigInt::from(b)
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn hodge_symmetry_and_link_to_free_sectors(n in 2u32..5, a in 3u32..12) {
            let prim = primitive_hodge(n, a).unwrap();
            let rev: Vec<u64> = prim.iter().rev().copied().collect();
            prop_assert_eq!(&prim, &rev);
            // every admissible |j| in [n+2, (n+2)(a-1)] divisible by a is (p+1)a for some p <= n
            let by_p: u64 = (0..=n).map(|p| index_bijection_check(n, a, p).unwrap().count_j).sum();
            let free = crate::symmetry::free_sector_count(n + 2, a);
            prop_assert_eq!(BigInt::from(by_p), free);
            prop_assert_eq!(prim.iter().sum::<u64>(), by_p);
        }
    }
}
