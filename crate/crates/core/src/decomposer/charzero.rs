//! Characteristic-zero counts. Here every tilting module is a Weyl module,
//! and by Schur–Weyl duality `b_n` for `GL_M` is `Σ f^λ` over partitions of
//! `n` with at most `M` rows; for `GL(M|N)` the rows are replaced by the
//! hook condition `λ_{M+1} ≤ N`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(n, ⌊n/2⌋)`: the number of summands of `V₂^{⊗n}` in characteristic 0.
pub fn b_closed_form_sl2_char0(n: u64) -> BigUint {
    binomial(n, n / 2)
}

/// Counts lattice paths in Young's lattice from `∅`, level by level, keeping
/// only shapes accepted by `allowed`. Returns `Σ_λ (#paths to λ)` per level;
/// the number of paths to `λ` is `f^λ`.
fn young_lattice_level_sums<F>(n_max: usize, allowed: F) -> Vec<BigUint>
where
    F: Fn(&Partition) -> bool,
{
    let mut level: BTreeMap<Partition, BigUint> = BTreeMap::new();
    level.insert(Partition::empty(), BigUint::one());
    let mut sums = vec![BigUint::one()];
    for _ in 0..n_max {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (shape, count) in &level {
            for row in shape.addable_rows() {
                let grown = shape.with_box(row);
                if allowed(&grown) {
                    *next.entry(grown).or_default() += count;
                }
            }
        }
        sums.push(next.values().sum());
        level = next;
    }
    sums
}

/// `b_n` for `GL_M` in characteristic 0, for every `n ≤ n_max`.
pub fn glm_series(n_max: usize, m: usize) -> Result<Vec<BigUint>> {
    if m == 0 {
        return Err(Error::domain("GL_M needs M >= 1"));
    }
    Ok(young_lattice_level_sums(n_max, |l| l.len() <= m))
}

pub fn b_charzero_glm(n: usize, m: usize) -> Result<BigUint> {
    Ok(glm_series(n, m)?.pop().expect("series has n + 1 entries"))
}

/// `b_n` for `GL(M|N)` in characteristic 0, for every `n ≤ n_max`.
pub fn super_series(n_max: usize, m: usize, n_odd: usize) -> Result<Vec<BigUint>> {
    if m + n_odd == 0 {
        return Err(Error::domain("GL(M|N) needs M + N >= 1"));
    }
    Ok(young_lattice_level_sums(n_max, |l| l.part(m + 1) <= n_odd))
}

pub fn b_charzero_super(n: usize, m: usize, n_odd: usize) -> Result<BigUint> {
    Ok(super_series(n, m, n_odd)?.pop().expect("series has n + 1 entries"))
}

/// Weyl dimension of `Δ(m_1, …, m_{M−1})` in fundamental-weight coordinates:
/// `Π_{i<j} (Σ_{i≤k<j} (m_k + 1)) / (j − i)`.
pub fn weyl_dimension(weights: &[u64], m: usize) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::domain(format!("Weyl dimension needs M >= 2, got {m}")));
    }
    if weights.len() != m - 1 {
        return Err(Error::domain(format!("expected {} fundamental weight coordinates, got {}", m - 1, weights.len())));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        let mut shifted = 0u64;
        for j in i + 1..m {
            shifted += weights[j - 1] + 1;
            num *= BigUint::from(shifted);
            den *= BigUint::from((j - i) as u64);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `Π_i C(M, i)^{a_i}`, an upper bound on `dim T(a_1, …, a_{M−1})`.
pub fn exterior_power_bound(exponents: &[u64], m: usize) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::domain(format!("need M >= 2, got {m}")));
    }
    if exponents.len() != m - 1 {
        return Err(Error::domain(format!("expected {} exponents, got {}", m - 1, exponents.len())));
    }
    Ok(exponents
        .iter()
        .enumerate()
        .fold(BigUint::one(), |acc, (i, &a)| acc * binomial(m as u64, i as u64 + 1).pow(a as u32)))
}

/// `b_n^{M+1} ≤ Σ_i C(n, i) b_i^M` (restriction from `GL_{M+1}` to
/// `GL_M × GL_1`), in characteristic 0.
pub fn restriction_inequality_check(n: usize, m: usize) -> Result<bool> {
    let lower = glm_series(n, m)?;
    let upper = b_charzero_glm(n, m + 1)?;
    let rhs: BigUint = lower.iter().enumerate().map(|(i, b)| binomial(n as u64, i as u64) * b).sum();
    Ok(upper <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions, partitions_with_max_rows};

    fn hook_sum<F: Fn(&Partition) -> bool>(n: usize, keep: F) -> BigUint {
        partitions(n).into_iter().filter(|l| keep(l)).map(|l| l.num_standard_tableaux()).sum()
    }

    /// Involutions of S_n by brute force over all permutations.
    fn involutions(n: usize) -> usize {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if perm.iter().enumerate().all(|(i, &j)| perm[j] == i) {
                count += 1;
            }
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        count
    }

    #[test]
    fn closed_form_examples() {
        let seq: Vec<BigUint> = (0..=10).map(b_closed_form_sl2_char0).collect();
        let want: Vec<BigUint> =
            [1u32, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(seq, want);
        assert_eq!(b_closed_form_sl2_char0(7), BigUint::from(35u32));
    }

    #[test]
    fn glm_examples() {
        for n in 0..12 {
            assert_eq!(b_charzero_glm(n, 1).unwrap(), BigUint::one());
        }
        for n in 0..=30 {
            assert_eq!(b_charzero_glm(n, 2).unwrap(), b_closed_form_sl2_char0(n as u64));
        }
        assert_eq!(b_charzero_glm(4, 4).unwrap(), BigUint::from(involutions(4)));
        assert_eq!(b_charzero_glm(4, 4).unwrap(), BigUint::from(10u32));
        assert!(b_charzero_glm(3, 0).is_err());
    }

    #[test]
    fn dynamic_program_matches_hook_formula() {
        for m in 1..=5 {
            let series = glm_series(12, m).unwrap();
            for (n, b) in series.iter().enumerate() {
                let direct: BigUint =
                    partitions_with_max_rows(n, m).into_iter().map(|l| l.num_standard_tableaux()).sum();
                assert_eq!(*b, direct, "n={n} M={m}");
            }
        }
    }

    #[test]
    fn super_examples() {
        for n in 0..10 {
            for m in 1..4 {
                assert_eq!(b_charzero_super(n, m, 0).unwrap(), b_charzero_glm(n, m).unwrap());
            }
        }
        assert_eq!(b_charzero_super(4, 1, 1).unwrap(), BigUint::from(8u32));
        for n in 0..=7 {
            assert_eq!(b_charzero_super(n, 3, 4).unwrap(), BigUint::from(involutions(n)));
        }
        for (m, k) in [(0, 2), (1, 1), (2, 1), (1, 2), (2, 2)] {
            for n in 0..=9 {
                let want = hook_sum(n, |l| l.part(m + 1) <= k);
                assert_eq!(b_charzero_super(n, m, k).unwrap(), want, "n={n} ({m}|{k})");
            }
        }
        assert!(b_charzero_super(3, 0, 0).is_err());
    }

    #[test]
    fn weyl_examples() {
        for m1 in 0..8u64 {
            for m2 in 0..8u64 {
                let want = (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2;
                assert_eq!(weyl_dimension(&[m1, m2], 3).unwrap(), BigUint::from(want));
            }
        }
        for m in 2..9 {
            let mut w = vec![0; m - 1];
            assert_eq!(weyl_dimension(&w, m).unwrap(), BigUint::one());
            w[0] = 1;
            assert_eq!(weyl_dimension(&w, m).unwrap(), BigUint::from(m));
        }
        assert_eq!(weyl_dimension(&[5], 2).unwrap(), BigUint::from(6u32));
        assert!(weyl_dimension(&[1], 3).is_err());
    }

    #[test]
    fn weyl_dimension_has_expected_degree() {
        // Along the ray (t, …, t) the dimension grows like t^{M(M−1)/2}.
        for m in 2..6usize {
            let deg = (m * (m - 1) / 2) as i32;
            let at = |t: u64| {
                let d = weyl_dimension(&vec![t; m - 1], m).unwrap();
                d.to_string().parse::<f64>().unwrap()
            };
            let ratio = at(2000) / at(1000);
            assert!((ratio.log2() - deg as f64).abs() < 0.05, "M={m}");
        }
    }

    #[test]
    fn exterior_bound_examples() {
        assert_eq!(exterior_power_bound(&[0, 0], 3).unwrap(), BigUint::one());
        assert_eq!(exterior_power_bound(&[7], 2).unwrap(), BigUint::from(128u32));
        assert_eq!(exterior_power_bound(&[1, 1], 3).unwrap(), BigUint::from(9u32));
        assert_eq!(exterior_power_bound(&[0, 2, 0], 4).unwrap(), BigUint::from(36u32));
    }

    #[test]
    fn restriction_inequality() {
        // M=1, n=5: b^{2}_5 = 10 ≤ Σ C(5,i)·1 = 32.
        assert_eq!(b_charzero_glm(5, 2).unwrap(), BigUint::from(10u32));
        assert!(restriction_inequality_check(5, 1).unwrap());
        assert!(restriction_inequality_check(0, 1).unwrap());
        for m in 1..=3 {
            for n in 0..=20 {
                assert!(restriction_inequality_check(n, m).unwrap(), "n={n} M={m}");
            }
        }
    }
}
