//! Brute-force oracle for modular Schur–Weyl counts.
//!
//! For a `p`-regular partition `λ`, the simple `S_n`-module `D_λ` is the
//! Specht module modulo the radical of its invariant form, so `dim D_λ` is the
//! rank of the polytabloid Gram matrix over `𝔽_p`. Summing over `p`-regular
//! `λ ⊢ n` with at most `M` rows gives `b_n` for `GL_M` in characteristic `p`.
//!
//! Nothing here touches tilting characters; the module is an independent
//! check on the decomposer.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{is_prime, partitions_with_max_rows, standard_tableaux, ExtNat, Partition, Tableau};
use crate::error::{Error, Result};

/// Default largest `|λ|` the oracle accepts.
pub const DEFAULT_SIZE_BOUND: usize = 10;

/// Environment variable overriding [`DEFAULT_SIZE_BOUND`].
pub const SIZE_BOUND_ENV: &str = "TG_SIZE_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpechtOracle {
    pub size_bound: usize,
}

impl Default for SpechtOracle {
    fn default() -> Self {
        Self { size_bound: DEFAULT_SIZE_BOUND }
    }
}

/// Gram matrix of the standard polytabloid basis of `S^λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpechtGram {
    pub shape: Partition,
    pub basis: Vec<Tableau>,
    pub gram: Vec<Vec<i64>>,
}

impl SpechtGram {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.gram.len();
        (0..n).all(|i| (0..i).all(|j| self.gram[i][j] == self.gram[j][i]))
    }
}

/// One line of the per-partition oracle table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleDimension {
    pub shape: Partition,
    pub f_lambda: usize,
    pub dim: usize,
}

/// Every permutation of `0..k` with its sign.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in signed_permutations(k - 1) {
        // Insert k-1 at position i: moving it past (k-1-i) entries.
        for i in 0..k {
            let mut p = perm.clone();
            p.insert(i, k - 1);
            let s = if (k - 1 - i).is_multiple_of(2) { sign } else { -sign };
            out.push((p, s));
        }
    }
    out
}

impl SpechtOracle {
    pub fn new(size_bound: usize) -> Self {
        Self { size_bound }
    }

    /// Reads [`SIZE_BOUND_ENV`], falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(SIZE_BOUND_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Self::new)
                .map_err(|_| Error::domain(format!("{SIZE_BOUND_ENV} must be a nonnegative integer, got {v:?}"))),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n > self.size_bound {
            return Err(Error::resource(format!(
                "|λ| = {n} exceeds the Specht oracle bound {} (set {SIZE_BOUND_ENV} to raise it)",
                self.size_bound
            )));
        }
        Ok(())
    }

    /// Builds `⟨e_s, e_t⟩` for standard `s, t`, where
    /// `e_t = Σ_{σ ∈ C_t} sgn(σ) {σt}` is expanded in row tabloids.
    pub fn specht_gram(&self, shape: &Partition) -> Result<SpechtGram> {
        let n = shape.size();
        self.check_size(n)?;
        let basis = standard_tableaux(shape);
        let columns = shape.transpose();
        let column_perms: Vec<Vec<(Vec<usize>, i64)>> =
            columns.parts().iter().map(|&len| signed_permutations(len)).collect();

        // tabloid (row of each entry) -> [(basis index, sign)]
        let mut occurrences: HashMap<Vec<u8>, Vec<(usize, i64)>> = HashMap::new();
        for (idx, t) in basis.iter().enumerate() {
            let mut choice = vec![0usize; column_perms.len()];
            loop {
                let mut rows = vec![0u8; n];
                let mut sign = 1;
                for (c, &k) in choice.iter().enumerate() {
                    let (perm, s) = &column_perms[c][k];
                    sign *= s;
                    for (r, &target) in perm.iter().enumerate() {
                        rows[t[r][c] - 1] = target as u8;
                    }
                }
                occurrences.entry(rows).or_default().push((idx, sign));
                // Odometer over the column groups.
                let mut c = 0;
                while c < choice.len() {
                    choice[c] += 1;
                    if choice[c] < column_perms[c].len() {
                        break;
                    }
                    choice[c] = 0;
                    c += 1;
                }
                if c == choice.len() {
                    break;
                }
            }
        }

        let size = basis.len();
        let mut gram = vec![vec![0i64; size]; size];
        for list in occurrences.values() {
            for &(i, si) in list {
                for &(j, sj) in list {
                    gram[i][j] += si * sj;
                }
            }
        }
        Ok(SpechtGram { shape: shape.clone(), basis, gram })
    }

    /// `dim D_λ` over a field of characteristic `p`.
    pub fn dim_simple_symmetric(&self, shape: &Partition, p: u64) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::domain(format!("p must be prime, got {p}")));
        }
        if !shape.is_p_regular(ExtNat::Finite(p)) {
            return Err(Error::domain(format!("{shape} is not {p}-regular")));
        }
        let g = self.specht_gram(shape)?;
        Ok(rank_mod_p(&g.gram, p))
    }

    /// `dim D_λ` for every `p`-regular `λ ⊢ n` with at most `m` rows.
    pub fn simple_dimensions(&self, n: usize, m: usize, p: u64) -> Result<Vec<SimpleDimension>> {
        if !is_prime(p) {
            return Err(Error::domain(format!("p must be prime, got {p}")));
        }
        self.check_size(n)?;
        partitions_with_max_rows(n, m)
            .into_par_iter()
            .filter(|l| l.is_p_regular(ExtNat::Finite(p)))
            .map(|shape| {
                let g = self.specht_gram(&shape)?;
                let dim = rank_mod_p(&g.gram, p);
                Ok(SimpleDimension { f_lambda: g.size(), shape, dim })
            })
            .collect()
    }

    /// `b_n` for `GL_M` in characteristic `p`: `Σ dim D_λ` over `p`-regular
    /// `λ ⊢ n` with at most `M` rows.
    pub fn b_modular_glm(&self, n: usize, m: usize, p: u64) -> Result<BigUint> {
        Ok(self.simple_dimensions(n, m, p)?.iter().map(|row| BigUint::from(row.dim)).sum())
    }
}

/// `n_λ`, the product of hook lengths (the scalar with `ẽ_T² = n_λ ẽ_T`).
pub fn young_scalar(shape: &Partition) -> BigUint {
    shape.hook_product()
}

/// Rank over `𝔽_p` by Gaussian elimination.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let p_i = p as i64;
    let mut rows: Vec<Vec<u64>> =
        matrix.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p_i) as u64).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `ℚ` by fraction-free (Bareiss) elimination.
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].abs().max(BigInt::from(1)) * a[rank][col].signum();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions;
    use crate::decomposer::b_charzero_glm;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn signed_permutations_are_complete() {
        let perms = signed_permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
        for (p, s) in &perms {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(*s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn gram_examples() {
        let oracle = SpechtOracle::default();
        let g = oracle.specht_gram(&part(&[4])).unwrap();
        assert_eq!(g.gram, vec![vec![1]]);
        let g = oracle.specht_gram(&part(&[1, 1])).unwrap();
        assert_eq!(g.size(), 1);
        assert_ne!(g.gram[0][0], 0);
        // Polytabloids of (2,1): e_{12/3} = {12/3} − {23/1}, e_{13/2} = {13/2} − {23/1}.
        let g = oracle.specht_gram(&part(&[2, 1])).unwrap();
        assert_eq!(g.basis.len(), 2);
        let mut entries = g.gram.clone();
        entries.sort();
        assert_eq!(entries, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(rank_rational(&g.gram), 2);
    }

    #[test]
    fn gram_is_symmetric_and_nondegenerate_over_rationals() {
        let oracle = SpechtOracle::default();
        for n in 1..=7 {
            for l in partitions(n) {
                let g = oracle.specht_gram(&l).unwrap();
                assert!(g.is_symmetric(), "{l}");
                assert_eq!(g.size() as u64, l.num_standard_tableaux().to_u64_digits().first().copied().unwrap_or(0));
                assert_eq!(rank_rational(&g.gram), g.size(), "{l}");
            }
        }
    }

    #[test]
    fn simple_dimension_examples() {
        let oracle = SpechtOracle::default();
        for n in 1..=6 {
            for p in [2, 3, 5] {
                assert_eq!(oracle.dim_simple_symmetric(&part(&[n]), p).unwrap(), 1);
            }
        }
        assert_eq!(oracle.dim_simple_symmetric(&part(&[2, 1]), 5).unwrap(), 2);
        // e_{12/34} = {12} − {23} − {14} + {34}, e_{13/24} = {13} − {23} − {14} + {24}.
        let g = oracle.specht_gram(&part(&[2, 2])).unwrap();
        assert_eq!(g.gram, vec![vec![4, 2], vec![2, 4]]);
        assert_eq!(rank_mod_p(&g.gram, 2), 0);
        assert!(oracle.dim_simple_symmetric(&part(&[2, 2]), 2).is_err());
        assert_eq!(oracle.dim_simple_symmetric(&part(&[2, 2]), 3).unwrap(), 1);
        assert!(matches!(oracle.dim_simple_symmetric(&part(&[1, 1]), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn dimensions_are_bounded_and_cores_stay_simple() {
        let oracle = SpechtOracle::default();
        for n in 1..=8 {
            for l in partitions(n) {
                let g = oracle.specht_gram(&l).unwrap();
                for p in [2u64, 3, 5, 7] {
                    if !l.is_p_regular(ExtNat::Finite(p)) {
                        continue;
                    }
                    let d = rank_mod_p(&g.gram, p);
                    assert!(d >= 1 && d <= g.size(), "{l} p={p}");
                    if l.is_p_core(p) {
                        assert_eq!(d, g.size(), "{l} is a {p}-core");
                        assert!(young_scalar(&l) % BigUint::from(p) != BigUint::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn young_scalar_examples() {
        assert_eq!(young_scalar(&part(&[2, 1])), BigUint::from(3u32));
        assert_eq!(young_scalar(&part(&[5])), BigUint::from(120u32));
    }

    #[test]
    fn modular_counts() {
        let oracle = SpechtOracle::default();
        for p in [2, 3, 5] {
            for m in 1..4 {
                assert_eq!(oracle.b_modular_glm(1, m, p).unwrap(), BigUint::from(1u32));
            }
        }
        // p > n: everything is semisimple.
        for n in 0..=6 {
            for m in 1..=4 {
                assert_eq!(oracle.b_modular_glm(n, m, 7).unwrap(), b_charzero_glm(n, m).unwrap());
            }
        }
    }

    #[test]
    fn size_bound_is_enforced() {
        let oracle = SpechtOracle::new(4);
        assert!(matches!(oracle.specht_gram(&part(&[3, 2])), Err(Error::Resource(_))));
        assert!(matches!(oracle.b_modular_glm(5, 2, 2), Err(Error::Resource(_))));
    }

    #[test]
    fn rank_helpers() {
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank_rational(&m), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
        assert_eq!(rank_rational(&[]), 0);
    }
}
