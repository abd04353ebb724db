//! Highest-weight constructions for `GL_M` and `GL(M|N)`: the half-sum `ρ`,
//! Steinberg partitions `n/M·(1,…,1) + (p^r − 1)ρ`, and the `p`-core
//! `κ = α ν^t` together with its typicality matrix.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::extended::is_prime;
use super::partition::Partition;
use crate::error::{Error, Result};

/// `ρ = ((M−1)/2, (M−3)/2, …, (1−M)/2)`, the `GL_M` lift used throughout.
pub fn rho_vector(m: usize) -> Result<Vec<BigRational>> {
    if m < 2 {
        return Err(Error::domain(format!("rho needs M >= 2, got {m}")));
    }
    Ok((1..=m).map(|i| BigRational::new(BigInt::from(m as i64 + 1 - 2 * i as i64), BigInt::from(2))).collect())
}

/// Twice `ρ_i` for 1-based `i`, an integer.
fn two_rho(m: usize, i: usize) -> i64 {
    m as i64 + 1 - 2 * i as i64
}

/// The partition `λ(p, r) = n/M·(1,…,1) + (p^r − 1)ρ`.
pub fn steinberg_partition(n: u64, m: usize, p: u64, r: u32) -> Result<Partition> {
    let parts = steinberg_parts(n, m, p, r)?;
    Partition::new(parts.into_iter().map(|x| x as usize).collect())
}

/// The row lengths `x_i = n/M + (p^r − 1)ρ_i` (zeros kept).
pub fn steinberg_parts(n: u64, m: usize, p: u64, r: u32) -> Result<Vec<u64>> {
    if m.is_multiple_of(2) {
        return Err(Error::domain(format!("M must be odd, got {m}")));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("p must be prime, got {p}")));
    }
    if !n.is_multiple_of(m as u64) {
        return Err(Error::domain(format!("M={m} does not divide n={n}")));
    }
    let step = p.checked_pow(r).ok_or_else(|| Error::domain("p^r overflows"))? - 1;
    let base = n / m as u64;
    let spread = step as u128 * (m as u128 - 1) / 2;
    if spread > base as u128 {
        return Err(Error::domain(format!("constraint (p^r-1)(M-1)/2 <= n/M fails: {spread} > {base}")));
    }
    // M odd, so (p^r − 1)·(2ρ_i)/2 is an integer.
    Ok((1..=m).map(|i| (base as i64 + step as i64 * two_rho(m, i) / 2) as u64).collect())
}

/// The partitions `α`, `ν` and the `p`-core `κ = α ν^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaWeights {
    pub alpha: Partition,
    /// `ν_j = (p−1)(N−j)`; the zero part `ν_N` is dropped.
    pub nu: Partition,
    pub kappa: Partition,
}

pub fn kappa_partition(m: usize, n: usize, p: u64) -> Result<KappaWeights> {
    if m == 0 || n == 0 {
        return Err(Error::domain("kappa needs M, N >= 1"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("p must be prime, got {p}")));
    }
    let p = p as usize;
    let alpha = Partition::new((1..=m).map(|i| n + (p - 1) * (m - i)).collect())?;
    let nu = Partition::new((1..=n).map(|j| (p - 1) * (n - j)).collect())?;
    // α_M = N exceeds ℓ(ν) = N − 1, so α followed by ν^t is a partition.
    let kappa = alpha.concat(&nu.transpose())?;
    Ok(KappaWeights { alpha, nu, kappa })
}

/// Typicality matrix `c_ij(λ|μ) = λ_i − i + μ_j − j + M + 1`, `M × N`,
/// with `λ` and `μ` padded by zeros.
pub fn c_matrix(lambda: &Partition, mu: &Partition, m: usize, n: usize) -> Result<Vec<Vec<i64>>> {
    if lambda.len() > m {
        return Err(Error::domain(format!("{lambda} has more than M={m} parts")));
    }
    if mu.len() > n {
        return Err(Error::domain(format!("{mu} has more than N={n} parts")));
    }
    Ok((1..=m)
        .map(|i| {
            (1..=n).map(|j| lambda.part(i) as i64 - i as i64 + mu.part(j) as i64 - j as i64 + m as i64 + 1).collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_vector(3).unwrap(), vec![rat(1, 1), rat(0, 1), rat(-1, 1)]);
        assert_eq!(rho_vector(2).unwrap(), vec![rat(1, 2), rat(-1, 2)]);
        assert_eq!(rho_vector(5).unwrap(), [2, 1, 0, -1, -2].iter().map(|&x| rat(x, 1)).collect::<Vec<_>>());
        assert!(rho_vector(1).is_err());
        for m in 2..20 {
            let s: BigRational = rho_vector(m).unwrap().into_iter().sum();
            assert_eq!(s, rat(0, 1));
        }
    }

    #[test]
    fn steinberg_examples() {
        let l = steinberg_partition(12, 3, 2, 2).unwrap();
        assert_eq!(l, part(&[7, 4, 1]));
        assert!(l.parts().windows(2).all(|w| w[0] - w[1] == 3));
        assert_eq!(steinberg_partition(6, 3, 2, 1).unwrap(), part(&[3, 2, 1]));
        assert_eq!(steinberg_parts(3, 3, 2, 1).unwrap(), vec![2, 1, 0]);
        assert_eq!(steinberg_partition(3, 3, 2, 1).unwrap(), part(&[2, 1]));
    }

    #[test]
    fn steinberg_errors_name_the_constraint() {
        let e = steinberg_partition(12, 4, 2, 1).unwrap_err();
        assert!(e.to_string().contains("odd"));
        let e = steinberg_partition(13, 3, 2, 1).unwrap_err();
        assert!(e.to_string().contains("divide"));
        let e = steinberg_partition(6, 3, 2, 2).unwrap_err();
        assert!(e.to_string().contains("(p^r-1)(M-1)/2"));
        assert!(steinberg_partition(12, 3, 4, 1).is_err());
    }

    #[test]
    fn kappa_examples() {
        let k = kappa_partition(2, 1, 3).unwrap();
        assert_eq!((k.alpha.clone(), k.nu.clone(), k.kappa.clone()), (part(&[3, 1]), part(&[]), part(&[3, 1])));
        let k = kappa_partition(1, 1, 5).unwrap();
        assert_eq!(k.kappa, part(&[1]));
        let k = kappa_partition(2, 2, 2).unwrap();
        assert_eq!(k.alpha, part(&[3, 2]));
        assert_eq!(k.nu, part(&[1]));
        assert_eq!(k.kappa, part(&[3, 2, 1]));
    }

    #[test]
    fn c_matrix_examples() {
        let zero = Partition::empty();
        assert_eq!(c_matrix(&zero, &zero, 2, 1).unwrap(), vec![vec![1], vec![0]]);
        let k = kappa_partition(2, 1, 3).unwrap();
        assert_eq!(c_matrix(&k.alpha, &k.nu, 2, 1).unwrap(), vec![vec![4], vec![1]]);
        assert!(c_matrix(&part(&[1, 1, 1]), &zero, 2, 1).is_err());
    }

    #[test]
    fn kappa_is_core_and_typical() {
        for m in 1..=4 {
            for n in 1..=4 {
                for p in [2u64, 3, 5, 7] {
                    let k = kappa_partition(m, n, p).unwrap();
                    assert!(k.kappa.is_p_core(p), "M={m} N={n} p={p}");
                    let c = c_matrix(&k.alpha, &k.nu, m, n).unwrap();
                    for i in 1..=m {
                        for j in 1..=n {
                            let v = c[i - 1][j - 1];
                            assert_eq!(v, (m + n - i - j) as i64 * p as i64 + 1);
                            assert_eq!(v.rem_euclid(p as i64), 1);
                        }
                    }
                }
            }
        }
    }
}
