use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::extended::ExtNat;
use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zero parts are dropped; any increase between parts is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::domain(format!("parts {parts:?} contain an interior zero")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols).map(|j| self.parts.iter().take_while(|&&r| r >= j).count()).collect();
        Partition { parts }
    }

    /// Concatenation `(λ_1, …, λ_k, μ_1, …)`; requires `λ_k ≥ μ_1`.
    pub fn concat(&self, other: &Partition) -> Result<Partition> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.transpose();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        self.hook_lengths().into_iter().fold(BigUint::one(), |acc, h| acc * BigUint::from(h))
    }

    /// `f^λ = |λ|! / Π hooks`, the number of standard Young tableaux.
    pub fn num_standard_tableaux(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }

    /// No hook length divisible by `p`.
    pub fn is_p_core(&self, p: u64) -> bool {
        self.hook_lengths().iter().all(|&h| !(h as u64).is_multiple_of(p))
    }

    /// No part value occurs `p` or more times. Always true for `p = ∞`.
    pub fn is_p_regular(&self, p: ExtNat) -> bool {
        let Some(p) = p.finite() else { return true };
        let p = p as usize;
        let mut run = 0;
        for (idx, &part) in self.parts.iter().enumerate() {
            run = if idx > 0 && self.parts[idx - 1] == part { run + 1 } else { 1 };
            if run >= p {
                return false;
            }
        }
        true
    }

    /// Rows (0-based) where a box can be added keeping a partition.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.parts.len()).filter(move |&i| i == 0 || self.parts[i - 1] > self.part(i + 1))
    }

    /// Copy with one box added in 0-based row `row`, which must be addable.
    pub fn with_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n` with at most `max_rows` rows, in decreasing
/// lexicographic order.
pub fn partitions_with_max_rows(n: usize, max_rows: usize) -> Vec<Partition> {
    fn rec(rest: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_rows, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_with_max_rows(n, n)
}

/// A filling of a Young diagram, stored row by row.
pub type Tableau = Vec<Vec<usize>>;

/// All standard Young tableaux of shape `shape`, filled with `1..=n`.
///
/// Generated by placing the largest entry in each removable corner
/// recursively, so the order is deterministic.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<(usize, usize)>>, cur: &mut Vec<(usize, usize)>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.len() {
            let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if removable {
                shape[r] -= 1;
                cur.push((r, shape[r]));
                rec(shape, n - 1, out, cur);
                cur.pop();
                shape[r] += 1;
            }
        }
    }
    let n = shape.size();
    let mut placements = Vec::new();
    rec(&mut shape.parts.clone(), n, &mut placements, &mut Vec::new());
    placements
        .into_iter()
        .map(|cells| {
            let mut t: Tableau = shape.parts.iter().map(|&r| vec![0; r]).collect();
            // cells[k] holds the position of entry n - k.
            for (k, (r, c)) in cells.into_iter().enumerate() {
                t[r][c] = n - k;
            }
            t
        })
        .collect()
}
