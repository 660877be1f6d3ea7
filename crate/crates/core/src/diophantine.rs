//! Nonnegative solutions of the two-equation system behind `Z_{m,k}`.
//!
//! A solution `(n_1, …, n_{m-k+1})` of `Σ n_i = k`, `Σ i·n_i = m` is the
//! multiplicity form of a partition of `m` into exactly `k` parts: `n_i`
//! counts how many parts equal `i`. No part can exceed `m - k + 1`, which is
//! why the reduced system never mentions `n_{m-k+2}, …, n_m`.

use std::cmp::Ordering;

use crate::{Error, Result};

/// One solution of the system, stored sparsely.
///
/// `entries` holds `(index, multiplicity)` pairs with strictly increasing
/// index and multiplicity at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    m: usize,
    k: usize,
    entries: Vec<(usize, usize)>,
}

impl MultiplicityVector {
    /// Builds a vector from `(index, multiplicity)` pairs, checking every
    /// invariant. Zero multiplicities are dropped and indices may come in any
    /// order, but each index may appear only once.
    pub fn new(m: usize, k: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_args(m, k)?;
        let mut entries: Vec<(usize, usize)> = pairs.into_iter().filter(|&(_, n)| n > 0).collect();
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Malformed("repeated index in multiplicity vector".into()));
        }
        if entries.iter().any(|&(i, _)| i == 0) {
            return Err(Error::Malformed("component index 0 is not allowed".into()));
        }
        let power: usize = entries.iter().map(|&(_, n)| n).sum();
        let weight: usize = entries.iter().map(|&(i, n)| i * n).sum();
        if power != k || weight != m {
            return Err(Error::Malformed(format!(
                "exponents give power sum {power} and subscript sum {weight}, expected {k} and {m}"
            )));
        }
        // Implied by the two sums, kept as an explicit guard.
        if entries.last().is_some_and(|&(i, _)| i > m - k + 1) {
            return Err(Error::Malformed(format!(
                "index exceeds m - k + 1 = {}",
                m - k + 1
            )));
        }
        Ok(Self { m, k, entries })
    }

    fn from_partition(m: usize, k: usize, parts: &[usize]) -> Self {
        // parts are non-increasing, so walk them backwards for increasing indices
        let mut entries: Vec<(usize, usize)> = Vec::new();
        for &p in parts.iter().rev() {
            match entries.last_mut() {
                Some((i, n)) if *i == p => *n += 1,
                _ => entries.push((p, 1)),
            }
        }
        Self { m, k, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Nonzero `(index, multiplicity)` pairs in increasing index order.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    /// Multiplicity of `u_index`; zero when absent.
    pub fn multiplicity(&self, index: usize) -> usize {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .map_or(0, |pos| self.entries[pos].1)
    }

    pub fn max_index(&self) -> usize {
        self.entries.last().map_or(0, |&(i, _)| i)
    }

    /// The underlying partition of `m`, largest part first.
    pub fn partition(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.k);
        for &(i, n) in self.entries.iter().rev() {
            parts.extend(std::iter::repeat_n(i, n));
        }
        parts
    }

    /// Canonical emission order: decreasing lexicographic order of the
    /// underlying partition.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.partition().cmp(&self.partition())
    }
}

fn check_args(m: usize, k: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroSubscript);
    }
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(())
}

/// All solutions of the reduced system for `(m, k)`, in canonical order.
///
/// Returns an empty list when `k > m`.
pub fn enumerate(m: usize, k: usize) -> Result<Vec<MultiplicityVector>> {
    check_args(m, k)?;
    let mut out = Vec::new();
    if k > m {
        return Ok(out);
    }
    let mut parts = Vec::with_capacity(k);
    descend(m, k, m - k + 1, &mut parts, &mut |parts| {
        out.push(MultiplicityVector::from_partition(m, k, parts));
    });
    Ok(out)
}

/// Partitions of `remaining` into exactly `slots` parts, each at most
/// `max_part`, largest part first.
fn descend(
    remaining: usize,
    slots: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if slots == 0 {
        if remaining == 0 {
            emit(parts);
        }
        return;
    }
    // each later part is at least 1 and at most the current part
    let hi = max_part.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for part in (lo..=hi).rev() {
        parts.push(part);
        descend(remaining - part, slots - 1, part, parts, emit);
        parts.pop();
    }
}

/// Number of solutions for `(m, k)`, i.e. the number of partitions of `m`
/// into exactly `k` parts. Computed without enumerating.
pub fn count(m: usize, k: usize) -> Result<u128> {
    check_args(m, k)?;
    if k > m {
        return Ok(0);
    }
    // Removing one from every part maps partitions of m into exactly k parts
    // onto partitions of m - k into parts of size at most k.
    let n = m - k;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=k.min(n) {
        for total in part..=n {
            ways[total] = ways[total]
                .checked_add(ways[total - part])
                .ok_or(Error::CountOverflow { m, k })?;
        }
    }
    Ok(ways[n])
}

/// Solutions of the unreduced system over `n_1, …, n_m`, in canonical order.
///
/// Searches every index `1..=m` without the `m - k + 1` bound; it agrees
/// with [`enumerate`] because the tail multiplicities are forced to zero.
pub fn enumerate_full(m: usize, k: usize) -> Result<Vec<MultiplicityVector>> {
    check_args(m, k)?;
    let mut out = Vec::new();
    let mut mult = vec![0usize; m + 1];
    assign(m, m, k, &mut mult, &mut out, m, k);
    out.sort_by(MultiplicityVector::canonical_cmp);
    Ok(out)
}

/// Chooses `n_index`, then recurses on lower indices.
fn assign(
    index: usize,
    weight_left: usize,
    power_left: usize,
    mult: &mut [usize],
    out: &mut Vec<MultiplicityVector>,
    m: usize,
    k: usize,
) {
    if index == 1 {
        // n_1 must close both equations at once
        if weight_left == power_left {
            mult[1] = power_left;
            let pairs = (1..=m).filter(|&i| mult[i] > 0).map(|i| (i, mult[i]));
            out.push(MultiplicityVector {
                m,
                k,
                entries: pairs.collect(),
            });
            mult[1] = 0;
        }
        return;
    }
    let max_n = (weight_left / index).min(power_left);
    for n in 0..=max_n {
        mult[index] = n;
        assign(
            index - 1,
            weight_left - index * n,
            power_left - n,
            mult,
            out,
            m,
            k,
        );
    }
    mult[index] = 0;
}
