use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A partition with at most `n` nonzero parts.
///
/// Parts are stored without trailing zeros; `n` is carried so that dominance
/// comparisons, `(ρ,λ)` and `∂λ'` are well defined. The derived ordering is
/// graded lexicographic (weight first, then parts), a linear extension of
/// dominance.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: usize,
}

impl Partition {
    /// Builds a partition from parts (trailing zeros allowed) in `Λ_n`.
    pub fn new(parts: &[u32], n: usize) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has more than {n} nonzero parts"
            )));
        }
        Ok(Partition { parts, n })
    }

    pub fn zero(n: usize) -> Partition {
        Partition { parts: Vec::new(), n }
    }

    /// The fundamental weight `ω_r = (1^r, 0^{n-r})`.
    pub fn fundamental(r: usize, n: usize) -> Result<Partition> {
        Partition::new(&vec![1; r], n)
    }

    pub fn context_n(&self) -> usize {
        self.n
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `n`.
    pub fn padded(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(self.n, 0);
        v
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `(ρ,λ) = Σ_i (n-i) λ_i`.
    pub fn rho_pairing(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (self.n - 1 - i) as i64 * p as i64)
            .sum()
    }

    /// `(λ,λ) = Σ_i λ_i²`.
    pub fn self_pairing(&self) -> i64 {
        self.parts.iter().map(|&p| (p as i64) * (p as i64)).sum()
    }

    /// Transposed diagram; its context is `λ_1`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts, n: width }
    }

    /// `∂λ' = (λ'_j - λ'_{j+1})_{j=0..λ_1}` with `λ'_0 = n`; sums to `n`.
    pub fn conjugate_differences(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let width = self.part(0) as usize;
        let col = |j: usize| if j == 0 { self.n as u32 } else { conj.part(j - 1) };
        (0..=width).map(|j| col(j) - col(j + 1)).collect()
    }

    /// Same parts viewed in another context `Λ_m`.
    pub fn with_context(&self, m: usize) -> Result<Partition> {
        Partition::new(&self.parts, m)
    }

    /// Young-diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise sum, used as a degree bound for products.
    pub fn add(&self, other: &Partition) -> Result<Partition> {
        check_context(self, other)?;
        let sum: Vec<u32> = (0..self.n).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(&sum, self.n)
    }
}

fn check_context(a: &Partition, b: &Partition) -> Result<()> {
    if a.n != b.n {
        return Err(Error::MismatchedContext { left: a.n, right: b.n });
    }
    Ok(())
}

impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `μ ≤ λ` in dominance order: every leading partial sum of `μ` is bounded by
/// the corresponding one of `λ`. Weights need not agree.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    check_context(mu, lambda)?;
    let (mut sm, mut sl) = (0u64, 0u64);
    for i in 0..mu.n {
        sm += mu.part(i) as u64;
        sl += lambda.part(i) as u64;
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `Λ_n` with weight at most `max_weight` and largest part
/// at most `max_part`, sorted graded-lex.
pub fn partitions_up_to(n: usize, max_weight: u64, max_part: u32) -> Vec<Partition> {
    fn rec(n: usize, left: u64, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone(), n });
        if cur.len() == n {
            return;
        }
        let top = cap.min(left.min(u32::MAX as u64) as u32);
        for p in 1..=top {
            cur.push(p);
            rec(n, left - p as u64, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_weight, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `{μ ∈ Λ_n : μ ≤ λ}` in dominance order, sorted graded-lex.
pub fn enumerate_below(lambda: &Partition) -> Vec<Partition> {
    partitions_up_to(lambda.n, lambda.weight(), lambda.part(0))
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda).unwrap_or(false))
        .collect()
}

/// All `λ ⊆ k^n`, sorted graded-lex.
pub fn enumerate_contained(k: u32, n: usize) -> Vec<Partition> {
    partitions_up_to(n, k as u64 * n as u64, k)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.padded().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a comma-separated list of parts, e.g. `"2,1"`. The context is the
/// number of listed parts; use [`Partition::with_context`] to widen it.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::zero(0));
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        let n = parts.len();
        Partition::new(&parts, n)
    }
}

/// Serialized as the zero-padded array of parts.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.padded().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        let n = parts.len();
        Partition::new(&parts, n).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32], n: usize) -> Partition {
        Partition::new(parts, n).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1], 2).conjugate().parts(), &[2, 1, 1]);
        assert!(p(&[0], 1).conjugate().is_empty());
        assert_eq!(p(&[2, 2, 1], 3).conjugate().parts(), &[3, 2]);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(&[1, 2], 2).is_err());
        assert!(Partition::new(&[1, 1, 1], 2).is_err());
        assert!(Partition::new(&[1, 1, 0], 2).is_ok());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1], 2), &p(&[2, 0], 2)).unwrap());
        assert!(!dominance_leq(&p(&[2, 0], 2), &p(&[1, 1], 2)).unwrap());
        assert!(dominance_leq(&p(&[1, 0], 2), &p(&[2, 1], 2)).unwrap());
        assert!(dominance_leq(&p(&[1], 1), &p(&[1, 0], 2)).is_err());
    }

    #[test]
    fn enumerate_below_examples() {
        assert_eq!(enumerate_below(&p(&[0, 0], 2)), vec![p(&[], 2)]);
        assert_eq!(enumerate_below(&p(&[1, 0], 2)), vec![p(&[], 2), p(&[1], 2)]);
        assert_eq!(
            enumerate_below(&p(&[2, 0], 2)),
            vec![p(&[], 2), p(&[1], 2), p(&[1, 1], 2), p(&[2], 2)]
        );
    }

    #[test]
    fn enumerate_contained_examples() {
        assert_eq!(enumerate_contained(1, 1), vec![p(&[], 1), p(&[1], 1)]);
        assert_eq!(
            enumerate_contained(1, 2),
            vec![p(&[], 2), p(&[1], 2), p(&[1, 1], 2)]
        );
        for k in 0..5u32 {
            assert_eq!(enumerate_contained(k, 2).len() as u32, (k + 1) * (k + 2) / 2);
        }
    }

    #[test]
    fn conjugate_differences_sum_to_n() {
        let lam = p(&[3, 1], 4);
        assert_eq!(lam.conjugate_differences(), vec![2, 1, 0, 1]);
        assert_eq!(lam.conjugate_differences().iter().sum::<u32>(), 4);
        assert_eq!(Partition::zero(3).conjugate_differences(), vec![3]);
    }

    #[test]
    fn pairings() {
        let lam = p(&[2, 1, 0], 3);
        assert_eq!(lam.rho_pairing(), 2 * 2 + 1);
        assert_eq!(lam.self_pairing(), 5);
    }

    #[test]
    fn serialization_pads() {
        let lam = p(&[2, 1], 3);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[2,1,0]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, lam);
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1], 2));
    }

    #[test]
    fn order_is_graded_lex() {
        let mut v = vec![p(&[1, 1], 2), p(&[2], 2), p(&[1], 2), p(&[], 2)];
        v.sort();
        assert_eq!(v, vec![p(&[], 2), p(&[1], 2), p(&[1, 1], 2), p(&[2], 2)]);
    }
}
