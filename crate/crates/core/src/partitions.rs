//! Young-diagram combinatorics: partitions, conjugation, dominance order,
//! cell statistics and enumeration.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers. The empty
/// partition is a first-class value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} contains a zero part")));
        }
        Ok(Partition(parts))
    }

    /// `r` parts all equal to one (the column `1^r`).
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    /// Single row `(n)`; `row(0)` is the empty partition.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Parses the text notation `"3,1,1"`; the empty string is the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {x:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `lambda_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.0.iter().filter(|&&p| p as usize >= j).count() as u32);
        }
        Partition(parts)
    }

    /// Number of parts equal to `j` (for `j >= 1`).
    pub fn multiplicity(&self, j: u32) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    /// `z_lambda = prod_j j^{m_j} m_j!`.
    pub fn z_factor(&self) -> BigRational {
        let mut z = BigInt::one();
        let mut j = 1;
        while j <= self.first_part() {
            let m = self.multiplicity(j);
            for _ in 0..m {
                z *= BigInt::from(j);
            }
            for k in 1..=m {
                z *= BigInt::from(k);
            }
            j += 1;
        }
        BigRational::from(z)
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as i64 * p as i64)
            .sum()
    }

    /// Cells `(i, j)` of the diagram, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.0.len() && j <= self.0[i - 1] as usize
    }

    /// `(arm, leg, coarm, coleg)` of a cell.
    pub fn cell_stats(&self, i: usize, j: usize) -> Result<(u32, u32, u32, u32)> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutsideDiagram(i, j));
        }
        let conj = self.conjugate();
        let arm = self.0[i - 1] - j as u32;
        let leg = conj.0[j - 1] - i as u32;
        Ok((arm, leg, j as u32 - 1, i as u32 - 1))
    }

    /// Containment of diagrams: `self` fits inside `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i + 1))
    }

    /// Dominance: true iff sizes agree and all prefix sums of `self` are at
    /// most those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.0.len().max(other.0.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 1..=n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Multiset union, used for products of power sums.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All partitions of `n` (optionally of length at most `max_len`) in
    /// reverse-lexicographic order: `(n)` first, `1^n` last.
    pub fn enumerate(n: u32, max_len: Option<usize>) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            remaining: u32,
            max_part: u32,
            max_len: usize,
            current: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            if current.len() >= max_len {
                return;
            }
            let top = remaining.min(max_part);
            for p in (1..=top).rev() {
                current.push(p);
                rec(remaining - p, p, max_len, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), max_len.unwrap_or(usize::MAX), &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, ordered by size then rev-lex.
    pub fn enumerate_up_to(n: u32, max_len: Option<usize>) -> Vec<Partition> {
        (0..=n).flat_map(|d| Self::enumerate(d, max_len)).collect()
    }
}

/// Dominance comparison as a free function: `mu <= lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    mu.dominated_by(lambda)
}

/// Distinct permutations of a multiset of non-negative integers, in
/// deterministic (descending-lex) order.
pub fn distinct_permutations(entries: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = entries.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(entries.len());
    fn rec(pool: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pool.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut i = 0;
        while i < pool.len() {
            if i > 0 && pool[i] == pool[i - 1] {
                i += 1;
                continue;
            }
            let v = pool.remove(i);
            current.push(v);
            rec(pool, current, out);
            current.pop();
            pool.insert(i, v);
            i += 1;
        }
    }
    rec(&mut sorted, &mut current, &mut out);
    out
}

/// All permutations of `0..n` with their inversion numbers.
pub fn permutations_with_inversions(n: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        if k <= 1 {
            let inv = inversions(perm);
            out.push((perm.clone(), inv));
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    fn inversions(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }
    heap(n, &mut perm, &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for lam in Partition::enumerate(6, None) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2])));
        assert!(!dominance_leq(&p(&[2]), &p(&[1, 1])));
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        // Incomparable pair: prefix sums 3,4,5,6 vs 2,4,6.
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])));
        assert!(!dominance_leq(&p(&[2, 2, 2]), &p(&[3, 1, 1, 1])));
    }

    #[test]
    fn dominance_is_partial_order() {
        for d in 0..=6u32 {
            let all = Partition::enumerate(d, None);
            for a in &all {
                assert!(dominance_leq(a, a));
                for b in &all {
                    if dominance_leq(a, b) && dominance_leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if dominance_leq(a, b) && dominance_leq(b, c) {
                            assert!(dominance_leq(a, c));
                        }
                    }
                    // Conjugation is antitone.
                    assert_eq!(
                        dominance_leq(a, b),
                        dominance_leq(&b.conjugate(), &a.conjugate())
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(Partition::enumerate(0, None), vec![Partition::empty()]);
        assert_eq!(Partition::enumerate(4, None).len(), 5);
        assert_eq!(Partition::enumerate(7, None).len(), 15);
        let four = Partition::enumerate(4, None);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[1], p(&[3, 1]));
        assert_eq!(four[2], p(&[2, 2]));
        assert_eq!(four[3], p(&[2, 1, 1]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
        assert_eq!(Partition::enumerate(4, Some(2)).len(), 3);
    }

    #[test]
    fn cell_statistics() {
        assert_eq!(p(&[3, 1]).cell_stats(1, 1).unwrap(), (2, 1, 0, 0));
        assert_eq!(p(&[1]).cell_stats(1, 1).unwrap(), (0, 0, 0, 0));
        assert_eq!(p(&[2, 2]).cell_stats(1, 2).unwrap(), (0, 1, 1, 0));
        assert!(matches!(
            p(&[2, 2]).cell_stats(3, 1),
            Err(Error::CellOutsideDiagram(3, 1))
        ));
        for lam in Partition::enumerate(5, None) {
            assert_eq!(lam.cells().count() as u32, lam.size());
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(Partition::parse("3,1,1").unwrap(), p(&[3, 1, 1]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "3,1,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert!(Partition::parse("1,3").is_err());
        assert!(Partition::parse("2,0").is_err());
    }

    #[test]
    fn distinct_permutation_counts() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }
}
