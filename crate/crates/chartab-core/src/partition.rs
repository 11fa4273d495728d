//! Cycle-type index sets: partitions, bipartitions, r-partite partitions and
//! `D_n` classes, with streaming enumeration and squareness predicates.
//!
//! Conjugacy classes are indexed by partitions for `S_n`, by bipartitions
//! `(λ|μ)` for `B_n` (positive/negative cycle lengths), by r-partite
//! partitions for `G(r,1,n)` (one partition per cycle color) and by
//! bipartitions with even `ℓ(μ)` for `D_n`, where classes with `μ = ∅` and
//! all parts of `λ` even split in two.
//!
//! Enumeration order is reverse-lexicographic on part lists everywhere, with
//! component sizes descending for multi-component types, so all streams are
//! deterministic and restartable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::Error;

/// An integer partition: weakly decreasing positive parts.
///
/// Stores both the part list (used for ordering and display) and the
/// frequency map part-length → multiplicity (used by the counting formulas).
/// Two partitions are equal iff their part lists are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    freq: BTreeMap<u32, u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut freq = BTreeMap::new();
        for &p in &parts {
            *freq.entry(p).or_insert(0) += 1;
        }
        Partition { parts, freq }
    }

    /// Builds a partition from (part, multiplicity) pairs.
    pub fn from_freq(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        let mut parts = Vec::new();
        for (p, m) in pairs {
            if p == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat(p).take(m as usize));
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            freq: BTreeMap::new(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Frequency view: part length → multiplicity, ascending by part length.
    pub fn freq(&self) -> &BTreeMap<u32, u32> {
        &self.freq
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.freq.get(&part).copied().unwrap_or(0)
    }

    /// Sum of parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|&p| p % 2 == 1)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders partitions of equal size in enumeration (reverse-lexicographic)
/// order: `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Cycle type of a signed permutation: positive cycle lengths `lambda`,
/// negative cycle lengths `mu`, with `|lambda| + |mu| = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Bipartition { lambda, mu }
    }

    pub fn size(&self) -> u32 {
        self.lambda.size() + self.mu.size()
    }

    /// Number of parts of `mu` (negative cycles of a representative).
    pub fn mu_length(&self) -> usize {
        self.mu.len()
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order: `|lambda|` descending, then each component rev-lex.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .lambda
            .size()
            .cmp(&self.lambda.size())
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

/// Cycle type of an element of `G(r,1,n)`: one partition per color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPartiteType {
    comps: Vec<Partition>,
}

impl RPartiteType {
    /// `comps[t]` collects the lengths of color-`t` cycles; `comps.len()` is
    /// the color modulus `r >= 1`.
    pub fn new(comps: Vec<Partition>) -> Result<Self, Error> {
        if comps.is_empty() {
            return Err(Error::InvalidPartition(
                "need at least one component".into(),
            ));
        }
        Ok(RPartiteType { comps })
    }

    pub fn from_bipartition(b: &Bipartition) -> Self {
        RPartiteType {
            comps: vec![b.lambda.clone(), b.mu.clone()],
        }
    }

    pub fn r(&self) -> u32 {
        self.comps.len() as u32
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    pub fn component(&self, t: usize) -> &Partition {
        &self.comps[t]
    }

    pub fn size(&self) -> u32 {
        self.comps.iter().map(|p| p.size()).sum()
    }

    /// The type of the identity of `G(r,1,n)`: `n` fixed points of color 0.
    pub fn identity(r: u32, n: u32) -> Self {
        let mut comps = vec![Partition::empty(); r as usize];
        comps[0] = Partition::from_sorted(vec![1; n as usize]);
        RPartiteType { comps }
    }
}

impl PartialOrd for RPartiteType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Enumeration order: component sizes descending left to right, then rev-lex
/// within each component.
impl Ord for RPartiteType {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.comps.len(), other.comps.len());
        for (a, b) in self.comps.iter().zip(&other.comps) {
            let ord = b.size().cmp(&a.size()).then_with(|| a.cmp(b));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for RPartiteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={}: ", self.comps.len())?;
        let strs: Vec<String> = self.comps.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join("|"))
    }
}

/// Split tag of a `D_n` class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitSign {
    None,
    Plus,
    Minus,
}

/// A conjugacy class of `D_n`: a bipartition with even `ℓ(μ)`, carrying a
/// sign exactly when the underlying `B_n` class splits (`μ = ∅`, all parts
/// of `λ` even).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnClass {
    bip: Bipartition,
    sign: SplitSign,
}

impl DnClass {
    /// Whether the `B_n` class of `bip` splits in `D_n`.
    pub fn is_split_type(bip: &Bipartition) -> bool {
        bip.mu.is_empty() && !bip.lambda.is_empty() && !bip.lambda.has_odd_part()
    }

    pub fn new(bip: Bipartition, sign: SplitSign) -> Result<Self, Error> {
        if bip.mu_length() % 2 != 0 {
            return Err(Error::OddNegativeParts(bip.mu_length()));
        }
        let split = Self::is_split_type(&bip);
        match (split, sign) {
            (true, SplitSign::None) => Err(Error::InvalidPartition(format!(
                "class {bip} splits; a sign is required"
            ))),
            (false, SplitSign::Plus | SplitSign::Minus) => Err(Error::InvalidPartition(format!(
                "class {bip} does not split; no sign allowed"
            ))),
            _ => Ok(DnClass { bip, sign }),
        }
    }

    /// Builds the class from a bipartition, defaulting a split type to `+`.
    pub fn from_bipartition(bip: Bipartition) -> Result<Self, Error> {
        let sign = if Self::is_split_type(&bip) {
            SplitSign::Plus
        } else {
            SplitSign::None
        };
        Self::new(bip, sign)
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bip
    }

    pub fn sign(&self) -> SplitSign {
        self.sign
    }

    pub fn size(&self) -> u32 {
        self.bip.size()
    }
}

impl fmt::Display for DnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            SplitSign::None => write!(f, "{}", self.bip),
            SplitSign::Plus => write!(f, "{}+", self.bip),
            SplitSign::Minus => write!(f, "{}-", self.bip),
        }
    }
}

/// Streams all partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1,...,1)` last; for `n = 0` the single empty partition.
pub fn partitions(n: u32) -> PartitionIter {
    PartitionIter {
        next: Some(vec![n]),
        fresh: true,
    }
}

pub struct PartitionIter {
    next: Option<Vec<u32>>,
    fresh: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        if self.fresh {
            self.fresh = false;
            // starting state [n]; for n = 0 normalize to the empty partition
            let first: Vec<u32> = cur.iter().copied().filter(|&p| p > 0).collect();
            self.next = successor(&first);
            return Some(Partition::from_sorted(first));
        }
        self.next = successor(&cur);
        Some(Partition::from_sorted(cur))
    }
}

/// Reverse-lexicographic successor: strip trailing ones, decrement the last
/// part > 1, then refill greedily with copies of the decremented value.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let last_big = parts.iter().rposition(|&p| p > 1)?;
    let ones = (parts.len() - 1 - last_big) as u32;
    let mut next: Vec<u32> = parts[..=last_big].to_vec();
    let x = next[last_big] - 1;
    next[last_big] = x;
    let mut rem = ones + 1;
    while rem >= x {
        next.push(x);
        rem -= x;
    }
    if rem > 0 {
        next.push(rem);
    }
    Some(next)
}

/// Streams all bipartitions of `n`: `|λ|` descending, rev-lex per component.
pub fn bipartitions(n: u32) -> impl Iterator<Item = Bipartition> {
    (0..=n).rev().flat_map(move |k| {
        partitions(k)
            .flat_map(move |lam| partitions(n - k).map(move |mu| Bipartition::new(lam.clone(), mu)))
    })
}

/// Streams all r-tuples of partitions with total size `n`.
///
/// Reduces to [`partitions`] at `r = 1` and emits the same set as
/// [`bipartitions`] at `r = 2`.
pub fn r_partite_types(r: u32, n: u32) -> Box<dyn Iterator<Item = RPartiteType>> {
    assert!(r >= 1, "color modulus must be at least 1");
    if r == 1 {
        return Box::new(partitions(n).map(|p| RPartiteType { comps: vec![p] }));
    }
    Box::new((0..=n).rev().flat_map(move |k| {
        partitions(k).flat_map(move |head| {
            r_partite_types(r - 1, n - k).map(move |tail| {
                let mut comps = Vec::with_capacity(r as usize);
                comps.push(head.clone());
                comps.extend(tail.comps);
                RPartiteType { comps }
            })
        })
    }))
}

/// Visits every r-tuple of partitions with total size `n` without
/// materializing the tuples: partition lists per size are built once and the
/// components are passed by reference, in the same order as
/// [`r_partite_types`].  This is the fast path for exhaustive scans over
/// millions of types.
pub fn for_each_r_partite<F: FnMut(&[&Partition])>(r: u32, n: u32, mut f: F) {
    assert!(r >= 1);
    let lists: Vec<Vec<Partition>> = (0..=n).map(|k| partitions(k).collect()).collect();
    let mut stack: Vec<&Partition> = Vec::with_capacity(r as usize);
    fn recurse<'a, F: FnMut(&[&Partition])>(
        lists: &'a [Vec<Partition>],
        comps_left: usize,
        size_left: usize,
        stack: &mut Vec<&'a Partition>,
        f: &mut F,
    ) {
        if comps_left == 1 {
            for p in &lists[size_left] {
                stack.push(p);
                f(stack);
                stack.pop();
            }
            return;
        }
        for k in (0..=size_left).rev() {
            for p in &lists[k] {
                stack.push(p);
                recurse(lists, comps_left - 1, size_left - k, stack, f);
                stack.pop();
            }
        }
    }
    recurse(&lists, r as usize, n as usize, &mut stack, &mut f);
}

/// Streams the conjugacy classes of `D_n`: bipartitions with even `ℓ(μ)`,
/// split types emitted twice (`+` then `-`).  For odd `n` no class splits.
pub fn dn_classes(n: u32) -> impl Iterator<Item = DnClass> {
    bipartitions(n)
        .filter(|b| b.mu_length() % 2 == 0)
        .flat_map(|bip| {
            let signs: &[SplitSign] = if DnClass::is_split_type(&bip) {
                &[SplitSign::Plus, SplitSign::Minus]
            } else {
                &[SplitSign::None]
            };
            signs.iter().map(move |&sign| DnClass {
                bip: bip.clone(),
                sign,
            })
        })
}

/// A partition is the cycle type of a square in `S_n` iff every even part
/// has even multiplicity.
pub fn has_sqrt_a(p: &Partition) -> bool {
    p.freq()
        .iter()
        .all(|(&part, &m)| part % 2 == 1 || m % 2 == 0)
}

/// A bipartition is the cycle type of a square in `B_n` iff every even part
/// of `λ` and every part of `μ` has even multiplicity.
pub fn has_sqrt_b(b: &Bipartition) -> bool {
    has_sqrt_a(&b.lambda) && b.mu.freq().values().all(|&m| m % 2 == 0)
}

/// A `D_n` class contains squares iff the `B_n` criterion holds and
/// additionally `λ` has an odd part or `4 | ℓ(μ)`.
pub fn has_sqrt_d(c: &DnClass) -> bool {
    let b = c.bipartition();
    has_sqrt_b(b) && (b.lambda.has_odd_part() || b.mu_length() % 4 == 0)
}

/// Square criterion in `G(r,1,n)`: every even part of every component has
/// even multiplicity, and for even `r` the odd parts of odd-color components
/// have even multiplicity too.
pub fn has_sqrt_grn(t: &RPartiteType) -> bool {
    let comps: Vec<&Partition> = t.components().iter().collect();
    has_sqrt_grn_comps(t.r(), &comps)
}

/// Slice-based form of [`has_sqrt_grn`] for scans via [`for_each_r_partite`].
pub fn has_sqrt_grn_comps(r: u32, comps: &[&Partition]) -> bool {
    comps.iter().enumerate().all(|(color, comp)| {
        comp.freq().iter().all(|(&part, &m)| {
            if part % 2 == 0 {
                m % 2 == 0
            } else {
                r % 2 == 1 || color % 2 == 0 || m % 2 == 0
            }
        })
    })
}

/// Absolute-square criterion in `G(r,1,n)`: even parts of the color-0
/// component have even multiplicity, `λ^t = λ^{r-t}` for `0 < t < r/2`, and
/// for even `r` all parts of the color-`r/2` component have even multiplicity.
pub fn has_abs_sqrt_grn(t: &RPartiteType) -> bool {
    let comps: Vec<&Partition> = t.components().iter().collect();
    has_abs_sqrt_grn_comps(t.r(), &comps)
}

/// Slice-based form of [`has_abs_sqrt_grn`].
pub fn has_abs_sqrt_grn_comps(r: u32, comps: &[&Partition]) -> bool {
    let r = r as usize;
    if !has_sqrt_a(comps[0]) {
        return false;
    }
    for c in 1..(r + 1) / 2 {
        if comps[c] != comps[r - c] {
            return false;
        }
    }
    if r % 2 == 0 && !comps[r / 2].freq().values().all(|&m| m % 2 == 0) {
        return false;
    }
    true
}

/// Size-preserving bijection from partitions whose even parts have even
/// multiplicity to partitions with no part `≡ 2 (mod 4)`: each even part
/// `2i` with multiplicity `2m` becomes `4i` with multiplicity `m`; odd parts
/// are kept.
pub fn bijection_f(p: &Partition) -> Result<Partition, Error> {
    if !has_sqrt_a(p) {
        return Err(Error::BijectionDomain(
            p.to_string(),
            "an even part has odd multiplicity".into(),
        ));
    }
    let pairs = p.freq().iter().map(|(&part, &m)| {
        if part % 2 == 0 {
            (2 * part, m / 2)
        } else {
            (part, m)
        }
    });
    Partition::from_freq(pairs)
}

/// Size-preserving bijection doubling part lengths: each part `i` with
/// multiplicity `2m` becomes `2i` with multiplicity `m`.  Requires every
/// multiplicity to be even.
pub fn bijection_g(p: &Partition) -> Result<Partition, Error> {
    if p.freq().values().any(|&m| m % 2 != 0) {
        return Err(Error::BijectionDomain(
            p.to_string(),
            "a part has odd multiplicity".into(),
        ));
    }
    Partition::from_freq(p.freq().iter().map(|(&part, &m)| (2 * part, m / 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order_and_counts() {
        let got: Vec<Vec<u32>> = partitions(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions(0).count(), 1);
        assert_eq!(partitions(0).next().unwrap(), Partition::empty());
        assert_eq!(partitions(12).count(), 77);
        // p(n) for n = 0..=10
        let pn: Vec<usize> = (0..=10).map(|n| partitions(n).count()).collect();
        assert_eq!(pn, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partitions_are_valid_and_distinct() {
        for n in 0..=15 {
            let all: Vec<Partition> = partitions(n).collect();
            for p in &all {
                assert_eq!(p.size(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                let total: u32 = p.freq().iter().map(|(&l, &m)| l * m).sum();
                assert_eq!(total, n);
            }
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            assert_eq!(sorted, all, "enumeration must already be in Ord order");
        }
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(bipartitions(1).count(), 2);
        assert_eq!(bipartitions(2).count(), 5);
        // number of conjugacy classes of B_n: Σ_k p(k) p(n-k)
        for n in 0..=8u32 {
            let conv: usize = (0..=n)
                .map(|k| partitions(k).count() * partitions(n - k).count())
                .sum();
            assert_eq!(bipartitions(n).count(), conv);
        }
        assert_eq!(bipartitions(5).count(), 36);
    }

    #[test]
    fn r_partite_reductions() {
        assert_eq!(r_partite_types(1, 4).count(), 5);
        assert_eq!(r_partite_types(3, 1).count(), 3);
        assert_eq!(r_partite_types(3, 2).count(), 9);
        for n in 0..=6 {
            let via_r: Vec<Bipartition> = r_partite_types(2, n)
                .map(|t| Bipartition::new(t.component(0).clone(), t.component(1).clone()))
                .collect();
            let direct: Vec<Bipartition> = bipartitions(n).collect();
            assert_eq!(via_r, direct);
        }
    }

    #[test]
    fn visitor_matches_boxed_enumeration() {
        for r in 1..=3u32 {
            for n in 0..=6u32 {
                let boxed: Vec<RPartiteType> = r_partite_types(r, n).collect();
                let mut visited = Vec::new();
                for_each_r_partite(r, n, |comps| {
                    visited.push(
                        RPartiteType::new(comps.iter().map(|&p| p.clone()).collect()).unwrap(),
                    );
                });
                assert_eq!(boxed, visited, "r={r}, n={n}");
            }
        }
    }

    #[test]
    fn dn_class_streams() {
        let classes: Vec<String> = dn_classes(2).map(|c| c.to_string()).collect();
        assert_eq!(classes, vec!["2|-+", "2|--", "1,1|-", "-|1,1"]);
        // D_3 ≅ S_4 has 5 classes, none split
        let d3: Vec<DnClass> = dn_classes(3).collect();
        assert_eq!(d3.len(), 5);
        assert!(d3.iter().all(|c| c.sign() == SplitSign::None));
        assert_eq!(dn_classes(4).count(), 13);
        // no split classes for odd n
        for n in (1..=9).step_by(2) {
            assert!(dn_classes(n).all(|c| c.sign() == SplitSign::None));
        }
    }

    #[test]
    fn squareness_predicates() {
        assert!(!has_sqrt_a(&p(&[2])));
        assert!(has_sqrt_a(&p(&[1, 1, 1])));
        assert!(!has_sqrt_a(&p(&[4, 2, 2])));

        assert!(has_sqrt_b(&Bipartition::new(
            p(&[1, 1]),
            Partition::empty()
        )));
        assert!(!has_sqrt_b(&Bipartition::new(Partition::empty(), p(&[1]))));
        assert!(has_sqrt_b(&Bipartition::new(p(&[2, 2]), p(&[3, 3]))));

        let c =
            DnClass::from_bipartition(Bipartition::new(Partition::empty(), p(&[1, 1]))).unwrap();
        assert!(!has_sqrt_d(&c));
        let c = DnClass::from_bipartition(Bipartition::new(p(&[1]), p(&[1, 1]))).unwrap();
        assert!(has_sqrt_d(&c));
        for sign in [SplitSign::Plus, SplitSign::Minus] {
            let c = DnClass::new(Bipartition::new(p(&[2, 2]), Partition::empty()), sign).unwrap();
            assert!(has_sqrt_d(&c));
        }
        assert!(DnClass::from_bipartition(Bipartition::new(p(&[2]), p(&[1]))).is_err());

        let t = |comps: Vec<Partition>| RPartiteType::new(comps).unwrap();
        let e = Partition::empty();
        assert!(has_sqrt_grn(&t(vec![e.clone(), p(&[1]), e.clone()])));
        assert!(!has_sqrt_grn(&t(vec![e.clone(), p(&[1])])));
        assert!(has_sqrt_grn(&t(vec![
            e.clone(),
            e.clone(),
            p(&[3]),
            e.clone()
        ])));

        assert!(has_abs_sqrt_grn(&t(vec![e.clone(), p(&[2]), p(&[2])])));
        assert!(!has_abs_sqrt_grn(&t(vec![e.clone(), p(&[1]), e.clone()])));
        assert!(has_abs_sqrt_grn(&t(vec![e.clone(), p(&[3, 3])])));
    }

    #[test]
    fn bijections() {
        assert_eq!(bijection_f(&p(&[2, 2])).unwrap(), p(&[4]));
        assert_eq!(bijection_f(&p(&[1, 1, 1])).unwrap(), p(&[1, 1, 1]));
        assert!(bijection_f(&p(&[2])).is_err());
        assert_eq!(bijection_g(&p(&[3, 3, 1, 1])).unwrap(), p(&[6, 2]));
        assert!(bijection_g(&p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn bijection_f_image_is_no_part_2_mod_4() {
        // injective with image exactly {λ ⊢ n : no part ≡ 2 (mod 4)}
        for n in 0..=30 {
            let domain: Vec<Partition> = partitions(n).filter(has_sqrt_a).collect();
            let mut image: Vec<Partition> =
                domain.iter().map(|p| bijection_f(p).unwrap()).collect();
            for q in &image {
                assert_eq!(q.size(), n);
            }
            image.sort();
            image.dedup();
            assert_eq!(image.len(), domain.len(), "f not injective at n={n}");
            let target: Vec<Partition> = partitions(n)
                .filter(|p| p.parts().iter().all(|&x| x % 4 != 2))
                .collect();
            let mut target = target;
            target.sort();
            assert_eq!(image, target);
        }
    }

    #[test]
    fn complement_of_square_types_has_part_2_mod_4() {
        for n in 0..=30 {
            let total = partitions(n).count();
            let with_sqrt = partitions(n).filter(has_sqrt_a).count();
            let bad = partitions(n)
                .filter(|p| p.parts().iter().any(|&x| x % 4 == 2))
                .count();
            assert_eq!(with_sqrt + bad, total);
        }
    }
}
