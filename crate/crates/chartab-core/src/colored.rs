//! Colored permutations: concrete elements of `G(r,q,n)` for the
//! brute-force oracle.
//!
//! An element is a color vector over `Z_r` plus a permutation of `{0..n-1}`.
//! The product follows the wreath-product rule
//! `(z; σ)(z'; σ') = (z + σ·z'; σσ')` with `(σ·z')_i = z'_{σ^{-1}(i)}`, and
//! `G(r,q,n)` is the subgroup where the color sum is divisible by `q`.

use crate::partition::{Partition, RPartiteType};
use crate::{Error, Int};
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    r: u32,
    colors: Vec<u32>,
    perm: Vec<u32>,
}

impl ColoredPermutation {
    pub fn new(r: u32, colors: Vec<u32>, perm: Vec<u32>) -> Self {
        assert!(r >= 1);
        assert_eq!(colors.len(), perm.len());
        debug_assert!(colors.iter().all(|&c| c < r));
        debug_assert!({
            let mut seen = vec![false; perm.len()];
            perm.iter().all(|&p| {
                let fresh = !seen[p as usize];
                seen[p as usize] = true;
                fresh
            })
        });
        ColoredPermutation { r, colors, perm }
    }

    pub fn identity(r: u32, n: u32) -> Self {
        ColoredPermutation::new(r, vec![0; n as usize], (0..n).collect())
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let n = self.n();
        let mut inv_self = vec![0u32; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv_self[p as usize] = i as u32;
        }
        let perm = (0..n).map(|i| self.perm[other.perm[i] as usize]).collect();
        let colors = (0..n)
            .map(|i| (self.colors[i] + other.colors[inv_self[i] as usize]) % self.r)
            .collect();
        ColoredPermutation {
            r: self.r,
            colors,
            perm,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0u32; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u32;
        }
        let colors = (0..n)
            .map(|i| (self.r - self.colors[self.perm[i] as usize] % self.r) % self.r)
            .collect();
        ColoredPermutation {
            r: self.r,
            colors,
            perm,
        }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Negates every color.
    pub fn bar(&self) -> Self {
        let colors = self
            .colors
            .iter()
            .map(|&c| (self.r - c % self.r) % self.r)
            .collect();
        ColoredPermutation {
            r: self.r,
            colors,
            perm: self.perm.clone(),
        }
    }

    /// `π · π̄`, the absolute square.
    pub fn abs_square(&self) -> Self {
        self.mul(&self.bar())
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn color_sum(&self) -> u32 {
        self.colors.iter().fold(0u32, |acc, &c| (acc + c) % self.r)
    }

    /// Each cycle of the permutation contributes its length to the component
    /// indexed by the sum of its colors.
    pub fn cycle_type(&self) -> RPartiteType {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps: Vec<Vec<u32>> = vec![Vec::new(); self.r as usize];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut color = 0u32;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                color = (color + self.colors[j]) % self.r;
                len += 1;
                j = self.perm[j] as usize;
            }
            comps[color as usize].push(len);
        }
        let comps = comps
            .into_iter()
            .map(|mut parts| {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::from_sorted(parts)
            })
            .collect();
        RPartiteType::new(comps).expect("r >= 1")
    }
}

/// The colored-permutation families the oracle can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `S_n = G(1,1,n)`
    Symmetric,
    /// `B_n = G(2,1,n)`
    Hyperoctahedral,
    /// `D_n = G(2,2,n)`
    Demihyperoctahedral,
    /// `G(r,q,n)` with `q | r`
    Generalized,
    /// `dih(n) = G(n,n,2)`
    Dihedral,
}

/// A concrete group instance: `G(r,q,n)` with `q | r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: Family,
    pub r: u32,
    pub q: u32,
    pub n: u32,
}

impl GroupSpec {
    pub fn symmetric(n: u32) -> Self {
        GroupSpec {
            family: Family::Symmetric,
            r: 1,
            q: 1,
            n,
        }
    }

    pub fn hyperoctahedral(n: u32) -> Self {
        GroupSpec {
            family: Family::Hyperoctahedral,
            r: 2,
            q: 1,
            n,
        }
    }

    pub fn demihyperoctahedral(n: u32) -> Self {
        GroupSpec {
            family: Family::Demihyperoctahedral,
            r: 2,
            q: 2,
            n,
        }
    }

    pub fn generalized(r: u32, q: u32, n: u32) -> Result<Self, Error> {
        if r == 0 || q == 0 || r % q != 0 {
            return Err(Error::InvalidGroup(format!(
                "need q | r with r, q >= 1, got r={r}, q={q}"
            )));
        }
        Ok(GroupSpec {
            family: Family::Generalized,
            r,
            q,
            n,
        })
    }

    pub fn dihedral(n: u32) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::InvalidGroup(format!(
                "dihedral needs n >= 3, got {n}"
            )));
        }
        Ok(GroupSpec {
            family: Family::Dihedral,
            r: n,
            q: n,
            n: 2,
        })
    }

    /// `|G| = r^n n! / q`.
    pub fn order(&self) -> Int {
        let mut acc = Int::from(self.r).pow(self.n);
        for k in 2..=self.n {
            acc *= k;
        }
        acc / self.q
    }

    /// Number of (color vector, permutation) pairs scanned by enumeration.
    fn scan_len(&self) -> Option<u64> {
        let perms: u64 = (2..=self.n as u64).product();
        (self.r as u64)
            .checked_pow(self.n)
            .and_then(|c| c.checked_mul(perms))
    }

    pub fn check_budget(&self, budget: u64) -> Result<(), Error> {
        let order = self.order();
        if self.scan_len().is_none() || order > Int::from(budget) {
            return Err(Error::BudgetExceeded { order, budget });
        }
        Ok(())
    }

    /// Streams every element exactly once: permutations in index order,
    /// color vectors in base-`r` order, filtered by the color-sum condition.
    pub fn elements(
        &self,
        budget: u64,
    ) -> Result<impl Iterator<Item = ColoredPermutation> + '_, Error> {
        self.check_budget(budget)?;
        let total = self.scan_len().unwrap();
        let spec = *self;
        Ok((0..total).filter_map(move |idx| spec.unrank(idx)))
    }

    /// Total raw index space; [`GroupSpec::unrank`] yields `None` for
    /// indices whose color sum is not divisible by `q`.
    pub fn scan_space(&self) -> u64 {
        self.scan_len().expect("call check_budget first")
    }

    /// Decodes a raw index into an element, or `None` if the color vector
    /// fails the subgroup condition.
    pub fn unrank(&self, idx: u64) -> Option<ColoredPermutation> {
        let n = self.n as usize;
        let colors_space = (self.r as u64).pow(self.n);
        let (perm_idx, mut color_idx) = (idx / colors_space, idx % colors_space);
        let mut colors = vec![0u32; n];
        let mut sum = 0u64;
        for c in colors.iter_mut() {
            *c = (color_idx % self.r as u64) as u32;
            sum += *c as u64;
            color_idx /= self.r as u64;
        }
        if sum % self.q as u64 != 0 {
            return None;
        }
        Some(ColoredPermutation::new(
            self.r,
            colors,
            permutation_from_index(n, perm_idx),
        ))
    }

    /// Conjugation generators: adjacent transpositions, the color-`q`
    /// generator, and a balanced two-point color twist.
    pub fn conjugation_generators(&self) -> Vec<ColoredPermutation> {
        let n = self.n as usize;
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut perm: Vec<u32> = (0..n as u32).collect();
            perm.swap(i, i + 1);
            gens.push(ColoredPermutation::new(self.r, vec![0; n], perm));
        }
        if self.q < self.r {
            let mut colors = vec![0; n];
            colors[0] = self.q;
            gens.push(ColoredPermutation::new(
                self.r,
                colors,
                (0..n as u32).collect(),
            ));
        }
        if n >= 2 && self.r > 1 {
            let mut colors = vec![0; n];
            colors[0] = 1;
            colors[1] = self.r - 1;
            gens.push(ColoredPermutation::new(
                self.r,
                colors,
                (0..n as u32).collect(),
            ));
        }
        gens
    }
}

/// Canonical class representative: cycles laid out on consecutive points in
/// the component/part order of the type, with the cycle color on its first
/// point.
pub fn class_representative(t: &RPartiteType) -> ColoredPermutation {
    let n = t.size() as usize;
    let mut perm = vec![0u32; n];
    let mut colors = vec![0u32; n];
    let mut pos = 0usize;
    for (color, comp) in t.components().iter().enumerate() {
        for &len in comp.parts() {
            let len = len as usize;
            for i in 0..len {
                perm[pos + i] = (pos + (i + 1) % len) as u32;
            }
            colors[pos] = color as u32;
            pos += len;
        }
    }
    ColoredPermutation::new(t.r(), colors, perm)
}

/// The permutation of `{0..n-1}` with the given index in the factorial
/// number system (index 0 is the identity).
fn permutation_from_index(n: usize, mut idx: u64) -> Vec<u32> {
    let mut digits = vec![0u64; n];
    for i in 1..=n {
        digits[n - i] = idx % i as u64;
        idx /= i as u64;
    }
    let mut pool: Vec<u32> = (0..n as u32).collect();
    digits.iter().map(|&d| pool.remove(d as usize)).collect()
}

/// Whether all generators commute pairwise; for a generating set this
/// decides commutativity of the whole group.
pub fn generators_commute(spec: &GroupSpec) -> bool {
    let mut gens = spec.conjugation_generators();
    if gens.is_empty() {
        gens.push(ColoredPermutation::identity(spec.r, spec.n));
    }
    gens.iter()
        .all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
}

/// `r^n n!/q` as a sanity value for tests.
pub fn expected_order(r: u32, q: u32, n: u32) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= k;
    }
    acc * Int::from(r).pow(n) / q
}
