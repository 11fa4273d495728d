//! Closed-form square-root and absolute-square-root counts per conjugacy
//! class — the character-table column sums — for `S_n`, `B_n`, `D_n` and
//! `G(r,1,n)`.
//!
//! Cycles of distinct (color, length) contribute independent factors, so
//! every count is a product over blocks.  The `D_n` count additionally
//! tracks the parity of the number of negative cycles in the root via
//! [`ZPair`] and keeps only the even-parity mass at the end.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::partition::{has_sqrt_a, DnClass, Partition, RPartiteType};
use crate::{Int, Rational};

/// Double factorial with the convention `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Int {
    let mut acc = Int::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of ways to pick and pair up some of `m` cycles, each pair weighted
/// by `pair_weight`: `Σ_k C(m,2k) (2k-1)!! w^k`.
///
/// The weight may be a non-integer rational (as arises after rescaling the
/// series argument); the total must be an integer, which is asserted.
pub fn root_pairings(m: u64, pair_weight: &Rational) -> Int {
    let total = (0..=m / 2)
        .map(|k| {
            Rational::from(binomial(m, 2 * k) * double_factorial(2 * k as i64 - 1))
                * pair_weight.pow(k as i32)
        })
        .sum::<Rational>();
    assert!(
        total.is_integer(),
        "o_{pair_weight}({m}) = {total} is not an integer"
    );
    total.to_integer()
}

/// Two-variable refinement: unpaired cycles each carry `(1 + mark)`:
/// `Σ_j C(m,2j) (2j-1)!! w^j (1+mark)^{m-2j}`.
pub fn root_pairings_marked(m: u64, pair_weight: &Rational, mark: &Int) -> Int {
    let base = Rational::from(mark + 1);
    let total = (0..=m / 2)
        .map(|j| {
            Rational::from(binomial(m, 2 * j) * double_factorial(2 * j as i64 - 1))
                * pair_weight.pow(j as i32)
                * base.pow((m - 2 * j) as i32)
        })
        .sum::<Rational>();
    assert!(total.is_integer());
    total.to_integer()
}

fn int_weight(w: u64) -> Rational {
    Rational::from(Int::from(w))
}

/// Number of square roots in `S_n` of a permutation with the given cycle
/// type: 0 unless every even part has even multiplicity, else the product of
/// `(m_{2i}-1)!! (2i)^{m_{2i}/2}` over even parts and pairing counts with
/// pair weight `2j+1` over odd parts.
pub fn gamma_a(p: &Partition) -> Int {
    if !has_sqrt_a(p) {
        return Int::zero();
    }
    let mut acc = Int::one();
    for (&part, &mult) in p.freq() {
        if part % 2 == 0 {
            acc *= double_factorial(mult as i64 - 1) * Int::from(part).pow(mult / 2);
        } else {
            acc *= root_pairings(mult as u64, &int_weight(part as u64));
        }
    }
    acc
}

/// Number of square roots in `G(r,1,n)` of an element with the given cycle
/// type.  Reduces to [`gamma_a`] at `r = 1`; at `r = 2` it counts square
/// roots in `B_n`.
pub fn gamma_sqrt_grn(t: &RPartiteType) -> Int {
    let comps: Vec<&Partition> = t.components().iter().collect();
    gamma_sqrt_grn_comps(t.r(), &comps)
}

/// Slice-based form of [`gamma_sqrt_grn`] for scans via
/// [`crate::partition::for_each_r_partite`].
pub fn gamma_sqrt_grn_comps(r: u32, comps: &[&Partition]) -> Int {
    if !crate::partition::has_sqrt_grn_comps(r, comps) {
        return Int::zero();
    }
    let r = r as u64;
    let mut acc = Int::one();
    for (color, comp) in comps.iter().enumerate() {
        for (&part, &mult) in comp.freq() {
            let (l, m) = (part as u64, mult as u64);
            if part % 2 == 0 || (r % 2 == 0 && color % 2 == 1) {
                // cycles must pair up; each merged pair has l positions and
                // r color choices for the root cycle
                debug_assert!(m % 2 == 0);
                acc *= double_factorial(m as i64 - 1) * Int::from(l * r).pow(mult / 2);
            } else if r % 2 == 1 {
                acc *= root_pairings(m, &int_weight(l * r));
            } else {
                // r even, even color: singles keep 2 color choices
                acc *= root_pairings_marked(m, &int_weight(l * r), &Int::one());
            }
        }
    }
    acc
}

/// Number of absolute square roots in `G(r,1,n)` — the column sum of the
/// character table at this class.  At the identity type it yields the
/// character degree sum `Σ_j C(n,2j) (2j-1)!! r^{n-j}`.
pub fn gamma_abs_grn(t: &RPartiteType) -> Int {
    let comps: Vec<&Partition> = t.components().iter().collect();
    gamma_abs_grn_comps(t.r(), &comps)
}

/// Slice-based form of [`gamma_abs_grn`].
pub fn gamma_abs_grn_comps(r: u32, comps: &[&Partition]) -> Int {
    if !crate::partition::has_abs_sqrt_grn_comps(r, comps) {
        return Int::zero();
    }
    let r = r as u64;
    let mut acc = Int::one();
    // color 0: even parts pair with weight l*r, odd parts pair with weight l
    // and every unpaired cycle picks one of r root colors
    for (&part, &mult) in comps[0].freq() {
        let (l, m) = (part as u64, mult as u64);
        if part % 2 == 0 {
            acc *= double_factorial(m as i64 - 1) * Int::from(l * r).pow(mult / 2);
        } else {
            let total: Int = (0..=m / 2)
                .map(|j| {
                    binomial(m, 2 * j)
                        * double_factorial(2 * j as i64 - 1)
                        * Int::from(l).pow(j as u32)
                        * Int::from(r).pow((m - j) as u32)
                })
                .sum();
            acc *= total;
        }
    }
    // mirror pair colors (t, r-t): cycles match across the pair
    for comp in comps.iter().take((comps.len() + 1) / 2).skip(1) {
        for (&part, &mult) in comp.freq() {
            acc *= factorial(mult as u64) * Int::from(part as u64 * r).pow(mult);
        }
    }
    // self-paired color r/2 for even r
    if r % 2 == 0 {
        for (&part, &mult) in comps[r as usize / 2].freq() {
            debug_assert!(mult % 2 == 0);
            acc *= double_factorial(mult as i64 - 1) * Int::from(part as u64 * r).pow(mult / 2);
        }
    }
    acc
}

/// Parity-reduced polynomial in a marker `z`: `even` collects the mass of
/// even powers of `z`, `odd` the rest.  Multiplication is the group-ring
/// product `(a,b)(c,d) = (ac+bd, ad+bc)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPair {
    pub even: Int,
    pub odd: Int,
}

impl ZPair {
    pub fn new(even: Int, odd: Int) -> Self {
        ZPair { even, odd }
    }

    pub fn zero() -> Self {
        ZPair {
            even: Int::zero(),
            odd: Int::zero(),
        }
    }

    pub fn one() -> Self {
        ZPair {
            even: Int::one(),
            odd: Int::zero(),
        }
    }

    /// `(1 + z)^e` reduced by parity: `(2^{e-1}, 2^{e-1})` for `e >= 1`.
    pub fn one_plus_z_pow(e: u32) -> Self {
        if e == 0 {
            return ZPair::one();
        }
        let half = Int::from(2).pow(e - 1);
        ZPair {
            even: half.clone(),
            odd: half,
        }
    }

    /// Sets even powers of `z` to 1 and odd powers to 0, i.e. evaluates
    /// `(P(1) + P(-1)) / 2`.
    pub fn filter(&self) -> Int {
        self.even.clone()
    }
}

impl Mul<&ZPair> for &ZPair {
    type Output = ZPair;
    fn mul(self, rhs: &ZPair) -> ZPair {
        ZPair {
            even: &self.even * &rhs.even + &self.odd * &rhs.odd,
            odd: &self.even * &rhs.odd + &self.odd * &rhs.even,
        }
    }
}

impl Add<&ZPair> for &ZPair {
    type Output = ZPair;
    fn add(self, rhs: &ZPair) -> ZPair {
        ZPair {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

/// Whether a `D_n` block collects positive or negative cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleSign {
    Positive,
    Negative,
}

/// Root-count polynomial of a single `D_n` block (all cycles of one sign and
/// length), with `z` marking each negative cycle of the root:
///
/// * positive even length `2k`, multiplicity `2m`: all roots are positive
///   merged cycles, `((2m-1)!! (4k)^m, 0)`;
/// * negative length `k`, multiplicity `2m`: roots are `m` negative merged
///   cycles, mass `(2m-1)!! (2k)^m` on the parity of `m`;
/// * positive odd length `l`, multiplicity `m`: merged pairs weigh `2l` and
///   are positive, each unpaired cycle is positive or negative, giving
///   `Σ_j C(m,2j) (2j-1)!! (2l)^j (1+z)^{m-2j}`.
///
/// Odd multiplicities in the first two cases yield the zero pair.
pub fn dn_block(sign: CycleSign, length: u32, multiplicity: u32) -> ZPair {
    let (l, m) = (length as u64, multiplicity as u64);
    match sign {
        CycleSign::Positive if length % 2 == 1 => {
            let mut acc = ZPair::zero();
            for j in 0..=m / 2 {
                let c = binomial(m, 2 * j)
                    * double_factorial(2 * j as i64 - 1)
                    * Int::from(2 * l).pow(j as u32);
                let pw = ZPair::one_plus_z_pow((m - 2 * j) as u32);
                acc = &acc + &ZPair::new(&c * pw.even, c * pw.odd);
            }
            acc
        }
        CycleSign::Positive => {
            if multiplicity % 2 != 0 {
                return ZPair::zero();
            }
            ZPair::new(
                double_factorial(m as i64 - 1) * Int::from(2 * l).pow(multiplicity / 2),
                Int::zero(),
            )
        }
        CycleSign::Negative => {
            if multiplicity % 2 != 0 {
                return ZPair::zero();
            }
            let mass = double_factorial(m as i64 - 1) * Int::from(2 * l).pow(multiplicity / 2);
            if (multiplicity / 2) % 2 == 0 {
                ZPair::new(mass, Int::zero())
            } else {
                ZPair::new(Int::zero(), mass)
            }
        }
    }
}

/// Number of square roots in `D_n` of a representative of the class: the
/// parity filter of the product of [`dn_block`] over all blocks.  The two
/// split classes of a type carry the same value.
pub fn gamma_d(c: &DnClass) -> Int {
    let b = c.bipartition();
    let mut acc = ZPair::one();
    for (&part, &mult) in b.lambda.freq() {
        acc = &acc * &dn_block(CycleSign::Positive, part, mult);
    }
    for (&part, &mult) in b.mu.freq() {
        acc = &acc * &dn_block(CycleSign::Negative, part, mult);
    }
    acc.filter()
}

/// `Σ_j C(n,2j) (2j-1)!! r^{n-j}`: the number of absolute square roots of
/// the identity of `G(r,1,n)`, i.e. its character degree sum.
pub fn degree_sum_grn(r: u32, n: u32) -> Int {
    gamma_abs_grn(&RPartiteType::identity(r, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{
        bipartitions, dn_classes, has_sqrt_d, partitions, r_partite_types, Bipartition, SplitSign,
    };

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rp(comps: &[&[u32]]) -> RPartiteType {
        RPartiteType::new(comps.iter().map(|c| part(c)).collect()).unwrap()
    }

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(5), int(15));
        assert_eq!(double_factorial(-1), int(1));
        assert_eq!(double_factorial(0), int(1));
        assert_eq!(double_factorial(6), int(48));
    }

    #[test]
    fn pairing_counts() {
        let three = Rational::from(int(3));
        assert_eq!(root_pairings(2, &three), int(4)); // o_3(2) = 1 + 3
        let one = Rational::from(int(1));
        assert_eq!(root_pairings_marked(2, &one, &int(1)), int(5)); // o_1(2,1)
        assert_eq!(
            root_pairings_marked(3, &one, &int(0)),
            root_pairings(3, &one)
        );
    }

    #[test]
    #[should_panic(expected = "not an integer")]
    fn non_integral_pairing_weight_is_fatal() {
        // o_{1/2}(2) = 3/2 has no compensating scale here
        root_pairings(2, &Rational::new(int(1), int(2)));
    }

    #[test]
    fn symmetric_group_column_sums() {
        assert_eq!(gamma_a(&part(&[2])), int(0));
        assert_eq!(gamma_a(&part(&[2, 2])), int(2));
        assert_eq!(gamma_a(&part(&[1, 1, 1, 1])), int(10)); // i_4
                                                            // vanishing characterization, exhaustively
        for n in 0..=10 {
            for p in partitions(n) {
                assert_eq!(gamma_a(&p) == int(0), !has_sqrt_a(&p), "at {p}");
            }
        }
    }

    #[test]
    fn grn_square_root_counts() {
        assert_eq!(gamma_sqrt_grn(&rp(&[&[1, 1], &[]])), int(6)); // i_2^B
        assert_eq!(gamma_sqrt_grn(&rp(&[&[], &[1, 1]])), int(2));
        assert_eq!(gamma_sqrt_grn(&rp(&[&[1], &[], &[]])), int(1));
        // r = 1 reduction
        for n in 0..=10 {
            for p in partitions(n) {
                let t = RPartiteType::new(vec![p.clone()]).unwrap();
                assert_eq!(gamma_sqrt_grn(&t), gamma_a(&p));
            }
        }
    }

    #[test]
    fn grn_absolute_root_counts() {
        assert_eq!(gamma_abs_grn(&rp(&[&[1], &[], &[]])), int(3));
        assert_eq!(gamma_abs_grn(&rp(&[&[], &[1], &[1]])), int(3));
        assert_eq!(degree_sum_grn(2, 2), int(6));
        // at r = 2 absolute and ordinary square roots coincide
        for n in 0..=10 {
            for t in r_partite_types(2, n) {
                assert_eq!(gamma_abs_grn(&t), gamma_sqrt_grn(&t), "at {t}");
            }
        }
    }

    #[test]
    fn vanishing_matches_predicates_grn() {
        use crate::partition::{has_abs_sqrt_grn, has_sqrt_grn};
        for r in 2..=4u32 {
            for n in 0..=8u32 {
                for t in r_partite_types(r, n) {
                    assert_eq!(
                        gamma_sqrt_grn(&t) == Int::from(0),
                        !has_sqrt_grn(&t),
                        "sqrt at {t}"
                    );
                    assert_eq!(
                        gamma_abs_grn(&t) == Int::from(0),
                        !has_abs_sqrt_grn(&t),
                        "abs at {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn zpair_group_ring() {
        let a = ZPair::new(int(1), int(1)); // 1 + z
        let sq = &a * &a;
        assert_eq!(sq, ZPair::new(int(2), int(2)));
        // parity filter is (P(1) + P(-1))/2
        let p = ZPair::new(int(4), int(2));
        assert_eq!(p.filter(), (int(4 + 2) + int(4 - 2)) / 2);
        assert_eq!(&p * &ZPair::one(), p);
        assert_eq!(ZPair::one_plus_z_pow(3), ZPair::new(int(4), int(4)));
        assert_eq!(ZPair::one_plus_z_pow(0), ZPair::one());
    }

    #[test]
    fn dn_blocks() {
        assert_eq!(
            dn_block(CycleSign::Positive, 1, 2),
            ZPair::new(int(4), int(2)) // (1+z)^2 + 2 = z^2 + 2z + 3
        );
        assert_eq!(
            dn_block(CycleSign::Negative, 1, 2),
            ZPair::new(int(0), int(2))
        );
        assert_eq!(dn_block(CycleSign::Positive, 2, 1), ZPair::zero());
    }

    #[test]
    fn dn_square_root_counts() {
        let cls = |l: &[u32], m: &[u32], s: SplitSign| {
            DnClass::new(Bipartition::new(part(l), part(m)), s).unwrap()
        };
        assert_eq!(gamma_d(&cls(&[1, 1], &[], SplitSign::None)), int(4)); // i_2^D
        assert_eq!(gamma_d(&cls(&[], &[1, 1], SplitSign::None)), int(0));
        assert_eq!(gamma_d(&cls(&[2, 2], &[], SplitSign::Plus)), int(4));
        assert_eq!(gamma_d(&cls(&[2, 2], &[], SplitSign::Minus)), int(4));
        assert_eq!(gamma_d(&cls(&[1], &[1, 1], SplitSign::None)), int(2));
        assert_eq!(gamma_d(&cls(&[], &[1, 1, 1, 1], SplitSign::None)), int(12));
        // vanishing characterization
        for n in 1..=10 {
            for c in dn_classes(n) {
                assert_eq!(gamma_d(&c) == int(0), !has_sqrt_d(&c), "at {c}");
            }
        }
    }

    #[test]
    fn involution_count_relations() {
        // gamma at identity types: i_n, i_n^B, i_n^D with
        // 2 i_n^D - i_n^B = n!/(n/2)! for even n, 0 for odd n
        let mut i_a = vec![int(1), int(1)];
        for n in 2..=12usize {
            let v = &i_a[n - 1] + &i_a[n - 2] * int(n as i64 - 1);
            i_a.push(v);
        }
        let mut i_b = vec![int(1), int(2)];
        for n in 2..=12usize {
            let v = &i_b[n - 1] * 2 + &i_b[n - 2] * int(2 * (n as i64 - 1));
            i_b.push(v);
        }
        for n in 1..=12u32 {
            let ones = vec![1u32; n as usize];
            assert_eq!(gamma_a(&part(&ones)), i_a[n as usize]);
            assert_eq!(
                gamma_sqrt_grn(&RPartiteType::identity(2, n)),
                i_b[n as usize]
            );
            let id_cls =
                DnClass::from_bipartition(Bipartition::new(part(&ones), Partition::empty()))
                    .unwrap();
            let i_d = gamma_d(&id_cls);
            let diff = &i_d * 2 - &i_b[n as usize];
            if n % 2 == 0 {
                assert_eq!(diff, factorial(n as u64) / factorial(n as u64 / 2));
            } else {
                assert_eq!(diff, int(0));
            }
        }
    }

    #[test]
    fn gamma_sqrt_r2_equals_gamma_b_formula() {
        // classwise sums over B_n against the listed values
        let s_b: Vec<Int> = (1..=9u32)
            .map(|n| {
                bipartitions(n)
                    .map(|b| gamma_sqrt_grn(&RPartiteType::from_bipartition(&b)))
                    .sum()
            })
            .collect();
        let expect = [2, 8, 26, 112, 410, 1860, 8074, 40376, 199050];
        assert_eq!(s_b, expect.map(Int::from).to_vec());
    }
}
