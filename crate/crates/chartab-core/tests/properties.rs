//! Property tests for the structural invariants: text round trips, series
//! ring laws and enumeration well-formedness.

use proptest::prelude::*;

use chartab_core::partition::{
    bipartitions, dn_classes, partitions, Bipartition, Partition, RPartiteType,
};
use chartab_core::series::Series;
use chartab_core::text;
use chartab_core::Int;

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(|parts| Partition::new(parts).unwrap())
}

fn arb_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..=50, order + 1..=order + 1)
        .prop_map(|cs| Series::from_coeffs(cs.into_iter().map(Int::from).collect()))
}

proptest! {
    #[test]
    fn partition_text_round_trip(p in arb_partition(12, 8)) {
        prop_assert_eq!(text::parse_partition(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(
            text::parse_partition(&text::format_partition_freq(&p)).unwrap(),
            p
        );
    }

    #[test]
    fn bipartition_text_round_trip(
        lam in arb_partition(9, 6),
        mu in arb_partition(9, 6),
    ) {
        let b = Bipartition::new(lam, mu);
        prop_assert_eq!(text::parse_bipartition(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn r_partite_text_round_trip(
        comps in prop::collection::vec(arb_partition(7, 4), 1..=4),
    ) {
        let t = RPartiteType::new(comps).unwrap();
        prop_assert_eq!(text::parse_r_partite(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn series_ring_laws(
        a in arb_series(10),
        b in arb_series(10),
        c in arb_series(10),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }

    #[test]
    fn series_inverse_is_two_sided(mut coeffs in prop::collection::vec(-9i64..=9, 11)) {
        coeffs[0] = if coeffs[0] % 2 == 0 { 1 } else { -1 };
        let s = Series::from_coeffs(coeffs.into_iter().map(Int::from).collect());
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv), Series::one(10));
        prop_assert_eq!(inv.mul(&s), Series::one(10));
    }

    #[test]
    fn substitution_is_multiplicative(
        a in arb_series(12),
        b in arb_series(12),
        c in -4i64..=4,
        k in 1usize..=3,
    ) {
        // (a·b)(c x^k) = a(c x^k) · b(c x^k)
        let c = Int::from(c);
        let lhs = a.mul(&b).substitute(&c, k).unwrap();
        let rhs = a.substitute(&c, k).unwrap().mul(&b.substitute(&c, k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn enumeration_streams_are_well_formed() {
    for n in 0..=12u32 {
        for b in bipartitions(n) {
            assert_eq!(b.size(), n);
        }
        if n >= 1 {
            for c in dn_classes(n) {
                assert_eq!(c.size(), n);
                assert!(c.bipartition().mu_length() % 2 == 0);
            }
        }
        let count = partitions(n).count();
        assert!(count >= 1);
    }
}
