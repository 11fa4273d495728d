//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime.  Every comparison is exact; the stated runtime caps are
//! asserted.

use std::time::{Duration, Instant};

use chartab_core::counts::{gamma_abs_grn, gamma_d, gamma_sqrt_grn};
use chartab_core::oracle::{self, DEFAULT_BUDGET};
use chartab_core::partition::{
    dn_classes, r_partite_types, Bipartition, DnClass, Partition, SplitSign,
};
use chartab_core::sequences::{
    self, involutions_a, involutions_b, involutions_d, table_sum, ColumnFamily, Method, SumFamily,
};
use chartab_core::verify;
use chartab_core::Int;

fn run(criterion: &str, cap: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    eprintln!("criterion {criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < cap,
        "criterion {criterion} exceeded its runtime cap: {elapsed:.2?} >= {cap:.2?}"
    );
}

fn ints(vals: &[i64]) -> Vec<Int> {
    vals.iter().map(|&v| Int::from(v)).collect()
}

#[test]
fn criterion_01_symmetric_group_totals() {
    run("01 S_n totals n=1..12", Duration::from_secs(5), || {
        let s = table_sum(SumFamily::SymmetricA, Method::Direct, 12).unwrap();
        let expect = ints(&[1, 2, 5, 13, 31, 89, 259, 842, 2810, 10020, 37266, 145373]);
        assert_eq!(&s[1..], &expect[..]);
    });
}

#[test]
fn criterion_02_triple_agreement_symmetric() {
    run(
        "02 A: direct = gf = convolution, n <= 25",
        Duration::from_secs(30),
        || {
            let direct = table_sum(SumFamily::SymmetricA, Method::Direct, 25).unwrap();
            let gf = table_sum(SumFamily::SymmetricA, Method::GeneratingFunction, 25).unwrap();
            let conv = table_sum(SumFamily::SymmetricA, Method::Convolution, 25).unwrap();
            assert_eq!(direct, gf);
            assert_eq!(direct, conv);
        },
    );
}

#[test]
fn criterion_03_hyperoctahedral_totals_and_agreement() {
    run(
        "03 B_n totals and triple agreement",
        Duration::from_secs(60),
        || {
            let s = table_sum(SumFamily::HyperB, Method::Direct, 20).unwrap();
            let expect = ints(&[2, 8, 26, 112, 410, 1860, 8074, 40376, 199050]);
            assert_eq!(&s[1..=9], &expect[..]);
            let i_b = involutions_b(9);
            let expect_i = ints(&[2, 6, 20, 76, 312, 1384, 6512, 32400, 168992]);
            assert_eq!(&i_b[1..], &expect_i[..]);
            let gf = table_sum(SumFamily::HyperB, Method::GeneratingFunction, 20).unwrap();
            let conv = table_sum(SumFamily::HyperB, Method::Convolution, 20).unwrap();
            assert_eq!(s, gf);
            assert_eq!(s, conv);
        },
    );
}

#[test]
fn criterion_04_demihyperoctahedral_reference_table() {
    run(
        "04 D_n reference table n=6..15",
        Duration::from_secs(60),
        || {
            let i_d = involutions_d(15);
            let s_d = table_sum(SumFamily::DemiD, Method::Direct, 15).unwrap();
            for (n, gamma_e, s) in sequences::DEMI_REFERENCE {
                assert_eq!(i_d[n as usize], Int::from(gamma_e), "degree sum of D_{n}");
                assert_eq!(s_d[n as usize], Int::from(s), "table sum of D_{n}");
            }
        },
    );
}

#[test]
fn criterion_05_oracle_equivalence() {
    run(
        "05 oracle equivalence on all covered families",
        Duration::from_secs(300),
        || {
            let report = verify::oracle_suite(DEFAULT_BUDGET).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        },
    );
}

#[test]
fn criterion_06_absolute_square_coincidence_r2() {
    run(
        "06 abs = sqrt at r=2, sizes <= 10",
        Duration::from_secs(60),
        || {
            for n in 0..=10 {
                for t in r_partite_types(2, n) {
                    assert_eq!(gamma_abs_grn(&t), gamma_sqrt_grn(&t), "at {t}");
                }
            }
        },
    );
}

#[test]
fn criterion_07_identity_suite() {
    run(
        "07 identities: convolutions, halving, involution difference",
        Duration::from_secs(120),
        || {
            let report = verify::identity_suite(DEFAULT_BUDGET).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        },
    );
}

#[test]
fn criterion_08_inequality_suite() {
    run(
        "08 inequalities in exact arithmetic",
        Duration::from_secs(120),
        || {
            let report = verify::inequality_suite().unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        },
    );
}

#[test]
fn criterion_09_zero_column_counts() {
    run(
        "09 zero-column counts vs generating functions",
        Duration::from_secs(300),
        || {
            let report = verify::zero_column_suite().unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
            // spot values from direct scans
            assert_eq!(
                sequences::zero_column_count(ColumnFamily::A, 4),
                Int::from(2)
            );
            assert_eq!(
                sequences::zero_column_count(ColumnFamily::B, 2),
                Int::from(3)
            );
        },
    );
}

#[test]
fn criterion_10_continued_fractions() {
    run(
        "10 continued fractions vs closed forms and brute force",
        Duration::from_secs(120),
        || {
            let report = verify::cfrac_suite(30).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        },
    );
}

#[test]
fn criterion_11_conjecture_suite() {
    run(
        "11 lower-bound conjecture over G(r,q,n)",
        Duration::from_secs(300),
        || {
            let instances = verify::conjecture_instances();
            assert!(!instances.is_empty());
            let report = verify::conjecture_suite(DEFAULT_BUDGET).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
        },
    );
}

#[test]
fn criterion_12_dihedral_groups() {
    run(
        "12 dihedral formulas vs oracle, 3 <= n <= 30",
        Duration::from_secs(120),
        || {
            let report = verify::dihedral_suite(DEFAULT_BUDGET, 30).unwrap();
            assert!(report.passed(), "{:?}", report.first_failure());
            assert_eq!(sequences::dihedral_degree_sum(6), Int::from(8));
            assert_eq!(sequences::dihedral_table_sum(6), Int::from(10));
        },
    );
}

#[test]
fn criterion_13_asymptotic_sandwiches() {
    run(
        "13 exact sandwich inequalities for A and B ratios",
        Duration::from_secs(60),
        || {
            let a = verify::asymptotic_report_a(25).unwrap();
            assert!(a.passed(), "{:?}", a.checks);
            let b = verify::asymptotic_report_b(20).unwrap();
            assert!(b.passed(), "{:?}", b.checks);
        },
    );
}

#[test]
fn criterion_14_erratum_regression() {
    run(
        "14 corrected D_n block weights vs printed values",
        Duration::from_secs(60),
        || {
            let two_two = DnClass::new(
                Bipartition::new(Partition::new(vec![2, 2]).unwrap(), Partition::empty()),
                SplitSign::Plus,
            )
            .unwrap();
            // printed single-cycle formula gives (2m-1)!!(2k)^m = 2 here
            assert_eq!(gamma_d(&two_two), Int::from(4));

            let d2_identity = DnClass::from_bipartition(Bipartition::new(
                Partition::new(vec![1, 1]).unwrap(),
                Partition::empty(),
            ))
            .unwrap();
            // printed odd factor predicts o_1(2,1) = 3 here
            assert_eq!(gamma_d(&d2_identity), Int::from(4));

            // both fixtures agree with brute force
            let rows = oracle::dn_census(4, DEFAULT_BUDGET).unwrap();
            let row = rows.iter().find(|r| r.class == two_two).unwrap();
            assert_eq!(row.roots, Int::from(4));
            let rows = oracle::dn_census(2, DEFAULT_BUDGET).unwrap();
            let row = rows.iter().find(|r| r.class == d2_identity).unwrap();
            assert_eq!(row.roots, Int::from(4));

            // and the identity count matches the closed form for i_n^D
            assert_eq!(involutions_d(2)[2], Int::from(4));
            assert_eq!(involutions_a(4)[4], Int::from(10));
            // sanity: D_n classes enumerated for the censuses above
            assert_eq!(dn_classes(4).count(), 13);
        },
    );
}
