//! Closed-form counts checked against brute-force enumeration, plus the
//! identities tying hump totals to the super-family sizes.

use std::collections::HashMap;

use num_bigint::BigUint;

use humps::colored::{count_colored, verify_coloring_identity};
use humps::enumeration::{count_by_enumeration, enumerate, EnumCaps};
use humps::formulas::{
    catalan, humps_motzkin_total, humps_schroeder_total, motzkin, narayana, narayana_from_classes,
    peaks_dyck_total, schroeder_identity_sides, super_dyck_class_count, super_dyck_count,
    super_motzkin_count, super_schroeder_count, SideClass,
};
use humps::stats::{classify, ClassKind};
use humps::{Family, FamilyKind, Step, StepSeq};

fn caps() -> EnumCaps {
    EnumCaps::default()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn total_humps(family: Family) -> BigUint {
    let mut total = 0u64;
    for p in enumerate(family, &caps()).unwrap() {
        total += classify(&p).humps as u64;
    }
    big(total)
}

type CountCase = (FamilyKind, usize, fn(u64) -> BigUint);

#[test]
fn formula_counts_match_enumeration() {
    let cases: [CountCase; 5] = [
        (FamilyKind::Motzkin, 9, motzkin),
        (FamilyKind::Dyck, 7, |n| catalan(n)),
        (FamilyKind::SuperDyck, 7, super_dyck_count),
        (FamilyKind::SuperMotzkin, 9, super_motzkin_count),
        (FamilyKind::SuperSchroeder, 6, super_schroeder_count),
    ];
    for (kind, max, formula) in cases {
        for n in 0..=max {
            let counted = count_by_enumeration(Family::new(kind, n), &caps()).unwrap();
            assert_eq!(counted, formula(n as u64), "{kind:?} at order {n}");
        }
    }
}

#[test]
fn dyck_peak_total_and_doubling() {
    for n in 1..=7u64 {
        let enumerated = total_humps(Family::dyck(n as usize));
        assert_eq!(enumerated, peaks_dyck_total(n), "peak total at order {n}");
        // The super family is exactly twice as large as the peak total.
        assert_eq!(
            super_dyck_count(n),
            big(2u64) * peaks_dyck_total(n),
            "doubling at order {n}"
        );
    }
    assert_eq!(peaks_dyck_total(0), big(0));
}

#[test]
fn peak_distribution_is_narayana() {
    for n in 1..=7u64 {
        let mut by_peaks: HashMap<usize, u64> = HashMap::new();
        for p in enumerate(Family::dyck(n as usize), &caps()).unwrap() {
            *by_peaks.entry(classify(&p).humps).or_default() += 1;
        }
        for (k, count) in by_peaks {
            assert_eq!(big(count), narayana(n, k as u64).unwrap(), "N({n},{k})");
        }
    }
}

#[test]
fn motzkin_hump_total_matches_formula() {
    for n in 0..=9u64 {
        assert_eq!(
            total_humps(Family::motzkin(n as usize)),
            humps_motzkin_total(n)
        );
        // The same fact the other way round: the super count is odd and one
        // more than twice the hump total.
        assert_eq!(
            super_motzkin_count(n),
            big(2u64) * humps_motzkin_total(n) + big(1u64)
        );
    }
}

#[test]
fn schroeder_hump_total_matches_formula() {
    for n in 0..=6u64 {
        assert_eq!(
            total_humps(Family::schroeder(n as usize)),
            humps_schroeder_total(n)
        );
        assert_eq!(
            super_schroeder_count(n),
            big(2u64) * humps_schroeder_total(n) + big(1u64)
        );
    }
}

#[test]
fn super_dyck_class_counts_match_enumeration() {
    for n in 1..=6u64 {
        let mut up_down: HashMap<usize, u64> = HashMap::new();
        let mut up_up: HashMap<usize, u64> = HashMap::new();
        let mut any: HashMap<usize, u64> = HashMap::new();
        for p in enumerate(Family::super_dyck(n as usize), &caps()).unwrap() {
            let class = classify(&p);
            *any.entry(class.humps).or_default() += 1;
            match class.kind {
                ClassKind::UpDown => *up_down.entry(class.humps).or_default() += 1,
                ClassKind::UpUp => *up_up.entry(class.humps).or_default() += 1,
                _ => {}
            }
        }
        for k in 0..=n {
            let expect = |class| super_dyck_class_count(n, k, class).unwrap();
            let got = |m: &HashMap<usize, u64>| big(m.get(&(k as usize)).copied().unwrap_or(0));
            assert_eq!(got(&up_down), expect(SideClass::UpDown), "UD({n},{k})");
            assert_eq!(got(&up_up), expect(SideClass::UpUp), "UU({n},{k})");
            assert_eq!(got(&any), expect(SideClass::Any), "any({n},{k})");
        }
    }
}

#[test]
fn class_count_route_to_narayana_agrees() {
    for n in 1..=30u64 {
        for k in 1..=n {
            assert_eq!(
                narayana_from_classes(n, k).unwrap(),
                narayana(n, k).unwrap(),
                "({n},{k})"
            );
        }
    }
}

#[test]
fn colored_count_identity() {
    for n in 0..=20u64 {
        for m in 0..=5u64 {
            let (lhs, rhs) = schroeder_identity_sides(n, m);
            assert_eq!(lhs, rhs, "sides at ({n},{m})");
        }
    }
    for n in 0..=4usize {
        for m in 0..=2u64 {
            let (lhs, _) = schroeder_identity_sides(n as u64, m);
            assert_eq!(count_colored(n, m, &caps()).unwrap(), lhs, "({n},{m})");
            let report = verify_coloring_identity(n, m, &caps()).unwrap();
            assert!(report.pass, "four-way report at ({n},{m})");
        }
    }
}

#[test]
fn flat_step_count_drives_coloring_weight() {
    // Weighting each path by palette^flats is what the colored count does;
    // recompute it directly from the plain enumeration.
    let palette = 3u64;
    for n in 0..=4usize {
        let mut weighted = big(0);
        for p in enumerate(Family::super_schroeder(n), &caps()).unwrap() {
            let flats = p.iter().filter(|&s| s == Step::Flat).count() as u32;
            weighted += big(palette).pow(flats);
        }
        assert_eq!(
            count_colored(n, palette, &caps()).unwrap(),
            weighted,
            "order {n}"
        );
    }
    // Zero colors leaves only the flat-free paths.
    for n in 0..=4usize {
        let flat_free = enumerate(Family::super_schroeder(n), &caps())
            .unwrap()
            .filter(|p: &StepSeq| p.counts().flat == 0)
            .count();
        assert_eq!(count_colored(n, 0, &caps()).unwrap(), big(flat_free as u64));
    }
}
