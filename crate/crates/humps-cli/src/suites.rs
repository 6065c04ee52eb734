//! Verification suites behind the `verify` subcommand. Each suite sweeps a
//! bounded scope, tallies individual checks, and reports one summary record.

use std::collections::{HashMap, HashSet};

use humps::bijection::{phi, psi};
use humps::colored::verify_coloring_identity;
use humps::enumeration::{count_by_enumeration, enumerate, enumerate_marked, EnumCaps, EnumError};
use humps::formulas::{
    binomial, catalan, humps_motzkin_total, humps_schroeder_total, motzkin, narayana,
    narayana_from_classes, peaks_dyck_total, schroeder_identity_sides, super_dyck_class_count,
    super_dyck_count, super_motzkin_count, super_schroeder_count, BigCount, SideClass,
};
use humps::stats::{classify, ClassKind};
use humps::{Family, FamilyKind, Step, StepSeq};

use crate::records::SuiteRecord;

/// Sweep bounds; anything unset falls back to the suite's own default.
#[derive(Debug, Clone, Copy, Default)]
pub struct Scope {
    pub motzkin_max: Option<usize>,
    pub dyck_max: Option<usize>,
    pub schroeder_max: Option<usize>,
    pub n_max: Option<u64>,
    pub m_max: Option<u64>,
}

struct Tally {
    suite: &'static str,
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(suite: &'static str) -> Tally {
        Tally {
            suite,
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn finish(self) -> SuiteRecord {
        SuiteRecord {
            suite: self.suite,
            cases: self.cases,
            failures: self.failures,
            pass: self.failures == 0,
            first_failure: self.first_failure,
        }
    }
}

fn big(n: u64) -> BigCount {
    BigCount::from(n)
}

/// Closed form for the plain Schröder family, summed over the up-step
/// stratum sizes.
pub fn schroeder_count(n: u64) -> BigCount {
    (0..=n).map(|k| binomial(n + k, 2 * k) * catalan(k)).sum()
}

fn total_humps(family: Family, caps: &EnumCaps) -> Result<u64, EnumError> {
    let mut total = 0u64;
    for p in enumerate(family, caps)? {
        total += classify(&p).humps as u64;
    }
    Ok(total)
}

fn is_up_star(p: &StepSeq) -> bool {
    p.iter().find(|&s| s != Step::Flat) == Some(Step::Up)
}

type CountLeg = (FamilyKind, usize, fn(u64) -> BigCount);

pub fn counts(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("counts");
    let legs: [CountLeg; 6] = [
        (
            FamilyKind::Motzkin,
            scope.motzkin_max.unwrap_or(12),
            motzkin,
        ),
        (FamilyKind::Dyck, scope.dyck_max.unwrap_or(10), catalan),
        (
            FamilyKind::Schroeder,
            scope.schroeder_max.unwrap_or(8),
            schroeder_count,
        ),
        (
            FamilyKind::SuperDyck,
            scope.dyck_max.unwrap_or(10),
            super_dyck_count,
        ),
        (
            FamilyKind::SuperMotzkin,
            scope.motzkin_max.unwrap_or(12),
            super_motzkin_count,
        ),
        (
            FamilyKind::SuperSchroeder,
            scope.schroeder_max.unwrap_or(8),
            super_schroeder_count,
        ),
    ];
    for (kind, max, formula) in legs {
        for n in 0..=max {
            let counted = count_by_enumeration(Family::new(kind, n), caps)?;
            let expected = formula(n as u64);
            tally.check(counted == expected, || {
                format!(
                    "{} order {n}: enumerated {counted}, formula {expected}",
                    kind.name()
                )
            });
        }
    }
    Ok(tally.finish())
}

pub fn peak_totals(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("peak-totals");
    for n in 1..=scope.dyck_max.unwrap_or(10) as u64 {
        let total = big(total_humps(Family::dyck(n as usize), caps)?);
        let formula = peaks_dyck_total(n);
        tally.check(total == formula, || {
            format!("order {n}: enumerated peak total {total}, formula {formula}")
        });
        let doubled = big(2) * &formula;
        let super_size = super_dyck_count(n);
        tally.check(super_size == doubled, || {
            format!("order {n}: super family size {super_size}, doubled total {doubled}")
        });
    }
    Ok(tally.finish())
}

pub fn motzkin_humps(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("motzkin-humps");
    for n in 0..=scope.motzkin_max.unwrap_or(12) as u64 {
        let total = big(total_humps(Family::motzkin(n as usize), caps)?);
        let formula = humps_motzkin_total(n);
        tally.check(total == formula, || {
            format!("order {n}: enumerated hump total {total}, formula {formula}")
        });
        let reconstructed = big(2) * &formula + big(1);
        let super_size = super_motzkin_count(n);
        tally.check(super_size == reconstructed, || {
            format!("order {n}: super family size {super_size} is not 2*{formula}+1")
        });
    }
    Ok(tally.finish())
}

fn round_trip_family(
    tally: &mut Tally,
    base: FamilyKind,
    max_order: usize,
    caps: &EnumCaps,
) -> Result<(), EnumError> {
    let sup = base.super_variant();
    for n in 0..=max_order {
        let mut images = HashSet::new();
        for m in enumerate_marked(Family::new(base, n), caps)? {
            let forward = phi(&m).expect("marked family paths satisfy the forward map");
            let back = psi(&forward.image);
            tally.check(back.as_ref() == Ok(&m), || {
                format!(
                    "round trip {} mark {} via {}",
                    m.path(),
                    m.hump_index(),
                    forward.image
                )
            });
            let k = classify(m.path()).humps;
            let image_class = classify(&forward.image);
            let class_ok = match image_class.kind {
                ClassKind::UpDown => image_class.humps == k,
                ClassKind::UpUp => image_class.humps + 1 == k,
                _ => false,
            };
            tally.check(class_ok, || {
                format!("image {} class drifted from {} humps", forward.image, k)
            });
            images.insert(forward.image);
        }
        let mut up_star_total = 0usize;
        for l in enumerate(Family::new(sup, n), caps)? {
            if !is_up_star(&l) {
                continue;
            }
            up_star_total += 1;
            let trip = psi(&l).and_then(|m| phi(&m)).map(|r| r.image);
            tally.check(trip.as_ref() == Ok(&l), || {
                format!("backward trip through {l}")
            });
            tally.check(images.contains(&l), || format!("{l} not reached forward"));
        }
        tally.check(images.len() == up_star_total, || {
            format!(
                "order {n}: {} images vs {} up-first paths",
                images.len(),
                up_star_total
            )
        });
    }
    Ok(())
}

pub fn round_trips(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("round-trips");
    round_trip_family(
        &mut tally,
        FamilyKind::Motzkin,
        scope.motzkin_max.unwrap_or(10),
        caps,
    )?;
    round_trip_family(
        &mut tally,
        FamilyKind::Dyck,
        scope.dyck_max.unwrap_or(8),
        caps,
    )?;
    round_trip_family(
        &mut tally,
        FamilyKind::Schroeder,
        scope.schroeder_max.unwrap_or(7),
        caps,
    )?;
    Ok(tally.finish())
}

pub fn class_counts(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("class-counts");
    for n in 1..=scope.dyck_max.unwrap_or(8) as u64 {
        let mut up_down: HashMap<usize, u64> = HashMap::new();
        let mut up_up: HashMap<usize, u64> = HashMap::new();
        let mut any: HashMap<usize, u64> = HashMap::new();
        for p in enumerate(Family::super_dyck(n as usize), caps)? {
            let class = classify(&p);
            *any.entry(class.humps).or_default() += 1;
            match class.kind {
                ClassKind::UpDown => *up_down.entry(class.humps).or_default() += 1,
                ClassKind::UpUp => *up_up.entry(class.humps).or_default() += 1,
                _ => {}
            }
        }
        for k in 0..=n {
            let triples = [
                ("up-down", &up_down, SideClass::UpDown),
                ("up-up", &up_up, SideClass::UpUp),
                ("any", &any, SideClass::Any),
            ];
            for (name, seen, side) in triples {
                let got = big(seen.get(&(k as usize)).copied().unwrap_or(0));
                let expected =
                    super_dyck_class_count(n, k, side).expect("orders in this sweep start at 1");
                tally.check(got == expected, || {
                    format!("{name}({n},{k}): enumerated {got}, formula {expected}")
                });
            }
        }
    }
    Ok(tally.finish())
}

pub fn narayana_agreement(scope: Scope) -> SuiteRecord {
    let mut tally = Tally::new("narayana");
    for n in 1..=scope.n_max.unwrap_or(30) {
        for k in 1..=n {
            let direct = narayana(n, k).expect("k stays within 1..=n");
            let via = narayana_from_classes(n, k).expect("k stays within 1..=n");
            tally.check(direct == via, || {
                format!("({n},{k}): direct {direct}, via class counts {via}")
            });
        }
    }
    tally.finish()
}

pub fn schroeder_humps(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("schroeder-humps");
    for n in 0..=scope.schroeder_max.unwrap_or(8) as u64 {
        let total = big(total_humps(Family::schroeder(n as usize), caps)?);
        let formula = humps_schroeder_total(n);
        tally.check(total == formula, || {
            format!("order {n}: enumerated hump total {total}, formula {formula}")
        });
        let reconstructed = big(2) * &formula + big(1);
        let super_size = super_schroeder_count(n);
        tally.check(super_size == reconstructed, || {
            format!("order {n}: super family size {super_size} is not 2*{formula}+1")
        });
    }
    Ok(tally.finish())
}

pub fn colored_identity(scope: Scope, caps: &EnumCaps) -> Result<SuiteRecord, EnumError> {
    let mut tally = Tally::new("colored-identity");
    let n_max = scope.n_max.unwrap_or(20);
    let m_max = scope.m_max.unwrap_or(5);
    for n in 0..=n_max {
        for m in 0..=m_max {
            let (lhs, rhs) = schroeder_identity_sides(n, m);
            tally.check(lhs == rhs, || {
                format!("sides differ at ({n},{m}): {lhs} vs {rhs}")
            });
        }
    }
    // The enumeration-backed reconciliation only fits small orders.
    for n in 0..=n_max.min(6) as usize {
        for m in 0..=m_max.min(3) {
            let report = verify_coloring_identity(n, m, caps)?;
            tally.check(report.pass, || {
                format!(
                    "four-way split at ({n},{m}): expansion {}, colored {}, sides {} / {}",
                    report.peak_expansion_total, report.colored_enumeration, report.lhs, report.rhs
                )
            });
        }
    }
    Ok(tally.finish())
}
