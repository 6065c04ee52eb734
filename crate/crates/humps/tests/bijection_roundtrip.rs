//! Exhaustive round-trip checks for the hump-marking bijection on small
//! orders of every family.

use std::collections::HashSet;

use humps::bijection::{phi, psi};
use humps::enumeration::{enumerate, enumerate_marked, EnumCaps};
use humps::stats::{classify, ClassKind};
use humps::{Family, FamilyKind, Step, StepSeq};

fn caps() -> EnumCaps {
    EnumCaps::default()
}

fn is_up_star(p: &StepSeq) -> bool {
    p.iter().find(|&s| s != Step::Flat) == Some(Step::Up)
}

/// Every family gets the same battery: forward and backward identity,
/// injectivity, exact image characterization, and class bookkeeping.
fn check_family(base: FamilyKind, sup: FamilyKind, max_order: usize) {
    let caps = caps();
    for n in 0..=max_order {
        let mut images = HashSet::new();
        let mut marked_total = 0usize;
        for m in enumerate_marked(Family::new(base, n), &caps).unwrap() {
            marked_total += 1;
            let result = phi(&m).unwrap();
            let back = psi(&result.image).unwrap();
            assert_eq!(back, m, "round trip through {}", result.image);

            let source_class = classify(m.path());
            let image_class = classify(&result.image);
            assert!(
                is_up_star(&result.image),
                "image {} not up-first",
                result.image
            );
            assert!(
                Family::new(sup, n).contains(&result.image),
                "image {} left the family",
                result.image
            );
            match image_class.kind {
                ClassKind::UpDown => assert_eq!(image_class.humps, source_class.humps),
                ClassKind::UpUp => assert_eq!(image_class.humps + 1, source_class.humps),
                other => panic!("image {} classified {:?}", result.image, other),
            }
            assert_eq!(
                result.image.counts().flat,
                m.path().counts().flat,
                "flat count changed through {}",
                result.image
            );
            assert_eq!(
                result.image.counts().up,
                m.path().counts().up,
                "up count changed through {}",
                result.image
            );
            assert!(images.insert(result.image), "duplicate image");
        }

        let up_star: Vec<StepSeq> = enumerate(Family::new(sup, n), &caps)
            .unwrap()
            .filter(is_up_star)
            .collect();
        assert_eq!(marked_total, up_star.len(), "image count off at order {n}");
        for l in &up_star {
            assert!(images.contains(l), "{l} missed by the forward map");
            let m = psi(l).unwrap();
            assert!(
                Family::new(base, n).contains(m.path()),
                "{l} pulled back outside the family"
            );
            assert_eq!(&phi(&m).unwrap().image, l, "backward trip through {l}");
        }
    }
}

#[test]
fn motzkin_round_trips() {
    check_family(FamilyKind::Motzkin, FamilyKind::SuperMotzkin, 8);
}

#[test]
fn dyck_round_trips() {
    check_family(FamilyKind::Dyck, FamilyKind::SuperDyck, 6);
}

#[test]
fn schroeder_round_trips() {
    check_family(FamilyKind::Schroeder, FamilyKind::SuperSchroeder, 5);
}

#[test]
fn flat_free_input_gives_flat_free_output() {
    let caps = caps();
    for n in 0..=6 {
        for m in enumerate_marked(Family::dyck(n), &caps).unwrap() {
            let image = phi(&m).unwrap().image;
            assert_eq!(image.counts().flat, 0, "{image} grew a flat step");
        }
    }
}

#[test]
fn marks_on_one_path_give_distinct_images() {
    let caps = caps();
    for p in enumerate(Family::motzkin(7), &caps).unwrap() {
        let humps = classify(&p).humps;
        let images: HashSet<StepSeq> = (0..humps)
            .map(|i| {
                let m = humps::enumeration::MarkedPath::new(p.clone(), i).unwrap();
                phi(&m).unwrap().image
            })
            .collect();
        assert_eq!(images.len(), humps, "collision among marks of {p}");
    }
}
