//! Randomized structural invariants over paths, statistics, and the
//! bijection.

use proptest::prelude::*;

use humps::bijection::{phi, psi};
use humps::enumeration::{enumerate, EnumCaps, MarkedPath};
use humps::stats::{classify, humps, run_word, valleys};
use humps::{Family, Step, StepSeq};

fn any_step() -> impl Strategy<Value = Step> {
    prop::sample::select(vec![Step::Up, Step::Flat, Step::Down])
}

fn any_seq() -> impl Strategy<Value = StepSeq> {
    prop::collection::vec(any_step(), 0..=14).prop_map(StepSeq::from_steps)
}

/// A path drawn uniformly from the full listing of one small order.
fn motzkin_path() -> impl Strategy<Value = StepSeq> {
    (0usize..=9).prop_flat_map(|n| {
        let all: Vec<StepSeq> = enumerate(Family::motzkin(n), &EnumCaps::default())
            .unwrap()
            .collect();
        prop::sample::select(all)
    })
}

fn marked_motzkin() -> impl Strategy<Value = MarkedPath> {
    motzkin_path()
        .prop_filter("needs a hump", |p| classify(p).humps > 0)
        .prop_flat_map(|p| {
            let k = classify(&p).humps;
            (Just(p), 0..k)
        })
        .prop_map(|(p, i)| MarkedPath::new(p, i).unwrap())
}

proptest! {
    #[test]
    fn parse_inverts_display(p in any_seq()) {
        let text = p.to_string();
        prop_assert_eq!(StepSeq::parse(&text).unwrap(), p);
    }

    #[test]
    fn mirror_is_an_involution(p in any_seq()) {
        prop_assert_eq!(p.mirror().mirror(), p);
    }

    #[test]
    fn mirror_negates_heights(p in any_seq()) {
        let h = p.heights();
        let hm = p.mirror().heights();
        for i in 0..=p.len() {
            prop_assert_eq!(h.at(i), -hm.at(i));
        }
    }

    #[test]
    fn heights_sum_the_deltas(p in any_seq()) {
        let h = p.heights();
        let mut acc = 0i64;
        for (i, s) in p.iter().enumerate() {
            prop_assert_eq!(h.at(i), acc);
            acc += s.delta();
        }
        prop_assert_eq!(h.final_height(), acc);
        prop_assert!(h.is_nonnegative() == (h.min() >= 0));
    }

    #[test]
    fn segments_reassemble(p in any_seq(), cut in 0usize..=14) {
        let cut = cut.min(p.len());
        let left = p.segment(0, cut).unwrap();
        let right = p.segment(cut, p.len()).unwrap();
        prop_assert_eq!(StepSeq::concat(&[&left, &right]), p);
    }

    #[test]
    fn class_hump_count_matches_listing(p in any_seq()) {
        prop_assert_eq!(classify(&p).humps, humps(&p).len());
    }

    #[test]
    fn hump_and_valley_points_stay_in_range(p in any_seq()) {
        for h in humps(&p) {
            prop_assert!(h.hump_point >= 1 && h.hump_point <= p.len());
            prop_assert_eq!(p.step(h.u_index), Step::Up);
            prop_assert_eq!(p.step(h.d_index), Step::Down);
            prop_assert_eq!(h.d_index - h.u_index, h.flat_run + 1);
        }
        for v in valleys(&p, true) {
            prop_assert!(v.valley_point <= p.len());
        }
    }

    #[test]
    fn run_word_reconstructs_flat_free_paths(p in any_seq()) {
        let flat_free = StepSeq::from_steps(
            p.iter().filter(|&s| s != Step::Flat).collect(),
        );
        let word = run_word(&flat_free).unwrap();
        prop_assert_eq!(word.reconstruct(), flat_free);
    }

    #[test]
    fn forward_map_round_trips(m in marked_motzkin()) {
        let result = phi(&m).unwrap();
        prop_assert_eq!(psi(&result.image).unwrap(), m);
    }

    #[test]
    fn forward_map_preserves_step_counts(m in marked_motzkin()) {
        let image = phi(&m).unwrap().image;
        prop_assert_eq!(image.counts(), m.path().counts());
    }
}
