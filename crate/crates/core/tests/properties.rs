mod common;

use common::{brute_gaps, marked_strategy, poset_strategy};
use num_bigint::BigUint;
use num_traits::Zero;
use poset_gaps::classify::{classify_in, shape_of, verify_theorems, KTag};
use poset_gaps::conditions::{
    cond_c, cond_e, cond_e_star, cond_m, cond_m_star, condition_profile, doubling_structure,
    doubling_structure_pairwise, flat_witness, vanishing,
};
use poset_gaps::format::{parse, render};
use poset_gaps::harness::canonical_key;
use poset_gaps::linext::{
    count_extensions, doubling_decompose, doubling_reconstruct, enumerate_extensions,
    gap_sequence, minimal_gap_extension,
};
use poset_gaps::{ElementSet, MarkedPoset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn gap_sequence_matches_brute_force(m in marked_strategy(2, 7)) {
        let seq = gap_sequence(&m);
        prop_assert_eq!(seq.counts(), &brute_gaps(&m)[..]);
    }

    #[test]
    fn enumeration_and_counting_agree(p in poset_strategy(0, 7)) {
        let listed: Vec<_> = enumerate_extensions(&p).collect();
        prop_assert_eq!(BigUint::from(listed.len()), count_extensions(&p));
        prop_assert_eq!(listed.len(), common::brute_extensions(&p).len());
        for f in &listed {
            prop_assert!(f.is_extension_of(&p));
        }
        let mut dedup = listed.clone();
        dedup.sort_by(|a, b| a.order().cmp(b.order()));
        dedup.dedup();
        prop_assert_eq!(dedup.len(), listed.len());
    }

    #[test]
    fn kahn_saks(m in marked_strategy(2, 7)) {
        let seq = gap_sequence(&m);
        prop_assert!(seq.log_concavity_violations().is_empty(), "{}", seq);
    }

    #[test]
    fn gaps_partition_extensions(m in marked_strategy(2, 7)) {
        let p = m.poset();
        let total = gap_sequence(&m).total();
        if p.lt(m.x(), m.y()) {
            prop_assert_eq!(total, count_extensions(p));
        } else {
            let back = gap_sequence(&MarkedPoset::new(p.clone(), m.y(), m.x()).unwrap()).total();
            prop_assert_eq!(total + back, count_extensions(p));
        }
    }

    #[test]
    fn vanishing_lemma(m in marked_strategy(2, 7)) {
        let seq = gap_sequence(&m);
        for k in 1..m.len() {
            prop_assert_eq!(vanishing(&m, k).unwrap(), seq.get(k).is_zero(), "k = {}", k);
        }
    }

    #[test]
    fn equality_is_flat_or_doubling(m in marked_strategy(4, 7)) {
        let seq = gap_sequence(&m);
        for k in 2..=m.len() - 2 {
            let c = classify_in(&seq, k).unwrap();
            if !seq.get(k).is_zero() && c.is_equality() {
                prop_assert!(matches!(c.tag, KTag::Flat | KTag::Doubling), "k = {}: {:?}", k, c.tag);
            }
        }
    }

    #[test]
    fn flat_characterization(m in marked_strategy(4, 7)) {
        let seq = gap_sequence(&m);
        for k in 2..=m.len() - 2 {
            let flat = classify_in(&seq, k).unwrap().tag == KTag::Flat;
            let witness = flat_witness(&m, k).unwrap().is_some();
            let cond = condition_profile(&m, k).unwrap().flat_condition();
            prop_assert_eq!(flat, witness, "k = {}", k);
            prop_assert_eq!(flat, cond, "k = {}", k);
        }
    }

    #[test]
    fn doubling_characterization(m in marked_strategy(4, 7)) {
        let seq = gap_sequence(&m);
        for k in 2..=m.len() - 2 {
            let dbl = classify_in(&seq, k).unwrap().tag == KTag::Doubling;
            let structure = doubling_structure(&m, k).unwrap();
            let cond = condition_profile(&m, k).unwrap().doubling_condition();
            prop_assert_eq!(dbl, structure, "k = {}", k);
            prop_assert_eq!(dbl, cond, "k = {}", k);
        }
    }

    #[test]
    fn factored_doubling_structure_matches_pairwise(m in marked_strategy(4, 6)) {
        for k in 2..=m.len() - 2 {
            prop_assert_eq!(doubling_structure(&m, k).unwrap(), doubling_structure_pairwise(&m, k));
        }
    }

    #[test]
    fn mutex(m in marked_strategy(4, 7)) {
        for k in 2..=m.len() - 2 {
            prop_assert!(!(cond_m(&m, k) && cond_e_star(&m, k)));
            prop_assert!(!(cond_m_star(&m, k) && cond_e(&m, k)));
        }
    }

    #[test]
    fn conditions_monotone_in_k(m in marked_strategy(4, 8)) {
        let n = m.len();
        for k in 3..=n - 2 {
            if cond_e(&m, k) { prop_assert!(cond_e(&m, k - 1)); }
            if cond_e_star(&m, k) { prop_assert!(cond_e_star(&m, k - 1)); }
            if cond_c(&m, k) { prop_assert!(cond_c(&m, k - 1)); }
        }
    }

    #[test]
    fn verify_theorems_confirms(m in marked_strategy(2, 7)) {
        let r = verify_theorems(&m);
        prop_assert!(r.confirmed(), "{:?}", r.failures);
    }

    #[test]
    fn dual_swapped_preserves_sequence(m in marked_strategy(2, 7)) {
        prop_assert_eq!(gap_sequence(&m.dual_swapped()), gap_sequence(&m));
    }

    #[test]
    fn augment_pads_sequence(m in marked_strategy(2, 6)) {
        let seq = gap_sequence(&m);
        let aug = gap_sequence(&m.augment());
        for k in 1..=m.len() + 1 {
            prop_assert_eq!(aug.get(k), seq.get(k));
        }
    }

    #[test]
    fn relabeling_preserves_everything(m in marked_strategy(2, 7), seed in any::<u64>()) {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let q = m.poset().relabel(&perm);
        let r = MarkedPoset::new(q.clone(), perm[m.x()], perm[m.y()]).unwrap();
        prop_assert_eq!(gap_sequence(&r), gap_sequence(&m));
        prop_assert_eq!(canonical_key(&q), canonical_key(m.poset()));
        for k in 2..n.saturating_sub(1) {
            prop_assert_eq!(condition_profile(&r, k).unwrap(), condition_profile(&m, k).unwrap());
        }
    }

    #[test]
    fn format_round_trip(m in marked_strategy(2, 9)) {
        let text = render(&m);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.x(), m.x());
        prop_assert_eq!(back.y(), m.y());
        prop_assert_eq!(back.poset().relation_pairs(), m.poset().relation_pairs());
    }

    #[test]
    fn minimal_gap_is_attained(m in marked_strategy(2, 7)) {
        let f = minimal_gap_extension(&m);
        prop_assert!(f.is_extension_of(m.poset()));
        let first = (1..m.len()).find(|&k| !gap_sequence(&m).get(k).is_zero());
        if let Some(k) = first {
            prop_assert_eq!(f.gap(m.x(), m.y()), k as isize);
        }
    }

    #[test]
    fn shape_has_no_violations(m in marked_strategy(4, 7)) {
        let s = shape_of(&gap_sequence(&m));
        prop_assert!(s.violations.is_empty(), "{:?}", s.violations);
    }

    #[test]
    fn doubling_decompose_inverts_reconstruct(m in marked_strategy(5, 7)) {
        let seq = gap_sequence(&m);
        let k = (2..=m.len() - 2)
            .filter(|&k| classify_in(&seq, k).unwrap().tag == KTag::Doubling)
            .max();
        if let Some(k) = k {
            for f in enumerate_extensions(m.poset()) {
                let g = f.gap(m.x(), m.y());
                if g < 1 || g as usize > k + 1 {
                    continue;
                }
                let (lo, hi, omega) = doubling_decompose(&m, &f).unwrap();
                prop_assert_eq!(doubling_reconstruct(&m, &lo, &hi, &omega).unwrap(), f);
            }
        }
    }

    #[test]
    fn element_set_algebra(a in any::<u32>(), b in any::<u32>()) {
        let (s, t) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
        prop_assert_eq!(s.union(t).len() + s.intersection(t).len(), s.len() + t.len());
        prop_assert!(s.difference(t).is_disjoint(t));
        prop_assert!(s.intersection(t).is_subset(s));
        let rebuilt: ElementSet = s.iter().collect();
        prop_assert_eq!(rebuilt, s);
    }
}
