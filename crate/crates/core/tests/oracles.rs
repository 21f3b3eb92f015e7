mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use poset_gaps::classify::{classify_k, gen_doublefull, gen_weird, KTag};
use poset_gaps::conditions::{condition_profile, doubling_structure};
use poset_gaps::geometry::{body_dimensions, k_polytope, l_polytope, upper_sets};
use poset_gaps::harness::{generate_posets, poset_list};
use poset_gaps::linext::{count_extensions, gap_sequence};
use poset_gaps::{ElementSet, Poset};

/// Every strict order on `n` elements, found by testing all relation tables.
fn brute_posets(n: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rel = |a: usize, b: usize| {
            a != b && mask >> pairs.iter().position(|&q| q == (a, b)).unwrap() & 1 == 1
        };
        let antisym = (0..n).all(|a| (0..n).all(|b| !(rel(a, b) && rel(b, a))));
        let trans = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c)))
        });
        if antisym && trans {
            out.insert(pairs.iter().copied().filter(|&(a, b)| rel(a, b)).collect());
        }
    }
    out
}

#[test]
fn generation_matches_brute_force() {
    for n in 0..=4 {
        let generated: Vec<Vec<(usize, usize)>> =
            generate_posets(n).map(|p| p.relation_pairs()).collect();
        let set: BTreeSet<_> = generated.iter().cloned().collect();
        assert_eq!(set.len(), generated.len(), "duplicates at n = {n}");
        assert_eq!(set, brute_posets(n), "n = {n}");
    }
}

#[test]
fn labeled_poset_counts() {
    // numbers of labeled posets
    let expected = [1usize, 1, 3, 19, 219, 4231, 130023];
    for (n, &e) in expected.iter().enumerate() {
        assert_eq!(generate_posets(n).count(), e, "n = {n}");
    }
}

#[test]
fn unlabeled_poset_counts() {
    let expected = [1usize, 2, 5, 16, 63];
    for (i, &e) in expected.iter().enumerate() {
        assert_eq!(poset_list(i + 1, true).len(), e, "n = {}", i + 1);
    }
}

#[test]
fn generated_posets_are_closed() {
    for p in generate_posets(5) {
        let n = p.len();
        for a in 0..n {
            assert!(!p.lt(a, a));
            for b in 0..n {
                for c in 0..n {
                    if p.lt(a, b) && p.lt(b, c) {
                        assert!(p.lt(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn weird_values() {
    let m = gen_weird();
    let seq = gap_sequence(&m);
    // paper values N_1 = 1, N_2 = 2, N_3 = 4
    assert_eq!(seq.get(1), BigUint::from(1u8));
    assert_eq!(seq.get(2), BigUint::from(2u8));
    assert_eq!(seq.get(3), BigUint::from(4u8));
    // the rest from brute force
    assert_eq!(seq.counts(), &common::brute_gaps(&m)[..]);
    assert_eq!(count_extensions(m.poset()), BigUint::from(common::brute_extensions(m.poset()).len()));
    assert_eq!(classify_k(&m, 2).unwrap().tag, KTag::Doubling);
    assert!(doubling_structure(&m, 2).unwrap());
    let prof = condition_profile(&m, 2).unwrap();
    assert!(prof.e && prof.e_star && prof.c && prof.par_xy_empty && prof.interval_empty);
}

/// Upper sets by testing every subset.
fn brute_upper_sets(p: &Poset) -> Vec<ElementSet> {
    (0u32..1 << p.len())
        .map(ElementSet::from_bits)
        .filter(|&s| p.is_upper_set(s))
        .collect()
}

#[test]
fn upper_sets_and_vertex_counts() {
    for p in generate_posets(4) {
        let mut a = upper_sets(&p);
        a.sort_by_key(|s| s.bits());
        assert_eq!(a, brute_upper_sets(&p));
    }
    let m = gen_weird();
    let ups = brute_upper_sets(m.poset());
    let l: Vec<_> = ups
        .iter()
        .filter(|u| u.contains(m.y()) && !u.contains(m.x()))
        .collect();
    assert_eq!(l_polytope(&m).len(), l.len());
    // x and y are incomparable in the example, so K is the order polytope
    assert_eq!(k_polytope(&m).len(), ups.iter().filter(|u| u.contains(m.x()) == u.contains(m.y())).count());
}

#[test]
fn doublefull_dimensions() {
    let m = gen_doublefull(6, 3, 6, 2, 2).unwrap();
    let d = body_dimensions(&m);
    let n = m.len() as isize;
    assert_eq!(d.k, n - 1 - m.between().len() as isize);
    assert_eq!(d.l, n - 2 - (m.lt_x().len() + m.gt_y().len()) as isize);
    assert_eq!(d.sum, n - 1);
}
