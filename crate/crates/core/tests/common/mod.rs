#![allow(dead_code)]

use num_bigint::BigUint;
use poset_gaps::{MarkedPoset, Poset};
use proptest::prelude::*;

/// All permutations of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for z in 0..used.len() {
            if !used[z] {
                used[z] = true;
                cur.push(z);
                rec(cur, used, out);
                cur.pop();
                used[z] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Orders of `0..n` (as position lists) compatible with `p`, by filtering
/// every permutation.
pub fn brute_extensions(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    permutations(n)
        .into_iter()
        .filter(|order| {
            let mut pos = vec![0; n];
            for (i, &z) in order.iter().enumerate() {
                pos[z] = i;
            }
            (0..n).all(|a| (0..n).all(|b| !p.lt(a, b) || pos[a] < pos[b]))
        })
        .collect()
}

/// `N_k` for `k = 1..n-1`, by brute force.
pub fn brute_gaps(m: &MarkedPoset) -> Vec<BigUint> {
    let n = m.len();
    let mut counts = vec![0u64; n.saturating_sub(1)];
    for order in brute_extensions(m.poset()) {
        let px = order.iter().position(|&z| z == m.x()).unwrap();
        let py = order.iter().position(|&z| z == m.y()).unwrap();
        if py > px {
            counts[py - px - 1] += 1;
        }
    }
    counts.into_iter().map(BigUint::from).collect()
}

/// A random poset on `n` elements: random forward edges under a random
/// relabeling, then closed.
pub fn poset_strategy(n_lo: usize, n_hi: usize) -> impl Strategy<Value = Poset> {
    (n_lo..=n_hi).prop_flat_map(|n| {
        let pairs = n * (n.saturating_sub(1)) / 2;
        (
            proptest::collection::vec(0u8..100, pairs),
            0u8..100,
            Just(permutations_sample(n)),
            any::<proptest::sample::Index>(),
        )
            .prop_map(move |(weights, density, perms, idx)| {
                let mut covers = Vec::new();
                let mut w = weights.iter();
                for a in 0..n {
                    for b in a + 1..n {
                        if *w.next().unwrap() < density / 2 {
                            covers.push((a, b));
                        }
                    }
                }
                let p = Poset::from_cover_relations(n, &covers, None).unwrap();
                p.relabel(&perms[idx.index(perms.len())])
            })
    })
}

fn permutations_sample(n: usize) -> Vec<Vec<usize>> {
    // all permutations for small n; a handful of rotations otherwise
    if n <= 6 {
        permutations(n)
    } else {
        (0..n)
            .flat_map(|r| {
                let fwd: Vec<usize> = (0..n).map(|i| (i + r) % n).collect();
                let rev: Vec<usize> = (0..n).map(|i| (n - 1 - i + r) % n).collect();
                [fwd, rev]
            })
            .collect()
    }
}

/// A random marked poset with `x ≱ y`.
pub fn marked_strategy(n_lo: usize, n_hi: usize) -> impl Strategy<Value = MarkedPoset> {
    poset_strategy(n_lo.max(2), n_hi).prop_flat_map(|p| {
        let pairs: Vec<(usize, usize)> = (0..p.len())
            .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && !p.lt(y, x))
            .collect();
        let p2 = p.clone();
        proptest::sample::select(pairs).prop_map(move |(x, y)| MarkedPoset::new(p2.clone(), x, y).unwrap())
    })
}
