//! The combinatorial conditions `M_k`, `M*_k`, `E_k`, `E*_k`, `C_k`, the
//! vanishing criterion, and the extension-side predicates for flat and
//! doubling progressions.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::linext::{enumerate_extensions, subset_orders, ExtensionTable};
use crate::poset::MarkedPoset;

/// Every condition evaluated at one index `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConditionProfile {
    pub k: usize,
    pub vanish: bool,
    #[serde(rename = "M")]
    pub m: bool,
    #[serde(rename = "M_star")]
    pub m_star: bool,
    #[serde(rename = "E")]
    pub e: bool,
    #[serde(rename = "E_star")]
    pub e_star: bool,
    #[serde(rename = "C")]
    pub c: bool,
    pub par_xy_empty: bool,
    pub interval_empty: bool,
}

impl ConditionProfile {
    /// `(M ∧ E) ∨ (M* ∧ E*)`
    pub fn flat_condition(&self) -> bool {
        (self.m && self.e) || (self.m_star && self.e_star)
    }

    /// `P_{∥x,∥y} = P_{x<·<y} = ∅` together with `E`, `E*` and `C`.
    pub fn doubling_condition(&self) -> bool {
        self.par_xy_empty && self.interval_empty && self.e && self.e_star && self.c
    }
}

fn check_range(k: usize, lo: usize, hi: usize) -> Result<()> {
    if k < lo || k > hi {
        return Err(Error::IndexOutOfRange { k, lo, hi });
    }
    Ok(())
}

fn check_interior(m: &MarkedPoset, k: usize) -> Result<()> {
    // n ≥ 2 always holds, but n - 2 may be below 2
    let hi = m.len() - 2;
    check_range(k, 2, hi)
}

/// `N_k = 0`, decided from the sizes of `P_{<x}`, `P_{>y}` and `P_{x<·<y}`.
pub fn vanishing(m: &MarkedPoset, k: usize) -> Result<bool> {
    let n = m.len();
    check_range(k, 1, n - 1)?;
    Ok(vanishing_unchecked(m, k))
}

fn vanishing_unchecked(m: &MarkedPoset, k: usize) -> bool {
    let n = m.len();
    // |P_{<x}| + |P_{>y}| > n - k - 1, rearranged to stay unsigned
    m.lt_x().len() + m.gt_y().len() + k + 1 > n || m.between().len() + 1 > k
}

/// `M_k`: every `z ∈ P_{>x,≱y}` has `|P_{<z}| + |P_{>y}| > n - k`.
pub fn cond_m(m: &MarkedPoset, k: usize) -> bool {
    let p = m.poset();
    let n = m.len();
    let gy = m.gt_y().len();
    m.gt_x_not_ge_y()
        .iter()
        .all(|z| p.below(z).len() + gy + k > n)
}

/// `M*_k`: every `z ∈ P_{<y,≰x}` has `|P_{>z}| + |P_{<x}| > n - k`.
pub fn cond_m_star(m: &MarkedPoset, k: usize) -> bool {
    let p = m.poset();
    let n = m.len();
    let lx = m.lt_x().len();
    m.lt_y_not_le_x()
        .iter()
        .all(|z| p.above(z).len() + lx + k > n)
}

/// `E_k`: `|P_{z<·<y} ∪ {x}| > k` for every `z < x`, and `|P_{<y} ∪ {x}| > k`.
pub fn cond_e(m: &MarkedPoset, k: usize) -> bool {
    let p = m.poset();
    let (x, y) = (m.x(), m.y());
    m.lt_y().with(x).len() > k
        && m
            .lt_x()
            .iter()
            .all(|z| p.open_interval(z, y).with(x).len() > k)
}

/// `E*_k`: `|P_{x<·<z} ∪ {y}| > k` for every `z > y`, and `|P_{>x} ∪ {y}| > k`.
pub fn cond_e_star(m: &MarkedPoset, k: usize) -> bool {
    let p = m.poset();
    let (x, y) = (m.x(), m.y());
    m.gt_x().with(y).len() > k
        && m
            .gt_y()
            .iter()
            .all(|z| p.open_interval(x, z).with(y).len() > k)
}

/// `C_k`: for `z ∈ P_{<y,∥x}`, `z' ∈ P_{>x,∥y}` with `z < z'`,
/// `|P_{z<·<y}| + |P_{x<·<z'}| > k - 2`.
pub fn cond_c(m: &MarkedPoset, k: usize) -> bool {
    let p = m.poset();
    let (x, y) = (m.x(), m.y());
    let uppers = m.gt_x_par_y();
    m.lt_y_par_x().iter().all(|z| {
        p.above(z).intersection(uppers).iter().all(|zp| {
            p.open_interval(z, y).len() + p.open_interval(x, zp).len() + 2 > k
        })
    })
}

/// All conditions at `k`, for `2 ≤ k ≤ n - 2`.
pub fn condition_profile(m: &MarkedPoset, k: usize) -> Result<ConditionProfile> {
    check_interior(m, k)?;
    Ok(ConditionProfile {
        k,
        vanish: vanishing_unchecked(m, k),
        m: cond_m(m, k),
        m_star: cond_m_star(m, k),
        e: cond_e(m, k),
        e_star: cond_e_star(m, k),
        c: cond_c(m, k),
        par_xy_empty: m.par_x_par_y().is_empty(),
        interval_empty: m.between().is_empty(),
    })
}

/// True when `z` has incomparable neighbours on both sides in the extension.
fn flanked(table: &ExtensionTable, i: usize, m: &MarkedPoset, z: usize) -> bool {
    let n = m.len();
    let r = table.rank(i, z);
    if r == 1 || r == n {
        return false;
    }
    let p = m.poset();
    p.incomparable(table.at(i, r - 1), z) && p.incomparable(table.at(i, r + 1), z)
}

/// Some `z ∈ {x, y}` such that in every extension with `f(y) - f(x) = k`
/// the immediate neighbours of `z` are both incomparable to it. `x` is tried
/// first. `None` when neither works or when `N_k = 0`.
pub fn flat_witness(m: &MarkedPoset, k: usize) -> Result<Option<usize>> {
    check_interior(m, k)?;
    Ok(flat_witness_in(&ExtensionTable::new(m.poset()), m, k))
}

/// [`flat_witness`] over a precomputed extension table of `m.poset()`.
pub fn flat_witness_in(table: &ExtensionTable, m: &MarkedPoset, k: usize) -> Option<usize> {
    let (x, y) = (m.x(), m.y());
    let gap_k: Vec<usize> = (0..table.len())
        .filter(|&i| table.gap(i, x, y) == k as isize)
        .collect();
    if gap_k.is_empty() {
        return None;
    }
    [x, y]
        .into_iter()
        .find(|&z| gap_k.iter().all(|&i| flanked(table, i, m, z)))
}

/// The extension-side doubling structure at `k`: `P` splits as
/// `P_{≤x} ∪ P_{<y,∥x} ∪ P_{≥y} ∪ P_{>x,∥y}`, and for every extension `f` of
/// `P_-` and `f'` of `P_+`, the `k` largest of `f` are incomparable to `x`,
/// the `k` smallest of `f'` are incomparable to `y`, and the `i` largest of
/// `f` are incomparable to the `k - i` smallest of `f'` for `1 ≤ i < k`.
pub fn doubling_structure(m: &MarkedPoset, k: usize) -> Result<bool> {
    check_interior(m, k)?;
    Ok(doubling_structure_unchecked(m, k))
}

pub(crate) fn doubling_structure_unchecked(m: &MarkedPoset, k: usize) -> bool {
    if !m.par_x_par_y().is_empty() || !m.between().is_empty() {
        return false;
    }
    let p = m.poset();
    let (lower, upper) = (m.lower_part(), m.upper_part());
    if lower.len() < k || upper.len() < k {
        return false;
    }
    // The quantifier over pairs (f, f') factors: it holds iff it holds for
    // the union over f of each top-i set against the union over f' of each
    // bottom-j set. tops[i] / bottoms[j] collect those unions.
    let mut tops = vec![ElementSet::EMPTY; k + 1];
    for f in subset_orders(p, lower) {
        let len = f.len();
        for i in 1..=k {
            tops[i] = tops[i].union(f[len - i..].iter().copied().collect());
        }
    }
    let mut bottoms = vec![ElementSet::EMPTY; k + 1];
    for g in subset_orders(p, upper) {
        for j in 1..=k {
            bottoms[j] = bottoms[j].union(g[..j].iter().copied().collect());
        }
    }
    let par = |a: ElementSet, b: ElementSet| {
        a.iter()
            .all(|u| p.incomparable_to(u).intersection(b) == b)
    };
    if !par(tops[k], ElementSet::singleton(m.x())) {
        return false;
    }
    if !par(bottoms[k], ElementSet::singleton(m.y())) {
        return false;
    }
    (1..k).all(|i| par(tops[i], bottoms[k - i]))
}

/// Literal version of [`doubling_structure`]'s quantifier over every pair of
/// extensions, without the factoring shortcut. Used as a test oracle.
pub fn doubling_structure_pairwise(m: &MarkedPoset, k: usize) -> bool {
    if !m.par_x_par_y().is_empty() || !m.between().is_empty() {
        return false;
    }
    let p = m.poset();
    let (lower, upper) = (m.lower_part(), m.upper_part());
    if lower.len() < k || upper.len() < k {
        return false;
    }
    let (sub_minus, map_minus) = p.induced(lower);
    let (sub_plus, map_plus) = p.induced(upper);
    let fs: Vec<Vec<usize>> = enumerate_extensions(&sub_minus)
        .map(|f| f.order().iter().map(|&i| map_minus[i]).collect())
        .collect();
    let gs: Vec<Vec<usize>> = enumerate_extensions(&sub_plus)
        .map(|f| f.order().iter().map(|&i| map_plus[i]).collect())
        .collect();
    for f in &fs {
        let len = f.len();
        if !f[len - k..].iter().all(|&u| p.incomparable(u, m.x())) {
            return false;
        }
        for g in &gs {
            if !g[..k].iter().all(|&v| p.incomparable(v, m.y())) {
                return false;
            }
            for i in 1..k {
                for &u in &f[len - i..] {
                    for &v in &g[..k - i] {
                        if !p.incomparable(u, v) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::weird;
    use crate::poset::Poset;

    #[test]
    fn weird_profile_at_two() {
        let m = weird();
        for k in 1..=5 {
            assert!(!vanishing(&m, k).unwrap());
        }
        let c = condition_profile(&m, 2).unwrap();
        assert!(c.e && c.e_star && c.c && c.par_xy_empty && c.interval_empty);
        assert!(c.doubling_condition());
        assert!(doubling_structure(&m, 2).unwrap());
        assert!(!doubling_structure(&m, 3).unwrap());
        assert_eq!(flat_witness(&m, 2).unwrap(), None);
    }

    #[test]
    fn index_ranges() {
        let m = weird();
        assert_eq!(
            vanishing(&m, 0),
            Err(Error::IndexOutOfRange { k: 0, lo: 1, hi: 5 })
        );
        assert!(vanishing(&m, 6).is_err());
        assert!(condition_profile(&m, 1).is_err());
        assert!(condition_profile(&m, 5).is_err());
        assert!(flat_witness(&m, 5).is_err());
        assert!(doubling_structure(&m, 1).is_err());
    }

    #[test]
    fn two_chain_never_vanishes_at_one() {
        let m = MarkedPoset::new(Poset::chain(2), 0, 1).unwrap();
        assert!(!vanishing(&m, 1).unwrap());
    }

    #[test]
    fn antichain_m_vacuous() {
        let m = MarkedPoset::new(Poset::antichain(5), 0, 1).unwrap();
        for k in 2..=3 {
            let c = condition_profile(&m, k).unwrap();
            assert!(c.m && c.m_star);
        }
    }

    #[test]
    fn interval_blocks_doubling() {
        let m = MarkedPoset::new(Poset::chain(4), 0, 2).unwrap();
        assert!(!doubling_structure(&m, 2).unwrap());
    }

    #[test]
    fn flat_witness_not_minimal_rank() {
        // x < everything else except y; y isolated: x always first
        let p = Poset::from_cover_relations(4, &[(0, 2), (0, 3)], None).unwrap();
        let m = MarkedPoset::new(p, 0, 1).unwrap();
        assert_ne!(flat_witness(&m, 2).unwrap(), Some(0));
    }

    #[test]
    fn factored_matches_pairwise_on_weird() {
        let m = weird();
        for k in 2..=4 {
            assert_eq!(
                doubling_structure(&m, k).unwrap(),
                doubling_structure_pairwise(&m, k)
            );
        }
    }
}
