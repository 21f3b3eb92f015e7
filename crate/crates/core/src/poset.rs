//! Finite posets stored as a transitively closed strict-order table.
//!
//! Elements are the integers `0..n`; labels are for display only. Each row of
//! the table is an [`ElementSet`], so every clause query is a handful of bit
//! operations.

use std::fmt;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Poset {
    n: usize,
    /// `above[a]` holds every `b` with `a < b`.
    above: Vec<ElementSet>,
    /// `below[b]` holds every `a` with `a < b`.
    below: Vec<ElementSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.above == other.above
    }
}

impl Eq for Poset {}

impl std::hash::Hash for Poset {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.above.hash(state);
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .hasse()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.label(a), self.label(b)))
            .collect();
        write!(f, "Poset(n={}, covers=[{}])", self.n, covers.join(", "))
    }
}

impl Poset {
    /// The antichain on `n` elements.
    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            above: vec![ElementSet::EMPTY; n],
            below: vec![ElementSet::EMPTY; n],
            labels: None,
        }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_cover_relations(n, &covers, None).expect("a chain is acyclic")
    }

    /// Builds the poset generated by `covers`, closing transitively.
    ///
    /// The pairs need not be covers; any generating relation works and
    /// duplicates are ignored. Self-pairs and cycles are rejected.
    pub fn from_cover_relations(
        n: usize,
        covers: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge { n, max: MAX_ELEMENTS });
        }
        let mut above = vec![ElementSet::EMPTY; n];
        for &(a, b) in covers {
            for z in [a, b] {
                if z >= n {
                    return Err(Error::ElementOutOfRange { element: z, n });
                }
            }
            if a == b {
                return Err(Error::SelfPair(a));
            }
            above[a].insert(b);
        }
        Self::from_relation(above, labels)
    }

    /// Closes an arbitrary relation given as rows `above[a] = {b : a R b}`.
    pub fn from_relation(mut above: Vec<ElementSet>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = above.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge { n, max: MAX_ELEMENTS });
        }
        for k in 0..n {
            let row_k = above[k];
            for row in above.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        if let Some(z) = (0..n).find(|&z| above[z].contains(z)) {
            return Err(Error::CycleDetected(z));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::BadParameters(format!(
                    "{} labels for {} elements",
                    l.len(),
                    n
                )));
            }
        }
        Ok(Self::from_closed_rows(above, labels))
    }

    /// Builds from rows that are already transitively closed and irreflexive.
    pub(crate) fn from_closed_rows(above: Vec<ElementSet>, labels: Option<Vec<String>>) -> Self {
        let n = above.len();
        let mut below = vec![ElementSet::EMPTY; n];
        for (a, row) in above.iter().enumerate() {
            for b in row.iter() {
                below[b].insert(a);
            }
        }
        Poset {
            n,
            above,
            below,
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Self {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.n));
        self.labels = labels;
        self
    }

    /// Display name; falls back to `p<index>`.
    pub fn label(&self, z: usize) -> String {
        match &self.labels {
            Some(l) => l[z].clone(),
            None => format!("p{z}"),
        }
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        !self.comparable(a, b)
    }

    /// `P_{<z}`.
    pub fn below(&self, z: usize) -> ElementSet {
        self.below[z]
    }

    /// `P_{>z}`.
    pub fn above(&self, z: usize) -> ElementSet {
        self.above[z]
    }

    /// `P_{≤z}`.
    pub fn at_most(&self, z: usize) -> ElementSet {
        self.below[z].with(z)
    }

    /// `P_{≥z}`.
    pub fn at_least(&self, z: usize) -> ElementSet {
        self.above[z].with(z)
    }

    /// `P_{∥z}`.
    pub fn incomparable_to(&self, z: usize) -> ElementSet {
        self.elements()
            .difference(self.above[z].union(self.below[z]))
            .without(z)
    }

    /// `P_{a<·<b}`.
    pub fn open_interval(&self, a: usize, b: usize) -> ElementSet {
        self.above[a].intersection(self.below[b])
    }

    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && self.open_interval(a, b).is_empty()
    }

    pub fn is_minimal(&self, z: usize) -> bool {
        self.below[z].is_empty()
    }

    pub fn is_maximal(&self, z: usize) -> bool {
        self.above[z].is_empty()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        (0..self.n).filter(|&z| self.is_minimal(z)).collect()
    }

    pub fn maximal_elements(&self) -> ElementSet {
        (0..self.n).filter(|&z| self.is_maximal(z)).collect()
    }

    /// Minimal elements of the subset `s` in the induced order.
    pub fn minimal_in(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&z| self.below[z].is_disjoint(s))
            .collect()
    }

    pub fn is_lower_set(&self, s: ElementSet) -> bool {
        s.iter().all(|z| self.below[z].is_subset(s))
    }

    pub fn is_upper_set(&self, s: ElementSet) -> bool {
        s.iter().all(|z| self.above[z].is_subset(s))
    }

    /// Evaluates a clause descriptor to the subset `P_C`.
    pub fn subset(&self, clause: &Clause) -> ElementSet {
        match clause {
            Clause::All => self.elements(),
            Clause::Below(z) => self.below(*z),
            Clause::AtMost(z) => self.at_most(*z),
            Clause::Above(z) => self.above(*z),
            Clause::AtLeast(z) => self.at_least(*z),
            Clause::Incomparable(z) => self.incomparable_to(*z),
            Clause::Between(a, b) => self.open_interval(*a, *b),
            Clause::Not(c) => self.elements().difference(self.subset(c)),
            Clause::And(cs) => cs
                .iter()
                .fold(self.elements(), |acc, c| acc.intersection(self.subset(c))),
            Clause::Or(cs) => cs
                .iter()
                .fold(ElementSet::EMPTY, |acc, c| acc.union(self.subset(c))),
        }
    }

    /// Cover pairs `(a, b)` with `a ⋖ b`, in lexicographic order.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.above[a].iter() {
                if self.open_interval(a, b).is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All pairs `(a, b)` with `a < b`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.above[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn relation_count(&self) -> usize {
        self.above.iter().map(|r| r.len()).sum()
    }

    /// The poset with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            above: self.below.clone(),
            below: self.above.clone(),
            labels: self.labels.clone(),
        }
    }

    /// The subposet induced on `s`, with `map[i]` the original id of new element `i`.
    pub fn induced(&self, s: ElementSet) -> (Poset, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &z) in map.iter().enumerate() {
            index[z] = i;
        }
        let above = map
            .iter()
            .map(|&z| {
                self.above[z]
                    .intersection(s)
                    .iter()
                    .map(|b| index[b])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&z| l[z].clone()).collect());
        (Self::from_closed_rows(above, labels), map)
    }

    /// Applies the permutation `perm` (old id `z` becomes `perm[z]`).
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let mut above = vec![ElementSet::EMPTY; self.n];
        for a in 0..self.n {
            above[perm[a]] = self.above[a].iter().map(|b| perm[b]).collect();
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for z in 0..self.n {
                out[perm[z]] = l[z].clone();
            }
            out
        });
        Self::from_closed_rows(above, labels)
    }

    pub(crate) fn above_rows(&self) -> &[ElementSet] {
        &self.above
    }
}

/// Descriptor for a subset `P_C` of a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Clause {
    All,
    /// `P_{<z}`
    Below(usize),
    /// `P_{≤z}`
    AtMost(usize),
    /// `P_{>z}`
    Above(usize),
    /// `P_{≥z}`
    AtLeast(usize),
    /// `P_{∥z}`
    Incomparable(usize),
    /// `P_{a<·<b}`
    Between(usize, usize),
    Not(Box<Clause>),
    And(Vec<Clause>),
    Or(Vec<Clause>),
}

impl Clause {
    pub fn and(self, other: Clause) -> Clause {
        match self {
            Clause::And(mut cs) => {
                cs.push(other);
                Clause::And(cs)
            }
            c => Clause::And(vec![c, other]),
        }
    }

    pub fn or(self, other: Clause) -> Clause {
        match self {
            Clause::Or(mut cs) => {
                cs.push(other);
                Clause::Or(cs)
            }
            c => Clause::Or(vec![c, other]),
        }
    }

    pub fn negate(self) -> Clause {
        Clause::Not(Box::new(self))
    }
}

/// A poset with distinguished elements `x ≱ y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkedPoset {
    poset: Poset,
    x: usize,
    y: usize,
}

impl fmt::Debug for MarkedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} x={} y={}",
            self.poset,
            self.poset.label(self.x),
            self.poset.label(self.y)
        )
    }
}

impl MarkedPoset {
    pub fn new(poset: Poset, x: usize, y: usize) -> Result<Self> {
        let n = poset.len();
        for z in [x, y] {
            if z >= n {
                return Err(Error::ElementOutOfRange { element: z, n });
            }
        }
        if x == y {
            return Err(Error::MarkViolation(format!(
                "x and y are the same element {}",
                poset.label(x)
            )));
        }
        if poset.lt(y, x) {
            return Err(Error::MarkViolation(format!(
                "x = {} lies above y = {}",
                poset.label(x),
                poset.label(y)
            )));
        }
        Ok(MarkedPoset { poset, x, y })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn subset(&self, clause: &Clause) -> ElementSet {
        self.poset.subset(clause)
    }

    pub fn x_lt_y(&self) -> bool {
        self.poset.lt(self.x, self.y)
    }

    /// `P_{<x}`
    pub fn lt_x(&self) -> ElementSet {
        self.poset.below(self.x)
    }

    /// `P_{≤x}`
    pub fn le_x(&self) -> ElementSet {
        self.poset.at_most(self.x)
    }

    /// `P_{>x}`
    pub fn gt_x(&self) -> ElementSet {
        self.poset.above(self.x)
    }

    /// `P_{<y}`
    pub fn lt_y(&self) -> ElementSet {
        self.poset.below(self.y)
    }

    /// `P_{>y}`
    pub fn gt_y(&self) -> ElementSet {
        self.poset.above(self.y)
    }

    /// `P_{≥y}`
    pub fn ge_y(&self) -> ElementSet {
        self.poset.at_least(self.y)
    }

    /// `P_{x<·<y}`
    pub fn between(&self) -> ElementSet {
        self.poset.open_interval(self.x, self.y)
    }

    /// `P_{>x,∥y}`
    pub fn gt_x_par_y(&self) -> ElementSet {
        self.gt_x().intersection(self.poset.incomparable_to(self.y))
    }

    /// `P_{<y,∥x}`
    pub fn lt_y_par_x(&self) -> ElementSet {
        self.lt_y().intersection(self.poset.incomparable_to(self.x))
    }

    /// `P_{∥x,∥y}`
    pub fn par_x_par_y(&self) -> ElementSet {
        self.poset
            .incomparable_to(self.x)
            .intersection(self.poset.incomparable_to(self.y))
    }

    /// `P_{>x,≱y}`
    pub fn gt_x_not_ge_y(&self) -> ElementSet {
        self.gt_x().difference(self.ge_y())
    }

    /// `P_{<y,≰x}`
    pub fn lt_y_not_le_x(&self) -> ElementSet {
        self.lt_y().difference(self.le_x())
    }

    /// `P_- = P_{<x} ∪ P_{<y,∥x}`
    pub fn lower_part(&self) -> ElementSet {
        self.lt_x().union(self.lt_y_par_x())
    }

    /// `P_+ = P_{>y} ∪ P_{>x,∥y}`
    pub fn upper_part(&self) -> ElementSet {
        self.gt_y().union(self.gt_x_par_y())
    }

    /// The six-way case split `P_{≤x}, P_{<y,∥x}, P_{≥y}, P_{>x,∥y},
    /// P_{∥x,∥y}, P_{x<·<y}` used throughout the equality analysis.
    pub fn case_split(&self) -> [ElementSet; 6] {
        [
            self.le_x(),
            self.lt_y_par_x(),
            self.ge_y(),
            self.gt_x_par_y(),
            self.par_x_par_y(),
            self.between(),
        ]
    }

    /// Dual poset with the marks swapped; its gap sequence is unchanged.
    pub fn dual_swapped(&self) -> MarkedPoset {
        MarkedPoset {
            poset: self.poset.dual(),
            x: self.y,
            y: self.x,
        }
    }

    /// Dual poset with the same marks. Its gap sequence counts extensions of
    /// the original with `f(x) - f(y) = k`; valid only when `x ∥ y`.
    pub fn dual_same_marks(&self) -> Result<MarkedPoset> {
        MarkedPoset::new(self.poset.dual(), self.x, self.y)
    }

    /// Adjoins a global minimum `0̂` (id `n`) and maximum `1̂` (id `n+1`).
    /// Original ids and marks are unchanged.
    pub fn augment(&self) -> MarkedPoset {
        let n = self.poset.len();
        let top = n + 1;
        let mut above: Vec<ElementSet> = self
            .poset
            .above_rows()
            .iter()
            .map(|r| r.with(top))
            .collect();
        above.push(ElementSet::full(n).with(top));
        above.push(ElementSet::EMPTY);
        let labels = self.poset.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(fresh_label(&l, "bottom"));
            l.push(fresh_label(&l, "top"));
            l
        });
        MarkedPoset {
            poset: Poset::from_closed_rows(above, labels),
            x: self.x,
            y: self.y,
        }
    }

    /// Quotient of `P` identifying the class `P_{x≤·≤y}` (just `{x, y}` when
    /// `x ∥ y`); these are the coordinates forced equal on the slice `t_y = t_x`.
    pub fn merge_xy(&self) -> MergedPoset {
        let n = self.poset.len();
        let class = self.between().with(self.x).with(self.y);
        let mut class_of = vec![0; n];
        let mut next = 0;
        let mut merged = 0;
        #[allow(clippy::needless_range_loop)]
        for z in 0..n {
            if class.contains(z) && z != self.x {
                continue;
            }
            if z == self.x {
                merged = next;
            }
            class_of[z] = next;
            next += 1;
        }
        for z in class.iter() {
            class_of[z] = merged;
        }
        let mut above = vec![ElementSet::EMPTY; next];
        for (a, b) in self.poset.relation_pairs() {
            let (ca, cb) = (class_of[a], class_of[b]);
            if ca != cb {
                above[ca].insert(cb);
            }
        }
        let poset = Poset::from_relation(above, None)
            .expect("quotient by the x..y interval is acyclic when x ≱ y");
        MergedPoset {
            poset,
            class_of,
            merged,
        }
    }
}

fn fresh_label(existing: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while existing.contains(&name) {
        name.push('_');
    }
    name
}

/// Result of [`MarkedPoset::merge_xy`].
#[derive(Clone, Debug)]
pub struct MergedPoset {
    pub poset: Poset,
    /// Maps each element of the original poset to its class.
    pub class_of: Vec<usize>,
    /// Index of the class containing `x` and `y`.
    pub merged: usize,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// The six-element example `z1 ⋖ z2 ⋖ y`, `x ⋖ z3 ⋖ z4`.
    /// Ids: z1=0, z2=1, y=2, x=3, z3=4, z4=5.
    pub(crate) fn weird() -> MarkedPoset {
        let labels = ["z1", "z2", "y", "x", "z3", "z4"].map(String::from).to_vec();
        let p = Poset::from_cover_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)], Some(labels))
            .unwrap();
        MarkedPoset::new(p, 3, 2).unwrap()
    }

    fn set(items: &[usize]) -> ElementSet {
        items.iter().copied().collect()
    }

    #[test]
    fn chain_closure() {
        let p = Poset::from_cover_relations(3, &[(0, 1), (1, 2)], None).unwrap();
        assert_eq!(p.relation_pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(p.hasse(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_and_self_pair_rejected() {
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 1), (1, 0)], None),
            Err(Error::CycleDetected(_))
        ));
        assert_eq!(
            Poset::from_cover_relations(2, &[(1, 1)], None),
            Err(Error::SelfPair(1))
        );
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 2)], None),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn duplicate_pairs_tolerated() {
        let p = Poset::from_cover_relations(2, &[(0, 1), (0, 1)], None).unwrap();
        assert_eq!(p.relation_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn weird_subsets() {
        let m = weird();
        assert_eq!(m.lt_y(), set(&[0, 1]));
        assert_eq!(m.gt_x(), set(&[4, 5]));
        assert_eq!(m.gt_x_par_y(), set(&[4, 5]));
        let clause = Clause::Above(3).and(Clause::Incomparable(2));
        assert_eq!(m.subset(&clause), set(&[4, 5]));
        assert_eq!(m.subset(&Clause::Between(3, 2)), ElementSet::EMPTY);
        assert!(m.par_x_par_y().is_empty());
        assert_eq!(m.poset().hasse(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn chain_has_no_incomparable_elements() {
        let p = Poset::chain(3);
        assert!(p.subset(&Clause::Incomparable(1)).is_empty());
    }

    #[test]
    fn antichain_hasse_is_empty() {
        assert!(Poset::antichain(4).hasse().is_empty());
    }

    #[test]
    fn dual_reverses_and_is_an_involution() {
        let c = Poset::chain(3);
        assert_eq!(c.dual().hasse(), vec![(1, 0), (2, 1)]);
        let w = weird();
        let d = w.poset().dual();
        assert_eq!(d.hasse(), vec![(1, 0), (2, 1), (4, 3), (5, 4)]);
        assert_eq!(d.dual(), *w.poset());
        assert_eq!(Poset::antichain(3).dual(), Poset::antichain(3));
    }

    #[test]
    fn case_split_partitions() {
        let m = weird();
        let parts = m.case_split();
        let mut seen = ElementSet::EMPTY;
        for p in parts {
            assert!(p.is_disjoint(seen));
            seen = seen.union(p);
        }
        assert_eq!(seen, m.poset().elements());
    }

    #[test]
    fn mark_violation() {
        let p = Poset::chain(2);
        assert!(MarkedPoset::new(p.clone(), 0, 1).is_ok());
        assert!(matches!(
            MarkedPoset::new(p.clone(), 1, 0),
            Err(Error::MarkViolation(_))
        ));
        assert!(matches!(
            MarkedPoset::new(p, 1, 1),
            Err(Error::MarkViolation(_))
        ));
    }

    #[test]
    fn augment_adds_bottom_and_top() {
        let m = MarkedPoset::new(Poset::chain(2), 0, 1).unwrap();
        let a = m.augment();
        assert_eq!(a.len(), 4);
        assert_eq!(a.poset().hasse(), vec![(0, 1), (1, 3), (2, 0)]);
        assert_eq!((a.x(), a.y()), (0, 1));
        let w = weird().augment();
        assert_eq!(w.len(), 8);
        assert_eq!(w.poset().label(6), "bottom");
        assert_eq!(w.poset().label(7), "top");
    }

    #[test]
    fn merge_xy_examples() {
        let anti = MarkedPoset::new(Poset::antichain(2), 0, 1).unwrap();
        assert_eq!(anti.merge_xy().poset.len(), 1);
        let chain = MarkedPoset::new(Poset::chain(2), 0, 1).unwrap();
        assert_eq!(chain.merge_xy().poset.len(), 1);

        let w = weird().merge_xy();
        assert_eq!(w.poset.len(), 5);
        // dense remap: z1=0, z2=1, (x,y)=2, z3=3, z4=4
        assert_eq!(w.class_of, vec![0, 1, 2, 2, 3, 4]);
        assert_eq!(w.merged, 2);
        assert_eq!(w.poset.hasse(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn merge_xy_collapses_the_interval() {
        // x < z < y: identifying only x and y would create a cycle
        let m = MarkedPoset::new(Poset::chain(3), 0, 2).unwrap();
        let q = m.merge_xy();
        assert_eq!(q.poset.len(), 1);
        assert_eq!(q.class_of, vec![0, 0, 0]);
    }

    #[test]
    fn induced_subposet() {
        let w = weird();
        let (sub, map) = w.poset().induced(set(&[0, 1, 4, 5]));
        assert_eq!(map, vec![0, 1, 4, 5]);
        assert_eq!(sub.hasse(), vec![(0, 1), (2, 3)]);
        assert_eq!(sub.label(2), "z3");
    }
}
