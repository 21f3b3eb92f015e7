//! Linear extensions: enumeration, counting, gap sequences, and the
//! constructive extensions used by the face-dimension arguments.
//!
//! Counting linear extensions is #P-hard in general; everything here is exact
//! and exponential, meant for the small posets the verification harness
//! sweeps over.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::{MarkedPoset, Poset};

/// A linear extension, stored both as the ordered element list and as the
/// rank map `f: P -> [1, n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearExtension{:?}", self.order)
    }
}

impl LinearExtension {
    /// Validates that `order` lists every element once and respects `p`.
    pub fn from_order(p: &Poset, order: Vec<usize>) -> Result<Self> {
        if !is_linear_order_of(p, p.elements(), &order) {
            return Err(Error::NotAnExtension(format!("{order:?}")));
        }
        Ok(Self::from_order_unchecked(order))
    }

    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> Self {
        let mut rank = vec![0; order.len()];
        for (i, &z) in order.iter().enumerate() {
            rank[z] = i + 1;
        }
        LinearExtension { order, rank }
    }

    /// Elements from smallest to largest.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `f(z)`, 1-based.
    pub fn rank(&self, z: usize) -> usize {
        self.rank[z]
    }

    /// `f^{-1}(r)` for 1-based `r`.
    pub fn at(&self, r: usize) -> usize {
        self.order[r - 1]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `f(y) - f(x)`, negative when `y` comes first.
    pub fn gap(&self, x: usize, y: usize) -> isize {
        self.rank[y] as isize - self.rank[x] as isize
    }

    pub fn is_extension_of(&self, p: &Poset) -> bool {
        is_linear_order_of(p, p.elements(), &self.order)
    }

    /// Elements strictly between ranks of `a` and `b`.
    pub fn strictly_between(&self, a: usize, b: usize) -> ElementSet {
        let (lo, hi) = (self.rank[a].min(self.rank[b]), self.rank[a].max(self.rank[b]));
        self.order[lo..hi - 1].iter().copied().collect()
    }
}

/// True when `order` is a permutation of `s` compatible with `p`.
pub fn is_linear_order_of(p: &Poset, s: ElementSet, order: &[usize]) -> bool {
    if order.len() != s.len() {
        return false;
    }
    let mut seen = ElementSet::EMPTY;
    for &z in order {
        if !s.contains(z) || seen.contains(z) {
            return false;
        }
        // everything of s below z must already be placed
        if !p.below(z).intersection(s).is_subset(seen) {
            return false;
        }
        seen.insert(z);
    }
    true
}

/// Lazy enumeration of all linear extensions in lexicographic order of the
/// element sequence.
pub struct Extensions<'a> {
    p: &'a Poset,
    order: Vec<usize>,
    placed: ElementSet,
    started: bool,
    done: bool,
}

/// Streams every linear extension of `p` exactly once.
pub fn enumerate_extensions(p: &Poset) -> Extensions<'_> {
    Extensions {
        p,
        order: Vec::with_capacity(p.len()),
        placed: ElementSet::EMPTY,
        started: false,
        done: false,
    }
}

impl Extensions<'_> {
    fn available(&self) -> ElementSet {
        let all = self.p.elements();
        all.difference(self.placed)
            .iter()
            .filter(|&z| self.p.below(z).is_subset(self.placed))
            .collect()
    }

    /// Extends the current prefix greedily with the smallest available element.
    fn descend(&mut self) {
        while self.order.len() < self.p.len() {
            let z = self
                .available()
                .first()
                .expect("a nonempty remainder of a poset has a minimal element");
            self.order.push(z);
            self.placed.insert(z);
        }
    }

    /// Advances to the lexicographically next prefix; false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(z) = self.order.pop() {
            self.placed.remove(z);
            let next = self
                .available()
                .iter()
                .find(|&c| c > z);
            if let Some(c) = next {
                self.order.push(c);
                self.placed.insert(c);
                return true;
            }
        }
        false
    }
}

impl Iterator for Extensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.backtrack() {
            self.done = true;
            return None;
        }
        self.descend();
        if self.p.is_empty() {
            // the empty poset has exactly one (empty) extension
            self.done = true;
        }
        Some(LinearExtension::from_order_unchecked(self.order.clone()))
    }
}

/// `e(P)` by dynamic programming over lower sets: the number of ways to
/// finish from a placed lower set is the sum over its minimal-element
/// continuations. Independent of the backtracking enumerator.
pub fn count_extensions(p: &Poset) -> BigUint {
    fn go(p: &Poset, placed: ElementSet, memo: &mut HashMap<ElementSet, BigUint>) -> BigUint {
        if placed.len() == p.len() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&placed) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for z in p.elements().difference(placed).iter() {
            if p.below(z).is_subset(placed) {
                total += go(p, placed.with(z), memo);
            }
        }
        memo.insert(placed, total.clone());
        total
    }
    go(p, ElementSet::EMPTY, &mut HashMap::new())
}

/// The counts `N_1, ..., N_{n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapSequence {
    counts: Vec<BigUint>,
}

impl GapSequence {
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        GapSequence { counts }
    }

    pub(crate) fn from_tally(tally: &[u64]) -> Self {
        GapSequence {
            counts: tally.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// `N_k` for `1 ≤ k ≤ n-1`; zero outside that range.
    pub fn get(&self, k: usize) -> BigUint {
        if k == 0 {
            return BigUint::zero();
        }
        self.counts.get(k - 1).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Largest index `n - 1`.
    pub fn max_index(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Indices `2 ≤ k ≤ n-2` where `N_k² < N_{k-1} N_{k+1}`.
    pub fn log_concavity_violations(&self) -> Vec<usize> {
        (2..self.counts.len())
            .filter(|&k| {
                let nk = self.get(k);
                &nk * &nk < self.get(k - 1) * self.get(k + 1)
            })
            .collect()
    }
}

impl fmt::Debug for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `N_k = #{f : f(y) - f(x) = k}` for `k = 1..n-1`. Extensions placing `y`
/// before `x` are not counted anywhere.
pub fn gap_sequence(m: &MarkedPoset) -> GapSequence {
    let n = m.len();
    // a u64 tally cannot overflow: it is bumped once per enumerated extension
    let mut tally = vec![0u64; n.saturating_sub(1)];
    for f in enumerate_extensions(m.poset()) {
        let g = f.gap(m.x(), m.y());
        if g > 0 {
            tally[g as usize - 1] += 1;
        }
    }
    GapSequence::from_tally(&tally)
}

/// All extensions of one poset held in memory, for sweeps that query the same
/// poset under many marked pairs.
pub struct ExtensionTable {
    n: usize,
    ranks: Vec<u8>,
    orders: Vec<u8>,
}

impl ExtensionTable {
    pub fn new(p: &Poset) -> Self {
        let n = p.len();
        let mut ranks = Vec::new();
        let mut orders = Vec::new();
        for f in enumerate_extensions(p) {
            ranks.extend((0..n).map(|z| f.rank(z) as u8));
            orders.extend(f.order().iter().map(|&z| z as u8));
        }
        ExtensionTable { n, ranks, orders }
    }

    pub fn len(&self) -> usize {
        self.ranks.len().checked_div(self.n).unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based rank of `z` in extension `i`.
    pub fn rank(&self, i: usize, z: usize) -> usize {
        self.ranks[i * self.n + z] as usize
    }

    /// Element at 1-based rank `r` in extension `i`.
    pub fn at(&self, i: usize, r: usize) -> usize {
        self.orders[i * self.n + r - 1] as usize
    }

    pub fn extension(&self, i: usize) -> LinearExtension {
        let order = self.orders[i * self.n..(i + 1) * self.n]
            .iter()
            .map(|&z| z as usize)
            .collect();
        LinearExtension::from_order_unchecked(order)
    }

    pub fn gap(&self, i: usize, x: usize, y: usize) -> isize {
        self.rank(i, y) as isize - self.rank(i, x) as isize
    }

    pub fn gap_sequence(&self, x: usize, y: usize) -> GapSequence {
        let mut tally = vec![0u64; self.n.saturating_sub(1)];
        for i in 0..self.len() {
            let g = self.gap(i, x, y);
            if g > 0 {
                tally[g as usize - 1] += 1;
            }
        }
        GapSequence::from_tally(&tally)
    }
}

/// Lexicographically first linear extension of the subposet induced on `s`,
/// as an ordered list of original ids.
pub(crate) fn first_order_of(p: &Poset, s: ElementSet) -> Vec<usize> {
    let mut placed = ElementSet::EMPTY;
    let mut out = Vec::with_capacity(s.len());
    while placed != s {
        let z = s
            .difference(placed)
            .iter()
            .find(|&z| p.below(z).intersection(s).is_subset(placed))
            .expect("finite subposet has a minimal element");
        out.push(z);
        placed.insert(z);
    }
    out
}

/// Every linear extension of the subposet induced on `s`, as ordered lists of
/// original ids.
pub fn subset_orders(p: &Poset, s: ElementSet) -> Vec<Vec<usize>> {
    let (sub, map) = p.induced(s);
    enumerate_extensions(&sub)
        .map(|f| f.order().iter().map(|&i| map[i]).collect())
        .collect()
}

/// An extension in which exactly `P_{x<·<y}` sits between `x` and `y`.
pub fn minimal_gap_extension(m: &MarkedPoset) -> LinearExtension {
    let p = m.poset();
    let (x, y) = (m.x(), m.y());
    let interval = m.between();
    let head = p
        .elements()
        .difference(p.at_least(x))
        .difference(p.at_least(y));
    let tail = p
        .elements()
        .difference(head)
        .difference(interval)
        .without(x)
        .without(y);
    let mut order = first_order_of(p, head);
    order.push(x);
    order.extend(first_order_of(p, interval));
    order.push(y);
    order.extend(first_order_of(p, tail));
    LinearExtension::from_order_unchecked(order)
}

/// An extension whose first `|S|` elements are `S` and last `|T|` are `T`.
pub fn boundary_extension(p: &Poset, s: ElementSet, t: ElementSet) -> Result<LinearExtension> {
    if !s.is_disjoint(t) {
        return Err(Error::Overlap);
    }
    if !p.is_lower_set(s) {
        return Err(Error::NotLowerSet);
    }
    if !p.is_upper_set(t) {
        return Err(Error::NotUpperSet);
    }
    let middle = p.elements().difference(s).difference(t);
    let mut order = first_order_of(p, s);
    order.extend(first_order_of(p, middle));
    order.extend(first_order_of(p, t));
    Ok(LinearExtension::from_order_unchecked(order))
}

/// Modifies `f` only between `z1` and `z2` so that `z2` directly follows `z1`.
pub fn adjacent_pair_extension(
    p: &Poset,
    f: &LinearExtension,
    z1: usize,
    z2: usize,
) -> Result<LinearExtension> {
    if !p.covers(z1, z2) {
        return Err(Error::NotCoverPair(z1, z2));
    }
    let (r1, r2) = (f.rank(z1), f.rank(z2));
    let window = &f.order()[r1..r2 - 1];
    // Nothing strictly between z1 and z2 can be comparable to both, so the
    // window splits into elements not above z1 (kept before the pair) and
    // elements above z1 (moved after it).
    let (after, before): (Vec<usize>, Vec<usize>) =
        window.iter().copied().partition(|&w| p.lt(z1, w));
    let mut order = f.order()[..r1 - 1].to_vec();
    order.extend(before);
    order.push(z1);
    order.push(z2);
    order.extend(after);
    order.extend_from_slice(&f.order()[r2..]);
    Ok(LinearExtension::from_order_unchecked(order))
}

fn check_doubling_partition(m: &MarkedPoset) -> Result<()> {
    if !m.par_x_par_y().is_empty() || !m.between().is_empty() {
        return Err(Error::PartitionViolated);
    }
    Ok(())
}

/// Inverse of [`doubling_decompose`]: rebuilds the linear order of `P` with
/// `f(y) - f(x) = ℓ = |omega| + 1` from an order of `P_-`, an order of `P_+`
/// and the fill pattern between `x` and `y` (`false` = an element of `P_-`,
/// `true` = an element of `P_+`).
///
/// With `j` ones in `omega`, the filled slots take the `ℓ-1-j` largest
/// elements of `f_minus` and the `j` smallest of `f_plus`, each in its own
/// order. Fails with [`Error::NotAnExtension`] when the result breaks a
/// relation, which happens only when the doubling structure is absent.
pub fn doubling_reconstruct(
    m: &MarkedPoset,
    f_minus: &[usize],
    f_plus: &[usize],
    omega: &[bool],
) -> Result<LinearExtension> {
    check_doubling_partition(m)?;
    let p = m.poset();
    let (lower, upper) = (m.lower_part(), m.upper_part());
    if !is_linear_order_of(p, lower, f_minus) {
        return Err(Error::NotAnExtension(format!(
            "{f_minus:?} is not a linear extension of P_-"
        )));
    }
    if !is_linear_order_of(p, upper, f_plus) {
        return Err(Error::NotAnExtension(format!(
            "{f_plus:?} is not a linear extension of P_+"
        )));
    }
    let ones = omega.iter().filter(|&&b| b).count();
    let zeros = omega.len() - ones;
    if zeros > f_minus.len() || ones > f_plus.len() {
        return Err(Error::BadParameters(format!(
            "fill pattern needs {zeros} elements of P_- and {ones} of P_+"
        )));
    }
    let split = f_minus.len() - zeros;
    let mut from_minus = f_minus[split..].iter();
    let mut from_plus = f_plus[..ones].iter();
    let mut order = f_minus[..split].to_vec();
    order.push(m.x());
    for &bit in omega {
        let next = if bit {
            from_plus.next()
        } else {
            from_minus.next()
        };
        order.push(*next.expect("counts checked above"));
    }
    order.push(m.y());
    order.extend_from_slice(&f_plus[ones..]);
    if !is_linear_order_of(p, p.elements(), &order) {
        return Err(Error::NotAnExtension(format!(
            "reconstructed order {order:?} breaks a relation"
        )));
    }
    Ok(LinearExtension::from_order_unchecked(order))
}

/// The map `f ↦ (f|P_-, f|P_+, ω)` for an extension with `f(y) > f(x)`.
pub fn doubling_decompose(
    m: &MarkedPoset,
    f: &LinearExtension,
) -> Result<(Vec<usize>, Vec<usize>, Vec<bool>)> {
    check_doubling_partition(m)?;
    let (lower, upper) = (m.lower_part(), m.upper_part());
    if f.rank(m.y()) <= f.rank(m.x()) {
        return Err(Error::BadParameters("y does not follow x".into()));
    }
    let f_minus = f.order().iter().copied().filter(|&z| lower.contains(z)).collect();
    let f_plus = f.order().iter().copied().filter(|&z| upper.contains(z)).collect();
    let omega = f.order()[f.rank(m.x())..f.rank(m.y()) - 1]
        .iter()
        .map(|&z| upper.contains(z))
        .collect();
    Ok((f_minus, f_plus, omega))
}
