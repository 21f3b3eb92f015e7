//! Per-index equality classification, sequence shape, theorem
//! cross-validation, and the example families.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::conditions::{
    condition_profile, doubling_structure_unchecked, flat_witness_in, vanishing, ConditionProfile,
};
use crate::error::{Error, Result};
use crate::linext::{gap_sequence, ExtensionTable, GapSequence};
use crate::poset::{MarkedPoset, Poset};

fn big_str<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KTag {
    Zero,
    Strict,
    Flat,
    Doubling,
    /// `N_k² = N_{k-1} N_{k+1} > 0` with neither ratio 1 nor 1/2. The
    /// characterization of equality says this never happens; the tag exists
    /// so that a counterexample is reported rather than mislabelled.
    Anomalous,
}

/// Classification of one index together with its three-term window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KClass {
    pub k: usize,
    pub tag: KTag,
    #[serde(serialize_with = "big_str")]
    pub prev: BigUint,
    #[serde(serialize_with = "big_str")]
    pub cur: BigUint,
    #[serde(serialize_with = "big_str")]
    pub next: BigUint,
}

impl KClass {
    pub fn is_equality(&self) -> bool {
        matches!(self.tag, KTag::Flat | KTag::Doubling | KTag::Anomalous)
    }
}

/// Classifies `k` in an already computed sequence.
pub fn classify_in(seq: &GapSequence, k: usize) -> Result<KClass> {
    let hi = seq.max_index().saturating_sub(1);
    if k < 2 || k > hi {
        return Err(Error::IndexOutOfRange { k, lo: 2, hi });
    }
    let (prev, cur, next) = (seq.get(k - 1), seq.get(k), seq.get(k + 1));
    let sq = &cur * &cur;
    let pn = &prev * &next;
    if sq < pn {
        return Err(Error::InequalityViolated {
            k,
            detail: format!("N_k² = {sq} < N_(k-1) N_(k+1) = {pn}"),
        });
    }
    let tag = if cur.is_zero() {
        KTag::Zero
    } else if sq > pn {
        KTag::Strict
    } else if prev == cur && cur == next {
        KTag::Flat
    } else if next == &cur * 2u32 && cur == &prev * 2u32 {
        KTag::Doubling
    } else {
        KTag::Anomalous
    };
    Ok(KClass {
        k,
        tag,
        prev,
        cur,
        next,
    })
}

/// Classifies `N_k` for `2 ≤ k ≤ n - 2`.
pub fn classify_k(m: &MarkedPoset, k: usize) -> Result<KClass> {
    let hi = m.len().saturating_sub(2);
    if k < 2 || k > hi {
        return Err(Error::IndexOutOfRange { k, lo: 2, hi });
    }
    classify_in(&gap_sequence(m), k)
}

/// An inclusive range of term indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
}

impl Segment {
    fn make(start: usize, end: usize) -> Option<Segment> {
        (start <= end).then_some(Segment { start, end })
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.start <= i && i <= self.end
    }
}

/// The five-part shape of a gap sequence: leading zeros or doubling prefix,
/// rising part, flat plateau, falling part, trailing zeros. Segments are
/// ranges of term indices partitioning `[1, n-1]` in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub segments: [Option<Segment>; 5],
    pub doubling_ks: Vec<usize>,
    pub flat_ks: Vec<usize>,
    pub zero_ks: Vec<usize>,
    /// Structural expectations that failed; empty on every correct input.
    pub violations: Vec<String>,
}

impl ShapeReport {
    /// Which segment (1-based) holds term `i`.
    pub fn segment_of(&self, i: usize) -> Option<usize> {
        self.segments
            .iter()
            .position(|s| s.is_some_and(|s| s.contains(i)))
            .map(|j| j + 1)
    }
}

/// Builds the shape report of a sequence of length `n - 1`.
pub fn shape_of(seq: &GapSequence) -> ShapeReport {
    let last = seq.max_index();
    let mut violations = Vec::new();
    let mut doubling_ks = Vec::new();
    let mut flat_ks = Vec::new();
    for k in 2..last {
        match classify_in(seq, k) {
            Ok(c) => match c.tag {
                KTag::Flat => flat_ks.push(k),
                KTag::Doubling => doubling_ks.push(k),
                KTag::Anomalous => violations.push(format!("k = {k}: equality with ratio not 1 or 1/2")),
                _ => {}
            },
            Err(e) => violations.push(e.to_string()),
        }
    }
    let zero_ks: Vec<usize> = (1..=last).filter(|&i| seq.get(i).is_zero()).collect();
    let nonzero: Vec<usize> = (1..=last).filter(|&i| !seq.get(i).is_zero()).collect();
    let mut segments = [None; 5];
    let (lo, hi) = match (nonzero.first(), nonzero.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => {
            violations.push("sequence is identically zero".into());
            segments[0] = Segment::make(1, last);
            return ShapeReport {
                segments,
                doubling_ks,
                flat_ks,
                zero_ks,
                violations,
            };
        }
    };
    if nonzero.len() != hi - lo + 1 {
        violations.push("zeros occur inside the support".into());
    }
    let contiguous = |ks: &[usize]| ks.windows(2).all(|w| w[1] == w[0] + 1);
    if !contiguous(&doubling_ks) || doubling_ks.first().is_some_and(|&k| k != 2) {
        violations.push(format!("doubling indices {doubling_ks:?} are not an initial run from 2"));
    }
    if !contiguous(&flat_ks) {
        violations.push(format!("flat indices {flat_ks:?} form more than one plateau"));
    }

    let i1_end = match doubling_ks.last() {
        Some(&d) => d + 1,
        None => lo - 1,
    };
    segments[0] = Segment::make(1, i1_end);
    segments[4] = Segment::make(hi + 1, last);
    let rise_start = i1_end + 1;
    let (rise_end, fall_start) = match (flat_ks.first(), flat_ks.last()) {
        (Some(&a), Some(&b)) => {
            let start = (a - 1).max(rise_start);
            segments[2] = Segment::make(start, b + 1);
            (start - 1, b + 2)
        }
        _ => {
            // first maximum closes the rising part
            let peak = (rise_start..=hi).fold(None::<usize>, |best, i| match best {
                Some(b) if seq.get(b) >= seq.get(i) => Some(b),
                _ => Some(i),
            });
            match peak {
                Some(p) => (p, p + 1),
                None => (rise_start - 1, rise_start),
            }
        }
    };
    segments[1] = Segment::make(rise_start, rise_end);
    segments[3] = Segment::make(fall_start, hi);
    if let Some(s) = segments[1] {
        if (s.start..s.end).any(|i| seq.get(i) > seq.get(i + 1)) {
            violations.push("rising segment decreases".into());
        }
    }
    if let Some(s) = segments[3] {
        if (s.start..s.end).any(|i| seq.get(i) < seq.get(i + 1)) {
            violations.push("falling segment increases".into());
        }
        if let Some(r) = segments[2].or(segments[1]) {
            if seq.get(r.end) < seq.get(s.start) {
                violations.push("sequence rises after its peak".into());
            }
        }
    }
    ShapeReport {
        segments,
        doubling_ks,
        flat_ks,
        zero_ks,
        violations,
    }
}

/// Shape report of the gap sequence of `m`.
pub fn shape_report(m: &MarkedPoset) -> ShapeReport {
    shape_of(&gap_sequence(m))
}

/// Everything known about one interior index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KRecord {
    pub class: KClass,
    pub profile: ConditionProfile,
    /// Element id of the flat witness, if any.
    pub flat_witness: Option<usize>,
    pub doubling_structure: bool,
}

/// A direction of a theorem that failed at a specific index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremFailure {
    pub k: usize,
    pub statement: String,
    pub detail: String,
}

/// Cross-validation of every characterization on one marked poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub sequence: Vec<String>,
    pub records: Vec<KRecord>,
    pub failures: Vec<TheoremFailure>,
}

impl TheoremReport {
    pub fn confirmed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&self, k: usize) -> Option<&KRecord> {
        self.records.iter().find(|r| r.class.k == k)
    }
}

/// Statement names used in [`TheoremFailure::statement`].
pub mod statement {
    pub const VANISH: &str = "vanishing";
    pub const KAHN_SAKS: &str = "kahn-saks";
    pub const EQUALITY: &str = "equality-is-flat-or-doubling";
    pub const FLAT_A_B: &str = "flat(a)=>(b)";
    pub const FLAT_B_A: &str = "flat(b)=>(a)";
    pub const FLAT_A_C: &str = "flat(a)=>(c)";
    pub const FLAT_C_A: &str = "flat(c)=>(a)";
    pub const DOUBLE_A_B: &str = "doubling(a)=>(b)";
    pub const DOUBLE_B_A: &str = "doubling(b)=>(a)";
    pub const DOUBLE_A_C: &str = "doubling(a)=>(c)";
    pub const DOUBLE_C_A: &str = "doubling(c)=>(a)";
    pub const MUTEX: &str = "mutual-exclusion";
}

/// Runs every characterization on `m`.
pub fn verify_theorems(m: &MarkedPoset) -> TheoremReport {
    verify_theorems_with(m, &ExtensionTable::new(m.poset()))
}

/// [`verify_theorems`] with a precomputed extension table of `m.poset()`.
pub fn verify_theorems_with(m: &MarkedPoset, table: &ExtensionTable) -> TheoremReport {
    let seq = table.gap_sequence(m.x(), m.y());
    let n = m.len();
    let mut failures = Vec::new();
    let mut fail = |k: usize, statement: &str, detail: String| {
        failures.push(TheoremFailure {
            k,
            statement: statement.to_string(),
            detail,
        })
    };
    for k in 1..n {
        let predicted = vanishing(m, k).expect("k in range");
        let actual = seq.get(k).is_zero();
        if predicted != actual {
            fail(
                k,
                statement::VANISH,
                format!("criterion says {predicted}, N_k = {}", seq.get(k)),
            );
        }
    }
    let mut records = Vec::new();
    for k in 2..n.saturating_sub(1) {
        let class = match classify_in(&seq, k) {
            Ok(c) => c,
            Err(e) => {
                fail(k, statement::KAHN_SAKS, e.to_string());
                continue;
            }
        };
        let profile = condition_profile(m, k).expect("k in range");
        let witness = flat_witness_in(table, m, k);
        let structure = doubling_structure_unchecked(m, k);
        if profile.m && profile.e_star {
            fail(k, statement::MUTEX, "M and E* both hold".into());
        }
        if profile.m_star && profile.e {
            fail(k, statement::MUTEX, "M* and E both hold".into());
        }
        if class.tag != KTag::Zero {
            if class.tag == KTag::Anomalous {
                fail(
                    k,
                    statement::EQUALITY,
                    format!("({}, {}, {})", class.prev, class.cur, class.next),
                );
            }
            let flat = class.tag == KTag::Flat;
            let double = class.tag == KTag::Doubling;
            let checks = [
                (flat && witness.is_none(), statement::FLAT_A_B),
                (!flat && witness.is_some(), statement::FLAT_B_A),
                (flat && !profile.flat_condition(), statement::FLAT_A_C),
                (!flat && profile.flat_condition(), statement::FLAT_C_A),
                (double && !structure, statement::DOUBLE_A_B),
                (!double && structure, statement::DOUBLE_B_A),
                (double && !profile.doubling_condition(), statement::DOUBLE_A_C),
                (!double && profile.doubling_condition(), statement::DOUBLE_C_A),
            ];
            for (bad, name) in checks {
                if bad {
                    fail(
                        k,
                        name,
                        format!(
                            "tag {:?}, N = ({}, {}, {}), profile {profile:?}",
                            class.tag, class.prev, class.cur, class.next
                        ),
                    );
                }
            }
        }
        records.push(KRecord {
            class,
            profile,
            flat_witness: witness,
            doubling_structure: structure,
        });
    }
    TheoremReport {
        sequence: seq.counts().iter().map(|c| c.to_string()).collect(),
        records,
        failures,
    }
}

/// The family `x ⋖ z_1 ⋖ ⋯ ⋖ z_r`, `w_1 ⋖ ⋯ ⋖ w_s`, `w_u ⋖ z_v`,
/// `w_u ⋖ y ⋖ z_t`, with `v < t ≤ r`, `u ≤ s` and all parameters positive.
///
/// Ids: `x = 0`, `z_i = i`, `w_j = r + j`, `y = r + s + 1`.
pub fn gen_doublefull(r: usize, s: usize, t: usize, u: usize, v: usize) -> Result<MarkedPoset> {
    if [r, s, t, u, v].contains(&0) {
        return Err(Error::BadParameters("all parameters must be at least 1".into()));
    }
    if !(v < t && t <= r) {
        return Err(Error::BadParameters(format!(
            "need v < t <= r, got v = {v}, t = {t}, r = {r}"
        )));
    }
    if u > s {
        return Err(Error::BadParameters(format!("need u <= s, got u = {u}, s = {s}")));
    }
    let n = r + s + 2;
    if n > crate::bitset::MAX_ELEMENTS {
        return Err(Error::TooLarge {
            n,
            max: crate::bitset::MAX_ELEMENTS,
        });
    }
    let (x, y) = (0, r + s + 1);
    let z = |i: usize| i;
    let w = |j: usize| r + j;
    let mut covers = vec![(x, z(1))];
    covers.extend((1..r).map(|i| (z(i), z(i + 1))));
    covers.extend((1..s).map(|j| (w(j), w(j + 1))));
    covers.push((w(u), z(v)));
    covers.push((w(u), y));
    covers.push((y, z(t)));
    let mut labels = vec!["x".to_string()];
    labels.extend((1..=r).map(|i| format!("z{i}")));
    labels.extend((1..=s).map(|j| format!("w{j}")));
    labels.push("y".into());
    let p = Poset::from_cover_relations(n, &covers, Some(labels))?;
    let m = MarkedPoset::new(p, x, y)?;
    if !m.between().is_empty() {
        return Err(Error::BadParameters("generated poset has P_{x<·<y} nonempty".into()));
    }
    Ok(m)
}

/// The six-element poset `z_1 ⋖ z_2 ⋖ y`, `x ⋖ z_3 ⋖ z_4`.
///
/// Ids: `z1 = 0`, `z2 = 1`, `y = 2`, `x = 3`, `z3 = 4`, `z4 = 5`.
pub fn gen_weird() -> MarkedPoset {
    let labels = ["z1", "z2", "y", "x", "z3", "z4"].map(String::from).to_vec();
    let p = Poset::from_cover_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)], Some(labels))
        .expect("fixed covers are acyclic");
    MarkedPoset::new(p, 3, 2).expect("x and y are incomparable")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> GapSequence {
        GapSequence::from_counts(v.iter().map(|&c| BigUint::from(c)).collect())
    }

    #[test]
    fn weird_classes() {
        let m = gen_weird();
        assert_eq!(classify_k(&m, 2).unwrap().tag, KTag::Doubling);
        assert_eq!(classify_k(&m, 3).unwrap().tag, KTag::Strict);
        assert_eq!(classify_k(&m, 4).unwrap().tag, KTag::Strict);
        assert!(classify_k(&m, 5).is_err());
        assert!(classify_k(&m, 1).is_err());
    }

    #[test]
    fn violated_inequality_reported() {
        assert!(matches!(
            classify_in(&seq(&[1, 1, 2, 1]), 2),
            Err(Error::InequalityViolated { k: 2, .. })
        ));
        assert_eq!(classify_in(&seq(&[2, 4, 8, 1]), 2).unwrap().tag, KTag::Doubling);
        assert_eq!(classify_in(&seq(&[1, 3, 9, 1]), 2).unwrap().tag, KTag::Anomalous);
    }

    #[test]
    fn weird_shape() {
        let s = shape_report(&gen_weird());
        assert_eq!(s.doubling_ks, vec![2]);
        assert!(s.flat_ks.is_empty());
        assert!(s.violations.is_empty());
        assert_eq!(s.segments[0], Some(Segment { start: 1, end: 3 }));
        assert_eq!(s.segments[4], None);
        assert_eq!(s.segment_of(5).map(|j| j == 2 || j == 4), Some(true));
    }

    #[test]
    fn shape_partitions() {
        let s = shape_of(&seq(&[0, 1, 3, 4, 4, 4, 2, 0]));
        assert!(s.violations.is_empty(), "{:?}", s.violations);
        assert_eq!(s.flat_ks, vec![5]);
        let owner: Vec<usize> = (1..=8).map(|i| s.segment_of(i).unwrap()).collect();
        assert_eq!(owner, vec![1, 2, 2, 3, 3, 3, 4, 5]);
    }

    #[test]
    fn chain_shape() {
        let m = MarkedPoset::new(Poset::chain(4), 1, 2).unwrap();
        let s = shape_report(&m);
        assert_eq!(s.zero_ks, vec![2, 3]);
        assert!(s.violations.is_empty());
    }

    #[test]
    fn weird_theorems() {
        let r = verify_theorems(&gen_weird());
        assert!(r.confirmed(), "{:?}", r.failures);
        let k2 = r.record(2).unwrap();
        assert!(k2.doubling_structure && k2.profile.doubling_condition());
        assert_eq!(k2.class.tag, KTag::Doubling);
    }

    #[test]
    fn doublefull_small() {
        let m = gen_doublefull(2, 1, 2, 1, 1).unwrap();
        assert_eq!(m.len(), 5);
        let g = gap_sequence(&m);
        assert!((1..=3).all(|k| !g.get(k).is_zero()));
        assert!(verify_theorems(&m).confirmed());
        assert!(gen_doublefull(2, 1, 3, 1, 1).is_err());
        assert!(gen_doublefull(2, 1, 2, 2, 1).is_err());
        assert!(gen_doublefull(2, 1, 2, 1, 2).is_err());
    }

    #[test]
    fn weird_generator_matches_fixture() {
        assert_eq!(gen_weird(), crate::poset::tests::weird());
    }
}
