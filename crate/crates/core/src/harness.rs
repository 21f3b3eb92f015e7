//! Exhaustive generation of small posets and sweep verification.
//!
//! A sweep visits every labeled poset on `n` elements (optionally one per
//! isomorphism class), every marked pair `(x, y)` with `x ≱ y`, and runs a set
//! of named checks. Results are merged in generation order, so tallies and
//! counterexample lists do not depend on the number of worker threads.

use std::cell::OnceCell;
use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::classify::{shape_of, statement, verify_theorems_with, KTag, TheoremReport};
use crate::conditions::{cond_c, cond_e, cond_e_star};
use crate::error::{Error, Result};
use crate::format::render;
use crate::geometry::{
    body_dimensions, check_witness_rules, expected_dimensions, predicted_k_extreme,
    solve_witness, support_lemma_failures, Bodies,
};
use crate::linext::{
    adjacent_pair_extension, boundary_extension, count_extensions, doubling_reconstruct,
    is_linear_order_of, minimal_gap_extension, subset_orders, ExtensionTable, GapSequence,
};
use crate::poset::{MarkedPoset, Poset};

/// Largest `n` a sweep accepts.
pub const MAX_SWEEP_N: usize = 8;

/// Every labeled poset on `n ≤ 8` elements exactly once.
///
/// Posets on `n` elements are grown from posets on `n - 1` by adding element
/// `n - 1` with a lower set `D` below it and an upper set `U` above it, where
/// every element of `D` is already below every element of `U`. Restricting
/// to the first `n - 1` elements inverts this, so nothing repeats.
pub fn generate_posets(n: usize) -> Box<dyn Iterator<Item = Poset>> {
    if n == 0 {
        return Box::new(std::iter::once(Poset::antichain(0)));
    }
    Box::new(generate_posets(n - 1).flat_map(|p| children(&p)))
}

fn children(p: &Poset) -> Vec<Poset> {
    let n = p.len();
    let ups = crate::geometry::upper_sets(p);
    let all = p.elements();
    let mut out = Vec::new();
    for &lower_complement in &ups {
        let d = all.difference(lower_complement);
        for &u in &ups {
            if !u.is_disjoint(d) || !d.iter().all(|z| u.is_subset(p.above(z))) {
                continue;
            }
            let mut above: Vec<ElementSet> = p.above_rows().to_vec();
            for z in d.iter() {
                above[z].insert(n);
            }
            above.push(u);
            out.push(Poset::from_closed_rows(above, None));
        }
    }
    out
}

/// Smallest adjacency bit string over all relabelings. Two posets get the
/// same key exactly when they are isomorphic.
pub fn canonical_key(p: &Poset) -> u64 {
    let n = p.len();
    assert!(n <= MAX_SWEEP_N, "canonical keys support n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let key = |perm: &[usize]| {
        let mut k = 0u64;
        for a in 0..n {
            for b in 0..n {
                if p.lt(perm[a], perm[b]) {
                    k |= 1 << (a * n + b);
                }
            }
        }
        k
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    best = best.min(key(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(key(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Posets of size `n`, optionally one per isomorphism class (the first in
/// generation order).
pub fn poset_list(n: usize, dedup: bool) -> Vec<Poset> {
    let all: Vec<Poset> = generate_posets(n).collect();
    if !dedup {
        return all;
    }
    let keys = map_maybe_parallel(&all, canonical_key);
    let mut seen = HashSet::new();
    all.into_iter()
        .zip(keys)
        .filter_map(|(p, k)| seen.insert(k).then_some(p))
        .collect()
}

/// All ordered pairs `(x, y)` with `x ≠ y` and `x ≱ y`.
pub fn marked_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && !p.lt(y, x) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Shared data for the checks on one poset.
pub struct PosetContext<'a> {
    pub poset: &'a Poset,
    pub table: &'a ExtensionTable,
}

/// Shared data for the checks on one marked pair. Expensive pieces are
/// computed on first use.
pub struct MarkedContext<'a> {
    pub m: MarkedPoset,
    pub table: &'a ExtensionTable,
    pub seq: GapSequence,
    theorems: OnceCell<TheoremReport>,
    bodies: OnceCell<Bodies>,
}

impl<'a> MarkedContext<'a> {
    pub fn new(m: MarkedPoset, table: &'a ExtensionTable) -> Self {
        let seq = table.gap_sequence(m.x(), m.y());
        MarkedContext {
            m,
            table,
            seq,
            theorems: OnceCell::new(),
            bodies: OnceCell::new(),
        }
    }

    pub fn theorems(&self) -> &TheoremReport {
        self.theorems
            .get_or_init(|| verify_theorems_with(&self.m, self.table))
    }

    pub fn bodies(&self) -> &Bodies {
        self.bodies.get_or_init(|| Bodies::new(&self.m))
    }

    /// Interior indices with their classification tags.
    pub fn tags(&self) -> Vec<(usize, KTag)> {
        self.theorems()
            .records
            .iter()
            .map(|r| (r.class.k, r.class.tag))
            .collect()
    }
}

/// What one check found on one input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub failures: Vec<String>,
    /// Named counters for things worth tallying that are not failures.
    pub observations: Vec<&'static str>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome::default()
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome {
            failures: vec![detail.into()],
            observations: Vec::new(),
        }
    }

    fn from_failures(failures: Vec<String>) -> Self {
        Outcome {
            failures,
            observations: Vec::new(),
        }
    }
}

/// A named verification run on every poset and/or every marked pair.
pub trait Check: Sync {
    fn name(&self) -> &str;

    /// Runs once per poset; `None` when the check has no per-poset part.
    fn run_poset(&self, _ctx: &PosetContext) -> Option<Outcome> {
        None
    }

    /// Runs once per marked pair; `None` when the check has no per-pair part.
    fn run_marked(&self, _ctx: &MarkedContext) -> Option<Outcome> {
        None
    }
}

/// A check reporting the theorem failures whose statement is in `statements`.
struct TheoremCheck {
    name: &'static str,
    statements: &'static [&'static str],
}

impl Check for TheoremCheck {
    fn name(&self) -> &str {
        self.name
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let failures = ctx
            .theorems()
            .failures
            .iter()
            .filter(|f| self.statements.contains(&f.statement.as_str()))
            .map(|f| format!("k = {}: {}: {}", f.k, f.statement, f.detail))
            .collect();
        Some(Outcome::from_failures(failures))
    }
}

const THEOREM_CHECKS: [TheoremCheck; 6] = [
    TheoremCheck {
        name: "kahn-saks",
        statements: &[statement::KAHN_SAKS],
    },
    TheoremCheck {
        name: "vanishing",
        statements: &[statement::VANISH],
    },
    TheoremCheck {
        name: "equality",
        statements: &[statement::EQUALITY],
    },
    TheoremCheck {
        name: "flat",
        statements: &[
            statement::FLAT_A_B,
            statement::FLAT_B_A,
            statement::FLAT_A_C,
            statement::FLAT_C_A,
        ],
    },
    TheoremCheck {
        name: "doubling",
        statements: &[
            statement::DOUBLE_A_B,
            statement::DOUBLE_B_A,
            statement::DOUBLE_A_C,
            statement::DOUBLE_C_A,
        ],
    },
    TheoremCheck {
        name: "mutex",
        statements: &[statement::MUTEX],
    },
];

/// Enumerator against the lower-set counter, and validity of each extension.
struct CountCheck;

impl Check for CountCheck {
    fn name(&self) -> &str {
        "count"
    }

    fn run_poset(&self, ctx: &PosetContext) -> Option<Outcome> {
        let p = ctx.poset;
        let mut failures = Vec::new();
        let dp = count_extensions(p);
        if dp != BigUint::from(ctx.table.len()) {
            failures.push(format!("enumerated {} extensions, counted {dp}", ctx.table.len()));
        }
        for i in 0..ctx.table.len() {
            let f = ctx.table.extension(i);
            if !f.is_extension_of(p) {
                failures.push(format!("{f:?} is not an extension"));
            }
        }
        Some(Outcome::from_failures(failures))
    }
}

/// Gap sequence invariance under duality and augmentation, the dual
/// doubling observation, and monotonicity of `E`, `E*`, `C` in `k`.
struct StructureCheck;

impl Check for StructureCheck {
    fn name(&self) -> &str {
        "structure"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let m = &ctx.m;
        let n = m.len();
        let mut failures = Vec::new();
        let dual = m.dual_swapped();
        let dual_seq = ExtensionTable::new(dual.poset()).gap_sequence(dual.x(), dual.y());
        if dual_seq != ctx.seq {
            failures.push(format!("dual with swapped marks has {dual_seq}, not {}", ctx.seq));
        }
        if m.poset().incomparable(m.x(), m.y()) {
            let other = ctx.table.gap_sequence(m.y(), m.x());
            let has_doubling = |s: &GapSequence| !shape_of(s).doubling_ks.is_empty();
            if has_doubling(&ctx.seq) && has_doubling(&other) {
                failures.push("both the sequence and its reverse contain a doubling".into());
            }
            let total = ctx.seq.total() + other.total();
            if total != BigUint::from(ctx.table.len()) {
                failures.push("gap counts in both directions do not sum to e(P)".into());
            }
        } else if ctx.seq.total() != BigUint::from(ctx.table.len()) {
            failures.push("gap counts do not sum to e(P)".into());
        }
        for k in 3..n.saturating_sub(1) {
            for l in 2..k {
                if cond_e(m, k) && !cond_e(m, l) {
                    failures.push(format!("E holds at {k} but not at {l}"));
                }
                if cond_e_star(m, k) && !cond_e_star(m, l) {
                    failures.push(format!("E* holds at {k} but not at {l}"));
                }
                if cond_c(m, k) && !cond_c(m, l) {
                    failures.push(format!("C holds at {k} but not at {l}"));
                }
            }
        }
        Some(Outcome::from_failures(failures))
    }
}

/// Augmenting by a global bottom and top changes nothing.
struct AugmentCheck;

impl Check for AugmentCheck {
    fn name(&self) -> &str {
        "augment"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let aug = ctx.m.augment();
        let table = ExtensionTable::new(aug.poset());
        let seq = table.gap_sequence(aug.x(), aug.y());
        let mut failures = Vec::new();
        // the augmented sequence has two extra (zero) terms
        let pad: Vec<BigUint> = (1..aug.len()).map(|k| ctx.seq.get(k)).collect();
        if seq.counts() != &pad[..] {
            failures.push(format!("augmented sequence {seq} differs from {}", ctx.seq));
        }
        let report = verify_theorems_with(&aug, &table);
        for f in &report.failures {
            failures.push(format!("augmented: k = {}: {}", f.k, f.statement));
        }
        for (k, tag) in ctx.tags() {
            if report.record(k).map(|r| r.class.tag) != Some(tag) {
                failures.push(format!("k = {k}: tag changes under augmentation"));
            }
        }
        Some(Outcome::from_failures(failures))
    }
}

/// Shape segments obey their structural constraints.
struct ShapeCheck;

impl Check for ShapeCheck {
    fn name(&self) -> &str {
        "shape"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        if ctx.m.len() < 4 {
            return None;
        }
        Some(Outcome::from_failures(shape_of(&ctx.seq).violations))
    }
}

/// The three constructive extension lemmas on every valid input.
struct ConstructiveCheck;

impl Check for ConstructiveCheck {
    fn name(&self) -> &str {
        "constructive"
    }

    fn run_poset(&self, ctx: &PosetContext) -> Option<Outcome> {
        let p = ctx.poset;
        let n = p.len();
        let mut failures = Vec::new();
        let ups = crate::geometry::upper_sets(p);
        let all = p.elements();
        for &t in &ups {
            for &co in &ups {
                let s = all.difference(co);
                if !s.is_disjoint(t) {
                    continue;
                }
                match boundary_extension(p, s, t) {
                    Ok(f) => {
                        let first: ElementSet = (0..n).filter(|&z| f.rank(z) <= s.len()).collect();
                        let last: ElementSet =
                            (0..n).filter(|&z| f.rank(z) > n - t.len()).collect();
                        if !f.is_extension_of(p) || first != s || last != t {
                            failures.push(format!("boundary extension for {s:?}, {t:?}: {f:?}"));
                        }
                    }
                    Err(e) => failures.push(format!("boundary extension for {s:?}, {t:?}: {e}")),
                }
            }
        }
        let covers = p.hasse();
        for i in 0..ctx.table.len() {
            let f = ctx.table.extension(i);
            for &(a, b) in &covers {
                match adjacent_pair_extension(p, &f, a, b) {
                    Ok(g) => {
                        let kept = (0..n)
                            .filter(|&z| f.rank(z) < f.rank(a) || f.rank(z) > f.rank(b))
                            .all(|z| g.rank(z) == f.rank(z));
                        if !g.is_extension_of(p) || g.rank(b) != g.rank(a) + 1 || !kept {
                            failures.push(format!("adjacent pair ({a}, {b}) in {f:?} gave {g:?}"));
                        }
                    }
                    Err(e) => failures.push(format!("adjacent pair ({a}, {b}): {e}")),
                }
            }
        }
        Some(Outcome::from_failures(failures))
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let m = &ctx.m;
        let f = minimal_gap_extension(m);
        let inside = if f.rank(m.y()) > f.rank(m.x()) {
            f.strictly_between(m.x(), m.y())
        } else {
            ElementSet::from_bits(u32::MAX)
        };
        if !f.is_extension_of(m.poset()) || inside != m.between() {
            return Some(Outcome::fail(format!("minimal gap extension {f:?}")));
        }
        Some(Outcome::pass())
    }
}

/// `N_ℓ = 2^{ℓ-1} |E_-| |E_+|` for `ℓ ≤ k + 1` at every doubling index, with
/// the reconstruction map injective onto the gap-`ℓ` extensions.
struct BijectionCheck;

impl Check for BijectionCheck {
    fn name(&self) -> &str {
        "bijection"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let k = ctx
            .tags()
            .into_iter()
            .filter(|&(_, t)| t == KTag::Doubling)
            .map(|(k, _)| k)
            .max()?;
        Some(Outcome::from_failures(bijection_failures(&ctx.m, &ctx.seq, k)))
    }
}

/// Failures of the doubling bijection at `1 ≤ ℓ ≤ k + 1`.
pub fn bijection_failures(m: &MarkedPoset, seq: &GapSequence, k: usize) -> Vec<String> {
    let p = m.poset();
    let e_minus = subset_orders(p, m.lower_part());
    let e_plus = subset_orders(p, m.upper_part());
    let mut failures = Vec::new();
    for l in 1..=k + 1 {
        let predicted = (BigUint::one() << (l - 1)) * e_minus.len() * e_plus.len();
        if predicted != seq.get(l) {
            failures.push(format!("N_{l} = {}, formula gives {predicted}", seq.get(l)));
            continue;
        }
        let mut image = HashSet::new();
        let mut inputs = 0usize;
        for fm in &e_minus {
            for fp in &e_plus {
                for bits in 0..(1u64 << (l - 1)) {
                    let omega: Vec<bool> = (0..l - 1).map(|i| bits >> i & 1 == 1).collect();
                    inputs += 1;
                    match doubling_reconstruct(m, fm, fp, &omega) {
                        Ok(f) => {
                            if f.gap(m.x(), m.y()) != l as isize {
                                failures.push(format!("reconstruction has the wrong gap: {f:?}"));
                            }
                            image.insert(f);
                        }
                        Err(e) => failures.push(format!("ℓ = {l}: {e}")),
                    }
                }
            }
        }
        if image.len() != inputs {
            failures.push(format!("ℓ = {l}: reconstruction is not injective"));
        }
        if BigUint::from(image.len()) != seq.get(l) {
            failures.push(format!("ℓ = {l}: image has {} elements, N_ℓ = {}", image.len(), seq.get(l)));
        }
    }
    failures
}

/// Dimension formulas, support-value lemmas, and the k-extreme catalog in
/// equality cases.
struct GeometryCheck;

impl Check for GeometryCheck {
    fn name(&self) -> &str {
        "geometry"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let m = &ctx.m;
        let mut failures = Vec::new();
        let dims = body_dimensions(m);
        let expected = expected_dimensions(m);
        if dims != expected {
            failures.push(format!("dimensions {dims:?}, expected {expected:?}"));
        }
        let bodies = ctx.bodies();
        let (_, support) = support_lemma_failures(m, bodies);
        failures.extend(support);
        let (n, x, y) = (m.len(), m.x(), m.y());
        for (k, tag) in ctx.tags() {
            if !matches!(tag, KTag::Flat | KTag::Doubling | KTag::Anomalous) {
                continue;
            }
            for pr in predicted_k_extreme(m, k) {
                if !bodies.is_k_extreme_dir(k, &pr.kind.direction(n, x, y)) {
                    failures.push(format!(
                        "k = {k}: {} ({}) is not k-extreme",
                        pr.kind.describe(m),
                        pr.clause
                    ));
                }
            }
        }
        Some(Outcome::from_failures(failures))
    }
}

/// Witness systems in equality cases.
struct WitnessCheck;

impl Check for WitnessCheck {
    fn name(&self) -> &str {
        "witness"
    }

    fn run_marked(&self, ctx: &MarkedContext) -> Option<Outcome> {
        let mut out = Outcome::pass();
        for (k, tag) in ctx.tags() {
            match tag {
                KTag::Flat => {
                    witness_flat(&ctx.m, k, &mut out);
                }
                KTag::Doubling => {
                    witness_doubling(&ctx.m, k, &mut out);
                }
                KTag::Strict => {
                    for a in [BigRational::one(), BigRational::new(1.into(), 2.into())] {
                        if let Ok(Some(_)) = solve_witness(&ctx.m, k, &a) {
                            out.observations.push("strict case with a feasible candidate system");
                        }
                    }
                }
                _ => {}
            }
        }
        Some(out)
    }
}

fn witness_eqextr(w: &crate::geometry::WitnessVector, k: usize, out: &mut Outcome) {
    let m = &w.working;
    let p = m.poset();
    let top = BigRational::one() - &w.a;
    for z in p.elements().without(m.x()).without(m.y()).iter() {
        if p.is_maximal(z) && !w.pins(z, &top) {
            out.failures.push(format!("k = {k}: maximal {} not pinned to 1 - a", p.label(z)));
        }
        if p.is_minimal(z) && !w.pins(z, &BigRational::zero()) {
            out.failures.push(format!("k = {k}: minimal {} not pinned to 0", p.label(z)));
        }
    }
}

fn witness_flat(m: &MarkedPoset, k: usize, out: &mut Outcome) {
    match solve_witness(m, k, &BigRational::one()) {
        Ok(Some(w)) => {
            witness_eqextr(&w, k, out);
            if !check_witness_rules(&w) {
                out.failures.push(format!("k = {k}: flat witness violates the rules"));
            }
        }
        Ok(None) => out.failures.push(format!("k = {k}: flat case, a = 1 infeasible")),
        Err(e) => out.failures.push(e.to_string()),
    }
}

fn witness_doubling(m: &MarkedPoset, k: usize, out: &mut Outcome) {
    let half = BigRational::new(1.into(), 2.into());
    match solve_witness(m, k, &half) {
        Ok(Some(w)) => {
            witness_eqextr(&w, k, out);
            let mut eqs = w.rule_equations();
            eqs.push(w.v_xy_equation(BigRational::new(1.into(), 4.into())));
            if !w.admits(&eqs) {
                out.failures
                    .push(format!("k = {k}: rules with v_xy = 1/4 not admitted"));
            }
        }
        Ok(None) => out.failures.push(format!("k = {k}: doubling case, a = 1/2 infeasible")),
        Err(e) => out.failures.push(e.to_string()),
    }
    if let Ok(Some(_)) = solve_witness(m, k, &BigRational::one()) {
        out.failures.push(format!("k = {k}: doubling case, a = 1 feasible"));
    }
}

/// Names of the built-in checks.
pub const CHECK_NAMES: [&str; 14] = [
    "kahn-saks",
    "vanishing",
    "equality",
    "flat",
    "doubling",
    "mutex",
    "count",
    "structure",
    "augment",
    "shape",
    "constructive",
    "bijection",
    "geometry",
    "witness",
];

/// The checks of the three main characterizations and their lemmas.
pub const MAIN_THEOREMS: [&str; 6] = ["kahn-saks", "vanishing", "equality", "flat", "doubling", "mutex"];

fn builtin(name: &str) -> Option<Box<dyn Check>> {
    if let Some(i) = THEOREM_CHECKS.iter().position(|c| c.name == name) {
        let c = &THEOREM_CHECKS[i];
        return Some(Box::new(TheoremCheck {
            name: c.name,
            statements: c.statements,
        }));
    }
    Some(match name {
        "count" => Box::new(CountCheck),
        "structure" => Box::new(StructureCheck),
        "augment" => Box::new(AugmentCheck),
        "shape" => Box::new(ShapeCheck),
        "constructive" => Box::new(ConstructiveCheck),
        "bijection" => Box::new(BijectionCheck),
        "geometry" => Box::new(GeometryCheck),
        "witness" => Box::new(WitnessCheck),
        _ => return None,
    })
}

/// Expands a list of check and suite names (`main-theorems`, `all`).
pub fn resolve_checks(names: &[String]) -> Result<Vec<Box<dyn Check>>> {
    let mut out: Vec<String> = Vec::new();
    for name in names {
        let expanded: Vec<&str> = match name.as_str() {
            "all" => CHECK_NAMES.to_vec(),
            "main-theorems" => MAIN_THEOREMS.to_vec(),
            other => vec![other],
        };
        for e in expanded {
            if !out.iter().any(|o| o == e) {
                out.push(e.to_string());
            }
        }
    }
    out.iter()
        .map(|n| builtin(n).ok_or_else(|| Error::BadParameters(format!("unknown check {n:?}"))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub dedup: bool,
    /// Check and suite names, resolved by [`resolve_checks`].
    pub checks: Vec<String>,
    /// Worker threads; 0 means the default pool.
    pub jobs: usize,
    /// Skip posets with more linear extensions than this.
    pub max_extensions: Option<u64>,
    /// How many counterexamples to keep.
    pub max_counterexamples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 2,
            n_max: 4,
            dedup: false,
            checks: vec!["all".into()],
            jobs: 0,
            max_extensions: None,
            max_counterexamples: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub details: Vec<String>,
    /// The poset (with marks, when the check is per pair) in the text format.
    pub poset: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub posets_visited: u64,
    pub posets_skipped: u64,
    pub marked_pairs_visited: u64,
    pub tallies: BTreeMap<String, Tally>,
    pub observations: BTreeMap<String, u64>,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepResult {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, check: &str, outcome: Outcome, poset: impl FnOnce() -> String, cap: usize) {
        let t = self.tallies.entry(check.to_string()).or_default();
        for o in outcome.observations {
            *self.observations.entry(o.to_string()).or_default() += 1;
        }
        if outcome.failures.is_empty() {
            t.pass += 1;
        } else {
            t.fail += 1;
            self.failures += 1;
            if self.counterexamples.len() < cap {
                self.counterexamples.push(Counterexample {
                    check: check.to_string(),
                    details: outcome.failures,
                    poset: poset(),
                });
            }
        }
    }

    fn merge(&mut self, other: SweepResult, cap: usize) {
        self.posets_visited += other.posets_visited;
        self.posets_skipped += other.posets_skipped;
        self.marked_pairs_visited += other.marked_pairs_visited;
        for (k, t) in other.tallies {
            let e = self.tallies.entry(k).or_default();
            e.pass += t.pass;
            e.fail += t.fail;
        }
        for (k, v) in other.observations {
            *self.observations.entry(k).or_default() += v;
        }
        self.failures += other.failures;
        for c in other.counterexamples {
            if self.counterexamples.len() < cap {
                self.counterexamples.push(c);
            }
        }
    }
}

fn render_poset(p: &Poset) -> String {
    let mut s = String::from("[elements]\n");
    s.push_str(&(0..p.len()).map(|z| format!("p{z}")).collect::<Vec<_>>().join(" "));
    s.push_str("\n[covers]\n");
    for (a, b) in p.hasse() {
        s.push_str(&format!("p{a} < p{b}\n"));
    }
    s
}

fn sweep_one(p: &Poset, checks: &[&dyn Check], cfg: &SweepConfig) -> SweepResult {
    let mut res = SweepResult::default();
    let cap = cfg.max_counterexamples;
    if let Some(limit) = cfg.max_extensions {
        if count_extensions(p).to_u64().is_none_or(|c| c > limit) {
            res.posets_skipped = 1;
            return res;
        }
    }
    res.posets_visited = 1;
    let table = ExtensionTable::new(p);
    let pctx = PosetContext { poset: p, table: &table };
    for c in checks {
        if let Some(o) = c.run_poset(&pctx) {
            res.record(c.name(), o, || render_poset(p), cap);
        }
    }
    for (x, y) in marked_pairs(p) {
        res.marked_pairs_visited += 1;
        let m = MarkedPoset::new(p.clone(), x, y).expect("x ≱ y by construction");
        let ctx = MarkedContext::new(m, &table);
        for c in checks {
            if let Some(o) = c.run_marked(&ctx) {
                res.record(c.name(), o, || render(&ctx.m), cap);
            }
        }
    }
    res
}

#[cfg(feature = "parallel")]
fn map_maybe_parallel<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_maybe_parallel<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

fn validate(cfg: &SweepConfig) -> Result<()> {
    if cfg.n_min < 2 || cfg.n_max > MAX_SWEEP_N || cfg.n_min > cfg.n_max {
        return Err(Error::BadParameters(format!(
            "sweep sizes must satisfy 2 <= n_min <= n_max <= {MAX_SWEEP_N}, got {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    Ok(())
}

/// Runs the configured built-in checks.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    let checks = resolve_checks(&cfg.checks)?;
    let refs: Vec<&dyn Check> = checks.iter().map(|c| c.as_ref()).collect();
    sweep_with_checks(cfg, &refs)
}

/// Runs arbitrary checks (the configured names are ignored).
pub fn sweep_with_checks(cfg: &SweepConfig, checks: &[&dyn Check]) -> Result<SweepResult> {
    validate(cfg)?;
    let run = || {
        let mut total = SweepResult::default();
        for n in cfg.n_min..=cfg.n_max {
            let posets = poset_list(n, cfg.dedup);
            let parts = map_maybe_parallel(&posets, |p| sweep_one(p, checks, cfg));
            for part in parts {
                total.merge(part, cfg.max_counterexamples);
            }
        }
        total
    };
    #[cfg(feature = "parallel")]
    if cfg.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::BadParameters(e.to_string()))?;
        return Ok(pool.install(run));
    }
    Ok(run())
}

/// Number of posets per size seen by a sweep, for progress reporting.
pub fn poset_counts(n_max: usize, dedup: bool) -> HashMap<usize, usize> {
    (1..=n_max).map(|n| (n, poset_list(n, dedup).len())).collect()
}

/// Validity of `order` as an extension of `p` restricted to `s`; re-exported
/// for property tests.
pub fn valid_subset_order(p: &Poset, s: ElementSet, order: &[usize]) -> bool {
    is_linear_order_of(p, s, order)
}
