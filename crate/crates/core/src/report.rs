//! The analysis report: everything computed for one marked poset, in a form
//! that serializes losslessly (big integers and rationals as strings).

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::classify::{shape_of, verify_theorems_with, KTag};
use crate::conditions::vanishing;
use crate::error::{Error, Result};
use crate::geometry::{
    body_dimensions, candidate_vectors, check_witness_rules, expected_dimensions,
    harvest_constraints, rational_string, solve_witness, witness_working_poset, BodyDims, Bodies,
};
use crate::linext::{count_extensions, ExtensionTable};
use crate::poset::MarkedPoset;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Restrict per-index sections to this index.
    pub k: Option<usize>,
    /// Include the geometry section.
    pub geometry: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSection {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsSection {
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

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSection {
    pub k: usize,
    pub tag: String,
    /// `[N_{k-1}, N_k, N_{k+1}]`
    pub window: [String; 3],
    pub conditions: ConditionsSection,
    pub flat_condition: bool,
    pub doubling_condition: bool,
    /// Label of the flat witness element, if any.
    pub flat_witness: Option<String>,
    pub doubling_structure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeSection {
    /// `I_1, ..., I_5` as inclusive `[start, end]` term ranges.
    pub segments: Vec<Option<[usize; 2]>>,
    pub doubling_ks: Vec<usize>,
    pub flat_ks: Vec<usize>,
    pub zero_ks: Vec<usize>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureEntry {
    pub k: usize,
    pub statement: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSection {
    pub confirmed: bool,
    pub failures: Vec<FailureEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsSection {
    pub k: isize,
    pub l: isize,
    pub sum: isize,
}

impl From<BodyDims> for DimsSection {
    fn from(d: BodyDims) -> Self {
        DimsSection {
            k: d.k,
            l: d.l,
            sum: d.sum,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSection {
    pub a: String,
    pub feasible: bool,
    /// The particular solution over the working poset, when feasible.
    pub v: Option<Vec<String>>,
    pub v_xy: Option<String>,
    pub null_space_dim: Option<usize>,
    pub rules_hold: Option<bool>,
    pub constraints: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryIndexSection {
    pub k: usize,
    pub k_extreme: usize,
    pub witnesses: Vec<WitnessSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometrySection {
    pub dims: DimsSection,
    pub expected_dims: DimsSection,
    pub k_vertices: usize,
    pub l_vertices: usize,
    pub candidates: usize,
    /// Element names of the poset the witness systems are solved on.
    pub working_elements: Vec<String>,
    pub indices: Vec<GeometryIndexSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub poset: PosetSection,
    pub n: usize,
    pub extensions: String,
    /// `N_1, ..., N_{n-1}`
    pub gap_sequence: Vec<String>,
    /// `N_k = 0` as decided by the vanishing criterion, for `k = 1..n-1`.
    pub vanishing: Vec<bool>,
    pub log_concave: bool,
    pub indices: Vec<IndexSection>,
    pub shape: ShapeSection,
    pub theorems: TheoremSection,
    pub geometry: Option<GeometrySection>,
}

fn tag_name(t: KTag) -> String {
    format!("{t:?}")
}

/// Runs the full analysis of `m`.
pub fn analyze(m: &MarkedPoset, opts: &AnalyzeOptions) -> Result<Report> {
    let n = m.len();
    if let Some(k) = opts.k {
        let hi = n.saturating_sub(2);
        if k < 2 || k > hi {
            return Err(Error::IndexOutOfRange { k, lo: 2, hi });
        }
    }
    let p = m.poset();
    let label = |z: usize| p.label(z);
    let table = ExtensionTable::new(p);
    let seq = table.gap_sequence(m.x(), m.y());
    let theorems = verify_theorems_with(m, &table);
    let wanted = |k: usize| opts.k.is_none_or(|f| f == k);

    let indices = theorems
        .records
        .iter()
        .filter(|r| wanted(r.class.k))
        .map(|r| IndexSection {
            k: r.class.k,
            tag: tag_name(r.class.tag),
            window: [
                r.class.prev.to_string(),
                r.class.cur.to_string(),
                r.class.next.to_string(),
            ],
            conditions: ConditionsSection {
                m: r.profile.m,
                m_star: r.profile.m_star,
                e: r.profile.e,
                e_star: r.profile.e_star,
                c: r.profile.c,
                par_xy_empty: r.profile.par_xy_empty,
                interval_empty: r.profile.interval_empty,
            },
            flat_condition: r.profile.flat_condition(),
            doubling_condition: r.profile.doubling_condition(),
            flat_witness: r.flat_witness.map(label),
            doubling_structure: r.doubling_structure,
        })
        .collect();

    let shape = shape_of(&seq);
    let geometry = if opts.geometry {
        Some(geometry_section(m, opts)?)
    } else {
        None
    };
    Ok(Report {
        poset: PosetSection {
            elements: (0..n).map(label).collect(),
            covers: p.hasse().into_iter().map(|(a, b)| [label(a), label(b)]).collect(),
            x: label(m.x()),
            y: label(m.y()),
        },
        n,
        extensions: count_extensions(p).to_string(),
        gap_sequence: seq.counts().iter().map(|c| c.to_string()).collect(),
        vanishing: (1..n).map(|k| vanishing(m, k).expect("k in range")).collect(),
        log_concave: seq.log_concavity_violations().is_empty(),
        indices,
        shape: ShapeSection {
            segments: shape
                .segments
                .iter()
                .map(|s| s.map(|s| [s.start, s.end]))
                .collect(),
            doubling_ks: shape.doubling_ks,
            flat_ks: shape.flat_ks,
            zero_ks: shape.zero_ks,
            violations: shape.violations,
        },
        theorems: TheoremSection {
            confirmed: theorems.confirmed(),
            failures: theorems
                .failures
                .into_iter()
                .map(|f| FailureEntry {
                    k: f.k,
                    statement: f.statement,
                    detail: f.detail,
                })
                .collect(),
        },
        geometry,
    })
}

fn geometry_section(m: &MarkedPoset, opts: &AnalyzeOptions) -> Result<GeometrySection> {
    let n = m.len();
    let bodies = Bodies::new(m);
    let half = BigRational::new(1.into(), 2.into());
    let scales = [BigRational::one(), half];
    let working = witness_working_poset(m);
    let working_elements = (0..working.len()).map(|z| working.poset().label(z)).collect();
    let mut indices = Vec::new();
    for k in 2..n.saturating_sub(1) {
        if opts.k.is_some_and(|f| f != k) {
            continue;
        }
        let mut witnesses = Vec::new();
        for a in &scales {
            let w = solve_witness(m, k, a)?;
            witnesses.push(WitnessSection {
                a: rational_string(a),
                feasible: w.is_some(),
                v: w.as_ref().map(|w| w.v.to_strings()),
                v_xy: w.as_ref().map(|w| rational_string(&w.v_xy())),
                null_space_dim: w.as_ref().map(|w| w.null_space.len()),
                rules_hold: w.as_ref().map(check_witness_rules),
                constraints: w.as_ref().map_or(0, |w| w.constraints.len()),
            });
        }
        indices.push(GeometryIndexSection {
            k,
            k_extreme: harvest_constraints(&working, k, &BigRational::one())?.len(),
            witnesses,
        });
    }
    Ok(GeometrySection {
        dims: body_dimensions(m).into(),
        expected_dims: expected_dimensions(m).into(),
        k_vertices: bodies.k.len(),
        l_vertices: bodies.l.len(),
        candidates: candidate_vectors(m).len(),
        working_elements,
        indices,
    })
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "poset: {} elements, x = {}, y = {}, {} linear extensions",
        r.n, r.poset.x, r.poset.y, r.extensions
    );
    let _ = writeln!(s, "gap sequence N_1..N_{}: ({})", r.n - 1, r.gap_sequence.join(", "));
    let _ = writeln!(s, "log-concave: {}", if r.log_concave { "yes" } else { "NO" });
    if !r.indices.is_empty() {
        let _ = writeln!(s, "\n  k  tag        M  M* E  E* C  | flat-wit  dbl-struct");
        for i in &r.indices {
            let b = |v: bool| if v { "+" } else { "." };
            let c = &i.conditions;
            let _ = writeln!(
                s,
                "{:>3}  {:<9}  {}  {}  {}  {}  {}  | {:<8}  {}",
                i.k,
                i.tag,
                b(c.m),
                b(c.m_star),
                b(c.e),
                b(c.e_star),
                b(c.c),
                i.flat_witness.as_deref().unwrap_or("-"),
                b(i.doubling_structure)
            );
        }
    }
    let seg_names = ["zero/doubling", "rising", "flat", "falling", "zero"];
    let segs: Vec<String> = r
        .shape
        .segments
        .iter()
        .zip(seg_names)
        .filter_map(|(seg, name)| seg.map(|[a, b]| format!("{name} [{a}, {b}]")))
        .collect();
    let _ = writeln!(s, "\nshape: {}", segs.join(", "));
    for v in &r.shape.violations {
        let _ = writeln!(s, "  shape violation: {v}");
    }
    if r.theorems.confirmed {
        let _ = writeln!(s, "theorems: all characterizations agree");
    } else {
        let _ = writeln!(s, "theorems: {} FAILURES", r.theorems.failures.len());
        for f in &r.theorems.failures {
            let _ = writeln!(s, "  k = {}: {}: {}", f.k, f.statement, f.detail);
        }
    }
    if let Some(g) = &r.geometry {
        let _ = writeln!(
            s,
            "\ngeometry: dim K = {}, dim L = {}, dim K+L = {} (expected {}, {}, {})",
            g.dims.k, g.dims.l, g.dims.sum, g.expected_dims.k, g.expected_dims.l, g.expected_dims.sum
        );
        let _ = writeln!(
            s,
            "  {} vertices of K, {} of L, {} candidate directions",
            g.k_vertices, g.l_vertices, g.candidates
        );
        if g.working_elements.len() != r.n {
            let _ = writeln!(s, "  witness systems solved on the poset with a bottom and top adjoined");
        }
        let _ = writeln!(s, "  witness coordinates: ({})", g.working_elements.join(", "));
        for gi in &g.indices {
            let _ = writeln!(s, "  k = {}: {} k-extreme candidates", gi.k, gi.k_extreme);
            for w in &gi.witnesses {
                match &w.v {
                    Some(v) => {
                        let _ = writeln!(
                            s,
                            "    a = {}: feasible, v = ({}), v_xy = {}, rules {}",
                            w.a,
                            v.join(", "),
                            w.v_xy.as_deref().unwrap_or("?"),
                            if w.rules_hold == Some(true) { "hold" } else { "fail" }
                        );
                    }
                    None => {
                        let _ = writeln!(s, "    a = {}: infeasible", w.a);
                    }
                }
            }
        }
    }
    s
}
