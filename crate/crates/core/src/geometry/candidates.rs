//! Coordinate, transition and anchor directions, their support values, and
//! the catalog of directions known to be k-extreme in equality cases.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::linalg::rat;
use super::{Bodies, Direction, RationalPoint};
use crate::poset::MarkedPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CandidateKind {
    /// `e_z` when `positive`, else `-e_z`.
    Coordinate { z: usize, positive: bool },
    /// `e_{zz'} = e_z - e_{z'}`.
    Transition { z: usize, zp: usize },
    /// `e_{zxy} = e_z - (e_x + e_y)/2`.
    AnchorZxy { z: usize },
    /// `e_{xyz} = (e_x + e_y)/2 - e_z`.
    AnchorXyz { z: usize },
}

impl CandidateKind {
    /// Twice the vector, as integers.
    pub(crate) fn direction(self, n: usize, x: usize, y: usize) -> Direction {
        let mut num = vec![0i64; n];
        match self {
            CandidateKind::Coordinate { z, positive } => num[z] = if positive { 2 } else { -2 },
            CandidateKind::Transition { z, zp } => {
                num[z] = 2;
                num[zp] = -2;
            }
            CandidateKind::AnchorZxy { z } => {
                num[z] = 2;
                num[x] = -1;
                num[y] = -1;
            }
            CandidateKind::AnchorXyz { z } => {
                num[z] = -2;
                num[x] = 1;
                num[y] = 1;
            }
        }
        Direction { num, den: 2 }
    }

    pub fn point(self, n: usize, x: usize, y: usize) -> RationalPoint {
        let d = self.direction(n, x, y);
        RationalPoint(d.num.iter().map(|&v| rat(v, d.den)).collect())
    }

    /// Short human-readable form using element labels.
    pub fn describe(self, m: &MarkedPoset) -> String {
        let l = |z| m.poset().label(z);
        match self {
            CandidateKind::Coordinate { z, positive: true } => format!("e_{}", l(z)),
            CandidateKind::Coordinate { z, positive: false } => format!("-e_{}", l(z)),
            CandidateKind::Transition { z, zp } => format!("e_{} - e_{}", l(z), l(zp)),
            CandidateKind::AnchorZxy { z } => format!("e_{} - (e_x + e_y)/2", l(z)),
            CandidateKind::AnchorXyz { z } => format!("(e_x + e_y)/2 - e_{}", l(z)),
        }
    }
}

/// A candidate direction with its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVector {
    pub kind: CandidateKind,
    pub point: RationalPoint,
}

/// Every coordinate, transition and anchor vector of `m`:
/// `2(n-2) + (n-2)(n-3) + 2(n-2)` of them.
pub fn candidate_vectors(m: &MarkedPoset) -> Vec<CandidateVector> {
    candidate_kinds(m)
        .into_iter()
        .map(|kind| CandidateVector {
            kind,
            point: kind.point(m.len(), m.x(), m.y()),
        })
        .collect()
}

pub(crate) fn candidate_kinds(m: &MarkedPoset) -> Vec<CandidateKind> {
    let others: Vec<usize> = m
        .poset()
        .elements()
        .without(m.x())
        .without(m.y())
        .iter()
        .collect();
    let mut out = Vec::new();
    for &z in &others {
        out.push(CandidateKind::Coordinate { z, positive: true });
        out.push(CandidateKind::Coordinate { z, positive: false });
    }
    for &z in &others {
        for &zp in &others {
            if z != zp {
                out.push(CandidateKind::Transition { z, zp });
            }
        }
    }
    for &z in &others {
        out.push(CandidateKind::AnchorZxy { z });
    }
    for &z in &others {
        out.push(CandidateKind::AnchorXyz { z });
    }
    out
}

/// A direction predicted to be k-extreme, with the clause predicting it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub kind: CandidateKind,
    pub clause: &'static str,
}

/// Directions that must be k-extreme whenever `N_k² = N_{k-1} N_{k+1} > 0`:
/// coordinate vectors at maximal and minimal elements, transition vectors
/// along covers in the nine listed configurations, and anchor vectors at
/// covers of `x` and `y` under the stated size bounds.
pub fn predicted_k_extreme(m: &MarkedPoset, k: usize) -> Vec<Prediction> {
    let p = m.poset();
    let n = m.len();
    let (x, y) = (m.x(), m.y());
    let lt_x = m.lt_x();
    let gt_y = m.gt_y();
    let between = m.between();
    let upx = m.gt_x_par_y();
    let loy = m.lt_y_par_x();
    let par = m.par_x_par_y();
    let others = p.elements().without(x).without(y);
    let mut out = Vec::new();
    let mut push = |kind, clause| out.push(Prediction { kind, clause });

    for z in others.iter() {
        if p.is_maximal(z) {
            push(CandidateKind::Coordinate { z, positive: true }, "coordinate/maximal");
        }
        if p.is_minimal(z) {
            push(CandidateKind::Coordinate { z, positive: false }, "coordinate/minimal");
        }
    }

    for z in others.iter() {
        for zp in p.above(z).intersection(others).iter() {
            if !p.covers(z, zp) {
                continue;
            }
            let both = |s: crate::ElementSet| s.contains(z) && s.contains(zp);
            let mut clauses: Vec<&'static str> = Vec::new();
            if both(lt_x) || both(gt_y) {
                clauses.push("transition/a");
            }
            if both(upx) || both(loy) {
                clauses.push("transition/b");
            }
            if both(between) {
                clauses.push("transition/c");
            }
            if (upx.contains(z) && p.above(z).is_subset(gt_y))
                || (loy.contains(zp) && p.below(zp).is_subset(lt_x))
            {
                clauses.push("transition/d");
            }
            if (par.contains(z) && p.above(z).is_subset(gt_y))
                || (par.contains(zp) && p.below(zp).is_subset(lt_x))
            {
                clauses.push("transition/e");
            }
            if (par.contains(z) && !gt_y.contains(zp)) || (par.contains(zp) && !lt_x.contains(z)) {
                clauses.push("transition/f");
            }
            if between.contains(z)
                && upx.contains(zp)
                && p.open_interval(x, zp).union(between).len() < k
            {
                clauses.push("transition/g");
            }
            if loy.contains(z)
                && between.contains(zp)
                && p.open_interval(z, y).union(between).len() < k
            {
                clauses.push("transition/h");
            }
            if loy.contains(z)
                && upx.contains(zp)
                && p.open_interval(z, y)
                    .union(p.open_interval(x, zp))
                    .union(between)
                    .len()
                    + 2
                    <= k
            {
                clauses.push("transition/i");
            }
            for c in clauses {
                push(CandidateKind::Transition { z, zp }, c);
            }
        }
    }

    for z in others.iter() {
        if (between.contains(z) || loy.contains(z))
            && p.covers(z, y)
            && p.above(z).len() + lt_x.len() + k <= n
        {
            push(CandidateKind::AnchorZxy { z }, "anchor/a");
        }
        if (between.contains(z) || upx.contains(z))
            && p.covers(x, z)
            && p.below(z).len() + gt_y.len() + k <= n
        {
            push(CandidateKind::AnchorXyz { z }, "anchor/b");
        }
        if p.covers(z, x) && p.open_interval(z, y).with(x).len() <= k {
            push(CandidateKind::AnchorZxy { z }, "anchor/c");
        }
        if p.covers(y, z) && p.open_interval(x, z).with(y).len() <= k {
            push(CandidateKind::AnchorXyz { z }, "anchor/d");
        }
    }
    out
}

/// Checks the closed-form support values of coordinate, transition and
/// anchor vectors wherever their hypotheses apply. Returns the number of
/// applicable checks and a description of each mismatch.
pub fn support_lemma_failures(m: &MarkedPoset, bodies: &Bodies) -> (usize, Vec<String>) {
    let p = m.poset();
    let n = m.len();
    let (x, y) = (m.x(), m.y());
    let others = p.elements().without(x).without(y);
    let half = rat(1, 2);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut expect = |kind: CandidateKind, hk: &BigRational, hl: &BigRational, rule: &str| {
        checked += 1;
        let (gk, gl) = bodies.support_pair(&kind.direction(n, x, y));
        if (&gk, &gl) != (hk, hl) {
            failures.push(format!(
                "{rule}: {} has (h_K, h_L) = ({gk}, {gl}), expected ({hk}, {hl})",
                kind.describe(m)
            ));
        }
    };
    for z in others.iter() {
        if p.is_maximal(z) {
            expect(CandidateKind::Coordinate { z, positive: true }, &one, &one, "hcoord/a");
        }
        if p.is_minimal(z) {
            expect(CandidateKind::Coordinate { z, positive: false }, &zero, &zero, "hcoord/b");
        }
        for zp in p.above(z).intersection(others).iter() {
            if !m.lt_x().contains(z) || !m.gt_y().contains(zp) {
                expect(CandidateKind::Transition { z, zp }, &zero, &zero, "htrans");
            }
        }
        if m.between().contains(z) || m.lt_y_par_x().contains(z) {
            expect(CandidateKind::AnchorZxy { z }, &zero, &half, "hanchor/a");
        }
        if m.between().contains(z) || m.gt_x_par_y().contains(z) {
            expect(CandidateKind::AnchorXyz { z }, &zero, &half, "hanchor/b");
        }
        if m.lt_x().contains(z) {
            expect(CandidateKind::AnchorZxy { z }, &zero, &-half.clone(), "hanchor/c");
        }
        if m.gt_y().contains(z) {
            expect(CandidateKind::AnchorXyz { z }, &zero, &-half.clone(), "hanchor/d");
        }
    }
    (checked, failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::gen_weird;
    use crate::poset::Poset;

    #[test]
    fn counts() {
        let m = MarkedPoset::new(Poset::antichain(3), 0, 1).unwrap();
        assert_eq!(candidate_vectors(&m).len(), 4);
        let w = gen_weird();
        let c = candidate_vectors(&w);
        assert_eq!(c.len(), 28);
        assert!(c.iter().all(|v| v.point.in_v(w.x(), w.y())));
    }

    #[test]
    fn weird_support_lemmas() {
        let m = gen_weird();
        let (checked, failures) = support_lemma_failures(&m, &Bodies::new(&m));
        assert!(checked > 0);
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn weird_catalog_is_extreme() {
        let m = gen_weird();
        let b = Bodies::new(&m);
        let preds = predicted_k_extreme(&m, 2);
        assert!(preds
            .iter()
            .any(|p| p.kind == CandidateKind::Transition { z: 4, zp: 5 } && p.clause == "transition/b"));
        for pr in preds {
            assert!(
                b.is_k_extreme_dir(2, &pr.kind.direction(6, 3, 2)),
                "{} ({})",
                pr.kind.describe(&m),
                pr.clause
            );
        }
    }
}
