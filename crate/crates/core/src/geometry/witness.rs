//! The translation `v` with `h_K(u) = a h_L(u) + ⟨u, v⟩` on every k-extreme
//! candidate direction `u`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::candidates::{candidate_kinds, CandidateKind};
use super::linalg::{is_positive, rat, solve_affine};
use super::{check_k, Bodies, RationalPoint};
use crate::error::{Error, Result};
use crate::poset::MarkedPoset;

/// `⟨u, v⟩ = rhs` for one k-extreme direction `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub kind: CandidateKind,
    pub u: RationalPoint,
    #[serde(serialize_with = "ser_rat")]
    pub rhs: BigRational,
}

fn ser_rat<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&super::rational_string(r))
}

/// A sparse linear equation `Σ c_z v_z = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    pub coeffs: Vec<(usize, BigRational)>,
    pub rhs: BigRational,
}

impl LinearEquation {
    /// `v_z = value`
    pub fn pin(z: usize, value: BigRational) -> Self {
        LinearEquation {
            coeffs: vec![(z, BigRational::one())],
            rhs: value,
        }
    }

    /// `v_a = v_b`
    pub fn equal(a: usize, b: usize) -> Self {
        LinearEquation {
            coeffs: vec![(a, BigRational::one()), (b, -BigRational::one())],
            rhs: BigRational::zero(),
        }
    }

    fn holds_at(&self, v: &RationalPoint) -> bool {
        let lhs: BigRational = self.coeffs.iter().map(|(z, c)| c * &v.0[*z]).sum();
        lhs == self.rhs
    }
}

/// The poset the witness system is solved on: `m` itself, or `m` with a
/// global minimum and maximum adjoined when `x` is minimal or `y` is maximal.
/// The adjoined elements do not change any `N_k`.
pub fn witness_working_poset(m: &MarkedPoset) -> MarkedPoset {
    if m.lt_x().is_empty() || m.gt_y().is_empty() {
        m.augment()
    } else {
        m.clone()
    }
}

/// One constraint per k-extreme candidate direction of `m` (used as given,
/// without augmentation).
pub fn harvest_constraints(m: &MarkedPoset, k: usize, a: &BigRational) -> Result<Vec<Constraint>> {
    check_k(m.len(), k)?;
    Ok(harvest_with(m, &Bodies::new(m), k, a))
}

fn harvest_with(m: &MarkedPoset, bodies: &Bodies, k: usize, a: &BigRational) -> Vec<Constraint> {
    let (n, x, y) = (m.len(), m.x(), m.y());
    candidate_kinds(m)
        .into_iter()
        .filter_map(|kind| {
            let d = kind.direction(n, x, y);
            if !bodies.is_k_extreme_dir(k, &d) {
                return None;
            }
            let (hk, hl) = bodies.support_pair(&d);
            Some(Constraint {
                kind,
                u: kind.point(n, x, y),
                rhs: hk - a * hl,
            })
        })
        .collect()
}

/// A solution of the witness system together with its solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessVector {
    /// The poset the system was solved on (see [`witness_working_poset`]).
    pub working: MarkedPoset,
    /// Whether `working` has the two adjoined elements.
    pub augmented: bool,
    pub a: BigRational,
    /// The particular solution with all free coordinates zero.
    pub v: RationalPoint,
    pub null_space: Vec<RationalPoint>,
    pub constraints: Vec<Constraint>,
}

impl WitnessVector {
    /// `v_{xy} = (v_x + v_y)/2` of the particular solution. Every constraint
    /// direction lies in `V`, so shifting a solution along `e_y - e_x` gives
    /// another one with the same `v_{xy}`.
    pub fn v_xy(&self) -> BigRational {
        (self.v.coord(self.working.x()) + self.v.coord(self.working.y())) * rat(1, 2)
    }

    /// Whether `v` satisfies every harvested constraint.
    pub fn satisfies(&self, v: &RationalPoint) -> bool {
        v.len() == self.working.len()
            && self.constraints.iter().all(|c| c.u.dot(v) == c.rhs)
    }

    /// Extends a point over the original poset to the working poset, giving
    /// the adjoined minimum the value `0` and the adjoined maximum `1 - a`.
    pub fn lift(&self, v: &RationalPoint) -> RationalPoint {
        let mut out = v.clone();
        if self.augmented {
            out.0.push(BigRational::zero());
            out.0.push(BigRational::one() - &self.a);
        }
        out
    }

    /// Whether the constraints together with `extra` have a common solution.
    pub fn admits(&self, extra: &[LinearEquation]) -> bool {
        let n = self.working.len();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs = Vec::new();
        for c in &self.constraints {
            rows.push(c.u.0.clone());
            rhs.push(c.rhs.clone());
        }
        for e in extra {
            let mut row = vec![BigRational::zero(); n];
            for (z, c) in &e.coeffs {
                row[*z] += c;
            }
            rows.push(row);
            rhs.push(e.rhs.clone());
        }
        solve_affine(&rows, &rhs, n).is_some()
    }

    /// Whether every solution has `v_z = value`.
    pub fn pins(&self, z: usize, value: &BigRational) -> bool {
        self.v.coord(z) == value && self.null_space.iter().all(|d| d.coord(z).is_zero())
    }

    /// The equations `v_z = 0` on `P_{<x} ∪ P_{<y,∥x}`, `v_z = 1 - a` on
    /// `P_{>y} ∪ P_{>x,∥y}`, and `v_z = v_{z'}` for `z < z'` inside
    /// `P_{x<·<y}`, over the working poset.
    pub fn rule_equations(&self) -> Vec<LinearEquation> {
        let m = &self.working;
        let p = m.poset();
        let mut eqs: Vec<LinearEquation> = m
            .lower_part()
            .iter()
            .map(|z| LinearEquation::pin(z, BigRational::zero()))
            .collect();
        let top = BigRational::one() - &self.a;
        eqs.extend(m.upper_part().iter().map(|z| LinearEquation::pin(z, top.clone())));
        let between = m.between();
        for z in between.iter() {
            for zp in p.above(z).intersection(between).iter() {
                eqs.push(LinearEquation::equal(z, zp));
            }
        }
        eqs
    }

    /// The equation `v_x + v_y = 2 c`, i.e. `v_{xy} = c`.
    pub fn v_xy_equation(&self, c: BigRational) -> LinearEquation {
        LinearEquation {
            coeffs: vec![
                (self.working.x(), BigRational::one()),
                (self.working.y(), BigRational::one()),
            ],
            rhs: c * BigRational::from_integer(2.into()),
        }
    }

    /// Whether the rule equations hold at the given point.
    pub fn rules_hold_at(&self, v: &RationalPoint) -> bool {
        self.rule_equations().iter().all(|e| e.holds_at(v))
    }
}

/// Collects the constraints of every k-extreme candidate and solves them
/// exactly with `v` free over the (working) poset. `None` when the system
/// is inconsistent, which rules out `a² N_{k+1} = a N_k = N_{k-1}`.
pub fn solve_witness(m: &MarkedPoset, k: usize, a: &BigRational) -> Result<Option<WitnessVector>> {
    check_k(m.len(), k)?;
    if !is_positive(a) {
        return Err(Error::BadParameters(format!("scale a = {a} must be positive")));
    }
    let working = witness_working_poset(m);
    let bodies = Bodies::new(&working);
    let constraints = harvest_with(&working, &bodies, k, a);
    let n = working.len();
    let rows: Vec<Vec<BigRational>> = constraints.iter().map(|c| c.u.0.clone()).collect();
    let rhs: Vec<BigRational> = constraints.iter().map(|c| c.rhs.clone()).collect();
    Ok(solve_affine(&rows, &rhs, n).map(|s| WitnessVector {
        augmented: working.len() != m.len(),
        working,
        a: a.clone(),
        v: RationalPoint(s.particular),
        null_space: s.null_space.into_iter().map(RationalPoint).collect(),
        constraints,
    }))
}

/// Whether some solution of the witness system obeys the rule equations of
/// [`WitnessVector::rule_equations`].
pub fn check_witness_rules(w: &WitnessVector) -> bool {
    w.admits(&w.rule_equations())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::gen_weird;

    #[test]
    fn weird_half() {
        let m = gen_weird();
        let w = solve_witness(&m, 2, &rat(1, 2)).unwrap().expect("feasible");
        assert!(w.augmented);
        // ids z1, z2, y, x, z3, z4
        let known = RationalPoint::from_fractions(&[(0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2)]);
        assert!(w.satisfies(&w.lift(&known)));
        assert!(check_witness_rules(&w));
        assert!(w.admits(&[w.v_xy_equation(rat(1, 4))]));
        assert_eq!(w.v_xy(), rat(1, 4));
        assert!(!w.admits(&[w.v_xy_equation(rat(0, 1))]));
    }

    #[test]
    fn weird_flat_ratio_infeasible() {
        assert!(solve_witness(&gen_weird(), 2, &rat(1, 1)).unwrap().is_none());
    }

    #[test]
    fn doctored_point_breaks_rules() {
        let m = gen_weird();
        let w = solve_witness(&m, 2, &rat(1, 2)).unwrap().unwrap();
        let known = RationalPoint::from_fractions(&[(0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2)]);
        let good = w.lift(&known);
        assert!(w.rules_hold_at(&good));
        let mut bad = good.clone();
        bad.0[0] = rat(1, 3);
        assert!(!w.rules_hold_at(&bad));
    }

    #[test]
    fn bad_scale() {
        assert!(solve_witness(&gen_weird(), 2, &rat(0, 1)).is_err());
        assert!(solve_witness(&gen_weird(), 7, &rat(1, 1)).is_err());
    }
}
