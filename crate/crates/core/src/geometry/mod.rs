//! Exact geometry of the order polytope slices
//!
//! `K = O_P ∩ {t_y = t_x}` and `L = O_P ∩ {t_x = 0, t_y = 1}`,
//!
//! where `O_P = {t ∈ [0,1]^P : t_z ≤ t_{z'} whenever z < z'}`. `N_k` is a
//! mixed volume of `K` and `L`, and equality in the Kahn–Saks inequality is
//! governed by support values of these bodies along a few special
//! directions. All of that is computed here from vertex lists: both slices
//! are lattice polytopes whose vertices are indicator vectors of upper sets,
//! so faces come from argmax filtering and dimensions from exact ranks.

mod candidates;
pub mod linalg;
mod witness;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::{MarkedPoset, Poset};

pub use candidates::{
    candidate_vectors, predicted_k_extreme, support_lemma_failures, CandidateKind,
    CandidateVector, Prediction,
};
pub use linalg::{parse_rational, rational_string, AffineSolution};
pub use witness::{
    check_witness_rules, harvest_constraints, solve_witness, witness_working_poset, Constraint,
    LinearEquation, WitnessVector,
};

pub type Rational = BigRational;

/// A point (or direction) of `R^P` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(pub Vec<Rational>);

impl RationalPoint {
    pub fn zero(n: usize) -> Self {
        RationalPoint(vec![Rational::zero(); n])
    }

    /// The indicator vector of `s`.
    pub fn indicator(n: usize, s: ElementSet) -> Self {
        RationalPoint(
            (0..n)
                .map(|z| if s.contains(z) { Rational::one() } else { Rational::zero() })
                .collect(),
        )
    }

    /// Coordinates given as `numerator / denominator` pairs.
    pub fn from_fractions(coords: &[(i64, i64)]) -> Self {
        RationalPoint(coords.iter().map(|&(p, q)| linalg::rat(p, q)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coord(&self, z: usize) -> &Rational {
        &self.0[z]
    }

    pub fn dot(&self, other: &RationalPoint) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `⟨self, 1_s⟩`
    pub fn sum_over(&self, s: ElementSet) -> Rational {
        s.iter().map(|z| &self.0[z]).sum()
    }

    /// Membership in `V = {u : u_y = u_x}`.
    pub fn in_v(&self, x: usize, y: usize) -> bool {
        self.0[x] == self.0[y]
    }

    /// Coordinates as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rational_string).collect()
    }

    /// Scales to an integer vector over a common denominator, when it fits.
    fn to_direction(&self) -> Option<Direction> {
        let den = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, r| num_integer::lcm(acc, r.denom().clone()));
        let num = self
            .0
            .iter()
            .map(|r| i64::try_from(r.numer() * (&den / r.denom())).ok())
            .collect::<Option<Vec<i64>>>()?;
        Some(Direction {
            num,
            den: i64::try_from(den).ok()?,
        })
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// A direction `num / den` with integer numerators, the fast path for
/// support computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Direction {
    pub num: Vec<i64>,
    pub den: i64,
}

impl Direction {
    fn dot_set(&self, s: ElementSet) -> i64 {
        s.iter().map(|z| self.num[z]).sum()
    }

    fn rational(&self, v: i64) -> Rational {
        linalg::rat(v, self.den)
    }
}

/// Which body a vertex list describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Body {
    K,
    L,
    FaceOfK,
    FaceOfL,
}

impl Body {
    fn face(self) -> Body {
        match self {
            Body::K | Body::FaceOfK => Body::FaceOfK,
            Body::L | Body::FaceOfL => Body::FaceOfL,
        }
    }
}

/// A 0/1 polytope given by its vertices, each stored as the set of
/// coordinates equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPolytope {
    n: usize,
    vertices: Vec<ElementSet>,
    body: Body,
}

impl VertexPolytope {
    pub fn body(&self) -> Body {
        self.body
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn vertex_sets(&self) -> &[ElementSet] {
        &self.vertices
    }

    pub fn vertices(&self) -> Vec<RationalPoint> {
        self.vertices
            .iter()
            .map(|&s| RationalPoint::indicator(self.n, s))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Differences `v_i - v_0` as integer rows.
    fn difference_rows(&self) -> Vec<Vec<i64>> {
        let Some(&base) = self.vertices.first() else {
            return Vec::new();
        };
        self.vertices[1..]
            .iter()
            .map(|&s| {
                (0..self.n)
                    .map(|z| s.contains(z) as i64 - base.contains(z) as i64)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the affine hull; `-1` for the empty polytope.
    pub fn dimension(&self) -> isize {
        if self.vertices.is_empty() {
            return -1;
        }
        linalg::int_rank(&self.difference_rows()) as isize
    }

    fn support_int(&self, u: &Direction) -> i64 {
        self.vertices
            .iter()
            .map(|&s| u.dot_set(s))
            .max()
            .expect("support of an empty polytope")
    }

    fn face_int(&self, u: &Direction) -> VertexPolytope {
        let h = self.support_int(u);
        VertexPolytope {
            n: self.n,
            vertices: self
                .vertices
                .iter()
                .copied()
                .filter(|&s| u.dot_set(s) == h)
                .collect(),
            body: self.body.face(),
        }
    }
}

/// `dim(A + B)` for polytopes in the same space: the rank of the union of
/// their difference sets.
pub fn minkowski_dimension(a: &VertexPolytope, b: &VertexPolytope) -> isize {
    if a.is_empty() || b.is_empty() {
        return -1;
    }
    let mut rows = a.difference_rows();
    rows.extend(b.difference_rows());
    linalg::int_rank(&rows) as isize
}

/// `h_C(u) = max_{t ∈ C} ⟨u, t⟩`.
pub fn support_value(poly: &VertexPolytope, u: &RationalPoint) -> Rational {
    match u.to_direction() {
        Some(d) => d.rational(poly.support_int(&d)),
        None => poly
            .vertices
            .iter()
            .map(|&s| u.sum_over(s))
            .max()
            .expect("support of an empty polytope"),
    }
}

/// `F(C, u)`, the vertices attaining `h_C(u)`.
pub fn face_of(poly: &VertexPolytope, u: &RationalPoint) -> VertexPolytope {
    if let Some(d) = u.to_direction() {
        return poly.face_int(&d);
    }
    let h = support_value(poly, u);
    VertexPolytope {
        n: poly.n,
        vertices: poly
            .vertices
            .iter()
            .copied()
            .filter(|&s| u.sum_over(s) == h)
            .collect(),
        body: poly.body.face(),
    }
}

/// All upper sets of `p`, by deciding elements from the top down.
pub fn upper_sets(p: &Poset) -> Vec<ElementSet> {
    // an order in which every element comes after everything above it
    let mut order: Vec<usize> = crate::linext::first_order_of(p, p.elements());
    order.reverse();
    let mut out = Vec::new();
    fn go(p: &Poset, order: &[usize], i: usize, u: ElementSet, out: &mut Vec<ElementSet>) {
        if i == order.len() {
            out.push(u);
            return;
        }
        let z = order[i];
        go(p, order, i + 1, u, out);
        if p.above(z).is_subset(u) {
            go(p, order, i + 1, u.with(z), out);
        }
    }
    go(p, &order, 0, ElementSet::EMPTY, &mut out);
    out.sort();
    out
}

/// `K`: indicator vectors of upper sets of the quotient identifying
/// `P_{x≤·≤y}`, lifted back to `P`.
pub fn k_polytope(m: &MarkedPoset) -> VertexPolytope {
    let merged = m.merge_xy();
    let n = m.len();
    let vertices = upper_sets(&merged.poset)
        .into_iter()
        .map(|u| (0..n).filter(|&z| u.contains(merged.class_of[z])).collect())
        .collect();
    VertexPolytope {
        n,
        vertices,
        body: Body::K,
    }
}

/// `L`: indicator vectors of upper sets containing `y` but not `x`.
pub fn l_polytope(m: &MarkedPoset) -> VertexPolytope {
    let vertices = upper_sets(m.poset())
        .into_iter()
        .filter(|u| u.contains(m.y()) && !u.contains(m.x()))
        .collect();
    VertexPolytope {
        n: m.len(),
        vertices,
        body: Body::L,
    }
}

/// Face dimensions along one direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceDims {
    pub k: isize,
    pub l: isize,
    pub sum: isize,
}

/// `K` and `L` of one marked poset, computed once.
#[derive(Clone, Debug)]
pub struct Bodies {
    x: usize,
    y: usize,
    pub k: VertexPolytope,
    pub l: VertexPolytope,
}

impl Bodies {
    pub fn new(m: &MarkedPoset) -> Self {
        Bodies {
            x: m.x(),
            y: m.y(),
            k: k_polytope(m),
            l: l_polytope(m),
        }
    }

    pub fn n(&self) -> usize {
        self.k.n
    }

    pub fn dim_sum(&self) -> isize {
        minkowski_dimension(&self.k, &self.l)
    }

    pub(crate) fn support_pair(&self, u: &Direction) -> (Rational, Rational) {
        (
            u.rational(self.k.support_int(u)),
            u.rational(self.l.support_int(u)),
        )
    }

    pub(crate) fn face_dims(&self, u: &Direction) -> FaceDims {
        let fk = self.k.face_int(u);
        let fl = self.l.face_int(u);
        FaceDims {
            k: fk.dimension(),
            l: fl.dimension(),
            sum: minkowski_dimension(&fk, &fl),
        }
    }

    pub(crate) fn is_k_extreme_dir(&self, k: usize, u: &Direction) -> bool {
        let n = self.n() as isize;
        let k = k as isize;
        let fk = self.k.face_int(u);
        if fk.dimension() < n - k - 1 {
            return false;
        }
        let fl = self.l.face_int(u);
        fl.dimension() >= k - 2 && minkowski_dimension(&fk, &fl) >= n - 3
    }

    /// Dimensions of the faces of `K`, `L` and `K + L` in direction `u`.
    pub fn face_dimensions(&self, u: &RationalPoint) -> Result<FaceDims> {
        let d = u
            .to_direction()
            .ok_or_else(|| Error::BadParameters("direction coordinates too large".into()))?;
        Ok(self.face_dims(&d))
    }

    /// The three dimension thresholds at `k`.
    pub fn is_k_extreme(&self, k: usize, u: &RationalPoint) -> Result<bool> {
        check_k(self.n(), k)?;
        if !u.in_v(self.x, self.y) {
            return Err(Error::NotInV);
        }
        let d = u
            .to_direction()
            .ok_or_else(|| Error::BadParameters("direction coordinates too large".into()))?;
        Ok(self.is_k_extreme_dir(k, &d))
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    let hi = n.saturating_sub(2);
    if k < 2 || k > hi {
        return Err(Error::IndexOutOfRange { k, lo: 2, hi });
    }
    Ok(())
}

/// `dim F(K,u) ≥ n-k-1`, `dim F(L,u) ≥ k-2` and `dim F(K+L,u) ≥ n-3`.
pub fn is_k_extreme(m: &MarkedPoset, k: usize, u: &RationalPoint) -> Result<bool> {
    check_k(m.len(), k)?;
    if !u.in_v(m.x(), m.y()) {
        return Err(Error::NotInV);
    }
    Bodies::new(m).is_k_extreme(k, u)
}

/// Dimensions of `K`, `L` and `K + L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BodyDims {
    pub k: isize,
    pub l: isize,
    pub sum: isize,
}

pub fn body_dimensions(m: &MarkedPoset) -> BodyDims {
    let b = Bodies::new(m);
    BodyDims {
        k: b.k.dimension(),
        l: b.l.dimension(),
        sum: b.dim_sum(),
    }
}

/// `(n-1-|P_{x<·<y}|, n-2-|P_{<x}|-|P_{>y}|, n-1)`.
pub fn expected_dimensions(m: &MarkedPoset) -> BodyDims {
    let n = m.len() as isize;
    BodyDims {
        k: n - 1 - m.between().len() as isize,
        l: n - 2 - m.lt_x().len() as isize - m.gt_y().len() as isize,
        sum: n - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::gen_weird;

    fn e(n: usize, z: usize) -> RationalPoint {
        let mut p = RationalPoint::zero(n);
        p.0[z] = Rational::one();
        p
    }

    #[test]
    fn antichain_pair() {
        let m = MarkedPoset::new(Poset::antichain(2), 0, 1).unwrap();
        let k = k_polytope(&m);
        assert_eq!(k.vertex_sets().len(), 2);
        assert_eq!(k.dimension(), 1);
        let l = l_polytope(&m);
        assert_eq!(l.vertex_sets(), &[ElementSet::singleton(1)]);
        assert_eq!(l.dimension(), 0);
    }

    #[test]
    fn weird_dimensions() {
        let m = gen_weird();
        let d = body_dimensions(&m);
        assert_eq!(d, BodyDims { k: 5, l: 4, sum: 5 });
        assert_eq!(d, expected_dimensions(&m));
    }

    #[test]
    fn weird_support_values() {
        let m = gen_weird();
        let b = Bodies::new(&m);
        let z4 = e(6, 5);
        assert_eq!(support_value(&b.k, &z4), Rational::one());
        assert_eq!(support_value(&b.l, &z4), Rational::one());
        let mut t = RationalPoint::zero(6);
        t.0[4] = Rational::one();
        t.0[5] = -Rational::one();
        assert_eq!(support_value(&b.k, &t), Rational::zero());
        assert_eq!(support_value(&b.l, &t), Rational::zero());
        // e_{z1 x y}
        let a = RationalPoint::from_fractions(&[(1, 1), (0, 1), (-1, 2), (-1, 2), (0, 1), (0, 1)]);
        assert_eq!(support_value(&b.k, &a), Rational::zero());
        assert_eq!(support_value(&b.l, &a), linalg::rat(1, 2));
        // a direction whose common denominator does not fit the fast path
        let huge = RationalPoint(
            (0..6)
                .map(|z| {
                    if z == 5 {
                        BigRational::new(1.into(), BigInt::from(10).pow(30))
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        );
        assert_eq!(face_of(&b.k, &huge).len(), face_of(&b.k, &z4).len());
    }

    #[test]
    fn weird_k_extreme() {
        let m = gen_weird();
        let mut t = RationalPoint::zero(6);
        t.0[4] = Rational::one();
        t.0[5] = -Rational::one();
        assert!(is_k_extreme(&m, 2, &t).unwrap());
        assert!(is_k_extreme(&m, 2, &e(6, 5)).unwrap());
        assert_eq!(is_k_extreme(&m, 2, &e(6, 3)), Err(Error::NotInV));
        assert!(is_k_extreme(&m, 5, &e(6, 5)).is_err());
    }

    #[test]
    fn upper_set_counts() {
        assert_eq!(upper_sets(&Poset::chain(4)).len(), 5);
        assert_eq!(upper_sets(&Poset::antichain(4)).len(), 16);
    }
}
