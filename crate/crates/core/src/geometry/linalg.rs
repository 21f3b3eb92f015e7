//! Exact rank and affine solving.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank of an integer matrix, by fraction-free elimination. Rows are reduced
/// by their gcd after each step; on the (unlikely) event of an i128 overflow
/// the computation is redone over the rationals.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .filter(|r: &Vec<i128>| r.iter().any(|&v| v != 0))
        .collect();
    match int_rank_in_place(&mut m) {
        Some(r) => r,
        None => rational_rank(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        ),
    }
}

fn int_rank_in_place(m: &mut [Vec<i128>]) -> Option<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let mut g = 0;
            for j in 0..cols {
                let v = row[j]
                    .checked_mul(pivot[c])?
                    .checked_sub(pivot[j].checked_mul(f)?)?;
                row[j] = v;
                g = gcd(g, v);
            }
            if g > 1 {
                row.iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    rref(&mut m).len()
}

/// Reduces `m` to reduced row echelon form and returns the pivot columns.
/// Zero rows end up at the bottom.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        m[rank].iter_mut().for_each(|v| *v *= &inv);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                if !pivot[j].is_zero() {
                    row[j] -= &f * &pivot[j];
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Solution set `{p + Σ c_i d_i}` of a consistent linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// The solution with every free variable set to zero.
    pub particular: Vec<BigRational>,
    /// A basis of the null space of the coefficient matrix.
    pub null_space: Vec<Vec<BigRational>>,
}

/// Solves `A v = b` exactly; `None` if inconsistent. `a` has `unknowns`
/// columns.
pub fn solve_affine(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    unknowns: usize,
) -> Option<AffineSolution> {
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&unknowns) {
        // a pivot in the right-hand-side column: 0 = nonzero
        return None;
    }
    let mut particular = vec![BigRational::zero(); unknowns];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = aug[row][unknowns].clone();
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let null_space = free
        .iter()
        .map(|&f| {
            let mut d = vec![BigRational::zero(); unknowns];
            d[f] = BigRational::one();
            for (row, &c) in pivots.iter().enumerate() {
                d[c] = -aug[row][f].clone();
            }
            d
        })
        .collect();
    Some(AffineSolution {
        particular,
        null_space,
    })
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `"p/q"`, or just `"p"` for integers.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

pub(crate) fn is_positive(r: &BigRational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(int_rank(&[]), 0);
        assert_eq!(int_rank(&[vec![0, 0]]), 0);
        assert_eq!(int_rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
        assert_eq!(int_rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, 1]]), 3);
        let big = vec![vec![i64::MAX, 1], vec![1, i64::MAX]];
        assert_eq!(int_rank(&big), 2);
    }

    #[test]
    fn affine() {
        // v0 + v1 = 1, v0 - v1 = 0
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let s = solve_affine(&a, &[rat(1, 1), rat(0, 1)], 2).unwrap();
        assert_eq!(s.particular, vec![rat(1, 2), rat(1, 2)]);
        assert!(s.null_space.is_empty());
        // inconsistent
        let a = vec![vec![rat(1, 1)], vec![rat(1, 1)]];
        assert!(solve_affine(&a, &[rat(0, 1), rat(1, 1)], 1).is_none());
        // underdetermined: v0 = 2 + v1 ... free v1
        let a = vec![vec![rat(1, 1), rat(-1, 1)]];
        let s = solve_affine(&a, &[rat(2, 1)], 2).unwrap();
        assert_eq!(s.particular, vec![rat(2, 1), rat(0, 1)]);
        assert_eq!(s.null_space, vec![vec![rat(1, 1), rat(1, 1)]]);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&rat(2, 4)), "1/2");
        assert_eq!(rational_string(&rat(-3, 1)), "-3");
        assert_eq!(parse_rational("-1/2"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
