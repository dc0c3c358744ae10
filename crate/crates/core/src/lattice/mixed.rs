//! Minkowski sums and mixed volumes.
//!
//! Mixed volumes are normalized so that `V(K, …, K) = V_m(K)`, the plain
//! lattice volume (not multiplied by `m!`).

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::rank_of;
use super::volume::normalized_volume_at;
use super::{add, sub, LatticePolytope, Point};
use crate::error::{Error, Result};

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "Minkowski sum of polytopes in ℤ^{} and ℤ^{}",
            p.ambient_dim(),
            q.ambient_dim()
        )));
    }
    if p.is_empty() || q.is_empty() {
        return Ok(LatticePolytope::empty(p.ambient_dim()));
    }
    let sums: Vec<Point> = p
        .vertices()
        .iter()
        .cartesian_product(q.vertices())
        .map(|(a, b)| add(a, b))
        .collect();
    LatticePolytope::from_points(p.ambient_dim(), &sums)
}

fn factorial(m: usize) -> BigInt {
    (1..=m).map(BigInt::from).product()
}

fn binomial(m: usize, j: usize) -> BigInt {
    factorial(m) / (factorial(j) * factorial(m - j))
}

fn check_span(bodies: &[&LatticePolytope], m: usize) -> Result<()> {
    let dim = bodies.first().map_or(0, |b| b.ambient_dim());
    if bodies.iter().any(|b| b.ambient_dim() != dim) {
        return Err(Error::DimensionMismatch("bodies live in different lattices".into()));
    }
    let directions: Vec<Point> = bodies
        .iter()
        .flat_map(|b| {
            let first = b.vertices().first().cloned();
            b.vertices()
                .iter()
                .skip(1)
                .map(move |v| sub(v, first.as_ref().expect("nonempty")))
        })
        .collect();
    let span = rank_of(&directions, dim);
    if span > m {
        return Err(Error::DimensionMismatch(format!(
            "bodies span a {span}-dimensional direction space, expected at most {m}"
        )));
    }
    Ok(())
}

/// `V_m(K)` as a rational.
fn volume(body: &LatticePolytope, m: usize) -> Result<BigRational> {
    Ok(BigRational::new(normalized_volume_at(body, m)?, factorial(m)))
}

/// Solves the Vandermonde system `Σ_j a_j s^j = y_s` for `s = 0..=m`.
fn interpolate(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    // Augmented matrix [s^j | y_s].
    let mut rows: Vec<Vec<BigRational>> = values
        .iter()
        .enumerate()
        .map(|(s, y)| {
            let s = BigRational::from_integer(BigInt::from(s));
            let mut row: Vec<BigRational> = (0..n).map(|j| num_traits::pow(s.clone(), j)).collect();
            row.push(y.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero()).expect("Vandermonde is invertible");
        rows.swap(col, pivot);
        let inv = BigRational::one() / &rows[col][col];
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= p * &f;
                }
            }
        }
    }
    rows.into_iter().map(|r| r[n].clone()).collect()
}

/// `[V(K₀^{m−j}, K₁^j) for j = 0..=m]`, from `Vol(K₀ + s·K₁)` at
/// `s = 0, …, m`, which is `Σ_j C(m,j) s^j V(K₀^{m−j}, K₁^j)`.
pub fn pencil_mixed_volumes(
    k0: &LatticePolytope,
    k1: &LatticePolytope,
    m: usize,
) -> Result<Vec<BigRational>> {
    if k0.is_empty() || k1.is_empty() {
        return Ok(vec![BigRational::zero(); m + 1]);
    }
    check_span(&[k0, k1], m)?;
    let samples = (0..=m)
        .map(|s| volume(&minkowski_sum(k0, &k1.dilate(s as u64))?, m))
        .collect::<Result<Vec<_>>>()?;
    let coefficients = interpolate(&samples);
    Ok(coefficients
        .into_iter()
        .enumerate()
        .map(|(j, c)| c / BigRational::from_integer(binomial(m, j)))
        .collect())
}

/// `V(K₁, …, K_m)` by inclusion–exclusion over sub-sums:
/// `m! · V = Σ_{∅≠S} (−1)^{m−|S|} Vol(Σ_{i∈S} K_i)`.
pub fn polarized_mixed_volume(bodies: &[LatticePolytope]) -> Result<BigRational> {
    let m = bodies.len();
    if m == 0 {
        return Ok(BigRational::one());
    }
    if bodies.iter().any(|b| b.is_empty()) {
        return Ok(BigRational::zero());
    }
    check_span(&bodies.iter().collect::<Vec<_>>(), m)?;
    let mut total = BigRational::zero();
    for mask in 1u64..(1 << m) {
        let mut sum: Option<LatticePolytope> = None;
        for (i, b) in bodies.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = Some(match sum {
                    None => b.clone(),
                    Some(acc) => minkowski_sum(&acc, b)?,
                });
            }
        }
        let vol = volume(&sum.expect("mask is nonzero"), m)?;
        if (m - mask.count_ones() as usize).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    Ok(total / BigRational::from_integer(factorial(m)))
}

/// Mixed volume of `m = bodies.len()` polytopes whose directions fit in an
/// `m`-dimensional space. Two-body multisets go through the pencil
/// interpolation; anything else through inclusion–exclusion.
pub fn mixed_volume(bodies: &[LatticePolytope]) -> Result<BigRational> {
    let m = bodies.len();
    let distinct: Vec<&LatticePolytope> = bodies.iter().fold(Vec::new(), |mut acc, b| {
        if !acc.contains(&b) {
            acc.push(b);
        }
        acc
    });
    match distinct.as_slice() {
        [] => Ok(BigRational::one()),
        [only] => {
            check_span(&[only], m)?;
            volume(only, m)
        }
        [k0, k1] => {
            let j = bodies.iter().filter(|b| b == k1).count();
            Ok(pencil_mixed_volumes(k0, k1, m)?.swap_remove(j))
        }
        _ => polarized_mixed_volume(bodies),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{normalized_volume, point};

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<Point> = pts.iter().map(|p| point(p)).collect();
        LatticePolytope::from_points(pts[0].len(), &pts).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn minkowski_basics() {
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 1]]);
        assert_eq!(minkowski_sum(&tri, &poly(&[&[0, 0]])).unwrap(), tri);
        let sq = minkowski_sum(&poly(&[&[0, 0], &[1, 0]]), &poly(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(sq, poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(minkowski_sum(&tri, &tri).unwrap(), tri.dilate(2));
        assert!(minkowski_sum(&tri, &poly(&[&[0, 0, 0]])).is_err());
    }

    #[test]
    fn mixed_volume_of_equal_bodies_is_volume() {
        let tri = poly(&[&[0, 0], &[2, 0], &[0, 3]]);
        let v = mixed_volume(&[tri.clone(), tri.clone()]).unwrap();
        assert_eq!(v, BigRational::new(normalized_volume(&tri), 2.into()));
        assert_eq!(v, q(3, 1));
    }

    #[test]
    fn segments_on_a_line() {
        let a = poly(&[&[0, 0], &[3, 0]]);
        let b = poly(&[&[0, 0], &[5, 0]]);
        let vs = pencil_mixed_volumes(&a, &b, 1).unwrap();
        assert_eq!(vs, vec![q(3, 1), q(5, 1)]);
    }

    #[test]
    fn unit_squares() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let shifted = sq.translate(&point(&[5, 7]));
        assert_eq!(mixed_volume(&[sq.clone(), shifted.clone()]).unwrap(), q(1, 1));
        assert_eq!(polarized_mixed_volume(&[sq, shifted]).unwrap(), q(1, 1));
    }

    #[test]
    fn two_segments_span_a_parallelogram() {
        let a = poly(&[&[0, 0], &[2, 0]]);
        let b = poly(&[&[0, 0], &[1, 3]]);
        // Vol(a + b) = |det| = 6 = 2 V(a, b); V(a, a) = V(b, b) = 0.
        assert_eq!(pencil_mixed_volumes(&a, &b, 2).unwrap(), vec![q(0, 1), q(3, 1), q(0, 1)]);
        assert_eq!(mixed_volume(&[a.clone(), b.clone()]).unwrap(), q(3, 1));
        assert_eq!(polarized_mixed_volume(&[a, b]).unwrap(), q(3, 1));
    }

    #[test]
    fn three_distinct_bodies() {
        let e1 = poly(&[&[0, 0, 0], &[1, 0, 0]]);
        let e2 = poly(&[&[0, 0, 0], &[0, 1, 0]]);
        let e3 = poly(&[&[0, 0, 0], &[0, 0, 1]]);
        assert_eq!(mixed_volume(&[e1, e2, e3]).unwrap(), q(1, 6));
    }

    #[test]
    fn span_too_large_is_rejected() {
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(pencil_mixed_volumes(&tri, &tri, 1).is_err());
        assert!(mixed_volume(&[tri]).is_err());
    }
}
