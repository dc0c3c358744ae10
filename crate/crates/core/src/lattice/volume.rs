//! Normalized lattice volume `l! · V_l`.
//!
//! A full-dimensional polytope in `ℤ^k` is the union of pyramids with apex at
//! its lexicographically smallest vertex `v₀` over the facets not containing
//! `v₀`. With a primitive facet normal, the normalized volume of such a
//! pyramid is the lattice height of `v₀` times the normalized volume of the
//! facet in its own lattice, so the volume recurses on facets.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hull::intrinsic_hull;
use super::{dot, LatticePolytope, Point};
use crate::error::{Error, Result};

/// Normalized volume of the hull of distinct points, measured in the lattice
/// of their own affine span.
pub(crate) fn intrinsic_volume(points: &[Point]) -> BigInt {
    let (frame, coords, facets, vertices) = intrinsic_hull(points);
    match frame.dim() {
        0 => BigInt::one(),
        1 => {
            let min = coords.iter().map(|c| &c[0]).min().expect("nonempty");
            let max = coords.iter().map(|c| &c[0]).max().expect("nonempty");
            max - min
        }
        _ => {
            let apex_index = *vertices
                .iter()
                .min_by(|&&a, &&b| coords[a].cmp(&coords[b]))
                .expect("a polytope has vertices");
            let apex = &coords[apex_index];
            facets
                .iter()
                .filter(|f| !f.members.contains(&apex_index))
                .map(|f| {
                    let height = dot(&f.normal, apex) - &f.offset;
                    let face: Vec<Point> = f.members.iter().map(|&i| coords[i].clone()).collect();
                    height * intrinsic_volume(&face)
                })
                .sum()
        }
    }
}

fn distinct(points: &[Point]) -> Vec<Point> {
    points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
}

/// `l! · V_l(P)` for `l = dim P`: 1 for a point, 0 for the empty polytope.
pub fn normalized_volume(polytope: &LatticePolytope) -> BigInt {
    if polytope.is_empty() {
        return BigInt::zero();
    }
    intrinsic_volume(&distinct(polytope.vertices()))
}

/// `l! · V_l(P)`: 0 when `dim P < l`; an error when `dim P > l`.
pub fn normalized_volume_at(polytope: &LatticePolytope, l: usize) -> Result<BigInt> {
    match polytope.affine_dim() {
        None => Ok(BigInt::zero()),
        Some(k) if k < l => Ok(BigInt::zero()),
        Some(k) if k == l => Ok(normalized_volume(polytope)),
        Some(k) => Err(Error::DimensionMismatch(format!(
            "{l}-dimensional volume of a {k}-dimensional polytope"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::point;

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<Point> = pts.iter().map(|p| point(p)).collect();
        LatticePolytope::from_points(pts[0].len(), &pts).unwrap()
    }

    #[test]
    fn segments_use_lattice_length() {
        assert_eq!(normalized_volume(&poly(&[&[1, 0], &[0, 2]])), BigInt::from(1));
        assert_eq!(normalized_volume(&poly(&[&[2, 0], &[0, 2]])), BigInt::from(2));
        assert_eq!(normalized_volume(&poly(&[&[0, 0, 0], &[3, 6, 9]])), BigInt::from(3));
    }

    #[test]
    fn triangle_in_space_is_unimodular() {
        assert_eq!(
            normalized_volume(&poly(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])),
            BigInt::from(1)
        );
    }

    #[test]
    fn conventions_for_point_and_empty() {
        let p = poly(&[&[4, 5]]);
        assert_eq!(normalized_volume_at(&p, 0).unwrap(), BigInt::from(1));
        assert_eq!(normalized_volume_at(&p, 1).unwrap(), BigInt::from(0));
        let e = LatticePolytope::empty(2);
        for l in 0..3 {
            assert_eq!(normalized_volume_at(&e, l).unwrap(), BigInt::from(0));
        }
        assert!(normalized_volume_at(&poly(&[&[0, 0], &[1, 0], &[0, 1]]), 1).is_err());
    }

    #[test]
    fn squares_and_cubes() {
        assert_eq!(normalized_volume(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])), BigInt::from(2));
        assert_eq!(normalized_volume(&poly(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]])), BigInt::from(18));
        let cube: Vec<Vec<i64>> = (0..8).map(|m| (0..3).map(|b| (m >> b) & 1).collect()).collect();
        let cube: Vec<&[i64]> = cube.iter().map(|v| v.as_slice()).collect();
        assert_eq!(normalized_volume(&poly(&cube)), BigInt::from(6));
    }

    #[test]
    fn additivity_when_cut_by_a_lattice_hyperplane() {
        // [0,4]×[0,2] cut along x = 1.
        let whole = normalized_volume(&poly(&[&[0, 0], &[4, 0], &[0, 2], &[4, 2]]));
        let left = normalized_volume(&poly(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]));
        let right = normalized_volume(&poly(&[&[1, 0], &[4, 0], &[1, 2], &[4, 2]]));
        assert_eq!(whole, left + right);
    }
}
