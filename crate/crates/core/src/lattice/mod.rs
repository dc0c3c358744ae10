//! Exact integer polyhedral geometry.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point in this module.

mod faces;
mod hull;
mod matrix;
mod mixed;
mod smith;
mod volume;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use faces::{compact_faces, CompactFace};
pub use hull::{check_facet, convex_hull, minimizing_face, ConvexHull, HullFacet};
pub use matrix::IntMatrix;
pub use mixed::{minkowski_sum, mixed_volume, pencil_mixed_volumes, polarized_mixed_volume};
pub use smith::{saturation_basis, smith_normal_form, AffineFrame, SmithForm};
pub use volume::{normalized_volume, normalized_volume_at};

/// A point of `ℤ^d`.
pub type Point = Vec<BigInt>;

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn scale(k: &BigInt, a: &[BigInt]) -> Point {
    a.iter().map(|x| k * x).collect()
}

/// Converts a slice of machine integers to a lattice point.
pub fn point(coords: &[i64]) -> Point {
    coords.iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub(crate) fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(x) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&x.to_string()),
    }
}

pub(crate) fn serialize_points<S: Serializer>(v: &[Point], s: S) -> Result<S::Ok, S::Error> {
    struct Wrap<'a>(&'a [BigInt]);
    impl Serialize for Wrap<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_bigints(self.0, s)
        }
    }
    s.collect_seq(v.iter().map(|p| Wrap(p)))
}

/// Integer covector whose components have gcd 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimitiveCovector(Vec<BigInt>);

impl PrimitiveCovector {
    pub fn components(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, p: &[BigInt]) -> BigInt {
        dot(&self.0, p)
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn negated(&self) -> PrimitiveCovector {
        PrimitiveCovector(self.0.iter().map(|c| -c).collect())
    }

    /// Drops the components at the given positions.
    pub fn without(&self, positions: &[usize]) -> Result<PrimitiveCovector> {
        primitive(
            &self
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, c)| c.clone())
                .collect::<Vec<_>>(),
        )
    }
}

impl Serialize for PrimitiveCovector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

impl fmt::Display for PrimitiveCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Divides `v` by the gcd of its components, keeping the sign.
pub fn primitive(v: &[BigInt]) -> Result<PrimitiveCovector> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(PrimitiveCovector(v.iter().map(|x| x / &g).collect()))
}

/// A lattice polytope given by its vertices, with its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolytope {
    ambient_dim: usize,
    #[serde(serialize_with = "serialize_points")]
    vertices: Vec<Point>,
    affine_dim: Option<usize>,
}

impl LatticePolytope {
    pub fn empty(ambient_dim: usize) -> Self {
        LatticePolytope {
            ambient_dim,
            vertices: Vec::new(),
            affine_dim: None,
        }
    }

    /// Convex hull of `points`; the stored vertex list is irredundant and
    /// sorted.
    pub fn from_points(ambient_dim: usize, points: &[Point]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} in ℤ^{ambient_dim}",
                p.len()
            )));
        }
        if points.is_empty() {
            return Ok(LatticePolytope::empty(ambient_dim));
        }
        let hull = convex_hull(points)?;
        let mut vertices: Vec<Point> = hull.vertices.iter().map(|&i| points[i].clone()).collect();
        vertices.sort();
        Ok(LatticePolytope {
            ambient_dim,
            vertices,
            affine_dim: Some(hull.affine_dim),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// `None` for the empty polytope.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, p: &[BigInt]) -> bool {
        self.vertices.iter().any(|v| v.as_slice() == p)
    }

    pub fn translate(&self, by: &[BigInt]) -> LatticePolytope {
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| add(v, by)).collect(),
            affine_dim: self.affine_dim,
        }
    }

    /// Dilation by a nonnegative integer.
    pub fn dilate(&self, k: u64) -> LatticePolytope {
        if k == 0 {
            return match self.vertices.first() {
                None => self.clone(),
                Some(_) => LatticePolytope {
                    ambient_dim: self.ambient_dim,
                    vertices: vec![vec![BigInt::zero(); self.ambient_dim]],
                    affine_dim: Some(0),
                },
            };
        }
        let k = BigInt::from(k);
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| scale(&k, v)).collect(),
            affine_dim: self.affine_dim,
        }
    }

    /// Drops the listed coordinates from every vertex.
    pub fn project_out(&self, coords: &[usize]) -> Result<LatticePolytope> {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(i, _)| !coords.contains(i))
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        LatticePolytope::from_points(self.ambient_dim - coords.len(), &pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&point(&[4, 6])).unwrap().components(), point(&[2, 3]).as_slice());
        assert_eq!(primitive(&point(&[1, 0, 0])).unwrap().components(), point(&[1, 0, 0]).as_slice());
        assert_eq!(primitive(&point(&[-3, -6])).unwrap().components(), point(&[-1, -2]).as_slice());
        assert_eq!(primitive(&point(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn polytope_drops_interior_points() {
        let pts = vec![point(&[0, 0]), point(&[2, 0]), point(&[0, 2]), point(&[1, 1]), point(&[1, 0])];
        let p = LatticePolytope::from_points(2, &pts).unwrap();
        assert_eq!(p.affine_dim(), Some(2));
        assert_eq!(p.vertices().len(), 3);
    }
}
