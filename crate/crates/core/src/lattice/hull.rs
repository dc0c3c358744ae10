//! Brute-force facet enumeration.
//!
//! For a full-dimensional point set in `ℤ^k`, every facet hyperplane passes
//! through `k` affinely independent input points. We try every such subset,
//! keep the one-sided hyperplanes, and dedupe by `(normal, offset)`. This is
//! exact and fine for tens of points in dimension ≤ 6.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use super::matrix::cofactor_normal;
use super::smith::AffineFrame;
use super::{dot, primitive, sub, LatticePolytope, Point, PrimitiveCovector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullFacet {
    /// Indices of the input points lying on the facet.
    pub vertex_indices: Vec<usize>,
    pub inner_normal: PrimitiveCovector,
    /// `inner_normal · p ≥ offset` for every input point.
    #[serde(serialize_with = "crate::lattice::serialize_bigint")]
    pub offset: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexHull {
    /// Indices of the input points that are vertices (one per distinct vertex).
    pub vertices: Vec<usize>,
    pub affine_dim: usize,
    /// Facets in the ambient space: all of them when the hull is
    /// full-dimensional, the hull itself with both normals when it has
    /// codimension one, and none otherwise.
    pub facets: Vec<HullFacet>,
}

/// A facet of a full-dimensional point set, in the coordinates it was
/// computed in. `members` index the distinct points.
#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    pub members: Vec<usize>,
}

/// Facets of a full-dimensional set of distinct points in `ℤ^dim`, `dim ≥ 1`,
/// sorted by (normal, offset).
pub(crate) fn full_dim_facets(points: &[Point], dim: usize) -> Vec<RawFacet> {
    debug_assert!(dim >= 1);
    let values_for = |normal: &[BigInt]| -> Vec<BigInt> { points.iter().map(|p| dot(normal, p)).collect() };
    let mut found: Vec<RawFacet> = Vec::new();
    let mut on_facet: Vec<Vec<bool>> = Vec::new();
    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();

    for combo in (0..points.len()).combinations(dim) {
        if on_facet.iter().any(|mask| combo.iter().all(|&i| mask[i])) {
            continue;
        }
        let base = &points[combo[0]];
        let diffs: Vec<Point> = combo[1..].iter().map(|&i| sub(&points[i], base)).collect();
        let raw = cofactor_normal(&diffs, dim);
        let Ok(normal) = primitive(&raw) else {
            continue;
        };
        let mut normal = normal.components().to_vec();
        let mut offset = dot(&normal, base);
        let mut values = values_for(&normal);
        let below = values.iter().any(|v| v < &offset);
        let above = values.iter().any(|v| v > &offset);
        if below && above {
            continue;
        }
        if below {
            normal.iter_mut().for_each(|c| *c = -&*c);
            values.iter_mut().for_each(|v| *v = -&*v);
            offset = -offset;
        }
        if !seen.insert((normal.clone(), offset.clone())) {
            continue;
        }
        let mask: Vec<bool> = values.iter().map(|v| *v == offset).collect();
        let members = (0..points.len()).filter(|&i| mask[i]).collect();
        on_facet.push(mask);
        found.push(RawFacet {
            normal,
            offset,
            members,
        });
    }
    found.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
    found
}

/// Vertices of a full-dimensional set of distinct points given its facets: a
/// point is a vertex iff the facets through it meet only in that point.
pub(crate) fn vertices_from_facets(num_points: usize, facets: &[RawFacet]) -> Vec<usize> {
    (0..num_points)
        .filter(|&p| {
            let mut common: Option<Vec<usize>> = None;
            for f in facets.iter().filter(|f| f.members.contains(&p)) {
                common = Some(match common {
                    None => f.members.clone(),
                    Some(c) => c.into_iter().filter(|i| f.members.contains(i)).collect(),
                });
            }
            common.is_some_and(|c| c == [p])
        })
        .collect()
}

/// Distinct points and, for each, the input indices that carry it.
fn distinct(points: &[Point]) -> (Vec<Point>, Vec<Vec<usize>>) {
    let mut map: BTreeMap<&Point, Vec<usize>> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        map.entry(p).or_default().push(i);
    }
    let (pts, idx): (Vec<Point>, Vec<Vec<usize>>) = map.into_iter().map(|(p, v)| (p.clone(), v)).unzip();
    (pts, idx)
}

/// Facets of the convex hull of distinct points that are full-dimensional in
/// their own affine lattice, in frame coordinates; also returns the vertices.
pub(crate) fn intrinsic_hull(points: &[Point]) -> (AffineFrame, Vec<Point>, Vec<RawFacet>, Vec<usize>) {
    let frame = AffineFrame::new(points);
    let coords: Vec<Point> = points
        .iter()
        .map(|p| frame.coordinates(p).expect("point lies on its own affine lattice"))
        .collect();
    let k = frame.dim();
    if k == 0 {
        return (frame, coords, Vec::new(), vec![0]);
    }
    let facets = full_dim_facets(&coords, k);
    let vertices = vertices_from_facets(coords.len(), &facets);
    (frame, coords, facets, vertices)
}

/// Convex hull of a nonempty list of lattice points.
pub fn convex_hull(points: &[Point]) -> Result<ConvexHull> {
    let Some(first) = points.first() else {
        return Err(Error::DimensionMismatch("convex hull of no points".into()));
    };
    let d = first.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch("points of different lengths".into()));
    }
    let (pts, owners) = distinct(points);
    let expand = |members: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = members.iter().flat_map(|&i| owners[i].iter().copied()).collect();
        out.sort_unstable();
        out
    };
    let frame = AffineFrame::new(&pts);
    let k = frame.dim();
    let (vert, facets) = if k == d && d >= 1 {
        let raw = full_dim_facets(&pts, d);
        let vert = vertices_from_facets(pts.len(), &raw);
        let facets = raw
            .into_iter()
            .map(|f| HullFacet {
                vertex_indices: expand(&f.members),
                inner_normal: primitive(&f.normal).expect("facet normals are nonzero"),
                offset: f.offset,
            })
            .collect();
        (vert, facets)
    } else {
        let (_, _, _, vert) = intrinsic_hull(&pts);
        let facets = if k + 1 == d {
            let normal = primitive(&cofactor_normal(frame.basis(), d)).expect("basis is independent");
            let all: Vec<usize> = (0..points.len()).collect();
            let offset = normal.apply(first);
            let mut both = vec![
                HullFacet {
                    vertex_indices: all.clone(),
                    inner_normal: normal.clone(),
                    offset: offset.clone(),
                },
                HullFacet {
                    vertex_indices: all,
                    inner_normal: normal.negated(),
                    offset: -offset,
                },
            ];
            both.sort_by(|a, b| a.inner_normal.cmp(&b.inner_normal));
            both
        } else {
            Vec::new()
        };
        (vert, facets)
    };
    let mut vertices: Vec<usize> = vert.iter().map(|&i| owners[i][0]).collect();
    vertices.sort_unstable();
    Ok(ConvexHull {
        vertices,
        affine_dim: k,
        facets,
    })
}

/// Hull of the points where the strictly positive covector `alpha` attains
/// its minimum. Empty input gives the empty polytope.
pub fn minimizing_face(points: &[Point], alpha: &PrimitiveCovector) -> Result<LatticePolytope> {
    if !alpha.is_strictly_positive() {
        return Err(Error::NonPositiveCovector);
    }
    if let Some(p) = points.iter().find(|p| p.len() != alpha.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "covector of length {} applied to a point of length {}",
            alpha.dim(),
            p.len()
        )));
    }
    let Some(min) = points.iter().map(|p| alpha.apply(p)).min() else {
        return Ok(LatticePolytope::empty(alpha.dim()));
    };
    let argmin: Vec<Point> = points.iter().filter(|p| alpha.apply(p) == min).cloned().collect();
    LatticePolytope::from_points(alpha.dim(), &argmin)
}

/// True iff the inner normal is one-sided on all points with equality exactly
/// on the facet's points, and those points span a hyperplane of the hull.
pub fn check_facet(points: &[Point], hull_dim: usize, facet: &HullFacet) -> bool {
    let on: Vec<Point> = facet.vertex_indices.iter().map(|&i| points[i].clone()).collect();
    let one_sided = points.iter().enumerate().all(|(i, p)| {
        let v = facet.inner_normal.apply(p);
        if facet.vertex_indices.contains(&i) {
            v == facet.offset
        } else {
            v > facet.offset
        }
    });
    let span_dim = if on.is_empty() { 0 } else { AffineFrame::new(&on).dim() };
    let expected = if hull_dim == points[0].len() { hull_dim - 1 } else { hull_dim };
    one_sided && span_dim == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::point;

    fn normals(h: &ConvexHull) -> Vec<Point> {
        h.facets.iter().map(|f| f.inner_normal.components().to_vec()).collect()
    }

    #[test]
    fn segment_in_plane() {
        let pts = vec![point(&[1, 0]), point(&[0, 2])];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.affine_dim, 1);
        assert_eq!(normals(&h), vec![point(&[-2, -1]), point(&[2, 1])]);
        assert!(h.facets.iter().all(|f| f.vertex_indices == [0, 1]));
    }

    #[test]
    fn triangle_in_space() {
        let pts = vec![point(&[1, 0, 0]), point(&[0, 2, 0]), point(&[0, 0, 3])];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.affine_dim, 2);
        assert_eq!(normals(&h), vec![point(&[-6, -3, -2]), point(&[6, 3, 2])]);
        assert_eq!(h.facets[1].offset, BigInt::from(6));
    }

    #[test]
    fn single_point() {
        let h = convex_hull(&[point(&[3, 4])]).unwrap();
        assert_eq!(h.affine_dim, 0);
        assert_eq!(h.vertices, vec![0]);
        assert!(h.facets.is_empty());
    }

    #[test]
    fn square_with_interior_and_duplicates() {
        let pts = vec![
            point(&[0, 0]),
            point(&[2, 0]),
            point(&[2, 2]),
            point(&[0, 2]),
            point(&[1, 1]),
            point(&[1, 0]),
            point(&[0, 0]),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.affine_dim, 2);
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
        assert_eq!(h.facets.len(), 4);
        for f in &h.facets {
            assert!(check_facet(&pts, 2, f));
        }
        let bottom = h.facets.iter().find(|f| f.inner_normal.components() == point(&[0, 1])).unwrap();
        assert_eq!(bottom.vertex_indices, vec![0, 1, 5, 6]);
    }

    #[test]
    fn low_dimensional_hull_has_no_facets() {
        let pts = vec![point(&[0, 0, 0]), point(&[1, 1, 1]), point(&[2, 2, 2])];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.affine_dim, 1);
        assert!(h.facets.is_empty());
        assert_eq!(h.vertices, vec![0, 2]);
    }

    #[test]
    fn minimizing_faces() {
        let alpha = |v: &[i64]| primitive(&point(v)).unwrap();
        let seg = vec![point(&[1, 0]), point(&[0, 2])];
        let f = minimizing_face(&seg, &alpha(&[2, 1])).unwrap();
        assert_eq!(f.affine_dim(), Some(1));
        let f = minimizing_face(&seg, &alpha(&[1, 1])).unwrap();
        assert_eq!(f.vertices(), &[point(&[1, 0])]);
        let f = minimizing_face(&[point(&[3, 0]), point(&[0, 2])], &alpha(&[2, 3])).unwrap();
        assert_eq!(f.affine_dim(), Some(1));
        assert_eq!(
            minimizing_face(&seg, &alpha(&[1, 0])),
            Err(Error::NonPositiveCovector)
        );
        assert!(minimizing_face(&[], &alpha(&[1, 1])).unwrap().is_empty());
    }
}
