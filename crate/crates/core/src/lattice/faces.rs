//! Compact faces of the Newton polyhedron `Γ′ = conv(P) + ℝ₊^d`.
//!
//! Let `B` exceed every coordinate sum in `P` and put
//! `Z = conv(P) + conv{0, B·e₁, …, B·e_d}`, a full-dimensional polytope. For
//! a covector `α`, the simplex summand of the face `Z_α` is `{0}` exactly when
//! `α > 0`, so the compact faces of `Γ′` are the faces of `Z` all of whose
//! points come from `P`. Faces of `Z` are intersections of its facets.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::hull::full_dim_facets;
use super::smith::AffineFrame;
use super::{primitive, Point, PrimitiveCovector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactFace {
    /// Indices of the input points on the face.
    pub point_indices: Vec<usize>,
    pub dim: usize,
    /// A strictly positive covector whose minimizing face this is.
    pub normal: PrimitiveCovector,
}

fn dominates(p: &Point, q: &Point) -> bool {
    p != q && p.iter().zip(q).all(|(a, b)| a >= b)
}

/// All compact faces of `conv(points) + ℝ₊^d`, of every dimension, sorted by
/// dimension and then normal.
pub fn compact_faces(points: &[Point]) -> Result<Vec<CompactFace>> {
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    let d = first.len();
    if d == 0 || points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch("compact faces need points of one positive length".into()));
    }
    if let Some(p) = points.iter().find(|p| p.iter().any(|x| x < &BigInt::zero())) {
        return Err(Error::DimensionMismatch(format!("negative exponent in {p:?}")));
    }
    let distinct: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let kept: Vec<Point> = distinct
        .iter()
        .filter(|p| !distinct.iter().any(|q| dominates(p, q)))
        .cloned()
        .collect();
    let bound: BigInt = kept.iter().map(|p| p.iter().sum::<BigInt>()).max().expect("nonempty") + 1;
    let mut candidates = kept.clone();
    for p in &kept {
        for i in 0..d {
            let mut q = p.clone();
            q[i] += &bound;
            candidates.push(q);
        }
    }
    let facets = full_dim_facets(&candidates, d);
    let facet_sets: Vec<BTreeSet<usize>> = facets.iter().map(|f| f.members.iter().copied().collect()).collect();

    let mut seen: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    let mut queue: VecDeque<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    while let Some(face) = queue.pop_front() {
        for g in &facet_sets {
            let meet: BTreeSet<usize> = face.intersection(g).copied().collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                queue.push_back(meet);
            }
        }
    }

    let mut out = Vec::new();
    for face in seen.into_iter().filter(|f| f.iter().all(|&i| i < kept.len())) {
        let mut normal = vec![BigInt::zero(); d];
        for (f, set) in facets.iter().zip(&facet_sets) {
            if face.is_subset(set) {
                for (a, b) in normal.iter_mut().zip(&f.normal) {
                    *a += b;
                }
            }
        }
        let normal = primitive(&normal)?;
        debug_assert!(normal.is_strictly_positive());
        let pts: Vec<Point> = face.iter().map(|&i| kept[i].clone()).collect();
        let dim = AffineFrame::new(&pts).dim();
        let mut point_indices: Vec<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| pts.contains(p))
            .map(|(i, _)| i)
            .collect();
        point_indices.sort_unstable();
        out.push(CompactFace {
            point_indices,
            dim,
            normal,
        });
    }
    out.sort_by(|a, b| (a.dim, &a.normal).cmp(&(b.dim, &b.normal)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::point;

    #[test]
    fn single_monomial_has_one_vertex() {
        let faces = compact_faces(&[point(&[1, 0])]).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].dim, 0);
        assert!(faces[0].normal.is_strictly_positive());
    }

    #[test]
    fn segment_diagram() {
        let pts = vec![point(&[2, 0]), point(&[0, 2]), point(&[3, 3])];
        let faces = compact_faces(&pts).unwrap();
        let dims: Vec<usize> = faces.iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 0, 1]);
        assert_eq!(faces[2].point_indices, vec![0, 1]);
        assert_eq!(faces[2].normal.components(), point(&[1, 1]).as_slice());
    }

    #[test]
    fn cusp_deformation_faces() {
        // z1^2 + z2^3 - s: a triangle with its three edges and vertices.
        let pts = vec![point(&[0, 2, 0]), point(&[0, 0, 3]), point(&[1, 0, 0])];
        let faces = compact_faces(&pts).unwrap();
        let count = |d| faces.iter().filter(|f| f.dim == d).count();
        assert_eq!((count(0), count(1), count(2)), (3, 3, 1));
        let top = faces.iter().find(|f| f.dim == 2).unwrap();
        assert_eq!(top.normal.components(), point(&[6, 3, 2]).as_slice());
    }

    #[test]
    fn non_convenient_support() {
        // Only z1*z2 and s: the diagram is a segment plus two vertices.
        let pts = vec![point(&[0, 1, 1]), point(&[1, 0, 0])];
        let faces = compact_faces(&pts).unwrap();
        let dims: Vec<usize> = faces.iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 0, 1]);
    }
}
