//! Smith normal form and lattice saturation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::{sub, Point};

/// `M = U · D · V` with `U`, `V` unimodular and `D` diagonal,
/// `d₁ | d₂ | … | d_r`, `d_i > 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`.
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

// Each elementary operation on `a` is mirrored on the transforms so that
// `M = u · a · v` and `v · v_inv = 1` hold throughout.
impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_rows(i, j);
        self.v_inv.swap_cols(i, j);
    }

    /// row i += c · row j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_row_multiple(i, j, c);
        self.u.add_col_multiple(j, i, &-c);
    }

    /// col i += c · col j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        self.a.add_col_multiple(i, j, c);
        self.v.add_row_multiple(j, i, &-c);
        self.v_inv.add_col_multiple(i, j, c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_col(i);
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Smith normal form with both transforms and the inverse of the right one.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = w.min_nonzero(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = &w.a[(i, t)] / &w.a[(t, t)];
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = &w.a[(t, j)] / &w.a[(t, t)];
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = w.min_nonzero_in_cross(t);
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            // Divisibility: fold an offending row into row t and repeat.
            let pivot = w.a[(t, t)].clone();
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&w.a[(i, j)] % &pivot).is_zero()));
            match offending {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        rank += 1;
    }
    SmithForm {
        u: w.u,
        d: w.a,
        v: w.v,
        v_inv: w.v_inv,
        rank,
    }
}

impl Work {
    /// Smallest nonzero entry in row `t` or column `t` (from `t` on).
    fn min_nonzero_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<BigInt> = None;
        let candidates = (t..self.a.rows())
            .map(|i| (i, t))
            .chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in candidates {
            let x = self.a[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best_abs.as_ref().is_none_or(|b| &x < b) {
                best = (i, j);
                best_abs = Some(x);
            }
        }
        best
    }
}

/// Basis of `span_ℝ(vectors) ∩ ℤ^d`, the saturation of the lattice they
/// generate.
pub fn saturation_basis(vectors: &[Point], dim: usize) -> Vec<Point> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(vectors, dim));
    (0..snf.rank).map(|i| snf.v.row(i)).collect()
}

/// Integer affine coordinates on the lattice `(origin + span) ∩ ℤ^d`, where
/// `span` is the real span of the differences of the given points.
#[derive(Clone, Debug)]
pub struct AffineFrame {
    origin: Point,
    basis: Vec<Point>,
    v_inv: IntMatrix,
}

impl AffineFrame {
    /// Panics on an empty point list.
    pub fn new(points: &[Point]) -> Self {
        let origin = points[0].clone();
        let dim = origin.len();
        let diffs: Vec<Point> = points[1..].iter().map(|p| sub(p, &origin)).collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(&diffs, dim));
        let basis = (0..snf.rank).map(|i| snf.v.row(i)).collect();
        AffineFrame {
            origin,
            basis,
            v_inv: snf.v_inv,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Point] {
        &self.basis
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    /// Coordinates of `p` in the saturation basis. Returns `None` when `p`
    /// is not on the affine lattice.
    pub fn coordinates(&self, p: &[BigInt]) -> Option<Point> {
        let diff = sub(p, &self.origin);
        let d = diff.len();
        let y: Point = (0..d)
            .map(|j| (0..d).map(|k| &diff[k] * &self.v_inv[(k, j)]).sum())
            .collect();
        if y[self.dim()..].iter().any(|c: &BigInt| !c.is_zero()) {
            return None;
        }
        Some(y[..self.dim()].to_vec())
    }

    pub fn to_ambient(&self, coords: &[BigInt]) -> Point {
        let mut p = self.origin.clone();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in p.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        p
    }
}
