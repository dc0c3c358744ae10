//! Face polynomials and a partial non-degeneracy check.
//!
//! On an edge `[a, a + g·v]` with `v` primitive, the face polynomial is
//! `x^a · p(x^v)` for a univariate `p` of degree `g` with `p(0) ≠ 0`. On the
//! torus its differential vanishes at a zero exactly when `p` has a multiple
//! root there, so the edge is non-degenerate iff `gcd(p, p′)` is constant.
//! Higher-dimensional faces would need elimination and are left unchecked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{ExponentVector, GermSeries};
use crate::lattice::{compact_faces, minimizing_face, serialize_points, sub, Point, PrimitiveCovector};

/// The part of `F` supported on the face where `α` is minimal.
pub fn face_polynomial(germ: &GermSeries, alpha: &PrimitiveCovector) -> Result<GermSeries> {
    if alpha.dim() != germ.num_vars() {
        return Err(Error::DimensionMismatch(format!(
            "covector of length {} for {} variables",
            alpha.dim(),
            germ.num_vars()
        )));
    }
    let points: Vec<Point> = germ.terms().keys().map(ExponentVector::to_point).collect();
    let face = minimizing_face(&points, alpha)?;
    let min = alpha.apply(&face.vertices()[0]);
    let on_face = germ.terms().keys().filter(|e| alpha.apply(&e.to_point()) == min);
    GermSeries::new(germ.polynomial().restrict_to(on_face))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Coefficients of `gcd(p, p′)`, constant term first, monic.
    pub repeated_factor: Vec<String>,
    /// A point of `(ℚ*)^{n+1}` where the face polynomial and all of its
    /// partial derivatives vanish, when the repeated factor has a rational
    /// root.
    pub torus_point: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    CounterexampleFound(Counterexample),
    Unchecked { dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceVerdict {
    pub normal: PrimitiveCovector,
    pub dim: usize,
    #[serde(serialize_with = "serialize_points")]
    pub points: Vec<Point>,
    pub face_polynomial: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NondegeneracyReport {
    pub faces: Vec<FaceVerdict>,
}

impl NondegeneracyReport {
    pub fn has_counterexample(&self) -> bool {
        self.faces
            .iter()
            .any(|f| matches!(f.verdict, Verdict::CounterexampleFound(_)))
    }

    pub fn unchecked(&self) -> usize {
        self.faces
            .iter()
            .filter(|f| matches!(f.verdict, Verdict::Unchecked { .. }))
            .count()
    }

    pub fn all_verified(&self) -> bool {
        self.faces.iter().all(|f| f.verdict == Verdict::Verified)
    }
}

/// Checks every compact face of the Newton diagram of `F`. Faces of the
/// restricted diagrams `Γ^I` are among these.
pub fn nondegeneracy_check(germ: &GermSeries) -> Result<NondegeneracyReport> {
    let exps: Vec<&ExponentVector> = germ.terms().keys().collect();
    let points: Vec<Point> = exps.iter().map(|e| e.to_point()).collect();
    let mut faces = Vec::new();
    for face in compact_faces(&points)? {
        let on_face: Vec<&ExponentVector> = face.point_indices.iter().map(|&i| exps[i]).collect();
        let poly = germ.polynomial().restrict_to(on_face.iter().copied());
        let face_points: Vec<Point> = face.point_indices.iter().map(|&i| points[i].clone()).collect();
        let verdict = match face.dim {
            0 => Verdict::Verified,
            1 => check_edge(germ, &face_points, &on_face)?,
            dim => Verdict::Unchecked { dim },
        };
        faces.push(FaceVerdict {
            normal: face.normal,
            dim: face.dim,
            points: face_points,
            face_polynomial: poly.to_string(),
            verdict,
        });
    }
    Ok(NondegeneracyReport { faces })
}

fn check_edge(germ: &GermSeries, points: &[Point], exps: &[&ExponentVector]) -> Result<Verdict> {
    let a = points.iter().min().expect("an edge has points");
    let b = points.iter().max().expect("an edge has points");
    let diff = sub(b, a);
    let g = diff.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let v: Point = diff.iter().map(|x| x / &g).collect();
    let pivot = v.iter().position(|x| !x.is_zero()).expect("edge endpoints differ");
    let degree = usize::try_from(&g).map_err(|_| Error::Overflow("edge length".into()))?;

    let mut p = vec![BigRational::zero(); degree + 1];
    for (pt, e) in points.iter().zip(exps) {
        let j = (&pt[pivot] - &a[pivot]) / &v[pivot];
        let j = usize::try_from(&j).expect("face points lie on the edge");
        p[j] = germ.terms()[*e].clone();
    }
    let repeated = poly_gcd(&p, &derivative(&p));
    if repeated.len() <= 1 {
        return Ok(Verdict::Verified);
    }
    let torus_point = rational_root(&repeated).and_then(|r| {
        let point = torus_point_on_edge(&v, &r);
        let face_poly = germ.polynomial().restrict_to(exps.iter().copied());
        let vanishes = face_poly.evaluate(&point).is_zero()
            && (0..germ.num_vars()).all(|i| face_poly.derivative(i).evaluate(&point).is_zero());
        debug_assert!(vanishes);
        vanishes.then(|| point.iter().map(ToString::to_string).collect())
    });
    Ok(Verdict::CounterexampleFound(Counterexample {
        repeated_factor: repeated.iter().map(ToString::to_string).collect(),
        torus_point,
    }))
}

/// `x` with `x^v = r`: take `w` with `w·v = 1` and set `x_i = r^{w_i}`.
fn torus_point_on_edge(v: &[BigInt], r: &BigRational) -> Vec<BigRational> {
    let mut g = BigInt::zero();
    let mut w = vec![BigInt::zero(); v.len()];
    for (i, vi) in v.iter().enumerate() {
        let e = g.extended_gcd(vi);
        for wj in w.iter_mut() {
            *wj *= &e.x;
        }
        w[i] += &e.y;
        g = e.gcd;
    }
    if g.is_negative() {
        w.iter_mut().for_each(|x| *x = -&*x);
    }
    w.iter()
        .map(|wi| {
            let k = i32::try_from(wi).expect("Bezout coefficients are small");
            num_traits::Pow::pow(r, k)
        })
        .collect()
}

// Univariate polynomials over ℚ, constant term first, no trailing zeros.

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * BigRational::from_integer(j.into()))
            .collect(),
    )
}

fn remainder(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn monic(p: Vec<BigRational>) -> Vec<BigRational> {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = remainder(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Divisors of `|n|` by trial division, when `|n|` is small enough.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = u64::try_from(n.abs()).ok().filter(|&n| n > 0 && n <= 1 << 40)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Some rational root of `p`, found by the rational root theorem.
fn rational_root(p: &[BigRational]) -> Option<BigRational> {
    if p.len() == 2 {
        return Some(-&p[0] / &p[1]);
    }
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let nums = small_divisors(&ints[0])?;
    let dens = small_divisors(ints.last().expect("nonconstant"))?;
    for q in &dens {
        for n in &nums {
            for r in [BigRational::new(n.clone(), q.clone()), BigRational::new(-n, q.clone())] {
                if eval(p, &r).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}
