//! Random generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use newton_zeta::germ::{default_var_names, ExponentVector, GermSeries, Polynomial};
use newton_zeta::lattice::{point, IntMatrix, Point};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn nonzero_coefficient<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=5);
        if n != 0 {
            return BigRational::new(n.into(), d.into());
        }
    }
}

fn build(num_vars: usize, terms: BTreeMap<Vec<u32>, BigRational>) -> Polynomial {
    Polynomial::from_terms(
        default_var_names(num_vars),
        terms.into_iter().map(|(e, c)| (ExponentVector::new(e), c)),
    )
    .expect("exponents have the right length")
}

/// A germ in `z₁ … z_n` only (σ-exponent 0) that meets every `z`-axis,
/// with exponents at most `max_exp`.
pub fn convenient_f<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> GermSeries {
    let mut terms = BTreeMap::new();
    for i in 1..=n {
        let mut e = vec![0; n + 1];
        e[i] = rng.gen_range(1..=max_exp);
        terms.insert(e, nonzero_coefficient(rng));
    }
    for _ in 0..rng.gen_range(0..=4) {
        let mut e = vec![0; n + 1];
        for x in e.iter_mut().skip(1) {
            *x = rng.gen_range(0..=max_exp / 2);
        }
        if e.iter().any(|&x| x > 0) {
            terms.insert(e, nonzero_coefficient(rng));
        }
    }
    GermSeries::new(build(n + 1, terms)).expect("nonconstant germ")
}

/// A polynomial in `z₁ … z_n` with `1..=max_terms` terms, possibly constant.
pub fn z_polynomial<R: Rng>(rng: &mut R, n: usize, max_exp: u32, max_terms: usize) -> Polynomial {
    let mut terms = BTreeMap::new();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut e = vec![0; n + 1];
        for x in e.iter_mut().skip(1) {
            *x = rng.gen_range(0..=max_exp);
        }
        terms.insert(e, nonzero_coefficient(rng));
    }
    build(n + 1, terms)
}

/// An arbitrary deformation germ in `σ, z₁ … z_n`.
pub fn deformation<R: Rng>(rng: &mut R, n: usize, max_exp: u32) -> GermSeries {
    loop {
        let mut terms = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=6) {
            let e: Vec<u32> = (0..=n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                terms.insert(e, nonzero_coefficient(rng));
            }
        }
        // Bias towards germs with a σ-axis point so that ζ^{{0}} is nontrivial.
        if rng.gen_bool(0.6) {
            let mut e = vec![0; n + 1];
            e[0] = rng.gen_range(1..=max_exp);
            terms.insert(e, nonzero_coefficient(rng));
        }
        if let Ok(g) = GermSeries::new(build(n + 1, terms)) {
            return g;
        }
    }
}

/// Moves exponent entry `perm[i]` to position `i` in a germ with
/// `num_vars` variables; positions past `perm` get exponent 0.
pub fn relabel(germ: &GermSeries, num_vars: usize, perm: &[usize]) -> GermSeries {
    let terms = germ.terms().iter().map(|(e, c)| {
        let entries: Vec<u32> = (0..num_vars)
            .map(|i| perm.get(i).map_or(0, |&j| e.entries()[j]))
            .collect();
        (ExponentVector::new(entries), c.clone())
    });
    GermSeries::new(Polynomial::from_terms(default_var_names(num_vars), terms).unwrap()).unwrap()
}

/// Same support, fresh independent nonzero coefficients.
pub fn recoefficient<R: Rng>(rng: &mut R, germ: &GermSeries) -> GermSeries {
    let terms: Vec<(ExponentVector, BigRational)> =
        germ.terms().keys().map(|e| (e.clone(), nonzero_coefficient(rng))).collect();
    GermSeries::new(Polynomial::from_terms(germ.vars().to_vec(), terms).unwrap()).unwrap()
}

/// A uniformly random permutation of `1..=n` with 0 fixed.
pub fn z_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut tail: Vec<usize> = (1..=n).collect();
    tail.shuffle(rng);
    std::iter::once(0).chain(tail).collect()
}

/// Determinant by the Leibniz formula over all permutations.
pub fn leibniz_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let term: BigInt = (0..n).map(|i| rows[i][perm[i]].clone()).product();
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

/// `k!·V_k` of the simplex `conv(v₀, …, v_k)` in the lattice of its span:
/// the gcd of the maximal minors of its edge matrix.
pub fn simplex_volume_oracle(vertices: &[Point]) -> BigInt {
    let k = vertices.len() - 1;
    let d = vertices[0].len();
    let edges: Vec<Point> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(&vertices[0]).map(|(a, b)| a - b).collect())
        .collect();
    if k == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for cols in itertools::Itertools::combinations(0..d, k) {
        let minor: Vec<Vec<BigInt>> = edges.iter().map(|e| cols.iter().map(|&c| e[c].clone()).collect()).collect();
        g = g.gcd(&leibniz_det(&minor));
    }
    g
}

/// `k` affinely independent points in `ℤ^d` with small coordinates.
pub fn random_simplex<R: Rng>(rng: &mut R, d: usize, k: usize) -> Vec<Point> {
    loop {
        let pts: Vec<Point> = (0..=k)
            .map(|_| (0..d).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
            .collect();
        if !simplex_volume_oracle(&pts).is_zero() {
            return pts;
        }
    }
}

/// A random matrix in `GL_d(ℤ)` built from elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, d: usize) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    for _ in 0..3 * d + 2 {
        let i = rng.gen_range(0..d);
        let j = rng.gen_range(0..d);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let c = BigInt::from(rng.gen_range(-2..=2));
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&src) {
                    *x += y * &c;
                }
            }
            1 => rows.swap(i, j),
            _ => rows[i].iter_mut().for_each(|x| *x = -&*x),
        }
    }
    IntMatrix::from_rows(&rows, d)
}

pub fn apply(m: &IntMatrix, p: &[BigInt]) -> Point {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| &m[(i, j)] * &p[j]).sum())
        .collect()
}

pub fn random_points<R: Rng>(rng: &mut R, d: usize, count: usize, range: i64) -> Vec<Point> {
    (0..count)
        .map(|_| point(&(0..d).map(|_| rng.gen_range(-range..=range)).collect::<Vec<_>>()))
        .collect()
}

pub fn binomial(m: usize, j: usize) -> BigInt {
    let f = |n: usize| (1..=n).map(BigInt::from).product::<BigInt>();
    f(m) / (f(j) * f(m - j))
}

pub fn is_nonnegative(x: &BigInt) -> bool {
    !x.is_negative()
}
