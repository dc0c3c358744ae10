//! Polynomial germs `F(σ, z₁, …, z_n)` with exact rational coefficients.
//!
//! Coordinate 0 is always the deformation parameter σ. Only the support of a
//! germ enters the zeta formulas, so a polynomial truncation that contains all
//! vertices of the Newton diagram gives the same answer as the full series.

mod json;
mod names;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Point;

pub use json::{GermJson, TermJson};
pub use names::{infer_vars, DEFAULT_SIGMA};
pub use parse::{parse_germ, parse_polynomial};

/// Exponents `(k₀, k₁, …, k_n)` of a monomial `σ^{k₀} z₁^{k₁} … z_n^{k_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// Exponent of σ.
    pub fn deformation_degree(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn to_point(&self) -> Point {
        self.0.iter().map(|&k| BigInt::from(k)).collect()
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Default variable names `s, z1, …, z_n` for `num_vars = n + 1`.
pub fn default_var_names(num_vars: usize) -> Vec<String> {
    let mut names = vec!["s".to_string()];
    names.extend((1..num_vars).map(|i| format!("z{i}")));
    names.truncate(num_vars);
    names
}

/// A polynomial with rational coefficients in named variables. Constant terms
/// are allowed here; [`GermSeries`] adds the germ invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, collecting
    /// equal monomials and dropping zero coefficients.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (exp, coef) in terms {
            if exp.len() != p.vars.len() {
                return Err(Error::ExponentLength {
                    expected: p.vars.len(),
                    got: exp.len(),
                });
            }
            p.add_term(exp, coef);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, coef: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                if !coef.is_zero() {
                    v.insert(coef);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Option<&BigRational> {
        self.terms.get(exp)
    }

    pub fn constant_term(&self) -> Option<&BigRational> {
        self.terms.get(&ExponentVector::zero(self.vars.len()))
    }

    /// True when some term has a positive power of σ.
    pub fn depends_on_deformation(&self) -> bool {
        self.terms.keys().any(|e| e.deformation_degree() > 0)
    }

    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        let terms = if factor.is_zero() {
            BTreeMap::new()
        } else {
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect()
        };
        Polynomial {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(shift), c.clone()))
                .collect(),
        }
    }

    /// Sub-sum over the given exponents.
    pub fn restrict_to<'a, I>(&self, exps: I) -> Polynomial
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        let mut out = Polynomial::zero(self.vars.clone());
        for e in exps {
            if let Some(c) = self.terms.get(e) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn with_vars(&self, vars: Vec<String>) -> Result<Polynomial> {
        if vars.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} names for {} variables",
                vars.len(),
                self.vars.len()
            )));
        }
        Ok(Polynomial {
            vars,
            terms: self.terms.clone(),
        })
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.entries()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Formal partial derivative in variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let k = e.entries()[var];
            if k == 0 {
                continue;
            }
            let mut entries = e.entries().to_vec();
            entries[var] -= 1;
            out.add_term(ExponentVector(entries), c * BigRational::from_integer(k.into()));
        }
        out
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.vars.len() != other.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {} variables",
                self.vars.len(),
                other.vars.len()
            )));
        }
        Ok(())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, coef)) in self.terms.iter().enumerate() {
            let negative = coef.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = coef.abs();
            let factors: Vec<String> = exp
                .entries()
                .iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| {
                    if k == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write_rational(f, &magnitude)?;
            } else {
                if !magnitude.is_one() {
                    write_rational(f, &magnitude)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A polynomial germ `F` on `(ℂ^{n+1}, 0)`: at least one term, no zero
/// coefficients, `F(0) = 0`, and `n ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermSeries(Polynomial);

impl GermSeries {
    pub fn new(poly: Polynomial) -> Result<Self> {
        if poly.num_vars() < 2 {
            return Err(Error::TooFewVariables(poly.num_vars()));
        }
        if let Some(c) = poly.constant_term() {
            return Err(Error::ConstantTerm(c.to_string()));
        }
        if poly.is_zero() {
            return Err(Error::EmptyGerm);
        }
        Ok(GermSeries(poly))
    }

    /// Builds a germ with default variable names from integer coefficients.
    pub fn from_integer_terms(num_vars: usize, terms: &[(Vec<u32>, i64)]) -> Result<Self> {
        let poly = Polynomial::from_terms(
            default_var_names(num_vars),
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.clone()), BigRational::from_integer((*c).into()))),
        )?;
        GermSeries::new(poly)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.num_vars()
    }

    /// Number `n` of z-variables.
    pub fn n(&self) -> usize {
        self.0.num_vars() - 1
    }

    pub fn vars(&self) -> &[String] {
        self.0.vars()
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        self.0.terms()
    }
}

impl AsRef<Polynomial> for GermSeries {
    fn as_ref(&self) -> &Polynomial {
        &self.0
    }
}

impl fmt::Display for GermSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The exponent vectors with nonzero coefficient.
pub fn support(germ: &GermSeries) -> BTreeSet<ExponentVector> {
    germ.polynomial().support()
}

/// A nonempty sorted subset `I ⊂ {0, 1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut members: Vec<usize>, num_vars: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::IndexSet("empty index set".into()));
        }
        if let Some(&bad) = members.iter().find(|&&i| i >= num_vars) {
            return Err(Error::IndexSet(format!(
                "index {bad} out of range for {num_vars} variables"
            )));
        }
        Ok(IndexSet(members))
    }

    pub fn full(num_vars: usize) -> Self {
        IndexSet((0..num_vars).collect())
    }

    /// `{0} ∪ {i : bit i−1 of mask set}`.
    pub fn from_mask(mask: u64, num_vars: usize) -> Self {
        let mut members = vec![0];
        members.extend((1..num_vars).filter(|i| mask >> (i - 1) & 1 == 1));
        IndexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.0.first() == Some(&0)
    }

    /// Members other than 0.
    pub fn without_zero(&self) -> Vec<usize> {
        self.0.iter().copied().filter(|&i| i != 0).collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All index sets containing 0, in binary order of the remaining members.
pub fn deformation_index_sets(num_vars: usize) -> Vec<IndexSet> {
    let n = num_vars.saturating_sub(1);
    (0..1u64 << n).map(|mask| IndexSet::from_mask(mask, num_vars)).collect()
}

/// Points of `support` lying in `ℝ^I`, with the coordinates outside `I`
/// dropped, sorted and deduplicated.
///
/// Exponents are nonnegative, so `(conv(S) + ℝ₊^{n+1}) ∩ ℝ^I` equals
/// `conv(S ∩ ℝ^I) + ℝ₊^I`: restricting the support commutes with taking the
/// Newton polyhedron.
pub fn restrict_support<'a, S>(support: S, index_set: &IndexSet) -> Vec<Point>
where
    S: IntoIterator<Item = &'a ExponentVector>,
{
    let members = index_set.members();
    let set: BTreeSet<Point> = support
        .into_iter()
        .filter(|e| {
            e.entries()
                .iter()
                .enumerate()
                .all(|(i, &k)| k == 0 || index_set.contains(i))
        })
        .map(|e| members.iter().map(|&i| BigInt::from(e.entries()[i])).collect())
        .collect();
    set.into_iter().collect()
}
