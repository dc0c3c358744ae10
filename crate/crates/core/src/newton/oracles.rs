//! Two reductions that recompute a facet's data from simpler objects.
//!
//! For `F = f − σ` every facet of `Γ^I(F)` is a pyramid of lattice height 1
//! over a face of `Γ^{I∖{0}}(f)`. For `F = f₀ − σ f₁` every facet is the
//! Cayley polytope of faces `Δ₀` of `f₀` and `Δ₁` of `f₁` at heights 0 and 1,
//! whose volume expands into mixed volumes of `Δ₀` and `Δ₁`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{zeta_full, DiagramFacet};
use crate::error::{Error, Result};
use crate::germ::{restrict_support, ExponentVector, GermSeries, IndexSet, Polynomial};
use crate::lattice::{minimizing_face, normalized_volume_at, pencil_mixed_volumes, LatticePolytope, Point};
use crate::zeta::FactoredZeta;

fn sigma(num_vars: usize) -> ExponentVector {
    let mut e = vec![0; num_vars];
    e[0] = 1;
    ExponentVector::new(e)
}

/// `f − σ` for a germ `f` not involving σ.
pub fn classical_deformation(f: &GermSeries) -> Result<GermSeries> {
    if f.polynomial().depends_on_deformation() {
        return Err(Error::DependsOnDeformation);
    }
    let s = Polynomial::from_terms(f.vars().to_vec(), [(sigma(f.num_vars()), BigRational::one())])?;
    GermSeries::new(f.polynomial().sub(&s)?)
}

/// `f₀ − σ f₁`; neither may involve σ, and `f₁` may have a constant term.
pub fn pencil_deformation(f0: &GermSeries, f1: &Polynomial) -> Result<GermSeries> {
    if f0.polynomial().depends_on_deformation() || f1.depends_on_deformation() {
        return Err(Error::DependsOnDeformation);
    }
    if f1.vars() != f0.vars() {
        return Err(Error::DimensionMismatch("f0 and f1 use different variables".into()));
    }
    GermSeries::new(f0.polynomial().sub(&f1.shift(&sigma(f0.num_vars())))?)
}

/// Ordinary monodromy zeta-function of `f`, as the deformation `f − σ`.
pub fn zeta_varchenko_classical(f: &GermSeries) -> Result<FactoredZeta> {
    zeta_full(&classical_deformation(f)?)
}

/// Points of the facet at height `k₀ = h`, with `k₀` dropped.
fn slice(face: &LatticePolytope, h: i64) -> Vec<Point> {
    face.vertices()
        .iter()
        .filter(|v| v[0] == BigInt::from(h))
        .map(|v| v[1..].to_vec())
        .collect()
}

fn base_data(
    poly: &Polynomial,
    index_set: &IndexSet,
    facet: &DiagramFacet,
) -> Result<(LatticePolytope, BigInt)> {
    let rest = IndexSet::new(index_set.without_zero(), poly.num_vars())?;
    let points = restrict_support(poly.terms().keys(), &rest);
    let alpha = facet.normal.without(&[0])?;
    let min = points
        .iter()
        .map(|p| alpha.apply(p))
        .min()
        .ok_or_else(|| Error::Inapplicable(format!("no support of the base on ℝ^{}", rest)))?;
    Ok((minimizing_face(&points, &alpha)?, min))
}

fn check_facet_set(index_set: &IndexSet, facet: &DiagramFacet) -> Result<usize> {
    if &facet.index_set != index_set {
        return Err(Error::IndexSet(format!(
            "facet belongs to {} but {} was given",
            facet.index_set, index_set
        )));
    }
    Ok(facet.dim())
}

/// For a facet of `Γ^I(f − σ)`: `l! V_l(facet)` equals `(l−1)! V_{l−1}` of
/// the base face of `Γ^{I∖{0}}(f)`, and `m` equals `min α|` on that diagram.
pub fn example1_cone_identity(f: &GermSeries, index_set: &IndexSet, facet: &DiagramFacet) -> Result<bool> {
    if f.polynomial().depends_on_deformation() {
        return Err(Error::DependsOnDeformation);
    }
    let l = check_facet_set(index_set, facet)?;
    if l == 0 {
        return Err(Error::Inapplicable("a cone needs l ≥ 1".into()));
    }
    let mut apex = vec![BigInt::zero(); l + 1];
    apex[0] = BigInt::one();
    if !facet.face.contains_vertex(&apex) {
        return Err(Error::Inapplicable("the facet is not a cone over the base".into()));
    }
    let (base, min) = base_data(f.polynomial(), index_set, facet)?;
    let base_vol = normalized_volume_at(&base, l - 1)?;
    let same_base = slice(&facet.face, 0) == base.vertices();
    Ok(same_base && BigInt::from(facet.nvol) == base_vol && BigInt::from(facet.m) == min)
}

/// Both sides of the mixed-volume identity for one facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Example2Sides {
    /// `l · V_l(facet)`.
    pub volume_side: String,
    /// `Σ_j V_{l−1}(Δ₀^{l−1−j}, Δ₁^j)`.
    pub mixed_side: String,
    pub m: u64,
    /// `min α|Γ(f₀) − min α|Γ(f₁)`.
    pub minima_difference: String,
    pub holds: bool,
}

/// For a facet of `Γ^I(f₀ − σf₁)` with `l = |I| − 1 > 1`:
/// `l V_l(facet) = Σ_{j} V_{l−1}(Δ₀^{(l−1−j)}, Δ₁^{(j)})` and
/// `m = min α|Γ(f₀) − min α|Γ(f₁)`.
pub fn example2_mixed_volume_identity(
    f0: &GermSeries,
    f1: &Polynomial,
    index_set: &IndexSet,
    facet: &DiagramFacet,
) -> Result<Example2Sides> {
    if f0.polynomial().depends_on_deformation() || f1.depends_on_deformation() {
        return Err(Error::DependsOnDeformation);
    }
    let l = check_facet_set(index_set, facet)?;
    if l <= 1 {
        return Err(Error::Inapplicable("the mixed-volume identity needs l > 1".into()));
    }
    if facet.face.vertices().iter().any(|v| v[0] > BigInt::one()) {
        return Err(Error::Inapplicable("the facet has points above height 1".into()));
    }
    let (delta0, min0) = base_data(f0.polynomial(), index_set, facet)?;
    let (delta1, min1) = base_data(f1, index_set, facet)?;

    let cayley: Vec<Point> = delta0
        .vertices()
        .iter()
        .map(|v| [vec![BigInt::zero()], v.clone()].concat())
        .chain(delta1.vertices().iter().map(|v| [vec![BigInt::one()], v.clone()].concat()))
        .collect();
    let same_facet = LatticePolytope::from_points(l + 1, &cayley)? == facet.face;

    let factorial: BigInt = (1..l).map(BigInt::from).product();
    let volume_side = BigRational::new(BigInt::from(facet.nvol), factorial);
    let mixed_side: BigRational = pencil_mixed_volumes(&delta0, &delta1, l - 1)?.into_iter().sum();
    let difference = &min0 - &min1;
    let holds = same_facet && volume_side == mixed_side && BigInt::from(facet.m) == difference;
    Ok(Example2Sides {
        volume_side: volume_side.to_string(),
        mixed_side: mixed_side.to_string(),
        m: facet.m,
        minima_difference: difference.to_string(),
        holds,
    })
}
