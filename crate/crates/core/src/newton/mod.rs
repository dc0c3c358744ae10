//! Zeta-functions of deformations from their Newton diagrams.
//!
//! For an index set `I ∋ 0` with `l = |I| − 1`, every strictly positive
//! primitive covector `α` on `ℝ^I` contributes `(1 − t^{α₀})` raised to
//! `(−1)^{l−1} l! V_l(Γ^I_α)`. That volume vanishes unless `Γ^I_α` is
//! `l`-dimensional, so only the facets of the restricted diagram with strictly
//! positive normals contribute and the product is finite.

mod nondegeneracy;
mod oracles;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{deformation_index_sets, restrict_support, GermSeries, IndexSet};
use crate::lattice::{
    convex_hull, minimizing_face, normalized_volume, normalized_volume_at, serialize_points, LatticePolytope,
    Point, PrimitiveCovector,
};
use crate::zeta::FactoredZeta;

pub use nondegeneracy::{
    face_polynomial, nondegeneracy_check, Counterexample, FaceVerdict, NondegeneracyReport, Verdict,
};
pub use oracles::{
    classical_deformation, example1_cone_identity, example2_mixed_volume_identity, pencil_deformation,
    zeta_varchenko_classical, Example2Sides,
};

/// A facet of `Γ^I(F)` with a strictly positive primitive inner normal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramFacet {
    pub index_set: IndexSet,
    /// Covector on `ℝ^I`; component 0 pairs with `k₀`.
    pub normal: PrimitiveCovector,
    /// The minimizing face, in the coordinates of `ℝ^I`.
    pub face: LatticePolytope,
    /// `α(∂/∂k₀)`, the `k₀`-component of the normal.
    pub m: u64,
    /// `l! · V_l(face)`.
    pub nvol: u64,
}

impl DiagramFacet {
    /// `l = |I| − 1`.
    pub fn dim(&self) -> usize {
        self.index_set.len() - 1
    }

    /// `(−1)^{l−1} · nvol`.
    pub fn exponent(&self) -> Result<i64> {
        let e = i64::try_from(self.nvol).map_err(|_| Error::Overflow("facet volume".into()))?;
        Ok(if self.dim() % 2 == 1 { e } else { -e })
    }

    pub fn factor(&self) -> Result<FactoredZeta> {
        FactoredZeta::factor(self.m, self.exponent()?)
    }
}

fn to_u64(x: &BigInt, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow(what.into()))
}

fn check_index_set(germ: &GermSeries, index_set: &IndexSet) -> Result<()> {
    if !index_set.contains_zero() {
        return Err(Error::IndexSet(format!("{index_set} does not contain 0")));
    }
    if index_set.members().last().is_some_and(|&i| i >= germ.num_vars()) {
        return Err(Error::IndexSet(format!(
            "{index_set} out of range for {} variables",
            germ.num_vars()
        )));
    }
    Ok(())
}

/// The restricted support `supp F ∩ ℝ^I` in the coordinates of `ℝ^I`.
pub fn restricted_support(germ: &GermSeries, index_set: &IndexSet) -> Vec<Point> {
    restrict_support(germ.terms().keys(), index_set)
}

/// Facets of `Γ^I(F)` of dimension `|I| − 1` with strictly positive normals,
/// sorted by normal.
pub fn diagram_facets(germ: &GermSeries, index_set: &IndexSet) -> Result<Vec<DiagramFacet>> {
    check_index_set(germ, index_set)?;
    let points = restricted_support(germ, index_set);
    facets_of_points(&points, index_set)
}

pub(crate) fn facets_of_points(points: &[Point], index_set: &IndexSet) -> Result<Vec<DiagramFacet>> {
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let d = index_set.len();
    let l = d - 1;
    let hull = convex_hull(points)?;
    // For a full-dimensional hull these are its facets; for a hull of
    // dimension d − 1 the two normals of its span; otherwise nothing.
    let mut out = Vec::new();
    for facet in hull.facets.iter().filter(|f| f.inner_normal.is_strictly_positive()) {
        let face = minimizing_face(points, &facet.inner_normal)?;
        let nvol = normalized_volume_at(&face, l)?;
        debug_assert!(nvol > BigInt::from(0));
        out.push(DiagramFacet {
            index_set: index_set.clone(),
            normal: facet.inner_normal.clone(),
            m: to_u64(&facet.inner_normal.components()[0], "facet normal")?,
            nvol: to_u64(&nvol, "facet volume")?,
            face,
        });
    }
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(out)
}

/// `ζ_F^I(t)`.
pub fn zeta_i(germ: &GermSeries, index_set: &IndexSet) -> Result<FactoredZeta> {
    product(&diagram_facets(germ, index_set)?)
}

fn product(facets: &[DiagramFacet]) -> Result<FactoredZeta> {
    let mut z = FactoredZeta::one();
    for f in facets {
        z.multiply_factor(f.m, f.exponent()?)?;
    }
    Ok(z)
}

/// Zeta-function of the deformation restricted to the torus `(ℂ*)ⁿ`:
/// `ζ_F^{{0,…,n}}`.
pub fn zeta_torus(germ: &GermSeries) -> Result<FactoredZeta> {
    zeta_i(germ, &IndexSet::full(germ.num_vars()))
}

/// Zeta-function of the deformation on `ℂⁿ`: `(1 − t) · ∏_{I ∋ 0} ζ_F^I`.
pub fn zeta_full(germ: &GermSeries) -> Result<FactoredZeta> {
    Ok(zeta_full_trace(germ)?.full)
}

/// What one index set contributes to [`zeta_full`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexContribution {
    pub index_set: IndexSet,
    #[serde(serialize_with = "serialize_points")]
    pub restricted_support: Vec<Point>,
    pub facets: Vec<DiagramFacet>,
    pub zeta: FactoredZeta,
}

/// The factors of [`zeta_full`] in the order they are multiplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaTrace {
    /// Always `(1 − t)`.
    pub leading: FactoredZeta,
    /// One entry per index set containing 0, in binary order.
    pub contributions: Vec<IndexContribution>,
    pub torus: FactoredZeta,
    pub full: FactoredZeta,
}

pub fn zeta_full_trace(germ: &GermSeries) -> Result<ZetaTrace> {
    let leading = FactoredZeta::factor(1, 1)?;
    let mut full = leading.clone();
    let mut torus = FactoredZeta::one();
    let mut contributions = Vec::new();
    let top = IndexSet::full(germ.num_vars());
    for index_set in deformation_index_sets(germ.num_vars()) {
        let restricted = restricted_support(germ, &index_set);
        let facets = facets_of_points(&restricted, &index_set)?;
        let zeta = product(&facets)?;
        full = full.mul(&zeta);
        if index_set == top {
            torus = zeta.clone();
        }
        contributions.push(IndexContribution {
            index_set,
            restricted_support: restricted,
            facets,
            zeta,
        });
    }
    Ok(ZetaTrace {
        leading,
        contributions,
        torus,
        full,
    })
}

/// `χ` of a generic hypersurface in `(ℂ*)ⁿ` with Newton polytope `P`:
/// `(−1)^{n−1} n! V_n(P)`.
pub fn euler_char_torus_hypersurface(polytope: &LatticePolytope) -> Result<BigInt> {
    let n = polytope.ambient_dim();
    if n == 0 || polytope.affine_dim() != Some(n) {
        return Err(Error::DimensionMismatch(format!(
            "expected a full-dimensional polytope in ℤ^{n}, got dimension {:?}",
            polytope.affine_dim()
        )));
    }
    let v = normalized_volume(polytope);
    Ok(if n % 2 == 1 { v } else { -v })
}
