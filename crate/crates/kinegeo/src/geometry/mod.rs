//! Tensor fields with rational components: metrics (possibly degenerate),
//! contravariant metrics, connections, curvature, Lie derivatives, signature
//! analysis and pullbacks under rational coordinate maps.

mod calculus;
mod domain;
mod map;
mod signature;
mod tensor;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{q, Point, Rational, RationalFn, Var};
use crate::liefields::VectorField;

pub use calculus::{
    christoffel_from_metric, constant_curvature_model, contract_gh, lie_derivative_connection,
    lie_derivative_contravariant, lie_derivative_covariant, nabla_contravariant, nabla_covariant, ricci,
    riemann, weyl_projective, Derivs,
};
pub use domain::{domains_agree, sample_domain, DomainCond};
pub use map::{pullback, RationalMap};
pub use signature::{signature_rank, SignatureDescriptor};
pub use tensor::{Connection, Symmetry, TensorField};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("metric is degenerate as a rational-function matrix")]
    DegenerateMetric,
    #[error("coordinate map is not invertible: {0}")]
    NonInvertibleMap(String),
    #[error("signature differs between sample points: {0} vs {1}")]
    InconsistentSignature(String, String),
    #[error("sample point {0} lies outside the domain")]
    PointOutsideDomain(String),
    #[error("no domain point found after {0} attempts")]
    EmptyDomain(usize),
}

/// A named `(g, h, Γ)` triple with its domain and declared invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub name: String,
    pub title: String,
    /// Name of the algebra whose generators leave the triple invariant.
    pub algebra: String,
    pub g: TensorField,
    pub h: TensorField,
    pub conn: Connection,
    /// Conjunction of strict inequalities.
    pub domain: Vec<DomainCond>,
    pub ranks: (usize, usize),
    pub signature: SignatureDescriptor,
    pub free_parameters: Vec<RationalFn>,
    /// Curvature constant `k` as a multiple of `l⁻²`.
    pub curvature: Rational,
    pub witness: Option<Point>,
    /// Explicit vector fields annihilated by `g`.
    pub g_kernel: Vec<VectorField>,
}

impl Geometry {
    pub fn is_nondegenerate(&self) -> bool {
        self.ranks == (4, 4)
    }

    /// `k` as a rational function of `l`.
    pub fn curvature_fn(&self) -> RationalFn {
        RationalFn::constant(self.curvature.clone()).mul(&RationalFn::var(Var::L).pow(-2).expect("l ≠ 0"))
    }

    pub fn in_domain(&self, p: &Point) -> bool {
        domain::contains(&self.domain, p)
    }
}

/// First nonvanishing component of a tensor that should vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub tensor: String,
    pub index: Vec<usize>,
    pub value: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(|i| i.to_string()).collect();
        write!(f, "{}[{}] = {} ≠ 0", self.tensor, idx.join("]["), self.value)
    }
}

fn expect_zero(t: &TensorField, label: impl Into<String>) -> Result<(), Mismatch> {
    match t.first_nonzero() {
        None => Ok(()),
        Some((index, v)) => Err(Mismatch { tensor: label.into(), index, value: v.to_string() }),
    }
}

/// `∇g = 0` and `∇h = 0`.
pub fn compat_failure(geo: &Geometry) -> Result<(), Mismatch> {
    expect_zero(&nabla_covariant(&geo.g, &geo.conn), "nabla g")?;
    expect_zero(&nabla_contravariant(&geo.h, &geo.conn), "nabla h")
}

pub fn compat_check(geo: &Geometry) -> bool {
    compat_failure(geo).is_ok()
}

/// Cached derivatives of a geometry's tensors for repeated Lie derivatives.
pub struct KillingCache<'a> {
    geo: &'a Geometry,
    dg: Derivs,
    dh: Derivs,
    dconn: Derivs,
}

impl<'a> KillingCache<'a> {
    pub fn new(geo: &'a Geometry) -> KillingCache<'a> {
        KillingCache {
            geo,
            dg: Derivs::of(geo.g.comps()),
            dh: Derivs::of(geo.h.comps()),
            dconn: Derivs::of(geo.conn.as_tensor().comps()),
        }
    }

    /// `ℒ_ξ g = ℒ_ξ h = ℒ_ξ Γ = 0`.
    pub fn check(&self, xi: &VectorField, label: &str) -> Result<(), Mismatch> {
        expect_zero(&lie_derivative_covariant(xi, &self.geo.g, &self.dg), format!("L_{} g", label))?;
        expect_zero(&lie_derivative_contravariant(xi, &self.geo.h, &self.dh), format!("L_{} h", label))?;
        expect_zero(&lie_derivative_connection(xi, &self.geo.conn, &self.dconn), format!("L_{} Gamma", label))
    }
}

/// Curvature has the constant-curvature form with the declared `k`, and the
/// Weyl projective tensor vanishes.
pub fn curvature_failure(geo: &Geometry) -> Result<(), Mismatch> {
    let riem = riemann(&geo.conn);
    let ric = ricci(&riem);
    if geo.curvature == q(0) {
        expect_zero(&riem, "Riemann")?;
    } else {
        let model = constant_curvature_model(&geo.g, &geo.curvature_fn());
        expect_zero(&riem.sub(&model), "Riemann - k(delta g - delta g)")?;
        let three_k_g = geo.g.scale_fn(&geo.curvature_fn().scale(&q(3)));
        expect_zero(&ric.sub(&three_k_g), "Ricci - 3k g")?;
    }
    expect_zero(&weyl_projective(&riem, &ric), "Weyl projective")
}

/// For nondegenerate rows: `g h = 1` and `Γ` is the Levi-Civita connection of `g`.
pub fn nondegenerate_failure(geo: &Geometry) -> Result<(), Mismatch> {
    let gh = contract_gh(&geo.g, &geo.h);
    for (m, row) in gh.iter().enumerate() {
        for (n, v) in row.iter().enumerate() {
            let want = if m == n { RationalFn::one() } else { RationalFn::zero() };
            if !v.sub(&want).is_zero() {
                return Err(Mismatch { tensor: "g h - 1".into(), index: vec![m, n], value: v.sub(&want).to_string() });
            }
        }
    }
    let lc = christoffel_from_metric(&geo.g)
        .map_err(|e| Mismatch { tensor: "Levi-Civita".into(), index: vec![], value: e.to_string() })?;
    expect_zero(&lc.as_tensor().sub(&geo.conn.as_tensor()), "Gamma - LeviCivita(g)")
}

/// Free parameters are annihilated by `h`, and the kernel basis is annihilated by `g`.
pub fn degenerate_structure_failure(geo: &Geometry) -> Result<(), Mismatch> {
    for (k, f) in geo.free_parameters.iter().enumerate() {
        let df: Vec<RationalFn> = (0..4).map(|mu| f.deriv(Var::coord(mu))).collect();
        for n in 0..4 {
            let v = (0..4).fold(RationalFn::zero(), |acc, m| acc.add(&df[m].mul(geo.h.get(&[m, n]))));
            if !v.is_zero() {
                return Err(Mismatch { tensor: format!("h(d f{}, .)", k), index: vec![n], value: v.to_string() });
            }
        }
    }
    for (k, v) in geo.g_kernel.iter().enumerate() {
        for m in 0..4 {
            let s = (0..4).fold(RationalFn::zero(), |acc, n| acc.add(&geo.g.get(&[m, n]).mul_poly(&v.comps[n])));
            if !s.is_zero() {
                return Err(Mismatch { tensor: format!("g(kernel{}, .)", k), index: vec![m], value: s.to_string() });
            }
        }
    }
    Ok(())
}

/// Exact equality of two triples, reporting the first differing component.
pub fn triple_difference(a: &Geometry, b: &Geometry) -> Result<(), Mismatch> {
    expect_zero(&a.g.sub(&b.g), "g")?;
    expect_zero(&a.h.sub(&b.h), "h")?;
    expect_zero(&a.conn.as_tensor().sub(&b.conn.as_tensor()), "Gamma")
}

/// The `k` (as a multiple of `l⁻²`) for which the curvature has the
/// constant-curvature form, if any.
pub fn fit_curvature(geo: &Geometry) -> Option<Rational> {
    let riem = riemann(&geo.conn);
    let unit = constant_curvature_model(&geo.g, &RationalFn::var(Var::L).pow(-2).expect("l ≠ 0"));
    let k = match unit.first_nonzero() {
        None => {
            return if riem.is_zero() { Some(q(0)) } else { None };
        }
        Some((idx, u)) => riem.get(&idx).div(u).ok()?.as_constant()?,
    };
    let model = constant_curvature_model(&geo.g, &RationalFn::constant(k.clone()).mul(&RationalFn::var(Var::L).pow(-2).ok()?));
    riem.sub(&model).is_zero().then_some(k)
}
