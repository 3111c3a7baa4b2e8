//! Covariant derivatives, curvature and Lie derivatives with the index
//! conventions `R^σ_{μρν} = ∂_ρΓ^σ_{μν} − ∂_νΓ^σ_{μρ} + Γ^σ_{τρ}Γ^τ_{μν} − Γ^σ_{τν}Γ^τ_{μρ}`
//! and `R_{μν} = R^σ_{μνσ}`.

use crate::exactnum::linalg;
use crate::exactnum::{MultiPoly, RationalFn, Var};
use crate::liefields::VectorField;

use super::tensor::{Connection, TensorField};
use super::GeometryError;

fn d(f: &RationalFn, mu: usize) -> RationalFn {
    f.deriv(Var::coord(mu))
}

/// Sum of products, skipping zero factors early.
fn dot<'a>(terms: impl Iterator<Item = (&'a RationalFn, &'a RationalFn)>) -> RationalFn {
    terms.fold(RationalFn::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc.add(&a.mul(b)) })
}

/// Levi-Civita connection `Γ^λ_{μν} = ½ g^{λρ}(∂_μ g_{ρν} + ∂_ν g_{ρμ} − ∂_ρ g_{μν})`.
pub fn christoffel_from_metric(g: &TensorField) -> Result<Connection, GeometryError> {
    let inv = linalg::inverse(&g.matrix()).ok_or(GeometryError::DegenerateMetric)?;
    let dg: Vec<Vec<Vec<RationalFn>>> =
        (0..4).map(|r| (0..4).map(|s| (0..4).map(|k| d(g.get(&[r, s]), k)).collect()).collect()).collect();
    let half = RationalFn::constant(crate::exactnum::qf(1, 2));
    let mut conn = Connection::zero();
    for m in 0..4 {
        for n in m..4 {
            // first-kind symbols Γ_{ρμν}
            let first: Vec<RationalFn> =
                (0..4).map(|r| dg[r][n][m].add(&dg[r][m][n]).sub(&dg[m][n][r]).mul(&half)).collect();
            for l in 0..4 {
                let v = dot((0..4).map(|r| (&inv[l][r], &first[r])));
                conn.set_sym(l, m, n, v);
            }
        }
    }
    Ok(conn)
}

/// Coordinate derivatives `∂_λ` of every component, cached for reuse.
pub struct Derivs {
    pub d: Vec<Vec<RationalFn>>,
}

impl Derivs {
    pub fn of(comps: &[RationalFn]) -> Derivs {
        Derivs { d: comps.iter().map(|f| (0..4).map(|k| d(f, k)).collect()).collect() }
    }
}

/// `∇_λ g_{μν} = ∂_λ g_{μν} − Γ^ρ_{λμ} g_{ρν} − Γ^ρ_{λν} g_{μρ}`, indexed `[λ][μ][ν]`.
pub fn nabla_covariant(g: &TensorField, conn: &Connection) -> TensorField {
    let dg = Derivs::of(g.comps());
    let mut out = TensorField::zero(0, 3);
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                let mut v = dg.d[m * 4 + n][l].clone();
                v = v.sub(&dot((0..4).map(|r| (conn.get(r, l, m), g.get(&[r, n])))));
                v = v.sub(&dot((0..4).map(|r| (conn.get(r, l, n), g.get(&[m, r])))));
                out.set(&[l, m, n], v);
            }
        }
    }
    out
}

/// `∇_λ h^{μν} = ∂_λ h^{μν} + Γ^μ_{λρ} h^{ρν} + Γ^ν_{λρ} h^{μρ}`, indexed `[μ][ν][λ]`.
pub fn nabla_contravariant(h: &TensorField, conn: &Connection) -> TensorField {
    let dh = Derivs::of(h.comps());
    let mut out = TensorField::zero(2, 1);
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                let mut v = dh.d[m * 4 + n][l].clone();
                v = v.add(&dot((0..4).map(|r| (conn.get(m, l, r), h.get(&[r, n])))));
                v = v.add(&dot((0..4).map(|r| (conn.get(n, l, r), h.get(&[m, r])))));
                out.set(&[m, n, l], v);
            }
        }
    }
    out
}

/// Riemann tensor `R^σ_{μρν}`.
pub fn riemann(conn: &Connection) -> TensorField {
    let dg = Derivs::of(conn.as_tensor().comps());
    let dgam = |s: usize, m: usize, n: usize, k: usize| &dg.d[s * 16 + m * 4 + n][k];
    let mut out = TensorField::zero(1, 3);
    for s in 0..4 {
        for m in 0..4 {
            for r in 0..4 {
                for n in (r + 1)..4 {
                    let mut v = dgam(s, m, n, r).sub(dgam(s, m, r, n));
                    v = v.add(&dot((0..4).map(|t| (conn.get(s, t, r), conn.get(t, m, n)))));
                    v = v.sub(&dot((0..4).map(|t| (conn.get(s, t, n), conn.get(t, m, r)))));
                    out.set(&[s, m, n, r], v.neg());
                    out.set(&[s, m, r, n], v);
                }
            }
        }
    }
    out
}

/// Ricci tensor `R_{μρ} = R^σ_{μρσ}`.
pub fn ricci(riem: &TensorField) -> TensorField {
    let mut out = TensorField::zero(0, 2);
    for m in 0..4 {
        for r in 0..4 {
            let v = (0..4).fold(RationalFn::zero(), |acc, s| acc.add(riem.get(&[s, m, r, s])));
            out.set(&[m, r], v);
        }
    }
    out
}

/// Weyl projective tensor `W^λ_{μσν} = R^λ_{μσν} + ⅓(δ^λ_σ R_{μν} − δ^λ_ν R_{μσ})`.
pub fn weyl_projective(riem: &TensorField, ric: &TensorField) -> TensorField {
    let third = crate::exactnum::qf(1, 3);
    let mut out = riem.clone();
    for l in 0..4 {
        for m in 0..4 {
            for s in 0..4 {
                for n in 0..4 {
                    let mut v = riem.get(&[l, m, s, n]).clone();
                    if l == s {
                        v = v.add(&ric.get(&[m, n]).scale(&third));
                    }
                    if l == n {
                        v = v.sub(&ric.get(&[m, s]).scale(&third));
                    }
                    out.set(&[l, m, s, n], v);
                }
            }
        }
    }
    out
}

/// `k(δ^σ_ν g_{μρ} − δ^σ_ρ g_{μν})`: the curvature of a space of constant curvature `k`.
pub fn constant_curvature_model(g: &TensorField, k: &RationalFn) -> TensorField {
    let mut out = TensorField::zero(1, 3);
    for s in 0..4 {
        for m in 0..4 {
            for r in 0..4 {
                for n in 0..4 {
                    let mut v = RationalFn::zero();
                    if s == n {
                        v = v.add(g.get(&[m, r]));
                    }
                    if s == r {
                        v = v.sub(g.get(&[m, n]));
                    }
                    if !v.is_zero() {
                        out.set(&[s, m, r, n], v.mul(k));
                    }
                }
            }
        }
    }
    out
}

/// `∂_ν ξ^λ` as `[λ][ν]`.
fn jac(xi: &VectorField) -> [[RationalFn; 4]; 4] {
    std::array::from_fn(|l| std::array::from_fn(|n| RationalFn::from_poly(xi.comps[l].deriv(Var::coord(n)))))
}

fn xi_apply(xi: &VectorField, df: &[RationalFn]) -> RationalFn {
    (0..4).fold(RationalFn::zero(), |acc, k| {
        if xi.comps[k].is_zero() || df[k].is_zero() {
            acc
        } else {
            acc.add(&df[k].mul_poly(&xi.comps[k]))
        }
    })
}

/// `ℒ_ξ g_{μν} = ξ^λ ∂_λ g_{μν} + g_{μλ} ∂_ν ξ^λ + g_{λν} ∂_μ ξ^λ`.
pub fn lie_derivative_covariant(xi: &VectorField, g: &TensorField, dg: &Derivs) -> TensorField {
    let j = jac(xi);
    let mut out = TensorField::zero(0, 2);
    for m in 0..4 {
        for n in 0..4 {
            let mut v = xi_apply(xi, &dg.d[m * 4 + n]);
            v = v.add(&dot((0..4).map(|l| (g.get(&[m, l]), &j[l][n]))));
            v = v.add(&dot((0..4).map(|l| (g.get(&[l, n]), &j[l][m]))));
            out.set(&[m, n], v);
        }
    }
    out
}

/// `ℒ_ξ h^{μν} = ξ^λ ∂_λ h^{μν} − h^{μλ} ∂_λ ξ^ν − h^{λν} ∂_λ ξ^μ`.
pub fn lie_derivative_contravariant(xi: &VectorField, h: &TensorField, dh: &Derivs) -> TensorField {
    let j = jac(xi);
    let mut out = TensorField::zero(2, 0);
    for m in 0..4 {
        for n in 0..4 {
            let mut v = xi_apply(xi, &dh.d[m * 4 + n]);
            v = v.sub(&dot((0..4).map(|l| (h.get(&[m, l]), &j[n][l]))));
            v = v.sub(&dot((0..4).map(|l| (h.get(&[l, n]), &j[m][l]))));
            out.set(&[m, n], v);
        }
    }
    out
}

/// `ℒ_ξ Γ^λ_{μν} = ∂_μ∂_ν ξ^λ + ξ^ρ ∂_ρ Γ^λ_{μν} + Γ^λ_{ρν} ∂_μ ξ^ρ + Γ^λ_{μρ} ∂_ν ξ^ρ − Γ^ρ_{μν} ∂_ρ ξ^λ`.
pub fn lie_derivative_connection(xi: &VectorField, conn: &Connection, dconn: &Derivs) -> TensorField {
    let j = jac(xi);
    let mut out = TensorField::zero(1, 2);
    for l in 0..4 {
        let hess: Vec<Vec<MultiPoly>> = (0..4)
            .map(|m| (0..4).map(|n| xi.comps[l].deriv(Var::coord(m)).deriv(Var::coord(n))).collect())
            .collect();
        for m in 0..4 {
            for n in m..4 {
                let mut v = RationalFn::from_poly(hess[m][n].clone());
                v = v.add(&xi_apply(xi, &dconn.d[l * 16 + m * 4 + n]));
                v = v.add(&dot((0..4).map(|r| (conn.get(l, r, n), &j[r][m]))));
                v = v.add(&dot((0..4).map(|r| (conn.get(l, m, r), &j[r][n]))));
                v = v.sub(&dot((0..4).map(|r| (conn.get(r, m, n), &j[l][r]))));
                out.set(&[l, n, m], v.clone());
                out.set(&[l, m, n], v);
            }
        }
    }
    out
}

/// `g_{μρ} h^{ρν}` as a matrix.
pub fn contract_gh(g: &TensorField, h: &TensorField) -> Vec<Vec<RationalFn>> {
    (0..4).map(|m| (0..4).map(|n| dot((0..4).map(|r| (g.get(&[m, r]), h.get(&[r, n]))))).collect()).collect()
}
