//! Cross-geometry tables: the present ↔ time-infinity duality, the
//! time-versus-space contrast, additivity of contravariant metrics, the
//! genuine-kinematics selection, finite fractional-linear invariance maps and
//! the linear-combination presentations of contracted algebras.

use serde::Serialize;

use crate::exactnum::{q, qf, qsign, rf, Rational, RationalFn, Var};
use crate::geometry::{domains_agree, pullback, triple_difference, Geometry, RationalMap, TensorField};
use crate::liefields::VectorField;

use super::generators::family;

/// A pair exchanged by the duality map, with the overall signs that relate
/// the pulled-back `g` and `h` of `left` to those of `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityPair {
    pub left: &'static str,
    pub right: &'static str,
    pub g_sign: i8,
    pub h_sign: i8,
}

const fn dual(left: &'static str, right: &'static str, g_sign: i8, h_sign: i8) -> DualityPair {
    DualityPair { left, right, g_sign, h_sign }
}

pub const DUALITY_PAIRS: [DualityPair; 21] = [
    dual("Min", "P'", 1, 1),
    dual("Euc", "E'", 1, 1),
    dual("G", "G'", -1, -1),
    dual("EG", "EG'", 1, 1),
    dual("C", "C_2", 1, 1),
    dual("EC", "EC_2", 1, 1),
    dual("G_2", "G_2'", -1, -1),
    dual("EG_2", "EG_2'", 1, 1),
    dual("HN_+", "E_2-", -1, -1),
    dual("EHN_+", "E_2", 1, 1),
    dual("HN_-", "P_2-", 1, 1),
    dual("EHN_-", "EP_2-", 1, 1),
    dual("HN_-'", "P_2+", -1, -1),
    dual("DTHN", "DTP_2+", 1, 1),
    dual("NH_+", "NH_+'", -1, -1),
    dual("ENH_+", "ENH_+'", 1, 1),
    dual("NH_2", "NH_2'", -1, -1),
    dual("NH_-", "NH_-", 1, 1),
    dual("ENH_-", "ENH_-", 1, 1),
    dual("ENH_2", "ENH_2", 1, 1),
    dual("DTNH_2", "DTNH_2", 1, 1),
];

/// `t ↦ 1/(ν²t)`, `xⁱ ↦ xⁱ/(νt)`; in the `x0 = ct` chart
/// `x0 ↦ l²/x0`, `xⁱ ↦ l xⁱ/x0`. It is its own inverse.
pub fn duality_map() -> RationalMap {
    let f = [rf("l^2/x0"), rf("l*x1/x0"), rf("l*x2/x0"), rf("l*x3/x0")];
    RationalMap { forward: f.clone(), inverse: f }
}

fn signed(geo: &Geometry, g_sign: i8, h_sign: i8) -> Geometry {
    let mut out = geo.clone();
    out.g = geo.g.scale_fn(&RationalFn::int(g_sign as i64));
    out.h = geo.h.scale_fn(&RationalFn::int(h_sign as i64));
    out
}

/// `φ*left` equals `right` with the recorded signs, in both directions,
/// including the domain.
pub fn verify_duality_pair(pair: &DualityPair, left: &Geometry, right: &Geometry, seed: u64) -> Result<(), String> {
    verify_duality(left, right, pair.g_sign, pair.h_sign, seed)
}

/// [`verify_duality_pair`] for arbitrary geometries and signs.
pub fn verify_duality(left: &Geometry, right: &Geometry, g_sign: i8, h_sign: i8, seed: u64) -> Result<(), String> {
    let phi = duality_map();
    for (a, b, dir) in [(left, right, "->"), (right, left, "<-")] {
        let p = pullback(&phi, a).map_err(|e| e.to_string())?;
        let want = signed(b, g_sign, h_sign);
        triple_difference(&p, &want).map_err(|m| format!("{} {} {}: {}", left.name, dir, right.name, m))?;
        domains_agree(&p.domain, &b.domain, seed, 60)
            .map_err(|pt| format!("{} {} {}: domains differ at {}", left.name, dir, right.name, pt))?;
    }
    Ok(())
}

/// Which part of the degenerate structure lives on time and which on space.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContrastKind {
    /// `g` is a 1d Beltrami time metric, `h` is conformal to flat 3d space.
    BeltramiTime,
    /// `g` is a 3d Beltrami space metric, `h` is conformal to flat 1d time.
    BeltramiSpace,
    /// `g` is flat 1d time, `h` flat 3d space.
    FlatTime,
    /// `g` is flat 3d space, `h` flat 1d time.
    FlatSpace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContrastRow {
    pub geometry: &'static str,
    pub kind: ContrastKind,
    /// `+1` for the upper sign in `σ^±`.
    pub branch: i8,
    pub g_sign: i8,
    pub h_sign: i8,
}

const fn contrast(geometry: &'static str, kind: ContrastKind, branch: i8, g_sign: i8, h_sign: i8) -> ContrastRow {
    ContrastRow { geometry, kind, branch, g_sign, h_sign }
}

pub const TIME_SPACE_CONTRAST: [ContrastRow; 12] = [
    contrast("NH_+", ContrastKind::BeltramiTime, 1, 1, -1),
    contrast("NH_-", ContrastKind::BeltramiTime, -1, 1, -1),
    contrast("ENH_+", ContrastKind::BeltramiTime, 1, 1, 1),
    contrast("ENH_-", ContrastKind::BeltramiTime, -1, 1, 1),
    contrast("HN_+", ContrastKind::BeltramiSpace, 1, -1, 1),
    contrast("HN_-", ContrastKind::BeltramiSpace, -1, -1, 1),
    contrast("EHN_+", ContrastKind::BeltramiSpace, 1, 1, 1),
    contrast("EHN_-", ContrastKind::BeltramiSpace, -1, 1, 1),
    contrast("G", ContrastKind::FlatTime, 0, 1, -1),
    contrast("EG", ContrastKind::FlatTime, 0, 1, 1),
    contrast("C", ContrastKind::FlatSpace, 0, -1, 1),
    contrast("EC", ContrastKind::FlatSpace, 0, 1, 1),
];

impl ContrastRow {
    /// The conformal factor `C⁻²` of the row.
    pub fn conformal_factor(&self) -> RationalFn {
        match self.kind {
            ContrastKind::BeltramiTime => rf(if self.branch > 0 { "1 - x0^2/l^2" } else { "1 + x0^2/l^2" }),
            ContrastKind::BeltramiSpace => {
                rf(if self.branch > 0 { "1 + (x1^2 + x2^2 + x3^2)/l^2" } else { "1 - (x1^2 + x2^2 + x3^2)/l^2" })
            }
            ContrastKind::FlatTime | ContrastKind::FlatSpace => RationalFn::one(),
        }
    }

    /// The model `(g, h)` built from the Beltrami forms and the conformal factor.
    pub fn model(&self) -> (TensorField, TensorField) {
        let sigma = self.conformal_factor();
        let br = q(self.branch as i64);
        let inv_l2 = rf("1/l^2");
        let time_first = matches!(self.kind, ContrastKind::BeltramiTime | ContrastKind::FlatTime);
        let g_block: Vec<usize> = if time_first { vec![0] } else { vec![1, 2, 3] };
        let h_block: Vec<usize> = if time_first { vec![1, 2, 3] } else { vec![0] };
        let recip = sigma.recip().expect("conformal factor is nonzero");
        let mut g = TensorField::zero(0, 2);
        let mut h = TensorField::zero(2, 0);
        for &i in &g_block {
            for &j in &g_block {
                let delta = if i == j { RationalFn::one() } else { RationalFn::zero() };
                let xx = RationalFn::var(Var::coord(i)).mul(&RationalFn::var(Var::coord(j)));
                // (1/σ)(δ ± x x/(l²σ)), with the sign flipped on the spatial form
                let corr = xx.mul(&inv_l2).mul(&recip).scale(&br);
                let form = match self.kind {
                    ContrastKind::BeltramiTime => delta.add(&corr),
                    ContrastKind::BeltramiSpace => delta.sub(&corr),
                    _ => delta,
                };
                let v = if matches!(self.kind, ContrastKind::FlatTime | ContrastKind::FlatSpace) {
                    form
                } else {
                    form.mul(&recip)
                };
                g.set(&[i, j], v.scale(&q(self.g_sign as i64)));
            }
        }
        for &k in &h_block {
            h.set(&[k, k], sigma.scale(&q(self.h_sign as i64)));
        }
        (g, h)
    }
}

/// `g` and `h` coincide with the row's model exactly.
pub fn verify_contrast_row(row: &ContrastRow, geo: &Geometry) -> Result<(), String> {
    let (g, h) = row.model();
    let diff = |a: &TensorField, b: &TensorField, label: &str| match a.sub(b).first_nonzero() {
        None => Ok(()),
        Some((idx, v)) => Err(format!("{} {}{:?} differs from the model by {}", row.geometry, label, idx, v)),
    };
    diff(&geo.g, &g, "g")?;
    diff(&geo.h, &h, "h")
}

/// `h_left + h_right = h_sum`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityTriple {
    pub left: &'static str,
    pub right: &'static str,
    pub sum: &'static str,
}

pub const ADDITIVITY_TRIPLES: [AdditivityTriple; 2] = [
    AdditivityTriple { left: "G_2", right: "G_2'", sum: "NH_2" },
    AdditivityTriple { left: "EG_2", right: "EG_2'", sum: "ENH_2" },
];

/// The contravariant sum identity, together with the shared connection and
/// the shared covariant metric (up to an overall sign).
pub fn verify_additivity(left: &Geometry, right: &Geometry, sum: &Geometry) -> Result<(), String> {
    let h = left.h.add(&right.h).sub(&sum.h);
    if let Some((idx, v)) = h.first_nonzero() {
        return Err(format!("h[{}] + h[{}] - h[{}] at {:?} = {}", left.name, right.name, sum.name, idx, v));
    }
    for other in [left, right] {
        let dg = other.conn.as_tensor().sub(&sum.conn.as_tensor());
        if let Some((idx, v)) = dg.first_nonzero() {
            return Err(format!("Gamma of {} and {} differ at {:?}: {}", other.name, sum.name, idx, v));
        }
        if !other.g.sub(&sum.g).is_zero() && !other.g.add(&sum.g).is_zero() {
            return Err(format!("g of {} is not ±g of {}", other.name, sum.name));
        }
    }
    Ok(())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum KinematicsClass {
    Relativistic,
    AbsoluteTime,
    AbsoluteSpace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenuineKinematicsRow {
    pub class: KinematicsClass,
    /// Sign of the spatial curvature: `1`, `0` or `-1`.
    pub curvature_sign: i8,
    pub geometry: &'static str,
}

const fn genuine(class: KinematicsClass, curvature_sign: i8, geometry: &'static str) -> GenuineKinematicsRow {
    GenuineKinematicsRow { class, curvature_sign, geometry }
}

pub const GENUINE_KINEMATICS: [GenuineKinematicsRow; 9] = [
    genuine(KinematicsClass::Relativistic, 1, "dS"),
    genuine(KinematicsClass::Relativistic, 0, "Min"),
    genuine(KinematicsClass::Relativistic, -1, "AdS"),
    genuine(KinematicsClass::AbsoluteTime, 1, "NH_+"),
    genuine(KinematicsClass::AbsoluteTime, 0, "G"),
    genuine(KinematicsClass::AbsoluteTime, -1, "NH_-"),
    genuine(KinematicsClass::AbsoluteSpace, 1, "E_2-"),
    genuine(KinematicsClass::AbsoluteSpace, 0, "C"),
    genuine(KinematicsClass::AbsoluteSpace, -1, "P_2-"),
];

/// The class whose Lorentz-like signature pattern the geometry has: one
/// timelike direction opposite in sign to three spacelike ones.
pub fn signature_class(geo: &Geometry) -> Option<KinematicsClass> {
    let (g, h) = (&geo.signature.g_signs, &geo.signature.h_signs);
    let uniform = |v: &[i8]| v.iter().all(|&s| s == v[0]);
    match (g.len(), h.len()) {
        (4, 4) if g[0] == 1 && uniform(&g[1..]) && g[1] == -1 => Some(KinematicsClass::Relativistic),
        (1, 3) if uniform(h) && h[0] != g[0] => Some(KinematicsClass::AbsoluteTime),
        (3, 1) if uniform(g) && h[0] != g[0] => Some(KinematicsClass::AbsoluteSpace),
        _ => None,
    }
}

/// Sign of the sectional curvature of the spatial sections measured with a
/// positive spatial metric; `R = k(δg − δg)` carries the opposite sign to the
/// usual convention.
pub fn spatial_curvature_sign(geo: &Geometry) -> Option<i8> {
    let space = match signature_class(geo)? {
        KinematicsClass::Relativistic | KinematicsClass::AbsoluteSpace => geo.signature.g_signs[geo.signature.g_signs.len() - 1],
        KinematicsClass::AbsoluteTime => geo.signature.h_signs[0],
    };
    Some((-qsign(&geo.curvature) * space as i32) as i8)
}

/// Class and curvature sign of the row agree with the geometry.
pub fn verify_genuine_row(row: &GenuineKinematicsRow, geo: &Geometry) -> Result<(), String> {
    match (signature_class(geo), spatial_curvature_sign(geo)) {
        (Some(c), Some(s)) if c == row.class && s == row.curvature_sign => Ok(()),
        (c, s) => Err(format!(
            "{}: expected {:?} with curvature sign {}, found {:?} with {:?}",
            row.geometry, row.class, row.curvature_sign, c, s
        )),
    }
}

/// `x ↦ A x / (1 + l⁻¹ bᵀ x)` with `bᵀx = Σ η_b b_μ x^μ`; `A` must satisfy
/// `Aᵀ η A = η` so that `A⁻¹ = η Aᵀ η`.
pub fn fractional_linear(a: [[Rational; 4]; 4], b: [Rational; 4], eta: [i64; 4]) -> RationalMap {
    let x: Vec<RationalFn> = (0..4).map(|mu| RationalFn::var(Var::coord(mu))).collect();
    let lin = |m: &[[Rational; 4]; 4], row: usize| {
        (0..4).fold(RationalFn::zero(), |acc, nu| acc.add(&x[nu].scale(&m[row][nu])))
    };
    let ainv: [[Rational; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone() * q(eta[i] * eta[j])));
    let inv_l = rf("1/l");
    // bᵀx and bᵀA⁻¹x
    let bx = (0..4).fold(RationalFn::zero(), |acc, mu| acc.add(&x[mu].scale(&(b[mu].clone() * q(eta[mu])))));
    let bainv = (0..4).fold(RationalFn::zero(), |acc, mu| acc.add(&lin(&ainv, mu).scale(&(b[mu].clone() * q(eta[mu])))));
    let fden = RationalFn::one().add(&bx.mul(&inv_l));
    let iden = RationalFn::one().sub(&bainv.mul(&inv_l));
    RationalMap {
        forward: std::array::from_fn(|mu| lin(&a, mu).div(&fden).expect("nonzero denominator")),
        inverse: std::array::from_fn(|mu| lin(&ainv, mu).div(&iden).expect("nonzero denominator")),
    }
}

fn rot(i: usize, j: usize, cos: Rational, sin: Rational) -> [[Rational; 4]; 4] {
    let mut m: [[Rational; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| q((r == c) as i64)));
    m[i][i] = cos.clone();
    m[j][j] = cos;
    m[i][j] = -sin.clone();
    m[j][i] = sin;
    m
}

fn boost(i: usize, gamma: Rational, gb: Rational) -> [[Rational; 4]; 4] {
    let mut m: [[Rational; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| q((r == c) as i64)));
    m[0][0] = gamma.clone();
    m[i][i] = gamma;
    m[0][i] = gb.clone();
    m[i][0] = gb;
    m
}

fn matmul(a: &[[Rational; 4]; 4], b: &[[Rational; 4]; 4]) -> [[Rational; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(q(0), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
    })
}

/// A named finite transformation expected to leave a geometry invariant.
pub struct FiniteMap {
    pub name: &'static str,
    pub geometry: &'static str,
    pub map: RationalMap,
}

/// Concrete rotation + `b` maps for `E_2` and Lorentz + `b` maps for `P_2±`.
pub fn finite_maps() -> Vec<FiniteMap> {
    const E: [i64; 4] = [1, 1, 1, 1];
    const ETA: [i64; 4] = [1, -1, -1, -1];
    let e1 = fractional_linear(rot(1, 2, q(0), q(1)), [q(1), q(0), q(0), q(0)], E);
    let e2 = fractional_linear(
        matmul(&rot(0, 3, qf(3, 5), qf(4, 5)), &rot(1, 2, qf(5, 13), qf(12, 13))),
        [qf(1, 2), q(0), qf(-1, 3), q(1)],
        E,
    );
    let p1 = || fractional_linear(boost(1, qf(5, 4), qf(3, 4)), [q(0), q(1), q(0), q(0)], ETA);
    let p2 = || {
        fractional_linear(
            matmul(&boost(3, qf(13, 12), qf(5, 12)), &rot(1, 2, qf(3, 5), qf(4, 5))),
            [qf(1, 3), q(0), qf(1, 2), q(-1)],
            ETA,
        )
    };
    vec![
        FiniteMap { name: "rotation(x1,x2) + b", geometry: "E_2", map: e1 },
        FiniteMap { name: "rotation(x0,x3)(x1,x2) + b", geometry: "E_2", map: e2 },
        FiniteMap { name: "boost(x1) + b", geometry: "P_2+", map: p1() },
        FiniteMap { name: "boost(x3) rotation(x1,x2) + b", geometry: "P_2+", map: p2() },
        FiniteMap { name: "boost(x1) + b", geometry: "P_2-", map: p1() },
        FiniteMap { name: "boost(x3) rotation(x1,x2) + b", geometry: "P_2-", map: p2() },
    ]
}

/// `φ*geo = geo` for `(g, h, Γ)`.
pub fn verify_invariance(map: &RationalMap, geo: &Geometry) -> Result<(), String> {
    let p = pullback(map, geo).map_err(|e| e.to_string())?;
    triple_difference(&p, geo).map_err(|m| m.to_string())
}

/// A basis block written as `Σ coef · family`.
pub type Combination = &'static [(i64, i64, &'static str)];

/// An algebra presented by sums and differences of the deformed generators,
/// with one contraction edge producing the same basis.
pub struct CombinatoryRow {
    pub algebra: &'static str,
    pub blocks: [Combination; 3],
    pub via: &'static str,
}

const HALF_H_SUM: Combination = &[(1, 2, "H+"), (1, 2, "H-")];
const HALF_H_DIFF: Combination = &[(1, 2, "H+"), (-1, 2, "H-")];
const HALF_P_SUM: Combination = &[(1, 2, "P+"), (1, 2, "P-")];
const HALF_P_DIFF: Combination = &[(1, 2, "P+"), (-1, 2, "P-")];
const HALF_KN_SUM: Combination = &[(1, 2, "K"), (1, 2, "N")];
const HALF_KN_DIFF: Combination = &[(1, 2, "K"), (-1, 2, "N")];

pub const COMBINATORY: [CombinatoryRow; 16] = [
    CombinatoryRow { algebra: "p", blocks: [HALF_H_SUM, HALF_P_SUM, &[(1, 1, "K")]], via: "d_+" },
    CombinatoryRow { algebra: "e", blocks: [HALF_H_SUM, HALF_P_SUM, &[(1, 1, "N")]], via: "r" },
    CombinatoryRow { algebra: "n_+", blocks: [&[(1, 1, "H+")], HALF_P_SUM, HALF_KN_SUM], via: "d_+" },
    CombinatoryRow { algebra: "n_-", blocks: [&[(1, 1, "H-")], HALF_P_SUM, HALF_KN_SUM], via: "d_-" },
    CombinatoryRow { algebra: "h_+", blocks: [HALF_H_SUM, &[(1, 1, "P+")], HALF_KN_DIFF], via: "d_+" },
    CombinatoryRow { algebra: "h_-", blocks: [HALF_H_SUM, &[(1, 1, "P-")], HALF_KN_DIFF], via: "d_-" },
    CombinatoryRow { algebra: "g", blocks: [HALF_H_SUM, HALF_P_SUM, HALF_KN_SUM], via: "d_+" },
    CombinatoryRow { algebra: "c", blocks: [HALF_H_SUM, HALF_P_SUM, HALF_KN_DIFF], via: "d_+" },
    CombinatoryRow { algebra: "g'", blocks: [HALF_H_DIFF, HALF_P_SUM, HALF_KN_SUM], via: "d_+" },
    CombinatoryRow { algebra: "p2", blocks: [HALF_H_DIFF, HALF_P_DIFF, &[(1, 1, "K")]], via: "d_+" },
    CombinatoryRow { algebra: "e2", blocks: [&[(-1, 2, "H+"), (1, 2, "H-")], HALF_P_DIFF, &[(1, 1, "N")]], via: "r" },
    CombinatoryRow { algebra: "n_+2", blocks: [&[(1, 1, "H+")], HALF_P_DIFF, HALF_KN_DIFF], via: "d_+" },
    CombinatoryRow { algebra: "n_-2", blocks: [&[(-1, 1, "H-")], HALF_P_DIFF, HALF_KN_DIFF], via: "d_-" },
    CombinatoryRow { algebra: "g2", blocks: [HALF_H_DIFF, HALF_P_DIFF, HALF_KN_DIFF], via: "d_+" },
    CombinatoryRow { algebra: "c2", blocks: [HALF_H_DIFF, HALF_P_DIFF, HALF_KN_SUM], via: "d_+" },
    CombinatoryRow { algebra: "g'2", blocks: [HALF_H_SUM, HALF_P_DIFF, HALF_KN_DIFF], via: "d_+" },
];

/// The ten basis fields of a combinatory row (rotations appended).
pub fn combinatory_basis(row: &CombinatoryRow) -> Vec<VectorField> {
    let mut basis = Vec::with_capacity(10);
    for block in row.blocks {
        let n = if block[0].2.starts_with('H') { 1 } else { 3 };
        for i in 0..n {
            let v = block.iter().fold(VectorField::zero(), |acc, &(num, den, sym)| {
                acc.add(&family(sym).expect("family symbol")[i].scale(&qf(num, den)))
            });
            basis.push(v);
        }
    }
    basis.extend(family("J").expect("rotations"));
    basis
}
