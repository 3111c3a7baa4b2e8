use crate::exactnum::linalg;
use crate::exactnum::{ExactError, RationalFn, Var, NVARS};

use super::domain::DomainCond;
use super::tensor::Connection;
use super::{Geometry, GeometryError};

/// A rational coordinate change `x ↦ φ(x)` stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub forward: [RationalFn; 4],
    pub inverse: [RationalFn; 4],
}

fn images(f: &[RationalFn; 4]) -> [Option<RationalFn>; NVARS] {
    let mut img: [Option<RationalFn>; NVARS] = Default::default();
    for (mu, v) in f.iter().enumerate() {
        img[Var::coord(mu).index()] = Some(v.clone());
    }
    img
}

fn compose4(f: &[RationalFn; 4], img: &[Option<RationalFn>; NVARS]) -> Result<[RationalFn; 4], ExactError> {
    let v: Vec<RationalFn> = f.iter().map(|c| c.compose(img)).collect::<Result<_, _>>()?;
    Ok(v.try_into().expect("four components"))
}

impl RationalMap {
    pub fn identity() -> RationalMap {
        let id: [RationalFn; 4] = std::array::from_fn(|mu| RationalFn::var(Var::coord(mu)));
        RationalMap { forward: id.clone(), inverse: id }
    }

    /// `f ∘ φ`.
    pub fn pull_scalar(&self, f: &RationalFn) -> Result<RationalFn, ExactError> {
        f.compose(&images(&self.forward))
    }

    /// `φ ∘ ψ` (apply `ψ` first).
    pub fn after(&self, psi: &RationalMap) -> Result<RationalMap, ExactError> {
        Ok(RationalMap {
            forward: compose4(&self.forward, &images(&psi.forward))?,
            inverse: compose4(&psi.inverse, &images(&self.inverse))?,
        })
    }

    /// Both compositions of the stored directions are the identity.
    pub fn inverse_holds(&self) -> bool {
        let check = |a: &[RationalFn; 4], b: &[RationalFn; 4]| match compose4(a, &images(b)) {
            Ok(c) => c.iter().enumerate().all(|(mu, f)| f.sub(&RationalFn::var(Var::coord(mu))).is_zero()),
            Err(_) => false,
        };
        check(&self.forward, &self.inverse) && check(&self.inverse, &self.forward)
    }

    /// `J[α][μ] = ∂_μ φ^α`.
    pub fn jacobian(&self) -> Vec<Vec<RationalFn>> {
        self.forward.iter().map(|f| (0..4).map(|mu| f.deriv(Var::coord(mu))).collect()).collect()
    }
}

fn sum<I: Iterator<Item = RationalFn>>(it: I) -> RationalFn {
    it.fold(RationalFn::zero(), |a, b| if b.is_zero() { a } else { a.add(&b) })
}

fn mul_nz(a: &RationalFn, b: &RationalFn) -> RationalFn {
    if a.is_zero() || b.is_zero() {
        RationalFn::zero()
    } else {
        a.mul(b)
    }
}

/// `φ*` of a geometry: `g′ = Jᵀ g(φ) J`, `h′ = J⁻¹ h(φ) J⁻ᵀ`,
/// `Γ′ = J⁻¹(Γ(φ) J J + ∂∂φ)`; domain inequalities are composed with `φ`
/// and the map's own poles are removed.
pub fn pullback(map: &RationalMap, geo: &Geometry) -> Result<Geometry, GeometryError> {
    if !map.inverse_holds() {
        return Err(GeometryError::NonInvertibleMap("stored inverse does not invert the map".into()));
    }
    let img = images(&map.forward);
    let bad = |e: ExactError| GeometryError::NonInvertibleMap(e.to_string());
    let pull = |f: &RationalFn| f.compose(&img).map_err(bad);
    let j = map.jacobian();
    let jinv = linalg::inverse(&j).ok_or_else(|| GeometryError::NonInvertibleMap("singular Jacobian".into()))?;

    let gphi: Vec<RationalFn> = geo.g.comps().iter().map(pull).collect::<Result<_, _>>()?;
    let hphi: Vec<RationalFn> = geo.h.comps().iter().map(pull).collect::<Result<_, _>>()?;
    let cphi: Vec<RationalFn> = geo.conn.as_tensor().comps().iter().map(pull).collect::<Result<_, _>>()?;

    let mut g = geo.g.clone();
    let mut h = geo.h.clone();
    // (g J)_{αν}, then Jᵀ(g J)
    let gj: Vec<Vec<RationalFn>> =
        (0..4).map(|a| (0..4).map(|n| sum((0..4).map(|b| mul_nz(&gphi[a * 4 + b], &j[b][n])))).collect()).collect();
    let hj: Vec<Vec<RationalFn>> = (0..4)
        .map(|a| (0..4).map(|n| sum((0..4).map(|b| mul_nz(&hphi[a * 4 + b], &jinv[n][b])))).collect())
        .collect();
    for m in 0..4 {
        for n in 0..4 {
            g.set(&[m, n], sum((0..4).map(|a| mul_nz(&j[a][m], &gj[a][n]))));
            h.set(&[m, n], sum((0..4).map(|a| mul_nz(&jinv[m][a], &hj[a][n]))));
        }
    }

    let mut conn = Connection::zero();
    for a in 0..4 {
        // Γ^α_{βγ}(φ) J^γ_ν
        let gj: Vec<Vec<RationalFn>> = (0..4)
            .map(|b| (0..4).map(|n| sum((0..4).map(|c| mul_nz(&cphi[a * 16 + b * 4 + c], &j[c][n])))).collect())
            .collect();
        for m in 0..4 {
            for n in m..4 {
                let mut t = sum((0..4).map(|b| mul_nz(&j[b][m], &gj[b][n])));
                t = t.add(&j[a][m].deriv(Var::coord(n)));
                if t.is_zero() {
                    continue;
                }
                for l in 0..4 {
                    let v = mul_nz(&jinv[l][a], &t);
                    if !v.is_zero() {
                        let prev = conn.get(l, m, n).add(&v);
                        conn.set_sym(l, m, n, prev);
                    }
                }
            }
        }
    }

    let mut domain: Vec<DomainCond> = geo
        .domain
        .iter()
        .map(|d| Ok(DomainCond { expr: pull(&d.expr)?, positive: d.positive }))
        .collect::<Result<_, GeometryError>>()?;
    let mut poles: Vec<crate::exactnum::MultiPoly> = Vec::new();
    for f in &map.forward {
        for (p, _) in f.den_factors() {
            if !poles.contains(p) {
                poles.push(p.clone());
            }
        }
    }
    for mono in map.forward.iter().map(|f| f.numer().min_monomial()) {
        for v in Var::COORDS {
            if mono.exp(v) < 0 {
                let p = crate::exactnum::MultiPoly::var(v);
                if !poles.contains(&p) {
                    poles.push(p);
                }
            }
        }
    }
    for p in poles {
        domain.push(DomainCond::positive(RationalFn::from_poly(p.pow(2))));
    }

    Ok(Geometry {
        g,
        h,
        conn,
        domain,
        witness: None,
        g_kernel: Vec::new(),
        free_parameters: geo.free_parameters.iter().map(pull).collect::<Result<_, _>>()?,
        ..geo.clone()
    })
}

