use serde::Serialize;

use crate::exactnum::{qf, qsign, Point, RationalFn, Sampler, Var};

use super::{Geometry, GeometryError};

/// A strict inequality `expr > 0` (or `< 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainCond {
    pub expr: RationalFn,
    pub positive: bool,
}

impl DomainCond {
    pub fn positive(expr: RationalFn) -> DomainCond {
        DomainCond { expr, positive: true }
    }

    pub fn negative(expr: RationalFn) -> DomainCond {
        DomainCond { expr, positive: false }
    }

    /// `None` when the expression has a pole at `p`.
    pub fn holds(&self, p: &Point) -> Option<bool> {
        let s = qsign(&self.expr.eval(p).ok()?);
        Some(if self.positive { s > 0 } else { s < 0 })
    }
}

impl std::fmt::Display for DomainCond {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} 0", self.expr, if self.positive { ">" } else { "<" })
    }
}

impl Serialize for DomainCond {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub(super) fn contains(domain: &[DomainCond], p: &Point) -> bool {
    domain.iter().all(|d| d.holds(p) == Some(true))
}

/// A chart point with positive `c`, `l` and coordinates of mixed magnitude,
/// so that both sides of every `σ = 0` hypersurface get visited.
pub(super) fn random_chart_point(s: &mut Sampler) -> Point {
    let c = s.positive(4);
    let l = s.positive(4);
    let mut p = Point::new().with(Var::C, c).with(Var::L, l.clone());
    let scale = [qf(1, 4), qf(1, 1), qf(3, 1)][s.index(3)].clone();
    for mu in 0..4 {
        let x = s.rational(9) * &scale * &l;
        p.set(Var::coord(mu), x);
    }
    p
}

fn tensors_finite(geo: &Geometry, p: &Point) -> bool {
    geo.g.comps().iter().chain(geo.h.comps()).chain(geo.conn.as_tensor().comps()).all(|f| f.eval(p).is_ok())
}

/// `n` deterministic points inside the domain where every tensor component is finite.
pub fn sample_domain(geo: &Geometry, seed: u64, n: usize) -> Result<Vec<Point>, GeometryError> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::with_capacity(n);
    let budget = 4000;
    for _ in 0..budget {
        if out.len() == n {
            break;
        }
        let p = random_chart_point(&mut s);
        if contains(&geo.domain, &p) && tensors_finite(geo, &p) {
            out.push(p);
        }
    }
    if out.len() < n {
        return Err(GeometryError::EmptyDomain(budget));
    }
    Ok(out)
}

/// Compare membership of two domains at `n` random chart points where both
/// are defined; returns the first disagreeing point.
pub fn domains_agree(a: &[DomainCond], b: &[DomainCond], seed: u64, n: usize) -> Result<(), Point> {
    let mut s = Sampler::new(seed);
    let defined = |d: &[DomainCond], p: &Point| d.iter().all(|c| c.holds(p).is_some());
    let mut tested = 0;
    for _ in 0..n * 20 {
        if tested == n {
            break;
        }
        let p = random_chart_point(&mut s);
        if !defined(a, &p) || !defined(b, &p) {
            continue;
        }
        tested += 1;
        if contains(a, &p) != contains(b, &p) {
            return Err(p);
        }
    }
    Ok(())
}
