use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactnum::linalg::{self, inertia};
use crate::exactnum::Point;

use super::{Geometry, GeometryError};

/// Inertia of `g` on its column space followed by that of `h`, written
/// `(+,−,−,−)` for nondegenerate rows and `(g-part; h-part)` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureDescriptor {
    pub g_signs: Vec<i8>,
    pub h_signs: Vec<i8>,
}

fn signs(pos: usize, neg: usize) -> Vec<i8> {
    std::iter::repeat(1).take(pos).chain(std::iter::repeat(-1).take(neg)).collect()
}

fn counts(v: &[i8]) -> (usize, usize) {
    (v.iter().filter(|&&s| s > 0).count(), v.iter().filter(|&&s| s < 0).count())
}

impl SignatureDescriptor {
    pub fn from_inertia(g: (usize, usize), h: (usize, usize)) -> SignatureDescriptor {
        SignatureDescriptor { g_signs: signs(g.0, g.1), h_signs: signs(h.0, h.1) }
    }

    /// Parse `(+,-,-,-)` or `(+,-,-;-)`; a nondegenerate descriptor copies
    /// its signs to the `h` part.
    pub fn parse(s: &str) -> Option<SignatureDescriptor> {
        let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        let part = |t: &str| -> Option<Vec<i8>> {
            t.split(',')
                .map(|x| match x.trim() {
                    "+" => Some(1),
                    "-" | "−" => Some(-1),
                    _ => None,
                })
                .collect()
        };
        match inner.split_once(';') {
            Some((g, h)) => Some(SignatureDescriptor { g_signs: part(g)?, h_signs: part(h)? }),
            None => {
                let g = part(inner)?;
                Some(SignatureDescriptor { h_signs: g.clone(), g_signs: g })
            }
        }
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.g_signs.len(), self.h_signs.len())
    }

    pub fn g_counts(&self) -> (usize, usize) {
        counts(&self.g_signs)
    }

    pub fn h_counts(&self) -> (usize, usize) {
        counts(&self.h_signs)
    }

    /// Same inertia, ignoring the order in which signs are written.
    pub fn same_inertia(&self, o: &SignatureDescriptor) -> bool {
        self.g_counts() == o.g_counts() && self.h_counts() == o.h_counts()
    }
}

impl fmt::Display for SignatureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |v: &[i8]| v.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(",");
        if self.g_signs.len() == 4 && self.h_signs.len() == 4 {
            write!(f, "({})", render(&self.g_signs))
        } else {
            write!(f, "({};{})", render(&self.g_signs), render(&self.h_signs))
        }
    }
}

impl Serialize for SignatureDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Ranks and inertia of `g` and `h` at each point, required to agree across
/// points and with the symbolic rank over the fraction field.
pub fn signature_rank(
    geo: &Geometry,
    points: &[Point],
) -> Result<((usize, usize), SignatureDescriptor), GeometryError> {
    let mut common: Option<SignatureDescriptor> = None;
    for p in points {
        if !geo.in_domain(p) {
            return Err(GeometryError::PointOutsideDomain(p.to_string()));
        }
        let gm = geo.g.eval_matrix(p).map_err(|_| GeometryError::PointOutsideDomain(p.to_string()))?;
        let hm = geo.h.eval_matrix(p).map_err(|_| GeometryError::PointOutsideDomain(p.to_string()))?;
        let (gp, gn, _) = inertia(&gm);
        let (hp, hn, _) = inertia(&hm);
        let d = SignatureDescriptor::from_inertia((gp, gn), (hp, hn));
        match &common {
            None => common = Some(d),
            Some(c) if *c != d => return Err(GeometryError::InconsistentSignature(c.to_string(), d.to_string())),
            _ => {}
        }
    }
    let sig = common.ok_or(GeometryError::EmptyDomain(0))?;
    let symbolic = (linalg::rank(&geo.g.matrix()), linalg::rank(&geo.h.matrix()));
    if symbolic != sig.ranks() {
        return Err(GeometryError::InconsistentSignature(
            format!("symbolic ranks {:?}", symbolic),
            format!("sampled ranks {:?}", sig.ranks()),
        ));
    }
    Ok((symbolic, sig))
}
