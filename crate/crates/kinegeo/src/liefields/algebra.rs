use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::field::{combine, lie_bracket, VectorField};
use crate::exactnum::linalg::{inverse, row_echelon, Matrix};
use crate::exactnum::{q, MultiPoly, RationalFn};

pub const DIM: usize = 10;

/// Slot labels in the fixed basis order (time, translations, boosts, rotations).
pub const SLOT_NAMES: [&str; DIM] = ["T", "P1", "P2", "P3", "B1", "B2", "B3", "J1", "J2", "J3"];

/// The block a basis slot belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Time,
    Trans,
    Boost,
    Rot,
}

impl Slot {
    pub fn of(index: usize) -> Slot {
        match index {
            0 => Slot::Time,
            1..=3 => Slot::Trans,
            4..=6 => Slot::Boost,
            _ => Slot::Rot,
        }
    }

    pub fn indices(self) -> std::ops::Range<usize> {
        match self {
            Slot::Time => 0..1,
            Slot::Trans => 1..4,
            Slot::Boost => 4..7,
            Slot::Rot => 7..10,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Time => "time",
            Slot::Trans => "trans",
            Slot::Boost => "boost",
            Slot::Rot => "rot",
        }
    }

    pub fn parse(s: &str) -> Option<Slot> {
        [Slot::Time, Slot::Trans, Slot::Boost, Slot::Rot].into_iter().find(|x| x.name() == s)
    }
}

/// A named 10-element basis of vector fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub name: String,
    /// Human-readable title (e.g. "de Sitter").
    pub title: String,
    /// Generator symbol per block, e.g. `["H+", "P+", "K", "J"]`.
    pub symbols: [String; 4],
    pub basis: Vec<VectorField>,
}

impl AlgebraPresentation {
    pub fn slot_label(&self, i: usize) -> String {
        let sym = &self.symbols[match Slot::of(i) {
            Slot::Time => 0,
            Slot::Trans => 1,
            Slot::Boost => 2,
            Slot::Rot => 3,
        }];
        if i == 0 {
            sym.clone()
        } else {
            format!("{}{}", sym, (i - 1) % 3 + 1)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("basis must have exactly 10 elements, found {0}")]
    WrongDimension(usize),
    #[error("basis is linearly dependent (rank {rank})")]
    DependentBasis { rank: usize },
    #[error("[{a}, {b}] leaves the span; residual {residual}")]
    NotClosed { a: usize, b: usize, residual: String },
}

/// `[X_a, X_b] = Σ_k c[a][b][k] X_k` with constants rational in `c`, `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    c: Vec<RationalFn>,
}

impl StructureConstants {
    pub fn zero() -> StructureConstants {
        StructureConstants { c: vec![RationalFn::zero(); DIM * DIM * DIM] }
    }

    pub fn get(&self, a: usize, b: usize, k: usize) -> &RationalFn {
        &self.c[(a * DIM + b) * DIM + k]
    }

    pub fn set(&mut self, a: usize, b: usize, k: usize, v: RationalFn) {
        self.c[(a * DIM + b) * DIM + k] = v;
    }

    /// Antisymmetry `c[a][b][k] = −c[b][a][k]`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|a| {
            (a..DIM).all(|b| (0..DIM).all(|k| self.get(a, b, k).add(self.get(b, a, k)).is_zero()))
        })
    }

    /// Nonzero constants as `(a, b, k, value)` with `a < b`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, &RationalFn)> {
        let mut out = Vec::new();
        for a in 0..DIM {
            for b in (a + 1)..DIM {
                for k in 0..DIM {
                    let v = self.get(a, b, k);
                    if !v.is_zero() {
                        out.push((a, b, k, v));
                    }
                }
            }
        }
        out
    }
}

/// Express every bracket of the basis in the basis itself.
pub fn closure(basis: &[VectorField]) -> Result<StructureConstants, ClosureError> {
    if basis.len() != DIM {
        return Err(ClosureError::WrongDimension(basis.len()));
    }
    let (keys, mat) = coefficient_matrix(basis);
    let mut work = mat.clone();
    let pivots = row_echelon(&mut work);
    if pivots.len() < DIM {
        return Err(ClosureError::DependentBasis { rank: pivots.len() });
    }
    let rows: Vec<usize> = pivots.iter().map(|&(_, r)| r).collect();
    let square: Matrix<RationalFn> = rows.iter().map(|&r| mat[r].clone()).collect();
    let inv = inverse(&square).expect("pivot rows are independent");
    let pivot_keys: Vec<(usize, [i16; 4])> = rows.iter().map(|&r| keys[r]).collect();

    let mut sc = StructureConstants::zero();
    for a in 0..DIM {
        for b in (a + 1)..DIM {
            let y = lie_bracket(&basis[a], &basis[b]);
            let ycoef = field_coefficients(&y);
            let rhs: Vec<RationalFn> = pivot_keys
                .iter()
                .map(|k| ycoef.get(k).cloned().map(RationalFn::from_poly).unwrap_or_default())
                .collect();
            let sol: Vec<RationalFn> = (0..DIM)
                .map(|i| {
                    (0..DIM).fold(RationalFn::zero(), |acc, j| {
                        if inv[i][j].is_zero() || rhs[j].is_zero() {
                            acc
                        } else {
                            acc.add(&inv[i][j].mul(&rhs[j]))
                        }
                    })
                })
                .collect();
            let lhs = combine(&sol, basis);
            let residual: Vec<RationalFn> = (0..4).map(|mu| lhs[mu].sub(&y.comp_fn(mu))).collect();
            if residual.iter().any(|r| !r.is_zero()) {
                let text = residual
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| !r.is_zero())
                    .map(|(mu, r)| format!("d{}: {}", mu, r))
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(ClosureError::NotClosed { a, b, residual: text });
            }
            for (k, v) in sol.into_iter().enumerate() {
                sc.set(b, a, k, v.neg());
                sc.set(a, b, k, v);
            }
        }
    }
    Ok(sc)
}

type Key = (usize, [i16; 4]);

/// Coefficients of a field keyed by (component, coordinate monomial); the
/// values carry the parameter dependence.
fn field_coefficients(x: &VectorField) -> BTreeMap<Key, MultiPoly> {
    let mut out: BTreeMap<Key, MultiPoly> = BTreeMap::new();
    for (mu, p) in x.comps.iter().enumerate() {
        for (m, c) in p.terms() {
            let xpart = [m.0[0], m.0[1], m.0[2], m.0[3]];
            let mut rest = *m;
            rest.0[..4].copy_from_slice(&[0; 4]);
            let t = MultiPoly::term(rest, c.clone());
            let e = out.entry((mu, xpart)).or_default();
            *e = e.add(&t);
        }
    }
    out
}

fn coefficient_matrix(basis: &[VectorField]) -> (Vec<Key>, Matrix<RationalFn>) {
    let coefs: Vec<BTreeMap<Key, MultiPoly>> = basis.iter().map(field_coefficients).collect();
    let mut keys: Vec<Key> = coefs.iter().flat_map(|m| m.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let mat = keys
        .iter()
        .map(|k| {
            coefs.iter().map(|m| m.get(k).cloned().map(RationalFn::from_poly).unwrap_or_default()).collect()
        })
        .collect();
    (keys, mat)
}

/// Jacobi identity at the level of structure constants.
pub fn jacobi_check(sc: &StructureConstants) -> bool {
    jacobi_violation(sc).is_none()
}

/// First `(a, b, d, k)` at which the Jacobi sum fails to vanish.
pub fn jacobi_violation(sc: &StructureConstants) -> Option<(usize, usize, usize, usize)> {
    for a in 0..DIM {
        for b in (a + 1)..DIM {
            for d in (b + 1)..DIM {
                for k in 0..DIM {
                    let mut s = RationalFn::zero();
                    for m in 0..DIM {
                        for (x, y, z) in [(a, b, d), (b, d, a), (d, a, b)] {
                            let u = sc.get(x, y, m);
                            if u.is_zero() {
                                continue;
                            }
                            let w = sc.get(m, z, k);
                            if !w.is_zero() {
                                s = s.add(&u.mul(w));
                            }
                        }
                    }
                    if !s.is_zero() {
                        return Some((a, b, d, k));
                    }
                }
            }
        }
    }
    None
}

/// Jacobi identity checked directly on the vector fields.
pub fn jacobi_fields(x: &VectorField, y: &VectorField, z: &VectorField) -> bool {
    lie_bracket(x, &lie_bracket(y, z))
        .add(&lie_bracket(y, &lie_bracket(z, x)))
        .add(&lie_bracket(z, &lie_bracket(x, y)))
        .is_zero()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InvolutionKind {
    Identity,
    Parity,
    TimeReversal,
    Composite,
}

/// A signed permutation of the 10 basis slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub perm: [usize; DIM],
    pub signs: [i8; DIM],
}

impl Involution {
    fn blocks(kind: InvolutionKind, s: [i8; 4]) -> Involution {
        Involution {
            kind,
            perm: std::array::from_fn(|i| i),
            signs: std::array::from_fn(|i| match Slot::of(i) {
                Slot::Time => s[0],
                Slot::Trans => s[1],
                Slot::Boost => s[2],
                Slot::Rot => s[3],
            }),
        }
    }

    pub fn identity() -> Involution {
        Involution::blocks(InvolutionKind::Identity, [1, 1, 1, 1])
    }

    /// `Π: H → H, P → −P, K → −K, J → J`.
    pub fn parity() -> Involution {
        Involution::blocks(InvolutionKind::Parity, [1, -1, -1, 1])
    }

    /// `Θ: H → −H, P → P, K → −K, J → J`.
    pub fn time_reversal() -> Involution {
        Involution::blocks(InvolutionKind::TimeReversal, [-1, 1, -1, 1])
    }

    /// `ΠΘ`.
    pub fn composite() -> Involution {
        Involution::blocks(InvolutionKind::Composite, [-1, -1, 1, 1])
    }

    pub fn compose(&self, o: &Involution) -> Involution {
        Involution {
            kind: InvolutionKind::Composite,
            perm: std::array::from_fn(|i| o.perm[self.perm[i]]),
            signs: std::array::from_fn(|i| self.signs[i] * o.signs[self.perm[i]]),
        }
    }

    pub fn is_involutive(&self) -> bool {
        let sq = self.compose(self);
        sq.perm.iter().enumerate().all(|(i, &p)| p == i) && sq.signs.iter().all(|&s| s == 1)
    }
}

/// Slot `a` of the result is `signs[a] · X_{perm[a]}`.
pub fn apply_involution(alg: &AlgebraPresentation, inv: &Involution) -> AlgebraPresentation {
    let basis = (0..DIM)
        .map(|a| {
            let x = &alg.basis[inv.perm[a]];
            if inv.signs[a] < 0 {
                x.neg()
            } else {
                x.clone()
            }
        })
        .collect();
    AlgebraPresentation { basis, ..alg.clone() }
}

/// `φ(X_a) = s_a X_{π a}` preserves the brackets:
/// `s_a s_b c[πa][πb][πk] = s_k c[a][b][k]` for all slots.
pub fn is_automorphism(sc: &StructureConstants, inv: &Involution) -> bool {
    for a in 0..DIM {
        for b in 0..DIM {
            for k in 0..DIM {
                let lhs = sc.get(inv.perm[a], inv.perm[b], inv.perm[k]).scale(&q((inv.signs[a] * inv.signs[b]) as i64));
                let rhs = sc.get(a, b, k).scale(&q(inv.signs[k] as i64));
                if !lhs.sub(&rhs).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The so(3) relations `[J_i, J_j] = ε_ijk J_k` on the rotation slots.
pub fn rotations_close_as_so3(sc: &StructureConstants) -> bool {
    let j = [7, 8, 9];
    for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        for k in 0..DIM {
            let want = if k == j[z] { RationalFn::one() } else { RationalFn::zero() };
            if !sc.get(j[x], j[y], k).sub(&want).is_zero() {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} ({})", self.name, self.title)?;
        for (i, x) in self.basis.iter().enumerate() {
            writeln!(f, "  {:<4} = {}", self.slot_label(i), x)?;
        }
        Ok(())
    }
}
