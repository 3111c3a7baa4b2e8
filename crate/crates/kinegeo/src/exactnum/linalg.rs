//! Dense Gaussian elimination over ℚ and over the rational-function field.

use num_traits::{One, Signed, Zero};

use super::error::ExactError;
use super::ratfn::RationalFn;
use super::rational::Rational;

/// The exact fields the elimination routines run over.
pub trait Field: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Pivot preference: smaller is cheaper.
    fn weight(&self) -> usize;
}

impl Field for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn one() -> Self {
        RationalFn::one()
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFn::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFn::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFn::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RationalFn::div(self, o).expect("pivot is nonzero")
    }
    fn neg(&self) -> Self {
        RationalFn::neg(self)
    }
    fn weight(&self) -> usize {
        RationalFn::weight(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Row echelon reduction in place; returns the pivot columns and the row of
/// the original matrix each pivot came from.
pub fn row_echelon<F: Field>(m: &mut Matrix<F>) -> Vec<(usize, usize)> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut origin: Vec<usize> = (0..rows).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let best = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].weight());
        let Some(p) = best else { continue };
        m.swap(r, p);
        origin.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in (r + 1)..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if !m[r][j].is_zero() {
                    let t = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push((c, origin[r]));
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    row_echelon(&mut a).len()
}

/// Solve `a x = b` for square nonsingular `a`; `None` if singular.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = row_echelon(&mut aug);
    if piv.len() < n || piv.iter().any(|&(c, _)| c >= n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for i in (0..n).rev() {
        let mut s = aug[i][n].clone();
        for j in (i + 1)..n {
            if !aug[i][j].is_zero() {
                s = s.sub(&aug[i][j].mul(&x[j]));
            }
        }
        x[i] = s;
    }
    Some(x)
}

/// Inverse of a square matrix; `None` if singular.
pub fn inverse<F: Field>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.len();
    let mut aug: Matrix<F> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let piv = row_echelon(&mut aug);
    if piv.len() < n || piv.iter().any(|&(c, _)| c >= n) {
        return None;
    }
    for i in (0..n).rev() {
        for k in 0..i {
            if aug[k][i].is_zero() {
                continue;
            }
            let f = aug[k][i].clone();
            for j in i..2 * n {
                if !aug[i][j].is_zero() {
                    let t = aug[i][j].mul(&f);
                    aug[k][j] = aug[k][j].sub(&t);
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant<F: Field>(a: &Matrix<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].weight()) else {
            return F::zero();
        };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&m[c][c]);
        let inv = F::one().div(&m[c][c]);
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&inv);
            for j in c..n {
                if !m[c][j].is_zero() {
                    let t = m[c][j].mul(&f);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
    }
    det
}

/// Inertia `(n₊, n₋, n₀)` of a symmetric rational matrix by congruence
/// (Sylvester's law of inertia).
pub fn inertia(a: &Matrix<Rational>) -> (usize, usize, usize) {
    let n = a.len();
    let mut m = a.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if Zero::is_zero(&m[k][k]) {
            if let Some(j) = (k + 1..n).find(|&j| !Zero::is_zero(&m[j][j])) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !Zero::is_zero(&m[k][j])) {
                // Replace e_k by e_k + e_j: diagonal becomes 2 m[k][j] ≠ 0.
                for i in 0..n {
                    let t = m[j][i].clone();
                    m[k][i] += t;
                }
                for i in 0..n {
                    let t = m[i][j].clone();
                    m[i][k] += t;
                }
            } else {
                k += 1;
                continue;
            }
        }
        let d = m[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in (k + 1)..n {
            if Zero::is_zero(&m[i][k]) {
                continue;
            }
            let f = &m[i][k] / &d;
            for j in k..n {
                let t = &m[k][j] * &f;
                m[i][j] -= t;
            }
            for j in k..n {
                let t = &m[j][k] * &f;
                m[j][i] -= t;
            }
        }
        for i in (k + 1)..n {
            m[k][i] = <Rational as Zero>::zero();
            m[i][k] = <Rational as Zero>::zero();
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

/// Matrix of rational functions evaluated at a point.
pub fn eval_matrix(
    m: &Matrix<RationalFn>,
    p: &super::point::Point,
) -> Result<Matrix<Rational>, ExactError> {
    m.iter().map(|row| row.iter().map(|f| f.eval(p)).collect()).collect()
}
