use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Point, Rational, RationalFn};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    None,
    SymmetricCovariant,
    SymmetricContravariant,
}

/// Dense tensor with `contra` upper and `co` lower indices in dimension 4.
/// Upper indices come first in the flattened index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    pub contra: usize,
    pub co: usize,
    pub symmetry: Symmetry,
    comps: Vec<RationalFn>,
}

impl TensorField {
    pub fn zero(contra: usize, co: usize) -> TensorField {
        TensorField {
            contra,
            co,
            symmetry: Symmetry::None,
            comps: vec![RationalFn::zero(); 4usize.pow((contra + co) as u32)],
        }
    }

    pub fn rank(&self) -> usize {
        self.contra + self.co
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank());
        idx.iter().fold(0, |acc, &i| acc * 4 + i)
    }

    pub fn get(&self, idx: &[usize]) -> &RationalFn {
        &self.comps[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: RationalFn) {
        let o = self.offset(idx);
        self.comps[o] = v;
    }

    pub fn comps(&self) -> &[RationalFn] {
        &self.comps
    }

    /// All multi-indices in flattened order.
    pub fn indices(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        (0..self.comps.len())
            .map(|mut k| {
                let mut idx = vec![0; n];
                for slot in idx.iter_mut().rev() {
                    *slot = k % 4;
                    k /= 4;
                }
                idx
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// First component that does not vanish, with its multi-index.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &RationalFn)> {
        self.indices().into_iter().zip(self.comps.iter()).find(|(_, c)| !c.is_zero())
    }

    pub fn map(&self, f: impl Fn(&RationalFn) -> RationalFn) -> TensorField {
        TensorField { comps: self.comps.iter().map(f).collect(), ..self.clone() }
    }

    pub fn zip(&self, o: &TensorField, f: impl Fn(&RationalFn, &RationalFn) -> RationalFn) -> TensorField {
        assert_eq!((self.contra, self.co), (o.contra, o.co), "valence mismatch");
        TensorField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| f(a, b)).collect(), ..self.clone() }
    }

    pub fn add(&self, o: &TensorField) -> TensorField {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &TensorField) -> TensorField {
        self.zip(o, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> TensorField {
        self.map(|a| a.neg())
    }

    pub fn scale_fn(&self, s: &RationalFn) -> TensorField {
        self.map(|a| a.mul(s))
    }

    /// A symmetric 2-tensor from a 4×4 matrix.
    pub fn from_matrix(m: [[RationalFn; 4]; 4], covariant: bool) -> TensorField {
        let (contra, co, symmetry) =
            if covariant { (0, 2, Symmetry::SymmetricCovariant) } else { (2, 0, Symmetry::SymmetricContravariant) };
        let comps = m.into_iter().flatten().collect();
        TensorField { contra, co, symmetry, comps }
    }

    /// Rank-2 tensor as a matrix.
    pub fn matrix(&self) -> Vec<Vec<RationalFn>> {
        assert_eq!(self.rank(), 2);
        (0..4).map(|i| (0..4).map(|j| self.get(&[i, j]).clone()).collect()).collect()
    }

    pub fn eval_matrix(&self, p: &Point) -> Result<Vec<Vec<Rational>>, crate::exactnum::ExactError> {
        assert_eq!(self.rank(), 2);
        (0..4).map(|i| (0..4).map(|j| self.get(&[i, j]).eval(p)).collect()).collect()
    }

    /// Declared symmetry holds componentwise.
    pub fn symmetry_holds(&self) -> bool {
        match self.symmetry {
            Symmetry::None => true,
            _ => (0..4).all(|i| (i + 1..4).all(|j| self.get(&[i, j]).sub(self.get(&[j, i])).is_zero())),
        }
    }
}

/// Affine connection coefficients `Γ^λ_{μν}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Vec<RationalFn>,
}

impl Connection {
    pub fn zero() -> Connection {
        Connection { gamma: vec![RationalFn::zero(); 64] }
    }

    pub fn get(&self, l: usize, m: usize, n: usize) -> &RationalFn {
        &self.gamma[l * 16 + m * 4 + n]
    }

    pub fn set(&mut self, l: usize, m: usize, n: usize, v: RationalFn) {
        self.gamma[l * 16 + m * 4 + n] = v;
    }

    /// Set both `Γ^l_{mn}` and `Γ^l_{nm}`.
    pub fn set_sym(&mut self, l: usize, m: usize, n: usize, v: RationalFn) {
        self.set(l, n, m, v.clone());
        self.set(l, m, n, v);
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|g| g.is_zero())
    }

    pub fn is_torsion_free(&self) -> bool {
        (0..4).all(|l| (0..4).all(|m| (m + 1..4).all(|n| self.get(l, m, n).sub(self.get(l, n, m)).is_zero())))
    }

    pub fn as_tensor(&self) -> TensorField {
        let mut t = TensorField::zero(1, 2);
        t.comps = self.gamma.clone();
        t
    }

    pub fn from_tensor(t: &TensorField) -> Connection {
        assert_eq!((t.contra, t.co), (1, 2));
        Connection { gamma: t.comps.clone() }
    }

    pub fn map(&self, f: impl Fn(&RationalFn) -> RationalFn) -> Connection {
        Connection { gamma: self.gamma.iter().map(f).collect() }
    }
}

impl fmt::Display for TensorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, c) in self.indices().into_iter().zip(&self.comps) {
            if c.is_zero() {
                continue;
            }
            let up: Vec<String> = idx[..self.contra].iter().map(|i| i.to_string()).collect();
            let dn: Vec<String> = idx[self.contra..].iter().map(|i| i.to_string()).collect();
            writeln!(f, "  [{}|{}] = {}", up.join(""), dn.join(""), c)?;
        }
        Ok(())
    }
}
