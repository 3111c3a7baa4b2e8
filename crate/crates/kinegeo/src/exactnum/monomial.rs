use std::cmp::Ordering;
use std::fmt;

use super::var::{Var, NVARS};

/// A Laurent monomial: one signed exponent per variable of the universe.
///
/// Ordered graded-lexicographically (total degree first, then `x0 > x1 > … > eps`).
/// The order is translation invariant, so multiplying a sorted term list by a
/// monomial keeps it sorted.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [i16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i16) -> Monomial {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    /// Total degree in the coordinates `x0..x3` only.
    pub fn coord_degree(&self) -> i32 {
        self.0[..4].iter().map(|&e| e as i32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = [0; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(o.0[i]).expect("monomial exponent overflow");
        }
        Monomial(r)
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        let mut r = [0; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[i].checked_sub(o.0[i]).expect("monomial exponent overflow");
        }
        Monomial(r)
    }

    pub fn inv(&self) -> Monomial {
        Monomial::ONE.div(self)
    }

    pub fn pow(&self, e: i32) -> Monomial {
        let mut r = [0; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            let v = self.0[i] as i32 * e;
            *slot = i16::try_from(v).expect("monomial exponent overflow");
        }
        Monomial(r)
    }

    /// Componentwise `self <= o`, i.e. `self | o` among ordinary monomials.
    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn min(&self, o: &Monomial) -> Monomial {
        let mut r = [0; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[i].min(o.0[i]);
        }
        Monomial(r)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn with_exp(&self, v: Var, e: i16) -> Monomial {
        let mut m = *self;
        m.0[v.index()] = e;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
