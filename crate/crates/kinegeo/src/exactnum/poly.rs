//! Sparse multivariate Laurent polynomials with rational coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::error::ExactError;
use super::monomial::Monomial;
use super::point::Point;
use super::rational::{gcd_int, lcm_int, qfmt, qpow, Rational};
use super::var::{Var, NVARS};

/// A polynomial over ℚ in the fixed variable universe; exponents may be
/// negative (Laurent monomials), which keeps factors such as `1/c` or `l^-2`
/// inside the polynomial ring.
///
/// Terms are stored strictly descending in graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Rational)>,
}

fn desc(a: &(Monomial, Rational), b: &(Monomial, Rational)) -> Ordering {
    b.0.cmp(&a.0)
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> MultiPoly {
        MultiPoly::term(Monomial::ONE, r)
    }

    pub fn int(n: i64) -> MultiPoly {
        MultiPoly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, r: Rational) -> MultiPoly {
        if r.is_zero() {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, r)] }
        }
    }

    /// Build from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(mut terms: Vec<(Monomial, Rational)>) -> MultiPoly {
        terms.sort_by(desc);
        MultiPoly { terms: combine_sorted(terms) }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this polynomial is a constant (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// The single term if this polynomial is a (scaled) monomial.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].0, &self.terms[0].1))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn trailing(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect() }
    }

    /// Multiply by `r * m`; translation invariance of the order keeps terms sorted.
    pub fn mul_term(&self, m: &Monomial, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c * r)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        merge(&self.terms, &o.terms, false)
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        merge(&self.terms, &o.terms, true)
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero();
        }
        if let Some((m, c)) = self.as_term() {
            return o.mul_term(m, c);
        }
        if let Some((m, c)) = o.as_term() {
            return self.mul_term(m, c);
        }
        let mut out = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.push((ma.mul(mb), ca * cb));
            }
        }
        MultiPoly::from_terms(out)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        if let Some((m, c)) = self.as_term() {
            return MultiPoly::term(m.pow(e as i32), num_traits::pow(c.clone(), e as usize));
        }
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Partial derivative; exponents shift uniformly so the order is preserved.
    pub fn deriv(&self, v: Var) -> MultiPoly {
        let i = v.index();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut dm = *m;
                dm.0[i] -= 1;
                terms.push((dm, c * Rational::from_integer(BigInt::from(e))));
            }
        }
        MultiPoly { terms }
    }

    pub fn eval(&self, p: &Point) -> Result<Rational, ExactError> {
        let mut acc = Rational::zero();
        let mut cache: [Option<Rational>; NVARS] = Default::default();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let x = match &cache[v.index()] {
                    Some(x) => x.clone(),
                    None => {
                        let x = p.value(v)?.clone();
                        cache[v.index()] = Some(x.clone());
                        x
                    }
                };
                if e < 0 && x.is_zero() {
                    return Err(ExactError::PoleAtPoint);
                }
                t *= qpow(&x, e as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitute values for the bound variables of `p`, leaving the rest symbolic.
    pub fn eval_partial(&self, p: &Point) -> Result<MultiPoly, ExactError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut m = *m;
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if let Some(x) = p.get(v) {
                    if e < 0 && x.is_zero() {
                        return Err(ExactError::PoleAtPoint);
                    }
                    c *= qpow(x, e as i32);
                    m = m.with_exp(v, 0);
                }
            }
            out.push((m, c));
        }
        Ok(MultiPoly::from_terms(out))
    }

    /// Apply the monomial substitution `v ↦ coef_v · mono_v` for every variable.
    pub fn map_monomial(&self, images: &[(Rational, Monomial); NVARS]) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            let mut nc = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let (k, img) = &images[v.index()];
                nm = nm.mul(&img.pow(e as i32));
                if !k.is_one() {
                    nc *= qpow(k, e as i32);
                }
            }
            out.push((nm, nc));
        }
        MultiPoly::from_terms(out)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| Monomial::min(&acc, m)),
        }
    }

    pub fn max_exp(&self, v: Var) -> i16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_exp(&self, v: Var) -> i16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn free_of(&self, v: Var) -> bool {
        self.terms.iter().all(|(m, _)| m.exp(v) == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonnegative())
    }

    /// Maximal total degree in the coordinates.
    pub fn coord_degree(&self) -> i32 {
        self.terms.iter().map(|(m, _)| m.coord_degree()).max().unwrap_or(0)
    }

    /// Lowest `v`-degree `k` and the coefficient of `v^k` (free of `v`).
    pub fn lowest_in(&self, v: Var) -> (i16, MultiPoly) {
        let k = self.min_exp(v);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == k)
            .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
            .collect();
        (k, MultiPoly::from_terms(terms))
    }

    /// Split `self = κ · p` with `p` having coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive_parts(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), MultiPoly::zero());
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            den = lcm_int(&den, c.denom());
            num = gcd_int(&num, c.numer());
        }
        let mut kappa = Rational::new(num, den);
        if self.terms[0].1.is_negative() {
            kappa = -kappa;
        }
        let inv = kappa.recip();
        (kappa, self.scale(&inv))
    }

    /// Split `self = κ · x^m · p` where `p` has no monomial content, nonnegative
    /// exponents, coprime integer coefficients and positive leading coefficient.
    pub fn normalize_factor(&self) -> (Rational, Monomial, MultiPoly) {
        let m = self.min_monomial();
        let shifted = self.mul_monomial(&m.inv());
        let (kappa, p) = shifted.primitive_parts();
        (kappa, m, p)
    }

    /// Exact quotient `self / d` for ordinary (nonnegative-exponent)
    /// polynomials, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (ld_m, ld_c) = d.leading().unwrap();
        let (ls_m, _) = self.leading().unwrap();
        if !ld_m.divides(ls_m) || !d.trailing().unwrap().0.divides(&self.trailing().unwrap().0) {
            return None;
        }
        for v in Var::ALL {
            if d.max_exp(v) > self.max_exp(v) || d.min_exp(v) > self.min_exp(v) {
                return None;
            }
        }
        if self.terms.len() < d.terms.len() && self.terms.len() == 1 {
            return None;
        }
        let inv_lc = ld_c.recip();
        let mut r = self.terms.clone();
        let mut q = Vec::new();
        while let Some((lm, lc)) = r.first() {
            if !ld_m.divides(lm) {
                return None;
            }
            let qm = lm.div(ld_m);
            let qc = lc * &inv_lc;
            let sub: Vec<(Monomial, Rational)> = d.terms.iter().map(|(m, c)| (m.mul(&qm), c * &qc)).collect();
            r = merge(&r, &sub, true).terms;
            q.push((qm, qc));
        }
        Some(MultiPoly { terms: q })
    }
}

fn combine_sorted(terms: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
    let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => {
                *lc += c;
                if lc.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> MultiPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    MultiPoly { terms: out }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&qfmt(&a))?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", qfmt(&a), m)?;
            }
        }
        Ok(())
    }
}
