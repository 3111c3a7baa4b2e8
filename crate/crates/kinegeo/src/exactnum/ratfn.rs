//! Rational functions with a factored denominator.

use std::fmt;

use num_traits::{One, Zero};

use super::error::ExactError;
use super::laurent::{LaurentLimit, Verdict};
use super::monomial::Monomial;
use super::point::Point;
use super::poly::MultiPoly;
use super::rational::{q, qpow, Rational};
use super::var::{Var, NVARS};

/// `num / Π fᵢ^eᵢ` over ℚ.
///
/// Monomials are units (Laurent exponents are allowed in `num`), so each
/// denominator factor `fᵢ` is kept normalized: ordinary exponents, no monomial
/// content, coprime integer coefficients, positive leading coefficient and not
/// constant. Factors are sorted, so the representation is deterministic for a
/// given computation; mathematical equality is decided by `a − b = 0`.
#[derive(Clone, Debug, Default, Hash)]
pub struct RationalFn {
    num: MultiPoly,
    den: Vec<(MultiPoly, u32)>,
}

impl RationalFn {
    pub fn zero() -> RationalFn {
        RationalFn::default()
    }

    pub fn one() -> RationalFn {
        RationalFn::from_poly(MultiPoly::one())
    }

    pub fn int(n: i64) -> RationalFn {
        RationalFn::from_poly(MultiPoly::int(n))
    }

    pub fn constant(r: Rational) -> RationalFn {
        RationalFn::from_poly(MultiPoly::constant(r))
    }

    pub fn var(v: Var) -> RationalFn {
        RationalFn::from_poly(MultiPoly::var(v))
    }

    /// `r · m` for a (Laurent) monomial `m`.
    pub fn term(m: Monomial, r: Rational) -> RationalFn {
        RationalFn::from_poly(MultiPoly::term(m, r))
    }

    pub fn from_poly(p: MultiPoly) -> RationalFn {
        RationalFn { num: p, den: Vec::new() }
    }

    /// `n / d`; fails when `d` is the zero polynomial.
    pub fn from_parts(n: MultiPoly, d: &MultiPoly) -> Result<RationalFn, ExactError> {
        if d.is_zero() {
            return Err(ExactError::DivisionByZeroFn);
        }
        let mut f = RationalFn::from_poly(n);
        f.push_den_poly(d, 1);
        f.cancel();
        Ok(f)
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(MultiPoly, u32)] {
        &self.den
    }

    /// The expanded denominator `Π fᵢ^eᵢ`.
    pub fn denom(&self) -> MultiPoly {
        self.den.iter().fold(MultiPoly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }

    /// Exact zero test: the numerator is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn free_of(&self, v: Var) -> bool {
        self.num.free_of(v) && self.den.iter().all(|(f, _)| f.free_of(v))
    }

    /// True when no coordinate `x0..x3` occurs.
    pub fn is_coordinate_free(&self) -> bool {
        Var::COORDS.iter().all(|&v| self.free_of(v))
    }

    /// Rough size, used as a pivoting heuristic.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.iter().map(|(f, e)| f.len() * *e as usize).sum::<usize>()
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, r: &Rational) -> RationalFn {
        if r.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn mul_term(&self, m: &Monomial, r: &Rational) -> RationalFn {
        if r.is_zero() || self.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: self.num.mul_term(m, r), den: self.den.clone() }
    }

    pub fn add(&self, o: &RationalFn) -> RationalFn {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &RationalFn) -> RationalFn {
        self.combine(o, true)
    }

    fn combine(&self, o: &RationalFn, negate: bool) -> RationalFn {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        if self.den == o.den {
            let num = if negate { self.num.sub(&o.num) } else { self.num.add(&o.num) };
            let mut r = RationalFn { num, den: self.den.clone() };
            r.cancel();
            return r;
        }
        // Common denominator: per-factor maximum exponent.
        let mut den: Vec<(MultiPoly, u32)> = self.den.clone();
        for (f, e) in &o.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, ge)) => *ge = (*ge).max(*e),
                None => den.push((f.clone(), *e)),
            }
        }
        den.sort();
        let lift = |x: &RationalFn| -> MultiPoly {
            let mut n = x.num.clone();
            for (f, e) in &den {
                let have = x.den.iter().find(|(g, _)| g == f).map(|(_, k)| *k).unwrap_or(0);
                if *e > have {
                    n = n.mul(&f.pow(*e - have));
                }
            }
            n
        };
        let a = lift(self);
        let b = lift(o);
        let num = if negate { a.sub(&b) } else { a.add(&b) };
        let mut r = RationalFn { num, den };
        r.cancel();
        r
    }

    pub fn mul(&self, o: &RationalFn) -> RationalFn {
        if self.is_zero() || o.is_zero() {
            return RationalFn::zero();
        }
        let mut r = RationalFn { num: self.num.mul(&o.num), den: self.den.clone() };
        for (f, e) in &o.den {
            r.insert_factor(f.clone(), *e);
        }
        if !self.den.is_empty() || !o.den.is_empty() {
            r.cancel();
        }
        r
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RationalFn {
        self.mul(&RationalFn::from_poly(p.clone()))
    }

    pub fn recip(&self) -> Result<RationalFn, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZeroFn);
        }
        let mut r = RationalFn::from_poly(self.denom());
        r.push_den_poly(&self.num, 1);
        r.cancel();
        Ok(r)
    }

    pub fn div(&self, o: &RationalFn) -> Result<RationalFn, ExactError> {
        if o.is_zero() {
            return Err(ExactError::DivisionByZeroFn);
        }
        if self.is_zero() {
            return Ok(RationalFn::zero());
        }
        let mut r = RationalFn { num: self.num.clone(), den: self.den.clone() };
        for (f, e) in &o.den {
            r.num = r.num.mul(&f.pow(*e));
        }
        r.push_den_poly(&o.num, 1);
        r.cancel();
        Ok(r)
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i32) -> Result<RationalFn, ExactError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let e = e as u32;
        if e == 0 {
            return Ok(RationalFn::one());
        }
        Ok(RationalFn {
            num: self.num.pow(e),
            den: self.den.iter().map(|(f, k)| (f.clone(), k * e)).collect(),
        })
    }

    /// Partial derivative by the quotient rule on the factored denominator.
    pub fn deriv(&self, v: Var) -> RationalFn {
        if self.is_zero() {
            return RationalFn::zero();
        }
        let dn = self.num.deriv(v);
        let moving: Vec<usize> = (0..self.den.len()).filter(|&i| !self.den[i].0.free_of(v)).collect();
        if moving.is_empty() {
            let mut r = RationalFn { num: dn, den: self.den.clone() };
            r.cancel();
            return r;
        }
        // d(n / Π f^e) = (n' Π f − n Σ eᵢ fᵢ' Π_{j≠i} fⱼ) / Π f^{e+1}   (moving factors only)
        let prod_all = moving.iter().fold(MultiPoly::one(), |acc, &i| acc.mul(&self.den[i].0));
        let mut num = dn.mul(&prod_all);
        for &i in &moving {
            let (fi, ei) = &self.den[i];
            let mut t = fi.deriv(v).scale(&q(*ei as i64));
            for &j in &moving {
                if j != i {
                    t = t.mul(&self.den[j].0);
                }
            }
            num = num.sub(&self.num.mul(&t));
        }
        let mut den = self.den.clone();
        for &i in &moving {
            den[i].1 += 1;
        }
        let mut r = RationalFn { num, den };
        r.cancel();
        r
    }

    pub fn eval(&self, p: &Point) -> Result<Rational, ExactError> {
        let mut d = Rational::one();
        for (f, e) in &self.den {
            let v = f.eval(p)?;
            if v.is_zero() {
                return Err(ExactError::PoleAtPoint);
            }
            d *= qpow(&v, *e as i32);
        }
        Ok(self.num.eval(p)? / d)
    }

    /// Substitute the variables bound by `p`, keeping the rest symbolic.
    pub fn eval_partial(&self, p: &Point) -> Result<RationalFn, ExactError> {
        let mut r = RationalFn::from_poly(self.num.eval_partial(p)?);
        for (f, e) in &self.den {
            let fp = f.eval_partial(p)?;
            if fp.is_zero() {
                return Err(ExactError::PoleAtPoint);
            }
            r.push_den_poly(&fp, *e);
        }
        r.cancel();
        Ok(r)
    }

    /// Monomial substitution `v ↦ kᵥ · mᵥ` applied to every variable.
    pub fn subst_monomial(&self, images: &[(Rational, Monomial); NVARS]) -> RationalFn {
        let mut r = RationalFn::from_poly(self.num.map_monomial(images));
        for (f, e) in &self.den {
            r.push_den_poly(&f.map_monomial(images), *e);
        }
        r.cancel();
        r
    }

    /// General substitution `v ↦ images[v]` (unmapped variables stay fixed).
    pub fn compose(&self, images: &[Option<RationalFn>; NVARS]) -> Result<RationalFn, ExactError> {
        let mut cache = PowerCache::new(images);
        let mut r = compose_poly(&self.num, &mut cache)?;
        for (f, e) in &self.den {
            let fi = compose_poly(f, &mut cache)?;
            r = r.div(&fi.pow(*e as i32)?)?;
        }
        Ok(r)
    }

    /// Leading behaviour as `eps → 0` after multiplying by `eps^prefactor_order`.
    pub fn laurent(&self, prefactor_order: i32) -> LaurentLimit {
        if self.is_zero() {
            return LaurentLimit { order: i32::MAX, leading: RationalFn::zero(), verdict: Verdict::Zero };
        }
        let (kn, n0) = self.num.lowest_in(Var::Eps);
        let mut order = kn as i32 + prefactor_order;
        let mut leading = RationalFn::from_poly(n0);
        for (f, e) in &self.den {
            let (kf, f0) = f.lowest_in(Var::Eps);
            order -= kf as i32 * *e as i32;
            leading.push_den_poly(&f0, *e);
        }
        leading.cancel();
        let verdict = match order {
            0 => Verdict::Finite,
            o if o > 0 => Verdict::Zero,
            _ => Verdict::Divergent,
        };
        LaurentLimit { order, leading, verdict }
    }

    fn push_den_poly(&mut self, p: &MultiPoly, e: u32) {
        debug_assert!(!p.is_zero());
        let (kappa, m, core) = p.normalize_factor();
        let k = -(e as i32);
        self.num = self.num.mul_term(&m.pow(k), &qpow(&kappa, k));
        if core.constant_value().is_none() {
            self.insert_factor(core, e);
        }
    }

    /// Add a normalized factor, refining against known factors by exact division.
    fn insert_factor(&mut self, f: MultiPoly, e: u32) {
        if e == 0 {
            return;
        }
        if let Some(slot) = self.den.iter_mut().find(|(g, _)| *g == f) {
            slot.1 += e;
            return;
        }
        for i in 0..self.den.len() {
            let g = self.den[i].0.clone();
            if f.len() >= g.len() {
                if let Some(qt) = f.div_exact(&g) {
                    self.den[i].1 += e;
                    if qt.constant_value().is_none() {
                        self.insert_factor(qt, e);
                    }
                    return;
                }
            } else if let Some(qt) = g.div_exact(&f) {
                let ge = self.den.remove(i).1;
                self.insert_factor(f, e + ge);
                if qt.constant_value().is_none() {
                    self.insert_factor(qt, ge);
                }
                return;
            }
        }
        self.den.push((f, e));
        self.den.sort();
    }

    /// Remove denominator factors that divide the numerator.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        if self.den.is_empty() {
            return;
        }
        let m = self.num.min_monomial();
        let mut core = self.num.mul_monomial(&m.inv());
        let mut changed = false;
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match core.div_exact(f) {
                    Some(qt) => {
                        core = qt;
                        *e -= 1;
                        changed = true;
                    }
                    None => break,
                }
            }
        }
        if changed {
            self.num = core.mul_monomial(&m);
            self.den.retain(|(_, e)| *e > 0);
        }
    }
}

struct PowerCache<'a> {
    images: &'a [Option<RationalFn>; NVARS],
    pos: Vec<Vec<RationalFn>>,
    neg: Vec<Vec<RationalFn>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [Option<RationalFn>; NVARS]) -> Self {
        PowerCache { images, pos: vec![Vec::new(); NVARS], neg: vec![Vec::new(); NVARS] }
    }

    fn get(&mut self, v: Var, e: i16) -> Result<RationalFn, ExactError> {
        let i = v.index();
        let base = match &self.images[i] {
            Some(f) => f.clone(),
            None => RationalFn::var(v),
        };
        let k = e.unsigned_abs() as usize;
        let (list, b) = if e > 0 { (&mut self.pos[i], base) } else { (&mut self.neg[i], base.recip()?) };
        if list.is_empty() {
            list.push(RationalFn::one());
        }
        while list.len() <= k {
            let next = list.last().unwrap().mul(&b);
            list.push(next);
        }
        Ok(list[k].clone())
    }
}

fn compose_poly(p: &MultiPoly, cache: &mut PowerCache<'_>) -> Result<RationalFn, ExactError> {
    let mut acc = RationalFn::zero();
    for (m, c) in p.terms() {
        let mut t = RationalFn::constant(c.clone());
        for v in Var::ALL {
            let e = m.exp(v);
            if e != 0 {
                t = t.mul(&cache.get(v, e)?);
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

impl PartialEq for RationalFn {
    fn eq(&self, o: &Self) -> bool {
        (self.num == o.num && self.den == o.den) || self.sub(o).is_zero()
    }
}

impl Eq for RationalFn {}

impl From<MultiPoly> for RationalFn {
    fn from(p: MultiPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl From<Var> for RationalFn {
    fn from(v: Var) -> Self {
        RationalFn::var(v)
    }
}

impl From<Rational> for RationalFn {
    fn from(r: Rational) -> Self {
        RationalFn::constant(r)
    }
}

impl From<i64> for RationalFn {
    fn from(n: i64) -> Self {
        RationalFn::int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&RationalFn> for &RationalFn {
            type Output = RationalFn;
            fn $m(self, o: &RationalFn) -> RationalFn {
                RationalFn::$f(self, o)
            }
        }
        impl std::ops::$tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, o: RationalFn) -> RationalFn {
                RationalFn::$f(&self, &o)
            }
        }
        impl std::ops::$tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, o: &RationalFn) -> RationalFn {
                RationalFn::$f(&self, o)
            }
        }
        impl std::ops::$tr<RationalFn> for &RationalFn {
            type Output = RationalFn;
            fn $m(self, o: RationalFn) -> RationalFn {
                RationalFn::$f(self, &o)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn::neg(&self)
    }
}

impl std::ops::Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn::neg(self)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        f.write_str("/")?;
        let many = self.den.len() > 1 || self.den[0].1 > 1;
        if many {
            f.write_str("(")?;
        }
        for (i, (p, e)) in self.den.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if p.len() == 1 && *e == 1 {
                write!(f, "{}", p)?;
            } else {
                write!(f, "({})", p)?;
            }
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if many {
            f.write_str(")")?;
        }
        Ok(())
    }
}
