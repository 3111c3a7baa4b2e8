use std::fmt;

use crate::exactnum::{Monomial, MultiPoly, Rational, RationalFn, Var};

/// A polynomial vector field `X^μ ∂/∂x^μ` on the chart; coefficients may carry
/// Laurent monomials in `c`, `l` (and `eps` while a contraction is running).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VectorField {
    pub comps: [MultiPoly; 4],
}

impl VectorField {
    pub fn new(comps: [MultiPoly; 4]) -> VectorField {
        VectorField { comps }
    }

    pub fn zero() -> VectorField {
        VectorField::default()
    }

    /// The coordinate field `∂/∂x^mu`.
    pub fn partial(mu: usize) -> VectorField {
        let mut v = VectorField::zero();
        v.comps[mu] = MultiPoly::one();
        v
    }

    /// The dilation field `D = x^μ ∂_μ`.
    pub fn dilation() -> VectorField {
        VectorField::new(std::array::from_fn(|mu| MultiPoly::var(Var::coord(mu))))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, o: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].add(&o.comps[i])))
    }

    pub fn sub(&self, o: &VectorField) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].sub(&o.comps[i])))
    }

    pub fn neg(&self) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].neg()))
    }

    pub fn scale(&self, r: &Rational) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].scale(r)))
    }

    /// Multiply every component by the polynomial `p`.
    pub fn mul_poly(&self, p: &MultiPoly) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].mul(p)))
    }

    pub fn mul_term(&self, m: &Monomial, r: &Rational) -> VectorField {
        VectorField::new(std::array::from_fn(|i| self.comps[i].mul_term(m, r)))
    }

    /// `X(f) = X^μ ∂_μ f` on a polynomial.
    pub fn apply_poly(&self, f: &MultiPoly) -> MultiPoly {
        (0..4).fold(MultiPoly::zero(), |acc, mu| {
            if self.comps[mu].is_zero() {
                acc
            } else {
                acc.add(&self.comps[mu].mul(&f.deriv(Var::coord(mu))))
            }
        })
    }

    /// `X(f)` on a rational function.
    pub fn apply(&self, f: &RationalFn) -> RationalFn {
        (0..4).fold(RationalFn::zero(), |acc, mu| {
            if self.comps[mu].is_zero() {
                acc
            } else {
                acc.add(&f.deriv(Var::coord(mu)).mul_poly(&self.comps[mu]))
            }
        })
    }

    /// Component `mu` as a rational function.
    pub fn comp_fn(&self, mu: usize) -> RationalFn {
        RationalFn::from_poly(self.comps[mu].clone())
    }

    /// Maximal coordinate degree over all components.
    pub fn coord_degree(&self) -> i32 {
        self.comps.iter().filter(|p| !p.is_zero()).map(|p| p.coord_degree()).max().unwrap_or(0)
    }

    /// Coefficients never carry negative powers of a coordinate.
    pub fn is_polynomial_in_coords(&self) -> bool {
        self.comps.iter().all(|p| Var::COORDS.iter().all(|&v| p.min_exp(v) >= 0))
    }
}

/// `[X, Y]^μ = X^ν ∂_ν Y^μ − Y^ν ∂_ν X^μ`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> VectorField {
    VectorField::new(std::array::from_fn(|mu| x.apply_poly(&y.comps[mu]).sub(&y.apply_poly(&x.comps[mu]))))
}

/// `Σ cₖ Xₖ` with rational-function coefficients, as rational components.
pub fn combine(coeffs: &[RationalFn], fields: &[VectorField]) -> [RationalFn; 4] {
    std::array::from_fn(|mu| {
        coeffs.iter().zip(fields).fold(RationalFn::zero(), |acc, (c, f)| {
            if c.is_zero() || f.comps[mu].is_zero() {
                acc
            } else {
                acc.add(&c.mul_poly(&f.comps[mu]))
            }
        })
    })
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mu, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*d{}", p, mu)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
