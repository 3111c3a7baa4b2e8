use std::fmt;

use super::error::ExactError;
use super::rational::{qfmt, Rational};
use super::var::{Var, NVARS};

/// An assignment of exact rational values to (some of) the variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point {
    vals: [Option<Rational>; NVARS],
}

impl Point {
    pub fn new() -> Point {
        Point::default()
    }

    /// Coordinates `x0..x3` together with the parameters `c`, `l`.
    pub fn chart(x: [Rational; 4], c: Rational, l: Rational) -> Point {
        let [x0, x1, x2, x3] = x;
        Point::new()
            .with(Var::X0, x0)
            .with(Var::X1, x1)
            .with(Var::X2, x2)
            .with(Var::X3, x3)
            .with(Var::C, c)
            .with(Var::L, l)
    }

    pub fn with(mut self, v: Var, r: Rational) -> Point {
        self.vals[v.index()] = Some(r);
        self
    }

    pub fn set(&mut self, v: Var, r: Rational) {
        self.vals[v.index()] = Some(r);
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.vals[v.index()].as_ref()
    }

    pub fn value(&self, v: Var) -> Result<&Rational, ExactError> {
        self.get(v).ok_or(ExactError::UnboundVariable(v))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter_map(|&v| self.get(v).map(|r| format!("{}={}", v, qfmt(r))))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
