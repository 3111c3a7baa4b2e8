use serde::{Deserialize, Serialize};

use super::error::ExactError;
use super::ratfn::RationalFn;

/// How a prefactored function behaves as `eps → 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Finite,
    Zero,
    Divergent,
}

/// Lowest eps-order of a function together with its eps-free coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentLimit {
    pub order: i32,
    pub leading: RationalFn,
    pub verdict: Verdict,
}

impl LaurentLimit {
    /// The limit value: the leading coefficient when finite, zero when the
    /// function vanishes in the limit.
    pub fn value(&self) -> Result<RationalFn, ExactError> {
        match self.verdict {
            Verdict::Finite => Ok(self.leading.clone()),
            Verdict::Zero => Ok(RationalFn::zero()),
            Verdict::Divergent => Err(ExactError::DivergentLimit { order: self.order }),
        }
    }
}

/// Laurent limit of `eps^prefactor_order · f`.
pub fn laurent_limit(f: &RationalFn, prefactor_order: i32) -> LaurentLimit {
    f.laurent(prefactor_order)
}
