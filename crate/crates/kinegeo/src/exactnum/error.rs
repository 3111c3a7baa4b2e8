use thiserror::Error;

use super::var::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by the zero rational function")]
    DivisionByZeroFn,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("variable {0} is not bound by the evaluation point")]
    UnboundVariable(Var),
    #[error("limit diverges: leading eps-order {order}")]
    DivergentLimit { order: i32 },
}
