use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numeric argument violates its documented domain.
    #[error("{name} = {value} is out of range: expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The ellipse parametrization needs `0 < γ < 1`.
    #[error("overlap {gamma} gives a degenerate ellipse (need 0 < gamma < 1)")]
    DegenerateEllipse { gamma: f64 },

    /// The point is not in the quantum set; `deficit = h − g > 0`.
    #[error("point lies outside the quantum set (g falls short of h by {deficit})")]
    Infeasible { deficit: f64 },

    #[error("unknown set name `{0}`")]
    UnknownSet(alloc::string::String),

    #[error("input index {0} is not 1 or 2")]
    InputIndex(u8),

    #[error("{0}")]
    InvalidArgument(&'static str),
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::OutOfRange {
            name,
            value,
            expected,
        }
    }
}
