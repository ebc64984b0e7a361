//! Exact arithmetic: Q, Q(u), quadratic extensions of Q(u), and sparse
//! multivariate polynomials over them.

use thiserror::Error;

/// Implements the owned and mixed operator forms in terms of `&T op &T`.
macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                &self + o
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                &self - o
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                &self * o
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

pub mod factor;
pub mod linalg;
pub mod mpoly;
pub mod parse;
pub mod quadext;
pub mod rat;
pub mod ratfunc;
pub mod resultant;
pub mod scalar;
pub mod upoly;

pub use factor::{factor_square_free_in_u, UFactorization};
pub use mpoly::MPoly;
pub use parse::{parse_poly, parse_scalar};
pub use quadext::QuadExt;
pub use rat::Rat;
pub use ratfunc::RatFuncU;
pub use resultant::{resultant, resultant_in};
pub use scalar::Scalar;
pub use upoly::UPolyU;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{name}` at {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("`{0}` is reserved and cannot be declared as a variable")]
    ReservedName(String),
    #[error("cannot combine sqrt({left}) with sqrt({right})")]
    RadicandMismatch { left: String, right: String },
    #[error("square root of an element that already involves a square root")]
    NestedRadical,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by an expression that involves variables")]
    NonConstantDivisor,
    #[error("not divisible")]
    NotDivisible,
    #[error("variable sets differ: [{expected}] vs [{found}]")]
    VariableMismatch { expected: String, found: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("coefficient {0} is not a polynomial in u")]
    NonPolynomialCoefficient(String),
    #[error("specialization failed: {0}")]
    Specialization(String),
}
