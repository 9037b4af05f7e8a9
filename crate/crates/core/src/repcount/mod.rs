//! Representation counts: closed divisor-sum formulas and the brute-force
//! oracles they are checked against.

mod brute;
mod cubic;
mod divisor;
mod form;
mod quadratic;

pub use brute::{brute_force_bivariate, brute_force_count, CountResult};
pub use cubic::{
    d3_fn, diagonal_divisor, h_kuv, h_star, r3_signed, r5, r_plus3, s_cubic_ab, s_nu_fn, sigma_star,
    starred_divisors, StarredDivisor,
};
pub use divisor::{
    conv_prod_count, conv_prod_count_shifted, conv_sum_count, general_f2_count, poly_rep_r, power_pair_weight,
    root_count_seq, theorem57_count, theorem57_terms, xnu_xy_count,
};
pub use form::{Combiner, FormPart, FormSpec};
pub use quadratic::{r2_jacobi, r2_multi, r_quadratic_t, shift_count};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("no finite enumeration bound can be derived for this form")]
    UnboundedEnumeration,
    #[error("the coefficients must have gcd 1")]
    GcdNotOne,
    #[error("the linear coefficients must satisfy 2A | C and 2B | D")]
    CongruenceViolated,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("{what}: formula gives {formula}, enumeration gives {oracle}")]
    CrossCheckFailed { what: String, formula: String, oracle: String },
    #[error("form syntax error at byte {pos}: {msg}")]
    FormSyntax { pos: usize, msg: String },
    #[error("bad domain assignment: {0}")]
    BadDomain(String),
}

pub type RepResult<T> = Result<T, RepError>;

fn cross_check<T: PartialEq + std::fmt::Display>(what: &str, formula: T, oracle: T) -> RepResult<T> {
    if formula == oracle {
        Ok(formula)
    } else {
        Err(RepError::CrossCheckFailed {
            what: what.to_string(),
            formula: formula.to_string(),
            oracle: oracle.to_string(),
        })
    }
}
