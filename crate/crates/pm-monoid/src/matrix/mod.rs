//! Exact rational linear algebra: matrices, canonical subspaces, term
//! sequences with nested domains, limits of polynomial families, and
//! floating-point convergence certification.

mod convergence;
mod json;
mod rational;
mod sequence;
mod subspace;

pub use convergence::{check_convergence, projective_distance, ConvergenceReport, TermConvergence};
pub use json::{
    family_to_json, m_to_json, parse_family, parse_m, parse_m_unchecked, parse_samples,
    parse_tilde, samples_to_json, tilde_to_json,
};
pub use rational::{format_rational, parse_rational, RationalMatrix};
pub use sequence::{
    limit_of_family, realize_monomial, tilde_product, to_m, to_tilde, MTerm, MatrixSequenceM,
    MatrixSequenceTilde, PolynomialMatrixFamily,
};
pub use subspace::Subspace;
