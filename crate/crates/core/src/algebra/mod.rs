//! Exact scalar rings.

pub mod fraction;
pub mod gcd;
pub mod poly;
pub mod rational;

pub use fraction::Fraction;
pub use poly::{GrLex, LatticeLex, Mono, Poly, TermOrder, MAX_VARS};
pub use rational::Rational;

/// Polynomials in the simple roots α₁..α_r and ħ (variable index r).
pub type CohScalar = Poly<GrLex>;
/// Laurent polynomials in e^{α₁}..e^{α_r} and y (variable index r).
pub type KScalar = Poly<LatticeLex>;
pub type CohFraction = Fraction<GrLex>;
pub type KFraction = Fraction<LatticeLex>;
