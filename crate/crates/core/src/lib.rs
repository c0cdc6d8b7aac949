//! Finite and continuous imprecise-probability representations — clouds,
//! possibility distributions, generalized p-boxes, probability intervals
//! and random sets — with exact rational arithmetic throughout.
//!
//! The crate provides conversions between the representations, emptiness
//! tests, exact lower/upper probabilities over the induced credal sets (a
//! built-in exact simplex), 2-monotonicity analysis, and inner/outer
//! approximations, plus piecewise-linear machinery for clouds on a bounded
//! real interval.

pub mod chateauneuf;
pub mod cloud;
pub mod cloudops;
pub mod constraints;
pub mod continuous;
pub mod credal;
mod error;
pub mod intervals;
pub mod rational;
mod simplex;
pub mod space;

pub use cloud::{Cloud, LevelSequence, PossibilityDistribution};
pub use cloudops::GeneralizedPBox;
pub use constraints::{
    cloud_constraints, possibility_constraints, ConstraintRow, CredalConstraints,
};
pub use continuous::{
    Cell, Comonotonicity, ContinuousCloud, Discretization, Interval, IntervalUnion, PiecewiseLinear,
};
pub use credal::{LpResult, MassFunction, SetFunction, TwoMonotone};
pub use error::Error;
pub use intervals::{IntervalPartialOrder, ProbabilityInterval};
pub use rational::Rat;
pub use space::{EventSet, OutcomeSpace};
