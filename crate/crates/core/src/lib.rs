//! Exact computation of the spin Dirac-operator defect `delta(S, c)` of
//! spherical 3-manifolds, and the 10/8-type constraints it yields.
//!
//! * [`sigma`]: lens-space defects `sigma(q, p, e)` and even continued fractions.
//! * [`seifert`]: Seifert invariants, spin structures, the closed-form table
//!   and the general two-singular-point engine.
//! * [`plumbing`]: weighted trees, exact signatures, Wu classes, blow-downs and
//!   spin plumbings bounded by a given `(S, c)`.
//! * [`obstruction`]: the 10/8 verdict kernel and its applications.
//! * [`cli`]: the command-line front end.

pub mod arith;
pub mod cli;
pub mod obstruction;
pub mod plumbing;
pub mod seifert;
pub mod selftest;
pub mod sigma;

pub use arith::{Int, Rational, Sign};
