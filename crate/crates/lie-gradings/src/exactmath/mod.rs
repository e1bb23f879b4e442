//! Exact arithmetic kernel: rationals, polynomials, dense rational matrices,
//! integer-matrix normal forms, rational simplex and branch-and-bound integer
//! programming. No floating point anywhere.

mod intmat;
mod intprog;
mod linprog;
mod mat;
mod poly;
mod rat;

pub use intmat::{IntMat, Snf};
pub use intprog::{ilp_solve, IlpOutcome, IntegerProgram};
pub use linprog::{simplex_solve, Certificate, LinearProgram, LpOutcome, Rel, Sense};
pub use mat::Mat;
pub use poly::{rational_roots, Poly};
pub use rat::{rat, rat_from_str, rat_to_string, ratio, Rat};
