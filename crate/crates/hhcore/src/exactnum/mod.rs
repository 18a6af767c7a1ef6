//! Exact arithmetic: integers, finite fields, polynomials, cyclotomic integers.

pub mod arith;
pub mod cyc;
pub mod field;
pub mod fpoly;
pub mod primes;
pub mod zpoly;

pub use arith::{div_congruence, primitive_prime_divisors, zgm_solutions, ZgmClause, ZgmSolution};
pub use cyc::CycInt;
pub use field::{ff_make, ff_of_order, Fe, Field};
pub use primes::{euler_phi, mult_order};
pub use zpoly::{cyclotomic, ZPoly};
