//! Exact arithmetic for the hybrid Diophantine system
//!
//! ```text
//! A + B = C,   A * B * C = D^n
//! ```
//!
//! The crate verifies candidate tuples, builds explicit solution families,
//! applies the known non-existence criteria, searches for prime-producing
//! witnesses and brute-force solutions, decomposes integers into parts with a
//! k-th power product, and works with the n = 3 system over Q(sqrt t).

pub mod brute;
pub mod certificates;
pub mod constructors;
pub mod error;
pub mod factor;
pub mod hybrid;
pub mod numeric;
pub mod obstructions;
pub mod primes;
pub mod quad;
pub mod report;
pub mod roots;
pub mod shards;
pub mod waring;

pub use error::{Error, Result, WitnessFailure};
pub use factor::{factorize, radical, squarefree_split, Factorization, Factorizer};
pub use numeric::{parse_int, parse_rat, Int, Rat};
pub use primes::is_prime;
pub use roots::{nth_root_floor, perfect_power};
