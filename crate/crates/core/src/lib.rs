//! Frobenius numbers of triples and the residue covering function
//! `N_a(b, c)`, with the scan machinery used to probe bounds relating them.
//!
//! * [`arith`]: gcd, modular inverses, totient, continued fractions.
//! * [`frobenius`]: residue tables, `f(a, b, c)`, and a sieve oracle.
//! * [`nfunc`]: `N_a(b, c)`, its reduction to `N_a(1, t)`, convergent bounds.
//! * [`lab`]: interval checks, the `(abc)^{5/8}` conjecture, family and
//!   density scans.
//! * [`cli`]: the `froblab` command line.

pub mod arith;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod lab;
pub mod nfunc;

pub use error::{ArithError, FrobeniusError, LabError, NfuncError};
pub use frobenius::{frobenius_number, ResidueTable, Triple};

/// Largest generator accepted from the command line and the C interface.
/// Keeps `a·b·c` below 2^63 and every residue table entry in 64 bits.
pub const MAX_GENERATOR: u64 = 2_000_000;
