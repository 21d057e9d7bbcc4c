//! Exact enumeration of permutations with restricted positions.
//!
//! Forbidden positions are described by boards of cells inside an `n x n`
//! square.  Boards are built either from explicit 0/1 matrices or from a set
//! of forbidden displacements `j - i` (straight boards) or `j - i mod n`
//! (circular boards).  The number of permutations avoiding a board is
//! obtained along two independent routes:
//!
//! * the rook polynomial of the board, computed by a memoized branching
//!   recursion, followed by the inclusion-exclusion substitution
//!   `t^k -> (-1)^k (n-k)!`;
//! * the permanent of the complementary 0/1 matrix, computed by Ryser's
//!   formula.
//!
//! Keeping both routes alive lets every result be cross-checked exactly.
//! On top of the counters sit exact recurrence guessers: constant-coefficient
//! recurrences for the rook-polynomial family of a displacement set,
//! polynomial-coefficient (holonomic) recurrences for the counting sequences,
//! and rational generating functions reconstructed from the scalar case.
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! nothing is ever rounded.
//!
//! The hot loops (sequence sweeps over `n`, Ryser's subset sum, candidate
//! recurrence fits) are data-parallel.  They run on a rayon pool when the
//! default `parallel` feature is enabled and degrade to plain sequential
//! iteration without it; [`force_sequential`] switches a parallel build back
//! to sequential execution at runtime, which the benchmarks use to compare
//! the two paths.

pub mod board;
pub mod counting;
mod error;
mod exec;
pub mod guess;
pub mod linalg;
pub mod poly;

pub use board::{Board, BranchRule, Matrix01, RookSolver};
pub use counting::{count_allowed, factorial, permanent, touchard, CountRequest, Counter, Mode};
pub use error::{Error, Result};
pub use exec::{force_sequential, parallelism_enabled};
pub use guess::{
    cfinite_to_gf, guess_cfinite_poly, guess_cfinite_scalar, guess_holonomic, CFiniteRec,
    HolonomicRec, RationalGF,
};
pub use linalg::RatMatrix;
pub use poly::{IntPoly, Var};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
