//! Exact recurrence guessing with held-out verification.
//!
//! All the guessers share one discipline:
//!
//! 1. build an exact linear system from a *fitting window* of known terms —
//!    the latest terms before the held-out block, because family recurrences
//!    routinely fail at small `n` and early rows would poison the system;
//! 2. compute the system's nullspace over `Q`, exactly;
//! 3. scale each basis vector to a primitive integer vector and order the
//!    candidates by their largest coefficient's bit length;
//! 4. verify a candidate on `held_out` trailing terms that never touched the
//!    fit — a returned recurrence has never failed a held-out term;
//! 5. scan all known terms backwards to report `valid_from`, the first index
//!    from which the recurrence holds without exception.
//!
//! Budgets are scanned from cheap to expensive — C-finite guessing by
//! increasing order, holonomic guessing degree-major (every order at degree
//! 0, then at degree 1, ...) — so the result is the first candidate in that
//! scan to survive verification: everything cheaper produced either an
//! empty nullspace or a vector that failed its held-out block.

mod cfinite;
mod gf;
mod holonomic;

pub use cfinite::{guess_cfinite_poly, guess_cfinite_scalar, CFiniteRec};
pub use gf::{cfinite_to_gf, RationalGF};
pub use holonomic::{guess_holonomic, HolonomicRec};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::clear_denominators;
use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// Default number of trailing terms reserved for verification.
pub const DEFAULT_HELD_OUT: usize = 10;

/// Extra fitting rows beyond the number of unknowns, for overdetermination.
pub(crate) const EXTRA_ROWS: usize = 12;

/// Integer-clear the nullspace basis and order candidates by the bit length
/// of their largest coefficient (ties keep basis order).  Small vectors
/// first: the shortest description is the most plausible recurrence.
pub(crate) fn ordered_candidates(basis: Vec<Vec<BigRational>>) -> Vec<Vec<BigInt>> {
    let mut keyed: Vec<(u64, usize, Vec<BigInt>)> = basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let ints = clear_denominators(v);
            let bits = ints.iter().map(|c| c.bits()).max().unwrap_or(0);
            (bits, i, ints)
        })
        .collect();
    keyed.sort_by_key(|k| (k.0, k.1));
    keyed.into_iter().map(|(_, _, v)| v).collect()
}

/// Divide every entry by `gamma`, failing when any quotient is not integral.
/// Used to normalize a fitted vector to the monic form `a(n) = sum c_i
/// a(n-i)`: for integer sequences the minimal-order recurrence always
/// normalizes integrally (Fatou), so a failure just discards a spurious
/// candidate.
pub(crate) fn divide_out(values: &[BigInt], gamma: &BigInt) -> Option<Vec<BigInt>> {
    values
        .iter()
        .map(|v| {
            if (v % gamma).is_zero() {
                Some(v / gamma)
            } else {
                None
            }
        })
        .collect()
}

/// Decimal-string coefficient list for the JSON recurrence schema.
pub(crate) fn poly_to_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

pub(crate) fn poly_from_strings(var: Var, coeffs: &[String]) -> Result<IntPoly> {
    let parsed: Option<Vec<BigInt>> = coeffs.iter().map(|s| s.parse().ok()).collect();
    parsed
        .map(|c| IntPoly::new(var, c))
        .ok_or_else(|| Error::InvalidRecurrence("coefficients must be decimal integers".into()))
}

pub(crate) fn bigints_to_strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(BigInt::to_string).collect()
}

pub(crate) fn bigints_from_strings(xs: &[String]) -> Result<Vec<BigInt>> {
    xs.iter()
        .map(|s| {
            s.parse()
                .map_err(|_| Error::InvalidRecurrence("terms must be decimal integers".into()))
        })
        .collect()
}
