//! Constant-coefficient (C-finite) recurrences.
//!
//! The general form handled here is `R_n = c_1(t) R_{n-1} + ... + c_d(t)
//! R_{n-d}` where the terms are polynomials in `t` and the `c_i` are
//! polynomials of bounded degree — the shape rook-polynomial families
//! satisfy.  Scalar sequences are the degenerate case where everything is
//! constant, so the scalar guesser simply wraps its terms as constant
//! polynomials and shares the whole pipeline.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{divide_out, ordered_candidates, poly_from_strings, poly_to_strings, EXTRA_ROWS};
use crate::linalg::RatMatrix;
use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// A verified constant-coefficient recurrence together with the initial
/// terms and the index from which it provably holds on the known data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CFiniteRecRepr", into = "CFiniteRecRepr")]
pub struct CFiniteRec {
    /// `c_1 ..= c_d`, polynomials in `t`; `c_d` is nonzero.
    coeffs: Vec<IntPoly>,
    /// The family's first `d` terms `R_1 ..= R_d`.
    initial: Vec<IntPoly>,
    /// Smallest 1-based index `n` with `R_n = sum c_i R_{n-i}` from there on.
    valid_from: usize,
}

impl CFiniteRec {
    pub fn new(coeffs: Vec<IntPoly>, initial: Vec<IntPoly>, valid_from: usize) -> Result<Self> {
        if coeffs.is_empty() || coeffs.last().is_some_and(IntPoly::is_zero) {
            return Err(Error::InvalidRecurrence(
                "order must be >= 1 with a nonzero trailing coefficient".into(),
            ));
        }
        if initial.len() != coeffs.len() {
            return Err(Error::InvalidRecurrence(format!(
                "order {} needs exactly that many initial terms, got {}",
                coeffs.len(),
                initial.len()
            )));
        }
        if let Some(bad) = coeffs.iter().chain(&initial).find(|p| p.var() != Var::T) {
            return Err(Error::VarMismatch(bad.var().letter(), 't'));
        }
        if valid_from < coeffs.len() + 1 {
            return Err(Error::InvalidRecurrence(format!(
                "an order-{} recurrence cannot hold before index {}",
                coeffs.len(),
                coeffs.len() + 1
            )));
        }
        Ok(CFiniteRec {
            coeffs,
            initial,
            valid_from,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[IntPoly] {
        &self.initial
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    /// Largest `t`-degree over the coefficients.
    pub fn max_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Whether every coefficient is constant (a plain scalar recurrence).
    pub fn is_scalar(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_constant)
    }

    /// The coefficients as plain integers, when constant.
    pub fn constant_coeffs(&self) -> Option<Vec<BigInt>> {
        self.is_scalar()
            .then(|| self.coeffs.iter().map(|c| c.coeff(0)).collect())
    }

    /// `sum c_i * window[d - i]` — the next term after `window`, which holds
    /// the previous `d` terms in ascending index order.
    fn next_term(&self, window: &[IntPoly]) -> IntPoly {
        let d = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .fold(IntPoly::zero(Var::T), |acc, (i, c)| {
                &acc + &c
                    .try_mul(&window[d - 1 - i])
                    .expect("variable tags checked at construction")
            })
    }

    /// Does the recurrence hold at every index `n >= from` present in
    /// `terms`?  Vacuously true when no index is applicable.
    pub fn holds_on_polys(&self, terms: &[IntPoly], from: usize) -> bool {
        let d = self.order();
        (from.max(d + 1)..=terms.len())
            .all(|n| self.next_term(&terms[n - 1 - d..n - 1]) == terms[n - 1])
    }

    /// Scalar variant of [`holds_on_polys`](Self::holds_on_polys); a
    /// recurrence with non-constant coefficients never holds on scalars.
    pub fn holds_on_scalars(&self, terms: &[BigInt], from: usize) -> bool {
        let Some(cs) = self.constant_coeffs() else {
            return false;
        };
        let d = cs.len();
        (from.max(d + 1)..=terms.len()).all(|n| {
            let predicted: BigInt = cs
                .iter()
                .enumerate()
                .map(|(i, c)| c * &terms[n - 2 - i])
                .sum();
            predicted == terms[n - 1]
        })
    }

    /// Extend `terms` (which must cover the validity prefix) to exactly
    /// `len` terms.
    pub fn extend_polys(&self, terms: &[IntPoly], len: usize) -> Result<Vec<IntPoly>> {
        let needed = self.order().max(self.valid_from - 1);
        if terms.len() < needed {
            return Err(Error::MissingPrefix {
                needed,
                got: terms.len(),
            });
        }
        let mut out = terms.to_vec();
        while out.len() < len {
            let next = self.next_term(&out[out.len() - self.order()..]);
            out.push(next);
        }
        out.truncate(len);
        Ok(out)
    }

    /// Scalar variant of [`extend_polys`](Self::extend_polys).
    pub fn extend_scalars(&self, terms: &[BigInt], len: usize) -> Result<Vec<BigInt>> {
        let cs = self.constant_coeffs().ok_or(Error::NotScalar)?;
        let needed = self.order().max(self.valid_from - 1);
        if terms.len() < needed {
            return Err(Error::MissingPrefix {
                needed,
                got: terms.len(),
            });
        }
        let mut out = terms.to_vec();
        while out.len() < len {
            let k = out.len();
            let next: BigInt = cs
                .iter()
                .enumerate()
                .map(|(i, c)| c * &out[k - 1 - i])
                .sum();
            out.push(next);
        }
        out.truncate(len);
        Ok(out)
    }

    /// The classical two-list presentation `[[R_1, ..., R_d], [c_1, ..., c_d]]`.
    pub fn to_lists_string(&self) -> String {
        let fmt = |ps: &[IntPoly]| {
            ps.iter()
                .map(IntPoly::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("[[{}], [{}]]", fmt(&self.initial), fmt(&self.coeffs))
    }
}

/// JSON shape: decimal-string coefficient lists, ascending powers of `t`.
#[derive(Serialize, Deserialize)]
struct CFiniteRecRepr {
    order: usize,
    degree: usize,
    coeffs: Vec<Vec<String>>,
    initial: Vec<Vec<String>>,
    valid_from: usize,
}

impl From<CFiniteRec> for CFiniteRecRepr {
    fn from(rec: CFiniteRec) -> Self {
        CFiniteRecRepr {
            order: rec.order(),
            degree: rec.max_degree(),
            coeffs: rec.coeffs.iter().map(poly_to_strings).collect(),
            initial: rec.initial.iter().map(poly_to_strings).collect(),
            valid_from: rec.valid_from,
        }
    }
}

impl TryFrom<CFiniteRecRepr> for CFiniteRec {
    type Error = Error;
    fn try_from(repr: CFiniteRecRepr) -> Result<Self> {
        let coeffs: Vec<IntPoly> = repr
            .coeffs
            .iter()
            .map(|c| poly_from_strings(Var::T, c))
            .collect::<Result<_>>()?;
        let initial: Vec<IntPoly> = repr
            .initial
            .iter()
            .map(|c| poly_from_strings(Var::T, c))
            .collect::<Result<_>>()?;
        let rec = CFiniteRec::new(coeffs, initial, repr.valid_from)?;
        if repr.order != rec.order() {
            return Err(Error::InvalidRecurrence(format!(
                "declared order {} but {} coefficients",
                repr.order,
                rec.order()
            )));
        }
        Ok(rec)
    }
}

/// Guess a constant-coefficient recurrence with polynomial coefficients of
/// `t`-degree at most `max_tdeg` for a sequence of polynomials in `t`.
///
/// Needs at least `2 * max_order + max_tdeg + held_out` terms.  Returns
/// `Ok(None)` when no order up to `max_order` fits and verifies.
pub fn guess_cfinite_poly(
    terms: &[IntPoly],
    max_order: usize,
    max_tdeg: usize,
    held_out: usize,
) -> Result<Option<CFiniteRec>> {
    if max_order == 0 {
        return Ok(None); // an empty budget never fits anything
    }
    let l = terms.len();
    let needed = 2 * max_order + max_tdeg + held_out;
    if l < needed {
        return Err(Error::InsufficientTerms { needed, got: l });
    }
    if let Some(bad) = terms.iter().find(|p| p.var() != Var::T) {
        return Err(Error::VarMismatch(bad.var().letter(), 't'));
    }
    let hi = l - held_out; // last fitting index; held-out block is hi+1 ..= l

    for d in 1..=max_order {
        if hi < d + 1 {
            continue;
        }
        let unknowns = 1 + d * (max_tdeg + 1);
        let max_prev_deg = |n: usize| {
            (1..=d)
                .map(|i| terms[n - 1 - i].degree().unwrap_or(0))
                .max()
                .unwrap_or(0)
        };
        // Walk the fitting window backwards from the held-out boundary until
        // the system is comfortably overdetermined.
        let mut fit_ns: Vec<usize> = Vec::new();
        let mut scalar_rows = 0usize;
        for n in (d + 1..=hi).rev() {
            let pmax = terms[n - 1]
                .degree()
                .unwrap_or(0)
                .max(max_tdeg + max_prev_deg(n));
            fit_ns.push(n);
            scalar_rows += pmax + 1;
            if fit_ns.len() >= d + 2 && scalar_rows >= unknowns + EXTRA_ROWS {
                break;
            }
        }
        if scalar_rows < unknowns + 1 {
            continue;
        }

        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(scalar_rows);
        for &n in fit_ns.iter().rev() {
            let pmax = terms[n - 1]
                .degree()
                .unwrap_or(0)
                .max(max_tdeg + max_prev_deg(n));
            for p in 0..=pmax {
                let mut row = Vec::with_capacity(unknowns);
                row.push(terms[n - 1].coeff(p));
                for i in 1..=d {
                    for j in 0..=max_tdeg {
                        row.push(if p >= j {
                            terms[n - 1 - i].coeff(p - j)
                        } else {
                            BigInt::from(0)
                        });
                    }
                }
                rows.push(row);
            }
        }

        let basis = RatMatrix::from_int_rows(rows).nullspace();
        for v in ordered_candidates(basis) {
            let gamma = v[0].clone();
            if gamma == BigInt::from(0) {
                continue;
            }
            let Some(scaled) = divide_out(&v[1..], &gamma) else {
                continue;
            };
            let mut coeffs: Vec<IntPoly> = (0..d)
                .map(|i| {
                    let chunk = &scaled[i * (max_tdeg + 1)..(i + 1) * (max_tdeg + 1)];
                    IntPoly::new(Var::T, chunk.iter().map(|c| -c).collect())
                })
                .collect();
            while coeffs.last().is_some_and(IntPoly::is_zero) {
                coeffs.pop();
            }
            if coeffs.is_empty() {
                continue;
            }
            let d_eff = coeffs.len();

            let predict = |n: usize| -> IntPoly {
                coeffs
                    .iter()
                    .enumerate()
                    .fold(IntPoly::zero(Var::T), |acc, (i, c)| {
                        &acc + &c.try_mul(&terms[n - 2 - i]).expect("tags checked")
                    })
            };
            if !(hi + 1..=l).all(|n| predict(n) == terms[n - 1]) {
                continue;
            }
            let mut valid_from = d_eff + 1;
            for n in (d_eff + 1..=l).rev() {
                if predict(n) != terms[n - 1] {
                    valid_from = n + 1;
                    break;
                }
            }
            if valid_from > hi {
                continue;
            }
            let rec = CFiniteRec::new(coeffs, terms[..d_eff].to_vec(), valid_from)?;
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// Guess a scalar constant-coefficient recurrence.  Needs at least
/// `2 * max_order + held_out` terms.
pub fn guess_cfinite_scalar(
    terms: &[BigInt],
    max_order: usize,
    held_out: usize,
) -> Result<Option<CFiniteRec>> {
    let polys: Vec<IntPoly> = terms
        .iter()
        .map(|a| IntPoly::constant(Var::T, a.clone()))
        .collect();
    guess_cfinite_poly(&polys, max_order, 0, held_out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{Counter, Mode};
    use std::collections::BTreeSet;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn fib(len: usize) -> Vec<BigInt> {
        let mut v = vec![big(1), big(1)];
        while v.len() < len {
            let next = &v[v.len() - 1] + &v[v.len() - 2];
            v.push(next);
        }
        v
    }

    #[test]
    fn straight_menage_rook_polynomials_satisfy_the_order_two_recurrence() {
        let s: BTreeSet<i64> = [0, 1].into_iter().collect();
        let counter = Counter::new();
        let polys = counter.family_rook_polys(&s, Mode::Straight, 30).unwrap();
        let rec = guess_cfinite_poly(&polys, 4, 2, 10)
            .unwrap()
            .expect("recurrence exists");
        assert_eq!(rec.order(), 2);
        assert_eq!(rec.coeffs()[0], IntPoly::from_ints(Var::T, &[1, 2]));
        assert_eq!(rec.coeffs()[1], IntPoly::from_ints(Var::T, &[0, 0, -1]));
        assert_eq!(rec.initial()[0], IntPoly::from_ints(Var::T, &[1, 1]));
        assert_eq!(rec.initial()[1], IntPoly::from_ints(Var::T, &[1, 3, 1]));
        assert_eq!(rec.valid_from(), 3);
        assert_eq!(
            rec.to_lists_string(),
            "[[1 + t, 1 + 3*t + t^2], [1 + 2*t, -t^2]]"
        );
        // Extending from the initial terms reproduces every input term.
        let regenerated = rec.extend_polys(rec.initial(), polys.len()).unwrap();
        assert_eq!(regenerated, polys);
    }

    #[test]
    fn scalar_guessing_finds_fibonacci_and_constants() {
        let rec = guess_cfinite_scalar(&fib(30), 4, 10).unwrap().unwrap();
        assert_eq!(rec.order(), 2);
        assert_eq!(rec.constant_coeffs().unwrap(), vec![big(1), big(1)]);
        assert_eq!(rec.valid_from(), 3);

        let ones = vec![big(1); 25];
        let rec = guess_cfinite_scalar(&ones, 3, 10).unwrap().unwrap();
        assert_eq!(rec.order(), 1);
        assert_eq!(rec.constant_coeffs().unwrap(), vec![big(1)]);
    }

    #[test]
    fn held_out_terms_reject_recurrences_that_break_late() {
        let mut terms = fib(30);
        let last = terms.len() - 1;
        terms[last] += 1; // poison inside the held-out block
        let guess = guess_cfinite_scalar(&terms, 4, 10).unwrap();
        assert!(
            guess.is_none(),
            "a candidate failing held-out terms must be rejected"
        );
    }

    #[test]
    fn insufficient_terms_is_an_error_not_a_none() {
        assert_eq!(
            guess_cfinite_scalar(&fib(10), 4, 10),
            Err(Error::InsufficientTerms {
                needed: 18,
                got: 10
            })
        );
    }

    #[test]
    fn check_is_vacuous_on_empty_ranges_and_strict_otherwise() {
        let rec = guess_cfinite_scalar(&fib(30), 2, 10).unwrap().unwrap();
        assert!(rec.holds_on_scalars(&fib(30), 100)); // nothing to check
        assert!(rec.holds_on_scalars(&fib(30), 1));
        let broken = vec![big(1), big(1), big(2), big(3), big(6)];
        assert!(!rec.holds_on_scalars(&broken, 1));
    }

    #[test]
    fn extension_needs_the_validity_prefix() {
        let rec = guess_cfinite_scalar(&fib(30), 2, 10).unwrap().unwrap();
        let extended = rec.extend_scalars(&fib(5), 12).unwrap();
        assert_eq!(extended, fib(12));
        assert_eq!(
            rec.extend_scalars(&fib(5)[..1], 12),
            Err(Error::MissingPrefix { needed: 2, got: 1 })
        );
    }

    #[test]
    fn json_round_trip_keeps_the_recurrence() {
        let s: BTreeSet<i64> = [0, 1].into_iter().collect();
        let polys = Counter::new()
            .family_rook_polys(&s, Mode::Straight, 25)
            .unwrap();
        let rec = guess_cfinite_poly(&polys, 3, 2, 10).unwrap().unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        let back: CFiniteRec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert!(json.contains("\"order\":2"));
        assert!(json.contains("\"valid_from\":3"));
    }
}
