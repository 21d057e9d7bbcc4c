//! Holonomic (P-recursive) recurrences: `sum_i p_i(n) a(n+i) = 0` with
//! integer polynomial coefficients `p_0 ..= p_d`.
//!
//! The candidate space is the grid of (order `d`, coefficient degree `D`)
//! pairs with `d + D <= max_complexity`.  The grid is scanned degree-major —
//! all orders at degree 0, then all orders at degree 1, and so on — because
//! low-degree operators are the useful ones: their leading coefficients have
//! few integer roots, so forward extension rarely hits a singularity, and
//! the classical recurrences of counting families (factorials, derangements,
//! the relatives of the hit polynomials computed here) all live at degree 1.
//! A sequence often *also* satisfies a shorter high-degree operator; the
//! scan deliberately passes those by.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::{
    bigints_from_strings, bigints_to_strings, ordered_candidates, poly_from_strings,
    poly_to_strings, EXTRA_ROWS,
};
use crate::linalg::RatMatrix;
use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// A verified holonomic recurrence `p_0(n) a(n) + ... + p_d(n) a(n+d) = 0`,
/// holding for every shift `n >= valid_from`, together with the prefix of
/// the sequence the recurrence cannot reach.
///
/// The coefficients are jointly primitive (integer content 1) and the
/// leading coefficient of `p_d` is positive, so equal recurrences have equal
/// representations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HolonomicRecRepr", into = "HolonomicRecRepr")]
pub struct HolonomicRec {
    /// `p_0 ..= p_d`, polynomials in `n`; `p_d` is nonzero.
    coeffs: Vec<IntPoly>,
    /// `a(1) ..= a(valid_from + d - 1)` — everything the recurrence itself
    /// cannot produce.
    initial: Vec<BigInt>,
    /// Smallest 1-based shift `n` from which the relation holds on the data
    /// it was fitted to.
    valid_from: usize,
}

impl HolonomicRec {
    pub fn new(coeffs: Vec<IntPoly>, initial: Vec<BigInt>, valid_from: usize) -> Result<Self> {
        if coeffs.len() < 2 || coeffs.last().is_some_and(IntPoly::is_zero) {
            return Err(Error::InvalidRecurrence(
                "order must be >= 1 with a nonzero leading coefficient".into(),
            ));
        }
        if let Some(bad) = coeffs.iter().find(|p| p.var() != Var::N) {
            return Err(Error::VarMismatch(bad.var().letter(), 'n'));
        }
        if valid_from == 0 {
            return Err(Error::InvalidRecurrence("shifts are 1-based".into()));
        }
        let d = coeffs.len() - 1;
        if initial.len() != valid_from + d - 1 {
            return Err(Error::InvalidRecurrence(format!(
                "a recurrence of order {d} valid from {valid_from} determines the sequence \
                 from {} initial terms, got {}",
                valid_from + d - 1,
                initial.len()
            )));
        }
        let mut coeffs = coeffs;
        let content = coeffs
            .iter()
            .fold(BigInt::from(0), |g, p| g.gcd(&p.content()));
        if content > BigInt::from(1) {
            coeffs = coeffs
                .iter()
                .map(|p| IntPoly::new(Var::N, p.coeffs().iter().map(|c| c / &content).collect()))
                .collect();
        }
        if coeffs
            .last()
            .and_then(IntPoly::leading)
            .is_some_and(Signed::is_negative)
        {
            coeffs = coeffs.iter().map(|p| p.scale(&BigInt::from(-1))).collect();
        }
        Ok(HolonomicRec {
            coeffs,
            initial,
            valid_from,
        })
    }

    /// The order `d`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `n`-degree over the coefficients.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    /// `sum_i p_i(n) terms[n + i - 1]` for 1-based `n`.
    fn combination(&self, terms: &[BigInt], n: usize) -> BigInt {
        let at = BigInt::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, p)| p.eval_int(&at) * &terms[n + i - 1])
            .sum()
    }

    /// Does the relation vanish at every shift `n >= from` that `terms`
    /// covers?  Vacuously true when no shift is applicable.
    pub fn holds_on(&self, terms: &[BigInt], from: usize) -> bool {
        let d = self.order();
        (from.max(1)..=terms.len().saturating_sub(d)).all(|n| self.combination(terms, n).is_zero())
    }

    /// Extend `terms` (which must cover the validity prefix) to exactly
    /// `len` terms.  Fails with the 1-based index of the first term that
    /// cannot be computed: either the leading coefficient vanishes there or
    /// the division it prescribes is not exact.
    pub fn extend(&self, terms: &[BigInt], len: usize) -> Result<Vec<BigInt>> {
        let d = self.order();
        let needed = self.valid_from + d - 1;
        if terms.len() < needed {
            return Err(Error::MissingPrefix {
                needed,
                got: terms.len(),
            });
        }
        let mut out = terms.to_vec();
        while out.len() < len {
            let m = out.len() + 1; // 1-based index of the term to produce
            let n = BigInt::from(m - d); // shift, >= valid_from by the prefix check
            let den = self.coeffs[d].eval_int(&n);
            if den.is_zero() {
                return Err(Error::SingularLeadingCoefficient(m));
            }
            let num: BigInt = -self
                .coeffs
                .iter()
                .take(d)
                .enumerate()
                .map(|(i, p)| p.eval_int(&n) * &out[m - 1 - d + i])
                .sum::<BigInt>();
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(Error::NonIntegralStep(m));
            }
            out.push(q);
        }
        out.truncate(len);
        Ok(out)
    }
}

impl fmt::Display for HolonomicRec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let arg = if i == 0 {
                "a(n)".to_string()
            } else {
                format!("a(n+{i})")
            };
            // Pull an overall minus out of all-nonpositive factors so the
            // classical shapes print as `- (4 + n)*a(n+3)` rather than
            // `+ (-4 - n)*a(n+3)`.
            let negative = p.coeffs().iter().all(|c| !c.is_positive());
            let q = if negative {
                p.scale(&BigInt::from(-1))
            } else {
                p.clone()
            };
            let nonzero: Vec<usize> = (0..q.coeffs().len())
                .filter(|&k| !q.coeff(k).is_zero())
                .collect();
            let body = match nonzero.as_slice() {
                [0] => {
                    let c = q.coeff(0);
                    if c == BigInt::from(1) {
                        arg
                    } else {
                        format!("{c}*{arg}")
                    }
                }
                [k] => {
                    let c = q.coeff(*k);
                    let power = if *k == 1 {
                        "n".to_string()
                    } else {
                        format!("n^{k}")
                    };
                    if c == BigInt::from(1) {
                        format!("{power}*{arg}")
                    } else {
                        format!("{c}*{power}*{arg}")
                    }
                }
                _ => format!("({q})*{arg}"),
            };
            if first {
                write!(f, "{}{body}", if negative { "-" } else { "" })?;
            } else {
                write!(f, " {} {body}", if negative { "-" } else { "+" })?;
            }
            first = false;
        }
        write!(f, " = 0   for n >= {}", self.valid_from)
    }
}

/// JSON shape: decimal-string coefficient lists, ascending powers of `n`.
#[derive(Serialize, Deserialize)]
struct HolonomicRecRepr {
    order: usize,
    degree: usize,
    coeffs: Vec<Vec<String>>,
    initial: Vec<String>,
    valid_from: usize,
}

impl From<HolonomicRec> for HolonomicRecRepr {
    fn from(rec: HolonomicRec) -> Self {
        HolonomicRecRepr {
            order: rec.order(),
            degree: rec.degree(),
            coeffs: rec.coeffs.iter().map(poly_to_strings).collect(),
            initial: bigints_to_strings(&rec.initial),
            valid_from: rec.valid_from,
        }
    }
}

impl TryFrom<HolonomicRecRepr> for HolonomicRec {
    type Error = Error;
    fn try_from(repr: HolonomicRecRepr) -> Result<Self> {
        let coeffs: Vec<IntPoly> = repr
            .coeffs
            .iter()
            .map(|c| poly_from_strings(Var::N, c))
            .collect::<Result<_>>()?;
        let initial = bigints_from_strings(&repr.initial)?;
        let rec = HolonomicRec::new(coeffs, initial, repr.valid_from)?;
        if repr.order != rec.order() {
            return Err(Error::InvalidRecurrence(format!(
                "declared order {} but {} coefficients",
                repr.order,
                rec.order() + 1
            )));
        }
        Ok(rec)
    }
}

/// Guess a holonomic recurrence for an integer sequence, scanning `(d, D)`
/// pairs with `d + D <= max_complexity` degree-major (increasing `D`, then
/// increasing `d`) and returning the first candidate that fits exactly and
/// survives `held_out` trailing verification terms.
///
/// `Ok(None)` means no pair in the budget produced a verified recurrence;
/// an error is returned only when even the cheapest pair has too few terms
/// to attempt.
pub fn guess_holonomic(
    terms: &[BigInt],
    max_complexity: usize,
    held_out: usize,
) -> Result<Option<HolonomicRec>> {
    if max_complexity == 0 {
        return Ok(None); // an empty budget never fits anything
    }
    let min_need = terms_needed(1, 0, held_out);
    if terms.len() < min_need {
        return Err(Error::InsufficientTerms {
            needed: min_need,
            got: terms.len(),
        });
    }
    for deg in 0..max_complexity {
        for d in 1..=max_complexity - deg {
            if let Some(rec) = try_fit(terms, d, deg, held_out)? {
                return Ok(Some(rec));
            }
        }
    }
    Ok(None)
}

fn terms_needed(d: usize, deg: usize, held_out: usize) -> usize {
    let unknowns = (d + 1) * (deg + 1);
    unknowns + EXTRA_ROWS + d + held_out
}

fn try_fit(
    terms: &[BigInt],
    d: usize,
    deg: usize,
    held_out: usize,
) -> Result<Option<HolonomicRec>> {
    let l = terms.len();
    if l < terms_needed(d, deg, held_out) {
        return Ok(None);
    }
    let unknowns = (d + 1) * (deg + 1);
    let width = unknowns + EXTRA_ROWS;
    // Fit shifts n1-width+1 ..= n1; the last row touches terms up to the
    // held-out boundary and the block n1+1 ..= l-d stays unseen.
    let n1 = l - held_out - d;
    let n0 = n1 + 1 - width;

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(width);
    for n in n0..=n1 {
        let mut row = Vec::with_capacity(unknowns);
        let nb = BigInt::from(n);
        for i in 0..=d {
            let mut power = BigInt::from(1);
            for _ in 0..=deg {
                row.push(&power * &terms[n + i - 1]);
                power *= &nb;
            }
        }
        rows.push(row);
    }

    let basis = RatMatrix::from_int_rows(rows).nullspace();
    'candidates: for v in ordered_candidates(basis) {
        let coeffs: Vec<IntPoly> = (0..=d)
            .map(|i| IntPoly::new(Var::N, v[i * (deg + 1)..(i + 1) * (deg + 1)].to_vec()))
            .collect();
        if coeffs.last().is_some_and(IntPoly::is_zero) {
            // Really a lower-order relation; its own (d', deg) slot owns it.
            continue;
        }
        let combination = |n: usize| -> BigInt {
            let at = BigInt::from(n);
            coeffs
                .iter()
                .enumerate()
                .map(|(i, p)| p.eval_int(&at) * &terms[n + i - 1])
                .sum()
        };
        for n in n1 + 1..=l - d {
            if !combination(n).is_zero() {
                continue 'candidates;
            }
        }
        let mut valid_from = 1;
        for n in (1..=l - d).rev() {
            if !combination(n).is_zero() {
                valid_from = n + 1;
                break;
            }
        }
        if valid_from > n0 {
            continue; // a failure inside what the fit was supposed to cover
        }
        let rec = HolonomicRec::new(coeffs, terms[..valid_from + d - 1].to_vec(), valid_from)?;
        return Ok(Some(rec));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{factorial, Counter, Mode};
    use std::collections::BTreeSet;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn npoly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(Var::N, coeffs)
    }

    fn menage_terms(len: usize) -> Vec<BigInt> {
        let s: BTreeSet<i64> = [0, 1].into_iter().collect();
        Counter::new().seq(&s, Mode::Circular, len).unwrap()
    }

    #[test]
    fn derangements_satisfy_the_classical_order_two_recurrence() {
        let s: BTreeSet<i64> = [0].into_iter().collect();
        let terms = Counter::new().seq(&s, Mode::Straight, 30).unwrap();
        let rec = guess_holonomic(&terms, 6, 10)
            .unwrap()
            .expect("derangements are holonomic");
        // a(n+2) = (n+1) (a(n+1) + a(n))
        assert_eq!(rec.order(), 2);
        assert_eq!(rec.degree(), 1);
        assert_eq!(
            rec.coeffs(),
            &[npoly(&[-1, -1]), npoly(&[-1, -1]), npoly(&[1])]
        );
        assert_eq!(rec.valid_from(), 1);
        assert_eq!(rec.initial(), &[big(0), big(1)]);
        let extended = rec.extend(rec.initial(), 10).unwrap();
        assert_eq!(extended.last().unwrap(), &big(1_334_961));
        assert_eq!(extended, terms[..10]);
    }

    #[test]
    fn factorials_are_order_one_degree_one() {
        let terms: Vec<BigInt> = (1..=30).map(factorial).collect();
        let rec = guess_holonomic(&terms, 4, 10).unwrap().unwrap();
        // a(n+1) = (n+1) a(n)
        assert_eq!(rec.order(), 1);
        assert_eq!(rec.coeffs(), &[npoly(&[-1, -1]), npoly(&[1])]);
        assert_eq!(rec.valid_from(), 1);
        assert_eq!(
            rec.extend(&[big(1)], 10).unwrap().last().unwrap(),
            &big(3_628_800)
        );
    }

    #[test]
    fn circular_hit_counts_get_the_order_four_degree_one_recurrence() {
        let terms = menage_terms(40);
        let rec = guess_holonomic(&terms, 6, 10)
            .unwrap()
            .expect("recurrence exists");
        assert_eq!(rec.order(), 4);
        assert_eq!(rec.degree(), 1);
        // a(n) + n a(n+1) - 2 a(n+2) - (n+4) a(n+3) + a(n+4) = 0, n >= 2.
        assert_eq!(
            rec.coeffs(),
            &[
                npoly(&[1]),
                npoly(&[0, 1]),
                npoly(&[-2]),
                npoly(&[-4, -1]),
                npoly(&[1])
            ]
        );
        assert_eq!(rec.valid_from(), 2);
        assert!(!rec.holds_on(&terms, 1));
        assert!(rec.holds_on(&terms, 2));
        // Regenerating the family from the stored prefix reproduces every
        // independently counted term.
        assert_eq!(rec.extend(rec.initial(), 40).unwrap(), terms);
    }

    #[test]
    fn degree_major_search_passes_over_the_shorter_high_degree_operator() {
        // The same counts also satisfy an order-3 degree-2 relation.  The
        // scan prefers degree 1, so order 4 must win; this test pins that
        // choice and double-checks the shorter operator is genuine.
        let terms = menage_terms(40);
        let short = HolonomicRec::new(
            vec![
                npoly(&[-2, -1]),
                npoly(&[-3, -3, -1]),
                npoly(&[-3, -3, -1]),
                npoly(&[1, 1]),
            ],
            terms[..4].to_vec(),
            2,
        )
        .unwrap();
        assert!(short.holds_on(&terms, 2));
        assert_eq!(short.extend(short.initial(), 40).unwrap(), terms);
        let found = guess_holonomic(&terms, 6, 10).unwrap().unwrap();
        assert_eq!(found.order(), 4);
        assert_eq!(found.degree(), 1);
    }

    #[test]
    fn singular_leading_coefficients_report_the_unreachable_index() {
        // (n - 5) a(n+1) = 2 (n - 5) a(n): doubling, but the step producing
        // a(6) divides by zero.
        let rec =
            HolonomicRec::new(vec![npoly(&[10, -2]), npoly(&[-5, 1])], vec![big(1)], 1).unwrap();
        assert_eq!(
            rec.extend(&[big(1)], 5).unwrap(),
            vec![big(1), big(2), big(4), big(8), big(16)]
        );
        assert_eq!(
            rec.extend(&[big(1)], 6),
            Err(Error::SingularLeadingCoefficient(6))
        );
    }

    #[test]
    fn non_integral_steps_report_the_offending_index() {
        // 2 a(n+1) = a(n) from a(1) = 1 leaves the integers immediately.
        let rec = HolonomicRec::new(vec![npoly(&[-1]), npoly(&[2])], vec![big(1)], 1).unwrap();
        assert_eq!(rec.extend(&[big(1)], 3), Err(Error::NonIntegralStep(2)));
    }

    #[test]
    fn extension_needs_the_validity_prefix() {
        let terms = menage_terms(40);
        let rec = guess_holonomic(&terms, 6, 10).unwrap().unwrap();
        assert_eq!(
            rec.extend(&terms[..3], 10),
            Err(Error::MissingPrefix { needed: 5, got: 3 })
        );
    }

    #[test]
    fn construction_normalizes_content_and_sign() {
        let rec = HolonomicRec::new(vec![npoly(&[2, 2]), npoly(&[-2])], vec![big(7)], 1).unwrap();
        assert_eq!(rec.coeffs(), &[npoly(&[-1, -1]), npoly(&[1])]);
        assert_eq!(format!("{rec}"), "-(1 + n)*a(n) + a(n+1) = 0   for n >= 1");
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert!(HolonomicRec::new(vec![], vec![], 1).is_err());
        assert!(HolonomicRec::new(vec![npoly(&[1])], vec![], 1).is_err());
        assert!(
            HolonomicRec::new(vec![npoly(&[1]), IntPoly::zero(Var::N)], vec![big(1)], 1).is_err()
        );
        assert!(HolonomicRec::new(vec![npoly(&[1]), npoly(&[1])], vec![], 1).is_err());
        assert!(HolonomicRec::new(vec![npoly(&[1]), npoly(&[1])], vec![big(1)], 0).is_err());
        assert!(HolonomicRec::new(
            vec![IntPoly::from_ints(Var::T, &[1]), npoly(&[1])],
            vec![big(1)],
            1
        )
        .is_err());
    }

    #[test]
    fn insufficient_terms_is_an_error_not_a_none() {
        let terms = menage_terms(20);
        assert_eq!(
            guess_holonomic(&terms, 6, 10),
            Err(Error::InsufficientTerms {
                needed: 25,
                got: 20
            })
        );
    }

    #[test]
    fn holds_on_is_vacuous_when_nothing_is_applicable() {
        let terms = menage_terms(40);
        let rec = guess_holonomic(&terms, 6, 10).unwrap().unwrap();
        assert!(rec.holds_on(&terms[..3], 1));
        assert!(rec.holds_on(&terms, 100));
    }

    #[test]
    fn json_round_trip_keeps_the_recurrence() {
        let rec = guess_holonomic(&menage_terms(40), 6, 10).unwrap().unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"order\":4"));
        assert!(json.contains("\"degree\":1"));
        let back: HolonomicRec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}
