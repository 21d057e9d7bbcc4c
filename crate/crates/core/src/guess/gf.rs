//! Rational generating functions from scalar constant-coefficient
//! recurrences.
//!
//! A sequence satisfying `a_m = sum c_i a_{m-i}` from some point on has the
//! rational ordinary generating function `P(x) / Q(x)` with `Q = 1 - sum c_i
//! x^i`; the numerator is the (finite) product `Q * sum a_m x^m`, whose
//! coefficients vanish from the first index where the recurrence holds.
//! Terms before that point simply stay in the numerator, so the expansion
//! is exact on every known term whether or not the family misbehaves early.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::CFiniteRec;
use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// A rational ordinary generating function `numer / denom` in `x`, with the
/// denominator normalized to constant term 1.  No root cancellation is
/// attempted: the pair is stored exactly as reconstructed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RationalGFRepr", into = "RationalGFRepr")]
pub struct RationalGF {
    numer: IntPoly,
    denom: IntPoly,
}

impl RationalGF {
    pub fn new(numer: IntPoly, denom: IntPoly) -> Result<Self> {
        if let Some(bad) = [&numer, &denom].into_iter().find(|p| p.var() != Var::X) {
            return Err(Error::VarMismatch(bad.var().letter(), 'x'));
        }
        if !denom.coeff(0).is_one() {
            return Err(Error::InvalidRecurrence(
                "generating-function denominators are normalized to constant term 1".into(),
            ));
        }
        Ok(RationalGF { numer, denom })
    }

    pub fn numer(&self) -> &IntPoly {
        &self.numer
    }

    pub fn denom(&self) -> &IntPoly {
        &self.denom
    }

    /// The first `len` coefficients of the power-series expansion.  Integral
    /// because the denominator's constant term is 1.
    pub fn series(&self, len: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        let qdeg = self.denom.degree().unwrap_or(0);
        for j in 0..len {
            let mut a = self.numer.coeff(j);
            for k in 1..=qdeg.min(j) {
                a -= self.denom.coeff(k) * &out[j - k];
            }
            out.push(a);
        }
        out
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly| {
            let s = p.to_string();
            if s.contains(' ') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.numer), wrap(&self.denom))
    }
}

/// JSON shape: decimal-string coefficient lists, ascending powers of `x`.
#[derive(Serialize, Deserialize)]
struct RationalGFRepr {
    numer: Vec<String>,
    denom: Vec<String>,
}

impl From<RationalGF> for RationalGFRepr {
    fn from(gf: RationalGF) -> Self {
        RationalGFRepr {
            numer: super::poly_to_strings(&gf.numer),
            denom: super::poly_to_strings(&gf.denom),
        }
    }
}

impl TryFrom<RationalGFRepr> for RationalGF {
    type Error = Error;
    fn try_from(repr: RationalGFRepr) -> Result<Self> {
        RationalGF::new(
            super::poly_from_strings(Var::X, &repr.numer)?,
            super::poly_from_strings(Var::X, &repr.denom)?,
        )
    }
}

/// Reconstruct the generating function of `terms` (the series coefficients
/// `a_0, a_1, ...`) from a scalar recurrence known to hold on them.
///
/// The denominator is `1 - sum c_i x^i`; the numerator is `denom * (sum a_m
/// x^m)` cut at the point from which all further product coefficients
/// vanish, so the series expansion reproduces every input term exactly.
pub fn cfinite_to_gf(rec: &CFiniteRec, terms: &[BigInt]) -> Result<RationalGF> {
    let cs = rec.constant_coeffs().ok_or(Error::NotScalar)?;
    let d = cs.len();
    let mut denom = vec![BigInt::one()];
    denom.extend(cs.iter().map(|c| -c));
    let denom = IntPoly::new(Var::X, denom);

    // Product coefficient m of denom * (sum a_m x^m): a_m - sum c_i a_{m-i}.
    let product: Vec<BigInt> = (0..terms.len())
        .map(|m| {
            let mut p = terms[m].clone();
            for i in 1..=d.min(m) {
                p -= &cs[i - 1] * &terms[m - i];
            }
            p
        })
        .collect();
    let cutoff = product
        .iter()
        .rposition(|p| !p.is_zero())
        .map_or(0, |last| last + 1);
    let numer = IntPoly::new(Var::X, product[..cutoff].to_vec());
    RationalGF::new(numer, denom)
}
