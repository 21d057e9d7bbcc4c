//! Command implementations.  Each command renders its result once as text
//! and once as a JSON value describing the same mathematical object; the
//! dispatcher prints whichever the user asked for.

use anyhow::{ensure, Context};
use rookery_core::{
    cfinite_to_gf, guess_cfinite_poly, guess_cfinite_scalar, guess_holonomic, BigInt, Board,
    CountRequest, Counter, IntPoly, Matrix01, Mode, RookSolver,
};
use serde_json::json;
use std::collections::BTreeSet;
use std::path::Path;

use crate::cache::Cache;

/// How a finished command run should terminate the process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Exit 0.
    Done,
    /// A guesser found nothing within its budget: exit 2.
    Fail,
    /// The two exact counting routes disagreed: exit 3.
    Mismatch,
}

pub struct Rendered {
    pub text: String,
    pub json: serde_json::Value,
    pub outcome: Outcome,
}

impl Rendered {
    fn done(text: String, json: serde_json::Value) -> Self {
        Rendered {
            text,
            json,
            outcome: Outcome::Done,
        }
    }
}

pub struct Ctx {
    pub counter: Counter,
    pub cache: Option<Cache>,
}

/// Recurrence-search budgets shared by the guessing commands.
#[derive(Clone, Copy)]
pub struct Budgets {
    pub max_order: usize,
    pub max_tdeg: usize,
    pub max_complexity: usize,
    pub held_out: usize,
}

impl Ctx {
    /// The family's counting sequence `a(1)..=a(len)`, cached when a cache
    /// directory is configured.
    fn terms(&self, s: &BTreeSet<i64>, mode: Mode, len: usize) -> anyhow::Result<Vec<BigInt>> {
        if let Some(cache) = &self.cache {
            if let Some(terms) = cache.terms(s, mode, len) {
                return Ok(terms);
            }
        }
        let terms = self.counter.seq(s, mode, len)?;
        if let Some(cache) = &self.cache {
            cache.store_terms(s, mode, &terms);
        }
        Ok(terms)
    }

    /// The family's rook polynomials `R_1..=R_len` (straight/circular).
    fn rook_polys(
        &self,
        s: &BTreeSet<i64>,
        mode: Mode,
        len: usize,
    ) -> anyhow::Result<Vec<IntPoly>> {
        if let Some(cache) = &self.cache {
            if let Some(polys) = cache.rook_polys(s, mode, len) {
                return Ok(polys);
            }
        }
        let polys = self.counter.family_rook_polys(s, mode, len)?;
        if let Some(cache) = &self.cache {
            cache.store_rook_polys(s, mode, &polys);
        }
        Ok(polys)
    }
}

fn join_terms(terms: &[BigInt]) -> String {
    terms
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn term_strings(terms: &[BigInt]) -> Vec<String> {
    terms.iter().map(BigInt::to_string).collect()
}

fn set_json(s: &BTreeSet<i64>) -> serde_json::Value {
    json!(s.iter().copied().collect::<Vec<i64>>())
}

/// `rp FILE`: rook polynomial of an explicit 0/1 board.
pub fn rp(matrix_path: &Path) -> anyhow::Result<Rendered> {
    let text = std::fs::read_to_string(matrix_path)
        .with_context(|| format!("cannot read {}", matrix_path.display()))?;
    let matrix = Matrix01::parse_text(&text)?;
    let board = Board::from_matrix(&matrix);
    let poly = RookSolver::new().rook_polynomial(&board);
    let json = json!({
        "n": matrix.n(),
        "coeffs": poly.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>(),
        "display": poly.to_string(),
    });
    Ok(Rendered::done(poly.to_string(), json))
}

/// `rookrec`: C-finite recurrence of the family's rook polynomials.
pub fn rookrec(
    ctx: &Ctx,
    s: &BTreeSet<i64>,
    mode: Mode,
    terms: usize,
    budgets: Budgets,
) -> anyhow::Result<Rendered> {
    let needed = 2 * budgets.max_order + budgets.max_tdeg + budgets.held_out;
    let len = if terms == 0 { needed } else { terms };
    let polys = ctx.rook_polys(s, mode, len)?;
    let guess = guess_cfinite_poly(
        &polys,
        budgets.max_order,
        budgets.max_tdeg,
        budgets.held_out,
    )?;
    let Some(rec) = guess else {
        return Ok(Rendered {
            text: "FAIL".into(),
            json: json!({ "s": set_json(s), "mode": mode.to_string(), "recurrence": null }),
            outcome: Outcome::Fail,
        });
    };
    if let Some(cache) = &ctx.cache {
        let stored = rec.clone();
        cache.update(s, mode, move |entry| entry.cfinite = Some(stored));
    }
    let text = format!(
        "{}\nholds from n = {}",
        rec.to_lists_string(),
        rec.valid_from()
    );
    let json = json!({
        "s": set_json(s),
        "mode": mode.to_string(),
        "recurrence": serde_json::to_value(&rec)?,
    });
    Ok(Rendered::done(text, json))
}

/// `seq`: the first `len` counts of the family.
pub fn seq(ctx: &Ctx, s: &BTreeSet<i64>, mode: Mode, len: usize) -> anyhow::Result<Rendered> {
    ensure!(len >= 1, "the number of terms must be at least 1");
    let terms = ctx.terms(s, mode, len)?;
    let json = json!({
        "s": set_json(s),
        "mode": mode.to_string(),
        "terms": term_strings(&terms),
    });
    Ok(Rendered::done(join_terms(&terms), json))
}

/// `info`: terms, a holonomic recurrence (or FAIL), and a long extension.
#[allow(clippy::too_many_arguments)]
pub fn info(
    ctx: &Ctx,
    s: &BTreeSet<i64>,
    mode: Mode,
    terms: usize,
    l1: usize,
    l2: usize,
    budgets: Budgets,
) -> anyhow::Result<Rendered> {
    ensure!(l1 >= 1 && l2 >= 1, "term counts must be at least 1");
    let fit_len = terms.max(l1);
    let known = ctx.terms(s, mode, fit_len)?;
    let shown = &known[..l1];
    let terms_line = format!("a(1..{l1}): {}", join_terms(shown));

    let Some(rec) = guess_holonomic(&known, budgets.max_complexity, budgets.held_out)? else {
        return Ok(Rendered {
            text: format!("{terms_line}\nFAIL"),
            json: json!({
                "s": set_json(s),
                "mode": mode.to_string(),
                "terms": term_strings(shown),
                "recurrence": null,
                "extension": null,
            }),
            outcome: Outcome::Fail,
        });
    };
    if let Some(cache) = &ctx.cache {
        let stored = rec.clone();
        cache.update(s, mode, move |entry| entry.holonomic = Some(stored));
    }
    let extended = rec.extend(&known, l2.max(known.len()))?;
    let value = &extended[l2 - 1];
    let text = format!("{terms_line}\nrecurrence: {rec}\na({l2}) = {value}");
    let json = json!({
        "s": set_json(s),
        "mode": mode.to_string(),
        "terms": term_strings(shown),
        "recurrence": serde_json::to_value(&rec)?,
        "extension": { "index": l2, "value": value.to_string() },
    });
    Ok(Rendered::done(text, json))
}

/// `gf`: rational generating function of an allowed-displacement family,
/// with the empty-permutation term `a(0) = 1` prepended.
pub fn gf(
    ctx: &Ctx,
    s: &BTreeSet<i64>,
    terms: usize,
    budgets: Budgets,
) -> anyhow::Result<Rendered> {
    ensure!(terms >= 1, "the number of terms must be at least 1");
    let counts = ctx.terms(s, Mode::Allowed, terms)?;
    let mut series = vec![BigInt::from(1)];
    series.extend(counts);
    let Some(rec) = guess_cfinite_scalar(&series, budgets.max_order, budgets.held_out)? else {
        return Ok(Rendered {
            text: "FAIL".into(),
            json: json!({ "s": set_json(s), "gf": null }),
            outcome: Outcome::Fail,
        });
    };
    let gf = cfinite_to_gf(&rec, &series)?;
    if let Some(cache) = &ctx.cache {
        let stored = gf.clone();
        cache.update(s, Mode::Allowed, move |entry| entry.gf = Some(stored));
    }
    let json = json!({
        "s": set_json(s),
        "gf": serde_json::to_value(&gf)?,
        "display": gf.to_string(),
    });
    Ok(Rendered::done(gf.to_string(), json))
}

/// `verify`: cross-check the umbral/DP route against the permanent oracle.
pub fn verify(ctx: &Ctx, s: &BTreeSet<i64>, mode: Mode, n_max: usize) -> anyhow::Result<Rendered> {
    ensure!(n_max >= 1, "--n-max must be at least 1");
    let mut lines = Vec::with_capacity(n_max + 1);
    let mut rows = Vec::with_capacity(n_max);
    let mut all_ok = true;
    for n in 1..=n_max {
        let req = CountRequest::new(s.clone(), n, mode)?;
        let count = ctx.counter.count(&req)?;
        let oracle = ctx.counter.count_by_permanent(&req)?;
        let ok = count == oracle;
        all_ok &= ok;
        lines.push(format!(
            "n = {n}: {count} == {oracle} {}",
            if ok { "ok" } else { "MISMATCH" }
        ));
        rows.push(json!({
            "n": n,
            "count": count.to_string(),
            "permanent": oracle.to_string(),
            "ok": ok,
        }));
    }
    lines.push(if all_ok {
        format!("all {n_max} checks passed")
    } else {
        "MISMATCH: the two exact routes disagree".into()
    });
    let json = json!({
        "s": set_json(s),
        "mode": mode.to_string(),
        "n_max": n_max,
        "results": rows,
        "all_ok": all_ok,
    });
    Ok(Rendered {
        text: lines.join("\n"),
        json,
        outcome: if all_ok {
            Outcome::Done
        } else {
            Outcome::Mismatch
        },
    })
}
