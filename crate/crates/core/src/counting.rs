//! Counting the permutations that avoid a board of forbidden positions.
//!
//! Two independent exact routes are kept side by side:
//!
//! * **Inclusion-exclusion** over the rook polynomial: if `R(t) = sum r_k t^k`
//!   is the rook polynomial of the forbidden board, the number of avoiding
//!   permutations is `sum_k (-1)^k r_k (n-k)!`.  This is the route that
//!   scales (the rook polynomial of a displacement family grows slowly).
//! * The **permanent** of the complementary 0/1 matrix, by Ryser's formula —
//!   `O(2^n n)` and therefore capped, but a completely independent oracle.
//!
//! A third route, a **profile dynamic program** over the allowed-displacement
//! window, counts permutations whose displacements all lie *inside* a set
//! `S`; it needs neither rook polynomials nor permanents and is exact for
//! windows up to the configured cap.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::board::{Board, Matrix01, RookSolver};
use crate::exec;
use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// Largest matrix side the permanent accepts by default.  Up to this side the
/// Ryser sum provably fits in `i128` (`2^n * n^n < 2^127` for `n <= 22`).
pub const DEFAULT_PERMANENT_CAP: usize = 22;

/// Largest allowed-displacement window (`max S - min S + 1`) the profile DP
/// accepts by default; the state space is `2^window`.
pub const DEFAULT_WINDOW_CAP: u32 = 24;

/// `n!` with a process-wide incremental cache.
pub fn factorial(n: usize) -> BigInt {
    static TABLE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut v = table.lock().unwrap();
    while v.len() <= n {
        let k = v.len();
        let next = &v[k - 1] * BigInt::from(k);
        v.push(next);
    }
    v[n].clone()
}

/// Permanent of a square 0/1 matrix by Ryser's inclusion-exclusion, exact.
/// Refuses sides beyond [`DEFAULT_PERMANENT_CAP`]; see [`permanent_with_cap`].
pub fn permanent(m: &Matrix01) -> Result<BigInt> {
    permanent_with_cap(m, DEFAULT_PERMANENT_CAP)
}

/// Permanent with an explicit side cap (hard limit 63).  Above side 22 the
/// subset products leave `i128` and the sum falls back to big integers; with
/// `2^n` subsets that is punishingly slow, which is exactly why the default
/// cap sits at 22.
pub fn permanent_with_cap(m: &Matrix01, cap: usize) -> Result<BigInt> {
    let n = m.n();
    if n > cap.min(63) {
        return Err(Error::PermanentCap {
            side: n,
            cap: cap.min(63),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let masks = m.row_masks().expect("side fits in u64 masks");
    let total: u64 = 1 << n;
    // Split the subset range into chunks; each chunk walks its own Gray code.
    let chunk = ((total / 128).max(1 << 12)).min(total);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(chunk as usize)
        .map(|s| (s, (s + chunk).min(total)))
        .collect();
    if n <= 22 {
        let parts = exec::map_collect(ranges, |(lo, hi)| ryser_chunk_i128(&masks, n, lo, hi));
        Ok(parts.into_iter().map(BigInt::from).sum())
    } else {
        let parts = exec::map_collect(ranges, |(lo, hi)| ryser_chunk_big(&masks, n, lo, hi));
        Ok(parts.into_iter().sum())
    }
}

fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// Row sums for the subset `gray(lo)`, then Gray-code steps to `hi`.
fn ryser_chunk_i128(masks: &[u64], n: usize, lo: u64, hi: u64) -> i128 {
    let mut sums: Vec<i128> = masks
        .iter()
        .map(|&m| (m & gray(lo)).count_ones() as i128)
        .collect();
    let mut acc: i128 = 0;
    for k in lo..hi {
        if k > lo {
            let bit = k.trailing_zeros();
            let joined = gray(k) >> bit & 1 == 1;
            for (s, &m) in sums.iter_mut().zip(masks) {
                if m >> bit & 1 == 1 {
                    *s += if joined { 1 } else { -1 };
                }
            }
        }
        let mut prod: i128 = 1;
        for &s in &sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod *= s;
        }
        if prod != 0 {
            let flip = (n as u32 - gray(k).count_ones()) & 1 == 1;
            acc += if flip { -prod } else { prod };
        }
    }
    acc
}

fn ryser_chunk_big(masks: &[u64], n: usize, lo: u64, hi: u64) -> BigInt {
    let mut sums: Vec<u64> = masks
        .iter()
        .map(|&m| (m & gray(lo)).count_ones() as u64)
        .collect();
    let mut acc = BigInt::zero();
    for k in lo..hi {
        if k > lo {
            let bit = k.trailing_zeros();
            let joined = gray(k) >> bit & 1 == 1;
            for (s, &m) in sums.iter_mut().zip(masks) {
                if m >> bit & 1 == 1 {
                    if joined {
                        *s += 1;
                    } else {
                        *s -= 1;
                    }
                }
            }
        }
        if sums.contains(&0) {
            continue;
        }
        let mut prod = BigInt::one();
        let mut small: u128 = 1;
        for &s in &sums {
            match small.checked_mul(s as u128) {
                Some(p) => small = p,
                None => {
                    prod *= BigInt::from(small);
                    small = s as u128;
                }
            }
        }
        prod *= BigInt::from(small);
        let flip = (n as u32 - gray(k).count_ones()) & 1 == 1;
        if flip {
            acc -= prod;
        } else {
            acc += prod;
        }
    }
    acc
}

/// Inclusion-exclusion over a rook polynomial in `t`: the number of
/// permutations of `n` avoiding a board with rook polynomial `r` is
/// `sum_k (-1)^k r_k (n-k)!`.  The degree of `r` must not exceed `n`.
pub fn umbral_count(r: &IntPoly, n: usize) -> Result<BigInt> {
    if r.var() != Var::T {
        return Err(Error::VarMismatch(r.var().letter(), 't'));
    }
    if let Some(deg) = r.degree() {
        if deg > n {
            return Err(Error::DegreeExceedsN { degree: deg, n });
        }
    }
    let mut acc = BigInt::zero();
    for (k, c) in r.coeffs().iter().enumerate() {
        let term = c * factorial(n - k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Closed-form count of circular-ménage type: permutations of `1..=n` with
/// `pi(i) - i` never congruent to `0` or `1` mod `n`, via the alternating
/// binomial sum `sum_k (-1)^k (2n/(2n-k)) C(2n-k, k) (n-k)!`, evaluated in
/// pure integers through `(2n/(2n-k)) C(2n-k,k) = C(2n-k,k) + C(2n-k-1,k-1)`.
/// Defined for `n >= 3`.
pub fn touchard(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::TouchardRange(n));
    }
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let two_n_k = BigInt::from(2 * n - k);
        let mut weight = binomial(two_n_k.clone(), BigInt::from(k));
        if k >= 1 {
            weight += binomial(two_n_k - 1, BigInt::from(k - 1));
        }
        let term = weight * factorial(n - k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// How a displacement set restricts a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `pi(i) - i` must avoid `S`.
    Straight,
    /// `pi(i) - i mod n` must avoid the residues of `S` (translated so its
    /// minimum is 0).
    Circular,
    /// `pi(i) - i` must lie *inside* `S`.
    Allowed,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Straight => "straight",
            Mode::Circular => "circular",
            Mode::Allowed => "allowed",
        })
    }
}

/// A validated counting request.  Circular requests are normalized on
/// construction (the set is translated so its minimum is 0), which keeps
/// caches and reports canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRequest {
    s: BTreeSet<i64>,
    n: usize,
    mode: Mode,
}

impl CountRequest {
    pub fn new(s: BTreeSet<i64>, n: usize, mode: Mode) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBoard("n must be at least 1".into()));
        }
        if mode == Mode::Allowed && s.is_empty() {
            return Err(Error::EmptySet);
        }
        let s = match (mode, s.first().copied()) {
            (Mode::Circular, Some(min)) => s.iter().map(|d| d - min).collect(),
            _ => s,
        };
        Ok(CountRequest { s, n, mode })
    }

    pub fn s(&self) -> &BTreeSet<i64> {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The forbidden board, when the mode has one (`Allowed` counts through
    /// the profile DP instead).
    pub fn board(&self) -> Option<Board> {
        match self.mode {
            Mode::Straight => Some(Board::straight(&self.s, self.n)),
            Mode::Circular => Some(Board::circular(&self.s, self.n)),
            Mode::Allowed => None,
        }
    }
}

/// Count permutations whose displacements `pi(i) - i` all lie in `s`, by a
/// profile DP over the window `[min S, max S]`.  Window capped at
/// [`DEFAULT_WINDOW_CAP`]; see [`count_allowed_with_cap`].
pub fn count_allowed(s: &BTreeSet<i64>, n: usize) -> Result<BigInt> {
    count_allowed_with_cap(s, n, DEFAULT_WINDOW_CAP)
}

/// Profile DP with an explicit window cap.
///
/// The state before row `i` is a bitmask over the columns `i + min S ..= i +
/// max S`; a set bit means "used, or outside `1..=n`".  Row `i` picks an
/// unset displacement bit, then the window slides: the exiting column must be
/// set (it is unreachable from now on) and the entering column is marked by
/// existence.  After row `n` every surviving state whose mask is full
/// corresponds to exactly the permutations using all columns.
pub fn count_allowed_with_cap(s: &BTreeSet<i64>, n: usize, cap: u32) -> Result<BigInt> {
    let (&lo, &hi) = match (s.first(), s.last()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::EmptySet),
    };
    let w128 = (hi as i128) - (lo as i128) + 1;
    if w128 > cap as i128 || w128 > 63 {
        return Err(Error::WindowCap {
            window: w128.min(u32::MAX as i128) as u32,
            cap,
        });
    }
    let w = w128 as u32;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let nn = n as i64;
    let exists = |col: i64| (1..=nn).contains(&col);
    let full: u64 = if w == 64 { u64::MAX } else { (1 << w) - 1 };
    let offsets: Vec<u32> = s.iter().map(|d| (d - lo) as u32).collect();

    let mut init: u64 = 0;
    for b in 0..w {
        if !exists(1 + lo + b as i64) {
            init |= 1 << b;
        }
    }
    let mut states: HashMap<u64, BigInt> = HashMap::from([(init, BigInt::one())]);

    for i in 1..=nn {
        let step = |(mask, count): (u64, BigInt)| {
            let mut out: Vec<(u64, BigInt)> = Vec::with_capacity(offsets.len());
            for &b in &offsets {
                if mask & (1 << b) != 0 {
                    continue;
                }
                let used = mask | (1 << b);
                // The window slides: column i + lo leaves, i + 1 + hi enters.
                if exists(i + lo) && used & 1 == 0 {
                    continue;
                }
                let mut next = used >> 1;
                if !exists(i + 1 + hi) {
                    next |= 1 << (w - 1);
                }
                out.push((next, count.clone()));
            }
            out
        };
        let items: Vec<(u64, BigInt)> = states.into_iter().collect();
        let mut merged: HashMap<u64, BigInt> = HashMap::new();
        if items.len() >= 2048 {
            let parts = exec::map_collect(items, step);
            for (mask, count) in parts.into_iter().flatten() {
                *merged.entry(mask).or_insert_with(BigInt::zero) += count;
            }
        } else {
            for (mask, count) in items.into_iter().flat_map(step) {
                *merged.entry(mask).or_insert_with(BigInt::zero) += count;
            }
        }
        states = merged;
        if states.is_empty() {
            return Ok(BigInt::zero());
        }
    }

    Ok(states
        .into_iter()
        .filter(|&(mask, _)| mask == full)
        .map(|(_, count)| count)
        .sum())
}

/// Counting engine with a shared rook-polynomial cache and configurable caps.
///
/// One `Counter` should serve a whole investigation: sweeps over `n` reuse
/// each other's memoized sub-boards, and the sweep itself runs in parallel.
pub struct Counter {
    solver: RookSolver,
    permanent_cap: usize,
    window_cap: u32,
}

impl Default for Counter {
    fn default() -> Self {
        Self::new()
    }
}

impl Counter {
    pub fn new() -> Self {
        Counter {
            solver: RookSolver::new(),
            permanent_cap: DEFAULT_PERMANENT_CAP,
            window_cap: DEFAULT_WINDOW_CAP,
        }
    }

    pub fn with_solver(solver: RookSolver) -> Self {
        Counter {
            solver,
            ..Self::new()
        }
    }

    pub fn solver(&self) -> &RookSolver {
        &self.solver
    }

    /// Count the permutations selected by `req`, through the scaling route
    /// for its mode (rook polynomial + inclusion-exclusion, or profile DP).
    pub fn count(&self, req: &CountRequest) -> Result<BigInt> {
        match req.board() {
            Some(board) => {
                let r = self.solver.rook_polynomial(&board);
                umbral_count(&r, req.n())
            }
            None => count_allowed_with_cap(&req.s, req.n, self.window_cap),
        }
    }

    /// The same count through the permanent of the complement (or, for
    /// `Allowed`, of the allowed-positions matrix itself) — the independent
    /// cross-check oracle.  Subject to the permanent cap.
    pub fn count_by_permanent(&self, req: &CountRequest) -> Result<BigInt> {
        let matrix = match req.board() {
            Some(board) => board.complement(),
            None => {
                let n = req.n();
                let mut m = Matrix01::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        let d = j as i64 - i as i64;
                        if req.s.contains(&d) {
                            m.set(i, j, true);
                        }
                    }
                }
                m
            }
        };
        permanent_with_cap(&matrix, self.permanent_cap)
    }

    /// Terms `a(1) ..= a(len)` of the counting sequence of `(s, mode)`,
    /// computed in parallel with the shared rook cache.
    pub fn seq(&self, s: &BTreeSet<i64>, mode: Mode, len: usize) -> Result<Vec<BigInt>> {
        let results = exec::map_collect((1..=len).collect::<Vec<_>>(), |n| {
            self.count(&CountRequest::new(s.clone(), n, mode)?)
        });
        results.into_iter().collect()
    }

    /// Rook polynomials of the family's boards for `n = 1 ..= len`
    /// (straight or circular modes only).
    pub fn family_rook_polys(
        &self,
        s: &BTreeSet<i64>,
        mode: Mode,
        len: usize,
    ) -> Result<Vec<IntPoly>> {
        let results = exec::map_collect((1..=len).collect::<Vec<_>>(), |n| {
            let req = CountRequest::new(s.clone(), n, mode)?;
            let board = req.board().ok_or(Error::InvalidRecurrence(
                "rook polynomials exist for straight and circular modes only".into(),
            ))?;
            Ok(self.solver.rook_polynomial(&board))
        });
        results.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[i64]) -> BTreeSet<i64> {
        xs.iter().copied().collect()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    /// All permutations of `0..n` (test oracle; n kept tiny).
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_count(req: &CountRequest) -> BigInt {
        let n = req.n();
        let nn = n as i64;
        let count = all_perms(n)
            .into_iter()
            .filter(|p| {
                (0..n).all(|i| {
                    let d = p[i] as i64 - i as i64;
                    match req.mode() {
                        Mode::Straight => !req.s().contains(&d),
                        Mode::Circular => !req.s().iter().any(|r| (d - r).rem_euclid(nn) == 0),
                        Mode::Allowed => req.s().contains(&d),
                    }
                })
            })
            .count();
        BigInt::from(count)
    }

    #[test]
    fn permanent_of_the_worked_complement_is_two() {
        let b = Board::from_parts(
            5,
            vec![
                vec![1, 4, 5],
                vec![3, 4],
                vec![1, 3, 4],
                vec![2, 3, 5],
                vec![1, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(permanent(&b.complement()).unwrap(), big(2));
    }

    #[test]
    fn permanent_basics() {
        assert_eq!(permanent(&Matrix01::zeros(0)).unwrap(), big(1));
        assert_eq!(permanent(&Matrix01::zeros(4)).unwrap(), big(0));
        let full = Matrix01::from_rows(vec![vec![true; 6]; 6]).unwrap();
        assert_eq!(permanent(&full).unwrap(), factorial(6));
        let id = Board::straight(&set(&[0]), 5).to_matrix();
        assert_eq!(permanent(&id).unwrap(), big(1));
    }

    #[test]
    fn permanent_respects_the_cap() {
        let m = Matrix01::zeros(23);
        assert_eq!(
            permanent(&m),
            Err(Error::PermanentCap { side: 23, cap: 22 })
        );
        assert!(permanent_with_cap(&Matrix01::zeros(5), 4).is_err());
        // Raising the cap takes the big-integer path.
        let id = Board::straight(&set(&[0]), 23).to_matrix();
        let full23 = Board::from_matrix(&id).complement();
        let _ = full23;
        assert_eq!(permanent_with_cap(&id, 23).unwrap(), big(1));
    }

    #[test]
    fn umbral_count_examples() {
        // (1 + t)^4 is the rook polynomial of the identity board: derangements.
        let r = IntPoly::from_ints(Var::T, &[1, 4, 6, 4, 1]);
        assert_eq!(umbral_count(&r, 4).unwrap(), big(9));
        // A bare 1 counts every permutation.
        assert_eq!(
            umbral_count(&IntPoly::one(Var::T), 5).unwrap(),
            factorial(5)
        );
        // Degree above n is a contract violation.
        assert_eq!(
            umbral_count(&IntPoly::from_ints(Var::T, &[1, 0, 1]), 1),
            Err(Error::DegreeExceedsN { degree: 2, n: 1 })
        );
        let wrong_var = IntPoly::from_ints(Var::N, &[1]);
        assert!(umbral_count(&wrong_var, 3).is_err());
    }

    #[test]
    fn derangements_and_factorials() {
        let counter = Counter::new();
        assert_eq!(
            counter.seq(&set(&[0]), Mode::Straight, 6).unwrap(),
            [0, 1, 2, 9, 44, 265].map(big)
        );
        assert_eq!(
            counter.seq(&set(&[]), Mode::Straight, 4).unwrap(),
            [1, 2, 6, 24].map(big)
        );
    }

    #[test]
    fn menage_numbers_appear_in_circular_mode() {
        let counter = Counter::new();
        assert_eq!(
            counter.seq(&set(&[0, 1]), Mode::Circular, 7).unwrap(),
            [0, 0, 1, 2, 13, 80, 579].map(big)
        );
    }

    #[test]
    fn touchard_closed_form() {
        assert_eq!(touchard(3).unwrap(), big(1));
        assert_eq!(touchard(4).unwrap(), big(2));
        assert_eq!(touchard(5).unwrap(), big(13));
        assert_eq!(touchard(2), Err(Error::TouchardRange(2)));
    }

    #[test]
    fn count_allowed_examples() {
        for n in 1..=5 {
            assert_eq!(count_allowed(&set(&[0]), n).unwrap(), big(1));
        }
        assert_eq!(count_allowed(&set(&[-1, 0, 1]), 4).unwrap(), big(5));
        assert_eq!(count_allowed(&set(&[-2, -1, 1, 2]), 4).unwrap(), big(4));
        assert_eq!(count_allowed(&set(&[]), 3), Err(Error::EmptySet));
        assert_eq!(
            count_allowed_with_cap(&set(&[0, 30]), 3, 24),
            Err(Error::WindowCap {
                window: 31,
                cap: 24
            })
        );
    }

    #[test]
    fn circular_requests_normalize_their_set() {
        let a = CountRequest::new(set(&[5, 6]), 6, Mode::Circular).unwrap();
        let b = CountRequest::new(set(&[0, 1]), 6, Mode::Circular).unwrap();
        assert_eq!(a, b);
        let counter = Counter::new();
        assert_eq!(counter.count(&a).unwrap(), counter.count(&b).unwrap());
    }

    #[test]
    fn complementation_identity() {
        // Counting inside S equals avoiding the complement of S within the
        // displacement range a permutation of n can realize.
        let counter = Counter::new();
        for s in [set(&[-1, 0, 1]), set(&[-2, 0, 2]), set(&[0, 1, 2])] {
            for n in 1..=6 {
                let inside = count_allowed(&s, n).unwrap();
                let range = 1 - n as i64..=n as i64 - 1;
                let complement: BTreeSet<i64> = range.filter(|d| !s.contains(d)).collect();
                let avoid = counter
                    .count(&CountRequest::new(complement, n, Mode::Straight).unwrap())
                    .unwrap();
                assert_eq!(inside, avoid, "s = {s:?}, n = {n}");
            }
        }
    }

    #[test]
    fn bonferroni_partial_sums_bracket_the_count() {
        let counter = Counter::new();
        for (s, mode) in [
            (set(&[0, 1]), Mode::Straight),
            (set(&[0, 1]), Mode::Circular),
            (set(&[-1, 1]), Mode::Straight),
        ] {
            for n in 2..=7 {
                let req = CountRequest::new(s.clone(), n, mode).unwrap();
                let r = RookSolver::new().rook_polynomial(&req.board().unwrap());
                let exact = counter.count(&req).unwrap();
                let mut partial = BigInt::zero();
                for (k, c) in r.coeffs().iter().enumerate() {
                    let term = c * factorial(n - k);
                    if k % 2 == 0 {
                        partial += term;
                        assert!(partial >= exact, "even prefix must overshoot");
                    } else {
                        partial -= term;
                        assert!(partial <= exact, "odd prefix must undershoot");
                    }
                }
                assert_eq!(partial, exact);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn umbral_and_permanent_agree_with_brute_force(
            bits in proptest::collection::vec(any::<bool>(), 5),
            n in 1usize..=6,
            mode_pick in 0u8..3,
        ) {
            let s: BTreeSet<i64> = (-2i64..=2).zip(&bits).filter(|(_, &b)| b).map(|(d, _)| d).collect();
            let mode = [Mode::Straight, Mode::Circular, Mode::Allowed][mode_pick as usize];
            prop_assume!(!(mode == Mode::Allowed && s.is_empty()));
            let req = CountRequest::new(s, n, mode).unwrap();
            let counter = Counter::new();
            let count = counter.count(&req).unwrap();
            prop_assert_eq!(&count, &counter.count_by_permanent(&req).unwrap());
            prop_assert_eq!(&count, &brute_count(&req));
            prop_assert!(count >= BigInt::zero());
            prop_assert!(count <= factorial(n));
        }
    }
}
