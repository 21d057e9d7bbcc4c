//! Boards of forbidden cells inside an `n x n` square and their rook
//! polynomials.
//!
//! The rook polynomial `R(t) = sum_k r_k t^k` counts placements of `k`
//! non-attacking rooks on the board's cells.  It is computed by the classical
//! branching recursion: pick a cell, then `R = R(board without that cell)
//! + t * R(board without that cell's row and column)`.  Sub-boards are
//! memoized under a canonical key that is invariant under row and column
//! permutation, so structurally equal sub-boards — which the displacement
//! families produce in abundance, across different `n` — are solved once.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::poly::{IntPoly, Var};
use crate::{Error, Result};

/// A square 0/1 matrix, row-major.  Used both for boards given explicitly
/// and for the complement matrices handed to the permanent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix01 {
    n: usize,
    cells: Vec<bool>,
}

impl Matrix01 {
    /// All-zero matrix.
    pub fn zeros(n: usize) -> Self {
        Matrix01 {
            n,
            cells: vec![false; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<bool>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i + 1,
                    cols: row.len(),
                });
            }
        }
        Ok(Matrix01 {
            n,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Parse lines of `0`/`1` characters, optionally separated by spaces.
    /// Blank lines are ignored; the result must be square.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let mut row = Vec::new();
            for ch in line.chars() {
                match ch {
                    '0' => row.push(false),
                    '1' => row.push(true),
                    c if c.is_whitespace() => {}
                    c => return Err(Error::BadMatrixEntry(c)),
                }
            }
            if !row.is_empty() {
                rows.push(row);
            }
        }
        Self::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.cells[i * self.n + j] = v;
    }

    pub fn count_ones(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    /// Rows as bitmasks (bit `j` = column `j`), for sides up to 64.
    pub(crate) fn row_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            (0..self.n)
                .map(|i| {
                    (0..self.n)
                        .filter(|&j| self.get(i, j))
                        .fold(0u64, |m, j| m | 1 << j)
                })
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Row representation used for (de)serialization before validation.
#[derive(Deserialize)]
struct RawBoard {
    n: usize,
    rows: Vec<Vec<u32>>,
}

/// A board of forbidden cells in the `n x n` square.
///
/// `rows[i]` holds the forbidden columns of row `i + 1`, as sorted 1-based
/// indices.  The JSON form is `{"n": 5, "rows": [[1,4,5], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBoard")]
pub struct Board {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawBoard> for Board {
    type Error = Error;
    fn try_from(raw: RawBoard) -> Result<Self> {
        Board::from_parts(raw.n, raw.rows)
    }
}

impl Board {
    /// Validate and normalize: one row set per row, every column in `1..=n`,
    /// rows sorted and deduplicated.
    pub fn from_parts(n: usize, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::InvalidBoard(format!(
                "expected {n} row sets, got {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            if let Some(&c) = row.iter().find(|&&c| c < 1 || c as usize > n) {
                return Err(Error::InvalidBoard(format!(
                    "row {} holds column {c}, outside 1..={n}",
                    i + 1
                )));
            }
        }
        Ok(Board { n, rows })
    }

    /// Board with no forbidden cells.
    pub fn empty(n: usize) -> Self {
        Board {
            n,
            rows: vec![Vec::new(); n],
        }
    }

    /// Cells are the 1-entries of a square 0/1 matrix.
    pub fn from_matrix(m: &Matrix01) -> Self {
        let rows = (0..m.n())
            .map(|i| {
                (0..m.n())
                    .filter(|&j| m.get(i, j))
                    .map(|j| j as u32 + 1)
                    .collect()
            })
            .collect();
        Board { n: m.n(), rows }
    }

    /// Straight board of a displacement set: cell `(i, j)` is forbidden when
    /// `j - i` lies in `s`.  Displacements pointing outside the square simply
    /// contribute nothing.
    pub fn straight(s: &BTreeSet<i64>, n: usize) -> Self {
        let rows = (1..=n as i64)
            .map(|i| {
                s.iter()
                    .map(|d| i + d)
                    .filter(|&j| j >= 1 && j <= n as i64)
                    .map(|j| j as u32)
                    .collect::<Vec<_>>()
            })
            .map(|mut r: Vec<u32>| {
                r.sort_unstable();
                r.dedup();
                r
            })
            .collect();
        Board { n, rows }
    }

    /// Circular board: `s` is first translated so its minimum is 0, then the
    /// cell `(i, j)` is forbidden when `(j - i) mod n` is one of the residues
    /// of the translated set.  Duplicate residues collapse, so a set covering
    /// all residues yields the full board.
    pub fn circular(s: &BTreeSet<i64>, n: usize) -> Self {
        let nn = n as i64;
        let residues: BTreeSet<i64> = match s.first() {
            Some(&min) => s.iter().map(|d| (d - min).rem_euclid(nn)).collect(),
            None => BTreeSet::new(),
        };
        let rows = (0..n as i64)
            .map(|i| {
                residues
                    .iter()
                    .map(|r| ((i + r).rem_euclid(nn)) as u32 + 1)
                    .collect::<Vec<_>>()
            })
            .map(|mut r: Vec<u32>| {
                r.sort_unstable();
                r
            })
            .collect();
        Board { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Forbidden columns per row, sorted, 1-based.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Whether the 1-based cell `(i, j)` is forbidden.
    pub fn forbids(&self, i: usize, j: u32) -> bool {
        self.rows[i - 1].binary_search(&j).is_ok()
    }

    /// 0/1 matrix of the forbidden cells.
    pub fn to_matrix(&self) -> Matrix01 {
        let mut m = Matrix01::zeros(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for &c in row {
                m.set(i, c as usize - 1, true);
            }
        }
        m
    }

    /// 0/1 matrix of the *allowed* cells; its permanent counts the
    /// permutations avoiding this board.
    pub fn complement(&self) -> Matrix01 {
        let mut m = Matrix01::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, !self.forbids(i + 1, j as u32 + 1));
            }
        }
        m
    }

    /// Apply row and column permutations (`perm[i]` is the new 0-based index
    /// of old row/column `i`).  Rook polynomials are invariant under this.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Board {
        let mut rows = vec![Vec::new(); self.n];
        for (i, row) in self.rows.iter().enumerate() {
            let mut new_row: Vec<u32> = row
                .iter()
                .map(|&c| col_perm[c as usize - 1] as u32 + 1)
                .collect();
            new_row.sort_unstable();
            rows[row_perm[i]] = new_row;
        }
        Board { n: self.n, rows }
    }
}

/// How the recursion picks the cell to branch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchRule {
    /// Branch on the first cell of the shortest nonempty line (row or
    /// column).  Keeps the recursion tree small; the default.
    #[default]
    MinLine,
    /// The textbook step, for step-by-step comparison: branch on the first
    /// cell of the first row; if the first row is empty, on the first cell of
    /// the first column; if both are empty, delete them and repeat.
    FirstOne,
}

/// Sub-boards inside the recursion: rows of sorted 0-based columns.  Rows may
/// be empty (the `FirstOne` rule needs to see them in place).
type SubBoard = Vec<Vec<u32>>;

/// Canonical memo key: nonempty rows, columns relabelled by first use, rows
/// sorted, iterated to a fixpoint.  Boards that are row/column permutations
/// of one another usually meet in the same key (always a sound merge, since
/// the rook polynomial is permutation-invariant); the heuristic not being a
/// perfect canonical form only costs an occasional duplicate cache entry.
fn canonical_key(rows: &[Vec<u32>]) -> Box<[u32]> {
    let mut rs: Vec<Vec<u32>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    if rs.is_empty() {
        return Box::new([]);
    }
    rs.sort();
    for _ in 0..8 {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 0u32;
        for row in &rs {
            for &c in row {
                map.entry(c).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                });
            }
        }
        let mut relabelled: Vec<Vec<u32>> = rs
            .iter()
            .map(|row| {
                let mut r: Vec<u32> = row.iter().map(|c| map[c]).collect();
                r.sort_unstable();
                r
            })
            .collect();
        relabelled.sort();
        if relabelled == rs {
            break;
        }
        rs = relabelled;
    }
    let mut flat = Vec::new();
    for row in &rs {
        flat.extend_from_slice(row);
        flat.push(u32::MAX);
    }
    flat.into_boxed_slice()
}

/// Memo cache with optional LRU eviction.
struct LruCache {
    map: HashMap<Box<[u32]>, (IntPoly, u64)>,
    by_stamp: BTreeMap<u64, Box<[u32]>>,
    tick: u64,
    cap: Option<usize>,
}

impl LruCache {
    fn new(cap: Option<usize>) -> Self {
        LruCache {
            map: HashMap::new(),
            by_stamp: BTreeMap::new(),
            tick: 0,
            cap: cap.map(|c| c.max(1)),
        }
    }

    fn get(&mut self, key: &[u32]) -> Option<IntPoly> {
        let (poly, stamp) = self.map.get_mut(key)?;
        let hit = poly.clone();
        let old = *stamp;
        let fresh = self.tick;
        self.tick += 1;
        *stamp = fresh;
        let k = self.by_stamp.remove(&old).expect("stamp index out of sync");
        self.by_stamp.insert(fresh, k);
        Some(hit)
    }

    fn insert(&mut self, key: Box<[u32]>, poly: IntPoly) {
        let stamp = self.tick;
        self.tick += 1;
        if let Some((_, old)) = self.map.insert(key.clone(), (poly, stamp)) {
            self.by_stamp.remove(&old);
        }
        self.by_stamp.insert(stamp, key);
        if let Some(cap) = self.cap {
            while self.map.len() > cap {
                let (_, victim) = self.by_stamp.pop_first().expect("cache and index disagree");
                self.map.remove(&victim);
            }
        }
    }

    fn len(&self) -> usize {
        self.map.len()
    }
}

/// Rook-polynomial solver with a shared memo cache.
///
/// One solver instance should serve a whole family of related boards (all
/// `n` of a displacement set, say): their sub-boards overlap heavily and the
/// shared cache turns the cross-`n` sweep into incremental work.  The cache
/// sits behind a mutex, so a single solver can be used from parallel sweeps.
pub struct RookSolver {
    rule: BranchRule,
    cache: Mutex<LruCache>,
}

impl Default for RookSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl RookSolver {
    pub fn new() -> Self {
        RookSolver {
            rule: BranchRule::default(),
            cache: Mutex::new(LruCache::new(None)),
        }
    }

    /// Select the branching rule.
    pub fn rule(mut self, rule: BranchRule) -> Self {
        self.rule = rule;
        self
    }

    /// Cap the memo cache at `cap` entries, evicting least-recently-used
    /// sub-boards beyond it.
    pub fn cache_cap(self, cap: usize) -> Self {
        RookSolver {
            rule: self.rule,
            cache: Mutex::new(LruCache::new(Some(cap))),
        }
    }

    /// Number of memoized sub-boards.
    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    /// The rook polynomial of `board`, in the variable `t`.
    pub fn rook_polynomial(&self, board: &Board) -> IntPoly {
        let sub: SubBoard = board
            .rows()
            .iter()
            .map(|row| row.iter().map(|&c| c - 1).collect())
            .collect();
        self.solve(sub)
    }

    fn solve(&self, mut b: SubBoard) -> IntPoly {
        match self.rule {
            BranchRule::MinLine => b.retain(|row| !row.is_empty()),
            BranchRule::FirstOne => {
                // Delete leading all-empty row/column pairs.
                while !b.is_empty()
                    && b[0].is_empty()
                    && b.iter().all(|row| row.first() != Some(&0))
                {
                    b.remove(0);
                    for row in &mut b {
                        for c in row.iter_mut() {
                            *c -= 1;
                        }
                    }
                }
                // A trailing run of empty rows contributes nothing either.
                while b.last().is_some_and(Vec::is_empty) {
                    b.pop();
                }
            }
        }
        if b.iter().all(Vec::is_empty) {
            return IntPoly::one(Var::T);
        }

        let key = canonical_key(&b);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit;
        }

        let (r, c) = self.pick_cell(&b);
        let b1 = without_cell(&b, r, c);
        let b2 = without_row_col(&b, r, c);
        let p1 = self.solve(b1);
        let p2 = self.solve(b2);
        let result = &p1
            + &IntPoly::monomial(Var::T, 1, BigInt::from(1))
                .try_mul(&p2)
                .unwrap();

        self.cache.lock().unwrap().insert(key, result.clone());
        result
    }

    fn pick_cell(&self, b: &SubBoard) -> (usize, u32) {
        match self.rule {
            BranchRule::FirstOne => {
                if !b[0].is_empty() {
                    (0, b[0][0])
                } else {
                    // First column is nonempty here (empty pairs were deleted).
                    let r = b
                        .iter()
                        .position(|row| row.first() == Some(&0))
                        .expect("first column unexpectedly empty");
                    (r, 0)
                }
            }
            BranchRule::MinLine => {
                let mut col_count: HashMap<u32, u32> = HashMap::new();
                for row in b {
                    for &c in row {
                        *col_count.entry(c).or_insert(0) += 1;
                    }
                }
                let (best_row, row_len) = b
                    .iter()
                    .enumerate()
                    .filter(|(_, row)| !row.is_empty())
                    .map(|(i, row)| (i, row.len() as u32))
                    .min_by_key(|&(i, len)| (len, i))
                    .expect("nonempty board");
                let (&best_col, &col_len) = col_count
                    .iter()
                    .min_by_key(|&(&c, &len)| (len, c))
                    .expect("nonempty board");
                if row_len <= col_len {
                    (best_row, b[best_row][0])
                } else {
                    let r = b
                        .iter()
                        .position(|row| row.binary_search(&best_col).is_ok())
                        .expect("column count out of sync");
                    (r, best_col)
                }
            }
        }
    }
}

fn without_cell(b: &SubBoard, r: usize, c: u32) -> SubBoard {
    let mut out = b.clone();
    out[r].retain(|&x| x != c);
    out
}

fn without_row_col(b: &SubBoard, r: usize, c: u32) -> SubBoard {
    b.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| {
            row.iter()
                .filter(|&&x| x != c)
                .map(|&x| if x > c { x - 1 } else { x })
                .collect()
        })
        .collect()
}

/// One-shot rook polynomial with a private cache (use [`RookSolver`] when
/// computing a family of related boards).
pub fn rook_polynomial(board: &Board) -> IntPoly {
    RookSolver::new().rook_polynomial(board)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The five-row example board used throughout: forbidden columns
    /// {1,4,5}, {3,4}, {1,3,4}, {2,3,5}, {1,4,5}.
    pub(crate) fn worked_board() -> Board {
        Board::from_parts(
            5,
            vec![
                vec![1, 4, 5],
                vec![3, 4],
                vec![1, 3, 4],
                vec![2, 3, 5],
                vec![1, 4, 5],
            ],
        )
        .unwrap()
    }

    fn set(xs: &[i64]) -> BTreeSet<i64> {
        xs.iter().copied().collect()
    }

    /// Independent oracle: count k-rook placements by backtracking over the
    /// cell list in index order.
    fn brute_rook_counts(board: &Board) -> Vec<BigInt> {
        let cells: Vec<(usize, u32)> = board
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&c| (i, c)))
            .collect();
        let n = board.n();
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        fn rec(
            cells: &[(usize, u32)],
            start: usize,
            rows_used: u64,
            cols_used: u64,
            depth: usize,
            counts: &mut Vec<u64>,
        ) {
            for (idx, &(r, c)) in cells.iter().enumerate().skip(start) {
                if rows_used & (1 << r) != 0 || cols_used & (1 << c) != 0 {
                    continue;
                }
                counts[depth + 1] += 1;
                rec(
                    cells,
                    idx + 1,
                    rows_used | 1 << r,
                    cols_used | 1 << c,
                    depth + 1,
                    counts,
                );
            }
        }
        rec(&cells, 0, 0, 0, 0, &mut counts);
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn worked_board_from_matrix() {
        let text = "10011\n00110\n10110\n01101\n10011";
        let m = Matrix01::parse_text(text).unwrap();
        assert_eq!(Board::from_matrix(&m), worked_board());
    }

    #[test]
    fn matrix_parsing_accepts_spaces_and_rejects_garbage() {
        let spaced = Matrix01::parse_text("1 0\n0 1").unwrap();
        assert_eq!(spaced.n(), 2);
        assert!(spaced.get(0, 0) && spaced.get(1, 1));
        assert_eq!(
            Matrix01::parse_text("10\n0"),
            Err(Error::NotSquare {
                rows: 2,
                row: 2,
                cols: 1
            })
        );
        assert_eq!(
            Matrix01::parse_text("1x\n00"),
            Err(Error::BadMatrixEntry('x'))
        );
    }

    #[test]
    fn straight_board_outside_the_square_is_empty() {
        let b = Board::straight(&set(&[5]), 3);
        assert_eq!(b, Board::empty(3));
        assert_eq!(rook_polynomial(&b), IntPoly::one(Var::T));
    }

    #[test]
    fn circular_board_wraps_and_translation_does_not_matter() {
        let b = Board::circular(&set(&[0, 1]), 4);
        let expected =
            Board::from_parts(4, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
        assert_eq!(b, expected);
        // Translating the displacement set leaves the circular board unchanged.
        assert_eq!(Board::circular(&set(&[7, 8]), 4), b);
        assert_eq!(Board::circular(&set(&[-3, -2]), 4), b);
        // A set covering every residue gives the full board.
        let full = Board::circular(&set(&[0, 1, 2]), 3);
        assert_eq!(full.cell_count(), 9);
    }

    #[test]
    fn worked_board_rook_polynomial_under_both_rules() {
        let expected = IntPoly::from_ints(Var::T, &[1, 14, 63, 105, 56, 6]);
        let b = worked_board();
        for rule in [BranchRule::MinLine, BranchRule::FirstOne] {
            let solver = RookSolver::new().rule(rule);
            assert_eq!(solver.rook_polynomial(&b), expected, "rule {rule:?}");
        }
    }

    #[test]
    fn identity_board_gives_binomials() {
        let b = Board::straight(&set(&[0]), 6);
        let r = rook_polynomial(&b);
        assert_eq!(r, IntPoly::from_ints(Var::T, &[1, 6, 15, 20, 15, 6, 1]));
    }

    #[test]
    fn complement_of_the_worked_board() {
        let p = worked_board().complement();
        assert_eq!(p.to_text(), "01100\n11001\n01001\n10010\n01100");
        assert_eq!(
            Board::from_matrix(&p).cell_count() + worked_board().cell_count(),
            25
        );
    }

    #[test]
    fn lru_cache_eviction_keeps_results_correct() {
        let solver = RookSolver::new().cache_cap(3);
        for n in 1..=6 {
            let b = Board::straight(&set(&[-1, 0, 1]), n);
            let fresh = rook_polynomial(&b);
            assert_eq!(solver.rook_polynomial(&b), fresh);
            assert!(solver.cache_len() <= 3);
        }
    }

    #[test]
    fn board_json_round_trip_and_validation() {
        let b = worked_board();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(
            json,
            r#"{"n":5,"rows":[[1,4,5],[3,4],[1,3,4],[2,3,5],[1,4,5]]}"#
        );
        let back: Board = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<Board>(r#"{"n":2,"rows":[[0],[1]]}"#).is_err());
        assert!(serde_json::from_str::<Board>(r#"{"n":2,"rows":[[1]]}"#).is_err());
        assert!(serde_json::from_str::<Board>(r#"{"n":2,"rows":[[3],[1]]}"#).is_err());
    }

    prop_compose! {
        fn arb_board(max_n: usize)
            (n in 1..=max_n)
            (n in Just(n), bits in proptest::collection::vec(proptest::bool::weighted(0.35), n * n))
            -> Board
        {
            let rows = (0..n)
                .map(|i| (0..n).filter(|&j| bits[i * n + j]).map(|j| j as u32 + 1).collect())
                .collect();
            Board::from_parts(n, rows).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn coefficients_match_brute_force(b in arb_board(5)) {
            let r = rook_polynomial(&b);
            prop_assert_eq!(r.coeffs().to_vec(), brute_rook_counts(&b));
        }

        #[test]
        fn rook_polynomial_is_permutation_invariant(b in arb_board(5), seed in 0u64..1000) {
            // A deterministic shuffle driven by the seed.
            let n = b.n();
            let mut rp: Vec<usize> = (0..n).collect();
            let mut cp: Vec<usize> = (0..n).collect();
            let mut s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            for i in (1..n).rev() {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                rp.swap(i, (s % (i as u64 + 1)) as usize);
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                cp.swap(i, (s % (i as u64 + 1)) as usize);
            }
            let permuted = b.permuted(&rp, &cp);
            prop_assert_eq!(rook_polynomial(&permuted), rook_polynomial(&b));
        }

        #[test]
        fn constant_term_and_linear_coefficient(b in arb_board(6)) {
            let r = rook_polynomial(&b);
            prop_assert_eq!(r.coeff(0), BigInt::from(1));
            prop_assert_eq!(r.coeff(1), BigInt::from(b.cell_count()));
            prop_assert!(r.degree().unwrap_or(0) <= b.n());
        }

        #[test]
        fn disjoint_union_multiplies(a in arb_board(4), b in arb_board(4)) {
            // Place the two boards in disjoint row and column blocks.
            let n = a.n() + b.n();
            let mut rows: Vec<Vec<u32>> = a.rows().to_vec();
            for row in b.rows() {
                rows.push(row.iter().map(|&c| c + a.n() as u32).collect());
            }
            let union = Board::from_parts(n, rows).unwrap();
            let expected = rook_polynomial(&a).try_mul(&rook_polynomial(&b)).unwrap();
            prop_assert_eq!(rook_polynomial(&union), expected);
        }

        #[test]
        fn both_branch_rules_agree(b in arb_board(5)) {
            let min_line = RookSolver::new().rule(BranchRule::MinLine).rook_polynomial(&b);
            let first_one = RookSolver::new().rule(BranchRule::FirstOne).rook_polynomial(&b);
            prop_assert_eq!(min_line, first_one);
        }
    }
}
