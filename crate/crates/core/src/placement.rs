//! Exhaustive enumeration of m-level rook placements and file placements,
//! the per-placement inversion statistics, and the brute-force counts built on them.
//!
//! Cells are `(column, row)` pairs named by their northeast corner, both 1-based.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::board::{FerrersBoard, Level};
use crate::error::{Error, Result};
use crate::polynomial::{int_falling, LaurentPoly, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub column: u32,
    pub row: u32,
}

impl Cell {
    pub fn new(column: u32, row: u32) -> Self {
        Self { column, row }
    }
}

/// A board as an arbitrary finite set of cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellSetBoard {
    cells: BTreeSet<Cell>,
}

impl CellSetBoard {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(c) = cells.iter().find(|c| c.column == 0 || c.row == 0) {
            return Err(Error::InvalidInput(format!("cell ({}, {}) is not 1-based", c.column, c.row)));
        }
        Ok(Self { cells })
    }

    /// Column `j` contributes rows `1..=b_j`.
    pub fn from_ferrers(board: &FerrersBoard) -> Self {
        let cells = board
            .columns()
            .iter()
            .enumerate()
            .flat_map(|(j, &b)| (1..=b).map(move |row| Cell::new(j as u32 + 1, row)))
            .collect();
        Self { cells }
    }

    /// The full `columns x rows` rectangle.
    pub fn rectangle(columns: u32, rows: u32) -> Self {
        let cells = (1..=columns).flat_map(|c| (1..=rows).map(move |r| Cell::new(c, r))).collect();
        Self { cells }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Occupied rows of each occupied column, ascending.
    pub fn column_rows(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut out: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for c in &self.cells {
            out.entry(c.column).or_default().push(c.row);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlacementKind {
    /// No two rooks in one column or one level.
    Rook,
    /// No two rooks in one column; rows and levels may repeat.
    File,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Placement {
    pub kind: PlacementKind,
    /// Sorted by column.
    pub rooks: Vec<Cell>,
}

impl Placement {
    pub fn new(kind: PlacementKind, mut rooks: Vec<Cell>) -> Self {
        rooks.sort();
        Self { kind, rooks }
    }

    pub fn len(&self) -> usize {
        self.rooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooks.is_empty()
    }

    pub fn column_indices(&self) -> Vec<u32> {
        self.rooks.iter().map(|c| c.column).collect()
    }

    /// Checks the column condition, and for rook kind the level condition at `m`.
    pub fn is_valid(&self, m: u32) -> bool {
        let columns: BTreeSet<u32> = self.rooks.iter().map(|c| c.column).collect();
        if columns.len() != self.rooks.len() {
            return false;
        }
        match self.kind {
            PlacementKind::File => true,
            PlacementKind::Rook => {
                let levels: BTreeSet<u32> = self.rooks.iter().map(|c| Level::of_row(c.row, m).index).collect();
                levels.len() == self.rooks.len()
            }
        }
    }
}

/// Lazy depth-first enumeration, column by column; every placement of exactly
/// `k` rooks is produced once, in column-major order.
pub struct Placements {
    columns: Vec<(u32, Vec<u32>)>,
    k: usize,
    kind: PlacementKind,
    m: u32,
    /// `stack[d]` is the option taken in column `d`: 0 skips, `r + 1` uses `rows[r]`.
    stack: Vec<usize>,
    level_used: Vec<bool>,
    placed: usize,
    started: bool,
    done: bool,
}

impl Placements {
    fn new(board: &CellSetBoard, k: usize, kind: PlacementKind, m: u32) -> Self {
        assert!(m > 0, "m must be positive");
        let columns: Vec<_> = board.column_rows().into_iter().collect();
        let top_row = board.cells().map(|c| c.row).max().unwrap_or(0);
        let levels = (top_row / m + 2) as usize;
        Self {
            done: k > columns.len(),
            columns,
            k,
            kind,
            m,
            stack: Vec::new(),
            level_used: vec![false; levels],
            placed: 0,
            started: false,
        }
    }

    fn level(&self, row: u32) -> usize {
        ((row - 1) / self.m) as usize
    }

    fn feasible(&self, depth: usize, option: usize) -> bool {
        if option == 0 {
            // skipping must leave enough columns for the remaining rooks
            return self.placed + (self.columns.len() - depth - 1) >= self.k;
        }
        if self.placed >= self.k {
            return false;
        }
        match self.kind {
            PlacementKind::File => true,
            PlacementKind::Rook => !self.level_used[self.level(self.columns[depth].1[option - 1])],
        }
    }

    fn apply(&mut self, depth: usize, option: usize, on: bool) {
        if option == 0 {
            return;
        }
        if on {
            self.placed += 1;
        } else {
            self.placed -= 1;
        }
        if self.kind == PlacementKind::Rook {
            let lvl = self.level(self.columns[depth].1[option - 1]);
            self.level_used[lvl] = on;
        }
    }

    /// Pushes the first feasible option `>= from` for the next column.
    fn push_from(&mut self, from: usize) -> bool {
        let depth = self.stack.len();
        let options = self.columns[depth].1.len() + 1;
        for option in from..options {
            if self.feasible(depth, option) {
                self.apply(depth, option, true);
                self.stack.push(option);
                return true;
            }
        }
        false
    }

    /// Fills the remaining columns; on a dead end advances earlier columns.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.columns.len() {
            if !self.push_from(0) && !self.advance() {
                return false;
            }
        }
        true
    }

    /// Moves the deepest column with a further feasible option to that option.
    fn advance(&mut self) -> bool {
        while let Some(option) = self.stack.pop() {
            let depth = self.stack.len();
            self.apply(depth, option, false);
            if self.push_from(option + 1) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> Placement {
        let rooks = self
            .stack
            .iter()
            .enumerate()
            .filter(|(_, &o)| o > 0)
            .map(|(d, &o)| Cell::new(self.columns[d].0, self.columns[d].1[o - 1]))
            .collect();
        Placement { kind: self.kind, rooks }
    }
}

impl Iterator for Placements {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        if self.done {
            return None;
        }
        let ok = if self.started { self.advance() && self.descend() } else { self.descend() };
        self.started = true;
        if ok && self.placed == self.k {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

pub fn enumerate_placements(board: &CellSetBoard, k: usize, kind: PlacementKind, m: u32) -> Placements {
    Placements::new(board, k, kind, m)
}

/// Number of m-level rook placements of `k` rooks.
pub fn r_km(board: &FerrersBoard, k: usize, m: u32) -> BigInt {
    BigInt::from(enumerate_placements(&CellSetBoard::from_ferrers(board), k, PlacementKind::Rook, m).count())
}

/// `(r_{0,m}, ..., r_{n,m})` with `n` the number of columns, counted column by column
/// over the set of occupied levels.
pub fn rook_vector(board: &FerrersBoard, m: u32) -> Vec<BigInt> {
    let levels = board.max_height().div_ceil(m.max(1)) as usize;
    if levels > 128 {
        return rook_vector_brute_force(board, m);
    }
    let mut states: HashMap<u128, Vec<BigInt>> = HashMap::from([(0, vec![BigInt::one()])]);
    for &height in board.columns() {
        let mut next: HashMap<u128, Vec<BigInt>> = HashMap::new();
        for (mask, counts) in states {
            merge(&mut next, mask, &counts, 0, &BigInt::one());
            for level in 0..height.div_ceil(m) {
                if mask & (1 << level) != 0 {
                    continue;
                }
                let rows = BigInt::from((height - level * m).min(m));
                merge(&mut next, mask | (1 << level), &counts, 1, &rows);
            }
        }
        states = next;
    }
    let mut out = vec![BigInt::zero(); board.len() + 1];
    for counts in states.values() {
        for (k, c) in counts.iter().enumerate() {
            out[k] += c;
        }
    }
    out
}

fn merge(into: &mut HashMap<u128, Vec<BigInt>>, mask: u128, counts: &[BigInt], shift: usize, factor: &BigInt) {
    let slot = into.entry(mask).or_default();
    if slot.len() < counts.len() + shift {
        slot.resize(counts.len() + shift, BigInt::zero());
    }
    for (k, c) in counts.iter().enumerate() {
        slot[k + shift] += c * factor;
    }
}

/// [`rook_vector`] by enumerating every placement.
pub fn rook_vector_brute_force(board: &FerrersBoard, m: u32) -> Vec<BigInt> {
    (0..=board.len()).map(|k| r_km(board, k, m)).collect()
}

/// Product over rows of `1↓_{y,m}`, `y` the number of rooks in the row.
pub fn m_weight(placement: &Placement, m: u32) -> BigInt {
    let mut per_row: BTreeMap<u32, u32> = BTreeMap::new();
    for c in &placement.rooks {
        *per_row.entry(c.row).or_default() += 1;
    }
    per_row.values().fold(BigInt::one(), |acc, &y| acc * int_falling(1, y, m))
}

/// Signed sum of m-weights over the `k`-rook file placements.
pub fn f_km(board: &FerrersBoard, k: usize, m: u32) -> BigInt {
    enumerate_placements(&CellSetBoard::from_ferrers(board), k, PlacementKind::File, m)
        .map(|f| m_weight(&f, m))
        .fold(BigInt::zero(), |acc, w| acc + w)
}

pub fn file_vector(board: &FerrersBoard, m: u32) -> Vec<BigInt> {
    (0..=board.len()).map(|k| f_km(board, k, m)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacementStats {
    pub alpha: u64,
    pub beta: u64,
    pub epsilon: u64,
    pub inv_m: u64,
    pub coinv_m: u64,
    pub column_indices: Vec<u32>,
}

fn in_m_coleg(cell: Cell, rooks: &[Cell], m: u32) -> bool {
    let level = Level::of_row(cell.row, m);
    rooks.iter().any(|r| cell.column > r.column && level.contains(r.row))
}

fn check_on_board(placement: &Placement, board: &CellSetBoard) -> Result<()> {
    match placement.rooks.iter().find(|c| !board.contains(**c)) {
        Some(c) => Err(Error::InvalidInput(format!("rook at ({}, {}) is not on the board", c.column, c.row))),
        None => Ok(()),
    }
}

/// Cells left after removing every rook's m-cohook: the rook, the cells below it
/// in its column, and the cells to its right within its level.
pub fn m_diagram(placement: &Placement, board: &CellSetBoard, m: u32) -> Result<BTreeSet<Cell>> {
    check_on_board(placement, board)?;
    let rooks = &placement.rooks;
    Ok(board
        .cells()
        .filter(|&cell| {
            let in_cohook = rooks.iter().any(|r| r.column == cell.column && cell.row <= r.row)
                || in_m_coleg(cell, rooks, m);
            !in_cohook
        })
        .collect())
}

/// Cells left after removing each rook, the cells above it, and its m-coleg.
fn m_codiagram(placement: &Placement, board: &CellSetBoard, m: u32) -> BTreeSet<Cell> {
    let rooks = &placement.rooks;
    board
        .cells()
        .filter(|&cell| {
            let removed = rooks.iter().any(|r| r.column == cell.column && cell.row >= r.row)
                || in_m_coleg(cell, rooks, m);
            !removed
        })
        .collect()
}

/// Classifies every cell outside the rooks and their m-colegs as above a rook,
/// below a rook, or in a rookless column.
pub fn placement_stats(placement: &Placement, board: &CellSetBoard, m: u32) -> Result<PlacementStats> {
    check_on_board(placement, board)?;
    let rooks = &placement.rooks;
    let rook_row: BTreeMap<u32, u32> = rooks.iter().map(|c| (c.column, c.row)).collect();
    let (mut alpha, mut beta, mut epsilon) = (0, 0, 0);
    for cell in board.cells() {
        if rook_row.get(&cell.column) == Some(&cell.row) || in_m_coleg(cell, rooks, m) {
            continue;
        }
        match rook_row.get(&cell.column) {
            None => epsilon += 1,
            Some(&r) if cell.row > r => alpha += 1,
            Some(_) => beta += 1,
        }
    }
    Ok(PlacementStats {
        alpha,
        beta,
        epsilon,
        inv_m: m_diagram(placement, board, m)?.len() as u64,
        coinv_m: m_codiagram(placement, board, m).len() as u64,
        column_indices: placement.column_indices(),
    })
}

/// `r_{k,m}[B] = sum_P p^{beta - (c_1 + ... + c_k)m} q^{alpha + epsilon}`, 1-based columns as stored.
pub fn pq_rook_poly(board: &FerrersBoard, k: usize, m: u32) -> LaurentPoly {
    let vars = VarSet::pq();
    let cells = CellSetBoard::from_ferrers(board);
    let mut out = LaurentPoly::zero(&vars);
    for placement in enumerate_placements(&cells, k, PlacementKind::Rook, m) {
        let stats = placement_stats(&placement, &cells, m).expect("enumerated placements lie on the board");
        let column_sum: i64 = stats.column_indices.iter().map(|&c| c as i64).sum();
        let p_exp = stats.beta as i64 - column_sum * m as i64;
        let q_exp = stats.alpha + stats.epsilon;
        out = &out + &LaurentPoly::monomial(&vars, vec![p_exp as i32, q_exp as i32], 1);
    }
    out
}

/// Rooks at `(i, n - a_i + 1)` for the one-line permutation `a_1 ... a_n` of `1..=n`.
pub fn permutation_to_placement(permutation: &[u32]) -> Result<Placement> {
    let n = permutation.len() as u32;
    let mut seen = vec![false; n as usize + 1];
    for &a in permutation {
        if a == 0 || a > n || std::mem::replace(&mut seen[a as usize], true) {
            return Err(Error::InvalidInput(format!("{permutation:?} is not a permutation of 1..={n}")));
        }
    }
    let rooks = permutation.iter().enumerate().map(|(i, &a)| Cell::new(i as u32 + 1, n - a + 1)).collect();
    Ok(Placement::new(PlacementKind::Rook, rooks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn running_example_counts() {
        let board = b("1,3,3");
        assert_eq!(rook_vector(&board, 1), ints(&[1, 7, 10, 2]));
        assert_eq!(rook_vector(&board, 2), ints(&[1, 7, 6, 0]));
        let cells = CellSetBoard::from_ferrers(&board);
        assert_eq!(enumerate_placements(&cells, 3, PlacementKind::Rook, 1).count(), 2);
        assert_eq!(enumerate_placements(&cells, 2, PlacementKind::Rook, 2).count(), 6);
        assert_eq!(r_km(&board, 4, 1), BigInt::zero());
    }

    #[test]
    fn counting_matches_enumeration() {
        for m in 1..=4 {
            for board in crate::partitions::boards_up_to(9) {
                assert_eq!(rook_vector(&board, m), rook_vector_brute_force(&board, m), "{board} m={m}");
            }
        }
        assert_eq!(rook_vector(&b("0,0,2"), 2), ints(&[1, 2, 0, 0]));
    }

    #[test]
    fn empty_placement_is_unique() {
        for board in [b("1,3,3"), FerrersBoard::empty(), b("0,0")] {
            let cells = CellSetBoard::from_ferrers(&board);
            let all: Vec<_> = enumerate_placements(&cells, 0, PlacementKind::Rook, 2).collect();
            assert_eq!(all.len(), 1);
            assert!(all[0].is_empty());
        }
    }

    #[test]
    fn enumeration_is_structurally_sound() {
        let cells = CellSetBoard::from_ferrers(&b("1,2,3,3,4"));
        for kind in [PlacementKind::Rook, PlacementKind::File] {
            for k in 0..=5 {
                let all: Vec<_> = enumerate_placements(&cells, k, kind, 2).collect();
                let unique: BTreeSet<_> = all.iter().map(|p| p.rooks.clone()).collect();
                assert_eq!(unique.len(), all.len());
                assert!(all.iter().all(|p| p.len() == k && p.is_valid(2)));
                assert!(all.iter().all(|p| p.rooks.iter().all(|c| cells.contains(*c))));
            }
        }
    }

    #[test]
    fn file_counts_are_elementary_symmetric() {
        // e_k(2,2,3,3,3,3)
        let board = b("2,2,3,3,3,3");
        let cells = CellSetBoard::from_ferrers(&board);
        let counts: Vec<usize> =
            (0..=6).map(|k| enumerate_placements(&cells, k, PlacementKind::File, 1).count()).collect();
        assert_eq!(counts, vec![1, 16, 106, 372, 729, 756, 324]);
    }

    #[test]
    fn weight_of_file_placement() {
        // three rooks in row 1, two in row 3, on (2,2,3,3,3,3)
        let f = Placement::new(
            PlacementKind::File,
            vec![Cell::new(1, 1), Cell::new(2, 1), Cell::new(4, 1), Cell::new(3, 3), Cell::new(6, 3)],
        );
        assert_eq!(m_weight(&f, 3), BigInt::from(-20));
        let rook = Placement::new(PlacementKind::Rook, vec![Cell::new(1, 1), Cell::new(3, 3)]);
        assert_eq!(m_weight(&rook, 3), BigInt::one());
        let pair = Placement::new(PlacementKind::File, vec![Cell::new(1, 2), Cell::new(2, 2)]);
        assert_eq!(m_weight(&pair, 1), BigInt::zero());
    }

    #[test]
    fn f_small_identities() {
        let board = b("1,3,3");
        for m in 1..=3 {
            assert_eq!(f_km(&board, 0, m), BigInt::one());
            assert_eq!(f_km(&board, 1, m), BigInt::from(7));
        }
        assert_eq!(file_vector(&board, 1), rook_vector(&board, 1));
    }

    #[test]
    fn cohook_statistics() {
        let board = b("1,1,2,3,5,7");
        let cells = CellSetBoard::from_ferrers(&board);
        let p = Placement::new(PlacementKind::Rook, vec![Cell::new(4, 2), Cell::new(5, 4)]);
        let s = placement_stats(&p, &cells, 3).unwrap();
        assert_eq!((s.alpha, s.beta, s.epsilon), (2, 1, 5));
        assert_eq!(s.inv_m, 7);
        assert_eq!(s.coinv_m, 6);
        // beta - (4 + 5) * 3 = -26 on p, alpha + epsilon = 7 on q
        assert_eq!(s.beta as i64 - (4 + 5) * 3, -26);
    }

    #[test]
    fn empty_placement_stats() {
        let board = b("2,3,5");
        let cells = CellSetBoard::from_ferrers(&board);
        let s = placement_stats(&Placement::new(PlacementKind::Rook, vec![]), &cells, 2).unwrap();
        assert_eq!((s.alpha, s.beta, s.epsilon), (0, 0, 10));
    }

    #[test]
    fn off_board_placement_is_rejected() {
        let cells = CellSetBoard::from_ferrers(&b("1,2"));
        let p = Placement::new(PlacementKind::Rook, vec![Cell::new(1, 2)]);
        assert!(matches!(placement_stats(&p, &cells, 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn permutation_placements() {
        let p = permutation_to_placement(&[4, 1, 3, 2]).unwrap();
        assert_eq!(p.rooks, vec![Cell::new(1, 1), Cell::new(2, 4), Cell::new(3, 2), Cell::new(4, 3)]);
        let square = CellSetBoard::rectangle(4, 4);
        let s = placement_stats(&p, &square, 1).unwrap();
        assert_eq!(s.inv_m, 4);
        assert_eq!(s.alpha + s.epsilon, 4);
        let id = permutation_to_placement(&[1, 2, 3]).unwrap();
        assert_eq!(id.rooks, vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        assert!(permutation_to_placement(&[1, 1, 2]).is_err());
    }

    #[test]
    fn pq_rook_worked_example() {
        let board = b("1,1,1");
        assert_eq!(pq_rook_poly(&board, 1, 2).to_string(), "p^-6*q^2 + p^-4*q + p^-2");
        assert_eq!(pq_rook_poly(&board, 0, 2).to_string(), "q^3");
        assert!(pq_rook_poly(&board, 2, 2).is_zero());
    }
}
