//! Ferrers boards and the level structure that every other module works over.
//!
//! A board is stored exactly as given, including any leading zero columns.
//! Column indices are 1-based when reporting zones and 0-based wherever a
//! leading `b_0 = 0` column is assumed (weight root vectors, triangular
//! boards). Each function says which convention it uses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest multiple of `m` that is at most `n`, with floor semantics for negative `n`.
pub fn m_floor(n: i64, m: i64) -> Result<i64> {
    if m <= 0 {
        return Err(Error::InvalidParameter(format!("m must be positive, got {m}")));
    }
    Ok(n.div_euclid(m) * m)
}

/// Infallible form used internally once `m` is known to be positive.
pub(crate) fn floor_m(n: i64, m: u32) -> i64 {
    assert!(m > 0, "m must be positive");
    n.div_euclid(m as i64) * m as i64
}

pub(crate) fn rem_m(n: i64, m: u32) -> i64 {
    n - floor_m(n, m)
}

/// A weakly increasing sequence of column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FerrersBoard {
    columns: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(columns: Vec<u32>) -> Result<Self> {
        if let Some(w) = columns.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::InvalidBoard(format!(
                "column heights must be weakly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Self { columns })
    }

    pub fn empty() -> Self {
        Self { columns: Vec::new() }
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// Number of columns, counting leading zeros.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Total number of cells `|B|`.
    pub fn cell_count(&self) -> u64 {
        self.columns.iter().map(|&b| b as u64).sum()
    }

    /// 1-based column height; `None` outside the board.
    pub fn height(&self, column: usize) -> Option<u32> {
        column.checked_sub(1).and_then(|j| self.columns.get(j).copied())
    }

    pub fn max_height(&self) -> u32 {
        self.columns.last().copied().unwrap_or(0)
    }

    /// Prepends zero columns until the board has `n` columns.
    pub fn pad(&self, n: usize) -> Self {
        if self.columns.len() >= n {
            return self.clone();
        }
        let mut columns = vec![0; n - self.columns.len()];
        columns.extend_from_slice(&self.columns);
        Self { columns }
    }

    /// Removes leading zero columns.
    pub fn trim(&self) -> Self {
        let first = self.columns.iter().position(|&b| b > 0).unwrap_or(self.columns.len());
        Self { columns: self.columns[first..].to_vec() }
    }

    /// Pads with one leading zero column unless the board already starts with one.
    pub(crate) fn with_leading_zero(&self) -> Self {
        match self.columns.first() {
            Some(0) => self.clone(),
            _ => self.pad(self.columns.len() + 1),
        }
    }

    /// Trims and then pads to `n` columns, failing if the nonzero part is wider than `n`.
    pub fn repad(&self, n: usize) -> Result<Self> {
        let trimmed = self.trim();
        if trimmed.len() > n {
            return Err(Error::InvalidParameter(format!(
                "board {self} has {} nonzero columns, cannot pad to {n}",
                trimmed.len()
            )));
        }
        Ok(trimmed.pad(n))
    }
}

impl TryFrom<Vec<u32>> for FerrersBoard {
    type Error = Error;
    fn try_from(columns: Vec<u32>) -> Result<Self> {
        Self::new(columns)
    }
}

impl From<FerrersBoard> for Vec<u32> {
    fn from(board: FerrersBoard) -> Self {
        board.columns
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in &self.columns {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"1,3,3"`. The empty string is the empty board.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let columns = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidBoard(format!("bad column height {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(columns)
    }
}

/// The `index`-th level: rows `(index-1)m + 1 ..= index*m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    pub index: u32,
    pub m: u32,
}

impl Level {
    pub fn new(index: u32, m: u32) -> Self {
        assert!(index >= 1 && m >= 1, "levels are 1-based and m must be positive");
        Self { index, m }
    }

    /// Level containing the 1-based `row`.
    pub fn of_row(row: u32, m: u32) -> Self {
        assert!(row >= 1, "rows are 1-based");
        Self::new((row - 1) / m + 1, m)
    }

    pub fn first_row(&self) -> u32 {
        (self.index - 1) * self.m + 1
    }

    pub fn last_row(&self) -> u32 {
        self.index * self.m
    }

    pub fn contains(&self, row: u32) -> bool {
        (self.first_row()..=self.last_row()).contains(&row)
    }
}

/// A maximal run of columns sharing one m-floor value. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Zone {
    pub start: usize,
    pub end: usize,
    pub floor_value: i64,
    pub remainder: i64,
    /// `partial_remainders[0]` belongs to index `start - 1` and is always 0;
    /// the last entry equals `remainder`.
    pub partial_remainders: Vec<i64>,
}

impl Zone {
    pub fn columns(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn is_last(&self, column: usize) -> bool {
        column == self.end
    }

    /// `rho_{i,m}(z)` for `i` in `start-1 ..= end`.
    pub fn partial_remainder(&self, i: usize) -> i64 {
        self.partial_remainders[i + 1 - self.start]
    }
}

pub fn zones(board: &FerrersBoard, m: u32) -> Vec<Zone> {
    let mut out: Vec<Zone> = Vec::new();
    for (j, &b) in board.columns().iter().enumerate() {
        let column = j + 1;
        let floor = floor_m(b as i64, m);
        let rem = rem_m(b as i64, m);
        match out.last_mut() {
            Some(zone) if zone.floor_value == floor => {
                zone.end = column;
                zone.remainder += rem;
                zone.partial_remainders.push(zone.remainder);
            }
            _ => out.push(Zone {
                start: column,
                end: column,
                floor_value: floor,
                remainder: rem,
                partial_remainders: vec![0, rem],
            }),
        }
    }
    out
}

/// Whether `floor(b_i) != b_i` forces `floor(b_{i+1}) > floor(b_i)` for every `i < n`.
pub fn is_singleton(board: &FerrersBoard, m: u32) -> bool {
    board.columns().windows(2).all(|w| {
        let (b, next) = (w[0] as i64, w[1] as i64);
        floor_m(b, m) == b || floor_m(next, m) > floor_m(b, m)
    })
}

pub fn is_m_increasing(board: &FerrersBoard, m: u32) -> bool {
    let cols = board.columns();
    match cols.first() {
        None => true,
        Some(&first) => first > 0 && cols.windows(2).all(|w| w[1] >= w[0] + m),
    }
}

/// Checks `b_{j+1} <= b_j + m` for `j >= 0`, padding a `b_0 = 0` column if the board lacks one.
pub fn is_m_restricted(board: &FerrersBoard, m: u32) -> bool {
    board.with_leading_zero().columns().windows(2).all(|w| w[1] <= w[0] + m)
}

/// Cells of the board in each level, `l_i = |B ∩ level i|`, for `i = 1, 2, ...`.
pub fn level_counts(board: &FerrersBoard, m: u32) -> Vec<u32> {
    assert!(m > 0, "m must be positive");
    let top = board.max_height().div_ceil(m);
    (1..=top)
        .map(|i| {
            let floor = (i - 1) * m;
            board.columns().iter().map(|&b| b.saturating_sub(floor).min(m)).sum()
        })
        .collect()
}

/// The l-operator: `(l_t, ..., l_1)` where `t` is the highest level meeting the board.
pub fn l_operator(board: &FerrersBoard, m: u32) -> FerrersBoard {
    let mut counts = level_counts(board, m);
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts.reverse();
    FerrersBoard::new(counts).expect("level counts of a Ferrers board are weakly decreasing")
}

/// `(0, m, 2m, ..., (n-1)m)`.
pub fn triangular_board(n: usize, m: u32) -> FerrersBoard {
    FerrersBoard { columns: (0..n as u32).map(|j| j * m).collect() }
}

/// Whether the board, zero-padded to `n` columns (0-indexed), satisfies `b_j <= jm`.
pub fn fits_in(board: &FerrersBoard, n: usize, m: u32) -> bool {
    match board.repad(n) {
        Ok(padded) => padded.columns().iter().enumerate().all(|(j, &b)| b as u64 <= j as u64 * m as u64),
        Err(_) => false,
    }
}

/// Smallest `N` such that the board fits in the triangular board with `N` columns.
///
/// Pads to `|B| + 1` columns, takes the minimum `a` of the weight root vector
/// over the columns after the initial zero run, and returns `|B| + 1 - floor(a/m)`.
pub fn minimal_bounding_n(board: &FerrersBoard, m: u32) -> usize {
    let size = board.cell_count() as usize;
    let padded = board.trim().pad(size + 1);
    let zero_run = padded.columns().iter().take_while(|&&b| b == 0).count();
    let min_final = padded.columns()[zero_run..]
        .iter()
        .enumerate()
        .map(|(offset, &b)| (zero_run + offset) as i64 * m as i64 - b as i64)
        .min();
    match min_final {
        None => 1,
        Some(a) => size + 1 - a.div_euclid(m as i64) as usize,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    #[test]
    fn m_floor_examples() {
        assert_eq!(m_floor(17, 3), Ok(15));
        assert_eq!(m_floor(6, 3), Ok(6));
        assert_eq!(m_floor(-1, 2), Ok(-2));
        assert!(matches!(m_floor(4, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(m_floor(4, -2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn m_floor_matches_scan_of_multiples() {
        for m in 1..=5i64 {
            for n in -20..=20i64 {
                let scanned = (-30..=30).map(|k| k * m).filter(|&v| v <= n).max().unwrap();
                assert_eq!(m_floor(n, m).unwrap(), scanned);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(b("1,3,3").columns(), &[1, 3, 3]);
        assert_eq!(b("(1, 3,3)").to_string(), "1,3,3");
        assert!(b("").is_empty());
        assert!(matches!("3,1".parse::<FerrersBoard>(), Err(Error::InvalidBoard(_))));
        assert!(matches!("1,x".parse::<FerrersBoard>(), Err(Error::InvalidBoard(_))));
    }

    #[test]
    fn zones_of_running_example() {
        let z = zones(&b("1,1,2,3,5,7"), 3);
        let summary: Vec<_> = z.iter().map(|z| (z.start, z.end, z.remainder)).collect();
        assert_eq!(summary, vec![(1, 3, 4), (4, 5, 2), (6, 6, 1)]);
        assert_eq!(z[0].partial_remainders, vec![0, 1, 2, 4]);
        assert_eq!(z[1].partial_remainder(3), 0);
        assert_eq!(z[1].partial_remainder(5), 2);
    }

    #[test]
    fn zones_small_cases() {
        let z = zones(&b("3,6"), 3);
        assert_eq!(z.iter().map(|z| (z.start, z.end, z.remainder)).collect::<Vec<_>>(), vec![(1, 1, 0), (2, 2, 0)]);
        let z = zones(&b("1,3,3"), 2);
        assert_eq!(z.iter().map(|z| (z.start, z.end, z.remainder)).collect::<Vec<_>>(), vec![(1, 1, 1), (2, 3, 2)]);
        assert!(zones(&FerrersBoard::empty(), 2).is_empty());
    }

    #[test]
    fn singleton_examples() {
        assert!(is_singleton(&b("1,2,2,3"), 2));
        assert!(!is_singleton(&b("1,1,1"), 2));
        assert!(is_singleton(&b("1,1,1,4,4"), 1));
        assert!(is_singleton(&FerrersBoard::empty(), 3));
    }

    #[test]
    fn increasing_and_restricted() {
        assert!(is_m_increasing(&b("1,7"), 2));
        assert!(is_m_increasing(&FerrersBoard::empty(), 5));
        assert!(!is_m_increasing(&b("1,3,3"), 2));
        assert!(!is_m_increasing(&b("0,1,7"), 2));
        assert!(is_m_restricted(&b("0,0,0,0,1,2,3"), 2));
        assert!(is_m_restricted(&b("1,2,3"), 2));
        assert!(!is_m_restricted(&b("0,1,5"), 2));
        assert!(!is_m_restricted(&b("3"), 2));
        for m in 1..4 {
            assert!(is_m_restricted(&triangular_board(6, m), m));
        }
    }

    #[test]
    fn l_operator_examples() {
        assert_eq!(l_operator(&b("1,3,3"), 2), b("2,5"));
        assert_eq!(l_operator(&b("2,2"), 2), b("4"));
        assert_eq!(l_operator(&b("3,3"), 3), b("6"));
        assert_eq!(l_operator(&FerrersBoard::empty(), 3), FerrersBoard::empty());
        assert_eq!(l_operator(&b("0,0"), 3), FerrersBoard::empty());
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular_board(4, 2), b("0,2,4,6"));
        assert_eq!(triangular_board(1, 7), b("0"));
        assert_eq!(triangular_board(3, 1), b("0,1,2"));
    }

    #[test]
    fn bounding_examples() {
        assert!(fits_in(&b("0,0,3,4"), 4, 2));
        assert!(!fits_in(&b("0,0,3,4"), 3, 2));
        assert_eq!(minimal_bounding_n(&b("0,0,3,4"), 2), 4);
        assert_eq!(minimal_bounding_n(&FerrersBoard::empty(), 1), 1);
        assert!(!fits_in(&b("1"), 1, 3));
    }

    #[test]
    fn pad_and_trim() {
        let board = b("2,3");
        assert_eq!(board.pad(4), b("0,0,2,3"));
        assert_eq!(board.pad(1), board);
        assert_eq!(b("0,0,2,3").trim(), board);
        assert_eq!(board.trim().pad(5).trim(), board);
        assert!(board.repad(1).is_err());
    }
}
