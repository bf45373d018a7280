//! m-level and m-weight root vectors, canonical class representatives, and
//! class-size formulas together with the brute-force class enumeration they
//! are checked against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::board::{floor_m, is_singleton, l_operator, zones, FerrersBoard};
use crate::error::{Error, Result};
use crate::partitions::partitions_of;
use crate::placement::{file_vector, rook_vector};
use crate::polynomial::{binomial, multinomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    /// `a_j = (j-1)m - floor(b_j) - [j last in zone] rho(z)`, columns 1-based.
    Level,
    /// `a_j = jm - b_j`, entries 0-based with `b_0` the first padded column.
    Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootVector {
    pub entries: Vec<i64>,
    pub kind: RootKind,
    /// Number of columns (level) or entries (weight) the board was padded to.
    pub padding: usize,
}

impl RootVector {
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    pub fn profile(&self) -> Result<MultiplicityProfile> {
        MultiplicityProfile::of(&self.entries)
    }
}

/// `n_i` = number of copies of `i`, for `i = 0 ..= max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityProfile {
    pub counts: Vec<u64>,
}

impl MultiplicityProfile {
    pub fn of(entries: &[i64]) -> Result<Self> {
        if let Some(&a) = entries.iter().find(|&&a| a < 0) {
            return Err(Error::InvalidInput(format!("negative entry {a}; pad the board further")));
        }
        let max = entries.iter().copied().max().unwrap_or(-1);
        let mut counts = vec![0u64; (max + 1) as usize];
        for &a in entries {
            counts[a as usize] += 1;
        }
        Ok(Self { counts })
    }

    /// `n_i`, zero for indices outside the profile.
    pub fn get(&self, i: i64) -> u64 {
        if i < 0 {
            return 0;
        }
        self.counts.get(i as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    Ok(())
}

/// Level root vector of the board padded to `n` columns.
pub fn zeta(board: &FerrersBoard, m: u32, n: usize) -> Result<RootVector> {
    check_m(m)?;
    let padded = board.repad(n)?;
    let mi = m as i64;
    let entries = if is_singleton(&padded, m) {
        padded.columns().iter().enumerate().map(|(j, &b)| j as i64 * mi - b as i64).collect()
    } else {
        let mut out = Vec::with_capacity(n);
        for zone in zones(&padded, m) {
            for j in zone.columns() {
                let mut a = (j as i64 - 1) * mi - zone.floor_value;
                if zone.is_last(j) {
                    a -= zone.remainder;
                }
                out.push(a);
            }
        }
        out
    };
    Ok(RootVector { entries, kind: RootKind::Level, padding: n })
}

/// Weight root vector of the board padded to `n` entries `b_0, ..., b_{n-1}`.
pub fn omega(board: &FerrersBoard, m: u32, n: usize) -> Result<RootVector> {
    check_m(m)?;
    let padded = board.repad(n)?;
    let entries = padded
        .columns()
        .iter()
        .enumerate()
        .map(|(j, &b)| j as i64 * m as i64 - b as i64)
        .collect();
    Ok(RootVector { entries, kind: RootKind::Weight, padding: n })
}

fn common_width(a: &FerrersBoard, b: &FerrersBoard) -> usize {
    a.trim().len().max(b.trim().len())
}

/// Level root vectors at a common padding are rearrangements of each other.
pub fn equivalent_level(a: &FerrersBoard, b: &FerrersBoard, m: u32) -> Result<bool> {
    let n = common_width(a, b);
    Ok(zeta(a, m, n)?.sorted() == zeta(b, m, n)?.sorted())
}

/// Weight root vectors at a common padding are rearrangements of each other.
pub fn equivalent_weight(a: &FerrersBoard, b: &FerrersBoard, m: u32) -> Result<bool> {
    let n = common_width(a, b) + 1;
    Ok(omega(a, m, n)?.sorted() == omega(b, m, n)?.sorted())
}

/// Whether `zeta` is the level root vector of a singleton board: `a_1 = 0`,
/// `a_{j+1} <= a_j + m`, and consecutive non-multiples of `m` have weakly decreasing floors.
pub fn validate_zeta_singleton(zeta: &[i64], m: u32) -> bool {
    let mi = m as i64;
    let multiple = |a: i64| a.rem_euclid(mi) == 0;
    match zeta.first() {
        None => true,
        Some(&first) => {
            first == 0
                && zeta.windows(2).all(|w| {
                    let (a, next) = (w[0], w[1]);
                    next <= a + mi && (multiple(a) || multiple(next) || floor_m(next, m) <= floor_m(a, m))
                })
        }
    }
}

/// Whether `omega` is the weight root vector of a board: `a_0 = 0` and `a_{j+1} <= a_j + m`.
pub fn validate_omega(omega: &[i64], m: u32) -> bool {
    match omega.first() {
        None => true,
        Some(&first) => first == 0 && omega.windows(2).all(|w| w[1] <= w[0] + m as i64),
    }
}

fn board_from_heights(heights: Vec<i64>) -> Result<FerrersBoard> {
    let columns = heights
        .into_iter()
        .map(|h| u32::try_from(h).map_err(|_| Error::InvalidInput(format!("negative column height {h}"))))
        .collect::<Result<Vec<_>>>()?;
    FerrersBoard::new(columns)
}

/// `b_j = (j-1)m - a_j`, 1-based.
pub fn board_from_zeta(zeta: &[i64], m: u32) -> Result<FerrersBoard> {
    check_m(m)?;
    board_from_heights(zeta.iter().enumerate().map(|(j, &a)| j as i64 * m as i64 - a).collect())
}

/// `b_j = jm - a_j`, 0-based.
pub fn board_from_omega(omega: &[i64], m: u32) -> Result<FerrersBoard> {
    board_from_zeta(omega, m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncreasingConstruction {
    /// The singleton board the construction starts from.
    pub singleton: FerrersBoard,
    pub padded_columns: usize,
    pub zeta: Vec<i64>,
    pub largest_multiple: i64,
    pub rearranged: Vec<i64>,
    pub representative: FerrersBoard,
}

/// The unique m-increasing board in the level class, with the intermediate vectors.
pub fn m_increasing_construction(board: &FerrersBoard, m: u32) -> Result<IncreasingConstruction> {
    check_m(m)?;
    let singleton = if is_singleton(board, m) { board.trim() } else { l_operator(board, m) };
    let n = singleton.cell_count() as usize + 1;
    let zeta = zeta(&singleton, m, n)?.entries;
    let mi = m as i64;
    let largest_multiple = zeta.iter().copied().filter(|a| a.rem_euclid(mi) == 0).max().unwrap_or(0);
    let mut rest = zeta.clone();
    let mut rearranged = Vec::with_capacity(n);
    for c in (0..=largest_multiple).step_by(m as usize) {
        let pos = rest
            .iter()
            .position(|&a| a == c)
            .ok_or_else(|| Error::InvalidInput(format!("multiple {c} missing from the level root vector")))?;
        rest.swap_remove(pos);
        rearranged.push(c);
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    rearranged.extend(rest);
    let representative = board_from_zeta(&rearranged, m)?.trim();
    Ok(IncreasingConstruction { singleton, padded_columns: n, zeta, largest_multiple, rearranged, representative })
}

pub fn m_increasing_representative(board: &FerrersBoard, m: u32) -> Result<FerrersBoard> {
    Ok(m_increasing_construction(board, m)?.representative)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedConstruction {
    pub padded_entries: usize,
    pub omega: Vec<i64>,
    pub rearranged: Vec<i64>,
    pub representative: FerrersBoard,
}

/// The unique m-restricted board in the weight class, with the intermediate vectors.
pub fn m_restricted_construction(board: &FerrersBoard, m: u32) -> Result<RestrictedConstruction> {
    let n = board.cell_count() as usize + 1;
    let omega = omega(board, m, n)?.entries;
    let mut rearranged = omega.clone();
    rearranged.sort_unstable();
    let representative = board_from_omega(&rearranged, m)?.trim();
    Ok(RestrictedConstruction { padded_entries: n, omega, rearranged, representative })
}

pub fn m_restricted_representative(board: &FerrersBoard, m: u32) -> Result<FerrersBoard> {
    Ok(m_restricted_construction(board, m)?.representative)
}

/// The unique m-restricted singleton board in the level class.
pub fn m_restricted_singleton_representative(board: &FerrersBoard, m: u32) -> Result<FerrersBoard> {
    Ok(l_operator(&m_increasing_representative(board, m)?, m))
}

/// Number of singleton boards in the level class of a singleton board.
pub fn count_singleton_class(board: &FerrersBoard, m: u32) -> Result<BigInt> {
    check_m(m)?;
    if !is_singleton(board, m) {
        return Err(Error::InvalidInput(format!("{board} is not a singleton board for m = {m}")));
    }
    let n = board.cell_count() as usize + 1;
    let profile = zeta(board, m, n)?.profile()?;
    let mi = m as i64;
    let mut total = BigInt::one();
    let mut base = 0i64;
    while base < profile.counts.len() as i64 {
        let head = profile.get(base);
        let tail: Vec<u64> = (1..=mi).map(|d| profile.get(base + d)).collect();
        let tail_sum: u64 = tail.iter().sum();
        if head == 0 {
            if tail_sum > 0 {
                return Ok(BigInt::zero());
            }
        } else {
            let mut parts = vec![head - 1];
            parts.extend(&tail);
            total *= multinomial(head - 1 + tail_sum, &parts)?;
        }
        base += mi;
    }
    Ok(total)
}

/// Window sums `n_{i-1} + ... + n_{i-m}` used by the weight-class formulas.
pub(crate) fn lower_window(profile: &MultiplicityProfile, i: i64, m: u32) -> u64 {
    (1..=m as i64).map(|d| profile.get(i - d)).sum()
}

/// Number of boards in the weight class.
pub fn count_weight_class(board: &FerrersBoard, m: u32) -> Result<BigInt> {
    let n = board.cell_count() as usize + 1;
    let profile = omega(board, m, n)?.profile()?;
    Ok((1..profile.counts.len() as i64).fold(BigInt::one(), |acc, i| {
        let ni = profile.get(i);
        acc * binomial((ni + lower_window(&profile, i, m)) as i64 - 1, ni)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Level,
    Weight,
}

/// Brute-force `r_{k,m}` (level) or `f_{k,m}` (weight) with trailing zeros removed.
pub fn relation_vector(board: &FerrersBoard, m: u32, relation: Relation) -> Vec<BigInt> {
    let mut v = match relation {
        Relation::Level => rook_vector(board, m),
        Relation::Weight => file_vector(board, m),
    };
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// All trimmed boards with the same brute-force vector as `board`, sorted.
pub fn enumerate_class(board: &FerrersBoard, m: u32, relation: Relation) -> Vec<FerrersBoard> {
    let target = relation_vector(board, m, relation);
    partitions_of(board.cell_count() as u32)
        .into_iter()
        .filter(|b| relation_vector(b, m, relation) == target)
        .collect()
}

/// Every board of the given size grouped into classes; each class sorted, classes
/// ordered by their smallest member.
pub fn class_partition(size: u32, m: u32, relation: Relation) -> Vec<Vec<FerrersBoard>> {
    let mut groups: BTreeMap<Vec<BigInt>, Vec<FerrersBoard>> = BTreeMap::new();
    for b in partitions_of(size) {
        groups.entry(relation_vector(&b, m, relation)).or_default().push(b);
    }
    let mut classes: Vec<Vec<FerrersBoard>> = groups.into_values().collect();
    classes.sort();
    classes
}
