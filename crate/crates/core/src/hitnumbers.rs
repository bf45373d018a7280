//! Classical, m-level and p,q hit numbers of a Ferrers board placed in the
//! right-hand columns of the `n x n` (or `mn x n`) board, with brute-force oracles.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::board::FerrersBoard;
use crate::error::{Error, Result};
use crate::placement::{enumerate_placements, pq_rook_poly, rook_vector, CellSetBoard, PlacementKind};
use crate::polynomial::{factorial, int_falling, pq_falling, IntPolynomial, LaurentPoly, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HitFlavor {
    Classical,
    MLevel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HitVector {
    pub flavor: HitFlavor,
    pub n: usize,
    pub m: u32,
    /// `h_0, ..., h_n`.
    #[serde(serialize_with = "crate::decimal::vec")]
    pub entries: Vec<BigInt>,
}

impl HitVector {
    pub fn total(&self) -> BigInt {
        self.entries.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PqHitVector {
    pub n: usize,
    pub m: u32,
    /// Laurent polynomials over `{p, q}`, `h_0, ..., h_n`.
    pub entries: Vec<LaurentPoly>,
}

/// The board padded on the left to `n` columns, checked to fit under height `rows`.
fn place(board: &FerrersBoard, n: usize, rows: u64) -> Result<FerrersBoard> {
    let padded = board
        .repad(n)
        .map_err(|_| Error::InvalidBoard(format!("{board} has more than {n} nonzero columns")))?;
    if padded.max_height() as u64 > rows {
        return Err(Error::InvalidBoard(format!("{board} is taller than {rows} rows")));
    }
    Ok(padded)
}

fn coefficients(poly: &IntPolynomial, n: usize) -> Vec<BigInt> {
    (0..=n as u32).map(|k| poly.coeff(k)).collect()
}

/// `sum_k r_k(B) (n-k)! (x-1)^k` read in the monomial basis.
pub fn hit_numbers(board: &FerrersBoard, n: usize) -> Result<HitVector> {
    let placed = place(board, n, n as u64)?;
    let r = rook_vector(&placed, 1);
    let x_minus_one = IntPolynomial::linear(-1);
    let poly = r.iter().enumerate().fold(IntPolynomial::zero(), |acc, (k, rk)| {
        let c = IntPolynomial::constant(rk * factorial((n - k) as u64));
        &acc + &(&c * &x_minus_one.pow(k as u32))
    });
    Ok(HitVector { flavor: HitFlavor::Classical, n, m: 1, entries: coefficients(&poly, n) })
}

/// `sum_k r_{k,m}(B) (m(n-k))↓_{n-k,m} (x-1)^k` read in the monomial basis.
pub fn m_level_hit_numbers(board: &FerrersBoard, n: usize, m: u32) -> Result<HitVector> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let placed = place(board, n, n as u64 * m as u64)?;
    let r = rook_vector(&placed, m);
    let x_minus_one = IntPolynomial::linear(-1);
    let poly = r.iter().enumerate().fold(IntPolynomial::zero(), |acc, (k, rk)| {
        let rest = (n - k) as u32;
        let c = IntPolynomial::constant(rk * int_falling(m as i64 * rest as i64, rest, m));
        &acc + &(&c * &x_minus_one.pow(k as u32))
    });
    Ok(HitVector { flavor: HitFlavor::MLevel, n, m, entries: coefficients(&poly, n) })
}

/// Counts permutations of `1..=n` by the number of their rooks inside the board.
pub fn hit_numbers_brute_force(board: &FerrersBoard, n: usize) -> Result<HitVector> {
    let placed = place(board, n, n as u64)?;
    let mut entries = vec![BigInt::zero(); n + 1];
    for perm in (1..=n as u32).permutations(n) {
        let hits = perm.iter().enumerate().filter(|(j, &row)| row <= placed.columns()[*j]).count();
        entries[hits] += 1;
    }
    Ok(HitVector { flavor: HitFlavor::Classical, n, m: 1, entries })
}

/// Counts m-level placements of `n` rooks on the `mn x n` board by rooks inside the board.
pub fn m_level_hit_numbers_brute_force(board: &FerrersBoard, n: usize, m: u32) -> Result<HitVector> {
    let placed = place(board, n, n as u64 * m as u64)?;
    let cells = CellSetBoard::from_ferrers(&placed);
    let full = CellSetBoard::rectangle(n as u32, n as u32 * m);
    let mut entries = vec![BigInt::zero(); n + 1];
    for placement in enumerate_placements(&full, n, PlacementKind::Rook, m) {
        let hits = placement.rooks.iter().filter(|c| cells.contains(**c)).count();
        entries[hits] += 1;
    }
    Ok(HitVector { flavor: HitFlavor::MLevel, n, m, entries })
}

/// Expands `sum_k r_{k,m}[B] [m(n-k)]↓_{n-k,m} p^{m(C(k+1,2) + k(n-k))} prod_{l=n-k+1}^{n} (x - q^{ml} p^{m(n-l)})`
/// over `{p, q, x}` and reads off the coefficients of `x`.
pub fn pq_hit_numbers(board: &FerrersBoard, n: usize, m: u32) -> Result<PqHitVector> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let placed = place(board, n, n as u64 * m as u64)?;
    let vars = VarSet::pqx();
    let mi = m as i64;
    let x = LaurentPoly::var(&vars, "x");
    let mut total = LaurentPoly::zero(&vars);
    for k in 0..=n {
        let r = pq_rook_poly(&placed, k, m);
        if r.is_zero() {
            continue;
        }
        let rest = (n - k) as i64;
        let falling = pq_falling(mi * rest, rest as u32, m).embed(&vars)?;
        let ki = k as i64;
        let p_exp = mi * (ki * (ki + 1) / 2 + ki * rest);
        let lead = LaurentPoly::monomial(&vars, vec![p_exp as i32, 0, 0], 1);
        let linear = ((n - k + 1)..=n).fold(LaurentPoly::one(&vars), |acc, l| {
            let l = l as i64;
            let shift = LaurentPoly::monomial(&vars, vec![(mi * (n as i64 - l)) as i32, (mi * l) as i32, 0], 1);
            &acc * &(&x - &shift)
        });
        total = &total + &(&(&(&r.embed(&vars)? * &falling) * &lead) * &linear);
    }
    let by_power = total.coefficients_in("x")?;
    let pq = VarSet::pq();
    let entries = (0..=n as i32)
        .map(|k| by_power.get(&k).cloned().unwrap_or_else(|| LaurentPoly::zero(&pq)))
        .collect();
    Ok(PqHitVector { n, m, entries })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub board: FerrersBoard,
    pub n: usize,
    pub m: u32,
    pub negative_found: bool,
    /// Hit index and monomial of the first negative term found.
    pub witness_k: Option<usize>,
    pub witness_monomial: Option<String>,
}

fn scan_one(board: &FerrersBoard, n: usize, m: u32, specialize_p1: bool) -> Result<ScanRecord> {
    let hits = pq_hit_numbers(board, n, m)?;
    for (k, h) in hits.entries.iter().enumerate() {
        let h = if specialize_p1 { h.specialize_to_one("p")? } else { h.clone() };
        if let Some((e, c)) = h.first_negative_term() {
            let mono = LaurentPoly::format_monomial(h.vars(), e);
            return Ok(ScanRecord {
                board: board.clone(),
                n,
                m,
                negative_found: true,
                witness_k: Some(k),
                witness_monomial: Some(format!("{c}*{mono}")),
            });
        }
    }
    Ok(ScanRecord { board: board.clone(), n, m, negative_found: false, witness_k: None, witness_monomial: None })
}

/// p,q hit numbers of every board, flagging any negative coefficient
/// (optionally after setting `p = 1`). Records come back sorted by board.
pub fn positivity_scan(boards: &[FerrersBoard], n: usize, m: u32, specialize_p1: bool) -> Result<Vec<ScanRecord>> {
    let mut records = boards
        .par_iter()
        .map(|b| scan_one(b, n, m, specialize_p1))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.board.cmp(&b.board));
    Ok(records)
}

/// `n!` for the classical flavor, `m^n n!` otherwise.
pub fn expected_total(flavor: HitFlavor, n: usize, m: u32) -> BigInt {
    match flavor {
        HitFlavor::Classical => factorial(n as u64),
        HitFlavor::MLevel => BigInt::from(m).pow(n as u32) * factorial(n as u64),
    }
}

/// Product `[a][b]...` of p,q-integers.
pub fn pq_integer_product(values: &[u32]) -> LaurentPoly {
    values.iter().fold(LaurentPoly::one(&VarSet::pq()), |acc, &v| &acc * &crate::polynomial::pq_integer(v))
}

/// Whether every entry is free of negative coefficients.
pub fn is_nonnegative(hits: &PqHitVector) -> bool {
    hits.entries.iter().all(|h| !h.has_negative_coefficient())
}

/// Entries at `p = q = 1`.
pub fn pq_at_ones(hits: &PqHitVector) -> Vec<BigInt> {
    hits.entries.iter().map(|h| h.eval_at_ones()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::boards_in_rectangle;

    fn b(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn classical_edge_cases() {
        assert_eq!(hit_numbers(&FerrersBoard::empty(), 4).unwrap().entries, ints(&[24, 0, 0, 0, 0]));
        assert_eq!(hit_numbers(&b("3,3,3"), 3).unwrap().entries, ints(&[0, 0, 0, 6]));
        let small = b("1,2");
        assert_eq!(hit_numbers(&small, 3).unwrap(), hit_numbers_brute_force(&small, 3).unwrap());
        assert!(hit_numbers(&b("4"), 3).is_err());
        assert!(hit_numbers(&b("1,1,1,1"), 3).is_err());
    }

    #[test]
    fn classical_matches_brute_force() {
        for n in 1..=5 {
            for board in boards_in_rectangle(n, n as u32) {
                let h = hit_numbers(&board, n).unwrap();
                assert_eq!(h, hit_numbers_brute_force(&board, n).unwrap(), "{board} n={n}");
                assert_eq!(h.total(), expected_total(HitFlavor::Classical, n, 1));
            }
        }
    }

    #[test]
    fn m_level_matches_wreath_enumeration() {
        for (n, m) in [(1, 3), (2, 2), (3, 2), (2, 3), (2, 4)] {
            for board in boards_in_rectangle(n, n as u32 * m) {
                let h = m_level_hit_numbers(&board, n, m).unwrap();
                assert_eq!(h, m_level_hit_numbers_brute_force(&board, n, m).unwrap(), "{board} n={n} m={m}");
            }
        }
        let empty = m_level_hit_numbers(&FerrersBoard::empty(), 3, 2).unwrap();
        assert_eq!(empty.entries[0], BigInt::from(48));
        assert_eq!(hit_numbers(&b("1,2,3"), 3).unwrap().entries, m_level_hit_numbers(&b("1,2,3"), 3, 1).unwrap().entries);
    }

    #[test]
    fn worked_counterexample() {
        let hits = pq_hit_numbers(&b("1,1,1"), 3, 2).unwrap();
        let pq = VarSet::pq();
        let p = |a, c| LaurentPoly::monomial(&pq, vec![a, c], 1);
        let inner = &(&p(4, 0) + &p(2, 1)) + &p(0, 2);
        assert_eq!(hits.entries[1], &pq_integer_product(&[4, 2]) * &inner);
        let shifted = &(&p(4, 6) + &p(2, 7)) + &p(0, 8);
        let q3_6 = &p(0, 3) * &crate::polynomial::pq_integer(6);
        let inner0 = &q3_6 - &shifted;
        assert_eq!(hits.entries[0], &pq_integer_product(&[4, 2]) * &inner0);
        assert!(inner0.coeff(&[4, 6]) < BigInt::zero());
        assert!(hits.entries[0].has_negative_coefficient());
        assert!(hits.entries[2].is_zero() && hits.entries[3].is_zero());
        for h in &hits.entries {
            assert!(!h.specialize_to_one("p").unwrap().has_negative_coefficient());
        }
        assert_eq!(pq_at_ones(&hits), m_level_hit_numbers(&b("1,1,1"), 3, 2).unwrap().entries);
    }

    #[test]
    fn scan_flags_the_counterexample() {
        let boards = vec![b("1,1,1"), b("1,2,3")];
        let records = positivity_scan(&boards, 3, 2, false).unwrap();
        assert!(records[0].negative_found);
        assert_eq!(records[0].witness_k, Some(0));
        let at_one = positivity_scan(&boards, 3, 2, true).unwrap();
        assert!(at_one.iter().all(|r| !r.negative_found));
    }
}
