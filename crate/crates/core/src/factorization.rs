//! Both sides of the m-level, m-weight and p,q factorization identities,
//! built exactly and compared against brute-force coefficients.

use num_bigint::BigInt;
use serde::Serialize;

use crate::board::{zones, FerrersBoard};
use crate::error::{Error, Result};
use crate::placement::{file_vector, pq_rook_poly, rook_vector};
use crate::polynomial::{pq_bracket, to_falling_basis, IntPolynomial, LaurentPoly, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    MLevel,
    MWeight,
    PqMLevel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqMode<'a> {
    Symbolic,
    /// Concrete `x` values, each a nonnegative multiple of `m`.
    Numeric(&'a [i64]),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabelledPoly {
    pub label: String,
    pub poly: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "values")]
pub enum Side {
    #[serde(serialize_with = "crate::decimal::vec")]
    Coefficients(Vec<BigInt>),
    Evaluations(Vec<LabelledPoly>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationReport {
    pub theorem: Theorem,
    pub board: FerrersBoard,
    pub m: u32,
    /// Zero columns prepended before building the product.
    pub padding: usize,
    pub basis_depth: usize,
    pub sum_side: Side,
    pub product_side: Side,
    pub matches: bool,
    pub factors: Vec<String>,
}

/// The linear factors `x + a_j` of the m-level product, one per column.
pub fn mft_factor_constants(board: &FerrersBoard, m: u32) -> Vec<i64> {
    let mut out = Vec::with_capacity(board.len());
    for zone in zones(board, m) {
        for j in zone.columns() {
            let mut a = zone.floor_value - (j as i64 - 1) * m as i64;
            if zone.is_last(j) {
                a += zone.remainder;
            }
            out.push(a);
        }
    }
    out
}

/// `x + b_j - (j-1)m` for each column.
pub fn mwft_factor_constants(board: &FerrersBoard, m: u32) -> Vec<i64> {
    board
        .columns()
        .iter()
        .enumerate()
        .map(|(j, &b)| b as i64 - j as i64 * m as i64)
        .collect()
}

fn product_of_linear(constants: &[i64]) -> IntPolynomial {
    constants.iter().fold(IntPolynomial::one(), |acc, &a| &acc * &IntPolynomial::linear(a))
}

pub fn mft_product(board: &FerrersBoard, m: u32) -> IntPolynomial {
    product_of_linear(&mft_factor_constants(board, m))
}

pub fn mwft_product(board: &FerrersBoard, m: u32) -> IntPolynomial {
    product_of_linear(&mwft_factor_constants(board, m))
}

fn describe(constants: &[i64]) -> Vec<String> {
    constants.iter().map(|&a| IntPolynomial::linear(a).to_string()).collect()
}

fn coefficient_report(
    theorem: Theorem,
    board: &FerrersBoard,
    m: u32,
    constants: Vec<i64>,
    sum: Vec<BigInt>,
) -> Result<FactorizationReport> {
    let n = board.len();
    let expansion = to_falling_basis(&product_of_linear(&constants), m, n)?;
    let matches = expansion.coefficients == sum;
    Ok(FactorizationReport {
        theorem,
        board: board.clone(),
        m,
        padding: 0,
        basis_depth: n,
        sum_side: Side::Coefficients(sum),
        product_side: Side::Coefficients(expansion.coefficients),
        matches,
        factors: describe(&constants),
    })
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    Ok(())
}

/// Compares the falling-basis expansion of the m-level product with brute-force `r_{k,m}`.
pub fn verify_mft(board: &FerrersBoard, m: u32) -> Result<FactorizationReport> {
    check_m(m)?;
    coefficient_report(Theorem::MLevel, board, m, mft_factor_constants(board, m), rook_vector(board, m))
}

/// Compares the falling-basis expansion of the m-weight product with brute-force `f_{k,m}`.
pub fn verify_mwft(board: &FerrersBoard, m: u32) -> Result<FactorizationReport> {
    check_m(m)?;
    coefficient_report(Theorem::MWeight, board, m, mwft_factor_constants(board, m), file_vector(board, m))
}

fn binom2(k: i64) -> i64 {
    k * (k + 1) / 2
}

/// `P p^a - Q q^a`, i.e. `(p - q)[x + a]` with `P = p^x` and `Q = q^x`.
fn formal_bracket(vars: &VarSet, a: i64) -> LaurentPoly {
    let a = a as i32;
    &LaurentPoly::monomial(vars, vec![a, 0, 1, 0], 1) - &LaurentPoly::monomial(vars, vec![0, a, 0, 1], 1)
}

fn p_minus_q(vars: &VarSet) -> LaurentPoly {
    &LaurentPoly::var(vars, "p") - &LaurentPoly::var(vars, "q")
}

/// Both sides over `{p, q, P, Q}`, multiplied through by `(p - q)^n`.
pub fn pqmft_sides_symbolic(board: &FerrersBoard, m: u32) -> (LaurentPoly, LaurentPoly) {
    let vars = VarSet::pq_formal();
    let n = board.len();
    let mi = m as i64;
    let diff = p_minus_q(&vars);

    let mut sum = LaurentPoly::zero(&vars);
    for k in 0..=n {
        let r = pq_rook_poly(board, k, m).embed(&vars).expect("{p,q} embeds in {p,q,P,Q}");
        if r.is_zero() {
            continue;
        }
        let lead = LaurentPoly::monomial(&vars, vec![(mi * binom2(k as i64)) as i32, 0, k as i32, 0], 1);
        let falling = (0..(n - k) as i64)
            .fold(LaurentPoly::one(&vars), |acc, i| &acc * &formal_bracket(&vars, -i * mi));
        sum = &sum + &(&(&(&lead * &r) * &diff.pow(k as u32)) * &falling);
    }

    let mut product = LaurentPoly::one(&vars);
    for zone in zones(board, m) {
        for j in zone.columns() {
            let a = zone.floor_value - (j as i64 - 1) * mi;
            let factor = if zone.is_last(j) {
                let q_rho = LaurentPoly::monomial(&vars, vec![0, zone.remainder as i32, 0, 0], 1);
                let mut f = &q_rho * &formal_bracket(&vars, a);
                for i in zone.columns() {
                    let rho_i = zone.partial_remainder(i) - zone.partial_remainder(i - 1);
                    let shift = zone.floor_value - (i as i64 - 1) * mi;
                    let coefficient = LaurentPoly::monomial(
                        &vars,
                        vec![shift as i32, zone.partial_remainder(i - 1) as i32, 1, 0],
                        1,
                    );
                    let bracket = &LaurentPoly::var_power(&vars, "p", rho_i as i32)
                        - &LaurentPoly::var_power(&vars, "q", rho_i as i32);
                    f = &f + &(&coefficient * &bracket);
                }
                f
            } else {
                formal_bracket(&vars, a)
            };
            product = &product * &factor;
        }
    }
    (sum, product)
}

/// Both sides over `{p, q}` at a concrete `x`.
pub fn pqmft_sides_numeric(board: &FerrersBoard, m: u32, x: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    check_m(m)?;
    let mi = m as i64;
    if x < 0 || x % mi != 0 {
        return Err(Error::InvalidParameter(format!("x = {x} is not a nonnegative multiple of m = {m}")));
    }
    let vars = VarSet::pq();
    let n = board.len();

    let mut sum = LaurentPoly::zero(&vars);
    for k in 0..=n {
        let r = pq_rook_poly(board, k, m);
        if r.is_zero() {
            continue;
        }
        let lead = LaurentPoly::var_power(&vars, "p", (x * k as i64 + mi * binom2(k as i64)) as i32);
        let falling = (0..(n - k) as i64).fold(LaurentPoly::one(&vars), |acc, i| &acc * &pq_bracket(x - i * mi));
        sum = &sum + &(&(&lead * &r) * &falling);
    }

    let mut product = LaurentPoly::one(&vars);
    for zone in zones(board, m) {
        for j in zone.columns() {
            let a = zone.floor_value - (j as i64 - 1) * mi;
            let factor = if zone.is_last(j) {
                let q_rho = LaurentPoly::var_power(&vars, "q", zone.remainder as i32);
                let mut f = &q_rho * &pq_bracket(x + a);
                for i in zone.columns() {
                    let rho_i = zone.partial_remainder(i) - zone.partial_remainder(i - 1);
                    let shift = x + zone.floor_value - (i as i64 - 1) * mi;
                    let coefficient =
                        LaurentPoly::monomial(&vars, vec![shift as i32, zone.partial_remainder(i - 1) as i32], 1);
                    f = &f + &(&coefficient * &pq_bracket(rho_i));
                }
                f
            } else {
                pq_bracket(x + a)
            };
            product = &product * &factor;
        }
    }
    Ok((sum, product))
}

/// Images of `p, q, P, Q` over `{p, q}` for a concrete `x`.
pub fn formal_specialization(x: i64) -> Vec<Vec<i32>> {
    let x = x as i32;
    vec![vec![1, 0], vec![0, 1], vec![x, 0], vec![0, x]]
}

fn pq_factor_labels(board: &FerrersBoard, m: u32) -> Vec<String> {
    let mut out = Vec::new();
    for zone in zones(board, m) {
        for j in zone.columns() {
            let a = zone.floor_value - (j as i64 - 1) * m as i64;
            let bracket = match a {
                0 => "[x]".to_string(),
                a if a > 0 => format!("[x + {a}]"),
                a => format!("[x - {}]", -a),
            };
            if zone.is_last(j) && zone.remainder != 0 {
                out.push(format!("q^{}{bracket} + zone correction over columns {}..{}", zone.remainder, zone.start, zone.end));
            } else {
                out.push(bracket);
            }
        }
    }
    out
}

pub fn verify_pqmft(board: &FerrersBoard, m: u32, mode: PqMode<'_>) -> Result<FactorizationReport> {
    check_m(m)?;
    let (sum_side, product_side, matches) = match mode {
        PqMode::Symbolic => {
            let (sum, product) = pqmft_sides_symbolic(board, m);
            let matches = sum == product;
            let label = "cleared by (p - q)^n".to_string();
            (
                Side::Evaluations(vec![LabelledPoly { label: label.clone(), poly: sum }]),
                Side::Evaluations(vec![LabelledPoly { label, poly: product }]),
                matches,
            )
        }
        PqMode::Numeric(xs) => {
            if xs.is_empty() {
                return Err(Error::InvalidParameter("at least one x value is required".into()));
            }
            let mut sums = Vec::new();
            let mut products = Vec::new();
            let mut matches = true;
            for &x in xs {
                let (sum, product) = pqmft_sides_numeric(board, m, x)?;
                matches &= sum == product;
                sums.push(LabelledPoly { label: format!("x={x}"), poly: sum });
                products.push(LabelledPoly { label: format!("x={x}"), poly: product });
            }
            (Side::Evaluations(sums), Side::Evaluations(products), matches)
        }
    };
    Ok(FactorizationReport {
        theorem: Theorem::PqMLevel,
        board: board.clone(),
        m,
        padding: 0,
        basis_depth: board.len(),
        sum_side,
        product_side,
        matches,
        factors: pq_factor_labels(board, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::is_singleton;
    use crate::partitions::boards_up_to;

    fn b(s: &str) -> FerrersBoard {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn running_example_expands_to_rook_numbers() {
        let report = verify_mft(&b("1,3,3"), 2).unwrap();
        assert!(report.matches);
        assert_eq!(report.product_side, Side::Coefficients(ints(&[1, 7, 6, 0])));
        assert_eq!(report.factors, vec!["x + 1", "x", "x"]);
    }

    #[test]
    fn zone_example_matches() {
        assert!(verify_mft(&b("1,1,2,3,5,7"), 3).unwrap().matches);
        assert!(verify_mwft(&b("1,1,2,3,5,7"), 3).unwrap().matches);
    }

    #[test]
    fn empty_board_is_the_constant_one() {
        let report = verify_mft(&FerrersBoard::empty(), 3).unwrap();
        assert!(report.matches);
        assert_eq!(report.sum_side, Side::Coefficients(ints(&[1])));
        let (s, p) = pqmft_sides_symbolic(&FerrersBoard::empty(), 2);
        assert_eq!(s, LaurentPoly::one(&VarSet::pq_formal()));
        assert_eq!(s, p);
    }

    #[test]
    fn products_agree_on_singleton_boards_and_at_m_one() {
        for board in boards_up_to(7) {
            // m = 1 gives x + b_j - j + 1
            assert_eq!(mft_product(&board, 1), mwft_product(&board, 1));
            for m in 2..=3 {
                if is_singleton(&board, m) {
                    assert_eq!(mft_product(&board, m), mwft_product(&board, m), "{board} m={m}");
                    assert_eq!(rook_vector(&board, m), file_vector(&board, m));
                }
            }
        }
    }

    #[test]
    fn unweighted_file_counts_are_elementary_symmetric() {
        // the m = 1 weight kills doubled rows, so compare the raw e_k through m = |B|
        let board = b("2,2,3,3,3,3");
        let e: Vec<i64> = vec![1, 16, 106, 372, 729, 756, 324];
        let raw: Vec<i64> = (0..=6)
            .map(|k| {
                crate::placement::enumerate_placements(
                    &crate::placement::CellSetBoard::from_ferrers(&board),
                    k,
                    crate::placement::PlacementKind::File,
                    1,
                )
                .count() as i64
            })
            .collect();
        assert_eq!(raw, e);
        assert!(verify_mwft(&board, 2).unwrap().matches);
    }

    #[test]
    fn pq_worked_board_numeric() {
        let report = verify_pqmft(&b("1,1,1"), 2, PqMode::Numeric(&[0, 2, 4])).unwrap();
        assert!(report.matches);
        assert!(verify_pqmft(&b("1,1,1"), 2, PqMode::Numeric(&[3])).is_err());
        assert!(verify_pqmft(&b("1,1,1"), 2, PqMode::Numeric(&[-2])).is_err());
    }

    #[test]
    fn pq_symbolic_small_sweep_and_specialization() {
        let vars = VarSet::pq();
        for board in boards_up_to(5) {
            for m in 1..=3 {
                let (sum, product) = pqmft_sides_symbolic(&board, m);
                assert_eq!(sum, product, "{board} m={m}");
                let cleared = p_minus_q(&vars).pow(board.len() as u32);
                for x in [0, m as i64, 2 * m as i64] {
                    let (ns, np) = pqmft_sides_numeric(&board, m, x).unwrap();
                    let images = formal_specialization(x);
                    assert_eq!(sum.substitute_monomials(&vars, &images), &ns * &cleared);
                    assert_eq!(product.substitute_monomials(&vars, &images), &np * &cleared);
                }
            }
        }
    }

    #[test]
    fn singleton_pq_product_is_plain_brackets() {
        let board = b("1,2,2,3");
        let (_, product) = pqmft_sides_numeric(&board, 2, 4).unwrap();
        let expected = board
            .columns()
            .iter()
            .enumerate()
            .fold(LaurentPoly::one(&VarSet::pq()), |acc, (j, &bj)| &acc * &pq_bracket(4 + bj as i64 - 2 * j as i64));
        assert_eq!(product, expected);
    }
}
