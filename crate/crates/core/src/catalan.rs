//! Boards inside the m-triangular board as lattice paths: area, dinv and bounce,
//! the bounce path, the statistic-exchanging bijection Φ, higher q,t-Catalan
//! polynomials, and the dinv generating function of a weight class.
//!
//! Columns are 0-based here, with `b_0 = 0`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::board::{fits_in, minimal_bounding_n, triangular_board, FerrersBoard};
use crate::equivalence::{
    board_from_omega, enumerate_class, lower_window, omega, validate_omega, MultiplicityProfile, Relation,
};
use crate::error::{Error, Result};
use crate::partitions::boards_in_triangle;
use crate::polynomial::{q_binomial, LaurentPoly, VarSet};

/// A board padded to `n` columns that fits inside the triangular board `(0, m, ..., (n-1)m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundedBoard {
    board: FerrersBoard,
    n: usize,
    m: u32,
}

impl BoundedBoard {
    pub fn new(board: &FerrersBoard, n: usize, m: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter("n and m must be positive".into()));
        }
        if !fits_in(board, n, m) {
            return Err(Error::InvalidBoard(format!("{board} does not fit in the triangular board with {n} columns, m = {m}")));
        }
        Ok(Self { board: board.repad(n)?, n, m })
    }

    /// Bounded by the smallest triangular board that contains it.
    pub fn minimal(board: &FerrersBoard, m: u32) -> Result<Self> {
        Self::new(board, minimal_bounding_n(board, m), m)
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn columns(&self) -> &[u32] {
        self.board.columns()
    }

    /// `(0 - b_0, m - b_1, ..., (n-1)m - b_{n-1})`.
    pub fn omega(&self) -> Vec<i64> {
        omega(&self.board, self.m, self.n).expect("bounded boards are padded to n").entries
    }
}

/// Cells of the triangular board outside the board.
pub fn area(board: &BoundedBoard) -> i64 {
    board.omega().iter().sum()
}

/// `sum_{k=0}^{m-1} #{i < j : 0 <= a_i - a_j + k <= m}`.
pub fn dinv(nu: &[i64], m: u32) -> i64 {
    let mi = m as i64;
    let mut total = 0;
    for k in 0..mi {
        for i in 0..nu.len() {
            for j in i + 1..nu.len() {
                let d = nu[i] - nu[j] + k;
                if (0..=mi).contains(&d) {
                    total += 1;
                }
            }
        }
    }
    total
}

/// Pair weight in the pairwise form of dinv.
pub fn f_m(d: i64, m: u32) -> i64 {
    let mi = m as i64;
    if 0 < d && d <= mi {
        mi - d + 1
    } else if -mi <= d && d <= 0 {
        mi + d
    } else {
        0
    }
}

/// `sum_{i<j} f_m(a_i - a_j)`.
pub fn dinv_pairwise(nu: &[i64], m: u32) -> i64 {
    let mut total = 0;
    for i in 0..nu.len() {
        for j in i + 1..nu.len() {
            total += f_m(nu[i] - nu[j], m);
        }
    }
    total
}

pub fn dinv_board(board: &BoundedBoard) -> i64 {
    dinv(&board.omega(), board.m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BouncePath {
    pub m: u32,
    /// Horizontal run of every stage, including zero runs.
    pub h: Vec<u64>,
    /// `v_i = h_i + h_{i-1} + ... + h_{i-m+1}`.
    pub v: Vec<u64>,
    pub end: (u64, u64),
}

impl BouncePath {
    /// Builds the path with the given horizontal runs, adding zero runs until it reaches `(n, nm)`.
    pub fn from_runs(runs: &[u64], m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        let n: u64 = runs.iter().sum();
        let top = n * m as u64;
        let mut h = Vec::new();
        let mut v = Vec::new();
        let mut y = 0u64;
        let mut stage = 0usize;
        while stage < runs.len() || y < top {
            h.push(runs.get(stage).copied().unwrap_or(0));
            let vi = window_sum(&h, stage, m);
            if stage >= runs.len() && vi == 0 {
                return Err(Error::NonTermination(format!("runs {runs:?} stall below height {top}")));
            }
            y += vi;
            v.push(vi);
            stage += 1;
        }
        if y != top {
            return Err(Error::NonTermination(format!("runs {runs:?} overshoot height {top}")));
        }
        let path = Self { m, h, v, end: (n, top) };
        path.validate()?;
        Ok(path)
    }

    /// The composition `(h_0, ..., h_s)` with `h_s` the last positive run.
    pub fn composition(&self) -> Vec<u64> {
        let last = self.h.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        self.h[..last].to_vec()
    }

    pub fn bounce(&self) -> u64 {
        self.h.iter().enumerate().map(|(i, &x)| i as u64 * x).sum()
    }

    fn validate(&self) -> Result<()> {
        let comp = self.composition();
        if self.end.0 > 0 && comp.first() == Some(&0) {
            return Err(Error::InvalidInput("bounce path must start with a horizontal run".into()));
        }
        let mut zeros = 0;
        for &x in &comp {
            zeros = if x == 0 { zeros + 1 } else { 0 };
            if zeros >= self.m {
                return Err(Error::InvalidInput(format!("{} consecutive zero runs with m = {}", zeros, self.m)));
            }
        }
        for (i, &vi) in self.v.iter().enumerate() {
            if vi != window_sum(&self.h, i, self.m) {
                return Err(Error::InvalidInput(format!("vertical run {i} breaks the recurrence")));
            }
        }
        Ok(())
    }
}

fn window_sum(h: &[u64], i: usize, m: u32) -> u64 {
    let lo = (i + 1).saturating_sub(m as usize);
    h[lo..=i].iter().sum()
}

/// The ball-bounce path: horizontal runs stop just short of the first lattice point
/// strictly inside the board, vertical runs follow the window recurrence.
pub fn bounce_path(board: &BoundedBoard) -> Result<BouncePath> {
    let n = board.n as u64;
    let m = board.m;
    let top = n * m as u64;
    let cols = board.columns();
    let (mut x, mut y) = (0u64, 0u64);
    let mut h = Vec::new();
    let mut v = Vec::new();
    // every stage either moves or is one of at most m - 1 idle stages in a row
    let limit = (n + top) as usize * m as usize + m as usize + 1;
    while (x, y) != (n, top) {
        if h.len() > limit {
            return Err(Error::NonTermination(format!("bounce path of {} did not reach ({n}, {top})", board.board)));
        }
        let mut run = 0;
        while x < n && (y as u32) >= cols[x as usize] {
            x += 1;
            run += 1;
        }
        h.push(run);
        let vi = window_sum(&h, h.len() - 1, m);
        y += vi;
        v.push(vi);
        if y > top {
            return Err(Error::NonTermination(format!("bounce path of {} overshoots height {top}", board.board)));
        }
    }
    let path = BouncePath { m, h, v, end: (n, top) };
    path.validate()?;
    Ok(path)
}

pub fn bounce(board: &BoundedBoard) -> Result<u64> {
    Ok(bounce_path(board)?.bounce())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BounceRectangle {
    pub index: usize,
    pub southwest: (u64, u64),
    pub northeast: (u64, u64),
    /// Entries of ω in `[index - m, index]`, in order.
    pub subword: Vec<i64>,
    pub steps: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiConstruction {
    pub omega: Vec<i64>,
    pub profile: Vec<u64>,
    pub bounce_path: BouncePath,
    pub rectangles: Vec<BounceRectangle>,
    pub image: BoundedBoard,
}

/// Φ with every intermediate object.
pub fn phi_construction(board: &BoundedBoard) -> Result<PhiConstruction> {
    let m = board.m;
    let mi = m as i64;
    let omega = board.omega();
    let profile = MultiplicityProfile::of(&omega)?;
    let path = BouncePath::from_runs(&profile.counts, m)?;

    let stages = profile.counts.len() + m as usize;
    let mut rectangles = Vec::with_capacity(stages);
    let mut corner = (0u64, 0u64);
    let mut walk = (0u64, 0u64);
    let mut heights = Vec::with_capacity(board.n);
    for i in 0..stages {
        let width = profile.get(i as i64);
        let height = lower_window(&profile, i as i64, m);
        let southwest = corner;
        let northeast = (corner.0 + width, corner.1 + height);
        let subword: Vec<i64> = omega.iter().copied().filter(|&a| (i as i64 - mi..=i as i64).contains(&a)).collect();
        let mut steps = String::with_capacity(subword.len());
        for &a in &subword {
            if a == i as i64 {
                heights.push(walk.1);
                walk.0 += 1;
                steps.push('E');
            } else {
                walk.1 += 1;
                steps.push('N');
            }
        }
        if walk != northeast || (height > 0 && !steps.starts_with('N')) {
            return Err(Error::InvalidInput(format!(
                "subword {subword:?} does not fill rectangle {i} from {southwest:?} to {northeast:?}"
            )));
        }
        rectangles.push(BounceRectangle { index: i, southwest, northeast, subword, steps });
        corner = northeast;
    }
    let top = board.n as u64 * m as u64;
    if walk != (board.n as u64, top) {
        return Err(Error::InvalidInput(format!("Φ path ends at {walk:?} instead of ({}, {top})", board.n)));
    }
    let columns = heights.into_iter().map(|y| y as u32).collect();
    let image = BoundedBoard::new(&FerrersBoard::new(columns)?, board.n, m)?;
    Ok(PhiConstruction { omega, profile: profile.counts, bounce_path: path, rectangles, image })
}

pub fn phi(board: &BoundedBoard) -> Result<BoundedBoard> {
    Ok(phi_construction(board)?.image)
}

/// Every board inside the triangular board with `n` columns.
pub fn bounded_boards(n: usize, m: u32) -> Vec<BoundedBoard> {
    boards_in_triangle(n, m).into_iter().map(|board| BoundedBoard { board, n, m }).collect()
}

/// `sum q^{dinv} t^{area}` over all bounded boards.
pub fn qt_catalan(n: usize, m: u32) -> LaurentPoly {
    let vars = VarSet::qt();
    bounded_boards(n, m).iter().fold(LaurentPoly::zero(&vars), |acc, b| {
        &acc + &LaurentPoly::monomial(&vars, vec![dinv_board(b) as i32, area(b) as i32], 1)
    })
}

/// `sum q^{area} t^{bounce}` over all bounded boards.
pub fn qt_catalan_bounce(n: usize, m: u32) -> Result<LaurentPoly> {
    let vars = VarSet::qt();
    let mut out = LaurentPoly::zero(&vars);
    for b in bounded_boards(n, m) {
        out = &out + &LaurentPoly::monomial(&vars, vec![area(&b) as i32, bounce(&b)? as i32], 1);
    }
    Ok(out)
}

/// `(q exponent, t exponent, coefficient)` in canonical order.
pub fn term_table(poly: &LaurentPoly) -> Vec<(i32, i32, BigInt)> {
    poly.terms().map(|(e, c)| (e[0], e[1], c.clone())).collect()
}

/// Lattice paths from `(0,0)` to `(n, nm)` whose points all satisfy `y <= mx`, by dynamic programming.
pub fn count_lattice_paths(n: usize, m: u32) -> BigInt {
    let top = n * m as usize;
    let mut ways = vec![vec![BigInt::from(0); top + 1]; n + 1];
    ways[0][0] = BigInt::from(1);
    for x in 0..=n {
        for y in 0..=top.min(x * m as usize) {
            if x == 0 && y == 0 {
                continue;
            }
            let mut w = BigInt::from(0);
            if x > 0 && y <= (x - 1) * m as usize {
                w += &ways[x - 1][y];
            }
            if y > 0 {
                w += &ways[x][y - 1];
            }
            ways[x][y] = w;
        }
    }
    ways[n][top].clone()
}

/// `c(n_0, n_1, ...)`, the dinv of the least member of the class.
pub fn class_dinv_offset(profile: &MultiplicityProfile, m: u32) -> i64 {
    let mi = m as i64;
    let len = profile.counts.len() as i64;
    let diagonal: i64 = (0..len)
        .map(|i| {
            let ni = profile.get(i) as i64;
            mi * ni * (ni - 1) / 2
        })
        .sum();
    let cross: i64 = (1..len)
        .map(|i| profile.get(i) as i64 * (1..=mi).map(|j| (mi - j) * profile.get(i - j) as i64).sum::<i64>())
        .sum();
    diagonal + cross
}

/// `q^{c(n)} prod_{i>=1} [n_i + n_{i-1} + ... + n_{i-m} - 1 choose n_i]_q` with ω taken at `n` columns.
pub fn class_dinv_generating_function(board: &FerrersBoard, n: usize, m: u32) -> Result<LaurentPoly> {
    let bounded = BoundedBoard::new(board, n, m)?;
    let profile = MultiplicityProfile::of(&bounded.omega())?;
    let vars = VarSet::q();
    let mut out = LaurentPoly::var_power(&vars, "q", class_dinv_offset(&profile, m) as i32);
    for i in 1..profile.counts.len() as i64 {
        let ni = profile.get(i);
        if ni == 0 {
            continue;
        }
        let window = lower_window(&profile, i, m);
        if window == 0 {
            return Ok(LaurentPoly::zero(&vars));
        }
        out = &out * &q_binomial((ni + window - 1) as u32, ni as u32);
    }
    Ok(out)
}

/// `sum q^{dinv}` over the brute-force weight class, each member padded to `n` columns.
pub fn class_dinv_brute_force(board: &FerrersBoard, n: usize, m: u32) -> Result<LaurentPoly> {
    BoundedBoard::new(board, n, m)?;
    let vars = VarSet::q();
    let mut out = LaurentPoly::zero(&vars);
    for member in enumerate_class(&board.trim(), m, Relation::Weight) {
        let bounded = BoundedBoard::new(&member, n, m)?;
        out = &out + &LaurentPoly::var_power(&vars, "q", dinv_board(&bounded) as i32);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalBoards {
    pub n: usize,
    pub omega_hat: Vec<i64>,
    pub omega_check: Vec<i64>,
    /// Least dinv in the class.
    pub b1: FerrersBoard,
    /// Greatest dinv in the class.
    pub b2: FerrersBoard,
}

/// The class members of least and greatest dinv, both padded to `n` columns.
pub fn extremal_dinv_boards_in(board: &FerrersBoard, n: usize, m: u32) -> Result<ExtremalBoards> {
    let bounded = BoundedBoard::new(board, n, m)?;
    let omega = bounded.omega();
    let profile = MultiplicityProfile::of(&omega)?;

    let mut omega_hat = omega.clone();
    omega_hat.sort_unstable();

    let mut omega_check: Vec<i64> = vec![0; profile.get(0) as usize];
    for i in 1..profile.counts.len() as i64 {
        let copies = profile.get(i) as usize;
        if copies == 0 {
            continue;
        }
        let after = omega_check
            .iter()
            .position(|&a| a >= i - m as i64)
            .ok_or_else(|| Error::InvalidInput(format!("no slot for value {i} in {omega_check:?}")))?;
        omega_check.splice(after + 1..after + 1, std::iter::repeat_n(i, copies));
    }
    if !validate_omega(&omega_hat, m) || !validate_omega(&omega_check, m) {
        return Err(Error::InvalidInput(format!("ω = {omega:?} has no board rearrangement")));
    }
    Ok(ExtremalBoards {
        n,
        b1: board_from_omega(&omega_hat, m)?,
        b2: board_from_omega(&omega_check, m)?,
        omega_hat,
        omega_check,
    })
}

pub fn extremal_dinv_boards(board: &FerrersBoard, m: u32) -> Result<ExtremalBoards> {
    extremal_dinv_boards_in(board, minimal_bounding_n(board, m), m)
}

/// `(m+1)^{n-1}`.
pub fn count_weight_classes_in_triangle(n: usize, m: u32) -> BigInt {
    if n == 0 {
        return BigInt::from(0);
    }
    BigInt::from(m + 1).pow(n as u32 - 1)
}

/// Distinct brute-force f-vectors among the boards inside the triangular board.
pub fn count_weight_classes_brute_force(n: usize, m: u32) -> usize {
    let vectors: BTreeSet<Vec<BigInt>> = boards_in_triangle(n, m)
        .iter()
        .map(|b| crate::equivalence::relation_vector(&b.trim(), m, Relation::Weight))
        .collect();
    vectors.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoardStats {
    pub board: BoundedBoard,
    pub omega: Vec<i64>,
    pub area: i64,
    pub dinv: i64,
    pub bounce: u64,
    pub bounce_path: BouncePath,
}

pub fn board_stats(board: &BoundedBoard) -> Result<BoardStats> {
    Ok(BoardStats {
        board: board.clone(),
        omega: board.omega(),
        area: area(board),
        dinv: dinv_board(board),
        bounce: bounce(board)?,
        bounce_path: bounce_path(board)?,
    })
}

/// Statistic exchange and bijectivity of Φ over every bounded board; returns the failures.
pub fn check_phi_exchange(n: usize, m: u32) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut images: BTreeMap<BoundedBoard, BoundedBoard> = BTreeMap::new();
    let boards = bounded_boards(n, m);
    for b in &boards {
        let construction = phi_construction(b)?;
        let image = construction.image;
        if area(b) != bounce(&image)? as i64 {
            failures.push(format!("area({}) != bounce(Φ) for n={n} m={m}", b.board));
        }
        if dinv_board(b) != area(&image) {
            failures.push(format!("dinv({}) != area(Φ) for n={n} m={m}", b.board));
        }
        if bounce_path(&image)?.composition() != construction.bounce_path.composition() {
            failures.push(format!("bounce path of Φ({}) differs from n(ω)", b.board));
        }
        if let Some(prev) = images.insert(image.clone(), b.clone()) {
            failures.push(format!("Φ({}) = Φ({}) = {}", prev.board, b.board, image.board));
        }
    }
    if images.len() != boards.len() {
        failures.push(format!("Φ image has {} of {} boards for n={n} m={m}", images.len(), boards.len()));
    }
    Ok(failures)
}

/// The triangular board itself, as a bounded board.
pub fn full_triangle(n: usize, m: u32) -> BoundedBoard {
    BoundedBoard { board: triangular_board(n, m), n, m }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bb(s: &str, n: usize, m: u32) -> BoundedBoard {
        BoundedBoard::new(&s.parse().unwrap(), n, m).unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(area(&full_triangle(4, 2)), 0);
        assert_eq!(area(&bb("0,0,3,4", 4, 2)), 5);
        assert_eq!(area(&bb("", 5, 3)), 3 * 5 * 4 / 2);
        assert!(BoundedBoard::new(&"1".parse().unwrap(), 1, 2).is_err());
    }

    #[test]
    fn dinv_examples() {
        assert_eq!(dinv(&[3, 3, 3, 3], 2), 2 * 6);
        assert_eq!(dinv(&[5], 3), 0);
        assert_eq!(dinv(&[0, 2, 1, 2], 2), 6);
        assert_eq!(dinv_pairwise(&[0, 2, 1, 2], 2), 6);
        let v = [0, 3, 1, 4, 4, 2, 7, 1];
        for m in 1..=4 {
            assert_eq!(dinv(&v, m), dinv_pairwise(&v, m));
        }
    }

    #[test]
    fn bounce_examples() {
        let p = bounce_path(&bb("0,0,3,4", 4, 2)).unwrap();
        assert_eq!(p.h, vec![2, 0, 2, 0]);
        assert_eq!(p.v, vec![2, 2, 2, 2]);
        assert_eq!(p.composition(), vec![2, 0, 2]);
        assert_eq!(p.bounce(), 4);
        for n in 1..=4 {
            for m in 1..=3 {
                // the full triangle bounces at every column, the empty board runs straight across
                let p = bounce_path(&full_triangle(n, m)).unwrap();
                let mut expected = vec![1u64];
                for _ in 1..n {
                    expected.extend(std::iter::repeat_n(0, m as usize - 1));
                    expected.push(1);
                }
                assert_eq!(p.composition(), expected);
                assert_eq!(p.bounce(), m as u64 * (n * (n - 1) / 2) as u64);
                let p = bounce_path(&BoundedBoard::new(&FerrersBoard::empty(), n, m).unwrap()).unwrap();
                assert_eq!(p.composition(), vec![n as u64]);
            }
        }
    }

    #[test]
    fn runs_build_the_target_path() {
        let p = BouncePath::from_runs(&[1, 1, 2], 2).unwrap();
        assert_eq!(p.h, vec![1, 1, 2, 0]);
        assert_eq!(p.v, vec![1, 2, 3, 2]);
        assert!(BouncePath::from_runs(&[1, 0, 0, 1], 2).is_err());
    }

    #[test]
    fn phi_examples() {
        let c = phi_construction(&bb("0,0,3,4", 4, 2)).unwrap();
        let steps: Vec<&str> = c.rectangles.iter().map(|r| r.steps.as_str()).collect();
        assert_eq!(steps, vec!["E", "NE", "NENE", "NNN", "NN"]);
        let corners: Vec<_> = c.rectangles.iter().map(|r| (r.southwest, r.northeast)).collect();
        assert_eq!(corners, vec![((0, 0), (1, 0)), ((1, 0), (2, 1)), ((2, 1), (4, 3)), ((4, 3), (4, 6)), ((4, 6), (4, 8))]);
        assert_eq!(c.image, bb("0,1,2,3", 4, 2));
        assert_eq!(phi(&bb("0,1,2,4", 4, 2)).unwrap(), bb("0,1,3,3", 4, 2));
        assert_eq!(phi(&bb("0,0,2,5", 4, 2)).unwrap(), bb("0,1,2,2", 4, 2));
    }

    #[test]
    fn phi_exchange_small() {
        for n in 1..=4 {
            for m in 1..=3 {
                assert_eq!(check_phi_exchange(n, m).unwrap(), Vec::<String>::new());
            }
        }
    }

    #[test]
    fn catalan_forms_agree() {
        for n in 1..=4 {
            for m in 1..=2 {
                let cat = qt_catalan(n, m);
                assert_eq!(Ok(cat.clone()), qt_catalan_bounce(n, m));
                assert_eq!(cat.eval_at_ones(), count_lattice_paths(n, m));
            }
        }
        assert_eq!(qt_catalan(1, 3), LaurentPoly::one(&VarSet::qt()));
        assert_eq!(count_lattice_paths(3, 1), BigInt::from(5));
        assert_eq!(count_lattice_paths(4, 1), BigInt::from(14));
    }

    #[test]
    fn class_generating_function_example() {
        let b: FerrersBoard = "0,0,3,4".parse().unwrap();
        let g = class_dinv_generating_function(&b, 4, 2).unwrap();
        assert_eq!(g.to_string(), "q^5 + q^6 + q^7");
        assert_eq!(g, class_dinv_brute_force(&b, 4, 2).unwrap());
        let tri = class_dinv_generating_function(&triangular_board(4, 2), 4, 2).unwrap();
        assert_eq!(tri, LaurentPoly::var_power(&VarSet::q(), "q", 12));
    }

    #[test]
    fn extremal_example() {
        let e = extremal_dinv_boards(&"0,0,3,4".parse().unwrap(), 2).unwrap();
        assert_eq!(e.n, 4);
        assert_eq!(e.omega_check, vec![0, 2, 2, 1]);
        assert_eq!(e.b1, "0,1,2,4".parse().unwrap());
        assert_eq!(e.b2, "0,0,2,5".parse().unwrap());
        let single = extremal_dinv_boards_in(&triangular_board(3, 2), 3, 2).unwrap();
        assert_eq!(single.b1, triangular_board(3, 2));
        assert_eq!(single.b2, triangular_board(3, 2));
    }

    #[test]
    fn class_counts_in_triangles() {
        for (n, m) in [(1, 2), (3, 1), (4, 1), (3, 2), (4, 2), (3, 3)] {
            assert_eq!(count_weight_classes_in_triangle(n, m), BigInt::from(count_weight_classes_brute_force(n, m)));
        }
    }
}
