//! Exhaustive invariant suites. Every suite checks a family of identities over all
//! objects within the sweep bounds and reports the failures it saw.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::board::{is_m_increasing, is_m_restricted, is_singleton, l_operator, minimal_bounding_n, FerrersBoard};
use crate::catalan::{
    bounded_boards, check_phi_exchange, class_dinv_brute_force, class_dinv_generating_function, count_lattice_paths,
    count_weight_classes_brute_force, count_weight_classes_in_triangle, dinv, dinv_board, dinv_pairwise,
    extremal_dinv_boards_in, qt_catalan, qt_catalan_bounce, BoundedBoard,
};
use crate::equivalence::{
    class_partition, count_singleton_class, count_weight_class, equivalent_level, equivalent_weight,
    m_increasing_representative, m_restricted_representative, m_restricted_singleton_representative, relation_vector,
    Relation,
};
use crate::error::{Error, Result};
use crate::factorization::{mft_product, verify_mft, verify_mwft, verify_pqmft, PqMode};
use crate::hitnumbers::{
    expected_total, hit_numbers, hit_numbers_brute_force, m_level_hit_numbers, m_level_hit_numbers_brute_force,
    pq_at_ones, pq_hit_numbers, HitFlavor,
};
use crate::partitions::{boards_in_rectangle, boards_up_to};
use crate::placement::{permutation_to_placement, placement_stats, CellSetBoard};
use crate::polynomial::{pq_factorial, to_falling_basis, IntPolynomial, LaurentPoly, VarSet};

/// Bounds of an exhaustive sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sweep {
    /// Largest board size for board sweeps.
    pub max_cells: u32,
    /// Largest board size for the symbolic p,q check.
    pub pq_max_cells: u32,
    pub m_max: u32,
    /// Largest `n` for the triangular-board and permutation sweeps.
    pub n_max: usize,
    /// Largest `m * n` for hit-number sweeps.
    pub hit_max: usize,
    /// Largest `m * n` for p,q hit numbers and enumeration oracles.
    pub pq_hit_max: usize,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep { max_cells: 10, pq_max_cells: 7, m_max: 3, n_max: 5, hit_max: 8, pq_hit_max: 6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITES: &[&str] = &[
    "mft",
    "mwft",
    "pqmft",
    "l-involution",
    "l-exchange",
    "level-roots",
    "weight-roots",
    "representatives",
    "card",
    "card2",
    "card2q",
    "extremal",
    "dinv-formulas",
    "dinv-swap",
    "phi",
    "catalan",
    "triangle-classes",
    "falling-basis",
    "hit",
    "hit-singleton-positivity",
    "rodrigues",
];

/// Runs one named suite.
pub fn run_suite(name: &str, sweep: &Sweep) -> Result<SuiteReport> {
    let (checked, failures) = match name {
        "mft" => mft(sweep)?,
        "mwft" => mwft(sweep)?,
        "pqmft" => pqmft(sweep)?,
        "l-involution" => l_involution(sweep),
        "l-exchange" => l_exchange(sweep),
        "level-roots" => roots(sweep, Relation::Level)?,
        "weight-roots" => roots(sweep, Relation::Weight)?,
        "representatives" => representatives(sweep)?,
        "card" => card(sweep)?,
        "card2" => card2(sweep)?,
        "card2q" => card2q(sweep)?,
        "extremal" => extremal(sweep)?,
        "dinv-formulas" => dinv_formulas(sweep),
        "dinv-swap" => dinv_swap(sweep),
        "phi" => phi(sweep)?,
        "catalan" => catalan(sweep)?,
        "triangle-classes" => triangle_classes(sweep),
        "falling-basis" => falling_basis(sweep)?,
        "hit" => hit(sweep)?,
        "hit-singleton-positivity" => hit_singleton_positivity(sweep)?,
        "rodrigues" => rodrigues(sweep)?,
        other => return Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteReport { name: name.to_string(), checked, failures })
}

/// Runs the named suites in order; `"all"` expands to every suite.
pub fn run_suites(names: &[&str], sweep: &Sweep) -> Result<Vec<SuiteReport>> {
    let expanded: Vec<&str> = if names.contains(&"all") { SUITES.to_vec() } else { names.to_vec() };
    expanded.iter().map(|n| run_suite(n, sweep)).collect()
}

type Outcome = (u64, Vec<String>);

fn ms(sweep: &Sweep) -> std::ops::RangeInclusive<u32> {
    1..=sweep.m_max
}

/// Each case maps to the failures it produced; order is preserved.
fn collect<T: Sync>(cases: &[T], check: impl Fn(&T) -> Result<Vec<String>> + Sync + Send) -> Result<Outcome> {
    let failures = cases.par_iter().map(check).collect::<Result<Vec<_>>>()?;
    Ok((cases.len() as u64, failures.into_iter().flatten().collect()))
}

fn board_cases(sweep: &Sweep, max_cells: u32) -> Vec<(FerrersBoard, u32)> {
    ms(sweep).flat_map(|m| boards_up_to(max_cells).into_iter().map(move |b| (b, m))).collect()
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Vec<String> {
    if cond {
        vec![msg()]
    } else {
        Vec::new()
    }
}

fn mft(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.max_cells), |(b, m)| {
        Ok(fail_if(!verify_mft(b, *m)?.matches, || format!("mft fails on {b} m={m}")))
    })
}

fn mwft(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.max_cells), |(b, m)| {
        Ok(fail_if(!verify_mwft(b, *m)?.matches, || format!("mwft fails on {b} m={m}")))
    })
}

fn pqmft(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.pq_max_cells.min(sweep.max_cells)), |(b, m)| {
        let report = verify_pqmft(b, *m, PqMode::Symbolic)?;
        Ok(fail_if(!report.matches, || format!("pqmft fails on {b} m={m}")))
    })
}

fn l_involution(sweep: &Sweep) -> Outcome {
    let cases: Vec<_> = board_cases(sweep, sweep.max_cells).into_iter().filter(|(b, m)| is_singleton(b, *m)).collect();
    let failures = cases
        .iter()
        .filter_map(|(b, m)| {
            let back = l_operator(&l_operator(b, *m), *m);
            (back != b.trim()).then(|| format!("l(l({b})) = {back} for m={m}"))
        })
        .collect();
    (cases.len() as u64, failures)
}

fn l_exchange(sweep: &Sweep) -> Outcome {
    let cases = board_cases(sweep, sweep.max_cells);
    let mut failures = Vec::new();
    for (b, m) in &cases {
        let l = l_operator(b, *m);
        if is_m_restricted(b, *m) && !is_m_increasing(&l, *m) {
            failures.push(format!("{b} is {m}-restricted but l = {l} is not {m}-increasing"));
        }
        if is_m_increasing(b, *m) && !is_m_restricted(&l, *m) {
            failures.push(format!("{b} is {m}-increasing but l = {l} is not {m}-restricted"));
        }
    }
    (cases.len() as u64, failures)
}

/// Root-vector equivalence against brute-force r- or f-vectors, over all pairs.
fn roots(sweep: &Sweep, relation: Relation) -> Result<Outcome> {
    let boards = boards_up_to(sweep.max_cells);
    let mut checked = 0;
    let mut failures = Vec::new();
    for m in ms(sweep) {
        let vectors: Vec<Vec<BigInt>> = boards.par_iter().map(|b| relation_vector(b, m, relation)).collect();
        let rows = (0..boards.len())
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                for j in i..boards.len() {
                    let by_roots = match relation {
                        Relation::Level => equivalent_level(&boards[i], &boards[j], m)?,
                        Relation::Weight => equivalent_weight(&boards[i], &boards[j], m)?,
                    };
                    if by_roots != (vectors[i] == vectors[j]) {
                        out.push(format!("{} vs {} m={m}: roots say {by_roots}", boards[i], boards[j]));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        checked += (boards.len() * (boards.len() + 1) / 2) as u64;
        failures.extend(rows.into_iter().flatten());
    }
    Ok((checked, failures))
}

fn representatives(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.max_cells), |(b, m)| {
        let m = *m;
        let mut out = Vec::new();
        let rest = m_restricted_representative(b, m)?;
        if !is_m_restricted(&rest, m) || !equivalent_weight(&rest, b, m)? {
            out.push(format!("m-restricted representative {rest} of {b} m={m}"));
        }
        if is_singleton(b, m) {
            let inc = m_increasing_representative(b, m)?;
            if !is_m_increasing(&inc, m) || !is_singleton(&inc, m) || !equivalent_level(&inc, b, m)? {
                out.push(format!("m-increasing representative {inc} of {b} m={m}"));
            }
            let rs = m_restricted_singleton_representative(b, m)?;
            if !is_m_restricted(&rs, m) || !is_singleton(&rs, m) || !equivalent_level(&rs, b, m)? {
                out.push(format!("m-restricted singleton representative {rs} of {b} m={m}"));
            }
        }
        Ok(out)
    })
}

/// Brute-force classes of every size up to the bound, keyed by trimmed board.
fn class_sizes(max_cells: u32, m: u32, relation: Relation) -> BTreeMap<FerrersBoard, Vec<FerrersBoard>> {
    (0..=max_cells)
        .into_par_iter()
        .flat_map_iter(|size| class_partition(size, m, relation))
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(|class| class.clone().into_iter().map(move |b| (b, class.clone())))
        .collect()
}

fn card(sweep: &Sweep) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for m in ms(sweep) {
        let classes = class_sizes(sweep.max_cells, m, Relation::Level);
        for (b, class) in &classes {
            if !is_singleton(b, m) {
                continue;
            }
            checked += 1;
            let brute = class.iter().filter(|c| is_singleton(c, m)).count();
            let formula = count_singleton_class(b, m)?;
            if formula != BigInt::from(brute) {
                failures.push(format!("singleton class of {b} m={m}: formula {formula}, enumeration {brute}"));
            }
        }
    }
    Ok((checked, failures))
}

fn card2(sweep: &Sweep) -> Result<Outcome> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for m in ms(sweep) {
        for (b, class) in &class_sizes(sweep.max_cells, m, Relation::Weight) {
            checked += 1;
            let formula = count_weight_class(b, m)?;
            if formula != BigInt::from(class.len()) {
                failures.push(format!("weight class of {b} m={m}: formula {formula}, enumeration {}", class.len()));
            }
        }
    }
    Ok((checked, failures))
}

fn card2q(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.max_cells), |(b, m)| {
        let n = minimal_bounding_n(b, *m);
        let formula = class_dinv_generating_function(b, n, *m)?;
        let brute = class_dinv_brute_force(b, n, *m)?;
        Ok(fail_if(formula != brute, || format!("q-class of {b} m={m} N={n}: {formula} vs {brute}")))
    })
}

fn extremal(sweep: &Sweep) -> Result<Outcome> {
    collect(&board_cases(sweep, sweep.max_cells), |(b, m)| {
        let m = *m;
        let n = minimal_bounding_n(b, m);
        let ext = extremal_dinv_boards_in(b, n, m)?;
        let members: Vec<(FerrersBoard, i64)> = crate::equivalence::enumerate_class(b, m, Relation::Weight)
            .into_iter()
            .map(|c| BoundedBoard::new(&c, n, m).map(|bb| (bb.board().clone(), dinv_board(&bb))))
            .collect::<Result<_>>()?;
        let (lo, hi) = match members.iter().map(|(_, d)| *d).minmax().into_option() {
            Some(pair) => pair,
            None => return Ok(vec![format!("empty class for {b} m={m}")]),
        };
        let at = |d: i64| members.iter().filter(|(_, x)| *x == d).map(|(c, _)| c.clone()).collect::<Vec<_>>();
        let mut out = Vec::new();
        if at(lo) != vec![ext.b1.repad(n)?] {
            out.push(format!("minimum dinv of class of {b} m={m} is not uniquely at {}", ext.b1));
        }
        if at(hi) != vec![ext.b2.repad(n)?] {
            out.push(format!("maximum dinv of class of {b} m={m} is not uniquely at {}", ext.b2));
        }
        Ok(out)
    })
}

/// `(omega, m)` for every bounded board, plus every integer vector of length at most 4
/// with entries in `0..=2m`.
fn dinv_vectors(sweep: &Sweep) -> Vec<(Vec<i64>, u32)> {
    let mut out = Vec::new();
    for m in ms(sweep) {
        for n in 1..=sweep.n_max {
            out.extend(bounded_boards(n, m).iter().map(|b| (b.omega(), m)));
        }
        for len in 0..=4 {
            let range = 0..=2 * m as i64;
            out.extend((0..len).map(|_| range.clone()).multi_cartesian_product().map(|v| (v, m)));
        }
    }
    out
}

fn dinv_formulas(sweep: &Sweep) -> Outcome {
    let cases = dinv_vectors(sweep);
    let failures = cases
        .iter()
        .filter_map(|(v, m)| {
            let (a, b) = (dinv(v, *m), dinv_pairwise(v, *m));
            (a != b).then(|| format!("dinv {v:?} m={m}: {a} vs pairwise {b}"))
        })
        .collect();
    (cases.len() as u64, failures)
}

fn dinv_swap(sweep: &Sweep) -> Outcome {
    let cases = dinv_vectors(sweep);
    let mut checked = 0;
    let mut failures = Vec::new();
    for (v, m) in &cases {
        let before = dinv(v, *m);
        for i in 0..v.len().saturating_sub(1) {
            let gap = v[i] - v[i + 1];
            if gap <= 0 {
                continue;
            }
            checked += 1;
            let mut swapped = v.clone();
            swapped.swap(i, i + 1);
            let drop = before - dinv(&swapped, *m);
            let expected = if gap <= *m as i64 { 1 } else { 0 };
            if drop != expected {
                failures.push(format!("swapping {v:?} at {i} m={m} drops dinv by {drop}, expected {expected}"));
            }
        }
    }
    (checked, failures)
}

fn triangle_cases(sweep: &Sweep) -> Vec<(usize, u32)> {
    ms(sweep).flat_map(|m| (1..=sweep.n_max).map(move |n| (n, m))).collect()
}

fn phi(sweep: &Sweep) -> Result<Outcome> {
    let cases = triangle_cases(sweep);
    let failures = cases.par_iter().map(|(n, m)| check_phi_exchange(*n, *m)).collect::<Result<Vec<_>>>()?;
    let checked = cases.iter().map(|(n, m)| bounded_boards(*n, *m).len() as u64).sum();
    Ok((checked, failures.into_iter().flatten().collect()))
}

fn catalan(sweep: &Sweep) -> Result<Outcome> {
    collect(&triangle_cases(sweep), |(n, m)| {
        let dinv_form = qt_catalan(*n, *m);
        let bounce_form = qt_catalan_bounce(*n, *m)?;
        let mut out = fail_if(dinv_form != bounce_form, || format!("q,t-Catalan forms differ for n={n} m={m}"));
        let paths = count_lattice_paths(*n, *m);
        if dinv_form.eval_at_ones() != paths {
            out.push(format!("C_{{{n},{m}}}(1,1) = {} but {paths} lattice paths", dinv_form.eval_at_ones()));
        }
        Ok(out)
    })
}

fn triangle_classes(sweep: &Sweep) -> Outcome {
    let cases = triangle_cases(sweep);
    let failures = cases
        .par_iter()
        .filter_map(|(n, m)| {
            let brute = count_weight_classes_brute_force(*n, *m);
            let formula = count_weight_classes_in_triangle(*n, *m);
            (formula != BigInt::from(brute)).then(|| format!("n={n} m={m}: {formula} classes by formula, {brute} found"))
        })
        .collect();
    (cases.len() as u64, failures)
}

fn falling_basis(sweep: &Sweep) -> Result<Outcome> {
    let mut cases: Vec<(IntPolynomial, u32)> = Vec::new();
    for m in ms(sweep) {
        for b in boards_up_to(sweep.max_cells.min(6)) {
            cases.push((mft_product(&b, m), m));
        }
        for coeffs in (0..4).map(|_| -2i64..=2).multi_cartesian_product() {
            cases.push((IntPolynomial::from_coeffs(coeffs), m));
        }
    }
    collect(&cases, |(p, m)| {
        let depth = p.degree().unwrap_or(0) as usize + 1;
        let back = to_falling_basis(p, *m, depth)?.to_polynomial();
        Ok(fail_if(&back != p, || format!("falling-basis round trip of {p} m={m} gives {back}")))
    })
}

fn hit_cases(sweep: &Sweep, max_nm: usize) -> Vec<(FerrersBoard, usize, u32)> {
    let mut out = Vec::new();
    for m in 1..=sweep.m_max as usize {
        for n in 1..=max_nm / m {
            out.extend(boards_in_rectangle(n, (n * m) as u32).into_iter().map(|b| (b, n, m as u32)));
        }
    }
    out
}

fn hit(sweep: &Sweep) -> Result<Outcome> {
    collect(&hit_cases(sweep, sweep.hit_max), |(b, n, m)| {
        let small = n * *m as usize <= sweep.pq_hit_max;
        let (n, m) = (*n, *m);
        let mut out = Vec::new();
        let level = m_level_hit_numbers(b, n, m)?;
        if level.total() != expected_total(HitFlavor::MLevel, n, m) {
            out.push(format!("m-level hits of {b} n={n} m={m} sum to {}", level.total()));
        }
        if small && level != m_level_hit_numbers_brute_force(b, n, m)? {
            out.push(format!("m-level hits of {b} n={n} m={m} differ from enumeration"));
        }
        if m == 1 {
            let classical = hit_numbers(b, n)?;
            if classical.total() != expected_total(HitFlavor::Classical, n, 1) {
                out.push(format!("hits of {b} n={n} sum to {}", classical.total()));
            }
            if small && classical != hit_numbers_brute_force(b, n)? {
                out.push(format!("hits of {b} n={n} differ from permutation enumeration"));
            }
        }
        if small && pq_at_ones(&pq_hit_numbers(b, n, m)?) != level.entries {
            out.push(format!("p,q hits of {b} n={n} m={m} at p=q=1 differ from m-level hits"));
        }
        Ok(out)
    })
}

fn hit_singleton_positivity(sweep: &Sweep) -> Result<Outcome> {
    let cases: Vec<_> = hit_cases(sweep, sweep.pq_hit_max).into_iter().filter(|(b, _, m)| is_singleton(b, *m)).collect();
    collect(&cases, |(b, n, m)| {
        let hits = pq_hit_numbers(b, *n, *m)?;
        Ok(hits
            .entries
            .iter()
            .enumerate()
            .filter_map(|(k, h)| {
                h.first_negative_term().map(|(e, c)| {
                    format!("h_{k} of singleton {b} n={n} m={m} has {c}*{}", LaurentPoly::format_monomial(h.vars(), e))
                })
            })
            .collect())
    })
}

/// Permutation statistics from the placement machinery against a direct inversion count,
/// and the sum of `p^{coinv} q^{inv}` against the p,q-factorial.
fn rodrigues(sweep: &Sweep) -> Result<Outcome> {
    let vars = VarSet::pq();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=sweep.n_max.max(6) {
        let square = CellSetBoard::rectangle(n as u32, n as u32);
        let perms: Vec<Vec<u32>> = (1..=n as u32).permutations(n).collect();
        let rows = perms
            .par_iter()
            .map(|perm| {
                let inv = perm.iter().tuple_combinations().filter(|(a, b)| a > b).count() as i64;
                let stats = placement_stats(&permutation_to_placement(perm)?, &square, 1)?;
                let coinv = (n * (n - 1) / 2) as i64 - inv;
                let bad = stats.inv_m as i64 != inv || stats.coinv_m as i64 != coinv;
                Ok((vec![coinv as i32, inv as i32], bad.then(|| format!("{perm:?}: stats {stats:?}, inv {inv}"))))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sum = LaurentPoly::zero(&vars);
        for (exps, bad) in rows {
            sum = &sum + &LaurentPoly::monomial(&vars, exps, 1);
            failures.extend(bad);
        }
        checked += perms.len() as u64;
        if sum != pq_factorial(n as u32) {
            failures.push(format!("sum over S_{n} is {sum}, not [{n}]!"));
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let sweep = Sweep { max_cells: 5, pq_max_cells: 4, m_max: 2, n_max: 3, hit_max: 4, pq_hit_max: 4 };
        for report in run_suites(&["all"], &sweep).unwrap() {
            assert!(report.checked > 0, "{} checked nothing", report.name);
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &Sweep::default()).is_err());
    }
}
