use mrook_core::board::{is_m_increasing, is_m_restricted, is_singleton, l_operator, minimal_bounding_n, fits_in};
use mrook_core::catalan::{area, bounce, dinv, dinv_pairwise, dinv_board, phi, BoundedBoard};
use mrook_core::equivalence::{
    equivalent_level, equivalent_weight, m_restricted_representative, relation_vector, Relation,
};
use mrook_core::factorization::{verify_mft, verify_mwft};
use mrook_core::hitnumbers::{expected_total, m_level_hit_numbers, HitFlavor};
use mrook_core::placement::{rook_vector, rook_vector_brute_force};
use mrook_core::polynomial::to_falling_basis;
use mrook_core::{FerrersBoard, IntPolynomial, LaurentPoly, VarSet};
use proptest::prelude::*;

fn board(max_cols: usize, max_height: u32) -> impl Strategy<Value = FerrersBoard> {
    prop::collection::vec(0..=max_height, 0..=max_cols).prop_map(|mut cols| {
        cols.sort_unstable();
        FerrersBoard::new(cols).unwrap()
    })
}

/// A board padded to `n` columns inside the triangular board of shape `(n, m)`.
fn bounded(n_max: usize, m_max: u32) -> impl Strategy<Value = BoundedBoard> {
    (1..=n_max, 1..=m_max)
        .prop_flat_map(|(n, m)| (Just(n), Just(m), prop::collection::vec(0.0f64..1.0, n)))
        .prop_map(|(n, m, fractions)| {
            let mut cols = vec![0u32];
            for (j, f) in fractions.iter().enumerate().skip(1) {
                let low = *cols.last().unwrap();
                let high = j as u32 * m;
                cols.push(low + ((high - low + 1) as f64 * f).floor().min((high - low) as f64) as u32);
            }
            BoundedBoard::new(&FerrersBoard::new(cols).unwrap(), n, m).unwrap()
        })
}

fn laurent(vars: &VarSet) -> impl Strategy<Value = LaurentPoly> {
    let vars = vars.clone();
    prop::collection::vec((prop::collection::vec(-3i32..=3, vars.len()), -4i64..=4), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(LaurentPoly::zero(&vars), |acc, (e, c)| &acc + &LaurentPoly::monomial(&vars, e, c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn board_text_round_trips(b in board(8, 20)) {
        let text = b.to_string();
        prop_assert_eq!(text.parse::<FerrersBoard>().unwrap(), b);
    }

    #[test]
    fn padding_is_undone_by_trim(b in board(6, 10), extra in 0usize..4) {
        let padded = b.pad(b.len() + extra);
        prop_assert_eq!(padded.trim(), b.trim());
        prop_assert_eq!(padded.cell_count(), b.cell_count());
    }

    #[test]
    fn counting_matches_enumeration(b in board(6, 9), m in 1u32..=4) {
        prop_assert_eq!(rook_vector(&b, m), rook_vector_brute_force(&b, m));
    }

    #[test]
    fn factorizations_hold(b in board(7, 12), m in 1u32..=4) {
        prop_assert!(verify_mft(&b, m).unwrap().matches);
        prop_assert!(verify_mwft(&b, m).unwrap().matches);
    }

    #[test]
    fn l_is_an_involution_on_singletons(b in board(7, 14), m in 1u32..=3) {
        prop_assume!(is_singleton(&b, m));
        prop_assert_eq!(l_operator(&l_operator(&b, m), m), b.trim());
    }

    #[test]
    fn l_exchanges_increasing_and_restricted(b in board(7, 14), m in 1u32..=3) {
        let l = l_operator(&b, m);
        if is_m_increasing(&b, m) {
            prop_assert!(is_m_restricted(&l, m));
        }
        if is_m_restricted(&b, m) {
            prop_assert!(is_m_increasing(&l, m));
        }
    }

    #[test]
    fn root_vectors_decide_equivalence(a in board(5, 6), b in board(5, 6), m in 1u32..=3) {
        let level = relation_vector(&a, m, Relation::Level) == relation_vector(&b, m, Relation::Level);
        prop_assert_eq!(equivalent_level(&a, &b, m).unwrap(), level);
        let weight = relation_vector(&a, m, Relation::Weight) == relation_vector(&b, m, Relation::Weight);
        prop_assert_eq!(equivalent_weight(&a, &b, m).unwrap(), weight);
    }

    #[test]
    fn restricted_representative_is_canonical(b in board(6, 10), m in 1u32..=3) {
        let rep = m_restricted_representative(&b, m).unwrap();
        prop_assert!(is_m_restricted(&rep, m));
        prop_assert!(equivalent_weight(&rep, &b, m).unwrap());
        prop_assert_eq!(m_restricted_representative(&rep, m).unwrap(), rep);
    }

    #[test]
    fn minimal_triangle_is_minimal(b in board(6, 12), m in 1u32..=3) {
        let n = minimal_bounding_n(&b, m);
        prop_assert!(fits_in(&b, n, m));
        prop_assert!(n >= 1);
        prop_assert!(n == 1 || !fits_in(&b, n - 1, m));
    }

    #[test]
    fn dinv_formulas_agree(v in prop::collection::vec(0i64..12, 0..8), m in 1u32..=4) {
        prop_assert_eq!(dinv(&v, m), dinv_pairwise(&v, m));
    }

    #[test]
    fn adjacent_swap_lowers_dinv_by_at_most_one(v in prop::collection::vec(0i64..12, 2..8), m in 1u32..=4, i in 0usize..7) {
        let i = i % (v.len() - 1);
        prop_assume!(v[i] > v[i + 1]);
        let mut w = v.clone();
        w.swap(i, i + 1);
        let drop = dinv(&v, m) - dinv(&w, m);
        prop_assert_eq!(drop, i64::from(v[i] - v[i + 1] <= m as i64));
    }

    #[test]
    fn phi_exchanges_statistics(bb in bounded(7, 3)) {
        let image = phi(&bb).unwrap();
        prop_assert_eq!(bounce(&image).unwrap() as i64, area(&bb));
        prop_assert_eq!(area(&image), dinv_board(&bb));
    }

    #[test]
    fn falling_basis_round_trips(coeffs in prop::collection::vec(-50i64..50, 0..7), m in 1u32..=4, slack in 0usize..3) {
        let p = IntPolynomial::from_coeffs(coeffs);
        let depth = p.degree().unwrap_or(0) as usize + slack;
        prop_assert_eq!(to_falling_basis(&p, m, depth).unwrap().to_polynomial(), p);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(&VarSet::pq()), b in laurent(&VarSet::pq()), c in laurent(&VarSet::pq())) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).eval_at_ones(), a.eval_at_ones() * b.eval_at_ones());
    }

    #[test]
    fn m_level_hits_sum_to_wreath_order(b in board(4, 8), m in 1u32..=2) {
        let n = 4;
        prop_assume!(b.max_height() <= n as u32 * m);
        let h = m_level_hit_numbers(&b, n, m).unwrap();
        prop_assert_eq!(h.total(), expected_total(HitFlavor::MLevel, n, m));
    }
}
