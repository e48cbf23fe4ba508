use eulercat::category::{
    build_from_matrix, category_from_matrix, compile, count_matrix, duplicate_object, is_category_matrix,
    random_category_matrix, skeleton, validate, Verdict,
};
use eulercat::euler::{
    char_data_polynomial, char_data_subsets, euler_characteristic, f_series_ratfunc, find_weighting, g_ratfunc,
    is_diagonalizable, is_weighting, mobius_chi, series_chi,
};
use eulercat::rational::int;
use eulercat::{CountMatrix, Side};
use proptest::prelude::*;

/// A random matrix the builder accepts.
fn builder_matrix(max_dim: usize, max_entry: u64) -> impl Strategy<Value = CountMatrix> {
    (1..=max_dim, 2..=max_entry, any::<u64>()).prop_map(|(m, k, seed)| random_category_matrix(m, k, seed))
}

/// Reflexive transitive matrices with zeros allowed off the diagonal.
fn sparse_matrix(max_dim: usize, max_entry: u64, min_diag: u64) -> impl Strategy<Value = CountMatrix> {
    (1..=max_dim)
        .prop_flat_map(move |n| {
            prop::collection::vec(0..=max_entry, n * n).prop_map(move |mut v| {
                for i in 0..n {
                    v[i * n + i] = v[i * n + i].max(min_diag);
                }
                CountMatrix::new(n, v).unwrap()
            })
        })
        .prop_filter("transitive", CountMatrix::is_transitive)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn both_paths_agree(z: &CountMatrix) -> bool {
    series_chi(z) == g_ratfunc(z).eval(&int(0)).into_value()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn builder_round_trip(z in builder_matrix(5, 3)) {
        let p = category_from_matrix(&z).unwrap();
        prop_assert_eq!(validate(&p), vec![]);
        prop_assert_eq!(count_matrix(&p).unwrap(), z);
    }

    #[test]
    fn chains_match_matrix_powers(z in sparse_matrix(3, 2, 2)) {
        prop_assume!(z.total() <= 12);
        let c = build_from_matrix(&z).unwrap();
        let step = z.to_qmatrix().shift_diagonal(&int(1));
        let series = f_series_ratfunc(&z).series(6).unwrap();
        for n in 0..=6usize {
            let chains = int(c.count_nondegenerate_chains(n) as i64);
            prop_assert_eq!(&chains, &step.pow(n as u32).entry_sum());
            prop_assert_eq!(&chains, &series.coefficients[n]);
        }
    }

    #[test]
    fn search_accepts_builder_outputs(z in sparse_matrix(3, 2, 2)) {
        prop_assume!(z.total() <= 12);
        match is_category_matrix(&z, z.total()) {
            Verdict::Yes(w) => {
                prop_assert_eq!(validate(&w), vec![]);
                prop_assert_eq!(count_matrix(&w).unwrap(), z);
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn category_matrices_are_reflexive_and_transitive(z in sparse_matrix(3, 2, 1)) {
        prop_assume!(z.total() <= 7);
        if let Verdict::Yes(w) = is_category_matrix(&z, z.total()) {
            let zw = count_matrix(&w).unwrap();
            prop_assert!(zw.is_reflexive() && zw.is_transitive());
            // skeleton is skeletal, idempotent, and has matching chi when defined
            let s = skeleton(&w).unwrap();
            prop_assert!(compile(&s).unwrap().is_skeletal());
            let ss = skeleton(&s).unwrap();
            prop_assert_eq!(count_matrix(&ss).unwrap(), count_matrix(&s).unwrap());
            let sz = count_matrix(&s).unwrap();
            if let (Some(a), Some(b)) = (euler_characteristic(&zw), euler_characteristic(&sz)) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn duplication_preserves_invertible_skeleton_value(
        z in builder_matrix(4, 5),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..=3),
    ) {
        let Some(expected) = mobius_chi(&z) else { return Ok(()) };
        let mut big = z;
        for ix in picks {
            big = duplicate_object(&big, ix.index(big.dim())).unwrap();
        }
        prop_assert_eq!(series_chi(&big), Some(expected.clone()));
        prop_assert_eq!(euler_characteristic(&big), Some(expected));
    }

    #[test]
    fn order_invariance(z in builder_matrix(5, 4), perm in (1usize..=5).prop_flat_map(permutation)) {
        prop_assume!(perm.len() == z.dim());
        let p = z.permute(&perm);
        prop_assert_eq!(euler_characteristic(&p), euler_characteristic(&z));
        prop_assert_eq!(series_chi(&p), series_chi(&z));
        prop_assert_eq!(g_ratfunc(&p), g_ratfunc(&z));
        prop_assert_eq!(f_series_ratfunc(&p), f_series_ratfunc(&z));
        prop_assert_eq!(is_diagonalizable(&p), is_diagonalizable(&z));
    }

    #[test]
    fn two_path_series_chi(z in sparse_matrix(5, 4, 1)) {
        prop_assert!(both_paths_agree(&z));
    }

    #[test]
    fn weighting_totals_agree_when_both_sides_exist(z in sparse_matrix(4, 3, 1)) {
        let (Some(w), Some(c)) = (find_weighting(&z, Side::Weighting), find_weighting(&z, Side::Coweighting)) else {
            return Ok(());
        };
        prop_assert!(is_weighting(&z, &w.values, Side::Weighting));
        prop_assert!(is_weighting(&z, &c.values, Side::Coweighting));
        prop_assert_eq!(w.total(), c.total());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn principal_minor_identity(z in builder_matrix(8, 4)) {
        let q = z.to_qmatrix();
        prop_assert_eq!(char_data_subsets(&q, 8).unwrap(), char_data_polynomial(&q));
    }

    #[test]
    fn one_sided_weighting_and_diagonalizable_give_series_chi(z in builder_matrix(5, 3)) {
        let one_sided = find_weighting(&z, Side::Weighting).is_some() || find_weighting(&z, Side::Coweighting).is_some();
        prop_assume!(one_sided && is_diagonalizable(&z));
        prop_assert!(series_chi(&z).is_some());
        prop_assert!(both_paths_agree(&z));
    }
}
