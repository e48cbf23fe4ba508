//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eulercat::category::{
    build_from_matrix, duplicate_object, is_category_matrix, random_category_matrix, NoReason, Verdict,
    DEFAULT_BUDGET,
};
use eulercat::euler::{
    char_data_polynomial, char_data_subsets, euler_characteristic, f_series_ratfunc, find_weighting, g_ratfunc,
    is_diagonalizable, is_weighting, mobius_chi, s_adj_permutation_oracle, series_chi,
};
use eulercat::rational::{frac, int};
use eulercat::{CountMatrix, Poly, QMatrix, RatFunc, Rational, Side, Var};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rf(num: &[i64], den: &[i64], var: Var) -> RatFunc {
    RatFunc::new(Poly::from_ints(num, var), Poly::from_ints(den, var)).unwrap()
}

fn m(rows: &[&[u64]]) -> CountMatrix {
    CountMatrix::from_rows(rows)
}

fn g_at_zero(z: &CountMatrix) -> Option<Rational> {
    g_ratfunc(z).eval(&int(0)).into_value()
}

fn both_paths(z: &CountMatrix) -> Result<Option<Rational>, String> {
    let a = series_chi(z);
    let b = g_at_zero(z);
    ensure!(a == b, "e_l/d_l gives {a:?}, g(0) gives {b:?}");
    Ok(a)
}

fn monoids() -> Outcome {
    for o in [1u64, 2, 3, 6] {
        let z = m(&[&[o]]);
        let oi = o as i64;
        let f = f_series_ratfunc(&z);
        ensure!(f == rf(&[1], &[1, 1 - oi], Var::T), "order {o}: f = {f}");
        ensure!(both_paths(&z)? == Some(frac(1, oi)), "order {o}: chi_sigma");
        ensure!(mobius_chi(&z) == Some(frac(1, oi)), "order {o}: mobius");
        ensure!(euler_characteristic(&z) == Some(frac(1, oi)), "order {o}: weighting");
    }
    Ok("o = 1, 2, 3, 6".into())
}

fn four_object() -> Outcome {
    let z = m(&[&[2, 2, 1, 1], &[2, 2, 1, 2], &[1, 1, 1, 1], &[0, 0, 0, 1]]);
    ensure!(find_weighting(&z, Side::Coweighting).is_some(), "no coweighting");
    ensure!(find_weighting(&z, Side::Weighting).is_none(), "has a weighting");
    ensure!(euler_characteristic(&z).is_none(), "chi defined");
    ensure!(is_diagonalizable(&z), "not diagonalizable");
    ensure!(both_paths(&z)? == Some(int(1)), "chi_sigma != 1");
    Ok("coweighting only, diagonalizable, chi_sigma = 1".into())
}

fn new_not_old() -> Outcome {
    let z = m(&[&[6, 6, 15, 9], &[6, 6, 6, 6], &[6, 6, 9, 7], &[6, 30, 9, 15]]);
    let g = g_ratfunc(&z);
    ensure!(g == rf(&[4, 4], &[0, 36, -1], Var::U), "g = {g}");
    let w = [frac(1, 6), int(0), int(0), int(0)];
    let c = [int(0), frac(1, 6), int(0), int(0)];
    ensure!(is_weighting(&z, &w, Side::Weighting), "weighting fails");
    ensure!(is_weighting(&z, &c, Side::Coweighting), "coweighting fails");
    ensure!(euler_characteristic(&z) == Some(frac(1, 6)), "chi");
    ensure!(both_paths(&z)?.is_none(), "chi_sigma defined");
    Ok("chi = 1/6, chi_sigma undefined on both paths".into())
}

fn union_not_everything() -> Outcome {
    let z = m(&[&[2, 4], &[1, 2]]);
    let g = g_ratfunc(&z);
    ensure!(g == rf(&[1, 2], &[0, 4, -1], Var::U), "g = {g}");
    ensure!(find_weighting(&z, Side::Weighting).is_none(), "has a weighting");
    ensure!(find_weighting(&z, Side::Coweighting).is_none(), "has a coweighting");
    ensure!(euler_characteristic(&z).is_none(), "chi defined");
    ensure!(both_paths(&z)?.is_none(), "chi_sigma defined");
    Ok("g = (1 + 2u)/(u(4 - u)), chi and chi_sigma undefined".into())
}

fn disagreement() -> Outcome {
    let z = m(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]]);
    ensure!(euler_characteristic(&z) == Some(frac(1, 2)), "chi");
    ensure!(both_paths(&z)? == Some(frac(1, 3)), "chi_sigma");
    let g = g_ratfunc(&z);
    ensure!(g == rf(&[3], &[9, -1], Var::U), "g = {g}");
    Ok("chi = 1/2, chi_sigma = 1/3".into())
}

fn not_invariant() -> Outcome {
    let za = m(&[&[3, 3], &[2, 2]]);
    ensure!(g_ratfunc(&za) == rf(&[2], &[5, -1], Var::U), "g_A");
    ensure!(both_paths(&za)? == Some(frac(2, 5)), "chi_sigma_A");
    let zb = duplicate_object(&za, 1).map_err(|e| e.to_string())?;
    ensure!(zb == m(&[&[3, 3, 3], &[2, 2, 2], &[2, 2, 2]]), "Z_B = {zb:?}");
    ensure!(g_ratfunc(&zb) == rf(&[3], &[7, -1], Var::U), "g_B");
    ensure!(both_paths(&zb)? == Some(frac(3, 7)), "chi_sigma_B");
    Ok("2/5 before duplication, 3/7 after".into())
}

fn sharpness() -> Outcome {
    let z = m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]);
    ensure!(find_weighting(&z, Side::Weighting).is_some(), "no weighting");
    ensure!(!is_diagonalizable(&z), "diagonalizable");
    ensure!(g_ratfunc(&z) == rf(&[2, 3], &[0, 8, -1], Var::U), "g");
    ensure!(both_paths(&z)?.is_none(), "chi_sigma defined");

    let z = m(&[&[2, 3], &[2, 3]]);
    ensure!(g_ratfunc(&z) == rf(&[2], &[5, -1], Var::U), "g");
    ensure!(both_paths(&z)? == Some(frac(2, 5)), "chi_sigma");
    let w1 = [frac(1, 2), int(0)];
    let w2 = [int(0), frac(1, 3)];
    ensure!(is_weighting(&z, &w1, Side::Weighting), "(1/2, 0)");
    ensure!(is_weighting(&z, &w2, Side::Weighting), "(0, 1/3)");
    Ok("weighting totals 1/2 and 1/3 both occur".into())
}

fn non_category() -> Outcome {
    let start = Instant::now();
    let v = is_category_matrix(&m(&[&[1, 2], &[1, 2]]), DEFAULT_BUDGET);
    let took = start.elapsed();
    ensure!(v == Verdict::No(NoReason::Exhausted), "verdict {v:?}");
    ensure!(took < Duration::from_secs(1), "took {took:?}");
    Ok(format!("refuted in {} ms", took.as_millis()))
}

fn principal_minor_identity() -> Outcome {
    let mut n = 0;
    for seed in 0..240u64 {
        let z = random_category_matrix(1 + (seed % 8) as usize, 2 + seed % 5, seed);
        let q = z.to_qmatrix();
        let by_subsets = char_data_subsets(&q, 8).map_err(|e| e.to_string())?;
        ensure!(by_subsets == char_data_polynomial(&q), "seed {seed}: {z:?}");
        n += 1;
    }
    Ok(format!("{n} matrices, m <= 8"))
}

fn inflation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut n = 0;
    let mut seed = 0u64;
    while n < 120 {
        seed += 1;
        let base = random_category_matrix(rng.random_range(1..=4), rng.random_range(2..=5), seed);
        let Some(expected) = mobius_chi(&base) else { continue };
        let mut z = base.clone();
        for _ in 0..rng.random_range(1..=3) {
            let i = rng.random_range(0..z.dim());
            z = duplicate_object(&z, i).map_err(|e| e.to_string())?;
        }
        ensure!(both_paths(&z)? == Some(expected.clone()), "chi_sigma of {z:?}");
        ensure!(euler_characteristic(&z) == Some(expected), "chi of {z:?}");
        n += 1;
    }
    Ok(format!("{n} inflated matrices"))
}

fn one_sided_diagonalizable() -> Outcome {
    let (mut n, mut singular) = (0, 0);
    for seed in 0..2000u64 {
        if n >= 220 {
            break;
        }
        let z = random_category_matrix(1 + (seed % 5) as usize, 2 + seed % 2, seed);
        let one_sided =
            find_weighting(&z, Side::Weighting).is_some() || find_weighting(&z, Side::Coweighting).is_some();
        if !one_sided || !is_diagonalizable(&z) {
            continue;
        }
        ensure!(both_paths(&z)?.is_some(), "chi_sigma undefined for {z:?}");
        n += 1;
        if mobius_chi(&z).is_none() {
            singular += 1;
        }
    }
    ensure!(n >= 200, "only {n} qualifying matrices");
    Ok(format!("{n} matrices, {singular} singular"))
}

/// Every reflexive transitive matrix with diagonal in 2..=3, off-diagonal
/// entries in 0..=2, at most three objects and at most 12 arrows.
fn small_builder_matrices() -> Vec<CountMatrix> {
    let mut out = Vec::new();
    for dim in 1..=3usize {
        let cells = dim * dim;
        let mut code = vec![0u64; cells];
        'odometer: loop {
            let entries: Vec<u64> =
                (0..cells).map(|k| if k / dim == k % dim { 2 + code[k] } else { code[k] }).collect();
            let z = CountMatrix::new(dim, entries).unwrap();
            if z.total() <= 12 && z.is_transitive() {
                out.push(z);
            }
            for k in 0..cells {
                code[k] += 1;
                let top = if k / dim == k % dim { 2 } else { 3 };
                if code[k] < top {
                    continue 'odometer;
                }
                code[k] = 0;
            }
            break;
        }
    }
    out
}

fn nerve_oracles() -> Outcome {
    let zs = small_builder_matrices();
    for z in &zs {
        let c = build_from_matrix(z).map_err(|e| e.to_string())?;
        let series = f_series_ratfunc(z).series(6).map_err(|e| e.to_string())?;
        let step = z.to_qmatrix().shift_diagonal(&int(1));
        for n in 0..=6usize {
            let chains = int(c.count_nondegenerate_chains(n) as i64);
            let power = step.pow(n as u32).entry_sum();
            ensure!(chains == power, "{z:?}, n = {n}: {chains} chains vs {power}");
            ensure!(chains == series.coefficients[n], "{z:?}, n = {n}: series");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut tested = 0;
    for dim in 0..=5usize {
        for _ in 0..40 {
            let mut q = QMatrix::from_fn(dim, |_, _| int(rng.random_range(-3..=3)));
            if dim >= 2 && rng.random_bool(0.3) {
                for j in 0..dim {
                    let v = q.get(0, j).clone();
                    q.set(1, j, v);
                }
            }
            let oracle = s_adj_permutation_oracle(&q).map_err(|e| e.to_string())?;
            ensure!(oracle == q.adjugate().entry_sum(), "adjugate sum of {q}");
            tested += 1;
        }
    }
    Ok(format!("{} categories, {tested} permutation-oracle matrices", zs.len()))
}

fn substitution() -> Outcome {
    let mut zs = vec![
        m(&[&[1]]),
        m(&[&[6]]),
        m(&[&[2, 2, 1, 1], &[2, 2, 1, 2], &[1, 1, 1, 1], &[0, 0, 0, 1]]),
        m(&[&[6, 6, 15, 9], &[6, 6, 6, 6], &[6, 6, 9, 7], &[6, 30, 9, 15]]),
        m(&[&[2, 4], &[1, 2]]),
        m(&[&[2, 2, 2], &[2, 2, 2], &[2, 8, 5]]),
        m(&[&[3, 3], &[2, 2]]),
        m(&[&[3, 3, 3], &[2, 2, 2], &[2, 2, 2]]),
        m(&[&[2, 3, 5], &[2, 3, 5], &[2, 1, 3]]),
        m(&[&[2, 3], &[2, 3]]),
    ];
    zs.extend((0..60u64).map(|s| random_category_matrix(1 + (s % 6) as usize, 2 + s % 4, 1000 + s)));
    zs.extend(small_builder_matrices());
    for z in &zs {
        let f = f_series_ratfunc(z);
        let h = g_ratfunc(z).substitute_mobius().map_err(|e| e.to_string())?;
        ensure!(h == f, "{z:?}: f = {f}, substituted g = {h}");
    }
    Ok(format!("f = (1 - u) g on {} matrices", zs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("monoids", monoids),
        ("four-object category", four_object),
        ("new does not contain old", new_not_old),
        ("union is not everything", union_not_everything),
        ("disagreement on intersection", disagreement),
        ("not equivalence-invariant", not_invariant),
        ("sharpness examples", sharpness),
        ("non-category matrix", non_category),
        ("principal-minor identity", principal_minor_identity),
        ("duplication with invertible skeleton", inflation),
        ("one-sided weighting and diagonalizable", one_sided_diagonalizable),
        ("nerve and adjugate oracles", nerve_oracles),
        ("rationality via substitution", substitution),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
