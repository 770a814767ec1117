mod common;

use common::{random_complex, rng};
use num_complex::Complex64;
use permchow::chow::{build_glynn, RowStructuredDecomposition, TargetSpec};
use permchow::monoid::{all_permutations, factorial, monoid_size};
use permchow::orbital::{
    build_full_system, build_reduced_system, orbital_exponent_table, planted_full_system, residual, solve,
    solve_system, EquationKind, SolveField, SolverConfig, SystemModel,
};
use permchow::SquareMatrix;
use rand::Rng;

fn random_decomposition(r: &mut impl Rng, n: usize, rho: usize, field: SolveField) -> RowStructuredDecomposition<Complex64> {
    let b = (0..rho * n * n)
        .map(|_| match field {
            SolveField::Real => Complex64::new(r.random_range(-1.0..1.0), 0.0),
            SolveField::Complex => random_complex(r),
        })
        .collect();
    RowStructuredDecomposition::new(n, rho, b).unwrap()
}

fn finite_difference_error(model: &SystemModel, params: &[f64]) -> f64 {
    let h = 1e-6;
    let jac = model.jacobian(params).unwrap();
    let mut worst = 0.0f64;
    for k in 0..params.len() {
        let mut up = params.to_vec();
        let mut down = params.to_vec();
        up[k] += h;
        down[k] -= h;
        let ru = model.residual(&up).unwrap();
        let rd = model.residual(&down).unwrap();
        for e in 0..ru.len() {
            let fd = (ru[e] - rd[e]) / (2.0 * h);
            worst = worst.max((fd - jac[(e, k)]).abs() / jac[(e, k)].abs().max(1.0));
        }
    }
    worst
}

#[test]
fn jacobian_matches_finite_differences() {
    let mut r = rng(8);
    for field in [SolveField::Real, SolveField::Complex] {
        for n in 2..=3 {
            let target = TargetSpec::signed_default(n);
            for system in [build_full_system(n, &target).unwrap(), build_reduced_system(n, &target).unwrap()] {
                for rho in 1..=3 {
                    let model = SystemModel::new(n, rho, field, &system).unwrap();
                    let d = random_decomposition(&mut r, n, rho, field);
                    let params = model.params(&d).unwrap();
                    let err = finite_difference_error(&model, &params);
                    assert!(err < 1e-5, "{field:?} n={n} rho={rho}: {err}");
                }
            }
        }
    }
}

#[test]
fn system_shapes() {
    for n in 1..=4 {
        let t = TargetSpec::permanent(n);
        let full = build_full_system(n, &t).unwrap();
        assert_eq!(full.len() as u64, monoid_size(n));
        let reduced = build_reduced_system(n, &t).unwrap();
        let classes = reduced.len() / 2;
        assert_eq!(reduced.len(), 2 * classes);
        assert!(reduced[..classes].iter().all(|e| e.kind == EquationKind::OrbitSum));
        assert!(reduced[classes..].iter().all(|e| e.kind == EquationKind::Representative));
        let covered: usize = reduced[..classes].iter().map(|e| e.functions.len()).sum();
        assert_eq!(covered as u64, monoid_size(n));
    }
}

#[test]
fn reduced_residuals_are_sums_of_full_residuals() {
    let mut r = rng(21);
    for n in 2..=4 {
        let t = TargetSpec::signed_default(n);
        let full = build_full_system(n, &t).unwrap();
        let reduced = build_reduced_system(n, &t).unwrap();
        let classes = reduced.len() / 2;
        let d = random_decomposition(&mut r, n, 2, SolveField::Complex);
        let rf = residual(&d, &full, SolveField::Complex).unwrap();
        let rr = residual(&d, &reduced, SolveField::Complex).unwrap();
        let (nf, nr) = (full.len(), reduced.len());
        for (e, eq) in reduced.iter().enumerate() {
            for (part, (of, or)) in [(0, 0), (nf, nr)].into_iter().enumerate() {
                let sum: f64 = eq.functions.iter().map(|&k| rf[of + k as usize]).sum();
                assert!((sum - rr[or + e]).abs() < 1e-9, "n={n} eq={e} part={part}");
            }
            if e >= classes {
                assert_eq!(eq.functions.len(), 1);
            }
        }
    }
}

#[test]
fn permanent_certificate_solves_both_systems() {
    for n in 2..=4 {
        let d = build_glynn(n).to_complex();
        let t = TargetSpec::permanent(n);
        for system in [build_full_system(n, &t).unwrap(), build_reduced_system(n, &t).unwrap()] {
            let r = residual(&d, &system, SolveField::Real).unwrap();
            assert!(r.iter().all(|x| x.abs() < 1e-12));
        }
    }
}

#[test]
fn orbit_sum_residuals_are_invariant_under_relabelling() {
    let mut r = rng(4);
    for n in 2..=3 {
        let t = TargetSpec::signed_default(n);
        let reduced = build_reduced_system(n, &t).unwrap();
        let classes = reduced.len() / 2;
        let d = random_decomposition(&mut r, n, 2, SolveField::Complex);
        let base = residual(&d, &reduced, SolveField::Complex).unwrap();
        for sigma in all_permutations(n) {
            for gamma in all_permutations(n) {
                let (si, gi) = (sigma.inverse().unwrap(), gamma.inverse().unwrap());
                let mut moved = d.clone();
                for u in 0..d.rho() {
                    for i in 0..n {
                        for j in 0..n {
                            moved.set(u, i, j, *d.get(u, si.apply(i), gi.apply(j)));
                        }
                    }
                }
                let other = residual(&moved, &reduced, SolveField::Complex).unwrap();
                let half = reduced.len();
                for e in 0..classes {
                    assert!((base[e] - other[e]).abs() < 1e-9);
                    assert!((base[half + e] - other[half + e]).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn rank_one_signed_two_is_the_closed_form() {
    let mut cfg = SolverConfig::new(1);
    cfg.seed = 1;
    cfg.restarts = 8;
    let report = solve(2, &TargetSpec::signed_default(2), &cfg).unwrap();
    assert!(report.converged);
    let mut r = rng(3);
    for _ in 0..20 {
        let a = SquareMatrix::from_fn(2, |_, _| random_complex(&mut r)).unwrap();
        let closed = (a.get(0, 0) - a.get(0, 1)) * (a.get(1, 1) - a.get(1, 0));
        assert!((report.decomposition.evaluate(&a).unwrap() - closed).norm() < 1e-8);
    }
}

#[test]
fn planted_system_is_recovered() {
    let mut r = rng(17);
    let planted = random_decomposition(&mut r, 2, 2, SolveField::Real);
    let system = planted_full_system(&planted).unwrap();
    let mut cfg = SolverConfig::new(2);
    cfg.restarts = 10;
    let report = solve_system(2, &system, &cfg).unwrap();
    assert!(report.converged, "residual {}", report.best_residual);
    let check = residual(&report.decomposition, &system, SolveField::Real).unwrap();
    assert!(check.iter().all(|x| x.abs() < 1e-8));
}

#[test]
fn solves_are_deterministic() {
    let target = TargetSpec::signed_default(3);
    let mut cfg = SolverConfig::new(2);
    cfg.seed = 42;
    cfg.restarts = 6;
    cfg.max_iters = 60;
    let a = solve(3, &target, &cfg).unwrap();
    let b = solve(3, &target, &cfg).unwrap();
    cfg.parallel = false;
    let c = solve(3, &target, &cfg).unwrap();
    assert_eq!(a.decomposition, b.decomposition);
    assert_eq!(a.decomposition, c.decomposition);
    assert_eq!(a.restart_index, c.restart_index);
    assert_eq!(a.restarts, c.restarts);
}

#[test]
fn reduced_only_convergence_requires_full_verification() {
    let mut cfg = SolverConfig::new(1);
    cfg.reduced_only = true;
    cfg.restarts = 4;
    let report = solve(3, &TargetSpec::permanent(3), &cfg).unwrap();
    let verification = report.verification.as_ref().unwrap();
    assert_eq!(verification.checked, 27);
    assert!(!report.converged || verification.passed);
}

#[test]
fn orbital_table_slices_are_bijections() {
    let n = 3;
    let table = orbital_exponent_table(n).unwrap();
    assert_eq!(table.slices(), factorial(n) * factorial(n));
    for i in 0..n {
        for j in 0..n {
            assert_eq!(table.entry(i, j).len() as u128, table.slices());
        }
    }
    for s in 0..table.slices() {
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let t = table.entry(i, j).iter().find(|t| t.slice == s).unwrap();
                rows.push((i, j, t.row, t.col));
            }
        }
        // (i, j) ↦ (σ(i), γ(j)) is a bijection of the grid.
        let mut targets: Vec<_> = rows.iter().map(|&(_, _, r, c)| (r, c)).collect();
        targets.sort();
        targets.dedup();
        assert_eq!(targets.len(), n * n);
        // Row images depend only on i, column images only on j.
        for &(i, _, r, _) in &rows {
            assert!(rows.iter().filter(|x| x.0 == i).all(|x| x.2 == r));
        }
        for &(_, j, _, c) in &rows {
            assert!(rows.iter().filter(|x| x.1 == j).all(|x| x.3 == c));
        }
    }
    assert!(orbital_exponent_table(5).unwrap_err().is_guard());
}
