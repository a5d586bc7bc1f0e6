use specpoly::spectra::{
    default_fd_step, eigenfunction, ode_residual, ode_residual_with_energy, route_consistency, EigenSpec,
    EigenfunctionHandle, Route,
};

#[test]
fn closed_forms_solve_the_equation() {
    let xs = [-1.7, -0.9, -0.4, 0.35, 0.8, 1.3, 2.1];
    for n_exp in -1..=4 {
        let range = if n_exp % 2 == 0 { 0..=5 } else { -3..=3 };
        for n in range {
            let s = EigenSpec::new(n_exp, n).unwrap();
            for &x in &xs {
                let r = ode_residual(&s, x, default_fd_step(x)).unwrap();
                assert!(r < 1e-6, "N={n_exp} n={n} x={x}: {r:.2e}");
            }
        }
    }
}

#[test]
fn residual_detects_wrong_energy() {
    let s = EigenSpec::new(1, 0).unwrap();
    let r = ode_residual_with_energy(&s, 3.01, 0.9, default_fd_step(0.9)).unwrap();
    assert!(r > 1e-4);
}

#[test]
fn handles_share_normalization() {
    let s = EigenSpec::new(1, 2).unwrap();
    let tricomi = EigenfunctionHandle::new(s, Route::TricomiForm).unwrap();
    let canonical = EigenfunctionHandle::canonical(s);
    for x in [0.5, 1.0, 2.0] {
        let (a, b) = (tricomi.eval(x).unwrap(), canonical.eval(x).unwrap());
        assert!((a - b).abs() < 1e-9 * b.abs().max(1e-3));
        assert!((eigenfunction(&s, x).unwrap() - b).abs() < 1e-9 * b.abs().max(1e-3));
    }
}

#[test]
fn bateman_and_bessel_routes_agree() {
    let xs: Vec<f64> = (0..=10).map(|i| 0.5 + 0.25 * i as f64).collect();
    for n in -2..=2 {
        let s = EigenSpec::new(-1, n).unwrap();
        let c = route_consistency(&s, Route::Bateman, Route::BesselK0Form, &xs).unwrap();
        assert!(c.spread < 1e-8, "n={n}: {}", c.spread);
    }
}
