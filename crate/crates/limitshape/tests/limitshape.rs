use groth_limitshape::*;
use groth_core::Complex64;
use proptest::prelude::*;

fn p(x: f64, y: f64, beta: f64) -> AsymptoticParams {
    AsymptoticParams::new(x, y, beta).unwrap()
}

fn lens() -> AsymptoticParams {
    p(1.0 / 3.0, 0.2, -6.0)
}

fn staircase() -> AsymptoticParams {
    p(1.0 / 3.0, 0.2, -25.0)
}

#[test]
fn regime_is_checked() {
    assert!(AsymptoticParams::new(1.0, 1.0, -1.0).is_err());
    assert!(AsymptoticParams::new(0.5, 0.5, 0.1).is_err());
    assert!(AsymptoticParams::new(-0.5, 0.5, -1.0).is_err());
    let q = AsymptoticParams::with_positive_beta(1.0 / 3.0, 0.2, 1.0 / 12.0).unwrap();
    assert!(q.is_conjectural());
    assert!(AsymptoticParams::with_positive_beta(1.0 / 3.0, 0.2, 0.5).is_err());
}

#[test]
fn beta_is_a_root_on_the_bottom_row() {
    for params in [lens(), staircase(), p(0.01, 0.01, -0.001)] {
        for xi in [0.0, 0.3, 1.0, 2.5, 7.0] {
            let roots = cubic_roots(&params, xi, 1.0).unwrap();
            let best = roots.iter().map(|z| (z - params.beta).norm()).fold(f64::INFINITY, f64::min);
            assert!(best < 1e-9 * params.beta.abs().max(1.0), "ξ = {xi}: {roots:?}");
        }
    }
}

#[test]
fn roots_have_small_residuals_and_pair_up() {
    let params = lens();
    for i in 0..40 {
        for j in 0..=10 {
            let (xi, tau) = (0.1 * i as f64, 0.1 * j as f64);
            let c = cubic_coefficients(&params, xi, tau);
            let roots = cubic_roots(&params, xi, tau).unwrap();
            for z in &roots {
                assert!(relative_residual(&c, *z) < 1e-12, "({xi}, {tau}): {z}");
                if z.im.abs() > 1e-9 {
                    assert!(roots.iter().any(|w| (w - z.conj()).norm() < 1e-8));
                }
            }
        }
    }
}

#[test]
fn all_zero_cubic_is_rejected() {
    assert_eq!(solve_cubic([0.0; 4]), Err(LimitShapeError::DegenerateAllZero));
}

#[test]
fn classification_examples() {
    let params = lens();
    for tau in [0.1, 0.5, 0.9] {
        assert_eq!(classify_point(&params, 50.0, tau).unwrap().zone, Zone::Ia);
    }
    let lp = classify_point(&params, 1.0, 0.5).unwrap();
    assert_eq!(lp.zone, Zone::Liquid);
    assert!(lp.z_c.im > 0.0);
    assert!(discriminant(cubic_coefficients(&params, 1.0, 0.5)) < 0.0);

    let params = staircase();
    for k in 1..20 {
        let row = HeightRow::new(&params, k as f64 / 20.0).unwrap();
        assert!(row.pieces().iter().any(|piece| piece.zone == Zone::II), "τ = {}", row.tau());
    }
}

#[test]
fn zone_tags_match_the_double_root() {
    for params in [lens(), staircase()] {
        for k in 1..10 {
            let row = HeightRow::new(&params, k as f64 / 10.0).unwrap();
            for piece in row.pieces() {
                match piece.zone {
                    Zone::Liquid => {}
                    Zone::II => assert!(params.beta < piece.z && piece.z <= 0.0),
                    Zone::III => assert!(piece.z <= params.beta),
                    Zone::Ia | Zone::Ib => assert!(piece.z > 0.0),
                }
            }
        }
    }
}

#[test]
fn frozen_gradients_are_vertices() {
    let params = lens();
    let at = |zone, z: f64| height_gradient(&LiquidPoint { xi: 0.0, tau: 0.5, z_c: Complex64::new(z, 0.0), zone }, &params);
    assert_eq!(at(Zone::II, -1.0), (-1.0, -1.0));
    assert_eq!(at(Zone::III, -10.0), (-1.0, 0.0));
    assert_eq!(at(Zone::Ia, 1.0), (0.0, 0.0));
    let lp = classify_point(&params, 1.0, 0.5).unwrap();
    let (gx, gt) = height_gradient(&lp, &params);
    assert!(-1.0 < gx && gx < 0.0 && -1.0 < gt && gt < 0.0 && gt > gx);
}

fn in_triangle((gx, gt): (f64, f64)) -> bool {
    let e = 1e-12;
    (-1.0 - e..=e).contains(&gx) && (-1.0 - e..=e).contains(&gt) && gt >= gx - e
}

#[test]
fn gradient_triangle_on_a_grid() {
    for params in [lens(), staircase()] {
        for i in 0..=60 {
            for j in 0..=20 {
                let lp = classify_point(&params, 0.1 * i as f64, j as f64 / 20.0).unwrap();
                assert!(in_triangle(height_gradient(&lp, &params)), "{lp:?}");
            }
        }
    }
}

#[test]
fn surface_is_a_height_function() {
    for params in [lens(), staircase()] {
        let sg = height_surface(&params, &uniform_taus(20), None, 0.02).unwrap();
        for (i, row) in sg.h.iter().enumerate() {
            assert!(row.iter().all(|v| (-1e-9..=1.0 + 1e-9).contains(v)));
            assert!(row.windows(2).all(|w| w[1] <= w[0] + 1e-8), "row {i}");
            assert!(row.last().unwrap().abs() < 1e-12);
            assert!((row[0] - 1.0).abs() < 1e-8, "𝔥(0, {}) = {}", sg.tau_grid[i], row[0]);
        }
        for i in 1..sg.h.len() {
            assert!(sg.h[i].iter().zip(&sg.h[i - 1]).all(|(a, b)| *a <= b + 1e-8));
        }
    }
}

#[test]
fn surface_self_converges() {
    let params = lens();
    let taus = [0.25, 0.5, 0.75];
    let coarse = height_surface(&params, &taus, Some(12.0), 0.05).unwrap();
    let fine = height_surface(&params, &taus, Some(12.0), 0.025).unwrap();
    for (a, b) in coarse.h.iter().zip(&fine.h) {
        for (k, v) in a.iter().enumerate() {
            assert!((v - b[2 * k]).abs() < 1e-6);
        }
    }
}

#[test]
fn boundary_tangencies() {
    for params in [lens(), staircase()] {
        let bp = boundary_point(&params, params.beta).unwrap();
        assert!((bp.tau - 1.0).abs() < 1e-12);
        let far = boundary_point(&params, 1e7).unwrap();
        assert!(far.xi.abs() < 1e-5 && far.tau < 1.0);
        assert!(matches!(boundary_point(&params, params.y), Err(LimitShapeError::PoleProximity(_))));
    }
}

#[test]
fn boundary_points_are_double_roots() {
    for params in [lens(), staircase(), p(0.01, 0.01, -0.001)] {
        let pts = frozen_boundary(&params, &boundary_z_grid(&params, 2000));
        assert!(pts.len() > 500, "{}", pts.len());
        for bp in &pts {
            assert!(bp.xi >= 0.0 && (0.0..=1.0).contains(&bp.tau));
            let (r0, r1) = double_root_residuals(&params, bp);
            assert!(r0 < 1e-8 && r1 < 1e-8, "{bp:?}: {r0} {r1}");
        }
    }
}

#[test]
fn cross_section_and_staircase_facet() {
    let params = staircase();
    let taus = uniform_taus(200);
    let shape = LimitShape::new(&params, &taus).unwrap();
    assert_eq!(shape.l[200], 0.0);
    assert!(shape.l.windows(2).all(|w| w[1] <= w[0] + 1e-9));
    let mut facet = 0;
    for i in 1..199 {
        if classify_point(&params, shape.l[i], taus[i]).unwrap().zone == Zone::II
            && classify_point(&params, shape.l[i + 1], taus[i + 1]).unwrap().zone == Zone::II
        {
            let d = (shape.l[i + 1] - shape.l[i]) / (taus[i + 1] - taus[i]);
            assert!((d + 2.0).abs() < 1e-6, "τ = {}: 𝔏′ = {d}", taus[i]);
            facet += 1;
        }
    }
    assert!(facet > 20);
    let flat = shape.w.windows(2).filter(|w| (w[1].1 - w[0].1).abs() < 1e-9 && w[1].0 > w[0].0).count();
    assert!(flat >= facet);
}

#[test]
fn rotated_shape_is_lipschitz_and_above_the_corner() {
    for params in [lens(), staircase()] {
        let shape = LimitShape::new(&params, &uniform_taus(100)).unwrap();
        let end = shape.w.iter().find(|w| (w.0 + 1.0).abs() < 1e-12).unwrap();
        assert!((end.1 - 1.0).abs() < 1e-12);
        for (u, w) in &shape.w {
            assert!(*w >= u.abs() - 1e-9);
        }
        for pair in shape.w.windows(2) {
            let du = pair[1].0 - pair[0].0;
            if du > 1e-9 {
                assert!((pair[1].1 - pair[0].1).abs() <= (1.0 + 1e-6) * du);
            }
        }
    }
}

#[test]
fn grid_and_shape_agree() {
    let params = lens();
    let taus = uniform_taus(20);
    let mut sg = height_surface(&params, &taus, None, 0.05).unwrap();
    sg.solve().unwrap();
    let shape = LimitShape::new(&params, &taus).unwrap();
    assert_eq!(sg.l, shape.l);
    for (row, (&t, &l)) in sg.rows().iter().zip(taus.iter().zip(&sg.l)) {
        assert!((row.h(l) - t).abs() < 1e-9);
    }
}

#[test]
fn burgers_equation_holds_to_second_order() {
    let params = lens();
    let r1 = burgers_residual(&params, 1.0, 0.5, 1e-3).unwrap();
    let r2 = burgers_residual(&params, 1.0, 0.5, 5e-4).unwrap();
    assert!((r1 / r2 - 4.0).abs() < 0.2, "{r1} {r2}");
    assert!(burgers_residual(&params, 1.0, 0.5, 1e-4).unwrap() < 1e-4);
    assert!(matches!(burgers_residual(&params, 50.0, 0.5, 1e-4), Err(LimitShapeError::StencilLeavesLiquid { .. })));
}

#[test]
fn cusp_runs_along_the_diagonal() {
    let ratio = |b: f64| {
        let c = cusp_point(&p(1.0 / 3.0, 0.2, b)).unwrap();
        (c.xi / (1.0 - c.tau) - 1.0).abs()
    };
    let (a, b, c) = (ratio(-10.0), ratio(-100.0), ratio(-1000.0));
    assert!(a > b && b > c && c < 0.01, "{a} {b} {c}");
}

#[test]
fn vkls_regression() {
    let d = vkls_deviation(&p(0.01, 0.01, -0.001), 200).unwrap();
    assert!((d - 0.06).abs() < 0.02, "{d}");
    assert!(vkls_omega(0.0) > 1.27 && vkls_omega(3.0) == 3.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cusp_discriminant_closed_form(x in 0.01f64..2.0, y in 0.01f64..2.0, b in -50.0f64..-0.01) {
        prop_assume!(x * y < 0.95);
        let params = p(x, y, b);
        let c = cusp_point(&params).unwrap();
        prop_assert!(c.discriminant < 0.0);
        prop_assert!((c.discriminant - c.closed_form).abs() <= 1e-10 * c.closed_form.abs(), "{c:?}");
        let cc = cusp_cubic(&params);
        prop_assert_eq!(real_roots(&[cc[3], cc[2], cc[1], cc[0]]).len(), 1);
    }

    #[test]
    fn height_gradient_stays_in_the_triangle(xi in 0.0f64..8.0, tau in 0.0f64..1.0, b in -40.0f64..-0.1) {
        let params = p(1.0 / 3.0, 0.2, b);
        let lp = classify_point(&params, xi, tau).unwrap();
        prop_assert!(in_triangle(height_gradient(&lp, &params)));
    }
}
