use starlike_core::generator::GeneratorSpec;
use starlike_core::growth::{auxiliary_bounds, growth_interval, koebe_radius};
use starlike_core::membership::{verify_growth, MembershipSample};
use starlike_core::radii::modkoebe_convexity_margin;
use starlike_core::Complex;

fn near(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn booth_real_part_extremes() {
    let e = GeneratorSpec::Booth { alpha: 0.5 }.real_part_extremes(0.6).unwrap();
    assert!(near(e.min, -0.6 / 0.82, 1e-15));
    assert!(near(e.max, 0.6 / 0.82, 1e-15));
}

#[test]
fn dilog_integral_has_inverse_square_coefficients() {
    let l = GeneratorSpec::DiLog.series(32).unwrap().integrate_quotient().unwrap();
    for n in 1..32 {
        assert!(near(l.coeff(n).re, -1.0 / (n * n) as f64, 1e-15), "n = {n}");
    }
}

#[test]
fn linear_extremal_is_z_exp_z() {
    let f0 = MembershipSample::extremal(GeneratorSpec::Linear { eta: 1.0 }, 24).unwrap();
    let mut factorial = 1.0;
    for n in 0..23 {
        if n > 0 {
            factorial *= n as f64;
        }
        assert!(near(f0.f.coeff(n + 1).re, 1.0 / factorial, 1e-15), "n = {n}");
    }
}

#[test]
fn linear_growth_and_derivative() {
    let spec = GeneratorSpec::Linear { eta: 1.0 };
    let g = growth_interval(&spec, 0.5).unwrap();
    assert!(near(g.lower, 0.5 * (-0.5f64).exp(), 1e-14));
    assert!(near(g.upper, 0.5 * 0.5f64.exp(), 1e-14));
    assert!(near(g.lower, 0.303265, 1e-6) && near(g.upper, 0.824361, 1e-6));
    let b = auxiliary_bounds(&spec, 0.5).unwrap();
    assert!(near(b.deriv_bound, 1.5 * 0.5f64.exp(), 1e-13));
    assert!(near(b.deriv_bound, 2.473081, 1e-6));
}

#[test]
fn modkoebe_convexity_either_side_of_threshold() {
    assert!(modkoebe_convexity_margin(0.2, 4096).unwrap().margin >= 0.0);
    assert!(modkoebe_convexity_margin(0.35, 4096).unwrap().margin < 0.0);
}

#[test]
fn cissoid_covering_radius() {
    for beta in [0.0, 0.3, 0.7] {
        let k = koebe_radius(&GeneratorSpec::Cissoid { beta }).unwrap();
        let expected = ((1.0 - beta) / 2.0f64).powf(1.0 / (1.0 + beta));
        assert!(near(k.value, expected, 1e-14), "beta = {beta}");
    }
}

#[test]
fn extremal_sample_touches_both_bounds() {
    for spec in [GeneratorSpec::Booth { alpha: 0.3 }, GeneratorSpec::Cissoid { beta: 0.4 }] {
        let f0 = MembershipSample::extremal(spec, 128).unwrap();
        let report = verify_growth(&f0, &[0.5], 1024).unwrap();
        let s = &report.radii[0];
        assert!(report.passed());
        assert!(near(s.max_abs, s.upper, 1e-8), "{spec}");
        assert!(near(s.min_abs, s.lower, 1e-8), "{spec}");
    }
}

#[test]
fn series_and_closed_form_agree() {
    for spec in [
        GeneratorSpec::Booth { alpha: 0.6 },
        GeneratorSpec::Cissoid { beta: 0.5 },
        GeneratorSpec::ModKoebe { gamma: 0.7, eta: 0.25 },
        GeneratorSpec::Mobius { alpha: 0.4, beta: 0.5 },
        GeneratorSpec::Linear { eta: 2.0 },
        GeneratorSpec::DiLog,
        GeneratorSpec::Secant { beta: 1.0 },
    ] {
        let f0 = MembershipSample::extremal(spec, 256).unwrap();
        for k in 0..16 {
            let z = Complex::from_polar(0.7, k as f64 * 0.4);
            let closed = spec.extremal_value(z).unwrap();
            assert!((closed - f0.eval(z)).norm() < 1e-10, "{spec} at {z}");
        }
    }
}
