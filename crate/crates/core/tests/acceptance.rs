//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria listed in `KNOWN_RED` fail for documented reasons; the test
//! asserts that every other criterion passes and that the known reds are
//! still red, so a fix or a regression both show up.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use starlike_core::generator::GeneratorSpec;
use starlike_core::growth::{growth_interval, koebe_radius};
use starlike_core::membership::{bohr_suite, growth_suite, subordination_suite, MembershipSample, DEFAULT_SEED};
use starlike_core::output::OutputFormat;
use starlike_core::radii::{
    bohr_limit_root, bohr_radius_booth, bohr_root, convexity_threshold_modkoebe, eta0, eta0_convexity_check,
    eta0_polynomial, modkoebe_convexity_margin, starlikeness_radius,
};
use starlike_core::run::{run, Command, RunConfig};
use starlike_core::{Complex, THREE_MINUS_TWO_SQRT2, TWO_MINUS_SQRT3};

const KNOWN_RED: [usize; 2] = [3, 6];
const GRID: usize = 4096;

struct Outcome {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
}

impl Outcome {
    fn new(id: usize, name: &'static str) -> Self {
        Self { id, name, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn closed_form_families() -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec::Booth { alpha: 0.25 },
        GeneratorSpec::Booth { alpha: 0.8 },
        GeneratorSpec::Cissoid { beta: 0.0 },
        GeneratorSpec::Cissoid { beta: 0.5 },
        GeneratorSpec::ModKoebe { gamma: 0.5, eta: 0.2 },
        GeneratorSpec::ModKoebe { gamma: 1.0, eta: 0.0 },
        GeneratorSpec::Mobius { alpha: 0.5, beta: 1.0 },
        GeneratorSpec::Linear { eta: 1.0 },
    ]
}

fn tenths() -> impl Iterator<Item = f64> {
    (1..=9).map(|k| k as f64 / 10.0)
}

fn growth_sharpness() -> Outcome {
    let mut o = Outcome::new(1, "growth sharpness");
    for spec in closed_form_families() {
        // f₀ from its power series, independent of the closed-form L
        let f0 = MembershipSample::extremal(spec, 512).unwrap();
        for r in tenths() {
            let g = growth_interval(&spec, r).unwrap();
            let lo = f0.eval(Complex::new(-r, 0.0)).norm();
            let hi = f0.eval(Complex::new(r, 0.0)).norm();
            o.check((lo - g.lower).abs() < 1e-10, || format!("{spec} r={r}: |f0(-r)|={lo} vs lower {}", g.lower));
            o.check((hi - g.upper).abs() < 1e-10, || format!("{spec} r={r}: |f0(r)|={hi} vs upper {}", g.upper));
            for (a, b) in [(g.lower, g.lower_quadrature), (g.upper, g.upper_quadrature)] {
                o.check((a - b).abs() <= 1e-9 * a.abs(), || format!("{spec} r={r}: closed {a} vs quadrature {b}"));
            }
        }
    }
    o
}

fn growth_sandwich() -> Outcome {
    let mut o = Outcome::new(2, "growth sandwich on random members");
    for spec in closed_form_families() {
        let suite = growth_suite(spec, 100, DEFAULT_SEED, &[0.2, 0.5, 0.8], 256, 128).unwrap();
        for s in &suite.samples {
            for v in &s.report.violations {
                o.check(false, || format!("{spec} sample {}: |f|={} at r={} theta={}", s.index, v.value, v.r, v.theta));
            }
            for rs in &s.report.radii {
                o.check(rs.max_allowance <= 1e-4, || {
                    format!("{spec} sample {}: order 64/128 disagree by {} at r={}", s.index, rs.max_allowance, rs.r)
                });
            }
        }
    }
    o
}

fn koebe_radii() -> Outcome {
    let mut o = Outcome::new(3, "koebe radii");
    let mut expect = |spec: GeneratorSpec, value: f64, tol: f64| {
        let k = koebe_radius(&spec).unwrap();
        o.check((k.value - value).abs() <= tol, || format!("{spec}: {} vs {value}", k.value));
        o.check((k.limit - value).abs() <= 1e-8, || format!("{spec}: r->1 limit {} vs {value}", k.limit));
    };
    expect(GeneratorSpec::Booth { alpha: 0.25 }, 1.0 / 3.0, 1e-12);
    expect(GeneratorSpec::Cissoid { beta: 0.0 }, 0.5, 1e-12);
    for eta in [0.0, 0.1, 0.2] {
        let gamma: f64 = (1.0 - eta) * (1.0 - eta);
        expect(GeneratorSpec::ModKoebe { gamma, eta }, (-1f64).exp(), 1e-12);
    }
    o
}

fn bohr_radius() -> Outcome {
    let mut o = Outcome::new(4, "bohr radius");
    for alpha in [0.01, 0.05, 0.1, THREE_MINUS_TWO_SQRT2] {
        let b = bohr_radius_booth(alpha).unwrap();
        let r = b.result.value;
        o.check(b.result.residual.abs() < 1e-12, || format!("alpha={alpha}: residual {}", b.result.residual));
        o.check(r > 0.0 && r < 1.0 / 3.0, || format!("alpha={alpha}: r={r} outside (0, 1/3)"));
        o.check(b.sign_changes == 1, || format!("alpha={alpha}: {} sign changes", b.sign_changes));
        // independent evaluation of T at the root
        let s: f64 = alpha.sqrt();
        let t = r * ((1.0 + r * s) / (1.0 - r * s)).powf(0.5 / s) - ((1.0 - s) / (1.0 + s)).powf(0.5 / s);
        o.check(t.abs() < 1e-12, || format!("alpha={alpha}: T(r) = {t}"));
    }
    let limit = bohr_limit_root().unwrap().value;
    o.check((limit - 0.278465).abs() < 1e-6, || format!("limit root {limit}"));
    let near = bohr_root(1e-6).unwrap().result.value;
    o.check((near - limit).abs() < 1e-3, || format!("r(1e-6)={near} vs limit {limit}"));
    o
}

fn convexity_threshold() -> Outcome {
    let mut o = Outcome::new(5, "convexity threshold");
    let t = convexity_threshold_modkoebe(1e-12).unwrap();
    o.check((t.value - TWO_MINUS_SQRT3).abs() < 1e-6, || format!("threshold {}", t.value));
    let at = modkoebe_convexity_margin(TWO_MINUS_SQRT3, GRID).unwrap().margin;
    o.check(at >= -1e-10, || format!("margin {at} at 2-sqrt(3)"));
    let past = modkoebe_convexity_margin(TWO_MINUS_SQRT3 + 1e-3, GRID).unwrap().margin;
    o.check(past < 0.0, || format!("margin {past} past 2-sqrt(3)"));
    // independent: 1 + zK''/K' = (1 − 4ηz + η²z²)/(1 − η²z²) for K = z/(1+ηz)²
    let eta = TWO_MINUS_SQRT3;
    let direct = (0..GRID)
        .map(|k| {
            let z = Complex::from_polar(1.0, 2.0 * PI * k as f64 / GRID as f64);
            let one = Complex::new(1.0, 0.0);
            ((one - z * eta * 4.0 + z * z * eta * eta) / (one - z * z * eta * eta)).re
        })
        .fold(f64::INFINITY, f64::min);
    o.check((direct - at).abs() < 1e-8, || format!("direct margin {direct} vs {at}"));
    o
}

fn eta0_consistency() -> Outcome {
    let mut o = Outcome::new(6, "eta0 consistency");
    for gamma in tenths() {
        let e = eta0(gamma).unwrap();
        let p = eta0_polynomial(gamma, e.value);
        o.check(p.abs() < 1e-12, || format!("gamma={gamma}: P(eta0) = {p}"));
        let c = eta0_convexity_check(gamma, GRID).unwrap();
        o.check(c.margin_below >= -1e-8, || {
            format!("gamma={gamma}: margin {} at 0.99 eta0 = {}", c.margin_below, c.eta_below)
        });
        o.check(c.margin_above < 0.0, || format!("gamma={gamma}: margin {} at {}", c.margin_above, c.eta_above));
    }
    o
}

/// Smallest r in (0, 1) where `(1−a) − γr/(1−ηr)²` turns negative, by scan
/// and bisection; 1 when it never does.
fn starlike_oracle(gamma: f64, eta: f64, order: f64) -> f64 {
    let g = |r: f64| (1.0 - order) - gamma * r / ((1.0 - eta * r) * (1.0 - eta * r));
    let n = 10_000;
    let mut lo = 0.0;
    for k in 1..=n {
        let hi = k as f64 / n as f64;
        if g(hi) <= 0.0 {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..100 {
                let m = 0.5 * (a + b);
                if g(m) > 0.0 {
                    a = m;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        lo = hi;
    }
    1.0
}

fn starlikeness() -> Outcome {
    let mut o = Outcome::new(7, "starlikeness radius");
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..50 {
        let gamma = rng.gen_range(0.05..3.0);
        let eta = rng.gen_range(0.0..0.95);
        let order = rng.gen_range(0.0..0.95);
        let s = starlikeness_radius(gamma, eta, order).unwrap();
        let oracle = starlike_oracle(gamma, eta, order);
        let v = s.result.value;
        o.check((v - oracle).abs() < 1e-8, || format!("({gamma}, {eta}, {order}): {v} vs oracle {oracle}"));
    }
    o
}

fn bohr_chain() -> Outcome {
    let mut o = Outcome::new(8, "bohr chain on samples");
    for alpha in [0.05, 0.1, THREE_MINUS_TWO_SQRT2] {
        let suite = bohr_suite(alpha, 25, DEFAULT_SEED, 128).unwrap();
        for s in suite.failures() {
            let b = &s.report;
            o.check(false, || {
                format!(
                    "alpha={alpha} sample {}: slacks {} {} {:?}",
                    s.index, b.slack_subordinate, b.slack_extremal, b.slack_covering
                )
            });
        }
        o.check(suite.samples.iter().all(|s| s.report.slack_covering.is_some()), || {
            format!("alpha={alpha}: covering link not checked")
        });
    }
    o
}

fn subordination() -> Outcome {
    let mut o = Outcome::new(9, "f/z subordination");
    for gamma in [0.5, 0.9] {
        for eta in [0.1, 0.2] {
            let spec = GeneratorSpec::ModKoebe { gamma, eta };
            let suite = subordination_suite(spec, 20, DEFAULT_SEED, 256, 128).unwrap();
            for s in &suite.samples {
                o.check(s.report.exterior.is_empty(), || {
                    format!("{spec} sample {}: {} exterior points", s.index, s.report.exterior.len())
                });
            }
        }
    }
    o
}

fn plot_config(spec: GeneratorSpec, rho: f64) -> RunConfig {
    let mut c = RunConfig::new(Command::Plot { rho, samples: GRID }).with_generator(spec);
    c.output_format = OutputFormat::Svg;
    c
}

fn boundary_curves() -> Outcome {
    let mut o = Outcome::new(10, "boundary curves");
    let dilog = GeneratorSpec::DiLog.boundary_curve(0.999, GRID).unwrap();
    let at_pi = dilog[GRID / 2];
    o.check((at_pi - Complex::new(2f64.ln(), 0.0)).norm() < 1e-2, || format!("log(1-z) at pi: {at_pi}"));
    let secant = GeneratorSpec::Secant { beta: 1.0 }.boundary_curve(1.0, GRID).unwrap();
    let at_zero = secant[0];
    o.check((at_zero - Complex::new(1.0 / 1f64.cos(), 0.0)).norm() < 1e-12, || format!("z/cos z at 0: {at_zero}"));
    for (spec, rho) in [(GeneratorSpec::DiLog, 0.999), (GeneratorSpec::Secant { beta: 1.0 }, 1.0)] {
        let cfg = plot_config(spec, rho);
        let a = run(&cfg).unwrap().render(OutputFormat::Svg).unwrap();
        let b = run(&cfg).unwrap().render(OutputFormat::Svg).unwrap();
        o.check(a == b, || format!("{spec}: svg differs between runs"));
        o.check(a.contains("viewBox=\"0 0 800 800\""), || format!("{spec}: svg viewBox"));
    }
    o
}

fn cissoid_extremes() -> Outcome {
    let mut o = Outcome::new(11, "cissoid extremes");
    for beta in [0.2, 0.5, 0.8] {
        let spec = GeneratorSpec::Cissoid { beta };
        for r in [0.3, 0.6, 0.9] {
            let formula = (-r + (beta - 1.0) * r * r + beta * r * r * r) / ((1.0 + r).powi(2) * (1.0 - beta * r).powi(2));
            let psi = spec.eval(Complex::new(-r, 0.0)).unwrap().re;
            o.check((formula - psi).abs() <= 1e-14 * psi.abs(), || format!("beta={beta} r={r}: {formula} vs psi(-r) {psi}"));
            let closed = spec.real_part_extremes(r).unwrap().min;
            o.check((closed - formula).abs() <= 1e-14 * formula.abs(), || {
                format!("beta={beta} r={r}: reported min {closed} vs {formula}")
            });
            let grid = (0..GRID)
                .map(|k| spec.eval(Complex::from_polar(r, 2.0 * PI * k as f64 / GRID as f64)).unwrap().re)
                .fold(f64::INFINITY, f64::min);
            o.check((grid - formula).abs() < 1e-8, || format!("beta={beta} r={r}: grid min {grid} vs {formula}"));
        }
    }
    o
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        growth_sharpness(),
        growth_sandwich(),
        koebe_radii(),
        bohr_radius(),
        convexity_threshold(),
        eta0_consistency(),
        starlikeness(),
        bohr_chain(),
        subordination(),
        boundary_curves(),
        cissoid_extremes(),
    ];
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let known = KNOWN_RED.contains(&o.id);
        if o.passed() {
            println!("criterion {:2} PASS {}", o.id, o.name);
        } else {
            let note = if known { " (known red)" } else { "" };
            println!("criterion {:2} FAIL {}{note}: {} checks failed", o.id, o.name, o.failures.len());
            for f in o.failures.iter().take(5) {
                println!("    {f}");
            }
        }
        if o.passed() == known {
            unexpected.push(o.id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected status: {unexpected:?}");
}
