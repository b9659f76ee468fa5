//! Growth envelopes, covering radii and the bounds derived from them.
//!
//! For `f ∈ F(ψ)` and `|z| = r`,
//! `r exp(∫_0^r m(t)/t dt) ≤ |f(z)| ≤ r exp(∫_0^r M(t)/t dt)` where `m(t)`,
//! `M(t)` are the extremes of `Re ψ` on `|z| = t`. For families whose
//! extremes sit at `ψ(−t)` and `ψ(t)` the bounds are attained by `f₀(∓r)`.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::numerics::{circle_max, integrate, QUAD_ABS_TOL};
use crate::radii::eta0;
use crate::TWO_MINUS_SQRT3;

/// Relative agreement required between the closed form and the quadrature.
pub const CROSS_CHECK_REL: f64 = 1e-9;
/// Successive covering-limit values closer than this end the `r → 1` sequence.
pub const KOEBE_LIMIT_TOL: f64 = 1e-10;
/// Circle samples used when the extremes of `Re ψ` must be scanned per radius.
const HEURISTIC_GRID: usize = 1024;
const HEURISTIC_QUAD_TOL: f64 = 1e-10;
const KOEBE_MAX_STEPS: i32 = 52;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthInterval {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    /// Quadrature values; equal to `lower`/`upper` for scanned families.
    pub lower_quadrature: f64,
    pub upper_quadrature: f64,
    /// False when the extremes of `Re ψ` came from a grid scan.
    pub sharp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthBounds {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    pub re_bound: f64,
    pub deriv_bound: f64,
    pub length_bound: f64,
    /// False when the envelope is scanned or `max |ψ|` on `|z| = r` is not `ψ(r)`.
    pub sharp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KoebeRadius {
    pub value: f64,
    /// Last value of the `r_k = 1 − 2^{−k}` sequence.
    pub limit: f64,
    /// Difference of the last two sequence values.
    pub limit_step: f64,
    pub steps: i32,
    pub sharp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArgBound {
    pub r: f64,
    pub value: f64,
    pub theta: f64,
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange { value: r, range: "(0, 1)" })
    }
}

fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

/// `∫_a^b ψ(±t)/t dt` by adaptive quadrature.
fn quad_real_axis(spec: &GeneratorSpec, sign: f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    integrate(|t| sign * spec.quotient_real(sign * t), a, b, tol)
}

/// `∫_a^b ext_{|z|=t} Re ψ(z) / t dt` with the extremum scanned per `t`.
fn quad_scanned(spec: &GeneratorSpec, upper: bool, a: f64, b: f64) -> Result<f64> {
    let d0 = spec.derivative_at_zero().abs();
    integrate(
        |t| {
            if t == 0.0 {
                return if upper { d0 } else { -d0 };
            }
            let e = spec.scan_real_part(t, HEURISTIC_GRID);
            if upper {
                e.max / t
            } else {
                e.min / t
            }
        },
        a,
        b,
        HEURISTIC_QUAD_TOL,
    )
}

/// Sharp growth interval `[min |f|, max |f|]` on `|z| = r` over the class.
pub fn growth_interval(spec: &GeneratorSpec, r: f64) -> Result<GrowthInterval> {
    spec.validate()?;
    check_radius(r)?;
    if !spec.has_proven_extremes() {
        let lower = r * quad_scanned(spec, false, 0.0, r)?.exp();
        let upper = r * quad_scanned(spec, true, 0.0, r)?.exp();
        return Ok(GrowthInterval {
            r,
            lower,
            upper,
            lower_quadrature: lower,
            upper_quadrature: upper,
            sharp: false,
        });
    }
    let lower_quadrature = r * quad_real_axis(spec, -1.0, 0.0, r, QUAD_ABS_TOL)?.exp();
    let upper_quadrature = r * quad_real_axis(spec, 1.0, 0.0, r, QUAD_ABS_TOL)?.exp();
    let closed = |x: f64| {
        spec.log_extremal_quotient(Complex::new(x, 0.0))
            .map(|l| r * l.re.exp())
            .ok_or(Error::NonFinite("closed-form growth bound"))
    };
    let lower = closed(-r)?;
    let upper = closed(r)?;
    for (what, a, b) in [("lower growth bound", lower, lower_quadrature), ("upper growth bound", upper, upper_quadrature)] {
        if !rel_close(a, b, CROSS_CHECK_REL) {
            return Err(Error::CrossCheck { what, left: a, right: b });
        }
    }
    Ok(GrowthInterval { r, lower, upper, lower_quadrature, upper_quadrature, sharp: true })
}

/// Covering radius `−f₀(−1)`, checked against the limit of the lower growth
/// bound along `r_k = 1 − 2^{−k}`.
///
/// For families without proven extremes the value is the limit of the
/// scanned lower envelope and is marked not sharp.
pub fn koebe_radius(spec: &GeneratorSpec) -> Result<KoebeRadius> {
    spec.validate()?;
    let proven = spec.has_proven_extremes();
    let segment = |a: f64, b: f64| -> Result<f64> {
        if proven {
            quad_real_axis(spec, -1.0, a, b, QUAD_ABS_TOL)
        } else {
            quad_scanned(spec, false, a, b)
        }
    };
    let mut r = 0.5;
    let mut log_integral = segment(0.0, r)?;
    let mut prev = r * log_integral.exp();
    let mut step = f64::INFINITY;
    let mut k = 1;
    while k < KOEBE_MAX_STEPS {
        k += 1;
        let next_r = 1.0 - 0.5f64.powi(k);
        log_integral += segment(r, next_r)?;
        r = next_r;
        let v = r * log_integral.exp();
        if !v.is_finite() {
            return Err(Error::DivergentLimit(r));
        }
        step = (v - prev).abs();
        prev = v;
        if step < KOEBE_LIMIT_TOL {
            break;
        }
    }
    if step >= KOEBE_LIMIT_TOL {
        return Err(Error::DivergentLimit(r));
    }
    let value = if proven {
        let l = spec
            .log_extremal_quotient(Complex::new(-1.0, 0.0))
            .ok_or(Error::NonFinite("closed-form covering radius"))?;
        let v = l.re.exp();
        if !v.is_finite() {
            return Err(Error::DivergentLimit(1.0));
        }
        v
    } else {
        prev
    };
    Ok(KoebeRadius { value, limit: prev, limit_step: step, steps: k, sharp: proven })
}

/// Growth, real-part, derivative and arc-length bounds on `|z| = r`.
pub fn auxiliary_bounds(spec: &GeneratorSpec, r: f64) -> Result<GrowthBounds> {
    let g = growth_interval(spec, r)?;
    let m = g.upper / r;
    let psi_r = spec.value(Complex::new(r, 0.0)).re;
    let scan = circle_max(|t| spec.value(Complex::from_polar(r, t)).norm(), crate::generator::DEFAULT_GRID);
    let hypothesis = scan.value <= psi_r * (1.0 + 1e-12) + 1e-15;
    let psi_max = if hypothesis { psi_r } else { scan.value };
    Ok(GrowthBounds {
        r,
        lower: g.lower,
        upper: g.upper,
        re_bound: m,
        deriv_bound: (1.0 + psi_max) * m,
        length_bound: 2.0 * PI * r * (1.0 + psi_max) * m,
        sharp: g.sharp && hypothesis,
    })
}

/// Checks the parameter ranges under which the argument bound is proven.
pub fn arg_bound_hypothesis(spec: &GeneratorSpec) -> Result<()> {
    spec.validate()?;
    match *spec {
        GeneratorSpec::Booth { alpha } if alpha > 0.0 && alpha <= TWO_MINUS_SQRT3 => Ok(()),
        GeneratorSpec::Booth { .. } => {
            Err(Error::Hypothesis("argument bound needs booth alpha in (0, 2-sqrt(3)]".into()))
        }
        GeneratorSpec::ModKoebe { gamma, eta } => {
            if eta == 0.0 {
                if gamma <= PI / 2.0 {
                    return Ok(());
                }
                return Err(Error::Hypothesis("argument bound with eta = 0 needs gamma <= pi/2".into()));
            }
            if !(gamma > 0.0 && gamma < 1.0) {
                return Err(Error::Hypothesis("argument bound with eta > 0 needs gamma in (0,1)".into()));
            }
            let limit = TWO_MINUS_SQRT3.min(eta0(gamma)?.value);
            if eta <= limit {
                Ok(())
            } else {
                Err(Error::Hypothesis(format!(
                    "argument bound needs eta <= min(2-sqrt(3), eta0(gamma)) = {limit}"
                )))
            }
        }
        _ => Err(Error::Hypothesis(format!(
            "argument bound is only proven for booth and modkoebe, not {}",
            spec.family_name()
        ))),
    }
}

/// `max_θ |arg(f₀(re^{iθ})/(re^{iθ}))| = max_θ |Im L(re^{iθ})|` for `r ∈ (0, 1]`.
pub fn arg_bound(spec: &GeneratorSpec, r: f64, grid: usize) -> Result<ArgBound> {
    arg_bound_hypothesis(spec)?;
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::RadiusOutOfRange { value: r, range: "(0, 1]" });
    }
    let l = |t: f64| {
        spec.log_extremal_quotient(Complex::from_polar(r, t))
            .map(|v| v.im.abs())
            .unwrap_or(f64::NAN)
    };
    let m = circle_max(l, grid);
    if !m.value.is_finite() {
        return Err(Error::NonFinite("argument bound"));
    }
    Ok(ArgBound { r, value: m.value, theta: m.theta })
}
