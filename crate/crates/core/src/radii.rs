//! Radii and thresholds defined by a root equation.
//!
//! The smallest positive root of the degree-8 polynomial `P_γ(η)` behind
//! [`eta0`] is located by a sign scan with step `h = 1e-4` on `[0, 1)`.
//! A pair of roots hidden inside one cell forces a critical point there,
//! and by Taylor's theorem `|P|` at the cell ends is then at most
//! `max|P''| h² / 8`. With `max|P''| ≤ Σ k(k−1)|c_k|` (under 1100 for
//! `γ ∈ (0, 1)`) that is below `1.4e-6`, so any cell whose ends both fall
//! under this bound is refined by minimising `|P|` before the scan moves on.

use serde::Serialize;

use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};
use crate::generator::{convexity_margin_of, ConvexityMargin, GeneratorSpec, DEFAULT_GRID};
use crate::numerics::golden_min;
use crate::THREE_MINUS_TWO_SQRT2;

pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-12;
pub const DEFAULT_WIDTH_TOL: f64 = 1e-10;
pub const ETA0_SCAN_STEP: f64 = 1e-4;
/// Samples of `T'` used to confirm monotonicity past the Bohr root.
const MONOTONE_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult {
    pub value: f64,
    pub bracket: (f64, f64),
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub residual_tol: f64,
    pub width_tol: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { residual_tol: DEFAULT_RESIDUAL_TOL, width_tol: DEFAULT_WIDTH_TOL, max_iter: 200 }
    }
}

/// Brent's method with `tol` as both the residual and bracket-width target.
pub fn solve_bracketed<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<RadiusResult> {
    solve_bracketed_with(f, a, b, &SolveOptions { residual_tol: tol, width_tol: tol, ..Default::default() })
}

/// Brent's method: inverse quadratic interpolation and secant steps guarded
/// by bisection. Stops once `|f| ≤ residual_tol` and the bracket is no wider
/// than `width_tol`, or on an exact zero.
pub fn solve_bracketed_with<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &SolveOptions) -> Result<RadiusResult> {
    let (mut a, mut b) = (a, b);
    let (mut fa, mut fb) = (f(a), f(b));
    if !fa.is_finite() || !fb.is_finite() {
        return Err(Error::NonFinite("root bracket endpoint"));
    }
    if fa == 0.0 {
        return Ok(RadiusResult { value: a, bracket: (a, a), residual: 0.0, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(RadiusResult { value: b, bracket: (b, b), residual: 0.0, iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { a, b, fa, fb });
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    let mut width = opts.width_tol;
    for iter in 1..=opts.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let xm = 0.5 * (c - b);
        let mut tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * width;
        if fb == 0.0 || (xm.abs() <= tol1 && fb.abs() <= opts.residual_tol) {
            return Ok(RadiusResult { value: b, bracket: (b.min(c), b.max(c)), residual: fb, iterations: iter });
        }
        if xm.abs() <= tol1 {
            // narrow enough but the residual is not yet small: keep shrinking
            width *= 0.01;
            tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * width;
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if !fb.is_finite() {
            return Err(Error::NonFinite("root function"));
        }
    }
    Err(Error::MaxIterations(opts.max_iter))
}

fn booth_exponent(alpha: f64, r: f64) -> f64 {
    let s = alpha.sqrt();
    (r * s).atanh() / s
}

/// `T(r) = r ((1+r√α)/(1−r√α))^{1/(2√α)} − ((1−√α)/(1+√α))^{1/(2√α)}`.
pub fn bohr_function(alpha: f64, r: f64) -> f64 {
    r * booth_exponent(alpha, r).exp() - (-booth_exponent(alpha, 1.0)).exp()
}

/// `T'(r) = (1 + r/(1 − αr²)) ((1+r√α)/(1−r√α))^{1/(2√α)}`.
pub fn bohr_function_derivative(alpha: f64, r: f64) -> f64 {
    (1.0 + r / (1.0 - alpha * r * r)) * booth_exponent(alpha, r).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BohrRadius {
    pub alpha: f64,
    pub result: RadiusResult,
    /// Sign changes of `T` on a `1e-4` grid over `(0, 1)`.
    pub sign_changes: usize,
    /// Whether sampled `T'` is positive on `[r(α), 1/3]`.
    pub increasing: bool,
}

/// Root of `T` in `(0, 1/3)` for any `α ∈ (0, 1)`, without the theorem's
/// range check.
pub fn bohr_root(alpha: f64) -> Result<BohrRadius> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter { name: "alpha", range: "(0,1)" });
    }
    let t = |r: f64| bohr_function(alpha, r);
    let result = solve_bracketed_with(t, 0.0, 1.0 / 3.0, &SolveOptions::default())?;
    let n = (1.0 / ETA0_SCAN_STEP).round() as usize;
    let mut sign_changes = 0;
    let mut prev = t(0.0);
    for k in 1..n {
        let v = t(k as f64 * ETA0_SCAN_STEP);
        if v.signum() != prev.signum() && v != 0.0 {
            sign_changes += 1;
        }
        prev = v;
    }
    let r0 = result.value;
    let third = 1.0 / 3.0;
    let increasing = (0..=MONOTONE_SAMPLES).all(|k| {
        let r = r0 + (third - r0) * k as f64 / MONOTONE_SAMPLES as f64;
        bohr_function_derivative(alpha, r) > 0.0
    });
    Ok(BohrRadius { alpha, result, sign_changes, increasing })
}

/// Bohr radius of the Booth lemniscate class, `α ∈ (0, 3 − 2√2]`.
pub fn bohr_radius_booth(alpha: f64) -> Result<BohrRadius> {
    if !(alpha > 0.0 && alpha <= THREE_MINUS_TWO_SQRT2) {
        return Err(Error::Hypothesis("bohr radius needs alpha in (0, 3-2sqrt(2)]".into()));
    }
    bohr_root(alpha)
}

/// Root of the `α → 0` limit `r e^r = e^{-1}`.
pub fn bohr_limit_root() -> Result<RadiusResult> {
    solve_bracketed_with(|r| r * r.exp() - (-1f64).exp(), 0.0, 1.0, &SolveOptions::default())
}

/// `P_γ(η) = (1−γ) + (3γ−10)η² + 12η³ + (8−3γ)η⁴ − 16η⁵ + (2+γ)η⁶ + 4η⁷ − η⁸`.
pub fn eta0_polynomial(gamma: f64, eta: f64) -> f64 {
    let c = eta0_coefficients(gamma);
    c.iter().rev().fold(0.0, |acc, k| acc * eta + k)
}

fn eta0_coefficients(gamma: f64) -> [f64; 9] {
    [1.0 - gamma, 0.0, 3.0 * gamma - 10.0, 12.0, 8.0 - 3.0 * gamma, -16.0, 2.0 + gamma, 4.0, -1.0]
}

/// Smallest positive root of `P_γ` in `(0, 1)`, `γ ∈ (0, 1)`.
///
/// `P_γ(1) = 0` for every `γ`, so the scan stops one step short of 1.
pub fn eta0(gamma: f64) -> Result<RadiusResult> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::Hypothesis("eta0 needs gamma in (0,1)".into()));
    }
    let p = |eta: f64| eta0_polynomial(gamma, eta);
    let coeffs = eta0_coefficients(gamma);
    let p2_bound: f64 = coeffs.iter().enumerate().map(|(k, c)| (k * k.saturating_sub(1)) as f64 * c.abs()).sum();
    let h = ETA0_SCAN_STEP;
    let tangency = p2_bound * h * h / 8.0;
    let n = (1.0 / h).round() as usize;
    let mut left = 0.0;
    let mut pl = p(left);
    for k in 1..n {
        let right = k as f64 * h;
        let pr = p(right);
        if pr == 0.0 {
            return Ok(RadiusResult { value: right, bracket: (right, right), residual: 0.0, iterations: 0 });
        }
        if pl.signum() != pr.signum() {
            return solve_bracketed_with(p, left, right, &SolveOptions::default());
        }
        if pl.abs() < tangency && pr.abs() < tangency {
            let sign = pl.signum();
            let (x, v) = golden_min(|e| sign * p(e), left, right, 1e-14);
            if v <= 0.0 {
                return solve_bracketed_with(p, left, x, &SolveOptions::default());
            }
        }
        left = right;
        pl = pr;
    }
    Err(Error::NoSignChange { a: 0.0, b: left, fa: p(0.0), fb: pl })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarlikeRadius {
    pub result: RadiusResult,
    /// True when the root is at least 1, so the whole disk qualifies.
    pub whole_disk: bool,
}

/// Smallest positive root of `(1−a)η²r² − (2(1−a)η + γ)r + (1−a) = 0`,
/// `a` the order, reported as 1 when it does not lie inside the disk.
pub fn starlikeness_radius(gamma: f64, eta: f64, order: f64) -> Result<StarlikeRadius> {
    GeneratorSpec::mod_koebe(gamma, eta)?;
    if !(order.is_finite() && (0.0..1.0).contains(&order)) {
        return Err(Error::InvalidParameter { name: "order", range: "[0,1)" });
    }
    let k = 1.0 - order;
    let (qa, qb, qc) = (k * eta * eta, -(2.0 * k * eta + gamma), k);
    // qb < 0, so q = -(qb - sqrt(disc))/2 > 0 and qc/q is the smaller root
    let disc = gamma * gamma + 4.0 * k * eta * gamma;
    let q = 0.5 * (-qb + disc.sqrt());
    let root = qc / q;
    let residual = (qa * root + qb) * root + qc;
    let value = root.min(1.0);
    Ok(StarlikeRadius {
        result: RadiusResult { value, bracket: (value, value), residual, iterations: 0 },
        whole_disk: root >= 1.0,
    })
}

/// Convexity margin of the normalised modified Koebe function `z/(1+ηz)²`
/// on the unit circle.
pub fn modkoebe_convexity_margin(eta: f64, grid: usize) -> Result<ConvexityMargin> {
    GeneratorSpec::mod_koebe(1.0, eta)?.convexity_margin_on(1.0, grid)
}

/// The `η` at which `z/(1+ηz)²` stops being convex on the unit disk, from
/// a bracketed solve of `η ↦ min_θ Re(1 + zK''/K')` on `[0.1, 0.9]`.
pub fn convexity_threshold_modkoebe(tol: f64) -> Result<RadiusResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidConfig("tolerance must be positive".into()));
    }
    let margin = |eta: f64| modkoebe_convexity_margin(eta, DEFAULT_GRID).map(|m| m.margin).unwrap_or(f64::NAN);
    solve_bracketed(margin, 0.1, 0.9, tol)
}

/// `F(z) = exp(γ z/(1+ηz)²)` and its convexity on the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpModKoebe {
    pub gamma: f64,
    pub eta: f64,
}

impl ExpModKoebe {
    pub fn new(gamma: f64, eta: f64) -> Result<Self> {
        GeneratorSpec::mod_koebe(gamma, eta)?;
        Ok(Self { gamma, eta })
    }

    pub fn eval(&self, z: Complex) -> Complex {
        let d = Complex::new(1.0, 0.0) + z * self.eta;
        (z * self.gamma / (d * d)).exp()
    }

    /// `min_θ Re(1 + zF''/F')` on `|z| = 1`.
    pub fn convexity_margin(&self, grid: usize) -> Result<ConvexityMargin> {
        let psi = GeneratorSpec::ModKoebe { gamma: self.gamma, eta: self.eta };
        convexity_margin_of(
            |z| {
                let e = psi.value(z).exp();
                let (d1, d2) = psi.derivatives(z);
                (d1 * e, (d2 + d1 * d1) * e)
            },
            1.0,
            grid,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eta0Check {
    pub gamma: f64,
    pub eta0: RadiusResult,
    pub eta_below: f64,
    pub margin_below: f64,
    pub eta_above: f64,
    pub margin_above: f64,
}

impl Eta0Check {
    /// Convex just below `η₀` (to `-1e-8`) and not convex just above it.
    pub fn consistent(&self) -> bool {
        self.margin_below >= -1e-8 && self.margin_above < 0.0
    }
}

/// Convexity margins of `exp(γz/(1+ηz)²)` at `0.99 η₀` and `min(0.999, 1.01 η₀)`.
pub fn eta0_convexity_check(gamma: f64, grid: usize) -> Result<Eta0Check> {
    let root = eta0(gamma)?;
    let eta_below = 0.99 * root.value;
    let eta_above = (1.01 * root.value).min(0.999);
    let margin_below = ExpModKoebe::new(gamma, eta_below)?.convexity_margin(grid)?.margin;
    let margin_above = ExpModKoebe::new(gamma, eta_above)?.convexity_margin(grid)?.margin;
    Ok(Eta0Check { gamma, eta0: root, eta_below, margin_below, eta_above, margin_above })
}
