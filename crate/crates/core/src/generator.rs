//! The generator functions ψ with `ψ(0) = 0` that define the classes
//! `F(ψ) = { f : z f'(z)/f(z) − 1 ≺ ψ(z) }`.
//!
//! Each family exposes pointwise values and derivatives, its Taylor series,
//! the extremes of `Re ψ` on circles, the closed form of
//! `L(z) = ∫_0^z ψ(t)/t dt` (so the extremal function is `f₀(z) = z e^{L(z)}`),
//! convexity diagnostics and sampled boundary curves.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{circle_max, circle_min, integrate_complex};
use crate::series::PowerSeries;
use crate::special::dilog;
use crate::winding::SampledBoundary;
use crate::TWO_MINUS_SQRT3;

/// Boundary samples used by grid scans unless a caller asks otherwise.
pub const DEFAULT_GRID: usize = 4096;
/// Radius at which boundary curves of families singular on `|z| = 1` are drawn.
pub const SINGULAR_BOUNDARY_RHO: f64 = 0.999;
/// Below this, `α`/`β` in exponents like `1/(2√α)` switch to their limits.
const DEGENERATE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    /// `z / (1 − α z²)`, Booth lemniscate.
    Booth { alpha: f64 },
    /// `z / ((1 − z)(1 + β z))`, cissoid of Diocles.
    Cissoid { beta: f64 },
    /// `γ z / (1 + η z)²`, scaled modified Koebe function.
    ModKoebe { gamma: f64, eta: f64 },
    /// `β z / (1 + α z)`.
    Mobius { alpha: f64, beta: f64 },
    /// `η z`.
    Linear { eta: f64 },
    /// `log(1 − z)`.
    DiLog,
    /// `−(log((1 + √z)/(1 − √z)))²`.
    Parabola,
    /// `z / cos(β z)`.
    Secant { beta: f64 },
}

/// How a pair of real-part extremes was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremesMethod {
    /// Proven placement on the real axis.
    ClosedForm,
    /// Grid scan with golden-section refinement; no proof of placement.
    GridScan,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealPartExtremes {
    pub min: f64,
    pub max: f64,
    pub min_theta: f64,
    pub max_theta: f64,
    pub method: ExtremesMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvexityMargin {
    /// `min_θ Re(1 + z h''(z)/h'(z))` on `|z| = rho`.
    pub margin: f64,
    pub theta: f64,
    pub rho: f64,
}

fn check_unit(name: &'static str, v: f64, closed_right: bool) -> Result<()> {
    let ok = v.is_finite() && v >= 0.0 && if closed_right { v <= 1.0 } else { v < 1.0 };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            range: if closed_right { "[0,1]" } else { "[0,1)" },
        })
    }
}

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

impl GeneratorSpec {
    pub fn booth(alpha: f64) -> Result<Self> {
        Self::Booth { alpha }.validated()
    }
    pub fn cissoid(beta: f64) -> Result<Self> {
        Self::Cissoid { beta }.validated()
    }
    pub fn mod_koebe(gamma: f64, eta: f64) -> Result<Self> {
        Self::ModKoebe { gamma, eta }.validated()
    }
    pub fn mobius(alpha: f64, beta: f64) -> Result<Self> {
        Self::Mobius { alpha, beta }.validated()
    }
    pub fn linear(eta: f64) -> Result<Self> {
        Self::Linear { eta }.validated()
    }
    pub fn secant(beta: f64) -> Result<Self> {
        Self::Secant { beta }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Booth { alpha } => check_unit("alpha", alpha, false),
            Self::Cissoid { beta } => check_unit("beta", beta, false),
            Self::ModKoebe { gamma, eta } => {
                check_unit("eta", eta, false)?;
                if !(gamma.is_finite() && gamma > 0.0) {
                    return Err(Error::InvalidParameter { name: "gamma", range: "(0,inf)" });
                }
                Ok(())
            }
            Self::Mobius { alpha, beta } => {
                if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
                    return Err(Error::InvalidParameter { name: "alpha", range: "(0,1)" });
                }
                if !(beta.is_finite() && beta > 0.0) {
                    return Err(Error::InvalidParameter { name: "beta", range: "(0,inf)" });
                }
                Ok(())
            }
            Self::Linear { eta } => {
                if eta.is_finite() && eta > 0.0 {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter { name: "eta", range: "(0,inf)" })
                }
            }
            Self::DiLog | Self::Parabola => Ok(()),
            Self::Secant { beta } => check_unit("beta", beta, true),
        }
    }

    /// The same family with its main parameter set to `x`.
    pub fn with_primary(&self, x: f64) -> Result<Self> {
        let g = match *self {
            Self::Booth { .. } => Self::Booth { alpha: x },
            Self::Cissoid { .. } => Self::Cissoid { beta: x },
            Self::ModKoebe { gamma, .. } => Self::ModKoebe { gamma, eta: x },
            Self::Mobius { beta, .. } => Self::Mobius { alpha: x, beta },
            Self::Linear { .. } => Self::Linear { eta: x },
            Self::Secant { .. } => Self::Secant { beta: x },
            Self::DiLog | Self::Parabola => {
                return Err(Error::InvalidConfig(format!("{} has no parameter to vary", self.family_name())))
            }
        };
        g.validated()
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Self::Booth { .. } => "booth",
            Self::Cissoid { .. } => "cissoid",
            Self::ModKoebe { .. } => "modkoebe",
            Self::Mobius { .. } => "mobius",
            Self::Linear { .. } => "linear",
            Self::DiLog => "dilog",
            Self::Parabola => "parabola",
            Self::Secant { .. } => "secant",
        }
    }

    /// True when ψ extends analytically across `|z| = 1`.
    pub fn regular_on_unit_circle(&self) -> bool {
        !matches!(self, Self::Cissoid { .. } | Self::DiLog | Self::Parabola)
    }

    /// True when `min/max Re ψ` on `|z| = r` are proven to be `ψ(−r)`, `ψ(r)`.
    pub fn has_proven_extremes(&self) -> bool {
        match *self {
            Self::Booth { .. } | Self::Cissoid { .. } | Self::Mobius { .. } | Self::Linear { .. } => true,
            Self::ModKoebe { eta, .. } => eta <= TWO_MINUS_SQRT3,
            Self::DiLog | Self::Parabola | Self::Secant { .. } => false,
        }
    }

    /// ψ(z) without range checks.
    pub(crate) fn value(&self, z: Complex) -> Complex {
        let one = c(1.0);
        match *self {
            Self::Booth { alpha } => z / (one - z * z * alpha),
            Self::Cissoid { beta } => z / ((one - z) * (one + z * beta)),
            Self::ModKoebe { gamma, eta } => {
                let d = one + z * eta;
                z * gamma / (d * d)
            }
            Self::Mobius { alpha, beta } => z * beta / (one + z * alpha),
            Self::Linear { eta } => z * eta,
            Self::DiLog => (one - z).ln(),
            Self::Parabola => {
                if z.norm() < 1e-2 {
                    parabola_series_eval(z, 12)
                } else {
                    let s = z.sqrt();
                    let l = ((one + s) / (one - s)).ln();
                    -(l * l)
                }
            }
            Self::Secant { beta } => z / (z * beta).cos(),
        }
    }

    /// ψ(z) for `|z| < 1`.
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        self.validate()?;
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite("generator argument"));
        }
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        self.finite(self.value(z))
    }

    /// ψ(z) for `|z| <= 1`, available for families regular on the circle.
    pub fn eval_closed_disk(&self, z: Complex) -> Result<Complex> {
        self.validate()?;
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite("generator argument"));
        }
        let m = z.norm();
        if m > 1.0 + 1e-15 {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        if m >= 1.0 && !self.regular_on_unit_circle() {
            return Err(Error::Pole(self.family_name()));
        }
        self.finite(self.value(z))
    }

    fn finite(&self, v: Complex) -> Result<Complex> {
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::Pole(self.family_name()))
        }
    }

    /// `(ψ'(z), ψ''(z))` without range checks.
    pub(crate) fn derivatives(&self, z: Complex) -> (Complex, Complex) {
        let one = c(1.0);
        match *self {
            Self::Booth { alpha } => {
                let d = one - z * z * alpha;
                let d1 = (one + z * z * alpha) / (d * d);
                let d2 = z * (c(3.0) + z * z * alpha) * (2.0 * alpha) / (d * d * d);
                (d1, d2)
            }
            Self::Cissoid { beta } => {
                let a = one - z;
                let b = one + z * beta;
                let k = 1.0 / (1.0 + beta);
                let d1 = (one / (a * a) + beta / (b * b)) * k;
                let d2 = (c(2.0) / (a * a * a) - c(2.0 * beta * beta) / (b * b * b)) * k;
                (d1, d2)
            }
            Self::ModKoebe { gamma, eta } => {
                let d = one + z * eta;
                let d1 = (one - z * eta) * gamma / (d * d * d);
                let d2 = (z * eta - 2.0) * (2.0 * gamma * eta) / (d * d * d * d);
                (d1, d2)
            }
            Self::Mobius { alpha, beta } => {
                let d = one + z * alpha;
                (c(beta) / (d * d), c(-2.0 * alpha * beta) / (d * d * d))
            }
            Self::Linear { eta } => (c(eta), c(0.0)),
            Self::DiLog => {
                let d = one - z;
                (-one / d, -one / (d * d))
            }
            Self::Parabola => {
                if z.norm() < 0.25 {
                    let s = parabola_series(64);
                    let d1 = s.derivative();
                    let d2 = d1.derivative();
                    (d1.eval(z), d2.eval(z))
                } else {
                    let s = z.sqrt();
                    let a = s.atanh();
                    let w = one - z;
                    let g = a / s;
                    let dg = (s - a * w) / (s * s * s * w * 2.0);
                    let d1 = -g * 4.0 / w;
                    let d2 = -(dg / w + g / (w * w)) * 4.0;
                    (d1, d2)
                }
            }
            Self::Secant { beta } => {
                let x = z * beta;
                let sec = one / x.cos();
                let tan = x.tan();
                let d1 = sec + x * sec * tan;
                let d2 = sec * tan * (2.0 * beta) + x * sec * (tan * tan + sec * sec) * beta;
                (d1, d2)
            }
        }
    }

    /// ψ'(0), the value of ψ(t)/t at `t = 0`.
    pub fn derivative_at_zero(&self) -> f64 {
        match *self {
            Self::Booth { .. } | Self::Cissoid { .. } | Self::Secant { .. } => 1.0,
            Self::ModKoebe { gamma, .. } => gamma,
            Self::Mobius { beta, .. } => beta,
            Self::Linear { eta } => eta,
            Self::DiLog => -1.0,
            Self::Parabola => -4.0,
        }
    }

    /// `ψ(t)/t` on the real axis with the removable singularity filled in.
    pub fn quotient_real(&self, t: f64) -> f64 {
        if t == 0.0 {
            self.derivative_at_zero()
        } else {
            self.value(c(t)).re / t
        }
    }

    /// Taylor coefficients of ψ about 0.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.validate()?;
        let n = order;
        let real = |f: &dyn Fn(usize) -> f64| PowerSeries::from_fn(n, |k| c(f(k)));
        match *self {
            Self::Booth { alpha } => real(&|k| {
                if k % 2 == 1 {
                    alpha.powi((k / 2) as i32)
                } else {
                    0.0
                }
            }),
            Self::Cissoid { beta } => real(&|k| {
                if k == 0 {
                    0.0
                } else {
                    (1.0 - (-beta).powi(k as i32)) / (1.0 + beta)
                }
            }),
            Self::ModKoebe { gamma, eta } => real(&|k| {
                if k == 0 {
                    0.0
                } else {
                    gamma * k as f64 * (-eta).powi(k as i32 - 1)
                }
            }),
            Self::Mobius { alpha, beta } => real(&|k| {
                if k == 0 {
                    0.0
                } else {
                    beta * (-alpha).powi(k as i32 - 1)
                }
            }),
            Self::Linear { eta } => real(&|k| if k == 1 { eta } else { 0.0 }),
            Self::DiLog => real(&|k| if k == 0 { 0.0 } else { -1.0 / k as f64 }),
            Self::Parabola => Ok(parabola_series(n)),
            Self::Secant { beta } => {
                // z · 1/cos(βz)
                let mut fact = 1.0;
                let cos = PowerSeries::from_fn(n, |k| {
                    if k > 0 {
                        fact *= k as f64;
                    }
                    if k % 2 == 0 {
                        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                        c(sign * beta.powi(k as i32) / fact)
                    } else {
                        c(0.0)
                    }
                })?;
                Ok(cos.recip()?.shift_up())
            }
        }
    }

    /// `min` and `max` of `Re ψ` on `|z| = r`, closed form where proven and a
    /// [`DEFAULT_GRID`]-point scan otherwise.
    pub fn real_part_extremes(&self, r: f64) -> Result<RealPartExtremes> {
        self.real_part_extremes_with_grid(r, DEFAULT_GRID)
    }

    pub fn real_part_extremes_with_grid(&self, r: f64, grid: usize) -> Result<RealPartExtremes> {
        self.validate()?;
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::RadiusOutOfRange { value: r, range: "(0, 1)" });
        }
        if self.has_proven_extremes() {
            let (min, max) = match *self {
                Self::Booth { alpha } => {
                    let m = r / (1.0 - alpha * r * r);
                    (-m, m)
                }
                Self::Linear { eta } => (-eta * r, eta * r),
                _ => (self.value(c(-r)).re, self.value(c(r)).re),
            };
            return Ok(RealPartExtremes {
                min,
                max,
                min_theta: PI,
                max_theta: 0.0,
                method: ExtremesMethod::ClosedForm,
            });
        }
        Ok(self.scan_real_part(r, grid))
    }

    /// Grid-scan extremes of `Re ψ` on `|z| = r`, regardless of family.
    pub fn scan_real_part(&self, r: f64, grid: usize) -> RealPartExtremes {
        let re = |t: f64| self.value(Complex::from_polar(r, t)).re;
        let lo = circle_min(re, grid);
        let hi = circle_max(re, grid);
        RealPartExtremes {
            min: lo.value,
            max: hi.value,
            min_theta: lo.theta,
            max_theta: hi.theta,
            method: ExtremesMethod::GridScan,
        }
    }

    /// Closed form of `L(z) = ∫_0^z ψ(t)/t dt`, when the family has one.
    /// Valid on the closed disk wherever ψ is finite.
    pub fn log_extremal_quotient(&self, z: Complex) -> Option<Complex> {
        let one = c(1.0);
        Some(match *self {
            Self::Booth { alpha } => {
                if alpha < DEGENERATE {
                    z + z * z * z * (alpha / 3.0)
                } else {
                    let s = alpha.sqrt();
                    (z * s).atanh() / s
                }
            }
            Self::Cissoid { beta } => ((one + z * beta).ln() - (one - z).ln()) / (1.0 + beta),
            Self::ModKoebe { gamma, eta } => z * gamma / (one + z * eta),
            Self::Mobius { alpha, beta } => (one + z * alpha).ln() * (beta / alpha),
            Self::Linear { eta } => z * eta,
            Self::DiLog => -dilog(z),
            Self::Parabola => return None,
            Self::Secant { beta } => {
                if beta < DEGENERATE {
                    z
                } else {
                    let w = z * beta;
                    ((one + w.sin()).ln() - w.cos().ln()) / beta
                }
            }
        })
    }

    /// `L(z)` by the closed form, or by quadrature along the ray `[0, z]`.
    pub fn log_extremal_quotient_any(&self, z: Complex) -> Result<Complex> {
        if let Some(v) = self.log_extremal_quotient(z) {
            return Ok(v);
        }
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        let d0 = self.derivative_at_zero();
        integrate_complex(
            |s| if s == 0.0 { z * d0 } else { self.value(z * s) / s },
            0.0,
            1.0,
            1e-14,
        )
    }

    /// `f₀(z) = z exp(∫_0^z ψ(t)/t dt)`, the extremal function of the class.
    pub fn extremal_value(&self, z: Complex) -> Result<Complex> {
        self.validate()?;
        Ok(z * self.log_extremal_quotient_any(z)?.exp())
    }

    /// Convexity margin on the default circle: `|z| = 1` for the modified
    /// Koebe family, `|z| = 0.99` otherwise.
    pub fn convexity_margin(&self, grid: usize) -> Result<ConvexityMargin> {
        let rho = match self {
            Self::ModKoebe { .. } => 1.0,
            _ => 0.99,
        };
        self.convexity_margin_on(rho, grid)
    }

    pub fn convexity_margin_on(&self, rho: f64, grid: usize) -> Result<ConvexityMargin> {
        self.validate()?;
        if !(rho > 0.0 && rho <= 1.0) || (rho >= 1.0 && !self.regular_on_unit_circle()) {
            return Err(Error::RadiusOutOfRange { value: rho, range: "(0, 1], (0, 1) if singular on the circle" });
        }
        convexity_margin_of(|z| self.derivatives(z), rho, grid)
    }

    /// `[ψ(ρ e^{2πik/n})]` for `k = 0..n`.
    pub fn boundary_curve(&self, rho: f64, samples: usize) -> Result<Vec<Complex>> {
        self.validate()?;
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::RadiusOutOfRange { value: rho, range: "(0, 1]" });
        }
        if samples == 0 {
            return Err(Error::InvalidConfig("boundary curve needs at least one sample".into()));
        }
        (0..samples)
            .map(|k| {
                let z = Complex::from_polar(rho, 2.0 * PI * k as f64 / samples as f64);
                self.eval_closed_disk(z)
            })
            .collect()
    }

    /// Radius at which the boundary of `ψ(Δ)` is sampled.
    pub fn boundary_rho(&self) -> f64 {
        if self.regular_on_unit_circle() {
            1.0
        } else {
            SINGULAR_BOUNDARY_RHO
        }
    }

    /// Whether `w ∈ 1 + ψ(Δ)`, by the winding number of the sampled boundary
    /// `1 + ψ(ρ e^{iθ})` around `w`.
    pub fn boundary_winding_contains(&self, w: Complex, grid: usize) -> Result<bool> {
        self.validate()?;
        self.boundary(grid).contains(w)
    }

    /// The sampled curve `1 + ψ(ρ e^{iθ})`, for repeated membership queries.
    pub fn boundary(&self, grid: usize) -> SampledBoundary<impl Fn(f64) -> Complex + '_> {
        let rho = self.boundary_rho();
        SampledBoundary::new(move |t| c(1.0) + self.value(Complex::from_polar(rho, t)), grid)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Booth { alpha } => write!(f, "booth(alpha={alpha})"),
            Self::Cissoid { beta } => write!(f, "cissoid(beta={beta})"),
            Self::ModKoebe { gamma, eta } => write!(f, "modkoebe(gamma={gamma}, eta={eta})"),
            Self::Mobius { alpha, beta } => write!(f, "mobius(alpha={alpha}, beta={beta})"),
            Self::Linear { eta } => write!(f, "linear(eta={eta})"),
            Self::DiLog => write!(f, "dilog"),
            Self::Parabola => write!(f, "parabola"),
            Self::Secant { beta } => write!(f, "secant(beta={beta})"),
        }
    }
}

/// `min_θ Re(1 + z h''(z)/h'(z))` on `|z| = rho` given `z ↦ (h'(z), h''(z))`.
pub fn convexity_margin_of<F>(derivs: F, rho: f64, grid: usize) -> Result<ConvexityMargin>
where
    F: Fn(Complex) -> (Complex, Complex),
{
    let step = 2.0 * PI / grid as f64;
    for k in 0..grid {
        let theta = k as f64 * step;
        let (d1, _) = derivs(Complex::from_polar(rho, theta));
        if d1.norm() < 1e-14 {
            return Err(Error::DegenerateDerivative(theta));
        }
    }
    let re = |t: f64| {
        let z = Complex::from_polar(rho, t);
        let (d1, d2) = derivs(z);
        let v = (c(1.0) + z * d2 / d1).re;
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };
    let m = circle_min(re, grid);
    Ok(ConvexityMargin { margin: m.value, theta: m.theta, rho })
}

/// Coefficients of `−(log((1+√z)/(1−√z)))² = −4 artanh(√z)²`, which is a
/// power series in `z`: the coefficient of `z^m` is
/// `−4 Σ_{j=0}^{m−1} 1/((2j+1)(2(m−1−j)+1))`.
fn parabola_series(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |m| {
        if m == 0 {
            return c(0.0);
        }
        let s: f64 = (0..m)
            .map(|j| 1.0 / (((2 * j + 1) * (2 * (m - 1 - j) + 1)) as f64))
            .sum();
        c(-4.0 * s)
    })
    .expect("positive order")
}

fn parabola_series_eval(z: Complex, terms: usize) -> Complex {
    parabola_series(terms).eval(z)
}
