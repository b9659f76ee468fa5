//! Quadrature and one-dimensional extremum search.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Absolute tolerance used by the growth-bound quadratures.
pub const QUAD_ABS_TOL: f64 = 1e-12;
const MAX_INTERVALS: usize = 2000;

fn gk15<F: Fn(f64) -> Complex>(f: &F, a: f64, b: f64) -> (Complex, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).norm())
}

/// Globally adaptive Gauss–Kronrod (7/15) quadrature of a complex-valued
/// integrand on `[a, b]`. Splits the interval with the largest error
/// estimate until the summed estimate drops below `abs_tol`.
pub fn integrate_complex<F: Fn(f64) -> Complex>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<Complex> {
    if a == b {
        return Ok(Complex::new(0.0, 0.0));
    }
    let (v, e) = gk15(&f, a, b);
    let mut pieces = vec![(a, b, v, e)];
    loop {
        let total_err: f64 = pieces.iter().map(|p| p.3).sum();
        let total: Complex = pieces.iter().map(|p| p.2).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::NonFinite("quadrature integrand"));
        }
        if total_err <= abs_tol {
            return Ok(total);
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature { a, b, estimate: total_err });
        }
        let worst = pieces
            .iter()
            .enumerate()
            .fold(0, |best, (i, p)| if p.3 > pieces[best].3 { i } else { best });
        let (lo, hi, _, _) = pieces.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (vl, el) = gk15(&f, lo, mid);
        let (vr, er) = gk15(&f, mid, hi);
        pieces.push((lo, mid, vl, el));
        pieces.push((mid, hi, vr, er));
    }
}

/// Real-valued counterpart of [`integrate_complex`].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    integrate_complex(|x| Complex::new(f(x), 0.0), a, b, abs_tol).map(|c| c.re)
}

/// Golden-section search for a minimum of a unimodal function on `[a, b]`.
/// Returns `(x, f(x))` once the bracket is narrower than `tol`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Location and value of an extremum over the angle `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleExtremum {
    pub theta: f64,
    pub value: f64,
}

/// Minimum of `f(theta)` over a uniform grid of `grid` angles in `[0, 2π)`,
/// then refined by golden section on the two neighbouring cells to `1e-10`
/// in theta. Ties on the grid go to the smaller angle.
pub fn circle_min<F: Fn(f64) -> f64>(f: F, grid: usize) -> CircleExtremum {
    let step = 2.0 * PI / grid as f64;
    let mut best = CircleExtremum { theta: 0.0, value: f(0.0) };
    for k in 1..grid {
        let theta = k as f64 * step;
        let v = f(theta);
        if v < best.value {
            best = CircleExtremum { theta, value: v };
        }
    }
    let (t, v) = golden_min(&f, best.theta - step, best.theta + step, 1e-10);
    if v < best.value {
        CircleExtremum { theta: t.rem_euclid(2.0 * PI), value: v }
    } else {
        best
    }
}

/// Maximum counterpart of [`circle_min`].
pub fn circle_max<F: Fn(f64) -> f64>(f: F, grid: usize) -> CircleExtremum {
    let m = circle_min(|t| -f(t), grid);
    CircleExtremum { theta: m.theta, value: -m.value }
}
