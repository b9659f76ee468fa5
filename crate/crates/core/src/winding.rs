//! Point-in-region tests by winding number of a sampled closed curve.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};

/// Most samples a curve is refined to before a point is declared ambiguous.
const MAX_SAMPLES: usize = 1 << 20;

fn is_left(a: Complex, b: Complex, p: Complex) -> f64 {
    (b.re - a.re) * (p.im - a.im) - (p.re - a.re) * (b.im - a.im)
}

/// Winding number of the closed polygon `curve` (last vertex joins the
/// first) around `w`, by signed upward/downward edge crossings.
pub fn winding_number(curve: &[Complex], w: Complex) -> i64 {
    let n = curve.len();
    let mut wn = 0i64;
    for i in 0..n {
        let a = curve[i];
        let b = curve[(i + 1) % n];
        if a.im <= w.im {
            if b.im > w.im && is_left(a, b, w) > 0.0 {
                wn += 1;
            }
        } else if b.im <= w.im && is_left(a, b, w) < 0.0 {
            wn -= 1;
        }
    }
    wn
}

fn segment_distance(a: Complex, b: Complex, p: Complex) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Smallest ratio of the distance from `w` to an edge over that edge's local
/// chord-error scale. Below 1 the polygon cannot resolve which side of the
/// true curve `w` lies on.
fn resolution_margin(curve: &[Complex], w: Complex) -> (f64, f64) {
    let n = curve.len();
    let mut worst = f64::INFINITY;
    let mut worst_distance = f64::INFINITY;
    for i in 0..n {
        let prev = curve[(i + n - 1) % n];
        let a = curve[i];
        let b = curve[(i + 1) % n];
        let next = curve[(i + 2) % n];
        let d = segment_distance(a, b, w);
        // second differences bound the sagitta of the true arc over this edge
        let bend = (prev - a * 2.0 + b).norm() + (a - b * 2.0 + next).norm();
        let scale = bend + 1e-12 * (1.0 + a.norm());
        let ratio = d / scale;
        if ratio < worst {
            worst = ratio;
            worst_distance = d;
        }
    }
    (worst, worst_distance)
}

/// Samples `curve(theta)` at `grid` equally spaced angles in `[0, 2π)`.
pub fn sample_closed<F: Fn(f64) -> Complex>(curve: &F, grid: usize) -> Vec<Complex> {
    (0..grid)
        .map(|k| curve(2.0 * PI * k as f64 / grid as f64))
        .collect()
}

/// Winding number of the closed curve `curve(theta)`, `theta ∈ [0, 2π)`,
/// around `w`, starting from `grid` samples and doubling the resolution while
/// `w` sits within chord error of the polygon.
pub fn curve_winding<F: Fn(f64) -> Complex>(curve: F, w: Complex, grid: usize) -> Result<i64> {
    let mut n = grid.max(8);
    loop {
        let poly = sample_closed(&curve, n);
        let (margin, distance) = resolution_margin(&poly, w);
        if margin >= 1.0 {
            return Ok(winding_number(&poly, w));
        }
        if n >= MAX_SAMPLES {
            return Err(Error::AmbiguousWinding { distance });
        }
        n *= 2;
    }
}

/// A sampled closed curve reused for many membership queries.
#[derive(Debug, Clone)]
pub struct SampledBoundary<F: Fn(f64) -> Complex> {
    curve: F,
    grid: usize,
    poly: Vec<Complex>,
}

impl<F: Fn(f64) -> Complex> SampledBoundary<F> {
    pub fn new(curve: F, grid: usize) -> Self {
        let poly = sample_closed(&curve, grid);
        Self { curve, grid, poly }
    }

    pub fn polygon(&self) -> &[Complex] {
        &self.poly
    }

    /// True iff the curve winds once (either orientation) around `w`.
    pub fn contains(&self, w: Complex) -> Result<bool> {
        let (margin, _) = resolution_margin(&self.poly, w);
        let wn = if margin >= 1.0 {
            winding_number(&self.poly, w)
        } else {
            curve_winding(&self.curve, w, self.grid * 2)?
        };
        Ok(wn.abs() == 1)
    }
}
